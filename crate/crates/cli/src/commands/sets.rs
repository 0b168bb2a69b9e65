use std::fmt::Write as _;
use std::path::Path;

use exlab_core::erdos_rogers::{default_alpha, default_length, find_ks3_free_subset, ExitPath};
use exlab_core::star_forest::{large_star_forest, star_target};
use exlab_core::{contains_clique, is_induced_star_forest, Error};
use num_rational::Rational64;

use super::{one_based, read_graph, read_hypergraph, Outcome};
use crate::report::Run;

pub fn starforest(graph: &Path, d: Option<usize>, verbose: bool) -> Outcome {
    let g = read_graph(graph)?;
    let n = g.vertex_count();
    let d = d.unwrap_or_else(|| (2 * g.edge_count()).div_ceil(n.max(1)).max(1));
    let (set, trace) = large_star_forest(&g, d)?;
    let target = star_target(n, &trace.delta);
    let mut run = Run::new("starforest");
    run.output = format!("{}\n", one_based(&set));
    if verbose {
        let _ = writeln!(run.output, "round\tdelta_i\td_i\ty_i\te_i");
        for (i, r) in trace.rounds.iter().enumerate() {
            let _ = writeln!(
                run.output,
                "{}\t{}\t{}\t{}\t{}",
                i + 1,
                r.delta,
                r.degree_threshold,
                r.y.len(),
                r.edges
            );
        }
    }
    run.report
        .param("graph", graph.display().to_string())
        .param("d", d)
        .result("size", set.len())
        .result("target", target)
        .result("round", trace.chosen_round.map_or(0, |i| i))
        .result("centres", trace.centers.len())
        .verdict("star_forest", is_induced_star_forest(&g, &set)?)
        .verdict("size", set.len() >= target)
        .verdict("trace", trace.check(n, d).is_ok());
    Ok(run)
}

pub fn erdos_rogers(
    path: &Path,
    s: usize,
    alpha: Option<&str>,
    target: Option<usize>,
    maxlen: Option<usize>,
) -> Outcome {
    let h = read_hypergraph(path)?;
    let n = h.vertex_count();
    let p = target.unwrap_or(n);
    let m = maxlen.unwrap_or_else(|| default_length(p).min(n));
    let alpha = match alpha {
        Some(a) => a
            .parse::<Rational64>()
            .map_err(|_| Error::Input(format!("alpha {a:?} is not a rational like 1/4")))?,
        None => default_alpha(p, m),
    };
    let er = find_ks3_free_subset(&h, s, p, alpha, m)?;
    let mut run = Run::new("erdosrogers");
    run.output = format!("{}\n", one_based(&er.set));
    let exit = match er.exit {
        ExitPath::Neighbourhood { centre } => format!("neighbourhood of v{}", centre + 1),
        ExitPath::IndependentSet => "independent set".to_string(),
        ExitPath::Degenerate { at } => format!("degenerate at length {at}"),
    };
    let sub = h.induced(&er.set)?;
    let free = er.set.len() < s || contains_clique(&sub, s)?.is_none();
    run.report
        .param("hypergraph", path.display().to_string())
        .param("s", s)
        .param("alpha", alpha.to_string())
        .param("target", p)
        .param("maxlen", m)
        .result("size", er.set.len())
        .result("sequence", er.state.sequence.len())
        .result("exit", exit)
        .result("aux_checks", er.aux_checks)
        .result("input_checked", er.input_checked)
        .verdict("clique_free", free)
        .verdict("state", er.state.check(&h).is_ok());
    Ok(run)
}
