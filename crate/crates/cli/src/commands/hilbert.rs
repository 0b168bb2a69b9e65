use std::fmt::Write as _;
use std::time::Duration;

use exlab_core::hilbert::{
    count_small_sigma_sets, find_hilbert_cube, max_cube_dimension, random_subset_experiment, sigma_lower_bound,
    subset_sums, Experiment, SearchBudget,
};
use exlab_core::IntSet;

use super::{Failure, Outcome};
use crate::args::{Global, HilbertCmd};
use crate::report::Run;

fn budget(g: &Global) -> SearchBudget {
    let b = SearchBudget::default();
    match g.budget_ms {
        Some(ms) => b.with_time(Duration::from_millis(ms)),
        None => b,
    }
}

fn as_set(values: &[u64]) -> exlab_core::Result<IntSet> {
    let max = values.iter().copied().max().unwrap_or(0);
    IntSet::from_elements(max, values.iter().copied())
}

fn list(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(cmd: &HilbertCmd, g: &Global) -> Outcome {
    match cmd {
        HilbertCmd::Sigma { set } => {
            let p = subset_sums(set)?;
            let d = p.dimension();
            let mut run = Run::new("hilbert sigma");
            run.output = format!("{}\n", p.sums.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
            run.report
                .param("set", list(set))
                .result("size", p.size())
                .result("lower", sigma_lower_bound(d).to_string())
                .result("upper", (1u128 << d).to_string())
                .verdict(
                    "sigma_bounds",
                    sigma_lower_bound(d) <= p.size() as u128 && p.size() as u128 <= 1 << d,
                );
            Ok(run)
        }
        HilbertCmd::Cube { set, d, dmax } => {
            let a = as_set(set)?;
            let mut run = Run::new("hilbert cube");
            run.report.param("set", list(set));
            let witness = match d {
                Some(d) => {
                    run.report.param("d", *d);
                    let c = find_hilbert_cube(&a, *d, budget(g))?;
                    run.report.result("found", c.is_some());
                    c
                }
                None => {
                    let dmax = dmax.unwrap_or(10);
                    let r = max_cube_dimension(&a, dmax, budget(g));
                    run.report
                        .param("dmax", dmax)
                        .result("dimension", r.dimension)
                        .result("certain", r.certain);
                    r.witness
                }
            };
            run.output = match &witness {
                Some(c) => format!("{c}\n"),
                None => "absent\n".into(),
            };
            if let Some(c) = &witness {
                run.report.verdict("cube", c.lies_in(&a));
            }
            Ok(run)
        }
        HilbertCmd::Count { n, d, bound } => {
            let count = count_small_sigma_sets(*n, *d, *bound)?;
            let mut run = Run::new("hilbert count");
            run.output = format!("{count}\n");
            run.report.param("n", *n).param("d", *d).param("bound", *bound).result("count", count);
            Ok(run)
        }
        HilbertCmd::Experiment {
            n,
            delta,
            trials,
            dmax,
            c,
        } => {
            if g.json && g.seed.is_none() {
                return Err(Failure::Usage("--json experiments need an explicit --seed".into()));
            }
            let seed = g.seed.unwrap_or(0);
            let e = Experiment {
                n: *n,
                delta: *delta,
                trials: *trials,
                seed,
                d_max: *dmax,
                budget: budget(g),
                c: *c,
            };
            let r = random_subset_experiment(&e)?;
            let mut run = Run::new("hilbert experiment");
            run.output = "trial\tdim\n".into();
            for (i, t) in r.dims.iter().enumerate() {
                let _ = writeln!(run.output, "{i}\t{}", t.dimension);
            }
            run.report.seed = Some(seed);
            let uncertain = r.dims.iter().filter(|t| !t.certain).count();
            run.report
                .param("n", *n)
                .param("delta", *delta)
                .param("trials", *trials)
                .param("dmax", *dmax)
                .param("c", *c)
                .result("min", r.min)
                .result("median", r.median)
                .result("max", r.max)
                .result("reference", r.reference)
                .result("uncertain", uncertain)
                .result("note", "colouring bound h(d,r) >= r^(c d^2) shown as a formula only");
            Ok(run)
        }
    }
}
