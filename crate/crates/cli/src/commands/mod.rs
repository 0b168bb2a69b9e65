mod games;
mod hilbert;
mod partition;
mod sets;

use std::path::Path;

use exlab_core::{Error, Graph, ProjectivePlane, Result, UniformHypergraph};

use crate::args::{Command, Global};
use crate::report::Run;

/// A command-level failure that is not an [`Error`] from the core, such as a
/// missing `--seed` in report mode.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub type Outcome = std::result::Result<Run, Failure>;

pub fn dispatch(cmd: &Command, g: &Global) -> Outcome {
    match cmd {
        Command::Plane { q } => plane(*q),
        Command::Partition(p) => partition::run(p),
        Command::Starforest { graph, d, verbose } => sets::starforest(graph, *d, *verbose),
        Command::Ramsey {
            target,
            colors,
            cap,
            nodes,
        } => games::ramsey(target, *colors, *cap, *nodes),
        Command::Saturation { target, cap, nodes } => games::saturation(target, *cap, *nodes),
        Command::Online { .. } => games::online(cmd, g),
        Command::Erdosrogers {
            hypergraph,
            s,
            alpha,
            target,
            maxlen,
        } => sets::erdos_rogers(hypergraph, *s, alpha.as_deref(), *target, *maxlen),
        Command::Hilbert(h) => hilbert::run(h, g),
        Command::Verify {
            graph,
            partition,
            target,
            transcript,
        } => match (graph, partition, target, transcript) {
            (Some(g), Some(p), _, _) => partition::verify(g, p),
            (_, _, Some(t), Some(tr)) => games::verify(t, tr),
            _ => Err(Failure::Usage(
                "verify needs --graph with --partition, or --target with --transcript".into(),
            )),
        },
    }
}

fn plane(q: usize) -> Outcome {
    let plane = ProjectivePlane::build(q)?;
    let mut run = Run::new("plane");
    run.output = plane.dump();
    run.report
        .param("q", q)
        .result("points", plane.point_count())
        .result("lines", plane.line_count())
        .verdict("plane", exlab_core::plane::verify_plane(&plane));
    Ok(run)
}

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub(crate) fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

pub(crate) fn read_hypergraph(path: &Path) -> Result<UniformHypergraph> {
    UniformHypergraph::parse(&read(path)?)
}

pub(crate) fn one_based(ids: &[usize]) -> String {
    let v: Vec<String> = ids.iter().map(|v| (v + 1).to_string()).collect();
    v.join(" ")
}
