use std::io::BufReader;
use std::path::Path;

use exlab_core::graph::UniformHypergraph;
use exlab_core::online::{
    check_transcript, run_game, BuilderPlan, FixedPainter, GameTranscript, GreedyAvoidPainter, InteractivePainter,
    Outcome as GameOutcome, Painter, RandomPainter, RoundRobinPainter, Spacing,
};
use exlab_core::ramsey::{
    graph_as_hypergraph, is_ramsey_saturated, ramsey_bounds, ramsey_number, RamseyQuery, RamseyValue, Saturation,
    DEFAULT_NODE_BUDGET,
};
use exlab_core::Graph;

use super::{read, read_graph, Failure, Outcome};
use crate::args::{Command, Global, PainterKind, SpacingArg};
use crate::report::Run;

/// A target file holds either a graph (`p` header) or a uniform
/// hypergraph (`h` header).
fn read_target(path: &Path) -> exlab_core::Result<(UniformHypergraph, Option<Graph>)> {
    let text = read(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('h') {
        Ok((UniformHypergraph::parse(&text)?, None))
    } else {
        let g = Graph::parse(&text)?;
        Ok((graph_as_hypergraph(&g), Some(g)))
    }
}

pub fn ramsey(target: &Path, colors: usize, cap: usize, nodes: Option<u64>) -> Outcome {
    let (h, g) = read_target(target)?;
    let query = RamseyQuery::new(h, colors, cap)?.with_budget(nodes.unwrap_or(DEFAULT_NODE_BUDGET));
    let value = ramsey_number(&query)?;
    let mut run = Run::new("ramsey");
    run.output = format!("{value}\n");
    run.report
        .param("target", target.display().to_string())
        .param("colors", colors)
        .param("cap", cap)
        .result("value", value.to_string());
    if let (Some(g), RamseyValue::Known(r)) = (&g, value) {
        if colors == 2 {
            let b = ramsey_bounds(g);
            run.report.result("lower", b.lower).verdict("lower_bound", b.lower.ceil() as usize <= r);
            if let Some(up) = b.upper {
                run.report.result("upper", up).verdict("upper_bound", r as f64 <= up);
            }
        }
    }
    Ok(run)
}

pub fn saturation(target: &Path, cap: usize, nodes: Option<u64>) -> Outcome {
    let g = read_graph(target)?;
    let verdict = is_ramsey_saturated(&g, cap, nodes.unwrap_or(DEFAULT_NODE_BUDGET))?;
    let mut run = Run::new("saturation");
    run.output = match &verdict {
        Saturation::Saturated => "saturated\n".into(),
        Saturation::Unsaturated { edge, value } => {
            format!("unsaturated {} {} r={value}\n", edge.0 + 1, edge.1 + 1)
        }
        Saturation::Unknown { cap } => format!("unknown({cap})\n"),
    };
    run.report
        .param("target", target.display().to_string())
        .param("cap", cap)
        .result("verdict", run.output.trim().to_string());
    Ok(run)
}

pub fn online(cmd: &Command, g: &Global) -> Outcome {
    let Command::Online {
        target,
        colors,
        painter,
        color,
        moves,
        spacing,
    } = cmd
    else {
        unreachable!("online called with another command")
    };
    if g.json && *painter == PainterKind::Random && g.seed.is_none() {
        return Err(Failure::Usage("--json with the random painter needs an explicit --seed".into()));
    }
    let t = read_graph(target)?;
    let seed = g.seed.unwrap_or(0);
    let spacing = match spacing {
        SpacingArg::Compact => Spacing::Compact,
        SpacingArg::Literal => Spacing::Literal,
    };
    let plan = BuilderPlan::new(&t, *colors, spacing)?;
    let budget = moves.unwrap_or(usize::MAX);
    let stdin = std::io::stdin();
    let mut p: Box<dyn Painter> = match painter {
        PainterKind::Random => Box::new(RandomPainter::new(seed)),
        PainterKind::Fixed => Box::new(FixedPainter(*color)),
        PainterKind::Greedy => Box::new(GreedyAvoidPainter),
        PainterKind::Adversarial => Box::new(RoundRobinPainter::default()),
        // prompts go to stderr so the transcript on stdout stays clean
        PainterKind::Interactive => Box::new(InteractivePainter::new(BufReader::new(stdin.lock()), std::io::stderr())),
    };
    let game = run_game(&t, *colors, p.as_mut(), budget, spacing)?;
    let mut run = Run::new("online");
    run.output = game.to_text();
    run.report.seed = Some(seed);
    run.report
        .param("target", target.display().to_string())
        .param("colors", *colors)
        .param("painter", p.name())
        .result("moves", game.moves.len())
        .result("rounds", game.rounds.len())
        .result("board_vertices", game.board_vertices())
        .result("schedule_moves", plan.worst_case_moves().to_string())
        .result(
            "outcome",
            match game.outcome {
                GameOutcome::BuilderWin { color, .. } => format!("win color {color}"),
                GameOutcome::Exhausted { budget } => format!("exhausted {budget}"),
            },
        )
        .verdict("transcript", check_transcript(&game).is_ok());
    Ok(run)
}

pub fn verify(target: &Path, transcript: &Path) -> Outcome {
    let t = read_graph(target)?;
    let game = GameTranscript::parse(&t, &read(transcript)?)?;
    let mut run = Run::new("verify");
    run.report
        .param("target", target.display().to_string())
        .param("transcript", transcript.display().to_string())
        .result("moves", game.moves.len());
    match check_transcript(&game) {
        Ok(()) => {
            run.output = "ok\n".into();
            run.report.verdict("transcript", true);
        }
        Err(e) => {
            run.output = format!("{e}\n");
            run.report.result("defect", e).verdict("transcript", false);
        }
    }
    Ok(run)
}
