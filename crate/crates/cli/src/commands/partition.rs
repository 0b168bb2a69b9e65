use std::path::Path;

use exlab_core::partition::{
    check_partition, complete_bound, forest_bound, partition_complement, partition_complement_forest,
    partition_complete, verify_partition,
};
use exlab_core::CliquePartition;

use super::{read, read_graph, Outcome};
use crate::args::PartitionCmd;
use crate::report::Run;

pub fn run(cmd: &PartitionCmd) -> Outcome {
    let (p, bound, mut run) = match cmd {
        PartitionCmd::Complete { n, k } => {
            let p = partition_complete(*n, *k)?;
            let bound = if n <= k { 1 } else { complete_bound(*n, *k).floor() as u64 };
            let mut run = Run::new("partition complete");
            run.report.param("n", *n).param("k", *k).verdict("max_part", p.max_part() <= *k);
            (p, bound, run)
        }
        PartitionCmd::Complement { graph } => {
            let f = read_graph(graph)?;
            let (p, stats) = partition_complement(&f)?;
            let mut run = Run::new("partition complement");
            run.report
                .param("graph", graph.display().to_string())
                .result("k", stats.k)
                .result("base_parts", stats.base_parts)
                .result("touched", stats.touched);
            (p, stats.bound() as u64, run)
        }
        PartitionCmd::Forest { graph } => {
            let f = read_graph(graph)?;
            let p = partition_complement_forest(&f)?;
            let mut run = Run::new("partition forest");
            run.report.param("graph", graph.display().to_string());
            (p, forest_bound(f.vertex_count()).floor() as u64, run)
        }
    };
    run.output = p.to_text(bound);
    run.report
        .result("parts", p.len())
        .result("bound", bound)
        .verdict("partition", verify_partition(&p.target, &p))
        .verdict("bound", p.len() as u64 <= bound);
    Ok(run)
}

pub fn verify(graph: &Path, partition: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let p = CliquePartition::parse(g.clone(), &read(partition)?)?;
    let mut run = Run::new("verify");
    run.report
        .param("graph", graph.display().to_string())
        .param("partition", partition.display().to_string())
        .result("parts", p.len());
    match check_partition(&g, &p.parts) {
        Ok(()) => {
            run.output = "ok\n".into();
            run.report.verdict("partition", true);
        }
        Err(defect) => {
            run.output = format!("{defect}\n");
            run.report.result("defect", defect.to_string()).verdict("partition", false);
        }
    }
    Ok(run)
}
