use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "exlab", version, about = "Constructions and checkers from extremal combinatorics")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Print one JSON report object on stdout instead of the plain output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel searches. Results do not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for every random choice (default 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Wall-clock budget for searches that accept one.
    #[arg(long, global = true, env = "EXLAB_BUDGET_MS")]
    pub budget_ms: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the projective plane of prime order q.
    Plane {
        #[arg(long)]
        q: usize,
    },
    /// Clique partitions.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Large induced star forest of a bipartite graph.
    Starforest {
        #[arg(long)]
        graph: PathBuf,
        /// Average-degree bound; defaults to the rounded-up average degree.
        #[arg(long)]
        d: Option<usize>,
        /// Also print the round trace.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Exhaustive Ramsey number of a small graph or uniform hypergraph.
    Ramsey {
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long)]
        cap: usize,
        /// Search-node budget.
        #[arg(long)]
        nodes: Option<u64>,
    },
    /// Whether every missing edge raises the two-color Ramsey number.
    Saturation {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        cap: usize,
        #[arg(long)]
        nodes: Option<u64>,
    },
    /// Play the online Ramsey game as Builder.
    Online {
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, value_enum, default_value_t = PainterKind::Random)]
        painter: PainterKind,
        /// Color used by the fixed painter.
        #[arg(long, default_value_t = 0)]
        color: u8,
        /// Move budget.
        #[arg(long)]
        moves: Option<usize>,
        #[arg(long, value_enum, default_value_t = SpacingArg::Compact)]
        spacing: SpacingArg,
    },
    /// K_s^(3)-free subset of a K_{s+1}^(3)-free 3-graph.
    Erdosrogers {
        #[arg(long)]
        hypergraph: PathBuf,
        #[arg(long)]
        s: usize,
        /// Rational in (0, 1/2], e.g. 1/4.
        #[arg(long)]
        alpha: Option<String>,
        /// Auxiliary degree that triggers the neighbourhood exit.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Subset sums and Hilbert cubes.
    #[command(subcommand)]
    Hilbert(HilbertCmd),
    /// Check a clique partition or a game transcript.
    Verify {
        #[arg(long, requires = "partition")]
        graph: Option<PathBuf>,
        #[arg(long, requires = "graph")]
        partition: Option<PathBuf>,
        #[arg(long, requires = "transcript")]
        target: Option<PathBuf>,
        #[arg(long, requires = "target")]
        transcript: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PartitionCmd {
    /// K_n into cliques of at most k vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Complement of a sparse graph.
    Complement {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Complement of a forest.
    Forest {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum HilbertCmd {
    /// Print Σ(X).
    Sigma {
        /// Comma-separated positive integers.
        #[arg(long, value_delimiter = ',')]
        set: Vec<u64>,
    },
    /// Find a cube of dimension d, or the largest dimension up to dmax.
    Cube {
        #[arg(long, value_delimiter = ',')]
        set: Vec<u64>,
        #[arg(long, conflicts_with = "dmax")]
        d: Option<usize>,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Count d-subsets of 1..n with |Σ(X)| at most bound.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        bound: u64,
    },
    /// Largest cube in seeded random subsets of 1..n.
    Experiment {
        #[arg(long)]
        n: u64,
        /// Density of the random subset.
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        dmax: usize,
        /// Constant of the reference line c·sqrt(log2 n).
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PainterKind {
    Random,
    Fixed,
    Greedy,
    Adversarial,
    Interactive,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpacingArg {
    Compact,
    Literal,
}
