use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "sinf",
    version,
    about = "Exact computations with characters of the infinite symmetric group"
)]
pub struct Cli {
    /// Write the result to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    /// One `path<TAB>value` line per leaf of the JSON result.
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partitions, cycle types and Young distributions.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Characters of the finite symmetric groups.
    #[command(subcommand)]
    Char(CharCmd),
    /// Thoma characters and measures.
    #[command(subcommand)]
    Thoma(ThomaCmd),
    /// H-series and m-sequences.
    #[command(subcommand)]
    Hseries(HseriesCmd),
    /// Total positivity of Toeplitz sequences.
    #[command(subcommand)]
    Tp(TpCmd),
    /// Wiring diagrams of the finite-window semigroup.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Double cosets of the hyperoctahedral subgroup.
    #[command(subcommand)]
    Cosets(CosetsCmd),
    /// Admissibility of a representation label (exit 2 when rejected).
    Classify {
        #[arg(long)]
        label: PathBuf,
    },
    /// Closed-form boundary norms (altD, symE).
    Boundary {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        l1: u32,
        #[arg(long)]
        l2: Option<u32>,
    },
    /// Mix labels and check the moment and H-series product rules.
    Mixture {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 24)]
        check_order: usize,
    },
    /// Normalized cycle characters along row/column-limit shapes.
    Ergodic {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: u32,
        /// Comma separated list of n.
        #[arg(long)]
        n: String,
    },
    /// Run the built-in verification suites (exit 2 on any failure).
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the largest enumerations.
        #[arg(long)]
        quick: bool,
    },
    /// Run one invocation per line of a file, emitting one JSON line each.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Comma separated α_i.
    #[arg(long, default_value = "")]
    pub alpha: String,
    /// Comma separated β_j.
    #[arg(long, default_value = "")]
    pub beta: String,
    /// γ; defaults to 1 − Σα − Σβ.
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum PartitionCmd {
    /// Conjugate, z, length, dimension and covers of a shape.
    Info {
        #[arg(long)]
        shape: String,
    },
    /// All partitions of n.
    List {
        #[arg(long)]
        n: u32,
    },
    /// Cycle type of a permutation given as cycles `1,2,3;4,5`.
    CycleType {
        #[arg(long, allow_hyphen_values = true)]
        cycles: String,
        #[arg(long)]
        n: u32,
    },
    /// Transform a Young distribution: scale, union or rho.
    Distribution {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long, conflicts_with_all = ["union", "rho"])]
        scale: Option<String>,
        #[arg(long, conflicts_with = "rho")]
        union: Option<PathBuf>,
        #[arg(long)]
        rho: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// Full character table of S(n).
    Table {
        #[arg(long)]
        n: u32,
    },
    /// χ^shape on a class; both algorithms are evaluated.
    Eval {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        class: String,
    },
    /// Induced character η^shape on a class.
    Eta {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        class: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ThomaCmd {
    /// Thoma character on a product of cycles.
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        /// Nontrivial cycle lengths, e.g. `3` or `2,2`.
        #[arg(long)]
        cycles: String,
    },
    /// The measure of a parameter set.
    Measure {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Integrality of ν = mass/|x| at every atom (exit 2 when invalid).
    Validity {
        #[arg(long)]
        measure: PathBuf,
    },
    /// Moments c_1..c_n of a measure.
    Moments {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Antisymmetrized single-atom sum against its closed form.
    Falsifier {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum HseriesCmd {
    /// Coefficients m(0..=order) of H(t).
    Expand {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 24)]
        order: usize,
        /// Expand 1/H(−t) instead.
        #[arg(long)]
        sign: bool,
    },
    /// Extract the largest geometric factor from an m-sequence.
    Peel {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Skip the exact recurrence route.
        #[arg(long)]
        no_exact: bool,
    },
    /// Branching coherence of m(λ) up to n < nmax (exit 2 on failure).
    Coherence {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    /// Frobenius determinant m(λ) = det[m(λ_i − i + j)].
    Minor {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        shape: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum TpCmd {
    /// Minors of [a_{j−i}] up to the given order (exit 2 on a negative minor).
    Check {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 10)]
        window: usize,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DiagramCmd {
    /// Compose two diagrams (lhs on top).
    Mul {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// A generator: perm (cycles), A (index), C (length) or P (n).
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        arg: String,
        #[arg(long)]
        window: u32,
        #[arg(long)]
        odd: bool,
    },
    /// The involution `*`.
    Star {
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Instantiate every defining relation over the window (exit 2 on failure).
    Verify {
        #[arg(long)]
        window: u32,
        #[arg(long)]
        odd: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CosetsCmd {
    /// Exhaustive coset-type tally over G(n).
    Census {
        #[arg(long)]
        n: u32,
        /// Allow n = 5 (3.6 million elements).
        #[arg(long)]
        long_run: bool,
    },
    /// Σ_g t^{ℓ(g)} by length.
    Poly {
        #[arg(long)]
        n: u32,
    },
    /// Σ_g x^{n−ℓ(g)}, closed form and (n ≤ 3) enumeration.
    Positivity {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: u32,
    },
    /// Coset type of a permutation of ±1..±n given as cycles.
    Type {
        #[arg(long, allow_hyphen_values = true)]
        cycles: String,
        #[arg(long)]
        n: u32,
    },
}
