use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "abel-center",
    version,
    about = "Exact center computations for y' = p y^3 + q y^2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub output: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generalized moments m_l = ∫ P^l q for l = 0..=kmax.
    Moments {
        #[command(flatten)]
        pair: PairArgs,
        /// Highest moment index (default deg P + deg Q + 2).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Weighted iterated-integral sums for odd k = 5..=kmax, with the
    /// closed forms when P and Q vanish at both endpoints.
    Melnikov {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 11)]
        kmax: usize,
    },
    /// Return-map coefficients v_2..v_order and the center verdict.
    Center {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Right composition factors of P and their [a,b] structure.
    Decompose {
        #[arg(long = "P", allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        interval: IntervalArgs,
    },
    /// Composition condition for (P, Q), with the moment-vanishing
    /// structure when it fails.
    CompositionCheck {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Composition subspaces of degree at most `degree` attached to Q.
    CosBasis {
        #[arg(long = "Q", allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        interval: IntervalArgs,
    },
    /// Runs every case-study check and reports one line per claim.
    VerifyPaper,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long = "P", allow_hyphen_values = true)]
    pub p: String,
    #[arg(long = "Q", allow_hyphen_values = true)]
    pub q: String,
    #[command(flatten)]
    pub interval: IntervalArgs,
}

#[derive(Debug, Args)]
pub struct IntervalArgs {
    /// Left endpoint.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub a: String,
    /// Right endpoint.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
}
