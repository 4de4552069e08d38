use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hsvd::hsvd::Orientation;
use hsvd::ToleranceConfig;
use hsvd_cli::commands::{self, SynthArgs};

#[derive(Parser)]
#[command(
    name = "hsvd",
    version,
    about = "Hyperbolic SVD with a J-unitary factor"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct TolArgs {
    /// Relative threshold for rank and zero-eigenvalue decisions.
    #[arg(long, default_value_t = ToleranceConfig::default().rank_rtol)]
    rank_tol: f64,
    /// Acceptance threshold for residuals.
    #[arg(long, default_value_t = ToleranceConfig::default().residual_tol)]
    residual_tol: f64,
    /// Pivot floor for hyperbolic Gram-Schmidt.
    #[arg(long, default_value_t = ToleranceConfig::default().breakdown_tol)]
    breakdown_tol: f64,
}

impl TolArgs {
    fn config(self) -> ToleranceConfig {
        ToleranceConfig {
            rank_rtol: self.rank_tol,
            residual_tol: self.residual_tol,
            breakdown_tol: self.breakdown_tol,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Print j, l, t, k, s, rank and the eigenvalues of B^H J B.
    Invariants {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Decompose a matrix and write the factors as JSON.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// `right`: V^H B U = Σ with B having p+q rows. `left`: A = U Σ V^H with A having p+q columns.
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Check a factors file against a matrix.
    Verify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        factors: PathBuf,
        /// Override the residual tolerance stored in the factors file.
        #[arg(long)]
        residual_tol: Option<f64>,
    },
    /// Generate a matrix with prescribed invariants plus its ground-truth factors.
    Synth {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        rapidity: f64,
        #[arg(long)]
        complex: bool,
        #[arg(long)]
        out_matrix: PathBuf,
        #[arg(long)]
        out_factors: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants {
            matrix,
            p,
            q,
            json,
            tol,
        } => commands::invariants(&matrix, p, q, &tol.config(), json),
        Command::Decompose {
            matrix,
            p,
            q,
            side,
            out,
            tol,
        } => {
            let side = match side {
                Side::Left => Orientation::Left,
                Side::Right => Orientation::Right,
            };
            commands::decompose(&matrix, p, q, side, &out, &tol.config())
        }
        Command::Verify {
            matrix,
            factors,
            residual_tol,
        } => commands::verify(&matrix, &factors, residual_tol),
        Command::Synth {
            p,
            q,
            n,
            j,
            l,
            t,
            seed,
            rapidity,
            complex,
            out_matrix,
            out_factors,
        } => {
            let args = SynthArgs {
                p,
                q,
                n,
                j,
                l,
                t,
                seed,
                rapidity,
                complex,
            };
            commands::synth(&args, &out_matrix, &out_factors)
        }
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
