//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (or a failed verification),
//! 2 usage or literal parse error, 3 verification budget exceeded, 4 I/O failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bset::{b_member, enumerate_b, expand_min, phi};
use crate::error::Error;
use crate::euclid::{div_min, div_norm, gcd_chain, Strategy};
use crate::gaussint::GaussInt;
use crate::motzkin::levels_up_to;
use crate::render::{export, ExportFormat, PointStyle, RenderSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_IO: u8 = 4;

pub const BUDGET_VAR: &str = "MINEUCLID_BUDGET";
pub const DEFAULT_BUDGET: u32 = 10;

#[derive(Debug, Parser)]
#[command(name = "mineuclid", version, about = "Minimal Euclidean function on the Gaussian integers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print phi(z) and a shortest base-(1+i) expansion of z
    Phi {
        #[arg(allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Test whether z lies in B_n
    Member {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Search for a shortest digit expansion of z
    Expand {
        #[arg(allow_hyphen_values = true)]
        z: GaussInt,
        /// Give up beyond cap + 1 digits
        #[arg(long, default_value_t = 64)]
        cap: u32,
    },
    /// Divide a by b with remainder
    Div {
        #[arg(allow_hyphen_values = true)]
        a: GaussInt,
        #[arg(allow_hyphen_values = true)]
        b: GaussInt,
        #[arg(long, default_value = "min-phi")]
        strategy: Strategy,
    },
    /// Run the Euclidean algorithm on a and b
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: GaussInt,
        #[arg(allow_hyphen_values = true)]
        b: GaussInt,
        #[arg(long, default_value = "min-phi")]
        strategy: Strategy,
    },
    /// List the elements of B_n
    Bset { n: u32 },
    /// Compare Motzkin's construction with B_n for n = 0..=nmax
    Verify { nmax: u32 },
    /// Write B_n as csv, json or svg to a file or to stdout ("-")
    Export {
        n: u32,
        format: ExportFormat,
        path: String,
        /// Pixels per lattice unit (svg)
        #[arg(long, default_value_t = 8)]
        scale: u32,
        /// Glyph shape (svg)
        #[arg(long, default_value = "square")]
        style: PointStyle,
        /// Draw the Oct_n outline (svg)
        #[arg(long)]
        outline: bool,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn domain(err: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_DOMAIN, message: err.to_string() }
    }

    fn io(err: io::Error) -> Self {
        Failure { code: EXIT_IO, message: err.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::domain(err)
    }
}

/// Verification level limit from `MINEUCLID_BUDGET`, or the default.
pub fn budget_from_env() -> std::result::Result<u32, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(raw) => raw.trim().parse().map_err(|_| Failure {
            code: EXIT_PARSE,
            message: format!("{BUDGET_VAR} must be a nonnegative integer, got {raw:?}"),
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Run one command, writing its normal output to `out`. Returns the exit
/// code; failures are reported on `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<u8, Failure> {
    let mut text = String::new();
    let code = match command {
        Command::Phi { z } => {
            let level = phi(z)?;
            let expansion = expand_min(z, level)?
                .ok_or_else(|| Failure::domain(format!("no expansion of {z} with {} digits", level + 1)))?;
            text = format!("phi={level}; expansion={expansion}\n");
            EXIT_OK
        }
        Command::Member { n, z } => {
            text = format!("{}\n", b_member(n, z));
            EXIT_OK
        }
        Command::Expand { z, cap } => {
            let expansion = expand_min(z, cap)?
                .ok_or_else(|| Failure::domain(format!("no expansion of {z} within {} digits", u64::from(cap) + 1)))?;
            text = format!("expansion={expansion} digits={}\n", expansion.len());
            EXIT_OK
        }
        Command::Div { a, b, strategy } => {
            let result = match strategy {
                Strategy::MinPhi => div_min(a, b)?,
                Strategy::Norm => div_norm(a, b)?,
            };
            let phi_r = if result.r.is_zero() { "-".to_string() } else { phi(result.r)?.to_string() };
            text = format!("q={} r={}\nphi(b)={} phi(r)={phi_r}\n", result.q, result.r, phi(b)?);
            EXIT_OK
        }
        Command::Gcd { a, b, strategy } => {
            let report = gcd_chain(a, b, strategy)?;
            text = format!("gcd={} steps={}\nstrategy={}\n", report.gcd, report.steps.len(), report.strategy);
            for step in &report.steps {
                let r = step.result;
                text += &format!("{} = ({})*({}) + {}\n", step.dividend, r.q, step.divisor, r.r);
            }
            EXIT_OK
        }
        Command::Bset { n } => {
            let points = enumerate_b(n)?;
            text = format!("|B_{n}|={}\n", points.len());
            for z in points {
                text += &format!("{z}\n");
            }
            EXIT_OK
        }
        Command::Verify { nmax } => {
            let budget = budget_from_env()?;
            if nmax > budget {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: format!("verify level {nmax} exceeds budget {budget} (set {BUDGET_VAR})"),
                });
            }
            let mut all_equal = true;
            let mut parts = Vec::new();
            for level in levels_up_to(nmax)? {
                let closed_form = enumerate_b(level.n)?;
                let equal = level.elements.iter().copied().eq(closed_form.iter().copied());
                all_equal &= equal;
                parts.push(format!(
                    "n={}: {}={} {}",
                    level.n,
                    level.len(),
                    closed_form.len(),
                    if equal { "PASS" } else { "FAIL" }
                ));
            }
            text = parts.join("; ") + "\n";
            if all_equal {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            }
        }
        Command::Export { n, format, path, scale, style, outline } => {
            let spec = RenderSpec::new(scale, style, outline)
                .ok_or_else(|| Failure { code: EXIT_PARSE, message: "--scale must be at least 1".into() })?;
            let body = export(n, format, &spec)?;
            if path == "-" {
                out.write_all(body.as_bytes()).map_err(Failure::io)?;
            } else {
                fs::write(PathBuf::from(&path), body).map_err(Failure::io)?;
            }
            EXIT_OK
        }
    };
    out.write_all(text.as_bytes()).map_err(Failure::io)?;
    Ok(code)
}
