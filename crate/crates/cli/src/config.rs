use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reciprocity_core::{
    ClaimId, ClaimSelector, DEFAULT_COUNTEREXAMPLE_LIMIT, DEFAULT_ENUMERATION_CAP,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Environment variable holding the default enumeration cap.
pub const CAP_ENV: &str = "RECIPROCITY_CAP";

#[derive(Debug, Parser)]
#[command(name = "reciprocity")]
#[command(
    about = "Legendre symbols, Eisenstein's lattice rectangle and an exhaustive claim checker"
)]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format (defaults: text for symbol, svg for render, json otherwise)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Maximum number of lattice points an enumerating operation may visit
    #[arg(long, global = true, env = CAP_ENV)]
    pub cap: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Legendre symbol (a/p) by one method
    Symbol {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Method::Euler)]
        method: Method,
    },
    /// Full report for one ordered pair (p, q)
    Pair {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        selection: ClaimArgs,
    },
    /// Check claims on every ordered pair of distinct odd primes below a bound
    Sweep {
        /// Exclusive upper bound on both primes
        #[arg(long = "max", alias = "bound", default_value_t = 200)]
        bound: u64,
        #[command(flatten)]
        selection: ClaimArgs,
        /// Counterexamples kept per claim and form
        #[arg(long, default_value_t = DEFAULT_COUNTEREXAMPLE_LIMIT)]
        limit: usize,
    },
    /// Orbits of the Klein four group on the rectangle, with fixed points
    Orbits {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// The claim registry with expected outcomes
    ClaimsList,
    /// SVG diagram of the rectangle
    Render {
        #[command(flatten)]
        pair: PairArgs,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct ClaimArgs {
    /// Comma-separated claims, e.g. C8,C6-congruence (default: all)
    #[arg(long, value_delimiter = ',')]
    pub claims: Vec<String>,
    /// Exit with status 1 if any selected claim form fails
    #[arg(long)]
    pub expect_hold: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Euler,
    Gauss,
    Eisenstein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandKind {
    Symbol { a: i64, p: u64, method: Method },
    Pair { p: u64, q: u64 },
    Sweep { bound: u64, limit: usize },
    Orbits { p: u64, q: u64 },
    ClaimsList,
    Render { p: u64, q: u64 },
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Symbol { .. } => "symbol",
            CommandKind::Pair { .. } => "pair",
            CommandKind::Sweep { .. } => "sweep",
            CommandKind::Orbits { .. } => "orbits",
            CommandKind::ClaimsList => "claims-list",
            CommandKind::Render { .. } => "render",
        }
    }

    fn default_format(&self) -> Format {
        match self {
            CommandKind::Symbol { .. } => Format::Text,
            CommandKind::Render { .. } => Format::Svg,
            _ => Format::Json,
        }
    }

    fn accepts(&self, format: Format) -> bool {
        match self {
            CommandKind::Render { .. } => format == Format::Svg,
            CommandKind::Sweep { .. } => {
                matches!(format, Format::Json | Format::Csv | Format::Text)
            }
            _ => matches!(format, Format::Json | Format::Text),
        }
    }
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Selected claim forms; empty selections are expanded to every form.
    pub claims: Vec<ClaimSelector>,
    pub expect_hold: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cap: u64,
}

impl RunConfig {
    pub fn claim_ids(&self) -> Vec<ClaimId> {
        let mut ids: Vec<ClaimId> = self.claims.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        ids
    }
}

fn all_forms() -> Vec<ClaimSelector> {
    ClaimId::ALL
        .into_iter()
        .flat_map(|id| {
            let mut v = vec![ClaimSelector::printed(id)];
            if id.has_companion() {
                v.push(ClaimSelector::companion(id));
            }
            v
        })
        .collect()
}

fn parse_claims(args: &ClaimArgs) -> Result<Vec<ClaimSelector>, CliError> {
    if args.claims.is_empty() {
        return Ok(all_forms());
    }
    let mut out = Vec::new();
    for raw in &args.claims {
        let sel: ClaimSelector = raw.trim().parse().map_err(CliError::Input)?;
        if !out.contains(&sel) {
            out.push(sel);
        }
    }
    Ok(out)
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<RunConfig, CliError> {
        let mut claims = Vec::new();
        let mut expect_hold = false;
        let command = match cli.command {
            Command::Symbol { a, p, method } => CommandKind::Symbol { a, p, method },
            Command::Pair { pair, selection } => {
                claims = parse_claims(&selection)?;
                expect_hold = selection.expect_hold;
                CommandKind::Pair {
                    p: pair.p,
                    q: pair.q,
                }
            }
            Command::Sweep {
                bound,
                selection,
                limit,
            } => {
                claims = parse_claims(&selection)?;
                expect_hold = selection.expect_hold;
                CommandKind::Sweep { bound, limit }
            }
            Command::Orbits { pair } => CommandKind::Orbits {
                p: pair.p,
                q: pair.q,
            },
            Command::ClaimsList => CommandKind::ClaimsList,
            Command::Render { pair } => CommandKind::Render {
                p: pair.p,
                q: pair.q,
            },
        };
        let format = cli.format.unwrap_or_else(|| command.default_format());
        if !command.accepts(format) {
            return Err(CliError::Input(format!(
                "format {format:?} is not available for the {} command",
                command.name()
            )));
        }
        Ok(RunConfig {
            command,
            claims,
            expect_hold,
            format,
            out: cli.out,
            cap: cli.cap.unwrap_or(DEFAULT_ENUMERATION_CAP),
        })
    }
}
