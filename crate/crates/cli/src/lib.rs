//! Command dispatch for the `reciprocity` binary.

pub mod config;
pub mod report;
pub mod svg;

use std::fs;
use std::io::Write;

use reciprocity_core::{
    count_large_residues, find_counterexample, fixed_points, legendre_eisenstein, legendre_euler,
    legendre_gauss, orbits, partition_counts, registry, sweep, verify_claim, ClaimSelector,
    LatticeRect, LegendreValue, OddPrime, PrimePair, Sign, SweepConfig, SymmetryMap,
};
use thiserror::Error;

use crate::config::{CommandKind, Format, Method, RunConfig};
use crate::report::{
    OrbitListing, PairReport, Parameters, Payload, ReciprocityCheck, ReportDocument, SkippedClaim,
    SymbolResult, SymbolRoutes,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_FAILED: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => EXIT_INVALID_INPUT,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl From<reciprocity_core::Error> for CliError {
    fn from(e: reciprocity_core::Error) -> CliError {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

/// Rendered output plus the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub status: u8,
}

fn symbol_by(method: Method, a: i64, p: OddPrime) -> Result<LegendreValue, CliError> {
    if method == Method::Euler {
        return Ok(legendre_euler(a, p));
    }
    let a = u64::try_from(a).ok().filter(|&a| a > 0).ok_or_else(|| {
        CliError::Input(format!(
            "the {method:?} method needs a positive argument, got {a}"
        ))
    })?;
    Ok(match method {
        Method::Gauss => legendre_gauss(a, p)?,
        Method::Eisenstein => legendre_eisenstein(a, p)?,
        Method::Euler => unreachable!(),
    })
}

fn routes(a: u64, p: OddPrime) -> Result<SymbolRoutes, CliError> {
    Ok(SymbolRoutes {
        euler: legendre_euler(a as i64, p),
        gauss: legendre_gauss(a, p)?,
        eisenstein: legendre_eisenstein(a, p)?,
    })
}

fn pair_report(pair: PrimePair, config: &RunConfig) -> Result<PairReport, CliError> {
    let (p, q) = (pair.p(), pair.q());
    let q_mod_p = routes(q.get(), p)?;
    let p_mod_q = routes(p.get(), q)?;
    let product = q_mod_p.euler.sign().expect("distinct primes")
        * p_mod_q.euler.sign().expect("distinct primes");
    let exponent = pair.reciprocity_exponent();
    let mut claims = Vec::new();
    let mut skipped = Vec::new();
    for id in config.claim_ids() {
        match verify_claim(id, pair, config.cap) {
            Ok(o) => claims.push(o),
            Err(e) if e.is_resource() => skipped.push(SkippedClaim {
                claim: id,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(PairReport {
        p: p.get(),
        q: q.get(),
        q_mod_p,
        p_mod_q,
        n_p_q: count_large_residues(q.get(), p)?.n_large,
        n_q_p: count_large_residues(p.get(), q)?.n_large,
        partition: partition_counts(&LatticeRect::new(pair)),
        reciprocity: ReciprocityCheck {
            product,
            exponent,
            holds: product == Sign::from_parity(exponent),
        },
        claims,
        skipped,
    })
}

fn selector_names(config: &RunConfig) -> Vec<String> {
    config.claims.iter().map(ClaimSelector::to_string).collect()
}

fn render_doc(doc: &ReportDocument, format: Format, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Text => text(),
        _ => doc.to_json(),
    }
}

/// Runs a command and renders its output, without writing anything.
pub fn execute(config: &RunConfig) -> Result<Output, CliError> {
    let name = config.command.name();
    let mut status = EXIT_OK;
    let body = match config.command {
        CommandKind::Symbol { a, p, method } => {
            let prime = OddPrime::new(p)?;
            let result = SymbolResult {
                a,
                p,
                method,
                value: symbol_by(method, a, prime)?,
            };
            let params = Parameters {
                a: Some(a),
                p: Some(p),
                method: Some(method),
                ..Parameters::default()
            };
            let text = report::symbol_text(&result);
            let doc = ReportDocument::new(name, params, Payload::Symbol(result));
            render_doc(&doc, config.format, || text)
        }
        CommandKind::Pair { p, q } => {
            let pair = PrimePair::from_u64(p, q)?;
            let report = pair_report(pair, config)?;
            if config.expect_hold {
                let failed = config.claims.iter().any(|sel| {
                    report
                        .claims
                        .iter()
                        .find(|o| o.claim == sel.id)
                        .and_then(|o| o.holds_form(sel.form))
                        == Some(false)
                });
                if failed {
                    status = EXIT_CLAIM_FAILED;
                }
            }
            let params = Parameters {
                p: Some(p),
                q: Some(q),
                claims: selector_names(config),
                cap: Some(config.cap),
                ..Parameters::default()
            };
            let text = report::pair_text(&report);
            let doc = ReportDocument::new(name, params, Payload::Pair(Box::new(report)));
            render_doc(&doc, config.format, || text)
        }
        CommandKind::Sweep { bound, limit } => {
            let mut sweep_config = SweepConfig::new(bound, config.claim_ids());
            sweep_config.counterexample_limit = limit;
            sweep_config.cap = config.cap;
            let report = sweep(&sweep_config)?;
            if config.expect_hold {
                let failed = config
                    .claims
                    .iter()
                    .any(|sel| report.per_claim[&sel.id].failures(sel.form).unwrap_or(0) > 0);
                if failed {
                    status = EXIT_CLAIM_FAILED;
                }
            }
            match config.format {
                Format::Csv => report::sweep_csv(&report),
                format => {
                    let params = Parameters {
                        bound: Some(bound),
                        claims: selector_names(config),
                        cap: Some(config.cap),
                        ..Parameters::default()
                    };
                    let text = report::sweep_text(&report);
                    let doc = ReportDocument::new(name, params, Payload::Sweep(report));
                    render_doc(&doc, format, || text)
                }
            }
        }
        CommandKind::Orbits { p, q } => {
            let rect = LatticeRect::from_u64(p, q)?;
            let fixed = [
                SymmetryMap::Horizontal,
                SymmetryMap::Vertical,
                SymmetryMap::Central,
            ]
            .into_iter()
            .map(|m| fixed_points(m, &rect, config.cap))
            .collect::<Result<Vec<_>, _>>()?;
            let listing = OrbitListing::new(p, q, rect.total(), orbits(&rect, config.cap)?, fixed);
            let params = Parameters {
                p: Some(p),
                q: Some(q),
                cap: Some(config.cap),
                ..Parameters::default()
            };
            let text = report::orbits_text(&listing);
            let doc = ReportDocument::new(name, params, Payload::Orbits(listing));
            render_doc(&doc, config.format, || text)
        }
        CommandKind::ClaimsList => {
            let infos = registry();
            let text = report::claims_text(&infos);
            let doc = ReportDocument::new(name, Parameters::default(), Payload::Claims(infos));
            render_doc(&doc, config.format, || text)
        }
        CommandKind::Render { p, q } => svg::render_svg(&LatticeRect::from_u64(p, q)?, config.cap)?,
    };
    Ok(Output { body, status })
}

/// Runs a command and writes its output to `--out` or stdout. Returns the
/// process exit status.
pub fn run(config: &RunConfig) -> Result<u8, CliError> {
    let output = execute(config)?;
    match &config.out {
        Some(path) => fs::write(path, &output.body)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(output.body.as_bytes())?;
            stdout.flush()?;
        }
    }
    if output.status == EXIT_CLAIM_FAILED {
        for sel in &config.claims {
            if let CommandKind::Sweep { bound, .. } = config.command {
                if let Ok(Some(c)) = find_counterexample(*sel, bound, config.cap) {
                    eprintln!(
                        "{sel} fails; first counterexample {}: {}",
                        c.pair,
                        c.witness.summary()
                    );
                }
            }
        }
    }
    Ok(output.status)
}
