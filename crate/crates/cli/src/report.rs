//! Report documents and their JSON, CSV and text emitters.
//!
//! JSON output is canonical: struct fields serialize in declaration order,
//! maps are `BTreeMap`s, and nothing time-dependent is recorded.

use std::fmt::Write as _;

use reciprocity_core::symmetry::orbit_size_counts;
use reciprocity_core::{
    ClaimForm, ClaimId, ClaimInfo, ClaimOutcome, FixedPointReport, LegendreValue, Orbit,
    PartitionCounts, Sign, SweepReport,
};
use serde::{Deserialize, Serialize};

use crate::config::Method;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub parameters: Parameters,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: Parameters, payload: Payload) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report documents always serialize");
        s.push('\n');
        s
    }
}

/// Inputs the document was generated from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub claims: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cap: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Symbol(SymbolResult),
    Pair(Box<PairReport>),
    Sweep(SweepReport),
    Orbits(OrbitListing),
    Claims(Vec<ClaimInfo>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolResult {
    pub a: i64,
    pub p: u64,
    pub method: Method,
    pub value: LegendreValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolRoutes {
    pub euler: LegendreValue,
    pub gauss: LegendreValue,
    pub eisenstein: LegendreValue,
}

impl SymbolRoutes {
    pub fn agree(&self) -> bool {
        self.euler == self.gauss && self.gauss == self.eisenstein
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReciprocityCheck {
    /// `(p/q)·(q/p)`
    pub product: Sign,
    /// `(p-1)(q-1)/4`
    pub exponent: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedClaim {
    pub claim: ClaimId,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub p: u64,
    pub q: u64,
    /// `(q/p)` by every route
    pub q_mod_p: SymbolRoutes,
    /// `(p/q)` by every route
    pub p_mod_q: SymbolRoutes,
    pub n_p_q: u64,
    pub n_q_p: u64,
    pub partition: PartitionCounts,
    pub reciprocity: ReciprocityCheck,
    pub claims: Vec<ClaimOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub skipped: Vec<SkippedClaim>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitListing {
    pub p: u64,
    pub q: u64,
    pub total: u64,
    /// `(size, number of orbits)`
    pub size_counts: Vec<(usize, usize)>,
    pub orbits: Vec<Orbit>,
    pub fixed_points: Vec<FixedPointReport>,
}

impl OrbitListing {
    pub fn new(
        p: u64,
        q: u64,
        total: u64,
        orbits: Vec<Orbit>,
        fixed_points: Vec<FixedPointReport>,
    ) -> Self {
        OrbitListing {
            p,
            q,
            total,
            size_counts: orbit_size_counts(&orbits).into_iter().collect(),
            orbits,
            fixed_points,
        }
    }
}

pub const CSV_HEADER: [&str; 6] = ["claim_id", "p", "q", "form", "holds", "witness_summary"];

/// One row per (claim, pair, form). Skipped verdicts are written as `skipped`.
pub fn sweep_csv(report: &SweepReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for v in &report.verdicts {
        let holds = match v.holds {
            Some(true) => "true",
            Some(false) => "false",
            None => "skipped",
        };
        w.write_record([
            v.claim_id.to_string(),
            v.p.to_string(),
            v.q.to_string(),
            v.form.to_string(),
            holds.to_string(),
            v.witness_summary.clone(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

fn verdict_word(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "FAILS"
    }
}

pub fn symbol_text(r: &SymbolResult) -> String {
    format!("{}\n", r.value)
}

pub fn pair_text(r: &PairReport) -> String {
    let mut s = String::new();
    let routes = |v: &SymbolRoutes| {
        format!(
            "euler={} gauss={} eisenstein={}",
            v.euler, v.gauss, v.eisenstein
        )
    };
    let _ = writeln!(s, "pair p={} q={}", r.p, r.q);
    let _ = writeln!(s, "(q/p): {}", routes(&r.q_mod_p));
    let _ = writeln!(s, "(p/q): {}", routes(&r.p_mod_q));
    let _ = writeln!(s, "N_p(q)={} N_q(p)={}", r.n_p_q, r.n_q_p);
    let _ = writeln!(
        s,
        "|S+|={} |S-|={} |S|={}",
        r.partition.n_plus, r.partition.n_minus, r.partition.total
    );
    let _ = writeln!(
        s,
        "reciprocity: (p/q)(q/p)={} exponent={} {}",
        r.reciprocity.product,
        r.reciprocity.exponent,
        verdict_word(r.reciprocity.holds)
    );
    for o in &r.claims {
        let companion = match o.companion_holds {
            Some(c) => format!(" companion {}", verdict_word(c)),
            None => String::new(),
        };
        let _ = writeln!(
            s,
            "{}: {}{}  [{}]",
            o.claim,
            verdict_word(o.holds),
            companion,
            o.witness.summary()
        );
    }
    for k in &r.skipped {
        let _ = writeln!(s, "{}: skipped ({})", k.claim, k.reason);
    }
    s
}

pub fn sweep_text(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sweep below {} (cap {})", r.bound, r.cap);
    for (id, summary) in &r.per_claim {
        for form in [ClaimForm::Printed, ClaimForm::Companion] {
            let (Some(failed), Some(examples)) =
                (summary.failures(form), summary.counterexamples(form))
            else {
                continue;
            };
            let first = examples
                .first()
                .map(|c| format!(", first counterexample {}", c.pair))
                .unwrap_or_default();
            let _ = writeln!(
                s,
                "{id} {form}: {failed}/{} failed, {} skipped{first}",
                summary.pairs_tested, summary.pairs_skipped
            );
        }
    }
    s
}

pub fn orbits_text(r: &OrbitListing) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "rect p={} q={}: {} points, {} orbits",
        r.p,
        r.q,
        r.total,
        r.orbits.len()
    );
    for o in &r.orbits {
        let pts: Vec<String> = o
            .points
            .iter()
            .map(|pt| format!("({},{})", pt.x, pt.y))
            .collect();
        let _ = writeln!(s, "size {}: {}", o.size(), pts.join(" "));
    }
    for f in &r.fixed_points {
        let pts: Vec<String> = f
            .fixed
            .iter()
            .map(|pt| format!("({},{})", pt.x, pt.y))
            .collect();
        let _ = writeln!(
            s,
            "fixed by {}: {}",
            f.map_kind,
            if pts.is_empty() {
                "none".to_string()
            } else {
                pts.join(" ")
            }
        );
    }
    s
}

pub fn claims_text(infos: &[ClaimInfo]) -> String {
    let mut s = String::new();
    for info in infos {
        let _ = writeln!(
            s,
            "{:<14} {:?}  {}  ({})",
            info.printed.selector, info.printed.expected, info.printed.statement, info.source
        );
        if let Some(c) = &info.companion {
            let _ = writeln!(s, "{:<14} {:?}  {}", c.selector, c.expected, c.statement);
        }
    }
    s
}
