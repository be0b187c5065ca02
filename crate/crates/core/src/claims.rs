//! Registry of checkable assertions about the lattice proof of quadratic
//! reciprocity, plus an exhaustive sweep over pairs of odd primes.
//!
//! Some assertions are false as stated. Those carry a second, weaker
//! "companion" form, and both verdicts are reported side by side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{legendre_euler, odd_primes_below, LegendreValue, PrimePair, Sign};
use crate::error::{Error, Result};
use crate::gauss_lemma::{
    count_large_residues, epsilon_product_full, epsilon_product_half, legendre_gauss, residue_table,
};
use crate::lattice::{classify_points, floor_sum, partition_counts, points_on_line, LatticeRect};
use crate::symmetry::{
    fixed_points, orbit_size_counts, orbits, side_flip_violations, CentralPair, SymmetryMap,
};

/// Default number of counterexamples kept per claim and form in a sweep.
pub const DEFAULT_COUNTEREXAMPLE_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12,
        ClaimId::C13,
    ];

    pub fn info(self) -> ClaimInfo {
        registry_entry(self)
    }

    pub fn has_companion(self) -> bool {
        matches!(
            self,
            ClaimId::C6 | ClaimId::C7 | ClaimId::C12 | ClaimId::C13
        )
    }

    /// Whether checking this claim walks every point of the rectangle.
    pub fn needs_enumeration(self) -> bool {
        matches!(
            self,
            ClaimId::C4 | ClaimId::C5 | ClaimId::C12 | ClaimId::C13
        )
    }

    fn form_label(self, form: ClaimForm) -> Option<&'static str> {
        use ClaimForm::*;
        Some(match (self, form) {
            (ClaimId::C6, Printed) | (ClaimId::C7, Printed) => "equality",
            (ClaimId::C6, Companion) | (ClaimId::C7, Companion) => "congruence",
            (ClaimId::C12, Printed) => "exact",
            (ClaimId::C12, Companion) => "parity",
            (ClaimId::C13, Printed) => "strict",
            (ClaimId::C13, Companion) => "relaxed",
            _ => return None,
        })
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<ClaimId, String> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim '{s}' (expected C1..C13)"))
    }
}

/// Which statement of a claim is being judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimForm {
    /// The assertion exactly as written.
    Printed,
    /// The weaker statement the argument actually needs.
    Companion,
}

impl fmt::Display for ClaimForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimForm::Printed => "printed",
            ClaimForm::Companion => "companion",
        })
    }
}

/// A claim together with one of its forms, e.g. `C6-congruence`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClaimSelector {
    pub id: ClaimId,
    pub form: ClaimForm,
}

impl ClaimSelector {
    pub fn printed(id: ClaimId) -> ClaimSelector {
        ClaimSelector {
            id,
            form: ClaimForm::Printed,
        }
    }

    pub fn companion(id: ClaimId) -> ClaimSelector {
        ClaimSelector {
            id,
            form: ClaimForm::Companion,
        }
    }
}

impl fmt::Display for ClaimSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id.form_label(self.form) {
            Some(label) => write!(f, "{}-{}", self.id, label),
            None => write!(f, "{}", self.id),
        }
    }
}

impl FromStr for ClaimSelector {
    type Err = String;

    /// Accepts `C8`, `C6-equality`, `C6-congruence`, `C12-exact`,
    /// `C13-relaxed`, and the generic suffixes `-printed` / `-companion`.
    fn from_str(s: &str) -> std::result::Result<ClaimSelector, String> {
        let (head, suffix) = match s.split_once('-') {
            Some((h, t)) => (h, Some(t.to_ascii_lowercase())),
            None => (s, None),
        };
        let id: ClaimId = head.parse()?;
        let Some(suffix) = suffix else {
            return Ok(ClaimSelector::printed(id));
        };
        for form in [ClaimForm::Printed, ClaimForm::Companion] {
            let named = id.form_label(form) == Some(suffix.as_str());
            let generic =
                suffix == form.to_string() && (id.has_companion() || form == ClaimForm::Printed);
            if named || generic {
                return Ok(ClaimSelector { id, form });
            }
        }
        Err(format!("claim {id} has no form '{suffix}'"))
    }
}

/// What a full sweep is expected to show for one form of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Holds,
    HasCounterexamples,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormInfo {
    pub selector: String,
    pub statement: String,
    pub expected: Expected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimInfo {
    pub id: ClaimId,
    /// Where the assertion is made in the argument.
    pub source: String,
    pub printed: FormInfo,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub companion: Option<FormInfo>,
    pub needs_enumeration: bool,
}

fn registry_entry(id: ClaimId) -> ClaimInfo {
    use Expected::*;
    let (source, printed, printed_exp, companion): (
        &str,
        &str,
        Expected,
        Option<(&str, Expected)>,
    ) = match id {
        ClaimId::C1 => (
            "Gauss's lemma",
            "(q/p) = (-1)^N_p(q), checked against Euler's criterion",
            Holds,
            None,
        ),
        ClaimId::C2 => (
            "lattice proof: the line qx = py",
            "no point of S lies on the line qx = py",
            Holds,
            None,
        ),
        ClaimId::C3 => (
            "lattice proof: splitting S",
            "|S+| + |S-| = |S| = (p-1)(q-1)/4",
            Holds,
            None,
        ),
        ClaimId::C4 => (
            "lattice proof: central symmetry",
            "the central symmetry C is a fixed-point-free involution of S",
            HasCounterexamples,
            None,
        ),
        ClaimId::C5 => (
            "symmetry proposition",
            "the segment from a point to its image under C crosses qx = py",
            HasCounterexamples,
            None,
        ),
        ClaimId::C6 => (
            "lattice proof: identification with Gauss counts",
            "N_p(q) = |S+| and N_q(p) = |S-|",
            HasCounterexamples,
            Some(("N_p(q) = |S-| and N_q(p) = |S+| (mod 2)", Holds)),
        ),
        ClaimId::C7 => (
            "lattice proof: sum of Gauss counts",
            "N_p(q) + N_q(p) = (p-1)(q-1)/4",
            HasCounterexamples,
            Some(("N_p(q) + N_q(p) = (p-1)(q-1)/4 (mod 2)", Holds)),
        ),
        ClaimId::C8 => (
            "quadratic reciprocity",
            "(p/q)(q/p) = (-1)^((p-1)(q-1)/4)",
            Holds,
            None,
        ),
        ClaimId::C9 => (
            "residue involution x -> p - x",
            "r_(p-x) = p - r_x for x = 1..p-1",
            Holds,
            None,
        ),
        ClaimId::C10 => (
            "residue involution: full sign product",
            "product of eps_x over x = 1..p-1 equals (-1)^((p-1)/2)",
            Holds,
            None,
        ),
        ClaimId::C11 => (
            "residue involution: half sign product",
            "(-1)^N_p(q) equals the product of eps_x over x = 1..(p-1)/2",
            Holds,
            None,
        ),
        ClaimId::C12 => (
            "residue involution: floor-sum counts",
            "sum floor(qx/p) = |S-| and sum floor(py/q) = |S+|",
            Holds,
            Some((
                "sum floor(qx/p) = N_p(q) and sum floor(py/q) = N_q(p) (mod 2)",
                Holds,
            )),
        ),
        ClaimId::C13 => (
            "remark on orbit sizes",
            "every orbit of <H, V> on S has size 2 or 4",
            HasCounterexamples,
            Some(("every orbit of <H, V> on S has size 1, 2 or 4", Holds)),
        ),
    };
    ClaimInfo {
        id,
        source: source.to_string(),
        printed: FormInfo {
            selector: ClaimSelector::printed(id).to_string(),
            statement: printed.to_string(),
            expected: printed_exp,
        },
        companion: companion.map(|(statement, expected)| FormInfo {
            selector: ClaimSelector::companion(id).to_string(),
            statement: statement.to_string(),
            expected,
        }),
        needs_enumeration: id.needs_enumeration(),
    }
}

pub fn registry() -> Vec<ClaimInfo> {
    ClaimId::ALL.into_iter().map(registry_entry).collect()
}

/// The data a verdict was computed from. [`Witness::verdicts`] re-derives
/// both verdicts from these fields alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    GaussVsEuler {
        n_p_q: u64,
        gauss: LegendreValue,
        euler: LegendreValue,
    },
    LinePoints {
        points: Vec<(u64, u64)>,
    },
    Partition {
        n_plus: u64,
        n_minus: u64,
        total: u64,
    },
    CentralFixedPoints {
        fixed: Vec<(u64, u64)>,
    },
    SameSidePairs {
        pairs: Vec<CentralPair>,
    },
    LabelCounts {
        n_p_q: u64,
        n_q_p: u64,
        s_plus: u64,
        s_minus: u64,
    },
    CountSum {
        n_p_q: u64,
        n_q_p: u64,
        total: u64,
    },
    Reciprocity {
        symbol_p_q: LegendreValue,
        symbol_q_p: LegendreValue,
        exponent: u64,
    },
    Reflection {
        checked: u64,
        violations: Vec<u64>,
    },
    FullSignProduct {
        product: Sign,
        half: u64,
    },
    HalfSignProduct {
        product: Sign,
        n_p_q: u64,
    },
    FloorCounts {
        floor_sum_x: u64,
        floor_sum_y: u64,
        s_minus: u64,
        s_plus: u64,
        n_p_q: u64,
        n_q_p: u64,
    },
    /// `(size, number of orbits)`, ascending by size.
    OrbitSizes {
        sizes: Vec<(usize, usize)>,
    },
}

impl Witness {
    /// `(printed, companion)` verdicts implied by the witness.
    pub fn verdicts(&self) -> (bool, Option<bool>) {
        let same_parity = |a: u64, b: u64| a % 2 == b % 2;
        match self {
            Witness::GaussVsEuler {
                n_p_q,
                gauss,
                euler,
            } => (
                gauss == euler && LegendreValue::from(Sign::from_parity(*n_p_q)) == *gauss,
                None,
            ),
            Witness::LinePoints { points } => (points.is_empty(), None),
            Witness::Partition {
                n_plus,
                n_minus,
                total,
            } => (n_plus + n_minus == *total, None),
            Witness::CentralFixedPoints { fixed } => (fixed.is_empty(), None),
            Witness::SameSidePairs { pairs } => (pairs.is_empty(), None),
            Witness::LabelCounts {
                n_p_q,
                n_q_p,
                s_plus,
                s_minus,
            } => (
                n_p_q == s_plus && n_q_p == s_minus,
                Some(same_parity(*n_p_q, *s_minus) && same_parity(*n_q_p, *s_plus)),
            ),
            Witness::CountSum {
                n_p_q,
                n_q_p,
                total,
            } => (
                n_p_q + n_q_p == *total,
                Some(same_parity(n_p_q + n_q_p, *total)),
            ),
            Witness::Reciprocity {
                symbol_p_q,
                symbol_q_p,
                exponent,
            } => {
                let holds = match (symbol_p_q.sign(), symbol_q_p.sign()) {
                    (Some(a), Some(b)) => a * b == Sign::from_parity(*exponent),
                    _ => false,
                };
                (holds, None)
            }
            Witness::Reflection { violations, .. } => (violations.is_empty(), None),
            Witness::FullSignProduct { product, half } => {
                (*product == Sign::from_parity(*half), None)
            }
            Witness::HalfSignProduct { product, n_p_q } => {
                (*product == Sign::from_parity(*n_p_q), None)
            }
            Witness::FloorCounts {
                floor_sum_x,
                floor_sum_y,
                s_minus,
                s_plus,
                n_p_q,
                n_q_p,
            } => (
                floor_sum_x == s_minus && floor_sum_y == s_plus,
                Some(same_parity(*floor_sum_x, *n_p_q) && same_parity(*floor_sum_y, *n_q_p)),
            ),
            Witness::OrbitSizes { sizes } => (
                sizes.iter().all(|(s, _)| matches!(s, 2 | 4)),
                Some(sizes.iter().all(|(s, _)| matches!(s, 1 | 2 | 4))),
            ),
        }
    }

    /// One-line human summary, used in CSV and text output.
    pub fn summary(&self) -> String {
        fn pts(v: &[(u64, u64)]) -> String {
            let inner: Vec<String> = v.iter().map(|(x, y)| format!("({x},{y})")).collect();
            format!("[{}]", inner.join(" "))
        }
        match self {
            Witness::GaussVsEuler { n_p_q, gauss, euler } => {
                format!("N_p(q)={n_p_q} gauss={gauss} euler={euler}")
            }
            Witness::LinePoints { points } => format!("on_line={}", pts(points)),
            Witness::Partition { n_plus, n_minus, total } => {
                format!("|S+|={n_plus} |S-|={n_minus} |S|={total}")
            }
            Witness::CentralFixedPoints { fixed } => format!("fixed={}", pts(fixed)),
            Witness::SameSidePairs { pairs } => {
                let shown: Vec<String> = pairs
                    .iter()
                    .map(|c| {
                        format!(
                            "{{({},{}):{} ({},{}):{}}}",
                            c.first.x, c.first.y, c.first.side_value, c.second.x, c.second.y, c.second.side_value
                        )
                    })
                    .collect();
                format!("same_side={}", shown.join(" "))
            }
            Witness::LabelCounts { n_p_q, n_q_p, s_plus, s_minus } => {
                format!("N_p(q)={n_p_q} N_q(p)={n_q_p} |S+|={s_plus} |S-|={s_minus}")
            }
            Witness::CountSum { n_p_q, n_q_p, total } => {
                format!("N_p(q)+N_q(p)={}+{} |S|={total}", n_p_q, n_q_p)
            }
            Witness::Reciprocity { symbol_p_q, symbol_q_p, exponent } => {
                format!("(p/q)={symbol_p_q} (q/p)={symbol_q_p} exponent={exponent}")
            }
            Witness::Reflection { checked, violations } => {
                format!("checked={checked} violations={violations:?}")
            }
            Witness::FullSignProduct { product, half } => format!("product={product} (p-1)/2={half}"),
            Witness::HalfSignProduct { product, n_p_q } => format!("product={product} N_p(q)={n_p_q}"),
            Witness::FloorCounts { floor_sum_x, floor_sum_y, s_minus, s_plus, n_p_q, n_q_p } => format!(
                "sum_x={floor_sum_x} |S-|={s_minus} sum_y={floor_sum_y} |S+|={s_plus} N_p(q)={n_p_q} N_q(p)={n_q_p}"
            ),
            Witness::OrbitSizes { sizes } => {
                let parts: Vec<String> = sizes.iter().map(|(s, n)| format!("{s}x{n}")).collect();
                format!("orbit_sizes={}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: ClaimId,
    pub pair: PrimePair,
    /// Verdict on the printed form.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub companion_holds: Option<bool>,
    pub witness: Witness,
}

impl ClaimOutcome {
    pub fn holds_form(&self, form: ClaimForm) -> Option<bool> {
        match form {
            ClaimForm::Printed => Some(self.holds),
            ClaimForm::Companion => self.companion_holds,
        }
    }

    /// Re-derives the verdicts from the stored witness.
    pub fn is_consistent(&self) -> bool {
        self.witness.verdicts() == (self.holds, self.companion_holds)
    }
}

fn compute_witness(id: ClaimId, pair: PrimePair, cap: u64) -> Result<Witness> {
    let (p, q) = (pair.p(), pair.q());
    let rect = LatticeRect::new(pair);
    let n_p_q = || count_large_residues(q.get(), p).map(|c| c.n_large);
    let n_q_p = || count_large_residues(p.get(), q).map(|c| c.n_large);
    Ok(match id {
        ClaimId::C1 => Witness::GaussVsEuler {
            n_p_q: n_p_q()?,
            gauss: legendre_gauss(q.get(), p)?,
            euler: legendre_euler(q.get() as i64, p),
        },
        ClaimId::C2 => Witness::LinePoints {
            points: points_on_line(&rect),
        },
        ClaimId::C3 => {
            let c = partition_counts(&rect);
            Witness::Partition {
                n_plus: c.n_plus,
                n_minus: c.n_minus,
                total: c.total,
            }
        }
        ClaimId::C4 => Witness::CentralFixedPoints {
            fixed: fixed_points(SymmetryMap::Central, &rect, cap)?
                .fixed
                .iter()
                .map(|pt| pt.coords())
                .collect(),
        },
        ClaimId::C5 => Witness::SameSidePairs {
            pairs: side_flip_violations(&rect, cap)?,
        },
        ClaimId::C6 => {
            let c = partition_counts(&rect);
            Witness::LabelCounts {
                n_p_q: n_p_q()?,
                n_q_p: n_q_p()?,
                s_plus: c.n_plus,
                s_minus: c.n_minus,
            }
        }
        ClaimId::C7 => Witness::CountSum {
            n_p_q: n_p_q()?,
            n_q_p: n_q_p()?,
            total: rect.total(),
        },
        ClaimId::C8 => Witness::Reciprocity {
            symbol_p_q: legendre_euler(p.get() as i64, q),
            symbol_q_p: legendre_euler(q.get() as i64, p),
            exponent: pair.reciprocity_exponent(),
        },
        ClaimId::C9 => {
            let table = residue_table(q.get(), p)?;
            Witness::Reflection {
                checked: table.steps.len() as u64,
                violations: table.reflection_violations(),
            }
        }
        ClaimId::C10 => Witness::FullSignProduct {
            product: epsilon_product_full(q.get(), p)?,
            half: p.half(),
        },
        ClaimId::C11 => Witness::HalfSignProduct {
            product: epsilon_product_half(q.get(), p)?,
            n_p_q: n_p_q()?,
        },
        ClaimId::C12 => {
            let brute = classify_points(&rect, cap)?;
            Witness::FloorCounts {
                floor_sum_x: floor_sum(q.get(), p, p.half())?,
                floor_sum_y: floor_sum(p.get(), q, q.half())?,
                s_minus: brute.n_minus,
                s_plus: brute.n_plus,
                n_p_q: n_p_q()?,
                n_q_p: n_q_p()?,
            }
        }
        ClaimId::C13 => Witness::OrbitSizes {
            sizes: orbit_size_counts(&orbits(&rect, cap)?)
                .into_iter()
                .collect(),
        },
    })
}

/// Evaluates one claim on one ordered pair. Enumeration past `cap` fails
/// with an error naming the claim.
pub fn verify_claim(id: ClaimId, pair: PrimePair, cap: u64) -> Result<ClaimOutcome> {
    let witness = compute_witness(id, pair, cap).map_err(|e| Error::Claim {
        claim: id.to_string(),
        source: Box::new(e),
    })?;
    let (holds, companion_holds) = witness.verdicts();
    Ok(ClaimOutcome {
        claim: id,
        pair,
        holds,
        companion_holds,
        witness,
    })
}

/// Ordered pairs of distinct odd primes below `bound`, lexicographic.
pub fn prime_pairs_below(bound: u64) -> Vec<PrimePair> {
    let primes = odd_primes_below(bound);
    let mut pairs = Vec::with_capacity(primes.len() * primes.len());
    for &p in &primes {
        for &q in &primes {
            if let Ok(pair) = PrimePair::new(p, q) {
                pairs.push(pair);
            }
        }
    }
    pairs
}

fn check_bound(bound: u64) -> Result<()> {
    if bound < 5 {
        return Err(Error::BoundTooSmall(bound));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub bound: u64,
    pub claims: BTreeSet<ClaimId>,
    pub counterexample_limit: usize,
    pub cap: u64,
}

impl SweepConfig {
    pub fn new(bound: u64, claims: impl IntoIterator<Item = ClaimId>) -> SweepConfig {
        SweepConfig {
            bound,
            claims: claims.into_iter().collect(),
            counterexample_limit: DEFAULT_COUNTEREXAMPLE_LIMIT,
            cap: crate::lattice::DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub pair: PrimePair,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSummary {
    pub pairs_failed: u64,
    pub first_counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    /// All ordered pairs considered, skipped ones included.
    pub pairs_tested: u64,
    /// Pairs whose enumeration would exceed the cap.
    pub pairs_skipped: u64,
    pub pairs_failed: u64,
    pub first_counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub companion: Option<FormSummary>,
}

impl ClaimSummary {
    pub fn failures(&self, form: ClaimForm) -> Option<u64> {
        match form {
            ClaimForm::Printed => Some(self.pairs_failed),
            ClaimForm::Companion => self.companion.as_ref().map(|c| c.pairs_failed),
        }
    }

    pub fn counterexamples(&self, form: ClaimForm) -> Option<&[Counterexample]> {
        match form {
            ClaimForm::Printed => Some(&self.first_counterexamples),
            ClaimForm::Companion => self
                .companion
                .as_ref()
                .map(|c| c.first_counterexamples.as_slice()),
        }
    }
}

/// One verdict of one form of one claim on one pair. `holds` is `None` when
/// the pair was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub claim_id: ClaimId,
    pub p: u64,
    pub q: u64,
    pub form: ClaimForm,
    pub holds: Option<bool>,
    pub witness_summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub bound: u64,
    pub counterexample_limit: usize,
    pub cap: u64,
    pub per_claim: BTreeMap<ClaimId, ClaimSummary>,
    pub verdicts: Vec<VerdictRow>,
}

/// Evaluates every selected claim on every ordered pair below the bound.
/// Pairs are evaluated in parallel and merged in lexicographic order.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    check_bound(config.bound)?;
    let pairs = prime_pairs_below(config.bound);
    let claims: Vec<ClaimId> = config.claims.iter().copied().collect();
    let results: Vec<Vec<Result<ClaimOutcome>>> = pairs
        .par_iter()
        .map(|&pair| {
            claims
                .iter()
                .map(|&id| verify_claim(id, pair, config.cap))
                .collect()
        })
        .collect();

    let mut per_claim: BTreeMap<ClaimId, ClaimSummary> = claims
        .iter()
        .map(|&id| {
            let summary = ClaimSummary {
                pairs_tested: pairs.len() as u64,
                pairs_skipped: 0,
                pairs_failed: 0,
                first_counterexamples: Vec::new(),
                companion: id.has_companion().then(|| FormSummary {
                    pairs_failed: 0,
                    first_counterexamples: Vec::new(),
                }),
            };
            (id, summary)
        })
        .collect();
    let mut verdicts = Vec::new();
    let limit = config.counterexample_limit;

    for (pair, row) in pairs.iter().zip(results) {
        for (&id, result) in claims.iter().zip(row) {
            let summary = per_claim
                .get_mut(&id)
                .expect("summary seeded for every claim");
            let forms: &[ClaimForm] = if id.has_companion() {
                &[ClaimForm::Printed, ClaimForm::Companion]
            } else {
                &[ClaimForm::Printed]
            };
            let outcome = match result {
                Ok(o) => o,
                Err(e) if e.is_resource() => {
                    summary.pairs_skipped += 1;
                    for &form in forms {
                        verdicts.push(VerdictRow {
                            claim_id: id,
                            p: pair.p().get(),
                            q: pair.q().get(),
                            form,
                            holds: None,
                            witness_summary: "skipped: enumeration cap".to_string(),
                        });
                    }
                    continue;
                }
                Err(e) => return Err(e),
            };
            let witness_summary = outcome.witness.summary();
            for &form in forms {
                let holds = outcome
                    .holds_form(form)
                    .expect("form exists for this claim");
                verdicts.push(VerdictRow {
                    claim_id: id,
                    p: pair.p().get(),
                    q: pair.q().get(),
                    form,
                    holds: Some(holds),
                    witness_summary: witness_summary.clone(),
                });
                if holds {
                    continue;
                }
                let (failed, examples) = match form {
                    ClaimForm::Printed => (
                        &mut summary.pairs_failed,
                        &mut summary.first_counterexamples,
                    ),
                    ClaimForm::Companion => {
                        let c = summary
                            .companion
                            .as_mut()
                            .expect("companion summary seeded");
                        (&mut c.pairs_failed, &mut c.first_counterexamples)
                    }
                };
                *failed += 1;
                if examples.len() < limit {
                    examples.push(Counterexample {
                        pair: *pair,
                        witness: outcome.witness.clone(),
                    });
                }
            }
        }
    }

    Ok(SweepReport {
        bound: config.bound,
        counterexample_limit: limit,
        cap: config.cap,
        per_claim,
        verdicts,
    })
}

/// Lexicographically least pair below `bound` on which the selected form
/// fails. Pairs beyond the enumeration cap are passed over.
pub fn find_counterexample(
    selector: ClaimSelector,
    bound: u64,
    cap: u64,
) -> Result<Option<Counterexample>> {
    check_bound(bound)?;
    if selector.form == ClaimForm::Companion && !selector.id.has_companion() {
        return Err(Error::NoCompanionForm(selector.id.to_string()));
    }
    for pair in prime_pairs_below(bound) {
        let outcome = match verify_claim(selector.id, pair, cap) {
            Ok(o) => o,
            Err(e) if e.is_resource() => continue,
            Err(e) => return Err(e),
        };
        if outcome.holds_form(selector.form) == Some(false) {
            return Ok(Some(Counterexample {
                pair,
                witness: outcome.witness,
            }));
        }
    }
    Ok(None)
}
