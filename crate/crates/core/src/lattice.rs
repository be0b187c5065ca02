//! The rectangle `S = [1, (p-1)/2] × [1, (q-1)/2]` and its split by the
//! line `q·x = p·y`.
//!
//! Side convention: a point's `side_value` is `q·x - p·y`. Negative values
//! (`q·x < p·y`, above the line) form `S_+`; positive values form `S_-`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::{check_multiplier, LegendreValue, OddPrime, PrimePair, Sign};
use crate::error::{Error, Result};

/// Default ceiling on the number of points any enumerating operation visits.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeRect {
    pub pair: PrimePair,
    pub width: u64,
    pub height: u64,
}

impl LatticeRect {
    pub fn new(pair: PrimePair) -> LatticeRect {
        LatticeRect {
            pair,
            width: pair.p().half(),
            height: pair.q().half(),
        }
    }

    pub fn from_u64(p: u64, q: u64) -> Result<LatticeRect> {
        Ok(LatticeRect::new(PrimePair::from_u64(p, q)?))
    }

    pub fn p(&self) -> u64 {
        self.pair.p().get()
    }

    pub fn q(&self) -> u64 {
        self.pair.q().get()
    }

    /// `|S| = (p-1)(q-1)/4`.
    pub fn total(&self) -> u64 {
        self.width * self.height
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        (1..=self.width).contains(&x) && (1..=self.height).contains(&y)
    }

    /// `q·x - p·y`.
    pub fn side_value(&self, x: u64, y: u64) -> i64 {
        (self.q() * x) as i64 - (self.p() * y) as i64
    }

    pub fn point(&self, x: u64, y: u64) -> Result<LatticePoint> {
        if !self.contains(x, y) {
            return Err(Error::PointOutsideRect {
                x,
                y,
                width: self.width,
                height: self.height,
            });
        }
        Ok(LatticePoint {
            x,
            y,
            side_value: self.side_value(x, y),
        })
    }

    /// Fails unless enumerating all of `S` stays within `cap`.
    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let needed = self.total();
        if needed > cap {
            return Err(Error::CapExceeded { needed, cap });
        }
        Ok(())
    }

    /// Every point of `S` once, `x` ascending then `y` ascending.
    pub fn enumerate_points(&self, cap: u64) -> Result<Points> {
        self.check_cap(cap)?;
        Ok(Points {
            rect: *self,
            x: 1,
            y: 1,
        })
    }
}

/// Which side of `q·x = p·y` a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `q·x < p·y`
    Plus,
    /// `q·x > p·y`
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: u64,
    pub y: u64,
    pub side_value: i64,
}

impl LatticePoint {
    /// `None` only for a point on the line, which cannot occur inside `S`.
    pub fn side(&self) -> Option<Side> {
        match self.side_value.cmp(&0) {
            Ordering::Less => Some(Side::Plus),
            Ordering::Greater => Some(Side::Minus),
            Ordering::Equal => None,
        }
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.x, self.y)
    }
}

/// Row-major iterator over the points of a rectangle.
#[derive(Debug, Clone)]
pub struct Points {
    rect: LatticeRect,
    x: u64,
    y: u64,
}

impl Iterator for Points {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        if self.x > self.rect.width || self.rect.height == 0 {
            return None;
        }
        let pt = LatticePoint {
            x: self.x,
            y: self.y,
            side_value: self.rect.side_value(self.x, self.y),
        };
        if self.y == self.rect.height {
            self.y = 1;
            self.x += 1;
        } else {
            self.y += 1;
        }
        Some(pt)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let done = if self.x > self.rect.width {
            self.rect.total()
        } else {
            (self.x - 1) * self.rect.height + (self.y - 1)
        };
        let left = (self.rect.total() - done) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Points {}

/// `|S_+|`, `|S_-|` and `|S|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCounts {
    pub n_plus: u64,
    pub n_minus: u64,
    pub total: u64,
}

impl PartitionCounts {
    pub fn is_complete(&self) -> bool {
        self.n_plus + self.n_minus == self.total
    }
}

/// Counts both sides with floor sums; no enumeration, no cap.
pub fn partition_counts(rect: &LatticeRect) -> PartitionCounts {
    let (p, q) = (rect.pair.p(), rect.pair.q());
    PartitionCounts {
        n_plus: floor_sum_unchecked(p.get(), q.get(), rect.height),
        n_minus: floor_sum_unchecked(q.get(), p.get(), rect.width),
        total: rect.total(),
    }
}

/// Counts both sides by visiting every point. Points on the line, if there
/// were any, would be counted on neither side.
pub fn classify_points(rect: &LatticeRect, cap: u64) -> Result<PartitionCounts> {
    let mut counts = PartitionCounts {
        n_plus: 0,
        n_minus: 0,
        total: rect.total(),
    };
    for pt in rect.enumerate_points(cap)? {
        match pt.side() {
            Some(Side::Plus) => counts.n_plus += 1,
            Some(Side::Minus) => counts.n_minus += 1,
            None => {}
        }
    }
    Ok(counts)
}

/// Points of `S` on `q·x = p·y`, found by testing `p | q·x` column by column.
pub fn points_on_line(rect: &LatticeRect) -> Vec<(u64, u64)> {
    let (p, q) = (rect.p(), rect.q());
    (1..=rect.width)
        .filter(|&x| q * x % p == 0)
        .map(|x| (x, q * x / p))
        .filter(|&(x, y)| rect.contains(x, y))
        .collect()
}

/// `Σ_{x=0}^{n-1} floor((a·x + b) / m)` by the Euclidean-like reduction.
fn floor_sum_from_zero(mut n: u128, mut m: u128, mut a: u128, mut b: u128) -> u128 {
    let mut acc = 0;
    loop {
        if a >= m {
            acc += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            acc += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            return acc;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
}

fn floor_sum_unchecked(a: u64, m: u64, upper: u64) -> u64 {
    floor_sum_from_zero(upper as u128 + 1, m as u128, a as u128, 0) as u64
}

/// `Σ_{x=1}^{upper} floor(a·x / m)`, with `gcd(a, m) = 1` and `upper < m`.
pub fn floor_sum(a: u64, m: OddPrime, upper: u64) -> Result<u64> {
    check_multiplier(a)?;
    m.ensure_coprime(a)?;
    if upper == 0 || upper >= m.get() {
        return Err(Error::MultiplierOutOfRange {
            x: upper,
            max: m.get() - 1,
        });
    }
    Ok(floor_sum_unchecked(a, m.get(), upper))
}

/// Legendre symbol as `(-1)^Σ floor(q·x/p)` over the half-system. `q` must
/// be odd and coprime to `p`.
pub fn legendre_eisenstein(q: u64, p: OddPrime) -> Result<LegendreValue> {
    check_multiplier(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::EvenArgument(q));
    }
    p.ensure_coprime(q)?;
    Ok(Sign::from_parity(floor_sum(q, p, p.half())?).into())
}
