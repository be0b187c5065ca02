//! Exact integer primitives: primality, the Euler-criterion Legendre symbol,
//! Euclidean-division records and the half-system `1..=(p-1)/2`.
//!
//! Everything works in `u64`. Inputs are bounded by [`MAX_INPUT`] so that a
//! product of two admissible values never overflows.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg, RangeInclusive};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest value accepted by the primality test and by prime constructors.
pub const MAX_INPUT: u64 = 1 << 32;

/// A sign in `{-1, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_parity(exponent: u64) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("{other} is not a sign")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// Value of a Legendre symbol: `-1`, `0` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum LegendreValue {
    NonResidue,
    Zero,
    Residue,
}

impl LegendreValue {
    pub fn as_i8(self) -> i8 {
        match self {
            LegendreValue::NonResidue => -1,
            LegendreValue::Zero => 0,
            LegendreValue::Residue => 1,
        }
    }

    /// The sign, or `None` for [`LegendreValue::Zero`].
    pub fn sign(self) -> Option<Sign> {
        match self {
            LegendreValue::NonResidue => Some(Sign::Minus),
            LegendreValue::Zero => None,
            LegendreValue::Residue => Some(Sign::Plus),
        }
    }
}

impl From<Sign> for LegendreValue {
    fn from(s: Sign) -> LegendreValue {
        match s {
            Sign::Plus => LegendreValue::Residue,
            Sign::Minus => LegendreValue::NonResidue,
        }
    }
}

impl From<LegendreValue> for i8 {
    fn from(v: LegendreValue) -> i8 {
        v.as_i8()
    }
}

impl TryFrom<i8> for LegendreValue {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<LegendreValue, String> {
        match v {
            -1 => Ok(LegendreValue::NonResidue),
            0 => Ok(LegendreValue::Zero),
            1 => Ok(LegendreValue::Residue),
            other => Err(format!("{other} is not a Legendre symbol value")),
        }
    }
}

impl fmt::Display for LegendreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// Deterministic trial-division test for odd primes.
pub fn is_odd_prime(n: u64) -> Result<bool> {
    if n == 0 || n > MAX_INPUT {
        return Err(Error::OutOfRange {
            value: n,
            max: MAX_INPUT,
        });
    }
    if n < 3 || n.is_multiple_of(2) {
        return Ok(false);
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Ok(false);
        }
        d += 2;
    }
    Ok(true)
}

/// An odd prime, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u64", try_from = "u64")]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(n: u64) -> Result<OddPrime> {
        if is_odd_prime(n)? {
            Ok(OddPrime(n))
        } else {
            Err(Error::NotOddPrime(n))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `(p - 1) / 2`, the size of the half-system.
    pub fn half(self) -> u64 {
        (self.0 - 1) / 2
    }

    /// Fails with [`Error::NotCoprime`] when `p | a`.
    pub fn ensure_coprime(self, a: u64) -> Result<()> {
        if a.is_multiple_of(self.0) {
            Err(Error::NotCoprime {
                value: a,
                modulus: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl From<OddPrime> for u64 {
    fn from(p: OddPrime) -> u64 {
        p.0
    }
}

impl TryFrom<u64> for OddPrime {
    type Error = Error;

    fn try_from(n: u64) -> Result<OddPrime> {
        OddPrime::new(n)
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered pair of distinct odd primes `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct PrimePair {
    p: OddPrime,
    q: OddPrime,
}

#[derive(Deserialize)]
struct RawPair {
    p: u64,
    q: u64,
}

impl TryFrom<RawPair> for PrimePair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<PrimePair> {
        PrimePair::from_u64(raw.p, raw.q)
    }
}

impl PrimePair {
    pub fn new(p: OddPrime, q: OddPrime) -> Result<PrimePair> {
        if p == q {
            return Err(Error::EqualPrimes(p.get()));
        }
        Ok(PrimePair { p, q })
    }

    pub fn from_u64(p: u64, q: u64) -> Result<PrimePair> {
        PrimePair::new(OddPrime::new(p)?, OddPrime::new(q)?)
    }

    pub fn p(self) -> OddPrime {
        self.p
    }

    pub fn q(self) -> OddPrime {
        self.q
    }

    /// The same pair with the roles of `p` and `q` exchanged.
    pub fn swapped(self) -> PrimePair {
        PrimePair {
            p: self.q,
            q: self.p,
        }
    }

    /// `(p - 1)(q - 1) / 4`.
    pub fn reciprocity_exponent(self) -> u64 {
        self.p.half() * self.q.half()
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    // modulus <= 2^32, so every product below fits in u64
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` by Euler's criterion, `a^((p-1)/2) mod p`.
pub fn legendre_euler(a: i64, p: OddPrime) -> LegendreValue {
    let m = p.get();
    let reduced = (a as i128).rem_euclid(m as i128) as u64;
    if reduced == 0 {
        return LegendreValue::Zero;
    }
    match pow_mod(reduced, p.half(), m) {
        1 => LegendreValue::Residue,
        r => {
            assert_eq!(
                r,
                m - 1,
                "Euler's criterion must yield +-1 for a prime modulus"
            );
            LegendreValue::NonResidue
        }
    }
}

/// One division `q·x = p·m_x + r_x` together with the sign of `r_x` relative
/// to `p/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EuclideanStep {
    pub x: u64,
    /// `floor(q·x / p)`
    pub quotient: u64,
    /// `q·x mod p`, never zero
    pub remainder: u64,
    /// `+1` when the remainder is below `p/2`, `-1` above it
    pub sign: Sign,
}

pub(crate) fn check_multiplier(q: u64) -> Result<()> {
    if q == 0 || q > MAX_INPUT {
        return Err(Error::OutOfRange {
            value: q,
            max: MAX_INPUT,
        });
    }
    Ok(())
}

pub(crate) fn remainder_sign(r: u64, p: OddPrime) -> Sign {
    // 2r == p is impossible for odd p
    debug_assert_ne!(2 * r, p.get());
    if 2 * r < p.get() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Divides `q·x` by `p`. Requires `1 <= x <= p - 1` and `p ∤ q`.
pub fn euclid_step(q: u64, p: OddPrime, x: u64) -> Result<EuclideanStep> {
    check_multiplier(q)?;
    p.ensure_coprime(q)?;
    let m = p.get();
    if x == 0 || x >= m {
        return Err(Error::MultiplierOutOfRange { x, max: m - 1 });
    }
    let product = q * x;
    let remainder = product % m;
    assert!(
        remainder != 0,
        "p divides neither q nor x, so it cannot divide qx"
    );
    Ok(EuclideanStep {
        x,
        quotient: product / m,
        remainder,
        sign: remainder_sign(remainder, p),
    })
}

/// The half-system `1, 2, ..., (p-1)/2` modulo an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfSystem {
    modulus: OddPrime,
}

impl HalfSystem {
    pub fn modulus(&self) -> OddPrime {
        self.modulus
    }

    pub fn elements(&self) -> RangeInclusive<u64> {
        1..=self.modulus.half()
    }

    pub fn len(&self) -> usize {
        self.modulus.half() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.elements().collect()
    }
}

pub fn half_system(p: OddPrime) -> HalfSystem {
    HalfSystem { modulus: p }
}

/// Odd primes in `3..bound`, ascending.
pub fn odd_primes_below(bound: u64) -> Vec<OddPrime> {
    (3..bound.min(MAX_INPUT + 1))
        .step_by(2)
        .filter(|&n| is_odd_prime(n).unwrap_or(false))
        .map(OddPrime)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: u64) -> OddPrime {
        OddPrime::new(n).unwrap()
    }

    #[test]
    fn primality_examples() {
        assert!(!is_odd_prime(2).unwrap());
        assert!(is_odd_prime(3).unwrap());
        assert!(!is_odd_prime(91).unwrap());
        assert!(!is_odd_prime(1).unwrap());
        assert!(is_odd_prime(4_294_967_291).unwrap());
        assert_eq!(
            is_odd_prime(0),
            Err(Error::OutOfRange {
                value: 0,
                max: MAX_INPUT
            })
        );
        assert!(is_odd_prime(MAX_INPUT + 1).is_err());
    }

    #[test]
    fn primality_matches_naive_sieve() {
        let n = 5000usize;
        let mut composite = vec![false; n];
        for i in 2..n {
            if !composite[i] {
                for j in (i * i..n).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        for (i, &c) in composite.iter().enumerate().skip(1) {
            let expected = i > 2 && !c;
            assert_eq!(is_odd_prime(i as u64).unwrap(), expected, "n = {i}");
        }
    }

    #[test]
    fn pair_rejects_equal_and_nonprime() {
        assert_eq!(PrimePair::from_u64(3, 3), Err(Error::EqualPrimes(3)));
        assert_eq!(PrimePair::from_u64(9, 5), Err(Error::NotOddPrime(9)));
        assert_eq!(PrimePair::from_u64(2, 5), Err(Error::NotOddPrime(2)));
        let pair = PrimePair::from_u64(7, 5).unwrap();
        assert_eq!(pair.reciprocity_exponent(), 6);
        assert_eq!(pair.swapped(), PrimePair::from_u64(5, 7).unwrap());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(legendre_euler(1, prime(5)), LegendreValue::Residue);
        assert_eq!(legendre_euler(10, prime(5)), LegendreValue::Zero);
        assert_eq!(legendre_euler(2, prime(5)), LegendreValue::NonResidue);
        assert_eq!(legendre_euler(4, prime(7)), LegendreValue::Residue);
        assert_eq!(legendre_euler(-1, prime(5)), LegendreValue::Residue);
        assert_eq!(legendre_euler(-1, prime(7)), LegendreValue::NonResidue);
    }

    fn squares_mod(p: u64) -> Vec<bool> {
        let mut sq = vec![false; p as usize];
        for x in 1..p {
            sq[(x * x % p) as usize] = true;
        }
        sq
    }

    #[test]
    fn euler_matches_enumerated_squares() {
        for p in odd_primes_below(200) {
            let sq = squares_mod(p.get());
            for a in 0..p.get() {
                let expected = if a == 0 {
                    LegendreValue::Zero
                } else if sq[a as usize] {
                    LegendreValue::Residue
                } else {
                    LegendreValue::NonResidue
                };
                assert_eq!(legendre_euler(a as i64, p), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn euler_is_periodic_and_multiplicative() {
        for p in odd_primes_below(50) {
            let m = p.get() as i64;
            for a in -2 * m..3 * m {
                assert_eq!(legendre_euler(a, p), legendre_euler(a.rem_euclid(m), p));
            }
            for a in 0..m {
                for b in 0..m {
                    let lhs = legendre_euler(a * b, p).as_i8();
                    let rhs = legendre_euler(a, p).as_i8() * legendre_euler(b, p).as_i8();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn euclid_step_examples() {
        let s = euclid_step(5, prime(3), 1).unwrap();
        assert_eq!(
            (s.x, s.quotient, s.remainder, s.sign),
            (1, 1, 2, Sign::Minus)
        );
        let s = euclid_step(3, prime(5), 2).unwrap();
        assert_eq!(
            (s.x, s.quotient, s.remainder, s.sign),
            (2, 1, 1, Sign::Plus)
        );
        let s = euclid_step(7, prime(5), 4).unwrap();
        assert_eq!(
            (s.x, s.quotient, s.remainder, s.sign),
            (4, 5, 3, Sign::Minus)
        );
    }

    #[test]
    fn euclid_step_errors() {
        assert_eq!(
            euclid_step(10, prime(5), 1),
            Err(Error::NotCoprime {
                value: 10,
                modulus: 5
            })
        );
        assert_eq!(
            euclid_step(3, prime(5), 0),
            Err(Error::MultiplierOutOfRange { x: 0, max: 4 })
        );
        assert_eq!(
            euclid_step(3, prime(5), 5),
            Err(Error::MultiplierOutOfRange { x: 5, max: 4 })
        );
    }

    #[test]
    fn euclid_reconstruction() {
        for p in odd_primes_below(60) {
            for q in 1..120u64 {
                if q % p.get() == 0 {
                    continue;
                }
                for x in 1..p.get() {
                    let s = euclid_step(q, p, x).unwrap();
                    assert_eq!(p.get() * s.quotient + s.remainder, q * x);
                    assert!(s.remainder > 0 && s.remainder < p.get());
                }
            }
        }
    }

    #[test]
    fn half_system_examples() {
        assert_eq!(half_system(prime(3)).to_vec(), vec![1]);
        assert_eq!(half_system(prime(5)).to_vec(), vec![1, 2]);
        assert_eq!(half_system(prime(13)).to_vec(), (1..=6).collect::<Vec<_>>());
        assert_eq!(half_system(prime(13)).len(), 6);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_parity(7), Sign::Minus);
        assert_eq!([Sign::Minus; 3].into_iter().product::<Sign>(), Sign::Minus);
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "-1");
        assert_eq!(
            serde_json::from_str::<LegendreValue>("0").unwrap(),
            LegendreValue::Zero
        );
    }

    #[test]
    fn odd_primes_listing() {
        let v: Vec<u64> = odd_primes_below(20)
            .into_iter()
            .map(OddPrime::get)
            .collect();
        assert_eq!(v, vec![3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(odd_primes_below(200).len(), 45);
    }
}
