//! Gauss's lemma and the residue involution `x ↦ p - x`.

use serde::{Deserialize, Serialize};

use crate::arith::{
    check_multiplier, euclid_step, remainder_sign, EuclideanStep, LegendreValue, OddPrime, Sign,
};
use crate::error::Result;

/// `N_p(a)`: how many of `a, 2a, ..., (p-1)/2·a` reduce above `p/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussCount {
    pub p: OddPrime,
    pub a: u64,
    pub n_large: u64,
}

impl GaussCount {
    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.n_large)
    }
}

/// Streams over the half-system without building a table. `a` is reduced
/// modulo `p` first; `p | a` is rejected.
pub fn count_large_residues(a: u64, p: OddPrime) -> Result<GaussCount> {
    check_multiplier(a)?;
    p.ensure_coprime(a)?;
    let m = p.get();
    let step = a % m;
    let mut residue = 0;
    let mut n_large = 0;
    for _ in 0..p.half() {
        residue += step;
        if residue >= m {
            residue -= m;
        }
        if 2 * residue > m {
            n_large += 1;
        }
    }
    Ok(GaussCount { p, a, n_large })
}

/// Legendre symbol by Gauss's lemma, `(-1)^N_p(a)`.
pub fn legendre_gauss(a: u64, p: OddPrime) -> Result<LegendreValue> {
    Ok(count_large_residues(a, p)?.sign().into())
}

/// All divisions `q·x = p·m_x + r_x` for `x = 1..=p-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueTable {
    pub p: OddPrime,
    pub q: u64,
    /// `steps[i]` is the division for `x = i + 1`.
    pub steps: Vec<EuclideanStep>,
}

impl ResidueTable {
    pub fn step(&self, x: u64) -> &EuclideanStep {
        &self.steps[(x - 1) as usize]
    }

    pub fn remainders(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.remainder).collect()
    }

    /// Values of `x` for which `r_{p-x} = p - r_x` or `ε_{p-x} = -ε_x` fails.
    pub fn reflection_violations(&self) -> Vec<u64> {
        let m = self.p.get();
        (1..m)
            .filter(|&x| {
                let a = self.step(x);
                let b = self.step(m - x);
                b.remainder + a.remainder != m || b.sign != -a.sign
            })
            .collect()
    }

    /// True when the remainders are a permutation of `1..=p-1`.
    pub fn is_permutation(&self) -> bool {
        let m = self.p.get() as usize;
        let mut seen = vec![false; m];
        for s in &self.steps {
            let r = s.remainder as usize;
            if r == 0 || r >= m || seen[r] {
                return false;
            }
            seen[r] = true;
        }
        self.steps.len() == m - 1
    }

    /// `(#{r_x < p/2}, #{r_x > p/2})` over the full table.
    pub fn balance(&self) -> (u64, u64) {
        let small = self.steps.iter().filter(|s| s.sign == Sign::Plus).count() as u64;
        (small, self.steps.len() as u64 - small)
    }
}

pub fn residue_table(q: u64, p: OddPrime) -> Result<ResidueTable> {
    let steps = (1..p.get())
        .map(|x| euclid_step(q, p, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidueTable { p, q, steps })
}

fn epsilon_product(q: u64, p: OddPrime, upper: u64) -> Result<Sign> {
    check_multiplier(q)?;
    p.ensure_coprime(q)?;
    let m = p.get();
    Ok((1..=upper).map(|x| remainder_sign(q * x % m, p)).product())
}

/// `∏ ε_x` over `x = 1..=p-1`; always `(-1)^((p-1)/2)`.
pub fn epsilon_product_full(q: u64, p: OddPrime) -> Result<Sign> {
    epsilon_product(q, p, p.get() - 1)
}

/// `∏ ε_x` over the half-system; always `(-1)^N_p(q)`.
pub fn epsilon_product_half(q: u64, p: OddPrime) -> Result<Sign> {
    epsilon_product(q, p, p.half())
}
