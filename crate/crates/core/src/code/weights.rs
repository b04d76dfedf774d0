//! Weight distributions, the MacWilliams transform, MDS-type classification
//! and the Assmus–Mattson hypothesis.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// Exact counts `A_0..A_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> WeightDistribution {
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> WeightDistribution {
        WeightDistribution { counts: counts.iter().map(|&c| BigUint::from(c)).collect() }
    }

    /// Length `n`; the distribution has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    pub fn get_u64(&self, i: usize) -> Option<u64> {
        self.get(i).to_u64()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight carrying a codeword.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    /// Checks `A_0 = 1` and `sum A_i = q^k`.
    pub fn validate(&self, q: u64, k: usize) -> Result<()> {
        if self.counts.first() != Some(&BigUint::one()) {
            return Err(precondition("A_0 must be 1"));
        }
        let expected = BigUint::from(q).pow(k as u32);
        if self.total() != expected {
            return Err(precondition(format!("counts sum to {} instead of q^k = {expected}", self.total())));
        }
        Ok(())
    }

    /// JSON array `[A_0, ..., A_n]` of bare integers.
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(", "))
    }

    pub fn from_json(s: &str) -> Result<WeightDistribution> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("weight distribution must be a JSON array".into()))?;
        if inner.trim().is_empty() {
            return Ok(WeightDistribution::new(Vec::new()));
        }
        let counts = inner
            .split(',')
            .map(|t| t.trim().parse::<BigUint>().map_err(|e| Error::Parse(format!("`{}`: {e}", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightDistribution::new(counts))
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Values of the Krawtchouk polynomial `K_j(i)` for all `i`, as a row.
fn krawtchouk_row(n: usize, q: u64, j: usize) -> Vec<BigInt> {
    let qm1 = BigInt::from(q - 1);
    (0..=n)
        .map(|i| {
            let mut sum = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = qm1.clone().pow((j - s) as u32) * binom(i, s) * binom(n - i, j - s);
                if s.is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        })
        .collect()
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `A'_j = q^-k sum_i A_i K_j(i)`: the dual distribution of an `[n, k]` code.
pub fn macwilliams_transform(dist: &WeightDistribution, n: usize, k: usize, q: u64) -> Result<WeightDistribution> {
    if dist.counts.len() != n + 1 {
        return Err(precondition(format!("distribution has {} entries, expected {}", dist.counts.len(), n + 1)));
    }
    let size = BigInt::from(q).pow(k as u32);
    let a: Vec<BigInt> = dist.counts.iter().map(|c| BigInt::from(c.clone())).collect();
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let row = krawtchouk_row(n, q, j);
        let sum: BigInt = row.iter().zip(&a).map(|(kj, ai)| kj * ai).sum();
        let (quot, rem) = sum.div_rem(&size);
        if !rem.is_zero() || quot.is_negative() {
            return Err(precondition(format!("MacWilliams sum at weight {j} is not a nonnegative multiple of q^k")));
        }
        out.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightDistribution::new(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MdsClass {
    Mds,
    /// `d = n - k` but the dual is not AMDS.
    Amds,
    Nmds,
    Neither,
}

impl fmt::Display for MdsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MdsClass::Mds => "MDS",
            MdsClass::Amds => "AMDS",
            MdsClass::Nmds => "NMDS",
            MdsClass::Neither => "neither",
        })
    }
}

pub fn classify_mds(n: usize, k: usize, d: usize, d_dual: usize) -> MdsClass {
    if d == n - k + 1 {
        MdsClass::Mds
    } else if d == n - k && d_dual == k {
        MdsClass::Nmds
    } else if d == n - k {
        MdsClass::Amds
    } else {
        MdsClass::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmReport {
    pub t: usize,
    pub d: usize,
    pub d_dual: usize,
    pub w: usize,
    pub w_dual: usize,
    /// Nonzero `A^perp_i` for `1 <= i <= n - t`.
    pub s: usize,
    pub hypothesis_holds: bool,
}

fn am_w(n: usize, q: u64, d: usize) -> usize {
    let q = q as usize;
    (0..=n).rev().find(|&w| w - (w + q - 2) / (q - 1) < d).unwrap_or(0)
}

/// Evaluates the hypothesis `t < d` and `s <= d - t` of the Assmus–Mattson
/// theorem for a code and its dual.
pub fn assmus_mattson_check(dist: &WeightDistribution, dual: &WeightDistribution, t: usize, q: u64) -> Result<AmReport> {
    let n = dist.n();
    if dual.n() != n {
        return Err(precondition("distributions have different lengths"));
    }
    let d = dist.min_distance().ok_or_else(|| precondition("code has no nonzero codeword"))?;
    let d_dual = dual.min_distance().ok_or_else(|| precondition("dual has no nonzero codeword"))?;
    let s = (1..=n.saturating_sub(t)).filter(|&i| !dual.counts[i].is_zero()).count();
    Ok(AmReport {
        t,
        d,
        d_dual,
        w: am_w(n, q, d),
        w_dual: am_w(n, q, d_dual),
        s,
        hypothesis_holds: t < d && s + t <= d,
    })
}
