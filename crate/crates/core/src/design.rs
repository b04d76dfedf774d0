//! Exact t-design verification by dense coverage counting.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{Block, BlockFamily};
use crate::combinatorics::{binomial, check_budget, for_each_subset, BinomialTable, DEFAULT_BUDGET};
use crate::error::{internal, precondition, Result};

/// Points `0..v` with a list of distinct blocks of common size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: u32,
    k: usize,
    blocks: Vec<Block>,
}

impl IncidenceStructure {
    pub fn new(v: u32, k: usize, mut blocks: Vec<Block>) -> Result<IncidenceStructure> {
        for block in &blocks {
            if block.len() != k {
                return Err(precondition(format!("block {block:?} does not have {k} points")));
            }
            if block.exps().last().is_some_and(|&e| e >= v) {
                return Err(precondition(format!("block {block:?} leaves the point set 0..{v}")));
            }
        }
        blocks.sort_unstable();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(precondition("repeated block"));
        }
        Ok(IncidenceStructure { v, k, blocks })
    }

    pub fn from_family(family: &BlockFamily) -> Result<IncidenceStructure> {
        IncidenceStructure::new(family.q as u32 + 1, family.k, family.blocks.clone())
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    /// Sorted.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub t: usize,
    pub v: u32,
    pub k: usize,
    pub b: usize,
    pub coverage_min: u64,
    pub coverage_max: u64,
    pub lambda: Option<u64>,
    pub is_design: bool,
    pub is_steiner: bool,
}

/// Number of blocks through every t-subset, indexed by colex rank.
pub fn coverage_counts(s: &IncidenceStructure, t: usize, budget: u128) -> Result<Vec<u64>> {
    if t == 0 || t > s.k || s.k > s.v as usize {
        return Err(precondition(format!("need 1 <= t <= k <= v, got t={t} k={} v={}", s.k, s.v)));
    }
    let cells = binomial(s.v as u64, t as u64);
    check_budget(cells, budget)?;
    check_budget(binomial(s.k as u64, t as u64) * s.blocks.len() as u128, budget)?;
    let table = BinomialTable::new(s.v as usize, t);
    let cells = cells as usize;
    let chunk = (s.blocks.len() / (4 * rayon::current_num_threads()).max(1)).max(64);
    let counts = s
        .blocks
        .par_chunks(chunk)
        .map(|blocks| {
            let mut local = vec![0u32; cells];
            let mut sub = vec![0u32; t];
            for block in blocks {
                let pts = block.exps();
                for_each_subset(0, pts.len() as u32, t, |idx| {
                    for (slot, &i) in sub.iter_mut().zip(idx) {
                        *slot = pts[i as usize];
                    }
                    local[table.colex_rank(&sub)] += 1;
                    true
                });
            }
            local
        })
        .reduce(
            || vec![0u32; cells],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts.into_iter().map(u64::from).collect())
}

pub fn verify_design(s: &IncidenceStructure, t: usize) -> Result<DesignReport> {
    verify_design_with_budget(s, t, DEFAULT_BUDGET)
}

pub fn verify_design_with_budget(s: &IncidenceStructure, t: usize, budget: u128) -> Result<DesignReport> {
    if t >= s.k {
        return Err(precondition(format!("need t < k, got t={t} k={}", s.k)));
    }
    let counts = coverage_counts(s, t, budget)?;
    let coverage_min = counts.iter().copied().min().unwrap_or(0);
    let coverage_max = counts.iter().copied().max().unwrap_or(0);
    let is_design = coverage_min == coverage_max;
    let lambda = is_design.then_some(coverage_min);
    if let Some(l) = lambda {
        let lhs = s.blocks.len() as u128 * binomial(s.k as u64, t as u64);
        let rhs = l as u128 * binomial(s.v as u64, t as u64);
        if lhs != rhs {
            return Err(internal(format!("b C(k,t) = {lhs} but lambda C(v,t) = {rhs}")));
        }
    }
    Ok(DesignReport {
        t,
        v: s.v,
        k: s.k,
        b: s.blocks.len(),
        coverage_min,
        coverage_max,
        lambda,
        is_design,
        is_steiner: lambda == Some(1),
    })
}

/// `lambda_s = lambda C(v-s, t-s) / C(k-s, t-s)`: a t-design is also an
/// s-design for every `s <= t`.
pub fn lambda_s(t: usize, v: usize, k: usize, lambda: u64, s: usize) -> Result<BigRational> {
    if s > t || t > k || k > v {
        return Err(precondition(format!("need s <= t <= k <= v, got s={s} t={t} k={k} v={v}")));
    }
    let num = BigInt::from(lambda) * BigInt::from(binomial((v - s) as u64, (t - s) as u64));
    let den = BigInt::from(binomial((k - s) as u64, (t - s) as u64));
    Ok(BigRational::new(num, den))
}

/// Lambda of the complementary design, `sum_i (-1)^i C(t, i) lambda_i`.
pub fn complement_lambda(t: usize, v: usize, k: usize, lambda: u64) -> Result<BigRational> {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for i in 0..=t {
        let term = lambda_s(t, v, k, lambda, i)? * BigRational::from_integer(BigInt::from(binomial(t as u64, i as u64)));
        if i.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

pub fn complement_design(s: &IncidenceStructure) -> IncidenceStructure {
    let mut blocks: Vec<Block> = s.blocks.par_iter().map(|b| b.complement(s.v)).collect();
    blocks.sort_unstable();
    IncidenceStructure { v: s.v, k: s.v as usize - s.k, blocks }
}

/// Every k-subset of `0..v`.
pub fn complete_design(v: u32, k: usize) -> IncidenceStructure {
    let mut blocks = Vec::new();
    for_each_subset(0, v, k, |s| {
        blocks.push(Block::from_sorted(s));
        true
    });
    IncidenceStructure { v, k, blocks }
}
