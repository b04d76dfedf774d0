//! Codewords of small weight, found either from the ESP block families or by
//! a rank test on every w-subset of coordinates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{enumerate_b63, enumerate_blocks_bruteforce, enumerate_steiner_blocks, par_by_first, Block};
use crate::code::linear::{full_support_count, kernel_to_subfield_solution, m_matrix, Codeword, LinearCodeSpec};
use crate::combinatorics::{binomial, check_budget, for_each_subset};
use crate::error::{precondition, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMethod {
    /// Candidates from `B(5, 2)` / `B(6, 3)`; weights below 5 fall back to `Rank`.
    Esp,
    /// Rank of `M_w` on every w-subset.
    Rank,
}

#[derive(Clone, Debug)]
pub struct LowWeightScan {
    pub w: usize,
    /// Sorted supports carrying at least one codeword.
    pub supports: Vec<Block>,
    /// Codewords per support, aligned with `supports`.
    pub per_support: Vec<u64>,
    /// `A_w`.
    pub count: u128,
}

impl LowWeightScan {
    /// `Some(c)` when every support carries exactly `c` codewords.
    pub fn uniform_multiplicity(&self) -> Option<u64> {
        let first = *self.per_support.first()?;
        self.per_support.iter().all(|&c| c == first).then_some(first)
    }

    /// One codeword per support.
    pub fn representatives(&self, field: &Field, code: &LinearCodeSpec) -> Result<Vec<Codeword>> {
        self.supports
            .par_iter()
            .map(|b| {
                let x = kernel_to_subfield_solution(field, &m_matrix(field, b).matrix)?;
                code.embed(b, &x)
            })
            .collect()
    }
}

pub fn enumerate_low_weight(field: &Field, w: usize, method: ScanMethod, budget: u128) -> Result<LowWeightScan> {
    if w == 0 || w > 6 {
        return Err(precondition(format!("low-weight scan supports 1 <= w <= 6, got {w}")));
    }
    let candidates = match (method, w) {
        (ScanMethod::Esp, 5) if field.m().is_multiple_of(2) => Some(enumerate_steiner_blocks(field)?.blocks),
        (ScanMethod::Esp, 5) => Some(enumerate_blocks_bruteforce(field, 5, 2, budget)?.blocks),
        (ScanMethod::Esp, 6) => Some(enumerate_b63(field, budget)?.blocks),
        _ => None,
    };
    let counted: Vec<(Block, u64)> = match candidates {
        Some(blocks) => {
            let counts: Vec<u64> = blocks
                .par_iter()
                .map(|b| full_support_count(field, &m_matrix(field, b).matrix))
                .collect::<Result<_>>()?;
            blocks.into_iter().zip(counts).filter(|(_, c)| *c > 0).collect()
        }
        None => rank_scan(field, w, budget)?,
    };
    let count = counted.iter().map(|(_, c)| *c as u128).sum();
    let (supports, per_support) = counted.into_iter().unzip();
    Ok(LowWeightScan { w, supports, per_support, count })
}

fn rank_scan(field: &Field, w: usize, budget: u128) -> Result<Vec<(Block, u64)>> {
    let n = field.n() as u32;
    check_budget(binomial(n as u64, w as u64), budget)?;
    let chunks = par_by_first(n, w, |first| {
        let mut out = Vec::new();
        for_each_subset(first + 1, n, w - 1, |rest| {
            let mut exps = Vec::with_capacity(w);
            exps.push(first);
            exps.extend_from_slice(rest);
            let block = Block::from_sorted(&exps);
            let m = m_matrix(field, &block);
            if m.rank(field) < w {
                out.push(full_support_count(field, &m.matrix).map(|c| (block, c)));
            }
            true
        });
        out
    });
    let mut out = Vec::new();
    for item in chunks {
        let (block, c) = item?;
        if c > 0 {
            out.push((block, c));
        }
    }
    Ok(out)
}
