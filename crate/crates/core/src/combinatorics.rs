//! Binomial coefficients, colexicographic ranking and lexicographic k-subset
//! iteration over `{0, .., n-1}`.

use crate::error::{Error, Result};

/// Default cap on the number of subsets an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Table of `C(i, j)` for `i <= n`, `j <= k`, used for O(t) colex ranking.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> BinomialTable {
        let mut table = vec![0u64; (n + 1) * (k + 1)];
        for i in 0..=n {
            table[i * (k + 1)] = 1;
            for j in 1..=k.min(i) {
                let above = table[(i - 1) * (k + 1) + j];
                let diag = table[(i - 1) * (k + 1) + j - 1];
                table[i * (k + 1) + j] = above + diag;
            }
        }
        BinomialTable { k, table }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > self.k {
            return binomial(n as u64, k as u64) as u64;
        }
        self.table[n * (self.k + 1) + k]
    }

    /// Colex rank of a strictly increasing subset: `sum_i C(c_i, i+1)`.
    #[inline]
    pub fn colex_rank(&self, subset: &[u32]) -> usize {
        subset.iter().enumerate().map(|(i, &c)| self.get(c as usize, i + 1) as usize).sum()
    }
}

/// Visits every k-subset of `{start, .., n-1}` in lexicographic order.
/// The callback returns `false` to stop early.
pub fn for_each_subset(start: u32, n: u32, k: usize, mut f: impl FnMut(&[u32]) -> bool) {
    if k == 0 {
        f(&[]);
        return;
    }
    if (n.saturating_sub(start) as usize) < k {
        return;
    }
    let mut cur: Vec<u32> = (start..start + k as u32).collect();
    loop {
        if !f(&cur) {
            return;
        }
        // rightmost position that can still move; position i tops out at n-k+i
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - i) as u32) else {
            return;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Visits every t-subset of the given sorted slice.
pub fn for_each_sub_subset(items: &[u32], t: usize, mut f: impl FnMut(&[u32])) {
    let mut buf = vec![0u32; t];
    for_each_subset(0, items.len() as u32, t, |idx| {
        for (slot, &i) in buf.iter_mut().zip(idx) {
            *slot = items[i as usize];
        }
        f(&buf);
        true
    });
}
