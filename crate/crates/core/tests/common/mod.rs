//! Independent oracles for the integration tests. Everything here is computed
//! from field arithmetic alone, by direct expansion, without the library's
//! enumerators.
#![allow(dead_code)]

use std::collections::HashMap;

use bch_designs::{Field, FieldElement, UnitPoint};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < (k - cur.len()) as u32 {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn values(f: &Field, exps: &[u32]) -> Vec<FieldElement> {
    exps.iter().map(|&e| f.unit(UnitPoint(e))).collect()
}

/// `sigma_{k,ell}` as a literal sum over ell-subsets of products.
pub fn esp(f: &Field, vals: &[FieldElement], ell: usize) -> FieldElement {
    let mut sum = FieldElement::ZERO;
    for idx in subsets(vals.len() as u32, ell) {
        let mut p = FieldElement::ONE;
        for i in idx {
            p = f.mul(p, vals[i as usize]);
        }
        sum += p;
    }
    sum
}

/// `[sigma_0, .., sigma_k]` via the coefficients of `prod (x + u_i)`.
pub fn esp_all(f: &Field, vals: &[FieldElement]) -> Vec<FieldElement> {
    let mut c = vec![FieldElement::ONE];
    for &u in vals {
        let mut next = vec![FieldElement::ZERO; c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i] += ci;
            next[i + 1] += f.mul(ci, u);
        }
        c = next;
    }
    c
}

/// `Tr_{q/2}(x) = sum x^(2^i)` for i below m, as 0 or 1.
pub fn abs_trace(f: &Field, x: FieldElement) -> u32 {
    let mut acc = FieldElement::ZERO;
    let mut y = x;
    for _ in 0..f.m() {
        acc += y;
        y = f.mul(y, y);
    }
    assert!(acc.0 <= 1, "absolute trace of {x:?} left GF(2)");
    acc.0
}

pub fn frob(f: &Field, x: FieldElement) -> FieldElement {
    f.pow(x, f.q())
}

pub fn in_subfield(f: &Field, x: FieldElement) -> bool {
    frob(f, x) == x
}

pub fn on_circle(f: &Field, x: FieldElement) -> bool {
    !x.is_zero() && f.pow(x, f.q() + 1) == FieldElement::ONE
}

/// Brute-force zero-ESP family as sorted exponent vectors.
pub fn brute_family(f: &Field, k: usize, ell: usize) -> Vec<Vec<u32>> {
    subsets(f.n() as u32, k).into_iter().filter(|s| esp(f, &values(f, s), ell).is_zero()).collect()
}

/// `(min, max)` of the number of blocks through each t-subset of `0..v`.
pub fn coverage(blocks: &[Vec<u32>], v: u32, t: usize) -> (u64, u64) {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for b in blocks {
        for idx in subsets(b.len() as u32, t) {
            *counts.entry(idx.iter().map(|&i| b[i as usize]).collect()).or_default() += 1;
        }
    }
    let total = subsets(v, t).len();
    let min = if counts.len() < total { 0 } else { *counts.values().min().unwrap_or(&0) };
    (min, *counts.values().max().unwrap_or(&0))
}

/// Dual distribution by direct evaluation of `Tr(a u^3 + b u^2 + c u)` over
/// every triple, with no symmetry reduction.
pub fn naive_dual_distribution(f: &Field) -> Vec<u64> {
    let n = f.n();
    let units: Vec<FieldElement> = f.unit_values().to_vec();
    let elems: Vec<FieldElement> = f.elements().collect();
    let tr = |x: FieldElement| x + frob(f, x);
    let table: Vec<Vec<Vec<FieldElement>>> = (1..=3u64)
        .map(|k| elems.iter().map(|&x| units.iter().map(|&u| tr(f.mul(x, f.pow(u, k)))).collect()).collect())
        .collect();
    let mut dist = vec![0u64; n + 1];
    for a in 0..elems.len() {
        for b in 0..elems.len() {
            let ab: Vec<FieldElement> = (0..n).map(|i| table[2][a][i] + table[1][b][i]).collect();
            for row in &table[0] {
                let w = (0..n).filter(|&i| !(ab[i] + row[i]).is_zero()).count();
                dist[w] += 1;
            }
        }
    }
    dist
}

/// MacWilliams as a polynomial identity: the code's enumerator is
/// `q^-k W(x + (q-1) y, x - y)` of the dual enumerator `W`, expanded in
/// binomial coefficients.
pub fn macwilliams_poly(dual: &[u64], q: u64, k_dual: u32) -> Vec<BigInt> {
    let n = dual.len() - 1;
    // (x + (q-1)y)^(n-w) (x - y)^w, coefficient of x^(n-j) y^j
    let binom = |n: usize| -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        row
    };
    let mut out = vec![BigInt::zero(); n + 1];
    for (w, &a) in dual.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let p1: Vec<BigInt> = binom(n - w)
            .into_iter()
            .enumerate()
            .map(|(j, c)| c * BigInt::from(q - 1).pow(j as u32))
            .collect();
        let p2: Vec<BigInt> =
            binom(w).into_iter().enumerate().map(|(j, c)| if j.is_multiple_of(2) { c } else { -c }).collect();
        for (i, x) in p1.iter().enumerate() {
            for (j, y) in p2.iter().enumerate() {
                out[i + j] += x * y * BigInt::from(a);
            }
        }
    }
    let size = BigInt::from(q).pow(k_dual);
    out.into_iter()
        .map(|c| {
            assert!((&c % &size).is_zero(), "transform is not integral");
            c / &size
        })
        .collect()
}

pub fn sparse(dense: &[u64]) -> Vec<(usize, u64)> {
    dense.iter().enumerate().filter(|(_, &c)| c != 0).map(|(w, &c)| (w, c)).collect()
}
