//! The dual code through its trace representation
//! `c_(a,b,c) = (Tr(a g^i + b g^(2i) + c g^(3i)))_i`, `g = gamma`.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{enumerate_b63, enumerate_blocks_bruteforce, enumerate_steiner_blocks, esp_all, Block};
use crate::code::linear::{m_matrix, Codeword};
use crate::code::weights::WeightDistribution;
use crate::combinatorics::{binomial, check_budget};
use crate::error::{internal, precondition, Result};
use crate::field::{Field, FieldElement, UnitPoint};
use crate::linalg::rank;

/// Coefficients of `c_(a,b,c)`: `a` multiplies `gamma^i`, `b` multiplies
/// `gamma^(2i)` and `c` multiplies `gamma^(3i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceTriple {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

pub fn dual_codeword(field: &Field, t: TraceTriple) -> Codeword {
    let n = field.n() as u32;
    Codeword::new(
        (0..n)
            .map(|i| {
                let u = |k: u32| field.unit(UnitPoint(k * i % n));
                field.trace_q2_to_q(field.mul(t.a, u(1)) + field.mul(t.b, u(2)) + field.mul(t.c, u(3)))
            })
            .collect(),
    )
}

/// The trace triple whose polynomial `Tr(c u^3 + b u^2 + a u)` vanishes
/// exactly on a block of `B(6, 3)`: with `r = tau / sqrt(s66)` this is
/// `c = r`, `b = r s61`, `a = r s62`.
pub fn dual_min_weight_from_block(field: &Field, block: &Block, tau: FieldElement) -> Result<TraceTriple> {
    if block.len() != 6 {
        return Err(precondition(format!("expected a 6-set, got {block:?}")));
    }
    if tau.is_zero() || !field.is_in_subfield(tau) {
        return Err(precondition("tau must be a nonzero element of GF(q)"));
    }
    let s = esp_all(field, &block.values(field));
    if !s[3].is_zero() {
        return Err(precondition(format!("{block:?} is not in B(6, 3)")));
    }
    let r = field.div(tau, field.sqrt(s[6]))?;
    Ok(TraceTriple { a: field.mul(r, s[2]), b: field.mul(r, s[1]), c: r })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualMethod {
    /// Every triple up to GF(q)* scaling.
    TraceEnum,
    /// Counting zero patterns from the ranks of `M_J` over coordinate sets `J`.
    SupportFormula,
}

/// `table[x * n + i] = Tr(x gamma^(k i))` for every x in GF(q^2).
fn trace_table(field: &Field, k: u32) -> Vec<u16> {
    let n = field.n() as u32;
    let size = field.size() as usize;
    let mut table = vec![0u16; size * n as usize];
    for x in 0..size {
        for i in 0..n {
            let v = field.trace_q2_to_q(field.mul(FieldElement(x as u32), field.unit(UnitPoint(k * i % n))));
            table[x * n as usize + i as usize] = v.0 as u16;
        }
    }
    table
}

struct TraceEnum {
    n: usize,
    size: usize,
    t1: Vec<u16>,
    t2: Vec<u16>,
    t3: Vec<u16>,
    units: Vec<u32>,
}

#[derive(Default)]
struct Tally {
    zeros: Vec<u64>,
    sets: Vec<(Block, TraceTriple)>,
}

impl TraceEnum {
    fn new(field: &Field) -> TraceEnum {
        TraceEnum {
            n: field.n(),
            size: field.size() as usize,
            t1: trace_table(field, 1),
            t2: trace_table(field, 2),
            t3: trace_table(field, 3),
            units: field.unit_values().iter().map(|u| u.0).collect(),
        }
    }

    /// Representatives of the nonzero triples modulo GF(q)*: the first
    /// nonzero coordinate is taken from U_(q+1), a transversal of
    /// GF(q^2)* / GF(q)*.
    fn representatives(&self) -> u128 {
        let (u, s) = (self.units.len() as u128, self.size as u128);
        u * s * s + u * s + u
    }

    /// Folds every `c` against the fixed partial sum `ab`.
    fn sweep_c(&self, ab: &[u16], a: u32, b: u32, cs: &mut dyn Iterator<Item = u32>, collect: Option<usize>, tally: &mut Tally) {
        let n = self.n;
        for c in cs {
            let row = &self.t3[c as usize * n..(c as usize + 1) * n];
            let z = ab.iter().zip(row).filter(|(x, y)| x == y).count();
            tally.zeros[z] += 1;
            if collect == Some(z) {
                let exps: Vec<u32> = (0..n as u32).filter(|&i| ab[i as usize] == row[i as usize]).collect();
                let t = TraceTriple { a: FieldElement(a), b: FieldElement(b), c: FieldElement(c) };
                tally.sets.push((Block::from_sorted(&exps), t));
            }
        }
    }

    fn run(&self, collect: Option<usize>) -> Tally {
        let n = self.n;
        let size = self.size as u32;
        let merge = |mut x: Tally, y: Tally| {
            for (p, q) in x.zeros.iter_mut().zip(&y.zeros) {
                *p += q;
            }
            x.sets.extend(y.sets);
            x
        };
        let empty = || Tally { zeros: vec![0; n + 1], sets: Vec::new() };
        let ab_row = |a: u32, b: u32| -> Vec<u16> {
            let r1 = &self.t1[a as usize * n..(a as usize + 1) * n];
            let r2 = &self.t2[b as usize * n..(b as usize + 1) * n];
            r1.iter().zip(r2).map(|(x, y)| x ^ y).collect()
        };
        // a in U, b and c free
        let main = self
            .units
            .par_iter()
            .flat_map_iter(|&a| (0..size).map(move |b| (a, b)))
            .fold(empty, |mut tally, (a, b)| {
                self.sweep_c(&ab_row(a, b), a, b, &mut (0..size), collect, &mut tally);
                tally
            })
            .reduce(empty, merge);
        // a = 0, b in U, c free; then a = b = 0, c in U
        let mut tail = empty();
        for &b in &self.units {
            self.sweep_c(&ab_row(0, b), 0, b, &mut (0..size), collect, &mut tail);
        }
        self.sweep_c(&ab_row(0, 0), 0, 0, &mut self.units.iter().copied(), collect, &mut tail);
        let mut all = merge(main, tail);
        all.sets.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        all
    }
}

fn zeros_to_distribution(field: &Field, zeros: &[u64]) -> WeightDistribution {
    let n = field.n();
    let scale = BigUint::from(field.q() - 1);
    let mut counts = vec![BigUint::default(); n + 1];
    for (z, &c) in zeros.iter().enumerate() {
        counts[n - z] += &scale * c;
    }
    counts[0] += 1u32;
    WeightDistribution::new(counts)
}

/// Weight distribution of the dual code, with `A_0` counting the zero triple.
pub fn dual_weight_distribution(field: &Field, method: DualMethod, budget: u128) -> Result<WeightDistribution> {
    let dist = match method {
        DualMethod::TraceEnum => {
            let e = TraceEnum::new(field);
            check_budget(e.representatives(), budget)?;
            zeros_to_distribution(field, &e.run(None).zeros)
        }
        DualMethod::SupportFormula => support_formula(field, budget)?,
    };
    dist.validate(field.q(), 6)?;
    Ok(dist)
}

/// A trace enumeration that also keeps the zero sets of a chosen size.
#[derive(Clone, Debug)]
pub struct DualScan {
    pub distribution: WeightDistribution,
    /// One entry per GF(q)* orbit of codewords with the chosen number of
    /// zeros, sorted by zero set.
    pub zero_sets: Vec<(Block, TraceTriple)>,
}

pub fn dual_trace_scan(field: &Field, collect_zeros: Option<usize>, budget: u128) -> Result<DualScan> {
    let e = TraceEnum::new(field);
    check_budget(e.representatives(), budget)?;
    let tally = e.run(collect_zeros);
    let distribution = zeros_to_distribution(field, &tally.zeros);
    distribution.validate(field.q(), 6)?;
    Ok(DualScan { distribution, zero_sets: tally.sets })
}

/// `N_j = sum over j-sets J of q^(6 - rank M_J)` counts pairs (codeword,
/// j-set of its zeros). With `Z_i` the number of nonzero codewords having
/// exactly `i` zeros, `sum_i C(i, j) Z_i = N_j - C(n, j)`. Once `N_7 = C(n, 7)`
/// is confirmed every `Z_i` with `i >= 7` vanishes and the system for
/// `Z_0..Z_6` is triangular.
///
/// Ranks of `M_J` for `|J| <= 6` are read off the ESP criteria (full rank up
/// to four columns, deficiency on `B(5, 2)` and `B(6, 3)` only); ranks on the
/// two block families themselves are computed.
fn support_formula(field: &Field, budget: u128) -> Result<WeightDistribution> {
    let n = field.n();
    let q = BigUint::from(field.q());
    check_budget(binomial(n as u64, 5), budget)?;

    let b52 = if field.m().is_multiple_of(2) {
        enumerate_steiner_blocks(field)?
    } else {
        enumerate_blocks_bruteforce(field, 5, 2, budget)?
    };
    for block in &b52.blocks {
        if m_matrix(field, block).rank(field) != 4 {
            return Err(internal(format!("rank of M_5 on {block:?} is not 4")));
        }
    }
    let b63 = enumerate_b63(field, budget)?;
    let ranks6: Vec<usize> = b63.blocks.par_iter().map(|b| m_matrix(field, b).rank(field)).collect();
    if ranks6.contains(&6) {
        return Err(internal("a block of B(6, 3) has full rank"));
    }
    verify_no_rank_deficient_seven_sets(field, &b63.blocks)?;

    let c = |n: usize, k: usize| BigUint::from(binomial(n as u64, k as u64));
    let q_pow = |e: usize| q.pow(e as u32);
    let mut big_n = Vec::with_capacity(7);
    for j in 0..=4 {
        big_n.push(c(n, j) * q_pow(6 - j));
    }
    let k5 = b52.blocks.len();
    big_n.push(BigUint::from(k5) * q_pow(2) + (c(n, 5) - BigUint::from(k5)) * &q);
    let mut n6 = c(n, 6) - BigUint::from(b63.blocks.len());
    for &r in &ranks6 {
        n6 += q_pow(6 - r);
    }
    big_n.push(n6);

    let mut z = vec![BigUint::default(); 7];
    for j in (0..=6).rev() {
        let mut rhs = &big_n[j] - c(n, j);
        for (i, zi) in z.iter().enumerate().skip(j + 1) {
            let t = c(i, j) * zi;
            if t > rhs {
                return Err(internal(format!("negative zero count at {j}")));
            }
            rhs -= t;
        }
        z[j] = rhs;
    }
    let mut counts = vec![BigUint::default(); n + 1];
    counts[0] = BigUint::from(1u32);
    for (i, zi) in z.into_iter().enumerate() {
        counts[n - i] += zi;
    }
    Ok(WeightDistribution::new(counts))
}

/// A 7-set has rank below 6 only if all seven of its 6-subsets lie in `B(6, 3)`.
fn verify_no_rank_deficient_seven_sets(field: &Field, b63: &[Block]) -> Result<()> {
    let n = field.n() as u32;
    let masks: HashSet<u128> = b63.iter().map(Block::mask).collect();
    let suspicious: Vec<u128> = b63
        .par_iter()
        .flat_map_iter(|block| {
            let masks = &masks;
            let base = block.mask();
            (0..n).filter(move |&p| base >> p & 1 == 0).filter_map(move |p| {
                let seven = base | 1u128 << p;
                let mut rest = base;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    if !masks.contains(&(seven ^ bit)) {
                        return None;
                    }
                    rest ^= bit;
                }
                Some(seven)
            })
        })
        .collect();
    for seven in suspicious {
        let block = Block::new((0..n).filter(|&p| seven >> p & 1 == 1))?;
        if rank(field, &m_matrix(field, &block).matrix) < 6 {
            return Err(precondition(format!("7-set {block:?} supports a dual codeword with 7 zeros")));
        }
    }
    Ok(())
}
