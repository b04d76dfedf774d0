//! Elementary symmetric polynomials over U_{q+1} and the block families
//! `B(k, l) = { k-subsets of U_{q+1} with sigma_{k,l} = 0 }`.
//!
//! Points are exponents `e` of `gamma^e`. Two enumeration routes are provided
//! for the families with closed-form structure: a brute-force scan of all
//! k-subsets and a constructive one that solves for the missing points.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::combinatorics::{binomial, check_budget, for_each_subset};
use crate::error::{internal, precondition, Error, Result};
use crate::field::{Field, FieldElement, UnitPoint};

pub type Points = SmallVec<[u32; 6]>;

/// A set of points of U_{q+1}, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Points);

impl Block {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Result<Block> {
        let mut pts: Points = exps.into_iter().collect();
        pts.sort_unstable();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(precondition(format!("repeated point in block {pts:?}")));
        }
        Ok(Block(pts))
    }

    pub fn from_points(points: &[UnitPoint]) -> Result<Block> {
        Block::new(points.iter().map(|p| p.0))
    }

    /// Wraps exponents that are already strictly increasing.
    pub(crate) fn from_sorted(exps: &[u32]) -> Block {
        debug_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        Block(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn points(&self) -> impl Iterator<Item = UnitPoint> + '_ {
        self.0.iter().map(|&e| UnitPoint(e))
    }

    pub fn values(&self, field: &Field) -> Points32 {
        self.0.iter().map(|&e| field.unit(UnitPoint(e))).collect()
    }

    /// Complement inside `{0, .., v-1}`.
    pub fn complement(&self, v: u32) -> Block {
        Block((0..v).filter(|e| !self.contains(*e)).collect())
    }

    /// Bitmask of the block; requires every point below 128.
    pub fn mask(&self) -> u128 {
        self.0.iter().fold(0u128, |acc, &e| acc | 1u128 << e)
    }
}

pub type Points32 = SmallVec<[FieldElement; 6]>;

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FamilyTag {
    Full,
    B0,
    B1,
    /// Codeword supports with no matching ESP family.
    Support,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::Full => "FULL",
            FamilyTag::B0 => "B0",
            FamilyTag::B1 => "B1",
            FamilyTag::Support => "SUPPORT",
        })
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyTag> {
        match s {
            "FULL" => Ok(FamilyTag::Full),
            "B0" => Ok(FamilyTag::B0),
            "B1" => Ok(FamilyTag::B1),
            "SUPPORT" => Ok(FamilyTag::Support),
            other => Err(Error::Parse(format!("unknown family tag `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFamily {
    pub q: u64,
    pub k: usize,
    pub ell: usize,
    pub tag: FamilyTag,
    /// Sorted, duplicate free.
    pub blocks: Vec<Block>,
}

impl BlockFamily {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Writes the `q,k,ell,tag,count` header followed by one CSV line per block.
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{},{},{},{},{}", self.q, self.k, self.ell, self.tag, self.blocks.len())?;
        let mut line = String::new();
        for block in &self.blocks {
            line.clear();
            for (i, e) in block.exps().iter().enumerate() {
                if i > 0 {
                    line.push(',');
                }
                line.push_str(&e.to_string());
            }
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    }

    pub fn to_file_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("family files are ASCII")
    }

    pub fn read_from<R: BufRead>(r: R) -> Result<BlockFamily> {
        let mut lines = r.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty family file".into()))??;
        let fields: Vec<&str> = header.trim().split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!("bad family header `{header}`")));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|e| Error::Parse(format!("`{s}`: {e}")));
        let q = num(fields[0])?;
        let k = num(fields[1])? as usize;
        let ell = num(fields[2])? as usize;
        let tag: FamilyTag = fields[3].parse()?;
        let count = num(fields[4])? as usize;
        let mut blocks = Vec::with_capacity(count);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let exps = line
                .trim()
                .split(',')
                .map(|s| s.parse::<u32>().map_err(|e| Error::Parse(format!("`{s}`: {e}"))))
                .collect::<Result<Vec<u32>>>()?;
            if exps.len() != k {
                return Err(Error::Parse(format!("block `{line}` does not have {k} points")));
            }
            blocks.push(Block::new(exps)?);
        }
        if blocks.len() != count {
            return Err(Error::Parse(format!("header promises {count} blocks, found {}", blocks.len())));
        }
        if blocks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("blocks are not in strictly increasing order".into()));
        }
        Ok(BlockFamily { q, k, ell, tag, blocks })
    }
}

/// `sigma_{k,l}(values)`: the `T^l` coefficient of `prod (1 + v_i T)`.
pub fn esp(field: &Field, values: &[FieldElement], ell: usize) -> Result<FieldElement> {
    if ell > values.len() {
        return Err(Error::EspDegree { ell, k: values.len() });
    }
    Ok(esp_upto(field, values, ell)[ell])
}

/// `sigma_{k,0..=l_max}`, truncating the product expansion at degree `l_max`.
pub fn esp_upto(field: &Field, values: &[FieldElement], ell_max: usize) -> Points32 {
    let mut coef: Points32 = SmallVec::from_elem(FieldElement::ZERO, ell_max + 1);
    coef[0] = FieldElement::ONE;
    for (i, &v) in values.iter().enumerate() {
        for j in (1..=ell_max.min(i + 1)).rev() {
            let t = field.mul(v, coef[j - 1]);
            coef[j] += t;
        }
    }
    coef
}

/// Every `sigma_{k,l}`, `0 <= l <= k`.
pub fn esp_all(field: &Field, values: &[FieldElement]) -> Points32 {
    esp_upto(field, values, values.len())
}

fn unit_values(field: &Field, points: &[UnitPoint]) -> Points32 {
    points.iter().map(|&p| field.unit(p)).collect()
}

fn require_distinct(points: &[UnitPoint]) -> Result<()> {
    let mut sorted: SmallVec<[u32; 6]> = points.iter().map(|p| p.0).collect();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(precondition(format!("points are not distinct: {points:?}")));
    }
    Ok(())
}

fn to_unit(field: &Field, x: FieldElement, what: &str) -> Result<UnitPoint> {
    field.unit_point(x).ok_or_else(|| internal(format!("{what} = {x:?} is not on the unit circle")))
}

/// DFS over the k-subsets of `{first, .., n-1}` that start with `first`,
/// carrying the truncated ESP coefficients of each prefix. The callback sees
/// the full subset and `sigma_{k,0..=l_max}`.
pub(crate) fn for_each_subset_esp(
    field: &Field,
    n: u32,
    first: u32,
    k: usize,
    ell_max: usize,
    f: &mut impl FnMut(&[u32], &[FieldElement]),
) {
    if k == 0 || first >= n || (n - first) < k as u32 {
        return;
    }
    let width = ell_max + 1;
    let mut levels = vec![FieldElement::ZERO; (k + 1) * width];
    levels[0] = FieldElement::ONE;
    let mut path = vec![0u32; k];
    push_point(field, &mut levels, width, 0, first);
    path[0] = first;
    descend(field, n, k, width, 1, first + 1, &mut levels, &mut path, f);
}

#[inline]
fn push_point(field: &Field, levels: &mut [FieldElement], width: usize, depth: usize, e: u32) {
    let u = field.unit(UnitPoint(e));
    let (prev, next) = levels.split_at_mut((depth + 1) * width);
    let prev = &prev[depth * width..];
    let next = &mut next[..width];
    next[0] = prev[0];
    for j in 1..width {
        next[j] = prev[j] + field.mul(u, prev[j - 1]);
    }
}

#[allow(clippy::too_many_arguments)]
fn descend(
    field: &Field,
    n: u32,
    k: usize,
    width: usize,
    depth: usize,
    start: u32,
    levels: &mut [FieldElement],
    path: &mut [u32],
    f: &mut impl FnMut(&[u32], &[FieldElement]),
) {
    if depth == k {
        f(path, &levels[k * width..(k + 1) * width]);
        return;
    }
    let remaining = (k - depth) as u32;
    for e in start..=n - remaining {
        path[depth] = e;
        push_point(field, levels, width, depth, e);
        descend(field, n, k, width, depth + 1, e + 1, levels, path, f);
    }
}

/// Runs `per_first` for every admissible first point in parallel and
/// concatenates the chunks in order, so lexicographic chunk output stays
/// lexicographic overall.
pub(crate) fn par_by_first<T: Send>(n: u32, k: usize, per_first: impl Fn(u32) -> Vec<T> + Sync + Send) -> Vec<T> {
    if k == 0 || (n as usize) < k {
        return Vec::new();
    }
    let last = n - k as u32;
    let chunks: Vec<Vec<T>> = (0..=last).into_par_iter().map(per_first).collect();
    chunks.into_iter().flatten().collect()
}

/// All k-subsets of U_{q+1} with `sigma_{k,l} = 0`, in lexicographic order.
pub fn enumerate_blocks_bruteforce(field: &Field, k: usize, ell: usize, budget: u128) -> Result<BlockFamily> {
    let n = field.n() as u32;
    if k > n as usize {
        return Err(precondition(format!("k={k} exceeds q+1={n}")));
    }
    if ell > k {
        return Err(Error::EspDegree { ell, k });
    }
    check_budget(binomial(n as u64, k as u64), budget)?;
    let blocks = if ell == 0 {
        Vec::new()
    } else {
        par_by_first(n, k, |first| {
            let mut out = Vec::new();
            for_each_subset_esp(field, n, first, k, ell, &mut |subset, coef| {
                if coef[ell].is_zero() {
                    out.push(Block::from_sorted(subset));
                }
            });
            out
        })
    };
    Ok(BlockFamily { q: field.q(), k, ell, tag: FamilyTag::Full, blocks })
}

/// The quadratic `u^2 + a u + b` attached to a 3-subset, together with its
/// roots on U_{q+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPair {
    pub a: FieldElement,
    pub b: FieldElement,
    pub roots: Vec<UnitPoint>,
}

/// Coefficients `a = (s1 s2 + s3)/(s1^2 + s2)` and `b = (s2^2 + s1 s3)/(s1^2 + s2)`
/// of a 3-subset; fails when any of the three defining quantities vanishes.
pub fn triple_quadratic(field: &Field, triple: [UnitPoint; 3]) -> Result<(FieldElement, FieldElement)> {
    require_distinct(&triple)?;
    let s = esp_all(field, &unit_values(field, &triple));
    let (s1, s2, s3) = (s[1], s[2], s[3]);
    let den = field.square(s1) + s2;
    let num_a = field.mul(s1, s2) + s3;
    let num_b = field.square(s2) + field.mul(s1, s3);
    if den.is_zero() || num_a.is_zero() || num_b.is_zero() {
        return Err(precondition(format!("degenerate triple {triple:?}")));
    }
    Ok((field.div(num_a, den)?, field.div(num_b, den)?))
}

/// The two points completing a 3-subset to a block of `B(5, 2)`.
pub fn quad_pair(field: &Field, triple: [UnitPoint; 3]) -> Result<QuadPair> {
    let (a, b) = triple_quadratic(field, triple)?;
    let roots = field.solve_quadratic_unit(a, b)?;
    Ok(QuadPair { a, b, roots })
}

/// The block of `B(5, 2)` through a 3-subset (m even).
pub fn steiner_block_through(field: &Field, triple: [UnitPoint; 3]) -> Result<Block> {
    let pair = quad_pair(field, triple)?;
    if pair.roots.len() != 2 {
        return Err(internal(format!("triple {triple:?} has {} unit roots", pair.roots.len())));
    }
    let block = Block::new(triple.iter().chain(&pair.roots).map(|p| p.0))
        .map_err(|_| internal(format!("roots of {triple:?} meet the triple")))?;
    Ok(block)
}

fn require_even(field: &Field, what: &str) -> Result<()> {
    if !field.m().is_multiple_of(2) {
        return Err(precondition(format!("{what} needs m even, got m={}", field.m())));
    }
    Ok(())
}

/// `B(5, 2)` for m even, built by completing every 3-subset and keeping the
/// block only when the triple is its three smallest points.
pub fn enumerate_steiner_blocks(field: &Field) -> Result<BlockFamily> {
    require_even(field, "Steiner enumeration")?;
    let n = field.n() as u32;
    let chunks: Vec<Result<Vec<Block>>> = (0..n.saturating_sub(2))
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut err = None;
            for_each_subset(first + 1, n, 2, |rest| {
                let triple = [UnitPoint(first), UnitPoint(rest[0]), UnitPoint(rest[1])];
                match steiner_block_through(field, triple) {
                    Ok(block) => {
                        if block.exps()[..3] == [first, rest[0], rest[1]] {
                            out.push(block);
                        }
                        true
                    }
                    Err(e) => {
                        err = Some(e);
                        false
                    }
                }
            });
            match err {
                Some(Error::Precondition(msg)) => Err(internal(msg)),
                Some(e) => Err(e),
                None => Ok(out),
            }
        })
        .collect();
    let mut blocks = Vec::new();
    for chunk in chunks {
        blocks.extend(chunk?);
    }
    blocks.sort_unstable();
    Ok(BlockFamily { q: field.q(), k: 5, ell: 2, tag: FamilyTag::Full, blocks })
}

/// `u6 = sigma_{5,3} / sigma_{5,2}`, the unique point making
/// `sigma_{6,3}(u1..u5, u6) = 0`.
pub fn completion(field: &Field, five: [UnitPoint; 5]) -> Result<UnitPoint> {
    require_distinct(&five)?;
    let s = esp_upto(field, &unit_values(field, &five), 3);
    if s[2].is_zero() {
        return Err(precondition(format!("sigma_(5,2) vanishes on {five:?}")));
    }
    to_unit(field, field.div(s[3], s[2])?, "completion")
}

/// Points that cannot serve as a fifth point of a `B(6, 3)` block through a
/// fixed 4-subset: the four quotients `(s3 + u_i s2)/(s2 + u_i s1)`, the
/// points themselves and `sqrt(s3/s1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    pub quotients: [UnitPoint; 4],
    pub root: UnitPoint,
    /// Sorted union of everything above and the four input points.
    pub members: Vec<UnitPoint>,
}

pub fn forbidden_set(field: &Field, four: [UnitPoint; 4]) -> Result<ForbiddenSet> {
    require_distinct(&four)?;
    let vals = unit_values(field, &four);
    let s = esp_all(field, &vals);
    let (s1, s2, s3) = (s[1], s[2], s[3]);
    if s1.is_zero() || s3.is_zero() {
        return Err(internal(format!("sigma_(4,1) sigma_(4,3) vanishes on {four:?}")));
    }
    let root = to_unit(field, field.sqrt(field.div(s3, s1)?), "sqrt(s3/s1)")?;
    let mut quotients = [UnitPoint(0); 4];
    for (slot, &u) in quotients.iter_mut().zip(&vals) {
        let num = s3 + field.mul(u, s2);
        let den = s2 + field.mul(u, s1);
        if num.is_zero() || den.is_zero() {
            return Err(internal(format!("forbidden quotient degenerates on {four:?}")));
        }
        *slot = to_unit(field, field.div(num, den)?, "forbidden quotient")?;
    }
    let mut members: Vec<UnitPoint> = quotients.iter().chain(&four).copied().collect();
    members.push(root);
    members.sort_unstable();
    members.dedup();
    Ok(ForbiddenSet { quotients, root, members })
}

/// B0 when some 5-subset of the block lies in `B(5, 2)`, else B1.
pub fn classify_block(field: &Field, block: &Block) -> Result<FamilyTag> {
    if block.len() != 6 {
        return Err(precondition(format!("classification needs a 6-set, got {block:?}")));
    }
    let vals = block.values(field);
    if !esp(field, &vals, 3)?.is_zero() {
        return Err(precondition(format!("{block:?} is not in B(6, 3)")));
    }
    Ok(if has_b52_subset(field, &vals) { FamilyTag::B0 } else { FamilyTag::B1 })
}

fn has_b52_subset(field: &Field, six: &[FieldElement]) -> bool {
    (0..6).any(|skip| {
        let five: Points32 = six.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
        esp_upto(field, &five, 2)[2].is_zero()
    })
}

/// Constructive enumeration of `B(6, 3)`.
///
/// For m odd every 5-subset completes uniquely; a block is emitted from the
/// 5-subset that lacks its largest point. For m even the B0 part is every
/// `B(5, 2)` block plus one further point, and the B1 part comes from
/// completion of 5-subsets whose resulting 6-set has no `B(5, 2)` subset.
pub fn enumerate_b63(field: &Field, budget: u128) -> Result<BlockFamily> {
    let n = field.n() as u32;
    check_budget(binomial(n as u64, 5), budget)?;
    let mut blocks = completion_blocks(field, field.m().is_multiple_of(2))?;
    if field.m().is_multiple_of(2) {
        blocks.extend(b0_from_steiner(field)?);
        blocks.sort_unstable();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(internal("B0 and B1 constructions overlap"));
        }
    }
    Ok(BlockFamily { q: field.q(), k: 6, ell: 3, tag: FamilyTag::Full, blocks })
}

fn completion_blocks(field: &Field, only_b1: bool) -> Result<Vec<Block>> {
    let n = field.n() as u32;
    let chunks: Vec<Result<Vec<Block>>> = (0..=n - 5)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut err = None;
            for_each_subset_esp(field, n, first, 5, 3, &mut |five, s| {
                if err.is_some() || s[2].is_zero() {
                    return;
                }
                let u6 = match field.div(s[3], s[2]).map(|x| field.unit_point(x)) {
                    Ok(Some(p)) => p.0,
                    Ok(None) => {
                        err = Some(internal(format!("completion of {five:?} leaves U_(q+1)")));
                        return;
                    }
                    Err(e) => {
                        err = Some(e);
                        return;
                    }
                };
                // emit once: from the 5-subset missing the block's maximum
                if u6 <= five[4] {
                    return;
                }
                let mut six: SmallVec<[u32; 6]> = SmallVec::from_slice(five);
                six.push(u6);
                let block = Block(six);
                if only_b1 && has_b52_subset(field, &block.values(field)) {
                    return;
                }
                out.push(block);
            });
            match err {
                Some(e) => Err(e),
                None => Ok(out),
            }
        })
        .collect();
    let mut blocks = Vec::new();
    for chunk in chunks {
        blocks.extend(chunk?);
    }
    Ok(blocks)
}

fn b0_from_steiner(field: &Field) -> Result<Vec<Block>> {
    let n = field.n() as u32;
    let steiner = enumerate_steiner_blocks(field)?;
    let mut out = Vec::with_capacity(steiner.len() * (n as usize - 5));
    for block in &steiner.blocks {
        for p in (0..n).filter(|p| !block.contains(*p)) {
            out.push(Block::new(block.exps().iter().copied().chain([p]))?);
        }
    }
    Ok(out)
}

/// Splits a `B(6, 3)` family into its B0 and B1 parts.
pub fn split_b63(field: &Field, family: &BlockFamily) -> Result<(BlockFamily, BlockFamily)> {
    let tags: Vec<FamilyTag> =
        family.blocks.par_iter().map(|b| classify_block(field, b)).collect::<Result<_>>()?;
    let mut b0 = Vec::new();
    let mut b1 = Vec::new();
    for (block, tag) in family.blocks.iter().zip(tags) {
        match tag {
            FamilyTag::B0 => b0.push(block.clone()),
            _ => b1.push(block.clone()),
        }
    }
    let make = |tag, blocks| BlockFamily { q: family.q, k: 6, ell: 3, tag, blocks };
    Ok((make(FamilyTag::B0, b0), make(FamilyTag::B1, b1)))
}

/// Blocks of `B(6, 3)` through a fixed 4-subset for m odd: the pairs
/// `{u5, completion(u1..u5)}` with `u5` outside the forbidden set.
pub fn blocks_through_quadruple(field: &Field, four: [UnitPoint; 4]) -> Result<Vec<Block>> {
    let forbidden = forbidden_set(field, four)?;
    let mut out = Vec::new();
    for e in 0..field.n() as u32 {
        let u5 = UnitPoint(e);
        if forbidden.members.binary_search(&u5).is_ok() {
            continue;
        }
        let u6 = completion(field, [four[0], four[1], four[2], four[3], u5])?;
        if four.contains(&u6) || u6 == u5 {
            return Err(internal(format!("completion of {four:?} + {u5:?} collapsed")));
        }
        out.push(Block::new(four.iter().map(|p| p.0).chain([e, u6.0]))?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Blocks of `B(6, 3)` through a fixed 3-subset for m even, split the way the
/// counting argument splits them.
#[derive(Clone, Debug)]
pub struct TripleBlocks {
    /// The triple's own Steiner block plus one more point.
    pub own_steiner: Vec<Block>,
    /// `{u1, u2, u3, u4} + Q(u_i, u_j, u4)` for the three pairs `i < j`.
    pub pair_steiner: [Vec<Block>; 3],
    /// Completion of `(u1, u2, u3, u4, u5)` with `u4` outside `S0` and `u5`
    /// outside `S0 + S1`.
    pub completed: Vec<Block>,
}

impl TripleBlocks {
    pub fn b0(&self) -> Vec<Block> {
        let mut all: Vec<Block> = self.own_steiner.iter().chain(self.pair_steiner.iter().flatten()).cloned().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn all(&self) -> Vec<Block> {
        let mut all: Vec<Block> = self.own_steiner.iter().chain(&self.completed).cloned().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

pub fn blocks_through_triple(field: &Field, triple: [UnitPoint; 3]) -> Result<TripleBlocks> {
    require_even(field, "triple-local enumeration")?;
    let n = field.n() as u32;
    let s0 = steiner_block_through(field, triple)?;

    let own_steiner = (0..n)
        .filter(|p| !s0.contains(*p))
        .map(|p| Block::new(s0.exps().iter().copied().chain([p])))
        .collect::<Result<Vec<_>>>()?;

    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut pair_steiner: [Vec<Block>; 3] = Default::default();
    for (slot, &(i, j)) in pair_steiner.iter_mut().zip(&pairs) {
        for u4 in (0..n).filter(|p| !s0.contains(*p)) {
            let q = steiner_block_through(field, [triple[i], triple[j], UnitPoint(u4)])?;
            let block = Block::new(
                triple.iter().map(|p| p.0).chain([u4]).chain(q.exps().iter().copied()).collect::<Vec<_>>().into_iter().collect::<std::collections::BTreeSet<_>>(),
            )?;
            if block.len() != 6 {
                return Err(internal(format!("pair family of {triple:?} produced {block:?}")));
            }
            slot.push(block);
        }
        slot.sort_unstable();
        slot.dedup();
    }

    let mut completed = Vec::new();
    for u4 in (0..n).filter(|p| !s0.contains(*p)) {
        let four = [triple[0], triple[1], triple[2], UnitPoint(u4)];
        let s1 = forbidden_set(field, four)?;
        for u5 in (0..n).filter(|p| !s0.contains(*p) && s1.members.binary_search(&UnitPoint(*p)).is_err()) {
            let u6 = completion(field, [four[0], four[1], four[2], four[3], UnitPoint(u5)])?;
            completed.push(Block::new(four.iter().map(|p| p.0).chain([u5, u6.0]))?);
        }
    }
    completed.sort_unstable();
    completed.dedup();
    Ok(TripleBlocks { own_steiner, pair_steiner, completed })
}

/// `|S0 + S1|` for a 3-subset and a fourth point outside its Steiner block.
pub fn forbidden_union_size(field: &Field, triple: [UnitPoint; 3], u4: UnitPoint) -> Result<usize> {
    let s0 = steiner_block_through(field, triple)?;
    if s0.contains(u4.0) {
        return Err(precondition("fourth point lies in the triple's Steiner block"));
    }
    let s1 = forbidden_set(field, [triple[0], triple[1], triple[2], u4])?;
    let mut all: Vec<u32> = s0.exps().to_vec();
    all.extend(s1.members.iter().map(|p| p.0));
    all.sort_unstable();
    all.dedup();
    Ok(all.len())
}
