//! The code `{c in GF(q)^(q+1) : c H^T = 0}` with `H[r][i] = gamma^(r i)`,
//! `r in {-3, -2, -1, 1, 2, 3}`, and the column-restricted matrices `M_l`.

use crate::blocks::Block;
use crate::code::poly::{bch_generator, PolyGFq};
use crate::error::{internal, precondition, Error, Result};
use crate::field::{Field, FieldElement, UnitPoint};
use crate::linalg::{kernel, rank, Matrix};

/// Row exponents of the parity-check matrix, in row order.
pub const H_ROWS: [i64; 6] = [-3, -2, -1, 1, 2, 3];

#[derive(Clone, Debug)]
pub struct LinearCodeSpec {
    pub q: u64,
    pub n: usize,
    pub dimension: usize,
    pub generator: PolyGFq,
    pub h: Matrix,
}

pub fn build_code(field: &Field) -> Result<LinearCodeSpec> {
    let n = field.n();
    let generator = bch_generator(field)?;
    let degree = generator.degree().ok_or_else(|| internal("zero generator"))?;
    let mut h = Matrix::zeros(H_ROWS.len(), n);
    for (row, &r) in H_ROWS.iter().enumerate() {
        for i in 0..n {
            h.set(row, i, field.unit(UnitPoint(((r * i as i64).rem_euclid(n as i64)) as u32)));
        }
    }
    let code = LinearCodeSpec { q: field.q(), n, dimension: n - degree, generator, h };
    let mut g = code.generator.coeffs().to_vec();
    g.resize(n, FieldElement::ZERO);
    if !code.syndrome(field, &g)?.iter().all(|s| s.is_zero()) {
        return Err(internal("generator polynomial fails the parity check"));
    }
    Ok(code)
}

impl LinearCodeSpec {
    pub fn syndrome(&self, field: &Field, c: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.h.mul_vec(field, c)
    }

    pub fn contains(&self, field: &Field, c: &[FieldElement]) -> Result<bool> {
        if c.iter().any(|x| !field.is_in_subfield(*x)) {
            return Ok(false);
        }
        Ok(self.syndrome(field, c)?.iter().all(|s| s.is_zero()))
    }

    /// Places `values` on the coordinates of `support`, zero elsewhere.
    pub fn embed(&self, support: &Block, values: &[FieldElement]) -> Result<Codeword> {
        if support.len() != values.len() {
            return Err(precondition("support and value lengths differ"));
        }
        let mut c = vec![FieldElement::ZERO; self.n];
        for (&e, &x) in support.exps().iter().zip(values) {
            c[e as usize] = x;
        }
        Ok(Codeword::new(c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    values: Vec<FieldElement>,
    weight: usize,
}

impl Codeword {
    pub fn new(values: Vec<FieldElement>) -> Codeword {
        let weight = values.iter().filter(|x| !x.is_zero()).count();
        Codeword { values, weight }
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn support(&self) -> Block {
        Block::from_sorted(
            &self.values.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i as u32).collect::<Vec<_>>(),
        )
    }

    pub fn zero_set(&self) -> Block {
        Block::from_sorted(
            &self.values.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(i, _)| i as u32).collect::<Vec<_>>(),
        )
    }

    /// Cyclic shift by one position.
    pub fn rotate(&self) -> Codeword {
        let mut v = self.values.clone();
        v.rotate_right(1);
        Codeword { values: v, weight: self.weight }
    }

    pub fn scale(&self, field: &Field, a: FieldElement) -> Codeword {
        Codeword::new(self.values.iter().map(|&x| field.mul(a, x)).collect())
    }

    /// Comma separated hex values.
    pub fn to_csv(&self) -> String {
        self.values.iter().map(|x| format!("{:x}", x.0)).collect::<Vec<_>>().join(",")
    }
}

/// `M_l`: the 6 x l matrix with rows `u_j^r`, `r in {-3, -2, -1, 1, 2, 3}`.
#[derive(Clone, Debug)]
pub struct MMatrix {
    pub block: Block,
    pub matrix: Matrix,
}

pub fn m_matrix(field: &Field, block: &Block) -> MMatrix {
    let n = field.n() as i64;
    let mut matrix = Matrix::zeros(H_ROWS.len(), block.len());
    for (row, &r) in H_ROWS.iter().enumerate() {
        for (col, &e) in block.exps().iter().enumerate() {
            matrix.set(row, col, field.unit(UnitPoint((r * e as i64).rem_euclid(n) as u32)));
        }
    }
    MMatrix { block: block.clone(), matrix }
}

impl MMatrix {
    pub fn rank(&self, field: &Field) -> usize {
        rank(field, &self.matrix)
    }

    /// Drops rows by position in `{-3, -2, -1, 1, 2, 3}` order.
    pub fn without_rows(&self, rows: &[usize]) -> Matrix {
        self.matrix.without_rows(rows)
    }
}

pub fn m_rank(field: &Field, m: &Matrix) -> usize {
    rank(field, m)
}

fn frobenius_sum(field: &Field, x: &[FieldElement]) -> Vec<FieldElement> {
    x.iter().map(|&v| field.trace_q2_to_q(v)).collect()
}

/// A nonzero `x in GF(q)^l` with `M x = 0`, obtained from a GF(q^2) kernel
/// vector `x'` as `x'' + x''^q` where `x'' = (alpha / x'_i) x'`. The
/// normalizing coordinate `i` moves on to the next nonzero entry whenever the
/// sum vanishes.
pub fn kernel_to_subfield_solution(field: &Field, m: &Matrix) -> Result<Vec<FieldElement>> {
    let ker = kernel(field, m);
    let x1 = ker.first().ok_or_else(|| precondition("matrix has full column rank"))?;
    for (i, &xi) in x1.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let scale = field.div(field.alpha(), xi)?;
        let x2: Vec<FieldElement> = x1.iter().map(|&v| field.mul(scale, v)).collect();
        let x = frobenius_sum(field, &x2);
        if x.iter().all(|v| v.is_zero()) {
            continue;
        }
        if !m.mul_vec(field, &x)?.iter().all(|v| v.is_zero()) {
            return Err(internal(format!("symmetrized vector at coordinate {i} left the kernel")));
        }
        return Ok(x);
    }
    Err(internal("no normalization gave a nonzero subfield solution"))
}

/// A GF(q) basis of `{x in GF(q)^l : M x = 0}`, for `M` whose row set is
/// closed under conjugation.
pub fn subfield_kernel_basis(field: &Field, m: &Matrix) -> Result<Vec<Vec<FieldElement>>> {
    let ker = kernel(field, m);
    let mut spanning = Vec::with_capacity(2 * ker.len());
    for v in &ker {
        spanning.push(frobenius_sum(field, v));
        let av: Vec<FieldElement> = v.iter().map(|&x| field.mul(field.alpha(), x)).collect();
        spanning.push(frobenius_sum(field, &av));
    }
    if spanning.is_empty() {
        return Ok(Vec::new());
    }
    let mut s = Matrix::from_rows(&spanning)?;
    let pivots = s.rref(field);
    let basis: Vec<Vec<FieldElement>> = (0..pivots.len()).map(|r| s.row(r).to_vec()).collect();
    for v in &basis {
        if v.iter().any(|x| !field.is_in_subfield(*x)) {
            return Err(Error::Internal("subfield kernel basis left GF(q)".into()));
        }
        if !m.mul_vec(field, v)?.iter().all(|x| x.is_zero()) {
            return Err(internal("subfield kernel basis left the kernel"));
        }
    }
    if basis.len() != ker.len() {
        return Err(internal(format!("GF(q) kernel dimension {} != GF(q^2) dimension {}", basis.len(), ker.len())));
    }
    Ok(basis)
}

/// Number of codewords whose support is exactly the block, i.e. vectors in
/// the GF(q) kernel of `M` with every coordinate nonzero.
pub fn full_support_count(field: &Field, m: &Matrix) -> Result<u64> {
    let basis = subfield_kernel_basis(field, m)?;
    let subfield = field.subfield_elements();
    match basis.len() {
        0 => Ok(0),
        1 => Ok(if basis[0].iter().all(|x| !x.is_zero()) { field.q() - 1 } else { 0 }),
        2 => {
            let mut count = 0;
            for &a in &subfield {
                for &b in &subfield {
                    let full = basis[0]
                        .iter()
                        .zip(&basis[1])
                        .all(|(&x, &y)| !(field.mul(a, x) + field.mul(b, y)).is_zero());
                    count += u64::from(full);
                }
            }
            Ok(count)
        }
        d => Err(precondition(format!("kernel of dimension {d} is too large to scan"))),
    }
}
