//! Dense Gaussian elimination over GF(q^2).

use std::fmt;

use crate::error::{precondition, Result};
use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(precondition("ragged matrix rows"));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// The matrix with the listed rows removed.
    pub fn without_rows(&self, drop: &[usize]) -> Matrix {
        let kept: Vec<Vec<FieldElement>> =
            (0..self.rows).filter(|r| !drop.contains(r)).map(|r| self.row(r).to_vec()).collect();
        Matrix { rows: kept.len(), cols: self.cols, data: kept.concat() }
    }

    pub fn mul_vec(&self, field: &Field, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.cols {
            return Err(precondition(format!("vector of length {} against {} columns", x.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(x).fold(FieldElement::ZERO, |acc, (&a, &b)| acc + field.mul(a, b)))
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let x = field.mul(self.get(r, j), inv);
                self.set(r, j, x);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i != r && !f.is_zero() {
                    for j in c..self.cols {
                        let x = self.get(i, j) + field.mul(f, self.get(r, j));
                        self.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[FieldElement]> = (0..self.rows).map(|r| self.row(r)).collect();
        f.debug_list().entries(rows).finish()
    }
}

pub fn rank(field: &Field, m: &Matrix) -> usize {
    m.clone().rref(field).len()
}

/// A basis of the right null space `{x : M x = 0}`.
pub fn kernel(field: &Field, m: &Matrix) -> Vec<Vec<FieldElement>> {
    let mut r = m.clone();
    let pivots = r.rref(field);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![FieldElement::ZERO; m.cols];
            x[f] = FieldElement::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                // characteristic 2: -a = a
                x[p] = r.get(row, f);
            }
            x
        })
        .collect()
}

pub fn determinant(field: &Field, m: &Matrix) -> Result<FieldElement> {
    if m.rows != m.cols {
        return Err(precondition(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let mut a = m.clone();
    let n = a.rows;
    let mut det = FieldElement::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Ok(FieldElement::ZERO);
        };
        a.swap_rows(c, p);
        let pivot = a.get(c, c);
        det = field.mul(det, pivot);
        let inv = field.inv(pivot)?;
        for i in c + 1..n {
            let f = field.mul(a.get(i, c), inv);
            if !f.is_zero() {
                for j in c..n {
                    let x = a.get(i, j) + field.mul(f, a.get(c, j));
                    a.set(i, j, x);
                }
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Field, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, FieldElement(rng.gen_range(0..f.size() as u32)));
            }
        }
        m
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = Field::new(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&f, &mut rng, 3, 6);
            let ker = kernel(&f, &m);
            assert_eq!(ker.len() + rank(&f, &m), 6);
            for x in &ker {
                assert!(m.mul_vec(&f, x).unwrap().iter().all(|v| v.is_zero()));
            }
        }
    }

    #[test]
    fn determinant_vanishes_exactly_on_singular() {
        let f = Field::new(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut m = random_matrix(&f, &mut rng, 4, 4);
            let full = rank(&f, &m) == 4;
            assert_eq!(determinant(&f, &m).unwrap().is_zero(), !full);
            let row: Vec<FieldElement> = m.row(0).to_vec();
            for (c, &x) in row.iter().enumerate() {
                m.set(3, c, x);
            }
            assert!(determinant(&f, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_of_diagonal() {
        let f = Field::new(4).unwrap();
        let mut m = Matrix::zeros(3, 3);
        let d = [FieldElement(3), FieldElement(7), FieldElement(0x40)];
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        assert_eq!(determinant(&f, &m).unwrap(), f.mul(f.mul(d[0], d[1]), d[2]));
        assert!(determinant(&f, &Matrix::zeros(2, 3)).is_err());
    }
}
