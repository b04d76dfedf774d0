//! Cyclotomic cosets, minimal polynomials and the BCH generator polynomial.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{internal, precondition, Result};
use crate::field::{Field, FieldElement};

/// A polynomial over GF(q) embedded in GF(q^2), low degree first, with no
/// trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGFq {
    coeffs: Vec<FieldElement>,
}

impl PolyGFq {
    /// Checks every coefficient against the subfield.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<PolyGFq> {
        if let Some(c) = coeffs.iter().find(|c| !field.is_in_subfield(**c)) {
            return Err(crate::Error::NotInSubfield(c.0));
        }
        Ok(PolyGFq::trimmed(coeffs))
    }

    fn trimmed(mut coeffs: Vec<FieldElement>) -> PolyGFq {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyGFq { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.mul(acc, x) + c)
    }

    pub fn mul(&self, field: &Field, other: &PolyGFq) -> PolyGFq {
        if self.is_zero() || other.is_zero() {
            return PolyGFq { coeffs: Vec::new() };
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += field.mul(a, b);
            }
        }
        PolyGFq::trimmed(out)
    }

    /// Quotient and remainder of `self / divisor`.
    pub fn div_rem(&self, field: &Field, divisor: &PolyGFq) -> Result<(PolyGFq, PolyGFq)> {
        let dd = divisor.degree().ok_or(crate::Error::ZeroInverse)?;
        let lead_inv = field.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let f = field.mul(rem[top], lead_inv);
            if !f.is_zero() {
                quot[top - dd] = f;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] += field.mul(f, c);
                }
            }
            rem.pop();
        }
        Ok((PolyGFq::trimmed(quot), PolyGFq::trimmed(rem)))
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> PolyGFq {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = FieldElement::ONE;
        coeffs[n] = FieldElement::ONE;
        PolyGFq { coeffs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub leader: u64,
    /// Sorted.
    pub members: Vec<u64>,
}

/// The q-cyclotomic cosets modulo n, sorted by leader.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if n == 0 || n.gcd(&q) != 1 {
        return Err(precondition(format!("gcd({n}, {q}) != 1")));
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut x = s;
        while members.insert(x) {
            seen[x as usize] = true;
            x = (x as u128 * q as u128 % n as u128) as u64;
        }
        out.push(CyclotomicCoset { leader: s, members: members.into_iter().collect() });
    }
    Ok(out)
}

/// `beta = alpha^(q-1)`, a primitive (q+1)-th root of unity; `gamma = beta^-1`.
pub fn beta(field: &Field) -> FieldElement {
    field.pow(field.alpha(), field.q() - 1)
}

/// Minimal polynomial of `beta^i` over GF(q): the product of `x - beta^j` over
/// the coset of `i` modulo q+1.
pub fn minimal_poly(field: &Field, i: u64) -> Result<PolyGFq> {
    let n = field.q() + 1;
    let coset = cyclotomic_cosets(n, field.q())?
        .into_iter()
        .find(|c| c.members.contains(&(i % n)))
        .ok_or_else(|| internal(format!("{i} lies in no coset")))?;
    let b = beta(field);
    let mut coeffs = vec![FieldElement::ONE];
    for &j in &coset.members {
        let root = field.pow(b, j);
        let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] += field.mul(c, root);
        }
        coeffs = next;
    }
    PolyGFq::new(field, coeffs).map_err(|e| internal(format!("minimal polynomial of beta^{i}: {e}")))
}

/// Generator of the narrow-sense BCH code of length q+1 and designed
/// distance 4: `lcm(M_1, M_2, M_3)`.
pub fn bch_generator(field: &Field) -> Result<PolyGFq> {
    let n = field.q() + 1;
    let cosets = cyclotomic_cosets(n, field.q())?;
    let mut leaders = Vec::new();
    for i in 1..=3u64 {
        let c = cosets.iter().find(|c| c.members.contains(&i)).expect("cosets partition Z_n");
        if !leaders.contains(&c.leader) {
            leaders.push(c.leader);
        }
    }
    let mut g = PolyGFq::new(field, vec![FieldElement::ONE])?;
    for leader in leaders {
        g = g.mul(field, &minimal_poly(field, leader)?);
    }
    Ok(g)
}
