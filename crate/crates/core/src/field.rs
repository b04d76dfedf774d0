//! Arithmetic in GF(2^{2m}) with GF(q), q = 2^m, embedded as the subfield fixed
//! by x -> x^q, and the unit circle U_{q+1} = { u : u^{q+1} = 1 }.
//!
//! Elements are polynomial-basis bit vectors packed into a `u32`. Fields with
//! 2m <= 16 use log/antilog tables; larger ones fall back to carry-less
//! multiplication with explicit reduction.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_M: u32 = 4;
pub const MAX_M: u32 = 16;

/// Largest extension degree 2m for which log/antilog tables are built.
const TABLE_DEGREE_LIMIT: u32 = 16;

/// An element of GF(2^{2m}) in polynomial basis.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

/// A point of U_{q+1}, stored as the exponent `e` of `gamma^e`, `0 <= e <= q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitPoint(pub u32);

/// Where a root of a quadratic lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootLocation {
    pub in_subfield: bool,
    pub on_unit_circle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticRoots {
    /// `a = 0`: the polynomial is `(T + sqrt(b))^2`.
    Double(FieldElement),
    /// Two distinct roots in GF(q^2).
    Pair(FieldElement, FieldElement),
    /// No root in GF(q^2).
    Irreducible,
}

/// Root count of `T^2 + aT + b` with `a, b` in GF(q), split by location.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubfieldQuadratic {
    OneRootInSubfield,
    TwoRootsInSubfield,
    TwoRootsOutsideSubfield,
}

/// Reproducibility record for a field: the subfield degree and the reduction
/// polynomial. Text form is `m=<m>,reduction_poly=0x<hex>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub m: u32,
    #[serde(with = "hex_u64")]
    pub reduction_poly: u64,
}

impl fmt::Display for FieldRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={},reduction_poly={:#x}", self.m, self.reduction_poly)
    }
}

impl FromStr for FieldRecord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut m = None;
        let mut poly = None;
        for part in s.trim().split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("malformed field record entry `{part}`")))?;
            match key.trim() {
                "m" => {
                    m = Some(value.trim().parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?)
                }
                "reduction_poly" => poly = Some(parse_hex(value.trim())?),
                other => return Err(Error::Parse(format!("unknown field record key `{other}`"))),
            }
        }
        match (m, poly) {
            (Some(m), Some(reduction_poly)) => Ok(FieldRecord { m, reduction_poly }),
            _ => Err(Error::Parse("field record needs both m and reduction_poly".into())),
        }
    }
}

fn parse_hex(s: &str) -> Result<u64> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| Error::Parse(format!("bad hex `{s}`: {e}")))
}

mod hex_u64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{value:#x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_hex(&text).map_err(serde::de::Error::custom)
    }
}

struct LogTables {
    /// `exp[i] = alpha^i` for `0 <= i < 2 * order`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

enum UnitLookup {
    Log,
    Map(HashMap<u32, u32>),
}

/// GF(2^{2m}) together with its subfield GF(2^m) and unit circle U_{q+1}.
///
/// Immutable after construction; share it freely across threads.
pub struct Field {
    m: u32,
    degree: u32,
    poly: u64,
    order: u64,
    q: u64,
    tables: Option<LogTables>,
    gamma: FieldElement,
    units: Vec<FieldElement>,
    unit_lookup: UnitLookup,
    /// Echelon basis of the image of y -> y^2 + y, indexed by leading bit,
    /// with one preimage per basis vector.
    artin_schreier: Vec<Option<(u32, u32)>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("reduction_poly", &format_args!("{:#x}", self.poly))
            .finish()
    }
}

impl Field {
    /// Builds GF(2^{2m}) over the lexicographically least primitive polynomial
    /// of degree 2m.
    pub fn new(m: u32) -> Result<Field> {
        check_degree(m)?;
        let poly = least_primitive_poly(2 * m);
        Field::with_poly(m, poly)
    }

    pub fn from_record(record: &FieldRecord) -> Result<Field> {
        Field::with_poly(record.m, record.reduction_poly)
    }

    /// Builds the field over a caller-chosen reduction polynomial, which must
    /// be primitive of degree 2m.
    pub fn with_poly(m: u32, poly: u64) -> Result<Field> {
        check_degree(m)?;
        let degree = 2 * m;
        if poly >> degree != 1 || !is_primitive(poly, degree) {
            return Err(Error::NotPrimitive { poly, degree });
        }
        let order = (1u64 << degree) - 1;
        let q = 1u64 << m;

        let tables = (degree <= TABLE_DEGREE_LIMIT).then(|| build_tables(poly, degree, order));
        let mut field = Field {
            m,
            degree,
            poly,
            order,
            q,
            tables,
            gamma: FieldElement::ONE,
            units: Vec::new(),
            unit_lookup: UnitLookup::Log,
            artin_schreier: Vec::new(),
        };

        // beta = alpha^(q-1) generates U_{q+1}; gamma = beta^{-1}.
        let alpha = field.alpha();
        field.gamma = field.pow(alpha, order - (q - 1));
        let mut units = Vec::with_capacity(q as usize + 1);
        let mut x = FieldElement::ONE;
        for _ in 0..=q {
            units.push(x);
            x = field.mul(x, field.gamma);
        }
        if x != FieldElement::ONE || units[1..].contains(&FieldElement::ONE) {
            return Err(Error::Internal("gamma does not have order q+1".into()));
        }
        if field.tables.is_none() {
            let map = units.iter().enumerate().map(|(e, u)| (u.0, e as u32)).collect();
            field.unit_lookup = UnitLookup::Map(map);
        }
        field.units = units;
        field.artin_schreier = field.build_artin_schreier();
        Ok(field)
    }

    pub fn record(&self) -> FieldRecord {
        FieldRecord { m: self.m, reduction_poly: self.poly }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of points of U_{q+1}, which is also the code length.
    pub fn n(&self) -> usize {
        self.q as usize + 1
    }

    /// Size of the multiplicative group of GF(q^2).
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn size(&self) -> u64 {
        self.order + 1
    }

    pub fn reduction_poly(&self) -> u64 {
        self.poly
    }

    /// The canonical primitive element: the class of the indeterminate.
    pub fn alpha(&self) -> FieldElement {
        FieldElement(2)
    }

    /// Generator of U_{q+1}.
    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement::ZERO
                } else {
                    let i = t.log[a.0 as usize] + t.log[b.0 as usize];
                    FieldElement(t.exp[i as usize])
                }
            }
            None => FieldElement(reduce(clmul(a.0 as u64, b.0 as u64), self.poly, self.degree)),
        }
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        if let Some(t) = &self.tables {
            let l = (t.log[a.0 as usize] as u128 * e as u128 % self.order as u128) as usize;
            return FieldElement(t.exp[l]);
        }
        let mut base = a;
        let mut e = e % self.order;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a possibly negative exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.pow(a, e.rem_euclid(self.order as i64) as u64))
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64;
                FieldElement(t.exp[((self.order - l) % self.order) as usize])
            }
            None => self.pow(a, self.order - 1),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root, `a^(2^(2m-1))`.
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        let mut x = a;
        for _ in 1..self.degree {
            x = self.square(x);
        }
        x
    }

    /// `x -> x^q`.
    pub fn frobenius_q(&self, a: FieldElement) -> FieldElement {
        let mut x = a;
        for _ in 0..self.m {
            x = self.square(x);
        }
        x
    }

    /// Relative trace GF(q^2) -> GF(q): `x + x^q`.
    pub fn trace_q2_to_q(&self, x: FieldElement) -> FieldElement {
        x + self.frobenius_q(x)
    }

    /// Absolute trace GF(q) -> GF(2), returned as 0 or 1.
    pub fn abs_trace_q_to_2(&self, x: FieldElement) -> Result<u8> {
        if !self.is_in_subfield(x) {
            return Err(Error::NotInSubfield(x.0));
        }
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc += y;
            y = self.square(y);
        }
        match acc.0 {
            0 => Ok(0),
            1 => Ok(1),
            other => Err(Error::Internal(format!("absolute trace landed outside GF(2): {other:#x}"))),
        }
    }

    pub fn is_in_subfield(&self, x: FieldElement) -> bool {
        self.frobenius_q(x) == x
    }

    pub fn is_on_unit_circle(&self, x: FieldElement) -> bool {
        !x.is_zero() && self.pow(x, self.q + 1) == FieldElement::ONE
    }

    pub fn locate(&self, x: FieldElement) -> RootLocation {
        RootLocation { in_subfield: self.is_in_subfield(x), on_unit_circle: self.is_on_unit_circle(x) }
    }

    /// `gamma^e`.
    #[inline]
    pub fn unit(&self, p: UnitPoint) -> FieldElement {
        self.units[p.0 as usize]
    }

    /// All points of U_{q+1} in exponent order.
    pub fn unit_values(&self) -> &[FieldElement] {
        &self.units
    }

    /// Inverse of [`Field::unit`]; `None` off the unit circle.
    pub fn unit_point(&self, x: FieldElement) -> Option<UnitPoint> {
        if x.is_zero() {
            return None;
        }
        match (&self.unit_lookup, &self.tables) {
            (UnitLookup::Log, Some(t)) => {
                // x = alpha^L = beta^(L/(q-1)) = gamma^(-L/(q-1))
                let l = t.log[x.0 as usize] as u64;
                if !l.is_multiple_of(self.q - 1) {
                    return None;
                }
                let j = l / (self.q - 1);
                Some(UnitPoint(((self.q + 1 - j) % (self.q + 1)) as u32))
            }
            (UnitLookup::Map(map), _) => map.get(&x.0).map(|&e| UnitPoint(e)),
            (UnitLookup::Log, None) => unreachable!("log lookup requires tables"),
        }
    }

    /// All elements of GF(q), in increasing bit-pattern order.
    pub fn subfield_elements(&self) -> Vec<FieldElement> {
        let generator = self.pow(self.alpha(), self.q + 1);
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(FieldElement::ZERO);
        let mut x = FieldElement::ONE;
        for _ in 0..self.q - 1 {
            out.push(x);
            x = self.mul(x, generator);
        }
        out.sort_unstable();
        out
    }

    /// Every element of GF(q^2) in increasing bit-pattern order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..=self.order as u32).map(FieldElement)
    }

    fn build_artin_schreier(&self) -> Vec<Option<(u32, u32)>> {
        let mut basis: Vec<Option<(u32, u32)>> = vec![None; self.degree as usize];
        for bit in 0..self.degree {
            let y = FieldElement(1 << bit);
            let mut image = (self.square(y) + y).0;
            let mut pre = y.0;
            while image != 0 {
                let top = 31 - image.leading_zeros();
                match basis[top as usize] {
                    Some((img, p)) => {
                        image ^= img;
                        pre ^= p;
                    }
                    None => {
                        basis[top as usize] = Some((image, pre));
                        break;
                    }
                }
            }
        }
        basis
    }

    /// Some `y` with `y^2 + y = c`, if one exists in GF(q^2). The other
    /// solution is `y + 1`.
    pub fn solve_artin_schreier(&self, c: FieldElement) -> Option<FieldElement> {
        let mut rest = c.0;
        let mut y = 0u32;
        while rest != 0 {
            let top = 31 - rest.leading_zeros();
            let (img, pre) = self.artin_schreier[top as usize]?;
            rest ^= img;
            y ^= pre;
        }
        Some(FieldElement(y))
    }

    /// Roots of `T^2 + aT + b` in GF(q^2).
    pub fn solve_quadratic(&self, a: FieldElement, b: FieldElement) -> QuadraticRoots {
        if a.is_zero() {
            return QuadraticRoots::Double(self.sqrt(b));
        }
        // T = a*y turns the equation into y^2 + y = b / a^2.
        let a_inv = self.inv(a).expect("a is nonzero");
        let c = self.mul(b, self.square(a_inv));
        match self.solve_artin_schreier(c) {
            Some(y) => {
                let r1 = self.mul(a, y);
                let r2 = r1 + a;
                QuadraticRoots::Pair(r1.min(r2), r1.max(r2))
            }
            None => QuadraticRoots::Irreducible,
        }
    }

    /// Classifies `T^2 + aT + b` with coefficients in GF(q) by actually
    /// locating its roots.
    pub fn subfield_quadratic(&self, a: FieldElement, b: FieldElement) -> Result<SubfieldQuadratic> {
        for x in [a, b] {
            if !self.is_in_subfield(x) {
                return Err(Error::NotInSubfield(x.0));
            }
        }
        match self.solve_quadratic(a, b) {
            QuadraticRoots::Double(_) => Ok(SubfieldQuadratic::OneRootInSubfield),
            QuadraticRoots::Pair(r1, r2) => match (self.is_in_subfield(r1), self.is_in_subfield(r2)) {
                (true, true) => Ok(SubfieldQuadratic::TwoRootsInSubfield),
                (false, false) => Ok(SubfieldQuadratic::TwoRootsOutsideSubfield),
                _ => Err(Error::Internal("conjugate roots split across GF(q)".into())),
            },
            QuadraticRoots::Irreducible => {
                Err(Error::Internal("quadratic over GF(q) has no root in GF(q^2)".into()))
            }
        }
    }

    /// Roots of `u^2 + au + b` on U_{q+1} other than `sqrt(b)`, found as
    /// `sqrt(b) u'` with `u'` a root of `T^2 + (a / sqrt(b)) T + 1`.
    pub fn solve_quadratic_unit(&self, a: FieldElement, b: FieldElement) -> Result<Vec<UnitPoint>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition("unit-circle quadratic needs a != 0 and b != 0".into()));
        }
        let s = self.sqrt(b);
        let scaled = self.div(a, s)?;
        let candidates = match self.solve_quadratic(scaled, FieldElement::ONE) {
            QuadraticRoots::Pair(r1, r2) => vec![self.mul(s, r1), self.mul(s, r2)],
            QuadraticRoots::Double(r) => vec![self.mul(s, r)],
            QuadraticRoots::Irreducible => Vec::new(),
        };
        let mut roots: Vec<UnitPoint> = candidates
            .into_iter()
            .filter(|&x| x != s)
            .filter_map(|x| self.unit_point(x))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots)
    }
}

fn check_degree(m: u32) -> Result<()> {
    if (MIN_M..=MAX_M).contains(&m) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree { m })
    }
}

fn build_tables(poly: u64, degree: u32, order: u64) -> LogTables {
    let size = 1usize << degree;
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; size];
    let mut x: u64 = 1;
    for (i, slot) in exp.iter_mut().take(order as usize).enumerate() {
        *slot = x as u32;
        log[x as usize] = i as u32;
        x <<= 1;
        if x >> degree & 1 == 1 {
            x ^= poly;
        }
    }
    for i in order as usize..exp.len() {
        exp[i] = exp[i - order as usize];
    }
    LogTables { exp, log }
}

#[inline]
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

#[inline]
fn reduce(mut x: u64, poly: u64, degree: u32) -> u32 {
    for i in (degree..2 * degree).rev() {
        if x >> i & 1 == 1 {
            x ^= poly << (i - degree);
        }
    }
    x as u32
}

fn poly_pow_x(e: u64, poly: u64, degree: u32) -> u32 {
    let mut acc = 1u32;
    let mut base = 2u32;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = reduce(clmul(acc as u64, base as u64), poly, degree);
        }
        base = reduce(clmul(base as u64, base as u64), poly, degree);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff the class of `x` has multiplicative order `2^degree - 1` modulo
/// `poly`, which forces `poly` to be irreducible and primitive.
pub fn is_primitive(poly: u64, degree: u32) -> bool {
    if degree == 0 || degree > 32 || poly >> degree != 1 || poly & 1 == 0 {
        return false;
    }
    let order = (1u64 << degree) - 1;
    if poly_pow_x(order, poly, degree) != 1 {
        return false;
    }
    prime_factors(order).into_iter().all(|p| poly_pow_x(order / p, poly, degree) != 1)
}

/// The primitive polynomial of the given degree whose bit encoding is smallest.
pub fn least_primitive_poly(degree: u32) -> u64 {
    let mut candidate = (1u64 << degree) | 1;
    loop {
        if is_primitive(candidate, degree) {
            return candidate;
        }
        candidate += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_for_small_m() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.size(), 256);
        assert_eq!(f.unit_values().len(), 17);
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.unit_values().len(), 33);
        assert_eq!(f5.pow(f5.gamma(), 33), FieldElement::ONE);
    }

    #[test]
    fn degree_eight_candidate_is_primitive() {
        // x^8+x^4+x^3+x^2+1: order of x computed directly by stepping powers.
        let poly = 0x11d;
        let mut x = 2u32;
        let mut order = 1;
        while x != 1 {
            x = reduce(clmul(x as u64, 2), poly, 8);
            order += 1;
        }
        assert_eq!(order, 255);
        assert!(is_primitive(poly, 8));
        // x^8+x^4+x^3+x+1 is irreducible but x has order 51.
        assert!(!is_primitive(0x11b, 8));
        assert_eq!(least_primitive_poly(8), 0x11d);
    }

    #[test]
    fn rejects_out_of_range_m() {
        assert!(matches!(Field::new(3), Err(Error::UnsupportedDegree { m: 3 })));
        assert!(matches!(Field::new(17), Err(Error::UnsupportedDegree { m: 17 })));
    }

    #[test]
    fn rejects_non_primitive_poly() {
        assert!(matches!(Field::with_poly(4, 0x11b), Err(Error::NotPrimitive { .. })));
    }

    #[test]
    fn gamma_has_exact_order() {
        for m in [4, 5, 6] {
            let f = Field::new(m).unwrap();
            let q = f.q();
            for j in 1..=q {
                assert_ne!(f.pow(f.gamma(), j), FieldElement::ONE, "m={m} j={j}");
            }
            assert_eq!(f.pow(f.gamma(), q + 1), FieldElement::ONE);
        }
    }

    #[test]
    fn basic_identities() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.sqrt(FieldElement::ONE), FieldElement::ONE);
        assert!(matches!(f.inv(FieldElement::ZERO), Err(Error::ZeroInverse)));
        for x in f.elements().skip(1) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
        }
        for &u in f.unit_values() {
            assert_eq!(f.frobenius_q(u), f.inv(u).unwrap());
            assert_eq!(f.trace_q2_to_q(u), u + f.inv(u).unwrap());
        }
        assert_eq!(f.trace_q2_to_q(FieldElement::ZERO), FieldElement::ZERO);
    }

    #[test]
    fn sqrt_inverts_square_exhaustively() {
        let f = Field::new(4).unwrap();
        for x in f.elements() {
            assert_eq!(f.sqrt(f.square(x)), x);
        }
    }

    #[test]
    fn table_and_clmul_paths_agree() {
        let f = Field::new(5).unwrap();
        let poly = f.reduction_poly();
        for a in (0..1024u32).step_by(7) {
            for b in (0..1024u32).step_by(11) {
                let via_tables = f.mul(FieldElement(a), FieldElement(b));
                let direct = reduce(clmul(a as u64, b as u64), poly, 10);
                assert_eq!(via_tables.0, direct);
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = Field::new(9).unwrap();
        let x = FieldElement(0x1_2345);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
        assert_eq!(f.pow(f.gamma(), f.q() + 1), FieldElement::ONE);
        let u = f.unit(UnitPoint(77));
        assert_eq!(f.unit_point(u), Some(UnitPoint(77)));
        assert_eq!(f.sqrt(f.square(x)), x);
    }

    #[test]
    fn unit_point_round_trip() {
        let f = Field::new(6).unwrap();
        for e in 0..=f.q() as u32 {
            assert_eq!(f.unit_point(f.unit(UnitPoint(e))), Some(UnitPoint(e)));
        }
        assert_eq!(f.unit_point(f.alpha()), None);
        assert_eq!(f.unit_point(FieldElement::ZERO), None);
    }

    #[test]
    fn subfield_trace_balance() {
        let f = Field::new(5).unwrap();
        let sub = f.subfield_elements();
        assert_eq!(sub.len(), 32);
        let zeros = sub.iter().filter(|&&x| f.abs_trace_q_to_2(x).unwrap() == 0).count();
        assert_eq!(zeros, 16);
        assert_eq!(f.abs_trace_q_to_2(FieldElement::ZERO).unwrap(), 0);
        assert!(matches!(f.abs_trace_q_to_2(f.alpha()), Err(Error::NotInSubfield(_))));
    }

    #[test]
    fn quadratic_with_zero_linear_term() {
        let f = Field::new(4).unwrap();
        let b = FieldElement(0x37);
        assert_eq!(f.solve_quadratic(FieldElement::ZERO, b), QuadraticRoots::Double(f.sqrt(b)));
        assert_eq!(
            f.solve_quadratic(FieldElement::ZERO, FieldElement::ZERO),
            QuadraticRoots::Double(FieldElement::ZERO)
        );
    }

    #[test]
    fn unit_quadratic_rejects_zero_coefficients() {
        let f = Field::new(4).unwrap();
        assert!(f.solve_quadratic_unit(FieldElement::ZERO, FieldElement::ONE).is_err());
        assert!(f.solve_quadratic_unit(FieldElement::ONE, FieldElement::ZERO).is_err());
    }

    #[test]
    fn record_text_round_trip() {
        let f = Field::new(5).unwrap();
        let text = f.record().to_string();
        assert!(text.starts_with("m=5,reduction_poly=0x"));
        let parsed: FieldRecord = text.parse().unwrap();
        assert_eq!(parsed, f.record());
        let rebuilt = Field::from_record(&parsed).unwrap();
        assert_eq!(rebuilt.gamma(), f.gamma());
        assert!("m=5".parse::<FieldRecord>().is_err());
        assert!("m=5,poly=0x3".parse::<FieldRecord>().is_err());
    }
}
