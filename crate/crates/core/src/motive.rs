//! Hodge–Deligne polynomials and Hodge diamonds.
//!
//! An [`EPolynomial`] is a sparse integer polynomial in two variables `u`, `v`
//! whose `(p, q)` coefficient for a smooth compact variety is
//! `(-1)^(p+q) h^{p,q}`. Sums model the scissor relation (a closed piece plus
//! its open complement), products model Zariski locally trivial fibrations,
//! and [`e_blowup`] adds the exceptional contribution of blowing up a smooth
//! center. Intermediate values may have any sign; only [`diamond_from_e`]
//! enforces the sign pattern of an actual Hodge diamond.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::MotiveError;

/// Sparse bivariate polynomial with exact integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c * u^p v^q`
    pub fn monomial(p: u32, q: u32, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(p, q, c.into())])
    }

    /// `(uv)^k`
    pub fn uv_power(k: u32) -> Self {
        Self::monomial(k, k, 1)
    }

    /// Builds a polynomial from `(p, q, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut out = Self::zero();
        for (p, q, c) in terms {
            out.add_term(p, q, c.into());
        }
        out
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((p, q)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent of `u` and of `v`, or `None` for the zero polynomial.
    pub fn max_degrees(&self) -> Option<(u32, u32)> {
        let p = self.terms.keys().map(|&(p, _)| p).max()?;
        let q = self.terms.keys().map(|&(_, q)| q).max()?;
        Some((p, q))
    }

    /// True when the polynomial is invariant under `u <-> v`.
    pub fn is_conjugation_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(p, q), c)| self.terms.get(&(q, p)) == Some(c))
    }

    /// Signed Hodge number `(-1)^(p+q) * coefficient(p, q)`.
    pub fn signed_hodge_number(&self, p: u32, q: u32) -> BigInt {
        let c = self.coefficient(p, q);
        if (p + q).is_multiple_of(2) {
            c
        } else {
            -c
        }
    }

    /// Polynomial divided exactly by `uv`, if every term is divisible by it.
    pub fn divide_by_uv(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (&(p, q), c) in &self.terms {
            if p == 0 || q == 0 {
                return None;
            }
            out.terms.insert((p - 1, q - 1), c.clone());
        }
        Some(out)
    }

    /// Evaluation at `u = v = 1`.
    pub fn euler_char(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &EPolynomial {
    type Output = EPolynomial;

    fn add(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl Add for EPolynomial {
    type Output = EPolynomial;

    fn add(self, rhs: EPolynomial) -> EPolynomial {
        &self + &rhs
    }
}

impl Neg for &EPolynomial {
    type Output = EPolynomial;

    fn neg(self) -> EPolynomial {
        EPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for EPolynomial {
    type Output = EPolynomial;

    fn neg(self) -> EPolynomial {
        -&self
    }
}

impl Sub for &EPolynomial {
    type Output = EPolynomial;

    fn sub(self, rhs: &EPolynomial) -> EPolynomial {
        self + &(-rhs)
    }
}

impl Sub for EPolynomial {
    type Output = EPolynomial;

    fn sub(self, rhs: EPolynomial) -> EPolynomial {
        &self - &rhs
    }
}

impl Mul for &EPolynomial {
    type Output = EPolynomial;

    fn mul(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for EPolynomial {
    type Output = EPolynomial;

    fn mul(self, rhs: EPolynomial) -> EPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(p, q), c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let monomial = match (p, q) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = String::new();
                    for (var, e) in [("u", p), ("v", q)] {
                        match e {
                            0 => {}
                            1 => s.push_str(var),
                            _ => s.push_str(&format!("{var}^{e}")),
                        }
                    }
                    s
                }
            };
            if monomial.is_empty() || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            f.write_str(&monomial)?;
        }
        Ok(())
    }
}

// JSON form: sorted list of [p, q, coefficient]. Coefficients that do not fit
// in an i64 are written as decimal strings.
impl Serialize for EPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, serde_json::Value)> = self
            .terms
            .iter()
            .map(|(&(p, q), c)| {
                let value = match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                };
                (p, q, value)
            })
            .collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let triples: Vec<(u32, u32, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut out = EPolynomial::zero();
        for (p, q, value) in triples {
            let c: BigInt = match value {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient must be an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            out.add_term(p, q, c);
        }
        Ok(out)
    }
}

/// Hodge numbers `h^{p,q}` of a compact variety of dimension `dim`.
///
/// `rows[p][q] = h^{p,q}`. Construction enforces `h^{p,q} = h^{q,p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiamondJson", into = "DiamondJson")]
pub struct HodgeDiamond {
    dim: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct DiamondJson {
    dim: usize,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<DiamondJson> for HodgeDiamond {
    type Error = MotiveError;

    fn try_from(value: DiamondJson) -> Result<Self, Self::Error> {
        HodgeDiamond::new(value.dim, value.rows)
    }
}

impl From<HodgeDiamond> for DiamondJson {
    fn from(value: HodgeDiamond) -> Self {
        DiamondJson {
            dim: value.dim,
            rows: value.rows,
        }
    }
}

impl HodgeDiamond {
    #[allow(clippy::needless_range_loop)]
    pub fn new(dim: usize, rows: Vec<Vec<u64>>) -> Result<Self, MotiveError> {
        if rows.len() != dim + 1 || rows.iter().any(|r| r.len() != dim + 1) {
            return Err(MotiveError::BadShape { dim });
        }
        for p in 0..=dim {
            for q in 0..p {
                if rows[p][q] != rows[q][p] {
                    return Err(MotiveError::Asymmetric {
                        p: p as u32,
                        q: q as u32,
                    });
                }
            }
        }
        Ok(Self { dim, rows })
    }

    /// Diamond of a point.
    pub fn point() -> Self {
        Self {
            dim: 0,
            rows: vec![vec![1]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `h^{p,q}`, zero outside the diamond.
    pub fn h(&self, p: usize, q: usize) -> u64 {
        self.rows
            .get(p)
            .and_then(|r| r.get(q))
            .copied()
            .unwrap_or(0)
    }

    /// `h^{0,0} = 1`.
    pub fn is_connected(&self) -> bool {
        self.h(0, 0) == 1
    }

    /// Serre symmetry `h^{p,q} = h^{n-p,n-q}`.
    pub fn is_serre_symmetric(&self) -> bool {
        let n = self.dim;
        (0..=n).all(|p| (0..=n).all(|q| self.rows[p][q] == self.rows[n - p][n - q]))
    }

    pub fn betti(&self, k: usize) -> u64 {
        (0..=k.min(self.dim))
            .filter(|&p| k - p <= self.dim)
            .map(|p| self.rows[p][k - p])
            .sum()
    }

    pub fn euler_char(&self) -> i64 {
        (0..=2 * self.dim)
            .map(|k| {
                let b = self.betti(k) as i64;
                if k % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    pub fn to_e_polynomial(&self) -> EPolynomial {
        e_from_diamond(self)
    }
}

impl fmt::Display for HodgeDiamond {
    /// Renders the diamond with `h^{n,n}` at the top, one row per total degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|h| h.to_string().len())
            .max()
            .unwrap_or(1);
        let lines: Vec<String> = (0..=2 * n)
            .rev()
            .map(|k| {
                (0..=k)
                    .filter(|&p| p <= n && k - p <= n)
                    .map(|p| format!("{:^width$}", self.rows[p][k - p]))
                    .collect::<Vec<_>>()
                    .join(&" ".repeat(width))
            })
            .collect();
        let full = lines.iter().map(String::len).max().unwrap_or(0);
        for line in lines {
            writeln!(f, "{}{}", " ".repeat((full - line.len()) / 2), line)?;
        }
        Ok(())
    }
}

pub fn e_add(a: &EPolynomial, b: &EPolynomial) -> EPolynomial {
    a + b
}

pub fn e_mul(a: &EPolynomial, b: &EPolynomial) -> EPolynomial {
    a * b
}

/// `1 + uv + ... + (uv)^n`
pub fn e_projective(n: u32) -> EPolynomial {
    EPolynomial::from_terms((0..=n).map(|k| (k, k, 1)))
}

/// `uv + ... + (uv)^m`, the exceptional factor of a codimension `m + 1` blowup.
fn uv_run(m: u32) -> EPolynomial {
    EPolynomial::from_terms((1..=m).map(|k| (k, k, 1)))
}

/// Smooth projective curve of genus `g`: `1 - g u - g v + uv`.
pub fn e_curve(g: u32) -> EPolynomial {
    e_curve_arithmetic(i64::from(g))
}

/// Same polynomial for a possibly negative arithmetic genus. Only meaningful as
/// a bookkeeping device; a negative genus is not the E-polynomial of a curve.
pub fn e_curve_arithmetic(g: i64) -> EPolynomial {
    EPolynomial::from_terms([(0, 0, 1), (1, 0, -g), (0, 1, -g), (1, 1, 1)])
}

/// Projectivisation of a rank `fiber_rank` bundle over a base with
/// polynomial `base`.
pub fn e_projective_bundle(base: &EPolynomial, fiber_rank: u32) -> EPolynomial {
    assert!(fiber_rank >= 1, "projective bundle needs rank >= 1");
    base * &e_projective(fiber_rank - 1)
}

/// Blowup of `ambient` along a smooth center of codimension `codim`.
pub fn e_blowup(
    ambient: &EPolynomial,
    center: &EPolynomial,
    codim: u32,
) -> Result<EPolynomial, MotiveError> {
    if codim < 2 {
        return Err(MotiveError::InvalidCodim(codim));
    }
    Ok(ambient + &(&uv_run(codim - 1) * center))
}

/// Reads off the Hodge diamond of a smooth compact `dim`-fold from its
/// E-polynomial.
pub fn diamond_from_e(e: &EPolynomial, dim: usize) -> Result<HodgeDiamond, MotiveError> {
    if let Some((p, q)) = e
        .terms()
        .map(|(p, q, _)| (p, q))
        .find(|&(p, q)| p as usize > dim || q as usize > dim)
    {
        return Err(MotiveError::NonPure {
            p,
            q,
            value: e.signed_hodge_number(p, q).to_string(),
        });
    }
    let mut rows = vec![vec![0u64; dim + 1]; dim + 1];
    for (p, row) in rows.iter_mut().enumerate() {
        for (q, slot) in row.iter_mut().enumerate() {
            let h = e.signed_hodge_number(p as u32, q as u32);
            *slot = to_hodge_number(&h, p as u32, q as u32)?;
        }
    }
    HodgeDiamond::new(dim, rows)
}

/// Signed Hodge numbers `h^{p,q}` for all `p + q < bound`, checked for sign
/// and conjugation symmetry on that range only.
///
/// Used where only the low-degree part of a diamond is meaningful.
pub fn low_degree_hodge_numbers(
    e: &EPolynomial,
    bound: u32,
) -> Result<BTreeMap<(u32, u32), u64>, MotiveError> {
    let mut out = BTreeMap::new();
    for p in 0..bound {
        for q in 0..bound - p {
            let h = e.signed_hodge_number(p, q);
            out.insert((p, q), to_hodge_number(&h, p, q)?);
        }
    }
    for (&(p, q), h) in &out {
        if out.get(&(q, p)) != Some(h) {
            return Err(MotiveError::Asymmetric { p, q });
        }
    }
    Ok(out)
}

fn to_hodge_number(h: &BigInt, p: u32, q: u32) -> Result<u64, MotiveError> {
    if h.is_negative() {
        return Err(MotiveError::NonPure {
            p,
            q,
            value: h.to_string(),
        });
    }
    h.to_u64().ok_or(MotiveError::Overflow { p, q })
}

pub fn e_from_diamond(d: &HodgeDiamond) -> EPolynomial {
    let mut terms = Vec::new();
    for (p, row) in d.rows.iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            let sign: i64 = if (p + q) % 2 == 0 { 1 } else { -1 };
            terms.push((p as u32, q as u32, BigInt::from(h) * sign));
        }
    }
    EPolynomial::from_terms(terms)
}

pub fn euler_char(e: &EPolynomial) -> BigInt {
    e.euler_char()
}

/// E-polynomial of a K3 surface.
pub fn e_k3() -> EPolynomial {
    EPolynomial::from_terms([(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)])
}
