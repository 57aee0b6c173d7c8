//! Exact multivariate polynomials and truncated formal power series.
//!
//! Variables are `z0, z1, ..., zn`, `w1, ..., wn`, `s`, `t`, `q`. The
//! designated grading variable is `z0` (alias `t`): truncation keeps exactly
//! the monomials whose combined `z0`/`t` degree is at most K. Every series
//! denominator used by the identities contains the grading variable, which
//! makes geometric expansion well founded.
//!
//! The `w_j` variables encode reciprocals `z_{-j}^{-1}` appearing in the
//! signed multivariate identities, so all exponents stay nonnegative and no
//! Laurent arithmetic is needed.
//!
//! Coefficients are arbitrary-precision integers; the Bernoulli helpers use
//! exact rationals. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A formal variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// z_i; Z(0) is the grading variable.
    Z(usize),
    /// w_j, standing for z_{-j}^{-1}.
    W(usize),
    /// Sign marker s.
    S,
    /// Bivariate grading variable t (graded together with z0).
    T,
    /// q, the major-index variable.
    Q,
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Z(i) => write!(f, "z{i}"),
            VarId::W(j) => write!(f, "w{j}"),
            VarId::S => write!(f, "s"),
            VarId::T => write!(f, "t"),
            VarId::Q => write!(f, "q"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator factor `1 - {0}` has grading degree 0; expansion is not well founded")]
    UngradedDenominator(String),
    #[error("expected an integer coefficient, got {0}")]
    NonIntegerCoefficient(String),
}

/// A monomial: sparse exponent vector, sorted by variable, exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentVector {
    exps: Vec<(VarId, u32)>,
}

impl ExponentVector {
    /// The empty monomial (constant 1).
    pub fn one() -> Self {
        ExponentVector::default()
    }

    /// A single variable raised to a power.
    pub fn var(v: VarId, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        ExponentVector { exps: vec![(v, e)] }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        ExponentVector {
            exps: map.into_iter().collect(),
        }
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    /// Degree in the grading variable: the z0 exponent plus the t exponent.
    pub fn grading_degree(&self) -> u32 {
        self.exponent(VarId::Z(0)) + self.exponent(VarId::T)
    }

    /// Product of monomials (exponents add).
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        let mut map: BTreeMap<VarId, u32> = self.exps.iter().copied().collect();
        for &(v, e) in &other.exps {
            *map.entry(v).or_insert(0) += e;
        }
        ExponentVector {
            exps: map.into_iter().collect(),
        }
    }

    pub fn pow(&self, k: u32) -> ExponentVector {
        if k == 0 {
            return Self::one();
        }
        ExponentVector {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial with arbitrary-precision integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::monomial(ExponentVector::one(), c)
    }

    pub fn monomial(m: ExponentVector, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn variable(v: VarId) -> Self {
        Polynomial::monomial(ExponentVector::var(v, 1), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &ExponentVector) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: ExponentVector, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            // Look the key up again to remove; cheap relative to BigInt work.
            let dead: Vec<ExponentVector> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut result = self.clone();
        for (m, c) in &other.terms {
            result.add_term(m.clone(), c);
        }
        result
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_truncated(other, None)
    }

    /// Product, optionally dropping monomials above a grading-degree bound.
    pub fn mul_truncated(&self, other: &Polynomial, bound: Option<u32>) -> Polynomial {
        let mut result = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if let Some(k) = bound {
                    if m.grading_degree() > k {
                        continue;
                    }
                }
                result.add_term(m, &(ca * cb));
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    /// Drop monomials with grading degree above `k`.
    pub fn truncate(&self, k: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.grading_degree() <= k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute variables: each variable v with exponent e becomes
    /// target^(e * power) per the map; unmapped variables are kept.
    pub fn specialize(&self, map: &BTreeMap<VarId, (VarId, u32)>) -> Polynomial {
        let mut result = Polynomial::zero();
        for (m, c) in &self.terms {
            let image = ExponentVector::from_pairs(m.pairs().iter().map(|&(v, e)| {
                match map.get(&v) {
                    Some(&(target, power)) => (target, e * power),
                    None => (v, e),
                }
            }));
            result.add_term(image, c);
        }
        result
    }

    /// The coefficient of grading^k, as a polynomial in the other variables.
    pub fn grading_slice(&self, k: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.grading_degree() == k)
                .map(|(m, c)| {
                    let rest = ExponentVector::from_pairs(
                        m.pairs()
                            .iter()
                            .copied()
                            .filter(|&(v, _)| v != VarId::Z(0) && v != VarId::T),
                    );
                    (rest, c.clone())
                })
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: monomials in descending canonical order so constants
    /// come last, e.g. `3*z0^2*z1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let abs = c.abs();
            let body = if m.is_one() {
                abs.to_string()
            } else if abs.is_one() {
                m.to_string()
            } else {
                format!("{abs}*{m}")
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial known only up to grading degree K: every stored monomial has
/// z0/t degree <= K, and degrees beyond K are unspecified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Polynomial,
    trunc: u32,
}

impl TruncatedSeries {
    pub fn new(poly: Polynomial, trunc: u32) -> Self {
        TruncatedSeries {
            poly: poly.truncate(trunc),
            trunc,
        }
    }

    pub fn zero(trunc: u32) -> Self {
        TruncatedSeries::new(Polynomial::zero(), trunc)
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn coeff(&self, m: &ExponentVector) -> BigInt {
        self.poly.coeff(m)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(self.poly.add(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.trunc.min(other.trunc);
        TruncatedSeries {
            poly: self.poly.mul_truncated(&other.poly, Some(trunc)),
            trunc,
        }
    }

    pub fn mul_poly(&self, other: &Polynomial) -> TruncatedSeries {
        TruncatedSeries {
            poly: self.poly.mul_truncated(other, Some(self.trunc)),
            trunc: self.trunc,
        }
    }

    pub fn specialize(&self, map: &BTreeMap<VarId, (VarId, u32)>) -> TruncatedSeries {
        // Grading may only be renamed between z0 and t, so degrees are stable
        // and the truncation order carries over.
        TruncatedSeries::new(self.poly.specialize(map), self.trunc)
    }

    /// First monomial (in canonical ascending order) whose coefficients
    /// differ, with both values.
    pub fn first_difference(
        &self,
        other: &TruncatedSeries,
    ) -> Option<(ExponentVector, BigInt, BigInt)> {
        let mut monomials: std::collections::BTreeSet<&ExponentVector> =
            self.poly.terms.keys().collect();
        monomials.extend(other.poly.terms.keys());
        let k = self.trunc.min(other.trunc);
        for m in monomials {
            if m.grading_degree() > k {
                continue;
            }
            let a = self.poly.coeff(m);
            let b = other.poly.coeff(m);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Numerator over a product of factors (1 - monomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExpr {
    pub numerator: Polynomial,
    pub denominator: Vec<ExponentVector>,
}

impl RationalExpr {
    pub fn new(numerator: Polynomial, denominator: Vec<ExponentVector>) -> Self {
        RationalExpr {
            numerator,
            denominator,
        }
    }

    /// Sum of rational expressions over a common denominator, assuming both
    /// already share `denominator` (used when merging per-cone transforms).
    pub fn add_same_denominator(&self, other: &RationalExpr) -> RationalExpr {
        debug_assert_eq!(self.denominator, other.denominator);
        RationalExpr {
            numerator: self.numerator.add(&other.numerator),
            denominator: self.denominator.clone(),
        }
    }
}

/// Expand a rational expression as a truncated series via geometric series:
/// 1/(1 - m) = sum_i m^i, cut at grading degree K. Errors if some
/// denominator monomial has grading degree 0.
pub fn expand(expr: &RationalExpr, k: u32) -> Result<TruncatedSeries, SeriesError> {
    let mut result = TruncatedSeries::new(expr.numerator.clone(), k);
    for m in &expr.denominator {
        let d = m.grading_degree();
        if d == 0 {
            return Err(SeriesError::UngradedDenominator(m.to_string()));
        }
        let mut geometric = Polynomial::zero();
        let mut i = 0;
        while i * d <= k {
            geometric.add_term(m.pow(i), &BigInt::one());
            i += 1;
        }
        result = result.mul_poly(&geometric);
    }
    Ok(result)
}

/// q-integer [m]_v = 1 + v + ... + v^{m-1}; [0] = 0.
pub fn q_integer(m: u32, v: VarId) -> Polynomial {
    let mut p = Polynomial::zero();
    for i in 0..m {
        p.add_term(ExponentVector::var(v, i), &BigInt::one());
    }
    p
}

/// Coefficients (constant term first) of the n-th Bernoulli polynomial,
/// defined by B_n(x+1) - B_n(x) = n x^{n-1} and B_n(0) = the n-th Bernoulli
/// number (B_1(0) = -1/2).
pub fn bernoulli_polynomial(n: u32) -> Vec<BigRational> {
    let numbers = bernoulli_numbers(n);
    let n = n as usize;
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = BigRational::from(binomial(n, k)) * numbers[k].clone();
    }
    coeffs
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) via the defining recurrence
/// sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
fn bernoulli_numbers(n: u32) -> Vec<BigRational> {
    let n = n as usize;
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let mut sum = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            sum += BigRational::from(binomial(m + 1, k)) * bk.clone();
        }
        b.push(-sum / BigRational::from(BigInt::from(m as u64 + 1)));
    }
    b
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    c
}

/// Evaluate a polynomial given by coefficients (constant first) at an exact
/// rational point.
pub fn eval_rational_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// The closed product forms appearing on the left of the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhsKind {
    /// sum_k prod_{j=1..n} [k+1]_{z_j} z0^k
    ProductK1,
    /// sum_k prod_{j=1..n} [rk+1]_{z_j} z0^k
    ProductRK1,
    /// sum_k [k+1]_q^n t^k
    QPower,
    /// sum_k [rk+1]_q^n t^k
    QPowerRK,
    /// sum_k ([k+1]_q + s [k]_q)^n t^k
    SignedQ,
    /// sum_k prod_{j=1..n} ([k+1]_{z_j} + s w_j [k]_{w_j}) z0^k
    SignedMulti,
    /// sum_k ((2k+1)^n - 2^{n-1} (B_n(k+1) - B_n(0))) t^k
    TypeD,
    /// sum_k [2k+1]_q^n t^k
    Q2k1,
}

/// Build the left-hand side sum_{k=0}^{K} c_k * grading^k exactly.
pub fn lhs_series(kind: LhsKind, r: u32, n: usize, k_max: u32) -> TruncatedSeries {
    let mut total = Polynomial::zero();
    for k in 0..=k_max {
        let (grading, coeff) = match kind {
            LhsKind::ProductK1 | LhsKind::ProductRK1 => {
                let per_step = if kind == LhsKind::ProductK1 { 1 } else { r };
                let mut p = Polynomial::one();
                for j in 1..=n {
                    p = p.mul(&q_integer(per_step * k + 1, VarId::Z(j)));
                }
                (VarId::Z(0), p)
            }
            LhsKind::QPower => (VarId::T, q_integer(k + 1, VarId::Q).pow(n as u32)),
            LhsKind::QPowerRK => (VarId::T, q_integer(r * k + 1, VarId::Q).pow(n as u32)),
            LhsKind::Q2k1 => (VarId::T, q_integer(2 * k + 1, VarId::Q).pow(n as u32)),
            LhsKind::SignedQ => {
                let base = q_integer(k + 1, VarId::Q)
                    .add(&q_integer(k, VarId::Q).mul(&Polynomial::variable(VarId::S)));
                (VarId::T, base.pow(n as u32))
            }
            LhsKind::SignedMulti => {
                let mut p = Polynomial::one();
                for j in 1..=n {
                    let w = VarId::W(j);
                    let signed_part = Polynomial::variable(VarId::S)
                        .mul(&Polynomial::variable(w))
                        .mul(&q_integer(k, w));
                    p = p.mul(&q_integer(k + 1, VarId::Z(j)).add(&signed_part));
                }
                (VarId::Z(0), p)
            }
            LhsKind::TypeD => {
                let coeff = type_d_count(n as u32, k);
                (VarId::T, Polynomial::constant(coeff))
            }
        };
        total = total.add(&Polynomial::monomial(ExponentVector::var(grading, k), BigInt::one()).mul(&coeff));
    }
    TruncatedSeries::new(total, k_max)
}

/// (2k+1)^n - 2^{n-1} (B_n(k+1) - B_n(0)), exactly; always an integer.
fn type_d_count(n: u32, k: u32) -> BigInt {
    let b = bernoulli_polynomial(n);
    let at_k1 = eval_rational_poly(&b, &BigRational::from(BigInt::from(k + 1)));
    let at_0 = b[0].clone();
    let pow = BigInt::from(2u32 * k + 1).pow(n);
    let correction = BigRational::from(BigInt::from(2u32).pow(n.saturating_sub(1))) * (at_k1 - at_0);
    let value = BigRational::from(pow) - correction;
    assert!(
        value.is_integer(),
        "type-D count must be integral, got {value}"
    );
    value.to_integer()
}
