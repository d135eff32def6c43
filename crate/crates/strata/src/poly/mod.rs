//! Exact multivariate polynomials over the rationals.
//!
//! Values are immutable after construction and every operation is a pure
//! function, so polynomials can be shared freely across threads.

mod display;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use order::MonomialOrder;
pub use parse::parse_poly;

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The ambient polynomial ring `K[t_1, ..., t_d]`, identified by its ordered
/// variable names. The Krull dimension of the ring equals the variable count.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
}

impl PolyRing {
    /// Creates a shared ring handle. Variable names must be distinct and
    /// nonempty.
    pub fn new<I, S>(names: I) -> Result<Arc<PolyRing>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.vars[index]
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A power product of the ring variables, stored as one exponent per
/// variable. The derived `Ord` (exponent-vector lexicographic) is only used
/// for canonical storage; order-sensitive comparisons go through
/// [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    pub fn one(arity: usize) -> Monomial {
        Monomial {
            exponents: vec![0; arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Monomial {
        let mut exponents = vec![0; arity];
        exponents[index] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Indices of the variables occurring with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exponents: self
                    .exponents
                    .iter()
                    .zip(&other.exponents)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// An exact multivariate polynomial in canonical form: a map from monomials
/// to nonzero rational coefficients. Two equal polynomials have identical
/// term maps.
#[derive(Debug, Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.dimension()), c);
        }
        Poly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Poly {
        assert!(index < ring.dimension(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.dimension(), index), Coeff::one());
        Poly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Poly> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(ring, idx))
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Poly {
        assert_eq!(m.arity(), ring.dimension(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn from_terms(ring: &Arc<PolyRing>, it: impl IntoIterator<Item = (Monomial, Coeff)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// True when the polynomial is a single term (a scaled monomial).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The order-maximal monomial and its coefficient; `None` for the zero
    /// polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    /// Divides by the leading coefficient so the leading coefficient under
    /// `order` becomes 1.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Image of `self` under the ring endomorphism sending each mapped
    /// variable to its image and fixing the rest. Errors on variables not in
    /// the ring. When every image is `t_i + c` (unit triangular) the map is
    /// an automorphism.
    pub fn substitute(&self, map: &BTreeMap<String, Poly>) -> Result<Poly> {
        let sub = VarSubstitution::from_map(&self.ring, map)?;
        Ok(sub.apply(self))
    }

    /// Exact division by a nonzero polynomial; `None` when `divisor` does not
    /// divide `self` exactly. Uses single-divisor multivariate division under
    /// grevlex; exactness forces a zero remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert!(same_ring(&self.ring, &divisor.ring), "ring mismatch");
        let order = MonomialOrder::GrevLex;
        let (dm, dc) = divisor.leading_term(order).expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        while let Some((lm, lc)) = rem.leading_term(order) {
            let q = lm.div(&dm)?;
            let qc = lc / &dc;
            quot.add_term(q.clone(), qc.clone());
            let sub = divisor.mul_term(&q, &qc);
            rem = &rem - &sub;
        }
        Some(quot)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// A validated map from every ring variable to its polynomial image.
/// Unmapped variables are fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSubstitution {
    ring: Arc<PolyRing>,
    images: Vec<Poly>,
}

impl VarSubstitution {
    pub fn identity(ring: &Arc<PolyRing>) -> VarSubstitution {
        VarSubstitution {
            ring: Arc::clone(ring),
            images: (0..ring.dimension()).map(|i| Poly::var(ring, i)).collect(),
        }
    }

    pub fn from_map(ring: &Arc<PolyRing>, map: &BTreeMap<String, Poly>) -> Result<VarSubstitution> {
        let mut sub = VarSubstitution::identity(ring);
        for (name, image) in map {
            let idx = ring
                .var_index(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if !same_ring(ring, &image.ring) {
                return Err(Error::RingMismatch);
            }
            sub.images[idx] = image.clone();
        }
        Ok(sub)
    }

    /// The shift `t_index -> t_index + offset`, identity elsewhere.
    pub fn shift_var(ring: &Arc<PolyRing>, index: usize, offset: i64) -> VarSubstitution {
        let mut sub = VarSubstitution::identity(ring);
        sub.images[index] = &Poly::var(ring, index) + &Poly::constant(ring, coeff_int(offset));
        sub
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn image(&self, index: usize) -> &Poly {
        &self.images[index]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, p)| *p == Poly::var(&self.ring, i))
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &f.ring), "ring mismatch");
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &f.terms {
            let mut prod = Poly::constant(&self.ring, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &self.images[i].pow(e);
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// `self` after `inner`: the substitution sending `t_i` to
    /// `self(inner(t_i))`.
    pub fn compose(&self, inner: &VarSubstitution) -> VarSubstitution {
        VarSubstitution {
            ring: Arc::clone(&self.ring),
            images: inner.images.iter().map(|p| self.apply(p)).collect(),
        }
    }
}

pub(crate) fn coeff_is_negative(c: &Coeff) -> bool {
    c.is_negative()
}
