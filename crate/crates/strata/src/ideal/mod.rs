//! Ideals of the polynomial ring and the operations every later layer
//! consumes: Groebner bases, membership, sum/product/intersection, colon
//! ideals, saturation, comaximality, radical membership, and Krull dimension.

mod groebner;

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Poly, PolyRing, VarSubstitution};

pub use groebner::{normal_form as poly_normal_form, reduced_groebner_basis};

/// An ideal given by a finite generator list, with a write-once cache of
/// reduced Groebner bases per monomial order. Zero generators are dropped;
/// the zero ideal is the empty list. Concurrent readers may race to compute
/// the same basis and both write identical values.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Poly>,
    cache: RwLock<BTreeMap<MonomialOrder, Arc<Vec<Poly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: Arc::clone(&self.ring),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Poly>) -> Ideal {
        for g in &generators {
            assert!(same_ring(ring, g.ring()), "ring mismatch");
        }
        Ideal {
            ring: Arc::clone(ring),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)])
    }

    pub fn principal(f: Poly) -> Ideal {
        let ring = Arc::clone(f.ring());
        Ideal::new(&ring, vec![f])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The reduced Groebner basis for `order`; cached, and identical on
    /// recomputation.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<Vec<Poly>> {
        if let Some(b) = self.cache.read().unwrap().get(&order) {
            return Arc::clone(b);
        }
        let basis = Arc::new(reduced_groebner_basis(&self.generators, order));
        self.cache
            .write()
            .unwrap()
            .entry(order)
            .or_insert_with(|| Arc::clone(&basis));
        Arc::clone(self.cache.read().unwrap().get(&order).unwrap())
    }

    /// The unique remainder of `f` modulo the reduced Groebner basis; zero
    /// exactly when `f` lies in the ideal.
    pub fn normal_form(&self, f: &Poly, order: MonomialOrder) -> Poly {
        let basis = self.groebner_basis(order);
        groebner::normal_form(f, &basis, order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f, MonomialOrder::GrevLex).is_zero()
    }

    /// Inclusion test `self` ⊆ `other` by generator membership.
    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty() || self.groebner_basis(MonomialOrder::GrevLex).is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        let gb = self.groebner_basis(MonomialOrder::GrevLex);
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    /// Equality as ideals: identical reduced grevlex bases.
    pub fn eq_ideal(&self, other: &Ideal) -> bool {
        same_ring(&self.ring, &other.ring)
            && *self.groebner_basis(MonomialOrder::GrevLex)
                == *other.groebner_basis(MonomialOrder::GrevLex)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection via the auxiliary-variable elimination
    /// `<w*I, (1-w)*J>` ∩ Γ under a block order on `w`.
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero(&self.ring);
        }
        let (ext, lift) = extend_ring(&self.ring);
        let w = Poly::var(&ext, 0);
        let one_minus_w = &Poly::one(&ext) - &w;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&w * &lift(f));
        }
        for g in &other.generators {
            gens.push(&one_minus_w * &lift(g));
        }
        let aux = Ideal::new(&ext, gens);
        let gb = aux.groebner_basis(MonomialOrder::Elimination(1));
        let kept: Vec<Poly> = gb
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0))
            .map(|p| restrict(&self.ring, p))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Colon ideal `(self : f) = {g : g*f ∈ self}`, computed as
    /// `(self ∩ <f>) * f^{-1}` generator-wise.
    pub fn quotient_by_poly(&self, f: &Poly) -> Result<Ideal> {
        assert!(same_ring(&self.ring, f.ring()), "ring mismatch");
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inter = self.intersection(&Ideal::principal(f.clone()));
        let gens = inter
            .generators
            .iter()
            .map(|g| {
                g.div_exact(f).ok_or_else(|| {
                    Error::Internal("element of I ∩ (f) not divisible by f".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Colon ideal `(self : other)` as the intersection of the colons by
    /// each generator. The colon by the zero ideal is the unit ideal.
    pub fn quotient_by_ideal(&self, other: &Ideal) -> Result<Ideal> {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.generators {
            acc = acc.intersection(&self.quotient_by_poly(g)?);
        }
        Ok(acc)
    }

    /// Saturation `(self : other^∞)`: iterate the colon until the reduced
    /// bases of successive iterates agree.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient_by_ideal(other)?;
            if next.eq_ideal(&current) {
                return Ok(current);
            }
            current = next;
        }
    }

    /// True when `1 ∈ self + other`.
    pub fn is_comaximal(&self, other: &Ideal) -> bool {
        self.sum(other).is_unit_ideal()
    }

    /// Radical membership `f ∈ √self` via the auxiliary-variable trick:
    /// `1 ∈ self + <1 - w*f>` in the extended ring.
    pub fn radical_contains(&self, f: &Poly) -> bool {
        assert!(same_ring(&self.ring, f.ring()), "ring mismatch");
        if f.is_zero() {
            return true;
        }
        let (ext, lift) = extend_ring(&self.ring);
        let w = Poly::var(&ext, 0);
        let mut gens: Vec<Poly> = self.generators.iter().map(&lift).collect();
        gens.push(&Poly::one(&ext) - &(&w * &lift(f)));
        Ideal::new(&ext, gens).is_unit_ideal()
    }

    /// Krull dimension of `Γ/self`: the maximum size of a variable subset
    /// `S` such that no leading monomial of the Groebner basis lies in the
    /// subring generated by `S`. The unit ideal has dimension -1.
    pub fn dimension(&self) -> i64 {
        let gb = self.groebner_basis(MonomialOrder::GrevLex);
        let d = self.ring.dimension();
        let leads: Vec<Vec<usize>> = gb
            .iter()
            .map(|g| g.leading_monomial(MonomialOrder::GrevLex).unwrap().support())
            .collect();
        let mut best: i64 = -1;
        for mask in 0u32..(1 << d) {
            let size = mask.count_ones() as i64;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|support| {
                !support.iter().all(|&v| mask & (1 << v) != 0)
            });
            if independent {
                best = size;
            }
        }
        best
    }

    /// Monomials outside the initial ideal, when finitely many (i.e. when
    /// `Γ/self` is a finite-dimensional vector space). `None` otherwise.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let d = self.ring.dimension();
        let gb = self.groebner_basis(MonomialOrder::GrevLex);
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        if self.dimension() != 0 {
            return None;
        }
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_monomial(MonomialOrder::GrevLex).unwrap().clone())
            .collect();
        // Zero-dimensional: every variable has a pure-power leading monomial.
        let mut bounds = vec![0u32; d];
        for (v, bound) in bounds.iter_mut().enumerate() {
            *bound = leads
                .iter()
                .filter(|m| m.support() == [v])
                .map(|m| m.exponent(v))
                .min()?;
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; d];
        loop {
            let m = Monomial::new(exps.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // Odometer over the exponent box.
            let mut k = 0;
            loop {
                if k == d {
                    return Some(out);
                }
                exps[k] += 1;
                if exps[k] < bounds[k].max(1) {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }

    /// `dim_K Γ/self` when finite.
    pub fn vector_space_dimension(&self) -> Option<usize> {
        self.standard_monomials().map(|m| m.len())
    }

    /// The image ideal generated by `sub` applied to every generator.
    pub fn apply_substitution(&self, sub: &VarSubstitution) -> Ideal {
        Ideal::new(
            &self.ring,
            self.generators.iter().map(|g| sub.apply(g)).collect(),
        )
    }

    /// True when the reduced Groebner basis consists of monomials.
    pub fn is_monomial(&self) -> bool {
        self.groebner_basis(MonomialOrder::GrevLex)
            .iter()
            .all(|g| g.is_term())
    }

    /// Canonical display form `(g1, g2, ...)` from the reduced grevlex basis.
    pub fn display(&self) -> String {
        let gb = self.groebner_basis(MonomialOrder::GrevLex);
        if gb.is_empty() {
            return "(0)".to_string();
        }
        let gens: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        format!("({})", gens.join(", "))
    }
}

/// Extends the ring by one auxiliary elimination variable in front and
/// returns the lifting map.
fn extend_ring(ring: &Arc<PolyRing>) -> (Arc<PolyRing>, impl Fn(&Poly) -> Poly + '_) {
    let mut names = vec!["@w".to_string()];
    names.extend(ring.variables().iter().cloned());
    let ext = PolyRing::new(names).expect("aux variable cannot collide");
    let ext_for_closure = Arc::clone(&ext);
    let lift = move |p: &Poly| -> Poly {
        Poly::from_terms(
            &ext_for_closure,
            p.terms().map(|(m, c)| {
                let mut exps = vec![0u32];
                exps.extend_from_slice(m.exponents());
                (Monomial::new(exps), c.clone())
            }),
        )
    };
    (ext, lift)
}

/// Drops the auxiliary first variable from a polynomial free of it.
fn restrict(ring: &Arc<PolyRing>, p: &Poly) -> Poly {
    Poly::from_terms(
        ring,
        p.terms().map(|(m, c)| {
            debug_assert_eq!(m.exponent(0), 0);
            (Monomial::new(m.exponents()[1..].to_vec()), c.clone())
        }),
    )
}

pub fn require_proper(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit_ideal() {
        Err(Error::NotProper)
    } else {
        Ok(())
    }
}
