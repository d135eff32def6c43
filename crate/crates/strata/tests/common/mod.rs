//! Shared support for the acceptance suite: a bounded-degree linear-algebra
//! membership oracle (independent of the Groebner path) and seeded random
//! generators.
//!
//! Compiled into several test targets; not every target uses every helper.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use strata::poly::{coeff_int, Coeff, Monomial, MonomialOrder, Poly, PolyRing};

/// All monomials in `arity` variables of total degree at most `deg`.
pub fn monomials_up_to(arity: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; arity];
    loop {
        if exps.iter().sum::<u32>() <= deg {
            out.push(Monomial::new(exps.clone()));
        }
        let mut k = 0;
        loop {
            if k == arity {
                return out;
            }
            exps[k] += 1;
            if exps[k] <= deg {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// A forward-eliminated spanning set with unique grevlex pivots. Membership
/// in the span is decided by full reduction.
pub struct Echelon {
    pivots: BTreeMap<Monomial, Poly>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    fn reduce(&self, f: &Poly) -> Poly {
        let mut work = f.clone();
        loop {
            let Some((lm, lc)) = work.leading_term(MonomialOrder::GrevLex) else {
                return work;
            };
            match self.pivots.get(lm) {
                Some(row) => {
                    let c = lc.clone();
                    let m = Monomial::new(vec![0; lm.arity()]);
                    work = &work - &row.mul_term(&m, &c);
                }
                None => return work,
            }
        }
    }

    pub fn insert(&mut self, f: &Poly) {
        let reduced = self.reduce(f);
        if let Some((lm, _)) = reduced.leading_term(MonomialOrder::GrevLex) {
            let lm = lm.clone();
            self.pivots.insert(lm, reduced.monic(MonomialOrder::GrevLex));
        }
    }

    pub fn spans(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Bounded-degree ideal-membership oracle: `f` lies in the span of
/// `{m * g : g generator, deg(m * g) <= bound}`. For the acceptance runs the
/// bound is the maximum generator degree plus four.
pub struct MembershipOracle {
    echelon: Echelon,
    pub bound: u32,
}

impl MembershipOracle {
    pub fn build(ring: &Arc<PolyRing>, generators: &[Poly], extra_degree: u32) -> MembershipOracle {
        let max_deg = generators
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0);
        let bound = max_deg + extra_degree;
        let mut echelon = Echelon::new();
        for g in generators {
            let Some(gd) = g.total_degree() else { continue };
            for m in monomials_up_to(ring.dimension(), bound - gd) {
                echelon.insert(&g.mul_term(&m, &coeff_int(1)));
            }
        }
        MembershipOracle { echelon, bound }
    }

    pub fn contains(&self, f: &Poly) -> bool {
        assert!(
            f.total_degree().unwrap_or(0) <= self.bound,
            "oracle query exceeds the degree bound"
        );
        self.echelon.spans(f)
    }
}

/// A random polynomial with at most `terms` terms of total degree at most
/// `deg`, with small integer coefficients.
pub fn random_poly(rng: &mut impl Rng, ring: &Arc<PolyRing>, deg: u32, terms: usize) -> Poly {
    let pool = monomials_up_to(ring.dimension(), deg);
    let mut acc = Poly::zero(ring);
    let n = rng.gen_range(1..=terms);
    for _ in 0..n {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        let c: i64 = rng.gen_range(-3..=3);
        acc = &acc + &Poly::term(ring, m, coeff_int(c));
    }
    acc
}

/// A random nonzero polynomial.
pub fn random_nonzero_poly(
    rng: &mut impl Rng,
    ring: &Arc<PolyRing>,
    deg: u32,
    terms: usize,
) -> Poly {
    loop {
        let p = random_poly(rng, ring, deg, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn coeff(c: i64) -> Coeff {
    coeff_int(c)
}
