//! Monomial-ideal machinery: primary decomposition by coprime-factor
//! splitting and assassin enumeration through monomial colon ideals.
//!
//! A monomial ideal is handled through its minimal monomial generators (the
//! reduced Groebner basis). Splitting a generator `m = u * v` with coprime
//! non-unit `u`, `v` gives `I = (I + <u>) ∩ (I + <v>)`; once every generator
//! is a pure variable power the ideal is primary to the prime generated by
//! its support variables.

use std::sync::Arc;

use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::spectrum::PrimeIdeal;

/// Minimal generating monomials: drops every monomial divisible by another.
fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let kept: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, n)| j != i && n.divides(m) && (n != m || j < i))
        })
        .collect();
    gens.into_iter()
        .zip(kept)
        .filter(|(_, k)| *k)
        .map(|(m, _)| m)
        .collect()
}

fn monomial_ideal_contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Generators of the intersection of two monomial ideals: pairwise lcms.
fn intersect_monomial(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimal_generators(out)
}

/// Extracts the minimal monomial generators of a monomial ideal; `None` when
/// the ideal is not monomial (some reduced basis element has several terms).
pub fn monomial_generators(ideal: &Ideal) -> Option<Vec<Monomial>> {
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex);
    let mut gens = Vec::new();
    for g in gb.iter() {
        if !g.is_term() {
            return None;
        }
        gens.push(g.leading_monomial(MonomialOrder::GrevLex).unwrap().clone());
    }
    Some(minimal_generators(gens))
}

fn split_recursive(gens: Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    if let Some(pos) = gens.iter().position(|m| m.support().len() >= 2) {
        let m = gens[pos].clone();
        let v = m.support()[0];
        let arity = m.arity();
        let mut u_exps = vec![0u32; arity];
        u_exps[v] = m.exponent(v);
        let u = Monomial::new(u_exps);
        let rest = m.div(&u).unwrap();

        let mut left = gens.clone();
        left.push(u);
        split_recursive(minimal_generators(left), out);

        let mut right = gens;
        right.push(rest);
        split_recursive(minimal_generators(right), out);
    } else {
        out.push(gens);
    }
}

/// A minimal primary decomposition of a monomial ideal. Components are
/// generated by pure variable powers; radicals are pairwise distinct; no
/// component contains the intersection of the others. The empty generator
/// list (the zero ideal) decomposes as itself.
pub fn primary_decomposition(
    ring: &Arc<PolyRing>,
    gens: &[Monomial],
) -> Vec<(Ideal, PrimeIdeal)> {
    let mut raw: Vec<Vec<Monomial>> = Vec::new();
    split_recursive(minimal_generators(gens.to_vec()), &mut raw);

    // Merge components sharing a radical.
    let mut merged: Vec<(Vec<usize>, Vec<Monomial>)> = Vec::new();
    for comp in raw {
        let radical: Vec<usize> = {
            let mut vars: Vec<usize> = comp.iter().flat_map(|m| m.support()).collect();
            vars.sort_unstable();
            vars.dedup();
            vars
        };
        match merged.iter_mut().find(|(r, _)| *r == radical) {
            Some((_, existing)) => *existing = intersect_monomial(existing, &comp),
            None => merged.push((radical, comp)),
        }
    }
    merged.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // Drop redundant components until stable.
    loop {
        let mut dropped = false;
        for k in 0..merged.len() {
            if merged.len() == 1 {
                break;
            }
            let inter_others = merged
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, (_, c))| c.clone())
                .reduce(|a, b| intersect_monomial(&a, &b))
                .unwrap();
            if inter_others
                .iter()
                .all(|m| monomial_ideal_contains(&merged[k].1, m))
            {
                merged.remove(k);
                dropped = true;
                break;
            }
        }
        if !dropped {
            break;
        }
    }

    merged
        .into_iter()
        .map(|(radical, comp)| {
            let q = Ideal::new(
                ring,
                comp.iter()
                    .map(|m| Poly::term(ring, m.clone(), num_traits::One::one()))
                    .collect(),
            );
            let p = PrimeIdeal::from_variables(ring, &radical);
            (q, p)
        })
        .collect()
}

/// The assassin of `Γ/I` for a monomial ideal `I`: all variable-generated
/// primes of the form `(I : m)`, with the exponents of `m` bounded by those
/// of the generators.
pub fn monomial_assassin(ring: &Arc<PolyRing>, gens: &[Monomial]) -> Vec<PrimeIdeal> {
    let d = ring.dimension();
    let gens = minimal_generators(gens.to_vec());
    let mut bounds = vec![0u32; d];
    for g in &gens {
        for (v, bound) in bounds.iter_mut().enumerate() {
            *bound = (*bound).max(g.exponent(v));
        }
    }

    let mut supports: Vec<Vec<usize>> = Vec::new();
    let mut exps = vec![0u32; d];
    'enumerate: loop {
        let m = Monomial::new(exps.clone());
        if !monomial_ideal_contains(&gens, &m) {
            // (I : m) for monomial I: divide each generator by its gcd with m.
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|g| g.div(&g.gcd(&m)).unwrap())
                .collect();
            let colon = minimal_generators(colon);
            if colon.iter().all(|c| c.total_degree() == 1) {
                let mut support: Vec<usize> =
                    colon.iter().map(|c| c.support()[0]).collect();
                support.sort_unstable();
                support.dedup();
                if !supports.contains(&support) {
                    supports.push(support);
                }
            }
        }
        let mut k = 0;
        loop {
            if k == d {
                break 'enumerate;
            }
            exps[k] += 1;
            if exps[k] <= bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }

    supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    supports
        .into_iter()
        .map(|s| PrimeIdeal::from_variables(ring, &s))
        .collect()
}

/// Variable-generated primes minimal over a monomial ideal, by brute force
/// over all variable subsets. Used as an independent oracle for min-supp.
pub fn brute_force_minimal_primes(ring: &Arc<PolyRing>, ideal: &Ideal) -> Vec<PrimeIdeal> {
    let d = ring.dimension();
    let mut containing: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << d) {
        let vars: Vec<usize> = (0..d).filter(|v| mask & (1 << v) != 0).collect();
        let p = if vars.is_empty() {
            Ideal::zero(ring)
        } else {
            Ideal::new(ring, vars.iter().map(|&v| Poly::var(ring, v)).collect())
        };
        if ideal.is_contained_in(&p) {
            containing.push(vars);
        }
    }
    let minimal: Vec<Vec<usize>> = containing
        .iter()
        .filter(|s| {
            !containing
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
        })
        .cloned()
        .collect();
    minimal
        .into_iter()
        .map(|s| PrimeIdeal::from_variables(ring, &s))
        .collect()
}
