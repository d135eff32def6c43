//! Buchberger's algorithm with the coprime-leading-monomial and chain
//! criteria, normal selection strategy (smallest lcm first), and full
//! inter-reduction to the unique reduced basis.

use crate::poly::{Monomial, MonomialOrder, Poly};

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any leading monomial of `basis`. Unique when `basis` is a
/// Groebner basis.
pub fn normal_form(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let leads: Vec<(&Monomial, &Poly)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading_monomial(order).unwrap(), g))
        .collect();
    let mut rem = Poly::zero(f.ring());
    let mut work = f.clone();
    'outer: while let Some((lm, lc)) = work.leading_term(order) {
        for (gm, g) in &leads {
            if gm.divides(lm) {
                let q = lm.div(gm).unwrap();
                let gc = g.leading_term(order).unwrap().1;
                let coe = lc / gc;
                let sub = g.mul_term(&q, &coe);
                work = &work - &sub;
                continue 'outer;
            }
        }
        let (lm, lc) = (lm.clone(), lc.clone());
        rem = &rem + &Poly::term(f.ring(), lm.clone(), lc.clone());
        work = &work - &Poly::term(f.ring(), lm, lc);
    }
    rem
}

fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&lcm.div(gm).unwrap(), &gc.recip());
    &a - &b
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// The reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted descending by
/// leading monomial. The empty basis represents the zero ideal.
pub fn reduced_groebner_basis(generators: &[Poly], order: MonomialOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    if basis.is_empty() {
        return Vec::new();
    }

    let mut pending: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push(make_pair(&basis, i, j, order));
        }
    }

    while !pending.is_empty() {
        // Normal strategy: the pair with the smallest lcm first; ties broken
        // by index for determinism.
        let mut best = 0;
        for k in 1..pending.len() {
            let c = order.cmp(&pending[k].lcm, &pending[best].lcm);
            let tie = c == std::cmp::Ordering::Equal
                && (pending[k].i, pending[k].j) < (pending[best].i, pending[best].j);
            if c == std::cmp::Ordering::Less || tie {
                best = k;
            }
        }
        let pair = pending.swap_remove(best);
        let (i, j) = (pair.i, pair.j);

        let lm_i = basis[i].leading_monomial(order).unwrap();
        let lm_j = basis[j].leading_monomial(order).unwrap();
        // Buchberger's first criterion: coprime leading monomials reduce to 0.
        if lm_i.is_coprime_with(lm_j) {
            continue;
        }
        // Chain criterion: skip when some other lead divides the lcm and both
        // flanking pairs have already been handled.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .leading_monomial(order)
                    .unwrap()
                    .divides(&pair.lcm)
                && !pending.iter().any(|p| is_pair(p, i, k) || is_pair(p, j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(order);
            let t = basis.len();
            for k in 0..t {
                pending.push(make_pair_with(&basis, k, &r, t, order));
            }
            basis.push(r);
        }
    }

    interreduce(basis, order)
}

fn make_pair(basis: &[Poly], i: usize, j: usize, order: MonomialOrder) -> Pair {
    let lcm = basis[i]
        .leading_monomial(order)
        .unwrap()
        .lcm(basis[j].leading_monomial(order).unwrap());
    Pair { i, j, lcm }
}

fn make_pair_with(basis: &[Poly], i: usize, new: &Poly, j: usize, order: MonomialOrder) -> Pair {
    let lcm = basis[i]
        .leading_monomial(order)
        .unwrap()
        .lcm(new.leading_monomial(order).unwrap());
    Pair { i, j, lcm }
}

fn is_pair(p: &Pair, a: usize, b: usize) -> bool {
    p.i == a.min(b) && p.j == a.max(b)
}

fn interreduce(mut basis: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    // Minimality: drop elements whose lead is divisible by another lead.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_i = basis[i].leading_monomial(order).unwrap().clone();
            let lm_j = basis[j].leading_monomial(order).unwrap().clone();
            if lm_j.divides(&lm_i) && (lm_i != lm_j || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // Full reduction of every element against the others, to a fixpoint.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Poly> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&basis[i], &others, order).monic(order);
            if r != basis[i] {
                basis[i] = r;
                changed = true;
            }
        }
        basis.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    basis.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial(order).unwrap(),
            a.leading_monomial(order).unwrap(),
        )
    });
    basis
}
