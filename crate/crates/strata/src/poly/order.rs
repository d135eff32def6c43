use std::cmp::Ordering;

use super::Monomial;

/// A monomial order: a multiplicative well-order on monomials with 1 minimal.
///
/// `Elimination(k)` is the block order that compares the first `k` exponents
/// by grevlex and breaks ties by grevlex on the remaining ones; any monomial
/// involving one of the first `k` variables dominates every monomial that
/// does not, which is what elimination needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Elimination(usize),
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal total degree: the last variable where they differ decides,
    // with the smaller exponent winning.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ae, be) = (a.exponents(), b.exponents());
        debug_assert_eq!(ae.len(), be.len());
        match self {
            MonomialOrder::Lex => lex_cmp(ae, be),
            MonomialOrder::GrevLex => grevlex_cmp(ae, be),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(ae.len());
                match grevlex_cmp(&ae[..k], &be[..k]) {
                    Ordering::Equal => grevlex_cmp(&ae[k..], &be[k..]),
                    other => other,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_prefers_earlier_variables() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_prefers_total_degree_then_reverse() {
        let o = MonomialOrder::GrevLex;
        // t2^3 beats t1^2 on degree.
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // Same degree: x^2*y vs x*y^2 -> last differing exponent smaller wins.
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elimination(1);
        // Any power of the first variable beats anything free of it.
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal_in_all_orders() {
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::Elimination(1),
        ] {
            assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
        }
    }
}
