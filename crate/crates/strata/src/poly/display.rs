//! Canonical printing: terms sorted grevlex-descending, coefficients reduced
//! with positive denominator. Printed output re-parses to an equal value.

use std::fmt;

use num_traits::{One, Signed};

use super::{coeff_is_negative, Coeff, Monomial, MonomialOrder, Poly};

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    vars: &[String],
    leading_star: bool,
) -> fmt::Result {
    let mut first = !leading_star;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

fn coeff_abs_is_one(c: &Coeff) -> bool {
    c.abs().is_one()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Coeff)> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = coeff_is_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if coeff_abs_is_one(c) {
                write_monomial(f, m, self.ring().variables(), false)?;
            } else {
                write!(f, "{mag}")?;
                write_monomial(f, m, self.ring().variables(), true)?;
            }
        }
        Ok(())
    }
}
