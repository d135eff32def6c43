//! Prime ideals with primality certificates, height/coheight arithmetic,
//! and symbolic specialization-closed subsets of the spectrum.
//!
//! The spectrum is infinite, so a [`SpecSubset`] is a predicate, never an
//! enumeration: either the canonical chain member `Z_i` (primes of coheight
//! at most `i`) or the up-closure of a finite antichain.

use num_traits::One;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Poly};

/// How primality of the underlying ideal is justified.
///
/// `MonomialPrime` and `LinearMaximal` are verified on construction and are
/// genuinely prime over any field extension. `PrincipalIrreducible` is
/// verified for generators of total degree 1 (hyperplanes are irreducible
/// over the closure); for higher degree the irreducibility over the closure
/// is asserted by the caller. `Declared` is always caller-asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Generated by a subset of the variables.
    MonomialPrime,
    /// Generated by `t_i - c_i` for every variable; a rational point.
    LinearMaximal,
    /// A single generator, irreducible over the closure.
    PrincipalIrreducible,
    /// Caller-asserted prime.
    Declared,
}

impl Certificate {
    pub fn label(&self) -> &'static str {
        match self {
            Certificate::MonomialPrime => "monomial",
            Certificate::LinearMaximal => "linear-maximal",
            Certificate::PrincipalIrreducible => "principal-irreducible",
            Certificate::Declared => "declared",
        }
    }

    pub fn parse(s: &str) -> Result<Certificate> {
        match s {
            "monomial" => Ok(Certificate::MonomialPrime),
            "linear-maximal" => Ok(Certificate::LinearMaximal),
            "principal-irreducible" => Ok(Certificate::PrincipalIrreducible),
            "declared" => Ok(Certificate::Declared),
            _ => Err(Error::Parse(format!("unknown certificate `{s}`"))),
        }
    }
}

/// A proper ideal tagged with a primality certificate.
#[derive(Debug, Clone)]
pub struct PrimeIdeal {
    ideal: Ideal,
    certificate: Certificate,
    verified: bool,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ideal.eq_ideal(&other.ideal)
    }
}

fn is_single_variable(p: &Poly) -> bool {
    p.is_term()
        && p.terms().all(|(m, c)| m.total_degree() == 1 && c.is_one())
}

fn is_linear_point_form(p: &Poly) -> Option<usize> {
    // t_i - c: exactly one degree-1 term with unit coefficient plus an
    // optional constant.
    let mut var: Option<usize> = None;
    for (m, c) in p.terms() {
        if m.is_one() {
            continue;
        }
        if m.total_degree() != 1 || !c.is_one() || var.is_some() {
            return None;
        }
        var = Some(m.support()[0]);
    }
    var
}

impl PrimeIdeal {
    pub fn new(ideal: Ideal, certificate: Certificate) -> Result<PrimeIdeal> {
        if ideal.is_unit_ideal() {
            return Err(Error::NotProper);
        }
        let gb = ideal.groebner_basis(MonomialOrder::GrevLex);
        let verified = match certificate {
            Certificate::MonomialPrime => {
                if !gb.iter().all(is_single_variable) {
                    return Err(Error::Certificate(
                        "monomial certificate requires every generator to be a single variable"
                            .into(),
                    ));
                }
                true
            }
            Certificate::LinearMaximal => {
                let d = ideal.ring().dimension();
                let mut seen = vec![false; d];
                if gb.len() != d {
                    return Err(Error::Certificate(format!(
                        "linear-maximal certificate requires {d} generators t_i - c_i"
                    )));
                }
                for g in gb.iter() {
                    match is_linear_point_form(g) {
                        Some(v) if !seen[v] => seen[v] = true,
                        _ => {
                            return Err(Error::Certificate(
                                "linear-maximal certificate requires one t_i - c_i per variable"
                                    .into(),
                            ))
                        }
                    }
                }
                true
            }
            Certificate::PrincipalIrreducible => {
                if gb.len() != 1 || gb[0].is_constant() {
                    return Err(Error::Certificate(
                        "principal-irreducible certificate requires a single nonconstant generator"
                            .into(),
                    ));
                }
                // Affine-linear generators are irreducible over any field
                // extension; higher degree stays caller-asserted.
                gb[0].total_degree() == Some(1)
            }
            Certificate::Declared => false,
        };
        Ok(PrimeIdeal {
            ideal,
            certificate,
            verified,
        })
    }

    /// Picks the strongest certificate that can be checked for `ideal`.
    pub fn with_auto_certificate(ideal: Ideal) -> Result<PrimeIdeal> {
        if ideal.is_unit_ideal() {
            return Err(Error::NotProper);
        }
        let gb = ideal.groebner_basis(MonomialOrder::GrevLex);
        let cert = if gb.iter().all(is_single_variable) {
            Certificate::MonomialPrime
        } else if gb.len() == ideal.ring().dimension()
            && gb.iter().all(|g| is_linear_point_form(g).is_some())
        {
            Certificate::LinearMaximal
        } else if gb.len() == 1 {
            Certificate::PrincipalIrreducible
        } else {
            Certificate::Declared
        };
        PrimeIdeal::new(ideal, cert)
    }

    /// A prime generated by the named subset of the variables.
    pub fn from_variables(ring: &std::sync::Arc<crate::poly::PolyRing>, vars: &[usize]) -> PrimeIdeal {
        let gens = vars.iter().map(|&i| Poly::var(ring, i)).collect();
        PrimeIdeal::new(Ideal::new(ring, gens), Certificate::MonomialPrime)
            .expect("variable-generated ideals satisfy the monomial certificate")
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    /// False when primality rests on a caller assertion; results involving
    /// such primes are conditional on it.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn is_principal(&self) -> bool {
        self.ideal.groebner_basis(MonomialOrder::GrevLex).len() == 1
    }

    /// Krull dimension of `Γ/p`: the stratum index of `p` in the chain
    /// `Z_0 ⊂ Z_1 ⊂ ...`.
    pub fn coheight(&self) -> i64 {
        self.ideal.dimension()
    }

    /// `d - coheight`, valid because the ambient polynomial ring is
    /// Cohen-Macaulay and equidimensional.
    pub fn height(&self) -> i64 {
        self.ideal.ring().dimension() as i64 - self.coheight()
    }

    pub fn contains_prime(&self, other: &PrimeIdeal) -> bool {
        other.ideal.is_contained_in(&self.ideal)
    }

    pub fn display(&self) -> String {
        self.ideal.display()
    }
}

/// The inclusion-minimal members of a finite family, deduplicated; output
/// order follows the input.
pub fn min_elements(family: &[PrimeIdeal]) -> Vec<PrimeIdeal> {
    let mut out: Vec<PrimeIdeal> = Vec::new();
    for p in family {
        if out.iter().any(|q| q == p) {
            continue;
        }
        out.push(p.clone());
    }
    let kept: Vec<bool> = out
        .iter()
        .map(|p| {
            !out.iter()
                .any(|q| q != p && q.ideal.is_contained_in(&p.ideal))
        })
        .collect();
    out.into_iter()
        .zip(kept)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect()
}

/// A specialization-closed subset of the spectrum.
#[derive(Debug, Clone)]
pub enum SpecSubset {
    /// The chain member `Z_i`: all primes of coheight at most `i`.
    /// Negative `i` denotes the empty set.
    CoheightAtMost(i64),
    /// The primes containing some member of a finite antichain.
    UpClosureOf(Vec<PrimeIdeal>),
}

impl SpecSubset {
    pub fn coheight_at_most(i: i64) -> SpecSubset {
        SpecSubset::CoheightAtMost(i)
    }

    /// Builds the up-closure, normalizing the generating family to an
    /// antichain of inclusion-minimal members.
    pub fn up_closure(family: Vec<PrimeIdeal>) -> SpecSubset {
        SpecSubset::UpClosureOf(min_elements(&family))
    }

    pub fn contains(&self, p: &PrimeIdeal) -> bool {
        match self {
            SpecSubset::CoheightAtMost(i) => p.coheight() <= *i,
            SpecSubset::UpClosureOf(antichain) => {
                antichain.iter().any(|a| p.contains_prime(a))
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SpecSubset::CoheightAtMost(i) => format!("Z<={i}"),
            SpecSubset::UpClosureOf(antichain) => {
                let parts: Vec<String> = antichain.iter().map(|p| p.display()).collect();
                format!("up({})", parts.join(", "))
            }
        }
    }
}
