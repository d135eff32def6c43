//! Cyclic modules `Γ/I`, their assassins and supports, torsion radicals for
//! specialization-closed subsets, the coheight strata classifier, primary
//! component extraction, CRT decomposition, Hom vanishing, and
//! regular-sequence tests.

pub mod monomial;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Poly, PolyRing};
use crate::spectrum::{min_elements, PrimeIdeal, SpecSubset};

/// The subquotient `numerator/denominator` of `Γ/denominator`.
#[derive(Debug, Clone)]
pub struct SubquotientHandle {
    numerator: Ideal,
    denominator: Ideal,
}

impl SubquotientHandle {
    pub fn new(numerator: Ideal, denominator: Ideal) -> Result<SubquotientHandle> {
        if !denominator.is_contained_in(&numerator) {
            return Err(Error::Internal(
                "subquotient denominator not contained in numerator".into(),
            ));
        }
        Ok(SubquotientHandle {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Ideal {
        &self.numerator
    }

    pub fn denominator(&self) -> &Ideal {
        &self.denominator
    }

    /// The whole module: numerator is the unit ideal.
    pub fn is_whole(&self) -> bool {
        self.numerator.is_unit_ideal()
    }

    /// The zero submodule: numerator equals denominator.
    pub fn is_zero_submodule(&self) -> bool {
        self.numerator.eq_ideal(&self.denominator)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.numerator.contains(f)
    }

    /// `dim_K numerator/denominator` when `Γ/denominator` is finite
    /// dimensional.
    pub fn vector_space_dimension(&self) -> Option<usize> {
        let den = self.denominator.vector_space_dimension()?;
        let num = self.numerator.vector_space_dimension()?;
        Some(den - num)
    }

    pub fn display(&self) -> String {
        format!("{}/{}", self.numerator.display(), self.denominator.display())
    }
}

/// The cyclic module `Γ/I`, optionally with a declared primary decomposition
/// `{(Q_j, p_j)}`. Without a declaration, a decomposition is computed when
/// `I` is a monomial ideal; otherwise the assassin-based operations reject
/// the module.
#[derive(Debug)]
pub struct CyclicModule {
    ideal: Ideal,
    declared: Option<Vec<(Ideal, PrimeIdeal)>>,
    computed: OnceLock<Vec<(Ideal, PrimeIdeal)>>,
}

impl CyclicModule {
    /// Builds `Γ/I`, rejecting the zero module. A declared decomposition is
    /// checked: the components intersect to `I`, and `√Q_j = p_j` in both
    /// directions (every generator of `Q_j` lies in `p_j`, every generator
    /// of `p_j` has a power in `Q_j`). Primary-ness itself is not decided;
    /// results read from declared data are conditional on it.
    pub fn new(ideal: Ideal, declared: Option<Vec<(Ideal, PrimeIdeal)>>) -> Result<CyclicModule> {
        if ideal.is_unit_ideal() {
            return Err(Error::NotProper);
        }
        if let Some(components) = &declared {
            if components.is_empty() {
                return Err(Error::Decomposition("empty component list".into()));
            }
            let inter = components
                .iter()
                .map(|(q, _)| q.clone())
                .reduce(|a, b| a.intersection(&b))
                .unwrap();
            if !inter.eq_ideal(&ideal) {
                return Err(Error::Decomposition(
                    "components do not intersect to the defining ideal".into(),
                ));
            }
            for (q, p) in components {
                if !q.is_contained_in(p.ideal()) {
                    return Err(Error::Decomposition(format!(
                        "component {} is not contained in its prime {}",
                        q.display(),
                        p.display()
                    )));
                }
                if !p
                    .ideal()
                    .generators()
                    .iter()
                    .all(|g| q.radical_contains(g))
                {
                    return Err(Error::Decomposition(format!(
                        "prime {} is not the radical of component {}",
                        p.display(),
                        q.display()
                    )));
                }
            }
        }
        Ok(CyclicModule {
            ideal,
            declared,
            computed: OnceLock::new(),
        })
    }

    pub fn quotient_of(ideal: Ideal) -> Result<CyclicModule> {
        CyclicModule::new(ideal, None)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn has_declared_decomposition(&self) -> bool {
        self.declared.is_some()
    }

    /// The primary decomposition backing the torsion operations: declared if
    /// present, computed for monomial ideals, otherwise an error.
    pub fn decomposition(&self) -> Result<&[(Ideal, PrimeIdeal)]> {
        if let Some(d) = &self.declared {
            return Ok(d);
        }
        if let Some(c) = self.computed.get() {
            return Ok(c);
        }
        let gens = monomial::monomial_generators(&self.ideal).ok_or(Error::NoDecomposition)?;
        let comps = monomial::primary_decomposition(self.ring(), &gens);
        let _ = self.computed.set(comps);
        Ok(self.computed.get().unwrap())
    }

    /// The assassin `Ass(Γ/I)`: for a monomial ideal the variable-generated
    /// colon primes `(I : m)`; for a declared decomposition the declared
    /// primes.
    pub fn assassin(&self) -> Result<Vec<PrimeIdeal>> {
        if let Some(d) = &self.declared {
            return Ok(d.iter().map(|(_, p)| p.clone()).collect());
        }
        let gens = monomial::monomial_generators(&self.ideal).ok_or(Error::NoDecomposition)?;
        Ok(monomial::monomial_assassin(self.ring(), &gens))
    }

    /// `Min Ass(M)`, which equals `Min Supp(M)`.
    pub fn min_support(&self) -> Result<Vec<PrimeIdeal>> {
        Ok(min_elements(&self.assassin()?))
    }

    /// The torsion submodule `t_Z(Γ/I) = (∩_{p_j ∉ Z} Q_j)/I`; the empty
    /// intersection is the unit ideal, i.e. the whole module is torsion.
    pub fn torsion_radical(&self, z: &SpecSubset) -> Result<SubquotientHandle> {
        let comps = self.decomposition()?;
        let numerator = comps
            .iter()
            .filter(|(_, p)| !z.contains(p))
            .map(|(q, _)| q.clone())
            .reduce(|a, b| a.intersection(&b))
            .unwrap_or_else(|| Ideal::unit(self.ring()));
        SubquotientHandle::new(numerator, self.ideal.clone())
    }

    /// Status of `t_i(M)` for `i = 0..=d`, plus the pure-stratum index when
    /// all associated primes share one coheight.
    pub fn strata_profile(&self) -> Result<StrataProfile> {
        let d = self.ring().dimension() as i64;
        let mut rows = Vec::new();
        for i in 0..=d {
            let handle = self.torsion_radical(&SpecSubset::coheight_at_most(i))?;
            rows.push(StratumRow { index: i, handle });
        }
        let mut classification = Stratum::Mixed;
        for row in &rows {
            if row.handle.is_whole() {
                let below_zero = if row.index == 0 {
                    true
                } else {
                    rows[(row.index - 1) as usize].handle.is_zero_submodule()
                };
                if below_zero {
                    classification = Stratum::Pure(row.index);
                }
                break;
            }
        }
        Ok(StrataProfile {
            rows,
            classification,
        })
    }

    /// The primary component `M(p)`: elements killed by a power of `p`,
    /// i.e. `saturation(I, p)/I`.
    pub fn p_component(&self, p: &PrimeIdeal) -> Result<SubquotientHandle> {
        let numerator = self.ideal.saturation(p.ideal())?;
        SubquotientHandle::new(numerator, self.ideal.clone())
    }

    /// CRT decomposition `M = ⊕ M(p)` over the minimal primes, which
    /// requires them pairwise comaximal. Warns (and indexes components by
    /// the minimal primes) when the declared assassin carries embedded
    /// primes, in which case the direct sum does not exhaust `M`.
    pub fn crt_decompose(&self) -> Result<CrtDecomposition> {
        let ass = self.assassin()?;
        let minimal = min_elements(&ass);
        for (i, p) in minimal.iter().enumerate() {
            for q in &minimal[i + 1..] {
                if !p.ideal().is_comaximal(q.ideal()) {
                    return Err(Error::NonComaximalComponents);
                }
            }
        }
        let mut warnings = Vec::new();
        if ass.len() > minimal.len() {
            warnings.push(
                "assassin contains embedded primes; components indexed by minimal primes only"
                    .to_string(),
            );
        }

        let components = minimal
            .iter()
            .map(|p| Ok((p.clone(), self.p_component(p)?)))
            .collect::<Result<Vec<_>>>()?;

        // Directness: each numerator meets the intersection of the others in I.
        if components.len() >= 2 {
            for k in 0..components.len() {
                let others = components
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, (_, h))| h.numerator().clone())
                    .reduce(|a, b| a.intersection(&b))
                    .unwrap();
                let meet = components[k].1.numerator().intersection(&others);
                if !meet.eq_ideal(&self.ideal) {
                    return Err(Error::Internal(
                        "component intersection does not reduce to the defining ideal".into(),
                    ));
                }
            }
        }

        // Dimension count when the quotient is a finite-dimensional space.
        if warnings.is_empty() {
            if let Some(total) = self.ideal.vector_space_dimension() {
                let sum: usize = components
                    .iter()
                    .map(|(_, h)| h.vector_space_dimension().unwrap_or(0))
                    .sum();
                if sum != total {
                    return Err(Error::Internal(format!(
                        "component dimensions sum to {sum}, expected {total}"
                    )));
                }
            }
        }

        Ok(CrtDecomposition {
            components,
            warnings,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stratum {
    /// All associated primes share this coheight.
    Pure(i64),
    Mixed,
}

#[derive(Debug)]
pub struct StratumRow {
    pub index: i64,
    pub handle: SubquotientHandle,
}

#[derive(Debug)]
pub struct StrataProfile {
    pub rows: Vec<StratumRow>,
    pub classification: Stratum,
}

#[derive(Debug)]
pub struct CrtDecomposition {
    pub components: Vec<(PrimeIdeal, SubquotientHandle)>,
    pub warnings: Vec<String>,
}

/// `Hom(Γ/I, Γ/J) ≅ (J : I)/J`; zero exactly when `(J : I) = J`.
pub fn hom_cyclic_is_zero(i: &Ideal, j: &Ideal) -> Result<bool> {
    Ok(j.quotient_by_ideal(i)?.eq_ideal(j))
}

/// A regular sequence generates a proper ideal and each entry is a
/// nonzerodivisor modulo its predecessors: `(⟨f_1..f_{k-1}⟩ : f_k)` equals
/// `⟨f_1..f_{k-1}⟩` for every `k`.
pub fn is_regular_sequence(ring: &Arc<PolyRing>, seq: &[Poly]) -> bool {
    let whole = Ideal::new(ring, seq.to_vec());
    if whole.is_unit_ideal() {
        return false;
    }
    for k in 0..seq.len() {
        if seq[k].is_zero() {
            return false;
        }
        let prefix = Ideal::new(ring, seq[..k].to_vec());
        match prefix.quotient_by_poly(&seq[k]) {
            Ok(colon) => {
                if !colon.eq_ideal(&prefix) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}
