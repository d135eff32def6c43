//! Torsion-theory laws beyond the unit tests: the torsion-free quotient has
//! zero radical, membership in the radical is witnessed by prime-power
//! products, and boolean answers depend only on the ideal, not on its
//! presentation.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use strata::ideal::Ideal;
use strata::poly::{parse_poly, PolyRing};
use strata::spectrum::{Certificate, PrimeIdeal, SpecSubset};
use strata::torsion::CyclicModule;

mod common;
use common::random_poly;

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars.to_vec()).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect())
}

fn catalog() -> Vec<CyclicModule> {
    let rxy = ring(&["x", "y"]);
    let rt = ring(&["t"]);
    let rxyz = ring(&["x", "y", "z"]);
    vec![
        CyclicModule::quotient_of(ideal(&rxy, &["x^2", "x*y"])).unwrap(),
        CyclicModule::quotient_of(ideal(&rxyz, &["x*y", "x*z"])).unwrap(),
        CyclicModule::new(
            ideal(&rt, &["(t - 1)^2*(t - 2)"]),
            Some(vec![
                (
                    ideal(&rt, &["(t - 1)^2"]),
                    PrimeIdeal::new(ideal(&rt, &["t - 1"]), Certificate::PrincipalIrreducible)
                        .unwrap(),
                ),
                (
                    ideal(&rt, &["t - 2"]),
                    PrimeIdeal::new(ideal(&rt, &["t - 2"]), Certificate::PrincipalIrreducible)
                        .unwrap(),
                ),
            ]),
        )
        .unwrap(),
        CyclicModule::quotient_of(ideal(&rxyz, &["x^2*y", "y^3", "z"])).unwrap(),
    ]
}

/// The quotient by the torsion radical is torsion free: presenting
/// `M/t_Z(M)` as `Γ/numerator` with the surviving components, its radical
/// for the same `Z` is the zero submodule.
#[test]
fn torsion_free_quotient_has_zero_radical() {
    for module in catalog() {
        let d = module.ring().dimension() as i64;
        for i in -1..d {
            let z = SpecSubset::coheight_at_most(i);
            let t = module.torsion_radical(&z).unwrap();
            if t.is_whole() {
                continue;
            }
            let surviving: Vec<_> = module
                .decomposition()
                .unwrap()
                .iter()
                .filter(|(_, p)| !z.contains(p))
                .cloned()
                .collect();
            assert!(!surviving.is_empty());
            let quotient =
                CyclicModule::new(t.numerator().clone(), Some(surviving)).unwrap();
            let t2 = quotient.torsion_radical(&z).unwrap();
            assert!(
                t2.is_zero_submodule(),
                "residual torsion in {} at Z_{i}",
                quotient.ideal().display()
            );
        }
    }
}

/// Membership in `t_{Z_i}` is equivalent to a product of coheight-<=i
/// decomposition primes annihilating the element: a power of the product of
/// the in-Z primes kills x exactly when x lies in the numerator.
#[test]
fn torsion_membership_is_witnessed_by_prime_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_1001);
    for module in catalog() {
        let r = Arc::clone(module.ring());
        for i in 0..=2i64 {
            let z = SpecSubset::coheight_at_most(i);
            let numerator = module.torsion_radical(&z).unwrap().numerator().clone();
            let in_z: Vec<Ideal> = module
                .decomposition()
                .unwrap()
                .iter()
                .filter(|(_, p)| z.contains(p))
                .map(|(_, p)| p.ideal().clone())
                .collect();
            let product = in_z
                .iter()
                .cloned()
                .reduce(|a, b| a.product(&b))
                .unwrap_or_else(|| Ideal::unit(&r));
            for _ in 0..6 {
                let x = random_poly(&mut rng, &r, 2, 2);
                let member = numerator.contains(&x);
                let mut killed_at = None;
                let mut power = Ideal::unit(&r);
                for n in 1..=8u32 {
                    power = power.product(&product);
                    let kills = power
                        .generators()
                        .iter()
                        .all(|g| module.ideal().contains(&(g * &x)));
                    // The zero ideal has no generators; it kills only x = 0.
                    let kills = kills && !(in_z.is_empty() && !module.ideal().contains(&x));
                    if kills {
                        killed_at = Some(n);
                        break;
                    }
                }
                assert_eq!(
                    member,
                    killed_at.is_some(),
                    "product witness mismatch for x = {x} at Z_{i} in {}",
                    module.ideal().display()
                );
            }
        }
    }
}

/// Boolean answers depend only on the reduced basis: redundant generators
/// and rational rescalings do not change membership, comaximality, or
/// dimension.
#[test]
fn answers_are_presentation_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_1002);
    let r = ring(&["x", "y"]);
    for _ in 0..25 {
        let g1 = random_poly(&mut rng, &r, 2, 3);
        let g2 = random_poly(&mut rng, &r, 2, 3);
        let i = Ideal::new(&r, vec![g1.clone(), g2.clone()]);
        // Same ideal, noisier presentation.
        let h = random_poly(&mut rng, &r, 1, 2);
        let redundant = &(&g1 * &h) + &g2;
        let scaled = g1.scale(&strata::poly::coeff_ratio(-3, 7));
        let j = Ideal::new(&r, vec![scaled, g2.clone(), redundant, g1.clone()]);
        assert!(i.eq_ideal(&j));

        let probe = random_poly(&mut rng, &r, 2, 3);
        assert_eq!(i.contains(&probe), j.contains(&probe));
        assert_eq!(i.dimension(), j.dimension());
        let other = Ideal::new(&r, vec![random_poly(&mut rng, &r, 1, 2)]);
        assert_eq!(i.is_comaximal(&other), j.is_comaximal(&other));
        assert_eq!(i.radical_contains(&probe), j.radical_contains(&probe));
    }
}

/// The torsion radical is monotone along the coheight chain and exhausts
/// the module at the ring dimension.
#[test]
fn torsion_chain_is_monotone_and_exhaustive() {
    for module in catalog() {
        let d = module.ring().dimension() as i64;
        let mut previous: Option<Ideal> = None;
        for i in 0..=d {
            let t = module
                .torsion_radical(&SpecSubset::coheight_at_most(i))
                .unwrap();
            if let Some(prev) = &previous {
                assert!(prev.is_contained_in(t.numerator()));
            }
            previous = Some(t.numerator().clone());
        }
        assert!(previous.unwrap().is_unit_ideal());
    }
}

/// The up-closure variant matches the per-component membership rule: a
/// component is torsion exactly when some antichain member sits inside its
/// prime.
#[test]
fn up_closure_torsion_matches_component_rule() {
    let rxy = ring(&["x", "y"]);
    let module = CyclicModule::quotient_of(ideal(&rxy, &["x^2", "x*y"])).unwrap();
    let px = PrimeIdeal::from_variables(&rxy, &[0]);
    let origin = PrimeIdeal::from_variables(&rxy, &[0, 1]);

    // up(px) swallows both components (px ⊆ px ⊆ origin-prime).
    let z = SpecSubset::up_closure(vec![px.clone()]);
    assert!(module.torsion_radical(&z).unwrap().is_whole());

    // up(origin) swallows only the embedded component.
    let z2 = SpecSubset::up_closure(vec![origin]);
    let t = module.torsion_radical(&z2).unwrap();
    assert!(t.numerator().eq_ideal(px.ideal()));
}
