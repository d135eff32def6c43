//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured size and runtime. Randomized criteria run on a fixed seed.

mod common;

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_nonzero_poly, random_poly, MembershipOracle};
use strata::hc::{equiv_reachable, equiv_u, HCDatum};
use strata::ideal::Ideal;
use strata::poly::{parse_poly, Poly, PolyRing};
use strata::session::run_session_text;
use strata::spectrum::{Certificate, PrimeIdeal, SpecSubset};
use strata::torsion::monomial::brute_force_minimal_primes;
use strata::torsion::{hom_cyclic_is_zero, is_regular_sequence, CyclicModule, Stratum};

fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars.to_vec()).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect())
}

fn principal_prime(r: &Arc<PolyRing>, gen: &str) -> PrimeIdeal {
    PrimeIdeal::new(ideal(r, &[gen]), Certificate::PrincipalIrreducible).unwrap()
}

#[test]
fn criterion_01_membership_agrees_with_linear_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_0001);
    let bands: [(Vec<&str>, u32, usize); 3] = [
        (vec!["t1"], 3, 70),
        (vec!["t1", "t2"], 3, 70),
        (vec!["t1", "t2", "t3"], 2, 70),
    ];
    let mut ideals = 0usize;
    let mut checks = 0usize;
    for (vars, max_deg, count) in bands {
        let r = ring(&vars);
        for _ in 0..count {
            let n_gens = rng.gen_range(1..=3);
            let gens: Vec<Poly> = (0..n_gens)
                .map(|_| random_nonzero_poly(&mut rng, &r, max_deg, 3))
                .collect();
            let ideal = Ideal::new(&r, gens.clone());
            let oracle = MembershipOracle::build(&r, ideal.generators(), 4);

            // A combination of the generators, inside the degree bound.
            let mut combo = Poly::zero(&r);
            for g in &gens {
                let h = random_poly(&mut rng, &r, 2, 2);
                combo = &combo + &(&h * g);
            }
            // A scaled generator and an unconstrained polynomial.
            let scaled = &gens[0] * &random_poly(&mut rng, &r, 2, 2);
            let free = random_poly(&mut rng, &r, 3, 3);

            for f in [combo, scaled, free] {
                assert_eq!(
                    ideal.contains(&f),
                    oracle.contains(&f),
                    "membership disagreement on {f} in {}",
                    ideal.display()
                );
                checks += 1;
            }
            ideals += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(ideals >= 200, "need at least 200 ideals, ran {ideals}");
    assert!(
        elapsed.as_secs() < 60,
        "oracle comparison exceeded 60 s: {elapsed:?}"
    );
    println!(
        "[PASS] criterion 1: Groebner membership matches the bounded-degree oracle on {ideals} ideals / {checks} queries in {elapsed:.2?}"
    );
}

#[test]
fn criterion_02_comaximal_intersection_equals_product() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_0002);
    let r1 = ring(&["t"]);
    let r2 = ring(&["x", "y"]);
    let mut families = 0usize;
    while families < 50 {
        let two_vars = rng.gen_bool(0.5);
        let r = rng.gen_range(2..=3);
        let mut components: Vec<Ideal> = Vec::new();
        if two_vars {
            let mut points: Vec<(i64, i64)> = Vec::new();
            while points.len() < r {
                let p = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
                if !points.contains(&p) {
                    points.push(p);
                }
            }
            for (a, b) in points {
                let m = ideal(&r2, &[&format!("x - ({a})"), &format!("y - ({b})")]);
                components.push(m.power(rng.gen_range(1..=2)));
            }
        } else {
            let mut consts: Vec<i64> = Vec::new();
            while consts.len() < r {
                let c = rng.gen_range(-5..=5);
                if !consts.contains(&c) {
                    consts.push(c);
                }
            }
            for c in consts {
                let m = ideal(&r1, &[&format!("t - ({c})")]);
                components.push(m.power(rng.gen_range(1..=2)));
            }
        }
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                assert!(
                    components[i].is_comaximal(&components[j]),
                    "constructed family must be pairwise comaximal"
                );
            }
        }
        let inter = components
            .iter()
            .cloned()
            .reduce(|a, b| a.intersection(&b))
            .unwrap();
        let prod = components
            .iter()
            .cloned()
            .reduce(|a, b| a.product(&b))
            .unwrap();
        assert!(
            inter.eq_ideal(&prod),
            "intersection differs from product for a comaximal family"
        );
        families += 1;
    }

    // The pinned three-point example: the quotient has vector-space
    // dimension 3.
    let comps = [
        ideal(&r1, &["t - 1"]),
        ideal(&r1, &["t - 2"]),
        ideal(&r1, &["t - 3"]),
    ];
    let inter = comps
        .iter()
        .cloned()
        .reduce(|a, b| a.intersection(&b))
        .unwrap();
    assert_eq!(inter.vector_space_dimension(), Some(3));
    println!(
        "[PASS] criterion 2: intersection = product on {families} comaximal families; 3-point quotient has dimension 3 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_03_min_ass_equals_min_supp_on_monomial_catalog() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_0003);
    let r2 = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);

    let mut catalog: Vec<(Arc<PolyRing>, Ideal)> = vec![
        (r2.clone(), ideal(&r2, &["x^2", "x*y"])),
        (r2.clone(), ideal(&r2, &["x"])),
        (r2.clone(), ideal(&r2, &["x*y"])),
        (r2.clone(), ideal(&r2, &["x^2"])),
        (r2.clone(), ideal(&r2, &["x", "y"])),
        (r2.clone(), ideal(&r2, &["x^3", "y^2"])),
        (r3.clone(), ideal(&r3, &["x*y", "x*z"])),
        (r3.clone(), ideal(&r3, &["x*y", "x*z", "y*z"])),
        (r3.clone(), ideal(&r3, &["x^2*y", "y^3", "z"])),
        (r3.clone(), Ideal::zero(&r3)),
    ];
    while catalog.len() < 32 {
        let three = rng.gen_bool(0.5);
        let r = if three { &r3 } else { &r2 };
        let d = r.dimension();
        let n_gens = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        for _ in 0..n_gens {
            let mut exps = vec![0u32; d];
            while exps.iter().sum::<u32>() == 0 {
                for e in exps.iter_mut() {
                    *e = rng.gen_range(0..=2);
                }
            }
            gens.push(Poly::term(
                r,
                strata::poly::Monomial::new(exps),
                common::coeff(1),
            ));
        }
        catalog.push((Arc::clone(r), Ideal::new(r, gens)));
    }

    for (r, i) in &catalog {
        let module = CyclicModule::quotient_of(i.clone()).unwrap();
        let via_ass: Vec<String> = module
            .min_support()
            .unwrap()
            .iter()
            .map(|p| p.display())
            .collect();
        let brute: Vec<String> = brute_force_minimal_primes(r, i)
            .iter()
            .map(|p| p.display())
            .collect();
        let mut a = via_ass.clone();
        let mut b = brute.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b, "min-supp mismatch for {}", i.display());
    }
    println!(
        "[PASS] criterion 3: Min Ass = Min Supp on {} monomial ideals ({:.2?})",
        catalog.len(),
        start.elapsed()
    );
}

/// The cataloged modules with decompositions used by criteria 4 and 5.
fn module_catalog() -> Vec<CyclicModule> {
    let rxy = ring(&["x", "y"]);
    let rt = ring(&["t"]);
    let rxyz = ring(&["x", "y", "z"]);
    let declared_two_points = CyclicModule::new(
        ideal(&rt, &["(t - 1)*(t - 2)"]),
        Some(vec![
            (ideal(&rt, &["t - 1"]), principal_prime(&rt, "t - 1")),
            (ideal(&rt, &["t - 2"]), principal_prime(&rt, "t - 2")),
        ]),
    )
    .unwrap();
    let declared_double_point = CyclicModule::new(
        ideal(&rt, &["(t - 1)^2*(t - 2)"]),
        Some(vec![
            (ideal(&rt, &["(t - 1)^2"]), principal_prime(&rt, "t - 1")),
            (ideal(&rt, &["t - 2"]), principal_prime(&rt, "t - 2")),
        ]),
    )
    .unwrap();
    vec![
        CyclicModule::quotient_of(ideal(&rxy, &["x^2", "x*y"])).unwrap(),
        declared_two_points,
        CyclicModule::quotient_of(ideal(&rxy, &["x"])).unwrap(),
        CyclicModule::quotient_of(ideal(&rxyz, &["x*y", "x*z"])).unwrap(),
        declared_double_point,
    ]
}

#[test]
fn criterion_04_torsion_membership_criteria_agree() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_0004);
    let mut checks = 0usize;
    for module in module_catalog() {
        let r = Arc::clone(module.ring());
        for i in 0..=2i64 {
            let z = SpecSubset::coheight_at_most(i);
            let numerator = module.torsion_radical(&z).unwrap().numerator().clone();
            for _ in 0..8 {
                let x = random_poly(&mut rng, &r, 3, 3);
                // Condition 3: every prime over (I : x) lies in Z_i, decided
                // through the dimension of the colon ideal.
                let colon = module
                    .ideal()
                    .quotient_by_ideal(&Ideal::new(&r, vec![x.clone()]))
                    .unwrap();
                let by_dimension = colon.dimension() <= i;
                // Component route: membership in the numerator ideal.
                let by_components = numerator.contains(&x);
                assert_eq!(
                    by_dimension,
                    by_components,
                    "criteria disagree for x = {x} in {} at Z_{i}",
                    module.ideal().display()
                );
                checks += 1;
            }
        }
    }
    assert!(checks >= 100, "need at least 100 samples, ran {checks}");
    println!(
        "[PASS] criterion 4: torsion membership conditions agree on {checks} samples ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_05_strata_classifier_exact_cases() {
    let rxy = ring(&["x", "y"]);
    let rt = ring(&["t"]);

    // Mixed module: t_0 = (x)/I, t_1 = whole.
    let t0 = Instant::now();
    let mixed = CyclicModule::quotient_of(ideal(&rxy, &["x^2", "x*y"])).unwrap();
    let profile = mixed.strata_profile().unwrap();
    assert_eq!(profile.classification, Stratum::Mixed);
    assert!(profile.rows[0].handle.numerator().eq_ideal(&ideal(&rxy, &["x"])));
    assert!(!profile.rows[0].handle.is_zero_submodule());
    assert!(profile.rows[1].handle.is_whole());
    let mixed_time = t0.elapsed();
    assert!(mixed_time.as_secs() < 1);

    // Two points: pure stratum 0 with CRT component dimensions (1, 1).
    let t1 = Instant::now();
    let two = CyclicModule::new(
        ideal(&rt, &["(t - 1)*(t - 2)"]),
        Some(vec![
            (ideal(&rt, &["t - 1"]), principal_prime(&rt, "t - 1")),
            (ideal(&rt, &["t - 2"]), principal_prime(&rt, "t - 2")),
        ]),
    )
    .unwrap();
    assert_eq!(two.strata_profile().unwrap().classification, Stratum::Pure(0));
    let crt = two.crt_decompose().unwrap();
    let dims: Vec<usize> = crt
        .components
        .iter()
        .map(|(_, h)| h.vector_space_dimension().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 1]);
    let two_time = t1.elapsed();
    assert!(two_time.as_secs() < 1);

    // A line in the plane: pure stratum 1.
    let t2 = Instant::now();
    let line = CyclicModule::quotient_of(ideal(&rxy, &["x"])).unwrap();
    assert_eq!(line.strata_profile().unwrap().classification, Stratum::Pure(1));
    let line_time = t2.elapsed();
    assert!(line_time.as_secs() < 1);

    println!(
        "[PASS] criterion 5: strata classifier exact on the three cases ({mixed_time:.2?}, {two_time:.2?}, {line_time:.2?})"
    );
}

#[test]
fn criterion_06_weyl_chain_reproduction() {
    let start = Instant::now();
    let datum = HCDatum::weyl(2).unwrap();
    let r = datum.ring();
    let f = principal_prime(r, "1 + (t1 - 2)^2");
    let h = PrimeIdeal::new(ideal(r, &["t2"]), Certificate::MonomialPrime).unwrap();
    let p = principal_prime(r, "t1 - 1");

    // (i) no single shift step relates f to (t1 - 1): the shifted images
    // reduce to the units 1 and 2 modulo t1 - 1.
    for name in ["Y1", "Y2"] {
        let u = datum.generator(name).unwrap();
        assert!(!equiv_u(&f, &p, u).unwrap(), "single step via {name} must fail");
    }

    // (ii) the two-step chain goes through (t2) with generators Y1, Y2.
    let reached = equiv_reachable(&f, &[h.clone(), p.clone()], &datum, 3).unwrap();
    let entry = reached
        .iter()
        .find(|(q, _)| *q == p)
        .expect("(t1 - 1) must be reachable");
    let witness = &entry.1;
    assert_eq!(witness.len(), 2);
    assert_eq!(witness.primes[1], h);
    let labels: Vec<&str> = witness
        .generator_indices
        .iter()
        .map(|&k| datum.generators()[k].name())
        .collect();
    assert_eq!(labels, vec!["Y1", "Y2"]);
    assert!(witness.verify(&datum).unwrap());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "chain search exceeded 5 s: {elapsed:?}");
    println!(
        "[PASS] criterion 6: Weyl two-step chain f -[Y1]-> (t2) -[Y2]-> (t1 - 1) reproduced, single steps fail ({elapsed:.2?})"
    );
}

#[test]
fn criterion_07_hom_vanishing_under_coprime_assassins() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5742_0007);
    let r2 = ring(&["x", "y"]);

    let maximal = |a: i64, b: i64| ideal(&r2, &[&format!("x - ({a})"), &format!("y - ({b})")]);
    let mut disjoint = 0usize;
    while disjoint < 30 {
        // Two modules built from disjoint point sets.
        let pa = (rng.gen_range(-4..=-1), rng.gen_range(-4..=4));
        let pb = (rng.gen_range(0..=4), rng.gen_range(-4..=4));
        let pc = (rng.gen_range(5..=8), rng.gen_range(-4..=4));
        let i = maximal(pa.0, pa.1)
            .power(rng.gen_range(1..=2))
            .product(&maximal(pb.0, pb.1));
        let j = maximal(pc.0, pc.1).power(rng.gen_range(1..=2));
        assert!(hom_cyclic_is_zero(&i, &j).unwrap());
        assert!(hom_cyclic_is_zero(&j, &i).unwrap());
        disjoint += 1;
    }

    let mut shared = 0usize;
    while shared < 10 {
        // Both modules keep the point (0, 0) associated.
        let shared_m = maximal(0, 0);
        let a = rng.gen_range(1..=5);
        let b = rng.gen_range(-5..=-1);
        let i = shared_m
            .power(rng.gen_range(1..=2))
            .product(&maximal(a, 0));
        let j = shared_m.power(rng.gen_range(1..=2)).product(&maximal(b, 1));
        assert!(!hom_cyclic_is_zero(&i, &j).unwrap());
        assert!(!hom_cyclic_is_zero(&j, &i).unwrap());
        shared += 1;
    }
    println!(
        "[PASS] criterion 7: Hom vanishes on {disjoint} coprime pairs, survives on {shared} shared-prime pairs ({:.2?})",
        start.elapsed()
    );
}

/// The certified prime catalog shared by criteria 8 and 9.
fn prime_catalog() -> Vec<PrimeIdeal> {
    let r4 = ring(&["t1", "t2", "t3", "t4"]);
    let r3 = ring(&["x", "y", "z"]);
    let r1 = ring(&["t"]);
    let mut out = Vec::new();
    for vars in [
        vec![],
        vec![0],
        vec![0, 1],
        vec![0, 1, 2],
        vec![0, 1, 2, 3],
        vec![1, 3],
        vec![2],
        vec![0, 3],
        vec![1, 2, 3],
    ] {
        out.push(PrimeIdeal::from_variables(&r4, &vars));
    }
    out.push(
        PrimeIdeal::new(
            ideal(&r4, &["t1 - 1", "t2", "t3 + 2", "t4 - 5"]),
            Certificate::LinearMaximal,
        )
        .unwrap(),
    );
    out.push(principal_prime(&r4, "t1 + t2 + t3 - 1"));
    for vars in [vec![0], vec![0, 2], vec![0, 1, 2]] {
        out.push(PrimeIdeal::from_variables(&r3, &vars));
    }
    out.push(
        PrimeIdeal::new(ideal(&r3, &["x - 1", "y - 1", "z"]), Certificate::LinearMaximal).unwrap(),
    );
    out.push(principal_prime(&r3, "x + y - 3"));
    out.push(principal_prime(&r3, "x^2 + y^2 + 1"));
    out.push(PrimeIdeal::new(ideal(&r1, &["t - 3"]), Certificate::LinearMaximal).unwrap());
    out.push(PrimeIdeal::from_variables(&r1, &[0]));
    out.push(PrimeIdeal::from_variables(&r1, &[]));
    out
}

#[test]
fn criterion_08_height_coheight_duality_and_regular_sequences() {
    let start = Instant::now();
    let catalog = prime_catalog();
    assert!(catalog.len() >= 20, "catalog has {}", catalog.len());
    for p in &catalog {
        let d = p.ideal().ring().dimension() as i64;
        assert_eq!(
            p.height() + p.coheight(),
            d,
            "duality fails for {}",
            p.display()
        );
        if p.certificate() == Certificate::MonomialPrime {
            let ring = p.ideal().ring();
            let vars: Vec<Poly> = p.ideal().generators().to_vec();
            assert!(is_regular_sequence(ring, &vars));
            assert_eq!(vars.len() as i64, p.height());
            // Maximal inside p: any further element of p is zero modulo the
            // variables and extends to a non-regular sequence.
            if let Some(first) = vars.first() {
                let mut extended = vars.clone();
                extended.push(first * first);
                assert!(!is_regular_sequence(ring, &extended));
            }
        }
    }
    println!(
        "[PASS] criterion 8: ht + cht = d and variable regular sequences on {} primes ({:.2?})",
        catalog.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_09_gabriel_bijection_sanity() {
    let start = Instant::now();
    let catalog = prime_catalog();
    let mut checks = 0usize;
    for p in &catalog {
        let ring = Arc::clone(p.ideal().ring());
        let d = ring.dimension() as i64;
        let module = if p.certificate() == Certificate::MonomialPrime {
            CyclicModule::quotient_of(p.ideal().clone()).unwrap()
        } else {
            CyclicModule::new(
                p.ideal().clone(),
                Some(vec![(p.ideal().clone(), p.clone())]),
            )
            .unwrap()
        };

        let mut subsets: Vec<SpecSubset> =
            (0..=d).map(SpecSubset::coheight_at_most).collect();
        // Three up-closure subsets over same-ring catalog primes.
        let same_ring: Vec<&PrimeIdeal> = catalog
            .iter()
            .filter(|q| q.ideal().ring() == p.ideal().ring())
            .collect();
        for k in 0..3 {
            let picks: Vec<PrimeIdeal> = same_ring
                .iter()
                .skip(k)
                .step_by(3)
                .map(|q| (*q).clone())
                .collect();
            if !picks.is_empty() {
                subsets.push(SpecSubset::up_closure(picks));
            }
        }

        for z in &subsets {
            let t = module.torsion_radical(z).unwrap();
            let expected = z.contains(p);
            assert_eq!(
                t.is_whole(),
                expected,
                "Gabriel sanity fails for {} against {}",
                p.display(),
                z.describe()
            );
            if !expected {
                assert!(t.is_zero_submodule(), "torsion of a prime quotient is all or nothing");
            }
            checks += 1;
        }
    }
    println!(
        "[PASS] criterion 9: torsion radical of Γ/p is whole iff p ∈ Z across {checks} (p, Z) pairs ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_10_session_reports_are_deterministic() {
    let start = Instant::now();
    let root = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let mut count = 0usize;
    for name in ["ideals", "spectrum", "modules", "declared", "weyl"] {
        let text = std::fs::read_to_string(root.join(format!("{name}.session"))).unwrap();
        let a = run_session_text(&text, true).unwrap();
        let b = run_session_text(&text, true).unwrap();
        assert_eq!(a, b, "report for {name} is not byte-stable");
        assert!(!a.is_empty());
        count += 1;
    }
    println!(
        "[PASS] criterion 10: {count} shipped sessions produce byte-identical reports on repeated runs ({:.2?})",
        start.elapsed()
    );
}
