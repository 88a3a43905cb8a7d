//! Acceptance criteria 1 to 7. Each criterion prints one PASS or FAIL line;
//! the test fails if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use qcc_core::charclass::*;
use qcc_core::hall::{shuffle_product, Mode};
use qcc_core::poly::{LaurentPoly, Var};
use qcc_core::quiver::{all_reineke_orders, euler_form, DimVector, Quiver};
use qcc_core::repalg::StabilityFunction;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [Mode; 2] = [Mode::Cohomology, Mode::KTheory];

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn criterion_1() -> Check {
    let q = Quiver::equioriented_a(2);
    let cat = catalog(&q);
    let t = table(&cat, &MODES);
    let shown = displays::a2_open_orbits();
    for (g, mode, expect) in &shown {
        let got = open_orbit_class(&cat, g, *mode, &t).map_err(|e| e.to_string())?;
        ensure(&got == expect, || format!("{mode} class of {g} is {got}"))?;
    }
    Ok(format!("{} displays", shown.len()))
}

fn criterion_2() -> Check {
    let q = Quiver::equioriented_a(3);
    let cat = catalog(&q);
    let t = table(&cat, &MODES);
    let orbits = displays::a3_orbits(&cat);
    let g = dv(&[1, 2, 1]);
    let (h_total, k_total) = displays::a3_totals();
    for (mode, (expect, first_two), total) in [
        (Mode::Cohomology, displays::a3_csm(), h_total),
        (Mode::KTheory, displays::a3_mc(), k_total),
    ] {
        let classes: Vec<LaurentPoly> = orbits
            .iter()
            .map(|m| orbit_class_v2(&cat, m, mode, &t))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (k, (got, e)) in classes.iter().zip(&expect).enumerate() {
            ensure(got == e, || format!("{mode} O{} is {got}", k + 1))?;
        }
        ensure(&classes[0] + &classes[1] == first_two, || format!("{mode} O1 + O2"))?;
        ensure(total_rep_class(&q, &g, mode) == total, || format!("{mode} total class"))?;
        let v = verify_sum_identity(&cat, &g, mode, &t).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("{mode} sum identity: {}", v.difference))?;
    }
    Ok("10 orbit classes, 2 partial sums, 2 sum identities".into())
}

fn criterion_3() -> Check {
    let q = d4();
    let cat = catalog(&q);
    let b = dv(&[1, 1, 2, 1]);
    let opts = BuildOptions {
        whitelist: Some(vec![dv(&[1, 1, 1, 1])]),
        ..BuildOptions::default()
    };
    let mut t = BasicClassTable::new(&q);
    for mode in MODES {
        t.merge(&build_basic_table(&cat, mode, &opts).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    }
    let inj = sieve_subtrahends(&cat, &b, true).map_err(|e| e.to_string())?;
    ensure(inj.len() == 4, || format!("{} subtrahends with Inj", inj.len()))?;
    let (h, k) = displays::d4_classes();
    let err = |e: CharError| e.to_string();
    let m = Mode::Cohomology;
    let sieve = basic_class_sieve(&cat, &b, m, &t, false).map_err(err)?;
    let improved = basic_class_sieve(&cat, &b, m, &t, true).map_err(err)?;
    let comm = basic_class_commutator(&cat, &b, &dv(&[1, 0, 1, 0]), &dv(&[0, 1, 1, 1]), m, &t).map_err(err)?;
    ensure(sieve == h, || format!("sieve gives {sieve}"))?;
    ensure(improved == h, || format!("improved sieve gives {improved}"))?;
    ensure(comm == h, || format!("commutator gives {comm}"))?;
    let ksieve = basic_class_sieve(&cat, &b, Mode::KTheory, &t, false).map_err(err)?;
    ensure(ksieve == k, || format!("K-theory sieve gives {ksieve}"))?;
    Ok("sieve, improved sieve (4 subtrahends), commutator, K-theory sieve".into())
}

fn criterion_4() -> Check {
    let mut checked = 0;
    for q in [Quiver::equioriented_a(2), Quiver::equioriented_a(3), d4(), d5()] {
        let cat = catalog(&q);
        let t = build_basic_table(&cat, Mode::Cohomology, &BuildOptions::default()).map_err(|e| e.to_string())?;
        for r in &cat.roots {
            ensure(check_conjecture(&cat, r, &t).map_err(|e| e.to_string())?, || {
                format!("{r}")
            })?;
            checked += 1;
        }
    }
    let q = e6();
    let cat = catalog(&q);
    let b = dv(&[1, 2, 3, 2, 1, 2]);
    let opts = BuildOptions {
        whitelist: Some(vec![b.clone()]),
        ..BuildOptions::default()
    };
    let t = build_basic_table(&cat, Mode::Cohomology, &opts).map_err(|e| e.to_string())?;
    let entry = t.require(&b, Mode::Cohomology).map_err(|e| e.to_string())?;
    ensure(*entry == displays::e6_display(), || format!("E6 entry is {entry}"))?;
    ensure(check_conjecture(&cat, &b, &t).map_err(|e| e.to_string())?, || {
        "E6 conjecture".into()
    })?;
    let sampled = Validation::Sampled { points: 4, seed: 11 };
    for tau in [dv(&[1, 1, 2, 1, 1, 1]), dv(&[0, 1, 2, 2, 1, 1])] {
        let omega = b.checked_sub(&tau).unwrap();
        let ok = commutator_pair_is_valid(&cat, &b, &tau, &omega, Mode::Cohomology, &t, sampled)
            .map_err(|e| e.to_string())?;
        ensure(ok, || format!("E6 pair {tau} + {omega}"))?;
    }
    let how = match t.provenance(&b, Mode::Cohomology) {
        Some(Provenance::Conjecture) => "sampled",
        _ => "exact",
    };
    Ok(format!(
        "{checked} roots of A2, A3, D4, D5; E6 {b} ({how}) with both commutator pairs"
    ))
}

fn criterion_5() -> Check {
    let mut compared = 0;
    let a2 = catalog(&Quiver::equioriented_a(2));
    let t2 = table(&a2, &MODES);
    let z2: Vec<StabilityFunction> = ["1,1;2,1", "2,1;1,1"].iter().map(|s| s.parse().unwrap()).collect();
    let a3 = catalog(&Quiver::equioriented_a(3));
    let t3 = table(&a3, &MODES);
    let cutoff3 = dv(&[2, 2, 2]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let z3: Vec<StabilityFunction> = (0..5)
        .map(|_| StabilityFunction::random_generic(3, &cutoff3, 5, &mut rng))
        .collect();
    for mode in MODES {
        for (cat, t, zs, cutoff) in [(&a2, &t2, &z2, dv(&[3, 3])), (&a3, &t3, &z3, cutoff3.clone())] {
            let report = verify_dt_invariance(cat, zs, &cutoff, mode, t).map_err(|e| e.to_string())?;
            for v in report.iter().flatten() {
                ensure(v.holds, || format!("{mode} at {}: {}", v.gamma, v.difference))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} components"))
}

fn criterion_6() -> Check {
    // Associativity and symmetry on 50 random triples.
    let quivers = [(Quiver::equioriented_a(2), 3), (Quiver::equioriented_a(3), 2)];
    for seed in 0..50u64 {
        let (q, max) = &quivers[(seed % 2) as usize];
        let mode = MODES[(seed / 2 % 2) as usize];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gs = random_small_triple(q.n_vertices(), *max, &mut rng);
        let fs: Vec<LaurentPoly> = gs.iter().map(|g| random_symmetric(q, g, mode, &mut rng)).collect();
        let sp = |xs: &[(&DimVector, &LaurentPoly)]| shuffle_product(q, xs, mode).map_err(|e| e.to_string());
        let (g01, g12) = (&gs[0] + &gs[1], &gs[1] + &gs[2]);
        let f01 = sp(&[(&gs[0], &fs[0]), (&gs[1], &fs[1])])?;
        let f12 = sp(&[(&gs[1], &fs[1]), (&gs[2], &fs[2])])?;
        let left = sp(&[(&g01, &f01), (&gs[2], &fs[2])])?;
        let right = sp(&[(&gs[0], &fs[0]), (&g12, &f12)])?;
        ensure(left == right, || format!("associativity, seed {seed}"))?;
        let total = &g01 + &gs[2];
        ensure(left.is_symmetric(&q.variable_blocks(&total)), || {
            format!("symmetry, seed {seed}")
        })?;
        if mode == Mode::Cohomology {
            ensure(!left.has_negative_exponent() && !left.involves(Var::Y), || {
                format!("polynomiality, seed {seed}")
            })?;
        }
    }

    // v1 = v2, symmetry, order independence and lowest degree on orbits.
    let mut orbits = 0;
    for (q, cutoff) in [
        (Quiver::equioriented_a(2), dv(&[2, 2])),
        (Quiver::equioriented_a(3), dv(&[1, 2, 1])),
    ] {
        let cat = catalog(&q);
        let t = table(&cat, &MODES);
        let orders = all_reineke_orders(&q, &cat.roots, 100).map_err(|e| e.to_string())?;
        for g in cutoff.below() {
            for m in cat.kostant_partitions(&g) {
                for mode in MODES {
                    let v2 = orbit_class_v2(&cat, &m, mode, &t).map_err(|e| e.to_string())?;
                    let v1 = orbit_class_v1(&cat, &m, mode, &t).map_err(|e| e.to_string())?;
                    ensure(v1 == v2, || format!("v1 != v2 at {g} {m:?} {mode}"))?;
                    ensure(v2.is_symmetric(&q.variable_blocks(&g)), || {
                        format!("symmetry at {g} {m:?}")
                    })?;
                    for order in &orders {
                        let other = orbit_class_v2_in_order(&cat, &m, mode, &t, order).map_err(|e| e.to_string())?;
                        ensure(other == v2, || format!("order {order:?} at {g} {m:?} {mode}"))?;
                    }
                    if mode == Mode::Cohomology {
                        let low = v2.min_alpha_degree();
                        ensure(low == Some(cat.codimension(&m) as i32), || {
                            format!("lowest degree {low:?} at {g} {m:?}")
                        })?;
                    }
                }
                orbits += 1;
            }
        }
        if q.n_vertices() == 3 {
            ensure(orders.len() == 2, || format!("A3 has {} Reineke orders", orders.len()))?;
        }
    }
    Ok(format!("50 triples, {orbits} orbits in both modes"))
}

fn criterion_7() -> Check {
    let mut pairs = 0;
    for q in [Quiver::equioriented_a(2), Quiver::equioriented_a(3), d4()] {
        let cat = catalog(&q);
        let n = cat.n_roots();
        for i in 0..n {
            for j in 0..n {
                let (h, e) = hom_ext(&q, &cat.reps[i], &cat.reps[j]);
                let chi = euler_form(&q, &cat.roots[i], &cat.roots[j]);
                ensure(h as i64 - e as i64 == chi, || {
                    format!("{} vs {}", cat.roots[i], cat.roots[j])
                })?;
                ensure((h, e) == (cat.hom(i, j), cat.ext(i, j)), || {
                    format!("catalog at {i},{j}")
                })?;
                pairs += 1;
            }
        }
        for order in all_reineke_orders(&q, &cat.roots, 200).map_err(|e| e.to_string())? {
            for (p, &i) in order.iter().enumerate() {
                for &j in &order[p + 1..] {
                    let (h, _) = hom_ext(&q, &cat.reps[i], &cat.reps[j]);
                    let (_, e) = hom_ext(&q, &cat.reps[j], &cat.reps[i]);
                    ensure(h == 0 && e == 0, || format!("{} before {}", cat.roots[i], cat.roots[j]))?;
                }
            }
        }
    }
    let cat = catalog(&Quiver::equioriented_a(2));
    for (z, expect) in [
        ("1,1;2,1", vec![dv(&[1, 0]), dv(&[1, 1]), dv(&[0, 1])]),
        ("2,1;1,1", vec![dv(&[0, 1]), dv(&[1, 0])]),
    ] {
        let z: StabilityFunction = z.parse().unwrap();
        let got: Vec<DimVector> = cat
            .stable_roots(&z)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|i| cat.roots[i].clone())
            .collect();
        ensure(got == expect, || format!("stable roots {got:?}"))?;
    }
    Ok(format!("{pairs} root pairs, Reineke orders, A2 stable roots"))
}

type Criterion = (u32, &'static str, fn() -> Check, Duration);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 7] = [
        (1, "A2 basic classes", criterion_1, Duration::from_secs(1)),
        (2, "A3 (1,2,1) orbit classes", criterion_2, Duration::from_secs(5)),
        (3, "D4 (1,1,2,1) three methods", criterion_3, Duration::from_secs(60)),
        (4, "conjecture instances", criterion_4, Duration::from_secs(600)),
        (5, "DT invariance", criterion_5, Duration::from_secs(300)),
        (6, "property suites", criterion_6, Duration::from_secs(600)),
        (7, "repalg consistency", criterion_7, Duration::from_secs(600)),
    ];
    let mut failed = Vec::new();
    for (n, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("{detail}; over the {budget:?} budget"))
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS [{detail}] in {elapsed:.2?}"),
            Err(why) => {
                println!("criterion {n} ({name}): FAIL [{why}] in {elapsed:.2?}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
