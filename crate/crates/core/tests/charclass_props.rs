mod common;

use std::collections::BTreeMap;

use common::*;
use qcc_core::charclass::*;
use qcc_core::hall::Mode;
use qcc_core::poly::{LaurentPoly, Var};
use qcc_core::quiver::{all_reineke_orders, DimVector, Quiver};
use qcc_core::repalg::RootCatalog;

const MODES: [Mode; 2] = [Mode::Cohomology, Mode::KTheory];

fn rank_three_or_less() -> Vec<Quiver> {
    vec![
        Quiver::new(&[1], &[]).unwrap(),
        Quiver::equioriented_a(2),
        Quiver::equioriented_a(3),
        Quiver::new(&[1, 2, 3], &[(1, 2), (3, 2)]).unwrap(),
        Quiver::new(&[1, 2, 3], &[(2, 1), (2, 3)]).unwrap(),
    ]
}

fn dims_up_to(n: usize, k: u32) -> Vec<DimVector> {
    DimVector(vec![k; n]).below()
}

fn specialize(p: &LaurentPoly) -> LaurentPoly {
    let point: BTreeMap<Var, LaurentPoly> = p
        .variables()
        .into_iter()
        .map(|v| {
            (
                v,
                if v.is_y() {
                    LaurentPoly::zero()
                } else {
                    LaurentPoly::one()
                },
            )
        })
        .collect();
    p.substitute(&point).unwrap()
}

#[test]
fn version_one_equals_version_two() {
    for q in rank_three_or_less() {
        let cat = catalog(&q);
        let t = table(&cat, &MODES);
        for g in dims_up_to(q.n_vertices(), 2) {
            for m in cat.kostant_partitions(&g) {
                for mode in MODES {
                    let v2 = orbit_class_v2(&cat, &m, mode, &t).unwrap();
                    assert_eq!(
                        orbit_class_v1(&cat, &m, mode, &t).unwrap(),
                        v2,
                        "{q:?} {g} {m:?} {mode}"
                    );
                    assert!(v2.is_symmetric(&q.variable_blocks(&g)));
                }
            }
        }
    }
}

#[test]
fn a3_classes_do_not_depend_on_the_reineke_order() {
    let q = Quiver::equioriented_a(3);
    let cat = catalog(&q);
    let t = table(&cat, &MODES);
    let orders = all_reineke_orders(&q, &cat.roots, 100).unwrap();
    assert!(orders.len() >= 2);
    for g in dims_up_to(3, 2) {
        for m in cat.kostant_partitions(&g) {
            for mode in MODES {
                let reference = orbit_class_v2(&cat, &m, mode, &t).unwrap();
                for order in &orders {
                    assert_eq!(orbit_class_v2_in_order(&cat, &m, mode, &t, order).unwrap(), reference);
                }
            }
        }
    }
}

#[test]
fn lowest_degree_is_codimension() {
    let cases: Vec<(RootCatalog, DimVector)> = vec![
        (catalog(&Quiver::equioriented_a(2)), dv(&[2, 2])),
        (catalog(&Quiver::equioriented_a(3)), dv(&[1, 2, 1])),
        (catalog(&Quiver::equioriented_a(3)), dv(&[2, 2, 2])),
        (catalog(&d4()), dv(&[1, 1, 2, 1])),
    ];
    for (cat, cutoff) in cases {
        let t = table(&cat, &[Mode::Cohomology]);
        for g in cutoff.below() {
            for m in cat.kostant_partitions(&g) {
                let class = orbit_class_v2(&cat, &m, Mode::Cohomology, &t).unwrap();
                assert_eq!(class.min_alpha_degree(), Some(cat.codimension(&m) as i32), "{g} {m:?}");
            }
        }
    }
}

#[test]
fn orbit_classes_sum_to_the_total_class() {
    let cases: Vec<(Quiver, Vec<DimVector>)> = vec![
        (Quiver::equioriented_a(2), dv(&[2, 2]).below()),
        (Quiver::equioriented_a(3), dv(&[1, 2, 1]).below()),
        (d4(), vec![dv(&[1, 1, 2, 1])]),
    ];
    for (q, dims) in cases {
        let cat = catalog(&q);
        let t = table(&cat, &MODES);
        for g in dims {
            for mode in MODES {
                let v = verify_sum_identity(&cat, &g, mode, &t).unwrap();
                assert!(v.holds, "{g} {mode}: {}", v.difference);
            }
        }
    }
}

#[test]
fn table_entries_are_well_formed() {
    for q in [Quiver::equioriented_a(2), Quiver::equioriented_a(3), d4(), d5()] {
        let cat = catalog(&q);
        let t = table(&cat, &MODES);
        for b in &cat.roots {
            let blocks = q.variable_blocks(b);
            let h = t.require(b, Mode::Cohomology).unwrap();
            assert!(h.is_symmetric(&blocks));
            assert_eq!(h.alpha_degree_part(0), LaurentPoly::one(), "{b}");
            let k = t.require(b, Mode::KTheory).unwrap();
            assert!(k.is_symmetric(&blocks));
            let s = specialize(k);
            assert!(s.is_zero() || s.is_one(), "{b}: {s}");
        }
    }
}
