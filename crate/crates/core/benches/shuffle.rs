use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcc_core::charclass::{build_basic_table, open_orbit_class, verify_sum_identity, BasicClassTable, BuildOptions};
use qcc_core::exec;
use qcc_core::hall::Mode;
use qcc_core::quiver::{DimVector, Quiver};
use qcc_core::repalg::RootCatalog;

struct Case {
    name: &'static str,
    cat: RootCatalog,
    gamma: DimVector,
    mode: Mode,
    table: BasicClassTable,
}

fn case(name: &'static str, q: Quiver, gamma: &[u32], mode: Mode) -> Case {
    let cat = RootCatalog::new(&q).unwrap();
    let gamma = DimVector(gamma.to_vec());
    let opts = BuildOptions {
        whitelist: Some(vec![gamma.clone()]),
        ..BuildOptions::default()
    };
    let table = build_basic_table(&cat, mode, &opts).unwrap();
    Case {
        name,
        cat,
        gamma,
        mode,
        table,
    }
}

fn cases() -> Vec<Case> {
    let d4 = Quiver::new(&[1, 2, 3, 4], &[(1, 3), (2, 3), (4, 3)]).unwrap();
    vec![
        case("a3_222_h", Quiver::equioriented_a(3), &[2, 2, 2], Mode::Cohomology),
        case("a3_222_k", Quiver::equioriented_a(3), &[2, 2, 2], Mode::KTheory),
        case("d4_1121_k", d4, &[1, 1, 2, 1], Mode::KTheory),
    ]
}

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", true), ("sequential", false)]
}

fn bench_open_orbit(c: &mut Criterion) {
    let mut group = c.benchmark_group("open_orbit");
    for k in cases() {
        for (label, on) in modes() {
            exec::set_parallel(on);
            group.bench_with_input(BenchmarkId::new(label, k.name), &k, |b, k| {
                b.iter(|| open_orbit_class(&k.cat, &k.gamma, k.mode, &k.table).unwrap())
            });
        }
    }
    exec::set_parallel(true);
    group.finish();
}

fn bench_sum_identity(c: &mut Criterion) {
    let mut group = c.benchmark_group("sum_identity");
    for k in cases() {
        for (label, on) in modes() {
            exec::set_parallel(on);
            group.bench_with_input(BenchmarkId::new(label, k.name), &k, |b, k| {
                b.iter(|| assert!(verify_sum_identity(&k.cat, &k.gamma, k.mode, &k.table).unwrap().holds))
            });
        }
    }
    exec::set_parallel(true);
    group.finish();
}

fn config() -> Criterion {
    Criterion::default()
        .sample_size(10)
        .warm_up_time(Duration::from_secs(1))
        .measurement_time(Duration::from_secs(5))
}

criterion_group!(
    name = benches;
    config = config();
    targets = bench_open_orbit, bench_sum_identity
);
criterion_main!(benches);
