use criterion::{criterion_group, criterion_main, Criterion};

use toromotive::fan::weyl_chamber_fan;
use toromotive::motivic::decompose;
use toromotive::poincare::{compactification_poincare, PoincarePolynomial};
use toromotive::root_datum::{build_root_datum, Family, LatticeKind};
use toromotive_testkit::sl3_bisected;

fn weyl_enumeration(c: &mut Criterion) {
    c.bench_function("weyl_group B4", |b| {
        let rd = build_root_datum(Family::B, 4, LatticeKind::SimplyConnected).unwrap();
        b.iter(|| rd.weyl_group().unwrap().len())
    });
}

fn chamber_fan_validation(c: &mut Criterion) {
    c.bench_function("validate_fan A3 adjoint chambers", |b| {
        let rd = build_root_datum(Family::A, 3, LatticeKind::Adjoint).unwrap();
        let fan = weyl_chamber_fan(&rd).unwrap();
        b.iter(|| toromotive::fan::validate_fan(&rd, &fan).unwrap())
    });
}

fn compactification(c: &mut Criterion) {
    c.bench_function("compactification_poincare A2 bisected", |b| {
        let (rd, fan) = sl3_bisected();
        b.iter(|| compactification_poincare(&rd, &fan).unwrap())
    });
}

fn decomposition(c: &mut Criterion) {
    c.bench_function("decompose p=3", |b| {
        let poly = PoincarePolynomial::from_coeffs(vec![1, 3, 8, 15, 18, 15, 8, 3, 1]);
        b.iter(|| decompose(&poly, 3, 3).unwrap())
    });
}

criterion_group!(
    benches,
    weyl_enumeration,
    chamber_fan_validation,
    compactification,
    decomposition
);
criterion_main!(benches);
