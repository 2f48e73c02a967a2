use criterion::{black_box, criterion_group, criterion_main, Criterion};

use motspec_cli::fixtures::{cusp_graph, d_series_fixture};
use motspec_cli::steenbrink::d_series_check;
use motspec_cli::ts::quasihomog_spectrum;
use motspec_core::resolution::{vanishing, zeta};
use motspec_core::{cone_limit, fiber_class, hsp1, psi_sigma, Cone, ExponentMatrix, LinForm, MonClass, QmodZ, Relation};

fn engine(c: &mut Criterion) {
    let cusp = cusp_graph().build().unwrap();
    c.bench_function("cusp vanishing spectrum", |b| b.iter(|| hsp1(&vanishing(black_box(&cusp)).unwrap()).unwrap()));
    let d5 = d_series_fixture(5).unwrap().datum;
    c.bench_function("d5 zeta expanded to T^20", |b| b.iter(|| zeta(black_box(&d5)).unwrap().expand(20)));
    c.bench_function("d-series check N = 4", |b| b.iter(|| d_series_check(black_box(4)).unwrap()));
}

fn classes(c: &mut Criterion) {
    let m = ExponentMatrix::from_rows(vec![vec![6, 4, 9], vec![2, 8, 3]]).unwrap();
    c.bench_function("fiber class 2x3", |b| b.iter(|| fiber_class(black_box(&m)).unwrap()));
    let mut x = MonClass::zero(2);
    for a in 1..12 {
        for bb in 1..12 {
            x.add_monomial(vec![QmodZ::from_ratio(a, 12), QmodZ::from_ratio(bb, 12)], a % 3, bb % 4, 1);
        }
    }
    c.bench_function("collapse of 121 monomials", |b| b.iter(|| psi_sigma(black_box(&x), (1, 2)).unwrap()));
    c.bench_function("quasihomogeneous spectrum (3, 4, 5, 6)", |b| {
        b.iter(|| quasihomog_spectrum(black_box(&[3, 4, 5, 6])).unwrap())
    });
}

fn cones(c: &mut Criterion) {
    let cone = Cone::orthant(4).unwrap().with(LinForm(vec![-2, -1, 3, 1]), Relation::Ge).unwrap();
    let ell = LinForm(vec![1, 2, 1, 3]);
    c.bench_function("cone limit in dimension 4", |b| b.iter(|| cone_limit(black_box(&cone), &ell, &ell).unwrap()));
}

criterion_group!(benches, engine, classes, cones);
criterion_main!(benches);
