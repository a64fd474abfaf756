use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hypfib_bench::{claim_families, index_vectors};
use hypfib_core::bounds;
use hypfib_core::enumerator::{self, S2Mode, SearchSpec};
use hypfib_core::invariants;
use hypfib_core::rational::{frac, int};
use hypfib_core::ruled_surface::{build_example, claim_line_bundle, min_l_dot_d, verify_sharpness, SearchBox};

fn formulas(c: &mut Criterion) {
    let vs = index_vectors();
    c.bench_function("formulas/numerics_with", |b| {
        b.iter(|| {
            for v in &vs {
                let _ = black_box(invariants::numerics_with(black_box(v), 1, false));
            }
        })
    });
    c.bench_function("formulas/gbound_extremes", |b| {
        b.iter(|| bounds::gbound_extremes(black_box(&frac(37, 7)), &int(9), 1, 400).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    let spec = SearchSpec::new(int(1), 1).parity(false);
    g.bench_function("chi1_nonnegative", |b| b.iter(|| enumerator::enumerate(black_box(&spec)).unwrap()));
    let neg = spec.clone().mode(S2Mode::Negative);
    g.bench_function("chi1_negative", |b| b.iter(|| enumerator::enumerate(black_box(&neg)).unwrap()));
    let chi2 = SearchSpec::new(int(2), 1).genus_range(2, 12).parity(false);
    g.bench_function("chi2_g2_12", |b| b.iter(|| enumerator::enumerate(black_box(&chi2)).unwrap()));
    g.bench_function("classify_pg_q_1", |b| b.iter(enumerator::classify_pg_q_1));
    g.finish();
}

fn examples(c: &mut Criterion) {
    let mut g = c.benchmark_group("examples");
    g.sample_size(10);
    g.bench_function("build_and_verify", |b| {
        b.iter(|| {
            for f in claim_families() {
                let ex = build_example(f).unwrap();
                black_box(verify_sharpness(&ex).unwrap());
            }
        })
    });
    for f in claim_families() {
        let ex = build_example(f).unwrap();
        let l = claim_line_bundle(&ex);
        let name = format!("min_l_dot_d/{}", hypfib_core::ruled_surface::families::params_text(&f).replace(' ', "_"));
        g.bench_function(format!("{}_{name}", f.tag()), |b| {
            b.iter(|| min_l_dot_d(&ex.surface, black_box(&l), &SearchBox::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, formulas, enumeration, examples);
criterion_main!(benches);
