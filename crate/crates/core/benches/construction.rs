use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monocurve::generators::{GeneratorSet, PatilSet};
use monocurve::polyring::{buchberger, OrderContext};
use monocurve::syzygy::{ModuleContext, SyzygySet};
use monocurve::CurveParams;

const TRIPLES: &[(u64, u64, usize)] = &[(7, 1, 3), (11, 2, 4), (13, 3, 5), (16, 1, 6)];

fn params(&(m0, d, p): &(u64, u64, usize)) -> CurveParams {
    CurveParams::new(m0, d, p).unwrap()
}

/// Closed-form `G'` against a Buchberger run from the other generating set.
fn closed_form_vs_buchberger(c: &mut Criterion) {
    let mut group = c.benchmark_group("groebner_basis");
    for t in TRIPLES {
        let ctx = OrderContext::new(params(t));
        let patil = PatilSet::build(&ctx).polys();
        group.bench_with_input(BenchmarkId::new("closed_form", t.2), &ctx, |b, ctx| {
            b.iter(|| GeneratorSet::build(black_box(ctx)))
        });
        group.bench_with_input(BenchmarkId::new("buchberger", t.2), &patil, |b, g| {
            b.iter(|| buchberger(&ctx, black_box(g)))
        });
    }
    group.finish();
}

fn syzygy_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("syzygies");
    for t in TRIPLES {
        let ctx = ModuleContext::new(params(t));
        group.bench_with_input(BenchmarkId::new("build", t.2), &ctx, |b, ctx| {
            b.iter(|| SyzygySet::build(black_box(ctx)))
        });
    }
    group.finish();
}

/// The same work on a one-thread pool and on the default pool.
#[cfg(feature = "parallel")]
fn thread_scaling(c: &mut Criterion) {
    use monocurve::syzygy::verify_groebner_g_hat;
    use monocurve::{verify_all, VerifyOptions};
    use rayon::ThreadPoolBuilder;

    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let multi = ThreadPoolBuilder::new().build().unwrap();
    let pools = [("1_thread", &single), ("default", &multi)];

    let sweep: Vec<CurveParams> = TRIPLES[..3].iter().map(params).collect();
    let opts = VerifyOptions {
        bound: None,
        image_samples: 200,
        minimal_generation: false,
        ..VerifyOptions::default()
    };
    let module = ModuleContext::new(params(&(13, 3, 5)));

    let mut group = c.benchmark_group("thread_scaling");
    group.sample_size(10);
    for (name, pool) in pools {
        group.bench_function(BenchmarkId::new("g_hat_checks_p5", name), |b| {
            b.iter(|| pool.install(|| verify_groebner_g_hat(black_box(&module))))
        });
        group.bench_function(BenchmarkId::new("verify_sweep", name), |b| {
            b.iter(|| pool.install(|| sweep.iter().all(|p| verify_all(p, &opts).passed())))
        });
    }
    println!("default pool: {} threads", multi.current_num_threads());
    group.finish();
}

#[cfg(not(feature = "parallel"))]
fn thread_scaling(_: &mut Criterion) {
    println!("enable the `parallel` feature to compare thread counts");
}

criterion_group! {
    name = benches;
    config = Criterion::default().measurement_time(Duration::from_secs(3));
    targets = closed_form_vs_buchberger, syzygy_construction, thread_scaling
}
criterion_main!(benches);
