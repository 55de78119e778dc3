use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use supercohom::bar::CobarComplex;
use supercohom::complex::betti_numbers;
use supercohom::env::RestrictedEnvelope;
use supercohom::fplinalg::PrimeField;
use supercohom::liesuper::{LieSuperAlgebraSpec, SupermoduleSpec};
use supercohom::may::{d_complex, may_complex};
use supercohom::parallel::{set_parallelism, Parallelism};

fn borel_odd(p: u32) -> LieSuperAlgebraSpec {
    let f = PrimeField::new(p).unwrap();
    let mut l = LieSuperAlgebraSpec::new(f, &["h", "e"], &["y"]).unwrap();
    l.set_bracket_named("h", "e", &[("e", 2)]).unwrap();
    l.set_bracket_named("h", "y", &[("y", 1)]).unwrap();
    l.set_bracket_named("y", "y", &[("e", 1)]).unwrap();
    l.set_restriction_named("h", &[("h", 1)]).unwrap();
    l
}

fn modes() -> [(&'static str, Parallelism); 2] {
    [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Parallel)]
}

fn envelope(c: &mut Criterion) {
    let l = borel_odd(5);
    let mut g = c.benchmark_group("restricted_envelope");
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::new(name, "borel-odd p=5"), |b| {
            set_parallelism(mode);
            b.iter(|| RestrictedEnvelope::new(&l))
        });
    }
    g.finish();
}

fn may_betti(c: &mut Criterion) {
    let l = borel_odd(5);
    let k = SupermoduleSpec::trivial(&l);
    let w = l.weight_grading(Some(&k));
    let mut g = c.benchmark_group("may_betti");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::new(name, "borel-odd p=5 n<=6"), |b| {
            set_parallelism(mode);
            b.iter(|| {
                let (_, x) = may_complex(&l, 7, &w).unwrap();
                betti_numbers(&d_complex(&x, &k, &w), 6)
            })
        });
    }
    g.finish();
}

fn cobar_betti(c: &mut Criterion) {
    let f = PrimeField::new(3).unwrap();
    let l = LieSuperAlgebraSpec::abelian(f, 1, 1);
    let k = SupermoduleSpec::trivial(&l);
    let w = l.weight_grading(Some(&k));
    let v = RestrictedEnvelope::new(&l);
    let mut g = c.benchmark_group("cobar_betti");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::new(name, "abelian-1-1 p=3 n<=5"), |b| {
            set_parallelism(mode);
            b.iter(|| {
                let cb = CobarComplex::new(&v, &k, &w, 6, 1_000_000).unwrap();
                betti_numbers(&cb, 5)
            })
        });
    }
    g.finish();
}

criterion_group!(benches, envelope, may_betti, cobar_betti);
criterion_main!(benches);
