use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quadmon::quad::classify;
use quadmon::symbolic::verify_all;

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for ring in quadmon_bench::rings() {
        group.bench_with_input(
            BenchmarkId::from_parameter(ring.to_string()),
            &ring,
            |b, r| b.iter(|| classify(r).expect("finite ring")),
        );
    }
    group.finish();
}

fn bench_monoid(c: &mut Criterion) {
    let mut group = c.benchmark_group("quad_monoid");
    for ring in quadmon_bench::rings() {
        let cls = classify(&ring).expect("finite ring");
        group.bench_with_input(
            BenchmarkId::from_parameter(ring.to_string()),
            &cls,
            |b, cls| b.iter(|| cls.monoid().expect("valid monoid")),
        );
    }
    group.finish();
}

fn bench_identities(c: &mut Criterion) {
    c.bench_function("verify_all", |b| b.iter(verify_all));
}

criterion_group!(benches, bench_classify, bench_monoid, bench_identities);
criterion_main!(benches);
