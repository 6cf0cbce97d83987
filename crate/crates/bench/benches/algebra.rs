use criterion::{black_box, criterion_group, criterion_main, Criterion};

use adsfam_bench::WORKLOADS;

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("adsfam");
    group.sample_size(10);
    for w in &WORKLOADS {
        group.bench_function(w.name, |b| b.iter(|| black_box((w.run)())));
    }
    group.finish();
}

criterion_group!(benches, algebra);
criterion_main!(benches);
