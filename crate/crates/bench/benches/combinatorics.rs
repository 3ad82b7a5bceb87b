use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use specht_bench::{partition, prime};
use specht_core::checks::rim_hook_core_weight;
use specht_core::vertex::{classify, SpechtContext};
use specht_core::{m_core_weight, p_adic_expansion, partitions, specht_dimension};

fn hooks_and_cores(c: &mut Criterion) {
    let mu = partition(&[12, 9, 9, 7, 4, 4, 2, 1, 1]);
    c.bench_function("hook_grid", |b| b.iter(|| black_box(&mu).hook_grid()));
    c.bench_function("core_weight_abacus", |b| b.iter(|| m_core_weight(black_box(&mu), 3)));
    c.bench_function("core_weight_rim_hooks", |b| {
        b.iter(|| rim_hook_core_weight(black_box(&mu), 3, &mut |_| 0))
    });
    c.bench_function("specht_dimension", |b| b.iter(|| specht_dimension(black_box(&mu))));
    c.bench_function("p_adic_expansion", |b| b.iter(|| p_adic_expansion(black_box(&mu), prime(2))));
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("partitions_30", |b| b.iter(|| partitions(black_box(30)).count()));
    c.bench_function("classify_all_20_p2", |b| {
        let two = prime(2);
        b.iter(|| {
            partitions(20)
                .map(|mu| classify(&SpechtContext::new(mu, two)).complexity.hi)
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, hooks_and_cores, enumeration);
criterion_main!(benches);
