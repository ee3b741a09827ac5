use std::hint::black_box;

use codegree_core::chartab::{dixon_prime, ClassMatrix};
use codegree_core::construct::{build_named, build_paper_g};
use codegree_core::field::BinaryFieldCtx;
use codegree_core::{character_table, codegrees};
use criterion::{criterion_group, criterion_main, Criterion};

fn field_arithmetic(c: &mut Criterion) {
    let f = BinaryFieldCtx::with_default(10).unwrap();
    let g = f.primitive_element();
    c.bench_function("gf1024_pow_all_units", |b| {
        b.iter(|| (0..1023u64).fold(0u32, |acc, k| acc ^ f.pow(black_box(g), k).bits()))
    });
}

fn small_tables(c: &mut Criterion) {
    for name in ["S4", "SL23", "torus_t"] {
        c.bench_function(&format!("character_table_{name}"), |b| {
            b.iter(|| {
                let g = build_named(name).unwrap();
                character_table(&g).unwrap()
            })
        });
    }
}

fn paper_group(c: &mut Criterion) {
    let mut group = c.benchmark_group("paper_g");
    group.sample_size(10);
    group.bench_function("build_and_classes", |b| {
        b.iter(|| {
            let g = build_paper_g().unwrap();
            g.classes().unwrap().len()
        })
    });
    let g = build_paper_g().unwrap();
    let cd = g.classes().unwrap();
    let largest = (0..cd.len()).max_by_key(|&i| cd.sizes[i]).unwrap();
    group.bench_function("class_matrix_largest_class", |b| {
        b.iter(|| ClassMatrix::compute(&g, cd, black_box(largest)))
    });
    group.bench_function("dixon_prime", |b| {
        b.iter(|| dixon_prime(black_box(cd.group_order), cd.exponent).unwrap())
    });
    group.bench_function("table_and_codegrees", |b| {
        b.iter(|| {
            let t = character_table(&g).unwrap();
            codegrees(&t).unwrap().set.len()
        })
    });
    group.finish();
}

criterion_group!(benches, field_arithmetic, small_tables, paper_group);
criterion_main!(benches);
