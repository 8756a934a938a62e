use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use forge_bench::{three_cycles, transpositions, transpositions5};
use forge_core::constructions::{abelian_extension, dihedral};
use forge_core::groups::{enveloping_presentation, todd_coxeter, DEFAULT_MAX_COSETS};
use forge_core::knots::{bundled_knots, state_sum};
use forge_core::{are_isomorphic, second_cohomology, Permutation};

fn coset_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("todd_coxeter");
    for (name, q) in [("dihedral(5)", dihedral(5).unwrap()), ("Sym(4) transpositions", transpositions())] {
        let p = enveloping_presentation(&q, true);
        group.bench_function(name, |b| {
            b.iter(|| todd_coxeter(black_box(&p), DEFAULT_MAX_COSETS).unwrap().order())
        });
    }
    let x = transpositions();
    let phi = second_cohomology(&x, 2).unwrap().representatives()[0].clone();
    let (e, _) = abelian_extension(&x, &phi).unwrap();
    let p = enveloping_presentation(&e, true);
    group.bench_function("transposition extension", |b| {
        b.iter(|| todd_coxeter(black_box(&p), DEFAULT_MAX_COSETS).unwrap().order())
    });
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("second_cohomology");
    for (name, q) in [
        ("dihedral(9)", dihedral(9).unwrap()),
        ("Sym(4) 3-cycles", three_cycles()),
        ("Sym(5) transpositions", transpositions5()),
    ] {
        group.bench_function(name, |b| b.iter(|| second_cohomology(black_box(&q), 4).unwrap()));
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("state_sum");
    let knots = bundled_knots();
    let x = dihedral(5).unwrap();
    let phi = second_cohomology(&x, 5).unwrap();
    let zero = forge_core::Cocycle2::zero(5, 5).unwrap();
    let phi = phi.representatives().first().cloned().unwrap_or(zero);
    group.bench_function("dihedral(5), bundled knots", |b| {
        b.iter(|| {
            knots
                .iter()
                .map(|k| state_sum(black_box(&x), &phi, k).unwrap().total())
                .sum::<u64>()
        })
    });
    let y = three_cycles();
    let psi = second_cohomology(&y, 2).unwrap().representatives()[0].clone();
    group.bench_function("Sym(4) 3-cycles, bundled knots", |b| {
        b.iter(|| {
            knots
                .iter()
                .map(|k| state_sum(black_box(&y), &psi, k).unwrap().total())
                .sum::<u64>()
        })
    });
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut group = c.benchmark_group("isomorphism");
    let x = transpositions();
    let phi = second_cohomology(&x, 2).unwrap().representatives()[0].clone();
    let (e, _) = abelian_extension(&x, &phi).unwrap();
    let n = e.order();
    let shift = Permutation::from_images((0..n).map(|i| (i * 5 + 3) % n).collect()).unwrap();
    let r = e.relabel(&shift).unwrap();
    group.bench_function("order-12 extension vs relabeling", |b| {
        b.iter(|| are_isomorphic(black_box(&e), black_box(&r)))
    });
    group.finish();
}

criterion_group!(benches, coset_enumeration, cohomology, invariants, isomorphism);
criterion_main!(benches);
