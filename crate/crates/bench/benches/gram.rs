use std::hint::black_box;

use brauer_core::combinat::cell_labels;
use brauer_core::diagram::oracle::{gram_matrix_oracle, MurphyBasis};
use brauer_core::gram::{gram_det_table, GramEngine};
use brauer_core::ring::rat;
use brauer_core::{BrauerAlgebra, BrauerDiagram, CellLabel};
use criterion::{criterion_group, criterion_main, Criterion};

fn recursion(c: &mut Criterion) {
    let mut g = c.benchmark_group("recursion");
    g.sample_size(10);
    for n_max in [12, 20] {
        g.bench_function(format!("table_n{n_max}"), |b| b.iter(|| gram_det_table(black_box(n_max)).unwrap()));
    }
    g.bench_function("single_label_n16", |b| {
        let label = CellLabel::parse(16, 3, "4,3,2,1").unwrap();
        b.iter(|| GramEngine::new().gram_det(black_box(&label)).unwrap())
    });
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for n in [4, 5] {
        MurphyBasis::for_level(n).unwrap();
        g.bench_function(format!("all_gram_matrices_n{n}"), |b| {
            b.iter(|| {
                for label in cell_labels(n) {
                    black_box(gram_matrix_oracle(&label, &rat(11)).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn diagrams(c: &mut Criterion) {
    let all = BrauerDiagram::all(5);
    c.bench_function("compose_all_pairs_sample_n5", |b| {
        b.iter(|| {
            let mut loops = 0;
            for x in all.iter().step_by(7) {
                for y in all.iter().step_by(11) {
                    loops += x.compose(y).1;
                }
            }
            loops
        })
    });
    let alg = BrauerAlgebra::new(5, rat(11));
    let x: Vec<_> = (1..=5).map(|i| alg.jm_element(i).unwrap()).collect();
    c.bench_function("jm_product_n5", |b| b.iter(|| alg.product(&x.iter().collect::<Vec<_>>())));
}

criterion_group!(benches, recursion, oracle, diagrams);
criterion_main!(benches);
