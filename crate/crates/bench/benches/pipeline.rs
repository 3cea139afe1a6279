use criterion::{black_box, criterion_group, criterion_main, Criterion};

use paratorsion::analysis::analyze;
use paratorsion::corpus;
use paratorsion::liealg::parse_params;
use paratorsion::search::{search, SearchConfig, SplittingCandidate};
use paratorsion::torsion::intrinsic_torsion;
use paratorsion::{KForm, LieAlgebra, Structure};

fn row1() -> LieAlgebra {
    corpus::table1()[0].algebra(&parse_params("lambda=1,mu=1,k=0").unwrap()).unwrap()
}

fn exterior(c: &mut Criterion) {
    let f = (1..=4).fold(KForm::zero(8), |acc, i| acc + KForm::basis(8, &[i, i + 4]));
    c.bench_function("wedge F^4 in dim 8", |b| b.iter(|| black_box(&f).wedge(&f).wedge(&f).wedge(&f)));
    let l = row1();
    let a = KForm::basis(8, &[1, 5]) + KForm::basis(8, &[3, 7]) + KForm::basis(8, &[2, 8]);
    c.bench_function("d on a 2-form, table1 row 1", |b| b.iter(|| l.d(black_box(&a))));
}

fn pipeline(c: &mut Criterion) {
    let aff = Structure::standard(&corpus::aff_cubed()).unwrap();
    let row = Structure::standard(&row1()).unwrap();
    c.bench_function("intrinsic torsion, table1 row 1", |b| b.iter(|| intrinsic_torsion(black_box(&row))));
    c.bench_function("analyze aff3", |b| b.iter(|| analyze(black_box(&aff)).unwrap()));
    c.bench_function("analyze table1 row 1", |b| b.iter(|| analyze(black_box(&row)).unwrap()));
}

fn searching(c: &mut Criterion) {
    let l = row1();
    let cand = SplittingCandidate::coords(&l).unwrap();
    let cfg = SearchConfig { max_witnesses: 3, ..SearchConfig::default() };
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("table1 row 1, coordinate splitting, 3 witnesses", |b| {
        b.iter(|| search(black_box(&l), &cand, &cfg).unwrap())
    });
    g.finish();
}

criterion_group!(benches, exterior, pipeline, searching);
criterion_main!(benches);
