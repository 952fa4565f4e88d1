use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use complexcode_core::{
    anticode_summary_identity, build_anticode, build_code, min_distance_geometric, Budgets,
    PrimeModulus, SimplicialComplex,
};

fn nine_triangles() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        8,
        [
            [0, 1, 7], [0, 2, 7], [1, 2, 7],
            [2, 3, 5], [2, 4, 5], [3, 4, 5],
            [0, 4, 6], [0, 2, 6], [2, 4, 6],
        ],
    )
    .unwrap()
}

fn skeleton(n: usize) -> SimplicialComplex {
    SimplicialComplex::simplex(n + 1).unwrap().skeleton(n - 1)
}

fn face_codes(c: &mut Criterion) {
    let budgets = Budgets::default();
    let mut g = c.benchmark_group("face_code");
    for n in [6usize, 10, 14] {
        let complex = skeleton(n);
        g.bench_with_input(BenchmarkId::new("geometric", n), &complex, |b, cx| {
            b.iter(|| min_distance_geometric(black_box(cx)).unwrap())
        });
        if n <= 10 {
            let code = build_code(&complex, PrimeModulus::TWO).unwrap();
            g.bench_with_input(BenchmarkId::new("exhaustive", n), &code, |b, code| {
                b.iter(|| code.min_distance_exhaustive(&budgets).unwrap())
            });
        }
    }
    g.finish();
}

fn anticodes(c: &mut Criterion) {
    let budgets = Budgets::default();
    let complex = nine_triangles();
    let mut g = c.benchmark_group("anticode");
    g.sample_size(10);
    for p in [2u64, 3] {
        let p = PrimeModulus::new(p).unwrap();
        let code = build_anticode(&complex, p).unwrap();
        g.bench_function(BenchmarkId::new("exhaustive", p.get()), |b| {
            b.iter(|| code.min_distance_exhaustive(&budgets).unwrap())
        });
        g.bench_function(BenchmarkId::new("identity", p.get()), |b| {
            b.iter(|| anticode_summary_identity(black_box(&complex), p, &budgets).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, face_codes, anticodes);
criterion_main!(benches);
