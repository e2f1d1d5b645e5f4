use chromaglue::forest::Profile;
use chromaglue::graph::Graph;
use chromaglue::oracle::chromatic_e;
use chromaglue::tableau::TabProfile;
use chromaglue::verify::{run_suite, Suite};
use chromaglue::{Exec, Limits};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bowtie_chain(k: usize) -> Graph {
    Graph::glue_all(&vec![Graph::complete(3); k]).unwrap()
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    let lim = Limits::default();
    for (label, g) in [("K3+K3+K3", bowtie_chain(3)), ("C9", Graph::cycle(9))] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, label), &g, |b, g| {
                b.iter(|| chromatic_e(g, true, &lim, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn forest_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("forest-profile");
    let g = Graph::glue_all(&[Graph::complete(4), Graph::almost_complete(4), Graph::path(4)]).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| Profile::of_forests(&g, true, exec).unwrap()));
    }
    group.finish();
}

fn tableau_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("tableau-profile");
    let lim = Limits::default();
    let g = Graph::from_hessenberg(&[3, 4, 5, 6, 7, 8, 9, 9, 9]).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| TabProfile::of(&g, &lim, exec).unwrap()));
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify-gluing");
    group.sample_size(10);
    let lim = Limits::default();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| run_suite(Suite::Gluing, 7, &lim, exec, |_| {}).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, oracle, forest_profile, tableau_profile, suite);
criterion_main!(benches);
