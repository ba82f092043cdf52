//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigidity::bounds::{
    asymptotic_ratio, diameter_bound_witness, diameter_vc_bound, max_rigid_diameter,
    path_cycle_bound, path_diameter,
};
use rigidity::families::{cycle_a1, generate, star_spectrum, turan_spectrum, FamilySpec};
use rigidity::gac::{algebraic_connectivity, estimate_gac, rigidity_ratio, OptimizerConfig};
use rigidity::graph::{build_graph, diameter, laplacian, vertex_connectivity, Graph};
use rigidity::matrix::{dot, norm};
use rigidity::rigidity::{
    bearing, is_generically_rigid, rigidity_eigenvalue, rigidity_matrix, stiffness_matrix,
    trivial_motion_basis, Framework, Realization,
};
use rigidity::spectral::{numeric_rank, sym_eigenvalues, SymmetricMatrix, RANK_TOL};
use rigidity::spectrum::SpectralSummary;

fn pass(criterion: usize, detail: &str) {
    println!("criterion {criterion:2} PASS: {detail}");
}

fn laplacian_eigenvalues(g: &Graph) -> Vec<f64> {
    sym_eigenvalues(&SymmetricMatrix::new(laplacian(g)).unwrap()).unwrap()
}

/// 200 seeded random connected graphs on up to 20 vertices.
fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut corpus = Vec::new();
    while corpus.len() < 200 {
        let n = rng.gen_range(2..=20usize);
        let p = rng.gen_range(0.15..0.7f64);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        let g = build_graph(n, &edges).unwrap();
        if g.order() >= 2 && g.is_connected() {
            corpus.push(g);
        }
    }
    corpus
}

/// Every named family instance with at most `max_n` vertices, with the
/// path/cycle/star parameter d capped at 5.
fn family_corpus(max_n: usize) -> Vec<(FamilySpec, Graph)> {
    let mut specs = Vec::new();
    for n in 2..=max_n {
        specs.push(FamilySpec::Complete { n });
    }
    for d in 1..=5usize {
        for n in (d + 1)..=max_n {
            specs.push(FamilySpec::Path { n, d });
            specs.push(FamilySpec::Cycle { n, d });
        }
    }
    for d in 2..=5usize {
        for n in (d + 2)..=max_n {
            specs.push(FamilySpec::Star { n, d });
        }
    }
    for k in 2..=max_n / 2 {
        for r in 2..=max_n / k {
            if k * r <= max_n {
                specs.push(FamilySpec::Turan { k, r });
            }
        }
    }
    specs
        .into_iter()
        .map(|s| (s, generate(&s).unwrap()))
        .collect()
}

fn random_realization(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Realization {
    let coords: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    Realization::new(d, coords).unwrap()
}

#[test]
fn criterion_01_sharp_ratio_at_k2() {
    let start = Instant::now();
    let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
    for d in 2..=5usize {
        let ratio = rigidity_ratio(&k2, d, &OptimizerConfig::default()).unwrap();
        assert!((ratio - 1.0).abs() <= 1e-9, "d={d}: ratio {ratio}");
    }
    // the rigidity eigenvalue is 2 at arbitrary injective realizations
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in 2..=5usize {
        for _ in 0..5 {
            let p = random_realization(2, d, &mut rng);
            let f = Framework::new(k2.clone(), p).unwrap();
            let val = rigidity_eigenvalue(&f).unwrap();
            assert!((val - 2.0).abs() <= 1e-9, "d={d}: {val}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(1, &format!("ratio(K2, d) = 1 for d in 2..=5 in {elapsed:.2?}"));
}

#[test]
fn criterion_02_complete_graphs_in_the_plane() {
    let start = Instant::now();
    for n in 3..=8usize {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        let est = estimate_gac(&g, 2, &OptimizerConfig::default()).unwrap();
        let target = n as f64 / 2.0;
        assert!(
            est.value >= 0.95 * target && est.value <= target + 1e-6,
            "K{n}: {} not in [{}, {}]",
            est.value,
            0.95 * target,
            target + 1e-6
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    pass(2, &format!("a_2(K_n) within [0.95 n/2, n/2] for n in 3..=8 in {elapsed:.2?}"));
}

#[test]
fn criterion_03_star_graphs() {
    let start = Instant::now();
    for n in 4..=8usize {
        let g = generate(&FamilySpec::Star { n, d: 2 }).unwrap();
        let est = estimate_gac(&g, 2, &OptimizerConfig::default()).unwrap();
        assert!(
            est.value >= 0.95 && est.value <= 1.0 + 1e-6,
            "S({n},2): {}",
            est.value
        );
    }
    // a_1(S_{n,d}) = d exactly
    for d in 2..=4usize {
        for n in (d + 2)..=(d + 6) {
            let g = generate(&FamilySpec::Star { n, d }).unwrap();
            let a1 = algebraic_connectivity(&g).unwrap();
            assert!((a1 - d as f64).abs() <= 1e-9, "S({n},{d}): a1 = {a1}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    pass(3, &format!("a_2(S_n,2) in [0.95, 1] for n in 4..=8 in {elapsed:.2?}"));
}

#[test]
fn criterion_04_closed_form_spectra() {
    // every star parameter set with <= 60 vertices
    let mut checked = 0usize;
    for n in 3..=60usize {
        for d in 1..=(n - 2) {
            let closed = star_spectrum(n, d).unwrap();
            let g = if d >= 2 {
                generate(&FamilySpec::Star { n, d }).unwrap()
            } else {
                // S_{n,1} is the ordinary star K_{1,n-1}
                let edges: Vec<(usize, usize)> = (2..=n).map(|j| (1, j)).collect();
                build_graph(n, &edges).unwrap()
            };
            let numeric = SpectralSummary::from_eigenvalues(laplacian_eigenvalues(&g), 1e-7);
            let dev = closed.max_deviation(&numeric).unwrap();
            assert!(dev <= 1e-9, "star n={n} d={d}: deviation {dev:e}");
            checked += 1;
        }
    }
    // every Turán parameter set with <= 60 vertices
    for k in 2..=30usize {
        for r in 2..=30usize {
            if k * r > 60 {
                continue;
            }
            let closed = turan_spectrum(k, r).unwrap();
            let g = generate(&FamilySpec::Turan { k, r }).unwrap();
            let numeric = SpectralSummary::from_eigenvalues(laplacian_eigenvalues(&g), 1e-7);
            let dev = closed.max_deviation(&numeric).unwrap();
            assert!(dev <= 1e-9, "turan k={k} r={r}: deviation {dev:e}");
            checked += 1;
        }
    }
    // cycle_a1 against numeric lambda_2: all n <= 60, then steps of 10 to 200
    for d in 1..=5usize {
        let ns = ((d + 1)..=60).chain((70..=200).step_by(10));
        for n in ns {
            let g = generate(&FamilySpec::Cycle { n, d }).unwrap();
            let lam2 = laplacian_eigenvalues(&g)[1];
            let closed = cycle_a1(n, d).unwrap();
            assert!(
                (closed - lam2).abs() <= 1e-9,
                "cycle n={n} d={d}: closed {closed} vs numeric {lam2}"
            );
            checked += 1;
        }
    }
    pass(4, &format!("{checked} closed-form spectra match the eigensolver"));
}

#[test]
fn criterion_05_diameter_bound_over_corpus() {
    let mut checked = 0usize;
    for g in random_corpus() {
        let a1 = algebraic_connectivity(&g).unwrap();
        let bound = diameter_vc_bound(&g).unwrap();
        assert!(a1 <= bound + 1e-9, "random graph: a1 {a1} > bound {bound}");
        checked += 1;
    }
    for (spec, g) in family_corpus(40) {
        let a1 = algebraic_connectivity(&g).unwrap();
        let bound = diameter_vc_bound(&g).unwrap();
        assert!(a1 <= bound + 1e-9, "{spec}: a1 {a1} > bound {bound}");
        checked += 1;
    }
    // equality at K2 with both sides exactly 2
    let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
    let bound = diameter_vc_bound(&k2).unwrap();
    let a1 = algebraic_connectivity(&k2).unwrap();
    assert_eq!(bound, 2.0);
    assert!((a1 - 2.0).abs() <= 1e-12);
    pass(5, &format!("a_1 <= diameter bound on {checked} graphs, equality at K2"));
}

#[test]
fn criterion_06_witness_chain_over_corpus() {
    let mut checked = 0usize;
    for g in random_corpus() {
        let w = diameter_bound_witness(&g).unwrap();
        for link in [&w.energy_link, &w.mass_link, &w.rayleigh_link] {
            assert!(
                link.slack >= -1e-9,
                "random graph: {} slack {}",
                link.theorem,
                link.slack
            );
        }
        checked += 1;
    }
    for (spec, g) in family_corpus(40) {
        let w = diameter_bound_witness(&g).unwrap();
        for link in [&w.energy_link, &w.mass_link, &w.rayleigh_link] {
            assert!(link.slack >= -1e-9, "{spec}: {} slack {}", link.theorem, link.slack);
        }
        checked += 1;
    }
    pass(6, &format!("witness chain holds on {checked} graphs"));
}

#[test]
fn criterion_07_extremal_diameter() {
    for d in 1..=5usize {
        for n in (d + 1)..=60 {
            let g = generate(&FamilySpec::Path { n, d }).unwrap();
            let bfs = diameter(&g).unwrap();
            let closed = path_diameter(n, d).unwrap();
            let maximal = max_rigid_diameter(n, d);
            assert_eq!(bfs, closed, "n={n} d={d}");
            assert_eq!(closed, maximal, "n={n} d={d}");
            assert_eq!(closed, (n - 1).div_ceil(d), "n={n} d={d}");
        }
    }
    pass(7, "diameter(P_n,d) = ceil((n-1)/d) = max rigid diameter on the full grid");
}

#[test]
fn criterion_08_rigidity_implies_connectivity() {
    let mut rigid_count = 0usize;
    for g in random_corpus() {
        for d in [2usize, 3] {
            if g.order() < d + 1 {
                continue;
            }
            if is_generically_rigid(&g, d, 3, 11).unwrap() {
                let kappa = vertex_connectivity(&g).unwrap();
                assert!(kappa >= d, "rigid graph with kappa {kappa} < d {d}");
                rigid_count += 1;
            }
        }
    }
    // P_{n,d} is generically rigid in R^d via the rank identity
    for d in 1..=4usize {
        for n in (d + 1)..=30 {
            let g = generate(&FamilySpec::Path { n, d }).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            let p = random_realization(n, d, &mut rng);
            let f = Framework::new(g.clone(), p).unwrap();
            let r = rigidity_matrix(&f);
            let rank = numeric_rank(&r, RANK_TOL).unwrap();
            assert_eq!(
                rank,
                d * n - d * (d + 1) / 2,
                "P({n},{d}) rank deficit"
            );
            assert!(is_generically_rigid(&g, d, 3, 11).unwrap(), "P({n},{d})");
        }
    }
    pass(8, &format!("{rigid_count} rigid corpus graphs all d-connected; paths rigid via rank"));
}

#[test]
fn criterion_09_path_versus_cycle() {
    for d in 2..=4usize {
        for n in (d + 2)..=40 {
            let report = path_cycle_bound(n, d).unwrap();
            assert!(
                report.satisfied,
                "n={n} d={d}: lhs {} rhs {}",
                report.lhs, report.rhs
            );
        }
    }
    pass(9, "a_1(P_n,d) <= a_1(C_2n,d) on the full grid");
}

#[test]
fn criterion_10_asymptotic_quarter() {
    let start = Instant::now();
    for d in 2..=4usize {
        let r500 = asymptotic_ratio(500, d).unwrap();
        assert!((r500 - 0.25).abs() <= 1e-3, "d={d}: {r500}");
        let mut prev = f64::INFINITY;
        for n in 16..=512usize {
            let r = asymptotic_ratio(n, d).unwrap();
            assert!(
                r <= prev + 1e-12,
                "d={d}: ratio not decreasing at n={n} ({r} > {prev})"
            );
            assert!(r >= 0.25 - 1e-9, "d={d} n={n}: {r}");
            prev = r;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(10, &format!("ratio sweeps decrease to 1/4 in {elapsed:.2?}"));
}

#[test]
fn criterion_11_kernel_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFEED);

    // quadratic-form identity on 100 random framework/vector pairs
    let corpus = random_corpus();
    for trial in 0..100usize {
        let g = &corpus[trial % corpus.len()];
        let n = g.order();
        let d = 2 + trial % 3;
        let p = random_realization(n, d, &mut rng);
        let f = Framework::new(g.clone(), p).unwrap();
        let s = stiffness_matrix(&f);
        let u: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>() - 0.5).collect();
        let lhs = s.quadratic_form(&u);
        let mut rhs = 0.0;
        for &(i, j) in g.edges() {
            let b = bearing(&f, i, j).unwrap();
            let du: Vec<f64> = (0..d)
                .map(|k| u[(i - 1) * d + k] - u[(j - 1) * d + k])
                .collect();
            rhs += dot(&du, &b).powi(2);
        }
        assert!(
            (lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0),
            "trial {trial}: quadratic form mismatch {lhs} vs {rhs}"
        );
    }

    // trivial motions lie in the null space of R, on the full corpus
    for (idx, g) in corpus.iter().enumerate() {
        let d = 2 + idx % 3;
        let p = random_realization(g.order(), d, &mut rng);
        let f = Framework::new(g.clone(), p).unwrap();
        let r = rigidity_matrix(&f);
        let scale = r.max_abs().max(1.0);
        for t in trivial_motion_basis(f.realization()) {
            let residual = norm(&r.matvec(&t));
            assert!(
                residual <= 1e-9 * scale * norm(&t),
                "graph {idx}: residual {residual:e}"
            );
        }
    }

    // scale/translation invariance of S to 1e-12
    for g in corpus.iter().take(20) {
        let n = g.order();
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()])
            .collect();
        let moved: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| vec![2.75 * p[0] + 13.0, 2.75 * p[1] - 4.5])
            .collect();
        let f1 = Framework::new(g.clone(), Realization::from_points(&pts).unwrap()).unwrap();
        let f2 = Framework::new(g.clone(), Realization::from_points(&moved).unwrap()).unwrap();
        let s1 = stiffness_matrix(&f1);
        let s2 = stiffness_matrix(&f2);
        for i in 0..2 * n {
            for j in 0..2 * n {
                assert!((s1[(i, j)] - s2[(i, j)]).abs() <= 1e-12);
            }
        }
    }

    // d=1 stiffness equals the Laplacian exactly for injective realizations
    for g in corpus.iter().take(20) {
        let n = g.order();
        let coords: Vec<f64> = (0..n).map(|i| i as f64 + 0.25 * rng.gen::<f64>()).collect();
        let f = Framework::new(g.clone(), Realization::new(1, coords).unwrap()).unwrap();
        let s = stiffness_matrix(&f);
        let l = laplacian(g);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(s[(i, j)], l[(i, j)], "entry ({i},{j})");
            }
        }
    }

    pass(11, "quadratic form, null space, invariance, and d=1 checks hold");
}
