//! The `verify` subcommand: named invariant checks with one line per
//! check and a nonzero exit on any failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigidity::bounds::{
    asymptotic_ratio, diameter_bound_witness, diameter_vc_bound, max_rigid_diameter,
    path_cycle_bound, path_diameter,
};
use rigidity::families::{
    cycle_a1, cycle_test_vectors, generate, mirrored_path, star_spectrum, turan_spectrum,
    FamilySpec,
};
use rigidity::matrix::{dot, norm};
use rigidity::rigidity::{
    bearing, is_generically_rigid, rigidity_eigenvalue, rigidity_matrix, stiffness_matrix,
    trivial_motion_basis, Framework, Realization,
};
use rigidity::spectrum::SpectralSummary;
use rigidity::{
    algebraic_connectivity, build_graph, diameter, laplacian, sym_eigenvalues,
    vertex_connectivity, Graph, SymmetricMatrix,
};

use crate::{CliError, Suite, VerifyArgs};

struct Report {
    failures: usize,
    checks: usize,
}

impl Report {
    fn new() -> Self {
        Report {
            failures: 0,
            checks: 0,
        }
    }

    fn record(&mut self, name: &str, ok: bool, detail: &str) {
        self.checks += 1;
        if ok {
            println!("ok   {name}");
        } else {
            self.failures += 1;
            println!("FAIL {name}: {detail}");
        }
    }

    fn check(&mut self, name: &str, result: Result<(), String>) {
        match result {
            Ok(()) => self.record(name, true, ""),
            Err(detail) => self.record(name, false, &detail),
        }
    }
}

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    // a user-supplied graph is validated first: parse errors exit 2
    let extra = match &args.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            let g = rigidity::io::graph_from_str(&text)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            if !g.is_connected() {
                return Err(CliError::Precondition(
                    "supplied graph is disconnected".into(),
                ));
            }
            Some(g)
        }
        None => None,
    };

    let mut report = Report::new();
    if matches!(args.suite, Suite::Spectra | Suite::All) {
        spectra_suite(&mut report);
    }
    if matches!(args.suite, Suite::Bounds | Suite::All) {
        bounds_suite(&mut report, args.seed, extra.as_ref());
    }
    if matches!(args.suite, Suite::Rigidity | Suite::All) {
        rigidity_suite(&mut report, args.seed, extra.as_ref());
    }

    println!(
        "{} checks, {} failures",
        report.checks, report.failures
    );
    if report.failures > 0 {
        Err(CliError::Verification(format!(
            "{} of {} checks failed",
            report.failures, report.checks
        )))
    } else {
        Ok(())
    }
}

fn laplacian_eigenvalues(g: &Graph) -> Vec<f64> {
    sym_eigenvalues(&SymmetricMatrix::new(laplacian(g)).unwrap()).unwrap()
}

fn spectra_suite(report: &mut Report) {
    report.check("star spectra vs eigensolver (n <= 30)", {
        let mut worst = 0.0f64;
        for n in 4..=30usize {
            for d in 2..=(n - 2).min(6) {
                let closed = star_spectrum(n, d).unwrap();
                let g = generate(&FamilySpec::Star { n, d }).unwrap();
                let numeric =
                    SpectralSummary::from_eigenvalues(laplacian_eigenvalues(&g), 1e-7);
                worst = worst.max(closed.max_deviation(&numeric).unwrap());
            }
        }
        if worst <= 1e-9 {
            Ok(())
        } else {
            Err(format!("max deviation {worst:e}"))
        }
    });

    report.check("turan spectra vs eigensolver (kr <= 30)", {
        let mut worst = 0.0f64;
        for k in 2..=15usize {
            for r in 2..=15usize {
                if k * r > 30 {
                    continue;
                }
                let closed = turan_spectrum(k, r).unwrap();
                let g = generate(&FamilySpec::Turan { k, r }).unwrap();
                let numeric =
                    SpectralSummary::from_eigenvalues(laplacian_eigenvalues(&g), 1e-7);
                worst = worst.max(closed.max_deviation(&numeric).unwrap());
            }
        }
        if worst <= 1e-9 {
            Ok(())
        } else {
            Err(format!("max deviation {worst:e}"))
        }
    });

    report.check("cycle a_1 closed form vs lambda_2 (n <= 48)", {
        let mut worst = 0.0f64;
        for d in 1..=4usize {
            for n in (d + 1)..=48 {
                let g = generate(&FamilySpec::Cycle { n, d }).unwrap();
                let lam2 = laplacian_eigenvalues(&g)[1];
                worst = worst.max((cycle_a1(n, d).unwrap() - lam2).abs());
            }
        }
        if worst <= 1e-9 {
            Ok(())
        } else {
            Err(format!("max deviation {worst:e}"))
        }
    });

    report.check("cycle test vector identities", {
        let mut err: Option<String> = None;
        for n in [3usize, 4, 9, 16, 33] {
            let (u, v, w) = cycle_test_vectors(n);
            let checks = [
                (dot(&u, &u) - 1.0).abs(),
                (dot(&v, &v) - 0.5).abs(),
                (dot(&w, &w) - 1.0).abs(),
                v.iter().sum::<f64>().abs(),
            ];
            if checks.iter().any(|&c| c > 1e-12) {
                err = Some(format!("identity violated at n={n}"));
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("mirror path quadratic form chain", {
        let mut err: Option<String> = None;
        for d in 2..=4usize {
            for n in (d + 1)..=14 {
                let (_, v, w) = cycle_test_vectors(n);
                let lp = laplacian(&generate(&FamilySpec::Path { n, d }).unwrap());
                let lm = laplacian(&mirrored_path(n, d).unwrap());
                let lc = laplacian(&generate(&FamilySpec::Cycle { n: 2 * n, d }).unwrap());
                let path2 = 2.0 * dot(&lp.matvec(&v), &v);
                let mirror = dot(&lm.matvec(&w), &w);
                let cycle = dot(&lc.matvec(&w), &w);
                if (path2 - mirror).abs() > 1e-12 || mirror > cycle + 1e-12 {
                    err = Some(format!("chain broken at n={n} d={d}"));
                }
            }
        }
        err.map_or(Ok(()), Err)
    });
}

fn bounds_suite(report: &mut Report, seed: u64, extra: Option<&Graph>) {
    let corpus = bound_corpus(seed, extra);

    report.check("a_1 <= diameter/vertex-connectivity bound", {
        let mut err: Option<String> = None;
        for (name, g) in &corpus {
            let a1 = algebraic_connectivity(g).unwrap();
            let bound = diameter_vc_bound(g).unwrap();
            if a1 > bound + 1e-9 {
                err = Some(format!("{name}: a1 {a1} > bound {bound}"));
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("diameter bound witness chain", {
        let mut err: Option<String> = None;
        for (name, g) in &corpus {
            let w = diameter_bound_witness(g).unwrap();
            if !w.chain_holds() {
                err = Some(format!("{name}: witness chain broken"));
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("path diameter closed form", {
        let mut err: Option<String> = None;
        for d in 1..=5usize {
            for n in (d + 1)..=40 {
                let g = generate(&FamilySpec::Path { n, d }).unwrap();
                let bfs = diameter(&g).unwrap();
                if bfs != path_diameter(n, d).unwrap() || bfs != max_rigid_diameter(n, d) {
                    err = Some(format!("mismatch at n={n} d={d}"));
                }
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("rigid sample graphs respect the diameter cap", {
        let mut err: Option<String> = None;
        for (name, g) in &corpus {
            for d in [2usize, 3] {
                if g.order() > d && is_generically_rigid(g, d, 2, seed).unwrap() {
                    let delta = diameter(g).unwrap();
                    let cap = max_rigid_diameter(g.order(), d);
                    if delta > cap {
                        err = Some(format!("{name}: diameter {delta} > cap {cap}"));
                    }
                }
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("path vs doubled cycle bound", {
        let mut err: Option<String> = None;
        for d in 2..=4usize {
            for n in (d + 2)..=24 {
                if !path_cycle_bound(n, d).unwrap().satisfied {
                    err = Some(format!("violated at n={n} d={d}"));
                }
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("asymptotic ratio decreases to 1/4", {
        let mut err: Option<String> = None;
        for d in 2..=4usize {
            let mut prev = f64::INFINITY;
            for n in (16..=512usize).step_by(8) {
                let r = asymptotic_ratio(n, d).unwrap();
                if r > prev + 1e-12 {
                    err = Some(format!("not decreasing at n={n} d={d}"));
                }
                prev = r;
            }
            let limit = asymptotic_ratio(500, d).unwrap();
            if (limit - 0.25).abs() > 1e-3 {
                err = Some(format!("limit off at d={d}: {limit}"));
            }
        }
        err.map_or(Ok(()), Err)
    });
}

fn rigidity_suite(report: &mut Report, seed: u64, extra: Option<&Graph>) {
    let corpus = bound_corpus(seed, extra);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51D);

    report.check("stiffness quadratic form identity", {
        let mut err: Option<String> = None;
        for (name, g) in corpus.iter().take(30) {
            let n = g.order();
            let d = 2 + (n % 2);
            let coords: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
            let f = Framework::new(g.clone(), Realization::new(d, coords).unwrap()).unwrap();
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
            if (lhs - rhs).abs() > 1e-10 * rhs.abs().max(1.0) {
                err = Some(format!("{name}: {lhs} vs {rhs}"));
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("trivial motions lie in the rigidity null space", {
        let mut err: Option<String> = None;
        for (name, g) in corpus.iter().take(30) {
            let n = g.order();
            let d = 2 + (n % 2);
            let coords: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
            let f = Framework::new(g.clone(), Realization::new(d, coords).unwrap()).unwrap();
            let r = rigidity_matrix(&f);
            let scale = r.max_abs().max(1.0);
            for t in trivial_motion_basis(f.realization()) {
                if norm(&r.matvec(&t)) > 1e-9 * scale * norm(&t) {
                    err = Some(format!("{name}: residual too large"));
                }
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("one-dimensional stiffness equals the Laplacian", {
        let mut err: Option<String> = None;
        for (name, g) in corpus.iter().take(10) {
            let n = g.order();
            let coords: Vec<f64> = (0..n).map(|i| i as f64 + 0.3 * rng.gen::<f64>()).collect();
            let f = Framework::new(g.clone(), Realization::new(1, coords).unwrap()).unwrap();
            let s = stiffness_matrix(&f);
            let l = laplacian(g);
            for i in 0..n {
                for j in 0..n {
                    if s[(i, j)] != l[(i, j)] {
                        err = Some(format!("{name}: entry ({i},{j}) differs"));
                    }
                }
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("K2 rigidity eigenvalue is exactly 2", {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let mut err: Option<String> = None;
        for d in 2..=4usize {
            let coords: Vec<f64> = (0..2 * d).map(|_| rng.gen::<f64>()).collect();
            let f = Framework::new(g.clone(), Realization::new(d, coords).unwrap()).unwrap();
            let v = rigidity_eigenvalue(&f).unwrap();
            if (v - 2.0).abs() > 1e-9 {
                err = Some(format!("d={d}: {v}"));
            }
        }
        err.map_or(Ok(()), Err)
    });

    report.check("generic rigidity implies d-connectivity", {
        let mut err: Option<String> = None;
        for (name, g) in &corpus {
            for d in [2usize, 3] {
                if g.order() > d
                    && is_generically_rigid(g, d, 2, seed).unwrap()
                    && vertex_connectivity(g).unwrap() < d
                {
                    err = Some(format!("{name}: rigid but kappa < {d}"));
                }
            }
        }
        err.map_or(Ok(()), Err)
    });
}

/// Family instances plus seeded random connected graphs; the user graph
/// is appended when supplied.
fn bound_corpus(seed: u64, extra: Option<&Graph>) -> Vec<(String, Graph)> {
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in 2..=12usize {
        corpus.push((
            format!("complete:{n}"),
            generate(&FamilySpec::Complete { n }).unwrap(),
        ));
    }
    for d in 1..=3usize {
        for n in [d + 1, d + 4, d + 9, d + 14] {
            corpus.push((
                format!("path:{n},{d}"),
                generate(&FamilySpec::Path { n, d }).unwrap(),
            ));
            corpus.push((
                format!("cycle:{n},{d}"),
                generate(&FamilySpec::Cycle { n, d }).unwrap(),
            ));
        }
    }
    for d in 2..=3usize {
        for n in [d + 2, d + 5, d + 10] {
            corpus.push((
                format!("star:{n},{d}"),
                generate(&FamilySpec::Star { n, d }).unwrap(),
            ));
        }
    }
    for (k, r) in [(2, 3), (3, 3), (2, 4), (4, 2)] {
        corpus.push((
            format!("turan:{k},{r}"),
            generate(&FamilySpec::Turan { k, r }).unwrap(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xB0);
    let mut added = 0;
    while added < 25 {
        let n = rng.gen_range(3..=14usize);
        let p = rng.gen_range(0.25..0.75f64);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        let g = build_graph(n, &edges).unwrap();
        if g.is_connected() {
            corpus.push((format!("random-{added}"), g));
            added += 1;
        }
    }
    if let Some(g) = extra {
        corpus.push(("supplied".into(), g.clone()));
    }
    corpus
}
