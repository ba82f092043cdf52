//! Frameworks, rigidity and stiffness matrices, the trivial-motion
//! subspace, the rigidity eigenvalue, and infinitesimal/generic rigidity
//! tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::matrix::{dot, kron, norm, Matrix};
use crate::spectral::{
    affine_dimension, numeric_rank, sym_eigen, SymmetricMatrix, RANK_TOL,
};

/// Distance below which two points are treated as coincident; the bearing
/// of a coincident pair is the zero vector.
pub const COINCIDENCE_TOL: f64 = 1e-12;

/// An assignment of n points in R^d, point i belonging to vertex i.
/// Coordinates are stored flat, d entries per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    dim: usize,
    coords: Vec<f64>,
}

impl Realization {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("ambient dimension must be >= 1".into()));
        }
        if coords.is_empty() || !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch(format!(
                "coordinate count {} is not a positive multiple of d={dim}",
                coords.len()
            )));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Realization { dim, coords })
    }

    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointList);
        }
        let dim = points[0].len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch("points have differing dimensions".into()));
        }
        Realization::new(dim, points.concat())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one point
    }

    /// Coordinates of vertex i (1-based).
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[(i - 1) * self.dim..i * self.dim]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn points(&self) -> Vec<Vec<f64>> {
        (1..=self.len()).map(|i| self.point(i).to_vec()).collect()
    }

    /// Smallest pairwise distance.
    pub fn min_pair_distance(&self) -> f64 {
        let n = self.len();
        let mut best = f64::INFINITY;
        for i in 1..=n {
            for j in (i + 1)..=n {
                let d2: f64 = self
                    .point(i)
                    .iter()
                    .zip(self.point(j))
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                best = best.min(d2.sqrt());
            }
        }
        best
    }

    /// Injectivity is a queryable property, not an invariant: coincident
    /// points are legal and yield zero bearings.
    pub fn is_injective(&self) -> bool {
        let scale = self.coords.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        self.len() < 2 || self.min_pair_distance() > 1e-9 * scale
    }

    /// Affine dimension of the point set (rank of the centered coordinates).
    pub fn affine_dim(&self) -> usize {
        affine_dimension(&self.points()).expect("realization is non-empty and finite")
    }
}

/// A graph together with a realization of its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Framework {
    graph: Graph,
    realization: Realization,
}

impl Framework {
    pub fn new(graph: Graph, realization: Realization) -> Result<Self> {
        if graph.order() != realization.len() {
            return Err(Error::PointCountMismatch {
                points: realization.len(),
                vertices: graph.order(),
            });
        }
        Ok(Framework { graph, realization })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn dim(&self) -> usize {
        self.realization.dim()
    }
}

/// Unit bearing vector from p_j to p_i; exactly zero when the points are
/// within [`COINCIDENCE_TOL`] of each other.
pub fn bearing(f: &Framework, i: usize, j: usize) -> Result<Vec<f64>> {
    if i == j {
        return Err(Error::SameVertex(i));
    }
    let n = f.graph.order();
    for v in [i, j] {
        if v < 1 || v > n {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    let pi = f.realization.point(i);
    let pj = f.realization.point(j);
    let diff: Vec<f64> = pi.iter().zip(pj).map(|(a, b)| a - b).collect();
    let len = norm(&diff);
    if len <= COINCIDENCE_TOL {
        return Ok(vec![0.0; f.dim()]);
    }
    Ok(diff.iter().map(|x| x / len).collect())
}

/// Rigidity matrix: one row per edge in lexicographic order; the row of
/// edge {i, j} (i < j) carries the bearing in block i and its negation in
/// block j.
pub fn rigidity_matrix(f: &Framework) -> Matrix {
    let d = f.dim();
    let n = f.graph.order();
    let mut r = Matrix::zeros(f.graph.edge_count(), d * n);
    for (row, &(i, j)) in f.graph.edges().iter().enumerate() {
        let b = bearing(f, i, j).expect("edges join distinct in-range vertices");
        for k in 0..d {
            r[(row, (i - 1) * d + k)] = b[k];
            r[(row, (j - 1) * d + k)] = -b[k];
        }
    }
    r
}

/// Stiffness matrix S = RᵀR, positive semidefinite.
pub fn stiffness_matrix(f: &Framework) -> SymmetricMatrix {
    SymmetricMatrix::new(rigidity_matrix(f).gram()).expect("Gram matrix is exactly symmetric")
}

/// Dimension of the trivial-motion subspace from the closed formula
/// D(p) = C(d+1,2) - C(d-dim(p),2), with C(a,2) = 0 for a < 2.
pub fn trivial_dim(p: &Realization) -> usize {
    let choose2 = |a: usize| if a >= 2 { a * (a - 1) / 2 } else { 0 };
    let d = p.dim();
    choose2(d + 1) - choose2(d - p.affine_dim())
}

/// Orthonormal basis of the trivial-motion subspace: the d infinitesimal
/// translations 1_n ⊗ e_k plus the C(d,2) infinitesimal rotations
/// (I_n ⊗ A_kl) p, orthonormalized with near-zero residuals dropped.
pub fn trivial_motion_basis(p: &Realization) -> Vec<Vec<f64>> {
    let d = p.dim();
    let n = p.len();
    let mut generators: Vec<Vec<f64>> = Vec::new();
    for k in 0..d {
        let mut t = vec![0.0; d * n];
        for i in 0..n {
            t[i * d + k] = 1.0;
        }
        generators.push(t);
    }
    for k in 0..d {
        for l in (k + 1)..d {
            // A_kl = e_k e_l^T - e_l e_k^T applied to each point
            let mut r = vec![0.0; d * n];
            for i in 1..=n {
                let pi = p.point(i);
                r[(i - 1) * d + k] = pi[l];
                r[(i - 1) * d + l] = -pi[k];
            }
            generators.push(r);
        }
    }

    // modified Gram-Schmidt; generators scale with the realization, so the
    // drop threshold is relative to the largest generator norm
    let scale = generators.iter().map(|g| norm(g)).fold(1.0, f64::max);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for mut g in generators {
        for b in &basis {
            let c = dot(&g, b);
            for (x, y) in g.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
        let len = norm(&g);
        if len > 1e-8 * scale {
            for x in &mut g {
                *x /= len;
            }
            basis.push(g);
        }
    }
    basis
}

/// Diagnostic record for one framework: trivial-motion dimension, the
/// rigidity eigenvalue, the rank route, and agreement flags.
#[derive(Debug, Clone)]
pub struct RigidityReport {
    pub trivial_dim: usize,
    pub rigidity_eigenvalue: f64,
    pub stiffness_rank: usize,
    pub is_inf_rigid: bool,
    /// Largest stiffness eigenvalue, the scale for the zero test.
    pub lambda_max: f64,
    /// True when eigenvalues 1..D(p) all sit below the rank tolerance;
    /// false indicates tolerance breakdown rather than an error.
    pub trivial_kernel_clean: bool,
    /// True when the rank route and the eigenvalue route agree.
    pub routes_agree: bool,
    pub rank_tolerance: f64,
}

/// Full rigidity diagnostics. The rank of the rigidity matrix is the
/// primary rigidity decision; the rigidity eigenvalue provides the
/// cross-check.
pub fn rigidity_report(f: &Framework) -> Result<RigidityReport> {
    let d = f.dim();
    let n = f.graph().order();
    let dp = trivial_dim(f.realization());
    let r = rigidity_matrix(f);
    let s = SymmetricMatrix::new(r.gram()).expect("Gram matrix is exactly symmetric");
    let eigen = sym_eigen(&s)?;
    let lambda_max = eigen.eigenvalues.last().copied().unwrap_or(0.0);
    let zero_tol = RANK_TOL * lambda_max.max(1.0);
    let trivial_kernel_clean = eigen.eigenvalues[..dp].iter().all(|&x| x.abs() <= zero_tol);
    let rig_eig = eigen.eigenvalues[dp];
    let rank = numeric_rank(&r, RANK_TOL)?;
    let rigid_by_rank = rank == d * n - dp;
    let rigid_by_eig = rig_eig > zero_tol;
    Ok(RigidityReport {
        trivial_dim: dp,
        rigidity_eigenvalue: rig_eig,
        stiffness_rank: rank,
        is_inf_rigid: rigid_by_rank,
        lambda_max,
        trivial_kernel_clean,
        routes_agree: rigid_by_rank == rigid_by_eig,
        rank_tolerance: RANK_TOL,
    })
}

/// The (D(p)+1)-th smallest stiffness eigenvalue, 1-based; positive
/// exactly when the framework is infinitesimally rigid.
pub fn rigidity_eigenvalue(f: &Framework) -> Result<f64> {
    let dp = trivial_dim(f.realization());
    let s = stiffness_matrix(f);
    let eigen = sym_eigen(&s)?;
    Ok(eigen.eigenvalues[dp])
}

/// Rank test: the framework is infinitesimally rigid iff
/// rank(R) = d·n - D(p).
pub fn is_infinitesimally_rigid(f: &Framework) -> Result<bool> {
    Ok(rigidity_report(f)?.is_inf_rigid)
}

/// Sample realizations with coordinates uniform in [0,1]^d and report
/// whether any of them is infinitesimally rigid. A single generic sample
/// decides in exact arithmetic; extra trials guard against near-degenerate
/// draws. Trial t draws from stream t of the seeded generator.
pub fn is_generically_rigid(g: &Graph, d: usize, trials: usize, seed: u64) -> Result<bool> {
    if d == 0 || trials == 0 {
        return Err(Error::DimensionMismatch(
            "generic rigidity needs d >= 1 and trials >= 1".into(),
        ));
    }
    let n = g.order();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let coords: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
        let p = Realization::new(d, coords)?;
        let f = Framework::new(g.clone(), p)?;
        if is_infinitesimally_rigid(&f)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// L(G) ⊗ wwᵀ for a unit vector w. Its spectrum is the Laplacian spectrum
/// with the zero eigenvalue's multiplicity raised to (d-1)n + 1.
pub fn augmented_laplacian(g: &Graph, w: &[f64]) -> Result<SymmetricMatrix> {
    let len = norm(w);
    if (len - 1.0).abs() > 1e-10 {
        return Err(Error::NonUnitVector(len));
    }
    let d = w.len();
    let wwt = Matrix::from_fn(d, d, |i, j| w[i] * w[j]);
    SymmetricMatrix::new(kron(&laplacian(g), &wwt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::spectral::sym_eigenvalues;

    fn framework(spec: FamilySpec, pts: &[Vec<f64>]) -> Framework {
        let g = generate(&spec).unwrap();
        Framework::new(g, Realization::from_points(pts).unwrap()).unwrap()
    }

    fn equilateral_triangle() -> Vec<Vec<f64>> {
        vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.5, 3.0_f64.sqrt() / 2.0],
        ]
    }

    #[test]
    fn bearing_basics() {
        let f = framework(
            FamilySpec::Complete { n: 2 },
            &[vec![0.0, 0.0], vec![1.0, 0.0]],
        );
        assert_eq!(bearing(&f, 1, 2).unwrap(), vec![-1.0, 0.0]);
        assert_eq!(bearing(&f, 2, 1).unwrap(), vec![1.0, 0.0]);
        assert!(bearing(&f, 1, 1).is_err());

        let coincident = framework(
            FamilySpec::Complete { n: 2 },
            &[vec![0.5, 0.5], vec![0.5, 0.5]],
        );
        assert_eq!(bearing(&coincident, 1, 2).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn rigidity_matrix_k2() {
        let f = framework(
            FamilySpec::Complete { n: 2 },
            &[vec![0.0, 0.0], vec![1.0, 0.0]],
        );
        let r = rigidity_matrix(&f);
        assert_eq!(r.rows(), 1);
        assert_eq!(r.row(0), &[-1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn translations_are_in_the_null_space() {
        let f = framework(FamilySpec::Star { n: 5, d: 2 }, &random_points(5, 2, 3));
        let r = rigidity_matrix(&f);
        for k in 0..2 {
            let mut t = vec![0.0; 10];
            for i in 0..5 {
                t[i * 2 + k] = 1.0;
            }
            let rt = r.matvec(&t);
            assert!(norm(&rt) < 1e-12);
        }
    }

    #[test]
    fn k4_generic_rank_in_the_plane() {
        let f = framework(FamilySpec::Complete { n: 4 }, &random_points(4, 2, 7));
        let r = rigidity_matrix(&f);
        assert_eq!(numeric_rank(&r, RANK_TOL).unwrap(), 5);
    }

    fn random_points(n: usize, d: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| (0..d).map(|_| rng.gen::<f64>()).collect())
            .collect()
    }

    #[test]
    fn stiffness_of_k2_matches_augmented_laplacian() {
        for d in [2usize, 3] {
            let mut p1 = vec![0.0; d];
            let mut p2 = vec![0.0; d];
            p1[0] = 0.3;
            p2[0] = 1.7;
            p2[d - 1] += 0.4;
            let f = framework(FamilySpec::Complete { n: 2 }, &[p1, p2]);
            let s = stiffness_matrix(&f);
            let evals = sym_eigenvalues(&s).unwrap();
            // spectrum {0^(2d-1), 2^(1)}
            for &e in &evals[..2 * d - 1] {
                assert!(e.abs() < 1e-12);
            }
            assert!((evals[2 * d - 1] - 2.0).abs() < 1e-12);

            let b = bearing(&f, 1, 2).unwrap();
            let aug = augmented_laplacian(f.graph(), &b).unwrap();
            for i in 0..2 * d {
                for j in 0..2 * d {
                    assert!((s[(i, j)] - aug[(i, j)]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn stiffness_trace_counts_edges() {
        let f = framework(FamilySpec::Path { n: 6, d: 2 }, &random_points(6, 2, 11));
        let s = stiffness_matrix(&f);
        let trace: f64 = (0..12).map(|i| s[(i, i)]).sum();
        assert!((trace - 2.0 * f.graph().edge_count() as f64).abs() < 1e-12);
    }

    #[test]
    fn stiffness_quadratic_form_identity() {
        let f = framework(FamilySpec::Cycle { n: 6, d: 2 }, &random_points(6, 2, 13));
        let s = stiffness_matrix(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let u: Vec<f64> = (0..12).map(|_| rng.gen::<f64>() - 0.5).collect();
            let lhs = s.quadratic_form(&u);
            let mut rhs = 0.0;
            for &(i, j) in f.graph().edges() {
                let b = bearing(&f, i, j).unwrap();
                let du: Vec<f64> = (0..2).map(|k| u[(i - 1) * 2 + k] - u[(j - 1) * 2 + k]).collect();
                rhs += dot(&du, &b).powi(2);
            }
            assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn trivial_dim_formula_cases() {
        // generic planar realization: D = 3
        let p = Realization::from_points(&random_points(5, 2, 17)).unwrap();
        assert_eq!(trivial_dim(&p), 3);

        // three collinear points in R^3: dim(p) = 1, D = 6 - 1 = 5
        let collinear = Realization::from_points(&[
            vec![0.0, 0.0, 0.0],
            vec![1.0, 1.0, 1.0],
            vec![2.0, 2.0, 2.0],
        ])
        .unwrap();
        assert_eq!(trivial_dim(&collinear), 5);

        // single point: translations only
        for d in 1..=4 {
            let p = Realization::new(d, vec![0.25; d]).unwrap();
            assert_eq!(trivial_dim(&p), d);
        }
    }

    #[test]
    fn trivial_basis_size_and_null_space() {
        // n=1, d=2: rotations vanish, two translations remain
        let single = Realization::new(2, vec![0.4, -0.2]).unwrap();
        assert_eq!(trivial_motion_basis(&single).len(), 2);

        // collinear K2 in R^3: D = 5
        let collinear = Realization::from_points(&[vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]]).unwrap();
        assert_eq!(trivial_motion_basis(&collinear).len(), 5);
        assert_eq!(trivial_dim(&collinear), 5);

        // basis vectors are orthonormal and lie in N(R)
        let pts = random_points(6, 3, 23);
        let f = framework(FamilySpec::Path { n: 6, d: 3 }, &pts);
        let basis = trivial_motion_basis(f.realization());
        assert_eq!(basis.len(), trivial_dim(f.realization()));
        let r = rigidity_matrix(&f);
        let rnorm = r.max_abs();
        for (a, t) in basis.iter().enumerate() {
            assert!((norm(t) - 1.0).abs() < 1e-12);
            for b in &basis[..a] {
                assert!(dot(t, b).abs() < 1e-10);
            }
            assert!(norm(&r.matvec(t)) <= 1e-9 * rnorm.max(1.0));
        }
    }

    #[test]
    fn rigidity_eigenvalue_examples() {
        // K2 in R^3: value 2 at any injective realization
        let f = framework(
            FamilySpec::Complete { n: 2 },
            &[vec![0.1, 0.2, 0.3], vec![0.9, -0.4, 0.5]],
        );
        assert!((rigidity_eigenvalue(&f).unwrap() - 2.0).abs() < 1e-12);

        // equilateral K3: spectrum {0,0,0,1.5,1.5,3}
        let f = framework(FamilySpec::Complete { n: 3 }, &equilateral_triangle());
        let evals = sym_eigenvalues(&stiffness_matrix(&f)).unwrap();
        let expect = [0.0, 0.0, 0.0, 1.5, 1.5, 3.0];
        for (a, b) in evals.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{evals:?}");
        }
        assert!((rigidity_eigenvalue(&f).unwrap() - 1.5).abs() < 1e-12);

        // flexible path framework: eigenvalue at noise level
        let f = framework(FamilySpec::Path { n: 4, d: 1 }, &random_points(4, 2, 29));
        assert!(rigidity_eigenvalue(&f).unwrap() <= RANK_TOL);
    }

    #[test]
    fn infinitesimal_rigidity_cases() {
        let f = framework(FamilySpec::Complete { n: 3 }, &equilateral_triangle());
        assert!(is_infinitesimally_rigid(&f).unwrap());

        let f = framework(FamilySpec::Path { n: 5, d: 1 }, &random_points(5, 2, 31));
        assert!(!is_infinitesimally_rigid(&f).unwrap());

        // degenerate realization: four collinear points kill K4 rigidity
        let collinear: Vec<Vec<f64>> = (0..4).map(|i| vec![i as f64, 2.0 * i as f64]).collect();
        let f = framework(FamilySpec::Complete { n: 4 }, &collinear);
        assert!(!is_infinitesimally_rigid(&f).unwrap());

        let report = rigidity_report(&f).unwrap();
        assert!(report.trivial_kernel_clean);
        assert!(report.routes_agree);
    }

    #[test]
    fn generic_rigidity_cases() {
        for d in 1..=3usize {
            let g = generate(&FamilySpec::Complete { n: d + 1 }).unwrap();
            assert!(is_generically_rigid(&g, d, 3, 7).unwrap());
        }
        let p = generate(&FamilySpec::Path { n: 8, d: 2 }).unwrap();
        assert!(is_generically_rigid(&p, 2, 3, 7).unwrap());

        for n in [3usize, 5, 8] {
            let p = generate(&FamilySpec::Path { n, d: 1 }).unwrap();
            assert!(!is_generically_rigid(&p, 2, 3, 7).unwrap());
        }
    }

    #[test]
    fn augmented_laplacian_spectrum() {
        let g = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        let aug = augmented_laplacian(&g, &[1.0, 0.0]).unwrap();
        let evals = sym_eigenvalues(&aug).unwrap();
        for &e in &evals[..3] {
            assert!(e.abs() < 1e-12);
        }
        assert!((evals[3] - 2.0).abs() < 1e-12);

        assert!(augmented_laplacian(&g, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn quad_form_bounded_by_augmented_laplacian() {
        let g = generate(&FamilySpec::Star { n: 6, d: 2 }).unwrap();
        let pts = random_points(6, 2, 37);
        let f = Framework::new(g.clone(), Realization::from_points(&pts).unwrap()).unwrap();
        let s = stiffness_matrix(&f);
        let w = [0.6, 0.8];
        let aug = augmented_laplacian(&g, &w).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let x: Vec<f64> = (0..6).map(|_| rng.gen::<f64>() - 0.5).collect();
            let u: Vec<f64> = x.iter().flat_map(|&xi| w.iter().map(move |&wk| xi * wk)).collect();
            assert!(s.quadratic_form(&u) <= aug.quadratic_form(&u) + 1e-12);
        }

        // collinear framework with all bearings = ±w: equality
        let col: Vec<Vec<f64>> = (0..6).map(|i| vec![0.6 * i as f64, 0.8 * i as f64]).collect();
        let fc = Framework::new(g.clone(), Realization::from_points(&col).unwrap()).unwrap();
        let sc = stiffness_matrix(&fc);
        for _ in 0..5 {
            let x: Vec<f64> = (0..6).map(|_| rng.gen::<f64>() - 0.5).collect();
            let u: Vec<f64> = x.iter().flat_map(|&xi| w.iter().map(move |&wk| xi * wk)).collect();
            let a = sc.quadratic_form(&u);
            let b = aug.quadratic_form(&u);
            assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0));
        }
    }

    #[test]
    fn stiffness_is_scale_and_translation_invariant() {
        let pts = random_points(5, 2, 43);
        let f = framework(FamilySpec::Cycle { n: 5, d: 2 }, &pts);
        let s = stiffness_matrix(&f);
        let moved: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| vec![3.5 * p[0] - 2.0, 3.5 * p[1] + 7.0])
            .collect();
        let fm = framework(FamilySpec::Cycle { n: 5, d: 2 }, &moved);
        let sm = stiffness_matrix(&fm);
        for i in 0..10 {
            for j in 0..10 {
                assert!((s[(i, j)] - sm[(i, j)]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn one_dimensional_stiffness_is_the_laplacian() {
        let g = generate(&FamilySpec::Star { n: 6, d: 2 }).unwrap();
        let coords: Vec<f64> = vec![0.9, 0.1, 0.5, 0.3, 0.7, 0.2];
        let f = Framework::new(g.clone(), Realization::new(1, coords).unwrap()).unwrap();
        let s = stiffness_matrix(&f);
        let l = laplacian(&g);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(s[(i, j)], l[(i, j)]);
            }
        }
    }

    #[test]
    fn framework_requires_matching_point_count() {
        let g = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let p = Realization::from_points(&[vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(
            Framework::new(g, p),
            Err(Error::PointCountMismatch { .. })
        ));
    }
}
