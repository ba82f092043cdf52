//! Generalized algebraic connectivity: exact a_1 from the Laplacian,
//! lower-bound estimation of a_d by maximizing the rigidity eigenvalue
//! over realizations, the d-rigidity ratio, and the registry of known
//! exact values and bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{laplacian, Graph};
use crate::rigidity::{rigidity_eigenvalue, Framework, Realization};
use crate::spectral::{sym_eigen, SymmetricMatrix};

/// Second-smallest Laplacian eigenvalue; ~0 for disconnected graphs.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            n: g.order(),
            min: 2,
        });
    }
    let eigen = sym_eigen(&SymmetricMatrix::new(laplacian(g))?)?;
    Ok(eigen.eigenvalues[1])
}

/// Settings for the multi-start stochastic hill climb. All fields surface
/// as CLI flags.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    /// Initial perturbation scale on the normalized realization.
    pub step_init: f64,
    /// Multiplier applied to the step after a rejected move; accepted
    /// moves grow the step by the inverse schedule.
    pub step_decay: f64,
    /// Candidate realizations with a smaller minimum pairwise distance
    /// are rejected; keeps the search inside the injective domain.
    pub injectivity_floor: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 16,
            iterations: 400,
            seed: 0,
            step_init: 0.5,
            step_decay: 0.8,
            injectivity_floor: 1e-6,
        }
    }
}

const STEP_GROW: f64 = 1.6;
const STEP_MAX: f64 = 2.0;
const STEP_MIN: f64 = 1e-7;
const STALL_RESET: usize = 80;

/// Standard normal draw via Box-Muller.
fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
/// Fraction of each restart's budget spent on the deterministic
/// coordinate polish that follows the stochastic phase.
const POLISH_FRACTION: f64 = 0.5;

/// One improvement event in the optimizer trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub restart: usize,
    pub iteration: usize,
    pub value: f64,
}

/// Result of a_d estimation: the best rigidity eigenvalue found (a sound
/// lower bound on a_d), the realization achieving it, and the a_1 upper
/// bound.
#[derive(Debug, Clone)]
pub struct GacEstimate {
    pub d: usize,
    pub value: f64,
    pub best_realization: Realization,
    pub upper_bound: f64,
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    pub trace: Vec<TracePoint>,
}

/// Center the points and scale to unit root-mean-square norm. Valid
/// because the stiffness matrix is translation and scale invariant.
fn normalize(p: &mut [f64], n: usize, d: usize) {
    for k in 0..d {
        let mean: f64 = (0..n).map(|i| p[i * d + k]).sum::<f64>() / n as f64;
        for i in 0..n {
            p[i * d + k] -= mean;
        }
    }
    let rms = (p.iter().map(|x| x * x).sum::<f64>() / n as f64).sqrt();
    if rms > 0.0 {
        for x in p.iter_mut() {
            *x /= rms;
        }
    }
}

fn min_pair_distance(p: &[f64], n: usize, d: usize) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut s = 0.0;
            for k in 0..d {
                let diff = p[i * d + k] - p[j * d + k];
                s += diff * diff;
            }
            best = best.min(s.sqrt());
        }
    }
    best
}

/// Vertices on the unit circle (first two axes), with small deterministic
/// harmonics on the remaining axes so the point set spans R^d.
fn circle_start(n: usize, d: usize) -> Vec<f64> {
    let mut p = vec![0.0; n * d];
    for i in 0..n {
        let ang = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        if d == 1 {
            p[i] = i as f64;
        } else {
            p[i * d] = ang.cos();
            p[i * d + 1] = ang.sin();
            for k in 2..d {
                p[i * d + k] = 0.1 * ((k + 1) as f64 * ang + 0.3).cos();
            }
        }
    }
    normalize(&mut p, n, d);
    p
}

/// Spectral layout: coordinates from d Laplacian eigenvectors, either the
/// lowest nontrivial ones (classic layout) or the topmost ones, plus a
/// deterministic jitter that restores injectivity when the embedding
/// collapses vertices.
fn spectral_start(g: &Graph, d: usize, top: bool) -> Result<Vec<f64>> {
    let n = g.order();
    let eigen = sym_eigen(&SymmetricMatrix::new(laplacian(g))?)?;
    let mut p = vec![0.0; n * d];
    for k in 0..d {
        let col = if top {
            if k < n {
                Some(n - 1 - k)
            } else {
                None
            }
        } else if 1 + k < n {
            Some(1 + k)
        } else {
            None
        };
        if let Some(c) = col {
            for i in 0..n {
                p[i * d + k] = eigen.eigenvectors[(i, c)];
            }
        }
    }
    normalize(&mut p, n, d);
    let eps = 1e-4;
    for i in 0..n {
        for k in 0..d {
            let phase =
                2.0 * std::f64::consts::PI * (i * (k + 2) + k) as f64 / n as f64 + 0.7 * (k + 1) as f64;
            p[i * d + k] += eps * phase.cos();
        }
    }
    normalize(&mut p, n, d);
    Ok(p)
}

struct Objective<'a> {
    graph: &'a Graph,
    d: usize,
    floor: f64,
}

impl Objective<'_> {
    /// Rigidity eigenvalue at the normalized candidate, or None when the
    /// candidate violates the injectivity floor.
    fn eval(&self, coords: &[f64]) -> Result<Option<f64>> {
        let n = self.graph.order();
        if min_pair_distance(coords, n, self.d) < self.floor {
            return Ok(None);
        }
        let p = Realization::new(self.d, coords.to_vec())?;
        let f = Framework::new(self.graph.clone(), p)?;
        Ok(Some(rigidity_eigenvalue(&f)?))
    }
}

/// Multi-start maximization of the rigidity eigenvalue over normalized
/// injective realizations. Restart 0 starts from the circle layout,
/// restarts 1 and 2 from the top and bottom spectral layouts, the rest
/// from uniform random points; each restart runs a stochastic
/// coordinate-wise hill climb with an adaptive shrinking step, then a
/// deterministic coordinate pattern polish. Restart r draws from stream r
/// of the seeded generator, so results are reproducible and restart order
/// independent.
pub fn estimate_gac(g: &Graph, d: usize, config: &OptimizerConfig) -> Result<GacEstimate> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if d == 0 {
        return Err(Error::DimensionMismatch("d must be >= 1".into()));
    }
    let objective = Objective {
        graph: g,
        d,
        floor: config.injectivity_floor,
    };
    let polish_budget = (config.iterations as f64 * POLISH_FRACTION) as usize;
    let stochastic_budget = config.iterations.saturating_sub(polish_budget);

    let mut best_val = f64::NEG_INFINITY;
    let mut best_coords: Option<Vec<f64>> = None;
    let mut trace: Vec<TracePoint> = Vec::new();

    for restart in 0..config.restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(restart as u64);

        let mut coords = match restart {
            0 => circle_start(n, d),
            1 => spectral_start(g, d, true)?,
            2 => spectral_start(g, d, false)?,
            _ => {
                let mut c: Vec<f64> = (0..n * d).map(|_| rng.gen::<f64>()).collect();
                normalize(&mut c, n, d);
                let mut tries = 0;
                while min_pair_distance(&c, n, d) < config.injectivity_floor && tries < 100 {
                    c = (0..n * d).map(|_| rng.gen::<f64>()).collect();
                    normalize(&mut c, n, d);
                    tries += 1;
                }
                c
            }
        };
        let Some(mut val) = objective.eval(&coords)? else {
            continue;
        };
        if val > best_val {
            best_val = val;
            best_coords = Some(coords.clone());
            trace.push(TracePoint {
                restart,
                iteration: 0,
                value: val,
            });
        }

        // stochastic phase: single-coordinate moves with occasional
        // full-vector kicks, step adapting to acceptance
        let mut step = config.step_init;
        let mut stall = 0usize;
        for iteration in 0..stochastic_budget {
            let mut cand = coords.clone();
            if rng.gen::<f64>() < 0.25 {
                for x in cand.iter_mut() {
                    *x += step * standard_normal(&mut rng);
                }
            } else {
                let idx = rng.gen_range(0..n * d);
                cand[idx] += step * standard_normal(&mut rng);
            }
            normalize(&mut cand, n, d);
            let accepted = match objective.eval(&cand)? {
                Some(w) if w > val => {
                    val = w;
                    coords = cand;
                    true
                }
                _ => false,
            };
            if accepted {
                step = (step * STEP_GROW).min(STEP_MAX);
                stall = 0;
                if val > best_val {
                    best_val = val;
                    best_coords = Some(coords.clone());
                    trace.push(TracePoint {
                        restart,
                        iteration: iteration + 1,
                        value: val,
                    });
                }
            } else {
                step = (step * config.step_decay).max(STEP_MIN);
                stall += 1;
                if stall >= STALL_RESET {
                    step = config.step_init;
                    stall = 0;
                }
            }
        }

        // deterministic polish: signed coordinate sweeps with halving step
        let mut step = 0.05;
        let mut evals = 0usize;
        while evals < polish_budget && step > 1e-9 {
            let mut improved = false;
            'sweep: for idx in 0..n * d {
                for sign in [1.0, -1.0] {
                    if evals >= polish_budget {
                        break 'sweep;
                    }
                    let mut cand = coords.clone();
                    cand[idx] += sign * step;
                    normalize(&mut cand, n, d);
                    evals += 1;
                    if let Some(w) = objective.eval(&cand)? {
                        if w > val {
                            val = w;
                            coords = cand;
                            improved = true;
                            if val > best_val {
                                best_val = val;
                                best_coords = Some(coords.clone());
                                trace.push(TracePoint {
                                    restart,
                                    iteration: stochastic_budget + evals,
                                    value: val,
                                });
                            }
                            break;
                        }
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
    }

    let coords = best_coords.ok_or_else(|| {
        Error::DimensionMismatch("all restarts violated the injectivity floor".into())
    })?;
    let best_realization = Realization::new(d, coords)?;
    // re-evaluate: the reported value must be the rigidity eigenvalue of
    // the concrete realization we hand back
    let framework = Framework::new(g.clone(), best_realization.clone())?;
    let value = rigidity_eigenvalue(&framework)?;
    let upper_bound = algebraic_connectivity(g)?;

    Ok(GacEstimate {
        d,
        value,
        best_realization,
        upper_bound,
        restarts: config.restarts,
        iterations: config.iterations,
        seed: config.seed,
        trace,
    })
}

/// a_d estimate divided by a_1, in [0, 1] up to estimator tolerance.
pub fn rigidity_ratio(g: &Graph, d: usize, config: &OptimizerConfig) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("rigidity ratio needs a connected graph"));
    }
    let estimate = estimate_gac(g, d, config)?;
    Ok(estimate.value / estimate.upper_bound)
}

/// What the registry knows about a value: pinned exactly, or bracketed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Knowledge {
    Exact(f64),
    Bounds {
        lower: Option<f64>,
        upper: Option<f64>,
    },
}

/// Registry entry for a_d of a named family instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KnownValue {
    pub family: FamilySpec,
    pub d: usize,
    pub knowledge: Knowledge,
    pub source: &'static str,
}

impl KnownValue {
    pub fn lower(&self) -> Option<f64> {
        match self.knowledge {
            Knowledge::Exact(v) => Some(v),
            Knowledge::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> Option<f64> {
        match self.knowledge {
            Knowledge::Exact(v) => Some(v),
            Knowledge::Bounds { upper, .. } => upper,
        }
    }
}

/// Known exact values and bounds for a_d over the named families:
/// complete graphs (exact in the plane, bracketed in higher dimension),
/// generalized stars (exactly 1 in their natural dimension), and the two
/// Turán lower bounds. For d = 1 the exact Laplacian closed forms apply.
pub fn known_gac(spec: &FamilySpec, d: usize) -> Option<KnownValue> {
    let entry = |knowledge, source| {
        Some(KnownValue {
            family: *spec,
            d,
            knowledge,
            source,
        })
    };
    match (*spec, d) {
        (FamilySpec::Complete { n }, 1) if n >= 2 => {
            entry(Knowledge::Exact(n as f64), "a_1(K_n) = n")
        }
        (FamilySpec::Complete { n: 2 }, _) => entry(Knowledge::Exact(2.0), "a_d(K_2) = 2"),
        (FamilySpec::Complete { n }, 2) if n >= 3 => {
            entry(Knowledge::Exact(n as f64 / 2.0), "a_2(K_n) = n/2")
        }
        (FamilySpec::Complete { n }, _) if d >= 3 && n == d + 1 => {
            entry(Knowledge::Exact(1.0), "a_d(K_{d+1}) = 1")
        }
        (FamilySpec::Complete { n }, _) if d >= 3 && n > d => entry(
            Knowledge::Bounds {
                lower: Some(0.5 * (n as f64 / d as f64).ceil()),
                upper: Some(2.0 * n as f64 / (3.0 * (d - 1) as f64) + 1.0 / 3.0),
            },
            "ceil(n/d)/2 <= a_d(K_n) <= 2n/3(d-1) + 1/3",
        ),
        (FamilySpec::Star { d: hubs, .. }, 1) => {
            entry(Knowledge::Exact(hubs as f64), "a_1(S_{n,d}) = d")
        }
        (FamilySpec::Star { n, d: hubs }, _) if hubs == d && (n, d) != (3, 2) => {
            entry(Knowledge::Exact(1.0), "a_d(S_{n,d}) = 1")
        }
        (FamilySpec::Turan { k, r }, 1) => entry(
            Knowledge::Exact((k * (r - 1)) as f64),
            "a_1(T_{kr,r}) = k(r-1)",
        ),
        (FamilySpec::Turan { k, r }, _) if d >= 2 && r == d + 1 => entry(
            Knowledge::Bounds {
                lower: Some(k as f64 / 2.0),
                upper: None,
            },
            "a_d(T_{k(d+1),d+1}) >= k/2",
        ),
        (FamilySpec::Turan { k, r }, _) if d >= 2 && r == 2 * d => entry(
            Knowledge::Bounds {
                lower: Some(k as f64),
                upper: None,
            },
            "a_d(T_{k(2d),2d}) >= k",
        ),
        (FamilySpec::Cycle { n, d: width }, 1) => {
            crate::families::cycle_a1(n, width).ok().and_then(|v| {
                entry(Knowledge::Exact(v), "a_1(C_{n,d}) closed form")
            })
        }
        _ => None,
    }
}

/// Estimate a_d for a family instance, tightening the upper bound with the
/// registry when it pins one.
pub fn estimate_gac_for_family(
    spec: &FamilySpec,
    d: usize,
    config: &OptimizerConfig,
) -> Result<GacEstimate> {
    let g = crate::families::generate(spec)?;
    let mut estimate = estimate_gac(&g, d, config)?;
    if let Some(upper) = known_gac(spec, d).and_then(|k| k.upper()) {
        estimate.upper_bound = estimate.upper_bound.min(upper);
    }
    Ok(estimate)
}
