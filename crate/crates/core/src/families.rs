//! Named graph families and their closed-form spectra. The closed forms
//! double as oracles for the numeric eigensolver and for the bounds module.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::spectrum::SpectralSummary;

/// Parameterized family of connected graphs.
///
/// CLI syntax: `complete:n`, `path:n,d`, `cycle:n,d`, `star:n,d`,
/// `turan:k,r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilySpec {
    Complete { n: usize },
    Path { n: usize, d: usize },
    Cycle { n: usize, d: usize },
    Star { n: usize, d: usize },
    Turan { k: usize, r: usize },
}

impl FamilySpec {
    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete { n } => n,
            FamilySpec::Path { n, .. } => n,
            FamilySpec::Cycle { n, .. } => n,
            FamilySpec::Star { n, .. } => n,
            FamilySpec::Turan { k, r } => k * r,
        }
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::FamilyConstraint(msg));
        match *self {
            FamilySpec::Complete { n } if n < 2 => fail(format!("complete requires n >= 2 (got n={n})")),
            FamilySpec::Path { n, d } if d < 1 => fail(format!("path requires d >= 1 (got d={d}, n={n})")),
            FamilySpec::Path { n, d } if n < d + 1 => {
                fail(format!("path requires n >= d+1 (got n={n}, d={d})"))
            }
            FamilySpec::Cycle { n, d } if d < 1 => fail(format!("cycle requires d >= 1 (got d={d}, n={n})")),
            FamilySpec::Cycle { n, d } if n < d + 1 => {
                fail(format!("cycle requires n >= d+1 (got n={n}, d={d})"))
            }
            FamilySpec::Star { n, d } if d < 2 => fail(format!("star requires d >= 2 (got d={d}, n={n})")),
            FamilySpec::Star { n, d } if n < d + 2 => {
                fail(format!("star requires n >= d+2 (got n={n}, d={d})"))
            }
            FamilySpec::Turan { k, r } if k < 2 || r < 2 => {
                fail(format!("turan requires k >= 2 and r >= 2 (got k={k}, r={r})"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Path { n, d } => write!(f, "path:{n},{d}"),
            FamilySpec::Cycle { n, d } => write!(f, "cycle:{n},{d}"),
            FamilySpec::Star { n, d } => write!(f, "star:{n},{d}"),
            FamilySpec::Turan { k, r } => write!(f, "turan:{k},{r}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected kind:params, got {s:?}")))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid integer {p:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let expect = |count: usize| -> Result<()> {
            if nums.len() == count {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "{kind} expects {count} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind {
            "complete" => {
                expect(1)?;
                FamilySpec::Complete { n: nums[0] }
            }
            "path" => {
                expect(2)?;
                FamilySpec::Path { n: nums[0], d: nums[1] }
            }
            "cycle" => {
                expect(2)?;
                FamilySpec::Cycle { n: nums[0], d: nums[1] }
            }
            "star" => {
                expect(2)?;
                FamilySpec::Star { n: nums[0], d: nums[1] }
            }
            "turan" => {
                expect(2)?;
                FamilySpec::Turan { k: nums[0], r: nums[1] }
            }
            other => return Err(Error::Parse(format!("unknown family kind {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Generate the edge set of the family definition.
///
/// Complete: all pairs. Path P_{n,d}: labels differing by at most d.
/// Cycle C_{n,d}: residues ±1..±d mod n (collapses to K_n when
/// n <= 2d+1). Star S_{n,d}: pairs with an endpoint in 1..=d.
/// Turán T_{kr,r}: pairs in distinct residue classes mod r.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges = Vec::new();
    match *spec {
        FamilySpec::Complete { n } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    edges.push((i, j));
                }
            }
            build_graph(n, &edges)
        }
        FamilySpec::Path { n, d } => {
            for i in 1..=n {
                for j in (i + 1)..=n.min(i + d) {
                    edges.push((i, j));
                }
            }
            build_graph(n, &edges)
        }
        FamilySpec::Cycle { n, d } => {
            for i in 1..=n {
                for k in 1..=d {
                    let j = (i - 1 + k) % n + 1;
                    if i != j {
                        edges.push((i, j));
                    }
                }
            }
            build_graph(n, &edges)
        }
        FamilySpec::Star { n, d } => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if i <= d || j <= d {
                        edges.push((i, j));
                    }
                }
            }
            build_graph(n, &edges)
        }
        FamilySpec::Turan { k, r } => {
            let n = k * r;
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if (j - i) % r != 0 {
                        edges.push((i, j));
                    }
                }
            }
            build_graph(n, &edges)
        }
    }
}

/// Laplacian spectrum of the generalized star S_{n,d}:
/// {0^(1), d^(n-d-1), n^(d)}. Valid for d >= 1, n >= d+2.
pub fn star_spectrum(n: usize, d: usize) -> Result<SpectralSummary> {
    if d < 1 {
        return Err(Error::FamilyConstraint(format!(
            "star spectrum requires d >= 1 (got d={d})"
        )));
    }
    if n < d + 2 {
        return Err(Error::FamilyConstraint(format!(
            "star spectrum requires n >= d+2 (got n={n}, d={d})"
        )));
    }
    Ok(SpectralSummary::from_groups(vec![
        (0.0, 1),
        (d as f64, n - d - 1),
        (n as f64, d),
    ]))
}

/// Laplacian spectrum of the Turán graph T_{kr,r}:
/// {0^(1), k(r-1)^((k-1)r), kr^(r-1)}. Valid for k, r >= 2.
pub fn turan_spectrum(k: usize, r: usize) -> Result<SpectralSummary> {
    if k < 2 || r < 2 {
        return Err(Error::FamilyConstraint(format!(
            "turan spectrum requires k >= 2 and r >= 2 (got k={k}, r={r})"
        )));
    }
    Ok(SpectralSummary::from_groups(vec![
        (0.0, 1),
        ((k * (r - 1)) as f64, (k - 1) * r),
        ((k * r) as f64, r - 1),
    ]))
}

/// Algebraic connectivity of the generalized cycle C_{n,d} in closed form:
/// n itself when n <= 2d+1 (the cycle collapses to K_n), otherwise the
/// circulant eigenvalue sum over the first d cosine harmonics.
pub fn cycle_a1(n: usize, d: usize) -> Result<f64> {
    if d < 1 || n < d + 1 {
        return Err(Error::FamilyConstraint(format!(
            "cycle requires d >= 1 and n >= d+1 (got n={n}, d={d})"
        )));
    }
    if n <= 2 * d + 1 {
        return Ok(n as f64);
    }
    let nf = n as f64;
    Ok((1..=d)
        .map(|k| 2.0 * (1.0 - (2.0 * k as f64 * PI / nf).cos()))
        .sum())
}

/// Test vectors used by the path-versus-cycle bound:
/// u_i = sqrt(2/n) cos((2π/n)(i - 1/2)), the unit frequency-1 eigenvector
/// of the cycle Laplacian; v_i = sqrt(1/n) cos((π/n)(i - 1/2)); and
/// w = [v; -v], which is the matching eigenvector on the doubled cycle.
pub fn cycle_test_vectors(n: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let nf = n as f64;
    let u: Vec<f64> = (1..=n)
        .map(|i| (2.0 / nf).sqrt() * (2.0 * PI / nf * (i as f64 - 0.5)).cos())
        .collect();
    let v: Vec<f64> = (1..=n)
        .map(|i| (1.0 / nf).sqrt() * (PI / nf * (i as f64 - 0.5)).cos())
        .collect();
    let mut w = v.clone();
    w.extend(v.iter().map(|x| -x));
    (u, v, w)
}

/// Two disjoint copies of P_{n,d} on 2n vertices: 1..=n carries the path,
/// n+1..=2n an identical shifted copy. The Laplacian is I_2 ⊗ L(P_{n,d})
/// and the edge set embeds into C_{2n,d} under the identity labeling.
pub fn mirrored_path(n: usize, d: usize) -> Result<Graph> {
    let p = generate(&FamilySpec::Path { n, d })?;
    let mut edges: Vec<(usize, usize)> = p.edges().to_vec();
    edges.extend(p.edges().iter().map(|&(i, j)| (i + n, j + n)));
    build_graph(2 * n, &edges)
}
