//! Grouped eigenvalue summaries.

use serde::Serialize;

/// Default absolute gap below which adjacent eigenvalues are merged into
/// one multiplicity group.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Sorted eigenvalue list with multiplicity grouping.
///
/// `groups` clusters the raw values: adjacent eigenvalues closer than
/// `tolerance` belong to the same group, whose reported value is the group
/// mean. Multiplicities always sum to the matrix dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub eigenvalues: Vec<f64>,
    pub groups: Vec<(f64, usize)>,
    pub tolerance: f64,
}

impl SpectralSummary {
    /// Cluster a raw eigenvalue list. The input is sorted ascending first.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, tolerance: f64) -> Self {
        eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 0..eigenvalues.len() {
            let next_breaks = i + 1 == eigenvalues.len()
                || (eigenvalues[i + 1] - eigenvalues[i]).abs() > tolerance;
            if next_breaks {
                let count = i + 1 - start;
                let mean = eigenvalues[start..=i].iter().sum::<f64>() / count as f64;
                groups.push((mean, count));
                start = i + 1;
            }
        }
        SpectralSummary {
            eigenvalues,
            groups,
            tolerance,
        }
    }

    /// Build from exact grouped values, e.g. a closed-form spectrum.
    /// The expanded eigenvalue list repeats each value by its multiplicity.
    pub fn from_groups(groups: Vec<(f64, usize)>) -> Self {
        let mut groups = groups;
        groups.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let eigenvalues = groups
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        SpectralSummary {
            eigenvalues,
            groups,
            tolerance: 0.0,
        }
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Largest absolute difference against another summary's eigenvalues,
    /// compared entry by entry. Returns `None` on dimension mismatch.
    pub fn max_deviation(&self, other: &SpectralSummary) -> Option<f64> {
        if self.dimension() != other.dimension() {
            return None;
        }
        Some(
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_groups_close_values() {
        let s = SpectralSummary::from_eigenvalues(vec![2.0 + 5e-8, 0.0, 2.0, 6.0, 2.0 - 5e-8], CLUSTER_TOL);
        assert_eq!(s.groups.len(), 3);
        assert_eq!(s.groups[0], (0.0, 1));
        assert_eq!(s.groups[1].1, 3);
        assert!((s.groups[1].0 - 2.0).abs() < 1e-9);
        assert_eq!(s.groups[2], (6.0, 1));
        let total: usize = s.groups.iter().map(|g| g.1).sum();
        assert_eq!(total, s.dimension());
    }

    #[test]
    fn from_groups_expands_multiplicities() {
        let s = SpectralSummary::from_groups(vec![(6.0, 2), (0.0, 1), (2.0, 3)]);
        assert_eq!(s.eigenvalues, vec![0.0, 2.0, 2.0, 2.0, 6.0, 6.0]);
        assert_eq!(s.dimension(), 6);
    }
}
