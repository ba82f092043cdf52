//! The `sweep` subcommand: CSV tables over parameter ranges.

use rigidity::bounds::{asymptotic_ratio, path_cycle_bound};
use rigidity::{algebraic_connectivity, estimate_gac, generate, FamilySpec};

use crate::{CliError, SweepArgs, SweepKind};

pub fn run(args: SweepArgs) -> Result<(), CliError> {
    match args.kind {
        SweepKind::AsymptoticRatio { d, n, step, out } => {
            let mut rows = vec!["n,d,ratio".to_string()];
            for n in range(n, step, d)? {
                let r = asymptotic_ratio(n, d).map_err(CliError::from)?;
                rows.push(format!("{n},{d},{r}"));
            }
            crate::write_output(&out, &rows.join("\n"))
        }
        SweepKind::Ratio {
            family,
            d,
            n,
            step,
            optimizer,
            out,
        } => {
            let config = optimizer.config();
            let mut rows = vec!["family,n,d,a1,gac,ratio".to_string()];
            for n in range(n, step, d)? {
                let spec = family_instance(&family, n, d)?;
                let g = generate(&spec).map_err(CliError::from)?;
                let a1 = algebraic_connectivity(&g)?;
                let est = estimate_gac(&g, d, &config)?;
                rows.push(format!(
                    "{spec},{n},{d},{a1},{},{}",
                    est.value,
                    est.value / a1
                ));
            }
            crate::write_output(&out, &rows.join("\n"))
        }
        SweepKind::PathCycle { d, n, step, out } => {
            let mut rows = vec!["n,d,lhs,rhs,slack,satisfied".to_string()];
            for n in range(n, step, d)? {
                let r = path_cycle_bound(n, d).map_err(CliError::from)?;
                rows.push(format!(
                    "{n},{d},{},{},{},{}",
                    r.lhs, r.rhs, r.slack, r.satisfied
                ));
            }
            crate::write_output(&out, &rows.join("\n"))
        }
    }
}

fn range((lo, hi): (usize, usize), step: usize, _d: usize) -> Result<Vec<usize>, CliError> {
    if step == 0 {
        return Err(CliError::Invalid("--step must be positive".into()));
    }
    let values: Vec<usize> = (lo..=hi).step_by(step).collect();
    if values.is_empty() {
        return Err(CliError::Invalid("empty parameter range".into()));
    }
    Ok(values)
}

fn family_instance(name: &str, n: usize, d: usize) -> Result<FamilySpec, CliError> {
    let spec = match name {
        "complete" => FamilySpec::Complete { n },
        "path" => FamilySpec::Path { n, d },
        "cycle" => FamilySpec::Cycle { n, d },
        "star" => FamilySpec::Star { n, d },
        other => {
            return Err(CliError::Invalid(format!(
                "unsupported sweep family {other:?} (use complete, path, cycle, or star)"
            )))
        }
    };
    Ok(spec)
}
