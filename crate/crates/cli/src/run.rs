//! Subcommand dispatch.

use std::fs;
use std::io::Write;
use std::path::Path;

use primpoints::contract::{dimension_comparison, enumerate_contr0};
use primpoints::hypcurve::{function_degree, pole_divisor, riemann_roch_basis, zero_divisor, HyperellipticCurve};
use primpoints::numfield::{is_primitive_field, Policy};
use primpoints::prospect::{
    density_experiment, find_primitive_function, prospect, ProspectLimits, SampleMode, SearchBudget,
};
use serde::Serialize;

use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::parse::{parse_divisor, parse_function_expr, parse_polynomial};
use crate::report::{CertifyReport, ContrEntry, ContrReport, CurveInfo, Envelope, FunctionDegree};

pub fn load_curve(path: &Path) -> Result<HyperellipticCurve, CliError> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn emit<T: Serialize>(out: &mut dyn Write, command: &str, report: T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, &Envelope::new(command, report))?;
    writeln!(out)?;
    Ok(())
}

/// Runs one subcommand, writing the JSON report to `out` and a summary to
/// `log`.
pub fn run_with(config: &RunConfig, out: &mut dyn Write, log: &mut dyn Write) -> Result<(), CliError> {
    let jobs = config.jobs.map(usize::from);
    let name = config.command.name();
    match &config.command {
        Command::CurveInfo(c) => {
            let curve = load_curve(&c.curve)?;
            writeln!(log, "y^2 = {}: genus {}", curve.h(), curve.genus())?;
            let info = CurveInfo {
                genus: curve.genus(),
                degree: curve.h().deg(),
                y_pole_order: curve.y_pole_order(),
                curve,
            };
            emit(out, name, info)
        }
        Command::RrBasis { curve, divisor } => {
            let curve = load_curve(&curve.curve)?;
            let d = parse_divisor(divisor, &curve)?;
            let space = riemann_roch_basis(&curve, &d)?;
            let shown: Vec<String> = space.basis.iter().map(|f| f.to_string()).collect();
            writeln!(log, "L({d}) has dimension {}: {{{}}}", space.dimension, shown.join(", "))?;
            emit(out, name, space)
        }
        Command::FunctionDegree { curve, function } => {
            let curve = load_curve(&curve.curve)?;
            let f = parse_function_expr(function, &curve)?;
            let degree = function_degree(&curve, &f)?;
            let report = FunctionDegree {
                pole_divisor: pole_divisor(&curve, &f)?,
                zero_divisor: zero_divisor(&curve, &f)?,
                degree,
                f,
            };
            writeln!(log, "deg({}) = {degree}, poles {}", report.f, report.pole_divisor)?;
            emit(out, name, report)
        }
        Command::Contr { curve, divisor } => {
            let curve = load_curve(&curve.curve)?;
            let d = parse_divisor(divisor, &curve)?;
            let set = enumerate_contr0(&curve, &d)?;
            let mut contractions = Vec::new();
            for k in set.contractions {
                let dimension = if d.degree() > 2 * curve.genus() as i64 {
                    Some(dimension_comparison(&curve, &d, &k)?)
                } else {
                    None
                };
                if !k.pullback_verified || dimension.is_some_and(|r| !r.holds) {
                    return Err(CliError::Verification(format!("contraction {} fails its checks", k.g)));
                }
                writeln!(log, "g = {} (degree {})", k.g, k.e)?;
                contractions.push(ContrEntry { contraction: k, dimension });
            }
            writeln!(log, "{} contraction class(es) of {d}", contractions.len())?;
            emit(
                out,
                name,
                ContrReport { divisor: d, contractions, infinity_families: set.infinity_families },
            )
        }
        Command::Certify { poly, paranoid } => {
            let m = parse_polynomial(poly)?;
            let certificate = is_primitive_field(&m, Policy::Auto)?;
            if *paranoid {
                let general = is_primitive_field(&m, Policy::ForceGeneral)?;
                if general.verdict != certificate.verdict || !general.verify() {
                    return Err(CliError::Verification(format!("verdicts disagree for {m}")));
                }
            }
            let verified = certificate.verify();
            let summary = match &certificate.witness {
                Some(w) => format!("{:?}, witness {}", certificate.verdict, w.generator_minpoly),
                None => format!("{:?} by {:?}", certificate.verdict, certificate.method),
            };
            writeln!(log, "{m}: {summary}")?;
            emit(out, name, CertifyReport { certificate, verified })?;
            if !verified {
                return Err(CliError::Verification(format!("certificate for {m} does not verify")));
            }
            Ok(())
        }
        Command::Prospect { curve, function, t_count, t_height, paranoid } => {
            let curve = load_curve(&curve.curve)?;
            let f = parse_function_expr(function, &curve)?;
            let limits =
                ProspectLimits { t_count: *t_count as usize, max_height: *t_height, paranoid: *paranoid, jobs };
            let report = prospect(&curve, &f, &limits)?;
            if let Some(bad) = report.primitive_points.iter().find(|p| !p.certificate.verify()) {
                return Err(CliError::Verification(format!("certificate at t = {} does not verify", bad.t)));
            }
            let c = &report.counts;
            writeln!(
                log,
                "{f}: {} primitive, {} imprimitive, {} reducible, {} branch, {} degenerate",
                c.primitive, c.imprimitive, c.reducible, c.branch_like, c.degenerate
            )?;
            emit(out, name, report)
        }
        Command::Density { curve, divisor, coeff_height, samples, seed } => {
            let curve = load_curve(&curve.curve)?;
            let d = parse_divisor(divisor, &curve)?;
            let mode = match samples {
                None => SampleMode::Exhaustive,
                Some(n) => SampleMode::Seeded { count: *n as usize, seed: *seed },
            };
            let report = density_experiment(&curve, &d, *coeff_height, mode, jobs)?;
            writeln!(
                log,
                "{} vectors: deficient {}, imprimitive {}, other {}; imprimitive among full degree {}",
                report.total,
                report.degree_deficient,
                report.imprimitive,
                report.primitive,
                report.imprimitive_among_full_degree
            )?;
            emit(out, name, report)
        }
        Command::FindFunction { curve, degree, coeff_height, max_candidates, t_count, paranoid } => {
            let curve = load_curve(&curve.curve)?;
            let budget = SearchBudget {
                coeff_height: *coeff_height,
                max_candidates: *max_candidates as usize,
                t_count: *t_count as usize,
                paranoid: *paranoid,
            };
            let found = find_primitive_function(&curve, *degree as usize, &budget)?;
            if !found.certificate.verify() {
                return Err(CliError::Verification(format!("certificate for {} does not verify", found.f)));
            }
            writeln!(log, "f = {} is primitive of degree {degree} (fiber over t = {})", found.f, found.t)?;
            emit(out, name, found)
        }
    }
}

/// Runs with the configured output sink and standard error for the summary.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let mut buf = Vec::new();
    run_with(config, &mut buf, &mut std::io::stderr())?;
    match &config.output {
        Some(path) => fs::write(path, buf)?,
        None => std::io::stdout().write_all(&buf)?,
    }
    Ok(())
}
