use std::path::{Path, PathBuf};

use mspectra::boolfun::format_bits;
use mspectra::circuits::{
    run_bent_shift, run_generalized_dj, run_mforr_2q, run_mforr_3q, run_negabent_shift, run_spectrum_sampler,
};
use mspectra::forrelation::sampling_report;
use mspectra::qsim::RNG_NAME;
use mspectra::spectra::{classify, m_crosscorrelation};
use mspectra::{forrelation_k, m_forrelation3, m_hadamard, BooleanFunction, DJPlan, PhaseOrder, SamplerPrep, SamplingCurves};
use serde_json::json;

use crate::args::{Circuit, Cli, Command, Format, Prep, ShiftMode, OUT_DIR_ENV};
use crate::error::CliError;
use crate::render;
use crate::spec::{point_set, FunctionSpec};

pub struct Artifact {
    pub ext: &'static str,
    pub bytes: Vec<u8>,
}

fn json(v: serde_json::Value) -> Artifact {
    Artifact { ext: "json", bytes: render::to_json_bytes(&v) }
}

fn csv(bytes: Vec<u8>) -> Artifact {
    Artifact { ext: "csv", bytes }
}

fn order(m: u32) -> Result<PhaseOrder, CliError> {
    Ok(PhaseOrder::new(m)?)
}

fn load(spec: &FunctionSpec) -> Result<BooleanFunction, CliError> {
    spec.load()
}

fn require<'a>(spec: &'a Option<FunctionSpec>, flag: &str) -> Result<&'a FunctionSpec, CliError> {
    spec.as_ref().ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

/// Runs one request and returns the primary artifact.
pub fn run(cli: &Cli) -> Result<Artifact, CliError> {
    let name = cli.command.name();
    let format = cli.format.unwrap_or(match cli.command {
        Command::Curves { .. } => Format::Csv,
        _ => Format::Json,
    });
    let no_csv = || Err(CliError::Format { format: "csv", command: name });

    match &cli.command {
        Command::Spectrum { f, m, conj } => {
            let s = m_hadamard(&load(f)?, order(*m)?, *conj);
            match format {
                Format::Json => Ok(json(render::spectrum_json(&s))),
                Format::Csv => Ok(csv(render::spectrum_csv(&s)?)),
            }
        }
        Command::Corr { f, g, m } => {
            let f = load(f)?;
            let g = g.as_ref().map(load).transpose()?.unwrap_or_else(|| f.clone());
            let s = m_crosscorrelation(&f, &g, order(*m)?)?;
            match format {
                Format::Json => Ok(json(render::spectrum_json(&s))),
                Format::Csv => Ok(csv(render::spectrum_csv(&s)?)),
            }
        }
        Command::Forrelation { m, f1, f2, f3, chain, set, f } => {
            let triple = f1.is_some() || f2.is_some() || f3.is_some();
            let modes = [triple, !chain.is_empty(), set.is_some()].iter().filter(|&&b| b).count();
            if modes != 1 {
                return Err(CliError::Usage("give exactly one of --f1/--f2/--f3, --chain or --set".into()));
            }
            if let Some(points) = set {
                let f = load(require(f, "f")?)?;
                let report = sampling_report(&f, &point_set(f.arity(), points)?, order(*m)?)?;
                return match format {
                    Format::Json => Ok(json(json!({
                        "p": report.p,
                        "phi": render::forrelation_json(&report.phi),
                        "curves": report.curves,
                    }))),
                    Format::Csv => Ok(csv(render::curves_csv(&[report.curves])?)),
                };
            }
            if format == Format::Csv {
                return no_csv();
            }
            let value = if chain.is_empty() {
                let (a, b, c) = (load(require(f1, "f1")?)?, load(require(f2, "f2")?)?, load(require(f3, "f3")?)?);
                m_forrelation3(&a, &b, &c, order(*m)?)?
            } else {
                if *m != 1 {
                    return Err(CliError::Usage("--chain evaluates the Walsh chain; use --m 1".into()));
                }
                forrelation_k(&chain.iter().map(load).collect::<Result<Vec<_>, _>>()?)?
            };
            Ok(json(render::forrelation_json(&value)))
        }
        Command::Dj { f, plan, m } => {
            let f = load(f)?;
            let plan = match plan {
                Some(d) => DJPlan::new(d)?,
                None => DJPlan::uniform(f.arity(), order(m.unwrap_or(1))?),
            };
            let d = run_generalized_dj(&f, &plan)?;
            match format {
                Format::Json => Ok(json(render::distribution_json(&d))),
                Format::Csv => Ok(csv(render::distribution_csv(&d)?)),
            }
        }
        Command::Simulate { circuit, f1, f2, f3, m } => {
            let (a, b, c) = (load(f1)?, load(f2)?, load(f3)?);
            let m = order(*m)?;
            let (d, p_zero) = match circuit {
                Circuit::Mforr3 => (run_mforr_3q(&a, &b, &c, m)?, None),
                Circuit::Mforr2 => {
                    let out = run_mforr_2q(&a, &b, &c, m)?;
                    (out.distribution, Some(out.p_zero))
                }
            };
            match format {
                Format::Json => {
                    let mut v = render::distribution_json(&d);
                    if let Some(p) = p_zero {
                        v["p_zero"] = json!(p);
                    }
                    Ok(json(v))
                }
                Format::Csv => Ok(csv(render::distribution_csv(&d)?)),
            }
        }
        Command::SampleSpectrum { f, g, m, prep } => {
            let prep = match prep {
                Prep::Hadamard => SamplerPrep::Hadamard,
                Prep::Dicke(k) => SamplerPrep::Dicke(*k),
            };
            let d = run_spectrum_sampler(&load(f)?, &load(g)?, order(*m)?, prep)?;
            match format {
                Format::Json => Ok(json(render::distribution_json(&d))),
                Format::Csv => Ok(csv(render::distribution_csv(&d)?)),
            }
        }
        Command::HiddenShift { mode, f, g, shots, seed } => {
            let (f, g) = (load(f)?, load(g)?);
            match mode {
                ShiftMode::Bent => {
                    let out = run_bent_shift(&f, &g)?;
                    match format {
                        Format::Json => {
                            let mut v = render::distribution_json(&out.distribution);
                            v["interpretation"] = serde_json::to_value(&out.interpretation).expect("plain data");
                            Ok(json(v))
                        }
                        Format::Csv => Ok(csv(render::distribution_csv(&out.distribution)?)),
                    }
                }
                ShiftMode::Negabent => {
                    if format == Format::Csv {
                        return no_csv();
                    }
                    let rep = run_negabent_shift(&f, &g, *shots, *seed)?;
                    let n = f.arity();
                    let mut v = serde_json::to_value(&rep.solution).expect("plain data");
                    v["verified"] = json!(rep
                        .solution
                        .verified
                        .iter()
                        .map(|(u, ok)| (format_bits(*u, n), *ok))
                        .collect::<std::collections::BTreeMap<_, _>>());
                    v["rank"] = json!(rep.rank);
                    v["samples_used"] = json!(rep.samples_used);
                    v["shots"] = json!(rep.shots);
                    v["seed"] = json!(rep.seed);
                    v["generator"] = json!(RNG_NAME);
                    v["counts"] = json!(rep
                        .counts
                        .iter()
                        .map(|(s, c)| (format_bits(*s, n + 1), *c))
                        .collect::<std::collections::BTreeMap<_, _>>());
                    v["distribution"] = render::distribution_json(&rep.distribution);
                    Ok(json(v))
                }
            }
        }
        Command::Classify { f, m_list } => {
            if format == Format::Csv {
                return no_csv();
            }
            let orders = m_list.iter().map(|&m| order(m)).collect::<Result<Vec<_>, _>>()?;
            let c = classify(&load(f)?, &orders);
            Ok(json(serde_json::to_value(&c).expect("plain data")))
        }
        Command::Curves { grid, svg } => {
            if *grid < 2 {
                return Err(CliError::Usage("--grid needs at least 2 points".into()));
            }
            let rows = SamplingCurves::grid(*grid);
            if let Some(path) = svg {
                write_file(path, render::curves_svg(&rows).as_bytes())?;
            }
            match format {
                Format::Json => Ok(json(json!({ "grid": grid, "rows": rows }))),
                Format::Csv => Ok(csv(render::curves_csv(&rows)?)),
            }
        }
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Where the artifact goes: `--out`, then the env directory, else stdout.
pub fn destination(cli: &Cli, ext: &str) -> Option<PathBuf> {
    cli.out.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV)
            .filter(|d| !d.is_empty())
            .map(|d| PathBuf::from(d).join(format!("{}.{ext}", cli.command.name())))
    })
}
