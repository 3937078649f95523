use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::spec::{FunctionSpec, Point};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "MSPECTRA_OUT_DIR";

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "mspectra", version, about = "m-Hadamard spectra, m-Forrelation and their quantum circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output file. Without it, `$MSPECTRA_OUT_DIR/<command>.<ext>` or stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// json for every command, csv where a table makes sense.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Circuit {
    Mforr3,
    Mforr2,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    Bent,
    Negabent,
}

/// `hadamard` or `dicke:<k>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prep {
    Hadamard,
    Dicke(usize),
}

impl FromStr for Prep {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "hadamard" {
            return Ok(Prep::Hadamard);
        }
        s.strip_prefix("dicke:")
            .and_then(|k| k.parse().ok())
            .map(Prep::Dicke)
            .ok_or_else(|| CliError::spec(s, "expected hadamard or dicke:<k>"))
    }
}

impl fmt::Display for Prep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prep::Hadamard => write!(f, "hadamard"),
            Prep::Dicke(k) => write!(f, "dicke:{k}"),
        }
    }
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// m-Hadamard spectrum of a function.
    Spectrum {
        #[arg(long)]
        f: FunctionSpec,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Use the conjugate transform.
        #[arg(long)]
        conj: bool,
    },
    /// m-crosscorrelation of f and g, or m-autocorrelation of f.
    Corr {
        #[arg(long)]
        f: FunctionSpec,
        #[arg(long)]
        g: Option<FunctionSpec>,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// 3-fold m-Forrelation, a k-fold chain, or the sampling report of a set.
    Forrelation {
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        f1: Option<FunctionSpec>,
        #[arg(long)]
        f2: Option<FunctionSpec>,
        #[arg(long)]
        f3: Option<FunctionSpec>,
        /// Repeat once per function of the chain.
        #[arg(long)]
        chain: Vec<FunctionSpec>,
        /// Comma-separated hex points; needs --f.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<Point>>,
        #[arg(long)]
        f: Option<FunctionSpec>,
    },
    /// Generalized Deutsch-Jozsa distribution.
    Dj {
        #[arg(long)]
        f: FunctionSpec,
        /// Per-qubit gate orders, comma-separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "m")]
        plan: Option<Vec<u32>>,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Simulate an m-Forrelation circuit.
    Simulate {
        #[arg(long, value_enum)]
        circuit: Circuit,
        #[arg(long)]
        f1: FunctionSpec,
        #[arg(long)]
        f2: FunctionSpec,
        #[arg(long)]
        f3: FunctionSpec,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Full-spectrum crosscorrelation sampler.
    SampleSpectrum {
        #[arg(long)]
        f: FunctionSpec,
        #[arg(long)]
        g: FunctionSpec,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value = "hadamard")]
        prep: Prep,
    },
    /// Hidden-shift recovery for bent or negabent pairs.
    HiddenShift {
        #[arg(long, value_enum)]
        mode: ShiftMode,
        #[arg(long)]
        f: FunctionSpec,
        #[arg(long)]
        g: FunctionSpec,
        #[arg(long, default_value_t = 4096)]
        shots: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Affine, bent, negabent and m-bent flags.
    Classify {
        #[arg(long)]
        f: FunctionSpec,
        #[arg(long, value_delimiter = ',', default_value = "1,4")]
        m_list: Vec<u32>,
    },
    /// Success-probability curves of the competing samplers.
    Curves {
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Also write an SVG line plot here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn push(args: &mut Vec<String>, flag: &str, value: impl ToString) {
    args.push(format!("--{flag}"));
    args.push(value.to_string());
}

fn push_opt(args: &mut Vec<String>, flag: &str, value: &Option<impl ToString>) {
    if let Some(v) = value {
        push(args, flag, v.to_string());
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum { .. } => "spectrum",
            Command::Corr { .. } => "corr",
            Command::Forrelation { .. } => "forrelation",
            Command::Dj { .. } => "dj",
            Command::Simulate { .. } => "simulate",
            Command::SampleSpectrum { .. } => "sample-spectrum",
            Command::HiddenShift { .. } => "hidden-shift",
            Command::Classify { .. } => "classify",
            Command::Curves { .. } => "curves",
        }
    }
}

impl Cli {
    /// Canonical argument vector; parsing it gives back `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut a = vec!["mspectra".to_string(), self.command.name().to_string()];
        match &self.command {
            Command::Spectrum { f, m, conj } => {
                push(&mut a, "f", f);
                push(&mut a, "m", m);
                if *conj {
                    a.push("--conj".into());
                }
            }
            Command::Corr { f, g, m } => {
                push(&mut a, "f", f);
                push_opt(&mut a, "g", g);
                push(&mut a, "m", m);
            }
            Command::Forrelation { m, f1, f2, f3, chain, set, f } => {
                push(&mut a, "m", m);
                push_opt(&mut a, "f1", f1);
                push_opt(&mut a, "f2", f2);
                push_opt(&mut a, "f3", f3);
                for c in chain {
                    push(&mut a, "chain", c);
                }
                if let Some(s) = set {
                    push(&mut a, "set", join(s));
                }
                push_opt(&mut a, "f", f);
            }
            Command::Dj { f, plan, m } => {
                push(&mut a, "f", f);
                if let Some(p) = plan {
                    push(&mut a, "plan", join(p));
                }
                push_opt(&mut a, "m", m);
            }
            Command::Simulate { circuit, f1, f2, f3, m } => {
                push(&mut a, "circuit", value_name(circuit));
                push(&mut a, "f1", f1);
                push(&mut a, "f2", f2);
                push(&mut a, "f3", f3);
                push(&mut a, "m", m);
            }
            Command::SampleSpectrum { f, g, m, prep } => {
                push(&mut a, "f", f);
                push(&mut a, "g", g);
                push(&mut a, "m", m);
                push(&mut a, "prep", prep);
            }
            Command::HiddenShift { mode, f, g, shots, seed } => {
                push(&mut a, "mode", value_name(mode));
                push(&mut a, "f", f);
                push(&mut a, "g", g);
                push(&mut a, "shots", shots);
                push(&mut a, "seed", seed);
            }
            Command::Classify { f, m_list } => {
                push(&mut a, "f", f);
                push(&mut a, "m-list", join(m_list));
            }
            Command::Curves { grid, svg } => {
                push(&mut a, "grid", grid);
                if let Some(p) = svg {
                    push(&mut a, "svg", p.display());
                }
            }
        }
        if let Some(p) = &self.out {
            push(&mut a, "out", p.display());
        }
        if let Some(fmt) = &self.format {
            push(&mut a, "format", value_name(fmt));
        }
        a
    }
}
