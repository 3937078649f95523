//! Function and point arguments: `anf:<expr>@n`, `hex:<digits>@n`, `file:<path>`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use mspectra::{BooleanFunction, PointSet};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionSpec {
    Anf { expr: String, n: usize },
    Hex { digits: String, n: usize },
    File(PathBuf),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    n: usize,
    hex: Option<String>,
    anf: Option<String>,
}

fn split_arity<'a>(body: &'a str, text: &str) -> Result<(&'a str, usize), CliError> {
    let (head, n) = body.rsplit_once('@').ok_or_else(|| CliError::spec(text, "missing '@n' arity suffix"))?;
    let n = n.trim().parse().map_err(|_| CliError::spec(text, "arity after '@' is not a number"))?;
    Ok((head.trim(), n))
}

impl FromStr for FunctionSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let (kind, body) = text.split_once(':').ok_or_else(|| CliError::spec(text, "expected anf:, hex: or file: prefix"))?;
        match kind {
            "anf" => {
                let (expr, n) = split_arity(body, text)?;
                Ok(FunctionSpec::Anf { expr: expr.to_string(), n })
            }
            "hex" => {
                let (digits, n) = split_arity(body, text)?;
                Ok(FunctionSpec::Hex { digits: digits.to_ascii_lowercase(), n })
            }
            "file" if !body.is_empty() => Ok(FunctionSpec::File(PathBuf::from(body))),
            _ => Err(CliError::spec(text, "expected anf:, hex: or file: prefix")),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Anf { expr, n } => write!(f, "anf:{expr}@{n}"),
            FunctionSpec::Hex { digits, n } => write!(f, "hex:{digits}@{n}"),
            FunctionSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FunctionSpec {
    pub fn load(&self) -> Result<BooleanFunction, CliError> {
        match self {
            FunctionSpec::Anf { expr, n } => Ok(BooleanFunction::from_anf(*n, expr)?),
            FunctionSpec::Hex { digits, n } => Ok(BooleanFunction::from_hex(*n, digits)?),
            FunctionSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                let file: FunctionFile =
                    serde_json::from_str(&text).map_err(|e| CliError::spec(&path.display().to_string(), &e.to_string()))?;
                match (file.hex, file.anf) {
                    (Some(h), None) => Ok(BooleanFunction::from_hex(file.n, &h)?),
                    (None, Some(a)) => Ok(BooleanFunction::from_anf(file.n, &a)?),
                    _ => Err(CliError::spec(&path.display().to_string(), "file needs exactly one of \"hex\" or \"anf\"")),
                }
            }
        }
    }
}

pub fn parse_function_spec(text: &str) -> Result<BooleanFunction, CliError> {
    text.parse::<FunctionSpec>()?.load()
}

/// A point of `F_2^n` given in hex, `x1` as the most significant bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Point(pub usize);

impl FromStr for Point {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let digits = text.trim().trim_start_matches("0x");
        usize::from_str_radix(digits, 16).map(Point).map_err(|_| CliError::spec(text, "point is not a hex number"))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

pub fn point_set(n: usize, points: &[Point]) -> Result<PointSet, CliError> {
    Ok(PointSet::new(n, points.iter().map(|p| p.0))?)
}
