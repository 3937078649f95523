//! Closed-form Forrelation values and the sampling probabilities built on them.

use num_complex::Complex64;
use serde::Serialize;

use crate::boolfun::{BooleanFunction, PointSet};
use crate::error::{Error, Result};
use crate::spectra::{fwht, m_hadamard, PhaseOrder};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ForrelationValue {
    pub value: Complex64,
    pub m: PhaseOrder,
    pub fold: usize,
}

fn check_arities(fs: &[&BooleanFunction]) -> Result<usize> {
    let n = fs[0].arity();
    if let Some(f) = fs.iter().find(|f| f.arity() != n) {
        return Err(Error::ArityMismatch { left: n, right: f.arity() });
    }
    Ok(n)
}

/// k-fold Forrelation of the chain `f1 - f2 - ... - fk`:
///
/// ```text
/// 2^(-(k+1)n/2) sum (-1)^f1(x1) (-1)^(x1.x2) (-1)^f2(x2) ... (-1)^fk(xk)
/// ```
///
/// evaluated as alternating sign multiplies and butterflies.
pub fn forrelation_k(fs: &[BooleanFunction]) -> Result<ForrelationValue> {
    if fs.len() < 2 {
        return Err(Error::Invalid(format!("forrelation needs at least 2 functions, got {}", fs.len())));
    }
    let refs: Vec<&BooleanFunction> = fs.iter().collect();
    let n = check_arities(&refs)?;
    let mut v = fs[0].signs();
    for f in &fs[1..] {
        fwht(&mut v)?;
        v.iter_mut().enumerate().for_each(|(x, a)| *a *= f.sign(x));
    }
    let total: f64 = v.iter().sum();
    let k = fs.len() as f64;
    let value = total * 2f64.powf(-(k + 1.0) * n as f64 / 2.0);
    Ok(ForrelationValue { value: Complex64::new(value, 0.0), m: PhaseOrder::WALSH, fold: fs.len() })
}

/// 3-fold m-Forrelation
/// `2^(-n) sum_x (-1)^f1(x) H_f2(x) conj(H_f3(x))`.
pub fn m_forrelation3(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    m: PhaseOrder,
) -> Result<ForrelationValue> {
    check_arities(&[f1, f2, f3])?;
    let h2 = m_hadamard(f2, m, false);
    let h3 = m_hadamard(f3, m, false);
    let sum: Complex64 = (0..f1.len())
        .map(|x| h2.values[x] * h3.values[x].conj() * f1.sign(x))
        .sum();
    Ok(ForrelationValue { value: sum / f1.len() as f64, m, fold: 3 })
}

/// Success probabilities of the competing samplers at a base probability `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SamplingCurves {
    pub p: f64,
    pub dj_once: f64,
    pub dj_twice: f64,
    /// `sin(3 asin p)`, with `p` as the argument.
    pub amp_amp_paper: f64,
    /// `sin^2(3 asin sqrt p)`, textbook amplitude amplification.
    pub amp_amp_standard: f64,
    pub forr_3q: f64,
}

impl SamplingCurves {
    pub fn at(p: f64) -> Self {
        Self {
            p,
            dj_once: p,
            dj_twice: 2.0 * p - p * p,
            amp_amp_paper: (3.0 * p.asin()).sin(),
            amp_amp_standard: (3.0 * p.sqrt().asin()).sin().powi(2),
            forr_3q: 4.0 * p - 4.0 * p * p,
        }
    }

    /// Evenly spaced grid of `points` values over `[0, 1]`.
    pub fn grid(points: usize) -> Vec<Self> {
        match points {
            0 => vec![],
            1 => vec![Self::at(0.0)],
            _ => (0..points).map(|i| Self::at(i as f64 / (points - 1) as f64)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingReport {
    pub p: f64,
    pub phi: ForrelationValue,
    pub curves: SamplingCurves,
}

/// `p = 2^(-n) sum_{x in S} |H_f(x)|^2` together with
/// `Phi_{1_S, f, f} = 1 - 2p` and the comparison curves.
pub fn sampling_report(f: &BooleanFunction, set: &PointSet, m: PhaseOrder) -> Result<SamplingReport> {
    if set.arity() != f.arity() {
        return Err(Error::ArityMismatch { left: f.arity(), right: set.arity() });
    }
    let h = m_hadamard(f, m, false);
    let p = set.iter().map(|x| h.values[x].norm_sqr()).sum::<f64>() / f.len() as f64;
    let indicator = BooleanFunction::indicator(set)?;
    let phi = m_forrelation3(&indicator, f, f, m)?;
    Ok(SamplingReport { p, phi, curves: SamplingCurves::at(p) })
}
