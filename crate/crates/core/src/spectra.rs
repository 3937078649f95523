//! m-Hadamard transforms and m-cross/autocorrelation spectra.
//!
//! For a phase order `m` with `zeta = exp(2 pi i / m)` the m-Hadamard
//! transform of `f` is
//!
//! ```text
//! H(w) = 2^(-n/2) sum_x (-1)^(f(x) + x.w) zeta^wt(x)
//! ```
//!
//! `m = 1` is the Walsh-Hadamard transform, `m = 4` the nega-Hadamard
//! transform. Every transform here is one phase multiply followed by a fast
//! Walsh-Hadamard butterfly.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::boolfun::{dot, weight, BooleanFunction};
use crate::error::{Error, Result};

/// Tolerance used for flatness (m-bent) and Boolean reconstruction checks.
pub const FLAT_TOL: f64 = 1e-6;

/// Above this arity `classify` takes the autocorrelation from the
/// transform product instead of the quadratic direct sum.
const DIRECT_AUTOCORRELATION_MAX_N: usize = 12;

/// In-place unnormalized Walsh-Hadamard butterfly:
/// `out[w] = sum_x (-1)^(x.w) in[x]`.
pub fn fwht<T>(values: &mut [T]) -> Result<()>
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = values.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let mut h = 1;
    while h < len {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
    Ok(())
}

/// The order `m >= 1` of the root of unity `zeta_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PhaseOrder(u32);

impl PhaseOrder {
    pub const WALSH: PhaseOrder = PhaseOrder(1);
    pub const NEGA: PhaseOrder = PhaseOrder(4);

    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPhaseOrder(m));
        }
        Ok(Self(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `zeta_m^k`. Multiples of a quarter turn are returned exactly.
    pub fn zeta_pow(self, k: i64) -> Complex64 {
        let m = i64::from(self.0);
        let j = k.rem_euclid(m);
        if (4 * j) % m == 0 {
            return match 4 * j / m {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64)
    }

    pub fn zeta(self) -> Complex64 {
        self.zeta_pow(1)
    }

    /// `zeta^w` for `w = 0..=n`, or the conjugate powers.
    pub fn weight_phases(self, n: usize, conjugate: bool) -> Vec<Complex64> {
        let s = if conjugate { -1 } else { 1 };
        (0..=n as i64).map(|w| self.zeta_pow(s * w)).collect()
    }
}

impl TryFrom<u32> for PhaseOrder {
    type Error = Error;
    fn try_from(m: u32) -> Result<Self> {
        Self::new(m)
    }
}

impl From<PhaseOrder> for u32 {
    fn from(m: PhaseOrder) -> u32 {
        m.0
    }
}

impl fmt::Display for PhaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    MHadamard,
    ConjMHadamard,
    MCross,
    MAuto,
}

impl SpectrumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::MHadamard => "m_hadamard",
            SpectrumKind::ConjMHadamard => "conj_m_hadamard",
            SpectrumKind::MCross => "m_cross",
            SpectrumKind::MAuto => "m_auto",
        }
    }
}

/// Transforms carry the `2^(-n/2)` factor; correlations are plain sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    Unitary,
    Unnormalized,
}

/// A complex spectrum indexed by `w` in table order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub n: usize,
    pub m: PhaseOrder,
    pub kind: SpectrumKind,
    pub normalization: Normalization,
    pub values: Vec<Complex64>,
}

impl Spectrum {
    pub fn get(&self, w: usize) -> Complex64 {
        self.values[w]
    }

    /// `sum |values|^2`.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    /// All `|values| = 1` within [`FLAT_TOL`].
    pub fn is_flat(&self) -> bool {
        self.values.iter().all(|v| (v.norm() - 1.0).abs() <= FLAT_TOL)
    }

    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `(-1)^f(x) zeta^(+-wt(x))` for every `x`.
fn phased_signs(f: &BooleanFunction, m: PhaseOrder, conjugate: bool) -> Vec<Complex64> {
    let phases = m.weight_phases(f.arity(), conjugate);
    (0..f.len())
        .map(|x| phases[weight(x) as usize] * f.sign(x))
        .collect()
}

/// The m-Hadamard transform of `f`, or its conjugate when `conjugate` is set.
pub fn m_hadamard(f: &BooleanFunction, m: PhaseOrder, conjugate: bool) -> Spectrum {
    let mut v = phased_signs(f, m, conjugate);
    fwht(&mut v).expect("table length is a power of two");
    let scale = (f.len() as f64).sqrt().recip();
    v.iter_mut().for_each(|z| *z *= scale);
    Spectrum {
        n: f.arity(),
        m,
        kind: if conjugate { SpectrumKind::ConjMHadamard } else { SpectrumKind::MHadamard },
        normalization: Normalization::Unitary,
        values: v,
    }
}

/// Normalized Walsh-Hadamard spectrum (`m = 1`).
pub fn walsh(f: &BooleanFunction) -> Spectrum {
    m_hadamard(f, PhaseOrder::WALSH, false)
}

/// Normalized nega-Hadamard spectrum (`m = 4`).
pub fn nega_hadamard(f: &BooleanFunction) -> Spectrum {
    m_hadamard(f, PhaseOrder::NEGA, false)
}

/// Recovers `f` from its m-Hadamard (or conjugate) spectrum through
/// `(-1)^f(y) = 2^(-n/2) zeta^(-wt(y)) sum_w H(w) (-1)^(w.y)`.
pub fn invert_m_hadamard(spec: &Spectrum) -> Result<BooleanFunction> {
    let conjugate = match spec.kind {
        SpectrumKind::MHadamard => false,
        SpectrumKind::ConjMHadamard => true,
        k => return Err(Error::WrongSpectrumKind(k.as_str())),
    };
    let n = spec.n;
    if spec.values.len() != 1 << n {
        return Err(Error::SizeMismatch { expected: 1 << n, got: spec.values.len() });
    }
    let mut v = spec.values.clone();
    fwht(&mut v)?;
    let phases = spec.m.weight_phases(n, !conjugate);
    let scale = ((1usize << n) as f64).sqrt().recip();
    let mut table = Vec::with_capacity(v.len());
    for (y, z) in v.into_iter().enumerate() {
        let s = z * phases[weight(y) as usize] * scale;
        if (s.re.abs() - 1.0).abs() > FLAT_TOL || s.im.abs() > FLAT_TOL {
            return Err(Error::ReconstructionNotBoolean { index: y, value: format!("{s}") });
        }
        table.push(s.re < 0.0);
    }
    BooleanFunction::new(n, &table)
}

fn check_same_arity(f: &BooleanFunction, g: &BooleanFunction) -> Result<()> {
    if f.arity() != g.arity() {
        return Err(Error::ArityMismatch { left: f.arity(), right: g.arity() });
    }
    Ok(())
}

/// Direct m-crosscorrelation
/// `C(y) = sum_x (-1)^(f(x) + g(x + y)) (zeta^2)^(x (.) y)` where `x (.) y`
/// is the integer count of common ones. Quadratic in `2^n`.
pub fn m_crosscorrelation(f: &BooleanFunction, g: &BooleanFunction, m: PhaseOrder) -> Result<Spectrum> {
    check_same_arity(f, g)?;
    let n = f.arity();
    let len = f.len();
    let sf = f.signs();
    let sg = g.signs();
    let phases: Vec<Complex64> = (0..=n as i64).map(|k| m.zeta_pow(2 * k)).collect();
    let values = (0..len)
        .map(|y| {
            // Bucket by overlap so only n+1 complex multiplies are needed.
            let mut buckets = vec![0.0f64; n + 1];
            for x in 0..len {
                buckets[weight(x & y) as usize] += sf[x] * sg[x ^ y];
            }
            buckets.iter().zip(&phases).map(|(&b, &p)| p * b).sum()
        })
        .collect();
    Ok(Spectrum {
        n,
        m,
        kind: if f == g { SpectrumKind::MAuto } else { SpectrumKind::MCross },
        normalization: Normalization::Unnormalized,
        values,
    })
}

pub fn m_autocorrelation(f: &BooleanFunction, m: PhaseOrder) -> Spectrum {
    m_crosscorrelation(f, f, m).expect("same arity")
}

/// m-crosscorrelation through the transforms:
/// `C(z) = zeta^wt(z) sum_u H_f(u) conj(H_g(u)) (-1)^(u.z)`.
pub fn crosscorr_via_spectra(f: &BooleanFunction, g: &BooleanFunction, m: PhaseOrder) -> Result<Spectrum> {
    check_same_arity(f, g)?;
    let n = f.arity();
    let hf = m_hadamard(f, m, false);
    let hg = m_hadamard(g, m, false);
    let mut v: Vec<Complex64> = hf.values.iter().zip(&hg.values).map(|(a, b)| a * b.conj()).collect();
    fwht(&mut v)?;
    let phases = m.weight_phases(n, false);
    v.iter_mut().enumerate().for_each(|(z, c)| *c *= phases[weight(z) as usize]);
    Ok(Spectrum {
        n,
        m,
        kind: if f == g { SpectrumKind::MAuto } else { SpectrumKind::MCross },
        normalization: Normalization::Unnormalized,
        values: v,
    })
}

/// Closed form of the m-Hadamard transform of the affine function
/// `L(x) = c.x + d` at `u`:
///
/// ```text
/// (-1)^d 2^(n/2) cos(pi/m)^(n-w) (-i sin(pi/m))^w zeta^(n/2),   w = wt(u + c)
/// ```
///
/// derived from `1 + zeta = 2 cos(pi/m) e^(i pi/m)` and
/// `1 - zeta = -2i sin(pi/m) e^(i pi/m)`.
pub fn linear_m_hadamard_closed_form(n: usize, c: usize, d: bool, m: PhaseOrder, u: usize) -> Complex64 {
    let w = weight(u ^ c) as i32;
    let t = PI / f64::from(m.get());
    let magnitude = 2f64.powf(n as f64 / 2.0) * t.cos().powi(n as i32 - w) * t.sin().powi(w);
    let rotation = Complex64::new(0.0, -1.0).powi(w) * Complex64::from_polar(1.0, t * n as f64);
    let sign = if d { -1.0 } else { 1.0 };
    rotation * (sign * magnitude)
}

/// m-bent verdicts for one phase order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderVerdict {
    pub m: PhaseOrder,
    /// `|H(w)| = 1` everywhere.
    pub flat: bool,
    /// `C(z) = 0` for all `z != 0` and `C(0) = 2^n`.
    pub autocorrelation_vanishes: bool,
}

impl OrderVerdict {
    pub fn agree(&self) -> bool {
        self.flat == self.autocorrelation_vanishes
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub weight: usize,
    pub balanced: bool,
    pub constant: bool,
    pub affine: bool,
    pub bent: bool,
    pub negabent: bool,
    pub orders: Vec<OrderVerdict>,
}

impl Classification {
    pub fn verdict(&self, m: u32) -> Option<&OrderVerdict> {
        self.orders.iter().find(|v| v.m.get() == m)
    }

    pub fn verdicts_agree(&self) -> bool {
        self.orders.iter().all(OrderVerdict::agree)
    }
}

fn order_verdict(f: &BooleanFunction, m: PhaseOrder) -> OrderVerdict {
    let flat = m_hadamard(f, m, false).is_flat();
    let auto = if f.arity() <= DIRECT_AUTOCORRELATION_MAX_N {
        m_autocorrelation(f, m)
    } else {
        crosscorr_via_spectra(f, f, m).expect("same arity")
    };
    let full = f.len() as f64;
    let autocorrelation_vanishes = auto.values.iter().enumerate().all(|(z, c)| {
        let target = if z == 0 { full } else { 0.0 };
        (c - target).norm() <= FLAT_TOL * full
    });
    OrderVerdict { m, flat, autocorrelation_vanishes }
}

/// Bent-family flags of `f`. Bent (`m = 1`) and negabent (`m = 4`) are
/// always evaluated; `orders` holds one verdict per requested order.
pub fn classify(f: &BooleanFunction, orders: &[PhaseOrder]) -> Classification {
    let bent = m_hadamard(f, PhaseOrder::WALSH, false).is_flat();
    let negabent = m_hadamard(f, PhaseOrder::NEGA, false).is_flat();
    Classification {
        n: f.arity(),
        weight: f.hamming_weight(),
        balanced: f.is_balanced(),
        constant: f.is_constant(),
        affine: f.is_affine(),
        bent,
        negabent,
        orders: orders.iter().map(|&m| order_verdict(f, m)).collect(),
    }
}

/// `(-1)^(a.b)`.
pub fn parity(a: usize, b: usize) -> f64 {
    if dot(a, b) {
        -1.0
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pm(m: u32) -> PhaseOrder {
        PhaseOrder::new(m).unwrap()
    }

    #[test]
    fn fwht_examples() {
        let mut v = [1.0, 0.0, 0.0, 0.0];
        fwht(&mut v).unwrap();
        assert_eq!(v, [1.0; 4]);
        let mut v = [1i64; 4];
        fwht(&mut v).unwrap();
        assert_eq!(v, [4, 0, 0, 0]);
        assert_eq!(fwht(&mut [1.0; 3]), Err(Error::NotPowerOfTwo(3)));
    }

    #[test]
    fn fwht_is_scaled_involution() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..=10 {
            let orig: Vec<Complex64> = (0..1 << n).map(|_| c(rng.random(), rng.random())).collect();
            let mut v = orig.clone();
            fwht(&mut v).unwrap();
            fwht(&mut v).unwrap();
            for (a, b) in v.iter().zip(&orig) {
                assert!((a - b * (1 << n) as f64).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn phase_order_roots() {
        assert_eq!(PhaseOrder::new(0), Err(Error::InvalidPhaseOrder(0)));
        for m in 1..=24 {
            let m = pm(m);
            let z = m.zeta();
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powu(m.get()) - c(1.0, 0.0)).norm() < 1e-12);
            assert!((m.zeta_pow(-1) - z.conj()).norm() < 1e-12);
        }
        assert_eq!(pm(4).zeta(), c(0.0, 1.0));
        assert_eq!(pm(2).zeta(), c(-1.0, 0.0));
    }

    #[test]
    fn m_hadamard_examples() {
        let zero = BooleanFunction::zero(4).unwrap();
        let h = m_hadamard(&zero, PhaseOrder::WALSH, false);
        assert!((h.get(0) - c(4.0, 0.0)).norm() < 1e-12);
        assert!(h.values[1..].iter().all(|v| v.norm() < 1e-12));

        // n = 1, m = 4: H(0) = (1 + i)/sqrt2, H(1) = (1 - i)/sqrt2 by direct summation.
        let h = m_hadamard(&BooleanFunction::zero(1).unwrap(), PhaseOrder::NEGA, false);
        let r = 2f64.sqrt().recip();
        assert!((h.get(0) - c(r, r)).norm() < 1e-12);
        assert!((h.get(1) - c(r, -r)).norm() < 1e-12);

        let f = BooleanFunction::from_anf(6, "x1x3 + x1x4").unwrap();
        assert!(nega_hadamard(&f).is_flat());
        assert!(!walsh(&f).is_flat());
    }

    #[test]
    fn conjugate_transform_is_pointwise_conjugate_of_the_phases() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in [3, 4, 5, 7] {
            let f = BooleanFunction::random(5, &mut rng).unwrap();
            let h = m_hadamard(&f, pm(m), false);
            let hc = m_hadamard(&f, pm(m), true);
            // f is real, so conj-transform(w) = conj(H(w)).
            for (a, b) in h.values.iter().zip(&hc.values) {
                assert!((a.conj() - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let zero = BooleanFunction::zero(3).unwrap();
        assert_eq!(invert_m_hadamard(&walsh(&zero)).unwrap(), zero);

        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = BooleanFunction::random(4, &mut rng).unwrap();
        let mut spec = m_hadamard(&f, pm(5), false);
        assert_eq!(invert_m_hadamard(&spec).unwrap(), f);
        assert_eq!(invert_m_hadamard(&m_hadamard(&f, pm(5), true)).unwrap(), f);
        let k = spec.values.iter().position(|v| v.norm() > 0.1).unwrap();
        spec.values[k] = Complex64::new(0.0, 0.0);
        assert!(matches!(invert_m_hadamard(&spec), Err(Error::ReconstructionNotBoolean { .. })));

        let auto = m_autocorrelation(&f, pm(5));
        assert!(matches!(invert_m_hadamard(&auto), Err(Error::WrongSpectrumKind(_))));
    }

    #[test]
    fn crosscorrelation_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = BooleanFunction::random(4, &mut rng).unwrap();
        let g = BooleanFunction::random(4, &mut rng).unwrap();
        for m in 1..=8 {
            let cfg = m_crosscorrelation(&f, &g, pm(m)).unwrap();
            let expected: f64 = (0..16).map(|x| f.sign(x) * g.sign(x)).sum();
            assert!((cfg.get(0) - c(expected, 0.0)).norm() < 1e-12);
            let auto = m_autocorrelation(&f, pm(m));
            assert_eq!(auto.kind, SpectrumKind::MAuto);
            assert!((auto.get(0) - c(16.0, 0.0)).norm() < 1e-12);
            assert!(auto.values.iter().all(|v| v.norm() <= 16.0 + 1e-9));
        }
        // m = 4 is the nega-crosscorrelation with (-1)^(x.y).
        let nega = m_crosscorrelation(&f, &g, PhaseOrder::NEGA).unwrap();
        for y in 0..16 {
            let direct: f64 = (0..16).map(|x| f.sign(x) * g.sign(x ^ y) * parity(x, y)).sum();
            assert!((nega.get(y) - c(direct, 0.0)).norm() < 1e-12);
        }
        assert!(m_crosscorrelation(&f, &BooleanFunction::zero(3).unwrap(), pm(1)).is_err());
    }

    #[test]
    fn bent_autocorrelation_vanishes_off_origin() {
        let f = BooleanFunction::from_anf(4, "x1x2 + x3x4").unwrap();
        let via = crosscorr_via_spectra(&f, &f, PhaseOrder::WALSH).unwrap();
        assert!((via.get(0) - c(16.0, 0.0)).norm() < 1e-9);
        assert!(via.values[1..].iter().all(|v| v.norm() < 1e-9));
    }

    #[test]
    fn m2_is_walsh_shifted_by_all_ones() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 1..=6 {
            let f = BooleanFunction::random(n, &mut rng).unwrap();
            let h2 = m_hadamard(&f, pm(2), false);
            let w = walsh(&f);
            let ones = (1 << n) - 1;
            for x in 0..1 << n {
                assert!((h2.get(x) - w.get(x ^ ones)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn linear_closed_form_matches_definition() {
        for n in 1..=5 {
            for m in [1u32, 2, 3, 4, 5, 6, 8, 12] {
                for cvec in 0..1usize << n {
                    for d in [false, true] {
                        let lin = BooleanFunction::linear(n, cvec).unwrap();
                        let lin = if d { lin.complement() } else { lin };
                        let h = m_hadamard(&lin, pm(m), false);
                        for u in 0..1 << n {
                            let closed = linear_m_hadamard_closed_form(n, cvec, d, pm(m), u);
                            assert!((closed - h.get(u)).norm() < 1e-9, "n={n} m={m} c={cvec} u={u}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn printed_linear_form_differs_from_definition() {
        // The factor zeta^(n/2 - wt(u + c)) agrees with the definition only when
        // wt(u + c) = 0; at n = 1, m = 4, u = 1 the two are antipodal-ish.
        let m = PhaseOrder::NEGA;
        let t = PI / 4.0;
        let printed = |u: usize| {
            let w = weight(u) as i32;
            let mag = 2f64.sqrt() * t.cos() * t.tan().powi(w);
            Complex64::new(0.0, -1.0).powi(w)
                * Complex64::from_polar(mag, 2.0 * PI * (0.5 - f64::from(w)) / 4.0)
        };
        let h = m_hadamard(&BooleanFunction::zero(1).unwrap(), m, false);
        assert!((printed(0) - h.get(0)).norm() < 1e-12);
        let gap = (printed(1) - h.get(1)).norm();
        println!("printed closed form at n=1, m=4, u=1: {} vs definition {} (gap {gap:.6})", printed(1), h.get(1));
        assert!(gap > 1.0);
        assert!((linear_m_hadamard_closed_form(1, 0, false, m, 1) - h.get(1)).norm() < 1e-12);
    }

    #[test]
    fn classify_examples() {
        let f = BooleanFunction::from_anf(4, "x1x2 + x3x4").unwrap();
        let cl = classify(&f, &[pm(1), pm(4)]);
        assert!(cl.bent && !cl.negabent && cl.verdicts_agree());
        let g = f.xor(&BooleanFunction::symmetric_s2(4).unwrap()).unwrap();
        let cl = classify(&g, &[pm(1), pm(4)]);
        assert!(cl.negabent && cl.verdicts_agree());

        for n in [2, 4, 6] {
            for cvec in [0usize, 1, (1 << n) - 1, 0b10 % (1 << n)] {
                let lin = BooleanFunction::linear(n, cvec).unwrap();
                let cl = classify(&lin, &[pm(4)]);
                assert!(cl.negabent && !cl.bent && cl.affine, "n={n} c={cvec}");
            }
        }

        let f = BooleanFunction::from_anf(6, "x1x3 + x1x4").unwrap();
        let cl = classify(&f, &[pm(1), pm(3), pm(4), pm(8)]);
        assert!(cl.negabent && !cl.bent && !cl.affine);
        assert!(cl.verdict(4).unwrap().flat && cl.verdict(4).unwrap().autocorrelation_vanishes);
        assert!(cl.verdicts_agree());
    }

    #[test]
    fn spectrum_kind_serializes_snake_case() {
        assert_eq!(SpectrumKind::ConjMHadamard.as_str(), "conj_m_hadamard");
    }
}
