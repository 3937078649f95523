//! Dense state-vector simulator with the handful of gates the m-Forrelation
//! circuits use. Qubit 0 is the top wire and the most significant index bit.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::boolfun::{format_bits, weight, BooleanFunction};
use crate::error::{Error, Result};
use crate::spectra::PhaseOrder;

pub const MAX_QUBITS: usize = 24;

/// Name of the pseudorandom generator behind every sampling call.
pub const RNG_NAME: &str = "chacha8-v1";

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateName {
    H,
    X,
    Omega(PhaseOrder),
    OmegaConj(PhaseOrder),
    SPhase(PhaseOrder),
}

impl fmt::Display for GateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateName::H => write!(f, "H"),
            GateName::X => write!(f, "X"),
            GateName::Omega(m) => write!(f, "Omega({m})"),
            GateName::OmegaConj(m) => write!(f, "OmegaConj({m})"),
            GateName::SPhase(m) => write!(f, "SPhase({m})"),
        }
    }
}

/// Single-qubit gate. `cols[j]` is the image of `|j>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gate1Q {
    pub name: GateName,
    pub dagger: bool,
    pub cols: [[Complex64; 2]; 2],
}

impl Gate1Q {
    pub fn new(name: GateName) -> Self {
        let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let cols = match name {
            GateName::H => [[r, r], [r, -r]],
            GateName::X => [[ZERO, ONE], [ONE, ZERO]],
            GateName::Omega(m) => {
                let z = m.zeta() * FRAC_1_SQRT_2;
                [[r, r], [z, -z]]
            }
            GateName::OmegaConj(m) => {
                let z = m.zeta().conj() * FRAC_1_SQRT_2;
                [[r, r], [z, -z]]
            }
            GateName::SPhase(m) => [[ONE, ZERO], [ZERO, m.zeta()]],
        };
        Self { name, dagger: false, cols }
    }

    pub fn h() -> Self {
        Self::new(GateName::H)
    }

    pub fn x() -> Self {
        Self::new(GateName::X)
    }

    pub fn omega(m: PhaseOrder) -> Self {
        Self::new(GateName::Omega(m))
    }

    pub fn omega_conj(m: PhaseOrder) -> Self {
        Self::new(GateName::OmegaConj(m))
    }

    pub fn s_phase(m: PhaseOrder) -> Self {
        Self::new(GateName::SPhase(m))
    }

    /// Entry in row `r`, column `c`.
    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.cols[c][r]
    }

    pub fn adjoint(&self) -> Self {
        let c = &self.cols;
        Self {
            name: self.name,
            dagger: !self.dagger,
            cols: [[c[0][0].conj(), c[1][0].conj()], [c[0][1].conj(), c[1][1].conj()]],
        }
    }

    /// `self * other` as matrices (apply `other` first).
    pub fn compose(&self, other: &Self) -> [[Complex64; 2]; 2] {
        let mut out = [[ZERO; 2]; 2];
        for (c, col) in out.iter_mut().enumerate() {
            for (r, v) in col.iter_mut().enumerate() {
                *v = self.entry(r, 0) * other.entry(0, c) + self.entry(r, 1) * other.entry(1, c);
            }
        }
        out
    }

    /// Largest entry deviation of `G G^dagger` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let p = self.compose(&self.adjoint());
        let mut err: f64 = 0.0;
        for (c, col) in p.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                let want = if r == c { ONE } else { ZERO };
                err = err.max((v - want).norm());
            }
        }
        err
    }
}

/// One step of a circuit. `Branch` runs its body only where `control == value`.
#[derive(Clone, Debug)]
pub enum Op {
    Layer { gate: Gate1Q, qubits: Vec<usize> },
    PhaseOracle { f: BooleanFunction, qubits: Vec<usize> },
    PairwiseCz { a: Vec<usize>, b: Vec<usize> },
    Branch { control: usize, value: bool, body: Vec<Op> },
}

impl Op {
    pub fn layer(gate: Gate1Q, qubits: impl Into<Vec<usize>>) -> Self {
        Op::Layer { gate, qubits: qubits.into() }
    }

    pub fn oracle(f: &BooleanFunction, qubits: impl Into<Vec<usize>>) -> Self {
        Op::PhaseOracle { f: f.clone(), qubits: qubits.into() }
    }

    fn touches(&self, q: usize) -> bool {
        match self {
            Op::Layer { qubits, .. } | Op::PhaseOracle { qubits, .. } => qubits.contains(&q),
            Op::PairwiseCz { a, b } => a.contains(&q) || b.contains(&q),
            Op::Branch { control, body, .. } => *control == q || body.iter().any(|o| o.touches(q)),
        }
    }
}

// Basis indices selected by a stack of branch conditions.
#[derive(Clone, Copy, Default)]
struct Cond {
    ones: usize,
    zeros: usize,
}

impl Cond {
    fn holds(self, idx: usize) -> bool {
        idx & self.ones == self.ones && idx & self.zeros == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    q: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>` on `q` qubits.
    pub fn new(q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::Invalid("a register needs at least one qubit".into()));
        }
        if q > MAX_QUBITS {
            return Err(Error::RegisterTooLarge(q));
        }
        let mut amps = vec![ZERO; 1 << q];
        amps[0] = ONE;
        Ok(Self { q, amps })
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let q = len.trailing_zeros() as usize;
        if q > MAX_QUBITS {
            return Err(Error::RegisterTooLarge(q));
        }
        let s = Self { q, amps };
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::Invalid(format!("amplitudes have squared norm {norm}, expected 1")));
        }
        Ok(s)
    }

    pub fn qubits(&self) -> usize {
        self.q
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, idx: usize) -> Complex64 {
        self.amps[idx]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn bit(&self, qubit: usize) -> usize {
        1 << (self.q - 1 - qubit)
    }

    fn check_qubits(&self, qubits: &[usize]) -> Result<()> {
        let mut seen = 0usize;
        for &k in qubits {
            if k >= self.q {
                return Err(Error::QubitOutOfRange { qubit: k, q: self.q });
            }
            if seen >> k & 1 == 1 {
                return Err(Error::DuplicateQubit(k));
            }
            seen |= 1 << k;
        }
        Ok(())
    }

    /// Restriction of basis index `idx` to `qubits`, first listed qubit as MSB.
    fn gather(&self, idx: usize, qubits: &[usize]) -> usize {
        qubits.iter().fold(0, |acc, &k| acc << 1 | usize::from(idx & self.bit(k) != 0))
    }

    fn scatter(&self, x: usize, qubits: &[usize]) -> usize {
        let n = qubits.len();
        qubits
            .iter()
            .enumerate()
            .filter(|(i, _)| x >> (n - 1 - i) & 1 == 1)
            .fold(0, |acc, (_, &k)| acc | self.bit(k))
    }

    pub fn apply_gate_layer(&mut self, gate: &Gate1Q, qubits: &[usize]) -> Result<()> {
        self.check_qubits(qubits)?;
        self.gate_layer(gate, qubits, Cond::default());
        Ok(())
    }

    fn gate_layer(&mut self, gate: &Gate1Q, qubits: &[usize], cond: Cond) {
        let [[a, c], [b, d]] = gate.cols;
        for &k in qubits {
            let bit = self.bit(k);
            for i in 0..self.amps.len() {
                if i & bit != 0 || !cond.holds(i) {
                    continue;
                }
                let (x0, x1) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = a * x0 + b * x1;
                self.amps[i | bit] = c * x0 + d * x1;
            }
        }
    }

    /// Multiplies each amplitude by `(-1)^f(x)`, `x` read off `qubits`.
    pub fn apply_phase_oracle(&mut self, f: &BooleanFunction, qubits: &[usize]) -> Result<()> {
        self.check_oracle(f, qubits)?;
        self.phase_oracle(f, qubits, Cond::default());
        Ok(())
    }

    fn check_oracle(&self, f: &BooleanFunction, qubits: &[usize]) -> Result<()> {
        if qubits.len() != f.arity() {
            return Err(Error::RegisterMismatch { expected: f.arity(), got: qubits.len() });
        }
        self.check_qubits(qubits)
    }

    fn phase_oracle(&mut self, f: &BooleanFunction, qubits: &[usize], cond: Cond) {
        for i in 0..self.amps.len() {
            if cond.holds(i) && f.eval(self.gather(i, qubits)) {
                self.amps[i] = -self.amps[i];
            }
        }
    }

    /// `|x>|t> -> |x>|t xor f(x)>` with an explicit target qubit.
    pub fn apply_xor_oracle(&mut self, f: &BooleanFunction, qubits: &[usize], target: usize) -> Result<()> {
        self.check_oracle(f, qubits)?;
        let mut all = qubits.to_vec();
        all.push(target);
        self.check_qubits(&all)?;
        let tb = self.bit(target);
        for i in 0..self.amps.len() {
            if i & tb == 0 && f.eval(self.gather(i, qubits)) {
                self.amps.swap(i, i | tb);
            }
        }
        Ok(())
    }

    /// Multiplies the amplitude of `|y>_a |x>_b` by `(-1)^(y.x)`.
    pub fn apply_pairwise_cz(&mut self, a: &[usize], b: &[usize]) -> Result<()> {
        self.check_cz(a, b)?;
        self.pairwise_cz(a, b, Cond::default());
        Ok(())
    }

    fn check_cz(&self, a: &[usize], b: &[usize]) -> Result<()> {
        if a.len() != b.len() {
            return Err(Error::RegisterMismatch { expected: a.len(), got: b.len() });
        }
        self.check_qubits(&[a, b].concat())
    }

    fn pairwise_cz(&mut self, a: &[usize], b: &[usize], cond: Cond) {
        let masks: Vec<usize> = a.iter().zip(b).map(|(&p, &q)| self.bit(p) | self.bit(q)).collect();
        for i in 0..self.amps.len() {
            if !cond.holds(i) {
                continue;
            }
            let odd = masks.iter().filter(|&&m| i & m == m).count() % 2 == 1;
            if odd {
                self.amps[i] = -self.amps[i];
            }
        }
    }

    /// Runs `body` on the subspace where `control` reads `value`.
    pub fn apply_branch(&mut self, control: usize, value: bool, body: &[Op]) -> Result<()> {
        self.run(&[Op::Branch { control, value, body: body.to_vec() }])
    }

    pub fn run(&mut self, ops: &[Op]) -> Result<()> {
        self.validate(ops)?;
        for op in ops {
            self.exec(op, Cond::default());
        }
        Ok(())
    }

    fn validate(&self, ops: &[Op]) -> Result<()> {
        for op in ops {
            match op {
                Op::Layer { qubits, .. } => self.check_qubits(qubits)?,
                Op::PhaseOracle { f, qubits } => self.check_oracle(f, qubits)?,
                Op::PairwiseCz { a, b } => self.check_cz(a, b)?,
                Op::Branch { control, body, .. } => {
                    self.check_qubits(&[*control])?;
                    if body.iter().any(|o| o.touches(*control)) {
                        return Err(Error::BranchTouchesControl(*control));
                    }
                    self.validate(body)?;
                }
            }
        }
        Ok(())
    }

    fn exec(&mut self, op: &Op, cond: Cond) {
        match op {
            Op::Layer { gate, qubits } => self.gate_layer(gate, qubits, cond),
            Op::PhaseOracle { f, qubits } => self.phase_oracle(f, qubits, cond),
            Op::PairwiseCz { a, b } => self.pairwise_cz(a, b, cond),
            Op::Branch { control, value, body } => {
                let bit = self.bit(*control);
                let inner = if *value {
                    Cond { ones: cond.ones | bit, ..cond }
                } else {
                    Cond { zeros: cond.zeros | bit, ..cond }
                };
                for o in body {
                    self.exec(o, inner);
                }
            }
        }
    }

    /// Replaces the all-zero content of `reg` with the Dicke state `D^n_k`.
    pub fn prepare_dicke(&mut self, reg: &[usize], k: usize) -> Result<()> {
        self.check_qubits(reg)?;
        let n = reg.len();
        if k > n {
            return Err(Error::InvalidDickeWeight { k, n });
        }
        let mask = self.scatter((1 << n) - 1, reg);
        let p0: f64 = self.amps.iter().enumerate().filter(|(i, _)| i & mask == 0).map(|(_, a)| a.norm_sqr()).sum();
        if (p0 - 1.0).abs() > 1e-9 {
            return Err(Error::NotZeroState(p0));
        }
        let patterns: Vec<usize> = (0..1usize << n).filter(|&x| weight(x) as usize == k).map(|x| self.scatter(x, reg)).collect();
        let scale = 1.0 / (patterns.len() as f64).sqrt();
        let mut out = vec![ZERO; self.amps.len()];
        for (i, a) in self.amps.iter().enumerate() {
            if i & mask == 0 && *a != ZERO {
                for &p in &patterns {
                    out[i | p] = a * scale;
                }
            }
        }
        self.amps = out;
        Ok(())
    }

    /// Marginal distribution of `qubits` in the computational basis.
    pub fn measure_distribution(&self, qubits: &[usize]) -> Result<MeasurementDistribution> {
        if qubits.is_empty() {
            return Err(Error::Invalid("measurement register is empty".into()));
        }
        self.check_qubits(qubits)?;
        let mut probs = vec![0.0; 1 << qubits.len()];
        for (i, a) in self.amps.iter().enumerate() {
            probs[self.gather(i, qubits)] += a.norm_sqr();
        }
        Ok(MeasurementDistribution { register: qubits.to_vec(), probs })
    }

    pub fn sample(&self, qubits: &[usize], shots: usize, seed: u64) -> Result<BTreeMap<usize, usize>> {
        Ok(self.measure_distribution(qubits)?.sample_counts(shots, seed))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementDistribution {
    pub register: Vec<usize>,
    /// Dense, indexed by outcome with the first register qubit as MSB.
    pub probs: Vec<f64>,
}

impl MeasurementDistribution {
    pub fn width(&self) -> usize {
        self.register.len()
    }

    pub fn prob(&self, outcome: usize) -> f64 {
        self.probs[outcome]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Outcomes with probability above `1e-12`, keyed by bitstring.
    pub fn to_map(&self) -> BTreeMap<String, f64> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 1e-12)
            .map(|(x, &p)| (format_bits(x, self.width()), p))
            .collect()
    }

    /// Inverse-CDF draws from a `ChaCha8Rng`.
    pub fn draw<R: Rng + ?Sized>(&self, shots: usize, rng: &mut R) -> Vec<usize> {
        let mut cdf = Vec::with_capacity(self.probs.len());
        let mut acc = 0.0;
        for p in &self.probs {
            acc += p.max(0.0);
            cdf.push(acc);
        }
        let last = cdf.iter().rposition(|_| true).unwrap_or(0);
        let top = self.probs.iter().rposition(|&p| p > 0.0).unwrap_or(last);
        (0..shots)
            .map(|_| {
                let u = rng.random::<f64>() * acc;
                cdf.partition_point(|&c| c <= u).min(top)
            })
            .collect()
    }

    pub fn sample_counts(&self, shots: usize, seed: u64) -> BTreeMap<usize, usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = BTreeMap::new();
        for x in self.draw(shots, &mut rng) {
            *counts.entry(x).or_insert(0) += 1;
        }
        counts
    }
}

impl Serialize for MeasurementDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MeasurementDistribution", 2)?;
        st.serialize_field("qubits", &self.register)?;
        st.serialize_field("probs", &self.to_map())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::{dot, parse_bits};

    fn pm(m: u32) -> PhaseOrder {
        PhaseOrder::new(m).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < tol)
    }

    fn random_state(q: usize, rng: &mut ChaCha8Rng) -> StateVector {
        let raw: Vec<Complex64> = (0..1 << q).map(|_| c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)).collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        StateVector::from_amplitudes(raw.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    // Up to a global phase.
    fn same_ray(a: &[Complex64], b: &[Complex64]) -> bool {
        let inner: Complex64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
        (inner.norm() - 1.0).abs() < 1e-9
    }

    #[test]
    fn gate_identities() {
        let r = FRAC_1_SQRT_2;
        assert!(close(&Gate1Q::omega(pm(1)).cols.concat(), &Gate1Q::h().cols.concat(), 1e-15));
        let s = |m| Gate1Q::s_phase(pm(m)).cols.concat();
        assert!(close(&s(1), &[ONE, ZERO, ZERO, ONE], 1e-15));
        assert!(close(&s(2), &[ONE, ZERO, ZERO, -ONE], 1e-15));
        assert!(close(&s(4), &[ONE, ZERO, ZERO, c(0.0, 1.0)], 1e-15));
        assert!(close(&s(8), &[ONE, ZERO, ZERO, c(r, r)], 1e-15));
        // Omega(2) maps |0> to |+> and |1> to (-|0> + |1>)/sqrt 2.
        let o2 = Gate1Q::omega(pm(2));
        assert!(close(&o2.cols[0], &[c(r, 0.0), c(r, 0.0)], 1e-15));
        assert!(close(&o2.cols[1], &[c(-r, 0.0), c(r, 0.0)], 1e-15));
        for m in 1..=12 {
            for g in [Gate1Q::omega(pm(m)), Gate1Q::omega_conj(pm(m)), Gate1Q::s_phase(pm(m))] {
                assert!(g.unitarity_error() < 1e-12, "{} not unitary", g.name);
            }
        }
        assert!(Gate1Q::x().unitarity_error() < 1e-15);
        assert_eq!(Gate1Q::omega(pm(3)).name.to_string(), "Omega(3)");
    }

    #[test]
    fn single_gate_actions() {
        let r = FRAC_1_SQRT_2;
        let mut s = StateVector::new(1).unwrap();
        s.apply_gate_layer(&Gate1Q::h(), &[0]).unwrap();
        assert!(close(s.amplitudes(), &[c(r, 0.0), c(r, 0.0)], 1e-15));

        let mut one = StateVector::from_amplitudes(vec![ZERO, ONE]).unwrap();
        one.apply_gate_layer(&Gate1Q::omega(PhaseOrder::NEGA), &[0]).unwrap();
        assert!(close(one.amplitudes(), &[c(0.0, r), c(0.0, -r)], 1e-15));
    }

    #[test]
    fn adjoint_layers_undo() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for m in 1..=8 {
            let start = random_state(3, &mut rng);
            for g in [Gate1Q::omega(pm(m)), Gate1Q::omega_conj(pm(m))] {
                let mut s = start.clone();
                s.apply_gate_layer(&g, &[0, 1, 2]).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() < 1e-9);
                s.apply_gate_layer(&g.adjoint(), &[2, 0, 1]).unwrap();
                assert!(close(s.amplitudes(), start.amplitudes(), 1e-12));
            }
        }
    }

    #[test]
    fn layer_errors() {
        let mut s = StateVector::new(3).unwrap();
        assert_eq!(s.apply_gate_layer(&Gate1Q::h(), &[3]), Err(Error::QubitOutOfRange { qubit: 3, q: 3 }));
        assert_eq!(s.apply_gate_layer(&Gate1Q::h(), &[1, 1]), Err(Error::DuplicateQubit(1)));
        assert_eq!(StateVector::new(25), Err(Error::RegisterTooLarge(25)));
        assert!(StateVector::new(0).is_err());
    }

    #[test]
    fn omega_layer_realizes_tensor_formula() {
        // Omega_m^{(x)n} sum a_x |x> = 2^{-n/2} sum_x a_x sum_y (-1)^{x.y} zeta^{wt x} |y>
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for m in [1, 3, 4, 6] {
            let n = 3;
            let s0 = random_state(n, &mut rng);
            let mut s = s0.clone();
            s.apply_gate_layer(&Gate1Q::omega(pm(m)), &[0, 1, 2]).unwrap();
            let want: Vec<Complex64> = (0..1 << n)
                .map(|y| {
                    (0..1 << n)
                        .map(|x| s0.amplitude(x) * pm(m).zeta_pow(i64::from(weight(x))) * if dot(x, y) { -1.0 } else { 1.0 })
                        .sum::<Complex64>()
                        / 8f64.sqrt()
                })
                .collect();
            assert!(close(s.amplitudes(), &want, 1e-12));
        }
    }

    #[test]
    fn s_phase_layer_multiplies_by_weight_phase() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let s0 = random_state(4, &mut rng);
        let mut s = s0.clone();
        s.apply_gate_layer(&Gate1Q::s_phase(pm(5)), &[0, 1, 2, 3]).unwrap();
        for x in 0..16 {
            assert!((s.amplitude(x) - s0.amplitude(x) * pm(5).zeta_pow(i64::from(weight(x)))).norm() < 1e-12);
        }
    }

    #[test]
    fn phase_oracle_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let s0 = random_state(3, &mut rng);
        let mut s = s0.clone();
        s.apply_phase_oracle(&BooleanFunction::zero(3).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(s, s0);
        s.apply_phase_oracle(&BooleanFunction::one(3).unwrap(), &[0, 1, 2]).unwrap();
        assert!(close(s.amplitudes(), &s0.amplitudes().iter().map(|a| -a).collect::<Vec<_>>(), 1e-15));
        // Register order decides which qubit is x1.
        let x1 = BooleanFunction::linear(2, 0b10).unwrap();
        let mut t = StateVector::new(3).unwrap();
        t.apply_gate_layer(&Gate1Q::x(), &[2]).unwrap();
        t.apply_phase_oracle(&x1, &[2, 0]).unwrap();
        assert_eq!(t.amplitude(0b001), -ONE);
        assert_eq!(
            s.apply_phase_oracle(&x1, &[0]),
            Err(Error::RegisterMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn explicit_ancilla_matches_elided_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for i in 0..50 {
            let n = 1 + i % 5;
            let f = BooleanFunction::random(n, &mut rng).unwrap();
            let s0 = random_state(n, &mut rng);
            let mut elided = s0.clone();
            let reg: Vec<usize> = (0..n).collect();
            elided.apply_phase_oracle(&f, &reg).unwrap();

            // Append |-> as the last qubit.
            let r = FRAC_1_SQRT_2;
            let amps: Vec<Complex64> = s0.amplitudes().iter().flat_map(|a| [a * r, -a * r]).collect();
            let mut full = StateVector::from_amplitudes(amps).unwrap();
            full.apply_xor_oracle(&f, &reg, n).unwrap();
            let expect: Vec<Complex64> = elided.amplitudes().iter().flat_map(|a| [a * r, -a * r]).collect();
            assert!(same_ray(full.amplitudes(), &expect));
        }
    }

    #[test]
    fn branch_is_controlled_gate() {
        let body = [Op::layer(Gate1Q::x(), [1])];
        let mut s = StateVector::new(2).unwrap();
        s.apply_branch(0, false, &body).unwrap();
        assert_eq!(s.amplitude(0b01), ONE);
        let mut t = StateVector::from_amplitudes(vec![ZERO, ZERO, ONE, ZERO]).unwrap();
        t.apply_branch(0, false, &body).unwrap();
        assert_eq!(t.amplitude(0b10), ONE);
        assert_eq!(s.apply_branch(0, true, &[Op::layer(Gate1Q::h(), [0])]), Err(Error::BranchTouchesControl(0)));
    }

    #[test]
    fn complementary_branches_compose() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        let f = BooleanFunction::random(2, &mut rng).unwrap();
        let body = vec![Op::layer(Gate1Q::omega(pm(3)), [1, 2]), Op::oracle(&f, [2, 1])];
        let s0 = random_state(3, &mut rng);
        let mut a = s0.clone();
        a.apply_branch(0, false, &body).unwrap();
        a.apply_branch(0, true, &body).unwrap();
        let mut b = s0;
        b.run(&body).unwrap();
        assert!(close(a.amplitudes(), b.amplitudes(), 1e-12));
    }

    #[test]
    fn nested_branches() {
        // Toffoli from two nested branches.
        for input in 0..8usize {
            let mut s = StateVector::new(3).unwrap();
            let flips: Vec<usize> = (0..3).filter(|&k| input >> (2 - k) & 1 == 1).collect();
            s.apply_gate_layer(&Gate1Q::x(), &flips).unwrap();
            let inner = Op::Branch { control: 1, value: true, body: vec![Op::layer(Gate1Q::x(), [2])] };
            s.apply_branch(0, true, &[inner]).unwrap();
            let want = if input >> 1 == 0b11 { input ^ 1 } else { input };
            assert_eq!(s.amplitude(want), ONE);
        }
    }

    #[test]
    fn pairwise_cz_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        // n = 1 is plain CZ.
        let s0 = random_state(2, &mut rng);
        let mut s = s0.clone();
        s.apply_pairwise_cz(&[0], &[1]).unwrap();
        let a = s0.amplitudes();
        assert!(close(s.amplitudes(), &[a[0], a[1], a[2], -a[3]], 1e-15));
        for n in 1..=4 {
            let s0 = random_state(2 * n, &mut rng);
            let a: Vec<usize> = (0..n).collect();
            let b: Vec<usize> = (n..2 * n).collect();
            let mut cz = s0.clone();
            cz.apply_pairwise_cz(&a, &b).unwrap();
            let ip = BooleanFunction::from_fn(2 * n, |z| dot(z >> n, z & ((1 << n) - 1))).unwrap();
            let mut or = s0.clone();
            or.apply_phase_oracle(&ip, &[a.clone(), b.clone()].concat()).unwrap();
            assert!(close(cz.amplitudes(), or.amplitudes(), 1e-15));
            // y = 0 rows are untouched.
            for x in 0..1 << n {
                assert_eq!(cz.amplitude(x), s0.amplitude(x));
            }
        }
        let mut s = StateVector::new(3).unwrap();
        assert!(s.apply_pairwise_cz(&[0, 1], &[2]).is_err());
        assert_eq!(s.apply_pairwise_cz(&[0], &[0]), Err(Error::DuplicateQubit(0)));
    }

    #[test]
    fn dicke_examples() {
        let mut s = StateVector::new(3).unwrap();
        s.prepare_dicke(&[0, 1, 2], 0).unwrap();
        assert_eq!(s.amplitude(0), ONE);

        let mut s = StateVector::new(3).unwrap();
        s.prepare_dicke(&[0, 1, 2], 1).unwrap();
        let r = 1.0 / 3f64.sqrt();
        for x in 0..8 {
            let want = if [0b100, 0b010, 0b001].contains(&x) { r } else { 0.0 };
            assert!((s.amplitude(x) - c(want, 0.0)).norm() < 1e-15);
        }
        for n in 1..=6usize {
            for k in 0..=n {
                let mut s = StateVector::new(n).unwrap();
                let reg: Vec<usize> = (0..n).collect();
                s.prepare_dicke(&reg, k).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
                for x in 0..1 << n {
                    assert_eq!(s.amplitude(x).norm() > 0.0, weight(x) as usize == k);
                }
            }
        }
        let mut busy = StateVector::new(2).unwrap();
        busy.apply_gate_layer(&Gate1Q::h(), &[1]).unwrap();
        assert!(matches!(busy.prepare_dicke(&[1], 1), Err(Error::NotZeroState(_))));
        // Only the listed register has to be clear.
        busy.prepare_dicke(&[0], 1).unwrap();
        assert!((busy.amplitude(0b10).norm() - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(busy.prepare_dicke(&[0], 2), Err(Error::InvalidDickeWeight { k: 2, n: 1 }));
    }

    #[test]
    fn measurement_examples() {
        let mut s = StateVector::new(1).unwrap();
        s.apply_gate_layer(&Gate1Q::h(), &[0]).unwrap();
        let d = s.measure_distribution(&[0]).unwrap();
        assert!((d.prob(0) - 0.5).abs() < 1e-15 && (d.prob(1) - 0.5).abs() < 1e-15);

        // Bell pair, first qubit alone is uniform.
        let r = FRAC_1_SQRT_2;
        let bell = StateVector::from_amplitudes(vec![c(r, 0.0), ZERO, ZERO, c(r, 0.0)]).unwrap();
        let d = bell.measure_distribution(&[0]).unwrap();
        assert!((d.prob(0) - 0.5).abs() < 1e-15);
        let d = bell.measure_distribution(&[1, 0]).unwrap();
        assert_eq!(d.to_map().keys().cloned().collect::<Vec<_>>(), ["00", "11"]);
        assert!((d.total() - 1.0).abs() < 1e-12);
        assert!(bell.measure_distribution(&[]).is_err());
    }

    #[test]
    fn sampling_is_seeded_and_within_bounds() {
        let mut s = StateVector::new(2).unwrap();
        s.apply_gate_layer(&Gate1Q::h(), &[0, 1]).unwrap();
        let a = s.sample(&[0, 1], 4096, 0).unwrap();
        assert_eq!(a, s.sample(&[0, 1], 4096, 0).unwrap());
        assert_eq!(a.values().sum::<usize>(), 4096);
        for k in 0..4 {
            let freq = a[&k] as f64 / 4096.0;
            assert!((freq - 0.25).abs() <= 0.05, "outcome {k}: {freq}");
        }
        assert_ne!(a, s.sample(&[0, 1], 4096, 1).unwrap());
    }

    #[test]
    fn sampling_never_picks_zero_probability_outcomes() {
        let mut s = StateVector::new(3).unwrap();
        s.apply_gate_layer(&Gate1Q::h(), &[1]).unwrap();
        let counts = s.sample(&[0, 1, 2], 1000, 7).unwrap();
        let keys: Vec<usize> = counts.keys().copied().collect();
        assert_eq!(keys, [parse_bits("000").unwrap(), parse_bits("010").unwrap()]);
    }

    #[test]
    fn distribution_json_shape() {
        let mut s = StateVector::new(2).unwrap();
        s.apply_gate_layer(&Gate1Q::h(), &[1]).unwrap();
        let d = s.measure_distribution(&[0, 1]).unwrap();
        let map = d.to_map();
        assert_eq!(map.len(), 2);
        assert!((map["00"] - 0.5).abs() < 1e-15 && (map["01"] - 0.5).abs() < 1e-15);
    }
}
