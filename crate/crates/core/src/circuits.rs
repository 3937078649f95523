//! End-to-end circuits on the state-vector simulator: generalized
//! Deutsch-Jozsa, the 3- and 2-query m-Forrelation circuits, the full-spectrum
//! crosscorrelation sampler and hidden-shift recovery.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::boolfun::{dot, format_bits, BooleanFunction};
use crate::error::{Error, Result};
use crate::gf2::Gf2System;
use crate::qsim::{Gate1Q, MeasurementDistribution, Op, StateVector, MAX_QUBITS};
use crate::spectra::PhaseOrder;

/// Candidates are truth-table checked only up to this many.
pub const MAX_VERIFIED_SOLUTIONS: usize = 1 << 12;

fn same_arity(fs: &[&BooleanFunction]) -> Result<usize> {
    let n = fs[0].arity();
    match fs.iter().find(|f| f.arity() != n) {
        Some(f) => Err(Error::ArityMismatch { left: n, right: f.arity() }),
        None => Ok(n),
    }
}

fn range(from: usize, to: usize) -> Vec<usize> {
    (from..to).collect()
}

/// Per-qubit gate orders `d_1..d_n` of a generalized Deutsch-Jozsa run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DJPlan {
    d: Vec<PhaseOrder>,
}

impl DJPlan {
    pub fn new(d: &[u32]) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::Invalid("plan needs at least one gate order".into()));
        }
        Ok(Self { d: d.iter().map(|&m| PhaseOrder::new(m)).collect::<Result<_>>()? })
    }

    pub fn uniform(n: usize, m: PhaseOrder) -> Self {
        Self { d: vec![m; n] }
    }

    pub fn orders(&self) -> &[PhaseOrder] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }
}

/// `H -> U_f -> Omega_{d_i} on qubit i -> measure`.
pub fn run_generalized_dj(f: &BooleanFunction, plan: &DJPlan) -> Result<MeasurementDistribution> {
    let n = f.arity();
    if plan.len() != n {
        return Err(Error::RegisterMismatch { expected: n, got: plan.len() });
    }
    let reg = range(0, n);
    let mut ops = vec![Op::layer(Gate1Q::h(), reg.clone()), Op::oracle(f, reg.clone())];
    ops.extend(plan.orders().iter().enumerate().map(|(i, &m)| Op::layer(Gate1Q::omega(m), [i])));
    let mut s = StateVector::new(n)?;
    s.run(&ops)?;
    s.measure_distribution(&reg)
}

/// `P(y) = 2^(-2n) |sum_x (-1)^(f(x) + x.y) prod_i zeta_{d_i}^(x_i)|^2`.
pub fn generalized_dj_closed_form(f: &BooleanFunction, plan: &DJPlan) -> Result<Vec<f64>> {
    let n = f.arity();
    if plan.len() != n {
        return Err(Error::RegisterMismatch { expected: n, got: plan.len() });
    }
    let phase = |x: usize| -> Complex64 {
        plan.orders()
            .iter()
            .enumerate()
            .filter(|(i, _)| x >> (n - 1 - i) & 1 == 1)
            .map(|(_, m)| m.zeta())
            .product()
    };
    let phases: Vec<Complex64> = (0..f.len()).map(phase).collect();
    let norm = (f.len() * f.len()) as f64;
    Ok((0..f.len())
        .map(|y| {
            let amp: Complex64 = (0..f.len()).map(|x| phases[x] * f.sign(x) * if dot(x, y) { -1.0 } else { 1.0 }).sum();
            amp.norm_sqr() / norm
        })
        .collect())
}

fn mforr_3q_ops(f1: &BooleanFunction, f2: &BooleanFunction, f3: &BooleanFunction, m: PhaseOrder, reg: &[usize]) -> Vec<Op> {
    vec![
        Op::layer(Gate1Q::h(), reg),
        Op::oracle(f2, reg),
        Op::layer(Gate1Q::omega(m), reg),
        Op::oracle(f1, reg),
        Op::layer(Gate1Q::h(), reg),
        Op::oracle(f3, reg),
        Op::layer(Gate1Q::omega_conj(m), reg),
    ]
}

/// 3-query m-Forrelation circuit; `P(0^n) = |Phi|^2`.
pub fn run_mforr_3q(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    m: PhaseOrder,
) -> Result<MeasurementDistribution> {
    let n = same_arity(&[f1, f2, f3])?;
    let reg = range(0, n);
    let mut s = StateVector::new(n)?;
    s.run(&mforr_3q_ops(f1, f2, f3, m, &reg))?;
    s.measure_distribution(&reg)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoQueryOutcome {
    /// Probability of reading `|0>` on the driving qubit.
    pub p_zero: f64,
    /// All `n + 1` qubits, driving qubit first.
    pub distribution: MeasurementDistribution,
}

/// 2-query m-Forrelation circuit; `P(driving = 0) = (1 + Re Phi) / 2`.
pub fn run_mforr_2q(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    m: PhaseOrder,
) -> Result<TwoQueryOutcome> {
    let n = same_arity(&[f1, f2, f3])?;
    let reg = range(1, n + 1);
    let ops = [
        Op::layer(Gate1Q::h(), range(0, n + 1)),
        Op::Branch {
            control: 0,
            value: false,
            body: vec![
                Op::oracle(f2, reg.clone()),
                Op::layer(Gate1Q::omega(m), reg.clone()),
                Op::oracle(f1, reg.clone()),
                Op::layer(Gate1Q::h(), reg.clone()),
            ],
        },
        Op::Branch {
            control: 0,
            value: true,
            body: vec![Op::layer(Gate1Q::s_phase(m), reg.clone()), Op::oracle(f3, reg.clone())],
        },
        Op::layer(Gate1Q::h(), [0]),
    ];
    let mut s = StateVector::new(n + 1)?;
    s.run(&ops)?;
    let p_zero = s.measure_distribution(&[0])?.prob(0);
    Ok(TwoQueryOutcome { p_zero, distribution: s.measure_distribution(&range(0, n + 1))? })
}

/// Preparation of the `y` register of the spectrum sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerPrep {
    Hadamard,
    Dicke(usize),
}

/// Full-spectrum crosscorrelation sampler on `2n` qubits, `y` register first.
/// With Hadamard preparation `P(|y>|0^n>) = 2^(-3n) |C_{f,g}(y)|^2`.
pub fn run_spectrum_sampler(
    f: &BooleanFunction,
    g: &BooleanFunction,
    m: PhaseOrder,
    prep: SamplerPrep,
) -> Result<MeasurementDistribution> {
    let n = same_arity(&[f, g])?;
    if 2 * n > MAX_QUBITS {
        return Err(Error::RegisterTooLarge(2 * n));
    }
    let a = range(0, n);
    let b = range(n, 2 * n);
    let mut s = StateVector::new(2 * n)?;
    match prep {
        SamplerPrep::Hadamard => s.apply_gate_layer(&Gate1Q::h(), &a)?,
        SamplerPrep::Dicke(k) => s.prepare_dicke(&a, k)?,
    }
    s.run(&[
        Op::layer(Gate1Q::h(), b.clone()),
        Op::oracle(f, b.clone()),
        Op::layer(Gate1Q::omega(m), b.clone()),
        Op::PairwiseCz { a: a.clone(), b: b.clone() },
        Op::layer(Gate1Q::h(), b.clone()),
        Op::oracle(g, b.clone()),
        Op::layer(Gate1Q::omega_conj(m), b.clone()),
    ])?;
    s.measure_distribution(&range(0, 2 * n))
}

/// Reading of a bent hidden-shift distribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ShiftInterpretation {
    /// Only `0^n` is observed.
    AllZeroOnly,
    /// One nonzero state carries all the probability.
    SingleNonzeroState { state: String },
    /// Some states are never observed.
    MissingState { missing: Vec<String> },
    Mixed,
}

impl ShiftInterpretation {
    pub fn of(dist: &MeasurementDistribution) -> Self {
        let tol = 1e-9;
        let w = dist.width();
        if let Some(z) = dist.probs.iter().position(|&p| (p - 1.0).abs() < tol) {
            return if z == 0 {
                ShiftInterpretation::AllZeroOnly
            } else {
                ShiftInterpretation::SingleNonzeroState { state: format_bits(z, w) }
            };
        }
        let missing: Vec<String> =
            dist.probs.iter().enumerate().filter(|(_, &p)| p < tol).map(|(z, _)| format_bits(z, w)).collect();
        if missing.is_empty() {
            ShiftInterpretation::Mixed
        } else {
            ShiftInterpretation::MissingState { missing }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BentShiftOutcome {
    pub distribution: MeasurementDistribution,
    pub interpretation: ShiftInterpretation,
}

/// `H -> U_g -> H -> U_dual(f) -> H -> measure`, for bent `f`.
pub fn run_bent_shift(f: &BooleanFunction, g: &BooleanFunction) -> Result<BentShiftOutcome> {
    let n = same_arity(&[f, g])?;
    let dual = f.dual()?;
    let reg = range(0, n);
    let mut s = StateVector::new(n)?;
    s.run(&[
        Op::layer(Gate1Q::h(), reg.clone()),
        Op::oracle(g, reg.clone()),
        Op::layer(Gate1Q::h(), reg.clone()),
        Op::oracle(&dual, reg.clone()),
        Op::layer(Gate1Q::h(), reg.clone()),
    ])?;
    let distribution = s.measure_distribution(&reg)?;
    let interpretation = ShiftInterpretation::of(&distribution);
    Ok(BentShiftOutcome { distribution, interpretation })
}

/// For `g(x) = f(x + b) + c.x + d`:
/// `P(z) = 2^(-2n) |sum_y (-1)^(dual(y + c) + dual(y) + y.(z + b))|^2`.
pub fn bent_shift_closed_form(f: &BooleanFunction, b: usize, c: usize) -> Result<Vec<f64>> {
    let dual = f.dual()?;
    let len = f.len();
    let mut v: Vec<i64> = (0..len).map(|y| if dual.eval(y ^ c) ^ dual.eval(y) { -1 } else { 1 }).collect();
    crate::spectra::fwht(&mut v)?;
    let norm = (len * len) as f64;
    Ok((0..len).map(|z| (v[z ^ b] * v[z ^ b]) as f64 / norm).collect())
}

/// Solutions of `z.u = b` over the collected samples `(b, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSolutionSet {
    pub n: usize,
    pub offset: usize,
    pub basis: Vec<usize>,
    /// Truth-table verdict `g(x) = f(x + u)` per candidate; empty when not checked.
    pub verified: BTreeMap<usize, bool>,
}

impl ShiftSolutionSet {
    pub fn size(&self) -> usize {
        1 << self.basis.len()
    }

    pub fn candidates(&self) -> Vec<usize> {
        let space = crate::gf2::AffineSpace { n: self.n, offset: self.offset, basis: self.basis.clone() };
        let mut all: Vec<usize> = space.elements().collect();
        all.sort_unstable();
        all
    }

    pub fn contains(&self, u: usize) -> bool {
        crate::gf2::AffineSpace { n: self.n, offset: self.offset, basis: self.basis.clone() }.contains(u)
    }

    pub fn verified_count(&self) -> usize {
        self.verified.values().filter(|&&ok| ok).count()
    }

    /// Fills `verified` if the set is small enough.
    pub fn verify(&mut self, f: &BooleanFunction, g: &BooleanFunction) {
        self.verified.clear();
        if self.size() > MAX_VERIFIED_SOLUTIONS {
            return;
        }
        for u in self.candidates() {
            let ok = (0..f.len()).all(|x| g.eval(x) == f.eval(x ^ u));
            self.verified.insert(u, ok);
        }
    }
}

impl Serialize for ShiftSolutionSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ShiftSolutionSet", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("offset", &format_bits(self.offset, self.n))?;
        st.serialize_field("basis", &self.basis.iter().map(|&v| format_bits(v, self.n)).collect::<Vec<_>>())?;
        st.serialize_field("size", &self.size())?;
        st.serialize_field("verified_count", &self.verified_count())?;
        st.end()
    }
}

/// Gaussian elimination on `z.u = b` for `(n + 1)`-bit samples `(b, z)`,
/// `b` in the top bit. No samples give all of `F_2^n`.
pub fn solve_shift_system(samples: &[usize], n: usize) -> Result<ShiftSolutionSet> {
    let mut sys = Gf2System::new(n);
    for &s in samples {
        sys.push(s & ((1 << n) - 1), s >> n & 1 == 1);
    }
    let space = sys.solve()?;
    Ok(ShiftSolutionSet { n, offset: space.offset, basis: space.basis, verified: BTreeMap::new() })
}

/// When sampling for the solver stops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleBudget {
    pub max_samples: usize,
    /// Stop after this many consecutive samples that leave the rank unchanged.
    pub stall_window: usize,
}

impl SampleBudget {
    pub fn for_arity(n: usize) -> Self {
        Self { max_samples: 10 * (n + 1), stall_window: n + 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NegabentShiftReport {
    pub distribution: MeasurementDistribution,
    pub shots: usize,
    pub seed: u64,
    /// Observed histogram over all `shots`.
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<usize, usize>,
    /// Leading samples of the same stream fed to the solver.
    pub samples_used: usize,
    pub rank: usize,
    pub solution: ShiftSolutionSet,
}

fn serialize_counts<S: Serializer>(counts: &BTreeMap<usize, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    // Width is not known here; the report's distribution carries it.
    s.collect_map(counts.iter().map(|(k, v)| (k.to_string(), v)))
}

/// The `(n + 1)`-qubit negabent hidden-shift circuit:
/// `H -> [b = 0: U_f, b = 1: U_g] -> H`.
pub fn negabent_shift_distribution(f: &BooleanFunction, g: &BooleanFunction) -> Result<MeasurementDistribution> {
    let n = same_arity(&[f, g])?;
    let reg = range(1, n + 1);
    let all = range(0, n + 1);
    let mut s = StateVector::new(n + 1)?;
    s.run(&[
        Op::layer(Gate1Q::h(), all.clone()),
        Op::Branch { control: 0, value: false, body: vec![Op::oracle(f, reg.clone())] },
        Op::Branch { control: 0, value: true, body: vec![Op::oracle(g, reg)] },
        Op::layer(Gate1Q::h(), all.clone()),
    ])?;
    s.measure_distribution(&all)
}

pub fn run_negabent_shift(f: &BooleanFunction, g: &BooleanFunction, shots: usize, seed: u64) -> Result<NegabentShiftReport> {
    run_negabent_shift_with(f, g, shots, seed, SampleBudget::for_arity(f.arity()))
}

pub fn run_negabent_shift_with(
    f: &BooleanFunction,
    g: &BooleanFunction,
    shots: usize,
    seed: u64,
    budget: SampleBudget,
) -> Result<NegabentShiftReport> {
    let n = same_arity(&[f, g])?;
    let distribution = negabent_shift_distribution(f, g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = distribution.draw(shots, &mut rng);

    let mut sys = Gf2System::new(n);
    let mut used = 0;
    let mut stall = 0;
    for &s in samples.iter().take(budget.max_samples) {
        used += 1;
        if sys.push(s & ((1 << n) - 1), s >> n & 1 == 1) {
            stall = 0;
        } else {
            stall += 1;
        }
        if sys.rank() == n || stall >= budget.stall_window {
            break;
        }
    }
    let space = sys.solve()?;
    let mut solution = ShiftSolutionSet { n, offset: space.offset, basis: space.basis, verified: BTreeMap::new() };
    solution.verify(f, g);

    let mut counts = BTreeMap::new();
    for s in samples {
        *counts.entry(s).or_insert(0) += 1;
    }
    Ok(NegabentShiftReport { distribution, shots, seed, counts, samples_used: used, rank: sys.rank(), solution })
}
