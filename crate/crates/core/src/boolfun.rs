//! Boolean functions on `F_2^n` stored as bit-packed truth tables.
//!
//! Vectors of `F_2^n` are plain `usize` indices. Variable `x1` is the most
//! significant of the `n` low bits, so the table index of `(x1, ..., xn)` is
//! `sum x_i 2^(n-i)`, which is also the order in which circuit wires are drawn.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::spectra::fwht;

/// Largest arity accepted by [`BooleanFunction`] (a 64 KiB table).
pub const MAX_ARITY: usize = 16;

/// Parity of `a & b`, the dot product over `F_2`.
#[inline]
pub fn dot(a: usize, b: usize) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Hamming weight of a vector.
#[inline]
pub fn weight(x: usize) -> u32 {
    x.count_ones()
}

/// Bit mask of variable `x_var` (1-based) in an `n`-bit vector.
#[inline]
pub fn var_mask(n: usize, var: usize) -> usize {
    debug_assert!(var >= 1 && var <= n);
    1 << (n - var)
}

/// Parses a bit string such as `"100001"` with `x1` first.
pub fn parse_bits(s: &str) -> Result<usize> {
    let s = s.trim();
    if s.is_empty() || s.len() > usize::BITS as usize {
        return Err(Error::Parse { what: "bit string", token: s.to_string() });
    }
    s.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(Error::Parse { what: "bit string", token: s.to_string() }),
    })
}

/// Formats the `n` low bits of `x`, most significant first.
pub fn format_bits(x: usize, n: usize) -> String {
    (0..n).map(|i| if (x >> (n - 1 - i)) & 1 == 1 { '1' } else { '0' }).collect()
}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ARITY {
        return Err(Error::UnsupportedArity(n));
    }
    Ok(())
}

/// In-place binary Möbius transform. It is an involution and maps a truth
/// table to its ANF coefficient vector and back.
fn moebius(values: &mut [bool]) {
    let mut h = 1;
    while h < values.len() {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (l, u) in lo.iter().zip(hi.iter_mut()) {
                *u ^= *l;
            }
        }
        h *= 2;
    }
}

/// Truth table of a Boolean function of `n` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, hex={})", self.n, self.to_hex())
    }
}

impl BooleanFunction {
    /// Builds a function from its table in index order.
    pub fn new(n: usize, table: &[bool]) -> Result<Self> {
        check_arity(n)?;
        if table.len() != 1 << n {
            return Err(Error::SizeMismatch { expected: 1 << n, got: table.len() });
        }
        Ok(Self::from_fn_unchecked(n, |x| table[x]))
    }

    /// Builds a function from a `'0'`/`'1'` string such as `"0001"`.
    pub fn from_bit_str(n: usize, bits: &str) -> Result<Self> {
        let table = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse { what: "truth table", token: bits.to_string() }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &table)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        check_arity(n)?;
        Ok(Self::from_fn_unchecked(n, f))
    }

    fn from_fn_unchecked(n: usize, f: impl Fn(usize) -> bool) -> Self {
        let len = 1usize << n;
        let mut words = vec![0u64; len.div_ceil(64)];
        for x in 0..len {
            if f(x) {
                words[x / 64] |= 1 << (x % 64);
            }
        }
        Self { n, words }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| false)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| true)
    }

    /// Uniformly random function.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_arity(n)?;
        let len = 1usize << n;
        let mut words: Vec<u64> = (0..len.div_ceil(64)).map(|_| rng.random()).collect();
        if len < 64 {
            words[0] &= (1u64 << len) - 1;
        }
        Ok(Self { n, words })
    }

    /// The linear function `x -> y . x`.
    pub fn linear(n: usize, y: usize) -> Result<Self> {
        Self::from_fn(n, |x| dot(x, y))
    }

    /// Indicator of a point set.
    pub fn indicator(set: &PointSet) -> Result<Self> {
        Self::from_fn(set.n, |x| set.contains(x))
    }

    /// The elementary symmetric quadratic `s2(x) = XOR_{i<j} x_i x_j`.
    pub fn symmetric_s2(n: usize) -> Result<Self> {
        // C(w, 2) is odd exactly when w mod 4 is 2 or 3.
        Self::from_fn(n, |x| weight(x) % 4 >= 2)
    }

    /// Parses algebraic normal form, e.g. `"x1x3 + x1x4 + 1"`.
    ///
    /// Terms are separated by `+`; a term is `1`, `0`, or a product of
    /// `xI` factors optionally separated by whitespace or `*`.
    pub fn from_anf(n: usize, anf: &str) -> Result<Self> {
        check_arity(n)?;
        let mut coeffs = vec![false; 1 << n];
        for term in anf.split('+') {
            let term = term.trim();
            match term {
                "1" => coeffs[0] ^= true,
                "0" => {}
                "" => return Err(Error::Parse { what: "ANF term", token: anf.to_string() }),
                _ => coeffs[parse_monomial(n, term)?] ^= true,
            }
        }
        moebius(&mut coeffs);
        Self::new(n, &coeffs)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of table entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        (self.words[x / 64] >> (x % 64)) & 1 == 1
    }

    /// `(-1)^f(x)` as a float.
    #[inline]
    pub fn sign(&self, x: usize) -> f64 {
        if self.eval(x) {
            -1.0
        } else {
            1.0
        }
    }

    /// The table in index order.
    pub fn table(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.eval(x))
    }

    /// `(-1)^f(x)` for every `x`, in index order.
    pub fn signs(&self) -> Vec<f64> {
        self.table().map(|b| if b { -1.0 } else { 1.0 }).collect()
    }

    pub fn hamming_weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.hamming_weight() == self.len() / 2
    }

    pub fn is_constant(&self) -> bool {
        let w = self.hamming_weight();
        w == 0 || w == self.len()
    }

    /// ANF coefficients indexed by monomial mask (bit of `x_i` set when
    /// the variable occurs).
    pub fn anf(&self) -> Vec<bool> {
        let mut c: Vec<bool> = self.table().collect();
        moebius(&mut c);
        c
    }

    pub fn degree(&self) -> u32 {
        self.anf()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(m, _)| weight(m))
            .max()
            .unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }

    /// Algebraic normal form in the syntax accepted by [`Self::from_anf`].
    pub fn anf_string(&self) -> String {
        let mut terms: Vec<(u32, usize)> = self
            .anf()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(m, _)| (weight(m), m))
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        // Higher degree first, then lexicographic by variable index.
        terms.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        terms
            .iter()
            .map(|&(_, m)| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (1..=self.n)
                        .filter(|&v| m & var_mask(self.n, v) != 0)
                        .map(|v| format!("x{v}"))
                        .collect::<String>()
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `g(x) = f(Ax + b) + c.x + d`.
    pub fn apply_affine(&self, t: &AffineTransform) -> Result<Self> {
        if t.arity() != self.n {
            return Err(Error::ArityMismatch { left: self.n, right: t.arity() });
        }
        Ok(Self::from_fn_unchecked(self.n, |x| {
            self.eval(t.a.apply(x) ^ t.b) ^ dot(t.c, x) ^ t.d
        }))
    }

    /// `g(x) = f(x + u)`.
    pub fn shift(&self, u: usize) -> Self {
        let u = u & (self.len() - 1);
        Self::from_fn_unchecked(self.n, |x| self.eval(x ^ u))
    }

    /// Pointwise XOR.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ArityMismatch { left: self.n, right: other.n });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(Self { n: self.n, words })
    }

    /// `h(x, y) = f(x) + g(y)` on `n + k` variables, `x` most significant.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let k = other.n;
        Self::from_fn(self.n + k, |z| self.eval(z >> k) ^ other.eval(z & ((1 << k) - 1)))
    }

    /// Complement `f + 1`.
    pub fn complement(&self) -> Self {
        Self::from_fn_unchecked(self.n, |x| !self.eval(x))
    }

    /// Unnormalized Walsh values `sum_x (-1)^(f(x) + x.w)`.
    pub fn walsh_integers(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.table().map(|b| if b { -1 } else { 1 }).collect();
        fwht(&mut v).expect("table length is a power of two");
        v
    }

    /// Dual of a bent function: `(-1)^dual(x) = W_f(x)`.
    pub fn dual(&self) -> Result<Self> {
        let scale = (self.len() as f64).sqrt();
        let walsh = self.walsh_integers();
        for (index, &w) in walsh.iter().enumerate() {
            let magnitude = w as f64 / scale;
            if (magnitude.abs() - 1.0).abs() > 1e-6 {
                return Err(Error::NotBent { index, magnitude: magnitude.abs() });
            }
        }
        Ok(Self::from_fn_unchecked(self.n, |x| walsh[x] < 0))
    }

    /// Hex encoding: table bit `j` is bit `3 - j % 4` of nibble `j / 4`, so
    /// index 0 is the most significant bit of the leftmost digit. For
    /// `n = 1` the single digit carries the two bits in its top half.
    pub fn to_hex(&self) -> String {
        let len = self.len();
        (0..len.div_ceil(4))
            .map(|d| {
                let nib = (0..4).fold(0u32, |acc, k| {
                    let j = 4 * d + k;
                    (acc << 1) | u32::from(j < len && self.eval(j))
                });
                char::from_digit(nib, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_arity(n)?;
        let hex = hex.trim();
        let hex = hex.strip_prefix("0x").unwrap_or(hex);
        let len = 1usize << n;
        let digits = len.div_ceil(4);
        if hex.len() != digits {
            return Err(Error::SizeMismatch { expected: len, got: 4 * hex.len() });
        }
        let mut table = vec![false; len];
        for (d, c) in hex.chars().enumerate() {
            let nib = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse { what: "hex digit", token: c.to_string() })?;
            for k in 0..4 {
                let bit = (nib >> (3 - k)) & 1 == 1;
                let j = 4 * d + k;
                if j < len {
                    table[j] = bit;
                } else if bit {
                    return Err(Error::Parse { what: "hex padding", token: hex.to_string() });
                }
            }
        }
        Self::new(n, &table)
    }
}

fn parse_monomial(n: usize, term: &str) -> Result<usize> {
    let bad = || Error::Parse { what: "ANF term", token: term.to_string() };
    let mut mask = 0usize;
    let mut chars = term.chars().peekable();
    let mut seen = false;
    while let Some(c) = chars.next() {
        match c {
            ' ' | '\t' | '*' => continue,
            'x' | 'X' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let var: usize = digits.parse().map_err(|_| bad())?;
                if var == 0 || var > n {
                    return Err(Error::VariableOutOfRange { var, n });
                }
                mask |= var_mask(n, var);
                seen = true;
            }
            _ => return Err(bad()),
        }
    }
    if !seen {
        return Err(bad());
    }
    Ok(mask)
}

/// Square matrix over `F_2`. Row `i` is stored as an `n`-bit vector using the
/// same layout as points (column 1 most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    rows: Vec<usize>,
}

impl BitMatrix {
    pub fn identity(n: usize) -> Self {
        Self { n, rows: (1..=n).map(|i| var_mask(n, i)).collect() }
    }

    pub fn from_rows(n: usize, rows: Vec<usize>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::ArityMismatch { left: n, right: rows.len() });
        }
        if rows.iter().any(|&r| r >> n != 0) {
            return Err(Error::Invalid(format!("matrix row wider than {n} bits")));
        }
        Ok(Self { n, rows })
    }

    /// Permutation matrix with `(Px)_i = x_{perm[i]}` (0-based positions).
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let distinct: BTreeSet<_> = perm.iter().collect();
        if distinct.len() != n || perm.iter().any(|&p| p >= n) {
            return Err(Error::Invalid(format!("not a permutation: {perm:?}")));
        }
        Ok(Self { n, rows: perm.iter().map(|&p| var_mask(n, p + 1)).collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Matrix-vector product over `F_2`.
    pub fn apply(&self, x: usize) -> usize {
        self.rows
            .iter()
            .fold(0, |acc, &row| (acc << 1) | usize::from(dot(row, x)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let rows = (1..=n)
            .map(|j| {
                self.rows.iter().fold(0, |acc, &row| {
                    (acc << 1) | usize::from(row & var_mask(n, j) != 0)
                })
            })
            .collect();
        Self { n, rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = other.transpose();
        let rows = self.rows.iter().map(|&r| t.apply(r)).collect();
        Self { n: self.n, rows }
    }

    /// `A A^T = A^T A = I`.
    pub fn is_orthogonal(&self) -> bool {
        let id = Self::identity(self.n);
        let t = self.transpose();
        self.mul(&t) == id && t.mul(self) == id
    }
}

/// The map `x -> f(Ax + b) + c.x + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineTransform {
    pub a: BitMatrix,
    pub b: usize,
    pub c: usize,
    pub d: bool,
}

impl AffineTransform {
    pub fn identity(n: usize) -> Self {
        Self { a: BitMatrix::identity(n), b: 0, c: 0, d: false }
    }

    pub fn new(a: BitMatrix, b: usize, c: usize, d: bool) -> Result<Self> {
        let n = a.dim();
        if (b | c) >> n != 0 {
            return Err(Error::Invalid(format!("affine vectors wider than {n} bits")));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn arity(&self) -> usize {
        self.a.dim()
    }
}

/// A set of points of `F_2^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: BTreeSet<usize>,
}

impl PointSet {
    pub fn new(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_arity(n)?;
        let points: BTreeSet<usize> = points.into_iter().collect();
        if let Some(&p) = points.iter().find(|&&p| p >> n != 0) {
            return Err(Error::Invalid(format!("point {p:#x} has more than {n} bits")));
        }
        Ok(Self { n, points })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, 0..1 << n)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.points.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().copied()
    }
}
