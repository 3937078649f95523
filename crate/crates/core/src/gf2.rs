//! Gaussian elimination over GF(2) for systems `a_i . u = b_i`.

use crate::error::{Error, Result};

/// Solutions `offset + span(basis)` of a linear system in `n` unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub n: usize,
    pub offset: usize,
    pub basis: Vec<usize>,
}

impl AffineSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Every element, in the order of the subset index over `basis`.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..1usize << self.basis.len()).map(move |s| {
            self.basis
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .fold(self.offset, |acc, (_, v)| acc ^ v)
        })
    }

    pub fn contains(&self, u: usize) -> bool {
        let mut echelon: Vec<usize> = Vec::new();
        for &v in &self.basis {
            let v = echelon.iter().fold(v, |acc, &e| if acc & top_bit(e) != 0 { acc ^ e } else { acc });
            if v != 0 {
                echelon.push(v);
            }
        }
        let r = echelon.iter().fold(u ^ self.offset, |acc, &e| if acc & top_bit(e) != 0 { acc ^ e } else { acc });
        r == 0
    }
}

/// Incremental row-reduced system, rows keyed by pivot bit (MSB first).
#[derive(Clone, Debug)]
pub struct Gf2System {
    n: usize,
    rows: Vec<(usize, bool)>,
    inconsistent: bool,
}

impl Gf2System {
    pub fn new(n: usize) -> Self {
        Self { n, rows: Vec::new(), inconsistent: false }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Adds `a . u = b`; returns whether the rank grew.
    pub fn push(&mut self, a: usize, b: bool) -> bool {
        let (mut a, mut b) = (a & ((1 << self.n) - 1), b);
        for &(r, rb) in &self.rows {
            if a & top_bit(r) != 0 {
                a ^= r;
                b ^= rb;
            }
        }
        if a == 0 {
            self.inconsistent |= b;
            return false;
        }
        let p = top_bit(a);
        for row in &mut self.rows {
            if row.0 & p != 0 {
                row.0 ^= a;
                row.1 ^= b;
            }
        }
        self.rows.push((a, b));
        self.rows.sort_by_key(|r| std::cmp::Reverse(r.0));
        true
    }

    pub fn solve(&self) -> Result<AffineSpace> {
        if self.inconsistent {
            return Err(Error::InconsistentSystem);
        }
        let pivots = self.rows.iter().fold(0, |acc, &(r, _)| acc | top_bit(r));
        // Free variables at zero, so each pivot takes its right-hand side.
        let offset = self.rows.iter().filter(|r| r.1).fold(0, |acc, &(r, _)| acc | top_bit(r));
        let mut basis = Vec::new();
        for k in (0..self.n).rev() {
            let free = 1 << k;
            if pivots & free != 0 {
                continue;
            }
            let v = self.rows.iter().filter(|&&(r, _)| r & free != 0).fold(free, |acc, &(r, _)| acc | top_bit(r));
            basis.push(v);
        }
        Ok(AffineSpace { n: self.n, offset, basis })
    }
}

fn top_bit(x: usize) -> usize {
    1 << (usize::BITS - 1 - x.leading_zeros())
}
