//! Truncated full Fock space over words.
//!
//! The basis of `ℓ²(ℕ∗ℕ)` cut at depth `L` is every word of length `≤ L` in
//! shortlex order. `S` and `T` are the left creation operators `x ↦ αx` and
//! `x ↦ βx`, killed at the cutoff. The character of the fundamental
//! representation is modelled by `S + T*` (for `α`) and `S* + T` (for `β`); the
//! vacuum expectation of a product of these gives the `∗`-moments of a circular
//! element, independently of the fusion-ring computation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::words::{Letter, Word};

/// Basis of the Fock space truncated at `depth`.
#[derive(Clone, Debug)]
pub struct FockBasis {
    depth: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl FockBasis {
    pub fn new(depth: usize) -> Self {
        let words = Word::all_up_to(depth);
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        FockBasis {
            depth,
            words,
            index,
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn vacuum(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim()];
        v[0] = BigInt::one();
        v
    }
}

/// Sparse integer matrix on a truncated Fock basis, stored by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOperator {
    depth: usize,
    dim: usize,
    // columns[j] = nonzero (row, value) entries, sorted by row
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl TruncatedOperator {
    fn from_entries(depth: usize, dim: usize, mut entries: Vec<(usize, usize, BigInt)>) -> Self {
        entries.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); dim];
        for (r, c, v) in entries {
            let col = &mut columns[c];
            match col.last_mut() {
                Some((lr, lv)) if *lr == r => *lv += v,
                _ => col.push((r, v)),
            }
        }
        for col in &mut columns {
            col.retain(|(_, v)| !v.is_zero());
        }
        TruncatedOperator {
            depth,
            dim,
            columns,
        }
    }

    /// Left creation by `letter`: `x ↦ letter·x` when `|x| < depth`, else 0.
    pub fn creation(basis: &FockBasis, letter: Letter) -> Self {
        let entries = (0..basis.dim())
            .filter_map(|j| {
                let x = basis.word(j);
                (x.len() < basis.depth())
                    .then(|| (basis.index_of(&x.prepend(letter)).unwrap(), j, BigInt::one()))
            })
            .collect();
        TruncatedOperator::from_entries(basis.depth(), basis.dim(), entries)
    }

    /// `S`: `x ↦ αx`.
    pub fn s(basis: &FockBasis) -> Self {
        TruncatedOperator::creation(basis, Letter::Alpha)
    }

    /// `T`: `x ↦ βx`.
    pub fn t(basis: &FockBasis) -> Self {
        TruncatedOperator::creation(basis, Letter::Beta)
    }

    pub fn identity(basis: &FockBasis) -> Self {
        let entries = (0..basis.dim()).map(|i| (i, i, BigInt::one())).collect();
        TruncatedOperator::from_entries(basis.depth(), basis.dim(), entries)
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    /// Exact transpose (all entries are real integers).
    pub fn adjoint(&self) -> Self {
        let entries = self.entries().map(|(r, c, v)| (c, r, v.clone())).collect();
        TruncatedOperator::from_entries(self.depth, self.dim, entries)
    }

    pub fn add(&self, other: &TruncatedOperator) -> Self {
        assert_eq!(self.dim, other.dim);
        let entries = self
            .entries()
            .chain(other.entries())
            .map(|(r, c, v)| (r, c, v.clone()))
            .collect();
        TruncatedOperator::from_entries(self.depth, self.dim, entries)
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &TruncatedOperator) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut entries = Vec::new();
        for (k, col) in other.columns.iter().enumerate() {
            for (mid, v) in col {
                for (r, u) in &self.columns[*mid] {
                    entries.push((*r, k, u * v));
                }
            }
        }
        TruncatedOperator::from_entries(self.depth, self.dim, entries)
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![BigInt::zero(); self.dim];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.columns[c] {
                out[*r] += a * x;
            }
        }
        out
    }
}

/// The operators standing in for `χ(u)` and `χ(u)*` on a truncated basis.
pub struct CircularModel {
    pub basis: FockBasis,
    /// `S + T*`
    pub alpha: TruncatedOperator,
    /// `S* + T`
    pub beta: TruncatedOperator,
}

impl CircularModel {
    pub fn new(depth: usize) -> Self {
        let basis = FockBasis::new(depth);
        let s = TruncatedOperator::s(&basis);
        let t = TruncatedOperator::t(&basis);
        let alpha = s.add(&t.adjoint());
        let beta = s.adjoint().add(&t);
        CircularModel { basis, alpha, beta }
    }

    /// `⟨X_{ℓ₁} ⋯ X_{ℓ_m} δ_e, δ_e⟩`.
    pub fn moment(&self, w: &Word) -> BigInt {
        let mut v = self.basis.vacuum();
        for &l in w.letters().iter().rev() {
            v = match l {
                Letter::Alpha => self.alpha.apply(&v),
                Letter::Beta => self.beta.apply(&v),
            };
        }
        v.swap_remove(0)
    }
}

/// `∗`-moment of `χ(u)` patterned by `w`, from the Fock model truncated at `|w|`.
///
/// Each factor moves word length by exactly one, so no path from the vacuum
/// and back within `|w|` steps reaches past depth `|w|`.
pub fn fock_moment(w: &Word) -> BigInt {
    fock_moment_at_depth(w, w.len())
}

pub fn fock_moment_at_depth(w: &Word, depth: usize) -> BigInt {
    CircularModel::new(depth).moment(w)
}

/// `m`-th moment of `S + S*` on the one-generator Fock space (a semicircular element
/// of variance 1).
pub fn semicircular_moment(m: usize) -> BigInt {
    // basis δ_0..δ_m; S δ_i = δ_{i+1}
    let mut v = vec![BigInt::zero(); m + 1];
    v[0] = BigInt::one();
    for _ in 0..m {
        let mut next = vec![BigInt::zero(); m + 1];
        for i in 0..=m {
            if v[i].is_zero() {
                continue;
            }
            if i < m {
                next[i + 1] += &v[i];
            }
            if i > 0 {
                next[i - 1] += &v[i];
            }
        }
        v = next;
    }
    v.swap_remove(0)
}
