//! Fixed vectors of tensor-word representations, built from non-crossing
//! pairings.
//!
//! For the free unitary quantum group `A_u(F)` the representation `u^w` acts on
//! `(ℂⁿ)^{⊗|w|}` with `u` on `α` slots and `F ū F⁻¹` on `β` slots (the conjugate
//! space is identified with `ℂⁿ` through the canonical basis). Two elementary
//! fixed vectors generate everything:
//!
//! * `E₁ = Σᵢ eᵢ ⊗ F eᵢ` in the `αβ` slot pair,
//! * `E₂ = Σᵢ eᵢ ⊗ F̄⁻¹ eᵢ` in the `βα` slot pair.
//!
//! [`FixedSpace::z_basis`] builds the spanning family by the first-return
//! recursion `w = αxβy ↦ (I ⊗ M ⊗ I ⊗ N)∘E₁` (and the `β`-led analogue with
//! `E₂`). [`FixedSpace::z_closed_form`] recomputes the same vectors straight
//! from colored pairings with per-pair weights `F` or `F̄⁻¹`, as an
//! independent check.
//!
//! For the free orthogonal quantum group `A_o(F)` (`F F̄ = c·Id`) the vectors
//! `v(P)` of plain pairings, with weight `F[s_j, s_i]` per pair, span the
//! fixed vectors of `u^{⊗2k}`.
//!
//! Coordinates use a big-endian multi-index: slot 1 is the most significant
//! digit.

use std::collections::HashMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational};
use crate::pairings::{enumerate_colored, enumerate_plain, Pairing};
use crate::words::{Letter, Word};

/// Largest tensor dimension `n^{|w|}` handled without `force`
/// (`|w| ≤ 12` at `n = 2`, `|w| ≤ 8` at `n = 3`).
pub const TENSOR_LIMIT: u64 = 6561;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedVector {
    pub n: usize,
    /// For `A_o` vectors the word is `α^{2k}`.
    pub word: Word,
    pub coords: Vec<GaussianRational>,
}

impl FixedVector {
    pub fn scalar_one(n: usize) -> Self {
        FixedVector {
            n,
            word: Word::empty(),
            coords: vec![GaussianRational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussianRational::is_zero)
    }

    /// `⟨self, other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &FixedVector) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += &(&a.conj() * b);
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> FixedVector {
        FixedVector {
            n: self.n,
            word: self.word.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Slot indices `(s₁,…,s_L)` (0-based) of a flat coordinate.
    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        decode(flat, self.n, self.word.len())
    }
}

fn decode(mut flat: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = flat % n;
        flat /= n;
    }
    out
}

fn check_guardrail(n: usize, len: usize, force: bool) -> Result<()> {
    if force {
        return Ok(());
    }
    let size = (n as u64).checked_pow(len as u32);
    match size {
        Some(s) if s <= TENSOR_LIMIT => Ok(()),
        _ => Err(Error::Guardrail {
            n,
            len,
            limit: TENSOR_LIMIT,
        }),
    }
}

fn check_square_invertible(f: &ExactMatrix) -> Result<ExactMatrix> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    f.inverse()
}

/// Returns `c` when `F·F̄ = c·Id` with `c` real and nonzero.
pub fn validate_o_matrix(f: &ExactMatrix) -> Result<BigRational> {
    check_square_invertible(f)?;
    let prod = f.mul(&f.conj())?;
    match prod.as_scalar() {
        Some(c) if c.is_real() && !c.is_zero() => Ok(c.re),
        _ => Err(Error::NotOAdmissible),
    }
}

/// `v(P)`: the coordinate at `(s₁,…,s_{2k})` is `Π_{(i,j) ∈ P} F[s_j, s_i]`.
pub fn w_vector(f: &ExactMatrix, p: &Pairing) -> Result<FixedVector> {
    validate_o_matrix(f)?;
    Ok(pairing_vector(f.rows(), p, |_| f))
}

/// Product of per-pair weights; `weight(i)` picks the matrix for the pair opened at `i`.
fn pairing_vector<'a>(
    n: usize,
    p: &Pairing,
    weight: impl Fn(usize) -> &'a ExactMatrix,
) -> FixedVector {
    let len = p.points();
    let total = n.pow(len as u32);
    let mut coords = Vec::with_capacity(total);
    for flat in 0..total {
        let s = decode(flat, n, len);
        let mut acc = GaussianRational::one();
        for &(i, j) in p.pairs() {
            let x = weight(i).get(s[j], s[i]);
            if x.is_zero() {
                acc = GaussianRational::zero();
                break;
            }
            acc = &acc * x;
        }
        coords.push(acc);
    }
    FixedVector {
        n,
        word: Word::power(Letter::Alpha, len),
        coords,
    }
}

/// Gram matrix `G[i][j] = ⟨v_i, v_j⟩`.
pub fn gram(vectors: &[FixedVector]) -> Result<ExactMatrix> {
    if let Some(first) = vectors.first() {
        if vectors
            .iter()
            .any(|v| v.n != first.n || v.coords.len() != first.coords.len())
        {
            return Err(Error::DimensionMismatch(
                "Gram matrix of vectors from different spaces".into(),
            ));
        }
    }
    let k = vectors.len();
    let mut g = ExactMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = vectors[i].inner(&vectors[j]);
            if i != j {
                g.set(j, i, v.conj());
            }
            g.set(i, j, v);
        }
    }
    Ok(g)
}

/// Rank of the `A_o` family `{v(P)}` over all non-crossing pairings of `2k` points.
pub fn w_span_dim(f: &ExactMatrix, k: usize) -> Result<usize> {
    validate_o_matrix(f)?;
    let n = f.rows();
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    check_guardrail(n, 2 * k, false)?;
    let vectors: Vec<FixedVector> = enumerate_plain(k)
        .iter()
        .map(|p| pairing_vector(n, p, |_| f))
        .collect();
    Ok(gram(&vectors)?.rank())
}

/// The matrix `F` together with the derived data for `A_u(F)` computations.
#[derive(Clone, Debug)]
pub struct FixedSpace {
    f: ExactMatrix,
    /// `F̄⁻¹`
    conj_inv: ExactMatrix,
    n: usize,
    force: bool,
}

impl FixedSpace {
    pub fn new(f: ExactMatrix) -> Result<Self> {
        let inv = check_square_invertible(&f)?;
        let n = f.rows();
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let conj_inv = inv.conj();
        Ok(FixedSpace {
            f,
            conj_inv,
            n,
            force: false,
        })
    }

    /// Lifts the desk-scale limit on `n^{|w|}`.
    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.f
    }

    pub fn conj_inverse(&self) -> &ExactMatrix {
        &self.conj_inv
    }

    /// `E₁` as an `n×n` coefficient array: `E₁[a][b] = F[b][a]`.
    pub fn e1(&self) -> ExactMatrix {
        self.f.transpose()
    }

    /// `E₂[a][b] = F̄⁻¹[b][a]`.
    pub fn e2(&self) -> ExactMatrix {
        self.conj_inv.transpose()
    }

    /// `(E₂* ⊗ Id)(Id ⊗ E₁)` and `(E₁* ⊗ Id)(Id ⊗ E₂)` as `n×n` matrices.
    pub fn contractions(&self) -> (ExactMatrix, ExactMatrix) {
        let contract = |outer: &ExactMatrix, inner: &ExactMatrix| {
            // result[j][b] = Σ_i conj(outer[b][i]) · inner[i][j]
            let n = self.n;
            let mut m = ExactMatrix::zeros(n, n);
            for j in 0..n {
                for b in 0..n {
                    let mut acc = GaussianRational::zero();
                    for i in 0..n {
                        acc += &(&outer.get(b, i).conj() * inner.get(i, j));
                    }
                    m.set(j, b, acc);
                }
            }
            m
        };
        let (e1, e2) = (self.e1(), self.e2());
        (contract(&e2, &e1), contract(&e1, &e2))
    }

    /// Spanning family of the fixed vectors of `u^w`, one vector per colored
    /// pairing of `w` in canonical enumeration order.
    pub fn z_basis(&self, w: &Word) -> Result<Vec<FixedVector>> {
        check_guardrail(self.n, w.len(), self.force)?;
        let mut memo = HashMap::new();
        let coords = self.z_range(w.letters(), 0, w.len(), &mut memo);
        Ok(coords
            .into_iter()
            .map(|coords| FixedVector {
                n: self.n,
                word: w.clone(),
                coords,
            })
            .collect())
    }

    fn z_range(
        &self,
        letters: &[Letter],
        start: usize,
        end: usize,
        memo: &mut HashMap<(usize, usize), Vec<Vec<GaussianRational>>>,
    ) -> Vec<Vec<GaussianRational>> {
        if start == end {
            return vec![vec![GaussianRational::one()]];
        }
        if (end - start) % 2 == 1 {
            return Vec::new();
        }
        if let Some(v) = memo.get(&(start, end)) {
            return v.clone();
        }
        let n = self.n;
        let head = letters[start];
        let pair = match head {
            Letter::Alpha => self.e1(),
            Letter::Beta => self.e2(),
        };
        let mut out = Vec::new();
        for j in (start + 1..end).step_by(2) {
            if letters[j] != head.bar() {
                continue;
            }
            let inner = self.z_range(letters, start + 1, j, memo);
            if inner.is_empty() {
                continue;
            }
            let outer = self.z_range(letters, j + 1, end, memo);
            let inner_dim = n.pow((j - start - 1) as u32);
            let outer_dim = n.pow((end - j - 1) as u32);
            for m in &inner {
                for nv in &outer {
                    // coordinate (s1, t, s2, r) = pair[s1][s2] · M[t] · N[r]
                    let mut v = Vec::with_capacity(n * n * inner_dim * outer_dim);
                    for s1 in 0..n {
                        for t in 0..inner_dim {
                            for s2 in 0..n {
                                let e = pair.get(s1, s2);
                                for r in 0..outer_dim {
                                    if e.is_zero() || m[t].is_zero() || nv[r].is_zero() {
                                        v.push(GaussianRational::zero());
                                    } else {
                                        v.push(&(e * &m[t]) * &nv[r]);
                                    }
                                }
                            }
                        }
                    }
                    out.push(v);
                }
            }
        }
        memo.insert((start, end), out.clone());
        out
    }

    /// Same family as [`Self::z_basis`], computed from the colored pairings with
    /// weight `F[s_j, s_i]` on `(α, β)` pairs and `F̄⁻¹[s_j, s_i]` on `(β, α)` pairs.
    pub fn z_closed_form(&self, w: &Word) -> Result<Vec<FixedVector>> {
        check_guardrail(self.n, w.len(), self.force)?;
        let letters = w.letters();
        Ok(enumerate_colored(w)
            .iter()
            .map(|cp| {
                let mut v = pairing_vector(self.n, &cp.base, |i| match letters[i] {
                    Letter::Alpha => &self.f,
                    Letter::Beta => &self.conj_inv,
                });
                v.word = w.clone();
                v
            })
            .collect())
    }

    /// `dim Mor(1, u^w)` as the exact rank of the Gram matrix of the Z family.
    pub fn fixed_dim(&self, w: &Word) -> Result<usize> {
        Ok(gram(&self.z_basis(w)?)?.rank())
    }

    /// Greedy maximal independent subfamily of the Z family, in canonical order.
    pub fn independent_subset(&self, w: &Word) -> Result<Vec<FixedVector>> {
        let mut kept: Vec<FixedVector> = Vec::new();
        for v in self.z_basis(w)? {
            kept.push(v);
            if gram(&kept)?.rank() < kept.len() {
                kept.pop();
            }
        }
        Ok(kept)
    }

    /// Orthogonal projector onto the fixed vectors of `u^w`, i.e. `(Id ⊗ h)(u^w)`.
    pub fn haar_projector(&self, w: &Word) -> Result<ExactMatrix> {
        let dim = self.n.pow(w.len() as u32);
        let basis = self.independent_subset(w)?;
        if basis.is_empty() {
            return Ok(ExactMatrix::zeros(dim, dim));
        }
        let cols: Vec<&[GaussianRational]> = basis.iter().map(|v| v.coords.as_slice()).collect();
        let v = ExactMatrix::from_columns(dim, &cols);
        let g_inv = gram(&basis)?.inverse()?;
        v.mul(&g_inv)?.mul(&v.adjoint())
    }

    /// One entry `P[I][J]` of the projector without forming the whole matrix.
    pub fn haar_entry(&self, w: &Word, row: usize, col: usize) -> Result<GaussianRational> {
        let dim = self.n.pow(w.len() as u32);
        if row >= dim || col >= dim {
            return Err(Error::InvalidArgument(format!(
                "entry ({row},{col}) outside a {dim}x{dim} projector"
            )));
        }
        let basis = self.independent_subset(w)?;
        if basis.is_empty() {
            return Ok(GaussianRational::zero());
        }
        let g_inv = gram(&basis)?.inverse()?;
        let mut acc = GaussianRational::zero();
        for (a, va) in basis.iter().enumerate() {
            if va.coords[row].is_zero() {
                continue;
            }
            for (b, vb) in basis.iter().enumerate() {
                let x = &(&va.coords[row] * g_inv.get(a, b)) * &vb.coords[col].conj();
                acc += &x;
            }
        }
        Ok(acc)
    }
}

pub fn z_basis(f: &ExactMatrix, w: &Word) -> Result<Vec<FixedVector>> {
    FixedSpace::new(f.clone())?.z_basis(w)
}

pub fn fixed_dim(f: &ExactMatrix, w: &Word) -> Result<usize> {
    FixedSpace::new(f.clone())?.fixed_dim(w)
}

pub fn haar_projector(f: &ExactMatrix, w: &Word) -> Result<ExactMatrix> {
    FixedSpace::new(f.clone())?.haar_projector(w)
}

/// Seeded random invertible `n×n` matrix with small Gaussian-rational entries.
pub fn random_invertible(n: usize, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = GaussianRational::from_ratios(
                    rng.gen_range(-3..=3),
                    rng.gen_range(1..=3),
                    rng.gen_range(-2..=2),
                    rng.gen_range(1..=2),
                );
                m.set(i, j, x);
            }
        }
        if m.rank() == n {
            return m;
        }
    }
}
