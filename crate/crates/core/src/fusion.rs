//! The fusion ring `(A, +, ⊙)` of the free unitary quantum group.
//!
//! `A` is the free abelian group on words. The product of two basis words is
//!
//! ```text
//! x ⊙ y = Σ_{x = a·g, y = ḡ·b} a·b
//! ```
//!
//! which is exactly the tensor product decomposition `r_x ⊗ r_y = Σ r_{ab}` of
//! irreducible representations. The map `J` sends a word `ℓ₁…ℓ_m` to
//! `ℓ₁ ⊙ (ℓ₂ ⊙ (… ⊙ e))`, i.e. the decomposition of the tensor word `u^x` into
//! irreducibles; `J − Id` strictly lowers word length, so `J` is inverted by a
//! finite Neumann series.
//!
//! Also here: dimension functions, the orthogonal (SU(2)-type) fusion ladder,
//! the generalized Catalan recursion and the Catalan closed form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Finitely supported integer combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionElement {
    coeffs: BTreeMap<Word, BigInt>,
}

impl FusionElement {
    pub fn zero() -> Self {
        FusionElement::default()
    }

    /// The unit `e`.
    pub fn one() -> Self {
        FusionElement::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        FusionElement::scaled_word(w, BigInt::one())
    }

    pub fn scaled_word(w: Word, c: BigInt) -> Self {
        let mut f = FusionElement::zero();
        f.add_term(w, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, BigInt)>>(terms: I) -> Self {
        let mut f = FusionElement::zero();
        for (w, c) in terms {
            f.add_term(w, c);
        }
        f
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Length of the longest word in the support, `None` for the zero element.
    pub fn max_len(&self) -> Option<usize> {
        self.coeffs.keys().map(Word::len).max()
    }

    pub fn is_non_negative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> FusionElement {
        FusionElement::from_terms(self.coeffs.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Bilinear extension of [`fuse`].
    pub fn fuse(&self, other: &FusionElement) -> FusionElement {
        let mut out = FusionElement::zero();
        for (x, cx) in &self.coeffs {
            for (y, cy) in &other.coeffs {
                let c = cx * cy;
                for w in fuse_support(x, y) {
                    out.add_term(w, c.clone());
                }
            }
        }
        out
    }

    pub fn involute(&self) -> FusionElement {
        FusionElement::from_terms(self.coeffs.iter().map(|(w, c)| (w.involute(), c.clone())))
    }

    /// Coefficient of the empty word.
    pub fn tau(&self) -> BigInt {
        self.coeff(&Word::empty())
    }

    /// Extends [`j_expand`] linearly.
    pub fn j_expand(&self) -> FusionElement {
        let mut out = FusionElement::zero();
        for (w, c) in &self.coeffs {
            for (v, d) in j_expand(w).coeffs {
                out.add_term(v, d * c);
            }
        }
        out
    }

    /// `f` with `J(f) = self`, via `f = Σ_i (Id − J)^i g`.
    pub fn j_inverse(&self) -> FusionElement {
        let mut sum = FusionElement::zero();
        let mut term = self.clone();
        while !term.is_zero() {
            sum = &sum + &term;
            term = &term - &term.j_expand();
        }
        sum
    }
}

impl<'a> Add<&'a FusionElement> for &'a FusionElement {
    type Output = FusionElement;
    fn add(self, rhs: &FusionElement) -> FusionElement {
        let mut out = self.clone();
        for (w, c) in &rhs.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a FusionElement> for &'a FusionElement {
    type Output = FusionElement;
    fn sub(self, rhs: &FusionElement) -> FusionElement {
        let mut out = self.clone();
        for (w, c) in &rhs.coeffs {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FusionElement {
    type Output = FusionElement;
    fn neg(self) -> FusionElement {
        self.scale(&BigInt::from(-1))
    }
}

impl<'a> Mul<&'a FusionElement> for &'a FusionElement {
    type Output = FusionElement;
    fn mul(self, rhs: &FusionElement) -> FusionElement {
        self.fuse(rhs)
    }
}

impl From<Word> for FusionElement {
    fn from(w: Word) -> Self {
        FusionElement::word(w)
    }
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}·{w}")?;
            }
        }
        Ok(())
    }
}

/// Words `a·b` over all `g` with `x = a·g` and `y = ḡ·b`, shortest `g` first.
fn fuse_support(x: &Word, y: &Word) -> Vec<Word> {
    let xs = x.letters();
    let ys = y.letters();
    let mut out = Vec::new();
    for glen in 0..=xs.len().min(ys.len()) {
        let cut = xs.len() - glen;
        // ḡ is a prefix of y iff y[i] = bar(x[len-1-i]) for i < |g|
        let matches = (0..glen).all(|i| ys[i] == xs[xs.len() - 1 - i].bar());
        if !matches {
            // a longer g would need this one as its tail, so stop
            break;
        }
        let mut ab = Vec::with_capacity(cut + ys.len() - glen);
        ab.extend_from_slice(&xs[..cut]);
        ab.extend_from_slice(&ys[glen..]);
        out.push(Word::from_letters(ab));
    }
    out
}

/// `r_x ⊗ r_y` decomposed into irreducibles; every multiplicity is 1.
pub fn fuse(x: &Word, y: &Word) -> FusionElement {
    FusionElement::from_terms(fuse_support(x, y).into_iter().map(|w| (w, BigInt::one())))
}

pub fn fuse_elements(f: &FusionElement, g: &FusionElement) -> FusionElement {
    f.fuse(g)
}

pub fn involute_element(f: &FusionElement) -> FusionElement {
    f.involute()
}

/// Multiplicities of the irreducibles inside the tensor word `u^x`.
pub fn j_expand(x: &Word) -> FusionElement {
    let mut acc = FusionElement::one();
    for &l in x.letters().iter().rev() {
        acc = FusionElement::word(Word::letter(l)).fuse(&acc);
    }
    acc
}

pub fn j_inverse(g: &FusionElement) -> FusionElement {
    g.j_inverse()
}

pub fn tau(f: &FusionElement) -> BigInt {
    f.tau()
}

/// `dim Mor(1, u^w)`, read off as the multiplicity of the trivial representation in `J(w)`.
pub fn star_moment(w: &Word) -> BigInt {
    j_expand(w).tau()
}

/// `C_w` from `C_e = 1`, `C_α = C_β = 0` and
/// `C_w = Σ_{w = αxβy} C_x C_y + Σ_{w = βxαy} C_x C_y`.
///
/// Memoized on subword ranges; the cache lives only for one call.
pub fn generalized_catalan(w: &Word) -> BigInt {
    let mut memo = HashMap::new();
    catalan_range(w.letters(), 0, w.len(), &mut memo)
}

fn catalan_range(
    letters: &[Letter],
    start: usize,
    end: usize,
    memo: &mut HashMap<(usize, usize), BigInt>,
) -> BigInt {
    if start == end {
        return BigInt::one();
    }
    if (end - start) % 2 == 1 {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(start, end)) {
        return v.clone();
    }
    let head = letters[start];
    let mut total = BigInt::zero();
    // w = head · x · bar(head) · y, with x = letters[start+1..j]
    for j in (start + 1..end).step_by(2) {
        if letters[j] != head.bar() {
            continue;
        }
        let inner = catalan_range(letters, start + 1, j, memo);
        if inner.is_zero() {
            continue;
        }
        let outer = catalan_range(letters, j + 1, end, memo);
        total += inner * outer;
    }
    memo.insert((start, end), total.clone());
    total
}

fn check_n(n: usize) -> Result<()> {
    if n <= 1 {
        Err(Error::DimensionTooSmall(n))
    } else {
        Ok(())
    }
}

/// Dimension of `r_w` for the free unitary quantum group on `ℂⁿ`.
///
/// `d(e) = 1` and `d(ℓx) = n·d(x) − d(x′)` when `x = ℓ̄x′`, else `n·d(x)`.
pub fn dim_u(w: &Word, n: usize) -> Result<BigInt> {
    check_n(n)?;
    let letters = w.letters();
    let len = letters.len();
    let nb = BigInt::from(n);
    // suffix[i] = d(w[i..])
    let mut suffix = vec![BigInt::one(); len + 2];
    for i in (0..len).rev() {
        let mut d = &nb * &suffix[i + 1];
        if i + 1 < len && letters[i + 1] == letters[i].bar() {
            d -= &suffix[i + 2];
        }
        suffix[i] = d;
    }
    Ok(suffix.swap_remove(0))
}

/// Index `k` of the irreducible `r_k` of the free orthogonal quantum group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OWeight(pub u32);

/// `r_k ⊗ r_s = r_{|k−s|} + r_{|k−s|+2} + … + r_{k+s}`.
pub fn fuse_o(k: OWeight, s: OWeight) -> Vec<OWeight> {
    let lo = k.0.abs_diff(s.0);
    let hi = k.0 + s.0;
    (lo..=hi).step_by(2).map(OWeight).collect()
}

/// `d_0 = 1`, `d_1 = n`, `d_{k+1} = n·d_k − d_{k−1}`.
pub fn dim_o(k: OWeight, n: usize) -> Result<BigInt> {
    check_n(n)?;
    let nb = BigInt::from(n);
    let (mut prev, mut cur) = (BigInt::one(), nb.clone());
    if k.0 == 0 {
        return Ok(prev);
    }
    for _ in 1..k.0 {
        let next = &nb * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `(2k)! / (k! (k+1)!)`.
pub fn catalan_closed(k: u32) -> BigInt {
    let fact = |m: u32| -> BigInt { (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)) };
    fact(2 * k) / (fact(k) * fact(k + 1))
}
