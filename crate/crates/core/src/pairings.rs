//! Non-crossing pair partitions, plain and colored by an `α`/`β` word.
//!
//! Positions are 0-based internally; [`Pairing::one_based`] gives the
//! `{1,…,2k}` form used in reports.
//!
//! Enumeration order is canonical and other modules rely on it: the first open
//! position is paired with each admissible partner in ascending order; for each
//! partner the pairings of the inner gap are the outer loop and those of the
//! remaining tail the inner loop.
//!
//! The counting functions run their own interval recursion and never call the
//! enumerators, so count-vs-enumerate is a genuine cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::words::{Letter, Word};

/// A perfect non-crossing matching of `0..2k`, pairs stored as `(i, j)` with
/// `i < j`, sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

/// A pairing whose every pair joins one `α` and one `β` of `word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPairing {
    pub base: Pairing,
    pub word: Word,
}

impl Pairing {
    /// Builds a pairing from arbitrary pairs, checking the perfect-matching and
    /// non-crossing invariants on `0..points`.
    pub fn new(points: usize, pairs: Vec<(usize, usize)>) -> Option<Pairing> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_unstable();
        let p = Pairing { pairs };
        p.is_valid(points).then_some(p)
    }

    pub fn empty() -> Pairing {
        Pairing { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn points(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn one_based(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    /// `partner[i]` for every position.
    pub fn partners(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.points()];
        for &(i, j) in &self.pairs {
            out[i] = j;
            out[j] = i;
        }
        out
    }

    pub fn is_valid(&self, points: usize) -> bool {
        if 2 * self.pairs.len() != points {
            return false;
        }
        let mut seen = vec![false; points];
        for &(i, j) in &self.pairs {
            if i >= j || j >= points || seen[i] || seen[j] {
                return false;
            }
            seen[i] = true;
            seen[j] = true;
        }
        for &(im, jm) in &self.pairs {
            for &(in_, jn) in &self.pairs {
                if im < in_ && in_ < jm && jn > jm {
                    return false;
                }
            }
        }
        true
    }

    fn shifted(&self, by: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(move |&(i, j)| (i + by, j + by))
    }
}

impl ColoredPairing {
    pub fn is_valid(&self) -> bool {
        let letters = self.word.letters();
        self.base.is_valid(letters.len())
            && self
                .base
                .pairs()
                .iter()
                .all(|&(i, j)| letters[i] != letters[j])
    }
}

/// Every non-crossing perfect matching of `2k` points, in canonical order.
pub fn enumerate_plain(k: usize) -> Vec<Pairing> {
    enumerate_gap(2 * k, &|_, _| true)
}

/// Every non-crossing matching of the positions of `w` pairing `α` with `β`,
/// in canonical order. Empty when `|w|` is odd or the letter counts differ.
pub fn enumerate_colored(w: &Word) -> Vec<ColoredPairing> {
    let letters = w.letters();
    if letters.len() % 2 == 1 || w.count(Letter::Alpha) != w.count(Letter::Beta) {
        return Vec::new();
    }
    enumerate_gap(letters.len(), &|i, j| letters[i] != letters[j])
        .into_iter()
        .map(|base| ColoredPairing {
            base,
            word: w.clone(),
        })
        .collect()
}

fn enumerate_gap(points: usize, admissible: &dyn Fn(usize, usize) -> bool) -> Vec<Pairing> {
    fn rec(lo: usize, hi: usize, admissible: &dyn Fn(usize, usize) -> bool) -> Vec<Pairing> {
        if lo == hi {
            return vec![Pairing::empty()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            if !admissible(lo, j) {
                continue;
            }
            let inside = rec(lo + 1, j, admissible);
            if inside.is_empty() {
                continue;
            }
            let after = rec(j + 1, hi, admissible);
            for a in &inside {
                for b in &after {
                    let mut pairs = Vec::with_capacity((hi - lo) / 2);
                    pairs.push((lo, j));
                    pairs.extend(a.pairs.iter().copied());
                    pairs.extend(b.pairs.iter().copied());
                    pairs.sort_unstable();
                    out.push(Pairing { pairs });
                }
            }
        }
        out
    }
    if points % 2 == 1 {
        return Vec::new();
    }
    rec(0, points, admissible)
}

/// Concatenation of pairings side by side.
pub fn juxtapose(left: &Pairing, right: &Pairing) -> Pairing {
    let mut pairs: Vec<(usize, usize)> = left.pairs.clone();
    pairs.extend(right.shifted(left.points()));
    pairs.sort_unstable();
    Pairing { pairs }
}

/// Number of non-crossing pairings of `2k` points, by the first-return recursion
/// `D_{k+1} = Σ_{x+y=k} D_x D_y`.
pub fn count_plain(k: usize) -> BigInt {
    let mut d = vec![BigInt::one()];
    for m in 1..=k {
        let mut total = BigInt::zero();
        for x in 0..m {
            total += &d[x] * &d[m - 1 - x];
        }
        d.push(total);
    }
    d.swap_remove(k)
}

/// Number of color-matched non-crossing pairings of `w`, by a bottom-up
/// interval table over all subwords.
pub fn count_colored(w: &Word) -> BigInt {
    let letters = w.letters();
    let len = letters.len();
    // table[i][j] = count for letters[i..j]; only even spans are nonzero
    let mut table = vec![vec![BigInt::zero(); len + 1]; len + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    for span in (2..=len).step_by(2) {
        for i in 0..=len - span {
            let j = i + span;
            let mut total = BigInt::zero();
            for m in (i + 1..j).step_by(2) {
                if letters[m] != letters[i] {
                    total += &table[i + 1][m] * &table[m + 1][j];
                }
            }
            table[i][j] = total;
        }
    }
    table[0][len].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::catalan_closed;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    // Every perfect matching of `points` positions, crossing or not.
    fn all_matchings(points: usize) -> Vec<Vec<(usize, usize)>> {
        fn rec(free: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
            if free.is_empty() {
                return vec![vec![]];
            }
            let first = free[0];
            let mut out = Vec::new();
            for idx in 1..free.len() {
                let mut rest = free.clone();
                let partner = rest.remove(idx);
                rest.remove(0);
                for mut m in rec(rest) {
                    m.push((first, partner));
                    out.push(m);
                }
            }
            out
        }
        rec((0..points).collect())
    }

    #[test]
    fn plain_small_cases() {
        assert_eq!(enumerate_plain(0), vec![Pairing::empty()]);
        let two = enumerate_plain(2);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].one_based(), vec![(1, 2), (3, 4)]);
        assert_eq!(two[1].one_based(), vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn plain_matches_filtered_brute_force() {
        for k in 0..=5 {
            let brute: Vec<_> = all_matchings(2 * k)
                .into_iter()
                .filter_map(|m| Pairing::new(2 * k, m))
                .collect();
            let mut enumerated = enumerate_plain(k);
            assert_eq!(enumerated.len(), brute.len());
            enumerated.sort_by(|a, b| a.pairs.cmp(&b.pairs));
            let mut brute = brute;
            brute.sort_by(|a, b| a.pairs.cmp(&b.pairs));
            assert_eq!(enumerated, brute);
        }
        // 4 points: 3 matchings, exactly one crossing
        assert_eq!(all_matchings(4).len(), 3);
    }

    #[test]
    fn plain_counts_are_catalan() {
        for k in 0..=8 {
            let n = enumerate_plain(k).len();
            assert_eq!(BigInt::from(n), catalan_closed(k as u32));
            assert_eq!(count_plain(k), catalan_closed(k as u32));
        }
    }

    #[test]
    fn colored_examples() {
        let ab = enumerate_colored(&w("ab"));
        assert_eq!(ab.len(), 1);
        assert_eq!(ab[0].base.one_based(), vec![(1, 2)]);
        assert!(enumerate_colored(&w("aa")).is_empty());
        assert!(enumerate_colored(&w("aab")).is_empty());
        assert_eq!(enumerate_colored(&Word::empty()).len(), 1);
        assert_eq!(enumerate_colored(&w("abab")).len(), 2);
    }

    #[test]
    fn every_enumerated_pairing_is_valid() {
        for k in 0..=6 {
            for p in enumerate_plain(k) {
                assert!(p.is_valid(2 * k));
            }
        }
        for x in Word::all_up_to(8) {
            for cp in enumerate_colored(&x) {
                assert!(cp.is_valid());
            }
        }
    }

    #[test]
    fn colored_count_agrees_and_is_dominated() {
        for x in Word::all_up_to(10) {
            let listed = enumerate_colored(&x).len();
            assert_eq!(BigInt::from(listed), count_colored(&x), "{x}");
            if x.len() % 2 == 0 {
                assert!(listed <= enumerate_plain(x.len() / 2).len());
            }
        }
    }

    #[test]
    fn colored_is_subset_of_plain_in_order() {
        for x in Word::all_up_to(8) {
            if x.len() % 2 == 1 {
                continue;
            }
            let plain = enumerate_plain(x.len() / 2);
            let mut cursor = 0;
            for cp in enumerate_colored(&x) {
                let pos = plain[cursor..]
                    .iter()
                    .position(|p| *p == cp.base)
                    .expect("colored pairing must appear in plain order");
                cursor += pos + 1;
            }
        }
    }

    #[test]
    fn invalid_pairings_rejected() {
        assert!(Pairing::new(4, vec![(0, 2), (1, 3)]).is_none());
        assert!(Pairing::new(4, vec![(0, 1), (1, 3)]).is_none());
        assert!(Pairing::new(4, vec![(0, 1)]).is_none());
        assert!(Pairing::new(4, vec![(3, 0), (2, 1)]).is_some());
    }

    #[test]
    fn juxtaposition() {
        let p = Pairing::new(2, vec![(0, 1)]).unwrap();
        let q = Pairing::new(4, vec![(0, 3), (1, 2)]).unwrap();
        let pq = juxtapose(&p, &q);
        assert_eq!(pq.one_based(), vec![(1, 2), (3, 6), (4, 5)]);
        assert!(pq.is_valid(6));
    }
}
