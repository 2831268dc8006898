//! Semistandard (skew) tableaux, reading words, charge and the
//! charge-generated Kostka-Foulkes polynomials; lattice words for
//! rectangular Narayana numbers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::partition::{Composition, Partition};
use crate::qpoly::QPoly;

/// Default cap on `n*m` for lattice-word enumeration.
pub const NARAYANA_CAP: usize = 40;

/// A semistandard filling of the skew shape `shape / inner`.
///
/// `rows[i]` holds the entries of row `i` in the skew cells only, left to
/// right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    pub shape: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Entries read right to left within each row, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &e in self.rows.iter().flatten() {
            if w.len() < e {
                w.resize(e, 0);
            }
            w[e - 1] += 1;
        }
        w
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let at = |i: usize, j: usize| -> Option<usize> {
            let off = self.inner.part(i + 1);
            (j >= off).then(|| self.rows.get(i).and_then(|r| r.get(j - off)).copied()).flatten()
        };
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let off = self.inner.part(i + 1);
            for (k, &e) in row.iter().enumerate() {
                if i > 0 {
                    if let Some(above) = at(i - 1, off + k) {
                        if above >= e {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Ways to grow `cur` by a horizontal strip of `k` cells inside `bound`.
fn horizontal_strips(cur: &[usize], bound: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, cur: &[usize], bound: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let cap = if i == 0 { bound[0] } else { bound[i].min(cur[i - 1]) };
        let room = cap.saturating_sub(cur[i]);
        // Remaining rows can absorb at most this many cells.
        let later: usize = (i + 1..cur.len()).map(|r| bound[r] - cur[r]).sum();
        let lo = left.saturating_sub(later);
        for add in lo..=room.min(left) {
            acc.push(cur[i] + add);
            rec(i + 1, left - add, cur, bound, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, cur, bound, &mut Vec::with_capacity(cur.len()), &mut out);
    out
}

/// Every semistandard filling of `shape / inner` with content `weight`,
/// built as a chain of horizontal strips (letter 1 first).
pub fn enumerate_ssyt(shape: &Partition, inner: &Partition, weight: &Composition) -> Vec<Tableau> {
    if !inner.contained_in(shape) || shape.size() != inner.size() + weight.size() {
        return Vec::new();
    }
    let n = shape.len();
    let bound = shape.parts().to_vec();
    let start = inner.padded(n).expect("inner fits inside shape");
    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    fn rec(
        letter: usize,
        weight: &[usize],
        bound: &[usize],
        chain: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if letter == weight.len() {
            if chain.last().unwrap().as_slice() == bound {
                out.push(chain.clone());
            }
            return;
        }
        for next in horizontal_strips(chain.last().unwrap(), bound, weight[letter]) {
            chain.push(next);
            rec(letter + 1, weight, bound, chain, out);
            chain.pop();
        }
    }
    let mut chains = Vec::new();
    rec(0, weight.parts(), &bound, &mut chain, &mut chains);
    for ch in chains {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, w) in ch.windows(2).enumerate() {
            for i in 0..n {
                rows[i].extend(std::iter::repeat(k + 1).take(w[1][i] - w[0][i]));
            }
        }
        out.push(Tableau { shape: shape.clone(), inner: inner.clone(), rows });
    }
    out
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Composition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let bound = lambda.parts().to_vec();
    let mut layer: HashMap<Vec<usize>, BigInt> = HashMap::new();
    layer.insert(vec![0; bound.len()], BigInt::from(1));
    for &k in mu.parts() {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (cur, c) in &layer {
            for s in horizontal_strips(cur, &bound, k) {
                *next.entry(s).or_default() += c;
            }
        }
        layer = next;
    }
    layer.remove(&bound).unwrap_or_default()
}

fn check_partition_weight(w: &[usize]) -> Result<Vec<usize>> {
    let mut counts = Vec::new();
    for &e in w {
        if e == 0 {
            return domain("word letters must be positive");
        }
        if counts.len() < e {
            counts.resize(e, 0);
        }
        counts[e - 1] += 1;
    }
    if counts.windows(2).any(|c| c[0] < c[1]) {
        return Err(Error::Domain(format!("word weight {counts:?} is not a partition")));
    }
    Ok(counts)
}

/// Charge of a word whose weight is a partition.
///
/// Convention: the word is the reading word above (right to left, top row
/// first). Standard subwords are extracted by starting at the leftmost
/// unused `1` and scanning rightwards, cyclically, for `2, 3, ...`; each
/// wrap-around raises the index by one and the charge is the total index.
/// This is the usual procedure applied to the reversed word, and it is
/// pinned by `K_{(3),(1,1,1)} = q^3` and `K_{(2,1),(1^3)} = q + q^2`.
pub fn charge(word: &[usize]) -> Result<i64> {
    Ok(charge_subwords(word)?.into_iter().map(|(_, c)| c).sum())
}

/// The standard subwords (as position lists) with their charges.
pub fn charge_subwords(word: &[usize]) -> Result<Vec<(Vec<usize>, i64)>> {
    check_partition_weight(word)?;
    let len = word.len();
    let mut used = vec![false; len];
    let mut left = len;
    let mut out = Vec::new();
    while left > 0 {
        let Some(mut pos) = (0..len).find(|&i| !used[i] && word[i] == 1) else {
            return Err(Error::Internal("charge extraction lost track of letter 1".into()));
        };
        used[pos] = true;
        left -= 1;
        let mut positions = vec![pos];
        let (mut index, mut total) = (0i64, 0i64);
        let mut r = 1;
        loop {
            let target = r + 1;
            let mut found = None;
            for step in 1..=len {
                let i = (pos + step) % len;
                if !used[i] && word[i] == target {
                    found = Some((i, pos + step >= len));
                    break;
                }
            }
            let Some((i, wrapped)) = found else { break };
            if wrapped {
                index += 1;
            }
            total += index;
            used[i] = true;
            left -= 1;
            positions.push(i);
            pos = i;
            r = target;
        }
        out.push((positions, total));
    }
    Ok(out)
}

/// `K_{λμ}(q) = Σ_T q^{c(T)}` over semistandard tableaux of shape `λ` and
/// weight `μ`.
pub fn kostka_charge(lambda: &Partition, mu: &Partition) -> QPoly {
    if !mu.dominance_leq(lambda) {
        return QPoly::zero();
    }
    tableau_charge_sum(lambda, &Partition::empty(), mu)
}

/// Charge generating function of skew tableaux of shape `shape / inner`
/// and weight `ν`.
pub fn skew_kostka(shape: &Partition, inner: &Partition, nu: &Partition) -> QPoly {
    tableau_charge_sum(shape, inner, nu)
}

fn tableau_charge_sum(shape: &Partition, inner: &Partition, nu: &Partition) -> QPoly {
    let mut counts: HashMap<i64, i64> = HashMap::new();
    for t in enumerate_ssyt(shape, inner, &Composition::from(nu)) {
        let c = charge(&t.reading_word()).expect("partition weight");
        *counts.entry(c).or_default() += 1;
    }
    QPoly::from_terms(counts)
}

/// Rectangular Narayana polynomials `N(n,m;k|q)` for `k = 0..=(n-1)(m-1)`:
/// `Σ q^{maj(w)}` over lattice words with `m` copies each of `1..=n` and
/// `k` descents.
pub fn narayana(n: usize, m: usize) -> Result<Vec<QPoly>> {
    narayana_capped(n, m, NARAYANA_CAP)
}

pub fn narayana_capped(n: usize, m: usize, cap: usize) -> Result<Vec<QPoly>> {
    if n == 0 || m == 0 {
        return domain("narayana needs n, m >= 1");
    }
    if n * m > cap {
        return Err(Error::Resource(format!("n*m = {} exceeds the cap {cap}", n * m)));
    }
    // State: letter counts and last letter; value: des -> (maj -> count).
    type Tally = HashMap<usize, HashMap<i64, BigInt>>;
    let mut layer: HashMap<(Vec<usize>, usize), Tally> = HashMap::new();
    let mut seed = Tally::new();
    seed.entry(0).or_default().insert(0, BigInt::from(1));
    layer.insert((vec![0; n], 0), seed);
    for pos in 0..n * m {
        let mut next: HashMap<(Vec<usize>, usize), Tally> = HashMap::new();
        for ((counts, last), tally) in &layer {
            for letter in 1..=n {
                let c = counts[letter - 1];
                if c == m || (letter > 1 && counts[letter - 2] <= c) {
                    continue;
                }
                let mut nc = counts.clone();
                nc[letter - 1] += 1;
                // A descent sits between positions `pos` and `pos + 1`.
                let descent = *last > letter;
                let slot = next.entry((nc, letter)).or_default();
                for (&d, majs) in tally {
                    let nd = d + descent as usize;
                    let target = slot.entry(nd).or_default();
                    for (&maj, cnt) in majs {
                        let nm = maj + if descent { pos as i64 } else { 0 };
                        *target.entry(nm).or_default() += cnt;
                    }
                }
            }
        }
        layer = next;
    }
    let top = (n - 1) * (m - 1);
    let mut out = vec![QPoly::zero(); top + 1];
    for (_, tally) in layer {
        for (d, majs) in tally {
            let poly = QPoly::from_terms(majs);
            out[d] += &poly;
        }
    }
    Ok(out)
}
