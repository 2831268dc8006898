//! Root subsets `Φ(η)`, the q-Kostant partition function and the
//! alternating-sum definition of parabolic Kostka polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::partition::{Composition, Partition, Rect, RectSequence};
use crate::qpoly::QPoly;

/// Positive roots `e_i - e_j` (`i < j`, 1-based) of `gl(n)` in a subset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootSubset {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl RootSubset {
    /// All positive roots of `gl(n)`.
    pub fn full(n: usize) -> Self {
        phi(&Composition::ones(n)).expect("ones are positive")
    }
}

/// `Φ(η)`: pairs `(i, j)` separated by some partial sum of `η`.
pub fn phi(eta: &Composition) -> Result<RootSubset> {
    if eta.parts().iter().any(|&e| e == 0) {
        return domain("Φ(η) needs positive parts");
    }
    let n = eta.size();
    let mut block = Vec::with_capacity(n);
    for (b, &e) in eta.parts().iter().enumerate() {
        block.extend(std::iter::repeat(b).take(e));
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if block[i - 1] != block[j - 1] {
                pairs.push((i, j));
            }
        }
    }
    Ok(RootSubset { n, pairs })
}

/// Values a partition function can be accumulated in: q-graded or plain
/// counts.
pub trait Weight: Clone {
    fn null() -> Self;
    fn unit() -> Self;
    fn add_assign(&mut self, other: &Self);
    fn sub_assign(&mut self, other: &Self);
    /// Multiplies by `q^k`.
    fn shift(&self, k: i64) -> Self;
}

impl Weight for QPoly {
    fn null() -> Self {
        QPoly::zero()
    }
    fn unit() -> Self {
        QPoly::one()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn shift(&self, k: i64) -> Self {
        QPoly::shift(self, k)
    }
}

impl Weight for BigInt {
    fn null() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn shift(&self, _k: i64) -> Self {
        self.clone()
    }
}

/// Memoized partition function for one root subset. Roots are peeled in
/// lexicographic order; the memo key is (root index, residual vector).
pub struct Kostant<W: Weight> {
    roots: Vec<(usize, usize)>,
    /// `last[r]` is true when root `r` is the last one leaving its source.
    last: Vec<bool>,
    n: usize,
    memo: HashMap<(usize, Vec<i64>), W>,
}

impl<W: Weight> Kostant<W> {
    pub fn new(set: &RootSubset) -> Self {
        let mut roots: Vec<(usize, usize)> = set.pairs.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        roots.sort_unstable();
        let last = (0..roots.len()).map(|r| r + 1 == roots.len() || roots[r + 1].0 != roots[r].0).collect();
        Kostant { roots, last, n: set.n, memo: HashMap::new() }
    }

    /// `Σ q^{Σ m}` over `Σ m_ij (e_i − e_j) = γ`, `m_ij >= 0`.
    pub fn eval(&mut self, gamma: &[i64]) -> Result<W> {
        if gamma.len() != self.n {
            return domain(format!("weight of length {} for {} variables", gamma.len(), self.n));
        }
        if gamma.iter().sum::<i64>() != 0 {
            return domain("Kostant argument must have coordinate sum zero");
        }
        if !in_cone(gamma) {
            return Ok(W::null());
        }
        Ok(self.rec(0, gamma.to_vec()))
    }

    fn rec(&mut self, r: usize, res: Vec<i64>) -> W {
        if r == self.roots.len() {
            return if res.iter().all(|&x| x == 0) { W::unit() } else { W::null() };
        }
        let (i, j) = self.roots[r];
        // Nodes before `i` are finished and must be balanced.
        if res[..i].iter().any(|&x| x != 0) || res[i] < 0 {
            return W::null();
        }
        let key = (r, res);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let res = key.1.clone();
        let avail = res[i];
        let range = if self.last[r] { avail..=avail } else { 0..=avail };
        let mut acc = W::null();
        for m in range {
            let mut next = res.clone();
            next[i] -= m;
            next[j] += m;
            let sub = self.rec(r + 1, next);
            acc.add_assign(&sub.shift(m));
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// Prefix sums nonnegative and total zero (the cone spanned by positive
/// roots).
pub fn in_cone(gamma: &[i64]) -> bool {
    let mut s = 0;
    for &g in gamma {
        s += g;
        if s < 0 {
            return false;
        }
    }
    s == 0
}

/// q-analogue of the Kostant partition function.
pub fn kostant_q(set: &RootSubset, gamma: &[i64]) -> Result<QPoly> {
    Kostant::<QPoly>::new(set).eval(gamma)
}

/// Number of ways to write `γ` as a nonnegative combination of the roots.
pub fn kostant_count(set: &RootSubset, gamma: &[i64]) -> Result<BigInt> {
    Kostant::<BigInt>::new(set).eval(gamma)
}

/// `Σ_{w ∈ S_n} (−1)^{l(w)} K_{Φ(η)}(w(λ+δ) − (μ+δ); q)` with
/// `δ = (n−1, ..., 1, 0)` and `λ, μ` zero-padded to `n = |η|`.
pub fn parabolic_altsum(lambda: &[i64], mu: &[i64], eta: &Composition) -> Result<QPoly> {
    altsum_generic::<QPoly>(lambda, mu, eta)
}

/// The alternating sum at `q = 1`.
pub fn parabolic_altsum_count(lambda: &[i64], mu: &[i64], eta: &Composition) -> Result<BigInt> {
    altsum_generic::<BigInt>(lambda, mu, eta)
}

fn altsum_generic<W: Weight>(lambda: &[i64], mu: &[i64], eta: &Composition) -> Result<W> {
    let n = eta.size();
    let pad = |v: &[i64], what: &str| -> Result<Vec<i64>> {
        let nz = v.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        if nz > n {
            return domain(format!("{what} has {nz} nonzero entries but |η| = {n}"));
        }
        let mut out: Vec<i64> = v[..nz].to_vec();
        out.resize(n, 0);
        Ok(out)
    };
    let lam = pad(lambda, "λ")?;
    let mu = pad(mu, "μ")?;
    let set = phi(eta)?;
    if lam.iter().sum::<i64>() != mu.iter().sum::<i64>() {
        return Ok(W::null());
    }
    let mut k = Kostant::<W>::new(&set);
    let shifted: Vec<i64> = (0..n).map(|i| lam[i] + (n - 1 - i) as i64).collect();
    let base: Vec<i64> = (0..n).map(|i| mu[i] + (n - 1 - i) as i64).collect();
    let mut total = W::null();
    let mut perm = shifted.clone();
    let mut sign = 1i64;
    let visit = |perm: &[i64], sign: i64, total: &mut W, k: &mut Kostant<W>| -> Result<()> {
        let gamma: Vec<i64> = perm.iter().zip(&base).map(|(a, b)| a - b).collect();
        if !in_cone(&gamma) {
            return Ok(());
        }
        let v = k.eval(&gamma)?;
        if sign > 0 {
            total.add_assign(&v);
        } else {
            total.sub_assign(&v);
        }
        Ok(())
    };
    // Heap's algorithm: every step is one transposition.
    visit(&perm, sign, &mut total, &mut k)?;
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign, &mut total, &mut k)?;
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

/// `K_{λR}(q)` through the alternating sum with `μ(R)`, `η(R)`.
pub fn parabolic_k(lambda: &Partition, r: &RectSequence) -> Result<QPoly> {
    let (lam, mu) = parabolic_args(lambda, r);
    parabolic_altsum(&lam, &mu, &r.eta())
}

/// `K_{λR}(1)` through the alternating sum.
pub fn parabolic_k_count(lambda: &Partition, r: &RectSequence) -> Result<BigInt> {
    let (lam, mu) = parabolic_args(lambda, r);
    parabolic_altsum_count(&lam, &mu, &r.eta())
}

fn parabolic_args(lambda: &Partition, r: &RectSequence) -> (Vec<i64>, Vec<i64>) {
    let lam = lambda.parts().iter().map(|&x| x as i64).collect();
    let mu = r.mu().parts().iter().map(|&x| x as i64).collect();
    (lam, mu)
}

/// Kostka-Foulkes polynomial as the alternating sum with `η = (1^n)`,
/// `n = max(l(λ), l(μ))`.
pub fn kostka_altsum(lambda: &Partition, mu: &Partition) -> QPoly {
    if lambda.size() != mu.size() {
        return QPoly::zero();
    }
    let n = lambda.len().max(mu.len()).max(1);
    let lam: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    let m: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
    parabolic_altsum(&lam, &m, &Composition::ones(n)).expect("lengths fit")
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}` read off the lowest term of
/// `K_{λ̃, R̃}(q)`, where `λ̃ = (λ_1+μ_1, ..., λ_1+μ_s, λ_1, ..., λ_p)` with
/// `s = l(μ)` and `R̃` rearranges the rows of `ν` together with the
/// rectangle `(λ_1^s)`.
pub fn lr_via_parabolic(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if nu.size() != lambda.size() + mu.size() {
        return domain("LR coefficient needs |ν| = |λ| + |μ|");
    }
    if lambda.is_empty() {
        return Ok(if mu == nu { BigInt::one() } else { BigInt::zero() });
    }
    let (lt, rt) = lr_data(lambda, mu, nu);
    let k = parabolic_k(&lt, &rt)?;
    let want = nu.q_j(lambda.first()) as i64 - lambda.size() as i64;
    Ok(match k.valuation() {
        Some(a) if a == want => k.coeff(a),
        _ => BigInt::zero(),
    })
}

/// The pair `(λ̃, R̃)` used by [`lr_via_parabolic`].
pub fn lr_data(lambda: &Partition, mu: &Partition, nu: &Partition) -> (Partition, RectSequence) {
    let l1 = lambda.first();
    let s = mu.len();
    let mut parts: Vec<usize> = mu.parts().iter().map(|m| l1 + m).collect();
    parts.extend_from_slice(lambda.parts());
    let mut rects: Vec<Rect> = nu.parts().iter().map(|&w| Rect::new(w, 1)).collect();
    rects.push(Rect::new(l1, s));
    (Partition::new(parts), RectSequence::dominant_rearrangement(rects))
}

/// The data `([α, β]_{n,k}, Q)` whose parabolic Kostka polynomial factors
/// as `K_{αR}(q) K_{βS}(q)`, with `k = Σ μ_a` over `S`.
pub fn product_pair(
    alpha: &Partition,
    r: &RectSequence,
    beta: &Partition,
    s: &RectSequence,
    n: usize,
) -> Result<(Partition, RectSequence)> {
    let k: usize = s.rects().iter().map(|x| x.width).sum();
    if n < alpha.len() + beta.len() || s.rects().iter().any(|x| x.height > n) {
        return domain("n must exceed l(α) + l(β) and every height of S");
    }
    if beta.first() > k {
        return domain("β_1 must not exceed k");
    }
    let (sa, rb) = (alpha.len(), beta.len());
    let mut parts: Vec<usize> = alpha.parts().iter().map(|a| a + k).collect();
    parts.extend(std::iter::repeat(k).take(n - sa - rb));
    parts.extend(beta.parts().iter().rev().map(|b| k - b));
    let mut rects = r.rects().to_vec();
    rects.extend(s.rects().iter().map(|x| Rect::new(x.width, n - x.height)));
    Ok((Partition::new(parts), RectSequence::dominant_rearrangement(rects)))
}
