//! Gelfand-Tsetlin patterns, Ehrhart polynomials of weight multiplicities,
//! Chan-Robbins flow counts, MacMahon box counts and the lowest-term
//! statistics `a`, `b` of parabolic Kostka polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::fermionic::{kostka_fermionic_count, parabolic_fermionic};
use crate::kostant::{kostant_count, RootSubset};
use crate::partition::{Composition, Partition, RectSequence};
use crate::qpoly::{binom2, binomial, valuation_and_initial};

/// Largest `n` accepted by [`chan_robbins_volume`].
pub const CHAN_ROBBINS_CAP: usize = 5;

/// Number of integer points of `GT(λ, μ)`.
pub fn gt_count(lambda: &Partition, mu: &Composition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return domain("|λ| and |μ| differ");
    }
    let n = lambda.len().max(mu.len()).max(1);
    let top = lambda.padded(n).expect("n >= l(λ)");
    let mut sums = vec![0usize; n + 1];
    for j in 1..=n {
        sums[j] = sums[j - 1] + mu.parts().get(j - 1).copied().unwrap_or(0);
    }
    let mut memo = HashMap::new();
    Ok(gt_rows(&top, &sums, &mut memo))
}

/// Patterns below the row `upper` (of length `j + 1`); the row of length
/// `j` must sum to `sums[j]`.
fn gt_rows(upper: &[usize], sums: &[usize], memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    let j = upper.len() - 1;
    if j == 0 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(upper) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut row = vec![0usize; j];
    interlacing(upper, sums[j], 0, &mut row, &mut |r| total += gt_rows(r, sums, memo));
    memo.insert(upper.to_vec(), total.clone());
    total
}

fn interlacing(upper: &[usize], left: usize, i: usize, row: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let j = row.len();
    if i == j {
        if left == 0 {
            f(row);
        }
        return;
    }
    let (lo, hi) = (upper[i + 1], upper[i]);
    let rest_lo: usize = (i + 1..j).map(|k| upper[k + 1]).sum();
    let rest_hi: usize = (i + 1..j).map(|k| upper[k]).sum();
    for x in lo..=hi.min(left) {
        if left - x < rest_lo || left - x > rest_hi {
            continue;
        }
        row[i] = x;
        interlacing(upper, left - x, i + 1, row, f);
    }
}

/// `dim GT(λ, μ) = (r-1)(s-1) - C(r,2) - Σ_i C(λ'_i - λ'_{i+1}, 2)` over all
/// columns `i` of `λ`.
pub fn gt_dim(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if !mu.dominance_leq(lambda) {
        return domain(format!("{mu} is not dominated by {lambda}"));
    }
    let (r, s) = (lambda.len() as i64, mu.len() as i64);
    let conj = lambda.conjugate();
    let cols: i64 = (1..=lambda.first()).map(|i| binom2(conj.part(i) as i64 - conj.part(i + 1) as i64)).sum();
    Ok((r - 1) * (s - 1) - binom2(r) - cols)
}

/// Polynomial in `t` with rational coefficients (power basis).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EhrhartPoly {
    coeffs: Vec<BigRational>,
}

impl EhrhartPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EhrhartPoly { coeffs }
    }

    /// Interpolate `(t, value)` points by Newton divided differences.
    pub fn interpolate(points: &[(i64, BigInt)]) -> Self {
        let xs: Vec<BigRational> = points.iter().map(|(t, _)| BigRational::from_integer(BigInt::from(*t))).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, v)| BigRational::from_integer(v.clone())).collect();
        let n = dd.len();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut acc: Vec<BigRational> = vec![];
        for i in (0..n).rev() {
            // acc = acc * (t - x_i) + dd[i]
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xs[i];
            }
            next[0] += &dd[i];
            acc = next;
        }
        Self::new(acc)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Leading coefficient times `d!`.
    pub fn normalized_volume(&self) -> BigRational {
        let d = self.degree().unwrap_or(0);
        self.leading() * BigRational::from_integer((1..=d).fold(BigInt::one(), |a, i| a * i))
    }
}

impl std::fmt::Display for EhrhartPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 if c.is_one() => "t".to_string(),
                1 => format!("{c}*t"),
                _ if c.is_one() => format!("t^{k}"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Ehrhart fit together with the conjectural diagnostics it reports.
#[derive(Clone, Debug)]
pub struct EhrhartFit {
    pub poly: EhrhartPoly,
    /// Degree predicted by the dimension formula.
    pub predicted_degree: usize,
    pub integral_coeffs: bool,
    pub nonneg_coeffs: bool,
}

/// Interpolates `sample(l)` at `l = 0..=d`, checks two further points and
/// raises the degree (up to `d + 2`) until they agree.
pub fn ehrhart_fit(predicted: usize, sample: impl Fn(i64) -> BigInt) -> Result<EhrhartFit> {
    let mut values: Vec<(i64, BigInt)> = Vec::new();
    for d in predicted..=predicted + 2 {
        while values.len() < d + 3 {
            let l = values.len() as i64;
            values.push((l, sample(l)));
        }
        let poly = EhrhartPoly::interpolate(&values[..=d]);
        if values[d + 1..d + 3].iter().all(|(l, v)| poly.eval(*l) == BigRational::from_integer(v.clone())) {
            let (integral_coeffs, nonneg_coeffs) = (poly.is_integral(), poly.has_nonneg_coeffs());
            return Ok(EhrhartFit { poly, predicted_degree: predicted, integral_coeffs, nonneg_coeffs });
        }
    }
    Err(Error::Internal(format!("no polynomial of degree <= {} fits the samples", predicted + 2)))
}

/// Ehrhart polynomial `l ↦ K_{lλ, lμ}` of the weight subspace.
pub fn ehrhart_weight(lambda: &Partition, mu: &Partition) -> Result<EhrhartFit> {
    let d = gt_dim(lambda, mu)?.max(0) as usize;
    ehrhart_fit(d, |l| kostka_fermionic_count(&lambda.scale(l as usize), &mu.scale(l as usize)))
}

/// Integer points of the dilated Chan-Robbins polytope: the Kostant count
/// of `(k, 0, ..., 0, -k)` over all positive roots of `gl(n+1)`.
pub fn chan_robbins_count(n: usize, k: usize) -> Result<BigInt> {
    if n < 2 {
        return domain("Chan-Robbins polytopes need n >= 2");
    }
    let mut gamma = vec![0i64; n + 1];
    gamma[0] = k as i64;
    gamma[n] = -(k as i64);
    kostant_count(&RootSubset::full(n + 1), &gamma)
}

/// Ehrhart polynomial of the Chan-Robbins polytope `CR_n`.
pub fn chan_robbins_ehrhart(n: usize) -> Result<EhrhartFit> {
    if !(2..=CHAN_ROBBINS_CAP).contains(&n) {
        return Err(Error::Resource(format!("Chan-Robbins volumes limited to 2 <= n <= {CHAN_ROBBINS_CAP}")));
    }
    let d = n * (n - 1) / 2;
    ehrhart_fit(d, |k| chan_robbins_count(n, k as usize).expect("n >= 2"))
}

/// Normalized volume of `CR_n`.
pub fn chan_robbins_volume(n: usize) -> Result<BigRational> {
    Ok(chan_robbins_ehrhart(n)?.poly.normalized_volume())
}

/// Catalan number `C_j`.
pub fn catalan(j: usize) -> BigInt {
    binomial(2 * j as i64, j as i64) / BigInt::from(j + 1)
}

/// Plane partitions in an `n x m` box with parts at most `k`:
/// `∏_{i≤n, j≤m} (k + i + j - 1) / (i + j - 1)`.
pub fn macmahon_count(n: usize, m: usize, k: usize) -> Result<BigInt> {
    if n == 0 || m == 0 {
        return domain("MacMahon counts need n, m >= 1");
    }
    let mut v = BigRational::one();
    for i in 1..=n {
        for j in 1..=m {
            v *= BigRational::new(BigInt::from(k + i + j - 1), BigInt::from(i + j - 1));
        }
    }
    if !v.is_integer() {
        return Err(Error::Internal("MacMahon product is not an integer".into()));
    }
    Ok(v.to_integer())
}

/// Brute-force count of `m` weakly decreasing rows of length `n` with parts
/// at most `k`, weakly decreasing down columns.
pub fn macmahon_brute(n: usize, m: usize, k: usize) -> BigInt {
    fn rows(n: usize, cap: &[usize], out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let hi = cap[cur.len()].min(cur.last().copied().unwrap_or(usize::MAX));
        for x in 0..=hi {
            cur.push(x);
            rows(n, cap, out, cur);
            cur.pop();
        }
    }
    let mut layer: HashMap<Vec<usize>, BigInt> = HashMap::new();
    layer.insert(vec![k; n], BigInt::one());
    for _ in 0..m {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (cap, c) in &layer {
            let mut all = Vec::new();
            rows(n, cap, &mut all, &mut Vec::new());
            for r in all {
                *next.entry(r).or_default() += c;
            }
        }
        layer = next;
    }
    layer.values().sum()
}

/// δ-vector of the MacMahon polytope: the numerator of
/// `Σ_k macmahon_count(n, m, k) t^k = δ(t) / (1 - t)^{nm+1}`.
pub fn macmahon_delta(n: usize, m: usize) -> Result<Vec<BigInt>> {
    let d = n * m;
    let h: Vec<BigInt> = (0..=d).map(|k| macmahon_count(n, m, k)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut s = BigInt::zero();
        for i in 0..=j {
            let c = binomial((d + 1) as i64, i as i64);
            if i % 2 == 0 {
                s += &h[j - i] * c;
            } else {
                s -= &h[j - i] * c;
            }
        }
        out.push(s);
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

/// Lowest-term statistics of `K_{λR}(q)` and the doubled instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbStats {
    pub a: i64,
    pub b: BigInt,
    pub report: SaturationReport,
}

/// Observations on the saturation and Fulton-type conjectures; never
/// asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub a_doubled: i64,
    pub b_doubled: BigInt,
    /// `a(2λ, 2R) == 2 a(λ, R)`.
    pub saturation_consistent: bool,
    /// `b(λ, R) == 1` iff `b(2λ, 2R) == 1`.
    pub fulton_consistent: bool,
}

/// `(a, b)` with `K_{λR}(q) = b q^a + ...`, computed from the fermionic
/// sum, plus the doubled comparison.
pub fn ab_stats(lambda: &Partition, r: &RectSequence) -> Result<AbStats> {
    if lambda.size() != r.size() {
        return domain("|λ| and |R| differ");
    }
    let (a, b) = valuation_and_initial(&parabolic_fermionic(lambda, r))?;
    let (a2, b2) = valuation_and_initial(&parabolic_fermionic(&lambda.scale(2), &r.scale_widths(2)))?;
    let report = SaturationReport {
        saturation_consistent: a2 == 2 * a,
        fulton_consistent: (b.is_one()) == (b2.is_one()),
        a_doubled: a2,
        b_doubled: b2,
    };
    Ok(AbStats { a, b, report })
}

/// `(a, b)` of `K_{λμ}(q)` for a single partition weight.
pub fn ab_kostka(lambda: &Partition, mu: &Partition) -> Result<(i64, BigInt)> {
    valuation_and_initial(&crate::fermionic::kostka_fermionic(lambda, mu))
}

/// Small integer conversion for reports.
pub fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{kostka_number, narayana};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn gt_counts() {
        assert_eq!(gt_count(&p(&[2, 1]), &Composition::ones(3)).unwrap(), BigInt::from(2));
        assert_eq!(gt_count(&p(&[2, 2]), &Composition::ones(4)).unwrap(), BigInt::from(2));
        assert_eq!(gt_count(&p(&[3, 2, 1]), &Composition::new(vec![3, 2, 1])).unwrap(), BigInt::one());
        let mu = Composition::new(vec![1, 2, 1, 2]);
        assert_eq!(gt_count(&p(&[3, 2, 1]), &mu).unwrap(), kostka_number(&p(&[3, 2, 1]), &mu));
    }

    #[test]
    fn dimensions() {
        assert_eq!(gt_dim(&p(&[7, 4, 3, 2]), &p(&[4, 4, 3, 2, 1, 1, 1])).unwrap(), 12);
        assert_eq!(gt_dim(&p(&[4, 4]), &p(&[1; 8])).unwrap(), 5);
        assert_eq!(gt_dim(&p(&[3, 3, 3]), &p(&[1; 9])).unwrap(), 10);
        assert!(gt_dim(&p(&[2, 2]), &p(&[3, 1])).is_err());
    }

    #[test]
    fn ehrhart_examples() {
        let f = ehrhart_weight(&p(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(1)]);
        let f = ehrhart_weight(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(1), rat(1)]);
        assert!(f.integral_coeffs && f.nonneg_coeffs);
        let f = ehrhart_weight(&p(&[4, 4]), &p(&[1; 8])).unwrap();
        assert_eq!(f.poly.degree(), Some(5));
    }

    #[test]
    fn interpolation() {
        let pts: Vec<(i64, BigInt)> = (0..4).map(|t| (t, BigInt::from(t * t * t - 2 * t + 5))).collect();
        let e = EhrhartPoly::interpolate(&pts);
        assert_eq!(e.coeffs(), &[rat(5), rat(-2), rat(0), rat(1)]);
        assert_eq!(e.eval(10), rat(985));
    }

    #[test]
    fn chan_robbins() {
        assert_eq!(chan_robbins_count(3, 1).unwrap(), BigInt::from(4));
        for n in 2..=5 {
            assert_eq!(chan_robbins_count(n, 0).unwrap(), BigInt::one());
            assert_eq!(chan_robbins_count(n, 1).unwrap(), BigInt::from(1u64 << (n - 1)));
        }
        assert_eq!(chan_robbins_volume(3).unwrap(), rat(1));
        assert_eq!(chan_robbins_volume(2).unwrap(), rat(1));
        assert_eq!(chan_robbins_volume(4).unwrap(), rat(2));
        assert!(chan_robbins_volume(6).is_err());
    }

    #[test]
    fn macmahon() {
        assert_eq!(macmahon_count(2, 2, 1).unwrap(), BigInt::from(6));
        assert_eq!(macmahon_count(2, 2, 2).unwrap(), BigInt::from(20));
        assert_eq!(macmahon_count(3, 2, 0).unwrap(), BigInt::one());
        for (n, m, k) in [(2, 2, 1), (2, 2, 2), (2, 3, 3), (3, 3, 2), (1, 4, 5)] {
            assert_eq!(macmahon_count(n, m, k).unwrap(), macmahon_brute(n, m, k));
        }
        for (n, m) in [(2, 3), (3, 2), (2, 2)] {
            assert_eq!(macmahon_count(n, m, 1).unwrap(), binomial((n + m) as i64, n as i64));
        }
        for (n, m) in [(2, 2), (2, 3), (3, 4)] {
            let nar: Vec<BigInt> = narayana(n, m).unwrap().iter().map(|p| p.eval_one()).collect();
            assert_eq!(macmahon_delta(n, m).unwrap(), nar);
        }
    }

    #[test]
    fn ab_examples() {
        let r = RectSequence::from_pairs(&[(3, 1), (3, 1), (2, 2), (1, 1), (1, 1)]).unwrap();
        let s = ab_stats(&p(&[4, 4, 2, 2]), &r).unwrap();
        assert_eq!((s.a, s.b.clone()), (2, BigInt::one()));
        assert!(s.report.saturation_consistent);
        assert_eq!(ab_kostka(&p(&[5, 2]), &p(&[2, 2, 2, 1])).unwrap(), (4, BigInt::one()));
        assert_eq!(ab_kostka(&p(&[4, 2, 2]), &p(&[2, 2, 2, 1, 1])).unwrap(), (3, BigInt::from(2)));
        assert_eq!(ab_kostka(&p(&[7, 4, 3, 2]), &p(&[4, 4, 3, 2, 1, 1, 1])).unwrap(), (5, BigInt::from(6)));
    }
}
