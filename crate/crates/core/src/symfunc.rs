//! Finite-variable symmetric functions: the antisymmetrizers `J` and `π_n`,
//! Schur and Hall-Littlewood polynomials, Schur-basis expansion of
//! products, inversion of the Kostka-Foulkes matrix and the graded
//! character of the exterior algebra of `gl(n)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::partition::{partitions, partitions_bounded, Composition, Partition};
use crate::qpoly::{q_pochhammer, QPoly};
use crate::tableaux::{kostka_charge, kostka_number};

/// Default cap on the number of variables for Hall-Littlewood polynomials.
pub const HL_CAP: usize = 6;

/// Largest `N` accepted by [`inverse_kostka_matrix`].
pub const INVERSE_KOSTKA_CAP: usize = 8;

/// Largest rank accepted by [`exterior_poly`].
pub const EXTERIOR_CAP: usize = 4;

/// Laurent polynomial in `x_1..x_n` with `Z[q, q^-1]` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiLaurent {
    n: usize,
    terms: BTreeMap<Vec<i64>, QPoly>,
}

impl MultiLaurent {
    pub fn zero(n: usize) -> Self {
        MultiLaurent { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], QPoly::one())
    }

    /// `c x^e`.
    pub fn monomial(e: Vec<i64>, c: QPoly) -> Self {
        let mut m = Self::zero(e.len());
        m.add_term(e, &c);
        m
    }

    /// `x^λ` with `λ` padded by zeros to length `n`.
    pub fn x_pow(lambda: &Partition, n: usize) -> Result<Self> {
        let Some(e) = lambda.padded(n) else {
            return domain(format!("{lambda} has more than {n} parts"));
        };
        Ok(Self::monomial(e.into_iter().map(|x| x as i64).collect(), QPoly::one()))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> QPoly {
        self.terms.get(e).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: &QPoly) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    /// Multiply by `x^s`.
    pub fn shift(&self, s: &[i64]) -> Self {
        MultiLaurent {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(s).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `w(x^e) = x^{e'}` with `e'_{w(k)} = e_k` (0-based `w`).
    pub fn permute(&self, w: &[usize]) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.n];
            for (k, &x) in e.iter().enumerate() {
                f[w[k]] = x;
            }
            out.add_term(f, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            self.terms.get(&s) == Some(c)
        })
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, ..., 1)`.
    pub fn eval_ones(&self) -> QPoly {
        self.terms.values().cloned().sum()
    }

    /// Exact quotient by `x_i - x_j` (0-based), if it exists.
    pub fn div_difference(&self, i: usize, j: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let lo = self.terms.keys().map(|e| e[i]).min()?;
        let hi = self.terms.keys().map(|e| e[i]).max()?;
        let mut levels: Vec<HashMap<Vec<i64>, QPoly>> = vec![HashMap::new(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            levels[(e[i] - lo) as usize].insert(e.clone(), c.clone());
        }
        let mut out = Self::zero(self.n);
        for d in (1..levels.len()).rev() {
            let level = std::mem::take(&mut levels[d]);
            for (mut e, c) in level {
                if c.is_zero() {
                    continue;
                }
                e[i] -= 1;
                out.add_term(e.clone(), &c);
                e[j] += 1;
                let slot = levels[d - 1].entry(e).or_insert_with(QPoly::zero);
                *slot += &c;
            }
        }
        levels[0].values().all(QPoly::is_zero).then_some(out)
    }

    fn check_n(&self, other: &Self) {
        assert_eq!(self.n, other.n, "variable counts differ");
    }
}

impl std::fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("[{c}]x^{e:?}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Add<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.check_n(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.check_n(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Mul<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        self.check_n(rhs);
        let mut acc: HashMap<Vec<i64>, QPoly> = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(QPoly::zero) += &(c * d);
            }
        }
        MultiLaurent { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

/// Expansion over dominant weights (weakly decreasing integer vectors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymExpansion {
    n: usize,
    terms: BTreeMap<Vec<i64>, QPoly>,
}

impl SymExpansion {
    pub fn new(n: usize) -> Self {
        SymExpansion { n, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, weight: Vec<i64>, c: &QPoly) -> Result<()> {
        if weight.len() != self.n || weight.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{weight:?} is not a dominant weight of gl({})", self.n));
        }
        let slot = self.terms.entry(weight.clone()).or_insert_with(QPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&weight);
        }
        Ok(())
    }

    pub fn get(&self, weight: &[i64]) -> QPoly {
        self.terms.get(weight).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Coefficient of the partition `λ` (padded to `n` parts).
    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        match lambda.padded(self.n) {
            Some(p) => self.get(&p.into_iter().map(|x| x as i64).collect::<Vec<_>>()),
            None => QPoly::zero(),
        }
    }

    /// Terms in decreasing lexicographic order of weights.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QPoly)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn sign(w: &[usize]) -> i64 {
    let inv = (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn delta(n: usize) -> Vec<i64> {
    (0..n).rev().map(|i| i as i64).collect()
}

/// `J(f) = Σ_w sgn(w) w(x^δ f)` with `δ = (n-1, ..., 0)`.
pub fn antisymmetrize(f: &MultiLaurent) -> MultiLaurent {
    let n = f.n;
    let g = f.shift(&delta(n));
    let mut out = MultiLaurent::zero(n);
    for w in (0..n).permutations(n) {
        let s = QPoly::constant(sign(&w));
        for (e, c) in &g.terms {
            let mut f = vec![0; n];
            for (k, &x) in e.iter().enumerate() {
                f[w[k]] = x;
            }
            out.add_term(f, &(c * &s));
        }
    }
    out
}

/// `π_n(f) = J(f) / J(1)`, the quotient taken by exact division by every
/// `x_i - x_j`.
pub fn pi_n(f: &MultiLaurent) -> Result<MultiLaurent> {
    let n = f.n;
    let mut j = antisymmetrize(f);
    if j.is_zero() {
        return Ok(j);
    }
    let lo: Vec<i64> = (0..n).map(|i| j.terms.keys().map(|e| e[i]).min().unwrap_or(0)).collect();
    let m = *lo.iter().min().unwrap_or(&0);
    let back = vec![m; n];
    j = j.shift(&vec![-m; n]);
    for a in 0..n {
        for b in a + 1..n {
            j = j
                .div_difference(a, b)
                .ok_or_else(|| Error::Internal(format!("J(f) not divisible by x{} - x{}", a + 1, b + 1)))?;
        }
    }
    let out = j.shift(&back);
    if !out.is_symmetric() {
        return Err(Error::Internal("π_n(f) is not symmetric".into()));
    }
    Ok(out)
}

thread_local! {
    static SCHUR_CACHE: RefCell<HashMap<(Partition, usize), MultiLaurent>> = RefCell::new(HashMap::new());
    static HL_CACHE: RefCell<HashMap<(Partition, usize), MultiLaurent>> = RefCell::new(HashMap::new());
}

/// Weak compositions of `total` into `n` parts.
fn compositions(total: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn schur_by_tableaux(lambda: &Partition, n: usize) -> MultiLaurent {
    let mut out = MultiLaurent::zero(n);
    for c in compositions(lambda.size(), n) {
        let k = kostka_number(lambda, &Composition::new(c.clone()));
        if !k.is_zero() {
            out.add_term(c.into_iter().map(|x| x as i64).collect(), &QPoly::constant(k));
        }
    }
    out
}

/// `s_λ(x_1..x_n)` as a tableau sum, checked against `π_n(x^λ)`.
pub fn schur_poly(lambda: &Partition, n: usize) -> Result<MultiLaurent> {
    if lambda.len() > n {
        return domain(format!("{lambda} has more than {n} parts"));
    }
    let key = (lambda.clone(), n);
    if let Some(s) = SCHUR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(s);
    }
    let s = schur_by_tableaux(lambda, n);
    if n <= HL_CAP && pi_n(&MultiLaurent::x_pow(lambda, n)?)? != s {
        return Err(Error::Internal(format!("tableau and antisymmetrizer Schur polynomials differ for {lambda}")));
    }
    SCHUR_CACHE.with(|c| c.borrow_mut().insert(key, s.clone()));
    Ok(s)
}

/// Weyl character of the dominant weight `ν` (entries may be negative).
pub fn weyl_character(nu: &[i64]) -> Result<MultiLaurent> {
    let n = nu.len();
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return domain(format!("{nu:?} is not dominant"));
    }
    let m = nu.last().copied().unwrap_or(0);
    let lam = Partition::new(nu.iter().map(|&x| (x - m) as usize).collect());
    Ok(schur_poly(&lam, n)?.shift(&vec![m; n]))
}

/// `∏_{(i,j) ∈ roots} (1 - q x_j / x_i)` in `n` variables (1-based pairs).
pub fn root_product(n: usize, roots: &[(usize, usize)]) -> MultiLaurent {
    let mut out = MultiLaurent::one(n);
    for &(i, j) in roots {
        let mut e = vec![0; n];
        e[i - 1] = -1;
        e[j - 1] = 1;
        let mut f = MultiLaurent::one(n);
        f.add_term(e, &QPoly::monomial(-1, 1));
        out = &out * &f;
    }
    out
}

/// `v_μ(q) = ∏_{i≥0} [m_i]_q!` with `m_0 = n - l(μ)`.
pub fn hl_normalizer(mu: &Partition, n: usize) -> QPoly {
    let mut mult = vec![n.saturating_sub(mu.len())];
    mult.extend((1..=mu.first()).map(|i| mu.m_j(i)));
    mult.into_iter()
        .map(|m| {
            let m = m as i64;
            (1..=m).fold(q_pochhammer(m), |acc, _| acc.div_one_minus_q_pow(1).expect("(q;q)_m / (1-q)^m"))
        })
        .product()
}

/// Hall-Littlewood polynomial `P_μ(x_1..x_n; q)`.
pub fn hl_poly(mu: &Partition, n: usize) -> Result<MultiLaurent> {
    hl_poly_capped(mu, n, HL_CAP)
}

pub fn hl_poly_capped(mu: &Partition, n: usize, cap: usize) -> Result<MultiLaurent> {
    if n > cap {
        return Err(Error::Resource(format!("Hall-Littlewood polynomials limited to {cap} variables")));
    }
    if mu.len() > n {
        return domain(format!("{mu} has more than {n} parts"));
    }
    let key = (mu.clone(), n);
    if let Some(p) = HL_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(p);
    }
    let roots: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let f = &MultiLaurent::x_pow(mu, n)? * &root_product(n, &roots);
    let vp = pi_n(&f)?;
    let v = hl_normalizer(mu, n);
    let mut out = MultiLaurent::zero(n);
    for (e, c) in vp.terms() {
        let d = c.div_exact(&v).ok_or_else(|| Error::Internal(format!("v_{mu}(q) does not divide π_n")))?;
        out.add_term(e.clone(), &d);
    }
    HL_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    Ok(out)
}

fn as_weight(p: &Partition, n: usize) -> Vec<i64> {
    p.padded(n).expect("length checked").into_iter().map(|x| x as i64).collect()
}

/// `K_{λμ}(q)` from `s_λ = Σ_ν K_{λν}(q) P_ν` by back-substitution in the
/// monomial basis.
pub fn kostka_via_hl(lambda: &Partition, mu: &Partition, n: usize) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return domain("|λ| and |μ| differ");
    }
    if lambda.len() > n || mu.len() > n {
        return domain(format!("lengths exceed {n}"));
    }
    if n > HL_CAP {
        return Err(Error::Resource(format!("Hall-Littlewood polynomials limited to {HL_CAP} variables")));
    }
    let mut residual = schur_poly(lambda, n)?;
    for nu in partitions_bounded(lambda.size(), lambda.size(), n) {
        if nu.parts() < mu.parts() {
            break;
        }
        let w = as_weight(&nu, n);
        let c = residual.coeff(&w);
        if nu == *mu {
            return Ok(c);
        }
        if !c.is_zero() {
            residual = &residual - &hl_poly(&nu, n)?.scale(&c);
        }
    }
    Ok(QPoly::zero())
}

/// Schur expansion of a symmetric polynomial whose exponents are all
/// nonnegative, by peeling off the lexicographically largest dominant term.
pub fn schur_expand(f: &MultiLaurent) -> Result<SymExpansion> {
    let n = f.n;
    let mut dominant: Vec<(Vec<i64>, QPoly)> =
        f.terms().filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1])).map(|(e, c)| (e.clone(), c.clone())).collect();
    if dominant.iter().any(|(e, _)| e.iter().any(|&x| x < 0)) {
        return domain("schur_expand needs nonnegative exponents");
    }
    dominant.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = SymExpansion::new(n);
    let mut found: Vec<(Partition, QPoly)> = Vec::new();
    for (e, c) in dominant {
        let kappa = Composition::new(e.iter().map(|&x| x as usize).collect());
        let mut d = c;
        for (nu, cn) in &found {
            let k = kostka_number(nu, &kappa);
            if !k.is_zero() {
                d -= &cn.scale(&k);
            }
        }
        if !d.is_zero() {
            out.add(e.clone(), &d)?;
            found.push((kappa.sorted(), d));
        }
    }
    Ok(out)
}

/// Schur expansion of `∏ s_{factor}(x_1..x_n)`.
pub fn schur_product_expand(factors: &[Partition], n: usize) -> Result<SymExpansion> {
    let mut prod = MultiLaurent::one(n);
    for f in factors {
        prod = &prod * &schur_by_tableaux_checked(f, n)?;
    }
    schur_expand(&prod)
}

fn schur_by_tableaux_checked(lambda: &Partition, n: usize) -> Result<MultiLaurent> {
    if lambda.len() > n {
        return domain(format!("{lambda} has more than {n} parts"));
    }
    Ok(schur_by_tableaux(lambda, n))
}

/// Square matrix of `K_{λμ}(q)` over partitions of `N` (rows `λ`, columns
/// `μ`), indexed in reverse lexicographic order.
pub fn kostka_matrix(size: usize) -> (Vec<Partition>, Vec<Vec<QPoly>>) {
    let parts = partitions(size);
    let m = parts.iter().map(|l| parts.iter().map(|mu| kostka_charge(l, mu)).collect()).collect();
    (parts, m)
}

/// Exact inverse of the Kostka-Foulkes matrix of size `N`.
pub fn inverse_kostka_matrix(size: usize) -> Result<(Vec<Partition>, Vec<Vec<QPoly>>)> {
    if size > INVERSE_KOSTKA_CAP {
        return Err(Error::Resource(format!("inverse Kostka matrix limited to N <= {INVERSE_KOSTKA_CAP}")));
    }
    let (parts, k) = kostka_matrix(size);
    let len = parts.len();
    let mut inv = vec![vec![QPoly::zero(); len]; len];
    for j in 0..len {
        inv[j][j] = QPoly::one();
        for i in (0..j).rev() {
            let mut s = QPoly::zero();
            for l in i + 1..=j {
                if !k[i][l].is_zero() && !inv[l][j].is_zero() {
                    s += &(&k[i][l] * &inv[l][j]);
                }
            }
            inv[i][j] = -s;
        }
    }
    Ok((parts, inv))
}

/// Graded character `Σ_k q^k ch Λ^k(gl(n))`.
pub fn exterior_character(n: usize) -> MultiLaurent {
    let mut out = MultiLaurent::one(n);
    let one_plus_q = QPoly::from_i64s(0, &[1, 1]);
    for i in 0..n {
        for j in 0..n {
            let mut f = MultiLaurent::one(n);
            let mut e = vec![0; n];
            if i == j {
                f = f.scale(&one_plus_q);
            } else {
                e[i] += 1;
                e[j] -= 1;
                f.add_term(e, &QPoly::q_pow(1));
            }
            out = &out * &f;
        }
    }
    out
}

thread_local! {
    static EXTERIOR_CACHE: RefCell<HashMap<usize, Vec<(Vec<i64>, QPoly)>>> = RefCell::new(HashMap::new());
}

/// Decomposition of the exterior algebra of `gl(n)` into irreducibles:
/// pairs (highest weight, graded multiplicity), highest first.
pub fn exterior_decomposition(n: usize) -> Result<Vec<(Vec<i64>, QPoly)>> {
    if n == 0 || n > EXTERIOR_CAP {
        return Err(Error::Resource(format!("exterior algebra limited to 1 <= n <= {EXTERIOR_CAP}")));
    }
    if let Some(d) = EXTERIOR_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return Ok(d);
    }
    let mut residual = exterior_character(n);
    let mut out = Vec::new();
    loop {
        let top = residual.terms().filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1])).map(|(e, c)| (e.clone(), c.clone())).last();
        let Some((w, c)) = top else { break };
        if !c.has_nonneg_coeffs() {
            return Err(Error::Internal(format!("negative multiplicity at {w:?}")));
        }
        residual = &residual - &weyl_character(&w)?.scale(&c);
        out.push((w, c));
    }
    if !residual.is_zero() {
        return Err(Error::Internal("exterior character is not a sum of Weyl characters".into()));
    }
    EXTERIOR_CACHE.with(|c| c.borrow_mut().insert(n, out.clone()));
    Ok(out)
}

/// `E_n(V_λ)`: graded multiplicity of `V_{λ - ((n-1)^n)}` in the exterior
/// algebra of `gl(n)`, for `|λ| = n(n-1)`.
pub fn exterior_poly(lambda: &Partition, n: usize) -> Result<QPoly> {
    if lambda.size() != n * n.saturating_sub(1) {
        return domain(format!("|{lambda}| must equal n(n-1) = {}", n * n.saturating_sub(1)));
    }
    if lambda.len() > n {
        return domain(format!("{lambda} has more than {n} parts"));
    }
    let w: Vec<i64> = as_weight(lambda, n).into_iter().map(|x| x - (n as i64 - 1)).collect();
    Ok(exterior_decomposition(n)?.into_iter().find(|(v, _)| *v == w).map(|(_, c)| c).unwrap_or_else(QPoly::zero))
}

/// Weyl dimension of the dominant weight `ν`.
pub fn weyl_dimension(nu: &[i64]) -> BigInt {
    let n = nu.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= nu[i] - nu[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// Length of the longest subsequence of `w` that is a union of `k`
/// increasing subsequences.
pub fn greene_a(w: &[usize], k: usize) -> usize {
    let n = w.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let sub: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).collect();
        if min_increasing_cover(&sub) <= k {
            best = size;
        }
    }
    best
}

/// Fewest increasing subsequences covering a word: the longest strictly
/// decreasing subsequence.
fn min_increasing_cover(w: &[usize]) -> usize {
    let mut lds = vec![1usize; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                lds[i] = lds[i].max(lds[j] + 1);
            }
        }
    }
    lds.into_iter().max().unwrap_or(0)
}

/// Number of inversions of `w`.
pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

/// `q^{l(w w_0)} ∏_k (1 + q^{2k-1})^{a_k(w) - a_{k-1}(w)}` for a permutation
/// `w` of `1..=n` in one-line notation.
pub fn exterior_permutation_formula(w: &[usize]) -> QPoly {
    let n = w.len();
    let len_ww0 = n * (n.saturating_sub(1)) / 2 - inversions(w);
    let mut out = QPoly::q_pow(len_ww0 as i64);
    let mut prev = 0;
    for k in 1..=n {
        let a = greene_a(w, k);
        let factor = QPoly::one() + QPoly::q_pow(2 * k as i64 - 1);
        out *= &factor.pow((a - prev) as u32);
        prev = a;
    }
    out
}

/// `δ + w(δ)` with `δ = (n-1, ..., 0)` and `w(δ)_{w(i)} = δ_i`.
pub fn delta_plus_w_delta(w: &[usize]) -> Vec<i64> {
    let n = w.len();
    let d = delta(n);
    let mut wd = vec![0; n];
    for i in 0..n {
        wd[w[i] - 1] = d[i];
    }
    d.iter().zip(&wd).map(|(a, b)| a + b).collect()
}
