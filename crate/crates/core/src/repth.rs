//! Symmetric-group characters, Kronecker coefficients, the polynomials
//! `L^μ_{αβ}(q)`, principal specializations of internal products,
//! generalized exponents, mixed tensor highest weights and rectangular
//! q-Catalan polynomials.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::partition::{partitions, Partition, Rect, RectSequence};
use crate::qpoly::{q_multinomial, q_pochhammer, QPoly};
use crate::tableaux::kostka_charge;

/// Character table of `S_n`, rows and columns indexed by [`partitions`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<BigInt>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Self {
        let parts = partitions(n);
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut memo = HashMap::new();
        let values = parts.iter().map(|l| parts.iter().map(|r| mn_character(l.parts(), r.parts(), &mut memo)).collect()).collect();
        let z = parts.iter().map(z_rho).collect();
        CharacterTable { n, parts, index, values, z }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn chi(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        match (self.index.get(lambda), self.index.get(rho)) {
            (Some(&i), Some(&j)) => Ok(self.values[i][j]),
            _ => domain(format!("{lambda} and {rho} must both be partitions of {}", self.n)),
        }
    }

    /// Row of `χ^λ` over the classes.
    pub fn row(&self, lambda: &Partition) -> Result<&[i64]> {
        match self.index.get(lambda) {
            Some(&i) => Ok(&self.values[i]),
            None => domain(format!("{lambda} is not a partition of {}", self.n)),
        }
    }

    /// `z_ρ` in class order.
    pub fn z(&self) -> &[BigInt] {
        &self.z
    }

    /// Class size `n! / z_ρ` in class order.
    pub fn class_sizes(&self) -> Vec<BigInt> {
        let f = factorial(self.n);
        self.z.iter().map(|z| &f / z).collect()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `z_ρ = ∏ k^{m_k} m_k!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for k in 1..=rho.first() {
        let m = rho.m_j(k);
        z *= BigInt::from(k).pow(m as u32) * factorial(m);
    }
    z
}

/// Murnaghan-Nakayama on beta numbers: remove a `ρ_1`-rim hook from `λ`.
fn mn_character(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let k = rho[0];
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mu: Vec<usize> = nb.iter().enumerate().map(|(j, &c)| c - (l - 1 - j)).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&mu, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

thread_local! {
    static TABLES: RefCell<HashMap<usize, Rc<CharacterTable>>> = RefCell::new(HashMap::new());
}

/// The shared character table of `S_n`.
pub fn character_table(n: usize) -> Rc<CharacterTable> {
    TABLES.with(|t| t.borrow_mut().entry(n).or_insert_with(|| Rc::new(CharacterTable::build(n))).clone())
}

/// `χ^λ(ρ)`.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return domain("|λ| and |ρ| differ");
    }
    character_table(lambda.size()).chi(lambda, rho)
}

/// Exact division of a class sum by `n!`.
fn divide_class_sum(total: BigInt, n: usize, what: &str) -> Result<BigInt> {
    let (q, r) = total.div_rem(&factorial(n));
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: class sum not divisible by {n}!")));
    }
    Ok(q)
}

/// Kronecker coefficient `g_{αβγ}`.
pub fn kronecker(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<BigInt> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return domain("Kronecker coefficients need partitions of equal size");
    }
    let t = character_table(n);
    let (a, b, c) = (t.row(alpha)?, t.row(beta)?, t.row(gamma)?);
    let total: BigInt = t.class_sizes().iter().enumerate().map(|(j, s)| s * (a[j] * b[j] * c[j])).sum();
    let g = divide_class_sum(total, n, "Kronecker coefficient")?;
    if g.sign() == num_bigint::Sign::Minus {
        return Err(Error::Internal(format!("negative Kronecker coefficient for {alpha}, {beta}, {gamma}")));
    }
    Ok(g)
}

/// Nonzero terms of `s_α * s_β = Σ_γ g_{αβγ} s_γ`.
pub fn kronecker_expand(alpha: &Partition, beta: &Partition) -> Result<Vec<(Partition, BigInt)>> {
    let mut out = Vec::new();
    for gamma in partitions(alpha.size()) {
        let g = kronecker(alpha, beta, &gamma)?;
        if !g.is_zero() {
            out.push((gamma, g));
        }
    }
    Ok(out)
}

/// `L^μ_{αβ}(q) = Σ_γ g_{αβγ} K_{γμ}(q)`.
pub fn l_poly(alpha: &Partition, beta: &Partition, mu: &Partition) -> Result<QPoly> {
    if mu.size() != alpha.size() {
        return domain("|μ| must equal |α|");
    }
    let mut out = QPoly::zero();
    for (gamma, g) in kronecker_expand(alpha, beta)? {
        out += &kostka_charge(&gamma, mu).scale(&g);
    }
    Ok(out)
}

/// `(1/n!) Σ_w χ^α(w) χ^β(w) ∏_k f_k^{ρ_k(w)}` for per-cycle-length weights.
fn class_sum(alpha: &Partition, beta: &Partition, f: impl Fn(usize) -> QPoly, what: &str) -> Result<QPoly> {
    let n = alpha.size();
    if beta.size() != n {
        return domain("|α| and |β| differ");
    }
    let t = character_table(n);
    let (a, b) = (t.row(alpha)?, t.row(beta)?);
    let sizes = t.class_sizes();
    let mut cache: HashMap<usize, QPoly> = HashMap::new();
    let mut total = QPoly::zero();
    for (j, rho) in t.partitions().iter().enumerate() {
        let c = a[j] * b[j];
        if c == 0 {
            continue;
        }
        let mut term = QPoly::constant(&sizes[j] * c);
        for &k in rho.parts() {
            term *= cache.entry(k).or_insert_with(|| f(k));
        }
        total += &term;
    }
    total.div_integer(&factorial(n)).ok_or_else(|| Error::Internal(format!("{what}: class sum not divisible by {n}!")))
}

/// `s_α * s_β (q, q^2, ..., q^{N-1})`.
pub fn internal_spec(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<QPoly> {
    if big_n < 1 {
        return domain("N must be positive");
    }
    let nn = big_n as i64;
    class_sum(
        alpha,
        beta,
        |k| {
            let k = k as i64;
            (QPoly::q_pow(k) - QPoly::q_pow(k * nn)).div_one_minus_q_pow(k).expect("geometric sum")
        },
        "principal specialization",
    )
}

/// The two-parameter class sum `S_{αβ;N,M}(q)`.
pub fn internal_spec_nm(alpha: &Partition, beta: &Partition, big_n: usize, big_m: usize) -> Result<QPoly> {
    if big_n < 1 || big_m < 1 {
        return domain("N and M must be positive");
    }
    let (nn, mm) = (big_n as i64, big_m as i64);
    class_sum(
        alpha,
        beta,
        |k| {
            let k = k as i64;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let num = QPoly::q_pow(k) - QPoly::monomial(1 + sign, k * nn) + QPoly::monomial(sign, k * (nn + mm - 1));
            num.div_one_minus_q_pow(k).expect("numerator vanishes at q^k = 1")
        },
        "two-parameter specialization",
    )
}

/// Generalized exponents `G_N(V_λ) = K_{λ, ((|λ|/N)^N)}(q)`, zero when `N`
/// does not divide `|λ|`.
pub fn gen_exponents(lambda: &Partition, big_n: usize) -> Result<QPoly> {
    if big_n == 0 || lambda.len() > big_n {
        return domain(format!("{lambda} needs at most N = {big_n} parts"));
    }
    if lambda.size() % big_n != 0 {
        return Ok(QPoly::zero());
    }
    Ok(kostka_charge(lambda, &Partition::new(vec![lambda.size() / big_n; big_n])))
}

/// `[N; N - μ'_1, μ'_1 - μ'_2, ...]_q`, zero when `l(μ) > N`.
pub fn column_multinomial(mu: &Partition, big_n: usize) -> QPoly {
    if mu.len() > big_n {
        return QPoly::zero();
    }
    let mut parts = vec![(big_n - mu.len()) as i64];
    parts.extend((1..=mu.first()).map(|i| mu.m_j(i) as i64));
    q_multinomial(big_n as i64, &parts)
}

/// `G_N(V_α ⊗ V_β^*) = Σ_μ K_{αμ}(q) K_{βμ}(q) [N; N - μ'_1, ...]_q`.
///
/// When `|α| ≠ |β|` the smaller side is enlarged by an `N`-row rectangle;
/// the result is zero unless `N` divides the difference.
pub fn mixed_exponents(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<QPoly> {
    if big_n == 0 {
        return domain("N must be positive");
    }
    let (a, b) = (alpha.size(), beta.size());
    if a.abs_diff(b) % big_n != 0 {
        return Ok(QPoly::zero());
    }
    let widen = |p: &Partition, c: usize| -> Result<Partition> {
        let Some(v) = p.padded(big_n) else {
            return domain(format!("{p} has more than N = {big_n} parts"));
        };
        Ok(Partition::new(v.into_iter().map(|x| x + c).collect()))
    };
    let (ta, tb) = if a >= b {
        (alpha.clone(), widen(beta, (a - b) / big_n)?)
    } else {
        (widen(alpha, (b - a) / big_n)?, beta.clone())
    };
    let mut out = QPoly::zero();
    for mu in partitions(ta.size()) {
        let ka = kostka_charge(&ta, &mu);
        if ka.is_zero() {
            continue;
        }
        let kb = kostka_charge(&tb, &mu);
        if kb.is_zero() {
            continue;
        }
        out += &(&(&ka * &kb) * &column_multinomial(&mu, big_n));
    }
    Ok(out)
}

/// Highest weight `[α, β]_N` of the mixed tensor representation, as a
/// weakly decreasing vector of length `N`.
pub fn bracket(alpha: &Partition, beta: &Partition, big_n: usize) -> Result<Vec<usize>> {
    let (s, r) = (alpha.len(), beta.len());
    if s + r > big_n {
        return domain(format!("l(α) + l(β) = {} exceeds N = {big_n}", s + r));
    }
    let b1 = beta.first();
    let mut out: Vec<usize> = alpha.parts().iter().map(|a| a + b1).collect();
    out.extend(std::iter::repeat(b1).take(big_n - s - r));
    out.extend(beta.parts().iter().rev().map(|b| b1 - b));
    Ok(out)
}

/// Rectangular q-Catalan `(q;q)_{nm} / ∏_{i≤n, j≤m} (1 - q^{i+j-1})`.
pub fn rect_catalan(n: usize, m: usize) -> Result<QPoly> {
    if n == 0 || m == 0 {
        return domain("rectangular Catalan needs n, m >= 1");
    }
    let mut den = QPoly::one();
    for i in 1..=n {
        for j in 1..=m {
            den *= &(QPoly::one() - QPoly::q_pow((i + j - 1) as i64));
        }
    }
    q_pochhammer((n * m) as i64)
        .div_exact(&den)
        .ok_or_else(|| Error::Internal(format!("rectangular Catalan ({n},{m}) is not a polynomial")))
}

/// Reversed form `K̃_{λμ}(q) = q^{n(μ) - n(λ)} K_{λμ}(1/q)`.
pub fn tilde_kostka(lambda: &Partition, mu: &Partition) -> QPoly {
    kostka_charge(lambda, mu).subs_pow(-1).shift(mu.n_stat() - lambda.n_stat())
}

/// Generalized Gaussian `∏_{x∈λ} (1 - q^{N + c(x)}) / (1 - q^{h(x)})` with
/// content `c(x) = j - i`.
pub fn generalized_gaussian(big_n: usize, lambda: &Partition) -> Result<QPoly> {
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for (i, j) in lambda.cells() {
        let c = big_n as i64 + j as i64 - i as i64;
        num *= &(QPoly::one() - QPoly::q_pow(c));
        den *= &(QPoly::one() - QPoly::q_pow(lambda.hook(i, j) as i64));
    }
    if num.is_zero() {
        return Ok(QPoly::zero());
    }
    num.div_exact(&den).ok_or_else(|| Error::Internal(format!("[{big_n}; {lambda}] is not a polynomial")))
}

/// Shapes `(N|λ|, λ)` and `(|λ|^{N+1})` whose cocharge Kostka polynomial is
/// the generalized Gaussian `[N; λ']`.
pub fn gaussian_pair(lambda: &Partition, big_n: usize) -> (Partition, Partition) {
    let s = lambda.size();
    let mut top = vec![big_n * s];
    top.extend_from_slice(lambda.parts());
    (Partition::new(top), Partition::new(vec![s; big_n + 1]))
}

/// Shape `(N^n)` and weight `(N - λ_n, ..., N - λ_1, μ_1, ..., μ_n)`, a
/// partition because `N >= λ_1 + μ_1`.
pub fn transport_pair(lambda: &Partition, mu: &Partition, n: usize, big_n: usize) -> Result<(Partition, Partition)> {
    if lambda.len() > n || mu.len() > n || big_n < lambda.first() + mu.first() {
        return domain("need l(λ), l(μ) <= n and N >= λ_1 + μ_1");
    }
    let lp = lambda.padded(n).expect("length checked");
    let mut w: Vec<usize> = lp.iter().rev().map(|l| big_n - l).collect();
    w.extend(mu.padded(n).expect("length checked"));
    Ok((Partition::new(vec![big_n; n]), Partition::new(w)))
}

/// `Σ_η K_{ηλ}(q) K_{ημ}(q)`.
pub fn kostka_pair_sum(lambda: &Partition, mu: &Partition) -> QPoly {
    let mut out = QPoly::zero();
    for eta in partitions(lambda.size()) {
        let a = kostka_charge(&eta, lambda);
        if !a.is_zero() {
            out += &(&a * &kostka_charge(&eta, mu));
        }
    }
    out
}

/// Parabolic data `([α, β]_{Nr}, N copies of β_1 x r)` matching
/// `s_α * s_β(q, ..., q^{N-1})` up to a power of `q`.
pub fn internal_spec_parabolic(alpha: &Partition, beta: &Partition, big_n: usize, r: usize) -> Result<(Partition, RectSequence)> {
    if alpha.len() > r || alpha.len() + beta.len() > big_n * r {
        return domain("need l(α) <= r and l(α) + l(β) <= N r");
    }
    let lam = Partition::new(bracket(alpha, beta, big_n * r)?);
    let rects = RectSequence::new(vec![Rect::new(beta.first(), r); big_n])?;
    Ok((lam, rects))
}

/// Parabolic data `([α, β]_{N+r}, N rows β_1 and one β_1 x r)` matching
/// `G_N(V_α ⊗ V_β^*)` up to a power of `q`.
pub fn mixed_exponents_parabolic(alpha: &Partition, beta: &Partition, big_n: usize, r: usize) -> Result<(Partition, RectSequence)> {
    if alpha.len() > r {
        return domain("need l(α) <= r");
    }
    let lam = Partition::new(bracket(alpha, beta, big_n + r)?);
    let b1 = beta.first();
    let mut rects = vec![Rect::new(b1, 1); big_n];
    rects.push(Rect::new(b1, r));
    Ok((lam, RectSequence::dominant_rearrangement(rects)))
}
