//! Exact Laurent polynomials in `q` with arbitrary-precision coefficients,
//! together with the q-binomial family.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// Laurent polynomial `sum_k c_k q^k` stored densely from its valuation.
///
/// The zero polynomial has `val == 0` and no coefficients; otherwise the
/// first and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    val: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(0, vec![c.into()])
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        QPoly::from_coeffs(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QPoly::monomial(1, e)
    }

    /// Builds `sum_i coeffs[i] q^(val+i)`, trimming zeros at both ends.
    pub fn from_coeffs(val: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return QPoly::zero();
        }
        coeffs.drain(..lead);
        QPoly { val: val + lead as i64, coeffs }
    }

    pub fn from_i64s(val: i64, coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(val, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return QPoly::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        QPoly::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Least exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.val + self.coeffs.len() as i64 - 1)
    }

    /// Dense coefficients starting at the valuation.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.val;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::from_coeffs(self.val, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `q -> q^k` for a nonzero integer `k`.
    pub fn subs_pow(&self, k: i64) -> Self {
        assert!(k != 0, "substitution q -> q^0 is not invertible");
        QPoly::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// `q^{deg} p(1/q)` for a polynomial with nonnegative valuation.
    pub fn reversal(&self) -> Self {
        match self.degree() {
            None => QPoly::zero(),
            Some(d) => self.subs_pow(-1).shift(d),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `1 - q^i` (`i >= 1`); `None` if not divisible.
    pub fn div_one_minus_q_pow(&self, i: i64) -> Option<Self> {
        assert!(i >= 1);
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let n = self.coeffs.len();
        let i = i as usize;
        if n <= i {
            return None;
        }
        // b_k = a_k + b_{k-i}; the quotient has n - i coefficients.
        let mut b: Vec<BigInt> = Vec::with_capacity(n - i);
        for k in 0..n - i {
            let mut v = self.coeffs[k].clone();
            if k >= i {
                v += &b[k - i];
            }
            b.push(v);
        }
        // Remainder check: a_k + b_{k-i} must vanish for k >= n - i.
        for k in n - i..n {
            let mut v = self.coeffs[k].clone();
            if k >= i {
                v += &b[k - i];
            }
            if !v.is_zero() {
                return None;
            }
        }
        Some(QPoly::from_coeffs(self.val, b))
    }

    /// Exact division by a nonzero Laurent polynomial; `None` if the
    /// quotient is not a Laurent polynomial with integer coefficients.
    pub fn div_exact(&self, d: &QPoly) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let lead = d.coeffs.last().unwrap();
        let dn = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let qn = rem.len() - dn + 1;
        let mut quo = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let c = top / lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quo[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_coeffs(self.val - d.val, quo))
    }

    /// Divides every coefficient by `n`, failing unless all divide exactly.
    pub fn div_integer(&self, n: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % n).is_zero() {
                return None;
            }
            out.push(c / n);
        }
        Some(QPoly::from_coeffs(self.val, out))
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Palindromic coefficient sequence.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients weakly rise then weakly fall (zero polynomial counts).
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            match w[0].cmp(&w[1]) {
                Ordering::Less if falling => return false,
                Ordering::Greater => falling = true,
                _ => {}
            }
        }
        true
    }

    /// `self <= other` coefficient-wise.
    pub fn coeffwise_le(&self, other: &QPoly) -> bool {
        (other - self).has_nonneg_coeffs()
    }

    /// Shorthand `q^a(c0,c1,...)`, a bare integer for constants,
    /// `(c0,c1,...)` when the valuation is zero.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let list = self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        match (self.val, self.coeffs.len()) {
            (0, 1) => list,
            (0, _) => format!("({list})"),
            (v, _) => format!("q^{v}({list})"),
        }
    }

    /// Inverse of [`QPoly::pretty`]; also accepts a bare `q^a`.
    pub fn parse_pretty(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed polynomial `{s}`"));
        let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
        let (val, rest) = match s.strip_prefix("q^") {
            Some(r) => {
                let end = r.find('(').unwrap_or(r.len());
                let v = r[..end].trim().parse::<i64>().map_err(|_| bad())?;
                (v, &r[end..])
            }
            None => (0, s),
        };
        if rest.is_empty() {
            return if s.starts_with("q^") {
                Ok(QPoly::q_pow(val))
            } else {
                Err(bad())
            };
        }
        let coeffs = match rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) => inner.split(',').map(parse_int).collect::<Result<Vec<_>>>()?,
            None if val == 0 && !s.starts_with("q^") => vec![parse_int(rest)?],
            None => return Err(bad()),
        };
        Ok(QPoly::from_coeffs(val, coeffs))
    }

    fn add_into(&mut self, other: &QPoly, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other } else { other.clone() };
            return;
        }
        let lo = self.val.min(other.val);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let len = (hi - lo + 1) as usize;
        let mut out = Vec::with_capacity(len);
        let off_s = (self.val - lo) as usize;
        let off_o = (other.val - lo) as usize;
        for i in 0..len {
            let mut v = if i >= off_s && i - off_s < self.coeffs.len() {
                std::mem::take(&mut self.coeffs[i - off_s])
            } else {
                BigInt::zero()
            };
            if i >= off_o && i - off_o < other.coeffs.len() {
                if negate {
                    v -= &other.coeffs[i - off_o];
                } else {
                    v += &other.coeffs[i - off_o];
                }
            }
            out.push(v);
        }
        *self = QPoly::from_coeffs(lo, out);
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_into(rhs, false);
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        self.add_into(&rhs, false);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.add_into(rhs, true);
    }
}

impl SubAssign for QPoly {
    fn sub_assign(&mut self, rhs: QPoly) {
        self.add_into(&rhs, true);
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.val + rhs.val, out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::one();
        for p in iter {
            acc *= &p;
        }
        acc
    }
}

/// `1 - q^e`.
fn one_minus_q_pow(e: i64) -> QPoly {
    QPoly::one() - QPoly::q_pow(e)
}

/// `C(x, 2) = x(x-1)/2` for any signed `x`.
pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Ordinary binomial coefficient, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || n < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: i64) -> QPoly {
    QPoly::from_coeffs(0, vec![BigInt::one(); n.max(0) as usize])
}

/// `(q;q)_n = prod_{i=1}^n (1 - q^i)`.
pub fn q_pochhammer(n: i64) -> QPoly {
    (1..=n).map(one_minus_q_pow).product()
}

/// Gaussian binomial `[n; m]_q`; zero unless `0 <= m <= n`.
pub fn q_binomial(n: i64, m: i64) -> QPoly {
    if m < 0 || n < 0 || m > n {
        return QPoly::zero();
    }
    let m = m.min(n - m);
    // Partial products prod_{i<=k} (1-q^{n-m+i})/(1-q^i) are Gaussians.
    let mut acc = QPoly::one();
    for i in 1..=m {
        acc *= &one_minus_q_pow(n - m + i);
        acc = acc.div_one_minus_q_pow(i).expect("Gaussian partial product is a polynomial");
    }
    acc
}

/// Modified binomial `prod_{i=0}^{m-1}(1-q^{n-i}) / prod_{i=1}^m (1-q^i)`,
/// defined for every integer `n` and `m >= 0`.
pub fn q_binomial_modified(n: i64, m: i64) -> Result<QPoly> {
    if m < 0 {
        return domain(format!("modified q-binomial needs m >= 0, got m = {m}"));
    }
    if n >= 0 {
        // Either the standard Gaussian or a vanishing factor 1 - q^0.
        return Ok(q_binomial(n, m));
    }
    // 1 - q^{-e} = -q^{-e}(1 - q^e); the exponents e = -n .. -n+m-1 are
    // consecutive, so the quotient is the Gaussian [-n+m-1; m].
    let shift: i64 = (0..m).map(|i| n - i).sum();
    let sign = if m % 2 == 0 { 1 } else { -1 };
    Ok(q_binomial(-n + m - 1, m).shift(shift).scale(&BigInt::from(sign)))
}

/// `(q;q)_n / prod (q;q)_{m_i}` when all `m_i >= 0` and they sum to `n`;
/// the zero polynomial otherwise.
pub fn q_multinomial(n: i64, parts: &[i64]) -> QPoly {
    if parts.iter().any(|&m| m < 0) || parts.iter().sum::<i64>() != n {
        return QPoly::zero();
    }
    let mut rest = n;
    let mut acc = QPoly::one();
    for &m in parts {
        acc *= &q_binomial(rest, m);
        rest -= m;
    }
    acc
}

/// Splits a nonzero `p` as `q^v * u` with `u` of valuation zero.
pub fn dot_normalize(p: &QPoly) -> Result<(i64, QPoly)> {
    match p.valuation() {
        None => domain("dot_normalize of the zero polynomial"),
        Some(v) => Ok((v, p.shift(-v))),
    }
}

/// Valuation `a` and the coefficient `b` of `q^a`.
pub fn valuation_and_initial(p: &QPoly) -> Result<(i64, BigInt)> {
    match p.valuation() {
        None => domain("valuation of the zero polynomial"),
        Some(v) => Ok((v, p.coeff(v))),
    }
}

/// Equality up to a power of `q`; two zero polynomials are dot-equal.
pub fn dot_eq(a: &QPoly, b: &QPoly) -> bool {
    match (dot_normalize(a), dot_normalize(b)) {
        (Ok((_, x)), Ok((_, y))) => x == y,
        (Err(_), Err(_)) => true,
        _ => false,
    }
}
