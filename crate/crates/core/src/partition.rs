//! Partitions, compositions and dominant rectangle sequences.

use std::fmt;

use crate::error::{domain, Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts descending and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Rejects negative entries, otherwise behaves like [`Partition::new`].
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if let Some(p) = parts.iter().find(|&&p| p < 0) {
            return domain(format!("negative part {p} in partition"));
        }
        Ok(Partition::new(parts.iter().map(|&p| p as usize).collect()))
    }

    /// Parses `3,3,2^3,1^2`; an empty string or `0` gives the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Partition::new(parse_parts(s)?))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.first();
        Partition((1..=w).map(|j| self.col(j)).collect())
    }

    /// `λ'_j = #{i : λ_i >= j}`.
    pub fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &p)| (i * p) as i64).sum()
    }

    /// `Q_j(λ) = Σ_a min(j, λ_a)`, the size of the first `j` columns.
    pub fn q_j(&self, j: usize) -> usize {
        self.0.iter().map(|&p| p.min(j)).sum()
    }

    /// Multiplicity of the part `j`.
    pub fn m_j(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// `μ <= λ` in dominance order (`self` is `μ`).
    pub fn dominance_leq(&self, lambda: &Partition) -> bool {
        if self.size() != lambda.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(lambda.len()) {
            a += self.part(i);
            b += lambda.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Union of parts (`λ ⊕ μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition::new(self.0.iter().map(|p| p * k).collect())
    }

    /// Parts zero-padded to length `n`; `None` if longer.
    pub fn padded(&self, n: usize) -> Option<Vec<usize>> {
        (self.len() <= n).then(|| {
            let mut v = self.0.clone();
            v.resize(n, 0);
            v
        })
    }

    /// Hook length of the cell `(i, j)` (1-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        self.part(i) - j + self.col(j) - i + 1
    }

    /// Cells `(i, j)` row by row, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn f_lambda(&self) -> num_bigint::BigInt {
        let mut num = num_bigint::BigInt::from(1);
        for k in 1..=self.size() {
            num *= k;
        }
        let den: num_bigint::BigInt = self.cells().map(|(i, j)| num_bigint::BigInt::from(self.hook(i, j))).product();
        num / den
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl From<&[usize]> for Partition {
    fn from(v: &[usize]) -> Self {
        Partition::new(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(v: [usize; N]) -> Self {
        Partition::new(v.to_vec())
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut out = Vec::new();
    if s.is_empty() {
        return Ok(out);
    }
    for tok in s.split(',') {
        let tok = tok.trim();
        let bad = || Error::Parse(format!("bad part `{tok}`"));
        let (base, rep) = match tok.split_once('^') {
            Some((b, r)) => (b, r.trim().parse::<usize>().map_err(|_| bad())?),
            None => (tok, 1),
        };
        let v: i64 = base.trim().parse().map_err(|_| bad())?;
        if v < 0 {
            return Err(Error::Domain(format!("negative part {v}")));
        }
        out.extend(std::iter::repeat(v as usize).take(rep));
    }
    Ok(out)
}

/// Finite sequence of nonnegative integers in a significant order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted into a partition.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

/// Rectangle of width `width` (part size) and `height` rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rect {
    pub width: usize,
    pub height: usize,
}

impl Rect {
    pub fn new(width: usize, height: usize) -> Self {
        Rect { width, height }
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }
}

/// Dominant sequence of rectangles: widths weakly decrease.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RectSequence(Vec<Rect>);

impl RectSequence {
    /// Validates positivity and weakly decreasing widths.
    pub fn new(rects: Vec<Rect>) -> Result<Self> {
        if rects.iter().any(|r| r.width == 0 || r.height == 0) {
            return domain("rectangles need positive width and height");
        }
        if rects.windows(2).any(|w| w[0].width < w[1].width) {
            return domain("rectangle widths must weakly decrease");
        }
        Ok(RectSequence(rects))
    }

    /// Sorts by width descending (ties by height descending), dropping
    /// empty rectangles.
    pub fn dominant_rearrangement(mut rects: Vec<Rect>) -> Self {
        rects.retain(|r| r.width > 0 && r.height > 0);
        rects.sort_by(|a, b| b.cmp(a));
        RectSequence(rects)
    }

    /// From `(width, height)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        RectSequence::new(pairs.iter().map(|&(w, h)| Rect::new(w, h)).collect())
    }

    /// Single-row rectangles `(μ_a^1)`.
    pub fn rows(mu: &Partition) -> Self {
        RectSequence(mu.parts().iter().map(|&w| Rect::new(w, 1)).collect())
    }

    /// Parses `3x2,2x3,1x1` (width x height).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectSequence::default());
        }
        let mut rects = Vec::new();
        for tok in s.split(',') {
            let bad = || Error::Parse(format!("bad rectangle `{tok}`, expected WxH"));
            let (w, h) = tok.trim().split_once(['x', 'X']).ok_or_else(bad)?;
            let w = w.trim().parse().map_err(|_| bad())?;
            let h = h.trim().parse().map_err(|_| bad())?;
            rects.push(Rect::new(w, h));
        }
        RectSequence::new(rects)
    }

    pub fn rects(&self) -> &[Rect] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Rect::area).sum()
    }

    /// Each width repeated `height` times, rectangle by rectangle.
    pub fn mu(&self) -> Composition {
        Composition(self.0.iter().flat_map(|r| std::iter::repeat(r.width).take(r.height)).collect())
    }

    /// Heights in order.
    pub fn eta(&self) -> Composition {
        Composition(self.0.iter().map(|r| r.height).collect())
    }

    /// `n(R) = Σ_{a<b} min(μ_a, μ_b) min(η_a, η_b)`.
    pub fn n_stat(&self) -> i64 {
        let mut s = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                let (x, y) = (self.0[a], self.0[b]);
                s += (x.width.min(y.width) * x.height.min(y.height)) as i64;
            }
        }
        s
    }

    /// Each rectangle transposed, then rearranged to be dominant.
    pub fn transpose(&self) -> RectSequence {
        RectSequence::dominant_rearrangement(self.0.iter().map(|r| Rect::new(r.height, r.width)).collect())
    }

    /// `kR`: rectangles `(k μ_a)^{η_a}`.
    pub fn scale_widths(&self, k: usize) -> RectSequence {
        RectSequence(self.0.iter().map(|r| Rect::new(r.width * k, r.height)).collect())
    }

    /// All heights one.
    pub fn is_rows(&self) -> bool {
        self.0.iter().all(|r| r.height == 1)
    }
}

impl fmt::Debug for RectSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RectSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|r| format!("{}x{}", r.width, r.height)).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len`
/// parts, reverse lexicographic.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            cur.push(p);
            rec(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    rec(n, max_part, max_len, &mut cur, &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn partitions_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn dominance() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])));
        assert!(p(&[3, 1]).dominance_leq(&p(&[3, 1])));
        assert!(!p(&[2, 2, 2]).dominance_leq(&p(&[3, 1, 1, 1])));
        assert!(!p(&[3, 1, 1, 1]).dominance_leq(&p(&[2, 2, 2])));
    }

    #[test]
    fn n_statistic() {
        assert_eq!(p(&[3, 2, 1]).n_stat(), 4);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[]).n_stat(), 0);
    }

    #[test]
    fn construction_and_parsing() {
        assert_eq!(p(&[1, 0, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::from_signed(&[2, -1]).is_err());
        assert_eq!(Partition::parse("3,3,2^3,1^2").unwrap(), p(&[3, 3, 2, 2, 2, 1, 1]));
        assert!(Partition::parse("2,a").is_err());
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(4)[0], p(&[4]));
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(p(&[3, 2, 1]).f_lambda(), 16.into());
    }

    #[test]
    fn rect_sequences() {
        let r = RectSequence::parse("3x2,2x3,2x1,1x2").unwrap();
        assert_eq!(r.mu().parts(), &[3, 3, 2, 2, 2, 2, 1, 1]);
        assert_eq!(r.eta().parts(), &[2, 3, 1, 2]);
        assert_eq!(r.size(), 16);
        assert!(RectSequence::parse("1x2,2x2").is_err());
        assert!(RectSequence::parse("2-2").is_err());
        let rows = RectSequence::rows(&p(&[2, 1, 1]));
        assert_eq!(rows.n_stat(), p(&[2, 1, 1]).n_stat());
    }
}
