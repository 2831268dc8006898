//! Acceptance suite A1-A12. Prints one PASS/FAIL line per criterion and
//! exits nonzero on any mismatch against an independently verified value.
//!
//! A few stated values cannot be reproduced by any correct computation.
//! Those criteria print FAIL with the computed value. The run still checks
//! that every method agrees on that value, so only a real regression makes
//! the process exit nonzero.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kostka::fermionic::{
    koh_rhs, kostka_fermionic, kostka_fermionic_count, nonadmissible_sum, parabolic_fermionic,
    parabolic_fermionic_count, restricted_two_row,
};
use kostka::kostant::{kostka_altsum, parabolic_altsum, parabolic_k};
use kostka::polytopes::{ab_kostka, chan_robbins_volume, gt_count, gt_dim, macmahon_delta};
use kostka::qpoly::{dot_eq, q_binomial, q_int};
use kostka::repth::{
    gaussian_pair, gen_exponents, generalized_gaussian, internal_spec, internal_spec_nm, internal_spec_parabolic,
    kronecker, l_poly, mixed_exponents, mixed_exponents_parabolic, rect_catalan, tilde_kostka,
};
use kostka::symfunc::{kostka_via_hl, schur_product_expand};
use kostka::tableaux::{kostka_charge, narayana};
use kostka::{partitions, Composition, Partition, QPoly, Rect, RectSequence};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    checks: usize,
    mismatches: Vec<String>,
    unattainable: Vec<String>,
}

impl Criterion {
    fn new(id: &'static str, title: &'static str, budget_secs: u64) -> Self {
        Criterion { id, title, budget: Duration::from_secs(budget_secs), checks: 0, mismatches: vec![], unattainable: vec![] }
    }

    fn eq<T: PartialEq + Display>(&mut self, what: impl Display, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.mismatches.push(format!("{what}: got {got}, want {want}"));
        }
    }

    fn ok(&mut self, what: impl Display, cond: bool) {
        self.checks += 1;
        if !cond {
            self.mismatches.push(what.to_string());
        }
    }

    /// A stated value that disagrees with `verified`, the value all methods
    /// agree on. Matching `verified` records an unattainable item; anything
    /// else is a mismatch.
    fn stated<T: PartialEq + Display>(&mut self, what: impl Display, got: T, stated: T, verified: T) {
        self.checks += 1;
        if got == stated {
            return;
        }
        if got == verified {
            self.unattainable.push(format!("{what}: computed {got}, criterion states {stated}"));
        } else {
            self.mismatches.push(format!("{what}: got {got}, verified value {verified}, stated {stated}"));
        }
    }
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn rs(s: &str) -> RectSequence {
    RectSequence::parse(s).unwrap()
}

fn poly(s: &str) -> QPoly {
    QPoly::parse_pretty(s).unwrap()
}

fn rows(r: &RectSequence) -> usize {
    r.rects().iter().map(|x| x.height).sum()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random dominant `(λ, R)` with `|λ| <= max_size`, at most `max_rows` rows
/// and nonzero parabolic Kostka polynomial.
fn sample_parabolic(rng: &mut ChaCha8Rng, max_size: usize, max_rows: usize) -> (Partition, RectSequence) {
    loop {
        let k = rng.gen_range(1..=4);
        let rects: Vec<Rect> = (0..k).map(|_| Rect::new(rng.gen_range(1..=3), rng.gen_range(1..=3))).collect();
        let r = RectSequence::dominant_rearrangement(rects);
        if r.size() > max_size || rows(&r) > max_rows {
            continue;
        }
        let cands: Vec<Partition> = partitions(r.size()).into_iter().filter(|l| l.len() <= rows(&r)).collect();
        let lam = cands.choose(rng).unwrap().clone();
        if !parabolic_fermionic(&lam, &r).is_zero() {
            return (lam, r);
        }
    }
}

/// Random `μ <= λ` with `|λ| = n`.
fn sample_kostka(rng: &mut ChaCha8Rng, n: usize) -> (Partition, Partition) {
    let all = partitions(n);
    loop {
        let lam = all.choose(rng).unwrap().clone();
        let mu = all.choose(rng).unwrap().clone();
        if mu.dominance_leq(&lam) {
            return (lam, mu);
        }
    }
}

fn a1() -> Criterion {
    let mut c = Criterion::new("A1", "example catalogue, two or more methods each", 60);
    let r = rs("3x2,2x3,2x1,1x2");
    let lam = p(&[5, 4, 4, 2, 1]);
    c.eq("K_{54421,R} fermionic", parabolic_fermionic(&lam, &r), poly("q^5(1,3,4,2)"));
    c.eq("K_{54421,R} altsum", parabolic_k(&lam, &r).unwrap(), poly("q^5(1,3,4,2)"));

    for (l, m, want) in [
        (p(&[4, 2]), p(&[2, 1, 1, 1, 1]), "q^4(1,1,2,1,1)"),
        (p(&[4, 4, 2]), p(&[3, 3, 2, 1, 1]), "q^2(1,1,3,1,1)"),
        (p(&[7, 3, 2]), p(&[4, 3, 2, 1, 1, 1]), "q^5(3,7,9,9,7,4,2,1)"),
    ] {
        c.eq(format!("K_{{{l},{m}}} charge"), kostka_charge(&l, &m), poly(want));
        c.eq(format!("K_{{{l},{m}}} fermionic"), kostka_fermionic(&l, &m), poly(want));
        c.eq(format!("K_{{{l},{m}}} altsum"), kostka_altsum(&l, &m), poly(want));
        if m.len() <= 5 {
            c.eq(format!("K_{{{l},{m}}} Hall-Littlewood"), kostka_via_hl(&l, &m, m.len()).unwrap(), poly(want));
        }
    }

    let (l, m) = (p(&[4, 4]), p(&[1; 8]));
    let want = poly("q^12(1,0,1,1,2,1,2,1,2,1,1,0,1)");
    c.eq("K_{44,1^8} charge", kostka_charge(&l, &m), want.clone());
    c.eq("K_{44,1^8} fermionic", kostka_fermionic(&l, &m), want.clone());
    c.ok("K_{44,1^8} rectangular q-Catalan up to a power of q", dot_eq(&want, &rect_catalan(4, 2).unwrap()));

    let (l, r) = (p(&[4, 4, 3, 1]), rs("3x1,2x2,2x2,1x1"));
    c.eq("K_{4431,R} fermionic", parabolic_fermionic(&l, &r), poly("q^4(2,2,2)"));
    c.eq("K_{4431,R} altsum", parabolic_k(&l, &r).unwrap(), poly("q^4(2,2,2)"));

    let (l, r) = (p(&[4, 4, 2, 2]), rs("3x1,3x1,2x2,1x1,1x1"));
    let verified = poly("q^2(1,1,4,1,1)");
    let alt = parabolic_k(&l, &r).unwrap();
    c.eq("K_{4422,R} altsum agrees with fermionic", alt, parabolic_fermionic(&l, &r));
    c.stated("K_{4422,R}", parabolic_fermionic(&l, &r), poly("q^4(1,1,4,1,1)"), verified);
    c
}

fn a2() -> Criterion {
    let mut c = Criterion::new("A2", "charge = fermionic = altsum (= HL for n <= 5), |λ| <= 6", 300);
    for n in 1..=6 {
        let all = partitions(n);
        for l in &all {
            for m in &all {
                let k = kostka_charge(l, m);
                c.eq(format!("fermionic K_{{{l},{m}}}"), kostka_fermionic(l, m), k.clone());
                c.eq(format!("altsum K_{{{l},{m}}}"), kostka_altsum(l, m), k.clone());
                let vars = l.len().max(m.len());
                if vars <= 5 {
                    c.eq(format!("HL K_{{{l},{m}}}"), kostka_via_hl(l, m, vars).unwrap(), k);
                }
            }
        }
    }
    c
}

fn a3() -> Criterion {
    let mut c = Criterion::new("A3", "duality on 50 random dominant (λ, R), |λ| <= 10", 120);
    let mut g = rng(3);
    for _ in 0..50 {
        let (l, r) = sample_parabolic(&mut g, 10, 10);
        let k = parabolic_fermionic(&l, &r);
        let want = k.subs_pow(-1).shift(r.n_stat());
        let (lt, rt) = (l.conjugate(), r.transpose());
        c.eq(format!("K_{{{lt},{rt}}}"), parabolic_fermionic(&lt, &rt), want.clone());
        if rows(&rt) <= 7 {
            c.eq(format!("K_{{{lt},{rt}}} altsum"), parabolic_k(&lt, &rt).unwrap(), want);
        }
    }
    c
}

fn a4() -> Criterion {
    let mut c = Criterion::new("A4", "K(1) = tensor product multiplicity, 30 instances, |λ| <= 10", 120);
    let mut g = rng(4);
    for _ in 0..30 {
        let (l, r) = sample_parabolic(&mut g, 10, 10);
        let factors: Vec<Partition> = r.rects().iter().map(|x| Partition::new(vec![x.width; x.height])).collect();
        let exp = schur_product_expand(&factors, l.len()).unwrap();
        c.eq(format!("K_{{{l},{r}}}(1)"), parabolic_fermionic_count(&l, &r), exp.coeff(&l).eval_one());
    }
    c
}

fn a5() -> Criterion {
    let mut c = Criterion::new("A5", "KOH for n + k <= 10, non-admissible sum vanishes", 60);
    for n in 0..=10i64 {
        for k in 0..=10 - n {
            c.eq(format!("KOH n={n} k={k}"), koh_rhs(n as usize, k as usize), q_binomial(n + k, k));
        }
    }
    c.eq("non-admissible sum for K_{54421,R}", nonadmissible_sum(&p(&[5, 4, 4, 2, 1]), &rs("3x2,2x3,2x1,1x2")), QPoly::zero());
    let mut g = rng(5);
    for _ in 0..19 {
        let (l, r) = sample_parabolic(&mut g, 10, 10);
        c.eq(format!("non-admissible sum for K_{{{l},{r}}}"), nonadmissible_sum(&l, &r), QPoly::zero());
    }
    c
}

fn a6() -> Criterion {
    let mut c = Criterion::new("A6", "q^{2kn}[n+k,k]_{q^2} family, generalized Gaussian, hooks", 120);
    for n in 1..=3usize {
        for k in 1..=3usize {
            let l = Partition::new(vec![2 * n; 2 * k]);
            let r = RectSequence::new(vec![Rect::new(n, k); 4]).unwrap();
            let want = q_binomial((n + k) as i64, k as i64).subs_pow(2).shift((2 * k * n) as i64);
            c.eq(format!("K_{{{l},{r}}}"), parabolic_fermionic(&l, &r), want.clone());
            if k == 1 {
                c.eq(format!("K_{{{l},{r}}} altsum"), parabolic_k(&l, &r).unwrap(), want);
            }
        }
    }
    for s in 1..=4 {
        for lam in partitions(s) {
            for nn in 1..=4 {
                let (l, m) = gaussian_pair(&lam, nn);
                c.eq(format!("Gaussian [{nn}; {lam}]"), tilde_kostka(&l, &m), generalized_gaussian(nn, &lam).unwrap());
            }
        }
    }
    let mut g = rng(6);
    let mut done = 0;
    while done < 20 {
        let (n, m) = (g.gen_range(1..=5usize), g.gen_range(0..=4usize));
        let mut hook = vec![n];
        hook.extend(std::iter::repeat(1).take(m));
        let hook = Partition::new(hook);
        let mu = partitions(hook.size()).choose(&mut g).unwrap().clone();
        if !mu.dominance_leq(&hook) {
            continue;
        }
        let want = q_binomial(mu.len() as i64 - 1, m as i64);
        c.eq(format!("hook K~_{{{hook},{mu}}}"), tilde_kostka(&hook, &mu), want);
        done += 1;
    }
    c
}

fn a7() -> Criterion {
    let mut c = Criterion::new("A7", "the ten L-polynomials for α = (4,2), β = (3,2,1)", 60);
    let (a, b) = (p(&[4, 2]), p(&[3, 2, 1]));
    let table: [(&[usize], &str); 9] = [
        (&[5, 1], "1"),
        (&[4, 2], "(2,1)"),
        (&[4, 1, 1], "(2,3,1)"),
        (&[3, 3], "(1,2,1)"),
        (&[3, 2, 1], "(3,5,3,1)"),
        (&[2, 2, 2], "(1,3,5,5,3,1)"),
        (&[2, 2, 1, 1], "(2,6,9,9,6,3,1)"),
        (&[2, 1, 1, 1, 1], "(1,4,8,12,14,13,10,6,3,1)"),
        (&[1, 1, 1, 1, 1, 1], "q^1(1,3,6,10,14,18,20,20,18,14,10,6,3,1)"),
    ];
    for (mu, want) in table {
        let mu = p(mu);
        c.eq(format!("L^{{{mu}}}"), l_poly(&a, &b, &mu).unwrap(), poly(want));
    }
    // At q = 1 the sum Σ_γ g_{αβγ} K_{γ,3111}(1) is 24, so the stated
    // coefficients (summing to 23) cannot hold.
    let mu = p(&[3, 1, 1, 1]);
    let at_one: BigInt = partitions(6).iter().map(|g| kronecker(&a, &b, g).unwrap() * kostka_fermionic_count(g, &mu)).sum();
    c.eq("L^{(3,1,1,1)}(1)", at_one, BigInt::from(24));
    c.stated("L^{(3,1,1,1)}", l_poly(&a, &b, &mu).unwrap(), poly("(2,5,7,5,3,1)"), poly("(2,5,7,6,3,1)"));
    c
}

fn a8() -> Criterion {
    let mut c = Criterion::new("A8", "internal product specializations", 180);
    c.eq("S_{31,22;2,2}", internal_spec_nm(&p(&[3, 1]), &p(&[2, 2]), 2, 2).unwrap(), poly("q^5(1,2,1)"));
    for n in 1..=5 {
        for a in partitions(n) {
            for b in partitions(n) {
                for nn in 1..=5 {
                    let s = internal_spec(&a, &b, nn).unwrap();
                    c.ok(format!("s_{a} * s_{b} at N={nn} symmetric and unimodal: {s}"), s.is_symmetric() && s.is_unimodal());
                }
            }
        }
    }
    let set = [p(&[2, 1]), p(&[2, 2]), p(&[3, 1])];
    for a in &set {
        for b in set.iter().filter(|b| b.size() == a.size()) {
            for nn in 2..=3 {
                let r = a.len().max((a.len() + b.len()).div_ceil(nn));
                let (lam, rects) = internal_spec_parabolic(a, b, nn, r).unwrap();
                let s = internal_spec(a, b, nn).unwrap();
                let k = parabolic_fermionic(&lam, &rects);
                c.ok(format!("s_{a} * s_{b} at N={nn}: {s} vs K_{{{lam},{rects}}} = {k}"), dot_eq(&s, &k));
            }
        }
    }
    c
}

fn a9() -> Criterion {
    let mut c = Criterion::new("A9", "generalized exponents", 120);
    c.eq("G_3(V_21)", gen_exponents(&p(&[2, 1]), 3).unwrap(), poly("q^1(1,1)"));
    c.eq("G_3(V_42)", gen_exponents(&p(&[4, 2]), 3).unwrap(), poly("q^2(1,1,1)"));
    c.eq("G_3(V_42) as K_{42,222}", kostka_fermionic(&p(&[4, 2]), &p(&[2, 2, 2])), poly("q^2(1,1,1)"));
    let cases = [
        (p(&[1]), p(&[1]), 2),
        (p(&[1]), p(&[1]), 3),
        (p(&[2]), p(&[2]), 2),
        (p(&[2]), p(&[2]), 3),
        (p(&[2]), p(&[1, 1]), 3),
        (p(&[1, 1]), p(&[1, 1]), 3),
        (p(&[2, 1]), p(&[2, 1]), 4),
        (p(&[3]), p(&[2, 1]), 3),
        (p(&[2, 1]), p(&[3]), 4),
        (p(&[2, 2]), p(&[3, 1]), 4),
    ];
    for (a, b, nn) in cases {
        let m = mixed_exponents(&a, &b, nn).unwrap();
        let (lam, r) = mixed_exponents_parabolic(&a, &b, nn, a.len()).unwrap();
        let k = parabolic_fermionic(&lam, &r);
        c.ok(format!("G_{nn}(V_{a} ⊗ V_{b}*): {m} vs K_{{{lam},{r}}} = {k}"), !m.is_zero() && dot_eq(&m, &k));
    }
    c
}

fn a10() -> Criterion {
    let mut c = Criterion::new("A10", "restricted two-row formula", 60);
    let c2 = restricted_two_row(&p(&[4, 4]), &p(&[2, 2, 2, 2]), 3).unwrap();
    c.eq("restricted C_2 at q = 1", c2.eval_one(), BigInt::from(2));
    let c3 = restricted_two_row(&p(&[6, 6]), &p(&[2; 6]), 3).unwrap();
    c.eq("restricted C_3 at q = 1", c3.eval_one(), BigInt::from(5));
    let mut g = rng(10);
    let mut done = 0;
    while done < 20 {
        let n = g.gen_range(2..=10usize);
        let (l, m) = sample_kostka(&mut g, n);
        if l.len() > 2 {
            continue;
        }
        let k = kostka_fermionic(&l, &m);
        let want = k.subs_pow(-1).shift(m.n_stat() - l.part(2) as i64);
        let level = l.first() + g.gen_range(0..=2usize);
        c.eq(format!("restricted K_{{{l},{m}}} at level {level}"), restricted_two_row(&l, &m, level).unwrap(), want);
        done += 1;
    }
    c
}

fn a11() -> Criterion {
    let mut c = Criterion::new("A11", "polytopes", 600);
    for n in 1..=8 {
        let all = partitions(n);
        for l in &all {
            for m in &all {
                let gt = gt_count(l, &Composition::new(m.parts().to_vec())).unwrap();
                c.eq(format!("#GT({l},{m})"), gt, kostka_fermionic_count(l, m));
            }
        }
    }
    c.eq("dim GT(7432, 4432111)", gt_dim(&p(&[7, 4, 3, 2]), &p(&[4, 4, 3, 2, 1, 1, 1])).unwrap(), 12);
    c.eq("dim GT(44, 1^8)", gt_dim(&p(&[4, 4]), &p(&[1; 8])).unwrap(), 5);
    c.eq("dim GT(333, 1^9)", gt_dim(&p(&[3, 3, 3]), &p(&[1; 9])).unwrap(), 10);

    let (l, m) = (p(&[7, 4, 3, 2]), p(&[4, 4, 3, 2, 1, 1, 1]));
    let (a, b) = ab_kostka(&l, &m).unwrap();
    c.eq("a(7432, 4432111)", a, 5);
    c.eq("b(7432, 4432111)", b, BigInt::from(6));
    let (a2, b2) = ab_kostka(&l.scale(2), &m.scale(2)).unwrap();
    c.eq("a(2λ, 2μ)", a2, 10);
    c.eq("b(2λ, 2μ)", b2, BigInt::from(20));

    let vols: Vec<BigRational> = (3..=5).map(|n| chan_robbins_volume(n).unwrap()).collect();
    let show = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let got = vols.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
    c.stated("Chan-Robbins normalized volumes n = 3, 4, 5", got, show(&[1, 1, 2]), show(&[1, 2, 10]));

    for (n, m) in [(2, 2), (2, 3), (3, 4)] {
        let delta = macmahon_delta(n, m).unwrap();
        let row: Vec<BigInt> = narayana(n, m).unwrap().iter().map(|q| q.eval_one()).collect();
        let fmt = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        c.eq(format!("MacMahon delta-vector ({n},{m})"), fmt(&delta), fmt(&row));
    }
    c
}

fn a12() -> Criterion {
    let mut c = Criterion::new("A12", "monotonicity, staircase and almost-staircase families", 180);
    let mut g = rng(12);
    for _ in 0..50 {
        let n = g.gen_range(1..=6usize);
        let (l, m) = sample_kostka(&mut g, n);
        let a = g.gen_range(1..=4usize);
        let small = kostka_fermionic(&l, &m);
        let big = kostka_fermionic(&l.union(&p(&[a])), &m.union(&p(&[a])));
        c.ok(format!("K_{{{l},{m}}} <= K with part {a} added"), small.coeffwise_le(&big));
    }
    for n in 2..=4usize {
        let len = 2 * n - 1;
        let mut lam: Vec<i64> = (1..=n as i64).rev().collect();
        lam.resize(len, 0);
        let mut mu: Vec<i64> = (1..n as i64).rev().collect();
        mu.extend(std::iter::repeat(1).take(n));
        let mut eta = vec![n - 1];
        eta.extend(std::iter::repeat(1).take(n));
        let eta: Vec<usize> = eta.into_iter().filter(|&e| e > 0).collect();
        let want = (1..=n as i64).fold(QPoly::q_pow(n as i64 - 1), |acc, j| &acc * &q_int(j));
        c.eq(format!("staircase n={n}"), parabolic_altsum(&lam, &mu, &Composition::new(eta)).unwrap(), want);
    }
    for n in 2..=3usize {
        let mut lam: Vec<usize> = (n..=2 * n).rev().collect();
        lam.extend((1..n - 1).rev());
        let lam = Partition::new(lam);
        let r = RectSequence::dominant_rearrangement(vec![
            Rect::new(2 * n - 1, 1),
            Rect::new(n, n),
            Rect::new(n - 1, n - 1),
            Rect::new(1, 1),
        ]);
        let e = (n * (n - 1) / 2 + 1) as i64;
        let want = poly("(1,2,1)").scale(&BigInt::from(n - 1)).shift(e);
        c.eq(format!("almost staircase K_{{{lam},{r}}}"), parabolic_fermionic(&lam, &r), want.clone());
        c.eq(format!("almost staircase K_{{{lam},{r}}} altsum"), parabolic_k(&lam, &r).unwrap(), want);
    }
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 12] = [a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12];
    let mut broken = 0;
    let mut unattainable = 0;
    for f in criteria {
        let start = Instant::now();
        let mut c = f();
        let took = start.elapsed();
        if took > c.budget {
            c.mismatches.push(format!("runtime {took:.1?} exceeds {:?}", c.budget));
        }
        let pass = c.mismatches.is_empty() && c.unattainable.is_empty();
        println!("{:<4} {}  {} [{} checks, {took:.2?}]", c.id, if pass { "PASS" } else { "FAIL" }, c.title, c.checks);
        for u in &c.unattainable {
            println!("       unattainable as stated: {u}");
        }
        for m in c.mismatches.iter().take(10) {
            println!("       mismatch: {m}");
        }
        broken += usize::from(!c.mismatches.is_empty());
        unattainable += usize::from(!c.unattainable.is_empty());
    }
    println!(
        "acceptance: {} of 12 pass, {unattainable} fail only on unattainable stated values, {broken} with mismatches",
        12 - broken - unattainable
    );
    if broken > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
