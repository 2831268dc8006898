//! Built-in identities checked by `kostka verify`.

use kostka::fermionic::{koh_rhs, parabolic_fermionic};
use kostka::qpoly::q_binomial;
use kostka::repth::{gen_exponents, internal_spec_nm, l_poly, rect_catalan};
use kostka::tableaux::skew_kostka;
use kostka::{partitions, Partition, QPoly, RectSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Ctx, Method};

type Compute = Box<dyn Fn(&Ctx) -> kostka::Result<QPoly> + Send + Sync>;

pub struct Entry {
    pub name: String,
    pub method: &'static str,
    pub citation: &'static str,
    pub expected: String,
    compute: Compute,
}

fn p(s: &str) -> Partition {
    Partition::parse(s).expect("catalogue partition")
}

fn r(s: &str) -> RectSequence {
    RectSequence::parse(s).expect("catalogue rectangles")
}

fn kostka(m: Method, lambda: &'static str, mu: &'static str, want: &str, citation: &'static str) -> Entry {
    Entry {
        name: format!("kostka_{}(({lambda}),({mu}))", m.name()),
        method: m.name(),
        citation,
        expected: want.into(),
        compute: Box::new(move |ctx| ctx.kostka(m, &p(lambda), &p(mu))),
    }
}

fn parabolic(m: Method, lambda: &'static str, rects: &'static str, want: &str, citation: &'static str) -> Entry {
    Entry {
        name: format!("parabolic_{}(({lambda}),{rects})", m.name()),
        method: m.name(),
        citation,
        expected: want.into(),
        compute: Box::new(move |ctx| ctx.parabolic(m, &p(lambda), &r(rects))),
    }
}

fn other(name: String, method: &'static str, citation: &'static str, want: String, f: Compute) -> Entry {
    Entry { name, method, citation, expected: want, compute: f }
}

/// Every catalogue entry, in a fixed order.
pub fn entries() -> Vec<Entry> {
    use Method::*;
    let mut v = vec![
        kostka(Charge, "2,1", "1,1,1", "q^1(1,1)", "charge of standard tableaux"),
        kostka(Fermionic, "2,1", "1,1,1", "q^1(1,1)", "rigged configurations"),
        kostka(Charge, "2,1", "2,1", "1", "unitriangularity"),
        kostka(Charge, "3", "1,1,1", "q^3", "K_{(n),μ} = q^{n(μ)}"),
        kostka(Charge, "1,1,1", "1,1,1", "1", "unitriangularity"),
    ];
    let table = [
        ("4,2", "2,1,1,1,1", "q^4(1,1,2,1,1)"),
        ("4,4,2", "3,3,2,1,1", "q^2(1,1,3,1,1)"),
        ("7,3,2", "4,3,2,1,1,1", "q^5(3,7,9,9,7,4,2,1)"),
        ("4,4", "1^8", "q^12(1,0,1,1,2,1,2,1,2,1,1,0,1)"),
        ("4,2", "2,2,2", "q^2(1,1,1)"),
    ];
    for (l, m, want) in table {
        for meth in [Charge, Fermionic, Altsum] {
            v.push(kostka(meth, l, m, want, "worked Kostka-Foulkes example"));
        }
    }
    v.push(kostka(Hl, "4,2", "2,1,1,1,1", "q^4(1,1,2,1,1)", "Hall-Littlewood transition matrix"));
    v.push(kostka(Hl, "4,4,2", "3,3,2,1,1", "q^2(1,1,3,1,1)", "Hall-Littlewood transition matrix"));

    let parabolic_table = [
        ("5,4,4,2,1", "3x2,2x3,2x1,1x2", "q^5(1,3,4,2)"),
        ("4,4,3,1", "3x1,2x2,2x2,1x1", "q^4(2,2,2)"),
        ("4,4,2,2", "3x1,3x1,2x2,1x1,1x1", "q^2(1,1,4,1,1)"),
        ("6,6,4", "3x2,3x2,2x1,2x1", "q^8(2,1,2,1,1)"),
        ("6,5,4,3,2,1", "4x1,3x3,2x2,1x4", "q^6(3,9,9,3)"),
    ];
    for (l, rs, want) in parabolic_table {
        v.push(parabolic(Fermionic, l, rs, want, "parabolic Kostka polynomial, rectangular blocks"));
        if r(rs).eta().size() <= 8 {
            v.push(parabolic(Altsum, l, rs, want, "parabolic Kostka polynomial, rectangular blocks"));
        }
    }
    for (l, rs, want) in [
        ("4,4,4,2,2,2", "3x1,3x2,2x3,2x1,1x1", "q^4(2,3,3,2)"),
        ("7,6,5,4,3,2,1", "4x3,3x4,2x1,1x2", "q^7(3,12,18,12,3)"),
        ("7,6,5,4,3,2,1", "4x4,4x1,2x1,1x2,1x4", "q^8(5,17,24,17,5)"),
    ] {
        v.push(parabolic(Fermionic, l, rs, want, "few-term parabolic Kostka polynomial"));
    }

    for (n, k) in [(2usize, 2usize), (3, 2), (4, 3)] {
        v.push(other(
            format!("koh({n},{k})"),
            "fermionic",
            "KOH identity",
            q_binomial((n + k) as i64, k as i64).pretty(),
            Box::new(move |_| Ok(koh_rhs(n, k))),
        ));
    }

    let lpolys = [
        ("5,1", "1"),
        ("4,2", "(2,1)"),
        ("3,3", "(1,2,1)"),
        ("3,2,1", "(3,5,3,1)"),
        ("3,1,1,1", "(2,5,7,6,3,1)"),
        ("2,2,2", "(1,3,5,5,3,1)"),
    ];
    for (mu, want) in lpolys {
        v.push(other(
            format!("lpoly((4,2),(3,2,1),({mu}))"),
            "kronecker",
            "Kronecker coefficients times Kostka-Foulkes polynomials",
            want.into(),
            Box::new(move |_| l_poly(&p("4,2"), &p("3,2,1"), &p(mu))),
        ));
    }

    v.push(other(
        "internal_spec((3,1),(2,2),2,2)".into(),
        "class-sum",
        "internal product specialized at q^i",
        "q^5(1,2,1)".into(),
        Box::new(|_| internal_spec_nm(&p("3,1"), &p("2,2"), 2, 2)),
    ));
    for (l, want) in [("2,1", "q^1(1,1)"), ("4,2", "q^2(1,1,1)")] {
        v.push(other(
            format!("exponents(({l}),3)"),
            "fermionic",
            "generalized exponents of gl(3)",
            want.into(),
            Box::new(move |_| gen_exponents(&p(l), 3)),
        ));
    }
    v.push(other(
        "catalan(4,2)".into(),
        "product",
        "rectangular q-Catalan number",
        "(1,0,1,1,2,1,2,1,2,1,1,0,1)".into(),
        Box::new(|_| rect_catalan(4, 2)),
    ));
    v.push(other(
        "skew((2,1)/(1),(1,1))".into(),
        "charge",
        "skew Kostka-Foulkes polynomial",
        "(1,1)".into(),
        Box::new(|_| Ok(skew_kostka(&p("2,1"), &p("1"), &p("1,1")))),
    ));
    v.push(other(
        "parabolic_fermionic((2n^4),(nx2)^4) n=2".into(),
        "fermionic",
        "q^{2kn}[n+k,k]_{q^2} family",
        q_binomial(4, 2).subs_pow(2).shift(8).pretty(),
        Box::new(|_| Ok(parabolic_fermionic(&p("4,4,4,4"), &r("2x2,2x2,2x2,2x2")))),
    ));
    v
}

#[derive(Serialize)]
pub struct Line {
    pub name: String,
    pub method: String,
    pub citation: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub lines: Vec<Line>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string(self).expect("serializable");
        }
        let mut s = String::new();
        for l in &self.lines {
            if l.pass {
                s += &format!("PASS  {} = {}  ({})\n", l.name, l.got, l.citation);
            } else {
                s += &format!("FAIL  {}: got {}, want {}  ({})\n", l.name, l.got, l.expected, l.citation);
            }
        }
        s += &format!("verify: {} passed, {} failed", self.passed, self.failed);
        s
    }
}

fn check(ctx: &Ctx, e: &Entry) -> Line {
    let got = match (e.compute)(ctx) {
        Ok(v) => v.pretty(),
        Err(err) => format!("error: {err}"),
    };
    let pass = match QPoly::parse_pretty(&e.expected) {
        Ok(want) => want.pretty() == got,
        Err(_) => false,
    };
    Line {
        name: e.name.clone(),
        method: e.method.into(),
        citation: e.citation.into(),
        expected: e.expected.clone(),
        got,
        pass,
    }
}

/// Random charge-versus-fermionic-versus-altsum comparisons.
fn samples(ctx: &Ctx, count: usize) -> Vec<Entry> {
    let mut g = ChaCha8Rng::seed_from_u64(ctx.seed);
    (0..count)
        .map(|_| {
            let n = g.gen_range(1..=7usize);
            let all = partitions(n);
            let lam = all[g.gen_range(0..all.len())].clone();
            let mu = all[g.gen_range(0..all.len())].clone();
            let want = kostka::fermionic::kostka_fermionic(&lam, &mu).pretty();
            let (ls, ms) = (lam.to_string(), mu.to_string());
            other(
                format!("sample kostka({ls},{ms})"),
                "all",
                "charge, rigged configurations and alternating sum agree",
                want,
                Box::new(move |ctx| ctx.kostka(Method::All, &lam, &mu)),
            )
        })
        .collect()
}

/// Checks the catalogue entries matching `filter` plus `extra` random samples.
pub fn verify(ctx: &Ctx, filter: Option<&str>, extra: usize) -> Report {
    let mut list = entries();
    list.extend(samples(ctx, extra));
    let list: Vec<Entry> = match filter {
        Some(f) => list.into_iter().filter(|e| e.name.contains(f) || e.method.contains(f) || e.citation.contains(f)).collect(),
        None => list,
    };
    let lines: Vec<Line> = list.par_iter().map(|e| check(ctx, e)).collect();
    let passed = lines.iter().filter(|l| l.pass).count();
    Report { failed: lines.len() - passed, passed, lines }
}
