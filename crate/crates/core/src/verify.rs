//! Verification suites: golden examples and bounded identity checks.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::RngExt;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{gen_terms, Element, Generator, Sort, Terms};
use crate::antipode::antipode_terms;
use crate::basis::{Letter1, Var};
use crate::contraction::{all_contractions, ContractionSeq};
use crate::coproduct::{coproduct, coproduct_bar, coproduct_terms, inv_tensor, iterated_coproducts, reduced_terms, TensorElement2, TensorTerms};
use crate::derive::{derive, phi_of_component};
use crate::error::{Error, Result};
use crate::forms::{eta, poly_var, pullback, w_element, w_tensor, w_terms, Form, Poly, PolyMono};
use crate::inv::{inv, inv_terms};
use crate::iterint::{self, IGenerator, SPoint};
use crate::lincomb::{binomial, factorial, int, rat, sign, Rational};
use crate::matrix::IndexedMatrix;
use crate::numeric::{eval_form, rng_from_seed, sample_point, tangent_basis};
use crate::parse::{parse, parse_in};
use crate::render::element_text;
use crate::tensor::{project_pi, project_pi_closed, shuffle, symbol, symbol_with, word_of, Peel, TensorAlg};
use crate::variation::*;
use crate::vector::{generator_to_vector, precede, vector_to_generator, WeightVector};

/// The weight vectors whose variation matrices are checked.
pub const VARIATION_SHAPES: [&[u32]; 6] = [&[2], &[3], &[1, 1], &[2, 1], &[1, 2], &[1, 1, 1]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Golden,
    Coassoc,
    Inv,
    Varmatrix,
    Forms,
    Iterint,
    Flatness,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Golden,
        Suite::Coassoc,
        Suite::Inv,
        Suite::Varmatrix,
        Suite::Forms,
        Suite::Iterint,
        Suite::Flatness,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Coassoc => "coassoc",
            Suite::Inv => "inv",
            Suite::Varmatrix => "varmatrix",
            Suite::Forms => "forms",
            Suite::Iterint => "iterint",
            Suite::Flatness => "flatness",
            Suite::Structural => "structural",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite '{}'", s)))
    }
}

/// Bounds for the generator enumerations.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_weight: u32,
    pub max_depth: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_weight: 4, max_depth: 3, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} failures: {}",
            self.suite,
            self.cases,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    /// Deterministic JSON; wall time is left out.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "cases": self.cases,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| json!({"case": f.case, "detail": f.detail})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for x in &self.failures {
            writeln!(f, "  {}: {}", x.case, x.detail)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Collector {
    cases: usize,
    failures: Vec<Failure>,
}

impl Collector {
    fn check(&mut self, case: impl fmt::Display, outcome: Result<()>) {
        self.cases += 1;
        if let Err(e) = outcome {
            self.failures.push(Failure { case: case.to_string(), detail: e.to_string() });
        }
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Report {
    let start = Instant::now();
    let mut c = Collector::default();
    match suite {
        Suite::Golden => golden(&mut c),
        Suite::Coassoc => coassoc(&mut c, bounds),
        Suite::Inv => inv_suite(&mut c, bounds),
        Suite::Varmatrix => varmatrix(&mut c),
        Suite::Forms => forms_suite(&mut c, bounds),
        Suite::Iterint => iterint_suite(&mut c, bounds),
        Suite::Flatness => flatness(&mut c, bounds),
        Suite::Structural => structural(&mut c, bounds),
    }
    c.failures.sort();
    Report { suite, cases: c.cases, failures: c.failures, elapsed: start.elapsed() }
}

pub fn run_all(bounds: &Bounds) -> Vec<Report> {
    Suite::ALL.iter().map(|&s| run(s, bounds)).collect()
}

fn same<T: PartialEq + fmt::Debug>(what: &str, got: &T, expected: &T) -> Result<()> {
    if got == expected {
        Ok(())
    } else {
        Err(Error::Disagreement(format!("{}: got {:?}, expected {:?}", what, got, expected)))
    }
}

fn holds(what: impl fmt::Display, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Disagreement(what.to_string()))
    }
}

// ---------------------------------------------------------------- enumeration

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn increasing(len: usize, max: u32) -> Vec<Vec<u32>> {
    all_contractions(max - 1, len - 1).into_iter().map(|c| c.indices().to_vec()).collect()
}

/// Every generator with weight and depth bounds and indices in `1..=max_depth + 2`;
/// inverted ones are included for `Hbar`.
pub fn generators(sort: Sort, max_weight: u32, max_depth: usize) -> Vec<Generator> {
    let top = max_depth as u32 + 2;
    let mut out: Vec<Generator> = (1..top).map(Generator::Log).collect();
    for d in 1..=max_depth {
        for idx in increasing(d + 1, top) {
            for w in 1..=max_weight {
                for n in compositions(w, d) {
                    out.push(Generator::poly(idx.clone(), n.clone()).unwrap());
                    if sort == Sort::Hbar {
                        out.push(Generator::inverted(idx.clone(), n).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// A random generator of the given weight.
pub fn random_generator(rng: &mut ChaCha8Rng, sort: Sort, weight: u32, max_depth: usize) -> Generator {
    if weight == 1 && rng.random_range(0..4) == 0 {
        return Generator::Log(rng.random_range(1..=3));
    }
    let d = rng.random_range(1..=max_depth.min(weight as usize));
    let mut cuts: Vec<u32> = Vec::new();
    while cuts.len() + 1 < d {
        let c = rng.random_range(1..weight);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort();
    cuts.insert(0, 0);
    cuts.push(weight);
    let weights: Vec<u32> = cuts.windows(2).map(|p| p[1] - p[0]).collect();
    let mut idx = vec![rng.random_range(1..=2u32)];
    for _ in 0..d {
        let step = rng.random_range(1..=2u32);
        idx.push(idx.last().unwrap() + step);
    }
    if sort == Sort::Hbar && rng.random_range(0..2) == 0 {
        Generator::inverted(idx, weights).unwrap()
    } else {
        Generator::poly(idx, weights).unwrap()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.random_range(-9..=9);
    let d: i64 = rng.random_range(1..=6);
    if n == 0 {
        int(1)
    } else {
        rat(n, d)
    }
}

/// A random element with a few monomials of weight at most 4.
pub fn random_element(rng: &mut ChaCha8Rng, sort: Sort) -> Element {
    let mut t = Terms::zero();
    for _ in 0..rng.random_range(1..=4) {
        let mut m = Terms::constant(random_rational(rng));
        for _ in 0..rng.random_range(0..=2) {
            let w = rng.random_range(1..=2);
            m = m.mul(&gen_terms(random_generator(rng, sort, w, 2)));
        }
        t += &m;
    }
    Element::from_terms(sort, t).unwrap()
}

// ---------------------------------------------------------------- golden

fn tensor_of(pairs: &[(&str, &str)], sort: Sort) -> Result<TensorTerms> {
    let mut out = TensorTerms::zero();
    for (a, b) in pairs {
        out += TensorElement2::tensor(&parse_in(a, sort)?, &parse_in(b, sort)?)?.terms();
    }
    Ok(out)
}

fn terms_of(text: &str) -> Result<Terms> {
    Ok(parse(text)?.into_terms())
}

/// Parse with the shorthand `U1, U2` for `[x_i]_0` and `V1, V2, V12` for `-[x_{i..j}]_1`.
fn mixed(text: &str) -> Result<Terms> {
    let t = text
        .replace("V12", "(-Li[1](1,3))")
        .replace("V1", "(-Li[1](1,2))")
        .replace("V2", "(-Li[1](2,3))")
        .replace("U1", "log(1)")
        .replace("U2", "log(2)");
    terms_of(&t)
}

fn matrix_of(keys: &[WeightVector], rows: &[&[&str]], conv: fn(&str) -> Result<Terms>) -> Result<IndexedMatrix<Terms>> {
    let mut m = IndexedMatrix::new(keys.to_vec());
    for (r, row) in rows.iter().enumerate() {
        for (c, text) in row.iter().enumerate() {
            if *text != "0" {
                m.add_at(r, c, &conv(text)?);
            }
        }
    }
    Ok(m)
}

fn p(v: Var) -> Poly {
    poly_var(v)
}

const U1: Var = Var::U(1);
const U2: Var = Var::U(2);
const V1: Var = Var::V(1, 1);
const V2: Var = Var::V(2, 2);
const V12: Var = Var::V(1, 2);

fn form1(parts: &[(Poly, Var)]) -> Form {
    parts.iter().fold(Form::zero(1), |acc, (c, v)| &acc + &Form::monomial(c, vec![*v]))
}

fn w_of(text: &str) -> Result<Form> {
    Ok(w_element(&parse(text)?))
}

fn golden_coproducts() -> Result<()> {
    let y = "(log(1)+log(2))";
    let lower = [
        ("Li[3,1](1,2,3)", "1".to_string()),
        ("Li[2,1](1,2,3)", "log(1)".to_string()),
        ("Li[1,1](1,2,3)", "1/2 log(1)^2".to_string()),
        ("Li[3](1,3)", "Li[1](2,3)".to_string()),
        ("Li[2](1,3)", format!("-Li[2](2,3) + Li[1](2,3) {}", y)),
        ("Li[1](1,3)", format!("Li[3](2,3) - Li[2](2,3) {y} + 1/2 Li[1](2,3) {y}^2", y = y)),
        ("Li[1](2,3)", "Li[3](1,2)".to_string()),
        ("1", "Li[3,1](1,2,3)".to_string()),
    ];
    let mut bar: Vec<(&str, &str)> = lower.iter().map(|(a, b)| (*a, b.as_str())).collect();
    bar.push(("Li[1](1,3)", "-ILi[3](1,2)"));
    let g = Generator::poly(vec![1, 2, 3], vec![3, 1])?;
    same("bar coproduct of Li[3,1](1,2,3)", coproduct_bar(&g).terms(), &tensor_of(&bar, Sort::Hbar)?)?;

    let mut h: Vec<(&str, &str)> = lower.iter().map(|(a, b)| (*a, b.as_str())).collect();
    h.push(("Li[1](1,3)", "-Li[3](1,2) - 1/6 log(1)^3"));
    let e = parse("Li[3,1](1,2,3)")?;
    same("coproduct of Li[3,1](1,2,3)", coproduct(&e).terms(), &tensor_of(&h, Sort::H)?)
}

fn golden_inv() -> Result<()> {
    let y = "(log(1)+log(2))";
    let a = "(Li[3](1,2) + 1/6 log(1)^3)";
    let expected = parse(&format!(
        "-Li[3,1](1,2,3) + {a} Li[1](2,3) - (1/6 Li[1](2,3) {y}^3 - 1/2 Li[2](2,3) {y}^2 + Li[3](2,3) {y} - Li[4](2,3)) + ({a} {y} - 3 (Li[4](1,2) + 1/24 log(1)^4))",
        a = a,
        y = y
    ))?;
    same("INV(ILi[1,3](1,2,3))", &inv(&parse("ILi[1,3](1,2,3)")?), &expected)
}

fn golden_symbols() -> Result<()> {
    let u = |i| Letter1::basis(Var::U(i));
    let v = |i, j| Letter1::basis(Var::V(i, j));
    for n in 2..=5u32 {
        let mut letters = vec![-v(1, 1)];
        letters.extend(std::iter::repeat_n(u(1), n as usize - 1));
        same(&format!("symbol of Li[{}](1,2)", n), &symbol(&parse(&format!("Li[{}](1,2)", n))?), &word_of(&letters))?;
    }
    let mid = -u(1) + v(1, 1) - v(2, 2);
    let s11 = word_of(&[-v(1, 2), mid.clone()]) + word_of(&[-v(2, 2), -v(1, 1)]);
    same("symbol of Li[1,1](1,2,3)", &symbol(&parse("Li[1,1](1,2,3)")?), &s11)?;
    let s21 = word_of(&[-v(1, 2), mid, u(1)])
        + word_of(&[-v(1, 2), u(1) + u(2), -v(2, 2)])
        + word_of(&[-v(2, 2), -v(1, 1), u(1)]);
    same("symbol of Li[2,1](1,2,3)", &symbol(&parse("Li[2,1](1,2,3)")?), &s21)
}

fn golden_forms() -> Result<()> {
    for i in 1..=3u32 {
        same("w of log", &w_of(&format!("log({})", i))?, &Form::dvar(Var::U(i)))?;
    }
    same("w of Li[1](1,3)", &w_of("Li[1](1,3)")?, &(-&Form::dvar(V12)))?;
    for n in 2..=5u32 {
        let base = p(U1).pow(n - 2).scaled(&(sign(n % 2 == 1) / factorial(n)));
        let expected = form1(&[(base.mul(&p(U1)), V1), (-base.mul(&p(V1)), U1)]);
        same(&format!("w of Li[{}](1,2)", n), &w_of(&format!("Li[{}](1,2)", n))?, &expected)?;
    }
    let u12 = p(U1) + p(U2);
    let expected = form1(&[(u12, V12), (-p(V12), U1), (-p(V12), U2)]).scaled(&rat(1, 2));
    same("w of Li[2](1,3)", &w_of("Li[2](1,3)")?, &expected)?;
    let expected = form1(&[
        (p(V12), U1),
        (p(V2) - p(V12), V1),
        (p(V12) - p(V1), V2),
        (-(p(U1) - p(V1) + p(V2)), V12),
    ])
    .scaled(&rat(1, 2));
    same("w of Li[1,1](1,2,3)", &w_of("Li[1,1](1,2,3)")?, &expected)
}

fn golden_variation() -> Result<()> {
    let v = Variation::build(&[2, 1], Sort::H)?;
    let rows: [&[&str]; 6] = [
        &["1"],
        &["Li[1](2,3)", "1"],
        &["Li[1](1,3)", "0", "1"],
        &["Li[1,1](1,2,3)", "Li[1](1,2)", "-Li[1](1,2) - log(1) + Li[1](2,3)", "1"],
        &["Li[2](1,3)", "0", "log(1) + log(2)", "0", "1"],
        &[
            "Li[2,1](1,2,3)",
            "Li[2](1,2)",
            "-Li[2](1,2) - 1/2 log(1)^2 - Li[2](2,3) + (log(1) + log(2)) Li[1](2,3)",
            "log(1)",
            "Li[1](2,3)",
            "1",
        ],
    ];
    same("V for (2,1)", &v.v, &matrix_of(v.keys(), &rows, terms_of)?)?;

    let v = Variation::build(&[1, 1], Sort::Hbar)?;
    let rows: [&[&str]; 4] = [
        &["1"],
        &["Li[1](2,3)", "1"],
        &["Li[1](1,3)", "0", "1"],
        &["Li[1,1](1,2,3)", "Li[1](1,2)", "Li[1](2,3) - ILi[1](1,2)", "1"],
    ];
    let hbar = |s: &str| Ok(parse_in(s, Sort::Hbar)?.into_terms());
    same("V for (1,1) with inverted symbols", &v.v, &matrix_of(v.keys(), &rows, hbar)?)
}

fn golden_omega() -> Result<()> {
    let var = Variation::build(&[2, 1], Sort::H)?;
    let (big, _) = var.omega()?;
    let mut expected = IndexedMatrix::new(var.keys().to_vec());
    for (r, c, poly) in [
        (1, 0, -p(V2)),
        (2, 0, -p(V12)),
        (3, 1, -p(V1)),
        (3, 2, -p(U1) + p(V1) - p(V2)),
        (4, 2, p(U1) + p(U2)),
        (5, 3, p(U1)),
        (5, 4, -p(V2)),
    ] {
        expected.add_at(r, c, &poly);
    }
    same("Ω for (2,1)", &big, &expected)
}

fn lifted_depth_one(n: u32) -> Result<Terms> {
    let mut text = format!("{} U1^{} V1", -sign(n % 2 == 1) / factorial(n), n - 1);
    for r in 0..n {
        text.push_str(&format!(" + {} Li[{}](1,2) U1^{}", sign(r % 2 == 1) / factorial(r), n - r, r));
    }
    mixed(&text)
}

fn golden_lifted() -> Result<()> {
    let var = Variation::build(&[5], Sort::H)?;
    let (big, small) = var.omega()?;
    let vh = v_hat(&var, &big);
    let hat = omega_hat_definition(&big, &small);
    for n in 1..=5u32 {
        let k = n as usize;
        same(&format!("lifted L_{}", n), &vh.get(k, 0).cloned().unwrap_or_default(), &lifted_depth_one(n)?)?;
        let expected = w_of(&format!("Li[{}](1,2)", n))?.scaled(&int(n as i64 - 1));
        same(&format!("ω̂ at ({}, 0)", n), &hat.get(k, 0).cloned().unwrap_or(Form::zero(1)), &expected)?;
    }

    let var = Variation::build(&[2, 1], Sort::H)?;
    let (big, small) = var.omega()?;
    let keys = var.keys().to_vec();
    let l2 = |a: &str, b: &str, u: &str, v: &str| format!("-1/2 ({u}) {v} + Li[2]({a},{b}) - Li[1]({a},{b}) ({u})");
    let l11 = "1/2 (-U1 V12 + V1 V12 - V1 V2 - V12 V2) + Li[1,1](1,2,3)";
    let l21 = "1/3 (U1^2 V12 - U1 V1 V12 + U1 V1 V2 + 2 U1 V12 V2 + U2 V12 V2) + V2 Li[2](1,3) - U1 Li[1,1](1,2,3) + Li[2,1](1,2,3)";
    let l2_1 = l2("1", "2", "U1", "V1");
    let l2_2 = l2("2", "3", "U2", "V2");
    let l2_12 = l2("1", "3", "U1 + U2", "V12");
    let b31 = format!("-({}) - ({})", l2_1, l2_2);
    let rows: [&[&str]; 6] = [
        &["1"],
        &["0", "1"],
        &["0", "0", "1"],
        &[l11, "0", "0", "1"],
        &[&l2_12, "0", "0", "0", "1"],
        &[l21, &l2_1, &b31, "0", "0", "1"],
    ];
    same("V̂ for (2,1)", &v_hat(&var, &big), &matrix_of(&keys, &rows, mixed)?)?;

    let mut a = IndexedMatrix::new(keys);
    a.add_at(3, 0, &w_of("Li[1,1](1,2,3)")?);
    a.add_at(4, 0, &w_of("Li[2](1,3)")?);
    a.add_at(5, 0, &w_of("Li[2,1](1,2,3)")?.scaled(&int(2)));
    a.add_at(5, 1, &w_of("Li[2](1,2)")?);
    a.add_at(5, 2, &(-&(&w_of("Li[2](1,2)")? + &w_of("Li[2](2,3)")?)));
    same("ω̂ for (2,1)", &omega_hat_definition(&big, &small), &a)
}

fn golden_recurrence() -> Result<()> {
    let w11 = w_of("Li[1,1](1,2,3)")?;
    let w1 = w_of("Li[2](1,2)")?;
    let w2 = w_of("Li[2](2,3)")?;
    let w12 = w_of("Li[2](1,3)")?;
    let first = w1.mul_poly(&-p(V2));
    let second = (-&(&w1 + &w2)).mul_poly(&-p(V12));
    let third = &w11.mul_poly(&p(U1)) - &w12.mul_poly(&p(V2));
    let expected = (&(&first + &second) - &third).scaled(&rat(1, 3));
    same("recurrence for Li[2,1](1,2,3)", &w_of("Li[2,1](1,2,3)")?, &expected)?;
    let var = Variation::build(&[2, 1], Sort::H)?;
    same("recurrence from the variation matrix", &recurrence_form(&var)?, &expected)
}

/// `Φ(I(0; 0^{n0-1}, a_1, 0^{n1-1}, ..., a_d, 0^{nd-1}; a_{d+1}))` by the binomial closed form.
fn phi_closed_form(a: &[SPoint], n0: u32, n: &[u32]) -> Terms {
    let d = n.len();
    let letters: Vec<_> = a.windows(2).map(|p| iterint::ratio(p[0], p[1]).unwrap()).collect();
    let log_end = a[d].log_terms();
    let mut out = Terms::zero();
    let budget = n0 - 1;
    for i0 in 0..=budget {
        for rest in distributions(budget - i0, d) {
            let mut c = sign((i0 % 2 == 1) ^ ((n0 as usize + d - 1) % 2 == 1)) / factorial(i0);
            for k in 0..d {
                c *= binomial(n[k] + rest[k] - 1, n[k] - 1);
            }
            let weights: Vec<u32> = (0..d).map(|k| n[k] + rest[k]).collect();
            let g = crate::algebra::word_generator(&letters, &weights).unwrap();
            out += &(&log_end.pow(i0).mul(&gen_terms(g)) * &c);
        }
    }
    out
}

/// All `d`-tuples of non-negative integers summing to `total`.
fn distributions(total: u32, d: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in distributions(total - first, d - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn zeros(n: u32) -> impl Iterator<Item = SPoint> {
    std::iter::repeat_n(SPoint::Zero, n as usize)
}

fn golden_phi() -> Result<()> {
    let hbar = |s: &str| -> Result<Terms> { Ok(parse_in(s, Sort::Hbar)?.into_terms()) };
    for n in 1..=4u32 {
        let mut pts = vec![SPoint::Zero];
        pts.extend(zeros(n));
        pts.push(SPoint::InvProduct(1, 2));
        let got = iterint::phi(&IGenerator::new(pts)?)?;
        let expected = hbar(&format!("{} (-log(1) - log(2))^{}", Rational::one() / factorial(n), n))?;
        same(&format!("Φ(I(0; 0^{}; 1/(x1x2)))", n), got.terms(), &expected)?;
    }
    for d in 1..=3u32 {
        for w in d..=5 {
            for n in compositions(w, d as usize) {
                let mut pts = vec![SPoint::Zero];
                for k in 1..=d {
                    pts.push(SPoint::InvProduct(k, d));
                    pts.extend(zeros(n[k as usize - 1] - 1));
                }
                pts.push(SPoint::One);
                let g = IGenerator::new(pts)?;
                let idx: Vec<String> = (1..=d + 1).map(|k| k.to_string()).collect();
                let ns: Vec<String> = n.iter().map(|k| k.to_string()).collect();
                let expected = hbar(&format!("{} Li[{}]({})", sign(d % 2 == 1), ns.join(","), idx.join(",")))?;
                same(&format!("Φ({})", g), iterint::phi(&g)?.terms(), &expected)?;
            }
        }
    }
    let chains: [&[SPoint]; 3] = [
        &[SPoint::InvProduct(1, 2), SPoint::InvProduct(2, 2)],
        &[SPoint::InvProduct(1, 3), SPoint::InvProduct(2, 3), SPoint::InvProduct(3, 3)],
        &[SPoint::InvProduct(1, 1), SPoint::One],
    ];
    for a in chains {
        let d = a.len() - 1;
        for n0 in 1..=3u32 {
            for w in d as u32..=(5 - n0) {
                for n in compositions(w, d) {
                    let mut pts = vec![SPoint::Zero];
                    pts.extend(zeros(n0 - 1));
                    for k in 0..d {
                        pts.push(a[k]);
                        pts.extend(zeros(n[k] - 1));
                    }
                    pts.push(a[d]);
                    let g = IGenerator::new(pts)?;
                    same(&format!("Φ({})", g), iterint::phi(&g)?.terms(), &phi_closed_form(a, n0, &n))?;
                }
            }
        }
    }
    Ok(())
}

fn golden(c: &mut Collector) {
    c.check("coproducts of Li[3,1](1,2,3)", golden_coproducts());
    c.check("INV of ILi[1,3](1,2,3)", golden_inv());
    c.check("symbols", golden_symbols());
    c.check("forms", golden_forms());
    c.check("variation matrices", golden_variation());
    c.check("Ω for (2,1)", golden_omega());
    c.check("lifted matrices", golden_lifted());
    c.check("recurrence", golden_recurrence());
    c.check("Φ values", golden_phi());
}

// ---------------------------------------------------------------- Hopf suites

fn coassoc(c: &mut Collector, b: &Bounds) {
    for (sort, depth) in [(Sort::Hbar, b.max_depth), (Sort::H, b.max_depth.min(2))] {
        for g in generators(sort, b.max_weight, depth) {
            let e = Element::generator(g);
            let (l, r) = iterated_coproducts(&e.clone().into_sort(sort).unwrap());
            c.check(format!("{:?} {}", sort, element_text(&e)), holds("(Δ⊗id)Δ = (id⊗Δ)Δ", l == r));
        }
    }
}

fn inv_suite(c: &mut Collector, b: &Bounds) {
    for g in generators(Sort::Hbar, b.max_weight, b.max_depth.min(2)) {
        if !g.is_inverted() {
            continue;
        }
        let t = gen_terms(g.clone());
        let lhs = inv_tensor(&coproduct_terms(Sort::Hbar, &t));
        let rhs = coproduct_terms(Sort::H, &inv_terms(&t));
        c.check(element_text(&Element::generator(g)), holds("INV∘Δ = Δ∘INV", lhs == rhs));
    }
}

fn varmatrix(c: &mut Collector) {
    for n in VARIATION_SHAPES {
        for sort in [Sort::H, Sort::Hbar] {
            let label = |what: &str| format!("{} for {:?} in {:?}", what, n, sort);
            match Variation::build(n, sort) {
                Ok(v) => {
                    c.check(label("Δ(V^T) = V^T⊗V^T"), check_comultiplicative(&v));
                    c.check(label("S(V^T)V^T = I"), check_antipode(&v));
                    c.check(label("dV = ωV"), check_differential(&v));
                }
                Err(e) => c.check(label("build"), Err(e)),
            }
        }
    }
}

// ---------------------------------------------------------------- forms

fn random_letter(rng: &mut ChaCha8Rng) -> Letter1 {
    let vars = [Var::U(1), Var::U(2), Var::V(1, 1), Var::V(2, 2), Var::V(1, 2)];
    let mut l = Letter1::zero();
    for _ in 0..rng.random_range(1..=2) {
        let v = vars[rng.random_range(0..vars.len())];
        l.add_term(v, int(rng.random_range(-2..=2)));
    }
    if l.is_zero() {
        Letter1::basis(Var::U(1))
    } else {
        l
    }
}

/// `d w(g) = Σ w(g') ∧ w(g'')` over the reduced coproduct.
pub fn check_generator_chain_map(sort: Sort, g: &Generator) -> Result<()> {
    let t = gen_terms(g.clone());
    let mut total = w_terms(sort, &t).exterior_d();
    for ((l, r), k) in reduced_terms(sort, &t).iter() {
        let wl = w_terms(sort, &Terms::basis(l.clone()));
        let wr = w_terms(sort, &Terms::basis(r.clone()));
        total = &total - &wl.wedge(&wr).scaled(k);
    }
    holds("d w(g) = (w ∧ w)(Δ'g)", total.is_zero())
}

fn forms_suite(c: &mut Collector, b: &Bounds) {
    let mut rng = rng_from_seed(b.seed);
    for len in 1..=5 {
        for k in 0..20 {
            let letters: Vec<Letter1> = (0..len).map(|_| random_letter(&mut rng)).collect();
            let t = word_of(&letters);
            c.check(format!("w = η∘Π on word {} of length {}", k, len), holds("w = η∘Π", w_tensor(&t) == eta(&project_pi(&t))));
        }
    }
    for k in 0..50 {
        let sort = if k % 2 == 0 { Sort::H } else { Sort::Hbar };
        let wa = rng.random_range(1..=3);
        let wb = rng.random_range(1..=4 - wa);
        let a = Element::generator(random_generator(&mut rng, sort, wa, 3)).into_sort(sort).unwrap();
        let bb = Element::generator(random_generator(&mut rng, sort, wb, 3)).into_sort(sort).unwrap();
        let prod = a.checked_mul(&bb).unwrap();
        c.check(format!("w kills {}", element_text(&prod)), holds("w(ab) = 0", w_element(&prod).is_zero()));
    }
    for n in 1..=4u32 {
        for d in 1..=n as usize {
            for seq in all_contractions(n, d) {
                for w in d as u32..=4 {
                    for weights in compositions(w, d) {
                        c.check(format!("pullback along {:?} with weights {:?}", seq.indices(), weights), naturality(&seq, &weights));
                    }
                }
            }
        }
    }
    for n in VARIATION_SHAPES {
        for sort in [Sort::H, Sort::Hbar] {
            let label = |what: &str| format!("{} for {:?} in {:?}", what, n, sort);
            let v = match Variation::build(n, sort) {
                Ok(v) => v,
                Err(e) => {
                    c.check(label("build"), Err(e));
                    continue;
                }
            };
            for k in 1..=4 {
                c.check(label(&format!("w(V_{}) closed form", k)), check_w_closed(&v, k));
                c.check(label(&format!("chain map in weight {}", k)), check_chain_map(&v, k));
            }
            c.check(label("ω̂_n = (n-1)w(V_n)"), check_omega_hat(&v));
            c.check(label("recurrence"), check_recurrence(&v));
            c.check(label("lifted differential"), check_lifted(&v));
        }
    }
    for sort in [Sort::H, Sort::Hbar] {
        for g in generators(sort, b.max_weight, b.max_depth) {
            let label = format!("chain map on {:?} {}", sort, element_text(&Element::generator(g.clone())));
            c.check(label, check_generator_chain_map(sort, &g));
        }
    }
}

fn naturality(seq: &ContractionSeq, weights: &[u32]) -> Result<()> {
    let lhs = w_element(&Element::generator(seq.generator(weights)?));
    let base = ContractionSeq::identity(seq.depth() as u32).generator(weights)?;
    let rhs = pullback(seq, &w_element(&Element::generator(base)))?;
    same("w[i(x)]_n = i* w[x]_n", &lhs, &rhs)
}

// ---------------------------------------------------------------- iterated integrals

fn iterint_suite(c: &mut Collector, b: &Bounds) {
    let small = [SPoint::Zero, SPoint::One, SPoint::InvProduct(1, 1)];
    for len in 2..=5usize {
        let generic: Vec<SPoint> = (1..=len as u32).map(|k| SPoint::InvProduct(k, k)).collect();
        c.check(format!("ΔV^T on {} distinct points", len), iterint::check_i_variation(&generic));
    }
    for len in 2..=5usize {
        for seq in tuples(&small, len) {
            c.check(format!("ΔV^T on {}", show_points(&seq)), iterint::check_i_variation(&seq));
        }
    }
    for len in 3..=6usize {
        for seq in tuples(&small, len) {
            let g = IGenerator::new(seq).unwrap();
            c.check(format!("coassociativity on {}", g), iterint::check_i_coassociative(&g));
        }
    }
    let gens = iterint::polylogarithmic_generators(3, 3, 2);
    for g in &gens {
        c.check(format!("Φ morphism on {}", g), iterint::check_phi_morphism(g));
    }
    let mut rng = rng_from_seed(b.seed);
    for _ in 0..20 {
        let g = &gens[rng.random_range(0..gens.len())];
        c.check(format!("Φ∘Γ = Φ on {}", g), iterint::check_phi_gamma(g));
    }
}

fn tuples(s: &[SPoint], len: usize) -> Vec<Vec<SPoint>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                s.iter().map(move |&p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    out
}

fn show_points(a: &[SPoint]) -> String {
    format!("({})", a.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

// ---------------------------------------------------------------- numerics

/// Shapes with `‖n‖ <= 3`.
pub const FLAT_SHAPES: [&[u32]; 7] = [&[1], &[2], &[3], &[1, 1], &[2, 1], &[1, 2], &[1, 1, 1]];
pub const FLATNESS_TOLERANCE: f64 = 1e-9;
pub const RESIDUAL_TOLERANCE: f64 = 1e-12;

fn flatness(c: &mut Collector, b: &Bounds) {
    let mut rng = rng_from_seed(b.seed);
    for n in FLAT_SHAPES {
        let ww = match Variation::build(n, Sort::H).and_then(|v| v.omega()) {
            Ok((_, small)) => wedge_matrices(&small, &small),
            Err(e) => {
                c.check(format!("ω for {:?}", n), Err(e));
                continue;
            }
        };
        for k in 0..20 {
            let point = sample_point(n.len() as u32, &mut rng);
            c.check(format!("ω∧ω for {:?} at point {}", n, k), flat_at(&ww, &point));
        }
    }
}

fn flat_at(ww: &IndexedMatrix<Form>, point: &crate::numeric::PointHatS) -> Result<()> {
    let res = point.residual();
    if res >= RESIDUAL_TOLERANCE {
        return Err(Error::Disagreement(format!("point residual {:e}", res)));
    }
    let basis = tangent_basis(point);
    for ((r, col), f) in ww.entries() {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let z = eval_form(f, point, &[basis[i].clone(), basis[j].clone()])?;
                if z.norm() >= FLATNESS_TOLERANCE {
                    return Err(Error::Disagreement(format!(
                        "entry ({}, {}) on tangents ({}, {}) has modulus {:e}",
                        r, col, i, j, z.norm()
                    )));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- structural

fn words(alphabet: &[Var], max_len: usize) -> Vec<Vec<Var>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<Var>| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn bounded_norm_vectors(max_norm: u32, max_dim: usize) -> Vec<WeightVector> {
    let mut out = vec![WeightVector::zero()];
    for d in 1..=max_dim {
        for total in 0..=max_norm {
            for e in distributions(total, d) {
                let v = WeightVector::new(e);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn structural(c: &mut Collector, b: &Bounds) {
    let alphabet = [Var::U(1), Var::V(1, 1), Var::V(1, 2)];
    let all = words(&alphabet, 5);
    for w in &all {
        let t = TensorAlg::basis(w.clone());
        let pi = project_pi(&t);
        c.check(format!("Π on {:?}", w), holds("Π² = Π", project_pi(&pi) == pi));
        c.check(format!("Π closed form on {:?}", w), holds("closed form = recursion", project_pi_closed(&t) == pi));
    }
    for a in words(&alphabet, 4) {
        for bw in words(&alphabet, 5 - a.len()) {
            let s = shuffle(&TensorAlg::basis(a.clone()), &TensorAlg::basis(bw.clone()));
            c.check(format!("Π on {:?} ⧢ {:?}", a, bw), holds("Π kills shuffles", project_pi(&s).is_zero()));
        }
    }

    let mut rng = rng_from_seed(b.seed);
    for k in 0..50 {
        let sort = if k % 2 == 0 { Sort::H } else { Sort::Hbar };
        let wa = rng.random_range(1..=3);
        let wb = rng.random_range(1..=4 - wa);
        let x = Element::generator(random_generator(&mut rng, sort, wa, 3)).into_sort(sort).unwrap();
        let y = Element::generator(random_generator(&mut rng, sort, wb, 3)).into_sort(sort).unwrap();
        let prod = x.checked_mul(&y).unwrap();
        c.check(
            format!("symbol of {}", element_text(&prod)),
            holds("symbol(ab) = symbol(a) ⧢ symbol(b)", symbol(&prod) == shuffle(&symbol(&x), &symbol(&y))),
        );
    }

    for sort in [Sort::H, Sort::Hbar] {
        for g in generators(sort, b.max_weight, b.max_depth) {
            let e = Element::generator(g).into_sort(sort).unwrap();
            let label = format!("{:?} {}", sort, element_text(&e));
            c.check(format!("peelings of {}", label), holds("left = right peeling", symbol_with(&e, Peel::Left) == symbol_with(&e, Peel::Right)));
            c.check(format!("antipode of {}", label), antipode_law(sort, e.terms()));
            c.check(format!("derivative of {}", label), phi_of_component(&e).and_then(|d| same("derive = φ∘Δ_{n-1,1}", &derive(&e), &d)));
            c.check(format!("grading of Δ {}", label), grading(sort, &e));
        }
    }

    let vectors = bounded_norm_vectors(4, 3);
    let mut order_ok = true;
    for a in &vectors {
        for bv in &vectors {
            let n = [precede(a, bv), precede(bv, a), a == bv].iter().filter(|x| **x).count();
            order_ok &= n == 1;
        }
    }
    c.check("≺ trichotomy", holds("exactly one of a ≺ b, b ≺ a, a = b", order_ok));
    let mut trans_ok = true;
    for a in &vectors {
        for bv in vectors.iter().filter(|bv| precede(a, bv)) {
            for cv in vectors.iter().filter(|cv| precede(bv, cv)) {
                trans_ok &= precede(a, cv);
            }
        }
    }
    c.check("≺ transitivity", holds("a ≺ b ≺ c implies a ≺ c", trans_ok));

    let mut seqs = Vec::new();
    for n in 1..=4u32 {
        for d in 1..=n as usize {
            seqs.extend(all_contractions(n, d));
        }
    }
    let mut assoc_ok = true;
    let mut triples = 0;
    for i in &seqs {
        for j in &seqs {
            let Ok(ij) = i.compose(j) else { continue };
            for k in &seqs {
                if let (Ok(left), Ok(jk)) = (ij.compose(k), j.compose(k)) {
                    triples += 1;
                    assoc_ok &= i.compose(&jk).ok() == Some(left);
                }
            }
        }
    }
    c.check(format!("contraction associativity on {} triples", triples), holds("(i|j)|k = i|(j|k)", assoc_ok));

    for k in 0..1000 {
        let w = rng.random_range(1..=6);
        let g = loop {
            let g = random_generator(&mut rng, Sort::H, w, 4);
            if !matches!(g, Generator::Log(_)) {
                break g;
            }
        };
        let back = generator_to_vector(Some(&g)).and_then(|v| vector_to_generator(&v));
        c.check(format!("vector round trip {}", k), same("generator ↔ vector", &back.ok().flatten(), &Some(g)));
    }

    for k in 0..200 {
        let sort = if k % 2 == 0 { Sort::H } else { Sort::Hbar };
        let e = random_element(&mut rng, sort);
        let text = element_text(&e);
        c.check(format!("round trip of {}", text), parse_in(&text, sort).and_then(|back| same("parse∘render", &back, &e)));
    }

    for k in 0..20 {
        let f = random_form(&mut rng);
        let g = random_form(&mut rng);
        let dd = f.exterior_d().exterior_d();
        let leibniz = &f.wedge(&g).exterior_d()
            - &(&f.exterior_d().wedge(&g) + &f.wedge(&g.exterior_d()).scaled(&sign(f.degree() % 2 == 1)));
        c.check(format!("d∘d and Leibniz on random forms {}", k), holds("d∘d = 0 and Leibniz", dd.is_zero() && leibniz.is_zero()));
    }
}

fn antipode_law(sort: Sort, t: &Terms) -> Result<()> {
    let mut total = Terms::zero();
    for ((l, r), k) in coproduct_terms(sort, t).iter() {
        total += &(&antipode_terms(sort, &Terms::basis(l.clone())).mul(&Terms::basis(r.clone())) * k);
    }
    same("μ(S⊗id)Δ = ε", &total, &Terms::constant(t.constant_term()))
}

fn grading(sort: Sort, e: &Element) -> Result<()> {
    let w = e.weight().unwrap_or(0);
    let ok = coproduct_terms(sort, e.terms())
        .keys()
        .all(|(l, r)| crate::algebra::monomial_weight(l) + crate::algebra::monomial_weight(r) == w);
    holds("left weight + right weight = weight", ok)
}

fn random_form(rng: &mut ChaCha8Rng) -> Form {
    let vars = [Var::U(1), Var::U(2), Var::V(1, 1), Var::V(1, 2)];
    let degree = rng.random_range(0..=2usize);
    let mut f = Form::zero(degree);
    for _ in 0..3 {
        let coeff_vars: Vec<Var> = (0..rng.random_range(0..=2)).map(|_| vars[rng.random_range(0..vars.len())]).collect();
        let coeff = Poly::term(PolyMono::from_vec(coeff_vars), int(rng.random_range(1..=3)));
        let mut wedge: Vec<Var> = Vec::new();
        while wedge.len() < degree {
            let v = vars[rng.random_range(0..vars.len())];
            if !wedge.contains(&v) {
                wedge.push(v);
            }
        }
        f = &f + &Form::monomial(&coeff, wedge);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(distributions(2, 2).len(), 3);
        let h = generators(Sort::H, 2, 1);
        assert!(h.iter().all(|g| !g.is_inverted()));
        assert!(generators(Sort::Hbar, 2, 1).len() > h.len());
    }

    #[test]
    fn golden_suite() {
        let r = run(Suite::Golden, &Bounds::default());
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn report_json_is_stable() {
        let r = Report { suite: Suite::Inv, cases: 2, failures: vec![], elapsed: Duration::from_secs(1) };
        assert_eq!(r.to_json()["passed"], true);
        assert!(r.to_json().get("elapsed").is_none());
    }
}
