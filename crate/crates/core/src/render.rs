//! Text, LaTeX and JSON output.

use serde_json::{json, Value};

use crate::algebra::{Element, Generator, Monomial, Terms};
use crate::basis::Var;
use crate::coproduct::TensorElement2;
use crate::forms::{Form, Poly, PolyMono};
use crate::lincomb::Rational;
use crate::matrix::{Additive, IndexedMatrix};
use crate::tensor::TensorAlg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{}'", other)),
        }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn generator_text(g: &Generator) -> String {
    match g {
        Generator::Log(i) => format!("log({})", i),
        Generator::Poly(p) if p.inverted() => {
            let w: Vec<u32> = p.weights().iter().rev().cloned().collect();
            format!("ILi[{}]({})", join(&w), join(p.indices()))
        }
        Generator::Poly(p) => format!("Li[{}]({})", join(p.weights()), join(p.indices())),
    }
}

pub fn monomial_text(m: &Monomial) -> String {
    m.powers()
        .iter()
        .map(|(g, e)| {
            if *e == 1 {
                generator_text(g)
            } else {
                format!("{}^{}", generator_text(g), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Sum of `coeff * body` terms with signs folded into the separators.
fn signed_sum<'a>(items: impl Iterator<Item = (&'a Rational, String)>, mul: &str) -> String {
    let mut out = String::new();
    for (c, body) in items {
        let neg = c < &Rational::from_integer(0.into());
        let a = if neg { -c.clone() } else { c.clone() };
        let piece = if body.is_empty() {
            a.to_string()
        } else if a == Rational::from_integer(1.into()) {
            body
        } else {
            format!("{}{}{}", a, mul, body)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn terms_text(t: &Terms) -> String {
    signed_sum(t.iter().map(|(m, c)| (c, monomial_text(m))), "*")
}

pub fn element_text(e: &Element) -> String {
    terms_text(e.terms())
}

pub fn tensor_text(t: &TensorElement2) -> String {
    let body = |a: &Monomial| {
        let s = monomial_text(a);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    };
    signed_sum(
        t.terms().iter().map(|((a, b), c)| (c, format!("{} (x) {}", body(a), body(b)))),
        "*",
    )
}

fn letter_latex(start: u32, end: u32, inverted: bool) -> String {
    let prod: String = (start..end).map(|r| format!("x_{{{}}}", r)).collect();
    if !inverted {
        prod
    } else if end - start == 1 {
        format!("x_{{{}}}^{{-1}}", start)
    } else {
        format!("({})^{{-1}}", prod)
    }
}

pub fn generator_latex(g: &Generator) -> String {
    match g {
        Generator::Log(i) => format!("[x_{{{}}}]_0", i),
        Generator::Poly(p) => {
            let (letters, weights) = p.word();
            let inner: Vec<String> =
                letters.iter().map(|l| letter_latex(l.start, l.end, l.inverted)).collect();
            format!("[{}]_{{{}}}", inner.join(","), join(&weights))
        }
    }
}

pub fn monomial_latex(m: &Monomial) -> String {
    m.powers()
        .iter()
        .map(|(g, e)| {
            if *e == 1 {
                generator_latex(g)
            } else {
                format!("{}^{{{}}}", generator_latex(g), e)
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

pub fn rational_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_sum<'a>(items: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, body) in items {
        let neg = c < &Rational::from_integer(0.into());
        let a = if neg { -c.clone() } else { c.clone() };
        let piece = if body.is_empty() {
            rational_latex(&a)
        } else if a == Rational::from_integer(1.into()) {
            body
        } else {
            format!("{}{}", rational_latex(&a), body)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn terms_latex(t: &Terms) -> String {
    latex_sum(t.iter().map(|(m, c)| (c, monomial_latex(m))))
}

pub fn element_latex(e: &Element) -> String {
    terms_latex(e.terms())
}

pub fn tensor_latex(t: &TensorElement2) -> String {
    let body = |a: &Monomial| {
        let s = monomial_latex(a);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    };
    latex_sum(
        t.terms()
            .iter()
            .map(|((a, b), c)| (c, format!("{}\\otimes {}", body(a), body(b)))),
    )
}

pub fn rational_json(c: &Rational) -> Value {
    json!({ "num": c.numer().to_string(), "den": c.denom().to_string() })
}

pub fn generator_json(g: &Generator) -> Value {
    match g {
        Generator::Log(i) => json!({
            "kind": "Log", "weights": [0], "indices": [i, i + 1], "inverted": false
        }),
        Generator::Poly(p) => json!({
            "kind": "Poly",
            "weights": p.weights(),
            "indices": p.indices(),
            "inverted": p.inverted(),
        }),
    }
}

pub fn monomial_json(m: &Monomial) -> Value {
    Value::Array(m.factors().iter().map(generator_json).collect())
}

pub fn terms_json(t: &Terms) -> Value {
    Value::Array(
        t.iter()
            .map(|(m, c)| json!({ "coeff": rational_json(c), "factors": monomial_json(m) }))
            .collect(),
    )
}

pub fn element_json(e: &Element) -> Value {
    json!({ "type": "element", "sort": e.sort().to_string(), "terms": terms_json(e.terms()) })
}

pub fn tensor_json(t: &TensorElement2) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((a, b), c)| {
            json!({ "coeff": rational_json(c), "left": monomial_json(a), "right": monomial_json(b) })
        })
        .collect();
    json!({ "type": "tensor", "sort": t.sort().to_string(), "terms": terms })
}

fn var_latex(v: Var) -> String {
    match v {
        Var::U(i) => format!("u_{{{}}}", i),
        Var::V(i, j) if i == j => format!("v_{{{}}}", i),
        Var::V(i, j) => format!("v_{{{},{}}}", i, j),
    }
}

fn poly_mono_with(m: &PolyMono, var: fn(Var) -> String, mul: &str) -> String {
    m.powers()
        .iter()
        .map(|(v, e)| if *e == 1 { var(*v) } else { format!("{}^{}", var(*v), e) })
        .collect::<Vec<_>>()
        .join(mul)
}

fn form_body(m: &PolyMono, w: &[Var], latex: bool) -> String {
    let (var, mul, d, wedge): (fn(Var) -> String, _, _, _) = if latex {
        (var_latex, " ", "\\mathrm{d}", "\\wedge ")
    } else {
        (|v: Var| v.name(), "*", "d", "^")
    };
    let coeff = poly_mono_with(m, var, mul);
    let diffs: Vec<String> = w.iter().map(|v| format!("{}{}", d, var(*v))).collect();
    let diffs = diffs.join(wedge);
    match (coeff.is_empty(), diffs.is_empty()) {
        (true, _) => diffs,
        (false, true) => coeff,
        (false, false) => format!("{}{}{}", coeff, mul, diffs),
    }
}

pub fn poly_text(p: &Poly) -> String {
    signed_sum(p.iter().map(|(m, c)| (c, poly_mono_with(m, |v| v.name(), "*"))), "*")
}

pub fn poly_latex(p: &Poly) -> String {
    latex_sum(p.iter().map(|(m, c)| (c, poly_mono_with(m, var_latex, " "))))
}

pub fn form_text(f: &Form) -> String {
    signed_sum(f.terms().iter().map(|((m, w), c)| (c, form_body(m, w, false))), "*")
}

pub fn form_latex(f: &Form) -> String {
    latex_sum(f.terms().iter().map(|((m, w), c)| (c, form_body(m, w, true))))
}

fn var_json(v: Var) -> Value {
    match v {
        Var::U(i) => json!({ "kind": "u", "weights": [0], "indices": [i, i + 1], "inverted": false }),
        Var::V(i, j) => json!({ "kind": "v", "weights": [1], "indices": [i, j + 1], "inverted": false }),
    }
}

fn basis_json(v: Var) -> Value {
    match v {
        Var::U(i) => json!({ "d": "u", "i": i, "j": i }),
        Var::V(i, j) => json!({ "d": "v", "i": i, "j": j }),
    }
}

pub fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(m, c)| {
            let factors: Vec<Value> = m.factors().iter().map(|v| var_json(*v)).collect();
            json!({ "coeff": rational_json(c), "factors": factors })
        })
        .collect();
    json!({ "type": "poly", "terms": terms })
}

pub fn form_json(f: &Form) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|((m, w), c)| {
            let factors: Vec<Value> = m.factors().iter().map(|v| var_json(*v)).collect();
            let basis: Vec<Value> = w.iter().map(|v| basis_json(*v)).collect();
            json!({ "coeff": rational_json(c), "factors": factors, "basis": basis })
        })
        .collect();
    json!({ "type": "form", "degree": f.degree(), "terms": terms })
}

pub fn symbol_text(t: &TensorAlg) -> String {
    let word = |w: &[Var]| w.iter().map(|v| v.name()).collect::<Vec<_>>().join(" (x) ");
    signed_sum(t.iter().map(|(w, c)| (c, word(w))), "*")
}

pub fn symbol_latex(t: &TensorAlg) -> String {
    let word = |w: &[Var]| w.iter().map(|v| var_latex(*v)).collect::<Vec<_>>().join(" \\otimes ");
    latex_sum(t.iter().map(|(w, c)| (c, word(w))))
}

pub fn symbol_json(t: &TensorAlg) -> Value {
    let terms: Vec<Value> = t
        .iter()
        .map(|(w, c)| json!({ "coeff": rational_json(c), "word": w.iter().map(|v| basis_json(*v)).collect::<Vec<_>>() }))
        .collect();
    json!({ "type": "symbol", "terms": terms })
}

/// Nonzero entries, one per line, labelled by their row and column keys.
pub fn matrix_text<T: Additive>(m: &IndexedMatrix<T>, entry: impl Fn(&T) -> String) -> String {
    let keys = m.keys();
    m.entries()
        .map(|((r, c), v)| format!("[{}, {}] {}", keys[*r], keys[*c], entry(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// The full matrix as a `pmatrix`.
pub fn matrix_latex<T: Additive>(m: &IndexedMatrix<T>, entry: impl Fn(&T) -> String) -> String {
    let n = m.size();
    let rows: Vec<String> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| m.get(r, c).map_or_else(|| "0".to_string(), &entry))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

pub fn matrix_json<T: Additive>(m: &IndexedMatrix<T>, entry: impl Fn(&T) -> Value) -> Value {
    let keys: Vec<Value> = m.keys().iter().map(|k| json!(k.entries())).collect();
    let entries: Vec<Value> = m
        .entries()
        .map(|((r, c), v)| json!({ "row": r, "col": c, "value": entry(v) }))
        .collect();
    json!({ "type": "matrix", "rows": keys, "entries": entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn text_round_trip() {
        for src in [
            "Li[2,1](1,2,3) - 1/2*log(1)^2",
            "-ILi[1,3](1,2,3)*log(2) + 3",
            "0",
            "-1/3",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&element_text(&e)).unwrap(), e, "{}", src);
        }
        assert_eq!(element_text(&parse("Li[2](1,2)").unwrap()), "Li[2](1,2)");
    }

    #[test]
    fn latex_bracket_notation() {
        let e = parse("Li[2,1](1,2,3)").unwrap();
        assert_eq!(element_latex(&e), "[x_{1},x_{2}]_{2,1}");
        let e = parse("ILi[1,3](1,2,3)").unwrap();
        assert_eq!(element_latex(&e), "[x_{2}^{-1},x_{1}^{-1}]_{1,3}");
        let e = parse("1/2 Li[2](1,3)").unwrap();
        assert_eq!(element_latex(&e), "\\frac{1}{2}[x_{1}x_{2}]_{2}");
    }

    #[test]
    fn json_shape() {
        let e = parse("1/2 Li[2,1](1,2,3) log(1)").unwrap();
        let v = element_json(&e);
        assert_eq!(v["sort"], "H");
        let t = &v["terms"][0];
        assert_eq!(t["coeff"]["num"], "1");
        assert_eq!(t["coeff"]["den"], "2");
        assert_eq!(t["factors"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn form_output() {
        let f = crate::forms::w_element(&parse("Li[2](1,2)").unwrap());
        assert_eq!(form_text(&f), "1/2*u1*dv1 - 1/2*v1*du1");
        assert_eq!(form_latex(&f), "\\frac{1}{2}u_{1} \\mathrm{d}v_{1} - \\frac{1}{2}v_{1} \\mathrm{d}u_{1}");
        let v = form_json(&f);
        assert_eq!(v["terms"][0]["basis"][0]["d"], "v");
    }

    #[test]
    fn matrices_and_symbols() {
        let var = crate::variation::Variation::build(&[1], crate::algebra::Sort::H).unwrap();
        assert_eq!(matrix_text(&var.v, terms_text), "[0, 0] 1\n[(1), 0] Li[1](1,2)\n[(1), (1)] 1");
        assert_eq!(matrix_latex(&var.v, terms_latex), "\\begin{pmatrix}\n1 & 0 \\\\\n[x_{1}]_{1} & 1\n\\end{pmatrix}");
        let j = matrix_json(&var.v, terms_json);
        assert_eq!(j["rows"], json!([[], [1]]));
        assert_eq!(j["entries"].as_array().unwrap().len(), 3);
        let s = crate::tensor::symbol(&parse("Li[2](1,2)").unwrap());
        assert_eq!(symbol_text(&s), "-v1 (x) u1");
        assert_eq!(symbol_json(&s)["terms"][0]["word"][1], json!({"d": "u", "i": 1, "j": 1}));
    }
}
