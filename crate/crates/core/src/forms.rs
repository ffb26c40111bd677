//! Polynomial differential forms in the variables `u_i`, `v_{i,j}`.

use std::fmt;

use num_traits::One;

use crate::algebra::{Element, Sort, Terms};
use crate::basis::{var_terms, Letter1, Var};
use crate::contraction::ContractionSeq;
use crate::derive::DTerms;
use crate::error::{Error, Result};
use crate::lincomb::{binomial, factorial, sign, LinComb, MonoidKey, Rational, SortedMulti};
use crate::tensor::{symbol, symbol_terms, Peel, TensorAlg};

pub type PolyMono = SortedMulti<Var>;
pub type Poly = LinComb<PolyMono>;

pub fn poly_var(v: Var) -> Poly {
    Poly::basis(PolyMono::atom(v))
}

pub fn poly_of_letter(l: &Letter1) -> Poly {
    l.map_keys(|v| PolyMono::atom(*v))
}

/// The polynomial as an element of `H` under `u_i = [x_i]_0`, `v_{i,j} = -[x_i..x_j]_1`.
pub fn poly_terms(p: &Poly) -> Terms {
    let mut out = Terms::zero();
    for (m, c) in p.iter() {
        let mut acc = Terms::one();
        for v in m.factors() {
            acc = acc.mul(&var_terms(*v));
        }
        out.add_scaled(&acc, c);
    }
    out
}

pub fn poly_element(p: &Poly) -> Element {
    Element::from_terms(Sort::H, poly_terms(p)).expect("regular generators only")
}

/// A homogeneous form `sum c * m * dv_1 ∧ ... ∧ dv_k` with strictly increasing wedge factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    degree: usize,
    terms: LinComb<(PolyMono, Vec<Var>)>,
}

/// Sort a wedge of differentials; `None` if a factor repeats.
fn normalize_wedge(mut w: Vec<Var>) -> Option<(Vec<Var>, bool)> {
    let mut odd = false;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((w, odd))
    }
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form { degree, terms: LinComb::zero() }
    }

    pub fn from_poly(p: &Poly) -> Self {
        Form { degree: 0, terms: p.map_keys(|m| (m.clone(), Vec::new())) }
    }

    /// `d(var)`.
    pub fn dvar(v: Var) -> Self {
        Form { degree: 1, terms: LinComb::basis((PolyMono::unit(), vec![v])) }
    }

    /// `p * d(v_1) ∧ ... ∧ d(v_k)`, normalized.
    pub fn monomial(p: &Poly, wedge: Vec<Var>) -> Self {
        let degree = wedge.len();
        let mut out = Form::zero(degree);
        if let Some((w, odd)) = normalize_wedge(wedge) {
            let s = sign(odd);
            for (m, c) in p.iter() {
                out.terms.add_term((m.clone(), w.clone()), c * &s);
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn terms(&self) -> &LinComb<(PolyMono, Vec<Var>)> {
        &self.terms
    }

    /// The coefficient polynomial for each wedge basis element.
    pub fn components(&self) -> Vec<(Vec<Var>, Poly)> {
        let mut out: std::collections::BTreeMap<Vec<Var>, Poly> = Default::default();
        for ((m, w), c) in self.terms.iter() {
            out.entry(w.clone()).or_default().add_term(m.clone(), c.clone());
        }
        out.into_iter().collect()
    }

    pub fn checked_add(&self, other: &Form) -> Result<Form> {
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::DimensionMismatch(format!(
                "adding forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        Ok(Form { degree, terms: &self.terms + &other.terms })
    }

    pub fn scaled(&self, c: &Rational) -> Form {
        Form { degree: self.degree, terms: self.terms.scaled(c) }
    }

    pub fn mul_poly(&self, p: &Poly) -> Form {
        let terms = self.terms.product_with(p, |(m, w), q| Some(((m.combine(q), w.clone()), Rational::one())));
        Form { degree: self.degree, terms }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.degree + other.degree);
        for ((m1, w1), c1) in self.terms.iter() {
            for ((m2, w2), c2) in other.terms.iter() {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                if let Some((w, odd)) = normalize_wedge(w) {
                    out.terms.add_term((m1.combine(m2), w), c1 * c2 * sign(odd));
                }
            }
        }
        out
    }

    pub fn exterior_d(&self) -> Form {
        let mut out = Form::zero(self.degree + 1);
        for ((m, w), c) in self.terms.iter() {
            for (v, e) in m.powers() {
                let rest = m.without_one(&v).expect("factor present");
                let mut wedge = vec![v];
                wedge.extend_from_slice(w);
                if let Some((w2, odd)) = normalize_wedge(wedge) {
                    let k = Rational::from_integer(e.into());
                    out.terms.add_term((rest, w2), c * k * sign(odd));
                }
            }
        }
        out
    }

    /// Substitute polynomials for variables, carrying differentials along.
    pub fn substitute(&self, f: &impl Fn(Var) -> Poly) -> Form {
        let dimage = |v: Var| -> Form {
            let p = f(v);
            Form::from_poly(&p).exterior_d()
        };
        let mut out = Form::zero(self.degree);
        for ((m, w), c) in self.terms.iter() {
            let mut coeff = Poly::constant(c.clone());
            for v in m.factors() {
                coeff = coeff.mul(&f(*v));
            }
            let mut acc = Form::from_poly(&coeff);
            for v in w {
                acc = acc.wedge(&dimage(*v));
            }
            out.terms += &acc.terms;
        }
        out
    }

    /// A 1-form with `H` coefficients under the weight-1 identification.
    pub fn to_dterms(&self) -> Result<DTerms> {
        if self.degree != 1 && !self.is_zero() {
            return Err(Error::DimensionMismatch(format!("degree {} form", self.degree)));
        }
        let mut out = DTerms::zero();
        for ((m, w), c) in self.terms.iter() {
            let p = poly_terms(&Poly::basis(m.clone()));
            for (tm, tc) in p.iter() {
                out.add_term((tm.clone(), w[0]), tc * c);
            }
        }
        Ok(out)
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, other: &Form) -> Form {
        self.checked_add(other).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, other: &Form) -> Form {
        self + &other.scaled(&-Rational::one())
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scaled(&-Rational::one())
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::form_text(self))
    }
}

fn word_factors(w: &[Var], skip: usize) -> Poly {
    let factors: Vec<Var> = w.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, v)| *v).collect();
    Poly::basis(PolyMono::from_vec(factors))
}

/// `f_1 ⊗ ... ⊗ f_n ↦ ((-1)^{n+1}/n!) sum_i (-1)^{i-1} C(n-1,i-1) f_1 ... df_i ... f_n`.
pub fn w_tensor(t: &TensorAlg) -> Form {
    let mut out = Form::zero(1);
    for (w, c) in t.iter() {
        let n = w.len() as u32;
        if n == 0 {
            continue;
        }
        let outer = sign(n.is_multiple_of(2)) / factorial(n);
        for i in 0..w.len() {
            let k = &outer * sign(i % 2 == 1) * binomial(n - 1, i as u32) * c;
            let piece = Form::monomial(&word_factors(w, i), vec![w[i]]);
            out.terms.add_scaled(&piece.terms, &k);
        }
    }
    out
}

/// `f_1 ⊗ ... ⊗ f_n ↦ ((-1)^{n+1}/(n-1)!) f_2 ... f_n df_1`.
pub fn eta(t: &TensorAlg) -> Form {
    let mut out = Form::zero(1);
    for (w, c) in t.iter() {
        let n = w.len() as u32;
        if n == 0 {
            continue;
        }
        let k = sign(n.is_multiple_of(2)) / factorial(n - 1) * c;
        out.terms.add_scaled(&Form::monomial(&word_factors(w, 0), vec![w[0]]).terms, &k);
    }
    out
}

/// `w` precomposed with the symbol map.
pub fn w_element(e: &Element) -> Form {
    w_tensor(&symbol(e))
}

pub(crate) fn w_terms(sort: Sort, t: &Terms) -> Form {
    w_tensor(&symbol_terms(sort, Peel::Left, t))
}

/// The image of a variable under the contraction `i`.
pub fn pullback_var(c: &ContractionSeq, v: Var) -> Result<Poly> {
    let idx = c.indices();
    let d = c.depth() as u32;
    match v {
        Var::U(s) if s >= 1 && s <= d => {
            let (a, b) = (idx[s as usize - 1], idx[s as usize]);
            Ok((a..b).map(|r| (PolyMono::atom(Var::U(r)), Rational::one())).collect())
        }
        Var::V(r, s) if r >= 1 && r <= s && s <= d => {
            Ok(poly_var(Var::V(idx[r as usize - 1], idx[s as usize] - 1)))
        }
        other => Err(Error::OutOfRange(format!(
            "variable {} outside contraction depth {}",
            other, d
        ))),
    }
}

pub fn pullback(c: &ContractionSeq, f: &Form) -> Result<Form> {
    for ((m, w), _) in f.terms.iter() {
        for v in m.factors().iter().chain(w.iter()) {
            pullback_var(c, *v)?;
        }
    }
    Ok(f.substitute(&|v| pullback_var(c, v).expect("checked above")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rat;
    use crate::parse::parse;
    use crate::tensor::{project_pi, word_of};

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

    #[test]
    fn d_and_wedge() {
        let f = Form::from_poly(&p(U1).mul(&p(V1)));
        assert_eq!(f.exterior_d(), form1(&[(p(V1), U1), (p(U1), V1)]));
        assert!(Form::dvar(U1).wedge(&Form::dvar(U1)).is_zero());
        let g = Form::from_poly(&p(U1).pow(2).mul(&p(V1)));
        assert!(g.exterior_d().exterior_d().is_zero());
        let a = Form::dvar(U1);
        let b = Form::dvar(V1);
        assert_eq!(a.wedge(&b), -&b.wedge(&a));
    }

    #[test]
    fn w_small_words() {
        let l = |v: Var| Letter1::basis(v);
        let t = word_of(&[l(U1), l(V1)]);
        assert_eq!(w_tensor(&t), form1(&[(p(U1).scaled(&rat(1, 2)), V1), (p(V1).scaled(&rat(-1, 2)), U1)]));
        assert_eq!(eta(&t), form1(&[(-p(V1), U1)]));
        assert_eq!(eta(&project_pi(&t)), w_tensor(&t));
    }

    #[test]
    fn depth_one_forms() {
        for n in 2..6u32 {
            let e = parse(&format!("Li[{}](1,2)", n)).unwrap();
            let c = sign(n % 2 == 1) / factorial(n);
            let base = p(U1).pow(n - 2).scaled(&c);
            let expected = form1(&[(base.mul(&p(U1)), V1), (-base.mul(&p(V1)), U1)]);
            assert_eq!(w_element(&e), expected, "n = {}", n);
        }
    }

    #[test]
    fn depth_two_form() {
        let e = parse("Li[1,1](1,2,3)").unwrap();
        let h = rat(1, 2);
        let expected = form1(&[
            (p(V12), U1),
            (p(V2) - p(V12), V1),
            (p(V12) - p(V1), V2),
            (-(p(U1) - p(V1) + p(V2)), V12),
        ])
        .scaled(&h);
        assert_eq!(w_element(&e), expected);
        assert!(w_element(&parse("Li[1](1,2) Li[1](2,3)").unwrap()).is_zero());
    }

    #[test]
    fn pullback_window() {
        let c = ContractionSeq::new(vec![1, 3]).unwrap();
        let f = w_element(&parse("Li[2](1,2)").unwrap());
        let u = p(U1) + p(U2);
        let expected = (&Form::monomial(&u, vec![V12]) - &Form::from_poly(&p(V12)).wedge(&(&Form::dvar(U1) + &Form::dvar(U2))))
            .scaled(&rat(1, 2));
        assert_eq!(pullback(&c, &f).unwrap(), expected);
        let id = ContractionSeq::identity(2);
        let g = w_element(&parse("Li[1,1](1,2,3)").unwrap());
        assert_eq!(pullback(&id, &g).unwrap(), g);
        assert!(pullback(&c, &Form::dvar(U2)).is_err());
    }
}
