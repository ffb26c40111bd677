//! Variation matrices, their weight-1 connection forms, lifts and the laws they satisfy.

use std::collections::BTreeSet;

use num_traits::One;

use crate::algebra::{monomial_weight, Monomial, Sort, Terms};
use crate::antipode::antipode_terms;
use crate::basis::terms_vars;
use crate::coproduct::{coproduct_terms, tensor_terms, TensorTerms};
use crate::derive::{derive_terms, DTerms};
use crate::error::{Error, Result};
use crate::forms::{poly_of_letter, poly_terms, w_terms, Form, Poly};
use crate::lincomb::{binomial, factorial, rat, sign, MonoidKey, Rational};
use crate::matrix::IndexedMatrix;
use crate::vector::{bounded_vectors, generator_to_vector, vector_to_generator, WeightVector};

pub type TermsMatrix = IndexedMatrix<Terms>;
pub type PolyMatrix = IndexedMatrix<Poly>;
pub type FormMatrix = IndexedMatrix<Form>;

/// Keys `v ⪯ n` with `dim v = dim n` and `v_i <= n_i`, plus the zero vector.
pub fn enumerate_keys(n: &[u32]) -> Result<Vec<WeightVector>> {
    if n.is_empty() || n.contains(&0) {
        return Err(Error::MalformedVector(format!("{:?} needs positive entries", n)));
    }
    let top = WeightVector::new(n.to_vec());
    let keys: BTreeSet<WeightVector> = bounded_vectors(n).into_iter().filter(|v| *v <= top).collect();
    Ok(keys.into_iter().collect())
}

/// One row of `V`: the right-hand coefficients of `Δ(v)` keyed by the left generator.
pub fn row(sort: Sort, key: &WeightVector) -> Result<Vec<(WeightVector, Terms)>> {
    let delta = match vector_to_generator(key)? {
        None => TensorTerms::one(),
        Some(g) => coproduct_terms(sort, &Terms::basis(Monomial::atom(g))),
    };
    let mut out: std::collections::BTreeMap<WeightVector, Terms> = Default::default();
    for ((a, b), c) in delta.iter() {
        let col = match a.factors() {
            [] => WeightVector::zero(),
            [g] if a.degree() == 1 => generator_to_vector(Some(g))
                .map_err(|_| Error::LeftSlotNotGenerator(format!("{:?}", a)))?,
            _ => return Err(Error::LeftSlotNotGenerator(crate::render::monomial_text(a))),
        };
        out.entry(col).or_default().add_term(b.clone(), c.clone());
    }
    Ok(out.into_iter().filter(|(_, t)| !t.is_zero()).collect())
}

/// The keys of [`enumerate_keys`] together with every column reachable from them.
pub fn closed_keys(n: &[u32], sort: Sort) -> Result<Vec<WeightVector>> {
    let mut keys: BTreeSet<WeightVector> = enumerate_keys(n)?.into_iter().collect();
    let mut todo: Vec<WeightVector> = keys.iter().cloned().collect();
    while let Some(k) = todo.pop() {
        for (col, _) in row(sort, &k)? {
            if keys.insert(col.clone()) {
                todo.push(col);
            }
        }
    }
    Ok(keys.into_iter().collect())
}

/// The variation matrix of `Li_n` with entries in the given sort.
#[derive(Clone, Debug)]
pub struct Variation {
    pub n: Vec<u32>,
    pub sort: Sort,
    pub v: TermsMatrix,
}

impl Variation {
    pub fn build(n: &[u32], sort: Sort) -> Result<Self> {
        let keys = closed_keys(n, sort)?;
        let mut v = TermsMatrix::new(keys.clone());
        for (r, key) in keys.iter().enumerate() {
            for (col, t) in row(sort, key)? {
                let c = v.index_of(&col).expect("closed key set");
                v.add_at(r, c, &t);
            }
        }
        Ok(Variation { n: n.to_vec(), sort, v })
    }

    pub fn keys(&self) -> &[WeightVector] {
        self.v.keys()
    }

    /// Number of weight levels `‖n‖`.
    pub fn weight(&self) -> u32 {
        self.n.iter().sum()
    }

    /// `Ω = V_1` in the variables, and `ω = dΩ`.
    pub fn omega(&self) -> Result<(PolyMatrix, FormMatrix)> {
        let big = self.v.try_map(|t| terms_vars(&weight_part(t, 1)).map(|l| poly_of_letter(&l)))?;
        let small = big.map(|p| Form::from_poly(p).exterior_d());
        Ok((big, small))
    }

    /// The weight-`n` part of `V` with `w` applied entrywise.
    pub fn w_entrywise(&self, n: u32) -> FormMatrix {
        self.v.map(|t| w_terms(self.sort, &weight_part(t, n)))
    }

    /// `μ_p` = number of keys of weight at most `p`, for `p = 0..=‖n‖`.
    pub fn weight_blocks(&self) -> Vec<usize> {
        (0..=self.weight()).map(|p| self.keys().iter().filter(|k| k.norm() <= p).count()).collect()
    }
}

pub fn weight_part(t: &Terms, w: u32) -> Terms {
    t.filter(|m| monomial_weight(m) == w)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    a.mul(b)
}

fn poly_form(a: &Poly, b: &Form) -> Form {
    b.mul_poly(a)
}

fn form_poly(a: &Form, b: &Poly) -> Form {
    a.mul_poly(b)
}

fn form_wedge(a: &Form, b: &Form) -> Form {
    a.wedge(b)
}

fn scale_forms(m: &FormMatrix, c: &Rational) -> FormMatrix {
    m.map(|f| f.scaled(c))
}

fn poly_power(omega: &PolyMatrix, k: u32) -> PolyMatrix {
    let mut acc = identity_poly(omega.keys().to_vec());
    for _ in 0..k {
        acc = acc.product(omega, poly_mul);
    }
    acc
}

fn identity_poly(keys: Vec<WeightVector>) -> PolyMatrix {
    let mut m = PolyMatrix::new(keys);
    for i in 0..m.size() {
        m.add_at(i, i, &Poly::one());
    }
    m
}

/// `Ω^k ω Ω^l`.
fn sandwich(big: &PolyMatrix, small: &FormMatrix, k: u32, l: u32) -> FormMatrix {
    poly_power(big, k).product(small, poly_form).product(&poly_power(big, l), form_poly)
}

/// `(1/n!) sum_{k+l=n-1} (-1)^k C(n-1,k) Ω^k ω Ω^l`.
pub fn w_closed(big: &PolyMatrix, small: &FormMatrix, n: u32) -> FormMatrix {
    let mut out = FormMatrix::new(big.keys().to_vec());
    for k in 0..n {
        let c = sign(k % 2 == 1) * binomial(n - 1, k) / factorial(n);
        out = out.plus(&scale_forms(&sandwich(big, small, k, n - 1 - k), &c));
    }
    out
}

/// Weight-`n` part of `ω̂` from the closed form: `(n - 1) / n!` times the same sum.
pub fn omega_hat_part(big: &PolyMatrix, small: &FormMatrix, n: u32) -> FormMatrix {
    scale_forms(&w_closed(big, small, n), &Rational::from_integer((n as i64 - 1).into()))
}

/// `ω̂` summed over all weights up to `max_weight`.
pub fn omega_hat(big: &PolyMatrix, small: &FormMatrix, max_weight: u32) -> FormMatrix {
    let mut out = FormMatrix::new(big.keys().to_vec());
    for n in 2..=max_weight {
        out = out.plus(&omega_hat_part(big, small, n));
    }
    out
}

/// `e^{±Ω}` as a finite sum.
pub fn exp_poly(big: &PolyMatrix, negate: bool) -> PolyMatrix {
    let mut out = identity_poly(big.keys().to_vec());
    let mut power = identity_poly(big.keys().to_vec());
    let step = if negate { big.map(|p| -p.clone()) } else { big.clone() };
    for k in 1.. {
        power = power.product(&step, poly_mul);
        if power.is_zero() {
            break;
        }
        let c = Rational::one() / factorial(k);
        out = out.plus(&power.map(|p| p.scaled(&c)));
    }
    out
}

/// `ω̂ = d(e^{-Ω}) e^{Ω} + e^{-Ω} ω e^{Ω}`, straight from the definition.
pub fn omega_hat_definition(big: &PolyMatrix, small: &FormMatrix) -> FormMatrix {
    let em = exp_poly(big, true);
    let ep = exp_poly(big, false);
    let dem = em.map(|p| Form::from_poly(p).exterior_d());
    dem.product(&ep, form_poly).plus(&em.product(small, poly_form).product(&ep, form_poly))
}

/// `V̂ = e^{-Ω} V`.
pub fn v_hat(var: &Variation, big: &PolyMatrix) -> TermsMatrix {
    exp_poly(big, true).product(&var.v, |p, t| poly_terms(p).mul(t))
}

/// Wedge product of form matrices.
pub fn wedge_matrices(a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    a.product(b, form_wedge)
}

/// Product of a matrix of 1-forms with a matrix of symbols.
fn forms_times_terms(a: &FormMatrix, b: &TermsMatrix) -> Result<IndexedMatrix<DTerms>> {
    let da = a.try_map(|f| f.to_dterms())?;
    Ok(da.product(b, |f, t| {
        f.product_with(t, |(m, v), m2| Some(((m.combine(m2), *v), Rational::one())))
    }))
}

fn first_difference<T: PartialEq + std::fmt::Debug + crate::matrix::Additive>(
    what: &str,
    lhs: &IndexedMatrix<T>,
    rhs: &IndexedMatrix<T>,
) -> Result<()> {
    if lhs == rhs {
        return Ok(());
    }
    let keys = lhs.keys();
    for r in 0..lhs.size() {
        for c in 0..lhs.size() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return Err(Error::Disagreement(format!(
                    "{} at ({}, {}): {:?} vs {:?}",
                    what,
                    keys[r],
                    keys[c],
                    lhs.get(r, c),
                    rhs.get(r, c)
                )));
            }
        }
    }
    Err(Error::Disagreement(format!("{}: key sets differ", what)))
}

/// `Δ(V^T) = V^T ⊗ V^T`, i.e. `Δ V_{w,v} = sum_u V_{u,v} ⊗ V_{w,u}`.
pub fn check_comultiplicative(var: &Variation) -> Result<()> {
    let lhs = var.v.map(|t| coproduct_terms(var.sort, t));
    let vt = var.v.transpose();
    let rhs = vt.product(&vt, tensor_terms).transpose();
    first_difference("comultiplicativity", &lhs, &rhs)
}

/// `S(V^T) V^T = I`.
pub fn check_antipode(var: &Variation) -> Result<()> {
    let vt = var.v.transpose();
    let s = vt.map(|t| antipode_terms(var.sort, t));
    let prod = s.product(&vt, |a, b| a.mul(b));
    let mut id = TermsMatrix::new(var.keys().to_vec());
    for i in 0..id.size() {
        id.add_at(i, i, &Terms::one());
    }
    first_difference("antipode", &prod, &id)
}

/// `dV = ωV` entrywise.
pub fn check_differential(var: &Variation) -> Result<()> {
    let (_, small) = var.omega()?;
    let lhs = var.v.map(derive_terms);
    let rhs = forms_times_terms(&small, &var.v)?;
    first_difference("dV = ωV", &lhs, &rhs)
}

/// Entrywise `w(V_n)` against the closed form.
pub fn check_w_closed(var: &Variation, n: u32) -> Result<()> {
    let (big, small) = var.omega()?;
    first_difference(&format!("w(V_{})", n), &var.w_entrywise(n), &w_closed(&big, &small, n))
}

/// `dw(V_n) + sum_{p+q=n} w(V_p) ∧ w(V_q) = 0`.
pub fn check_chain_map(var: &Variation, n: u32) -> Result<()> {
    let mut total = var.w_entrywise(n).map(|f| f.exterior_d());
    for p in 1..n {
        total = total.plus(&wedge_matrices(&var.w_entrywise(p), &var.w_entrywise(n - p)));
    }
    first_difference(&format!("chain map in weight {}", n), &total, &FormMatrix::new(var.keys().to_vec()))
}

/// `ω̂_n = (n - 1) w(V_n)`, and the closed form of `ω̂` against its definition.
pub fn check_omega_hat(var: &Variation) -> Result<()> {
    let (big, small) = var.omega()?;
    for n in 1..=var.weight() {
        let scaled = scale_forms(&var.w_entrywise(n), &Rational::from_integer((n as i64 - 1).into()));
        first_difference(&format!("ω̂_{}", n), &omega_hat_part(&big, &small, n), &scaled)?;
    }
    let closed = omega_hat(&big, &small, var.weight() + 1);
    first_difference("ω̂ closed form", &closed, &omega_hat_definition(&big, &small))
}

/// `dV̂ = ω̂V̂` and `dω̂ - ω̂∧ω̂ = -e^{-Ω} ω∧ω e^{Ω}`.
pub fn check_lifted(var: &Variation) -> Result<()> {
    let (big, small) = var.omega()?;
    let hat = omega_hat_definition(&big, &small);
    let vh = v_hat(var, &big);
    first_difference("dV̂ = ω̂V̂", &vh.map(derive_terms), &forms_times_terms(&hat, &vh)?)?;
    let lhs = hat
        .map(|f| f.exterior_d())
        .plus(&scale_forms(&wedge_matrices(&hat, &hat), &-Rational::one()));
    let ww = wedge_matrices(&small, &small);
    let rhs = exp_poly(&big, true)
        .product(&ww, poly_form)
        .product(&exp_poly(&big, false), form_poly);
    first_difference("dω̂ - ω̂∧ω̂", &lhs, &scale_forms(&rhs, &-Rational::one()))
}

/// `(n+1)! w(V_{n+1}) = [n! w(V_n), Ω]` for `1 <= n < ‖n‖`.
pub fn check_recurrence(var: &Variation) -> Result<()> {
    let (big, _) = var.omega()?;
    for n in 1..var.weight() {
        let lhs = scale_forms(&var.w_entrywise(n + 1), &factorial(n + 1));
        let wn = scale_forms(&var.w_entrywise(n), &factorial(n));
        let rhs = wn.product(&big, form_poly).plus(&scale_forms(&big.product(&wn, poly_form), &-Rational::one()));
        first_difference(&format!("recurrence at n = {}", n), &lhs, &rhs)?;
    }
    Ok(())
}

/// `w[x]_n` from the previous weight: `(1/N)(w(V_{N-1})_{n,•} Ω_{•,0} - Ω_{n,•} w(V_{N-1})_{•,0})`.
pub fn recurrence_form(var: &Variation) -> Result<Form> {
    let (big, _) = var.omega()?;
    let total = var.weight();
    let prev = var.w_entrywise(total - 1);
    let row = var.v.index_of(&WeightVector::new(var.n.clone())).expect("top key present");
    let mut out = Form::zero(1);
    for k in 0..var.v.size() {
        if let (Some(w), Some(p)) = (prev.get(row, k), big.get(k, 0)) {
            out = &out + &w.mul_poly(p);
        }
        if let (Some(p), Some(w)) = (big.get(row, k), prev.get(k, 0)) {
            out = &out - &w.mul_poly(p);
        }
    }
    Ok(out.scaled(&rat(1, total as i64)))
}
