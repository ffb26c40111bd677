//! Complex points of `Ŝ_d`, their tangent spaces, and evaluation of forms there.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::Var;
use crate::error::{Error, Result};
use crate::forms::{Form, Poly};

/// Distance from the singular locus below which a sample is rejected.
const SINGULAR_EPS: f64 = 1e-6;

/// A point with `exp(u_i + ... + u_j) + exp(v_{i,j}) = 1` for every window.
#[derive(Clone, Debug)]
pub struct PointHatS {
    pub d: u32,
    pub u: Vec<Complex64>,
    pub v: BTreeMap<(u32, u32), Complex64>,
}

/// Values of `du_i` and `dv_{i,j}` on one tangent vector.
#[derive(Clone, Debug)]
pub struct Tangent {
    pub du: Vec<Complex64>,
    pub dv: BTreeMap<(u32, u32), Complex64>,
}

fn window_sum(u: &[Complex64], i: u32, j: u32) -> Complex64 {
    u[(i - 1) as usize..j as usize].iter().sum()
}

impl PointHatS {
    /// Build the point over the given `u`; `None` near the singular locus.
    pub fn from_u(u: Vec<Complex64>) -> Option<Self> {
        let d = u.len() as u32;
        let mut v = BTreeMap::new();
        for i in 1..=d {
            for j in i..=d {
                let one_minus = Complex64::new(1.0, 0.0) - window_sum(&u, i, j).exp();
                if one_minus.norm() < SINGULAR_EPS {
                    return None;
                }
                v.insert((i, j), one_minus.ln());
            }
        }
        Some(PointHatS { d, u, v })
    }

    pub fn value(&self, var: Var) -> Result<Complex64> {
        match var {
            Var::U(i) if i >= 1 && i <= self.d => Ok(self.u[(i - 1) as usize]),
            Var::V(i, j) => self
                .v
                .get(&(i, j))
                .copied()
                .ok_or_else(|| Error::OutOfRange(format!("{} at depth {}", var, self.d))),
            _ => Err(Error::OutOfRange(format!("{} at depth {}", var, self.d))),
        }
    }

    /// Largest defining-equation residual over all windows.
    pub fn residual(&self) -> f64 {
        self.v
            .iter()
            .map(|(&(i, j), v)| (window_sum(&self.u, i, j).exp() + v.exp() - 1.0).norm())
            .fold(0.0, f64::max)
    }
}

/// Seeded sample: `u` drawn from a box, resampling near `exp(u_i + ... + u_j) = 1`.
pub fn sample_point(d: u32, rng: &mut ChaCha8Rng) -> PointHatS {
    assert!(d >= 1, "depth must be positive");
    loop {
        let u = (0..d)
            .map(|_| Complex64::new(rng.random_range(-2.0..0.5), rng.random_range(-3.0..3.0)))
            .collect();
        if let Some(p) = PointHatS::from_u(u) {
            return p;
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Basis of the tangent space: `du = e_k`, with `dv` solving
/// `(1 - exp(v)) sum du + exp(v) dv = 0` on each window.
pub fn tangent_basis(p: &PointHatS) -> Vec<Tangent> {
    (0..p.d as usize)
        .map(|k| {
            let mut du = vec![Complex64::new(0.0, 0.0); p.d as usize];
            du[k] = Complex64::new(1.0, 0.0);
            let dv = p
                .v
                .iter()
                .map(|(&(i, j), v)| {
                    let s = window_sum(&du, i, j);
                    let ev = v.exp();
                    ((i, j), -(Complex64::new(1.0, 0.0) - ev) * s / ev)
                })
                .collect();
            Tangent { du, dv }
        })
        .collect()
}

impl Tangent {
    pub fn component(&self, var: Var) -> Result<Complex64> {
        match var {
            Var::U(i) if i >= 1 && (i as usize) <= self.du.len() => Ok(self.du[(i - 1) as usize]),
            Var::V(i, j) => self
                .dv
                .get(&(i, j))
                .copied()
                .ok_or_else(|| Error::OutOfRange(format!("d{}", var))),
            _ => Err(Error::OutOfRange(format!("d{}", var))),
        }
    }
}

pub fn eval_poly(f: &Poly, p: &PointHatS) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for (m, c) in f.iter() {
        let mut term = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        for v in m.factors() {
            term *= p.value(*v)?;
        }
        total += term;
    }
    Ok(total)
}

fn det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .expect("nonempty");
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            acc = -acc;
        }
        acc *= m[col][col];
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                let sub = f * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    acc
}

/// Evaluate a `k`-form at `p` on `k` tangent vectors.
pub fn eval_form(f: &Form, p: &PointHatS, tangents: &[Tangent]) -> Result<Complex64> {
    if tangents.len() != f.degree() {
        return Err(Error::DimensionMismatch(format!(
            "{}-form evaluated on {} vectors",
            f.degree(),
            tangents.len()
        )));
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (wedge, coeff) in f.components() {
        let c = eval_poly(&coeff, p)?;
        let mut rows = Vec::with_capacity(wedge.len());
        for v in &wedge {
            rows.push(tangents.iter().map(|t| t.component(*v)).collect::<Result<Vec<_>>>()?);
        }
        total += c * det(rows);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::poly_var;

    #[test]
    fn depth_one_half() {
        let half = -(2f64.ln());
        let p = PointHatS::from_u(vec![Complex64::new(half, 0.0)]).unwrap();
        assert!((p.value(Var::V(1, 1)).unwrap() - half).norm() < 1e-15);
        let t = tangent_basis(&p);
        assert!((t[0].component(Var::V(1, 1)).unwrap() + 1.0).norm() < 1e-12);
        let du = eval_form(&Form::dvar(Var::U(1)), &p, &t).unwrap();
        let dv = eval_form(&Form::dvar(Var::V(1, 1)), &p, &t).unwrap();
        assert!((du - 1.0).norm() < 1e-12 && (dv + 1.0).norm() < 1e-12);
        assert_eq!(eval_form(&Form::zero(1), &p, &t).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sampled_points_are_on_the_variety() {
        let mut rng = rng_from_seed(7);
        for d in 1..4 {
            let p = sample_point(d, &mut rng);
            assert!(p.residual() < 1e-12);
            assert_eq!(p.v.len() as u32, d * (d + 1) / 2);
        }
    }

    #[test]
    fn exact_forms_vanish_on_tangents() {
        // d of the defining equation pulls back to zero
        let mut rng = rng_from_seed(3);
        let p = sample_point(2, &mut rng);
        for t in tangent_basis(&p) {
            let (i, j) = (1, 2);
            let s = t.du[0] + t.du[1];
            let ev = p.v[&(i, j)].exp();
            assert!(((1.0 - ev) * s + ev * t.dv[&(i, j)]).norm() < 1e-12);
        }
        let f = Form::dvar(Var::U(1)).wedge(&Form::dvar(Var::U(2)));
        let t = tangent_basis(&p);
        assert!((eval_form(&f, &p, &t).unwrap() - 1.0).norm() < 1e-12);
        assert!(eval_form(&Form::from_poly(&poly_var(Var::U(1))), &p, &t[..1]).is_err());
    }
}
