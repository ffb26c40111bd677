//! The weight-1 variables `u_i = [x_i]_0` and `v_{i,j} = -[x_i ... x_j]_1`.

use std::fmt;

use num_traits::One;

use crate::algebra::{gen_terms, Generator, Terms};
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    U(u32),
    /// `v_{i,j}` with `i <= j`.
    V(u32, u32),
}

impl Var {
    /// Largest variable index `x_k` the symbol involves.
    pub fn max_index(&self) -> u32 {
        match *self {
            Var::U(i) => i,
            Var::V(_, j) => j,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Var::U(i) => format!("u{}", i),
            Var::V(i, j) if i == j => format!("v{}", i),
            Var::V(i, j) => format!("v{}_{}", i, j),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A linear combination of weight-1 variables.
pub type Letter1 = LinComb<Var>;

/// The window product `x_a ... x_{b-1}` as a weight-1 symbol in variables.
fn window_one(a: u32, b: u32) -> Letter1 {
    Letter1::term(Var::V(a, b - 1), -Rational::one())
}

fn window_zero(a: u32, b: u32) -> Letter1 {
    (a..b).map(|r| (Var::U(r), Rational::one())).collect()
}

/// Weight-1 generator in variables; inverted symbols go through INV first.
pub fn generator_vars(g: &Generator) -> Result<Letter1> {
    match g {
        Generator::Log(i) => Ok(Letter1::basis(Var::U(*i))),
        Generator::Poly(p) if p.weight() == 1 => {
            let (a, b) = (p.indices()[0], p.indices()[1]);
            if p.inverted() {
                // INV[y^{-1}]_1 = [y]_1 + [y]_0
                Ok(window_one(a, b) + window_zero(a, b))
            } else {
                Ok(window_one(a, b))
            }
        }
        other => Err(Error::NotWeightOne(format!("{:?}", other))),
    }
}

/// A weight-1 homogeneous element in variables.
pub fn terms_vars(t: &Terms) -> Result<Letter1> {
    let mut out = Letter1::zero();
    for (m, c) in t.iter() {
        match m.factors() {
            [g] => out.add_scaled(&generator_vars(g)?, c),
            _ => {
                return Err(Error::NotWeightOne(format!(
                    "monomial of degree {}",
                    m.degree()
                )))
            }
        }
    }
    Ok(out)
}

pub fn var_terms(v: Var) -> Terms {
    match v {
        Var::U(i) => gen_terms(Generator::Log(i)),
        Var::V(i, j) => gen_terms(Generator::poly(vec![i, j + 1], vec![1]).unwrap())
            .scaled(&-Rational::one()),
    }
}

pub fn letter_terms(l: &Letter1) -> Terms {
    l.flat_map(|v| var_terms(*v))
}

/// `d[window]_1` and `d[window]_0` for a letter of either orientation, in the variable basis.
pub(crate) fn letter_differentials(l: crate::algebra::Letter) -> (Letter1, Letter1) {
    let one = window_one(l.start, l.end);
    let zero = window_zero(l.start, l.end);
    if l.inverted {
        (one + zero.clone(), -zero)
    } else {
        (one, zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn identification() {
        let e = parse("Li[1](1,3)").unwrap();
        assert_eq!(terms_vars(e.terms()).unwrap(), Letter1::term(Var::V(1, 2), -Rational::one()));
        let e = parse("ILi[1](2,3)").unwrap();
        let expected = Letter1::basis(Var::U(2)) - Letter1::basis(Var::V(2, 2));
        assert_eq!(terms_vars(e.terms()).unwrap(), expected);
        assert!(terms_vars(parse("Li[2](1,2)").unwrap().terms()).is_err());
        assert!(terms_vars(parse("log(1)^2").unwrap().terms()).is_err());
    }

    #[test]
    fn round_trip() {
        let l = Letter1::basis(Var::U(1)) - Letter1::basis(Var::V(1, 2));
        assert_eq!(terms_vars(&letter_terms(&l)).unwrap(), l);
    }
}
