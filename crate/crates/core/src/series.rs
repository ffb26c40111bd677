//! Multivariate power series truncated at per-variable degree caps.

use num_traits::{One, Zero};

use crate::lincomb::{factorial, Rational, Ring};

/// An integer linear combination of the series variables `t_0, t_1, ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn zero(nvars: usize) -> Self {
        LinearForm(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        LinearForm(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        LinearForm(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LinearForm(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

/// Dense storage indexed by degree tuples `0 <= deg[i] <= caps[i]`.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<C> {
    caps: Vec<u32>,
    strides: Vec<usize>,
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    pub fn zero(caps: &[u32]) -> Self {
        let mut strides = Vec::with_capacity(caps.len());
        let mut size = 1usize;
        for &c in caps {
            strides.push(size);
            size *= c as usize + 1;
        }
        TruncatedSeries { caps: caps.to_vec(), strides, coeffs: vec![C::zero_value(); size] }
    }

    pub fn constant(caps: &[u32], c: C) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = c;
        s
    }

    pub fn one(caps: &[u32]) -> Self {
        Self::constant(caps, C::one_value())
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    fn index(&self, deg: &[u32]) -> Option<usize> {
        let mut idx = 0;
        for (i, &d) in deg.iter().enumerate() {
            if d > self.caps[i] {
                return None;
            }
            idx += d as usize * self.strides[i];
        }
        Some(idx)
    }

    fn degree(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.caps.len()];
        for (i, &c) in self.caps.iter().enumerate() {
            let base = c as usize + 1;
            out[i] = (idx % base) as u32;
            idx /= base;
        }
        out
    }

    /// Coefficient at `deg`; zero outside the caps.
    pub fn get(&self, deg: &[u32]) -> C {
        match self.index(deg) {
            Some(i) => self.coeffs[i].clone(),
            None => C::zero_value(),
        }
    }

    pub fn add_at(&mut self, deg: &[u32], c: &C) {
        if let Some(i) = self.index(deg) {
            self.coeffs[i].add_assign_ref(c);
        }
    }

    /// Nonzero coefficients with their degrees.
    pub fn nonzero(&self) -> Vec<(Vec<u32>, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.vanishes())
            .map(|(i, c)| (self.degree(i), c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }

    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.caps, other.caps);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.vanishes() {
                a.add_assign_ref(b);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            caps: self.caps.clone(),
            strides: self.strides.clone(),
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.caps, other.caps);
        let mut out = Self::zero(&self.caps);
        let b_terms = other.nonzero();
        for (da, a) in self.nonzero() {
            for (db, b) in &b_terms {
                let deg: Vec<u32> = da.iter().zip(db).map(|(x, y)| x + y).collect();
                if let Some(i) = out.index(&deg) {
                    let p = a.mul_ref(b);
                    out.coeffs[i].add_assign_ref(&p);
                }
            }
        }
        out
    }

    /// Multiply every coefficient of a scalar series by `c`.
    pub fn lift(s: &TruncatedSeries<Rational>, c: &C) -> Self {
        TruncatedSeries {
            caps: s.caps.clone(),
            strides: s.strides.clone(),
            coeffs: s
                .coeffs
                .iter()
                .map(|q| if q.is_zero() { C::zero_value() } else { c.scale(q) })
                .collect(),
        }
    }

    /// `exp(x * form)` truncated to the caps.
    pub fn exp_linear(x: &C, form: &LinearForm, caps: &[u32]) -> Self {
        let budget: u32 = caps.iter().sum();
        let f = linear_series(form, caps);
        let mut out = Self::one(caps);
        let mut fpow = TruncatedSeries::<Rational>::one(caps);
        let mut xpow = C::one_value();
        for k in 1..=budget {
            fpow = fpow.mul(&f);
            if fpow.is_zero() {
                break;
            }
            xpow = xpow.mul_ref(x);
            let scaled = xpow.scale(&(Rational::one() / factorial(k)));
            out.add_assign(&Self::lift(&fpow, &scaled));
        }
        out
    }

    /// `sum_m coeff(m) * prod_k form_k^(m_k - 1)` over weight vectors `m >= 1`.
    pub fn word_series(
        forms: &[LinearForm],
        caps: &[u32],
        mut coeff: impl FnMut(&[u32]) -> C,
    ) -> Self {
        let budget: u32 = caps.iter().sum();
        let mut out = Self::zero(caps);
        if forms.is_empty() {
            return Self::constant(caps, coeff(&[]));
        }
        let base: Vec<TruncatedSeries<Rational>> =
            forms.iter().map(|f| linear_series(f, caps)).collect();
        let mut powers: Vec<Vec<TruncatedSeries<Rational>>> = Vec::new();
        for b in &base {
            let mut p = vec![TruncatedSeries::one(caps)];
            for e in 1..=budget as usize {
                let next = p[e - 1].mul(b);
                p.push(next);
            }
            powers.push(p);
        }
        let mut exps = vec![0u32; forms.len()];
        loop {
            let mut s = TruncatedSeries::<Rational>::one(caps);
            for (k, &e) in exps.iter().enumerate() {
                if e > 0 {
                    s = s.mul(&powers[k][e as usize]);
                }
                if s.is_zero() {
                    break;
                }
            }
            if !s.is_zero() {
                let m: Vec<u32> = exps.iter().map(|e| e + 1).collect();
                let c = coeff(&m);
                if !c.vanishes() {
                    out.add_assign(&Self::lift(&s, &c));
                }
            }
            if !next_bounded_composition(&mut exps, budget) {
                break;
            }
        }
        out
    }
}

/// Advance `v` through all tuples with `sum(v) <= budget`; false when exhausted.
fn next_bounded_composition(v: &mut [u32], budget: u32) -> bool {
    for i in 0..v.len() {
        v[i] += 1;
        if v.iter().sum::<u32>() <= budget {
            return true;
        }
        v[i] = 0;
    }
    false
}

/// The series of a linear form itself.
pub fn linear_series(form: &LinearForm, caps: &[u32]) -> TruncatedSeries<Rational> {
    let mut s = TruncatedSeries::<Rational>::zero(caps);
    for (i, &c) in form.0.iter().enumerate() {
        if c != 0 {
            let mut deg = vec![0; caps.len()];
            deg[i] = 1;
            s.add_at(&deg, &Rational::from_integer(c.into()));
        }
    }
    s
}

/// `sum_{p <= target} f(a_p, b_{target - p})`, the single coefficient of a product.
pub fn coefficient_of_product<A: Ring, B: Ring, R>(
    a: &TruncatedSeries<A>,
    b: &TruncatedSeries<B>,
    target: &[u32],
    mut f: impl FnMut(&A, &B) -> R,
    mut acc: impl FnMut(R),
) {
    for (da, ca) in a.nonzero() {
        if da.iter().zip(target).any(|(x, t)| x > t) {
            continue;
        }
        let rest: Vec<u32> = target.iter().zip(&da).map(|(t, x)| t - x).collect();
        let cb = b.get(&rest);
        if !cb.vanishes() {
            acc(f(ca, &cb));
        }
    }
}
