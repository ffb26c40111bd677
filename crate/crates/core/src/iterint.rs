//! Goncharov's iterated-integral Hopf algebra `I(S)` for the point set
//! `S = {0, 1} ∪ {1/(x_i ... x_j)}`, and the map `Φ` into the symbolic
//! polylogarithms with inverted symbols.

use std::fmt;

use crate::algebra::{Letter, Sort, Terms};
use crate::coproduct::{coproduct_terms, generator_series, TensorTerms};
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, MonoidKey, Rational, SortedMulti};
use crate::series::{LinearForm, TruncatedSeries};
use crate::Element;

/// A point of `S`: `0`, `1` or `prod_{r=i}^{j} x_r^{-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SPoint {
    Zero,
    One,
    InvProduct(u32, u32),
}

impl SPoint {
    pub fn inv_product(i: u32, j: u32) -> Result<Self> {
        if i == 0 || i > j {
            return Err(Error::OutOfRange(format!("InvProduct({}, {})", i, j)));
        }
        Ok(SPoint::InvProduct(i, j))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SPoint::Zero)
    }

    fn exponent(&self, r: u32) -> i32 {
        match *self {
            SPoint::InvProduct(i, j) if i <= r && r <= j => -1,
            _ => 0,
        }
    }

    fn span(&self) -> Option<(u32, u32)> {
        match *self {
            SPoint::InvProduct(i, j) => Some((i, j)),
            _ => None,
        }
    }

    /// `[a]_0` as log generators; `[1]_0 = 0`.
    pub(crate) fn log_terms(&self) -> Terms {
        match *self {
            SPoint::Zero => panic!("[0]_0 is undefined"),
            SPoint::One => Terms::zero(),
            SPoint::InvProduct(i, j) => -crate::algebra::expand_log_terms(i, j + 1),
        }
    }
}

impl fmt::Display for SPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SPoint::Zero => write!(f, "0"),
            SPoint::One => write!(f, "1"),
            SPoint::InvProduct(i, j) if i == j => write!(f, "1/x{}", i),
            SPoint::InvProduct(i, j) => {
                write!(f, "1/(")?;
                for r in i..=j {
                    write!(f, "x{}", r)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// `next / prev` as a window letter, if it is one.
pub fn ratio(prev: SPoint, next: SPoint) -> Option<Letter> {
    if prev.is_zero() || next.is_zero() {
        return None;
    }
    let spans: Vec<(u32, u32)> = [prev.span(), next.span()].into_iter().flatten().collect();
    let lo = spans.iter().map(|s| s.0).min()?;
    let hi = spans.iter().map(|s| s.1).max()?;
    let e: Vec<(u32, i32)> = (lo..=hi)
        .map(|r| (r, next.exponent(r) - prev.exponent(r)))
        .filter(|&(_, e)| e != 0)
        .collect();
    let (first, sign) = *e.first()?;
    let last = e.last()?.0;
    let contiguous = e.len() as u32 == last - first + 1 && e.iter().all(|&(_, s)| s == sign);
    contiguous.then(|| Letter::new(first, last + 1, sign < 0))
}

/// Whether letters form one consecutive word of a single orientation (reading order).
fn is_word(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| {
        p[0].inverted == p[1].inverted
            && if p[0].inverted { p[1].end == p[0].start } else { p[0].end == p[1].start }
    })
}

/// A generator `I(a_0; a_1, ..., a_d; a_{d+1})` with `d >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IGenerator {
    points: Vec<SPoint>,
}

impl IGenerator {
    pub fn new(points: Vec<SPoint>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidGenerator(format!(
                "an iterated integral needs at least one inner point, got {} points",
                points.len()
            )));
        }
        Ok(IGenerator { points })
    }

    pub fn points(&self) -> &[SPoint] {
        &self.points
    }

    pub fn weight(&self) -> u32 {
        self.points.len() as u32 - 2
    }

    pub fn start(&self) -> SPoint {
        self.points[0]
    }

    pub fn end(&self) -> SPoint {
        *self.points.last().unwrap()
    }

    pub fn inner(&self) -> &[SPoint] {
        &self.points[1..self.points.len() - 1]
    }

    /// Number of nonzero inner points.
    pub fn depth(&self) -> usize {
        self.inner().iter().filter(|p| !p.is_zero()).count()
    }

    pub fn is_degenerate(&self) -> bool {
        self.start().is_zero() && self.end().is_zero()
    }

    /// Nonzero inner points and the zero runs `n_0, ..., n_d` around them.
    pub fn shape(&self) -> (Vec<SPoint>, Vec<u32>) {
        let mut nonzero = Vec::new();
        let mut runs = vec![0u32];
        for p in self.inner() {
            if p.is_zero() {
                *runs.last_mut().unwrap() += 1;
            } else {
                nonzero.push(*p);
                runs.push(0);
            }
        }
        (nonzero, runs)
    }

    fn with_endpoints(&self, start: SPoint, end: SPoint) -> IGenerator {
        let mut points = self.points.clone();
        points[0] = start;
        *points.last_mut().unwrap() = end;
        IGenerator { points }
    }

    fn reversed(&self) -> IGenerator {
        IGenerator { points: self.points.iter().rev().cloned().collect() }
    }
}

impl fmt::Display for IGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.inner().iter().map(|p| p.to_string()).collect();
        write!(f, "I({}; {}; {})", self.start(), inner.join(", "), self.end())
    }
}

pub type IMonomial = SortedMulti<IGenerator>;
/// An element of `I(S)`.
pub type IElement = LinComb<IMonomial>;
pub type ITensor = LinComb<(IMonomial, IMonomial)>;

/// `I(points)`, with `I(a; ∅; b) = 1`.
pub fn integral(points: &[SPoint]) -> IElement {
    assert!(points.len() >= 2);
    if points.len() == 2 {
        IElement::one()
    } else {
        IElement::basis(SortedMulti::atom(IGenerator { points: points.to_vec() }))
    }
}

/// The subsequence sum on one generator.
pub fn i_coproduct(g: &IGenerator) -> ITensor {
    let a = g.points();
    let last = a.len() - 1;
    let d = last - 1;
    let mut out = ITensor::zero();
    for mask in 0u32..(1 << d) {
        let mut chosen = vec![0];
        chosen.extend((1..=d).filter(|k| mask & (1 << (k - 1)) != 0));
        chosen.push(last);
        let left: Vec<SPoint> = chosen.iter().map(|&k| a[k]).collect();
        let mut right = IElement::one();
        for p in chosen.windows(2) {
            right = right.mul(&integral(&a[p[0]..=p[1]]));
        }
        let left = integral(&left);
        for (l, c) in left.iter() {
            for (r, e) in right.iter() {
                out.add_term((l.clone(), r.clone()), c * e);
            }
        }
    }
    out
}

/// Multiplicative extension of [`i_coproduct`].
pub fn i_coproduct_terms(e: &IElement) -> ITensor {
    let mut out = ITensor::zero();
    for (m, c) in e.iter() {
        let mut t = ITensor::one();
        for g in m.factors() {
            t = t.mul(&i_coproduct(g));
        }
        out += &(&t * c);
    }
    out
}

/// Whether `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` holds on `g`.
pub fn check_i_coassociative(g: &IGenerator) -> Result<()> {
    let once = i_coproduct(g);
    let mut lhs: LinComb<(IMonomial, IMonomial, IMonomial)> = LinComb::zero();
    let mut rhs = lhs.clone();
    for ((l, r), c) in once.iter() {
        for ((ll, lr), e) in i_coproduct_terms(&IElement::basis(l.clone())).iter() {
            lhs.add_term((ll.clone(), lr.clone(), r.clone()), c * e);
        }
        for ((rl, rr), e) in i_coproduct_terms(&IElement::basis(r.clone())).iter() {
            rhs.add_term((l.clone(), rl.clone(), rr.clone()), c * e);
        }
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Disagreement(format!("coassociativity of Δ on {}", g)))
    }
}

/// A strictly increasing index sequence `(i_0, ..., i_{n+1})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ISeq(Vec<usize>);

impl ISeq {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.len() < 2 || indices.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::OutOfRange(format!("{:?} is not a strictly increasing sequence of length >= 2", indices)));
        }
        Ok(ISeq(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// `|i| = n`.
    pub fn len(&self) -> usize {
        self.0.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `self <= other`: a subsequence with the same endpoints.
    pub fn is_below(&self, other: &ISeq) -> bool {
        let (a, b) = (&self.0, &other.0);
        if a[0] != b[0] || a.last() != b.last() {
            return false;
        }
        let mut it = b.iter();
        a.iter().all(|x| it.any(|y| y == x))
    }

    pub fn integral(&self, a: &[SPoint]) -> IElement {
        integral(&self.0.iter().map(|&k| a[k]).collect::<Vec<_>>())
    }
}

/// The variation-matrix entry `V_{i,j}` for the point sequence `a`.
pub fn subseq_entry(a: &[SPoint], i: &ISeq, j: &ISeq) -> IElement {
    if !j.is_below(i) {
        return IElement::zero();
    }
    let pos: Vec<usize> = j.0.iter().map(|x| i.0.iter().position(|y| y == x).unwrap()).collect();
    let mut out = IElement::one();
    for p in pos.windows(2) {
        out = out.mul(&integral(&i.0[p[0]..=p[1]].iter().map(|&k| a[k]).collect::<Vec<_>>()));
    }
    out
}

/// All strictly increasing sequences of length >= 2 in `0..len`.
pub fn sequences(len: usize) -> Vec<ISeq> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << len) {
        let v: Vec<usize> = (0..len).filter(|k| mask & (1 << k) != 0).collect();
        if v.len() >= 2 {
            out.push(ISeq(v));
        }
    }
    out.sort();
    out
}

/// `ΔV^T = V^T ⊗ V^T` for the sequence `a`: `ΔV_{i,j} = Σ_{j<=l<=i} V_{l,j} ⊗ V_{i,l}`.
pub fn check_i_variation(a: &[SPoint]) -> Result<()> {
    let seqs = sequences(a.len());
    for i in &seqs {
        for j in &seqs {
            let lhs = i_coproduct_terms(&subseq_entry(a, i, j));
            let mut rhs = ITensor::zero();
            for l in seqs.iter().filter(|l| j.is_below(l) && l.is_below(i)) {
                let (x, y) = (subseq_entry(a, l, j), subseq_entry(a, i, l));
                for (p, c) in x.iter() {
                    for (q, e) in y.iter() {
                        rhs.add_term((p.clone(), q.clone()), c * e);
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::Disagreement(format!("ΔV^T at ({:?}, {:?})", i.0, j.0)));
            }
        }
    }
    Ok(())
}

fn is_degenerate_points(points: &[SPoint]) -> bool {
    points.len() > 2 && points[0].is_zero() && points.last().unwrap().is_zero()
}

/// `Γ` on a generator, modulo degenerates.
pub fn gamma(g: &IGenerator) -> IElement {
    let (b, runs) = g.shape();
    let d = b.len();
    let zeros = |n: u32| std::iter::repeat_n(SPoint::Zero, n as usize);
    let mut out = IElement::zero();
    for p in 0..=d {
        for r in 0..=runs[p] {
            let s = runs[p] - r;
            let mut left = vec![g.start()];
            for k in 0..p {
                left.extend(zeros(runs[k]));
                left.push(b[k]);
            }
            left.extend(zeros(r));
            left.push(SPoint::Zero);
            let mut right = vec![SPoint::Zero];
            right.extend(zeros(s));
            for k in p..d {
                right.push(b[k]);
                right.extend(zeros(runs[k + 1]));
            }
            right.push(g.end());
            if is_degenerate_points(&left) || is_degenerate_points(&right) {
                continue;
            }
            out += &integral(&left).mul(&integral(&right));
        }
    }
    out
}

/// Multiplicative extension of [`gamma`].
pub fn gamma_terms(e: &IElement) -> IElement {
    let mut out = IElement::zero();
    for (m, c) in e.iter() {
        let mut t = IElement::one();
        for g in m.factors() {
            t = t.mul(&gamma(g));
        }
        out += &(&t * c);
    }
    out
}

/// The successive-ratio condition: every ratio along the chain is a regular window and
/// the windows are consecutive.
fn regular_chain(chain: &[SPoint]) -> bool {
    let mut letters = Vec::with_capacity(chain.len());
    for p in chain.windows(2) {
        match ratio(p[0], p[1]) {
            Some(l) if !l.inverted => letters.push(l),
            _ => return false,
        }
    }
    is_word(&letters)
}

/// Whether `g` is a polylogarithmic iterated integral.
pub fn is_polylogarithmic(g: &IGenerator) -> bool {
    if g.is_degenerate() {
        return is_polylogarithmic(&g.with_endpoints(SPoint::One, SPoint::Zero))
            || is_polylogarithmic(&g.with_endpoints(SPoint::Zero, SPoint::One));
    }
    if g.end().is_zero() {
        return is_polylogarithmic(&g.reversed());
    }
    let (b, _) = g.shape();
    let mut chain = Vec::with_capacity(b.len() + 2);
    if !g.start().is_zero() {
        chain.push(g.start());
    }
    chain.extend(b);
    chain.push(g.end());
    regular_chain(&chain)
}

type Series = TruncatedSeries<Terms>;

/// `Φ(I(a_0; b; a_{d+1} | forms))` as a truncated series.
fn phi_series(start: SPoint, b: &[SPoint], end: SPoint, forms: &[LinearForm], caps: &[u32]) -> Result<Series> {
    let d = b.len();
    debug_assert_eq!(forms.len(), d + 1);
    let sign = if d % 2 == 1 { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
    match (start.is_zero(), end.is_zero()) {
        (true, true) => Ok(if d > 0 { Series::zero(caps) } else { Series::one(caps) }),
        (true, false) => {
            let mut chain = b.to_vec();
            chain.push(end);
            let mut letters = Vec::with_capacity(d);
            for p in chain.windows(2) {
                letters.push(ratio(p[0], p[1]).ok_or_else(|| {
                    Error::NonPolylogarithmic(format!("{} / {} is not a window", p[1], p[0]))
                })?);
            }
            if !is_word(&letters) {
                return Err(Error::NonPolylogarithmic("successive ratios do not form a word".into()));
            }
            let shifted: Vec<LinearForm> = forms[1..].iter().map(|f| f.sub(&forms[0])).collect();
            let e = Series::exp_linear(&end.log_terms(), &forms[0], caps);
            Ok(e.mul(&generator_series(&letters, &shifted, caps)).scale(&sign))
        }
        (false, true) => {
            let rb: Vec<SPoint> = b.iter().rev().cloned().collect();
            let rf: Vec<LinearForm> = forms.iter().rev().map(LinearForm::neg).collect();
            Ok(phi_series(SPoint::Zero, &rb, start, &rf, caps)?.scale(&sign))
        }
        (false, false) => {
            let mut out = Series::zero(caps);
            for p in 0..=d {
                let l = phi_series(start, &b[..p], SPoint::Zero, &forms[..=p], caps)?;
                let r = phi_series(SPoint::Zero, &b[p..], end, &forms[p..], caps)?;
                out.add_assign(&l.mul(&r));
            }
            Ok(out)
        }
    }
}

/// `Φ` on a generator, as terms of the sort with inverted symbols.
///
/// Accepts every generator whose successive ratios produce well-formed words, which
/// includes all polylogarithmic ones and the factors of their coproducts.
pub fn phi_generator(g: &IGenerator) -> Result<Terms> {
    let (b, runs) = g.shape();
    let forms: Vec<LinearForm> = (0..runs.len()).map(|k| LinearForm::var(runs.len(), k)).collect();
    Ok(phi_series(g.start(), &b, g.end(), &forms, &runs)?.get(&runs))
}

/// `Φ` on a polylogarithmic generator.
pub fn phi(g: &IGenerator) -> Result<Element> {
    if !is_polylogarithmic(g) {
        return Err(Error::NonPolylogarithmic(g.to_string()));
    }
    Element::from_terms(Sort::Hbar, phi_generator(g)?)
}

/// Multiplicative extension of `Φ`.
pub fn phi_terms(e: &IElement) -> Result<Terms> {
    let mut out = Terms::zero();
    for (m, c) in e.iter() {
        let mut t = Terms::one();
        for g in m.factors() {
            t = t.mul(&phi_generator(g)?);
        }
        out += &(&t * c);
    }
    Ok(out)
}

/// `(Φ ⊗ Φ)∘Δ = Δ∘Φ` on `g`.
pub fn check_phi_morphism(g: &IGenerator) -> Result<()> {
    let lhs = coproduct_terms(Sort::Hbar, &phi_generator(g)?);
    let mut rhs = TensorTerms::zero();
    for ((l, r), c) in i_coproduct(g).iter() {
        let pl = phi_terms(&IElement::basis(l.clone()))?;
        let pr = phi_terms(&IElement::basis(r.clone()))?;
        for (x, e) in pl.iter() {
            for (y, f) in pr.iter() {
                rhs.add_term((x.clone(), y.clone()), &(c * e) * f);
            }
        }
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Disagreement(format!("Φ preserves the coproduct on {}", g)))
    }
}

/// `Φ∘Γ = Φ` on `g`.
pub fn check_phi_gamma(g: &IGenerator) -> Result<()> {
    if phi_terms(&gamma(g))? == phi_generator(g)? {
        Ok(())
    } else {
        Err(Error::Disagreement(format!("Φ∘Γ = Φ on {}", g)))
    }
}

/// The points of `S` involving only `x_1, ..., x_m`.
pub fn points(m: u32) -> Vec<SPoint> {
    let mut out = vec![SPoint::Zero, SPoint::One];
    for i in 1..=m {
        for j in i..=m {
            out.push(SPoint::InvProduct(i, j));
        }
    }
    out
}

/// Every polylogarithmic generator over `x_1..x_m` with bounded weight and depth.
pub fn polylogarithmic_generators(m: u32, max_weight: u32, max_depth: usize) -> Vec<IGenerator> {
    let s = points(m);
    let mut out = Vec::new();
    for w in 1..=max_weight as usize {
        let len = w + 2;
        let mut idx = vec![0usize; len];
        loop {
            let g = IGenerator { points: idx.iter().map(|&k| s[k]).collect() };
            if g.depth() <= max_depth && is_polylogarithmic(&g) {
                out.push(g);
            }
            let mut k = 0;
            while k < len {
                idx[k] += 1;
                if idx[k] < s.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
        }
    }
    out.sort();
    out
}

impl MonoidKey for (IMonomial, IMonomial, IMonomial) {
    fn unit() -> Self {
        (IMonomial::unit(), IMonomial::unit(), IMonomial::unit())
    }
    fn combine(&self, o: &Self) -> Self {
        (self.0.combine(&o.0), self.1.combine(&o.1), self.2.combine(&o.2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_in;

    fn inv(i: u32, j: u32) -> SPoint {
        SPoint::InvProduct(i, j)
    }
    fn ig(points: &[SPoint]) -> IGenerator {
        IGenerator::new(points.to_vec()).unwrap()
    }
    fn hbar(s: &str) -> Terms {
        parse_in(s, Sort::Hbar).unwrap().into_terms()
    }

    #[test]
    fn ratios_are_windows() {
        assert_eq!(ratio(inv(1, 2), inv(2, 2)), Some(Letter::new(1, 2, false)));
        assert_eq!(ratio(inv(2, 3), SPoint::One), Some(Letter::new(2, 4, false)));
        assert_eq!(ratio(SPoint::One, inv(1, 1)), Some(Letter::new(1, 2, true)));
        assert_eq!(ratio(inv(1, 3), inv(2, 2)), None);
        assert_eq!(ratio(SPoint::One, SPoint::One), None);
        assert_eq!(ratio(SPoint::Zero, SPoint::One), None);
    }

    #[test]
    fn coproduct_small_weights() {
        let (a0, a1, a2, a3) = (inv(1, 1), inv(2, 2), inv(3, 3), inv(4, 4));
        let g = ig(&[a0, a1, a2]);
        let t = i_coproduct(&g);
        let m = SortedMulti::atom(g);
        let expected: ITensor = [((m.clone(), IMonomial::unit()), Rational::from_integer(1.into())),
            ((IMonomial::unit(), m), Rational::from_integer(1.into()))]
        .into_iter()
        .collect();
        assert_eq!(t, expected);
        assert_eq!(i_coproduct(&ig(&[a0, a1, a2, a3])).len(), 4);
    }

    #[test]
    fn coassociative_and_variation() {
        let a: Vec<SPoint> = (1..=5).map(|k| inv(k, k)).collect();
        check_i_coassociative(&ig(&a)).unwrap();
        check_i_variation(&a).unwrap();
        let b = [SPoint::Zero, inv(1, 1), SPoint::Zero, inv(1, 1), SPoint::One];
        check_i_coassociative(&ig(&b)).unwrap();
        check_i_variation(&b).unwrap();
    }

    #[test]
    fn variation_entries() {
        let a: Vec<SPoint> = (1..=6).map(|k| inv(k, k)).collect();
        let i = ISeq::new(vec![0, 1, 3, 4, 5]).unwrap();
        let j = ISeq::new(vec![0, 3, 5]).unwrap();
        let expected = integral(&[a[0], a[1], a[3]]).mul(&integral(&[a[3], a[4], a[5]]));
        assert_eq!(subseq_entry(&a, &i, &j), expected);
        assert!(subseq_entry(&a, &i, &ISeq::new(vec![0, 2, 5]).unwrap()).is_zero());
        assert_eq!(subseq_entry(&a, &i, &i), IElement::one());
        let ends = ISeq::new(vec![0, 5]).unwrap();
        assert_eq!(subseq_entry(&a, &i, &ends), i.integral(&a));
    }

    #[test]
    fn polylogarithmic_condition() {
        assert!(is_polylogarithmic(&ig(&[SPoint::Zero, inv(1, 2), inv(2, 2), SPoint::One])));
        assert!(is_polylogarithmic(&ig(&[SPoint::Zero, SPoint::Zero, SPoint::Zero, inv(2, 3)])));
        assert!(!is_polylogarithmic(&ig(&[SPoint::Zero, inv(1, 3), inv(2, 2), SPoint::One])));
        assert!(!is_polylogarithmic(&ig(&[SPoint::Zero, inv(2, 2), inv(1, 2), SPoint::One])));
        // reversal and degenerate replacement
        assert!(is_polylogarithmic(&ig(&[SPoint::One, inv(2, 2), inv(1, 2), SPoint::Zero])));
        assert!(is_polylogarithmic(&ig(&[SPoint::Zero, inv(1, 2), inv(2, 2), SPoint::Zero])));
        assert!(phi(&ig(&[SPoint::Zero, inv(1, 3), inv(2, 2), SPoint::One])).is_err());
    }

    #[test]
    fn gamma_examples() {
        let (a1, a2) = (inv(1, 2), inv(2, 2));
        let g = ig(&[SPoint::Zero, a1, a2]);
        assert_eq!(gamma(&g), integral(g.points()));
        let h = ig(&[inv(1, 1), a1, SPoint::Zero]);
        assert_eq!(gamma(&h), integral(h.points()));
        let split = integral(g.points()).mul(&integral(h.points()));
        assert_eq!(gamma_terms(&split), split);
    }

    #[test]
    fn phi_of_zero_runs() {
        for n in 1..=4u32 {
            let mut p = vec![SPoint::Zero; n as usize + 1];
            p.push(inv(1, 2));
            let got = phi(&ig(&p)).unwrap();
            let fact: u32 = (1..=n).product();
            let expected = hbar(&format!("1/{} (-log(1) - log(2))^{}", fact, n));
            assert_eq!(got.terms(), &expected);
        }
    }

    #[test]
    fn phi_of_polylogs() {
        let g = ig(&[SPoint::Zero, inv(1, 2), SPoint::Zero, inv(2, 2), SPoint::One]);
        assert_eq!(phi(&g).unwrap().terms(), &hbar("Li[2,1](1,2,3)"));
        let h = ig(&[SPoint::Zero, inv(1, 1), SPoint::One]);
        assert_eq!(phi(&h).unwrap().terms(), &hbar("-Li[1](1,2)"));
    }

    #[test]
    fn morphism_small() {
        let gens = polylogarithmic_generators(2, 3, 2);
        assert!(!gens.is_empty());
        for g in &gens {
            check_phi_morphism(g).unwrap();
            check_phi_gamma(g).unwrap();
        }
    }
}
