//! Homogeneous forms in the projective coordinates `x₀, x₁, x₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Mat;
use super::poly::{mono_text, write_terms, Monomial, Poly};
use super::Scalar;
use crate::geometry::Chart;

/// A degree-`d` form; every stored exponent triple sums to `d`.
#[derive(Clone, Debug)]
pub struct Form {
    degree: u32,
    terms: BTreeMap<[u32; 3], Scalar>,
}

impl Form {
    pub fn zero(degree: u32) -> Form {
        Form { degree, terms: BTreeMap::new() }
    }

    /// `c₀x₀ + c₁x₁ + c₂x₂`.
    pub fn linear(c: [Scalar; 3]) -> Form {
        let mut f = Form::zero(1);
        for (k, ck) in c.into_iter().enumerate() {
            let mut e = [0; 3];
            e[k] = 1;
            f.add_term(e, ck);
        }
        f
    }

    /// The quadratic form `xᵀ S x` of a symmetric matrix.
    pub fn from_symmetric(s: &Mat<Scalar>) -> Form {
        let mut f = Form::zero(2);
        for a in 0..3 {
            for b in 0..3 {
                let mut e = [0; 3];
                e[a] += 1;
                e[b] += 1;
                f.add_term(e, s.get(a, b).clone());
            }
        }
        f
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; 3], Scalar)>>(degree: u32, terms: I) -> Form {
        let mut f = Form::zero(degree);
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    pub fn add_term(&mut self, e: [u32; 3], c: Scalar) {
        assert_eq!(e.iter().sum::<u32>(), self.degree, "exponent {e:?} not of degree {}", self.degree);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in the fixed scan order `x₀² , x₀x₁, …, x₂²` (descending lex).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.terms.iter().rev()
    }

    /// All exponent triples of this degree in scan order.
    pub fn monomials(degree: u32) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for a in (0..=degree).rev() {
            for b in (0..=degree - a).rev() {
                out.push([a, b, degree - a - b]);
            }
        }
        out
    }

    /// First nonzero coefficient in scan order.
    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms().next().map(|(_, c)| c)
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.degree);
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn eval(&self, x: &[Scalar; 3]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let m = &(&x[0].pow(e[0]) * &x[1].pow(e[1])) * &x[2].pow(e[2]);
            acc = &acc + &(c * &m);
        }
        acc
    }

    /// Restriction to a chart: the chart's unit coordinate is set to 1 and
    /// the other two become `(z, w)` in order.
    pub fn dehomogenize(&self, chart: Chart) -> Poly {
        let unit = chart.unit_coord();
        let (a, b) = chart.affine_coords();
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            debug_assert!(e[unit] + e[a] + e[b] == self.degree);
            p.add_term(Monomial(e[a], e[b]), c.clone());
        }
        p
    }

    /// Symmetric matrix `S` with `f = xᵀ S x` for a quadratic form.
    pub fn symmetric_matrix(&self) -> Mat<Scalar> {
        assert_eq!(self.degree, 2, "symmetric matrix of a non-quadratic form");
        let half = Scalar::ratio(1, 2);
        let mut s = Mat::zeros(3, 3);
        for a in 0..3 {
            for b in 0..3 {
                let mut e = [0; 3];
                e[a] += 1;
                e[b] += 1;
                let c = self.coeff(e);
                let v = if a == b { c } else { &c * &half };
                s.set(a, b, v);
            }
        }
        s
    }

    /// Linear coefficients `[c₀, c₁, c₂]` of a degree-1 form.
    pub fn linear_coeffs(&self) -> [Scalar; 3] {
        assert_eq!(self.degree, 1);
        [self.coeff([1, 0, 0]), self.coeff([0, 1, 0]), self.coeff([0, 0, 1])]
    }

    pub fn level(&self) -> u8 {
        self.terms.values().map(|c| c.level()).max().unwrap_or(0)
    }
}

impl PartialEq for Form {
    fn eq(&self, o: &Form) -> bool {
        if self.is_zero() && o.is_zero() {
            return true;
        }
        self.degree == o.degree
            && self.terms.len() == o.terms.len()
            && self.terms.iter().zip(o.terms.iter()).all(|((ea, ca), (eb, cb))| ea == eb && ca == cb)
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        if self.is_zero() {
            return o.clone();
        }
        let mut out = self.clone();
        if o.is_zero() {
            return out;
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&Scalar::int(-1))
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        self + &(-o)
    }
}

impl Mul for &Form {
    type Output = Form;
    fn mul(self, o: &Form) -> Form {
        let mut out = Form::zero(self.degree + o.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x0", "x1", "x2"];
        write_terms(f, self.terms().map(|(e, c)| (mono_text(&names, e), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_zero_restriction() {
        let zw = &Poly::z() * &Poly::w();
        let f = zw.homogenize(2).unwrap();
        assert_eq!(f.to_string(), "x0*x1");
        assert_eq!(f.dehomogenize(Chart::new(0)), zw);
        let x2sq = Form::from_terms(2, [([0, 0, 2], Scalar::one())]);
        assert_eq!(x2sq.dehomogenize(Chart::new(0)), Poly::one());
    }

    #[test]
    fn other_charts() {
        // x0·x1 on [z:1:w] is z, on [1:z:w] is z
        let f = Form::from_terms(2, [([1, 1, 0], Scalar::one())]);
        assert_eq!(f.dehomogenize(Chart::new(1)), Poly::z());
        assert_eq!(f.dehomogenize(Chart::new(2)), Poly::z());
        let g = Form::from_terms(2, [([0, 0, 2], Scalar::one())]);
        assert_eq!(g.dehomogenize(Chart::new(1)), Poly::w().pow(2));
    }

    #[test]
    fn symmetric_matrix_round_trip() {
        let f = Form::from_terms(
            2,
            [([2, 0, 0], Scalar::int(3)), ([1, 1, 0], Scalar::int(4)), ([0, 1, 1], Scalar::i())],
        );
        assert_eq!(Form::from_symmetric(&f.symmetric_matrix()), f);
        assert_eq!(Form::monomials(2).len(), 6);
        assert_eq!(Form::monomials(2)[0], [2, 0, 0]);
    }
}
