//! Rational functions `num / den` in the chart coordinates.
//!
//! Denominators arising from chart changes are monomials; those are reduced
//! eagerly (common monomial factors cancelled, coefficient made 1), which
//! keeps transition products small. Other denominators are only reduced when
//! they divide the numerator exactly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{Monomial, Poly};
use super::{Ring, Scalar};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

fn as_monomial(p: &Poly) -> Option<(Monomial, Scalar)> {
    if p.len() == 1 {
        p.leading().map(|(m, c)| (m, c.clone()))
    } else {
        None
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Scalar) -> RatFunc {
        RatFunc::poly(Poly::constant(c))
    }

    pub fn zero() -> RatFunc {
        RatFunc::poly(Poly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator divides out.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_constant() {
            let c = self.den.coeff(Monomial::ONE);
            return Some(self.num.scale(&c.inv()?));
        }
        self.num.div_exact(&self.den)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if let Some((dm, dc)) = as_monomial(&self.den) {
            // cancel the largest monomial dividing both
            let min_a = self.num.terms().map(|(m, _)| m.0).min().unwrap_or(0).min(dm.0);
            let min_b = self.num.terms().map(|(m, _)| m.1).min().unwrap_or(0).min(dm.1);
            let inv = dc.inv().expect("nonzero denominator");
            let mut num = Poly::zero().with_vars(self.num.vars());
            for (m, c) in self.num.terms() {
                num.add_term(Monomial(m.0 - min_a, m.1 - min_b), c * &inv);
            }
            self.num = num;
            self.den = Poly::monomial(Monomial(dm.0 - min_a, dm.1 - min_b), Scalar::one());
        } else if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = Poly::one();
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> RatFunc {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Value at a point, or `None` if the denominator vanishes there.
    pub fn eval(&self, z: &Scalar, w: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(z, w);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(z, w) / &d)
    }

    pub fn derivative(&self, var: usize) -> RatFunc {
        let n1 = self.num.derivative(var);
        let d1 = self.den.derivative(var);
        RatFunc::new(&(&n1 * &self.den) - &(&self.num * &d1), &self.den * &self.den)
    }

    /// `p(r₀, r₁)` for a polynomial `p` and rational images of its variables.
    pub fn compose(p: &Poly, images: &[RatFunc; 2]) -> RatFunc {
        let mut out = RatFunc::zero();
        let mut zp = vec![RatFunc::one()];
        let mut wp = vec![RatFunc::one()];
        for (m, c) in p.terms() {
            while zp.len() <= m.0 as usize {
                let next = zp.last().unwrap() * &images[0];
                zp.push(next);
            }
            while wp.len() <= m.1 as usize {
                let next = wp.last().unwrap() * &images[1];
                wp.push(next);
            }
            let t = &zp[m.0 as usize] * &wp[m.1 as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    /// `self(r₀, r₁)`.
    pub fn substitute(&self, images: &[RatFunc; 2]) -> RatFunc {
        &RatFunc::compose(&self.num, images) / &RatFunc::compose(&self.den, images)
    }

    pub fn scale(&self, c: &Scalar) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::poly(p)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        if let (Some((ma, _)), Some((mb, _))) = (as_monomial(&self.den), as_monomial(&o.den)) {
            // reduced monomial denominators have coefficient 1: use their lcm
            let l = Monomial(ma.0.max(mb.0), ma.1.max(mb.1));
            let fa = Poly::monomial(Monomial(l.0 - ma.0, l.1 - ma.1), Scalar::one());
            let fb = Poly::monomial(Monomial(l.0 - mb.0, l.1 - mb.1), Scalar::one());
            let num = &(&self.num * &fa) + &(&o.num * &fb);
            return RatFunc::new(num, Poly::monomial(l, Scalar::one()));
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero rational function")
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(Monomial::ONE).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RatFunc {
        RatFunc::poly(Poly::z())
    }
    fn w() -> RatFunc {
        RatFunc::poly(Poly::w())
    }

    #[test]
    fn monomial_denominators_reduce() {
        let r = &(&z() / &w()) * &w();
        assert_eq!(r.as_poly(), Some(Poly::z()));
        let r = &z() / &(&z() * &w());
        assert_eq!(r.to_string(), "(1)/(w)");
        let s = &(&z() / &w()) + &(&RatFunc::one() / &(&w() * &w()));
        assert_eq!(s, RatFunc::new(&(&Poly::z() * &Poly::w()) + &Poly::one(), Poly::w().pow(2)));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dw (z/w) = -z/w²
        let q = &z() / &w();
        let d = q.derivative(1);
        assert_eq!(d, RatFunc::new(-Poly::z(), Poly::w().pow(2)));
        assert_eq!(q.derivative(0), w().inv().unwrap());
    }

    #[test]
    fn substitution_and_eval() {
        // (z/w)(1/z, w/z) = 1/w
        let q = &z() / &w();
        let images = [z().inv().unwrap(), &w() / &z()];
        assert_eq!(q.substitute(&images), w().inv().unwrap());
        assert_eq!(q.eval(&Scalar::int(3), &Scalar::int(2)), Some(Scalar::ratio(3, 2)));
        assert_eq!(q.eval(&Scalar::int(3), &Scalar::zero()), None);
    }
}
