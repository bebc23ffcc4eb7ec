//! Sparse polynomials in two affine chart coordinates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::form::Form;
use super::{AlgebraError, Ring, Scalar};

/// Exponent pair `z^a w^b`, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub u32, pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0, 0);

    pub fn degree(self) -> u32 {
        self.0 + self.1
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 <= other.0 && self.1 <= other.1
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.0.cmp(&o.0))
            .then(self.1.cmp(&o.1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Names of the two variables; only used for display and consistency checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Vars(pub &'static str, pub &'static str);

impl Vars {
    pub const CHART: Vars = Vars("z", "w");
    pub const ROTATED: Vars = Vars("z'", "w'");
}

impl Default for Vars {
    fn default() -> Self {
        Vars::CHART
    }
}

/// Polynomial `Σ c·z^a·w^b` with no zero coefficients stored.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn one() -> Poly {
        Poly::constant(Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn z() -> Poly {
        Poly::monomial(Monomial(1, 0), Scalar::one())
    }

    pub fn w() -> Poly {
        Poly::monomial(Monomial(0, 1), Scalar::one())
    }

    /// `c0 + cz·z + cw·w`.
    pub fn linear(c0: Scalar, cz: Scalar, cw: Scalar) -> Poly {
        Poly::from_terms([(Monomial::ONE, c0), (Monomial(1, 0), cz), (Monomial(0, 1), cw)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn with_vars(mut self, vars: Vars) -> Poly {
        self.vars = vars;
        self
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn coeff_at(&self, a: u32, b: u32) -> Scalar {
        self.coeff(Monomial(a, b))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// Maximal total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Common variable names of two operands; constants adopt the other's names.
    fn vars_with(&self, o: &Poly) -> Vars {
        if self.is_constant() {
            o.vars
        } else {
            debug_assert!(
                o.is_constant() || o.vars == self.vars,
                "mixing polynomials in {:?} and {:?}",
                self.vars,
                o.vars
            );
            self.vars
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero().with_vars(self.vars);
        }
        let mut out = Poly::zero().with_vars(self.vars);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one().with_vars(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, z: &Scalar, w: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc = &acc + &(c * &(&z.pow(m.0) * &w.pow(m.1)));
        }
        acc
    }

    /// Composition `p(σ(z), σ(w))` with the images of both variables given.
    pub fn substitute(&self, images: &[Poly; 2]) -> Poly {
        let mut out = Poly::zero().with_vars(images[0].vars_with(&images[1]));
        let mut zp: Vec<Poly> = vec![Poly::one()];
        let mut wp: Vec<Poly> = vec![Poly::one()];
        for (m, c) in &self.terms {
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

    /// Partial derivative in variable 0 (`z`) or 1 (`w`).
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero().with_vars(self.vars);
        for (m, c) in &self.terms {
            let (e, dm) = match var {
                0 => (m.0, Monomial(m.0.saturating_sub(1), m.1)),
                _ => (m.1, Monomial(m.0, m.1.saturating_sub(1))),
            };
            if e > 0 {
                out.add_term(dm, c * &Scalar::int(e as i64));
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.inv()?;
        let mut q = Poly::zero().with_vars(self.vars_with(d));
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let t = Poly::monomial(Monomial(rm.0 - dm.0, rm.1 - dm.1), rc * &dc_inv);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Square root `r` with `r² = self`, found term by term from the leading
    /// monomial down. One extension level may be adjoined for the leading
    /// coefficient. `Ok(None)` means `self` is not a square.
    pub fn sqrt(&self) -> Result<Option<Poly>, AlgebraError> {
        let Some((lm, lc)) = self.leading() else {
            return Ok(Some(Poly::zero().with_vars(self.vars)));
        };
        if lm.0 % 2 != 0 || lm.1 % 2 != 0 {
            return Ok(None);
        }
        let root_lm = Monomial(lm.0 / 2, lm.1 / 2);
        let root_lc = lc.exact_sqrt()?.root;
        let two_lc_inv = (&Scalar::int(2) * &root_lc).inv().expect("nonzero");
        let mut root = Poly::monomial(root_lm, root_lc).with_vars(self.vars);
        // every new term is strictly below root_lm, and there are finitely many such monomials
        let budget = (root_lm.degree() + 2) * (root_lm.degree() + 3);
        for _ in 0..budget {
            let rem = self - &(&root * &root);
            let Some((rm, rc)) = rem.leading() else {
                return Ok(Some(root));
            };
            if !root_lm.divides(rm) {
                return Ok(None);
            }
            let tm = Monomial(rm.0 - root_lm.0, rm.1 - root_lm.1);
            if tm >= root_lm {
                return Ok(None);
            }
            root.add_term(tm, rc * &two_lc_inv);
        }
        Ok(None)
    }

    /// `x₂^d · p(x₀/x₂, x₁/x₂)`: the degree-`d` form whose chart-0 restriction is `p`.
    pub fn homogenize(&self, target_degree: u32) -> Result<Form, AlgebraError> {
        let deg = self.degree();
        if deg > target_degree {
            return Err(AlgebraError::DegreeExceeded { actual: deg, target: target_degree });
        }
        let mut f = Form::zero(target_degree);
        for (m, c) in &self.terms {
            f.add_term([m.0, m.1, target_degree - m.degree()], c.clone());
        }
        Ok(f)
    }

    /// Highest extension level among the coefficients.
    pub fn level(&self) -> u8 {
        self.terms.values().map(|c| c.level()).max().unwrap_or(0)
    }
}

impl PartialEq for Poly {
    fn eq(&self, o: &Poly) -> bool {
        if self.terms.len() != o.terms.len() {
            return false;
        }
        if !self.is_constant() && !o.is_constant() && self.vars != o.vars {
            return false;
        }
        self.terms
            .iter()
            .zip(o.terms.iter())
            .all(|((ma, ca), (mb, cb))| ma == mb && ca == cb)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone().with_vars(self.vars_with(o));
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone().with_vars(self.vars_with(o));
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero().with_vars(self.vars_with(o));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(Monomial(ma.0 + mb.0, ma.1 + mb.1), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned_poly {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { (&self).$m(&o) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly { (&self).$m(o) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { self.$m(&o) }
        }
    )*};
}
forward_owned_poly!(Add::add, Sub::sub, Mul::mul);

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
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

/// Writes `coef·mono` terms joined with signs, highest monomial first.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Scalar)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let (neg, body) = match c.as_gaussian() {
            Some(g) if g.is_real() => {
                let neg = c.sign() == Ordering::Less;
                let abs = if neg { -c } else { c.clone() };
                (neg, abs.to_string())
            }
            _ => (false, format!("({c})")),
        };
        let text = match (mono.is_empty(), body.as_str()) {
            (true, _) => body,
            (false, "1") => mono,
            (false, _) => format!("{body}*{mono}"),
        };
        match (first, neg) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => write!(f, "{text}")?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn mono_text(names: &[&str], exps: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, e)| **e > 0)
        .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [self.vars.0, self.vars.1];
        write_terms(
            f,
            self.terms.iter().rev().map(|(m, c)| (mono_text(&names, &[m.0, m.1]), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![Monomial(0, 2), Monomial(1, 0), Monomial(2, 0), Monomial(0, 0), Monomial(1, 1)];
        ms.sort();
        assert_eq!(
            ms,
            vec![Monomial(0, 0), Monomial(1, 0), Monomial(0, 2), Monomial(1, 1), Monomial(2, 0)]
        );
    }

    #[test]
    fn rotation_substitution() {
        // zw with z → z'+w', w → z'-w' gives z'² - w'²
        let zw = &Poly::z() * &Poly::w();
        let zr = Poly::z().with_vars(Vars::ROTATED);
        let wr = Poly::w().with_vars(Vars::ROTATED);
        let out = zw.substitute(&[&zr + &wr, &zr - &wr]);
        let expected = &(&zr * &zr) - &(&wr * &wr);
        assert_eq!(out, expected);
        assert_eq!(out.vars(), Vars::ROTATED);
    }

    #[test]
    fn identity_and_shift_substitution() {
        let p = Poly::from_terms([(Monomial(2, 1), s(3)), (Monomial(0, 1), s(-1)), (Monomial::ONE, s(5))]);
        assert_eq!(p.substitute(&[Poly::z(), Poly::w()]), p);
        let z2 = Poly::z().pow(2);
        let shifted = z2.substitute(&[&Poly::z() + &Poly::one(), Poly::w()]);
        assert_eq!(shifted, Poly::from_terms([(Monomial(2, 0), s(1)), (Monomial(1, 0), s(2)), (Monomial::ONE, s(1))]));
    }

    #[test]
    fn exact_division_and_sqrt() {
        let a = Poly::linear(s(1), s(2), s(-3));
        let b = Poly::linear(s(-4), s(0), s(1));
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&(&a + &Poly::one())), None);
        let sq = &a * &a;
        let r = sq.sqrt().unwrap().unwrap();
        assert!(r == a || r == -&a);
        assert_eq!(ab.sqrt().unwrap(), None);
        // 2z² needs √2
        let two_z2 = Poly::monomial(Monomial(2, 0), s(2));
        let r = two_z2.sqrt().unwrap().unwrap();
        assert_eq!(&r * &r, two_z2);
        assert_eq!(Poly::z().sqrt().unwrap(), None);
    }

    #[test]
    fn homogenize_rejects_high_degree() {
        let zw = &Poly::z() * &Poly::w();
        assert!(matches!(zw.homogenize(1), Err(AlgebraError::DegreeExceeded { .. })));
        let f = zw.homogenize(2).unwrap();
        assert_eq!(f.coeff([1, 1, 0]), s(1));
    }

    #[test]
    fn display() {
        let p = Poly::from_terms([(Monomial(2, 0), s(2)), (Monomial(1, 1), Scalar::i()), (Monomial::ONE, s(-3))]);
        assert_eq!(p.to_string(), "2*z^2 + (i)*z*w - 3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((-Poly::z()).to_string(), "-z");
    }
}
