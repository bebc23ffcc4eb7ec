//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

pub type Rational = num_rational::BigRational;

/// An element of `ℚ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Square root of a non-negative rational if it is a perfect square.
pub(crate) fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::new(rat(n), Rational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Gaussian::new(Rational::new(BigInt::from(n), BigInt::from(d)), Rational::zero())
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Gaussian::new(
            Rational::new(BigInt::from(re.0), BigInt::from(re.1)),
            Rational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn zero() -> Self {
        Gaussian::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Gaussian::from_int(1)
    }

    pub fn i() -> Self {
        Gaussian::new(Rational::zero(), rat(1))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Lexicographic positivity on `(re, im)`.
    pub fn sign(&self) -> Ordering {
        match self.re.cmp(&Rational::zero()) {
            Ordering::Equal => self.im.cmp(&Rational::zero()),
            o => o,
        }
    }

    /// Principal square root if `self` is a perfect square in `ℚ(i)`.
    ///
    /// With `n = |z|`, a root `p + qi` satisfies `p² = (re + n)/2` and
    /// `q² = (n - re)/2`; the sign of `q` follows the sign of `im`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Gaussian::zero());
        }
        let n = rational_sqrt(&self.norm())?;
        let two = rat(2);
        let p = rational_sqrt(&((&self.re + &n) / &two))?;
        let mut q = rational_sqrt(&((&n - &self.re) / &two))?;
        if self.im.is_negative() {
            q = -q;
        }
        let root = Gaussian::new(p, q);
        debug_assert_eq!(&(&root * &root), self);
        Some(root.principal())
    }

    /// Returns `self` or `-self`, whichever is lexicographically positive.
    pub fn principal(self) -> Self {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl From<i64> for Gaussian {
    fn from(n: i64) -> Self {
        Gaussian::from_int(n)
    }
}

impl From<Rational> for Gaussian {
    fn from(r: Rational) -> Self {
        Gaussian::new(r, Rational::zero())
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div for &Gaussian {
    type Output = Gaussian;
    fn div(self, o: &Gaussian) -> Gaussian {
        let inv = o.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        -self.clone()
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gaussian {
    /// Wire form: `a/b`, `c/d i`, or `a/b+c/d i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_abs = fmt_rational(&self.im.abs());
        let im_part = if im_abs == "1" { "i".to_string() } else { format!("{im_abs} i") };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_part}")
            } else {
                write!(f, "{im_part}")
            }
        } else {
            let op = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", fmt_rational(&self.re), op, im_part)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// Parses the imaginary part written as `[coef][ ]i` (coef may be empty or a sign).
fn parse_imag(s: &str) -> Result<Rational, AlgebraError> {
    let body = s.trim().strip_suffix('i').ok_or_else(|| {
        AlgebraError::Parse(format!("expected imaginary unit in `{s}`"))
    })?;
    let body = body.trim().trim_end_matches('*').trim();
    let (negative, rest) = match body.strip_prefix('-') {
        Some(r) => (true, r.trim()),
        None => (false, body.strip_prefix('+').unwrap_or(body).trim()),
    };
    let v = if rest.is_empty() { rat(1) } else { parse_rational(rest)? };
    Ok(if negative { -v } else { v })
}

impl FromStr for Gaussian {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(AlgebraError::Parse("empty scalar".into()));
        }
        if !t.ends_with('i') {
            return Ok(Gaussian::from(parse_rational(t)?));
        }
        // split at the last sign that is not the leading one
        let bytes = t.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/');
        match split {
            Some(k) if !t[..k].trim().is_empty() => {
                let re = parse_rational(&t[..k])?;
                let im = parse_imag(&t[k..])?;
                Ok(Gaussian::new(re, im))
            }
            _ => Ok(Gaussian::new(Rational::zero(), parse_imag(t)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Gaussian {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["0", "3", "-1/2", "i", "-i", "2 i", "1/2+3/4 i", "-1-i", "5/3-2 i"] {
            assert_eq!(g(s).to_string(), s, "round trip of {s}");
        }
        assert_eq!(g("4/2"), Gaussian::from_int(2));
        assert_eq!(g(" 1/2 + 1/3 i "), Gaussian::from_parts((1, 2), (1, 3)));
        assert!("1/0".parse::<Gaussian>().is_err());
        assert!("abc".parse::<Gaussian>().is_err());
        assert!("".parse::<Gaussian>().is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(g("4").sqrt(), Some(g("2")));
        assert_eq!(g("2 i").sqrt(), Some(g("1+i")));
        assert_eq!(g("-4").sqrt(), Some(g("2 i")));
        assert_eq!(g("-2 i").sqrt(), Some(g("1-i")));
        assert_eq!(g("9/4").sqrt(), Some(g("3/2")));
        assert_eq!(g("2").sqrt(), None);
        assert_eq!(g("1+i").sqrt(), None);
        assert_eq!(g("-3+4 i").sqrt(), Some(g("1+2 i")));
    }

    #[test]
    fn field_ops() {
        let a = g("1/2+3 i");
        let b = g("-2+1/5 i");
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&a * &a.inv().unwrap(), Gaussian::one());
        assert_eq!(a.conj().conj(), a);
    }
}
