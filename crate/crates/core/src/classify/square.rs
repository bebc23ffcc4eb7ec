//! Writing a degree-≤2 polynomial as `λ² + μ` and as `λ² + μμ'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Poly, Scalar, Vars};
use crate::geometry::{conic_rank, ConicFactors, Chart};

use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SquareCase {
    /// `a ≠ 0` (coefficient of `z²`).
    I,
    /// `a = 0`, `c ≠ 0` (coefficient of `w²`).
    II,
    /// `a = c = 0`, `b ≠ 0`: needs the rotation `z = z' + w'`, `w = z' − w'`.
    III,
    /// `a = b = c = 0`.
    IV,
}

impl fmt::Display for SquareCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareCase::I => "i",
            SquareCase::II => "ii",
            SquareCase::III => "iii",
            SquareCase::IV => "iv",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquareDecomposition {
    pub lambda: Poly,
    pub mu: Poly,
    pub case: SquareCase,
    /// In case iii, `(λ, μ)` in the rotated coordinates `(z', w')`.
    pub rotated: Option<(Poly, Poly)>,
    /// Whether a square root outside the coefficient field was adjoined.
    pub extended: bool,
}

/// The case dictated by the quadratic coefficients of `s`.
pub fn square_case(s: &Poly) -> SquareCase {
    let (a, b, c) = (s.coeff_at(2, 0), s.coeff_at(1, 1), s.coeff_at(0, 2));
    if !a.is_zero() {
        SquareCase::I
    } else if !c.is_zero() {
        SquareCase::II
    } else if !b.is_zero() {
        SquareCase::III
    } else {
        SquareCase::IV
    }
}

fn check_degree(s: &Poly) -> Result<(), ClassifyError> {
    if s.degree() > 2 {
        return Err(ClassifyError::DegreeExceeded(s.degree()));
    }
    Ok(())
}

/// `s = λ² + μ` with `deg λ ≤ 1`, following the four coefficient patterns.
pub fn complete_square(s: &Poly) -> Result<SquareDecomposition, ClassifyError> {
    check_degree(s)?;
    let co = |i, j| s.coeff_at(i, j);
    let (a, b, c, d, e, f) = (co(2, 0), co(1, 1), co(0, 2), co(1, 0), co(0, 1), co(0, 0));
    let two = Scalar::int(2);
    let four = Scalar::int(4);
    let case = square_case(s);
    let (lambda, mu, rotated, extended) = match case {
        SquareCase::I => {
            let root = a.exact_sqrt()?;
            let r = root.root;
            let inv_2r = (&two * &r).inv().expect("nonzero");
            let lambda = Poly::linear(&d * &inv_2r, r.clone(), &b * &inv_2r);
            let four_a = &four * &a;
            let two_a = &two * &a;
            let mu = Poly::from_terms([
                (Monomial(0, 2), &c - &(&(&b * &b) / &four_a)),
                (Monomial(0, 1), &e - &(&(&b * &d) / &two_a)),
                (Monomial(0, 0), &f - &(&(&d * &d) / &four_a)),
            ]);
            (lambda, mu, None, root.adjoined.is_some())
        }
        SquareCase::II => {
            let root = c.exact_sqrt()?;
            let r = root.root;
            let inv_2r = (&two * &r).inv().expect("nonzero");
            let lambda = Poly::linear(&e * &inv_2r, &b * &inv_2r, r.clone());
            let four_c = &four * &c;
            let two_c = &two * &c;
            let mu = Poly::from_terms([
                (Monomial(2, 0), -&(&(&b * &b) / &four_c)),
                (Monomial(1, 0), &d - &(&(&b * &e) / &two_c)),
                (Monomial(0, 0), &f - &(&(&e * &e) / &four_c)),
            ]);
            (lambda, mu, None, root.adjoined.is_some())
        }
        SquareCase::III => {
            let root = b.exact_sqrt()?;
            let r = root.root;
            let de = &d + &e;
            let lambda_rot = Poly::linear(&de / &(&two * &r), r.clone(), Scalar::zero()).with_vars(Vars::ROTATED);
            let mu_rot = Poly::from_terms([
                (Monomial(0, 2), -&b),
                (Monomial(0, 1), &d - &e),
                (Monomial(0, 0), &f - &(&(&de * &de) / &(&four * &b))),
            ])
            .with_vars(Vars::ROTATED);
            // back to (z, w): z' = (z + w)/2, w' = (z − w)/2
            let half = Scalar::ratio(1, 2);
            let zp = Poly::linear(Scalar::zero(), half.clone(), half.clone());
            let wp = Poly::linear(Scalar::zero(), half.clone(), -&half);
            let lambda = lambda_rot.substitute(&[zp.clone(), wp.clone()]);
            let mu = mu_rot.substitute(&[zp, wp]);
            (lambda, mu, Some((lambda_rot, mu_rot)), root.adjoined.is_some())
        }
        SquareCase::IV => (Poly::zero(), s.clone(), None, false),
    };
    Ok(SquareDecomposition { lambda, mu, case, rotated, extended })
}

/// `s = λ² + μμ'` with all three of degree ≤ 1.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProduct {
    pub lambda: Poly,
    pub mu: Poly,
    pub mu_prime: Poly,
}

/// Factors `c u² + e u + f` with `u` a linear polynomial.
fn factor_univariate(c: &Scalar, e: &Scalar, f: &Scalar, u: &Poly) -> Result<(Poly, Poly), ClassifyError> {
    let one = Poly::one();
    if c.is_zero() {
        return Ok((&u.scale(e) + &Poly::constant(f.clone()), one));
    }
    let disc = &(e * e) - &(&Scalar::int(4) * &(c * f));
    let delta = disc.exact_sqrt()?.root;
    let inv_2c = (&Scalar::int(2) * c).inv().expect("nonzero");
    let r1 = &(&(-e) + &delta) * &inv_2c;
    let r2 = &(&(-e) - &delta) * &inv_2c;
    let m1 = (u - &Poly::constant(r1)).scale(c);
    let m2 = u - &Poly::constant(r2);
    Ok((m1, m2))
}

pub fn decompose_linear_product(s: &Poly) -> Result<LinearProduct, ClassifyError> {
    check_degree(s)?;
    if s.is_zero() {
        return Ok(LinearProduct { lambda: Poly::zero(), mu: Poly::zero(), mu_prime: Poly::zero() });
    }
    if s.degree() <= 1 {
        return Ok(LinearProduct { lambda: Poly::zero(), mu: s.clone(), mu_prime: Poly::one() });
    }
    let form = s.homogenize(2)?;
    if let ConicFactors::LinePair(l1, l2) = conic_rank(&form)? {
        let c0 = Chart::new(0);
        return Ok(LinearProduct { lambda: Poly::zero(), mu: l1.dehomogenize(c0), mu_prime: l2.dehomogenize(c0) });
    }
    // a double line is a perfect square: complete_square leaves a constant μ
    let sq = complete_square(s)?;
    let (u, c, e, f) = match sq.case {
        SquareCase::I => (Poly::w(), sq.mu.coeff_at(0, 2), sq.mu.coeff_at(0, 1), sq.mu.coeff_at(0, 0)),
        SquareCase::II => (Poly::z(), sq.mu.coeff_at(2, 0), sq.mu.coeff_at(1, 0), sq.mu.coeff_at(0, 0)),
        SquareCase::III => {
            let (_, mu_rot) = sq.rotated.as_ref().expect("rotated data in case iii");
            let half = Scalar::ratio(1, 2);
            let wp = Poly::linear(Scalar::zero(), half.clone(), -&half);
            (wp, mu_rot.coeff_at(0, 2), mu_rot.coeff_at(0, 1), mu_rot.coeff_at(0, 0))
        }
        SquareCase::IV => unreachable!("degree-2 input"),
    };
    let (mu, mu_prime) = factor_univariate(&c, &e, &f, &u)?;
    Ok(LinearProduct { lambda: sq.lambda, mu, mu_prime })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&((a, b), c)| (Monomial(a, b), Scalar::int(c))))
    }

    #[test]
    fn perfect_square() {
        let s = p(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1), ((1, 0), 2), ((0, 1), 2), ((0, 0), 1)]);
        let d = complete_square(&s).unwrap();
        assert_eq!(d.case, SquareCase::I);
        assert_eq!(d.lambda, p(&[((1, 0), 1), ((0, 1), 1), ((0, 0), 1)]));
        assert!(d.mu.is_zero());
        assert!(!d.extended);
    }

    #[test]
    fn rotation_case() {
        let s = &Poly::z() * &Poly::w();
        let d = complete_square(&s).unwrap();
        assert_eq!(d.case, SquareCase::III);
        let half = Scalar::ratio(1, 2);
        assert_eq!(d.lambda, Poly::linear(Scalar::zero(), half.clone(), half.clone()));
        let wp = Poly::linear(Scalar::zero(), half.clone(), -&half);
        assert_eq!(d.mu, -&(&wp * &wp));
        let (_, mu_rot) = d.rotated.unwrap();
        assert_eq!(mu_rot.to_string(), "-w'^2");
    }

    #[test]
    fn linear_case_and_extension() {
        let s = p(&[((1, 0), 3), ((0, 1), -1), ((0, 0), 2)]);
        let d = complete_square(&s).unwrap();
        assert_eq!((d.case, d.lambda.is_zero(), d.mu == s), (SquareCase::IV, true, true));
        let s = p(&[((2, 0), 2), ((0, 0), 1)]);
        let d = complete_square(&s).unwrap();
        assert!(d.extended);
        assert_eq!(&(&d.lambda * &d.lambda) + &d.mu, s);
    }

    #[test]
    fn linear_products() {
        let zw = &Poly::z() * &Poly::w();
        let r = decompose_linear_product(&zw).unwrap();
        assert_eq!((r.lambda, r.mu, r.mu_prime), (Poly::zero(), Poly::z(), Poly::w()));
        for s in [
            p(&[((2, 0), 1), ((0, 2), 1)]),
            p(&[((2, 0), 1), ((1, 1), 1), ((0, 0), 1)]),
            p(&[((1, 1), 3), ((1, 0), 1), ((0, 0), 5)]),
            p(&[((0, 2), 2), ((1, 1), 1), ((0, 0), -7)]),
            p(&[((2, 0), 1), ((0, 2), 1), ((0, 0), 1)]),
        ] {
            let r = decompose_linear_product(&s).unwrap();
            assert_eq!(&(&r.lambda * &r.lambda) + &(&r.mu * &r.mu_prime), s, "{s}");
            assert!(r.lambda.degree() <= 1 && r.mu.degree() <= 1 && r.mu_prime.degree() <= 1);
        }
        // z² + zw + 1: λ = z + w/2, remainder 1 − w²/4
        let s = p(&[((2, 0), 1), ((1, 1), 1), ((0, 0), 1)]);
        let r = decompose_linear_product(&s).unwrap();
        assert_eq!(r.lambda, Poly::linear(Scalar::zero(), Scalar::one(), Scalar::ratio(1, 2)));
        let rem = &r.mu * &r.mu_prime;
        assert_eq!(rem, Poly::from_terms([(Monomial(0, 0), Scalar::one()), (Monomial(0, 2), Scalar::ratio(-1, 4))]));
    }
}
