//! Rank and line factors of plane conics.

use super::GeometryError;
use crate::algebra::{Form, Scalar};

/// A conic classified by the rank of its symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum ConicFactors {
    /// `q = ℓ²`.
    DoubleLine(Form),
    /// `q = ℓ₁ℓ₂` with distinct lines.
    LinePair(Form, Form),
    /// Nonsingular, hence irreducible.
    Smooth,
}

impl ConicFactors {
    pub fn rank(&self) -> usize {
        match self {
            ConicFactors::DoubleLine(_) => 1,
            ConicFactors::LinePair(..) => 2,
            ConicFactors::Smooth => 3,
        }
    }
}

fn sqrt(c: &Scalar) -> Result<Scalar, GeometryError> {
    Ok(c.exact_sqrt()?.root)
}

/// Square root of a binary quadratic form `p x² + r xy + s y²` known to be a square.
fn binary_sqrt(p: &Scalar, r: &Scalar, s: &Scalar) -> Result<(Scalar, Scalar), GeometryError> {
    let half = Scalar::ratio(1, 2);
    if !p.is_zero() {
        let rp = sqrt(p)?;
        Ok((rp.clone(), &(&half * r) / &rp))
    } else if !s.is_zero() {
        let rs = sqrt(s)?;
        Ok((&(&half * r) / &rs, rs))
    } else {
        Ok((Scalar::zero(), Scalar::zero()))
    }
}

pub fn conic_rank(q: &Form) -> Result<ConicFactors, GeometryError> {
    if q.degree() != 2 {
        return Err(GeometryError::NotAConic(q.degree()));
    }
    if q.is_zero() {
        return Err(GeometryError::ZeroSection);
    }
    let s = q.symmetric_matrix();
    let rank = s.rank();
    let out = match rank {
        3 => return Ok(ConicFactors::Smooth),
        1 => {
            let a = (0..3).find(|&a| !s.get(a, a).is_zero()).expect("rank-1 symmetric matrix has a nonzero diagonal");
            let row = [0, 1, 2].map(|b| s.get(a, b).clone());
            let k = sqrt(&s.get(a, a).inv().expect("nonzero"))?;
            let l = Form::linear(row).scale(&k);
            ConicFactors::DoubleLine(l)
        }
        _ => match (0..3).find(|&a| !s.get(a, a).is_zero()) {
            Some(a) => {
                // q = A x_a² + L x_a + Q with L, Q in the other two coordinates
                let others: Vec<usize> = (0..3).filter(|&b| b != a).collect();
                let (x, y) = (others[0], others[1]);
                let big_a = s.get(a, a).clone();
                let two = Scalar::int(2);
                let lx = &two * s.get(a, x);
                let ly = &two * s.get(a, y);
                // discriminant L² − 4AQ as p x² + r xy + t y²
                let four_a = &Scalar::int(4) * &big_a;
                let p = &(&lx * &lx) - &(&four_a * s.get(x, x));
                let r = &(&two * &(&lx * &ly)) - &(&four_a * &(&two * s.get(x, y)));
                let t = &(&ly * &ly) - &(&four_a * s.get(y, y));
                let (dx, dy) = binary_sqrt(&p, &r, &t)?;
                let half = Scalar::ratio(1, 2);
                let inv_2a = (&two * &big_a).inv().expect("nonzero");
                let mut l1 = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
                let mut l2 = l1.clone();
                l1[a] = big_a.clone();
                l1[x] = &half * &(&lx - &dx);
                l1[y] = &half * &(&ly - &dy);
                l2[a] = Scalar::one();
                l2[x] = &inv_2a * &(&lx + &dx);
                l2[y] = &inv_2a * &(&ly + &dy);
                ConicFactors::LinePair(Form::linear(l1), Form::linear(l2))
            }
            None => {
                // q = 2(s01 x0x1 + s02 x0x2 + s12 x1x2) with one of them zero
                let two = Scalar::int(2);
                let pick = |i: usize, j: usize| &two * s.get(i, j);
                let z = Scalar::zero;
                let (l1, l2) = if s.get(1, 2).is_zero() {
                    ([Scalar::one(), z(), z()], [z(), pick(0, 1), pick(0, 2)])
                } else if s.get(0, 2).is_zero() {
                    ([z(), Scalar::one(), z()], [pick(0, 1), z(), pick(1, 2)])
                } else {
                    ([z(), z(), Scalar::one()], [pick(0, 2), pick(1, 2), z()])
                };
                ConicFactors::LinePair(Form::linear(l1), Form::linear(l2))
            }
        },
    };
    let product = match &out {
        ConicFactors::DoubleLine(l) => l * l,
        ConicFactors::LinePair(a, b) => a * b,
        ConicFactors::Smooth => unreachable!(),
    };
    debug_assert!(product == *q, "conic factorization {product} != {q}");
    if product != *q {
        return Err(GeometryError::FactorizationFailed);
    }
    Ok(out)
}
