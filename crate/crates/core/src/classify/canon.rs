//! Canonical representatives for the quotients that parametrize determinants.
//!
//! * `(q, C) ~ (α²q, α⁻¹C)`: scale so the first nonzero coordinate of `C` is 1.
//! * `A ~ −A` (and `C ~ −C`): flip so the first nonzero entry is positive.
//! * `(λ, ρ, C)`: make `ρ` monic in the monomial order, fold `λ` into `C̃ = √λ·C`,
//!   then apply the sign rule.

use crate::algebra::Scalar;
use crate::geometry::{needs_sign_flip, LineSection, TangentSection, Tm1Section};

use super::ClassifyError;

/// Sections identified up to an overall sign.
pub trait PlusMinus: Sized {
    fn sign_entries(&self) -> Vec<Scalar>;
    fn negated(&self) -> Self;
}

impl PlusMinus for TangentSection {
    fn sign_entries(&self) -> Vec<Scalar> {
        self.entries()
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl PlusMinus for Tm1Section {
    fn sign_entries(&self) -> Vec<Scalar> {
        self.coords().to_vec()
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

pub fn canonicalize_pm<S: PlusMinus + Clone>(s: &S) -> S {
    if needs_sign_flip(&s.sign_entries()) {
        s.negated()
    } else {
        s.clone()
    }
}

/// Whether `a = ±b`.
pub fn equal_pm<S: PlusMinus + PartialEq>(a: &S, b: &S) -> bool {
    a == b || *a == b.negated()
}

pub fn canonicalize_qc(q: &LineSection, c: &Tm1Section) -> Result<(LineSection, Tm1Section), ClassifyError> {
    let alpha = c.coords().iter().find(|x| !x.is_zero()).ok_or(ClassifyError::ZeroInput)?;
    let inv = alpha.inv().expect("nonzero");
    Ok((q.scale(&(alpha * alpha)), c.scale(&inv)))
}

pub fn canonicalize_rho(
    lambda: &Scalar,
    rho: &LineSection,
    c: &Tm1Section,
) -> Result<(LineSection, Tm1Section), ClassifyError> {
    let lead = rho.form().leading_coeff().ok_or(ClassifyError::ZeroInput)?.clone();
    if lambda.is_zero() || c.is_zero() {
        return Err(ClassifyError::ZeroInput);
    }
    let rho = rho.scale(&lead.inv().expect("nonzero"));
    let root = (lambda * &lead).exact_sqrt()?.root;
    Ok((rho, canonicalize_pm(&c.scale(&root))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Form;

    fn line(coeffs: [i64; 3]) -> LineSection {
        LineSection::new(Form::linear(coeffs.map(Scalar::int)))
    }

    #[test]
    fn qc_orbit_collapses() {
        let q = LineSection::new(&line([1, 2, 0]).form().clone() * line([0, 1, 1]).form());
        let c = Tm1Section::from_ints([0, 3, -1]);
        let base = canonicalize_qc(&q, &c).unwrap();
        assert_eq!(base.1, Tm1Section::new([Scalar::zero(), Scalar::one(), Scalar::ratio(-1, 3)]));
        for alpha in [Scalar::int(2), Scalar::int(-1), Scalar::ratio(1, 3), Scalar::i()] {
            let inv = alpha.inv().unwrap();
            let other = canonicalize_qc(&q.scale(&(&alpha * &alpha)), &c.scale(&inv)).unwrap();
            assert_eq!(other, base);
        }
        assert_eq!(canonicalize_qc(&base.0, &base.1).unwrap(), base);
        assert_eq!(canonicalize_qc(&q, &Tm1Section::zero()), Err(ClassifyError::ZeroInput));
    }

    #[test]
    fn sign_rule() {
        let a = TangentSection::from_ints([[0, -1, 2], [0, 0, 0], [1, 0, 0]]);
        let ca = canonicalize_pm(&a);
        assert_eq!(ca, a.neg());
        assert_eq!(canonicalize_pm(&a.neg()), ca);
        assert!(equal_pm(&a, &ca));
    }

    #[test]
    fn rho_absorbs_scalars() {
        let rho = LineSection::new(Form::from_terms(
            2,
            [([2, 0, 0], Scalar::int(2)), ([0, 2, 0], Scalar::int(2)), ([0, 0, 2], Scalar::int(2))],
        ));
        let c = Tm1Section::from_ints([1, 0, 1]);
        let (r, ct) = canonicalize_rho(&Scalar::int(2), &rho, &c).unwrap();
        assert_eq!(r.form().leading_coeff(), Some(&Scalar::one()));
        assert_eq!(ct, Tm1Section::from_ints([2, 0, 2]));
        let (r2, ct2) = canonicalize_rho(&Scalar::ratio(1, 2), &rho, &c.scale(&Scalar::int(-2))).unwrap();
        assert_eq!((r2, ct2), (r, ct));
    }
}
