//! Traceless co-Higgs fields on the Schwarzenberger bundles, one shape per
//! index, and their local component matrices.
//!
//! On a chart a field is `φ = φ_z ⊗ ∂_z + φ_w ⊗ ∂_w` with `φ_z, φ_w` traceless
//! `2×2` polynomial matrices; [`CoHiggsField::local`] returns that pair.

use crate::algebra::{Form, Mat, Poly, RatFunc, Scalar};
use crate::geometry::{
    chart_change, conic_rank, jacobian, transition, Bundle, Chart, ConicFactors, LineSection,
    TangentSection, Tm1Section,
};

use super::CoHiggsError;

/// `k = 0`: `φ = [[λ, μ], [1, −λ]] ⊗ C` on `O ⊕ O(−1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoHiggsK0 {
    pub lambda: LineSection,
    pub mu: LineSection,
    pub c: Tm1Section,
}

impl CoHiggsK0 {
    pub fn new(lambda: LineSection, mu: LineSection, c: Tm1Section) -> Result<CoHiggsK0, CoHiggsError> {
        if lambda.k() != 1 || mu.k() != 2 {
            return Err(CoHiggsError::DegreeBound(format!(
                "lambda must be a section of O(1) and mu of O(2), got degrees {} and {}",
                lambda.k(),
                mu.k()
            )));
        }
        Ok(CoHiggsK0 { lambda, mu, c })
    }
}

/// `k = 1`: `φ = [[A, B], [C, −A]]` on `O ⊕ O` with `A, B, C` sections of `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoHiggsK1 {
    pub a: TangentSection,
    pub b: TangentSection,
    pub c: TangentSection,
}

impl CoHiggsK1 {
    pub fn new(a: TangentSection, b: TangentSection, c: TangentSection) -> CoHiggsK1 {
        CoHiggsK1 { a, b, c }
    }

    /// `[[λ, μ], [μ', −λ]] ⊗ C'` with `λ, μ, μ'` linear forms.
    pub fn from_common_factor(lambda: &Form, mu: &Form, mu_prime: &Form, c: &Tm1Section) -> CoHiggsK1 {
        CoHiggsK1 {
            a: TangentSection::product(lambda, c),
            b: TangentSection::product(mu, c),
            c: TangentSection::product(mu_prime, c),
        }
    }

    /// `[[λ, μ], [1, −λ]] ⊗ D` with constants `λ, μ`.
    pub fn from_constant_shape(lambda: &Scalar, mu: &Scalar, d: &TangentSection) -> CoHiggsK1 {
        CoHiggsK1 { a: d.scale(lambda), b: d.scale(mu), c: d.clone() }
    }

    /// One off-diagonal entry vanishes.
    pub fn is_triangular(&self) -> bool {
        self.b.is_zero() || self.c.is_zero()
    }
}

/// `k = 2`: `φ = φ₀ ⊗ C` on `T`, with `φ₀ = [[F, G], [H, −F]]` on chart 0.
#[derive(Clone, Debug, PartialEq)]
pub struct CoHiggsK2 {
    pub f: Poly,
    pub g: Poly,
    pub h: Scalar,
    pub c: Tm1Section,
}

impl CoHiggsK2 {
    pub fn new(f: Poly, g: Poly, h: Scalar, c: Tm1Section) -> Result<CoHiggsK2, CoHiggsError> {
        if f.degree() > 1 || g.degree() > 2 {
            return Err(CoHiggsError::DegreeBound(format!(
                "F must have degree <= 1 and G degree <= 2, got {} and {}",
                f.degree(),
                g.degree()
            )));
        }
        Ok(CoHiggsK2 { f, g, h, c })
    }

    pub fn phi0_chart0(&self) -> Mat<Poly> {
        Mat::from_rows(vec![
            vec![self.f.clone(), self.g.clone()],
            vec![Poly::constant(self.h.clone()), -&self.f],
        ])
    }

    /// `φ₀` on another chart: `J⁻¹ φ₀ J / x_u`, with `J` the Jacobian of the
    /// chart change and `x_u` that chart's unit coordinate, rewritten in the
    /// target chart's coordinates.
    pub fn phi0_local(&self, chart: Chart) -> Result<Mat<Poly>, CoHiggsError> {
        let c0 = Chart::new(0);
        if chart == c0 {
            return Ok(self.phi0_chart0());
        }
        let j = jacobian(c0, chart);
        let ji = j.inverse().expect("chart changes are invertible");
        let lf = transition(Bundle::Line(1), c0, chart).get(0, 0).clone();
        let phi = self.phi0_chart0().map(|p| RatFunc::from(p.clone()));
        let moved = ji.mul(&phi).mul(&j).scale(&lf);
        moved
            .substitute(&chart_change(chart, c0))
            .try_map(RatFunc::as_poly)
            .ok_or(CoHiggsError::NotPolynomial(chart))
    }

    /// `−F² − GH` on chart 0.
    pub fn det_phi0(&self) -> Poly {
        &(-&(&self.f * &self.f)) - &self.g.scale(&self.h)
    }
}

/// `k > 3`: the determinant data `(λ, ρ, C)` with `det φ₀ = λρ` and `ρ` a smooth conic.
#[derive(Clone, Debug, PartialEq)]
pub struct CoHiggsKBig {
    pub k: u32,
    pub rho: LineSection,
    pub lambda: Scalar,
    pub c: Tm1Section,
}

impl CoHiggsKBig {
    pub fn new(k: u32, rho: LineSection, lambda: Scalar, c: Tm1Section) -> Result<CoHiggsKBig, CoHiggsError> {
        if k <= 3 {
            return Err(CoHiggsError::IndexOutOfRange(k));
        }
        if lambda.is_zero() {
            return Err(CoHiggsError::ZeroScalar);
        }
        if rho.k() != 2 || rho.is_zero() || conic_rank(rho.form())? != ConicFactors::Smooth {
            return Err(CoHiggsError::NotIrreducible);
        }
        Ok(CoHiggsKBig { k, rho, lambda, c })
    }

    /// A chart-local matrix with determinant `λρ`; only its determinant and
    /// its tensor shape matter here.
    pub fn phi0_local(&self, chart: Chart) -> Mat<Poly> {
        let lr = self.rho.local_rep(chart).scale(&self.lambda);
        Mat::from_rows(vec![
            vec![Poly::zero(), lr],
            vec![Poly::constant(Scalar::int(-1)), Poly::zero()],
        ])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoHiggsField {
    K0(CoHiggsK0),
    K1(CoHiggsK1),
    K2(CoHiggsK2),
    KBig(CoHiggsKBig),
}

/// The pair `(φ_z, φ_w)` on one chart.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalField {
    pub phi_z: Mat<Poly>,
    pub phi_w: Mat<Poly>,
}

fn tensor_local(phi0: &Mat<Poly>, c: &Tm1Section, chart: Chart) -> LocalField {
    let [s1, s2] = c.local_rep(chart);
    LocalField { phi_z: phi0.scale(&s1), phi_w: phi0.scale(&s2) }
}

impl CoHiggsField {
    /// Schwarzenberger index of the underlying bundle.
    pub fn index(&self) -> u32 {
        match self {
            CoHiggsField::K0(_) => 0,
            CoHiggsField::K1(_) => 1,
            CoHiggsField::K2(_) => 2,
            CoHiggsField::KBig(f) => f.k,
        }
    }

    pub fn local(&self, chart: Chart) -> Result<LocalField, CoHiggsError> {
        Ok(match self {
            CoHiggsField::K0(f) => {
                let l = f.lambda.local_rep(chart);
                let phi0 = Mat::from_rows(vec![
                    vec![l.clone(), f.mu.local_rep(chart)],
                    vec![Poly::one(), -&l],
                ]);
                tensor_local(&phi0, &f.c, chart)
            }
            CoHiggsField::K1(f) => {
                let [a1, a2] = f.a.local_rep(chart);
                let [b1, b2] = f.b.local_rep(chart);
                let [c1, c2] = f.c.local_rep(chart);
                LocalField {
                    phi_z: Mat::from_rows(vec![vec![a1.clone(), b1], vec![c1, -&a1]]),
                    phi_w: Mat::from_rows(vec![vec![a2.clone(), b2], vec![c2, -&a2]]),
                }
            }
            CoHiggsField::K2(f) => tensor_local(&f.phi0_local(chart)?, &f.c, chart),
            CoHiggsField::KBig(f) => tensor_local(&f.phi0_local(chart), &f.c, chart),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn k2_moves_to_every_chart_polynomially() {
        let f = Poly::linear(Scalar::int(1), Scalar::int(2), Scalar::int(-1));
        let g = &Poly::z().pow(2) + &(&Poly::w() * &Poly::z()).scale(&Scalar::int(3));
        let g = &g + &Poly::w().pow(2);
        let k2 = CoHiggsK2::new(f, g, Scalar::int(5), Tm1Section::from_ints([1, 1, 2])).unwrap();
        for ch in Chart::ALL {
            let m = k2.phi0_local(ch).unwrap();
            assert!(m.trace().is_zero());
        }
        assert!(CoHiggsK2::new(Poly::z().pow(2), Poly::zero(), Scalar::zero(), Tm1Section::zero()).is_err());
    }

    #[test]
    fn kbig_requires_smooth_conic() {
        let smooth = LineSection::new(Form::from_terms(
            2,
            [([2, 0, 0], Scalar::one()), ([0, 2, 0], Scalar::one()), ([0, 0, 2], Scalar::one())],
        ));
        let pair = LineSection::new(Form::from_terms(2, [([1, 1, 0], Scalar::one())]));
        let c = Tm1Section::from_ints([0, 0, 1]);
        assert!(CoHiggsKBig::new(4, smooth.clone(), Scalar::one(), c.clone()).is_ok());
        assert_eq!(CoHiggsKBig::new(4, pair, Scalar::one(), c.clone()), Err(CoHiggsError::NotIrreducible));
        assert_eq!(CoHiggsKBig::new(3, smooth.clone(), Scalar::one(), c.clone()), Err(CoHiggsError::IndexOutOfRange(3)));
        assert_eq!(CoHiggsKBig::new(5, smooth, Scalar::zero(), c), Err(CoHiggsError::ZeroScalar));
    }

    #[test]
    fn local_matrices_are_traceless() {
        let d = TangentSection::from_ints([[1, 0, 2], [0, 1, 0], [3, 0, 0]]);
        let f = CoHiggsField::K1(CoHiggsK1::from_constant_shape(&Scalar::int(2), &Scalar::int(3), &d));
        for ch in Chart::ALL {
            let l = f.local(ch).unwrap();
            assert!(l.phi_z.trace().is_zero() && l.phi_w.trace().is_zero());
            assert!(!Ring::is_zero(l.phi_z.get(1, 0)) || !Ring::is_zero(l.phi_w.get(1, 0)));
        }
    }
}
