//! The determinant `det φ ∈ H⁰(Sym²T)` of a traceless co-Higgs field.
//!
//! On a chart, `det(ξ₁φ_z + ξ₂φ_w) = t₁₁ξ₁² + 2t₁₂ξ₁ξ₂ + t₂₂ξ₂²`; for
//! `φ_z = [[a₁, b₁], [c₁, −a₁]]` and `φ_w = [[a₂, b₂], [c₂, −a₂]]` this is
//! `t₁₁ = −(a₁² + b₁c₁)`, `t₁₂ = −(a₁a₂ + (b₁c₂ + b₂c₁)/2)`, `t₂₂ = −(a₂² + b₂c₂)`.

use std::fmt;

use crate::algebra::{Form, Scalar};
use crate::geometry::{glue_sym2, Chart, GlueReport, LineSection, Sym2Triple, TangentSection, Tm1Section};

use super::{CoHiggsError, CoHiggsField, CoHiggsK1, LocalField};

/// A factored description of a determinant.
#[derive(Clone, Debug, PartialEq)]
pub enum DetStructure {
    /// `q ⊗ Sym²(C)`.
    QSym2 { q: LineSection, c: Tm1Section },
    /// `−Sym²(A)`.
    SymTangent { a: TangentSection },
    /// `λρ ⊗ Sym²(C)`.
    RhoSym2 { lambda: Scalar, rho: LineSection, c: Tm1Section },
}

impl DetStructure {
    /// The product evaluated as a local triple on `chart`.
    pub fn triple(&self, chart: Chart) -> Sym2Triple {
        match self {
            DetStructure::QSym2 { q, c } => c.sym2(chart).scale(&q.local_rep(chart)),
            DetStructure::SymTangent { a } => a.sym2(chart).neg(),
            DetStructure::RhoSym2 { lambda, rho, c } => {
                c.sym2(chart).scale(&rho.local_rep(chart).scale(lambda))
            }
        }
    }
}

impl fmt::Display for DetStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetStructure::QSym2 { q, c } => write!(f, "({q}) * Sym2{c}"),
            DetStructure::SymTangent { a } => write!(f, "-Sym2({a})"),
            DetStructure::RhoSym2 { lambda, rho, c } => write!(f, "({lambda})*({rho}) * Sym2{c}"),
        }
    }
}

/// A determinant: its chart-0 triple and, when known, a factored form.
#[derive(Clone, Debug, PartialEq)]
pub struct DetSection {
    pub k: u32,
    pub triple: Sym2Triple,
    pub structure: Option<DetStructure>,
}

impl DetSection {
    pub fn is_zero(&self) -> bool {
        self.triple.is_zero()
    }
}

/// The local determinant triple of a pair of traceless matrices.
pub fn local_det_triple(l: &LocalField) -> Sym2Triple {
    let (a1, b1, c1) = (l.phi_z.get(0, 0), l.phi_z.get(0, 1), l.phi_z.get(1, 0));
    let (a2, b2, c2) = (l.phi_w.get(0, 0), l.phi_w.get(0, 1), l.phi_w.get(1, 0));
    let half = Scalar::ratio(1, 2);
    let t11 = -&(&(a1 * a1) + &(b1 * c1));
    let cross = (&(b1 * c2) + &(b2 * c1)).scale(&half);
    let t12 = -&(&(a1 * a2) + &cross);
    let t22 = -&(&(a2 * a2) + &(b2 * c2));
    Sym2Triple::new(t11, t12, t22)
}

/// Which of the known shapes a `k = 1` field has.
#[derive(Clone, Debug, PartialEq)]
pub enum K1Shape {
    /// `B = 0` or `C = 0`.
    Triangular,
    /// `[[λ, μ], [μ', −λ]] ⊗ C'` with linear forms `λ, μ, μ'`.
    CommonFactor { lambda: Form, mu: Form, mu_prime: Form, c: Tm1Section },
    /// `[[λ, μ], [1, −λ]] ⊗ D` with constants `λ, μ`.
    Constant { lambda: Scalar, mu: Scalar, d: TangentSection },
    /// Neither shape applies.
    Unmatched,
}

fn ratio(x: &TangentSection, d: &TangentSection) -> Option<Scalar> {
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let xe = x.entries();
    let de = d.entries();
    let k = xe.iter().zip(&de).find(|(_, b)| !b.is_zero()).map(|(a, b)| a / b)?;
    (d.scale(&k) == *x).then_some(k)
}

fn common_factor(f: &CoHiggsK1) -> Option<K1Shape> {
    let parts = [&f.a, &f.b, &f.c];
    let first = parts.iter().find(|p| !p.is_zero())?;
    let (_, v) = first.as_product()?;
    let pivot = v.coords().iter().position(|x| !x.is_zero())?;
    let mut forms = Vec::new();
    for p in parts {
        if p.is_zero() {
            forms.push(Form::zero(1));
            continue;
        }
        let (l, vp) = p.as_product()?;
        let kappa = &vp.coords()[pivot] / &v.coords()[pivot];
        if kappa.is_zero() || v.scale(&kappa) != vp {
            return None;
        }
        forms.push(l.scale(&kappa));
    }
    let mu_prime = forms.pop()?;
    let mu = forms.pop()?;
    let lambda = forms.pop()?;
    Some(K1Shape::CommonFactor { lambda, mu, mu_prime, c: v })
}

pub fn k1_shape(f: &CoHiggsK1) -> K1Shape {
    if f.is_triangular() {
        return K1Shape::Triangular;
    }
    if let Some(s) = common_factor(f) {
        return s;
    }
    match (ratio(&f.a, &f.c), ratio(&f.b, &f.c)) {
        (Some(lambda), Some(mu)) => K1Shape::Constant { lambda, mu, d: f.c.clone() },
        _ => K1Shape::Unmatched,
    }
}

fn k1_structure(f: &CoHiggsK1) -> Result<Option<DetStructure>, CoHiggsError> {
    Ok(match k1_shape(f) {
        K1Shape::Triangular => Some(DetStructure::SymTangent { a: f.a.clone() }),
        K1Shape::CommonFactor { lambda, mu, mu_prime, c } => {
            let q = -&(&(&lambda * &lambda) + &(&mu * &mu_prime));
            Some(DetStructure::QSym2 { q: LineSection::new(q), c })
        }
        K1Shape::Constant { lambda, mu, d } => {
            // −(λ² + μ) Sym²(D) = −Sym²(√(λ² + μ) D)
            let r = (&(&lambda * &lambda) + &mu).exact_sqrt()?.root;
            Some(DetStructure::SymTangent { a: d.scale(&r) })
        }
        K1Shape::Unmatched => None,
    })
}

/// Factored form of the determinant where the field's shape provides one.
pub fn det_structure(field: &CoHiggsField) -> Result<Option<DetStructure>, CoHiggsError> {
    Ok(match field {
        CoHiggsField::K0(f) => {
            let l = f.lambda.form();
            let q = -&(&(l * l) + f.mu.form());
            Some(DetStructure::QSym2 { q: LineSection::new(q), c: f.c.clone() })
        }
        CoHiggsField::K1(f) => k1_structure(f)?,
        CoHiggsField::K2(f) => Some(DetStructure::QSym2 {
            q: LineSection::from_chart0(&f.det_phi0(), 2)?,
            c: f.c.clone(),
        }),
        CoHiggsField::KBig(f) => Some(DetStructure::RhoSym2 {
            lambda: f.lambda.clone(),
            rho: f.rho.clone(),
            c: f.c.clone(),
        }),
    })
}

/// Determinant triple on `chart`, from the local component matrices.
pub fn determinant_on(field: &CoHiggsField, chart: Chart) -> Result<Sym2Triple, CoHiggsError> {
    Ok(local_det_triple(&field.local(chart)?))
}

pub fn determinant(field: &CoHiggsField) -> Result<DetSection, CoHiggsError> {
    let structure = det_structure(field)?;
    let triple = match (field, &structure) {
        (CoHiggsField::K1(_), _) | (_, None) => determinant_on(field, Chart::new(0))?,
        (_, Some(s)) => s.triple(Chart::new(0)),
    };
    Ok(DetSection { k: field.index(), triple, structure })
}

/// Whether the chart-wise determinant triples glue as a section of `Sym²T`.
pub fn det_glue(field: &CoHiggsField) -> Result<GlueReport, CoHiggsError> {
    let t = [
        determinant_on(field, Chart::new(0))?,
        determinant_on(field, Chart::new(1))?,
        determinant_on(field, Chart::new(2))?,
    ];
    Ok(glue_sym2(&t, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::cohiggs::{CoHiggsK0, CoHiggsK2};

    fn c0() -> Chart {
        Chart::new(0)
    }

    #[test]
    fn k0_zero_field_has_zero_determinant() {
        let f = CoHiggsField::K0(
            CoHiggsK0::new(LineSection::zero(1), LineSection::zero(2), Tm1Section::from_ints([1, 2, 3])).unwrap(),
        );
        assert!(determinant(&f).unwrap().is_zero());
    }

    #[test]
    fn k0_matches_local_formula_and_glues() {
        let lambda = LineSection::new(Form::linear([Scalar::int(1), Scalar::int(0), Scalar::int(2)]));
        let mu = LineSection::new(Form::from_terms(2, [([0, 1, 1], Scalar::int(3)), ([0, 0, 2], Scalar::int(-1))]));
        let f = CoHiggsField::K0(CoHiggsK0::new(lambda, mu, Tm1Section::from_ints([1, -1, 2])).unwrap());
        let d = determinant(&f).unwrap();
        assert_eq!(d.triple, determinant_on(&f, c0()).unwrap());
        assert!(det_glue(&f).unwrap().ok());
    }

    #[test]
    fn k1_triangular_is_minus_sym2_a() {
        let a = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        let b = a.scale(&Scalar::int(3));
        let f = CoHiggsField::K1(CoHiggsK1::new(a.clone(), b, TangentSection::zero()));
        let d = determinant(&f).unwrap();
        assert_eq!(d.triple, a.sym2(c0()).neg());
        assert_eq!(d.structure, Some(DetStructure::SymTangent { a }));
        assert!(det_glue(&f).unwrap().ok());
    }

    #[test]
    fn k1_shapes_are_recognised() {
        let v = Tm1Section::from_ints([1, 0, 2]);
        let l = |a, b, c| Form::linear([Scalar::int(a), Scalar::int(b), Scalar::int(c)]);
        let f = CoHiggsK1::from_common_factor(&l(1, 0, 0), &l(0, 1, 1), &l(2, 0, -1), &v);
        assert!(matches!(k1_shape(&f), K1Shape::CommonFactor { .. }));
        let field = CoHiggsField::K1(f);
        let d = determinant(&field).unwrap();
        assert_eq!(d.structure.as_ref().unwrap().triple(c0()), d.triple);

        let dsec = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        let f = CoHiggsK1::from_constant_shape(&Scalar::int(1), &Scalar::int(3), &dsec);
        assert!(matches!(k1_shape(&f), K1Shape::Constant { .. }));
        let field = CoHiggsField::K1(f);
        let d = determinant(&field).unwrap();
        // −(1 + 3) Sym²(D) = −Sym²(2D)
        assert_eq!(d.structure, Some(DetStructure::SymTangent { a: dsec.scale(&Scalar::int(2)) }));
        assert_eq!(d.triple, dsec.sym2(c0()).scale(&Poly::constant(Scalar::int(-4))));
    }

    #[test]
    fn k2_target_round_trip() {
        // F = 0, H = 1, G = −q gives q·Sym²(C)
        let q = &Poly::z().pow(2) + &Poly::one();
        let c = Tm1Section::from_ints([0, 1, 1]);
        let f = CoHiggsField::K2(CoHiggsK2::new(Poly::zero(), -&q, Scalar::one(), c.clone()).unwrap());
        let d = determinant(&f).unwrap();
        assert_eq!(d.triple, c.sym2(c0()).scale(&q));
        assert_eq!(determinant_on(&f, c0()).unwrap(), d.triple);
        assert!(det_glue(&f).unwrap().ok());
    }
}
