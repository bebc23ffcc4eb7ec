//! Points of the image of the determinant map, in canonical form.

use std::fmt;

use crate::algebra::{Mat, Monomial, Poly, Scalar};
use crate::cohiggs::{DetSection, DetStructure};
use crate::geometry::{
    conic_rank, recover_sqrt, Chart, ConicFactors, LineSection, Sym2Triple, TangentSection, Tm1Section,
};

use super::canon::{canonicalize_pm, canonicalize_qc, canonicalize_rho, equal_pm};
use super::ClassifyError;

#[derive(Clone, Debug, PartialEq)]
pub enum ImagePoint {
    Zero,
    /// `q ⊗ Sym²(C)`, `C` scaled to a leading 1.
    QSym2 { q: LineSection, c: Tm1Section },
    /// `−Sym²(A)` with `A` indecomposable, up to sign.
    SymTangent { a: TangentSection },
    /// `ρ ⊗ Sym²(C̃)` with `ρ` monic and `C̃` up to sign.
    RhoSym2 { rho: LineSection, c: Tm1Section },
}

impl ImagePoint {
    /// The determinant this point stands for, as a triple on `chart`.
    pub fn invariant_triple(&self, chart: Chart) -> Sym2Triple {
        match self {
            ImagePoint::Zero => Sym2Triple::zero(),
            ImagePoint::QSym2 { q, c } | ImagePoint::RhoSym2 { rho: q, c } => {
                c.sym2(chart).scale(&q.local_rep(chart))
            }
            ImagePoint::SymTangent { a } => a.sym2(chart).neg(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ImagePoint::Zero => "zero",
            ImagePoint::QSym2 { .. } => "q_sym2",
            ImagePoint::SymTangent { .. } => "sym_tangent",
            ImagePoint::RhoSym2 { .. } => "rho_sym2",
        }
    }
}

impl fmt::Display for ImagePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImagePoint::Zero => f.write_str("0"),
            ImagePoint::QSym2 { q, c } => write!(f, "({q}) * Sym2{c}"),
            ImagePoint::SymTangent { a } => write!(f, "-Sym2({a})"),
            ImagePoint::RhoSym2 { rho, c } => write!(f, "({rho}) * Sym2{c}"),
        }
    }
}

fn from_tangent(a: &TangentSection) -> Result<ImagePoint, ClassifyError> {
    match a.as_product() {
        // −Sym²(ℓ ⊗ v) = −ℓ² ⊗ Sym²(v)
        Some((l, v)) => {
            let q = LineSection::new(-&(&l * &l));
            let (q, c) = canonicalize_qc(&q, &v)?;
            Ok(ImagePoint::QSym2 { q, c })
        }
        None => Ok(ImagePoint::SymTangent { a: canonicalize_pm(a) }),
    }
}

pub fn structure_image(s: &DetStructure) -> Result<ImagePoint, ClassifyError> {
    match s {
        DetStructure::QSym2 { q, c } => {
            if q.is_zero() || c.is_zero() {
                return Ok(ImagePoint::Zero);
            }
            let (q, c) = canonicalize_qc(q, c)?;
            Ok(ImagePoint::QSym2 { q, c })
        }
        DetStructure::SymTangent { a } => {
            if a.is_zero() {
                return Ok(ImagePoint::Zero);
            }
            from_tangent(a)
        }
        DetStructure::RhoSym2 { lambda, rho, c } => {
            let (rho, c) = canonicalize_rho(lambda, rho, c)?;
            Ok(ImagePoint::RhoSym2 { rho, c })
        }
    }
}

/// Solves `t = q ⊗ Sym²(v)` on chart 0 for `v ∈ ℂ³` and `q` of degree ≤ 2.
pub fn split_q_sym2(t: &Sym2Triple) -> Option<(LineSection, Tm1Section)> {
    let c0 = Chart::new(0);
    // t₁₂s₁ − t₁₁s₂ = 0 and t₂₂s₁ − t₁₂s₂ = 0 with s = (v₀ − zv₂, v₁ − wv₂)
    let (z, w) = (Poly::z(), Poly::w());
    let eqs = [
        [t.t12.clone(), -&t.t11, &(&w * &t.t11) - &(&z * &t.t12)],
        [t.t22.clone(), -&t.t12, &(&w * &t.t12) - &(&z * &t.t22)],
    ];
    let mut monos: Vec<Monomial> = eqs
        .iter()
        .flat_map(|row| row.iter().flat_map(|p| p.terms().map(|(m, _)| *m).collect::<Vec<_>>()))
        .collect();
    monos.sort_by_key(|m| (m.0, m.1));
    monos.dedup();
    let rows: Vec<Vec<Scalar>> = eqs
        .iter()
        .flat_map(|row| monos.iter().map(move |m| row.iter().map(|p| p.coeff(*m)).collect()))
        .collect();
    if rows.is_empty() {
        return None;
    }
    let kernel = Mat::from_rows(rows).nullspace();
    if kernel.len() != 1 {
        return None;
    }
    let v = Tm1Section::new(kernel[0].clone().try_into().ok()?);
    let [s1, s2] = v.local_rep(c0);
    let q = if !s1.is_zero() {
        t.t11.div_exact(&(&s1 * &s1))?
    } else {
        t.t22.div_exact(&(&s2 * &s2))?
    };
    if q.degree() > 2 || v.sym2(c0).scale(&q) != *t {
        return None;
    }
    Some((LineSection::from_chart0(&q, 2).ok()?, v))
}

/// Reconstructs the structure of a chart-0 determinant triple.
pub fn classify_triple(t: &Sym2Triple, k: u32) -> Result<ImagePoint, ClassifyError> {
    if k == 3 {
        return Err(ClassifyError::ExcludedIndex);
    }
    if t.is_zero() {
        return Ok(ImagePoint::Zero);
    }
    if let Some((q, c)) = split_q_sym2(t) {
        if k > 3 {
            if conic_rank(q.form())? != ConicFactors::Smooth {
                return Err(ClassifyError::Unclassifiable);
            }
            let (rho, c) = canonicalize_rho(&Scalar::one(), &q, &c)?;
            return Ok(ImagePoint::RhoSym2 { rho, c });
        }
        let (q, c) = canonicalize_qc(&q, &c)?;
        return Ok(ImagePoint::QSym2 { q, c });
    }
    if k == 1 {
        if let Ok(pair) = recover_sqrt(&t.neg()) {
            if let Some(a) = TangentSection::from_local(Chart::new(0), &pair) {
                return from_tangent(&a);
            }
        }
    }
    Err(ClassifyError::Unclassifiable)
}

pub fn image_point(d: &DetSection) -> Result<ImagePoint, ClassifyError> {
    if d.k == 3 {
        return Err(ClassifyError::ExcludedIndex);
    }
    if d.is_zero() {
        return Ok(ImagePoint::Zero);
    }
    match &d.structure {
        Some(s) => structure_image(s),
        None => classify_triple(&d.triple, d.k),
    }
}

/// Equality of image points, sign-insensitive where the quotient is.
pub fn image_equal(a: &ImagePoint, b: &ImagePoint) -> bool {
    match (a, b) {
        (ImagePoint::Zero, ImagePoint::Zero) => true,
        (ImagePoint::QSym2 { q, c }, ImagePoint::QSym2 { q: q2, c: c2 }) => q == q2 && c == c2,
        (ImagePoint::SymTangent { a }, ImagePoint::SymTangent { a: a2 }) => equal_pm(a, a2),
        (ImagePoint::RhoSym2 { rho, c }, ImagePoint::RhoSym2 { rho: r2, c: c2 }) => {
            rho == r2 && equal_pm(c, c2)
        }
        _ => false,
    }
}

/// Equality of the determinants the points stand for.
pub fn invariant_equal(a: &ImagePoint, b: &ImagePoint) -> bool {
    let c0 = Chart::new(0);
    a.invariant_triple(c0) == b.invariant_triple(c0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Form;
    use crate::cohiggs::{determinant, CoHiggsField, CoHiggsK0, CoHiggsK1, CoHiggsKBig};

    fn line(c: [i64; 3]) -> LineSection {
        LineSection::new(Form::linear(c.map(Scalar::int)))
    }

    fn k0(l: [i64; 3], m: &Form, c: [i64; 3]) -> CoHiggsField {
        CoHiggsField::K0(CoHiggsK0::new(line(l), LineSection::new(m.clone()), Tm1Section::from_ints(c)).unwrap())
    }

    #[test]
    fn k0_structure_and_raw_triple_agree() {
        let m = Form::from_terms(2, [([1, 1, 0], Scalar::int(3)), ([0, 0, 2], Scalar::int(-1))]);
        let f = k0([1, 0, 2], &m, [2, -1, 4]);
        let d = determinant(&f).unwrap();
        let from_s = image_point(&d).unwrap();
        let raw = DetSection { structure: None, ..d.clone() };
        let from_t = image_point(&raw).unwrap();
        assert!(image_equal(&from_s, &from_t));
        assert!(invariant_equal(&from_s, &from_t));
        assert_eq!(from_s.invariant_triple(Chart::new(0)), d.triple);
    }

    #[test]
    fn k1_triangular_decomposable_becomes_q_sym2() {
        let v = Tm1Section::from_ints([1, 2, 0]);
        let a = TangentSection::product(line([0, 1, 1]).form(), &v);
        let b = TangentSection::from_ints([[0, 1, 0], [0, 0, 0], [0, 0, 0]]);
        let f = CoHiggsField::K1(CoHiggsK1::new(a, b, TangentSection::zero()));
        let p = image_point(&determinant(&f).unwrap()).unwrap();
        assert_eq!(p.kind(), "q_sym2");
        let raw = DetSection { structure: None, ..determinant(&f).unwrap() };
        assert!(image_equal(&p, &image_point(&raw).unwrap()));
    }

    #[test]
    fn k1_indecomposable_tangent() {
        let a = TangentSection::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 0]]);
        let f = CoHiggsField::K1(CoHiggsK1::new(a.clone(), TangentSection::zero(), a.scale(&Scalar::int(2))));
        let d = determinant(&f).unwrap();
        let p = image_point(&d).unwrap();
        assert_eq!(p.kind(), "sym_tangent");
        let raw = image_point(&DetSection { structure: None, ..d }).unwrap();
        assert!(image_equal(&p, &raw));
    }

    #[test]
    fn big_index_and_exclusions() {
        let rho = LineSection::new(Form::from_terms(
            2,
            [([2, 0, 0], Scalar::int(3)), ([0, 2, 0], Scalar::int(3)), ([0, 0, 2], Scalar::int(3))],
        ));
        let f = CoHiggsField::KBig(
            CoHiggsKBig::new(5, rho, Scalar::int(3), Tm1Section::from_ints([1, 1, 1])).unwrap(),
        );
        let d = determinant(&f).unwrap();
        let p = image_point(&d).unwrap();
        assert_eq!(p.kind(), "rho_sym2");
        assert_eq!(p.invariant_triple(Chart::new(0)), d.triple);
        let raw = image_point(&DetSection { structure: None, ..d.clone() }).unwrap();
        assert!(image_equal(&p, &raw));
        assert_eq!(image_point(&DetSection { k: 3, ..d }), Err(ClassifyError::ExcludedIndex));
    }
}
