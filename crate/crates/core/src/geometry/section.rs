//! Global sections of `O(k)`, `T(−1)` and `T`, their local representatives,
//! and symmetric squares.
//!
//! `T(−1)` sections are vectors `v ∈ ℂ³` and `T` sections are traceless
//! `3×3` matrices `M`, both through the Euler sequence: the vector field
//! `Σ vₖ ∂/∂xₖ` (resp. `Σ (Mx)ₖ ∂/∂xₖ`) pushed to the plane. On a chart with
//! unit coordinate `x_c` and affine coordinates `(x_a, x_b) = (z, w)` the
//! local representative of a vector field `ℓ` is `(ℓ_a − z ℓ_c, ℓ_b − w ℓ_c)`.

use std::fmt;

use super::bundle::{glue_check_poly, Bundle, GlueReport};
use super::chart::{homogeneous_coord, Chart, PointP2};
use super::GeometryError;
use crate::algebra::{Form, Mat, Monomial, Poly, Scalar};

/// Whether the first nonzero entry is lexicographically negative, i.e.
/// whether the sign rule for `±1` quotients flips this sequence.
pub fn needs_sign_flip<'a>(entries: impl IntoIterator<Item = &'a Scalar>) -> bool {
    entries
        .into_iter()
        .find(|e| !e.is_zero())
        .is_some_and(|e| !e.is_positive())
}

fn vector_field_rep(chart: Chart, l: &[Poly; 3]) -> [Poly; 2] {
    let (a, b) = chart.affine_coords();
    let c = chart.unit_coord();
    [&l[a] - &(&Poly::z() * &l[c]), &l[b] - &(&Poly::w() * &l[c])]
}

/// A section of `O(k)` given by a degree-`k` form.
#[derive(Clone, Debug, PartialEq)]
pub struct LineSection {
    form: Form,
}

impl LineSection {
    pub fn new(form: Form) -> LineSection {
        LineSection { form }
    }

    /// The section of `O(k)` whose chart-0 representative is `p`.
    pub fn from_chart0(p: &Poly, k: u32) -> Result<LineSection, GeometryError> {
        Ok(LineSection { form: p.homogenize(k)? })
    }

    pub fn zero(k: u32) -> LineSection {
        LineSection { form: Form::zero(k) }
    }

    pub fn k(&self) -> u32 {
        self.form.degree()
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn local_rep(&self, chart: Chart) -> Poly {
        self.form.dehomogenize(chart)
    }

    pub fn scale(&self, c: &Scalar) -> LineSection {
        LineSection { form: self.form.scale(c) }
    }

    pub fn glue(&self) -> GlueReport {
        let reps = Chart::ALL.map(|c| vec![self.local_rep(c)]);
        glue_check_poly(Bundle::Line(self.k() as i32), &reps)
    }
}

impl fmt::Display for LineSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

/// A section of `T(−1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tm1Section {
    v: [Scalar; 3],
}

impl Tm1Section {
    pub fn new(v: [Scalar; 3]) -> Tm1Section {
        Tm1Section { v }
    }

    pub fn from_ints(v: [i64; 3]) -> Tm1Section {
        Tm1Section { v: v.map(Scalar::int) }
    }

    pub fn zero() -> Tm1Section {
        Tm1Section::from_ints([0, 0, 0])
    }

    pub fn basis() -> [Tm1Section; 3] {
        [Tm1Section::from_ints([1, 0, 0]), Tm1Section::from_ints([0, 1, 0]), Tm1Section::from_ints([0, 0, 1])]
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Tm1Section {
        Tm1Section { v: self.v.clone().map(|x| &x * c) }
    }

    pub fn neg(&self) -> Tm1Section {
        self.scale(&Scalar::int(-1))
    }

    pub fn local_rep(&self, chart: Chart) -> [Poly; 2] {
        let l = self.v.clone().map(Poly::constant);
        vector_field_rep(chart, &l)
    }

    /// The global section with the given local representative, if any.
    pub fn from_local(chart: Chart, rep: &[Poly; 2]) -> Option<Tm1Section> {
        let basis = Tm1Section::basis().map(|b| b.local_rep(chart));
        let x = solve_linear_model(&basis, rep, false)?;
        Some(Tm1Section { v: [x[0].clone(), x[1].clone(), x[2].clone()] })
    }

    /// The single point where the section vanishes.
    pub fn zero_point(&self) -> Result<PointP2, GeometryError> {
        PointP2::new(self.v.clone()).ok_or(GeometryError::ZeroSection)
    }

    pub fn sym2(&self, chart: Chart) -> Sym2Triple {
        Sym2Triple::from_pair(&self.local_rep(chart))
    }

    pub fn glue(&self) -> GlueReport {
        let reps = Chart::ALL.map(|c| self.local_rep(c).to_vec());
        glue_check_poly(Bundle::TangentMinus1, &reps)
    }
}

impl fmt::Display for Tm1Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v[0], self.v[1], self.v[2])
    }
}

/// A section of `T`, stored as the traceless representative of `M` modulo scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentSection {
    m: Mat<Scalar>,
}

impl TangentSection {
    pub fn new(m: Mat<Scalar>) -> TangentSection {
        assert!(m.rows() == 3 && m.cols() == 3, "tangent sections are 3x3 matrices");
        let t = &m.trace() * &Scalar::ratio(1, 3);
        let m = m.sub(&Mat::<Scalar>::identity(3).scale(&t));
        TangentSection { m }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> TangentSection {
        TangentSection::new(Mat::from_ints(&[&rows[0], &rows[1], &rows[2]]))
    }

    pub fn zero() -> TangentSection {
        TangentSection { m: Mat::zeros(3, 3) }
    }

    /// A basis of the 8-dimensional space of traceless matrices.
    pub fn basis() -> Vec<TangentSection> {
        let mut out = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if r == c && r == 2 {
                    continue;
                }
                let mut m = Mat::zeros(3, 3);
                m.set(r, c, Scalar::one());
                if r == c {
                    m.set(2, 2, Scalar::int(-1));
                }
                out.push(TangentSection { m });
            }
        }
        out
    }

    pub fn matrix(&self) -> &Mat<Scalar> {
        &self.m
    }

    /// Entries in row-major scan order.
    pub fn entries(&self) -> Vec<Scalar> {
        (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).map(|(r, c)| self.m.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> TangentSection {
        TangentSection { m: self.m.scale(c) }
    }

    pub fn neg(&self) -> TangentSection {
        self.scale(&Scalar::int(-1))
    }

    pub fn local_rep(&self, chart: Chart) -> [Poly; 2] {
        let x = [0, 1, 2].map(|k| homogeneous_coord(chart, k));
        let l = [0, 1, 2].map(|r| {
            (0..3).fold(Poly::zero(), |acc, c| &acc + &x[c].scale(self.m.get(r, c)))
        });
        vector_field_rep(chart, &l)
    }

    pub fn from_local(chart: Chart, rep: &[Poly; 2]) -> Option<TangentSection> {
        let basis: Vec<[Poly; 2]> = TangentSection::basis().iter().map(|b| b.local_rep(chart)).collect();
        let x = solve_linear_model(&basis, rep, false)?;
        let mut m = Mat::zeros(3, 3);
        for (b, coeff) in TangentSection::basis().iter().zip(&x) {
            m = m.add(&b.m.scale(coeff));
        }
        Some(TangentSection { m })
    }

    pub fn sym2(&self, chart: Chart) -> Sym2Triple {
        Sym2Triple::from_pair(&self.local_rep(chart))
    }

    pub fn glue(&self) -> GlueReport {
        let reps = Chart::ALL.map(|c| self.local_rep(c).to_vec());
        glue_check_poly(Bundle::Tangent, &reps)
    }

    /// The section `ℓ ⊗ v` of `O(1) ⊗ T(−1)`, i.e. the vector field `ℓ(x)·v`.
    pub fn product(l: &Form, v: &Tm1Section) -> TangentSection {
        let c = l.linear_coeffs();
        let mut m = Mat::zeros(3, 3);
        for r in 0..3 {
            for k in 0..3 {
                m.set(r, k, &v.coords()[r] * &c[k]);
            }
        }
        TangentSection::new(m)
    }

    /// Writes a nonzero section as `ℓ ⊗ v` when possible.
    ///
    /// The traceless representative of `v ℓᵀ` has eigenvalues `(e, e, −2e)`,
    /// so `e = 3·det / (2p)` with `p` the sum of principal `2×2` minors
    /// (`e = 0` when `p = 0`), and `M − eI` must have rank one.
    pub fn as_product(&self) -> Option<(Form, Tm1Section)> {
        if self.is_zero() {
            return None;
        }
        let m = &self.m;
        let minor = |a: usize, b: usize| &(m.get(a, a) * m.get(b, b)) - &(m.get(a, b) * m.get(b, a));
        let p = &(&minor(0, 1) + &minor(0, 2)) + &minor(1, 2);
        let e = match p.inv() {
            Some(pi) => &(&Scalar::ratio(3, 2) * &m.det()) * &pi,
            None => Scalar::zero(),
        };
        let r = m.sub(&Mat::<Scalar>::identity(3).scale(&e));
        if r.rank() != 1 {
            return None;
        }
        let (row, col) = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .find(|&(a, b)| !r.get(a, b).is_zero())?;
        let pivot = r.get(row, col).inv()?;
        let v = Tm1Section::new([0, 1, 2].map(|k| r.get(k, col).clone()));
        let l = Form::linear([0, 1, 2].map(|k| r.get(row, k) * &pivot));
        Some((l, v))
    }
}

impl fmt::Display for TangentSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}

const MODEL_MONOMIALS: [Monomial; 6] =
    [Monomial(0, 0), Monomial(1, 0), Monomial(0, 1), Monomial(2, 0), Monomial(1, 1), Monomial(0, 2)];

/// Solves `Σ xₖ basisₖ = target` for the coefficients `x`, coefficient by
/// coefficient over the monomials of degree ≤ 2. With `allow_free` unset
/// the basis is assumed independent.
fn solve_linear_model(basis: &[[Poly; 2]], target: &[Poly; 2], allow_free: bool) -> Option<Vec<Scalar>> {
    if target.iter().any(|p| p.degree() > 2) {
        return None;
    }
    let n = basis.len();
    let mut rows = Vec::new();
    for comp in 0..2 {
        for m in MODEL_MONOMIALS {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[comp].coeff(m)).collect();
            row.push(target[comp].coeff(m));
            rows.push(row);
        }
    }
    let (r, pivots) = Mat::from_rows(rows).rref();
    if pivots.contains(&n) || (!allow_free && pivots.len() < n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, n).clone();
    }
    Some(x)
}

/// Local coefficients of a symmetric square on one chart: `(t₁₁, t₁₂, t₂₂)`
/// multiply `e₁², 2e₁e₂, e₂²`, so the square of `(s₁, s₂)` is
/// `(s₁², s₁s₂, s₂²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sym2Triple {
    pub t11: Poly,
    pub t12: Poly,
    pub t22: Poly,
}

impl Sym2Triple {
    pub fn new(t11: Poly, t12: Poly, t22: Poly) -> Sym2Triple {
        Sym2Triple { t11, t12, t22 }
    }

    pub fn zero() -> Sym2Triple {
        Sym2Triple::new(Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn from_pair(s: &[Poly; 2]) -> Sym2Triple {
        Sym2Triple::new(&s[0] * &s[0], &s[0] * &s[1], &s[1] * &s[1])
    }

    /// Coefficients in the basis `{e₁², e₁e₂, e₂²}`: `(t₁₁, 2t₁₂, t₂₂)`.
    pub fn coefficients(&self) -> [Poly; 3] {
        [self.t11.clone(), self.t12.scale(&Scalar::int(2)), self.t22.clone()]
    }

    pub fn from_coefficients(c: &[Poly; 3]) -> Sym2Triple {
        Sym2Triple::new(c[0].clone(), c[1].scale(&Scalar::ratio(1, 2)), c[2].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.t11.is_zero() && self.t12.is_zero() && self.t22.is_zero()
    }

    pub fn scale(&self, q: &Poly) -> Sym2Triple {
        Sym2Triple::new(q * &self.t11, q * &self.t12, q * &self.t22)
    }

    pub fn neg(&self) -> Sym2Triple {
        self.scale(&Poly::constant(Scalar::int(-1)))
    }

    pub fn polys(&self) -> [&Poly; 3] {
        [&self.t11, &self.t12, &self.t22]
    }

    /// The binary quadratic form `t₁₁ξ₁² + 2t₁₂ξ₁ξ₂ + t₂₂ξ₂²` evaluated at `(ξ₁, ξ₂)`.
    pub fn pair_with(&self, xi: [&Scalar; 2]) -> Poly {
        let two = Scalar::int(2);
        let a = self.t11.scale(&(xi[0] * xi[0]));
        let b = self.t12.scale(&(&two * &(xi[0] * xi[1])));
        let c = self.t22.scale(&(xi[1] * xi[1]));
        &(&a + &b) + &c
    }

    pub fn level(&self) -> u8 {
        self.polys().iter().map(|p| p.level()).max().unwrap_or(0)
    }
}

impl fmt::Display for Sym2Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.t11, self.t12, self.t22)
    }
}

/// Gluing check for triples given on each chart as sections of `Sym²T ⊗ O(m)`.
pub fn glue_sym2(triples: &[Sym2Triple; 3], twist: i32) -> GlueReport {
    let reps = [0, 1, 2].map(|c| triples[c].coefficients().to_vec());
    glue_check_poly(Bundle::Sym2Tangent(twist), &reps)
}

/// A pair `(s₁, s₂)` with `(s₁², s₁s₂, s₂²) = t`, sign-normalized so the
/// first nonzero coefficient (of `s₁`, then `s₂`, highest terms first) is
/// positive.
pub fn recover_sqrt(t: &Sym2Triple) -> Result<[Poly; 2], GeometryError> {
    if &t.t12 * &t.t12 != &t.t11 * &t.t22 {
        return Err(GeometryError::NotASquare);
    }
    let s1 = t.t11.sqrt()?.ok_or(GeometryError::NotASquare)?;
    let s2 = if s1.is_zero() {
        t.t22.sqrt()?.ok_or(GeometryError::NotASquare)?
    } else {
        t.t12.div_exact(&s1).ok_or(GeometryError::NotASquare)?
    };
    let pair = [s1, s2];
    if Sym2Triple::from_pair(&pair) != *t {
        return Err(GeometryError::NotASquare);
    }
    let flip = needs_sign_flip(pair.iter().flat_map(|p| p.terms().rev().map(|(_, c)| c)));
    Ok(if flip { [-&pair[0], -&pair[1]] } else { pair })
}

/// [`recover_sqrt`] for constant triples.
pub fn recover_sqrt_scalars(t: [Scalar; 3]) -> Result<[Scalar; 2], GeometryError> {
    let [a, b, c] = t.map(Poly::constant);
    let [s1, s2] = recover_sqrt(&Sym2Triple::new(a, b, c))?;
    Ok([s1.coeff(Monomial::ONE), s2.coeff(Monomial::ONE)])
}

/// The two square roots `{C, −C}` of a triple as `T(−1)` sections, the
/// sign-normalized one first.
pub fn recover_tm1(t: &Sym2Triple, chart: Chart) -> Result<[Tm1Section; 2], GeometryError> {
    let pair = recover_sqrt(t)?;
    let c = Tm1Section::from_local(chart, &pair).ok_or(GeometryError::NotInModel)?;
    let c = if needs_sign_flip(c.coords()) { c.neg() } else { c };
    let m = c.neg();
    Ok([c, m])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c0() -> Chart {
        Chart::new(0)
    }

    #[test]
    fn tm1_local_representatives() {
        let c = Tm1Section::from_ints([0, 0, 1]);
        assert_eq!(c.local_rep(c0()), [-Poly::z(), -Poly::w()]);
        assert_eq!(c.sym2(c0()), Sym2Triple::new(Poly::z().pow(2), &Poly::z() * &Poly::w(), Poly::w().pow(2)));
        assert!(c.glue().ok());
        for v in [[1, 0, 0], [1, 2, 3], [-4, 0, 7]] {
            let c = Tm1Section::from_ints(v);
            assert!(c.glue().ok());
            for ch in Chart::ALL {
                assert_eq!(Tm1Section::from_local(ch, &c.local_rep(ch)), Some(c.clone()));
            }
        }
    }

    #[test]
    fn zero_points() {
        for v in [[0, 0, 1], [1, 0, 0], [1, 2, 3]] {
            let c = Tm1Section::from_ints(v);
            let p = c.zero_point().unwrap();
            assert_eq!(p, PointP2::new(v.map(Scalar::int)).unwrap());
            for ch in Chart::ALL {
                if let Some((z, w)) = p.chart_coords(ch) {
                    let rep = c.local_rep(ch);
                    assert!(rep[0].eval(&z, &w).is_zero() && rep[1].eval(&z, &w).is_zero());
                }
            }
        }
        assert!(Tm1Section::zero().zero_point().is_err());
    }

    #[test]
    fn tangent_sections() {
        assert_eq!(TangentSection::zero().local_rep(c0()), [Poly::zero(), Poly::zero()]);
        let a = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        assert!(a.matrix().trace().is_zero());
        assert!(a.glue().ok());
        for ch in Chart::ALL {
            assert_eq!(TangentSection::from_local(ch, &a.local_rep(ch)), Some(a.clone()));
        }
        // scalar matrices are the zero vector field
        assert!(TangentSection::from_ints([[2, 0, 0], [0, 2, 0], [0, 0, 2]]).is_zero());
        // a chart-0 pair outside the model
        assert_eq!(TangentSection::from_local(c0(), &[Poly::w().pow(2), Poly::zero()]), None);
    }

    #[test]
    fn products_of_line_and_vector() {
        let l = Form::linear([Scalar::int(1), Scalar::int(-2), Scalar::int(3)]);
        let v = Tm1Section::from_ints([2, 0, 1]);
        let a = TangentSection::product(&l, &v);
        let [s1, s2] = v.local_rep(c0());
        let l0 = l.dehomogenize(c0());
        assert_eq!(a.local_rep(c0()), [&l0 * &s1, &l0 * &s2]);
        let (l2, v2) = a.as_product().unwrap();
        assert_eq!(TangentSection::product(&l2, &v2), a);
        // a nilpotent product: ℓ(v) = 0
        let n = TangentSection::product(&Form::linear([Scalar::zero(), Scalar::one(), Scalar::zero()]), &v);
        assert!(n.as_product().is_some());
        let generic = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        assert!(generic.as_product().is_none());
    }

    #[test]
    fn model_dimensions() {
        let independent = |reps: Vec<[Poly; 2]>| {
            let rows: Vec<Vec<Scalar>> = reps
                .iter()
                .map(|r| r.iter().flat_map(|p| MODEL_MONOMIALS.map(|m| p.coeff(m))).collect())
                .collect();
            Mat::from_rows(rows).rank()
        };
        assert_eq!(independent(Tm1Section::basis().iter().map(|b| b.local_rep(c0())).collect()), 3);
        assert_eq!(independent(TangentSection::basis().iter().map(|b| b.local_rep(c0())).collect()), 8);
        assert_eq!(Form::monomials(1).len(), 3);
        assert_eq!(Form::monomials(2).len(), 6);
    }

    #[test]
    fn recover_examples() {
        let t = Tm1Section::from_ints([0, 0, 1]).sym2(c0());
        let [plus, minus] = recover_tm1(&t, c0()).unwrap();
        assert_eq!(plus, Tm1Section::from_ints([0, 0, 1]));
        assert_eq!(minus, Tm1Section::from_ints([0, 0, -1]));
        assert!(matches!(
            recover_sqrt_scalars([Scalar::int(1), Scalar::int(1), Scalar::int(2)]),
            Err(GeometryError::NotASquare)
        ));
        assert_eq!(recover_sqrt(&Sym2Triple::zero()).unwrap(), [Poly::zero(), Poly::zero()]);
        // (2, 2, 2) = (√2, √2)
        let r = recover_sqrt_scalars([Scalar::int(2), Scalar::int(2), Scalar::int(2)]).unwrap();
        assert_eq!(&r[0] * &r[0], Scalar::int(2));
        assert_eq!(r[0], r[1]);
    }

    #[test]
    fn sym2_squares_glue() {
        let c = Tm1Section::from_ints([2, -1, 3]);
        let triples = Chart::ALL.map(|ch| c.sym2(ch));
        assert!(glue_sym2(&triples, -2).ok());
        let a = TangentSection::from_ints([[1, 2, 0], [0, -3, 5], [4, 1, 2]]);
        assert!(glue_sym2(&Chart::ALL.map(|ch| a.sym2(ch)), 0).ok());
        assert!(!glue_sym2(&triples, 0).ok());
    }
}
