//! Seeded random inputs for the verification suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Form, Mat, Monomial, Poly, Scalar};
use crate::cohiggs::{CoHiggsField, CoHiggsK0, CoHiggsK1, CoHiggsK2, CoHiggsKBig};
use crate::geometry::{conic_rank, ConicFactors, LineSection, PointP2, TangentSection, Tm1Section};

/// Default coefficient bound `|n| ≤ 9`.
pub const DEFAULT_BOUND: i64 = 9;

/// Stream `trial` of the generator seeded by `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub struct Gen {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Gen {
    pub fn new(seed: u64, trial: u64, bound: i64) -> Gen {
        Gen { rng: trial_rng(seed, trial), bound: bound.max(1) }
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn nonzero_int(&mut self) -> i64 {
        loop {
            let n = self.int();
            if n != 0 {
                return n;
            }
        }
    }

    fn denominator(&mut self) -> i64 {
        [1, 1, 1, 2, 3][self.rng.gen_range(0..5)]
    }

    /// A small rational, now and then a Gaussian rational.
    pub fn scalar(&mut self) -> Scalar {
        if self.chance(1, 6) {
            let re = (self.int(), self.denominator());
            let im = (self.nonzero_int(), self.denominator());
            return Scalar::gaussian(re, im);
        }
        let d = self.denominator();
        Scalar::ratio(self.int(), d)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Coefficient that vanishes a third of the time, so that every
    /// leading-coefficient pattern turns up.
    fn sparse_scalar(&mut self) -> Scalar {
        if self.chance(1, 3) {
            Scalar::zero()
        } else {
            self.nonzero_scalar()
        }
    }

    /// A chart-0 polynomial of degree at most `d`.
    pub fn poly(&mut self, d: u32) -> Poly {
        let mut terms = Vec::new();
        for total in 0..=d {
            for a in 0..=total {
                terms.push((Monomial(a, total - a), self.sparse_scalar()));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn form(&mut self, d: u32) -> Form {
        let terms: Vec<_> = Form::monomials(d).into_iter().map(|e| (e, self.sparse_scalar())).collect();
        Form::from_terms(d, terms)
    }

    pub fn nonzero_form(&mut self, d: u32) -> Form {
        loop {
            let f = self.form(d);
            if !f.is_zero() {
                return f;
            }
        }
    }

    pub fn line_section(&mut self, k: u32) -> LineSection {
        LineSection::new(self.form(k))
    }

    /// A conic of rank 3.
    pub fn smooth_conic(&mut self) -> LineSection {
        loop {
            let f = self.nonzero_form(2);
            if matches!(conic_rank(&f), Ok(ConicFactors::Smooth)) {
                return LineSection::new(f);
            }
        }
    }

    pub fn tm1(&mut self) -> Tm1Section {
        loop {
            let v = Tm1Section::new([self.sparse_scalar(), self.sparse_scalar(), self.sparse_scalar()]);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn tangent(&mut self) -> TangentSection {
        loop {
            let rows = (0..3).map(|_| (0..3).map(|_| self.sparse_scalar()).collect()).collect();
            let t = TangentSection::new(Mat::from_rows(rows));
            if !t.is_zero() {
                return t;
            }
        }
    }

    /// A section of `T` that is not of the form `ℓ ⊗ v`.
    pub fn indecomposable_tangent(&mut self) -> TangentSection {
        loop {
            let t = self.tangent();
            if t.as_product().is_none() {
                return t;
            }
        }
    }

    pub fn invertible2(&mut self) -> Mat<Scalar> {
        loop {
            let rows = (0..2).map(|_| (0..2).map(|_| self.scalar()).collect()).collect();
            let m: Mat<Scalar> = Mat::from_rows(rows);
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    /// A point with all homogeneous coordinates nonzero.
    pub fn overlap_point(&mut self) -> PointP2 {
        let c = [(); 3].map(|_| {
            let d = self.denominator();
            Scalar::ratio(self.nonzero_int(), d)
        });
        PointP2::new(c).expect("nonzero coordinates")
    }

    pub fn k0(&mut self) -> CoHiggsK0 {
        let lambda = self.line_section(1);
        let mu = self.line_section(2);
        CoHiggsK0::new(lambda, mu, self.tm1()).expect("degrees match")
    }

    /// `[[λ, μ], [μ', −λ]] ⊗ C'` with random linear forms.
    pub fn k1_common_factor(&mut self) -> CoHiggsK1 {
        let (l, m, mp) = (self.form(1), self.form(1), self.form(1));
        CoHiggsK1::from_common_factor(&l, &m, &mp, &self.tm1())
    }

    /// `[[λ, μ], [1, −λ]] ⊗ D` with random constants.
    pub fn k1_constant(&mut self) -> CoHiggsK1 {
        let (l, m) = (self.scalar(), self.scalar());
        CoHiggsK1::from_constant_shape(&l, &m, &self.tangent())
    }

    /// `[[A, κA], [0, −A]]`, which satisfies `A ∧ B = 0`.
    pub fn k1_triangular(&mut self) -> CoHiggsK1 {
        let a = self.tangent();
        let b = a.scale(&self.scalar());
        CoHiggsK1::new(a, b, TangentSection::zero())
    }

    /// An integrable field conjugated by a random invertible constant matrix,
    /// which generically leaves all three entries nonzero.
    pub fn k1_conjugated(&mut self) -> CoHiggsK1 {
        let base = if self.chance(1, 2) { self.k1_triangular() } else { self.k1_common_factor() };
        let p = self.invertible2();
        conjugate_k1(&base, &p)
    }

    /// Three unconstrained sections of `T`.
    pub fn k1_free(&mut self) -> CoHiggsK1 {
        CoHiggsK1::new(self.tangent(), self.tangent(), self.tangent())
    }

    pub fn k2(&mut self) -> CoHiggsK2 {
        let (f, g) = (self.poly(1), self.poly(2));
        let h = self.scalar();
        CoHiggsK2::new(f, g, h, self.tm1()).expect("degrees match")
    }

    pub fn kbig(&mut self) -> CoHiggsKBig {
        let k = 4 + self.below(7) as u32;
        let rho = self.smooth_conic();
        let lambda = self.nonzero_scalar();
        CoHiggsKBig::new(k, rho, lambda, self.tm1()).expect("valid data")
    }

    pub fn any_field(&mut self) -> CoHiggsField {
        match self.below(5) {
            0 => CoHiggsField::K0(self.k0()),
            1 => CoHiggsField::K1(self.k1_free()),
            2 => CoHiggsField::K1(self.k1_conjugated()),
            3 => CoHiggsField::K2(self.k2()),
            _ => CoHiggsField::KBig(self.kbig()),
        }
    }
}

/// `P φ P⁻¹` entrywise on the coefficient sections.
pub fn conjugate_k1(f: &CoHiggsK1, p: &Mat<Scalar>) -> CoHiggsK1 {
    let pi = p.inverse().expect("invertible");
    let (p00, p01, p10, p11) = (p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1));
    let (q00, q01, q10, q11) = (pi.get(0, 0), pi.get(0, 1), pi.get(1, 0), pi.get(1, 1));
    let comb = |x: &[(&Scalar, &TangentSection)]| {
        x.iter().fold(TangentSection::zero(), |acc, (s, t)| {
            TangentSection::new(acc.matrix().add(t.scale(s).matrix()))
        })
    };
    // φ = [[A, B], [C, −A]]: first Pφ, then (Pφ)P⁻¹
    let na = f.a.neg();
    let m00 = comb(&[(p00, &f.a), (p01, &f.c)]);
    let m01 = comb(&[(p00, &f.b), (p01, &na)]);
    let m10 = comb(&[(p10, &f.a), (p11, &f.c)]);
    let m11 = comb(&[(p10, &f.b), (p11, &na)]);
    let a = comb(&[(q00, &m00), (q10, &m01)]);
    let b = comb(&[(q01, &m00), (q11, &m01)]);
    let c = comb(&[(q00, &m10), (q10, &m11)]);
    CoHiggsK1::new(a, b, c)
}

/// Twenty `k = 1` fields whose component matrices do not commute: upper
/// triangular `[[A, B], [0, −A]]` with `A ∧ B ≠ 0`.
pub fn noncommuting_k1_library() -> Vec<CoHiggsK1> {
    let basis = TangentSection::basis();
    let n = basis.len();
    let mut out = Vec::new();
    'outer: for step in 1..n {
        for i in 0..n {
            let (a, b) = (&basis[i], &basis[(i + step) % n]);
            let [a1, a2] = a.local_rep(crate::geometry::Chart::new(0));
            let [b1, b2] = b.local_rep(crate::geometry::Chart::new(0));
            let wedge = &(&a1 * &b2) - &(&a2 * &b1);
            if !wedge.is_zero() {
                out.push(CoHiggsK1::new(a.clone(), b.clone(), TangentSection::zero()));
                if out.len() == 20 {
                    break 'outer;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohiggs::integrable;
    use crate::geometry::Chart;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<Scalar> = {
            let mut g = Gen::new(7, 3, DEFAULT_BOUND);
            (0..10).map(|_| g.scalar()).collect()
        };
        let mut g = Gen::new(7, 3, DEFAULT_BOUND);
        let b: Vec<Scalar> = (0..10).map(|_| g.scalar()).collect();
        assert_eq!(a, b);
        let mut h = Gen::new(7, 4, DEFAULT_BOUND);
        let c: Vec<Scalar> = (0..10).map(|_| h.scalar()).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn conjugation_preserves_integrability() {
        let mut g = Gen::new(1, 0, DEFAULT_BOUND);
        for _ in 0..5 {
            let f = CoHiggsField::K1(g.k1_conjugated());
            assert!(integrable(&f, Chart::new(0)).unwrap());
        }
    }

    #[test]
    fn library_has_twenty_noncommuting_fields() {
        let lib = noncommuting_k1_library();
        assert_eq!(lib.len(), 20);
        for f in lib {
            assert!(!integrable(&CoHiggsField::K1(f), Chart::new(0)).unwrap());
        }
    }
}
