use proptest::prelude::*;

use cohiggs::algebra::{Form, Mat, Monomial, Poly, Scalar};
use cohiggs::classify::{
    canonicalize_pm, canonicalize_qc, complete_square, decompose_linear_product, image_equal, invariant_equal,
    structure_image, ImagePoint,
};
use cohiggs::cohiggs::{det_glue, integrable, CoHiggsField, CoHiggsK0, DetStructure};
use cohiggs::geometry::{recover_tm1, sym2_matrix, Chart, LineSection, TangentSection, Tm1Section};

fn gaussian() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -3i64..=3).prop_map(|(n, d, im)| {
        if im == 0 {
            Scalar::ratio(n, d)
        } else {
            Scalar::gaussian((n, d), (im, 1))
        }
    })
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    gaussian().prop_filter("nonzero", |s| !s.is_zero())
}

fn quadratic() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(gaussian(), 6).prop_map(|c| {
        let exps = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
        Poly::from_terms(exps.iter().zip(c).map(|(&(a, b), c)| (Monomial(a, b), c)))
    })
}

fn form(d: u32) -> impl Strategy<Value = Form> {
    let exps: Vec<[u32; 3]> =
        (0..=d).flat_map(|a| (0..=d - a).map(move |b| [a, b, d - a - b])).collect();
    proptest::collection::vec(gaussian(), exps.len())
        .prop_map(move |c| Form::from_terms(d, exps.iter().copied().zip(c)))
}

fn tm1() -> impl Strategy<Value = Tm1Section> {
    [gaussian(), gaussian(), gaussian()].prop_map(Tm1Section::new)
}

fn tangent() -> impl Strategy<Value = TangentSection> {
    proptest::collection::vec(gaussian(), 9).prop_map(|e| {
        TangentSection::new(Mat::from_rows(e.chunks(3).map(|r| r.to_vec()).collect()))
    })
}

fn mat2() -> impl Strategy<Value = Mat<Scalar>> {
    proptest::collection::vec(gaussian(), 4).prop_map(|e| Mat::from_rows(vec![e[..2].to_vec(), e[2..].to_vec()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_completion_reconstructs(s in quadratic()) {
        let d = complete_square(&s).unwrap();
        prop_assert_eq!(&(&d.lambda * &d.lambda) + &d.mu, s);
        prop_assert!(d.lambda.degree() <= 1);
    }

    #[test]
    fn linear_product_reconstructs(s in quadratic()) {
        let r = decompose_linear_product(&s).unwrap();
        prop_assert_eq!(&(&r.lambda * &r.lambda) + &(&r.mu * &r.mu_prime), s);
        prop_assert!(r.mu.degree() <= 1 && r.mu_prime.degree() <= 1);
    }

    #[test]
    fn sym2_is_multiplicative(g in mat2(), h in mat2()) {
        prop_assert_eq!(sym2_matrix(&g.mul(&h)), sym2_matrix(&g).mul(&sym2_matrix(&h)));
        prop_assert_eq!(sym2_matrix(&g).det(), g.det().pow(3));
    }

    #[test]
    fn sections_glue(a in tangent(), c in tm1(), q in form(2)) {
        prop_assert!(a.glue().ok());
        prop_assert!(c.glue().ok());
        prop_assert!(LineSection::new(q).glue().ok());
    }

    #[test]
    fn sym2_determines_section_up_to_sign(c in tm1(), chart in 0usize..3) {
        prop_assume!(!c.is_zero());
        let ch = Chart::new(chart);
        let roots = recover_tm1(&c.sym2(ch), ch).unwrap();
        prop_assert!(roots.contains(&c) && roots.contains(&c.neg()));
    }

    #[test]
    fn sign_canonicalization(a in tangent(), c in tm1()) {
        let ca = canonicalize_pm(&a);
        prop_assert_eq!(canonicalize_pm(&ca), ca.clone());
        prop_assert_eq!(canonicalize_pm(&a.neg()), ca);
        prop_assert_eq!(canonicalize_pm(&c.neg()), canonicalize_pm(&c));
    }

    #[test]
    fn qc_canonical_form_is_an_orbit_invariant(q in form(2), c in tm1(), alpha in nonzero()) {
        prop_assume!(!c.is_zero());
        let q = LineSection::new(q);
        let base = canonicalize_qc(&q, &c).unwrap();
        prop_assert_eq!(canonicalize_qc(&base.0, &base.1).unwrap(), base.clone());
        let moved = canonicalize_qc(&q.scale(&(&alpha * &alpha)), &c.scale(&alpha.inv().unwrap())).unwrap();
        prop_assert_eq!(moved, base);
    }

    #[test]
    fn canonical_and_invariant_equality_agree(q1 in form(2), q2 in form(2), c1 in tm1(), c2 in tm1()) {
        let point = |q: Form, c: Tm1Section| {
            let q = LineSection::new(q);
            if q.is_zero() || c.is_zero() {
                ImagePoint::Zero
            } else {
                structure_image(&DetStructure::QSym2 { q, c }).unwrap()
            }
        };
        let (a, b) = (point(q1, c1), point(q2, c2));
        prop_assert_eq!(image_equal(&a, &b), invariant_equal(&a, &b));
    }

    #[test]
    fn k0_fields_commute_and_their_determinants_glue(l in form(1), m in form(2), c in tm1()) {
        let f = CoHiggsField::K0(CoHiggsK0::new(LineSection::new(l), LineSection::new(m), c).unwrap());
        for ch in Chart::ALL {
            prop_assert!(integrable(&f, ch).unwrap());
        }
        prop_assert!(det_glue(&f).unwrap().ok());
    }
}
