//! Image points of the determinant map, recovered from structured data or
//! from the bare triple, and compared in two independent ways.

use cohiggs::algebra::{Form, Scalar};
use cohiggs::classify::{image_equal, image_point, invariant_equal};
use cohiggs::cohiggs::{determinant, CoHiggsField, CoHiggsK0, DetSection};
use cohiggs::geometry::{LineSection, Tm1Section};

fn k0(mu: i64, c: [i64; 3]) -> CoHiggsField {
    CoHiggsField::K0(
        CoHiggsK0::new(
            LineSection::new(Form::linear([Scalar::int(1), Scalar::zero(), Scalar::zero()])),
            LineSection::new(Form::from_terms(2, [([0, 1, 1], Scalar::int(mu))])),
            Tm1Section::from_ints(c),
        )
        .unwrap(),
    )
}

fn main() {
    let d = determinant(&k0(2, [2, 0, 4])).unwrap();
    let p = image_point(&d).unwrap();
    println!("structured: {p}");
    let raw = image_point(&DetSection { structure: None, ..d }).unwrap();
    println!("from the triple alone: {raw}");
    println!("equal: canonical {}, invariant {}", image_equal(&p, &raw), invariant_equal(&p, &raw));

    let other = image_point(&determinant(&k0(3, [2, 0, 4])).unwrap()).unwrap();
    println!("different mu: canonical {}, invariant {}", image_equal(&p, &other), invariant_equal(&p, &other));
}
