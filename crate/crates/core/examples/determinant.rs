//! The determinant of a co-Higgs field as a section of Sym2 T, with its
//! factored form and the gluing check.

use cohiggs::algebra::{Form, Scalar};
use cohiggs::cohiggs::{det_glue, determinant, determinant_on, CoHiggsField, CoHiggsK1, CoHiggsKBig};
use cohiggs::geometry::{Chart, LineSection, TangentSection, Tm1Section};

fn main() {
    let d = TangentSection::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
    let f = CoHiggsField::K1(CoHiggsK1::from_constant_shape(&Scalar::int(1), &Scalar::int(1), &d));
    let det = determinant(&f).unwrap();
    println!("k = 1 constant shape: det on U0 = {}", det.triple);
    println!("  structure: {}", det.structure.unwrap());
    for ch in Chart::ALL {
        println!("  on {ch}: {}", determinant_on(&f, ch).unwrap());
    }
    println!("  glues: {}", det_glue(&f).unwrap().ok());

    let rho = LineSection::new(Form::from_terms(
        2,
        [([2, 0, 0], Scalar::one()), ([1, 1, 0], Scalar::one()), ([0, 0, 2], Scalar::one())],
    ));
    let big = CoHiggsField::KBig(CoHiggsKBig::new(6, rho, Scalar::int(-3), Tm1Section::from_ints([0, 1, 1])).unwrap());
    let det = determinant(&big).unwrap();
    println!("k = 6: det on U0 = {}\n  structure: {}", det.triple, det.structure.unwrap());
}
