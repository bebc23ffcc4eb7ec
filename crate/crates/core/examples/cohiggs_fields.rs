//! Building co-Higgs fields for each index and testing integrability.

use cohiggs::algebra::{Form, Poly, Scalar};
use cohiggs::cohiggs::{integrability_obstruction, integrable, CoHiggsField, CoHiggsK0, CoHiggsK1, CoHiggsK2};
use cohiggs::geometry::{Chart, LineSection, TangentSection, Tm1Section};

fn main() {
    let c = Tm1Section::from_ints([1, 0, 2]);
    let k0 = CoHiggsField::K0(
        CoHiggsK0::new(
            LineSection::new(Form::linear([Scalar::int(1), Scalar::zero(), Scalar::int(-1)])),
            LineSection::new(Form::from_terms(2, [([0, 2, 0], Scalar::int(3))])),
            c.clone(),
        )
        .unwrap(),
    );
    let k2 = CoHiggsField::K2(CoHiggsK2::new(Poly::z(), Poly::w().pow(2), Scalar::int(2), c).unwrap());

    let a = TangentSection::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 0]]);
    let b = TangentSection::from_ints([[0, 1, 0], [0, 0, 0], [0, 0, 0]]);
    let bad = CoHiggsField::K1(CoHiggsK1::new(a.clone(), b, TangentSection::zero()));
    let good = CoHiggsField::K1(CoHiggsK1::new(a.clone(), a.scale(&Scalar::int(3)), TangentSection::zero()));

    for (name, f) in [("k0", &k0), ("k2", &k2), ("k1 A^B != 0", &bad), ("k1 B = 3A", &good)] {
        let verdicts: Vec<bool> = Chart::ALL.iter().map(|&ch| integrable(f, ch).unwrap()).collect();
        println!("{name}: integrable on U0, U1, U2 = {verdicts:?}");
    }
    println!("[phi_z, phi_w] for the bad field: {}", integrability_obstruction(&bad, Chart::new(0)).unwrap());
    println!("k2 local phi on U0: {:?}", k2.local(Chart::new(0)).unwrap().phi_z.to_string());
}
