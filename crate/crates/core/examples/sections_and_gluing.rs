//! Global sections of O(k), T(-1) and T, their local representatives and
//! the gluing check, plus recovering C from Sym2(C) up to sign.

use cohiggs::algebra::{Form, Scalar};
use cohiggs::geometry::{recover_tm1, Chart, LineSection, TangentSection, Tm1Section};

fn main() {
    let q = LineSection::new(Form::from_terms(2, [([1, 1, 0], Scalar::one()), ([0, 0, 2], Scalar::int(-1))]));
    println!("q = {q}; glues: {}", q.glue().ok());

    let c = Tm1Section::from_ints([1, -2, 3]);
    for ch in Chart::ALL {
        let [s1, s2] = c.local_rep(ch);
        println!("C on {ch}: ({s1}, {s2})");
    }
    println!("C vanishes at {}", c.zero_point().unwrap());

    let a = TangentSection::from_ints([[1, 2, 0], [0, -1, 1], [3, 0, 0]]);
    println!("A = {a}; glues: {}", a.glue().ok());
    println!("dim H0(T) = {}, dim H0(T(-1)) = {}", TangentSection::basis().len(), Tm1Section::basis().len());

    let t = c.sym2(Chart::new(0));
    let [plus, minus] = recover_tm1(&t, Chart::new(0)).unwrap();
    println!("Sym2(C) = {t} recovers {plus} and {minus}");
}
