//! Canonical representatives under (q, C) ~ (a^2 q, C/a), A ~ -A and the
//! absorption of lambda into C for k > 3.

use cohiggs::algebra::{Form, Scalar};
use cohiggs::classify::{canonicalize_pm, canonicalize_qc, canonicalize_rho};
use cohiggs::geometry::{LineSection, TangentSection, Tm1Section};

fn main() {
    let q = LineSection::new(Form::from_terms(2, [([1, 1, 0], Scalar::int(3))]));
    let c = Tm1Section::from_ints([0, -2, 4]);
    let (cq, cc) = canonicalize_qc(&q, &c).unwrap();
    println!("(q, C) = ({q}, {c}) -> ({cq}, {cc})");
    let alpha = Scalar::gaussian((1, 1), (2, 1));
    let moved = canonicalize_qc(&q.scale(&(&alpha * &alpha)), &c.scale(&alpha.inv().unwrap())).unwrap();
    println!("same orbit, alpha = {alpha}: identical = {}", moved == (cq, cc));

    let a = TangentSection::from_ints([[0, -3, 1], [0, 0, 2], [1, 0, 0]]);
    println!("A = {a} -> {}", canonicalize_pm(&a));

    let rho = LineSection::new(Form::from_terms(2, [([2, 0, 0], Scalar::int(2)), ([0, 2, 0], Scalar::int(2)), ([0, 0, 2], Scalar::int(2))]));
    let (r, ct) = canonicalize_rho(&Scalar::int(2), &rho, &Tm1Section::from_ints([-1, 0, 1])).unwrap();
    println!("lambda = 2, rho = {rho} -> rho = {r}, C~ = {ct}");
}
