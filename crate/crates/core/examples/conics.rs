//! Rank of a plane conic and its linear factors when it has them.

use cohiggs::algebra::{Form, Scalar};
use cohiggs::geometry::{conic_rank, ConicFactors};

fn show(name: &str, q: &Form) {
    match conic_rank(q).unwrap() {
        ConicFactors::DoubleLine(l) => println!("{name}: rank 1, ({l})^2"),
        ConicFactors::LinePair(a, b) => println!("{name}: rank 2, ({a}) * ({b})"),
        ConicFactors::Smooth => println!("{name}: rank 3, smooth"),
    }
}

fn main() {
    let f = |t: &[([u32; 3], i64)]| Form::from_terms(2, t.iter().map(|&(e, c)| (e, Scalar::int(c))));
    show("x0^2 + 2 x0 x1 + x1^2", &f(&[([2, 0, 0], 1), ([1, 1, 0], 2), ([0, 2, 0], 1)]));
    show("x0 x1", &f(&[([1, 1, 0], 1)]));
    show("x0^2 + x1^2", &f(&[([2, 0, 0], 1), ([0, 2, 0], 1)]));
    show("x0^2 - 2 x2^2", &f(&[([2, 0, 0], 1), ([0, 0, 2], -2)]));
    show("x0^2 + x1^2 + x2^2", &f(&[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], 1)]));
}
