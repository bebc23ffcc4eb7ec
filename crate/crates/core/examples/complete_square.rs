//! Writing s = lambda^2 + mu for a polynomial of degree at most 2, in each
//! of the four coefficient patterns.

use cohiggs::algebra::{Monomial, Poly, Scalar};
use cohiggs::classify::complete_square;

fn poly(t: &[((u32, u32), i64)]) -> Poly {
    Poly::from_terms(t.iter().map(|&((a, b), c)| (Monomial(a, b), Scalar::int(c))))
}

fn main() {
    for s in [
        poly(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1), ((1, 0), 2), ((0, 1), 2), ((0, 0), 1)]),
        poly(&[((2, 0), 2), ((0, 2), 1), ((0, 0), 3)]),
        poly(&[((0, 2), 3), ((1, 1), 1), ((1, 0), -1)]),
        poly(&[((1, 1), 1)]),
        poly(&[((1, 0), 4), ((0, 1), -1), ((0, 0), 7)]),
    ] {
        let d = complete_square(&s).unwrap();
        println!("s = {s}\n  case {}: lambda = {}, mu = {}", d.case, d.lambda, d.mu);
        if let Some((l, m)) = &d.rotated {
            println!("  rotated: lambda = {l}, mu = {m}");
        }
        println!("  extension adjoined: {}; check: {}", d.extended, &(&d.lambda * &d.lambda) + &d.mu == s);
    }
}
