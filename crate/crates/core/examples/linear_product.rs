//! Writing s = lambda^2 + mu mu' with all three of degree at most 1.

use cohiggs::algebra::{Monomial, Poly, Scalar};
use cohiggs::classify::decompose_linear_product;

fn main() {
    let p = |t: &[((u32, u32), i64)]| Poly::from_terms(t.iter().map(|&((a, b), c)| (Monomial(a, b), Scalar::int(c))));
    for s in [
        p(&[((1, 1), 1)]),
        p(&[((2, 0), 1), ((0, 2), 1)]),
        p(&[((2, 0), 1), ((1, 1), 1), ((0, 0), 1)]),
        p(&[((2, 0), 1), ((0, 2), 1), ((0, 0), 1)]),
        p(&[((1, 1), 2), ((0, 1), 3), ((0, 0), -5)]),
    ] {
        let r = decompose_linear_product(&s).unwrap();
        let back = &(&r.lambda * &r.lambda) + &(&r.mu * &r.mu_prime);
        println!("{s} = ({})^2 + ({}) * ({})   [{}]", r.lambda, r.mu, r.mu_prime, back == s);
    }
}
