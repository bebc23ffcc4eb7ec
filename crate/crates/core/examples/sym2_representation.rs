//! The symmetric-square representation of 2x2 matrices.

use cohiggs::algebra::{Mat, Scalar};
use cohiggs::geometry::sym2_matrix;

fn main() {
    let swap = Mat::from_ints(&[&[0, 1], &[1, 0]]);
    println!("Sym2([[0,1],[1,0]]) = {}", sym2_matrix(&swap));

    let g = Mat::from_ints(&[&[1, 2], &[3, 5]]);
    let h = Mat::from_rows(vec![
        vec![Scalar::ratio(1, 2), Scalar::i()],
        vec![Scalar::int(-1), Scalar::int(4)],
    ]);
    let lhs = sym2_matrix(&g.mul(&h));
    let rhs = sym2_matrix(&g).mul(&sym2_matrix(&h));
    println!("Sym2(gh) = Sym2(g) Sym2(h): {}", lhs == rhs);
    println!("det Sym2(g) = {}, (det g)^3 = {}", sym2_matrix(&g).det(), g.det().pow(3));
}
