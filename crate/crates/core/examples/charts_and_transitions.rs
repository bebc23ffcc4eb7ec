//! The three standard charts of the projective plane, their coordinate
//! changes and the transition matrices of O(k), T, T(-1) and Sym2 T.

use cohiggs::geometry::{chart_change, cocycle_check, sample_points, transition, Bundle, Chart, PointP2};
use cohiggs::algebra::Scalar;

fn main() {
    let (c0, c1, c2) = (Chart::new(0), Chart::new(1), Chart::new(2));
    let [a, b] = chart_change(c0, c1);
    println!("U0 -> U1: (z, w) |-> ({a}, {b})");

    let p = PointP2::from_chart(c0, Scalar::int(2), Scalar::int(3));
    println!("p = {p}, coordinates on U1: {:?}", p.chart_coords(c1).map(|(x, y)| format!("({x}, {y})")));

    for bundle in [Bundle::Line(1), Bundle::Tangent, Bundle::TangentMinus1, Bundle::Sym2Tangent(0)] {
        println!("{bundle}: g(U0 -> U2) = {}", transition(bundle, c0, c2));
    }

    let points = sample_points(7, 20);
    for bundle in Bundle::CHECKED {
        let r = cocycle_check(bundle, &points);
        println!("cocycle {bundle}: {} points, ok = {}", r.points_checked, r.ok());
    }
}
