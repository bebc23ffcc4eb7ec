//! Every conic is -F^2 - GH for a k = 2 field, and the chart-0 form of
//! phi0 extends to chart 1 exactly when the degree bounds hold.

use cohiggs::algebra::{Form, Poly, Scalar};
use cohiggs::cohiggs::{phi0_for_target, phi0_glue_check};
use cohiggs::geometry::LineSection;

fn main() {
    let q = LineSection::new(Form::from_terms(2, [([2, 0, 0], Scalar::one()), ([0, 1, 1], Scalar::int(-2))]));
    let (f, g, h) = phi0_for_target(&q);
    println!("q = {q}: F = {f}, G = {g}, H = {h}");

    let (z, w) = (Poly::z(), Poly::w());
    for (name, f, g, h) in [
        ("F = z, G = w^2, H = 1", z.clone(), w.pow(2), Poly::one()),
        ("H = z", Poly::zero(), Poly::zero(), z.clone()),
        ("G = z^3", Poly::zero(), z.pow(3), Poly::zero()),
    ] {
        let r = phi0_glue_check(&f, &g, &h);
        println!("{name}: extends = {}, chart-1 entries = {:?}", r.solvable, r.chart1.map(|(a, b, c)| format!("{a}, {b}, {c}")));
    }
}
