//! Sparse polynomials in the chart coordinates, ternary forms and
//! rational functions.

use cohiggs::algebra::{Form, Poly, RatFunc, Scalar};
use cohiggs::geometry::Chart;

fn main() {
    let (z, w) = (Poly::z(), Poly::w());
    let p = &(&z + &w).pow(2) - &Poly::constant(Scalar::int(1));
    println!("p = {p}, degree {}", p.degree());
    println!("dp/dz = {}", p.derivative(0));
    println!("p(1/2, 3) = {}", p.eval(&Scalar::ratio(1, 2), &Scalar::int(3)));

    let q = p.homogenize(2).unwrap();
    println!("homogenized: {q}");
    for ch in Chart::ALL {
        println!("  on {ch}: {}", q.dehomogenize(ch));
    }
    let l = Form::linear([Scalar::int(1), Scalar::int(-1), Scalar::zero()]);
    println!("(x0 - x1)^2 = {}", &l * &l);

    let f = RatFunc::new(Poly::one(), z.clone());
    let g = &f * &RatFunc::from(&z * &w);
    println!("(1/z) * zw = {g}, polynomial: {:?}", g.as_poly().map(|p| p.to_string()));
    println!("(z^2 - w^2) / (z + w) = {}", (&z.pow(2) - &w.pow(2)).div_exact(&(&z + &w)).unwrap());
}
