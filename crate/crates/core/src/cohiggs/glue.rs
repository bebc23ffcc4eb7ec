//! The chart-0 to chart-1 gluing relation for `φ₀ ∈ H⁰(End₀T ⊗ O(1))` and
//! the surjectivity construction `q = −F² − GH`.
//!
//! The relation is `Φ₀ · J = L · Φ₁(z/w, 1/w)` with `J` the Jacobian of
//! `[z:w:1] → [z:1:w]` and `L = [[1, −z/w], [0, −1/w]] = w·J`.

use crate::algebra::{Mat, Poly, RatFunc, Scalar};
use crate::geometry::{chart_change, golden_tangent_transitions, Chart, LineSection};

/// Outcome of solving the gluing relation for the chart-1 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Phi0Glue {
    /// `(f, g, h)` when the chart-1 entries are polynomials; `None` otherwise.
    pub chart1: Option<(Poly, Poly, Poly)>,
    pub solvable: bool,
}

pub fn phi0_glue_check(f: &Poly, g: &Poly, h: &Poly) -> Phi0Glue {
    let [(_, _, _, g12), ..] = golden_tangent_transitions();
    let z = RatFunc::from(Poly::z());
    let w = RatFunc::from(Poly::w());
    let l = Mat::from_rows(vec![
        vec![RatFunc::one(), -&(&z / &w)],
        vec![RatFunc::zero(), -&w.inv().expect("nonzero")],
    ]);
    let phi0 = Mat::from_rows(vec![
        vec![RatFunc::from(f.clone()), RatFunc::from(g.clone())],
        vec![RatFunc::from(h.clone()), RatFunc::from(-f)],
    ]);
    let phi1 = l.inverse().expect("invertible").mul(&phi0).mul(&g12);
    // express in chart-1 coordinates: z = z'/w', w = 1/w'
    let local = phi1.substitute(&chart_change(Chart::new(1), Chart::new(0)));
    let Some(p) = local.try_map(RatFunc::as_poly) else {
        return Phi0Glue { chart1: None, solvable: false };
    };
    let (pf, pg, ph) = (p.get(0, 0).clone(), p.get(0, 1).clone(), p.get(1, 0).clone());
    let traceless = (p.get(0, 0) + p.get(1, 1)).is_zero();
    let solvable = traceless && ph.is_constant() && pf.degree() <= 1 && pg.degree() <= 2;
    Phi0Glue { chart1: Some((pf, pg, ph)), solvable }
}

/// `(F, G, H)` with `−F² − GH` equal to the chart-0 representative of `q`.
pub fn phi0_for_target(q: &LineSection) -> (Poly, Poly, Scalar) {
    let q0 = q.local_rep(Chart::new(0));
    if q0.is_zero() {
        return (Poly::zero(), Poly::zero(), Scalar::zero());
    }
    (Poly::zero(), -&q0, Scalar::one())
}
