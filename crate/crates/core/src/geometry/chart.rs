//! The standard three-chart atlas of the projective plane.
//!
//! Chart 0 is `[z:w:1]`, chart 1 is `[z:1:w]` and chart 2 is `[1:z:w]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, RatFunc, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chart(u8);

impl Chart {
    pub const ALL: [Chart; 3] = [Chart(0), Chart(1), Chart(2)];

    pub fn new(index: usize) -> Chart {
        assert!(index < 3, "chart index {index} out of range");
        Chart(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Homogeneous coordinate that is set to 1 on this chart.
    pub fn unit_coord(self) -> usize {
        2 - self.index()
    }

    /// Homogeneous coordinates that become `(z, w)`, in that order.
    pub fn affine_coords(self) -> (usize, usize) {
        match self.0 {
            0 => (0, 1),
            1 => (0, 2),
            _ => (1, 2),
        }
    }
}

/// Coordinates of chart `to` as rational functions of the coordinates of
/// chart `from`.
pub fn chart_change(from: Chart, to: Chart) -> [RatFunc; 2] {
    let (a, b) = from.affine_coords();
    let mut x = [RatFunc::one(), RatFunc::one(), RatFunc::one()];
    x[a] = RatFunc::from(Poly::z());
    x[b] = RatFunc::from(Poly::w());
    let (ta, tb) = to.affine_coords();
    let u = &x[to.unit_coord()];
    [&x[ta] / u, &x[tb] / u]
}

/// The homogeneous coordinate `x_k` as a polynomial in the coordinates of `chart`.
pub fn homogeneous_coord(chart: Chart, k: usize) -> Poly {
    let (a, b) = chart.affine_coords();
    if k == a {
        Poly::z()
    } else if k == b {
        Poly::w()
    } else {
        Poly::one()
    }
}

/// A point of the projective plane; equality is up to a nonzero multiple.
#[derive(Clone, Debug)]
pub struct PointP2 {
    coords: [Scalar; 3],
}

impl PointP2 {
    pub fn new(coords: [Scalar; 3]) -> Option<PointP2> {
        if coords.iter().all(Scalar::is_zero) {
            None
        } else {
            Some(PointP2 { coords })
        }
    }

    pub fn from_chart(chart: Chart, z: Scalar, w: Scalar) -> PointP2 {
        let (a, b) = chart.affine_coords();
        let mut coords = [Scalar::one(), Scalar::one(), Scalar::one()];
        coords[a] = z;
        coords[b] = w;
        PointP2 { coords }
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn in_chart(&self, chart: Chart) -> bool {
        !self.coords[chart.unit_coord()].is_zero()
    }

    /// Affine coordinates in `chart`, or `None` off the chart.
    pub fn chart_coords(&self, chart: Chart) -> Option<(Scalar, Scalar)> {
        let u = self.coords[chart.unit_coord()].inv()?;
        let (a, b) = chart.affine_coords();
        Some((&self.coords[a] * &u, &self.coords[b] * &u))
    }

    /// True when no homogeneous coordinate vanishes, i.e. the point lies on
    /// the triple overlap of the three charts.
    pub fn on_triple_overlap(&self) -> bool {
        self.coords.iter().all(|c| !c.is_zero())
    }
}

impl PartialEq for PointP2 {
    fn eq(&self, o: &PointP2) -> bool {
        let (a, b) = (&self.coords, &o.coords);
        (0..3).all(|i| (0..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }
}

impl fmt::Display for PointP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{}", self.0)
    }
}
