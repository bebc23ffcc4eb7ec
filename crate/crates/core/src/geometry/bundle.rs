//! Transition data for the bundles used here, derived from the chart maps,
//! together with gluing and cocycle checks.
//!
//! Conventions: a local representative on chart `i` is a column vector of
//! functions of chart-`i` coordinates, and `transition(b, i, j)` is the
//! matrix `g_ij` (in chart-`i` coordinates) with `v_j = g_ij · v_i` on the
//! overlap.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::chart::{chart_change, homogeneous_coord, Chart, PointP2};
use crate::algebra::{Mat, Poly, RatFunc, Ring, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bundle {
    /// `O(k)`.
    Line(i32),
    /// `T(−1)`.
    TangentMinus1,
    /// `T`.
    Tangent,
    /// `Sym²T ⊗ O(m)`; local vectors use the coefficient basis `(t₁₁, 2t₁₂, t₂₂)`.
    Sym2Tangent(i32),
}

impl Bundle {
    pub fn rank(self) -> usize {
        match self {
            Bundle::Line(_) => 1,
            Bundle::TangentMinus1 | Bundle::Tangent => 2,
            Bundle::Sym2Tangent(_) => 3,
        }
    }

    pub const CHECKED: [Bundle; 6] = [
        Bundle::Line(1),
        Bundle::Line(2),
        Bundle::Tangent,
        Bundle::TangentMinus1,
        Bundle::Sym2Tangent(0),
        Bundle::Sym2Tangent(-2),
    ];
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bundle::Line(k) => write!(f, "O({k})"),
            Bundle::TangentMinus1 => write!(f, "T(-1)"),
            Bundle::Tangent => write!(f, "T"),
            Bundle::Sym2Tangent(0) => write!(f, "Sym2 T"),
            Bundle::Sym2Tangent(m) => write!(f, "Sym2 T ⊗ O({m})"),
        }
    }
}

/// `1 / x_u` in chart-`from` coordinates, where `x_u` is the unit coordinate
/// of chart `to`: the `O(1)` transition.
fn line_factor(from: Chart, to: Chart) -> RatFunc {
    RatFunc::from(homogeneous_coord(from, to.unit_coord())).inv().expect("nonzero coordinate")
}

/// Jacobian of the chart change `from → to`, in chart-`from` coordinates.
pub fn jacobian(from: Chart, to: Chart) -> Mat<RatFunc> {
    let target = chart_change(from, to);
    let mut j = Mat::zeros(2, 2);
    for (r, f) in target.iter().enumerate() {
        for c in 0..2 {
            j.set(r, c, f.derivative(c));
        }
    }
    j
}

/// The symmetric-square representation in the basis `{e₁², e₁e₂, e₂²}`,
/// acting on coefficient vectors `(s₁², 2s₁s₂, s₂²)`.
pub fn sym2_matrix<T: Ring>(g: &Mat<T>) -> Mat<T> {
    assert!(g.rows() == 2 && g.cols() == 2, "sym2_matrix needs a 2x2 matrix");
    let (a, b, c, d) = (g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1));
    let two = T::one().plus(&T::one());
    Mat::from_rows(vec![
        vec![a.times(a), a.times(b), b.times(b)],
        vec![two.times(&c.times(a)), d.times(a).plus(&c.times(b)), two.times(&d.times(b))],
        vec![c.times(c), c.times(d), d.times(d)],
    ])
}

pub fn transition(bundle: Bundle, from: Chart, to: Chart) -> Mat<RatFunc> {
    if from == to {
        return Mat::identity(bundle.rank());
    }
    let lf = line_factor(from, to);
    match bundle {
        Bundle::Line(k) => Mat::from_rows(vec![vec![lf.pow(k)]]),
        Bundle::Tangent => jacobian(from, to),
        Bundle::TangentMinus1 => jacobian(from, to).scale(&lf.pow(-1)),
        Bundle::Sym2Tangent(m) => sym2_matrix(&jacobian(from, to)).scale(&lf.pow(m)),
    }
}

/// Outcome of comparing local representatives over every ordered chart pair.
#[derive(Clone, Debug, Default)]
pub struct GlueReport {
    pub mismatches: Vec<(Chart, Chart)>,
}

impl GlueReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `v_j = g_ij · v_i` as rational-function identities on every overlap.
pub fn glue_check(bundle: Bundle, reps: &[Vec<RatFunc>; 3]) -> GlueReport {
    let mut report = GlueReport::default();
    for i in Chart::ALL {
        for j in Chart::ALL {
            if i == j {
                continue;
            }
            let g = transition(bundle, i, j);
            let vi = Mat::from_rows(reps[i.index()].iter().map(|f| vec![f.clone()]).collect());
            let moved = g.mul(&vi);
            let images = chart_change(i, j);
            let ok = reps[j.index()]
                .iter()
                .enumerate()
                .all(|(r, f)| f.substitute(&images) == *moved.get(r, 0));
            if !ok {
                report.mismatches.push((i, j));
            }
        }
    }
    report
}

/// [`glue_check`] for polynomial representatives.
pub fn glue_check_poly(bundle: Bundle, reps: &[Vec<Poly>; 3]) -> GlueReport {
    let lift = |v: &Vec<Poly>| v.iter().cloned().map(RatFunc::from).collect::<Vec<_>>();
    glue_check(bundle, &[lift(&reps[0]), lift(&reps[1]), lift(&reps[2])])
}

/// Evaluates `g_20 · g_12 · g_01` at a point of the triple overlap, each
/// factor in its own chart's coordinates.
fn cycle_product(g01: &Mat<RatFunc>, g12: &Mat<RatFunc>, g20: &Mat<RatFunc>, p: &PointP2) -> Option<Mat<Scalar>> {
    let at = |g: &Mat<RatFunc>, c: usize| {
        let (z, w) = p.chart_coords(Chart::new(c))?;
        g.eval(&z, &w)
    };
    let a = at(g01, 0)?;
    let b = at(g12, 1)?;
    let c = at(g20, 2)?;
    Some(c.mul(&b).mul(&a))
}

#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub label: String,
    pub points_checked: usize,
    /// Points where the product is not the identity.
    pub failures: Vec<PointP2>,
    /// Points skipped because some transition has a pole there.
    pub singular: usize,
}

impl CocycleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.points_checked > 0
    }
}

fn run_cocycle(label: String, g: [Mat<RatFunc>; 3], points: &[PointP2]) -> CocycleReport {
    let mut report = CocycleReport { label, points_checked: 0, failures: Vec::new(), singular: 0 };
    let id = Mat::identity(g[0].rows());
    for p in points {
        match cycle_product(&g[0], &g[1], &g[2], p) {
            None => report.singular += 1,
            Some(m) => {
                report.points_checked += 1;
                if m != id {
                    report.failures.push(p.clone());
                }
            }
        }
    }
    report
}

/// Cocycle identity `g_20 g_12 g_01 = I` for the derived transitions of `bundle`.
pub fn cocycle_check(bundle: Bundle, points: &[PointP2]) -> CocycleReport {
    let c = Chart::new;
    let g = [
        transition(bundle, c(0), c(1)),
        transition(bundle, c(1), c(2)),
        transition(bundle, c(2), c(0)),
    ];
    run_cocycle(bundle.to_string(), g, points)
}

/// Tangent-bundle transition matrices as printed in the source derivation,
/// labelled with its chart numbering (1 = `[z:w:1]`, 2 = `[z:1:w]`, 3 = `[1:z:w]`).
pub fn golden_tangent_transitions() -> [(&'static str, Chart, Chart, Mat<RatFunc>); 3] {
    let z = RatFunc::from(Poly::z());
    let w = RatFunc::from(Poly::w());
    let zero = RatFunc::zero();
    let inv = |f: &RatFunc| f.inv().expect("nonzero");
    let z2 = &z * &z;
    let w2 = &w * &w;
    let g12 = Mat::from_rows(vec![
        vec![inv(&w), -&(&z / &w2)],
        vec![zero.clone(), -&inv(&w2)],
    ]);
    let g23 = Mat::from_rows(vec![
        vec![-&inv(&z2), zero.clone()],
        vec![-&(&z / &w2), inv(&z)],
    ]);
    let g31 = Mat::from_rows(vec![
        vec![-&(&w / &z2), inv(&z)],
        vec![-&inv(&z2), zero],
    ]);
    [
        ("g'12", Chart::new(0), Chart::new(1), g12),
        ("g'23", Chart::new(1), Chart::new(2), g23),
        ("g'31", Chart::new(2), Chart::new(0), g31),
    ]
}

/// Comparison of one printed matrix against the Jacobian of its chart change.
#[derive(Clone, Debug)]
pub struct GoldenComparison {
    pub label: &'static str,
    pub from: Chart,
    pub to: Chart,
    pub golden: Mat<RatFunc>,
    pub derived: Mat<RatFunc>,
    /// Entries `(row, col)` (0-based) where the two differ.
    pub mismatches: Vec<(usize, usize)>,
    /// Some other chart change whose Jacobian equals the printed matrix.
    pub equals_jacobian_of: Option<(Chart, Chart)>,
}

impl GoldenComparison {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn describe(&self) -> String {
        if self.matches() {
            return format!("{} agrees with the Jacobian of {} -> {}", self.label, self.from, self.to);
        }
        let entries: Vec<String> = self
            .mismatches
            .iter()
            .map(|&(r, c)| {
                format!(
                    "({},{}): printed {} vs derived {}",
                    r + 1,
                    c + 1,
                    self.golden.get(r, c),
                    self.derived.get(r, c)
                )
            })
            .collect();
        let mut s = format!(
            "{} differs from the Jacobian of {} -> {} at {}",
            self.label,
            self.from,
            self.to,
            entries.join("; ")
        );
        if let Some((a, b)) = self.equals_jacobian_of {
            s.push_str(&format!("; it equals the Jacobian of {a} -> {b} instead"));
        }
        s
    }
}

pub fn compare_golden() -> Vec<GoldenComparison> {
    golden_tangent_transitions()
        .into_iter()
        .map(|(label, from, to, golden)| {
            let derived = jacobian(from, to);
            let mut mismatches = Vec::new();
            for r in 0..2 {
                for c in 0..2 {
                    if golden.get(r, c) != derived.get(r, c) {
                        mismatches.push((r, c));
                    }
                }
            }
            let equals_jacobian_of = if mismatches.is_empty() {
                None
            } else {
                Chart::ALL
                    .iter()
                    .flat_map(|&a| Chart::ALL.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| a != b && jacobian(a, b) == golden)
            };
            GoldenComparison { label, from, to, golden, derived, mismatches, equals_jacobian_of }
        })
        .collect()
}

/// Cocycle identity evaluated with the printed matrices in place of the
/// derived ones.
pub fn golden_cocycle_check(points: &[PointP2]) -> CocycleReport {
    let [(_, _, _, g12), (_, _, _, g23), (_, _, _, g31)] = golden_tangent_transitions();
    run_cocycle("printed T transitions".into(), [g12, g23, g31], points)
}
