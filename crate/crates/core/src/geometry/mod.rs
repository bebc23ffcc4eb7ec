//! The projective plane: charts, sections of the bundles in play, their
//! transition data and conics.

mod bundle;
mod chart;
mod conic;
mod section;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{AlgebraError, Scalar};

pub use bundle::{
    cocycle_check, compare_golden, glue_check, glue_check_poly, golden_cocycle_check,
    golden_tangent_transitions, jacobian, sym2_matrix, transition, Bundle, CocycleReport,
    GlueReport, GoldenComparison,
};
pub use chart::{chart_change, homogeneous_coord, Chart, PointP2};
pub use conic::{conic_rank, ConicFactors};
pub use section::{
    glue_sym2, needs_sign_flip, recover_sqrt, recover_sqrt_scalars, recover_tm1, LineSection,
    Sym2Triple, TangentSection, Tm1Section,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("section is zero")]
    ZeroSection,
    #[error("triple is not a symmetric square")]
    NotASquare,
    #[error("local data does not come from a global section of the model")]
    NotInModel,
    #[error("expected a conic, got a form of degree {0}")]
    NotAConic(u32),
    #[error("line factors do not multiply back to the conic")]
    FactorizationFailed,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Deterministic points of the triple overlap with small rational coordinates.
pub fn sample_points(seed: u64, n: usize) -> Vec<PointP2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut small = move || {
        let mut num = 0;
        while num == 0 {
            num = rng.gen_range(-9..=9);
        }
        Scalar::ratio(num, rng.gen_range(1..=5))
    };
    (0..n)
        .map(|_| PointP2::new([small(), small(), small()]).expect("nonzero coordinates"))
        .collect()
}
