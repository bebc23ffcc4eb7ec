//! Compares the printed tangent-bundle transition matrices with the ones
//! derived from the chart maps, and runs the cocycle identity on both.

use cohiggs::geometry::{compare_golden, golden_cocycle_check, sample_points};

fn main() {
    for c in compare_golden() {
        println!("{}", c.describe());
    }
    let r = golden_cocycle_check(&sample_points(1, 20));
    println!("printed matrices: {} of {} points fail the cocycle identity", r.failures.len(), r.points_checked);
}
