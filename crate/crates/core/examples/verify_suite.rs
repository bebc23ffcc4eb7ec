//! Runs one of the seeded verification suites from code.
//!
//! ```bash
//! cargo run --release --example verify_suite -- det1 200 42
//! ```

use cohiggs::verify::{run, RunOptions, Theorem};

fn main() {
    let mut args = std::env::args().skip(1);
    let theorem: Theorem = args.next().as_deref().unwrap_or("det1").parse().expect("theorem name");
    let trials = args.next().map_or(50, |s| s.parse().expect("trial count"));
    let seed = args.next().map_or(42, |s| s.parse().expect("seed"));
    let report = run(theorem, trials, seed, RunOptions::default());
    println!("{report}");
}
