//! Chern classes, splitting type and h1(End0) of the bundles V_k.
//!
//! ```bash
//! cargo run --example bundle_info -- 5
//! ```

use cohiggs::cohiggs::schwarz_info;

fn main() {
    let ks: Vec<u32> = match std::env::args().nth(1) {
        Some(k) => vec![k.parse().expect("k must be a non-negative integer")],
        None => (0..=6).collect(),
    };
    for k in ks {
        match schwarz_info(k) {
            Ok(info) => println!("{info}\n"),
            Err(e) => println!("k = {k}: {e}\n"),
        }
    }
}
