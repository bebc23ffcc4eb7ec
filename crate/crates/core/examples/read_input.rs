//! Parses a JSON input document and prints what it describes.
//!
//! ```bash
//! cargo run --example read_input -- crates/core/examples/inputs/k2_field.json
//! ```

use cohiggs::classify::image_point;
use cohiggs::cohiggs::determinant;
use cohiggs::io::{parse_input, Input};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/inputs/kbig_field.json").to_string());
    let text = std::fs::read_to_string(&path).expect("readable file");
    match parse_input(&text) {
        Ok(Input::Field(f)) => {
            let det = determinant(&f).unwrap();
            println!("field of index {}: det = {}", f.index(), det.triple);
            println!("image point: {}", image_point(&det).unwrap());
        }
        Ok(other) => println!("{other:?}"),
        Err(e) => println!("{path}: {e}"),
    }
}
