//! Exact square roots over Q(i) and the two-level extension tower.
//!
//! ```bash
//! cargo run --example scalar_tower
//! ```

use cohiggs::algebra::{Scalar, MAX_TOWER_DEPTH};

fn main() {
    let four = Scalar::int(4);
    println!("sqrt(4) = {}", four.exact_sqrt().unwrap().root);

    // -4 is a square in Q(i)
    println!("sqrt(-4) = {}", Scalar::int(-4).exact_sqrt().unwrap().root);

    let r2 = Scalar::int(2).exact_sqrt().unwrap();
    println!("sqrt(2) = {} (adjoined: {})", r2.root, r2.adjoined.is_some());
    println!("sqrt(2)^2 = {}", r2.root.pow(2));

    // 1 + sqrt(2) is not a square in Q(i, sqrt 2): a second level is adjoined
    let x = &Scalar::one() + &r2.root;
    let r = x.exact_sqrt().unwrap();
    println!("sqrt(1 + sqrt 2) lives at level {}; squared back: {}", r.root.level(), r.root.pow(2));

    let y = &Scalar::int(3) + &r.root;
    match y.exact_sqrt() {
        Ok(s) => println!("sqrt(3 + sqrt(1 + sqrt 2)) = {}", s.root),
        Err(e) => println!("third level refused (cap {MAX_TOWER_DEPTH}): {e}"),
    }

    let a = Scalar::gaussian((1, 2), (-3, 4));
    println!("a = {a}, 1/a = {}, positive: {}", a.inv().unwrap(), a.is_positive());
}
