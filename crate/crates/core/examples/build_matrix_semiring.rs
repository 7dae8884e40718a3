//! Build n x n matrix semirings over a base, materialized when small and
//! lazy when large, and poke at individual elements.
//!
//! Run with: cargo run --example build_matrix_semiring

use aisemiring::catalog::catalog;
use aisemiring::matrix::{decode, encode, matrix_semiring, MatrixConfig};

fn main() {
    let m2 = catalog("M2").unwrap();
    let cfg = MatrixConfig::default();

    for n in [1, 2, 3, 4, 5] {
        let h = matrix_semiring(&m2, n, &cfg).unwrap();
        println!(
            "{}: {} elements ({})",
            h.name(),
            h.ops().size(),
            if h.as_table().is_some() { "materialized" } else { "lazy" }
        );
    }

    // Elements are mixed-radix codes over the base entries, row-major.
    let h = matrix_semiring(&m2, 2, &cfg).unwrap();
    let ops = h.ops();
    let a = encode(&[0, 0, 1, 0], 2); // one 1 in the bottom-left corner
    let b = encode(&[0, 1, 0, 0], 2); // one 1 in the top-right corner
    println!(
        "{} * {} = {}",
        ops.label(a),
        ops.label(b),
        ops.label(ops.mul(a, b))
    );
    println!(
        "{} + {} = {}",
        ops.label(a),
        ops.label(b),
        ops.label(ops.add(a, b))
    );
    println!("entries of the product: {:?}", decode(ops.mul(a, b), 2, 4));
}
