//! Decide identities exhaustively and by seeded sampling, and reduce a
//! general identity to simple ones.
//!
//! Run with: cargo run --example check_identities

use aisemiring::catalog::catalog;
use aisemiring::matrix::{matrix_semiring, MatrixConfig};
use aisemiring::satisfy::{satisfies, satisfies_sampled, SatConfig};
use aisemiring::term::{parse_identity, reduce_identity};

fn main() {
    let cfg = SatConfig::default();

    // M2 is the two-element semiring where x+y = xy; check exactly that.
    let m2 = catalog("M2").unwrap();
    let id = parse_identity("x+y = xy").unwrap();
    let v = satisfies(&m2, &id, &cfg).unwrap();
    println!("M2 satisfies {id}: {} ({} assignments)", v.holds, v.assignments_checked);

    // A refutation comes with the least counterexample.
    let l2 = catalog("L2").unwrap();
    let id = parse_identity("xy = y").unwrap();
    let v = satisfies(&l2, &id, &cfg).unwrap();
    let w = v.witness.unwrap();
    println!("L2 refutes {id} at {:?}", w.labels(&l2));

    // Bigger model: 3x3 matrices over L2, 512^3 assignments for 3 variables.
    let m3 = matrix_semiring(&l2, 3, &MatrixConfig::default()).unwrap();
    let id = parse_identity("xy = xz").unwrap();
    let v = satisfies(m3.ops(), &id, &cfg).unwrap();
    println!(
        "{} satisfies {id}: {} ({} assignments)",
        m3.name(),
        v.holds,
        v.assignments_checked
    );

    // Sampling scales past what exhaustive checks can reach.
    let m4 = matrix_semiring(&l2, 4, &MatrixConfig::default()).unwrap();
    let v = satisfies_sampled(m4.ops(), &id, 100_000, 0).unwrap();
    println!("{} sampled check of {id}: {}", m4.name(), v.holds);

    // Any identity splits into simple identities u ≈ u + q.
    let id = parse_identity("xy = x + y").unwrap();
    for si in reduce_identity(&id) {
        println!("  simple part: {}", si.to_identity());
    }
}
