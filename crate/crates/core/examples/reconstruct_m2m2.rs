//! Recover the letter names for the sixteen 2x2 matrices over M2 from the
//! published multiplication table and order diagram, then carve out the
//! six-element subsemiring generated by O and A.
//!
//! Run with: cargo run --example reconstruct_m2m2

use aisemiring::matrix::{
    find_isomorphism, induced_subsemiring, m2m2_semiring, reconstruct_m2m2_labels,
    subsemiring_closure, IsoConfig,
};
use aisemiring::catalog::catalog;
use aisemiring::tables::{render_hasse, render_semiring};

fn main() {
    let labeling = reconstruct_m2m2_labels().unwrap();
    println!("letter -> matrix entries:");
    for name in ["O", "A", "B", "P", "Z", "F"] {
        let [[a, b], [c, d]] = labeling.entries(name).unwrap();
        println!("  {name} = [[{a}, {b}], [{c}, {d}]]");
    }

    let m2m2 = m2m2_semiring().unwrap();
    println!("\n{}", render_semiring(&m2m2));
    println!("{}", render_hasse(&m2m2));

    // The subsemiring generated by {O, A} has six elements.
    let o = labeling.code("O").unwrap();
    let a = labeling.code("A").unwrap();
    let closure = subsemiring_closure(&m2m2, &[o, a]).unwrap();
    let names: Vec<&str> = closure.iter().map(|&e| labeling.name(e)).collect();
    println!("closure of {{O, A}}: {}", names.join(", "));

    let sub = induced_subsemiring(&m2m2, &closure, "closure(O,A)").unwrap();
    let sr6 = catalog("SR6").unwrap();
    let iso = find_isomorphism(&sub, &sr6, &IsoConfig::default());
    println!("isomorphic to the cataloged SR6: {}", iso.is_some());
}
