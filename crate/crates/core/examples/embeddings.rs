//! Build the three embedding families and verify each is an injective
//! homomorphism.
//!
//! Run with: cargo run --example embeddings

use aisemiring::catalog::{catalog, catalog_names};
use aisemiring::matrix::{
    constant_embedding, padding_embedding, phi_block_embedding, verify_homomorphism, MatrixConfig,
};

fn main() {
    let cfg = MatrixConfig::default();

    // Every base embeds into its matrix semiring as constant matrices.
    for name in catalog_names() {
        let s = catalog(name).unwrap();
        let map = constant_embedding(&s, 2, &cfg).unwrap();
        let rep = verify_homomorphism(&map);
        println!(
            "constant {} -> {}: homomorphism = {}, injective = {}",
            s.name(),
            map.target.name(),
            rep.homomorphism,
            rep.injective
        );
        assert!(rep.homomorphism && rep.injective);
    }

    // Padding a matrix with zeros in the new row and column only works when
    // the base has an additive identity that multiplies to itself.
    for name in ["N2", "D2", "L2"] {
        let s = catalog(name).unwrap();
        match padding_embedding(&s, 2, &cfg) {
            Ok(map) => {
                let rep = verify_homomorphism(&map);
                println!(
                    "padding {} -> {}: homomorphism = {}, injective = {}",
                    map.source.name(),
                    map.target.name(),
                    rep.homomorphism,
                    rep.injective
                );
            }
            Err(e) => println!("padding over {name}: rejected ({e})"),
        }
    }

    // The sixteen-element semiring of 2x2 matrices over M2 embeds into
    // n x n matrices over M2 for every n >= 3 via fixed blocks.
    for n in [3, 4] {
        let map = phi_block_embedding(n, &cfg).unwrap();
        let rep = verify_homomorphism(&map);
        println!(
            "block {} -> {}: homomorphism = {}, injective = {}",
            map.source.name(),
            map.target.name(),
            rep.homomorphism,
            rep.injective
        );
        assert!(rep.homomorphism && rep.injective);
    }
}
