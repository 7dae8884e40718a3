//! The two-element semirings decide u ≈ u + q from word statistics alone;
//! three of the three-element ones have necessary conditions. Compare both
//! with brute force.
//!
//! Run with: cargo run --example syntactic_criteria

use aisemiring::catalog::catalog;
use aisemiring::satisfy::{
    necessary_conditions, satisfies, syntactic_criterion, CriterionTag, NecessaryTag, SatConfig,
};
use aisemiring::term::{as_simple_identity, parse_identity};

fn main() {
    let cfg = SatConfig::default();
    let cases = [
        "xy = xy + x",
        "xy = xy + y",
        "xy = xy + xx",
        "x = x + xy",
        "xy + z = xy + z + zxy",
    ];
    for text in cases {
        let id = parse_identity(text).unwrap();
        let si = as_simple_identity(&id).unwrap();
        println!("{id}");
        for tag in CriterionTag::ALL {
            let predicted = syntactic_criterion(tag, &si);
            let s = catalog(tag.name()).unwrap();
            let actual = satisfies(&s, &id, &cfg).unwrap().holds;
            assert_eq!(predicted, actual);
            println!("  {}: {}", tag.name(), predicted);
        }
        for tag in NecessaryTag::ALL {
            let condition = necessary_conditions(tag, &si);
            let s = catalog(tag.name()).unwrap();
            let actual = satisfies(&s, &id, &cfg).unwrap().holds;
            // One-directional: failing the condition refutes satisfaction.
            assert!(condition || !actual);
            println!(
                "  {}: conditions {} (exhaustive: {actual})",
                tag.name(),
                if condition { "hold" } else { "fail" }
            );
        }
    }
}
