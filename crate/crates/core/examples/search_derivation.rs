//! Search for derivations of simple identities u ≈ u + q from a small set
//! of cataloged identities, then validate the found script.
//!
//! Run with: cargo run --example search_derivation

use aisemiring::derive::{bounded_search, validate_script, SearchConfig};
use aisemiring::term::{as_simple_identity, parse_identity};

fn main() {
    let keys: Vec<String> = ["F9", "F10", "F11"].iter().map(|s| s.to_string()).collect();
    let goals = [
        "xy = xy + x",
        "xyz = xyz + xz",
        "x1x2x3x4 = x1x2x3x4 + x1x3x4",
    ];
    let cfg = SearchConfig::default();
    for text in goals {
        let id = parse_identity(text).unwrap();
        let si = as_simple_identity(&id).unwrap();
        match bounded_search(&keys, &si, &cfg).unwrap() {
            Some(mut script) => {
                println!("{text}: derived in {} steps", script.steps.len());
                for step in &script.steps {
                    println!("  apply {}", step.identity.display());
                }
                // The searcher does not pick a model; validate in the
                // sixteen-element matrix semiring where F9 through F11 hold.
                script.model = Some("M2x2".into());
                let checked = validate_script(&script, 500, 0).unwrap();
                println!("  validated over {checked} sampled assignments");
                println!("  script JSON:\n{}\n", script.to_json_string());
            }
            None => println!("{text}: not derivable within the search bounds\n"),
        }
    }
}
