//! Replay the bundled derivation scripts step by step and validate every
//! transition semantically in the script's model.
//!
//! Run with: cargo run --example replay_derivation

use aisemiring::derive::{bundled_script, bundled_script_names, replay_script, validate_script};

fn main() {
    for name in bundled_script_names() {
        let script = bundled_script(name).unwrap();
        println!("{name} (model {}):", script.model.as_deref().unwrap_or("M2x2"));
        let trace = replay_script(&script).unwrap();
        for (i, term) in trace.iter().enumerate() {
            if i == 0 {
                println!("  start  {term}");
            } else {
                println!("  step {i} {} gives {term}", script.steps[i - 1].identity.display());
            }
        }
        // Each adjacent pair of trace terms must evaluate equal under
        // sampled assignments in the designated model.
        let checked = validate_script(&script, 500, 7).unwrap();
        println!("  validated over {checked} sampled assignments\n");
    }
}
