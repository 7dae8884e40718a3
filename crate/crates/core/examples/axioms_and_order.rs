//! Verify the defining axioms of the named semirings and print their
//! natural orders.
//!
//! Run with: cargo run --example axioms_and_order

use aisemiring::catalog::{catalog, catalog_names};
use aisemiring::semiring::{natural_order, verify_ai_axioms, zero_element, FiniteSemiring};

fn main() {
    for name in catalog_names() {
        let s = catalog(name).unwrap();
        let report = verify_ai_axioms(&s);
        let zero = match zero_element(&s) {
            Some(e) => format!("zero = {}", s.label(e)),
            None => "no zero".into(),
        };
        println!("{name}: axioms pass = {}, {zero}", report.pass);
        let (_, edges) = natural_order(&s);
        let rendered: Vec<String> = edges
            .iter()
            .map(|&(a, b)| format!("{}<{}", s.label(a), s.label(b)))
            .collect();
        println!("  covering pairs: {}", rendered.join(" "));
    }

    // A broken table is rejected with the failing axiom and a witness.
    let d2 = catalog("D2").unwrap();
    let mut add = d2.add_rows();
    add[0][0] = 1;
    let broken = FiniteSemiring::new("D2-broken", d2.labels().to_vec(), add, d2.mul_rows()).unwrap();
    let report = verify_ai_axioms(&broken);
    for f in &report.failures {
        println!(
            "D2-broken: {} fails at witness {:?}",
            f.axiom.describe(),
            f.witness
        );
    }
}
