//! Sample random identities to compare the equational theories of matrix
//! semirings with small semirings known to generate the same variety.
//!
//! Run with: cargo run --example variety_agreement

use aisemiring::catalog::{catalog, identity_catalog};
use aisemiring::matrix::{matrix_semiring, resolve_semiring, MatrixConfig};
use aisemiring::satisfy::{equational_agreement, satisfies, AgreementConfig, SatConfig};

fn main() {
    let mcfg = MatrixConfig::default();
    let acfg = AgreementConfig {
        samples: 300,
        ..AgreementConfig::default()
    };

    // Each pair is a matrix semiring and a small semiring that satisfies
    // exactly the same identities. Sampling cannot prove that, but it should
    // never find a separating identity.
    let pairs = [("L2", "S58"), ("R2", "S56")];
    for (base_name, partner_name) in pairs {
        let base = catalog(base_name).unwrap();
        let m2 = matrix_semiring(&base, 2, &mcfg).unwrap();
        let partner = catalog(partner_name).unwrap();
        let report = equational_agreement(m2.ops(), &partner, &acfg).unwrap();
        println!(
            "{} vs {partner_name}: {} samples, disagreement = {}",
            m2.name(),
            report.samples_run,
            report.disagreement.is_some()
        );
    }

    let m2m2 = resolve_semiring("M2x2", &mcfg).unwrap();
    let sr6 = catalog("SR6").unwrap();
    let report = equational_agreement(m2m2.ops(), &sr6, &acfg).unwrap();
    println!(
        "{} vs SR6: {} samples, disagreement = {}",
        m2m2.name(),
        report.samples_run,
        report.disagreement.is_some()
    );

    // Both sides of the last pair satisfy the same finite basis exhaustively.
    let cat = identity_catalog();
    let scfg = SatConfig::default();
    for key in cat.basis("M2xM2").unwrap() {
        let id = &cat.get(key).unwrap().identity;
        let a = satisfies(m2m2.ops(), id, &scfg).unwrap().holds;
        let b = satisfies(&sr6, id, &scfg).unwrap().holds;
        println!("{key} ({id}): matrix semiring {a}, SR6 {b}");
    }
}
