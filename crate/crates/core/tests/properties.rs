//! Randomized invariants for the term algebra and the satisfaction checker.

use std::collections::BTreeMap;

use aisemiring::catalog::catalog;
use aisemiring::satisfy::{evaluate, satisfies, SatConfig};
use aisemiring::semiring::SemiringOps;
use aisemiring::term::{parse_normalized, reduce_identity, Identity, Term, Word};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..VARS.len(), 1..=4)
        .prop_map(|ix| Word::from_letters(ix.into_iter().map(|i| VARS[i])).unwrap())
}

fn term_strategy() -> impl Strategy<Value = Term> {
    prop::collection::vec(word_strategy(), 1..=4).prop_map(|ws| Term::new(ws).unwrap())
}

fn small_semiring() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "L2", "R2", "N2", "T2", "M2", "D2", "S54", "S56", "S57", "S58", "S60",
    ])
}

fn assignment_strategy(size: usize) -> impl Strategy<Value = BTreeMap<String, u64>> {
    prop::collection::vec(0..size as u64, VARS.len()).prop_map(|vals| {
        VARS.iter()
            .map(|v| v.to_string())
            .zip(vals)
            .collect()
    })
}

proptest! {
    // Printing a canonical term and parsing it back is the identity.
    #[test]
    fn term_display_roundtrips(t in term_strategy()) {
        let reparsed = parse_normalized(&t.to_string()).unwrap();
        prop_assert_eq!(reparsed, t);
    }

    // Union and product of canonical terms stay canonical: sorted words,
    // no duplicates.
    #[test]
    fn term_operations_stay_canonical(a in term_strategy(), b in term_strategy()) {
        for t in [a.union(&b), a.product(&b)] {
            for pair in t.words().windows(2) {
                prop_assert!(pair[0] < pair[1]);
            }
        }
    }

    // Evaluation is a homomorphism from the term algebra: union maps to
    // addition and product to multiplication.
    #[test]
    fn evaluation_respects_operations(
        name in small_semiring(),
        a in term_strategy(),
        b in term_strategy(),
    ) {
        let s = catalog(name).unwrap();
        let values = {
            let mut m = BTreeMap::new();
            for (i, v) in VARS.iter().enumerate() {
                m.insert(v.to_string(), (i % s.size()) as u64);
            }
            m
        };
        let ea = evaluate(&s, &a, &values).unwrap();
        let eb = evaluate(&s, &b, &values).unwrap();
        prop_assert_eq!(evaluate(&s, &a.union(&b), &values).unwrap(), s.add(ea, eb));
        prop_assert_eq!(evaluate(&s, &a.product(&b), &values).unwrap(), s.mul(ea, eb));
    }

    // Evaluation agrees on every assignment, not just the fixed one above.
    #[test]
    fn evaluation_respects_addition_everywhere(
        a in term_strategy(),
        b in term_strategy(),
        picks in assignment_strategy(6),
    ) {
        let s = catalog("SR6").unwrap();
        let values = picks;
        let ea = evaluate(&s, &a, &values).unwrap();
        let eb = evaluate(&s, &b, &values).unwrap();
        prop_assert_eq!(evaluate(&s, &a.union(&b), &values).unwrap(), s.add(ea, eb));
    }

    // An identity holds exactly when all of its simple parts u ≈ u + q hold.
    #[test]
    fn reduction_to_simple_identities_is_faithful(
        name in small_semiring(),
        lhs in term_strategy(),
        rhs in term_strategy(),
    ) {
        let s = catalog(name).unwrap();
        let cfg = SatConfig::default();
        let id = Identity::new(lhs, rhs);
        let whole = satisfies(&s, &id, &cfg).unwrap().holds;
        let parts = reduce_identity(&id)
            .iter()
            .all(|si| satisfies(&s, &si.to_identity(), &cfg).unwrap().holds);
        prop_assert_eq!(whole, parts);
    }

    // The two projection semirings are mirror images: an identity holds in
    // one exactly when its word-reversed form holds in the other.
    #[test]
    fn projection_semirings_are_dual(lhs in term_strategy(), rhs in term_strategy()) {
        let l2 = catalog("L2").unwrap();
        let r2 = catalog("R2").unwrap();
        let cfg = SatConfig::default();
        let id = Identity::new(lhs, rhs);
        let in_l2 = satisfies(&l2, &id, &cfg).unwrap().holds;
        let in_r2 = satisfies(&r2, &id.reversed(), &cfg).unwrap().holds;
        prop_assert_eq!(in_l2, in_r2);
    }

    // Serial and parallel scans return the same verdict and witness.
    #[test]
    fn parallelism_does_not_change_verdicts(lhs in term_strategy(), rhs in term_strategy()) {
        let s = catalog("S60").unwrap();
        let id = Identity::new(lhs, rhs);
        let serial = satisfies(&s, &id, &SatConfig { parallel: false, ..SatConfig::default() }).unwrap();
        let parallel = satisfies(&s, &id, &SatConfig::default()).unwrap();
        prop_assert_eq!(serial.holds, parallel.holds);
        prop_assert_eq!(
            serial.witness.map(|w| w.values),
            parallel.witness.map(|w| w.values)
        );
    }
}
