//! Named semirings and the catalog of numbered identities.
//!
//! The two-element semirings L2, R2, N2, T2, M2, D2 share the carrier
//! {0, 1} and the same addition; the three-element semirings S54..S60 share
//! the carrier {1, 2, 3} (indices 0..2) and the same addition. SR6 is the
//! six-element subsemiring {O, A, P, R, Z, F} of the 2x2 matrices over M2.
//!
//! Identity keys are stable strings (B-L2, F9, ...) rather than printed
//! equation numbers; bases with several identities use -1, -2, ... suffixes.

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;
use crate::term::{parse_identity, Identity};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;

pub const CATALOG_NAMES: [&str; 12] = [
    "L2", "R2", "N2", "T2", "M2", "D2", "S54", "S56", "S57", "S58", "S60", "SR6",
];

pub fn catalog_names() -> &'static [&'static str] {
    &CATALOG_NAMES
}

fn two_element(name: &str, mul: [[usize; 2]; 2]) -> FiniteSemiring {
    FiniteSemiring::new(
        name,
        vec!["0".into(), "1".into()],
        vec![vec![0, 1], vec![1, 1]],
        mul.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("valid tables")
}

fn three_element(name: &str, mul: [[usize; 3]; 3]) -> FiniteSemiring {
    FiniteSemiring::new(
        name,
        vec!["1".into(), "2".into(), "3".into()],
        vec![vec![0, 0, 2], vec![0, 1, 2], vec![2, 2, 2]],
        mul.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("valid tables")
}

fn sr6() -> FiniteSemiring {
    // Elements in the order O, A, P, R, Z, F. Addition is the join of the
    // six-element order O < A < P,R < Z < F (P and R incomparable).
    FiniteSemiring::new(
        "SR6",
        ["O", "A", "P", "R", "Z", "F"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 1, 2, 3, 4, 5],
            vec![2, 2, 2, 4, 4, 5],
            vec![3, 3, 4, 3, 4, 5],
            vec![4, 4, 4, 4, 4, 5],
            vec![5, 5, 5, 5, 5, 5],
        ],
        vec![
            vec![0, 2, 2, 5, 5, 5],
            vec![3, 4, 4, 5, 5, 5],
            vec![5, 5, 5, 5, 5, 5],
            vec![3, 4, 4, 5, 5, 5],
            vec![5, 5, 5, 5, 5, 5],
            vec![5, 5, 5, 5, 5, 5],
        ],
    )
    .expect("valid tables")
}

/// Returns a named catalog semiring, with tables exactly as printed.
pub fn catalog(name: &str) -> Result<FiniteSemiring> {
    match name {
        "L2" => Ok(two_element("L2", [[0, 0], [1, 1]])),
        "R2" => Ok(two_element("R2", [[0, 1], [0, 1]])),
        "N2" => Ok(two_element("N2", [[0, 0], [0, 0]])),
        "T2" => Ok(two_element("T2", [[1, 1], [1, 1]])),
        "M2" => Ok(two_element("M2", [[0, 1], [1, 1]])),
        "D2" => Ok(two_element("D2", [[0, 0], [0, 1]])),
        "S54" => Ok(three_element("S54", [[2, 0, 2], [2, 1, 2], [2, 2, 2]])),
        "S56" => Ok(three_element("S56", [[2, 1, 2], [2, 1, 2], [2, 1, 2]])),
        "S57" => Ok(three_element("S57", [[2, 2, 2], [0, 1, 2], [2, 2, 2]])),
        "S58" => Ok(three_element("S58", [[2, 2, 2], [1, 1, 1], [2, 2, 2]])),
        "S60" => Ok(three_element("S60", [[2, 2, 2], [2, 1, 2], [2, 2, 2]])),
        "SR6" => Ok(sr6()),
        _ => Err(Error::Lookup(format!("unknown catalog semiring '{name}'"))),
    }
}

/// One catalog identity with its stable key.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub identity: Identity,
    pub note: &'static str,
}

pub struct IdentityCatalog {
    entries: BTreeMap<&'static str, CatalogEntry>,
    order: Vec<&'static str>,
}

impl IdentityCatalog {
    pub fn get(&self, key: &str) -> Result<&CatalogEntry> {
        self.entries
            .get(key)
            .ok_or_else(|| Error::Lookup(format!("unknown identity key '{key}'")))
    }

    pub fn keys(&self) -> &[&'static str] {
        &self.order
    }

    /// The keys of the equational basis printed for a catalog semiring, plus
    /// SR6's F9..F12 basis and the matrix-variety bases MnL2/MnR2/MnN2/MnT2
    /// and M2xM2 (F9..F11).
    pub fn basis(&self, tag: &str) -> Result<Vec<&'static str>> {
        let keys: &[&'static str] = match tag {
            "L2" => &["B-L2"],
            "R2" => &["B-R2"],
            "N2" => &["N21", "N22"],
            "T2" => &["N21", "T22"],
            "M2" => &["B-M2"],
            "D2" => &["B-D2-1", "B-D2-2", "B-D2-3"],
            "S54" => &["B-S54-1", "B-S54-2", "B-S54-3", "B-S54-4"],
            "S56" => &["B-S56-1", "B-S56-2"],
            "S57" => &["B-S57-1", "B-S57-2", "B-S57-3", "B-S57-4"],
            "S58" => &["B-S58-1", "B-S58-2"],
            "S60" => &["B-S60-1", "B-S60-2", "B-S60-3"],
            "SR6" => &["F9", "F10", "F11", "F12"],
            "MnL2" => &["T22", "F1"],
            "MnR2" => &["T22", "F3"],
            "MnN2" => &["N21", "N22"],
            "MnT2" => &["N21", "T22"],
            "M2xM2" => &["F9", "F10", "F11"],
            _ => return Err(Error::Lookup(format!("unknown basis tag '{tag}'"))),
        };
        Ok(keys.to_vec())
    }
}

static ENTRIES: &[(&str, &str, &str)] = &[
    ("B-L2", "xy ≈ x", "basis of L2"),
    ("B-R2", "xy ≈ y", "basis of R2"),
    ("N21", "x1x2 ≈ y1y2", "basis of N2, first identity (shared with T2)"),
    ("N22", "x + x^2 ≈ x", "basis of N2, second identity"),
    ("T22", "x + x^2 ≈ x^2", "basis of T2, second identity"),
    ("B-M2", "x+y ≈ xy", "basis of M2"),
    ("B-D2-1", "x^2 ≈ x", "basis of D2, first identity"),
    ("B-D2-2", "xy ≈ yx", "basis of D2, second identity"),
    ("B-D2-3", "x + xy ≈ x", "basis of D2, third identity"),
    ("F1", "xy ≈ xz", "defines V(Mn(L2)) together with T22"),
    ("F3", "xy ≈ zy", "defines V(Mn(R2)) together with T22"),
    ("F9", "xy ≈ xy+x", "SR6 basis"),
    ("F10", "xy ≈ xy+y", "SR6 basis"),
    ("F11", "x1x2+x3x4 ≈ x1x2+x3x4+x1x4", "SR6 basis"),
    (
        "F12",
        "x1x2x3x4 ≈ x1x2x3+x1x2x4+x1x3x4+x2x3x4",
        "SR6 basis; follows from F9-F11",
    ),
    ("B-S54-1", "xyz ≈ xzy", "basis of S54"),
    ("B-S54-2", "xy^2 ≈ xy", "basis of S54"),
    ("B-S54-3", "x+zy ≈ xy+zy", "basis of S54"),
    ("B-S54-4", "x^2+yx ≈ yx", "basis of S54"),
    ("B-S56-1", "xy ≈ zy", "basis of S56"),
    ("B-S56-2", "x+x^2 ≈ x^2", "basis of S56"),
    ("B-S57-1", "xyz ≈ yxz", "basis of S57"),
    ("B-S57-2", "x^2y ≈ xy", "basis of S57"),
    ("B-S57-3", "x+yz ≈ yx+yz", "basis of S57"),
    ("B-S57-4", "x^2+xy ≈ xy", "basis of S57"),
    ("B-S58-1", "xy ≈ xz", "basis of S58"),
    ("B-S58-2", "x+x^2 ≈ x^2", "basis of S58"),
    ("B-S60-1", "x^3 ≈ x^2", "basis of S60"),
    ("B-S60-2", "x^2+y^2 ≈ xy", "basis of S60"),
    ("B-S60-3", "x+x^2 ≈ x^2", "basis of S60"),
];

static CATALOG: Lazy<IdentityCatalog> = Lazy::new(|| {
    let mut entries = BTreeMap::new();
    let mut order = Vec::new();
    for &(key, text, note) in ENTRIES {
        let identity = parse_identity(text).expect("catalog identity parses");
        let prev = entries.insert(
            key,
            CatalogEntry {
                key,
                identity,
                note,
            },
        );
        assert!(prev.is_none(), "duplicate identity key {key}");
        order.push(key);
    }
    IdentityCatalog { entries, order }
});

pub fn identity_catalog() -> &'static IdentityCatalog {
    &CATALOG
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2_products() {
        let m2 = catalog("M2").unwrap();
        assert_eq!(m2.mul_of(0, 0), 0);
        assert_eq!(m2.mul_of(0, 1), 1);
        assert_eq!(m2.mul_of(1, 0), 1);
        assert_eq!(m2.mul_of(1, 1), 1);
    }

    #[test]
    fn s60_products() {
        let s60 = catalog("S60").unwrap();
        // Element "2" is index 1; 2*2 = 2 and every other product is 3.
        for a in 0..3 {
            for b in 0..3 {
                let expected = if a == 1 && b == 1 { 1 } else { 2 };
                assert_eq!(s60.mul_of(a, b), expected);
            }
        }
    }

    #[test]
    fn unknown_names_are_lookup_errors() {
        assert!(matches!(catalog("Q7"), Err(Error::Lookup(_))));
        assert!(matches!(
            identity_catalog().get("F2"),
            Err(Error::Lookup(_))
        ));
    }

    #[test]
    fn all_entries_parse_and_keys_are_unique() {
        let cat = identity_catalog();
        assert_eq!(cat.keys().len(), ENTRIES.len());
        for key in cat.keys() {
            let entry = cat.get(key).unwrap();
            assert_eq!(entry.key, *key);
        }
    }

    #[test]
    fn bases_resolve() {
        let cat = identity_catalog();
        for tag in [
            "L2", "R2", "N2", "T2", "M2", "D2", "S54", "S56", "S57", "S58", "S60", "SR6", "MnL2",
            "MnR2", "MnN2", "MnT2", "M2xM2",
        ] {
            for key in cat.basis(tag).unwrap() {
                cat.get(key).unwrap();
            }
        }
        assert!(cat.basis("Q7").is_err());
    }
}
