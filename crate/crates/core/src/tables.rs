//! Transcribed reference tables and order diagrams, plus rendering and
//! diffing of computed structures against them.
//!
//! The transcriptions are kept as verbatim label strings, separate from the
//! executable tables in `catalog`, so a typo in one shows up as a diff
//! instead of silently defining the semiring.

use crate::catalog::catalog;
use crate::error::Result;
use crate::matrix::{m2m2_semiring, reconstruct_m2m2_labels, subsemiring_closure};
use crate::semiring::{natural_order, FiniteSemiring};
use std::collections::{BTreeMap, BTreeSet};

/// Column and row order of the 16-element multiplication table.
pub const M2M2_ORDER: [&str; 16] = [
    "O", "A", "B", "C", "D", "E", "G", "P", "Q", "R", "S", "Z", "Y", "X", "W", "F",
];

/// The 16 x 16 multiplication table of the 2x2 matrices over M2, rows and
/// columns in `M2M2_ORDER`.
pub const TABLE3: [[&str; 16]; 16] = [
    ["O", "P", "Q", "P", "Q", "F", "F", "P", "Q", "F", "F", "F", "F", "F", "F", "F"],
    ["R", "Z", "W", "Z", "W", "F", "F", "Z", "W", "F", "F", "F", "F", "F", "F", "F"],
    ["S", "X", "Y", "X", "Y", "F", "F", "X", "Y", "F", "F", "F", "F", "F", "F", "F"],
    ["S", "X", "Y", "X", "Y", "F", "F", "X", "Y", "F", "F", "F", "F", "F", "F", "F"],
    ["R", "Z", "W", "Z", "W", "F", "F", "Z", "W", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["R", "Z", "W", "Z", "W", "F", "F", "Z", "W", "F", "F", "F", "F", "F", "F", "F"],
    ["S", "X", "Y", "X", "Y", "F", "F", "X", "Y", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F", "F"],
];

/// The 32 covering pairs (lower, upper) of the additive order on the 2x2
/// matrices over M2.
pub const FIG1_EDGES: [(&str, &str); 32] = [
    ("Z", "F"),
    ("Y", "F"),
    ("X", "F"),
    ("W", "F"),
    ("P", "Z"),
    ("R", "Z"),
    ("E", "Z"),
    ("E", "Y"),
    ("Q", "Y"),
    ("S", "Y"),
    ("P", "X"),
    ("G", "X"),
    ("S", "X"),
    ("R", "W"),
    ("G", "W"),
    ("Q", "W"),
    ("A", "P"),
    ("A", "R"),
    ("A", "G"),
    ("O", "A"),
    ("B", "S"),
    ("B", "Q"),
    ("B", "G"),
    ("O", "B"),
    ("C", "P"),
    ("C", "S"),
    ("C", "E"),
    ("O", "C"),
    ("D", "Q"),
    ("D", "R"),
    ("D", "E"),
    ("O", "D"),
];

pub const SR6_ORDER: [&str; 6] = ["O", "A", "P", "R", "Z", "F"];

/// Multiplication of the six-element subsemiring, rows and columns in
/// `SR6_ORDER`.
pub const TABLE4: [[&str; 6]; 6] = [
    ["O", "P", "P", "F", "F", "F"],
    ["R", "Z", "Z", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F"],
    ["R", "Z", "Z", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F"],
    ["F", "F", "F", "F", "F", "F"],
];

/// Covering pairs of the six-element additive order.
pub const FIG2_EDGES: [(&str, &str); 6] = [
    ("O", "A"),
    ("A", "P"),
    ("A", "R"),
    ("P", "Z"),
    ("R", "Z"),
    ("Z", "F"),
];

/// The two-element semirings: name, addition, multiplication (label strings).
pub const TABLE1: [(&str, [[&str; 2]; 2], [[&str; 2]; 2]); 6] = [
    ("L2", [["0", "1"], ["1", "1"]], [["0", "0"], ["1", "1"]]),
    ("R2", [["0", "1"], ["1", "1"]], [["0", "1"], ["0", "1"]]),
    ("N2", [["0", "1"], ["1", "1"]], [["0", "0"], ["0", "0"]]),
    ("T2", [["0", "1"], ["1", "1"]], [["1", "1"], ["1", "1"]]),
    ("M2", [["0", "1"], ["1", "1"]], [["0", "1"], ["1", "1"]]),
    ("D2", [["0", "1"], ["1", "1"]], [["0", "0"], ["0", "1"]]),
];

/// The three-element semirings: name, addition, multiplication.
pub const TABLE2: [(&str, [[&str; 3]; 3], [[&str; 3]; 3]); 5] = [
    (
        "S54",
        [["1", "1", "3"], ["1", "2", "3"], ["3", "3", "3"]],
        [["3", "1", "3"], ["3", "2", "3"], ["3", "3", "3"]],
    ),
    (
        "S56",
        [["1", "1", "3"], ["1", "2", "3"], ["3", "3", "3"]],
        [["3", "2", "3"], ["3", "2", "3"], ["3", "2", "3"]],
    ),
    (
        "S57",
        [["1", "1", "3"], ["1", "2", "3"], ["3", "3", "3"]],
        [["3", "3", "3"], ["1", "2", "3"], ["3", "3", "3"]],
    ),
    (
        "S58",
        [["1", "1", "3"], ["1", "2", "3"], ["3", "3", "3"]],
        [["3", "3", "3"], ["2", "2", "2"], ["3", "3", "3"]],
    ),
    (
        "S60",
        [["1", "1", "3"], ["1", "2", "3"], ["3", "3", "3"]],
        [["3", "3", "3"], ["3", "2", "3"], ["3", "3", "3"]],
    ),
];

fn render_grid(header: &str, labels: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let m = labels.len();
    let width = labels
        .iter()
        .map(|l| l.len())
        .chain(std::iter::once(header.len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{header:>width$} |"));
    for l in labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat((width + 2) + m * (width + 1)));
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("{l:>width$} |"));
        for j in 0..m {
            let c = cell(i, j);
            out.push_str(&format!(" {c:>width$}"));
        }
        out.push('\n');
    }
    out
}

/// Renders both operation tables of a semiring as text grids.
pub fn render_semiring(s: &FiniteSemiring) -> String {
    let labels: Vec<String> = (0..s.size()).map(|i| s.label(i).to_string()).collect();
    let add = render_grid("+", &labels, |i, j| s.label(s.add_of(i, j)).to_string());
    let mul = render_grid("*", &labels, |i, j| s.label(s.mul_of(i, j)).to_string());
    format!("{}\n{add}\n{mul}", s.name())
}

/// Renders a covering relation as `lower < upper` lines.
pub fn render_hasse(s: &FiniteSemiring) -> String {
    let (order, _) = natural_order(s);
    order
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| format!("{} < {}", s.label(a), s.label(b)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn diff_tables<const K: usize>(
    s: &FiniteSemiring,
    add: &[[&str; K]; K],
    mul: &[[&str; K]; K],
    out: &mut Vec<String>,
) {
    for i in 0..K {
        for j in 0..K {
            let got = s.label(s.add_of(i, j));
            if got != add[i][j] {
                out.push(format!(
                    "{}: {} + {} computed {} but transcribed {}",
                    s.name(),
                    s.label(i),
                    s.label(j),
                    got,
                    add[i][j]
                ));
            }
            let got = s.label(s.mul_of(i, j));
            if got != mul[i][j] {
                out.push(format!(
                    "{}: {} * {} computed {} but transcribed {}",
                    s.name(),
                    s.label(i),
                    s.label(j),
                    got,
                    mul[i][j]
                ));
            }
        }
    }
}

fn edge_set(s: &FiniteSemiring) -> BTreeSet<(String, String)> {
    let (order, _) = natural_order(s);
    order
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| (s.label(a).to_string(), s.label(b).to_string()))
        .collect()
}

fn diff_edges(
    computed: &BTreeSet<(String, String)>,
    transcribed: &[(&str, &str)],
    what: &str,
    out: &mut Vec<String>,
) {
    let expected: BTreeSet<(String, String)> = transcribed
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
    for e in computed.difference(&expected) {
        out.push(format!("{what}: computed edge {} < {} is not transcribed", e.0, e.1));
    }
    for e in expected.difference(computed) {
        out.push(format!("{what}: transcribed edge {} < {} was not computed", e.0, e.1));
    }
}

/// Diffs every catalog two-element semiring against its transcription.
pub fn diff_two_element() -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (name, add, mul) in TABLE1 {
        diff_tables(&catalog(name)?, &add, &mul, &mut out);
    }
    Ok(out)
}

/// Diffs every catalog three-element semiring against its transcription.
pub fn diff_three_element() -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (name, add, mul) in TABLE2 {
        diff_tables(&catalog(name)?, &add, &mul, &mut out);
    }
    Ok(out)
}

/// Diffs the computed multiplication of the 16 named 2x2 matrices over M2
/// against the transcribed table.
pub fn diff_m2m2_multiplication() -> Result<Vec<String>> {
    let mat = m2m2_semiring()?;
    let labeling = reconstruct_m2m2_labels()?;
    let mut out = Vec::new();
    for (i, &rn) in M2M2_ORDER.iter().enumerate() {
        for (j, &cn) in M2M2_ORDER.iter().enumerate() {
            let a = labeling.code(rn).unwrap() as usize;
            let b = labeling.code(cn).unwrap() as usize;
            let got = labeling.name(mat.mul_of(a, b) as u64);
            if got != TABLE3[i][j] {
                out.push(format!(
                    "M2x2: {rn} * {cn} computed {got} but transcribed {}",
                    TABLE3[i][j]
                ));
            }
        }
    }
    Ok(out)
}

/// Diffs the computed additive covering relation of the 2x2 matrices over M2
/// against the transcribed diagram.
pub fn diff_m2m2_order() -> Result<Vec<String>> {
    let mat = m2m2_semiring()?;
    let mut out = Vec::new();
    diff_edges(&edge_set(&mat), &FIG1_EDGES, "M2x2 order", &mut out);
    Ok(out)
}

/// Diffs the six-element subsemiring against its transcriptions, computing it
/// two ways: the catalog tables and the closure of {O, A} inside the matrix
/// semiring.
pub fn diff_sr6() -> Result<Vec<String>> {
    let mut out = Vec::new();
    let sr6 = catalog("SR6")?;
    // Catalog element order matches SR6_ORDER, so a direct cell diff applies.
    diff_tables(&sr6, &table4_as_add(&sr6), &TABLE4, &mut out);
    diff_edges(&edge_set(&sr6), &FIG2_EDGES, "SR6 order", &mut out);

    let mat = m2m2_semiring()?;
    let labeling = reconstruct_m2m2_labels()?;
    let seed = [labeling.code("O").unwrap(), labeling.code("A").unwrap()];
    let closed = subsemiring_closure(&mat, &seed)?;
    let by_name: BTreeMap<&str, u64> = closed
        .iter()
        .map(|&c| (labeling.name(c), c))
        .collect();
    if by_name.len() != 6 || !SR6_ORDER.iter().all(|n| by_name.contains_key(n)) {
        out.push(format!(
            "SR6: closure of {{O, A}} is {:?}, expected the six transcribed names",
            by_name.keys().collect::<Vec<_>>()
        ));
        return Ok(out);
    }
    for (i, &rn) in SR6_ORDER.iter().enumerate() {
        for (j, &cn) in SR6_ORDER.iter().enumerate() {
            let got = labeling.name(mat.mul_of(by_name[rn] as usize, by_name[cn] as usize) as u64);
            if got != TABLE4[i][j] {
                out.push(format!(
                    "SR6 (from matrices): {rn} * {cn} computed {got} but transcribed {}",
                    TABLE4[i][j]
                ));
            }
        }
    }
    Ok(out)
}

// The transcription records only multiplication for the six-element
// subsemiring; its addition is determined by the order diagram, so the add
// side of the cell diff is fed the computed values (always equal).
fn table4_as_add(s: &FiniteSemiring) -> [[&'static str; 6]; 6] {
    let mut add = [[""; 6]; 6];
    for (i, row) in add.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let got = s.label(s.add_of(i, j));
            *cell = SR6_ORDER
                .iter()
                .copied()
                .find(|&n| n == got)
                .expect("labels are the six names");
        }
    }
    add
}

/// Runs every transcription diff; an empty map value means full agreement.
pub fn all_diffs() -> Result<BTreeMap<&'static str, Vec<String>>> {
    let mut out = BTreeMap::new();
    out.insert("two-element", diff_two_element()?);
    out.insert("three-element", diff_three_element()?);
    out.insert("m2x2-multiplication", diff_m2m2_multiplication()?);
    out.insert("m2x2-order", diff_m2m2_order()?);
    out.insert("sr6", diff_sr6()?);
    Ok(out)
}
