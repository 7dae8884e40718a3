//! Finite additively idempotent semirings given by operation tables.
//!
//! A carrier of size `m` is the index set `0..m`; printed labels are
//! metadata. Both operations are total `m x m` tables stored row-major.

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Default bound on carrier sizes accepted by constructions.
pub const DEFAULT_CARRIER_CAP: u64 = 1_000_000;

/// A finite ai-semiring presented by addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    labels: Vec<String>,
    m: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SemiringJson {
    name: String,
    elements: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl FiniteSemiring {
    /// Builds a semiring from row-major nested tables, validating dimensions
    /// and entry ranges. Axioms are not checked here; see [`verify_ai_axioms`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::Format("carrier must be nonempty".into()));
        }
        let flatten = |table: &[Vec<usize>], which: &str| -> Result<Vec<u32>> {
            if table.len() != m {
                return Err(Error::Format(format!(
                    "{which} table has {} rows, expected {m}",
                    table.len()
                )));
            }
            let mut cells = Vec::with_capacity(m * m);
            for (i, row) in table.iter().enumerate() {
                if row.len() != m {
                    return Err(Error::Format(format!(
                        "{which} table row {i} has {} entries, expected {m}",
                        row.len()
                    )));
                }
                for (j, &e) in row.iter().enumerate() {
                    if e >= m {
                        return Err(Error::Format(format!(
                            "{which}[{i}][{j}] = {e} is out of range 0..{m}"
                        )));
                    }
                    cells.push(e as u32);
                }
            }
            Ok(cells)
        };
        let add = flatten(&add, "add")?;
        let mul = flatten(&mul, "mul")?;
        Ok(FiniteSemiring {
            name: name.into(),
            labels,
            m,
            add,
            mul,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.m {
            return Err(Error::Format(format!(
                "{} labels for carrier of size {}",
                labels.len(),
                self.m
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Index of the element printed as `label`, if any.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline(always)]
    pub fn add_of(&self, a: usize, b: usize) -> usize {
        self.add[a * self.m + b] as usize
    }

    #[inline(always)]
    pub fn mul_of(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.m + b] as usize
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.add_of(i, j)).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.mul_of(i, j)).collect())
            .collect()
    }

    /// Loads from the JSON semiring format:
    /// `{"name": str, "elements": [str...], "add": [[int...]...], "mul": [[int...]...]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: SemiringJson = serde_json::from_str(text)?;
        FiniteSemiring::new(raw.name, raw.elements, raw.add, raw.mul)
    }

    pub fn to_json_string(&self) -> String {
        let raw = SemiringJson {
            name: self.name.clone(),
            elements: self.labels.clone(),
            add: self.add_rows(),
            mul: self.mul_rows(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

/// Read-only element-wise access to a (possibly non-materialized) semiring.
///
/// Elements are `u64` codes; for a [`FiniteSemiring`] the code is the table
/// index, for lazy matrix semirings it is the mixed-radix entry code.
pub trait SemiringOps: Sync {
    fn size(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn label(&self, a: u64) -> String;
    fn name(&self) -> &str;
}

impl SemiringOps for FiniteSemiring {
    fn size(&self) -> u64 {
        self.m as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        self.add_of(a as usize, b as usize) as u64
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_of(a as usize, b as usize) as u64
    }

    fn label(&self, a: u64) -> String {
        self.labels[a as usize].clone()
    }

    fn name(&self) -> &str {
        &self.name
    }
}

/// Shared handle over either a table-backed or a lazy matrix semiring.
#[derive(Clone)]
pub enum SemiringHandle {
    Table(Arc<FiniteSemiring>),
    LazyMatrix(Arc<crate::matrix::LazyMatrixSemiring>),
}

impl SemiringHandle {
    pub fn ops(&self) -> &dyn SemiringOps {
        match self {
            SemiringHandle::Table(s) => s.as_ref(),
            SemiringHandle::LazyMatrix(s) => s.as_ref(),
        }
    }

    pub fn as_table(&self) -> Option<&FiniteSemiring> {
        match self {
            SemiringHandle::Table(s) => Some(s.as_ref()),
            SemiringHandle::LazyMatrix(_) => None,
        }
    }

    pub fn name(&self) -> &str {
        self.ops().name()
    }
}

impl std::fmt::Debug for SemiringHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SemiringHandle({}, {} elements)", self.name(), self.ops().size())
    }
}

impl From<FiniteSemiring> for SemiringHandle {
    fn from(s: FiniteSemiring) -> Self {
        SemiringHandle::Table(Arc::new(s))
    }
}

/// The defining axioms of an ai-semiring, as checkable table properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdempotent,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::AddIdempotent,
        Axiom::MulAssociative,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "addition is commutative",
            Axiom::AddAssociative => "addition is associative",
            Axiom::AddIdempotent => "addition is idempotent",
            Axiom::MulAssociative => "multiplication is associative",
            Axiom::LeftDistributive => "left distributivity x(y+z) = xy+xz",
            Axiom::RightDistributive => "right distributivity (x+y)z = xz+yz",
        }
    }
}

/// A failed axiom together with its lexicographically least witness triple.
/// Unary/binary axioms pad the unused positions with 0.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: (usize, usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub pass: bool,
    pub failures: Vec<AxiomFailure>,
}

/// Exhaustively checks the six defining axioms over all pairs/triples.
///
/// The triple space is partitioned across parallel workers; the reported
/// witness per axiom is the lexicographically least one regardless of the
/// partitioning.
pub fn verify_ai_axioms(s: &FiniteSemiring) -> AxiomReport {
    let m = s.size();

    // Pair-level axioms first; they are cheap.
    let mut least: [Option<(usize, usize, usize)>; 6] = [None; 6];
    'idem: for a in 0..m {
        if s.add_of(a, a) != a {
            least[2] = Some((a, 0, 0));
            break 'idem;
        }
    }
    'comm: for a in 0..m {
        for b in 0..m {
            if s.add_of(a, b) != s.add_of(b, a) {
                least[0] = Some((a, b, 0));
                break 'comm;
            }
        }
    }

    // Triple-level axioms, parallel over the first coordinate.
    let triple_mins: Vec<[Option<(usize, usize, usize)>; 4]> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut mins: [Option<(usize, usize, usize)>; 4] = [None; 4];
            for b in 0..m {
                for c in 0..m {
                    let w = (a, b, c);
                    if mins[0].is_none() && s.add_of(s.add_of(a, b), c) != s.add_of(a, s.add_of(b, c)) {
                        mins[0] = Some(w);
                    }
                    if mins[1].is_none() && s.mul_of(s.mul_of(a, b), c) != s.mul_of(a, s.mul_of(b, c)) {
                        mins[1] = Some(w);
                    }
                    if mins[2].is_none()
                        && s.mul_of(a, s.add_of(b, c)) != s.add_of(s.mul_of(a, b), s.mul_of(a, c))
                    {
                        mins[2] = Some(w);
                    }
                    if mins[3].is_none()
                        && s.mul_of(s.add_of(a, b), c) != s.add_of(s.mul_of(a, c), s.mul_of(b, c))
                    {
                        mins[3] = Some(w);
                    }
                    if mins.iter().all(|x| x.is_some()) {
                        return mins;
                    }
                }
            }
            mins
        })
        .collect();
    for mins in triple_mins {
        for (k, w) in mins.into_iter().enumerate() {
            let slot = match k {
                0 => 1, // AddAssociative
                1 => 3, // MulAssociative
                2 => 4, // LeftDistributive
                _ => 5, // RightDistributive
            };
            if let Some(w) = w {
                if least[slot].map_or(true, |cur| w < cur) {
                    least[slot] = Some(w);
                }
            }
        }
    }

    let failures: Vec<AxiomFailure> = Axiom::ALL
        .iter()
        .enumerate()
        .filter_map(|(i, &axiom)| least[i].map(|witness| AxiomFailure { axiom, witness }))
        .collect();
    AxiomReport {
        pass: failures.is_empty(),
        failures,
    }
}

/// The natural semilattice order `a <= b  iff  a+b = b`, as a boolean table.
#[derive(Debug, Clone)]
pub struct OrderRelation {
    m: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.m + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Covering pairs `(a, b)`: `a < b` with no element strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for a in 0..self.m {
            for b in 0..self.m {
                if !self.lt(a, b) {
                    continue;
                }
                let covered = (0..self.m).any(|c| self.lt(a, c) && self.lt(c, b));
                if !covered {
                    edges.push((a, b));
                }
            }
        }
        edges
    }
}

/// Derives the natural order of an ai-semiring, plus its Hasse edge list.
pub fn natural_order(s: &FiniteSemiring) -> (OrderRelation, Vec<(usize, usize)>) {
    let m = s.size();
    let mut leq = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = s.add_of(a, b) == b;
        }
    }
    let order = OrderRelation { m, leq };
    let edges = order.hasse_edges();
    (order, edges)
}

/// Returns the element that is both an additive identity and a two-sided
/// multiplicative zero, when one exists. At most one such element exists.
pub fn zero_element(s: &FiniteSemiring) -> Option<usize> {
    let m = s.size();
    (0..m).find(|&e| {
        (0..m).all(|a| s.add_of(e, a) == a && s.mul_of(e, a) == e && s.mul_of(a, e) == e)
    })
}

/// Like [`zero_element`] but, on failure for a given candidate additive
/// identity, reports which absorption side breaks. Used by embedding
/// preconditions to produce a pointed error.
pub fn zero_element_detail(s: &FiniteSemiring) -> std::result::Result<usize, String> {
    let m = s.size();
    let additive_identity = (0..m).find(|&e| (0..m).all(|a| s.add_of(e, a) == a));
    let e = match additive_identity {
        Some(e) => e,
        None => return Err("no additive identity exists".into()),
    };
    for a in 0..m {
        if s.mul_of(e, a) != e {
            return Err(format!(
                "left absorption fails: {} * {} = {} != {}",
                s.label(e),
                s.label(a),
                s.label(s.mul_of(e, a)),
                s.label(e)
            ));
        }
        if s.mul_of(a, e) != e {
            return Err(format!(
                "right absorption fails: {} * {} = {} != {}",
                s.label(a),
                s.label(e),
                s.label(s.mul_of(a, e)),
                s.label(e)
            ));
        }
    }
    Ok(e)
}

/// Componentwise direct product `S x T`.
pub fn direct_product(
    s: &FiniteSemiring,
    t: &FiniteSemiring,
    carrier_cap: u64,
) -> Result<FiniteSemiring> {
    let ms = s.size() as u64;
    let mt = t.size() as u64;
    let m = ms
        .checked_mul(mt)
        .filter(|&m| m <= carrier_cap)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "product carrier {}*{} exceeds cap {}",
                ms, mt, carrier_cap
            ))
        })? as usize;
    let ms = s.size();
    let mt = t.size();
    // Element (a, b) is encoded as a*|T| + b.
    let mut labels = Vec::with_capacity(m);
    for a in 0..ms {
        for b in 0..mt {
            labels.push(format!("({},{})", s.label(a), t.label(b)));
        }
    }
    let pair = |a: usize, b: usize| a * mt + b;
    let mut add = vec![vec![0usize; m]; m];
    let mut mul = vec![vec![0usize; m]; m];
    for a1 in 0..ms {
        for b1 in 0..mt {
            for a2 in 0..ms {
                for b2 in 0..mt {
                    let i = pair(a1, b1);
                    let j = pair(a2, b2);
                    add[i][j] = pair(s.add_of(a1, a2), t.add_of(b1, b2));
                    mul[i][j] = pair(s.mul_of(a1, a2), t.mul_of(b1, b2));
                }
            }
        }
    }
    FiniteSemiring::new(format!("{}x{}", s.name(), t.name()), labels, add, mul)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn catalog_semirings_pass_axioms() {
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            let report = verify_ai_axioms(&s);
            assert!(report.pass, "{name} failed: {:?}", report.failures);
        }
    }

    #[test]
    fn one_element_semiring_passes() {
        let s = FiniteSemiring::new("triv", vec!["e".into()], vec![vec![0]], vec![vec![0]]).unwrap();
        assert!(verify_ai_axioms(&s).pass);
    }

    #[test]
    fn broken_idempotency_is_reported_with_witness() {
        let d2 = catalog("D2").unwrap();
        let mut add = d2.add_rows();
        add[0][0] = 1;
        let s = FiniteSemiring::new("D2'", d2.labels().to_vec(), add, d2.mul_rows()).unwrap();
        let report = verify_ai_axioms(&s);
        assert!(!report.pass);
        let f = report
            .failures
            .iter()
            .find(|f| f.axiom == Axiom::AddIdempotent)
            .expect("idempotency failure");
        assert_eq!(f.witness.0, 0);
    }

    #[test]
    fn out_of_range_entry_is_a_format_error() {
        let err = FiniteSemiring::new(
            "bad",
            vec!["0".into(), "1".into()],
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![0, 0], vec![0, 0]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn natural_order_on_l2() {
        let l2 = catalog("L2").unwrap();
        let (order, edges) = natural_order(&l2);
        assert!(order.leq(0, 1));
        assert!(!order.leq(1, 0));
        assert_eq!(edges, vec![(0, 1)]);
    }

    #[test]
    fn order_is_partial_order_with_join_on_catalog() {
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            let (order, _) = natural_order(&s);
            let m = s.size();
            for a in 0..m {
                assert!(order.leq(a, a), "{name}: reflexivity");
                for b in 0..m {
                    if order.leq(a, b) && order.leq(b, a) {
                        assert_eq!(a, b, "{name}: antisymmetry");
                    }
                    // a+b is the least upper bound of a and b.
                    let j = s.add_of(a, b);
                    assert!(order.leq(a, j) && order.leq(b, j), "{name}: join upper");
                    for c in 0..m {
                        if order.leq(a, b) && order.leq(b, c) {
                            assert!(order.leq(a, c), "{name}: transitivity");
                        }
                        if order.leq(a, c) && order.leq(b, c) {
                            assert!(order.leq(j, c), "{name}: join least");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn order_compatible_with_multiplication_on_catalog() {
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            let (order, _) = natural_order(&s);
            let m = s.size();
            for a in 0..m {
                for b in 0..m {
                    if !order.leq(a, b) {
                        continue;
                    }
                    for c in 0..m {
                        assert!(order.leq(s.mul_of(c, a), s.mul_of(c, b)), "{name}: left");
                        assert!(order.leq(s.mul_of(a, c), s.mul_of(b, c)), "{name}: right");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_elements_of_the_catalog() {
        assert_eq!(zero_element(&catalog("N2").unwrap()), Some(0));
        assert_eq!(zero_element(&catalog("D2").unwrap()), Some(0));
        assert_eq!(zero_element(&catalog("L2").unwrap()), None);
        assert_eq!(zero_element(&catalog("R2").unwrap()), None);
        assert_eq!(zero_element(&catalog("T2").unwrap()), None);
        assert_eq!(zero_element(&catalog("M2").unwrap()), None);
    }

    #[test]
    fn zero_element_is_unique_when_present() {
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            let m = s.size();
            let zeros: Vec<usize> = (0..m)
                .filter(|&e| {
                    (0..m).all(|a| s.add_of(e, a) == a && s.mul_of(e, a) == e && s.mul_of(a, e) == e)
                })
                .collect();
            assert!(zeros.len() <= 1, "{name} has {} zeros", zeros.len());
        }
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let l2 = catalog("L2").unwrap();
        let triv =
            FiniteSemiring::new("1", vec!["e".into()], vec![vec![0]], vec![vec![0]]).unwrap();
        let p = direct_product(&l2, &triv, DEFAULT_CARRIER_CAP).unwrap();
        assert_eq!(p.size(), 2);
        assert!(crate::matrix::find_isomorphism(&p, &l2, &Default::default()).is_some());
    }

    #[test]
    fn product_of_l2_with_itself() {
        let l2 = catalog("L2").unwrap();
        let p = direct_product(&l2, &l2, DEFAULT_CARRIER_CAP).unwrap();
        assert_eq!(p.size(), 4);
        assert!(verify_ai_axioms(&p).pass);
        // Componentwise: (0,1)*(1,0) = (0*1, 1*0) = (0, 1).
        let i = 1; // (0,1)
        let j = 2; // (1,0)
        assert_eq!(p.mul_of(i, j), 1);
    }

    #[test]
    fn product_capacity_error() {
        let l2 = catalog("L2").unwrap();
        assert!(matches!(
            direct_product(&l2, &l2, 3),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = catalog("S60").unwrap();
        let text = s.to_json_string();
        let back = FiniteSemiring::from_json_str(&text).unwrap();
        assert_eq!(s, back);
    }
}
