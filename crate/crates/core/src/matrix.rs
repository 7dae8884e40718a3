//! Matrix semirings over a finite base, embeddings, subsemiring closure,
//! isomorphism search, and the reconstruction of the named 2x2 matrices
//! over M2.
//!
//! A matrix is encoded as a single mixed-radix code: entries `e_0..e_{nn-1}`
//! in row-major order give `code = sum e_k * m^k`. Small matrix semirings
//! are materialized into plain tables; large ones are evaluated lazily by
//! decoding on demand, so one satisfaction engine serves both.

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::semiring::{
    natural_order, zero_element_detail, FiniteSemiring, SemiringHandle, SemiringOps,
};
use crate::tables::{FIG1_EDGES, M2M2_ORDER, TABLE3};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Caps for matrix-semiring construction.
///
/// Carriers up to `materialize_cap` get explicit tables (`m^2` cells each);
/// larger carriers get a lazy handle unless `allow_lazy` is off.
#[derive(Debug, Clone)]
pub struct MatrixConfig {
    pub materialize_cap: u64,
    pub allow_lazy: bool,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        MatrixConfig {
            materialize_cap: 4096,
            allow_lazy: true,
        }
    }
}

pub fn encode(entries: &[usize], m: usize) -> u64 {
    let mut code = 0u64;
    for &e in entries.iter().rev() {
        code = code * m as u64 + e as u64;
    }
    code
}

pub fn decode(code: u64, m: usize, len: usize) -> Vec<usize> {
    let mut entries = Vec::with_capacity(len);
    let mut rest = code;
    for _ in 0..len {
        entries.push((rest % m as u64) as usize);
        rest /= m as u64;
    }
    entries
}

fn matrix_label(base: &FiniteSemiring, entries: &[usize], n: usize) -> String {
    let mut out = String::from("[");
    for i in 0..n {
        if i > 0 {
            out.push('|');
        }
        for j in 0..n {
            let l = base.label(entries[i * n + j]);
            if j > 0 && l.len() > 1 {
                out.push(',');
            }
            out.push_str(l);
        }
    }
    out.push(']');
    out
}

fn matrix_add(base: &FiniteSemiring, a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .zip(b.iter())
        .map(|(&x, &y)| base.add_of(x, y))
        .collect()
}

fn matrix_mul(base: &FiniteSemiring, a: &[usize], b: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = base.mul_of(a[i * n], b[j]);
            for k in 1..n {
                acc = base.add_of(acc, base.mul_of(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// The n x n matrix semiring over `base`, evaluated entirely on demand.
pub struct LazyMatrixSemiring {
    base: FiniteSemiring,
    n: usize,
    name: String,
    size: u64,
}

impl LazyMatrixSemiring {
    pub fn base(&self) -> &FiniteSemiring {
        &self.base
    }

    pub fn dimension(&self) -> usize {
        self.n
    }
}

impl SemiringOps for LazyMatrixSemiring {
    fn size(&self) -> u64 {
        self.size
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let m = self.base.size();
        let len = self.n * self.n;
        encode(
            &matrix_add(&self.base, &decode(a, m, len), &decode(b, m, len)),
            m,
        )
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let m = self.base.size();
        let len = self.n * self.n;
        encode(
            &matrix_mul(&self.base, &decode(a, m, len), &decode(b, m, len), self.n),
            m,
        )
    }

    fn label(&self, a: u64) -> String {
        matrix_label(
            &self.base,
            &decode(a, self.base.size(), self.n * self.n),
            self.n,
        )
    }

    fn name(&self) -> &str {
        &self.name
    }
}

/// Builds `M_n(base)`. Carriers within the materialization cap come back as
/// explicit tables (named `<base>x<n>`); larger ones as a lazy handle.
pub fn matrix_semiring(
    base: &FiniteSemiring,
    n: usize,
    cfg: &MatrixConfig,
) -> Result<SemiringHandle> {
    if n == 0 {
        return Err(Error::Precondition("matrix dimension must be >= 1".into()));
    }
    let m = base.size() as u128;
    let total = m
        .checked_pow((n * n) as u32)
        .ok_or_else(|| Error::Capacity(format!("{}^{} overflows", base.size(), n * n)))?;
    let name = format!("{}x{}", base.name(), n);
    if total <= cfg.materialize_cap as u128 {
        let size = total as usize;
        let m = base.size();
        let len = n * n;
        let labels: Vec<String> = (0..size)
            .map(|c| matrix_label(base, &decode(c as u64, m, len), n))
            .collect();
        let add: Vec<Vec<usize>> = (0..size)
            .into_par_iter()
            .map(|a| {
                let ea = decode(a as u64, m, len);
                (0..size)
                    .map(|b| {
                        encode(&matrix_add(base, &ea, &decode(b as u64, m, len)), m) as usize
                    })
                    .collect()
            })
            .collect();
        let mul: Vec<Vec<usize>> = (0..size)
            .into_par_iter()
            .map(|a| {
                let ea = decode(a as u64, m, len);
                (0..size)
                    .map(|b| {
                        encode(&matrix_mul(base, &ea, &decode(b as u64, m, len), n), m) as usize
                    })
                    .collect()
            })
            .collect();
        Ok(SemiringHandle::Table(Arc::new(
            FiniteSemiring::new(name, labels, add, mul)?,
        )))
    } else if total > u64::MAX as u128 {
        Err(Error::Capacity(format!(
            "carrier {}^{} does not fit in 64-bit codes",
            base.size(),
            n * n
        )))
    } else if cfg.allow_lazy {
        Ok(SemiringHandle::LazyMatrix(Arc::new(LazyMatrixSemiring {
            base: base.clone(),
            n,
            name,
            size: total as u64,
        })))
    } else {
        Err(Error::Capacity(format!(
            "carrier {total} exceeds materialization cap {} and lazy mode is disabled",
            cfg.materialize_cap
        )))
    }
}

/// A map between two semirings, given element by element.
#[derive(Clone, Debug)]
pub struct ElementMap {
    pub source: SemiringHandle,
    pub target: SemiringHandle,
    pub image: Vec<u64>,
}

impl ElementMap {
    /// `{"source": str, "target": str, "image": [int...]}`.
    pub fn to_json_string(&self) -> String {
        serde_json::json!({
            "source": self.source.name(),
            "target": self.target.name(),
            "image": self.image,
        })
        .to_string()
    }
}

/// The embedding `a -> [a]_{n x n}` of a base semiring into its matrices.
pub fn constant_embedding(
    base: &FiniteSemiring,
    n: usize,
    cfg: &MatrixConfig,
) -> Result<ElementMap> {
    let target = matrix_semiring(base, n, cfg)?;
    let m = base.size();
    let image = (0..m)
        .map(|a| encode(&vec![a; n * n], m))
        .collect();
    Ok(ElementMap {
        source: SemiringHandle::Table(Arc::new(base.clone())),
        target,
        image,
    })
}

/// The chain step `M_n(S) -> M_{n+1}(S)` padding with the zero of `S` in the
/// new last row and column. Requires `S` to have an additive identity that is
/// also a two-sided multiplicative zero.
pub fn padding_embedding(
    base: &FiniteSemiring,
    n: usize,
    cfg: &MatrixConfig,
) -> Result<ElementMap> {
    let zero = zero_element_detail(base).map_err(|why| {
        Error::Precondition(format!(
            "{} has no additive identity acting as multiplicative zero: {why}",
            base.name()
        ))
    })?;
    let source = matrix_semiring(base, n, cfg)?;
    let target = matrix_semiring(base, n + 1, cfg)?;
    let m = base.size();
    let size = source.ops().size();
    let big = n + 1;
    let image = (0..size)
        .map(|code| {
            let small = decode(code, m, n * n);
            let mut entries = vec![zero; big * big];
            for i in 0..n {
                for j in 0..n {
                    entries[i * big + j] = small[i * n + j];
                }
            }
            encode(&entries, m)
        })
        .collect();
    Ok(ElementMap {
        source,
        target,
        image,
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct HomReport {
    pub homomorphism: bool,
    pub injective: bool,
    pub violation: Option<String>,
}

/// Checks `f(a+b) = f(a)+f(b)`, `f(ab) = f(a)f(b)`, and injectivity over all
/// pairs of source elements.
pub fn verify_homomorphism(map: &ElementMap) -> HomReport {
    let s = map.source.ops();
    let t = map.target.ops();
    let m = s.size();
    assert_eq!(map.image.len() as u64, m, "image covers the source");
    let f = |a: u64| map.image[a as usize];
    let mut violation = None;
    let mut homomorphism = true;
    'outer: for a in 0..m {
        for b in 0..m {
            if f(s.add(a, b)) != t.add(f(a), f(b)) {
                homomorphism = false;
                violation = Some(format!(
                    "f({} + {}) != f({}) + f({})",
                    s.label(a),
                    s.label(b),
                    s.label(a),
                    s.label(b)
                ));
                break 'outer;
            }
            if f(s.mul(a, b)) != t.mul(f(a), f(b)) {
                homomorphism = false;
                violation = Some(format!(
                    "f({} * {}) != f({}) * f({})",
                    s.label(a),
                    s.label(b),
                    s.label(a),
                    s.label(b)
                ));
                break 'outer;
            }
        }
    }
    let mut injective = true;
    'inj: for a in 0..m {
        for b in (a + 1)..m {
            if f(a) == f(b) {
                injective = false;
                if violation.is_none() {
                    violation = Some(format!(
                        "f({}) = f({}) collapses distinct elements",
                        s.label(a),
                        s.label(b)
                    ));
                }
                break 'inj;
            }
        }
    }
    HomReport {
        homomorphism,
        injective,
        violation,
    }
}

/// Least superset of `seed` closed under both operations (fixed-point
/// iteration). Returned sorted ascending.
pub fn subsemiring_closure(ops: &dyn SemiringOps, seed: &[u64]) -> Result<Vec<u64>> {
    if seed.is_empty() {
        return Err(Error::Precondition("closure seed must be nonempty".into()));
    }
    let size = ops.size();
    for &e in seed {
        if e >= size {
            return Err(Error::Format(format!("seed element {e} out of range")));
        }
    }
    let mut set: BTreeSet<u64> = seed.iter().copied().collect();
    let mut frontier: Vec<u64> = set.iter().copied().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let known: Vec<u64> = set.iter().copied().collect();
        for &a in &frontier {
            for &b in &known {
                for v in [ops.add(a, b), ops.add(b, a), ops.mul(a, b), ops.mul(b, a)] {
                    if set.insert(v) {
                        fresh.push(v);
                    }
                }
            }
        }
        frontier = fresh;
    }
    Ok(set.into_iter().collect())
}

/// Restricts a semiring to a closed subset, reindexing elements to `0..k`.
pub fn induced_subsemiring(
    ops: &dyn SemiringOps,
    elements: &[u64],
    name: impl Into<String>,
) -> Result<FiniteSemiring> {
    let index: BTreeMap<u64, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    if index.len() != elements.len() {
        return Err(Error::Format("duplicate elements in subset".into()));
    }
    let k = elements.len();
    let mut add = vec![vec![0usize; k]; k];
    let mut mul = vec![vec![0usize; k]; k];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            let s = ops.add(a, b);
            let p = ops.mul(a, b);
            add[i][j] = *index.get(&s).ok_or_else(|| {
                Error::Precondition(format!(
                    "subset is not closed under addition: {} + {} = {}",
                    ops.label(a),
                    ops.label(b),
                    ops.label(s)
                ))
            })?;
            mul[i][j] = *index.get(&p).ok_or_else(|| {
                Error::Precondition(format!(
                    "subset is not closed under multiplication: {} * {} = {}",
                    ops.label(a),
                    ops.label(b),
                    ops.label(p)
                ))
            })?;
        }
    }
    let labels = elements.iter().map(|&e| ops.label(e)).collect();
    FiniteSemiring::new(name, labels, add, mul)
}

#[derive(Debug, Clone)]
pub struct IsoConfig {
    /// Sizes up to this bound are searched over all bijections; beyond it,
    /// signature pruning restricts candidates before backtracking.
    pub exhaustive_cap: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { exhaustive_cap: 8 }
    }
}

fn refine_colors(s: &FiniteSemiring) -> Vec<u64> {
    let m = s.size();
    let mut colors = vec![0u64; m];
    loop {
        let mut sigs: Vec<(u64, Vec<(u64, u64, u64, u64)>)> = (0..m)
            .map(|a| {
                let mut row: Vec<(u64, u64, u64, u64)> = (0..m)
                    .map(|b| {
                        (
                            colors[b],
                            colors[s.add_of(a, b)],
                            colors[s.mul_of(a, b)],
                            colors[s.mul_of(b, a)],
                        )
                    })
                    .collect();
                row.sort_unstable();
                (colors[a], row)
            })
            .collect();
        let mut palette: BTreeMap<&(u64, Vec<(u64, u64, u64, u64)>), u64> = BTreeMap::new();
        for sig in &sigs {
            let next = palette.len() as u64;
            palette.entry(sig).or_insert(next);
        }
        let fresh: Vec<u64> = sigs.iter().map(|sig| palette[sig]).collect();
        if fresh == colors {
            return colors;
        }
        // Keep going until stable.
        sigs.clear();
        colors = fresh;
    }
}

/// Searches for a bijection preserving both tables, or returns `None` after
/// a complete search. Deterministic: source elements are processed in
/// signature-then-index order and candidates tried in index order.
pub fn find_isomorphism(
    s: &FiniteSemiring,
    t: &FiniteSemiring,
    cfg: &IsoConfig,
) -> Option<Vec<usize>> {
    let m = s.size();
    if m != t.size() {
        return None;
    }
    let prune = m > cfg.exhaustive_cap;
    let (cs, ct) = if prune {
        (refine_colors(s), refine_colors(t))
    } else {
        (vec![0; m], vec![0; m])
    };
    if prune {
        let mut hs = cs.clone();
        let mut ht = ct.clone();
        hs.sort_unstable();
        ht.sort_unstable();
        if hs != ht {
            return None;
        }
    }
    // Process most-constrained (rarest color) elements first, ties by index.
    let mut order: Vec<usize> = (0..m).collect();
    let mut color_count: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &cs {
        *color_count.entry(c).or_insert(0) += 1;
    }
    order.sort_by_key(|&a| (color_count[&cs[a]], cs[a], a));

    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];

    fn consistent(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        map: &[usize],
        a: usize,
        assigned: &[usize],
    ) -> bool {
        for &b in assigned {
            for (x, y) in [(a, b), (b, a)] {
                let sum = s.add_of(x, y);
                if map[sum] != usize::MAX && t.add_of(map[x], map[y]) != map[sum] {
                    return false;
                }
                let prod = s.mul_of(x, y);
                if map[prod] != usize::MAX && t.mul_of(map[x], map[y]) != map[prod] {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        cs: &[u64],
        ct: &[u64],
    ) -> bool {
        if depth == order.len() {
            // All pairs re-checked to also cover results that were unmapped
            // at assignment time.
            let m = s.size();
            for a in 0..m {
                for b in 0..m {
                    if t.add_of(map[a], map[b]) != map[s.add_of(a, b)]
                        || t.mul_of(map[a], map[b]) != map[s.mul_of(a, b)]
                    {
                        return false;
                    }
                }
            }
            return true;
        }
        let a = order[depth];
        let assigned: Vec<usize> = order[..depth].to_vec();
        for pa in 0..t.size() {
            if used[pa] || cs[a] != ct[pa] {
                continue;
            }
            map[a] = pa;
            used[pa] = true;
            if consistent(s, t, map, a, &assigned)
                && backtrack(s, t, order, depth + 1, map, used, cs, ct)
            {
                return true;
            }
            map[a] = usize::MAX;
            used[pa] = false;
        }
        false
    }

    if backtrack(s, t, &order, 0, &mut map, &mut used, &cs, &ct) {
        Some(map)
    } else {
        None
    }
}

/// The named sixteen elements of the 2x2 matrices over M2.
#[derive(Debug, Clone)]
pub struct M2M2Labeling {
    code_of: BTreeMap<String, u64>,
    name_of: Vec<String>,
}

impl M2M2Labeling {
    pub fn code(&self, name: &str) -> Option<u64> {
        self.code_of.get(name).copied()
    }

    pub fn name(&self, code: u64) -> &str {
        &self.name_of[code as usize]
    }

    pub fn entries(&self, name: &str) -> Option<[[usize; 2]; 2]> {
        let code = self.code(name)?;
        let e = decode(code, 2, 4);
        Some([[e[0], e[1]], [e[2], e[3]]])
    }

    pub fn names_by_code(&self) -> &[String] {
        &self.name_of
    }
}

fn raw_m2m2() -> Result<FiniteSemiring> {
    let m2 = catalog("M2")?;
    match matrix_semiring(&m2, 2, &MatrixConfig::default())? {
        SemiringHandle::Table(t) => Ok((*t).clone()),
        SemiringHandle::LazyMatrix(_) => unreachable!("16 elements materialize"),
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Assigns the sixteen names O, A, ..., F to the 2x2 matrices over M2.
///
/// O, F, A, B, C, D are pinned to their displayed matrices; the remaining ten
/// names are determined by requiring the induced multiplication table to
/// match all 256 transcribed cells and the induced covering relation to match
/// the transcribed additive order. The solution is required to be unique.
pub fn reconstruct_m2m2_labels() -> Result<M2M2Labeling> {
    let mat = raw_m2m2()?;
    let enc = |e: [usize; 4]| encode(&e, 2);

    let mut fixed: BTreeMap<&str, u64> = BTreeMap::new();
    fixed.insert("O", enc([0, 0, 0, 0]));
    fixed.insert("F", enc([1, 1, 1, 1]));
    fixed.insert("A", enc([0, 0, 1, 0]));
    fixed.insert("B", enc([0, 1, 0, 0]));
    fixed.insert("C", enc([1, 0, 0, 0]));
    fixed.insert("D", enc([0, 0, 0, 1]));

    let ones = |code: u64| decode(code, 2, 4).iter().filter(|&&e| e == 1).count();
    let two_one: Vec<u64> = (0..16).filter(|&c| ones(c) == 2).collect();
    let three_one: Vec<u64> = (0..16).filter(|&c| ones(c) == 3).collect();
    let names2 = ["E", "G", "P", "Q", "R", "S"];
    let names3 = ["W", "X", "Y", "Z"];

    let col_of: BTreeMap<&str, usize> = M2M2_ORDER
        .iter()
        .enumerate()
        .map(|(i, &n)| (n, i))
        .collect();
    let (order, _) = natural_order(&mat);
    let computed_edges: BTreeSet<(usize, usize)> = order.hasse_edges().into_iter().collect();

    let mut solutions: Vec<BTreeMap<String, u64>> = Vec::new();
    for perm2 in permutations(&two_one) {
        for perm3 in permutations(&three_one) {
            let mut assign = fixed.clone();
            for (name, &code) in names2.iter().zip(perm2.iter()) {
                assign.insert(name, code);
            }
            for (name, &code) in names3.iter().zip(perm3.iter()) {
                assign.insert(name, code);
            }
            let name_of: BTreeMap<u64, &str> =
                assign.iter().map(|(&n, &c)| (c, n)).collect();

            // All 256 products must match the transcribed table.
            let ok_products = M2M2_ORDER.iter().all(|&rn| {
                M2M2_ORDER.iter().all(|&cn| {
                    let prod = mat.mul_of(assign[rn] as usize, assign[cn] as usize) as u64;
                    name_of[&prod] == TABLE3[col_of[rn]][col_of[cn]]
                })
            });
            if !ok_products {
                continue;
            }
            // The covering relation must match the transcribed order diagram.
            let expected: BTreeSet<(usize, usize)> = FIG1_EDGES
                .iter()
                .map(|&(lo, hi)| (assign[lo] as usize, assign[hi] as usize))
                .collect();
            if expected != computed_edges {
                continue;
            }
            solutions.push(assign.iter().map(|(&n, &c)| (n.to_string(), c)).collect());
        }
    }
    match solutions.len() {
        0 => Err(Error::Reconstruction(
            "no assignment of E,G,P,Q,R,S,W,X,Y,Z is consistent with the transcribed \
             multiplication table and order diagram"
                .into(),
        )),
        1 => {
            let code_of = solutions.pop().unwrap();
            let mut name_of = vec![String::new(); 16];
            for (n, &c) in &code_of {
                name_of[c as usize] = n.clone();
            }
            Ok(M2M2Labeling { code_of, name_of })
        }
        k => Err(Error::Reconstruction(format!(
            "{k} distinct assignments satisfy the constraints; expected a unique one"
        ))),
    }
}

/// The materialized 2x2 matrix semiring over M2, with the published letter labels.
pub fn m2m2_semiring() -> Result<FiniteSemiring> {
    let mat = raw_m2m2()?;
    let labeling = reconstruct_m2m2_labels()?;
    mat.with_labels(labeling.names_by_code().to_vec())
}

/// Resolves a semiring name: a catalog name, or `<base>x<n>` for the n x n
/// matrix semiring over a resolvable base. `M2x2` resolves to the
/// letter-labeled sixteen-element semiring.
pub fn resolve_semiring(name: &str, cfg: &MatrixConfig) -> Result<SemiringHandle> {
    if let Ok(s) = catalog(name) {
        return Ok(SemiringHandle::Table(Arc::new(s)));
    }
    if name == "M2x2" {
        return Ok(SemiringHandle::Table(Arc::new(m2m2_semiring()?)));
    }
    if let Some(idx) = name.rfind('x') {
        let (base_name, dim) = (&name[..idx], &name[idx + 1..]);
        if let Ok(n) = dim.parse::<usize>() {
            let base = resolve_semiring(base_name, cfg)?;
            let base = base.as_table().ok_or_else(|| {
                Error::Capacity(format!(
                    "cannot build matrices over non-materialized '{base_name}'"
                ))
            })?;
            return matrix_semiring(base, n, cfg);
        }
    }
    Err(Error::Lookup(format!(
        "unknown semiring '{name}' (expected a catalog name or <base>x<n>)"
    )))
}

/// The block embedding of the 2x2 matrices over M2 into `M_n(M2)`, `n >= 3`.
///
/// Each named 2x2 matrix maps to an n x n matrix with itself as the top-left
/// block; the off-diagonal blocks repeat the rows (0 1), (1 0), or (1 1), and
/// the bottom-right block is all ones.
pub fn phi_block_embedding(n: usize, cfg: &MatrixConfig) -> Result<ElementMap> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "block embedding needs dimension >= 3, got {n}"
        )));
    }
    let source = m2m2_semiring()?;
    let m2 = catalog("M2")?;
    let target = matrix_semiring(&m2, n, cfg)?;
    let labeling = reconstruct_m2m2_labels()?;

    // Right block columns / bottom block rows per name: h = (0,1), k = (1,0),
    // j = (1,1), following the displayed blocks.
    let blocks: &[(&str, (usize, usize), (usize, usize))] = &[
        ("A", (0, 1), (1, 0)),
        ("B", (1, 0), (0, 1)),
        ("C", (1, 0), (1, 0)),
        ("D", (0, 1), (0, 1)),
        ("P", (1, 1), (1, 0)),
        ("Q", (1, 1), (0, 1)),
        ("R", (0, 1), (1, 1)),
        ("S", (1, 0), (1, 1)),
        ("E", (1, 1), (1, 1)),
        ("G", (1, 1), (1, 1)),
        ("W", (1, 1), (1, 1)),
        ("X", (1, 1), (1, 1)),
        ("Y", (1, 1), (1, 1)),
        ("Z", (1, 1), (1, 1)),
    ];
    let block_of: BTreeMap<&str, ((usize, usize), (usize, usize))> = blocks
        .iter()
        .map(|&(name, right, bottom)| (name, (right, bottom)))
        .collect();

    let mut image = vec![0u64; 16];
    for code in 0..16u64 {
        let name = labeling.name(code).to_string();
        let entries: Vec<usize> = if name == "O" {
            vec![0; n * n]
        } else if name == "F" {
            vec![1; n * n]
        } else {
            let top = labeling.entries(&name).expect("named");
            let ((r0, r1), (b0, b1)) = block_of[name.as_str()];
            let mut e = vec![1usize; n * n];
            e[0] = top[0][0];
            e[1] = top[0][1];
            e[n] = top[1][0];
            e[n + 1] = top[1][1];
            for j in 2..n {
                e[j] = r0;
                e[n + j] = r1;
            }
            for i in 2..n {
                e[i * n] = b0;
                e[i * n + 1] = b1;
            }
            e
        };
        image[code as usize] = encode(&entries, 2);
    }
    Ok(ElementMap {
        source: SemiringHandle::Table(Arc::new(source)),
        target,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::verify_ai_axioms;

    fn table(h: &SemiringHandle) -> FiniteSemiring {
        h.as_table().expect("materialized").clone()
    }

    #[test]
    fn sizes_of_matrix_semirings() {
        let cfg = MatrixConfig::default();
        let m2 = catalog("M2").unwrap();
        assert_eq!(matrix_semiring(&m2, 2, &cfg).unwrap().ops().size(), 16);
        let l2 = catalog("L2").unwrap();
        assert_eq!(matrix_semiring(&l2, 3, &cfg).unwrap().ops().size(), 512);
        let s = catalog("S54").unwrap();
        assert_eq!(matrix_semiring(&s, 1, &cfg).unwrap().ops().size(), 3);
    }

    #[test]
    fn encode_decode_round_trip() {
        for m in [2usize, 3, 6] {
            let len = 4;
            let total = (m as u64).pow(len as u32);
            for code in 0..total {
                assert_eq!(encode(&decode(code, m, len), m), code);
            }
        }
    }

    #[test]
    fn materialized_matrix_semirings_pass_axioms() {
        let cfg = MatrixConfig::default();
        for name in crate::catalog::catalog_names() {
            let base = catalog(name).unwrap();
            for n in [1usize, 2] {
                if (base.size() as u64).pow((n * n) as u32) > cfg.materialize_cap {
                    continue;
                }
                let mat = table(&matrix_semiring(&base, n, &cfg).unwrap());
                assert!(verify_ai_axioms(&mat).pass, "{name} n={n}");
            }
        }
        // Dimension three, representative bases.
        for name in ["L2", "M2", "D2"] {
            let base = catalog(name).unwrap();
            let mat = table(&matrix_semiring(&base, 3, &cfg).unwrap());
            assert!(verify_ai_axioms(&mat).pass, "{name} n=3");
        }
    }

    #[test]
    fn dimension_one_is_isomorphic_to_the_base() {
        let cfg = MatrixConfig::default();
        for name in crate::catalog::catalog_names() {
            let base = catalog(name).unwrap();
            let mat = table(&matrix_semiring(&base, 1, &cfg).unwrap());
            assert!(
                find_isomorphism(&mat, &base, &IsoConfig::default()).is_some(),
                "{name}"
            );
        }
    }

    #[test]
    fn lazy_agrees_with_materialized() {
        let m2 = catalog("M2").unwrap();
        let cfg = MatrixConfig::default();
        let mat = table(&matrix_semiring(&m2, 2, &cfg).unwrap());
        let lazy = matrix_semiring(
            &m2,
            2,
            &MatrixConfig {
                materialize_cap: 1,
                allow_lazy: true,
            },
        )
        .unwrap();
        let lazy = lazy.ops();
        for a in 0..16u64 {
            for b in 0..16u64 {
                assert_eq!(lazy.add(a, b), SemiringOps::add(&mat, a, b));
                assert_eq!(lazy.mul(a, b), SemiringOps::mul(&mat, a, b));
            }
        }
    }

    #[test]
    fn capacity_error_when_lazy_disabled() {
        let m2 = catalog("M2").unwrap();
        let err = matrix_semiring(
            &m2,
            3,
            &MatrixConfig {
                materialize_cap: 16,
                allow_lazy: false,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
    }

    #[test]
    fn constant_embedding_is_injective_homomorphism() {
        let cfg = MatrixConfig::default();
        for name in ["M2", "D2", "S54"] {
            let base = catalog(name).unwrap();
            for n in [1usize, 2, 3] {
                let map = constant_embedding(&base, n, &cfg).unwrap();
                let report = verify_homomorphism(&map);
                assert!(report.homomorphism && report.injective, "{name} n={n}");
            }
        }
    }

    #[test]
    fn constant_embedding_sends_one_to_all_ones() {
        let d2 = catalog("D2").unwrap();
        let map = constant_embedding(&d2, 2, &MatrixConfig::default()).unwrap();
        assert_eq!(map.image[1], encode(&[1, 1, 1, 1], 2));
        assert_eq!(map.image[0], 0);
    }

    #[test]
    fn padding_examples() {
        let cfg = MatrixConfig::default();
        let n2 = catalog("N2").unwrap();
        let map = padding_embedding(&n2, 1, &cfg).unwrap();
        // 1 -> [[1,0],[0,0]]
        assert_eq!(map.image[1], encode(&[1, 0, 0, 0], 2));
        let report = verify_homomorphism(&map);
        assert!(report.homomorphism && report.injective);

        let d2 = catalog("D2").unwrap();
        let map = padding_embedding(&d2, 2, &cfg).unwrap();
        let report = verify_homomorphism(&map);
        assert!(report.homomorphism && report.injective);

        let err = padding_embedding(&catalog("L2").unwrap(), 1, &cfg).unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("absorption"), "{msg}"),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn closure_examples() {
        let mat = m2m2_semiring().unwrap();
        let labeling = reconstruct_m2m2_labels().unwrap();
        let seed = vec![labeling.code("O").unwrap(), labeling.code("A").unwrap()];
        let closed = subsemiring_closure(&mat, &seed).unwrap();
        let names: BTreeSet<&str> = closed.iter().map(|&c| labeling.name(c)).collect();
        assert_eq!(
            names,
            ["O", "A", "P", "R", "Z", "F"].into_iter().collect()
        );

        let all: Vec<u64> = (0..16).collect();
        assert_eq!(subsemiring_closure(&mat, &all).unwrap(), all);

        let o = vec![labeling.code("O").unwrap()];
        assert_eq!(subsemiring_closure(&mat, &o).unwrap(), o);
    }

    #[test]
    fn l2_and_r2_are_not_isomorphic() {
        let l2 = catalog("L2").unwrap();
        let r2 = catalog("R2").unwrap();
        assert!(find_isomorphism(&l2, &r2, &IsoConfig::default()).is_none());
    }

    #[test]
    fn identity_isomorphism_on_every_catalog_semiring() {
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            let iso = find_isomorphism(&s, &s, &IsoConfig::default()).unwrap();
            // Some catalog semirings admit nontrivial automorphisms; a valid
            // bijection is all we require here.
            for a in 0..s.size() {
                for b in 0..s.size() {
                    assert_eq!(iso[s.add_of(a, b)], s.add_of(iso[a], iso[b]));
                    assert_eq!(iso[s.mul_of(a, b)], s.mul_of(iso[a], iso[b]));
                }
            }
        }
    }

    #[test]
    fn pruned_search_used_above_the_cap() {
        // Force the pruned path by lowering the cap; results must agree.
        let sr6 = catalog("SR6").unwrap();
        let cfg = IsoConfig { exhaustive_cap: 2 };
        assert!(find_isomorphism(&sr6, &sr6, &cfg).is_some());
        let s58 = catalog("S58").unwrap();
        let s56 = catalog("S56").unwrap();
        assert!(find_isomorphism(&s58, &s56, &cfg).is_none());
    }

    #[test]
    fn reconstruction_matches_the_stated_matrices() {
        let labeling = reconstruct_m2m2_labels().unwrap();
        assert_eq!(labeling.entries("P").unwrap(), [[1, 0], [1, 0]]);
        assert_eq!(labeling.entries("R").unwrap(), [[0, 0], [1, 1]]);
        assert_eq!(labeling.entries("Z").unwrap(), [[1, 0], [1, 1]]);
        assert_eq!(labeling.entries("G").unwrap(), [[0, 1], [1, 0]]);
        assert_eq!(labeling.entries("E").unwrap(), [[1, 0], [0, 1]]);
    }

    #[test]
    fn phi_examples() {
        let cfg = MatrixConfig::default();
        let map = phi_block_embedding(3, &cfg).unwrap();
        let labeling = reconstruct_m2m2_labels().unwrap();
        let o = labeling.code("O").unwrap() as usize;
        let f = labeling.code("F").unwrap() as usize;
        assert_eq!(map.image[o], 0);
        assert_eq!(map.image[f], encode(&[1; 9], 2));
        let a = labeling.code("A").unwrap() as usize;
        // Top-left block A, right column (0,1)^T, bottom row (1,0), rest ones.
        assert_eq!(
            map.image[a],
            encode(&[0, 0, 0, 1, 0, 1, 1, 0, 1], 2)
        );
        assert!(phi_block_embedding(2, &cfg).is_err());
    }

    #[test]
    fn closure_is_monotone_idempotent_extensive() {
        use rand::{Rng, SeedableRng};
        let mat = m2m2_semiring().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let k = rng.gen_range(1..=4);
            let seed: Vec<u64> = (0..k).map(|_| rng.gen_range(0..16)).collect();
            let closed = subsemiring_closure(&mat, &seed).unwrap();
            let closed_set: BTreeSet<u64> = closed.iter().copied().collect();
            // Extensive.
            assert!(seed.iter().all(|e| closed_set.contains(e)));
            // Idempotent.
            assert_eq!(subsemiring_closure(&mat, &closed).unwrap(), closed);
            // Monotone: enlarging the seed cannot shrink the closure.
            let mut bigger = seed.clone();
            bigger.push(rng.gen_range(0..16));
            let closed2: BTreeSet<u64> = subsemiring_closure(&mat, &bigger)
                .unwrap()
                .into_iter()
                .collect();
            assert!(closed_set.is_subset(&closed2));
        }
    }
}
