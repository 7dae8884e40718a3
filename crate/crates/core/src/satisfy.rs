//! Deciding whether a finite semiring satisfies an identity: exhaustive
//! assignment enumeration, seeded sampling, the closed-form syntactic
//! criteria for the two-element semirings, and necessary conditions for
//! three of the three-element ones.
//!
//! Exhaustive checks enumerate all `m^k` assignments with a mixed-radix
//! odometer and per-word prefix-product caching; the assignment space is
//! split into a fixed number of ranges processed in parallel, and the
//! reported counterexample is the one with the least flat index, so results
//! do not depend on the worker count.

use crate::error::{Error, Result};
use crate::semiring::SemiringOps;
use crate::term::{
    term_stats, word_stats, Identity, SimpleIdentity, Term, Word,
};
use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

#[derive(Debug, Clone)]
pub struct SatConfig {
    /// Exhaustive checks refuse more variables than this (the assignment
    /// space is `m^k`).
    pub max_vars: usize,
    pub parallel: bool,
}

impl Default for SatConfig {
    fn default() -> Self {
        SatConfig {
            max_vars: 8,
            parallel: true,
        }
    }
}

/// A variable assignment, values parallel to `vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub vars: Vec<String>,
    pub values: Vec<u64>,
}

impl Assignment {
    pub fn labels(&self, ops: &dyn SemiringOps) -> Vec<(String, String)> {
        self.vars
            .iter()
            .zip(self.values.iter())
            .map(|(v, &x)| (v.clone(), ops.label(x)))
            .collect()
    }
}

/// Outcome of a satisfaction check.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Assignment>,
    /// Values of the two sides under the witness.
    pub side_values: Option<(u64, u64)>,
    pub assignments_checked: u64,
}

impl Verdict {
    pub fn to_json(&self, ops: &dyn SemiringOps) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|a| {
            let map: BTreeMap<String, String> = a
                .labels(ops)
                .into_iter()
                .collect();
            map
        });
        let sides = self
            .side_values
            .map(|(l, r)| (ops.label(l), ops.label(r)));
        serde_json::json!({
            "semiring": ops.name(),
            "holds": self.holds,
            "witness": witness,
            "lhs_value": sides.as_ref().map(|s| s.0.clone()),
            "rhs_value": sides.as_ref().map(|s| s.1.clone()),
            "assignments_checked": self.assignments_checked,
        })
    }
}

/// An identity with variables resolved to indices, ready for evaluation.
/// Variable order is first occurrence in the printed identity.
#[derive(Debug, Clone)]
pub struct CompiledIdentity {
    pub vars: Vec<String>,
    lhs: Vec<Vec<usize>>,
    rhs: Vec<Vec<usize>>,
}

pub fn compile_identity(id: &Identity) -> CompiledIdentity {
    let mut vars: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut side = |t: &Term| -> Vec<Vec<usize>> {
        t.words()
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|l| {
                        *index.entry(l.clone()).or_insert_with(|| {
                            vars.push(l.clone());
                            vars.len() - 1
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let lhs = side(&id.lhs);
    let rhs = side(&id.rhs);
    CompiledIdentity { vars, lhs, rhs }
}

/// Evaluates a term under an explicit assignment.
pub fn evaluate(ops: &dyn SemiringOps, t: &Term, values: &BTreeMap<String, u64>) -> Result<u64> {
    let mut acc: Option<u64> = None;
    for w in t.words() {
        let mut v: Option<u64> = None;
        for l in w.letters() {
            let x = *values
                .get(l)
                .ok_or_else(|| Error::UnassignedVariable(l.clone()))?;
            v = Some(match v {
                None => x,
                Some(p) => ops.mul(p, x),
            });
        }
        let v = v.expect("words are nonempty");
        acc = Some(match acc {
            None => v,
            Some(s) => ops.add(s, v),
        });
    }
    Ok(acc.expect("terms are nonempty"))
}

struct Counterexample {
    flat: u64,
    values: Vec<u64>,
    lhs: u64,
    rhs: u64,
}

// Scans assignments with flat index in [lo, hi); stops at the first failing
// one. A word caches the products of its prefixes, and after an odometer
// step only prefixes touching a changed variable are recomputed.
fn scan_range(
    ops: &dyn SemiringOps,
    c: &CompiledIdentity,
    lo: u64,
    hi: u64,
) -> (u64, Option<Counterexample>) {
    let m = ops.size();
    let k = c.vars.len();
    let words: Vec<&Vec<usize>> = c.lhs.iter().chain(c.rhs.iter()).collect();
    let nl = c.lhs.len();

    // restart[w][d]: first position of word w whose variable index is >= d.
    let restart: Vec<Vec<usize>> = words
        .iter()
        .map(|w| {
            (0..k)
                .map(|d| w.iter().position(|&v| v >= d).unwrap_or(w.len()))
                .collect()
        })
        .collect();

    let mut digits = vec![0u64; k];
    let mut rest = lo;
    for d in (0..k).rev() {
        digits[d] = rest % m;
        rest /= m;
    }
    // Flat index maps the first variable to the most significant digit, so
    // the least flat counterexample is lexicographically least in `vars`.

    let mut partials: Vec<Vec<u64>> = words.iter().map(|w| vec![0u64; w.len()]).collect();
    let recompute = |partials: &mut Vec<Vec<u64>>, digits: &[u64], from_digit: usize| {
        for (wi, w) in words.iter().enumerate() {
            let mut i = restart[wi][from_digit];
            if i >= w.len() {
                continue;
            }
            if i == 0 {
                partials[wi][0] = digits[w[0]];
                i = 1;
            }
            while i < w.len() {
                partials[wi][i] = ops.mul(partials[wi][i - 1], digits[w[i]]);
                i += 1;
            }
        }
    };
    recompute(&mut partials, &digits, 0);

    let mut flat = lo;
    let mut checked = 0u64;
    loop {
        let mut lv = partials[0][words[0].len() - 1];
        for wi in 1..nl {
            lv = ops.add(lv, partials[wi][words[wi].len() - 1]);
        }
        let mut rv = partials[nl][words[nl].len() - 1];
        for wi in (nl + 1)..words.len() {
            rv = ops.add(rv, partials[wi][words[wi].len() - 1]);
        }
        checked += 1;
        if lv != rv {
            return (
                checked,
                Some(Counterexample {
                    flat,
                    values: digits.clone(),
                    lhs: lv,
                    rhs: rv,
                }),
            );
        }
        flat += 1;
        if flat == hi {
            return (checked, None);
        }
        let mut p = k - 1;
        while digits[p] == m - 1 {
            digits[p] = 0;
            p -= 1;
        }
        digits[p] += 1;
        recompute(&mut partials, &digits, p);
    }
}

/// Exhaustively decides whether the identity holds, checking all `m^k`
/// assignments. On failure the reported witness is the lexicographically
/// least counterexample.
pub fn satisfies(ops: &dyn SemiringOps, id: &Identity, cfg: &SatConfig) -> Result<Verdict> {
    if id.is_trivial() {
        return Ok(Verdict {
            holds: true,
            witness: None,
            side_values: None,
            assignments_checked: 0,
        });
    }
    let c = compile_identity(id);
    let k = c.vars.len();
    if k > cfg.max_vars {
        return Err(Error::Capacity(format!(
            "identity has {k} variables, cap is {} (the assignment space is m^k)",
            cfg.max_vars
        )));
    }
    let m = ops.size() as u128;
    let total = m
        .checked_pow(k as u32)
        .filter(|&t| t <= u64::MAX as u128)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "assignment space {}^{k} does not fit in 64 bits",
                ops.size()
            ))
        })? as u64;

    // Chunk count is a function of the problem only, never of the worker
    // count, so counts and witnesses are reproducible.
    let chunks = if cfg.parallel && total > 1 << 14 {
        (total / (1 << 16)).clamp(2, 256)
    } else {
        1
    };
    let bounds: Vec<(u64, u64)> = (0..chunks)
        .map(|i| {
            let lo = total / chunks * i + (total % chunks).min(i);
            let hi = total / chunks * (i + 1) + (total % chunks).min(i + 1);
            (lo, hi)
        })
        .collect();
    let results: Vec<(u64, Option<Counterexample>)> = if chunks == 1 {
        vec![scan_range(ops, &c, 0, total)]
    } else {
        bounds
            .par_iter()
            .map(|&(lo, hi)| scan_range(ops, &c, lo, hi))
            .collect()
    };
    let checked: u64 = results.iter().map(|(n, _)| n).sum();
    let best = results
        .into_iter()
        .filter_map(|(_, ce)| ce)
        .min_by_key(|ce| ce.flat);
    Ok(match best {
        None => Verdict {
            holds: true,
            witness: None,
            side_values: None,
            assignments_checked: checked,
        },
        Some(ce) => Verdict {
            holds: false,
            witness: Some(Assignment {
                vars: c.vars.clone(),
                values: ce.values,
            }),
            side_values: Some((ce.lhs, ce.rhs)),
            assignments_checked: checked,
        },
    })
}

/// Checks the identity on `samples` assignments drawn from a seeded
/// generator. A pass is evidence, not proof; a failure is a real
/// counterexample (not necessarily the least one).
pub fn satisfies_sampled(
    ops: &dyn SemiringOps,
    id: &Identity,
    samples: u64,
    seed: u64,
) -> Result<Verdict> {
    let c = compile_identity(id);
    let k = c.vars.len();
    let m = ops.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let die = Uniform::from(0..m);
    for n in 0..samples {
        let values: Vec<u64> = (0..k).map(|_| die.sample(&mut rng)).collect();
        let map: BTreeMap<String, u64> = c
            .vars
            .iter()
            .cloned()
            .zip(values.iter().copied())
            .collect();
        let lv = evaluate(ops, &id.lhs, &map)?;
        let rv = evaluate(ops, &id.rhs, &map)?;
        if lv != rv {
            return Ok(Verdict {
                holds: false,
                witness: Some(Assignment {
                    vars: c.vars.clone(),
                    values,
                }),
                side_values: Some((lv, rv)),
                assignments_checked: n + 1,
            });
        }
    }
    Ok(Verdict {
        holds: true,
        witness: None,
        side_values: None,
        assignments_checked: samples,
    })
}

/// The two-element semirings admit closed-form decisions for a simple
/// identity `u ≈ u + q`, no model evaluation needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionTag {
    L2,
    R2,
    N2,
    T2,
    M2,
    D2,
}

impl CriterionTag {
    pub const ALL: [CriterionTag; 6] = [
        CriterionTag::L2,
        CriterionTag::R2,
        CriterionTag::N2,
        CriterionTag::T2,
        CriterionTag::M2,
        CriterionTag::D2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CriterionTag::L2 => "L2",
            CriterionTag::R2 => "R2",
            CriterionTag::N2 => "N2",
            CriterionTag::T2 => "T2",
            CriterionTag::M2 => "M2",
            CriterionTag::D2 => "D2",
        }
    }
}

impl FromStr for CriterionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Lookup(format!("no syntactic criterion for '{s}'")))
    }
}

/// Decides `u ≈ u + q` in a two-element semiring from word statistics alone.
pub fn syntactic_criterion(tag: CriterionTag, si: &SimpleIdentity) -> bool {
    if si.is_trivial() {
        return true;
    }
    let q = word_stats(&si.q);
    let u = term_stats(&si.u);
    match tag {
        CriterionTag::L2 => u.heads.contains(&q.head),
        CriterionTag::R2 => u.tails.contains(&q.tail),
        CriterionTag::N2 => q.length >= 2,
        CriterionTag::T2 => !u.long_words.is_empty(),
        CriterionTag::M2 => q.content.is_subset(&u.content),
        CriterionTag::D2 => si
            .u
            .words()
            .iter()
            .any(|w| word_stats(w).content.is_subset(&q.content)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryTag {
    S54,
    S57,
    S60,
}

impl NecessaryTag {
    pub const ALL: [NecessaryTag; 3] = [NecessaryTag::S54, NecessaryTag::S57, NecessaryTag::S60];

    pub fn name(self) -> &'static str {
        match self {
            NecessaryTag::S54 => "S54",
            NecessaryTag::S57 => "S57",
            NecessaryTag::S60 => "S60",
        }
    }
}

impl FromStr for NecessaryTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NecessaryTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Lookup(format!("no necessary condition for '{s}'")))
    }
}

fn suffix_content(t: &Term) -> BTreeSet<String> {
    t.words()
        .iter()
        .flat_map(|w| word_stats(w).suffix)
        .collect()
}

fn prefix_content(t: &Term) -> BTreeSet<String> {
    t.words()
        .iter()
        .flat_map(|w| word_stats(w).prefix)
        .collect()
}

/// One-directional check for `u ≈ u + q`: satisfaction in the tagged
/// semiring implies this condition, but not conversely. A `false` refutes
/// satisfaction; a `true` is inconclusive.
///
/// Head-deleted and tail-deleted contents of a sum are taken as unions over
/// its summands.
pub fn necessary_conditions(tag: NecessaryTag, si: &SimpleIdentity) -> bool {
    if si.is_trivial() {
        return true;
    }
    let q = word_stats(&si.q);
    let u = term_stats(&si.u);
    if u.long_words.is_empty() {
        return false;
    }
    match tag {
        NecessaryTag::S54 => {
            let qs: BTreeSet<String> = q.suffix.iter().cloned().collect();
            qs.is_subset(&suffix_content(&si.u)) && u.content.contains(&q.head)
        }
        NecessaryTag::S57 => {
            let qp: BTreeSet<String> = q.prefix.iter().cloned().collect();
            qp.is_subset(&prefix_content(&si.u)) && u.content.contains(&q.tail)
        }
        NecessaryTag::S60 => {
            if q.length == 1 {
                q.content.is_subset(&u.content)
            } else {
                let long: BTreeSet<String> = u
                    .long_words
                    .iter()
                    .flat_map(|w| w.letters().iter().cloned())
                    .collect();
                q.content.is_subset(&long)
            }
        }
    }
}

/// Per-key verdicts for a list of identities checked in one semiring.
#[derive(Debug, Clone)]
pub struct BasisReport {
    pub semiring: String,
    pub verdicts: Vec<(String, Verdict)>,
    pub all_hold: bool,
}

impl BasisReport {
    pub fn to_json(&self, ops: &dyn SemiringOps) -> serde_json::Value {
        serde_json::json!({
            "semiring": self.semiring,
            "all_hold": self.all_hold,
            "identities": self
                .verdicts
                .iter()
                .map(|(key, v)| {
                    let mut j = v.to_json(ops);
                    j["key"] = serde_json::json!(key);
                    j
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Exhaustively checks a keyed list of identities in one semiring.
pub fn satisfies_all(
    ops: &dyn SemiringOps,
    identities: &[(String, Identity)],
    cfg: &SatConfig,
) -> Result<BasisReport> {
    let mut verdicts = Vec::new();
    let mut all_hold = true;
    for (key, id) in identities {
        let v = satisfies(ops, id, cfg)?;
        all_hold &= v.holds;
        verdicts.push((key.clone(), v));
    }
    Ok(BasisReport {
        semiring: ops.name().to_string(),
        verdicts,
        all_hold,
    })
}

/// Draws a random word over `pool` with length in `1..=max_len`.
pub fn sample_word<R: Rng>(rng: &mut R, pool: &[String], max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new(
        (0..len)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect(),
    )
    .expect("nonempty")
}

/// Draws a random term with `1..=max_summands` words.
pub fn sample_term<R: Rng>(
    rng: &mut R,
    pool: &[String],
    max_summands: usize,
    max_word_len: usize,
) -> Term {
    let n = rng.gen_range(1..=max_summands);
    Term::new((0..n).map(|_| sample_word(rng, pool, max_word_len))).expect("nonempty")
}

/// Draws a random identity, both sides over the same variable pool.
pub fn sample_identity<R: Rng>(
    rng: &mut R,
    pool: &[String],
    max_summands: usize,
    max_word_len: usize,
) -> Identity {
    Identity::new(
        sample_term(rng, pool, max_summands, max_word_len),
        sample_term(rng, pool, max_summands, max_word_len),
    )
}

/// Draws a random simple identity `u ≈ u + q`.
pub fn sample_simple_identity<R: Rng>(
    rng: &mut R,
    pool: &[String],
    max_summands: usize,
    max_word_len: usize,
) -> SimpleIdentity {
    SimpleIdentity {
        u: sample_term(rng, pool, max_summands, max_word_len),
        q: sample_word(rng, pool, max_word_len),
    }
}

#[derive(Debug, Clone)]
pub struct AgreementConfig {
    pub samples: u64,
    pub seed: u64,
    /// Size of the variable pool (x1, x2, ...).
    pub pool: usize,
    pub max_summands: usize,
    pub max_word_len: usize,
    pub sat: SatConfig,
}

impl Default for AgreementConfig {
    fn default() -> Self {
        AgreementConfig {
            samples: 1000,
            seed: 0,
            pool: 4,
            max_summands: 3,
            max_word_len: 4,
            sat: SatConfig::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Disagreement {
    pub identity: Identity,
    pub holds_in_first: bool,
}

/// Result of sampling identities and comparing satisfaction in two semirings.
/// Sampling cannot prove the equational theories equal; it can only fail to
/// separate them.
#[derive(Debug, Clone)]
pub struct AgreementReport {
    pub first: String,
    pub second: String,
    pub samples_run: u64,
    pub seed: u64,
    pub disagreement: Option<Disagreement>,
}

impl AgreementReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "first": self.first,
            "second": self.second,
            "samples_run": self.samples_run,
            "seed": self.seed,
            "agree": self.disagreement.is_none(),
            "disagreement": self.disagreement.as_ref().map(|d| serde_json::json!({
                "identity": d.identity.to_string(),
                "holds_in_first": d.holds_in_first,
                "holds_in_second": !d.holds_in_first,
            })),
        })
    }
}

/// Samples random identities and stops at the first one satisfied by exactly
/// one of the two semirings.
pub fn equational_agreement(
    first: &dyn SemiringOps,
    second: &dyn SemiringOps,
    cfg: &AgreementConfig,
) -> Result<AgreementReport> {
    let pool: Vec<String> = (1..=cfg.pool).map(|i| format!("x{i}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut run = 0;
    let mut disagreement = None;
    for _ in 0..cfg.samples {
        let id = sample_identity(&mut rng, &pool, cfg.max_summands, cfg.max_word_len);
        run += 1;
        let a = satisfies(first, &id, &cfg.sat)?.holds;
        let b = satisfies(second, &id, &cfg.sat)?.holds;
        if a != b {
            disagreement = Some(Disagreement {
                identity: id,
                holds_in_first: a,
            });
            break;
        }
    }
    Ok(AgreementReport {
        first: first.name().to_string(),
        second: second.name().to_string(),
        samples_run: run,
        seed: cfg.seed,
        disagreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, identity_catalog};
    use crate::term::{as_simple_identity, parse_identity, parse_normalized};

    fn check(semiring: &str, identity: &str) -> Verdict {
        let s = catalog(semiring).unwrap();
        let id = parse_identity(identity).unwrap();
        satisfies(&s, &id, &SatConfig::default()).unwrap()
    }

    #[test]
    fn catalog_bases_hold_in_their_semirings() {
        let cat = identity_catalog();
        let cfg = SatConfig::default();
        for name in crate::catalog::catalog_names() {
            let s = catalog(name).unwrap();
            for key in cat.basis(name).unwrap() {
                let id = &cat.get(key).unwrap().identity;
                let v = satisfies(&s, id, &cfg).unwrap();
                assert!(v.holds, "{key} should hold in {name}");
            }
        }
    }

    #[test]
    fn counterexample_is_lexicographically_least() {
        // xy ≈ x fails in R2 first at x=0, y=1.
        let v = check("R2", "xy ≈ x");
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.vars, vec!["x".to_string(), "y".to_string()]);
        assert_eq!(w.values, vec![0, 1]);
        assert_eq!(v.side_values, Some((1, 0)));
    }

    #[test]
    fn assignment_counts() {
        let v = check("M2", "x+y ≈ xy");
        assert!(v.holds);
        assert_eq!(v.assignments_checked, 4);
        // A refuted check may stop early, but never scans more than m^k.
        let v = check("L2", "xy ≈ y");
        assert!(!v.holds);
        assert!(v.assignments_checked <= 4);
    }

    #[test]
    fn trivial_identities_hold_everywhere() {
        for name in crate::catalog::catalog_names() {
            let v = check(name, "x+yz ≈ yz+x");
            assert!(v.holds);
        }
    }

    #[test]
    fn variable_cap_is_a_capacity_error() {
        let s = catalog("M2").unwrap();
        let id = parse_identity("abcdefghi ≈ a").unwrap();
        assert!(matches!(
            satisfies(&s, &id, &SatConfig::default()),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn evaluate_reports_unassigned_variables() {
        let s = catalog("M2").unwrap();
        let t = parse_normalized("xy").unwrap();
        let err = evaluate(&s, &t, &BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::UnassignedVariable(_)));
    }

    #[test]
    fn sampled_check_is_seed_deterministic() {
        let s = catalog("L2").unwrap();
        let id = parse_identity("xy ≈ y").unwrap();
        let a = satisfies_sampled(&s, &id, 100, 7).unwrap();
        let b = satisfies_sampled(&s, &id, 100, 7).unwrap();
        assert!(!a.holds);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.assignments_checked, b.assignments_checked);
    }

    #[test]
    fn criteria_match_exhaustive_checks_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let pool: Vec<String> = ["x", "y", "z", "u", "v"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let cfg = SatConfig::default();
        let semirings: Vec<_> = CriterionTag::ALL
            .iter()
            .map(|t| (*t, catalog(t.name()).unwrap()))
            .collect();
        for _ in 0..400 {
            let si = sample_simple_identity(&mut rng, &pool, 3, 6);
            let id = si.to_identity();
            for (tag, s) in &semirings {
                let predicted = syntactic_criterion(*tag, &si);
                let actual = satisfies(s, &id, &cfg).unwrap().holds;
                assert_eq!(predicted, actual, "{} on {}", tag.name(), si);
            }
        }
    }

    #[test]
    fn necessary_conditions_never_reject_a_satisfied_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let pool: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let cfg = SatConfig::default();
        let semirings: Vec<_> = NecessaryTag::ALL
            .iter()
            .map(|t| (*t, catalog(t.name()).unwrap()))
            .collect();
        let mut conclusive = 0;
        for _ in 0..400 {
            let si = sample_simple_identity(&mut rng, &pool, 3, 4);
            let id = si.to_identity();
            for (tag, s) in &semirings {
                let actual = satisfies(s, &id, &cfg).unwrap().holds;
                let condition = necessary_conditions(*tag, &si);
                if actual {
                    assert!(condition, "{} rejected a satisfied identity {}", tag.name(), si);
                }
                if !condition {
                    conclusive += 1;
                    assert!(!actual);
                }
            }
        }
        assert!(conclusive > 0, "the conditions should refute something");
    }

    #[test]
    fn condition_examples() {
        // No summand of length two: all three conditions refute u ≈ u + q.
        let si = as_simple_identity(&parse_identity("x+y ≈ x+y+xy").unwrap()).unwrap();
        for tag in NecessaryTag::ALL {
            assert!(!necessary_conditions(tag, &si));
        }
        // Head of q missing from u.
        let si = as_simple_identity(&parse_identity("xy ≈ xy+zy").unwrap()).unwrap();
        assert!(!necessary_conditions(NecessaryTag::S54, &si));
        // Tail of q missing from u.
        let si = as_simple_identity(&parse_identity("xy ≈ xy+xz").unwrap()).unwrap();
        assert!(!necessary_conditions(NecessaryTag::S57, &si));
        // q is a single letter occurring only in a length-one summand; the
        // length-two branch does not apply and the letter is in c(u).
        let si = as_simple_identity(&parse_identity("z+xy ≈ z+xy+z").unwrap()).unwrap();
        assert!(si.is_trivial() && necessary_conditions(NecessaryTag::S60, &si));
        // Trivial identities pass every condition.
        let si = as_simple_identity(&parse_identity("xy ≈ xy").unwrap()).unwrap();
        for tag in NecessaryTag::ALL {
            assert!(necessary_conditions(tag, &si));
        }
    }

    #[test]
    fn agreement_separates_l2_from_r2_and_not_n2_from_itself() {
        let l2 = catalog("L2").unwrap();
        let r2 = catalog("R2").unwrap();
        let cfg = AgreementConfig {
            samples: 200,
            ..Default::default()
        };
        let report = equational_agreement(&l2, &r2, &cfg).unwrap();
        let d = report.disagreement.expect("xy ≈ x style samples separate them");
        assert!(!d.identity.is_trivial());

        let n2 = catalog("N2").unwrap();
        let report = equational_agreement(&n2, &n2, &cfg).unwrap();
        assert!(report.disagreement.is_none());
        assert_eq!(report.samples_run, 200);
    }

    #[test]
    fn parallel_and_serial_verdicts_agree() {
        let s = catalog("SR6").unwrap();
        let id = parse_identity("x1x2x3x4 ≈ x1x2x3+x1x2x4+x1x3x4+x2x3x4").unwrap();
        let par = satisfies(&s, &id, &SatConfig { max_vars: 8, parallel: true }).unwrap();
        let ser = satisfies(&s, &id, &SatConfig { max_vars: 8, parallel: false }).unwrap();
        assert!(par.holds && ser.holds);
        assert_eq!(par.assignments_checked, 1296);
        assert_eq!(ser.assignments_checked, 1296);
    }
}
