//! Equational derivations over sum-of-words terms: single rewrite steps,
//! script replay, seeded semantic validation, and bounded proof search.
//!
//! One step instantiates a catalog (or inline) identity with a substitution,
//! wraps every word of both sides in a one-hole multiplicative context
//! `a·_·b`, and then either enlarges the current term by the instantiated
//! right side or replaces the instantiated left side with it. Enlargement is
//! sound by additive idempotency: when `L ⊆ t`, `t ≈ t + L ≈ t + R`.

use crate::catalog::identity_catalog;
use crate::error::{Error, Result};
use crate::matrix::{resolve_semiring, MatrixConfig};
use crate::satisfy::satisfies_sampled;
use crate::term::{parse_identity, parse_normalized, Identity, SimpleIdentity, Term, Word};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Map from identity variables to replacement terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution(BTreeMap<String, Term>);

impl Substitution {
    pub fn new(map: BTreeMap<String, Term>) -> Self {
        Substitution(map)
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.0.get(var)
    }

    pub fn map(&self) -> &BTreeMap<String, Term> {
        &self.0
    }

    /// Substituting into a word distributes the images' sums over the
    /// concatenation.
    pub fn apply_to_word(&self, w: &Word) -> Result<Term> {
        let mut acc: Option<Term> = None;
        for l in w.letters() {
            let image = self
                .0
                .get(l)
                .ok_or_else(|| Error::UnassignedVariable(l.clone()))?;
            acc = Some(match acc {
                None => image.clone(),
                Some(t) => t.product(image),
            });
        }
        Ok(acc.expect("words are nonempty"))
    }

    pub fn apply_to_term(&self, t: &Term) -> Result<Term> {
        let mut acc: Option<Term> = None;
        for w in t.words() {
            let part = self.apply_to_word(w)?;
            acc = Some(match acc {
                None => part,
                Some(t) => t.union(&part),
            });
        }
        Ok(acc.expect("terms are nonempty"))
    }
}

/// One-hole multiplicative context `left · _ · right`; both sides may be
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordContext {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl WordContext {
    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    pub fn wrap_word(&self, w: &Word) -> Word {
        let mut letters = self.left.clone();
        letters.extend(w.letters().iter().cloned());
        letters.extend(self.right.iter().cloned());
        Word::new(letters).expect("nonempty")
    }

    pub fn wrap_term(&self, t: &Term) -> Term {
        Term::new(t.words().iter().map(|w| self.wrap_word(w))).expect("nonempty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepMode {
    Enlarge,
    Replace,
}

/// The identity a step instantiates: a catalog key or an inline equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepIdentity {
    Key(String),
    Inline(Identity),
}

impl StepIdentity {
    pub fn resolve(&self) -> Result<Identity> {
        match self {
            StepIdentity::Key(key) => Ok(identity_catalog().get(key)?.identity.clone()),
            StepIdentity::Inline(id) => Ok(id.clone()),
        }
    }

    pub fn display(&self) -> String {
        match self {
            StepIdentity::Key(key) => key.clone(),
            StepIdentity::Inline(id) => id.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub identity: StepIdentity,
    pub direction: Direction,
    pub subst: Substitution,
    pub ctx: WordContext,
    pub mode: StepMode,
}

impl RewriteStep {
    /// The instantiated, context-wrapped (trigger, replacement) pair.
    pub fn instance(&self) -> Result<(Term, Term)> {
        let id = self.identity.resolve()?;
        let (from, to) = match self.direction {
            Direction::Forward => (&id.lhs, &id.rhs),
            Direction::Backward => (&id.rhs, &id.lhs),
        };
        Ok((
            self.ctx.wrap_term(&self.subst.apply_to_term(from)?),
            self.ctx.wrap_term(&self.subst.apply_to_term(to)?),
        ))
    }
}

/// Applies one step to a term. The instantiated left side must be contained
/// in `t`; enlarge unites the right side, replace swaps it in.
pub fn apply_step(t: &Term, step: &RewriteStep) -> Result<Term> {
    let (trigger, replacement) = step.instance()?;
    for w in trigger.words() {
        if !t.contains(w) {
            return Err(Error::StepMismatch(w.to_string()));
        }
    }
    Ok(match step.mode {
        StepMode::Enlarge => t.union(&replacement),
        StepMode::Replace => Term::new(
            t.words()
                .iter()
                .filter(|w| !trigger.contains(w))
                .chain(replacement.words().iter())
                .cloned(),
        )
        .expect("replacement is nonempty"),
    })
}

#[derive(Debug, Clone)]
pub struct DerivationScript {
    pub name: String,
    /// Semiring in which the script's steps are semantically validated.
    pub model: Option<String>,
    pub start: Term,
    pub steps: Vec<RewriteStep>,
    pub end: Term,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    id: String,
    dir: String,
    subst: BTreeMap<String, String>,
    #[serde(default)]
    ctx: (String, String),
    mode: String,
}

#[derive(Serialize, Deserialize)]
struct ScriptJson {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    model: Option<String>,
    start: String,
    steps: Vec<StepJson>,
    end: String,
}

fn parse_context_side(text: &str) -> Result<Vec<String>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let t = parse_normalized(text)?;
    if t.words().len() != 1 {
        return Err(Error::Format(format!(
            "context side '{text}' must be a single word"
        )));
    }
    Ok(t.words()[0].letters().to_vec())
}

impl DerivationScript {
    /// Loads the JSON script format:
    /// `{"start": term, "steps": [{"id", "dir", "subst", "ctx", "mode"}...], "end": term}`
    /// with optional `"name"` and `"model"` fields.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: ScriptJson = serde_json::from_str(text)?;
        let steps = raw
            .steps
            .into_iter()
            .map(|s| {
                let identity = if identity_catalog().get(&s.id).is_ok() {
                    StepIdentity::Key(s.id)
                } else if s.id.contains('≈') || s.id.contains('=') {
                    StepIdentity::Inline(parse_identity(&s.id)?)
                } else {
                    return Err(Error::Lookup(format!("unknown identity key '{}'", s.id)));
                };
                let direction = match s.dir.as_str() {
                    "fwd" => Direction::Forward,
                    "bwd" => Direction::Backward,
                    other => {
                        return Err(Error::Format(format!(
                            "direction must be 'fwd' or 'bwd', got '{other}'"
                        )))
                    }
                };
                let mode = match s.mode.as_str() {
                    "enlarge" => StepMode::Enlarge,
                    "replace" => StepMode::Replace,
                    other => {
                        return Err(Error::Format(format!(
                            "mode must be 'enlarge' or 'replace', got '{other}'"
                        )))
                    }
                };
                let subst = Substitution(
                    s.subst
                        .into_iter()
                        .map(|(var, image)| Ok((var, parse_normalized(&image)?)))
                        .collect::<Result<_>>()?,
                );
                Ok(RewriteStep {
                    identity,
                    direction,
                    subst,
                    ctx: WordContext {
                        left: parse_context_side(&s.ctx.0)?,
                        right: parse_context_side(&s.ctx.1)?,
                    },
                    mode,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivationScript {
            name: raw.name.unwrap_or_default(),
            model: raw.model,
            start: parse_normalized(&raw.start)?,
            steps,
            end: parse_normalized(&raw.end)?,
        })
    }

    pub fn to_json_string(&self) -> String {
        let raw = ScriptJson {
            name: if self.name.is_empty() {
                None
            } else {
                Some(self.name.clone())
            },
            model: self.model.clone(),
            start: self.start.to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    id: s.identity.display(),
                    dir: match s.direction {
                        Direction::Forward => "fwd".into(),
                        Direction::Backward => "bwd".into(),
                    },
                    subst: s
                        .subst
                        .map()
                        .iter()
                        .map(|(v, t)| (v.clone(), t.to_string()))
                        .collect(),
                    ctx: (
                        s.ctx.left.concat(),
                        s.ctx.right.concat(),
                    ),
                    mode: match s.mode {
                        StepMode::Enlarge => "enlarge".into(),
                        StepMode::Replace => "replace".into(),
                    },
                })
                .collect(),
            end: self.end.to_string(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

/// Replays a script, returning every intermediate term (the trace starts at
/// `start` and has one entry per step after it). The final term must equal
/// the script's `end`.
pub fn replay_script(script: &DerivationScript) -> Result<Vec<Term>> {
    let mut trace = vec![script.start.clone()];
    for step in &script.steps {
        let next = apply_step(trace.last().unwrap(), step)?;
        trace.push(next);
    }
    let got = trace.last().unwrap();
    if *got != script.end {
        return Err(Error::ReplayMismatch {
            got: got.to_string(),
            expected: script.end.to_string(),
        });
    }
    Ok(trace)
}

/// Checks each replay transition `t_i ≈ t_{i+1}` on seeded random
/// assignments in the script's model (default `M2x2`). Returns the number of
/// assignments evaluated; a counterexample is a precondition error naming
/// the offending step.
pub fn validate_script(script: &DerivationScript, samples: u64, seed: u64) -> Result<u64> {
    let trace = replay_script(script)?;
    let model_name = script.model.as_deref().unwrap_or("M2x2");
    let model = resolve_semiring(model_name, &MatrixConfig::default())?;
    let ops = model.ops();
    let mut total = 0;
    for (i, pair) in trace.windows(2).enumerate() {
        let id = Identity::new(pair[0].clone(), pair[1].clone());
        let v = satisfies_sampled(ops, &id, samples, seed.wrapping_add(i as u64))?;
        total += v.assignments_checked;
        if !v.holds {
            return Err(Error::Precondition(format!(
                "step {} is not an equivalence in {model_name}: {id} fails",
                i + 1
            )));
        }
    }
    Ok(total)
}

pub const BUNDLED_SCRIPTS: [(&str, &str); 6] = [
    ("cor42", include_str!("../data/cor42.json")),
    ("prop31-case1", include_str!("../data/prop31-case1.json")),
    (
        "prop31-case2-witness-note",
        include_str!("../data/prop31-case2-witness-note.json"),
    ),
    ("prop41-case1", include_str!("../data/prop41-case1.json")),
    ("prop41-case2", include_str!("../data/prop41-case2.json")),
    ("prop41-case3", include_str!("../data/prop41-case3.json")),
];

pub fn bundled_script_names() -> Vec<&'static str> {
    BUNDLED_SCRIPTS.iter().map(|(n, _)| *n).collect()
}

pub fn bundled_script(name: &str) -> Result<DerivationScript> {
    let (_, text) = BUNDLED_SCRIPTS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Lookup(format!("no bundled script '{name}'")))?;
    DerivationScript::from_json_str(text)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_steps: usize,
    pub max_ctx_len: usize,
    pub max_subst_word_len: usize,
    pub frontier_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_steps: 6,
            max_ctx_len: 2,
            max_subst_word_len: 4,
            frontier_cap: 100_000,
        }
    }
}

type Binding = BTreeMap<String, Vec<String>>;

// Extends `bound` so that the letter sequence `mid` factors as the
// concatenation of the images of `vars`, every image nonempty and at most
// `max_len` letters. Calls `sink` for each complete extension.
fn segmentations(
    mid: &[String],
    vars: &[String],
    max_len: usize,
    bound: &mut Binding,
    sink: &mut dyn FnMut(&Binding),
) {
    match vars.split_first() {
        None => {
            if mid.is_empty() {
                sink(bound);
            }
        }
        Some((v, rest)) => {
            if let Some(image) = bound.get(v).cloned() {
                if mid.len() >= image.len() && mid[..image.len()] == image[..] {
                    segmentations(&mid[image.len()..], rest, max_len, bound, sink);
                }
                return;
            }
            let limit = max_len.min(mid.len());
            for take in 1..=limit {
                bound.insert(v.clone(), mid[..take].to_vec());
                segmentations(&mid[take..], rest, max_len, bound, sink);
                bound.remove(v);
            }
        }
    }
}

// Matches the remaining trigger words (each wrapped in `ctx`) against words
// of `t`, extending `bound`; collects complete bindings.
fn match_rest(
    t: &Term,
    ctx: &WordContext,
    rest: &[Word],
    max_len: usize,
    bound: &mut Binding,
    out: &mut Vec<Binding>,
) {
    match rest.split_first() {
        None => out.push(bound.clone()),
        Some((f, tail)) => {
            for w in t.words() {
                let letters = w.letters();
                let total = ctx.left.len() + ctx.right.len();
                if letters.len() <= total
                    || letters[..ctx.left.len()] != ctx.left[..]
                    || letters[letters.len() - ctx.right.len()..] != ctx.right[..]
                {
                    continue;
                }
                let mid = &letters[ctx.left.len()..letters.len() - ctx.right.len()];
                let mut sink = |b: &Binding| {
                    let mut b = b.clone();
                    match_rest(t, ctx, tail, max_len, &mut b, out);
                };
                segmentations(mid, f.letters(), max_len, bound, &mut sink);
            }
        }
    }
}

fn binding_to_subst(b: &Binding) -> Substitution {
    Substitution(
        b.iter()
            .map(|(v, letters)| {
                (
                    v.clone(),
                    Term::singleton(Word::new(letters.clone()).expect("nonempty")),
                )
            })
            .collect(),
    )
}

/// Breadth-first search for a derivation of `goal.u ≈ goal.u + goal.q` using
/// enlarge steps over the given catalog keys. A hit is any reachable term
/// containing `q`; `None` means the bounded space is exhausted, which says
/// nothing about derivability. Deterministic: generations are processed
/// synchronously and candidate steps are ordered by key, direction, target
/// word, and context length.
pub fn bounded_search(
    keys: &[String],
    goal: &SimpleIdentity,
    cfg: &SearchConfig,
) -> Result<Option<DerivationScript>> {
    if cfg.max_steps == 0 || cfg.frontier_cap == 0 {
        return Err(Error::Precondition("search limits must be positive".into()));
    }
    let start = goal.u.clone();
    let script = |steps: Vec<RewriteStep>, end: Term| DerivationScript {
        name: String::new(),
        model: None,
        start: start.clone(),
        steps,
        end,
    };
    if goal.is_trivial() {
        return Ok(Some(script(Vec::new(), start.clone())));
    }

    let identities: Vec<(String, Identity)> = keys
        .iter()
        .map(|k| Ok((k.clone(), identity_catalog().get(k)?.identity.clone())))
        .collect::<Result<_>>()?;

    // Pool of candidate images for variables the trigger match leaves
    // unbound: all subwords of the goal's words, shortest first.
    let mut pool: BTreeSet<Vec<String>> = BTreeSet::new();
    for w in start.words().iter().chain(std::iter::once(&goal.q)) {
        let letters = w.letters();
        for i in 0..letters.len() {
            for j in (i + 1)..=letters.len().min(i + cfg.max_subst_word_len) {
                pool.insert(letters[i..j].to_vec());
            }
        }
    }
    let mut pool: Vec<Vec<String>> = pool.into_iter().collect();
    pool.sort_by_key(|w| (w.len(), w.clone()));

    // Context letters come from the same alphabet.
    let alphabet: BTreeSet<String> = pool.iter().flatten().cloned().collect();

    let mut contexts: Vec<WordContext> = Vec::new();
    let mut sides: Vec<Vec<Vec<String>>> = vec![vec![Vec::new()]];
    for len in 1..=cfg.max_ctx_len {
        let mut level = Vec::new();
        for shorter in &sides[len - 1] {
            for l in &alphabet {
                let mut w = shorter.clone();
                w.push(l.clone());
                level.push(w);
            }
        }
        sides.push(level);
    }
    let flat: Vec<Vec<String>> = sides.into_iter().flatten().collect();
    for left in &flat {
        for right in &flat {
            contexts.push(WordContext {
                left: left.clone(),
                right: right.clone(),
            });
        }
    }
    // Shorter contexts first; the empty context is tried before any other.
    contexts.sort_by_key(|c| (c.left.len() + c.right.len(), c.left.clone(), c.right.clone()));

    let mut visited: BTreeSet<Term> = BTreeSet::new();
    visited.insert(start.clone());
    let mut parents: BTreeMap<Term, (Term, RewriteStep)> = BTreeMap::new();
    let mut frontier = vec![start.clone()];

    let reconstruct = |end: &Term, parents: &BTreeMap<Term, (Term, RewriteStep)>| {
        let mut steps = Vec::new();
        let mut cur = end.clone();
        while let Some((prev, step)) = parents.get(&cur) {
            steps.push(step.clone());
            cur = prev.clone();
        }
        steps.reverse();
        steps
    };

    for _generation in 0..cfg.max_steps {
        let mut next = Vec::new();
        for t in &frontier {
            for (key, id) in &identities {
                for direction in [Direction::Forward, Direction::Backward] {
                    let (from, to) = match direction {
                        Direction::Forward => (&id.lhs, &id.rhs),
                        Direction::Backward => (&id.rhs, &id.lhs),
                    };
                    let to_vars = to.variables();
                    for ctx in &contexts {
                        let mut bindings = Vec::new();
                        match_rest(
                            t,
                            ctx,
                            from.words(),
                            cfg.max_subst_word_len,
                            &mut BTreeMap::new(),
                            &mut bindings,
                        );
                        bindings.sort();
                        bindings.dedup();
                        for binding in bindings {
                            let unbound: Vec<&String> = to_vars
                                .iter()
                                .filter(|v| !binding.contains_key(*v))
                                .collect();
                            let mut fills: Vec<Binding> = vec![binding.clone()];
                            for v in unbound {
                                let mut widened = Vec::new();
                                for f in &fills {
                                    for image in &pool {
                                        let mut f = f.clone();
                                        f.insert(v.clone(), image.clone());
                                        widened.push(f);
                                    }
                                }
                                fills = widened;
                            }
                            for fill in fills {
                                let step = RewriteStep {
                                    identity: StepIdentity::Key(key.clone()),
                                    direction,
                                    subst: binding_to_subst(&fill),
                                    ctx: ctx.clone(),
                                    mode: StepMode::Enlarge,
                                };
                                let child = match apply_step(t, &step) {
                                    Ok(c) => c,
                                    Err(Error::UnassignedVariable(_)) => continue,
                                    Err(e) => return Err(e),
                                };
                                if !visited.insert(child.clone()) {
                                    continue;
                                }
                                parents.insert(child.clone(), (t.clone(), step));
                                if child.contains(&goal.q) {
                                    let steps = reconstruct(&child, &parents);
                                    return Ok(Some(script(steps, child)));
                                }
                                if visited.len() > cfg.frontier_cap {
                                    return Err(Error::Capacity(format!(
                                        "search frontier exceeded {} terms",
                                        cfg.frontier_cap
                                    )));
                                }
                                next.push(child);
                            }
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::as_simple_identity;

    fn term(text: &str) -> Term {
        parse_normalized(text).unwrap()
    }

    fn step(id: &str, dir: Direction, subst: &[(&str, &str)], mode: StepMode) -> RewriteStep {
        RewriteStep {
            identity: StepIdentity::Key(id.into()),
            direction: dir,
            subst: Substitution(
                subst
                    .iter()
                    .map(|(v, t)| (v.to_string(), term(t)))
                    .collect(),
            ),
            ctx: WordContext::default(),
            mode,
        }
    }

    #[test]
    fn enlarge_example() {
        let t = term("x1x2x3x4");
        let s = step(
            "F10",
            Direction::Forward,
            &[("x", "x1"), ("y", "x2x3x4")],
            StepMode::Enlarge,
        );
        assert_eq!(apply_step(&t, &s).unwrap(), term("x1x2x3x4 + x2x3x4"));
    }

    #[test]
    fn trigger_mismatch_names_the_missing_word() {
        let t = term("x");
        let s = step(
            "F9",
            Direction::Forward,
            &[("x", "y"), ("y", "z")],
            StepMode::Enlarge,
        );
        match apply_step(&t, &s) {
            Err(Error::StepMismatch(w)) => assert_eq!(w, "yz"),
            other => panic!("expected step mismatch, got {other:?}"),
        }
    }

    #[test]
    fn replace_with_reflexive_instance_is_identity() {
        let t = term("xy + z");
        let s = RewriteStep {
            identity: StepIdentity::Inline(parse_identity("x ≈ x").unwrap()),
            direction: Direction::Forward,
            subst: Substitution([("x".to_string(), term("xy"))].into_iter().collect()),
            ctx: WordContext::default(),
            mode: StepMode::Replace,
        };
        assert_eq!(apply_step(&t, &s).unwrap(), t);
    }

    #[test]
    fn context_wrapping() {
        // F9 under the context a·_·b: trigger a(xy)b, adds a(x)b.
        let t = term("apqb");
        let s = RewriteStep {
            identity: StepIdentity::Key("F9".into()),
            direction: Direction::Forward,
            subst: Substitution(
                [("x".to_string(), term("p")), ("y".to_string(), term("q"))]
                    .into_iter()
                    .collect(),
            ),
            ctx: WordContext {
                left: vec!["a".into()],
                right: vec!["b".into()],
            },
            mode: StepMode::Enlarge,
        };
        assert_eq!(apply_step(&t, &s).unwrap(), term("apqb + apb"));
    }

    #[test]
    fn empty_script_replays_to_its_start() {
        let script = DerivationScript {
            name: "noop".into(),
            model: None,
            start: term("x+y"),
            steps: Vec::new(),
            end: term("y+x"),
        };
        let trace = replay_script(&script).unwrap();
        assert_eq!(trace, vec![term("x+y")]);
    }

    #[test]
    fn bundled_scripts_replay_and_validate() {
        for name in bundled_script_names() {
            let script = bundled_script(name).unwrap();
            let trace = replay_script(&script).expect(name);
            assert_eq!(trace.len(), script.steps.len() + 1, "{name}");
            validate_script(&script, 1000, 1).expect(name);
        }
    }

    #[test]
    fn cor42_endpoint() {
        let script = bundled_script("cor42").unwrap();
        assert_eq!(script.steps.len(), 5);
        let trace = replay_script(&script).unwrap();
        assert_eq!(
            *trace.last().unwrap(),
            term("x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4")
        );
    }

    #[test]
    fn prop31_case1_endpoint() {
        let script = bundled_script("prop31-case1").unwrap();
        let trace = replay_script(&script).unwrap();
        let end = trace.last().unwrap();
        assert!(end.contains_all(&term("xy + xx + x")));
    }

    #[test]
    fn script_json_round_trip() {
        let script = bundled_script("cor42").unwrap();
        let text = script.to_json_string();
        let back = DerivationScript::from_json_str(&text).unwrap();
        assert_eq!(back.start, script.start);
        assert_eq!(back.end, script.end);
        assert_eq!(back.steps, script.steps);
        assert_eq!(back.model, script.model);
    }

    #[test]
    fn a_corrupted_script_fails_replay_with_a_mismatch() {
        let mut script = bundled_script("prop41-case1").unwrap();
        script.end = term("xy");
        assert!(matches!(
            replay_script(&script),
            Err(Error::ReplayMismatch { .. })
        ));
    }

    #[test]
    fn search_finds_one_step_derivation() {
        let keys: Vec<String> = ["F9", "F10", "F11"].iter().map(|s| s.to_string()).collect();
        let goal = as_simple_identity(
            &parse_identity("x1x2x3x4 ≈ x1x2x3x4 + x2x3x4").unwrap(),
        )
        .unwrap();
        let cfg = SearchConfig {
            max_steps: 2,
            ..Default::default()
        };
        let script = bounded_search(&keys, &goal, &cfg).unwrap().expect("found");
        assert_eq!(script.steps.len(), 1);
        let trace = replay_script(&script).unwrap();
        assert!(trace.last().unwrap().contains(&goal.q));
    }

    #[test]
    fn search_round_trip_on_f12_components() {
        let keys: Vec<String> = ["F9", "F10", "F11"].iter().map(|s| s.to_string()).collect();
        let cfg = SearchConfig {
            max_steps: 4,
            max_ctx_len: 1,
            max_subst_word_len: 4,
            frontier_cap: 100_000,
        };
        for q in ["x2x3x4", "x1x3x4", "x1x2x3"] {
            let goal = as_simple_identity(
                &parse_identity(&format!("x1x2x3x4 ≈ x1x2x3x4 + {q}")).unwrap(),
            )
            .unwrap();
            let script = bounded_search(&keys, &goal, &cfg).unwrap().expect(q);
            let trace = replay_script(&script).unwrap();
            assert!(trace.last().unwrap().contains(&goal.q), "{q}");
        }
    }

    #[test]
    fn search_exhausts_on_underivable_goal() {
        // The basis semiring refutes xy ≈ xy + yx, so no sound derivation
        // exists; with small limits the search must come back empty rather
        // than error.
        let keys: Vec<String> = ["F9", "F10", "F11", "F12"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let goal = as_simple_identity(&parse_identity("xy ≈ xy + yx").unwrap()).unwrap();
        let cfg = SearchConfig {
            max_steps: 2,
            max_ctx_len: 1,
            max_subst_word_len: 2,
            frontier_cap: 100_000,
        };
        assert!(bounded_search(&keys, &goal, &cfg).unwrap().is_none());
    }

    #[test]
    fn trivial_goal_yields_empty_script() {
        let goal = as_simple_identity(&parse_identity("xy ≈ xy").unwrap()).unwrap();
        let script = bounded_search(&[], &goal, &SearchConfig::default())
            .unwrap()
            .expect("trivial");
        assert!(script.steps.is_empty());
        assert_eq!(script.start, script.end);
    }

    #[test]
    fn tiny_frontier_cap_is_a_capacity_error() {
        // F1 introduces a fresh variable on its right side, so its search
        // tree keeps growing and must trip the cap instead of looping.
        let keys: Vec<String> = vec!["F1".into()];
        let goal = as_simple_identity(&parse_identity("xy ≈ xy + yx").unwrap()).unwrap();
        let cfg = SearchConfig {
            max_steps: 4,
            max_ctx_len: 1,
            max_subst_word_len: 4,
            frontier_cap: 5,
        };
        assert!(matches!(
            bounded_search(&keys, &goal, &cfg),
            Err(Error::Capacity(_))
        ));
    }
}
