//! Terms over the free ai-semiring: parsing, sum-of-words normal forms,
//! word statistics, and reduction of identities to simple identities.
//!
//! A word is a nonempty product of variables; a canonical term is a nonempty
//! deduplicated set of words, kept in length-lexicographic order.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A nonempty product of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<String>,
}

impl Word {
    pub fn new(letters: Vec<String>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Format("a word must be nonempty".into()));
        }
        Ok(Word { letters })
    }

    pub fn from_letters<I: IntoIterator<Item = S>, S: Into<String>>(letters: I) -> Result<Self> {
        Word::new(letters.into_iter().map(Into::into).collect())
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    /// Mirror image of the word (used for left/right duality).
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }
}

impl Ord for Word {
    // Length first, then lexicographic on variable names.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A canonical sum-of-words term: a nonempty sorted set of distinct words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    words: Vec<Word>,
}

impl Term {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let set: BTreeSet<Word> = words.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Format("a term must have at least one word".into()));
        }
        Ok(Term {
            words: set.into_iter().collect(),
        })
    }

    pub fn singleton(word: Word) -> Self {
        Term { words: vec![word] }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn contains_all(&self, other: &Term) -> bool {
        other.words.iter().all(|w| self.contains(w))
    }

    pub fn union(&self, other: &Term) -> Term {
        Term::new(self.words.iter().chain(other.words.iter()).cloned()).expect("nonempty")
    }

    /// Set difference; errors if every word would be removed.
    pub fn minus(&self, other: &Term) -> Result<Term> {
        Term::new(self.words.iter().filter(|w| !other.contains(w)).cloned())
    }

    /// Distributed product: every word of `self` concatenated with every word
    /// of `other`.
    pub fn product(&self, other: &Term) -> Term {
        Term::new(
            self.words
                .iter()
                .flat_map(|u| other.words.iter().map(move |v| u.concat(v))),
        )
        .expect("nonempty")
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.words
            .iter()
            .flat_map(|w| w.letters.iter().cloned())
            .collect()
    }

    pub fn reversed(&self) -> Term {
        Term::new(self.words.iter().map(Word::reversed)).expect("nonempty")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// A formal equation between two canonical terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Identity { lhs, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Mirrors every word on both sides.
    pub fn reversed(&self) -> Identity {
        Identity {
            lhs: self.lhs.reversed(),
            rhs: self.rhs.reversed(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≈ {}", self.lhs, self.rhs)
    }
}

/// The reduced shape `u ≈ u + q` with `q` a single word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleIdentity {
    pub u: Term,
    pub q: Word,
}

impl SimpleIdentity {
    pub fn is_trivial(&self) -> bool {
        self.u.contains(&self.q)
    }

    pub fn to_identity(&self) -> Identity {
        Identity {
            lhs: self.u.clone(),
            rhs: self.u.union(&Term::singleton(self.q.clone())),
        }
    }
}

impl fmt::Display for SimpleIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≈ {}+{}", self.u, self.u, self.q)
    }
}

/// Per-word statistics: head, tail, content, length, and the words obtained
/// by deleting the tail (`prefix`) or the head (`suffix`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStats {
    pub head: String,
    pub tail: String,
    pub content: BTreeSet<String>,
    pub length: usize,
    pub prefix: Vec<String>,
    pub suffix: Vec<String>,
}

pub fn word_stats(w: &Word) -> WordStats {
    let letters = w.letters();
    WordStats {
        head: letters.first().unwrap().clone(),
        tail: letters.last().unwrap().clone(),
        content: letters.iter().cloned().collect(),
        length: letters.len(),
        prefix: letters[..letters.len() - 1].to_vec(),
        suffix: letters[1..].to_vec(),
    }
}

/// Per-term statistics: heads, tails, content as unions over summands, and
/// the summands of length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStats {
    pub heads: BTreeSet<String>,
    pub tails: BTreeSet<String>,
    pub content: BTreeSet<String>,
    pub long_words: Vec<Word>,
}

pub fn term_stats(t: &Term) -> TermStats {
    let mut heads = BTreeSet::new();
    let mut tails = BTreeSet::new();
    let mut content = BTreeSet::new();
    let mut long_words = Vec::new();
    for w in t.words() {
        let s = word_stats(w);
        heads.insert(s.head);
        tails.insert(s.tail);
        content.extend(s.content);
        if w.len() >= 2 {
            long_words.push(w.clone());
        }
    }
    TermStats {
        heads,
        tails,
        content,
        long_words,
    }
}

/// Structured form of a parsed term, before normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Var(String),
    Product(Vec<Ast>),
    Sum(Vec<Ast>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Var(String),
    Plus,
    Star,
    Caret,
    Int(u32),
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push((pos, Token::Plus));
                i += 1;
            }
            '*' => {
                tokens.push((pos, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                i += 1;
            }
            'a'..='z' => {
                let mut name = String::new();
                name.push(c);
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    name.push(bytes[i]);
                    i += 1;
                }
                tokens.push((pos, Token::Var(name)));
            }
            '0'..='9' => {
                let mut n: u32 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(bytes[i].to_digit(10).unwrap()))
                        .ok_or(Error::Syntax {
                            pos,
                            msg: "integer literal too large".into(),
                        })?;
                    i += 1;
                }
                tokens.push((pos, Token::Int(n)));
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    // sum := product ('+' product)*
    fn sum(&mut self) -> Result<Ast> {
        let mut parts = vec![self.product()?];
        while matches!(self.peek(), Some(Token::Plus)) {
            self.bump();
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Ast::Sum(parts)
        })
    }

    // product := factor (('*')? factor)*
    fn product(&mut self) -> Result<Ast> {
        let mut parts = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    parts.push(self.factor()?);
                }
                Some(Token::Var(_)) | Some(Token::LParen) => {
                    parts.push(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Ast::Product(parts)
        })
    }

    // factor := var | var '^' int | '(' sum ')'
    fn factor(&mut self) -> Result<Ast> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Var(name)) => {
                if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    let pos = self.here();
                    match self.bump() {
                        Some(Token::Int(0)) => Err(Error::Syntax {
                            pos,
                            msg: "exponent must be at least 1 (there is no empty word)".into(),
                        }),
                        Some(Token::Int(k)) => Ok(Ast::Product(vec![Ast::Var(name); k as usize])),
                        _ => Err(Error::Syntax {
                            pos,
                            msg: "expected an integer exponent after '^'".into(),
                        }),
                    }
                } else {
                    Ok(Ast::Var(name))
                }
            }
            Some(Token::LParen) => {
                let inner = self.sum()?;
                let pos = self.here();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos,
                        msg: "expected ')'".into(),
                    }),
                }
            }
            _ => Err(Error::Syntax {
                pos,
                msg: "expected a variable or '('".into(),
            }),
        }
    }
}

/// Parses a term into an AST. Exponents `v^k` expand to k-fold products at
/// parse time; `*` is an optional synonym for juxtaposition.
pub fn parse_term(text: &str) -> Result<Ast> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty term".into(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let ast = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Syntax {
            pos: p.here(),
            msg: "trailing input after term".into(),
        });
    }
    Ok(ast)
}

/// Normalizes an AST to a canonical sum-of-words term by distributing
/// products over sums and collapsing `+` under associativity, commutativity,
/// and idempotency.
pub fn normalize(ast: &Ast) -> Term {
    match ast {
        Ast::Var(name) => Term::singleton(Word::new(vec![name.clone()]).expect("nonempty")),
        Ast::Sum(parts) => {
            let mut terms = parts.iter().map(normalize);
            let first = terms.next().expect("sum is nonempty");
            terms.fold(first, |acc, t| acc.union(&t))
        }
        Ast::Product(parts) => {
            let mut terms = parts.iter().map(normalize);
            let first = terms.next().expect("product is nonempty");
            terms.fold(first, |acc, t| acc.product(&t))
        }
    }
}

/// Parses and normalizes in one step.
pub fn parse_normalized(text: &str) -> Result<Term> {
    Ok(normalize(&parse_term(text)?))
}

/// Parses "lhs ≈ rhs" (also accepting `=`) into an identity.
pub fn parse_identity(text: &str) -> Result<Identity> {
    let (lhs, rhs) = split_identity(text)?;
    Ok(Identity::new(parse_normalized(lhs)?, parse_normalized(rhs)?))
}

fn split_identity(text: &str) -> Result<(&str, &str)> {
    for sep in ["≈", "="] {
        if let Some(idx) = text.find(sep) {
            return Ok((&text[..idx], &text[idx + sep.len()..]));
        }
    }
    Err(Error::Syntax {
        pos: text.len(),
        msg: "expected '≈' or '=' between the two sides".into(),
    })
}

/// Interprets an identity as a simple identity `u ≈ u + q`.
///
/// Accepts `rhs = lhs` (trivial; `q` is the least word of `u`) or
/// `rhs = lhs + q` for a single extra word `q`.
pub fn as_simple_identity(id: &Identity) -> Result<SimpleIdentity> {
    if !id.rhs.contains_all(&id.lhs) {
        return Err(Error::Format(format!(
            "'{id}' is not of the shape u ≈ u+q: the left side is not contained in the right"
        )));
    }
    let extra: Vec<Word> = id
        .rhs
        .words()
        .iter()
        .filter(|w| !id.lhs.contains(w))
        .cloned()
        .collect();
    match extra.len() {
        0 => Ok(SimpleIdentity {
            u: id.lhs.clone(),
            q: id.lhs.words()[0].clone(),
        }),
        1 => Ok(SimpleIdentity {
            u: id.lhs.clone(),
            q: extra.into_iter().next().unwrap(),
        }),
        k => Err(Error::Format(format!(
            "'{id}' adds {k} words; a simple identity adds exactly one"
        ))),
    }
}

/// Reduces `u ≈ v` to the family of simple identities
/// `u ≈ u + v_j` and `v ≈ v + u_i`, dropping trivial members.
pub fn reduce_identity(id: &Identity) -> Vec<SimpleIdentity> {
    let mut out = Vec::new();
    for q in id.rhs.words() {
        let si = SimpleIdentity {
            u: id.lhs.clone(),
            q: q.clone(),
        };
        if !si.is_trivial() {
            out.push(si);
        }
    }
    for q in id.lhs.words() {
        let si = SimpleIdentity {
            u: id.rhs.clone(),
            q: q.clone(),
        };
        if !si.is_trivial() {
            out.push(si);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> Term {
        parse_normalized(text).unwrap()
    }

    fn w(text: &str) -> Word {
        let term = t(text);
        assert_eq!(term.words().len(), 1);
        term.words()[0].clone()
    }

    #[test]
    fn grammar_examples() {
        let ast = parse_term("x(y+z)").unwrap();
        assert_eq!(
            ast,
            Ast::Product(vec![
                Ast::Var("x".into()),
                Ast::Sum(vec![Ast::Var("y".into()), Ast::Var("z".into())])
            ])
        );
        assert_eq!(t("x^2+y"), t("xx + y"));
        assert!(matches!(parse_term("x^0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn star_is_a_synonym_for_juxtaposition() {
        assert_eq!(t("x*y*z"), t("xyz"));
    }

    #[test]
    fn digit_suffixes_belong_to_the_variable() {
        let word = w("x1y2");
        assert_eq!(word.letters(), ["x1".to_string(), "y2".to_string()]);
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(t("x(y+z)"), t("xy + xz"));
        assert_eq!(t("x + x"), t("x"));
        assert_eq!(t("(x+y)(x+y)"), t("xx + xy + yx + yy"));
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let term = t("yx + z + xy + xxx");
        let printed: Vec<String> = term.words().iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, ["z", "xy", "yx", "xxx"]);
    }

    #[test]
    fn word_stats_examples() {
        let s = word_stats(&w("xyx"));
        assert_eq!(s.head, "x");
        assert_eq!(s.tail, "x");
        assert_eq!(s.length, 3);
        assert_eq!(s.prefix, ["x", "y"]);
        assert_eq!(s.suffix, ["y", "x"]);
        assert_eq!(
            s.content,
            ["x".to_string(), "y".to_string()].into_iter().collect()
        );

        let s = word_stats(&w("x"));
        assert_eq!(s.head, "x");
        assert_eq!(s.tail, "x");
        assert!(s.prefix.is_empty() && s.suffix.is_empty());

        let s = word_stats(&w("x1y2"));
        assert_eq!(s.head, "x1");
        assert_eq!(s.tail, "y2");
    }

    #[test]
    fn term_stats_examples() {
        let s = term_stats(&t("xy + z"));
        assert_eq!(s.heads, ["x".to_string(), "z".to_string()].into_iter().collect());
        assert_eq!(s.tails, ["y".to_string(), "z".to_string()].into_iter().collect());
        assert_eq!(
            s.content,
            ["x".to_string(), "y".to_string(), "z".to_string()]
                .into_iter()
                .collect()
        );
        assert_eq!(s.long_words, vec![w("xy")]);

        assert!(term_stats(&t("x")).long_words.is_empty());
        assert_eq!(term_stats(&t("xx + xy")).long_words.len(), 2);
    }

    #[test]
    fn word_decompositions() {
        for text in ["x", "xy", "xyx", "x1y2z3", "aaaa"] {
            let word = w(text);
            let s = word_stats(&word);
            let mut via_prefix = s.prefix.clone();
            via_prefix.push(s.tail.clone());
            assert_eq!(word.letters(), via_prefix.as_slice());
            let mut via_suffix = vec![s.head.clone()];
            via_suffix.extend(s.suffix.clone());
            assert_eq!(word.letters(), via_suffix.as_slice());
        }
    }

    #[test]
    fn reduce_identity_examples() {
        let id = parse_identity("xy ≈ x+y").unwrap();
        let reduced = reduce_identity(&id);
        let printed: Vec<String> = reduced.iter().map(|si| si.to_identity().to_string()).collect();
        assert_eq!(
            printed,
            vec![
                "xy ≈ x+xy".to_string(),
                "xy ≈ y+xy".to_string(),
                "x+y ≈ x+y+xy".to_string()
            ]
        );

        let trivial = parse_identity("x+yz = yz+x").unwrap();
        assert!(reduce_identity(&trivial).is_empty());

        let id = parse_identity("x ≈ x+y").unwrap();
        let reduced = reduce_identity(&id);
        assert_eq!(reduced.len(), 1);
        assert_eq!(reduced[0].to_identity().to_string(), "x ≈ x+y");
    }

    #[test]
    fn simple_identity_parsing() {
        let id = parse_identity("xy ≈ xy + x").unwrap();
        let si = as_simple_identity(&id).unwrap();
        assert_eq!(si.q, w("x"));
        assert!(!si.is_trivial());

        let id = parse_identity("x ≈ x").unwrap();
        assert!(as_simple_identity(&id).unwrap().is_trivial());

        let id = parse_identity("x ≈ x+y+z").unwrap();
        assert!(as_simple_identity(&id).is_err());

        let id = parse_identity("x+y ≈ x").unwrap();
        assert!(as_simple_identity(&id).is_err());
    }

    #[test]
    fn syntax_error_positions() {
        match parse_term("x + ") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_term("X").is_err());
        assert!(parse_term("(x").is_err());
        assert!(parse_term("x)y").is_err());
    }
}
