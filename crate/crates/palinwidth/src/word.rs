//! Formal words over a labelled generating alphabet.
//!
//! A [`Letter`] is a generator index with a sign; a [`Word`] is a finite
//! letter sequence. Words are not auto-reduced: the palindrome predicate
//! compares the literal sequence, signs included, against its reversal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::{ElemIx, GroupTable};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

/// A signed generator symbol. Ordering is by generator index, positive
/// before negative; word enumeration is lexicographic in this order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: u32) -> Letter {
        Letter {
            gen,
            sign: Sign::Pos,
        }
    }

    pub fn neg(gen: u32) -> Letter {
        Letter {
            gen,
            sign: Sign::Neg,
        }
    }

    /// The formal inverse: same generator, opposite sign.
    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: match self.sign {
                Sign::Pos => Sign::Neg,
                Sign::Neg => Sign::Pos,
            },
        }
    }

    pub(crate) fn ord_index(self) -> usize {
        self.gen as usize * 2 + (self.sign == Sign::Neg) as usize
    }

    pub(crate) fn from_ord_index(ix: usize) -> Letter {
        Letter {
            gen: (ix / 2) as u32,
            sign: if ix.is_multiple_of(2) {
                Sign::Pos
            } else {
                Sign::Neg
            },
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "g{}", self.gen),
            Sign::Neg => write!(f, "g{}^-1", self.gen),
        }
    }
}

/// A formal product of letters, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Letters in reverse order, signs untouched. Distinct from the formal
    /// inverse, which also flips signs.
    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The formal inverse: reversed order with every sign flipped.
    pub fn inverted(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Deletes adjacent `l·l^-1` pairs until none remain. The result is the
    /// unique reduced form of the word.
    pub fn freely_reduced(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// True iff the literal letter sequence equals its own reversal,
    /// comparing generator and sign. No reduction is applied.
    pub fn is_palindrome(&self) -> bool {
        let k = self.letters.len();
        (0..k / 2).all(|i| self.letters[i] == self.letters[k - 1 - i])
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word { letters }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "<empty>");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

/// A labelled generating set: parallel lists of labels and permutations.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    labels: Vec<String>,
    perms: Vec<Permutation>,
    degree: usize,
}

fn valid_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GeneratingSet {
    pub fn new(labels: Vec<String>, perms: Vec<Permutation>) -> Result<GeneratingSet> {
        if labels.is_empty() || labels.len() != perms.len() {
            return Err(Error::EmptyGenerators);
        }
        let degree = perms[0].degree();
        for p in &perms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        let mut seen = std::collections::HashSet::new();
        for label in &labels {
            if !valid_label(label) {
                return Err(Error::InvalidParameter(format!(
                    "invalid generator label {label:?}"
                )));
            }
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate generator label {label:?}"
                )));
            }
        }
        Ok(GeneratingSet {
            labels,
            perms,
            degree,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    /// True when every generator squares to the identity (identity
    /// generators included). Over such an alphabet the reversal of any word
    /// evaluates to the inverse element.
    pub fn all_involutions(&self) -> bool {
        self.perms.iter().all(|p| (p * p).is_identity())
    }

    /// Extends the set by one labelled generator.
    pub fn with_added(&self, label: String, perm: Permutation) -> Result<GeneratingSet> {
        let mut labels = self.labels.clone();
        let mut perms = self.perms.clone();
        labels.push(label);
        perms.push(perm);
        GeneratingSet::new(labels, perms)
    }

    /// Parses the generating-set file format:
    ///
    /// ```text
    /// # comment
    /// degree 5
    /// x = (1 2)(3 4)
    /// y = (1 2 3 4 5)
    /// ```
    pub fn parse(text: &str) -> Result<GeneratingSet> {
        let mut degree: Option<usize> = None;
        let mut labels = Vec::new();
        let mut perms = Vec::new();
        let mut offset = 0usize;
        for line in text.split_inclusive('\n') {
            let line_start = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("").trim_end();
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            match degree {
                None => {
                    let mut parts = trimmed.split_whitespace();
                    if parts.next() != Some("degree") {
                        return Err(Error::Parse {
                            pos: line_start,
                            msg: "first line must be 'degree N'".into(),
                        });
                    }
                    let n: usize =
                        parts
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| Error::Parse {
                                pos: line_start,
                                msg: "first line must be 'degree N'".into(),
                            })?;
                    if parts.next().is_some() || n == 0 {
                        return Err(Error::Parse {
                            pos: line_start,
                            msg: "first line must be 'degree N' with N >= 1".into(),
                        });
                    }
                    degree = Some(n);
                }
                Some(n) => {
                    let (label, cycles) = trimmed.split_once('=').ok_or_else(|| Error::Parse {
                        pos: line_start,
                        msg: format!("expected 'label = cycles', found {trimmed:?}"),
                    })?;
                    let label = label.trim();
                    if !valid_label(label) {
                        return Err(Error::Parse {
                            pos: line_start,
                            msg: format!("invalid generator label {label:?}"),
                        });
                    }
                    let perm =
                        Permutation::parse_cycles(cycles.trim(), n).map_err(|e| match e {
                            Error::Parse { pos, msg } => Error::Parse {
                                pos: line_start + pos,
                                msg,
                            },
                            other => other,
                        })?;
                    labels.push(label.to_string());
                    perms.push(perm);
                }
            }
        }
        if degree.is_none() {
            return Err(Error::Parse {
                pos: 0,
                msg: "missing 'degree N' line".into(),
            });
        }
        GeneratingSet::new(labels, perms)
    }

    /// Serializes back to the generating-set file format.
    pub fn file_string(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for (label, perm) in self.labels.iter().zip(&self.perms) {
            out.push_str(&format!("{} = {}\n", label, perm.cycle_string()));
        }
        out
    }

    /// Parses word text syntax: whitespace-separated labels with an
    /// optional `^-1` suffix, e.g. `x y^-1 x`. Empty input is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let index: HashMap<&str, u32> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as u32))
            .collect();
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, sign) = match token.strip_suffix("^-1") {
                Some(name) => (name, Sign::Neg),
                None => (token, Sign::Pos),
            };
            let gen = *index.get(name).ok_or_else(|| Error::Parse {
                pos: token.as_ptr() as usize - text.as_ptr() as usize,
                msg: format!("unknown generator label {name:?}"),
            })?;
            letters.push(Letter { gen, sign });
        }
        Ok(Word::new(letters))
    }

    /// Renders a word in the word text syntax; the empty word renders as "".
    pub fn word_string(&self, word: &Word) -> String {
        word.letters()
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => self.labels[l.gen as usize].clone(),
                Sign::Neg => format!("{}^-1", self.labels[l.gen as usize]),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Evaluates a word in the group: a left-to-right fold of table transitions
/// from the identity, so `evaluate(u·v) = evaluate(u) · evaluate(v)`.
pub fn evaluate(word: &Word, gens: &GeneratingSet, table: &GroupTable) -> Result<ElemIx> {
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    let mut state = table.identity();
    for &l in word.letters() {
        if l.gen as usize >= gens.len() {
            return Err(Error::AlphabetMismatch);
        }
        state = table.step(state, l);
    }
    Ok(state)
}

/// Streams the freely reduced non-empty words that evaluate to the identity,
/// up to `max_len`, without duplicates, in length-then-lexicographic order.
pub fn relations<'t>(
    gens: &GeneratingSet,
    table: &'t GroupTable,
    max_len: usize,
) -> Result<RelationStream<'t>> {
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(RelationStream {
        table,
        max_len,
        target: 1,
        path: Vec::new(),
        exhausted: max_len == 0,
    })
}

/// Iterative-deepening depth-first walk over freely reduced words, pruned by
/// the shortest-word distance back to the identity. Deterministic and
/// restartable: a fresh stream always replays the same sequence.
pub struct RelationStream<'t> {
    table: &'t GroupTable,
    max_len: usize,
    target: usize,
    /// Current prefix: each entry is (letter, element reached after it).
    path: Vec<(Letter, ElemIx)>,
    exhausted: bool,
}

impl RelationStream<'_> {
    /// Extends the path with the smallest admissible letter whose ordinal
    /// is at least `start_ord`. A letter is admissible when it does not
    /// cancel the previous letter and the shortest completion back to the
    /// identity still fits in the current target length.
    fn try_extend(&mut self, start_ord: usize) -> bool {
        let n_letters = self.table.generator_count() * 2;
        let (prev_letter, cur_elem) = match self.path.last() {
            Some(&(l, e)) => (Some(l), e),
            None => (None, self.table.identity()),
        };
        let remaining = self.target - self.path.len() - 1;
        for ord in start_ord..n_letters {
            let letter = Letter::from_ord_index(ord);
            if prev_letter == Some(letter.inverse()) {
                continue;
            }
            let next = self.table.step(cur_elem, letter);
            if self.table.depth(self.table.inv(next)) as usize > remaining {
                continue;
            }
            self.path.push((letter, next));
            return true;
        }
        false
    }

    /// Advances the walk by one step: descend if possible, otherwise
    /// backtrack; moving past the last word of a tier starts the next tier.
    fn step_forward(&mut self) {
        if self.path.len() < self.target && self.try_extend(0) {
            return;
        }
        loop {
            match self.path.pop() {
                None => {
                    self.target += 1;
                    if self.target > self.max_len {
                        self.exhausted = true;
                    }
                    return;
                }
                Some((letter, _)) => {
                    if self.try_extend(letter.ord_index() + 1) {
                        return;
                    }
                }
            }
        }
    }
}

impl Iterator for RelationStream<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.exhausted {
                return None;
            }
            if self.path.len() == self.target {
                let hit = self.path.last().map(|&(_, e)| e) == Some(self.table.identity());
                let word = hit.then(|| Word::new(self.path.iter().map(|&(l, _)| l).collect()));
                self.step_forward();
                if let Some(w) = word {
                    return Some(w);
                }
            } else {
                self.step_forward();
            }
        }
    }
}
