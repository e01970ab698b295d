//! Reduced words in the free group on `a1`, `a2`.
//!
//! Words are stored run-length encoded as a sequence of [`Term`]s
//! (generator, nonzero exponent) with adjacent terms on distinct generators.
//! The free group here is the pure braid group modulo its center, with
//! `a1 = σ1²` and `a2 = σ2²`.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    A1,
    A2,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A1 => Generator::A2,
            Generator::A2 => Generator::A1,
        }
    }

    /// 1 for `a1`, 2 for `a2`.
    pub fn index(self) -> u8 {
        match self {
            Generator::A1 => 1,
            Generator::A2 => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Generator> {
        match i {
            1 => Some(Generator::A1),
            2 => Some(Generator::A2),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A power `a_i^k` with `k != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    generator: Generator,
    exponent: i64,
}

impl Term {
    /// Panics if `exponent == 0`.
    pub fn new(generator: Generator, exponent: i64) -> Term {
        assert!(exponent != 0, "term exponent must be nonzero");
        Term {
            generator,
            exponent,
        }
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn degree(&self) -> u64 {
        self.exponent.unsigned_abs()
    }

    pub fn inverse(&self) -> Term {
        Term::new(self.generator, -self.exponent)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            1 => write!(f, "{}", self.generator),
            -1 => write!(f, "A{}", self.generator.index()),
            k => write!(f, "{}^{}", self.generator, k),
        }
    }
}

/// A reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    terms: Vec<Term>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord { terms: Vec::new() }
    }

    /// `g^k`; the identity when `k == 0`.
    pub fn power(generator: Generator, exponent: i64) -> FreeWord {
        if exponent == 0 {
            FreeWord::identity()
        } else {
            FreeWord {
                terms: vec![Term::new(generator, exponent)],
            }
        }
    }

    /// Freely reduces an arbitrary sequence of terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(raw: I) -> FreeWord {
        let mut w = FreeWord::identity();
        for t in raw {
            w.push(t);
        }
        w
    }

    /// Builds a word from `(generator, exponent)` pairs, dropping zero exponents.
    pub fn from_pairs(pairs: &[(Generator, i64)]) -> FreeWord {
        FreeWord::from_terms(
            pairs
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|&(g, e)| Term::new(g, e)),
        )
    }

    /// Multiplies by `t` on the right, keeping the word reduced.
    pub fn push(&mut self, t: Term) {
        match self.terms.last_mut() {
            Some(last) if last.generator == t.generator => {
                let e = last.exponent + t.exponent;
                if e == 0 {
                    self.terms.pop();
                } else {
                    last.exponent = e;
                }
            }
            _ => self.terms.push(t),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total letter length, `Σ |k_i|`.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(Term::degree).sum()
    }

    pub fn first(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn last(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            terms: self.terms.iter().rev().map(Term::inverse).collect(),
        }
    }

    /// True for the identity and for single-term words.
    pub fn is_generator_power(&self) -> bool {
        self.terms.len() <= 1
    }

    /// Exchanges `a1` and `a2`.
    pub fn swap_generators(&self) -> FreeWord {
        FreeWord {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.generator.other(), t.exponent))
                .collect(),
        }
    }

    /// Single letters `(generator, ±1)` from left to right.
    pub fn letters(&self) -> impl Iterator<Item = (Generator, i8)> + '_ {
        self.terms.iter().flat_map(|t| {
            let s = if t.exponent > 0 { 1 } else { -1 };
            std::iter::repeat_n((t.generator, s), t.degree() as usize)
        })
    }

    /// Nonidentity, and either one term or first and last terms on different generators.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.terms.first(), self.terms.last()) {
            (Some(f), Some(l)) => self.terms.len() == 1 || f.generator != l.generator,
            _ => false,
        }
    }

    pub fn syllables(&self) -> SyllableDecomposition {
        syllable_decompose(self)
    }

    /// Rotates the term sequence left by `k` positions. Only meaningful on
    /// cyclically reduced words, where the result is again reduced.
    fn rotate_terms(&self, k: usize) -> FreeWord {
        let mut terms = self.terms.clone();
        if !terms.is_empty() {
            let n = terms.len();
            terms.rotate_left(k % n);
        }
        FreeWord { terms }
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for t in &rhs.terms {
            out.push(*t);
        }
        out
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "ε");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FreeWord {
    type Err = Error;

    /// Parses `a1`, `a2`, `A1`, `A2` tokens with optional caret exponents.
    /// Uppercase letters are inverses: `A1^2` is `a1^-2`.
    fn from_str(s: &str) -> Result<FreeWord> {
        let tokens = crate::syntax::scan(s, &["a1", "a2", "A1", "A2"])?;
        let mut w = FreeWord::identity();
        for tok in tokens {
            let (g, inv) = match tok.symbol {
                "a1" => (Generator::A1, false),
                "a2" => (Generator::A2, false),
                "A1" => (Generator::A1, true),
                _ => (Generator::A2, true),
            };
            if tok.exponent != 0 {
                w.push(Term::new(g, if inv { -tok.exponent } else { tok.exponent }));
            }
        }
        Ok(w)
    }
}

/// Reduces an arbitrary sequence of terms to the unique reduced word.
pub fn reduce(raw: &[Term]) -> FreeWord {
    FreeWord::from_terms(raw.iter().copied())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SyllableKind {
    /// A single term with `|k| >= 2`.
    First,
    /// A maximal run of `±1` terms of one sign.
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Syllable {
    pub kind: SyllableKind,
    pub degree: u64,
    pub sign: Sign,
    pub start: Generator,
}

impl Syllable {
    pub fn expand(&self) -> Vec<Term> {
        let s = self.sign.value();
        match self.kind {
            SyllableKind::First => vec![Term::new(self.start, s * self.degree as i64)],
            SyllableKind::Second => {
                let mut g = self.start;
                (0..self.degree)
                    .map(|_| {
                        let t = Term::new(g, s);
                        g = g.other();
                        t
                    })
                    .collect()
            }
        }
    }

    /// Generator of the last term.
    pub fn end(&self) -> Generator {
        match self.kind {
            SyllableKind::First => self.start,
            SyllableKind::Second if self.degree % 2 == 1 => self.start,
            SyllableKind::Second => self.start.other(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SyllableDecomposition {
    pub syllables: Vec<Syllable>,
}

impl SyllableDecomposition {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.syllables.iter().map(|s| s.degree).collect()
    }

    /// Concatenates the syllables back into a word.
    pub fn expand(&self) -> FreeWord {
        FreeWord::from_terms(self.syllables.iter().flat_map(Syllable::expand))
    }
}

/// Splits a reduced word into its syllables. The identity has none.
pub fn syllable_decompose(w: &FreeWord) -> SyllableDecomposition {
    let mut syllables: Vec<Syllable> = Vec::new();
    // Open second-kind run, extended while unit exponents keep their sign.
    let mut run: Option<Syllable> = None;
    for t in w.terms() {
        if t.degree() >= 2 {
            syllables.extend(run.take());
            syllables.push(Syllable {
                kind: SyllableKind::First,
                degree: t.degree(),
                sign: Sign::of(t.exponent()),
                start: t.generator(),
            });
            continue;
        }
        let sign = Sign::of(t.exponent());
        match run.as_mut() {
            Some(r) if r.sign == sign => r.degree += 1,
            _ => {
                syllables.extend(run.take());
                run = Some(Syllable {
                    kind: SyllableKind::Second,
                    degree: 1,
                    sign,
                    start: t.generator(),
                });
            }
        }
    }
    syllables.extend(run);
    SyllableDecomposition { syllables }
}

/// `w = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    pub core: FreeWord,
    pub conjugator: FreeWord,
}

pub fn cyclic_reduce(w: &FreeWord) -> CyclicReduction {
    let mut core = w.terms.clone();
    let mut conjugator = FreeWord::identity();
    while core.len() >= 2 && core[0].generator == core[core.len() - 1].generator {
        // w = f · m · l  =  f · (m · f l) · f⁻¹
        let first = core.remove(0);
        let last = core.pop().expect("at least two terms");
        let merged = first.exponent + last.exponent;
        if merged != 0 {
            core.push(Term::new(first.generator, merged));
        }
        conjugator.push(first);
    }
    CyclicReduction {
        core: FreeWord { terms: core },
        conjugator,
    }
}

/// Whether a cyclically reduced word keeps its syllable boundaries when
/// read cyclically: the last and first terms do not fuse into one syllable.
pub fn is_cyclically_syllable_reduced(w: &FreeWord) -> Result<bool> {
    if !w.is_cyclically_reduced() {
        return Err(Error::Precondition(format!(
            "'{w}' is not a nonidentity cyclically reduced word"
        )));
    }
    let terms = w.terms();
    if terms.len() == 1 {
        return Ok(true);
    }
    let first = terms[0].exponent();
    if terms.iter().all(|t| t.exponent() == first) && first.abs() == 1 {
        return Ok(true);
    }
    let last = terms[terms.len() - 1].exponent();
    Ok(!(first.abs() == 1 && last == first))
}

/// Returns `g` with `g⁻¹ · w1 · g = w2` when the words are conjugate.
pub fn conjugating_element(w1: &FreeWord, w2: &FreeWord) -> Option<FreeWord> {
    let r1 = cyclic_reduce(w1);
    let r2 = cyclic_reduce(w2);
    let (k1, k2) = (&r1.core, &r2.core);
    if k1.len() != k2.len() {
        return None;
    }
    if k1.is_identity() {
        return Some(&r1.conjugator * &r2.conjugator.inverse());
    }
    // k2 = P⁻¹ k1 P where k1 = P S and k2 = S P.
    let n = k1.len();
    let doubled: Vec<Term> = k1.terms.iter().chain(k1.terms.iter()).copied().collect();
    let offset = (0..n).find(|&s| doubled[s..s + n] == k2.terms[..])?;
    let prefix = FreeWord::from_terms(k1.terms[..offset].iter().copied());
    Some(&(&r1.conjugator * &prefix) * &r2.conjugator.inverse())
}

pub fn are_conjugate_free(w1: &FreeWord, w2: &FreeWord) -> bool {
    conjugating_element(w1, w2).is_some()
}

/// All cyclic rotations of the term sequence of a cyclically reduced word.
pub fn term_rotations(w: &FreeWord) -> Vec<FreeWord> {
    (0..w.len().max(1)).map(|k| w.rotate_terms(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{A1, A2};

    fn w(pairs: &[(Generator, i64)]) -> FreeWord {
        FreeWord::from_pairs(pairs)
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&[Term::new(A1, 1), Term::new(A1, -1)]).is_identity());
        assert_eq!(reduce(&[Term::new(A1, 2), Term::new(A1, 3)]), w(&[(A1, 5)]));
        let raw = [
            Term::new(A1, 1),
            Term::new(A2, 1),
            Term::new(A2, -1),
            Term::new(A1, 1),
        ];
        assert_eq!(reduce(&raw), w(&[(A1, 2)]));
    }

    #[test]
    fn syllables_of_single_power() {
        let d = syllable_decompose(&w(&[(A1, 3)]));
        assert_eq!(
            d.syllables,
            vec![Syllable {
                kind: SyllableKind::First,
                degree: 3,
                sign: Sign::Plus,
                start: A1
            }]
        );
    }

    #[test]
    fn syllables_split_at_sign_change() {
        let d = syllable_decompose(&w(&[(A1, 1), (A2, 1), (A1, -1)]));
        assert_eq!(d.len(), 2);
        assert_eq!(d.syllables[0].kind, SyllableKind::Second);
        assert_eq!(
            (d.syllables[0].degree, d.syllables[0].sign),
            (2, Sign::Plus)
        );
        assert_eq!(
            (d.syllables[1].degree, d.syllables[1].sign),
            (1, Sign::Minus)
        );
        assert_eq!(d.syllables[1].start, A1);
    }

    #[test]
    fn syllables_mixed_word() {
        let word = w(&[(A1, 2), (A2, 1), (A1, 1), (A2, -3)]);
        let d = syllable_decompose(&word);
        let got: Vec<_> = d
            .syllables
            .iter()
            .map(|s| (s.kind, s.degree, s.sign, s.start))
            .collect();
        assert_eq!(
            got,
            vec![
                (SyllableKind::First, 2, Sign::Plus, A1),
                (SyllableKind::Second, 2, Sign::Plus, A2),
                (SyllableKind::First, 3, Sign::Minus, A2),
            ]
        );
        assert_eq!(d.expand(), word);
    }

    #[test]
    fn identity_has_no_syllables() {
        assert!(syllable_decompose(&FreeWord::identity()).is_empty());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let r = cyclic_reduce(&w(&[(A1, 1), (A2, 1), (A1, -1)]));
        assert_eq!(r.core, w(&[(A2, 1)]));
        assert_eq!(r.conjugator, w(&[(A1, 1)]));

        let r = cyclic_reduce(&w(&[(A1, 1), (A2, 1)]));
        assert_eq!(r.core, w(&[(A1, 1), (A2, 1)]));
        assert!(r.conjugator.is_identity());

        let input = w(&[(A2, -1), (A1, 1), (A2, 2)]);
        let r = cyclic_reduce(&input);
        assert_eq!(r.core, w(&[(A1, 1), (A2, 1)]));
        assert_eq!(r.conjugator, w(&[(A2, -1)]));
        assert_eq!(&(&r.conjugator * &r.core) * &r.conjugator.inverse(), input);
    }

    #[test]
    fn cyclically_syllable_reduced_examples() {
        assert!(is_cyclically_syllable_reduced(&w(&[(A1, 2), (A2, 2)])).unwrap());
        assert!(is_cyclically_syllable_reduced(&w(&[(A1, 1), (A2, -1)])).unwrap());
        assert!(
            !is_cyclically_syllable_reduced(&w(&[(A1, 1), (A2, 2), (A1, 1), (A2, 1)])).unwrap()
        );
        assert!(is_cyclically_syllable_reduced(&w(&[(A1, 1), (A2, 1), (A1, 1), (A2, 1)])).unwrap());
        assert!(is_cyclically_syllable_reduced(&w(&[(A1, -5)])).unwrap());
    }

    #[test]
    fn cyclically_syllable_reduced_rejects_bad_input() {
        assert!(matches!(
            is_cyclically_syllable_reduced(&FreeWord::identity()),
            Err(Error::Precondition(_))
        ));
        assert!(is_cyclically_syllable_reduced(&w(&[(A1, 1), (A2, 1), (A1, 1)])).is_err());
    }

    #[test]
    fn conjugacy_examples() {
        let ab = w(&[(A1, 1), (A2, 1)]);
        let ba = w(&[(A2, 1), (A1, 1)]);
        assert!(are_conjugate_free(&ab, &ba));
        assert!(are_conjugate_free(&ab, &ab));
        assert!(!are_conjugate_free(&w(&[(A1, 2)]), &w(&[(A2, 2)])));
        let g = conjugating_element(&ab, &ba).unwrap();
        assert_eq!(&(&g.inverse() * &ab) * &g, ba);
    }

    #[test]
    fn identity_is_only_conjugate_to_identity() {
        let id = FreeWord::identity();
        assert!(are_conjugate_free(&id, &id));
        assert!(!are_conjugate_free(&id, &w(&[(A1, 1)])));
    }

    #[test]
    fn display_uses_caret_and_uppercase() {
        assert_eq!(
            w(&[(A1, 2), (A2, -1), (A1, 1), (A2, -3)]).to_string(),
            "a1^2 A2 a1 a2^-3"
        );
        assert_eq!(FreeWord::identity().to_string(), "ε");
    }
}
