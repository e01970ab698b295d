//! The 3-strand braid group modulo its center.
//!
//! `B₃/Z₃` is the free product of a group of order 2, generated by the half
//! twist `Δ = σ1σ2σ1` (written `a`), and a group of order 3, generated by
//! `σ1σ2` (written `t`). With `σ1 = t²a` and `σ2 = at²`, an element has a
//! unique alternating spelling in `a` and `t^{±1}`, which is the
//! [`CosetElement`]. The pure subgroup is free on `a1 = σ1²`, `a2 = σ2²`;
//! reading a coset spelling through the Schreier graph of that subgroup
//! recovers the free word and the coset of the remainder.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax;
use crate::words::{FreeWord, Generator, Term};

/// Upper bound on the number of letters a parsed braid may expand to.
pub const MAX_BRAID_LETTERS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidGenerator {
    S1,
    S2,
}

impl BraidGenerator {
    pub fn index(self) -> u8 {
        match self {
            BraidGenerator::S1 => 1,
            BraidGenerator::S2 => 2,
        }
    }

    /// The pure generator `a_i = s_i²`.
    pub fn square(self) -> Generator {
        match self {
            BraidGenerator::S1 => Generator::A1,
            BraidGenerator::S2 => Generator::A2,
        }
    }

    pub fn of_square(g: Generator) -> BraidGenerator {
        match g {
            Generator::A1 => BraidGenerator::S1,
            Generator::A2 => BraidGenerator::S2,
        }
    }
}

/// `s_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub generator: BraidGenerator,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(generator: BraidGenerator, exponent: i8) -> BraidLetter {
        assert!(
            exponent == 1 || exponent == -1,
            "braid letters have exponent ±1"
        );
        BraidLetter {
            generator,
            inverse: exponent < 0,
        }
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> BraidLetter {
        BraidLetter {
            inverse: !self.inverse,
            ..self
        }
    }

    /// All four letters, in a fixed order.
    pub fn all() -> [BraidLetter; 4] {
        use BraidGenerator::*;
        [
            BraidLetter::new(S1, 1),
            BraidLetter::new(S1, -1),
            BraidLetter::new(S2, 1),
            BraidLetter::new(S2, -1),
        ]
    }
}

/// A braid spelled freely in `s1^{±1}`, `s2^{±1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(letters: Vec<BraidLetter>) -> BraidWord {
        BraidWord { letters }
    }

    pub fn identity() -> BraidWord {
        BraidWord::default()
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `s_i^k`.
    pub fn power(generator: BraidGenerator, k: i64) -> BraidWord {
        let letter = BraidLetter::new(generator, if k < 0 { -1 } else { 1 });
        BraidWord {
            letters: vec![letter; k.unsigned_abs() as usize],
        }
    }

    /// The half twist `s1 s2 s1`, raised to `k`.
    pub fn delta(k: i64) -> BraidWord {
        use BraidGenerator::*;
        let unit = if k >= 0 {
            [
                BraidLetter::new(S1, 1),
                BraidLetter::new(S2, 1),
                BraidLetter::new(S1, 1),
            ]
        } else {
            [
                BraidLetter::new(S1, -1),
                BraidLetter::new(S2, -1),
                BraidLetter::new(S1, -1),
            ]
        };
        let mut letters = Vec::with_capacity(3 * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&unit);
        }
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn eval(&self) -> CosetElement {
        eval(self)
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord { letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = if l.inverse { "S" } else { "s" };
            if run == 1 {
                parts.push(format!("{name}{}", l.generator.index()));
            } else {
                parts.push(format!("{name}{}^{run}", l.generator.index()));
            }
            i += run;
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<BraidWord> {
        let tokens = syntax::scan(s, &["s1", "s2", "S1", "S2", "D"])?;
        let mut letters = Vec::new();
        for tok in tokens {
            let len = tok.exponent.unsigned_abs() as usize * if tok.symbol == "D" { 3 } else { 1 };
            if letters.len().saturating_add(len) > MAX_BRAID_LETTERS {
                return Err(Error::Limit(format!(
                    "braid expands to more than {MAX_BRAID_LETTERS} letters (at column {})",
                    tok.column
                )));
            }
            let piece = match tok.symbol {
                "s1" => BraidWord::power(BraidGenerator::S1, tok.exponent),
                "s2" => BraidWord::power(BraidGenerator::S2, tok.exponent),
                "S1" => BraidWord::power(BraidGenerator::S1, -tok.exponent),
                "S2" => BraidWord::power(BraidGenerator::S2, -tok.exponent),
                "D" => BraidWord::delta(tok.exponent),
                other => unreachable!("scanner returned {other}"),
            };
            letters.extend(piece.letters);
        }
        Ok(BraidWord { letters })
    }
}

/// A letter of the alternating spelling: `a`, `t` or `t² = t⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetLetter {
    A,
    T,
    T2,
}

impl CosetLetter {
    fn t_power(self) -> u8 {
        match self {
            CosetLetter::A => 0,
            CosetLetter::T => 1,
            CosetLetter::T2 => 2,
        }
    }

    fn inverse(self) -> CosetLetter {
        match self {
            CosetLetter::A => CosetLetter::A,
            CosetLetter::T => CosetLetter::T2,
            CosetLetter::T2 => CosetLetter::T,
        }
    }
}

/// An element of `B₃/Z₃` in canonical alternating form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetElement {
    letters: Vec<CosetLetter>,
}

impl CosetElement {
    pub fn identity() -> CosetElement {
        CosetElement::default()
    }

    /// The image of `Δ`.
    pub fn delta() -> CosetElement {
        CosetElement {
            letters: vec![CosetLetter::A],
        }
    }

    pub fn from_letters<I: IntoIterator<Item = CosetLetter>>(letters: I) -> CosetElement {
        let mut out = CosetElement::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    pub fn letters(&self) -> &[CosetLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: CosetLetter) {
        match (self.letters.last().copied(), l) {
            (Some(CosetLetter::A), CosetLetter::A) => {
                self.letters.pop();
            }
            (Some(prev), _) if prev != CosetLetter::A && l != CosetLetter::A => {
                self.letters.pop();
                match (prev.t_power() + l.t_power()) % 3 {
                    1 => self.letters.push(CosetLetter::T),
                    2 => self.letters.push(CosetLetter::T2),
                    _ => {}
                }
            }
            _ => self.letters.push(l),
        }
    }

    fn push_braid_letter(&mut self, l: BraidLetter) {
        use CosetLetter::*;
        let spelled: [CosetLetter; 2] = match (l.generator, l.inverse) {
            (BraidGenerator::S1, false) => [T2, A],
            (BraidGenerator::S1, true) => [A, T],
            (BraidGenerator::S2, false) => [A, T2],
            (BraidGenerator::S2, true) => [T, A],
        };
        for c in spelled {
            self.push(c);
        }
    }

    pub fn inverse(&self) -> CosetElement {
        CosetElement {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `s_i^k`.
    pub fn generator_power(g: BraidGenerator, k: i64) -> CosetElement {
        let mut out = CosetElement::identity();
        let letter = BraidLetter::new(g, if k < 0 { -1 } else { 1 });
        for _ in 0..k.unsigned_abs() {
            out.push_braid_letter(letter);
        }
        out
    }

    /// `Δ^ell`; only the parity of `ell` matters.
    pub fn delta_power(ell: i64) -> CosetElement {
        if ell.rem_euclid(2) == 1 {
            CosetElement::delta()
        } else {
            CosetElement::identity()
        }
    }

    /// A shortest-looking braid spelling of this element (`t = s1 s2`, `a = Δ`).
    pub fn to_braid(&self) -> BraidWord {
        use BraidGenerator::*;
        let mut letters = Vec::new();
        for l in &self.letters {
            match l {
                CosetLetter::A => letters.extend(BraidWord::delta(1).letters),
                CosetLetter::T => {
                    letters.push(BraidLetter::new(S1, 1));
                    letters.push(BraidLetter::new(S2, 1));
                }
                CosetLetter::T2 => {
                    letters.push(BraidLetter::new(S2, -1));
                    letters.push(BraidLetter::new(S1, -1));
                }
            }
        }
        BraidWord { letters }
    }
}

impl Mul for &CosetElement {
    type Output = CosetElement;
    fn mul(self, rhs: &CosetElement) -> CosetElement {
        let mut out = self.clone();
        for &l in &rhs.letters {
            out.push(l);
        }
        out
    }
}

impl Mul for CosetElement {
    type Output = CosetElement;
    fn mul(self, rhs: CosetElement) -> CosetElement {
        &self * &rhs
    }
}

impl fmt::Display for CosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<&str> = self
            .letters
            .iter()
            .map(|l| match l {
                CosetLetter::A => "a",
                CosetLetter::T => "t",
                CosetLetter::T2 => "t2",
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Canonical form of the image of `b`.
pub fn eval(b: &BraidWord) -> CosetElement {
    let mut out = CosetElement::identity();
    for &l in &b.letters {
        out.push_braid_letter(l);
    }
    out
}

/// `q(l)`: `l` when even, otherwise the even neighbour toward zero.
pub fn q(l: i64) -> Result<i64> {
    if l == 0 {
        return Err(Error::Precondition("q is undefined at 0".into()));
    }
    Ok(if l % 2 == 0 { l } else { l - l.signum() })
}

/// Cosets of the pure subgroup, named by their transversal element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coset {
    E,
    A,
    T,
    T2,
    AT,
    AT2,
}

/// Reads `x = w · r` with `w` pure and `r` the transversal element of the final coset.
fn decode(x: &CosetElement) -> (FreeWord, Coset) {
    use CosetLetter as L;
    let mut word = FreeWord::identity();
    let mut state = Coset::E;
    for &letter in &x.letters {
        let (next, emitted) = match (state, letter) {
            (Coset::E, L::A) => (Coset::A, None),
            (Coset::E, L::T) => (Coset::T, None),
            (Coset::E, L::T2) => (Coset::T2, None),
            (Coset::A, L::A) => (Coset::E, None),
            (Coset::A, L::T) => (Coset::AT, None),
            (Coset::A, L::T2) => (Coset::AT2, None),
            (Coset::T, L::A) => (Coset::AT2, Some(Term::new(Generator::A2, -1))),
            (Coset::T, L::T) => (Coset::T2, None),
            (Coset::T, L::T2) => (Coset::E, None),
            (Coset::T2, L::A) => (Coset::AT, Some(Term::new(Generator::A1, 1))),
            (Coset::T2, L::T) => (Coset::E, None),
            (Coset::T2, L::T2) => (Coset::T, None),
            (Coset::AT, L::A) => (Coset::T2, Some(Term::new(Generator::A1, -1))),
            (Coset::AT, L::T) => (Coset::AT2, None),
            (Coset::AT, L::T2) => (Coset::A, None),
            (Coset::AT2, L::A) => (Coset::T, Some(Term::new(Generator::A2, 1))),
            (Coset::AT2, L::T) => (Coset::A, None),
            (Coset::AT2, L::T2) => (Coset::AT, None),
        };
        if let Some(t) = emitted {
            word.push(t);
        }
        state = next;
    }
    (word, state)
}

/// The free word in `a1`, `a2` representing `x`, when `x` is pure.
pub fn decode_pure(x: &CosetElement) -> Option<FreeWord> {
    match decode(x) {
        (w, Coset::E) => Some(w),
        _ => None,
    }
}

pub fn is_pure(x: &CosetElement) -> bool {
    decode(x).1 == Coset::E
}

/// The image of `w` under `a_i ↦ s_i²`.
pub fn embed_pure(w: &FreeWord) -> CosetElement {
    let mut out = CosetElement::identity();
    for t in w.terms() {
        let g = BraidGenerator::of_square(t.generator());
        out = &out * &CosetElement::generator_power(g, 2 * t.exponent());
    }
    out
}

/// The conjugate `Δ w Δ⁻¹`, which swaps `a1` and `a2`.
pub fn delta_conjugate(w: &FreeWord) -> FreeWord {
    w.swap_generators()
}

/// `g · x · g⁻¹`.
pub fn conjugate(g: &CosetElement, x: &CosetElement) -> CosetElement {
    &(g * x) * &g.inverse()
}

/// The unique form `s_j^k · b1 · Δ^ell` of an element of `B₃/Z₃`, or `Δ^ell`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalForm {
    PowerOfDelta {
        ell: u8,
    },
    General {
        j: BraidGenerator,
        k: i64,
        b1: FreeWord,
        ell: u8,
    },
}

impl NormalForm {
    pub fn ell(&self) -> u8 {
        match self {
            NormalForm::PowerOfDelta { ell } | NormalForm::General { ell, .. } => *ell,
        }
    }

    /// Multiplies the form back out.
    pub fn eval(&self) -> CosetElement {
        match self {
            NormalForm::PowerOfDelta { ell } => CosetElement::delta_power(*ell as i64),
            NormalForm::General { j, k, b1, ell } => {
                let head = CosetElement::generator_power(*j, *k);
                &(&head * &embed_pure(b1)) * &CosetElement::delta_power(*ell as i64)
            }
        }
    }

    /// Whether `b1` is empty or starts with the generator other than `a_j`.
    pub fn satisfies_first_term_constraint(&self) -> bool {
        match self {
            NormalForm::PowerOfDelta { .. } => true,
            NormalForm::General { j, k, b1, .. } => {
                *k != 0
                    && b1
                        .first()
                        .is_none_or(|t| t.generator() == j.square().other())
            }
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::PowerOfDelta { ell } => write!(f, "power_of_delta ell={ell}"),
            NormalForm::General { j, k, b1, ell } => {
                write!(f, "j={} k={k} b1={b1} ell={ell}", j.index())
            }
        }
    }
}

/// Splits a leading power of `g` off `w`.
fn split_leading(w: &FreeWord, g: Generator) -> (i64, FreeWord) {
    match w.first() {
        Some(t) if t.generator() == g => (
            t.exponent(),
            FreeWord::from_terms(w.terms()[1..].iter().copied()),
        ),
        _ => (0, w.clone()),
    }
}

pub fn normal_form(x: &CosetElement) -> NormalForm {
    use BraidGenerator::{S1, S2};
    // The coset of x modulo the pure subgroup fixes the parity of k, the
    // generator when k is odd, and ell.
    let (_, coset) = decode(x);
    let (odd_j, ell) = match coset {
        Coset::E => (None, 0u8),
        Coset::A => (None, 1),
        Coset::AT => (Some(S1), 0),
        Coset::AT2 => (Some(S2), 0),
        Coset::T2 => (Some(S1), 1),
        Coset::T => (Some(S2), 1),
    };
    let y = x * &CosetElement::delta_power(ell as i64);
    match odd_j {
        Some(j) => {
            let rest = &CosetElement::generator_power(j, -1) * &y;
            let pure = decode_pure(&rest).expect("removing s_j leaves a pure element");
            let (m, b1) = split_leading(&pure, j.square());
            NormalForm::General {
                j,
                k: 1 + 2 * m,
                b1,
                ell,
            }
        }
        None => {
            let pure = decode_pure(&y).expect("even coset is pure");
            match pure.first() {
                None => NormalForm::PowerOfDelta { ell },
                Some(t) => {
                    let j = BraidGenerator::of_square(t.generator());
                    let (m, b1) = split_leading(&pure, t.generator());
                    NormalForm::General {
                        j,
                        k: 2 * m,
                        b1,
                        ell,
                    }
                }
            }
        }
    }
}

pub fn normal_form_of_braid(b: &BraidWord) -> NormalForm {
    normal_form(&eval(b))
}

/// `a_j^{q(k)/2} · b1`; defined only for general forms.
pub fn theta(f: &NormalForm) -> Result<FreeWord> {
    match f {
        NormalForm::PowerOfDelta { .. } => Err(Error::NotApplicable(
            "theta is undefined for powers of the half twist".into(),
        )),
        NormalForm::General { j, k, b1, .. } => {
            let head = FreeWord::power(j.square(), q(*k)? / 2);
            Ok(&head * b1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BraidGenerator::{S1, S2};

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn relations() {
        assert_eq!(eval(&b("s1 s2 s1")), eval(&b("s2 s1 s2")));
        assert!(eval(&b("D^2")).is_identity());
        assert!(!eval(&b("D")).is_identity());
        assert!(eval(&b("s1 s2 s1 s2 s1 s2")).is_identity());
        assert!(!eval(&b("s1")).is_identity());
        assert_eq!(eval(&b("D s1")), eval(&b("s2 D")));
        assert_eq!(eval(&b("D s2")), eval(&b("s1 D")));
        assert_eq!(eval(&b("S1 S2^4 D^4 s1")), eval(&b("s2^2 s1^2 s2^2 s1^2")));
        assert_eq!(eval(&b("S2 S1^4 D^4 s2")), eval(&b("s1^2 s2^2 s1^2 s2^2")));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q(4).unwrap(), 4);
        assert_eq!(q(5).unwrap(), 4);
        assert_eq!(q(-3).unwrap(), -2);
        assert_eq!(q(1).unwrap(), 0);
        assert!(q(0).is_err());
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            normal_form_of_braid(&b("s1^2")),
            NormalForm::General {
                j: S1,
                k: 2,
                b1: FreeWord::identity(),
                ell: 0
            }
        );
        assert_eq!(
            normal_form_of_braid(&b("s1 s2 s1")),
            NormalForm::PowerOfDelta { ell: 1 }
        );
        assert_eq!(
            normal_form_of_braid(&b("")),
            NormalForm::PowerOfDelta { ell: 0 }
        );
        assert_eq!(
            normal_form_of_braid(&b("s1 s2")),
            NormalForm::General {
                j: S2,
                k: -1,
                b1: FreeWord::identity(),
                ell: 1
            }
        );
        assert_eq!(
            normal_form_of_braid(&b("s1^3 s2^2")),
            NormalForm::General {
                j: S1,
                k: 3,
                b1: fw("a2"),
                ell: 0
            }
        );
    }

    #[test]
    fn theta_examples() {
        let f = NormalForm::General {
            j: S1,
            k: 3,
            b1: fw("a2"),
            ell: 0,
        };
        assert_eq!(theta(&f).unwrap(), fw("a1 a2"));
        let f = NormalForm::General {
            j: S2,
            k: -1,
            b1: FreeWord::identity(),
            ell: 1,
        };
        assert!(theta(&f).unwrap().is_identity());
        let f = NormalForm::General {
            j: S1,
            k: 2,
            b1: FreeWord::identity(),
            ell: 0,
        };
        assert_eq!(theta(&f).unwrap(), fw("a1"));
        assert!(theta(&NormalForm::PowerOfDelta { ell: 0 }).is_err());
    }

    #[test]
    fn embedding_and_conjugation() {
        assert!(embed_pure(&FreeWord::identity()).is_identity());
        assert_eq!(embed_pure(&fw("a1")), eval(&b("s1 s1")));
        assert_eq!(embed_pure(&fw("a1 A2")), eval(&b("s1^2 S2^2")));
        assert_eq!(delta_conjugate(&fw("a1")), fw("a2"));
        assert_eq!(delta_conjugate(&fw("a1^2 A2")), fw("a2^2 A1"));
        let d = CosetElement::delta();
        let w = fw("a1^2 A2 a1");
        assert_eq!(
            conjugate(&d, &embed_pure(&w)),
            embed_pure(&delta_conjugate(&w))
        );
        let x = eval(&b("s1^3 s2"));
        assert_eq!(conjugate(&CosetElement::identity(), &x), x);
        assert!(conjugate(&x, &CosetElement::identity()).is_identity());
        assert_eq!(
            conjugate(&eval(&b("S2")), &eval(&b("S1^4 D^4"))),
            embed_pure(&fw("a1 a2 a1 a2"))
        );
    }

    #[test]
    fn decoding_inverts_the_embedding() {
        for s in ["a1", "A1", "a2", "A2", "a1^3 A2^2 a1", "A2 a1 a2^-5"] {
            let w = fw(s);
            assert_eq!(decode_pure(&embed_pure(&w)), Some(w));
        }
        assert_eq!(decode_pure(&eval(&b("s1"))), None);
        assert_eq!(decode_pure(&eval(&b("D"))), None);
    }

    #[test]
    fn braid_syntax() {
        assert_eq!(b("D").to_string(), "s1 s2 s1");
        assert_eq!(b("D^-1"), b("S1 S2 S1"));
        assert_eq!(b("s1^3 S2^2").to_string(), "s1^3 S2^2");
        assert_eq!(b("s1^-2"), b("S1 S1"));
        assert_eq!(b("ε").to_string(), "ε");
        assert!("s3".parse::<BraidWord>().is_err());
        assert!(matches!(
            "s1^99999999999".parse::<BraidWord>(),
            Err(Error::Limit(_))
        ));
    }

    #[test]
    fn to_braid_round_trips() {
        let x = eval(&b("s1^3 S2 s1 D s2^2"));
        assert_eq!(eval(&x.to_braid()), x);
    }
}
