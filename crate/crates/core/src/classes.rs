//! Alternating word families, their conjugacy orbits, and the lower-bound
//! reports built from them.
//!
//! A family word is `a1^{2ε1} a2^{2ε2} ⋯ a1^{2ε_{2j-1}} a2^{2ε_{2j}}`. Moving
//! the first term to the end and conjugating by `Δ` (which swaps `a1`, `a2`)
//! gives the family word of the rotated sign vector, so conjugacy orbits
//! inside the family are orbits of sign vectors under rotation.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    conjugate, decode_pure, embed_pure, eval, BraidGenerator, BraidWord, CosetElement,
};
use crate::counting::Count;
use crate::error::{Error, Result};
use crate::exact::{closed, ClosedForm, Precision, RealValue};
use crate::invariants::{entropy_bounds, l_plus};
use crate::words::{FreeWord, Generator, Sign};

/// Largest family index accepted by the reports.
pub const MAX_FAMILY_INDEX: u64 = 4096;

/// Largest `j` for which orbits are counted by direct enumeration.
pub const ENUMERATION_LIMIT: u32 = 12;

/// A sign vector of even length `2j >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyWord {
    signs: Vec<Sign>,
}

impl FamilyWord {
    pub fn new(signs: Vec<Sign>) -> Result<FamilyWord> {
        if signs.is_empty() || !signs.len().is_multiple_of(2) {
            return Err(Error::Precondition(
                "a family word has an even, positive number of signs".into(),
            ));
        }
        Ok(FamilyWord { signs })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `j`, half the number of terms.
    pub fn pairs(&self) -> usize {
        self.signs.len() / 2
    }

    pub fn expand(&self) -> FreeWord {
        alternating_word(Generator::A1, &self.signs)
    }

    /// Shifts the sign vector left by one position.
    pub fn rotate(&self) -> FamilyWord {
        let mut signs = self.signs.clone();
        signs.rotate_left(1);
        FamilyWord { signs }
    }

    /// `h` with `h · w · h⁻¹ = rotate(w)`, namely `Δ · a1^{-2ε1}`.
    pub fn rotation_witness(&self) -> CosetElement {
        let head = FreeWord::power(Generator::A1, -2 * self.signs[0].value());
        &CosetElement::delta() * &embed_pure(&head)
    }
}

impl fmt::Display for FamilyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .signs
            .iter()
            .map(|s| if *s == Sign::Plus { '+' } else { '-' })
            .collect();
        write!(f, "{s}")
    }
}

fn alternating_word(first: Generator, signs: &[Sign]) -> FreeWord {
    let mut g = first;
    let mut w = FreeWord::identity();
    for s in signs {
        w = &w * &FreeWord::power(g, 2 * s.value());
        g = g.other();
    }
    w
}

fn signs_of_mask(mask: u64, len: usize) -> Vec<Sign> {
    (0..len)
        .map(|i| {
            if (mask >> (len - 1 - i)) & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .collect()
}

/// All `2^{2j}` family words, all-plus first.
pub fn enumerate_family(j: u32) -> Result<Vec<FamilyWord>> {
    if j == 0 {
        return Err(Error::Precondition("j must be at least 1".into()));
    }
    if j > 12 {
        return Err(Error::Limit(format!(
            "enumerating 2^{} family words",
            2 * j
        )));
    }
    let len = 2 * j as usize;
    Ok((0..1u64 << len)
        .map(|m| FamilyWord {
            signs: signs_of_mask(m, len),
        })
        .collect())
}

/// The orbit of `w` under rotation.
pub fn orbit_of(w: &FamilyWord) -> BTreeSet<FamilyWord> {
    let mut orbit = BTreeSet::new();
    let mut cur = w.clone();
    while orbit.insert(cur.clone()) {
        cur = cur.rotate();
    }
    orbit
}

fn rotate_mask(m: u64, len: u32) -> u64 {
    let top = (m >> (len - 1)) & 1;
    ((m << 1) & ((1u64 << len) - 1)) | top
}

/// Number of rotation orbits on sign vectors of length `2j`.
pub fn class_count(j: u32) -> Result<Count> {
    if j == 0 {
        return Err(Error::Precondition("j must be at least 1".into()));
    }
    if j <= ENUMERATION_LIMIT {
        Ok(class_count_by_enumeration(j).into())
    } else {
        class_count_by_burnside(j)
    }
}

fn class_count_by_enumeration(j: u32) -> u64 {
    let len = 2 * j;
    let total = 1u64 << len;
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut orbits = 0;
    for start in 0..total {
        if seen[(start / 64) as usize] >> (start % 64) & 1 == 1 {
            continue;
        }
        orbits += 1;
        let mut m = start;
        loop {
            seen[(m / 64) as usize] |= 1 << (m % 64);
            m = rotate_mask(m, len);
            if m == start {
                break;
            }
        }
    }
    orbits
}

fn class_count_by_burnside(j: u32) -> Result<Count> {
    if u64::from(j) > MAX_FAMILY_INDEX {
        return Err(Error::Limit(format!("class count for j = {j}")));
    }
    let n = 2 * j;
    let fixed: BigUint = (0..n).map(|s| BigUint::one() << s.gcd(&n)).sum();
    Ok(fixed / BigUint::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Lambda,
    Entropy,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Lambda => write!(f, "lambda"),
            Variant::Entropy => write!(f, "entropy"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub variant: Variant,
    #[serde(rename = "Y")]
    pub y: String,
    pub index: u64,
    pub family_size: String,
    pub class_count: Option<String>,
    /// Rounded up.
    #[serde(rename = "paper_bound")]
    pub floor_bound: String,
    /// The common upper bound of the family words, rounded up.
    pub family_upper_bound: String,
    pub family_within_y: bool,
    pub count_exceeds_bound: bool,
    pub satisfied: bool,
}

/// Report for the family counting argument at level `Y`.
///
/// `lambda`: `j₀ = ⌊Y/(300 log 8)⌋` words `a1^{±2} a2^{±2} ⋯` with `j₀` terms,
/// `2^{j₀}` of them, compared with `½ e^{Y/900}`.
/// `entropy`: `j₀ = ⌊Y/(300π log 8)⌋` family words with `2j₀` terms, whose
/// class count is compared with `½ e^{Y/(900π)}`.
pub fn lower_bound_report(
    y: &ClosedForm,
    variant: Variant,
    prec: Precision,
) -> Result<LowerBoundReport> {
    let log8 = ClosedForm::log_u64(8);
    let unit = match variant {
        Variant::Lambda => log8.scale_int(300),
        Variant::Entropy => log8.scale_int(300).mul(&ClosedForm::pi()),
    };
    let index = closed::floor_ratio(y, &unit, prec)?;
    if index < 2.into() {
        return Err(Error::Precondition(format!(
            "Y = {y} is below the validity threshold 2 * ({unit}) of the {variant} report"
        )));
    }
    let index = index
        .to_u64()
        .filter(|&i| i <= MAX_FAMILY_INDEX)
        .ok_or_else(|| Error::Limit(format!("family index for Y = {y}")))?;

    let (terms, family_size, counted) = match variant {
        Variant::Lambda => (index, BigUint::one() << index, BigUint::one() << index),
        Variant::Entropy => (
            2 * index,
            BigUint::one() << (2 * index),
            class_count(index as u32)?,
        ),
    };

    // All family words share their syllable degrees; check the all-plus one
    // and, for small families, every word.
    let representative = alternating_word(Generator::A1, &vec![Sign::Plus; terms as usize]);
    let upper = match variant {
        Variant::Lambda => crate::invariants::lambda_tr_bounds_word(&representative).upper(),
        Variant::Entropy => entropy_bounds(&representative)?.upper(),
    };
    if terms <= 12 {
        let p = l_plus(&representative);
        for m in 0..1u64 << terms {
            let w = alternating_word(Generator::A1, &signs_of_mask(m, terms as usize));
            debug_assert_eq!(l_plus(&w), p);
            if l_plus(&w) != p {
                return Err(Error::Precondition(
                    "family words differ in syllable degrees".into(),
                ));
            }
        }
    }
    let family_within_y = closed::compare(&upper, y, prec)? != std::cmp::Ordering::Greater;

    let exponent = match variant {
        Variant::Lambda => y.scale(&BigRational::new(1.into(), 900.into())),
        Variant::Entropy => y.div(&ClosedForm::pi().scale_int(900))?,
    };
    let bound = RealValue::ScaledExp {
        factor: BigRational::new(1.into(), 2.into()),
        exponent,
    };
    let count_exceeds_bound =
        bound.cmp_integer(&counted.clone().into(), prec)? != std::cmp::Ordering::Greater;

    Ok(LowerBoundReport {
        variant,
        y: y.to_string(),
        index,
        family_size: family_size.to_string(),
        class_count: (variant == Variant::Entropy).then(|| counted.to_string()),
        floor_bound: bound.upper_decimal(prec),
        family_upper_bound: RealValue::Closed(upper).upper_decimal(prec),
        family_within_y,
        count_exceeds_bound,
        satisfied: family_within_y && count_exceeds_bound,
    })
}

/// A conjugation `β⁻¹ · from · β = to` between two alternating words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenConjugation {
    pub from: String,
    pub to: String,
    pub conjugator: String,
}

/// Whether `w` is `a_i^{±2} a_{i'}^{±2} ⋯` with alternating generators and at least `min_terms` terms.
fn is_alternating_square_word(w: &FreeWord, min_terms: usize) -> bool {
    w.len() >= min_terms && w.terms().iter().all(|t| t.degree() == 2)
}

/// `s_i · β₁ · Δ^ell` for every pure `β₁` of total degree `<= max_degree`.
fn conjugators(max_degree: u64) -> Vec<(BraidWord, CosetElement)> {
    let mut pure = vec![FreeWord::identity()];
    let mut frontier = vec![FreeWord::identity()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for w in &frontier {
            for g in [Generator::A1, Generator::A2] {
                for e in [1, -1] {
                    let ext = w * &FreeWord::power(g, e);
                    if ext.degree() == w.degree() + 1 {
                        next.push(ext);
                    }
                }
            }
        }
        pure.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for s in [BraidGenerator::S1, BraidGenerator::S2] {
        for w in &pure {
            for ell in 0..2 {
                let spelled = &(&BraidWord::power(s, 1) * &spell_pure(w)) * &BraidWord::delta(ell);
                let element = eval(&spelled);
                out.push((spelled, element));
            }
        }
    }
    out
}

fn spell_pure(w: &FreeWord) -> BraidWord {
    w.terms().iter().fold(BraidWord::identity(), |acc, t| {
        &acc * &BraidWord::power(BraidGenerator::of_square(t.generator()), 2 * t.exponent())
    })
}

/// Searches for `β = s_i β₁ Δ^ell` (with `β₁` pure of degree `<= max_conj_degree`)
/// conjugating an alternating word with `2j` terms to an alternating word
/// with at least four terms, in either direction. A bounded search: an empty
/// result is evidence, not proof.
pub fn search_forbidden_conjugations(
    j: u32,
    max_conj_degree: u64,
) -> Result<Vec<ForbiddenConjugation>> {
    if j < 2 {
        return Err(Error::Precondition(
            "the search needs j >= 2 (at least four terms)".into(),
        ));
    }
    if j > 8 || max_conj_degree > 8 {
        return Err(Error::Limit(format!(
            "search with j = {j}, conjugator degree {max_conj_degree}"
        )));
    }
    let len = 2 * j as usize;
    let mut words = Vec::new();
    for first in [Generator::A1, Generator::A2] {
        for m in 0..1u64 << len {
            words.push(alternating_word(first, &signs_of_mask(m, len)));
        }
    }
    let betas = conjugators(max_conj_degree);
    let hits: Vec<Vec<ForbiddenConjugation>> = words
        .par_iter()
        .map(|w| {
            let x = embed_pure(w);
            let mut found = Vec::new();
            for (spelled, beta) in &betas {
                // β⁻¹ w β with w as the conjugated word, and β w β⁻¹ with w as the target.
                for (image, min_terms, from_w) in [
                    (conjugate(&beta.inverse(), &x), 4, true),
                    (conjugate(beta, &x), 1, false),
                ] {
                    if let Some(v) = decode_pure(&image) {
                        if is_alternating_square_word(&v, min_terms) {
                            let (from, to) = if from_w {
                                (w.clone(), v)
                            } else {
                                (v, w.clone())
                            };
                            found.push(ForbiddenConjugation {
                                from: from.to_string(),
                                to: to.to_string(),
                                conjugator: spelled.to_string(),
                            });
                        }
                    }
                }
            }
            found
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

/// `s2⁻¹ (s1⁻⁴ Δ⁴) s2 = a1 a2 a1 a2`, an allowed conjugation into the family.
pub fn positive_control() -> bool {
    let x = eval(&"S1^4 D^4".parse().expect("valid braid"));
    let g = eval(&"S2".parse().expect("valid braid"));
    let target: FreeWord = "a1 a2 a1 a2".parse().expect("valid word");
    conjugate(&g, &x) == embed_pure(&target)
}

/// `2^{2j} / (2j)` rounded up to an integer, the orbit-size floor on the class count.
pub fn class_count_floor(j: u32) -> Count {
    let n = BigUint::from(2 * j);
    let total = BigUint::one() << (2 * j);
    let (q, r) = total.div_rem(&n);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}
