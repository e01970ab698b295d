//! Slow reference implementations, kept deliberately naive and separate from
//! the kernels they check.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::braid::{eval, BraidLetter, BraidWord, CosetElement};
use crate::counting::Count;
use crate::error::{Error, Result};
use crate::words::{syllable_decompose, FreeWord, Generator, Term};

pub const MAX_BRUTE_WORD_LENGTH: u64 = 14;
pub const MAX_BRUTE_CONJUGATOR_LENGTH: usize = 10;

type Letter = (Generator, i64);

const LETTERS: [Letter; 4] = [
    (Generator::A1, 1),
    (Generator::A1, -1),
    (Generator::A2, 1),
    (Generator::A2, -1),
];

fn letter_sequences(max_len: u64, mut visit: impl FnMut(&[Letter])) {
    fn go(seq: &mut Vec<Letter>, max_len: u64, visit: &mut dyn FnMut(&[Letter])) {
        if !seq.is_empty() {
            visit(seq);
        }
        if seq.len() as u64 == max_len {
            return;
        }
        for l in LETTERS {
            if let Some(&(g, e)) = seq.last() {
                if g == l.0 && e == -l.1 {
                    continue;
                }
            }
            seq.push(l);
            go(seq, max_len, visit);
            seq.pop();
        }
    }
    go(&mut Vec::new(), max_len, &mut visit);
}

fn word_of_letters(seq: &[Letter]) -> FreeWord {
    FreeWord::from_terms(seq.iter().map(|&(g, e)| Term::new(g, e)))
}

/// Every reduced word of letter length `1..=max_len`, once each.
pub fn enumerate_reduced_words(max_len: u64) -> Vec<FreeWord> {
    let mut out = Vec::new();
    letter_sequences(max_len, |seq| out.push(word_of_letters(seq)));
    out
}

/// Tuples `(d_1, …)` with `Π 3d_k <= x`, counted one by one.
pub fn brute_count_tuples(x: u64) -> Count {
    fn go(product: u64, x: u64) -> u64 {
        let mut n = 0;
        let mut d = 1;
        while product * 3 * d <= x {
            n += 1 + go(product * 3 * d, x);
            d += 1;
        }
        n
    }
    go(1, x).into()
}

/// `(letter length, Π 3d_k)` for every reduced word of length `1..=max_len`.
pub fn brute_word_weights(max_len: u64) -> Result<Vec<(u64, u128)>> {
    if max_len > MAX_BRUTE_WORD_LENGTH {
        return Err(Error::Limit(format!(
            "word enumeration is limited to length {MAX_BRUTE_WORD_LENGTH}"
        )));
    }
    let mut out = Vec::new();
    letter_sequences(max_len, |seq| {
        let w = word_of_letters(seq);
        let weight = syllable_decompose(&w)
            .degrees()
            .iter()
            .map(|&d| 3 * d as u128)
            .product();
        out.push((seq.len() as u64, weight));
    });
    Ok(out)
}

/// Reduced words of length `<= max_len` with `Π 3d_k <= x`.
pub fn brute_count_words(x: u64, max_len: u64) -> Result<Count> {
    let weights = brute_word_weights(max_len)?;
    Ok(BigUint::from(
        weights.iter().filter(|&&(_, w)| w <= x as u128).count(),
    ))
}

/// Orbits of sign vectors of length `2j` under rotation, by Burnside's lemma.
pub fn burnside_class_count(j: u32) -> Count {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let n = 2 * j;
    let mut total = BigUint::from(0u32);
    for s in 0..n {
        total += BigUint::from(1u32) << gcd(s, n);
    }
    total / BigUint::from(n)
}

/// Orbits of sign vectors of length `2j` under rotation, by listing each
/// vector's rotations as strings and keeping the least one.
pub fn enumerated_class_count(j: u32) -> u64 {
    let n = 2 * j as usize;
    let mut reps = HashSet::new();
    for m in 0..1u64 << n {
        let s: String = (0..n)
            .map(|i| if m >> i & 1 == 1 { '-' } else { '+' })
            .collect();
        let doubled = format!("{s}{s}");
        let least = (0..n).map(|k| &doubled[k..k + n]).min().expect("nonempty");
        reps.insert(least.to_string());
    }
    reps.len() as u64
}

/// Some braid `g` of length `<= max_len` with `g · x · g⁻¹ = y`.
pub fn brute_conjugator_search(
    x: &CosetElement,
    y: &CosetElement,
    max_len: usize,
) -> Result<Option<BraidWord>> {
    if max_len > MAX_BRUTE_CONJUGATOR_LENGTH {
        return Err(Error::Limit(format!(
            "conjugator search is limited to length {MAX_BRUTE_CONJUGATOR_LENGTH}"
        )));
    }
    let mut seen: HashSet<CosetElement> = HashSet::new();
    let mut layer: Vec<Vec<BraidLetter>> = vec![Vec::new()];
    seen.insert(CosetElement::identity());
    for depth in 0..=max_len {
        for letters in &layer {
            let g = eval(&BraidWord::new(letters.clone()));
            let image = &(&g * x) * &g.inverse();
            if &image == y {
                return Ok(Some(BraidWord::new(letters.clone())));
            }
        }
        if depth == max_len {
            break;
        }
        let mut next = Vec::new();
        for letters in &layer {
            for l in BraidLetter::all() {
                let mut ext = letters.clone();
                ext.push(l);
                if seen.insert(eval(&BraidWord::new(ext.clone()))) {
                    next.push(ext);
                }
            }
        }
        layer = next;
    }
    Ok(None)
}

/// Some reduced `g` of letter length `<= max_len` with `g⁻¹ · w1 · g = w2`.
pub fn brute_free_conjugator(w1: &FreeWord, w2: &FreeWord, max_len: u64) -> Option<FreeWord> {
    let check = |g: &FreeWord| &(&g.inverse() * w1) * g == *w2;
    if check(&FreeWord::identity()) {
        return Some(FreeWord::identity());
    }
    let mut found = None;
    letter_sequences(max_len, |seq| {
        if found.is_none() {
            let g = word_of_letters(seq);
            if check(&g) {
                found = Some(g);
            }
        }
    });
    found
}
