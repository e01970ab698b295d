//! Exact counting of degree tuples and reduced words under the constraint
//! `Π 3d_k <= X`, together with the analytic upper bounds they obey.
//!
//! All recursions only ever look at values `⌊X/n⌋`, so tables are indexed
//! by that set (about `2√X` entries). A value `v` depends only on values
//! `<= ⌊v/3⌋`, which lets the table be filled in parallel layers; each entry
//! is a pure function of earlier layers, so the result does not depend on
//! the number of workers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{closed, ClosedForm, Precision, RealValue};

/// Largest threshold accepted by the table-based kernels.
pub const MAX_X: u64 = 1_000_000_000_000;

pub type Count = BigUint;

/// The constraint `Π 3d_k <= X`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Threshold {
    x: BigUint,
}

impl Threshold {
    pub fn new(x: BigUint) -> Threshold {
        Threshold { x }
    }

    pub fn from_u64(x: u64) -> Threshold {
        Threshold { x: x.into() }
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    fn kernel_value(&self) -> Result<u64> {
        match self.x.to_u64() {
            Some(v) if v <= MAX_X => Ok(v),
            _ => Err(Error::Limit(format!(
                "X = {} exceeds the supported maximum {MAX_X}",
                self.x
            ))),
        }
    }

    /// `⌊log X / log 3⌋`, the largest possible tuple length; 0 for `X < 3`.
    pub fn max_length(&self) -> u32 {
        let three = BigUint::from(3u32);
        let mut p = three.clone();
        let mut j = 0;
        while p <= self.x {
            j += 1;
            p *= &three;
        }
        j
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)
    }
}

/// `X = ⌊e^Y⌋` for `Y >= 0`.
pub fn threshold_from_y(y: &ClosedForm, prec: Precision) -> Result<Threshold> {
    if closed::sign(y, prec)? == std::cmp::Ordering::Less {
        return Err(Error::Precondition(format!("Y = {y} is negative")));
    }
    let x = closed::floor_exp(y, prec)?;
    Ok(Threshold::new(x.to_biguint().expect("e^Y >= 1")))
}

/// A nonempty tuple of syllable degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeTuple {
    degrees: Vec<u64>,
}

impl DegreeTuple {
    pub fn new(degrees: Vec<u64>) -> Result<DegreeTuple> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::Precondition(
                "a degree tuple is a nonempty sequence of positive integers".into(),
            ));
        }
        Ok(DegreeTuple { degrees })
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `Π 3d_k`.
    pub fn weight(&self) -> BigUint {
        self.degrees
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(3 * d))
    }
}

/// Runs `f` on a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn overflow() -> Error {
    Error::Limit("intermediate count exceeds 128 bits".into())
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(overflow)
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(overflow)
}

/// The set `{⌊x/n⌋ : n >= 1} ∪ {0}` in ascending order.
struct FloorValues {
    x: u64,
    root: u64,
    large: u64,
    values: Vec<u64>,
}

impl FloorValues {
    fn new(x: u64) -> FloorValues {
        let root = x.isqrt();
        let large = x / (root + 1);
        let mut values: Vec<u64> = (0..=root).collect();
        values.extend((1..=large).rev().map(|k| x / k));
        FloorValues {
            x,
            root,
            large,
            values,
        }
    }

    fn index(&self, v: u64) -> usize {
        if v <= self.root {
            v as usize
        } else {
            (self.root + 1 + self.large - self.x / v) as usize
        }
    }
}

/// `Σ_{d=1..m} f(⌊m/d⌋)` by grouping equal quotients.
fn block_sum(m: u64, mut f: impl FnMut(u64) -> Result<u128>) -> Result<u128> {
    let mut acc = 0u128;
    let mut d = 1;
    while d <= m {
        let q = m / d;
        let last = m / q;
        acc = add(acc, mul((last - d + 1) as u128, f(q)?)?)?;
        d = last + 1;
    }
    Ok(acc)
}

/// Fills a table over the floor values where the entry for `v` depends
/// only on entries for values `<= ⌊v/3⌋`.
fn fill_layered<E, F>(fv: &FloorValues, compute: F) -> Result<Vec<E>>
where
    E: Send + Sync + Copy,
    F: Fn(u64, &[E]) -> Result<E> + Sync,
{
    let n = fv.values.len();
    let mut table: Vec<E> = Vec::with_capacity(n);
    table.push(compute(0, &table)?);
    while table.len() < n {
        let known = fv.values[table.len() - 1];
        let start = table.len();
        let mut end = start;
        while end < n && fv.values[end] / 3 <= known {
            end += 1;
        }
        let layer: Vec<E> = (start..end)
            .into_par_iter()
            .map(|i| compute(fv.values[i], &table))
            .collect::<Result<_>>()?;
        table.extend(layer);
    }
    Ok(table)
}

/// `N_j*(X)`: tuples of length `j` with `Π 3d_k <= X`.
pub fn count_tuples_j(j: u32, t: &Threshold) -> Result<Count> {
    if j == 0 {
        return Err(Error::Precondition(
            "tuple length must be at least 1".into(),
        ));
    }
    if j > t.max_length() {
        return Ok(Count::zero());
    }
    let fv = FloorValues::new(t.kernel_value()?);
    let mut level: Vec<u128> = fv.values.iter().map(|&v| u128::from(v >= 1)).collect();
    for _ in 0..j {
        level = fv
            .values
            .par_iter()
            .map(|&v| block_sum(v / 3, |q| Ok(level[fv.index(q)])))
            .collect::<Result<_>>()?;
    }
    Ok(level[fv.index(fv.x)].into())
}

/// `N_j*(X)` for every `j = 1..=⌊log X/log 3⌋`.
pub fn count_tuples_by_length(t: &Threshold) -> Result<Vec<Count>> {
    let jmax = t.max_length();
    if jmax == 0 {
        return Ok(Vec::new());
    }
    let fv = FloorValues::new(t.kernel_value()?);
    let mut level: Vec<u128> = fv.values.iter().map(|&v| u128::from(v >= 1)).collect();
    let mut out = Vec::with_capacity(jmax as usize);
    for _ in 0..jmax {
        level = fv
            .values
            .par_iter()
            .map(|&v| block_sum(v / 3, |q| Ok(level[fv.index(q)])))
            .collect::<Result<_>>()?;
        out.push(level[fv.index(fv.x)].into());
    }
    Ok(out)
}

/// `N*(X)`: tuples of any length with `Π 3d_k <= X`.
pub fn count_tuples(t: &Threshold) -> Result<Count> {
    let fv = FloorValues::new(t.kernel_value()?);
    // N*(v) = Σ_{d <= ⌊v/3⌋} (1 + N*(⌊v/(3d)⌋))
    let table = fill_layered(&fv, |v, table: &[u128]| {
        let m = v / 3;
        add(m as u128, block_sum(m, |q| Ok(table[fv.index(q)]))?)
    })?;
    Ok(table[fv.index(fv.x)].into())
}

/// Ways to continue a word after a syllable of the first kind (`.0`) or the
/// second kind (`.1`) within the remaining budget; the empty continuation counts.
type Continuations = (u128, u128);

fn continuation_sums(m: u64, fv: &FloorValues, table: &[Continuations]) -> Result<(u128, u128)> {
    let mut sf = 0u128;
    let mut ss = 0u128;
    let mut d = 1;
    while d <= m {
        let q = m / d;
        let last = m / q;
        let (f, s) = table[fv.index(q)];
        let width = (last - d + 1) as u128;
        sf = add(sf, mul(width, f)?)?;
        ss = add(ss, mul(width, s)?)?;
        d = last + 1;
    }
    Ok((sf, ss))
}

/// `N^{L₋}`: nonidentity reduced words with `Π 3d_k <= X` over their syllables.
pub fn count_words(t: &Threshold) -> Result<Count> {
    let fv = FloorValues::new(t.kernel_value()?);
    // Next syllable of the first kind needs d >= 2 and has 2 choices after
    // either kind; of the second kind it has 2 choices after the first kind
    // and 1 after the second (its sign must flip).
    let table = fill_layered(&fv, |v, table: &[Continuations]| {
        let m = v / 3;
        if m == 0 {
            return Ok((1, 1));
        }
        let (sf, ss) = continuation_sums(m, &fv, table)?;
        let first_kind = sf - table[fv.index(m)].0;
        let to_first = mul(2, first_kind)?;
        Ok((
            add(add(1, to_first)?, mul(2, ss)?)?,
            add(add(1, to_first)?, ss)?,
        ))
    })?;
    let m = fv.x / 3;
    if m == 0 {
        return Ok(Count::zero());
    }
    let (sf, ss) = continuation_sums(m, &fv, &table)?;
    let first_kind = sf - table[fv.index(m)].0;
    Ok(add(mul(4, first_kind)?, mul(4, ss)?)?.into())
}

/// As [`count_words`], restricted to words of total degree `<= max_degree`.
pub fn count_words_bounded(t: &Threshold, max_degree: u64) -> Result<Count> {
    let x = t.kernel_value()?;
    let mut memo: HashMap<(u64, u64, bool), u128> = HashMap::new();
    let m = x / 3;
    let mut total = 0u128;
    for d in 1..=m.min(max_degree) {
        let rest = continuations_bounded(m / d, max_degree - d, true, &mut memo)?;
        total = add(total, mul(4, rest)?)?;
        if d >= 2 {
            let rest = continuations_bounded(m / d, max_degree - d, false, &mut memo)?;
            total = add(total, mul(4, rest)?)?;
        }
    }
    Ok(total.into())
}

fn continuations_bounded(
    v: u64,
    degree_left: u64,
    after_second: bool,
    memo: &mut HashMap<(u64, u64, bool), u128>,
) -> Result<u128> {
    if let Some(&c) = memo.get(&(v, degree_left, after_second)) {
        return Ok(c);
    }
    let m = v / 3;
    let mut total = 1u128;
    for d in 1..=m.min(degree_left) {
        let to_second = if after_second { 1 } else { 2 };
        let rest = continuations_bounded(m / d, degree_left - d, true, memo)?;
        total = add(total, mul(to_second, rest)?)?;
        if d >= 2 {
            let rest = continuations_bounded(m / d, degree_left - d, false, memo)?;
            total = add(total, mul(2, rest)?)?;
        }
    }
    memo.insert((v, degree_left, after_second), total);
    Ok(total)
}

/// Number of reduced words whose syllable degrees, read left to right, are `tuple`.
pub fn words_per_tuple(tuple: &DegreeTuple) -> Count {
    // (ending in a first-kind syllable, ending in a second-kind syllable)
    let mut state: (BigUint, BigUint) = (BigUint::zero(), BigUint::zero());
    for (i, &d) in tuple.degrees().iter().enumerate() {
        let (f, s) = &state;
        state = if i == 0 {
            (
                if d >= 2 { 4u32.into() } else { BigUint::zero() },
                4u32.into(),
            )
        } else {
            let to_first = if d >= 2 {
                (f + s) * 2u32
            } else {
                BigUint::zero()
            };
            (to_first, f * 2u32 + s)
        };
    }
    state.0 + state.1
}

/// `(1/(j-1)!) (1/3) (2/3)^{j-1} X · log((1/3)(2/3)^{j-1} X)^{j-1}`, valid for `X >= 3^j`.
pub fn bound_tuples_j(j: u32, t: &Threshold) -> Result<RealValue> {
    if j == 0 {
        return Err(Error::Precondition(
            "tuple length must be at least 1".into(),
        ));
    }
    if j > t.max_length() {
        return Err(Error::NotApplicable(format!("X = {t} is below 3^{j}")));
    }
    let x = BigRational::from_integer(BigInt::from(t.x().clone()));
    let c = BigRational::new(BigInt::from(2u32).pow(j - 1), BigInt::from(3u32).pow(j)) * &x;
    let factorial: BigInt = (1..j).map(BigInt::from).product();
    let coefficient = &c / BigRational::from_integer(factorial);
    let log_part = ClosedForm::log_rational(&c)?.pow(j - 1);
    let value = log_part.scale(&coefficient);
    Ok(match value.as_rational() {
        Some(r) => RealValue::Rational(r),
        None => RealValue::Closed(value),
    })
}

/// `(X/3)^{5/3}`.
pub fn bound_tuples_total(t: &Threshold) -> RealValue {
    RealValue::RationalPower {
        base: BigRational::new(BigInt::from(t.x().clone()), BigInt::from(3u32)),
        num: 5,
        den: 3,
    }
}

/// The word-count bound `e^{3Y}/2 = X³/2` and the intermediate value
/// `2·4^{j₀}·N*(X)` with `j₀ = ⌊log X / log 3⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordBound {
    pub half_cube: BigRational,
    pub chain: Count,
}

pub fn bound_words(t: &Threshold) -> Result<WordBound> {
    let x = BigInt::from(t.x().clone());
    let half_cube = BigRational::new(x.pow(3), BigInt::from(2u32));
    let j0 = t.max_length();
    let chain = BigUint::from(2u32) * BigUint::from(4u32).pow(j0) * count_tuples(t)?;
    Ok(WordBound { half_cube, chain })
}

/// One line of counting output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub function: String,
    pub j: Option<u32>,
    #[serde(rename = "X")]
    pub x: Option<String>,
    pub exact: String,
    pub bound: String,
    pub satisfied: bool,
}

/// Rows for `N*(X)` and every `N_j*(X)`, each against its bound.
pub fn tuple_rows(t: &Threshold, prec: Precision) -> Result<Vec<CountRow>> {
    let total = count_tuples(t)?;
    let bound = bound_tuples_total(t);
    let mut rows = vec![CountRow {
        function: "count_tuples".into(),
        j: None,
        x: Some(t.to_string()),
        exact: total.to_string(),
        bound: bound.upper_decimal(prec),
        satisfied: bound.bounds_count(&total, prec)?,
    }];
    for (i, n) in count_tuples_by_length(t)?.into_iter().enumerate() {
        let j = i as u32 + 1;
        let bound = bound_tuples_j(j, t)?;
        rows.push(CountRow {
            function: "count_tuples_j".into(),
            j: Some(j),
            x: Some(t.to_string()),
            exact: n.to_string(),
            bound: bound.upper_decimal(prec),
            satisfied: bound.bounds_count(&n, prec)?,
        });
    }
    Ok(rows)
}

/// Rows for `N^{L₋}` against `X³/2` and against `2·4^{j₀}·N*(X)`.
pub fn word_rows(t: &Threshold, prec: Precision) -> Result<Vec<CountRow>> {
    let exact = count_words(t)?;
    let b = bound_words(t)?;
    let half_cube = RealValue::Rational(b.half_cube.clone());
    Ok(vec![
        CountRow {
            function: "count_words".into(),
            j: None,
            x: Some(t.to_string()),
            exact: exact.to_string(),
            bound: half_cube.upper_decimal(prec),
            satisfied: half_cube.bounds_count(&exact, prec)?,
        },
        CountRow {
            function: "count_words_chain".into(),
            j: Some(t.max_length()),
            x: Some(t.to_string()),
            exact: exact.to_string(),
            bound: b.chain.to_string(),
            satisfied: exact <= b.chain,
        },
    ])
}
