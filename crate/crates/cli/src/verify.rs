//! Check batteries behind `braidcount verify`. Every check compares a kernel
//! against a relation it must satisfy or against a brute-force oracle.

use std::collections::{BTreeSet, HashMap};

use braidcount::braid::{
    conjugate, embed_pure, eval, normal_form, theta, BraidLetter, BraidWord, NormalForm,
};
use braidcount::classes::{
    class_count, class_count_floor, enumerate_family, lower_bound_report, orbit_of,
    positive_control, search_forbidden_conjugations, Variant, ENUMERATION_LIMIT,
};
use braidcount::counting::{
    bound_tuples_j, bound_tuples_total, bound_words, count_tuples, count_tuples_j, count_words,
    count_words_bounded, Threshold,
};
use braidcount::exact::ClosedForm;
use braidcount::oracle::{
    brute_count_tuples, brute_word_weights, burnside_class_count, enumerate_reduced_words,
    enumerated_class_count, MAX_BRUTE_WORD_LENGTH,
};
use braidcount::words::{
    are_conjugate_free, conjugating_element, cyclic_reduce, term_rotations, FreeWord,
};
use braidcount::{Precision, Result};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Words,
    Braid,
    Counting,
    Classes,
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_x: u64,
    pub max_len: u64,
    pub pairs: u32,
    pub conj_len: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub check: String,
    pub cases: u64,
    pub passed: bool,
    pub detail: String,
}

/// Collects rows; the first counterexample of each check goes into `detail`.
struct Checks {
    suite: &'static str,
    rows: Vec<CheckRow>,
}

impl Checks {
    fn new(suite: &'static str) -> Checks {
        Checks {
            suite,
            rows: Vec::new(),
        }
    }

    fn run(
        &mut self,
        check: impl Into<String>,
        body: impl FnOnce() -> Result<(u64, Option<String>)>,
    ) {
        let (cases, failure) = match body() {
            Ok(r) => r,
            Err(e) => (0, Some(e.to_string())),
        };
        self.rows.push(CheckRow {
            suite: self.suite,
            check: check.into(),
            cases,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }
}

/// Runs `f` on every item, stopping at the first failure message.
fn each<T>(
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(T) -> Option<String>,
) -> (u64, Option<String>) {
    let mut n = 0;
    for item in items {
        n += 1;
        if let Some(msg) = f(item) {
            return (n, Some(msg));
        }
    }
    (n, None)
}

fn all_braids(max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::identity()];
    let mut layer = vec![BraidWord::identity()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|b| {
                BraidLetter::all().into_iter().map(move |l| {
                    let mut letters = b.letters().to_vec();
                    letters.push(l);
                    BraidWord::new(letters)
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn braid(s: &str) -> BraidWord {
    s.parse().expect("fixed braid text")
}

fn words_suite(limits: &Limits) -> Vec<CheckRow> {
    let mut c = Checks::new("words");
    let words = enumerate_reduced_words(limits.max_len.min(6));
    let conjugators = enumerate_reduced_words(limits.conj_len.min(3));

    c.run("text round trip", || {
        Ok(each(&words, |w| match w.to_string().parse::<FreeWord>() {
            Ok(back) if back == *w => None,
            Ok(back) => Some(format!("{w} reparsed as {back}")),
            Err(e) => Some(format!("{w}: {e}")),
        }))
    });
    c.run("syllables reassemble", || {
        Ok(each(&words, |w| {
            let back = w.syllables().expand();
            (back != *w).then(|| format!("{w} reassembled as {back}"))
        }))
    });
    c.run("cyclic reduction", || {
        Ok(each(&words, |w| {
            let r = cyclic_reduce(w);
            let back = &(&r.conjugator * &r.core) * &r.conjugator.inverse();
            (back != *w || !r.core.is_cyclically_reduced()).then(|| format!("{w}"))
        }))
    });
    c.run("conjugates detected with witness", || {
        let pairs = words
            .iter()
            .flat_map(|w| conjugators.iter().map(move |g| (w, g)));
        Ok(each(pairs, |(w, g)| {
            let v = &(&g.inverse() * w) * g;
            if !are_conjugate_free(w, &v) {
                return Some(format!("{w} and {v} not recognised"));
            }
            match conjugating_element(w, &v) {
                Some(h) if &(&h.inverse() * w) * &h == v => None,
                _ => Some(format!("no valid witness for {w}, {v}")),
            }
        }))
    });
    c.run("cyclically reduced conjugates are rotations", || {
        let pairs = words
            .iter()
            .flat_map(|w| conjugators.iter().map(move |g| (w, g)));
        Ok(each(pairs, |(w, g)| {
            let v = &(&g.inverse() * w) * g;
            let both = w.is_cyclically_reduced() && v.is_cyclically_reduced() && w.len() > 1;
            (both && !term_rotations(w).contains(&v))
                .then(|| format!("{v} is not a rotation of {w}"))
        }))
    });
    c.rows
}

fn braid_suite(limits: &Limits) -> Vec<CheckRow> {
    let mut c = Checks::new("braid");
    c.run("relations", || {
        let equal = [
            ("s1 s2 s1", "s2 s1 s2"),
            ("D D", ""),
            ("s1 s2 s1 s2 s1 s2", ""),
            ("D s1", "s2 D"),
            ("D s2", "s1 D"),
            ("S1 S2^4 D^4 s1", "s2^2 s1^2 s2^2 s1^2"),
            ("S2 S1^4 D^4 s2", "s1^2 s2^2 s1^2 s2^2"),
        ];
        let (n, fail) = each(equal, |(l, r)| {
            (eval(&braid(l)) != eval(&braid(r))).then(|| format!("{l} != {r}"))
        });
        if fail.is_some() {
            return Ok((n, fail));
        }
        let fail = eval(&braid("D"))
            .is_identity()
            .then(|| "D is trivial".to_string());
        Ok((n + 1, fail))
    });
    let braids = all_braids(limits.max_len.min(8) as usize);
    c.run("normal form sound and canonical", || {
        let mut seen: HashMap<_, NormalForm> = HashMap::new();
        Ok(each(&braids, |b| {
            let x = eval(b);
            let f = normal_form(&x);
            if f.eval() != x || !f.satisfies_first_term_constraint() {
                return Some(format!("{b}: {f}"));
            }
            let prev = seen.entry(x).or_insert_with(|| f.clone());
            (*prev != f).then(|| format!("{b}: {f} vs {prev}"))
        }))
    });
    c.run("theta ignores the half twist", || {
        Ok(each(&braids, |b| {
            let f0 = normal_form(&eval(b));
            let f1 = normal_form(&eval(&(b * &BraidWord::delta(1))));
            match (theta(&f0), theta(&f1)) {
                (Ok(t0), Ok(t1)) if t0 == t1 => None,
                (Err(_), Err(_)) => None,
                _ => Some(format!("{b}")),
            }
        }))
    });
    c.run("text round trip", || {
        Ok(each(&braids, |b| {
            match b.to_string().parse::<BraidWord>() {
                Ok(back) if eval(&back) == eval(b) => None,
                _ => Some(format!("{b}")),
            }
        }))
    });
    c.rows
}

fn counting_suite(limits: &Limits) -> Vec<CheckRow> {
    let mut c = Checks::new("counting");
    let prec = Precision::from_env().unwrap_or_default();
    let max_x = limits.max_x;
    c.run("single terms are a floor", || {
        let mut fail = None;
        for x in 0..=max_x {
            if count_tuples_j(1, &Threshold::from_u64(x))? != BigUint::from(x / 3) {
                fail = Some(format!("X = {x}"));
                break;
            }
        }
        Ok((max_x + 1, fail))
    });
    c.run("tuples against oracle", || {
        let mut fail = None;
        for x in 0..=max_x {
            if count_tuples(&Threshold::from_u64(x))? != brute_count_tuples(x) {
                fail = Some(format!("X = {x}"));
                break;
            }
        }
        Ok((max_x + 1, fail))
    });
    let len = limits.max_len.min(MAX_BRUTE_WORD_LENGTH);
    c.run(format!("words against oracle, length <= {len}"), || {
        let weights = brute_word_weights(len)?;
        let xs: BTreeSet<u64> = (0..=12u32)
            .flat_map(|k| [3u64.pow(k), 2 * 3u64.pow(k)])
            .collect();
        let mut n = 0;
        for &x in &xs {
            for l in 0..=len {
                n += 1;
                let brute = weights
                    .iter()
                    .filter(|&&(wl, w)| wl <= l && w <= x as u128)
                    .count();
                if count_words_bounded(&Threshold::from_u64(x), l)? != BigUint::from(brute) {
                    return Ok((n, Some(format!("X = {x}, L = {l}"))));
                }
            }
        }
        Ok((n, None))
    });
    let step = (max_x / 200).max(1);
    c.run("tuple and word bounds", || {
        let mut n = 0;
        for x in (1..=max_x).step_by(step as usize) {
            let t = Threshold::from_u64(x);
            n += 1;
            let total = count_tuples(&t)?;
            if !bound_tuples_total(&t).bounds_count(&total, prec)? {
                return Ok((n, Some(format!("total at X = {x}"))));
            }
            for j in 1..=t.max_length() {
                let nj = count_tuples_j(j, &t)?;
                if !bound_tuples_j(j, &t)?.bounds_count(&nj, prec)? {
                    return Ok((n, Some(format!("j = {j} at X = {x}"))));
                }
            }
            for j in t.max_length() + 1..=t.max_length() + 2 {
                if count_tuples_j(j, &t)? != BigUint::from(0u32) {
                    return Ok((n, Some(format!("nonzero beyond 3^j at X = {x}"))));
                }
            }
            let words = count_words(&t)?;
            let b = bound_words(&t)?;
            if BigUint::from(2u32) * &words > t.x().pow(3) || words > b.chain {
                return Ok((n, Some(format!("words at X = {x}"))));
            }
        }
        Ok((n, None))
    });
    c.rows
}

fn classes_suite(limits: &Limits) -> Vec<CheckRow> {
    let mut c = Checks::new("classes");
    let prec = Precision::from_env().unwrap_or_default();
    let pairs = limits.pairs.clamp(1, ENUMERATION_LIMIT);
    c.run("orbits partition the family", || {
        let mut n = 0;
        for j in 1..=pairs {
            let family = enumerate_family(j)?;
            let mut covered = BTreeSet::new();
            let mut orbits = 0u64;
            for w in &family {
                n += 1;
                if covered.contains(w) {
                    continue;
                }
                let orbit = orbit_of(w);
                if !(2 * j as usize).is_multiple_of(orbit.len()) {
                    return Ok((n, Some(format!("orbit of {w} has size {}", orbit.len()))));
                }
                orbits += 1;
                covered.extend(orbit);
            }
            if covered.len() != family.len() || class_count(j)? != BigUint::from(orbits) {
                return Ok((n, Some(format!("j = {j}"))));
            }
        }
        Ok((n, None))
    });
    c.run("class count against oracles", || {
        let mut fail = None;
        for j in 1..=pairs {
            let count = class_count(j)?;
            let enumerated = j > 10 || count == BigUint::from(enumerated_class_count(j));
            let floor_ok = count >= class_count_floor(j) && count <= BigUint::from(1u32) << (2 * j);
            if count != burnside_class_count(j) || !enumerated || !floor_ok {
                fail = Some(format!("j = {j}"));
                break;
            }
        }
        Ok((pairs as u64, fail))
    });
    c.run("rotations are conjugations", || {
        let family: Vec<_> = (1..=pairs.min(3))
            .map(enumerate_family)
            .collect::<Result<Vec<_>>>()?;
        Ok(each(family.iter().flatten(), |w| {
            let x = embed_pure(&w.expand());
            let y = embed_pure(&w.rotate().expand());
            (conjugate(&w.rotation_witness(), &x) != y).then(|| format!("{w}"))
        }))
    });
    c.run("positive control conjugation", || {
        Ok((
            1,
            (!positive_control()).then(|| "control conjugation not found".to_string()),
        ))
    });
    c.run(
        format!("no forbidden conjugations, degree <= {}", limits.conj_len),
        || {
            let mut n = 0;
            for j in 2..=pairs.clamp(2, 8) {
                n += 1;
                if let Some(hit) = search_forbidden_conjugations(j, limits.conj_len)?.first() {
                    return Ok((
                        n,
                        Some(format!("{} -> {} by {}", hit.from, hit.to, hit.conjugator)),
                    ));
                }
            }
            Ok((n, None))
        },
    );
    c.run("lower-bound reports at the validity threshold", || {
        let mut fail = None;
        for (y, variant) in [
            ("600*log(8)", Variant::Lambda),
            ("600*pi*log(8)", Variant::Entropy),
        ] {
            let r = lower_bound_report(&ClosedForm::parse(y)?, variant, prec)?;
            if !r.satisfied || r.index != 2 {
                fail = Some(format!("{variant} at Y = {y}"));
            }
        }
        Ok((2, fail))
    });
    c.rows
}

pub fn run(suite: Suite, limits: &Limits) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    if matches!(suite, Suite::All | Suite::Words) {
        rows.extend(words_suite(limits));
    }
    if matches!(suite, Suite::All | Suite::Braid) {
        rows.extend(braid_suite(limits));
    }
    if matches!(suite, Suite::All | Suite::Counting) {
        rows.extend(counting_suite(limits));
    }
    if matches!(suite, Suite::All | Suite::Classes) {
        rows.extend(classes_suite(limits));
    }
    rows
}
