//! Closed-form reals: polynomials with rational coefficients in `π^±1` and
//! logarithms of positive integers.
//!
//! Equality is decided symbolically. Before comparing, every `log n` is
//! rewritten over a pairwise-coprime base `{b_i}` so that `n = Π b_i^{e_i}`;
//! logarithms of pairwise-coprime integers are linearly independent over the
//! rationals, so two linear forms in logs agree iff their rewritten
//! coefficients agree. Everything else (signs, floors) is decided by interval
//! enclosures at increasing precision.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::Interval;
use super::Precision;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
struct Monomial {
    pi: i32,
    /// `(base, exponent)` sorted by base; bases >= 2, exponents >= 1.
    logs: Vec<(BigUint, u32)>,
}

impl Monomial {
    fn mul(&self, other: &Monomial) -> Monomial {
        let mut logs: BTreeMap<BigUint, u32> = BTreeMap::new();
        for (b, e) in self.logs.iter().chain(other.logs.iter()) {
            *logs.entry(b.clone()).or_insert(0) += e;
        }
        Monomial {
            pi: self.pi + other.pi,
            logs: logs.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosedForm {
    terms: BTreeMap<Monomial, BigRational>,
}

fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ClosedForm {
    pub fn zero() -> ClosedForm {
        ClosedForm::default()
    }

    pub fn rational(r: BigRational) -> ClosedForm {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Monomial::default(), r);
        }
        ClosedForm { terms }
    }

    pub fn integer(n: impl Into<BigInt>) -> ClosedForm {
        ClosedForm::rational(BigRational::from_integer(n.into()))
    }

    pub fn pi() -> ClosedForm {
        ClosedForm::pi_power(1)
    }

    pub fn pi_power(k: i32) -> ClosedForm {
        let mut terms = BTreeMap::new();
        terms.insert(
            Monomial {
                pi: k,
                logs: Vec::new(),
            },
            BigRational::one(),
        );
        ClosedForm { terms }
    }

    /// `log n`; zero for `n = 1`. Panics on `n = 0`.
    pub fn log_int(n: &BigUint) -> ClosedForm {
        assert!(!n.is_zero(), "logarithm of zero");
        if n.is_one() {
            return ClosedForm::zero();
        }
        let mut terms = BTreeMap::new();
        terms.insert(
            Monomial {
                pi: 0,
                logs: vec![(n.clone(), 1)],
            },
            BigRational::one(),
        );
        ClosedForm { terms }
    }

    pub fn log_u64(n: u64) -> ClosedForm {
        ClosedForm::log_int(&BigUint::from(n))
    }

    /// `log r` for a positive rational.
    pub fn log_rational(r: &BigRational) -> Result<ClosedForm> {
        if !r.is_positive() {
            return Err(Error::Precondition(format!(
                "logarithm of nonpositive value {r}"
            )));
        }
        let num = r.numer().to_biguint().expect("positive");
        let den = r.denom().to_biguint().expect("positive");
        Ok(ClosedForm::log_int(&num).sub(&ClosedForm::log_int(&den)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the form is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                (m.pi == 0 && m.logs.is_empty()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &ClosedForm) -> ClosedForm {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        ClosedForm { terms }
    }

    pub fn neg(&self) -> ClosedForm {
        ClosedForm {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ClosedForm) -> ClosedForm {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ClosedForm) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut single = BTreeMap::new();
                single.insert(m1.mul(m2), c1 * c2);
                out = out.add(&ClosedForm { terms: single });
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> ClosedForm {
        if r.is_zero() {
            return ClosedForm::zero();
        }
        ClosedForm {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> ClosedForm {
        self.scale(&ratio_int(n))
    }

    pub fn pow(&self, k: u32) -> ClosedForm {
        let mut acc = ClosedForm::integer(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division by a nonzero `c · π^k`. Other divisors are rejected.
    pub fn div(&self, divisor: &ClosedForm) -> Result<ClosedForm> {
        if divisor.terms.len() == 1 {
            let (m, c) = divisor.terms.iter().next().expect("one term");
            if m.logs.is_empty() {
                return Ok(self.mul(&ClosedForm::pi_power(-m.pi)).scale(&c.recip()));
            }
        }
        Err(Error::Precondition(format!(
            "division by '{divisor}' is not supported (only rational multiples of powers of pi)"
        )))
    }

    fn log_bases(&self) -> Vec<BigUint> {
        let mut v: Vec<BigUint> = self
            .terms
            .keys()
            .flat_map(|m| m.logs.iter().map(|(b, _)| b.clone()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Rewrites every logarithm over the given pairwise-coprime base.
    fn rewrite(&self, base: &[BigUint]) -> ClosedForm {
        let mut cache: HashMap<BigUint, ClosedForm> = HashMap::new();
        let mut out = ClosedForm::zero();
        for (m, c) in &self.terms {
            let mut acc = ClosedForm::rational(c.clone()).mul(&ClosedForm::pi_power(m.pi));
            for (b, e) in &m.logs {
                let lin = cache
                    .entry(b.clone())
                    .or_insert_with(|| {
                        factor_over(b, base)
                            .into_iter()
                            .fold(ClosedForm::zero(), |s, (p, k)| {
                                s.add(&ClosedForm::log_int(&p).scale_int(k as i64))
                            })
                    })
                    .clone();
                acc = acc.mul(&lin.pow(*e));
            }
            out = out.add(&acc);
        }
        out
    }

    /// Exact zero test.
    pub fn is_exactly_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let base = coprime_base(&self.log_bases());
        self.rewrite(&base).is_zero()
    }

    pub fn exactly_equals(&self, other: &ClosedForm) -> bool {
        self.sub(other).is_exactly_zero()
    }

    /// Interval enclosure at `scale` fractional bits.
    pub fn enclose(&self, scale: u32) -> Interval {
        let s = scale + 32;
        let mut pi_cache: Option<Interval> = None;
        let mut ln_cache: HashMap<BigUint, Interval> = HashMap::new();
        let mut total = Interval::zero(s);
        for (m, c) in &self.terms {
            let mut iv = Interval::from_ratio(c.numer(), c.denom(), s);
            if m.pi != 0 {
                let pi = pi_cache.get_or_insert_with(|| Interval::pi(s)).clone();
                let p = pi.powi(m.pi.unsigned_abs());
                let p = if m.pi < 0 {
                    p.recip().expect("pi is positive")
                } else {
                    p
                };
                iv = iv.mul(&p);
            }
            for (b, e) in &m.logs {
                let l = ln_cache
                    .entry(b.clone())
                    .or_insert_with(|| Interval::ln_int(b, s))
                    .clone();
                iv = iv.mul(&l.powi(*e));
            }
            total = total.add(&iv);
        }
        total.rescale(scale)
    }

    /// Parses an arithmetic expression over decimal literals, `pi`, and
    /// `log(·)` of positive rational subexpressions, with `+ - * / ^` and
    /// parentheses. Division is limited to rational multiples of powers of `pi`.
    pub fn parse(text: &str) -> Result<ClosedForm> {
        let mut p = ExprParser {
            chars: text.chars().collect(),
            pos: 0,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(Error::parse(
                p.pos + 1,
                format!("unexpected '{}'", p.chars[p.pos]),
            ));
        }
        Ok(v)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let constant = m.pi == 0 && m.logs.is_empty();
            if constant || !c.is_one() {
                factors.push(if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("({c})")
                });
            }
            match m.pi {
                0 => {}
                1 => factors.push("pi".into()),
                k => factors.push(format!("pi^{k}")),
            }
            for (b, e) in &m.logs {
                if *e == 1 {
                    factors.push(format!("log({b})"));
                } else {
                    factors.push(format!("log({b})^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Pairwise-coprime base such that every input is a product of base elements.
pub(crate) fn coprime_base(nums: &[BigUint]) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = Vec::new();
    let mut pending: Vec<BigUint> = nums.to_vec();
    while let Some(a) = pending.pop() {
        if a.is_one() || a.is_zero() {
            continue;
        }
        match base.iter().position(|b| !a.gcd(b).is_one()) {
            Some(i) => {
                let b = base.swap_remove(i);
                let g = a.gcd(&b);
                pending.push(&a / &g);
                pending.push(&b / &g);
                pending.push(g);
            }
            None => base.push(a),
        }
    }
    base.sort();
    base
}

fn factor_over(n: &BigUint, base: &[BigUint]) -> Vec<(BigUint, u32)> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    for b in base {
        let mut e = 0u32;
        while (&rest % b).is_zero() {
            rest /= b;
            e += 1;
        }
        if e > 0 {
            out.push((b.clone(), e));
        }
    }
    debug_assert!(rest.is_one(), "base does not cover {n}");
    out
}

fn refinement_schedule(prec: Precision) -> impl Iterator<Item = u32> {
    let start = prec.bits().max(32);
    let cap = start.saturating_mul(64).max(1 << 14);
    std::iter::successors(Some(start), move |&b| {
        (b < cap).then(|| b.saturating_mul(2))
    })
}

/// Certified sign of `x`.
pub fn sign(x: &ClosedForm, prec: Precision) -> Result<Ordering> {
    if x.is_exactly_zero() {
        return Ok(Ordering::Equal);
    }
    for bits in refinement_schedule(prec) {
        if let Some(s) = x.enclose(bits).sign() {
            if s != Ordering::Equal {
                return Ok(s);
            }
        }
    }
    Err(Error::Undecidable(format!("the sign of {x}")))
}

pub fn compare(a: &ClosedForm, b: &ClosedForm, prec: Precision) -> Result<Ordering> {
    sign(&a.sub(b), prec)
}

fn floor_rational(r: &BigRational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// `⌊x⌋`.
pub fn floor(x: &ClosedForm, prec: Precision) -> Result<BigInt> {
    if let Some(r) = x.as_rational() {
        return Ok(floor_rational(&r));
    }
    for bits in refinement_schedule(prec) {
        let iv = x.enclose(bits);
        if let Some(f) = iv.floor() {
            return Ok(f);
        }
        let n = iv.floor_upper();
        if x.sub(&ClosedForm::integer(n.clone())).is_exactly_zero() {
            return Ok(n);
        }
    }
    Err(Error::Undecidable(format!("the floor of {x}")))
}

/// `⌊a / b⌋` for `b > 0`.
pub fn floor_ratio(a: &ClosedForm, b: &ClosedForm, prec: Precision) -> Result<BigInt> {
    if sign(b, prec)? != Ordering::Greater {
        return Err(Error::Precondition(format!("divisor {b} is not positive")));
    }
    if let (Some(p), Some(q)) = (a.as_rational(), b.as_rational()) {
        return Ok(floor_rational(&(p / q)));
    }
    for bits in refinement_schedule(prec) {
        let iv = a
            .enclose(bits)
            .div(&b.enclose(bits))
            .expect("divisor enclosure excludes zero once its sign is certified");
        if let Some(f) = iv.floor() {
            return Ok(f);
        }
        let n = iv.floor_upper();
        if a.sub(&b.scale(&BigRational::from_integer(n.clone())))
            .is_exactly_zero()
        {
            return Ok(n);
        }
    }
    Err(Error::Undecidable(format!("the floor of ({a}) / ({b})")))
}

/// `⌊e^y⌋`.
pub fn floor_exp(y: &ClosedForm, prec: Precision) -> Result<BigInt> {
    if y.is_zero() {
        return Ok(BigInt::one());
    }
    for bits in refinement_schedule(prec) {
        let iv = y.enclose(bits).exp();
        if let Some(f) = iv.floor() {
            return Ok(f);
        }
        let n = iv.floor_upper();
        if n.is_positive() {
            let ln = ClosedForm::log_int(&n.to_biguint().expect("positive"));
            if y.sub(&ln).is_exactly_zero() {
                return Ok(n);
            }
        }
    }
    Err(Error::Undecidable(format!("the floor of exp({y})")))
}

/// Enclosure of `c · e^y` at `scale` bits.
pub fn enclose_scaled_exp(c: &BigRational, y: &ClosedForm, scale: u32) -> Interval {
    y.enclose(scale + 16)
        .exp()
        .mul_ratio(c.numer(), c.denom())
        .rescale(scale)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos + 1, msg))
    }

    fn expr(&mut self) -> Result<ClosedForm> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ClosedForm> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(Error::parse(at + 1, "division by zero"));
                }
                acc = acc
                    .div(&d)
                    .map_err(|e| Error::parse(at + 1, e.to_string()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ClosedForm> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let at = self.pos;
            let digits = self.digits();
            let k: u32 = digits
                .parse()
                .map_err(|_| Error::parse(at + 1, "expected an integer exponent"))?;
            if neg {
                let inv = ClosedForm::integer(1)
                    .div(&base.pow(k))
                    .map_err(|e| Error::parse(at + 1, e.to_string()))?;
                return Ok(inv);
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_alphabetic() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<ClosedForm> {
        match self.peek() {
            None => self.err("unexpected end of expression"),
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_alphabetic() => {
                let at = self.pos;
                let name = self.ident();
                match name.as_str() {
                    "pi" | "π" => Ok(ClosedForm::pi()),
                    "log" | "ln" => {
                        if !self.eat('(') {
                            return self.err("expected '(' after log");
                        }
                        let arg_at = self.pos;
                        let arg = self.expr()?;
                        if !self.eat(')') {
                            return self.err("expected ')'");
                        }
                        let r = arg.as_rational().ok_or_else(|| {
                            Error::parse(arg_at + 1, "log argument must be a rational constant")
                        })?;
                        ClosedForm::log_rational(&r)
                            .map_err(|e| Error::parse(arg_at + 1, e.to_string()))
                    }
                    _ => Err(Error::parse(at + 1, format!("unknown name '{name}'"))),
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
        }
    }

    fn number(&mut self) -> Result<ClosedForm> {
        let at = self.pos;
        let int_part = self.digits();
        let mut frac = String::new();
        if self.pos < self.chars.len() && self.chars[self.pos] == '.' {
            self.pos += 1;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                frac.push(self.chars[self.pos]);
                self.pos += 1;
            }
        }
        if int_part.is_empty() && frac.is_empty() {
            return Err(Error::parse(at + 1, "malformed number"));
        }
        let mantissa: BigInt = format!("{int_part}{frac}")
            .parse()
            .map_err(|_| Error::parse(at + 1, "malformed number"))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        Ok(ClosedForm::rational(BigRational::new(mantissa, den)))
    }
}

/// Approximate value, for diagnostics.
pub fn approx(x: &ClosedForm) -> f64 {
    x.enclose(64).approx()
}

impl ClosedForm {
    /// Integer exponent helper used by callers that build `c · log(n)^k`.
    pub fn log_power(n: u64, k: u32) -> ClosedForm {
        ClosedForm::log_u64(n).pow(k)
    }

    /// `Some(k)` when the form is a rational constant fitting in `i64` after flooring.
    pub fn floor_i64(&self) -> Option<i64> {
        self.as_rational().and_then(|r| floor_rational(&r).to_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn log_identities_are_exact() {
        let a = ClosedForm::log_u64(8);
        let b = ClosedForm::log_u64(2).scale_int(3);
        assert!(a.exactly_equals(&b));
        let c = ClosedForm::log_u64(6);
        let d = ClosedForm::log_u64(2).add(&ClosedForm::log_u64(3));
        assert!(c.exactly_equals(&d));
        assert!(!ClosedForm::log_u64(4).exactly_equals(&ClosedForm::log_u64(3)));
        // log(12)·log(18) = (2L2+L3)(L2+2L3)
        let lhs = ClosedForm::log_u64(12).mul(&ClosedForm::log_u64(18));
        let l2 = ClosedForm::log_u64(2);
        let l3 = ClosedForm::log_u64(3);
        let rhs = l2.scale_int(2).add(&l3).mul(&l2.add(&l3.scale_int(2)));
        assert!(lhs.exactly_equals(&rhs));
    }

    #[test]
    fn coprime_base_splits_shared_factors() {
        let base = coprime_base(&[BigUint::from(12u32), BigUint::from(18u32)]);
        assert_eq!(base, vec![BigUint::from(2u32), BigUint::from(3u32)]);
        let base = coprime_base(&[BigUint::from(64u32), BigUint::from(8u32)]);
        assert_eq!(base, vec![BigUint::from(8u32)]);
    }

    #[test]
    fn parse_and_floor_at_integer_boundaries() {
        let y = ClosedForm::parse("600*log(8)").unwrap();
        let unit = ClosedForm::parse("300*log(8)").unwrap();
        assert_eq!(floor_ratio(&y, &unit, p()).unwrap(), BigInt::from(2));
        let y = ClosedForm::parse("600*pi*log(8)").unwrap();
        let unit = ClosedForm::parse("300 * pi * log(8)").unwrap();
        assert_eq!(floor_ratio(&y, &unit, p()).unwrap(), BigInt::from(2));
        assert_eq!(
            floor_exp(&ClosedForm::parse("log(3)").unwrap(), p()).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            floor_exp(&ClosedForm::parse("2").unwrap(), p()).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            floor_exp(&ClosedForm::parse("0").unwrap(), p()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            floor_exp(&ClosedForm::parse("log(10)/2*2").unwrap(), p()).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            floor(&ClosedForm::parse("pi").unwrap(), p()).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn parse_numbers_and_errors() {
        let x = ClosedForm::parse("2.5 + 1/4").unwrap();
        assert_eq!(
            x.as_rational().unwrap(),
            BigRational::new(11.into(), 4.into())
        );
        assert!(ClosedForm::parse("log(-1)").is_err());
        assert!(ClosedForm::parse("1/log(2)").is_err());
        assert!(ClosedForm::parse("log(pi)").is_err());
        match ClosedForm::parse("2 + foo") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(ClosedForm::parse("(1").is_err());
        assert!(ClosedForm::parse("1 2").is_err());
    }

    #[test]
    fn signs_and_comparisons() {
        let a = ClosedForm::parse("log(3)").unwrap();
        let b = ClosedForm::parse("log(2)*3/2").unwrap();
        assert_eq!(compare(&a, &b, p()).unwrap(), Ordering::Greater); // 1.0986 > 1.0397
        let c = ClosedForm::parse("pi^2").unwrap();
        assert_eq!(
            compare(&c, &ClosedForm::integer(10), p()).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            sign(&ClosedForm::parse("log(4) - 2*log(2)").unwrap(), p()).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn display_round_trips_through_parse() {
        let x = ClosedForm::parse("1800*log(2) + pi/3 - 7/2").unwrap();
        let y = ClosedForm::parse(&x.to_string()).unwrap();
        assert!(x.exactly_equals(&y));
    }
}
