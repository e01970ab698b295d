//! Rigorous interval enclosures with fixed-point big-integer endpoints.
//!
//! An [`Interval`] at scale `s` is the closed set `[lo, hi] · 2^-s`. Every
//! operation rounds its lower endpoint down and its upper endpoint up, so a
//! computed interval always contains the exact real result.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn floor_shr(a: &BigInt, k: u32) -> BigInt {
    // BigInt >> rounds toward -inf
    a >> k
}

fn ceil_shr(a: &BigInt, k: u32) -> BigInt {
    -((-a) >> k)
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    scale: u32,
}

impl Interval {
    pub fn exact_int(n: &BigInt, scale: u32) -> Interval {
        let v = n << scale;
        Interval {
            lo: v.clone(),
            hi: v,
            scale,
        }
    }

    pub fn from_u64(n: u64, scale: u32) -> Interval {
        Interval::exact_int(&BigInt::from(n), scale)
    }

    pub fn zero(scale: u32) -> Interval {
        Interval::exact_int(&BigInt::zero(), scale)
    }

    /// Encloses `num / den`, `den != 0`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, scale: u32) -> Interval {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let n = num << scale;
        Interval {
            lo: floor_div(&n, &den),
            hi: ceil_div(&n, &den),
            scale,
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Lower endpoint as `(numerator, log2 denominator)`.
    pub fn lower(&self) -> (&BigInt, u32) {
        (&self.lo, self.scale)
    }

    pub fn upper(&self) -> (&BigInt, u32) {
        (&self.hi, self.scale)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Changes the scale, widening outward when precision is dropped.
    pub fn rescale(&self, scale: u32) -> Interval {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let k = scale - self.scale;
                Interval {
                    lo: &self.lo << k,
                    hi: &self.hi << k,
                    scale,
                }
            }
            Ordering::Less => {
                let k = self.scale - scale;
                Interval {
                    lo: floor_shr(&self.lo, k),
                    hi: ceil_shr(&self.hi, k),
                    scale,
                }
            }
        }
    }

    fn aligned(&self, other: &Interval) -> (Interval, Interval) {
        let s = self.scale.max(other.scale);
        (self.rescale(s), other.rescale(s))
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        Interval {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            scale: a.scale,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        let s = a.scale;
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let min = products.iter().min().expect("nonempty");
        let max = products.iter().max().expect("nonempty");
        Interval {
            lo: floor_shr(min, s),
            hi: ceil_shr(max, s),
            scale: s,
        }
    }

    /// Multiplies by the exact rational `num / den`.
    pub fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> Interval {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let a = &self.lo * &num;
        let b = &self.hi * &num;
        let (mn, mx) = if a <= b { (a, b) } else { (b, a) };
        Interval {
            lo: floor_div(&mn, &den),
            hi: ceil_div(&mx, &den),
            scale: self.scale,
        }
    }

    /// Reciprocal; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        let one = pow2(2 * self.scale);
        Some(Interval {
            lo: floor_div(&one, &self.hi),
            hi: ceil_div(&one, &self.lo),
            scale: self.scale,
        })
    }

    pub fn div(&self, other: &Interval) -> Option<Interval> {
        let (a, b) = self.aligned(other);
        Some(a.mul(&b.recip()?))
    }

    pub fn powi(&self, k: u32) -> Interval {
        let mut acc = Interval::exact_int(&BigInt::one(), self.scale);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        if k.is_multiple_of(2) && self.contains_zero() {
            // even powers are nonnegative
            acc.lo = acc.lo.max(BigInt::zero());
        }
        acc
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign, or `None` when zero lies strictly inside a nonpoint interval.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// The common floor of every point in the interval, if there is one.
    pub fn floor(&self) -> Option<BigInt> {
        let a = floor_shr(&self.lo, self.scale);
        let b = floor_shr(&self.hi, self.scale);
        (a == b).then_some(a)
    }

    /// Floor of the upper endpoint.
    pub fn floor_upper(&self) -> BigInt {
        floor_shr(&self.hi, self.scale)
    }

    /// Midpoint as an `f64`, for diagnostics only.
    pub fn approx(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1;
        let shift = mid.bits().saturating_sub(60);
        let top = (&mid >> shift)
            .to_string()
            .parse::<f64>()
            .unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.scale as i32)
    }

    /// Width in units of `2^-scale`.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn pi(scale: u32) -> Interval {
        let guard = 16;
        let s = scale + guard;
        let a = arctan_recip(5, s);
        let b = arctan_recip(239, s);
        let lo = a.lo * 16 - b.hi * 4;
        let hi = a.hi * 16 - b.lo * 4;
        Interval { lo, hi, scale: s }.rescale(scale)
    }

    pub fn ln2(scale: u32) -> Interval {
        let s = scale + 8;
        let third = Interval::from_ratio(&BigInt::one(), &BigInt::from(3), s);
        let t = atanh(&third);
        Interval {
            lo: t.lo * 2,
            hi: t.hi * 2,
            scale: s,
        }
        .rescale(scale)
    }

    /// `ln n` for an integer `n >= 1`.
    pub fn ln_int(n: &BigUint, scale: u32) -> Interval {
        assert!(!n.is_zero(), "logarithm of zero");
        if n.is_one() {
            return Interval::zero(scale);
        }
        let k = n.bits() - 1;
        let s = scale + 16 + 64 - (k.max(1)).leading_zeros();
        let p = BigInt::from_biguint(Sign::Plus, n.clone());
        let two_k = BigInt::one() << k;
        // n = 2^k · r with r in [1, 2); ln r = 2 atanh((n - 2^k) / (n + 2^k))
        let z = Interval::from_ratio(&(&p - &two_k), &(&p + &two_k), s);
        let t = atanh(&z);
        let l2 = Interval::ln2(s);
        let kk = BigInt::from(k);
        Interval {
            lo: &l2.lo * &kk + t.lo * 2,
            hi: &l2.hi * &kk + t.hi * 2,
            scale: s,
        }
        .rescale(scale)
    }

    /// `ln(num / den)` for positive integers.
    pub fn ln_ratio(num: &BigUint, den: &BigUint, scale: u32) -> Interval {
        Interval::ln_int(num, scale).sub(&Interval::ln_int(den, scale))
    }

    /// `exp` of every point of the interval, using monotonicity.
    pub fn exp(&self) -> Interval {
        let lo = exp_dyadic(&self.lo, self.scale).lo;
        let hi = exp_dyadic(&self.hi, self.scale).hi;
        Interval {
            lo,
            hi,
            scale: self.scale,
        }
    }
}

/// `arctan(1/m)` by its alternating series.
fn arctan_recip(m: u64, s: u32) -> Interval {
    let one = pow2(s);
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = m.clone();
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut i = 0u64;
    loop {
        let t = &one / (&power * BigInt::from(2 * i + 1));
        if t.is_zero() {
            break;
        }
        if i.is_multiple_of(2) {
            sum += &t;
        } else {
            sum -= &t;
        }
        terms += 1;
        power *= &m2;
        i += 1;
    }
    // each truncated term errs by < 1 ulp, the omitted tail by < 1 ulp
    let err = BigInt::from(terms + 1);
    Interval {
        lo: &sum - &err,
        hi: &sum + &err,
        scale: s,
    }
}

/// `atanh(z)` for `0 <= z <= 1/3` (up to rounding) by its power series.
fn atanh(z: &Interval) -> Interval {
    let s = z.scale;
    assert!(!z.lo.is_negative(), "atanh argument must be nonnegative");
    assert!(
        z.hi.clone() * 3 <= pow2(s) + 3,
        "atanh argument must be at most 1/3"
    );
    let sq_lo = &z.lo * &z.lo;
    let sq_hi = &z.hi * &z.hi;
    let mut p_lo = z.lo.clone();
    let mut p_hi = z.hi.clone();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut i = 0u64;
    let one = BigInt::one();
    while p_hi > one {
        let d = BigInt::from(2 * i + 1);
        lo += floor_div(&p_lo, &d);
        hi += ceil_div(&p_hi, &d);
        p_lo = floor_shr(&(&p_lo * &sq_lo), 2 * s);
        p_hi = ceil_shr(&(&p_hi * &sq_hi), 2 * s);
        i += 1;
    }
    // remaining terms sum to at most (9/8) · 2^-s
    hi += 2;
    Interval { lo, hi, scale: s }
}

/// Encloses `exp(m · 2^-s)`.
fn exp_dyadic(m: &BigInt, s: u32) -> Interval {
    if m.is_negative() {
        let e = exp_dyadic(&-m, s);
        return e.recip().expect("exp is positive");
    }
    if m.is_zero() {
        return Interval::exact_int(&BigInt::one(), s);
    }
    // argument halving: y = m · 2^-(s + r) <= 1/2
    let bits = m.bits() as u32;
    let r = (bits + 1).saturating_sub(s);
    let magnitude = bits.saturating_sub(s) + 2;
    let w = s + r + magnitude + 32 + 2 * (64 - u64::from(s).leading_zeros());
    let denom_shift = s + r;
    let mut term = pow2(w);
    let mut sum = BigInt::zero();
    let mut n = 0u64;
    let mut i = 1u64;
    while !term.is_zero() {
        sum += &term;
        n += 1;
        term = floor_shr(&(&term * m), denom_shift) / BigInt::from(i);
        i += 1;
    }
    // every term is low by < 4 ulps and the tail is < 8 ulps
    let mut lo = sum.clone();
    let mut hi = sum + BigInt::from(4 * n + 8);
    for _ in 0..r {
        lo = floor_shr(&(&lo * &lo), w);
        hi = ceil_shr(&(&hi * &hi), w);
    }
    Interval { lo, hi, scale: w }.rescale(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(iv: &Interval, x: f64) -> bool {
        let lo = Interval {
            lo: iv.lo.clone(),
            hi: iv.lo.clone(),
            scale: iv.scale,
        }
        .approx();
        let hi = Interval {
            lo: iv.hi.clone(),
            hi: iv.hi.clone(),
            scale: iv.scale,
        }
        .approx();
        lo <= x * (1.0 + 1e-15) && x * (1.0 - 1e-15) <= hi
    }

    #[test]
    fn pi_digits() {
        let p = Interval::pi(200);
        // 3.14159265358979323846264338327950288419716939937510...
        let ten40 = BigInt::from(10u32).pow(40);
        let scaled = p.mul_ratio(&ten40, &BigInt::one());
        let digits = scaled.floor().expect("tight enough");
        assert_eq!(
            digits.to_string(),
            "31415926535897932384626433832795028841971"
        );
        assert!(p.width() < BigInt::from(100));
    }

    #[test]
    fn ln_values() {
        let l3 = Interval::ln_int(&BigUint::from(3u32), 128);
        assert!(contains(&l3, 3f64.ln()));
        let ten30 = BigInt::from(10u32).pow(30);
        // ln 2 = 0.693147180559945309417232121458176568...
        let l2 = Interval::ln2(160).mul_ratio(&ten30, &BigInt::one());
        assert_eq!(
            l2.floor().unwrap().to_string(),
            "693147180559945309417232121458"
        );
        let big = BigUint::from(10u32).pow(100);
        let lb = Interval::ln_int(&big, 128);
        assert!(contains(&lb, 100.0 * 10f64.ln()));
        assert_eq!(Interval::ln_int(&BigUint::one(), 64), Interval::zero(64));
    }

    #[test]
    fn exp_values() {
        let two = Interval::from_u64(2, 128);
        let e2 = two.exp();
        assert_eq!(e2.floor().unwrap(), BigInt::from(7));
        assert!(contains(&e2, 2f64.exp()));
        let minus = Interval::from_u64(3, 128).neg().exp();
        assert!(contains(&minus, (-3f64).exp()));
        let e0 = Interval::zero(64).exp();
        assert!(e0.is_point());
        // exp(ln 10^20) encloses 10^20
        let big = Interval::ln_int(&BigUint::from(10u32).pow(20), 160).exp();
        let target = BigInt::from(10u32).pow(20) << 160u32;
        assert!(big.lo <= target && target <= big.hi);
    }

    #[test]
    fn directed_rounding_of_ratio() {
        let third = Interval::from_ratio(&BigInt::one(), &BigInt::from(3), 10);
        assert_eq!(third.hi.clone() - third.lo.clone(), BigInt::one());
        let neg = Interval::from_ratio(&BigInt::from(-1), &BigInt::from(3), 10);
        assert_eq!(neg, third.neg());
    }

    #[test]
    fn reciprocal_and_sign() {
        let z = Interval::from_ratio(&BigInt::from(-1), &BigInt::from(1), 8)
            .add(&Interval::from_u64(1, 8));
        assert_eq!(z.sign(), Some(Ordering::Equal));
        assert!(z.recip().is_none());
        let x = Interval::from_u64(4, 16).recip().unwrap();
        assert!(x.is_point());
        assert_eq!(x.sign(), Some(Ordering::Greater));
    }
}
