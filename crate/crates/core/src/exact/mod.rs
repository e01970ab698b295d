//! Exact and certified real arithmetic for bound evaluation.

pub mod closed;
pub mod decimal;
pub mod interval;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use closed::ClosedForm;
pub use decimal::{format_ratio, Rounding, SIGNIFICANT_DIGITS};
pub use interval::Interval;

use crate::error::{Error, Result};

/// Environment variable overriding the working precision in bits.
pub const PRECISION_ENV: &str = "BRAIDCOUNT_PRECISION";

/// Starting working precision for certified numerics, in bits. Decisions
/// that are not settled at this precision are retried at doubled precision
/// up to a fixed cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT_BITS: u32 = 128;

    pub fn new(bits: u32) -> Precision {
        Precision(bits.clamp(16, 1 << 16))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Reads `BRAIDCOUNT_PRECISION`, falling back to the default when unset.
    pub fn from_env() -> Result<Precision> {
        match std::env::var(PRECISION_ENV) {
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .ok()
                .filter(|b| (16..=1 << 16).contains(b))
                .map(Precision)
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "{PRECISION_ENV} must be an integer number of bits in 16..=65536, got '{v}'"
                    ))
                }),
            Err(_) => Ok(Precision::default()),
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_BITS)
    }
}

/// A real number in one of the shapes produced by the analytic bounds.
#[derive(Debug, Clone, PartialEq)]
pub enum RealValue {
    Rational(BigRational),
    /// A polynomial in `π^±1` and logarithms.
    Closed(ClosedForm),
    /// `factor · e^exponent` with `factor > 0`.
    ScaledExp {
        factor: BigRational,
        exponent: ClosedForm,
    },
    /// `base^(num/den)` with `base >= 0`.
    RationalPower {
        base: BigRational,
        num: u32,
        den: u32,
    },
}

impl RealValue {
    pub fn integer(n: impl Into<BigInt>) -> RealValue {
        RealValue::Rational(BigRational::from_integer(n.into()))
    }

    /// Interval enclosure at `bits` fractional bits.
    pub fn enclose(&self, bits: u32) -> Interval {
        match self {
            RealValue::Rational(r) => Interval::from_ratio(r.numer(), r.denom(), bits),
            RealValue::Closed(c) => c.enclose(bits),
            RealValue::ScaledExp { factor, exponent } => {
                closed::enclose_scaled_exp(factor, exponent, bits)
            }
            RealValue::RationalPower { base, num, den } => {
                if base.is_zero() {
                    return Interval::zero(bits);
                }
                let s = bits + 32;
                let n = base.numer().to_biguint().expect("nonnegative base");
                let d = base.denom().to_biguint().expect("positive denominator");
                Interval::ln_ratio(&n, &d, s)
                    .mul_ratio(&BigInt::from(*num), &BigInt::from(*den))
                    .exp()
                    .rescale(bits)
            }
        }
    }

    /// Certified comparison `self` vs the integer `n`.
    pub fn cmp_integer(&self, n: &BigInt, prec: Precision) -> Result<Ordering> {
        let nr = BigRational::from_integer(n.clone());
        match self {
            RealValue::Rational(r) => Ok(r.cmp(&nr)),
            RealValue::Closed(c) => closed::compare(c, &ClosedForm::rational(nr), prec),
            RealValue::ScaledExp { factor, exponent } => {
                if !n.is_positive() {
                    return Ok(Ordering::Greater);
                }
                // factor·e^y vs n  <=>  y vs log(n / factor)
                let target = ClosedForm::log_rational(&(nr / factor))?;
                closed::compare(exponent, &target, prec)
            }
            RealValue::RationalPower { base, num, den } => {
                if n.is_negative() {
                    return Ok(Ordering::Greater);
                }
                // base^(p/q) vs n  <=>  base^p vs n^q
                let lhs = num_traits::pow(base.clone(), *num as usize);
                let rhs = num_traits::pow(nr, *den as usize);
                Ok(lhs.cmp(&rhs))
            }
        }
    }

    /// `true` iff `n <= self`, certified.
    pub fn bounds_integer(&self, n: &BigInt, prec: Precision) -> Result<bool> {
        Ok(self.cmp_integer(n, prec)? != Ordering::Less)
    }

    pub fn bounds_count(&self, n: &BigUint, prec: Precision) -> Result<bool> {
        self.bounds_integer(&BigInt::from(n.clone()), prec)
    }

    /// Decimal rendering rounded in `rounding` direction.
    pub fn to_decimal(&self, rounding: Rounding, prec: Precision) -> String {
        if let RealValue::Rational(r) = self {
            return format_ratio(r.numer(), r.denom(), rounding, SIGNIFICANT_DIGITS);
        }
        let iv = self.enclose(prec.bits().max(64));
        let candidate = iv.floor_upper();
        if self.cmp_integer(&candidate, prec).ok() == Some(Ordering::Equal) {
            return format_ratio(&candidate, &BigInt::one(), rounding, SIGNIFICANT_DIGITS);
        }
        let (m, s) = match rounding {
            Rounding::Up => iv.upper(),
            Rounding::Down => iv.lower(),
        };
        format_ratio(m, &(BigInt::one() << s), rounding, SIGNIFICANT_DIGITS)
    }

    pub fn upper_decimal(&self, prec: Precision) -> String {
        self.to_decimal(Rounding::Up, prec)
    }

    pub fn lower_decimal(&self, prec: Precision) -> String {
        self.to_decimal(Rounding::Down, prec)
    }

    pub fn approx(&self) -> f64 {
        self.enclose(64).approx()
    }
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealValue::Rational(r) => write!(f, "{r}"),
            RealValue::Closed(c) => write!(f, "{c}"),
            RealValue::ScaledExp { factor, exponent } => write!(f, "{factor}*exp({exponent})"),
            RealValue::RationalPower { base, num, den } => write!(f, "({base})^({num}/{den})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_power_compares_exactly() {
        // 3^(5/3) = 6.24...
        let v = RealValue::RationalPower {
            base: ratio(3, 1),
            num: 5,
            den: 3,
        };
        let p = Precision::default();
        assert_eq!(v.cmp_integer(&6.into(), p).unwrap(), Ordering::Greater);
        assert_eq!(v.cmp_integer(&7.into(), p).unwrap(), Ordering::Less);
        assert_eq!(v.upper_decimal(p), "6.24025146916");
        let one = RealValue::RationalPower {
            base: ratio(1, 1),
            num: 5,
            den: 3,
        };
        assert_eq!(one.cmp_integer(&1.into(), p).unwrap(), Ordering::Equal);
    }

    #[test]
    fn scaled_exp_hits_integers_exactly() {
        // ½·e^(log 4) = 2
        let v = RealValue::ScaledExp {
            factor: ratio(1, 2),
            exponent: ClosedForm::log_u64(4),
        };
        let p = Precision::default();
        assert_eq!(v.cmp_integer(&2.into(), p).unwrap(), Ordering::Equal);
        assert_eq!(v.upper_decimal(p), "2.0");
        assert_eq!(v.lower_decimal(p), "2.0");
    }

    #[test]
    fn precision_parsing() {
        assert_eq!(Precision::default().bits(), 128);
        assert_eq!(Precision::new(1).bits(), 16);
    }
}
