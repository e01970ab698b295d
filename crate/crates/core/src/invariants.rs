//! Syllable-length bounds for the extremal length with totally real boundary
//! values and for the entropy of conjugacy classes.
//!
//! For a reduced word with syllable degrees `d_k`, the lower and upper
//! log-lengths are `log Π 3d_k` and `log Π 4d_k`. They are kept as the exact
//! integer products; reals appear only when endpoints are rendered.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::braid::{normal_form_of_braid, theta, BraidWord, NormalForm};
use crate::error::{Error, Result};
use crate::exact::{ClosedForm, Precision, RealValue};
use crate::words::{is_cyclically_syllable_reduced, FreeWord};

/// The real number `log P` for an integer `P >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LogInteger {
    argument: BigUint,
}

impl LogInteger {
    /// Panics if `argument` is zero.
    pub fn new(argument: BigUint) -> LogInteger {
        assert!(
            argument >= BigUint::one(),
            "log argument must be at least 1"
        );
        LogInteger { argument }
    }

    pub fn zero() -> LogInteger {
        LogInteger::new(BigUint::one())
    }

    pub fn argument(&self) -> &BigUint {
        &self.argument
    }

    pub fn is_zero(&self) -> bool {
        self.argument.is_one()
    }

    /// `log P + log Q = log PQ`.
    pub fn add(&self, other: &LogInteger) -> LogInteger {
        LogInteger::new(&self.argument * &other.argument)
    }

    pub fn to_closed(&self) -> ClosedForm {
        ClosedForm::log_int(&self.argument)
    }
}

impl fmt::Display for LogInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "log({})", self.argument)
    }
}

fn product_of_degrees(w: &FreeWord, factor: u64) -> LogInteger {
    let p = w
        .syllables()
        .degrees()
        .into_iter()
        .fold(BigUint::one(), |acc, d| {
            acc * BigUint::from(factor) * BigUint::from(d)
        });
    LogInteger::new(p)
}

/// `log Π 3d_k`.
pub fn l_minus(w: &FreeWord) -> LogInteger {
    product_of_degrees(w, 3)
}

/// `log Π 4d_k`.
pub fn l_plus(w: &FreeWord) -> LogInteger {
    product_of_degrees(w, 4)
}

/// A constant `c · π^k` multiplying a log endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScale {
    pub coefficient: BigRational,
    pub pi_power: i32,
}

impl PiScale {
    pub fn new(num: i64, den: i64, pi_power: i32) -> PiScale {
        PiScale {
            coefficient: BigRational::new(num.into(), den.into()),
            pi_power,
        }
    }

    pub fn to_closed(&self) -> ClosedForm {
        ClosedForm::pi_power(self.pi_power).scale(&self.coefficient)
    }
}

impl fmt::Display for PiScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_closed())
    }
}

/// `[lower_scale · log P₋, upper_scale · log P₊]`, or exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInterval {
    pub exact_zero: bool,
    pub lower_log_arg: LogInteger,
    pub upper_log_arg: LogInteger,
    pub lower_scale: PiScale,
    pub upper_scale: PiScale,
}

/// For conjugacy classes the entropy equals `π/2` times the extremal length.
pub const ENTROPY_PER_EXTREMAL_LENGTH: &str = "pi/2";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSummary {
    pub exact_zero: bool,
    pub lower_log_arg: String,
    pub upper_log_arg: String,
    pub lower_value: String,
    pub upper_value: String,
}

impl BoundInterval {
    fn zero(lower_scale: PiScale, upper_scale: PiScale) -> BoundInterval {
        BoundInterval {
            exact_zero: true,
            lower_log_arg: LogInteger::zero(),
            upper_log_arg: LogInteger::zero(),
            lower_scale,
            upper_scale,
        }
    }

    pub fn lower(&self) -> ClosedForm {
        self.lower_scale
            .to_closed()
            .mul(&self.lower_log_arg.to_closed())
    }

    pub fn upper(&self) -> ClosedForm {
        self.upper_scale
            .to_closed()
            .mul(&self.upper_log_arg.to_closed())
    }

    /// Endpoints rendered outward: the lower one rounded down, the upper one up.
    pub fn summary(&self, prec: Precision) -> BoundSummary {
        BoundSummary {
            exact_zero: self.exact_zero,
            lower_log_arg: self.lower_log_arg.argument.to_string(),
            upper_log_arg: self.upper_log_arg.argument.to_string(),
            lower_value: RealValue::Closed(self.lower()).lower_decimal(prec),
            upper_value: RealValue::Closed(self.upper()).upper_decimal(prec),
        }
    }
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact_zero {
            return write!(f, "0");
        }
        write!(
            f,
            "[({}) * {}, ({}) * {}]",
            self.lower_scale, self.lower_log_arg, self.upper_scale, self.upper_log_arg
        )
    }
}

fn lambda_scales() -> (PiScale, PiScale) {
    (PiScale::new(1, 2, -1), PiScale::new(300, 1, 0))
}

/// `[log P₋ / (2π), 300 log P₊]`; exactly zero for the identity and for
/// powers of a single generator.
pub fn lambda_tr_bounds_word(w: &FreeWord) -> BoundInterval {
    let (lo, hi) = lambda_scales();
    if w.is_identity() || w.is_generator_power() {
        return BoundInterval::zero(lo, hi);
    }
    BoundInterval {
        exact_zero: false,
        lower_log_arg: l_minus(w),
        upper_log_arg: l_plus(w),
        lower_scale: lo,
        upper_scale: hi,
    }
}

/// Bounds for a braid through its image under theta; zero for `s_j^k Δ^ell`.
pub fn lambda_tr_bounds_braid(b: &BraidWord) -> BoundInterval {
    match normal_form_of_braid(b) {
        NormalForm::General { ref b1, .. } if !b1.is_identity() => {
            let f = normal_form_of_braid(b);
            lambda_tr_bounds_word(&theta(&f).expect("general form"))
        }
        _ => {
            let (lo, hi) = lambda_scales();
            BoundInterval::zero(lo, hi)
        }
    }
}

/// `[log P₋ / 4, 150π log P₊]` for the conjugacy class of a cyclically
/// syllable reduced word with at least two syllables.
pub fn entropy_bounds(w: &FreeWord) -> Result<BoundInterval> {
    if !w.is_cyclically_reduced() {
        return Err(Error::Precondition(format!(
            "'{w}' is not cyclically reduced"
        )));
    }
    if w.syllables().len() < 2 {
        return Err(Error::Precondition(format!(
            "'{w}' has fewer than two syllables"
        )));
    }
    if !is_cyclically_syllable_reduced(w)? {
        return Err(Error::Precondition(format!(
            "'{w}' is not cyclically syllable reduced"
        )));
    }
    Ok(BoundInterval {
        exact_zero: false,
        lower_log_arg: l_minus(w),
        upper_log_arg: l_plus(w),
        lower_scale: PiScale::new(1, 4, 0),
        upper_scale: PiScale::new(150, 1, 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    use crate::exact::closed::compare;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn arg(l: &LogInteger) -> u64 {
        l.argument().try_into().unwrap()
    }

    #[test]
    fn log_lengths() {
        assert_eq!(arg(&l_minus(&FreeWord::identity())), 1);
        assert_eq!(arg(&l_minus(&fw("a1"))), 3);
        assert_eq!(arg(&l_plus(&fw("a1"))), 4);
        assert_eq!(arg(&l_minus(&fw("a1^2 A2^2"))), 36);
        assert_eq!(arg(&l_plus(&fw("a1^2 A2^2"))), 64);
    }

    #[test]
    fn lambda_examples() {
        assert!(lambda_tr_bounds_word(&fw("a1^5")).exact_zero);
        assert!(lambda_tr_bounds_word(&FreeWord::identity()).exact_zero);
        let iv = lambda_tr_bounds_word(&fw("a1 a2"));
        assert!(!iv.exact_zero);
        // a1 a2 is one syllable of degree 2
        assert_eq!(arg(&iv.lower_log_arg), 6);
        assert_eq!(arg(&iv.upper_log_arg), 8);
        let expected = ClosedForm::parse("log(6)/(2*pi)").unwrap();
        assert!(iv.lower().exactly_equals(&expected));

        assert!(lambda_tr_bounds_braid(&"s1^7 D^3".parse().unwrap()).exact_zero);
        assert!(lambda_tr_bounds_braid(&"D".parse().unwrap()).exact_zero);
        let iv = lambda_tr_bounds_braid(&"s1^2 s2^2".parse().unwrap());
        assert_eq!(iv, lambda_tr_bounds_word(&fw("a1 a2")));
    }

    #[test]
    fn entropy_examples() {
        let iv = entropy_bounds(&fw("a1^2 A2^2")).unwrap();
        assert_eq!(arg(&iv.lower_log_arg), 36);
        assert_eq!(arg(&iv.upper_log_arg), 64);
        assert!(iv
            .upper()
            .exactly_equals(&ClosedForm::parse("150*pi*log(64)").unwrap()));
        assert!(entropy_bounds(&fw("a1^4")).is_err());
        assert!(entropy_bounds(&fw("a1 a2^2 a1 a2")).is_err());
        assert!(entropy_bounds(&fw("a1 a2 A1")).is_err());
    }

    #[test]
    fn summary_is_outward_rounded() {
        let s = lambda_tr_bounds_word(&fw("a1 a2")).summary(Precision::default());
        assert_eq!(s.lower_log_arg, "6");
        assert_eq!(s.upper_log_arg, "8");
        assert_eq!(s.lower_value, "0.285167376359");
        assert_eq!(s.upper_value, "623.832462504");
        let iv = lambda_tr_bounds_word(&fw("a1 a2"));
        assert_eq!(
            compare(&iv.lower(), &iv.upper(), Precision::default()).unwrap(),
            Ordering::Less
        );
    }
}
