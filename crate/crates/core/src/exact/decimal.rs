//! Directed decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Significant digits used for every rendered bound.
pub const SIGNIFICANT_DIGITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// `true` when `num / den >= 10^e` (`num, den > 0`).
fn at_least_pow10(num: &BigInt, den: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *num >= den * pow10(e as u32)
    } else {
        num * pow10((-e) as u32) >= *den
    }
}

/// Renders `num / den` with `digits` significant digits, rounded in the given
/// direction. Positional notation is used for decimal exponents in `-5..12`,
/// scientific notation otherwise. A fractional part is always present.
pub fn format_ratio(num: &BigInt, den: &BigInt, rounding: Rounding, digits: u32) -> String {
    assert!(!den.is_zero(), "zero denominator");
    assert!(digits >= 1);
    let (mut num, mut den) = (num.clone(), den.clone());
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if num.is_zero() {
        return "0.0".to_string();
    }
    if num.is_negative() {
        let flipped = match rounding {
            Rounding::Down => Rounding::Up,
            Rounding::Up => Rounding::Down,
        };
        return format!("-{}", format_ratio(&-num, &den, flipped, digits));
    }

    let mut e10 = num.to_string().len() as i64 - den.to_string().len() as i64;
    while !at_least_pow10(&num, &den, e10) {
        e10 -= 1;
    }
    while at_least_pow10(&num, &den, e10 + 1) {
        e10 += 1;
    }

    // mantissa = x · 10^(digits-1-e10), in [10^(digits-1), 10^digits)
    let shift = digits as i64 - 1 - e10;
    let (n, d) = if shift >= 0 {
        (num * pow10(shift as u32), den)
    } else {
        (num, den * pow10((-shift) as u32))
    };
    let (q, r) = n.div_rem(&d);
    let mut mantissa = q;
    if rounding == Rounding::Up && !r.is_zero() {
        mantissa += BigInt::one();
    }
    if mantissa == pow10(digits) {
        mantissa = pow10(digits - 1);
        e10 += 1;
    }

    let raw = mantissa.to_string();
    if (-5..12).contains(&e10) {
        let (int_part, frac_part) = if e10 >= 0 {
            let split = (e10 + 1) as usize;
            if split >= raw.len() {
                (
                    format!("{raw}{}", "0".repeat(split - raw.len())),
                    String::new(),
                )
            } else {
                (raw[..split].to_string(), raw[split..].to_string())
            }
        } else {
            (
                "0".to_string(),
                format!("{}{raw}", "0".repeat((-e10 - 1) as usize)),
            )
        };
        let frac = frac_part.trim_end_matches('0');
        let frac = if frac.is_empty() { "0" } else { frac };
        format!("{int_part}.{frac}")
    } else {
        let frac = raw[1..].trim_end_matches('0');
        let frac = if frac.is_empty() { "0" } else { frac };
        format!("{}.{frac}e{e10}", &raw[..1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64, d: i64, r: Rounding) -> String {
        format_ratio(&BigInt::from(n), &BigInt::from(d), r, SIGNIFICANT_DIGITS)
    }

    #[test]
    fn exact_values_render_plainly() {
        assert_eq!(f(3, 1, Rounding::Up), "3.0");
        assert_eq!(f(27, 2, Rounding::Up), "13.5");
        assert_eq!(f(1, 2, Rounding::Down), "0.5");
        assert_eq!(f(0, 5, Rounding::Up), "0.0");
        assert_eq!(f(-7, 2, Rounding::Up), "-3.5");
        assert_eq!(f(100, 1, Rounding::Down), "100.0");
    }

    #[test]
    fn directed_rounding() {
        assert_eq!(f(1, 3, Rounding::Down), "0.333333333333");
        assert_eq!(f(1, 3, Rounding::Up), "0.333333333334");
        assert_eq!(f(2, 3, Rounding::Up), "0.666666666667");
        assert_eq!(f(-1, 3, Rounding::Up), "-0.333333333333");
        assert_eq!(f(-1, 3, Rounding::Down), "-0.333333333334");
        // carry into a new decade
        assert_eq!(f(9_999_999_999_999, 10, Rounding::Up), "1.0e12");
    }

    #[test]
    fn scientific_outside_the_positional_range() {
        assert_eq!(
            f(123_456_789_012_345, 1, Rounding::Down),
            "1.23456789012e14"
        );
        assert_eq!(f(123_456_789_012_345, 1, Rounding::Up), "1.23456789013e14");
        assert_eq!(f(1, 1_000_000, Rounding::Up), "1.0e-6");
        assert_eq!(f(1, 100_000, Rounding::Up), "0.00001");
        assert_eq!(f(999_999_999_999, 1, Rounding::Up), "999999999999.0");
    }
}
