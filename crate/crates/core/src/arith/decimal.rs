use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{rat_int, Rational};

/// Fractional digits carried by [`Decimal`].
pub const DECIMAL_DIGITS: u32 = 60;

/// Terms of `sum 1/k!` used for `e`; the tail is below 10^-120.
const E_TERMS: i64 = 85;

/// `e` as an exact rational within 10^-120 of the true value.
pub fn e_approx() -> &'static Rational {
    static E: OnceLock<Rational> = OnceLock::new();
    E.get_or_init(|| {
        let mut sum = Rational::zero();
        let mut term = rat_int(1);
        for k in 0..E_TERMS {
            if k > 0 {
                term /= rat_int(k);
            }
            sum += &term;
        }
        sum
    })
}

fn scale() -> BigInt {
    BigInt::from(10u32).pow(DECIMAL_DIGITS)
}

/// Fixed-point decimal: `scaled / 10^DECIMAL_DIGITS`, rounded to nearest.
///
/// Only used at the reporting edge, after all exact work is done.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decimal {
    scaled: BigInt,
}

impl Decimal {
    pub fn from_rational(q: &Rational) -> Self {
        let num = q.numer() * scale();
        let den = q.denom();
        // round half away from zero
        let (quot, rem) = num.div_rem(den);
        let twice = rem.abs() * 2u32;
        let scaled = if twice >= *den {
            if num.is_negative() {
                quot - 1
            } else {
                quot + 1
            }
        } else {
            quot
        };
        Decimal { scaled }
    }

    pub fn from_int(v: i64) -> Self {
        Decimal { scaled: BigInt::from(v) * scale() }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.scaled.clone(), scale())
    }

    pub fn abs(&self) -> Self {
        Decimal { scaled: self.scaled.abs() }
    }

    pub fn sub(&self, other: &Decimal) -> Self {
        Decimal { scaled: &self.scaled - &other.scaled }
    }

    pub fn mul(&self, other: &Decimal) -> Self {
        Self::from_rational(&(self.to_rational() * other.to_rational()))
    }

    /// `None` on division by zero.
    pub fn div(&self, other: &Decimal) -> Option<Self> {
        if other.scaled.is_zero() {
            return None;
        }
        Some(Self::from_rational(&(self.to_rational() / other.to_rational())))
    }

    pub fn is_positive(&self) -> bool {
        self.scaled.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal string with `digits` significant digits, truncated.
    pub fn significant(&self, digits: usize) -> String {
        let full = self.to_string();
        let (sign, body) = match full.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", full.as_str()),
        };
        let mut out = String::from(sign);
        let mut seen = 0;
        let mut started = false;
        let mut int_part = true;
        for ch in body.chars() {
            if ch == '.' {
                int_part = false;
                if seen >= digits {
                    break;
                }
                out.push(ch);
                continue;
            }
            if ch != '0' {
                started = true;
            }
            if started {
                if seen >= digits {
                    if int_part {
                        out.push('0');
                        continue;
                    }
                    break;
                }
                seen += 1;
            }
            out.push(ch);
        }
        out.trim_end_matches('.').to_string()
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = scale();
        let (int, frac) = self.scaled.abs().div_rem(&s);
        let sign = if self.scaled.is_negative() { "-" } else { "" };
        write!(
            f,
            "{sign}{int}.{frac:0>width$}",
            width = DECIMAL_DIGITS as usize
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn e_to_fifty_digits() {
        let e = Decimal::from_rational(e_approx());
        assert!(e
            .to_string()
            .starts_with("2.71828182845904523536028747135266249775724709369995"));
    }

    #[test]
    fn rounding_and_display() {
        let third = Decimal::from_rational(&rat(1, 3));
        assert!(third.to_string().starts_with("0.3333"));
        assert_eq!(third.significant(5), "0.33333");
        let two_thirds = Decimal::from_rational(&rat(-2, 3));
        assert!(two_thirds.to_string().ends_with("67"));
        assert_eq!(Decimal::from_int(12345).significant(3), "12300");
        assert_eq!(Decimal::from_int(7).to_f64(), 7.0);
    }

    #[test]
    fn arithmetic() {
        let a = Decimal::from_int(1);
        let b = Decimal::from_rational(&rat(1, 4));
        assert_eq!(a.sub(&b), Decimal::from_rational(&rat(3, 4)));
        assert_eq!(b.sub(&a).abs(), Decimal::from_rational(&rat(3, 4)));
        assert_eq!(a.div(&b).unwrap(), Decimal::from_int(4));
        assert!(a.div(&Decimal::from_int(0)).is_none());
        assert_eq!(b.mul(&b), Decimal::from_rational(&rat(1, 16)));
    }
}
