//! Exact arithmetic: big naturals and rationals, univariate polynomials,
//! truncated power series, and a fixed-point decimal for reporting.
//!
//! `Natural` and `Rational` are the `num` big-number types. `BigRational`
//! normalizes on construction, so equality of rationals is structural.

mod decimal;
mod poly;
mod series;

pub use decimal::{e_approx, Decimal, DECIMAL_DIGITS};
pub use poly::Polynomial;
pub use series::PowerSeries;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Natural = BigUint;
pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

pub fn factorial(k: u64) -> Natural {
    let mut acc = Natural::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// C(k, i), zero when `i > k`.
pub fn binomial(k: u64, i: u64) -> Natural {
    if i > k {
        return Natural::zero();
    }
    let i = i.min(k - i);
    let mut acc = Natural::one();
    for j in 0..i {
        // acc * (k - j) is divisible by (j + 1) at every step
        acc = acc * (k - j) / (j + 1);
    }
    acc
}

/// Factorials `0!..=max` as a lookup table.
pub fn factorial_table(max: usize) -> Vec<Natural> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Natural::one());
    for i in 1..=max {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// `a - b`, refusing to go negative.
pub fn natural_sub(a: &Natural, b: &Natural) -> Result<Natural> {
    if b > a {
        return Err(Error::precondition(format!(
            "natural subtraction {a} - {b} would be negative"
        )));
    }
    Ok(a - b)
}

pub fn rational_from_natural(n: &Natural) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The value of `q` as a natural number, if it is a nonnegative integer.
pub fn rational_to_natural(q: &Rational) -> Option<Natural> {
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_biguint()
}

pub fn integer_to_natural(z: &Integer) -> Option<Natural> {
    z.to_biguint()
}
