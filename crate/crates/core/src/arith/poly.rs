use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat_int, Rational};
use crate::error::{Error, Result};

/// Polynomial in one variable `n` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `n^i`. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Integer roots are searched up to this magnitude.
const ROOT_SCAN_LIMIT: u64 = 10_000_000;

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ascending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// From integer coefficients, highest degree first (the order they are
    /// usually written in).
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| rat_int(c)).collect())
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by the integer `d`.
    pub fn div_int(&self, d: i64) -> Self {
        self.scale(&Rational::new(BigInt::one(), BigInt::from(d)))
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.eval_rational(&rat_int(n))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coefficients multiplied by `scale`, which must clear every
    /// denominator.
    pub fn integer_coeffs(&self, scale: &BigInt) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                let v = c * Rational::from_integer(scale.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    /// All integer roots, ascending. The zero polynomial has no well-defined
    /// root set and is rejected.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::precondition("integer roots of the zero polynomial"));
        }
        let ints = self.integer_coeffs(&self.denominator_lcm());
        let mut roots = Vec::new();
        // strip the factor n^m
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if shift > 0 {
            roots.push(0);
        }
        let reduced = &ints[shift..];
        if reduced.len() <= 1 {
            return Ok(roots);
        }
        let lead = reduced.last().unwrap().abs();
        let max_ratio = reduced[..reduced.len() - 1]
            .iter()
            .map(|c| c.abs().div_ceil(&lead))
            .max()
            .unwrap_or_else(BigInt::zero);
        let bound = (max_ratio + 1u32)
            .to_u64()
            .filter(|&b| b <= ROOT_SCAN_LIMIT)
            .ok_or_else(|| Error::precondition("integer root bound too large to scan"))?;
        let trailing = &reduced[0];
        for r in 1..=bound as i64 {
            for cand in [-r, r] {
                // any integer root divides the trailing coefficient
                if !(trailing % BigInt::from(cand)).is_zero() {
                    continue;
                }
                let x = BigInt::from(cand);
                let v = reduced.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c);
                if v.is_zero() {
                    roots.push(cand);
                }
            }
        }
        roots.sort_unstable();
        Ok(roots)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Renders as e.g. `9/2*n^2 - 9/2*n - 3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}
