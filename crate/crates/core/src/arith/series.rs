use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat_int, Polynomial, Rational};
use crate::error::{Error, Result};

/// Truncated formal power series `c_0 + c_1 x + ... + c_N x^N`.
///
/// The truncation order `N` is part of the value: coefficients above it are
/// unknown, not zero. Binary operations truncate to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// `x` truncated at `order`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    /// `sum_{j=lo}^{hi} x^j / j!`, truncated at `order`.
    pub fn exp_segment(lo: usize, hi: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut inv_fact = Rational::one();
        for j in 0..=hi.min(order) {
            if j > 0 {
                inv_fact /= rat_int(j as i64);
            }
            if j >= lo {
                coeffs[j] = inv_fact.clone();
            }
        }
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order)].to_vec(), order.min(self.order))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// Formal derivative. The result is known to one order less.
    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order)
            .map(|j| &self.coeffs[j] * rat_int(j as i64))
            .collect();
        Self::new(coeffs, self.order - 1)
    }

    /// Multiplication by `x`. The result is known to one order more.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order + 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `exp(a)` for `a` with zero constant term, from `b' = a' b`:
    /// `j b_j = sum_{i=1}^{j} i a_i b_{j-i}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition("series exp needs a zero constant term"));
        }
        let mut b = vec![Rational::zero(); self.order + 1];
        b[0] = Rational::one();
        for j in 1..=self.order {
            let mut acc = Rational::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * rat_int(i as i64) * &b[j - i];
                }
            }
            b[j] = acc / rat_int(j as i64);
        }
        Ok(Self::new(b, self.order))
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::precondition("series sqrt needs constant term 1"));
        }
        let two = rat_int(2);
        let mut s = vec![Rational::zero(); self.order + 1];
        s[0] = Rational::one();
        for j in 1..=self.order {
            let mut acc = self.coeffs[j].clone();
            for i in 1..j {
                acc -= &s[i] * &s[j - i];
            }
            s[j] = acc / &two;
        }
        Ok(Self::new(s, self.order))
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::precondition("series reciprocal needs a nonzero constant term"));
        }
        let inv0 = self.coeffs[0].recip();
        let mut r = vec![Rational::zero(); self.order + 1];
        r[0] = inv0.clone();
        for j in 1..=self.order {
            let mut acc = Rational::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &r[j - i];
                }
            }
            r[j] = -acc * &inv0;
        }
        Ok(Self::new(r, self.order))
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries::new(
            (0..=order).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
            order,
        )
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries::new(
            (0..=order).map(|j| &self.coeffs[j] - &rhs.coeffs[j]).collect(),
            order,
        )
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect(), self.order)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries::new(out, order)
    }
}
