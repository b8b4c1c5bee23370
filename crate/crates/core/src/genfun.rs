//! Coefficientwise checks of generating-function identities.
//!
//! Every comparison is exact rational equality.

use std::fmt;

use num_traits::Zero;

use crate::arith::{factorial, rat_int, rational_from_natural, PowerSeries, Rational};
use crate::error::Result;
use crate::sequences::g_by_sum;
use crate::stirling::e_table_vertical;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub expected: Rational,
    pub got: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfCheckReport {
    pub identity: String,
    pub orders_checked: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl EgfCheckReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    fn compare<I>(identity: String, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational, Rational)>,
    {
        let mut checked = 0;
        let mut first_mismatch = None;
        for (index, expected, got) in pairs {
            checked += 1;
            if first_mismatch.is_none() && expected != got {
                first_mismatch = Some(Mismatch { index, expected, got });
            }
        }
        EgfCheckReport { identity, orders_checked: checked, first_mismatch }
    }
}

impl fmt::Display for EgfCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "{}: {} coefficients agree", self.identity, self.orders_checked),
            Some(m) => write!(
                f,
                "{}: coefficient {} expected {} got {}",
                self.identity, m.index, m.expected, m.got
            ),
        }
    }
}

/// The EGF of row `n` of the E table is `(y + ... + y^(sigma+1)/(sigma+1)!)^n / n!`.
/// Compares `k! [y^k]` of the expansion with the table for
/// `k <= min(order, (sigma+1) n)`.
pub fn check_egf_e(sigma: u32, n: u32, order: usize) -> Result<EgfCheckReport> {
    let table = e_table_vertical(sigma, n)?;
    let block = PowerSeries::exp_segment(1, sigma as usize + 1, order);
    let inv_nfact = rational_from_natural(&factorial(n as u64)).recip();
    let series = block.pow(n).scale(&inv_nfact);
    let top = order.min((sigma as usize + 1) * n as usize);
    let pairs = (0..=top).map(|k| {
        let got = series.coeff(k) * rational_from_natural(&factorial(k as u64));
        (k, rational_from_natural(&table.get(n as i64, k as i64)), got)
    });
    Ok(EgfCheckReport::compare(format!("egf-e-sigma{sigma}-n{n}"), pairs))
}

/// `exp(1 - sqrt(1-2x)) / sqrt(1-2x)` against `G_1(n) / n!` for `n <= order`.
pub fn check_egf_g1_closed_form(order: usize) -> Result<EgfCheckReport> {
    let base = PowerSeries::new(vec![rat_int(1), rat_int(-2)], order);
    let root = base.sqrt()?;
    let shifted = &PowerSeries::one(order) - &root;
    let egf = &shifted.exp()? * &root.reciprocal()?;
    let g = g_by_sum(1, order as u32)?;
    let pairs = (0..=order).map(|n| {
        let got = egf.coeff(n) * rational_from_natural(&factorial(n as u64));
        (n, rational_from_natural(&g.values[n]), got)
    });
    Ok(EgfCheckReport::compare("egf-g1-closed-form".into(), pairs))
}

/// With `f` the EGF of `G_1`, checks `f'' = 3 f' + 2x f'' + f` through
/// `x^(order-2)`.
pub fn check_g1_ode(order: usize) -> Result<EgfCheckReport> {
    let g = g_by_sum(1, order as u32)?;
    let coeffs = g
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| rational_from_natural(v) / rational_from_natural(&factorial(n as u64)))
        .collect();
    let f = PowerSeries::new(coeffs, order);
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let rhs = &(&d1.scale(&rat_int(3)) + &d2.mul_x().scale(&rat_int(2))) + &f;
    let top = order.saturating_sub(2);
    let pairs = (0..=top).map(|m| {
        let lhs = d2.coeffs().get(m).cloned().unwrap_or_else(Rational::zero);
        (m, rhs.coeff(m).clone(), lhs)
    });
    Ok(EgfCheckReport::compare("g1-ode".into(), pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn egf_e_examples() {
        let r = check_egf_e(1, 2, 4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.orders_checked, 5);
        // [y^3] of (y + y^2/2)^2 / 2 is 1/2
        let s = PowerSeries::exp_segment(1, 2, 4).pow(2).scale(&rat(1, 2));
        assert_eq!(s.coeff(3), &rat(1, 2));
        assert!(check_egf_e(3, 0, 0).unwrap().passed());
        assert!(check_egf_e(2, 3, 9).unwrap().passed());
    }

    #[test]
    fn g1_closed_form() {
        let r = check_egf_g1_closed_form(4).unwrap();
        assert!(r.passed(), "{r}");
        let base = PowerSeries::new(vec![rat_int(1), rat_int(-2)], 2);
        let root = base.sqrt().unwrap();
        let egf = &(&PowerSeries::one(2) - &root).exp().unwrap() * &root.reciprocal().unwrap();
        assert_eq!(egf.coeff(2), &rat(7, 2));
        assert_eq!(egf.coeff(0), &rat_int(1));
    }

    #[test]
    fn g1_ode() {
        // constant term: 2 f_2 = 3 f_1 + f_0, i.e. 7 = 3*2 + 1
        assert!(check_g1_ode(3).unwrap().passed());
        let r = check_g1_ode(20).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.orders_checked, 19);
    }
}
