//! Restricted Stirling numbers `E_sigma(n, k)`: the number of partitions of
//! `{1..k}` into exactly `n` blocks, each of size at most `sigma + 1`.
//!
//! Several independent routes are provided so they can be checked against
//! each other and against [`crate::oracle`]:
//!
//! * [`e_table_vertical`]: row recurrence on the block containing `k`,
//! * [`e_multinomial`]: sum over block-size profiles,
//! * [`e_miller`]: power-of-a-polynomial coefficient recurrence,
//! * [`e1_closed`], [`e2_sum`], [`e2_hypergeometric`]: closed forms for
//!   `sigma = 1, 2`.
//!
//! Every method returns 0 outside `n <= k <= (sigma+1) n`, including for
//! negative indices.

use num_traits::{One, Zero};

use crate::arith::{
    binomial, factorial, factorial_table, rat, rat_int, rational_from_natural,
    rational_to_natural, Natural, Rational,
};
use crate::error::{Error, Result};
use crate::guard::{self, Guards};

fn in_support(sigma: u32, n: i64, k: i64) -> bool {
    n >= 0 && k >= n && k <= (sigma as i64 + 1) * n
}

/// Dense triangle of `E_sigma(n, k)` for `0 <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETable {
    sigma: u32,
    max_n: u32,
    /// `rows[n][k]` for `0 <= k <= (sigma+1) n`
    rows: Vec<Vec<Natural>>,
}

impl ETable {
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    /// `E_sigma(n, k)`, zero for any index outside the table's support.
    pub fn get(&self, n: i64, k: i64) -> Natural {
        if n < 0 || k < 0 || n > self.max_n as i64 {
            return Natural::zero();
        }
        self.rows[n as usize]
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Natural::zero)
    }

    /// Row `n` restricted to `n <= k <= (sigma+1) n`.
    pub fn row(&self, n: u32) -> &[Natural] {
        &self.rows[n as usize][n as usize..]
    }

    pub fn row_sum(&self, n: u32) -> Natural {
        self.rows[n as usize].iter().sum()
    }
}

/// Fills the table row by row from
/// `E(n, k) = sum_{i=0}^{min(sigma, k-n)} C(k-1, i) E(n-1, k-1-i)`.
pub fn e_table_vertical(sigma: u32, max_n: u32) -> Result<ETable> {
    e_table_vertical_with(sigma, max_n, Guards::global())
}

pub fn e_table_vertical_with(sigma: u32, max_n: u32, guards: &Guards) -> Result<ETable> {
    let width = (sigma as u64 + 1) * max_n as u64 + 1;
    guard::check("table_cells", width * (max_n as u64 + 1), guards.table_cells)?;
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(max_n as usize + 1);
    rows.push(vec![Natural::one()]);
    for n in 1..=max_n as usize {
        let top = (sigma as usize + 1) * n;
        let mut row = vec![Natural::zero(); top + 1];
        row[n] = Natural::one();
        let prev = &rows[n - 1];
        for k in n + 1..=top {
            let mut acc = Natural::zero();
            for i in 0..=(sigma as usize).min(k - n) {
                if let Some(p) = prev.get(k - 1 - i) {
                    if !p.is_zero() {
                        acc += binomial(k as u64 - 1, i as u64) * p;
                    }
                }
            }
            row[k] = acc;
        }
        rows.push(row);
    }
    Ok(ETable { sigma, max_n, rows })
}

/// Sum over block-size profiles `(nu_1, ..., nu_{sigma+1})` with
/// `sum nu_i = n` and `sum i nu_i = k` of `k! / (prod nu_i! (i!)^nu_i)`.
pub fn e_multinomial(sigma: u32, n: i64, k: i64) -> Natural {
    if !in_support(sigma, n, k) {
        return Natural::zero();
    }
    let fact = factorial_table(k as usize);
    let parts = sigma as usize + 1;
    let mut nu = vec![0usize; parts];
    let mut total = Natural::zero();
    profiles(&mut nu, 0, n as usize, k as usize, &fact, &mut total);
    total
}

fn profiles(
    nu: &mut [usize],
    idx: usize,
    blocks_left: usize,
    elems_left: usize,
    fact: &[Natural],
    total: &mut Natural,
) {
    let size = idx + 1;
    if idx == nu.len() - 1 {
        if blocks_left * size != elems_left {
            return;
        }
        nu[idx] = blocks_left;
        let mut denom = Natural::one();
        for (i, &count) in nu.iter().enumerate() {
            denom *= &fact[count];
            for _ in 0..count {
                denom *= &fact[i + 1];
            }
        }
        *total += &fact[fact.len() - 1] / denom;
        return;
    }
    for count in 0..=blocks_left {
        if count * size > elems_left {
            break;
        }
        // remaining blocks each need at least size + 1 elements
        let rest_blocks = blocks_left - count;
        let rest_elems = elems_left - count * size;
        if rest_elems < rest_blocks * (size + 1) {
            continue;
        }
        nu[idx] = count;
        profiles(nu, idx + 1, rest_blocks, rest_elems, fact, total);
    }
    nu[idx] = 0;
}

/// Walks `k` upward from `n` with
/// `E(n,k) = k!/(k-n) sum_{i=1}^{min(sigma,k-n)} ((n+1)i-k+n) / ((i+1)! (k-i)!) E(n,k-i)`.
///
/// Intermediates are rational; a non-integral result is a bug signal.
pub fn e_miller(sigma: u32, n: i64, k: i64) -> Result<Natural> {
    if !in_support(sigma, n, k) {
        return Ok(Natural::zero());
    }
    let steps = (k - n) as usize;
    let fact = factorial_table(k as usize + 1);
    let f = |m: usize| rational_from_natural(&fact[m]);
    // a[j] = E(n, n + j)
    let mut a: Vec<Rational> = Vec::with_capacity(steps + 1);
    a.push(Rational::one());
    for j in 1..=steps {
        let kk = n + j as i64;
        let mut acc = Rational::zero();
        for i in 1..=(sigma as usize).min(j) {
            let weight = rat_int((n + 1) * i as i64 - kk + n);
            if weight.is_zero() || a[j - i].is_zero() {
                continue;
            }
            acc += weight * &a[j - i] / (f(i + 1) * f(kk as usize - i));
        }
        a.push(f(kk as usize) * acc / rat_int(kk - n));
    }
    let last = &a[steps];
    rational_to_natural(last).ok_or_else(|| {
        Error::inconsistency(format!("e_miller({sigma}, {n}, {k}) gave non-integral {last}"))
    })
}

/// `E_1(n, k) = k! / ((2n-k)! (k-n)! 2^(k-n))`.
pub fn e1_closed(n: i64, k: i64) -> Natural {
    if !in_support(1, n, k) {
        return Natural::zero();
    }
    let (n, k) = (n as u64, k as u64);
    factorial(k) / (factorial(2 * n - k) * factorial(k - n) * (Natural::one() << (k - n)))
}

/// `E_2(n, k)` as a single sum over the number `c` of size-3 blocks:
/// `sum_c k! / ((n-eta+c)! (eta-2c)! c! 2^(eta-c) 3^c)` with `eta = k - n`.
pub fn e2_sum(n: i64, k: i64) -> Natural {
    if !in_support(2, n, k) {
        return Natural::zero();
    }
    let eta = k - n;
    let fk = factorial(k as u64);
    let mut total = Natural::zero();
    for c in (eta - n).max(0)..=eta / 2 {
        let denom = factorial((n - eta + c) as u64)
            * factorial((eta - 2 * c) as u64)
            * factorial(c as u64)
            * (Natural::one() << (eta - c) as u64)
            * Natural::from(3u32).pow(c as u32);
        total += &fk / denom;
    }
    total
}

/// A hypergeometric series `pFq(upper; lower; z)` that terminates because
/// some upper parameter is a nonpositive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypSpec {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    argument: Rational,
}

fn nonpositive_integer(q: &Rational) -> Option<u64> {
    if q.is_integer() && *q <= Rational::zero() {
        (-q.to_integer()).try_into().ok()
    } else {
        None
    }
}

impl HypSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Result<Self> {
        let terms = upper
            .iter()
            .filter_map(nonpositive_integer)
            .min()
            .ok_or_else(|| Error::precondition("no upper parameter is a nonpositive integer"))?;
        // a lower parameter -l hits zero at index l; that is fatal if l < terms
        if let Some(l) = lower.iter().filter_map(nonpositive_integer).find(|&l| l < terms) {
            return Err(Error::precondition(format!(
                "lower parameter -{l} vanishes before the series terminates"
            )));
        }
        Ok(HypSpec { upper, lower, argument })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn argument(&self) -> &Rational {
        &self.argument
    }
}

/// Exact sum of a terminating hypergeometric series. Summation stops at the
/// first index where an upper Pochhammer factor vanishes.
pub fn hyp_terminating(spec: &HypSpec) -> Result<Rational> {
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut m: i64 = 0;
    loop {
        sum += &term;
        let shift = rat_int(m);
        let mut num = Rational::one();
        for a in &spec.upper {
            num *= a + &shift;
        }
        if num.is_zero() {
            return Ok(sum);
        }
        let mut den = rat_int(m + 1);
        for b in &spec.lower {
            let f = b + &shift;
            if f.is_zero() {
                return Err(Error::precondition(format!(
                    "lower Pochhammer factor vanishes at index {}",
                    m + 1
                )));
            }
            den *= f;
        }
        term = term * num * &spec.argument / den;
        m += 1;
    }
}

/// Which closed form [`e2_hypergeometric_branch`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum E2Branch {
    /// valid for `k - n <= n`
    LowExcess,
    /// valid for `k - n >= n`
    HighExcess,
}

/// `E_2(n, k)` through a `2F1` at argument `8/3`, picking the branch that
/// applies to `eta = k - n`.
pub fn e2_hypergeometric(n: i64, k: i64) -> Result<Natural> {
    let branch = if k - n <= n { E2Branch::LowExcess } else { E2Branch::HighExcess };
    e2_hypergeometric_branch(n, k, branch)
}

pub fn e2_hypergeometric_branch(n: i64, k: i64, branch: E2Branch) -> Result<Natural> {
    if !in_support(2, n, k) {
        return Ok(Natural::zero());
    }
    let eta = k - n;
    let fr = |m: i64| rational_from_natural(&factorial(m as u64));
    let pow = |base: i64, e: i64| rat_int(base).pow(e as i32);
    let (prefactor, spec) = match branch {
        E2Branch::LowExcess => {
            if eta > n {
                return Err(Error::precondition("low-excess branch needs k - n <= n"));
            }
            let pre = fr(n + eta) / (fr(eta) * fr(n - eta) * pow(2, eta));
            let spec = HypSpec::new(
                vec![rat(-eta, 2), rat(-eta + 1, 2)],
                vec![rat_int(n - eta + 1)],
                rat(8, 3),
            )?;
            (pre, spec)
        }
        E2Branch::HighExcess => {
            if eta < n {
                return Err(Error::precondition("high-excess branch needs k - n >= n"));
            }
            let pre = fr(eta + n)
                / (fr(2 * n - eta) * fr(eta - n) * pow(2, n) * pow(3, eta - n));
            let spec = HypSpec::new(
                vec![rat(eta - 2 * n, 2), rat(eta - 2 * n + 1, 2)],
                vec![rat_int(eta - n + 1)],
                rat(8, 3),
            )?;
            (pre, spec)
        }
    };
    let value = prefactor * hyp_terminating(&spec)?;
    rational_to_natural(&value).ok_or_else(|| {
        Error::inconsistency(format!("e2_hypergeometric({n}, {k}) gave non-integral {value}"))
    })
}

/// A cell where an identity failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub n: i64,
    pub k: i64,
}

pub const E1_ROW_RECURRENCE: &str = "e1-row-recurrence";
pub const E1_TWO_STEP: &str = "e1-two-step-recurrence";
pub const E2_EIGHT_TERM: &str = "e2-eight-term-recurrence";

/// Checks the pointwise identities known for `sigma = 1` and `sigma = 2`
/// over the whole table up to `max_n` (plus a margin of zero cells past the
/// support). Returns the failing cells; an empty list means all hold.
pub fn validate_e_identities(sigma: u32, max_n: u32) -> Result<Vec<Violation>> {
    if !(1..=2).contains(&sigma) {
        return Err(Error::precondition("identity validation covers sigma 1 and 2 only"));
    }
    let t = e_table_vertical(sigma, max_n)?;
    let e = |n: i64, k: i64| rational_from_natural(&t.get(n, k));
    let mut out = Vec::new();
    let top = |n: i64| (sigma as i64 + 1) * n + 2;
    for n in 0..=max_n as i64 {
        for k in 0..=top(n) {
            let lhs = e(n, k);
            if sigma == 1 {
                if n >= 1 && lhs != e(n - 1, k - 1) + rat_int(k - 1) * e(n - 1, k - 2) {
                    out.push(Violation { identity: E1_ROW_RECURRENCE, n, k });
                }
                if n >= 2 && lhs != rat_int(2 * n - 1) * e(n - 1, k - 2) + e(n - 2, k - 2) {
                    out.push(Violation { identity: E1_TWO_STEP, n, k });
                }
            } else if n >= 4 {
                let rhs = rat_int(9 * n * n - 9 * n + 2) * e(n - 1, k - 3) / rat_int(2)
                    - rat(5, 2) * e(n - 1, k - 1)
                    + rat_int(9 * n * n - 36 * n + 35) * e(n - 2, k - 4) / rat_int(2)
                    + rat_int(6 * (n - 1)) * e(n - 2, k - 3)
                    - rat(3, 2) * e(n - 2, k - 2)
                    + rat_int(3 * (2 * n - 5)) * e(n - 3, k - 4)
                    + rat(5, 2) * e(n - 3, k - 3)
                    + rat(5, 2) * e(n - 4, k - 4);
                if lhs != rhs {
                    out.push(Violation { identity: E2_EIGHT_TERM, n, k });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn nats(v: &[u64]) -> Vec<Natural> {
        v.iter().map(|&x| nat(x)).collect()
    }

    #[test]
    fn vertical_rows() {
        let t1 = e_table_vertical(1, 4).unwrap();
        assert_eq!(t1.row(2), nats(&[1, 3, 3]).as_slice());
        let t2 = e_table_vertical(2, 3).unwrap();
        assert_eq!(t2.row(3), nats(&[1, 6, 25, 75, 175, 280, 280]).as_slice());
        for n in 0..=4 {
            assert_eq!(t1.get(n, n), nat(1));
        }
        assert_eq!(t1.get(-1, 0), nat(0));
        assert_eq!(t1.get(2, -3), nat(0));
        assert_eq!(t1.get(2, 5), nat(0));
        assert_eq!(t1.get(9, 9), nat(0));
    }

    #[test]
    fn table_guard() {
        let tight = Guards { table_cells: 100, ..Guards::default() };
        assert!(matches!(
            e_table_vertical_with(2, 20, &tight),
            Err(Error::Guard { guard: "table_cells", .. })
        ));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(e_multinomial(2, 3, 6), nat(75));
        for s in 0..4 {
            assert_eq!(e_multinomial(s, 5, 5), nat(1));
        }
        assert_eq!(e_multinomial(1, 2, 4), nat(3));
        assert_eq!(e_multinomial(1, 2, 5), nat(0));
        assert_eq!(e_multinomial(0, 0, 0), nat(1));
    }

    #[test]
    fn miller_examples() {
        for n in 0..10 {
            assert_eq!(e_miller(1, n, n + 1).unwrap(), nat((n * (n + 1) / 2) as u64));
            assert_eq!(e_miller(3, n, n).unwrap(), nat(1));
        }
        assert_eq!(e_miller(2, 3, 9).unwrap(), nat(280));
        assert_eq!(e_miller(2, 3, 10).unwrap(), nat(0));
    }

    #[test]
    fn sigma1_closed_form() {
        assert_eq!(e1_closed(2, 4), nat(3));
        assert_eq!(e1_closed(6, 6), nat(1));
        assert_eq!(e1_closed(5, 10), nat(945));
        assert_eq!(e1_closed(2, 1), nat(0));
    }

    #[test]
    fn sigma2_sum() {
        assert_eq!(e2_sum(3, 4), nat(6));
        assert_eq!(e2_sum(3, 9), nat(280));
        assert_eq!(e2_sum(7, 7), nat(1));
        assert_eq!(e2_sum(3, 10), nat(0));
    }

    #[test]
    fn hypergeometric_series() {
        let spec =
            HypSpec::new(vec![rat(1, 3), rat_int(0)], vec![rat(5, 7)], rat(9, 2)).unwrap();
        assert_eq!(hyp_terminating(&spec).unwrap(), rat_int(1));
        let f20 = HypSpec::new(vec![rat_int(3), rat_int(-2)], vec![], rat(-1, 2)).unwrap();
        assert_eq!(hyp_terminating(&f20).unwrap(), rat_int(7));
        let f21 = HypSpec::new(vec![rat(-1, 2), rat_int(0)], vec![rat_int(3)], rat(8, 3)).unwrap();
        assert_eq!(hyp_terminating(&f21).unwrap(), rat_int(1));
        // (1 - z)^2 = 2F1(-2, b; b; z)
        let binom = HypSpec::new(vec![rat_int(-2), rat(7, 3)], vec![rat(7, 3)], rat(1, 5)).unwrap();
        assert_eq!(hyp_terminating(&binom).unwrap(), rat(16, 25));
    }

    #[test]
    fn hypergeometric_spec_validation() {
        assert!(HypSpec::new(vec![rat(1, 2)], vec![], rat_int(1)).is_err());
        assert!(HypSpec::new(vec![rat_int(-3)], vec![rat_int(-1)], rat_int(1)).is_err());
        assert!(HypSpec::new(vec![rat_int(-3)], vec![rat_int(-3)], rat_int(1)).is_ok());
    }

    #[test]
    fn sigma2_hypergeometric() {
        assert_eq!(e2_hypergeometric(3, 4).unwrap(), nat(6));
        assert_eq!(e2_hypergeometric(4, 4).unwrap(), nat(1));
        assert_eq!(e2_hypergeometric(3, 9).unwrap(), nat(280));
        assert_eq!(e2_hypergeometric(3, 2).unwrap(), nat(0));
        for n in 1..=10 {
            assert_eq!(
                e2_hypergeometric_branch(n, 2 * n, E2Branch::LowExcess).unwrap(),
                e2_hypergeometric_branch(n, 2 * n, E2Branch::HighExcess).unwrap()
            );
        }
        assert!(e2_hypergeometric_branch(3, 9, E2Branch::LowExcess).is_err());
    }

    #[test]
    fn identities_hold() {
        assert!(validate_e_identities(1, 10).unwrap().is_empty());
        assert!(validate_e_identities(2, 10).unwrap().is_empty());
        assert!(validate_e_identities(1, 0).unwrap().is_empty());
        assert!(validate_e_identities(3, 4).is_err());
    }
}
