//! Recovers polynomial-coefficient recurrences from sequence terms.
//!
//! For each candidate (order, degree), in increasing order with order
//! varying slowest, the unknown coefficients of `c_0(n), ..., c_order(n)` are
//! the nullspace of the linear system `sum_i c_i(n) a(n-i) = 0` over a
//! fitting window. The system is reduced with fraction-free (Bareiss)
//! elimination over the integers; a candidate survives only if it also
//! annihilates the held-out tail of the input.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{Natural, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::sequences::RecurrenceSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessQuery {
    terms: Vec<Natural>,
    max_order: usize,
    max_degree: usize,
    guard_terms: usize,
}

impl GuessQuery {
    /// Fails unless there are at least
    /// `(max_order+1)(max_degree+1) + max_order + guard_terms` terms.
    pub fn new(
        terms: Vec<Natural>,
        max_order: usize,
        max_degree: usize,
        guard_terms: usize,
    ) -> Result<Self> {
        if max_order == 0 {
            return Err(Error::precondition("max_order must be positive"));
        }
        let need = Self::terms_needed(max_order, max_degree, guard_terms);
        if terms.len() < need {
            return Err(Error::InsufficientTerms { need, have: terms.len() });
        }
        Ok(GuessQuery { terms, max_order, max_degree, guard_terms })
    }

    pub fn terms_needed(max_order: usize, max_degree: usize, guard_terms: usize) -> usize {
        (max_order + 1) * (max_degree + 1) + max_order + guard_terms
    }

    pub fn terms(&self) -> &[Natural] {
        &self.terms
    }
}

/// First spec, in (order, degree) order, that fits the window and the
/// held-out terms. Coefficients are integers with content 1 and the leading
/// polynomial has positive leading coefficient.
pub fn guess_recurrence(q: &GuessQuery) -> Result<Option<RecurrenceSpec>> {
    let terms: Vec<BigInt> = q.terms.iter().map(|t| BigInt::from(t.clone())).collect();
    let fit_len = terms.len() - q.guard_terms;
    for order in 1..=q.max_order {
        for degree in 0..=q.max_degree {
            if fit_len <= order {
                continue;
            }
            if let Some(spec) = try_candidate(&terms, fit_len, order, degree, q)? {
                return Ok(Some(spec));
            }
        }
    }
    Ok(None)
}

fn try_candidate(
    terms: &[BigInt],
    fit_len: usize,
    order: usize,
    degree: usize,
    q: &GuessQuery,
) -> Result<Option<RecurrenceSpec>> {
    let width = degree + 1;
    let cols = (order + 1) * width;
    let rows: Vec<Vec<BigInt>> = (order..fit_len)
        .map(|n| {
            let nb = BigInt::from(n);
            let mut row = Vec::with_capacity(cols);
            for i in 0..=order {
                let mut pw = BigInt::one();
                for _ in 0..width {
                    row.push(&pw * &terms[n - i]);
                    pw *= &nb;
                }
            }
            row
        })
        .collect();
    for v in nullspace(rows, cols)? {
        let polys: Vec<Polynomial> = v.chunks(width).map(Polynomial::from_integers).collect();
        if polys[0].is_zero() {
            continue;
        }
        let sign = if polys[0].leading().is_some_and(|c| c.is_negative()) {
            Rational::from_integer(BigInt::from(-1))
        } else {
            Rational::one()
        };
        let lhs = polys[0].scale(&sign);
        let rhs: Vec<Polynomial> = polys[1..].iter().map(|p| p.scale(&-sign.clone())).collect();
        let name = format!("guess-order{order}-degree{degree}");
        let spec = match RecurrenceSpec::with_auto_start(name, lhs, rhs, order as i64) {
            Ok(s) => s,
            Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        };
        if verify_spec_on_terms(&spec, &q.terms)?.is_none() {
            return Ok(Some(spec));
        }
    }
    Ok(None)
}

/// Integer basis of the right nullspace, one vector per free column in
/// ascending column order, each scaled to content 1.
pub fn nullspace(mut m: Vec<Vec<BigInt>>, cols: usize) -> Result<Vec<Vec<BigInt>>> {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(Error::inconsistency("fraction-free elimination lost exactness"));
                }
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rational::zero(); cols];
        x[f] = Rational::one();
        for (t, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for j in pc + 1..cols {
                if !m[t][j].is_zero() && !x[j].is_zero() {
                    acc += Rational::from_integer(m[t][j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Rational::from_integer(m[t][pc].clone());
        }
        basis.push(to_primitive_integers(&x));
    }
    Ok(basis)
}

fn to_primitive_integers(x: &[Rational]) -> Vec<BigInt> {
    let den = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|v| v / &content).collect()
}

/// First `n >= valid_from` where `lhs(n) a(n) != sum_i rhs_i(n) a(n-i)`.
pub fn verify_spec_on_terms(spec: &RecurrenceSpec, terms: &[Natural]) -> Result<Option<usize>> {
    if terms.len() <= spec.order() {
        return Err(Error::InsufficientTerms { need: spec.order() + 1, have: terms.len() });
    }
    let (lhs, rhs) = spec.integer_form();
    let eval = |p: &[BigInt], n: &BigInt| p.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c);
    let values: Vec<BigInt> = terms.iter().map(|t| BigInt::from(t.clone())).collect();
    let start = spec.valid_from().max(spec.order() as i64) as usize;
    for n in start..values.len() {
        let nb = BigInt::from(n);
        let mut acc = eval(&lhs, &nb) * &values[n];
        for (i, p) in rhs.iter().enumerate() {
            acc -= eval(p, &nb) * &values[n - 1 - i];
        }
        if !acc.is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
