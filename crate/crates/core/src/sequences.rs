//! The gift counts `G_sigma(n)` by summation, by multinomial sums, by the
//! moment expansion, and through polynomial-coefficient recurrences.
//!
//! Two families of recurrences are built in for `sigma = 1..4`:
//! "Type C" (unit leading coefficient, higher order) and "Type D"
//! (polynomial leading coefficient, order `sigma + 1`). Initial values for
//! both are always generated by [`g_by_sum`], never typed in.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    e_approx, factorial, factorial_table, integer_to_natural, rat, rat_int, rational_from_natural,
    rational_to_natural, Decimal, Natural, Polynomial, Rational,
};
use crate::error::{Error, Result};
use crate::guard::{self, Guards};
use crate::stirling::e_table_vertical;

/// How a [`SequenceRun`] was produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Method {
    Sum,
    Multinomial,
    Moments,
    Recurrence(String),
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Sum => write!(f, "sum"),
            Method::Multinomial => write!(f, "multinomial"),
            Method::Moments => write!(f, "moments"),
            Method::Recurrence(name) => write!(f, "{name}"),
            Method::Oracle => write!(f, "oracle"),
        }
    }
}

/// `G_sigma(0..=nmax)` together with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRun {
    pub sigma: u32,
    pub values: Vec<Natural>,
    pub method: Method,
}

impl SequenceRun {
    pub fn nmax(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Largest bit length among the values.
    pub fn peak_bits(&self) -> u64 {
        self.values.iter().map(|v| v.bits()).max().unwrap_or(0)
    }
}

/// `G_sigma(n) = sum_k E_sigma(n, k)`, using the vertical E table.
pub fn g_by_sum(sigma: u32, nmax: u32) -> Result<SequenceRun> {
    let table = e_table_vertical(sigma, nmax)?;
    let values = (0..=nmax).map(|n| table.row_sum(n)).collect();
    Ok(SequenceRun { sigma, values, method: Method::Sum })
}

/// `(1/n!) sum_{(i_1..i_n) in [1, sigma+1]^n} (i_1+...+i_n)! / (i_1! ... i_n!)`.
///
/// There are `(sigma+1)^n` terms, so `n` is guarded.
pub fn g_multinomial(sigma: u32, n: u32) -> Result<Natural> {
    g_multinomial_with(sigma, n, Guards::global())
}

pub fn g_multinomial_with(sigma: u32, n: u32, guards: &Guards) -> Result<Natural> {
    guard::check("multinomial_n", n as u64, guards.multinomial_n)?;
    let top = sigma as usize + 1;
    let fact = factorial_table(top * n as usize);
    let mut sizes = vec![1usize; n as usize];
    let mut total = Natural::zero();
    loop {
        let sum: usize = sizes.iter().sum();
        let denom: Natural = sizes.iter().map(|&i| &fact[i]).product();
        total += &fact[sum] / denom;
        // odometer step over [1, top]^n
        let mut pos = 0;
        while pos < sizes.len() && sizes[pos] == top {
            sizes[pos] = 1;
            pos += 1;
        }
        if pos == sizes.len() {
            break;
        }
        sizes[pos] += 1;
    }
    let nf = factorial(n as u64);
    let (q, r) = total.div_rem(&nf);
    if !r.is_zero() {
        return Err(Error::inconsistency(format!(
            "multinomial sum for sigma={sigma}, n={n} is not divisible by n!"
        )));
    }
    Ok(q)
}

/// The polynomial `(y + y^2/2! + ... + y^(sigma+1)/(sigma+1)!)^n`.
pub fn block_egf_power(sigma: u32, n: u32) -> Polynomial {
    let mut coeffs = vec![Rational::zero()];
    let mut inv = Rational::one();
    for j in 1..=sigma as i64 + 1 {
        inv /= rat_int(j);
        coeffs.push(inv.clone());
    }
    Polynomial::new(coeffs).pow(n)
}

/// Replaces `y^k` by `k!` in [`block_egf_power`] and divides by `n!`; this is
/// the moment form `(1/n!) int_0^inf e^-y (sum y^j/j!)^n dy` done exactly.
pub fn g_moments(sigma: u32, n: u32) -> Result<Natural> {
    let p = block_egf_power(sigma, n);
    let fact = factorial_table(p.degree().unwrap_or(0));
    let mut total = Rational::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            total += c * rational_from_natural(&fact[k]);
        }
    }
    let value = total / rational_from_natural(&factorial(n as u64));
    rational_to_natural(&value).ok_or_else(|| {
        Error::inconsistency(format!("moment sum for sigma={sigma}, n={n} gave {value}"))
    })
}

/// `lhs(n) a(n) = sum_{i=1}^{order} rhs[i-1](n) a(n-i)` for all
/// `n >= valid_from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    name: String,
    lhs: Polynomial,
    rhs: Vec<Polynomial>,
    valid_from: i64,
}

impl RecurrenceSpec {
    pub fn new(
        name: impl Into<String>,
        lhs: Polynomial,
        rhs: Vec<Polynomial>,
        valid_from: i64,
    ) -> Result<Self> {
        let name = name.into();
        if rhs.is_empty() {
            return Err(Error::precondition(format!("{name}: order must be at least 1")));
        }
        if lhs.is_zero() {
            return Err(Error::precondition(format!("{name}: zero leading polynomial")));
        }
        if valid_from < rhs.len() as i64 {
            return Err(Error::precondition(format!(
                "{name}: valid_from {valid_from} is below the order {}",
                rhs.len()
            )));
        }
        if let Some(r) = lhs.integer_roots()?.into_iter().find(|&r| r >= valid_from) {
            return Err(Error::Singularity { spec: name, n: r });
        }
        Ok(RecurrenceSpec { name, lhs, rhs, valid_from })
    }

    /// Like [`RecurrenceSpec::new`] with `valid_from` set to the smallest
    /// `n >= min_from` beyond every integer root of `lhs`.
    pub fn with_auto_start(
        name: impl Into<String>,
        lhs: Polynomial,
        rhs: Vec<Polynomial>,
        min_from: i64,
    ) -> Result<Self> {
        let roots = if lhs.is_zero() { Vec::new() } else { lhs.integer_roots()? };
        let start = roots
            .iter()
            .map(|r| r + 1)
            .fold(min_from.max(rhs.len() as i64), i64::max);
        Self::new(name, lhs, rhs, start)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.rhs.len()
    }

    pub fn lhs(&self) -> &Polynomial {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Polynomial] {
        &self.rhs
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// Homogeneous form `sum_{i=0}^{order} c_i(n) a(n-i) = 0`, with
    /// `c_0 = lhs` and `c_i = -rhs[i-1]`.
    pub fn homogeneous(&self) -> Vec<Polynomial> {
        std::iter::once(self.lhs.clone())
            .chain(self.rhs.iter().map(|p| -p))
            .collect()
    }

    /// Rescales so every coefficient is an integer.
    pub(crate) fn integer_form(&self) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
        let scale = self
            .rhs
            .iter()
            .fold(self.lhs.denominator_lcm(), |acc, p| acc.lcm(&p.denominator_lcm()));
        (
            self.lhs.integer_coeffs(&scale),
            self.rhs.iter().map(|p| p.integer_coeffs(&scale)).collect(),
        )
    }
}

impl fmt::Display for RecurrenceSpec {
    /// One polynomial per line, leading coefficient first, then the relation
    /// written out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lhs: {}", self.lhs)?;
        for (i, p) in self.rhs.iter().enumerate() {
            writeln!(f, "rhs[{}]: {}", i + 1, p)?;
        }
        write!(f, "{}", render_relation(&self.homogeneous()))
    }
}

/// Renders `sum c_i(n) a(n-i) = 0`, e.g. `a(n) - a(n-1) = 0`.
pub fn render_relation(coeffs: &[Polynomial]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if i == 0 { "a(n)".to_string() } else { format!("a(n-{i})") };
        let negative = c.degree() == Some(0) && c.coeff(0).is_negative();
        let mag = if negative { -c } else { c.clone() };
        let body = if mag.degree() == Some(0) && mag.coeff(0).is_one() {
            term
        } else if mag.degree() == Some(0) {
            format!("{}*{term}", mag.coeff(0))
        } else {
            format!("({mag})*{term}")
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = 0");
    out
}

/// Extends `initial` to `a(0..=nmax)`. Each new term is an exact division
/// by `lhs(n)`; a remainder means the spec and the initial values disagree.
pub fn run_recurrence(spec: &RecurrenceSpec, initial: &[Natural], nmax: usize) -> Result<Vec<Natural>> {
    let need = spec.valid_from as usize;
    if initial.len() < need {
        return Err(Error::InsufficientTerms { need, have: initial.len() });
    }
    if nmax < initial.len() {
        return Ok(initial[..=nmax].to_vec());
    }
    let (lhs, rhs) = spec.integer_form();
    let eval = |p: &[BigInt], n: &BigInt| p.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c);
    let mut values: Vec<BigInt> = initial.iter().map(|v| BigInt::from(v.clone())).collect();
    values.reserve(nmax + 1 - values.len());
    for n in initial.len()..=nmax {
        let nb = BigInt::from(n);
        let den = eval(&lhs, &nb);
        if den.is_zero() {
            return Err(Error::Singularity { spec: spec.name.clone(), n: n as i64 });
        }
        let mut num = BigInt::zero();
        for (i, p) in rhs.iter().enumerate() {
            let prev = &values[n - 1 - i];
            if !prev.is_zero() {
                num += eval(p, &nb) * prev;
            }
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::inconsistency(format!(
                "{}: term {n} is {num}/{den}, not a natural number",
                spec.name
            )));
        }
        values.push(q);
    }
    values
        .iter()
        .map(|v| integer_to_natural(v).ok_or_else(|| Error::inconsistency("negative term")))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecurrenceKind {
    TypeC,
    TypeD,
}

impl RecurrenceKind {
    pub fn spec_name(self, sigma: u32) -> String {
        match self {
            RecurrenceKind::TypeC => format!("TypeC-sigma{sigma}"),
            RecurrenceKind::TypeD => format!("TypeD-sigma{sigma}"),
        }
    }
}

fn p(desc: &[i64], den: i64) -> Polynomial {
    Polynomial::from_descending(desc).div_int(den)
}

fn type_c(sigma: u32) -> Option<RecurrenceSpec> {
    let name = RecurrenceKind::TypeC.spec_name(sigma);
    let one = Polynomial::constant(rat_int(1));
    let (rhs, from) = match sigma {
        1 => (vec![p(&[2, -1], 1), p(&[1], 1)], 2),
        2 => (
            vec![p(&[9, -9, -3], 2), p(&[9, -24, 20], 2), p(&[12, -25], 2), p(&[5], 2)],
            4,
        ),
        3 => (
            vec![
                p(&[64, -96, 20, -49], 6),
                p(&[144, -708, 1157, -650], 3),
                p(&[80, -382, 641, -511], 3),
                p(&[128, -1308, 5392, -7915], 6),
                p(&[336, -2940, 6853], 6),
                p(&[336, -1703], 6),
                p(&[58], 3),
            ],
            7,
        ),
        4 => (
            vec![
                p(&[625, -1250, 625, -300, -543], 24),
                p(&[27500, -184000, 447500, -473075, 180003], 72),
                p(&[336875, -2546500, 7679675, -12016800, 8048577], 864),
                p(&[4833125, -77581625, 476892700, -1304291160, 1325759504], 2592),
                p(&[1700625, 28316750, -605973450, 3123850885, -5033477363], 7776),
                p(&[2670000, -64380500, 704577200, -3610058445, 6818722190], 7776),
                p(&[2002500, -51976000, 517392050, -2252744530, 3561765885], 7776),
                p(&[9078000, -209915400, 1640828980, -4301927039], 7776),
                p(&[5393400, -91413680, 390747263], 2592),
                p(&[1593990, -14522219], 972),
                p(&[310343], 648),
            ],
            11,
        ),
        _ => return None,
    };
    Some(RecurrenceSpec::new(name, one, rhs, from).expect("built-in Type C spec"))
}

fn type_d(sigma: u32) -> Option<RecurrenceSpec> {
    let name = RecurrenceKind::TypeD.spec_name(sigma);
    let spec = match sigma {
        1 => {
            let c = type_c(1)?;
            RecurrenceSpec::new(name, c.lhs, c.rhs, c.valid_from)
        }
        // lhs vanishes at n = 2
        2 => RecurrenceSpec::new(
            name,
            p(&[1, -2], 1),
            vec![p(&[9, -27, 17, 0], 2), p(&[12, -30, 13], 2), p(&[5, -5], 2)],
            3,
        ),
        3 => RecurrenceSpec::with_auto_start(
            name,
            p(&[64, -360, 762, -547], 1).scale(&rat_int(3)),
            vec![
                p(&[2048, -14592, 42304, -58384, 36972, -10888, 2381], 1),
                p(&[5376, -35616, 92200, -110788, 54186, -5365], 1),
                p(&[5376, -27552, 52616, -45620, 10514], 1),
                p(&[1856, -4872, 6786, -2349], 1),
            ],
            4,
        ),
        4 => RecurrenceSpec::with_auto_start(
            name,
            p(
                &[
                    16687500, -209150000, 1070031875, -3019737375, 4945130775, -4329975510,
                    1513065336,
                ],
                1,
            )
            .scale(&rat_int(72)),
            vec![
                p(
                    &[
                        31289062500,
                        -454734375000,
                        2821911328125,
                        -10081802109375,
                        22781118187500,
                        -33185759803125,
                        30632133843750,
                        -17235043672875,
                        5483042423925,
                        -700627863570,
                        -57348303408,
                    ],
                    1,
                ),
                p(
                    &[
                        141843750000,
                        -1990540625000,
                        11724386562500,
                        -39078979093750,
                        81505745228125,
                        -107513140175625,
                        84513872351000,
                        -33225357802500,
                        2737777538500,
                        1197797898465,
                    ],
                    1,
                ),
                p(
                    &[
                        252815625000,
                        -3168622500000,
                        16127100406250,
                        -45548278450000,
                        80090937641250,
                        -86115353337125,
                        47445915625400,
                        -6693899844450,
                        -2609871946015,
                    ],
                    1,
                ),
                p(
                    &[
                        199248750000,
                        -1999129125000,
                        7757225837500,
                        -16990061751250,
                        23960112482875,
                        -17664322875275,
                        4396729093865,
                        802753105180,
                    ],
                    1,
                ),
                p(
                    &[
                        58189312500,
                        -380170175000,
                        957510585625,
                        -1734293884125,
                        1621184408800,
                        -573345040895,
                        -48634580313,
                    ],
                    1,
                ),
            ],
            5,
        ),
        _ => return None,
    };
    Some(spec.expect("built-in Type D spec"))
}

/// The eight built-in specs: Type C then Type D, each for `sigma = 1..4`.
pub fn builtin_recurrences() -> Vec<RecurrenceSpec> {
    [RecurrenceKind::TypeC, RecurrenceKind::TypeD]
        .into_iter()
        .flat_map(|kind| (1..=4).filter_map(move |s| builtin_recurrence(kind, s)))
        .collect()
}

pub fn builtin_recurrence(kind: RecurrenceKind, sigma: u32) -> Option<RecurrenceSpec> {
    match kind {
        RecurrenceKind::TypeC => type_c(sigma),
        RecurrenceKind::TypeD => type_d(sigma),
    }
}

/// Runs a built-in recurrence from initial values produced by [`g_by_sum`].
pub fn g_by_recurrence(kind: RecurrenceKind, sigma: u32, nmax: u32) -> Result<SequenceRun> {
    let spec = builtin_recurrence(kind, sigma).ok_or_else(|| {
        Error::precondition(format!("no built-in {kind:?} recurrence for sigma = {sigma}"))
    })?;
    let start = spec.valid_from() as u32;
    let seed = g_by_sum(sigma, start.saturating_sub(1))?;
    let values = run_recurrence(&spec, &seed.values, nmax as usize)?;
    Ok(SequenceRun { sigma, values, method: Method::Recurrence(spec.name().to_string()) })
}

/// Evaluation methods selectable by name (`sum`, `multinomial`, `moments`,
/// `typec`, `typed`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GMethod {
    Sum,
    Multinomial,
    Moments,
    TypeC,
    TypeD,
}

impl FromStr for GMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sum" => Ok(GMethod::Sum),
            "multinomial" => Ok(GMethod::Multinomial),
            "moments" => Ok(GMethod::Moments),
            "typec" => Ok(GMethod::TypeC),
            "typed" => Ok(GMethod::TypeD),
            other => Err(Error::precondition(format!("unknown method `{other}`"))),
        }
    }
}

impl fmt::Display for GMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GMethod::Sum => "sum",
            GMethod::Multinomial => "multinomial",
            GMethod::Moments => "moments",
            GMethod::TypeC => "typec",
            GMethod::TypeD => "typed",
        };
        f.write_str(s)
    }
}

/// `G_sigma(0..=nmax)` by the chosen method.
pub fn g_run(method: GMethod, sigma: u32, nmax: u32) -> Result<SequenceRun> {
    match method {
        GMethod::Sum => g_by_sum(sigma, nmax),
        GMethod::Multinomial => {
            guard::check("multinomial_n", nmax as u64, Guards::global().multinomial_n)?;
            let values = (0..=nmax).map(|n| g_multinomial(sigma, n)).collect::<Result<_>>()?;
            Ok(SequenceRun { sigma, values, method: Method::Multinomial })
        }
        GMethod::Moments => {
            let values = (0..=nmax).map(|n| g_moments(sigma, n)).collect::<Result<_>>()?;
            Ok(SequenceRun { sigma, values, method: Method::Moments })
        }
        GMethod::TypeC => g_by_recurrence(RecurrenceKind::TypeC, sigma, nmax),
        GMethod::TypeD => g_by_recurrence(RecurrenceKind::TypeD, sigma, nmax),
    }
}

/// Bessel polynomial `y_n(z) = sum_{i=0}^n (n+i)! z^i / ((n-i)! i! 2^i)`.
pub fn bessel_y(n: u32, z: &Rational) -> Rational {
    let fact = factorial_table(2 * n as usize);
    let mut total = Rational::zero();
    let mut zpow = Rational::one();
    for i in 0..=n as usize {
        let c = Rational::new(
            BigInt::from(fact[n as usize + i].clone()),
            BigInt::from(&fact[n as usize - i] * &fact[i]) << i,
        );
        total += c * &zpow;
        zpow *= z;
    }
    total
}

/// `((sigma+1) n)! / (n! ((sigma+1)!)^n)`, the leading asymptotic scale
/// without the factor `e`.
pub fn leading_scale(sigma: u32, n: u32) -> Rational {
    let s1 = sigma as u64 + 1;
    let num = factorial(s1 * n as u64);
    let den = factorial(n as u64) * factorial(s1).pow(n);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `G_sigma(n) / r(n)` with `r(n) = e ((sigma+1) n)! / (n! ((sigma+1)!)^n)`.
/// The quotient is exact until the final division by `e`.
pub fn asymptotic_ratio(sigma: u32, n: u32, values: &SequenceRun) -> Result<Decimal> {
    let g = values.values.get(n as usize).ok_or_else(|| {
        Error::precondition(format!("n = {n} is beyond the run (nmax = {})", values.nmax()))
    })?;
    let exact = rational_from_natural(g) / leading_scale(sigma, n);
    Ok(Decimal::from_rational(&(exact / e_approx())))
}

/// `1 + 1/(3n) + 1/(54 n^2) - 8/(81 n^3)`.
pub fn sigma2_correction(n: u32) -> Rational {
    let n = rat_int(n as i64);
    rat_int(1) + rat(1, 3) / &n + rat(1, 54) / (&n * &n) - rat(8, 81) / (&n * &n * &n)
}

/// Four-term asymptotic value of `G_2(n)`.
pub fn asymptotic_sigma2(n: u32) -> Result<Decimal> {
    if n == 0 {
        return Err(Error::precondition("asymptotic expansion needs n >= 1"));
    }
    Ok(Decimal::from_rational(&(e_approx() * leading_scale(2, n) * sigma2_correction(n))))
}

/// `|G_2(n) / asymptotic_sigma2(n) - 1|`, computed exactly up to the
/// approximation of `e`.
pub fn sigma2_relative_error(n: u32, g: &Natural) -> Result<Decimal> {
    if n == 0 {
        return Err(Error::precondition("asymptotic expansion needs n >= 1"));
    }
    let approx = e_approx() * leading_scale(2, n) * sigma2_correction(n);
    let rel = rational_from_natural(g) / approx - rat_int(1);
    Ok(Decimal::from_rational(&rel.abs()))
}
