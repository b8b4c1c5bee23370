//! Cross-method verification suite behind `giftcount verify`.
//!
//! Each check compares two or more independent computations exactly. Checks
//! never abort the suite: an error inside a check is recorded as a failure
//! with the error text as detail.

use num_traits::Zero;

use crate::arith::{factorial, rat, rat_int, rational_from_natural, Natural};
use crate::error::Result;
use crate::genfun::{check_egf_e, check_egf_g1_closed_form, check_g1_ode};
use crate::oracle::{
    count_full_game_playouts, count_gamma_sequences, count_restricted_partitions,
    enumerate_gamma_sequences, GameConfig,
};
use crate::sequences::{
    bessel_y, builtin_recurrence, g_by_recurrence, g_by_sum, g_moments, g_multinomial,
    RecurrenceKind, SequenceRun,
};
use crate::stirling::{
    e1_closed, e2_hypergeometric, e2_hypergeometric_branch, e2_sum, e_miller, e_multinomial,
    e_table_vertical, hyp_terminating, validate_e_identities, E2Branch, HypSpec,
};

/// The value printed as `G_2(3)` in the published σ = 2 recurrence's initial
/// conditions. Every method here gives 842; 18252 is `G_3(3)`.
pub const PUBLISHED_G2_3: u64 = 18252;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `PASS <name>` / `FAIL <name>` lines, then `NOTE:` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{tag} {}\n", c.name));
            } else {
                out.push_str(&format!("{tag} {} ({})\n", c.name, c.detail));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("NOTE: {n}\n"));
        }
        out
    }
}

struct Suite {
    checks: Vec<CheckResult>,
    notes: Vec<String>,
}

impl Suite {
    /// `f` returns `Ok(None)` on success or `Ok(Some(reason))` on failure.
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
        let (passed, detail) = match f() {
            Ok(None) => (true, String::new()),
            Ok(Some(why)) => (false, why),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckResult { name: name.into(), passed, detail });
    }
}

fn first_diff(a: &SequenceRun, b: &SequenceRun) -> Option<String> {
    if a.values.len() != b.values.len() {
        return Some(format!("{} has {} terms, {} has {}", a.method, a.values.len(), b.method, b.values.len()));
    }
    a.values
        .iter()
        .zip(&b.values)
        .position(|(x, y)| x != y)
        .map(|n| format!("{} and {} differ at n = {n}", a.method, b.method))
}

/// Runs every check that applies to `sigma`, with sizes capped by `nmax`.
/// `deep` adds the full-game simulator and cell-by-cell partition oracle.
pub fn run_verification(sigma: u32, nmax: u32, deep: bool) -> VerifyReport {
    let mut s = Suite { checks: Vec::new(), notes: Vec::new() };
    let s1 = sigma + 1;
    let oracle_n = nmax.min(7).min(30 / s1);

    s.run("g-sum-vs-gamma-oracle", || {
        let g = g_by_sum(sigma, oracle_n)?;
        for n in 0..=oracle_n {
            if count_gamma_sequences(sigma, n)? != g.values[n as usize] {
                return Ok(Some(format!("n = {n}")));
            }
        }
        Ok(None)
    });
    s.run("g-sum-vs-partition-oracle", || {
        let g = g_by_sum(sigma, oracle_n)?;
        for n in 0..=oracle_n {
            let mut total = Natural::zero();
            for k in n..=s1 * n {
                total += count_restricted_partitions(n, k, s1)?;
            }
            if total != g.values[n as usize] {
                return Ok(Some(format!("n = {n}")));
            }
        }
        Ok(None)
    });

    if sigma == 0 {
        s.run("g-sigma0-all-ones", || {
            let g = g_by_sum(0, nmax)?;
            Ok(g.values.iter().position(|v| *v != Natural::from(1u32)).map(|n| format!("n = {n}")))
        });
    } else {
        let e_n = nmax.min(12);
        s.run("e-vertical-vs-multinomial", || {
            let t = e_table_vertical(sigma, e_n)?;
            for n in 0..=e_n as i64 {
                for k in 0..=(s1 as i64) * n + 1 {
                    if e_multinomial(sigma, n, k) != t.get(n, k) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("e-vertical-vs-miller", || {
            let t = e_table_vertical(sigma, e_n)?;
            for n in 0..=e_n as i64 {
                for k in 0..=(s1 as i64) * n + 1 {
                    if e_miller(sigma, n, k)? != t.get(n, k) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("g-sum-vs-multinomial", || {
            let m = nmax.min(6);
            let g = g_by_sum(sigma, m)?;
            for n in 0..=m {
                if g_multinomial(sigma, n)? != g.values[n as usize] {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        });
        s.run("g-sum-vs-moments", || {
            let g = g_by_sum(sigma, nmax)?;
            for n in 0..=nmax {
                if g_moments(sigma, n)? != g.values[n as usize] {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        });
        s.run("egf-e-rows", || {
            for n in 0..=nmax.min(6) {
                let r = check_egf_e(sigma, n, (s1 * n) as usize)?;
                if !r.passed() {
                    return Ok(Some(r.to_string()));
                }
            }
            Ok(None)
        });
    }

    if sigma == 1 {
        s.run("e1-closed-form", || {
            let t = e_table_vertical(1, nmax)?;
            for n in 0..=nmax as i64 {
                for k in 0..=2 * n + 1 {
                    if e1_closed(n, k) != t.get(n, k) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("e1-identities", || {
            let v = validate_e_identities(1, nmax.min(30))?;
            Ok(v.first().map(|x| format!("{} at ({}, {})", x.identity, x.n, x.k)))
        });
        s.run("g1-bessel", || {
            let g = g_by_sum(1, nmax)?;
            for n in 0..=nmax {
                if bessel_y(n, &rat_int(1)) != rational_from_natural(&g.values[n as usize]) {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        });
        s.run("g1-hypergeometric-2f0", || {
            let g = g_by_sum(1, nmax)?;
            for n in 0..=nmax as i64 {
                let spec = HypSpec::new(vec![rat_int(n + 1), rat_int(-n)], vec![], rat(-1, 2))?;
                if hyp_terminating(&spec)? != rational_from_natural(&g.values[n as usize]) {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        });
        s.run("g1-egf-closed-form", || {
            let r = check_egf_g1_closed_form(nmax.max(2) as usize)?;
            Ok(r.first_mismatch.as_ref().map(|_| r.to_string()))
        });
        s.run("g1-ode", || {
            let r = check_g1_ode(nmax.max(3) as usize)?;
            Ok(r.first_mismatch.as_ref().map(|_| r.to_string()))
        });
    }

    if sigma == 2 {
        let e_n = nmax.min(12);
        s.run("e2-single-sum", || {
            let t = e_table_vertical(2, e_n)?;
            for n in 0..=e_n as i64 {
                for k in 0..=3 * n + 1 {
                    if e2_sum(n, k) != t.get(n, k) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("e2-hypergeometric", || {
            let t = e_table_vertical(2, e_n)?;
            for n in 0..=e_n as i64 {
                for k in 0..=3 * n + 1 {
                    if e2_hypergeometric(n, k)? != t.get(n, k) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("e2-hypergeometric-branch-agreement", || {
            for n in 1..=e_n.max(1) as i64 {
                let lo = e2_hypergeometric_branch(n, 2 * n, E2Branch::LowExcess)?;
                let hi = e2_hypergeometric_branch(n, 2 * n, E2Branch::HighExcess)?;
                if lo != hi {
                    return Ok(Some(format!("n = {n}")));
                }
            }
            Ok(None)
        });
        s.run("e2-identities", || {
            let v = validate_e_identities(2, nmax.min(30))?;
            Ok(v.first().map(|x| format!("{} at ({}, {})", x.identity, x.n, x.k)))
        });
        let mut note = None;
        s.run("g2-at-3-all-methods", || {
            let sum = g_by_sum(2, 3)?.values[3].clone();
            let others = [
                ("multinomial", g_multinomial(2, 3)?),
                ("moments", g_moments(2, 3)?),
                ("typec", g_by_recurrence(RecurrenceKind::TypeC, 2, 3)?.values[3].clone()),
                ("typed", g_by_recurrence(RecurrenceKind::TypeD, 2, 3)?.values[3].clone()),
                ("gamma-oracle", count_gamma_sequences(2, 3)?),
                ("partition-oracle", {
                    let mut t = Natural::zero();
                    for k in 3..=9 {
                        t += count_restricted_partitions(3, k, 3)?;
                    }
                    t
                }),
            ];
            if let Some((m, v)) = others.iter().find(|(_, v)| *v != sum) {
                return Ok(Some(format!("sum gives {sum}, {m} gives {v}")));
            }
            let g3 = g_by_sum(3, 3)?.values[3].clone();
            note = Some(format!(
                "G_2(3) = {sum} by sum, multinomial, moments, typec, typed and both oracles; \
                 the published initial value G_2(3) = {PUBLISHED_G2_3} disagrees \
                 (and equals G_3(3) = {g3}). The computed value is used."
            ));
            if sum == Natural::from(PUBLISHED_G2_3) {
                return Ok(Some("computed value unexpectedly equals the published one".into()));
            }
            Ok(None)
        });
        s.notes.extend(note);
    }

    if (1..=4).contains(&sigma) {
        for kind in [RecurrenceKind::TypeC, RecurrenceKind::TypeD] {
            let label = match kind {
                RecurrenceKind::TypeC => "typec",
                RecurrenceKind::TypeD => "typed",
            };
            s.run(format!("recurrence-{label}-vs-sum"), || {
                let sum = g_by_sum(sigma, nmax)?;
                let rec = g_by_recurrence(kind, sigma, nmax)?;
                Ok(first_diff(&sum, &rec))
            });
        }
        s.run("recurrence-typed-order", || {
            let d = builtin_recurrence(RecurrenceKind::TypeD, sigma).expect("sigma in 1..=4");
            Ok((d.order() != s1 as usize).then(|| format!("order {}", d.order())))
        });
    }

    if deep {
        s.run("deep-full-game-factorization", || {
            let top = (nmax + 1).min(4);
            let g = g_by_sum(sigma, top)?;
            for gifts in 1..=top {
                let h = count_full_game_playouts(GameConfig::new(sigma, gifts)?)?;
                let want = factorial(gifts as u64) * &g.values[gifts as usize - 1];
                if h != want {
                    return Ok(Some(format!("H({gifts}) = {h}, expected {want}")));
                }
            }
            Ok(None)
        });
        s.run("deep-e-vs-partition-oracle", || {
            let t = e_table_vertical(sigma, oracle_n)?;
            for n in 0..=oracle_n {
                for k in 0..=s1 * n {
                    if count_restricted_partitions(n, k, s1)? != t.get(n as i64, k as i64) {
                        return Ok(Some(format!("E({n},{k})")));
                    }
                }
            }
            Ok(None)
        });
        s.run("deep-gamma-sequence-structure", || {
            let n = nmax.min(16 / s1).min(4);
            let seqs = enumerate_gamma_sequences(sigma, n)?;
            Ok(seqs
                .iter()
                .find(|q| !q.is_valid(sigma, n))
                .map(|q| format!("invalid sequence {q}")))
        });
    }

    s.checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerifyReport { checks: s.checks, notes: s.notes }
}
