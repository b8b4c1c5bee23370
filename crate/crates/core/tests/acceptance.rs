//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::time::Instant;

use giftcount::arith::{factorial, rat, rat_int, rational_from_natural, Decimal, Natural};
use giftcount::cli;
use giftcount::genfun::{check_egf_e, check_egf_g1_closed_form, check_g1_ode};
use giftcount::guesser::{guess_recurrence, verify_spec_on_terms, GuessQuery};
use giftcount::oracle::{
    count_full_game_playouts, count_gamma_sequences, count_restricted_partitions,
    enumerate_gamma_sequences, for_each_restricted_partition, GameConfig,
};
use giftcount::sequences::{
    asymptotic_ratio, builtin_recurrence, g_by_recurrence, g_by_sum, g_moments, g_multinomial,
    sigma2_relative_error, RecurrenceKind, SequenceRun,
};
use giftcount::stirling::{
    e1_closed, e2_hypergeometric, e2_hypergeometric_branch, e2_sum, e_miller, e_multinomial,
    e_table_vertical, hyp_terminating, E2Branch, HypSpec,
};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cli_run(args: &str) -> cli::Outcome {
    cli::run(std::iter::once("giftcount").chain(args.split_whitespace()))
}

fn nats(v: &[u64]) -> Vec<Natural> {
    v.iter().map(|&x| Natural::from(x)).collect()
}

fn c1_sigma1_values() -> Check {
    let out = cli_run("g --sigma 1 --nmax 4");
    ensure(out.code == 0 && out.stdout == "1\n2\n7\n37\n266\n", || format!("g printed {:?}", out.stdout))?;
    let out = cli_run("oracle --sigma 1 --gifts 3");
    ensure(out.code == 0 && out.stdout == "42\n", || format!("oracle printed {:?}", out.stdout))?;
    let seqs: Vec<String> =
        enumerate_gamma_sequences(1, 2).map_err(err)?.iter().map(|s| s.to_string()).collect();
    let want = ["123", "1213", "12123", "1223", "12213", "1123", "11223"];
    ensure(seqs == want, || format!("sequences {seqs:?}"))
}

fn c2_table_one() -> Check {
    let want = nats(&[1, 3, 3]);
    let table = e_table_vertical(1, 2).map_err(err)?;
    for (i, k) in (2..=4).enumerate() {
        let got = [
            table.get(2, k),
            e_multinomial(1, 2, k),
            e_miller(1, 2, k).map_err(err)?,
            e1_closed(2, k),
            count_restricted_partitions(2, k as u32, 2).map_err(err)?,
        ];
        ensure(got.iter().all(|v| *v == want[i]), || format!("k = {k}: {got:?}"))?;
    }
    Ok(())
}

fn c3_oracle_equivalence() -> Check {
    for sigma in 0..=3u32 {
        let s1 = sigma + 1;
        let table = e_table_vertical(sigma, 7).map_err(err)?;
        let g = g_by_sum(sigma, 7).map_err(err)?;
        for n in 0..=7u32 {
            let mut row_total = Natural::from(0u32);
            for k in 0..=s1 * n + 1 {
                let oracle = count_restricted_partitions(n, k, s1).map_err(err)?;
                if k <= 12 {
                    let mut listed = 0u64;
                    for_each_restricted_partition(n, k, s1, |_| listed += 1).map_err(err)?;
                    ensure(Natural::from(listed) == oracle, || format!("listing ({sigma},{n},{k})"))?;
                }
                let (ni, ki) = (n as i64, k as i64);
                let methods = [
                    ("vertical", table.get(ni, ki)),
                    ("multinomial", e_multinomial(sigma, ni, ki)),
                    ("miller", e_miller(sigma, ni, ki).map_err(err)?),
                ];
                for (name, v) in methods {
                    ensure(v == oracle, || format!("{name} E_{sigma}({n},{k}) = {v}, oracle {oracle}"))?;
                }
                if sigma == 1 {
                    ensure(e1_closed(ni, ki) == oracle, || format!("closed E_1({n},{k})"))?;
                }
                if sigma == 2 {
                    ensure(e2_sum(ni, ki) == oracle, || format!("sum E_2({n},{k})"))?;
                }
                row_total += oracle;
            }
            let gamma = count_gamma_sequences(sigma, n).map_err(err)?;
            ensure(gamma == row_total && gamma == g.values[n as usize], || {
                format!("sigma {sigma} n {n}: gamma {gamma}, partitions {row_total}")
            })?;
        }
    }
    Ok(())
}

fn c4_full_game() -> Check {
    for sigma in 0..=2 {
        let g = g_by_sum(sigma, 3).map_err(err)?;
        for n in 1..=4u32 {
            let h = count_full_game_playouts(GameConfig::new(sigma, n).map_err(err)?).map_err(err)?;
            let want = factorial(n as u64) * &g.values[n as usize - 1];
            ensure(h == want, || format!("H_{sigma}({n}) = {h}, want {want}"))?;
        }
    }
    Ok(())
}

fn c5_recurrences() -> Check {
    for sigma in 1..=4 {
        let sum = g_by_sum(sigma, 60).map_err(err)?;
        for kind in [RecurrenceKind::TypeC, RecurrenceKind::TypeD] {
            // run_recurrence rejects any inexact division
            let rec = g_by_recurrence(kind, sigma, 60).map_err(err)?;
            ensure(rec.values == sum.values, || format!("{} differs from sum", rec.method))?;
        }
        let d = builtin_recurrence(RecurrenceKind::TypeD, sigma).ok_or("missing Type D")?;
        ensure(d.order() == sigma as usize + 1, || format!("{} has order {}", d.name(), d.order()))?;
    }
    Ok(())
}

fn c6_discrepancy() -> Check {
    let values = [
        g_by_sum(2, 3).map_err(err)?.values[3].clone(),
        g_multinomial(2, 3).map_err(err)?,
        g_moments(2, 3).map_err(err)?,
        g_by_recurrence(RecurrenceKind::TypeC, 2, 3).map_err(err)?.values[3].clone(),
        g_by_recurrence(RecurrenceKind::TypeD, 2, 3).map_err(err)?.values[3].clone(),
        (3..=9).try_fold(Natural::from(0u32), |acc, k| {
            count_restricted_partitions(3, k, 3).map(|v| acc + v)
        }).map_err(err)?,
    ];
    ensure(values.iter().all(|v| *v == Natural::from(842u32)), || format!("{values:?}"))?;
    let out = cli_run("verify --sigma 2");
    ensure(out.code == 0, || format!("verify exit {}:\n{}", out.code, out.stdout))?;
    ensure(out.stdout.contains("PASS g2-at-3-all-methods"), || "missing n = 3 check".into())?;
    let note = out.stdout.lines().find(|l| l.starts_with("NOTE:")).unwrap_or("");
    ensure(note.contains("18252") && note.contains("842"), || format!("note {note:?}"))
}

fn c7_generating_functions() -> Check {
    for sigma in 0..=3u32 {
        for n in 0..=6u32 {
            let r = check_egf_e(sigma, n, ((sigma + 1) * n) as usize).map_err(err)?;
            ensure(r.passed(), || r.to_string())?;
        }
    }
    let r = check_egf_g1_closed_form(40).map_err(err)?;
    ensure(r.passed() && r.orders_checked == 41, || r.to_string())?;
    let r = check_g1_ode(40).map_err(err)?;
    ensure(r.passed(), || r.to_string())
}

fn c8_hypergeometric() -> Check {
    let g = g_by_sum(1, 20).map_err(err)?;
    for n in 0..=20i64 {
        let spec = HypSpec::new(vec![rat_int(n + 1), rat_int(-n)], vec![], rat(-1, 2)).map_err(err)?;
        let v = hyp_terminating(&spec).map_err(err)?;
        ensure(v == rational_from_natural(&g.values[n as usize]), || format!("2F0 at n = {n}"))?;
    }
    let table = e_table_vertical(2, 10).map_err(err)?;
    for n in 0..=10i64 {
        for k in 0..=3 * n + 1 {
            let t = table.get(n, k);
            ensure(e2_hypergeometric(n, k).map_err(err)? == t && e2_sum(n, k) == t, || {
                format!("E_2({n},{k})")
            })?;
        }
        if n > 0 {
            let lo = e2_hypergeometric_branch(n, 2 * n, E2Branch::LowExcess).map_err(err)?;
            let hi = e2_hypergeometric_branch(n, 2 * n, E2Branch::HighExcess).map_err(err)?;
            ensure(lo == hi && lo == table.get(n, 2 * n), || format!("branches at n = {n}"))?;
        }
    }
    Ok(())
}

fn c9_asymptotics() -> Check {
    let one = Decimal::from_int(1);
    for sigma in 1..=3 {
        let run: SequenceRun = g_by_sum(sigma, 50).map_err(err)?;
        let far = asymptotic_ratio(sigma, 50, &run).map_err(err)?.sub(&one).abs();
        let near = asymptotic_ratio(sigma, 25, &run).map_err(err)?.sub(&one).abs();
        ensure(far.significant(30).len() >= 30, || "too few digits".into())?;
        ensure(far < near, || format!("sigma {sigma}: {far} not below {near}"))?;
    }
    let g = g_by_sum(2, 40).map_err(err)?;
    let e40 = sigma2_relative_error(40, &g.values[40]).map_err(err)?;
    let e20 = sigma2_relative_error(20, &g.values[20]).map_err(err)?;
    let quarter = Decimal::from_rational(&rat(1, 4));
    ensure(e40 <= e20.mul(&quarter), || format!("error {e40} vs {e20}"))
}

fn c10_guesser() -> Check {
    for (sigma, shown, order, degree, guard) in [(1u32, 15usize, 2, 1, 5), (2, 35, 3, 3, 10)] {
        let all = g_by_sum(sigma, shown as u32 + 9).map_err(err)?.values;
        let q = GuessQuery::new(all[..shown].to_vec(), order, degree, guard).map_err(err)?;
        let spec = guess_recurrence(&q).map_err(err)?.ok_or(format!("sigma {sigma}: NONE"))?;
        ensure(spec.order() <= order, || format!("order {}", spec.order()))?;
        if sigma == 1 {
            ensure(spec.order() == 2 && spec.rhs().iter().all(|p| p.degree().unwrap_or(0) <= 1), || {
                spec.to_string()
            })?;
        }
        let bad = verify_spec_on_terms(&spec, &all).map_err(err)?;
        ensure(bad.is_none(), || format!("sigma {sigma}: fails at held-out n = {bad:?}"))?;
    }
    Ok(())
}

fn c11_bench() -> Check {
    let t = Instant::now();
    let out = cli_run("bench --sigma 2 --nmax 200 --methods typec,typed");
    let elapsed = t.elapsed().as_secs_f64();
    ensure(out.code == 0 && out.stdout.contains("agree"), || format!("{out:?}"))?;
    ensure(elapsed < 10.0, || format!("took {elapsed:.1} s"))?;
    let c = g_by_recurrence(RecurrenceKind::TypeC, 2, 200).map_err(err)?;
    let mut tampered = g_by_recurrence(RecurrenceKind::TypeD, 2, 200).map_err(err)?;
    ensure(cli::first_disagreement(&[c.clone(), tampered.clone()]).is_none(), || "disagree".into())?;
    tampered.values[150] += 1u32;
    ensure(cli::first_disagreement(&[c, tampered]).map(|d| d.2) == Some(150), || {
        "tampered run not detected".into()
    })
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("1 sigma-1 values, 42 playouts, seven steal sequences", c1_sigma1_values),
        ("2 E_1(2, k) = 1, 3, 3 by every method", c2_table_one),
        ("3 E methods and gamma count match enumeration", c3_oracle_equivalence),
        ("4 H_sigma(n) = n! G_sigma(n-1) by simulation", c4_full_game),
        ("5 Type C and Type D reproduce the sum to n = 60", c5_recurrences),
        ("6 G_2(3) = 842 everywhere, discrepancy note printed", c6_discrepancy),
        ("7 generating-function identities", c7_generating_functions),
        ("8 hypergeometric forms", c8_hypergeometric),
        ("9 asymptotic errors shrink", c9_asymptotics),
        ("10 guessed recurrences hold on unseen terms", c10_guesser),
        ("11 bench agreement for sigma = 2, n <= 200", c11_bench),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let res = check();
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("PASS criterion {name} ({secs:.2} s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2} s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
