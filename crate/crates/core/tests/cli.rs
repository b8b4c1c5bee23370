use std::process::Command;

use giftcount::output::parse_bfile;
use giftcount::sequences::g_by_sum;

fn giftcount(args: &str) -> (i32, String, String) {
    giftcount_env(args, None)
}

fn giftcount_env(args: &str, guard_max: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_giftcount"));
    cmd.args(args.split_whitespace()).env_remove("GIFTCOUNT_GUARD_MAX");
    if let Some(v) = guard_max {
        cmd.env("GIFTCOUNT_GUARD_MAX", v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn g_examples() {
    assert_eq!(giftcount("g --sigma 1 --nmax 4 --format plain"), (0, "1\n2\n7\n37\n266\n".into(), String::new()));
    assert_eq!(giftcount("g --sigma 2 --nmax 2 --format bfile").1, "0 1\n1 3\n2 31\n");
    assert_eq!(giftcount("g --sigma 0 --nmax 5").1, "1\n1\n1\n1\n1\n1\n");
    assert_eq!(giftcount("g --sigma 1 --nmax 2 --format csv").1, "n,value\n0,1\n1,2\n2,7\n");
    assert_eq!(giftcount("g --sigma 1 --nmax 2 --format bfile --offset 1").1, "1 1\n2 2\n3 7\n");
    for m in ["multinomial", "moments", "typec", "typed"] {
        assert_eq!(giftcount(&format!("g --sigma 2 --nmax 5 --method {m}")).1, "1\n3\n31\n842\n45296\n4061871\n");
    }
}

#[test]
fn e_examples() {
    assert_eq!(giftcount("e --sigma 1 --n 2").1, "1 3 3\n");
    assert_eq!(giftcount("e --sigma 2 --n 3 --k 9").1, "280\n");
    assert_eq!(giftcount("e --sigma 2 --n 3 --k 2").1, "0\n");
    assert_eq!(giftcount("e --sigma 1 --n 2 --format bfile").1, "2 1\n3 3\n4 3\n");
}

#[test]
fn verify_examples() {
    let (code, out, _) = giftcount("verify --sigma 1 --nmax 20");
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));

    let (code, out, _) = giftcount("verify --sigma 2 --nmax 20");
    assert_eq!(code, 0, "{out}");
    let note = out.lines().find(|l| l.starts_with("NOTE:")).expect("note");
    assert!(note.contains("18252") && note.contains("842"));

    let (code, out, _) = giftcount("verify --sigma 0 --nmax 5");
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 2 && out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn oracle_examples() {
    assert_eq!(giftcount("oracle --sigma 1 --gifts 3").1, "42\n");
    assert_eq!(giftcount("oracle --sigma 0 --gifts 4").1, "24\n");
    assert_eq!(giftcount("oracle --sigma 2 --gifts 2").1, "6\n");
    assert_eq!(
        giftcount("oracle --sigma 1 --gifts 3 --list").1,
        "42\n123\n1213\n12123\n1223\n12213\n1123\n11223\n"
    );
}

#[test]
fn guess_examples() {
    let (code, out, _) = giftcount("guess --sigma 1 --terms 15 --max-order 2 --max-degree 1");
    assert_eq!(code, 0);
    assert!(out.starts_with("lhs: 1\n"), "{out}");
    assert!(out.contains("a(n) + (-2*n + 1)*a(n-1) - a(n-2) = 0"), "{out}");
    assert_eq!(giftcount("guess --sigma 1 --terms 15 --max-order 1 --max-degree 0").1, "NONE\n");
    let out = giftcount("guess --sigma 1 --terms 12 --max-order 2 --max-degree 1 --demo-constant").1;
    assert!(out.contains("a(n) - a(n-1) = 0"), "{out}");
    assert_eq!(giftcount("guess --sigma 1 --terms 5 --max-order 2 --max-degree 1").0, 2);
}

#[test]
fn bench_examples() {
    let (code, out, err) = giftcount("bench --sigma 2 --nmax 200 --methods typec,typed");
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("agree"));
    assert_eq!(err.lines().filter(|l| l.contains(" ms")).count(), 2);
    assert!(!out.contains(" ms"), "timings belong on stderr");
    assert_eq!(giftcount("bench --sigma 1 --nmax 50 --methods sum,typec").0, 0);
    assert_eq!(giftcount("bench --sigma 0 --nmax 5 --methods typec,typed").0, 2);
    assert_eq!(giftcount("bench --sigma 5 --nmax 5 --methods sum,typed").0, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(giftcount("").0, 2);
    assert_eq!(giftcount("g --sigma 1").0, 2);
    assert_eq!(giftcount("g --sigma 1 --nmax 2 --format xml").0, 2);
    assert_eq!(giftcount("--help").0, 0);
    let (code, _, err) = giftcount("g --sigma 1 --nmax 9 --method multinomial");
    assert_eq!(code, 2);
    assert!(err.contains("multinomial_n"), "{err}");
    assert_eq!(giftcount("oracle --sigma 1 --gifts 6").0, 2);
    assert_eq!(giftcount("oracle --sigma 1 --gifts 4 --list").0, 2);
    assert_eq!(giftcount("oracle --sigma 1 --gifts 0").0, 2);
}

#[test]
fn guard_env_raises_limits() {
    assert_eq!(giftcount("g --sigma 1 --nmax 9 --method multinomial").0, 2);
    let (code, out, _) = giftcount_env("g --sigma 1 --nmax 9 --method multinomial", Some("9"));
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("90960751"));
}

#[test]
fn bfile_round_trip_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g3.txt");
    let (code, out, _) = giftcount(&format!("g --sigma 3 --nmax 40 --format bfile --out {}", path.display()));
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with('\n') && !text.ends_with("\n\n"));
    let (offset, values) = parse_bfile(&text).unwrap();
    assert_eq!(offset, 0);
    assert_eq!(values, g_by_sum(3, 40).unwrap().values);
}
