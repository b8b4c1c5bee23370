//! Runs the built-in holonomic recurrences to n = 60 and compares them
//! with direct summation. Type D divisions are exact or the run fails.

use giftcount::sequences::{builtin_recurrences, g_by_recurrence, g_by_sum, RecurrenceKind};

fn main() -> giftcount::Result<()> {
    for spec in builtin_recurrences() {
        println!("{}: order {}, valid from n = {}", spec.name(), spec.order(), spec.valid_from());
    }
    println!();
    for sigma in 1..=4 {
        let sum = g_by_sum(sigma, 60)?;
        for kind in [RecurrenceKind::TypeC, RecurrenceKind::TypeD] {
            let rec = g_by_recurrence(kind, sigma, 60)?;
            assert_eq!(rec.values, sum.values, "{}", rec.method);
        }
        println!("sigma={sigma}: both recurrences match summation, G({}) has {} bits",
            60, sum.values[60].bits());
    }

    let d2 = giftcount::sequences::builtin_recurrence(RecurrenceKind::TypeD, 2).unwrap();
    println!("\n{d2}");
    Ok(())
}
