//! Rediscovers recurrences for G_1 and G_2 from raw terms, then checks the
//! guesses on terms that were never shown to the guesser.

use giftcount::guesser::{guess_recurrence, verify_spec_on_terms, GuessQuery};
use giftcount::sequences::g_by_sum;

fn main() -> giftcount::Result<()> {
    for (sigma, shown, order, degree, guard) in [(1, 15, 2, 1, 5), (2, 35, 3, 3, 10)] {
        let all = g_by_sum(sigma, shown + 9)?.values;
        let q = GuessQuery::new(all[..shown as usize].to_vec(), order, degree, guard)?;
        match guess_recurrence(&q)? {
            Some(spec) => {
                let bad = verify_spec_on_terms(&spec, &all)?;
                println!("sigma={sigma}, {shown} terms:\n{spec}");
                println!("holds on the next 10 terms: {}\n", bad.is_none());
            }
            None => println!("sigma={sigma}: no recurrence within order {order}, degree {degree}\n"),
        }
    }
    Ok(())
}
