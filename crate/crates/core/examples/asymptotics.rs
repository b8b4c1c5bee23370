//! How fast G_sigma(n) approaches its leading asymptotic form, and the
//! four-term expansion for sigma = 2.

use giftcount::sequences::{asymptotic_ratio, g_by_sum, sigma2_relative_error};

fn main() -> giftcount::Result<()> {
    for sigma in 1..=3 {
        let run = g_by_sum(sigma, 50)?;
        for n in [10, 25, 50] {
            let r = asymptotic_ratio(sigma, n, &run)?;
            println!("sigma={sigma} n={n:<2} G/r = {}", r.significant(30));
        }
    }
    let g2 = g_by_sum(2, 40)?;
    for n in [10, 20, 40] {
        let e = sigma2_relative_error(n, &g2.values[n as usize])?;
        println!("sigma=2 n={n:<2} four-term relative error = {}", e.significant(30));
    }
    Ok(())
}
