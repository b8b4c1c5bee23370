//! Exact power-series checks of the exponential generating functions.

use giftcount::genfun::{check_egf_e, check_egf_g1_closed_form, check_g1_ode};

fn main() -> giftcount::Result<()> {
    for sigma in 1..=3 {
        for n in 0..=6 {
            let r = check_egf_e(sigma, n, ((sigma + 1) * n) as usize)?;
            assert!(r.passed(), "{r}");
        }
    }
    println!("row EGFs agree for sigma <= 3, n <= 6");
    println!("{}", check_egf_g1_closed_form(40)?);
    println!("{}", check_g1_ode(40)?);
    Ok(())
}
