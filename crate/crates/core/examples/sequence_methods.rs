//! G_sigma(n) by summation, multinomial profiles and moments, side by side.

use giftcount::sequences::{g_run, GMethod};

fn main() -> giftcount::Result<()> {
    for sigma in 1..=3 {
        let sum = g_run(GMethod::Sum, sigma, 6)?;
        let multi = g_run(GMethod::Multinomial, sigma, 6)?;
        let moments = g_run(GMethod::Moments, sigma, 6)?;
        assert_eq!(sum.values, multi.values);
        assert_eq!(sum.values, moments.values);
        let shown: Vec<String> = sum.values.iter().map(|v| v.to_string()).collect();
        println!("G_{sigma}(0..6) = {}", shown.join(", "));
    }
    Ok(())
}
