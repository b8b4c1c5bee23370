//! Prints the restricted Stirling table E_sigma(n, k) and checks that the
//! vertical recurrence, multinomial profiles and Miller's method agree.
//!
//!     cargo run --example stirling_table -- 2 5

use giftcount::stirling::{e_miller, e_multinomial, e_table_vertical};

fn main() -> giftcount::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let sigma = args.next().unwrap_or(1);
    let max_n = args.next().unwrap_or(5);

    let table = e_table_vertical(sigma, max_n)?;
    for n in 0..=max_n {
        let row: Vec<String> = (n..=(sigma + 1) * n)
            .map(|k| table.get(n as i64, k as i64).to_string())
            .collect();
        println!("n={n:<2} k={n}..{}: {}", (sigma + 1) * n, row.join(" "));
    }

    for n in 0..=max_n as i64 {
        for k in 0..=(sigma as i64 + 1) * n {
            let v = table.get(n, k);
            assert_eq!(e_multinomial(sigma, n, k), v);
            assert_eq!(e_miller(sigma, n, k)?, v);
        }
    }
    println!("vertical, multinomial and Miller agree on every cell");
    Ok(())
}
