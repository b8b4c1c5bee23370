//! Brute-force views of the game: the steal sequences themselves, their
//! partitions, and full playouts including the order in which players pick.

use giftcount::arith::factorial;
use giftcount::oracle::{
    count_full_game_playouts, count_gamma_sequences, enumerate_gamma_sequences, GameConfig,
};

fn main() -> giftcount::Result<()> {
    println!("steal sequences with 3 gifts, each stolen at most once:");
    for seq in enumerate_gamma_sequences(1, 2)? {
        let blocks: Vec<String> = seq
            .to_partition()
            .iter()
            .map(|b| b.iter().map(u32::to_string).collect::<String>())
            .collect();
        println!("  {seq:<6} partition {}", blocks.join(", "));
    }

    println!("\nH_sigma(n) = n! G_sigma(n-1):");
    for sigma in 0..=2 {
        for gifts in 1..=4 {
            let h = count_full_game_playouts(GameConfig::new(sigma, gifts)?)?;
            let g = count_gamma_sequences(sigma, gifts - 1)?;
            assert_eq!(h, factorial(gifts as u64) * &g);
            println!("  sigma={sigma} n={gifts}: H = {h} = {gifts}! * {g}");
        }
    }
    Ok(())
}
