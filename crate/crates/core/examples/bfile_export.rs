//! Writes G_sigma as an OEIS b-file and reads it back.
//!
//!     cargo run --example bfile_export -- 1 30 /tmp/g1.txt

use giftcount::output::{parse_bfile, render, OutputFormat};
use giftcount::sequences::g_by_sum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let sigma: u32 = args.first().map_or(Ok(1), |s| s.parse())?;
    let nmax: u32 = args.get(1).map_or(Ok(30), |s| s.parse())?;

    let run = g_by_sum(sigma, nmax)?;
    let text = render(&run.values, 0, OutputFormat::Bfile);
    match args.get(2) {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    let (offset, values) = parse_bfile(&text)?;
    assert_eq!((offset, values), (0, run.values));
    eprintln!("round trip ok");
    Ok(())
}
