//! Terminating hypergeometric sums: G_1(n) as a 2F0 at -1/2 and E_2(n, k)
//! as a 2F1 at 8/3.

use giftcount::arith::{rat, rat_int, rational_from_natural};
use giftcount::sequences::{bessel_y, g_by_sum};
use giftcount::stirling::{
    e2_hypergeometric, e2_hypergeometric_branch, e2_sum, e_table_vertical, hyp_terminating,
    E2Branch, HypSpec,
};

fn main() -> giftcount::Result<()> {
    let g = g_by_sum(1, 20)?;
    for n in 0..=20i64 {
        let spec = HypSpec::new(vec![rat_int(n + 1), rat_int(-n)], vec![], rat(-1, 2))?;
        let v = hyp_terminating(&spec)?;
        assert_eq!(v, rational_from_natural(&g.values[n as usize]));
        assert_eq!(v, bessel_y(n as u32, &rat_int(1)));
    }
    println!("2F0(n+1, -n; ; -1/2) = y_n(1) = G_1(n) for n <= 20");

    let table = e_table_vertical(2, 10)?;
    for n in 0..=10i64 {
        for k in 0..=3 * n {
            let v = table.get(n, k);
            assert_eq!(e2_hypergeometric(n, k)?, v);
            assert_eq!(e2_sum(n, k), v);
        }
        if n > 0 {
            let lo = e2_hypergeometric_branch(n, 2 * n, E2Branch::LowExcess)?;
            let hi = e2_hypergeometric_branch(n, 2 * n, E2Branch::HighExcess)?;
            assert_eq!(lo, hi);
        }
    }
    println!("E_2(n, k) from the 2F1 form matches the table for n <= 10");
    println!("E_2(3, 6) = {}", e2_hypergeometric(3, 6)?);
    Ok(())
}
