//! Exact counting for the gift-exchange ("white elephant") game.
//!
//! `E_sigma(n, k)` counts partitions of `{1..k}` into `n` blocks of size at
//! most `sigma + 1`. Its row sums `G_sigma(n)` count the steal sequences of a
//! game with `n` gifts where each gift may be stolen at most `sigma` times,
//! and `H_sigma(n) = n! G_sigma(n-1)` counts complete games.
//!
//! Every quantity can be computed by several independent methods (direct
//! enumeration, summation, multinomial profiles, holonomic recurrences,
//! hypergeometric sums, generating functions) and the [`verify`] module
//! cross-checks them. All arithmetic is exact.
//!
//! ```
//! use giftcount::sequences::g_by_sum;
//! let g = g_by_sum(1, 4).unwrap();
//! let v: Vec<String> = g.values.iter().map(|x| x.to_string()).collect();
//! assert_eq!(v, ["1", "2", "7", "37", "266"]);
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod genfun;
pub mod guard;
pub mod guesser;
pub mod oracle;
pub mod output;
pub mod sequences;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
