//! Brute-force ground truth.
//!
//! Three enumerators, none of which touches the closed forms or recurrences
//! in [`crate::stirling`] and [`crate::sequences`]:
//!
//! * the full gift exchange game with distinguishable players and gifts,
//! * gamma sequences (the sequence of gift numbers chosen when the pool is
//!   opened in the fixed order `1, 2, ..., n+1`),
//! * set partitions of `{1..k}` into `n` blocks of bounded size.
//!
//! The listing variants visit every object. The counting variants run the
//! same depth-first choice process but merge states that are equal up to
//! relabeling (a histogram of use counts or block sizes), which keeps them
//! exact at sizes where listing is out of reach.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::guard::{self, Guards};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    pub sigma: u32,
    pub gifts: u32,
}

impl GameConfig {
    pub fn new(sigma: u32, gifts: u32) -> Result<Self> {
        if gifts == 0 {
            return Err(Error::precondition("the game needs at least one gift"));
        }
        Ok(GameConfig { sigma, gifts })
    }
}

/// Gift numbers chosen at each action, in order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaSequence {
    pub entries: Vec<u32>,
}

impl GammaSequence {
    /// Checks the defining constraints for `n + 1` gifts and steal limit
    /// `sigma`.
    pub fn is_valid(&self, sigma: u32, n: u32) -> bool {
        let e = &self.entries;
        let last = n + 1;
        if e.first() != Some(&1) || e.last() != Some(&last) {
            return false;
        }
        if e.iter().filter(|&&v| v == last).count() != 1 {
            return false;
        }
        let mut counts = vec![0u32; n as usize + 2];
        let mut introduced = 0u32;
        for &v in e {
            if v == 0 || v > last {
                return false;
            }
            if v > introduced {
                if v != introduced + 1 {
                    return false;
                }
                introduced = v;
            }
            counts[v as usize] += 1;
        }
        (1..=n).all(|i| (1..=sigma + 1).contains(&counts[i as usize]))
    }

    /// The set partition of `{1..k}` recorded by the positions of each gift,
    /// with the final `n + 1` dropped. Blocks come out ordered by least
    /// element.
    pub fn to_partition(&self) -> Vec<Vec<u32>> {
        let body = &self.entries[..self.entries.len().saturating_sub(1)];
        let blocks = body.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); blocks];
        for (pos, &v) in body.iter().enumerate() {
            out[v as usize - 1].push(pos as u32 + 1);
        }
        out
    }
}

impl fmt::Display for GammaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.entries.iter().all(|&v| v < 10);
        for (i, v) in self.entries.iter().enumerate() {
            if !compact && i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Every gamma sequence for `(sigma, n)`. At each step, opening the next
/// pool gift is listed before stealing, and steals go by ascending gift:
/// for `(1, 2)` this gives 123, 1213, 12123, 1223, 12213, 1123, 11223.
pub fn enumerate_gamma_sequences(sigma: u32, n: u32) -> Result<Vec<GammaSequence>> {
    enumerate_gamma_sequences_with(sigma, n, Guards::global())
}

pub fn enumerate_gamma_sequences_with(
    sigma: u32,
    n: u32,
    guards: &Guards,
) -> Result<Vec<GammaSequence>> {
    guard::check(
        "gamma_list_depth",
        (sigma as u64 + 1) * n as u64,
        guards.gamma_list_depth,
    )?;
    let mut out = Vec::new();
    let mut seq = Vec::new();
    let mut counts = vec![0u32; n as usize + 1];
    list_gamma(sigma, n, 0, &mut counts, &mut seq, &mut out);
    Ok(out)
}

fn list_gamma(
    sigma: u32,
    n: u32,
    introduced: u32,
    counts: &mut [u32],
    seq: &mut Vec<u32>,
    out: &mut Vec<GammaSequence>,
) {
    // open the next pool gift
    let next = introduced + 1;
    seq.push(next);
    if next == n + 1 {
        out.push(GammaSequence { entries: seq.clone() });
    } else {
        counts[next as usize] = 1;
        list_gamma(sigma, n, next, counts, seq, out);
        counts[next as usize] = 0;
    }
    seq.pop();
    // steal gift v again
    for v in 1..=introduced {
        if counts[v as usize] < sigma + 1 {
            counts[v as usize] += 1;
            seq.push(v);
            list_gamma(sigma, n, introduced, counts, seq, out);
            seq.pop();
            counts[v as usize] -= 1;
        }
    }
}

/// Number of gamma sequences for `(sigma, n)`, which is `G_sigma(n)`.
pub fn count_gamma_sequences(sigma: u32, n: u32) -> Result<Natural> {
    count_gamma_sequences_with(sigma, n, Guards::global())
}

pub fn count_gamma_sequences_with(sigma: u32, n: u32, guards: &Guards) -> Result<Natural> {
    guard::check(
        "gamma_count_depth",
        (sigma as u64 + 1) * n as u64,
        guards.gamma_count_depth,
    )?;
    // hist[c] = number of introduced gifts chosen exactly c times, c in 1..=sigma+1
    let hist = vec![0u32; sigma as usize + 2];
    let mut memo = HashMap::new();
    Ok(count_gamma(sigma, n, 0, hist, &mut memo))
}

fn count_gamma(
    sigma: u32,
    n: u32,
    introduced: u32,
    hist: Vec<u32>,
    memo: &mut HashMap<(u32, Vec<u32>), Natural>,
) -> Natural {
    let key = (introduced, hist);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (introduced, hist) = key;
    let mut total = Natural::zero();
    for c in 1..=sigma as usize {
        if hist[c] > 0 {
            let mut next = hist.clone();
            next[c] -= 1;
            next[c + 1] += 1;
            total += count_gamma(sigma, n, introduced, next, memo) * hist[c];
        }
    }
    if introduced == n {
        total += 1u32;
    } else {
        let mut next = hist.clone();
        next[1] += 1;
        total += count_gamma(sigma, n, introduced + 1, next, memo);
    }
    memo.insert((introduced, hist), total.clone());
    total
}

/// Calls `visit` once for every partition of `{1..k}` into exactly `parts`
/// blocks of size at most `max_part`. Blocks are ordered by least element.
pub fn for_each_restricted_partition<F: FnMut(&[Vec<u32>])>(
    parts: u32,
    ground_size: u32,
    max_part: u32,
    visit: F,
) -> Result<()> {
    for_each_restricted_partition_with(parts, ground_size, max_part, Guards::global(), visit)
}

pub fn for_each_restricted_partition_with<F: FnMut(&[Vec<u32>])>(
    parts: u32,
    ground_size: u32,
    max_part: u32,
    guards: &Guards,
    mut visit: F,
) -> Result<()> {
    guard::check("partition_list_k", ground_size as u64, guards.partition_list_k)?;
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    list_partitions(1, parts, ground_size, max_part, &mut blocks, &mut visit);
    Ok(())
}

fn list_partitions<F: FnMut(&[Vec<u32>])>(
    next: u32,
    parts: u32,
    k: u32,
    h: u32,
    blocks: &mut Vec<Vec<u32>>,
    visit: &mut F,
) {
    if next > k {
        if blocks.len() == parts as usize {
            visit(blocks);
        }
        return;
    }
    let remaining = k - next + 1;
    if blocks.len() as u32 + remaining < parts {
        return;
    }
    for b in 0..blocks.len() {
        if (blocks[b].len() as u32) < h {
            blocks[b].push(next);
            list_partitions(next + 1, parts, k, h, blocks, visit);
            blocks[b].pop();
        }
    }
    if (blocks.len() as u32) < parts && h > 0 {
        blocks.push(vec![next]);
        list_partitions(next + 1, parts, k, h, blocks, visit);
        blocks.pop();
    }
}

/// Number of partitions of `{1..ground_size}` into exactly `parts` nonempty
/// blocks, each of size at most `max_part`.
pub fn count_restricted_partitions(parts: u32, ground_size: u32, max_part: u32) -> Result<Natural> {
    count_restricted_partitions_with(parts, ground_size, max_part, Guards::global())
}

pub fn count_restricted_partitions_with(
    parts: u32,
    ground_size: u32,
    max_part: u32,
    guards: &Guards,
) -> Result<Natural> {
    guard::check("partition_count_k", ground_size as u64, guards.partition_count_k)?;
    if max_part == 0 {
        return Ok(if parts == 0 && ground_size == 0 { Natural::one() } else { Natural::zero() });
    }
    // hist[s] = number of open blocks of size s, s in 1..=max_part
    let hist = vec![0u32; max_part as usize + 1];
    let mut memo = HashMap::new();
    Ok(count_partitions(ground_size, parts, max_part, hist, &mut memo))
}

fn count_partitions(
    remaining: u32,
    parts: u32,
    h: u32,
    hist: Vec<u32>,
    memo: &mut HashMap<(u32, Vec<u32>), Natural>,
) -> Natural {
    let blocks: u32 = hist.iter().sum();
    if remaining == 0 {
        return if blocks == parts { Natural::one() } else { Natural::zero() };
    }
    if blocks + remaining < parts {
        return Natural::zero();
    }
    let key = (remaining, hist);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (remaining, hist) = key;
    let mut total = Natural::zero();
    for s in 1..h as usize {
        if hist[s] > 0 {
            let mut next = hist.clone();
            next[s] -= 1;
            next[s + 1] += 1;
            total += count_partitions(remaining - 1, parts, h, next, memo) * hist[s];
        }
    }
    if blocks < parts {
        let mut next = hist.clone();
        next[1] += 1;
        total += count_partitions(remaining - 1, parts, h, next, memo);
    }
    memo.insert((remaining, hist), total.clone());
    total
}

/// `H_sigma(gifts)`: the number of complete playouts of the game.
///
/// Numbers `1..gifts` are called in order. The acting player either unwraps
/// any gift left in the pool or steals any unwrapped gift that has been
/// stolen fewer than `sigma` times; a robbed player acts next. Play stops
/// when the last pool gift is taken. The per-gift count is the only limit on
/// stealing, so taking back a gift just stolen from you is allowed.
pub fn count_full_game_playouts(cfg: GameConfig) -> Result<Natural> {
    count_full_game_playouts_with(cfg, Guards::global())
}

pub fn count_full_game_playouts_with(cfg: GameConfig, guards: &Guards) -> Result<Natural> {
    guard::check("game_gifts", cfg.gifts as u64, guards.game_gifts)?;
    let n = cfg.gifts as usize;
    let mut state = GameState {
        holder: vec![None; n],
        steals: vec![0; n],
        next_call: 1,
        in_pool: n,
    };
    Ok(Natural::from(play(cfg.sigma, &mut state, 0)))
}

struct GameState {
    /// `None` while the gift is still wrapped in the pool.
    holder: Vec<Option<usize>>,
    steals: Vec<u32>,
    next_call: usize,
    in_pool: usize,
}

fn play(sigma: u32, st: &mut GameState, actor: usize) -> u64 {
    debug_assert!(st.holder.iter().all(|h| *h != Some(actor)));
    let mut total = 0u64;
    for g in 0..st.holder.len() {
        match st.holder[g] {
            None => {
                st.holder[g] = Some(actor);
                st.in_pool -= 1;
                if st.in_pool == 0 {
                    total += 1;
                } else {
                    let caller = st.next_call;
                    st.next_call += 1;
                    total += play(sigma, st, caller);
                    st.next_call -= 1;
                }
                st.in_pool += 1;
                st.holder[g] = None;
            }
            Some(victim) if st.steals[g] < sigma => {
                st.holder[g] = Some(actor);
                st.steals[g] += 1;
                total += play(sigma, st, victim);
                st.steals[g] -= 1;
                st.holder[g] = Some(victim);
            }
            Some(_) => {}
        }
    }
    total
}
