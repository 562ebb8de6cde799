//! Closed forms for shuffle iterates on decks of `2^p` and `2^p - 2` cards,
//! expressed on the `p`-bit binary words of card numbers.

use crate::error::{out_of_range, Result};

const MAX_WIDTH: u32 = 63;

fn mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn check_width(p: u32, min: u32) -> Result<()> {
    if p < min || p > MAX_WIDTH {
        return Err(out_of_range("p", p as u64, format!("{min}..={MAX_WIDTH}")));
    }
    Ok(())
}

fn check_word(i: u64, p: u32) -> Result<()> {
    if i > mask(p) {
        return Err(out_of_range("i", i, format!("0..2^{p}")));
    }
    Ok(())
}

/// `k`-th iterate of the in-shuffle placement map of a `2^p`-card deck at `i`
/// (0-based), for `0 <= k <= 2p`.
///
/// For `k <= p` the low `k` bits are complemented and rotated to the top.
/// Past `p` the word has been fully complemented once, and the next `k - p`
/// steps undo that from the bottom.
pub fn in_iterate_pow2(i: u64, k: u32, p: u32) -> Result<u64> {
    check_width(p, 1)?;
    check_word(i, p)?;
    if k > 2 * p {
        return Err(out_of_range("k", k as u64, format!("0..={}", 2 * p)));
    }
    let not_i = !i & mask(p);
    Ok(if k <= p {
        ((not_i & mask(k)) << (p - k)) | (i >> k)
    } else {
        let t = k - p;
        ((i & mask(t)) << (p - t)) | (not_i >> t)
    })
}

/// `k`-th iterate of the in-shuffle on `2^p - 2` cards at the 1-based label `i`:
/// a cyclic rotation of the `p`-bit word that carries the low `k` bits to the top.
pub fn in_iterate_pow2m2(i: u64, k: u32, p: u32) -> Result<u64> {
    check_width(p, 2)?;
    if i == 0 || i >= mask(p) {
        return Err(out_of_range("i", i, format!("1..={}", mask(p) - 1)));
    }
    if k > p {
        return Err(out_of_range("k", k as u64, format!("0..={p}")));
    }
    Ok(((i & mask(k)) << (p - k)) | (i >> k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MongeVariant {
    H1,
    H2,
}

/// `k`-th iterate at card 0 of the card-to-position Monge permutation on
/// `2^p` cards, `0 <= k <= p + 1`.
///
/// H1 gives `k` ones followed by `p - k` zeros; H2 gives `k - 1` ones, a zero,
/// then `p - k` ones. Both return to 0 at `k = p + 1`.
pub fn monge_zero_iterate(variant: MongeVariant, k: u32, p: u32) -> Result<u64> {
    check_width(p, 1)?;
    if k > p + 1 {
        return Err(out_of_range("k", k as u64, format!("0..={}", p + 1)));
    }
    if k == 0 || k == p + 1 {
        return Ok(0);
    }
    let low = 1u64 << (p - k);
    Ok(match variant {
        MongeVariant::H1 => mask(p) + 1 - low,
        MongeVariant::H2 => mask(p) - low,
    })
}

/// Maximal runs of equal bits in a `width`-bit word, read from the least
/// significant end. Leading zeros count as a final run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub lengths: Vec<u32>,
    pub lsb_bit: u8,
    pub width: u32,
}

impl BlockDecomposition {
    /// Bit value of run `idx` (0 = least significant run).
    pub fn bit_of_run(&self, idx: usize) -> u8 {
        self.lsb_bit ^ (idx % 2) as u8
    }
}

pub fn block_decompose(i: u64, p: u32) -> Result<BlockDecomposition> {
    check_width(p, 1)?;
    check_word(i, p)?;
    let lsb_bit = (i & 1) as u8;
    let mut lengths = Vec::new();
    let mut current = lsb_bit;
    let mut run = 0;
    for b in 0..p {
        let bit = ((i >> b) & 1) as u8;
        if bit == current {
            run += 1;
        } else {
            lengths.push(run);
            current = bit;
            run = 1;
        }
    }
    lengths.push(run);
    Ok(BlockDecomposition {
        lengths,
        lsb_bit,
        width: p,
    })
}
