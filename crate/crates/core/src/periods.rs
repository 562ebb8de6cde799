//! Shuffle periods from congruences, closed forms for power-of-two decks,
//! and the half-deck ("color") period found by iteration.

use std::fmt;

use crate::error::{out_of_range, Error, Result};
use crate::modular::{multiplicative_order, semi_order};
use crate::shuffle::{build, Family, ShuffleSpec};

/// Order of `base` modulo `modulus`, with the trivial group mod 1 giving 1.
fn order_or_trivial(base: u64, modulus: u64) -> Result<u64> {
    if modulus == 1 {
        Ok(1)
    } else {
        multiplicative_order(base, modulus)
    }
}

/// Number of shuffles after which the deck first returns to its starting order.
///
/// | family | period |
/// |---|---|
/// | in-shuffle, odd cuts | order of 2 mod `2n + 1` |
/// | out-shuffle | order of 2 mod `2n - 1` (1 for two cards) |
/// | Monge h1, h3 | semi-order of 2 mod `4n + 1` |
/// | Monge h2, h4 | semi-order of 2 mod `4n - 1` |
/// | generalized in | order of `k` mod `kn + 1` |
/// | generalized out | order of `k` mod `kn - 1` |
pub fn shuffle_period(spec: &ShuffleSpec) -> Result<u64> {
    let n = spec.n() as u64;
    let k = spec.packets() as u64;
    match spec.family() {
        Family::InShuffle | Family::OddFirstCut | Family::OddSecondCut => {
            multiplicative_order(2, 2 * n + 1)
        }
        Family::OutShuffle => order_or_trivial(2, 2 * n - 1),
        Family::MongeH1 | Family::MongeH3 => Ok(semi_order(2, 4 * n + 1)?.exponent),
        Family::MongeH2 | Family::MongeH4 => Ok(semi_order(2, 4 * n - 1)?.exponent),
        Family::GeneralizedIn => multiplicative_order(k, k * n + 1),
        Family::GeneralizedOut => order_or_trivial(k, k * n - 1),
    }
}

/// Deck shapes whose period has a closed form in terms of an exponent `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorollaryKind {
    /// In-shuffle of `2^p` cards: `2p`.
    InPow2,
    /// In-shuffle of `2^p - 2` cards (`p >= 2`): `p`.
    InPow2Minus2,
    /// Out-shuffle of `2^p` cards: `p`.
    OutPow2,
    /// Out-shuffle of `2^p + 2` cards: `2p`.
    OutPow2Plus2,
    /// Any Monge shuffle of `2^p` cards: `p + 1`.
    ///
    /// The formula overshoots for the h2/h4 shuffles of two cards, which are
    /// the identity (period 1, not 2).
    MongePow2,
    /// Generalized in-shuffle with `n = k^(p-1)`: `2p`.
    GenInPow,
    /// Generalized out-shuffle with `n = k^(p-1)`: `p`.
    GenOutPow,
}

impl CorollaryKind {
    pub const ALL: [CorollaryKind; 7] = [
        CorollaryKind::InPow2,
        CorollaryKind::InPow2Minus2,
        CorollaryKind::OutPow2,
        CorollaryKind::OutPow2Plus2,
        CorollaryKind::MongePow2,
        CorollaryKind::GenInPow,
        CorollaryKind::GenOutPow,
    ];

    pub fn min_exponent(self) -> u32 {
        match self {
            CorollaryKind::InPow2Minus2 => 2,
            _ => 1,
        }
    }

    pub fn is_generalized(self) -> bool {
        matches!(self, CorollaryKind::GenInPow | CorollaryKind::GenOutPow)
    }

    /// The shuffle specs the closed form speaks about.
    pub fn specs(self, p: u32, k: Option<u64>) -> Result<Vec<ShuffleSpec>> {
        check_corollary_args(self, p, k)?;
        let pow = |base: u64, e: u32| -> Result<usize> {
            base.checked_pow(e)
                .and_then(|v| usize::try_from(v).ok())
                .ok_or_else(|| out_of_range("p", p as u64, "deck size overflows"))
        };
        let half = pow(2, p - 1)?;
        Ok(match self {
            CorollaryKind::InPow2 => vec![ShuffleSpec::in_shuffle(half)?],
            CorollaryKind::InPow2Minus2 => vec![ShuffleSpec::in_shuffle(half - 1)?],
            CorollaryKind::OutPow2 => vec![ShuffleSpec::out_shuffle(half)?],
            CorollaryKind::OutPow2Plus2 => vec![ShuffleSpec::out_shuffle(half + 1)?],
            CorollaryKind::MongePow2 => [
                Family::MongeH1,
                Family::MongeH2,
                Family::MongeH3,
                Family::MongeH4,
            ]
            .into_iter()
            .map(|f| ShuffleSpec::new(f, half, None))
            .collect::<Result<_>>()?,
            CorollaryKind::GenInPow | CorollaryKind::GenOutPow => {
                let k = k.expect("checked above");
                let family = if self == CorollaryKind::GenInPow {
                    Family::GeneralizedIn
                } else {
                    Family::GeneralizedOut
                };
                vec![ShuffleSpec::new(family, pow(k, p - 1)?, Some(k as usize))?]
            }
        })
    }
}

impl fmt::Display for CorollaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_corollary_args(kind: CorollaryKind, p: u32, k: Option<u64>) -> Result<()> {
    let min = kind.min_exponent();
    if p < min || p > 62 {
        return Err(out_of_range("p", p as u64, format!("{min}..=62")));
    }
    match (kind.is_generalized(), k) {
        (true, None) => Err(Error::MissingPackets("generalized corollary")),
        (true, Some(k)) if k < 2 => Err(Error::TooFewPackets(k as usize)),
        (false, Some(_)) => Err(Error::UnexpectedPackets("power-of-two corollary")),
        _ => Ok(()),
    }
}

/// Closed-form period for the power-shaped decks of [`CorollaryKind`].
pub fn corollary_period(kind: CorollaryKind, p: u32, k: Option<u64>) -> Result<u64> {
    check_corollary_args(kind, p, k)?;
    let p = p as u64;
    Ok(match kind {
        CorollaryKind::InPow2 | CorollaryKind::OutPow2Plus2 | CorollaryKind::GenInPow => 2 * p,
        CorollaryKind::InPow2Minus2 | CorollaryKind::OutPow2 | CorollaryKind::GenOutPow => p,
        CorollaryKind::MongePow2 => p + 1,
    })
}

/// Least `r' >= 1` after which the bottom `n` positions hold exactly the
/// bottom `n` cards again, in any order. Only defined for the `2n`-card
/// families.
pub fn color_period(spec: &ShuffleSpec) -> Result<u64> {
    if !spec.family().is_even_deck() {
        return Err(Error::NotEvenDeck(spec.family().name()));
    }
    let n = spec.n();
    let p = build(spec);
    let limit = p.order();
    let mut deck: Vec<usize> = (0..spec.deck_size()).collect();
    for r in 1..=limit {
        deck = p.apply(&deck)?;
        if deck[..n].iter().all(|&c| c < n) {
            return Ok(r);
        }
    }
    Err(Error::ColorPeriodNotFound(limit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn period(family: Family, cards: usize) -> u64 {
        shuffle_period(&ShuffleSpec::from_cards(family, cards, None).unwrap()).unwrap()
    }

    #[test]
    fn table_spot_checks() {
        assert_eq!(period(Family::InShuffle, 52), 52);
        assert_eq!(period(Family::InShuffle, 30), 5);
        assert_eq!(period(Family::InShuffle, 2), 2);
        assert_eq!(period(Family::MongeH1, 42), 8);
        assert_eq!(period(Family::MongeH2, 2), 1);
        assert_eq!(period(Family::MongeH2, 64), 7);
        assert_eq!(period(Family::MongeH2, 54), 53);
        assert_eq!(period(Family::OutShuffle, 2), 1);
        assert_eq!(period(Family::OutShuffle, 52), 8);
    }

    #[test]
    fn odd_and_generalized() {
        assert_eq!(period(Family::OddFirstCut, 5), 4);
        let g = ShuffleSpec::new(Family::GeneralizedIn, 9, Some(3)).unwrap();
        assert_eq!(shuffle_period(&g), Ok(6));
        assert_eq!(shuffle_period(&g), Ok(build(&g).order()));
        let out2 = ShuffleSpec::new(Family::GeneralizedOut, 1, Some(2)).unwrap();
        assert_eq!(shuffle_period(&out2), Ok(1));
    }

    #[test]
    fn corollary_values() {
        assert_eq!(corollary_period(CorollaryKind::InPow2, 5, None), Ok(10));
        assert_eq!(corollary_period(CorollaryKind::MongePow2, 5, None), Ok(6));
        assert_eq!(corollary_period(CorollaryKind::OutPow2, 1, None), Ok(1));
        assert_eq!(
            corollary_period(CorollaryKind::GenOutPow, 3, Some(4)),
            Ok(3)
        );
    }

    #[test]
    fn monge_closed_form_breaks_on_two_cards() {
        assert_eq!(corollary_period(CorollaryKind::MongePow2, 1, None), Ok(2));
        assert_eq!(period(Family::MongeH1, 2), 2);
        assert_eq!(period(Family::MongeH2, 2), 1);
        assert_eq!(period(Family::MongeH4, 2), 1);
        for p in 2..=14 {
            for s in CorollaryKind::MongePow2.specs(p, None).unwrap() {
                assert_eq!(shuffle_period(&s), Ok(p as u64 + 1), "{s}");
            }
        }
    }

    #[test]
    fn corollary_range_checks() {
        assert!(corollary_period(CorollaryKind::InPow2Minus2, 1, None).is_err());
        assert!(corollary_period(CorollaryKind::InPow2, 0, None).is_err());
        assert!(corollary_period(CorollaryKind::GenInPow, 2, None).is_err());
        assert!(corollary_period(CorollaryKind::GenInPow, 2, Some(1)).is_err());
        assert!(corollary_period(CorollaryKind::OutPow2, 2, Some(3)).is_err());
    }

    #[test]
    fn color_periods_small() {
        let color = |n| color_period(&ShuffleSpec::in_shuffle(n).unwrap()).unwrap();
        assert_eq!(color(1), 2);
        assert_eq!(color(2), 4);
        assert_eq!(color(4), 6);
        let odd = ShuffleSpec::new(Family::OddFirstCut, 2, None).unwrap();
        assert_eq!(color_period(&odd), Err(Error::NotEvenDeck("odd-first")));
    }
}
