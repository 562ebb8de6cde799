//! Placement maps for every perfect-shuffle family.
//!
//! All maps are 0-based: positions and cards are numbered `0..m` from the
//! bottom of the deck. `build(spec).map()[pos]` is the card that occupies
//! `pos` after one shuffle of an ordered deck.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    InShuffle,
    OutShuffle,
    /// Over/under transfer, second card goes under the first.
    MongeH1,
    /// Over/under transfer, second card goes over the first.
    MongeH2,
    /// In-shuffle against the reversed upper half.
    MongeH3,
    /// Out-shuffle against the reversed upper half.
    MongeH4,
    /// `2n + 1` cards cut after card `n`; the top card stays put.
    OddFirstCut,
    /// `2n + 1` cards cut after card `n + 1`; the bottom card stays put.
    OddSecondCut,
    GeneralizedIn,
    GeneralizedOut,
}

/// How the classical symbol for a family relates to its placement map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// The symbol maps a position to the card found there (it is the placement map).
    Placement,
    /// The symbol maps a card to the position it moves to (the inverse of the placement map).
    InversePlacement,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::InShuffle,
        Family::OutShuffle,
        Family::MongeH1,
        Family::MongeH2,
        Family::MongeH3,
        Family::MongeH4,
        Family::OddFirstCut,
        Family::OddSecondCut,
        Family::GeneralizedIn,
        Family::GeneralizedOut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::InShuffle => "in",
            Family::OutShuffle => "out",
            Family::MongeH1 => "monge-h1",
            Family::MongeH2 => "monge-h2",
            Family::MongeH3 => "monge-h3",
            Family::MongeH4 => "monge-h4",
            Family::OddFirstCut => "odd-first",
            Family::OddSecondCut => "odd-second",
            Family::GeneralizedIn => "gen-in",
            Family::GeneralizedOut => "gen-out",
        }
    }

    pub fn convention(self) -> Convention {
        match self {
            Family::MongeH1 | Family::MongeH2 => Convention::InversePlacement,
            _ => Convention::Placement,
        }
    }

    pub fn is_generalized(self) -> bool {
        matches!(self, Family::GeneralizedIn | Family::GeneralizedOut)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Family::OddFirstCut | Family::OddSecondCut)
    }

    pub fn is_even_deck(self) -> bool {
        !self.is_generalized() && !self.is_odd()
    }

    /// Numbering used by convention when listing this family's cards.
    pub fn default_base(self) -> usize {
        match self {
            Family::OutShuffle
            | Family::MongeH4
            | Family::OddSecondCut
            | Family::GeneralizedOut => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown shuffle family `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShuffleSpec {
    family: Family,
    n: usize,
    packets: usize,
}

impl ShuffleSpec {
    /// `packets` is required for the generalized families and must be absent otherwise.
    pub fn new(family: Family, n: usize, packets: Option<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroHalfDeck);
        }
        let packets = match (family.is_generalized(), packets) {
            (true, None) => return Err(Error::MissingPackets(family.name())),
            (true, Some(k)) if k < 2 => return Err(Error::TooFewPackets(k)),
            (true, Some(k)) => k,
            (false, Some(_)) => return Err(Error::UnexpectedPackets(family.name())),
            (false, None) => 2,
        };
        Ok(Self { family, n, packets })
    }

    /// Derives `n` from a total card count.
    pub fn from_cards(family: Family, cards: usize, packets: Option<usize>) -> Result<Self> {
        let bad = Error::BadDeckSize {
            family: family.name(),
            cards,
        };
        let n = if family.is_odd() {
            if cards < 3 || cards.is_multiple_of(2) {
                return Err(bad);
            }
            (cards - 1) / 2
        } else {
            let k = if family.is_generalized() {
                match packets {
                    Some(k) if k >= 2 => k,
                    Some(k) => return Err(Error::TooFewPackets(k)),
                    None => return Err(Error::MissingPackets(family.name())),
                }
            } else {
                2
            };
            if cards == 0 || !cards.is_multiple_of(k) {
                return Err(bad);
            }
            cards / k
        };
        Self::new(family, n, packets)
    }

    pub fn in_shuffle(n: usize) -> Result<Self> {
        Self::new(Family::InShuffle, n, None)
    }

    pub fn out_shuffle(n: usize) -> Result<Self> {
        Self::new(Family::OutShuffle, n, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Packet count; 2 for every non-generalized family.
    pub fn packets(&self) -> usize {
        self.packets
    }

    pub fn deck_size(&self) -> usize {
        if self.family.is_odd() {
            2 * self.n + 1
        } else {
            self.packets * self.n
        }
    }
}

impl fmt::Display for ShuffleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} cards", self.family, self.deck_size())?;
        if self.family.is_generalized() {
            write!(f, ", {} packets", self.packets)?;
        }
        write!(f, ")")
    }
}

/// Placement map of one shuffle.
pub fn build(spec: &ShuffleSpec) -> Permutation {
    let n = spec.n;
    let m = spec.deck_size();
    let map: Vec<usize> = match spec.family {
        Family::InShuffle => (0..m)
            .map(|i| if i % 2 == 0 { i / 2 + n } else { (i - 1) / 2 })
            .collect(),
        Family::OutShuffle => (0..m)
            .map(|i| if i % 2 == 0 { i / 2 } else { (i - 1) / 2 + n })
            .collect(),
        // Inverse of the card-to-position map: evens descending, then odds ascending.
        Family::MongeH1 => (0..m)
            .map(|j| {
                if j < n {
                    2 * n - 1 - 2 * j
                } else {
                    2 * j - 2 * n
                }
            })
            .collect(),
        Family::MongeH2 => (0..m)
            .map(|j| {
                if j < n {
                    2 * n - 2 - 2 * j
                } else {
                    2 * j - 2 * n + 1
                }
            })
            .collect(),
        Family::MongeH3 => (0..m)
            .map(|i| {
                if i % 2 == 1 {
                    (i - 1) / 2
                } else {
                    2 * n - 1 - i / 2
                }
            })
            .collect(),
        Family::MongeH4 => (0..m)
            .map(|i| {
                if i % 2 == 0 {
                    i / 2
                } else {
                    2 * n - i.div_ceil(2)
                }
            })
            .collect(),
        Family::OddFirstCut => (0..m)
            .map(|i| match i {
                _ if i == 2 * n => i,
                _ if i % 2 == 0 => i / 2 + n,
                _ => (i - 1) / 2,
            })
            .collect(),
        Family::OddSecondCut => (0..m)
            .map(|i| match i {
                0 => 0,
                _ if (i - 1) % 2 == 0 => (i - 1) / 2 + n + 1,
                _ => (i - 2) / 2 + 1,
            })
            .collect(),
        Family::GeneralizedIn => {
            let k = spec.packets;
            // 1-based: residue l != 0 of i mod k goes to (i - l)/k + (k - l)n + 1, residue 0 to i/k.
            (1..=m)
                .map(|i| {
                    let l = i % k;
                    let card = if l == 0 {
                        i / k
                    } else {
                        (i - l) / k + (k - l) * n + 1
                    };
                    card - 1
                })
                .collect()
        }
        Family::GeneralizedOut => {
            let k = spec.packets;
            (0..m).map(|i| i / k + (i % k) * n).collect()
        }
    };
    Permutation::from_vec_unchecked(map)
}

/// The classical symbol for the family, honouring [`Family::convention`].
pub fn classical_permutation(spec: &ShuffleSpec) -> Permutation {
    let p = build(spec);
    match spec.family.convention() {
        Convention::Placement => p,
        Convention::InversePlacement => p.inverse(),
    }
}

/// Reversal `i ↦ m - 1 - i`.
pub fn symmetry(m: usize) -> Result<Permutation> {
    if m == 0 {
        return Err(Error::EmptyPermutation);
    }
    Ok(Permutation::from_vec_unchecked((0..m).rev().collect()))
}
