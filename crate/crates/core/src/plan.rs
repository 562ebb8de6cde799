//! In/out-shuffle sequences that move a card to a chosen position.

use std::fmt;
use std::str::FromStr;

use crate::error::{out_of_range, Error, Result};
use crate::perm::Permutation;
use crate::shuffle::{build, ShuffleSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// In-shuffle.
    I,
    /// Out-shuffle.
    O,
}

impl Move {
    pub fn letter(self) -> char {
        match self {
            Move::I => 'I',
            Move::O => 'O',
        }
    }
}

/// Run-length encoded sequence of shuffles, executed left to right.
/// Adjacent runs always carry different moves and every count is positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ShufflePlan {
    blocks: Vec<(Move, usize)>,
}

impl ShufflePlan {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = (Move, usize)>) -> Self {
        let mut plan = Self::empty();
        for (m, count) in blocks {
            plan.push_run(m, count);
        }
        plan
    }

    pub fn push(&mut self, m: Move) {
        self.push_run(m, 1);
    }

    pub fn push_run(&mut self, m: Move, count: usize) {
        if count == 0 {
            return;
        }
        match self.blocks.last_mut() {
            Some((last, c)) if *last == m => *c += count,
            _ => self.blocks.push((m, count)),
        }
    }

    pub fn blocks(&self) -> &[(Move, usize)] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn moves(&self) -> impl Iterator<Item = Move> + '_ {
        self.blocks
            .iter()
            .flat_map(|&(m, c)| std::iter::repeat_n(m, c))
    }

    fn trim_leading(&mut self, m: Move) {
        if matches!(self.blocks.first(), Some(&(first, _)) if first == m) {
            self.blocks.remove(0);
        }
    }

    fn trim_trailing(&mut self, m: Move) {
        if matches!(self.blocks.last(), Some(&(last, _)) if last == m) {
            self.blocks.pop();
        }
    }
}

impl fmt::Display for ShufflePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.moves() {
            write!(f, "{}", m.letter())?;
        }
        Ok(())
    }
}

impl FromStr for ShufflePlan {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut plan = Self::empty();
        for ch in s.chars() {
            match ch {
                'I' => plan.push(Move::I),
                'O' => plan.push(Move::O),
                other => return Err(format!("invalid plan letter `{other}`")),
            }
        }
        Ok(plan)
    }
}

/// Where a card goes under each kind of shuffle of a `2n`-card deck:
/// the inverses of the in- and out-shuffle placement maps.
#[derive(Debug, Clone)]
pub struct DeckTracker {
    after_in: Permutation,
    after_out: Permutation,
}

impl DeckTracker {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            after_in: build(&ShuffleSpec::in_shuffle(n)?).inverse(),
            after_out: build(&ShuffleSpec::out_shuffle(n)?).inverse(),
        })
    }

    pub fn cards(&self) -> usize {
        self.after_in.size()
    }

    pub fn step(&self, m: Move, position: usize) -> usize {
        match m {
            Move::I => self.after_in.image(position),
            Move::O => self.after_out.image(position),
        }
    }

    /// Positions of `card` after each move of `plan`.
    pub fn trajectory(&self, plan: &ShufflePlan, card: usize) -> Result<Vec<usize>> {
        if card >= self.cards() {
            return Err(out_of_range(
                "card",
                card as u64,
                format!("0..{}", self.cards()),
            ));
        }
        let mut pos = card;
        Ok(plan
            .moves()
            .map(|m| {
                pos = self.step(m, pos);
                pos
            })
            .collect())
    }
}

/// Result of following a card through a plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Track {
    pub start: usize,
    pub trajectory: Vec<usize>,
}

impl Track {
    pub fn final_position(&self) -> usize {
        self.trajectory.last().copied().unwrap_or(self.start)
    }
}

/// Follows `card` through `plan` on a `2n`-card deck.
pub fn track_plan(plan: &ShufflePlan, card: usize, n: usize) -> Result<Track> {
    let trajectory = DeckTracker::new(n)?.trajectory(plan, card)?;
    Ok(Track {
        start: card,
        trajectory,
    })
}

fn check_pow2_args(p: u32, values: &[(&'static str, u64)]) -> Result<()> {
    if !(1..=63).contains(&p) {
        return Err(out_of_range("p", p as u64, "1..=63"));
    }
    for &(what, v) in values {
        if v >> p != 0 {
            return Err(out_of_range(what, v, format!("0..2^{p}")));
        }
    }
    Ok(())
}

/// Plan taking card `j` to position `i` on a `2^p`-card deck.
///
/// Reading bit positions from the most significant down, a differing bit
/// gives an in-shuffle and a matching bit an out-shuffle. The full `p`-letter
/// plan is returned untrimmed, except that `i == j` gives the empty plan.
/// The plan is symmetric in `i` and `j`.
pub fn elmsley_plan(j: u64, i: u64, p: u32) -> Result<ShufflePlan> {
    check_pow2_args(p, &[("j", j), ("i", i)])?;
    if i == j {
        return Ok(ShufflePlan::empty());
    }
    let diff = i ^ j;
    Ok(ShufflePlan::from_blocks((0..p).rev().map(|b| {
        let m = if (diff >> b) & 1 == 1 {
            Move::I
        } else {
            Move::O
        };
        (m, 1)
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryRole {
    /// Bottom card (0) to position `i`. Works for any even deck.
    BottomTo,
    /// Top card (`2^p - 1`) to position `i`.
    TopTo,
    /// Card `i` to the bottom.
    ToBottom,
    /// Card `i` to the top.
    ToTop,
}

impl BoundaryRole {
    pub const ALL: [BoundaryRole; 4] = [
        BoundaryRole::BottomTo,
        BoundaryRole::TopTo,
        BoundaryRole::ToBottom,
        BoundaryRole::ToTop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryRole::BottomTo => "bottom-to",
            BoundaryRole::TopTo => "top-to",
            BoundaryRole::ToBottom => "to-bottom",
            BoundaryRole::ToTop => "to-top",
        }
    }
}

/// Plans that move a boundary card, or move a card to a boundary.
///
/// The binary digits of `i` are read from the most significant end, with
/// `1 → I, 0 → O` (bottom roles) or `1 → O, 0 → I` (top roles). Since an
/// out-shuffle fixes the top and bottom cards, the run of O's that would act
/// on a boundary card is dropped: leading for `BottomTo`/`TopTo`, trailing for
/// `ToBottom`/`ToTop`.
///
/// `BottomTo` accepts any half-deck size `n`; the other roles need `2n` to be
/// a power of two.
pub fn boundary_plan(role: BoundaryRole, i: usize, n: usize) -> Result<ShufflePlan> {
    if n == 0 {
        return Err(Error::ZeroHalfDeck);
    }
    let cards = 2 * n;
    if i >= cards {
        return Err(out_of_range("i", i as u64, format!("0..{cards}")));
    }
    if role == BoundaryRole::BottomTo {
        return bottom_to(i, n);
    }
    if !cards.is_power_of_two() {
        return Err(Error::BadDeckSize {
            family: role.name(),
            cards,
        });
    }
    let p = cards.trailing_zeros();
    let (one, zero) = match role {
        BoundaryRole::ToBottom => (Move::I, Move::O),
        _ => (Move::O, Move::I),
    };
    let mut plan = ShufflePlan::from_blocks((0..p).rev().map(|b| {
        let m = if (i >> b) & 1 == 1 { one } else { zero };
        (m, 1)
    }));
    match role {
        BoundaryRole::TopTo => plan.trim_leading(Move::O),
        _ => plan.trim_trailing(Move::O),
    }
    Ok(plan)
}

// Card 0 follows the binary prefixes of `i`: from position j <= n - 1 an
// in-shuffle sends it to 2j + 1 and an out-shuffle to 2j.
fn bottom_to(i: usize, n: usize) -> Result<ShufflePlan> {
    let cards = 2 * n;
    let tracker = DeckTracker::new(n)?;
    let mut plan = ShufflePlan::empty();
    if i == 0 {
        return Ok(plan);
    }
    let width = usize::BITS - i.leading_zeros();
    let mut pos = 0usize;
    for (step, b) in (0..width).rev().enumerate() {
        let m = if (i >> b) & 1 == 1 { Move::I } else { Move::O };
        let prefix = i >> b;
        if prefix > cards - 1 || pos > n - 1 {
            return Err(Error::RouteLeavesDeck {
                step,
                position: prefix,
                cards,
            });
        }
        pos = tracker.step(m, pos);
        if pos != prefix {
            return Err(Error::RouteLeavesDeck {
                step,
                position: pos,
                cards,
            });
        }
        plan.push(m);
    }
    Ok(plan)
}

/// A single shuffle doing the same job as `plan`, if one exists and `plan` is longer.
pub fn single_shuffle_shortcut(
    plan: &ShufflePlan,
    card: usize,
    target: usize,
    tracker: &DeckTracker,
) -> Option<Move> {
    if plan.len() <= 1 || card == target {
        return None;
    }
    [Move::O, Move::I]
        .into_iter()
        .find(|&m| tracker.step(m, card) == target)
}
