//! Explicit permutations of `0..m` and their cycle structure.
//!
//! A [`Permutation`] stores `map[i]`, the image of `i`. Shuffle constructors
//! produce *placement maps*: `map[pos]` is the card that sits at `pos` after
//! one shuffle, so `power(p, k).map()[pos]` is the card at `pos` after `k`
//! shuffles of a deck that started in order.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Validates that `map` is a bijection of `0..map.len()`.
    pub fn from_vec(map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection { len: map.len() });
            }
        }
        Ok(Self { map })
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn from_vec_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(Self::from_vec(map.clone()).is_ok());
        Self { map }
    }

    pub fn identity(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyPermutation);
        }
        Ok(Self {
            map: (0..m).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.map
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Pull-back action: `result[i] = deck[self.map[i]]`.
    ///
    /// Starting from the ordered deck `[0, 1, ..]`, applying a placement map
    /// `k` times yields the deck whose entry at `i` is the card sitting at
    /// position `i` after `k` shuffles.
    pub fn apply<T: Clone>(&self, deck: &[T]) -> Result<Vec<T>> {
        self.check_len(deck.len())?;
        Ok(self.map.iter().map(|&src| deck[src].clone()).collect())
    }

    /// `result.map[i] = self.map[other.map[i]]`, i.e. `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_len(other.size())?;
        Ok(Self {
            map: other.map.iter().map(|&j| self.map[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }

    /// `k`-fold composition. Negative exponents use the inverse.
    ///
    /// Each cycle is walked once and every element jumps `k mod len` steps
    /// along its cycle, so the cost is O(m) whatever the size of `k`.
    pub fn power(&self, k: i64) -> Permutation {
        let mut out = vec![0; self.size()];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (idx, &x) in cycle.iter().enumerate() {
                out[x] = cycle[(idx + shift) % cycle.len()];
            }
        }
        Self { map: out }
    }

    /// Least `r >= 1` with `power(r)` equal to the identity.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn orbit_decomposition(&self) -> OrbitDecomposition {
        let orbits = self.cycles();
        let mut index = vec![0; self.size()];
        for (id, cycle) in orbits.iter().enumerate() {
            for &x in cycle {
                index[x] = id;
            }
        }
        OrbitDecomposition { orbits, index }
    }

    // Scanning starts in increasing order, so every cycle is discovered from
    // its minimum and cycles come out sorted by minimum.
    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.size()];
        let mut cycles = Vec::new();
        for start in 0..self.size() {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn check_len(&self, actual: usize) -> Result<()> {
        if actual != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Partition of `0..m` into the cycles of a permutation.
///
/// Each cycle lists positions in traversal order `x, map[x], map[map[x]], ..`
/// starting from its minimum; cycles are sorted by minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Orbit id of position `i`.
    pub fn orbit_id(&self, i: usize) -> usize {
        self.index[i]
    }

    pub fn orbit_of(&self, i: usize) -> &[usize] {
        &self.orbits[self.index[i]]
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Orbits as sorted member sets, still ordered by minimum.
    pub fn sorted_sets(&self) -> Vec<Vec<usize>> {
        self.orbits
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect()
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_vec(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_small() {
        assert_eq!(Permutation::identity(1).unwrap().map(), &[0]);
        assert_eq!(Permutation::identity(3).unwrap().map(), &[0, 1, 2]);
        assert_eq!(Permutation::identity(8).unwrap().order(), 1);
        assert_eq!(Permutation::identity(0), Err(Error::EmptyPermutation));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_vec(vec![0, 0]).is_err());
        assert!(Permutation::from_vec(vec![0, 2]).is_err());
        assert!(Permutation::from_vec(vec![]).is_err());
    }

    #[test]
    fn apply_pulls_back() {
        let p = perm(&[2, 0, 1]);
        assert_eq!(p.apply(&['a', 'b', 'c']).unwrap(), vec!['c', 'a', 'b']);
        assert!(p.apply(&[1, 2]).is_err());
    }

    #[test]
    fn compose_order_of_operands() {
        let p = perm(&[1, 2, 0]);
        let q = perm(&[1, 0, 2]);
        // (p ∘ q)(0) = p(q(0)) = p(1) = 2
        assert_eq!(p.compose(&q).unwrap().map(), &[2, 1, 0]);
        assert!(p.compose(&Permutation::identity(4).unwrap()).is_err());
    }

    #[test]
    fn power_handles_negative_and_huge_exponents() {
        let p = perm(&[1, 2, 0, 4, 3]);
        assert_eq!(p.power(-1), p.inverse());
        assert!(p.power(0).is_identity());
        assert!(p.power(6).is_identity());
        assert_eq!(p.power(i64::MAX), p.power(i64::MAX % 6));
        assert_eq!(p.power(i64::MIN), p.power(i64::MIN.rem_euclid(6)));
    }

    #[test]
    fn orbits_min_first_and_sorted() {
        let p = perm(&[3, 1, 0, 2]);
        let d = p.orbit_decomposition();
        assert_eq!(d.orbits(), &[vec![0, 3, 2], vec![1]]);
        assert_eq!(d.orbit_id(2), 0);
        assert_eq!(d.orbit_of(1), &[1]);
        assert_eq!(d.sorted_sets(), vec![vec![0, 2, 3], vec![1]]);

        let id = Permutation::identity(4).unwrap().orbit_decomposition();
        assert_eq!(id.len(), 4);
        assert!(id.cycle_lengths().iter().all(|&l| l == 1));
    }
}
