//! Brute-force enumeration of the symmetric group. Class sizes are tallied
//! from cycle types of every permutation, with no counting formula involved.

use std::collections::BTreeMap;
use std::thread;

use crate::error::{Error, Result};
use crate::partitions::PartitionSymbol;

/// Default largest `n` for [`class_sizes`]; 9! = 362880 permutations.
pub const DEFAULT_CEILING: u32 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based images: `images[i - 1]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Parse(format!(
                    "not a permutation of 1..{n}: {images:?}"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    /// Builds a permutation of `1..=n` from disjoint cycles (1-based).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (pos, &from) in cycle.iter().enumerate() {
                if from == 0 || from > n {
                    return Err(Error::Parse(format!("{from} is outside 1..{n}")));
                }
                images[from - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.images
    }

    /// Steps to the lexicographically next permutation; `false` (and no
    /// change) at the last one.
    pub fn advance(&mut self) -> bool {
        next_permutation(&mut self.images)
    }

    /// Cycle lengths, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.images[at];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> PartitionSymbol {
        cycle_type_of(&self.images)
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i32 {
        let n = self.images.len();
        let cycles = self.cycle_lengths().len();
        if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn cycle_type_of(images: &[usize]) -> PartitionSymbol {
    let n = images.len();
    let mut counts = vec![0u32; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = images[at];
            len += 1;
        }
        counts[len - 1] += 1;
    }
    PartitionSymbol::new(counts)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(pivot) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let successor = v
        .iter()
        .rposition(|&x| x > v[pivot])
        .expect("a larger element exists right of the pivot");
    v.swap(pivot, successor);
    v[pivot + 1..].reverse();
    true
}

/// Tally of cycle types over all of `S_n`, for `n <= DEFAULT_CEILING`.
pub fn class_sizes(n: u32) -> Result<BTreeMap<PartitionSymbol, u64>> {
    class_sizes_with_ceiling(n, DEFAULT_CEILING)
}

/// Same as [`class_sizes`] with an explicit ceiling on `n`.
///
/// Work is split across threads by the image of the first element; the
/// per-thread tallies are merged by key, so the result does not depend on
/// scheduling.
pub fn class_sizes_with_ceiling(n: u32, ceiling: u32) -> Result<BTreeMap<PartitionSymbol, u64>> {
    if n == 0 {
        return Err(Error::Dimension("n must be at least 1".into()));
    }
    if n > ceiling {
        return Err(Error::BudgetExceeded(format!(
            "enumerating S_{n} exceeds the ceiling n <= {ceiling}"
        )));
    }
    let n = n as usize;
    let partials: Vec<BTreeMap<PartitionSymbol, u64>> = thread::scope(|s| {
        let workers: Vec<_> = (0..n)
            .map(|lead| s.spawn(move || tally_with_lead(n, lead)))
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("enumeration worker panicked"))
            .collect()
    });
    let mut total = BTreeMap::new();
    for partial in partials {
        for (alpha, count) in partial {
            *total.entry(alpha).or_insert(0) += count;
        }
    }
    Ok(total)
}

fn tally_with_lead(n: usize, lead: usize) -> BTreeMap<PartitionSymbol, u64> {
    let mut images: Vec<usize> = std::iter::once(lead)
        .chain((0..n).filter(|&v| v != lead))
        .collect();
    let mut tally = BTreeMap::new();
    loop {
        *tally.entry(cycle_type_of(&images)).or_insert(0) += 1;
        if !next_permutation(&mut images[1..]) {
            break;
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(v: &[u32]) -> PartitionSymbol {
        PartitionSymbol::new(v.to_vec())
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type(), sym(&[4, 0, 0, 0]));
        let swap = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(swap.cycle_type(), sym(&[1, 1, 0]));
        let p = Permutation::from_cycles(10, &[&[4, 5, 6], &[7, 8, 9, 10]]).unwrap();
        assert_eq!(p.cycle_type(), sym(&[3, 0, 1, 1]));
        assert_eq!(p.cycle_type().total(), 10);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn lexicographic_walk_visits_everything() {
        let mut p = Permutation::identity(4);
        let mut seen = vec![p.images()];
        while p.advance() {
            seen.push(p.images());
        }
        assert_eq!(seen.len(), 24);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(p.images(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().sign(), -1);
        assert_eq!(Permutation::new(vec![2, 3, 1]).unwrap().sign(), 1);
    }

    #[test]
    fn class_size_examples() {
        let two = class_sizes(2).unwrap();
        assert_eq!(two, BTreeMap::from([(sym(&[2]), 1), (sym(&[0, 1]), 1)]));
        let three = class_sizes(3).unwrap();
        assert_eq!(
            three,
            BTreeMap::from([(sym(&[3]), 1), (sym(&[1, 1]), 3), (sym(&[0, 0, 1]), 2)])
        );
        assert_eq!(class_sizes(1).unwrap(), BTreeMap::from([(sym(&[1]), 1)]));
    }

    #[test]
    fn ceiling_guard() {
        assert!(matches!(class_sizes(10), Err(Error::BudgetExceeded(_))));
        assert!(matches!(class_sizes(0), Err(Error::Dimension(_))));
        assert!(class_sizes_with_ceiling(4, 4).is_ok());
    }
}
