//! Integer partitions, partition symbols (multiplicity vectors) and the
//! Cauchy enumeration formula.
//!
//! Partitions are kept weakly increasing, e.g. `(1,1,1,3,4)` for a partition
//! of 10, whose symbol is `[3,0,1,1]`: three 1s, no 2s, one 3, one 4.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts parts in any order and sorts them; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidSymbol(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Multiplicity vector `[a_1, ..., a_k]` with `sum i * a_i = k`, stored with
/// length exactly `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionSymbol {
    multiplicities: Vec<u32>,
}

impl PartitionSymbol {
    /// Infers `k` from the multiplicities and normalizes the length to `k`.
    pub fn new(multiplicities: Vec<u32>) -> Self {
        let total = weighted_sum(&multiplicities);
        Self::canonical(multiplicities, total as usize)
    }

    /// Like [`PartitionSymbol::new`], but checks the declared total.
    pub fn with_total(multiplicities: Vec<u32>, k: u32) -> Result<Self> {
        let total = weighted_sum(&multiplicities);
        if total != k as u64 {
            return Err(Error::InvalidSymbol(format!(
                "{multiplicities:?} describes a partition of {total}, not {k}"
            )));
        }
        Ok(Self::canonical(multiplicities, k as usize))
    }

    fn canonical(mut multiplicities: Vec<u32>, k: usize) -> Self {
        multiplicities.resize(k, 0);
        Self { multiplicities }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Multiplicity of parts equal to `i` (1-based).
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.multiplicities.get(i - 1).copied().unwrap_or(0)
    }

    /// The `k` this symbol partitions.
    pub fn total(&self) -> u32 {
        self.multiplicities.len() as u32
    }

    /// Number of parts, i.e. the number of cycles of the matching
    /// permutation class.
    pub fn num_parts(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// The monomial `x1^a_1 * x2^a_2 * ...`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(&self.multiplicities)
    }

    /// Reads a monomial's exponents as a symbol. The symbol partitions the
    /// monomial's weight.
    pub fn from_monomial(m: &Monomial) -> Self {
        let len = m.max_var().unwrap_or(0) as usize;
        Self::new(m.dense(len))
    }
}

impl fmt::Display for PartitionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = self
            .multiplicities
            .iter()
            .rposition(|&a| a != 0)
            .map_or(0, |p| p + 1);
        let items: Vec<String> = self.multiplicities[..end]
            .iter()
            .map(u32::to_string)
            .collect();
        write!(f, "[{}]", items.join(","))
    }
}

fn weighted_sum(multiplicities: &[u32]) -> u64 {
    multiplicities
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as u64 + 1) * a as u64)
        .sum()
}

/// All partitions of `k`, each exactly once, in lexicographic order of their
/// weakly increasing part sequences: `(1,1,1,1) < (1,1,2) < (1,3) < (2,2) < (4)`.
///
/// `k = 0` yields the single empty partition.
pub fn enumerate_partitions(k: u32) -> Vec<Partition> {
    fn walk(remaining: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        for part in min_part..=remaining {
            prefix.push(part);
            if part == remaining {
                out.push(Partition {
                    parts: prefix.clone(),
                });
            } else if remaining - part >= part {
                walk(remaining - part, part, prefix, out);
            }
            prefix.pop();
        }
    }

    if k == 0 {
        return vec![Partition { parts: Vec::new() }];
    }
    let mut out = Vec::new();
    walk(k, 1, &mut Vec::new(), &mut out);
    out
}

/// Symbols of all partitions of `k`, in the same order as
/// [`enumerate_partitions`].
pub fn enumerate_symbols(k: u32) -> Vec<PartitionSymbol> {
    enumerate_partitions(k).iter().map(to_symbol).collect()
}

pub fn to_symbol(partition: &Partition) -> PartitionSymbol {
    let k = partition.total() as usize;
    let mut multiplicities = vec![0u32; k];
    for &p in &partition.parts {
        multiplicities[p as usize - 1] += 1;
    }
    PartitionSymbol { multiplicities }
}

pub fn from_symbol(symbol: &PartitionSymbol) -> Partition {
    let parts = symbol
        .multiplicities
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i as u32 + 1, a as usize))
        .collect();
    Partition { parts }
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `h(a) = k! / (prod a_i! * prod i^a_i)`, the number of permutations of
/// `k` elements with cycle type `a`.
pub fn cauchy_h(symbol: &PartitionSymbol) -> BigUint {
    let numerator = factorial(symbol.total());
    let denominator = symbol
        .multiplicities
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &a)| {
            acc * factorial(a) * BigUint::from(i as u64 + 1).pow(a)
        });
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "Cauchy formula did not divide evenly for {symbol}"
    );
    quotient
}

/// `(-1)^(a_2 + a_4 + ...)`.
pub fn sign_of_symbol(symbol: &PartitionSymbol) -> i32 {
    let even_parts: u64 = symbol
        .multiplicities
        .iter()
        .skip(1)
        .step_by(2)
        .map(|&a| a as u64)
        .sum();
    if even_parts.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal-number recurrence for p(n).
    fn partition_count(n: usize) -> Vec<u64> {
        let mut counts = vec![0i64; n + 1];
        counts[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for j in 1.. {
                let j = j as i64;
                let g1 = (j * (3 * j - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * counts[m - g1];
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * counts[m - g2];
                }
            }
            counts[m] = total;
        }
        counts.into_iter().map(|c| c as u64).collect()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let four = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![
                p(&[1, 1, 1, 1]),
                p(&[1, 1, 2]),
                p(&[1, 3]),
                p(&[2, 2]),
                p(&[4])
            ]
        );
        assert!(enumerate_partitions(10).contains(&p(&[1, 1, 1, 3, 4])));
    }

    #[test]
    fn enumerate_counts_match_pentagonal_recurrence() {
        let counts = partition_count(20);
        for k in 1..=20u32 {
            let parts = enumerate_partitions(k);
            assert_eq!(parts.len() as u64, counts[k as usize], "p({k})");
            assert!(parts.windows(2).all(|w| w[0] < w[1]), "order for {k}");
            assert!(parts.iter().all(|q| q.total() == k));
            assert!(parts
                .iter()
                .all(|q| q.parts().windows(2).all(|w| w[0] <= w[1])));
        }
    }

    #[test]
    fn symbol_conversions() {
        let lambda = p(&[4, 1, 3, 1, 1]);
        assert_eq!(lambda.parts(), &[1, 1, 1, 3, 4]);
        let alpha = to_symbol(&lambda);
        assert_eq!(alpha.multiplicities(), &[3, 0, 1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(alpha.to_string(), "[3,0,1,1]");
        assert_eq!(from_symbol(&alpha), lambda);

        let single = to_symbol(&p(&[6]));
        assert_eq!(single.multiplicities(), &[0, 0, 0, 0, 0, 1]);

        assert_eq!(from_symbol(&PartitionSymbol::new(vec![2])), p(&[1, 1]));
    }

    #[test]
    fn symbol_validation() {
        assert!(PartitionSymbol::with_total(vec![3, 0, 1, 1], 10).is_ok());
        assert!(matches!(
            PartitionSymbol::with_total(vec![3, 0, 1, 1], 9),
            Err(Error::InvalidSymbol(_))
        ));
        let padded = PartitionSymbol::with_total(vec![2, 0, 0, 0, 0], 2).unwrap();
        assert_eq!(padded.multiplicities(), &[2, 0]);
        assert!(Partition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn round_trip_all_partitions() {
        for k in 1..=12 {
            for lambda in enumerate_partitions(k) {
                assert_eq!(from_symbol(&to_symbol(&lambda)), lambda);
            }
        }
    }

    #[test]
    fn cauchy_h_examples() {
        assert_eq!(
            cauchy_h(&PartitionSymbol::new(vec![1])),
            BigUint::from(1u32)
        );
        assert_eq!(
            cauchy_h(&PartitionSymbol::new(vec![1, 1])),
            BigUint::from(3u32)
        );
        assert_eq!(
            cauchy_h(&PartitionSymbol::new(vec![3, 0, 1, 1])),
            BigUint::from(50400u32)
        );
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=12 {
            let total: BigUint = enumerate_symbols(n).iter().map(cauchy_h).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_of_symbol(&PartitionSymbol::new(vec![0, 0, 1])), 1);
        assert_eq!(sign_of_symbol(&PartitionSymbol::new(vec![0, 1])), -1);
        assert_eq!(sign_of_symbol(&PartitionSymbol::new(vec![0, 2])), 1);
        assert_eq!(sign_of_symbol(&PartitionSymbol::new(vec![1, 0, 0, 1])), -1);
    }

    #[test]
    fn sign_matches_permutation_parity_formula() {
        for n in 1..=12 {
            for alpha in enumerate_symbols(n) {
                let parity = (n - alpha.num_parts()) % 2;
                let expected = if parity == 0 { 1 } else { -1 };
                assert_eq!(sign_of_symbol(&alpha), expected, "{alpha}");
            }
        }
    }

    #[test]
    fn monomial_round_trip() {
        let alpha = PartitionSymbol::new(vec![3, 0, 1, 1]);
        let m = alpha.monomial();
        assert_eq!(m.weight(), 10);
        assert_eq!(PartitionSymbol::from_monomial(&m), alpha);
    }
}
