//! Elementary symmetric functions `c_k`, power sums `s_k` and Wronski
//! (complete homogeneous) functions `w_k`, plus the conversions from power
//! sums to the other two families through partition sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::partitions::{cauchy_h, enumerate_symbols, factorial, sign_of_symbol, PartitionSymbol};

/// Values assigned to `x_1, ..., x_n`. Variables past the end count as zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariableVector(pub Vec<Rational>);

impl VariableVector {
    pub fn new(values: Vec<Rational>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<Rational>> for VariableVector {
    fn from(values: Vec<Rational>) -> Self {
        Self(values)
    }
}

/// `c_k`: sum of products over strictly increasing index k-tuples.
///
/// Runs the product `prod (1 + x_i t)` coefficient-wise instead of listing
/// the `C(n, k)` tuples.
pub fn eval_elementary(k: usize, xs: &VariableVector) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for x in xs.values() {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e.swap_remove(k)
}

/// `s_k = x_1^k + ... + x_n^k`.
pub fn eval_power_sum(k: usize, xs: &VariableVector) -> Rational {
    assert!(k >= 1, "power sums start at k = 1");
    xs.values()
        .iter()
        .map(|x| num_traits::pow(x.clone(), k))
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// `w_k`: sum over weakly increasing index k-tuples.
///
/// Multiplies in one geometric series `1 / (1 - x_i t)` per variable; each
/// factor is a running prefix sum over the coefficient vector.
pub fn eval_wronski(k: usize, xs: &VariableVector) -> Rational {
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for x in xs.values() {
        for j in 1..=k {
            let add = &h[j - 1] * x;
            h[j] += add;
        }
    }
    h.swap_remove(k)
}

fn partition_sum(k: u32, s: &[Rational], signed: bool) -> Rational {
    assert!(k >= 1, "k must be positive");
    assert!(
        s.len() >= k as usize,
        "need power sums s_1..s_{k}, got {}",
        s.len()
    );
    let k_factorial = Rational::from_integer(BigInt::from(factorial(k)));
    let total = enumerate_symbols(k)
        .iter()
        .map(|alpha| {
            let mut term = Rational::from_integer(BigInt::from(cauchy_h(alpha)));
            if signed && sign_of_symbol(alpha) < 0 {
                term = -term;
            }
            term * power_product(alpha, s)
        })
        .fold(Rational::zero(), |acc, v| acc + v);
    total / k_factorial
}

fn power_product(alpha: &PartitionSymbol, s: &[Rational]) -> Rational {
    alpha
        .multiplicities()
        .iter()
        .zip(s)
        .filter(|(&a, _)| a > 0)
        .fold(Rational::one(), |acc, (&a, v)| {
            acc * num_traits::pow(v.clone(), a as usize)
        })
}

/// `c_k` from power sums `s_1..s_k`:
/// `sum_a sign(a) * h(a) / k! * s_1^a_1 * ... * s_k^a_k`.
pub fn c_from_power_sums(k: u32, s: &[Rational]) -> Rational {
    partition_sum(k, s, true)
}

/// `w_k` from power sums: the same sum without the sign.
pub fn w_from_power_sums(k: u32, s: &[Rational]) -> Rational {
    partition_sum(k, s, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{integer, rational};

    fn ints(values: &[i64]) -> VariableVector {
        values
            .iter()
            .map(|&v| integer(v))
            .collect::<Vec<_>>()
            .into()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(eval_elementary(2, &ints(&[1, 1, 1])), integer(3));
        assert_eq!(eval_elementary(3, &ints(&[1, 2, 3])), integer(6));
        assert_eq!(eval_elementary(2, &ints(&[1, 2, 3])), integer(11));
        assert_eq!(eval_elementary(0, &ints(&[])), integer(1));
        assert_eq!(eval_elementary(4, &ints(&[1, 2, 3])), integer(0));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(eval_power_sum(1, &ints(&[1, 2, 3])), integer(6));
        assert_eq!(eval_power_sum(2, &ints(&[1, 2, 3])), integer(14));
        assert_eq!(eval_power_sum(5, &ints(&[0, 0, 0])), integer(0));
    }

    #[test]
    fn wronski_examples() {
        assert_eq!(eval_wronski(2, &ints(&[1, 1, 1])), integer(6));
        assert_eq!(eval_wronski(2, &ints(&[1, 2, 3])), integer(25));
        assert_eq!(eval_wronski(3, &ints(&[1, 2, 3])), integer(90));
        assert_eq!(eval_wronski(0, &ints(&[])), integer(1));
        // no vanishing past the number of variables
        assert_eq!(eval_wronski(4, &ints(&[1, 1])), integer(5));
    }

    #[test]
    fn trailing_zeros_do_not_matter() {
        let xs = vec![rational(1, 2), integer(-3), integer(4)];
        let mut padded = xs.clone();
        padded.extend([integer(0), integer(0)]);
        let (a, b) = (VariableVector::new(xs), VariableVector::new(padded));
        for k in 1..=6 {
            assert_eq!(eval_elementary(k, &a), eval_elementary(k, &b));
            assert_eq!(eval_power_sum(k, &a), eval_power_sum(k, &b));
            assert_eq!(eval_wronski(k, &a), eval_wronski(k, &b));
        }
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(
            c_from_power_sums(2, &[integer(6), integer(14)]),
            integer(11)
        );
        assert_eq!(
            c_from_power_sums(3, &[integer(6), integer(14), integer(36)]),
            integer(6)
        );
        let s1 = rational(-5, 3);
        assert_eq!(c_from_power_sums(1, std::slice::from_ref(&s1)), s1);
        assert_eq!(w_from_power_sums(1, std::slice::from_ref(&s1)), s1);
        assert_eq!(
            w_from_power_sums(2, &[integer(6), integer(14)]),
            integer(25)
        );
        assert_eq!(
            w_from_power_sums(3, &[integer(6), integer(14), integer(36)]),
            integer(90)
        );
    }

    #[test]
    fn degree_one_coincides() {
        let xs = VariableVector::new(vec![rational(2, 7), integer(5), rational(-1, 3)]);
        let c1 = eval_elementary(1, &xs);
        assert_eq!(c1, eval_power_sum(1, &xs));
        assert_eq!(c1, eval_wronski(1, &xs));
    }
}
