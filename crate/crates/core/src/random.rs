//! Seeded generators for test matrices and vectors.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Rational;
use crate::matrix::ExactMatrix;

/// Entries are drawn from `-BOUND..=BOUND`.
pub const BOUND: i64 = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_integer<R: Rng>(rng: &mut R) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-BOUND..=BOUND)))
}

/// `p / q` with `p` in `-BOUND..=BOUND` and `q` in `1..=BOUND`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-BOUND..=BOUND);
    let q = rng.gen_range(1..=BOUND);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer_matrix<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    let entries = (0..n * n).map(|_| small_integer(rng)).collect();
    ExactMatrix::new(n, entries).expect("square by construction")
}

pub fn rational_matrix<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    let entries = (0..n * n).map(|_| small_rational(rng)).collect();
    ExactMatrix::new(n, entries).expect("square by construction")
}

/// Random integer matrix with non-zero determinant; redraws on singular ones.
pub fn invertible_integer_matrix<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    loop {
        let m = integer_matrix(rng, n);
        if !num_traits::Zero::is_zero(&m.determinant()) {
            return m;
        }
    }
}

pub fn rational_vector<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_rational(rng)).collect()
}
