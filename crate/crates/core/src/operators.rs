//! The derivation `delta`, the raising operators built from it, and the
//! polynomial sequences they generate from the vacuum `x1`.
//!
//! `delta` acts on a variable by `delta(x_k) = k * x_{k+1}` and extends to
//! products by the Leibniz rule. On a monomial `|n_1, n_2, ...>` that is
//!
//! ```text
//! delta |n> = sum_{i : n_i > 0} i * n_i |..., n_i - 1, n_{i+1} + 1, ...>
//! ```
//!
//! The raising operators are `x1 - delta` (generating the Cauchy
//! polynomials `j_k`) and `x1 + delta` (generating the unsigned
//! polynomials `k_k`, whose coefficients are symmetric-group class sizes).
//!
//! Operator identities are checked by applying both sides to every monomial
//! up to a given weight; see [`op_equal_up_to_weight`]. This is a finite
//! check only. All operators here shift weight by a bounded amount, so a
//! modest bound already exercises every variable interaction.

use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{integer, Monomial, Polynomial, Rational, Var};
use crate::partitions::{cauchy_h, enumerate_symbols, factorial, sign_of_symbol};

/// Default weight bound used when comparing operators.
pub const DEFAULT_CHECK_WEIGHT: u32 = 10;

pub fn delta(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        for (i, n) in m.iter() {
            let shifted = m.bumped(i, -1).bumped(i + 1, 1);
            let factor = integer(i as i64 * n as i64);
            out.add_term(shifted, c * factor);
        }
    }
    out
}

/// `x1 * p - delta(p)`.
pub fn raising_minus(p: &Polynomial) -> Polynomial {
    p.times_var(1) - delta(p)
}

/// `x1 * p + delta(p)`.
pub fn raising_plus(p: &Polynomial) -> Polynomial {
    p.times_var(1) + delta(p)
}

/// Memoized sequence `s_0 = 1, s_1 = x1, s_{k+1} = step(s_k)`.
///
/// Slots are filled once under a write lock and never change afterwards, so
/// concurrent readers always see either a missing slot or its final value.
pub struct FockSequence {
    step: fn(&Polynomial) -> Polynomial,
    cache: RwLock<Vec<Arc<Polynomial>>>,
}

impl FockSequence {
    pub const fn new(step: fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            step,
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn get(&self, k: usize) -> Arc<Polynomial> {
        {
            let cache = self.cache.read().unwrap_or_else(|e| e.into_inner());
            if let Some(p) = cache.get(k) {
                return Arc::clone(p);
            }
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        if cache.is_empty() {
            cache.push(Arc::new(Polynomial::one()));
            cache.push(Arc::new(Polynomial::var(1)));
        }
        while cache.len() <= k {
            let next = (self.step)(cache.last().expect("seeded"));
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[k])
    }

    /// Number of cached slots, including `s_0`.
    pub fn cached_len(&self) -> usize {
        self.cache.read().unwrap_or_else(|e| e.into_inner()).len()
    }
}

static J_SEQUENCE: FockSequence = FockSequence::new(raising_minus);
static K_SEQUENCE: FockSequence = FockSequence::new(raising_plus);

/// The Cauchy polynomial `j_k`, obtained by applying `x1 - delta` to `x1`
/// `k - 1` times. `j_0` is the constant 1.
pub fn cauchy_j(k: u32) -> Polynomial {
    (*J_SEQUENCE.get(k as usize)).clone()
}

/// The complementary polynomial `k_k`, generated by `x1 + delta`.
/// `k_0` is the constant 1.
pub fn cauchy_k(k: u32) -> Polynomial {
    (*K_SEQUENCE.get(k as usize)).clone()
}

/// `j_k` assembled directly from partitions of `k`:
/// the coefficient of `x^(a)` is `sign(a) * h(a)`.
pub fn cauchy_j_closed(k: u32) -> Polynomial {
    Polynomial::from_terms(enumerate_symbols(k).into_iter().map(|alpha| {
        let h = Rational::from_integer(BigInt::from(cauchy_h(&alpha)));
        let coefficient = if sign_of_symbol(&alpha) < 0 { -h } else { h };
        (alpha.monomial(), coefficient)
    }))
}

/// `k_k` assembled directly from partitions of `k`; every coefficient is
/// the class size `h(a)`.
pub fn cauchy_k_closed(k: u32) -> Polynomial {
    Polynomial::from_terms(enumerate_symbols(k).into_iter().map(|alpha| {
        let h = Rational::from_integer(BigInt::from(cauchy_h(&alpha)));
        (alpha.monomial(), h)
    }))
}

/// Constant `c` in `d/dx_k j_n = c * j_{n-k}`:
/// `(-1)^(k+1) * (k-1)! * C(n, k)`, and zero when `k > n`.
pub fn lowering_constant(n: u32, k: u32) -> Rational {
    assert!(k >= 1, "variables are indexed from 1");
    if k > n {
        return Rational::from_integer(BigInt::from(0));
    }
    let binom = factorial(n) / (factorial(k) * factorial(n - k));
    let magnitude = Rational::from_integer(BigInt::from(factorial(k - 1) * binom));
    if k % 2 == 1 {
        magnitude
    } else {
        -magnitude
    }
}

type Action = dyn Fn(&Polynomial) -> Polynomial + Send + Sync;

/// A linear map on polynomials together with a readable label.
#[derive(Clone)]
pub struct LinearOperator {
    action: Arc<Action>,
    label: String,
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LinearOperator").field(&self.label).finish()
    }
}

impl fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl LinearOperator {
    pub fn new<F>(label: impl Into<String>, action: F) -> Self
    where
        F: Fn(&Polynomial) -> Polynomial + Send + Sync + 'static,
    {
        Self {
            action: Arc::new(action),
            label: label.into(),
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        (self.action)(p)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity() -> Self {
        Self::new("Id", Polynomial::clone)
    }

    pub fn zero() -> Self {
        Self::new("0", |_| Polynomial::zero())
    }

    pub fn times_var(i: Var) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        Self::new(format!("x{i}"), move |p| p.times_var(i))
    }

    pub fn partial(i: Var) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        Self::new(format!("d{i}"), move |p| p.partial(i))
    }

    pub fn delta() -> Self {
        Self::new("delta", delta)
    }

    pub fn raising_minus() -> Self {
        Self::new("(x1 - delta)", raising_minus)
    }

    pub fn raising_plus() -> Self {
        Self::new("(x1 + delta)", raising_plus)
    }

    /// Multiplies each monomial by its weight. Every homogeneous polynomial
    /// of weight `k`, in particular `j_k`, is an eigenvector with eigenvalue `k`.
    pub fn weight_number() -> Self {
        Self::new("N", |p| {
            Polynomial::from_terms(
                p.terms()
                    .map(|(m, c)| (m.clone(), c * integer(m.weight() as i64))),
            )
        })
    }

    pub fn scaled(&self, c: Rational) -> Self {
        let inner = self.clone();
        Self::new(format!("{c}*{}", self.label), move |p| {
            inner.apply(p).scale(&c)
        })
    }

    /// `self` after `first`: `p -> self(first(p))`.
    pub fn compose(&self, first: &LinearOperator) -> Self {
        let (outer, inner) = (self.clone(), first.clone());
        Self::new(format!("{}{}", self.label, first.label), move |p| {
            outer.apply(&inner.apply(p))
        })
    }

    pub fn plus(&self, other: &LinearOperator) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::new(format!("({} + {})", self.label, other.label), move |p| {
            a.apply(p) + b.apply(p)
        })
    }

    pub fn minus(&self, other: &LinearOperator) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::new(format!("({} - {})", self.label, other.label), move |p| {
            a.apply(p) - b.apply(p)
        })
    }
}

/// `[a, b] = a b - b a`, evaluated by application.
pub fn commutator(a: &LinearOperator, b: &LinearOperator) -> LinearOperator {
    let (a2, b2) = (a.clone(), b.clone());
    LinearOperator::new(format!("[{}, {}]", a.label, b.label), move |p| {
        a2.apply(&b2.apply(p)) - b2.apply(&a2.apply(p))
    })
}

/// Every monomial of weight at most `max_weight`, i.e. one per partition of
/// each `w <= max_weight` (the constant monomial included).
pub fn basis_monomials(max_weight: u32) -> Vec<Monomial> {
    (0..=max_weight)
        .flat_map(|w| enumerate_symbols(w).into_iter().map(|a| a.monomial()))
        .collect()
}

/// First basis monomial (weight `<= max_weight`) on which the operators
/// differ, with both images.
pub fn first_disagreement(
    a: &LinearOperator,
    b: &LinearOperator,
    max_weight: u32,
) -> Option<(Monomial, Polynomial, Polynomial)> {
    basis_monomials(max_weight).into_iter().find_map(|m| {
        let p = Polynomial::term(Rational::one(), m.clone());
        let (pa, pb) = (a.apply(&p), b.apply(&p));
        (pa != pb).then_some((m, pa, pb))
    })
}

pub fn op_equal_up_to_weight(a: &LinearOperator, b: &LinearOperator, max_weight: u32) -> bool {
    assert!(max_weight >= 1, "weight bound must be positive");
    first_disagreement(a, b, max_weight).is_none()
}
