//! Power traces `I_k = Tr A^k` and prodeterminants `J_k` (coefficients of
//! the characteristic polynomial, `det(A - t) = sum_i (-t)^(n-i) J_i`).
//!
//! `J_k` is computed four independent ways, each behind [`ProdetAlgorithm`]
//! and looked up by name in an [`AlgorithmRegistry`]:
//!
//! | name        | method                                                     |
//! |-------------|------------------------------------------------------------|
//! | `minors`    | sum of all `C(n, k)` principal `k x k` minors (`Tr` of the k-th exterior power) |
//! | `leverrier` | Faddeev-LeVerrier trace recurrence                          |
//! | `cauchy`    | `j_k(I_1, ..., I_k) / k!` using the Cauchy polynomial       |
//! | `antisym`   | brute-force antisymmetrized contraction over `S_k`          |

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::operators::cauchy_j;
use crate::partitions::factorial;
use crate::symgroup::Permutation;

/// Largest `k! * n^k` the antisymmetrized sum will enumerate by default.
pub const ANTISYM_BUDGET: u64 = 100_000_000;

pub fn power_trace(a: &ExactMatrix, k: u32) -> Rational {
    assert!(k >= 1, "power traces start at k = 1");
    a.pow(k).trace()
}

/// `[I_1, ..., I_kmax]`, sharing the matrix powers.
pub fn power_traces(a: &ExactMatrix, kmax: u32) -> Vec<Rational> {
    let mut power = ExactMatrix::identity(a.dim());
    (1..=kmax)
        .map(|_| {
            power = &power * a;
            power.trace()
        })
        .collect()
}

fn check_order(a: &ExactMatrix, k: usize) -> Result<()> {
    if k == 0 || k > a.dim() {
        return Err(Error::Dimension(format!(
            "prodeterminant order {k} outside 1..={} for a {0}x{0} matrix",
            a.dim()
        )));
    }
    Ok(())
}

fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn walk(
        start: usize,
        n: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == k {
            visit(chosen);
            return;
        }
        for i in start..=n - (k - chosen.len()) {
            chosen.push(i);
            walk(i + 1, n, k, chosen, visit);
            chosen.pop();
        }
    }
    walk(0, n, k, &mut Vec::with_capacity(k), &mut visit);
}

/// Sum of the determinants of all principal `k x k` minors.
pub fn prodet_minors(a: &ExactMatrix, k: usize) -> Result<Rational> {
    check_order(a, k)?;
    let mut total = Rational::zero();
    for_each_subset(a.dim(), k, |indices| {
        total += a.principal_submatrix(indices).determinant();
    });
    Ok(total)
}

/// `[J_1, ..., J_n]` from the Faddeev-LeVerrier recurrence
/// `M_1 = A`, `J_m = Tr(M_m) / m`, `M_{m+1} = A (J_m I - M_m)`.
pub fn leverrier_all(a: &ExactMatrix) -> Vec<Rational> {
    let n = a.dim();
    let identity = ExactMatrix::identity(n);
    let mut m = a.clone();
    let mut out = Vec::with_capacity(n);
    for step in 1..=n {
        let j = m.trace() / Rational::from_integer(BigInt::from(step));
        if step < n {
            m = a * &(&identity.scale(&j) - &m);
        }
        out.push(j);
    }
    out
}

pub fn prodet_leverrier(a: &ExactMatrix, k: usize) -> Result<Rational> {
    check_order(a, k)?;
    Ok(leverrier_all(a).swap_remove(k - 1))
}

/// `j_k(I_1, ..., I_k) / k!`. Defined for every `k >= 1`; vanishes for `k > n`.
pub fn prodet_cauchy(a: &ExactMatrix, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Dimension(
            "prodeterminant order must be at least 1".into(),
        ));
    }
    let traces = power_traces(a, k as u32);
    let value = cauchy_j(k as u32).evaluate_seq(&traces)?;
    Ok(value / Rational::from_integer(BigInt::from(factorial(k as u32))))
}

/// Number of terms `k! * n^k` the antisymmetrized sum enumerates.
pub fn antisym_cost(n: usize, k: usize) -> BigUint {
    factorial(k as u32) * BigUint::from(n).pow(k as u32)
}

/// `J_k = (1/k!) sum_{s in S_k} sgn(s) sum_{i_1..i_k} A[i_1][i_s(1)] ... A[i_k][i_s(k)]`,
/// enumerated term by term.
pub fn prodet_antisym(a: &ExactMatrix, k: usize) -> Result<Rational> {
    prodet_antisym_with_budget(a, k, ANTISYM_BUDGET)
}

pub fn prodet_antisym_with_budget(a: &ExactMatrix, k: usize, budget: u64) -> Result<Rational> {
    check_order(a, k)?;
    let n = a.dim();
    let cost = antisym_cost(n, k);
    if cost > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(format!(
            "antisymmetrized sum needs {cost} terms for n = {n}, k = {k} (limit {budget})"
        )));
    }

    // Work over integers: A = B / d.
    let d = a
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let b: Vec<BigInt> = a
        .entries()
        .iter()
        .map(|v| v.numer() * (&d / v.denom()))
        .collect();

    let mut total = BigInt::zero();
    let mut sigma = Permutation::identity(k);
    loop {
        let images = sigma.images0();
        // factor t = B[i_t][i_sigma(t)] becomes known once both indices are chosen
        let mut ready: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (t, &s) in images.iter().enumerate() {
            ready[t.max(s)].push(t);
        }
        let mut tuple = vec![0usize; k];
        let sum = contract(&b, n, images, &ready, &mut tuple, 0, BigInt::one());
        if sigma.sign() > 0 {
            total += sum;
        } else {
            total -= sum;
        }
        if !sigma.advance() {
            break;
        }
    }

    let denom = BigInt::from(factorial(k as u32)) * num_traits::pow(d, k);
    Ok(Rational::new(total, denom))
}

fn contract(
    b: &[BigInt],
    n: usize,
    images: &[usize],
    ready: &[Vec<usize>],
    tuple: &mut [usize],
    depth: usize,
    product: BigInt,
) -> BigInt {
    if depth == tuple.len() {
        return product;
    }
    let mut sum = BigInt::zero();
    for i in 0..n {
        tuple[depth] = i;
        let mut p = product.clone();
        for &t in &ready[depth] {
            p *= &b[tuple[t] * n + tuple[images[t]]];
            if p.is_zero() {
                break;
            }
        }
        if !p.is_zero() {
            sum += contract(b, n, images, ready, tuple, depth + 1, p);
        }
    }
    sum
}

/// `Tr([M, B] M^(k-1))`, which vanishes identically: power traces are
/// conserved along `dM/dt = [M, B]`.
pub fn lax_trace_check(m: &ExactMatrix, b: &ExactMatrix, k: u32) -> Result<Rational> {
    if m.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "M is {0}x{0} but B is {1}x{1}",
            m.dim(),
            b.dim()
        )));
    }
    if k == 0 {
        return Err(Error::Dimension("k must be at least 1".into()));
    }
    let bracket = ExactMatrix::commutator(m, b);
    Ok((&bracket * &m.pow(k - 1)).trace())
}

/// One way of computing prodeterminants.
pub trait ProdetAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn prodet(&self, a: &ExactMatrix, k: usize) -> Result<Rational>;

    /// `[J_1, ..., J_n]`.
    fn prodets(&self, a: &ExactMatrix) -> Result<Vec<Rational>> {
        (1..=a.dim()).map(|k| self.prodet(a, k)).collect()
    }

    /// Whether `prodet(a, k)` would run within this algorithm's limits.
    fn admits(&self, _n: usize, _k: usize) -> bool {
        true
    }
}

impl fmt::Debug for dyn ProdetAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Minors;

impl ProdetAlgorithm for Minors {
    fn name(&self) -> &'static str {
        "minors"
    }
    fn description(&self) -> &'static str {
        "sum of principal minors (fraction-free determinants)"
    }
    fn prodet(&self, a: &ExactMatrix, k: usize) -> Result<Rational> {
        prodet_minors(a, k)
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Leverrier;

impl ProdetAlgorithm for Leverrier {
    fn name(&self) -> &'static str {
        "leverrier"
    }
    fn description(&self) -> &'static str {
        "Faddeev-LeVerrier trace recurrence"
    }
    fn prodet(&self, a: &ExactMatrix, k: usize) -> Result<Rational> {
        prodet_leverrier(a, k)
    }
    fn prodets(&self, a: &ExactMatrix) -> Result<Vec<Rational>> {
        Ok(leverrier_all(a))
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct CauchyPolynomial;

impl ProdetAlgorithm for CauchyPolynomial {
    fn name(&self) -> &'static str {
        "cauchy"
    }
    fn description(&self) -> &'static str {
        "Cauchy polynomial j_k evaluated at power traces, divided by k!"
    }
    fn prodet(&self, a: &ExactMatrix, k: usize) -> Result<Rational> {
        prodet_cauchy(a, k)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Antisymmetrized {
    pub budget: u64,
}

impl Default for Antisymmetrized {
    fn default() -> Self {
        Self {
            budget: ANTISYM_BUDGET,
        }
    }
}

impl ProdetAlgorithm for Antisymmetrized {
    fn name(&self) -> &'static str {
        "antisym"
    }
    fn description(&self) -> &'static str {
        "antisymmetrized contraction over the symmetric group"
    }
    fn prodet(&self, a: &ExactMatrix, k: usize) -> Result<Rational> {
        prodet_antisym_with_budget(a, k, self.budget)
    }
    fn admits(&self, n: usize, k: usize) -> bool {
        antisym_cost(n, k) <= BigUint::from(self.budget)
    }
}

/// Named prodeterminant algorithms, kept in registration order.
pub struct AlgorithmRegistry {
    entries: Vec<Box<dyn ProdetAlgorithm>>,
}

impl AlgorithmRegistry {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// Registers an algorithm, replacing any previous entry of the same name.
    pub fn register(&mut self, algorithm: Box<dyn ProdetAlgorithm>) {
        match self
            .entries
            .iter()
            .position(|e| e.name() == algorithm.name())
        {
            Some(i) => self.entries[i] = algorithm,
            None => self.entries.push(algorithm),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn ProdetAlgorithm> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(Box::as_ref)
            .ok_or_else(|| Error::UnknownAlgorithm(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ProdetAlgorithm> {
        self.entries.iter().map(Box::as_ref)
    }

    /// Resolves a list of names, preserving order.
    pub fn select(&self, names: &[&str]) -> Result<Vec<&dyn ProdetAlgorithm>> {
        names.iter().map(|n| self.get(n)).collect()
    }
}

impl Default for AlgorithmRegistry {
    /// `minors`, `leverrier`, `cauchy`, `antisym`.
    fn default() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(Minors));
        registry.register(Box::new(Leverrier));
        registry.register(Box::new(CauchyPolynomial));
        registry.register(Box::new(Antisymmetrized::default()));
        registry
    }
}
