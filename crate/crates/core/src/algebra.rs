//! Exact rational numbers and sparse polynomials over the variables
//! `x1, x2, x3, ...`.
//!
//! A [`Polynomial`] is a finite map from [`Monomial`] to a non-zero
//! [`Rational`] coefficient. Every constructor and operation keeps that map
//! canonical, so structural equality is mathematical equality.
//!
//! Monomials are ordered by weight (`sum i * n_i`) and then
//! lexicographically by exponent sequence `(n_1, n_2, ...)`. Rendering walks
//! this order from the largest monomial down, which yields e.g.
//! `x1^3 - 3*x1*x2 + 2*x3`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Index of a variable; `x1` has index 1.
pub type Var = u32;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"3"`, `"-7/2"` or `"+4"`. Denominator zero is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `x1^n1 * x2^n2 * ...`, stored sparsely. No stored exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: Var) -> Self {
        Self::power(i, 1)
    }

    pub fn power(i: Var, exponent: u32) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut exponents = BTreeMap::new();
        if exponent > 0 {
            exponents.insert(i, exponent);
        }
        Self { exponents }
    }

    /// Builds `x1^e[0] * x2^e[1] * ...` from a dense exponent sequence.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let exponents = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as Var + 1, e))
            .collect();
        Self { exponents }
    }

    /// Builds from `(variable, exponent)` pairs; repeated variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut m = Self::one();
        for (i, e) in pairs {
            m.bump(i, e as i64);
        }
        m
    }

    pub fn exponent(&self, i: Var) -> u32 {
        self.exponents.get(&i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Largest variable index present, or `None` for the constant monomial.
    pub fn max_var(&self) -> Option<Var> {
        self.exponents.keys().next_back().copied()
    }

    /// Dense exponent vector `(n_1, ..., n_len)`.
    pub fn dense(&self, len: usize) -> Vec<u32> {
        (1..=len as Var).map(|i| self.exponent(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exponents.iter().map(|(&i, &e)| (i, e))
    }

    /// `sum_i i * n_i`.
    pub fn weight(&self) -> u64 {
        self.exponents
            .iter()
            .map(|(&i, &e)| i as u64 * e as u64)
            .sum()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| e as u64).sum()
    }

    /// Adds `delta` to the exponent of `x_i`. Panics if it would go negative.
    pub(crate) fn bump(&mut self, i: Var, delta: i64) {
        assert!(i >= 1, "variables are indexed from 1");
        let current = self.exponent(i) as i64;
        let next = current + delta;
        assert!(next >= 0, "negative exponent for x{i}");
        if next == 0 {
            self.exponents.remove(&i);
        } else {
            self.exponents.insert(i, next as u32);
        }
    }

    pub(crate) fn bumped(&self, i: Var, delta: i64) -> Self {
        let mut m = self.clone();
        m.bump(i, delta);
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (i, e) in other.iter() {
            m.bump(i, e as i64);
        }
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            let top = self.max_var().max(other.max_var()).unwrap_or(0);
            (1..=top)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients. The empty map is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(i: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Accumulates `c * m`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient `<n|p>`; zero when the monomial is absent.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Largest monomial weight, `None` for the zero polynomial.
    pub fn weight(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::weight).max()
    }

    /// `Some(w)` when every monomial has weight `w`; `None` for zero or mixed.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let w = weights.next()?;
        weights.all(|v| v == w).then_some(w)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: Var) -> Polynomial {
        assert!(i >= 1, "variables are indexed from 1");
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(m.bumped(i, -1), c * integer(e as i64));
            }
        }
        out
    }

    /// Multiplication by the variable `x_i`.
    pub fn times_var(&self, i: Var) -> Polynomial {
        assert!(i >= 1, "variables are indexed from 1");
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.bumped(i, 1), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a rational for every variable occurring in `self`.
    pub fn evaluate(&self, values: &BTreeMap<Var, Rational>) -> Result<Rational> {
        self.evaluate_with(|i| values.get(&i).cloned())
    }

    /// Substitutes `x_i = values[i - 1]`.
    pub fn evaluate_seq(&self, values: &[Rational]) -> Result<Rational> {
        self.evaluate_with(|i| values.get(i as usize - 1).cloned())
    }

    fn evaluate_with<F: Fn(Var) -> Option<Rational>>(&self, lookup: F) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.iter() {
                let v = lookup(i).ok_or(Error::MissingAssignment(i))?;
                term *= num_traits::pow(v, e as usize);
            }
            total += term;
        }
        Ok(total)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
