//! Monomials and monomial ideals.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set,
//! sorted in graded lexicographic order, so two ideals are equal exactly when
//! their representations are equal.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exponent vector `a`, standing for `x^a = x_1^{a_1} ... x_d^{a_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The variable `x_i`.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    /// The square-free product of the variables in `vars`.
    pub fn from_support(num_vars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; num_vars];
        for v in vars {
            e[v] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`: componentwise `max(a_i - b_i, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Exact quotient; `None` unless `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| self.colon(divisor))
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch { expected: self.0.len(), found: other.0.len() });
        }
        Ok(())
    }
}

/// Graded lexicographic: lower degree first, ties broken so that `x_1^2`
/// precedes `x_1 x_2` precedes `x_2^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the bare exponent vector.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal held by its minimal generators in canonical order.
///
/// No generators means the zero ideal; the single generator `1` means the
/// unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal elements.
    pub fn minimalize(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.num_vars() != num_vars) {
            return Err(Error::DimensionMismatch { expected: num_vars, found: bad.num_vars() });
        }
        all.sort_unstable();
        all.dedup();
        // A proper divisor has strictly smaller degree, so it is already kept
        // by the time any of its multiples is examined.
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { num_vars, gens: kept })
    }

    /// Caller guarantees `gens` is already an antichain sorted canonically.
    pub(crate) fn from_sorted_minimal(num_vars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { num_vars, gens }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, gens: Vec::new() }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, gens: vec![Monomial::one(num_vars)] }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(num_vars: usize) -> Self {
        Self::minimalize(num_vars, (0..num_vars).map(|i| Monomial::var(num_vars, i))).expect("dimensions agree")
    }

    /// The ideal generated by square-free monomials with the given supports.
    pub fn from_supports<S, I>(num_vars: usize, supports: S) -> Result<Self>
    where
        S: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut gens = Vec::new();
        for s in supports {
            let mut e = vec![0; num_vars];
            for v in s {
                if v >= num_vars {
                    return Err(Error::Invalid(format!("variable index {v} out of range")));
                }
                e[v] = 1;
            }
            gens.push(Monomial(e));
        }
        Self::minimalize(num_vars, gens)
    }

    pub fn from_exponents(num_vars: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::minimalize(num_vars, rows.into_iter().map(Monomial))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    /// Indices of variables occurring in some minimal generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.num_vars).filter(|&i| self.gens.iter().any(|g| g.exponents()[i] > 0)).collect()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Self::minimalize(self.num_vars, gens)
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.num_vars);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via pairwise lcm of generators. Quadratic in the generator
    /// counts; this is the hot spot when intersecting many ideals.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::minimalize(self.num_vars, gens)
    }

    /// `I : m`.
    pub fn quotient(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        Self::minimalize(self.num_vars, self.gens.iter().map(|g| g.colon(m)))
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimalize(self.num_vars, self.gens.iter().map(|g| Monomial::from_support(self.num_vars, g.support())))
            .expect("dimensions agree")
    }

    /// Decides `m ∈ I^n` without materialising `I^n`: a depth-first search
    /// for `n` generators whose product divides `m`, memoising failed
    /// `(residual, budget)` states.
    pub fn power_membership(&self, m: &Monomial, n: u32) -> Result<bool> {
        self.check_monomial(m)?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if n == 0 {
            return Ok(true);
        }
        let min_deg = self.gens.iter().map(Monomial::degree).min().unwrap_or(0);
        let mut failed = HashSet::new();
        Ok(self.cover_by_generators(m.clone(), n, min_deg, &mut failed))
    }

    fn cover_by_generators(
        &self,
        residual: Monomial,
        budget: u32,
        min_deg: u64,
        failed: &mut HashSet<(Monomial, u32)>,
    ) -> bool {
        if budget == 0 {
            return true;
        }
        if residual.degree() < min_deg * u64::from(budget) {
            return false;
        }
        if failed.contains(&(residual.clone(), budget)) {
            return false;
        }
        for g in &self.gens {
            if let Some(rest) = residual.checked_div(g) {
                if self.cover_by_generators(rest, budget - 1, min_deg, failed) {
                    return true;
                }
            }
        }
        failed.insert((residual, budget));
        false
    }

    pub(crate) fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: m.num_vars() });
        }
        Ok(())
    }

    fn check_ideal(&self, other: &MonomialIdeal) -> Result<()> {
        if other.num_vars != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: other.num_vars });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
