//! Initial degree, Waldschmidt constant and resurgence bounds.
//!
//! For a square-free ideal with minimal vertex covers `C`, the Waldschmidt
//! constant is the optimum of the covering LP
//! `min Σ x_i` subject to `x ≥ 0` and `Σ_{i∈C} x_i ≥ 1` for every `C`.
//! Since `α(I^(a+b)) ≤ α(I^(a)) + α(I^(b))`, Fekete's lemma makes the
//! limit of `α(I^(m))/m` its infimum, which the tests compare against.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::lp::{maximize, rational};
use crate::monomial::MonomialIdeal;
use crate::symbolic::SymbolicIdeal;

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(pub BigRational);

impl ExactRational {
    pub fn new(num: i64, den: i64) -> Self {
        ExactRational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Self {
        ExactRational(rational(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

struct BigIntJson<'a>(&'a BigInt);

impl Serialize for BigIntJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExactRational", 2)?;
        st.serialize_field("num", &BigIntJson(self.0.numer()))?;
        st.serialize_field("den", &BigIntJson(self.0.denom()))?;
        st.end()
    }
}

/// Least degree of a minimal generator.
pub fn alpha(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.generators().iter().map(|g| g.degree()).min().ok_or(Error::ZeroIdeal)
}

/// `α(I^(m)) / m` for `m = 1..=max_power`.
pub fn waldschmidt_sequence(ideal: &MonomialIdeal, max_power: u32) -> Result<Vec<ExactRational>> {
    let symbolic = SymbolicIdeal::new(ideal)?;
    (1..=max_power)
        .map(|m| {
            let a = alpha(&symbolic.power(m)?)?;
            Ok(ExactRational(BigRational::new(BigInt::from(a), BigInt::from(m))))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaldschmidtSolution {
    pub value: ExactRational,
    /// An optimal point of the covering LP.
    pub point: Vec<ExactRational>,
}

pub fn waldschmidt_exact(ideal: &MonomialIdeal) -> Result<WaldschmidtSolution> {
    waldschmidt_with(&SymbolicIdeal::new(ideal)?)
}

/// Solves the packing dual `max Σ y_C` subject to `Σ_{C∋i} y_C ≤ 1`; the
/// row multipliers are an optimal covering point.
pub fn waldschmidt_with(symbolic: &SymbolicIdeal) -> Result<WaldschmidtSolution> {
    let covers = symbolic.minimal_primes();
    let num_vars = symbolic.ideal().num_vars();
    let a: Vec<Vec<BigRational>> = (0..num_vars)
        .map(|i| covers.iter().map(|c| if c.contains(i) { rational(1) } else { rational(0) }).collect())
        .collect();
    let ones_c = vec![rational(1); covers.len()];
    let ones_b = vec![rational(1); num_vars];
    let solution = maximize(&ones_c, &a, &ones_b)?;
    Ok(WaldschmidtSolution {
        value: ExactRational(solution.objective),
        point: solution.dual.into_iter().map(ExactRational).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    pub alpha: u64,
    pub waldschmidt: ExactRational,
    /// `α(I) / α̂(I)`, a lower bound for the resurgence.
    pub rho_lower: ExactRational,
    /// The ambient dimension, an upper bound for the resurgence.
    pub rho_upper: usize,
    /// Pairs `[n, m]`, `1 ≤ m ≤ n ≤ N`, with `I^(n) ⊄ I^m`.
    pub failures: Vec<[u32; 2]>,
    /// Largest `n/m` over the failures; a certified lower bound for the
    /// resurgence, not the resurgence itself.
    pub empirical_max: Option<ExactRational>,
}

pub fn resurgence_report(ideal: &MonomialIdeal, max_power: u32, limits: &Limits) -> Result<ResurgenceReport> {
    let symbolic = SymbolicIdeal::with_limits(ideal, *limits)?;
    let a = alpha(ideal)?;
    let waldschmidt = waldschmidt_with(&symbolic)?.value;
    if waldschmidt.0.is_zero() {
        return Err(Error::Invalid("degenerate covering LP".into()));
    }
    let rho_lower = ExactRational(rational(a as i64) / &waldschmidt.0);
    let mut failures = Vec::new();
    for n in 1..=max_power {
        for m in 1..=n {
            if !symbolic.containment(n, m)?.holds {
                failures.push([n, m]);
            }
        }
    }
    let empirical_max = failures.iter().map(|&[n, m]| ExactRational::new(n.into(), m.into())).max();
    Ok(ResurgenceReport { alpha: a, waldschmidt, rho_lower, rho_upper: ideal.num_vars(), failures, empirical_max })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MonomialIdeal {
        MonomialIdeal::from_supports(3, [[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&MonomialIdeal::maximal(2)).unwrap(), 1);
        assert_eq!(alpha(&SymbolicIdeal::new(&triangle()).unwrap().power(2).unwrap()).unwrap(), 3);
        assert_eq!(alpha(&MonomialIdeal::zero(2)).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn rational_display_and_json() {
        assert_eq!(ExactRational::new(6, 4).to_string(), "3/2");
        assert_eq!(ExactRational::integer(2).to_string(), "2");
        assert_eq!(serde_json::to_string(&ExactRational::new(-3, 6)).unwrap(), r#"{"num":-1,"den":2}"#);
    }

    #[test]
    fn waldschmidt_examples() {
        let t = waldschmidt_exact(&triangle()).unwrap();
        assert_eq!(t.value, ExactRational::new(3, 2));
        assert_eq!(t.point, vec![ExactRational::new(1, 2); 3]);
        assert_eq!(waldschmidt_exact(&MonomialIdeal::maximal(4)).unwrap().value, ExactRational::integer(1));
        let edge = MonomialIdeal::from_supports(2, [[0, 1]]).unwrap();
        assert_eq!(waldschmidt_exact(&edge).unwrap().value, ExactRational::integer(2));
        assert_eq!(waldschmidt_sequence(&edge, 3).unwrap(), vec![ExactRational::integer(2); 3]);
        assert_eq!(waldschmidt_sequence(&MonomialIdeal::maximal(3), 3).unwrap(), vec![ExactRational::integer(1); 3]);
    }

    #[test]
    fn resurgence_of_triangle() {
        let r = resurgence_report(&triangle(), 4, &Limits::default()).unwrap();
        assert_eq!(r.alpha, 2);
        assert_eq!(r.rho_lower, ExactRational::new(4, 3));
        assert_eq!(r.rho_upper, 3);
        assert!(r.failures.contains(&[2, 2]));
        let mx = resurgence_report(&MonomialIdeal::maximal(3), 3, &Limits::default()).unwrap();
        assert!(mx.failures.is_empty());
        assert_eq!(mx.empirical_max, None);
        assert_eq!(mx.rho_lower, ExactRational::integer(1));
    }
}
