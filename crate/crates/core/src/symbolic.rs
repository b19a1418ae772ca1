//! Symbolic and differential powers of monomial ideals.
//!
//! For a square-free ideal `I` with minimal primes `p_C`, the `n`-th symbolic
//! power is `∩_C p_C^n`: a monomial `x^a` belongs to it exactly when
//! `Σ_{i∈C} a_i ≥ n` for every minimal vertex cover `C`.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{minimal_primes_with, prime_ideal, VertexSet};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::{Monomial, MonomialIdeal};

/// A square-free ideal together with its minimal primes.
#[derive(Debug, Clone)]
pub struct SymbolicIdeal {
    ideal: MonomialIdeal,
    covers: Vec<VertexSet>,
    limits: Limits,
}

/// Outcome of a generator-wise containment scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentCheck {
    pub holds: bool,
    /// The canonically least generator of the larger ideal that escapes.
    pub witness: Option<Monomial>,
}

impl SymbolicIdeal {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Self::with_limits(ideal, Limits::default())
    }

    pub fn with_limits(ideal: &MonomialIdeal, limits: Limits) -> Result<Self> {
        if !ideal.is_square_free() {
            return Err(Error::SymbolicNotSquareFree);
        }
        let covers = minimal_primes_with(ideal, &limits)?;
        Ok(SymbolicIdeal { ideal: ideal.clone(), covers, limits })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn minimal_primes(&self) -> &[VertexSet] {
        &self.covers
    }

    pub fn big_height(&self) -> usize {
        self.covers.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.covers.iter().map(|c| c.len()).min().unwrap_or(0)
    }

    /// `m ∈ I^(n)`.
    pub fn contains(&self, m: &Monomial, n: u32) -> Result<bool> {
        self.ideal.check_monomial(m)?;
        check_positive(n)?;
        let e = m.exponents();
        Ok(self.covers.iter().all(|c| c.iter().map(|i| u64::from(e[i])).sum::<u64>() >= u64::from(n)))
    }

    /// Minimal generators of `I^(n)`.
    ///
    /// Variables are assigned in index order. A vector `a` satisfying every
    /// cover is minimal iff each `i` with `a_i > 0` lies in a cover whose sum
    /// is exactly `n`; since cover sums only grow as assignment proceeds,
    /// this bounds `a_i ≤ max_{C∋i} (n - partial_C) ≤ n`, and a cover whose
    /// last variable is `i` forces `a_i ≥ n - partial_C`. Every leaf reached is
    /// therefore a distinct minimal generator.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        check_positive(n)?;
        let num_vars = self.ideal.num_vars();
        let mut covers_of_var = vec![Vec::new(); num_vars];
        let mut closing = vec![Vec::new(); num_vars];
        for (c, cover) in self.covers.iter().enumerate() {
            for v in cover.iter() {
                covers_of_var[v].push(c);
            }
            let last = cover.iter().last().expect("covers of a proper ideal are nonempty");
            closing[last].push(c);
        }
        let mut search = CoverSearch {
            n,
            covers_of_var: &covers_of_var,
            closing: &closing,
            partial: vec![0; self.covers.len()],
            current: vec![0; num_vars],
            out: Vec::new(),
            limit: self.limits.max_symbolic_gens,
        };
        search.assign(0)?;
        let mut gens = search.out;
        gens.sort_unstable();
        Ok(MonomialIdeal::from_sorted_minimal(num_vars, gens))
    }

    /// `I^(n)` as the explicit intersection `∩_C p_C^n`. Slower than
    /// [`power`](Self::power); kept as an independent second route.
    pub fn power_via_primes(&self, n: u32) -> Result<MonomialIdeal> {
        check_positive(n)?;
        let num_vars = self.ideal.num_vars();
        let mut acc = MonomialIdeal::unit(num_vars);
        for &c in &self.covers {
            acc = acc.intersect(&prime_ideal(num_vars, c).power(n)?)?;
        }
        Ok(acc)
    }

    /// Whether `I^(n) = I^n`, with the canonically least generator of
    /// `I^(n)` outside `I^n` when they differ.
    pub fn equals_ordinary(&self, n: u32) -> Result<ContainmentCheck> {
        check_positive(n)?;
        if n == 1 {
            return Ok(ContainmentCheck { holds: true, witness: None });
        }
        self.symbolic_in_ordinary(n, n)
    }

    /// Whether `I^(a) ⊆ I^b`, for `a ≥ b`.
    pub fn containment(&self, a: u32, b: u32) -> Result<ContainmentCheck> {
        check_positive(a)?;
        check_positive(b)?;
        if a < b {
            return Err(Error::Invalid(format!("containment needs a >= b, got a={a}, b={b}")));
        }
        self.symbolic_in_ordinary(a, b)
    }

    fn symbolic_in_ordinary(&self, a: u32, b: u32) -> Result<ContainmentCheck> {
        let symbolic = self.power(a)?;
        let gens = symbolic.generators();
        let failure =
            gens.par_iter().map(|g| self.ideal.power_membership(g, b)).position_first(|r| !matches!(r, Ok(true)));
        match failure {
            None => Ok(ContainmentCheck { holds: true, witness: None }),
            Some(i) => {
                self.ideal.power_membership(&gens[i], b)?;
                Ok(ContainmentCheck { holds: false, witness: Some(gens[i].clone()) })
            }
        }
    }
}

struct CoverSearch<'a> {
    n: u32,
    covers_of_var: &'a [Vec<usize>],
    closing: &'a [Vec<usize>],
    partial: Vec<u32>,
    current: Vec<u32>,
    out: Vec<Monomial>,
    limit: usize,
}

impl CoverSearch<'_> {
    fn assign(&mut self, var: usize) -> Result<()> {
        if var == self.current.len() {
            if self.is_minimal(var) {
                if self.out.len() >= self.limit {
                    return Err(Error::SizeGuard { what: "symbolic power generators", limit: self.limit });
                }
                self.out.push(Monomial::new(self.current.clone()));
            }
            return Ok(());
        }
        let n = self.n;
        let lower = self.closing[var].iter().map(|&c| n.saturating_sub(self.partial[c])).max().unwrap_or(0);
        let upper = self.covers_of_var[var].iter().map(|&c| n.saturating_sub(self.partial[c])).max().unwrap_or(0);
        for value in lower..=upper {
            self.current[var] = value;
            for &c in &self.covers_of_var[var] {
                self.partial[c] += value;
            }
            if self.is_minimal(var + 1) {
                self.assign(var + 1)?;
            }
            for &c in &self.covers_of_var[var] {
                self.partial[c] -= value;
            }
        }
        self.current[var] = 0;
        Ok(())
    }

    /// Every positive variable among the first `upto` still has a cover
    /// that is not oversaturated.
    fn is_minimal(&self, upto: usize) -> bool {
        (0..upto).all(|j| self.current[j] == 0 || self.covers_of_var[j].iter().any(|&c| self.partial[c] <= self.n))
    }
}

fn check_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("symbolic powers are defined for n >= 1".into()));
    }
    Ok(())
}

pub fn symbolic_membership(ideal: &MonomialIdeal, m: &Monomial, n: u32) -> Result<bool> {
    SymbolicIdeal::new(ideal)?.contains(m, n)
}

pub fn symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    SymbolicIdeal::new(ideal)?.power(n)
}

pub fn equals_ordinary(ideal: &MonomialIdeal, n: u32) -> Result<ContainmentCheck> {
    SymbolicIdeal::new(ideal)?.equals_ordinary(n)
}

pub fn containment(ideal: &MonomialIdeal, a: u32, b: u32) -> Result<ContainmentCheck> {
    SymbolicIdeal::new(ideal)?.containment(a, b)
}

/// `m ∈ I^⟨n⟩` in characteristic zero: every divided-power operator of
/// order at most `n - 1` sends `m` into `I`. On monomials these operators
/// subtract exponent vectors `b ≤ m` with `|b| ≤ n - 1`.
pub fn differential_membership(ideal: &MonomialIdeal, m: &Monomial, n: u32) -> Result<bool> {
    ideal.check_monomial(m)?;
    check_positive(n)?;
    let mut b = vec![0u32; m.num_vars()];
    Ok(all_lowerings(ideal, m.exponents(), &mut b, 0, n - 1))
}

fn all_lowerings(ideal: &MonomialIdeal, m: &[u32], b: &mut Vec<u32>, var: usize, budget: u32) -> bool {
    if var == m.len() {
        let lowered = Monomial::new(m.iter().zip(b.iter()).map(|(x, y)| x - y).collect());
        return ideal.generators().iter().any(|g| g.divides(&lowered));
    }
    for take in 0..=budget.min(m[var]) {
        b[var] = take;
        if !all_lowerings(ideal, m, b, var + 1, budget - take) {
            b[var] = 0;
            return false;
        }
    }
    b[var] = 0;
    true
}

/// Minimal generators of `I^⟨n⟩`, found by scanning the box in which they
/// must lie: a generator never exceeds `e_i + n - 1` in `x_i`, where `e_i`
/// is the largest exponent of `x_i` among the generators of `I`.
pub fn differential_power(ideal: &MonomialIdeal, n: u32, max_box: usize) -> Result<MonomialIdeal> {
    check_positive(n)?;
    let num_vars = ideal.num_vars();
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(num_vars));
    }
    let bounds: Vec<u32> =
        (0..num_vars).map(|i| ideal.generators().iter().map(|g| g.exponents()[i]).max().unwrap_or(0) + n - 1).collect();
    let volume = bounds
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
        .filter(|&v| v <= max_box)
        .ok_or(Error::SizeGuard { what: "differential power search box", limit: max_box })?;
    let mut members = Vec::new();
    let mut point = vec![0u32; num_vars];
    for _ in 0..volume {
        let m = Monomial::new(point.clone());
        if differential_membership(ideal, &m, n)? {
            members.push(m);
        }
        for (p, &b) in point.iter_mut().zip(&bounds) {
            if *p < b {
                *p += 1;
                break;
            }
            *p = 0;
        }
    }
    MonomialIdeal::minimalize(num_vars, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn triangle() -> MonomialIdeal {
        MonomialIdeal::from_supports(3, [[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let s = SymbolicIdeal::new(&triangle()).unwrap();
        assert!(s.contains(&m(&[1, 1, 1]), 2).unwrap());
        assert!(!s.contains(&m(&[0, 0, 0]), 1).unwrap());
        assert!(!s.contains(&m(&[2, 1, 0]), 2).unwrap());
        assert!(s.contains(&m(&[1, 1, 1]), 0).is_err());
    }

    #[test]
    fn symbolic_square_of_triangle() {
        let p = symbolic_power(&triangle(), 2).unwrap();
        let expected =
            MonomialIdeal::from_exponents(3, vec![vec![1, 1, 1], vec![2, 2, 0], vec![2, 0, 2], vec![0, 2, 2]]).unwrap();
        assert_eq!(p, expected);
        assert_eq!(symbolic_power(&triangle(), 1).unwrap(), triangle());
    }

    #[test]
    fn symbolic_power_of_maximal_ideal() {
        for d in 1..=4 {
            let mx = MonomialIdeal::maximal(d);
            for n in 1..=4 {
                assert_eq!(symbolic_power(&mx, n).unwrap(), mx.power(n).unwrap());
            }
        }
    }

    #[test]
    fn rejects_non_square_free() {
        let i = MonomialIdeal::from_exponents(2, vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(symbolic_power(&i, 2).unwrap_err(), Error::SymbolicNotSquareFree);
    }

    #[test]
    fn generator_guard() {
        let s = SymbolicIdeal::with_limits(
            &MonomialIdeal::maximal(4),
            Limits { max_symbolic_gens: 10, ..Limits::default() },
        )
        .unwrap();
        assert!(s.power(3).unwrap_err().is_guard());
    }

    #[test]
    fn differential_examples() {
        let mx = MonomialIdeal::maximal(2);
        assert!(differential_membership(&mx, &m(&[1, 1]), 2).unwrap());
        assert!(!differential_membership(&mx, &m(&[1, 0]), 2).unwrap());
        let i = triangle();
        for e in [[1, 1, 0], [1, 0, 0], [2, 2, 1]] {
            assert_eq!(differential_membership(&i, &m(&e), 1).unwrap(), i.contains(&m(&e)).unwrap());
        }
        let m2 = mx.power(2).unwrap();
        assert!(differential_membership(&m2, &m(&[4, 0]), 3).unwrap());
        assert!(!differential_membership(&m2, &m(&[3, 0]), 3).unwrap());
        assert_eq!(differential_power(&m2, 3, 1 << 16).unwrap(), mx.power(4).unwrap());
    }

    #[test]
    fn equality_and_containment() {
        let s = SymbolicIdeal::new(&triangle()).unwrap();
        assert!(s.equals_ordinary(1).unwrap().holds);
        let eq2 = s.equals_ordinary(2).unwrap();
        assert!(!eq2.holds);
        assert_eq!(eq2.witness, Some(m(&[1, 1, 1])));
        assert!(s.containment(4, 2).unwrap().holds);
        assert!(s.containment(3, 2).unwrap().holds);
        assert!(!s.containment(2, 2).unwrap().holds);
        assert!(s.containment(1, 2).is_err());
        let edge = MonomialIdeal::from_supports(2, [[0, 1]]).unwrap();
        assert!(equals_ordinary(&edge, 3).unwrap().holds);
        assert!(containment(&edge, 3, 3).unwrap().holds);
    }
}
