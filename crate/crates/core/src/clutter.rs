//! König, packing and their relative versions.
//!
//! A minor of a square-free ideal sets some variables to 0 (killing every
//! generator they divide) and some to 1 (deleting them from generators).
//! An ideal is König when it holds as many generators with pairwise disjoint
//! supports as its height; it packs when every minor is König.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decomposition::{minimalize_family, to_clutter, Clutter, VertexSet};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorTag {
    Keep,
    Zero,
    One,
}

/// One tag per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MinorAssignment(Vec<MinorTag>);

impl MinorAssignment {
    pub fn new(tags: Vec<MinorTag>) -> Self {
        MinorAssignment(tags)
    }

    pub fn keep_all(num_vars: usize) -> Self {
        MinorAssignment(vec![MinorTag::Keep; num_vars])
    }

    /// Builds an assignment from explicit zero and one variable lists.
    pub fn from_lists(num_vars: usize, zeros: &[usize], ones: &[usize]) -> Result<Self> {
        let mut tags = vec![MinorTag::Keep; num_vars];
        for (list, tag) in [(zeros, MinorTag::Zero), (ones, MinorTag::One)] {
            for &v in list {
                if v >= num_vars {
                    return Err(Error::Invalid(format!("variable index {v} out of range")));
                }
                if tags[v] != MinorTag::Keep {
                    return Err(Error::Invalid(format!("variable {v} assigned twice")));
                }
                tags[v] = tag;
            }
        }
        Ok(MinorAssignment(tags))
    }

    pub fn tags(&self) -> &[MinorTag] {
        &self.0
    }

    fn sets(&self) -> (VertexSet, VertexSet) {
        let pick = |t| VertexSet::from_iter(self.0.iter().enumerate().filter(|(_, &x)| x == t).map(|(i, _)| i));
        (pick(MinorTag::Zero), pick(MinorTag::One))
    }
}

fn clutter_minor(edges: &[VertexSet], zeros: VertexSet, ones: VertexSet) -> Vec<VertexSet> {
    minimalize_family(edges.iter().filter(|e| !e.meets(zeros)).map(|e| e.difference(ones)).collect())
}

/// The minor of `ideal` under `assignment`, in the same variables.
pub fn minor(ideal: &MonomialIdeal, assignment: &MinorAssignment) -> Result<MonomialIdeal> {
    if assignment.0.len() != ideal.num_vars() {
        return Err(Error::DimensionMismatch { expected: ideal.num_vars(), found: assignment.0.len() });
    }
    let clutter = to_clutter(ideal)?;
    let (zeros, ones) = assignment.sets();
    let edges = clutter_minor(clutter.edges(), zeros, ones);
    Ok(Clutter::new(ideal.num_vars(), edges)?.to_ideal())
}

/// Longest monomial regular sequence in `ideal`: generators with pairwise
/// disjoint supports. Returns the length and one witness.
pub fn max_regular_sequence(ideal: &MonomialIdeal) -> Result<(usize, Vec<Monomial>)> {
    let clutter = to_clutter(ideal)?;
    let matching = clutter.maximum_matching();
    let witness = matching.iter().map(|e| Monomial::from_support(ideal.num_vars(), e.iter())).collect();
    Ok((matching.len(), witness))
}

/// Regular-sequence length needed: `height` for König, `min(k, height)` for
/// k-König. Unit and zero clutters need nothing.
fn meets_target(edges: &[VertexSet], k: Option<usize>) -> bool {
    if edges.is_empty() || edges.iter().any(|e| e.is_empty()) {
        return true;
    }
    let clutter = Clutter::new(64, edges.to_vec()).expect("edges already valid");
    let height = clutter.transversal_number();
    let target = k.map_or(height, |k| k.min(height));
    clutter.maximum_matching().len() >= target
}

pub fn is_koenig(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(meets_target(to_clutter(ideal)?.edges(), None))
}

pub fn is_k_koenig(ideal: &MonomialIdeal, k: usize) -> Result<bool> {
    check_k(k)?;
    Ok(meets_target(to_clutter(ideal)?.edges(), Some(k)))
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Invalid("k must be positive".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingCheck {
    pub holds: bool,
    /// First failing minor in enumeration order (keep < zero < one, lower
    /// variable indices most significant).
    pub counterexample: Option<MinorAssignment>,
}

pub fn has_packing_property(ideal: &MonomialIdeal) -> Result<PackingCheck> {
    packing_scan(ideal, None, &Limits::default())
}

pub fn is_k_packed(ideal: &MonomialIdeal, k: usize) -> Result<PackingCheck> {
    check_k(k)?;
    packing_scan(ideal, Some(k), &Limits::default())
}

pub fn packing_scan(ideal: &MonomialIdeal, k: Option<usize>, limits: &Limits) -> Result<PackingCheck> {
    let clutter = to_clutter(ideal)?;
    // Variables outside every generator cannot change any minor.
    let support = clutter.vertex_support().to_vec();
    if support.len() > limits.max_minor_support {
        return Err(Error::SizeGuard { what: "minor support size", limit: limits.max_minor_support });
    }
    let total = 3usize.pow(support.len() as u32);
    let decode = |mut index: usize| {
        let mut tags = vec![MinorTag::Keep; ideal.num_vars()];
        for &v in support.iter().rev() {
            tags[v] = match index % 3 {
                0 => MinorTag::Keep,
                1 => MinorTag::Zero,
                _ => MinorTag::One,
            };
            index /= 3;
        }
        MinorAssignment(tags)
    };
    let edges = clutter.edges();
    let failing = (0..total).into_par_iter().find_first(|&index| {
        let (zeros, ones) = decode(index).sets();
        !meets_target(&clutter_minor(edges, zeros, ones), k)
    });
    Ok(PackingCheck { holds: failing.is_none(), counterexample: failing.map(decode) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, supports.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        sq(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    fn cycle(n: usize) -> MonomialIdeal {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        MonomialIdeal::from_supports(n, edges).unwrap()
    }

    #[test]
    fn minor_examples() {
        use MinorTag::*;
        let t = triangle();
        let z = MinorAssignment::new(vec![Keep, Keep, Zero]);
        assert_eq!(minor(&t, &z).unwrap(), sq(3, &[&[0, 1]]));
        let o = MinorAssignment::new(vec![Keep, Keep, One]);
        assert_eq!(minor(&t, &o).unwrap(), sq(3, &[&[0], &[1]]));
        assert_eq!(minor(&t, &MinorAssignment::keep_all(3)).unwrap(), t);
        let unit = MinorAssignment::new(vec![One, One, Zero]);
        assert!(minor(&t, &unit).unwrap().is_unit());
        let dead = MinorAssignment::new(vec![Zero, Zero, Keep]);
        assert!(minor(&t, &dead).unwrap().is_zero());
    }

    #[test]
    fn assignment_from_lists() {
        let a = MinorAssignment::from_lists(4, &[1], &[3]).unwrap();
        assert_eq!(a.tags(), &[MinorTag::Keep, MinorTag::Zero, MinorTag::Keep, MinorTag::One]);
        assert!(MinorAssignment::from_lists(4, &[1], &[1]).is_err());
        assert!(MinorAssignment::from_lists(4, &[4], &[]).is_err());
    }

    #[test]
    fn regular_sequences() {
        assert_eq!(max_regular_sequence(&triangle()).unwrap().0, 1);
        let (len, wit) = max_regular_sequence(&sq(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(len, 2);
        assert_eq!(wit.len(), 2);
        assert_eq!(max_regular_sequence(&MonomialIdeal::zero(3)).unwrap().0, 0);
    }

    #[test]
    fn koenig_examples() {
        assert!(!is_koenig(&triangle()).unwrap());
        assert!(is_koenig(&cycle(4)).unwrap());
        assert!(is_koenig(&sq(1, &[&[0]])).unwrap());
        assert!(is_koenig(&MonomialIdeal::unit(2)).unwrap());
        assert!(is_koenig(&MonomialIdeal::zero(2)).unwrap());
        assert!(is_k_koenig(&triangle(), 1).unwrap());
        assert!(!is_k_koenig(&triangle(), 2).unwrap());
        assert!(is_k_koenig(&cycle(4), 7).unwrap());
        assert!(is_k_koenig(&triangle(), 0).is_err());
    }

    #[test]
    fn packing_examples() {
        let t = has_packing_property(&triangle()).unwrap();
        assert!(!t.holds);
        assert_eq!(t.counterexample, Some(MinorAssignment::keep_all(3)));
        assert!(has_packing_property(&cycle(4)).unwrap().holds);
        assert!(has_packing_property(&sq(1, &[&[0]])).unwrap().holds);
        assert!(!is_k_packed(&triangle(), 2).unwrap().holds);
        assert!(is_k_packed(&cycle(5), 2).unwrap().holds);
        assert!(!is_k_packed(&cycle(5), 3).unwrap().holds);
        assert!(is_k_packed(&triangle(), 1).unwrap().holds);
    }

    #[test]
    fn packing_guard() {
        let limits = Limits { max_minor_support: 2, ..Limits::default() };
        assert!(packing_scan(&triangle(), None, &limits).unwrap_err().is_guard());
    }
}
