//! Simplicial complexes and the Stanley–Reisner correspondence.

use serde::Serialize;

use crate::decomposition::{minimal_primes, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// Largest vertex count for which minimal non-faces are enumerated.
pub const MAX_NONFACE_VERTICES: usize = 24;

/// A complex held by its facets, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets of `faces` as facets.
    pub fn new(num_vertices: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::TooManyVariables { max: MAX_VERTICES, found: num_vertices });
        }
        let full = VertexSet::full(num_vertices);
        if faces.iter().any(|f| !f.is_subset(full)) {
            return Err(Error::Invalid("face vertex out of range".into()));
        }
        let mut facets: Vec<VertexSet> = Vec::new();
        let mut sorted = faces;
        sorted.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        for f in sorted {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable_by(VertexSet::canonical_cmp);
        Ok(SimplicialComplex { num_vertices, facets })
    }

    pub fn from_lists(num_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if let Some(v) = facets.iter().flatten().find(|&&v| v >= num_vertices) {
            return Err(Error::Invalid(format!("vertex {v} out of range")));
        }
        Self::new(num_vertices, facets.iter().map(|f| VertexSet::from_iter(f.iter().copied())).collect())
    }

    pub fn simplex(num_vertices: usize) -> Self {
        SimplicialComplex { num_vertices, facets: vec![VertexSet::full(num_vertices)] }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Minimal non-faces, by increasing cardinality, skipping supersets of
    /// non-faces already found.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        let n = self.num_vertices;
        if n > MAX_NONFACE_VERTICES {
            return Err(Error::SizeGuard { what: "non-face enumeration vertices", limit: MAX_NONFACE_VERTICES });
        }
        let mut found: Vec<VertexSet> = Vec::new();
        for size in 0..=n {
            for s in subsets_of_size(n, size) {
                if found.iter().any(|f| f.is_subset(s)) {
                    continue;
                }
                if !self.is_face(s) {
                    found.push(s);
                }
            }
        }
        found.sort_unstable_by(VertexSet::canonical_cmp);
        Ok(found)
    }

    /// Exchange check over facet pairs `(F, G)` and `i ∈ F`, in canonical
    /// order; reports the first failure.
    pub fn matroid_check(&self) -> MatroidCheck {
        for &f in &self.facets {
            for &g in &self.facets {
                for i in f.iter() {
                    let base = f.remove(i);
                    let exchanged = g.iter().any(|j| {
                        let candidate = base.insert(j);
                        self.facets.contains(&candidate)
                    });
                    if !exchanged {
                        return MatroidCheck {
                            holds: false,
                            counterexample: Some(ExchangeFailure { facet: f, other: g, removed: i }),
                        };
                    }
                }
            }
        }
        MatroidCheck { holds: true, counterexample: None }
    }

    pub fn is_matroid(&self) -> bool {
        self.matroid_check().holds
    }
}

/// All `size`-subsets of `{0..n}` in increasing bitmask order.
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = 1 << n;
    let mut next = if size == 0 {
        Some(0u64)
    } else if size <= n {
        Some((1u64 << size) - 1)
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(VertexSet(cur))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeFailure {
    pub facet: VertexSet,
    pub other: VertexSet,
    pub removed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatroidCheck {
    pub holds: bool,
    pub counterexample: Option<ExchangeFailure>,
}

/// `I_Δ`: generated by the minimal non-faces. No facets gives the unit
/// ideal; the full simplex gives the zero ideal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let nonfaces = complex.minimal_nonfaces()?;
    MonomialIdeal::from_supports(complex.num_vertices, nonfaces.iter().map(|s| s.iter()))
}

/// The complex of squarefree monomials outside `I`; its facets are the
/// complements of the minimal primes.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let n = ideal.num_vars();
    if ideal.is_zero() {
        return Ok(SimplicialComplex::simplex(n));
    }
    let full = VertexSet::full(n);
    let facets = minimal_primes(ideal)?.into_iter().map(|c| full.difference(c)).collect();
    SimplicialComplex::new(n, facets)
}

/// The 28 cubic generators (variables `x1..x7`) of the Fano example ideal.
const FANO_GENERATORS: [[usize; 3]; 28] = [
    [4, 2, 1],
    [4, 3, 1],
    [4, 3, 2],
    [5, 2, 1],
    [5, 3, 1],
    [5, 3, 2],
    [5, 4, 1],
    [5, 4, 2],
    [6, 2, 1],
    [6, 3, 1],
    [6, 3, 2],
    [6, 4, 1],
    [6, 4, 3],
    [6, 5, 2],
    [6, 5, 3],
    [6, 5, 4],
    [7, 2, 1],
    [7, 3, 1],
    [7, 3, 2],
    [7, 4, 2],
    [7, 4, 3],
    [7, 5, 1],
    [7, 5, 3],
    [7, 5, 4],
    [7, 6, 1],
    [7, 6, 2],
    [7, 6, 4],
    [7, 6, 5],
];

pub fn fano_ideal() -> MonomialIdeal {
    MonomialIdeal::from_supports(7, FANO_GENERATORS.iter().map(|g| g.iter().map(|v| v - 1))).expect("fixture is valid")
}

/// The Stanley–Reisner complex of [`fano_ideal`].
pub fn fano_complex() -> SimplicialComplex {
    stanley_reisner_complex(&fano_ideal()).expect("fixture is square-free and proper")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(4, 2).count(), 6);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(4, 4).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }

    #[test]
    fn ideal_of_complex() {
        let path = cx(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(stanley_reisner_ideal(&path).unwrap(), MonomialIdeal::from_supports(3, [[0, 2]]).unwrap());
        assert!(stanley_reisner_ideal(&SimplicialComplex::simplex(4)).unwrap().is_zero());
        assert!(stanley_reisner_ideal(&cx(3, &[])).unwrap().is_unit());
        assert_eq!(stanley_reisner_ideal(&cx(2, &[&[]])).unwrap(), MonomialIdeal::maximal(2));
    }

    #[test]
    fn complex_of_ideal() {
        let i = MonomialIdeal::from_supports(3, [[0, 2]]).unwrap();
        assert_eq!(stanley_reisner_complex(&i).unwrap(), cx(3, &[&[0, 1], &[1, 2]]));
        assert_eq!(stanley_reisner_complex(&MonomialIdeal::zero(3)).unwrap(), SimplicialComplex::simplex(3));
        let tri = MonomialIdeal::from_supports(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(stanley_reisner_complex(&tri).unwrap(), cx(3, &[&[0], &[1], &[2]]));
        assert!(stanley_reisner_complex(&MonomialIdeal::unit(3)).is_err());
    }

    #[test]
    fn facets_are_maximal_and_sorted() {
        let c = cx(4, &[&[2, 3], &[0, 1, 2], &[0, 1], &[3]]);
        assert_eq!(c.facets(), &[VertexSet::from_iter([2, 3]), VertexSet::from_iter([0, 1, 2])]);
    }

    #[test]
    fn matroid_examples() {
        let two = cx(4, &[&[0, 1], &[2, 3]]);
        let check = two.matroid_check();
        assert!(!check.holds);
        assert_eq!(
            check.counterexample,
            Some(ExchangeFailure {
                facet: VertexSet::from_iter([0, 1]),
                other: VertexSet::from_iter([2, 3]),
                removed: 0
            })
        );
        assert!(cx(3, &[&[0, 2]]).is_matroid());
        // Uniform matroid U_{2,4}.
        let u24 = cx(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
        assert!(u24.is_matroid());
    }

    #[test]
    fn fano_fixture() {
        let i = fano_ideal();
        assert_eq!(i.generators().len(), 28);
        assert!(i.generators().iter().all(|g| g.degree() == 3));
        let c = fano_complex();
        assert!(c.is_pure());
        assert!(c.facets().iter().all(|f| f.len() == 3));
        assert_eq!(stanley_reisner_ideal(&c).unwrap(), i);
    }
}
