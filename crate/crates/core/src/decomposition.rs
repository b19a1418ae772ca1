//! Minimal primes of square-free monomial ideals.
//!
//! The minimal primes of a square-free ideal are the monomial primes
//! `(x_i : i ∈ C)` for the inclusion-minimal vertex covers `C` of its
//! support clutter, so decomposition is minimal-transversal enumeration.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, ..., 63}` stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn meets(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: smaller sets first, then lexicographic on the sorted
    /// element lists.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

/// Drops every set that contains another set of the family; sorts canonically.
pub fn minimalize_family(mut family: Vec<VertexSet>) -> Vec<VertexSet> {
    family.sort_unstable_by(VertexSet::canonical_cmp);
    family.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// The support hypergraph of a square-free monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clutter {
    num_vertices: usize,
    edges: Vec<VertexSet>,
}

impl Clutter {
    pub fn new(num_vertices: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::TooManyVariables { max: MAX_VERTICES, found: num_vertices });
        }
        let full = VertexSet::full(num_vertices);
        if edges.iter().any(|e| !e.is_subset(full)) {
            return Err(Error::Invalid("edge vertex out of range".into()));
        }
        Ok(Clutter { num_vertices, edges: minimalize_family(edges) })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// The clutter of the unit ideal: a single empty edge.
    pub fn is_unit(&self) -> bool {
        self.edges.len() == 1 && self.edges[0].is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(self.num_vertices, self.edges.iter().map(|e| e.iter()))
            .expect("edges are in range")
    }

    /// Inclusion-minimal transversals, built one edge at a time.
    pub fn minimal_transversals(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let mut family = vec![VertexSet::EMPTY];
        for &edge in &self.edges {
            let mut next = Vec::with_capacity(family.len() * 2);
            for &t in &family {
                if t.meets(edge) {
                    next.push(t);
                } else {
                    next.extend(edge.iter().map(|v| t.insert(v)));
                }
            }
            family = minimalize_family(next);
            if family.len() > limit {
                return Err(Error::SizeGuard { what: "minimal primes", limit });
            }
        }
        Ok(family)
    }

    /// Size of a minimum transversal, by branch and bound on the first
    /// uncovered edge. Agrees with the smallest minimal transversal but never
    /// enumerates the whole family.
    pub fn transversal_number(&self) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        let mut best = greedy_cover(&self.edges).len();
        branch_cover(&self.edges, VertexSet::EMPTY, &mut best);
        best
    }

    /// Largest number of pairwise disjoint edges together with one witness,
    /// edges listed in canonical order.
    pub fn maximum_matching(&self) -> Vec<VertexSet> {
        let edges: Vec<VertexSet> = self.edges.iter().copied().filter(|e| !e.is_empty()).collect();
        let mut best = greedy_matching(&edges);
        let mut current = Vec::new();
        branch_matching(&edges, 0, VertexSet::EMPTY, &mut current, &mut best);
        best
    }
}

fn greedy_cover(edges: &[VertexSet]) -> VertexSet {
    let mut cover = VertexSet::EMPTY;
    for e in edges {
        if !e.meets(cover) {
            cover = cover.insert(e.iter().next().expect("nonempty edge"));
        }
    }
    cover
}

fn branch_cover(edges: &[VertexSet], chosen: VertexSet, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    let Some(open) = edges.iter().find(|e| !e.meets(chosen)) else {
        *best = chosen.len();
        return;
    };
    // Disjoint uncovered edges each need their own cover vertex.
    let mut lower = 0;
    let mut used = chosen;
    for e in edges {
        if !e.meets(used) {
            lower += 1;
            used = used.union(*e);
        }
    }
    if chosen.len() + lower >= *best {
        return;
    }
    for v in open.iter() {
        branch_cover(edges, chosen.insert(v), best);
    }
}

fn greedy_matching(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut used = VertexSet::EMPTY;
    let mut out = Vec::new();
    for &e in edges {
        if !e.meets(used) {
            used = used.union(e);
            out.push(e);
        }
    }
    out
}

fn matching_upper_bound(edges: &[VertexSet], used: VertexSet) -> usize {
    // Any transversal bounds the matching number from above.
    let rest: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.meets(used)).collect();
    if rest.is_empty() {
        return 0;
    }
    let cover = greedy_cover(&rest).len();
    let min_size = rest.iter().map(|e| e.len()).min().unwrap_or(1);
    let union = rest.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e)).len();
    cover.min(union / min_size).min(rest.len())
}

fn branch_matching(
    edges: &[VertexSet],
    start: usize,
    used: VertexSet,
    current: &mut Vec<VertexSet>,
    best: &mut Vec<VertexSet>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    let remaining = &edges[start..];
    if current.len() + matching_upper_bound(remaining, used) <= best.len() {
        return;
    }
    for (offset, &e) in remaining.iter().enumerate() {
        if e.meets(used) {
            continue;
        }
        current.push(e);
        branch_matching(edges, start + offset + 1, used.union(e), current, best);
        current.pop();
    }
}

/// The support clutter; rejects non-square-free input.
pub fn to_clutter(ideal: &MonomialIdeal) -> Result<Clutter> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    if ideal.num_vars() > MAX_VERTICES {
        return Err(Error::TooManyVariables { max: MAX_VERTICES, found: ideal.num_vars() });
    }
    let edges = ideal.generators().iter().map(|g| VertexSet::from_iter(g.support())).collect();
    Clutter::new(ideal.num_vars(), edges)
}

fn proper_clutter(ideal: &MonomialIdeal) -> Result<Clutter> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    to_clutter(ideal)
}

/// Minimal primes as vertex covers, canonically ordered.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>> {
    minimal_primes_with(ideal, &Limits::default())
}

pub fn minimal_primes_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<VertexSet>> {
    proper_clutter(ideal)?.minimal_transversals(limits.max_primes)
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?.iter().map(|c| c.len()).min().expect("proper ideal has a prime"))
}

pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?.iter().map(|c| c.len()).max().expect("proper ideal has a prime"))
}

/// The monomial prime `(x_i : i ∈ cover)`.
pub fn prime_ideal(num_vars: usize, cover: VertexSet) -> MonomialIdeal {
    MonomialIdeal::minimalize(num_vars, cover.iter().map(|i| Monomial::var(num_vars, i))).expect("dimensions agree")
}
