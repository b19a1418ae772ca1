//! Brute-force reference implementations for the test suites.
//!
//! Everything here works on plain exponent vectors and index lists and
//! shares no code with the library it checks. Complexity is deliberately
//! naive: exhaustive enumeration over subsets, multisets and boxes.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Elements not divisible by any other element.
pub fn minimal_elements(vs: &[Exps]) -> BTreeSet<Exps> {
    let set: BTreeSet<Exps> = vs.iter().cloned().collect();
    set.iter().filter(|v| !set.iter().any(|w| w != *v && divides(w, v))).cloned().collect()
}

fn multisets(count: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, count: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..count {
            cur.push(i);
            go(i, count, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, count, size, &mut Vec::new(), &mut out);
    out
}

fn product_of(gens: &[Exps], picks: &[usize], d: usize) -> Exps {
    let mut p = vec![0; d];
    for &i in picks {
        for (a, b) in p.iter_mut().zip(&gens[i]) {
            *a += b;
        }
    }
    p
}

/// Minimal generators of `I^n` from all `n`-multisets of generators.
pub fn power_by_products(d: usize, gens: &[Exps], n: usize) -> BTreeSet<Exps> {
    let all: Vec<Exps> = multisets(gens.len(), n).iter().map(|p| product_of(gens, p, d)).collect();
    minimal_elements(&all)
}

/// `m ∈ I^n` by trying every `n`-multiset of generators.
pub fn in_power_by_multisets(gens: &[Exps], m: &[u32], n: usize) -> bool {
    multisets(gens.len(), n).iter().any(|p| divides(&product_of(gens, p, m.len()), m))
}

/// Every point of `[0, bound]^d`.
pub fn box_points(d: usize, bound: u32) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn member(gens: &[Exps], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Minimal generators of `I ∩ J` by scanning a box large enough to hold
/// every lcm of generators.
pub fn intersection_by_box(d: usize, a: &[Exps], b: &[Exps], bound: u32) -> BTreeSet<Exps> {
    let members: Vec<Exps> = box_points(d, bound).into_iter().filter(|p| member(a, p) && member(b, p)).collect();
    minimal_elements(&members)
}

fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

fn meets(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.contains(x))
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Inclusion-minimal vertex covers from all `2^n` subsets, sorted.
pub fn minimal_covers(n: usize, edges: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let covers: Vec<Vec<usize>> = all_subsets(n).filter(|s| edges.iter().all(|e| meets(e, s))).collect();
    covers.iter().filter(|c| !covers.iter().any(|o| o.len() < c.len() && subset(o, c))).cloned().collect()
}

pub fn min_cover_size(n: usize, edges: &[Vec<usize>]) -> usize {
    all_subsets(n).filter(|s| edges.iter().all(|e| meets(e, s))).map(|s| s.len()).min().unwrap_or(0)
}

/// Largest set of pairwise disjoint edges, over all edge subsets.
pub fn max_matching(edges: &[Vec<usize>]) -> usize {
    all_subsets(edges.len())
        .filter(|pick| {
            pick.iter().enumerate().all(|(a, &i)| pick[a + 1..].iter().all(|&j| !meets(&edges[i], &edges[j])))
        })
        .map(|p| p.len())
        .max()
        .unwrap_or(0)
}

/// Supports of the generators of a square-free ideal.
pub fn supports(gens: &[Exps]) -> Vec<Vec<usize>> {
    gens.iter().map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()).collect()
}

/// `m ∈ I^(n)` from brute-force covers.
pub fn symbolic_member(covers: &BTreeSet<Vec<usize>>, m: &[u32], n: u32) -> bool {
    covers.iter().all(|c| c.iter().map(|&i| m[i]).sum::<u32>() >= n)
}

/// Minimal generators of `I^(n)` by scanning `[0, n]^d`.
pub fn symbolic_power_by_box(d: usize, gens: &[Exps], n: u32) -> BTreeSet<Exps> {
    let covers = minimal_covers(d, &supports(gens));
    let members: Vec<Exps> = box_points(d, n).into_iter().filter(|p| symbolic_member(&covers, p, n)).collect();
    minimal_elements(&members)
}

/// Minimal non-faces: subsets outside the complex all of whose one-smaller
/// subsets are faces.
pub fn minimal_nonfaces(n: usize, facets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let is_face = |s: &[usize]| facets.iter().any(|f| subset(s, f));
    all_subsets(n)
        .filter(|s| {
            !is_face(s)
                && (0..s.len()).all(|skip| {
                    let smaller: Vec<usize> =
                        s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
                    is_face(&smaller)
                })
        })
        .collect()
}

/// Lengths of all simple cycles, by depth-first search from every vertex.
pub fn cycle_lengths(n: usize, edges: &[(usize, usize)]) -> BTreeSet<usize> {
    let adjacent = |a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    let mut lengths = BTreeSet::new();
    fn go(n: usize, adjacent: &dyn Fn(usize, usize) -> bool, path: &mut Vec<usize>, lengths: &mut BTreeSet<usize>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && adjacent(last, path[0]) {
            lengths.insert(path.len());
        }
        for v in 0..n {
            if v > path[0] && !path.contains(&v) && adjacent(last, v) {
                path.push(v);
                go(n, adjacent, path, lengths);
                path.pop();
            }
        }
    }
    for s in 0..n {
        go(n, &adjacent, &mut vec![s], &mut lengths);
    }
    lengths
}

pub fn odd_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    cycle_lengths(n, edges).into_iter().find(|l| l % 2 == 1)
}

fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot_row[col];
                for (x, y) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * y;
                }
                let delta = &f * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Optimum of `min Σ x` over `x ≥ 0`, `Σ_{i∈C} x_i ≥ 1` for each cover,
/// by enumerating every vertex of the polyhedron: each choice of `d` tight
/// constraints among covers and coordinate hyperplanes.
pub fn covering_lp_by_vertices(d: usize, covers: &[Vec<usize>]) -> BigRational {
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for c in covers {
        let row = (0..d).map(|i| if c.contains(&i) { BigRational::one() } else { BigRational::zero() }).collect();
        rows.push((row, BigRational::one()));
    }
    for i in 0..d {
        let row = (0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect();
        rows.push((row, BigRational::zero()));
    }
    let mut best: Option<BigRational> = None;
    for pick in all_subsets(rows.len()).filter(|p| p.len() == d) {
        let a = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b = pick.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve(a, b) else { continue };
        let feasible = rows.iter().all(|(row, rhs)| {
            let lhs: BigRational = row.iter().zip(&x).map(|(r, v)| r * v).sum();
            !(lhs - rhs).is_negative()
        });
        if feasible {
            let value: BigRational = x.iter().sum();
            if best.as_ref().is_none_or(|b| value < *b) {
                best = Some(value);
            }
        }
    }
    best.expect("the covering polyhedron has a vertex")
}
