//! JSON file formats for ideals, graphs and simplicial complexes.
//!
//! ```text
//! ideal:   {"variables": ["x","y","z"], "generators": [[1,1,0],[0,1,1]]}
//! graph:   {"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}
//! complex: {"vertices": 7, "facets": [[0,1,2], ...]}
//! ```

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::decomposition::VertexSet;
use crate::edge_ideals::Graph;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::stanley_reisner::SimplicialComplex;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    variables: Vec<String>,
    generators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: i64,
    edges: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    vertices: i64,
    facets: Vec<Vec<i64>>,
}

/// An ideal together with the names of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub variables: Vec<String>,
    pub ideal: MonomialIdeal,
}

impl NamedIdeal {
    /// Names variables `x1, ..., xn`.
    pub fn anonymous(ideal: MonomialIdeal) -> Self {
        let variables = (1..=ideal.num_vars()).map(|i| format!("x{i}")).collect();
        NamedIdeal { variables, ideal }
    }

    pub fn with_ideal(&self, ideal: MonomialIdeal) -> Self {
        NamedIdeal { variables: self.variables.clone(), ideal }
    }

    pub fn to_json(&self) -> serde_json::Value {
        ideal_json(&self.variables, &self.ideal)
    }
}

pub fn ideal_json(variables: &[String], ideal: &MonomialIdeal) -> serde_json::Value {
    serde_json::json!({
        "variables": variables,
        "generators": ideal.generators().iter().map(|g| g.exponents()).collect::<Vec<_>>(),
    })
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Invalid(format!("malformed JSON: {e}"))
}

fn nonneg_u32(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Invalid(format!("{what} must be a nonnegative 32-bit integer, got {v}")))
}

fn index(v: i64, bound: usize, what: &str) -> Result<usize> {
    usize::try_from(v)
        .ok()
        .filter(|&i| i < bound)
        .ok_or_else(|| Error::Invalid(format!("{what} {v} out of range 0..{bound}")))
}

pub fn parse_ideal(text: &str) -> Result<NamedIdeal> {
    let raw: RawIdeal = serde_json::from_str(text).map_err(parse_err)?;
    let n = raw.variables.len();
    if n == 0 {
        return Err(Error::Invalid("at least one variable is required".into()));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = raw.variables.iter().find(|v| !seen.insert(v.as_str())) {
        return Err(Error::Invalid(format!("duplicate variable name {dup:?}")));
    }
    let mut gens = Vec::with_capacity(raw.generators.len());
    for (r, row) in raw.generators.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Invalid(format!("generator {r} has {} entries, expected {n}", row.len())));
        }
        let e = row.iter().map(|&x| nonneg_u32(x, "exponent")).collect::<Result<Vec<_>>>()?;
        gens.push(Monomial::new(e));
    }
    Ok(NamedIdeal { variables: raw.variables, ideal: MonomialIdeal::minimalize(n, gens)? })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let raw: RawGraph = serde_json::from_str(text).map_err(parse_err)?;
    let n = usize::try_from(raw.vertices)
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Invalid("vertex count must be positive".into()))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        if e.len() != 2 {
            return Err(Error::Invalid(format!("edge {e:?} must have two endpoints")));
        }
        edges.push((index(e[0], n, "vertex")?, index(e[1], n, "vertex")?));
    }
    Graph::new(n, edges)
}

pub fn graph_json(graph: &Graph) -> serde_json::Value {
    serde_json::json!({
        "vertices": graph.num_vertices(),
        "edges": graph.edges().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let raw: RawComplex = serde_json::from_str(text).map_err(parse_err)?;
    let n = usize::try_from(raw.vertices)
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Invalid("vertex count must be positive".into()))?;
    let mut facets = Vec::with_capacity(raw.facets.len());
    for f in &raw.facets {
        let vs = f.iter().map(|&v| index(v, n, "vertex")).collect::<Result<Vec<_>>>()?;
        facets.push(VertexSet::from_iter(vs));
    }
    SimplicialComplex::new(n, facets)
}

pub fn complex_json(complex: &SimplicialComplex) -> serde_json::Value {
    serde_json::json!({
        "vertices": complex.num_vertices(),
        "facets": complex.facets().iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
    })
}
