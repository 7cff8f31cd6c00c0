//! Degree-based topological indices.
//!
//! All values are exact `u64`. Arithmetic is checked, and an overflow is
//! reported as [`Error::Overflow`] rather than wrapping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn overflow(what: &'static str) -> Error {
    Error::Overflow { what }
}

fn sum_checked<I>(what: &'static str, terms: I) -> Result<u64>
where
    I: IntoIterator<Item = Option<u64>>,
{
    terms.into_iter().try_fold(0u64, |acc, term| {
        term.and_then(|t| acc.checked_add(t))
            .ok_or_else(|| overflow(what))
    })
}

fn edge_degrees(g: &Graph) -> impl Iterator<Item = (u64, u64)> + '_ {
    g.edges().map(move |(u, v)| {
        (
            g.neighbors(u).map_or(0, <[usize]>::len) as u64,
            g.neighbors(v).map_or(0, <[usize]>::len) as u64,
        )
    })
}

/// First Zagreb index, summed over vertices: `Σ_v d(v)²`.
pub fn first_zagreb(g: &Graph) -> Result<u64> {
    sum_checked(
        "first Zagreb index",
        g.degrees().map(|d| (d as u64).checked_mul(d as u64)),
    )
}

/// First Zagreb index, summed over edges: `Σ_uv d(u) + d(v)`.
pub fn first_zagreb_edgewise(g: &Graph) -> Result<u64> {
    sum_checked(
        "first Zagreb index",
        edge_degrees(g).map(|(a, b)| a.checked_add(b)),
    )
}

/// Second Zagreb index: `Σ_uv d(u)·d(v)` over edges.
pub fn second_zagreb(g: &Graph) -> Result<u64> {
    sum_checked(
        "second Zagreb index",
        edge_degrees(g).map(|(a, b)| a.checked_mul(b)),
    )
}

/// Forgotten index: `Σ_v d(v)³`.
pub fn forgotten_index(g: &Graph) -> Result<u64> {
    sum_checked(
        "forgotten index",
        g.degrees().map(|d| {
            let d = d as u64;
            d.checked_mul(d).and_then(|sq| sq.checked_mul(d))
        }),
    )
}

/// Hyper Zagreb index: `Σ_uv (d(u) + d(v))²` over edges.
pub fn hyper_zagreb(g: &Graph) -> Result<u64> {
    sum_checked(
        "hyper Zagreb index",
        edge_degrees(g).map(|(a, b)| a.checked_add(b).and_then(|s| s.checked_mul(s))),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub m1: u64,
    pub m2: u64,
    pub f: u64,
    pub hm: u64,
}

/// All four indices of `g`. Fails with [`Error::InternalIdentityViolation`]
/// if `hm != f + 2·m2` or the two routes to `m1` disagree.
pub fn index_report(g: &Graph) -> Result<IndexReport> {
    let m1 = first_zagreb(g)?;
    let m1_edges = first_zagreb_edgewise(g)?;
    let m2 = second_zagreb(g)?;
    let f = forgotten_index(g)?;
    let hm = hyper_zagreb(g)?;
    if m1 != m1_edges {
        return Err(Error::InternalIdentityViolation(format!(
            "vertex-wise M1 {m1} != edge-wise M1 {m1_edges}"
        )));
    }
    let expected = m2
        .checked_mul(2)
        .and_then(|x| x.checked_add(f))
        .ok_or_else(|| overflow("F + 2·M2"))?;
    if hm != expected {
        return Err(Error::InternalIdentityViolation(format!(
            "HM {hm} != F + 2·M2 = {expected}"
        )));
    }
    Ok(IndexReport { m1, m2, f, hm })
}
