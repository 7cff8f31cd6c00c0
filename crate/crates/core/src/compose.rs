//! Bridge and chain composition of anchored components.
//!
//! * [`bridge_b1`] joins `v_i` to `v_{i+1}` by a new edge.
//! * [`bridge_b2`] joins `w_i` to `v_{i+1}` by a new edge.
//! * [`chain`] identifies `w_i` with `v_{i+1}`.
//!
//! Components are laid out in order: the vertices of component `i` receive
//! the composed ids immediately after those of component `i - 1`. Every
//! builder returns the full per-component id table, so callers never need to
//! reconstruct the layout.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with the vertices used to attach it to its neighbors
/// in a composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredComponent {
    graph: Graph,
    anchor_v: usize,
    anchor_w: Option<usize>,
}

impl AnchoredComponent {
    /// A component with a single anchor, as used by [`bridge_b1`].
    pub fn single(graph: Graph, v: usize) -> Result<Self> {
        graph.degree(v)?;
        Ok(Self {
            graph,
            anchor_v: v,
            anchor_w: None,
        })
    }

    /// A component with an in-anchor `v` and an out-anchor `w`. The anchors
    /// must be distinct and non-adjacent.
    pub fn pair(graph: Graph, v: usize, w: usize) -> Result<Self> {
        graph.degree(v)?;
        graph.degree(w)?;
        let c = Self {
            graph,
            anchor_v: v,
            anchor_w: Some(w),
        };
        c.check_pair(0)?;
        Ok(c)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn anchor_v(&self) -> usize {
        self.anchor_v
    }

    pub fn anchor_w(&self) -> Option<usize> {
        self.anchor_w
    }

    /// Returns `w`, or an error tagged with `component` if it is missing or
    /// violates the two-anchor invariant.
    fn check_pair(&self, component: usize) -> Result<usize> {
        let w = self
            .anchor_w
            .ok_or(Error::MissingSecondAnchor { component })?;
        let v = self.anchor_v;
        if v == w || self.graph.has_edge(v, w)? {
            return Err(Error::AdjacentAnchors { component, v, w });
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CompositeKind {
    B1,
    B2,
    Chain,
}

impl fmt::Display for CompositeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompositeKind::B1 => "b1",
            CompositeKind::B2 => "b2",
            CompositeKind::Chain => "chain",
        })
    }
}

/// Composed ids of one component's anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnchorMap {
    pub v: usize,
    pub w: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeResult {
    pub graph: Graph,
    pub kind: CompositeKind,
    pub anchor_map: Vec<AnchorMap>,
    /// `vertex_map[i][x]` is the composed id of vertex `x` of component `i`.
    pub vertex_map: Vec<Vec<usize>>,
}

/// Lays the components out back to back with no identifications.
fn disjoint_layout(components: &[AnchoredComponent]) -> (usize, Vec<Vec<usize>>) {
    let mut next = 0;
    let maps = components
        .iter()
        .map(|c| {
            let n = c.graph.vertex_count();
            let map = (next..next + n).collect();
            next += n;
            map
        })
        .collect();
    (next, maps)
}

fn component_edges<'a>(
    components: &'a [AnchoredComponent],
    maps: &'a [Vec<usize>],
) -> impl Iterator<Item = (usize, (usize, usize))> + 'a {
    components
        .iter()
        .zip(maps)
        .enumerate()
        .flat_map(|(i, (c, map))| c.graph.edges().map(move |(a, b)| (i, (map[a], map[b]))))
}

fn anchor_maps(components: &[AnchoredComponent], maps: &[Vec<usize>]) -> Vec<AnchorMap> {
    components
        .iter()
        .zip(maps)
        .map(|(c, map)| AnchorMap {
            v: map[c.anchor_v],
            w: c.anchor_w.map(|w| map[w]),
        })
        .collect()
}

pub fn bridge_b1(components: &[AnchoredComponent]) -> Result<CompositeResult> {
    if components.is_empty() {
        return Err(Error::EmptyComponentList);
    }
    let (n, maps) = disjoint_layout(components);
    let anchor_map = anchor_maps(components, &maps);
    let bridges = anchor_map.windows(2).map(|p| (p[0].v, p[1].v));
    let edges = component_edges(components, &maps)
        .map(|(_, e)| e)
        .chain(bridges);
    let result = CompositeResult {
        graph: Graph::new(n, edges)?,
        kind: CompositeKind::B1,
        anchor_map,
        vertex_map: maps,
    };
    check_degrees(components, &result)?;
    Ok(result)
}

pub fn bridge_b2(components: &[AnchoredComponent]) -> Result<CompositeResult> {
    if components.is_empty() {
        return Err(Error::EmptyComponentList);
    }
    for (i, c) in components.iter().enumerate() {
        c.check_pair(i)?;
    }
    let (n, maps) = disjoint_layout(components);
    let anchor_map = anchor_maps(components, &maps);
    let bridges = anchor_map
        .windows(2)
        .map(|p| (p[0].w.expect("checked"), p[1].v));
    let edges = component_edges(components, &maps)
        .map(|(_, e)| e)
        .chain(bridges);
    let result = CompositeResult {
        graph: Graph::new(n, edges)?,
        kind: CompositeKind::B2,
        anchor_map,
        vertex_map: maps,
    };
    check_degrees(components, &result)?;
    Ok(result)
}

pub fn chain(components: &[AnchoredComponent]) -> Result<CompositeResult> {
    if components.is_empty() {
        return Err(Error::EmptyComponentList);
    }
    let mut out_anchors = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        out_anchors.push(c.check_pair(i)?);
    }

    // Component i > 0 reuses the composed id of w_{i-1} for its v_i; every
    // other vertex gets a fresh id in local order.
    let mut next = 0;
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        let shared = (i > 0).then(|| maps[i - 1][out_anchors[i - 1]]);
        let map = (0..c.graph.vertex_count())
            .map(|x| match shared {
                Some(id) if x == c.anchor_v => id,
                _ => {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        maps.push(map);
    }

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (i, (a, b)) in component_edges(components, &maps) {
        if a == b || !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::MergedMultiEdge { component: i });
        }
        edges.push((a, b));
    }
    let result = CompositeResult {
        graph: Graph::new(next, edges)?,
        kind: CompositeKind::Chain,
        anchor_map: anchor_maps(components, &maps),
        vertex_map: maps,
    };
    check_degrees(components, &result)?;
    Ok(result)
}

/// Degree of every composed vertex as predicted from the component degrees
/// alone by the case analysis for `kind`.
pub fn predicted_degrees(
    kind: CompositeKind,
    components: &[AnchoredComponent],
    vertex_map: &[Vec<usize>],
) -> Result<Vec<usize>> {
    let d = components.len();
    let n = vertex_map
        .iter()
        .flatten()
        .map(|&x| x + 1)
        .max()
        .unwrap_or(0);
    let mut degree = vec![0usize; n];
    for (c, map) in components.iter().zip(vertex_map) {
        for (x, &id) in map.iter().enumerate() {
            // identified vertices collect the degree from both sides
            degree[id] += c.graph.degree(x)?;
        }
    }
    if d < 2 {
        return Ok(degree);
    }
    match kind {
        CompositeKind::B1 => {
            for (i, (c, map)) in components.iter().zip(vertex_map).enumerate() {
                let gain = if i == 0 || i == d - 1 { 1 } else { 2 };
                degree[map[c.anchor_v]] += gain;
            }
        }
        CompositeKind::B2 => {
            for (i, (c, map)) in components.iter().zip(vertex_map).enumerate() {
                if i + 1 < d {
                    let w = c
                        .anchor_w
                        .ok_or(Error::MissingSecondAnchor { component: i })?;
                    degree[map[w]] += 1;
                }
                if i > 0 {
                    degree[map[c.anchor_v]] += 1;
                }
            }
        }
        CompositeKind::Chain => {}
    }
    Ok(degree)
}

/// Compares the built graph's degrees with [`predicted_degrees`].
pub fn check_degrees(components: &[AnchoredComponent], result: &CompositeResult) -> Result<()> {
    let predicted = predicted_degrees(result.kind, components, &result.vertex_map)?;
    if predicted.len() != result.graph.vertex_count() {
        return Err(Error::InternalIdentityViolation(format!(
            "{} composite has {} vertices, layout predicts {}",
            result.kind,
            result.graph.vertex_count(),
            predicted.len()
        )));
    }
    for (u, &want) in predicted.iter().enumerate() {
        let got = result.graph.degree(u)?;
        if got != want {
            return Err(Error::InternalIdentityViolation(format!(
                "{} composite vertex {u}: degree {got}, predicted {want}",
                result.kind
            )));
        }
    }
    Ok(())
}
