//! Parametric graph families: cycles, paths, the bridge and chain
//! structures built from them, and seeded random connected graphs.
//!
//! Each composite family also has a closed-form hyper Zagreb expression
//! ([`FamilySpec::example_formula`]). Those expressions only hold on part
//! of each family's parameter domain; the returned [`FormulaValue`] says
//! whether a point lies inside that part.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::compose::{
    bridge_b1, bridge_b2, chain, AnchoredComponent, CompositeKind, CompositeResult,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `m` vertices; `path(1)` is a single isolated vertex.
pub fn path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(bad("path needs m >= 1, got 0"));
    }
    Graph::new(m, (1..m).map(|i| (i - 1, i)))
}

fn compose(kind: CompositeKind, components: &[AnchoredComponent]) -> Result<CompositeResult> {
    match kind {
        CompositeKind::B1 => bridge_b1(components),
        CompositeKind::B2 => bridge_b2(components),
        CompositeKind::Chain => chain(components),
    }
}

/// `d` cycles `C_n` joined in a row by edges between one fixed vertex of each.
pub fn comb_t(d: usize, n: usize) -> Result<CompositeResult> {
    FamilySpec::CombT { d, n }.composite_required()
}

/// `d` copies of `P_3` joined through their middle vertices.
pub fn bridge_b_family(d: usize) -> Result<CompositeResult> {
    FamilySpec::BridgeB { d }.composite_required()
}

/// `d` copies of `P_m` joined through an end vertex (the comb lattice).
pub fn comb_a(d: usize, m: usize) -> Result<CompositeResult> {
    FamilySpec::CombA { d, m }.composite_required()
}

/// Open-ended van Hove comb: teeth `P_1, P_2, .., P_n, .., P_2, P_1`, each
/// attached at an end vertex.
pub fn van_hove(n: usize) -> Result<CompositeResult> {
    FamilySpec::VanHove { n }.composite_required()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PolyKind {
    Ortho,
    Meta,
    Para,
}

impl PolyKind {
    pub const ALL: [PolyKind; 3] = [PolyKind::Ortho, PolyKind::Meta, PolyKind::Para];
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::Ortho => "ortho",
            PolyKind::Meta => "meta",
            PolyKind::Para => "para",
        })
    }
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ortho" => Ok(PolyKind::Ortho),
            "meta" => Ok(PolyKind::Meta),
            "para" => Ok(PolyKind::Para),
            _ => Err(bad(format!(
                "unknown polyphenyl kind {s:?} (expected ortho, meta or para)"
            ))),
        }
    }
}

/// Polyphenyl chain of `h` hexagons. Meta and para link hexagon `i` at
/// position 2 resp. 3 to the next hexagon's position 0. Ortho links all
/// hexagons through the same single vertex.
pub fn polyphenyl(h: usize, kind: PolyKind) -> Result<CompositeResult> {
    FamilySpec::Poly { h, kind }.composite_required()
}

/// Spiro chain of `d` cycles `C_n`, each entered at position `k` and left at
/// position `l`, consecutive cycles sharing one vertex.
pub fn spiro(n: usize, k: usize, l: usize, d: usize) -> Result<CompositeResult> {
    FamilySpec::Spiro { n, k, l, d }.composite_required()
}

/// Uniformly random labeled spanning tree on `n` vertices (decoded from a
/// random Prüfer sequence) plus `extra_edges` distinct non-tree edges chosen
/// uniformly without replacement.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`, so
/// output depends only on `(n, extra_edges, seed)`.
pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_with(n, extra_edges, &mut rng)
}

pub(crate) fn random_connected_with<R: Rng>(
    n: usize,
    extra_edges: usize,
    rng: &mut R,
) -> Result<Graph> {
    if n < 1 {
        return Err(bad("random graph needs n >= 1, got 0"));
    }
    let capacity = n * (n - 1) / 2 - (n - 1);
    if extra_edges > capacity {
        return Err(bad(format!(
            "extra_edges = {extra_edges} exceeds the {capacity} non-tree pairs available for n = {n}"
        )));
    }
    let tree = if n >= 2 {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(n, &code)
    } else {
        Vec::new()
    };
    let tree_graph = Graph::new(n, tree.iter().copied())?;
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree_graph.has_edge(u, v).unwrap_or(true))
        .collect();
    let (chosen, _) = candidates.partial_shuffle(rng, extra_edges);
    Graph::new(n, tree.into_iter().chain(chosen.iter().copied()))
}

/// Edges of the labeled tree whose Prüfer code is `code` (`code.len() == n - 2`).
fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut remaining = vec![1usize; n];
    for &x in code {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| remaining[x] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    edges
}

/// One member of a named family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    Cycle {
        n: usize,
    },
    Path {
        m: usize,
    },
    CombT {
        d: usize,
        n: usize,
    },
    BridgeB {
        d: usize,
    },
    CombA {
        d: usize,
        m: usize,
    },
    VanHove {
        n: usize,
    },
    Poly {
        h: usize,
        kind: PolyKind,
    },
    Spiro {
        n: usize,
        k: usize,
        l: usize,
        d: usize,
    },
    RandomConnected {
        n: usize,
        extra: usize,
        seed: u64,
    },
}

/// A closed-form family value and whether the point lies where the
/// expression is known to agree with the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: i64,
    pub within_validity: bool,
}

impl FamilySpec {
    /// Name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::CombT { .. } => "comb_t",
            FamilySpec::BridgeB { .. } => "bridge_b",
            FamilySpec::CombA { .. } => "comb_a",
            FamilySpec::VanHove { .. } => "van_hove",
            FamilySpec::Poly { .. } => "poly",
            FamilySpec::Spiro { .. } => "spiro",
            FamilySpec::RandomConnected { .. } => "random",
        }
    }

    /// Parameters as `key=value` pairs, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let s = |x: usize| x.to_string();
        match *self {
            FamilySpec::Cycle { n } => vec![("n", s(n))],
            FamilySpec::Path { m } => vec![("m", s(m))],
            FamilySpec::CombT { d, n } => vec![("d", s(d)), ("n", s(n))],
            FamilySpec::BridgeB { d } => vec![("d", s(d))],
            FamilySpec::CombA { d, m } => vec![("d", s(d)), ("m", s(m))],
            FamilySpec::VanHove { n } => vec![("n", s(n))],
            FamilySpec::Poly { h, kind } => vec![("h", s(h)), ("kind", kind.to_string())],
            FamilySpec::Spiro { n, k, l, d } => {
                vec![("n", s(n)), ("k", s(k)), ("l", s(l)), ("d", s(d))]
            }
            FamilySpec::RandomConnected { n, extra, seed } => {
                vec![("n", s(n)), ("extra", s(extra)), ("seed", seed.to_string())]
            }
        }
    }

    /// How the family composes, and its components in order. `None` for
    /// the base families.
    pub fn components(&self) -> Result<Option<(CompositeKind, Vec<AnchoredComponent>)>> {
        let need = |what: &str, value: usize, min: usize| {
            if value < min {
                Err(bad(format!(
                    "{} needs {what} >= {min}, got {value}",
                    self.name()
                )))
            } else {
                Ok(())
            }
        };
        let parts = match *self {
            FamilySpec::Cycle { .. }
            | FamilySpec::Path { .. }
            | FamilySpec::RandomConnected { .. } => return Ok(None),
            FamilySpec::CombT { d, n } => {
                need("d", d, 2)?;
                let c = AnchoredComponent::single(cycle(n)?, 0)?;
                (CompositeKind::B1, vec![c; d])
            }
            FamilySpec::BridgeB { d } => {
                need("d", d, 2)?;
                let c = AnchoredComponent::single(path(3)?, 1)?;
                (CompositeKind::B1, vec![c; d])
            }
            FamilySpec::CombA { d, m } => {
                need("d", d, 2)?;
                need("m", m, 2)?;
                let c = AnchoredComponent::single(path(m)?, 0)?;
                (CompositeKind::B1, vec![c; d])
            }
            FamilySpec::VanHove { n } => {
                need("n", n, 1)?;
                let comps = (1..=n)
                    .chain((1..n).rev())
                    .map(|len| AnchoredComponent::single(path(len)?, 0))
                    .collect::<Result<Vec<_>>>()?;
                (CompositeKind::B1, comps)
            }
            FamilySpec::Poly { h, kind } => {
                need("h", h, 1)?;
                let hexagon = cycle(6)?;
                match kind {
                    PolyKind::Ortho => (
                        CompositeKind::B1,
                        vec![AnchoredComponent::single(hexagon, 0)?; h],
                    ),
                    PolyKind::Meta => (
                        CompositeKind::B2,
                        vec![AnchoredComponent::pair(hexagon, 0, 2)?; h],
                    ),
                    PolyKind::Para => (
                        CompositeKind::B2,
                        vec![AnchoredComponent::pair(hexagon, 0, 3)?; h],
                    ),
                }
            }
            FamilySpec::Spiro { n, k, l, d } => {
                if n < 4 {
                    return Err(bad(format!(
                        "spiro needs n >= 4 (C_{n} has no non-adjacent vertex pair)"
                    )));
                }
                if k >= n || l >= n {
                    return Err(bad(format!(
                        "spiro positions must be < n = {n}, got k = {k}, l = {l}"
                    )));
                }
                need("d", d, 2)?;
                let c = AnchoredComponent::pair(cycle(n)?, k, l)?;
                (CompositeKind::Chain, vec![c; d])
            }
        };
        Ok(Some(parts))
    }

    /// The composite for composite families, `None` for the base families.
    pub fn composite(&self) -> Result<Option<CompositeResult>> {
        self.components()?
            .map(|(kind, comps)| compose(kind, &comps))
            .transpose()
    }

    fn composite_required(&self) -> Result<CompositeResult> {
        Ok(self.composite()?.expect("composite family"))
    }

    pub fn graph(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Path { m } => path(m),
            FamilySpec::RandomConnected { n, extra, seed } => random_connected(n, extra, seed),
            _ => Ok(self.composite_required()?.graph),
        }
    }

    /// Closed-form hyper Zagreb index of the family member, if the family
    /// has one.
    pub fn example_formula(&self) -> Option<FormulaValue> {
        let i = |x: usize| x as i64;
        let (value, within_validity) = match *self {
            FamilySpec::CombT { d, n } => (16 * i(n) * i(d) + 104 * i(d) - 138, d >= 3),
            FamilySpec::BridgeB { d } => (114 * i(d) - 130, d >= 3),
            FamilySpec::CombA { d, m } => (16 * i(m) * i(d) + 22 * i(d) - 76, d >= 3 && m >= 3),
            FamilySpec::VanHove { n } => (16 * i(n) * i(n) + 44 * i(n) - 106, n >= 3),
            FamilySpec::Poly {
                h,
                kind: PolyKind::Ortho,
            } => (200 * i(h) - 138, h >= 3),
            FamilySpec::Poly { h, .. } => (168 * i(h) - 72, h >= 1),
            FamilySpec::Spiro { n, d, .. } => (16 * i(n) * i(d) + 80 * i(d) - 80, true),
            FamilySpec::Cycle { .. }
            | FamilySpec::Path { .. }
            | FamilySpec::RandomConnected { .. } => return None,
        };
        Some(FormulaValue {
            value,
            within_validity,
        })
    }
}
