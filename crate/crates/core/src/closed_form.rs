//! Hyper Zagreb index of composites evaluated from per-component scalars.
//!
//! Two families of evaluators live here:
//!
//! * the formulas exactly as they are usually stated for bridge and chain
//!   graphs (`*_printed`, and [`hm_b1_uniform`] / [`FormulaVariant::Printed`]),
//!   which are kept so their disagreement with the composed graph can be
//!   measured;
//! * per-edge ("corrected") sums that follow the degree increments of every
//!   anchor, which agree with a direct computation for every `d >= 2`.
//!
//! A sum whose upper bound lies below its lower bound is empty and
//! contributes 0.
//!
//! Inputs are bounded (degree and neighbor-degree sum below 2^40) so every
//! individual term fits in `i128`; accumulation is checked and the result
//! must fit in `i64`.

use serde::Serialize;

use crate::compose::AnchoredComponent;
use crate::error::{Error, Result};
use crate::index::hyper_zagreb;

/// Degree of an anchor and the degree sum over its neighbors, both taken in
/// the component before composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AnchorStats {
    pub deg: u64,
    pub delta: u64,
}

/// Everything a closed form needs to know about one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentSummary {
    pub hm: u64,
    pub v: AnchorStats,
    pub w: Option<AnchorStats>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaVariant {
    Printed,
    Corrected,
}

pub fn summarize(c: &AnchoredComponent) -> Result<ComponentSummary> {
    let g = c.graph();
    let stats = |x: usize| -> Result<AnchorStats> {
        Ok(AnchorStats {
            deg: g.degree(x)? as u64,
            delta: g.neighbor_degree_sum(x)?,
        })
    };
    Ok(ComponentSummary {
        hm: hyper_zagreb(g)?,
        v: stats(c.anchor_v())?,
        w: c.anchor_w().map(stats).transpose()?,
    })
}

const SCALAR_LIMIT: u64 = 1 << 40;

/// Anchor scalars widened to `i128`.
#[derive(Clone, Copy)]
struct A {
    deg: i128,
    delta: i128,
}

/// Summary scalars widened to `i128`.
#[derive(Clone, Copy)]
struct S {
    hm: i128,
    v: A,
    w: Option<A>,
}

impl S {
    fn w(&self, component: usize) -> Result<A> {
        self.w.ok_or(Error::MissingSecondAnchor { component })
    }
}

fn widen_anchor(a: AnchorStats) -> Result<A> {
    if a.deg >= SCALAR_LIMIT || a.delta >= SCALAR_LIMIT {
        return Err(Error::Overflow {
            what: "closed-form input scalar",
        });
    }
    Ok(A {
        deg: a.deg as i128,
        delta: a.delta as i128,
    })
}

fn widen(s: &ComponentSummary) -> Result<S> {
    Ok(S {
        hm: s.hm as i128,
        v: widen_anchor(s.v)?,
        w: s.w.map(widen_anchor).transpose()?,
    })
}

fn widen_all(summaries: &[ComponentSummary], need: usize) -> Result<Vec<S>> {
    if summaries.len() < need {
        return Err(Error::TooFewComponents {
            got: summaries.len(),
            need,
        });
    }
    summaries.iter().map(widen).collect()
}

/// Requires every component to carry an out-anchor.
fn widen_pairs(summaries: &[ComponentSummary], need: usize) -> Result<Vec<(S, A)>> {
    let s = widen_all(summaries, need)?;
    s.into_iter()
        .enumerate()
        .map(|(i, x)| Ok((x, x.w(i)?)))
        .collect()
}

fn total<I: IntoIterator<Item = i128>>(terms: I) -> Result<i64> {
    let sum = terms
        .into_iter()
        .try_fold(0i128, i128::checked_add)
        .ok_or(Error::Overflow {
            what: "closed-form sum",
        })?;
    i64::try_from(sum).map_err(|_| Error::Overflow {
        what: "closed-form value",
    })
}

/// Sum of `f(i)` for `i` in `lo..=hi` (1-based); empty when `hi < lo`.
fn sum_range(lo: usize, hi: usize, f: impl Fn(usize) -> i128) -> i128 {
    if hi < lo {
        0
    } else {
        (lo..=hi).map(f).sum()
    }
}

/// Extra hyper Zagreb contribution of the component edges at an anchor of
/// degree `a.deg` whose degree rises by `t`: each incident edge `xa` moves
/// from `(d(x) + deg)²` to `(d(x) + deg + t)²`.
fn anchor_gain(a: A, t: i128) -> i128 {
    t * t * a.deg + 2 * t * a.delta + 2 * t * a.deg * a.deg
}

/// Bridge graph B1, formula as stated.
pub fn hm_b1_printed(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_all(summaries, 2)?;
    let d = s.len();
    // 1-based accessors
    let v = |i: usize| s[i - 1].v.deg;
    let delta = |i: usize| s[i - 1].v.delta;
    let hm: i128 = s.iter().map(|x| x.hm).sum();
    total([
        hm,
        6 * sum_range(2, d - 1, |i| v(i) * v(i)),
        20 * sum_range(3, d.saturating_sub(2), v),
        2 * sum_range(1, d - 1, |i| v(i) * v(i + 1)),
        4 * sum_range(2, d - 1, delta),
        3 * (v(1) * v(1) + v(d) * v(d)),
        7 * (v(1) + v(d)),
        18 * (v(2) + v(d - 1)),
        2 * (delta(1) + delta(d)),
        16 * d as i128 - 30,
    ])
}

/// Bridge graph B1 as a per-edge sum: anchors at the ends rise by one,
/// interior anchors by two, plus the `d - 1` bridge edges.
pub fn hm_b1_corrected(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_all(summaries, 2)?;
    let d = s.len();
    let rise = |i: usize| -> i128 {
        if i == 0 || i == d - 1 {
            1
        } else {
            2
        }
    };
    let components = s
        .iter()
        .enumerate()
        .map(|(i, x)| x.hm + anchor_gain(x.v, rise(i)));
    let bridges = (0..d - 1).map(|i| {
        let sum = s[i].v.deg + rise(i) + s[i + 1].v.deg + rise(i + 1);
        sum * sum
    });
    total(components.chain(bridges))
}

/// Uniform B1 (every component is the same anchored graph), formula as
/// stated. `d = 1` yields the component's own index.
pub fn hm_b1_uniform(summary: &ComponentSummary, d: usize) -> Result<i64> {
    let x = uniform_prelude(summary, d)?;
    if d == 1 {
        return total([x.hm]);
    }
    let d = d as i128;
    let (v, delta) = (x.v.deg, x.v.delta);
    total([
        d * x.hm,
        8 * (d - 1) * v * v,
        10 * (2 * d - 3) * v,
        4 * (d - 1) * delta,
        16 * d - 30,
    ])
}

/// Bridge graph B2. The `w` terms run over components `1..d-1`, the `v`
/// terms over `2..d`, and the cross term pairs `w_i` with `v_{i+1}`, which
/// is where the new edges are.
pub fn hm_b2_printed(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_pairs(summaries, 2)?;
    let d = s.len();
    let link = |a: A| 3 * a.deg * a.deg + 5 * a.deg + 2 * a.delta;
    let hm: i128 = s.iter().map(|(x, _)| x.hm).sum();
    let out_terms: i128 = s[..d - 1].iter().map(|&(_, w)| link(w)).sum();
    let in_terms: i128 = s[1..].iter().map(|(x, _)| link(x.v)).sum();
    let cross: i128 = s.windows(2).map(|p| p[0].1.deg * p[1].0.v.deg).sum();
    total([hm, out_terms, in_terms, 2 * cross, 4 * (d as i128 - 1)])
}

/// Bridge graph B2 with the index ranges exactly as commonly stated: both
/// anchor sums over `1..d-1` and the cross term `v_i·w_i`. Differs from
/// [`hm_b2_printed`] only on non-uniform inputs.
pub fn hm_b2_as_stated(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_pairs(summaries, 2)?;
    let d = s.len();
    let link = |a: A| 3 * a.deg * a.deg + 5 * a.deg + 2 * a.delta;
    let hm: i128 = s.iter().map(|(x, _)| x.hm).sum();
    let head = &s[..d - 1];
    let out_terms: i128 = head.iter().map(|&(_, w)| link(w)).sum();
    let in_terms: i128 = head.iter().map(|(x, _)| link(x.v)).sum();
    let cross: i128 = head.iter().map(|(x, w)| x.v.deg * w.deg).sum();
    total([hm, out_terms, in_terms, 2 * cross, 4 * (d as i128 - 1)])
}

/// Uniform B2. `Printed` evaluates the stated uniform form (which reads
/// `3(d-1)(v² + w² + v + w) + 2(d-1)` on top of `d·HM(G)`); `Corrected`
/// specializes [`hm_b2_printed`].
pub fn hm_b2_uniform(summary: &ComponentSummary, d: usize, variant: FormulaVariant) -> Result<i64> {
    let x = uniform_prelude(summary, d)?;
    let w = x.w(0)?;
    let v = x.v;
    let d = d as i128;
    match variant {
        FormulaVariant::Printed => total([
            d * x.hm,
            3 * (d - 1) * (v.deg * v.deg + w.deg * w.deg + v.deg + w.deg),
            2 * (d - 1),
        ]),
        FormulaVariant::Corrected => {
            let bridge = (v.deg + w.deg + 2) * (v.deg + w.deg + 2);
            total([
                d * x.hm,
                (d - 1) * (anchor_gain(v, 1) + anchor_gain(w, 1) + bridge),
            ])
        }
    }
}

/// Chain graph, formula as stated.
pub fn hm_chain_printed(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_pairs(summaries, 2)?;
    let d = s.len();
    // 1-based accessors
    let v = |i: usize| s[i - 1].0.v;
    let w = |i: usize| s[i - 1].1;
    let hm: i128 = s.iter().map(|(x, _)| x.hm).sum();
    let into_v = |i: usize| {
        let (wp, vi) = (w(i - 1), v(i));
        wp.deg * wp.deg * vi.deg + 2 * wp.deg * vi.delta + 2 * wp.deg * vi.deg * vi.deg
    };
    let into_w = |i: usize| {
        let (wi, vn) = (w(i), v(i + 1));
        wi.deg * vn.deg * vn.deg + 2 * vn.deg * wi.delta + 2 * vn.deg * wi.deg * wi.deg
    };
    total([
        hm,
        sum_range(2, d - 1, into_v),
        sum_range(1, d - 1, into_w),
        into_w(1),
        into_v(d),
    ])
}

/// Chain graph as a per-link sum. Identifying `w_i` with `v_{i+1}` raises
/// the degree seen by `w_i`'s edges by `v_{i+1}` and vice versa.
pub fn hm_chain_corrected(summaries: &[ComponentSummary]) -> Result<i64> {
    let s = widen_pairs(summaries, 2)?;
    let hm = s.iter().map(|(x, _)| x.hm);
    let links = s.windows(2).map(|p| {
        let w = p[0].1;
        let v = p[1].0.v;
        chain_link(v, w)
    });
    total(hm.chain(links))
}

/// Contribution of one identification of `w` (left component) with `v`
/// (right component).
fn chain_link(v: A, w: A) -> i128 {
    v.deg * v.deg * w.deg
        + 2 * v.deg * w.delta
        + 2 * v.deg * w.deg * w.deg
        + w.deg * w.deg * v.deg
        + 2 * w.deg * v.delta
        + 2 * w.deg * v.deg * v.deg
}

/// Uniform chain: `d·HM(G) + (d-1)·[3vw(v+w) + 2(w·δ(v) + v·δ(w))]`.
pub fn hm_chain_uniform(summary: &ComponentSummary, d: usize) -> Result<i64> {
    let x = uniform_prelude(summary, d)?;
    let w = x.w(0)?;
    let v = x.v;
    let d = d as i128;
    total([
        d * x.hm,
        (d - 1) * (3 * v.deg * w.deg * (v.deg + w.deg) + 2 * (w.deg * v.delta + v.deg * w.delta)),
    ])
}

fn uniform_prelude(summary: &ComponentSummary, d: usize) -> Result<S> {
    if d == 0 {
        return Err(Error::TooFewComponents { got: 0, need: 1 });
    }
    widen(summary)
}
