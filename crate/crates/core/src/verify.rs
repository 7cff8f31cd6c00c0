//! Verification sweeps: every closed form is compared with the hyper Zagreb
//! index of the explicitly composed graph, and every disagreement is kept
//! as a row of the discrepancy ledger.

use std::fmt;
use std::io;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{
    hm_b1_corrected, hm_b1_printed, hm_b1_uniform, hm_b2_as_stated, hm_b2_printed, hm_b2_uniform,
    hm_chain_corrected, hm_chain_printed, summarize, ComponentSummary, FormulaVariant,
};
use crate::compose::{bridge_b1, bridge_b2, chain, AnchoredComponent, CompositeKind};
use crate::error::{Error, Result};
use crate::families::{random_connected_with, FamilySpec, FormulaValue, PolyKind};
use crate::index::hyper_zagreb;

pub const CSV_HEADER: [&str; 9] = [
    "structure",
    "params",
    "oracle",
    "printed",
    "corrected",
    "example_formula",
    "printed_matches",
    "corrected_matches",
    "formula_matches",
];

pub const LEDGER_HEADER: [&str; 8] = [
    "structure",
    "variant",
    "params",
    "printed_value",
    "corrected_value",
    "oracle_value",
    "printed_matches",
    "corrected_matches",
];

/// One sweep point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub structure: String,
    pub params: Vec<(String, String)>,
    /// Hyper Zagreb index of the composed graph.
    pub oracle: i64,
    pub printed: Option<i64>,
    /// Which stated formula produced `printed`.
    pub printed_formula: Option<&'static str>,
    pub corrected: Option<i64>,
    pub example_formula: Option<i64>,
    pub within_validity: Option<bool>,
    pub printed_matches: Option<bool>,
    pub corrected_matches: Option<bool>,
    pub formula_matches: Option<bool>,
}

impl VerificationRecord {
    fn new(
        structure: impl Into<String>,
        params: Vec<(String, String)>,
        oracle: i64,
        printed: Option<(i64, &'static str)>,
        corrected: Option<i64>,
        formula: Option<FormulaValue>,
    ) -> Self {
        Self {
            structure: structure.into(),
            params,
            oracle,
            printed: printed.map(|p| p.0),
            printed_formula: printed.map(|p| p.1),
            corrected,
            example_formula: formula.map(|f| f.value),
            within_validity: formula.map(|f| f.within_validity),
            printed_matches: printed.map(|p| p.0 == oracle),
            corrected_matches: corrected.map(|c| c == oracle),
            formula_matches: formula.map(|f| f.value == oracle),
        }
    }

    /// `key=value` pairs joined with `;`.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn oracle_of(g: &crate::graph::Graph) -> Result<i64> {
    i64::try_from(hyper_zagreb(g)?).map_err(|_| Error::Overflow {
        what: "hyper Zagreb index",
    })
}

fn owned(params: Vec<(&'static str, String)>) -> Vec<(String, String)> {
    params
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// Verifies one family member: direct index, the matching stated formula,
/// the per-edge evaluator, and the family's own closed form.
pub fn verify_family(spec: &FamilySpec) -> Result<VerificationRecord> {
    let params = owned(spec.params());
    let Some((kind, comps)) = spec.components()? else {
        let oracle = oracle_of(&spec.graph()?)?;
        return Ok(VerificationRecord::new(
            spec.name(),
            params,
            oracle,
            None,
            None,
            spec.example_formula(),
        ));
    };
    let graph = match kind {
        CompositeKind::B1 => bridge_b1(&comps)?,
        CompositeKind::B2 => bridge_b2(&comps)?,
        CompositeKind::Chain => chain(&comps)?,
    }
    .graph;
    let oracle = oracle_of(&graph)?;
    let summaries = comps.iter().map(summarize).collect::<Result<Vec<_>>>()?;
    let d = summaries.len();
    let linked = d >= 2;

    let (printed, corrected) = match spec {
        FamilySpec::CombT { .. }
        | FamilySpec::BridgeB { .. }
        | FamilySpec::CombA { .. }
        | FamilySpec::Poly {
            kind: PolyKind::Ortho,
            ..
        } => (
            Some((hm_b1_uniform(&summaries[0], d)?, "b1_uniform")),
            linked.then(|| hm_b1_corrected(&summaries)).transpose()?,
        ),
        FamilySpec::VanHove { .. } => (
            linked
                .then(|| hm_b1_printed(&summaries))
                .transpose()?
                .map(|v| (v, "b1_general")),
            linked.then(|| hm_b1_corrected(&summaries)).transpose()?,
        ),
        FamilySpec::Poly { .. } => (
            Some((
                hm_b2_uniform(&summaries[0], d, FormulaVariant::Printed)?,
                "b2_uniform",
            )),
            Some(hm_b2_uniform(&summaries[0], d, FormulaVariant::Corrected)?),
        ),
        FamilySpec::Spiro { .. } => (
            Some((hm_chain_printed(&summaries)?, "chain_general")),
            Some(hm_chain_corrected(&summaries)?),
        ),
        FamilySpec::Cycle { .. } | FamilySpec::Path { .. } | FamilySpec::RandomConnected { .. } => {
            unreachable!("base families have no components")
        }
    };
    Ok(VerificationRecord::new(
        spec.name(),
        params,
        oracle,
        printed,
        corrected,
        spec.example_formula(),
    ))
}

/// `d` random connected components drawn from `seed`. Sizes are uniform in
/// `sizes`; every component of a B2 or chain list carries two distinct,
/// non-adjacent anchors.
pub fn random_components(
    kind: CompositeKind,
    seed: u64,
    d: usize,
    sizes: ParamRange,
) -> Result<Vec<AnchoredComponent>> {
    let two_anchors = kind != CompositeKind::B1;
    let min = if two_anchors { 3 } else { 1 };
    if sizes.lo < min || sizes.lo > sizes.hi {
        return Err(Error::BadParameter(format!(
            "component sizes {sizes} must lie in {min}.. for {kind}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..d)
        .map(|_| {
            let n = rng.gen_range(sizes.lo..=sizes.hi);
            let capacity = n * (n - 1) / 2 - (n - 1);
            // keep at least one non-edge for the anchor pair
            let room = if two_anchors { capacity - 1 } else { capacity };
            let extra = rng.gen_range(0..=room.min(n));
            let g = random_connected_with(n, extra, &mut rng)?;
            if two_anchors {
                let free: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !g.has_edge(u, v).unwrap_or(true))
                    .collect();
                let (a, b) = free[rng.gen_range(0..free.len())];
                let (v, w) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
                AnchoredComponent::pair(g, v, w)
            } else {
                let v = rng.gen_range(0..n);
                AnchoredComponent::single(g, v)
            }
        })
        .collect()
}

/// One random trial for the general (non-uniform) composite formulas.
///
/// * B1: printed = stated formula, corrected = per-edge sum.
/// * B2: printed = stated index ranges, corrected = repaired ranges.
/// * Chain: printed = stated formula, corrected = per-link sum.
pub fn verify_composite(
    kind: CompositeKind,
    seed: u64,
    d: usize,
    sizes: ParamRange,
) -> Result<VerificationRecord> {
    if d < 2 {
        return Err(Error::BadParameter(format!(
            "composite sweeps need d >= 2, got {d}"
        )));
    }
    let comps = random_components(kind, seed, d, sizes)?;
    let summaries: Vec<ComponentSummary> = comps.iter().map(summarize).collect::<Result<_>>()?;
    let (graph, printed, corrected) = match kind {
        CompositeKind::B1 => (
            bridge_b1(&comps)?.graph,
            (hm_b1_printed(&summaries)?, "b1_general"),
            hm_b1_corrected(&summaries)?,
        ),
        CompositeKind::B2 => (
            bridge_b2(&comps)?.graph,
            (hm_b2_as_stated(&summaries)?, "b2_general_stated"),
            hm_b2_printed(&summaries)?,
        ),
        CompositeKind::Chain => (
            chain(&comps)?.graph,
            (hm_chain_printed(&summaries)?, "chain_general"),
            hm_chain_corrected(&summaries)?,
        ),
    };
    let sizes_param = comps
        .iter()
        .map(|c| c.graph().vertex_count().to_string())
        .collect::<Vec<_>>()
        .join("-");
    Ok(VerificationRecord::new(
        format!("composite_{kind}"),
        vec![
            ("seed".into(), seed.to_string()),
            ("d".into(), d.to_string()),
            ("sizes".into(), sizes_param),
        ],
        oracle_of(&graph)?,
        Some(printed),
        Some(corrected),
        None,
    ))
}

/// Inclusive integer range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: usize,
    pub hi: usize,
}

impl ParamRange {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn is_single(self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| {
                Error::BadParameter(format!("malformed range {s:?} (expected a..b or a)"))
            })
        };
        let range = match s.split_once("..") {
            Some((a, b)) => Self::new(num(a)?, num(b)?),
            None => {
                let x = num(s)?;
                Self::new(x, x)
            }
        };
        if range.lo > range.hi {
            return Err(Error::BadParameter(format!("empty range {s:?}")));
        }
        Ok(range)
    }
}

/// Sweep configuration. Unset ranges fall back to per-family defaults.
#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub d: Option<ParamRange>,
    pub n: Option<ParamRange>,
    pub m: Option<ParamRange>,
    pub h: Option<ParamRange>,
    pub k: Option<ParamRange>,
    pub l: Option<ParamRange>,
    /// Polyphenyl kind, or composite kind for `composites`.
    pub kind: Option<String>,
    pub seeds: usize,
    pub seed: u64,
    pub include_out_of_range: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            d: None,
            n: None,
            m: None,
            h: None,
            k: None,
            l: None,
            kind: None,
            seeds: 100,
            seed: 0,
            include_out_of_range: false,
        }
    }
}

pub const FAMILY_TARGETS: [&str; 8] = [
    "cycle", "path", "comb_t", "bridge_b", "comb_a", "van_hove", "poly", "spiro",
];

/// Runs a sweep. `target` is a family name or `composites`. Rows come out in
/// parameter order.
pub fn sweep(target: &str, opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    if target == "composites" {
        return composite_sweep(opts);
    }
    family_points(target, opts)?
        .iter()
        .map(verify_family)
        .filter(|r| match r {
            Ok(rec) => opts.include_out_of_range || rec.within_validity != Some(false),
            Err(_) => true,
        })
        .collect()
}

fn composite_sweep(opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    let kinds = match opts.kind.as_deref() {
        None | Some("all") => vec![CompositeKind::B1, CompositeKind::B2, CompositeKind::Chain],
        Some("b1") => vec![CompositeKind::B1],
        Some("b2") => vec![CompositeKind::B2],
        Some("chain") => vec![CompositeKind::Chain],
        Some(other) => {
            return Err(Error::BadParameter(format!(
                "unknown composite kind {other:?} (expected b1, b2, chain or all)"
            )))
        }
    };
    let d = opts.d.unwrap_or(ParamRange::new(2, 8));
    let sizes = opts.n.unwrap_or(ParamRange::new(3, 9));
    let span = (d.hi - d.lo + 1) as u64;
    let mut rows = Vec::new();
    for kind in kinds {
        for i in 0..opts.seeds as u64 {
            let seed = opts.seed.wrapping_add(i);
            let trial_d = d.lo + (i % span) as usize;
            rows.push(verify_composite(kind, seed, trial_d, sizes)?);
        }
    }
    Ok(rows)
}

fn family_points(target: &str, opts: &SweepOptions) -> Result<Vec<FamilySpec>> {
    // (default lower bound inside the validity region, lower bound of the domain)
    let pick = |given: Option<ParamRange>, valid_lo: usize, domain_lo: usize, hi: usize| {
        given.unwrap_or_else(|| {
            let lo = if opts.include_out_of_range {
                domain_lo
            } else {
                valid_lo
            };
            ParamRange::new(lo, hi)
        })
    };
    let mut points = Vec::new();
    match target {
        "cycle" => {
            for n in pick(opts.n, 3, 3, 10).iter() {
                points.push(FamilySpec::Cycle { n });
            }
        }
        "path" => {
            for m in pick(opts.m, 1, 1, 10).iter() {
                points.push(FamilySpec::Path { m });
            }
        }
        "comb_t" => {
            for d in pick(opts.d, 3, 2, 10).iter() {
                for n in pick(opts.n, 3, 3, 10).iter() {
                    points.push(FamilySpec::CombT { d, n });
                }
            }
        }
        "bridge_b" => {
            for d in pick(opts.d, 3, 2, 12).iter() {
                points.push(FamilySpec::BridgeB { d });
            }
        }
        "comb_a" => {
            for d in pick(opts.d, 3, 2, 10).iter() {
                for m in pick(opts.m, 3, 2, 10).iter() {
                    points.push(FamilySpec::CombA { d, m });
                }
            }
        }
        "van_hove" => {
            for n in pick(opts.n, 3, 1, 8).iter() {
                points.push(FamilySpec::VanHove { n });
            }
        }
        "poly" => {
            let kinds = match opts.kind.as_deref() {
                None | Some("all") => PolyKind::ALL.to_vec(),
                Some(k) => vec![k.parse()?],
            };
            for kind in kinds {
                for h in pick(opts.h, 1, 1, 10).iter() {
                    points.push(FamilySpec::Poly { h, kind });
                }
            }
        }
        "spiro" => {
            let explicit = opts.k.is_some_and(ParamRange::is_single)
                && opts.l.is_some_and(ParamRange::is_single);
            for n in pick(opts.n, 4, 4, 8).iter() {
                let k_range = opts.k.unwrap_or(ParamRange::new(0, n.saturating_sub(1)));
                let l_range = opts.l.unwrap_or(ParamRange::new(0, n.saturating_sub(1)));
                for k in k_range.iter() {
                    for l in l_range.iter() {
                        let gap = k.abs_diff(l);
                        let valid = k < n && l < n && gap != 0 && gap != 1 && gap != n - 1;
                        if !valid && !explicit {
                            continue;
                        }
                        for d in pick(opts.d, 2, 2, 10).iter() {
                            points.push(FamilySpec::Spiro { n, k, l, d });
                        }
                    }
                }
            }
        }
        other => {
            return Err(Error::BadParameter(format!(
                "cannot verify {other:?}; expected one of {} or composites",
                FAMILY_TARGETS.join(", ")
            )))
        }
    }
    Ok(points)
}

/// Match and mismatch counts over a set of rows.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub rows: usize,
    pub printed_mismatches: usize,
    pub corrected_mismatches: usize,
    pub formula_mismatches: usize,
    /// Family formula mismatches at points claimed to be valid.
    pub formula_mismatches_in_range: usize,
}

impl SweepSummary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Self {
            rows: records.len(),
            ..Self::default()
        };
        for r in records {
            s.printed_mismatches += usize::from(r.printed_matches == Some(false));
            s.corrected_mismatches += usize::from(r.corrected_matches == Some(false));
            if r.formula_matches == Some(false) {
                s.formula_mismatches += 1;
                s.formula_mismatches_in_range += usize::from(r.within_validity == Some(true));
            }
        }
        s
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows={} printed_mismatches={} corrected_mismatches={} formula_mismatches={} formula_mismatches_in_range={}",
            self.rows,
            self.printed_mismatches,
            self.corrected_mismatches,
            self.formula_mismatches,
            self.formula_mismatches_in_range
        )
    }
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// Writes the sweep rows with [`CSV_HEADER`].
pub fn write_csv<W: io::Write>(records: &[VerificationRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in records {
        w.write_record([
            r.structure.clone(),
            r.params_string(),
            r.oracle.to_string(),
            opt(r.printed),
            opt(r.corrected),
            opt(r.example_formula),
            opt(r.printed_matches),
            opt(r.corrected_matches),
            opt(r.formula_matches),
        ])
        .map_err(csv_error)?;
    }
    w.flush()
}

/// One ledger row per disagreement: the stated formula (`variant` names
/// it), the family closed form (`variant = example`), or the corrected
/// evaluator (`variant = corrected`, never expected).
pub fn ledger_rows(records: &[VerificationRecord]) -> Vec<[String; 8]> {
    let mut rows = Vec::new();
    for r in records {
        let row = |variant: &str, printed: Option<i64>, printed_matches: Option<bool>| {
            [
                r.structure.clone(),
                variant.to_string(),
                r.params_string(),
                opt(printed),
                opt(r.corrected),
                r.oracle.to_string(),
                opt(printed_matches),
                opt(r.corrected_matches),
            ]
        };
        if r.printed_matches == Some(false) {
            rows.push(row(
                r.printed_formula.unwrap_or("printed"),
                r.printed,
                r.printed_matches,
            ));
        }
        if r.formula_matches == Some(false) {
            rows.push(row("example", r.example_formula, r.formula_matches));
        }
        if r.corrected_matches == Some(false)
            && r.printed_matches != Some(false)
            && r.formula_matches != Some(false)
        {
            rows.push(row("corrected", r.printed, r.printed_matches));
        }
    }
    rows
}

/// Writes the discrepancy ledger with [`LEDGER_HEADER`].
pub fn write_ledger<W: io::Write>(records: &[VerificationRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(LEDGER_HEADER).map_err(csv_error)?;
    for row in ledger_rows(records) {
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()
}
