//! `zagreb`: indices of edge-list graphs, family generation, composition and
//! verification sweeps.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad user input, 3 a corrected
//! closed form disagreed with the composed graph.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zagreb_core::compose::{bridge_b1, bridge_b2, chain, AnchorMap};
use zagreb_core::verify::{self, ParamRange, SweepOptions, SweepSummary};
use zagreb_core::{
    emit_edge_list, index_report, parse_edge_list, AnchoredComponent, CompositeKind, FamilySpec,
    Graph, IndexReport,
};

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Degree-based indices of bridge and chain graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute M1, M2, F and HM of an edge-list file ("-" reads stdin).
    Index {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a family member as an edge list.
    Gen {
        /// cycle, path, comb_t, bridge_b, comb_a, van_hove, poly, spiro or random
        family: String,
        #[command(flatten)]
        params: GenParams,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Compose component files. Each component is FILE:V for b1 and
    /// FILE:V:W for b2 and chain.
    Compose {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(required = true)]
        components: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the anchor map JSON (default: standard error).
        #[arg(long)]
        anchors: Option<PathBuf>,
    },
    /// Compare closed forms with composed graphs over a parameter sweep.
    Verify {
        /// A family name, or "composites" for random general composites.
        target: String,
        #[command(flatten)]
        ranges: RangeArgs,
        /// Random trials per composite kind (composites only).
        #[arg(long, default_value_t = 100)]
        seeds: usize,
        /// First trial seed (composites only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Polyphenyl kind (ortho, meta, para, all) or composite kind (b1, b2, chain, all).
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        include_out_of_range: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the discrepancy ledger CSV here.
        #[arg(long)]
        ledger: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    B1,
    B2,
    Chain,
}

impl From<KindArg> for CompositeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::B1 => CompositeKind::B1,
            KindArg::B2 => CompositeKind::B2,
            KindArg::Chain => CompositeKind::Chain,
        }
    }
}

#[derive(clap::Args)]
struct GenParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    extra: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(clap::Args)]
struct RangeArgs {
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    l: Option<String>,
}

enum Failure {
    Io(String),
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Input(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<zagreb_core::Error> for Failure {
    fn from(e: zagreb_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err(path))
    }
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(io_err(path)),
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct IndexOutput {
    n: usize,
    m: usize,
    indices: IndexReport,
}

fn cmd_index(input: &Path, out: Option<&Path>, format: Format) -> CliResult<()> {
    let g = load_graph(input)?;
    let report = index_report(&g)?;
    let text = match format {
        Format::Json => to_json(&IndexOutput {
            n: g.vertex_count(),
            m: g.edge_count(),
            indices: report,
        }),
        Format::Csv => format!(
            "n,m,m1,m2,f,hm\n{},{},{},{},{},{}\n",
            g.vertex_count(),
            g.edge_count(),
            report.m1,
            report.m2,
            report.f,
            report.hm
        ),
        Format::Edgelist => return Err(Failure::Input("index supports json or csv".into())),
    };
    write_output(out, text.as_bytes())
}

fn family_spec(family: &str, p: &GenParams) -> CliResult<FamilySpec> {
    let need = |name: &str, v: Option<usize>| {
        v.ok_or_else(|| Failure::Input(format!("{family} needs --{name}")))
    };
    Ok(match family {
        "cycle" => FamilySpec::Cycle { n: need("n", p.n)? },
        "path" => FamilySpec::Path { m: need("m", p.m)? },
        "comb_t" => FamilySpec::CombT {
            d: need("d", p.d)?,
            n: need("n", p.n)?,
        },
        "bridge_b" => FamilySpec::BridgeB { d: need("d", p.d)? },
        "comb_a" => FamilySpec::CombA {
            d: need("d", p.d)?,
            m: need("m", p.m)?,
        },
        "van_hove" => FamilySpec::VanHove { n: need("n", p.n)? },
        "poly" => FamilySpec::Poly {
            h: need("h", p.h)?,
            kind: p
                .kind
                .as_deref()
                .ok_or_else(|| Failure::Input("poly needs --kind".into()))?
                .parse()?,
        },
        "spiro" => FamilySpec::Spiro {
            n: need("n", p.n)?,
            k: need("k", p.k)?,
            l: need("l", p.l)?,
            d: need("d", p.d)?,
        },
        "random" => FamilySpec::RandomConnected {
            n: need("n", p.n)?,
            extra: p.extra.unwrap_or(0),
            seed: p.seed.unwrap_or(0),
        },
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

fn cmd_gen(family: &str, params: &GenParams, out: Option<&Path>, format: Format) -> CliResult<()> {
    let spec = family_spec(family, params)?;
    let g = spec.graph()?;
    let text = match format {
        Format::Edgelist => emit_edge_list(&g),
        Format::Json => to_json(&GraphJson {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g.edges().collect(),
        }),
        Format::Csv => return Err(Failure::Input("gen supports edgelist or json".into())),
    };
    write_output(out, text.as_bytes())
}

fn parse_component(idx: usize, arg: &str, kind: CompositeKind) -> CliResult<AnchoredComponent> {
    let bad = |msg: String| Failure::Input(format!("component {idx} ({arg}): {msg}"));
    let parts = arg.split(':').collect::<Vec<_>>();
    let anchor = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| bad(format!("anchor {s:?} is not a vertex id")))
    };
    // b1 uses only the first anchor; a second one is accepted and ignored
    let (file, v, w) = match (kind, parts.as_slice()) {
        (CompositeKind::B1, [file, a] | [file, a, _]) => (*file, anchor(a)?, None),
        (_, [file, a, b]) => (*file, anchor(a)?, Some(anchor(b)?)),
        (_, [_, _]) => {
            return Err(Failure::Input(format!(
                "component {idx}: second anchor required ({kind} needs FILE:V:W)"
            )))
        }
        _ => return Err(bad("expected FILE:V or FILE:V:W".into())),
    };
    let g = load_graph(Path::new(file))?;
    let with_index = |e: zagreb_core::Error| match e {
        zagreb_core::Error::AdjacentAnchors { v, w, .. } => zagreb_core::Error::AdjacentAnchors {
            component: idx,
            v,
            w,
        },
        other => other,
    };
    let c = match w {
        Some(w) => AnchoredComponent::pair(g, v, w).map_err(with_index),
        None => AnchoredComponent::single(g, v),
    };
    c.map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

#[derive(Serialize)]
struct AnchorOutput<'a> {
    kind: String,
    anchors: &'a [AnchorMap],
}

fn cmd_compose(
    kind: CompositeKind,
    args: &[String],
    out: Option<&Path>,
    anchors: Option<&Path>,
) -> CliResult<()> {
    let comps = args
        .iter()
        .enumerate()
        .map(|(i, a)| parse_component(i, a, kind))
        .collect::<CliResult<Vec<_>>>()?;
    let result = match kind {
        CompositeKind::B1 => bridge_b1(&comps),
        CompositeKind::B2 => bridge_b2(&comps),
        CompositeKind::Chain => chain(&comps),
    }?;
    write_output(out, emit_edge_list(&result.graph).as_bytes())?;
    let map = to_json(&AnchorOutput {
        kind: kind.to_string(),
        anchors: &result.anchor_map,
    });
    match anchors {
        Some(path) => fs::write(path, map).map_err(io_err(path)),
        None => io::stderr()
            .write_all(map.as_bytes())
            .map_err(|e| Failure::Io(format!("stderr: {e}"))),
    }
}

fn parse_range(s: &Option<String>) -> CliResult<Option<ParamRange>> {
    s.as_deref()
        .map(str::parse)
        .transpose()
        .map_err(Failure::from)
}

#[derive(Serialize)]
struct RecordJson<'a> {
    structure: &'a str,
    params: std::collections::BTreeMap<&'a str, &'a str>,
    oracle: i64,
    printed: Option<i64>,
    corrected: Option<i64>,
    example_formula: Option<i64>,
    printed_matches: Option<bool>,
    corrected_matches: Option<bool>,
    formula_matches: Option<bool>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    target: &str,
    ranges: &RangeArgs,
    seeds: usize,
    seed: u64,
    kind: Option<String>,
    include_out_of_range: bool,
    out: Option<&Path>,
    ledger: Option<&Path>,
    format: Format,
) -> CliResult<()> {
    let opts = SweepOptions {
        d: parse_range(&ranges.d)?,
        n: parse_range(&ranges.n)?,
        m: parse_range(&ranges.m)?,
        h: parse_range(&ranges.h)?,
        k: parse_range(&ranges.k)?,
        l: parse_range(&ranges.l)?,
        kind,
        seeds,
        seed,
        include_out_of_range,
    };
    let records = verify::sweep(target, &opts)?;
    let bytes = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            verify::write_csv(&records, &mut buf).map_err(|e| Failure::Io(e.to_string()))?;
            buf
        }
        Format::Json => {
            let rows: Vec<_> = records
                .iter()
                .map(|r| RecordJson {
                    structure: &r.structure,
                    params: r
                        .params
                        .iter()
                        .map(|(k, v)| (k.as_str(), v.as_str()))
                        .collect(),
                    oracle: r.oracle,
                    printed: r.printed,
                    corrected: r.corrected,
                    example_formula: r.example_formula,
                    printed_matches: r.printed_matches,
                    corrected_matches: r.corrected_matches,
                    formula_matches: r.formula_matches,
                })
                .collect();
            to_json(&rows).into_bytes()
        }
        Format::Edgelist => return Err(Failure::Input("verify supports csv or json".into())),
    };
    write_output(out, &bytes)?;
    if let Some(path) = ledger {
        let mut buf = Vec::new();
        verify::write_ledger(&records, &mut buf).map_err(|e| Failure::Io(e.to_string()))?;
        fs::write(path, buf).map_err(io_err(path))?;
    }
    let summary = SweepSummary::of(&records);
    eprintln!("{summary}");
    if summary.corrected_mismatches > 0 {
        return Err(Failure::Verification(format!(
            "{} corrected evaluations disagreed with the composed graph",
            summary.corrected_mismatches
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Index { input, out, format } => cmd_index(&input, out.as_deref(), format),
        Command::Gen {
            family,
            params,
            out,
            format,
        } => cmd_gen(&family, &params, out.as_deref(), format),
        Command::Compose {
            kind,
            components,
            out,
            anchors,
        } => cmd_compose(kind.into(), &components, out.as_deref(), anchors.as_deref()),
        Command::Verify {
            target,
            ranges,
            seeds,
            seed,
            kind,
            include_out_of_range,
            out,
            ledger,
            format,
        } => cmd_verify(
            &target,
            &ranges,
            seeds,
            seed,
            kind,
            include_out_of_range,
            out.as_deref(),
            ledger.as_deref(),
            format,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("zagreb: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
