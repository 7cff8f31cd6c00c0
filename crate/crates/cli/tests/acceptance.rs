//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::io::Write;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use zagreb_core::closed_form::{
    hm_b1_corrected, hm_b1_printed, hm_b2_printed, hm_b2_uniform, hm_chain_corrected,
};
use zagreb_core::families::{cycle, random_connected};
use zagreb_core::verify::{
    ledger_rows, random_components, sweep, verify_composite, verify_family, ParamRange,
    SweepOptions, VerificationRecord, FAMILY_TARGETS,
};
use zagreb_core::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn oracle(g: &Graph) -> std::result::Result<i64, String> {
    Ok(lib(hyper_zagreb(g))? as i64)
}

fn identity_suite() -> Check {
    for seed in 0..200u64 {
        let n = 1 + (seed % 12) as usize;
        let cap = n * (n - 1) / 2 - (n - 1);
        let extra = (seed as usize * 7) % (cap + 1);
        let g = lib(random_connected(n, extra, seed))?;
        let hm = lib(hyper_zagreb(&g))?;
        let f = lib(forgotten_index(&g))?;
        let m2 = lib(second_zagreb(&g))?;
        ensure!(
            hm == f + 2 * m2,
            "seed {seed}: HM {hm} != F {f} + 2*M2 {m2}"
        );
        let (vw, ew) = (lib(first_zagreb(&g))?, lib(first_zagreb_edgewise(&g))?);
        ensure!(
            vw == ew,
            "seed {seed}: M1 vertex-wise {vw} != edge-wise {ew}"
        );
    }
    Ok("200 graphs".into())
}

fn corrected_forms() -> Check {
    let mut trials = 0;
    for kind in [CompositeKind::B1, CompositeKind::B2, CompositeKind::Chain] {
        for d in 2..=8 {
            for seed in 0..100u64 {
                let comps = lib(random_components(kind, seed, d, ParamRange::new(3, 9)))?;
                let s = lib(comps.iter().map(summarize).collect::<Result<Vec<_>>>())?;
                let (g, closed) = match kind {
                    CompositeKind::B1 => (lib(bridge_b1(&comps))?.graph, hm_b1_corrected(&s)),
                    CompositeKind::B2 => (lib(bridge_b2(&comps))?.graph, hm_b2_printed(&s)),
                    CompositeKind::Chain => (lib(chain(&comps))?.graph, hm_chain_corrected(&s)),
                };
                let (closed, exact) = (lib(closed)?, oracle(&g)?);
                ensure!(
                    closed == exact,
                    "{kind} d={d} seed={seed}: {closed} vs {exact}"
                );
                trials += 1;
            }
        }
    }
    Ok(format!("{trials} trials"))
}

/// Checks the oracle against `expected` on every in-range point, then that
/// `mismatch` is out of range, disagrees and lands in the ledger.
fn family_example(
    points: &[FamilySpec],
    expected: impl Fn(&FamilySpec) -> i64,
    mismatch: FamilySpec,
    mismatch_values: Option<(i64, i64)>,
) -> Check {
    for p in points {
        let r = lib(verify_family(p))?;
        let want = expected(p);
        ensure!(
            r.oracle == want,
            "{p:?}: oracle {} vs formula {want}",
            r.oracle
        );
        ensure!(
            r.formula_matches == Some(true),
            "{p:?}: library formula disagrees"
        );
        ensure!(
            r.within_validity == Some(true),
            "{p:?}: flagged out of range"
        );
        ensure!(
            r.corrected_matches != Some(false),
            "{p:?}: corrected form disagrees"
        );
    }
    let r = lib(verify_family(&mismatch))?;
    let formula = expected(&mismatch);
    ensure!(r.oracle != formula, "{mismatch:?}: expected a mismatch");
    ensure!(
        r.example_formula == Some(formula),
        "{mismatch:?}: formula value"
    );
    ensure!(
        r.within_validity == Some(false),
        "{mismatch:?}: not flagged"
    );
    if let Some((o, f)) = mismatch_values {
        ensure!(
            (r.oracle, formula) == (o, f),
            "{mismatch:?}: {} vs {formula}",
            r.oracle
        );
    }
    in_ledger(&r, "example")?;
    Ok(format!(
        "{} points; {} -> oracle {} vs {formula}",
        points.len(),
        r.params_string(),
        r.oracle
    ))
}

fn in_ledger(r: &VerificationRecord, variant: &str) -> std::result::Result<(), String> {
    let rows = ledger_rows(std::slice::from_ref(r));
    ensure!(
        rows.iter()
            .any(|row| row[1] == variant && row[2] == r.params_string()),
        "{} {} missing from ledger",
        r.structure,
        r.params_string()
    );
    Ok(())
}

fn grid(
    a: std::ops::RangeInclusive<usize>,
    b: std::ops::RangeInclusive<usize>,
) -> Vec<(usize, usize)> {
    a.flat_map(|x| b.clone().map(move |y| (x, y))).collect()
}

fn comb_t() -> Check {
    let points: Vec<_> = grid(3..=10, 3..=10)
        .into_iter()
        .map(|(d, n)| FamilySpec::CombT { d, n })
        .collect();
    family_example(
        &points,
        |p| match *p {
            FamilySpec::CombT { d, n } => (16 * n * d + 104 * d) as i64 - 138,
            _ => unreachable!(),
        },
        FamilySpec::CombT { d: 2, n: 3 },
        Some((168, 166)),
    )
}

fn bridge_b() -> Check {
    let points: Vec<_> = (3..=12).map(|d| FamilySpec::BridgeB { d }).collect();
    family_example(
        &points,
        |p| match *p {
            FamilySpec::BridgeB { d } => 114 * d as i64 - 130,
            _ => unreachable!(),
        },
        FamilySpec::BridgeB { d: 2 },
        Some((100, 98)),
    )
}

fn comb_a() -> Check {
    let points: Vec<_> = grid(3..=10, 3..=10)
        .into_iter()
        .map(|(d, m)| FamilySpec::CombA { d, m })
        .collect();
    family_example(
        &points,
        |p| match *p {
            FamilySpec::CombA { d, m } => (16 * m * d + 22 * d) as i64 - 76,
            _ => unreachable!(),
        },
        FamilySpec::CombA { d: 2, m: 3 },
        None,
    )
}

fn van_hove() -> Check {
    let points: Vec<_> = (3..=8).map(|n| FamilySpec::VanHove { n }).collect();
    family_example(
        &points,
        |p| match *p {
            FamilySpec::VanHove { n } => (16 * n * n + 44 * n) as i64 - 106,
            _ => unreachable!(),
        },
        FamilySpec::VanHove { n: 2 },
        Some((48, 46)),
    )
}

fn polyphenyl() -> Check {
    for h in 1..=10 {
        let meta = lib(verify_family(&FamilySpec::Poly {
            h,
            kind: PolyKind::Meta,
        }))?;
        let para = lib(verify_family(&FamilySpec::Poly {
            h,
            kind: PolyKind::Para,
        }))?;
        let want = 168 * h as i64 - 72;
        ensure!(meta.oracle == want, "meta h={h}: {} vs {want}", meta.oracle);
        ensure!(para.oracle == want, "para h={h}: {} vs {want}", para.oracle);
        ensure!(
            meta.formula_matches == Some(true) && para.formula_matches == Some(true),
            "h={h}: library formula disagrees"
        );
    }
    let ortho: Vec<_> = (3..=10)
        .map(|h| FamilySpec::Poly {
            h,
            kind: PolyKind::Ortho,
        })
        .collect();
    family_example(
        &ortho,
        |p| match *p {
            FamilySpec::Poly { h, .. } => 200 * h as i64 - 138,
            _ => unreachable!(),
        },
        FamilySpec::Poly {
            h: 2,
            kind: PolyKind::Ortho,
        },
        Some((264, 262)),
    )
    .map(|s| format!("meta = para for h 1..10; ortho {s}"))
}

fn spiro() -> Check {
    let mut count = 0;
    for n in 4..=8usize {
        for k in 0..n {
            for l in 0..n {
                let gap = k.abs_diff(l);
                if gap == 0 || gap == 1 || gap == n - 1 {
                    continue;
                }
                for d in 2..=10 {
                    let p = FamilySpec::Spiro { n, k, l, d };
                    let r = lib(verify_family(&p))?;
                    let want = (16 * n * d + 80 * d) as i64 - 80;
                    ensure!(r.oracle == want, "{p:?}: oracle {} vs {want}", r.oracle);
                    ensure!(
                        r.formula_matches == Some(true),
                        "{p:?}: library formula disagrees"
                    );
                    ensure!(
                        r.corrected_matches == Some(true),
                        "{p:?}: corrected form disagrees"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} points"))
}

fn b2_uniform_misprint() -> Check {
    // both non-adjacent anchor placements on the hexagon
    for (v, w) in [(0, 2), (0, 3)] {
        let c = lib(AnchoredComponent::pair(lib(cycle(6))?, v, w))?;
        let s = lib(summarize(&c))?;
        for d in 2..=10 {
            let exact = oracle(&lib(bridge_b2(&vec![c.clone(); d]))?.graph)?;
            let printed = lib(hm_b2_uniform(&s, d, FormulaVariant::Printed))?;
            let corrected = lib(hm_b2_uniform(&s, d, FormulaVariant::Corrected))?;
            ensure!(printed != exact, "anchors ({v},{w}) d={d}: printed agrees");
            ensure!(
                corrected == exact,
                "anchors ({v},{w}) d={d}: {corrected} vs {exact}"
            );
            if d == 2 {
                ensure!((printed, exact) == (230, 264), "d=2: {printed} vs {exact}");
            }
        }
    }
    let rows = lib(sweep("poly", &SweepOptions::default()))?;
    let mut logged = 0;
    for r in rows.iter().filter(|r| r.param("kind") != Some("ortho")) {
        let h: usize = r.param("h").unwrap().parse().unwrap();
        if h >= 2 {
            ensure!(
                r.printed_matches == Some(false),
                "{}: printed agrees",
                r.params_string()
            );
            in_ledger(r, "b2_uniform")?;
            logged += 1;
        }
    }
    Ok(format!(
        "d=2 printed 230 vs oracle 264; {logged} ledger rows"
    ))
}

fn b1_general_boundary() -> Check {
    let mut checked = 0;
    // uniform: family components and random components repeated d times
    let mut uniform: Vec<AnchoredComponent> = Vec::new();
    for spec in [
        FamilySpec::CombT { d: 2, n: 5 },
        FamilySpec::BridgeB { d: 2 },
        FamilySpec::CombA { d: 2, m: 4 },
        FamilySpec::Poly {
            h: 2,
            kind: PolyKind::Ortho,
        },
    ] {
        let (_, comps) = lib(spec.components())?.ok_or("no components")?;
        uniform.push(comps[0].clone());
    }
    for seed in 0..20 {
        uniform.extend(lib(random_components(
            CompositeKind::B1,
            seed,
            1,
            ParamRange::new(3, 9),
        ))?);
    }
    for c in &uniform {
        let s = lib(summarize(c))?;
        for d in 2..=10 {
            let exact = oracle(&lib(bridge_b1(&vec![c.clone(); d]))?.graph)?;
            let printed = lib(hm_b1_printed(&vec![s; d]))?;
            if d >= 4 {
                ensure!(printed == exact, "uniform d={d}: {printed} vs {exact}");
            } else {
                ensure!(printed != exact, "uniform d={d}: expected a mismatch");
            }
            checked += 1;
        }
    }
    let opts = SweepOptions {
        kind: Some("b1".into()),
        d: Some(ParamRange::new(2, 10)),
        seeds: 450,
        ..SweepOptions::default()
    };
    let rows = lib(sweep("composites", &opts))?;
    let ledger = ledger_rows(&rows);
    let mut low = 0;
    for r in &rows {
        let d: usize = r.param("d").unwrap().parse().unwrap();
        let printed = r.printed.unwrap();
        if d >= 4 {
            ensure!(
                printed == r.oracle,
                "{}: {printed} vs {}",
                r.params_string(),
                r.oracle
            );
        } else {
            ensure!(
                printed - r.oracle != 0,
                "{}: expected a mismatch",
                r.params_string()
            );
            ensure!(
                ledger
                    .iter()
                    .any(|row| row[1] == "b1_general" && row[2] == r.params_string()),
                "{} missing from ledger",
                r.params_string()
            );
            low += 1;
        }
        checked += 1;
    }
    // spot-check a single random trial outside the sweep seeds as well
    let r = lib(verify_composite(
        CompositeKind::B1,
        9_999,
        4,
        ParamRange::new(1, 9),
    ))?;
    ensure!(
        r.printed_matches == Some(true),
        "seed 9999: printed disagrees at d=4"
    );
    ensure!(low > 0, "no d in {{2,3}} rows were produced");
    Ok(format!(
        "{checked} comparisons; {low} ledger mismatches at d in {{2,3}}"
    ))
}

fn zagreb(args: &[&str], stdin: Option<&[u8]>) -> std::result::Result<(i32, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    let mut input = child.stdin.take().unwrap();
    input
        .write_all(stdin.unwrap_or_default())
        .map_err(|e| e.to_string())?;
    drop(input);
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_contract() -> Check {
    let specs = [
        FamilySpec::Cycle { n: 7 },
        FamilySpec::Path { m: 5 },
        FamilySpec::CombT { d: 4, n: 5 },
        FamilySpec::BridgeB { d: 5 },
        FamilySpec::CombA { d: 3, m: 6 },
        FamilySpec::VanHove { n: 4 },
        FamilySpec::Poly {
            h: 3,
            kind: PolyKind::Ortho,
        },
        FamilySpec::Poly {
            h: 4,
            kind: PolyKind::Meta,
        },
        FamilySpec::Poly {
            h: 2,
            kind: PolyKind::Para,
        },
        FamilySpec::Spiro {
            n: 6,
            k: 1,
            l: 4,
            d: 3,
        },
        FamilySpec::RandomConnected {
            n: 10,
            extra: 6,
            seed: 77,
        },
    ];
    for spec in &specs {
        let mut args = vec!["gen".to_string(), spec.name().to_string()];
        for (k, v) in spec.params() {
            args.push(format!("--{k}"));
            args.push(v);
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, edges) = zagreb(&args, None)?;
        ensure!(code == 0, "{args:?} exited {code}");
        let (code, json) = zagreb(&["index", "-"], Some(&edges))?;
        ensure!(code == 0, "index of {spec:?} exited {code}");
        let g = lib(spec.graph())?;
        let r = lib(index_report(&g))?;
        let want = format!(
            "{{\"n\":{},\"m\":{},\"indices\":{{\"m1\":{},\"m2\":{},\"f\":{},\"hm\":{}}}}}\n",
            g.vertex_count(),
            g.edge_count(),
            r.m1,
            r.m2,
            r.f,
            r.hm
        );
        ensure!(
            json == want.as_bytes(),
            "{spec:?}: {}",
            String::from_utf8_lossy(&json)
        );
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let targets = FAMILY_TARGETS.iter().copied().chain(["composites"]);
    let mut runs = 0;
    for target in targets {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let ledger = dir.path().join(format!("{target}-{run}.csv"));
            let (code, out) = zagreb(
                &["verify", target, "--ledger", ledger.to_str().unwrap()],
                None,
            )?;
            ensure!(code == 0, "verify {target} exited {code}");
            let ledger = std::fs::read(&ledger).map_err(|e| e.to_string())?;
            outputs.push((out, ledger));
            runs += 1;
        }
        ensure!(
            outputs[0] == outputs[1],
            "verify {target}: output differs between runs"
        );
    }
    Ok(format!(
        "{} families round-tripped; {runs} verify runs",
        specs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("identity suite", identity_suite),
        ("corrected forms equal the oracle", corrected_forms),
        ("comb_t closed form", comb_t),
        ("bridge_b closed form", bridge_b),
        ("comb_a closed form", comb_a),
        ("van_hove closed form", van_hove),
        ("polyphenyl closed forms", polyphenyl),
        ("spiro closed form", spiro),
        ("uniform B2 hexagon misprint", b2_uniform_misprint),
        ("B1 stated-formula validity boundary", b1_general_boundary),
        ("CLI contract", cli_contract),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (status, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!(
            "[{status}] {:>2} {name}: {detail} ({:.2}s)",
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    let total = start.elapsed();
    let in_budget = total < Duration::from_secs(60);
    println!(
        "[{}] runtime {:.2}s (budget 60s)",
        if in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    if failed == 0 && in_budget {
        println!(
            "acceptance: {} of {} criteria passed",
            criteria.len(),
            criteria.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
