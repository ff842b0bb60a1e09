use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use kpower::analysis::{chromatic, clique_number, is_perfect, is_star_graph};
use kpower::chair::{render_trace, solve_chairs, ChairConfig};
use kpower::verify::{family_specs, verify_group, Family, KRange, Summary, Theorem};
use kpower::{analyze as analyze_pair, export as graph_export, report, FiniteGroup, GroupSpec, KPowerGraph};

use crate::{emit, AnalyzeArgs, ChairArgs, CliError, Context, ExportArgs, FamilyArgs, SweepArgs, VerifyArgs};

fn meta() -> Value {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({ "generated_at_unix": secs, "version": env!("CARGO_PKG_VERSION") })
}

fn with_meta(ctx: &Context, doc: impl Serialize) -> String {
    let mut v = serde_json::to_value(doc).expect("document serializes");
    if ctx.meta {
        if let Value::Object(map) = &mut v {
            map.insert("meta".into(), meta());
        }
    }
    let mut s = serde_json::to_string_pretty(&v).expect("document serializes");
    s.push('\n');
    s
}

fn text_meta(ctx: &Context, out: &mut String) {
    if ctx.meta {
        let m = meta();
        let _ = writeln!(out, "meta.generated_at_unix: {}", m["generated_at_unix"]);
        let _ = writeln!(out, "meta.version: {}", m["version"].as_str().unwrap_or_default());
    }
}

fn build_group(spec: &str) -> Result<FiniteGroup, CliError> {
    let spec: GroupSpec = spec.parse()?;
    Ok(FiniteGroup::build(spec)?)
}

fn format_of(ctx: &Context, flag: Option<String>, default: &str, allowed: &[&str]) -> Result<String, CliError> {
    let f = ctx.config.pick(flag, "format", Some(default.to_string()))?;
    if allowed.contains(&f.as_str()) {
        Ok(f)
    } else {
        Err(CliError::usage(format!("unknown format `{f}`, expected one of {}", allowed.join(", "))))
    }
}

fn out_path(ctx: &Context, flag: Option<std::path::PathBuf>) -> Option<std::path::PathBuf> {
    flag.or_else(|| ctx.config.get("out").map(Into::into))
}

pub fn analyze(ctx: &Context, a: AnalyzeArgs) -> Result<(), CliError> {
    let g = build_group(&ctx.config.pick(a.group, "group", None)?)?;
    let k: u64 = ctx.config.pick(a.k, "k", None)?;
    let format = format_of(ctx, a.format, "text", &["json", "text", "csv"])?;
    let r = analyze_pair(&g, k)?;
    let text = match format.as_str() {
        "json" => with_meta(ctx, &r),
        "csv" => report::to_csv(&r),
        _ => {
            let mut t = report::to_text(&r);
            text_meta(ctx, &mut t);
            t
        }
    };
    emit(out_path(ctx, a.out).as_deref(), &text)
}

pub fn export(ctx: &Context, a: ExportArgs) -> Result<(), CliError> {
    let g = build_group(&ctx.config.pick(a.group, "group", None)?)?;
    let k: u64 = ctx.config.pick(a.k, "k", None)?;
    let format = format_of(ctx, a.format, "dot", &["dot", "json"])?;
    let gr = KPowerGraph::build(&g, k)?;
    let text = match format.as_str() {
        "json" => graph_export::to_json(&g, &gr),
        _ => graph_export::to_dot(&g, &gr),
    };
    emit(out_path(ctx, a.out).as_deref(), &text)
}

/// Resolved group list and exponent range shared by `verify` and `sweep`.
struct Corpus {
    label: String,
    groups: Vec<GroupSpec>,
    ks: KRange,
    k_text: String,
}

fn corpus(ctx: &Context, f: FamilyArgs) -> Result<Corpus, CliError> {
    let k_text = if f.k_all {
        "all".to_string()
    } else {
        ctx.config.pick(f.k, "k", Some("all".to_string()))?
    };
    let ks: KRange = k_text.parse()?;
    let explicit = if f.group.is_empty() {
        ctx.config
            .get("group")
            .map(|s| s.split(',').map(|p| p.trim().to_string()).collect())
            .unwrap_or_default()
    } else {
        f.group
    };
    if !explicit.is_empty() && f.family.is_none() {
        let groups = explicit
            .iter()
            .map(|s| s.parse::<GroupSpec>().and_then(|g| g.order().map(|_| g)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Corpus {
            label: explicit.join(","),
            groups,
            ks,
            k_text,
        });
    }
    let name: String = ctx.config.pick(f.family, "family", None)?;
    let family: Family = name.parse()?;
    let min: u64 = ctx.config.pick(f.min_n, "min-n", Some(1))?;
    let max: u64 = ctx.config.pick(f.max_n, "max-n", None)?;
    let factors: usize = ctx.config.pick(f.factors, "factors", Some(3))?;
    if min > max {
        return Err(CliError::usage(format!("empty parameter range {min}..={max}")));
    }
    let groups = family_specs(family, min, max, factors);
    if groups.is_empty() {
        return Err(CliError::usage(format!("no {name} groups with parameter in {min}..={max}")));
    }
    Ok(Corpus {
        label: format!("{name} {min}..={max}"),
        groups,
        ks,
        k_text,
    })
}

fn theorems(ctx: &Context, flag: Vec<String>) -> Result<Vec<Theorem>, CliError> {
    let names: Vec<String> = if flag.is_empty() {
        ctx.config
            .get("theorem")
            .unwrap_or_else(|| "all".into())
            .split(',')
            .map(|s| s.trim().to_string())
            .collect()
    } else {
        flag
    };
    let mut out = vec![];
    for n in names.iter().filter(|n| !n.is_empty()) {
        if n == "all" {
            out.extend(Theorem::ALL);
        } else {
            out.push(n.parse()?);
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(CliError::usage("no theorems selected"));
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    corpus: &'a str,
    k: &'a str,
    groups: usize,
    passed: bool,
    #[serde(flatten)]
    summary: &'a Summary,
}

pub fn verify(ctx: &Context, a: VerifyArgs) -> Result<(), CliError> {
    let c = corpus(ctx, a.family)?;
    let selected = theorems(ctx, a.theorem)?;
    let format = format_of(ctx, a.format, "text", &["text", "json"])?;

    let parts = c
        .groups
        .par_iter()
        .map(|spec| {
            let g = FiniteGroup::build(spec.clone())?;
            verify_group(&g, &selected, c.ks)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = Summary::default();
    for p in parts {
        summary.merge(p);
    }
    let passed = summary.all_passed();

    let text = if format == "json" {
        with_meta(
            ctx,
            VerifyDocument {
                corpus: &c.label,
                k: &c.k_text,
                groups: c.groups.len(),
                passed,
                summary: &summary,
            },
        )
    } else {
        let mut t = String::new();
        let _ = writeln!(t, "corpus: {}", c.label);
        let _ = writeln!(t, "k: {}", c.k_text);
        let _ = writeln!(t, "groups: {}", c.groups.len());
        let _ = writeln!(t, "cells: {}", summary.cells);
        for (th, tally) in &summary.theorems {
            let _ = writeln!(
                t,
                "{th}: passed {}, failed {}, skipped {}",
                tally.passed, tally.failed, tally.skipped
            );
            if let Some(ce) = &tally.first_counterexample {
                let _ = writeln!(t, "  first counterexample: {ce}");
            }
        }
        text_meta(ctx, &mut t);
        let _ = writeln!(t, "RESULT {}", if passed { "PASS" } else { "FAIL" });
        t
    };
    emit(out_path(ctx, a.out).as_deref(), &text)?;
    if passed {
        Ok(())
    } else {
        let failing: Vec<String> = summary
            .theorems
            .iter()
            .filter(|(_, t)| t.failed > 0)
            .map(|(th, _)| th.to_string())
            .collect();
        Err(CliError::counterexample(format!("counterexamples found for {}", failing.join(", "))))
    }
}

#[derive(Serialize)]
struct ChairDocument {
    n: u64,
    minimal_k: u64,
    /// Chair of person `p` at index `p - 1`.
    seating: Vec<usize>,
    rejected_whistles: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<String>>,
}

pub fn chair(ctx: &Context, a: ChairArgs) -> Result<(), CliError> {
    let n: u64 = ctx.config.pick(a.n, "n", None)?;
    let trace = a.trace || ctx.config.flag("trace")?;
    let format = format_of(ctx, a.format, "text", &["text", "json"])?;
    let cfg = ChairConfig::new(n)?;
    let sol = solve_chairs(cfg)?;
    let seating: Vec<usize> = (1..=n).map(|p| sol.seating[(p % n) as usize]).collect();
    let rejected: Vec<u64> = sol.collision_trace.iter().map(|c| c.whistle).collect();
    let trace_text = trace.then(|| render_trace(cfg, &sol));

    let text = if format == "json" {
        with_meta(
            ctx,
            ChairDocument {
                n,
                minimal_k: sol.minimal_k,
                seating,
                rejected_whistles: rejected,
                trace: trace_text.map(|t| t.lines().map(String::from).collect()),
            },
        )
    } else {
        let mut t = String::new();
        let _ = writeln!(t, "n: {n}");
        let _ = writeln!(t, "minimal_k: {}", sol.minimal_k);
        let seats: Vec<String> = seating
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{}->{s}", i + 1))
            .collect();
        let _ = writeln!(t, "seating: {}", seats.join(" "));
        let rej: Vec<String> = rejected.iter().map(u64::to_string).collect();
        let _ = writeln!(t, "rejected_whistles: {}", rej.join(" "));
        text_meta(ctx, &mut t);
        if let Some(tr) = trace_text {
            t.push_str(&tr);
        }
        t
    };
    emit(out_path(ctx, a.out).as_deref(), &text)
}

const SWEEP_PARAMS: [&str; 12] = [
    "edges",
    "components",
    "fixed-points",
    "max-degree",
    "diameter",
    "clique",
    "chromatic",
    "connected",
    "forest",
    "star",
    "empty",
    "perfect",
];

fn sweep_value(param: &str, g: &FiniteGroup, gr: &KPowerGraph) -> String {
    match param {
        "edges" => gr.edge_count().to_string(),
        "components" => gr.components().len().to_string(),
        "fixed-points" => gr.fixed_points().len().to_string(),
        "max-degree" => gr.degree_sequence().into_iter().max().unwrap_or(0).to_string(),
        "diameter" => gr.diameter().map(|d| d.to_string()).unwrap_or_default(),
        "clique" => clique_number(gr, g).omega.to_string(),
        "chromatic" => chromatic(gr).chi.to_string(),
        "connected" => gr.is_connected().to_string(),
        "forest" => (!gr.has_cycle()).to_string(),
        "star" => is_star_graph(gr).to_string(),
        "empty" => (gr.edge_count() == 0).to_string(),
        "perfect" => is_perfect(gr).to_string(),
        _ => unreachable!("parameter validated"),
    }
}

/// One row per group, one column per exponent; blank past a group's range.
pub fn sweep(ctx: &Context, a: SweepArgs) -> Result<(), CliError> {
    let c = corpus(ctx, a.family)?;
    let param: String = ctx.config.pick(a.param, "param", None)?;
    if !SWEEP_PARAMS.contains(&param.as_str()) {
        return Err(CliError::usage(format!(
            "unknown parameter `{param}`, expected one of {}",
            SWEEP_PARAMS.join(", ")
        )));
    }
    let orders = c
        .groups
        .iter()
        .map(|s| s.order().map(|o| o as usize))
        .collect::<Result<Vec<_>, _>>()?;
    let max_order = orders.iter().copied().max().unwrap_or(1);
    let columns: Vec<u64> = c.ks.exponents(max_order).collect();

    let rows = c
        .groups
        .par_iter()
        .map(|spec| {
            let g = FiniteGroup::build(spec.clone())?;
            let valid = c.ks.exponents(g.order());
            columns
                .iter()
                .map(|&k| {
                    if valid.contains(&k) {
                        KPowerGraph::build(&g, k).map(|gr| sweep_value(&param, &g, &gr))
                    } else {
                        Ok(String::new())
                    }
                })
                .collect::<Result<Vec<_>, _>>()
                .map(|cells| (spec.to_string(), cells))
        })
        .collect::<Result<Vec<_>, kpower::Error>>()?;

    let mut text = String::from("group");
    for k in &columns {
        let _ = write!(text, ",k={k}");
    }
    text.push('\n');
    for (name, cells) in rows {
        text.push_str(&name);
        for cell in cells {
            text.push(',');
            text.push_str(&cell);
        }
        text.push('\n');
    }
    emit(out_path(ctx, a.out).as_deref(), &text)
}
