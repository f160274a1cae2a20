use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader};

use anyhow::{anyhow, bail, Context, Result};
use fext_core::enumerate::{connected_graphs, dense_connected_graphs};
use fext_core::graph::MAX_ORDER;
use fext_core::harness::grid::Expected;
use fext_core::harness::sweep::{sweep as run_sweep, SweepEntry, SweepReport};
use fext_core::harness::theorem::TheoremSpec;
use fext_core::harness::{lemma_grid, sharpness, GridBounds, GridLemma, TheoremId};
use fext_core::matching::{is_fext_definitional, is_fext_lemma, Verdict, Witness};
use fext_core::spectral::{
    largest_real_root, spectral_report, Family, FamilyParams, Instance, SpectralReport,
};
use fext_core::{emit_graph6, extremal_graph, parse_graph6, ExtremalParams, Graph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::output::{num, to_value, Outcome, Summary};
use crate::KRange;

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(
            File::open(path).with_context(|| format!("opening {path}"))?,
        ))
    })
}

fn corpus_name(path: &str) -> &str {
    if path == "-" {
        "stdin"
    } else {
        path
    }
}

/// Non-blank, non-comment records with their 1-based line numbers.
fn records(reader: impl BufRead) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            out.push((i + 1, t.to_string()));
        }
    }
    Ok(out)
}

fn describe_verdict(g: &Graph, v: &Verdict) -> String {
    match v.witness() {
        Some(Witness::Matching(m)) => {
            let edges: Vec<String> = m.edges().iter().map(|(u, w)| format!("{u}-{w}")).collect();
            format!(
                "not-extendable  k-matching {{{}}} extends to no fractional perfect matching",
                edges.join(", ")
            )
        }
        Some(Witness::Set(s)) => format!(
            "not-extendable  S = {:?}  |S| = {}  i(G - S) = {}",
            s.to_vec(),
            s.len(),
            g.isolated_after_removing(s.0)
        ),
        None => match v {
            Verdict::OutOfDomain { order, k } => {
                format!("out-of-domain  order {order} < 2k + 2 = {}", 2 * k + 2)
            }
            other => other.reason().to_string(),
        },
    }
}

fn spectral_text(r: &SpectralReport) -> String {
    let opt = |x: Option<f64>| x.map_or("-".to_string(), num);
    format!(
        "n {}  e {}  min degree {}  connected {}  wiener {}\nrho {}  q {}  mu {}\n",
        r.n,
        r.e,
        r.min_degree,
        r.connected,
        r.wiener.map_or("-".to_string(), |w| w.to_string()),
        num(r.rho),
        num(r.q),
        opt(r.mu)
    )
}

pub fn check(graph6: &str, k: usize, tol: f64) -> Result<Outcome> {
    let record = if graph6 == "-" {
        records(io::stdin().lock())?
            .into_iter()
            .next()
            .map(|(_, r)| r)
            .ok_or_else(|| anyhow!("no graph6 record on stdin"))?
    } else {
        graph6.to_string()
    };
    let g = parse_graph6(record.as_bytes()).with_context(|| format!("parsing {record:?}"))?;
    let spectral = spectral_report(&g, tol)?;
    let lemma = is_fext_lemma(&g, k)?;
    let definitional = is_fext_definitional(&g, k);
    if let Ok(d) = &definitional {
        if d.reason() != lemma.reason() {
            bail!(
                "oracles disagree on {record}: definitional {}, lemma {}",
                d.reason(),
                lemma.reason()
            );
        }
    }
    let exit = match lemma {
        Verdict::Extendable => 0,
        Verdict::NotExtendable { .. } | Verdict::NoKMatching => 1,
        Verdict::OutOfDomain { .. } => 2,
    };

    let mut text = format!("graph6 {record}  k {k}\n{}", spectral_text(&spectral));
    let def_text = match &definitional {
        Ok(d) => describe_verdict(&g, d),
        Err(e) => format!("error: {e}"),
    };
    writeln!(text, "definitional  {def_text}")?;
    writeln!(text, "lemma         {}", describe_verdict(&g, &lemma))?;

    let witness = lemma.witness_set();
    let result = json!({
        "graph6": record,
        "k": k,
        "spectral": to_value(&spectral),
        "definitional": match &definitional {
            Ok(d) => to_value(d),
            Err(e) => json!({ "error": e.to_string() }),
        },
        "lemma": to_value(&lemma),
        "witness_size": witness.map(|s| s.len()),
        "isolated_after_witness": witness.map(|s| g.isolated_after_removing(s.0)),
    });
    let summary = Summary {
        scanned: 1,
        confirmed: usize::from(lemma.is_extendable()),
        ..Summary::default()
    }
    .with("verdict", lemma.reason());
    Ok(Outcome {
        results: vec![result],
        summary,
        text,
        exit,
    })
}

#[derive(Serialize)]
struct Poly {
    family: Family,
    matrix: fext_core::spectral::MatrixKind,
    coefficients: Vec<String>,
    largest_root: f64,
    matches_built_quotient: bool,
}

fn poly(inst: &Instance, tol: f64) -> Result<Poly> {
    let cubic = inst.cubic();
    Ok(Poly {
        family: inst.family,
        matrix: inst.family.kind(),
        coefficients: cubic.to_string().split(", ").map(str::to_string).collect(),
        largest_root: largest_real_root(&cubic, tol),
        matches_built_quotient: inst.identity_check()?,
    })
}

pub fn extremal(
    n: usize,
    k: usize,
    s: usize,
    theorem: Option<TheoremId>,
    tol: f64,
) -> Result<Outcome> {
    let p = ExtremalParams::new(n, k, s)?;
    let g = extremal_graph(&p)?;
    let graph6 = emit_graph6(&g).ok();
    let spectral = spectral_report(&g, tol)?;
    let mut polys = Vec::new();
    for family in Family::ALL {
        if family == Family::PhiB3Case2 || (family == Family::F2 && s != 2 * k) {
            continue;
        }
        if let Ok(inst) = Instance::new(family, FamilyParams { n, k, third: s }) {
            polys.push(poly(&inst, tol)?);
        }
    }
    let sharp = theorem
        .map(|id| sharpness(&p, &TheoremSpec::new(id, k, tol)))
        .transpose()?;

    let mut text = String::new();
    if let Some(g6) = &graph6 {
        writeln!(text, "{g6}")?;
    }
    writeln!(
        text,
        "n {n}  k {k}  s {s}  n1 {}  t {}",
        p.inner(),
        p.independent()
    )?;
    writeln!(text, "e {}", g.size())?;
    writeln!(
        text,
        "rho {}  q {}  mu {}",
        num(spectral.rho),
        num(spectral.q),
        spectral.mu.map_or("-".into(), num)
    )?;
    for pl in &polys {
        writeln!(
            text,
            "{:<14}{}  root {}",
            pl.family.name(),
            pl.coefficients.join(", "),
            num(pl.largest_root)
        )?;
    }
    if let Some(r) = &sharp {
        writeln!(
            text,
            "{}: value {} threshold {} meets bound {} certified {}",
            r.theorem,
            num(r.value),
            num(r.threshold),
            r.meets_bound,
            r.certified
        )?;
    }

    let result = json!({
        "params": { "n": n, "k": k, "s": s, "n1": p.inner(), "t": p.independent() },
        "graph6": graph6,
        "e": g.size(),
        "spectral": to_value(&spectral),
        "polynomials": to_value(&polys),
        "sharpness": sharp.as_ref().map(to_value),
    });
    let certified = sharp.as_ref().is_some_and(|r| r.certified);
    let exit = if sharp.as_ref().is_none_or(|r| r.certified) {
        0
    } else {
        1
    };
    let summary = Summary {
        scanned: 1,
        confirmed: usize::from(certified),
        ..Summary::default()
    };
    Ok(Outcome {
        results: vec![result],
        summary,
        text,
        exit,
    })
}

fn entry_line(e: &SweepEntry) -> String {
    let v = &e.verdict;
    let opt = |x: Option<f64>| x.map_or("-".to_string(), num);
    let oracle = v
        .oracle
        .as_ref()
        .map_or("-".to_string(), |o| match o.witness_set() {
            Some(s) => format!("{} S = {:?}", o.reason(), s.to_vec()),
            None => o.reason().to_string(),
        });
    format!(
        "  line {} {}  n {} e {} min degree {}  value {} threshold {}  {}",
        e.line,
        e.graph6,
        v.n,
        v.e,
        v.min_degree,
        opt(v.value),
        opt(v.threshold),
        oracle
    )
}

fn sweep_text(r: &SweepReport) -> Result<String> {
    let mut t = String::new();
    writeln!(
        t,
        "theorem {}  k {}  corpus {}",
        r.theorem.id, r.theorem.k, r.corpus
    )?;
    writeln!(
        t,
        "scanned {}  hypotheses met {}  bound met {}  confirmed {}  equality cases {}  counterexamples {}  errors {}",
        r.scanned,
        r.hypotheses_met,
        r.bound_met,
        r.confirmed,
        r.equality_cases.len(),
        r.counterexamples.len(),
        r.errors.len()
    )?;
    for (label, list) in [
        ("equality cases", &r.equality_cases),
        ("COUNTEREXAMPLES", &r.counterexamples),
        ("embedding failures", &r.embedding_failures),
    ] {
        if !list.is_empty() {
            writeln!(t, "{label}:")?;
            for e in list {
                writeln!(t, "{}", entry_line(e))?;
            }
        }
    }
    for issue in &r.errors {
        writeln!(t, "  error at line {}: {}", issue.line, issue.message)?;
    }
    Ok(t)
}

pub fn sweep(input: &str, theorem: TheoremId, k: usize, tol: f64) -> Result<Outcome> {
    if k == 0 {
        bail!("k must be at least 1");
    }
    let spec = TheoremSpec::new(theorem, k, tol);
    let report = run_sweep(open_input(input)?, &spec, corpus_name(input))?;
    let exit =
        u8::from(!report.counterexamples.is_empty() || !report.embedding_failures.is_empty());
    let summary = Summary {
        scanned: report.scanned,
        confirmed: report.confirmed,
        equality_cases: report.equality_cases.len(),
        counterexamples: report.counterexamples.len(),
        ..Summary::default()
    }
    .with("hypotheses_met", report.hypotheses_met)
    .with("bound_met", report.bound_met)
    .with("embedding_failures", report.embedding_failures.len())
    .with("errors", &report.errors);
    Ok(Outcome {
        results: report.results.iter().map(to_value).collect(),
        summary,
        text: sweep_text(&report)?,
        exit,
    })
}

pub fn grid(
    lemma: GridLemma,
    k: KRange,
    n_max: usize,
    delta: Option<usize>,
    tol: f64,
) -> Result<Outcome> {
    if n_max > MAX_ORDER {
        bail!("-n {n_max} exceeds the largest supported order {MAX_ORDER}");
    }
    let bounds = GridBounds {
        k_min: k.min,
        k_max: k.max,
        n_max,
        delta_max: delta.unwrap_or(n_max / 6),
    };
    let r = lemma_grid(lemma, bounds, tol)?;
    let mut text = String::new();
    writeln!(
        text,
        "lemma {}  k {}..{}  n <= {}  delta <= {}",
        r.lemma, k.min, k.max, n_max, bounds.delta_max
    )?;
    writeln!(
        text,
        "points {}  strict {}  equality {}  violations {}  crosscheck failures {}  max crosscheck error {}",
        r.points.len(),
        r.strict_points,
        r.equality_points,
        r.violations.len(),
        r.crosscheck_failures.len(),
        num(r.max_crosscheck_error)
    )?;
    if let Some(g) = &r.gap_probe {
        writeln!(
            text,
            "gap probe 6δ <= n < 6.5δ: {}/{} strict",
            g.strict_holds, g.points
        )?;
    }
    if let Some(w) = &r.wiener {
        writeln!(
            text,
            "wiener chain: region {} checked, {} failures; probe {} checked, {} failures",
            w.region_checked,
            w.region_failures.len(),
            w.probe_checked,
            w.probe_failures.len()
        )?;
    }
    for p in r.violations.iter().chain(&r.crosscheck_failures) {
        writeln!(
            text,
            "  FAIL k {} n {} s {} delta {:?}: g1 {} other {} crosscheck {}",
            p.k,
            p.n,
            p.s,
            p.delta,
            num(p.g1),
            num(p.other),
            num(p.crosscheck_error)
        )?;
    }
    writeln!(text, "{}", if r.passed() { "passed" } else { "FAILED" })?;

    let summary = Summary {
        scanned: r.points.len(),
        confirmed: r
            .points
            .iter()
            .filter(|p| p.ok && p.expected == Expected::Strict)
            .count(),
        equality_cases: r
            .points
            .iter()
            .filter(|p| p.ok && p.expected == Expected::Equal)
            .count(),
        counterexamples: r.violations.len(),
        ..Summary::default()
    }
    .with("crosscheck_failures", r.crosscheck_failures.len())
    .with("max_crosscheck_error", r.max_crosscheck_error)
    .with("gap_probe", &r.gap_probe)
    .with("wiener", &r.wiener)
    .with("passed", r.passed());
    Ok(Outcome {
        results: r.points.iter().map(to_value).collect(),
        summary,
        text,
        exit: u8::from(!r.passed()),
    })
}

pub fn polys(
    family: Family,
    n: Option<usize>,
    k: usize,
    s: Option<usize>,
    delta: Option<usize>,
    tol: f64,
) -> Result<Outcome> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| anyhow!("{family} needs {flag}"));
    let inst = match family {
        Family::PhiB3Case2 => {
            let inst = Instance::phi_b3_case2(need(s, "-s")?, k, need(delta, "--delta")?)?;
            if let Some(n) = n {
                if n != inst.params.n {
                    bail!(
                        "{family} fixes n = 2s - 2k + 1 = {}, got -n {n}",
                        inst.params.n
                    );
                }
            }
            inst
        }
        _ => {
            let third = match family {
                Family::F2 => 0,
                Family::F3Q | Family::PhiB3Case1 => need(delta, "--delta")?,
                _ => need(s, "-s")?,
            };
            Instance::new(
                family,
                FamilyParams {
                    n: need(n, "-n")?,
                    k,
                    third,
                },
            )?
        }
    };
    let pl = poly(&inst, tol)?;
    let text = format!("{}\n", pl.coefficients.join(", "));
    let result = json!({
        "family": family,
        "n": inst.params.n,
        "k": k,
        "s": inst.extremal.s,
        "delta": delta,
        "partition_sizes": inst.partition_sizes,
        "polynomial": to_value(&pl),
    });
    let summary = Summary {
        scanned: 1,
        confirmed: usize::from(pl.matches_built_quotient),
        ..Summary::default()
    };
    Ok(Outcome {
        results: vec![result],
        summary,
        text,
        exit: 0,
    })
}

pub fn report(input: &str, k: Option<usize>, tol: f64) -> Result<Outcome> {
    let recs = records(open_input(input)?)?;
    let rows: Vec<Result<(serde_json::Value, String, bool), String>> = recs
        .par_iter()
        .map(|(line, rec)| {
            let g = parse_graph6(rec.as_bytes()).map_err(|e| format!("line {line}: {e}"))?;
            let r = spectral_report(&g, tol).map_err(|e| format!("line {line}: {e}"))?;
            let verdict = k
                .map(|k| is_fext_lemma(&g, k))
                .transpose()
                .map_err(|e| format!("line {line}: {e}"))?;
            let mut text = format!("{rec}\n{}", spectral_text(&r));
            if let Some(v) = &verdict {
                text.push_str(&format!("lemma  {}\n", describe_verdict(&g, v)));
            }
            let extendable = verdict.as_ref().is_some_and(Verdict::is_extendable);
            let mut value = json!({ "line": line, "graph6": rec });
            value["spectral"] = to_value(&r);
            if let Some(v) = &verdict {
                value["lemma"] = to_value(v);
            }
            Ok((value, text, extendable))
        })
        .collect();

    let mut results = Vec::new();
    let mut errors = Vec::new();
    let mut text = String::new();
    let mut confirmed = 0;
    for row in rows {
        match row {
            Ok((value, t, ext)) => {
                results.push(value);
                text.push_str(&t);
                confirmed += usize::from(ext);
            }
            Err(e) => {
                writeln!(text, "error: {e}")?;
                errors.push(e);
            }
        }
    }
    let exit = if errors.is_empty() { 0 } else { 2 };
    let summary = Summary {
        scanned: recs.len(),
        confirmed,
        ..Summary::default()
    }
    .with("errors", errors);
    Ok(Outcome {
        results,
        summary,
        text,
        exit,
    })
}

pub fn generate(n: usize, max_missing: Option<usize>) -> Result<Outcome> {
    if n > 62 {
        bail!("graph6 output supports at most 62 vertices");
    }
    if max_missing.is_none() && n > 10 {
        bail!("all connected graphs on {n} vertices is too many; pass --max-missing");
    }
    let graphs = match max_missing {
        Some(m) => dense_connected_graphs(n, m),
        None => connected_graphs(n),
    };
    let lines: Vec<String> = graphs
        .iter()
        .map(|g| emit_graph6(g).expect("order at most 62"))
        .collect();
    let mut text = String::new();
    for l in &lines {
        writeln!(text, "{l}")?;
    }
    let summary = Summary {
        scanned: lines.len(),
        ..Summary::default()
    };
    Ok(Outcome {
        results: lines.into_iter().map(|g| json!({ "graph6": g })).collect(),
        summary,
        text,
        exit: 0,
    })
}
