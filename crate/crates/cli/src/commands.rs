use std::io::{self, Read, Write};

use maxai::harness::{verify_exhaustive, verify_sample, Mismatch};
use maxai::{
    ai_exact, classify as classify_fn, enumerate_all, partition, weight_catalog, Annihilator,
    RecordRow, SanfVec, Side, SymFn,
};
use serde_json::json;

use crate::{CliError, Format};

type Out<'a> = &'a mut dyn Write;

fn read_arg(value: &str) -> Result<String, CliError> {
    if value != "-" {
        return Ok(value.trim().to_owned());
    }
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf)?;
    Ok(buf.trim().to_owned())
}

fn parse_svv(value: &str) -> Result<SymFn, CliError> {
    Ok(read_arg(value)?.parse::<SymFn>()?)
}

fn require_even(n: usize) -> Result<usize, CliError> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "n must be even and positive, got {n}"
        )));
    }
    Ok(n / 2)
}

fn write_json(out: Out, value: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv(out: Out, rows: &[RecordRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["n", "case", "p0", "params", "triple", "svv", "weight"])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn enumerate(
    out: Out,
    ns: impl Iterator<Item = usize>,
    format: Format,
) -> Result<(), CliError> {
    let mut rows = Vec::new();
    let mut blocks = Vec::new();
    for n in ns {
        require_even(n)?;
        let block: Vec<RecordRow> = enumerate_all(n)?.iter().map(RecordRow::from).collect();
        rows.extend(block.iter().cloned());
        blocks.push((n, block));
    }
    match format {
        Format::Csv => write_csv(out, &rows),
        Format::Json => write_json(out, &rows),
        Format::Text => {
            for (idx, (n, block)) in blocks.iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                write_table(out, *n, block)?;
            }
            Ok(())
        }
    }
}

fn write_table(out: Out, n: usize, rows: &[RecordRow]) -> Result<(), CliError> {
    let svv_head = format!("SVV: v_f(0)...v_f({n})");
    let svv_w = svv_head.len().max(n + 1);
    let params_w = rows
        .iter()
        .map(|r| r.params.len())
        .max()
        .unwrap_or(0)
        .max(6);
    writeln!(out, "# n = {n}, {} functions", rows.len())?;
    writeln!(
        out,
        "{:<5} {:<6} {:<3} {:<6} {:<params_w$} {:<svv_w$} weight",
        "No.", "case", "p0", "triple", "params", svv_head
    )?;
    for (i, r) in rows.iter().enumerate() {
        let p0 = r.p0.map_or("-".to_owned(), |p| p.to_string());
        let triple = r.triple.map_or("-".to_owned(), |t| t.to_string());
        writeln!(
            out,
            "{:<5} {:<6} {:<3} {:<6} {:<params_w$} {:<svv_w$} {}",
            i + 1,
            r.case.to_string(),
            p0,
            triple,
            r.params,
            r.svv,
            r.weight
        )?;
    }
    Ok(())
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Function => "f",
        Side::Complement => "f+1",
    }
}

fn monomial(n: usize, mask: u32) -> String {
    if mask == 0 {
        return "1".to_owned();
    }
    (0..n)
        .filter(|&i| (mask >> i) & 1 == 1)
        .map(|i| format!("x{}", i + 1))
        .collect()
}

fn polynomial(g: &Annihilator) -> String {
    g.monomials
        .iter()
        .map(|&m| monomial(g.n, m))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn ai(out: Out, svv: &str, format: Format) -> Result<(), CliError> {
    let f = parse_svv(svv)?;
    let report = ai_exact(&f.to_truth_table()?)?;
    let witness = report.witness.as_ref().map(polynomial).unwrap_or_default();
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "svv": f.to_string(),
                "n": f.n(),
                "ai": report.ai,
                "witness_side": side_name(report.witness_side),
                "witness": witness,
            }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["svv", "n", "ai", "witness_side", "witness"])?;
            w.write_record([
                f.to_string(),
                f.n().to_string(),
                report.ai.to_string(),
                side_name(report.witness_side).to_owned(),
                witness,
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "AI = {}", report.ai)?;
            writeln!(out, "witness side: {}", side_name(report.witness_side))?;
            writeln!(out, "witness: {witness}")?;
            Ok(())
        }
    }
}

pub fn classify(out: Out, svv: &str, format: Format) -> Result<(), CliError> {
    let f = parse_svv(svv)?;
    let row = classify_fn(&f)?.as_ref().map(RecordRow::from);
    match format {
        Format::Json => write_json(out, &row),
        Format::Csv => write_csv(out, row.as_slice()),
        Format::Text => {
            match row {
                None => writeln!(out, "not max-AI")?,
                Some(r) => {
                    write!(out, "{}", r.case)?;
                    if let (Some(p0), Some(t)) = (r.p0, r.triple) {
                        write!(out, " p0={p0} triple={t}")?;
                    }
                    writeln!(out, " params={} weight={}", r.params, r.weight)?;
                }
            }
            Ok(())
        }
    }
}

pub fn convert(out: Out, svv: Option<String>, sanf: Option<String>) -> Result<(), CliError> {
    let converted = match (svv, sanf) {
        (Some(s), _) => parse_svv(&s)?.to_sanf().to_string(),
        (None, Some(s)) => read_arg(&s)?.parse::<SanfVec>()?.to_svv().to_string(),
        (None, None) => return Err(CliError::Usage("one of --svv or --sanf is required".into())),
    };
    writeln!(out, "{converted}")?;
    Ok(())
}

fn braces(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn sets(out: Out, n: usize, format: Format) -> Result<(), CliError> {
    let k = require_even(n)?;
    let fam = partition(k)?;
    match format {
        Format::Json => write_json(
            out,
            &json!({ "n": n, "k": k, "sets": fam.sets, "bset": fam.bset }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["set", "members"])?;
            let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            for (i, s) in fam.sets.iter().enumerate() {
                w.write_record([format!("A_{i}"), join(s)])?;
            }
            w.write_record(["B".to_owned(), join(&fam.bset)])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "n = {n}, k = {k}")?;
            for (i, s) in fam.sets.iter().enumerate() {
                writeln!(out, "A_{i} = {}", braces(s))?;
            }
            writeln!(out, "B = {}", braces(&fam.bset))?;
            Ok(())
        }
    }
}

#[derive(Clone, Copy)]
pub enum Mode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

struct Outcome {
    n: usize,
    passed: bool,
    summary: String,
    counterexample: Option<Mismatch>,
    report: serde_json::Value,
}

fn verify_one(n: usize, mode: Mode, fault: Option<usize>) -> Result<Outcome, CliError> {
    let k = require_even(n)?;
    let mut candidates: Vec<SymFn> = enumerate_all(n)?.into_iter().map(|r| r.f).collect();
    if let Some(pos) = fault {
        if pos > n {
            return Err(CliError::Usage(format!(
                "fault position {pos} exceeds n = {n}"
            )));
        }
        candidates[0].flip(pos);
    }
    Ok(match mode {
        Mode::Exhaustive => {
            let r = verify_exhaustive(n, &candidates)?;
            let verdict = if r.sets_equal() {
                "sets equal".to_owned()
            } else {
                format!("{} candidates, sets differ", r.candidates)
            };
            Outcome {
                n,
                passed: r.sets_equal(),
                summary: format!("{}/{} max-AI, {verdict}", r.oracle_max, r.total),
                counterexample: r.first_counterexample().cloned(),
                report: serde_json::to_value(&r)?,
            }
        }
        Mode::Sample { count, seed } => {
            let r = verify_sample(n, &candidates, count, seed)?;
            let good = r.candidates - r.candidate_failures.len();
            Outcome {
                n,
                passed: r.passed(),
                summary: format!(
                    "{good}/{} enumerated at AI {k}, {}/{count} sampled at AI {k} (seed {seed}), {}",
                    r.candidates,
                    r.sample_failures.len(),
                    if r.passed() { "all pass" } else { "failed" }
                ),
                counterexample: r.first_counterexample().cloned(),
                report: serde_json::to_value(&r)?,
            }
        }
    })
}

pub fn verify(
    out: Out,
    ns: impl Iterator<Item = usize>,
    mode: Mode,
    fault: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let outcomes = ns
        .map(|n| verify_one(n, mode, fault))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => {
            let reports: Vec<&serde_json::Value> = outcomes.iter().map(|o| &o.report).collect();
            write_json(out, &reports)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "n",
                "passed",
                "summary",
                "counterexample",
                "counterexample_ai",
            ])?;
            for o in &outcomes {
                let (svv, ai) = o
                    .counterexample
                    .as_ref()
                    .map_or((String::new(), String::new()), |m| {
                        (m.svv.clone(), m.ai.to_string())
                    });
                w.write_record([
                    o.n.to_string(),
                    o.passed.to_string(),
                    o.summary.clone(),
                    svv,
                    ai,
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for o in &outcomes {
                writeln!(out, "n = {}: {}", o.n, o.summary)?;
                if let Some(m) = &o.counterexample {
                    writeln!(out, "  first counterexample: {} (AI {})", m.svv, m.ai)?;
                }
            }
        }
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

pub fn weights(out: Out, n: usize, format: Format) -> Result<(), CliError> {
    require_even(n)?;
    let catalog = weight_catalog(n)?;
    let entries: Vec<(String, Vec<String>)> = catalog
        .entries
        .iter()
        .map(|(w, src)| (w.to_string(), src.iter().map(ToString::to_string).collect()))
        .collect();
    match format {
        Format::Json => {
            let list: Vec<_> = entries
                .iter()
                .map(|(w, s)| json!({ "weight": w, "sources": s }))
                .collect();
            write_json(out, &json!({ "n": n, "weights": list }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["weight", "sources"])?;
            for (weight, src) in &entries {
                w.write_record([weight.clone(), src.join(";")])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            for (weight, src) in &entries {
                writeln!(out, "{weight}  {}", src.join(", "))?;
            }
            Ok(())
        }
    }
}
