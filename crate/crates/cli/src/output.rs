use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use qss_core::oracle::{RegionReport, Theorem};
use qss_core::report::{round12, ComplexValue, RunReport};
use qss_core::resource::GParams;
use serde::Serialize;

pub fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn finish(w: csv::Writer<Vec<u8>>) -> anyhow::Result<String> {
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn run_csv(reports: &[RunReport]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "flow",
        "bell",
        "first_sender",
        "first_bit",
        "second_sender",
        "second_bit",
        "cbits",
        "probability",
        "status",
        "correction_source",
        "w_i",
        "w_x",
        "w_y",
        "w_z",
        "fidelity",
    ])?;
    for r in reports {
        for b in &r.branches {
            let p = b.correction;
            w.write_record([
                r.flow.name().to_string(),
                b.bell.symbol().to_string(),
                name(&b.bits[0].sender),
                b.bits[0].bit.symbol().to_string(),
                name(&b.bits[1].sender),
                b.bits[1].bit.symbol().to_string(),
                format!("{}{}", b.bits[0].cbit, b.bits[1].cbit),
                b.probability.to_string(),
                name(&b.status),
                opt(b.correction_source.map(|s| name(&s))),
                opt(p.map(|p| p.w_i)),
                opt(p.map(|p| p.w_x)),
                opt(p.map(|p| p.w_y)),
                opt(p.map(|p| p.w_z)),
                opt(b.fidelity),
            ])?;
        }
    }
    finish(w)
}

fn param_fields(p: &GParams) -> Vec<String> {
    p.as_array()
        .iter()
        .flat_map(|c| {
            let v = ComplexValue::from(*c);
            [v.re.to_string(), v.im.to_string()]
        })
        .collect()
}

const PARAM_COLUMNS: [&str; 8] = [
    "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "d_re", "d_im",
];

/// Points where both the predicate and all-branch solvability hold.
pub fn points_csv(report: &RegionReport) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["index", "cases"];
    header.extend(PARAM_COLUMNS);
    w.write_record(&header)?;
    for p in report.points.iter().filter(|p| p.predicate && p.solvable) {
        let cases: Vec<String> = p.cases.iter().map(u8::to_string).collect();
        let mut row = vec![p.index.to_string(), cases.join(";")];
        row.extend(param_fields(&p.params));
        w.write_record(&row)?;
    }
    finish(w)
}

pub fn scan_csv(theorem: Theorem, case: u8, rows: &[(GParams, bool)]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["theorem", "case", "index"];
    header.extend(PARAM_COLUMNS);
    header.extend(["norm_sqr", "admissible"]);
    w.write_record(&header)?;
    let t = match theorem {
        Theorem::One => "1",
        Theorem::Two => "2",
    };
    for (i, (p, ok)) in rows.iter().enumerate() {
        let mut row = vec![t.to_string(), case.to_string(), i.to_string()];
        row.extend(param_fields(p));
        row.push(round12(p.norm_sqr()).to_string());
        row.push(ok.to_string());
        w.write_record(&row)?;
    }
    finish(w)
}
