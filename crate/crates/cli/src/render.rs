//! JSON, CSV and SVG writers. Every writer is a pure function of its input.

use mspectra::boolfun::format_bits;
use mspectra::{ForrelationValue, MeasurementDistribution, SamplingCurves, Spectrum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

// Folds -0.0 into 0.0 so equal values print identically.
fn clean(x: f64) -> f64 {
    x + 0.0
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    json!({
        "n": s.n,
        "m": s.m.get(),
        "kind": s.kind.as_str(),
        "normalization": s.normalization,
        "values": s.values.iter().map(|z| [clean(z.re), clean(z.im)]).collect::<Vec<_>>(),
    })
}

pub fn forrelation_json(v: &ForrelationValue) -> Value {
    json!({ "m": v.m.get(), "fold": v.fold, "re": clean(v.value.re), "im": clean(v.value.im) })
}

pub fn distribution_json(d: &MeasurementDistribution) -> Value {
    serde_json::to_value(d).expect("plain data")
}

pub fn to_json_bytes(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("plain data");
    out.push(b'\n');
    out
}

fn csv_bytes<R: Serialize>(header: Option<&[&str]>, rows: impl IntoIterator<Item = R>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(header.is_none()).from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Usage(format!("csv encoding failed: {e}"));
    if let Some(h) = header {
        w.write_record(h).map_err(fail)?;
    }
    for r in rows {
        w.serialize(r).map_err(fail)?;
    }
    w.into_inner().map_err(|e| CliError::Usage(format!("csv encoding failed: {e}")))
}

pub fn spectrum_csv(s: &Spectrum) -> Result<Vec<u8>, CliError> {
    let rows = s.values.iter().enumerate().map(|(w, z)| (w, format_bits(w, s.n), clean(z.re), clean(z.im)));
    csv_bytes(Some(&["index", "bits", "re", "im"]), rows)
}

pub fn distribution_csv(d: &MeasurementDistribution) -> Result<Vec<u8>, CliError> {
    csv_bytes(Some(&["outcome", "probability"]), d.to_map())
}

pub fn curves_csv(rows: &[SamplingCurves]) -> Result<Vec<u8>, CliError> {
    csv_bytes(None, rows)
}

const SERIES: [(&str, &str); 5] = [
    ("dj_once", "#1f77b4"),
    ("dj_twice", "#ff7f0e"),
    ("amp_amp_paper", "#2ca02c"),
    ("amp_amp_standard", "#9467bd"),
    ("forr_3q", "#d62728"),
];

fn series_value(c: &SamplingCurves, name: &str) -> f64 {
    match name {
        "dj_once" => c.dj_once,
        "dj_twice" => c.dj_twice,
        "amp_amp_paper" => c.amp_amp_paper,
        "amp_amp_standard" => c.amp_amp_standard,
        _ => c.forr_3q,
    }
}

/// Line plot of success probability against `p`.
pub fn curves_svg(rows: &[SamplingCurves]) -> String {
    let (w, h, pad) = (640.0, 420.0, 48.0);
    let x = |p: f64| pad + p * (w - 2.0 * pad);
    // Curves may dip below zero (sin(3 asin p) near p = 1).
    let (lo, hi) = (-1.0, 1.0);
    let y = |v: f64| h - pad - (v - lo) / (hi - lo) * (h - 2.0 * pad);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    );
    s += &format!(
        "<g stroke=\"#444\" stroke-width=\"1\">\
         <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>\
         <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/></g>\n",
        x(0.0), y(0.0), x(1.0), y(0.0), x(0.0), y(lo), x(0.0), y(hi)
    );
    for t in [-1.0, -0.5, 0.5, 1.0] {
        s += &format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{t}</text>\n",
            x(0.0) - 6.0,
            y(t) + 4.0
        );
    }
    for t in [0.0, 0.5, 1.0] {
        s += &format!("<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{t}</text>\n", x(t), y(0.0) + 16.0);
    }
    s += &format!("<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">p</text>\n", x(0.5), h - 8.0);
    for (i, (name, color)) in SERIES.iter().enumerate() {
        let pts: Vec<String> = rows.iter().map(|c| format!("{:.2},{:.2}", x(c.p), y(series_value(c, name)))).collect();
        s += &format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            pts.join(" ")
        );
        let ly = pad + 14.0 * i as f64;
        s += &format!(
            "<line x1=\"{:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\
             <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\">{name}</text>\n",
            x(0.02),
            x(0.07),
            x(0.08),
            ly + 4.0
        );
    }
    s += "</svg>\n";
    s
}
