//! Rendering of command results as JSON lines, CSV or aligned text.

use anyhow::Result;
use qbch::channel_sim::{ChannelModel, ExhaustiveCount, RateEstimate};
use qbch::cyclotomic::{dual_zero_set, is_self_orthogonal_gf4, is_weakly_self_dual, orthogonal_zero_set_gf4, ZeroSet};
use qbch::quantum::QuantumCodeRecord;
use serde::Serialize;

use crate::config::Format;

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn opt(d: Option<usize>) -> String {
    d.map_or_else(String::new, |d| d.to_string())
}

fn json_lines<T: Serialize>(items: &[T]) -> Result<String> {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item)?);
        out.push('\n');
    }
    Ok(out)
}

fn csv_rows<T: Serialize>(header: &[&str], rows: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Left-aligned columns separated by two spaces.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

pub fn cosets(cosets: &[Vec<usize>], format: Format) -> Result<String> {
    #[derive(Serialize)]
    struct Row<'a> {
        leader: usize,
        size: usize,
        coset: &'a [usize],
    }
    let rows: Vec<Row> = cosets
        .iter()
        .map(|c| Row {
            leader: c[0],
            size: c.len(),
            coset: c,
        })
        .collect();
    match format {
        Format::Json => json_lines(&rows),
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat {
                leader: usize,
                size: usize,
                coset: String,
            }
            let flat: Vec<Flat> = rows
                .iter()
                .map(|r| Flat {
                    leader: r.leader,
                    size: r.size,
                    coset: join(r.coset, " "),
                })
                .collect();
            csv_rows(&["leader", "size", "coset"], &flat)
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.leader.to_string(),
                        r.size.to_string(),
                        format!("{{{}}}", join(r.coset, ", ")),
                    ]
                })
                .collect();
            Ok(aligned(&["leader", "size", "coset"], &cells))
        }
    }
}

pub fn duals(z: &ZeroSet, format: Format) -> Result<String> {
    #[derive(Serialize)]
    struct Report {
        n: usize,
        q: usize,
        zero_set: Vec<usize>,
        dual: Vec<usize>,
        weakly_self_dual: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        hermitian_dual: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        hermitian_self_orthogonal: Option<bool>,
    }
    let (hermitian_dual, hermitian_self_orthogonal) = if z.q == 4 {
        (
            Some(orthogonal_zero_set_gf4(z)?.residues),
            Some(is_self_orthogonal_gf4(z)?),
        )
    } else {
        (None, None)
    };
    let r = Report {
        n: z.n,
        q: z.q,
        zero_set: z.residues.clone(),
        dual: dual_zero_set(z).residues,
        weakly_self_dual: is_weakly_self_dual(z),
        hermitian_dual,
        hermitian_self_orthogonal,
    };
    match format {
        Format::Json => json_lines(&[r]),
        Format::Csv => {
            let row = [
                r.n.to_string(),
                r.q.to_string(),
                join(&r.zero_set, " "),
                join(&r.dual, " "),
                r.weakly_self_dual.to_string(),
                r.hermitian_dual.as_deref().map_or_else(String::new, |d| join(d, " ")),
                r.hermitian_self_orthogonal.map_or_else(String::new, |b| b.to_string()),
            ];
            let header = [
                "n",
                "q",
                "zero_set",
                "dual",
                "weakly_self_dual",
                "hermitian_dual",
                "hermitian_self_orthogonal",
            ];
            csv_rows(&header, &[row])
        }
        Format::Text => {
            let set = |s: &[usize]| format!("{{{}}}", join(s, ", "));
            let mut out = format!(
                "zero set  {}\ndual      {}\nweakly self-dual  {}\n",
                set(&r.zero_set),
                set(&r.dual),
                r.weakly_self_dual
            );
            if let (Some(h), Some(b)) = (&r.hermitian_dual, r.hermitian_self_orthogonal) {
                out.push_str(&format!(
                    "hermitian dual    {}\nhermitian self-orthogonal  {b}\n",
                    set(h)
                ));
            }
            Ok(out)
        }
    }
}

const RECORD_HEADER: [&str; 16] = [
    "code",
    "n",
    "k",
    "d_bch",
    "d_dual",
    "d_true",
    "d2",
    "dq",
    "d_dual_flag",
    "d_true_flag",
    "dq_flag",
    "construction",
    "q",
    "modulus",
    "zero_set",
    "basis",
];

fn record_cells(r: &QuantumCodeRecord) -> Vec<String> {
    vec![
        r.label(),
        r.n.to_string(),
        r.k.to_string(),
        r.d_bch.to_string(),
        opt(r.d_dual),
        opt(r.d_true),
        opt(r.d2),
        opt(r.dq),
        r.flags.d_dual.to_string(),
        r.flags.d_true.to_string(),
        r.flags.dq.map_or_else(String::new, |f| f.to_string()),
        r.construction.to_string(),
        r.field.q.to_string(),
        r.field.modulus.to_string(),
        join(&r.zero_set.residues, " "),
        r.basis.as_deref().map_or_else(String::new, |b| join(b, " ")),
    ]
}

/// Records as JSON lines, CSV rows or a text table. CSV and text always
/// carry a header, so an empty list renders as the header alone.
pub fn records(records: &[QuantumCodeRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => json_lines(records),
        Format::Csv => {
            let rows: Vec<Vec<String>> = records.iter().map(record_cells).collect();
            csv_rows(&RECORD_HEADER, &rows)
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let c = record_cells(r);
                    vec![
                        c[0].clone(),
                        c[3].clone(),
                        c[4].clone(),
                        c[8].clone(),
                        c[9].clone(),
                        c[14].clone(),
                    ]
                })
                .collect();
            Ok(aligned(
                &["code", "d_bch", "d_dual", "d_dual_flag", "d_true_flag", "zero_set"],
                &rows,
            ))
        }
    }
}

/// One sampled rate, serialized with a fixed key order.
#[derive(Serialize)]
pub struct SimulationLine {
    pub code: String,
    pub channel: &'static str,
    pub epsilon: f64,
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci95: (f64, f64),
}

impl SimulationLine {
    pub fn new(code: &str, model: ChannelModel, est: &RateEstimate) -> Self {
        SimulationLine {
            code: code.to_string(),
            channel: model.name(),
            epsilon: model.epsilon(),
            trials: est.trials,
            failures: est.failures,
            rate: est.rate,
            ci95: est.ci95,
        }
    }
}

pub fn simulations(lines: &[SimulationLine], format: Format) -> Result<String> {
    let cells: Vec<Vec<String>> = lines
        .iter()
        .map(|l| {
            vec![
                l.code.clone(),
                l.channel.to_string(),
                l.epsilon.to_string(),
                l.trials.to_string(),
                l.failures.to_string(),
                l.rate.to_string(),
                l.ci95.0.to_string(),
                l.ci95.1.to_string(),
            ]
        })
        .collect();
    let header = [
        "code",
        "channel",
        "epsilon",
        "trials",
        "failures",
        "rate",
        "ci95_low",
        "ci95_high",
    ];
    match format {
        Format::Json => json_lines(lines),
        Format::Csv => csv_rows(&header, &cells),
        Format::Text => Ok(aligned(&header, &cells)),
    }
}

/// Counts for every error or erasure pattern of one size.
#[derive(Serialize)]
pub struct ExhaustiveLine {
    pub code: String,
    pub channel: &'static str,
    pub exhaustive: bool,
    pub size: usize,
    pub cases: u64,
    pub failures: u64,
    pub rate: f64,
}

impl ExhaustiveLine {
    pub fn new(code: &str, channel: &'static str, c: &ExhaustiveCount) -> Self {
        ExhaustiveLine {
            code: code.to_string(),
            channel,
            exhaustive: true,
            size: c.size,
            cases: c.cases,
            failures: c.failures,
            rate: if c.cases == 0 {
                0.0
            } else {
                c.failures as f64 / c.cases as f64
            },
        }
    }
}

pub fn exhaustive(lines: &[ExhaustiveLine], format: Format) -> Result<String> {
    let cells: Vec<Vec<String>> = lines
        .iter()
        .map(|l| {
            vec![
                l.code.clone(),
                l.channel.to_string(),
                l.size.to_string(),
                l.cases.to_string(),
                l.failures.to_string(),
                l.rate.to_string(),
            ]
        })
        .collect();
    let header = ["code", "channel", "size", "cases", "failures", "rate"];
    match format {
        Format::Json => json_lines(lines),
        Format::Csv => csv_rows(&header, &cells),
        Format::Text => Ok(aligned(&header, &cells)),
    }
}

#[derive(Serialize)]
pub struct StateReport {
    pub code: String,
    pub states: usize,
    pub orthonormality_error: f64,
    pub hadamard_identity: bool,
    pub tolerance: f64,
}

pub fn state_report(r: &StateReport, format: Format) -> Result<String> {
    let cells = vec![vec![
        r.code.clone(),
        r.states.to_string(),
        format!("{:e}", r.orthonormality_error),
        r.hadamard_identity.to_string(),
        format!("{:e}", r.tolerance),
    ]];
    let header = [
        "code",
        "states",
        "orthonormality_error",
        "hadamard_identity",
        "tolerance",
    ];
    match format {
        Format::Json => json_lines(&[r]),
        Format::Csv => csv_rows(&header, &cells),
        Format::Text => Ok(aligned(&header, &cells)),
    }
}
