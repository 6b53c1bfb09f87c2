//! Record and table rendering for the data stream.

use clap::ValueEnum;
use fracsym::lie::AlgebraElement;
use fracsym::verify::fmt_num;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    /// Line-delimited key=value records (machine readable)
    Records,
    /// Aligned human-readable table
    Table,
}

pub struct Printer {
    format: RecordFormat,
}

impl Printer {
    pub fn new(format: RecordFormat) -> Self {
        Printer { format }
    }

    /// One record line. A closed pipe ends the process quietly.
    pub fn line(&self, record: &str) {
        use std::io::Write;
        let out = match self.format {
            RecordFormat::Records => record.to_string(),
            RecordFormat::Table => tableize(record),
        };
        if writeln!(std::io::stdout(), "{out}").is_err() {
            std::process::exit(0);
        }
    }

    /// A multi-line block of records.
    pub fn block(&self, records: &str) {
        for line in records.lines() {
            self.line(line);
        }
    }
}

/// Align `key=value` groups into columns for terminal viewing.
fn tableize(record: &str) -> String {
    record
        .split(' ')
        .map(|group| {
            if let Some((k, v)) = group.split_once('=') {
                format!("{k:<12} {v}")
            } else {
                group.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("  | ")
}

/// Linear combination with the leading basis name bare and every following
/// term carrying an explicit magnitude, e.g. `V12 - 1·V13`.
pub fn render_combination(e: &AlgebraElement) -> String {
    let mut out = String::new();
    for (k, &a) in e.coeffs.iter().enumerate() {
        if a == 0.0 {
            continue;
        }
        let name = e.kind.basis_name(k + 1);
        if out.is_empty() {
            if a < 0.0 {
                out.push('-');
            }
            if a.abs() == 1.0 {
                out.push_str(name);
            } else {
                out.push_str(&format!("{}·{}", fmt_num(a.abs()), name));
            }
        } else {
            out.push_str(if a < 0.0 { " - " } else { " + " });
            out.push_str(&format!("{}·{}", fmt_num(a.abs()), name));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
