use std::fmt::Write as _;

use drg_core::exact::rational::{format_rational, format_rational_list};
use drg_core::oracle::{CheckStatus, CrossValidation};
use drg_core::{ConjectureReport, InvertibilityReport, SrgReport};
use serde::{Deserialize, Serialize};

pub trait Render {
    fn text(&self, verbose: u8) -> String;
    fn json(&self) -> String;
}

macro_rules! json_via_serde {
    () => {
        fn json(&self) -> String {
            serde_json::to_string_pretty(self).expect("reports serialize")
        }
    };
}

fn list(v: &[drg_core::BigRational]) -> String {
    format_rational_list(v)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DirectCheck {
    pub vertices: usize,
    pub invertible: bool,
    pub agrees: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub input: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub report: InvertibilityReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct: Option<DirectCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<String>,
}

impl Render for AnalyzeOutput {
    fn text(&self, verbose: u8) -> String {
        let r = &self.report;
        let mut s = String::new();
        writeln!(s, "input      {}", self.input).unwrap();
        writeln!(s, "array      {{{}}}", r.array).unwrap();
        for note in &self.notes {
            writeln!(s, "note       {note}").unwrap();
        }
        writeln!(s, "seed       {}", list(&r.seed)).unwrap();
        writeln!(s, "detQ       {}", format_rational(&r.det_q)).unwrap();
        writeln!(s, "detQj      {}", list(&r.det_qj)).unwrap();
        if let Some(table) = &self.table {
            if verbose > 0 {
                writeln!(s, "table x[i][j]:").unwrap();
                for line in table.lines() {
                    writeln!(s, "  {line}").unwrap();
                }
            }
        }
        match (&r.z, &r.y, &r.w) {
            (Some(z), Some(y), Some(w)) => {
                writeln!(s, "invertible").unwrap();
                writeln!(s, "z          {}", list(z)).unwrap();
                writeln!(s, "y          {}", list(y)).unwrap();
                write!(s, "w          {}", list(w)).unwrap();
            }
            _ => write!(s, "singular: det(Q) = 0").unwrap(),
        }
        if let Some(d) = &self.direct {
            write!(
                s,
                "\noracle     {} vertices, direct verdict {}, {}",
                d.vertices,
                if d.invertible { "invertible" } else { "singular" },
                if d.agrees { "agrees" } else { "DISAGREES" }
            )
            .unwrap();
        }
        s
    }

    json_via_serde!();
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SrgOutput {
    pub report: SrgReport,
}

impl Render for SrgOutput {
    fn text(&self, _verbose: u8) -> String {
        let r = &self.report;
        let mut s = String::new();
        writeln!(s, "params     (n, k, a, c) = ({})", r.params).unwrap();
        writeln!(
            s,
            "theta      {}  multiplicity {}",
            r.theta,
            format_rational(&r.m_theta)
        )
        .unwrap();
        writeln!(s, "tau        {}  multiplicity {}", r.tau, format_rational(&r.m_tau)).unwrap();
        writeln!(s, "det(D)     {}", format_rational(&r.det_d)).unwrap();
        writeln!(
            s,
            "lambda     {}  mu {}  delta {}",
            format_rational(&r.lambda),
            format_rational(&r.mu),
            format_rational(&r.delta)
        )
        .unwrap();
        match (&r.inverse_i, &r.inverse_a, &r.inverse_j) {
            (Some(i), Some(a), Some(j)) => {
                writeln!(
                    s,
                    "f          {}",
                    format_rational(r.f.as_ref().expect("set when invertible"))
                )
                .unwrap();
                write!(
                    s,
                    "invertible: D^-1 = ({}) I + ({}) A + ({}) J",
                    format_rational(i),
                    format_rational(a),
                    format_rational(j)
                )
                .unwrap();
            }
            _ => write!(s, "singular: k + c = 2a + 4").unwrap(),
        }
        match &r.adjacency_inverse {
            Some(c) => write!(
                s,
                "\nA^-1       ({}) I + ({}) A + ({}) A^2",
                format_rational(&c[0]),
                format_rational(&c[1]),
                format_rational(&c[2])
            )
            .unwrap(),
            None => write!(s, "\nA^-1       none (k = c)").unwrap(),
        }
        s
    }

    json_via_serde!();
}

fn conjecture_line(r: &ConjectureReport) -> String {
    format!(
        "{{{}}}  d={}  lhs {}  rhs {}  {}{}",
        r.array,
        r.diameter,
        format_rational(&r.lhs),
        format_rational(&r.rhs),
        if r.equal { "equal" } else { "NOT EQUAL" },
        if r.established { "" } else { "  (d >= 4, reported only)" }
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ConjectureOutput {
    pub input: String,
    pub report: ConjectureReport,
}

impl Render for ConjectureOutput {
    fn text(&self, verbose: u8) -> String {
        let mut s = format!("input      {}\n{}", self.input, conjecture_line(&self.report));
        if verbose > 0 {
            write!(s, "\ntime       {} us", self.report.timing_us).unwrap();
        }
        s
    }

    json_via_serde!();
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SweepOutput {
    pub sweep: String,
    pub count: usize,
    pub all_equal: bool,
    pub rows: Vec<ConjectureReport>,
}

impl Render for SweepOutput {
    fn text(&self, verbose: u8) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&conjecture_line(r));
            if verbose > 0 {
                write!(s, "  {} us", r.timing_us).unwrap();
            }
            s.push('\n');
        }
        let unequal = self.rows.iter().filter(|r| !r.equal).count();
        write!(s, "sweep {}: {} arrays, {} unequal", self.sweep, self.count, unequal).unwrap();
        s
    }

    json_via_serde!();
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleOutput {
    pub family: String,
    pub validation: CrossValidation,
}

impl Render for OracleOutput {
    fn text(&self, verbose: u8) -> String {
        let v = &self.validation;
        let mut s = String::new();
        writeln!(s, "graph      {} on {} vertices", self.family, v.vertices).unwrap();
        writeln!(s, "array      {{{}}}", v.array).unwrap();
        writeln!(
            s,
            "verdict    {} (detQ {}), rank(D) = {}",
            if v.analysis.invertible {
                "invertible"
            } else {
                "singular"
            },
            format_rational(&v.analysis.det_q),
            v.direct_rank
        )
        .unwrap();
        for c in &v.checks {
            let tag = match c.status {
                CheckStatus::Passed => "PASS",
                CheckStatus::Failed => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            write!(s, "{tag}  {}", c.name).unwrap();
            if let Some(detail) = &c.detail {
                if verbose > 0 || c.status != CheckStatus::Passed {
                    write!(s, "  ({detail})").unwrap();
                }
            }
            s.push('\n');
        }
        let failed = v.failures().count();
        write!(s, "{} checks, {} failed", v.checks.len(), failed).unwrap();
        s
    }

    json_via_serde!();
}
