//! Exact text serialization: csv, json and latex renderings of polynomials,
//! sequence tables and verification reports.
//!
//! Rationals are always written as `numerator/denominator` (so `0/1`,
//! `5/1`, `-1/2`), which keeps csv rows and json payloads lossless; the
//! json polynomial schema round-trips through [`poly_from_json`] bit for
//! bit. Latex output follows the usual ascending-power display style,
//! e.g. `5x+6x^3`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{DensePoly, Rational};
use crate::sequences::SequenceTable;
use crate::verify::VerificationReport;

/// Output formats understood by the emitters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmitFormat {
    Csv,
    Json,
    Latex,
}

impl EmitFormat {
    pub fn name(self) -> &'static str {
        match self {
            EmitFormat::Csv => "csv",
            EmitFormat::Json => "json",
            EmitFormat::Latex => "latex",
        }
    }
}

impl FromStr for EmitFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(EmitFormat::Csv),
            "json" => Ok(EmitFormat::Json),
            "latex" => Ok(EmitFormat::Latex),
            other => Err(Error::UnsupportedFormat {
                object: "any".into(),
                format: other.to_string(),
            }),
        }
    }
}

/// `p/q` with an explicit denominator, the exact exchange format.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` (or a bare integer) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(numer)
        .map_err(|e| Error::Parse(format!("bad numerator `{numer}`: {e}")))?;
    let d = BigInt::from_str(denom)
        .map_err(|e| Error::Parse(format!("bad denominator `{denom}`: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    name: String,
    index: i64,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SeqJson {
    name: String,
    count: usize,
    values: Vec<String>,
}

#[derive(Serialize)]
struct FailureJson {
    index: u32,
    difference: String,
}

#[derive(Serialize)]
struct ReportJson {
    identity: String,
    range: (u32, u32),
    passed: bool,
    failures: Vec<FailureJson>,
    elapsed_ms: u128,
}

/// One row per coefficient as `p/q`, lowest degree first.
pub fn poly_csv(f: &DensePoly) -> String {
    let mut out = String::new();
    for c in f.coeffs() {
        let _ = writeln!(out, "{}", rational_string(c));
    }
    out
}

/// `{"name": …, "index": …, "coeffs": ["p/q", …]}` with stable key order.
pub fn poly_json(name: &str, index: i64, f: &DensePoly) -> String {
    let payload = PolyJson {
        name: name.to_string(),
        index,
        coeffs: f.coeffs().iter().map(rational_string).collect(),
    };
    serde_json::to_string(&payload).expect("string-only payload")
}

/// Inverse of [`poly_json`]; the name/index metadata is discarded.
pub fn poly_from_json(s: &str) -> Result<DensePoly> {
    let payload: PolyJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad polynomial json: {e}")))?;
    let coeffs = payload
        .coeffs
        .iter()
        .map(|c| parse_rational(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(DensePoly::from_coeffs(coeffs))
}

/// Ascending-power display, integer coefficients plain and fractions as
/// `\frac{p}{q}`; exponents of ten or more are braced.
pub fn poly_latex(f: &DensePoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if d == 0 || !a.is_one() {
            if a.is_integer() {
                let _ = write!(out, "{}", a.numer());
            } else {
                let _ = write!(out, "\\frac{{{}}}{{{}}}", a.numer(), a.denom());
            }
        }
        match d {
            0 => {}
            1 => out.push('x'),
            2..=9 => {
                let _ = write!(out, "x^{d}");
            }
            _ => {
                let _ = write!(out, "x^{{{d}}}");
            }
        }
    }
    out
}

/// One row per value as `p/q`, index order.
pub fn sequence_csv(table: &SequenceTable) -> String {
    let mut out = String::new();
    for v in &table.values {
        let _ = writeln!(out, "{}", rational_string(v));
    }
    out
}

pub fn sequence_json(table: &SequenceTable) -> String {
    let payload = SeqJson {
        name: table.kind.name().to_string(),
        count: table.values.len(),
        values: table.values.iter().map(rational_string).collect(),
    };
    serde_json::to_string(&payload).expect("string-only payload")
}

/// Comma-separated exact values, fractions as `\frac{p}{q}`.
pub fn sequence_latex(table: &SequenceTable) -> String {
    let rendered: Vec<String> = table
        .values
        .iter()
        .map(|v| {
            if v.is_integer() {
                v.numer().to_string()
            } else if v.is_negative() {
                format!("-\\frac{{{}}}{{{}}}", v.numer().abs(), v.denom())
            } else {
                format!("\\frac{{{}}}{{{}}}", v.numer(), v.denom())
            }
        })
        .collect();
    rendered.join(",")
}

pub fn report_json(report: &VerificationReport) -> String {
    let payload = ReportJson {
        identity: report.identity.clone(),
        range: report.checked_range,
        passed: report.passed(),
        failures: report
            .failures
            .iter()
            .map(|f| FailureJson {
                index: f.index,
                difference: f.difference.to_string(),
            })
            .collect(),
        elapsed_ms: report.elapsed.as_millis(),
    };
    serde_json::to_string(&payload).expect("string-only payload")
}

/// `identity,status,lo,hi,failures` then one `index,difference` row per
/// failing index.
pub fn report_csv(report: &VerificationReport) -> String {
    let mut out = format!(
        "{},{},{},{},{}\n",
        report.identity,
        if report.passed() { "pass" } else { "fail" },
        report.checked_range.0,
        report.checked_range.1,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(out, "{},{}", f.index, f.difference);
    }
    out
}

/// Format dispatch for polynomials.
pub fn emit_poly(name: &str, index: i64, f: &DensePoly, format: EmitFormat) -> String {
    match format {
        EmitFormat::Csv => poly_csv(f),
        EmitFormat::Json => poly_json(name, index, f),
        EmitFormat::Latex => poly_latex(f),
    }
}

/// Format dispatch for sequence tables.
pub fn emit_sequence(table: &SequenceTable, format: EmitFormat) -> String {
    match format {
        EmitFormat::Csv => sequence_csv(table),
        EmitFormat::Json => sequence_json(table),
        EmitFormat::Latex => sequence_latex(table),
    }
}

/// Format dispatch for reports; there is no latex rendering of a report.
pub fn emit_report(report: &VerificationReport, format: EmitFormat) -> Result<String> {
    match format {
        EmitFormat::Csv => Ok(report_csv(report)),
        EmitFormat::Json => Ok(report_json(report)),
        EmitFormat::Latex => Err(Error::UnsupportedFormat {
            object: "report".into(),
            format: "latex".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};
    use crate::sequences::{sequence_table, SequenceKind};
    use crate::verify::verify;
    use proptest::prelude::*;

    #[test]
    fn latex_matches_display_table() {
        let q3 = DensePoly::from_ints(&[0, 5, 0, 6]);
        assert_eq!(poly_latex(&q3), "5x+6x^3");
        let p5 = DensePoly::from_ints(&[16, 0, 136, 0, 240, 0, 120]);
        assert_eq!(poly_latex(&p5), "16+136x^2+240x^4+120x^6");
        assert_eq!(poly_latex(&DensePoly::zero()), "0");
        assert_eq!(poly_latex(&DensePoly::x()), "x");
        assert_eq!(
            poly_latex(&DensePoly::from_coeffs(vec![rat(-1, 2), rat_int(1)])),
            "-\\frac{1}{2}+x"
        );
        let high = DensePoly::monomial(rat_int(3), 12);
        assert_eq!(poly_latex(&high), "3x^{12}");
    }

    #[test]
    fn json_schema_and_round_trip() {
        let p0 = DensePoly::x();
        let s = poly_json("P", 0, &p0);
        assert_eq!(s, r#"{"name":"P","index":0,"coeffs":["0/1","1/1"]}"#);
        assert_eq!(poly_from_json(&s).unwrap(), p0);
        let zero = DensePoly::zero();
        let z = poly_json("poly", -1, &zero);
        assert_eq!(poly_from_json(&z).unwrap(), zero);
    }

    #[test]
    fn bernoulli_csv_rows() {
        let table = sequence_table(SequenceKind::Bernoulli, 5);
        assert_eq!(sequence_csv(&table), "1/1\n-1/2\n1/6\n0/1\n-1/30\n");
        assert_eq!(
            sequence_latex(&table),
            "1,-\\frac{1}{2},\\frac{1}{6},0,-\\frac{1}{30}"
        );
        let j = sequence_json(&table);
        assert!(j.starts_with(r#"{"name":"bernoulli","count":5,"#));
    }

    #[test]
    fn poly_csv_rows() {
        let q3 = DensePoly::from_ints(&[0, 5, 0, 6]);
        assert_eq!(poly_csv(&q3), "0/1\n5/1\n0/1\n6/1\n");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("5/1").unwrap(), rat_int(5));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn report_emission() {
        let report = verify("eq01", Some((0, 3))).unwrap();
        let csv = report_csv(&report);
        assert!(csv.starts_with("eq01,pass,0,3,0"));
        let json = report_json(&report);
        assert!(json.starts_with(r#"{"identity":"eq01","range":[0,3],"passed":true"#));
        assert!(matches!(
            emit_report(&report, EmitFormat::Latex),
            Err(Error::UnsupportedFormat { .. })
        ));
    }

    fn arb_poly() -> impl Strategy<Value = DensePoly> {
        prop::collection::vec((-999i64..=999, 1i64..=99), 0..9)
            .prop_map(|cs| DensePoly::from_coeffs(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn json_round_trip_is_lossless(f in arb_poly()) {
            let s = poly_json("poly", 0, &f);
            prop_assert_eq!(poly_from_json(&s).unwrap(), f);
        }
    }
}
