//! Report rendering. JSON is written by hand so that key order, number format
//! and line endings are fixed; it is read back with `serde_json`.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use serde_json::Value;

use super::{
    compare_ids, section_of, CheckOutcome, CheckReport, CorrectedValues, RegistryError, Status, Summary,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl ReportFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
            ReportFormat::Markdown => "markdown",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown report format '{other}' (expected json, csv or markdown)")),
        }
    }
}

/// 17 significant digits; `null` for NaN and infinities.
fn number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".into()
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Keys are kept in a `BTreeMap`, so objects come out sorted.
fn object(fields: BTreeMap<&str, String>) -> String {
    let body: Vec<String> = fields.into_iter().map(|(k, v)| format!("{}:{v}", string(k))).collect();
    format!("{{{}}}", body.join(","))
}

fn corrected_json(c: &Option<CorrectedValues>) -> String {
    match c {
        None => "null".into(),
        Some(c) => object(BTreeMap::from([
            ("abs_diff", number(c.abs_diff)),
            ("lhs", number(c.lhs)),
            ("rel_diff", number(c.rel_diff)),
            ("rhs", number(c.rhs)),
        ])),
    }
}

fn outcome_json(o: &CheckOutcome) -> String {
    object(BTreeMap::from([
        ("abs_diff", number(o.abs_diff)),
        ("corrected", corrected_json(&o.corrected)),
        ("id", string(&o.id)),
        ("lhs_value", number(o.lhs_value)),
        ("message", o.message.as_deref().map_or("null".into(), string)),
        ("rel_diff", number(o.rel_diff)),
        ("rhs_value", number(o.rhs_value)),
        ("sample", string(&o.sample)),
        ("status", string(o.status.as_str())),
        ("terms_used", o.terms_used.to_string()),
        ("tolerance", number(o.tolerance)),
        ("wall_seconds", number(o.wall_seconds)),
    ]))
}

fn summary_json(s: &Summary) -> String {
    let mut fields = BTreeMap::new();
    for st in Status::ALL {
        fields.insert(st.as_str(), s.count(st).to_string());
    }
    fields.insert("total", s.total().to_string());
    object(fields)
}

fn render_json(r: &CheckReport) -> String {
    let outcomes = if r.outcomes.is_empty() {
        "[]".to_string()
    } else {
        let rows: Vec<String> = r.outcomes.iter().map(outcome_json).collect();
        format!("[\n{}\n]", rows.join(",\n"))
    };
    let top = BTreeMap::from([
        ("outcomes", outcomes),
        ("started_at", string(&r.started_at)),
        ("summary", summary_json(&r.summary)),
        ("version", r.version.to_string()),
    ]);
    let mut s = object(top);
    s.push('\n');
    s
}

fn render_csv(r: &CheckReport) -> Result<Vec<u8>, RegistryError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["id", "sample", "lhs", "rhs", "abs_diff", "rel_diff", "status", "terms", "seconds"])?;
    for o in &r.outcomes {
        w.write_record([
            o.id.clone(),
            o.sample.clone(),
            number(o.lhs_value),
            number(o.rhs_value),
            number(o.abs_diff),
            number(o.rel_diff),
            o.status.as_str().to_string(),
            o.terms_used.to_string(),
            number(o.wall_seconds),
        ])?;
    }
    w.into_inner().map_err(|e| RegistryError::Io(e.into_error()))
}

fn short(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.12e}")
    } else {
        "-".into()
    }
}

fn render_markdown(r: &CheckReport) -> String {
    let mut out = String::new();
    out.push_str("# Identity check report\n\n");
    out.push_str(&format!("Started {}.\n\n", r.started_at));
    out.push_str("| status | count |\n|---|---|\n");
    for st in Status::ALL {
        out.push_str(&format!("| {} | {} |\n", st.as_str(), r.summary.count(st)));
    }
    let mut sections: BTreeMap<u64, Vec<&CheckOutcome>> = BTreeMap::new();
    for o in &r.outcomes {
        let key = section_of(&o.id).parse().unwrap_or(u64::MAX);
        sections.entry(key).or_default().push(o);
    }
    for (section, mut rows) in sections {
        rows.sort_by(|a, b| compare_ids(&a.id, &b.id));
        out.push_str(&format!("\n## eq-{section}.*\n\n"));
        out.push_str("| id | sample | lhs | rhs | abs diff | status |\n|---|---|---|---|---|---|\n");
        for o in rows {
            let status = match &o.message {
                Some(m) => format!("{} ({})", o.status.as_str(), m.replace('|', "/")),
                None => o.status.as_str().to_string(),
            };
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                o.id,
                o.sample,
                short(o.lhs_value),
                short(o.rhs_value),
                short(o.abs_diff),
                status
            ));
        }
    }
    out
}

/// Writes `r` to `sink` in the requested format.
pub fn render_report<W: Write>(r: &CheckReport, format: ReportFormat, sink: &mut W) -> Result<(), RegistryError> {
    let bytes = match format {
        ReportFormat::Json => render_json(r).into_bytes(),
        ReportFormat::Csv => render_csv(r)?,
        ReportFormat::Markdown => render_markdown(r).into_bytes(),
    };
    sink.write_all(&bytes)?;
    sink.flush()?;
    Ok(())
}

fn malformed(msg: impl Into<String>) -> RegistryError {
    RegistryError::Malformed(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, RegistryError> {
    v.get(key).ok_or_else(|| malformed(format!("missing field '{key}'")))
}

fn real(v: &Value, key: &str) -> Result<f64, RegistryError> {
    match field(v, key)? {
        Value::Null => Ok(f64::NAN),
        x => x.as_f64().ok_or_else(|| malformed(format!("'{key}' is not a number"))),
    }
}

fn count(v: &Value, key: &str) -> Result<usize, RegistryError> {
    field(v, key)?.as_u64().map(|n| n as usize).ok_or_else(|| malformed(format!("'{key}' is not a count")))
}

fn text(v: &Value, key: &str) -> Result<String, RegistryError> {
    field(v, key)?.as_str().map(str::to_string).ok_or_else(|| malformed(format!("'{key}' is not a string")))
}

fn parse_outcome(v: &Value) -> Result<CheckOutcome, RegistryError> {
    let status_text = text(v, "status")?;
    let status = Status::parse(&status_text).ok_or_else(|| malformed(format!("unknown status '{status_text}'")))?;
    let corrected = match field(v, "corrected")? {
        Value::Null => None,
        c => Some(CorrectedValues {
            lhs: real(c, "lhs")?,
            rhs: real(c, "rhs")?,
            abs_diff: real(c, "abs_diff")?,
            rel_diff: real(c, "rel_diff")?,
        }),
    };
    let message = match field(v, "message")? {
        Value::Null => None,
        m => Some(m.as_str().ok_or_else(|| malformed("'message' is not a string"))?.to_string()),
    };
    Ok(CheckOutcome {
        id: text(v, "id")?,
        sample: text(v, "sample")?,
        lhs_value: real(v, "lhs_value")?,
        rhs_value: real(v, "rhs_value")?,
        abs_diff: real(v, "abs_diff")?,
        rel_diff: real(v, "rel_diff")?,
        tolerance: real(v, "tolerance")?,
        status,
        terms_used: count(v, "terms_used")?,
        wall_seconds: real(v, "wall_seconds")?,
        corrected,
        message,
    })
}

/// Reads a JSON report back; the summary is checked against the outcomes.
pub fn parse_json_report(input: &str) -> Result<CheckReport, RegistryError> {
    let v: Value = serde_json::from_str(input).map_err(|e| malformed(e.to_string()))?;
    let version = count(&v, "version")? as u32;
    let started_at = text(&v, "started_at")?;
    let outcomes = field(&v, "outcomes")?
        .as_array()
        .ok_or_else(|| malformed("'outcomes' is not an array"))?
        .iter()
        .map(parse_outcome)
        .collect::<Result<Vec<_>, _>>()?;
    let s = field(&v, "summary")?;
    let summary = Summary {
        pass: count(s, "pass")?,
        fail: count(s, "fail")?,
        misprint_confirmed: count(s, "misprint_confirmed")?,
        error: count(s, "error")?,
    };
    if summary != Summary::from_outcomes(&outcomes) {
        return Err(malformed("summary does not match the outcomes"));
    }
    Ok(CheckReport { version, started_at, outcomes, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_outcome() -> CheckOutcome {
        CheckOutcome {
            id: "eq-2.73".into(),
            sample: "-".into(),
            lhs_value: 1.0 / 3.0,
            rhs_value: -2.5e-300,
            abs_diff: 0.1,
            rel_diff: f64::NAN,
            tolerance: 1e-7,
            status: Status::MisprintConfirmed,
            terms_used: 12,
            wall_seconds: 0.0,
            corrected: Some(CorrectedValues { lhs: 1.0, rhs: 1.0, abs_diff: 0.0, rel_diff: 0.0 }),
            message: Some("quote \" and, comma".into()),
        }
    }

    fn render(r: &CheckReport, f: ReportFormat) -> String {
        let mut buf = Vec::new();
        render_report(r, f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_json() {
        let r = CheckReport::new("1970-01-01T00:00:00Z".into(), vec![]);
        assert_eq!(
            render(&r, ReportFormat::Json),
            "{\"outcomes\":[],\"started_at\":\"1970-01-01T00:00:00Z\",\
             \"summary\":{\"error\":0,\"fail\":0,\"misprint_confirmed\":0,\"pass\":0,\"total\":0},\"version\":1}\n"
        );
    }

    #[test]
    fn number_format() {
        assert_eq!(number(1.0), "1.0000000000000000e0");
        assert_eq!(number(f64::INFINITY), "null");
        let x = 0.1f64 + 0.2;
        assert_eq!(number(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn one_csv_row() {
        let r = CheckReport::new("t".into(), vec![sample_outcome()]);
        let csv = render(&r, ReportFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "id,sample,lhs,rhs,abs_diff,rel_diff,status,terms,seconds");
        assert!(lines[1].starts_with("eq-2.73,-,"));
    }

    #[test]
    fn json_round_trip_fields() {
        let r = CheckReport::new("2020-01-01T00:00:00Z".into(), vec![sample_outcome()]);
        let back = parse_json_report(&render(&r, ReportFormat::Json)).unwrap();
        let (a, b) = (&r.outcomes[0], &back.outcomes[0]);
        assert_eq!(a.lhs_value.to_bits(), b.lhs_value.to_bits());
        assert_eq!(a.rhs_value.to_bits(), b.rhs_value.to_bits());
        assert!(b.rel_diff.is_nan());
        assert_eq!(a.message, b.message);
        assert_eq!(a.corrected, b.corrected);
        assert_eq!(render(&back, ReportFormat::Json), render(&r, ReportFormat::Json));
    }

    #[test]
    fn markdown_groups_sections() {
        let mut o2 = sample_outcome();
        o2.id = "eq-1.2".into();
        let r = CheckReport::new("t".into(), vec![sample_outcome(), o2]);
        let md = render(&r, ReportFormat::Markdown);
        let s1 = md.find("## eq-1.*").unwrap();
        let s2 = md.find("## eq-2.*").unwrap();
        assert!(s1 < s2);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("JSON".parse::<ReportFormat>(), Ok(ReportFormat::Json));
        assert_eq!("md".parse::<ReportFormat>(), Ok(ReportFormat::Markdown));
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
