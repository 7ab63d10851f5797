use std::io;

use serde::Serialize;
use serde_json::{json, Value};

use quadmon::artin_schreier::{self, fiber_report, is_sec_element, AsGroupRecord, FiberReport};
use quadmon::disc::{disc_classes, disc_hom_check_with};
use quadmon::quad::classify as classify_ring;
use quadmon::symbolic::{verify_all, verify_named_identity, IdentityReport};
use quadmon::{AsGroup, DiscClass, Error, QuadAlg, Ring, RingElement};

use crate::Format;

#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A violated internal invariant: exit code 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Invariant(_) | Error::Monoid(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<quadmon::RingError> for Failure {
    fn from(e: quadmon::RingError) -> Failure {
        Error::from(e).into()
    }
}

/// A report with a canonical JSON form and a flat table for CSV and text.
pub struct Report {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    /// Set when the report records a failed check.
    pub failed: bool,
}

impl Report {
    fn new(json: impl Serialize, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Report {
        Report {
            json: serde_json::to_value(json).expect("report serializes"),
            header,
            rows,
            failed: false,
        }
    }

    pub fn render(&self, format: Format) -> io::Result<Vec<u8>> {
        match format {
            Format::Json => {
                let mut out = serde_json::to_vec_pretty(&self.json)?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.into_inner().map_err(|e| e.into_error())
            }
            Format::Text => {
                let mut out = String::new();
                for row in &self.rows {
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
                Ok(out.into_bytes())
            }
        }
    }
}

fn parse_ring(text: &str) -> Result<Ring, Failure> {
    Ok(Ring::parse(text)?)
}

/// Splits on commas outside brackets and parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Parses `t,n`; polynomial entries are written `x+1` or `[1,1]`.
fn parse_pair(ring: &Ring, text: &str) -> Result<QuadAlg, Failure> {
    match split_top_level(text).as_slice() {
        [t, n] => Ok(QuadAlg::new(
            ring.parse_element(t.trim())?,
            ring.parse_element(n.trim())?,
        )?),
        _ => Err(Failure::Usage(format!(
            "expected a pair `t,n`, got {text:?} (write polynomial entries as x+1 or [1,1])"
        ))),
    }
}

fn b(v: bool) -> String {
    v.to_string()
}

pub fn classify(ring: &str) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let cls = classify_ring(&ring)?;
    let rec = artin_schreier::classification_record(&cls)?;
    let rows = rec
        .classes
        .iter()
        .map(|c| {
            vec![
                c.t.clone(),
                c.n.clone(),
                c.orbit_size.to_string(),
                c.disc.clone(),
                b(c.separable),
                b(c.sec),
            ]
        })
        .collect();
    Ok(Report::new(
        &rec,
        vec!["t", "n", "orbit_size", "disc", "separable", "sec"],
        rows,
    ))
}

#[derive(Serialize)]
struct DiscRow {
    d: String,
    witness_t: String,
    absorbing: bool,
    fiber_size: usize,
}

#[derive(Serialize)]
struct DiscReport {
    ring: String,
    disc_classes: Vec<DiscRow>,
    homomorphism: bool,
    surjective: bool,
}

pub fn disc(ring: &str) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let cls = classify_ring(&ring)?;
    let discs = disc_classes(&ring)?;
    let hom = disc_hom_check_with(&cls, &discs)?;
    if !hom.is_ok() {
        return Err(Failure::Internal(hom.violations.join("; ")));
    }
    let rec = discs.record();
    let classes: Vec<DiscRow> = rec
        .disc_classes
        .into_iter()
        .zip(&hom.fibers)
        .map(|(c, f)| DiscRow {
            d: c.d,
            witness_t: c.witness_t,
            absorbing: c.absorbing,
            fiber_size: f.classes,
        })
        .collect();
    let rows = classes
        .iter()
        .map(|c| {
            vec![
                c.d.clone(),
                c.witness_t.clone(),
                b(c.absorbing),
                c.fiber_size.to_string(),
            ]
        })
        .collect();
    Ok(Report::new(
        DiscReport {
            ring: rec.ring,
            disc_classes: classes,
            homomorphism: hom.homomorphism,
            surjective: hom.surjective,
        },
        vec!["d", "witness_t", "absorbing", "fiber_size"],
        rows,
    ))
}

pub fn fibers(ring: &str, d: Option<&str>) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let cls = classify_ring(&ring)?;
    let group = AsGroup::new(&ring)?;
    let targets: Vec<DiscClass> = match d {
        Some(text) => vec![DiscClass::of(ring.parse_element(text)?)?],
        None => disc_classes(&ring)?.classes().to_vec(),
    };
    let reports: Vec<FiberReport> = targets
        .iter()
        .map(|dc| fiber_report(&cls, &group, dc))
        .collect::<Result<_, _>>()?;
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.d.clone(),
                r.fiber.len().to_string(),
                r.orbits.len().to_string(),
                r.kernel_size.to_string(),
                b(r.free),
                b(r.transitive),
                b(r.free_on_sec),
                r.with_basis_orbits.to_string(),
                r.predicted_orbits.to_string(),
            ]
        })
        .collect();
    Ok(Report::new(
        json!({ "ring": ring.to_string(), "fibers": reports }),
        vec![
            "d",
            "fiber_size",
            "orbits",
            "kernel_size",
            "free",
            "transitive",
            "free_on_sec",
            "with_basis_orbits",
            "predicted_orbits",
        ],
        rows,
    ))
}

pub fn as_group(ring: &str) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let rec: AsGroupRecord = AsGroup::new(&ring)?.record();
    let rows = rec
        .representatives
        .iter()
        .enumerate()
        .map(|(i, r)| vec![i.to_string(), r.clone()])
        .collect();
    Ok(Report::new(&rec, vec!["class", "representative"], rows))
}

fn pair_json(s: &QuadAlg) -> Value {
    json!({ "t": s.t().to_string(), "n": s.n().to_string() })
}

pub fn product(ring: &str, first: &str, second: &str) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let s = parse_pair(&ring, first)?;
    let t = parse_pair(&ring, second)?;
    let p = s.star(&t)?;
    let disc = p.disc();
    if disc != &s.disc() * &t.disc() {
        return Err(Failure::Internal(format!(
            "disc({s} * {t}) != disc({s}) disc({t})"
        )));
    }
    Ok(Report::new(
        json!({
            "ring": ring.to_string(),
            "s": pair_json(&s),
            "t": pair_json(&t),
            "product": pair_json(&p),
            "disc": disc.to_string(),
        }),
        vec!["t", "n", "disc"],
        vec![vec![p.t().to_string(), p.n().to_string(), disc.to_string()]],
    ))
}

pub fn verify(identity: Option<&str>) -> Result<Report, Failure> {
    let reports: Vec<IdentityReport> = match identity {
        Some(name) => vec![verify_named_identity(name)?],
        None => verify_all(),
    };
    let all_hold = reports.iter().all(|r| r.holds);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                if r.holds { "PASS" } else { "FAIL" }.to_string(),
                r.lhs_terms.to_string(),
                r.rhs_terms.to_string(),
            ]
        })
        .collect();
    let mut report = Report::new(
        json!({ "identities": reports, "all_hold": all_hold }),
        vec!["name", "status", "lhs_terms", "rhs_terms"],
        rows,
    );
    report.failed = !all_hold;
    Ok(report)
}

pub fn sec(ring: &str, element: Option<&str>) -> Result<Report, Failure> {
    let ring = parse_ring(ring)?;
    let elements: Vec<RingElement> = match element {
        Some(text) => vec![ring.parse_element(text)?],
        None => ring.elements()?,
    };
    let flags: Vec<(String, bool)> = elements
        .iter()
        .map(|e| Ok((e.to_string(), is_sec_element(&ring, e)?)))
        .collect::<Result<_, Error>>()?;
    let rows = flags.iter().map(|(e, s)| vec![e.clone(), b(*s)]).collect();
    let json_rows: Vec<Value> = flags
        .iter()
        .map(|(e, s)| json!({ "element": e, "sec": s }))
        .collect();
    Ok(Report::new(
        json!({ "ring": ring.to_string(), "elements": json_rows }),
        vec!["element", "sec"],
        rows,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_respects_brackets() {
        assert_eq!(split_top_level("1,2"), ["1", "2"]);
        assert_eq!(split_top_level("[1,1],[0,1]"), ["[1,1]", "[0,1]"]);
        assert_eq!(split_top_level("x+1,x"), ["x+1", "x"]);
        assert_eq!(split_top_level("1"), ["1"]);
    }

    #[test]
    fn pair_parsing() {
        let f4 = Ring::parse("Z/2[x]/(x^2+x+1)").unwrap();
        let s = parse_pair(&f4, "[1,1],x").unwrap();
        assert_eq!(s.t(), &f4.parse_element("x+1").unwrap());
        assert!(matches!(parse_pair(&f4, "1,1,0"), Err(Failure::Usage(_))));
    }
}
