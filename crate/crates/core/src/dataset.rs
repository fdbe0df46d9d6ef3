//! The on-disk dataset document and the ranking export table.
//!
//! A dataset is a single JSON document:
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "experts": ["p"],
//!   "parameters": ["cheap"],
//!   "records": [
//!     {"parameter": "cheap", "negated": false, "expert": "p", "opinion": 1,
//!      "values": {"u1": [0.3, 0.5, 0.7, -0.2, -0.3, -0.4]}}
//!   ]
//! }
//! ```
//!
//! Value arrays are ordered `[T+, I+, F+, T-, I-, F-]`. Parsing is strict:
//! out-of-range numbers, duplicate keys and undeclared ids are rejected,
//! never repaired.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};

use crate::decision::Ranking;
use crate::error::{Error, Result};
use crate::number::{Bnn, Tolerance};
use crate::set::{AssessmentKey, ElementMap, Opinion, ParameterLiteral, SoftExpertSet};

/// Declared universe, experts and parameters together with one soft expert
/// set whose records only mention declared ids.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    universe: Vec<String>,
    experts: Vec<String>,
    parameters: Vec<String>,
    set: SoftExpertSet,
}

impl Dataset {
    pub fn new(
        universe: Vec<String>,
        experts: Vec<String>,
        parameters: Vec<String>,
        set: SoftExpertSet,
    ) -> Result<Self> {
        check_ids("universe", &universe)?;
        check_ids("experts", &experts)?;
        check_ids("parameters", &parameters)?;
        let ds = Dataset {
            universe,
            experts,
            parameters,
            set,
        };
        ds.check_set(&ds.set)?;
        Ok(ds)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn set(&self) -> &SoftExpertSet {
        &self.set
    }

    pub fn into_set(self) -> SoftExpertSet {
        self.set
    }

    /// Same declarations, different set.
    pub fn with_set(&self, set: SoftExpertSet) -> Result<Self> {
        self.check_set(&set)?;
        Ok(Dataset {
            set,
            ..self.clone_declarations()
        })
    }

    /// Declarations of both datasets merged (sorted, deduplicated) around
    /// `set`. Sorting keeps the result independent of operand order.
    pub fn merged(a: &Dataset, b: &Dataset, set: SoftExpertSet) -> Result<Self> {
        fn merge(x: &[String], y: &[String]) -> Vec<String> {
            let mut out: Vec<String> = x.iter().chain(y).cloned().collect();
            out.sort();
            out.dedup();
            out
        }
        Dataset::new(
            merge(&a.universe, &b.universe),
            merge(&a.experts, &b.experts),
            merge(&a.parameters, &b.parameters),
            set,
        )
    }

    /// Identical declarations and tolerance-equal sets.
    pub fn equals(&self, other: &Dataset, tol: Tolerance) -> bool {
        self.universe == other.universe
            && self.experts == other.experts
            && self.parameters == other.parameters
            && self.set.equals(&other.set, tol)
    }

    fn clone_declarations(&self) -> Dataset {
        Dataset {
            universe: self.universe.clone(),
            experts: self.experts.clone(),
            parameters: self.parameters.clone(),
            set: SoftExpertSet::new(),
        }
    }

    fn check_set(&self, set: &SoftExpertSet) -> Result<()> {
        let universe: HashSet<&str> = self.universe.iter().map(String::as_str).collect();
        let experts: HashSet<&str> = self.experts.iter().map(String::as_str).collect();
        let params: HashSet<&str> = self.parameters.iter().map(String::as_str).collect();
        for (key, values) in set {
            let loc = || format!("record {key}");
            if !params.contains(key.parameter().name()) {
                return Err(Error::validation(
                    loc(),
                    format!("parameter {:?} is not declared", key.parameter().name()),
                ));
            }
            if !experts.contains(key.expert()) {
                return Err(Error::validation(
                    loc(),
                    format!("expert {:?} is not declared", key.expert()),
                ));
            }
            if let Some(u) = values.keys().find(|u| !universe.contains(u.as_str())) {
                return Err(Error::validation(
                    loc(),
                    format!("element {u:?} is not in the universe"),
                ));
            }
        }
        Ok(())
    }
}

fn check_ids(field: &str, ids: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for (i, id) in ids.iter().enumerate() {
        if id.is_empty() {
            return Err(Error::validation(
                format!("{field}[{i}]"),
                "id must be nonempty",
            ));
        }
        if !seen.insert(id.as_str()) {
            return Err(Error::validation(
                format!("{field}[{i}]"),
                format!("duplicate id {id:?}"),
            ));
        }
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDataset {
    universe: Vec<String>,
    experts: Vec<String>,
    parameters: Vec<String>,
    #[serde(default)]
    records: Vec<RawRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    parameter: String,
    #[serde(default)]
    negated: bool,
    expert: String,
    opinion: u64,
    values: RawValues,
}

/// Element map that keeps duplicate element ids so they can be rejected.
struct RawValues(Vec<(String, Vec<f64>)>);

impl<'de> Deserialize<'de> for RawValues {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = RawValues;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from element id to six numbers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawValues, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry::<String, Vec<f64>>()? {
                    out.push(entry);
                }
                Ok(RawValues(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    let message = e.to_string();
    // serde_json appends " at line L column C"; the location lives in the fields.
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_owned(),
        None => message,
    };
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message,
    }
}

pub fn parse(text: &[u8]) -> Result<Dataset> {
    let raw: RawDataset = serde_json::from_slice(text).map_err(parse_error)?;
    let mut set = SoftExpertSet::new();
    let mut seen_keys = HashSet::new();
    for (i, rec) in raw.records.into_iter().enumerate() {
        let loc = format!("records[{i}]");
        let opinion = Opinion::from_code(rec.opinion).ok_or_else(|| {
            Error::validation(&loc, format!("opinion must be 0 or 1, got {}", rec.opinion))
        })?;
        let param = ParameterLiteral::new(rec.parameter, rec.negated).map_err(|e| e.at(&loc))?;
        let key = AssessmentKey::new(param, rec.expert, opinion).map_err(|e| e.at(&loc))?;
        let loc = format!("{loc} {key}");
        if !seen_keys.insert(key.clone()) {
            return Err(Error::validation(loc, "duplicate assessment key"));
        }
        let mut values = ElementMap::new();
        for (u, nums) in rec.values.0 {
            let at = format!("{loc} element {u:?}");
            let arr: [f64; 6] = nums.try_into().map_err(|v: Vec<f64>| {
                Error::validation(&at, format!("expected 6 components, found {}", v.len()))
            })?;
            let value = Bnn::from_array(arr).map_err(|e| e.at(&at))?;
            if values.insert(u, value).is_some() {
                return Err(Error::validation(at, "duplicate element id"));
            }
        }
        set.insert_record(key, values);
    }
    Dataset::new(raw.universe, raw.experts, raw.parameters, set)
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Shortest decimal that reads back to the same `f64`.
fn json_num(x: f64) -> String {
    serde_json::to_string(&x).expect("finite numbers always serialize")
}

fn json_list(ids: &[String]) -> String {
    let items: Vec<String> = ids.iter().map(|s| json_str(s)).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical document: records in key order, elements in id order, one
/// record per line.
pub fn serialize(dataset: &Dataset) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"universe\": {},", json_list(&dataset.universe));
    let _ = writeln!(out, "  \"experts\": {},", json_list(&dataset.experts));
    let _ = writeln!(out, "  \"parameters\": {},", json_list(&dataset.parameters));
    if dataset.set.is_empty() {
        out.push_str("  \"records\": []\n");
    } else {
        out.push_str("  \"records\": [\n");
        let n = dataset.set.record_count();
        for (i, (key, values)) in dataset.set.records().enumerate() {
            let vals: Vec<String> = values
                .iter()
                .map(|(u, v)| {
                    let nums: Vec<String> = v.to_array().iter().map(|x| json_num(*x)).collect();
                    format!("{}: [{}]", json_str(u), nums.join(", "))
                })
                .collect();
            let _ = write!(
                out,
                "    {{\"parameter\": {}, \"negated\": {}, \"expert\": {}, \"opinion\": {}, \"values\": {{{}}}}}",
                json_str(key.parameter().name()),
                key.parameter().is_negated(),
                json_str(key.expert()),
                key.opinion().code(),
                vals.join(", ")
            );
            out.push_str(if i + 1 < n { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out.into_bytes()
}

pub const RANKING_HEADER: &str = "rank,element,agree_score,disagree_score,final_score";

/// Comma-separated table, header first, scores with six decimals.
pub fn export_ranking(ranking: &Ranking) -> Vec<u8> {
    let mut out = String::from(RANKING_HEADER);
    out.push('\n');
    for alt in ranking.iter() {
        let _ = writeln!(
            out,
            "{},{},{:.6},{:.6},{:.6}",
            alt.rank,
            csv_field(&alt.element),
            alt.agree_score,
            alt.disagree_score,
            alt.final_score
        );
    }
    out.into_bytes()
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Per-record, per-element score table.
pub fn export_scores(set: &SoftExpertSet) -> Vec<u8> {
    let mut out = String::from("parameter,negated,expert,opinion,element,score\n");
    for (key, u, v) in set.support() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.6}",
            csv_field(key.parameter().name()),
            key.parameter().is_negated(),
            csv_field(key.expert()),
            key.opinion().code(),
            csv_field(u),
            v.score()
        );
    }
    out.into_bytes()
}
