//! Serialized reports and their schema.

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::classify::ClassificationReport;
use crate::verdict::{Bound, Status, Verdict};
use crate::verify::TheoremReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    pub bound: Bound,
    pub results: Vec<ResultRow>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ResultRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Json>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instances: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses_satisfied: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violations: Option<u64>,
    /// Separating searches: the class required to pass.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub have: Option<String>,
    /// Separating searches: where the example was found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub found_ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub found_ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<CounterexampleRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRow {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    pub description: String,
    pub witness: Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealsReport {
    pub ring: String,
    pub bound: Bound,
    pub complete: bool,
    pub ideals: Vec<IdealRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealRow {
    pub ideal: String,
    #[serde(rename = "gen")]
    pub generators: String,
    pub proper: bool,
}

impl ResultRow {
    pub fn with_verdict(mut self, v: &Verdict) -> Self {
        self.status = Some(v.status());
        match v {
            Verdict::Fails(w) => self.witness = Some(w.to_json()),
            Verdict::HoldsUpToBound(b) => self.bound = Some(*b),
            Verdict::Holds => {}
        }
        self
    }

    pub fn is_fails(&self) -> bool {
        self.status == Some(Status::Fails)
    }
}

pub fn classification(rep: &ClassificationReport, phi: Option<String>) -> Report {
    Report {
        ring: rep.ring.clone(),
        ideal: Some(rep.ideal.to_string()),
        phi,
        bound: rep.bound,
        results: rep
            .results
            .iter()
            .map(|(class, v)| {
                ResultRow {
                    class: Some(class.name().to_string()),
                    phi: class.phi().map(|p| p.to_string()),
                    ..ResultRow::default()
                }
                .with_verdict(v)
            })
            .collect(),
    }
}

pub fn theorem_row(rep: &TheoremReport, phi: Option<String>) -> ResultRow {
    ResultRow {
        theorem: Some(rep.theorem.name().to_string()),
        phi,
        instances: Some(rep.instances),
        hypotheses_satisfied: Some(rep.hypotheses_satisfied),
        violations: Some(rep.violations),
        counterexamples: rep
            .witnesses
            .iter()
            .map(|c| CounterexampleRow {
                ring: c.ring.clone(),
                phi: c.phi.clone(),
                description: c.description.clone(),
                witness: c.witness.to_json(),
            })
            .collect(),
        ..ResultRow::default()
    }
    .with_verdict(&rep.conclusion)
}

fn witness_text(w: &Json) -> String {
    match w {
        Json::Array(items) => {
            let shown: Vec<String> = items.iter().map(item_text).collect();
            format!("[{}]", shown.join(", "))
        }
        Json::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A witness item; tuples of a product ring print as `(a,b)`.
fn item_text(w: &Json) -> String {
    match w {
        Json::Array(items) => {
            let shown: Vec<String> = items.iter().map(item_text).collect();
            format!("({})", shown.join(","))
        }
        other => witness_text(other),
    }
}

fn status_text(row: &ResultRow) -> String {
    match (row.status, &row.witness, row.bound) {
        (Some(Status::Fails), Some(w), _) => format!("fails {}", witness_text(w)),
        (Some(Status::HoldsUpTo), _, Some(b)) => format!("holds up to {b}"),
        (Some(s), _, _) => s.as_str().to_string(),
        (None, _, _) => "-".to_string(),
    }
}

impl Report {
    pub fn render_table(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring);
        if let Some(i) = &self.ideal {
            out += &format!("ideal: {i}\n");
        }
        if let Some(p) = &self.phi {
            out += &format!("phi: {p}\n");
        }
        out += &format!("bound: elements {}, ideals {}\n", self.bound.elements, self.bound.ideals);
        let label = |r: &ResultRow| {
            let name = r.class.clone().or_else(|| r.theorem.clone()).unwrap_or_default();
            match &r.phi {
                Some(p) => format!("{name}[{p}]"),
                None => name,
            }
        };
        let width = self.results.iter().map(|r| label(r).len()).max().unwrap_or(0);
        for r in &self.results {
            out += &format!("{:width$}  {}", label(r), status_text(r));
            if let (Some(n), Some(h), Some(v)) = (r.instances, r.hypotheses_satisfied, r.violations) {
                out += &format!("  (instances {n}, hypotheses {h}, violations {v})");
            }
            if let (Some(ring), Some(ideal)) = (&r.found_ring, &r.found_ideal) {
                out += &format!("  in {ring} at {ideal}");
            }
            out.push('\n');
            for c in &r.counterexamples {
                out += &format!("    {}: {} {}\n", c.ring, c.description, witness_text(&c.witness));
            }
        }
        out
    }
}

impl IdealsReport {
    pub fn render_table(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring);
        let tail = if self.complete { String::new() } else { format!(" (generators up to {})", self.bound.ideals) };
        out += &format!("{} ideals{tail}\n", self.ideals.len());
        for i in &self.ideals {
            out += &format!("{}  {}{}\n", i.ideal, i.generators, if i.proper { "" } else { "  (unit)" });
        }
        out
    }
}

fn check_keys(obj: &serde_json::Map<String, Json>, allowed: &[&str], at: &str) -> Result<(), String> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(format!("{at}: unexpected key `{k}`")),
        None => Ok(()),
    }
}

fn want_str(obj: &serde_json::Map<String, Json>, key: &str, required: bool, at: &str) -> Result<(), String> {
    match obj.get(key) {
        Some(Json::String(_)) => Ok(()),
        None if !required => Ok(()),
        Some(_) => Err(format!("{at}: `{key}` must be a string")),
        None => Err(format!("{at}: missing `{key}`")),
    }
}

fn want_count(obj: &serde_json::Map<String, Json>, key: &str, required: bool, at: &str) -> Result<(), String> {
    match obj.get(key) {
        Some(v) if v.is_u64() => Ok(()),
        None if !required => Ok(()),
        Some(_) => Err(format!("{at}: `{key}` must be a non-negative integer")),
        None => Err(format!("{at}: missing `{key}`")),
    }
}

fn check_bound(v: Option<&Json>) -> Result<(), String> {
    let b = v.and_then(Json::as_object).ok_or("`bound` must be an object")?;
    check_keys(b, &["elements", "ideals"], "bound")?;
    want_count(b, "elements", true, "bound")?;
    want_count(b, "ideals", true, "bound")
}

fn check_row(row: &Json, at: &str) -> Result<(), String> {
    let obj = row.as_object().ok_or(format!("{at}: result must be an object"))?;
    check_keys(
        obj,
        &[
            "class",
            "theorem",
            "phi",
            "status",
            "witness",
            "bound",
            "instances",
            "hypotheses_satisfied",
            "violations",
            "have",
            "found_ring",
            "found_ideal",
            "counterexamples",
        ],
        at,
    )?;
    if obj.contains_key("class") == obj.contains_key("theorem") {
        return Err(format!("{at}: exactly one of `class` and `theorem` is required"));
    }
    for key in ["class", "theorem", "phi", "have", "found_ring", "found_ideal"] {
        want_str(obj, key, false, at)?;
    }
    for key in ["instances", "hypotheses_satisfied", "violations"] {
        want_count(obj, key, false, at)?;
    }
    let status = obj.get("status").and_then(Json::as_str).ok_or(format!("{at}: missing `status`"))?;
    match status {
        "holds" | "fails" | "holds_up_to" => {}
        other => return Err(format!("{at}: unknown status `{other}`")),
    }
    match obj.get("witness") {
        Some(Json::Array(_)) if status == "fails" => {}
        None if status != "fails" => {}
        _ => return Err(format!("{at}: a witness array accompanies exactly the failing status")),
    }
    if obj.contains_key("bound") != (status == "holds_up_to") {
        return Err(format!("{at}: `bound` accompanies exactly the holds_up_to status"));
    }
    want_count(obj, "bound", false, at)?;
    if let Some(cs) = obj.get("counterexamples") {
        let cs = cs.as_array().ok_or(format!("{at}: `counterexamples` must be an array"))?;
        for (k, c) in cs.iter().enumerate() {
            let at = format!("{at}.counterexamples[{k}]");
            let c = c.as_object().ok_or(format!("{at}: must be an object"))?;
            check_keys(c, &["ring", "phi", "description", "witness"], &at)?;
            want_str(c, "ring", true, &at)?;
            want_str(c, "phi", false, &at)?;
            want_str(c, "description", true, &at)?;
            if !c.get("witness").is_some_and(Json::is_array) {
                return Err(format!("{at}: `witness` must be an array"));
            }
        }
    }
    Ok(())
}

/// Checks an emitted document against the report schema.
pub fn validate(doc: &Json) -> Result<(), String> {
    let obj = doc.as_object().ok_or("report must be an object")?;
    want_str(obj, "ring", true, "report")?;
    check_bound(obj.get("bound"))?;
    if obj.contains_key("ideals") {
        check_keys(obj, &["ring", "bound", "complete", "ideals"], "report")?;
        if !obj.get("complete").is_some_and(Json::is_boolean) {
            return Err("report: `complete` must be a boolean".into());
        }
        let ideals = obj["ideals"].as_array().ok_or("report: `ideals` must be an array")?;
        for (k, i) in ideals.iter().enumerate() {
            let at = format!("ideals[{k}]");
            let i = i.as_object().ok_or(format!("{at}: must be an object"))?;
            check_keys(i, &["ideal", "gen", "proper"], &at)?;
            want_str(i, "ideal", true, &at)?;
            want_str(i, "gen", true, &at)?;
            if !i.get("proper").is_some_and(Json::is_boolean) {
                return Err(format!("{at}: `proper` must be a boolean"));
            }
        }
        return Ok(());
    }
    check_keys(obj, &["ring", "ideal", "phi", "bound", "results"], "report")?;
    want_str(obj, "ideal", false, "report")?;
    want_str(obj, "phi", false, "report")?;
    let rows = obj.get("results").and_then(Json::as_array).ok_or("report: `results` must be an array")?;
    for (k, row) in rows.iter().enumerate() {
        check_row(row, &format!("results[{k}]"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn schema_accepts_and_rejects() {
        let good = json!({
            "ring": "Z", "ideal": "<4>", "bound": {"elements": 1000, "ideals": 50},
            "results": [
                {"class": "r", "status": "fails", "witness": [2, 2]},
                {"class": "strongly-phi-r", "phi": "empty", "status": "holds_up_to", "bound": 50},
            ]
        });
        assert_eq!(validate(&good), Ok(()));
        let mut bad = good.clone();
        bad["results"][0]["witness"] = Json::Null;
        assert!(validate(&bad).is_err());
        let mut bad = good.clone();
        bad["results"][1]["theorem"] = json!("cha");
        assert!(validate(&bad).is_err());
        let mut bad = good;
        bad["extra"] = json!(1);
        assert!(validate(&bad).is_err());
    }

    #[test]
    fn reports_round_trip() {
        let rep = Report {
            ring: "Z/12".into(),
            ideal: None,
            phi: Some("zero".into()),
            bound: Bound::default(),
            results: vec![ResultRow {
                theorem: Some("cha".into()),
                instances: Some(20),
                ..ResultRow::default()
            }
            .with_verdict(&Verdict::HoldsUpToBound(7))],
        };
        let text = serde_json::to_string(&rep).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), rep);
        assert_eq!(validate(&serde_json::from_str(&text).unwrap()), Ok(()));
    }
}
