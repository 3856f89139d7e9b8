use std::time::Instant;

use gamma_euler::strata::{Stratification, StratumRecord};
use gamma_euler::EulerValue;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::Format;

/// One evaluation, as printed on stdout.
#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub value: EulerValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumRecord>>,
    pub elapsed_ms: f64,
}

impl ResultRecord {
    pub fn new(command: &str, inputs: Map<String, Value>, value: EulerValue, started: Instant) -> Self {
        ResultRecord {
            command: command.to_string(),
            inputs,
            value,
            strata: None,
            elapsed_ms: started.elapsed().as_secs_f64() * 1000.0,
        }
    }

    pub fn with_strata(mut self, s: &Stratification) -> Self {
        self.strata = Some(s.to_records());
        self
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(self).expect("record serializes")),
            Format::Table => print!("{}", self.table()),
        }
    }

    fn table(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.inputs {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Null => "-".to_string(),
                other => other.to_string(),
            };
            out.push_str(&format!("  {k:<10} {shown}\n"));
        }
        out.push_str(&format!("  {:<10} {}\n", "value", self.value));
        if let Some(strata) = &self.strata {
            out.push_str(&format!(
                "\n  {:<20} {:>6}  {:<12} {}\n",
                "stratum", "chi", "isotropy", "note"
            ));
            for s in strata {
                let note = match (s.empty, s.zeroed_by) {
                    (true, _) => "empty".to_string(),
                    (false, Some(rule)) => format!("zeroed by {rule:?}"),
                    (false, None) => String::new(),
                };
                out.push_str(&format!(
                    "  {:<20} {:>6}  {:<12} {}\n",
                    s.label,
                    s.chi.to_string(),
                    s.isotropy,
                    note
                ));
            }
        }
        out
    }
}

/// Builds the `inputs` object from key/value pairs.
pub fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
