//! JSON shapes printed by the CLI. All objects carry `"schema":"foldkit-v1"`.

use serde::{Deserialize, Serialize};

use foldkit::fold::{FoldTrace, SigmaMethod};
use foldkit::io::emit_graph6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub schema: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<usize>,
    pub certificates: Certificates,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    /// Colour of each vertex in an optimal proper colouring.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi: Option<Vec<usize>>,
    /// Colour of each vertex in a largest complete proper colouring.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<TraceCertificate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceCertificate {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
    pub steps: Vec<[usize; 2]>,
    pub target: String,
    pub trace: String,
}

impl TraceCertificate {
    pub fn new(t: &FoldTrace, method: Option<SigmaMethod>) -> Self {
        TraceCertificate {
            method: method.map(|m| {
                match m {
                    SigmaMethod::Search => "fold-search",
                    SigmaMethod::UniversalReduction => "universal-reduction",
                }
                .to_string()
            }),
            steps: t.steps.iter().map(|s| [s.x, s.y]).collect(),
            target: emit_graph6(&t.target),
            trace: t.to_text(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldReport {
    pub schema: String,
    pub k: usize,
    pub target_size: usize,
    pub steps: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace_file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceCheckReport {
    pub schema: String,
    pub valid: bool,
    pub steps: usize,
    pub target_size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringCheckReport {
    pub schema: String,
    pub colors: usize,
    pub proper: bool,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub schema: String,
    pub graph6: String,
    pub threshold: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sequence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: String,
    pub vertices: [usize; 4],
}
