//! JSON wire formats and file loading.

use std::fs;
use std::path::Path;

use chipfire::{Divisor, Multigraph, SetReport, VertexFunction, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, u64)>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<VertexId>,
}

impl GraphJson {
    pub fn from_graph(g: &Multigraph, p: Option<VertexId>) -> Self {
        let n = g.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let m = g.multiplicity(u, v);
                if m > 0 {
                    edges.push((u, v, m));
                }
            }
        }
        GraphJson { vertices: n, edges, p }
    }

    pub fn build(&self) -> Result<Multigraph, String> {
        Multigraph::new(self.vertices, &self.edges).map_err(|e| e.to_string())
    }
}

pub fn load_graph(path: &Path) -> Result<Multigraph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed: GraphJson = serde_json::from_str(&text)
        .map_err(|e| format!("bad graph JSON in {}: {e}", path.display()))?;
    parsed.build()
}

#[derive(Serialize, Deserialize)]
pub struct DivisorJson {
    pub coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
pub struct FunctionJson {
    pub values: Vec<i64>,
}

/// A divisor argument is either inline JSON (bare array or {"coeffs": ...})
/// or a path to a file holding the same.
pub fn parse_divisor(arg: &str) -> Result<Divisor, String> {
    let text = if arg.trim_start().starts_with(['[', '{']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?
    };
    let coeffs = match serde_json::from_str::<DivisorJson>(&text) {
        Ok(d) => d.coeffs,
        Err(_) => serde_json::from_str::<Vec<i64>>(&text)
            .map_err(|e| format!("bad divisor JSON: {e}"))?,
    };
    Ok(Divisor::new(coeffs))
}

pub fn divisor_json(d: &Divisor) -> DivisorJson {
    DivisorJson { coeffs: d.coeffs().to_vec() }
}

pub fn function_json(f: &VertexFunction) -> FunctionJson {
    FunctionJson { values: f.values().to_vec() }
}

#[derive(Serialize)]
pub struct SetReportJson {
    pub bound: u64,
    pub members: Vec<u64>,
    pub generators: Vec<u64>,
    pub certified: bool,
}

impl SetReportJson {
    pub fn from_report(r: &SetReport) -> Self {
        SetReportJson {
            bound: r.bound,
            members: r.member_list(),
            generators: r.generators.clone(),
            certified: r.certified_complete,
        }
    }
}

pub fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}
