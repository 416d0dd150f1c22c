use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::{Fragment, MultiGraph};

/// Graph interchange format:
/// `{"vertices": n, "edges": [[u, v], ..], "free_loops": f, "labels": [..]}`
/// with 0-based vertices. A missing `labels` means a plain graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub free_loops: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    fn graph(&self) -> Result<MultiGraph> {
        MultiGraph::new(
            self.vertices,
            self.edges.iter().map(|&[u, v]| (u, v)).collect(),
            self.free_loops,
        )
    }

    /// The described graph; labels, if any, are ignored.
    pub fn to_graph(&self) -> Result<MultiGraph> {
        self.graph()
    }

    /// The described fragment; no labels gives a 0-fragment.
    pub fn to_fragment(&self) -> Result<Fragment> {
        let labels = self.labels.clone().unwrap_or_default();
        Fragment::new(self.graph()?, &labels)
    }
}

impl From<&MultiGraph> for GraphJson {
    fn from(g: &MultiGraph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            free_loops: g.free_loops(),
            labels: None,
        }
    }
}

impl From<&Fragment> for GraphJson {
    fn from(f: &Fragment) -> Self {
        GraphJson {
            labels: Some((0..f.arity()).collect()),
            ..GraphJson::from(f.graph())
        }
    }
}
