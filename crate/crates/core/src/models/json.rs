use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactalg::GaussianRational;

use super::VertexModel;

/// `{"colors": n, "max_degree": D, "weights": [{"multiset": [..], "re": "p/q", "im": "p/q"}, ..]}`.
/// Omitted multisets weigh zero; omitted `re`/`im` are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub colors: usize,
    pub max_degree: usize,
    #[serde(default)]
    pub weights: Vec<WeightJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub multiset: Vec<u32>,
    #[serde(default = "zero_string")]
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0".into()
}

impl ModelJson {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_model(&self) -> Result<VertexModel> {
        let mut y = VertexModel::new(self.colors, self.max_degree)?;
        for w in &self.weights {
            let re: GaussianRational = w.re.parse()?;
            let im: GaussianRational = w.im.parse()?;
            let value = &re + &(&im * &GaussianRational::i());
            let current = y.weight(&w.multiset)?.clone();
            // repeated entries accumulate
            y.set_weight(&w.multiset, &current + &value)?;
        }
        Ok(y)
    }
}

impl From<&VertexModel> for ModelJson {
    fn from(y: &VertexModel) -> Self {
        ModelJson {
            colors: y.colors(),
            max_degree: y.max_degree(),
            weights: y
                .nonzero_weights()
                .map(|(ms, w)| WeightJson {
                    multiset: ms.clone(),
                    re: w.re().to_string(),
                    im: w.im().to_string(),
                })
                .collect(),
        }
    }
}
