//! Golden reference data for the published approximation tables.
//!
//! The values live in `data/golden_tables.json`, versioned with the crate,
//! holding every number as the exact string printed in the source tables.

use serde::{Deserialize, Serialize};

/// Both tables, as shipped.
pub fn published_tables() -> Vec<GoldenTable> {
    serde_json::from_str(include_str!("../data/golden_tables.json"))
        .expect("embedded golden table data is valid")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenTable {
    /// 1 = odd family `C_{2n-1}`, 2 = even family `C_{2n}`.
    pub table: u32,
    pub blocks: Vec<GoldenBlock>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenBlock {
    pub n: u64,
    /// Gaussian-rational point in CLI syntax (`re` or `re,im`).
    pub tau: String,
    #[serde(rename = "N")]
    pub trunc: u64,
    pub exact: ComplexStrings,
    pub approx: ComplexStrings,
    pub error: ComplexStrings,
}

/// A complex number as two printed decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexStrings {
    pub re: String,
    pub im: String,
}
