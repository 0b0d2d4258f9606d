//! The JSON wire form of a diagram:
//! `{"polygon_size": N, "diagonals": [[u, v], ...]}` with `u < v` and the list
//! sorted lexicographically.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{Polygon, Vertex};
use crate::ptolemy::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub polygon_size: usize,
    pub diagonals: Vec<[Vertex; 2]>,
}

impl DiagramDocument {
    pub fn from_diagram(diagram: &Diagram) -> Self {
        DiagramDocument {
            polygon_size: diagram.polygon().size(),
            diagonals: diagram.iter().map(Into::into).collect(),
        }
    }

    /// Validates every pair; order and duplicates in the input are not
    /// significant.
    pub fn to_diagram(&self) -> Result<Diagram> {
        let polygon = Polygon::new(self.polygon_size)?;
        Diagram::from_pairs(polygon, self.diagonals.iter().map(|&[u, v]| (u, v)))
    }

    pub fn parse(json: &str) -> Result<Diagram> {
        let doc: DiagramDocument =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        doc.to_diagram()
    }

    pub fn is_canonical(&self) -> bool {
        self.diagonals.iter().all(|[u, v]| u < v) && self.diagonals.windows(2).all(|w| w[0] < w[1])
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramDocument::from_diagram(self).serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::dodecagon;

    #[test]
    fn canonical_output() {
        let json = serde_json::to_string(&dodecagon()).unwrap();
        assert_eq!(
            json,
            r#"{"polygon_size":12,"diagonals":[[1,3],[1,9],[1,11],[3,5],[3,9],[3,11],[5,7],[7,9],[9,11]]}"#
        );
        let doc: DiagramDocument = serde_json::from_str(&json).unwrap();
        assert!(doc.is_canonical());
        assert_eq!(doc.to_diagram().unwrap(), dodecagon());
    }

    #[test]
    fn input_order_is_irrelevant() {
        let d = DiagramDocument::parse(r#"{"polygon_size":6,"diagonals":[[3,1],[0,2],[2,0]]}"#)
            .unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "not json",
            r#"{"polygon_size":3,"diagonals":[]}"#,
            r#"{"polygon_size":6,"diagonals":[[0,1]]}"#,
            r#"{"polygon_size":6,"diagonals":[[0,6]]}"#,
            r#"{"polygon_size":6,"diagonals":[[0,2]],"extra":1}"#,
            r#"{"polygon_size":6}"#,
        ] {
            let err = DiagramDocument::parse(bad).unwrap_err();
            assert_eq!(err.code(), "PARSE_ERROR", "{bad}");
        }
    }
}
