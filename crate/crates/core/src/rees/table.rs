use serde::{Deserialize, Serialize};

use super::{is_normal_via_rees, minimal_generators, ReesGenerator};
use crate::error::{Error, Result};
use crate::lattice::LambdaSystem;

/// The minimal-generator table of the normalized Rees algebra of `I(lambda)`,
/// in the shape used for JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesTable {
    pub lambda: Vec<u64>,
    #[serde(rename = "L")]
    pub lcm: u64,
    pub omega: Vec<u64>,
    pub ell: u64,
    pub lambda_prime: Vec<u64>,
    pub generators: Vec<ReesGenerator>,
    pub normal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReesGenerator>,
}

impl ReesTable {
    pub fn compute(sys: &LambdaSystem) -> Result<Self> {
        let witness = is_normal_via_rees(sys)?.witness().cloned();
        Ok(ReesTable {
            lambda: sys.lambda().to_vec(),
            lcm: sys.lcm(),
            omega: sys.omega().to_vec(),
            ell: sys.ell(),
            lambda_prime: sys.lambda_prime().to_vec(),
            generators: minimal_generators(sys)?,
            normal: witness.is_none(),
            witness,
        })
    }

    /// One row `a_1 .. a_n d` per generator, columns right-aligned.
    pub fn to_table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .generators
            .iter()
            .map(|g| g.row().iter().map(u64::to_string).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        let widths: Vec<usize> = (0..cols)
            .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &rows {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Header `a1,..,an,d,type`, then one line per generator.
    pub fn to_csv(&self) -> String {
        let n = self.lambda.len();
        let mut header: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        header.push("d".into());
        header.push("type".into());
        let mut out = header.join(",");
        out.push('\n');
        for g in &self.generators {
            let mut cells: Vec<String> = g.row().iter().map(u64::to_string).collect();
            cells.push(g.kind.number().to_string());
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(l: &[u64]) -> ReesTable {
        ReesTable::compute(&LambdaSystem::new(l).unwrap()).unwrap()
    }

    #[test]
    fn table_layout() {
        let t = table(&[2, 3, 1]).to_table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0], "1 0 0 0");
        assert_eq!(lines[6], "1 2 0 1");
        let t = table(&[2, 3, 13]).to_table();
        assert!(t.lines().any(|l| l == "1 2 11 2"));
        assert!(t.lines().any(|l| l == "1 0  7 1"));
    }

    #[test]
    fn json_round_trip() {
        for l in [&[2, 3, 1][..], &[2, 3, 7], &[2, 3, 13], &[5]] {
            let t = table(l);
            let back = ReesTable::from_json(&t.to_json()).unwrap();
            assert_eq!(back.to_table(), t.to_table());
            assert_eq!(back, t);
        }
        let json = table(&[2, 3, 7]).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["L"], 42);
        assert_eq!(v["normal"], false);
        assert_eq!(v["witness"]["a"], serde_json::json!([1, 2, 6]));
        let v: serde_json::Value = serde_json::from_str(&table(&[2, 3, 1]).to_json()).unwrap();
        assert!(v.get("witness").is_none());
    }

    #[test]
    fn csv_layout() {
        let csv = table(&[2, 3, 7]).to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("a1,a2,a3,d,type"));
        assert!(csv.lines().any(|l| l == "1,2,6,2,4"));
        assert!(csv.lines().any(|l| l == "1,2,0,1,3"));
        assert_eq!(csv.lines().count(), 13);
    }

    #[test]
    fn bad_json_is_a_parse_error() {
        assert!(matches!(
            ReesTable::from_json("{\"lambda\": [2,"),
            Err(Error::Parse { .. })
        ));
    }
}
