//! Conversion of KnotInfo CSV exports into database records.
//!
//! Required columns: `name`, `pd_notation`, `seifert_matrix`. Optional:
//! `alexander_polynomial`. Matrices may use `[...]` or `{...}` brackets.

use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use knotpair::db::KnotRecord;
use knotpair::diagram::KnotDiagram;
use knotpair::laurent::LaurentPoly;

fn bracketed<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    let s = s.trim().replace('{', "[").replace('}', "]");
    Ok(serde_json::from_str(&s)?)
}

pub fn import_csv<R: Read>(input: R) -> Result<Vec<KnotRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let name_col = col("name").ok_or_else(|| anyhow!("missing column `name`"))?;
    let pd_col = col("pd_notation").ok_or_else(|| anyhow!("missing column `pd_notation`"))?;
    let seifert_col =
        col("seifert_matrix").ok_or_else(|| anyhow!("missing column `seifert_matrix`"))?;
    let delta_col = col("alexander_polynomial");

    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = row.position().map_or(i + 2, |p| p.line() as usize);
        let field = |c: usize| row.get(c).unwrap_or("");
        let name = field(name_col).to_string();
        let quads: Vec<[usize; 4]> = bracketed(field(pd_col))
            .with_context(|| format!("line {line} ({name}): field `pd_notation`"))?;
        let diagram = KnotDiagram::from_knotinfo(&quads)
            .map_err(|e| anyhow!("line {line} ({name}): field `pd_notation`: {e}"))?;
        let seifert: Vec<Vec<i64>> = bracketed(field(seifert_col))
            .with_context(|| format!("line {line} ({name}): field `seifert_matrix`"))?;
        let expected_delta = match delta_col.map(field).filter(|s| !s.is_empty()) {
            Some(s) => {
                if let Err(e) = s.parse::<LaurentPoly>() {
                    bail!("line {line} ({name}): field `alexander_polynomial`: {e}");
                }
                Some(s.to_string())
            }
            None => None,
        };
        out.push(KnotRecord {
            name,
            pd: diagram.to_string(),
            alt_pd: None,
            seifert,
            expected_delta,
            expected_alpha: None,
            source: "KnotInfo CSV import".into(),
            optional: false,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_row() {
        let csv = "name,pd_notation,seifert_matrix,alexander_polynomial\n\
                   3_1,\"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\",\"{{-1,1},{0,-1}}\",1-t+t^2\n";
        let r = import_csv(csv.as_bytes()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].seifert, vec![vec![-1, 1], vec![0, -1]]);
        assert!(r[0].pd.starts_with("PD[6]"));
    }

    #[test]
    fn missing_column() {
        assert!(import_csv("name,seifert_matrix\n".as_bytes()).is_err());
    }

    #[test]
    fn bad_field_names_line() {
        let csv = "name,pd_notation,seifert_matrix\n3_1,\"[[1,2],x]\",\"[[1]]\"\n";
        let e = import_csv(csv.as_bytes()).unwrap_err().to_string();
        assert!(e.contains("line 2") && e.contains("pd_notation"), "{e}");
    }
}
