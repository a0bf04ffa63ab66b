//! JSON matrix files.
//!
//! ```json
//! {
//!   "n": 2,
//!   "entries": [
//!     ["0/1", "0/1"],
//!     ["1/1", "0/1"],
//!     ["-1/1", "0/1"],
//!     ["0/1", "0/1"]
//!   ]
//! }
//! ```
//!
//! `entries` lists the `n²` entries row-major; each is a `[re, im]` pair of
//! rationals. Input accepts `p/q` or a bare integer; output always writes the
//! reduced `p/q` form, pretty-printed with a trailing newline, so a canonical
//! file survives a read/write cycle byte for byte.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, ExactMatrix, GaussianRational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    n: usize,
    entries: Vec<[String; 2]>,
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::MatrixFile(e.to_string()))?;
    if doc.entries.len() != doc.n * doc.n {
        return Err(Error::MatrixFile(format!(
            "expected {} entries for n = {}, found {}",
            doc.n * doc.n,
            doc.n,
            doc.entries.len()
        )));
    }
    let mut m = ExactMatrix::zeros(doc.n, doc.n);
    for (k, [re, im]) in doc.entries.iter().enumerate() {
        let z = GaussianRational::new(parse_rational(re)?, parse_rational(im)?);
        m.set(k / doc.n, k % doc.n, z);
    }
    Ok(m)
}

pub fn format_matrix(m: &ExactMatrix) -> Result<String> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let doc = MatrixDoc {
        n: m.rows(),
        entries: m
            .entries()
            .iter()
            .map(|z| [format_rational(&z.re), format_rational(&z.im)])
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::MatrixFile(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn read_matrix(path: &Path) -> Result<ExactMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MatrixFile(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn write_matrix(path: &Path, m: &ExactMatrix) -> Result<()> {
    std::fs::write(path, format_matrix(m)?)
        .map_err(|e| Error::MatrixFile(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SU2: &str = r#"{
  "n": 2,
  "entries": [
    [
      "0/1",
      "0/1"
    ],
    [
      "1/1",
      "0/1"
    ],
    [
      "-1/1",
      "0/1"
    ],
    [
      "0/1",
      "0/1"
    ]
  ]
}
"#;

    #[test]
    fn canonical_file_round_trips_bit_exact() {
        let m = parse_matrix(SU2).unwrap();
        assert_eq!(m, ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]));
        assert_eq!(format_matrix(&m).unwrap(), SU2);
    }

    #[test]
    fn compact_input_accepted() {
        let m = parse_matrix(r#"{"n":2,"entries":[["1","1/2"],["0","0"],["0","0"],["3/6","-2"]]}"#)
            .unwrap();
        assert_eq!(m.get(0, 0), &GaussianRational::from_ratios(1, 1, 1, 2));
        assert_eq!(m.get(1, 1), &GaussianRational::from_ratios(1, 2, -2, 1));
        let again = parse_matrix(&format_matrix(&m).unwrap()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn malformed_files_rejected() {
        assert!(parse_matrix(r#"{"n":2,"entries":[["1","0"]]}"#).is_err());
        assert!(parse_matrix(r#"{"n":1,"entries":[["1/0","0"]]}"#).is_err());
        assert!(parse_matrix(r#"{"n":1,"entries":[["x","0"]]}"#).is_err());
        assert!(parse_matrix(r#"{"n":1,"entries":[["1","0"]],"extra":1}"#).is_err());
        assert!(parse_matrix("not json").is_err());
    }
}
