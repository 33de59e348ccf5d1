//! Best-known tour lengths, one `name length` pair per line. `#` starts a
//! comment.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

pub fn parse_optima(text: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [name, value] = fields[..] else {
            return Err(Error::parse(line_no, "expected `name length`"));
        };
        let len: f64 = value
            .parse()
            .map_err(|_| Error::parse(line_no, format!("invalid length {value:?}")))?;
        if !(len.is_finite() && len > 0.0) {
            return Err(Error::parse(
                line_no,
                format!("length must be positive, got {value}"),
            ));
        }
        if out.insert(name.to_string(), len).is_some() {
            return Err(Error::parse(line_no, format!("duplicate entry for {name}")));
        }
    }
    Ok(out)
}

pub fn read_optima(path: impl AsRef<Path>) -> Result<BTreeMap<String, f64>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_optima(&text)
}
