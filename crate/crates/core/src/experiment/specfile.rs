//! Plain-text experiment descriptions.
//!
//! One `key = value` pair per line, `#` comments. List values are
//! comma-separated and list keys may repeat.
//!
//! ```text
//! instance   = data/berlin52.tsp
//! random     = 30:1, 30:2      # n:seed
//! optima     = data/optima.txt
//! algorithms = eas, meas
//! runs       = 10
//! seed       = 0
//! jobs       = 1
//! iters      = 1000            # any solver key applies to all algorithms
//! meas.w_minus = 0.3           # ... or, prefixed, to one of them
//! ```
//!
//! Relative paths are resolved against the directory of the spec file.

use std::path::Path;

use super::optima::read_optima;
use super::{ExperimentSpec, InstanceSource};
use crate::aco::Algorithm;
use crate::error::{Error, Result};

/// Parses `n:seed`.
pub fn parse_random_source(s: &str) -> Result<InstanceSource> {
    let bad = || Error::InvalidConfig(format!("expected n:seed, got {s:?}"));
    let (n, seed) = s.trim().split_once(':').ok_or_else(bad)?;
    Ok(InstanceSource::Random {
        n: n.trim().parse().map_err(|_| bad())?,
        seed: seed.trim().parse().map_err(|_| bad())?,
    })
}

pub fn parse_spec_file(text: &str, base_dir: &Path) -> Result<ExperimentSpec> {
    let mut spec = ExperimentSpec::default();
    let mut algorithms: Option<Vec<Algorithm>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::parse(line_no, "expected `key = value`"));
        };
        let (key, value) = (key.trim(), value.trim());
        let at_line = |e: Error| match e {
            Error::InvalidConfig(m) => Error::parse(line_no, m),
            other => other,
        };
        let items = || value.split(',').map(str::trim).filter(|s| !s.is_empty());
        let int = |v: &str| {
            v.parse::<u64>().map_err(|_| {
                Error::parse(line_no, format!("{key}: expected an integer, got {v:?}"))
            })
        };
        match key {
            "instance" | "instances" => spec
                .instances
                .extend(items().map(|p| InstanceSource::File(base_dir.join(p)))),
            "random" => {
                for item in items() {
                    spec.instances
                        .push(parse_random_source(item).map_err(at_line)?);
                }
            }
            "optima" => {
                for item in items() {
                    spec.known_optima.extend(read_optima(base_dir.join(item))?);
                }
            }
            "algorithms" => {
                let list = algorithms.get_or_insert_with(Vec::new);
                for item in items() {
                    list.push(item.parse().map_err(at_line)?);
                }
            }
            "runs" => spec.runs_per_cell = int(value)? as usize,
            "seed" => spec.base_seed = int(value)?,
            "jobs" => spec.jobs = int(value)? as usize,
            _ => match key.split_once('.') {
                Some((algo, field)) => {
                    let algo: Algorithm = algo.parse().map_err(at_line)?;
                    spec.per_algorithm
                        .entry(algo)
                        .or_default()
                        .set(field, value)
                        .map_err(at_line)?;
                }
                None => spec.common.set(key, value).map_err(at_line)?,
            },
        }
    }
    if let Some(list) = algorithms {
        spec.algorithms = list;
    }
    Ok(spec)
}

pub fn read_spec_file(path: impl AsRef<Path>) -> Result<ExperimentSpec> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_spec_file(&text, path.parent().unwrap_or(Path::new(".")))
}
