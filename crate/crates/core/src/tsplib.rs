//! Reader and writer for the symmetric TSPLIB subset: `EUC_2D` coordinates
//! and `EXPLICIT` weights in `FULL_MATRIX` format.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::instance::{Instance, WeightKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    NodeCoords,
    EdgeWeights,
}

#[derive(Default)]
struct Header {
    name: Option<String>,
    dimension: Option<(usize, usize)>,
    problem_type: Option<String>,
    weight_type: Option<(String, usize)>,
    weight_format: Option<(String, usize)>,
}

/// Parses TSPLIB text into a fully materialized [`Instance`].
///
/// Every error carries the 1-based line number it was detected on.
pub fn parse_tsplib(text: &str) -> Result<Instance> {
    let mut header = Header::default();
    let mut section = Section::Header;
    let mut section_line = 0;
    let mut coords: Vec<Option<(f64, f64)>> = Vec::new();
    let mut coord_count = 0;
    let mut weights: Vec<f64> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "EOF" {
            break;
        }

        let keyword = line
            .split(|c: char| c == ':' || c.is_whitespace())
            .next()
            .unwrap_or("");
        if is_keyword(keyword) {
            if matches!(keyword, "NODE_COORD_SECTION" | "EDGE_WEIGHT_SECTION") {
                let (n, _) = require_dimension(&header, line_no)?;
                check_weight_type(&header, line_no)?;
                section_line = line_no;
                if keyword == "NODE_COORD_SECTION" {
                    section = Section::NodeCoords;
                    coords = vec![None; n];
                } else {
                    section = Section::EdgeWeights;
                    weights.reserve(n * n);
                }
                continue;
            }
            if section != Section::Header {
                return Err(Error::parse(
                    line_no,
                    format!("header keyword {keyword} after data section"),
                ));
            }
            let value = header_value(line, keyword, line_no)?;
            match keyword {
                "NAME" => header.name = Some(value.to_string()),
                "COMMENT" | "DISPLAY_DATA_TYPE" => {}
                "TYPE" => {
                    if value != "TSP" {
                        return Err(Error::parse(
                            line_no,
                            format!("unsupported TYPE {value}, only TSP is supported"),
                        ));
                    }
                    header.problem_type = Some(value.to_string());
                }
                "DIMENSION" => {
                    let n: usize = value.parse().map_err(|_| {
                        Error::parse(line_no, format!("DIMENSION {value:?} is not an integer"))
                    })?;
                    if n < 2 {
                        return Err(Error::parse(
                            line_no,
                            format!("DIMENSION must be at least 2, got {n}"),
                        ));
                    }
                    header.dimension = Some((n, line_no));
                }
                "EDGE_WEIGHT_TYPE" => {
                    if !matches!(value, "EUC_2D" | "EXPLICIT") {
                        return Err(Error::parse(
                            line_no,
                            format!("unsupported EDGE_WEIGHT_TYPE {value}"),
                        ));
                    }
                    header.weight_type = Some((value.to_string(), line_no));
                }
                "EDGE_WEIGHT_FORMAT" => {
                    if value != "FULL_MATRIX" {
                        return Err(Error::parse(
                            line_no,
                            format!("unsupported EDGE_WEIGHT_FORMAT {value}"),
                        ));
                    }
                    header.weight_format = Some((value.to_string(), line_no));
                }
                _ => unreachable!("is_keyword covers the match"),
            }
            continue;
        }

        match section {
            Section::Header => {
                return Err(Error::parse(
                    line_no,
                    format!("unrecognized header line {line:?}"),
                ))
            }
            Section::NodeCoords => {
                let n = coords.len();
                let mut fields = line.split_whitespace();
                let (Some(id), Some(x), Some(y), None) =
                    (fields.next(), fields.next(), fields.next(), fields.next())
                else {
                    return Err(Error::parse(
                        line_no,
                        "coordinate line must be `<id> <x> <y>`",
                    ));
                };
                let id: usize = id.parse().map_err(|_| {
                    Error::parse(line_no, format!("node id {id:?} is not an integer"))
                })?;
                if id == 0 || id > n {
                    return Err(Error::parse(
                        line_no,
                        format!("node id {id} outside 1..={n} (DIMENSION/coordinate mismatch)"),
                    ));
                }
                let x = parse_number(x, line_no)?;
                let y = parse_number(y, line_no)?;
                if coords[id - 1].replace((x, y)).is_some() {
                    return Err(Error::parse(line_no, format!("duplicate node id {id}")));
                }
                coord_count += 1;
            }
            Section::EdgeWeights => {
                let n = header.dimension.map(|d| d.0).unwrap_or(0);
                for tok in line.split_whitespace() {
                    if weights.len() == n * n {
                        return Err(Error::parse(
                            line_no,
                            format!("more than {} edge weights for DIMENSION {n}", n * n),
                        ));
                    }
                    weights.push(parse_number(tok, line_no)?);
                }
            }
        }
    }

    let (n, _) = require_dimension(&header, last_line + 1)?;
    let (weight_type, _) = check_weight_type(&header, last_line + 1)?;
    let name = header.name.unwrap_or_else(|| "unnamed".to_string());
    let end = last_line + 1;
    let invalid = |e: Error| match e {
        Error::InvalidInstance(m) => Error::parse(section_line, m),
        other => other,
    };

    match weight_type {
        WeightKind::Euc2d => {
            if section != Section::NodeCoords {
                return Err(Error::parse(end, "missing NODE_COORD_SECTION"));
            }
            if coord_count != n {
                return Err(Error::parse(
                    end,
                    format!("DIMENSION is {n} but {coord_count} coordinates were given"),
                ));
            }
            let coords = coords
                .into_iter()
                .map(|c| c.expect("all ids seen"))
                .collect();
            Instance::from_coords(name, coords).map_err(invalid)
        }
        WeightKind::ExplicitFullMatrix => {
            if section != Section::EdgeWeights {
                return Err(Error::parse(end, "missing EDGE_WEIGHT_SECTION"));
            }
            if weights.len() != n * n {
                return Err(Error::parse(
                    end,
                    format!(
                        "DIMENSION {n} needs {} edge weights, found {}",
                        n * n,
                        weights.len()
                    ),
                ));
            }
            let rows = weights.chunks(n).map(<[f64]>::to_vec).collect();
            Instance::from_matrix(name, rows).map_err(invalid)
        }
    }
}

/// Reads and parses a TSPLIB file.
pub fn read_tsplib(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_tsplib(&text)
}

/// Serializes an instance back to TSPLIB text that [`parse_tsplib`] reads
/// into an identical instance.
pub fn to_tsplib(inst: &Instance) -> String {
    let n = inst.n();
    let mut out = String::new();
    let _ = writeln!(out, "NAME: {}", inst.name());
    let _ = writeln!(out, "TYPE: TSP");
    let _ = writeln!(out, "DIMENSION: {n}");
    match (inst.weight_kind(), inst.coords()) {
        (WeightKind::Euc2d, Some(coords)) => {
            let _ = writeln!(out, "EDGE_WEIGHT_TYPE: EUC_2D");
            let _ = writeln!(out, "NODE_COORD_SECTION");
            for (i, (x, y)) in coords.iter().enumerate() {
                let _ = writeln!(out, "{} {x} {y}", i + 1);
            }
        }
        _ => {
            let _ = writeln!(out, "EDGE_WEIGHT_TYPE: EXPLICIT");
            let _ = writeln!(out, "EDGE_WEIGHT_FORMAT: FULL_MATRIX");
            let _ = writeln!(out, "EDGE_WEIGHT_SECTION");
            for i in 0..n {
                let row: Vec<String> = inst.row(i).iter().map(f64::to_string).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out.push_str("EOF\n");
    out
}

fn is_keyword(word: &str) -> bool {
    matches!(
        word,
        "NAME"
            | "TYPE"
            | "COMMENT"
            | "DIMENSION"
            | "EDGE_WEIGHT_TYPE"
            | "EDGE_WEIGHT_FORMAT"
            | "DISPLAY_DATA_TYPE"
            | "NODE_COORD_SECTION"
            | "EDGE_WEIGHT_SECTION"
    )
}

fn header_value<'a>(line: &'a str, keyword: &str, line_no: usize) -> Result<&'a str> {
    let rest = line[keyword.len()..].trim_start();
    let Some(value) = rest.strip_prefix(':') else {
        return Err(Error::parse(
            line_no,
            format!("expected `{keyword} : <value>`"),
        ));
    };
    let value = value.trim();
    if value.is_empty() && keyword != "COMMENT" {
        return Err(Error::parse(line_no, format!("{keyword} has no value")));
    }
    Ok(value)
}

fn parse_number(tok: &str, line_no: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::parse(line_no, format!("{tok:?} is not a number"))),
    }
}

fn require_dimension(header: &Header, line_no: usize) -> Result<(usize, usize)> {
    header
        .dimension
        .ok_or_else(|| Error::parse(line_no, "DIMENSION must be declared before data"))
}

fn check_weight_type(header: &Header, line_no: usize) -> Result<(WeightKind, usize)> {
    let Some((kind, at)) = &header.weight_type else {
        return Err(Error::parse(line_no, "missing EDGE_WEIGHT_TYPE"));
    };
    match kind.as_str() {
        "EUC_2D" => Ok((WeightKind::Euc2d, *at)),
        _ => match &header.weight_format {
            Some(_) => Ok((WeightKind::ExplicitFullMatrix, *at)),
            None => Err(Error::parse(
                line_no,
                "EDGE_WEIGHT_TYPE EXPLICIT requires EDGE_WEIGHT_FORMAT: FULL_MATRIX",
            )),
        },
    }
}
