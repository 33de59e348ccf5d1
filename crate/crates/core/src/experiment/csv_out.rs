use super::{CellStats, RunRecord};
use crate::error::Result;

pub const SUMMARY_HEADER: [&str; 8] = [
    "instance",
    "algorithm",
    "best",
    "mean",
    "std",
    "mean_rel_err",
    "mean_time_s",
    "mean_iters_to_best",
];

pub const RUNS_HEADER: [&str; 7] = [
    "instance",
    "algorithm",
    "seed",
    "best_length",
    "iters_to_best",
    "escapes",
    "time_s",
];

/// Renders `(summary.csv, runs.csv)`. Floats use the shortest representation
/// that parses back to the same value; an unknown relative error is empty.
pub fn emit_csv(cells: &[CellStats], runs: &[RunRecord]) -> Result<(String, String)> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER)?;
    for c in cells {
        w.write_record([
            c.instance.clone(),
            c.algorithm.to_string(),
            c.best.to_string(),
            c.mean.to_string(),
            c.std.to_string(),
            c.mean_relative_error
                .map(|v| v.to_string())
                .unwrap_or_default(),
            c.mean_time.to_string(),
            c.mean_iterations_to_best.to_string(),
        ])?;
    }
    let summary = finish(w)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(RUNS_HEADER)?;
    for r in runs {
        w.write_record([
            r.instance.clone(),
            r.algorithm.to_string(),
            r.seed.to_string(),
            r.best_length.to_string(),
            r.iters_to_best.to_string(),
            r.escapes.to_string(),
            r.time_s.to_string(),
        ])?;
    }
    Ok((summary, finish(w)?))
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is built from strings"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aco::Algorithm;

    #[test]
    fn quotes_awkward_names_and_leaves_unknown_error_empty() {
        let cell = CellStats {
            instance: "a,\"b\"".into(),
            algorithm: Algorithm::Eas,
            best: 12.0,
            mean: 12.5,
            std: 0.5,
            mean_relative_error: None,
            mean_time: 0.25,
            mean_iterations_to_best: 3.0,
        };
        let (summary, runs) = emit_csv(&[cell], &[]).unwrap();
        assert_eq!(
            summary,
            "instance,algorithm,best,mean,std,mean_rel_err,mean_time_s,mean_iters_to_best\n\
             \"a,\"\"b\"\"\",eas,12,12.5,0.5,,0.25,3\n"
        );
        assert_eq!(
            runs,
            "instance,algorithm,seed,best_length,iters_to_best,escapes,time_s\n"
        );
    }

    #[test]
    fn floats_round_trip() {
        let v = 0.1 + 0.2;
        let run = RunRecord {
            instance: "x".into(),
            algorithm: Algorithm::Meas,
            seed: 7,
            best_length: v,
            iters_to_best: 4,
            escapes: 1,
            time_s: 1e-7,
        };
        let (_, runs) = emit_csv(&[], &[run]).unwrap();
        let mut rd = csv::Reader::from_reader(runs.as_bytes());
        let rec = rd.records().next().unwrap().unwrap();
        assert_eq!(rec[3].parse::<f64>().unwrap(), v);
        assert_eq!(rec[6].parse::<f64>().unwrap(), 1e-7);
    }
}
