use std::path::PathBuf;

use antsys_core::{to_tsplib, Instance};
use anyhow::Context;
use clap::Args;

use crate::CmdResult;

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Number of cities (at least 2).
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file [default: standard output].
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: GenArgs) -> CmdResult {
    let inst = Instance::random_uniform(args.n as usize, args.seed)?;
    let text = to_tsplib(&inst);
    match args.out {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}
