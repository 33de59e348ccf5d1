use std::path::PathBuf;

use antsys_core::oracle::{BRUTE_FORCE_MAX_N, HELD_KARP_MAX_N};
use antsys_core::{brute_force_optimum, held_karp_exact, read_tsplib, Error};
use anyhow::anyhow;
use clap::Args;

use crate::CmdResult;

#[derive(Debug, Args)]
pub struct ExactArgs {
    /// TSPLIB instance file.
    instance: PathBuf,
}

pub fn run(args: ExactArgs) -> CmdResult {
    let inst = read_tsplib(&args.instance)?;
    if inst.n() > HELD_KARP_MAX_N {
        return Err(Error::TooLarge {
            algorithm: "held-karp",
            n: inst.n(),
            limit: HELD_KARP_MAX_N,
        }
        .into());
    }
    let hk = held_karp_exact(&inst)?;
    let order: Vec<String> = hk.order().iter().map(usize::to_string).collect();
    println!("instance: {}", inst.name());
    println!("n:        {}", inst.n());
    println!("optimum:  {}", hk.length());
    println!("tour:     {}", order.join(" "));
    if inst.n() <= BRUTE_FORCE_MAX_N {
        let bf = brute_force_optimum(&inst)?;
        if bf.length() != hk.length() {
            return Err(anyhow!(
                "oracles disagree: held-karp {} vs brute force {}",
                hk.length(),
                bf.length()
            )
            .into());
        }
        println!("brute_force: agrees ({})", bf.length());
    }
    Ok(())
}
