//! Command-line experiment runner.
//!
//! Subcommands:
//!   run <config.toml>            execute one scenario
//!   sweep <config.toml> <grid>   parameter sweep driven by a grid file
//!   verify                       identity oracles only (no PDE run)
//! Options: --out <dir>  --seed <n>  --threads <n>

use kinklab::harness;
use std::path::PathBuf;
use std::process::ExitCode;

struct Cli {
    command: Command,
    out: PathBuf,
    seed: Option<u64>,
    threads: usize,
}

enum Command {
    Run(PathBuf),
    Sweep(PathBuf, PathBuf),
    Verify,
}

fn parse_args() -> Result<Cli, String> {
    let mut args = std::env::args().skip(1);
    let sub = args.next().ok_or("missing subcommand (run|sweep|verify)")?;
    let mut positional = Vec::new();
    let mut out = PathBuf::from("out");
    let mut seed = None;
    let mut threads = 1;
    while let Some(a) = args.next() {
        match a.as_str() {
            "--out" => out = PathBuf::from(args.next().ok_or("--out needs a value")?),
            "--seed" => {
                seed = Some(
                    args.next()
                        .ok_or("--seed needs a value")?
                        .parse::<u64>()
                        .map_err(|e| format!("bad seed: {e}"))?,
                )
            }
            "--threads" => {
                threads = args
                    .next()
                    .ok_or("--threads needs a value")?
                    .parse::<usize>()
                    .map_err(|e| format!("bad thread count: {e}"))?
            }
            other => positional.push(PathBuf::from(other)),
        }
    }
    let command = match sub.as_str() {
        "run" => Command::Run(
            positional
                .first()
                .cloned()
                .ok_or("run needs a config path")?,
        ),
        "sweep" => Command::Sweep(
            positional
                .first()
                .cloned()
                .ok_or("sweep needs a config path")?,
            positional
                .get(1)
                .cloned()
                .ok_or("sweep needs a grid file")?,
        ),
        "verify" => Command::Verify,
        other => return Err(format!("unknown subcommand {other}")),
    };
    Ok(Cli {
        command,
        out,
        seed,
        threads,
    })
}

fn main() -> ExitCode {
    let cli = match parse_args() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("usage: kinklab run <config> | sweep <config> <grid> | verify  [--out DIR] [--seed N] [--threads N]");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Run(config) => {
            let cfg = match harness::ExperimentConfig::load(&config) {
                Ok(mut c) => {
                    if let Some(s) = cli.seed {
                        c.experiment.seed = s;
                    }
                    c
                }
                Err(e) => {
                    eprintln!("config error: {e}");
                    return ExitCode::from(2);
                }
            };
            harness::run(&cfg, &cli.out).map(|outcome| {
                for (check, ok) in &outcome.manifest.checks {
                    println!("{} {}", if *ok { "PASS" } else { "FAIL" }, check);
                }
                println!(
                    "wrote {} files to {} (hash {})",
                    outcome.manifest.files.len(),
                    cli.out.display(),
                    &outcome.manifest.content_hash[..16]
                );
                outcome.all_passed
            })
        }
        Command::Sweep(config, grid) => {
            harness::sweep_from_files(&config, &grid, &cli.out, cli.threads).map(|rows| {
                for row in &rows {
                    println!("{}: {}", row.label, row.status);
                }
                println!("aggregate table in {}", cli.out.join("aggregate.csv").display());
                rows.iter().all(|r| !r.status.starts_with("error"))
            })
        }
        Command::Verify => {
            let cfg = {
                let mut c = harness::verify_config();
                if let Some(s) = cli.seed {
                    c.experiment.seed = s;
                }
                c
            };
            harness::run(&cfg, &cli.out).map(|outcome| {
                for (check, ok) in &outcome.manifest.checks {
                    println!("{} {}", if *ok { "PASS" } else { "FAIL" }, check);
                }
                outcome.all_passed
            })
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("run failed: {e}");
            ExitCode::FAILURE
        }
    }
}
