mod claims;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand};
use claims::{registry, Claim, Context, Suite};
use flate2::write::GzEncoder;
use flate2::Compression;
use leechlab_core::hyperbolic::RootSet;
use leechlab_core::permchar::{character_table, table_grid};
use leechlab_core::quadform::{format_factors, smith_normal_form, GramMatrix};
use serde::Serialize;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

/// Recomputes a family of lattice and group-theory facts from first
/// principles and reports which ones hold. LEECHLAB_SEED is reserved
/// for future use; every computation here is deterministic.
#[derive(Parser)]
#[command(name = "leechlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the report as a JSON array
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Only run claims whose id matches this glob (* and ?)
    #[arg(long, global = true, value_name = "GLOB")]
    filter: Option<String>,

    /// Number of worker threads (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Golay code claims
    Golay {
        /// Print the 759 octads, one per line, as sorted labels
        #[arg(long)]
        dump_octads: bool,
        /// With --dump-octads: print six-digit hex masks instead
        #[arg(long)]
        hex: bool,
    },
    /// Leech lattice claims
    Leech {
        /// Dump all norm -4 vectors (count header, then 24 integers per line)
        #[arg(long)]
        dump_norm4: bool,
        /// With --dump-norm4: gzip-frame the dump
        #[arg(long)]
        gzip: bool,
    },
    /// Leech root claims
    Roots {
        /// Print the six roots as 26 integers per line
        #[arg(long)]
        dump_roots: bool,
    },
    /// Pentagon configuration claims
    Pentagon,
    /// Discriminant form claims
    Quadform {
        /// Read a Gram matrix file and print its invariant factors
        #[arg(long, value_name = "PATH")]
        snf: Option<PathBuf>,
    },
    /// Character and subgroup claims
    Chars {
        /// Print the 7 x 7 character table
        #[arg(long)]
        dump_table: bool,
    },
    /// Root-orbit partition claims
    Niemeier,
    /// Cubic pencil claims
    Hesse {
        /// Print the fiber table as CSV
        #[arg(long)]
        dump_fibers: bool,
    },
    /// Run every registered claim
    VerifyAll,
    /// Print the claim registry without running anything
    ListClaims,
}

#[derive(Serialize)]
struct ClaimResult {
    claim: String,
    paper_ref: String,
    expected: String,
    computed: String,
    pass: bool,
    ms: u64,
}

fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    // dp[j] = pattern[..i] can consume text[..j]
    let mut dp = vec![false; t.len() + 1];
    dp[0] = true;
    for &pc in &p {
        let mut next = vec![false; t.len() + 1];
        if pc == '*' {
            let mut seen = false;
            for j in 0..=t.len() {
                seen |= dp[j];
                next[j] = seen;
            }
        } else {
            for j in 0..t.len() {
                next[j + 1] = dp[j] && (pc == '?' || pc == t[j]);
            }
        }
        dp = next;
    }
    dp[t.len()]
}

fn suites_for(command: &Command) -> Option<Vec<Suite>> {
    match command {
        Command::Golay { .. } => Some(vec![Suite::Golay]),
        Command::Leech { .. } => Some(vec![Suite::Leech]),
        Command::Roots { .. } => Some(vec![Suite::Roots]),
        Command::Pentagon => Some(vec![Suite::Pentagon]),
        Command::Quadform { .. } => Some(vec![Suite::Quadform]),
        Command::Chars { .. } => Some(vec![Suite::Chars]),
        Command::Niemeier => Some(vec![Suite::Niemeier]),
        Command::Hesse { .. } => Some(vec![Suite::Hesse]),
        Command::VerifyAll => Some(vec![
            Suite::Golay,
            Suite::Leech,
            Suite::Roots,
            Suite::Pentagon,
            Suite::Quadform,
            Suite::Chars,
            Suite::Niemeier,
            Suite::Hesse,
            Suite::Cli,
        ]),
        Command::ListClaims => None,
    }
}

fn run_claims(selected: Vec<&'static Claim>) -> Vec<ClaimResult> {
    let ctx = Context::new();
    let mut results: Vec<ClaimResult> = {
        use rayon::prelude::*;
        selected
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let computed = (c.run)(&ctx);
                ClaimResult {
                    claim: c.id.to_string(),
                    paper_ref: c.paper_ref.to_string(),
                    expected: c.expected.to_string(),
                    computed: computed.clone(),
                    pass: computed == c.expected,
                    ms: start.elapsed().as_millis() as u64,
                }
            })
            .collect()
    };
    results.sort_by(|a, b| a.claim.cmp(&b.claim));
    results
}

fn render_human(results: &[ClaimResult]) -> String {
    let mut s = String::new();
    let id_width = results.iter().map(|r| r.claim.len()).max().unwrap_or(0);
    for r in results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "{status}  {:<id_width$}  {}  ({} ms)\n",
            r.claim, r.computed, r.ms
        ));
        if !r.pass {
            s.push_str(&format!("      expected: {}\n", r.expected));
            s.push_str(&format!("      source:   {}\n", r.paper_ref));
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let total_ms: u64 = results.iter().map(|r| r.ms).sum();
    s.push_str(&format!(
        "{} claims, {} passed, {} failed ({} ms total)\n",
        results.len(),
        passed,
        results.len() - passed,
        total_ms
    ));
    s
}

fn emit(cli: &Cli, bytes: &[u8]) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn dump(cli: &Cli) -> Result<Option<ExitCode>> {
    let text = match &cli.command {
        Command::Golay {
            dump_octads: true,
            hex,
        } => {
            let code = leechlab_core::GolayCode::build();
            let mut s = String::new();
            for o in code.octads() {
                if *hex {
                    s.push_str(&o.hex_mask());
                } else {
                    s.push_str(&o.label_csv());
                }
                s.push('\n');
            }
            s
        }
        Command::Leech {
            dump_norm4: true,
            gzip,
        } => {
            let l = leechlab_core::LeechLattice::new();
            let census = l.norm_four_census();
            let mut s = String::with_capacity(1 << 24);
            s.push_str(&format!("{}\n", census.total()));
            l.for_each_norm_four(|v| {
                let line: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
                s.push_str(&line.join(" "));
                s.push('\n');
            });
            if *gzip {
                let mut enc = GzEncoder::new(Vec::new(), Compression::default());
                enc.write_all(s.as_bytes())?;
                let bytes = enc.finish()?;
                emit(cli, &bytes)?;
                return Ok(Some(ExitCode::SUCCESS));
            }
            s
        }
        Command::Roots { dump_roots: true } => {
            let l = leechlab_core::LeechLattice::new();
            let rs = RootSet::standard(&l);
            let mut s = String::new();
            for r in &rs.roots {
                let mut fields: Vec<String> =
                    r.leech.coords().iter().map(|c| c.to_string()).collect();
                fields.push(r.m.to_string());
                fields.push(r.n.to_string());
                s.push_str(&fields.join(" "));
                s.push('\n');
            }
            s
        }
        Command::Quadform { snf: Some(path) } => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let gram = GramMatrix::from_str(&text).context("parsing Gram matrix")?;
            let snf = smith_normal_form(&gram.rows());
            format!("{}\n", format_factors(&snf.nontrivial_factors()))
        }
        Command::Chars { dump_table: true } => table_grid(&character_table()),
        Command::Hesse { dump_fibers: true } => {
            leechlab_core::fiber_csv(&leechlab_core::base_change_fibers())
        }
        _ => return Ok(None),
    };
    emit(cli, text.as_bytes())?;
    Ok(Some(ExitCode::SUCCESS))
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();

    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }

    if let Some(code) = dump(&cli)? {
        return Ok(code);
    }

    if matches!(cli.command, Command::ListClaims) {
        let mut s = String::new();
        for c in registry() {
            s.push_str(&format!("{}: {}  [{}]\n", c.id, c.expected, c.paper_ref));
        }
        emit(&cli, s.as_bytes())?;
        return Ok(ExitCode::SUCCESS);
    }

    let suites = suites_for(&cli.command).expect("claim-running command");
    let selected: Vec<&'static Claim> = registry()
        .iter()
        .filter(|c| suites.contains(&c.suite))
        .filter(|c| {
            cli.filter
                .as_deref()
                .map_or(true, |pat| glob_match(pat, c.id))
        })
        .collect();

    let results = run_claims(selected);

    let bytes = if cli.json {
        let mut s = serde_json::to_string_pretty(&results)?;
        s.push('\n');
        s.into_bytes()
    } else {
        render_human(&results).into_bytes()
    };
    emit(&cli, &bytes)?;

    let failing: Vec<&str> = results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.claim.as_str())
        .collect();
    if failing.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("failing claims: {}", failing.join(", "));
        Ok(ExitCode::FAILURE)
    }
}
