//! Command line front end: build code descriptions, encode messages, push
//! words through the rank-error channel, decode, and inspect codewords as
//! form matrices.
//!
//! Exit codes: 0 success, 2 bad input, 3 decode failure, 4 enumeration guard.

mod specfile;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};

use rankforms::channel::{error_rank, random_rank_error};
use rankforms::code::{self, make_code_spec, CodeParams, CodeSpec, Family};
use rankforms::decoder;
use rankforms::field::Element;
use rankforms::oracle;

const EXIT_PARSE: u8 = 2;
const EXIT_DECODE: u8 = 3;
const EXIT_GUARD: u8 = 4;

#[derive(Parser)]
#[command(
    name = "rankforms",
    about = "Rank-metric codes of symmetric, alternating and Hermitian forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Create a code description file, resolving canonical defaults
    Spec {
        /// symmetric | alternating | hermitian-mixed | hermitian-odd
        #[arg(long)]
        family: String,
        /// Field characteristic
        #[arg(long)]
        p: u64,
        /// q = p^s
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Code length (matrix side)
        #[arg(long)]
        n: usize,
        /// Designed minimum rank distance
        #[arg(long)]
        d: usize,
        /// Comma-separated little-endian F_p coefficients of the field modulus
        #[arg(long)]
        modulus: Option<String>,
        /// Comma-separated integer forms of the n evaluation basis points
        #[arg(long)]
        basis: Option<String>,
        /// Integer form of eta (Hermitian families only)
        #[arg(long)]
        eta: Option<u128>,
        /// Output path
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Encode a message into a codeword
    Encode {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated message coordinates (integer or z^k form)
        message: String,
    },
    /// Add a random error of exact given rank to a word
    Corrupt {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated word entries
        word: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decode a received word back to its message
    Decode {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated word entries
        word: String,
        /// Also print the interpolation artifacts
        #[arg(long)]
        verbose: bool,
    },
    /// Print the form matrix of a message's codeword
    Matrix {
        #[arg(long)]
        spec: PathBuf,
        message: String,
    },
    /// Exhaustively check optimality: cardinality bound and minimum distance
    Verify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run a small end-to-end walkthrough (1 = symmetric, 2 = alternating,
    /// 3 = hermitian)
    Demo {
        #[arg(long, default_value_t = 1)]
        example: u32,
    },
}

fn parse_word(spec: &CodeSpec, text: &str, expected: usize) -> Result<Vec<Element>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != expected {
        bail!("expected {expected} comma-separated entries, got {}", parts.len());
    }
    parts
        .iter()
        .map(|t| spec.ctx().parse(t).map_err(|e| anyhow!("{t:?}: {e}")))
        .collect()
}

fn show_word(spec: &CodeSpec, word: &[Element]) -> String {
    let ctx = spec.ctx();
    word.iter()
        .map(|e| ctx.render(e))
        .collect::<Vec<_>>()
        .join(",")
}

fn show_word_log(spec: &CodeSpec, word: &[Element]) -> Option<String> {
    let ctx = spec.ctx();
    let parts: Option<Vec<String>> = word.iter().map(|e| ctx.render_log(e)).collect();
    Some(parts?.join(", "))
}

/// Print a labelled word, with the power-of-z form alongside when available.
fn print_word(spec: &CodeSpec, label: &str, word: &[Element]) {
    match show_word_log(spec, word) {
        Some(log) => println!("{label} = ({log})"),
        None => println!("{label} = ({})", show_word(spec, word)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Spec {
            family,
            p,
            s,
            n,
            d,
            modulus,
            basis,
            eta,
            out,
        } => {
            let family =
                Family::parse(&family).ok_or_else(|| anyhow!("unknown family {family:?}"))?;
            let modulus = modulus
                .map(|m| {
                    m.split(',')
                        .map(|t| t.trim().parse::<u64>().map_err(Into::into))
                        .collect::<Result<Vec<u64>>>()
                })
                .transpose()?;
            let basis = basis
                .map(|b| {
                    b.split(',')
                        .map(|t| t.trim().parse::<u128>().map_err(Into::into))
                        .collect::<Result<Vec<u128>>>()
                })
                .transpose()?;
            let spec = make_code_spec(&CodeParams {
                family,
                p,
                s,
                n,
                d,
                modulus,
                basis,
                eta,
            })
            .map_err(|e| anyhow!("{e}"))?;
            specfile::save(&spec, &out)?;
            println!(
                "{} code: n={n} d={d} k={} over F_{}^{} (radius {})",
                family.name(),
                spec.k(),
                p,
                spec.ctx().top_degree(),
                spec.radius()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { spec, message } => {
            let spec = specfile::load(&spec)?;
            let f = parse_word(&spec, &message, spec.k())?;
            let word = code::encode(&spec, &f).map_err(|e| anyhow!("{e}"))?;
            println!("{}", show_word(&spec, &word));
            Ok(ExitCode::SUCCESS)
        }
        Command::Corrupt {
            spec,
            word,
            rank,
            seed,
        } => {
            let spec = specfile::load(&spec)?;
            let w = parse_word(&spec, &word, spec.n())?;
            if rank > spec.n() {
                bail!("rank {rank} exceeds length {}", spec.n());
            }
            let ctx = spec.ctx();
            let e = random_rank_error(&spec, rank, seed);
            let r: Vec<Element> = w.iter().zip(&e).map(|(a, b)| ctx.add(a, b)).collect();
            println!("{}", show_word(&spec, &r));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode {
            spec,
            word,
            verbose,
        } => {
            let spec = specfile::load(&spec)?;
            let w = parse_word(&spec, &word, spec.n())?;
            match decoder::decode(&spec, &w) {
                Ok(out) => {
                    if verbose {
                        print_word(&spec, "beta", &out.beta);
                        print_word(&spec, "lambda", &out.lambda);
                        print_word(&spec, "g~", &out.error_coeffs);
                        print_word(&spec, "f~", &out.coeffs);
                        print_word(&spec, "error", &out.error);
                        println!("error rank = {}", out.rank);
                    }
                    println!("{}", show_word(&spec, &out.message));
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("decode failed: {err}");
                    Ok(ExitCode::from(EXIT_DECODE))
                }
            }
        }
        Command::Matrix { spec, message } => {
            let spec = specfile::load(&spec)?;
            let f = parse_word(&spec, &message, spec.k())?;
            let m = code::to_matrix_form(&spec, &f).map_err(|e| anyhow!("{e}"))?;
            let ctx = spec.ctx();
            for i in 0..spec.n() {
                let row: Vec<String> =
                    (0..spec.n()).map(|j| ctx.render(m.at(i, j))).collect();
                println!("{}", row.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { spec } => {
            let spec = specfile::load(&spec)?;
            let bound = oracle::size_bound(&spec);
            if bound > oracle::ENUM_GUARD {
                eprintln!(
                    "message space has {bound} elements, above the 2^20 enumeration guard"
                );
                return Ok(ExitCode::from(EXIT_GUARD));
            }
            let census = oracle::exhaustive_census(&spec);
            println!("codewords: {} (bound {})", census.codewords, bound);
            println!("minimum rank distance: {} (designed {})", census.min_distance, spec.d());
            if census.codewords == bound && census.min_distance == spec.d() {
                println!("optimal: yes");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("optimal: no");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Demo { example } => {
            demo(example)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn demo(example: u32) -> Result<()> {
    let (params, message, title): (CodeParams, Vec<&str>, &str) = match example {
        1 => (
            CodeParams {
                family: Family::Symmetric,
                p: 2,
                s: 1,
                n: 7,
                d: 5,
                modulus: None,
                basis: None,
                eta: None,
            },
            vec!["z^7", "z^13"],
            "symmetric forms, n=7, d=5 over F_2^7",
        ),
        2 => (
            CodeParams {
                family: Family::Alternating,
                p: 2,
                s: 1,
                n: 9,
                d: 6,
                modulus: None,
                basis: None,
                eta: None,
            },
            vec!["z^77", "z^397"],
            "alternating forms, n=9, d=6 over F_2^9",
        ),
        3 => (
            CodeParams {
                family: Family::HermitianOdd,
                p: 2,
                s: 1,
                n: 7,
                d: 5,
                modulus: None,
                basis: None,
                eta: None,
            },
            // coordinates live in F_{2^7}, the subgroup generated by z^129
            vec!["z^645", "z^1290", "z^5031"],
            "Hermitian forms, n=7, d=5 over F_2^14",
        ),
        other => bail!("no demo number {other}; choose 1, 2 or 3"),
    };
    let spec = make_code_spec(&params).map_err(|e| anyhow!("{e}"))?;
    let ctx = spec.ctx();
    println!("demo {example}: {title}");
    println!(
        "k = {}, unique decoding radius t = {}",
        spec.k(),
        spec.radius()
    );
    print_word(&spec, "basis", spec.basis().points());
    let f = parse_word(&spec, &message.join(","), spec.k())?;
    print_word(&spec, "message f", &f);
    let ft = code::expand_message(&spec, &f).map_err(|e| anyhow!("{e}"))?;
    print_word(&spec, "coefficients f~", &ft);
    let c = code::encode(&spec, &f).map_err(|e| anyhow!("{e}"))?;
    print_word(&spec, "codeword c", &c);
    let t = spec.radius();
    let e = random_rank_error(&spec, t, 7);
    print_word(&spec, &format!("channel error (rank {t})"), &e);
    assert_eq!(error_rank(&spec, &e), t);
    let r: Vec<Element> = c.iter().zip(&e).map(|(a, b)| ctx.add(a, b)).collect();
    print_word(&spec, "received r", &r);
    let out = decoder::decode(&spec, &r).map_err(|err| anyhow!("decode failed: {err}"))?;
    print_word(&spec, "interpolator beta", &out.beta);
    print_word(&spec, "recurrence lambda", &out.lambda);
    print_word(&spec, "error interpolator g~", &out.error_coeffs);
    print_word(&spec, "recovered f~", &out.coeffs);
    print_word(&spec, "recovered f", &out.message);
    if out.message == f {
        println!("round trip: ok");
    } else {
        bail!("round trip mismatch");
    }
    Ok(())
}
