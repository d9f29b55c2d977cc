//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse or I/O error, 3 domain
//! precondition violated (unknown generator, zero exponent, missing oriented
//! edge, chain requested on a cycle-free graph, ...).

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::decide::{certify_not_left_orderable, classify};
use crate::dsl::parse_graph;
use crate::graph::{MixedGraph, SourceElimination};
use crate::klein::{klein_coords, Cone, KleinContext};
use crate::report::{classification_json, render_chain, render_classification};
use crate::rewrite::{eq, reduce, torsion_probe, RewriteError};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser)]
#[command(
    name = "traag",
    version,
    about = "Decide orderability of twisted right-angled Artin groups and solve their word problem"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a graph: torsion-freeness, left- and bi-orderability, with
    /// certificates
    Analyze {
        /// Graph file (vertex/edge/arrow lines)
        file: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Word-problem operations
    #[command(subcommand)]
    Word(WordCmd),
    /// Produce standalone certificates
    #[command(subcommand)]
    Certify(CertifyCmd),
}

#[derive(Subcommand)]
enum WordCmd {
    /// Print the reduced form of a word (`1` for the identity)
    Reduce { file: PathBuf, word: String },
    /// Decide whether two words represent the same element
    Eq { file: PathBuf, first: String, second: String },
    /// Probe a word for a finite order up to a bound
    Torsion {
        file: PathBuf,
        word: String,
        /// Largest exponent to try
        #[arg(long, default_value_t = 16)]
        max: u32,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Print the contradiction chain showing the group admits no left-order
    Nonorderable { file: PathBuf },
    /// Print a source-elimination tower, or the oriented cycle blocking one
    Tower { file: PathBuf },
    /// Compare two words of a Klein-bottle subgroup under a chosen cone
    #[command(name = "klein-cmp")]
    KleinCmp {
        file: PathBuf,
        /// The oriented edge spanning the subgroup: origin then target
        #[arg(long, num_args = 2, value_names = ["ORIGIN", "TARGET"])]
        edge: Vec<String>,
        /// Cone parameters, e.g. `+1,+1`
        #[arg(long, allow_hyphen_values = true)]
        cone: String,
        first: String,
        second: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl fmt::Display) -> Failure {
    Failure { code, message: message.to_string() }
}

fn domain(err: impl fmt::Display) -> Failure {
    fail(EXIT_DOMAIN, err)
}

fn load_graph(path: &Path) -> Result<MixedGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| fail(EXIT_PARSE, format!("{}:{e}", path.display())))
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse::<Word>().map_err(|e| {
        let code = if e.is_domain() { EXIT_DOMAIN } else { EXIT_PARSE };
        fail(code, format!("invalid word `{text}`: {e}"))
    })
}

fn rewrite_failure(err: RewriteError) -> Failure {
    domain(err)
}

/// Parses `args` and runs the selected command, returning the process exit
/// code. Reports go to stdout, diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{err}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Analyze { file, json } => {
            let g = load_graph(&file)?;
            let classification = classify(&g);
            if json {
                println!("{}", classification_json(&classification));
            } else {
                print!("{}", render_classification(&classification));
            }
            Ok(())
        }
        Cmd::Word(word_cmd) => dispatch_word(word_cmd),
        Cmd::Certify(certify_cmd) => dispatch_certify(certify_cmd),
    }
}

fn dispatch_word(cmd: WordCmd) -> Result<(), Failure> {
    match cmd {
        WordCmd::Reduce { file, word } => {
            let g = load_graph(&file)?;
            let w = parse_word(&word)?;
            let reduced = reduce(&g, &w).map_err(rewrite_failure)?;
            println!("{reduced}");
            Ok(())
        }
        WordCmd::Eq { file, first, second } => {
            let g = load_graph(&file)?;
            let w1 = parse_word(&first)?;
            let w2 = parse_word(&second)?;
            let equal = eq(&g, &w1, &w2).map_err(rewrite_failure)?;
            println!("{equal}");
            Ok(())
        }
        WordCmd::Torsion { file, word, max } => {
            if max < 2 {
                return Err(domain("--max must be at least 2"));
            }
            let g = load_graph(&file)?;
            let w = parse_word(&word)?;
            match torsion_probe(&g, &w, max).map_err(rewrite_failure)? {
                Some(order) => println!("{order}"),
                None => println!("none"),
            }
            Ok(())
        }
    }
}

fn dispatch_certify(cmd: CertifyCmd) -> Result<(), Failure> {
    match cmd {
        CertifyCmd::Nonorderable { file } => {
            let g = load_graph(&file)?;
            let chain = certify_not_left_orderable(&g).map_err(domain)?;
            print!("{}", render_chain(&chain));
            Ok(())
        }
        CertifyCmd::Tower { file } => {
            let g = load_graph(&file)?;
            match g.source_elimination_order() {
                SourceElimination::Tower(vertices) => {
                    let line: Vec<&str> = vertices.iter().map(|v| v.as_str()).collect();
                    println!("{}", line.join(" "));
                }
                SourceElimination::Cycle(cycle) => {
                    println!("cycle: {cycle}");
                }
            }
            Ok(())
        }
        CertifyCmd::KleinCmp { file, edge, cone, first, second } => {
            let g = load_graph(&file)?;
            let cone: Cone = cone.parse().map_err(domain)?;
            let ctx = KleinContext::from_edge(&g, &edge[0], &edge[1]).map_err(domain)?;
            let w1 = parse_word(&first)?;
            let w2 = parse_word(&second)?;
            let x = klein_coords(&g, &ctx, &w1).map_err(domain)?;
            let y = klein_coords(&g, &ctx, &w2).map_err(domain)?;
            let symbol = match crate::klein::klein_compare(cone, x, y) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            println!("{symbol}");
            Ok(())
        }
    }
}
