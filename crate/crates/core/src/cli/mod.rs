//! Command-line front end.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{classify, IdealClass};
use crate::error::{Error, Result};
use crate::ideal::enumerate_ideals;
use crate::phi::Phi;
use crate::ring::{Ring, RingSpec};
use crate::verdict::{Bound, Verdict};
use crate::verify::{self, CorpusSpec, Params, Separation, TheoremId};

pub use parse::{parse_ideal, parse_phi, parse_ring, parse_ring_expr};
use report::{IdealRow, IdealsReport, Report, ResultRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "phir", version, about = "Classify ideals and check results about phi-r-ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Common {
    /// Search bound: `N`, or `E:I` for element and ideal bounds.
    #[arg(long, value_parser = parse_bound)]
    bound: Option<Bound>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report every class verdict for one ideal.
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        /// Maps to classify against; repeatable.
        #[arg(long, value_parser = parse_phi_arg)]
        phi: Vec<Phi>,
        #[command(flatten)]
        common: Common,
    },
    /// List the ideals of a ring.
    Ideals {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check a result on a ring or a corpus.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        ring: Option<String>,
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_parser = parse_phi_arg)]
        phi: Option<Phi>,
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Find an ideal in the corpus in one class but not another.
    Search {
        /// Class the example must belong to.
        #[arg(long)]
        have: String,
        /// Class the example must fail.
        #[arg(long)]
        lack: String,
        #[arg(long)]
        corpus: String,
        /// Map for the phi-parameterized classes.
        #[arg(long, value_parser = parse_phi_arg)]
        phi: Option<Phi>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_bound(s: &str) -> std::result::Result<Bound, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad bound `{t}`: {e}"));
    match s.split_once(':') {
        Some((e, i)) => Ok(Bound {
            elements: num(e)?,
            ideals: num(i)?,
        }),
        None => Ok(Bound::uniform(num(s)?)),
    }
}

fn parse_phi_arg(s: &str) -> std::result::Result<Phi, String> {
    parse_phi(s).map_err(|e| e.to_string())
}

/// What a command produced: a document and whether it reports a failure.
struct Outcome {
    json: serde_json::Value,
    table: String,
    fails: bool,
}

fn build_ring(text: &str) -> Result<Ring> {
    Ring::build(&parse_ring_expr(text)?)
}

fn do_classify(ring: &str, ideal: &str, phis: &[Phi], bound: Bound) -> Result<Outcome> {
    let r = build_ring(ring)?;
    let i = parse_ideal(ideal, &r)?;
    let rep = classify(&i, phis, bound)?;
    let phi = match phis {
        [p] => Some(p.to_string()),
        _ => None,
    };
    let out = report::classification(&rep, phi);
    Ok(Outcome {
        json: serde_json::to_value(&out).expect("reports serialize"),
        table: out.render_table(),
        fails: false,
    })
}

fn do_ideals(ring: &str, bound: Bound) -> Result<Outcome> {
    let r = build_ring(ring)?;
    let e = enumerate_ideals(&r, Some(bound.ideals))?;
    let out = IdealsReport {
        ring: r.to_string(),
        bound,
        complete: e.complete,
        ideals: e
            .ideals
            .iter()
            .map(|i| IdealRow {
                ideal: i.to_string(),
                generators: i.to_spec().to_string(),
                proper: i.is_proper(),
            })
            .collect(),
    };
    Ok(Outcome {
        json: serde_json::to_value(&out).expect("reports serialize"),
        table: out.render_table(),
        fails: false,
    })
}

/// Results whose statement does not involve a map from the family.
fn phi_free(id: TheoremId) -> bool {
    matches!(
        id,
        TheoremId::Basic1 | TheoremId::Basic2 | TheoremId::Basic3 | TheoremId::Basic4 | TheoremId::ProductTqr
    )
}

fn do_verify(
    theorem: &str,
    ring: Option<&str>,
    corpus: Option<&str>,
    phi: Option<Phi>,
    n: Option<u32>,
    bound: Bound,
) -> Result<Outcome> {
    let id: TheoremId = theorem.parse()?;
    let mut params = Params {
        phi: None,
        n,
        denominators: Vec::new(),
    };
    let phis: Vec<Option<Phi>> = if phi_free(id) {
        vec![None]
    } else {
        match phi {
            Some(p) => vec![Some(p)],
            None => verify::probe_set().into_iter().map(Some).collect(),
        }
    };
    let mut rows = Vec::new();
    let label;
    match (ring, corpus) {
        (Some(text), _) => {
            let mut spec = parse_ring_expr(text)?;
            if matches!(id, TheoremId::Loc1 | TheoremId::Loc2) {
                // the localization results take the base ring and the set
                if let RingSpec::Localization(base, s) = spec {
                    spec = *base;
                    params.denominators = s;
                }
            }
            let r = Ring::build(&spec)?;
            label = r.to_string();
            for p in &phis {
                params.phi = p.clone();
                let rep = verify::verify(id, &r, &params, bound)?;
                rows.push(report::theorem_row(&rep, p.as_ref().map(Phi::to_string)));
            }
        }
        (None, Some(text)) => {
            let c: CorpusSpec = text.parse()?;
            label = c.to_string();
            for p in &phis {
                params.phi = p.clone();
                let rep = verify::verify_corpus(id, &c, &params, bound)?;
                rows.push(report::theorem_row(&rep, p.as_ref().map(Phi::to_string)));
            }
        }
        (None, None) => return Err(Error::Semantic("verify needs --ring or --corpus".into())),
    }
    let fails = rows.iter().any(ResultRow::is_fails);
    let out = Report {
        ring: label,
        ideal: None,
        phi: match &phis[..] {
            [Some(p)] => Some(p.to_string()),
            _ => None,
        },
        bound,
        results: rows,
    };
    Ok(Outcome {
        json: serde_json::to_value(&out).expect("reports serialize"),
        table: out.render_table(),
        fails,
    })
}

fn class_arg(name: &str, phi: &Option<Phi>) -> Result<IdealClass> {
    IdealClass::from_name(name, phi.clone())
}

fn do_search(have: &str, lack: &str, corpus: &str, phi: Option<Phi>, bound: Bound) -> Result<Outcome> {
    let have = class_arg(have, &phi)?;
    let lack = class_arg(lack, &phi)?;
    let c: CorpusSpec = corpus.parse()?;
    let finite = c.rings()?.iter().all(Ring::is_finite);
    let found = verify::search_separating(&have, &lack, &c, bound)?;
    let mut row = ResultRow {
        class: Some(lack.name().to_string()),
        phi: phi.as_ref().map(Phi::to_string),
        have: Some(have.to_string()),
        ..ResultRow::default()
    };
    let fails = match &found {
        Separation::Found { ring, ideal, witness } => {
            row.found_ring = Some(ring.to_string());
            row.found_ideal = Some(ideal.to_string());
            row = row.with_verdict(&Verdict::Fails(witness.clone()));
            true
        }
        Separation::NotFound => {
            row = row.with_verdict(&Verdict::passing(finite, bound.ideals));
            false
        }
    };
    let out = Report {
        ring: c.to_string(),
        ideal: None,
        phi: phi.as_ref().map(Phi::to_string),
        bound,
        results: vec![row],
    };
    Ok(Outcome {
        json: serde_json::to_value(&out).expect("reports serialize"),
        table: out.render_table(),
        fails,
    })
}

fn dispatch(cmd: Command) -> (Result<Outcome>, Format) {
    match cmd {
        Command::Classify { ring, ideal, phi, common } => {
            (do_classify(&ring, &ideal, &phi, common.bound.unwrap_or_default()), common.format)
        }
        Command::Ideals { ring, common } => (do_ideals(&ring, common.bound.unwrap_or_default()), common.format),
        Command::Verify { theorem, ring, corpus, phi, n, common } => (
            do_verify(&theorem, ring.as_deref(), corpus.as_deref(), phi, n, common.bound.unwrap_or_default()),
            common.format,
        ),
        Command::Search { have, lack, corpus, phi, common } => {
            (do_search(&have, &lack, &corpus, phi, common.bound.unwrap_or_default()), common.format)
        }
    }
}

/// Runs one command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (result, format) = dispatch(cli.command);
    match result {
        Ok(o) => {
            let written = match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json renders")),
                Format::Table => write!(out, "{}", o.table),
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            if o.fails {
                EXIT_FAILS
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
