//! Command-line front end. Records go out as JSON lines, in corpus order.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::Bounds;
use crate::chief::chief_series;
use crate::corpus::{builtin_corpus, parse_corpus_spec, CorpusEntry};
use crate::error::{Error, Result};
use crate::formation::{is_class_central, is_nca_member, is_nilpotent, is_quasinilpotent, is_s_critical, ClassOfGroups};
use crate::hypercenter::{hypercenter, intersection_of_class_maximal, verify, Check, VerificationReport};
use crate::io::{emit_group_file, parse_group_file};
use crate::lattice::SubgroupLattice;
use crate::ops::center;

#[derive(Debug, Parser)]
#[command(name = "quasihyper", version, about = "Class hypercenters and class-maximal intersections of permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Group definition file (repeatable).
    #[arg(long = "group", global = true, value_name = "FILE")]
    pub groups: Vec<PathBuf>,
    /// Built-in corpus (smoke, standard, extended) or a corpus file.
    #[arg(long, global = true, value_name = "NAME|FILE")]
    pub corpus: Option<String>,
    /// Class selector: N, Np:<prime>, N*, Nca, abelian, all.
    #[arg(long, global = true, value_name = "SELECTOR")]
    pub class: Option<String>,
    /// Largest group order to enumerate elementwise [default: 10000]
    #[arg(long, global = true, value_name = "N")]
    pub enum_bound: Option<u64>,
    /// Largest group order whose subgroup lattice is built [default: 2000]
    #[arg(long, global = true, value_name = "N")]
    pub lattice_bound: Option<u64>,
    /// Largest semidirect product to construct [default: 10000]
    #[arg(long, global = true, value_name = "N")]
    pub semidirect_bound: Option<u64>,
    /// Write records here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Leave out wall-clock fields.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, center, chief series and class memberships.
    Info {
        /// Print each group back in definition-file format instead.
        #[arg(long)]
        emit_generators: bool,
    },
    /// Z_X(G) for the selected class (default N*).
    Hypercenter,
    /// Intersection of the X-maximal subgroups (default N*).
    Intersection,
    /// Int_N = Z_N = top of the upper central series.
    VerifyBaer,
    /// Int = Z for the quasi-class of the selected formation (default N).
    VerifyCorollary,
    /// Inner-induction hypercenter = Z_N*.
    VerifyRemark4,
    /// Z <= Int for the quasi-class of the selected formation (default N).
    VerifyLemmaA,
    /// Z and Int for N_ca, reported without assertion.
    CompareNca,
    /// Minimal non-X groups of the corpus (default class N).
    SCritical,
}

impl Command {
    fn default_corpus(&self) -> Option<&'static str> {
        match self {
            Command::Info { .. } | Command::Hypercenter | Command::Intersection => None,
            _ => Some("standard"),
        }
    }
}

struct Config {
    bounds: Bounds,
    timings: bool,
}

impl Config {
    fn millis(&self, start: Instant) -> Option<u64> {
        self.timings.then(|| start.elapsed().as_millis() as u64)
    }
}

fn bounds_of(c: &Common) -> Result<Bounds> {
    let d = Bounds::default();
    let b = Bounds {
        enumeration: c.enum_bound.unwrap_or(d.enumeration),
        lattice: c.lattice_bound.unwrap_or(d.lattice),
        semidirect: c.semidirect_bound.unwrap_or(d.semidirect),
    };
    b.validate()?;
    Ok(b)
}

fn load_groups(c: &Common, fallback: Option<&str>) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for path in &c.groups {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        let group = parse_group_file(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let id = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        out.push(CorpusEntry::new(id, group));
    }
    let corpus = c.corpus.as_deref().or(if out.is_empty() { fallback } else { None });
    if let Some(name) = corpus {
        if matches!(name, "smoke" | "standard" | "extended") {
            out.extend(builtin_corpus(name)?);
        } else {
            let path = Path::new(name);
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read corpus {name}: {e}")))?;
            out.extend(parse_corpus_spec(&text, path.parent().unwrap_or(Path::new(".")))?);
        }
    }
    if out.is_empty() && c.groups.is_empty() && corpus.is_none() {
        return Err(Error::Input("no groups given (use --group or --corpus)".into()));
    }
    Ok(out)
}

fn error_record(entry: &CorpusEntry, e: &Error) -> Value {
    json!({ "group_id": entry.id, "order": entry.group.order(), "error": e.to_string() })
}

fn gens(h: &crate::group::PermGroup) -> Vec<String> {
    h.generators().iter().map(ToString::to_string).collect()
}

fn info_record(entry: &CorpusEntry, cfg: &Config) -> Result<Value> {
    let start = Instant::now();
    let g = &entry.group;
    let b = &cfg.bounds;
    let series = chief_series(g, b)?;
    let nilpotent = ClassOfGroups::nilpotent();
    let factors = series
        .factors()
        .iter()
        .map(|cf| {
            Ok(json!({
                "order": cf.order(),
                "abelian": cf.is_abelian(),
                "central": cf.is_central(),
                "nilpotent_central": is_class_central(cf, &nilpotent, b)?,
            }))
        })
        .collect::<Result<Vec<Value>>>()?;
    let mut v = json!({
        "group_id": entry.id,
        "degree": g.degree(),
        "order": g.order(),
        "generators": gens(g),
        "center_order": center(g, b)?.order(),
        "chief_series": series.terms().iter().map(|t| t.order()).collect::<Vec<_>>(),
        "chief_factors": factors,
        "abelian": g.is_abelian(),
        "nilpotent": is_nilpotent(g),
        "quasinilpotent": is_quasinilpotent(g, b)?,
        "nca_member": is_nca_member(g, b)?,
    });
    if let Some(ms) = cfg.millis(start) {
        v["millis"] = json!(ms);
    }
    Ok(v)
}

fn hypercenter_record(entry: &CorpusEntry, x: &ClassOfGroups, cfg: &Config) -> Result<Value> {
    let start = Instant::now();
    let r = hypercenter(&entry.group, x, &cfg.bounds)?;
    let mut v = json!({
        "group_id": entry.id,
        "order": entry.group.order(),
        "class": r.class,
        "z_order": r.z.order(),
        "z_generators": gens(&r.z),
        "trace": r.trace,
    });
    if let Some(ms) = cfg.millis(start) {
        v["millis"] = json!(ms);
    }
    Ok(v)
}

fn intersection_record(entry: &CorpusEntry, x: &ClassOfGroups, cfg: &Config) -> Result<Value> {
    let start = Instant::now();
    let lattice = SubgroupLattice::build(&entry.group, &cfg.bounds)?;
    let maximal = lattice.class_maximal_indices(x, &cfg.bounds)?;
    let int = intersection_of_class_maximal(&entry.group, x, &cfg.bounds)?;
    let mut v = json!({
        "group_id": entry.id,
        "order": entry.group.order(),
        "class": x.name(),
        "int_order": int.order(),
        "int_generators": gens(&int),
        "subgroups": lattice.len(),
        "class_maximal": maximal.len(),
    });
    if let Some(ms) = cfg.millis(start) {
        v["millis"] = json!(ms);
    }
    Ok(v)
}

fn s_critical_record(entry: &CorpusEntry, x: &ClassOfGroups, cfg: &Config) -> Result<Value> {
    Ok(json!({
        "group_id": entry.id,
        "order": entry.group.order(),
        "class": x.name(),
        "s_critical": is_s_critical(&entry.group, x, &cfg.bounds)?,
    }))
}

/// Per-group records; the exit status is the worst seen (0 if all fine).
fn per_group(
    corpus: &[CorpusEntry],
    f: impl Fn(&CorpusEntry) -> Result<Value> + Sync,
) -> (Vec<String>, i32) {
    let results: Vec<Result<Value>> = corpus.par_iter().map(&f).collect();
    let mut status = 0;
    let lines = corpus
        .iter()
        .zip(results)
        .map(|(entry, r)| match r {
            Ok(v) => v.to_string(),
            Err(e) => {
                status = status.max(e.exit_code());
                error_record(entry, &e).to_string()
            }
        })
        .collect();
    (lines, status)
}

fn verification(reports: Vec<VerificationReport>, cfg: &Config) -> (Vec<String>, i32) {
    let mut status = 0;
    let mut first_failure: Option<&VerificationReport> = None;
    for r in &reports {
        if let Some(code) = r.error_code {
            status = status.max(code);
        } else if !r.passed {
            status = status.max(1);
            first_failure.get_or_insert(r);
        }
    }
    if let Some(r) = first_failure {
        eprintln!(
            "{} check failed on {}: |Z| = {}, |Int| = {}, witness {:?}",
            r.check, r.group_id, r.z_order, r.int_order, r.witness
        );
    }
    let lines = reports
        .into_iter()
        .map(|mut r| {
            if !cfg.timings {
                r.millis = None;
            }
            r.to_json()
        })
        .collect();
    (lines, status)
}

fn execute(cli: &Cli) -> Result<(Vec<String>, i32)> {
    let cfg = Config {
        bounds: bounds_of(&cli.common)?,
        timings: !cli.common.no_timings,
    };
    let corpus = load_groups(&cli.common, cli.command.default_corpus())?;
    let class = |default: &str| ClassOfGroups::parse(cli.common.class.as_deref().unwrap_or(default));
    Ok(match &cli.command {
        Command::Info { emit_generators: true } => {
            (corpus.iter().map(|e| emit_group_file(&e.group).trim_end().to_string()).collect(), 0)
        }
        Command::Info { .. } => per_group(&corpus, |e| info_record(e, &cfg)),
        Command::Hypercenter => {
            let x = class("N*")?;
            per_group(&corpus, |e| hypercenter_record(e, &x, &cfg))
        }
        Command::Intersection => {
            let x = class("N*")?;
            per_group(&corpus, |e| intersection_record(e, &x, &cfg))
        }
        Command::SCritical => {
            let x = class("N")?;
            per_group(&corpus, |e| s_critical_record(e, &x, &cfg))
        }
        Command::VerifyCorollary => verification(verify(Check::Corollary, &corpus, &class("N")?, &cfg.bounds), &cfg),
        Command::VerifyLemmaA => verification(verify(Check::LemmaA, &corpus, &class("N")?, &cfg.bounds), &cfg),
        Command::VerifyBaer => verification(verify(Check::Baer, &corpus, &ClassOfGroups::nilpotent(), &cfg.bounds), &cfg),
        Command::VerifyRemark4 => {
            verification(verify(Check::Remark4, &corpus, &ClassOfGroups::nilpotent(), &cfg.bounds), &cfg)
        }
        Command::CompareNca => {
            verification(verify(Check::CompareNca, &corpus, &ClassOfGroups::nilpotent(), &cfg.bounds), &cfg)
        }
    })
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    let (lines, status) = match execute(cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let written = match &cli.common.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    status
}
