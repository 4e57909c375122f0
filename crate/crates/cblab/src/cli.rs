//! Command-line front end. Every command honours `--format text|json|csv`,
//! an optional `--jobs N` worker count, and an optional fusion-cache path
//! (`--cache PATH` or the `CBLAB_CACHE` environment variable, loaded at
//! startup and saved back when new triples were computed). Exit codes:
//! 0 for success, 1 when a verification the command ran came out false,
//! 2 for usage or internal errors.

use crate::chern::{c1_fvector, c1_genus1, deg_m04, paper_table, PaperFamily};
use crate::fusion::FusionEngine;
use crate::hypotheses::check_precisQ;
use crate::picard::{fcurves, m3_in_h_delta1_span, nonadjacent_basis_n5, DivisorClassSmall};
use crate::ranks::{rank, rank_sequence};
use crate::repro::{run_all, run_case, worst_status, CaseResult};
use crate::scaling::{
    anomaly_m2_level1, classify_adaptive, identity_coeffs, verify_identity, IdentityKind,
};
use crate::util::rat_to_string;
use crate::weights::{BundleSpec, LevelWeight, Weight};
use crate::{rat_int, Error, Rat, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;
use std::io::Read as _;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "cblab",
    version,
    about = "Exact ranks, first Chern classes and scaling identities of type-A conformal-blocks bundles"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Size of the worker pool (defaults to the number of cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Fusion-cache file, loaded at startup and saved on exit
    #[arg(long, global = true, env = "CBLAB_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of a conformal-blocks bundle
    Rank {
        /// Bundle spec: inline JSON, @file, or - for stdin
        #[arg(long)]
        spec: String,
    },
    /// Ranks of the scaled bundles V[1], ..., V[max-m]
    RankSeq {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 5)]
        max_m: u32,
    },
    /// A single three-point fusion coefficient N(a, b, c)
    Fuse {
        /// Rank of sl(r+1)
        #[arg(long)]
        r: u32,
        #[arg(long)]
        level: u32,
        /// Weight as comma-separated partition parts, e.g. 5,4,1
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
    /// Degree of a four-point genus-0 bundle
    Deg04 {
        #[arg(long)]
        spec: String,
    },
    /// First Chern class of a genus-0 bundle, paired against F-curves
    C1 {
        #[arg(long)]
        spec: String,
        /// Print the pairing with every F-curve (the default)
        #[arg(long, conflicts_with = "basis5")]
        fcurves: bool,
        /// Print coordinates over the nonadjacent boundary basis (n = 5 only)
        #[arg(long)]
        basis5: bool,
    },
    /// Classify the rank scaling m -> rank V[m]
    Classify {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
    /// Coefficients of a scaling identity for c1(V[m])
    Identity {
        /// auto, general, quadric, veronese, scroll12, p1o3, coble-quartic,
        /// coble-cubic or two-quadrics
        #[arg(long)]
        kind: String,
        /// Target scaling m
        #[arg(long)]
        m: u32,
        /// Quadric dimension (kind = quadric)
        #[arg(long)]
        d: Option<u32>,
        /// f(1) (kind = general)
        #[arg(long)]
        rank1: Option<u32>,
        /// Scaling degree D (kind = general)
        #[arg(long)]
        degree: Option<u32>,
        /// Bundle spec to classify (kind = auto)
        #[arg(long)]
        spec: Option<String>,
        /// Classification budget for kind = auto
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
    /// Check a scaling identity against recomputed or embedded classes
    Verify {
        /// Identity kind; defaults to the family's kind, or auto with --spec
        #[arg(long)]
        kind: Option<String>,
        /// Bundle spec whose classes are recomputed
        #[arg(long, conflicts_with = "family")]
        spec: Option<String>,
        /// Embedded class table: m3-coble, m2-cubic or m21-quadrics
        #[arg(long)]
        family: Option<String>,
        /// Target scaling m
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        rank1: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
        /// Classification budget for kind = auto
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
    /// Run the boundary hypothesis suite on a bundle spec
    Hypotheses {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
    },
    /// The genus-2 level-one anomaly class at scaling m
    AnomalyM2 {
        #[arg(long)]
        m: u32,
    },
    /// Re-derive an embedded reference computation (or `all` of them)
    Reproduce {
        /// Case id, or `all`
        id: String,
    },
    /// Statistics of a fusion-cache file
    Cache { path: PathBuf },
}

/// Parse arguments and run; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second initialization in the same process is harmless: the
        // existing global pool stays in effect
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let eng = FusionEngine::new();
    if let Some(path) = &cli.cache {
        if path.exists() {
            if let Err(e) = eng.load_cache(path) {
                eprintln!("cblab: failed to load cache {}: {e}", path.display());
                return 2;
            }
        }
    }
    let outcome = dispatch(&cli, &eng);
    if let Some(path) = &cli.cache {
        if eng.is_dirty() {
            if let Err(e) = eng.save_cache(path) {
                eprintln!("cblab: failed to save cache {}: {e}", path.display());
            }
        }
    }
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("cblab: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, eng: &FusionEngine) -> Result<i32> {
    let format = cli.format;
    match &cli.command {
        Command::Rank { spec } => {
            let spec = load_spec(spec)?;
            let value = rank(eng, &spec)?;
            scalar_out(format, "rank", &value.to_string());
            Ok(0)
        }
        Command::RankSeq { spec, max_m } => {
            let spec = load_spec(spec)?;
            let seq = rank_sequence(eng, &spec, *max_m)?;
            match format {
                Format::Text => {
                    for (i, v) in seq.iter().enumerate() {
                        println!("m = {}: {v}", i + 1);
                    }
                }
                Format::Json => {
                    let ranks: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                    print_json(&json!({ "max_m": max_m, "ranks": ranks }));
                }
                Format::Csv => {
                    let rows = seq
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vec![(i + 1).to_string(), v.to_string()])
                        .collect();
                    print_csv("m,rank", rows);
                }
            }
            Ok(0)
        }
        Command::Fuse { r, level, a, b, c } => {
            let a = LevelWeight::new(parse_weight(a, *r)?, *level)?;
            let b = LevelWeight::new(parse_weight(b, *r)?, *level)?;
            let c = LevelWeight::new(parse_weight(c, *r)?, *level)?;
            let value = eng.fuse3(&a, &b, &c)?;
            scalar_out(format, "coefficient", &value.to_string());
            Ok(0)
        }
        Command::Deg04 { spec } => {
            let spec = load_spec(spec)?;
            if spec.genus != 0 || spec.n() != 4 {
                return Err(Error::InvalidSpec(
                    "deg04 needs a genus-0 spec with exactly 4 points".into(),
                ));
            }
            let ws: [Weight; 4] = [
                spec.weights[0].clone(),
                spec.weights[1].clone(),
                spec.weights[2].clone(),
                spec.weights[3].clone(),
            ];
            let value = deg_m04(eng, spec.r, spec.level, &ws)?;
            scalar_out(format, "degree", &value.to_string());
            Ok(0)
        }
        Command::C1 { spec, basis5, .. } => {
            let spec = load_spec(spec)?;
            if spec.genus != 0 || spec.n() < 4 {
                return Err(Error::InvalidSpec(
                    "c1 needs a genus-0 spec with at least 4 points".into(),
                ));
            }
            let values = c1_fvector(eng, &spec)?;
            if *basis5 {
                if spec.n() != 5 {
                    return Err(Error::InvalidSpec(
                        "--basis5 applies only to 5-point specs".into(),
                    ));
                }
                let pairings: Vec<Rat> = values.into_iter().map(rat_int).collect();
                let coords = crate::picard::basis5_coords_from_pairings(&pairings)?;
                let names: Vec<String> = nonadjacent_basis_n5()
                    .iter()
                    .map(|s| format!("delta_{}{}", s[0] + 1, s[1] + 1))
                    .collect();
                match format {
                    Format::Text => {
                        for (name, c) in names.iter().zip(&coords) {
                            println!("{name}: {}", rat_to_string(c));
                        }
                    }
                    Format::Json => {
                        let pairs: Vec<_> = names
                            .iter()
                            .zip(&coords)
                            .map(|(n, c)| json!({ "class": n, "coord": rat_to_string(c) }))
                            .collect();
                        print_json(&json!({ "basis": "nonadjacent", "coords": pairs }));
                    }
                    Format::Csv => {
                        let rows = names
                            .iter()
                            .zip(&coords)
                            .map(|(n, c)| vec![n.clone(), rat_to_string(c)])
                            .collect();
                        print_csv("class,coord", rows);
                    }
                }
            } else {
                let curves = fcurves(spec.n());
                match format {
                    Format::Text => {
                        for (f, v) in curves.iter().zip(&values) {
                            println!("{f}: {v}");
                        }
                    }
                    Format::Json => {
                        let pairs: Vec<_> = curves
                            .iter()
                            .zip(&values)
                            .map(|(f, v)| json!({ "curve": f.to_string(), "value": v.to_string() }))
                            .collect();
                        print_json(&json!({ "fcurves": pairs }));
                    }
                    Format::Csv => {
                        let rows = curves
                            .iter()
                            .zip(&values)
                            .map(|(f, v)| vec![f.to_string(), v.to_string()])
                            .collect();
                        print_csv("fcurve,value", rows);
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { spec, max_m } => {
            let spec = load_spec(spec)?;
            let (report, ranks) = classify_adaptive(eng, &spec, *max_m)?;
            match format {
                Format::Text => {
                    let rs: Vec<String> = ranks.iter().map(|v| v.to_string()).collect();
                    println!("ranks: {}", rs.join(", "));
                    println!(
                        "dim = {}, degree = {}, delta = {}, f(1) = {}, samples = {}",
                        report.dim, report.degree, report.delta, report.rank1, report.samples
                    );
                    println!(
                        "label: {} ({})",
                        report.label.id(),
                        report.label.describe(report.dim, &report.degree)
                    );
                    println!("candidates: {}", report.label.candidates().join(", "));
                }
                Format::Json => {
                    let rs: Vec<String> = ranks.iter().map(|v| v.to_string()).collect();
                    print_json(&json!({
                        "ranks": rs,
                        "dim": report.dim,
                        "degree": report.degree.to_string(),
                        "delta": report.delta.to_string(),
                        "rank1": report.rank1.to_string(),
                        "samples": report.samples,
                        "label": report.label.id(),
                        "description": report.label.describe(report.dim, &report.degree),
                        "candidates": report.label.candidates(),
                    }));
                }
                Format::Csv => {
                    print_csv(
                        "dim,degree,delta,rank1,samples,label",
                        vec![vec![
                            report.dim.to_string(),
                            report.degree.to_string(),
                            report.delta.to_string(),
                            report.rank1.to_string(),
                            report.samples.to_string(),
                            report.label.id().to_string(),
                        ]],
                    );
                }
            }
            Ok(0)
        }
        Command::Identity {
            kind,
            m,
            d,
            rank1,
            degree,
            spec,
            max_m,
        } => {
            let (kind, desc) = resolve_kind(eng, kind, *d, *rank1, *degree, spec.as_deref(), *max_m)?;
            let coeffs = identity_coeffs(kind, *m)?;
            match format {
                Format::Text => {
                    println!("kind: {desc}, m = {m}");
                    for (j, beta) in &coeffs {
                        println!("beta_{j} = {}", rat_to_string(beta));
                    }
                }
                Format::Json => {
                    let cs: Vec<_> = coeffs
                        .iter()
                        .map(|(j, beta)| json!({ "j": j, "beta": rat_to_string(beta) }))
                        .collect();
                    print_json(&json!({ "kind": desc, "m": m, "coefficients": cs }));
                }
                Format::Csv => {
                    let rows = coeffs
                        .iter()
                        .map(|(j, beta)| vec![j.to_string(), rat_to_string(beta)])
                        .collect();
                    print_csv("j,coefficient", rows);
                }
            }
            Ok(0)
        }
        Command::Verify {
            kind,
            spec,
            family,
            m,
            d,
            rank1,
            degree,
            max_m,
        } => {
            if let Some(family) = family {
                verify_family(format, family, kind.as_deref(), *m)
            } else {
                let spec_arg = spec.as_deref().ok_or_else(|| {
                    Error::InvalidSpec("verify needs either --spec or --family".into())
                })?;
                let kind_arg = kind.as_deref().unwrap_or("auto");
                verify_spec(eng, format, spec_arg, kind_arg, *m, *d, *rank1, *degree, *max_m)
            }
        }
        Command::Hypotheses { spec, max_m } => {
            let spec = load_spec(spec)?;
            let hr = check_precisQ(eng, &spec, *max_m)?;
            match format {
                Format::Text => {
                    let rs: Vec<String> = hr.parent_ranks.iter().map(|v| v.to_string()).collect();
                    println!(
                        "parent: dim = {}, degree = {}, delta = {}, label {}; ranks {}",
                        hr.parent.dim,
                        hr.parent.degree,
                        hr.parent.delta,
                        hr.parent.label.id(),
                        rs.join(", ")
                    );
                    for s in &hr.strata {
                        let socle = match &s.socle {
                            None => "none".to_string(),
                            Some(sc) => format!(
                                "mu {} product {} degree {} ({})",
                                sc.mu,
                                sc.product,
                                sc.report.degree,
                                if sc.passed { "pass" } else { "FAIL" }
                            ),
                        };
                        let verdict = match s.failed {
                            None => "pass".to_string(),
                            Some(f) => format!("FAIL at {f}"),
                        };
                        println!(
                            "{}: conservation {}, free {}, quasi-rank-one {}, socle {} -> {}",
                            s.stratum,
                            pass_word(s.conservation_ok),
                            pass_word(s.free_ok),
                            pass_word(s.quasi_rank_one_ok),
                            socle,
                            verdict
                        );
                    }
                    println!("overall: {}", pass_word(hr.overall));
                }
                Format::Json => {
                    let strata: Vec<_> = hr
                        .strata
                        .iter()
                        .map(|s| {
                            let terms: Vec<_> = s
                                .terms
                                .iter()
                                .map(|t| {
                                    json!({
                                        "mu": t.mu.to_string(),
                                        "rank_a": t.rank_a.to_string(),
                                        "rank_b": t.rank_b.to_string(),
                                    })
                                })
                                .collect();
                            let socle = s.socle.as_ref().map(|sc| {
                                json!({
                                    "mu": sc.mu.to_string(),
                                    "product": sc.product.to_string(),
                                    "samples": sc.samples.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                                    "degree": sc.report.degree.to_string(),
                                    "passed": sc.passed,
                                })
                            });
                            json!({
                                "stratum": s.stratum.to_string(),
                                "terms": terms,
                                "conservation": s.conservation_ok,
                                "free": s.free_ok,
                                "quasi_rank_one": s.quasi_rank_one_ok,
                                "socle": socle,
                                "failed": s.failed,
                            })
                        })
                        .collect();
                    print_json(&json!({
                        "parent": {
                            "dim": hr.parent.dim,
                            "degree": hr.parent.degree.to_string(),
                            "delta": hr.parent.delta.to_string(),
                            "label": hr.parent.label.id(),
                            "ranks": hr.parent_ranks.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        },
                        "strata": strata,
                        "overall": hr.overall,
                    }));
                }
                Format::Csv => {
                    let rows = hr
                        .strata
                        .iter()
                        .map(|s| {
                            vec![
                                s.stratum.to_string(),
                                s.conservation_ok.to_string(),
                                s.free_ok.to_string(),
                                s.quasi_rank_one_ok.to_string(),
                                s.socle
                                    .as_ref()
                                    .map(|sc| sc.passed.to_string())
                                    .unwrap_or_else(|| "none".to_string()),
                                s.failed.unwrap_or("").to_string(),
                            ]
                        })
                        .collect();
                    print_csv("stratum,conservation,free,quasi_rank_one,socle,failed", rows);
                }
            }
            Ok(if hr.overall { 0 } else { 1 })
        }
        Command::AnomalyM2 { m } => {
            let a = anomaly_m2_level1(eng, *m)?;
            match format {
                Format::Text => {
                    println!("m = {}", a.m);
                    println!("rank sum = {}", a.rank_sum);
                    println!(
                        "degree sum: actual {}, predicted {}",
                        a.pig_actual, a.pig_predicted
                    );
                    println!(
                        "elliptic sum: actual {}, predicted {}",
                        rat_to_string(&a.ell_actual),
                        rat_to_string(&a.ell_predicted)
                    );
                    println!(
                        "anomaly (predicted - actual): alpha = {}, beta = {} over (delta_irr, delta_1)",
                        rat_to_string(&a.alpha),
                        rat_to_string(&a.beta)
                    );
                }
                Format::Json => {
                    print_json(&json!({
                        "m": a.m,
                        "rank_sum": a.rank_sum.to_string(),
                        "degree_actual": a.pig_actual.to_string(),
                        "degree_predicted": a.pig_predicted.to_string(),
                        "elliptic_actual": rat_to_string(&a.ell_actual),
                        "elliptic_predicted": rat_to_string(&a.ell_predicted),
                        "alpha": rat_to_string(&a.alpha),
                        "beta": rat_to_string(&a.beta),
                    }));
                }
                Format::Csv => {
                    print_csv(
                        "m,rank_sum,degree_actual,degree_predicted,elliptic_actual,elliptic_predicted,alpha,beta",
                        vec![vec![
                            a.m.to_string(),
                            a.rank_sum.to_string(),
                            a.pig_actual.to_string(),
                            a.pig_predicted.to_string(),
                            rat_to_string(&a.ell_actual),
                            rat_to_string(&a.ell_predicted),
                            rat_to_string(&a.alpha),
                            rat_to_string(&a.beta),
                        ]],
                    );
                }
            }
            Ok(0)
        }
        Command::Reproduce { id } => {
            let results = if id == "all" {
                run_all(eng)?
            } else {
                vec![run_case(eng, id)?]
            };
            print_cases(format, &results);
            Ok(worst_status(&results).exit_code())
        }
        Command::Cache { path } => {
            let scratch = FusionEngine::new();
            let records = scratch.load_cache(path)?;
            let triples = scratch.cached_triples();
            match format {
                Format::Text => {
                    println!("records: {records}");
                    println!("distinct triples: {triples}");
                }
                Format::Json => {
                    print_json(&json!({ "records": records, "triples": triples }));
                }
                Format::Csv => {
                    print_csv(
                        "records,triples",
                        vec![vec![records.to_string(), triples.to_string()]],
                    );
                }
            }
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------
// verify

fn conjectural_kind(family: PaperFamily) -> IdentityKind {
    match family {
        PaperFamily::M3Quartic => IdentityKind::CobleQuartic,
        PaperFamily::M2Cubic => IdentityKind::CobleCubic,
        PaperFamily::M21TwoQuadrics => IdentityKind::TwoQuadrics,
    }
}

fn kind_id(kind: IdentityKind) -> String {
    match kind {
        IdentityKind::General { rank1, degree } => {
            format!("general (R = {rank1}, D = {degree})")
        }
        IdentityKind::Quadric { dim } => format!("quadric (dim {dim})"),
        IdentityKind::Veronese => "veronese".into(),
        IdentityKind::Scroll12 => "scroll12".into(),
        IdentityKind::P1O3 => "p1o3".into(),
        IdentityKind::CobleQuartic => "coble-quartic".into(),
        IdentityKind::CobleCubic => "coble-cubic".into(),
        IdentityKind::TwoQuadrics => "two-quadrics".into(),
    }
}

#[allow(clippy::too_many_arguments)]
fn resolve_kind(
    eng: &FusionEngine,
    kind: &str,
    d: Option<u32>,
    rank1: Option<u32>,
    degree: Option<u32>,
    spec: Option<&str>,
    max_m: u32,
) -> Result<(IdentityKind, String)> {
    if kind == "auto" {
        let spec = spec.ok_or_else(|| {
            Error::InvalidSpec("--kind auto needs --spec to classify".into())
        })?;
        let spec = load_spec(spec)?;
        let (report, _) = classify_adaptive(eng, &spec, max_m)?;
        if !report.delta.is_zero() {
            return Err(Error::Inconsistent(format!(
                "delta = {} (label {}): identities are generated only for minimal-degree scalings",
                report.delta,
                report.label.id()
            )));
        }
        let rank1 = u32::try_from(report.rank1)
            .map_err(|_| Error::Overflow("f(1) exceeds the identity generator range".into()))?;
        let degree = u32::try_from(&report.degree)
            .map_err(|_| Error::Overflow("degree exceeds the identity generator range".into()))?;
        let k = IdentityKind::General { rank1, degree };
        let desc = kind_id(k);
        Ok((k, desc))
    } else {
        let k = IdentityKind::from_id(kind, d, rank1, degree)?;
        Ok((k, kind_id(k)))
    }
}

fn verify_family(format: Format, family: &str, kind: Option<&str>, m: u32) -> Result<i32> {
    let family = PaperFamily::from_id(family)?;
    let k = conjectural_kind(family);
    if let Some(kind) = kind {
        if kind != kind_id(k) {
            return Err(Error::InvalidSpec(format!(
                "family {} is checked with kind {}, not {kind:?}",
                family.id(),
                kind_id(k)
            )));
        }
    }
    let table = paper_table(family);
    if m == 0 || m as usize > table.len() {
        return Err(Error::InvalidSpec(format!(
            "the {} table records m = 1..{}",
            family.id(),
            table.len()
        )));
    }
    let coeffs = identity_coeffs(k, m)?;
    let (zero, residual) = verify_identity(&coeffs, &table, &table[m as usize - 1])?;
    let (outcome, anomaly, exit) = family_outcome(k, zero, &residual)?;
    match format {
        Format::Text => {
            println!("kind: {}, m = {m}", kind_id(k));
            for (j, beta) in &coeffs {
                println!("beta_{j} = {}", rat_to_string(beta));
            }
            println!("residual (predicted - actual): {residual}");
            match &anomaly {
                Some(desc) => println!("outcome: {outcome} ({desc})"),
                None => println!("outcome: {outcome}"),
            }
        }
        Format::Json => {
            let cs: Vec<_> = coeffs
                .iter()
                .map(|(j, beta)| json!({ "j": j, "beta": rat_to_string(beta) }))
                .collect();
            print_json(&json!({
                "kind": kind_id(k),
                "family": family.id(),
                "m": m,
                "coefficients": cs,
                "residual": residual.to_string(),
                "outcome": outcome,
                "anomaly": anomaly,
            }));
        }
        Format::Csv => {
            print_csv(
                "outcome,residual",
                vec![vec![outcome.to_string(), residual.to_string()]],
            );
        }
    }
    Ok(exit)
}

/// Decide the verification outcome for an embedded-table check: exact when
/// the residual vanishes, `anomaly` when it lies in the kind's declared
/// anomaly support, `mismatch` otherwise.
fn family_outcome(
    kind: IdentityKind,
    zero: bool,
    residual: &DivisorClassSmall,
) -> Result<(&'static str, Option<String>, i32)> {
    if zero {
        return Ok(("exact", None, 0));
    }
    match kind {
        IdentityKind::CobleQuartic => match m3_in_h_delta1_span(residual) {
            Ok((a, b)) => Ok((
                "anomaly",
                Some(format!(
                    "residual = {}*H + {}*delta_1 within the declared support",
                    rat_to_string(&a),
                    rat_to_string(&b)
                )),
                0,
            )),
            Err(_) => Ok((
                "mismatch",
                Some("residual leaves the declared support {hyperelliptic, delta_1}".into()),
                1,
            )),
        },
        IdentityKind::CobleCubic => {
            let red = residual.reduced();
            if red[0].is_zero() {
                Ok((
                    "anomaly",
                    Some(format!(
                        "residual = {}*delta_1 within the declared support",
                        rat_to_string(&red[1])
                    )),
                    0,
                ))
            } else {
                Ok((
                    "mismatch",
                    Some(format!(
                        "residual reduces to {}*delta_irr + {}*delta_1, leaving the declared support {{delta_1}}",
                        rat_to_string(&red[0]),
                        rat_to_string(&red[1])
                    )),
                    1,
                ))
            }
        }
        _ => Ok(("mismatch", None, 1)),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_spec(
    eng: &FusionEngine,
    format: Format,
    spec: &str,
    kind: &str,
    m: u32,
    d: Option<u32>,
    rank1: Option<u32>,
    degree: Option<u32>,
    max_m: u32,
) -> Result<i32> {
    let parsed = load_spec(spec)?;
    let (k, desc) = resolve_kind(eng, kind, d, rank1, degree, Some(spec), max_m)?;
    if m < 2 {
        return Err(Error::InvalidSpec("verify needs m >= 2".into()));
    }
    let coeffs = identity_coeffs(k, m)?;
    // the support can reach past m for small m, so compute every class the
    // nonzero coefficients touch
    let needed = coeffs
        .iter()
        .filter(|(_, beta)| !beta.is_zero())
        .map(|(j, _)| *j)
        .max()
        .unwrap_or(1)
        .max(m);
    enum Classes {
        Vectors(Vec<Vec<Rat>>),
        Scalars(Vec<Rat>),
    }
    let classes = if parsed.genus == 0 && parsed.n() >= 4 {
        let mut v = Vec::new();
        for j in 1..=needed {
            let ints = c1_fvector(eng, &parsed.scale(j))?;
            v.push(ints.into_iter().map(rat_int).collect::<Vec<Rat>>());
        }
        Classes::Vectors(v)
    } else if parsed.genus == 1 && parsed.n() == 1 && parsed.r == 1 {
        let mu = parsed.weights[0].first_part();
        let v: Vec<Rat> = (1..=needed)
            .map(|j| c1_genus1(mu * j, parsed.level * j))
            .collect();
        Classes::Scalars(v)
    } else {
        return Err(Error::InvalidSpec(
            "classes are recomputed for genus-0 specs with n >= 4 and one-pointed sl(2) genus-1 specs"
                .into(),
        ));
    };
    let (zero, residual_text) = match &classes {
        Classes::Vectors(v) => {
            let (zero, residual) = verify_identity(&coeffs, v, &v[m as usize - 1])?;
            let parts: Vec<String> = residual.iter().map(rat_to_string).collect();
            (zero, format!("({})", parts.join(", ")))
        }
        Classes::Scalars(v) => {
            let (zero, residual) = verify_identity(&coeffs, v, &v[m as usize - 1])?;
            (zero, rat_to_string(&residual))
        }
    };
    let outcome = if zero { "exact" } else { "mismatch" };
    match format {
        Format::Text => {
            println!("kind: {desc}, m = {m}");
            for (j, beta) in &coeffs {
                println!("beta_{j} = {}", rat_to_string(beta));
            }
            println!("residual (predicted - actual): {residual_text}");
            println!("outcome: {outcome}");
        }
        Format::Json => {
            let cs: Vec<_> = coeffs
                .iter()
                .map(|(j, beta)| json!({ "j": j, "beta": rat_to_string(beta) }))
                .collect();
            print_json(&json!({
                "kind": desc,
                "m": m,
                "coefficients": cs,
                "residual": residual_text,
                "outcome": outcome,
            }));
        }
        Format::Csv => {
            print_csv(
                "outcome,residual",
                vec![vec![outcome.to_string(), residual_text]],
            );
        }
    }
    Ok(if zero { 0 } else { 1 })
}

// ---------------------------------------------------------------------
// reproduce output

fn print_cases(format: Format, results: &[CaseResult]) {
    match format {
        Format::Text => {
            let mut first = true;
            for r in results {
                if !first {
                    println!();
                }
                first = false;
                println!("case {} [{}]", r.id, r.status.marker());
                println!("  {}", r.description);
                for c in &r.checks {
                    println!(
                        "  {} ({}) {}: {}",
                        if c.passed { "pass" } else { "FAIL" },
                        c.kind.word(),
                        c.label,
                        c.detail
                    );
                }
            }
        }
        Format::Json => {
            print_json(&serde_json::to_value(results).expect("case results serialize"));
        }
        Format::Csv => {
            let rows = results
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|c| {
                        vec![
                            r.id.to_string(),
                            r.status.marker().to_string(),
                            c.kind.word().to_string(),
                            c.label.clone(),
                            c.passed.to_string(),
                            c.detail.clone(),
                        ]
                    })
                })
                .collect();
            print_csv("case,status,kind,label,passed,detail", rows);
        }
    }
}

// ---------------------------------------------------------------------
// input and output plumbing

/// Resolve a `--spec` argument: inline JSON, `@path`, or `-` for stdin.
fn load_spec(arg: &str) -> Result<BundleSpec> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    BundleSpec::from_json(text.trim())
}

/// Parse a weight given as comma-separated partition parts, padding with
/// zeros to the r + 1 rows of sl(r+1).
fn parse_weight(s: &str, r: u32) -> Result<Weight> {
    let mut parts: Vec<u32> = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        parts.push(tok.parse().map_err(|e| {
            Error::InvalidWeight(format!("bad partition part {tok:?}: {e}"))
        })?);
    }
    let rows = r as usize + 1;
    if parts.len() > rows {
        return Err(Error::InvalidWeight(format!(
            "{} parts given but sl({}) weights have at most {rows} rows",
            parts.len(),
            r + 1
        )));
    }
    parts.resize(rows, 0);
    Weight::new(parts)
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn scalar_out(format: Format, name: &str, value: &str) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => print_json(&json!({ name: value })),
        Format::Csv => print_csv(name, vec![vec![value.to_string()]]),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON output"));
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_csv(header: &str, rows: Vec<Vec<String>>) {
    println!("{header}");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        println!("{}", cells.join(","));
    }
}
