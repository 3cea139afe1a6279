use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use paratorsion::analysis::analyze;
use paratorsion::liealg::{parse_params, Params};
use paratorsion::pstruct::Structure;
use paratorsion::search::{self, SearchConfig, SplittingCandidate};
use paratorsion::torsion::{compose_classes, product};
use paratorsion::{Error, LieAlgebra};
use paratorsion_cli::input::{self, Resolved};
use paratorsion_cli::regression;
use paratorsion_cli::report::{AlgebraSummary, AnalyzeReport, CandidateSummary, FamilySummary, Meta, SearchSummary};
use paratorsion_cli::{CliError, Status};

/// Intrinsic torsion and Ricci curvature of left-invariant SL(n,R)-structures.
///
/// INPUT is an inline Salamon string such as "0,0,0,12", a path to an .alg
/// file, a corpus name, or abelian-<dim>.
#[derive(Parser)]
#[command(name = "paratorsion", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Source {
    #[arg(allow_hyphen_values = true)]
    input: String,
    /// Record to pick from a multi-record .alg file.
    #[arg(long)]
    family: Option<usize>,
    /// Parameter values, e.g. lambda=1,mu=-3,k=1/2 (λ and μ also accepted).
    #[arg(long)]
    params: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jacobi identity, nilpotency and unimodularity.
    Check {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        json: bool,
    },
    /// Torsion class, curvature, and the formula/oracle comparison.
    Analyze {
        #[command(flatten)]
        src: Source,
        /// standard, neg-V, or matrix rows separated by ';'.
        #[arg(long)]
        coframe: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Look for Ricci-flat nearly parakähler structures.
    Search {
        #[command(flatten)]
        src: Source,
        /// coords, file:<path>, or enum:<bound>.
        #[arg(long, default_value = "coords")]
        splitting: String,
        /// Most candidates taken from enum:<bound>.
        #[arg(long, default_value_t = 500)]
        cap: usize,
        #[arg(long, default_value_t = SearchConfig::default().max_witnesses)]
        max_witnesses: usize,
        #[arg(long, default_value_t = SearchConfig::default().max_norm)]
        max_norm: i64,
        #[arg(long, default_value_t = SearchConfig::default().max_candidates)]
        max_candidates: usize,
        #[arg(long)]
        json: bool,
    },
    /// The product structure on A ⊕ B.
    Product {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the worked-example regression.
    Corpus {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Check { src, json } => check(&src, json),
        Cmd::Analyze { src, coframe, json } => analyze_cmd(&src, coframe.as_deref(), json),
        Cmd::Search { src, splitting, cap, max_witnesses, max_norm, max_candidates, json } => {
            let cfg = SearchConfig { max_witnesses, max_norm, max_candidates };
            search_cmd(&src, &splitting, cap, &cfg, json)
        }
        Cmd::Product { a, b, json } => product_cmd(&a, &b, json),
        Cmd::Corpus { json } => corpus_cmd(json),
    };
    match result {
        Ok(s) => s.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.status().into()
        }
    }
}

fn params(src: &Source) -> Result<Option<Params>, CliError> {
    Ok(src.params.as_deref().map(parse_params).transpose()?)
}

fn resolve(src: &Source) -> Result<Resolved, CliError> {
    input::resolve(&src.input, src.family, params(src)?.as_ref())
}

fn elapsed(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn print_json<T: serde::Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

fn check(src: &Source, json: bool) -> Result<Status, CliError> {
    let r = resolve(src)?;
    let s = AlgebraSummary::new(&r.algebra);
    if json {
        print_json(&s);
    } else {
        println!("algebra     ({})  dim {}", s.salamon, s.dim);
        match &s.jacobi_witness {
            None => println!("jacobi      ok"),
            Some(w) => println!("jacobi      FAILS: {w}"),
        }
        if s.jacobi {
            println!("nilpotent   {}", s.nilpotent);
            println!("unimodular  {}", s.unimodular);
        }
    }
    Ok(if s.jacobi { Status::Ok } else { Status::Math })
}

fn structure(l: &LieAlgebra, coframe: &paratorsion::Matrix) -> Result<Structure, CliError> {
    l.require_jacobi()?;
    if l.dim() % 2 == 1 {
        return Err(Error::OddDimension(l.dim()).into());
    }
    Ok(Structure::with_coframe(l, coframe)?)
}

fn emit(rep: &AnalyzeReport, json: bool) -> Status {
    if json {
        print_json(rep);
    } else {
        print!("{}", rep.text());
    }
    if rep.agreement.all {
        Status::Ok
    } else {
        eprintln!("formula/oracle mismatch: {}", rep.failed_checks().join(", "));
        Status::Math
    }
}

fn analyze_cmd(src: &Source, coframe: Option<&str>, json: bool) -> Result<Status, CliError> {
    let t = Instant::now();
    let r = resolve(src)?;
    let dim = r.algebra.dim();
    if dim % 2 == 1 {
        return Err(Error::OddDimension(dim).into());
    }
    let m = match (coframe, r.coframe) {
        (Some(c), _) => input::coframe(c, dim)?,
        (None, Some(m)) => m,
        (None, None) => paratorsion::Matrix::identity(dim),
    };
    let s = structure(&r.algebra, &m)?;
    let a = analyze(&s)?;
    Ok(emit(&AnalyzeReport::new(&s, &a, elapsed(t)), json))
}

fn product_cmd(a: &str, b: &str, json: bool) -> Result<Status, CliError> {
    let t = Instant::now();
    let standard = |arg: &str| -> Result<Structure, CliError> {
        let l = input::resolve(arg, None, None)?.algebra;
        structure(&l, &paratorsion::Matrix::identity(l.dim()))
    };
    let (sa, sb) = (standard(a)?, standard(b)?);
    let (ca, cb) = (analyze(&sa)?.class, analyze(&sb)?.class);
    let s = product(&sa, &sb)?;
    let an = analyze(&s)?;
    let want = compose_classes(&ca, &cb);
    let rep = AnalyzeReport::new(&s, &an, elapsed(t));
    let status = emit(&rep, json);
    if an.class != want {
        eprintln!("product class {} but the factors {} and {} compose to {}", an.class, ca, cb, want);
        return Ok(Status::Math);
    }
    if !json {
        println!("factors     {ca} x {cb}");
    }
    Ok(status)
}

fn candidates(l: &LieAlgebra, how: &str, cap: usize) -> Result<(Vec<SplittingCandidate>, bool), CliError> {
    if how == "coords" {
        return Ok((vec![SplittingCandidate::coords(l)?], false));
    }
    if let Some(path) = how.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        return Ok((vec![search::parse_splitting(l, &text)?], false));
    }
    if let Some(b) = how.strip_prefix("enum:") {
        let b: i64 = b.parse().map_err(|_| CliError::Core(Error::Parse { pos: 5, msg: format!("bad bound {b:?}") }))?;
        return Ok(search::graph_splittings(l, b, cap)?);
    }
    Err(CliError::Usage(format!("--splitting takes coords, file:<path> or enum:<bound>, not {how:?}")))
}

fn search_cmd(src: &Source, splitting: &str, cap: usize, cfg: &SearchConfig, json: bool) -> Result<Status, CliError> {
    let t = Instant::now();
    let r = resolve(src)?;
    let l = &r.algebra;
    structure(l, &paratorsion::Matrix::identity(l.dim()))?;
    let family = match r.family {
        Some(k) => Some(FamilySummary::new(k, &search::family_checks(l)?.1)),
        None => None,
    };
    let (cands, truncated) = candidates(l, splitting, cap)?;
    let reports: Vec<_> =
        cands.par_iter().map(|c| search::search(l, c, cfg)).collect::<Result<Vec<_>, _>>()?;
    let summaries: Vec<CandidateSummary> = reports.iter().enumerate().map(|(i, r)| CandidateSummary::new(i + 1, r)).collect();
    let successes = summaries.iter().filter(|c| c.success).count();
    let meta = Meta { version: env!("CARGO_PKG_VERSION").into(), coframe: splitting.into(), elapsed_ms: elapsed(t) };
    let out = SearchSummary { algebra: AlgebraSummary::new(l), family, candidates: summaries, truncated, successes, meta };
    // a witness that fails its checks contradicts the theory, not the input
    let broken = out.candidates.iter().any(|c| c.witnesses.iter().any(|w| !w.ok));
    let family_failed = out.family.as_ref().is_some_and(|f| !f.all);
    if json {
        print_json(&out);
    } else {
        println!("algebra     ({})", out.algebra.salamon);
        if let Some(f) = &out.family {
            let verdict = if f.all { "verified: nilpotent, W1 with tau1 != 0, Ricci-flat, not flat" } else { "FAILED" };
            println!("family {}    {verdict}", f.family);
        }
        for c in &out.candidates {
            let k = &c.conditions;
            let yn = |b: bool| if b { "yes" } else { "no" };
            println!(
                "#{:<4} rank {} simple {} no-common-factor {} dbeta {}  F-space {}  witnesses {} ({})  {}",
                c.index,
                k.rank,
                yn(k.simple_image),
                yn(k.no_common_factor),
                yn(k.dbeta_type_ok),
                c.f_space.len(),
                c.witnesses.len(),
                c.witness_outcome,
                if c.success { "W1 Ricci-flat" } else { "-" }
            );
        }
        let more = if out.truncated { " (enumeration cut at --cap)" } else { "" };
        println!("{} of {} candidates give Ricci-flat nearly parakähler structures{more}", out.successes, out.candidates.len());
    }
    Ok(if broken || family_failed { Status::Math } else { Status::Ok })
}

fn corpus_cmd(json: bool) -> Result<Status, CliError> {
    let lines = regression::run_all();
    let failed = lines.iter().filter(|l| !l.ok).count();
    if json {
        print_json(&lines);
    } else {
        for l in &lines {
            println!("{}  {:<32} {}", if l.ok { "ok  " } else { "FAIL" }, l.name, l.detail);
        }
        println!("{} checks, {} failed", lines.len(), failed);
    }
    Ok(if failed == 0 { Status::Ok } else { Status::Math })
}
