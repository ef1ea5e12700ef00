use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use epiword::analysis::{check_palindrome_returns, check_rich_bispecial, check_rich_crw, h_profile};
use epiword::morphisms::{class_p_witness, find_pret_radius, is_pret, s_operator, s_preimage, standard_p_witness};
use epiword::palindrome::{defect_profile, psi_palindromic_complexity, AntimorphismKind};
use epiword::{FactorIndex, Word};
use epiword_cli::config::expand_config;
use epiword_cli::experiments::{self, pret_failure};
use epiword_cli::parse::{parse_count, parse_morphism, Checkpoints};
use epiword_cli::report::{Format, Report, VerdictRecord};
use epiword_cli::source::SourceArgs;
use epiword_cli::sweep::{sweep, Sweep};
use epiword_cli::{CliError, Result};

/// Palindromic richness experiments on episturmian words and their images.
#[derive(Parser, Debug)]
#[command(name = "epiword", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first n letters of a word
    #[command(args_override_self = true)]
    Gen {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_count)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Defect of prefixes at the given checkpoints
    #[command(args_override_self = true)]
    Defect {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        checkpoints: Checkpoints,
        #[command(flatten)]
        output: Output,
    },
    /// Factor and palindromic complexity plus richness checks on a prefix
    #[command(args_override_self = true)]
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_count, default_value = "10000")]
        depth: usize,
        #[arg(long, default_value_t = 20)]
        max_len: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Classify a morphism (P, standard P, P_ret)
    #[command(args_override_self = true)]
    CheckMorphism {
        #[arg(long)]
        morphism: String,
        /// Test P_ret membership with this radius only
        #[arg(long)]
        radius: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Print the binary projection of a word (needs --subset)
    #[command(args_override_self = true)]
    Project {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_count)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply S to a binary word, or take its S-preimage with --preimage
    #[command(args_override_self = true)]
    SOp {
        /// Binary word given directly instead of a source
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_count, default_value = "100")]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare ΔC(n) + 4 with the palindromic counts for R and E
    #[command(args_override_self = true)]
    HRich {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 50)]
        nmax: usize,
        #[arg(long, value_parser = parse_count, default_value = "20000")]
        depth: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Rerun a named experiment
    #[command(args_override_self = true)]
    Reproduce {
        /// One of: example3, fib-remark, remark7, theorem1, theorem2, prop12,
        /// richness, classifier, oracle, s-roundtrip, lemmas
        id: String,
        #[command(flatten)]
        output: Output,
    },
    /// Random search for rich-projection counterexamples over k >= 4 letters
    #[command(args_override_self = true)]
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Single depth (ignored when --checkpoints is given)
        #[arg(long, value_parser = parse_count, default_value = "10000")]
        depth: usize,
        #[arg(long, default_value_t = experiments::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        checkpoints: Option<Checkpoints>,
        #[command(flatten)]
        output: Output,
    },
}

fn write_word(word: &Word, out: Option<&PathBuf>) -> Result<bool> {
    let text = format!("{word}\n");
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn emit(report: &Report, output: &Output) -> Result<bool> {
    report.emit(output.format, output.out.as_deref())?;
    for f in report.failures() {
        eprintln!("FAIL {} [{}] {}", f.check, f.parameters, f.counterexample.as_deref().unwrap_or(""));
    }
    Ok(report.passed())
}

fn with_source(mut report: Report, source: &SourceArgs) -> Report {
    for (k, v) in source.describe() {
        report.param(k, v);
    }
    report
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Gen { source, n, out } => write_word(&source.build()?.prefix(n), out.as_ref()),
        Command::Project { source, n, out } => {
            if source.subset.is_none() {
                return Err(CliError::Usage("project needs --subset".into()));
            }
            write_word(&source.build()?.prefix(n), out.as_ref())
        }
        Command::SOp { word, source, n, out } => {
            let result = match word {
                Some(w) => {
                    let w = Word::digits(&w, 2)?;
                    match source.preimage {
                        Some(a) => s_preimage(&w, a)?,
                        None => s_operator(&w)?,
                    }
                }
                None if source.preimage.is_some() => source.build()?.prefix(n),
                None => s_operator(&source.build()?.prefix(n + 1))?,
            };
            write_word(&result, out.as_ref())
        }
        Command::Defect { source, checkpoints, output } => {
            let mut report = with_source(Report::new("defect", &["defect"]), &source);
            report.param("checkpoints", format!("{:?}", checkpoints.0));
            for (n, d) in defect_profile(&mut source.build()?, &checkpoints.0)? {
                report.row(n, [d]);
            }
            emit(&report, &output)
        }
        Command::Analyze { source, depth, max_len, output } => analyze(&source, depth, max_len, &output),
        Command::CheckMorphism { morphism, radius, output } => check_morphism(&morphism, radius.as_deref(), &output),
        Command::HRich { source, nmax, depth, output } => h_rich(&source, nmax, depth, &output),
        Command::Reproduce { id, output } => emit(&experiments::reproduce(&id)?, &output),
        Command::Sweep { k, samples, depth, seed, checkpoints, output } => {
            let checkpoints = checkpoints.map_or_else(|| vec![depth], |c| c.0);
            emit(&sweep(&Sweep { k, samples, seed, checkpoints })?, &output)
        }
    }
}

fn h_rich(source: &SourceArgs, nmax: usize, depth: usize, output: &Output) -> Result<bool> {
    let mut report = with_source(Report::new("h-rich", &["n", "lhs", "rhs", "equal"]), source);
    report.param("nmax", nmax);
    let idx = FactorIndex::build(source.build()?.prefix(depth), nmax + 1)?;
    let params = format!("nmax={nmax}");
    let profile = match h_profile(&idx, nmax) {
        Ok(profile) => profile,
        Err(epiword::Error::PreconditionViolation(msg)) => {
            report.verdict(VerdictRecord::new("closed-under-H", params, depth, false).with_counterexample(msg));
            return emit(&report, output);
        }
        Err(e) => return Err(e.into()),
    };
    report.verdict(VerdictRecord::new("closed-under-H", params.clone(), depth, true));
    for r in &profile.rows {
        report.row(depth, [r.n.to_string(), r.lhs.to_string(), r.rhs.to_string(), r.is_equality().to_string()]);
    }
    report.param("equal-from", profile.equal_from());
    let strict = profile.strict_rows();
    let mut v = VerdictRecord::new("h-rich", params, depth, strict.is_empty());
    if !strict.is_empty() {
        v = v.with_counterexample(format!("strict rows {strict:?}"));
    }
    report.verdict(v);
    emit(&report, output)
}

fn analyze(source: &SourceArgs, depth: usize, max_len: usize, output: &Output) -> Result<bool> {
    let mut report = with_source(Report::new("analyze", &["n", "complexity", "palindromes", "bispecial"]), source);
    report.param("max-len", max_len);
    let word = source.build()?.prefix(depth);
    let idx = FactorIndex::build(word, max_len + 2)?;
    let bispecial = idx.enumerate_bispecial(max_len)?;
    for n in 0..=max_len {
        let pals = psi_palindromic_complexity(&idx, n, AntimorphismKind::R)?;
        let bis = bispecial.iter().filter(|w| w.len() == n).count();
        report.row(depth, [n, idx.factor_complexity(n)?, pals, bis]);
    }
    let params = format!("maxLen={max_len}");
    report.verdict(VerdictRecord::from_outcome(params.clone(), &check_rich_crw(&idx, max_len)?));
    report.verdict(VerdictRecord::from_outcome(params.clone(), &check_palindrome_returns(&idx, 1, max_len)?));
    match check_rich_bispecial(&idx, max_len) {
        Ok(out) => report.verdict(VerdictRecord::from_outcome(params, &out)),
        Err(epiword::Error::PreconditionViolation(msg)) => {
            report.param("rich-bispecial", format!("skipped: {msg}"));
        }
        Err(e) => return Err(e.into()),
    }
    emit(&report, output)
}

fn check_morphism(text: &str, radius: Option<&str>, output: &Output) -> Result<bool> {
    let m = parse_morphism(text)?;
    let mut report = Report::new("check-morphism", &["class", "radius"]);
    report.param("morphism", &m);
    let depth = m.max_image_len();
    if let Some(r) = radius {
        let r = Word::digits(r, m.codomain().size())?.with_alphabet(m.codomain().clone())?;
        let holds = is_pret(&m, &r);
        report.row(depth, ["Pret".to_string(), r.to_string()]);
        let mut v = VerdictRecord::new("pret", format!("r={r}"), depth, holds);
        if !holds {
            v = v.with_counterexample(pret_failure(&m, &r));
        }
        report.verdict(v);
        return emit(&report, output);
    }
    let radius_text = |w: Option<Word>| w.map_or("-".to_string(), |r| r.to_string());
    let p = class_p_witness(&m).map(|w| w.radius);
    let sp = standard_p_witness(&m).map(|w| w.radius);
    let pret = find_pret_radius(&m);
    let any = p.is_some() || sp.is_some() || pret.is_some();
    report.row(depth, ["P".to_string(), radius_text(p)]);
    report.row(depth, ["standardP".to_string(), radius_text(sp)]);
    report.row(depth, ["Pret".to_string(), radius_text(pret)]);
    if let Ok(primitive) = m.is_primitive() {
        report.param("primitive", primitive);
    }
    report.verdict(VerdictRecord::new("in-some-class", "P, standardP or Pret", depth, any));
    emit(&report, output)
}

fn main() -> ExitCode {
    let argv = match expand_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let cli = Cli::try_parse_from(argv).unwrap_or_else(|e| e.exit());
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
