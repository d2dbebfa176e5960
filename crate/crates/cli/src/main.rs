//! `rinvar` — rational invariants of algebraic group actions.
//!
//! Reads a problem file describing a group and its rational action on
//! affine space, and runs one of the graph-ideal computations: the graph
//! ideal itself, generating invariants, rewriting, cross-section
//! validation, replacement invariants, invariantization, moving-frame
//! ideals, or orbit ideals at rational points.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical rejection
//! (invalid cross-section, excluded locus, non-invariant target), 3
//! internal consistency failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rinvar_cli::problem::{parse_point, parse_problem, parse_zeta_poly, Problem};
use rinvar_cli::report::Report;
use rinvar::{
    BaseOrder, CrossSection, Error, ErrorKind, Field, GraphIdeal, GroebnerBasis, InvariantSet,
    OrderBlock, QPoly, Result, SectionIdeal, TermOrder, ValidationOptions,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "rinvar", version, about = "Rational invariants of algebraic group actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the graph ideal O in K[z, Z]
    Graph(CommonArgs),
    /// List the generating rational invariants read off O^e
    Invariants(CommonArgs),
    /// Rewrite an invariant in terms of the generators
    Rewrite {
        #[command(flatten)]
        common: CommonArgs,
        /// Rational invariant to rewrite
        #[arg(long)]
        target: String,
    },
    /// Validate the cross-section declared in the file
    SectionValidate(CommonArgs),
    /// List the invariants read off the section ideal I^e
    SectionInvariants(CommonArgs),
    /// Describe the replacement invariants on the cross-section
    Replacement(CommonArgs),
    /// Invariantize a polynomial in zeta with coordinate coefficients
    Invariantize {
        #[command(flatten)]
        common: CommonArgs,
        /// Polynomial in zeta, e.g. "zeta^2 - z1"
        #[arg(long)]
        poly: String,
    },
    /// Compute the moving-frame ideal and test local freeness
    MovingFrame(CommonArgs),
    /// Generators of the orbit ideal at a rational point
    Orbit {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated rational coordinates, e.g. "1,-1/2"
        #[arg(long)]
        point: String,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Problem file describing the group and its action
    file: PathBuf,
    /// Term order for displayed bases
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    /// Seed for validation spot checks
    #[arg(long)]
    seed: Option<u64>,
    /// Candidate retry budget
    #[arg(long)]
    retries: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

const DEFAULT_SEED: u64 = 24601;

struct Loaded {
    graph: Arc<GraphIdeal>,
    section: Option<Vec<QPoly>>,
    warnings: Vec<String>,
    order_name: String,
    lex: bool,
    output: OutputArg,
}

fn load(args: &CommonArgs) -> Result<Loaded> {
    if let Some(r) = args.retries {
        if r == 0 {
            return Err(Error::Input("retries must be at least 1".into()));
        }
    }
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Error::Input(format!("{}: {e}", args.file.display())))?;
    let Problem { action, section, priority, settings } = parse_problem(&text)?;

    let order_name = match args.order {
        Some(OrderArg::Lex) => "lex".to_string(),
        Some(OrderArg::Grevlex) => "grevlex".to_string(),
        None => settings.order.unwrap_or_else(|| "grevlex".to_string()),
    };
    let seed = args.seed.or(settings.seed).unwrap_or(DEFAULT_SEED);

    let opts = ValidationOptions { seed, ..ValidationOptions::default() };
    let validation = action.validate(&opts)?;

    let graph = match priority {
        Some(p) => GraphIdeal::with_priority(action, p)?,
        None => GraphIdeal::new(action)?,
    };
    Ok(Loaded {
        graph: Arc::new(graph),
        section,
        warnings: validation.warnings,
        lex: order_name == "lex",
        order_name,
        output: args.output,
    })
}

/// Re-presents a basis under the lexicographic variant of its own order
/// when requested; block structure and significance are kept.
fn present<F: Field>(basis: &GroebnerBasis<F>, lex: bool) -> Vec<String> {
    if !lex || basis.elements().is_empty() {
        return basis.to_strings();
    }
    let order = match basis.order() {
        TermOrder::Block(blocks) => TermOrder::Block(
            blocks
                .iter()
                .map(|b| OrderBlock { vars: b.vars.clone(), order: BaseOrder::Lex })
                .collect(),
        ),
        _ => TermOrder::Lex,
    };
    GroebnerBasis::compute(basis.ctx(), basis.elements(), order).to_strings()
}

fn invariant_strings(set: &InvariantSet) -> Vec<String> {
    set.entries().iter().map(|e| e.to_string()).collect()
}

fn build_section(loaded: &Loaded) -> Result<SectionIdeal> {
    let gens = loaded
        .section
        .clone()
        .ok_or_else(|| {
            Error::Input("this command needs a [cross_section] table in the problem file".into())
        })?;
    let cs = CrossSection::new(loaded.graph.zcap_ctx(), gens)?;
    SectionIdeal::build(Arc::clone(&loaded.graph), cs)
}

fn section_detail(report: &mut Report, ideal: &SectionIdeal) {
    let r = ideal.report();
    report.detail.push(format!("orbit dimension: {}", r.orbit_dimension));
    report.detail.push(format!("section codimension: {}", r.section_codimension));
    report.detail.push(format!("zero-dimensional: {}", r.zero_dimensional));
    report.detail.push(format!("radical: {}", r.radical));
    if let Some(t) = r.transversal_rank {
        report.detail.push(format!("transversal rank: {t}"));
    }
}

fn emit(mut report: Report, loaded: &Loaded, start: Instant) {
    report.elapsed_ms = start.elapsed().as_millis();
    match loaded.output {
        OutputArg::Json => println!("{}", report.to_json()),
        OutputArg::Text => print!("{}", report.to_text()),
    }
}

fn run(cmd: &Command) -> Result<()> {
    let start = Instant::now();
    match cmd {
        Command::Graph(args) => {
            let loaded = load(args)?;
            let mut report = Report::new("graph", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.detail.push(format!("orbit dimension: {}", loaded.graph.orbit_dimension()));
            report.basis = present(loaded.graph.o_basis(), loaded.lex);
            report.invariants = invariant_strings(loaded.graph.generating_invariants());
            emit(report, &loaded, start);
        }
        Command::Invariants(args) => {
            let loaded = load(args)?;
            let mut report = Report::new("invariants", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.detail.push(format!("orbit dimension: {}", loaded.graph.orbit_dimension()));
            report.basis = present(loaded.graph.oext(), loaded.lex);
            report.invariants = invariant_strings(loaded.graph.generating_invariants());
            emit(report, &loaded, start);
        }
        Command::Rewrite { common, target } => {
            let loaded = load(common)?;
            let f = rinvar::parse::parse_ratfunc(target, loaded.graph.action().z_ctx())?;
            let rewritten = loaded.graph.rewrite_invariant(&f)?;
            let mut report = Report::new("rewrite", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.invariants = vec![rewritten.to_display_string()];
            for (i, e) in loaded.graph.generating_invariants().entries().iter().enumerate() {
                report.detail.push(format!("y{} = {e}", i + 1));
            }
            emit(report, &loaded, start);
        }
        Command::SectionValidate(args) => {
            let loaded = load(args)?;
            let ideal = build_section(&loaded)?;
            let mut report = Report::new("section-validate", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            section_detail(&mut report, &ideal);
            report.basis = present(ideal.basis(), loaded.lex);
            report.degree = Some(ideal.degree());
            emit(report, &loaded, start);
        }
        Command::SectionInvariants(args) => {
            let loaded = load(args)?;
            let ideal = build_section(&loaded)?;
            let mut report = Report::new("section-invariants", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.basis = present(ideal.basis(), loaded.lex);
            report.invariants = invariant_strings(ideal.invariants());
            report.degree = Some(ideal.degree());
            emit(report, &loaded, start);
        }
        Command::Replacement(args) => {
            let loaded = load(args)?;
            let ideal = build_section(&loaded)?;
            let desc = ideal.replacement()?;
            let mut report = Report::new("replacement", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.degree = Some(desc.degree());
            report.basis = desc.components().iter().map(|(_, m)| m.to_string()).collect();
            if let Some(values) = desc.explicit() {
                report.invariants = values.iter().map(|v| v.to_string()).collect();
            }
            for line in desc.render().lines() {
                report.detail.push(line.to_string());
            }
            emit(report, &loaded, start);
        }
        Command::Invariantize { common, poly } => {
            let loaded = load(common)?;
            let ideal = build_section(&loaded)?;
            let dense = parse_zeta_poly(poly, loaded.graph.action().z_ctx())?;
            let result = ideal.invariantize(&dense)?;
            let mut report = Report::new("invariantize", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.invariants = vec![result.to_string()];
            emit(report, &loaded, start);
        }
        Command::MovingFrame(args) => {
            let loaded = load(args)?;
            let ideal = build_section(&loaded)?;
            let frame = ideal.moving_frame()?;
            let mut report = Report::new("moving-frame", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.detail.push(format!("locally free: {}", frame.locally_free()));
            if !frame.locally_free() {
                report.warnings.push("the action is not locally free on this section".into());
            }
            report.basis = present(frame.basis(), loaded.lex);
            report.degree = frame.degree();
            emit(report, &loaded, start);
        }
        Command::Orbit { common, point } => {
            let loaded = load(common)?;
            let pt = parse_point(point)?;
            let basis = loaded.graph.orbit_ideal_at(&pt)?;
            let mut report = Report::new("orbit", &loaded.order_name);
            report.warnings = loaded.warnings.clone();
            report.detail.push(format!("point: ({})", point.trim()));
            report.basis = present(&basis, loaded.lex);
            emit(report, &loaded, start);
        }
    }
    Ok(())
}

fn print_error(e: &Error) {
    eprintln!("error: {e}");
    match e {
        Error::SectionRejected { report, .. } => eprintln!("  {report}"),
        Error::RetriesExhausted { rejections, .. } => {
            for r in rejections {
                eprintln!("  {r}");
            }
        }
        _ => {}
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as ClapKind;
            let code = match e.kind() {
                ClapKind::DisplayHelp | ClapKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            print_error(&e);
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 1,
                ErrorKind::Rejected => 2,
                ErrorKind::Internal => 3,
            })
        }
    }
}
