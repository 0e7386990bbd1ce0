//! `fujita-lab`: classify surface descriptions, print the built-in tables,
//! run the brute-force verification suite, and evaluate Riemann–Roch data
//! for explicit divisor classes.
//!
//! Exit codes: 0 on success (every verdict exact), 1 on input errors,
//! 2 on verification failure, 3 when some verdict is an interval or
//! conditional ("mathematically open" rather than "bad input").

mod tables;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use fujita_core::engine::classify;
use fujita_core::lattice::DivisorClass;
use fujita_core::rational::{fmt_rat, parse_rat};
use fujita_core::schema::{parse_description_document, SurfaceDescription, SurfaceReport};
use fujita_core::verdict::{FujitaVerdict, Witness};

use tables::TableFormat;

const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_OPEN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fujita-lab",
    version,
    about = "Convex Fujita numbers of minimal surfaces over exact lattice arithmetic"
)]
struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the surfaces described in a JSON file
    Classify {
        /// Description file: {"family": ..., "params": {...}} or {"batch": [...]}
        path: PathBuf,
    },
    /// Print a built-in table
    Table {
        which: TableName,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatName::Markdown)]
        format: FormatName,
    },
    /// Run the brute-force cross-check suite
    Verify {
        /// Box bound for the enumerations (default 6; FUJITA_LAB_BUDGET overrides it)
        #[arg(long)]
        budget: Option<i64>,
        /// Corrupt one Gram matrix to exercise the failure path
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Riemann–Roch report for a divisor class on a described surface
    Rr {
        /// Description file with a single surface
        path: PathBuf,
        /// Class coordinates in the surface basis, e.g. "1,3" or "1/4,1/2"
        #[arg(long)]
        class: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    #[value(name = "theoremA", alias = "theorem-a", alias = "headline")]
    Headline,
    #[value(name = "bielliptic")]
    Bielliptic,
    #[value(name = "enriques_examples", alias = "enriques-examples")]
    EnriquesExamples,
    #[value(name = "pe_grid", alias = "pe-grid")]
    PeGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatName {
    Markdown,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { path } => cmd_classify(&path, cli.json),
        Command::Table { which, format } => cmd_table(which, format),
        Command::Verify {
            budget,
            inject_fault,
        } => cmd_verify(budget, inject_fault),
        Command::Rr { path, class } => cmd_rr(&path, &class, cli.json),
    }
}

fn read_descriptions(path: &PathBuf) -> Result<Vec<SurfaceDescription>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(parse_description_document(&text)?)
}

fn render_witness(witness: &Witness, indent: &str) -> String {
    match witness {
        Witness::AmpleClass {
            basis,
            coords,
            self_intersection,
        } => format!(
            "{indent}witness: ample class ({}) in basis ({}), L² = {self_intersection}",
            coords.join(", "),
            basis.join(", "),
        ),
        Witness::AmpleClassPair {
            basis,
            first,
            second,
            pairing,
        } => format!(
            "{indent}witness: ample pair ({}) and ({}) in basis ({}), C₁·C₂ = {pairing}",
            first.join(", "),
            second.join(", "),
            basis.join(", "),
        ),
        Witness::Record(map) => {
            let body = map
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect::<Vec<_>>()
                .join(", ");
            format!("{indent}witness: {body}")
        }
    }
}

fn print_verdict_text(report: &SurfaceReport, verdict: &FujitaVerdict) {
    println!("surface: {}", report.family);
    println!("verdict: {verdict}");
    println!("trace:");
    for (i, step) in verdict.trace.iter().enumerate() {
        println!("  {}. [{}] {}", i + 1, step.rule, step.cite);
        if let Some(w) = &step.witness {
            println!("{}", render_witness(w, "     "));
        }
    }
}

fn cmd_classify(path: &PathBuf, json: bool) -> Result<ExitCode> {
    let descriptions = read_descriptions(path)?;
    let mut results = Vec::new();
    for description in &descriptions {
        let model = description.to_model()?;
        let verdict = classify(&model)?;
        results.push((SurfaceReport::of(&model), verdict));
    }
    let all_exact = results.iter().all(|(_, v)| v.exact);
    if json {
        let body: Vec<serde_json::Value> = results
            .iter()
            .map(|(report, verdict)| serde_json::json!({ "surface": report, "verdict": verdict }))
            .collect();
        let doc = if body.len() == 1 {
            body.into_iter().next().expect("one element")
        } else {
            serde_json::Value::Array(body)
        };
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for (i, (report, verdict)) in results.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print_verdict_text(report, verdict);
        }
    }
    Ok(if all_exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_OPEN)
    })
}

fn cmd_table(which: TableName, format: FormatName) -> Result<ExitCode> {
    let format = match format {
        FormatName::Markdown => TableFormat::Markdown,
        FormatName::Csv => TableFormat::Csv,
    };
    let table = match which {
        TableName::Headline => tables::table_headline()?,
        TableName::Bielliptic => tables::table_bielliptic(),
        TableName::EnriquesExamples => tables::table_enriques_examples()?,
        TableName::PeGrid => tables::table_pe_grid()?,
    };
    print!("{}", table.render(format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(budget: Option<i64>, inject_fault: bool) -> Result<ExitCode> {
    let budget = match budget {
        Some(b) => b,
        None => match std::env::var("FUJITA_LAB_BUDGET") {
            Ok(text) => text
                .trim()
                .parse::<i64>()
                .map_err(|_| anyhow!("FUJITA_LAB_BUDGET must be an integer, got `{text}`"))?,
            Err(_) => fujita_core::oracle::SearchBox::DEFAULT_BOUND,
        },
    };
    let outcomes = verify::run_all(budget, inject_fault);
    let mut all_passed = true;
    for outcome in &outcomes {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status}  {}: {}", outcome.name, outcome.detail);
        if !outcome.passed && all_passed {
            all_passed = false;
            println!(
                "first counterexample: {} — {}",
                outcome.name, outcome.detail
            );
        }
    }
    println!(
        "verify: {}/{} checks passed (budget {budget})",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    })
}

fn parse_class(model_report: &SurfaceReport, text: &str) -> Result<Vec<fujita_core::Rat>> {
    let coords: Vec<fujita_core::Rat> = text
        .split(',')
        .map(|part| parse_rat(part).ok_or_else(|| anyhow!("`{part}` is not a rational number")))
        .collect::<Result<_>>()?;
    if coords.len() != model_report.basis.len() {
        return Err(anyhow!(
            "class has {} coordinates but the lattice basis ({}) has rank {}",
            coords.len(),
            model_report.basis.join(", "),
            model_report.basis.len()
        ));
    }
    Ok(coords)
}

fn cmd_rr(path: &PathBuf, class_text: &str, json: bool) -> Result<ExitCode> {
    let descriptions = read_descriptions(path)?;
    if descriptions.len() != 1 {
        return Err(anyhow!(
            "the rr command needs a single surface description, got a batch of {}",
            descriptions.len()
        ));
    }
    let model = descriptions[0].to_model()?;
    let report = SurfaceReport::of(&model);
    let coords = parse_class(&report, class_text)?;
    let class: DivisorClass = model.lattice().class(coords)?;

    let self_int = class.self_intersection();
    let numerics = model.numerics();
    let k_dot = numerics.canonical().map(|k| k.pair(&class)).transpose()?;
    let chi = numerics.chi_of_class(&class).ok();
    let genus = numerics.adjunction_genus(&class).ok();
    let primitive = class.is_primitive().ok();

    if json {
        let doc = serde_json::json!({
            "surface": report,
            "class": class.coord_strings(),
            "self_intersection": fmt_rat(&self_int),
            "canonical_degree": k_dot.as_ref().map(fmt_rat),
            "chi": chi.as_ref().map(fmt_rat),
            "adjunction_genus": genus.as_ref().map(fmt_rat),
            "primitive": primitive,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("surface: {}", report.family);
        println!(
            "class:   {class} (coordinates {})",
            class.coord_strings().join(", ")
        );
        println!("L²       = {}", fmt_rat(&self_int));
        match &k_dot {
            Some(v) => println!("K·L      = {}", fmt_rat(v)),
            None => println!("K·L      = (canonical class not modeled)"),
        }
        if let Some(chi) = &chi {
            println!("χ(L)     = {}", fmt_rat(chi));
        }
        match &genus {
            Some(g) => println!("p_a      = {}", fmt_rat(g)),
            None => println!("p_a      = (needs an integral class)"),
        }
        if let Some(p) = primitive {
            println!("primitive: {p}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
