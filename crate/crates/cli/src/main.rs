//! `traintrack`: canonical forms, braid extraction and the axiom suites from
//! the shell.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for
//! usage or input errors.

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use traintrack::braids::BraidJson;
use traintrack::diagrams::{CertificateJson, DiagramJson};
use traintrack::geometry::theta;
use traintrack::render::{braid_ascii, braid_svg, cell_ascii, cell_svg, diagram_ascii, diagram_svg};
use traintrack::twocells::{
    braiding_cell, extract_braid, oriented, run_axiom_suite, Check, Report, SuiteConfig, CHECKS,
    GEOMETRIC_HANDEDNESS,
};
use traintrack::{dsl, Colour, ColourSet, ColourWord, ColouredBraid, DiagramWord, Sign};

#[derive(Parser)]
#[command(name = "traintrack", version, about = "Train track diagrams and the braiding on End(I)")]
struct Cli {
    /// Declared colours, e.g. `a,b,c`. Without it, colours are taken from
    /// the input.
    #[arg(long, global = true, value_name = "LIST")]
    colours: Option<String>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Crossing sign in which braidings are reported: +1 or -1.
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_sign)]
    handedness: Option<Sign>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Randomized instances per suite.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical representative of a diagram.
    Canon { diagram: String },
    /// Decide whether two diagrams are equal up to interchange.
    Eq { left: String, right: String },
    /// The linearized colour word and train configuration of a diagram.
    Theta { diagram: String },
    /// Decide equality of two braids given as JSON.
    BraidEq { left: String, right: String },
    /// A checked contraction certificate for a diagram.
    Contract { diagram: String },
    /// The braid of T_{f,g} for colour words such as `a` or `a,b`.
    Braiding { f: String, g: String },
    /// Run an axiom suite, or `all`.
    Verify { suite: String },
    /// Draw a diagram, a braid (JSON) or a braiding cell.
    Render {
        #[command(subcommand)]
        what: RenderTarget,
    },
}

#[derive(Subcommand)]
enum RenderTarget {
    Diagram { diagram: String },
    Braid { braid: String },
    Braiding { f: String, g: String },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" => Ok(Sign::Positive),
        "-1" => Ok(Sign::Negative),
        _ => Err(format!("expected +1 or -1, found `{s}`")),
    }
}

enum Failure {
    /// Invalid input; exit status 2.
    Input(String),
    /// A verification failed; exit status 1.
    Verification,
}

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Reads `@path` arguments from files. A file may start with comment lines;
/// `# colours: a,b` declares its colours.
fn source(arg: &str) -> Result<(String, Option<String>), Failure> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok((arg.to_string(), None));
    };
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let mut header = None;
    let mut body = String::new();
    for line in text.lines() {
        if let Some(comment) = line.trim_start().strip_prefix('#') {
            if let Some(list) = comment.trim().strip_prefix("colours:") {
                header = Some(list.trim().to_string());
            }
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    Ok((body.trim().to_string(), header))
}

struct Context {
    colours: Option<ColourSet>,
    format: Option<Format>,
    handedness: Option<Sign>,
    seed: u64,
    budget: Option<usize>,
}

impl Context {
    fn diagram(&self, arg: &str) -> Result<DiagramWord, Failure> {
        let (text, header) = source(arg)?;
        let colours = match (&self.colours, header) {
            (Some(set), _) => set.clone(),
            (None, Some(list)) => ColourSet::parse(&list)?,
            (None, None) => return dsl::parse_any(&text).map_err(|e| Failure::Input(e.render(&text))),
        };
        dsl::parse(&text, &colours).map_err(|e| Failure::Input(e.render(&text)))
    }

    fn word(&self, arg: &str) -> Result<ColourWord, Failure> {
        let colours = arg
            .split(',')
            .map(|name| {
                let c = Colour::new(name.trim())?;
                if let Some(set) = &self.colours {
                    set.check(&c)?;
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        if colours.is_empty() {
            return Err(Failure::Input("empty colour word".into()));
        }
        Ok(ColourWord(colours))
    }

    fn braid(&self, arg: &str) -> Result<ColouredBraid, Failure> {
        let (text, _) = source(arg)?;
        let json: BraidJson = serde_json::from_str(&text)?;
        let braid = ColouredBraid::try_from(json)?;
        if let Some(set) = &self.colours {
            for c in braid.source().letters() {
                set.check(c)?;
            }
        }
        Ok(braid)
    }

    fn handedness(&self) -> Sign {
        self.handedness.unwrap_or(GEOMETRIC_HANDEDNESS)
    }

    fn braiding(&self, f: &str, g: &str) -> Result<(traintrack::TrackedTwoCell, ColouredBraid), Failure> {
        let (f, g) = (self.word(f)?, self.word(g)?);
        let cell = braiding_cell(&f, &g)?;
        let braid = oriented(extract_braid(&cell)?, self.handedness()).freely_reduced();
        Ok((cell, braid))
    }

    fn show_diagram(&self, d: &DiagramWord) {
        match self.format {
            Some(Format::Json) => println!("{}", serde_json::to_string(&DiagramJson::from(d)).expect("json")),
            Some(Format::Svg) => print!("{}", diagram_svg(d)),
            Some(Format::Ascii) => print!("{}", diagram_ascii(d)),
            None => println!("{d}"),
        }
    }

    fn show_braid(&self, b: &ColouredBraid) {
        match self.format {
            Some(Format::Json) => println!("{}", serde_json::to_string(&BraidJson::from(b)).expect("json")),
            Some(Format::Svg) => print!("{}", braid_svg(b)),
            Some(Format::Ascii) => print!("{}", braid_ascii(b)),
            None => println!("{b}"),
        }
    }

    fn verdict(&self, holds: bool, key: &str) -> Outcome {
        match self.format {
            Some(Format::Json) => println!("{}", json!({ key: holds })),
            _ => println!("{}", if holds { key.to_string() } else { format!("not {key}") }),
        }
        if holds {
            Ok(())
        } else {
            Err(Failure::Verification)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let ctx = Context {
        colours: cli.colours.as_deref().map(ColourSet::parse).transpose()?,
        format: cli.format,
        handedness: cli.handedness,
        seed: cli.seed,
        budget: cli.budget,
    };
    match cli.command {
        Command::Canon { diagram } => {
            ctx.show_diagram(&ctx.diagram(&diagram)?.canonicalize());
            Ok(())
        }
        Command::Eq { left, right } => {
            let holds = ctx.diagram(&left)?.equals(&ctx.diagram(&right)?);
            ctx.verdict(holds, "equal")
        }
        Command::Theta { diagram } => {
            let (word, config) = theta(&ctx.diagram(&diagram)?);
            match ctx.format {
                Some(Format::Json) => {
                    let points: Vec<_> = config
                        .points()
                        .iter()
                        .map(|p| json!({"id": p.id, "x": p.x.to_string(), "y": p.y.to_string(), "colour": p.colour}))
                        .collect();
                    println!("{}", json!({"word": word.letters(), "points": points}));
                }
                _ => {
                    println!("{word}");
                    for p in config.points() {
                        println!("{} {} at ({}, {})", p.id, p.colour, p.x, p.y);
                    }
                }
            }
            Ok(())
        }
        Command::BraidEq { left, right } => {
            let holds = ctx.braid(&left)?.equals(&ctx.braid(&right)?);
            ctx.verdict(holds, "equal")
        }
        Command::Contract { diagram } => {
            let d = ctx.diagram(&diagram)?;
            let certificate = d.contract()?;
            certificate.replay(&d)?;
            match ctx.format {
                Some(Format::Json) => {
                    println!("{}", serde_json::to_string(&CertificateJson::from(&certificate))?)
                }
                _ => {
                    for step in &certificate.steps {
                        println!("{step}");
                    }
                    println!(
                        "{} erasures, {} deletions; certificate replays",
                        certificate.erasures(),
                        certificate.deletions()
                    );
                }
            }
            Ok(())
        }
        Command::Braiding { f, g } => {
            let (fw, gw) = (ctx.word(&f)?, ctx.word(&g)?);
            let (_, braid) = ctx.braiding(&f, &g)?;
            ctx.show_braid(&braid);
            let expected = ColouredBraid::block_braiding(&fw, &gw, ctx.handedness());
            if braid.equals(&expected) && !braid.is_identity() {
                Ok(())
            } else {
                eprintln!("braid differs from the block braiding {expected}");
                Err(Failure::Verification)
            }
        }
        Command::Verify { suite } => {
            let checks: Vec<Check> = if suite == "all" {
                CHECKS.to_vec()
            } else {
                vec![suite.parse::<Check>()?]
            };
            let config = SuiteConfig {
                colours: ctx.colours.clone().unwrap_or_else(|| SuiteConfig::default().colours),
                seed: ctx.seed,
                budget: ctx.budget,
                handedness: ctx.handedness(),
            };
            let reports: Vec<Report> = checks.iter().map(|&c| run_axiom_suite(c, &config)).collect();
            match ctx.format {
                Some(Format::Json) if reports.len() == 1 => println!("{}", serde_json::to_string(&reports[0])?),
                Some(Format::Json) => println!("{}", serde_json::to_string(&reports)?),
                _ => {
                    for r in &reports {
                        let status = if r.passed() { "pass" } else { "FAIL" };
                        println!("{status} {} ({} instances, {} failures)", r.check, r.instances, r.failures.len());
                        for f in r.failures.iter().take(5) {
                            println!("  {}", serde_json::to_string(f)?);
                        }
                    }
                }
            }
            if reports.iter().all(Report::passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Render { what } => {
            let format = ctx.format.unwrap_or(Format::Ascii);
            let svg = format == Format::Svg;
            match what {
                RenderTarget::Diagram { diagram } => {
                    let d = ctx.diagram(&diagram)?;
                    print!("{}", if svg { diagram_svg(&d) } else { diagram_ascii(&d) });
                }
                RenderTarget::Braid { braid } => {
                    let b = ctx.braid(&braid)?;
                    print!("{}", if svg { braid_svg(&b) } else { braid_ascii(&b) });
                }
                RenderTarget::Braiding { f, g } => {
                    let (cell, b) = ctx.braiding(&f, &g)?;
                    print!("{}", if svg { cell_svg(&cell, &b) } else { cell_ascii(&cell, &b) });
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
