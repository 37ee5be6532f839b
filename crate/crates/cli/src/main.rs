//! Command-line front end: `recognize`, `abelianize`, `emit-ideal`, `groebner`, `dim`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use s3rec::abelian::abelianization;
use s3rec::dimension::cross_check;
use s3rec::groebner::{buchberger_with, Budget, GroebnerBasis, GroebnerError, GroebnerOptions, Ideal, PairSelection};
use s3rec::poly::text::IdealFile;
use s3rec::poly::MonomialOrder;
use s3rec::presentation::{GroupPresentation, HeegaardDiagram};
use s3rec::recognizer::{recognize, recognize_heegaard, RecognizerConfig};
use s3rec::repvar::{representation_ideal_with, RelatorForm};

const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_BUDGET: u8 = 2;

#[derive(Parser)]
#[command(name = "s3rec", version, about = "Decide whether a 3-manifold group presentation presents the trivial group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print a verdict.
    Recognize {
        file: PathBuf,
        #[command(flatten)]
        input: InputKind,
        #[command(flatten)]
        engine: EngineArgs,
        /// Relator equations as `r = 1` (identity) or as a rotated split `u = v` (balanced).
        #[arg(long, default_value = "balanced")]
        relators: RelatorForm,
        /// Print the structured JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Print the abelianization of a presentation.
    Abelianize {
        file: PathBuf,
        #[command(flatten)]
        input: InputKind,
    },
    /// Write the representation-variety equations as an ideal file.
    EmitIdeal {
        file: PathBuf,
        #[command(flatten)]
        input: InputKind,
        /// Output path; stdout when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
        /// Relator equations as `r = 1` (identity) or as a rotated split `u = v` (balanced).
        #[arg(long, default_value = "balanced")]
        relators: RelatorForm,
    },
    /// Print the reduced Groebner basis of an ideal file.
    Groebner {
        file: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Print the Krull dimension of the variety of an ideal file.
    Dim {
        file: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        /// Also print the witness set and the Hilbert-degree cross-check.
        #[arg(short, long)]
        verbose: bool,
    },
}

#[derive(Args)]
struct InputKind {
    /// Read a Heegaard diagram (`genus: g ; curves: ...`) instead of a presentation.
    #[arg(long)]
    heegaard: bool,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, default_value = "grevlex")]
    order: MonomialOrder,
    #[arg(long, default_value_t = Budget::DEFAULT_MAX_TIME.as_secs())]
    max_seconds: u64,
    #[arg(long, default_value_t = Budget::DEFAULT_MAX_PAIRS)]
    max_pairs: u64,
    /// Critical pair strategy: normal, fifo or sugar.
    #[arg(long, default_value = "normal")]
    selection: PairSelection,
}

impl EngineArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_pairs: self.max_pairs,
            max_time: Some(Duration::from_secs(self.max_seconds)),
        }
    }
}

enum Failure {
    Input(String),
    Budget(String),
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path, input: &InputKind) -> Result<GroupPresentation, Failure> {
    let text = read(path)?;
    let parsed = if input.heegaard {
        HeegaardDiagram::parse(&text).map(|d| d.to_presentation())
    } else {
        GroupPresentation::parse(&text)
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path, order: MonomialOrder) -> Result<(IdealFile, Ideal), Failure> {
    let text = read(path)?;
    let file = IdealFile::parse(&text, order).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let ideal = Ideal::new(file.names.len(), order, file.polynomials.clone()).expect("parsed over the declared variables");
    Ok((file, ideal))
}

fn groebner(ideal: &Ideal, engine: &EngineArgs) -> Result<GroebnerBasis, Failure> {
    let options = GroebnerOptions {
        budget: engine.budget(),
        selection: engine.selection,
        ..GroebnerOptions::default()
    };
    buchberger_with(ideal, &options).map_err(|e| match e {
        GroebnerError::BudgetExhausted { .. } => Failure::Budget(format!("inconclusive: {e}")),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Recognize {
            file,
            input,
            engine,
            relators,
            json,
        } => {
            let config = RecognizerConfig {
                order: engine.order,
                budget: engine.budget(),
                selection: engine.selection,
                relator_form: relators,
            };
            let text = read(&file)?;
            let verdict = if input.heegaard {
                let d = HeegaardDiagram::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
                recognize_heegaard(&d, &config)
            } else {
                let p = GroupPresentation::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
                recognize(&p, &config)
            }
            .map_err(|e| Failure::Input(e.to_string()))?;
            if json {
                println!("{}", verdict.to_json());
            } else {
                println!("{verdict}");
            }
            Ok(verdict.exit_code() as u8)
        }
        Command::Abelianize { file, input } => {
            let p = load_presentation(&file, &input)?;
            let ab = abelianization(&p);
            println!("free rank: {}", ab.free_rank);
            let torsion: Vec<String> = ab.torsion.iter().map(ToString::to_string).collect();
            println!("torsion: [{}]", torsion.join(", "));
            println!("group: {ab}");
            println!("{}", if ab.is_trivial { "trivial" } else { "nontrivial" });
            Ok(0)
        }
        Command::EmitIdeal {
            file,
            input,
            output,
            order,
            relators,
        } => {
            let p = load_presentation(&file, &input)?;
            let rep = representation_ideal_with(&p, order, relators);
            let out = IdealFile {
                names: rep.variable_names(),
                polynomials: rep.nonzero().map(|e| e.polynomial.clone()).collect(),
            }
            .render();
            match output {
                Some(path) => fs::write(&path, out).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => print!("{out}"),
            }
            Ok(0)
        }
        Command::Groebner { file, engine } => {
            let (parsed, ideal) = load_ideal(&file, engine.order)?;
            let basis = groebner(&ideal, &engine)?;
            let out = IdealFile {
                names: parsed.names,
                polynomials: basis.elements().to_vec(),
            };
            print!("{}", out.render());
            let s = basis.stats;
            eprintln!(
                "{} elements; {} pairs processed, {} skipped, {} reduced to zero",
                basis.len(),
                s.pairs_processed,
                s.pairs_skipped,
                s.reductions_to_zero
            );
            Ok(0)
        }
        Command::Dim { file, engine, verbose } => {
            let (parsed, ideal) = load_ideal(&file, engine.order)?;
            let basis = groebner(&ideal, &engine)?;
            let report = cross_check(&basis).map_err(|e| Failure::Input(e.to_string()))?;
            println!("{}", report.dimension);
            if verbose {
                let witness: Vec<&str> = report.witness.iter().map(|&v| parsed.names[v].as_str()).collect();
                println!("witness: {{{}}}", witness.join(", "));
                println!("hilbert degree: {}", report.hilbert_degree);
                println!("basis size: {}", basis.len());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
