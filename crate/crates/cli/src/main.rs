//! `sympow`: command-line front end. Every subcommand prints exactly one
//! JSON document on standard output.
//!
//! Exit codes: 0 for a computed result (a `false` answer included), 2 for
//! parse or validation errors, 3 when a size guard aborts the computation.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use sympow::asymptotics::{alpha, resurgence_report, waldschmidt_sequence, waldschmidt_with};
use sympow::clutter::{is_k_koenig, is_koenig, max_regular_sequence, minor, packing_scan, MinorAssignment};
use sympow::decomposition::height;
use sympow::edge_ideals::verify_threshold;
use sympow::hunt::{hunt, Family, HuntConfig};
use sympow::io::{complex_json, graph_json, parse_complex, parse_graph, parse_ideal, NamedIdeal};
use sympow::stanley_reisner::{stanley_reisner_complex, stanley_reisner_ideal};
use sympow::{Error, Limits, SymbolicIdeal};

#[derive(Parser, Debug)]
#[command(name = "sympow", version, about = "Symbolic powers of square-free monomial ideals")]
struct Cli {
    #[command(flatten)]
    guards: Guards,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Guards {
    /// Abort when an ideal has more minimal primes than this.
    #[arg(long, global = true, default_value_t = Limits::default().max_primes)]
    max_primes: usize,
    /// Abort minor enumeration when the generator support exceeds this many variables.
    #[arg(long, global = true, default_value_t = Limits::default().max_minor_support)]
    max_minors: usize,
    /// Abort when a symbolic power has more minimal generators than this.
    #[arg(long, global = true, default_value_t = Limits::default().max_symbolic_gens)]
    max_symbolic_gens: usize,
    /// Largest power accepted by `edge-analyze --verify`.
    #[arg(long, global = true, default_value_t = Limits::default().max_threshold_power)]
    max_threshold_power: u32,
}

impl Guards {
    fn limits(&self) -> Limits {
        Limits {
            max_primes: self.max_primes,
            max_minor_support: self.max_minors,
            max_symbolic_gens: self.max_symbolic_gens,
            max_threshold_power: self.max_threshold_power,
        }
    }
}

#[derive(Args, Debug)]
struct IdealArg {
    /// Ideal file: {"variables": [...], "generators": [[...], ...]}.
    #[arg(long)]
    ideal: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinary power I^n.
    Power {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        n: u32,
    },
    /// Symbolic power I^(n).
    Symbolic {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        n: u32,
    },
    /// Whether I^(n) = I^n, with a witness when not.
    Equal {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        n: u32,
    },
    /// Whether I^(a) is contained in I^b.
    Contain {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        a: u32,
        #[arg(short)]
        b: u32,
    },
    /// König (or k-König with -k) property.
    Koenig {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        k: Option<usize>,
    },
    /// Packing property: every minor is König.
    Packing {
        #[command(flatten)]
        input: IdealArg,
    },
    /// k-packed: every minor is k-König.
    Kpacked {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        k: usize,
    },
    /// Minor obtained by setting variables to 0 or 1.
    Minor {
        #[command(flatten)]
        input: IdealArg,
        /// Variable indices set to 0.
        #[arg(long, value_delimiter = ',')]
        zero: Vec<usize>,
        /// Variable indices set to 1.
        #[arg(long, value_delimiter = ',')]
        one: Vec<usize>,
    },
    /// Edge ideal analysis: bipartiteness, odd girth, equality threshold.
    EdgeAnalyze {
        /// Graph file: {"vertices": n, "edges": [[a, b], ...]}.
        #[arg(long)]
        graph: PathBuf,
        /// Verify the threshold algebraically for k = 1..=N.
        #[arg(long)]
        verify: Option<u32>,
    },
    /// Stanley–Reisner ideal of a complex.
    SrIdeal {
        /// Complex file: {"vertices": n, "facets": [[...], ...]}.
        #[arg(long)]
        complex: PathBuf,
    },
    /// Stanley–Reisner complex of a square-free ideal.
    SrComplex {
        #[command(flatten)]
        input: IdealArg,
    },
    /// Matroid exchange check for a complex.
    Matroid {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Initial degree of I, or of I^(n) with -n.
    Alpha {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short)]
        n: Option<u32>,
    },
    /// Exact Waldschmidt constant.
    Waldschmidt {
        #[command(flatten)]
        input: IdealArg,
        /// Also list α(I^(m))/m for m = 1..=M.
        #[arg(long)]
        sequence: Option<u32>,
    },
    /// Resurgence bounds and observed containment failures up to N.
    Resurgence {
        #[command(flatten)]
        input: IdealArg,
        #[arg(short = 'N', long = "max-power")]
        max_power: u32,
    },
    /// Seeded search for k-packed versus equality disagreements.
    Hunt {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_generators: usize,
        #[arg(short)]
        k: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    EdgeIdeals,
    CubicIdeals,
    GeneralSquarefree,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::EdgeIdeals => Family::EdgeIdeals,
            FamilyArg::CubicIdeals => Family::CubicIdeals,
            FamilyArg::GeneralSquarefree => Family::GeneralSquarefree,
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_ideal(input: &IdealArg) -> Result<NamedIdeal, Error> {
    parse_ideal(&read(&input.ideal)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn dispatch(command: &Command, limits: &Limits) -> Result<Value, Error> {
    let symbolic_of = |named: &NamedIdeal| SymbolicIdeal::with_limits(&named.ideal, *limits);
    Ok(match command {
        Command::Power { input, n } => {
            let named = load_ideal(input)?;
            named.with_ideal(named.ideal.power(*n)?).to_json()
        }
        Command::Symbolic { input, n } => {
            let named = load_ideal(input)?;
            named.with_ideal(symbolic_of(&named)?.power(*n)?).to_json()
        }
        Command::Equal { input, n } => {
            let named = load_ideal(input)?;
            let check = symbolic_of(&named)?.equals_ordinary(*n)?;
            json!({ "equal": check.holds, "witness": check.witness })
        }
        Command::Contain { input, a, b } => {
            let named = load_ideal(input)?;
            let check = symbolic_of(&named)?.containment(*a, *b)?;
            json!({ "contained": check.holds, "witness": check.witness })
        }
        Command::Koenig { input, k } => {
            let named = load_ideal(input)?;
            let holds = match k {
                None => is_koenig(&named.ideal)?,
                Some(k) => is_k_koenig(&named.ideal, *k)?,
            };
            let (length, witness) = max_regular_sequence(&named.ideal)?;
            let proper = !named.ideal.is_zero() && !named.ideal.is_unit();
            let height = proper.then(|| height(&named.ideal)).transpose()?;
            json!({
                "koenig": holds,
                "k": k,
                "height": height,
                "max_regular_sequence": length,
                "witness": witness,
            })
        }
        Command::Packing { input } => {
            let named = load_ideal(input)?;
            let check = packing_scan(&named.ideal, None, limits)?;
            json!({ "packing": check.holds, "counterexample": check.counterexample })
        }
        Command::Kpacked { input, k } => {
            let named = load_ideal(input)?;
            if *k == 0 {
                return Err(Error::Invalid("k must be positive".into()));
            }
            let check = packing_scan(&named.ideal, Some(*k), limits)?;
            json!({ "k": k, "k_packed": check.holds, "counterexample": check.counterexample })
        }
        Command::Minor { input, zero, one } => {
            let named = load_ideal(input)?;
            let assignment = MinorAssignment::from_lists(named.ideal.num_vars(), zero, one)?;
            named.with_ideal(minor(&named.ideal, &assignment)?).to_json()
        }
        Command::EdgeAnalyze { graph, verify } => {
            let g = parse_graph(&read(graph)?)?;
            g.edge_ideal()?;
            let threshold = g.equality_threshold();
            let witness = threshold.map(|t| g.odd_cycle_witness(t)).transpose()?;
            let verification = verify.map(|up_to| verify_threshold(&g, up_to, limits)).transpose()?;
            json!({
                "graph": graph_json(&g),
                "bipartite": g.is_bipartite(),
                "odd_girth": g.odd_girth(),
                "threshold": threshold,
                "witness": witness,
                "verification": verification.map(|v| to_value(&v)),
            })
        }
        Command::SrIdeal { complex } => {
            let c = parse_complex(&read(complex)?)?;
            NamedIdeal::anonymous(stanley_reisner_ideal(&c)?).to_json()
        }
        Command::SrComplex { input } => {
            let named = load_ideal(input)?;
            complex_json(&stanley_reisner_complex(&named.ideal)?)
        }
        Command::Matroid { complex } => {
            let check = parse_complex(&read(complex)?)?.matroid_check();
            json!({ "matroid": check.holds, "counterexample": check.counterexample })
        }
        Command::Alpha { input, n } => {
            let named = load_ideal(input)?;
            let value = match n {
                None => alpha(&named.ideal)?,
                Some(n) => alpha(&symbolic_of(&named)?.power(*n)?)?,
            };
            json!({ "alpha": value, "n": n })
        }
        Command::Waldschmidt { input, sequence } => {
            let named = load_ideal(input)?;
            let solution = waldschmidt_with(&symbolic_of(&named)?)?;
            let seq = sequence.map(|m| waldschmidt_sequence(&named.ideal, m)).transpose()?;
            json!({ "waldschmidt": solution.value, "point": solution.point, "sequence": seq })
        }
        Command::Resurgence { input, max_power } => {
            let named = load_ideal(input)?;
            to_value(&resurgence_report(&named.ideal, *max_power, limits)?)
        }
        Command::Hunt { family, vars, max_generators, k, seed, count } => {
            let config = HuntConfig {
                num_vars: *vars,
                max_generators: *max_generators,
                k: *k,
                family: (*family).into(),
                seed: *seed,
                instance_count: *count,
            };
            to_value(&hunt(&config, limits)?)
        }
    })
}

fn main() -> ExitCode {
    let outcome = match Cli::try_parse() {
        Ok(cli) => dispatch(&cli.command, &cli.guards.limits()),
        Err(e) if !e.use_stderr() => e.exit(), // --help and --version
        Err(e) => {
            let rendered = e.render().to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            Err(Error::Invalid(message.join(" ").trim_start_matches("error: ").to_string()))
        }
    };
    let (code, doc) = match outcome {
        Ok(v) => (0, v),
        Err(e) => {
            let code = if e.is_guard() { 3 } else { 2 };
            (code, json!({ "error": e.to_string() }))
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    ExitCode::from(code)
}
