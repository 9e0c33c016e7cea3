use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;

use catabolism::catabolism::{catabolizable_set, ctype_sequence};
use catabolism::chains::{family_with_lengths, max_family, ChainFamily};
use catabolism::cocharge::labeling_cocharge;
use catabolism::frobenius::frobenius_table;
use catabolism::insertion::{run_algorithm3_traced, run_f_labeled, StepKind, Trace};
use catabolism::poset::{cocyclage_edges, export_dot, verify_graded, Overlay};
use catabolism::verify::run_suite;
use catabolism::{
    cocharge_label, ctype_greedy, is_catabolizable, row_insert, standard_word_from_labeling, superstandard, Error,
    LabeledWord, Mode, Partition, StandardWord,
};

#[derive(Parser)]
#[command(name = "catab", version, about = "Catabolism, cocharge and cyclage of standard words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct WordArg {
    /// Letters separated by spaces or commas, e.g. "1 6 8 4 2 9 5 7 3"
    word: String,
    /// The word is a cocharge labeling; unlabel it first
    #[arg(long)]
    labeled: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cocharge labeling of a standard word
    Label { word: String },
    /// Standard word of a cocharge labeling
    Unlabel { labels: String },
    /// Cocharge of a word
    Cocharge(WordArg),
    /// Insertion tableau P(w)
    Insert(WordArg),
    /// Catabolizability type of P(w)
    Ctype {
        #[command(flatten)]
        input: WordArg,
        #[arg(long, default_value = "row")]
        mode: Mode,
        /// Print the catabolism stages
        #[arg(long)]
        stages: bool,
    },
    /// Run the catabolism insertion algorithm
    #[command(name = "F")]
    F {
        #[command(flatten)]
        input: WordArg,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide λ-catabolizability with bounded insertion
    Cat3 {
        #[command(flatten)]
        input: WordArg,
        lambda: String,
        #[arg(long)]
        trace: bool,
    },
    /// Decide λ-catabolizability from the definition
    Catcheck {
        #[command(flatten)]
        input: WordArg,
        lambda: String,
        #[arg(long, default_value = "row")]
        mode: Mode,
    },
    /// All λ for which P(w) is λ-catabolizable
    Catset(WordArg),
    /// Maximal k-chain families of the periodic extension
    Greene {
        #[command(flatten)]
        input: WordArg,
        #[arg(long)]
        k: Option<usize>,
        /// Look for a chain family with these lengths instead
        #[arg(long)]
        lengths: Option<String>,
    },
    /// Cocyclage poset on standard tableaux of size n
    Poset {
        n: usize,
        /// Write a DOT digraph to this file
        #[arg(long)]
        dot: Option<String>,
        #[arg(long, default_value = "none")]
        overlay: Overlay,
        /// Print the edge list as JSON
        #[arg(long)]
        json: bool,
    },
    /// Graded Frobenius table restricted to ctype ⊵ λ
    Frobenius {
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive invariant suite
    Verify {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn parse_word(arg: &WordArg) -> Result<StandardWord, Error> {
    if arg.labeled {
        return standard_word_from_labeling(&parse_labels(&arg.word)?);
    }
    StandardWord::from_str(&arg.word).map_err(|e| match e {
        Error::NotStandard(letters) => offending_letter(&letters),
        e => e,
    })
}

fn parse_labels(s: &str) -> Result<LabeledWord, Error> {
    let z = LabeledWord::from_str(s)?;
    labeling_cocharge(&z)?;
    Ok(z)
}

fn offending_letter(letters: &[u32]) -> Error {
    let n = letters.len() as u32;
    let mut seen = vec![false; letters.len() + 1];
    for &a in letters {
        if a == 0 || a > n {
            return Error::Parse { token: a.to_string(), reason: format!("letters must lie in 1..={n}") };
        }
        if std::mem::replace(&mut seen[a as usize], true) {
            return Error::Parse { token: a.to_string(), reason: "repeated letter".into() };
        }
    }
    Error::NotStandard(letters.to_vec())
}

fn nu_cell(nu: &Partition) -> String {
    superstandard(nu).compact()
}

fn print_trace(trace: &Trace) {
    let pairs = trace.pairs();
    let width = pairs.iter().map(|p| p.word.to_string().chars().count()).max().unwrap_or(1);
    println!("{:>3}  {:<10}  {:<width$}  nu", "i", "step", "word");
    for (i, pair) in pairs.iter().enumerate() {
        let step = match i.checked_sub(1).map(|j| &trace.steps[j]) {
            None => String::new(),
            Some(s) => format!("{} {}", kind_name(s.kind), s.presented),
        };
        println!("{i:>3}  {step:<10}  {:<width$}  {}", pair.word.to_string(), nu_cell(&pair.nu));
    }
}

fn kind_name(kind: StepKind) -> &'static str {
    match kind {
        StepKind::Insertion => "insert",
        StepKind::Corotation => "corotate",
    }
}

fn print_family(family: &ChainFamily) {
    for chain in &family.chains {
        let idx: Vec<String> = chain.indices().iter().map(i64::to_string).collect();
        println!("  [{}]", idx.join(" "));
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Label { word } => {
            let arg = WordArg { word, labeled: false };
            println!("{}", cocharge_label(&parse_word(&arg)?));
        }
        Command::Unlabel { labels } => {
            println!("{}", standard_word_from_labeling(&parse_labels(&labels)?)?);
        }
        Command::Cocharge(arg) => println!("{}", catabolism::cocharge(&parse_word(&arg)?)),
        Command::Insert(arg) => print!("{}", row_insert(parse_word(&arg)?.letters())),
        Command::Ctype { input, mode, stages } => {
            let t = row_insert(parse_word(&input)?.letters());
            if stages {
                let (ct, stages) = ctype_sequence(&t, mode);
                for s in &stages {
                    println!("{}", s.compact());
                }
                println!("{ct}");
            } else {
                println!("{}", ctype_greedy(&t, mode));
            }
        }
        Command::F { input, trace, json } => {
            let z = if input.labeled { parse_labels(&input.word)? } else { cocharge_label(&parse_word(&input)?) };
            let result = run_f_labeled(&z)?;
            if json {
                let steps: Vec<_> = result
                    .steps
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        json!({
                            "step": i + 1,
                            "presented": s.presented,
                            "kind": s.kind,
                            "word": s.result.word.labels(),
                            "nu": s.result.nu.parts(),
                        })
                    })
                    .collect();
                let out = json!({ "input": z.labels(), "result": result.output.parts(), "trace": steps });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                if trace {
                    print_trace(&result);
                }
                println!("{}", result.output);
            }
        }
        Command::Cat3 { input, lambda, trace } => {
            let w = parse_word(&input)?;
            let run = run_algorithm3_traced(&w, &lambda.parse()?)?;
            if trace {
                for (i, s) in run.steps.iter().enumerate() {
                    println!(
                        "{:>3}  {} {}  {}  {}",
                        i + 1,
                        kind_name(s.kind),
                        s.presented,
                        s.result.word,
                        nu_cell(&s.result.nu)
                    );
                }
                if let Some(a) = run.rejected_label {
                    println!("{:>3}  reject {a}", run.steps.len() + 1);
                }
            }
            println!("{}", run.accepted);
        }
        Command::Catcheck { input, lambda, mode } => {
            let t = row_insert(parse_word(&input)?.letters());
            println!("{}", is_catabolizable(&t, &lambda.parse()?, mode)?);
        }
        Command::Catset(arg) => {
            for shape in catabolizable_set(&row_insert(parse_word(&arg)?.letters())) {
                println!("{shape}");
            }
        }
        Command::Greene { input, k, lengths } => {
            let z = cocharge_label(&parse_word(&input)?);
            if let Some(lengths) = lengths {
                match family_with_lengths(&z, &lengths.parse()?) {
                    Some(family) => print_family(&family),
                    None => println!("none"),
                }
                return Ok(());
            }
            match k {
                Some(k) => {
                    let (size, family) = max_family(&z, k);
                    println!("{size}");
                    print_family(&family);
                }
                None => {
                    for k in 1..=z.len() {
                        println!("I_{k} = {}", max_family(&z, k).0);
                    }
                }
            }
        }
        Command::Poset { n, dot, overlay, json } => {
            if let Some(path) = dot {
                fs::write(&path, export_dot(n, overlay))
                    .map_err(|e| Error::Parse { token: path.clone(), reason: e.to_string() })?;
            }
            if json {
                let edges: Vec<_> = cocyclage_edges(n)
                    .iter()
                    .map(|e| json!({ "source": e.source, "target": e.target, "zero": e.zero() }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&edges).expect("serializable"));
            } else {
                let r = verify_graded(n);
                println!(
                    "nodes {} edges {} ranks {}..{} graded {}",
                    r.nodes,
                    r.edges,
                    r.min_rank,
                    r.max_rank,
                    r.graded()
                );
                for c in &r.counterexamples {
                    println!("  {c}");
                }
            }
        }
        Command::Frobenius { lambda, json } => {
            let table = frobenius_table(&lambda.parse()?);
            if json {
                let entries: Vec<_> = table
                    .entries
                    .iter()
                    .rev()
                    .map(|(shape, coeffs)| json!({ "shape": shape, "coefficients": coeffs }))
                    .collect();
                let out = json!({ "input": table.lambda, "result": entries });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                print!("{table}");
            }
        }
        Command::Verify { n, json } => {
            let start = std::time::Instant::now();
            let report = run_suite(n);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                for c in &report.checks {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    println!("{status}  {:<62} {:>9} cases", c.name, c.cases);
                    if let Some(ce) = &c.counterexample {
                        println!("      counterexample: {ce}");
                    }
                }
                println!("{} checks, {} cases, n <= {n}", report.checks.len(), report.cases());
            }
            eprintln!("elapsed {:.2?}", start.elapsed());
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
