mod error;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use owjfa::analysis::{
    classify_growth, sweep_complexity, GrowthConfig, ProfileConfig, DEFAULT_SEED,
};
use owjfa::engines::{accepts, render_sweeps, run_classical, run_owj};
use owjfa::langtools::{
    enumerate, equivalent_up_to, gen_family, minimize, residual_probe, subset_construction,
    Equivalence, Family, DEFAULT_ENUMERATION_CAP, DEFAULT_SUBSET_CAP,
};
use owjfa::{parse_automaton, serialize, Automaton, Engine, EngineError, Machine, Word};

use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "owj",
    version,
    about = "Workbench for one-way jumping finite automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write the artifact to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one word and print the verdict with its counters.
    Run {
        #[arg(long)]
        engine: Engine,
        file: PathBuf,
        #[arg(default_value = "")]
        word: String,
        /// Append the event log (owj only).
        #[arg(long)]
        trace: bool,
    },
    /// Show a one-way jumping run sweep by sweep, read letters in brackets.
    Trace {
        #[arg(long)]
        engine: Engine,
        file: PathBuf,
        #[arg(default_value = "")]
        word: String,
    },
    /// Worst-case sweeps and jump statistics per input length.
    Profile {
        #[arg(long)]
        engine: Engine,
        file: PathBuf,
        /// Largest length profiled.
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Largest k^n enumerated exhaustively; longer lengths are sampled.
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Membership of every word up to a length, in shortlex order.
    Enumerate {
        #[arg(long)]
        engine: Engine,
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Compare two engines, or two machines, on all words up to a length.
    Compare {
        /// One engine, or two separated by a comma.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        engine: Vec<Engine>,
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Subset construction (reachable part, complete).
    Determinize { file: PathBuf },
    /// Minimal complete DFA for the classical language.
    Minimize {
        file: PathBuf,
        /// Refuse partial machines instead of adding a sink.
        #[arg(long)]
        require_complete: bool,
    },
    /// Generate a fixture machine: lab, kth_last K, complete_random N,
    /// partial_random N DENSITY.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Bounded Myhill-Nerode table over the language sample.
    Probe {
        file: PathBuf,
        #[arg(long, default_value = "owj")]
        engine: Engine,
        /// Prefix length bound.
        #[arg(long)]
        p: usize,
        /// Suffix length bound.
        #[arg(long)]
        s: usize,
    },
}

fn load(path: &Path) -> Result<Machine, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_automaton(&text)?)
}

fn load_dfa(path: &Path, engine: Engine) -> Result<Automaton, CliError> {
    match load(path)? {
        Machine::Dfa(a) => Ok(a),
        Machine::Nfa(_) => Err(EngineError::Unsupported {
            engine,
            what: "nondeterministic machines",
        }
        .into()),
    }
}

fn only_owj(engine: Engine, what: &'static str) -> Result<(), CliError> {
    if engine == Engine::Owj {
        Ok(())
    } else {
        Err(EngineError::Unsupported { engine, what }.into())
    }
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!(
            "--format {} is not available for this command",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )))
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn machine_text(m: &Machine, format: Format) -> String {
    match format {
        Format::Json => json_text(&serde_json::to_value(m.to_raw()).expect("raw serializes")),
        _ => serialize(m),
    }
}

/// Artifact text plus an optional side note for the user.
struct Output {
    body: String,
    note: Option<String>,
}

impl From<String> for Output {
    fn from(body: String) -> Self {
        Output { body, note: None }
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Probe { file, engine, p, s } => probe(cli.format, file, *engine, *p, *s),
        _ => artifact(cli).map(Output::from),
    }
}

fn artifact(cli: &Cli) -> Result<String, CliError> {
    use Format::{Csv, Json, Text};
    match &cli.command {
        Command::Run {
            engine,
            file,
            word,
            trace,
        } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            let m = load(file)?;
            let w = Word::parse(m.alphabet(), word)?;
            let mut v =
                json!({ "engine": engine.name(), "word": w.display(m.alphabet()).to_string() });
            let mut text;
            match (engine, &m) {
                (Engine::Owj, Machine::Dfa(a)) => {
                    let (out, tr) = run_owj(a, &w, *trace)?;
                    text = format!("{}\n", out.summary());
                    merge(&mut v, out.to_json(a));
                    if let Some(tr) = tr {
                        text.push_str(&tr.events_text(a));
                        v["events"] = tr.events_json(a);
                    }
                }
                (Engine::Classical, Machine::Dfa(a)) => {
                    if *trace {
                        only_owj(*engine, "event traces")?;
                    }
                    let out = run_classical(a, &w)?;
                    text = format!("{}\n", out.summary());
                    merge(&mut v, out.to_json(a));
                }
                _ => {
                    if *trace {
                        only_owj(*engine, "event traces")?;
                    }
                    let ok = accepts(&m, *engine, &w)?;
                    let verdict = if ok { "ACCEPT" } else { "REJECT" };
                    text = format!("{verdict}\n");
                    v["verdict"] = json!(verdict);
                    v["accepted"] = json!(ok);
                }
            }
            Ok(if format == Json { json_text(&v) } else { text })
        }
        Command::Trace { engine, file, word } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            only_owj(*engine, "sweep traces")?;
            let a = load_dfa(file, *engine)?;
            let w = Word::parse(a.alphabet(), word)?;
            let (out, tr) = run_owj(&a, &w, true)?;
            let tr = tr.expect("trace requested");
            Ok(match format {
                Json => {
                    let sweeps: Vec<Value> = tr
                        .sweep_rows()
                        .into_iter()
                        .map(|r| json!({ "sweep": r.sweep, "reads": r.reads, "skips": r.skips }))
                        .collect();
                    json_text(&json!({
                        "word": w.display(a.alphabet()).to_string(),
                        "outcome": out.to_json(&a),
                        "sweeps": sweeps,
                        "events": tr.events_json(&a),
                    }))
                }
                _ => render_sweeps(&a, &w, &tr),
            })
        }
        Command::Profile {
            engine,
            file,
            n,
            budget,
            samples,
            seed,
        } => {
            let format = pick(cli.format, Csv, &[Text, Json, Csv])?;
            only_owj(*engine, "sweep profiles")?;
            let a = load_dfa(file, *engine)?;
            let cfg = ProfileConfig {
                budget: *budget,
                samples: *samples,
                seed: *seed,
            };
            let p = sweep_complexity(&a, *n, &cfg);
            Ok(match format {
                Csv => p.to_csv_string(),
                Json => json_text(&p.to_json()),
                Text => {
                    let mut s = String::new();
                    for r in &p.records {
                        let witness = r
                            .witness
                            .as_ref()
                            .map(|w| w.display(a.alphabet()).to_string())
                            .unwrap_or_default();
                        s.push_str(&format!(
                            "n={} max_sweeps={} witness={} max_jumps={} mean_jumps={:.3} {}\n",
                            r.n,
                            r.max_sweeps,
                            witness,
                            r.max_jumps,
                            r.mean_jumps,
                            r.mode.name()
                        ));
                    }
                    match classify_growth(&p, &GrowthConfig::default()) {
                        Ok(g) => s.push_str(&format!(
                            "growth: {} (slope {:.3}, heuristic)\n",
                            g.class.name(),
                            g.slope
                        )),
                        Err(e) => s.push_str(&format!("growth: not classified ({e})\n")),
                    }
                    s
                }
            })
        }
        Command::Enumerate {
            engine,
            file,
            max_len,
        } => {
            let format = pick(cli.format, Text, &[Text, Json, Csv])?;
            let m = load(file)?;
            let sample = enumerate(&m, *engine, *max_len, DEFAULT_ENUMERATION_CAP)?;
            let alphabet = &sample.alphabet;
            Ok(match format {
                Text => {
                    let mut buf = Vec::new();
                    sample.write_lines(&mut buf)?;
                    String::from_utf8(buf).expect("utf-8 names")
                }
                Csv => {
                    let mut s = String::from("word,member\n");
                    for (w, member) in sample.words() {
                        s.push_str(&format!("{},{}\n", w.display(alphabet), u8::from(member)));
                    }
                    s
                }
                Json => json_text(&json!({
                    "engine": engine.name(),
                    "max_len": max_len,
                    "words": sample.words().count(),
                    "accepted": sample.accepted().map(|w| w.display(alphabet).to_string()).collect::<Vec<_>>(),
                })),
            })
        }
        Command::Compare {
            engine,
            files,
            max_len,
        } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            let (e1, e2) = match engine.as_slice() {
                [e] => (*e, *e),
                [e1, e2] => (*e1, *e2),
                _ => return Err(CliError::Usage("--engine takes one or two engines".into())),
            };
            if files.len() == 1 && e1 == e2 {
                return Err(CliError::Usage(
                    "comparing a machine with itself needs two different engines".into(),
                ));
            }
            let m1 = load(&files[0])?;
            let m2 = match files.get(1) {
                Some(f) => load(f)?,
                None => m1.clone(),
            };
            let result = equivalent_up_to(&m1, e1, &m2, e2, *max_len, DEFAULT_ENUMERATION_CAP)?;
            let rendered = result.render(m1.alphabet());
            Ok(match format {
                Json => {
                    let counterexample = match &result {
                        Equivalence::Equal => Value::Null,
                        Equivalence::Counterexample(w) => {
                            json!(w.display(m1.alphabet()).to_string())
                        }
                    };
                    json_text(&json!({
                        "engines": [e1.name(), e2.name()],
                        "max_len": max_len,
                        "equal": result == Equivalence::Equal,
                        "counterexample": counterexample,
                    }))
                }
                _ => format!("{rendered}\n"),
            })
        }
        Command::Determinize { file } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            let nfa = match load(file)? {
                Machine::Dfa(a) => a.to_nfa(),
                Machine::Nfa(n) => n,
            };
            let d = subset_construction(&nfa, DEFAULT_SUBSET_CAP)?;
            Ok(machine_text(&Machine::Dfa(d), format))
        }
        Command::Minimize {
            file,
            require_complete,
        } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            let a = match load(file)? {
                Machine::Dfa(a) => a,
                Machine::Nfa(n) => subset_construction(&n, DEFAULT_SUBSET_CAP)?,
            };
            let m = minimize(&a, *require_complete)?;
            Ok(machine_text(&Machine::Dfa(m), format))
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let format = pick(cli.format, Text, &[Text, Json])?;
            let m = gen_family(&Family::parse(family, params, *seed)?)?;
            Ok(machine_text(&m, format))
        }
        Command::Probe { .. } => unreachable!("handled by execute"),
    }
}

fn probe(
    format: Option<Format>,
    file: &Path,
    engine: Engine,
    p: usize,
    s: usize,
) -> Result<Output, CliError> {
    use Format::{Csv, Json, Text};
    let format = pick(format, Csv, &[Text, Json, Csv])?;
    let m = load(file)?;
    let sample = enumerate(&m, engine, p + s, DEFAULT_ENUMERATION_CAP)?;
    let t = residual_probe(&sample, p, s)?;
    Ok(match format {
        Csv => Output {
            body: t.to_csv_string(),
            note: Some(t.verdict()),
        },
        Text => format!("{}\n", t.verdict()).into(),
        Json => json_text(&json!({
            "engine": engine.name(),
            "p": p,
            "s": s,
            "prefixes": t.prefixes.len(),
            "distinct_rows": t.distinct_rows,
            "verdict": t.verdict(),
        }))
        .into(),
    })
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => {
                fs::write(path, &out.body)?;
                if let Some(note) = out.note {
                    println!("{note}");
                }
            }
            None => {
                io::stdout().write_all(out.body.as_bytes())?;
                // keep stdout a clean artifact
                if let Some(note) = out.note {
                    eprintln!("{note}");
                }
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error ({}): {e}", e.module());
            ExitCode::from(if matches!(e, CliError::Usage(_)) {
                2
            } else {
                1
            })
        }
    }
}
