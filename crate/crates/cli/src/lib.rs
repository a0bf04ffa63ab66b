//! Command-line front end. Every invocation prints one JSON document:
//!
//! ```text
//! {"verb": ..., "inputs": {...}, "result": ..., "provenance": "..."}
//! ```
//!
//! or, on failure, `{"verb": ..., "inputs": {...}, "error": "..."}`.
//! Exit status is 0 on success, 1 on a domain error (or a failed `verify`),
//! 2 on a usage or parse error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use freeqg::exact::{format_rational, parse_rational};
use freeqg::fixed_vectors::{w_span_dim, FixedSpace};
use freeqg::fock::fock_moment;
use freeqg::fusion::{
    catalan_closed, dim_o, dim_u, fuse, generalized_catalan, j_expand, star_moment, FusionElement,
    OWeight,
};
use freeqg::matrix_file::read_matrix;
use freeqg::pairings::{enumerate_colored, enumerate_plain, Pairing};
use freeqg::powers::{check_lemma12, check_lemma13, lemma10_trial};
use freeqg::{verify, Error, ExactMatrix, GaussianRational, Word};

/// Environment variable that lifts the tensor-size guardrail, like `--force`.
pub const FORCE_ENV: &str = "FREEQG_FORCE";

#[derive(Parser, Debug)]
#[command(name = "freeqg", version, about = "Fusion rules, moments and fixed vectors of free quantum groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Group {
    U,
    O,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose r_X ⊗ r_Y into irreducibles
    Fuse { x: String, y: String },
    /// Multiplicities of irreducibles in the tensor word u^W
    Decompose { w: String },
    /// dim Mor(1, u^W)
    Moment { w: String },
    /// Generalized Catalan number C_W, or the Catalan number C_K for an integer
    Catalan { arg: String },
    /// Dimension of r_W (group u) or r_K (group o)
    Dims {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        arg: String,
    },
    /// Count (and optionally list) non-crossing pairings of a word or of 2K points
    Pairings {
        arg: String,
        #[arg(long)]
        list: bool,
    },
    /// ∗-moment of the circular Fock model patterned by W
    Fock { w: String },
    /// Exact rank of the fixed-vector family of u^W
    FixedDim {
        #[arg(long)]
        matrix: PathBuf,
        w: String,
        #[arg(long)]
        force: bool,
    },
    /// Haar projector (Id ⊗ h)(u^W), or one entry of it (0-based flat indices)
    Haar {
        #[arg(long)]
        matrix: PathBuf,
        w: String,
        #[arg(long, value_name = "I,J")]
        entry: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Rank of the orthogonal pairing family on 2K points
    OSpan {
        #[arg(long)]
        matrix: PathBuf,
        k: usize,
    },
    /// Bounded-length set-fusion checks
    Powers {
        #[command(subcommand)]
        check: PowersCheck,
    },
    /// Run every cross-oracle suite
    Verify {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum PowersCheck {
    /// F∘D ∩ D = ∅ and r_s∘E ∩ r_k∘E = ∅ up to length L
    Lemma12 {
        #[arg(long, default_value_t = 8)]
        len: usize,
    },
    /// Least N with (βα)^N ∘ SET ∘ (βα)^N ⊂ {β...α} ∪ {e}
    Lemma13 {
        /// Comma-separated words, e.g. "ab,ba"; empty for the empty set
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Randomized check of |⟨xξ,ξ⟩| ≤ 2√(δ−δ²)‖x‖
    Lemma10 {
        #[arg(long)]
        dim: usize,
        /// Rational such as 1/3, or a decimal
        #[arg(long)]
        delta: String,
        #[arg(long, default_value_t = 10000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Outcome of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub document: Value,
}

enum Failure {
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Word(_) | Error::MatrixFile(_) => Failure::Parse(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

struct Success {
    inputs: Value,
    result: Value,
    provenance: &'static str,
    code: i32,
}

fn ok(inputs: Value, result: Value, provenance: &'static str) -> Result<Success, Failure> {
    Ok(Success {
        inputs,
        result,
        provenance,
        code: 0,
    })
}

pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn element(f: &FusionElement) -> Value {
    let mut m = Map::new();
    for (w, c) in f.terms() {
        m.insert(w.to_string(), int(c));
    }
    Value::Object(m)
}

fn scalar(z: &GaussianRational) -> Value {
    json!([format_rational(&z.re), format_rational(&z.im)])
}

fn matrix(m: &ExactMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar).collect()))
            .collect(),
    )
}

fn pairing(p: &Pairing) -> Value {
    json!(p.one_based())
}

fn word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>().map_err(Error::from)?)
}

fn force_requested(flag: bool) -> bool {
    flag || std::env::var(FORCE_ENV).is_ok_and(|v| v == "1" || v.eq_ignore_ascii_case("true"))
}

fn load(path: &PathBuf) -> Result<ExactMatrix, Failure> {
    Ok(read_matrix(path)?)
}

fn parse_delta(s: &str) -> Result<f64, Failure> {
    if let Ok(r) = parse_rational(s) {
        return r
            .to_f64()
            .ok_or_else(|| Failure::Parse(format!("delta {s:?} out of range")));
    }
    s.trim()
        .parse::<f64>()
        .map_err(|_| Failure::Parse(format!("invalid delta {s:?}")))
}

fn verb(cmd: &Command) -> &'static str {
    match cmd {
        Command::Fuse { .. } => "fuse",
        Command::Decompose { .. } => "decompose",
        Command::Moment { .. } => "moment",
        Command::Catalan { .. } => "catalan",
        Command::Dims { .. } => "dims",
        Command::Pairings { .. } => "pairings",
        Command::Fock { .. } => "fock",
        Command::FixedDim { .. } => "fixed-dim",
        Command::Haar { .. } => "haar",
        Command::OSpan { .. } => "o-span",
        Command::Powers { .. } => "powers",
        Command::Verify { .. } => "verify",
    }
}

fn execute(cmd: &Command) -> Result<Success, Failure> {
    match cmd {
        Command::Fuse { x, y } => {
            let (a, b) = (word(x)?, word(y)?);
            ok(
                json!({"x": a.to_string(), "y": b.to_string()}),
                element(&fuse(&a, &b)),
                "free-monoid fusion rule",
            )
        }
        Command::Decompose { w } => {
            let w = word(w)?;
            ok(
                json!({"w": w.to_string()}),
                element(&j_expand(&w)),
                "J: iterated left fusion by letters",
            )
        }
        Command::Moment { w } => {
            let w = word(w)?;
            ok(
                json!({"w": w.to_string()}),
                int(&star_moment(&w)),
                "tau(J(w))",
            )
        }
        Command::Catalan { arg } => match arg.trim().parse::<u32>() {
            Ok(k) => ok(json!({"k": k}), int(&catalan_closed(k)), "closed form (2k)!/(k!(k+1)!)"),
            Err(_) => {
                let w = word(arg)?;
                ok(
                    json!({"w": w.to_string()}),
                    int(&generalized_catalan(&w)),
                    "generalized Catalan recursion",
                )
            }
        },
        Command::Dims { group, n, arg } => match group {
            Group::U => {
                let w = word(arg)?;
                ok(
                    json!({"group": "u", "n": n, "w": w.to_string()}),
                    int(&dim_u(&w, *n)?),
                    "dimension recursion from the fusion rule",
                )
            }
            Group::O => {
                let k: u32 = arg
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Parse(format!("expected a non-negative integer, got {arg:?}")))?;
                ok(
                    json!({"group": "o", "n": n, "k": k}),
                    int(&dim_o(OWeight(k), *n)?),
                    "Chebyshev recursion",
                )
            }
        },
        Command::Pairings { arg, list } => {
            if let Ok(k) = arg.trim().parse::<usize>() {
                let all = enumerate_plain(k);
                let mut result = json!({"count": all.len()});
                if *list {
                    result["pairings"] = all.iter().map(pairing).collect();
                }
                ok(json!({"k": k}), result, "non-crossing pairing enumeration")
            } else {
                let w = word(arg)?;
                let all = enumerate_colored(&w);
                let mut result = json!({"count": all.len()});
                if *list {
                    result["pairings"] = all.iter().map(|c| pairing(&c.base)).collect();
                }
                ok(
                    json!({"w": w.to_string()}),
                    result,
                    "colored non-crossing pairing enumeration",
                )
            }
        }
        Command::Fock { w } => {
            let w = word(w)?;
            ok(
                json!({"w": w.to_string()}),
                int(&fock_moment(&w)),
                "truncated Fock space, S+T* and S*+T",
            )
        }
        Command::FixedDim { matrix: path, w, force } => {
            let w = word(w)?;
            let space = FixedSpace::new(load(path)?)?.force(force_requested(*force));
            ok(
                json!({"matrix": path.display().to_string(), "w": w.to_string()}),
                json!(space.fixed_dim(&w)?),
                "Bareiss rank of the Gram matrix of the Z family",
            )
        }
        Command::Haar {
            matrix: path,
            w,
            entry,
            force,
        } => {
            let w = word(w)?;
            let space = FixedSpace::new(load(path)?)?.force(force_requested(*force));
            let mut inputs = json!({"matrix": path.display().to_string(), "w": w.to_string()});
            match entry {
                Some(spec) => {
                    let (i, j) = spec
                        .split_once(',')
                        .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                        .ok_or_else(|| Failure::Parse(format!("expected --entry I,J, got {spec:?}")))?;
                    inputs["entry"] = json!([i, j]);
                    ok(
                        inputs,
                        scalar(&space.haar_entry(&w, i, j)?),
                        "V (V*V)^-1 V* over a greedy independent Z subfamily",
                    )
                }
                None => ok(
                    inputs,
                    matrix(&space.haar_projector(&w)?),
                    "V (V*V)^-1 V* over a greedy independent Z subfamily",
                ),
            }
        }
        Command::OSpan { matrix: path, k } => ok(
            json!({"matrix": path.display().to_string(), "k": k}),
            json!(w_span_dim(&load(path)?, *k)?),
            "Bareiss rank of the Gram matrix of the pairing vectors v(P)",
        ),
        Command::Powers { check } => powers(check),
        Command::Verify { max_len } => {
            let report = verify::run_all(*max_len);
            let code = if report.pass { 0 } else { 1 };
            Ok(Success {
                inputs: json!({"max_len": max_len}),
                result: serde_json::to_value(&report).expect("serializable report"),
                provenance: "cross-oracle suites",
                code,
            })
        }
    }
}

fn powers(check: &PowersCheck) -> Result<Success, Failure> {
    match check {
        PowersCheck::Lemma12 { len } => {
            let report = check_lemma12(*len)?;
            let code = if report.pass { 0 } else { 1 };
            Ok(Success {
                inputs: json!({"check": "lemma12", "len": len}),
                result: serde_json::to_value(&report).expect("serializable report"),
                provenance: "bounded-length set fusion",
                code,
            })
        }
        PowersCheck::Lemma13 { set, max_n } => {
            let words = set
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(word)
                .collect::<Result<std::collections::BTreeSet<Word>, _>>()?;
            let n = check_lemma13(&words, *max_n);
            let names: Vec<String> = words.iter().map(ToString::to_string).collect();
            ok(
                json!({"check": "lemma13", "set": names, "max_n": max_n}),
                json!({"n": n}),
                "exact sandwich fusion by (ba)^N",
            )
        }
        PowersCheck::Lemma10 {
            dim,
            delta,
            trials,
            seed,
        } => {
            let d = parse_delta(delta)?;
            let report = lemma10_trial(*dim, d, *trials, *seed)?;
            let code = if report.pass { 0 } else { 1 };
            Ok(Success {
                inputs: json!({"check": "lemma10", "dim": dim, "delta": delta, "trials": trials, "seed": seed}),
                result: serde_json::to_value(&report).expect("serializable report"),
                provenance: "seeded Monte Carlo, f64",
                code,
            })
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                document: json!({"verb": null, "inputs": null, "error": e.to_string()}),
            };
        }
    };
    let name = verb(&cli.command);
    match execute(&cli.command) {
        Ok(s) => Outcome {
            code: s.code,
            document: json!({
                "verb": name,
                "inputs": s.inputs,
                "result": s.result,
                "provenance": s.provenance,
            }),
        },
        Err(Failure::Parse(msg)) => Outcome {
            code: 2,
            document: json!({"verb": name, "inputs": null, "error": msg}),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            document: json!({"verb": name, "inputs": null, "error": msg}),
        },
    }
}
