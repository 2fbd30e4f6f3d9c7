use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qcpc::galois::{extension_for, gcd, Field};
use qcpc::json as js;
use qcpc::oracle::{self, OracleBudget};
use qcpc::product::{self, Method, ProductSpec};
use qcpc::spectral;
use qcpc::{DecoderSetup, Outcome, Poly, QuasiCyclicCode};

#[derive(Parser)]
#[command(name = "qcpc", version, about = "Quasi-cyclic product codes")]
struct Cli {
    /// Largest brute-force enumeration, as log2 of the number of codewords.
    #[arg(long, global = true, default_value_t = 20)]
    budget_dim: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters and, with --n, the splitting field of X^n - 1.
    Field {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Quasi-cyclic code utilities.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Product of a row code and a column code.
    #[command(subcommand)]
    Product(ProductCommand),
    /// Spectral minimum-distance bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Decodes one received word.
    Decode {
        #[arg(long)]
        setup: PathBuf,
        #[arg(long)]
        received: PathBuf,
    },
    /// Decodes random phased bursts.
    Simulate {
        #[arg(long)]
        setup: PathBuf,
        /// Number of burst positions per trial.
        #[arg(long)]
        bursts: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Sweep every pattern with at most --bursts positions instead.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Exact minimum distance by enumeration.
    Mindist {
        #[arg(long)]
        code: PathBuf,
    },
    /// Checks the product constructions on random instances.
    VerifyConjecture(VerifyArgs),
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Prints the reduced generator.
    Reduce {
        #[arg(long)]
        code: PathBuf,
    },
    /// Prints the code parameters.
    Info {
        #[arg(long)]
        code: PathBuf,
        /// Include eigenvalue data.
        #[arg(long)]
        analyze: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    row: PathBuf,
    #[arg(long)]
    col: PathBuf,
    /// Bezout coefficient of the row length; needs --b.
    #[arg(long, requires = "b", allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long, requires = "a", allow_negative_numbers = true)]
    b: Option<i64>,
}

#[derive(Subcommand)]
enum ProductCommand {
    /// Builds the product generator with one construction.
    Build {
        #[command(flatten)]
        pair: PairArgs,
        /// unreduced, two-qc, one-level or conjecture.
        #[arg(long, default_value = "unreduced")]
        method: String,
    },
    /// Compares every applicable construction against the unreduced basis.
    Check {
        #[command(flatten)]
        pair: PairArgs,
    },
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Bound from consecutive eigenvalues of one code.
    St {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, requires_all = ["z", "delta"])]
        f: Option<usize>,
        #[arg(long)]
        z: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        delta_max: Option<usize>,
    },
    /// Bound from embedding the row code into a product with a cyclic column code.
    Embed {
        #[arg(long)]
        row: PathBuf,
        #[arg(long)]
        col: PathBuf,
        #[arg(long)]
        delta_max: Option<usize>,
        /// Also write a decoder setup file.
        #[arg(long)]
        setup_out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "lA")]
    l_a: usize,
    #[arg(long = "lB")]
    l_b: usize,
    #[arg(long = "mA-max")]
    m_a_max: usize,
    #[arg(long = "mB-max")]
    m_b_max: usize,
    #[arg(long)]
    q: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

enum Failure {
    Usage(String),
    Library(qcpc::Error),
    Verification(Value),
    Decode(Value),
}

impl From<qcpc::Error> for Failure {
    fn from(e: qcpc::Error) -> Self {
        match e {
            qcpc::Error::Malformed(_) => Failure::Usage(e.to_string()),
            e => Failure::Library(e),
        }
    }
}

type CmdResult = Result<Value, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<QuasiCyclicCode, Failure> {
    Ok(js::code_from_json(&read_json(path)?)?)
}

fn read_pair(pair: &PairArgs) -> Result<(ProductSpec, QuasiCyclicCode, QuasiCyclicCode), Failure> {
    let (a, b) = (read_code(&pair.row)?, read_code(&pair.col)?);
    if a.field() != b.field() {
        return Err(Failure::Usage("row and column codes are over different fields".into()));
    }
    let spec = match (pair.a, pair.b) {
        (Some(x), Some(y)) => ProductSpec::with_bezout(a.ell(), a.m(), b.ell(), b.m(), x, y)?,
        _ => ProductSpec::for_codes(&a, &b)?,
    };
    Ok((spec, a, b))
}

fn verdicts_json(verdicts: &[(&str, bool)]) -> Value {
    Value::Object(verdicts.iter().map(|(n, ok)| ((*n).to_string(), json!(ok))).collect())
}

fn error_kind(e: &qcpc::Error) -> &'static str {
    use qcpc::Error::*;
    match e {
        BudgetExceeded { .. } => "budget_exceeded",
        NoCertificate(_) => "no_certificate",
        Malformed(_) => "malformed_input",
        InvalidSetup(_) => "invalid_setup",
        ZeroCode => "zero_code",
        _ => "invalid_argument",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("{}", json!({ "error": { "kind": "usage", "message": e.to_string() } }));
            return ExitCode::from(1);
        }
    }
    let budget = OracleBudget::with_dimension(cli.budget_dim);
    let result = run(cli.command, &budget, cli.seed);
    let (value, code, to_stdout) = match result {
        Ok(v) => (v, 0, true),
        Err(Failure::Usage(msg)) => (json!({ "error": { "kind": "usage", "message": msg } }), 1, false),
        Err(Failure::Library(e)) => {
            (json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } }), 2, false)
        }
        Err(Failure::Verification(v)) => (v, 2, true),
        Err(Failure::Decode(v)) => (v, 3, true),
    };
    let text = serde_json::to_string_pretty(&value).expect("values serialize");
    // a closed pipe is not worth a panic
    let _ = if to_stdout { writeln!(std::io::stdout(), "{text}") } else { writeln!(std::io::stderr(), "{text}") };
    ExitCode::from(code)
}

fn run(command: Command, budget: &OracleBudget, seed: u64) -> CmdResult {
    match command {
        Command::Field { q, n } => field(q, n),
        Command::Code(CodeCommand::Reduce { code }) => Ok(js::code_to_json(&read_code(&code)?)),
        Command::Code(CodeCommand::Info { code, analyze }) => {
            let c = read_code(&code)?;
            let mut v = json!({
                "field": js::field_descriptor(c.field()),
                "q": c.q(),
                "ell": c.ell(),
                "m": c.m(),
                "length": c.length(),
                "dimension": c.dimension(),
                "level": c.level(),
                "row_dims": c.row_dims(),
                "diagonal_degrees": (0..c.ell()).map(|i| c.rgb().get(i, i).degree()).collect::<Vec<_>>(),
            });
            if analyze {
                let ext = extension_for(c.field(), c.m() as u64)?;
                let alpha = ext.root_of_unity(c.m() as u64)?;
                let report = spectral::analyze(&ext, c.rgb(), alpha, c.m())?;
                v["spectral"] = js::report_to_json(&report);
            }
            Ok(v)
        }
        Command::Product(ProductCommand::Build { pair, method }) => {
            let method: Method = method.parse().map_err(|e: qcpc::Error| Failure::Usage(e.to_string()))?;
            let (spec, a, b) = read_pair(&pair)?;
            let built = product::construct(method, &spec, &a, &b)?;
            let f = a.field();
            let mut v = js::code_to_json(&built.code);
            v["construction"] = json!({
                "method": method.name(),
                "spec": spec_json(&spec),
                "row_dimension": a.dimension(),
                "col_dimension": b.dimension(),
                "generator": built.generator.rows().iter().map(|r| js::word_to_json(f, r)).collect::<Vec<_>>(),
                "verified": built.verified,
            });
            if built.verified {
                Ok(v)
            } else {
                Err(Failure::Verification(v))
            }
        }
        Command::Product(ProductCommand::Check { pair }) => {
            let (spec, a, b) = read_pair(&pair)?;
            let check = product::check_constructions_with(spec, &a, &b)?;
            let v = json!({
                "spec": spec_json(&spec),
                "row_dimension": check.row_dimension,
                "col_dimension": check.col_dimension,
                "dimension": check.dimension,
                "constructions": verdicts_json(&check.verdicts),
                "verified": check.verified(),
            });
            if check.verified() {
                Ok(v)
            } else {
                Err(Failure::Verification(v))
            }
        }
        Command::Bound(BoundCommand::St { code, f, z, delta, delta_max }) => {
            let c = read_code(&code)?;
            let ext = extension_for(c.field(), c.m() as u64)?;
            let alpha = ext.root_of_unity(c.m() as u64)?;
            let report = spectral::analyze(&ext, c.rgb(), alpha, c.m())?;
            let cert = match (f, z, delta) {
                (Some(f), Some(z), Some(d)) => spectral::st_bound(&report, f, z, d)?,
                _ => spectral::search_st_params(&report, delta_max.unwrap_or(c.m() + 1))
                    .ok_or_else(|| qcpc::Error::NoCertificate("no run of eigenvalues of length 2 or more".into()))?,
            };
            Ok(js::certificate_to_json(&ext, &cert))
        }
        Command::Bound(BoundCommand::Embed { row, col, delta_max, setup_out }) => {
            let (a, b) = (read_code(&row)?, read_code(&col)?);
            let delta_max = delta_max.unwrap_or(a.m() * b.m() + 1);
            let setup = DecoderSetup::from_codes(a, b, budget, delta_max)?;
            if let Some(path) = setup_out {
                let text = serde_json::to_string_pretty(&js::setup_to_json(&setup)).expect("values serialize");
                fs::write(&path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let mut v = js::certificate_to_json(setup.extension(), setup.certificate());
            v["radius"] = json!(setup.radius());
            Ok(v)
        }
        Command::Decode { setup, received } => {
            let s = js::setup_from_json(&read_json(&setup)?, budget, usize::MAX)?;
            let r = js::received_from_json(s.code().field(), &read_json(&received)?)?;
            let res = s.decode(&r);
            let v = js::decode_result_to_json(s.code().field(), &res);
            match res.outcome {
                Outcome::Corrected => Ok(v),
                Outcome::Failure(_) => Err(Failure::Decode(v)),
            }
        }
        Command::Simulate { setup, bursts, trials, exhaustive } => {
            let s = js::setup_from_json(&read_json(&setup)?, budget, usize::MAX)?;
            if exhaustive {
                let rep = oracle::exhaustive_burst_sweep(&s, bursts, budget, seed)?;
                return Ok(js::sweep_to_json(s.code().field(), &rep));
            }
            simulate(&s, bursts, trials, seed)
        }
        Command::Mindist { code } => {
            let c = read_code(&code)?;
            let w = oracle::min_weight_word(&c, budget)?;
            let word = qcpc::qcc::deserialize(&w.word, c.ell());
            Ok(json!({
                "d": w.weight,
                "length": c.length(),
                "dimension": c.dimension(),
                "word": js::word_to_json(c.field(), &word),
            }))
        }
        Command::VerifyConjecture(args) => verify(&args, seed),
    }
}

fn field(q: u64, n: Option<u64>) -> CmdResult {
    let f = Field::of_order(q)?;
    let mut v = js::field_descriptor(&f);
    v["q"] = json!(q);
    v["primitive"] = json!(f.digits(f.primitive()));
    if let Some(n) = n {
        let ext = extension_for(&f, n)?;
        let big = ext.field();
        let mut e = js::field_descriptor(big);
        e["n"] = json!(n);
        e["degree_over_base"] = json!(ext.s());
        e["root_of_unity"] = json!(big.digits(ext.root_of_unity(n)?));
        v["extension"] = e;
    }
    Ok(v)
}

fn spec_json(spec: &ProductSpec) -> Value {
    json!({
        "ell_a": spec.ell_a, "m_a": spec.m_a, "ell_b": spec.ell_b, "m_b": spec.m_b,
        "a": spec.a, "b": spec.b, "shifts": spec.column_shifts(),
    })
}

fn simulate(s: &DecoderSetup, bursts: usize, trials: u64, seed: u64) -> CmdResult {
    let code = s.code();
    let (m, ell, q) = (code.m(), code.ell(), code.q());
    if bursts > m {
        return Err(Failure::Usage(format!("at most {m} burst positions fit")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = code.ring();
    let mut successes = 0u64;
    let mut failures = Vec::new();
    for _ in 0..trials {
        let c = code.random_codeword(&mut rng);
        let positions = rand::seq::index::sample(&mut rng, m, bursts).into_vec();
        let mut e = vec![vec![qcpc::Elem::ZERO; m]; ell];
        for &p in &positions {
            loop {
                for row in e.iter_mut() {
                    row[p] = qcpc::Elem(rng.gen_range(0..q));
                }
                if e.iter().any(|row| !row[p].is_zero()) {
                    break;
                }
            }
        }
        let r: Vec<Poly> = c.iter().zip(&e).map(|(cj, ej)| ring.add(cj, &Poly::from_coeffs(ej.clone()))).collect();
        let res = s.decode(&r);
        if res.corrected.as_ref() == Some(&c) {
            successes += 1;
        } else if failures.len() < oracle::TRANSCRIPT_LIMIT {
            let mut sorted = positions.clone();
            sorted.sort_unstable();
            failures.push(json!({
                "positions": sorted,
                "transmitted": js::word_to_json(code.field(), &c),
                "received": js::word_to_json(code.field(), &r),
                "outcome": match res.outcome { Outcome::Corrected => "miscorrected".to_string(), Outcome::Failure(x) => x },
            }));
        }
    }
    Ok(json!({
        "bursts": bursts,
        "radius": s.radius(),
        "trials": trials,
        "successes": successes,
        "ratio": if trials == 0 { 1.0 } else { successes as f64 / trials as f64 },
        "seed": seed,
        "failures": failures,
    }))
}

fn verify(args: &VerifyArgs, seed: u64) -> CmdResult {
    if args.l_a == 0 || args.l_b == 0 || args.m_a_max == 0 || args.m_b_max == 0 {
        return Err(Failure::Usage("indices and co-index limits must be positive".into()));
    }
    if gcd(args.l_a as u64, args.l_b as u64) != 1 {
        return Err(Failure::Usage(format!("indices {} and {} are not coprime", args.l_a, args.l_b)));
    }
    let f = Field::of_order(args.q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(args.trials);
    let mut all = true;
    for _ in 0..args.trials {
        let (m_a, m_b) =
            oracle::random_coindices(args.q, (args.l_a, args.l_b), (args.m_a_max, args.m_b_max), &mut rng)?;
        let level = if args.l_b == 1 && rng.gen_bool(0.3) { Some(1) } else { None };
        let a = oracle::random_qc_code(&f, args.l_a, m_a, level, &mut rng)?;
        let b = oracle::random_qc_code(&f, args.l_b, m_b, None, &mut rng)?;
        let check = product::check_constructions(&a, &b)?;
        all &= check.verified();
        instances.push(json!({
            "m_a": m_a,
            "m_b": m_b,
            "row_dimension": check.row_dimension,
            "col_dimension": check.col_dimension,
            "dimension": check.dimension,
            "constructions": verdicts_json(&check.verdicts),
            "verified": check.verified(),
        }));
    }
    let v = json!({
        "ell_a": args.l_a,
        "ell_b": args.l_b,
        "q": args.q,
        "seed": seed,
        "trials": args.trials,
        "instances": instances,
        "verified": all,
    });
    if all {
        Ok(v)
    } else {
        Err(Failure::Verification(v))
    }
}
