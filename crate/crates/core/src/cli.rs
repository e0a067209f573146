//! Command-line surface: totient evaluation, range tables, verification
//! sweeps, the variant cipher, collision enumeration, and the surveys.
//!
//! Data goes to stdout (JSON envelopes, JSON lines, or CSV); diagnostics
//! and timing go to stderr. Identical argument vectors and seeds produce
//! byte-identical stdout, so outputs are safe to golden-test. Exit codes:
//! 0 success, 1 verification failure, 2 usage or input error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::arithmetic::{factorize, gcd, gen_safe_prime};
use crate::attack::{collision_lower_bound, count_solvable_exponents, enumerate_collision_pairs};
use crate::error::Result;
use crate::lemma_lab::{
    check_group_laws, check_set_lemmas, corollary_survey, parity_survey, verify_t_range,
    VerificationReport, COROLLARY_CSV_HEADER, PARITY_CSV_HEADER,
};
use crate::rng::SplitMix64;
use crate::totient::{euler_phi, schemmel, t_evaluate, t_oracle, tr_oracle, TotientValue};
use crate::variant_group::{decrypt, encrypt, keygen, AdditiveCyclic, FiniteGroup, UnitsModN, VariantKey};

/// Largest `n` the CLI will resolve by brute force when `--oracle` asks
/// for resolution of a constrained evaluation (also caps the Tr oracle).
pub const ORACLE_FALLBACK_LIMIT: u64 = 10_000_000;

/// Largest `hi` accepted by `verify range`: the sweep is quadratic in `hi`.
pub const VERIFY_RANGE_LIMIT: u64 = 1_000_000;

/// Largest modulus accepted by `verify lemmas`.
pub const LEMMA_BUDGET_LIMIT: u64 = 10_000_000;

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "variant-totient",
    about = "Totient variants, variant-group encryption, and collision verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a totient function at n
    Totient(TotientArgs),
    /// Emit per-n totient evaluations over a range
    Table(TableArgs),
    /// Run verification sweeps; exits 1 on any violation
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Key generation and the variant cipher over units modulo a prime
    Crypto {
        #[command(subcommand)]
        what: CryptoCommand,
    },
    /// Exhaustive collision enumeration against the cipher
    Attack {
        #[command(subcommand)]
        what: AttackCommand,
    },
    /// CSV experiment surveys
    Survey {
        #[command(subcommand)]
        what: SurveyCommand,
    },
}

#[derive(Args)]
struct TotientArgs {
    /// Argument of the totient function
    n: u64,
    /// Which function to evaluate
    #[arg(long, value_enum, default_value_t = TotientFunction::T)]
    function: TotientFunction,
    /// Shift divisor for schemmel and Tr
    #[arg(long)]
    r: Option<u64>,
    /// Also resolve T by brute force (n capped at 10^7)
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TotientFunction {
    /// Euler's phi
    #[value(name = "phi")]
    Phi,
    /// Schemmel's count of r consecutive units
    #[value(name = "schemmel")]
    Schemmel,
    /// The half-shift totient T
    #[value(name = "T", alias = "t")]
    T,
    /// The generalized T_r, by brute force
    #[value(name = "Tr", alias = "tr")]
    Tr,
}

#[derive(Args)]
struct TableArgs {
    lo: u64,
    hi: u64,
    /// Which function to tabulate (only T is supported)
    #[arg(long, value_enum)]
    function: TableFunction,
    #[arg(long, value_enum, default_value_t = TableFormat::Jsonl)]
    format: TableFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFunction {
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Compare the T evaluator with the oracle for every n in [lo, hi]
    Range { lo: u64, hi: u64 },
    /// Enumerate the residue-set size claims for an odd modulus
    Lemmas { n: u64 },
    /// Spot-check group and variant laws for a group spec like units:35
    Group {
        /// Group to check: units:<modulus> or additive:<modulus>
        spec: String,
        /// Seed for the sampled checks
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CryptoCommand {
    /// Generate a safe prime and a key over its unit group
    Keygen {
        #[arg(long = "safe-prime-bits", value_parser = clap::value_parser!(u32).range(4..=62))]
        safe_prime_bits: u32,
        #[arg(long)]
        seed: u64,
    },
    /// Encrypt plaintext g under key (x, e) in the units modulo p
    Encrypt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        g: u64,
    },
    /// Decrypt ciphertext c under key (x, e) in the units modulo p
    Decrypt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        c: u64,
    },
}

#[derive(Subcommand)]
enum AttackCommand {
    /// Count all (y, f) colliding with the target (g x)^(e-1)
    Pairs {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        e: u64,
    },
    /// Count exponents f > 1 and pairs (w, f) solving w^(f-1) = c
    Exponents {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
    },
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Minimal Bezout pairs for coprime odd p < q up to the limit
    Parity {
        #[arg(long)]
        limit: u64,
    },
    /// Which totient candidate two-prime-power moduli take, up to the limit
    Corollary {
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Serialize)]
struct OutputRecord {
    command: &'static str,
    inputs: serde_json::Value,
    outputs: serde_json::Value,
}

/// Runs the CLI on the given argument vector, writing data to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_err) => {
            let _ = write!(err, "{parse_err}");
            // clap distinguishes --help/--version from real usage errors
            return if parse_err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let started = Instant::now();
    let code = match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    };
    let _ = writeln!(err, "elapsed_ms={}", started.elapsed().as_millis());
    code
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Totient(args) => run_totient(args, out, err),
        Command::Table(args) => run_table(args, out),
        Command::Verify { what } => run_verify(what, out, err),
        Command::Crypto { what } => run_crypto(what, out),
        Command::Attack { what } => run_attack(what, out),
        Command::Survey { what } => run_survey(what, out, err),
    }
}

fn emit(out: &mut dyn Write, record: &OutputRecord) {
    let line = serde_json::to_string(record).expect("records serialize");
    let _ = writeln!(out, "{line}");
}

fn usage_error(err: &mut dyn Write, message: &str) -> Result<i32> {
    let _ = writeln!(err, "error: {message}");
    Ok(EXIT_USAGE)
}

fn run_totient(args: TotientArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.n == 0 {
        return usage_error(err, "n must be at least 1");
    }
    let r = args.r.unwrap_or(2);
    let (inputs, outputs) = match args.function {
        TotientFunction::Phi => (
            json!({ "n": args.n, "function": "phi" }),
            json!({ "value": euler_phi(&factorize(args.n)) }),
        ),
        TotientFunction::Schemmel => {
            if r < 1 {
                return usage_error(err, "--r must be at least 1 for schemmel");
            }
            (
                json!({ "n": args.n, "function": "schemmel", "r": r }),
                json!({ "value": schemmel(r, &factorize(args.n)) }),
            )
        }
        TotientFunction::Tr => {
            if r < 2 {
                return usage_error(err, "--r must be at least 2 for Tr");
            }
            if args.n > ORACLE_FALLBACK_LIMIT {
                return usage_error(
                    err,
                    &format!("Tr is brute-force only and limited to n <= {ORACLE_FALLBACK_LIMIT}"),
                );
            }
            (
                json!({ "n": args.n, "function": "Tr", "r": r }),
                json!({ "value": tr_oracle(r, args.n) }),
            )
        }
        TotientFunction::T => {
            let evaluation = t_evaluate(&factorize(args.n));
            let mut outputs = json!({ "evaluation": evaluation });
            if args.oracle {
                if args.n > ORACLE_FALLBACK_LIMIT {
                    return usage_error(
                        err,
                        &format!("--oracle is limited to n <= {ORACLE_FALLBACK_LIMIT}"),
                    );
                }
                outputs["oracle_value"] = json!(t_oracle(args.n));
            }
            (json!({ "n": args.n, "function": "T", "oracle": args.oracle }), outputs)
        }
    };
    emit(out, &OutputRecord { command: "totient", inputs, outputs });
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    #[serde(flatten)]
    value: TotientValue,
}

fn run_table(args: TableArgs, out: &mut dyn Write) -> Result<i32> {
    let lo = args.lo.max(1);
    if matches!(args.format, TableFormat::Csv) {
        let _ = writeln!(out, "n,kind,value,lower,upper,parity,candidates,rule");
    }
    // evaluate in parallel a chunk at a time, emit in order
    const CHUNK: u64 = 1 << 16;
    let mut chunk_lo = lo;
    while chunk_lo <= args.hi {
        let chunk_hi = chunk_lo.saturating_add(CHUNK - 1).min(args.hi);
        let rows: Vec<TableRow> = (chunk_lo..=chunk_hi)
            .into_par_iter()
            .map(|n| TableRow { n, value: t_evaluate(&factorize(n)) })
            .collect();
        for row in &rows {
            write_table_row(out, row, args.format);
        }
        chunk_lo = match chunk_hi.checked_add(1) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(EXIT_OK)
}

fn write_table_row(out: &mut dyn Write, row: &TableRow, format: TableFormat) {
    match format {
        TableFormat::Jsonl => {
            let _ = writeln!(out, "{}", serde_json::to_string(row).expect("rows serialize"));
        }
        TableFormat::Csv => {
            let v = &row.value;
            let candidates = v
                .candidates()
                .map(|set| set.iter().map(u64::to_string).collect::<Vec<_>>().join("|"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.n,
                if v.exact().is_some() { "exact" } else { "constrained" },
                v.exact().map(|x| x.to_string()).unwrap_or_default(),
                v.lower_bound(),
                v.upper_bound(),
                format!("{:?}", v.parity()).to_lowercase(),
                candidates,
                v.rule().label(),
            );
        }
    }
}

fn report_exit(out: &mut dyn Write, command: &'static str, inputs: serde_json::Value, report: &VerificationReport) -> Result<i32> {
    let outputs = serde_json::to_value(report).expect("reports serialize");
    emit(out, &OutputRecord { command, inputs, outputs });
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
}

fn run_verify(what: VerifyCommand, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match what {
        VerifyCommand::Range { lo, hi } => {
            if hi > VERIFY_RANGE_LIMIT {
                return usage_error(err, &format!("verify range is limited to hi <= {VERIFY_RANGE_LIMIT}"));
            }
            let report = verify_t_range(lo, hi);
            report_exit(out, "verify-range", json!({ "lo": lo, "hi": hi }), &report)
        }
        VerifyCommand::Lemmas { n } => {
            if n <= 1 || n % 2 == 0 {
                return usage_error(err, &format!("n = {n} must be odd and > 1"));
            }
            if n > LEMMA_BUDGET_LIMIT {
                return usage_error(err, &format!("verify lemmas is limited to n <= {LEMMA_BUDGET_LIMIT}"));
            }
            let report = check_set_lemmas(n);
            report_exit(out, "verify-lemmas", json!({ "n": n }), &report)
        }
        VerifyCommand::Group { spec, seed } => {
            let report = match parse_group_spec(&spec)? {
                GroupSpec::Units(m) => check_group_laws(&UnitsModN::new(m), seed)?,
                GroupSpec::Additive(m) => check_group_laws(&AdditiveCyclic::new(m), seed)?,
            };
            report_exit(out, "verify-group", json!({ "spec": spec, "seed": seed }), &report)
        }
    }
}

enum GroupSpec {
    Units(u64),
    Additive(u64),
}

fn parse_group_spec(spec: &str) -> Result<GroupSpec> {
    let bad = || crate::Error::InvalidResidueSpec(format!(
        "group spec must look like units:<modulus> or additive:<modulus>, got {spec:?}"
    ));
    let (kind, modulus) = spec.split_once(':').ok_or_else(bad)?;
    let modulus: u64 = modulus.parse().map_err(|_| bad())?;
    match kind {
        "units" if modulus >= 2 => Ok(GroupSpec::Units(modulus)),
        "additive" if modulus >= 1 => Ok(GroupSpec::Additive(modulus)),
        _ => Err(bad()),
    }
}

fn run_crypto(what: CryptoCommand, out: &mut dyn Write) -> Result<i32> {
    match what {
        CryptoCommand::Keygen { safe_prime_bits, seed } => {
            let mut rng = SplitMix64::new(seed);
            let (prime_seed, key_seed) = (rng.next_u64(), rng.next_u64());
            let p = gen_safe_prime(safe_prime_bits, prime_seed);
            let group = UnitsModN::new(p);
            let key = keygen(&group, key_seed)?;
            emit(
                out,
                &OutputRecord {
                    command: "crypto-keygen",
                    inputs: json!({ "safe_prime_bits": safe_prime_bits, "seed": seed }),
                    outputs: json!({
                        "p": p,
                        "sophie_germain_q": (p - 1) / 2,
                        "order": p - 1,
                        "x": key.x,
                        "e": key.e,
                    }),
                },
            );
            Ok(EXIT_OK)
        }
        CryptoCommand::Encrypt { p, x, e, g } => {
            let group = units_group(p)?;
            validate_exponent(e, group.order())?;
            let c = encrypt(&group, &VariantKey { x, e }, g)?;
            emit(
                out,
                &OutputRecord {
                    command: "crypto-encrypt",
                    inputs: json!({ "p": p, "x": x, "e": e, "g": g }),
                    outputs: json!({ "c": c }),
                },
            );
            Ok(EXIT_OK)
        }
        CryptoCommand::Decrypt { p, x, e, c } => {
            let group = units_group(p)?;
            validate_exponent(e, group.order())?;
            let g = decrypt(&group, &VariantKey { x, e }, c)?;
            emit(
                out,
                &OutputRecord {
                    command: "crypto-decrypt",
                    inputs: json!({ "p": p, "x": x, "e": e, "c": c }),
                    outputs: json!({ "g": g }),
                },
            );
            Ok(EXIT_OK)
        }
    }
}

fn units_group(p: u64) -> Result<UnitsModN> {
    if p < 2 {
        return Err(crate::Error::InvalidElement { element: p, modulus: 2 });
    }
    Ok(UnitsModN::new(p))
}

fn validate_exponent(e: u64, order: u64) -> Result<()> {
    if e <= 1 {
        return Err(crate::Error::ExponentTooSmall { exponent: e });
    }
    if gcd(e, order) != 1 {
        return Err(crate::Error::NotAUnit { value: e % order, modulus: order });
    }
    Ok(())
}

fn run_attack(what: AttackCommand, out: &mut dyn Write) -> Result<i32> {
    match what {
        AttackCommand::Pairs { p, g, x, e } => {
            let group = units_group(p)?;
            let report = enumerate_collision_pairs(&group, g, x, e)?;
            emit(
                out,
                &OutputRecord {
                    command: "attack-pairs",
                    inputs: json!({ "p": p, "g": g, "x": x, "e": e }),
                    outputs: serde_json::to_value(&report).expect("reports serialize"),
                },
            );
            Ok(EXIT_OK)
        }
        AttackCommand::Exponents { p, c } => {
            let group = units_group(p)?;
            let (exponent_count, pair_count) = count_solvable_exponents(&group, c)?;
            let bound = collision_lower_bound(group.order());
            let solvable = exponent_count > 0;
            emit(
                out,
                &OutputRecord {
                    command: "attack-exponents",
                    inputs: json!({ "p": p, "c": c }),
                    outputs: json!({
                        "order": group.order(),
                        "target": c,
                        "exponent_count": exponent_count,
                        "pair_count": pair_count,
                        "theoretical_lower_bound": bound,
                        "solvable": solvable,
                        "bound_satisfied": if solvable { json!(pair_count >= bound) } else { serde_json::Value::Null },
                    }),
                },
            );
            Ok(EXIT_OK)
        }
    }
}

fn run_survey(what: SurveyCommand, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match what {
        SurveyCommand::Parity { limit } => {
            if limit < 5 {
                return usage_error(err, "--limit must be at least 5");
            }
            let _ = writeln!(out, "{PARITY_CSV_HEADER}");
            for row in parity_survey(limit) {
                let _ = writeln!(out, "{},{},{},{},{}", row.p, row.q, row.a, row.b, row.parity_of_a());
            }
            Ok(EXIT_OK)
        }
        SurveyCommand::Corollary { limit } => {
            let rows = match corollary_survey(limit) {
                Ok(rows) => rows,
                Err(e) => {
                    // a dichotomy violation is a falsified prediction, not bad usage
                    let _ = writeln!(err, "error: {e}");
                    return Ok(EXIT_VERIFICATION_FAILED);
                }
            };
            let _ = writeln!(out, "{COROLLARY_CSV_HEADER}");
            for row in rows {
                let which = match row.which_candidate {
                    crate::lemma_lab::WhichCandidate::Lower => "lower",
                    crate::lemma_lab::WhichCandidate::Upper => "upper",
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    row.p, row.q, row.e, row.f, row.n, row.schemmel, row.totient, which
                );
            }
            Ok(EXIT_OK)
        }
    }
}
