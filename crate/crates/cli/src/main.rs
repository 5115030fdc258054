//! `combinat`: one-shot command-line access to the exact combinatorics
//! library. Exit codes: 0 success, 1 verification failure, 2 usage or
//! domain error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use combinat::counting::{self, GergonneQuery, TypeVector};
use combinat::enumeration;
use combinat::exact::{format_rat, parse_int};
use combinat::number_theory;
use combinat::poset::{FinitePoset, SubsetFamily};
use combinat::recursive_matrix::RecursiveMatrix;
use combinat::table::Table;
use combinat::{verify, Error, ExactInt};

/// Setting this variable to anything but `0` adds timings to `verify`.
const VERBOSE_ENV: &str = "COMBINAT_VERBOSE";

#[derive(Parser)]
#[command(name = "combinat", version, about = "Exact enumerative combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one coefficient, e.g. `coeff binomial 3 2`.
    Coeff {
        /// binomial, multiset, gentile, multinomial, stirling1, stirling2, cycles, bell, faa,
        /// cauchy, derangement, dnk, surjections, gergonne, touchard, menage, phi, mobius, birthday
        family: String,
        /// Integer arguments of the family, e.g. `n k`.
        args: Vec<String>,
        /// Circular table (gergonne only).
        #[arg(long)]
        circular: bool,
        /// Print `{"family", "args", "values"}` as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Dump the first rows and columns of a coefficient table.
    Table {
        family: TableFamily,
        #[arg(long, default_value_t = 5)]
        rows: usize,
        #[arg(long, default_value_t = 5)]
        cols: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Maximum occupancy (gentile only).
        #[arg(long)]
        p: Option<usize>,
    },
    /// Run a verification suite (or `all`).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Möbius function, inversion and sieve on JSON inputs.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// List the objects of a family, one per line.
    Enumerate {
        #[command(subcommand)]
        family: EnumFamily,
        /// Print only the number of objects.
        #[arg(long, global = true)]
        count: bool,
    },
    /// Toy RSA (no padding, tiny keys; not for real use).
    Rsa {
        #[command(subcommand)]
        command: RsaCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Binomial,
    Multiset,
    Gentile,
    Stirling1,
    Stirling2,
    Cycles,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Every value mu(x, y) as `[x, y, value]` triples.
    Mobius { poset: PathBuf },
    /// Recover f from g(y) = sum_{x <= y} f(x) (or x >= y with --dual).
    Invert {
        poset: PathBuf,
        function: PathBuf,
        #[arg(long)]
        dual: bool,
    },
    /// Sylvester numbers, survivors and Jordan counts of a subset family.
    Sieve { family: PathBuf },
}

#[derive(Subcommand)]
enum EnumFamily {
    /// Words F(1)..F(k) with values in 1..n.
    Functions {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
    },
    /// Subsets of 1..n, optionally only those of size k.
    Subsets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Multisets of size k on 1..n.
    Multisets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Set partitions of 1..n, optionally only those with k blocks.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Permutations of 1..n with optional filters.
    Permutations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycles: Option<usize>,
        #[arg(long)]
        derangements: bool,
        #[arg(long)]
        fixed: Option<usize>,
        /// Print cycle notation instead of words.
        #[arg(long)]
        cycle_notation: bool,
    },
    /// Winning k-subsets of n cards with minimum lack m.
    Gergonne {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        circular: bool,
    },
    /// Reduced ménage placements for n couples.
    Menage {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    All,
    Injective,
    Surjective,
}

#[derive(Subcommand)]
enum RsaCommand {
    Keygen {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
    },
    Encrypt {
        #[arg(long)]
        n: String,
        #[arg(long)]
        e: String,
        #[arg(long)]
        m: String,
    },
    Decrypt {
        #[arg(long)]
        n: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        c: String,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Coeff {
            family,
            args,
            circular,
            json,
        } => cmd_coeff(&family, &args, circular, json),
        Command::Table {
            family,
            rows,
            cols,
            format,
            p,
        } => cmd_table(family, rows, cols, format, p),
        Command::Verify { suite } => cmd_verify(&suite),
        Command::Poset { command } => cmd_poset(command),
        Command::Enumerate { family, count } => cmd_enumerate(family, count),
        Command::Rsa { command } => cmd_rsa(command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn nat(s: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| usage(format!("expected a nonnegative integer, got {s:?}")))
}

fn nat64(s: &str) -> Result<u64, Failure> {
    s.parse()
        .map_err(|_| usage(format!("expected a nonnegative integer, got {s:?}")))
}

fn arity(family: &str, args: &[String], expected: &str, ok: bool) -> CmdResult {
    if ok {
        Ok(())
    } else {
        Err(usage(format!(
            "{family} expects {expected}, got {} argument(s)",
            args.len()
        )))
    }
}

fn cmd_coeff(family: &str, args: &[String], circular: bool, as_json: bool) -> CmdResult {
    let a = args;
    let pair = |what: &str| -> Result<(usize, usize), Failure> {
        arity(family, a, what, a.len() == 2)?;
        Ok((nat(&a[0])?, nat(&a[1])?))
    };
    let single = || -> Result<usize, Failure> {
        arity(family, a, "n", a.len() == 1)?;
        nat(&a[0])
    };
    let type_vector = || -> Result<TypeVector, Failure> {
        arity(family, a, "n followed by multiplicities v_1 v_2 ...", !a.is_empty())?;
        let n = nat(&a[0])?;
        let mults = a[1..].iter().map(|s| nat(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(TypeVector::new(n, mults)?)
    };
    if circular && family != "gergonne" {
        return Err(usage("--circular applies to gergonne only"));
    }
    let values: Vec<String> = match family {
        "binomial" => {
            let (n, k) = pair("n k")?;
            vec![counting::binomial(n, k).to_string()]
        }
        "multiset" => {
            let (n, k) = pair("n k")?;
            vec![counting::multiset_coeff(n, k).to_string()]
        }
        "gentile" => {
            arity(family, a, "p n k", a.len() == 3)?;
            vec![counting::gentile_coeff(nat(&a[0])?, nat(&a[1])?, nat(&a[2])?)?.to_string()]
        }
        "multinomial" => {
            arity(family, a, "n k_1 k_2 ...", !a.is_empty())?;
            let n = nat(&a[0])?;
            let parts = a[1..].iter().map(|s| nat(s)).collect::<Result<Vec<_>, _>>()?;
            vec![counting::multinomial(n, &parts).to_string()]
        }
        "stirling1" => {
            let (n, k) = pair("n k")?;
            vec![counting::stirling1_signed(n, k).to_string()]
        }
        "stirling2" => {
            let (n, k) = pair("n k")?;
            vec![counting::stirling2(n, k).to_string()]
        }
        "cycles" => {
            let (n, k) = pair("n k")?;
            vec![counting::cycle_count(n, k).to_string()]
        }
        "bell" => vec![counting::bell(single()?).to_string()],
        "faa" => vec![counting::faa_di_bruno(&type_vector()?).to_string()],
        "cauchy" => vec![counting::cauchy_count(&type_vector()?).to_string()],
        "derangement" => vec![counting::derangement(single()?).to_string()],
        "dnk" => {
            let (n, k) = pair("n k")?;
            vec![counting::derangement_fixed(n, k).to_string()]
        }
        "surjections" => {
            let (k, n) = pair("k n")?;
            vec![counting::surjection_count(k, n).to_string()]
        }
        "gergonne" => {
            let q = if circular {
                let (seats, k) = pair("seats k")?;
                GergonneQuery::circular(seats, k)
            } else {
                arity(family, a, "n k m", a.len() == 3)?;
                GergonneQuery::linear(nat(&a[0])?, nat(&a[1])?, nat(&a[2])?)
            };
            let (count, prob) = counting::gergonne(&q)?;
            vec![count.to_string(), format_rat(&prob)]
        }
        "touchard" => vec![counting::touchard(single()?)?.to_string()],
        "menage" => vec![counting::menage_count(single()?)?.to_string()],
        "phi" => {
            arity(family, a, "n", a.len() == 1)?;
            vec![number_theory::euler_phi(nat64(&a[0])?)?.to_string()]
        }
        "mobius" => {
            arity(family, a, "n", a.len() == 1)?;
            vec![number_theory::mobius_classical(nat64(&a[0])?)?.to_string()]
        }
        "birthday" => {
            arity(family, a, "k [days]", a.len() == 1 || a.len() == 2)?;
            let days = a.get(1).map(|s| nat(s)).transpose()?.unwrap_or(365);
            vec![format_rat(&counting::birthday_probability(nat(&a[0])?, days)?)]
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    if as_json {
        println!("{}", json!({ "family": family, "args": args, "values": values }));
    } else {
        for v in values {
            println!("{v}");
        }
    }
    Ok(())
}

fn cmd_table(family: TableFamily, rows: usize, cols: usize, format: Format, p: Option<usize>) -> CmdResult {
    if p.is_some() && !matches!(family, TableFamily::Gentile) {
        return Err(usage("--p applies to gentile only"));
    }
    let order = cols.saturating_sub(1);
    let grid = |name: &str, f: fn(usize, usize) -> ExactInt| {
        Table::new(name, (0..rows).map(|n| (0..cols).map(|k| f(n, k)).collect()).collect())
    };
    let table = match family {
        TableFamily::Binomial => RecursiveMatrix::binomial(order).table(rows, cols)?,
        TableFamily::Multiset => RecursiveMatrix::multiset(order).table(rows, cols)?,
        TableFamily::Gentile => {
            let p = p.ok_or_else(|| usage("gentile needs --p"))?;
            RecursiveMatrix::gentile(p, order)?.table(rows, cols)?
        }
        TableFamily::Stirling1 => grid("stirling1", counting::stirling1_signed),
        TableFamily::Stirling2 => grid("stirling2", counting::stirling2),
        TableFamily::Cycles => grid("cycles", counting::cycle_count),
    };
    match format {
        Format::Csv => print!("{}", table.to_csv()?),
        Format::Json => println!("{}", table.to_json()),
    }
    Ok(())
}

fn cmd_verify(suite: &str) -> CmdResult {
    let verbose = std::env::var(VERBOSE_ENV).is_ok_and(|v| v != "0");
    let start = Instant::now();
    let checks = verify::run(suite)?;
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} checks, {failed} failed", checks.len());
    if verbose {
        eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(Error::Parse(format!("{}: {e}", path.display()))))
}

fn cmd_poset(command: PosetCommand) -> CmdResult {
    match command {
        PosetCommand::Mobius { poset } => {
            let p = FinitePoset::from_json(&read_json(&poset)?)?;
            println!("{}", p.mobius().to_json(&p));
        }
        PosetCommand::Invert { poset, function, dual } => {
            let p = FinitePoset::from_json(&read_json(&poset)?)?;
            let g = p.function_from_json(&read_json(&function)?)?;
            let f = if dual { p.invert_dual(&g)? } else { p.invert(&g)? };
            println!("{}", p.function_to_json(&f));
        }
        PosetCommand::Sieve { family } => {
            let fam = SubsetFamily::from_json(&read_json(&family)?)?;
            let strings = |v: Vec<ExactInt>| v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>();
            let out = json!({
                "sylvester": strings(fam.sylvester_numbers()?),
                "survivors": fam.sylvester_count()?.to_string(),
                "jordan": strings(fam.jordan_counts()?),
            });
            println!("{out}");
        }
    }
    Ok(())
}

fn emit<T>(items: impl Iterator<Item = T>, count: bool, render: impl Fn(&T) -> String) {
    if count {
        println!("{}", items.count());
    } else {
        for it in items {
            println!("{}", render(&it));
        }
    }
}

fn cmd_enumerate(family: EnumFamily, count: bool) -> CmdResult {
    use enumeration::*;
    match family {
        EnumFamily::Functions { k, n, mode } => {
            let mode = match mode {
                Mode::All => FunctionMode::All,
                Mode::Injective => FunctionMode::Injective,
                Mode::Surjective => FunctionMode::Surjective,
            };
            emit(enumerate_functions(k, n, mode)?, count, |w| format_word(w));
        }
        EnumFamily::Subsets { n, k } => {
            emit(enumerate_subsets(n, k)?, count, |s| subset_text(s));
        }
        EnumFamily::Multisets { n, k } => {
            emit(enumerate_multisets(n, k)?, count, |m| format_word(&m.word()));
        }
        EnumFamily::Partitions { n, k } => {
            emit(enumerate_set_partitions(n, k, None)?, count, |p| p.to_string());
        }
        EnumFamily::Permutations {
            n,
            cycles,
            derangements,
            fixed,
            cycle_notation,
        } => {
            let filter = PermFilter {
                cycles,
                cycle_type: None,
                derangement_only: derangements,
                fixed_points: fixed,
            };
            emit(enumerate_permutations(n, filter)?, count, |p| {
                if cycle_notation {
                    cycle_decompose(p).to_string()
                } else {
                    p.to_string()
                }
            });
        }
        EnumFamily::Gergonne { n, k, m, circular } => {
            let q = if circular {
                if m != 1 {
                    return Err(usage("circular Gergonne supports m = 1 only"));
                }
                GergonneQuery::circular(n, k)
            } else {
                GergonneQuery::linear(n, k, m)
            };
            emit(enumerate_gergonne(q)?, count, |s| subset_text(s));
        }
        EnumFamily::Menage { n } => {
            emit(enumerate_menage(n)?, count, |p| p.to_string());
        }
    }
    Ok(())
}

fn subset_text(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn int_arg(name: &str, s: &str) -> Result<ExactInt, Failure> {
    parse_int(s).map_err(|_| usage(format!("--{name} expects a decimal integer, got {s:?}")))
}

fn cmd_rsa(command: RsaCommand) -> CmdResult {
    match command {
        RsaCommand::Keygen { p, q, e } => {
            let key = number_theory::rsa_keygen(p, q, e)?;
            let out = serde_json::to_value(&key).map_err(|e| Failure::Domain(Error::Inconsistency(e.to_string())))?;
            println!("{out}");
        }
        RsaCommand::Encrypt { n, e, m } => {
            let c = number_theory::rsa_encrypt(&int_arg("n", &n)?, &int_arg("e", &e)?, &int_arg("m", &m)?)?;
            println!("{}", json!({ "c": c.to_string() }));
        }
        RsaCommand::Decrypt { n, d, c } => {
            let m = number_theory::rsa_decrypt(&int_arg("n", &n)?, &int_arg("d", &d)?, &int_arg("c", &c)?)?;
            println!("{}", json!({ "m": m.to_string() }));
        }
    }
    Ok(())
}
