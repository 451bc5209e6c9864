use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superinv::arith::{format_rational, TrigradedSeries};
use superinv::group::{CharacterSpec, MatrixGroup, PermGroup};
use superinv::molien::{molien_vs_oracle, super_molien, GroupAction};
use superinv::shuffle::shuffle_product;
use superinv::superalg::SuperPolynomial;
use superinv::symfunc::{CycleIndexFlavor, SymFuncPoly};
use superinv::verify::{run_suite, Suite, VerifyReport, DEFAULT_SEED};
use superinv::wreath_series::{
    collated_product_series, collated_sum_series, wreath_hilbert_direct, wreath_hilbert_plethysm, CollationSpec,
};
use superinv::{fixtures, Flavor};

mod table;

#[derive(Parser)]
#[command(name = "superinv", version, about = "Hilbert series and shuffle algebras of superpolynomial invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Molien series of a graded matrix group.
    Molien(MolienArgs),
    /// Cycle index of a permutation group.
    CycleIndex(CycleIndexArgs),
    /// Hilbert series of wreath-product invariants.
    Wreath(WreathArgs),
    /// Collated series over all n.
    Collate(CollateArgs),
    /// Shuffle product of two elements.
    Shuffle(ShuffleArgs),
    /// Run a verification battery.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MolienArgs {
    /// Group JSON file or built-in name (trivial_1_1, pm1, s3_odd, young_2_1, ...).
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 6)]
    dq: u32,
    /// trivial, sgn, or {"values": [...]} (inline or a file path).
    #[arg(long, default_value = "trivial")]
    character: String,
    /// Compare every coefficient with the brute-force oracle.
    #[arg(long)]
    check: bool,
    /// Compare with an expected series JSON file.
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Args)]
struct CycleIndexArgs {
    /// Permutation group JSON file or built-in name (s3, c4, trivial2).
    #[arg(long)]
    perm: String,
    #[arg(long, value_enum, default_value_t = CycleFlavor::Plain)]
    flavor: CycleFlavor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CycleFlavor {
    Plain,
    Sgn,
}

#[derive(Args)]
struct WreathArgs {
    #[arg(long)]
    perm: String,
    #[arg(long)]
    group: String,
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, default_value_t = 6)]
    dq: u32,
    #[arg(long, default_value = "invariant")]
    flavor: String,
    /// Compute both routes and compare.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct CollateArgs {
    #[arg(long)]
    group: String,
    /// Largest n (the t-cap).
    #[arg(short = 'N', long = "n-max", default_value_t = 3)]
    n_max: u32,
    #[arg(long, default_value_t = 6)]
    dq: u32,
    /// u-cap; defaults to N·r1.
    #[arg(long)]
    du: Option<u32>,
    #[arg(long, default_value = "invariant")]
    flavor: String,
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct ShuffleArgs {
    left: String,
    right: String,
    #[arg(long)]
    signed: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

enum Failure {
    Input(String),
}

impl From<superinv::error::Error> for Failure {
    fn from(e: superinv::error::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn read_json(source: &str) -> Result<Value, Failure> {
    let text = fs::read_to_string(source).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{source}: {e}")))
}

fn load_group(source: &str) -> Result<MatrixGroup, Failure> {
    if !Path::new(source).exists() {
        if let Some(g) = fixtures::named_group(source) {
            return Ok(g);
        }
    }
    Ok(MatrixGroup::from_json(&read_json(source)?)?)
}

fn load_perm(source: &str) -> Result<PermGroup, Failure> {
    if !Path::new(source).exists() {
        if let Some(p) = fixtures::named_perm_group(source) {
            return Ok(p);
        }
    }
    Ok(PermGroup::from_json(&read_json(source)?)?)
}

fn load_character(source: &str) -> Result<CharacterSpec, Failure> {
    if Path::new(source).exists() {
        let text = fs::read_to_string(source).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
        return Ok(CharacterSpec::parse(&text)?);
    }
    Ok(CharacterSpec::parse(source)?)
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("JSON output")),
        Format::Table => print!("{}", table()),
    }
}

fn emit_series(format: Format, s: &TrigradedSeries) {
    emit(format, &s.to_json(), || table::series(s));
}

fn verdict(format: Format, v: Value) -> bool {
    let ok = v["match"].as_bool().unwrap_or(false);
    emit(format, &v, || format!("match: {ok}\n"));
    ok
}

fn molien(a: MolienArgs, format: Format) -> Outcome {
    let g = load_group(&a.group)?;
    let action = GroupAction::from_matrix_group(&g, &load_character(&a.character)?)?;
    if a.check {
        let report = molien_vs_oracle(&action, a.dq)?;
        emit(format, &report.to_json(), || table::molien_report(&report));
        return Ok(report.is_clean());
    }
    let h = super_molien(&action, a.dq)?;
    if let Some(path) = a.expect {
        let expected = TrigradedSeries::from_json(&read_json(&path)?)?;
        let differences: Vec<Value> = h
            .differences(&expected)
            .into_iter()
            .map(|((t, q, u), got, want)| {
                json!({"t": t, "q": q, "u": u, "got": format_rational(&got), "expected": format_rational(&want)})
            })
            .collect();
        let v = json!({"match": differences.is_empty(), "differences": differences});
        return Ok(verdict(format, v));
    }
    emit_series(format, &h);
    Ok(true)
}

fn cycle_index(a: CycleIndexArgs, format: Format) -> Outcome {
    let p = load_perm(&a.perm)?;
    let flavor = match a.flavor {
        CycleFlavor::Plain => CycleIndexFlavor::Plain,
        CycleFlavor::Sgn => CycleIndexFlavor::Sgn,
    };
    let z = SymFuncPoly::cycle_index(&p, flavor);
    emit(format, &z.to_json(), || format!("{z}\n"));
    Ok(true)
}

fn wreath(a: WreathArgs, format: Format) -> Outcome {
    let (p, g) = (load_perm(&a.perm)?, load_group(&a.group)?);
    let flavor = Flavor::parse(&a.flavor)?;
    let direct = wreath_hilbert_direct(&p, &g, a.n, flavor, a.dq)?;
    if !a.check {
        emit_series(format, &direct);
        return Ok(true);
    }
    let plethysm = wreath_hilbert_plethysm(&p, &g, a.n, flavor, a.dq)?;
    Ok(verdict(
        format,
        json!({"identity": "wreath-plethysm", "flavor": flavor.name(), "match": direct == plethysm, "caps": direct.caps()}),
    ))
}

fn collate(a: CollateArgs, format: Format) -> Outcome {
    let g = load_group(&a.group)?;
    let spec = CollationSpec {
        du: a.du.unwrap_or(a.n_max * g.dims().1 as u32),
        group: g,
        n_max: a.n_max,
        dq: a.dq,
        flavor: Flavor::parse(&a.flavor)?,
    };
    let sum = collated_sum_series(&spec)?;
    if !a.check {
        emit_series(format, &sum);
        return Ok(true);
    }
    let product = collated_product_series(&spec)?;
    Ok(verdict(
        format,
        json!({"identity": "collation", "flavor": spec.flavor.name(), "match": sum == product, "caps": spec.caps()}),
    ))
}

fn shuffle(a: ShuffleArgs, format: Format) -> Outcome {
    let left = SuperPolynomial::from_json(&read_json(&a.left)?)?;
    let right = SuperPolynomial::from_json(&read_json(&a.right)?)?;
    let product = shuffle_product(&left, &right, a.signed)?;
    emit(format, &product.to_json(), || table::element(&product));
    Ok(true)
}

fn verify(a: VerifyArgs, format: Format) -> Outcome {
    let report: VerifyReport = run_suite(Suite::parse(&a.suite)?, a.seed)?;
    emit(format, &report.to_json(), || table::verify_report(&report));
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Molien(a) => molien(a, format),
        Command::CycleIndex(a) => cycle_index(a, format),
        Command::Wreath(a) => wreath(a, format),
        Command::Collate(a) => collate(a, format),
        Command::Shuffle(a) => shuffle(a, format),
        Command::Verify(a) => verify(a, format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
