//! Command-line frontend. [`run`] parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use catalog::{build, manifest, GroupInstance, Manifest, Tier};
use clap::{Args, Parser, Subcommand, ValueEnum};
use classifier::{classify, ClassifyError, GroupSpec, Outcome, SpecError, SpecRecord, Verdict};
use oracle::{
    brute_m_r, run_verification, summary_table, Filter, OracleError, Profile, RunOptions,
};
use permgroup::rng_from_seed;
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

/// Version of the JSON layouts written by the CLI itself.
pub const CLI_SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "unimax",
    version,
    about = "Decide whether a Sylow subgroup of an almost simple group lies in a unique maximal subgroup"
)]
struct Cli {
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Feasibility profile: `desk`, `stretch`, or a path to a profile file.
    /// `UNIMAX_PROFILE`, when set, takes precedence.
    #[arg(long, global = true, default_value = "desk")]
    profile: String,
    /// Worker threads for `verify`.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a group and prime from the tables.
    Classify(SpecArgs),
    /// Compute the maximal overgroups of a Sylow subgroup by exhaustive search.
    Oracle {
        /// Group name, e.g. `A5`, `PGL2(7)`, `L2(9):t`, `Sz(8)` or `Sz8`.
        #[arg(long)]
        instance: String,
        #[arg(long)]
        r: u64,
    },
    /// Diff the classifier against the oracle over the manifest.
    Verify {
        /// Restrict the run, e.g. `family=Alt`, `instance=M11`, `r=2`.
        #[arg(long)]
        only: Option<String>,
        /// Manifest file to use instead of the built-in one.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Browse the instance manifest.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List manifest instances.
    List,
    /// Show one instance: parameters, orders, generators and the primes dividing its order.
    Describe { name: String },
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// `Alt`, `Sym`, `Sporadic`, or a Lie-type code: `L`, `U`, `Sp`, `O`, `O+`, `O-`, `2B2`, `2G2`, `2F4`, `3D4`, `G2`, `F4`, `E6`, `2E6`, `E7`, `E8`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    f: Option<u32>,
    /// Outer-automorphism decoration, e.g. `1`, `d`, `f2`, `d2.f2`, `g`, `t`.
    #[arg(long, default_value = "1")]
    outer: String,
    /// Sporadic group name, or a full group name when `--family` is absent.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    r: u64,
}

/// A failure with its exit code and a stable reason code.
#[derive(Debug)]
struct Failure {
    code: u8,
    reason: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, reason: &'static str, message: impl Into<String>) -> Failure {
        Failure {
            code,
            reason,
            message: message.into(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::new(EXIT_INPUT, "spec_invalid", e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Spec(s) => s.into(),
            ClassifyError::NotPrime(_) => Failure::new(EXIT_INPUT, "r_not_prime", e.to_string()),
            other => Failure::new(EXIT_MISMATCH, "classifier_inconsistent", other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Infeasible(_) => {
                Failure::new(EXIT_INFEASIBLE, "infeasible", e.to_string())
            }
            OracleError::Catalog(catalog::CatalogError::Spec(s)) => s.into(),
            OracleError::Catalog(c) => Failure::new(EXIT_INPUT, "unknown_instance", c.to_string()),
            OracleError::Profile(_) => Failure::new(EXIT_INPUT, "profile_invalid", e.to_string()),
            OracleError::Precondition(_) => Failure::new(EXIT_INPUT, "precondition", e.to_string()),
            other => Failure::new(EXIT_MISMATCH, "oracle_failure", other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(&cli, err) {
        Ok((text, code)) => match write_output(&cli, out, &text) {
            Ok(()) => code,
            Err(f) => report_failure(err, &f),
        },
        Err(f) => report_failure(err, &f),
    }
}

fn report_failure(err: &mut dyn Write, f: &Failure) -> u8 {
    let _ = writeln!(err, "error[{}]: {}", f.reason, f.message.replace('\n', " "));
    f.code
}

fn write_output(cli: &Cli, out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::new(
                EXIT_INPUT,
                "output_unwritable",
                format!("{}: {e}", path.display()),
            )
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(EXIT_INPUT, "output_unwritable", e.to_string())),
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Classify(args) => cmd_classify(cli, args),
        Command::Oracle { instance, r } => cmd_oracle(cli, instance, *r),
        Command::Verify { only, manifest } => {
            cmd_verify(cli, only.as_deref(), manifest.as_ref(), err)
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => cmd_catalog_list(cli),
        Command::Catalog {
            action: CatalogAction::Describe { name },
        } => cmd_catalog_describe(cli, name),
    }
}

pub const PROFILE_ENV: &str = "UNIMAX_PROFILE";

fn profile(cli: &Cli) -> Result<Profile, Failure> {
    let name = std::env::var(PROFILE_ENV)
        .ok()
        .filter(|v| !v.is_empty())
        .unwrap_or_else(|| cli.profile.clone());
    Ok(Profile::resolve(&name)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize") + "\n"
}

/// Resolves a group name, also accepting compact forms like `Sz8` or `L27`.
fn resolve_name(name: &str) -> Result<GroupSpec, Failure> {
    if let Ok(spec) = GroupSpec::parse(name) {
        return Ok(spec);
    }
    let (base, deco) = name
        .split_once(':')
        .map_or((name, None), |(b, d)| (b, Some(d)));
    for i in 1..base.len() {
        if !base.is_char_boundary(i) || !base[i..].chars().all(|c| c.is_ascii_digit()) {
            continue;
        }
        let candidate = match deco {
            Some(d) => format!("{}({}):{d}", &base[..i], &base[i..]),
            None => format!("{}({})", &base[..i], &base[i..]),
        };
        if let Ok(spec) = GroupSpec::parse(&candidate) {
            return Ok(spec);
        }
    }
    Err(Failure::new(
        EXIT_INPUT,
        "unknown_instance",
        format!("cannot resolve group name {name:?}"),
    ))
}

fn spec_from_args(a: &SpecArgs) -> Result<GroupSpec, Failure> {
    let family = match (&a.family, &a.name) {
        (None, Some(name)) => return resolve_name(name),
        (None, None) => {
            return Err(Failure::new(
                EXIT_INPUT,
                "spec_invalid",
                "give --family or --name",
            ))
        }
        (Some(f), _) => f.as_str(),
    };
    match family {
        "Sporadic" => {
            let name = a.name.as_deref().ok_or_else(|| {
                Failure::new(EXIT_INPUT, "spec_invalid", "--family Sporadic needs --name")
            })?;
            Ok(GroupSpec::sporadic(name)?.with_outer(&a.outer)?)
        }
        "Sym" | "S" => {
            let n = a.n.ok_or_else(|| {
                Failure::new(EXIT_INPUT, "spec_invalid", "--family Sym needs --n")
            })?;
            Ok(GroupSpec::sym(n))
        }
        _ => {
            let rec = SpecRecord {
                family: family.to_string(),
                n: a.n,
                q_p: a.p,
                q_f: a.p.map(|_| a.f.unwrap_or(1)),
                decoration: a.outer.clone(),
            };
            Ok(GroupSpec::from_record(&rec)?)
        }
    }
}

fn verdict_table(v: &Verdict) -> String {
    let outcome = match v.outcome {
        Outcome::Unique => "unique",
        Outcome::NotUnique => "not unique",
        Outcome::OutOfScope => "out of scope",
    };
    let mut s = format!(
        "group    {}\nr        {}\noutcome  {outcome}\n",
        v.name, v.r
    );
    if let Some(h) = &v.overgroup {
        s.push_str(&format!("row      {}\ntype     {}\n", h.row, h.type_string));
        if let Some(o) = &h.order {
            s.push_str(&format!("order    {o}\n"));
        }
    }
    if let Some(reason) = &v.reason {
        s.push_str(&format!("reason   {reason}\n"));
    }
    s.push_str("trace\n");
    for t in &v.trace {
        s.push_str(&format!(
            "  [{}] {}\n",
            if t.value { "x" } else { " " },
            t.cond
        ));
    }
    s
}

fn cmd_classify(cli: &Cli, args: &SpecArgs) -> Result<(String, u8), Failure> {
    let spec = spec_from_args(args)?;
    let v = classify(&spec, args.r)?;
    let text = match cli.format {
        Format::Json => v.to_json_pretty() + "\n",
        Format::Table => verdict_table(&v),
    };
    Ok((text, EXIT_OK))
}

fn build_instance(name: &str) -> Result<GroupInstance, Failure> {
    let spec = resolve_name(name)?;
    build(&spec).map_err(|e| Failure::new(EXIT_INPUT, "unknown_instance", e.to_string()))
}

fn cmd_oracle(cli: &Cli, name: &str, r: u64) -> Result<(String, u8), Failure> {
    let prof = profile(cli)?;
    let inst = build_instance(name)?;
    let report = brute_m_r(&inst, r, &prof.bounds, &mut rng_from_seed(cli.seed))?;
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Table => {
            let mut s = format!(
                "instance  {}\nr         {}\nmode      {:?}\n|R|       {}\n|R0|      {}\n|N(R)|    {}\n|N(R0)|   {}\nmembers   {}\n",
                report.instance,
                report.r,
                report.mode,
                report.sylow_order,
                report.r0_order,
                report.ngr_order,
                report.ngr0_order,
                report.members.len()
            );
            for m in &report.members {
                s.push_str(&format!(
                    "  order {} index {} core-free {}\n",
                    m.order, m.index, m.core_free
                ));
            }
            s.push_str(&format!("unique    {}\n", report.flags.unique));
            for inv in &report.invariants {
                s.push_str(&format!(
                    "  [{}] {}\n",
                    if inv.holds { "ok" } else { "FAIL" },
                    inv.name
                ));
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn load_manifest(path: Option<&PathBuf>) -> Result<Manifest, Failure> {
    match path {
        None => Ok(manifest()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                Failure::new(
                    EXIT_INPUT,
                    "manifest_invalid",
                    format!("{}: {e}", p.display()),
                )
            })?;
            Manifest::parse(&text)
                .map_err(|e| Failure::new(EXIT_INPUT, "manifest_invalid", e.to_string()))
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    only: Option<&str>,
    path: Option<&PathBuf>,
    err: &mut dyn Write,
) -> Result<(String, u8), Failure> {
    let prof = profile(cli)?;
    let m = load_manifest(path)?;
    let filter = match only {
        Some(text) => {
            Filter::parse(text).map_err(|e| Failure::new(EXIT_INPUT, "filter_invalid", e))?
        }
        None => Filter::default(),
    };
    let opts = RunOptions {
        profile: prof.clone(),
        jobs: cli.jobs as usize,
        seed: cli.seed,
        filter,
    };
    let run = run_verification(&m, &opts).map_err(|e| match e {
        OracleError::Precondition(msg) => Failure::new(EXIT_INPUT, "manifest_invalid", msg),
        other => Failure::from(other),
    })?;
    let s = run.summary();
    let _ = writeln!(
        err,
        "verify: {} pairs, {} agree, {} mismatch, {} skipped, {} error ({:.1}s)",
        s.pairs,
        s.agree,
        s.mismatch,
        s.skipped,
        s.error,
        run.total.as_secs_f64()
    );
    for (d, t) in run.slow_pairs(&prof) {
        let _ = writeln!(
            err,
            "slow: {} r={} took {:.1}s",
            d.instance,
            d.r,
            t.as_secs_f64()
        );
    }
    let text = match cli.format {
        Format::Json => run.to_json_lines(),
        Format::Table => summary_table(&run),
    };
    Ok((
        text,
        if run.is_clean() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    ))
}

#[derive(Serialize)]
struct CatalogList<'a> {
    schema: u32,
    frozen_at: &'a str,
    instances: Vec<&'a catalog::ManifestEntry>,
}

fn cmd_catalog_list(cli: &Cli) -> Result<(String, u8), Failure> {
    let m = manifest();
    let entries: Vec<&catalog::ManifestEntry> = m.entries(Tier::Stretch).collect();
    let text = match cli.format {
        Format::Json => json(&CatalogList {
            schema: CLI_SCHEMA,
            frozen_at: &m.frozen_at,
            instances: entries,
        }),
        Format::Table => {
            let w = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            entries
                .iter()
                .map(|e| {
                    format!(
                        "{:<w$}  {:<7}  degree {:>4}  order {}\n",
                        e.name,
                        format!("{:?}", e.tier).to_lowercase(),
                        e.degree,
                        e.order
                    )
                })
                .collect()
        }
    };
    Ok((text, EXIT_OK))
}

#[derive(Serialize)]
struct Description {
    schema: u32,
    name: String,
    spec: SpecRecord,
    degree: usize,
    order: String,
    socle_order: String,
    primes: Vec<u64>,
    generators: Vec<String>,
    socle_generators: Vec<String>,
}

fn cmd_catalog_describe(cli: &Cli, name: &str) -> Result<(String, u8), Failure> {
    let inst = build_instance(name)?;
    let d = Description {
        schema: CLI_SCHEMA,
        name: inst.name.clone(),
        spec: inst.spec.record(),
        degree: inst.degree(),
        order: inst.group.order().to_string(),
        socle_order: inst.socle.order().to_string(),
        primes: oracle::util::prime_divisors(inst.group.order()),
        generators: inst
            .group
            .generators()
            .iter()
            .map(oracle::util::cycle_string)
            .collect(),
        socle_generators: inst
            .socle
            .generators()
            .iter()
            .map(oracle::util::cycle_string)
            .collect(),
    };
    let text = match cli.format {
        Format::Json => json(&d),
        Format::Table => format!(
            "name         {}\nspec         {} n={:?} p={:?} f={:?} outer={}\ndegree       {}\norder        {}\nsocle order  {}\nprimes       {:?}\ngenerators   {}\n",
            d.name,
            d.spec.family,
            d.spec.n,
            d.spec.q_p,
            d.spec.q_f,
            d.spec.decoration,
            d.degree,
            d.order,
            d.socle_order,
            d.primes,
            d.generators.len()
        ),
    };
    Ok((text, EXIT_OK))
}
