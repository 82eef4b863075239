//! jordanlab: exact calculators for Jordan-type bounds over finite fields
//! and the verification suites behind them.
//!
//! Exit codes: 0 on success (including guard-skipped suites), 1 when any
//! verification suite is refuted, 2 on usage errors.

mod record;
mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use jordanlab_core::algebra::int;
use jordanlab_core::group::{classify_pgl2_subgroup, enumerate_subgroups, pgl2};
use jordanlab_core::verifier::{self, Mutation, VerifyConfig};
use jordanlab_core::{bounds, Error, FieldSpec, Guard};

use record::Record;
use render::{render, Format};

#[derive(Parser)]
#[command(
    name = "jordanlab",
    version,
    about = "Exact Jordan-type bound calculators and desk-scale verifiers over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Enumeration cap; also settable via JORDANLAB_GUARD.
    #[arg(long, global = true)]
    guard: Option<u64>,
    /// Cap on group order for subgroup-lattice enumeration.
    #[arg(long, global = true)]
    subgroup_guard: Option<u64>,
    /// Cap on group order for exhaustive axiom checks.
    #[arg(long, global = true)]
    exhaustive_guard: Option<u64>,
    /// Cap on group order for composition-table materialization.
    #[arg(long, global = true)]
    table_guard: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one named constant exactly.
    Bounds(BoundsArgs),
    /// Run verification suites; exits 1 if anything is refuted.
    Verify(VerifyArgs),
    /// Witness-family report: formulas for every n, exhaustive checks in guard.
    Heisenberg(HeisenbergArgs),
    /// Classify every subgroup of PGL_2(F_q).
    Classify(ClassifyArgs),
    /// Tabulate a constant over input ranges.
    Table(TableArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// One of: char, jcb, jcb0, jcb1, jcb-ge2, jdp, surface, gonality,
    /// hasse-weil, genus1-aut, stichtenoth, f-ratio, curve-aut,
    /// element-order-bound, psl-obstruction, bbir, p-jordan.
    #[arg(long)]
    constant: String,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    g: Option<u64>,
    /// Genus cap for the surface bound's growing branch.
    #[arg(long)]
    g_base: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    gonality: Option<u64>,
    #[arg(long)]
    aut_order: Option<u64>,
    /// Exact rational like 3 or 5/2 (for f-ratio).
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    d: Option<u32>,
    /// Number of rational points (for bbir).
    #[arg(long)]
    points: Option<u64>,
    /// p'-boundedness constant (for p-jordan).
    #[arg(long)]
    c: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every suite.
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    /// One of: aut-order, psl-order, char, classification, hasse-weil,
    /// heisenberg.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    q_list: Vec<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<u64>,
    /// Certify characteristic (not just normal) abelian subgroups where
    /// automorphism groups are enumerable.
    #[arg(long)]
    deep: bool,
    /// Inject a known defect to exercise the refutation path
    /// (drop-cross-term).
    #[arg(long)]
    inject_defect: Option<String>,
}

#[derive(Args)]
struct HeisenbergArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<u64>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    q: u64,
}

#[derive(Args)]
struct TableArgs {
    /// One of: char, jcb0, jcb1, jcb-ge2, jdp, genus1-aut, surface,
    /// element-order-bound.
    #[arg(long)]
    constant: String,
    #[arg(long, value_delimiter = ',')]
    q_list: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    g_list: Vec<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    g_base: Option<u64>,
}

struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| UsageError(format!("missing required flag {flag}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let guard = resolve_guard(&cli)?;
    let (records, exit) = match &cli.command {
        Command::Bounds(args) => (cmd_bounds(args, &guard)?, ExitCode::SUCCESS),
        Command::Verify(args) => cmd_verify(args, &guard)?,
        Command::Heisenberg(args) => (cmd_heisenberg(args, &guard)?, ExitCode::SUCCESS),
        Command::Classify(args) => (cmd_classify(args, &guard)?, ExitCode::SUCCESS),
        Command::Table(args) => (cmd_table(args, &guard)?, ExitCode::SUCCESS),
    };
    print!("{}", render(&records, cli.format));
    Ok(exit)
}

fn resolve_guard(cli: &Cli) -> CliResult<Guard> {
    let mut g = Guard::default();
    if let Ok(v) = std::env::var("JORDANLAB_GUARD") {
        g.max_enumerated = v
            .parse()
            .map_err(|_| UsageError(format!("JORDANLAB_GUARD={v} is not an integer")))?;
    }
    if let Some(v) = cli.guard {
        g.max_enumerated = v;
    }
    if let Some(v) = cli.subgroup_guard {
        g.max_subgroup_order = v;
    }
    if let Some(v) = cli.exhaustive_guard {
        g.max_exhaustive_group = v;
    }
    if let Some(v) = cli.table_guard {
        g.max_table_order = v;
    }
    Ok(g)
}

fn cmd_bounds(args: &BoundsArgs, _guard: &Guard) -> CliResult<Vec<Record>> {
    let name = args.constant.replace('_', "-").to_lowercase();
    let rec = match name.as_str() {
        "char" => Record::from_report(&bounds::char_bound(
            need(args.q, "--q")?,
            need(args.k, "--k")?,
        )?),
        "jcb" => Record::from_report(&bounds::conic_bundle_bound(
            need(args.q, "--q")?,
            need(args.gonality, "--gonality")?,
            need(args.aut_order, "--aut-order")?,
        )?),
        "jcb0" => Record::from_report(&bounds::j_cb0(need(args.q, "--q")?)?),
        "jcb1" => Record::from_report(&bounds::j_cb1(need(args.q, "--q")?)?),
        "jcb-ge2" => Record::from_report(&bounds::j_cb_ge2(
            need(args.q, "--q")?,
            need(args.g, "--g")?,
        )?),
        "jdp" => Record::from_report(&bounds::j_dp(need(args.q, "--q")?)?),
        "surface" => Record::from_report(&bounds::surface_jordan_bound(
            need(args.q, "--q")?,
            args.g_base,
        )?),
        "gonality" => {
            let g = need(args.g, "--g")?;
            Record::new("gonality")
                .input_num("g", g)
                .value(bounds::gonality_bound(g))
                .citation("1 if g=0; 2 if g=1; 2g-2 if g>=2")
        }
        "hasse-weil" => {
            let iv = bounds::hasse_weil_interval(need(args.q, "--q")?, need(args.g, "--g")?)?;
            Record::from_report(&iv.to_report())
        }
        "genus1-aut" => Record::from_report(&bounds::genus1_aut_bound(need(args.q, "--q")?)?),
        "stichtenoth" => {
            let c = bounds::stichtenoth_exceptional(need(args.p, "--p")?, need(args.n, "--n")?)?;
            let mut rec = Record::new("stichtenoth")
                .input_num("p", c.p)
                .input_num("n", c.n)
                .value(&c.aut_order)
                .citation("g = p^n*(p^n-1)/2, |Aut| = p^(3n)*(p^(3n)+1)*(p^(2n)-1)");
            let mut detail = BTreeMap::new();
            detail.insert("genus".to_string(), json!(c.genus.to_string()));
            detail.insert("in_regime".to_string(), json!(c.in_regime));
            if !c.in_regime {
                detail.insert(
                    "flag".to_string(),
                    json!("genus below 2; outside the bound's regime"),
                );
            }
            rec = rec.detail(serde_json::Value::Object(detail.into_iter().collect()));
            rec
        }
        "f-ratio" => {
            let raw = args
                .x
                .as_deref()
                .ok_or_else(|| UsageError("missing required flag --x".into()))?;
            let x = BigRational::from_str(raw)
                .map_err(|e| UsageError(format!("--x {raw}: {e}")))?;
            let v = bounds::f_ratio(&x)?;
            Record::new("f-ratio")
                .input_str("x", raw)
                .value(format!("{}/{}", v.numer(), v.denom()))
                .citation("16*(x+1)^2*(x^2-x+1) / (x*(x-1)^3)")
        }
        "curve-aut" => {
            let b = bounds::curve_aut_bound(need(args.g, "--g")?)?;
            Record::new("curve-aut")
                .input_num("g", b.g)
                .value(&b.strict_75)
                .citation("75*g^4 (strict); 16*g^4 off the exceptional family")
                .detail(json!({ "generic_16": b.generic_16.to_string() }))
        }
        "element-order-bound" => {
            let q = need(args.q, "--q")?;
            let k = need(args.k, "--k")?;
            Record::new("element-order-bound")
                .input_num("q", q)
                .input_num("k", k)
                .value(bounds::element_order_bound(q, k)?)
                .citation("q^k - 1")
        }
        "psl-obstruction" => {
            let d = bounds::psl_embedding_obstruction(
                need(args.p, "--p")?,
                need(args.r, "--r")?,
                need(args.q, "--q")?,
                need(args.k, "--k")?,
            )?;
            Record::new("psl-obstruction")
                .input_num("p", d.p)
                .input_num("r", d.r)
                .input_num("q", d.q)
                .input_num("k", d.k)
                .value(&d.witness_order)
                .citation("witness order (p^r+1)/2 or 2^r+1 must divide q^(2k)-1")
                .status(if d.excluded { "EXCLUDED" } else { "NOT_EXCLUDED" })
                .detail(json!({
                    "order_bound": d.order_bound.to_string(),
                    "beyond_degree_window": d.beyond_degree_window,
                }))
        }
        "bbir" => {
            let n_points = need(args.points, "--points")?;
            let d = need(args.d, "--d")?;
            let q = need(args.q, "--q")?;
            Record::new("bbir")
                .input_num("points", n_points)
                .input_num("d", d as u64)
                .input_num("q", q)
                .value(bounds::bbir_bound(n_points, d, q)?)
                .citation("N * |GL_d(F_q)|")
        }
        "p-jordan" => {
            let c = need(args.c, "--c")?;
            let (j, e) = bounds::p_jordan_constants(c)?;
            Record::new("p-jordan")
                .input_num("c", c)
                .value(&j)
                .citation("(J, e) = (C^C, 1)")
                .detail(json!({ "e": e }))
        }
        other => {
            return Err(UsageError(format!("unknown constant '{other}'")));
        }
    };
    Ok(vec![rec])
}

fn cmd_verify(args: &VerifyArgs, guard: &Guard) -> CliResult<(Vec<Record>, ExitCode)> {
    let mut qs: Vec<u64> = if !args.q_list.is_empty() {
        args.q_list.clone()
    } else if let Some(q) = args.q {
        vec![q]
    } else {
        vec![2, 3, 4, 5]
    };
    qs.sort_unstable();
    qs.dedup();
    let ns: Vec<u64> = if !args.n_list.is_empty() {
        let mut ns = args.n_list.clone();
        ns.sort_unstable();
        ns.dedup();
        ns
    } else if let Some(n) = args.n {
        vec![n]
    } else {
        Vec::new()
    };
    let pairs: Vec<(u64, u64)> = if ns.is_empty() {
        VerifyConfig::default()
            .heisenberg
            .into_iter()
            .filter(|(q, _)| qs.contains(q))
            .collect()
    } else {
        qs.iter()
            .flat_map(|&q| ns.iter().map(move |&n| (q, n)))
            .collect()
    };
    let mutation = match args.inject_defect.as_deref() {
        None => None,
        Some("drop-cross-term") => Some(Mutation::DropHeisenbergCrossTerm),
        Some(other) => {
            return Err(UsageError(format!("unknown defect '{other}'")));
        }
    };

    let verdicts = if args.all || args.suite.is_none() {
        let config = VerifyConfig {
            qs,
            heisenberg: pairs,
            deep: args.deep,
            mutation,
            guard: guard.clone(),
        };
        verifier::run_all(&config)?
    } else {
        let suite = args.suite.as_deref().unwrap().to_lowercase();
        let mut out = Vec::new();
        match suite.as_str() {
            "aut-order" => {
                for &q in &qs {
                    out.push(verifier::verify_aut_order_lemma(q, guard)?);
                }
            }
            "psl-order" => {
                for &q in &qs {
                    out.push(verifier::verify_psl_order_facts(q, guard)?);
                }
            }
            "char" => {
                for &q in &qs {
                    out.push(verifier::verify_char_lemma(q, guard, args.deep)?);
                }
            }
            "classification" => {
                for &q in &qs {
                    out.push(verifier::verify_classification(q, guard)?);
                }
            }
            "hasse-weil" => {
                for &q in &qs {
                    out.push(verifier::verify_hasse_weil_elliptic(q, guard)?);
                }
            }
            "heisenberg" => {
                for &(q, n) in &pairs {
                    let v = match mutation {
                        Some(Mutation::DropHeisenbergCrossTerm) => {
                            verifier::verify_heisenberg_suite_with_law(
                                q,
                                n,
                                guard,
                                verifier::mutant_drop_cross_term,
                            )?
                        }
                        None => verifier::verify_heisenberg_suite(q, n, guard)?,
                    };
                    out.push(v);
                }
            }
            other => {
                return Err(UsageError(format!("unknown suite '{other}'")));
            }
        }
        out
    };
    let exit = if verifier::any_refuted(&verdicts) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    };
    Ok((verdicts.iter().map(Record::from_verdict).collect(), exit))
}

fn cmd_heisenberg(args: &HeisenbergArgs, guard: &Guard) -> CliResult<Vec<Record>> {
    let ns: Vec<u64> = if !args.n_list.is_empty() {
        args.n_list.clone()
    } else if let Some(n) = args.n {
        vec![n]
    } else {
        return Err(UsageError("missing required flag --n or --n-list".into()));
    };
    let report = verifier::heisenberg_witness_report(args.q, &ns, guard)?;
    let mut out = Vec::new();
    for row in &report.rows {
        let mut detail = BTreeMap::new();
        detail.insert(
            "group_order".to_string(),
            json!(row.group_order.to_string()),
        );
        detail.insert(
            "center_order".to_string(),
            json!(row.center_order.to_string()),
        );
        match &row.exhaustive {
            Some(ex) => {
                detail.insert(
                    "max_abelian_order".to_string(),
                    json!(ex.max_abelian_order),
                );
                detail.insert("observed_index".to_string(), json!(ex.observed_index));
                detail.insert("bound_attained".to_string(), json!(ex.bound_attained));
            }
            None => {
                detail.insert("exhaustive".to_string(), json!("skipped (guard)"));
            }
        }
        out.push(
            Record::new("heisenberg-witness")
                .input_num("q", report.q)
                .input_num("n", row.n)
                .input_num("m", row.m)
                .value(&row.index_lower_bound)
                .citation("abelian-subgroup index >= q^(m+1)")
                .detail(serde_json::Value::Object(detail.into_iter().collect())),
        );
    }
    out.push(
        Record::new("heisenberg-witness-sequence")
            .input_num("q", report.q)
            .citation("the bound sequence q^(m+1) grows without limit")
            .detail(json!({ "strictly_increasing": report.strictly_increasing })),
    );
    Ok(out)
}

fn cmd_classify(args: &ClassifyArgs, guard: &Guard) -> CliResult<Vec<Record>> {
    let (p, l) = int::prime_power(args.q).ok_or(Error::NotPrimePower(args.q))?;
    let spec = FieldSpec::with_guard(p, l, guard)?;
    let mg = pgl2(&spec, guard)?;
    let subs = enumerate_subgroups(&mg.group, guard)?;
    let mut out = Vec::new();
    for (i, members) in subs.iter().enumerate() {
        let h = mg.group.subgroup(members);
        let c = classify_pgl2_subgroup(&h, p, guard)?;
        out.push(
            Record::new("subgroup")
                .input_num("q", args.q)
                .input_num("index", i as u64)
                .input_num("order", members.len() as u64)
                .value(c.kind.tag())
                .citation("five-type classification of PGL_2 subgroups"),
        );
    }
    Ok(out)
}

fn cmd_table(args: &TableArgs, _guard: &Guard) -> CliResult<Vec<Record>> {
    let name = args.constant.replace('_', "-").to_lowercase();
    let mut qs = args.q_list.clone();
    qs.sort_unstable();
    qs.dedup();
    let mut gs = args.g_list.clone();
    gs.sort_unstable();
    gs.dedup();
    let mut out = Vec::new();
    match name.as_str() {
        "jcb0" | "jcb1" | "jdp" | "genus1-aut" => {
            for &q in &qs {
                let r = match name.as_str() {
                    "jcb0" => bounds::j_cb0(q)?,
                    "jcb1" => bounds::j_cb1(q)?,
                    "jdp" => bounds::j_dp(q)?,
                    _ => bounds::genus1_aut_bound(q)?,
                };
                out.push(Record::from_report(&r));
            }
        }
        "char" | "element-order-bound" => {
            let k = need(args.k, "--k")?;
            for &q in &qs {
                if name == "char" {
                    out.push(Record::from_report(&bounds::char_bound(q, k)?));
                } else {
                    out.push(
                        Record::new("element-order-bound")
                            .input_num("q", q)
                            .input_num("k", k)
                            .value(bounds::element_order_bound(q, k)?)
                            .citation("q^k - 1"),
                    );
                }
            }
        }
        "surface" => {
            for &q in &qs {
                out.push(Record::from_report(&bounds::surface_jordan_bound(
                    q,
                    args.g_base,
                )?));
            }
        }
        "jcb-ge2" => {
            if gs.is_empty() && !qs.is_empty() {
                return Err(UsageError("jcb-ge2 needs --g-list".into()));
            }
            for &q in &qs {
                for &g in &gs {
                    out.push(Record::from_report(&bounds::j_cb_ge2(q, g)?));
                }
            }
        }
        other => {
            return Err(UsageError(format!("constant '{other}' is not tabulable")));
        }
    }
    Ok(out)
}
