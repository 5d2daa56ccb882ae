//! Command-line front end: construct representations, print bases and
//! action matrices, apply and verify the explicit maps, compute defect
//! sets, straighten tabloids, and run the packaged theorem suites.
//!
//! Exit codes: 0 pass, 1 fail (a check ran and failed), 2 usage/parse
//! error, 3 hypothesis not met.  `PLETHYSM_THREADS` caps parallelism.

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethysm::certify::{
    check_equivariance, check_isomorphism, run_theorem, Certificate, Strategy, TheoremParams,
    Verdict,
};
use plethysm::field::{parse_field, Field, FieldElement};
use plethysm::isomaps::{
    hermite, nabla_complement_iso, psi_tabloid, sym_lower_to_upper, tabloid_at, tabloid_index,
    wedge_complement_composite, zeta, zeta_extended, HermiteOrder, LinearMap,
};
use plethysm::parse::{parse_group, parse_rep, parse_vector};
use plethysm::repmod::{act, action_matrix, garnir_straighten, Rep, Vector};
use plethysm::shapes::{parse_partition, parse_tableau};
use plethysm::weights::{defect_set, weight_report, DefectOutcome, Highest, WeightMode};
use plethysm::Error;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "plethysm", version, about = "Plethystic isomorphisms and defect invariants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a representation: dimension, basis, action matrices.
    Rep {
        /// Rep spec, e.g. "sym_3(sym^3(E))" or "nabla[3,1,1](sym^6(E))".
        #[arg(long)]
        spec: String,
        /// Field spec: "GF(p)", "GF(p^k)", or "Q".
        #[arg(long, default_value = "Q")]
        field: String,
        #[command(subcommand)]
        action: RepAction,
    },
    /// Build one of the explicit maps and apply, verify, or dump it.
    Map {
        #[command(subcommand)]
        map: MapCommand,
    },
    /// Weight report and defect set of a representation.
    Defect {
        #[arg(long)]
        rep: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// "generic" (symbolic γ) or "concrete" (enumerates the field).
        #[arg(long, value_enum, default_value_t = Mode::Generic)]
        mode: Mode,
    },
    /// Straighten a column tabloid into the semistandard basis.
    Straighten {
        /// A ∇- or Δ-module spec, e.g. "nabla[2,1](sym^2(E))".
        #[arg(long)]
        rep: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Column-standard tableau, rows separated by "/": "1 2 / 2".
        #[arg(long)]
        t: String,
    },
    /// Run a packaged theorem verification; prints the certificate.
    Theorem {
        /// One of: wronskian, complement, hermite, sym-duals,
        /// converse-hermite, hook-obstructions, garnir-preservation,
        /// f-equivariance.
        name: String,
        #[command(flatten)]
        params: TheoremArgs,
    },
}

#[derive(Subcommand)]
enum RepAction {
    /// Print the dimension.
    Dim,
    /// Print the canonical basis labels.
    Basis,
    /// Print the action matrix of a group element (row-major).
    Matrix {
        /// Group element: "a,b;c,d", "M(γ)", or "J".
        #[arg(long)]
        g: String,
    },
    /// Apply a group element to a basis vector.
    Act {
        #[arg(long)]
        g: String,
        /// Basis-vector expression, e.g. "X^2Y" or "F_sym(3,1,1)".
        #[arg(long)]
        v: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Generic,
    Concrete,
}

#[derive(Args, Clone)]
struct MapArgs {
    #[arg(long, default_value = "Q")]
    field: String,
    #[command(subcommand)]
    action: MapAction,
}

#[derive(Subcommand, Clone)]
enum MapCommand {
    /// Wronskian-style map Sym_m Sym^ℓ E → ⋀^m Sym^{ℓ+m−1} E.
    Zeta {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Its non-equivariant pure-tensor extension on (Sym^ℓE)^⊗m.
    ZetaExtended {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Composite isomorphism Sym_m Sym^ℓ E → Sym^ℓ Sym^m E.
    Hermite {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Canonical map Sym_ℓ E → Sym^ℓ E.
    Symdual {
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Exterior-power composite ⋀^ℓ Sym^{ℓ+m−1} E → ⋀^m Sym_{ℓ+m−1} E.
    WedgeComplement {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Induced complement isomorphism ∇^λ V → ∇^{λ°} V^∨ (V = Sym^{d−1}E).
    Complement {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        args: MapArgs,
    },
    /// Signed tabloid bijection Ψ : ⋀^{λ′}V → ⋀^{λ°′}(V^∨) (V = Sym^{d−1}E).
    Psi {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        args: MapArgs,
    },
}

#[derive(Subcommand, Clone)]
enum MapAction {
    /// Apply the map to a basis-vector expression (or tableau via --t).
    Apply {
        #[arg(long)]
        v: Option<String>,
        /// Column-standard tableau selecting a column tabloid (psi) or a
        /// basis polytabloid (complement).
        #[arg(long)]
        t: Option<String>,
    },
    /// Check equivariance and bijectivity; prints a certificate.
    Verify {
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only check equivariance, not bijectivity.
        #[arg(long)]
        equivariance_only: bool,
    },
    /// Print every column as "domain label -> image".
    Dump,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    AllGamma,
    Sample,
    Symbolic,
}

#[derive(Args, Clone, Default)]
struct TheoremArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long)]
    eps: Option<u32>,
    #[arg(long)]
    lmax: Option<usize>,
    /// Partition, e.g. "2,1".
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    if let Ok(n) = std::env::var("PLETHYSM_THREADS") {
        if let Ok(n) = n.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::HypothesisNotMet(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn vector_json(v: &Vector<FieldElement>) -> Value {
    let rep = v.rep();
    json!({
        "rep": rep.spec_string(),
        "display": v.to_string(),
        "terms": v
            .terms()
            .map(|(i, c)| json!({
                "index": i,
                "label": rep.label_string(i),
                "coeff": c.to_string(),
            }))
            .collect::<Vec<_>>(),
    })
}

fn print_vector(format: Format, v: &Vector<FieldElement>) {
    match format {
        Format::Text => println!("{v}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&vector_json(v)).unwrap()),
    }
}

fn certificate_exit(cert: &Certificate) -> ExitCode {
    match cert.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    }
}

fn print_certificate(format: Format, cert: &Certificate) {
    match format {
        Format::Text => {
            println!("claim:   {:?}", cert.claim);
            println!("field:   {}", cert.field);
            println!("verdict: {:?}", cert.verdict);
            println!("params:  {}", serde_json::to_string(&cert.params).unwrap());
            println!("evidence:\n{}", serde_json::to_string_pretty(&cert.evidence).unwrap());
        }
        Format::Json => println!("{}", cert.to_json()),
    }
}

/// V of dimension d for the complement maps: E for d = 2, Sym^{d−1}E above.
fn complement_inner(field: &Field, d: usize) -> Rep {
    let e = Rep::natural(field);
    if d == 2 {
        e
    } else {
        Rep::sym_upper(d - 1, e)
    }
}

fn default_strategy(field: &Field, seed: u64) -> Strategy {
    match field.order() {
        Some(q) if q <= 16 => Strategy::AllGamma,
        Some(_) => Strategy::SymbolicGamma,
        None => Strategy::Sample { n: 8, seed },
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Rep { spec, field, action } => {
            let field = parse_field(field)?;
            let rep = parse_rep(&field, spec)?;
            match action {
                RepAction::Dim => match format {
                    Format::Text => println!("{}", rep.dimension()),
                    Format::Json => println!(
                        "{}",
                        json!({ "rep": rep.spec_string(), "dim": rep.dimension() })
                    ),
                },
                RepAction::Basis => match format {
                    Format::Text => {
                        for i in 0..rep.dimension() {
                            println!("{i}: {}", rep.label_string(i));
                        }
                    }
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "rep": rep.spec_string(),
                            "basis": (0..rep.dimension())
                                .map(|i| rep.label_string(i))
                                .collect::<Vec<_>>(),
                        }))
                        .unwrap()
                    ),
                },
                RepAction::Matrix { g } => {
                    let g = parse_group(&field, g)?;
                    let columns = action_matrix(&g, &rep)?;
                    let n = rep.dimension();
                    let rows: Vec<Vec<String>> = (0..n)
                        .map(|r| (0..n).map(|c| columns[c].get(r).to_string()).collect())
                        .collect();
                    match format {
                        Format::Text => {
                            for row in rows {
                                println!("{}", row.join(" "));
                            }
                        }
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "rep": rep.spec_string(),
                                "rows": n,
                                "cols": n,
                                "matrix": rows,
                            }))
                            .unwrap()
                        ),
                    }
                }
                RepAction::Act { g, v } => {
                    let g = parse_group(&field, g)?;
                    let v = parse_vector(&rep, v)?;
                    print_vector(format, &act(&g, &v)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { map } => run_map(format, map),
        Command::Defect { rep, field, mode } => {
            let field = parse_field(field)?;
            let rep = parse_rep(&field, rep)?;
            let mode = match mode {
                Mode::Generic => WeightMode::Generic,
                Mode::Concrete => WeightMode::Concrete(field.order().ok_or_else(|| {
                    Error::HypothesisNotMet("concrete mode needs a finite field".into())
                })?),
            };
            let report = weight_report(&rep, mode);
            let (hw, unique) = match report.highest() {
                Highest::Unique { weight, .. } => (*weight, true),
                Highest::NotUnique { weight } => (*weight, false),
            };
            let defects: Value = match defect_set(&rep, mode)? {
                DefectOutcome::Defined(ds) => json!(ds.elements.iter().collect::<Vec<_>>()),
                DefectOutcome::Undefined => Value::Null,
            };
            let out = json!({
                "rep": rep.spec_string(),
                "field": field.spec_string(),
                "highest_weight": hw,
                "unique": unique,
                "defects": defects,
            });
            match format {
                Format::Text => {
                    println!("highest weight: {hw} (unique: {unique})");
                    println!("defects: {defects}");
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Straighten { rep, field, t } => {
            let field = parse_field(field)?;
            let rep = parse_rep(&field, rep)?;
            let t = parse_tableau(t)?;
            let v = garnir_straighten(&rep, [(t, field.one())])?;
            print_vector(format, &v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Theorem { name, params } => {
            let lambda = match &params.lambda {
                Some(s) => Some(parse_partition(s)?.parts().to_vec()),
                None => None,
            };
            let tp = TheoremParams {
                p: params.p,
                q: params.q,
                ell: params.ell,
                m: params.m,
                alpha: params.alpha,
                beta: params.beta,
                eps: params.eps,
                lmax: params.lmax,
                lambda,
                d: params.d,
                s: params.s,
                seed: params.seed,
            };
            let cert = run_theorem(name, &tp)?;
            print_certificate(format, &cert);
            Ok(certificate_exit(&cert))
        }
    }
}

fn run_map(format: Format, map: &MapCommand) -> Result<ExitCode, Error> {
    // Build the requested map; psi additionally remembers (λ, d, s) so that
    // `apply --t` can address column tabloids by tableau.
    let (linear, args, psi_ctx): (LinearMap<FieldElement>, &MapArgs, Option<(usize, usize)>) =
        match map {
            MapCommand::Zeta { l, m, args } => {
                let field = parse_field(&args.field)?;
                (zeta(&field, *l, *m)?, args, None)
            }
            MapCommand::ZetaExtended { l, m, args } => {
                let field = parse_field(&args.field)?;
                (zeta_extended(&field, *l, *m)?, args, None)
            }
            MapCommand::Hermite { l, m, args } => {
                let field = parse_field(&args.field)?;
                (hermite(&field, *l, *m, HermiteOrder::Worked)?, args, None)
            }
            MapCommand::Symdual { l, args } => {
                let field = parse_field(&args.field)?;
                (sym_lower_to_upper(*l, &Rep::natural(&field))?, args, None)
            }
            MapCommand::WedgeComplement { l, m, args } => {
                let field = parse_field(&args.field)?;
                (wedge_complement_composite(&field, *l, l + m - 1)?, args, None)
            }
            MapCommand::Complement { lambda, d, s, args } => {
                let field = parse_field(&args.field)?;
                let lambda = parse_partition(lambda)?;
                let v = complement_inner(&field, *d);
                (nabla_complement_iso(&lambda, *d, *s, &v)?, args, None)
            }
            MapCommand::Psi { lambda, d, s, args } => {
                let field = parse_field(&args.field)?;
                let lambda = parse_partition(lambda)?;
                let v = complement_inner(&field, *d);
                (psi_tabloid(&lambda, *d, *s, &v)?, args, Some((*d, *s)))
            }
        };
    match &args.action {
        MapAction::Apply { v, t } => {
            let input: Vector<FieldElement> = match (v, t, psi_ctx, map) {
                (Some(v), None, None, _) => parse_vector(linear.domain(), v)?,
                (None, Some(t), Some(_), MapCommand::Psi { lambda, .. }) => {
                    let lambda = parse_partition(lambda)?;
                    let t = parse_tableau(t)?;
                    let _ = lambda;
                    Vector::basis_vector(
                        linear.domain(),
                        tabloid_index(linear.domain(), &t),
                    )
                }
                (None, Some(t), None, _) => parse_vector(linear.domain(), t)?,
                _ => {
                    return Err(Error::ParseError {
                        pos: 0,
                        msg: "apply needs exactly one of --v or --t".into(),
                    })
                }
            };
            let image = linear.apply(&input)?;
            if let (Some((d, s)), MapCommand::Psi { lambda, .. }) = (psi_ctx, map) {
                // Tabloid-style output: coefficient * |complement tableau|.
                let comp = parse_partition(lambda)?.complement(d, s)?;
                let terms: Vec<String> = image
                    .terms()
                    .map(|(i, c)| {
                        format!("{c} * |{}|", tabloid_at(linear.codomain(), &comp, i))
                    })
                    .collect();
                let line = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
                match format {
                    Format::Text => println!("{line}"),
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "display": line,
                            "terms": image
                                .terms()
                                .map(|(i, c)| json!({
                                    "index": i,
                                    "tableau": tabloid_at(linear.codomain(), &comp, i)
                                        .to_string(),
                                    "coeff": c.to_string(),
                                }))
                                .collect::<Vec<_>>(),
                        }))
                        .unwrap()
                    ),
                }
            } else {
                print_vector(format, &image);
            }
            Ok(ExitCode::SUCCESS)
        }
        MapAction::Verify { strategy, seed, equivariance_only } => {
            let field = linear.domain().field().clone();
            let strategy = match strategy {
                Some(StrategyArg::AllGamma) => Strategy::AllGamma,
                Some(StrategyArg::Sample) => Strategy::Sample { n: 8, seed: *seed },
                Some(StrategyArg::Symbolic) => Strategy::SymbolicGamma,
                None => default_strategy(&field, *seed),
            };
            let cert = if *equivariance_only {
                check_equivariance(&linear, strategy)?
            } else {
                check_isomorphism(&linear, strategy)?
            };
            print_certificate(format, &cert);
            Ok(certificate_exit(&cert))
        }
        MapAction::Dump => {
            let dom = linear.domain();
            match format {
                Format::Text => {
                    for i in 0..dom.dimension() {
                        println!("{} -> {}", dom.label_string(i), linear.column(i));
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "domain": dom.spec_string(),
                        "codomain": linear.codomain().spec_string(),
                        "det_twist": linear.det_twist(),
                        "columns": (0..dom.dimension())
                            .map(|i| vector_json(linear.column(i)))
                            .collect::<Vec<_>>(),
                    }))
                    .unwrap()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
