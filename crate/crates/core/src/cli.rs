//! Command-line front end. Every verb calls into the library and prints a
//! JSON document (or CSV for series and cusp tables) on the data stream.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when an internal
//! consistency check fails.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::divpoly::{division_polynomials, reduction_profile, rescaled, YPoly, ZPoly};
use crate::error::{Error, Result};
use crate::exactalg::LaurentSeries;
use crate::invariants::{
    cusp_data_character, cusp_data_cycles, dims_gp, dims_unipotent, elliptic_counts,
    genus_report, noncongruence_report, CuspData,
};
use crate::modgroup::{index_of, phi, subgroup_member, SubgroupSpec, Word};
use crate::qexp::{denominator_report_for, xtilde, ytilde};
use crate::symplectic::{
    action_perms, epsilons, kernel_test, lift_witness_mod_p2, surjectivity_verdict, SpParams,
};

#[derive(Parser, Debug)]
#[command(name = "phicong", version, about = "Exact computations with φ-congruence subgroups")]
struct Cli {
    /// Worker threads for the parallel parts (default: PHICONG_THREADS or
    /// all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-expansion of x̃ (or ỹ) at level N.
    Qexp {
        #[arg(long)]
        level: u64,
        /// Number of coefficients in q⁶.
        #[arg(long, default_value_t = 6)]
        terms: usize,
        /// Append the per-prime denominator report.
        #[arg(long)]
        denominators: bool,
        /// Emit ỹ instead of x̃.
        #[arg(long)]
        ytilde: bool,
    },
    /// Division polynomials of y² = x³ − 1728.
    Divpoly {
        #[arg(long)]
        level: u64,
        /// Also give ψ̂² and φ̂ for y² = x³ − 1.
        #[arg(long)]
        rescaled: bool,
        /// Reduction profile of ψ_N² at the prime p.
        #[arg(long)]
        profile: Option<u64>,
    },
    /// Subgroup membership of a word in S and T.
    Member {
        #[arg(long, value_enum)]
        spec: SpecKind,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The action of ρ on the Lagrangian Grassmannian X(F_p).
    Grassmannian {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        mode: GrassMode,
    },
    /// Genus of the point stabilizers.
    Genus {
        #[arg(long)]
        p: u64,
    },
    /// Cusp widths of the point stabilizers.
    Cusps {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Oracle::Character)]
        oracle: Oracle,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
    },
    /// Dimensions of spaces of modular forms.
    Dims {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: u64,
        /// [Γ′ : G] for the unipotent family.
        #[arg(long)]
        index: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        /// Per-character dimensions for the trivial character.
        #[arg(long)]
        trivial_character: bool,
    },
    /// Whether a word lies in the kernel of ρ mod p.
    Kernel {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Index comparison ruling out congruence point stabilizers.
    Noncongruence {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_hyphen_values = true)]
    x: i64,
    /// Defaults to the inverse of x.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<i64>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GrassMode {
    #[arg(long)]
    epsilons: bool,
    #[arg(long)]
    cycles: bool,
    #[arg(long)]
    surjectivity: bool,
    #[arg(long)]
    lift_check: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpecKind {
    GammaPrime,
    GammaDoublePrime,
    GammaPrimeN,
    Gp,
    Phicong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Character,
    Cycles,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Unipotent,
    Gp,
}

enum Output {
    Json(Value),
    Csv(Vec<String>, Vec<Vec<String>>),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn series_terms(s: &LaurentSeries) -> Vec<Value> {
    s.terms()
        .into_iter()
        .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
        .collect()
}

fn series_rows(s: &LaurentSeries) -> Vec<Vec<String>> {
    s.terms()
        .into_iter()
        .map(|(e, c)| vec![e.to_string(), c.numer().to_string(), c.denom().to_string()])
        .collect()
}

fn coeff_strings(p: &ZPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn ypoly_json(p: &YPoly) -> Value {
    json!({ "y_factor": p.y_parity == 1, "coeffs": coeff_strings(&p.poly) })
}

fn require(v: Option<u64>, flag: &str) -> Result<u64> {
    v.ok_or_else(|| Error::domain(format!("--{flag} is required here")))
}

fn cusp_output(p: u64, data: &CuspData, format: Format) -> Output {
    match format {
        Format::Csv => Output::Csv(
            vec!["width".into(), "multiplicity".into()],
            data.widths
                .iter()
                .map(|(w, m)| vec![w.to_string(), m.to_string()])
                .collect(),
        ),
        Format::Json => Output::Json(json!({ "p": p, "cusps": to_value(data) })),
    }
}

fn dispatch(cmd: Command, format: Format) -> Result<Output> {
    if format == Format::Csv && !matches!(cmd, Command::Qexp { .. } | Command::Cusps { .. }) {
        return Err(Error::domain("CSV output is available for qexp and cusps only"));
    }
    let out = match cmd {
        Command::Qexp {
            level,
            terms,
            denominators,
            ytilde: want_y,
        } => {
            let xt = xtilde(level, terms)?;
            let (name, series) = if want_y {
                ("ytilde", ytilde(level, terms)?)
            } else {
                ("xtilde", xt.series.clone())
            };
            if format == Format::Csv {
                return Ok(Output::Csv(
                    vec!["exp".into(), "numerator".into(), "denominator".into()],
                    series_rows(&series),
                ));
            }
            let mut doc = json!({
                "N": level,
                "series": name,
                "prec": series.prec(),
                "terms": series_terms(&series),
            });
            if denominators {
                doc["denominators"] = to_value(&denominator_report_for(&xt));
            }
            Output::Json(doc)
        }
        Command::Divpoly {
            level,
            rescaled: want_rescaled,
            profile,
        } => {
            let t = division_polynomials(level)?;
            let mut doc = json!({
                "N": level,
                "psi": ypoly_json(&t.psi),
                "psi_sq": coeff_strings(&t.psi_sq),
                "phi": coeff_strings(&t.phi_pol),
                "omega": ypoly_json(&t.omega),
            });
            if want_rescaled {
                let (psi_hat, phi_hat) = rescaled(level)?;
                doc["psi_hat_sq"] = json!(coeff_strings(&psi_hat));
                doc["phi_hat"] = json!(coeff_strings(&phi_hat));
            }
            if let Some(p) = profile {
                doc["profile"] = to_value(&reduction_profile(level, p)?);
            }
            Output::Json(doc)
        }
        Command::Member { spec, n, p, word } => {
            let spec = match spec {
                SpecKind::GammaPrime => SubgroupSpec::GammaPrime,
                SpecKind::GammaDoublePrime => SubgroupSpec::GammaDoublePrime,
                SpecKind::GammaPrimeN => SubgroupSpec::GammaPrimeN(require(n, "n")?),
                SpecKind::Gp => SubgroupSpec::Gp(require(p.or(n), "p")?),
                SpecKind::Phicong => SubgroupSpec::PhiCong(require(n, "n")?),
            };
            let w: Word = word.parse()?;
            let member = subgroup_member(&w, &spec)?;
            let img = phi(&w)?;
            let index = index_of(&spec).ok();
            Output::Json(json!({
                "spec": format!("{spec:?}"),
                "word": w.to_string(),
                "member": member,
                "phi": { "u_exp": img.u_exp, "v": [img.v.0.to_string(), img.v.1.to_string()] },
                "index": index,
            }))
        }
        Command::Grassmannian { params, mode } => {
            let sp = SpParams::new(params.p, params.x, params.y)?;
            if mode.epsilons {
                let (e2, e3) = epsilons(&sp)?;
                let (f2, f3) = elliptic_counts(sp.p)?;
                Output::Json(json!({
                    "p": sp.p, "x": sp.x, "epsilon2": e2, "epsilon3": e3,
                    "closedForm": { "epsilon2": f2, "epsilon3": f3 },
                }))
            } else if mode.cycles {
                let perms = action_perms(&sp)?;
                Output::Json(json!({
                    "p": sp.p, "x": sp.x, "cusps": to_value(&cusp_data_cycles(&perms.t)),
                }))
            } else if mode.surjectivity {
                Output::Json(to_value(&surjectivity_verdict(&sp)?))
            } else {
                Output::Json(json!({
                    "p": sp.p, "x": sp.x, "liftWitness": lift_witness_mod_p2(&sp)?,
                }))
            }
        }
        Command::Genus { p } => Output::Json(to_value(&genus_report(p)?)),
        Command::Cusps { p, oracle, x } => {
            let data = match oracle {
                Oracle::Character => cusp_data_character(p)?,
                Oracle::Cycles => {
                    let x = x.ok_or_else(|| Error::domain("--x is required for the cycles oracle"))?;
                    cusp_data_cycles(&action_perms(&SpParams::new(p, x, None)?)?.t)
                }
            };
            cusp_output(p, &data, format)
        }
        Command::Dims {
            family,
            k,
            index,
            p,
            trivial_character,
        } => match family {
            Family::Unipotent => Output::Json(to_value(&dims_unipotent(
                k,
                require(index, "index")?,
                trivial_character,
            )?)),
            Family::Gp => Output::Json(to_value(&dims_gp(k, require(p, "p")?)?)),
        },
        Command::Kernel { params, word } => {
            let sp = SpParams::new(params.p, params.x, params.y)?;
            let w: Word = word.parse()?;
            Output::Json(json!({
                "p": sp.p, "x": sp.x, "word": w.to_string(), "inKernel": kernel_test(&w, &sp)?,
            }))
        }
        Command::Noncongruence { p } => Output::Json(to_value(&noncongruence_report(p)?)),
    };
    Ok(out)
}

fn emit(out: Output, w: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Output::Json(v) => {
            let s = serde_json::to_string_pretty(&v).expect("JSON value");
            writeln!(w, "{s}")
        }
        Output::Csv(header, rows) => {
            let mut wtr = csv::Writer::from_writer(w);
            wtr.write_record(&header)?;
            for r in rows {
                wtr.write_record(&r)?;
            }
            wtr.flush()
        }
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("PHICONG_THREADS") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::domain(format!("PHICONG_THREADS={s} is not a thread count"))),
        Err(_) => Ok(None),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::Hensel(_) => 3,
        _ => 2,
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    if let Command::Grassmannian { params, mode } = &cli.command {
        if mode.surjectivity {
            let _ = writeln!(err, "computing the permutation group order for p = {}", params.p);
        }
    }
    let result = thread_count(cli.threads).and_then(|threads| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            if n == 0 {
                return Err(Error::domain("--threads must be positive"));
            }
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
        pool.install(|| dispatch(cli.command, cli.format))
    });
    match result {
        Ok(doc) => match emit(doc, out) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: writing output: {e}");
                3
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
