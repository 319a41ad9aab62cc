//! Command-line front end. All computation lives in the library; this binary
//! parses arguments, renders text or JSON, and maps errors to exit codes:
//! 0 success, 1 domain error, 2 usage error (from clap).

use clap::{ArgAction, Args, Parser, Subcommand};
use cubic_tcf::error::Error;
use cubic_tcf::expansion::{
    choose_z, cube_root_expansion, expand_root, ExpandOptions, ExpansionResult, RootSelector,
};
use cubic_tcf::jacobi::{convergent_errors, run_classic, run_modified};
use cubic_tcf::poly::{parse_cubic, CubicPoly};
use cubic_tcf::rat::{parse_decimal, to_decimal, Rat};
use cubic_tcf::roots::{classify_moduli, dominance_certificate};
use cubic_tcf::tcf::{convergents, evaluate, integer_matrix_form, matrix_form};
use cubic_tcf::FieldElem;
use num_bigint::BigInt;
use serde_json::json;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "cubic-tcf",
    about = "Periodic ternary continued fractions and simultaneous rational \
             approximations for cubic irrationals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug)]
enum RootArg {
    Largest,
    Smallest,
    ValueIndex(usize),
}

impl FromStr for RootArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "largest" => Ok(RootArg::Largest),
            "smallest" => Ok(RootArg::Smallest),
            other => match other.strip_prefix("value-index:") {
                Some(i) => i
                    .parse()
                    .map(RootArg::ValueIndex)
                    .map_err(|_| format!("bad index in {other:?}")),
                None => Err(format!(
                    "expected largest, smallest or value-index:<i>, got {other:?}"
                )),
            },
        }
    }
}

#[derive(Args, Clone)]
struct PolyOpts {
    /// Cubic polynomial, e.g. "x^3-5x^2+x-3" or "3x^3-12x^2-4x+1"
    #[arg(long)]
    poly: String,
    /// Root selector: largest | smallest | value-index:<i>
    #[arg(long, default_value = "largest")]
    root: RootArg,
    /// Use exactly this z (refused with exit 1 unless it certifies)
    #[arg(long, allow_hyphen_values = true)]
    z: Option<i64>,
    /// Search window for z when --z is absent
    #[arg(long, default_value_t = 25)]
    z_window: u32,
    /// Attempt budget for the shift pipelines
    #[arg(long, default_value_t = 24)]
    shift_attempts: u32,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Emit JSON instead of text
    #[arg(long, action = ArgAction::SetTrue)]
    json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits for decimal columns
    #[arg(long, default_value_t = 10)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Periodic expansion of a selected root
    Expand {
        #[command(flatten)]
        poly: PolyOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact convergent pairs (A_n/C_n, B_n/C_n) of the expansion
    Convergents {
        #[command(flatten)]
        poly: PolyOpts,
        /// Largest index to print
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Evaluate an expansion to a tolerance
    #[command(group(clap::ArgGroup::new("source").required(true).args(["poly", "tcf"])))]
    Approx {
        /// Cubic polynomial to expand and evaluate
        #[arg(long)]
        poly: Option<String>,
        /// Root selector when --poly is used
        #[arg(long, default_value = "largest")]
        root: RootArg,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<i64>,
        #[arg(long, default_value_t = 25)]
        z_window: u32,
        /// JSON file holding an expansion (as written by --json --out)
        #[arg(long)]
        tcf: Option<PathBuf>,
        /// Stop when successive convergents differ by less than this
        #[arg(long)]
        tol: String,
        /// Convergent index cap
        #[arg(long, default_value_t = 200)]
        n_cap: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Step matrices and their cumulative product
    Matrices {
        #[command(flatten)]
        poly: PolyOpts,
        /// Largest step index
        #[arg(long)]
        n: usize,
        /// Integer-entry matrices and sequences instead of rational ones
        #[arg(long, action = ArgAction::SetTrue)]
        integer: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Explicit periodic expansion of (d^(2/3), d^(1/3))
    Cuberoot {
        /// Integer that is not a perfect cube
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        z: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the classic or modified algorithm and report the transcript
    Jacobi {
        #[command(flatten)]
        poly: PolyOpts,
        /// Classic floor-based run
        #[arg(long, action = ArgAction::SetTrue, conflicts_with = "modified")]
        classic: bool,
        /// Modified functional-based run
        #[arg(long, action = ArgAction::SetTrue)]
        modified: bool,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
        /// Include certified per-step convergent error bounds
        #[arg(long, action = ArgAction::SetTrue)]
        errors: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the built-in golden suite over the worked examples
    VerifyExamples,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn emit(output: &OutputOpts, text: String) -> Result<(), Error> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(e.to_string())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn selector(root: &RootArg) -> RootSelector {
    match root {
        RootArg::Largest => RootSelector::LargestModulus,
        RootArg::Smallest => RootSelector::SmallestModulus,
        RootArg::ValueIndex(i) => RootSelector::ValueIndex(*i),
    }
}

fn options(poly: &PolyOpts) -> ExpandOptions {
    ExpandOptions {
        z_hint: poly.z.map(BigInt::from),
        z_window: poly.z_window,
        shift_attempts: poly.shift_attempts,
    }
}

/// Expands per the common polynomial options, reporting the failed
/// certificate on an uncertified --z.
fn expand(poly: &PolyOpts) -> Result<(CubicPoly, ExpansionResult), Error> {
    let f = parse_cubic(&poly.poly)?;
    match expand_root(&f, selector(&poly.root), &options(poly)) {
        Ok(res) => Ok((f, res)),
        Err(Error::ZNotCertified { z }) => {
            if let Ok(mo) = classify_moduli(&f) {
                for iv in mo.real_roots() {
                    if let Ok(cert) = dominance_certificate(&f, iv, &z) {
                        eprintln!(
                            "failed certificate: z = {z}, root in ({}, {}), tr = {}, i1 = {}, det = {}, verdict = {}",
                            iv.lo(),
                            iv.hi(),
                            cert.invariants.tr,
                            cert.invariants.i1,
                            cert.invariants.det,
                            cert.verdict
                        );
                    }
                }
            }
            Err(Error::ZNotCertified { z })
        }
        Err(e) => Err(e),
    }
}

fn expansion_text(f: &CubicPoly, res: &ExpansionResult, digits: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!("polynomial: {f}\n"));
    out.push_str(&format!("pipeline:   {}\n", res.pipeline.as_str()));
    out.push_str(&format!("z:          {}\n", res.z));
    if let Some(k) = &res.shift {
        out.push_str(&format!("shift k:    {k}\n"));
    }
    out.push_str(&format!(
        "root:       ({}, {})\n",
        res.target.lo(),
        res.target.hi()
    ));
    out.push_str(&format!(
        "couple:     ({}, {})\n",
        res.couple_desc.0, res.couple_desc.1
    ));
    out.push_str(&format!("expansion:  {}\n", res.tcf));
    let eval = evaluate(&res.tcf, &Rat::new(1.into(), BigInt::from(10).pow(12)), 60);
    out.push_str(&format!(
        "approx:     ({}, {})",
        to_decimal(&eval.first, digits),
        to_decimal(&eval.second, digits)
    ));
    out
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Expand { poly, output } => {
            let (f, res) = expand(&poly)?;
            if output.json {
                emit(
                    &output,
                    serde_json::to_string_pretty(&res.to_json()).unwrap(),
                )
            } else {
                emit(&output, expansion_text(&f, &res, output.digits))
            }
        }
        Command::Convergents { poly, n, output } => {
            let (_, res) = expand(&poly)?;
            let list = convergents(&res.tcf, n);
            if output.json {
                let rows: Vec<serde_json::Value> = list
                    .iter()
                    .map(|c| {
                        json!({
                            "n": c.n,
                            "a": c.a.to_string(),
                            "b": c.b.to_string(),
                            "c": c.c.to_string(),
                            "first": c.first_ratio().map(|r| r.to_string()),
                            "second": c.second_ratio().map(|r| r.to_string()),
                        })
                    })
                    .collect();
                emit(
                    &output,
                    serde_json::to_string_pretty(&json!({ "convergents": rows })).unwrap(),
                )
            } else {
                let mut lines = Vec::new();
                for c in &list {
                    match (c.first_ratio(), c.second_ratio()) {
                        (Some(first), Some(second)) => lines.push(format!(
                            "n = {:<3} {} = {}   {} = {}",
                            c.n,
                            first,
                            to_decimal(&first, output.digits),
                            second,
                            to_decimal(&second, output.digits),
                        )),
                        _ => lines.push(format!("n = {:<3} (skipped: zero denominator)", c.n)),
                    }
                }
                emit(&output, lines.join("\n"))
            }
        }
        Command::Approx {
            poly,
            root,
            z,
            z_window,
            tcf,
            tol,
            n_cap,
            output,
        } => {
            let tol = parse_decimal(&tol)?;
            let t = match (&poly, &tcf) {
                (Some(text), _) => {
                    let opts = PolyOpts {
                        poly: text.clone(),
                        root,
                        z,
                        z_window,
                        shift_attempts: 24,
                    };
                    expand(&opts)?.1.tcf
                }
                (None, Some(path)) => {
                    let data =
                        std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
                    let value: serde_json::Value = serde_json::from_str(&data)
                        .map_err(|e| Error::Parse(format!("bad TCF JSON: {e}")))?;
                    let body = value.get("tcf").cloned().unwrap_or(value);
                    serde_json::from_value(body)
                        .map_err(|e| Error::Parse(format!("bad TCF JSON: {e}")))?
                }
                (None, None) => unreachable!("clap enforces the source group"),
            };
            let eval = evaluate(&t, &tol, n_cap);
            if output.json {
                emit(
                    &output,
                    serde_json::to_string_pretty(&json!({
                        "first": eval.first.to_string(),
                        "second": eval.second.to_string(),
                        "first_decimal": to_decimal(&eval.first, output.digits),
                        "second_decimal": to_decimal(&eval.second, output.digits),
                        "achieved": to_decimal(&eval.achieved, 3),
                        "n_used": eval.n_used,
                        "met_tol": eval.met_tol,
                    }))
                    .unwrap(),
                )
            } else {
                let status = if eval.met_tol {
                    ""
                } else {
                    " (tolerance not met at cap)"
                };
                emit(
                    &output,
                    format!(
                        "first:  {} ~ {}\nsecond: {} ~ {}\nachieved delta {} at n = {}{}",
                        eval.first,
                        to_decimal(&eval.first, output.digits),
                        eval.second,
                        to_decimal(&eval.second, output.digits),
                        to_decimal(&eval.achieved, 3),
                        eval.n_used,
                        status
                    ),
                )
            }
        }
        Command::Matrices {
            poly,
            n,
            integer,
            output,
        } => {
            let (_, res) = expand(&poly)?;
            if integer {
                let form = integer_matrix_form(&res.tcf, n);
                if output.json {
                    let steps: Vec<_> = form.steps.iter().map(|m| mat_strings(m.rows())).collect();
                    emit(
                        &output,
                        serde_json::to_string_pretty(&json!({
                            "steps": steps,
                            "product": mat_strings(form.product.rows()),
                            "s": form.seqs.s.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            "s_prime": form.seqs.s_prime.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            "s_dprime": form.seqs.s_dprime.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        }))
                        .unwrap(),
                    )
                } else {
                    let mut out = String::new();
                    for (i, m) in form.steps.iter().enumerate() {
                        out.push_str(&format!("step {i}:\n{}\n", fmt_mat(m.rows())));
                    }
                    out.push_str(&format!(
                        "cumulative product:\n{}",
                        fmt_mat(form.product.rows())
                    ));
                    if let (Some(first), Some(second)) =
                        (form.seqs.first_ratio(n), form.seqs.second_ratio(n))
                    {
                        out.push_str(&format!("\nratios: {first}, {second}"));
                    }
                    emit(&output, out)
                }
            } else {
                let product = matrix_form(&res.tcf, n);
                if output.json {
                    emit(
                        &output,
                        serde_json::to_string_pretty(&json!({
                            "product": mat_strings(product.rows()),
                        }))
                        .unwrap(),
                    )
                } else {
                    emit(
                        &output,
                        format!("cumulative product:\n{}", fmt_mat(product.rows())),
                    )
                }
            }
        }
        Command::Cuberoot { d, z, output } => {
            let t = cube_root_expansion(&BigInt::from(d), &BigInt::from(z))?;
            if output.json {
                emit(
                    &output,
                    serde_json::to_string_pretty(&json!({ "tcf": t })).unwrap(),
                )
            } else {
                let eval = evaluate(&t, &Rat::new(1.into(), BigInt::from(10).pow(13)), 60);
                emit(
                    &output,
                    format!(
                        "expansion: {t}\ncube root of {d} ~ {}\n({d})^(2/3)  ~ {}",
                        to_decimal(&eval.second, output.digits),
                        to_decimal(&eval.first, output.digits)
                    ),
                )
            }
        }
        Command::Jacobi {
            poly,
            classic,
            modified,
            max_steps,
            errors,
            output,
        } => {
            let f = parse_cubic(&poly.poly)?;
            let mo = classify_moduli(&f)?;
            let (transcript, iv) = if classic && !modified {
                let idx = match selector(&poly.root) {
                    RootSelector::LargestModulus => mo.largest_real(),
                    RootSelector::SmallestModulus => mo.smallest_real(),
                    RootSelector::ValueIndex(i) => (i < mo.real_roots().len()).then_some(i),
                }
                .ok_or_else(|| Error::UnresolvableSelector("no such real root".into()))?;
                let iv = mo.real_roots()[idx].clone();
                let t = run_classic(
                    &f,
                    &FieldElem::r_over_alpha(&f),
                    &FieldElem::alpha(&f),
                    &iv,
                    max_steps,
                )?;
                (t, iv)
            } else {
                let z = match poly.z {
                    Some(z) => BigInt::from(z),
                    None => {
                        let iv = mo
                            .largest_real()
                            .map(|i| mo.real_roots()[i].clone())
                            .ok_or_else(|| {
                                Error::UnresolvableSelector("no real root to certify".into())
                            })?;
                        choose_z(&f, &iv, poly.z_window)?
                    }
                };
                // the couple tracks whichever root this z certifies
                let iv = mo
                    .real_roots()
                    .iter()
                    .find(|iv| {
                        dominance_certificate(&f, iv, &z)
                            .map(|c| c.verdict)
                            .unwrap_or(false)
                    })
                    .cloned()
                    .ok_or(Error::ZNotCertified { z: z.clone() })?;
                (run_modified(&f, &z, max_steps)?, iv)
            };
            let bounds = if errors {
                let couple = (FieldElem::r_over_alpha(&f), FieldElem::alpha(&f));
                Some(convergent_errors(
                    &transcript.quotients,
                    (&couple.0, &couple.1),
                    &iv,
                ))
            } else {
                None
            };
            if output.json {
                let value = match &bounds {
                    Some(b) => transcript.to_json_with_errors(b, output.digits),
                    None => transcript.to_json(),
                };
                emit(&output, serde_json::to_string_pretty(&value).unwrap())
            } else {
                let mut out = String::new();
                for (i, (a, b)) in transcript.quotients.iter().enumerate() {
                    if bounds.is_some() {
                        out.push_str(&format!("n = {i:<3} a = {a:<12} b = {b:<12}"));
                    } else {
                        out.push_str(&format!("n = {i:<3} a = {a:<12} b = {b}"));
                    }
                    if let Some(bounds) = &bounds {
                        match &bounds[i] {
                            Some((e1, e2)) => out.push_str(&format!(
                                "   errors <= ({}, {})",
                                to_decimal(e1, 3),
                                to_decimal(e2, 3)
                            )),
                            None => out.push_str("   errors: skipped (zero denominator)"),
                        }
                    }
                    out.push('\n');
                }
                match transcript.cycle {
                    Some((pre, period)) => out.push_str(&format!(
                        "cycle: pre-period {pre}, period {period} (exact state equality)"
                    )),
                    None => out.push_str("no cycle detected within the step budget"),
                }
                if transcript.finite {
                    out.push_str("\nfinite expansion: hit an exactly integer state");
                }
                emit(&output, out)
            }
        }
        Command::VerifyExamples => {
            let checks = cubic_tcf::verify::run_all()?;
            let mut failed = 0usize;
            for check in &checks {
                let status = if check.pass { "ok  " } else { "FAIL" };
                println!("{status} - {}", check.name);
                if let Some(note) = &check.note {
                    println!("       note: {note}");
                }
                if !check.pass {
                    failed += 1;
                }
            }
            println!("{} checks, {} failed", checks.len(), failed);
            if failed > 0 {
                std::process::exit(1);
            }
            Ok(())
        }
    }
}

fn mat_strings<T: std::fmt::Display>(rows: &[[T; 3]; 3]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect()
}

fn fmt_mat<T: std::fmt::Display>(rows: &[[T; 3]; 3]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let width = cells
        .iter()
        .flat_map(|r| r.iter().map(|c| c.len()))
        .max()
        .unwrap_or(1);
    cells
        .iter()
        .map(|r| format!("[ {:>w$}  {:>w$}  {:>w$} ]", r[0], r[1], r[2], w = width))
        .collect::<Vec<_>>()
        .join("\n")
}
