//! Command-line surface. Every subcommand is a thin wrapper over the
//! library; outputs are deterministic so they can be golden-tested.
//!
//! Exit codes: 0 = success, 1 = domain failure (e.g. inverting a
//! zero-set element), 2 = malformed input or usage error.

use crate::algebra::CheckReport;
use crate::charfn::{self, NonsingularityStatus};
use crate::error::Error;
use crate::families;
use crate::io;
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::search4;
use crate::transform;
use crate::HyperNumber;
use clap::{Parser, Subcommand};
use serde_json::json;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "pha",
    about = "Exact arithmetic for perfect hypercomplex algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the three structure checks on an algebra
    Verify {
        /// Catalog name or path to an algebra JSON file
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the characteristic function
    Charpoly {
        algebra: String,
        /// Also print the linear-form factorization when one exists
        #[arg(long)]
        factor: bool,
        #[arg(long)]
        json: bool,
    },
    /// Test whether a point lies in the zero set
    ZeroTest {
        algebra: String,
        /// Comma-separated rational coordinates, e.g. 1,1 or 1/2,-3
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Invert an element
    Invert {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two elements
    Product {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite an algebra in a new basis
    Transform {
        algebra: String,
        /// Path to a basis-change JSON file {"matrix": [["1","s"],["0","t"]]}
        #[arg(long)]
        matrix: String,
    },
    /// Check whether a basis change carries one algebra onto another
    IsoCheck {
        a: String,
        b: String,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify the 2-dimensional algebra with i² = alpha + beta·i
    #[command(name = "canon2")]
    Canon2 {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a 3-dimensional algebra from its six free constants b,c,e,f,q,r
    Triternion {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Build the trivial algebra with n nilpotent hyperimaginary units
    Trivial {
        #[arg(long)]
        n: usize,
    },
    /// List the built-in algebras or show one as a document
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Enumerate all 216 four-dimensional candidates and print the 8 that pass
    #[command(name = "search4")]
    Search4 {
        #[arg(long)]
        json: bool,
    },
    /// Operations on matrices over a perfect hypercomplex algebra
    Phm {
        #[command(subcommand)]
        action: PhmAction,
    },
    /// Probe joint nonsingularity of the product-matrix blocks
    Probe {
        algebra: String,
        /// Random sample count for dimensions 3 and up
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One name per line
    List,
    /// Print the algebra document for one name
    Show { name: String },
}

#[derive(Subcommand)]
enum PhmAction {
    /// Determinant of a matrix file
    Det {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Inverse of a matrix file
    Inv { file: String },
    /// Product of two matrix files
    Mul { a: String, b: String },
    /// Commutator ab - ba of two matrix files
    Bracket { a: String, b: String },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `args` includes the program name, as in
/// `["pha", "verify", "complex"]`.
pub fn run(args: &[&str]) -> Outcome {
    let cli = match Cli::try_parse_from(args.iter().copied()) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                // --help and --version go to stdout with success.
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_input_error() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}"),
        },
    }
}

fn execute(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Verify { algebra, json } => cmd_verify(&algebra, json),
        Command::Charpoly { algebra, factor, json } => cmd_charpoly(&algebra, factor, json),
        Command::ZeroTest { algebra, point, json } => cmd_zero_test(&algebra, &point, json),
        Command::Invert { algebra, point, json } => cmd_invert(&algebra, &point, json),
        Command::Product { algebra, x, y, json } => cmd_product(&algebra, &x, &y, json),
        Command::Transform { algebra, matrix } => cmd_transform(&algebra, &matrix),
        Command::IsoCheck { a, b, matrix, json } => cmd_iso_check(&a, &b, &matrix, json),
        Command::Canon2 { alpha, beta, json } => cmd_canon2(&alpha, &beta, json),
        Command::Triternion { params } => cmd_triternion(&params),
        Command::Trivial { n } => Ok(io::serialize_algebra(&families::trivial_pha(n))),
        Command::Catalog { action } => cmd_catalog(action),
        Command::Search4 { json } => cmd_search4(json),
        Command::Phm { action } => cmd_phm(action),
        Command::Probe { algebra, samples, seed, json } => {
            cmd_probe(&algebra, samples, seed, json)
        }
    }
}

fn check_line(label: &str, report: &CheckReport) -> String {
    if report.passed {
        format!("{label}: PASS")
    } else {
        match &report.witness {
            Some(w) => format!("{label}: FAIL (witness: {w})"),
            None => format!("{label}: FAIL"),
        }
    }
}

fn check_json(report: &CheckReport) -> serde_json::Value {
    json!({
        "passed": report.passed,
        "witness": report.witness.as_ref().map(|w| w.to_string()),
    })
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("value serializes")
}

fn point_string(coords: &[Scalar]) -> String {
    let parts: Vec<String> = coords.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

fn point_json(coords: &[Scalar]) -> serde_json::Value {
    json!(coords.iter().map(format_scalar).collect::<Vec<_>>())
}

fn matrix_line(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = (0..m.cols()).map(|c| format_scalar(m.at(r, c))).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn element(arg: &str, text: &str) -> Result<HyperNumber, Error> {
    let a = Arc::new(io::load_algebra(arg)?);
    HyperNumber::new(a, io::parse_point(text)?)
}

fn cmd_verify(arg: &str, json: bool) -> Result<String, Error> {
    let a = io::load_algebra(arg)?;
    let hc = a.check_hypercomplex_form();
    let comm = a.check_commutative()?;
    let assoc = a.check_associative()?;
    let pha = hc.passed && comm.passed && assoc.passed;
    if json {
        return Ok(pretty(json!({
            "hypercomplex_form": check_json(&hc),
            "commutative": check_json(&comm),
            "associative": check_json(&assoc),
            "pha": pha,
        })));
    }
    Ok([
        check_line("hypercomplex-form", &hc),
        check_line("commutative", &comm),
        check_line("associative", &assoc),
        format!("PHA: {}", if pha { "YES" } else { "NO" }),
    ]
    .join("\n"))
}

fn cmd_charpoly(arg: &str, factor: bool, json: bool) -> Result<String, Error> {
    let a = io::load_algebra(arg)?;
    let xi = charfn::characteristic_function(&a);
    let factored = factor.then(|| {
        let (factors, cofactor) = xi.factor_linear_forms();
        if factors.is_empty() {
            None
        } else {
            Some(crate::poly::format_factorization(&factors, &cofactor))
        }
    });
    if json {
        return Ok(pretty(json!({
            "characteristic_function": xi.to_string(),
            "factorization": factored.flatten(),
        })));
    }
    let mut out = xi.to_string();
    if let Some(f) = factored {
        out.push_str("\nfactors: ");
        out.push_str(f.as_deref().unwrap_or("none over Q by linear forms"));
    }
    Ok(out)
}

fn cmd_zero_test(arg: &str, point: &str, json: bool) -> Result<String, Error> {
    let x = element(arg, point)?;
    let in_zero_set = charfn::zero_test(&x);
    if json {
        return Ok(pretty(json!({ "in_zero_set": in_zero_set })));
    }
    Ok(format!("in zero set: {}", if in_zero_set { "YES" } else { "NO" }))
}

fn cmd_invert(arg: &str, point: &str, json: bool) -> Result<String, Error> {
    let x = element(arg, point)?;
    let y = charfn::invert(&x)?;
    if json {
        return Ok(pretty(json!({ "inverse": point_json(y.coords()) })));
    }
    Ok(y.to_string())
}

fn cmd_product(arg: &str, x: &str, y: &str, json: bool) -> Result<String, Error> {
    let a = Arc::new(io::load_algebra(arg)?);
    let x = HyperNumber::new(a.clone(), io::parse_point(x)?)?;
    let y = HyperNumber::new(a, io::parse_point(y)?)?;
    let p = x.product(&y)?;
    if json {
        return Ok(pretty(json!({ "product": point_json(p.coords()) })));
    }
    Ok(p.to_string())
}

fn cmd_transform(arg: &str, matrix_path: &str) -> Result<String, Error> {
    let a = io::load_algebra(arg)?;
    let t = io::load_basis_change(matrix_path)?;
    Ok(io::serialize_algebra(&transform::apply_transform(&a, &t)?))
}

fn cmd_iso_check(a: &str, b: &str, matrix_path: &str, json: bool) -> Result<String, Error> {
    let a = io::load_algebra(a)?;
    let b = io::load_algebra(b)?;
    let t = io::load_basis_change(matrix_path)?;
    let iso = transform::verify_isomorphism(&a, &b, &t)?;
    if json {
        return Ok(pretty(json!({ "isomorphic": iso })));
    }
    Ok(format!("isomorphic: {}", if iso { "YES" } else { "NO" }))
}

fn cmd_canon2(alpha: &str, beta: &str, json: bool) -> Result<String, Error> {
    let alpha = parse_scalar(alpha).map_err(|e| Error::parse(format!("--alpha: {e}")))?;
    let beta = parse_scalar(beta).map_err(|e| Error::parse(format!("--beta: {e}")))?;
    let (class, witness) = transform::canonicalize_dim2(&alpha, &beta);
    let exact = transform::exact_dim2_witness(&alpha, &beta);
    if json {
        return Ok(pretty(json!({
            "kind": class.kind.to_string(),
            "discriminant": format_scalar(&class.discriminant),
            "witness": { "s": witness.s, "t": witness.t, "residual": witness.residual },
            "exact_witness": exact.map(|t| {
                let m = t.matrix();
                (0..m.rows())
                    .map(|r| (0..m.cols()).map(|c| format_scalar(m.at(r, c))).collect())
                    .collect::<Vec<Vec<String>>>()
            }),
        })));
    }
    let exact_line = match exact {
        Some(t) => format!("exact witness: {}", matrix_line(t.matrix())),
        None => "exact witness: none (|discriminant| is not a rational square)".to_owned(),
    };
    Ok([
        format!("kind: {}", class.kind),
        format!("discriminant: {}", format_scalar(&class.discriminant)),
        format!(
            "float witness: s = {}, t = {} (residual {})",
            witness.s, witness.t, witness.residual
        ),
        exact_line,
    ]
    .join("\n"))
}

fn cmd_triternion(params: &str) -> Result<String, Error> {
    let p = io::parse_point(params)?;
    if p.len() != 6 {
        return Err(Error::parse(format!(
            "--params: expected 6 comma-separated values b,c,e,f,q,r, got {}",
            p.len()
        )));
    }
    let [b, c, e, f, q, r]: [Scalar; 6] = p.try_into().expect("length checked");
    Ok(io::serialize_algebra(&families::make_triternion(b, c, e, f, q, r)))
}

fn cmd_catalog(action: Option<CatalogAction>) -> Result<String, Error> {
    match action {
        None | Some(CatalogAction::List) => Ok(families::CATALOG.join("\n")),
        Some(CatalogAction::Show { name }) => {
            Ok(io::serialize_algebra(&families::builtin(&name)?))
        }
    }
}

fn cmd_search4(json: bool) -> Result<String, Error> {
    let total = search4::enumerate().len();
    let found = search4::search();
    if json {
        let docs: Vec<serde_json::Value> = found
            .iter()
            .map(|a| {
                serde_json::from_str(&io::serialize_algebra(a)).expect("document is valid JSON")
            })
            .collect();
        return Ok(pretty(json!({
            "candidates": total,
            "phas": docs,
        })));
    }
    let mut out = String::new();
    for a in &found {
        out.push_str(&io::serialize_algebra(a));
        out.push('\n');
    }
    out.push_str(&format!("{total} candidates, {} PHAs", found.len()));
    Ok(out)
}

fn cmd_phm(action: PhmAction) -> Result<String, Error> {
    match action {
        PhmAction::Det { file, json } => {
            let m = io::load_phm(&file)?;
            let det = m.det()?;
            if json {
                return Ok(pretty(json!({ "det": point_json(det.coords()) })));
            }
            Ok(det.to_string())
        }
        PhmAction::Inv { file } => {
            let m = io::load_phm(&file)?;
            Ok(io::serialize_phm(&m.inverse()?))
        }
        PhmAction::Mul { a, b } => {
            let a = io::load_phm(&a)?;
            let b = io::load_phm(&b)?;
            Ok(io::serialize_phm(&a.mul(&b)?))
        }
        PhmAction::Bracket { a, b } => {
            let a = io::load_phm(&a)?;
            let b = io::load_phm(&b)?;
            Ok(io::serialize_phm(&a.bracket(&b)?))
        }
    }
}

fn cmd_probe(arg: &str, samples: usize, seed: u64, json: bool) -> Result<String, Error> {
    let a = io::load_algebra(arg)?;
    let verdict = charfn::joint_nonsingularity_probe(&a, samples, seed);
    let status = match verdict.status {
        NonsingularityStatus::ProvedNonsingular => "proved nonsingular",
        NonsingularityStatus::Falsified => "falsified",
        NonsingularityStatus::Inconclusive => "inconclusive",
    };
    if json {
        return Ok(pretty(json!({
            "status": status,
            "counterexample": verdict.counterexample.as_deref().map(point_json),
        })));
    }
    let mut out = format!("status: {status}");
    match (&verdict.status, &verdict.counterexample) {
        (NonsingularityStatus::Falsified, Some(p)) => {
            out.push_str(&format!("\ncounterexample: {}", point_string(p)));
        }
        (NonsingularityStatus::Falsified, None) => {
            out.push_str("\ncounterexample: none (the zero line has an irrational slope)");
        }
        _ => {}
    }
    Ok(out)
}
