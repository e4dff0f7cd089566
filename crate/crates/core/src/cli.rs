//! Command line front end.
//!
//! Every subcommand reads a curve file of the form
//! `{"p": 11, "digits": 6, "f": ["1/16", "-1/4", ...]}` (coefficients low to
//! high degree) and prints p-adic numbers in the canonical rendering, one per
//! line, or a JSON document with `--json`. Failures print a single line
//! `error: CODE: message` on stderr and exit with status 1.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::coleman::{ColemanIntegrator, IntegralResult, SecondKindForm};
use crate::curve::{CurvePoint, HyperellipticCurve};
use crate::frobenius::zeta_numerator;
use crate::padic::{parse_rational, PadicNumber};
use crate::Error;

/// Extra working digits tried before giving up on a requested precision.
const RETRY_STEPS: [i64; 3] = [2, 4, 8];

#[derive(Parser, Debug)]
#[command(name = "coleman", version, about = "Coleman integrals on y^2 = f(x) over Q_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// JSON curve file
    #[arg(long)]
    curve: PathBuf,
    /// Requested absolute precision (overrides the file)
    #[arg(long)]
    digits: Option<i64>,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Endpoints {
    /// Start point, "(x,y)" or "inf"
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    /// End point, "(x,y)" or "inf"
    #[arg(long, allow_hyphen_values = true)]
    to: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the curve and print its genus
    Validate(CurveArgs),
    /// Print the Frobenius matrix on the basis x^i dx/2y
    Frobenius(CurveArgs),
    /// Integrals of the basis forms between two points of one residue disc
    Tiny {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Integral of sum c_i x^i dx/2y between arbitrary points
    Integrate {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        ends: Endpoints,
        /// Comma separated c_0,...,c_{2g-1}
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Integrals of all basis forms between two non-Weierstrass points
    IntegrateBasis {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Teichmuller point in the disc of a point
    Teichmuller {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Reversed characteristic polynomial of Frobenius
    ZetaNumerator(CurveArgs),
}

#[derive(Deserialize)]
struct CurveFile {
    p: u64,
    digits: Option<i64>,
    f: Vec<String>,
}

#[derive(Serialize, Debug, Default)]
struct ResultDocument {
    values: Vec<String>,
    audited_prec: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<usize>,
}

/// A failure with its machine-readable code.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::PrecisionExhausted(_) => format!("{e}; try a larger --digits"),
            _ => e.to_string(),
        };
        Failure { code: e.code(), message }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: "MALFORMED_INPUT", message: message.into() }
}

/// Runs the command line with `argv` (including the program name), writing
/// results to stdout and diagnostics to stderr. Returns the exit status.
pub fn run(argv: impl IntoIterator<Item = String>) -> i32 {
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with(argv: impl IntoIterator<Item = String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            let _ = writeln!(err, "error: USAGE: {first}");
            return 2;
        }
    };
    let start = Instant::now();
    let json = cli.command.curve_args().json;
    match dispatch(&cli.command) {
        Ok((doc, text)) => {
            if json {
                let _ = writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"));
            } else {
                let _ = write!(out, "{text}");
            }
            let _ = writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}: {}", f.code, f.message.replace('\n', " "));
            1
        }
    }
}

impl Command {
    fn curve_args(&self) -> &CurveArgs {
        match self {
            Command::Validate(c) | Command::Frobenius(c) | Command::ZetaNumerator(c) => c,
            Command::Tiny { curve, .. }
            | Command::Integrate { curve, .. }
            | Command::IntegrateBasis { curve, .. }
            | Command::Teichmuller { curve, .. } => curve,
        }
    }
}

fn load_curve(args: &CurveArgs) -> Result<HyperellipticCurve, Failure> {
    let raw = std::fs::read_to_string(&args.curve).map_err(|e| malformed(format!("{}: {e}", args.curve.display())))?;
    let file: CurveFile = serde_json::from_str(&raw).map_err(|e| malformed(format!("{}: {e}", args.curve.display())))?;
    let f = file.f.iter().map(|c| parse_rational(c)).collect::<crate::Result<Vec<_>>>()?;
    let digits = args.digits.or(file.digits).unwrap_or(6);
    if digits < 1 {
        return Err(malformed(format!("digits must be positive, got {digits}")));
    }
    Ok(HyperellipticCurve::new(&f, file.p, digits)?)
}

/// Parses "inf" or "(x,y)" with rational or rendered p-adic coordinates.
fn parse_point(curve: &HyperellipticCurve, s: &str) -> Result<CurvePoint, Failure> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") || s == "∞" {
        return Ok(CurvePoint::Infinity);
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| malformed(format!("expected \"(x,y)\" or \"inf\", got {s:?}")))?;
    let (x, y) = inner.split_once(',').ok_or_else(|| malformed(format!("missing comma in {s:?}")))?;
    let number = |t: &str| match parse_rational(t) {
        Ok(q) => curve.number(&q),
        Err(_) => PadicNumber::parse(t, curve.prime(), curve.working_prec()),
    };
    Ok(curve.point(number(x)?, number(y)?)?)
}

fn render_point(p: &CurvePoint, digits: i64) -> Vec<String> {
    match p {
        CurvePoint::Infinity => vec!["inf".into()],
        CurvePoint::Affine { x, y } => vec![x.with_abs_prec(digits).render(), y.with_abs_prec(digits).render()],
    }
}

/// Runs `job` on the curve, raising the working precision until the audited
/// precision reaches the requested digits.
fn with_retries(
    curve: &HyperellipticCurve,
    job: impl Fn(&HyperellipticCurve) -> crate::Result<IntegralResult>,
) -> Result<IntegralResult, Failure> {
    let digits = curve.target_digits();
    let mut best = job(curve)?;
    for extra in RETRY_STEPS {
        if best.audited_prec >= digits {
            return Ok(best);
        }
        best = job(&curve.with_working_precision(curve.working_prec() + extra)?)?;
    }
    if best.audited_prec >= digits {
        Ok(best)
    } else {
        Err(Error::PrecisionExhausted(format!("only {} digits certified, {digits} requested", best.audited_prec)).into())
    }
}

fn integral_document(r: &IntegralResult, digits: i64) -> (ResultDocument, String) {
    let values = r.rendered(digits);
    let text: String = values.iter().map(|v| format!("{v}\n")).collect();
    (ResultDocument { values, audited_prec: r.audited_prec.min(digits), ..Default::default() }, text)
}

fn dispatch(cmd: &Command) -> Result<(ResultDocument, String), Failure> {
    let curve = load_curve(cmd.curve_args())?;
    let digits = curve.target_digits();
    match cmd {
        Command::Validate(_) => {
            let g = curve.genus();
            let doc = ResultDocument { genus: Some(g), audited_prec: digits, ..Default::default() };
            Ok((doc, format!("genus {g}\n")))
        }
        Command::Frobenius(_) => {
            let integ = ColemanIntegrator::new(curve)?;
            let frob = integ.frobenius();
            let prec = frob.certified_prec;
            let matrix: Vec<Vec<String>> =
                frob.matrix.iter().map(|row| row.iter().map(|c| c.with_abs_prec(prec).render()).collect()).collect();
            let mut text: String = matrix.iter().map(|row| format!("[{}]\n", row.join(", "))).collect();
            text.push_str(&format!("certified O({}^{prec})\n", integ.curve().prime()));
            Ok((ResultDocument { audited_prec: prec, matrix: Some(matrix), ..Default::default() }, text))
        }
        Command::Tiny { ends, .. } => {
            let (from, to) = (parse_point(&curve, &ends.from)?, parse_point(&curve, &ends.to)?);
            let r = with_retries(&curve, |c| crate::coleman::tiny_integrals_basis(c, &from, &to))?;
            Ok(integral_document(&r, digits))
        }
        Command::IntegrateBasis { ends, .. } => {
            let (from, to) = (parse_point(&curve, &ends.from)?, parse_point(&curve, &ends.to)?);
            let r = with_retries(&curve, |c| ColemanIntegrator::new(c.clone())?.integrals_basis(&from, &to))?;
            Ok(integral_document(&r, digits))
        }
        Command::Integrate { ends, coeffs, .. } => {
            let (from, to) = (parse_point(&curve, &ends.from)?, parse_point(&curve, &ends.to)?);
            let cs = coeffs
                .split(',')
                .map(|c| match parse_rational(c) {
                    Ok(q) => curve.number(&q),
                    Err(_) => PadicNumber::parse(c, curve.prime(), curve.working_prec()),
                })
                .collect::<crate::Result<Vec<_>>>()?;
            if cs.len() != curve.basis_size() {
                return Err(malformed(format!("expected {} coefficients, got {}", curve.basis_size(), cs.len())));
            }
            let form = SecondKindForm::from_coeffs(cs);
            let r = with_retries(&curve, |c| ColemanIntegrator::new(c.clone())?.integrate(&form, &from, &to))?;
            Ok(integral_document(&r, digits))
        }
        Command::Teichmuller { point, .. } => {
            let t = curve.teichmuller_point(&parse_point(&curve, point)?)?;
            let values = render_point(&t, digits);
            let text = format!("({})\n", values.join(", "));
            Ok((ResultDocument { values, audited_prec: digits, ..Default::default() }, text))
        }
        Command::ZetaNumerator(_) => {
            let integ = ColemanIntegrator::new(curve)?;
            let prec = integ.frobenius().certified_prec;
            let l = zeta_numerator(&integ.frobenius().matrix);
            let coeffs: Vec<PadicNumber> = l.coeffs().iter().map(|c| c.with_abs_prec(prec)).collect();
            let values: Vec<String> = coeffs.iter().map(PadicNumber::render).collect();
            let text = coeffs
                .iter()
                .zip(&values)
                .enumerate()
                .map(|(i, (c, v))| match c.nearest_integer() {
                    Some(n) => format!("T^{i}: {v}    ~ {n}\n"),
                    None => format!("T^{i}: {v}\n"),
                })
                .collect();
            Ok((ResultDocument { values, audited_prec: prec, ..Default::default() }, text))
        }
    }
}
