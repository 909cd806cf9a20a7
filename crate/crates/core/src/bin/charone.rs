use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use charone::correspondences::{compose, make_correspondence, rational_to_string};
use charone::expr::{self, Value};
use charone::points::{partial_fractions, points_isomorphic, theta_image, SpecPoint};
use charone::polygon::{cancellation_witness, gamma, reduced_equal};
use charone::zeta::{
    explicit_formula_check, soule_f, zeta_log_derivative, CountingConfig, CountingFunction, TestFunction,
    ZeroTable,
};
use charone::{Error, NewtonPolygon, Slope, Staircase, Supernatural};

#[derive(Parser)]
#[command(name = "charone", version, about = "Computations in characteristic one")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "(q^1(x)q^0 + q^0(x)q^1)^2".
    Eval {
        /// Expression, inline JSON, or a path to a JSON file.
        input: String,
        #[arg(long)]
        json: bool,
        /// Also evaluate the result at this slope.
        #[arg(long)]
        at: Option<String>,
        /// Write an SVG picture of a staircase result.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the convex hull of the region of an element.
    Reduce {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Congruence at a slope, or equality of hulls when no slope is given.
    Congruent {
        x: String,
        y: String,
        #[arg(long)]
        slope: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compose two Frobenius correspondences.
    Compose {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Points given by supernatural numbers.
    Points {
        #[command(subcommand)]
        command: PointsCommand,
    },
    /// Explicit-formula numerics.
    Zeta {
        #[command(subcommand)]
        command: ZetaCommand,
    },
}

#[derive(Subcommand)]
enum PointsCommand {
    /// Whether two supernatural numbers give isomorphic points.
    Iso { a: String, b: String },
    /// Whether a rational lies in the subgroup of a supernatural number.
    Member { a: String, x: String },
    /// The point attached to a prime, or "generic".
    Theta { p: String },
    /// Decomposition of a rational in simple elements.
    Decompose { x: String },
}

#[derive(Subcommand)]
enum ZetaCommand {
    /// Compare the two sides of the explicit formula for a log bump.
    Check {
        #[arg(long, default_value_t = 3.0)]
        u0: f64,
        #[arg(long, default_value_t = 0.2)]
        width: f64,
        /// Zero table; the bundled table is used when absent.
        #[arg(long)]
        zeros: Option<PathBuf>,
        #[arg(short = 'K', long = "count", default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1000)]
        pmax: u64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long)]
        json: bool,
        /// Exit with status 3 when the relative discrepancy exceeds --tol.
        #[arg(long)]
        assert: bool,
        #[arg(long, default_value_t = 1e-2)]
        tol: f64,
    },
    /// -zeta_N'/zeta_N(s) for a polynomial counting function.
    Logderiv {
        /// Coefficients c_0,c_1,... of N(u).
        #[arg(long, value_delimiter = ',', default_value = "1,1")]
        coeffs: Vec<f64>,
        #[arg(long)]
        s: f64,
    },
    /// The series F(q, s) for a polynomial counting function.
    Soule {
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        coeffs: Vec<f64>,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        s: f64,
    },
}

enum Failure {
    User(String),
    Tolerance(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::User(e.to_string())
    }
}

fn read_value(input: &str) -> Result<Value, Failure> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        let v = serde_json::from_str(trimmed).map_err(|e| Failure::User(format!("invalid JSON: {e}")))?;
        return Ok(Value::from_json(v)?);
    }
    if input.ends_with(".json") || Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| Failure::User(format!("{input}: {e}")))?;
        let v = serde_json::from_str(&text).map_err(|e| Failure::User(format!("{input}: {e}")))?;
        return Ok(Value::from_json(v)?);
    }
    Ok(expr::parse(input)?.eval()?)
}

fn read_staircase(input: &str) -> Result<Staircase, Failure> {
    match read_value(input)? {
        Value::Square(s) => Ok(s),
        _ => Err(Failure::User(format!("{input}: expected an element of the square"))),
    }
}

fn parse_slope(s: &str) -> Result<Slope, Failure> {
    Ok(s.parse::<Slope>()?)
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    s.trim().parse().map_err(|_| Failure::User(format!("not a rational number: {s:?}")))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values print"));
}

fn hull_of(v: &Value) -> Result<NewtonPolygon, Failure> {
    match v {
        Value::Square(s) => Ok(gamma(s)),
        Value::Polygon(p) => Ok(p.clone()),
        Value::Zmin(_) => Err(Failure::User("expected an element of the square".into())),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { input, json, at, svg } => {
            let v = read_value(&input)?;
            let evaluation = match &at {
                Some(s) => {
                    let lambda = parse_slope(s)?;
                    let ev = match &v {
                        Value::Square(x) => x.evaluate(&lambda)?,
                        Value::Polygon(x) => x.evaluate(&lambda)?,
                        Value::Zmin(_) => return Err(Failure::User("--at needs an element of the square".into())),
                    };
                    Some(ev)
                }
                None => None,
            };
            if let Some(path) = svg {
                let (stair, poly) = match &v {
                    Value::Square(s) => (s.clone(), gamma(s)),
                    Value::Polygon(p) => (Staircase::canonicalize(p.extremes().to_vec()), p.clone()),
                    Value::Zmin(_) => return Err(Failure::User("--svg needs an element of the square".into())),
                };
                std::fs::write(&path, charone::svg::render(&stair, Some(&poly)))
                    .map_err(|e| Failure::User(format!("{}: {e}", path.display())))?;
            }
            if json {
                let mut out = json!({ "value": v.to_json() });
                if let Some(ev) = &evaluation {
                    out["argmin"] = json!([ev.argmin.0, ev.argmin.1]);
                    out["min"] = json!(ev.rational.as_ref().map(rational_to_string));
                }
                print_json(&out);
            } else {
                println!("{v}");
                if let Some(ev) = evaluation {
                    let (a, b) = ev.argmin;
                    match ev.rational {
                        Some(r) => println!("min at ({a}, {b}) = {}", rational_to_string(&r)),
                        None => println!("min at ({a}, {b})"),
                    }
                }
            }
        }
        Command::Reduce { input, json } => {
            let hull = hull_of(&read_value(&input)?)?;
            if json {
                print_json(&serde_json::to_value(&hull).expect("polygons serialize"));
            } else {
                println!("{hull}");
            }
        }
        Command::Congruent { x, y, slope, json } => {
            let (x, y) = (read_staircase(&x)?, read_staircase(&y)?);
            match slope {
                Some(s) => {
                    let lambda = parse_slope(&s)?;
                    let c = x.congruent(&y, &lambda)?;
                    if json {
                        print_json(&json!({ "congruent": c, "slope": lambda.to_string() }));
                    } else {
                        println!("{c}");
                    }
                }
                None => {
                    let equal = reduced_equal(&x, &y);
                    let witness = cancellation_witness(&x, &y).ok();
                    if json {
                        print_json(&json!({
                            "congruent": equal,
                            "witness": witness.as_ref().map(|w| serde_json::to_value(w).expect("staircases serialize")),
                        }));
                    } else {
                        println!("{equal}");
                        if let Some(w) = witness {
                            println!("witness {w}");
                        }
                    }
                }
            }
        }
        Command::Compose { lhs, rhs } => {
            let l = make_correspondence(parse_slope(&lhs)?);
            let r = make_correspondence(parse_slope(&rhs)?);
            let c = compose(&l, &r)?;
            let mut out = json!({
                "result": c.result.kind(),
                "slope": c.result.slope().to_string(),
                "eps_slope": rational_to_string(&c.result.eps_slope()),
            });
            if let Some((s, t)) = &c.relation {
                out["relation"] = json!({ "s": rational_to_string(s), "t": rational_to_string(t) });
            }
            print_json(&out);
        }
        Command::Points { command } => match command {
            PointsCommand::Iso { a, b } => {
                let (a, b): (Supernatural, Supernatural) = (a.parse()?, b.parse()?);
                println!("{}", points_isomorphic(&a, &b));
            }
            PointsCommand::Member { a, x } => {
                let a: Supernatural = a.parse()?;
                println!("{}", a.contains(&parse_rational(&x)?));
            }
            PointsCommand::Theta { p } => {
                let point = if p.trim() == "generic" {
                    SpecPoint::Generic
                } else {
                    SpecPoint::Prime(p.trim().parse().map_err(|_| Failure::User(format!("not a prime: {p:?}")))?)
                };
                println!("{}", theta_image(point)?);
            }
            PointsCommand::Decompose { x } => {
                let pf = partial_fractions(&parse_rational(&x)?);
                let mut text = pf.integer.to_string();
                for (p, alpha, n) in &pf.parts {
                    if *alpha == 1 {
                        text.push_str(&format!(" + {n}/{p}"));
                    } else {
                        text.push_str(&format!(" + {n}/{p}^{alpha}"));
                    }
                }
                println!("{text}");
            }
        },
        Command::Zeta { command } => match command {
            ZetaCommand::Check { u0, width, zeros, count, pmax, step, json, assert, tol } => {
                let g = TestFunction::log_bump(u0, width)?;
                let table = match zeros {
                    Some(path) => ZeroTable::load(path)?,
                    None => ZeroTable::shipped(),
                };
                let cfg = CountingConfig { zero_count: count, step, prime_bound: pmax, ..Default::default() };
                let report = explicit_formula_check(&g, &table, &cfg)?;
                if json {
                    print_json(&serde_json::to_value(&report).expect("reports serialize"));
                } else {
                    println!("zero side   {:.12}", report.zero_side);
                    println!("prime side  {:.12}", report.prime_side);
                    println!("arch side   {:.12}", report.arch_side);
                    println!("discrepancy {:.3e} (relative {:.3e})", report.discrepancy, report.relative_discrepancy);
                    println!("quadrature error {:.3e}, truncation estimate {:.3e}", report.quadrature_error, report.zero_truncation_estimate);
                }
                if assert && (report.relative_discrepancy.is_nan() || report.relative_discrepancy > tol) {
                    return Err(Failure::Tolerance(format!(
                        "relative discrepancy {:.3e} exceeds {tol:e}",
                        report.relative_discrepancy
                    )));
                }
            }
            ZetaCommand::Logderiv { coeffs, s } => {
                let v = zeta_log_derivative(&CountingFunction::polynomial(&coeffs), s)?;
                println!("{} (error bound {:.1e})", v.value, v.tail_bound);
            }
            ZetaCommand::Soule { coeffs, q, s } => {
                let v = soule_f(q, s, &CountingFunction::polynomial(&coeffs))?;
                println!("{} ({} terms)", v.value, v.terms);
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Tolerance(msg)) => {
            eprintln!("tolerance: {msg}");
            ExitCode::from(3)
        }
    }
}
