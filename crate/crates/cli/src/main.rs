mod args;
mod suites;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use prolate_core::curves::{
    count_points, hasse_check, hasse_hyp_congruence_check, mobius_orbit_check, pfaff_congruence_check,
    point_count_check, supersingular_scan, sweep, CurveCount, SupersingularReport,
};
use prolate_core::genfun::{eigen_vector, gen_poly, integral_operator_numeric, Quadrature};
use prolate_core::padic::{hypergeometric_ode_check, padic_congruence_check, symmetric_square_ode_check, PadicWitness};
use prolate_core::ring::is_odd_prime;
use prolate_core::{Error, Rational, Verdict};

use args::{Cli, Command, Format, Suite, VerifyArgs};

/// Largest `p^n` the padic command accepts.
const PADIC_LIMIT: u64 = 3000;
const SERIES_ORDER: usize = 50;

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, pass)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::NotOddPrime(_)
                | Error::OddOrder(_)
                | Error::SingularCurve { .. }
                | Error::InvalidArgument(_)
                | Error::LengthMismatch { .. } => 2,
                _ => 1,
            })
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Eigvec { n } => eigvec(*n, cli.format),
        Command::Verify(args) => verify(args, cli.format),
        Command::Curve { p, z, sweep } => curve(*p, *z, *sweep, cli.format),
        Command::Congruence { p } => congruence(*p, cli.format),
        Command::Padic { p, n, samples } => padic(*p, *n, *samples, cli.format),
        Command::Integral { n, samples, tol } => integral(*n, *samples, *tol, cli.format),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn require_even(n: usize) -> Result<(), Failure> {
    if n % 2 == 1 {
        return Err(Failure::Usage(format!("N must be even, got {n}")));
    }
    Ok(())
}

fn require_prime(p: u64) -> Result<(), Failure> {
    if !is_odd_prime(p) {
        return Err(Failure::Usage(format!("p must be an odd prime, got {p}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct EigvecReport {
    n: usize,
    entries: Vec<Rational>,
    /// Coefficients of `f(v; z)` from `z^0` up.
    poly: Vec<Rational>,
}

fn eigvec(n: usize, format: Format) -> CmdResult {
    require_even(n)?;
    let v = eigen_vector(n)?;
    let poly = gen_poly(&v).with_bound(n);
    let report = EigvecReport { n, entries: v.entries().to_vec(), poly: poly.coeffs().to_vec() };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("k,v_k,z_coeff\n");
            for (k, (e, c)) in report.entries.iter().zip(&report.poly).enumerate() {
                writeln!(s, "{k},{e},{c}").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("N = {n}\n");
            for (k, e) in report.entries.iter().enumerate() {
                writeln!(s, "v_{k} = {e}").unwrap();
            }
            writeln!(s, "f(v; z) = {poly}").unwrap();
            s
        }
    };
    Ok((out, true))
}

#[derive(Serialize)]
struct VerifyWitness {
    n: usize,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    suite: &'static str,
    n_min: usize,
    n_max: usize,
    checked: Vec<usize>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VerifyWitness>,
}

fn verify(args: &VerifyArgs, format: Format) -> CmdResult {
    if args.n_min > args.n_max {
        return Err(Failure::Usage(format!("--n-min {} exceeds --n-max {}", args.n_min, args.n_max)));
    }
    let suite: Suite = args.suite;
    let orders: Vec<usize> = (args.n_min..=args.n_max).filter(|n| !suite.even_only() || n % 2 == 0).collect();
    let results = orders
        .par_iter()
        .map(|&n| suites::check(suite, n).map(|w| w.map(|detail| VerifyWitness { n, detail })))
        .collect::<Result<Vec<_>, Error>>()?;
    let witness = results.into_iter().flatten().next();
    let report = VerifyReport {
        suite: suite.name(),
        n_min: args.n_min,
        n_max: args.n_max,
        checked: orders,
        pass: witness.is_none(),
        witness,
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let (wn, wd) =
                report.witness.as_ref().map_or((String::new(), String::new()), |w| (w.n.to_string(), w.detail.clone()));
            format!(
                "suite,n_min,n_max,checked,pass,witness_n,witness\n{},{},{},{},{},{},\"{}\"\n",
                report.suite,
                report.n_min,
                report.n_max,
                report.checked.len(),
                report.pass,
                wn,
                wd.replace('"', "\"\"")
            )
        }
        Format::Text => match &report.witness {
            None => format!(
                "{}: pass for N in {}..={} ({} orders)\n",
                report.suite,
                report.n_min,
                report.n_max,
                report.checked.len()
            ),
            Some(w) => format!("{}: FAIL at N = {}: {}\n", report.suite, w.n, w.detail),
        },
    };
    Ok((out, report.pass))
}

fn render_counts(counts: &[CurveCount], format: Format) -> String {
    let mut s = String::new();
    if format == Format::Csv {
        s.push_str("p,z,points,trace\n");
    }
    for c in counts {
        match format {
            Format::Json => s.push_str(&json(c)),
            Format::Csv => writeln!(s, "{},{},{},{}", c.p, c.z, c.points, c.trace).unwrap(),
            Format::Text => writeln!(s, "p={} z={} points={} trace={}", c.p, c.z, c.points, c.trace).unwrap(),
        }
    }
    s
}

fn curve(p: u64, z: Option<u64>, all: bool, format: Format) -> CmdResult {
    require_prime(p)?;
    let counts = match (z, all) {
        (_, true) => sweep(p)?,
        (Some(z), false) => {
            if z % p < 2 {
                return Err(Failure::Usage(format!("z = {z} gives a singular curve (z must not be 0 or 1 mod {p})")));
            }
            vec![count_points(p, z)?]
        }
        (None, false) => return Err(Failure::Usage("give --z or --sweep".into())),
    };
    Ok((render_counts(&counts, format), true))
}

#[derive(Serialize)]
struct CongruenceReport {
    p: u64,
    pass: bool,
    checks: Vec<Verdict>,
    supersingular: SupersingularReport,
}

fn congruence(p: u64, format: Format) -> CmdResult {
    require_prime(p)?;
    let checks = vec![
        point_count_check(p)?,
        hasse_check(p)?,
        pfaff_congruence_check(p)?,
        hasse_hyp_congruence_check(p)?,
        mobius_orbit_check(p)?,
    ];
    let supersingular = supersingular_scan(p)?;
    let pass = checks.iter().all(|c| c.pass) && supersingular.consistent;
    let report = CongruenceReport { p, pass, checks, supersingular };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("p,check,pass,witness\n");
            for c in &report.checks {
                writeln!(s, "{p},{},{},\"{}\"", c.check, c.pass, c.witness.as_deref().unwrap_or("")).unwrap();
            }
            writeln!(s, "{p},supersingular,{},\"{:?}\"", report.supersingular.consistent, report.supersingular.roots)
                .unwrap();
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                match &c.witness {
                    None => writeln!(s, "{:<22} pass", c.check).unwrap(),
                    Some(w) => writeln!(s, "{:<22} FAIL {w}", c.check).unwrap(),
                }
            }
            let ss = &report.supersingular;
            writeln!(s, "{:<22} {} roots {:?}", "supersingular", if ss.consistent { "pass" } else { "FAIL" }, ss.roots)
                .unwrap();
            s
        }
    };
    Ok((out, pass))
}

#[derive(Serialize)]
struct PadicCliReport {
    p: u64,
    n: u32,
    samples: Vec<i64>,
    pass: bool,
    witness: Option<PadicWitness>,
    hypergeometric_ode: bool,
    symmetric_square_ode: bool,
}

fn padic(p: u64, n: u32, samples: u32, format: Format) -> CmdResult {
    require_prime(p)?;
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if (p as f64).powi(n as i32) > PADIC_LIMIT as f64 {
        return Err(Failure::Usage(format!("{p}^{n} exceeds the supported size {PADIC_LIMIT}")));
    }
    let ts: Vec<i64> = (1..=samples as i64).collect();
    let congruence = padic_congruence_check(p, n, &ts)?;
    let hyp = hypergeometric_ode_check(SERIES_ORDER);
    let sym = symmetric_square_ode_check(SERIES_ORDER);
    let report = PadicCliReport {
        p,
        n,
        samples: congruence.samples,
        pass: congruence.pass && hyp && sym,
        witness: congruence.witness,
        hypergeometric_ode: hyp,
        symmetric_square_ode: sym,
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => format!(
            "p,n,samples,pass,hypergeometric_ode,symmetric_square_ode,witness_t\n{p},{n},{},{},{},{},{}\n",
            report.samples.len(),
            report.pass,
            hyp,
            sym,
            report.witness.as_ref().map_or(String::new(), |w| w.t.to_string())
        ),
        Format::Text => {
            let mut s = format!("U_{n} vs F^2 mod {p}^{n} on t = 1..{samples}: ");
            match &report.witness {
                None => s.push_str("pass\n"),
                Some(w) => writeln!(s, "FAIL at t = {} ({} vs {})", w.t, w.u_n, w.f_squared).unwrap(),
            }
            writeln!(s, "hypergeometric ODE (K = {SERIES_ORDER}): {}", if hyp { "pass" } else { "FAIL" }).unwrap();
            writeln!(s, "symmetric-square ODE (K = {SERIES_ORDER}): {}", if sym { "pass" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok((out, report.pass))
}

#[derive(Serialize)]
struct IntegralSample {
    z: [f64; 2],
    value: [f64; 2],
    expected: [f64; 2],
    error: f64,
}

#[derive(Serialize)]
struct IntegralReport {
    n: usize,
    tol: f64,
    max_error: f64,
    pass: bool,
    samples: Vec<IntegralSample>,
}

/// Samples sit on the circle `|z - 1| = 1/2`, inside the disk where the
/// contour integral reproduces `f(T v; z)`.
fn integral(n: usize, samples: u32, tol: f64, format: Format) -> CmdResult {
    require_even(n)?;
    if n < 2 {
        return Err(Failure::Usage("N must be at least 2".into()));
    }
    if samples == 0 || !(tol > 0.0) {
        return Err(Failure::Usage("--samples and --tol must be positive".into()));
    }
    let v = eigen_vector(n)?;
    let f = gen_poly(&v);
    let quad = Quadrature { tolerance: tol, ..Quadrature::default() };
    let mut rows = Vec::with_capacity(samples as usize);
    for k in 0..samples {
        let theta = 2.0 * PI * k as f64 / samples as f64;
        let z = Complex64::new(1.0, 0.0) + Complex64::from_polar(0.5, theta);
        let est = integral_operator_numeric(n, &v, z, &quad)?;
        let expected = f.eval_complex(z);
        rows.push(IntegralSample {
            z: [z.re, z.im],
            value: [est.value.re, est.value.im],
            expected: [expected.re, expected.im],
            error: (est.value - expected).norm(),
        });
    }
    let max_error = rows.iter().map(|r| r.error).fold(0.0, f64::max);
    let report = IntegralReport { n, tol, max_error, pass: max_error < tol, samples: rows };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("n,z_re,z_im,value_re,value_im,expected_re,expected_im,error\n");
            for r in &report.samples {
                writeln!(
                    s,
                    "{n},{:e},{:e},{:e},{:e},{:e},{:e},{:e}",
                    r.z[0], r.z[1], r.value[0], r.value[1], r.expected[0], r.expected[1], r.error
                )
                .unwrap();
            }
            s
        }
        Format::Text => format!(
            "N = {n}: max |I(z) - f(v; z)| = {:.3e} over {samples} points (tol {tol:e}): {}\n",
            report.max_error,
            if report.pass { "pass" } else { "FAIL" }
        ),
    };
    Ok((out, report.pass))
}
