//! `qhyper`: exact special polynomials, moments and invariant integrals on the
//! quantum hyperboloid.
//!
//! Output goes to stdout. Failures print `{"error": CODE, "message": ...}` on
//! stderr and exit with 1 (domain errors) or 2 (usage errors).

mod expr;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhyper_core::integral::{default_jackson_tol, DEFAULT_JACKSON_M_MAX};
use qhyper_core::verify::{default_param_grid, run_suite, SuiteConfig, DEFAULT_SEED};
use qhyper_core::{
    classical_limit_report, integrate_with, jackson_series, moments_recurrence, special_polynomial, Error,
    Normalization, Params, Scalar,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qhyper", version, about = "Exact computations on the quantum hyperboloid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Special polynomials P_0..P_kmax.
    Poly {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 5)]
        kmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Moments mu_k = Int(t^k) and gamma_k = mu_k (q^(2k+2) - 1).
    Moments {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        kmax: u32,
        #[arg(long, default_value = "projector", value_parser = parse_normalization)]
        normalization: Normalization,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Invariant integral of a polynomial expression, exactly or by the
    /// Jackson-type series.
    Integrate {
        #[command(flatten)]
        params: ParamArgs,
        /// Expression in t, v = t + a and Pk, e.g. "P2*P3" or "3/4*t^2 - v".
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "projector", value_parser = parse_normalization)]
        normalization: Normalization,
        /// Sum the Jackson-type series instead of using exact moments (needs |q| < 1).
        #[arg(long)]
        jackson: bool,
        /// Stop once a series term is smaller than this (decimal allowed).
        #[arg(long, value_parser = parse_tolerance)]
        tol: Option<Scalar>,
        #[arg(long, default_value_t = DEFAULT_JACKSON_M_MAX)]
        m_max: u32,
    },
    /// Run the invariant suite and print one JSON record per check.
    Verify {
        /// Check a single tuple; omitted values default to q=2, hbar=1, c=1.
        /// Without any of these the built-in parameter grid is used.
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        q: Option<Scalar>,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        hbar: Option<Scalar>,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        c: Option<Scalar>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Negative control: perturb one special-polynomial coefficient.
        #[arg(long, hide = true)]
        inject_perturbation: bool,
    },
    /// Compare P_k at hbar=0, q=1+eps with the monic Legendre polynomial.
    Limit {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value = "1", value_parser = parse_exact, allow_hyphen_values = true)]
        c: Scalar,
        #[arg(long, default_value = "1/1000", value_parser = parse_exact, allow_hyphen_values = true)]
        eps: Scalar,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value = "2", value_parser = parse_exact, allow_hyphen_values = true)]
    q: Scalar,
    #[arg(long, default_value = "1", value_parser = parse_exact, allow_hyphen_values = true)]
    hbar: Scalar,
    #[arg(long, default_value = "1", value_parser = parse_exact, allow_hyphen_values = true)]
    c: Scalar,
}

impl ParamArgs {
    fn params(self) -> Result<Params, Error> {
        Params::new(self.q, self.hbar, self.c)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Integers or `p/q`; exact commands take no decimal input.
fn parse_exact(s: &str) -> Result<Scalar, String> {
    if s.contains(['.', 'e', 'E']) {
        return Err(format!("{s:?} is not an integer or p/q rational"));
    }
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tolerance(s: &str) -> Result<Scalar, String> {
    let tol: Scalar = s.parse().map_err(|e: Error| e.to_string())?;
    if tol.is_negative() || tol.is_zero() {
        return Err(format!("tolerance must be positive, got {s}"));
    }
    Ok(tol)
}

fn parse_normalization(s: &str) -> Result<Normalization, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: String,
}

fn fail(code: &str, message: String, exit: u8) -> ExitCode {
    let report = ErrorReport { error: code, message };
    eprintln!("{}", serde_json::to_string(&report).expect("error report serializes"));
    ExitCode::from(exit)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

fn run(command: Command) -> Result<(String, bool), Error> {
    let out = match command {
        Command::Poly { params, kmax, format } => {
            let p = params.params()?;
            let polys = (0..=kmax)
                .map(|k| special_polynomial(k, &p))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json => json(&polys),
                Format::Csv => {
                    let mut out = String::from("k,j,A\n");
                    for (k, j, a) in polys.iter().flat_map(|pk| pk.csv_rows()) {
                        out += &format!("{k},{j},{a}\n");
                    }
                    out
                }
            }
        }
        Command::Moments {
            params,
            kmax,
            normalization,
            format,
        } => {
            let table = moments_recurrence(kmax, &params.params()?, normalization);
            match format {
                Format::Json => json(&table),
                Format::Csv => {
                    let mut out = String::from("k,mu_k,gamma_k\n");
                    for (k, mu, gamma) in table.csv_rows() {
                        out += &format!("{k},{mu},{gamma}\n");
                    }
                    out
                }
            }
        }
        Command::Integrate {
            params,
            poly,
            normalization,
            jackson,
            tol,
            m_max,
        } => {
            let p = params.params()?;
            let f = expr::parse_poly(&poly, &p)?;
            if jackson {
                let tol = tol.unwrap_or_else(default_jackson_tol);
                json(&jackson_series(&f, &p, normalization, &tol, m_max)?)
            } else {
                if tol.is_some() {
                    return Err(Error::InvalidArgument("--tol only applies with --jackson".into()));
                }
                #[derive(Serialize)]
                struct Exact {
                    value: Scalar,
                }
                json(&Exact {
                    value: integrate_with(&f, &p, normalization),
                })
            }
        }
        Command::Verify {
            q,
            hbar,
            c,
            seed,
            inject_perturbation,
        } => {
            let params = if q.is_none() && hbar.is_none() && c.is_none() {
                default_param_grid()
            } else {
                let or = |x: Option<Scalar>, d: i64| x.unwrap_or_else(|| Scalar::from_int(d));
                vec![Params::new(or(q, 2), or(hbar, 1), or(c, 1))?]
            };
            let mut cfg = SuiteConfig::new(params);
            cfg.seed = seed;
            cfg.perturb_special = inject_perturbation;
            let records = run_suite(&cfg);
            let ok = records.iter().all(|r| r.pass);
            return Ok((json(&records), ok));
        }
        Command::Limit { k, c, eps } => {
            if eps.is_negative() || eps.is_zero() {
                return Err(Error::InvalidArgument(format!("--eps must be positive, got {eps}")));
            }
            json(&classical_limit_report(k, &c, &eps)?)
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            return fail("Usage", e.render().to_string().trim_end().to_owned(), 2);
        }
    };
    match run(cli.command) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(e.code(), e.to_string(), exit_code(&e)),
    }
}
