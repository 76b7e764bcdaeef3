//! `hwl`: generate test signals, take their Hilbert transforms, analyse the
//! results and draw the standard figures.
//!
//! Exit codes: 0 on success, 2 on a usage error, 3 when the data cannot be
//! read or processed. Analysis commands always write their JSON report and
//! record the outcome in its `pass` field rather than in the exit code.

mod args;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hwl::analysis::{self, MomentTolerance, Side};
use hwl::hilbert::{hilbert_pv, hilbert_spectral, PvConfig, SpectralConfig};
use hwl::report_io::{self, HilbertRun, Method, PartitionReport, Report, ReportEnvelope};
use hwl::wavelets::{sample, WaveletSpec, Window};
use hwl::{Grid, SampledSignal};

use args::{parse_grid, parse_interval, parse_wavelet, parse_window};

const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;

/// Hilbert transforms of wavelets, with numerical checks of their properties.
#[derive(Parser)]
#[command(name = "hwl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a generator on a grid and write it as CSV.
    Gen {
        /// NAME[,params], e.g. haar-wavelet or spline-wavelet,3.
        #[arg(long, value_parser = parse_wavelet, allow_hyphen_values = true)]
        wavelet: WaveletSpec,
        /// min:max:step.
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Grid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Transform a CSV signal; also writes `<out>.json` describing the run.
    Hilbert {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Zero-padding factor of the spectral method.
        #[arg(long, default_value_t = SpectralConfig::DEFAULT_PAD_FACTOR)]
        pad: usize,
        /// Skip the first-order correction of the quadrature.
        #[arg(long)]
        no_correction: bool,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one analysis and write a JSON report.
    Analyze {
        #[command(subcommand)]
        what: Analysis,
    },
    /// Render one of the standard figures as SVG.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Pv,
    Spectral,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    TwoSided,
}

#[derive(Args)]
struct JsonOut {
    /// Report path.
    #[arg(long)]
    json: PathBuf,
}

#[derive(Subcommand)]
enum Analysis {
    /// Power-law fit of |f| against |x|.
    Decay {
        #[arg(long = "in")]
        input: PathBuf,
        /// lo:hi in |x|.
        #[arg(long, value_parser = parse_interval)]
        window: (f64, f64),
        #[arg(long, value_enum, default_value = "two-sided")]
        side: SideArg,
        /// Expected exponent; the report passes when within --tolerance of it.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<f64>,
        #[arg(long, default_value_t = 0.1)]
        tolerance: f64,
        /// Smallest acceptable r².
        #[arg(long, default_value_t = 0.95)]
        min_r2: f64,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Moments 0..=max-order and the number that vanish.
    Moments {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_order: u32,
        /// Absolute tolerance; the default scales with the truncation bound.
        #[arg(long)]
        tolerance: Option<f64>,
        /// The report passes when at least this many moments vanish.
        #[arg(long, default_value_t = 1)]
        min_vanishing: usize,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Sobolev norms and the smoothness order they support.
    Sobolev {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated exponents; defaults to 0, 0.5, ..., 4.
        #[arg(long, value_delimiter = ',')]
        gammas: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0)]
        min_order: u32,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Residual of H[w cos] = w sin for a modulated window.
    Bedrosian {
        /// sinc2 or gauss,SIGMA.
        #[arg(long, value_parser = parse_window)]
        window: Window,
        #[arg(long, allow_hyphen_values = true)]
        omega0: f64,
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Grid,
        #[arg(long, default_value_t = 1e-4)]
        threshold: f64,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Empirical decay-bound constant and its stability under span doubling.
    Certificate {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        hpsi: PathBuf,
        /// Number of vanishing moments claimed; 0 for the general bound.
        #[arg(long, allow_hyphen_values = true)]
        order: i64,
        #[command(flatten)]
        json: JsonOut,
    },
    /// x·Hf(x) at a far probe against (1/π)∫f.
    TailLimit {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        transform: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Relative tolerance when (1/π)∫f is nonzero.
        #[arg(long, default_value_t = 5e-3)]
        rel_tolerance: f64,
        /// Bound on |x·Hf(x)| when (1/π)∫f is zero.
        #[arg(long, default_value_t = 3.5e-3)]
        abs_tolerance: f64,
        #[command(flatten)]
        json: JsonOut,
    },
    /// Σ g(x - k) - 1 for a scaling function or its transform.
    Partition {
        /// haar-scaling or bspline-scaling,DEGREE.
        #[arg(long, value_parser = parse_wavelet)]
        scaling: WaveletSpec,
        #[arg(long, default_value_t = 50)]
        k: u32,
        #[arg(long)]
        transformed: bool,
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Grid,
        /// Half-width of the central window checked; defaults to a quarter span.
        #[arg(long)]
        central: Option<f64>,
        #[command(flatten)]
        json: JsonOut,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<hwl::Error> for Failure {
    fn from(e: hwl::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// `HWL_THREADS`, when set, caps the quadrature worker count.
fn pv_config() -> Result<PvConfig, Failure> {
    let cfg = PvConfig::default();
    match std::env::var("HWL_THREADS") {
        Err(_) => Ok(cfg),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(cfg.with_parallelism(n)),
            _ => Err(Failure::Usage(format!(
                "HWL_THREADS=`{v}` is not a positive integer"
            ))),
        },
    }
}

fn read_input(path: &Path) -> Result<(SampledSignal, String), Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    let signal = report_io::read_csv(bytes.as_slice())
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    Ok((signal, report_io::digest_bytes(&bytes)))
}

fn emit(report: Report, digest: String, pass: bool, path: &Path) -> Outcome {
    report_io::write_report_json(&ReportEnvelope::new(report, digest, pass), path)?;
    println!("{}: {}", path.display(), if pass { "pass" } else { "fail" });
    Ok(())
}

fn run_gen(spec: &WaveletSpec, grid: &Grid, out: &Path) -> Outcome {
    report_io::write_signal_csv(&sample(spec, grid), out)?;
    Ok(())
}

fn run_hilbert(
    method: MethodArg,
    pad: usize,
    no_correction: bool,
    input: &Path,
    out: &Path,
) -> Outcome {
    let (f, digest) = read_input(input)?;
    let (hf, run) = match method {
        MethodArg::Pv => {
            let mut cfg = pv_config()?;
            cfg.singularity_correction = !no_correction;
            let hf = hilbert_pv(&f, &cfg);
            let run = HilbertRun {
                method: Method::Pv,
                pad_factor: None,
                singularity_correction: Some(cfg.singularity_correction),
                grid: *f.grid(),
                output_digest: report_io::digest_signal(&hf),
            };
            (hf, run)
        }
        MethodArg::Spectral => {
            let cfg = SpectralConfig::new(pad).map_err(|e| Failure::Usage(e.to_string()))?;
            let hf = hilbert_spectral(&f, &cfg);
            let run = HilbertRun {
                method: Method::Spectral,
                pad_factor: Some(cfg.pad_factor()),
                singularity_correction: None,
                grid: *f.grid(),
                output_digest: report_io::digest_signal(&hf),
            };
            (hf, run)
        }
    };
    report_io::write_signal_csv(&hf, out)?;
    let mut sidecar = out.as_os_str().to_owned();
    sidecar.push(".json");
    report_io::write_report_json(
        &ReportEnvelope::new(Report::Hilbert(run), digest, true),
        PathBuf::from(sidecar),
    )?;
    Ok(())
}

fn run_analysis(what: Analysis) -> Outcome {
    match what {
        Analysis::Decay {
            input,
            window,
            side,
            expect,
            tolerance,
            min_r2,
            json,
        } => {
            let (f, digest) = read_input(&input)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
                SideArg::TwoSided => Side::TwoSided,
            };
            let fit = analysis::fit_decay(&f, window, side)?;
            let pass = fit.r_squared >= min_r2
                && expect.map_or(true, |e| (fit.exponent - e).abs() <= tolerance);
            emit(Report::DecayFit(fit), digest, pass, &json.json)
        }
        Analysis::Moments {
            input,
            max_order,
            tolerance,
            min_vanishing,
            json,
        } => {
            let (f, digest) = read_input(&input)?;
            let tol = match tolerance {
                Some(t) if t > 0.0 => MomentTolerance::Absolute(t),
                Some(t) => return Err(Failure::Usage(format!("tolerance {t} must be positive"))),
                None => MomentTolerance::TruncationAware,
            };
            let r = analysis::moments(&f, max_order, tol);
            let pass = r.vanishing_count >= min_vanishing;
            emit(Report::Moments(r), digest, pass, &json.json)
        }
        Analysis::Sobolev {
            input,
            gammas,
            min_order,
            json,
        } => {
            let (f, digest) = read_input(&input)?;
            let gammas = gammas.unwrap_or_else(analysis::default_gamma_grid);
            if gammas.iter().any(|g| g.is_nan() || *g < 0.0) {
                return Err(Failure::Usage("gammas must be non-negative".into()));
            }
            let est = analysis::smoothness_profile(&f, &gammas)?;
            let pass = est.smoothness_order >= min_order;
            emit(Report::SobolevEstimate(est), digest, pass, &json.json)
        }
        Analysis::Bedrosian {
            window,
            omega0,
            grid,
            threshold,
            json,
        } => {
            let residual = analysis::bedrosian_residual(window, omega0, &grid)?;
            let digest = report_io::digest_bytes(
                format!("bedrosian {window:?} {omega0:e} {grid:?}").as_bytes(),
            );
            let report = report_io::BedrosianReport {
                window,
                omega0,
                grid,
                residual,
            };
            emit(
                Report::Bedrosian(report),
                digest,
                residual < threshold,
                &json.json,
            )
        }
        Analysis::Certificate {
            psi,
            hpsi,
            order,
            json,
        } => {
            let (f, d1) = read_input(&psi)?;
            let (hf, d2) = read_input(&hpsi)?;
            if order < 0 {
                return Err(Failure::Usage(format!("order {order} must be >= 0")));
            }
            let cert = analysis::theorem_certificate(&f, &hf, order)?;
            let digest = report_io::digest_bytes(format!("{d1}{d2}").as_bytes());
            let pass = cert.stable;
            emit(Report::BoundCertificate(cert), digest, pass, &json.json)
        }
        Analysis::TailLimit {
            input,
            transform,
            x,
            rel_tolerance,
            abs_tolerance,
            json,
        } => {
            let (f, d1) = read_input(&input)?;
            let (hf, d2) = read_input(&transform)?;
            let t = analysis::tail_limit(&f, &hf, x)?;
            let pass = if t.predicted == 0.0 {
                t.probe_value.abs() <= abs_tolerance
            } else {
                t.relative_deviation() <= rel_tolerance
            };
            let digest = report_io::digest_bytes(format!("{d1}{d2}").as_bytes());
            emit(Report::TailLimit(t), digest, pass, &json.json)
        }
        Analysis::Partition {
            scaling,
            k,
            transformed,
            grid,
            central,
            json,
        } => {
            let dev = analysis::partition_deviation(&scaling, k, transformed, &grid)?;
            let centre = 0.5 * (grid.x_min() + grid.x_max());
            let r = central.unwrap_or(0.25 * grid.span());
            let window = (centre - r, centre + r);
            let (lo, hi) = dev
                .iter()
                .filter(|(x, _)| *x >= window.0 && *x <= window.1)
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), (_, v)| {
                    (lo.min(v.abs()), hi.max(v.abs()))
                });
            let pass = if transformed { lo > 0.9 } else { hi < 1e-9 };
            let digest = report_io::digest_bytes(
                format!("partition {} {k} {transformed} {grid:?}", scaling.name()).as_bytes(),
            );
            let report = PartitionReport {
                scaling_function: scaling.name(),
                k_max: k,
                transformed,
                central_window: window,
                max_abs_deviation: hi,
                min_abs_deviation: lo,
            };
            emit(Report::Partition(report), digest, pass, &json.json)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { wavelet, grid, out } => run_gen(&wavelet, &grid, &out),
        Command::Hilbert {
            method,
            pad,
            no_correction,
            input,
            out,
        } => run_hilbert(method, pad, no_correction, &input, &out),
        Command::Analyze { what } => run_analysis(what),
        Command::Figure { id, out } => {
            let spec = report_io::build_figure(id, &pv_config()?)?;
            report_io::write_figure(&spec, &out)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
