//! Command-line front end: verification suites, single-point correlation
//! evaluation, parameter sweeps, and CHSH analysis.

mod output;
mod parse;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{
    emit, linspace, render_chsh, render_sweep, ChshRecord, MethodTag, OutputFormat, SweepRecord,
};
use parse::{parse_angle, parse_angle_quad, parse_complex, parse_vec3};
use vbcorr_core::bell::{
    chsh_left_side, chsh_threshold, chsh_threshold_closed_form, optimize_angles, ChshSetting,
    MomentumConfig, CANONICAL_ANGLES,
};
use vbcorr_core::correlators::{
    equal_energy_correlation, equal_energy_correlation_phi, equal_energy_correlation_psi,
    evaluate, CorrelationRequest, MeasurementSpec, Method, StateSpec,
};
use vbcorr_core::gauge::GaugeChoice;
use vbcorr_core::kinematics::FourMomentum;
use vbcorr_core::verify;

#[derive(Parser)]
#[command(
    name = "vbcorr",
    about = "Helicity and linear-polarization correlations of relativistic vector-boson pairs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every numerical verification suite and report pass/fail.
    Verify {
        /// Seed for the deterministic sample streams.
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        /// Trials per randomized suite.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Evaluate one correlation function.
    Correlate {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        momenta: MomentumArgs,
        /// Which observable pair to correlate.
        #[arg(long, value_enum, default_value_t = MeasurementName::Helicity)]
        measurement: MeasurementName,
        /// Polarization angle of the k-side measurement (angle syntax,
        /// e.g. "5pi/6" or "2.618").
        #[arg(long)]
        theta: Option<String>,
        /// Polarization angle of the p-side measurement.
        #[arg(long)]
        theta_tilde: Option<String>,
        /// Spin measurement direction for the k particle, "x,y,z".
        #[arg(long)]
        a_dir: Option<String>,
        /// Spin measurement direction for the p particle, "x,y,z".
        #[arg(long)]
        b_dir: Option<String>,
        #[command(flatten)]
        gauge: GaugeArgs,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = MethodName::Both)]
        method: MethodName,
    },
    /// Sweep the equal-energy correlation over a grid in x and alpha.
    Sweep {
        /// Named figure configuration (fig1: x-alpha surface; fig2: the
        /// alpha = pi/2 slice). Overrides grid and angle flags.
        #[arg(long, value_enum)]
        preset: Option<PresetName>,
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        #[arg(long, default_value_t = 10.0)]
        x_max: f64,
        #[arg(long, default_value_t = 101)]
        x_steps: usize,
        /// Fixed opening angle between the momenta (angle syntax).
        #[arg(long)]
        alpha: Option<String>,
        /// Opening-angle grid start (requires --alpha-max).
        #[arg(long)]
        alpha_min: Option<String>,
        /// Opening-angle grid end.
        #[arg(long)]
        alpha_max: Option<String>,
        #[arg(long, default_value_t = 101)]
        alpha_steps: usize,
        /// k-side polarization angle.
        #[arg(long, default_value = "5pi/6")]
        theta: String,
        /// p-side polarization angle.
        #[arg(long, default_value = "8.69pi/6")]
        theta_tilde: String,
        /// closed: evaluate the closed form only; both: also run the
        /// coefficient-model oracle and record the residual.
        #[arg(long, value_enum, default_value_t = SweepMethod::Closed)]
        method: SweepMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CHSH left side against x for the center-of-mass family.
    Chsh {
        /// Named figure configuration (fig3: canonical angles, x in [0, 0.6]).
        #[arg(long, value_enum)]
        preset: Option<PresetName>,
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        #[arg(long, default_value_t = 0.6)]
        x_max: f64,
        #[arg(long, default_value_t = 601)]
        steps: usize,
        /// "canonical", "optimize", or four comma-separated angles.
        #[arg(long, default_value = "canonical")]
        angles: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct StateArgs {
    /// Scalar state of the pair.
    #[arg(long, value_enum, default_value_t = StateName::Xi)]
    state: StateName,
    /// chi coefficient alpha (complex, e.g. "1", "0.5-0.2i").
    #[arg(long)]
    alpha_coef: Option<String>,
    /// chi coefficient beta (complex).
    #[arg(long)]
    beta_coef: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StateName {
    Psi,
    Phi,
    Xi,
    Chi,
}

#[derive(Args)]
struct MomentumArgs {
    /// Momentum parameter x = (|k|/m)^2 for the reduced configurations:
    /// center-of-mass pair by default, equal-energy pair with --alpha.
    #[arg(long)]
    x: Option<f64>,
    /// Opening angle between the momenta for the equal-energy pair
    /// (angle syntax).
    #[arg(long)]
    alpha: Option<String>,
    /// Rest mass.
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Raw spatial momentum "kx,ky,kz" of the k particle.
    #[arg(long)]
    k: Option<String>,
    /// Raw spatial momentum "px,py,pz" of the p particle.
    #[arg(long)]
    p: Option<String>,
}

#[derive(Args)]
struct GaugeArgs {
    /// Transverse gauge-axis convention.
    #[arg(long, value_enum, default_value_t = GaugeName::PairCommon)]
    gauge: GaugeName,
    /// Axis vector "x,y,z" for --gauge explicit.
    #[arg(long)]
    gauge_vector: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GaugeName {
    PairCommon,
    Spherical,
    Explicit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeasurementName {
    Helicity,
    Polarization,
    Spin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodName {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMethod {
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetName {
    Fig1,
    Fig2,
    Fig3,
}

enum CliError {
    Invalid(String),
    Io(io::Error),
}

impl From<vbcorr_core::Error> for CliError {
    fn from(err: vbcorr_core::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

impl From<String> for CliError {
    fn from(message: String) -> Self {
        CliError::Invalid(message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Io(err)) => {
            eprintln!("i/o error: {err}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Verify { seed, trials } => cmd_verify(seed, trials),
        Command::Correlate {
            state,
            momenta,
            measurement,
            theta,
            theta_tilde,
            a_dir,
            b_dir,
            gauge,
            method,
        } => cmd_correlate(CorrelateArgs {
            state,
            momenta,
            measurement,
            theta,
            theta_tilde,
            a_dir,
            b_dir,
            gauge,
            method,
        }),
        Command::Sweep {
            preset,
            state,
            x_min,
            x_max,
            x_steps,
            alpha,
            alpha_min,
            alpha_max,
            alpha_steps,
            theta,
            theta_tilde,
            method,
            format,
            out,
        } => cmd_sweep(SweepArgs {
            preset,
            state,
            x_min,
            x_max,
            x_steps,
            alpha,
            alpha_min,
            alpha_max,
            alpha_steps,
            theta,
            theta_tilde,
            method,
            format,
            out,
        }),
        Command::Chsh {
            preset,
            state,
            x_min,
            x_max,
            steps,
            angles,
            format,
            out,
        } => cmd_chsh(preset, state, x_min, x_max, steps, angles, format, out),
    }
}

fn resolve_state(args: &StateArgs) -> Result<StateSpec, CliError> {
    Ok(match args.state {
        StateName::Psi => StateSpec::Psi,
        StateName::Phi => StateSpec::Phi,
        StateName::Xi => StateSpec::Xi,
        StateName::Chi => {
            let alpha = args
                .alpha_coef
                .as_deref()
                .ok_or_else(|| CliError::Invalid("--state chi requires --alpha-coef".into()))?;
            let beta = args
                .beta_coef
                .as_deref()
                .ok_or_else(|| CliError::Invalid("--state chi requires --beta-coef".into()))?;
            StateSpec::Chi {
                alpha: parse_complex(alpha)?,
                beta: parse_complex(beta)?,
            }
        }
    })
}

fn resolve_momenta(args: &MomentumArgs) -> Result<(FourMomentum, FourMomentum), CliError> {
    match (&args.k, &args.p, args.x) {
        (Some(k), Some(p), None) => {
            let k = FourMomentum::new(args.mass, parse_vec3(k)?)?;
            let p = FourMomentum::new(args.mass, parse_vec3(p)?)?;
            Ok((k, p))
        }
        (None, None, Some(x)) => match &args.alpha {
            Some(alpha) => {
                let alpha = parse_angle(alpha)?;
                Ok(FourMomentum::equal_energy_pair(x, alpha, args.mass)?)
            }
            None => Ok(FourMomentum::cm_pair(x, args.mass)?),
        },
        _ => Err(CliError::Invalid(
            "specify momenta either as --x <X> [--alpha <A>] or as --mass <M> --k <kx,ky,kz> \
             --p <px,py,pz>"
                .into(),
        )),
    }
}

fn resolve_gauge(args: &GaugeArgs) -> Result<GaugeChoice, CliError> {
    Ok(match args.gauge {
        GaugeName::PairCommon => GaugeChoice::PairCommon,
        GaugeName::Spherical => GaugeChoice::Spherical,
        GaugeName::Explicit => {
            let vector = args.gauge_vector.as_deref().ok_or_else(|| {
                CliError::Invalid("--gauge explicit requires --gauge-vector".into())
            })?;
            GaugeChoice::Explicit(parse_vec3(vector)?)
        }
    })
}

fn cmd_verify(seed: u64, trials: usize) -> Result<u8, CliError> {
    if trials < 1 {
        return Err(CliError::Invalid("--trials must be at least 1".into()));
    }
    let report = verify::run(seed, trials);
    println!("verification report: seed {seed}, trials {trials}");
    for suite in &report.suites {
        let status = if suite.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<44} max_residual {:>10.3e}  tol {:>6.0e}  trials {}",
            suite.name, suite.max_residual, suite.tolerance, suite.trials
        );
    }
    let passed = report.suites.iter().filter(|s| s.passed).count();
    println!("{passed}/{} suites passed", report.suites.len());
    Ok(if report.all_passed() { 0 } else { 1 })
}

struct CorrelateArgs {
    state: StateArgs,
    momenta: MomentumArgs,
    measurement: MeasurementName,
    theta: Option<String>,
    theta_tilde: Option<String>,
    a_dir: Option<String>,
    b_dir: Option<String>,
    gauge: GaugeArgs,
    method: MethodName,
}

fn cmd_correlate(args: CorrelateArgs) -> Result<u8, CliError> {
    let spec = resolve_state(&args.state)?;
    let (k, p) = resolve_momenta(&args.momenta)?;
    let gauge = resolve_gauge(&args.gauge)?;
    let measurement = match args.measurement {
        MeasurementName::Helicity => MeasurementSpec::Helicity,
        MeasurementName::Polarization => {
            let theta = args.theta.as_deref().ok_or_else(|| {
                CliError::Invalid("--measurement polarization requires --theta".into())
            })?;
            let theta_tilde = args.theta_tilde.as_deref().ok_or_else(|| {
                CliError::Invalid("--measurement polarization requires --theta-tilde".into())
            })?;
            MeasurementSpec::Polarization {
                theta: parse_angle(theta)?,
                theta_tilde: parse_angle(theta_tilde)?,
            }
        }
        MeasurementName::Spin => {
            let a = args
                .a_dir
                .as_deref()
                .ok_or_else(|| CliError::Invalid("--measurement spin requires --a-dir".into()))?;
            let b = args
                .b_dir
                .as_deref()
                .ok_or_else(|| CliError::Invalid("--measurement spin requires --b-dir".into()))?;
            MeasurementSpec::Spin {
                a: parse_vec3(a)?,
                b: parse_vec3(b)?,
            }
        }
    };
    let mut method = match args.method {
        MethodName::Closed => Method::ClosedForm,
        MethodName::Oracle => Method::Oracle,
        MethodName::Both => Method::Both,
    };
    if matches!(measurement, MeasurementSpec::Spin { .. }) && method != Method::ClosedForm {
        println!("note: spin correlations are closed-form only; using --method closed");
        method = Method::ClosedForm;
    }
    let request = CorrelationRequest {
        state: spec,
        k,
        p,
        measurement,
        gauge,
    };
    let result = evaluate(&request, method)?;
    if let Some(value) = result.closed {
        println!("closed {value}");
    }
    if let Some(value) = result.oracle {
        println!("oracle {value}");
    }
    if let Some(residual) = result.residual() {
        println!("residual {residual:e}");
    }
    Ok(0)
}

struct SweepArgs {
    preset: Option<PresetName>,
    state: StateArgs,
    x_min: f64,
    x_max: f64,
    x_steps: usize,
    alpha: Option<String>,
    alpha_min: Option<String>,
    alpha_max: Option<String>,
    alpha_steps: usize,
    theta: String,
    theta_tilde: String,
    method: SweepMethod,
    format: OutputFormat,
    out: Option<PathBuf>,
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, CliError> {
    let spec = resolve_state(&args.state)?;
    let pi = std::f64::consts::PI;
    let (xs, alphas, theta, theta_tilde) = match args.preset {
        Some(PresetName::Fig1) => (
            linspace(0.0, 10.0, 101),
            linspace(pi / 101.0, pi, 101),
            5.0 * pi / 6.0,
            8.69 * pi / 6.0,
        ),
        Some(PresetName::Fig2) => (
            linspace(0.0, 10.0, 1001),
            vec![pi / 2.0],
            5.0 * pi / 6.0,
            8.69 * pi / 6.0,
        ),
        Some(PresetName::Fig3) => {
            return Err(CliError::Invalid(
                "preset fig3 belongs to the chsh subcommand".into(),
            ))
        }
        None => {
            let theta = parse_angle(&args.theta)?;
            let theta_tilde = parse_angle(&args.theta_tilde)?;
            if args.x_steps < 2 {
                return Err(CliError::Invalid("--x-steps must be at least 2".into()));
            }
            if !(args.x_min >= 0.0 && args.x_max > args.x_min) {
                return Err(CliError::Invalid(
                    "x range must satisfy 0 <= x-min < x-max".into(),
                ));
            }
            let xs = linspace(args.x_min, args.x_max, args.x_steps);
            let alphas = match (&args.alpha, &args.alpha_min, &args.alpha_max) {
                (Some(fixed), None, None) => vec![parse_angle(fixed)?],
                (None, Some(lo), Some(hi)) => {
                    if args.alpha_steps < 2 {
                        return Err(CliError::Invalid(
                            "--alpha-steps must be at least 2".into(),
                        ));
                    }
                    let lo = parse_angle(lo)?;
                    let hi = parse_angle(hi)?;
                    if lo >= hi {
                        return Err(CliError::Invalid(
                            "alpha range must satisfy alpha-min < alpha-max".into(),
                        ));
                    }
                    linspace(lo, hi, args.alpha_steps)
                }
                (None, None, None) => vec![pi],
                _ => {
                    return Err(CliError::Invalid(
                        "give either --alpha or the pair --alpha-min/--alpha-max".into(),
                    ))
                }
            };
            for &alpha in &alphas {
                if !(alpha > 0.0 && alpha <= pi) {
                    return Err(CliError::Invalid(
                        "opening angles must lie in (0, pi]".into(),
                    ));
                }
            }
            (xs, alphas, theta, theta_tilde)
        }
    };

    let mut records = Vec::with_capacity(xs.len() * alphas.len());
    for &x in &xs {
        for &alpha in &alphas {
            records.push(sweep_point(&spec, x, alpha, theta, theta_tilde, args.method)?);
        }
    }
    let content = render_sweep(&records, args.format);
    emit(args.out.as_deref(), &content)?;
    Ok(0)
}

fn sweep_point(
    spec: &StateSpec,
    x: f64,
    alpha: f64,
    theta: f64,
    theta_tilde: f64,
    method: SweepMethod,
) -> Result<SweepRecord, CliError> {
    let closed = match spec {
        StateSpec::Xi => Some(equal_energy_correlation(x, alpha, theta, theta_tilde)?),
        StateSpec::Psi => Some(equal_energy_correlation_psi(x, alpha, theta, theta_tilde)?),
        StateSpec::Phi => Some(equal_energy_correlation_phi(x, alpha, theta, theta_tilde)?),
        StateSpec::Chi { .. } => None,
    };
    // The oracle needs actual momenta, which only exist for x > 0.
    let want_oracle = closed.is_none() || method == SweepMethod::Both;
    let oracle = if want_oracle && x > 0.0 {
        let (k, p) = FourMomentum::equal_energy_pair(x, alpha, 1.0)?;
        let request = CorrelationRequest {
            state: spec.clone(),
            k,
            p,
            measurement: MeasurementSpec::Polarization { theta, theta_tilde },
            gauge: GaugeChoice::PairCommon,
        };
        Some(evaluate(&request, Method::Oracle)?.oracle.expect("oracle ran"))
    } else {
        None
    };
    match (closed, oracle) {
        (Some(value), oracle) => Ok(SweepRecord {
            x,
            alpha,
            theta,
            theta_tilde,
            value,
            method: MethodTag::Closed,
            residual: oracle.map(|o| value - o),
        }),
        (None, Some(value)) => Ok(SweepRecord {
            x,
            alpha,
            theta,
            theta_tilde,
            value,
            method: MethodTag::Oracle,
            residual: None,
        }),
        (None, None) => Err(CliError::Invalid(
            "chi sweeps run through the oracle and need x > 0 over the whole grid".into(),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_chsh(
    preset: Option<PresetName>,
    state: StateArgs,
    x_min: f64,
    x_max: f64,
    steps: usize,
    angles: String,
    format: OutputFormat,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let spec = resolve_state(&state)?;
    let (xs, angle_mode) = match preset {
        Some(PresetName::Fig3) => (linspace(0.0, 0.6, 601), "canonical".to_string()),
        Some(_) => {
            return Err(CliError::Invalid(
                "presets fig1 and fig2 belong to the sweep subcommand".into(),
            ))
        }
        None => {
            if steps < 2 {
                return Err(CliError::Invalid("--steps must be at least 2".into()));
            }
            if !(x_min >= 0.0 && x_max > x_min) {
                return Err(CliError::Invalid(
                    "x range must satisfy 0 <= x-min < x-max".into(),
                ));
            }
            (linspace(x_min, x_max, steps), angles)
        }
    };
    let resolved_angles = match angle_mode.as_str() {
        "canonical" => CANONICAL_ANGLES,
        "optimize" => {
            // The center-of-mass left side factorizes into coefficient(x)
            // times the angular combination, so one optimization serves the
            // whole grid.
            let (angles, _) = optimize_angles(xs[0], &spec)?;
            angles
        }
        other => parse_angle_quad(other)?,
    };

    let mut records = Vec::with_capacity(xs.len());
    for &x in &xs {
        let left_side = chsh_left_side(&ChshSetting {
            angles: resolved_angles,
            state: spec.clone(),
            config: MomentumConfig::CenterOfMass { x },
        })?;
        records.push(ChshRecord {
            x,
            left_side,
            violated: left_side > 2.0,
        });
    }
    let content = render_chsh(&records, format);
    emit(out.as_deref(), &content)?;

    let bisection = chsh_threshold();
    let closed_form = chsh_threshold_closed_form();
    println!(
        "angles {} {} {} {}",
        resolved_angles[0], resolved_angles[1], resolved_angles[2], resolved_angles[3]
    );
    println!("x0_bisection {bisection}");
    println!("x0_closed_form {closed_form}");
    println!("difference {:e}", bisection - closed_form);
    Ok(0)
}
