//! Command-line entry point.
//!
//! Four subcommands: `equilibria` prints the eight steady states,
//! `check` evaluates a condition set, `simulate` runs a scenario and
//! writes its outputs, `lyapunov` runs with energy recording and reports
//! monotone decay. Exit codes: 0 success, 1 verdict/condition failure,
//! 2 usage or configuration error, 3 numerical abort. Human-readable
//! results go to stdout, errors to stderr, machine data only to files.

use crate::config::{parse_config, parse_target};
use crate::diagnostics::{convergence_verdict, DEFAULT_VERDICT_TOL};
use crate::grid::linf_norm;
use crate::lyapunov::{decay_monitor, eval_energy, EnergyKind, EnergyTag};
use crate::model::{
    check_coexistence_conditions, check_stability_conditions, enumerate_equilibria, equilibrium,
    ConditionReport, EquilibriumKind,
};
use crate::output::{write_snapshot, write_timeseries, OutputKind, RunManifest};
use crate::solver::{
    initial_state, simulate_observed, stable_dt, SimConfig, SolverError, State, Trajectory,
};
use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use std::fmt::Display;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cats",
    version,
    about = "Predator-prey chemo-alarm-taxis reaction-diffusion simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eight spatially constant steady states with admissibility.
    Equilibria {
        /// Scenario file (key = value lines).
        config: PathBuf,
    },
    /// Evaluate the condition set for convergence towards a steady state.
    Check {
        /// Scenario file (key = value lines).
        config: PathBuf,
        /// coexistence | trivial | prey-vanishing | primary-vanishing
        #[arg(long)]
        target: String,
        /// Stand-in for the solution sup-norm of v (default: the bell
        /// initial peak 3). For the coexistence target the sup-dependent
        /// stability clauses are evaluated only when a sup is given.
        #[arg(long)]
        sup_v: Option<f64>,
        /// Stand-in for the solution sup-norm of w (default: the bell
        /// initial peak 2).
        #[arg(long)]
        sup_w: Option<f64>,
    },
    /// Run a scenario; write timeseries, final snapshots and a manifest.
    Simulate {
        /// Scenario file (key = value lines).
        config: PathBuf,
        /// Output directory (created if absent).
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a scenario recording an energy functional; report its decay.
    Lyapunov {
        /// Scenario file (key = value lines).
        config: PathBuf,
        /// Energy functional: e1 (coexistence), e2 (secondary-only),
        /// e3 (prey-vanishing), e4 (primary-predator-vanishing).
        #[arg(long)]
        kind: String,
        /// Output directory (created if absent).
        #[arg(long)]
        out: PathBuf,
    },
}

/// Runs the command line and returns the process exit code.
pub fn cli_main<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    print!("{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            eprint!("{e}");
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code
        }
    }
}

struct CliError {
    exit_code: i32,
    message: String,
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage_error(message: impl Into<String>) -> CliError {
    CliError {
        exit_code: EXIT_USAGE,
        message: message.into(),
    }
}

fn solver_error(e: SolverError) -> CliError {
    let exit_code = match e {
        SolverError::NegativeBlowup { .. } | SolverError::NonFiniteState { .. } => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    };
    CliError {
        exit_code,
        message: e.to_string(),
    }
}

trait OrUsage<T> {
    fn or_usage(self) -> Result<T, CliError>;
}

impl<T, E: Display> OrUsage<T> for Result<T, E> {
    fn or_usage(self) -> Result<T, CliError> {
        self.map_err(|e| usage_error(e.to_string()))
    }
}

fn load_config(path: &Path) -> Result<SimConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text).or_usage()
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Equilibria { config } => {
            let cfg = load_config(&config)?;
            let points = enumerate_equilibria(&cfg.params).or_usage()?;
            println!(
                "{:<22} {:>12} {:>12} {:>12} {:>12}  admissible",
                "steady state", "u", "v", "w", "z"
            );
            for e in points {
                println!(
                    "{:<22} {:>12.6} {:>12.6} {:>12.6} {:>12.6}  {}",
                    e.kind.to_string(),
                    e.u_e,
                    e.v_e,
                    e.w_e,
                    e.z_e,
                    if e.admissible { "yes" } else { "no" }
                );
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            config,
            target,
            sup_v,
            sup_w,
        } => {
            let cfg = load_config(&config)?;
            let kind = parse_target(&target).ok_or_else(|| {
                usage_error(format!(
                    "unknown target `{target}`; expected coexistence | trivial | prey-vanishing | primary-vanishing"
                ))
            })?;
            let sups_given = sup_v.is_some() || sup_w.is_some();
            let sv = sup_v.unwrap_or(3.0);
            let sw = sup_w.unwrap_or(2.0);
            if !(sv > 0.0 && sw > 0.0) {
                return Err(usage_error("--sup-v and --sup-w must be positive"));
            }
            let mut reports: Vec<ConditionReport> = Vec::new();
            if kind == EquilibriumKind::Coexistence {
                reports.push(check_coexistence_conditions(&cfg.params));
                if sups_given {
                    reports.push(
                        check_stability_conditions(&cfg.params, kind, sv, sw).or_usage()?,
                    );
                }
            } else {
                reports.push(check_stability_conditions(&cfg.params, kind, sv, sw).or_usage()?);
            }
            let mut all = true;
            for r in &reports {
                println!("{r}");
                println!();
                all &= r.all_satisfied;
            }
            Ok(if all { EXIT_OK } else { EXIT_FAILED_CHECK })
        }
        Command::Simulate { config, out } => {
            let cfg = load_config(&config)?;
            let (traj, initial_dt) = run_simulation(&cfg, None)?;
            let mut manifest = RunManifest::new(cfg.clone(), initial_dt);
            write_run_outputs(&out, &traj, &mut manifest)?;

            let mut code = EXIT_OK;
            let mut report = String::new();
            if let Some(kind) = cfg.target {
                let point = equilibrium(&cfg.params, kind).or_usage()?;
                if !point.admissible {
                    return Err(usage_error(format!(
                        "target {kind} steady state is inadmissible for these parameters"
                    )));
                }
                let verdict =
                    convergence_verdict(&traj, &point, DEFAULT_VERDICT_TOL).or_usage()?;
                report = format!("convergence to {kind}: {verdict}");
                println!("{report}");
                if !verdict.pass {
                    code = EXIT_FAILED_CHECK;
                }
            } else {
                eprintln!("no target in config; skipping the convergence verdict");
            }
            finish_manifest(&out, report, &mut manifest)?;
            Ok(code)
        }
        Command::Lyapunov { config, kind, out } => {
            let cfg = load_config(&config)?;
            let tag = EnergyTag::parse_cli_token(&kind)
                .ok_or_else(|| usage_error(format!("unknown energy kind `{kind}`; expected e1 | e2 | e3 | e4")))?;
            let energy = EnergyKind::for_params(tag, &cfg.params).or_usage()?;
            let p = cfg.params;
            let ek = energy.clone();
            let mut observe = move |s: &State| eval_energy(s, &ek, &p).unwrap_or(f64::NAN);
            let (traj, initial_dt) = run_simulation(&cfg, Some(&mut observe))?;
            let mut manifest = RunManifest::new(cfg.clone(), initial_dt);
            write_run_outputs(&out, &traj, &mut manifest)?;
            let report = decay_monitor(&traj, &energy).or_usage()?;
            println!("{report}");
            finish_manifest(&out, report.to_string(), &mut manifest)?;
            Ok(EXIT_OK)
        }
    }
}

fn run_simulation(
    cfg: &SimConfig,
    observer: Option<&mut dyn FnMut(&State) -> f64>,
) -> Result<(Trajectory, f64), CliError> {
    let grid = cfg.grid.build().or_usage()?;
    let initial_dt = if cfg.dt > 0.0 {
        cfg.dt
    } else {
        stable_dt(&initial_state(grid), &cfg.params, &grid)
    };
    let traj = simulate_observed(cfg, observer).map_err(solver_error)?;
    Ok((traj, initial_dt))
}

fn write_run_outputs(
    out: &Path,
    traj: &Trajectory,
    manifest: &mut RunManifest,
) -> Result<(), CliError> {
    std::fs::create_dir_all(out)
        .map_err(|e| usage_error(format!("cannot create {}: {e}", out.display())))?;
    let ts = out.join("timeseries.csv");
    write_timeseries(traj, &ts).or_usage()?;
    manifest.record(&ts, OutputKind::Timeseries);
    for name in ["u", "v", "w", "z"] {
        let path = out.join(format!("final_{name}.snap"));
        write_snapshot(&traj.final_state, name, &path).or_usage()?;
        manifest.record(&path, OutputKind::Snapshot);
    }
    eprintln!(
        "run finished: t = {}, {} steps, {} samples, {} clamps, max |v| seen {:.4}",
        traj.final_state.t,
        traj.steps,
        traj.samples.len(),
        traj.clamp_count,
        linf_norm(&traj.final_state.v).max(
            traj.samples
                .last()
                .map(|s| s.sup_v)
                .unwrap_or(0.0)
        ),
    );
    Ok(())
}

fn finish_manifest(
    out: &Path,
    report: String,
    manifest: &mut RunManifest,
) -> Result<(), CliError> {
    if !report.is_empty() {
        let path = out.join("report.txt");
        std::fs::write(&path, format!("{report}\n"))
            .map_err(|e| usage_error(format!("cannot write {}: {e}", path.display())))?;
        manifest.record(&path, OutputKind::Report);
    }
    let path = out.join("manifest.json");
    manifest.write(&path).or_usage()?;
    Ok(())
}
