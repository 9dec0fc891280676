//! Subcommand definitions and their table builders.
//!
//! Every output file begins with a metadata header naming the command and
//! each parameter by its flag; feeding those values back as flags
//! reproduces the file byte for byte. Paths and input files never appear
//! in metadata: FASTA input is resolved and recorded as its plain
//! sequence.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use basechain::energy::binding_report;
use basechain::experiments::{default_scan_configs, ensemble_entropy, negativity_scan, neighbor_grid};
use basechain::gaussian::{single_site_entropy, thermal_moments};
use basechain::model::{parse_sequence, sequence_string, BaseKind, Boundary, ChainSpec, Direction};
use basechain::spectrum::chain_modes;
use basechain::units::ELEMENTARY_CHARGE;
use basechain::Error;

use crate::output::{Format, Table, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "basechain",
    version,
    about = "Phonon spectra, entanglement measures, and binding energy of dipole-coupled base chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Phonon mode frequencies of one chain.
    Spectrum(SpectrumArgs),
    /// Middle-pair negativity of uniform rings versus base spacing.
    NegativityScan(ScanArgs),
    /// Entropy statistics over an ensemble of random sequences.
    EntropyEnsemble(EnsembleArgs),
    /// Probe-site entropy for all sixteen neighbor combinations.
    NeighborTable(NeighborArgs),
    /// Ground-state binding energy and its wide-spacing estimate.
    BindingEnergy(BindingArgs),
    /// Per-site symplectic eigenvalue and von Neumann entropy.
    SiteEntropy(SiteArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DirectionArg {
    X,
    Y,
    Z,
}

impl DirectionArg {
    fn core(self) -> Direction {
        match self {
            DirectionArg::X => Direction::X,
            DirectionArg::Y => Direction::Y,
            DirectionArg::Z => Direction::Z,
        }
    }

    fn name(self) -> &'static str {
        match self {
            DirectionArg::X => "x",
            DirectionArg::Y => "y",
            DirectionArg::Z => "z",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BoundaryArg {
    Open,
    Periodic,
}

impl BoundaryArg {
    fn core(self) -> Boundary {
        match self {
            BoundaryArg::Open => Boundary::Open,
            BoundaryArg::Periodic => Boundary::Periodic,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BoundaryArg::Open => "open",
            BoundaryArg::Periodic => "periodic",
        }
    }
}

/// Exactly one of a literal sequence or a FASTA file.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct SeqInput {
    /// Base sequence like ACGT (case-insensitive).
    #[arg(long)]
    pub seq: Option<String>,
    /// Path of a single-record FASTA file.
    #[arg(long)]
    pub fasta: Option<PathBuf>,
}

#[derive(Args)]
pub struct GeometryArgs {
    /// Base spacing in angstrom.
    #[arg(long, default_value_t = 4.5)]
    pub spacing: f64,
    /// Environment scaling of the coupling; enters as sqrt(epsilon).
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Displacement direction of the electron clouds.
    #[arg(long, value_enum, default_value_t = DirectionArg::X)]
    pub direction: DirectionArg,
    /// Chain boundary condition.
    #[arg(long, value_enum, default_value_t = BoundaryArg::Open)]
    pub boundary: BoundaryArg,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: SeqInput,
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct BindingArgs {
    #[command(flatten)]
    pub input: SeqInput,
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct SiteArgs {
    #[command(flatten)]
    pub input: SeqInput,
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Temperature in kelvin.
    #[arg(long, default_value_t = 300.0)]
    pub temperature: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct ScanArgs {
    /// Smallest spacing in angstrom.
    #[arg(long, default_value_t = 4.0)]
    pub r_min: f64,
    /// Largest spacing in angstrom.
    #[arg(long, default_value_t = 8.0)]
    pub r_max: f64,
    /// Number of evenly spaced grid points.
    #[arg(long, default_value_t = 41)]
    pub steps: usize,
    /// Ring size.
    #[arg(long, default_value_t = 50)]
    pub sites: usize,
    /// Temperature in kelvin.
    #[arg(long, default_value_t = 300.0)]
    pub temperature: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct EnsembleArgs {
    /// Number of random sequences.
    #[arg(long, default_value_t = 1000)]
    pub strings: usize,
    /// Bases per sequence.
    #[arg(long, default_value_t = 50)]
    pub length: usize,
    /// Base spacing in angstrom.
    #[arg(long, default_value_t = 4.5)]
    pub spacing: f64,
    /// Environment scaling of the coupling; enters as sqrt(epsilon).
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Displacement direction of the electron clouds.
    #[arg(long, value_enum, default_value_t = DirectionArg::X)]
    pub direction: DirectionArg,
    /// Temperature in kelvin.
    #[arg(long, default_value_t = 300.0)]
    pub temperature: f64,
    /// Master seed of the random stream.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct NeighborArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug)]
pub enum AppError {
    Core(Error),
    Io(std::io::Error),
    AllConfigsUnstable(String),
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Core(e) => write!(f, "{e}"),
            AppError::Io(e) => write!(f, "{e}"),
            AppError::AllConfigsUnstable(msg) => {
                write!(f, "every scan configuration is unstable: {msg}")
            }
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Core(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl AppError {
    /// 2 parameter validation, 3 sequence input, 4 instability, 5 io,
    /// 1 internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(Error::InvalidParameter(_)) => 2,
            AppError::Core(Error::LengthMismatch(_)) => 2,
            AppError::Core(Error::SequenceParse { .. }) => 3,
            AppError::Core(Error::FastaMultiRecord) => 3,
            AppError::Core(Error::Unstable { .. }) => 4,
            AppError::AllConfigsUnstable(_) => 4,
            AppError::Io(_) => 5,
            AppError::Core(_) => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<(), AppError> {
    let (table, output) = match cli.command {
        Command::Spectrum(args) => (spectrum_table(&args)?, args.output),
        Command::NegativityScan(args) => (scan_table(&args)?, args.output),
        Command::EntropyEnsemble(args) => (ensemble_table(&args)?, args.output),
        Command::NeighborTable(args) => (neighbor_table_cmd(&args)?, args.output),
        Command::BindingEnergy(args) => (binding_table(&args)?, args.output),
        Command::SiteEntropy(args) => (site_table(&args)?, args.output),
    };
    let text = table.render(output.format);
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn resolve_sequence(input: &SeqInput) -> Result<Vec<BaseKind>, AppError> {
    let text = match (&input.seq, &input.fasta) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        _ => unreachable!("argument group enforces exactly one input"),
    };
    Ok(parse_sequence(&text)?)
}

fn meta(command: &str) -> Vec<(String, String)> {
    vec![
        ("command".into(), command.into()),
        ("version".into(), VERSION.into()),
    ]
}

fn push(meta: &mut Vec<(String, String)>, key: &str, value: impl ToString) {
    meta.push((key.into(), value.to_string()));
}

fn chain_meta(
    command: &str,
    sequence: &[BaseKind],
    geometry: &GeometryArgs,
    temperature: Option<f64>,
    format: Format,
) -> Vec<(String, String)> {
    let mut m = meta(command);
    push(&mut m, "seq", sequence_string(sequence));
    push(&mut m, "spacing", geometry.spacing);
    push(&mut m, "epsilon", geometry.epsilon);
    push(&mut m, "direction", geometry.direction.name());
    push(&mut m, "boundary", geometry.boundary.name());
    if let Some(t) = temperature {
        push(&mut m, "temperature", t);
    }
    push(&mut m, "format", format.name());
    m
}

fn chain_spec(
    sequence: Vec<BaseKind>,
    geometry: &GeometryArgs,
    temperature: f64,
) -> Result<ChainSpec, AppError> {
    Ok(ChainSpec::new(
        sequence,
        geometry.spacing * 1e-10,
        geometry.epsilon,
        geometry.direction.core(),
        geometry.boundary.core(),
        temperature,
    )?)
}

fn spectrum_table(args: &SpectrumArgs) -> Result<Table, AppError> {
    let sequence = resolve_sequence(&args.input)?;
    let meta = chain_meta("spectrum", &sequence, &args.geometry, None, args.output.format);
    let spec = chain_spec(sequence, &args.geometry, 0.0)?;
    let spectrum = chain_modes(&spec)?;
    let rows = spectrum
        .frequencies
        .iter()
        .enumerate()
        .map(|(l, f)| vec![Value::UInt(l as u64 + 1), Value::Float(f.scaled())])
        .collect();
    Ok(Table {
        meta,
        columns: vec!["mode", "omega_1e15hz"],
        rows,
    })
}

fn site_table(args: &SiteArgs) -> Result<Table, AppError> {
    let sequence = resolve_sequence(&args.input)?;
    let meta = chain_meta(
        "site-entropy",
        &sequence,
        &args.geometry,
        Some(args.temperature),
        args.output.format,
    );
    let spec = chain_spec(sequence, &args.geometry, args.temperature)?;
    let moments = thermal_moments(&chain_modes(&spec)?, spec.temperature_k)?;
    let mut rows = Vec::with_capacity(spec.len());
    for (j, base) in spec.sequence.iter().enumerate() {
        let (r, vne) = single_site_entropy(&moments, j)?;
        rows.push(vec![
            Value::UInt(j as u64 + 1),
            Value::Text(base.symbol().to_string()),
            Value::Float(r),
            Value::Float(vne),
        ]);
    }
    Ok(Table {
        meta,
        columns: vec!["site", "base", "r_symplectic", "vne_nats"],
        rows,
    })
}

fn binding_table(args: &BindingArgs) -> Result<Table, AppError> {
    let sequence = resolve_sequence(&args.input)?;
    let meta = chain_meta(
        "binding-energy",
        &sequence,
        &args.geometry,
        None,
        args.output.format,
    );
    let spec = chain_spec(sequence, &args.geometry, 0.0)?;
    let report = binding_report(&spec)?;
    let rows = vec![vec![
        Value::UInt(report.n_sites as u64),
        Value::Float(report.exact_j),
        Value::Float(report.exact_j / ELEMENTARY_CHARGE),
        Value::Float(report.asymptotic_j),
        Value::Float(report.asymptotic_j / ELEMENTARY_CHARGE),
        Value::Float(report.s_witness),
        Value::Float(report.relative_gap),
    ]];
    Ok(Table {
        meta,
        columns: vec![
            "n_sites",
            "exact_j",
            "exact_ev",
            "asymptotic_j",
            "asymptotic_ev",
            "s_witness",
            "relative_gap",
        ],
        rows,
    })
}

fn scan_table(args: &ScanArgs) -> Result<Table, AppError> {
    let mut m = meta("negativity-scan");
    push(&mut m, "r-min", args.r_min);
    push(&mut m, "r-max", args.r_max);
    push(&mut m, "steps", args.steps);
    push(&mut m, "sites", args.sites);
    push(&mut m, "temperature", args.temperature);
    push(&mut m, "format", args.output.format.name());

    let scans = negativity_scan(
        args.r_min,
        args.r_max,
        args.steps,
        args.sites,
        args.temperature,
        &default_scan_configs(),
    )?;
    for scan in &scans {
        if let Some(failure) = &scan.failure {
            eprintln!(
                "warning: configuration {} aborted at r={} angstrom: {}",
                scan.config.label(),
                failure.r_angstrom,
                failure.message
            );
        }
    }
    if scans.iter().all(|s| s.points.is_empty()) {
        let first = scans
            .iter()
            .find_map(|s| s.failure.as_ref())
            .expect("empty scan implies a failure");
        return Err(AppError::AllConfigsUnstable(first.message.clone()));
    }

    let mut rows = Vec::new();
    for scan in &scans {
        for p in &scan.points {
            rows.push(vec![
                Value::Text(scan.config.label()),
                Value::Float(scan.config.epsilon),
                Value::Text(scan.config.direction.symbol().to_string()),
                Value::Float(scan.config.omega0.scaled()),
                Value::Float(p.r_angstrom),
                Value::Float(p.s1),
                Value::Float(p.s2),
                Value::Float(p.negativity),
            ]);
        }
    }
    Ok(Table {
        meta: m,
        columns: vec![
            "config",
            "epsilon",
            "direction",
            "omega0_1e15hz",
            "r_angstrom",
            "s1",
            "s2",
            "negativity_nats",
        ],
        rows,
    })
}

fn ensemble_table(args: &EnsembleArgs) -> Result<Table, AppError> {
    let mut m = meta("entropy-ensemble");
    push(&mut m, "strings", args.strings);
    push(&mut m, "length", args.length);
    push(&mut m, "spacing", args.spacing);
    push(&mut m, "epsilon", args.epsilon);
    push(&mut m, "direction", args.direction.name());
    push(&mut m, "temperature", args.temperature);
    push(&mut m, "seed", args.seed);
    push(&mut m, "format", args.output.format.name());

    let records = ensemble_entropy(
        args.strings,
        args.length,
        args.spacing * 1e-10,
        args.epsilon,
        args.direction.core(),
        args.temperature,
        args.seed,
    )?;
    let rows = records
        .iter()
        .map(|r| {
            vec![
                Value::UInt(r.index as u64),
                Value::UInt(r.seed),
                Value::Text(r.sequence.clone()),
                Value::Float(r.shannon_nats),
                Value::Float(r.shannon_bits),
                Value::Float(r.mean_vne),
                Value::Float(r.min_omega_scaled),
            ]
        })
        .collect();
    Ok(Table {
        meta: m,
        columns: vec![
            "index",
            "seed",
            "sequence",
            "shannon_nats",
            "shannon_bits",
            "mean_vne",
            "min_freq",
        ],
        rows,
    })
}

fn neighbor_table_cmd(args: &NeighborArgs) -> Result<Table, AppError> {
    let mut m = meta("neighbor-table");
    push(&mut m, "format", args.output.format.name());
    let grid = neighbor_grid()?;
    let rows = BaseKind::ALL
        .iter()
        .enumerate()
        .map(|(i, left)| {
            let mut row = vec![Value::Text(left.symbol().to_string())];
            row.extend((0..4).map(|j| Value::Float(grid[i][j])));
            row
        })
        .collect();
    Ok(Table {
        meta: m,
        columns: vec!["left", "a", "c", "g", "t"],
        rows,
    })
}
