use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use isingdec::code::{build_surface_code, ClassLabel};
use isingdec::hamiltonian::{
    build_constrained_z, build_unconstrained_depolarizing, build_unconstrained_single,
    reduce_to_qubo, ErrorType,
};
use isingdec::harness::{
    emit_plots, estimate_threshold, read_records, run_monte_carlo, ExperimentConfig, Threshold,
};
use isingdec::noise::{sample_error, NoiseKind, NoiseSpec};
use isingdec::oracle::{exact_decode, min_weight_in_class};
use isingdec::pipeline::{decode, DecodeParams, Method};
use isingdec::solver::AnnealSchedule;
use isingdec::syndrome::{measure_syndrome, Syndrome};

#[derive(Parser)]
#[command(name = "isingdec", about = "Surface-code decoding via Ising/QUBO optimization")]
struct Cli {
    /// Master random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Output directory for artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decode a single syndrome, sampled or loaded from a file.
    Decode(DecodeArgs),
    /// Run a Monte-Carlo campaign from a TOML config.
    Experiment {
        /// Config file path.
        config: PathBuf,
    },
    /// Estimate a threshold bracket from a campaign CSV.
    Threshold {
        /// Records CSV produced by `experiment`.
        csv: PathBuf,
        /// Method column to analyze.
        #[arg(long, default_value = "mwpm")]
        method: String,
    },
    /// Verify the annealers against the exhaustive minimum-weight decoder.
    OracleCheck {
        #[arg(long, default_value_t = 50)]
        shots: u64,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
    },
    /// Write a QUBO model in the plain-text format.
    DumpQubo(DumpArgs),
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long, default_value_t = 3)]
    d: usize,
    #[arg(long, default_value = "depolarizing")]
    noise: String,
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    #[arg(long, default_value = "sa_unconstrained")]
    method: String,
    /// Substream index of the sampled error.
    #[arg(long, default_value_t = 0)]
    sample_index: u64,
    /// Load the syndrome from a file instead of sampling an error. Two
    /// lines of 0/1 characters: face bits, then vertex bits.
    #[arg(long)]
    syndrome_file: Option<PathBuf>,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long, default_value_t = 3)]
    d: usize,
    /// Model family: depolarizing | single_x | single_z | constrained.
    #[arg(long, default_value = "depolarizing")]
    model: String,
    /// Logical class for the unconstrained models: i | x | z | xz.
    #[arg(long, default_value = "i")]
    class: String,
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    sample_index: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn parse_noise(s: &str) -> Result<NoiseKind, String> {
    match s {
        "depolarizing" => Ok(NoiseKind::Depolarizing),
        "phase_flip" => Ok(NoiseKind::PhaseFlip),
        "bit_flip" => Ok(NoiseKind::BitFlip),
        _ => Err(format!("unknown noise kind: {s}")),
    }
}

fn parse_class(s: &str) -> Result<ClassLabel, String> {
    match s {
        "i" => Ok(ClassLabel::I),
        "x" => Ok(ClassLabel::X),
        "z" => Ok(ClassLabel::Z),
        "xz" => Ok(ClassLabel::XZ),
        _ => Err(format!("unknown class: {s}")),
    }
}

fn parse_syndrome_file(path: &PathBuf, n_faces: usize, n_vertices: usize) -> Result<Syndrome, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let mut read_bits = |n: usize, what: &str| -> Result<Vec<bool>, String> {
        let line = lines.next().ok_or_else(|| format!("missing {what} line"))?;
        let bits: Vec<bool> = line
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(format!("bad character {c:?} in {what} line")),
            })
            .collect::<Result<_, _>>()?;
        if bits.len() != n {
            return Err(format!("{what} line has {} bits, expected {n}", bits.len()));
        }
        Ok(bits)
    };
    let faces = read_bits(n_faces, "face")?;
    let vertices = read_bits(n_vertices, "vertex")?;
    let mut s = Syndrome {
        face_bits: isingdec::pauli::BitString::zeros(n_faces),
        vertex_bits: isingdec::pauli::BitString::zeros(n_vertices),
    };
    for (i, b) in faces.iter().enumerate() {
        s.face_bits.set(i, *b);
    }
    for (i, b) in vertices.iter().enumerate() {
        s.vertex_bits.set(i, *b);
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.cmd {
        Cmd::Decode(a) => {
            let noise = parse_noise(&a.noise)?;
            let method = Method::parse(&a.method).ok_or(format!("unknown method: {}", a.method))?;
            let code = build_surface_code(a.d).map_err(|e| e.to_string())?;
            println!(
                "# decode d={} noise={} p={} method={} seed={} sample_index={}",
                a.d, a.noise, a.p, a.method, cli.seed, a.sample_index
            );
            let (s, truth) = match &a.syndrome_file {
                Some(path) => {
                    (parse_syndrome_file(path, code.n_faces(), code.n_vertices())?, None)
                }
                None => {
                    let spec = NoiseSpec::new(noise, a.p, cli.seed).at(a.sample_index);
                    let e = sample_error(&code, &spec).map_err(|e| e.to_string())?;
                    let s = measure_syndrome(&code, &e).map_err(|e| e.to_string())?;
                    (s, Some(e))
                }
            };
            println!("defects: {} faces, {} vertices", s.face_bits.weight(), s.vertex_bits.weight());
            let r = decode(&code, &s, noise, method, &DecodeParams::default(), cli.seed)
                .map_err(|e| e.to_string())?;
            println!("chosen_class: {}", r.chosen_class.name());
            for (label, energy) in &r.class_energies {
                println!("energy[{}] = {energy}", label.name());
            }
            println!("iteration_of_best: {}", r.iteration_of_best);
            println!("wall_time_us: {:.1}", r.wall_time.as_secs_f64() * 1e6);
            if r.constraint_unsatisfied {
                println!("constraint_unsatisfied: true");
            }
            if let Some(e) = truth {
                let ok = isingdec::pipeline::judge(&code, &e, &s, &r).map_err(|e| e.to_string())?;
                println!("success: {ok}");
            }
            Ok(())
        }
        Cmd::Experiment { config } => {
            let text = fs::read_to_string(&config).map_err(|e| e.to_string())?;
            let mut cfg = ExperimentConfig::from_toml(&text).map_err(|e| e.to_string())?;
            if cli.workers != 0 {
                cfg.workers = cli.workers;
            }
            if let Some(out) = &cli.out {
                cfg.out_dir = Some(out.clone());
            }
            // echo the effective config so runs are auditable
            let effective = cfg.to_toml();
            println!("# effective config\n{effective}");
            if let Some(dir) = &cfg.out_dir {
                fs::create_dir_all(dir).map_err(|e| e.to_string())?;
                fs::write(dir.join("effective_config.toml"), &effective)
                    .map_err(|e| e.to_string())?;
            }
            let records = run_monte_carlo(&cfg).map_err(|e| e.to_string())?;
            for r in &records {
                println!("{}", r.csv_line());
            }
            if let Some(dir) = &cfg.out_dir {
                let files = emit_plots(&records, dir).map_err(|e| e.to_string())?;
                for f in files {
                    println!("wrote {}", f.display());
                }
            }
            Ok(())
        }
        Cmd::Threshold { csv, method } => {
            let method = Method::parse(&method).ok_or(format!("unknown method: {method}"))?;
            let records = read_records(&csv).map_err(|e| e.to_string())?;
            match estimate_threshold(&records, method).map_err(|e| e.to_string())? {
                Threshold::Bracket { per_pair, intersection } => {
                    for (ds, dl, lo, hi) in per_pair {
                        println!("pair d={ds}/d={dl}: bracket ({lo}, {hi})");
                    }
                    match intersection {
                        Some((lo, hi)) => println!("intersection: ({lo}, {hi})"),
                        None => println!("intersection: empty"),
                    }
                }
                Threshold::NoCrossing => println!("no crossing in grid"),
            }
            Ok(())
        }
        Cmd::OracleCheck { shots, p } => {
            let code = build_surface_code(3).map_err(|e| e.to_string())?;
            let params = DecodeParams {
                anneal: Some(AnnealSchedule::light(64, 30)),
                ..DecodeParams::default()
            };
            let mut energy_hits = 0u64;
            let mut class_hits = 0u64;
            for i in 0..shots {
                let spec = NoiseSpec::new(NoiseKind::Depolarizing, p, cli.seed).at(i);
                let e = sample_error(&code, &spec).map_err(|e| e.to_string())?;
                let s = measure_syndrome(&code, &e).map_err(|e| e.to_string())?;
                let r = decode(&code, &s, NoiseKind::Depolarizing, Method::SaUnconstrained, &params, i)
                    .map_err(|e| e.to_string())?;
                let all_min = r.class_energies.iter().all(|&(label, energy)| {
                    let w = isingdec::hamiltonian::depolarizing_weight_from_energy(
                        &code,
                        energy / params.j,
                    );
                    let (wmin, _) = min_weight_in_class(&code, &s, label).unwrap();
                    (w - wmin as f64).abs() < 1e-6
                });
                if all_min {
                    energy_hits += 1;
                }
                if r.chosen_class == exact_decode(&code, &s).map_err(|e| e.to_string())? {
                    class_hits += 1;
                }
            }
            println!("minimum-energy agreement: {energy_hits}/{shots}");
            println!("class agreement:          {class_hits}/{shots}");
            if energy_hits * 100 < shots * 95 {
                return Err("annealer missed the exact minimum too often".into());
            }
            Ok(())
        }
        Cmd::DumpQubo(a) => {
            let code = build_surface_code(a.d).map_err(|e| e.to_string())?;
            let noise = match a.model.as_str() {
                "single_x" => NoiseKind::BitFlip,
                "single_z" | "constrained" => NoiseKind::PhaseFlip,
                _ => NoiseKind::Depolarizing,
            };
            let spec = NoiseSpec::new(noise, a.p, cli.seed).at(a.sample_index);
            let e = sample_error(&code, &spec).map_err(|e| e.to_string())?;
            let s = measure_syndrome(&code, &e).map_err(|e| e.to_string())?;
            let params = DecodeParams::default();
            let label = parse_class(&a.class)?;
            let (model, alpha) = match a.model.as_str() {
                "depolarizing" => (
                    build_unconstrained_depolarizing(&code, &s, label).map_err(|e| e.to_string())?,
                    params.alpha,
                ),
                "single_x" => (
                    build_unconstrained_single(&code, &s, label, ErrorType::X)
                        .map_err(|e| e.to_string())?,
                    params.alpha,
                ),
                "single_z" => (
                    build_unconstrained_single(&code, &s, label, ErrorType::Z)
                        .map_err(|e| e.to_string())?,
                    params.alpha,
                ),
                "constrained" => (
                    build_constrained_z(&code, &s, params.constrained_j, params.constrained_h)
                        .map_err(|e| e.to_string())?,
                    params.constrained_alpha * params.constrained_j,
                ),
                other => return Err(format!("unknown model family: {other}")),
            };
            let qubo = reduce_to_qubo(&model, alpha).map_err(|e| e.to_string())?;
            match &a.file {
                Some(path) => {
                    let mut f = fs::File::create(path).map_err(|e| e.to_string())?;
                    qubo.dump(&mut f).map_err(|e| e.to_string())?;
                    println!("wrote {} ({} variables)", path.display(), qubo.n_vars);
                }
                None => {
                    let mut out = std::io::stdout();
                    qubo.dump(&mut out).map_err(|e| e.to_string())?;
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
