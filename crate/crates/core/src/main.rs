use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use f4moufang::parse::parse_instance;
use f4moufang::validate::validate;
use f4moufang::verify::{run, Format, Suite, SuiteConfig};
use f4moufang::{Eq3Slot, FieldInstance};

#[derive(Parser)]
#[command(
    name = "f4verify",
    about = "Seeded checks of the F4 quadrangle, its Moufang set and the sphere geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 100, global = true)]
    samples: usize,
    #[arg(long, default_value_t = 3, global = true)]
    max_degree: usize,
    /// Instance file with `delta`, `phiE`, `beta` and `alpha`.
    #[arg(long, global = true)]
    instance: Option<PathBuf>,
    #[arg(long, default_value = "3", value_parser = ["2", "3"], global = true)]
    eq3_slot: String,
    /// Instance failures and printed-formula checks do not affect the exit status.
    #[arg(long, global = true)]
    survey: bool,
    #[arg(long, value_enum, default_value_t = OutFormat::Text, global = true)]
    format: OutFormat,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    VerifyAll,
    VerifyFields,
    VerifyRootGroups,
    VerifyQuadrangle,
    VerifyMoufang,
    VerifyAppendices,
    VerifyReconstruction,
}

#[derive(ValueEnum, Clone, Copy)]
enum OutFormat {
    Text,
    Jsonl,
}

fn load(path: &Option<PathBuf>) -> Result<FieldInstance, String> {
    let Some(p) = path else {
        return Ok(FieldInstance::default());
    };
    let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", p.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let instance = match load(&cli.instance) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let v = validate(&instance, cli.seed, cli.samples, cli.max_degree);
    if !v.passed() {
        for f in v.failures() {
            eprintln!("instance: {}: {}", f.name, f.detail);
        }
        if !cli.survey {
            return ExitCode::from(2);
        }
    }
    let suites = match cli.command {
        Command::VerifyAll => Suite::ALL.to_vec(),
        Command::VerifyFields => vec![Suite::Fields],
        Command::VerifyRootGroups => vec![Suite::RootGroups],
        Command::VerifyQuadrangle => vec![Suite::Quadrangle],
        Command::VerifyMoufang => vec![Suite::Moufang],
        Command::VerifyAppendices => vec![Suite::Appendices],
        Command::VerifyReconstruction => vec![Suite::Reconstruction],
    };
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples: cli.samples,
        max_degree: cli.max_degree,
        suites,
        eq3_slot: if cli.eq3_slot == "2" {
            Eq3Slot::Two
        } else {
            Eq3Slot::Three
        },
        survey: cli.survey,
        instance,
    };
    let report = run(&cfg);
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Jsonl => Format::Jsonl,
    };
    print!("{}", report.emit(format, true));
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
