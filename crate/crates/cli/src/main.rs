use std::path::PathBuf;
use std::process::ExitCode;

use binwords::{CheckReport, FamilySpec, DEFAULT_TRUNCATION};
use binwords_cli::{
    cmd_oeis, cmd_seq, cmd_table, cmd_verify, family, oeis_exit_code, BFileSource, FamilyKind,
    Format, OeisOptions, DEFAULT_OEIS_BASE_URL,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "binwords", version, about = "Convolution triangles, invert transforms and restricted-word checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Initial family f_0
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Parameter for the row and diagonal families
    #[arg(long)]
    a: Option<u32>,
    /// Values file for the custom family (one integer per line)
    #[arg(long)]
    custom: Option<PathBuf>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, binwords::Error> {
        family(self.family, self.a, self.custom.as_deref())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print f_m(1..=n-max)
    Seq {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the c_m(n, k) triangle
    Table {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and emit a JSON report
    Verify {
        /// closed-forms, identities, words, paths, lifts or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override every size bound of the selected suites
        #[arg(long)]
        n_max: Option<usize>,
        /// Run independent groups of cases concurrently
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare f_m with an OEIS b-file
    Oeis {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// A-number, looked up in --fixtures, the vendored set, or online with --fetch
        #[arg(long, conflicts_with = "bfile")]
        anum: Option<String>,
        /// Local b-file path
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Allow network access
        #[arg(long)]
        fetch: bool,
        #[arg(long, env = "OEIS_BASE_URL", default_value = DEFAULT_OEIS_BASE_URL)]
        base_url: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summarize(report: &CheckReport) {
    let s = report.summary;
    eprintln!(
        "{}: {} pass, {} fail, {} skip",
        report.suite, s.pass, s.fail, s.skip
    );
}

fn run(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Seq { fam, m, n_max, format, out } => {
            emit(&cmd_seq(&fam.spec()?, m, n_max, format)?, out.as_ref())?;
            Ok(0)
        }
        Command::Table { fam, m, n_max, format, out } => {
            emit(&cmd_table(&fam.spec()?, m, n_max, format)?, out.as_ref())?;
            Ok(0)
        }
        Command::Verify { suite, n_max, parallel, out } => {
            let report = cmd_verify(&suite, n_max, parallel)?;
            emit(&(report.to_json() + "\n"), out.as_ref())?;
            summarize(&report);
            Ok(report.exit_code())
        }
        Command::Oeis {
            fam,
            m,
            n_max,
            anum,
            bfile,
            fixtures,
            fetch,
            base_url,
            out,
        } => {
            let source = match (anum, bfile) {
                (_, Some(p)) => BFileSource::Path(p),
                (Some(a), None) => BFileSource::ANumber(a),
                (None, None) => return Err("one of --anum or --bfile is required".into()),
            };
            let opts = OeisOptions {
                fixtures,
                fetch,
                base_url: Some(base_url),
            };
            let report = cmd_oeis(&fam.spec()?, m, n_max, &source, &opts)?;
            emit(&(report.to_json() + "\n"), out.as_ref())?;
            summarize(&report);
            Ok(oeis_exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
