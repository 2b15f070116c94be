use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use descartes_dbz::cli::{
    cmd_classify, cmd_family, cmd_render, cmd_solve, cmd_verify, CliError, Figure, Mode, Overrides, RenderTarget,
    SceneDescription, EXIT_BAD_INPUT, EXIT_IO,
};
use descartes_dbz::Branch;

#[derive(Parser)]
#[command(name = "descartes-dbz", version, about = "Fourth tangent circles for circles, lines and point circles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct SceneArgs {
    /// Scene JSON file; `-` or nothing reads stdin.
    scene: Option<PathBuf>,
    #[arg(long, value_parser = parse_branch)]
    branch: Option<Branch>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the fourth circle of a tangent triple.
    Solve(SceneArgs),
    /// Print the configuration class of a tangent triple.
    Classify(SceneArgs),
    /// Run the tangency oracle on every pair of circles.
    Verify(SceneArgs),
    /// Sample the fourth-circle family of the arbelos at the given w.
    Family {
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        r2: f64,
        #[arg(long = "w", required = true, num_args = 1.., allow_negative_numbers = true)]
        w: Vec<f64>,
        #[arg(long, value_enum, default_value = "float")]
        mode: Mode,
        #[arg(long, default_value_t = descartes_dbz::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Render fig1, fig2, fig3 or a scene file to SVG.
    Render {
        /// `fig1`, `fig2`, `fig3`, or a scene JSON path.
        target: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        r1: Option<f64>,
        #[arg(long)]
        r2: Option<f64>,
        #[arg(long, value_parser = parse_branch)]
        branch: Option<Branch>,
    },
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    match s {
        "plus" => Ok(Branch::Plus),
        "minus" => Ok(Branch::Minus),
        other => Err(format!("expected plus or minus, got {other:?}")),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) if p == Path::new("-") => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
    }
    .map_err(|e| CliError::new(EXIT_IO, format!("cannot read input: {e}")))?;
    Ok(text)
}

fn load_scene(args: &SceneArgs) -> Result<SceneDescription, CliError> {
    let text = read_input(args.scene.as_deref())?;
    let overrides = Overrides { branch: args.branch, tolerance: args.tol, mode: args.mode, order: args.order };
    SceneDescription::parse(&text, &overrides)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(args) => {
            print!("{}", cmd_solve(&load_scene(&args)?)?);
            Ok(0)
        }
        Command::Classify(args) => {
            print!("{}", cmd_classify(&load_scene(&args)?)?);
            Ok(0)
        }
        Command::Verify(args) => {
            let (text, code) = cmd_verify(&load_scene(&args)?);
            print!("{text}");
            Ok(code)
        }
        Command::Family { r1, r2, w, mode, tol } => {
            let (text, code) = cmd_family(r1, r2, &w, mode, tol)?;
            print!("{text}");
            Ok(code)
        }
        Command::Render { target, out, r1, r2, branch } => {
            if let Some(figure) = Figure::from_name(&target) {
                let (d1, d2) = figure.default_radii();
                let target = RenderTarget::Figure { figure, r1: r1.unwrap_or(d1), r2: r2.unwrap_or(d2) };
                cmd_render(&target, &out)?;
            } else if target.ends_with(".json") {
                let args = SceneArgs { scene: Some(PathBuf::from(&target)), branch, tol: None, mode: None, order: None };
                cmd_render(&RenderTarget::Scene(&load_scene(&args)?), &out)?;
            } else {
                return Err(CliError::new(EXIT_BAD_INPUT, format!("unknown figure {target:?}")));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_BAD_INPUT as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
