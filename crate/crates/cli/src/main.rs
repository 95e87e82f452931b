use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lexiring::lexspace::DEFAULT_CAP;
use lexiring::order::OrderSpec;
use lexiring::pipeline::{OracleKind, OrderReport, PipelineError, RingReport, RunConfig};
use lexiring::{registry, FiniteRing, IdealLattice};

/// Lexicographic codes over finite principal left ideal rings.
#[derive(Parser)]
#[command(name = "lexiring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a ring with its principal left ideals.
    RingInfo {
        /// Ring descriptor: zmod:M, gf:Q, chain:Q,E or mat:K,Q.
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print an order on a ring and whether it is respectful.
    OrderInfo {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "respectful:auto")]
        order: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the greedy construction.
    Run(RunArgs),
    /// Reproduce a registered example, or `all`.
    Reproduce { id: String },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    ring: String,
    /// natural, respectful:auto, respectful:auto,zero_min or explicit:e0<e1<...
    #[arg(long, default_value = "respectful:auto")]
    order: String,
    /// standard, reverse or a comma-separated vector list.
    #[arg(long, default_value = "standard")]
    basis: String,
    #[arg(long)]
    n: usize,
    /// Property expression, e.g. "lee>=2 zero:false".
    #[arg(long)]
    prop: String,
    /// Comma-separated generators of the nonzero principal left ideals.
    #[arg(long)]
    gamma: Option<String>,
    /// Named code for `member:` atoms, as NAME=v1,v2,...
    #[arg(long = "code", value_name = "NAME=VECTORS")]
    codes: Vec<String>,
    /// Oracle checks to attach: a comma-separated list or `all`.
    #[arg(long)]
    oracle: Option<String>,
    /// Exit with status 4 when an attached oracle reports a violation.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    allow_unrespectful: bool,
    #[arg(long)]
    allow_nonmultiplicative: bool,
    /// Accept `selfdot` over a noncommutative ring.
    #[arg(long)]
    allow_noncommutative_selfdot: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest ambient size |R|^n.
    #[arg(long, env = "LEXIRING_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn fail(e: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn pipeline_fail(e: PipelineError) -> ExitCode {
    let code = e.exit_code() as u8;
    fail(e, code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::RingInfo { spec, format } => match RingReport::new(&spec) {
            Ok(r) => {
                match format {
                    Format::Table => print!("{}", r.to_table()),
                    Format::Json => println!("{}", r.to_json()),
                }
                ExitCode::SUCCESS
            }
            Err(e) => pipeline_fail(e),
        },
        Command::OrderInfo { ring, order, format } => order_info(&ring, &order, format),
        Command::Run(args) => run(args),
        Command::Reproduce { id } => reproduce(&id),
    }
}

fn order_info(ring: &str, order: &str, format: Format) -> ExitCode {
    let built = FiniteRing::from_spec(ring)
        .map_err(PipelineError::from)
        .and_then(|r| {
            let l = IdealLattice::new(&r)?;
            let o = OrderSpec::parse(order)?.build(&r, &l)?;
            Ok(OrderReport::new(&r, &o))
        });
    match built {
        Ok(report) => {
            match format {
                Format::Table => {
                    println!("order      {}", report.sequence.join("<"));
                    println!("respectful {:?}", report.respectful);
                    if let Some((a, b)) = &report.witness {
                        println!("witness    ({a}, {b})");
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializes")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => pipeline_fail(e),
    }
}

fn run(args: RunArgs) -> ExitCode {
    let mut cfg = RunConfig::new(&args.ring, args.n, &args.prop).order(&args.order).basis(&args.basis);
    cfg.gamma = args.gamma;
    cfg.allow_unrespectful = args.allow_unrespectful;
    cfg.allow_nonmultiplicative = args.allow_nonmultiplicative;
    cfg.allow_noncommutative_selfdot = args.allow_noncommutative_selfdot;
    cfg.cap = args.cap;
    for c in &args.codes {
        match RunConfig::parse_code_arg(c) {
            Ok(pair) => cfg.codes.push(pair),
            Err(e) => return pipeline_fail(e),
        }
    }
    if let Some(list) = &args.oracle {
        match OracleKind::parse_list(list) {
            Ok(o) => cfg.oracles = o,
            Err(e) => return pipeline_fail(e),
        }
    }
    let out = match cfg.execute() {
        Ok(out) => out,
        Err(e) => return pipeline_fail(e),
    };
    let report = out.report();
    match args.format {
        Format::Table => print!("{}", report.to_table()),
        Format::Json => println!("{}", report.to_json()),
    }
    if args.strict && out.any_violation() {
        eprintln!("error: an oracle reported a violation");
        return ExitCode::from(4);
    }
    ExitCode::SUCCESS
}

fn reproduce(id: &str) -> ExitCode {
    let outcomes = if id == "all" {
        registry::reproduce_all()
    } else {
        match registry::reproduce(id) {
            Ok(o) => vec![o],
            Err(e) => return fail(e, 2),
        }
    };
    let mut passed = 0;
    for o in &outcomes {
        println!("{:<5} {}  {}", o.id, if o.passed() { "pass" } else { "FAIL" }, o.title);
        if o.passed() {
            passed += 1;
        } else {
            print!("{}", o.diff());
        }
    }
    println!("{passed}/{} pass", outcomes.len());
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
