use std::collections::BTreeSet;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use betweenness::eval::{eval, Assignment, EvalBudget};
use betweenness::formulas::{self, FrameKind};
use betweenness::frame::{
    build_frame, check_torus_isomorphism, find_torus_isomorphism, make_reduction_sentence, name_map, reduce_end_to_end,
};
use betweenness::interpret::{parse_interpretation, Interpretation};
use betweenness::logic::{is_set_name, parse_formula, parse_formula_with_sets, print_formula, Formula, Vocabulary};
use betweenness::structure::{load_structure, write_structure};
use betweenness::tiling::{load_tileset, solve_bounded_grid, solve_periodic, solve_torus};

#[derive(Parser)]
#[command(name = "betweenness", version, about = "Betweenness structures, interpretations and tiling reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an m x n frame and write it as a structure file.
    Frame {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Apply an interpretation to a structure.
    Interpret {
        #[arg(long)]
        structure: String,
        #[arg(long, value_enum, default_value = "finite")]
        kind: Kind,
        /// Interpretation file; the frame interpretation of `--kind` when absent.
        #[arg(long)]
        interp: Option<String>,
        #[arg(long)]
        out: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check that a structure is the m x n torus.
    Iso {
        #[arg(long)]
        a: String,
        /// `builtin:torus:MxN`.
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "expected")]
        map: MapMode,
    },
    /// Compare the logical reduction with the tiling solver for every torus up to the bound.
    Reduce {
        #[arg(long)]
        tiles: String,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        summary: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a named formula.
    Gen(GenArgs),
    /// Tiling solvers.
    Tile {
        #[command(subcommand)]
        command: TileCommand,
    },
    /// Evaluate a formula on a structure.
    Eval {
        #[arg(long)]
        structure: String,
        /// The formula, or `@path` to read it from a file.
        #[arg(long)]
        formula: String,
        /// `x=elem` for element variables, `X=a,b,c` for set variables.
        #[arg(long)]
        assign: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum TileCommand {
    Solve {
        #[arg(long)]
        tiles: String,
        #[arg(long, conflicts_with_all = ["grid", "periodic"])]
        torus: Option<String>,
        #[arg(long, conflicts_with = "periodic")]
        grid: Option<String>,
        #[arg(long, requires = "bound")]
        periodic: bool,
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = EvalBudget::default().max_set_domain)]
    max_set_domain: usize,
}

impl BudgetArgs {
    fn budget(&self) -> EvalBudget {
        EvalBudget { max_set_domain: self.max_set_domain, ..EvalBudget::default() }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Finite,
    Infinite,
}

impl From<Kind> for FrameKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Finite => FrameKind::Finite,
            Kind::Infinite => FrameKind::Infinite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapMode {
    Expected,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Collinear,
    Parallel,
    Basis,
    Flat,
    Opentriangle,
    Finiteness,
    Omega,
    FrameFormulas,
    FrameSentence,
    Wmso2mso,
    Reduction,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    what: What,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_enum, default_value = "finite")]
    kind: Kind,
    #[arg(long, default_value = "P")]
    pred: String,
    /// Input formula for `wmso2mso` (text or `@path`) over `beta` and `--pred`.
    #[arg(long)]
    formula: Option<String>,
    /// Tile file for `reduction`.
    #[arg(long)]
    tiles: Option<String>,
}

fn size(text: &str) -> Result<(usize, usize)> {
    let (m, n) = text.split_once('x').with_context(|| format!("expected MxN, got `{text}`"))?;
    Ok((m.parse()?, n.parse()?))
}

fn read_arg(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(text.to_string()),
    }
}

fn emit(out: Option<&str>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: &GenArgs) -> Result<String> {
    let kind = FrameKind::from(args.kind);
    let one = |f: Formula| format!("{}\n", print_formula(&f));
    Ok(match args.what {
        What::Collinear => one(formulas::make_collinear()),
        What::Parallel => one(formulas::make_parallel()),
        What::Basis => one(formulas::make_basis_and_flat(args.k).0),
        What::Flat => one(formulas::make_basis_and_flat(args.k).1),
        What::Opentriangle => one(formulas::make_opentriangle(args.k)?),
        What::Finiteness => one(formulas::make_finiteness_sentence(args.n, &args.pred)?),
        What::Omega => one(formulas::omega_sequence_sentence(&args.pred)),
        What::FrameFormulas => {
            let f = formulas::frame_formulas(kind);
            [("end_P(x)", &f.end_p), ("end_Q(x)", &f.end_q), ("dom(u)", &f.dom), ("H(u,v)", &f.h), ("V(u,v)", &f.v)]
                .iter()
                .map(|(name, g)| format!("{name}: {}\n", print_formula(g)))
                .collect()
        }
        What::FrameSentence => one(formulas::frame_class_sentence(kind)),
        What::Wmso2mso => {
            let text = match &args.formula {
                Some(f) => read_arg(f)?,
                None => format!("Ew X. A x. X(x) -> {}(x)", args.pred),
            };
            let voc = Vocabulary::new().with_relation("beta", 3)?.with_set(&args.pred)?;
            let f = parse_formula(&text, &voc)?;
            one(formulas::weak_to_strong(&f, args.n)?)
        }
        What::Reduction => {
            let tiles = load_tileset(args.tiles.as_deref().context("--tiles is required for reduction")?)?;
            one(make_reduction_sentence(&tiles, kind))
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Frame { m, n, out } => {
            let f = build_frame(m, n)?;
            emit(out.as_deref(), &write_structure(&f.structure))?;
        }
        Command::Interpret { structure, kind, interp, out, budget } => {
            let s = load_structure(&structure)?;
            let i = match interp {
                Some(path) => {
                    parse_interpretation(&std::fs::read_to_string(&path).with_context(|| format!("reading {path}"))?)?
                }
                None => Interpretation::frame(kind.into()),
            };
            let t = i.induced_structure(&s, &budget.budget())?;
            emit(out.as_deref(), &write_structure(&t))?;
        }
        Command::Iso { a, b, map } => {
            let s = load_structure(&a)?;
            let spec =
                b.strip_prefix("builtin:torus:").with_context(|| format!("expected builtin:torus:MxN, got `{b}`"))?;
            let (m, n) = size(spec)?;
            let chosen = match map {
                MapMode::Expected => name_map(m, n),
                MapMode::Search => match find_torus_isomorphism(&s, m, n) {
                    Some(found) => found,
                    None => {
                        println!("isomorphic: false (no map found)");
                        return Ok(ExitCode::FAILURE);
                    }
                },
            };
            let report = check_torus_isomorphism(&s, m, n, &chosen);
            match report.diagnostic {
                None => println!("isomorphic: true"),
                Some(d) => println!("isomorphic: false ({d})"),
            }
            if !report.ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Reduce { tiles, bound, summary, budget } => {
            if bound == 0 {
                bail!("--bound must be at least 1");
            }
            let s = load_tileset(&tiles)?;
            let report = reduce_end_to_end(&s, bound, &budget.budget())?;
            print!("{}", report.render());
            if let Some(path) = summary {
                std::fs::write(&path, report.summary()).with_context(|| format!("writing {path}"))?;
            }
            if !report.agreement {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Gen(args) => print!("{}", gen(&args)?),
        Command::Tile { command: TileCommand::Solve { tiles, torus, grid, periodic, bound } } => {
            let s = load_tileset(&tiles)?;
            let (found, m, n) = if let Some(t) = torus {
                let (m, n) = size(&t)?;
                (solve_torus(&s, m, n), m, n)
            } else if let Some(g) = grid {
                let (m, n) = size(&g)?;
                (solve_bounded_grid(&s, m, n), m, n)
            } else if periodic {
                let bound = bound.expect("clap requires --bound");
                match solve_periodic(&s, bound) {
                    Some((m, n, c)) => (Some(c), m, n),
                    None => {
                        println!("no torus up to {bound}x{bound}");
                        return Ok(ExitCode::FAILURE);
                    }
                }
            } else {
                bail!("one of --torus, --grid or --periodic is required");
            };
            match found {
                Some(c) => print!("tilable {m}x{n}\n{}", c.render(m, n)),
                None => {
                    println!("not tilable {m}x{n}");
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Eval { structure, formula, assign, budget } => {
            let s = load_structure(&structure)?;
            let mut a = Assignment::new();
            let mut set_vars = BTreeSet::new();
            for item in &assign {
                let (var, value) = item.split_once('=').with_context(|| format!("expected var=value, got `{item}`"))?;
                if is_set_name(var) {
                    set_vars.insert(var.to_string());
                    a = a.with_set(var, value.split(',').filter(|v| !v.is_empty()));
                } else {
                    a = a.with(var, value);
                }
            }
            let sets: Vec<&str> = set_vars.iter().map(String::as_str).collect();
            let f = parse_formula_with_sets(&read_arg(&formula)?, &s.vocabulary(), &sets)?;
            println!("{}", eval(&s, &f, &a, &budget.budget())?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
