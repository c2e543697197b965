//! `fuzzycat`: run one computation or check on an instance document and
//! print a JSON report.
//!
//! Exit status: 0 ok, 1 check failed or proviso unmet, 2 input error,
//! 3 budget exceeded.

mod commands;
mod document;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzycat_core::Budget;
use serde_json::{json, Map, Value};

use crate::commands::Verdict;
use crate::document::Instance;
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "fuzzycat", version, about = "Finite residuated-lattice workbench")]
struct Cli {
    /// Instance document (JSON).
    #[arg(long, global = true)]
    doc: Option<PathBuf>,

    /// Largest number of fuzzy sets an exhaustive construction may enumerate.
    #[arg(long, global = true, env = "FUZZYCAT_BUDGET", default_value_t = fuzzycat_core::space::DEFAULT_BUDGET)]
    budget: u64,

    /// Add wall-clock time to the report under `timing_us`.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

/// Where a closure system, relation or operator comes from.
#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct SourceArgs {
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long)]
    pub relation: Option<String>,
    #[arg(long)]
    pub system: Option<String>,
}

/// A candidate by name, or a bare map with its two structures.
#[derive(Args, Debug, Clone, Default)]
pub struct MorphismArgs {
    #[arg(long, conflicts_with_all = ["map", "from", "to"])]
    pub cand: Option<String>,
    #[arg(long, requires_all = ["from", "to"])]
    pub map: Option<String>,
    /// Source structure: partition, relation or closure system name.
    #[arg(long)]
    pub from: Option<String>,
    /// Target structure: partition, relation or closure system name.
    #[arg(long)]
    pub to: Option<String>,
}

/// A map between two identity-indexed partitions.
#[derive(Args, Debug, Clone)]
pub struct AlgebraMapArgs {
    #[arg(long)]
    pub map: String,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the lattice and every named object.
    Validate,
    /// F-transform components and field of a fuzzy set.
    Ft {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        set: String,
    },
    /// Closure systems.
    Closure {
        #[command(subcommand)]
        which: ClosureCmd,
    },
    /// Closure operators.
    Operator {
        #[command(subcommand)]
        which: OperatorCmd,
    },
    /// Fuzzy relations.
    Relation {
        #[command(subcommand)]
        which: RelationCmd,
    },
    /// Graded morphism and homomorphism checks.
    Check {
        #[command(subcommand)]
        which: CheckCmd,
    },
    /// Object part of a functor between the categories.
    Functor {
        which: FunctorName,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Round-trip comparisons.
    Roundtrip {
        #[command(subcommand)]
        which: RoundtripCmd,
    },
    /// Products of partitions.
    Product {
        #[command(subcommand)]
        which: ProductCmd,
    },
    /// Observational diagnostics.
    Diagnostic {
        #[command(subcommand)]
        which: DiagnosticCmd,
    },
    /// Exhaustive law suites.
    Laws {
        #[command(subcommand)]
        which: LawsCmd,
    },
    /// Coalgebra of an identity-indexed partition.
    Coalg {
        #[arg(long)]
        partition: String,
    },
    /// Dialgebra of an identity-indexed partition.
    Dialg {
        #[arg(long)]
        partition: String,
    },
    /// Adjunction check between a coalgebra and a dialgebra.
    Adjunction(AlgebraMapArgs),
}

#[derive(Subcommand, Debug)]
#[allow(clippy::enum_variant_names)]
enum ClosureCmd {
    FromPartition {
        #[arg(long)]
        partition: String,
    },
    FromRelation {
        #[arg(long)]
        relation: String,
    },
    /// The system of the closure operator derived from the source.
    FromOperator(SourceArgs),
}

#[derive(Subcommand, Debug)]
enum OperatorCmd {
    FromSystem(SourceArgs),
}

#[derive(Subcommand, Debug)]
enum RelationCmd {
    FromSystem(SourceArgs),
    FromPartition {
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    Fp {
        #[arg(long)]
        cand: String,
    },
    Fas(MorphismArgs),
    Fcss(MorphismArgs),
    Fcs(MorphismArgs),
    CoaHom(AlgebraMapArgs),
    DiaHom(AlgebraMapArgs),
    Transfer {
        #[command(flatten)]
        map: AlgebraMapArgs,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },
    /// All six functor-chain inequalities for a candidate.
    Chain {
        #[arg(long)]
        cand: String,
    },
    /// Composite of two candidates with its certified bound.
    Compose {
        #[arg(long)]
        cand: String,
        #[arg(long)]
        then: String,
    },
}

#[derive(Subcommand, Debug)]
enum RoundtripCmd {
    F2(SourceArgs),
    F4(SourceArgs),
    CoaDia {
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand, Debug)]
enum ProductCmd {
    Fps {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Candidate into the left factor, paired with `--second`.
        #[arg(long, requires = "second")]
        first: Option<String>,
        #[arg(long, requires = "first")]
        second: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum DiagnosticCmd {
    IndexSquare {
        #[arg(long)]
        cand: String,
    },
}

#[derive(Subcommand, Debug)]
enum LawsCmd {
    Lattice,
    Ftransform {
        #[arg(long)]
        partition: String,
    },
    Closure(SourceArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FunctorName {
    F1,
    F2,
    F2inv,
    F3,
    F4,
    F4inv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum DirectionArg {
    CoaToDia,
    DiaToCoa,
}

fn source_args(s: &SourceArgs, out: &mut Map<String, Value>) {
    for (k, v) in [("partition", &s.partition), ("relation", &s.relation), ("system", &s.system)] {
        if let Some(v) = v {
            out.insert(k.into(), json!(v));
        }
    }
}

fn morphism_args(m: &MorphismArgs, out: &mut Map<String, Value>) {
    for (k, v) in [("cand", &m.cand), ("map", &m.map), ("from", &m.from), ("to", &m.to)] {
        if let Some(v) = v {
            out.insert(k.into(), json!(v));
        }
    }
}

fn algebra_args(a: &AlgebraMapArgs, out: &mut Map<String, Value>) {
    out.insert("map".into(), json!(a.map));
    out.insert("from".into(), json!(a.from));
    out.insert("to".into(), json!(a.to));
}

/// Command name and echoed arguments.
fn describe(cmd: &Command) -> (String, Map<String, Value>) {
    let mut args = Map::new();
    let name = match cmd {
        Command::Validate => "validate".to_string(),
        Command::Ft { partition, set } => {
            args.insert("partition".into(), json!(partition));
            args.insert("set".into(), json!(set));
            "ft".into()
        }
        Command::Closure { which } => match which {
            ClosureCmd::FromPartition { partition } => {
                args.insert("partition".into(), json!(partition));
                "closure from-partition".into()
            }
            ClosureCmd::FromRelation { relation } => {
                args.insert("relation".into(), json!(relation));
                "closure from-relation".into()
            }
            ClosureCmd::FromOperator(s) => {
                source_args(s, &mut args);
                "closure from-operator".into()
            }
        },
        Command::Operator {
            which: OperatorCmd::FromSystem(s),
        } => {
            source_args(s, &mut args);
            "operator from-system".into()
        }
        Command::Relation { which } => match which {
            RelationCmd::FromSystem(s) => {
                source_args(s, &mut args);
                "relation from-system".into()
            }
            RelationCmd::FromPartition { partition } => {
                args.insert("partition".into(), json!(partition));
                "relation from-partition".into()
            }
        },
        Command::Check { which } => match which {
            CheckCmd::Fp { cand } => {
                args.insert("cand".into(), json!(cand));
                "check fp".into()
            }
            CheckCmd::Fas(m) => {
                morphism_args(m, &mut args);
                "check fas".into()
            }
            CheckCmd::Fcss(m) => {
                morphism_args(m, &mut args);
                "check fcss".into()
            }
            CheckCmd::Fcs(m) => {
                morphism_args(m, &mut args);
                "check fcs".into()
            }
            CheckCmd::CoaHom(a) => {
                algebra_args(a, &mut args);
                "check coa-hom".into()
            }
            CheckCmd::DiaHom(a) => {
                algebra_args(a, &mut args);
                "check dia-hom".into()
            }
            CheckCmd::Transfer { map, direction } => {
                algebra_args(map, &mut args);
                args.insert(
                    "direction".into(),
                    json!(direction.to_possible_value().expect("not skipped").get_name()),
                );
                "check transfer".into()
            }
            CheckCmd::Chain { cand } => {
                args.insert("cand".into(), json!(cand));
                "check chain".into()
            }
            CheckCmd::Compose { cand, then } => {
                args.insert("cand".into(), json!(cand));
                args.insert("then".into(), json!(then));
                "check compose".into()
            }
        },
        Command::Functor { which, source } => {
            source_args(source, &mut args);
            format!("functor {}", which.to_possible_value().expect("not skipped").get_name())
        }
        Command::Roundtrip { which } => match which {
            RoundtripCmd::F2(s) => {
                source_args(s, &mut args);
                "roundtrip f2".into()
            }
            RoundtripCmd::F4(s) => {
                source_args(s, &mut args);
                "roundtrip f4".into()
            }
            RoundtripCmd::CoaDia { partition } => {
                args.insert("partition".into(), json!(partition));
                "roundtrip coa-dia".into()
            }
        },
        Command::Product {
            which: ProductCmd::Fps {
                left,
                right,
                first,
                second,
            },
        } => {
            args.insert("left".into(), json!(left));
            args.insert("right".into(), json!(right));
            if let (Some(a), Some(b)) = (first, second) {
                args.insert("first".into(), json!(a));
                args.insert("second".into(), json!(b));
            }
            "product fps".into()
        }
        Command::Diagnostic {
            which: DiagnosticCmd::IndexSquare { cand },
        } => {
            args.insert("cand".into(), json!(cand));
            "diagnostic index-square".into()
        }
        Command::Laws { which } => match which {
            LawsCmd::Lattice => "laws lattice".into(),
            LawsCmd::Ftransform { partition } => {
                args.insert("partition".into(), json!(partition));
                "laws ftransform".into()
            }
            LawsCmd::Closure(s) => {
                source_args(s, &mut args);
                "laws closure".into()
            }
        },
        Command::Coalg { partition } => {
            args.insert("partition".into(), json!(partition));
            "coalg".into()
        }
        Command::Dialg { partition } => {
            args.insert("partition".into(), json!(partition));
            "dialg".into()
        }
        Command::Adjunction(a) => {
            algebra_args(a, &mut args);
            "adjunction".into()
        }
    };
    (name, args)
}

fn dispatch(cmd: &Command, inst: &Instance, budget: Budget) -> Result<(Verdict, Value), CliError> {
    use commands as c;
    match cmd {
        Command::Validate => c::validate(inst),
        Command::Ft { partition, set } => c::ft(inst, partition, set),
        Command::Closure { which } => match which {
            ClosureCmd::FromPartition { partition } => c::closure(
                inst,
                &SourceArgs {
                    partition: Some(partition.clone()),
                    ..Default::default()
                },
                budget,
                false,
            ),
            ClosureCmd::FromRelation { relation } => c::closure(
                inst,
                &SourceArgs {
                    relation: Some(relation.clone()),
                    ..Default::default()
                },
                budget,
                false,
            ),
            ClosureCmd::FromOperator(s) => c::closure(inst, s, budget, true),
        },
        Command::Operator {
            which: OperatorCmd::FromSystem(s),
        } => c::operator(inst, s, budget),
        Command::Relation { which } => match which {
            RelationCmd::FromSystem(s) => c::relation_from_system_cmd(inst, s, budget),
            RelationCmd::FromPartition { partition } => c::relation_from_partition_cmd(inst, partition),
        },
        Command::Check { which } => match which {
            CheckCmd::Fp { cand } => c::check_fp(inst, cand, budget),
            CheckCmd::Fas(m) => c::check_fas(inst, m, budget),
            CheckCmd::Fcss(m) => c::check_fcss(inst, m, budget),
            CheckCmd::Fcs(m) => c::check_fcs(inst, m, budget),
            CheckCmd::CoaHom(a) => c::check_hom(inst, a, budget, false),
            CheckCmd::DiaHom(a) => c::check_hom(inst, a, budget, true),
            CheckCmd::Transfer { map, direction } => c::check_transfer(inst, map, *direction, budget),
            CheckCmd::Chain { cand } => c::check_chain(inst, cand, budget),
            CheckCmd::Compose { cand, then } => c::check_compose(inst, cand, then),
        },
        Command::Functor { which, source } => c::functor(inst, *which, source, budget),
        Command::Roundtrip { which } => match which {
            RoundtripCmd::F2(s) => c::roundtrip_f2(inst, s, budget),
            RoundtripCmd::F4(s) => c::roundtrip_f4(inst, s, budget),
            RoundtripCmd::CoaDia { partition } => c::roundtrip_coa_dia(inst, partition, budget),
        },
        Command::Product {
            which: ProductCmd::Fps {
                left,
                right,
                first,
                second,
            },
        } => c::product(inst, left, right, first.as_deref().zip(second.as_deref())),
        Command::Diagnostic {
            which: DiagnosticCmd::IndexSquare { cand },
        } => c::index_square(inst, cand),
        Command::Laws { which } => match which {
            LawsCmd::Lattice => c::laws_lattice(inst, budget),
            LawsCmd::Ftransform { partition } => c::laws_ftransform(inst, partition, budget),
            LawsCmd::Closure(s) => c::laws_closure(inst, s, budget),
        },
        Command::Coalg { partition } => c::algebra_table(inst, partition, budget, false),
        Command::Dialg { partition } => c::algebra_table(inst, partition, budget, true),
        Command::Adjunction(a) => c::adjunction(inst, a, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let budget = Budget::new(cli.budget);
    let (name, args) = describe(&cli.command);

    let outcome = match &cli.doc {
        None => Err(CliError::Input("--doc is required".into())),
        Some(path) => Instance::load(path, budget).and_then(|inst| dispatch(&cli.command, &inst, budget)),
    };

    let mut report = Map::new();
    report.insert("command".into(), json!(name));
    report.insert("args".into(), Value::Object(args));
    report.insert("budget".into(), json!(cli.budget));
    let code = match outcome {
        Ok((verdict, result)) => {
            report.insert("verdict".into(), json!(verdict.as_str()));
            report.insert("result".into(), result);
            verdict.exit_code()
        }
        Err(e) => {
            eprintln!("fuzzycat: {e}");
            report.insert("verdict".into(), json!(e.verdict()));
            report.insert("error".into(), json!(e.to_string()));
            e.exit_code()
        }
    };
    if cli.timing {
        report.insert("timing_us".into(), json!(started.elapsed().as_micros() as u64));
    }
    let mut out = std::io::stdout().lock();
    let text = serde_json::to_string_pretty(&Value::Object(report)).expect("reports serialize");
    if writeln!(out, "{text}").is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
