//! Argument surface and command execution for the `loday` binary.
//!
//! Exit codes: `0` — every requested check or precondition holds;
//! `2` — some axiom or precondition is violated (the report says
//! which, with a counterexample); `1` — usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use loday_core::affine::leibniz_grid_check;
use loday_core::construct::{
    adjoint_rep, adjoint_split_rep, derivation_product_unchecked, double_structures_apl_unchecked,
    double_structures_pre_unchecked, dual_apl_rep, dual_leibniz_rep, gd_from_averaging_unchecked,
    gd_from_novikov_di_unchecked, levi_civita, levi_civita_from_cocycle_unchecked, minus2_transform,
    omega_p, perm_to_leibniz_unchecked, plus2_transform, pre_from_transformed, semidirect_apl,
    semidirect_leibniz, transformed_from_pre, OperatorMode,
};
use loday_core::identity::check_system;
use loday_core::registry::registry;
use loday_core::{AlgebraBundle, RepBundle, SplitFlavor, SplitPair};

use crate::bind::{self, Binding};
use crate::catalog;
use crate::error::CliError;
use crate::json;
use crate::report::{Report, Verdict, EXIT_HOLDS, EXIT_VIOLATED};
use crate::suite;

/// Exact checker and constructor for Leibniz-type algebras over the
/// rationals.
#[derive(Debug, Parser)]
#[command(name = "loday", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity system against a bundle of structure constants.
    ///
    /// Prints a JSON report with a verdict per system; a failing verdict
    /// carries the first counterexample in deterministic order. Exits 0
    /// when the system holds, 2 when it is violated.
    Check(CheckArgs),
    /// Build a derived structure from a bundle and write it out.
    ///
    /// Every construction validates its mathematical preconditions
    /// first and refuses (exit 2) when they fail; --force skips the
    /// validation and records that in the report.
    Construct(ConstructArgs),
    /// Replay a seeded verification suite.
    ///
    /// Suites pit independently computed sides of one structural fact
    /// against each other on fixed and seeded random instances. Exits 0
    /// only if every instance agrees. Same seed, same bytes.
    VerifyTheorem(VerifyArgs),
    /// Built-in example bundles.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Identity system name from the registry, or "affinized-leibniz"
    /// for the degree-window product check.
    #[arg(long)]
    pub system: String,
    /// Path to the input bundle (interchange JSON).
    #[arg(long)]
    pub input: String,
    /// Comma-separated bundle product names bound to the system's
    /// product slots, in the system's slot order.
    #[arg(long, value_delimiter = ',')]
    pub products: Option<Vec<String>>,
    /// Bundle form name bound to the system's form slot.
    #[arg(long)]
    pub form: Option<String>,
    /// Bundle map name bound to the system's map slot.
    #[arg(long)]
    pub map: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepChoice {
    /// Multiplication operators of the structure on itself.
    Adjoint,
    /// The dual of the adjoint, acting on the dual space.
    Coadjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeChoice {
    /// `P(x)·P(y) = P(P(x)·y) = P(x·P(y))`.
    Averaging,
    /// `P(x·y) = P(x)·y + x·P(y)`, with the weight built in.
    Derivation,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Construction name; one of: levi-civita, levi-civita-from-cocycle,
    /// minus2-transform, plus2-transform, pre-from-transformed,
    /// transformed-from-pre, sub-adjacent, double-apl, double-pre,
    /// gd-from-novikov-di, gd-from-averaging, derivation-product,
    /// perm-to-leibniz, semidirect-leibniz, semidirect-apl.
    #[arg(long)]
    pub op: String,
    /// Path to the input bundle (interchange JSON), using canonical
    /// slot names (circ, succ/prec, vdash/dashv, rhd/lhd, bracket/ast,
    /// star, omega, p).
    #[arg(long)]
    pub input: String,
    /// Path the constructed bundle is written to.
    #[arg(long)]
    pub output: String,
    /// Skip precondition validation; the report records the skip.
    #[arg(long)]
    pub force: bool,
    /// Seed echoed into the report (reserved for randomized
    /// constructions; current constructions are deterministic).
    #[arg(long, env = "LODAY_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Representation used by the semidirect constructions.
    #[arg(long, value_enum, default_value_t = RepChoice::Adjoint)]
    pub rep: RepChoice,
    /// Operator mode for perm-to-leibniz.
    #[arg(long, value_enum)]
    pub mode: Option<ModeChoice>,
    /// Bundle map name consumed by map-based constructions.
    #[arg(long, default_value = "p")]
    pub map: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite id; one of: thm-2-12, thm-2-14, prop-2-9, prop-2-16,
    /// prop-2-22, prop-3-5, prop-3-6, prop-3-7, prop-3-9, prop-3-10,
    /// prop-3-13.
    pub suite: String,
    /// Seed for the instance stream.
    #[arg(long, env = "LODAY_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Number of seeded random instances per suite.
    #[arg(long, default_value_t = 100)]
    pub samples: u32,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List catalog entries with one-line notes.
    List,
    /// Print one catalog entry as interchange JSON.
    Emit { name: String },
}

/// Executes a parsed command, printing to stdout, and returns the
/// process exit code.
///
/// # Errors
///
/// Usage and input problems ([`CliError`]); mathematically negative
/// outcomes are reported through the exit code instead.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Check(args) => run_check(&args),
        Command::Construct(args) => run_construct(&args),
        Command::VerifyTheorem(args) => run_verify(&args),
        Command::Catalog { action } => run_catalog(&action),
    }
}

fn load_bundle(path: &str) -> Result<AlgebraBundle, CliError> {
    json::parse_bundle(&CliError::read(path)?)
}

// -------------------------------------------------------------------
// check
// -------------------------------------------------------------------

/// Slots of the degree-window check, in binding order.
const AFFINIZED_SLOTS: [&str; 3] = ["circ", "dashv", "vdash"];

fn run_check(args: &CheckArgs) -> Result<i32, CliError> {
    let bundle = load_bundle(&args.input)?;
    let mut command = format!("check --system {} --input {}", args.system, args.input);
    if let Some(products) = &args.products {
        command.push_str(&format!(" --products {}", products.join(",")));
    }
    if let Some(form) = &args.form {
        command.push_str(&format!(" --form {form}"));
    }
    if let Some(map) = &args.map {
        command.push_str(&format!(" --map {map}"));
    }

    let report = if args.system == "affinized-leibniz" {
        if args.form.is_some() || args.map.is_some() {
            return Err(CliError::InvalidInput(
                "affinized-leibniz takes no form or map binding".to_owned(),
            ));
        }
        let mut bound = bundle.clone();
        if let Some(products) = &args.products {
            if products.len() != AFFINIZED_SLOTS.len() {
                return Err(CliError::InvalidInput(format!(
                    "affinized-leibniz takes {} products ({}), got {}",
                    AFFINIZED_SLOTS.len(),
                    AFFINIZED_SLOTS.join(", "),
                    products.len()
                )));
            }
            for (slot, name) in AFFINIZED_SLOTS.iter().zip(products) {
                let table = bundle.product(name).map_err(CliError::Core)?.clone();
                bound.insert_product(slot, table).map_err(CliError::Core)?;
            }
        }
        leibniz_grid_check(&bound).map_err(CliError::Core)?
    } else {
        let system = registry(&args.system).map_err(CliError::Core)?;
        let binding = Binding {
            products: args
                .products
                .as_ref()
                .map(|names| names.iter().map(String::as_str).collect()),
            form: args.form.as_deref(),
            map: args.map.as_deref(),
        };
        let bound = bind::apply(&bundle, &system, &binding)?;
        check_system(&system, &bound).map_err(CliError::Core)?
    };

    let report = Report::new(
        command,
        vec![Verdict::from_check(&args.system, &report)],
    );
    print!("{}", report.render());
    Ok(report.exit_code)
}

// -------------------------------------------------------------------
// construct
// -------------------------------------------------------------------

/// A precondition to validate before constructing.
enum Pre<'a> {
    /// Run a registry system against the input bundle.
    System(&'a str),
    /// Run a registry system with the chosen map bound to `p`.
    SystemWithMap(&'a str, &'a str),
    /// A named boolean condition, already decided.
    Flag(&'a str, bool),
}

impl Pre<'_> {
    fn target(&self) -> String {
        match self {
            Pre::System(name) => format!("precondition: {name}"),
            Pre::SystemWithMap(name, map) => format!("precondition: {name} map={map}"),
            Pre::Flag(name, _) => format!("precondition: {name}"),
        }
    }

    fn verdict(&self, bundle: &AlgebraBundle) -> Result<Verdict, CliError> {
        match self {
            Pre::System(name) => {
                let system = registry(name).map_err(CliError::Core)?;
                let report = check_system(&system, bundle).map_err(CliError::Core)?;
                Ok(Verdict::from_check(&self.target(), &report))
            }
            Pre::SystemWithMap(name, map) => {
                let system = registry(name).map_err(CliError::Core)?;
                let bound = bind::apply(bundle, &system, &Binding::of_map(map))?;
                let report = check_system(&system, &bound).map_err(CliError::Core)?;
                Ok(Verdict::from_check(&self.target(), &report))
            }
            Pre::Flag(_, holds) => Ok(Verdict::flag(&self.target(), *holds)),
        }
    }
}

fn split_pair_from(
    bundle: &AlgebraBundle,
    flavor: SplitFlavor,
) -> Result<SplitPair, CliError> {
    let (first_slot, second_slot) = flavor.slot_names();
    let first = bundle.product(first_slot).map_err(CliError::Core)?.clone();
    let second = bundle.product(second_slot).map_err(CliError::Core)?.clone();
    SplitPair::new(flavor, first, second).map_err(CliError::Core)
}

fn chosen_rep_for_table(
    bundle: &AlgebraBundle,
    rep: RepChoice,
) -> Result<(loday_core::MultTable, RepBundle), CliError> {
    let table = bundle.product("circ").map_err(CliError::Core)?.clone();
    let adjoint = adjoint_rep(&table);
    let rep = match rep {
        RepChoice::Adjoint => adjoint,
        RepChoice::Coadjoint => dual_leibniz_rep(&adjoint).map_err(CliError::Core)?,
    };
    Ok((table, rep))
}

fn run_construct(args: &ConstructArgs) -> Result<i32, CliError> {
    let bundle = load_bundle(&args.input)?;
    let mut command = format!(
        "construct --op {} --input {} --output {}",
        args.op, args.input, args.output
    );
    if args.force {
        command.push_str(" --force");
    }
    command.push_str(&format!(" --seed {}", args.seed));

    let map_name = args.map.as_str();
    // Preconditions and the construction itself, per op.
    let (pres, output): (Vec<Pre>, Box<dyn FnOnce() -> Result<AlgebraBundle, CliError>>) =
        match args.op.as_str() {
            "levi-civita" => {
                let omega = bundle.form("omega").map_err(CliError::Core)?.clone();
                let table = bundle.product("circ").map_err(CliError::Core)?.clone();
                let nondeg = omega.is_nondegenerate();
                (
                    vec![Pre::Flag("omega is nondegenerate", nondeg)],
                    Box::new(move || {
                        let (lozenge, black) = levi_civita(&table, &omega).map_err(CliError::Core)?;
                        let mut out = AlgebraBundle::new(lozenge.dim());
                        out.insert_product("lozenge", lozenge).map_err(CliError::Core)?;
                        out.insert_product("black", black).map_err(CliError::Core)?;
                        out.insert_form("omega", omega.clone()).map_err(CliError::Core)?;
                        Ok(out)
                    }),
                )
            }
            "levi-civita-from-cocycle" => {
                let omega = bundle.form("omega").map_err(CliError::Core)?.clone();
                let table = bundle.product("circ").map_err(CliError::Core)?.clone();
                (
                    vec![
                        Pre::Flag("omega is skew", omega.is_skew()),
                        Pre::Flag("omega is nondegenerate", omega.is_nondegenerate()),
                        Pre::System("two-cocycle"),
                    ],
                    Box::new(move || {
                        let pair = levi_civita_from_cocycle_unchecked(&table, &omega)
                            .map_err(CliError::Core)?;
                        Ok(pair.to_bundle())
                    }),
                )
            }
            "minus2-transform" => {
                let pair = split_pair_from(&bundle, SplitFlavor::NovikovDialgebra)?;
                (
                    vec![Pre::System("novikov-dialgebra")],
                    Box::new(move || Ok(minus2_transform(&pair).to_bundle())),
                )
            }
            "plus2-transform" => {
                let pair = split_pair_from(&bundle, SplitFlavor::AntiPreLeibniz)?;
                (
                    vec![Pre::System("admissible-novikov-dialgebra")],
                    Box::new(move || Ok(plus2_transform(&pair).to_bundle())),
                )
            }
            "pre-from-transformed" => {
                let pair = split_pair_from(&bundle, SplitFlavor::Transformed)?;
                (
                    vec![Pre::System("transformed-pre-leibniz")],
                    Box::new(move || Ok(pre_from_transformed(&pair).to_bundle())),
                )
            }
            "transformed-from-pre" => {
                let pair = split_pair_from(&bundle, SplitFlavor::PreLeibniz)?;
                (
                    vec![Pre::System("pre-leibniz")],
                    Box::new(move || Ok(transformed_from_pre(&pair).to_bundle())),
                )
            }
            "sub-adjacent" => {
                let pair = split_pair_from(&bundle, SplitFlavor::AntiPreLeibniz)?;
                (
                    vec![Pre::System("anti-pre-leibniz")],
                    Box::new(move || {
                        AlgebraBundle::new(pair.dim())
                            .with_product("circ", pair.sub_adjacent())
                            .map_err(CliError::Core)
                    }),
                )
            }
            "double-apl" => {
                let pair = split_pair_from(&bundle, SplitFlavor::AntiPreLeibniz)?;
                (
                    vec![Pre::System("anti-pre-leibniz")],
                    Box::new(move || {
                        let (c1, c2) =
                            double_structures_apl_unchecked(&pair).map_err(CliError::Core)?;
                        let mut out = AlgebraBundle::new(c1.dim());
                        out.insert_product("circ1", c1).map_err(CliError::Core)?;
                        out.insert_product("circ2", c2).map_err(CliError::Core)?;
                        out.insert_form("omega", omega_p(pair.dim()))
                            .map_err(CliError::Core)?;
                        Ok(out)
                    }),
                )
            }
            "double-pre" => {
                let pair = split_pair_from(&bundle, SplitFlavor::PreLeibniz)?;
                (
                    vec![Pre::System("pre-leibniz")],
                    Box::new(move || {
                        let (c1, c2) =
                            double_structures_pre_unchecked(&pair).map_err(CliError::Core)?;
                        let mut out = AlgebraBundle::new(c1.dim());
                        out.insert_product("circ1", c1).map_err(CliError::Core)?;
                        out.insert_product("circ2", c2).map_err(CliError::Core)?;
                        out.insert_form("omega", omega_p(pair.dim()))
                            .map_err(CliError::Core)?;
                        Ok(out)
                    }),
                )
            }
            "gd-from-novikov-di" => {
                let pair = split_pair_from(&bundle, SplitFlavor::NovikovDialgebra)?;
                (
                    vec![Pre::System("novikov-dialgebra")],
                    Box::new(move || gd_from_novikov_di_unchecked(&pair).map_err(CliError::Core)),
                )
            }
            "gd-from-averaging" => {
                let p = bundle.map(map_name).map_err(CliError::Core)?.clone();
                let input = bundle.clone();
                (
                    vec![
                        Pre::System("gd-algebra"),
                        Pre::SystemWithMap("averaging", map_name),
                    ],
                    Box::new(move || {
                        gd_from_averaging_unchecked(&input, &p).map_err(CliError::Core)
                    }),
                )
            }
            "derivation-product" => {
                let p = bundle.map(map_name).map_err(CliError::Core)?.clone();
                let input = bundle.clone();
                (
                    vec![
                        Pre::System("gd-dialgebra"),
                        Pre::SystemWithMap("derivation", map_name),
                    ],
                    Box::new(move || {
                        let circ =
                            derivation_product_unchecked(&input, &p).map_err(CliError::Core)?;
                        AlgebraBundle::new(circ.dim())
                            .with_product("circ", circ)
                            .map_err(CliError::Core)
                    }),
                )
            }
            "perm-to-leibniz" => {
                let mode = args.mode.ok_or_else(|| {
                    CliError::MissingOption(
                        "--mode (averaging|derivation) is required for perm-to-leibniz".to_owned(),
                    )
                })?;
                let star = bundle.product("star").map_err(CliError::Core)?.clone();
                let p = bundle.map(map_name).map_err(CliError::Core)?.clone();
                let mode_system = match mode {
                    ModeChoice::Averaging => OperatorMode::Averaging,
                    ModeChoice::Derivation => OperatorMode::Derivation,
                };
                (
                    vec![
                        Pre::System("perm"),
                        Pre::SystemWithMap(mode_system.system_name(), map_name),
                    ],
                    Box::new(move || {
                        let circ =
                            perm_to_leibniz_unchecked(&star, &p).map_err(CliError::Core)?;
                        AlgebraBundle::new(circ.dim())
                            .with_product("circ", circ)
                            .map_err(CliError::Core)
                    }),
                )
            }
            "semidirect-leibniz" => {
                let (table, rep) = chosen_rep_for_table(&bundle, args.rep)?;
                (
                    vec![Pre::System("leibniz")],
                    Box::new(move || {
                        let extended =
                            semidirect_leibniz(&table, &rep).map_err(CliError::Core)?;
                        AlgebraBundle::new(extended.dim())
                            .with_product("circ", extended)
                            .map_err(CliError::Core)
                    }),
                )
            }
            "semidirect-apl" => {
                let pair = split_pair_from(&bundle, SplitFlavor::AntiPreLeibniz)?;
                let rep = match args.rep {
                    RepChoice::Adjoint => adjoint_split_rep(&pair),
                    RepChoice::Coadjoint => {
                        dual_apl_rep(&adjoint_split_rep(&pair)).map_err(CliError::Core)?
                    }
                };
                (
                    vec![Pre::System("anti-pre-leibniz")],
                    Box::new(move || {
                        let extended = semidirect_apl(&pair, &rep).map_err(CliError::Core)?;
                        Ok(extended.to_bundle())
                    }),
                )
            }
            other => return Err(CliError::UnknownOp(other.to_owned())),
        };

    let mut verdicts = Vec::new();
    let mut all_hold = true;
    for pre in &pres {
        if args.force {
            verdicts.push(Verdict::note(&pre.target(), "skipped (--force)"));
        } else {
            let verdict = pre.verdict(&bundle)?;
            all_hold &= verdict.holds.unwrap_or(true);
            verdicts.push(verdict);
        }
    }

    if all_hold {
        let constructed = output()?;
        CliError::write(&args.output, &json::emit_bundle(&constructed))?;
        verdicts.push(Verdict::note("output", &format!("wrote {}", args.output)));
    } else {
        verdicts.push(Verdict::note(
            "output",
            "not written: a precondition failed (use --force to override)",
        ));
    }

    let report = Report::new(command, verdicts);
    print!("{}", report.render());
    Ok(report.exit_code)
}

// -------------------------------------------------------------------
// verify-theorem
// -------------------------------------------------------------------

fn run_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let report = suite::run_suite(&args.suite, args.seed, args.samples)?;
    print!("{}", report.render());
    Ok(if report.holds { EXIT_HOLDS } else { EXIT_VIOLATED })
}

// -------------------------------------------------------------------
// catalog
// -------------------------------------------------------------------

fn run_catalog(action: &CatalogAction) -> Result<i32, CliError> {
    match action {
        CatalogAction::List => {
            for fixture in catalog::FIXTURES {
                println!("{:<16} {}", fixture.name, fixture.note);
            }
            Ok(EXIT_HOLDS)
        }
        CatalogAction::Emit { name } => {
            let fixture = catalog::find(name)?;
            print!("{}", json::emit_bundle(&fixture.bundle()));
            Ok(EXIT_HOLDS)
        }
    }
}
