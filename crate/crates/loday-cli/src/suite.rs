//! Seeded verification suites behind `loday verify-theorem`.
//!
//! Each suite states one structural fact — a transform lands where it
//! should, a biconditional really is a biconditional, a construction
//! commutes with checking — and grinds it against a mix of fixed
//! catalog instances and seeded random ones. Every instance records an
//! `agree` flag; the suite holds only if every instance agrees.
//!
//! Random instances come from [`crate::gen`]: constructive generators
//! for the "both sides true" branch, raw and perturbed generators for
//! the "both sides false" branch, so biconditionals are exercised from
//! both directions. Identical `(seed, samples)` arguments replay the
//! identical instance list, and reports render byte-identically.

use loday_core::affine::leibniz_grid_check;
use loday_core::construct::{
    adjoint_rep, check_anti_o, check_strong_anti_o,
    compatible_split_from_invertible_anti_o_unchecked, double_structures_apl,
    double_structures_pre, dual_leibniz_rep, induced_split, levi_civita,
    levi_civita_from_cocycle, minus2_transform, omega_p, plus2_transform, pre_from_transformed,
    sub_adjacent_rep, transformed_from_pre,
};
use loday_core::identity::check_system;
use loday_core::registry::registry;
use loday_core::rep::check_rep_equivalence;
use loday_core::{
    AlgebraBundle, BilinearForm, LinearEndo, Matrix, MultTable, Rational, SplitFlavor, SplitPair,
};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog;
use crate::error::CliError;
use crate::gen;

/// Suite identifiers accepted by `loday verify-theorem`, in help order.
pub const SUITES: &[&str] = &[
    "thm-2-12",
    "thm-2-14",
    "prop-2-9",
    "prop-2-16",
    "prop-2-22",
    "prop-3-5",
    "prop-3-6",
    "prop-3-7",
    "prop-3-9",
    "prop-3-10",
    "prop-3-13",
];

/// One-line statement of what a suite verifies.
#[must_use]
pub fn describe(id: &str) -> &'static str {
    match id {
        "thm-2-12" => {
            "an invertible operator satisfies the operator identity exactly when \
             the split it induces is anti-pre-Leibniz and descends to the product"
        }
        "thm-2-14" => {
            "for a cocycle-split pair, the form's natural map intertwines the \
             pair's representation with the dual adjoint, and back"
        }
        "prop-2-9" => "every invertible operator satisfying the identity is strong",
        "prop-2-16" => {
            "the canonical block pairing on the double of an anti-pre-Leibniz pair \
             is skew, nondegenerate, and a 2-cocycle"
        }
        "prop-2-22" => {
            "a skew nondegenerate form is a 2-cocycle exactly when it is invariant \
             for the averaged splitting it induces"
        }
        "prop-3-5" => {
            "a pair is a Novikov dialgebra exactly when its -2-weighted transform \
             is an admissible anti-pre-Leibniz pair"
        }
        "prop-3-6" => {
            "a pair is admissible anti-pre-Leibniz exactly when its +2-weighted \
             transform is a Novikov dialgebra"
        }
        "prop-3-7" => "the two weighted transforms compose, in either order, to scaling by -3",
        "prop-3-9" => {
            "the doubled products of an anti-pre-Leibniz pair are compatible \
             exactly when the pair is admissible"
        }
        "prop-3-10" => {
            "the doubled products of a pre-Leibniz pair are compatible exactly \
             when its dialgebra image is Novikov"
        }
        "prop-3-13" => {
            "the degree-window product check agrees with the coupled \
             Leibniz/dialgebra axioms"
        }
        _ => "unknown suite",
    }
}

/// One checked instance inside a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteInstance {
    /// Deterministic description of the instance.
    pub label: String,
    /// Whether the suite's statement held on this instance.
    pub agree: bool,
}

/// The outcome of one suite run; serializes byte-stably.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: u32,
    pub instances: Vec<SuiteInstance>,
    /// True exactly when every instance agrees.
    pub holds: bool,
}

impl SuiteReport {
    /// Pretty JSON plus trailing newline; byte-stable for equal inputs.
    #[must_use]
    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization is infallible");
        text.push('\n');
        text
    }
}

/// Runs one suite.
///
/// # Errors
///
/// [`CliError::UnknownSuite`] for an unrecognized id; internal checker
/// errors propagate as [`CliError::Core`].
pub fn run_suite(id: &str, seed: u64, samples: u32) -> Result<SuiteReport, CliError> {
    let rng = &mut gen::rng(seed);
    let instances = match id {
        "thm-2-12" => thm_2_12(rng, samples)?,
        "thm-2-14" => thm_2_14(rng, samples)?,
        "prop-2-9" => prop_2_9(rng, samples)?,
        "prop-2-16" => prop_2_16(rng, samples)?,
        "prop-2-22" => prop_2_22(rng, samples)?,
        "prop-3-5" => prop_3_5(rng, samples)?,
        "prop-3-6" => prop_3_6(rng, samples)?,
        "prop-3-7" => prop_3_7(rng, samples)?,
        "prop-3-9" => prop_3_9(rng, samples)?,
        "prop-3-10" => prop_3_10(rng, samples)?,
        "prop-3-13" => prop_3_13(rng, samples)?,
        other => return Err(CliError::UnknownSuite(other.to_owned())),
    };
    let holds = instances.iter().all(|i| i.agree);
    Ok(SuiteReport {
        suite: id.to_owned(),
        seed,
        samples,
        instances,
        holds,
    })
}

// -------------------------------------------------------------------
// Shared helpers
// -------------------------------------------------------------------

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn holds(system: &str, bundle: &AlgebraBundle) -> Result<bool, CliError> {
    let sys = registry(system).map_err(CliError::Core)?;
    Ok(check_system(&sys, bundle).map_err(CliError::Core)?.holds)
}

/// `e_0 ∘ e_1 = e_1`, `e_1 ∘ e_0 = -e_1`: a two-dimensional Leibniz
/// (indeed Lie) table used as a second positive seed.
fn aff_table() -> MultTable {
    MultTable::from_triples(2, &[(0, 1, 1, q(1)), (1, 0, 1, q(-1))]).expect("indices in range")
}

fn catalog_pair(name: &str, flavor: SplitFlavor) -> Result<SplitPair, CliError> {
    let bundle = catalog::find(name)?.bundle();
    let (first_slot, second_slot) = flavor.slot_names();
    let first = bundle.product(first_slot).map_err(CliError::Core)?.clone();
    let second = bundle.product(second_slot).map_err(CliError::Core)?.clone();
    SplitPair::new(flavor, first, second).map_err(CliError::Core)
}

fn conjugate_pair(pair: &SplitPair, phi: &Matrix) -> Result<SplitPair, CliError> {
    SplitPair::new(
        pair.flavor(),
        pair.first().conjugate(phi).map_err(CliError::Core)?,
        pair.second().conjugate(phi).map_err(CliError::Core)?,
    )
    .map_err(CliError::Core)
}

fn pair_bundle(pair: &SplitPair) -> AlgebraBundle {
    pair.to_bundle()
}

fn cocycle_bundle(table: &MultTable, omega: &BilinearForm) -> Result<AlgebraBundle, CliError> {
    let mut bundle = AlgebraBundle::new(table.dim());
    bundle
        .insert_product("circ", table.clone())
        .map_err(CliError::Core)?;
    bundle
        .insert_form("omega", omega.clone())
        .map_err(CliError::Core)?;
    Ok(bundle)
}

fn compat_bundle(c1: MultTable, c2: MultTable) -> Result<AlgebraBundle, CliError> {
    let mut bundle = AlgebraBundle::new(c1.dim());
    bundle.insert_product("circ1", c1).map_err(CliError::Core)?;
    bundle.insert_product("circ2", c2).map_err(CliError::Core)?;
    Ok(bundle)
}

/// The positive half of the operator correspondence: a nonzero scalar
/// multiple of the identity splits the descended product of `pair`
/// back into `pair`, strongly.
fn scaled_identity_agrees(pair: &SplitPair, c: i64) -> Result<bool, CliError> {
    let table = pair.sub_adjacent();
    let rep = sub_adjacent_rep(pair);
    let t = LinearEndo::new(Matrix::identity(pair.dim()).scale(&q(c)))
        .expect("square by construction");
    let anti = check_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
    let strong = check_strong_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
    let recovered =
        compatible_split_from_invertible_anti_o_unchecked(&t, &table, &rep).map_err(CliError::Core)?;
    Ok(anti
        && strong
        && recovered.first() == pair.first()
        && recovered.second() == pair.second())
}

// -------------------------------------------------------------------
// The suites
// -------------------------------------------------------------------

/// Invertible operators: identity holds ⟺ unchecked split is
/// anti-pre-Leibniz and descends back to the product.
fn thm_2_12(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut instances = Vec::new();
    let apl1 = catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?;
    for c in [1i64, 2] {
        instances.push(SuiteInstance {
            label: format!("catalog:apl1 scaled-identity c={c}"),
            agree: scaled_identity_agrees(&apl1, c)?,
        });
    }
    for k in 0..samples {
        if k % 4 == 3 {
            let pair = gen::apl_pair(rng, 2);
            let c = [1i64, -1, 2, -2][(k / 4 % 4) as usize];
            instances.push(SuiteInstance {
                label: format!("scaled-identity dim=2 c={c} #{k}"),
                agree: scaled_identity_agrees(&pair, c)?,
            });
            continue;
        }
        let table = match k % 4 {
            0 => gen::leibniz_table(rng, 2),
            1 => aff_table()
                .conjugate(&gen::invertible_matrix(rng, 2))
                .map_err(CliError::Core)?,
            _ => MultTable::zeros(2),
        };
        let rep = if k % 2 == 0 {
            adjoint_rep(&table)
        } else {
            dual_leibniz_rep(&adjoint_rep(&table)).map_err(CliError::Core)?
        };
        let t = gen::invertible_endo(rng, 2);
        let lhs = check_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
        let pair =
            compatible_split_from_invertible_anti_o_unchecked(&t, &table, &rep)
                .map_err(CliError::Core)?;
        let rhs = pair.check().map_err(CliError::Core)?.holds && pair.sub_adjacent() == table;
        instances.push(SuiteInstance {
            label: format!("random-operator table={} rep={} #{k}", k % 4, k % 2),
            agree: lhs == rhs,
        });
    }
    Ok(instances)
}

/// Cocycle splittings: the form's natural map intertwines the pair's
/// representation with the dual adjoint, and its transpose intertwines
/// the adjoint with the dual of the pair's representation.
fn thm_2_14(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut cases: Vec<(String, MultTable, BilinearForm)> = Vec::new();
    let leib2 = catalog::find("omega2-on-leib2")?.bundle();
    cases.push((
        "catalog:omega2-on-leib2".to_owned(),
        leib2.product("circ").map_err(CliError::Core)?.clone(),
        leib2.form("omega").map_err(CliError::Core)?.clone(),
    ));
    for k in 0..samples {
        let (table, omega) = gen::cocycle_instance(rng);
        cases.push((format!("conjugated-cocycle #{k}"), table, omega));
    }
    let mut instances = Vec::new();
    for (label, table, omega) in cases {
        let pair = levi_civita_from_cocycle(&table, &omega).map_err(CliError::Core)?;
        let split_rep = sub_adjacent_rep(&pair);
        let coadjoint = dual_leibniz_rep(&adjoint_rep(&table)).map_err(CliError::Core)?;
        let phi = omega.natural_map();
        let forward =
            check_rep_equivalence(&split_rep, &coadjoint, &phi).map_err(CliError::Core)?;
        let adjoint = adjoint_rep(&table);
        let dual_split = dual_leibniz_rep(&split_rep).map_err(CliError::Core)?;
        let backward = check_rep_equivalence(&adjoint, &dual_split, &phi.transpose())
            .map_err(CliError::Core)?;
        instances.push(SuiteInstance {
            label,
            agree: forward && backward,
        });
    }
    Ok(instances)
}

/// Invertible + identity ⇒ strong, and the induced split on the module
/// is anti-pre-Leibniz exactly when the operator is strong.
fn prop_2_9(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut instances = Vec::new();
    let apl1 = catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?;
    instances.push(SuiteInstance {
        label: "catalog:apl1 scaled-identity c=-1".to_owned(),
        agree: scaled_identity_agrees(&apl1, -1)?,
    });
    for k in 0..samples {
        if k % 2 == 0 {
            // Constructive rows: genuinely invertible operators
            // satisfying the identity, where strength must follow.
            let pair = gen::apl_pair(rng, 2);
            let c = [1i64, -1, 2, -2][(k / 2 % 4) as usize];
            let table = pair.sub_adjacent();
            let rep = sub_adjacent_rep(&pair);
            let t = LinearEndo::new(Matrix::identity(2).scale(&q(c)))
                .expect("square by construction");
            let anti = check_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
            let strong = check_strong_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
            instances.push(SuiteInstance {
                label: format!("scaled-identity dim=2 c={c} #{k}"),
                agree: anti && strong,
            });
        } else {
            // Random small operators on a fixed Leibniz table: whenever
            // the identity holds, invertibility must imply strength,
            // and the induced module split must match strength.
            let table = if k % 4 == 1 {
                catalog::find("leib2")?
                    .bundle()
                    .product("circ")
                    .map_err(CliError::Core)?
                    .clone()
            } else {
                aff_table()
            };
            let rep = adjoint_rep(&table);
            let t = gen::endo(rng, 2);
            let agree = if check_anti_o(&t, &table, &rep).map_err(CliError::Core)? {
                let strong = check_strong_anti_o(&t, &table, &rep).map_err(CliError::Core)?;
                let split = induced_split(&t, &table, &rep).map_err(CliError::Core)?;
                let split_ok = split.check().map_err(CliError::Core)?.holds;
                (!t.is_invertible() || strong) && (split_ok == strong)
            } else {
                true
            };
            instances.push(SuiteInstance {
                label: format!("small-operator table={} #{k}", k % 4),
                agree,
            });
        }
    }
    Ok(instances)
}

/// The canonical block pairing on every double is skew, nondegenerate,
/// and a 2-cocycle for the first doubled product.
fn prop_2_16(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut pairs: Vec<(String, SplitPair)> = vec![(
        "catalog:apl1".to_owned(),
        catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?,
    )];
    for k in 0..samples {
        let dim = if k % 3 == 2 { 3 } else { 2 };
        pairs.push((
            format!("apl-pair dim={dim} #{k}"),
            gen::apl_pair(rng, dim),
        ));
    }
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        let omega = omega_p(pair.dim());
        let (c1, _) = double_structures_apl(&pair).map_err(CliError::Core)?;
        let agree = omega.is_skew()
            && omega.is_nondegenerate()
            && holds("two-cocycle", &cocycle_bundle(&c1, &omega)?)?;
        instances.push(SuiteInstance { label, agree });
    }
    Ok(instances)
}

/// Cocycle ⟺ invariance for the averaged splitting. The averaged pair
/// comes from the plain averaging solver, so the invariance side is
/// decided independently of the cocycle equations.
fn prop_2_22(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut cases: Vec<(String, MultTable, BilinearForm)> = Vec::new();
    let fixture = catalog::find("omega2-on-leib2")?.bundle();
    let omega2 = fixture.form("omega").map_err(CliError::Core)?.clone();
    cases.push((
        "catalog:omega2-on-leib2".to_owned(),
        fixture.product("circ").map_err(CliError::Core)?.clone(),
        omega2.clone(),
    ));
    cases.push((
        "fixed:truncated-polynomials".to_owned(),
        gen::poly_table(2),
        omega2.clone(),
    ));
    cases.push(("fixed:rotation".to_owned(), aff_table(), omega2));
    for k in 0..samples {
        if k % 2 == 0 {
            let (table, omega) = gen::cocycle_instance(rng);
            cases.push((format!("conjugated-cocycle #{k}"), table, omega));
        } else {
            let table = gen::table(rng, 2, 60);
            let omega = gen::skew_nondegenerate_form(rng, 1);
            cases.push((format!("random-table #{k}"), table, omega));
        }
    }
    let mut instances = Vec::new();
    for (label, table, omega) in cases {
        let cocycle = holds("two-cocycle", &cocycle_bundle(&table, &omega)?)?;
        let (lozenge, black) = levi_civita(&table, &omega).map_err(CliError::Core)?;
        let mut averaged = AlgebraBundle::new(table.dim());
        averaged
            .insert_product("succ", black)
            .map_err(CliError::Core)?;
        averaged
            .insert_product("prec", lozenge)
            .map_err(CliError::Core)?;
        averaged
            .insert_form("omega", omega.clone())
            .map_err(CliError::Core)?;
        let invariant = holds("apl-invariance", &averaged)?;
        instances.push(SuiteInstance {
            label,
            agree: cocycle == invariant,
        });
    }
    Ok(instances)
}

/// Novikov dialgebra ⟺ the -2-weighted transform is admissible.
fn prop_3_5(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut pairs: Vec<(String, SplitPair)> = vec![(
        "catalog:nov1".to_owned(),
        catalog_pair("nov1", SplitFlavor::NovikovDialgebra)?,
    )];
    for k in 0..samples {
        let dim = if k % 4 == 3 { 3 } else { 2 };
        let (label, pair) = match k % 3 {
            0 => (
                format!("novikov-pair dim={dim} #{k}"),
                gen::novikov_pair(rng, dim),
            ),
            1 => {
                let base = gen::novikov_pair(rng, dim);
                (
                    format!("perturbed-novikov dim={dim} #{k}"),
                    gen::perturb_pair(rng, &base),
                )
            }
            _ => (
                format!("raw-pair dim={dim} #{k}"),
                gen::raw_pair(rng, SplitFlavor::NovikovDialgebra, dim, 60),
            ),
        };
        pairs.push((label, pair));
    }
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        let lhs = holds("novikov-dialgebra", &pair_bundle(&pair))?;
        let rhs = holds(
            "admissible-novikov-dialgebra",
            &pair_bundle(&minus2_transform(&pair)),
        )?;
        instances.push(SuiteInstance {
            label,
            agree: lhs == rhs,
        });
    }
    Ok(instances)
}

/// Admissible ⟺ the +2-weighted transform is a Novikov dialgebra.
fn prop_3_6(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut pairs: Vec<(String, SplitPair)> = vec![(
        "catalog:apl1".to_owned(),
        catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?,
    )];
    for k in 0..samples {
        let dim = if k % 4 == 3 { 3 } else { 2 };
        let (label, pair) = match k % 3 {
            0 => (format!("apl-pair dim={dim} #{k}"), gen::apl_pair(rng, dim)),
            1 => {
                let base = gen::apl_pair(rng, dim);
                (
                    format!("perturbed-apl dim={dim} #{k}"),
                    gen::perturb_pair(rng, &base),
                )
            }
            _ => (
                format!("raw-pair dim={dim} #{k}"),
                gen::raw_pair(rng, SplitFlavor::AntiPreLeibniz, dim, 60),
            ),
        };
        pairs.push((label, pair));
    }
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        let lhs = holds("admissible-novikov-dialgebra", &pair_bundle(&pair))?;
        let rhs = holds("novikov-dialgebra", &pair_bundle(&plus2_transform(&pair)))?;
        instances.push(SuiteInstance {
            label,
            agree: lhs == rhs,
        });
    }
    Ok(instances)
}

/// The weighted transforms compose to scaling by -3 in either order,
/// on arbitrary pairs.
fn prop_3_7(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut pairs: Vec<(String, SplitPair)> = vec![
        (
            "catalog:nov1".to_owned(),
            catalog_pair("nov1", SplitFlavor::NovikovDialgebra)?,
        ),
        (
            "catalog:apl1".to_owned(),
            catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?,
        ),
    ];
    for k in 0..samples {
        let dim = 1 + (k % 3) as usize + 1; // 2, 3, 4, 2, ...
        pairs.push((
            format!("raw-pair dim={dim} #{k}"),
            gen::raw_pair(rng, SplitFlavor::NovikovDialgebra, dim, 70),
        ));
    }
    let minus3 = q(-3);
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        let scaled_first = pair.first().scale(&minus3);
        let scaled_second = pair.second().scale(&minus3);
        let there = plus2_transform(&minus2_transform(&pair));
        let back = minus2_transform(&plus2_transform(&pair));
        let agree = *there.first() == scaled_first
            && *there.second() == scaled_second
            && *back.first() == scaled_first
            && *back.second() == scaled_second;
        instances.push(SuiteInstance { label, agree });
    }
    Ok(instances)
}

/// Doubling an anti-pre-Leibniz pair: the two products are compatible
/// exactly when the pair is admissible.
fn prop_3_9(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut pairs: Vec<(String, SplitPair)> = vec![(
        "catalog:apl1".to_owned(),
        catalog_pair("apl1", SplitFlavor::AntiPreLeibniz)?,
    )];
    for k in 0..samples {
        let dim = if k % 3 == 2 { 3 } else { 2 };
        let (label, pair) = if k % 2 == 0 {
            (format!("apl-pair dim={dim} #{k}"), gen::apl_pair(rng, dim))
        } else {
            (
                format!("zero-pair dim={dim} #{k}"),
                SplitPair::zeros(SplitFlavor::AntiPreLeibniz, dim),
            )
        };
        pairs.push((label, pair));
    }
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        let (c1, c2) = double_structures_apl(&pair).map_err(CliError::Core)?;
        let compatible = holds("compatible-leibniz", &compat_bundle(c1, c2)?)?;
        let admissible = holds("admissible-novikov-dialgebra", &pair_bundle(&pair))?;
        instances.push(SuiteInstance {
            label,
            agree: compatible == admissible,
        });
    }
    Ok(instances)
}

/// Doubling a pre-Leibniz pair: the two products are compatible exactly
/// when the pair's dialgebra image is a Novikov dialgebra.
fn prop_3_10(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    // The fixed negative: a genuine pre-Leibniz pair whose dialgebra
    // image fails the Novikov axioms, so both sides must be false.
    let negative = pre_from_transformed(
        &SplitPair::transformed(aff_table(), MultTable::zeros(2)).expect("matching dimensions"),
    );
    let mut pairs: Vec<(String, SplitPair)> =
        vec![("fixed:non-novikov-image".to_owned(), negative.clone())];
    for k in 0..samples {
        let dim = if k % 4 == 3 { 3 } else { 2 };
        let (label, pair) = match k % 3 {
            0 => (format!("pre-pair dim={dim} #{k}"), gen::pre_pair(rng, dim)),
            1 => (
                format!("conjugated-negative #{k}"),
                conjugate_pair(&negative, &gen::invertible_matrix(rng, 2))?,
            ),
            _ => (
                format!("raw-pair dim={dim} #{k}"),
                gen::raw_pair(rng, SplitFlavor::PreLeibniz, dim, 50),
            ),
        };
        pairs.push((label, pair));
    }
    let mut instances = Vec::new();
    for (label, pair) in pairs {
        if !holds("pre-leibniz", &pair_bundle(&pair))? {
            // Raw pairs that fail the hypothesis are recorded as
            // vacuously agreeing; the doubling is only defined on
            // pre-Leibniz pairs.
            instances.push(SuiteInstance { label, agree: true });
            continue;
        }
        let (b1, b2) = double_structures_pre(&pair).map_err(CliError::Core)?;
        let compatible = holds("compatible-leibniz", &compat_bundle(b1, b2)?)?;
        let image_novikov = holds(
            "novikov-dialgebra",
            &pair_bundle(&transformed_from_pre(&pair)),
        )?;
        instances.push(SuiteInstance {
            label,
            agree: compatible == image_novikov,
        });
    }
    Ok(instances)
}

/// The graded product check over a degree window agrees with the
/// coupled Leibniz/dialgebra axiom system.
fn prop_3_13(rng: &mut ChaCha8Rng, samples: u32) -> Result<Vec<SuiteInstance>, CliError> {
    let mut bundles: Vec<(String, AlgebraBundle)> = vec![
        ("catalog:gd-nov1".to_owned(), catalog::find("gd-nov1")?.bundle()),
        (
            "catalog:gd2-deriv".to_owned(),
            catalog::find("gd2-deriv")?.bundle(),
        ),
    ];
    for k in 0..samples {
        let dim = if k % 4 == 3 { 3 } else { 2 };
        let (label, bundle) = match k % 3 {
            0 => (format!("induced dim={dim} #{k}"), gen::gd_bundle(rng, dim)),
            1 => (
                format!("raw dim={dim} #{k}"),
                gen::raw_gd_bundle(rng, dim, 40),
            ),
            _ => {
                let mut bundle = gen::gd_bundle(rng, dim);
                let perturbed = gen::perturb_pair(
                    rng,
                    &SplitPair::novikov(
                        bundle.product("vdash").map_err(CliError::Core)?.clone(),
                        bundle.product("dashv").map_err(CliError::Core)?.clone(),
                    )
                    .expect("matching dimensions"),
                );
                bundle
                    .insert_product("vdash", perturbed.first().clone())
                    .map_err(CliError::Core)?;
                bundle
                    .insert_product("dashv", perturbed.second().clone())
                    .map_err(CliError::Core)?;
                (format!("perturbed dim={dim} #{k}"), bundle)
            }
        };
        bundles.push((label, bundle));
    }
    let mut instances = Vec::new();
    for (label, bundle) in bundles {
        let grid = leibniz_grid_check(&bundle).map_err(CliError::Core)?.holds;
        let axioms = holds("gd-dialgebra", &bundle)?;
        instances.push(SuiteInstance {
            label,
            agree: grid == axioms,
        });
    }
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_holds_on_a_smoke_run() {
        for id in SUITES {
            let report = run_suite(id, 7, 6).unwrap();
            assert!(report.holds, "suite {id} failed: {}", report.render());
            assert!(report.instances.len() >= 6);
        }
    }

    #[test]
    fn suite_reports_are_byte_stable() {
        for id in SUITES {
            let a = run_suite(id, 3, 5).unwrap().render();
            let b = run_suite(id, 3, 5).unwrap().render();
            assert_eq!(a, b, "suite {id} is not deterministic");
        }
    }

    #[test]
    fn different_seeds_change_the_instances() {
        let a = run_suite("prop-3-7", 1, 8).unwrap();
        let b = run_suite("prop-3-7", 2, 8).unwrap();
        assert_ne!(a.render(), b.render());
        assert!(a.holds && b.holds);
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(matches!(
            run_suite("prop-9-9", 0, 1),
            Err(CliError::UnknownSuite(_))
        ));
    }

    #[test]
    fn every_suite_has_a_description() {
        for id in SUITES {
            assert_ne!(describe(id), "unknown suite");
        }
    }
}
