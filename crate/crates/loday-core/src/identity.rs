//! Multilinear identities as expression trees, checked exactly by exhausting
//! basis tuples.
//!
//! Every identity handled by this crate — from the Leibniz identity
//! `x∘(y∘z) = (x∘y)∘z + y∘(x∘z)` up to the three mixed Gel'fand–Dorfman
//! dialgebra equations — is *multilinear*: linear in each variable
//! separately. A multilinear expression vanishes for all vectors if and only
//! if it vanishes on all tuples of basis vectors, so checking the finitely
//! many basis tuples is a complete decision procedure, not a sample. That
//! soundness argument is the load-bearing fact of this module; everything
//! else is plumbing.
//!
//! An [`Equation`] is either vector-valued (`lhs = rhs` in the algebra) or
//! form-valued (`Σ cᵢ·ω(sᵢ, tᵢ) = 0` for a named bilinear form). An
//! [`IdentitySystem`] is an ordered list of equations plus bookkeeping: which
//! named products/forms/maps the bundle must provide, which products are
//! derived internally before checking (e.g. a sub-adjacent product as the sum
//! of two split products), and whether the system is a template instantiated
//! once per product in the bundle (averaging operators and derivations are
//! axioms "for every product").
//!
//! Failures are reported deterministically: the counterexample is the first
//! failing equation in system order, and within it the lexicographically
//! first failing basis tuple. Identical inputs always yield identical
//! reports.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraBundle;
use crate::error::Error;
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::Result;

/// A variable symbol; the registry uses `x`, `y`, `z` (and keeps `w` free
/// for ad-hoc systems).
pub type Var = char;

/// Placeholder product name in per-product template systems; replaced by
/// each of the bundle's product names at check time.
pub const EACH_PRODUCT: &str = "@each";

/// A multilinear word in the bundle's named operations and the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    /// A variable.
    Var(Var),
    /// A binary product applied to two subterms, by product name.
    Prod(String, Box<Term>, Box<Term>),
    /// A linear endomorphism applied to a subterm, by map name.
    Map(String, Box<Term>),
    /// A scalar multiple of a subterm.
    Scale(Rational, Box<Term>),
    /// A sum of subterms.
    Sum(Vec<Term>),
}

impl Term {
    /// Variable constructor.
    #[must_use]
    pub fn var(symbol: Var) -> Term {
        Term::Var(symbol)
    }

    /// Product constructor.
    #[must_use]
    pub fn prod(name: &str, lhs: Term, rhs: Term) -> Term {
        Term::Prod(name.to_string(), Box::new(lhs), Box::new(rhs))
    }

    /// Map-application constructor.
    #[must_use]
    pub fn map(name: &str, inner: Term) -> Term {
        Term::Map(name.to_string(), Box::new(inner))
    }

    /// Scalar-multiple constructor.
    #[must_use]
    pub fn scale(c: Rational, inner: Term) -> Term {
        Term::Scale(c, Box::new(inner))
    }

    /// Sum constructor.
    #[must_use]
    pub fn sum(terms: Vec<Term>) -> Term {
        Term::Sum(terms)
    }

    /// `−self`.
    #[must_use]
    pub fn negate(self) -> Term {
        Term::scale(Rational::from_integer(-1), self)
    }

    /// Collects the variables used, in sorted order.
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Prod(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Map(_, a) | Term::Scale(_, a) => a.collect_vars(out),
            Term::Sum(terms) => {
                for t in terms {
                    t.collect_vars(out);
                }
            }
        }
    }

    /// Collects referenced product and map names.
    fn collect_names(&self, products: &mut BTreeSet<String>, maps: &mut BTreeSet<String>) {
        match self {
            Term::Var(_) => {}
            Term::Prod(name, a, b) => {
                products.insert(name.clone());
                a.collect_names(products, maps);
                b.collect_names(products, maps);
            }
            Term::Map(name, a) => {
                maps.insert(name.clone());
                a.collect_names(products, maps);
            }
            Term::Scale(_, a) => a.collect_names(products, maps),
            Term::Sum(terms) => {
                for t in terms {
                    t.collect_names(products, maps);
                }
            }
        }
    }

    /// Replaces every occurrence of product name `from` with `to`.
    #[must_use]
    fn substitute_product(&self, from: &str, to: &str) -> Term {
        match self {
            Term::Var(v) => Term::Var(*v),
            Term::Prod(name, a, b) => Term::Prod(
                if name == from {
                    to.to_string()
                } else {
                    name.clone()
                },
                Box::new(a.substitute_product(from, to)),
                Box::new(b.substitute_product(from, to)),
            ),
            Term::Map(name, a) => Term::Map(name.clone(), Box::new(a.substitute_product(from, to))),
            Term::Scale(c, a) => Term::Scale(c.clone(), Box::new(a.substitute_product(from, to))),
            Term::Sum(terms) => Term::Sum(
                terms
                    .iter()
                    .map(|t| t.substitute_product(from, to))
                    .collect(),
            ),
        }
    }
}

/// A binding of variable symbols to vectors.
#[derive(Debug, Clone, Default)]
pub struct Assignment {
    bindings: BTreeMap<Var, Vector>,
}

impl Assignment {
    /// An empty assignment.
    #[must_use]
    pub fn new() -> Self {
        Assignment::default()
    }

    /// Binds a variable (replacing any previous binding).
    pub fn bind(&mut self, symbol: Var, value: Vector) {
        self.bindings.insert(symbol, value);
    }

    /// Looks up a binding.
    ///
    /// # Errors
    ///
    /// [`Error::UnassignedVariable`] if the symbol is unbound.
    pub fn get(&self, symbol: Var) -> Result<&Vector> {
        self.bindings
            .get(&symbol)
            .ok_or(Error::UnassignedVariable(symbol))
    }
}

/// The two shapes of equation: vector-valued or form-valued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationKind {
    /// `lhs = rhs` as elements of the algebra.
    Vector {
        /// Left-hand side.
        lhs: Term,
        /// Right-hand side.
        rhs: Term,
    },
    /// `Σ cᵢ · ω(sᵢ, tᵢ) = 0` for the named form `ω`.
    Form {
        /// Name of the bilinear form.
        form: String,
        /// Summands `(cᵢ, sᵢ, tᵢ)`.
        terms: Vec<(Rational, Term, Term)>,
    },
}

/// One multilinear equation with a stable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    /// Human-readable label used in reports (stable across runs).
    pub label: String,
    /// The distinct variables used, in sorted symbol order; the checker's
    /// basis tuples are indexed in this order.
    pub variables: Vec<Var>,
    /// The equation body.
    pub kind: EquationKind,
}

impl Equation {
    /// A vector-valued equation `lhs = rhs`; variables are collected from
    /// both sides.
    #[must_use]
    pub fn vector(label: &str, lhs: Term, rhs: Term) -> Equation {
        let mut vars = BTreeSet::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Equation {
            label: label.to_string(),
            variables: vars.into_iter().collect(),
            kind: EquationKind::Vector { lhs, rhs },
        }
    }

    /// A form-valued equation `Σ cᵢ·ω(sᵢ, tᵢ) = 0`.
    #[must_use]
    pub fn form(label: &str, form_name: &str, terms: Vec<(Rational, Term, Term)>) -> Equation {
        let mut vars = BTreeSet::new();
        for (_, s, t) in &terms {
            s.collect_vars(&mut vars);
            t.collect_vars(&mut vars);
        }
        Equation {
            label: label.to_string(),
            variables: vars.into_iter().collect(),
            kind: EquationKind::Form {
                form: form_name.to_string(),
                terms,
            },
        }
    }

    fn collect_names(
        &self,
        products: &mut BTreeSet<String>,
        forms: &mut BTreeSet<String>,
        maps: &mut BTreeSet<String>,
    ) {
        match &self.kind {
            EquationKind::Vector { lhs, rhs } => {
                lhs.collect_names(products, maps);
                rhs.collect_names(products, maps);
            }
            EquationKind::Form { form, terms } => {
                forms.insert(form.clone());
                for (_, s, t) in terms {
                    s.collect_names(products, maps);
                    t.collect_names(products, maps);
                }
            }
        }
    }

    fn substitute_product(&self, from: &str, to: &str) -> Equation {
        let kind = match &self.kind {
            EquationKind::Vector { lhs, rhs } => EquationKind::Vector {
                lhs: lhs.substitute_product(from, to),
                rhs: rhs.substitute_product(from, to),
            },
            EquationKind::Form { form, terms } => EquationKind::Form {
                form: form.clone(),
                terms: terms
                    .iter()
                    .map(|(c, s, t)| {
                        (
                            c.clone(),
                            s.substitute_product(from, to),
                            t.substitute_product(from, to),
                        )
                    })
                    .collect(),
            },
        };
        Equation {
            label: self.label.clone(),
            variables: self.variables.clone(),
            kind,
        }
    }
}

/// A product synthesized from the bundle before checking: `name := a + b`
/// entrywise on tables. Any product the bundle already carries under `name`
/// is shadowed — the derived product is part of the system's meaning, not an
/// input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedProduct {
    /// Name the derived table is bound to.
    pub name: String,
    /// The two product names summed.
    pub summands: (String, String),
}

/// An ordered list of equations plus the names they need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySystem {
    /// Registry name.
    pub name: String,
    /// Equations in fixed order (the counterexample tie-break order).
    pub equations: Vec<Equation>,
    /// Products the bundle must supply.
    pub required_products: Vec<String>,
    /// Forms the bundle must supply.
    pub required_forms: Vec<String>,
    /// Maps the bundle must supply.
    pub required_maps: Vec<String>,
    /// Products computed from the bundle before checking.
    pub derived_products: Vec<DerivedProduct>,
    /// Whether the equations are a template over [`EACH_PRODUCT`],
    /// instantiated once per product in the bundle.
    pub expand_per_product: bool,
}

impl IdentitySystem {
    /// A plain system: the given equations, requirements inferred from the
    /// equation bodies.
    #[must_use]
    pub fn new(name: &str, equations: Vec<Equation>) -> IdentitySystem {
        let mut products = BTreeSet::new();
        let mut forms = BTreeSet::new();
        let mut maps = BTreeSet::new();
        for eq in &equations {
            eq.collect_names(&mut products, &mut forms, &mut maps);
        }
        IdentitySystem {
            name: name.to_string(),
            equations,
            required_products: products.into_iter().collect(),
            required_forms: forms.into_iter().collect(),
            required_maps: maps.into_iter().collect(),
            derived_products: Vec::new(),
            expand_per_product: false,
        }
    }

    /// Declares a derived product and removes it from the required list
    /// (its summands are required instead).
    #[must_use]
    pub fn with_derived_sum(mut self, name: &str, a: &str, b: &str) -> IdentitySystem {
        self.derived_products.push(DerivedProduct {
            name: name.to_string(),
            summands: (a.to_string(), b.to_string()),
        });
        self.required_products.retain(|p| p != name);
        for summand in [a, b] {
            if !self.required_products.iter().any(|p| p == summand) {
                self.required_products.push(summand.to_owned());
            }
        }
        self.required_products.sort();
        self
    }

    /// Marks the system as a per-product template (equations written over
    /// [`EACH_PRODUCT`]).
    #[must_use]
    pub fn per_product(mut self) -> IdentitySystem {
        self.expand_per_product = true;
        self.required_products.retain(|p| p != EACH_PRODUCT);
        self
    }
}

/// Defect of a failed equation: the nonzero value of `lhs − rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// Vector-valued equations leave a vector defect.
    Vector(Vector),
    /// Form-valued equations leave a scalar defect.
    Scalar(Rational),
}

/// The first failure, in deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Index of the failing equation in the (expanded) system.
    pub equation_index: usize,
    /// Label of the failing equation.
    pub equation_label: String,
    /// Basis indices bound to the equation's variables, in variable order.
    pub basis_tuple: Vec<usize>,
    /// The nonzero defect.
    pub defect: Defect,
}

/// Outcome of checking a system against a bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// Whether every equation vanished on every basis tuple.
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    /// The all-clear report.
    #[must_use]
    pub fn passing() -> CheckReport {
        CheckReport {
            holds: true,
            counterexample: None,
        }
    }

    /// A failing report with its counterexample.
    #[must_use]
    pub fn failing(counterexample: Counterexample) -> CheckReport {
        CheckReport {
            holds: false,
            counterexample: Some(counterexample),
        }
    }
}

/// Evaluates a term under an assignment, against the bundle's named
/// operations.
///
/// # Errors
///
/// [`Error::UnknownName`] for an unresolved product/map name;
/// [`Error::UnassignedVariable`] for an unbound variable;
/// [`Error::DimensionMismatch`] if a bound vector has the wrong dimension.
pub fn evaluate_term(
    term: &Term,
    bundle: &AlgebraBundle,
    assignment: &Assignment,
) -> Result<Vector> {
    match term {
        Term::Var(symbol) => {
            let value = assignment.get(*symbol)?;
            if value.dim() != bundle.dim() {
                return Err(Error::dim_mismatch(bundle.dim(), value.dim()));
            }
            Ok(value.clone())
        }
        Term::Prod(name, a, b) => {
            let table = bundle.product(name)?;
            let u = evaluate_term(a, bundle, assignment)?;
            let v = evaluate_term(b, bundle, assignment)?;
            table.multiply(&u, &v)
        }
        Term::Map(name, a) => {
            let endo = bundle.map(name)?;
            let v = evaluate_term(a, bundle, assignment)?;
            Ok(endo.apply(&v))
        }
        Term::Scale(c, a) => Ok(evaluate_term(a, bundle, assignment)?.scale(c)),
        Term::Sum(terms) => {
            let mut acc = Vector::zeros(bundle.dim());
            for t in terms {
                let v = evaluate_term(t, bundle, assignment)?;
                acc = &acc + &v;
            }
            Ok(acc)
        }
    }
}

/// Prepares the working bundle (derived products materialized) and the
/// expanded equation list for a system.
fn prepare(sys: &IdentitySystem, bundle: &AlgebraBundle) -> Result<(AlgebraBundle, Vec<Equation>)> {
    let mut working = bundle.clone();
    for derived in &sys.derived_products {
        let a = working.product(&derived.summands.0)?;
        let b = working.product(&derived.summands.1)?;
        let table = a.sum(b)?;
        working.insert_product(&derived.name, table)?;
    }

    let equations: Vec<Equation> = if sys.expand_per_product {
        let names: Vec<String> = bundle.product_names().map(ToOwned::to_owned).collect();
        names
            .iter()
            .flat_map(|product| {
                sys.equations.iter().map(move |eq| {
                    let mut instance = eq.substitute_product(EACH_PRODUCT, product);
                    instance.label = alloc::format!("{} [{product}]", instance.label);
                    instance
                })
            })
            .collect()
    } else {
        sys.equations.clone()
    };

    // Validate every referenced name up front so missing names surface as
    // errors rather than as spurious "holds" verdicts on empty loops.
    let mut products = BTreeSet::new();
    let mut forms = BTreeSet::new();
    let mut maps = BTreeSet::new();
    for eq in &equations {
        eq.collect_names(&mut products, &mut forms, &mut maps);
    }
    for name in &products {
        working.product(name)?;
    }
    for name in &forms {
        working.form(name)?;
    }
    for name in &maps {
        working.map(name)?;
    }
    Ok((working, equations))
}

/// Evaluates one equation's defect under an assignment against a working
/// bundle (derived products already materialized).
fn equation_defect(
    equation: &Equation,
    working: &AlgebraBundle,
    assignment: &Assignment,
) -> Result<Option<Defect>> {
    match &equation.kind {
        EquationKind::Vector { lhs, rhs } => {
            let l = evaluate_term(lhs, working, assignment)?;
            let r = evaluate_term(rhs, working, assignment)?;
            let d = &l - &r;
            if d.is_zero() {
                Ok(None)
            } else {
                Ok(Some(Defect::Vector(d)))
            }
        }
        EquationKind::Form { form, terms } => {
            let omega = working.form(form)?;
            let mut total = Rational::zero();
            for (c, s, t) in terms {
                let u = evaluate_term(s, working, assignment)?;
                let v = evaluate_term(t, working, assignment)?;
                total += omega.eval(&u, &v) * c.clone();
            }
            if total.is_zero() {
                Ok(None)
            } else {
                Ok(Some(Defect::Scalar(total)))
            }
        }
    }
}

/// Checks every equation of the system at every tuple of basis vectors.
///
/// Soundness: all equations are multilinear, so vanishing on basis tuples is
/// equivalent to vanishing identically. The counterexample, when present, is
/// the first failure with equations ordered as listed and basis tuples
/// ordered lexicographically.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle is missing a referenced product,
/// form, or map (including summands of derived products).
pub fn check_system(sys: &IdentitySystem, bundle: &AlgebraBundle) -> Result<CheckReport> {
    let (working, equations) = prepare(sys, bundle)?;
    let dim = working.dim();

    for (equation_index, equation) in equations.iter().enumerate() {
        let arity = equation.variables.len();
        let mut tuple = vec![0usize; arity];
        loop {
            let mut assignment = Assignment::new();
            for (slot, &symbol) in equation.variables.iter().enumerate() {
                assignment.bind(symbol, Vector::basis(dim, tuple[slot]));
            }
            if let Some(defect) = equation_defect(equation, &working, &assignment)? {
                return Ok(CheckReport::failing(Counterexample {
                    equation_index,
                    equation_label: equation.label.clone(),
                    basis_tuple: tuple.clone(),
                    defect,
                }));
            }
            // Advance the tuple lexicographically (rightmost slot fastest).
            let mut slot = arity;
            loop {
                if slot == 0 {
                    break;
                }
                slot -= 1;
                tuple[slot] += 1;
                if tuple[slot] < dim {
                    break;
                }
                tuple[slot] = 0;
            }
            if tuple.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(CheckReport::passing())
}

/// Evaluates every equation of the system at one concrete assignment and
/// reports whether all defects vanish there.
///
/// This is a *spot check*, not a decision: a system that fails over basis
/// tuples may still vanish at particular points. Its value is the converse
/// direction — by multilinearity, a system that [`check_system`] accepts
/// vanishes at **every** assignment, so any spot failure refutes a passing
/// verdict.
///
/// Derived products and per-product expansion are applied exactly as in
/// [`check_system`]; `bindings` must cover every variable the expanded
/// equations use.
///
/// # Errors
///
/// [`Error::UnknownName`] for missing bundle names,
/// [`Error::UnassignedVariable`] if a variable is not bound.
pub fn spot_check_system(
    sys: &IdentitySystem,
    bundle: &AlgebraBundle,
    bindings: &[(Var, Vector)],
) -> Result<bool> {
    let (working, equations) = prepare(sys, bundle)?;
    let mut assignment = Assignment::new();
    for (symbol, value) in bindings {
        assignment.bind(*symbol, value.clone());
    }
    for equation in &equations {
        if equation_defect(equation, &working, &assignment)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BilinearForm, LinearEndo, MultTable};
    use crate::linalg::Matrix;

    fn rat(text: &str) -> Rational {
        text.parse().unwrap()
    }

    /// dim-2 bundle with product "circ": e0·e0 = e1.
    fn nilpotent_bundle() -> AlgebraBundle {
        let table = MultTable::from_triples(2, &[(0, 0, 1, Rational::one())]).unwrap();
        AlgebraBundle::new(2).with_product("circ", table).unwrap()
    }

    fn commutativity() -> IdentitySystem {
        IdentitySystem::new(
            "commutativity",
            vec![Equation::vector(
                "commutativity",
                Term::prod("circ", Term::var('x'), Term::var('y')),
                Term::prod("circ", Term::var('y'), Term::var('x')),
            )],
        )
    }

    #[test]
    fn evaluate_product_on_basis() {
        let bundle = nilpotent_bundle();
        let mut assignment = Assignment::new();
        assignment.bind('x', Vector::basis(2, 0));
        assignment.bind('y', Vector::basis(2, 0));
        let term = Term::prod("circ", Term::var('x'), Term::var('y'));
        assert_eq!(
            evaluate_term(&term, &bundle, &assignment).unwrap(),
            Vector::basis(2, 1)
        );
    }

    #[test]
    fn evaluate_scale_and_cancelling_sum() {
        let bundle = nilpotent_bundle();
        let mut assignment = Assignment::new();
        assignment.bind('x', Vector::basis(2, 0));
        let t = Term::map("p", Term::var('x'));
        let bundle = bundle.with_map("p", LinearEndo::identity(2)).unwrap();
        assert_eq!(
            evaluate_term(&Term::scale(rat("0"), t.clone()), &bundle, &assignment).unwrap(),
            Vector::zeros(2)
        );
        let cancelling = Term::sum(vec![t.clone(), t.negate()]);
        assert_eq!(
            evaluate_term(&cancelling, &bundle, &assignment).unwrap(),
            Vector::zeros(2)
        );
    }

    #[test]
    fn evaluate_reports_missing_names() {
        let bundle = nilpotent_bundle();
        let mut assignment = Assignment::new();
        assignment.bind('x', Vector::basis(2, 0));
        let bad_product = Term::prod("star", Term::var('x'), Term::var('x'));
        assert_eq!(
            evaluate_term(&bad_product, &bundle, &assignment),
            Err(Error::UnknownName("star".into()))
        );
        let unbound = Term::var('z');
        assert_eq!(
            evaluate_term(&unbound, &bundle, &assignment),
            Err(Error::UnassignedVariable('z'))
        );
    }

    #[test]
    fn check_commutativity_on_symmetric_table() {
        // The nilpotent table has its only constant on the diagonal, so the
        // product is commutative.
        let report = check_system(&commutativity(), &nilpotent_bundle()).unwrap();
        assert!(report.holds);
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn counterexample_is_lexicographically_first() {
        // e0·e1 = e0 with zero e1·e0 breaks commutativity first at (0, 1).
        let table = MultTable::from_triples(2, &[(0, 1, 0, Rational::one())]).unwrap();
        let bundle = AlgebraBundle::new(2).with_product("circ", table).unwrap();
        let report = check_system(&commutativity(), &bundle).unwrap();
        assert!(!report.holds);
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.equation_index, 0);
        assert_eq!(ce.basis_tuple, vec![0, 1]);
        assert_eq!(ce.defect, Defect::Vector(Vector::basis(2, 0)));
    }

    #[test]
    fn form_equation_checks_skewness() {
        let skewness = IdentitySystem::new(
            "skewness",
            vec![Equation::form(
                "skewness",
                "omega",
                vec![
                    (rat("1"), Term::var('x'), Term::var('y')),
                    (rat("1"), Term::var('y'), Term::var('x')),
                ],
            )],
        );
        let skew_gram =
            Matrix::from_rows(vec![vec![rat("0"), rat("1")], vec![rat("-1"), rat("0")]]);
        let good = AlgebraBundle::new(2)
            .with_form("omega", BilinearForm::new(skew_gram).unwrap())
            .unwrap();
        assert!(check_system(&skewness, &good).unwrap().holds);

        let bad = AlgebraBundle::new(2)
            .with_form("omega", BilinearForm::new(Matrix::identity(2)).unwrap())
            .unwrap();
        let report = check_system(&skewness, &bad).unwrap();
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.basis_tuple, vec![0, 0]);
        assert_eq!(ce.defect, Defect::Scalar(rat("2")));
    }

    #[test]
    fn derived_product_shadows_bundle_entry() {
        // System checks commutativity of "total" := succ + prec.
        let sys = IdentitySystem::new(
            "total-commutativity",
            vec![Equation::vector(
                "total-commutativity",
                Term::prod("total", Term::var('x'), Term::var('y')),
                Term::prod("total", Term::var('y'), Term::var('x')),
            )],
        )
        .with_derived_sum("total", "succ", "prec");
        assert!(sys.required_products.iter().all(|p| p != "total"));

        // succ: e0·e1 = e0; prec: e1·e0 = e0. Sum is commutative-on-basis
        // only via cancellation — here the sum is NOT commutative, while a
        // bogus "total" already in the bundle IS. The derived table must win.
        let succ = MultTable::from_triples(2, &[(0, 1, 0, Rational::one())]).unwrap();
        let prec = MultTable::zeros(2);
        let bogus_total = MultTable::zeros(2);
        let bundle = AlgebraBundle::new(2)
            .with_product("succ", succ)
            .unwrap()
            .with_product("prec", prec)
            .unwrap()
            .with_product("total", bogus_total)
            .unwrap();
        let report = check_system(&sys, &bundle).unwrap();
        assert!(!report.holds);
    }

    #[test]
    fn per_product_template_expands_in_name_order() {
        // "p is idempotent-compatible": P(x·y) = P(x)·P(y) fails for the
        // doubling map on the nilpotent product (left: 2e1, right: 4e1).
        let sys = IdentitySystem::new(
            "p-multiplicativity",
            vec![Equation::vector(
                "p-multiplicativity",
                Term::map(
                    "p",
                    Term::prod(EACH_PRODUCT, Term::var('x'), Term::var('y')),
                ),
                Term::prod(
                    EACH_PRODUCT,
                    Term::map("p", Term::var('x')),
                    Term::map("p", Term::var('y')),
                ),
            )],
        )
        .per_product();

        let table = MultTable::from_triples(2, &[(0, 0, 1, Rational::one())]).unwrap();
        let doubling = LinearEndo::new(Matrix::identity(2).scale(&rat("2"))).unwrap();
        let bundle = AlgebraBundle::new(2)
            .with_product("alpha", MultTable::zeros(2))
            .unwrap()
            .with_product("beta", table)
            .unwrap()
            .with_map("p", doubling)
            .unwrap();
        let report = check_system(&sys, &bundle).unwrap();
        let ce = report.counterexample.unwrap();
        // "alpha" instance passes (zero product); "beta" instance fails.
        assert_eq!(ce.equation_index, 1);
        assert_eq!(ce.equation_label, "p-multiplicativity [beta]");
        assert_eq!(ce.basis_tuple, vec![0, 0]);
    }

    #[test]
    fn missing_required_name_is_an_error_not_a_pass() {
        let sys = commutativity();
        let empty = AlgebraBundle::new(2);
        assert_eq!(
            check_system(&sys, &empty),
            Err(Error::UnknownName("circ".into()))
        );
    }
}
