//! Constructions that manufacture new structures from old ones: semidirect
//! extensions, dual representations, form-induced product splittings,
//! operator-induced splittings, dialgebra transforms, doubled structures on
//! `A ⊕ A*`, and product twists by averaging or derivation maps.
//!
//! Checked entry points validate their hypotheses by running the relevant
//! identity system from [`crate::registry`] and fail loudly when a
//! precondition does not hold. Each such operation has an `_unchecked`
//! sibling that skips the validation, useful for negative-path experiments
//! where one wants to watch a construction break. All functions here are
//! pure and deterministic.
//!
//! Throughout, the dual space `A*` is coordinatized by the dual basis, the
//! pairing `⟨a*, x⟩` is the dot product of coordinate vectors, and the dual
//! of an endomorphism is [`dualize_endo`] (negated transpose). Doubled
//! structures on `A ⊕ A*` use block coordinates: the first `n` entries are
//! the `A`-component, the last `n` the `A*`-component.

use alloc::vec::Vec;

use crate::algebra::{
    dualize_endo, AlgebraBundle, BilinearForm, LinearEndo, MultTable, RepBundle, Side,
};
use crate::error::Error;
use crate::identity::{check_system, CheckReport};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::registry::registry;
use crate::Result;

/// Which axiom family a two-product structure is expected to satisfy, and
/// therefore how its tables are named and how its one-product companion is
/// formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitFlavor {
    /// A pair `(≻, ≺)`; slots `succ`/`prec`; companion `x∘y = x≻y + x≺y`.
    AntiPreLeibniz,
    /// A pair `(▷, ◁)`; slots `rhd`/`lhd`; companion `x•y = x▷y + x◁y`.
    PreLeibniz,
    /// A pair `(⊢, ⊣)` subject to the three transformed pre-Leibniz
    /// equations; slots `vdash`/`dashv`; companion `x∘y = x⊢y − y⊣x`.
    Transformed,
    /// A pair `(⊢, ⊣)` subject to the full Novikov-dialgebra system; slots
    /// `vdash`/`dashv`; companion `x∘y = x⊢y − y⊣x`.
    NovikovDialgebra,
}

impl SplitFlavor {
    /// Name of the identity system in [`crate::registry`] that a pair of
    /// this flavor is expected to satisfy.
    #[must_use]
    pub fn system_name(self) -> &'static str {
        match self {
            SplitFlavor::AntiPreLeibniz => "anti-pre-leibniz",
            SplitFlavor::PreLeibniz => "pre-leibniz",
            SplitFlavor::Transformed => "transformed-pre-leibniz",
            SplitFlavor::NovikovDialgebra => "novikov-dialgebra",
        }
    }

    /// Bundle slot names for the two tables, in order.
    #[must_use]
    pub fn slot_names(self) -> (&'static str, &'static str) {
        match self {
            SplitFlavor::AntiPreLeibniz => ("succ", "prec"),
            SplitFlavor::PreLeibniz => ("rhd", "lhd"),
            SplitFlavor::Transformed | SplitFlavor::NovikovDialgebra => ("vdash", "dashv"),
        }
    }
}

/// An ordered pair of products on one space, tagged with the axiom family
/// it is meant for.
///
/// The tag records intent — constructors of this type never run identity
/// checks themselves. Use [`SplitPair::check`] to test the tables against
/// the flavor's identity system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    flavor: SplitFlavor,
    first: MultTable,
    second: MultTable,
}

impl SplitPair {
    /// Wraps two same-dimension tables.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the tables live on different
    /// dimensions.
    pub fn new(flavor: SplitFlavor, first: MultTable, second: MultTable) -> Result<Self> {
        if first.dim() != second.dim() {
            return Err(Error::dim_mismatch(first.dim(), second.dim()));
        }
        Ok(SplitPair {
            flavor,
            first,
            second,
        })
    }

    /// An anti-pre-Leibniz-flavored pair `(≻, ≺)`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the tables live on different
    /// dimensions.
    pub fn anti_pre(succ: MultTable, prec: MultTable) -> Result<Self> {
        SplitPair::new(SplitFlavor::AntiPreLeibniz, succ, prec)
    }

    /// A pre-Leibniz-flavored pair `(▷, ◁)`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the tables live on different
    /// dimensions.
    pub fn pre(rhd: MultTable, lhd: MultTable) -> Result<Self> {
        SplitPair::new(SplitFlavor::PreLeibniz, rhd, lhd)
    }

    /// A transformed-flavored pair `(⊢, ⊣)`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the tables live on different
    /// dimensions.
    pub fn transformed(vdash: MultTable, dashv: MultTable) -> Result<Self> {
        SplitPair::new(SplitFlavor::Transformed, vdash, dashv)
    }

    /// A Novikov-dialgebra-flavored pair `(⊢, ⊣)`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the tables live on different
    /// dimensions.
    pub fn novikov(vdash: MultTable, dashv: MultTable) -> Result<Self> {
        SplitPair::new(SplitFlavor::NovikovDialgebra, vdash, dashv)
    }

    /// The pair of zero tables in the given flavor and dimension.
    #[must_use]
    pub fn zeros(flavor: SplitFlavor, dim: usize) -> Self {
        SplitPair {
            flavor,
            first: MultTable::zeros(dim),
            second: MultTable::zeros(dim),
        }
    }

    /// The flavor tag.
    #[must_use]
    pub fn flavor(&self) -> SplitFlavor {
        self.flavor
    }

    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    /// The first table (`≻`, `▷`, or `⊢` depending on flavor).
    #[must_use]
    pub fn first(&self) -> &MultTable {
        &self.first
    }

    /// The second table (`≺`, `◁`, or `⊣` depending on flavor).
    #[must_use]
    pub fn second(&self) -> &MultTable {
        &self.second
    }

    /// Consumes the pair, returning the two tables in order.
    #[must_use]
    pub fn into_parts(self) -> (MultTable, MultTable) {
        (self.first, self.second)
    }

    /// The one-product companion algebra: the table sum for the
    /// anti-pre-Leibniz and pre-Leibniz flavors, `x⊢y − y⊣x` for the
    /// dialgebra flavors.
    #[must_use]
    pub fn sub_adjacent(&self) -> MultTable {
        let companion = match self.flavor {
            SplitFlavor::AntiPreLeibniz | SplitFlavor::PreLeibniz => self.first.sum(&self.second),
            SplitFlavor::Transformed | SplitFlavor::NovikovDialgebra => self
                .first
                .sum(&self.second.flip().scale(&Rational::from_integer(-1))),
        };
        companion.expect("both tables share one dimension")
    }

    /// Packs the two tables into an [`AlgebraBundle`] under the flavor's
    /// slot names.
    #[must_use]
    pub fn to_bundle(&self) -> AlgebraBundle {
        let (first_name, second_name) = self.flavor.slot_names();
        AlgebraBundle::new(self.dim())
            .with_product(first_name, self.first.clone())
            .and_then(|b| b.with_product(second_name, self.second.clone()))
            .expect("slot tables share the bundle dimension")
    }

    /// Runs the flavor's identity system over the pair.
    ///
    /// # Errors
    ///
    /// Propagates [`crate::identity::check_system`] errors; the registry
    /// lookup itself cannot fail for the built-in flavor names.
    pub fn check(&self) -> Result<CheckReport> {
        check_system(&registry(self.flavor.system_name())?, &self.to_bundle())
    }
}

/// Runs one registry system against a bundle.
fn run_system(name: &str, bundle: &AlgebraBundle) -> Result<CheckReport> {
    check_system(&registry(name)?, bundle)
}

/// Evaluates `(Σ_i xᵢ · family[i])(arg)` — a matrix family contracted
/// against the coordinates of `x`, applied to `arg`.
fn apply_family(family: &[Matrix], x: &Vector, arg: &Vector) -> Vector {
    let out_dim = family.first().map_or(0, Matrix::rows);
    let mut out = Vector::zeros(out_dim);
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out.add_scaled(c, &family[i].mul_vector(arg));
    }
    out
}

/// Builds a table from a closure producing each basis product `eᵢ · eⱼ`.
fn table_from_pairs(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> MultTable {
    let mut table = MultTable::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let w = f(i, j);
            for k in 0..dim {
                if !w[k].is_zero() {
                    table
                        .set_constant(i, j, k, w[k].clone())
                        .expect("indices in range by construction");
                }
            }
        }
    }
    table
}

/// The adjoint representation of a one-product algebra on itself:
/// `l(eₜ)` and `r(eₜ)` are the left and right multiplication operators.
#[must_use]
pub fn adjoint_rep(table: &MultTable) -> RepBundle {
    let n = table.dim();
    RepBundle::leibniz(
        n,
        n,
        table.operator_family(Side::Left),
        table.operator_family(Side::Right),
    )
    .expect("multiplication operators are square and complete")
}

/// The adjoint representation of a split pair on itself: the four families
/// are the multiplication operators of the two products,
/// `(L_first, R_first, L_second, R_second)`.
#[must_use]
pub fn adjoint_split_rep(pair: &SplitPair) -> RepBundle {
    let n = pair.dim();
    RepBundle::split(
        n,
        n,
        pair.first().operator_family(Side::Left),
        pair.first().operator_family(Side::Right),
        pair.second().operator_family(Side::Left),
        pair.second().operator_family(Side::Right),
    )
    .expect("multiplication operators are square and complete")
}

/// The representation of a pair's companion algebra on the underlying
/// space by (signed) multiplication operators.
///
/// Per flavor: `(−L_≻, −R_≺)` for anti-pre-Leibniz, `(L_▷, R_◁)` for
/// pre-Leibniz, and `(L_⊢, −L_⊣)` for the dialgebra flavors (the image of
/// `(L_▷, R_◁)` under `▷ = ⊢`, `x◁y = −y⊣x`).
#[must_use]
pub fn sub_adjacent_rep(pair: &SplitPair) -> RepBundle {
    let n = pair.dim();
    let neg = |family: Vec<Matrix>| family.iter().map(|m| -m).collect::<Vec<_>>();
    let (l, r) = match pair.flavor() {
        SplitFlavor::AntiPreLeibniz => (
            neg(pair.first().operator_family(Side::Left)),
            neg(pair.second().operator_family(Side::Right)),
        ),
        SplitFlavor::PreLeibniz => (
            pair.first().operator_family(Side::Left),
            pair.second().operator_family(Side::Right),
        ),
        SplitFlavor::Transformed | SplitFlavor::NovikovDialgebra => (
            pair.first().operator_family(Side::Left),
            neg(pair.second().operator_family(Side::Left)),
        ),
    };
    RepBundle::leibniz(n, n, l, r).expect("multiplication operators are square and complete")
}

/// The dual of a two-family representation `(l, r)`: the pair
/// `(l*, −l* − r*)` acting on the dual module, where `f*` is
/// [`dualize_endo`] applied index-wise.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `l`/`r` families.
pub fn dual_leibniz_rep(rep: &RepBundle) -> Result<RepBundle> {
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    let dual_l: Vec<Matrix> = l.iter().map(dualize_endo).collect();
    let dual_r: Vec<Matrix> = l
        .iter()
        .zip(r.iter())
        .map(|(lm, rm)| -&(&dualize_endo(lm) + &dualize_endo(rm)))
        .collect();
    RepBundle::leibniz(rep.algebra_dim(), rep.module_dim(), dual_l, dual_r)
}

/// The dual of a four-family representation `(l_≻, r_≻, l_≺, r_≺)`: the
/// quadruple `(−l*_∘, −l*_≺ − r*_≻, l*_≺, l*_∘ + r*_∘)` on the dual
/// module, where `l_∘ = l_≻ + l_≺` and `r_∘ = r_≻ + r_≺`.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks any of the four families.
pub fn dual_apl_rep(rep: &RepBundle) -> Result<RepBundle> {
    let l_succ = rep.family("l_succ")?;
    let r_succ = rep.family("r_succ")?;
    let l_prec = rep.family("l_prec")?;
    let r_prec = rep.family("r_prec")?;
    let n = rep.algebra_dim();
    let mut new_l_succ = Vec::with_capacity(n);
    let mut new_r_succ = Vec::with_capacity(n);
    let mut new_l_prec = Vec::with_capacity(n);
    let mut new_r_prec = Vec::with_capacity(n);
    for t in 0..n {
        let l_circ = &l_succ[t] + &l_prec[t];
        let r_circ = &r_succ[t] + &r_prec[t];
        new_l_succ.push(-&dualize_endo(&l_circ));
        new_r_succ.push(-&(&dualize_endo(&l_prec[t]) + &dualize_endo(&r_succ[t])));
        new_l_prec.push(dualize_endo(&l_prec[t]));
        new_r_prec.push(&dualize_endo(&l_circ) + &dualize_endo(&r_circ));
    }
    RepBundle::split(
        n,
        rep.module_dim(),
        new_l_succ,
        new_r_succ,
        new_l_prec,
        new_r_prec,
    )
}

/// Core of the semidirect constructions: one block table on `A ⊕ V` with
/// `A·A` given by `table`, `A·V` by the `l` family, `V·A` by the `r`
/// family, and `V·V = 0`.
fn semidirect_block(table: &MultTable, module_dim: usize, l: &[Matrix], r: &[Matrix]) -> MultTable {
    let n = table.dim();
    let mut out = MultTable::zeros(n + module_dim);
    for (i, j, k, c) in table.nonzero_entries() {
        out.set_constant(i, j, k, c.clone())
            .expect("indices in range by construction");
    }
    for i in 0..n {
        for s in 0..module_dim {
            for t in 0..module_dim {
                let c = &l[i][(t, s)];
                if !c.is_zero() {
                    out.set_constant(i, n + s, n + t, c.clone())
                        .expect("indices in range by construction");
                }
                let c = &r[i][(t, s)];
                if !c.is_zero() {
                    out.set_constant(n + s, i, n + t, c.clone())
                        .expect("indices in range by construction");
                }
            }
        }
    }
    out
}

/// The semidirect extension of a one-product algebra by a two-family
/// representation: on `A ⊕ V`,
/// `(x + u) ∘ (y + v) = x∘y + l(x)v + r(y)u`.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the representation's algebra dimension
/// differs from the table's; [`Error::UnknownName`] if the bundle lacks
/// the `l`/`r` families.
pub fn semidirect_leibniz(table: &MultTable, rep: &RepBundle) -> Result<MultTable> {
    if rep.algebra_dim() != table.dim() {
        return Err(Error::dim_mismatch(table.dim(), rep.algebra_dim()));
    }
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    Ok(semidirect_block(table, rep.module_dim(), l, r))
}

/// The semidirect extension of a split pair by a four-family
/// representation: on `A ⊕ V`,
/// `(x + u) ≻ (y + v) = x≻y + l_≻(x)v + r_≻(y)u` and likewise for the
/// second product with the `≺` families. The output keeps the input's
/// flavor tag.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the representation's algebra dimension
/// differs from the pair's; [`Error::UnknownName`] if the bundle lacks
/// any of the four families.
pub fn semidirect_apl(pair: &SplitPair, rep: &RepBundle) -> Result<SplitPair> {
    if rep.algebra_dim() != pair.dim() {
        return Err(Error::dim_mismatch(pair.dim(), rep.algebra_dim()));
    }
    let l_succ = rep.family("l_succ")?;
    let r_succ = rep.family("r_succ")?;
    let l_prec = rep.family("l_prec")?;
    let r_prec = rep.family("r_prec")?;
    let m = rep.module_dim();
    SplitPair::new(
        pair.flavor(),
        semidirect_block(pair.first(), m, l_succ, r_succ),
        semidirect_block(pair.second(), m, l_prec, r_prec),
    )
}

/// Checks that a form is fit to induce products: on the right dimension,
/// skew-symmetric, and nondegenerate.
fn require_symplectic(table: &MultTable, omega: &BilinearForm) -> Result<()> {
    if omega.dim() != table.dim() {
        return Err(Error::dim_mismatch(table.dim(), omega.dim()));
    }
    if !omega.is_skew() {
        return Err(Error::NotSkew);
    }
    if !omega.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

/// Solves `ω(w, e_k) = c_k` for `w`, given the inverse of the transposed
/// Gram matrix.
fn solve_against_form(gram_t_inv: &Matrix, c: &Vector) -> Vector {
    gram_t_inv.mul_vector(c)
}

/// The two averaged products `(◇, ◆)` that a nondegenerate skew form
/// carves out of one product: for all `z`,
///
/// ```text
/// 2ω(x◇y, z) = ω(x∘y, z) + ω(y∘z, x) + ω(z∘y, x) + ω(x∘z, y)
/// 2ω(x◆y, z) = ω(x∘y, z) − ω(y∘z, x) − ω(z∘y, x) − ω(x∘z, y)
/// ```
///
/// Each basis product is recovered by a linear solve against the
/// transposed Gram matrix. The two tables always sum back to `∘`.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the form is on the wrong dimension,
/// [`Error::NotSkew`] if it is not skew-symmetric, [`Error::DegenerateForm`]
/// if it is degenerate.
pub fn levi_civita(table: &MultTable, omega: &BilinearForm) -> Result<(MultTable, MultTable)> {
    require_symplectic(table, omega)?;
    let n = table.dim();
    let gram_t_inv = omega
        .gram()
        .transpose()
        .invert()
        .expect("nondegenerate form has an invertible Gram matrix");
    let half = Rational::new(1, 2);
    let mut lozenge = MultTable::zeros(n);
    let mut black_lozenge = MultTable::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut c_loz = Vector::zeros(n);
            let mut c_black = Vector::zeros(n);
            for k in 0..n {
                let e_i = Vector::basis(n, i);
                let e_j = Vector::basis(n, j);
                let e_k = Vector::basis(n, k);
                let t1 = omega.eval(&table.basis_product(i, j), &e_k);
                let t2 = omega.eval(&table.basis_product(j, k), &e_i);
                let t3 = omega.eval(&table.basis_product(k, j), &e_i);
                let t4 = omega.eval(&table.basis_product(i, k), &e_j);
                let cross = &(&t2 + &t3) + &t4;
                c_loz[k] = &(&t1 + &cross) * &half;
                c_black[k] = &(&t1 - &cross) * &half;
            }
            let w_loz = solve_against_form(&gram_t_inv, &c_loz);
            let w_black = solve_against_form(&gram_t_inv, &c_black);
            for k in 0..n {
                if !w_loz[k].is_zero() {
                    lozenge
                        .set_constant(i, j, k, w_loz[k].clone())
                        .expect("indices in range by construction");
                }
                if !w_black[k].is_zero() {
                    black_lozenge
                        .set_constant(i, j, k, w_black[k].clone())
                        .expect("indices in range by construction");
                }
            }
        }
    }
    Ok((lozenge, black_lozenge))
}

/// The split pair `(≻, ≺)` that a nondegenerate skew 2-cocycle induces on
/// a product, defined for all `z` by
///
/// ```text
/// ω(x≻y, z) = ω(y, x∘z)
/// ω(x≺y, z) = −ω(x, y∘z + z∘y)
/// ```
///
/// The cocycle condition is validated first; when it holds, the result is
/// the [`levi_civita`] pair with its two tables swapped.
///
/// # Errors
///
/// As [`levi_civita`], plus [`Error::NotCocycle`] if the form fails the
/// `two-cocycle` identity system over the product.
pub fn levi_civita_from_cocycle(table: &MultTable, omega: &BilinearForm) -> Result<SplitPair> {
    require_symplectic(table, omega)?;
    let bundle = AlgebraBundle::new(table.dim())
        .with_product("circ", table.clone())?
        .with_form("omega", omega.clone())?;
    if !run_system("two-cocycle", &bundle)?.holds {
        return Err(Error::NotCocycle);
    }
    levi_civita_from_cocycle_unchecked(table, omega)
}

/// [`levi_civita_from_cocycle`] without the skew and cocycle validation.
/// The solve itself still needs an invertible Gram matrix.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the form is on the wrong dimension,
/// [`Error::DegenerateForm`] if it is degenerate.
pub fn levi_civita_from_cocycle_unchecked(
    table: &MultTable,
    omega: &BilinearForm,
) -> Result<SplitPair> {
    if omega.dim() != table.dim() {
        return Err(Error::dim_mismatch(table.dim(), omega.dim()));
    }
    if !omega.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let n = table.dim();
    let gram_t_inv = omega
        .gram()
        .transpose()
        .invert()
        .expect("nondegenerate form has an invertible Gram matrix");
    let mut succ = MultTable::zeros(n);
    let mut prec = MultTable::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let e_i = Vector::basis(n, i);
            let e_j = Vector::basis(n, j);
            let mut c_succ = Vector::zeros(n);
            let mut c_prec = Vector::zeros(n);
            for k in 0..n {
                c_succ[k] = omega.eval(&e_j, &table.basis_product(i, k));
                let sym = &table.basis_product(j, k) + &table.basis_product(k, j);
                c_prec[k] = -&omega.eval(&e_i, &sym);
            }
            let w_succ = solve_against_form(&gram_t_inv, &c_succ);
            let w_prec = solve_against_form(&gram_t_inv, &c_prec);
            for k in 0..n {
                if !w_succ[k].is_zero() {
                    succ.set_constant(i, j, k, w_succ[k].clone())
                        .expect("indices in range by construction");
                }
                if !w_prec[k].is_zero() {
                    prec.set_constant(i, j, k, w_prec[k].clone())
                        .expect("indices in range by construction");
                }
            }
        }
    }
    SplitPair::anti_pre(succ, prec)
}

/// Checks dimension agreement for the operator machinery: `T`, the
/// algebra, and the representation must all live on one dimension.
fn require_operator_dims(t: &LinearEndo, table: &MultTable, rep: &RepBundle) -> Result<()> {
    if t.dim() != table.dim() {
        return Err(Error::dim_mismatch(table.dim(), t.dim()));
    }
    if rep.algebra_dim() != table.dim() {
        return Err(Error::dim_mismatch(table.dim(), rep.algebra_dim()));
    }
    if rep.module_dim() != t.dim() {
        return Err(Error::dim_mismatch(t.dim(), rep.module_dim()));
    }
    Ok(())
}

/// Whether `T` inverts the representation's action against the product:
/// `(Tu) ∘ (Tv) = −T(l(Tu)v + r(Tv)u)` on every basis pair of the module.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if `T`, the table, and the representation
/// do not share one dimension; [`Error::UnknownName`] if the bundle lacks
/// the `l`/`r` families.
pub fn check_anti_o(t: &LinearEndo, table: &MultTable, rep: &RepBundle) -> Result<bool> {
    require_operator_dims(t, table, rep)?;
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    let n = t.dim();
    let images: Vec<Vector> = (0..n).map(|u| t.apply(&Vector::basis(n, u))).collect();
    for u in 0..n {
        for v in 0..n {
            let lhs = table.multiply(&images[u], &images[v])?;
            let mut inner = apply_family(l, &images[u], &Vector::basis(n, v));
            inner = &inner + &apply_family(r, &images[v], &Vector::basis(n, u));
            let rhs = -&t.apply(&inner);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `T` additionally kills the mixed operator combination:
/// `l((Tu)∘(Tv))w + r((Tu)∘(Tw))v − r((Tv)∘(Tw))u = 0` on every basis
/// triple of the module.
///
/// # Errors
///
/// As [`check_anti_o`].
pub fn check_strong_anti_o(t: &LinearEndo, table: &MultTable, rep: &RepBundle) -> Result<bool> {
    require_operator_dims(t, table, rep)?;
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    let n = t.dim();
    let images: Vec<Vector> = (0..n).map(|u| t.apply(&Vector::basis(n, u))).collect();
    let mut pair_products = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            pair_products.push(table.multiply(&images[u], &images[v])?);
        }
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let mut defect = apply_family(l, &pair_products[u * n + v], &Vector::basis(n, w));
                defect =
                    &defect + &apply_family(r, &pair_products[u * n + w], &Vector::basis(n, v));
                defect =
                    &defect - &apply_family(r, &pair_products[v * n + w], &Vector::basis(n, u));
                if !defect.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The split pair on the module induced by an anti-`O`-operator:
/// `u ≻ v = −l(Tu)v`, `u ≺ v = −r(Tv)u`.
///
/// The pair always satisfies the last three anti-pre-Leibniz equations;
/// it satisfies the full system exactly when `T` is strong
/// ([`check_strong_anti_o`]).
///
/// # Errors
///
/// [`Error::NotAntiO`] if [`check_anti_o`] fails, plus that function's
/// errors.
pub fn induced_split(t: &LinearEndo, table: &MultTable, rep: &RepBundle) -> Result<SplitPair> {
    if !check_anti_o(t, table, rep)? {
        return Err(Error::NotAntiO);
    }
    induced_split_unchecked(t, table, rep)
}

/// [`induced_split`] without the anti-`O` validation.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] and [`Error::UnknownName`] as
/// [`check_anti_o`].
pub fn induced_split_unchecked(
    t: &LinearEndo,
    table: &MultTable,
    rep: &RepBundle,
) -> Result<SplitPair> {
    require_operator_dims(t, table, rep)?;
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    let n = t.dim();
    let images: Vec<Vector> = (0..n).map(|u| t.apply(&Vector::basis(n, u))).collect();
    let succ = table_from_pairs(n, |u, v| {
        -&apply_family(l, &images[u], &Vector::basis(n, v))
    });
    let prec = table_from_pairs(n, |u, v| {
        -&apply_family(r, &images[v], &Vector::basis(n, u))
    });
    SplitPair::anti_pre(succ, prec)
}

/// The compatible split pair on the algebra carried back through an
/// invertible anti-`O`-operator:
/// `x ≻ y = −T(l(x)T⁻¹y)`, `x ≺ y = −T(r(y)T⁻¹x)`.
///
/// The two tables sum exactly to the input product.
///
/// # Errors
///
/// [`Error::SingularMatrix`] if `T` is not invertible,
/// [`Error::NotAntiO`] if [`check_anti_o`] fails, plus that function's
/// errors.
pub fn compatible_split_from_invertible_anti_o(
    t: &LinearEndo,
    table: &MultTable,
    rep: &RepBundle,
) -> Result<SplitPair> {
    if !t.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    if !check_anti_o(t, table, rep)? {
        return Err(Error::NotAntiO);
    }
    compatible_split_from_invertible_anti_o_unchecked(t, table, rep)
}

/// [`compatible_split_from_invertible_anti_o`] without the anti-`O`
/// validation. `T` must still be invertible.
///
/// # Errors
///
/// [`Error::SingularMatrix`], [`Error::DimensionMismatch`],
/// [`Error::UnknownName`].
pub fn compatible_split_from_invertible_anti_o_unchecked(
    t: &LinearEndo,
    table: &MultTable,
    rep: &RepBundle,
) -> Result<SplitPair> {
    require_operator_dims(t, table, rep)?;
    let t_inv = t.invert()?;
    let l = rep.family("l")?;
    let r = rep.family("r")?;
    let n = t.dim();
    let preimages: Vec<Vector> = (0..n).map(|j| t_inv.apply(&Vector::basis(n, j))).collect();
    let succ = table_from_pairs(n, |i, j| -&t.apply(&l[i].mul_vector(&preimages[j])));
    let prec = table_from_pairs(n, |i, j| -&t.apply(&r[j].mul_vector(&preimages[i])));
    SplitPair::anti_pre(succ, prec)
}

/// Which operator axiom [`perm_to_leibniz`] validates for the twisting
/// map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorMode {
    /// `P(x)⋆P(y) = P(P(x)⋆y) = P(x⋆P(y))`.
    Averaging,
    /// `P(x⋆y) = P(x)⋆y + x⋆P(y)`.
    Derivation,
}

impl OperatorMode {
    /// Name of the identity system in [`crate::registry`] that the map
    /// must satisfy.
    #[must_use]
    pub fn system_name(self) -> &'static str {
        match self {
            OperatorMode::Averaging => "averaging",
            OperatorMode::Derivation => "derivation",
        }
    }
}

/// The product `x∘y = P(x)⋆y − x⋆P(y)` built from a perm product and a
/// map `P` satisfying the chosen operator axiom. The result is always a
/// Leibniz product when the preconditions hold.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if `P` is on the wrong dimension,
/// [`Error::NotPerm`] if the product fails the `perm` identity system,
/// [`Error::OperatorAxiomFails`] (carrying the failing equation label) if
/// `P` fails the chosen axiom.
pub fn perm_to_leibniz(star: &MultTable, p: &LinearEndo, mode: OperatorMode) -> Result<MultTable> {
    if p.dim() != star.dim() {
        return Err(Error::dim_mismatch(star.dim(), p.dim()));
    }
    let bundle = AlgebraBundle::new(star.dim())
        .with_product("star", star.clone())?
        .with_map("p", p.clone())?;
    if !run_system("perm", &bundle)?.holds {
        return Err(Error::NotPerm);
    }
    let report = run_system(mode.system_name(), &bundle)?;
    if let Some(cx) = report.counterexample {
        return Err(Error::OperatorAxiomFails(cx.equation_label));
    }
    perm_to_leibniz_unchecked(star, p)
}

/// [`perm_to_leibniz`] without the perm and operator validation.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if `P` is on the wrong dimension.
pub fn perm_to_leibniz_unchecked(star: &MultTable, p: &LinearEndo) -> Result<MultTable> {
    if p.dim() != star.dim() {
        return Err(Error::dim_mismatch(star.dim(), p.dim()));
    }
    let n = star.dim();
    Ok(table_from_pairs(n, |i, j| {
        let e_i = Vector::basis(n, i);
        let e_j = Vector::basis(n, j);
        let left = star
            .multiply(&p.apply(&e_i), &e_j)
            .expect("dimensions agree by construction");
        let right = star
            .multiply(&e_i, &p.apply(&e_j))
            .expect("dimensions agree by construction");
        &left - &right
    }))
}

/// The dialgebra-to-split transform
/// `x≻y = x⊢y + 2·y⊣x`, `x≺y = −y⊣x − 2·x⊢y`.
///
/// Applies to any pair of tables; when the input satisfies the
/// Novikov-dialgebra system, the output satisfies the admissible
/// Novikov-dialgebra system. The output is tagged anti-pre-Leibniz.
#[must_use]
pub fn minus2_transform(pair: &SplitPair) -> SplitPair {
    let two = Rational::from_integer(2);
    let minus_one = Rational::from_integer(-1);
    let minus_two = Rational::from_integer(-2);
    let flipped = pair.second().flip();
    let succ = pair
        .first()
        .sum(&flipped.scale(&two))
        .expect("both tables share one dimension");
    let prec = flipped
        .scale(&minus_one)
        .sum(&pair.first().scale(&minus_two))
        .expect("both tables share one dimension");
    SplitPair::anti_pre(succ, prec).expect("both tables share one dimension")
}

/// The split-to-dialgebra transform
/// `x⊢y = x≻y + 2·x≺y`, `x⊣y = −y≺x − 2·y≻x`.
///
/// Applies to any pair of tables; when the input satisfies the admissible
/// Novikov-dialgebra system, the output satisfies the Novikov-dialgebra
/// system. The output is tagged Novikov-dialgebra. This is not the literal
/// inverse of [`minus2_transform`]: composing the two scales both tables
/// by −3.
#[must_use]
pub fn plus2_transform(pair: &SplitPair) -> SplitPair {
    let two = Rational::from_integer(2);
    let minus_one = Rational::from_integer(-1);
    let minus_two = Rational::from_integer(-2);
    let vdash = pair
        .first()
        .sum(&pair.second().scale(&two))
        .expect("both tables share one dimension");
    let dashv = pair
        .second()
        .flip()
        .scale(&minus_one)
        .sum(&pair.first().flip().scale(&minus_two))
        .expect("both tables share one dimension");
    SplitPair::novikov(vdash, dashv).expect("both tables share one dimension")
}

/// Rewrites a pre-Leibniz-style pair `(▷, ◁)` into dialgebra slots:
/// `x⊢y = x▷y`, `x⊣y = −y◁x`. The pre-Leibniz system holds for the input
/// exactly when the transformed pre-Leibniz system holds for the output.
#[must_use]
pub fn transformed_from_pre(pair: &SplitPair) -> SplitPair {
    let vdash = pair.first().clone();
    let dashv = pair.second().flip().scale(&Rational::from_integer(-1));
    SplitPair::transformed(vdash, dashv).expect("both tables share one dimension")
}

/// Inverse of [`transformed_from_pre`]: `x▷y = x⊢y`, `x◁y = −y⊣x`.
/// Applying the two in either order returns the original tables.
#[must_use]
pub fn pre_from_transformed(pair: &SplitPair) -> SplitPair {
    let rhd = pair.first().clone();
    let lhd = pair.second().flip().scale(&Rational::from_integer(-1));
    SplitPair::pre(rhd, lhd).expect("both tables share one dimension")
}

/// Shared core of the doubling constructions: given a pair, builds the two
/// products on `A ⊕ A*` — the semidirect extension of the companion
/// algebra by the dual of [`sub_adjacent_rep`], and the semidirect
/// extension by the dual of the companion's adjoint representation.
fn double_structures(pair: &SplitPair) -> (MultTable, MultTable) {
    let companion = pair.sub_adjacent();
    let first_rep = dual_leibniz_rep(&sub_adjacent_rep(pair))
        .expect("sub-adjacent representations carry l/r families");
    let second_rep = dual_leibniz_rep(&adjoint_rep(&companion))
        .expect("adjoint representations carry l/r families");
    let first = semidirect_leibniz(&companion, &first_rep)
        .expect("representation dimensions agree by construction");
    let second = semidirect_leibniz(&companion, &second_rep)
        .expect("representation dimensions agree by construction");
    (first, second)
}

/// The two doubled products on `A ⊕ A*` attached to a pair `(≻, ≺)`:
///
/// ```text
/// (x + a*) ∘₁ (y + b*) = x∘y − L*_≻(x)b* + (L*_≻ + R*_≺)(y)a*
/// (x + a*) ∘₂ (y + b*) = x∘y + L*_∘(x)b* − (L*_∘ + R*_∘)(y)a*
/// ```
///
/// where `∘ = ≻ + ≺`. Each output is individually a Leibniz product; the
/// two together satisfy the compatible-Leibniz system exactly when the
/// input satisfies the admissible Novikov-dialgebra system.
///
/// # Errors
///
/// [`Error::NotAntiPreLeibniz`] if the tables (read as `(≻, ≺)`) fail the
/// anti-pre-Leibniz system.
pub fn double_structures_apl(pair: &SplitPair) -> Result<(MultTable, MultTable)> {
    let as_anti = SplitPair::anti_pre(pair.first().clone(), pair.second().clone())?;
    if !as_anti.check()?.holds {
        return Err(Error::NotAntiPreLeibniz);
    }
    Ok(double_structures(&as_anti))
}

/// [`double_structures_apl`] without the anti-pre-Leibniz validation.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the two tables live on different
/// dimensions.
pub fn double_structures_apl_unchecked(pair: &SplitPair) -> Result<(MultTable, MultTable)> {
    let as_anti = SplitPair::anti_pre(pair.first().clone(), pair.second().clone())?;
    Ok(double_structures(&as_anti))
}

/// The two doubled products on `A ⊕ A*` attached to a pair `(▷, ◁)`:
///
/// ```text
/// (x + a*) •₁ (y + b*) = x•y + L*_▷(x)b* − (L*_▷ + R*_◁)(y)a*
/// (x + a*) •₂ (y + b*) = x•y + L*_•(x)b* − (L*_• + R*_•)(y)a*
/// ```
///
/// where `• = ▷ + ◁`. The two together satisfy the compatible-Leibniz
/// system exactly when the pair's [`transformed_from_pre`] image satisfies
/// the Novikov-dialgebra system.
///
/// # Errors
///
/// [`Error::NotPreLeibniz`] if the tables (read as `(▷, ◁)`) fail the
/// pre-Leibniz system.
pub fn double_structures_pre(pair: &SplitPair) -> Result<(MultTable, MultTable)> {
    let as_pre = SplitPair::pre(pair.first().clone(), pair.second().clone())?;
    if !as_pre.check()?.holds {
        return Err(Error::NotPreLeibniz);
    }
    Ok(double_structures(&as_pre))
}

/// [`double_structures_pre`] without the pre-Leibniz validation.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the two tables live on different
/// dimensions.
pub fn double_structures_pre_unchecked(pair: &SplitPair) -> Result<(MultTable, MultTable)> {
    let as_pre = SplitPair::pre(pair.first().clone(), pair.second().clone())?;
    Ok(double_structures(&as_pre))
}

/// The standard pairing form on `A ⊕ A*`:
/// `ω_p(x + a*, y + b*) = ⟨x, b*⟩ − ⟨a*, y⟩`, i.e. the block Gram matrix
/// `[[0, I], [−I, 0]]` on dimension `2n`. Always skew-symmetric and
/// nondegenerate.
#[must_use]
pub fn omega_p(n: usize) -> BilinearForm {
    let zero = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    BilinearForm::new(Matrix::block_2x2(&zero, &id, &(-&id), &zero))
        .expect("block matrix is square")
}

/// Extends a Novikov dialgebra `(⊢, ⊣)` to the three-product bundle
/// `(∘, ⊢, ⊣)` with `x∘y = x⊢y − y⊣x`; the bundle satisfies the
/// Gel'fand–Dorfman dialgebra system.
///
/// # Errors
///
/// [`Error::NotNovikovDialgebra`] if the tables (read as `(⊢, ⊣)`) fail
/// the Novikov-dialgebra system.
pub fn gd_from_novikov_di(pair: &SplitPair) -> Result<AlgebraBundle> {
    let as_novikov = SplitPair::novikov(pair.first().clone(), pair.second().clone())?;
    if !as_novikov.check()?.holds {
        return Err(Error::NotNovikovDialgebra);
    }
    gd_from_novikov_di_unchecked(&as_novikov)
}

/// [`gd_from_novikov_di`] without the Novikov-dialgebra validation.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the two tables live on different
/// dimensions.
pub fn gd_from_novikov_di_unchecked(pair: &SplitPair) -> Result<AlgebraBundle> {
    let circ = pair
        .first()
        .sum(&pair.second().flip().scale(&Rational::from_integer(-1)))?;
    AlgebraBundle::new(pair.dim())
        .with_product("circ", circ)?
        .with_product("vdash", pair.first().clone())?
        .with_product("dashv", pair.second().clone())
}

/// Builds the three-product bundle `(∘, ⊢, ⊣)` from a Gel'fand–Dorfman
/// algebra `(bracket, ast)` and an averaging operator `P`:
///
/// ```text
/// x∘y = [P(x), y],   x⊢y = P(x)∗y,   x⊣y = x∗P(y)
/// ```
///
/// The output satisfies the Gel'fand–Dorfman dialgebra system.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `bracket`/`ast`
/// products; [`Error::DimensionMismatch`] if `P` is on the wrong
/// dimension; [`Error::NotGDAlgebra`] if the bundle fails the `gd-algebra`
/// system; [`Error::OperatorAxiomFails`] if `P` fails the averaging axiom
/// for either product.
pub fn gd_from_averaging(gd: &AlgebraBundle, p: &LinearEndo) -> Result<AlgebraBundle> {
    let bracket = gd.product("bracket")?;
    let ast = gd.product("ast")?;
    if p.dim() != gd.dim() {
        return Err(Error::dim_mismatch(gd.dim(), p.dim()));
    }
    let inputs = AlgebraBundle::new(gd.dim())
        .with_product("bracket", bracket.clone())?
        .with_product("ast", ast.clone())?
        .with_map("p", p.clone())?;
    if !run_system("gd-algebra", &inputs)?.holds {
        return Err(Error::NotGDAlgebra);
    }
    let report = run_system("averaging", &inputs)?;
    if let Some(cx) = report.counterexample {
        return Err(Error::OperatorAxiomFails(cx.equation_label));
    }
    gd_from_averaging_unchecked(gd, p)
}

/// [`gd_from_averaging`] without the algebra and operator validation.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `bracket`/`ast`
/// products; [`Error::DimensionMismatch`] if `P` is on the wrong
/// dimension.
pub fn gd_from_averaging_unchecked(gd: &AlgebraBundle, p: &LinearEndo) -> Result<AlgebraBundle> {
    let bracket = gd.product("bracket")?;
    let ast = gd.product("ast")?;
    if p.dim() != gd.dim() {
        return Err(Error::dim_mismatch(gd.dim(), p.dim()));
    }
    let n = gd.dim();
    let circ = table_from_pairs(n, |i, j| {
        bracket
            .multiply(&p.apply(&Vector::basis(n, i)), &Vector::basis(n, j))
            .expect("dimensions agree by construction")
    });
    let vdash = table_from_pairs(n, |i, j| {
        ast.multiply(&p.apply(&Vector::basis(n, i)), &Vector::basis(n, j))
            .expect("dimensions agree by construction")
    });
    let dashv = table_from_pairs(n, |i, j| {
        ast.multiply(&Vector::basis(n, i), &p.apply(&Vector::basis(n, j)))
            .expect("dimensions agree by construction")
    });
    AlgebraBundle::new(n)
        .with_product("circ", circ)?
        .with_product("vdash", vdash)?
        .with_product("dashv", dashv)
}

/// Twists a Gel'fand–Dorfman dialgebra bundle `(∘, ⊢, ⊣)` by a derivation
/// `P` of all three products:
///
/// ```text
/// x·y = x∘y + P(x)⊢y − P(y)⊣x
/// ```
///
/// The result is a Leibniz product.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `circ`/`vdash`/`dashv`
/// products; [`Error::DimensionMismatch`] if `P` is on the wrong
/// dimension; [`Error::NotGDDialgebra`] if the bundle fails the
/// `gd-dialgebra` system; [`Error::OperatorAxiomFails`] if `P` fails the
/// derivation axiom for any product.
pub fn derivation_product(gd: &AlgebraBundle, p: &LinearEndo) -> Result<MultTable> {
    let circ = gd.product("circ")?;
    let vdash = gd.product("vdash")?;
    let dashv = gd.product("dashv")?;
    if p.dim() != gd.dim() {
        return Err(Error::dim_mismatch(gd.dim(), p.dim()));
    }
    let inputs = AlgebraBundle::new(gd.dim())
        .with_product("circ", circ.clone())?
        .with_product("vdash", vdash.clone())?
        .with_product("dashv", dashv.clone())?
        .with_map("p", p.clone())?;
    if !run_system("gd-dialgebra", &inputs)?.holds {
        return Err(Error::NotGDDialgebra);
    }
    let report = run_system("derivation", &inputs)?;
    if let Some(cx) = report.counterexample {
        return Err(Error::OperatorAxiomFails(cx.equation_label));
    }
    derivation_product_unchecked(gd, p)
}

/// [`derivation_product`] without the dialgebra and operator validation.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `circ`/`vdash`/`dashv`
/// products; [`Error::DimensionMismatch`] if `P` is on the wrong
/// dimension.
pub fn derivation_product_unchecked(gd: &AlgebraBundle, p: &LinearEndo) -> Result<MultTable> {
    let circ = gd.product("circ")?;
    let vdash = gd.product("vdash")?;
    let dashv = gd.product("dashv")?;
    if p.dim() != gd.dim() {
        return Err(Error::dim_mismatch(gd.dim(), p.dim()));
    }
    let n = gd.dim();
    Ok(table_from_pairs(n, |i, j| {
        let e_i = Vector::basis(n, i);
        let e_j = Vector::basis(n, j);
        let base = circ.basis_product(i, j);
        let left = vdash
            .multiply(&p.apply(&e_i), &e_j)
            .expect("dimensions agree by construction");
        let right = dashv
            .multiply(&p.apply(&e_j), &e_i)
            .expect("dimensions agree by construction");
        &(&base + &left) - &right
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// Dim-2 product with `e0 · e0 = e1` and nothing else.
    fn leib2() -> MultTable {
        MultTable::from_triples(2, &[(0, 0, 1, rat(1))]).unwrap()
    }

    /// The skew form with Gram matrix `[[0, 1], [−1, 0]]`.
    fn omega2() -> BilinearForm {
        BilinearForm::new(Matrix::from_rows(vec![
            vec![rat(0), rat(1)],
            vec![rat(-1), rat(0)],
        ]))
        .unwrap()
    }

    /// Dim-1 split pair with `e≻e = e`, `e≺e = −e` (zero companion).
    fn apl1() -> SplitPair {
        SplitPair::anti_pre(
            MultTable::from_triples(1, &[(0, 0, 0, rat(1))]).unwrap(),
            MultTable::from_triples(1, &[(0, 0, 0, rat(-1))]).unwrap(),
        )
        .unwrap()
    }

    /// Dim-1 dialgebra pair with `e⊢e = e⊣e = e`.
    fn nov1() -> SplitPair {
        let t = MultTable::from_triples(1, &[(0, 0, 0, rat(1))]).unwrap();
        SplitPair::novikov(t.clone(), t).unwrap()
    }

    /// Truncated polynomial product on `{1, x, x², x³}`: basis products
    /// `e_i ⋆ e_j = e_{i+j}` when `i + j ≤ 3`, else zero.
    fn perm4() -> MultTable {
        MultTable::from_fn(4, |i, j, k| if i + j == k { rat(1) } else { rat(0) })
    }

    /// `x² · d/dx` on the truncated polynomial basis: `e1 ↦ e2`,
    /// `e2 ↦ 2e3`, others to zero.
    fn euler_like_map() -> LinearEndo {
        LinearEndo::new(Matrix::from_fn(4, 4, |r, c| {
            if (r, c) == (2, 1) {
                rat(1)
            } else if (r, c) == (3, 2) {
                rat(2)
            } else {
                rat(0)
            }
        }))
        .unwrap()
    }

    /// Multiplication by `x` on the truncated polynomial basis.
    fn shift_map() -> LinearEndo {
        LinearEndo::new(Matrix::from_fn(4, 4, |r, c| {
            if r == c + 1 {
                rat(1)
            } else {
                rat(0)
            }
        }))
        .unwrap()
    }

    #[test]
    fn sub_adjacent_depends_on_flavor() {
        let a = MultTable::from_triples(2, &[(0, 1, 0, rat(3))]).unwrap();
        let b = MultTable::from_triples(2, &[(1, 0, 0, rat(5))]).unwrap();
        let anti = SplitPair::anti_pre(a.clone(), b.clone()).unwrap();
        let sum = anti.sub_adjacent();
        assert_eq!(*sum.constant(0, 1, 0), rat(3));
        assert_eq!(*sum.constant(1, 0, 0), rat(5));
        // Dialgebra flavor: x∘y = x⊢y − y⊣x, so b's (1,0) entry lands at
        // (0,1) with a flipped sign.
        let di = SplitPair::novikov(a, b).unwrap();
        let twisted = di.sub_adjacent();
        assert_eq!(*twisted.constant(0, 1, 0), rat(3) - rat(5));
        assert_eq!(*twisted.constant(1, 0, 0), rat(0));
    }

    #[test]
    fn bundle_slots_follow_flavor() {
        let zero = SplitPair::zeros(SplitFlavor::PreLeibniz, 2);
        let bundle = zero.to_bundle();
        assert!(bundle.product("rhd").is_ok());
        assert!(bundle.product("lhd").is_ok());
        assert!(bundle.product("succ").is_err());
    }

    #[test]
    fn adjoint_rep_of_leib2_matches_hand_computation() {
        let rep = adjoint_rep(&leib2());
        let l = rep.family("l").unwrap();
        let r = rep.family("r").unwrap();
        let expected = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
        assert_eq!(l[0], expected);
        assert_eq!(r[0], expected);
        assert!(l[1].is_zero());
        assert!(r[1].is_zero());
    }

    #[test]
    fn semidirect_with_adjoint_is_leibniz() {
        let table = leib2();
        let extended = semidirect_leibniz(&table, &adjoint_rep(&table)).unwrap();
        assert_eq!(extended.dim(), 4);
        // A·A block survives, V·V block vanishes.
        assert_eq!(*extended.constant(0, 0, 1), rat(1));
        assert_eq!(*extended.constant(2, 2, 3), rat(0));
        // A·V and V·A blocks carry the adjoint action: e0 · e2 = e3.
        assert_eq!(*extended.constant(0, 2, 3), rat(1));
        assert_eq!(*extended.constant(2, 0, 3), rat(1));
        let bundle = AlgebraBundle::new(4)
            .with_product("circ", extended)
            .unwrap();
        assert!(run_system("leibniz", &bundle).unwrap().holds);
    }

    #[test]
    fn semidirect_with_dual_adjoint_is_leibniz() {
        let table = leib2();
        let dual = dual_leibniz_rep(&adjoint_rep(&table)).unwrap();
        let extended = semidirect_leibniz(&table, &dual).unwrap();
        let bundle = AlgebraBundle::new(4)
            .with_product("circ", extended)
            .unwrap();
        assert!(run_system("leibniz", &bundle).unwrap().holds);
        // Applying the dual construction twice still yields a
        // representation.
        let double_dual = dual_leibniz_rep(&dual).unwrap();
        let extended = semidirect_leibniz(&table, &double_dual).unwrap();
        let bundle = AlgebraBundle::new(4)
            .with_product("circ", extended)
            .unwrap();
        assert!(run_system("leibniz", &bundle).unwrap().holds);
    }

    #[test]
    fn semidirect_of_zero_data_is_zero() {
        let zero = MultTable::zeros(2);
        let rep = RepBundle::leibniz(
            2,
            3,
            vec![Matrix::zeros(3, 3); 2],
            vec![Matrix::zeros(3, 3); 2],
        )
        .unwrap();
        assert!(semidirect_leibniz(&zero, &rep).unwrap().is_zero());
    }

    #[test]
    fn semidirect_apl_with_adjoint_quadruple_is_anti_pre_leibniz() {
        let pair = apl1();
        let extended = semidirect_apl(&pair, &adjoint_split_rep(&pair)).unwrap();
        assert_eq!(extended.dim(), 2);
        assert!(extended.check().unwrap().holds);
    }

    #[test]
    fn semidirect_apl_with_dual_quadruple_is_anti_pre_leibniz() {
        let pair = apl1();
        let dual = dual_apl_rep(&adjoint_split_rep(&pair)).unwrap();
        let extended = semidirect_apl(&pair, &dual).unwrap();
        assert!(extended.check().unwrap().holds);
    }

    #[test]
    fn levi_civita_on_leib2_matches_hand_elimination() {
        let (lozenge, black) = levi_civita(&leib2(), &omega2()).unwrap();
        // e0 ◇ e0 = 2e1 and e0 ◆ e0 = −e1; every other basis product is 0.
        assert_eq!(lozenge.basis_product(0, 0), {
            let mut v = Vector::zeros(2);
            v[1] = rat(2);
            v
        });
        assert_eq!(black.basis_product(0, 0), {
            let mut v = Vector::zeros(2);
            v[1] = rat(-1);
            v
        });
        assert_eq!(lozenge.nonzero_entries().count(), 1);
        assert_eq!(black.nonzero_entries().count(), 1);
        // The two products recompose the original one.
        assert_eq!(lozenge.sum(&black).unwrap(), leib2());
    }

    #[test]
    fn levi_civita_rejects_bad_forms() {
        assert!(matches!(
            levi_civita(&leib2(), &BilinearForm::zeros(2)),
            Err(Error::DegenerateForm)
        ));
        let symmetric = BilinearForm::new(Matrix::identity(2)).unwrap();
        assert!(matches!(
            levi_civita(&leib2(), &symmetric),
            Err(Error::NotSkew)
        ));
        assert!(levi_civita(&MultTable::zeros(2), &omega2())
            .map(|(a, b)| a.is_zero() && b.is_zero())
            .unwrap());
    }

    #[test]
    fn cocycle_split_on_leib2_matches_hand_elimination() {
        let pair = levi_civita_from_cocycle(&leib2(), &omega2()).unwrap();
        assert_eq!(*pair.first().constant(0, 0, 1), rat(-1));
        assert_eq!(*pair.second().constant(0, 0, 1), rat(2));
        assert_eq!(pair.first().nonzero_entries().count(), 1);
        assert_eq!(pair.second().nonzero_entries().count(), 1);
        // Recomposition and the swap relation against the two-product
        // averaging.
        assert_eq!(pair.sub_adjacent(), leib2());
        let (lozenge, black) = levi_civita(&leib2(), &omega2()).unwrap();
        assert_eq!(*pair.first(), black);
        assert_eq!(*pair.second(), lozenge);
        // The split satisfies its own axiom system.
        assert!(pair.check().unwrap().holds);
    }

    #[test]
    fn cocycle_split_rejects_non_cocycles() {
        // e0∘e0 = e0 is not a 2-cocycle match for omega2: at
        // (x,y,z) = (e0,e0,e1) the defining equation reads −1 = 0.
        let table = MultTable::from_triples(2, &[(0, 0, 0, rat(1))]).unwrap();
        assert!(matches!(
            levi_civita_from_cocycle(&table, &omega2()),
            Err(Error::NotCocycle)
        ));
        // The unchecked sibling still produces the solve result.
        assert!(levi_civita_from_cocycle_unchecked(&table, &omega2()).is_ok());
    }

    #[test]
    fn identity_is_anti_o_operator_on_zero_companion() {
        let pair = apl1();
        let companion = pair.sub_adjacent();
        assert!(companion.is_zero());
        let rep = sub_adjacent_rep(&pair);
        let id = LinearEndo::identity(1);
        assert!(check_anti_o(&id, &companion, &rep).unwrap());
        assert!(check_strong_anti_o(&id, &companion, &rep).unwrap());
        // The induced split recovers the original pair.
        let induced = induced_split(&id, &companion, &rep).unwrap();
        assert_eq!(induced.first(), pair.first());
        assert_eq!(induced.second(), pair.second());
        // And the carried-back compatible split is the same thing here.
        let compatible = compatible_split_from_invertible_anti_o(&id, &companion, &rep).unwrap();
        assert_eq!(compatible.first(), pair.first());
        assert_eq!(compatible.second(), pair.second());
    }

    #[test]
    fn natural_map_inverse_is_anti_o_operator_on_leib2() {
        let table = leib2();
        let coadjoint = dual_leibniz_rep(&adjoint_rep(&table)).unwrap();
        let natural_inv = LinearEndo::new(omega2().natural_map().invert().unwrap()).unwrap();
        assert!(check_anti_o(&natural_inv, &table, &coadjoint).unwrap());
        assert!(check_strong_anti_o(&natural_inv, &table, &coadjoint).unwrap());
        // Carried back through T, the split matches the cocycle-induced one.
        let split =
            compatible_split_from_invertible_anti_o(&natural_inv, &table, &coadjoint).unwrap();
        let expected = levi_civita_from_cocycle(&table, &omega2()).unwrap();
        assert_eq!(split.first(), expected.first());
        assert_eq!(split.second(), expected.second());
        // The induced split on the module side is isomorphic, not equal:
        // it satisfies the anti-pre-Leibniz system on its own.
        let induced = induced_split(&natural_inv, &table, &coadjoint).unwrap();
        assert!(induced.check().unwrap().holds);
    }

    #[test]
    fn zero_map_is_anti_o_operator() {
        let table = leib2();
        let rep = adjoint_rep(&table);
        let zero = LinearEndo::zeros(2);
        assert!(check_anti_o(&zero, &table, &rep).unwrap());
        assert!(check_strong_anti_o(&zero, &table, &rep).unwrap());
        let induced = induced_split(&zero, &table, &rep).unwrap();
        assert!(induced.first().is_zero());
        assert!(induced.second().is_zero());
        // Not invertible, so the compatible-split route refuses it.
        assert!(matches!(
            compatible_split_from_invertible_anti_o(&zero, &table, &rep),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn non_anti_o_operator_is_rejected() {
        // T = id against the adjoint rep of leib2:
        // (Te0)∘(Te0) = e1, but −T(l(e0)e0 + r(e0)e0) = −2e1.
        let table = leib2();
        let rep = adjoint_rep(&table);
        let id = LinearEndo::identity(2);
        assert!(!check_anti_o(&id, &table, &rep).unwrap());
        assert!(matches!(
            induced_split(&id, &table, &rep),
            Err(Error::NotAntiO)
        ));
        assert!(matches!(
            compatible_split_from_invertible_anti_o(&id, &table, &rep),
            Err(Error::NotAntiO)
        ));
    }

    #[test]
    fn perm_product_with_derivation_twist() {
        let star = perm4();
        let twisted = perm_to_leibniz(&star, &euler_like_map(), OperatorMode::Derivation).unwrap();
        // 1∘x = −x², x∘1 = x², x∘x = 0, 1∘x² = −2x³.
        assert_eq!(*twisted.constant(0, 1, 2), rat(-1));
        assert_eq!(*twisted.constant(1, 0, 2), rat(1));
        assert!(twisted.basis_product(1, 1).is_zero());
        assert_eq!(*twisted.constant(0, 2, 3), rat(-2));
        let bundle = AlgebraBundle::new(4).with_product("circ", twisted).unwrap();
        assert!(run_system("leibniz", &bundle).unwrap().holds);
    }

    #[test]
    fn perm_product_with_averaging_twist_collapses() {
        // Commutativity makes P(x)⋆y = x⋆P(y) for multiplication maps.
        let twisted = perm_to_leibniz(&perm4(), &shift_map(), OperatorMode::Averaging).unwrap();
        assert!(twisted.is_zero());
        let zero = LinearEndo::zeros(4);
        assert!(perm_to_leibniz(&perm4(), &zero, OperatorMode::Derivation)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn perm_twist_rejects_bad_inputs() {
        // e0 ⋆ e1 = e0 is not associative: (e0⋆e1)⋆e1 = e0 ≠ 0 = e0⋆(e1⋆e1).
        let not_perm = MultTable::from_triples(2, &[(0, 1, 0, rat(1))]).unwrap();
        assert!(matches!(
            perm_to_leibniz(&not_perm, &LinearEndo::zeros(2), OperatorMode::Averaging),
            Err(Error::NotPerm)
        ));
        // d/dx does not descend to the truncated quotient; the derivation
        // axiom fails and the error carries the expanded equation label.
        let ddx = LinearEndo::new(Matrix::from_fn(4, 4, |r, c| {
            if c == r + 1 {
                rat(i64::try_from(c).unwrap())
            } else {
                rat(0)
            }
        }))
        .unwrap();
        match perm_to_leibniz(&perm4(), &ddx, OperatorMode::Derivation) {
            Err(Error::OperatorAxiomFails(label)) => {
                assert_eq!(label, "derivation [star]");
            }
            other => panic!("expected operator-axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn minus2_transform_matches_hand_computation() {
        let split = minus2_transform(&nov1());
        assert_eq!(*split.first().constant(0, 0, 0), rat(3));
        assert_eq!(*split.second().constant(0, 0, 0), rat(-3));
        assert_eq!(split.flavor(), SplitFlavor::AntiPreLeibniz);
        // The transform of a Novikov dialgebra satisfies the admissible
        // system.
        let bundle = split.to_bundle();
        assert!(
            run_system("admissible-novikov-dialgebra", &bundle)
                .unwrap()
                .holds
        );
        // ⊢ = ∘, ⊣ = 0 maps to ≻ = ∘, ≺ = −2∘.
        let degenerate = SplitPair::novikov(leib2(), MultTable::zeros(2)).unwrap();
        let image = minus2_transform(&degenerate);
        assert_eq!(*image.first(), leib2());
        assert_eq!(*image.second(), leib2().scale(&rat(-2)));
    }

    #[test]
    fn plus2_transform_matches_hand_computation() {
        let di = plus2_transform(&apl1());
        assert_eq!(*di.first().constant(0, 0, 0), rat(-1));
        assert_eq!(*di.second().constant(0, 0, 0), rat(-1));
        assert_eq!(di.flavor(), SplitFlavor::NovikovDialgebra);
        let bundle = di.to_bundle();
        assert!(run_system("novikov-dialgebra", &bundle).unwrap().holds);
    }

    #[test]
    fn round_trip_scales_by_minus_three() {
        let pair = nov1();
        let round = plus2_transform(&minus2_transform(&pair));
        assert_eq!(*round.first(), pair.first().scale(&rat(-3)));
        assert_eq!(*round.second(), pair.second().scale(&rat(-3)));
    }

    #[test]
    fn pre_transform_is_involutive() {
        let pre = pre_from_transformed(&nov1());
        assert_eq!(*pre.first().constant(0, 0, 0), rat(1));
        assert_eq!(*pre.second().constant(0, 0, 0), rat(-1));
        assert_eq!(pre.flavor(), SplitFlavor::PreLeibniz);
        let back = transformed_from_pre(&pre);
        assert_eq!(back.first(), nov1().first());
        assert_eq!(back.second(), nov1().second());
        // The pre-image of a Novikov dialgebra satisfies the pre-Leibniz
        // system.
        assert!(pre.check().unwrap().holds);
    }

    #[test]
    fn doubled_structures_from_apl1() {
        let (first, second) = double_structures_apl(&apl1()).unwrap();
        assert_eq!(first.dim(), 2);
        // Companion is zero, so only the dual actions survive:
        // e0 ∘₁ e1 = e1 and nothing else; the second table vanishes.
        assert_eq!(*first.constant(0, 1, 1), rat(1));
        assert_eq!(first.nonzero_entries().count(), 1);
        assert!(second.is_zero());
        // Each table is Leibniz and the pair is compatible.
        let bundle = AlgebraBundle::new(2)
            .with_product("circ1", first)
            .unwrap()
            .with_product("circ2", second)
            .unwrap();
        assert!(run_system("compatible-leibniz", &bundle).unwrap().holds);
    }

    #[test]
    fn doubling_respects_the_admissibility_boundary() {
        // apl1 is admissible, so its double is compatible (previous test).
        // A non-anti-pre-Leibniz pair is rejected outright: with
        // e0≻e0 = e0 and ≺ = 0, the equation
        // (x∘y)≻z = y≻(x≻z) − x≻(y≻z) reads e0 = 0.
        let idem = MultTable::from_triples(2, &[(0, 0, 0, rat(1))]).unwrap();
        let broken = SplitPair::anti_pre(idem, MultTable::zeros(2)).unwrap();
        assert!(matches!(
            double_structures_apl(&broken),
            Err(Error::NotAntiPreLeibniz)
        ));
        let zero = SplitPair::zeros(SplitFlavor::AntiPreLeibniz, 2);
        let (first, second) = double_structures_apl(&zero).unwrap();
        assert!(first.is_zero());
        assert!(second.is_zero());
    }

    #[test]
    fn doubled_structures_from_pre_pair() {
        let pre = pre_from_transformed(&nov1());
        let (first, second) = double_structures_pre(&pre).unwrap();
        let bundle = AlgebraBundle::new(2)
            .with_product("circ1", first)
            .unwrap()
            .with_product("circ2", second)
            .unwrap();
        // nov1 is a Novikov dialgebra, so the doubled pair is compatible.
        assert!(run_system("compatible-leibniz", &bundle).unwrap().holds);
        // e0▷e0 = e0 with ◁ = 0 violates x▷(y▷z) = (x▷y)▷z + (x◁y)▷z +
        // y▷(x▷z), which reads e0 = 2e0.
        let idem = MultTable::from_triples(2, &[(0, 0, 0, rat(1))]).unwrap();
        assert!(matches!(
            double_structures_pre(&SplitPair::pre(idem, MultTable::zeros(2)).unwrap()),
            Err(Error::NotPreLeibniz)
        ));
    }

    #[test]
    fn omega_p_is_the_standard_pairing() {
        let form = omega_p(1);
        assert_eq!(form.gram(), omega2().gram());
        let form = omega_p(3);
        assert_eq!(form.dim(), 6);
        assert!(form.is_skew());
        assert!(form.is_nondegenerate());
        assert_eq!(form.gram().row(0), {
            let mut v = Vector::zeros(6);
            v[3] = rat(1);
            v
        });
    }

    #[test]
    fn omega_p_is_a_cocycle_on_the_doubled_product() {
        // The first doubled product of apl1 carries ω_p as a 2-cocycle.
        let (first, _) = double_structures_apl(&apl1()).unwrap();
        let bundle = AlgebraBundle::new(2)
            .with_product("circ", first)
            .unwrap()
            .with_form("omega", omega_p(1))
            .unwrap();
        assert!(run_system("two-cocycle", &bundle).unwrap().holds);
    }

    #[test]
    fn gd_bundle_from_novikov_dialgebra() {
        let bundle = gd_from_novikov_di(&nov1()).unwrap();
        // x∘y = x⊢y − y⊣x collapses on the one-dimensional fixture.
        assert!(bundle.product("circ").unwrap().is_zero());
        assert!(run_system("gd-dialgebra", &bundle).unwrap().holds);
        // Scaling preserves every identity in sight.
        let scaled = SplitPair::novikov(
            nov1().first().scale(&rat(-4)),
            nov1().second().scale(&rat(-4)),
        )
        .unwrap();
        assert!(gd_from_novikov_di(&scaled).is_ok());
    }

    #[test]
    fn gd_bundle_rejects_non_novikov_input() {
        // ⊣ with e0⊣e0 = e0, e0⊣e1 = e1 breaks (z⊣y)⊣x = (z⊣x)⊣y.
        let dashv = MultTable::from_triples(2, &[(0, 0, 0, rat(1)), (0, 1, 1, rat(1))]).unwrap();
        let pair = SplitPair::novikov(MultTable::zeros(2), dashv).unwrap();
        assert!(matches!(
            gd_from_novikov_di(&pair),
            Err(Error::NotNovikovDialgebra)
        ));
        assert!(gd_from_novikov_di_unchecked(&pair).is_ok());
    }

    #[test]
    fn gd_bundle_from_averaging_operator() {
        // Zero bracket + truncated polynomial product is a GD algebra;
        // multiplication by x is an averaging operator for it.
        let gd = AlgebraBundle::new(4)
            .with_product("bracket", MultTable::zeros(4))
            .unwrap()
            .with_product("ast", perm4())
            .unwrap();
        let bundle = gd_from_averaging(&gd, &shift_map()).unwrap();
        assert!(bundle.product("circ").unwrap().is_zero());
        assert_eq!(*bundle.product("vdash").unwrap().constant(0, 0, 1), rat(1));
        assert!(run_system("gd-dialgebra", &bundle).unwrap().holds);
        // P = 0 collapses everything.
        let collapsed = gd_from_averaging(&gd, &LinearEndo::zeros(4)).unwrap();
        assert!(collapsed.product("vdash").unwrap().is_zero());
    }

    #[test]
    fn gd_averaging_rejects_bad_inputs() {
        // leib2 as a bracket is not skew-symmetric, so the Lie check fails.
        let bad = AlgebraBundle::new(2)
            .with_product("bracket", leib2())
            .unwrap()
            .with_product("ast", MultTable::zeros(2))
            .unwrap();
        assert!(matches!(
            gd_from_averaging(&bad, &LinearEndo::zeros(2)),
            Err(Error::NotGDAlgebra)
        ));
        // A good algebra with a non-averaging map: the axiom label is
        // reported.
        let gd = AlgebraBundle::new(4)
            .with_product("bracket", MultTable::zeros(4))
            .unwrap()
            .with_product("ast", perm4())
            .unwrap();
        match gd_from_averaging(&gd, &euler_like_map()) {
            Err(Error::OperatorAxiomFails(label)) => {
                assert_eq!(label, "averaging-1 [ast]");
            }
            other => panic!("expected operator-axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn derivation_product_twist() {
        // Dim-2 bundle: e0∘e0 = e1, e0⊢e0 = e1, ⊣ = 0, with derivation
        // P = diag(1, 2).
        let gd = AlgebraBundle::new(2)
            .with_product("circ", leib2())
            .unwrap()
            .with_product("vdash", leib2())
            .unwrap()
            .with_product("dashv", MultTable::zeros(2))
            .unwrap();
        let p = LinearEndo::new(Matrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(2)],
        ]))
        .unwrap();
        let twisted = derivation_product(&gd, &p).unwrap();
        // x·y = x∘y + P(x)⊢y − P(y)⊣x gives e0·e0 = e1 + e1 = 2e1.
        assert_eq!(*twisted.constant(0, 0, 1), rat(2));
        assert_eq!(twisted.nonzero_entries().count(), 1);
        let bundle = AlgebraBundle::new(2).with_product("circ", twisted).unwrap();
        assert!(run_system("leibniz", &bundle).unwrap().holds);
        // P = 0 returns the base product unchanged.
        let base = derivation_product(&gd, &LinearEndo::zeros(2)).unwrap();
        assert_eq!(base, leib2());
    }

    #[test]
    fn derivation_product_rejects_bad_inputs() {
        let gd = AlgebraBundle::new(2)
            .with_product("circ", leib2())
            .unwrap()
            .with_product("vdash", leib2())
            .unwrap()
            .with_product("dashv", MultTable::zeros(2))
            .unwrap();
        // The identity map is not a derivation of e0∘e0 = e1.
        match derivation_product(&gd, &LinearEndo::identity(2)) {
            Err(Error::OperatorAxiomFails(label)) => {
                assert_eq!(label, "derivation [circ]");
            }
            other => panic!("expected operator-axiom failure, got {other:?}"),
        }
        // A bundle that is not a GD dialgebra is rejected before the
        // operator check.
        let broken = AlgebraBundle::new(2)
            .with_product(
                "circ",
                MultTable::from_triples(2, &[(0, 0, 0, rat(1))]).unwrap(),
            )
            .unwrap()
            .with_product("vdash", MultTable::zeros(2))
            .unwrap()
            .with_product("dashv", MultTable::zeros(2))
            .unwrap();
        assert!(matches!(
            derivation_product(&broken, &LinearEndo::zeros(2)),
            Err(Error::NotGDDialgebra)
        ));
    }
}
