//! Representation checks and representation equivalence.
//!
//! A pair of map families is a representation of an algebra exactly when
//! the induced semidirect product on `A ⊕ V` satisfies the same identity
//! system the algebra does. The checks here route through the semidirect
//! constructions and the registry systems rather than transcribing the
//! per-family axioms as separate equations: one engine, one source of
//! truth, and counterexamples come back in the coordinates of the
//! extension, where the offending triple is directly inspectable.

use alloc::vec::Vec;

use crate::algebra::{AlgebraBundle, RepBundle};
use crate::construct::{semidirect_apl, semidirect_leibniz, SplitPair};
use crate::error::Error;
use crate::identity::{check_system, CheckReport};
use crate::linalg::Matrix;
use crate::registry::registry;
use crate::Result;

/// Checks whether a two-family bundle `(l, r)` represents the Leibniz
/// algebra carried by `bundle` under the product named `circ`.
///
/// The verdict is the `leibniz` system evaluated on the semidirect
/// extension `A ⊕ V`; a counterexample, if any, is reported in extension
/// coordinates (module basis vectors sit at indices `dim(A)..`).
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle has no `circ` product or the rep
/// bundle is missing the `l`/`r` families, [`Error::DimensionMismatch`]
/// if the representation's algebra dimension differs from the bundle's.
pub fn check_leibniz_rep(bundle: &AlgebraBundle, rep: &RepBundle) -> Result<CheckReport> {
    let table = bundle.product("circ")?;
    let extended = semidirect_leibniz(table, rep)?;
    let extended_bundle = AlgebraBundle::new(extended.dim()).with_product("circ", extended)?;
    check_system(&registry("leibniz")?, &extended_bundle)
}

/// Checks whether a four-family bundle `(l_succ, r_succ, l_prec, r_prec)`
/// represents the split pair carried by `bundle` under the products named
/// `succ` and `prec`.
///
/// The verdict is the `anti-pre-leibniz` system evaluated on the
/// semidirect extension, with counterexamples in extension coordinates.
///
/// # Errors
///
/// [`Error::UnknownName`] if the bundle lacks the `succ`/`prec` products
/// or the rep bundle lacks one of the four families,
/// [`Error::DimensionMismatch`] on an algebra-dimension mismatch.
pub fn check_apl_rep(bundle: &AlgebraBundle, rep: &RepBundle) -> Result<CheckReport> {
    let succ = bundle.product("succ")?;
    let prec = bundle.product("prec")?;
    let pair = SplitPair::anti_pre(succ.clone(), prec.clone())?;
    let extended = semidirect_apl(&pair, rep)?;
    extended.check()
}

/// Decides whether `phi` intertwines two representation bundles: returns
/// `true` exactly when `phi · f(e_t) = f′(e_t) · phi` for every family
/// name shared by the bundles and every algebra basis index `t`, where
/// `f` ranges over `rep1`'s families and `f′` over `rep2`'s.
///
/// `phi` maps `rep1`'s module into `rep2`'s, so its shape must be
/// `module_dim₂ × module_dim₁`, and it must be invertible.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] if the algebra dimensions differ or
/// `phi` has the wrong shape, [`Error::SingularMatrix`] if `phi` is not
/// invertible, [`Error::UnknownName`] if the bundles carry different
/// family-name sets.
pub fn check_rep_equivalence(rep1: &RepBundle, rep2: &RepBundle, phi: &Matrix) -> Result<bool> {
    if rep1.algebra_dim() != rep2.algebra_dim() {
        return Err(Error::dim_mismatch(rep1.algebra_dim(), rep2.algebra_dim()));
    }
    if phi.rows() != rep2.module_dim() || phi.cols() != rep1.module_dim() {
        return Err(Error::dim_mismatch(rep2.module_dim(), phi.rows()));
    }
    if !phi.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let names1: Vec<&str> = rep1.family_names().collect();
    let names2: Vec<&str> = rep2.family_names().collect();
    if names1 != names2 {
        let missing = names1
            .iter()
            .find(|n| !names2.contains(n))
            .or_else(|| names2.iter().find(|n| !names1.contains(n)))
            .expect("unequal sorted name lists differ in some element");
        return Err(Error::UnknownName((*missing).into()));
    }
    for name in names1 {
        let family1 = rep1.family(name)?;
        let family2 = rep2.family(name)?;
        for t in 0..rep1.algebra_dim() {
            if phi * &family1[t] != &family2[t] * phi {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
