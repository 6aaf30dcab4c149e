//! Binding bundle entries to the slots an identity system requires.
//!
//! Systems name their slots canonically (`circ`, `succ`/`prec`,
//! `vdash`/`dashv`, `omega`, `p`, ...). Input bundles are free to use
//! other names; a binding copies the chosen entries onto the canonical
//! slots before checking. Bindings never mutate the caller's bundle.

use loday_core::{AlgebraBundle, IdentitySystem};

use crate::error::CliError;

/// Renamings to apply before checking `system` against a bundle.
#[derive(Debug, Clone, Default)]
pub struct Binding<'a> {
    /// Product names, one per required product slot, in the system's
    /// slot order (alphabetical, as reported by error messages).
    pub products: Option<Vec<&'a str>>,
    /// Form name bound to the system's form slot.
    pub form: Option<&'a str>,
    /// Map name bound to the system's map slot.
    pub map: Option<&'a str>,
}

impl<'a> Binding<'a> {
    /// No renaming: the bundle must already use canonical slot names.
    #[must_use]
    pub fn identity() -> Binding<'a> {
        Binding::default()
    }

    /// Binds only the map slot.
    #[must_use]
    pub fn of_map(name: &'a str) -> Binding<'a> {
        Binding {
            map: Some(name),
            ..Binding::default()
        }
    }

    /// Binds only the product slots.
    #[must_use]
    pub fn of_products(names: Vec<&'a str>) -> Binding<'a> {
        Binding {
            products: Some(names),
            ..Binding::default()
        }
    }
}

fn single_slot<'s>(slots: &'s [String], kind: &str, system: &str) -> Result<&'s str, CliError> {
    match slots {
        [slot] => Ok(slot),
        [] => Err(CliError::InvalidInput(format!(
            "system {system} takes no {kind}"
        ))),
        _ => Err(CliError::InvalidInput(format!(
            "system {system} takes {} {kind}s; binding one is ambiguous",
            slots.len()
        ))),
    }
}

/// Applies a binding, returning a bundle whose canonical slots carry
/// the chosen entries.
///
/// # Errors
///
/// [`CliError::InvalidInput`] when the binding does not fit the
/// system's slots; [`CliError::Core`] when a chosen name is absent
/// from the bundle.
pub fn apply(
    bundle: &AlgebraBundle,
    system: &IdentitySystem,
    binding: &Binding<'_>,
) -> Result<AlgebraBundle, CliError> {
    let mut bound = bundle.clone();
    if let Some(products) = &binding.products {
        let slots = &system.required_products;
        if system.expand_per_product {
            return Err(CliError::InvalidInput(format!(
                "system {} applies to every product in the bundle; \
                 product binding is not meaningful",
                system.name
            )));
        }
        if products.len() != slots.len() {
            return Err(CliError::InvalidInput(format!(
                "system {} takes {} product(s) ({}), got {}",
                system.name,
                slots.len(),
                slots.join(", "),
                products.len()
            )));
        }
        let chosen: Vec<_> = products
            .iter()
            .map(|name| bundle.product(name).cloned())
            .collect::<Result<_, _>>()
            .map_err(CliError::Core)?;
        for (slot, table) in slots.iter().zip(chosen) {
            bound.insert_product(slot, table).map_err(CliError::Core)?;
        }
    }
    if let Some(name) = binding.form {
        let slot = single_slot(&system.required_forms, "form", &system.name)?;
        let form = bundle.form(name).map_err(CliError::Core)?.clone();
        bound.insert_form(slot, form).map_err(CliError::Core)?;
    }
    if let Some(name) = binding.map {
        let slot = single_slot(&system.required_maps, "map", &system.name)?;
        let map = bundle.map(name).map_err(CliError::Core)?.clone();
        bound.insert_map(slot, map).map_err(CliError::Core)?;
    }
    Ok(bound)
}
