//! JSON interchange format for algebra bundles.
//!
//! A bundle is a single JSON object:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "products": {
//!     "circ": [ { "i": 0, "j": 0, "k": 1, "c": "1" } ]
//!   },
//!   "forms": {
//!     "omega": [ ["0", "1"], ["-1", "0"] ]
//!   },
//!   "maps": {
//!     "p": [ ["1", "0"], ["0", "2"] ]
//!   }
//! }
//! ```
//!
//! * Structure constants are sparse lists of `{i, j, k, c}` records
//!   meaning `e_i * e_j = ... + c * e_k + ...`; omitted slots are zero
//!   and listing the same `(i, j, k)` twice is an input error.
//! * Forms and maps are dense row-major matrices.
//! * Every scalar is an exact rational written as a string, `"n"` or
//!   `"p/q"`; floating-point numbers are never accepted.
//! * Indices are 0-based and must be `< dim`.
//!
//! Emission is canonical: names sorted, triples sorted by `(i, j, k)`,
//! only nonzero constants listed, two-space pretty printing, trailing
//! newline. Re-emitting a parsed bundle is byte-stable.

use std::collections::BTreeMap;

use loday_core::{AlgebraBundle, BilinearForm, LinearEndo, Matrix, MultTable, Rational};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Largest dimension the dense checkers are meant for.
pub const MAX_DIM: usize = 16;

/// One sparse structure constant: `e_i * e_j = ... + c * e_k + ...`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDto {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Serde image of an [`AlgebraBundle`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDto {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub products: BTreeMap<String, Vec<TripleDto>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_scalar(text: &str, context: &str) -> Result<Rational, CliError> {
    text.parse::<Rational>()
        .map_err(|e| CliError::InvalidInput(format!("{context}: bad rational {text:?}: {e}")))
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, context: &str) -> Result<Matrix, CliError> {
    if rows.len() != dim {
        return Err(CliError::InvalidInput(format!(
            "{context}: expected {dim} rows, found {}",
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(CliError::InvalidInput(format!(
                "{context}: row {r} has {} entries, expected {dim}",
                row.len()
            )));
        }
        let mut entries = Vec::with_capacity(dim);
        for (c, cell) in row.iter().enumerate() {
            entries.push(parse_scalar(cell, &format!("{context}[{r}][{c}]"))?);
        }
        parsed.push(entries);
    }
    Ok(Matrix::from_rows(parsed))
}

/// Decodes interchange JSON into a checked [`AlgebraBundle`].
///
/// # Errors
///
/// [`CliError::Parse`] for malformed JSON, [`CliError::InvalidInput`]
/// for schema violations (zero or oversized dimension, out-of-range
/// indices, duplicate `(i, j, k)` slots, ragged matrices, unparsable
/// scalars).
pub fn parse_bundle(text: &str) -> Result<AlgebraBundle, CliError> {
    let dto: BundleDto = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    bundle_from_dto(&dto)
}

/// Builds the bundle described by an already-decoded [`BundleDto`].
///
/// # Errors
///
/// As for [`parse_bundle`], minus the JSON decoding step.
pub fn bundle_from_dto(dto: &BundleDto) -> Result<AlgebraBundle, CliError> {
    if dto.dim == 0 {
        return Err(CliError::InvalidInput("dim must be positive".to_owned()));
    }
    if dto.dim > MAX_DIM {
        return Err(CliError::InvalidInput(format!(
            "dim {} exceeds the supported maximum {MAX_DIM}",
            dto.dim
        )));
    }
    let mut bundle = AlgebraBundle::new(dto.dim);
    for (name, triples) in &dto.products {
        let mut entries = Vec::with_capacity(triples.len());
        for t in triples {
            entries.push((
                t.i,
                t.j,
                t.k,
                parse_scalar(&t.c, &format!("products.{name}"))?,
            ));
        }
        let table = MultTable::from_triples(dto.dim, &entries).map_err(|e| {
            CliError::InvalidInput(format!("products.{name}: {e}"))
        })?;
        bundle.insert_product(name, table).map_err(CliError::Core)?;
    }
    for (name, rows) in &dto.forms {
        let gram = parse_matrix(rows, dto.dim, &format!("forms.{name}"))?;
        let form = BilinearForm::new(gram).map_err(CliError::Core)?;
        bundle.insert_form(name, form).map_err(CliError::Core)?;
    }
    for (name, rows) in &dto.maps {
        let matrix = parse_matrix(rows, dto.dim, &format!("maps.{name}"))?;
        let map = LinearEndo::new(matrix).map_err(CliError::Core)?;
        bundle.insert_map(name, map).map_err(CliError::Core)?;
    }
    Ok(bundle)
}

fn matrix_rows(matrix: &Matrix) -> Vec<Vec<String>> {
    (0..matrix.rows())
        .map(|r| {
            (0..matrix.cols())
                .map(|c| matrix[(r, c)].to_string())
                .collect()
        })
        .collect()
}

/// Converts a bundle back into its canonical serde image.
#[must_use]
pub fn dto_from_bundle(bundle: &AlgebraBundle) -> BundleDto {
    let mut products = BTreeMap::new();
    for name in bundle.product_names() {
        let table = bundle.product(name).expect("listed name resolves");
        let mut triples: Vec<(usize, usize, usize, String)> = table
            .nonzero_entries()
            .map(|(i, j, k, c)| (i, j, k, c.to_string()))
            .collect();
        triples.sort_by_key(|&(i, j, k, _)| (i, j, k));
        products.insert(
            name.to_owned(),
            triples
                .into_iter()
                .map(|(i, j, k, c)| TripleDto { i, j, k, c })
                .collect(),
        );
    }
    let mut forms = BTreeMap::new();
    for name in bundle.form_names() {
        let form = bundle.form(name).expect("listed name resolves");
        forms.insert(name.to_owned(), matrix_rows(form.gram()));
    }
    let mut maps = BTreeMap::new();
    for name in bundle.map_names() {
        let map = bundle.map(name).expect("listed name resolves");
        maps.insert(name.to_owned(), matrix_rows(map.matrix()));
    }
    BundleDto {
        dim: bundle.dim(),
        products,
        forms,
        maps,
    }
}

/// Canonical, byte-stable JSON for a bundle (trailing newline included).
#[must_use]
pub fn emit_bundle(bundle: &AlgebraBundle) -> String {
    let dto = dto_from_bundle(bundle);
    let mut text = serde_json::to_string_pretty(&dto).expect("bundle serialization is infallible");
    text.push('\n');
    text
}
