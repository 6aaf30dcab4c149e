//! Structure-constant data model.
//!
//! A finite-dimensional algebra with one bilinear product is stored as a
//! [`MultTable`]: a dense `dim × dim × dim` array of rationals where
//! `constants[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`. The
//! product of arbitrary vectors is the bilinear extension. Structures with
//! several products (a Novikov dialgebra's `⊢`/`⊣`, a split pair's `≻`/`≺`, a
//! Gel'fand–Dorfman triple) are an [`AlgebraBundle`]: several named tables on
//! one underlying space, together with optional named bilinear forms and
//! linear endomorphisms.
//!
//! Representations are a separate shape: a [`RepBundle`] carries, for each
//! named action map, one `module_dim × module_dim` matrix per basis element
//! of the acting algebra. The module dimension is independent of the algebra
//! dimension because the interesting modules here live on dual spaces and
//! direct sums.
//!
//! Dual-space conventions: dual objects reuse [`Vector`]/[`Matrix`] in the
//! dual basis, the pairing `⟨a*, x⟩` is the standard dot product of
//! coordinates, and dual action maps are produced only through
//! [`dualize_endo`] (negative transpose), so the sign convention
//! `⟨f*(x)u*, v⟩ = −⟨u*, f(x)v⟩` is applied in exactly one place.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::Result;

/// Which argument of the product a multiplication operator fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `L(x): y ↦ x · y`.
    Left,
    /// `R(x): y ↦ y · x`.
    Right,
}

/// Structure constants of one bilinear product on a fixed basis.
///
/// `constant(i, j, k)` is the coefficient of `e_k` in `e_i · e_j`; the
/// product of general vectors is the bilinear extension of these values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultTable {
    dim: usize,
    constants: Vec<Rational>,
}

impl MultTable {
    /// The zero product in the given dimension.
    #[must_use]
    pub fn zeros(dim: usize) -> Self {
        MultTable {
            dim,
            constants: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Builds a table from `(i, j, k, c)` entries; unlisted slots are zero.
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if any index is `≥ dim`;
    /// [`Error::DuplicateConstant`] if a slot appears twice.
    pub fn from_triples(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut table = MultTable::zeros(dim);
        for &(i, j, k, ref c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            let slot = table.offset(i, j, k);
            if !table.constants[slot].is_zero() {
                return Err(Error::DuplicateConstant { i, j, k });
            }
            table.constants[slot] = c.clone();
        }
        Ok(table)
    }

    /// Builds a table entry by entry from a function of `(i, j, k)`.
    #[must_use]
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut table = MultTable::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let slot = table.offset(i, j, k);
                    table.constants[slot] = f(i, j, k);
                }
            }
        }
        table
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Basis dimension.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The coefficient of `e_k` in `e_i · e_j`.
    ///
    /// # Panics
    ///
    /// Panics if any index is `≥ dim`.
    #[must_use]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        assert!(
            i < self.dim && j < self.dim && k < self.dim,
            "table index out of range"
        );
        &self.constants[self.offset(i, j, k)]
    }

    /// Sets one structure constant.
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if any index is `≥ dim`.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<()> {
        for index in [i, j, k] {
            if index >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index,
                    dim: self.dim,
                });
            }
        }
        let slot = self.offset(i, j, k);
        self.constants[slot] = c;
        Ok(())
    }

    /// Whether every constant is zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.constants.iter().all(Rational::is_zero)
    }

    /// The product `e_i · e_j` as a vector.
    ///
    /// # Panics
    ///
    /// Panics if `i` or `j` is `≥ dim`.
    #[must_use]
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        assert!(i < self.dim && j < self.dim, "table index out of range");
        Vector::from_entries(
            (0..self.dim)
                .map(|k| self.constants[self.offset(i, j, k)].clone())
                .collect(),
        )
    }

    /// Bilinear extension: `(u · v)_k = Σ_{i,j} u_i v_j constants[i][j][k]`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if either vector has the wrong length.
    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        for w in [u, v] {
            if w.dim() != self.dim {
                return Err(Error::dim_mismatch(self.dim, w.dim()));
            }
        }
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let weight = &u[i] * &v[j];
                for k in 0..self.dim {
                    let c = &self.constants[self.offset(i, j, k)];
                    if !c.is_zero() {
                        out[k] += c * &weight;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum: the product `u ·_a v + u ·_b v`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if dimensions differ.
    pub fn sum(&self, other: &MultTable) -> Result<MultTable> {
        if self.dim != other.dim {
            return Err(Error::dim_mismatch(self.dim, other.dim));
        }
        Ok(MultTable {
            dim: self.dim,
            constants: self
                .constants
                .iter()
                .zip(other.constants.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The opposite product: `result[i][j][k] = self[j][i][k]`, i.e.
    /// `u ·' v = v · u`.
    #[must_use]
    pub fn flip(&self) -> MultTable {
        MultTable::from_fn(self.dim, |i, j, k| self.constant(j, i, k).clone())
    }

    /// Entrywise scalar multiple `c · self`.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> MultTable {
        MultTable {
            dim: self.dim,
            constants: self.constants.iter().map(|e| e * c).collect(),
        }
    }

    /// The multiplication operator `L(e_i)` or `R(e_i)` as a matrix: column
    /// `j` is `e_i · e_j` (left) or `e_j · e_i` (right).
    ///
    /// # Errors
    ///
    /// [`Error::IndexOutOfRange`] if `basis_index ≥ dim`.
    pub fn mult_operator(&self, side: Side, basis_index: usize) -> Result<Matrix> {
        if basis_index >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: basis_index,
                dim: self.dim,
            });
        }
        Ok(Matrix::from_fn(self.dim, self.dim, |k, j| match side {
            Side::Left => self.constant(basis_index, j, k).clone(),
            Side::Right => self.constant(j, basis_index, k).clone(),
        }))
    }

    /// All left (or right) multiplication operators, indexed by basis
    /// element.
    #[must_use]
    pub fn operator_family(&self, side: Side) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.mult_operator(side, i).expect("index in range"))
            .collect()
    }

    /// Transports the product along an invertible change of basis:
    /// `u ·' v = φ⁻¹(φ(u) · φ(v))`.
    ///
    /// Every multilinear identity satisfied by the original product is
    /// satisfied by the transported one, which makes this the workhorse for
    /// generating fresh instances of an axiom class from a known one.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if shapes differ;
    /// [`Error::SingularMatrix`] if `phi` is not invertible.
    pub fn conjugate(&self, phi: &Matrix) -> Result<MultTable> {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return Err(Error::dim_mismatch(self.dim, phi.rows()));
        }
        let inverse = phi.invert()?;
        let mut table = MultTable::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let product = self.multiply(&phi.column(i), &phi.column(j))?;
                let image = inverse.mul_vector(&product);
                for k in 0..self.dim {
                    let slot = table.offset(i, j, k);
                    table.constants[slot] = image[k].clone();
                }
            }
        }
        Ok(table)
    }

    /// Iterator over the nonzero constants as `(i, j, k, c)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let dim = self.dim;
        self.constants
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(slot, c)| {
                let k = slot % dim;
                let j = (slot / dim) % dim;
                let i = slot / (dim * dim);
                (i, j, k, c)
            })
    }
}

/// A bilinear form `ω` stored by its Gram matrix `gram[i][j] = ω(e_i, e_j)`.
///
/// Skewness and nondegeneracy are queryable predicates, not invariants: the
/// checked constructions decide for themselves which properties they require.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    /// Wraps a Gram matrix.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the matrix is not square.
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dim_mismatch(gram.rows(), gram.cols()));
        }
        Ok(BilinearForm { gram })
    }

    /// The zero form.
    #[must_use]
    pub fn zeros(dim: usize) -> Self {
        BilinearForm {
            gram: Matrix::zeros(dim, dim),
        }
    }

    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// The Gram matrix.
    #[must_use]
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Evaluates `ω(u, v) = uᵀ · gram · v`.
    ///
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn eval(&self, u: &Vector, v: &Vector) -> Rational {
        u.dot(&self.gram.mul_vector(v))
    }

    /// Whether `gram = −gramᵀ`.
    #[must_use]
    pub fn is_skew(&self) -> bool {
        self.gram == -&self.gram.transpose()
    }

    /// Whether `gram = gramᵀ`.
    #[must_use]
    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// Whether the Gram matrix has full rank.
    #[must_use]
    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// The induced map `ω♮: A → A*` with `ω(u, v) = ⟨ω♮(u), v⟩`.
    ///
    /// With the dot-product pairing this is the transpose of the Gram
    /// matrix: `⟨ω♮u, v⟩ = (ω♮u)ᵀv` forces `ω♮ = gramᵀ`.
    #[must_use]
    pub fn natural_map(&self) -> Matrix {
        self.gram.transpose()
    }

    /// Transports the form along a change of basis: `ω'(u, v) = ω(φu, φv)`,
    /// i.e. `gram' = φᵀ · gram · φ`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if shapes differ.
    pub fn conjugate(&self, phi: &Matrix) -> Result<BilinearForm> {
        if phi.rows() != self.dim() || phi.cols() != self.dim() {
            return Err(Error::dim_mismatch(self.dim(), phi.rows()));
        }
        BilinearForm::new(&(&phi.transpose() * &self.gram) * phi)
    }
}

/// A linear endomorphism of the underlying space, acting on coordinate
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEndo {
    matrix: Matrix,
}

impl LinearEndo {
    /// Wraps a square matrix.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the matrix is not square.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::dim_mismatch(matrix.rows(), matrix.cols()));
        }
        Ok(LinearEndo { matrix })
    }

    /// The identity map.
    #[must_use]
    pub fn identity(dim: usize) -> Self {
        LinearEndo {
            matrix: Matrix::identity(dim),
        }
    }

    /// The zero map.
    #[must_use]
    pub fn zeros(dim: usize) -> Self {
        LinearEndo {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    /// Dimension of the space acted on.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The underlying matrix.
    #[must_use]
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Applies the map to a vector.
    ///
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.mul_vector(v)
    }

    /// Whether the map is invertible.
    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// The inverse map.
    ///
    /// # Errors
    ///
    /// [`Error::SingularMatrix`] if not invertible.
    pub fn invert(&self) -> Result<LinearEndo> {
        Ok(LinearEndo {
            matrix: self.matrix.invert()?,
        })
    }
}

/// The matrix of the dual map `f*` in the dual basis: `−fᵀ`.
///
/// This realizes the convention `⟨f*(x)u*, v⟩ = −⟨u*, f(x)v⟩` with the
/// dot-product pairing, and is the only place the convention's sign lives.
/// It is an involution: dualizing twice returns the original matrix.
///
/// # Panics
///
/// Panics if the matrix is not square.
#[must_use]
pub fn dualize_endo(m: &Matrix) -> Matrix {
    assert!(m.is_square(), "dualize_endo requires a square matrix");
    -&m.transpose()
}

/// A named family of action matrices: one `module_dim × module_dim` matrix
/// per basis element of the acting algebra.
///
/// Families are keyed by name; the two standard shapes are `{l, r}` for
/// Leibniz-algebra representations and `{l_succ, r_succ, l_prec, r_prec}`
/// for split-pair representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepBundle {
    algebra_dim: usize,
    module_dim: usize,
    maps: BTreeMap<String, Vec<Matrix>>,
}

/// Family names of a Leibniz-algebra representation.
pub const LEIBNIZ_REP_FAMILIES: [&str; 2] = ["l", "r"];

/// Family names of a split-pair (two-product) representation.
pub const SPLIT_REP_FAMILIES: [&str; 4] = ["l_succ", "r_succ", "l_prec", "r_prec"];

impl RepBundle {
    /// An empty bundle with the given shape.
    #[must_use]
    pub fn new(algebra_dim: usize, module_dim: usize) -> Self {
        RepBundle {
            algebra_dim,
            module_dim,
            maps: BTreeMap::new(),
        }
    }

    /// A Leibniz-representation bundle from its two families.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if family lengths or matrix shapes
    /// disagree.
    pub fn leibniz(
        algebra_dim: usize,
        module_dim: usize,
        l: Vec<Matrix>,
        r: Vec<Matrix>,
    ) -> Result<Self> {
        let mut bundle = RepBundle::new(algebra_dim, module_dim);
        bundle.insert_family("l", l)?;
        bundle.insert_family("r", r)?;
        Ok(bundle)
    }

    /// A split-pair representation bundle from its four families.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if family lengths or matrix shapes
    /// disagree.
    pub fn split(
        algebra_dim: usize,
        module_dim: usize,
        l_succ: Vec<Matrix>,
        r_succ: Vec<Matrix>,
        l_prec: Vec<Matrix>,
        r_prec: Vec<Matrix>,
    ) -> Result<Self> {
        let mut bundle = RepBundle::new(algebra_dim, module_dim);
        bundle.insert_family("l_succ", l_succ)?;
        bundle.insert_family("r_succ", r_succ)?;
        bundle.insert_family("l_prec", l_prec)?;
        bundle.insert_family("r_prec", r_prec)?;
        Ok(bundle)
    }

    /// Adds (or replaces) a named family.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] unless the family has exactly
    /// `algebra_dim` matrices, each `module_dim × module_dim`.
    pub fn insert_family(&mut self, name: &str, family: Vec<Matrix>) -> Result<()> {
        if family.len() != self.algebra_dim {
            return Err(Error::dim_mismatch(self.algebra_dim, family.len()));
        }
        for m in &family {
            if m.rows() != self.module_dim || m.cols() != self.module_dim {
                return Err(Error::dim_mismatch(self.module_dim, m.rows()));
            }
        }
        self.maps.insert(name.to_string(), family);
        Ok(())
    }

    /// Looks up a family by name.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownName`] if absent.
    pub fn family(&self, name: &str) -> Result<&[Matrix]> {
        self.maps
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Dimension of the acting algebra.
    #[must_use]
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    /// Dimension of the module.
    #[must_use]
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Family names in sorted order.
    pub fn family_names(&self) -> impl Iterator<Item = &str> {
        self.maps.keys().map(String::as_str)
    }
}

/// One underlying space with named products, bilinear forms, and linear
/// endomorphisms — the unit every identity check and construction consumes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraBundle {
    dim: usize,
    products: BTreeMap<String, MultTable>,
    forms: BTreeMap<String, BilinearForm>,
    maps: BTreeMap<String, LinearEndo>,
}

impl AlgebraBundle {
    /// An empty bundle on a `dim`-dimensional space.
    #[must_use]
    pub fn new(dim: usize) -> Self {
        AlgebraBundle {
            dim,
            products: BTreeMap::new(),
            forms: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds (or replaces) a named product.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if the table's dimension differs from the
    /// bundle's.
    pub fn insert_product(&mut self, name: &str, table: MultTable) -> Result<()> {
        if table.dim() != self.dim {
            return Err(Error::dim_mismatch(self.dim, table.dim()));
        }
        self.products.insert(name.to_string(), table);
        Ok(())
    }

    /// Adds (or replaces) a named form.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] on dimension disagreement.
    pub fn insert_form(&mut self, name: &str, form: BilinearForm) -> Result<()> {
        if form.dim() != self.dim {
            return Err(Error::dim_mismatch(self.dim, form.dim()));
        }
        self.forms.insert(name.to_string(), form);
        Ok(())
    }

    /// Adds (or replaces) a named map.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] on dimension disagreement.
    pub fn insert_map(&mut self, name: &str, map: LinearEndo) -> Result<()> {
        if map.dim() != self.dim {
            return Err(Error::dim_mismatch(self.dim, map.dim()));
        }
        self.maps.insert(name.to_string(), map);
        Ok(())
    }

    /// Builder-style [`AlgebraBundle::insert_product`].
    ///
    /// # Errors
    ///
    /// As for `insert_product`.
    pub fn with_product(mut self, name: &str, table: MultTable) -> Result<Self> {
        self.insert_product(name, table)?;
        Ok(self)
    }

    /// Builder-style [`AlgebraBundle::insert_form`].
    ///
    /// # Errors
    ///
    /// As for `insert_form`.
    pub fn with_form(mut self, name: &str, form: BilinearForm) -> Result<Self> {
        self.insert_form(name, form)?;
        Ok(self)
    }

    /// Builder-style [`AlgebraBundle::insert_map`].
    ///
    /// # Errors
    ///
    /// As for `insert_map`.
    pub fn with_map(mut self, name: &str, map: LinearEndo) -> Result<Self> {
        self.insert_map(name, map)?;
        Ok(self)
    }

    /// Looks up a product by name.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownName`] if absent.
    pub fn product(&self, name: &str) -> Result<&MultTable> {
        self.products
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Looks up a form by name.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownName`] if absent.
    pub fn form(&self, name: &str) -> Result<&BilinearForm> {
        self.forms
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Looks up a map by name.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownName`] if absent.
    pub fn map(&self, name: &str) -> Result<&LinearEndo> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Product names in sorted order.
    pub fn product_names(&self) -> impl Iterator<Item = &str> {
        self.products.keys().map(String::as_str)
    }

    /// Form names in sorted order.
    pub fn form_names(&self) -> impl Iterator<Item = &str> {
        self.forms.keys().map(String::as_str)
    }

    /// Map names in sorted order.
    pub fn map_names(&self) -> impl Iterator<Item = &str> {
        self.maps.keys().map(String::as_str)
    }
}
