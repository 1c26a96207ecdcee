use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, Scalar};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// Finite-dimensional real algebra, presented by its product matrix:
/// the k x k^2 matrix P = [M_0 | M_1 | ... | M_{k-1}] whose column
/// i*k + j holds the coordinates of (basis i) * (basis j). The product
/// of arbitrary elements is then P ⋉ x ⋉ y, and P ⋉ x is the matrix of
/// left multiplication by x.
#[derive(Clone, Debug)]
pub struct Algebra {
    dim: usize,
    product_matrix: Matrix,
    name: Option<String>,
}

/// One structure constant: coefficient of basis element `s` in the
/// product (basis `i`) * (basis `j`). All indices 0-based; index 0 is
/// the real unit in hypercomplex conventions.
#[derive(Clone, Debug)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub s: usize,
    pub value: Scalar,
}

/// Outcome of a structural check. On failure, `witness` pins down the
/// first offending basis block/pair/triple. For the commutativity and
/// associativity checks, `residual` is always the exact defect of the
/// matrix-identity route — the zero matrix on a pass — so callers can
/// assert the identity itself, not just the boolean.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub passed: bool,
    pub witness: Option<Witness>,
    pub residual: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Block j of the product matrix breaks the hypercomplex shape.
    Block(usize),
    /// Basis pair (i, j) with e_i e_j != e_j e_i.
    Pair(usize, usize),
    /// Basis triple (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l).
    Triple(usize, usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Block(j) => write!(f, "block {j}"),
            Witness::Pair(i, j) => write!(f, "basis pair ({i}, {j})"),
            Witness::Triple(i, j, l) => write!(f, "basis triple ({i}, {j}, {l})"),
        }
    }
}

impl CheckReport {
    fn pass() -> Self {
        CheckReport { passed: true, witness: None, residual: None }
    }

    fn pass_with(residual: Matrix) -> Self {
        CheckReport { passed: true, witness: None, residual: Some(residual) }
    }

    fn fail(witness: Witness, residual: Matrix) -> Self {
        CheckReport { passed: false, witness: Some(witness), residual: Some(residual) }
    }
}

impl Algebra {
    /// Wraps a k x k^2 product matrix. Rejects any other shape.
    pub fn from_product_matrix(matrix: Matrix, name: Option<String>) -> Result<Self, Error> {
        let dim = matrix.rows();
        if dim == 0 {
            return Err(Error::shape("algebra dimension must be at least 1"));
        }
        if matrix.cols() != dim * dim {
            return Err(Error::shape(format!(
                "product matrix must be {dim} x {}, got {dim} x {}",
                dim * dim,
                matrix.cols()
            )));
        }
        Ok(Algebra { dim, product_matrix: matrix, name })
    }

    /// Builds the product matrix from a sparse structure-constant table;
    /// absent entries are zero. Out-of-range indices and duplicate
    /// (i, j, s) keys are rejected.
    pub fn from_structure_constants(
        dim: usize,
        entries: &[StructureConstant],
        name: Option<String>,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::shape("algebra dimension must be at least 1"));
        }
        let mut m = Matrix::zeros(dim, dim * dim);
        let mut seen = std::collections::HashSet::new();
        for e in entries {
            if e.i >= dim || e.j >= dim || e.s >= dim {
                return Err(Error::shape(format!(
                    "structure constant index ({}, {}, {}) out of range for dimension {dim}",
                    e.i, e.j, e.s
                )));
            }
            if !seen.insert((e.i, e.j, e.s)) {
                return Err(Error::parse(format!(
                    "duplicate structure constant for ({}, {}, {})",
                    e.i, e.j, e.s
                )));
            }
            m.set(e.s, e.i * dim + e.j, e.value.clone());
        }
        Algebra::from_product_matrix(m, name)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_matrix(&self) -> &Matrix {
        &self.product_matrix
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Block M_j: the k x k slice holding products (basis j) * (basis i).
    pub fn block(&self, j: usize) -> Matrix {
        assert!(j < self.dim);
        self.product_matrix.col_block(j * self.dim, self.dim)
    }

    /// Structure constant c^s_{i,j} (0-based).
    pub fn constant(&self, i: usize, j: usize, s: usize) -> &Scalar {
        self.product_matrix.at(s, i * self.dim + j)
    }

    /// Coordinates of the product of two coordinate vectors: P ⋉ x ⋉ y,
    /// unrolled to sum_{i,j} x_i y_j Col_{ik+j}(P) so sparse inputs
    /// (basis vectors in particular) cost next to nothing. The unit
    /// tests pin this against the literal semi-tensor route.
    pub fn product_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let k = self.dim;
        assert_eq!(x.len(), k);
        assert_eq!(y.len(), k);
        let mut out = vec![Scalar::zero(); k];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (s, slot) in out.iter_mut().enumerate() {
                    let c = self.product_matrix.at(s, i * k + j);
                    if !c.is_zero() {
                        *slot += c * &w;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `coords`: P ⋉ x, unrolled to
    /// sum_j x_j M_j (cross-checked against the semi-tensor form in the
    /// unit tests).
    pub fn left_multiplication(&self, coords: &[Scalar]) -> Matrix {
        let k = self.dim;
        assert_eq!(coords.len(), k);
        let mut rep = Matrix::zeros(k, k);
        for (j, xj) in coords.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for r in 0..k {
                for c in 0..k {
                    let v = self.product_matrix.at(r, j * k + c);
                    if !v.is_zero() {
                        let acc = rep.at(r, c) + v * xj;
                        rep.set(r, c, acc);
                    }
                }
            }
        }
        rep
    }

    /// Checks the hypercomplex normal form: M_0 = I and the first column
    /// of each M_j is basis vector j (so basis 0 is a two-sided unit).
    pub fn check_hypercomplex_form(&self) -> CheckReport {
        let k = self.dim;
        let m0 = self.block(0);
        if !m0.is_identity() {
            return CheckReport::fail(Witness::Block(0), &m0 - &Matrix::identity(k));
        }
        for j in 1..k {
            let col = self.block(j).col(0);
            let expect = Matrix::unit_column(k, j);
            if col != expect {
                return CheckReport::fail(Witness::Block(j), &col - &expect);
            }
        }
        CheckReport::pass()
    }

    /// Commutativity via the matrix identity P (I_{k^2} - W_[k,k]) = 0,
    /// cross-checked against symmetry of the structure constants. The
    /// two routes disagreeing is an internal error, never a result.
    pub fn check_commutative(&self) -> Result<CheckReport, Error> {
        let k = self.dim;
        let gap = &Matrix::identity(k * k) - &Matrix::swap_matrix(k, k);
        let residual = self.product_matrix.stp(&gap);
        let matrix_passed = residual.is_zero();

        let mut pair = None;
        'scan: for i in 0..k {
            for j in i + 1..k {
                for s in 0..k {
                    if self.constant(i, j, s) != self.constant(j, i, s) {
                        pair = Some((i, j));
                        break 'scan;
                    }
                }
            }
        }

        if matrix_passed != pair.is_none() {
            return Err(Error::internal(
                "commutativity: matrix identity and structure-constant scan disagree",
            ));
        }
        Ok(match pair {
            None => CheckReport::pass_with(residual),
            Some((i, j)) => CheckReport::fail(Witness::Pair(i, j), residual),
        })
    }

    /// Associativity via P ⋉ P = P (I_k ⊗ P), cross-checked by brute
    /// force over all basis triples.
    pub fn check_associative(&self) -> Result<CheckReport, Error> {
        let k = self.dim;
        let p = &self.product_matrix;
        let lhs = p.stp(p);
        let rhs = p.stp(&Matrix::identity(k).kron(p));
        let residual = &lhs - &rhs;
        let matrix_passed = residual.is_zero();

        let basis: Vec<Vec<Scalar>> = (0..k)
            .map(|i| {
                let mut v = vec![Scalar::zero(); k];
                v[i] = Scalar::one();
                v
            })
            .collect();
        let mut triple = None;
        'scan: for i in 0..k {
            for j in 0..k {
                let ij = self.product_coords(&basis[i], &basis[j]);
                for l in 0..k {
                    let jl = self.product_coords(&basis[j], &basis[l]);
                    let left = self.product_coords(&ij, &basis[l]);
                    let right = self.product_coords(&basis[i], &jl);
                    if left != right {
                        triple = Some((i, j, l));
                        break 'scan;
                    }
                }
            }
        }

        if matrix_passed != triple.is_none() {
            return Err(Error::internal(
                "associativity: matrix identity and basis-triple scan disagree",
            ));
        }
        Ok(match triple {
            None => CheckReport::pass_with(residual),
            Some((i, j, l)) => CheckReport::fail(Witness::Triple(i, j, l), residual),
        })
    }

    /// Perfect hypercomplex algebra: hypercomplex form, commutative and
    /// associative all at once.
    pub fn is_pha(&self) -> bool {
        self.check_hypercomplex_form().passed
            && self
                .check_commutative()
                .expect("commutativity check routes disagree")
                .passed
            && self
                .check_associative()
                .expect("associativity check routes disagree")
                .passed
    }
}

impl PartialEq for Algebra {
    /// Same presentation; the display name is not part of the value.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.product_matrix == other.product_matrix
    }
}

impl Eq for Algebra {}

/// Element of a specific algebra: a coordinate vector tied to its
/// algebra so mixed-algebra arithmetic is rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperNumber {
    algebra: Arc<Algebra>,
    coords: Vec<Scalar>,
}

impl HyperNumber {
    pub fn new(algebra: Arc<Algebra>, coords: Vec<Scalar>) -> Result<Self, Error> {
        if coords.len() != algebra.dim() {
            return Err(Error::shape(format!(
                "expected {} coordinates, got {}",
                algebra.dim(),
                coords.len()
            )));
        }
        Ok(HyperNumber { algebra, coords })
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let k = algebra.dim();
        HyperNumber { algebra, coords: vec![Scalar::zero(); k] }
    }

    /// Basis element j (j = 0 is the real unit in hypercomplex form).
    pub fn unit(algebra: Arc<Algebra>, j: usize) -> Self {
        assert!(j < algebra.dim());
        let k = algebra.dim();
        let mut coords = vec![Scalar::zero(); k];
        coords[j] = Scalar::one();
        HyperNumber { algebra, coords }
    }

    pub fn one(algebra: Arc<Algebra>) -> Self {
        HyperNumber::unit(algebra, 0)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn same_algebra(&self, other: &HyperNumber) -> Result<(), Error> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::domain("operands belong to different algebras"))
        }
    }

    pub fn add(&self, other: &HyperNumber) -> Result<HyperNumber, Error> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(HyperNumber { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, other: &HyperNumber) -> Result<HyperNumber, Error> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(HyperNumber { algebra: self.algebra.clone(), coords })
    }

    pub fn neg(&self) -> HyperNumber {
        HyperNumber {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> HyperNumber {
        HyperNumber {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Algebra product via the product matrix: P ⋉ x ⋉ y.
    pub fn product(&self, other: &HyperNumber) -> Result<HyperNumber, Error> {
        self.same_algebra(other)?;
        let coords = self.algebra.product_coords(&self.coords, &other.coords);
        Ok(HyperNumber { algebra: self.algebra.clone(), coords })
    }

    /// Matrix of left multiplication by this element.
    pub fn left_multiplication(&self) -> Matrix {
        self.algebra.left_multiplication(&self.coords)
    }
}

impl fmt::Display for HyperNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(", "))
    }
}
