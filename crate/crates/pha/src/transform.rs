use crate::algebra::Algebra;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{int, sqrt_exact, to_f64, Scalar};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Change of basis that keeps the real unit fixed: a k x k matrix of
/// the block form [[1, E], [0, T_0]] with T_0 invertible. Transforming
/// by such a matrix preserves hypercomplex form in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Matrix,
}

impl BasisChange {
    pub fn new(matrix: Matrix) -> Result<Self, Error> {
        let k = matrix.rows();
        if k == 0 || matrix.cols() != k {
            return Err(Error::shape("basis change must be a square matrix"));
        }
        if !matrix.at(0, 0).is_one() {
            return Err(Error::shape("basis change must fix the unit: entry (0,0) must be 1"));
        }
        for r in 1..k {
            if !matrix.at(r, 0).is_zero() {
                return Err(Error::shape(
                    "basis change must fix the unit: first column below row 0 must be 0",
                ));
            }
        }
        // First column is e_0, so det(T) = det(T_0).
        if matrix.det().is_zero() {
            return Err(Error::shape("basis change block T_0 is singular"));
        }
        Ok(BasisChange { matrix })
    }

    pub fn identity(k: usize) -> Self {
        BasisChange { matrix: Matrix::identity(k) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Matrix product; the block shape is closed under composition.
    pub fn compose(&self, other: &BasisChange) -> BasisChange {
        BasisChange { matrix: &self.matrix * &other.matrix }
    }
}

/// Rewrites the product matrix in the new basis: T⁻¹ ⋉ P ⋉ (T ⊗ T).
/// The result is isomorphic to the input, and is_pha status carries
/// over (the checks are basis-independent, and the unit is fixed).
pub fn apply_transform(a: &Algebra, t: &BasisChange) -> Result<Algebra, Error> {
    if t.dim() != a.dim() {
        return Err(Error::shape(format!(
            "basis change dimension {} does not match algebra dimension {}",
            t.dim(),
            a.dim()
        )));
    }
    let tm = t.matrix();
    let tinv = tm.inverse().expect("basis change is invertible by construction");
    let p = a.product_matrix().stp(&tm.kron(tm));
    Algebra::from_product_matrix(&tinv * &p, None)
}

/// Exact test of whether `t` carries `a` onto `b`.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, t: &BasisChange) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::shape("algebras have different dimensions"));
    }
    let image = apply_transform(a, t)?;
    Ok(image.product_matrix() == b.product_matrix())
}

/// The three 2-dimensional classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dim2Kind {
    Dual,
    Hyperbolic,
    Complex,
}

impl fmt::Display for Dim2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dim2Kind::Dual => "dual",
            Dim2Kind::Hyperbolic => "hyperbolic",
            Dim2Kind::Complex => "complex",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct Dim2Class {
    pub kind: Dim2Kind,
    /// Δ = α + β²/4, exact; its sign is the classification.
    pub discriminant: Scalar,
}

/// Floating-point canonicalization witness: T = [[1, s], [0, t]] sends
/// the (α, β) algebra onto the canonical form of its class up to
/// `residual` (exact rational witnesses need √Δ, which usually is not
/// rational; see `exact_dim2_witness` for when it is).
#[derive(Clone, Copy, Debug)]
pub struct Dim2Witness {
    pub s: f64,
    pub t: f64,
    pub residual: f64,
}

/// The 2-dimensional algebra with i² = α + β i.
pub fn dim2_family(alpha: &Scalar, beta: &Scalar) -> Algebra {
    let rows = vec![
        vec![Scalar::one(), Scalar::zero(), Scalar::zero(), alpha.clone()],
        vec![Scalar::zero(), Scalar::one(), Scalar::one(), beta.clone()],
    ];
    Algebra::from_product_matrix(Matrix::from_rows(rows), None)
        .expect("2x4 family matrix is well-shaped")
}

/// Reads (α, β) back from a 2-dimensional algebra in hypercomplex form.
pub fn dim2_params(a: &Algebra) -> Option<(Scalar, Scalar)> {
    if a.dim() != 2 || !a.check_hypercomplex_form().passed {
        return None;
    }
    Some((a.product_matrix().at(0, 3).clone(), a.product_matrix().at(1, 3).clone()))
}

/// Canonical representative of a class: α ∈ {0, 1, -1}, β = 0.
pub fn dim2_canonical(kind: Dim2Kind) -> Algebra {
    let alpha = match kind {
        Dim2Kind::Dual => int(0),
        Dim2Kind::Hyperbolic => int(1),
        Dim2Kind::Complex => int(-1),
    };
    dim2_family(&alpha, &int(0))
}

/// Classifies the (α, β) algebra by the exact sign of Δ = α + β²/4 and
/// produces a float witness transform with its residual against the
/// canonical product matrix.
pub fn canonicalize_dim2(alpha: &Scalar, beta: &Scalar) -> (Dim2Class, Dim2Witness) {
    let delta = alpha + beta * beta / int(4);
    let kind = match delta.cmp(&Scalar::zero()) {
        std::cmp::Ordering::Equal => Dim2Kind::Dual,
        std::cmp::Ordering::Greater => Dim2Kind::Hyperbolic,
        std::cmp::Ordering::Less => Dim2Kind::Complex,
    };
    let df = to_f64(&delta);
    let t = if df == 0.0 { 1.0 } else { 1.0 / df.abs().sqrt() };
    // + 0.0 turns a negative zero into plain zero for display.
    let s = -to_f64(beta) * t / 2.0 + 0.0;
    let residual = float_witness_residual(alpha, beta, s, t, kind);
    (Dim2Class { kind, discriminant: delta }, Dim2Witness { s, t, residual })
}

/// Exact canonicalizing transform, available precisely when |Δ| is the
/// square of a rational (including Δ = 0, where t = 1 works).
pub fn exact_dim2_witness(alpha: &Scalar, beta: &Scalar) -> Option<BasisChange> {
    let delta = alpha + beta * beta / int(4);
    let t = if delta.is_zero() {
        Scalar::one()
    } else {
        let root = sqrt_exact(&delta.abs())?;
        Scalar::one() / root
    };
    let s = -(beta * &t) / int(2);
    let rows = vec![
        vec![Scalar::one(), s],
        vec![Scalar::zero(), t],
    ];
    Some(BasisChange::new(Matrix::from_rows(rows)).expect("t is nonzero"))
}

/// Max-abs entry of (float transform of the (α,β) table) minus the
/// canonical table: evaluates T⁻¹ · P · (T ⊗ T) in f64.
fn float_witness_residual(alpha: &Scalar, beta: &Scalar, s: f64, t: f64, kind: Dim2Kind) -> f64 {
    let p = [
        [1.0, 0.0, 0.0, to_f64(alpha)],
        [0.0, 1.0, 1.0, to_f64(beta)],
    ];
    let tinv = [[1.0, -s / t], [0.0, 1.0 / t]];
    // T ⊗ T for T = [[1, s], [0, t]].
    let tt = [
        [1.0, s, s, s * s],
        [0.0, t, 0.0, s * t],
        [0.0, 0.0, t, s * t],
        [0.0, 0.0, 0.0, t * t],
    ];
    let mut ptt = [[0.0f64; 4]; 2];
    for r in 0..2 {
        for c in 0..4 {
            ptt[r][c] = (0..4).map(|m| p[r][m] * tt[m][c]).sum();
        }
    }
    let mut out = [[0.0f64; 4]; 2];
    for r in 0..2 {
        for c in 0..4 {
            out[r][c] = (0..2).map(|m| tinv[r][m] * ptt[m][c]).sum();
        }
    }
    let target_alpha = match kind {
        Dim2Kind::Dual => 0.0,
        Dim2Kind::Hyperbolic => 1.0,
        Dim2Kind::Complex => -1.0,
    };
    let target = [[1.0, 0.0, 0.0, target_alpha], [0.0, 1.0, 1.0, 0.0]];
    let mut worst: f64 = 0.0;
    for r in 0..2 {
        for c in 0..4 {
            worst = worst.max((out[r][c] - target[r][c]).abs());
        }
    }
    worst
}
