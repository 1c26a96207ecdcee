//! Matrices whose entries live in a perfect hypercomplex algebra.
//!
//! Perfectness is what makes the usual linear-algebra notions behave:
//! commutativity and associativity of the entries give a well-defined
//! determinant (any expansion order agrees), and the characteristic
//! function decides which determinants are invertible.

use crate::algebra::{Algebra, HyperNumber};
use crate::charfn;
use crate::error::Error;
use crate::matrix::Matrix;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq)]
pub struct PHMatrix {
    algebra: Arc<Algebra>,
    rows: usize,
    cols: usize,
    data: Vec<HyperNumber>,
}

impl PHMatrix {
    /// Entries are row-major and must all belong to `algebra`, which in
    /// turn must pass the three structure checks.
    pub fn new(
        algebra: Arc<Algebra>,
        rows: usize,
        cols: usize,
        data: Vec<HyperNumber>,
    ) -> Result<Self, Error> {
        if !algebra.is_pha() {
            return Err(Error::domain(
                "matrix entries must come from a perfect hypercomplex algebra \
                 (run the structure checks on the algebra first)",
            ));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::shape("matrix must have at least one row and column"));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        for x in &data {
            if !Arc::ptr_eq(x.algebra(), &algebra) && *x.algebra().as_ref() != *algebra {
                return Err(Error::domain("matrix entry belongs to a different algebra"));
            }
        }
        Ok(PHMatrix { algebra, rows, cols, data })
    }

    /// Builds each entry from its coordinate vector.
    pub fn from_coords(
        algebra: Arc<Algebra>,
        rows: usize,
        cols: usize,
        coords: Vec<Vec<crate::scalar::Scalar>>,
    ) -> Result<Self, Error> {
        let data = coords
            .into_iter()
            .map(|c| HyperNumber::new(algebra.clone(), c))
            .collect::<Result<Vec<_>, _>>()?;
        PHMatrix::new(algebra, rows, cols, data)
    }

    pub fn identity(algebra: Arc<Algebra>, n: usize) -> Result<Self, Error> {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                if r == c {
                    data.push(HyperNumber::one(algebra.clone()));
                } else {
                    data.push(HyperNumber::zero(algebra.clone()));
                }
            }
        }
        PHMatrix::new(algebra, n, n, data)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &HyperNumber {
        &self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[HyperNumber] {
        &self.data
    }

    fn same_algebra(&self, other: &PHMatrix) -> Result<(), Error> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(Error::domain("matrices belong to different algebras"))
        }
    }

    pub fn add(&self, other: &PHMatrix) -> Result<PHMatrix, Error> {
        self.same_algebra(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot add a {}x{} matrix to a {}x{} matrix",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b).expect("entries share the algebra"))
            .collect();
        Ok(PHMatrix { algebra: self.algebra.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &PHMatrix) -> Result<PHMatrix, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PHMatrix {
        let data = self.data.iter().map(HyperNumber::neg).collect();
        PHMatrix { algebra: self.algebra.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &PHMatrix) -> Result<PHMatrix, Error> {
        self.same_algebra(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply a {}x{} matrix by a {}x{} matrix",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = HyperNumber::zero(self.algebra.clone());
                for m in 0..self.cols {
                    let term = self.at(r, m).product(other.at(m, c)).expect("same algebra");
                    acc = acc.add(&term).expect("same algebra");
                }
                data.push(acc);
            }
        }
        Ok(PHMatrix { algebra: self.algebra.clone(), rows: self.rows, cols: other.cols, data })
    }

    /// ab - ba.
    pub fn bracket(&self, other: &PHMatrix) -> Result<PHMatrix, Error> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Determinant by cofactor expansion along the first column. The
    /// entries commute and associate, so every expansion order agrees.
    /// Cost is O(n!), fine for the small matrices this library targets;
    /// a division-free method (Berkowitz or Bird) is the upgrade path
    /// if larger sizes are ever needed.
    pub fn det(&self) -> Result<HyperNumber, Error> {
        if self.rows != self.cols {
            return Err(Error::shape("determinant requires a square matrix"));
        }
        Ok(self.det_inner())
    }

    fn det_inner(&self) -> HyperNumber {
        let n = self.rows;
        if n == 1 {
            return self.data[0].clone();
        }
        let mut acc = HyperNumber::zero(self.algebra.clone());
        for r in 0..n {
            let lead = self.at(r, 0);
            if lead.is_zero() {
                continue;
            }
            let term = lead.product(&self.minor(r, 0).det_inner()).expect("same algebra");
            if r % 2 == 0 {
                acc = acc.add(&term).expect("same algebra");
            } else {
                acc = acc.sub(&term).expect("same algebra");
            }
        }
        acc
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PHMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == skip_r {
                continue;
            }
            for c in 0..self.cols {
                if c == skip_c {
                    continue;
                }
                data.push(self.at(r, c).clone());
            }
        }
        PHMatrix {
            algebra: self.algebra.clone(),
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// A square matrix over a perfect algebra is invertible exactly when
    /// its determinant avoids the zero set of the characteristic
    /// function.
    pub fn invertible(&self) -> Result<bool, Error> {
        Ok(!charfn::zero_test(&self.det()?))
    }

    /// Adjugate divided by the determinant. Fails with the offending
    /// determinant when it lies in the zero set.
    pub fn inverse(&self) -> Result<PHMatrix, Error> {
        let det = self.det()?;
        let det_inv = charfn::invert(&det).map_err(|_| Error::SingularPhm {
            det: det.to_string(),
        })?;
        let n = self.rows;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                // adj(A)[r][c] = (-1)^{r+c} det(minor(c, r))
                let cof = self.minor(c, r).det_inner();
                let entry = cof.product(&det_inv).expect("same algebra");
                if (r + c) % 2 == 0 {
                    data.push(entry);
                } else {
                    data.push(entry.neg());
                }
            }
        }
        Ok(PHMatrix { algebra: self.algebra.clone(), rows: n, cols: n, data })
    }

    /// Replaces every entry by its left-multiplication matrix, giving a
    /// real (k·rows) x (k·cols) matrix. This is a ring homomorphism:
    /// embeddings of sums and products are sums and products of
    /// embeddings.
    pub fn real_embedding(&self) -> Matrix {
        let k = self.algebra.dim();
        let mut out = Matrix::zeros(self.rows * k, self.cols * k);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let block = self.at(r, c).left_multiplication();
                for i in 0..k {
                    for j in 0..k {
                        out.set(r * k + i, c * k + j, block.at(i, j).clone());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PHMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
