use crate::algebra::{Algebra, HyperNumber};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::poly::{det_poly_matrix, MultiPoly};
use crate::scalar::{int, random_rational, sqrt_exact, Scalar};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The characteristic function of an algebra: the determinant of the
/// symbolic left-multiplication matrix sum_j x_j M_j, a homogeneous
/// polynomial of degree k whose zero set is exactly the set of
/// non-invertible elements.
pub fn characteristic_function(a: &Algebra) -> MultiPoly {
    let k = a.dim();
    let mut rows = vec![vec![MultiPoly::zero(k); k]; k];
    for j in 0..k {
        let xj = MultiPoly::variable(k, j);
        for (r, row) in rows.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let coef = a.product_matrix().at(r, j * k + c);
                if !coef.is_zero() {
                    *cell = cell.add(&xj.mul_scalar(coef));
                }
            }
        }
    }
    det_poly_matrix(&rows)
}

/// Zero-set membership: det of the left-multiplication matrix vanishes.
/// Numeric route; equals evaluating the characteristic function.
pub fn zero_test(x: &HyperNumber) -> bool {
    x.left_multiplication().det().is_zero()
}

/// Multiplicative inverse: the solution of (P ⋉ x) y = e_0. Fails
/// exactly on the zero set.
pub fn invert(x: &HyperNumber) -> Result<HyperNumber, Error> {
    let k = x.algebra().dim();
    let rep = x.left_multiplication();
    match rep.solve(&Matrix::unit_column(k, 0)) {
        Some(y) => HyperNumber::new(x.algebra().clone(), y.as_slice().to_vec()),
        None => Err(Error::NotInvertible { point: x.to_string() }),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NonsingularityStatus {
    ProvedNonsingular,
    Falsified,
    Inconclusive,
}

/// Result of probing whether the characteristic function vanishes
/// anywhere off the origin (over the reals). `counterexample`, when
/// present, is a nonzero rational point with ξ = 0; a k=2 falsification
/// can also arise from an irrational root line, in which case no
/// rational counterexample exists and the field stays empty.
#[derive(Clone, Debug)]
pub struct NonsingularityVerdict {
    pub status: NonsingularityStatus,
    pub counterexample: Option<Vec<Scalar>>,
}

impl NonsingularityVerdict {
    fn proved() -> Self {
        NonsingularityVerdict {
            status: NonsingularityStatus::ProvedNonsingular,
            counterexample: None,
        }
    }

    fn falsified(point: Option<Vec<Scalar>>) -> Self {
        NonsingularityVerdict { status: NonsingularityStatus::Falsified, counterexample: point }
    }

    fn inconclusive() -> Self {
        NonsingularityVerdict { status: NonsingularityStatus::Inconclusive, counterexample: None }
    }
}

/// Decides (k ≤ 2) or probes (k ≥ 3) joint nonsingularity. Dimensions
/// one and two admit an exact sign analysis of the (binary) form. For
/// higher dimensions no decision procedure is attempted: the probe
/// evaluates ξ on every point of {-1,0,1}^k (smallest supports first)
/// and then on seeded random rational points, so it either falsifies or
/// honestly reports inconclusive.
pub fn joint_nonsingularity_probe(
    a: &Algebra,
    sample_count: usize,
    seed: u64,
) -> NonsingularityVerdict {
    let xi = characteristic_function(a);
    let k = a.dim();
    match k {
        1 => {
            if xi.coeff(&[1]).is_zero() {
                NonsingularityVerdict::falsified(Some(vec![int(1)]))
            } else {
                NonsingularityVerdict::proved()
            }
        }
        2 => probe_binary_form(&xi),
        _ => probe_by_sampling(&xi, k, sample_count, seed),
    }
}

fn probe_binary_form(xi: &MultiPoly) -> NonsingularityVerdict {
    let alpha = xi.coeff(&[2, 0]);
    let beta = xi.coeff(&[1, 1]);
    let gamma = xi.coeff(&[0, 2]);
    if alpha.is_zero() {
        // ξ(1, 0) = 0 (covers the identically-zero form too).
        return NonsingularityVerdict::falsified(Some(vec![int(1), int(0)]));
    }
    let disc = &beta * &beta - int(4) * &alpha * &gamma;
    if disc < Scalar::zero() {
        return NonsingularityVerdict::proved();
    }
    match sqrt_exact(&disc) {
        Some(s) => {
            let root = (s - &beta) / (int(2) * &alpha);
            debug_assert!(xi.evaluate(&[root.clone(), int(1)]).is_zero());
            NonsingularityVerdict::falsified(Some(vec![root, int(1)]))
        }
        // Indefinite with irrational root lines: real zeros exist but
        // no rational witness does.
        None => NonsingularityVerdict::falsified(None),
    }
}

fn probe_by_sampling(
    xi: &MultiPoly,
    k: usize,
    sample_count: usize,
    seed: u64,
) -> NonsingularityVerdict {
    if k <= 10 {
        for point in support_ordered_grid(k) {
            if xi.evaluate(&point).is_zero() {
                return NonsingularityVerdict::falsified(Some(point));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_count {
        let point: Vec<Scalar> = (0..k).map(|_| random_rational(&mut rng, 100)).collect();
        if point.iter().all(|c| c.is_zero()) {
            continue;
        }
        if xi.evaluate(&point).is_zero() {
            return NonsingularityVerdict::falsified(Some(point));
        }
    }
    NonsingularityVerdict::inconclusive()
}

/// All nonzero points of {-1,0,1}^k, ordered by support size, then by
/// support position, with +1 tried before -1 in each slot. The order is
/// part of the probe's deterministic-output contract.
fn support_ordered_grid(k: usize) -> Vec<Vec<Scalar>> {
    let mut subsets: Vec<Vec<usize>> = (1u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    for support in subsets {
        let m = support.len();
        for bits in 0u32..1 << m {
            let mut p = vec![Scalar::zero(); k];
            for (pos, &idx) in support.iter().enumerate() {
                let negative = bits >> (m - 1 - pos) & 1 == 1;
                p[idx] = if negative { int(-1) } else { int(1) };
            }
            out.push(p);
        }
    }
    out
}
