use crate::algebra::Algebra;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{int, Scalar};
use num_traits::One;

/// Canonical names of the built-in algebra catalog.
pub const CATALOG: [&str; 13] = [
    "complex",
    "dual",
    "hyperbolic",
    "triternion_ex",
    "dim5_ex",
    "A1",
    "A2",
    "A3",
    "A4",
    "A5",
    "A6",
    "A7",
    "A8",
];

/// Looks up a catalog algebra by name (case-insensitive). Every entry
/// is a fixed transcription and passes `is_pha`.
pub fn builtin(name: &str) -> Result<Algebra, Error> {
    let canon = CATALOG
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| {
            Error::parse(format!(
                "unknown algebra `{name}`; valid names: {}",
                CATALOG.join(", ")
            ))
        })?;
    let matrix = match *canon {
        "complex" => Matrix::from_i64(&[&[1, 0, 0, -1], &[0, 1, 1, 0]]),
        "dual" => Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]),
        "hyperbolic" => Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]),
        "triternion_ex" => Matrix::from_i64(&[
            &[1, 0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 1, 0, 1, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0, 1, 0, 0],
        ]),
        // Five-dimensional example: the only nonzero product of
        // hyperimaginary units is i1*i3 = i3*i1 = i2. Encoded below as
        // basis-column indices (1-based, 0 = zero column).
        "dim5_ex" => delta_columns(
            5,
            &[
                1, 2, 3, 4, 5, //
                2, 0, 0, 3, 0, //
                3, 0, 0, 0, 0, //
                4, 3, 0, 0, 0, //
                5, 0, 0, 0, 0,
            ],
        ),
        "A1" => four_dim(&[
            &[0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        ]),
        "A2" => four_dim(&[
            &[0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
            &[0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        ]),
        "A3" => four_dim(&[
            &[0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        ]),
        "A4" => four_dim(&[
            &[0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
            &[0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        ]),
        "A5" => four_dim(&[
            &[0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
            &[0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        ]),
        "A6" => four_dim(&[
            &[0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        ]),
        "A7" => four_dim(&[
            &[0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
            &[0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        ]),
        "A8" => four_dim(&[
            &[0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        ]),
        _ => unreachable!(),
    };
    let a = Algebra::from_product_matrix(matrix, Some((*canon).to_string()))?;
    assert!(a.is_pha(), "catalog entry `{canon}` must be a PHA");
    Ok(a)
}

/// Builds a matrix out of standard basis columns. `indices` are 1-based
/// column selectors; 0 stands for the zero column.
fn delta_columns(k: usize, indices: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(k, indices.len());
    for (c, &i) in indices.iter().enumerate() {
        assert!(i <= k, "basis index out of range");
        if i > 0 {
            m.set(i - 1, c, Scalar::one());
        }
    }
    m
}

/// [I_4 | Q] for a 4 x 12 hyperimaginary block.
fn four_dim(q: &[&[i64]]) -> Matrix {
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(4);
    for (r, qrow) in q.iter().enumerate() {
        assert_eq!(qrow.len(), 12);
        let mut row = vec![int(0); 4];
        row[r] = Scalar::one();
        row.extend(qrow.iter().map(|&v| int(v)));
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Trivial algebra of dimension n+1: every product of hyperimaginary
/// units is zero.
pub fn trivial_pha(n: usize) -> Algebra {
    let k = n + 1;
    let mut m = Matrix::zeros(k, k * k);
    for i in 0..k {
        m.set(i, i, Scalar::one());
    }
    for r in 1..k {
        m.set(r, r * k, Scalar::one());
    }
    Algebra::from_product_matrix(m, None).expect("trivial table is well-shaped")
}

/// Parameters of a 3-dimensional commutative algebra in normal form.
/// Six of the nine structure scalars are free; the remaining three are
/// forced by associativity:
///   a = ce + f^2 - bf - cr,  d = cq - ef,  p = e^2 + fq - bq - er.
#[derive(Clone, Debug, PartialEq)]
pub struct TriternionParams {
    pub b: Scalar,
    pub c: Scalar,
    pub e: Scalar,
    pub f: Scalar,
    pub q: Scalar,
    pub r: Scalar,
    pub a: Scalar,
    pub d: Scalar,
    pub p: Scalar,
}

impl TriternionParams {
    pub fn new(b: Scalar, c: Scalar, e: Scalar, f: Scalar, q: Scalar, r: Scalar) -> Self {
        let a = &c * &e + &f * &f - &b * &f - &c * &r;
        let d = &c * &q - &e * &f;
        let p = &e * &e + &f * &q - &b * &q - &e * &r;
        TriternionParams { b, c, e, f, q, r, a, d, p }
    }
}

/// Three-dimensional PHA from six free parameters; the derived scalars
/// make the product associative, so the result always passes is_pha.
pub fn make_triternion(
    b: Scalar,
    c: Scalar,
    e: Scalar,
    f: Scalar,
    q: Scalar,
    r: Scalar,
) -> Algebra {
    let tp = TriternionParams::new(b, c, e, f, q, r);
    triternion_template(&tp)
}

/// Raw triternion-shaped product table. No associativity guarantee:
/// callers may pass arbitrary (a, d, p), e.g. to build near-miss
/// algebras for negative tests.
pub fn triternion_template(tp: &TriternionParams) -> Algebra {
    let z = int(0);
    let o = Scalar::one();
    let TriternionParams { b, c, e, f, q, r, a, d, p } = tp.clone();
    // P = [I_3 | M_1 | M_2] with
    //   M_1 = [[0,a,d],[1,b,e],[0,c,f]]  (products of i1)
    //   M_2 = [[0,d,p],[0,e,q],[1,f,r]]  (products of i2)
    let rows = vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone(), a, d.clone(), z.clone(), d, p],
        vec![z.clone(), o.clone(), z.clone(), o.clone(), b, e.clone(), z.clone(), e, q],
        vec![z.clone(), z.clone(), o.clone(), z.clone(), c, f.clone(), o, f, r],
    ];
    Algebra::from_product_matrix(Matrix::from_rows(rows), None).expect("template is well-shaped")
}
