use crate::scalar::{format_scalar, Scalar};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of fixed length (one slot per variable), ordered by
/// total degree first and lexicographically within a degree, so the
/// maximal key is the graded-lex leading monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Scalar::one())
    }

    /// The variable x_i.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        assert_eq!(exps.len(), self.nvars);
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / div`, or `None` when the division leaves a
    /// remainder. Single-divisor reduction by the graded-lex leading
    /// term; exactness makes the leading-term step always legal when a
    /// quotient exists, so hitting a non-divisible leading term proves
    /// there is none.
    pub fn exact_div(&self, div: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, div.nvars);
        let (dm, dc) = div.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().expect("nonzero poly has a leading term");
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            let mut step = MultiPoly::zero(self.nvars);
            step.add_term(qm, qc);
            rem = rem.sub(&step.mul(div));
            quot = quot.add(&step);
        }
        Some(quot)
    }

    /// Peels off all factors from the trial family of linear forms —
    /// the variables x_i and the binomials x_i - x_j, x_i + x_j (i < j)
    /// — returning (factor, multiplicity) pairs in trial order plus the
    /// remaining cofactor.
    pub fn factor_linear_forms(&self) -> (Vec<(MultiPoly, u32)>, MultiPoly) {
        let k = self.nvars;
        let mut trial = Vec::new();
        for i in 0..k {
            trial.push(MultiPoly::variable(k, i));
        }
        for i in 0..k {
            for j in i + 1..k {
                let xi = MultiPoly::variable(k, i);
                let xj = MultiPoly::variable(k, j);
                trial.push(xi.sub(&xj));
                trial.push(xi.add(&xj));
            }
        }
        let mut rest = self.clone();
        let mut factors = Vec::new();
        for form in trial {
            let mut mult = 0;
            while let Some(q) = rest.exact_div(&form) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((form, mult));
            }
        }
        (factors, rest)
    }
}

/// Renders a factor list as produced by `factor_linear_forms`.
pub fn format_factorization(factors: &[(MultiPoly, u32)], cofactor: &MultiPoly) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (f, mult) in factors {
        let base = if f.terms.len() > 1 {
            format!("({f})")
        } else {
            f.to_string()
        };
        if *mult > 1 {
            parts.push(format!("{base}^{mult}"));
        } else {
            parts.push(base);
        }
    }
    if parts.is_empty() {
        return cofactor.to_string();
    }
    if !cofactor.is_zero() && !is_poly_one(cofactor) {
        parts.push(format!("({cofactor})"));
    }
    parts.join(" * ")
}

fn is_poly_one(p: &MultiPoly) -> bool {
    p.terms.len() == 1
        && p.terms
            .iter()
            .next()
            .map(|(m, c)| m.degree() == 0 && c.is_one())
            .unwrap_or(false)
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in descending graded-lex order, signs
    /// as separators, unit coefficients elided on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mono = monomial_string(m);
            if mono.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_scalar(&mag))?;
            }
        }
        Ok(())
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

/// Determinant of a square matrix of polynomials. Cofactor expansion
/// along the sparsest column for small sizes; fraction-free Bareiss
/// elimination (exact divisions only) above that.
pub fn det_poly_matrix(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let nvars = m[0][0].nvars;
    if n <= 6 {
        det_cofactor(m, nvars)
    } else {
        det_bareiss(m.to_vec(), nvars)
    }
}

fn det_cofactor(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    // Expand along the column with the most zero entries.
    let col = (0..n)
        .max_by_key(|&j| (0..n).filter(|&i| m[i][j].is_zero()).count())
        .unwrap();
    let mut acc = MultiPoly::zero(nvars);
    for i in 0..n {
        if m[i][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let sub = det_cofactor(&minor, nvars);
        let signed = if (i + col) % 2 == 0 {
            m[i][col].mul(&sub)
        } else {
            m[i][col].neg().mul(&sub)
        };
        acc = acc.add(&signed);
    }
    acc
}

fn det_bareiss(mut m: Vec<Vec<MultiPoly>>, nvars: usize) -> MultiPoly {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n - 1 {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return MultiPoly::zero(nvars);
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly over an integral domain");
            }
            m[i][k] = MultiPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}
