//! Dense univariate polynomials over a [`Field`] and matrices over `F[X]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

/// A polynomial with ascending coefficients and no trailing zeros.
///
/// Coefficients are packed elements of whatever field the caller works in;
/// arithmetic goes through a [`PolyRing`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Elem, degree: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Elem::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// `X^degree`.
    pub fn x_pow(degree: usize) -> Poly {
        Poly::monomial(Elem::ONE, degree)
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficient one at each listed exponent.
    pub fn from_exponents(exps: &[usize]) -> Poly {
        let Some(&top) = exps.iter().max() else {
            return Poly::zero();
        };
        let mut coeffs = vec![Elem::ZERO; top + 1];
        for &e in exps {
            coeffs[e] = Elem::ONE;
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Exponents with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.0 == 1 && i > 0 { String::new() } else { c.0.to_string() };
            match i {
                0 => write!(f, "{}", c.0)?,
                1 => write!(f, "{coef}X")?,
                _ => write!(f, "{coef}X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial arithmetic over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Field,
}

impl PolyRing {
    pub fn new(field: Field) -> PolyRing {
        PolyRing { field }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn one(&self) -> Poly {
        Poly::constant(Elem::ONE)
    }

    pub fn x(&self) -> Poly {
        Poly::x_pow(1)
    }

    /// `X^m - 1`.
    pub fn x_pow_minus_one(&self, m: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; m + 1];
        coeffs[m] = Elem::ONE;
        coeffs[0] = self.field.add(coeffs[0], self.field.neg(Elem::ONE));
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from integer coefficients mapped into the prime subfield.
    pub fn from_ints(&self, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| self.field.from_int(c)).collect())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.field.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.field.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, a: &Poly) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = f.add(out[i + j], f.mul(x, y));
                }
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, a: &Poly, k: usize) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Elem::ZERO; k];
        coeffs.extend_from_slice(&a.coeffs);
        Poly { coeffs }
    }

    /// `(quotient, remainder)` with `deg r < deg b`.
    pub fn divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let Some(db) = b.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let lead_inv = f.inv(b.lead())?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut q = vec![Elem::ZERO; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = r[i];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            q[i - db] = t;
            for (k, &bc) in b.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    let idx = i - db + k;
                    r[idx] = f.sub(r[idx], f.mul(t, bc));
                }
            }
        }
        r.truncate(db);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Exact quotient `a / b`; errors if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(a, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidArgument(format!("{b} does not divide {a}")))
        }
    }

    pub fn divides(&self, b: &Poly, a: &Poly) -> bool {
        if b.is_zero() {
            return a.is_zero();
        }
        self.rem(a, b).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let inv = self.field.inv(a.lead()).expect("leading coefficient is nonzero");
        self.scale(inv, a)
    }

    /// Extended gcd: `(d, u, v)` with `u·a + v·b = d`, `d` monic.
    ///
    /// The cofactors are the ones produced by the Euclidean remainder
    /// sequence, so `deg u < deg b - deg d` and `deg v < deg a - deg d`
    /// whenever both inputs are nonconstant.
    pub fn xgcd(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (self.one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1)?;
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            let v2 = self.sub(&v0, &self.mul(&q, &v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        let inv = self.field.inv(r0.lead())?;
        Ok((self.scale(inv, &r0), self.scale(inv, &u0), self.scale(inv, &v0)))
    }

    pub fn gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.xgcd(a, b)?.0)
    }

    /// Reduction modulo `X^m - 1` by folding exponents.
    pub fn reduce_xm1(&self, a: &Poly, m: usize) -> Poly {
        assert!(m >= 1, "co-index must be positive");
        if a.coeffs.len() <= m {
            return a.clone();
        }
        let mut out = vec![Elem::ZERO; m];
        for (i, &c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i % m] = self.field.add(out[i % m], c);
            }
        }
        Poly::from_coeffs(out)
    }

    /// `a·b mod (X^m - 1)` as a cyclic convolution.
    pub fn mulmod_xm1(&self, a: &Poly, b: &Poly, m: usize) -> Poly {
        let a = self.reduce_xm1(a, m);
        let b = self.reduce_xm1(b, m);
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; m];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    let k = (i + j) % m;
                    out[k] = f.add(out[k], f.mul(x, y));
                }
            }
        }
        Poly::from_coeffs(out)
    }

    /// `a·X^e mod (X^m - 1)`; `e` may be negative.
    pub fn shift_xm1(&self, a: &Poly, e: i64, m: usize) -> Poly {
        let a = self.reduce_xm1(a, m);
        if a.is_zero() {
            return a;
        }
        let e = e.rem_euclid(m as i64) as usize;
        let mut out = vec![Elem::ZERO; m];
        for (i, &c) in a.coeffs.iter().enumerate() {
            out[(i + e) % m] = c;
        }
        Poly::from_coeffs(out)
    }

    /// `a(X^e) mod (X^m - 1)`: each term `c·X^u` goes to `c·X^{u·e mod m}`.
    pub fn substitute_power(&self, a: &Poly, e: i64, m: usize) -> Poly {
        assert!(m >= 1, "co-index must be positive");
        let e = e.rem_euclid(m as i64) as u128;
        let mut out = vec![Elem::ZERO; m];
        for (u, &c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let k = ((u as u128 * e) % m as u128) as usize;
                out[k] = self.field.add(out[k], c);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, a: &Poly, x: Elem) -> Elem {
        let f = &self.field;
        a.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(
            a.coeffs.iter().enumerate().skip(1).map(|(i, &c)| self.field.scale_int(i as u64, c)).collect(),
        )
    }
}

/// Elementary row operations on a [`PolyMatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    /// Multiply a row by a nonzero constant.
    Scale(usize, Elem),
    /// `row[target] += factor · row[source]`.
    AddMultiple {
        target: usize,
        source: usize,
        factor: Poly,
    },
    /// `(row[i], row[j]) ← (a·row[i] + b·row[j], c·row[i] + d·row[j])` for
    /// `[a, b, c, d]` with `ad - bc` a nonzero constant.
    Combine {
        i: usize,
        j: usize,
        coeffs: [Poly; 4],
    },
    /// Remove a row. The caller asserts that it lies in the module spanned by
    /// the remaining rows.
    Delete(usize),
}

/// A matrix over `F[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
    cols: usize,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows: vec![vec![Poly::zero(); cols]; rows], cols }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Poly::constant(Elem::ONE);
        }
        m
    }

    /// `c·I_n`.
    pub fn scalar(n: usize, c: &Poly) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>, cols: usize) -> Result<PolyMatrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!("row of width {} in a matrix of width {}", r.len(), cols)));
        }
        Ok(PolyMatrix { rows, cols })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.rows[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Poly>> {
        self.rows
    }

    pub fn push_row(&mut self, row: Vec<Poly>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Shape(format!("row of width {} in a matrix of width {}", row.len(), self.cols)));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.cols {
            return Err(Error::Shape("stacked matrices differ in width".into()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(PolyMatrix { rows, cols: self.cols })
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && self.rows.iter().enumerate().all(|(i, r)| r[..i].iter().all(Poly::is_zero))
    }

    pub fn diagonal(&self) -> Vec<Poly> {
        (0..self.rows.len().min(self.cols)).map(|i| self.rows[i][i].clone()).collect()
    }

    pub fn apply(&mut self, ring: &PolyRing, op: RowOp) -> Result<()> {
        let n = self.rows.len();
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::Shape(format!("row {i} out of range for {n} rows")))
            }
        };
        match op {
            RowOp::Swap(i, j) => {
                check(i)?;
                check(j)?;
                self.rows.swap(i, j);
            }
            RowOp::Scale(i, c) => {
                check(i)?;
                if c.is_zero() {
                    return Err(Error::NotUnit("0".into()));
                }
                self.rows[i] = self.rows[i].iter().map(|p| ring.scale(c, p)).collect();
            }
            RowOp::AddMultiple { target, source, factor } => {
                check(target)?;
                check(source)?;
                if target == source {
                    return Err(Error::InvalidArgument("row added to itself".into()));
                }
                let src = self.rows[source].clone();
                for (t, s) in self.rows[target].iter_mut().zip(&src) {
                    *t = ring.add(t, &ring.mul(&factor, s));
                }
            }
            RowOp::Combine { i, j, coeffs } => {
                check(i)?;
                check(j)?;
                if i == j {
                    return Err(Error::InvalidArgument("combine needs two distinct rows".into()));
                }
                let [a, b, c, d] = &coeffs;
                let det = ring.sub(&ring.mul(a, d), &ring.mul(b, c));
                if det.degree() != Some(0) {
                    return Err(Error::NotUnit(det.to_string()));
                }
                let (ri, rj) = (self.rows[i].clone(), self.rows[j].clone());
                let comb = |x: &Poly, y: &Poly| -> Vec<Poly> {
                    ri.iter().zip(&rj).map(|(p, q)| ring.add(&ring.mul(x, p), &ring.mul(y, q))).collect()
                };
                self.rows[i] = comb(a, b);
                self.rows[j] = comb(c, d);
            }
            RowOp::Delete(i) => {
                check(i)?;
                self.rows.remove(i);
            }
        }
        Ok(())
    }

    /// Determinant of a square upper-triangular matrix.
    pub fn upper_det(&self, ring: &PolyRing) -> Result<Poly> {
        if !self.is_upper_triangular() {
            return Err(Error::NotTriangular);
        }
        Ok(self.diagonal().iter().fold(ring.one(), |acc, d| ring.mul(&acc, d)))
    }

    /// Every entry reduced modulo `X^m - 1`.
    pub fn reduce_xm1(&self, ring: &PolyRing, m: usize) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|p| ring.reduce_xm1(p, m)).collect()).collect(),
            cols: self.cols,
        }
    }

    /// Right-multiplies by `diag(X^{shifts[0]}, X^{shifts[1]}, ...)` modulo `X^m - 1`.
    pub fn shift_columns(&self, ring: &PolyRing, shifts: &[i64], m: usize) -> PolyMatrix {
        PolyMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().zip(shifts).map(|(p, &e)| ring.shift_xm1(p, e, m)).collect())
                .collect(),
            cols: self.cols,
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
