//! Quasi-cyclic codes as submodules of `(F_q[X]/(X^m - 1))^ℓ`.
//!
//! A codeword is a vector of `ℓ` polynomials `c_j(X)` of degree `< m`; its
//! serialized form puts coefficient `i` of `c_j` at position `iℓ + j`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::galois::{gcd, Elem, Field};
use crate::polyring::{Poly, PolyMatrix, PolyRing};

/// An `ℓ`-quasi-cyclic code of co-index `m` with its reduced basis cached.
#[derive(Clone, Debug)]
pub struct QuasiCyclicCode {
    ring: PolyRing,
    ell: usize,
    m: usize,
    basis: PolyMatrix,
    rgb: PolyMatrix,
    row_dims: Vec<usize>,
    k: usize,
}

impl QuasiCyclicCode {
    /// Builds the code generated by `rows` together with `(X^m - 1)e_j`.
    pub fn build(field: Field, ell: usize, m: usize, rows: Vec<Vec<Poly>>) -> Result<QuasiCyclicCode> {
        if ell == 0 || m == 0 {
            return Err(Error::InvalidArgument("index and co-index must be positive".into()));
        }
        if gcd(m as u64, field.order()) != 1 {
            return Err(Error::RepeatedRoot { m: m as u64, q: field.order() });
        }
        let ring = PolyRing::new(field);
        for row in &rows {
            for p in row {
                if p.coeffs().iter().any(|&c| !ring.field().contains(c)) {
                    return Err(Error::ElementOutOfRange(p.lead().0));
                }
            }
        }
        let mut basis = PolyMatrix::from_rows(rows, ell)?;
        let xm1 = ring.x_pow_minus_one(m);
        for j in 0..ell {
            let mut r = vec![Poly::zero(); ell];
            r[j] = xm1.clone();
            basis.push_row(r)?;
        }
        let rgb = reduce_rgb_pot(&ring, ell, m, basis.rows())?;
        let row_dims: Vec<usize> = rgb.diagonal().iter().map(|g| m - g.degree().unwrap()).collect();
        let k = row_dims.iter().sum();
        Ok(QuasiCyclicCode { ring, ell, m, basis, rgb, row_dims, k })
    }

    /// Builds from a matrix of generator rows.
    pub fn from_matrix(field: Field, m: usize, g: &PolyMatrix) -> Result<QuasiCyclicCode> {
        QuasiCyclicCode::build(field, g.ncols(), m, g.rows().to_vec())
    }

    /// The cyclic code generated by `g`.
    pub fn cyclic(field: Field, m: usize, g: Poly) -> Result<QuasiCyclicCode> {
        QuasiCyclicCode::build(field, 1, m, vec![vec![g]])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn q(&self) -> u64 {
        self.field().order()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn length(&self) -> usize {
        self.ell * self.m
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// `k_j = m - deg g_{j,j}`.
    pub fn row_dims(&self) -> &[usize] {
        &self.row_dims
    }

    /// User rows followed by the adjoined `(X^m - 1)e_j`.
    pub fn basis(&self) -> &PolyMatrix {
        &self.basis
    }

    /// The reduced Gröbner basis in position-over-term order.
    pub fn rgb(&self) -> &PolyMatrix {
        &self.rgb
    }

    /// Number of diagonal entries up to the last one that is not `X^m - 1`.
    pub fn level(&self) -> usize {
        let xm1 = self.ring.x_pow_minus_one(self.m);
        self.rgb.diagonal().iter().rposition(|g| *g != xm1).map_or(0, |i| i + 1)
    }

    /// `c = i·G mod (X^m - 1)` for a message with `deg i_j < k_j`.
    pub fn encode(&self, message: &[Poly]) -> Result<Vec<Poly>> {
        if message.len() != self.ell {
            return Err(Error::Shape(format!("message has {} rows, expected {}", message.len(), self.ell)));
        }
        for (j, mj) in message.iter().enumerate() {
            if let Some(d) = mj.degree() {
                if d >= self.row_dims[j] {
                    return Err(Error::MessageOverflow { row: j, degree: d, limit: self.row_dims[j] });
                }
            }
        }
        let r = &self.ring;
        Ok((0..self.ell)
            .map(|t| {
                message
                    .iter()
                    .enumerate()
                    .fold(Poly::zero(), |acc, (j, mj)| r.add(&acc, &r.mulmod_xm1(mj, self.rgb.get(j, t), self.m)))
            })
            .collect())
    }

    /// Membership by position-over-term division against the reduced basis.
    pub fn is_member(&self, word: &[Poly]) -> bool {
        if word.len() != self.ell {
            return false;
        }
        let r = &self.ring;
        let mut w: Vec<Poly> = word.iter().map(|p| r.reduce_xm1(p, self.m)).collect();
        for i in 0..self.ell {
            if w[i].is_zero() {
                continue;
            }
            let (q, rem) = r.divmod(&w[i], self.rgb.get(i, i)).expect("diagonal is nonzero");
            if !rem.is_zero() {
                return false;
            }
            for t in i + 1..self.ell {
                let sub = r.mul(&q, self.rgb.get(i, t));
                w[t] = r.reduce_xm1(&r.sub(&w[t], &sub), self.m);
            }
            w[i] = Poly::zero();
        }
        true
    }

    /// Scalar generator matrix (`k × ℓm`) in serialized coordinates.
    pub fn generator_matrix(&self) -> Vec<Vec<Elem>> {
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.k);
        for j in 0..self.ell {
            for t in 0..self.row_dims[j] {
                let row: Vec<Poly> = self.rgb.row(j).iter().map(|p| r.shift_xm1(p, t as i64, self.m)).collect();
                out.push(serialize(&row, self.m));
            }
        }
        out
    }

    pub fn random_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Poly> {
        let q = self.q();
        self.row_dims
            .iter()
            .map(|&kj| Poly::from_coeffs((0..kj).map(|_| Elem(rng.gen_range(0..q))).collect()))
            .collect()
    }

    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Poly> {
        let msg = self.random_message(rng);
        self.encode(&msg).expect("random message respects the degree bounds")
    }

    /// Cyclic shift of the serialized word by `ℓ` positions, i.e. `X·c_j(X)`.
    pub fn shift(&self, word: &[Poly]) -> Vec<Poly> {
        word.iter().map(|p| self.ring.shift_xm1(p, 1, self.m)).collect()
    }
}

/// Serializes a codeword vector: coefficient `i` of `c_j` goes to `iℓ + j`.
pub fn serialize(word: &[Poly], m: usize) -> Vec<Elem> {
    let ell = word.len();
    let mut out = vec![Elem::ZERO; ell * m];
    for (j, p) in word.iter().enumerate() {
        for (i, &c) in p.coeffs().iter().enumerate().take(m) {
            out[i * ell + j] = c;
        }
    }
    out
}

pub fn deserialize(v: &[Elem], ell: usize) -> Vec<Poly> {
    (0..ell).map(|j| Poly::from_coeffs(v.iter().skip(j).step_by(ell).copied().collect())).collect()
}

/// `c(X) = Σ_j c_j(X^ℓ) X^j`.
pub fn vec_to_univariate(word: &[Poly]) -> Poly {
    let ell = word.len();
    let len = word.iter().map(|p| p.coeffs().len()).max().unwrap_or(0) * ell.max(1);
    let mut out = vec![Elem::ZERO; len];
    for (j, p) in word.iter().enumerate() {
        for (i, &c) in p.coeffs().iter().enumerate() {
            out[i * ell + j] = c;
        }
    }
    Poly::from_coeffs(out)
}

/// Inverse of [`vec_to_univariate`].
pub fn univariate_to_vec(c: &Poly, ell: usize, m: usize) -> Result<Vec<Poly>> {
    if let Some(d) = c.degree() {
        if d >= ell * m {
            return Err(Error::InvalidArgument(format!("degree {d} is at least ℓm = {}", ell * m)));
        }
    }
    Ok(deserialize(c.coeffs(), ell))
}

/// Column-by-column Hermite reduction of the module spanned by `rows` and
/// `(X^m - 1)e_j`, yielding the reduced basis in position-over-term order.
pub fn reduce_rgb_pot(ring: &PolyRing, ell: usize, m: usize, rows: &[Vec<Poly>]) -> Result<PolyMatrix> {
    let xm1 = ring.x_pow_minus_one(m);
    let reduce_tail = |row: &mut Vec<Poly>, from: usize| {
        for p in row.iter_mut().skip(from) {
            *p = ring.reduce_xm1(p, m);
        }
    };
    let mut work: Vec<Vec<Poly>> = Vec::new();
    for r in rows {
        if r.len() != ell {
            return Err(Error::Shape(format!("row of width {} for index {}", r.len(), ell)));
        }
        let mut row = r.clone();
        reduce_tail(&mut row, 0);
        if row.iter().any(|p| !p.is_zero()) {
            work.push(row);
        }
    }
    let mut g: Vec<Vec<Poly>> = Vec::with_capacity(ell);
    for j in 0..ell {
        let mut pivot = vec![Poly::zero(); ell];
        pivot[j] = xm1.clone();
        let mut rest = Vec::with_capacity(work.len());
        for row in work.drain(..) {
            if row[j].is_zero() {
                rest.push(row);
                continue;
            }
            let (d, u, v) = ring.xgcd(&pivot[j], &row[j])?;
            let a = ring.div_exact(&pivot[j], &d)?;
            let b = ring.div_exact(&row[j], &d)?;
            let mut next: Vec<Poly> =
                pivot.iter().zip(&row).map(|(p, r)| ring.add(&ring.mul(&u, p), &ring.mul(&v, r))).collect();
            let mut other: Vec<Poly> =
                pivot.iter().zip(&row).map(|(p, r)| ring.sub(&ring.mul(&b, p), &ring.mul(&a, r))).collect();
            reduce_tail(&mut next, j + 1);
            reduce_tail(&mut other, j + 1);
            debug_assert!(other[j].is_zero());
            pivot = next;
            if other.iter().any(|p| !p.is_zero()) {
                rest.push(other);
            }
        }
        let inv = ring.field().inv(pivot[j].lead())?;
        g.push(pivot.iter().map(|p| ring.scale(inv, p)).collect());
        work = rest;
    }
    debug_assert!(work.is_empty());
    for (i, row) in g.iter_mut().enumerate() {
        if row[i] == xm1 {
            for (t, p) in row.iter_mut().enumerate() {
                if t != i {
                    *p = Poly::zero();
                }
            }
        }
    }
    for i in 0..ell {
        let (pivot_row, upper) = {
            let (up, down) = g.split_at_mut(i);
            (down[0].clone(), up)
        };
        for row in upper.iter_mut() {
            let (q, rem) = ring.divmod(&row[i], &pivot_row[i])?;
            if q.is_zero() {
                continue;
            }
            row[i] = rem;
            for t in i + 1..ell {
                row[t] = ring.reduce_xm1(&ring.sub(&row[t], &ring.mul(&q, &pivot_row[t])), m);
            }
        }
    }
    PolyMatrix::from_rows(g, ell)
}

/// Checks conditions C1–C4 of the reduced position-over-term form and
/// reports the first violation.
pub fn check_rgb_pot(ring: &PolyRing, m: usize, g: &PolyMatrix) -> std::result::Result<(), String> {
    if !g.is_upper_triangular() {
        return Err("C1: not square upper triangular".into());
    }
    let xm1 = ring.x_pow_minus_one(m);
    let n = g.nrows();
    for i in 0..n {
        let d = g.get(i, i);
        if d.is_zero() || d.lead() != Elem::ONE || !ring.divides(d, &xm1) {
            return Err(format!("C3: diagonal {i} is not a monic divisor of X^{m} - 1"));
        }
        for j in 0..i {
            if g.get(j, i).degree().is_some_and(|dj| dj >= d.degree().unwrap()) {
                return Err(format!("C2: entry ({j},{i}) not reduced by the diagonal"));
            }
        }
        if *d == xm1 && (i + 1..n).any(|t| !g.get(i, t).is_zero()) {
            return Err(format!("C4: row {i} has diagonal X^{m} - 1 but nonzero tail"));
        }
    }
    Ok(())
}
