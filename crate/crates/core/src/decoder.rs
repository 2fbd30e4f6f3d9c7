//! Syndrome decoding of phased burst errors in a quasi-cyclic code, driven by
//! a spectral bound certificate.
//!
//! An error hits a set `E` of positions `i ∈ [m)`; at each such position the
//! whole column `(e_{0,i}, ..., e_{ℓ-1,i})` may be wrong.

use crate::error::{Error, Result};
use crate::galois::{extension_for, Elem, Extension};
use crate::linalg::{self, Solution};
use crate::oracle::OracleBudget;
use crate::polyring::{Poly, PolyRing};
use crate::qcc::QuasiCyclicCode;
use crate::spectral::{self, BoundCertificate, ColumnCode, Distance};

/// Precomputed decoding data. Immutable once built.
#[derive(Clone, Debug)]
pub struct DecoderSetup {
    code: QuasiCyclicCode,
    column: ColumnCode,
    certificate: BoundCertificate,
    ext: Extension,
    alpha: Elem,
    vector: Vec<Elem>,
    /// `α^{f_1 + i z_1}` for `i < δ - 1`.
    points: Vec<Elem>,
    /// `b(β^{f_2 + i z_2})` for `i < δ - 1`.
    column_values: Vec<Elem>,
    /// `γ_i = β^{-j z_2} α^{-i z_1}` with `j` the smallest index in the support of `b`.
    locators: Vec<Elem>,
    radius: usize,
}

/// Result of one decoding attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Corrected,
    Failure(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub outcome: Outcome,
    pub positions: Vec<usize>,
    /// One column of `ℓ` error values per entry of `positions`.
    pub error_columns: Vec<Vec<Elem>>,
    pub corrected: Option<Vec<Poly>>,
    pub locator: Poly,
    pub evaluator: Poly,
}

impl DecodeResult {
    fn failure(reason: impl Into<String>, locator: Poly, evaluator: Poly) -> DecodeResult {
        DecodeResult {
            outcome: Outcome::Failure(reason.into()),
            positions: Vec::new(),
            error_columns: Vec::new(),
            corrected: None,
            locator,
            evaluator,
        }
    }

    pub fn is_corrected(&self) -> bool {
        self.outcome == Outcome::Corrected
    }
}

fn independent_vector(ext: &Extension, basis: &[Vec<Elem>], ell: usize) -> Result<Option<Vec<Elem>>> {
    let good = |v: &Vec<Elem>| -> Result<bool> {
        Ok(spectral::eigencode(ext, std::slice::from_ref(v), ell)?.distance == Distance::Infinite)
    };
    for v in basis {
        if good(v)? {
            return Ok(Some(v.clone()));
        }
    }
    // small combinations with coefficients drawn from the big field's powers of ξ
    let big = ext.field();
    let xi = big.primitive();
    let k = basis.len();
    if k < 2 {
        return Ok(None);
    }
    for e in 1..(big.order() - 1).min(256) {
        let mut v = basis[0].clone();
        for (t, b) in basis.iter().enumerate().skip(1) {
            let c = big.pow(xi, (e * t as u64) as i64)?;
            for (x, &y) in v.iter_mut().zip(b) {
                *x = big.add(*x, big.mul(c, y));
            }
        }
        if good(&v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

impl DecoderSetup {
    pub fn new(
        ext: &Extension,
        code: QuasiCyclicCode,
        column: ColumnCode,
        certificate: BoundCertificate,
        alpha: Elem,
    ) -> Result<DecoderSetup> {
        let big = ext.field();
        let (m_a, m_b, ell) = (code.m(), column.m(), code.ell());
        if code.field() != ext.base() || column.code.field() != ext.base() {
            return Err(Error::InvalidSetup("codes are not over the extension's base field".into()));
        }
        if big.element_order(alpha)? != m_a as u64 {
            return Err(Error::InvalidSetup(format!("row root of unity does not have order {m_a}")));
        }
        if certificate.column_distance != column.min_distance {
            return Err(Error::InvalidSetup("certificate was issued for another column code".into()));
        }
        if certificate.delta < 2 {
            return Err(Error::InvalidSetup("certificate has delta below 2".into()));
        }
        let b = &column.min_word;
        if b.weight() != column.min_distance || !column.code.is_member(std::slice::from_ref(b)) {
            return Err(Error::InvalidSetup("stored column word is not a minimum-weight codeword".into()));
        }
        let vector = independent_vector(ext, &certificate.eigenspace, ell)?
            .ok_or_else(|| Error::InvalidSetup("no eigenvector with linearly independent entries".into()))?;
        for &j in &certificate.exponents {
            let x = big.pow(alpha, j as i64)?;
            for row in code.rgb().rows() {
                let dot =
                    row.iter().zip(&vector).fold(Elem::ZERO, |acc, (p, &vj)| big.add(acc, big.mul(ext.eval(p, x), vj)));
                if !dot.is_zero() {
                    return Err(Error::InvalidSetup(format!("vector is not in the eigenspace at exponent {j}")));
                }
            }
        }
        let (f1, z1, f2, z2, delta) =
            (certificate.f1, certificate.z1, certificate.f2, certificate.z2, certificate.delta);
        let beta = column.beta;
        let points =
            (0..delta - 1).map(|i| big.pow(alpha, ((f1 + i * z1) % m_a) as i64)).collect::<Result<Vec<_>>>()?;
        let column_values = (0..delta - 1)
            .map(|i| Ok(ext.eval(b, big.pow(beta, ((f2 + i * z2) % m_b) as i64)?)))
            .collect::<Result<Vec<_>>>()?;
        let w0 = b.support()[0];
        let bj = big.pow(beta, -((w0 * z2) as i64))?;
        let locators =
            (0..m_a).map(|i| Ok(big.mul(bj, big.pow(alpha, -((i * z1) as i64))?))).collect::<Result<Vec<_>>>()?;
        let radius = certificate.bound.saturating_sub(1) / 2;
        Ok(DecoderSetup {
            code,
            column,
            certificate,
            ext: ext.clone(),
            alpha,
            vector,
            points,
            column_values,
            locators,
            radius,
        })
    }

    /// Builds roots of unity, analyzes the row code, searches for the best
    /// certificate and assembles the setup.
    pub fn from_codes(
        row: QuasiCyclicCode,
        col: QuasiCyclicCode,
        budget: &OracleBudget,
        delta_max: usize,
    ) -> Result<DecoderSetup> {
        let (m_a, m_b) = (row.m(), col.m());
        let ext = extension_for(row.field(), (m_a * m_b) as u64)?;
        let alpha = ext.root_of_unity(m_a as u64)?;
        let beta = ext.root_of_unity(m_b as u64)?;
        let report = spectral::analyze(&ext, row.rgb(), alpha, m_a)?;
        let column = ColumnCode::new(&ext, col, beta, budget)?;
        let cert = spectral::search_bound_params(&report, &column, delta_max)
            .ok_or_else(|| Error::NoCertificate("no admissible parameters".into()))?;
        DecoderSetup::new(&ext, row, column, cert, alpha)
    }

    pub fn code(&self) -> &QuasiCyclicCode {
        &self.code
    }

    pub fn column(&self) -> &ColumnCode {
        &self.column
    }

    pub fn certificate(&self) -> &BoundCertificate {
        &self.certificate
    }

    pub fn extension(&self) -> &Extension {
        &self.ext
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// The eigenvector used in the syndrome.
    pub fn vector(&self) -> &[Elem] {
        &self.vector
    }

    pub fn locators(&self) -> &[Elem] {
        &self.locators
    }

    /// Number of burst positions guaranteed to be corrected.
    pub fn radius(&self) -> usize {
        self.radius
    }

    fn check_word(&self, r: &[Poly]) -> Result<()> {
        if r.len() != self.code.ell() {
            return Err(Error::Shape(format!("{} components, expected {}", r.len(), self.code.ell())));
        }
        for p in r {
            if p.degree().is_some_and(|d| d >= self.code.m()) {
                return Err(Error::Shape(format!("component degree must be below {}", self.code.m())));
            }
            if p.coeffs().iter().any(|&c| !self.code.field().contains(c)) {
                return Err(Error::ElementOutOfRange(p.lead().0));
            }
        }
        Ok(())
    }

    /// `S_i = b(β^{f_2 + i z_2}) Σ_j r_j(α^{f_1 + i z_1}) v_j`, `i < δ - 1`.
    pub fn syndrome(&self, r: &[Poly]) -> Result<Poly> {
        self.check_word(r)?;
        let big = self.ext.field();
        let coeffs = self
            .points
            .iter()
            .zip(&self.column_values)
            .map(|(&x, &bv)| {
                if bv.is_zero() {
                    return Elem::ZERO;
                }
                let s = r
                    .iter()
                    .zip(&self.vector)
                    .fold(Elem::ZERO, |acc, (rj, &vj)| big.add(acc, big.mul(self.ext.eval(rj, x), vj)));
                big.mul(s, bv)
            })
            .collect();
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Solves `Λ S ≡ Ω mod X^{δ-1}` by the Euclidean algorithm on
    /// `(X^{δ-1}, S)`, stopping at the first remainder of degree below `(δ-1)/2`.
    /// Returns `None` if `Λ(0) = 0`.
    pub fn solve_key_equation(&self, s: &Poly) -> Option<(Poly, Poly)> {
        key_equation(self.ext.field(), s, self.certificate.delta - 1)
    }

    /// Positions `i` with `Λ(γ_i) = 0`.
    pub fn find_positions(&self, locator: &Poly) -> Vec<usize> {
        let ring = PolyRing::new(self.ext.field().clone());
        (0..self.code.m()).filter(|&i| ring.eval(locator, self.locators[i]).is_zero()).collect()
    }

    /// Error columns at `positions`, as the unique solution of the syndrome
    /// equations expanded over the base field.
    pub fn evaluate_errors(&self, s: &Poly, positions: &[usize]) -> Option<Vec<Vec<Elem>>> {
        let ell = self.code.ell();
        let big = self.ext.field();
        let nvars = positions.len() * ell;
        if nvars == 0 {
            return if s.is_zero() { Some(Vec::new()) } else { None };
        }
        let sdim = self.ext.s() as usize;
        let mut a = Vec::with_capacity(self.points.len() * sdim);
        let mut rhs = Vec::with_capacity(self.points.len() * sdim);
        for (i, (&x, &bv)) in self.points.iter().zip(&self.column_values).enumerate() {
            let coeffs: Vec<Vec<Elem>> = positions
                .iter()
                .flat_map(|&p| {
                    let xp = big.mul(big.pow(x, p as i64).unwrap(), bv);
                    self.vector.iter().map(move |&vj| self.ext.coordinates(big.mul(xp, vj)))
                })
                .collect();
            let target = self.ext.coordinates(s.coeff(i));
            for t in 0..sdim {
                a.push(coeffs.iter().map(|c| c[t]).collect::<Vec<_>>());
                rhs.push(target[t]);
            }
        }
        match linalg::solve(self.ext.base(), &a, &rhs) {
            Solution::Unique(x) => Some(x.chunks(ell).map(<[Elem]>::to_vec).collect()),
            _ => None,
        }
    }

    pub fn decode(&self, r: &[Poly]) -> DecodeResult {
        let zero = Poly::zero();
        if let Err(e) = self.check_word(r) {
            return DecodeResult::failure(e.to_string(), zero.clone(), zero);
        }
        let s = self.syndrome(r).expect("word was checked");
        let Some((locator, evaluator)) = self.solve_key_equation(&s) else {
            return DecodeResult::failure("locator has no constant term", zero.clone(), zero);
        };
        let positions = self.find_positions(&locator);
        let deg = locator.degree().unwrap_or(0);
        if positions.len() * self.column.min_distance != deg {
            return DecodeResult::failure(
                format!("found {} positions for a locator of degree {deg}", positions.len()),
                locator,
                evaluator,
            );
        }
        if positions.len() > self.radius {
            return DecodeResult::failure(
                format!("{} positions exceed the radius {}", positions.len(), self.radius),
                locator,
                evaluator,
            );
        }
        let Some(columns) = self.evaluate_errors(&s, &positions) else {
            return DecodeResult::failure("error values are not uniquely determined", locator, evaluator);
        };
        if columns.iter().any(|c| c.iter().all(|e| e.is_zero())) {
            return DecodeResult::failure("zero error column at a located position", locator, evaluator);
        }
        let ring = self.code.ring();
        let corrected: Vec<Poly> = (0..self.code.ell())
            .map(|j| {
                let mut e = vec![Elem::ZERO; self.code.m()];
                for (&p, col) in positions.iter().zip(&columns) {
                    e[p] = col[j];
                }
                ring.sub(&r[j], &Poly::from_coeffs(e))
            })
            .collect();
        if !self.code.is_member(&corrected) {
            return DecodeResult::failure("corrected word is not a codeword", locator, evaluator);
        }
        DecodeResult {
            outcome: Outcome::Corrected,
            positions,
            error_columns: columns,
            corrected: Some(corrected),
            locator,
            evaluator,
        }
    }
}

/// Euclidean solver for `Λ S ≡ Ω mod X^len` with `Λ(0) = 1`.
pub fn key_equation(f: &crate::galois::Field, s: &Poly, len: usize) -> Option<(Poly, Poly)> {
    let ring = PolyRing::new(f.clone());
    if s.is_zero() {
        return Some((ring.one(), Poly::zero()));
    }
    let mut r_prev = Poly::x_pow(len);
    let mut r_cur = ring.rem(s, &r_prev).ok()?;
    let mut t_prev = Poly::zero();
    let mut t_cur = ring.one();
    while !r_cur.is_zero() && 2 * r_cur.degree().unwrap() >= len {
        let (q, r) = ring.divmod(&r_prev, &r_cur).ok()?;
        let t = ring.sub(&t_prev, &ring.mul(&q, &t_cur));
        r_prev = std::mem::replace(&mut r_cur, r);
        t_prev = std::mem::replace(&mut t_cur, t);
    }
    let c = t_cur.coeff(0);
    if c.is_zero() {
        return None;
    }
    let inv = f.inv(c).ok()?;
    Some((ring.scale(inv, &t_cur), ring.scale(inv, &r_cur)))
}
