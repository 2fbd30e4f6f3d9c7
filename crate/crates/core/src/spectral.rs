//! Eigenvalues and eigenspaces of quasi-cyclic generator matrices,
//! eigencodes, and the spectral minimum-distance bounds.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::{gcd, Elem, Extension};
use crate::linalg;
use crate::oracle::{self, OracleBudget};
use crate::polyring::{Poly, PolyMatrix, PolyRing};
use crate::qcc::QuasiCyclicCode;

/// Spectral data of `G(α^z)` at one exponent `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub exponent: usize,
    /// Number of diagonal entries vanishing at `α^z`.
    pub algebraic: usize,
    /// `ℓ - rank G(α^z)`.
    pub geometric: usize,
    /// Basis of the right kernel of `G(α^z)`.
    pub eigenspace: Vec<Vec<Elem>>,
    /// Row echelon form of `G(α^z)`; its kernel is the eigenspace.
    pub constraints: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub ext: Extension,
    pub alpha: Elem,
    pub m: usize,
    pub ell: usize,
    pub records: Vec<Eigenvalue>,
}

impl SpectralReport {
    pub fn record(&self, z: usize) -> &Eigenvalue {
        &self.records[z % self.m]
    }

    pub fn is_eigenvalue(&self, z: usize) -> bool {
        self.record(z).geometric > 0
    }

    /// Exponents whose multiplicity is exactly `r`.
    pub fn exponents_with_multiplicity(&self, r: usize) -> Vec<usize> {
        self.records.iter().filter(|e| e.algebraic == r).map(|e| e.exponent).collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.records.iter().map(|e| e.algebraic).sum()
    }

    /// Intersection of the eigenspaces at the given exponents.
    pub fn common_eigenspace(&self, exponents: &[usize]) -> Vec<Vec<Elem>> {
        let rows: Vec<Vec<Elem>> = exponents.iter().flat_map(|&z| self.record(z).constraints.iter().cloned()).collect();
        linalg::kernel(self.ext.field(), &rows, self.ell)
    }
}

/// Evaluates an upper-triangular generator at every `α^z`, `z ∈ [m)`.
pub fn analyze(ext: &Extension, g: &PolyMatrix, alpha: Elem, m: usize) -> Result<SpectralReport> {
    if !g.is_square() || !g.is_upper_triangular() {
        return Err(Error::NotTriangular);
    }
    let big = ext.field();
    if big.element_order(alpha)? != m as u64 {
        return Err(Error::InvalidArgument(format!("root of unity does not have order {m}")));
    }
    let ell = g.ncols();
    if g.diagonal().iter().any(Poly::is_zero) {
        return Err(Error::InvalidArgument("zero on the diagonal".into()));
    }
    let ring = PolyRing::new(big.clone());
    let lifted: Vec<Vec<Poly>> = g.rows().iter().map(|r| r.iter().map(|p| ext.lift(p)).collect()).collect();
    let records = (0..m)
        .into_par_iter()
        .map(|z| {
            let x = big.pow(alpha, z as i64).expect("alpha is nonzero");
            // diagonal entries divide X^m - 1 up to units, so each root is simple
            let algebraic = (0..ell).filter(|&i| ring.eval(&lifted[i][i], x).is_zero()).count();
            let mut constraints: Vec<Vec<Elem>> =
                lifted.iter().map(|r| r.iter().map(|p| ring.eval(p, x)).collect()).collect();
            linalg::rref(big, &mut constraints);
            let eigenspace = linalg::kernel(big, &constraints, ell);
            Eigenvalue { exponent: z, algebraic, geometric: eigenspace.len(), eigenspace, constraints }
        })
        .collect();
    Ok(SpectralReport { ext: ext.clone(), alpha, m, ell, records })
}

/// A minimum distance that may be infinite (for the zero code).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn min_with(self, d: usize) -> usize {
        match self {
            Distance::Finite(e) => e.min(d),
            Distance::Infinite => d,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Infinite) => Ordering::Less,
            (Distance::Infinite, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Infinite, Distance::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// `{c ∈ F_q^ℓ : Σ_j v_j c_j = 0 for all v in the eigenspace}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigencode {
    pub length: usize,
    pub basis: Vec<Vec<Elem>>,
    pub distance: Distance,
}

pub fn eigencode(ext: &Extension, vectors: &[Vec<Elem>], ell: usize) -> Result<Eigencode> {
    let s = ext.s() as usize;
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for v in vectors {
        if v.len() != ell {
            return Err(Error::Shape(format!("eigenvector of length {}, expected {ell}", v.len())));
        }
        let coords: Vec<Vec<Elem>> = v.iter().map(|&x| ext.coordinates(x)).collect();
        for t in 0..s {
            rows.push(coords.iter().map(|c| c[t]).collect());
        }
    }
    let basis = linalg::kernel(ext.base(), &rows, ell);
    let distance = if basis.is_empty() {
        Distance::Infinite
    } else {
        Distance::Finite(
            oracle::min_weight_word_of_rows(ext.base(), &basis, ell, &OracleBudget::with_dimension(40))?.weight,
        )
    };
    Ok(Eigencode { length: ell, basis, distance })
}

/// A cyclic column code with its defining set and a minimum-weight word.
#[derive(Clone, Debug)]
pub struct ColumnCode {
    pub code: QuasiCyclicCode,
    pub beta: Elem,
    /// `{i : g(β^i) = 0}`.
    pub defining_set: Vec<usize>,
    pub min_distance: usize,
    pub min_word: Poly,
}

impl ColumnCode {
    pub fn new(ext: &Extension, code: QuasiCyclicCode, beta: Elem, budget: &OracleBudget) -> Result<ColumnCode> {
        if code.ell() != 1 {
            return Err(Error::Shape("column code must be cyclic".into()));
        }
        let m = code.m();
        if ext.field().element_order(beta)? != m as u64 {
            return Err(Error::InvalidArgument(format!("root of unity does not have order {m}")));
        }
        let g = code.rgb().get(0, 0).clone();
        let defining_set: Vec<usize> =
            (0..m).filter(|&i| ext.eval(&g, ext.field().pow(beta, i as i64).unwrap()).is_zero()).collect();
        let w = oracle::min_weight_word(&code, budget)?;
        Ok(ColumnCode { code, beta, defining_set, min_distance: w.weight, min_word: Poly::from_coeffs(w.word) })
    }

    pub fn m(&self) -> usize {
        self.code.m()
    }

    pub fn vanishes_at(&self, z: usize) -> bool {
        self.defining_set.binary_search(&(z % self.m())).is_ok()
    }
}

/// Exponent sets of the product code by multiplicity: entry `r` lists the
/// `z ∈ [m_A m_B)` at which `(αβ)^z` has multiplicity `r`.
pub fn product_eigen_sets(row: &SpectralReport, col_defining_set: &[usize], m_b: usize) -> Result<Vec<Vec<usize>>> {
    let m_a = row.m;
    if gcd(m_a as u64, m_b as u64) != 1 {
        return Err(Error::NotCoprime(m_a as u64, m_b as u64));
    }
    let ell = row.ell;
    let mut sets = vec![Vec::new(); ell + 1];
    for z in 0..m_a * m_b {
        let r = if col_defining_set.contains(&(z % m_b)) { ell } else { row.record(z % m_a).algebraic };
        sets[r].push(z);
    }
    Ok(sets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    St,
    Generalized,
}

/// Everything needed to re-check a distance bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub f1: usize,
    pub z1: usize,
    pub f2: usize,
    pub z2: usize,
    pub delta: usize,
    /// Row-code exponents whose eigenspaces are intersected, sorted.
    pub exponents: Vec<usize>,
    pub eigenspace: Vec<Vec<Elem>>,
    pub eigencode_distance: Distance,
    /// 1 for the plain bound.
    pub column_distance: usize,
    pub bound: usize,
}

fn finish(
    ext: &Extension,
    report: &SpectralReport,
    kind: BoundKind,
    (f1, z1, f2, z2, delta): (usize, usize, usize, usize, usize),
    mut exponents: Vec<usize>,
    column_distance: usize,
) -> Result<BoundCertificate> {
    exponents.sort_unstable();
    exponents.dedup();
    let eigenspace = report.common_eigenspace(&exponents);
    if eigenspace.is_empty() {
        return Err(Error::NoCertificate("eigenspaces have trivial intersection".into()));
    }
    let ec = eigencode(ext, &eigenspace, report.ell)?;
    let bound = ec.distance.min_with(delta).div_ceil(column_distance);
    Ok(BoundCertificate {
        kind,
        f1,
        z1,
        f2,
        z2,
        delta,
        exponents,
        eigenspace,
        eigencode_distance: ec.distance,
        column_distance,
        bound,
    })
}

/// `min(δ, d^ec)` for the exponents `f, f + z, ..., f + (δ - 2)z`.
pub fn st_bound(report: &SpectralReport, f: usize, z: usize, delta: usize) -> Result<BoundCertificate> {
    let m = report.m;
    if gcd(z as u64, m as u64) != 1 {
        return Err(Error::NotCoprime(z as u64, m as u64));
    }
    if delta < 2 {
        return Err(Error::InvalidArgument("delta must be at least 2".into()));
    }
    let mut exps = Vec::with_capacity(delta - 1);
    for i in 0..delta - 1 {
        let j = (f + i * z) % m;
        if !report.is_eigenvalue(j) {
            return Err(Error::NoCertificate(format!("exponent {j} is not an eigenvalue")));
        }
        exps.push(j);
    }
    finish(&report.ext, report, BoundKind::St, (f % m, z % m, 0, 0, delta), exps, 1)
}

/// `⌈min(δ, d^ec)/d_B⌉` for the product of the row code with a cyclic column code.
pub fn generalized_bound(
    report: &SpectralReport,
    col: &ColumnCode,
    (f1, f2, z1, z2): (usize, usize, usize, usize),
    delta: usize,
) -> Result<BoundCertificate> {
    let (m_a, m_b) = (report.m, col.m());
    if gcd(z1 as u64, m_a as u64) != 1 {
        return Err(Error::NotCoprime(z1 as u64, m_a as u64));
    }
    if gcd(z2 as u64, m_b as u64) != 1 {
        return Err(Error::NotCoprime(z2 as u64, m_b as u64));
    }
    if gcd(m_a as u64, m_b as u64) != 1 {
        return Err(Error::NotCoprime(m_a as u64, m_b as u64));
    }
    if delta < 2 {
        return Err(Error::InvalidArgument("delta must be at least 2".into()));
    }
    let mut exps = Vec::new();
    for i in 0..delta - 1 {
        if col.vanishes_at(f2 + i * z2) {
            continue;
        }
        let j = (f1 + i * z1) % m_a;
        if !report.is_eigenvalue(j) {
            return Err(Error::NoCertificate(format!(
                "step {i}: exponent {j} is not an eigenvalue and the column code does not vanish"
            )));
        }
        exps.push(j);
    }
    finish(
        &report.ext,
        report,
        BoundKind::Generalized,
        (f1 % m_a, z1 % m_a, f2 % m_b, z2 % m_b, delta),
        exps,
        col.min_distance,
    )
}

fn units(m: usize) -> Vec<usize> {
    if m == 1 {
        return vec![1];
    }
    (1..m).filter(|&z| gcd(z as u64, m as u64) == 1).collect()
}

fn rank_key(c: &BoundCertificate) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<usize>, usize, usize, usize, usize) {
    use std::cmp::Reverse;
    (Reverse(c.bound), Reverse(c.delta), c.f1, c.f2, c.z1, c.z2)
}

/// Grows `δ` along one parameter tuple and keeps the certificate at the
/// longest admissible run.
fn grow(
    report: &SpectralReport,
    column: Option<&ColumnCode>,
    (f1, f2, z1, z2): (usize, usize, usize, usize),
    delta_max: usize,
) -> Option<BoundCertificate> {
    let m_a = report.m;
    let m_b = column.map_or(1, ColumnCode::m);
    let big = report.ext.field();
    let mut exps: Vec<usize> = Vec::new();
    let mut stack: Vec<Vec<Elem>> = Vec::new();
    let mut delta = 1;
    for i in 0..(m_a * m_b).min(delta_max - 1) {
        if !column.is_some_and(|c| c.vanishes_at(f2 + i * z2)) {
            let j = (f1 + i * z1) % m_a;
            if !report.is_eigenvalue(j) {
                break;
            }
            if !exps.contains(&j) {
                let mut next = stack.clone();
                next.extend(report.record(j).constraints.iter().cloned());
                linalg::rref(big, &mut next);
                if next.len() == report.ell {
                    break;
                }
                exps.push(j);
                stack = next;
            }
        }
        delta = i + 2;
    }
    if delta < 3 {
        return None;
    }
    let (kind, d_b) = match column {
        Some(c) => (BoundKind::Generalized, c.min_distance),
        None => (BoundKind::St, 1),
    };
    finish(&report.ext, report, kind, (f1, z1, f2, z2, delta), exps, d_b).ok()
}

/// Scans all `(f_1, f_2, z_1, z_2)` and returns the best certificate with
/// `3 ≤ δ ≤ δ_max`: largest bound, then largest `δ`, then the smallest tuple.
pub fn search_bound_params(report: &SpectralReport, col: &ColumnCode, delta_max: usize) -> Option<BoundCertificate> {
    let (m_a, m_b) = (report.m, col.m());
    if delta_max < 3 || gcd(m_a as u64, m_b as u64) != 1 {
        return None;
    }
    let tuples: Vec<(usize, usize, usize, usize)> = (0..m_a)
        .flat_map(|f1| (0..m_b).map(move |f2| (f1, f2)))
        .flat_map(|(f1, f2)| units(m_a).into_iter().map(move |z1| (f1, f2, z1)))
        .flat_map(|(f1, f2, z1)| units(m_b).into_iter().map(move |z2| (f1, f2, z1, z2)))
        .collect();
    tuples.par_iter().filter_map(|&t| grow(report, Some(col), t, delta_max)).min_by_key(rank_key)
}

/// Scans all `(f, z)` for the plain bound.
pub fn search_st_params(report: &SpectralReport, delta_max: usize) -> Option<BoundCertificate> {
    let m = report.m;
    if delta_max < 3 {
        return None;
    }
    let tuples: Vec<(usize, usize, usize, usize)> =
        (0..m).flat_map(|f| units(m).into_iter().map(move |z| (f, 0, z, 0))).collect();
    tuples.par_iter().filter_map(|&t| grow(report, None, t, delta_max)).min_by_key(rank_key)
}
