//! Product codes `A ⊗ B` of an `ℓ_A`-quasi-cyclic row code and an
//! `ℓ_B`-quasi-cyclic column code with coprime lengths.
//!
//! A product codeword is an `n_B × n_A` array. It is split into `ℓ = ℓ_Aℓ_B`
//! sub-arrays, each read out as one polynomial `c_{g,h}(X)` of degree `< m`
//! with `m = m_A m_B`; component `g + hℓ_B` of the product's quasi-cyclic
//! vector is `c_{g,h}`.

use crate::error::{Error, Result};
use crate::galois::{gcd, Elem};
use crate::oracle;
use crate::polyring::{Poly, PolyMatrix, PolyRing, RowOp};
use crate::qcc::QuasiCyclicCode;

/// Parameters of a product of an `[ℓ_A m_A]` row code and an `[ℓ_B m_B]`
/// column code, with a Bézout pair `a·n_A + b·n_B = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub ell_a: usize,
    pub m_a: usize,
    pub ell_b: usize,
    pub m_b: usize,
    pub a: i64,
    pub b: i64,
}

/// The Bézout pair with the smallest non-negative `a`.
pub fn bezout_pair(n_a: usize, n_b: usize) -> Result<(i64, i64)> {
    if n_a == 0 || n_b == 0 || gcd(n_a as u64, n_b as u64) != 1 {
        return Err(Error::NotCoprime(n_a as u64, n_b as u64));
    }
    let a = (0..n_b as i64).find(|&a| (a * n_a as i64).rem_euclid(n_b as i64) == 1 % n_b as i64).unwrap();
    let b = (1 - a * n_a as i64) / n_b as i64;
    Ok((a, b))
}

impl ProductSpec {
    pub fn new(ell_a: usize, m_a: usize, ell_b: usize, m_b: usize) -> Result<ProductSpec> {
        let (a, b) = bezout_pair(ell_a * m_a, ell_b * m_b)?;
        Ok(ProductSpec { ell_a, m_a, ell_b, m_b, a, b })
    }

    /// Uses an explicit Bézout pair.
    pub fn with_bezout(ell_a: usize, m_a: usize, ell_b: usize, m_b: usize, a: i64, b: i64) -> Result<ProductSpec> {
        let spec = ProductSpec::new(ell_a, m_a, ell_b, m_b)?;
        if a * spec.n_a() as i64 + b * spec.n_b() as i64 != 1 {
            return Err(Error::InvalidArgument(format!("{a}·{} + {b}·{} != 1", spec.n_a(), spec.n_b())));
        }
        Ok(ProductSpec { a, b, ..spec })
    }

    /// The spec matching two component codes.
    pub fn for_codes(row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<ProductSpec> {
        ProductSpec::new(row.ell(), row.m(), col.ell(), col.m())
    }

    pub fn n_a(&self) -> usize {
        self.ell_a * self.m_a
    }

    pub fn n_b(&self) -> usize {
        self.ell_b * self.m_b
    }

    pub fn ell(&self) -> usize {
        self.ell_a * self.ell_b
    }

    pub fn m(&self) -> usize {
        self.m_a * self.m_b
    }

    pub fn n(&self) -> usize {
        self.n_a() * self.n_b()
    }

    /// Position of array entry `(i, j)` in the univariate codeword.
    pub fn index_map(&self, i: usize, j: usize) -> usize {
        let n = self.n() as i128;
        let v = i as i128 * self.a as i128 * self.n_a() as i128 * self.ell_a as i128
            + j as i128 * self.b as i128 * self.n_b() as i128 * self.ell_b as i128;
        v.rem_euclid(n) as usize
    }

    /// Exponent of sub-array entry `(i, j)` before the component shift.
    pub fn submatrix_map(&self, i: usize, j: usize) -> usize {
        let m = self.m() as i128;
        let v = i as i128 * self.a as i128 * self.n_a() as i128 + j as i128 * self.b as i128 * self.n_b() as i128;
        v.rem_euclid(m) as usize
    }

    /// Shift of component `(g, h)`: `-g·b·m_B - h·a·m_A mod m`.
    pub fn shift_term(&self, g: usize, h: usize) -> usize {
        let m = self.m() as i128;
        let v = -(g as i128) * self.b as i128 * self.m_b as i128 - h as i128 * self.a as i128 * self.m_a as i128;
        v.rem_euclid(m) as usize
    }

    /// Column shifts of the product generator, indexed by `g + hℓ_B`.
    pub fn column_shifts(&self) -> Vec<i64> {
        let mut out = vec![0; self.ell()];
        for h in 0..self.ell_a {
            for g in 0..self.ell_b {
                out[g + h * self.ell_b] = self.shift_term(g, h) as i64;
            }
        }
        out
    }

    /// Splits an `n_B × n_A` array into the `ℓ` component polynomials.
    pub fn matrix_to_polys(&self, ring: &PolyRing, mat: &[Vec<Elem>]) -> Result<Vec<Poly>> {
        self.check_array(mat)?;
        let m = self.m();
        let f = ring.field();
        // pushed in h-major order, which is the component order g + hℓ_B
        let mut out = Vec::with_capacity(self.ell());
        for h in 0..self.ell_a {
            for g in 0..self.ell_b {
                let s = self.shift_term(g, h);
                let mut coeffs = vec![Elem::ZERO; m];
                for i in 0..self.m_b {
                    for j in 0..self.m_a {
                        let c = mat[i * self.ell_b + g][j * self.ell_a + h];
                        let k = (self.submatrix_map(i, j) + s) % m;
                        coeffs[k] = f.add(coeffs[k], c);
                    }
                }
                out.push(Poly::from_coeffs(coeffs));
            }
        }
        Ok(out)
    }

    /// Inverse of [`ProductSpec::matrix_to_polys`].
    pub fn polys_to_matrix(&self, polys: &[Poly]) -> Result<Vec<Vec<Elem>>> {
        if polys.len() != self.ell() {
            return Err(Error::Shape(format!("{} components, expected {}", polys.len(), self.ell())));
        }
        let m = self.m();
        let mut mat = vec![vec![Elem::ZERO; self.n_a()]; self.n_b()];
        for h in 0..self.ell_a {
            for g in 0..self.ell_b {
                let p = &polys[g + h * self.ell_b];
                let s = self.shift_term(g, h);
                for i in 0..self.m_b {
                    for j in 0..self.m_a {
                        let k = (self.submatrix_map(i, j) + s) % m;
                        mat[i * self.ell_b + g][j * self.ell_a + h] = p.coeff(k);
                    }
                }
            }
        }
        Ok(mat)
    }

    /// Reassembles `c(X) = Σ c_{g,h}(X^ℓ) X^{gℓ_A + hℓ_B} mod (X^n - 1)`.
    pub fn polys_to_univariate(&self, ring: &PolyRing, polys: &[Poly]) -> Result<Poly> {
        if polys.len() != self.ell() {
            return Err(Error::Shape(format!("{} components, expected {}", polys.len(), self.ell())));
        }
        let (n, ell) = (self.n(), self.ell());
        let f = ring.field();
        let mut coeffs = vec![Elem::ZERO; n];
        for h in 0..self.ell_a {
            for g in 0..self.ell_b {
                let off = g * self.ell_a + h * self.ell_b;
                for (e, &c) in polys[g + h * self.ell_b].coeffs().iter().enumerate() {
                    let k = (e * ell + off) % n;
                    coeffs[k] = f.add(coeffs[k], c);
                }
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Serializes an array directly: entry `(i, j)` goes to `μ(i, j)`.
    pub fn matrix_to_univariate(&self, mat: &[Vec<Elem>]) -> Result<Poly> {
        self.check_array(mat)?;
        let mut coeffs = vec![Elem::ZERO; self.n()];
        for (i, row) in mat.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                coeffs[self.index_map(i, j)] = c;
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    fn check_array(&self, mat: &[Vec<Elem>]) -> Result<()> {
        if mat.len() != self.n_b() || mat.iter().any(|r| r.len() != self.n_a()) {
            return Err(Error::Shape(format!("array must be {} × {}", self.n_b(), self.n_a())));
        }
        Ok(())
    }

    fn check_codes(&self, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<()> {
        if row.ell() != self.ell_a || row.m() != self.m_a || col.ell() != self.ell_b || col.m() != self.m_b {
            return Err(Error::Shape("component codes do not match the product spec".into()));
        }
        if row.field() != col.field() {
            return Err(Error::InvalidArgument("component codes are over different fields".into()));
        }
        Ok(())
    }

    /// `g^A_{h,h'}(X^{b n_B}) · g^B_{g,g'}(X^{a n_A}) mod (X^m - 1)`.
    fn entry(&self, row: &QuasiCyclicCode, col: &QuasiCyclicCode, h: usize, h2: usize, g: usize, g2: usize) -> Poly {
        let ring = row.ring();
        let m = self.m();
        let pa = ring.substitute_power(row.rgb().get(h, h2), self.b * self.n_b() as i64, m);
        let pb = ring.substitute_power(col.rgb().get(g, g2), self.a * self.n_a() as i64, m);
        ring.mulmod_xm1(&pa, &pb, m)
    }
}

/// A matrix `core · diag(X^{shifts})`, kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedMatrix {
    pub core: PolyMatrix,
    pub shifts: Vec<i64>,
}

impl ShiftedMatrix {
    /// The product `core · diag(X^{shifts}) mod (X^m - 1)`. A diagonal entry
    /// divisible by `X^m - 1` stays `X^m - 1` so the matrix keeps its shape.
    pub fn generator(&self, ring: &PolyRing, m: usize) -> PolyMatrix {
        let mut g = self.core.shift_columns(ring, &self.shifts, m);
        for i in 0..g.nrows().min(g.ncols()) {
            if g.get(i, i).is_zero() && !self.core.get(i, i).is_zero() {
                g.set(i, i, ring.x_pow_minus_one(m));
            }
        }
        g
    }
}

/// The unshifted upper part of the unreduced product basis: entry
/// `(g + hℓ_B, g' + h'ℓ_B)` is `g^A_{h,h'}(X^{b n_B}) g^B_{g,g'}(X^{a n_A})`.
pub fn unreduced_core(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<ShiftedMatrix> {
    spec.check_codes(row, col)?;
    let ell = spec.ell();
    let mut core = PolyMatrix::zeros(ell, ell);
    for h in 0..spec.ell_a {
        for g in 0..spec.ell_b {
            for h2 in h..spec.ell_a {
                for g2 in g..spec.ell_b {
                    core.set(g + h * spec.ell_b, g2 + h2 * spec.ell_b, spec.entry(row, col, h, h2, g, g2));
                }
            }
        }
    }
    Ok(ShiftedMatrix { core, shifts: spec.column_shifts() })
}

/// The `2ℓ × ℓ` unreduced basis: shifted core stacked on `(X^m - 1)·I`.
pub fn unreduced_basis(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<PolyMatrix> {
    let u = unreduced_core(spec, row, col)?;
    let ring = row.ring();
    let m = spec.m();
    u.generator(ring, m).stack(&PolyMatrix::scalar(spec.ell(), &ring.x_pow_minus_one(m)))
}

/// The product code built from the unreduced basis.
pub fn product_code(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<QuasiCyclicCode> {
    let u = unreduced_basis(spec, row, col)?;
    QuasiCyclicCode::build(row.field().clone(), spec.ell(), spec.m(), u.rows()[..spec.ell()].to_vec())
}

/// Pre-reduced form of a 2-quasi-cyclic row code times a cyclic column code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoQcForm {
    pub form: ShiftedMatrix,
    /// `v_0` with `g_{0,0} = u_0·(X^m - 1) + v_0·g^A_{0,0}(X^{b n_B}) g^B(X^{a n_A})`.
    pub cofactor: Poly,
    /// `g^A_{0,1}(X^{b n_B}) g^B(X^{a n_A}) mod (X^m - 1)`.
    pub product01: Poly,
}

pub fn pre_rgb_2qc(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<TwoQcForm> {
    spec.check_codes(row, col)?;
    if spec.ell_a != 2 || spec.ell_b != 1 {
        return Err(Error::Shape("needs a 2-quasi-cyclic row code and a cyclic column code".into()));
    }
    let ring = row.ring();
    let m = spec.m();
    let xm1 = ring.x_pow_minus_one(m);
    let p00 = spec.entry(row, col, 0, 0, 0, 0);
    let p01 = spec.entry(row, col, 0, 1, 0, 0);
    let p11 = spec.entry(row, col, 1, 1, 0, 0);
    let (g00, _u0, v0) = ring.xgcd(&xm1, &p00)?;
    let g01 = ring.mulmod_xm1(&v0, &p01, m);
    let g11 = ring.gcd(&xm1, &p11)?;
    let core = PolyMatrix::from_rows(vec![vec![g00, g01], vec![Poly::zero(), g11]], 2)?;
    Ok(TwoQcForm { form: ShiftedMatrix { core, shifts: spec.column_shifts() }, cofactor: v0, product01: p01 })
}

/// Replays the row operations of the 2-quasi-cyclic derivation on the
/// unshifted unreduced basis and returns the resulting `2 × 2` core, with
/// the off-diagonal entry reduced modulo `X^m - 1`.
pub fn pre_rgb_2qc_by_row_ops(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<PolyMatrix> {
    spec.check_codes(row, col)?;
    if spec.ell_a != 2 || spec.ell_b != 1 {
        return Err(Error::Shape("needs a 2-quasi-cyclic row code and a cyclic column code".into()));
    }
    let ring = row.ring();
    let m = spec.m();
    let xm1 = ring.x_pow_minus_one(m);
    let p00 = spec.entry(row, col, 0, 0, 0, 0);
    let p01 = spec.entry(row, col, 0, 1, 0, 0);
    let p11 = spec.entry(row, col, 1, 1, 0, 0);
    let z = Poly::zero();
    let mut mat = PolyMatrix::from_rows(
        vec![
            vec![p00.clone(), p01],
            vec![z.clone(), p11.clone()],
            vec![xm1.clone(), z.clone()],
            vec![z.clone(), xm1.clone()],
        ],
        2,
    )?;
    let (g00, u0, v0) = ring.xgcd(&xm1, &p00)?;

    // new row v0·R0 + u0·R2 placed first
    mat.push_row(vec![z.clone(), z.clone()])?;
    mat.apply(ring, RowOp::AddMultiple { target: 4, source: 0, factor: v0.clone() })?;
    mat.apply(ring, RowOp::AddMultiple { target: 4, source: 2, factor: u0.clone() })?;
    for i in (0..4).rev() {
        mat.apply(ring, RowOp::Swap(i, i + 1))?;
    }
    // rows: [R0', R0, R1, R2, R3]
    let c1 = ring.div_exact(&p00, &g00)?;
    let c3 = ring.div_exact(&xm1, &g00)?;
    mat.apply(ring, RowOp::AddMultiple { target: 1, source: 0, factor: ring.neg(&c1) })?;
    mat.apply(ring, RowOp::AddMultiple { target: 3, source: 0, factor: ring.neg(&c3) })?;

    // rows 1 and 3 are u0·y and -v0·y; u0 and v0 are coprime
    let (one, s, t) = ring.xgcd(&u0, &v0)?;
    debug_assert_eq!(one, ring.one());
    mat.apply(ring, RowOp::Combine { i: 1, j: 3, coeffs: [s, ring.neg(&t), v0, u0] })?;
    debug_assert!(mat.row(3).iter().all(Poly::is_zero));
    mat.apply(ring, RowOp::Delete(3))?;
    // rows: [R0', (0, y), (0, P11), (0, X^m - 1)]
    let (g11, s, t) = ring.xgcd(&p11, &xm1)?;
    let a11 = ring.div_exact(&xm1, &g11)?;
    let b11 = ring.div_exact(&p11, &g11)?;
    mat.apply(ring, RowOp::Combine { i: 2, j: 3, coeffs: [s, t, a11, ring.neg(&b11)] })?;
    debug_assert!(mat.row(3).iter().all(Poly::is_zero));
    mat.apply(ring, RowOp::Delete(3))?;
    // (0, y) is a multiple of (0, g11)
    if !ring.divides(&g11, mat.get(1, 1)) {
        return Err(Error::InvalidArgument("dependent row is not a multiple of g11".into()));
    }
    mat.apply(ring, RowOp::Delete(1))?;
    let g01 = ring.reduce_xm1(mat.get(0, 1), m);
    mat.set(0, 1, g01);
    Ok(mat)
}

/// The single-row form for a 1-level row code times a cyclic column code.
pub fn rgb_1level(spec: &ProductSpec, row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<ShiftedMatrix> {
    spec.check_codes(row, col)?;
    if spec.ell_b != 1 {
        return Err(Error::Shape("needs a cyclic column code".into()));
    }
    if row.level() != 1 {
        return Err(Error::InvalidArgument(format!("row code has level {}, expected 1", row.level())));
    }
    let ring = row.ring();
    let m = spec.m();
    let xm1 = ring.x_pow_minus_one(m);
    let ga = row.rgb().get(0, 0);
    let g = ring.gcd(&xm1, &spec.entry(row, col, 0, 0, 0, 0))?;
    let mut entries = vec![g.clone()];
    for i in 1..spec.ell_a {
        let fi = ring.div_exact(row.rgb().get(0, i), ga)?;
        let sub = ring.substitute_power(&fi, spec.b * spec.n_b() as i64, m);
        entries.push(ring.mulmod_xm1(&g, &sub, m));
    }
    Ok(ShiftedMatrix { core: PolyMatrix::from_rows(vec![entries], spec.ell_a)?, shifts: spec.column_shifts() })
}

/// The conjectured pre-reduced form for arbitrary indices, together with
/// the verdict of a module-equality check against the unreduced basis.
pub fn conjecture_pre_rgb(
    spec: &ProductSpec,
    row: &QuasiCyclicCode,
    col: &QuasiCyclicCode,
) -> Result<(ShiftedMatrix, bool)> {
    spec.check_codes(row, col)?;
    let ring = row.ring();
    let (m, ell) = (spec.m(), spec.ell());
    let xm1 = ring.x_pow_minus_one(m);
    let mut core = PolyMatrix::zeros(ell, ell);
    for h in 0..spec.ell_a {
        for g in 0..spec.ell_b {
            let r = g + h * spec.ell_b;
            let (d, _u, v) = ring.xgcd(&xm1, &spec.entry(row, col, h, h, g, g))?;
            core.set(r, r, d);
            for h2 in h..spec.ell_a {
                for g2 in g..spec.ell_b {
                    if (g2, h2) == (g, h) {
                        continue;
                    }
                    let e = ring.mulmod_xm1(&v, &spec.entry(row, col, h, h2, g, g2), m);
                    core.set(r, g2 + h2 * spec.ell_b, e);
                }
            }
        }
    }
    let form = ShiftedMatrix { core, shifts: spec.column_shifts() };
    let unreduced = unreduced_basis(spec, row, col)?;
    let verified = oracle::module_equal(ring, ell, m, form.generator(ring, m).rows(), unreduced.rows())?;
    Ok((form, verified))
}

/// Verdicts of every applicable construction against the unreduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionCheck {
    pub spec: ProductSpec,
    pub row_dimension: usize,
    pub col_dimension: usize,
    /// Dimension of the product built from the unreduced basis.
    pub dimension: usize,
    /// `(construction, generates the same module)`.
    pub verdicts: Vec<(&'static str, bool)>,
}

impl ConstructionCheck {
    pub fn dimension_ok(&self) -> bool {
        self.dimension == self.row_dimension * self.col_dimension
    }

    pub fn verified(&self) -> bool {
        self.dimension_ok() && self.verdicts.iter().all(|&(_, ok)| ok)
    }
}

/// Builds the product through each applicable construction and compares the
/// resulting modules.
pub fn check_constructions(row: &QuasiCyclicCode, col: &QuasiCyclicCode) -> Result<ConstructionCheck> {
    check_constructions_with(ProductSpec::for_codes(row, col)?, row, col)
}

pub fn check_constructions_with(
    spec: ProductSpec,
    row: &QuasiCyclicCode,
    col: &QuasiCyclicCode,
) -> Result<ConstructionCheck> {
    spec.check_codes(row, col)?;
    let ring = row.ring();
    let (m, ell) = (spec.m(), spec.ell());
    let unreduced = unreduced_basis(&spec, row, col)?;
    let code = QuasiCyclicCode::build(row.field().clone(), ell, m, unreduced.rows().to_vec())?;
    let same = |g: &PolyMatrix| oracle::module_equal(ring, ell, m, g.rows(), unreduced.rows());
    let mut verdicts = Vec::new();
    if spec.ell_a == 2 && spec.ell_b == 1 {
        let two = pre_rgb_2qc(&spec, row, col)?;
        verdicts.push(("two-qc", same(&two.form.generator(ring, m))?));
        let replayed = ShiftedMatrix { core: pre_rgb_2qc_by_row_ops(&spec, row, col)?, shifts: spec.column_shifts() };
        verdicts.push(("two-qc-row-ops", same(&replayed.generator(ring, m))?));
    }
    if spec.ell_b == 1 && row.level() == 1 {
        let one = rgb_1level(&spec, row, col)?;
        verdicts.push(("one-level", same(&one.generator(ring, m))?));
    }
    let (_, conj) = conjecture_pre_rgb(&spec, row, col)?;
    verdicts.push(("conjecture", conj));
    Ok(ConstructionCheck {
        spec,
        row_dimension: row.dimension(),
        col_dimension: col.dimension(),
        dimension: code.dimension(),
        verdicts,
    })
}

/// A named way of producing a generator for `A ⊗ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Unreduced,
    TwoQc,
    OneLevel,
    Conjecture,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Unreduced, Method::TwoQc, Method::OneLevel, Method::Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            Method::Unreduced => "unreduced",
            Method::TwoQc => "two-qc",
            Method::OneLevel => "one-level",
            Method::Conjecture => "conjecture",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction method {s:?}")))
    }
}

/// Output of one construction: the generator before reduction, the reduced
/// code, and whether the generator spans the same module as the unreduced
/// basis.
#[derive(Clone, Debug)]
pub struct Construction {
    pub method: Method,
    pub spec: ProductSpec,
    pub generator: PolyMatrix,
    pub code: QuasiCyclicCode,
    pub verified: bool,
}

pub fn construct(
    method: Method,
    spec: &ProductSpec,
    row: &QuasiCyclicCode,
    col: &QuasiCyclicCode,
) -> Result<Construction> {
    spec.check_codes(row, col)?;
    let ring = row.ring();
    let (m, ell) = (spec.m(), spec.ell());
    let unreduced = unreduced_basis(spec, row, col)?;
    let generator = match method {
        Method::Unreduced => unreduced.clone(),
        Method::TwoQc => pre_rgb_2qc(spec, row, col)?.form.generator(ring, m),
        Method::OneLevel => rgb_1level(spec, row, col)?.generator(ring, m),
        Method::Conjecture => conjecture_pre_rgb(spec, row, col)?.0.generator(ring, m),
    };
    let verified =
        method == Method::Unreduced || oracle::module_equal(ring, ell, m, generator.rows(), unreduced.rows())?;
    let code = QuasiCyclicCode::build(row.field().clone(), ell, m, generator.rows().to_vec())?;
    Ok(Construction { method, spec: *spec, generator, code, verified })
}
