//! Finite fields `F_{p^n}` in a polynomial basis over the prime field, and
//! extension pairs `F_q ⊂ F_{q^s}` with embeddings, coordinates, roots of
//! unity, cyclotomic cosets and minimal polynomials.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, Solution};
use crate::polyring::Poly;

/// A field element in packed form: the coefficient of `x^i` in the
/// polynomial basis is the `i`-th base-`p` digit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const TABLE_LIMIT: u64 = 1 << 20;
const ORDER_LIMIT: u64 = 1 << 40;

// X^12 + X^7 + X^6 + X^5 + X^3 + X + 1, the representation used for the
// worked examples over F_{2^12}.
const F4096_MODULUS: [u64; 13] = [1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1];

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    degree: u32,
    order: u64,
    modulus: Vec<u64>,
    primitive: Elem,
    tables: Option<Tables>,
}

/// The finite field `F_p[x]/(modulus)`.
///
/// Cloning is cheap; all clones share the same tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.inner.p)
            .field("degree", &self.inner.degree)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, vec![0, 1])
    }

    /// `F_{p^degree}` with the default modulus (see [`default_modulus`]).
    pub fn with_degree(p: u64, degree: u32) -> Result<Field> {
        let modulus = default_modulus(p, degree)?;
        Field::new(p, modulus)
    }

    /// `F_q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, d) = prime_power(q)?;
        Field::with_degree(p, d)
    }

    /// Builds `F_p[x]/(modulus)`; `modulus` is ascending and must be monic
    /// and irreducible.
    pub fn new(p: u64, mut modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidArgument("modulus must have degree >= 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument("modulus coefficient not reduced mod p".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidArgument("modulus must be monic".into()));
        }
        let degree = (modulus.len() - 1) as u32;
        let order = checked_pow(p, degree).filter(|&o| o <= ORDER_LIMIT).ok_or(Error::FieldTooLarge { p, degree })?;
        if !fp::is_irreducible(p, &modulus) {
            return Err(Error::NotIrreducible(p));
        }
        let mut inner = Inner { p, degree, order, modulus, primitive: Elem::ONE, tables: None };
        inner.primitive = find_primitive(&inner);
        if order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Ascending modulus coefficients over `F_p`.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The smallest packed element of full multiplicative order.
    pub fn primitive(&self) -> Elem {
        self.inner.primitive
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.inner.order
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange(a.0))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.inner.p as i64) as u64)
    }

    /// Ascending coefficients over `F_p`, exactly `degree` of them.
    pub fn digits(&self, a: Elem) -> Vec<u64> {
        let p = self.inner.p;
        let mut v = a.0;
        (0..self.inner.degree)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Elem> {
        let p = self.inner.p;
        if digits.len() > self.inner.degree as usize {
            let extra = &digits[self.inner.degree as usize..];
            if extra.iter().any(|&d| d != 0) {
                return Err(Error::InvalidArgument("too many coefficients for the field".into()));
            }
        }
        let mut v = 0u64;
        for &d in digits.iter().take(self.inner.degree as usize).rev() {
            if d >= p {
                return Err(Error::InvalidArgument(format!("coefficient {d} not reduced mod {p}")));
            }
            v = v * p + d;
        }
        Ok(Elem(v))
    }

    /// The element `x` (the class of the indeterminate).
    pub fn generator(&self) -> Elem {
        if self.inner.degree == 1 {
            // x ≡ -modulus[0] in a prime field
            self.neg(Elem(self.inner.modulus[0]))
        } else {
            Elem(self.inner.p)
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.inner.degree == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut r, mut place) = (a.0, b.0, 0u64, 1u64);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(r)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        if self.inner.degree == 1 {
            return Elem((p - a.0) % p);
        }
        let (mut x, mut r, mut place) = (a.0, 0u64, 1u64);
        while x > 0 {
            r += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Elem(r)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize] as u64),
            None => mul_slow(&self.inner, a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let n = self.inner.order - 1;
        match &self.inner.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64;
                Ok(Elem(t.exp[((n - l) % n) as usize] as u64))
            }
            None => Ok(pow_slow(&self.inner, a, n - 1)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents invert first.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a.0 == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => Err(Error::ZeroInverse),
                std::cmp::Ordering::Equal => Ok(Elem::ONE),
                std::cmp::Ordering::Greater => Ok(Elem::ZERO),
            };
        }
        let n = (self.inner.order - 1) as i128;
        let e = (e as i128).rem_euclid(n) as u64;
        Ok(self.pow_u(a, e))
    }

    fn pow_u(&self, a: Elem, e: u64) -> Elem {
        match &self.inner.tables {
            Some(t) => {
                let n = self.inner.order - 1;
                let l = t.log[a.0 as usize] as u64;
                let idx = ((l as u128 * e as u128) % n as u128) as usize;
                Elem(t.exp[idx] as u64)
            }
            None => pow_slow(&self.inner, a, e),
        }
    }

    /// Multiplies by an element of the prime subfield.
    pub fn scale_int(&self, c: u64, a: Elem) -> Elem {
        self.mul(Elem(c % self.inner.p), a)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut n = self.inner.order - 1;
        for r in prime_factors(n) {
            while n.is_multiple_of(r) && self.pow_u(a, n / r) == Elem::ONE {
                n /= r;
            }
        }
        Ok(n)
    }

    /// Discrete logarithm to the primitive element, when tables are present.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        self.inner.tables.as_ref().map(|t| t.log[a.0 as usize] as u64)
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.order).map(Elem)
    }
}

fn mul_slow(f: &Inner, a: Elem, b: Elem) -> Elem {
    let p = f.p;
    let n = f.degree as usize;
    let da = unpack(a.0, p, n);
    let db = unpack(b.0, p, n);
    let mut prod = vec![0u64; 2 * n - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    for i in (n..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for (k, &m) in f.modulus.iter().enumerate() {
            let idx = i - n + k;
            let t = (c as u128 * m as u128 % p as u128) as u64;
            prod[idx] = (prod[idx] + p - t) % p;
        }
    }
    Elem(pack(&prod[..n], p))
}

fn pow_slow(f: &Inner, mut a: Elem, mut e: u64) -> Elem {
    let mut r = Elem::ONE;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_slow(f, r, a);
        }
        a = mul_slow(f, a, a);
        e >>= 1;
    }
    r
}

fn find_primitive(f: &Inner) -> Elem {
    let n = f.order - 1;
    let factors = prime_factors(n);
    (1..f.order)
        .map(Elem)
        .find(|&g| factors.iter().all(|&r| pow_slow(f, g, n / r) != Elem::ONE))
        .expect("the multiplicative group of a finite field is cyclic")
}

fn build_tables(f: &Inner) -> Tables {
    let n = (f.order - 1) as usize;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; f.order as usize];
    let mut cur = Elem::ONE;
    for i in 0..n {
        exp[i] = cur.0 as u32;
        log[cur.0 as usize] = i as u32;
        cur = mul_slow(f, cur, f.primitive);
    }
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    Tables { exp, log }
}

fn unpack(mut v: u64, p: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut r: u64 = 1;
    for _ in 0..exp {
        r = r.checked_mul(base)?;
    }
    Some(r)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^d`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = f[0];
    let (mut d, mut v) = (0u32, q);
    while v > 1 {
        v /= p;
        d += 1;
    }
    Ok((p, d))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest `s >= 1` with `q^s ≡ 1 (mod n)`.
pub fn multiplicative_order(q: u64, n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    if gcd(q % n, n) != 1 {
        return Err(Error::RepeatedRoot { m: n, q });
    }
    let (mut s, mut v) = (1u32, q % n);
    while v != 1 {
        v = ((v as u128 * q as u128) % n as u128) as u64;
        s += 1;
    }
    Ok(s)
}

/// The deterministic modulus for `F_{p^degree}`: the hard-coded example
/// polynomial for `2^12`, otherwise the monic irreducible with the smallest
/// packed value.
pub fn default_modulus(p: u64, degree: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    if p == 2 && degree == 12 {
        return Ok(F4096_MODULUS.to_vec());
    }
    if degree == 1 {
        return Ok(vec![0, 1]);
    }
    let bound = checked_pow(p, degree).filter(|&o| o <= ORDER_LIMIT).ok_or(Error::FieldTooLarge { p, degree })?;
    for v in 0..bound {
        let mut m = unpack(v, p, degree as usize);
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        if fp::is_irreducible(p, &m) {
            return Ok(m);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Polynomials over `F_p` as ascending `u64` coefficient vectors.
mod fp {
    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u128, a as u128, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        r as u64
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let df = f.len() - 1;
        let lf_inv = inv_mod(f[df], p) as u128;
        while r.len() > df {
            let top = r.len() - 1;
            let c = (r[top] as u128 * lf_inv % p as u128) as u64;
            for (k, &m) in f.iter().enumerate() {
                let idx = top - df + k;
                let t = (c as u128 * m as u128 % p as u128) as u64;
                r[idx] = (r[idx] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
            }
        }
        rem(&prod, f, p)
    }

    fn pow_mod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut r = rem(&[1], f, p);
        let mut b = rem(a, f, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mul_mod(&r, &b, f, p);
            }
            b = mul_mod(&b, &b, f, p);
            e >>= 1;
        }
        r
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + p - y) % p
                })
                .collect(),
        )
    }

    /// `x^(p^k) mod f`.
    fn frobenius(k: u32, f: &[u64], p: u64) -> Vec<u64> {
        let mut h = rem(&[0, 1], f, p);
        for _ in 0..k {
            h = pow_mod(&h, p, f, p);
        }
        h
    }

    /// Rabin's irreducibility test.
    pub(super) fn is_irreducible(p: u64, f: &[u64]) -> bool {
        let n = (f.len() - 1) as u32;
        if n == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        let x = [0u64, 1];
        for r in super::prime_factors(n as u64) {
            let h = frobenius(n / r as u32, f, p);
            let g = gcd(f, &sub(&h, &x, p), p);
            if g.len() != 1 {
                return false;
            }
        }
        sub(&frobenius(n, f, p), &x, p).is_empty()
    }
}

/// An extension pair `F_q ⊂ F_{q^s}`.
///
/// Base-field elements are packed over the base field's own modulus and are
/// embedded by sending `x` to a fixed root of that modulus. Coordinates of a
/// big-field element are taken in the basis `1, ξ, ..., ξ^{s-1}` where `ξ` is
/// the big field's primitive element.
#[derive(Clone, Debug)]
pub struct Extension {
    base: Field,
    field: Field,
    s: u32,
    embed: Arc<Vec<Elem>>,
    coord_inv: Arc<Vec<Vec<u64>>>,
}

impl Extension {
    /// Pairs a base field with a field containing it.
    pub fn new(base: Field, field: Field) -> Result<Extension> {
        if base.characteristic() != field.characteristic() {
            return Err(Error::InvalidArgument("fields have different characteristic".into()));
        }
        let d = base.degree();
        if !field.degree().is_multiple_of(d) {
            return Err(Error::InvalidArgument(format!("degree {} is not a multiple of {}", field.degree(), d)));
        }
        let s = field.degree() / d;
        let rho = subfield_root(&base, &field)?;
        let q = base.order();
        let mut embed = Vec::with_capacity(q as usize);
        let powers: Vec<Elem> = (0..d as i64).map(|k| field.pow(rho, k).unwrap()).collect();
        for c in 0..q {
            let dig = base.digits(Elem(c));
            let mut acc = Elem::ZERO;
            for (k, &t) in dig.iter().enumerate() {
                acc = field.add(acc, field.scale_int(t, powers[k]));
            }
            embed.push(acc);
        }
        let p = field.characteristic();
        let n = field.degree() as usize;
        let xi = field.primitive();
        let mut cols = Vec::with_capacity(n);
        for i in 0..s as i64 {
            let xi_i = field.pow(xi, i).unwrap();
            for rk in powers.iter() {
                cols.push(field.digits(field.mul(*rk, xi_i)));
            }
        }
        // matrix with these columns
        let mat: Vec<Vec<u64>> = (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect();
        let coord_inv = invert_mod_p(&mat, p).ok_or(Error::SingularBasis)?;
        Ok(Extension { base, field, s, embed: Arc::new(embed), coord_inv: Arc::new(coord_inv) })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degree of the extension over the base field.
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn embed(&self, c: Elem) -> Elem {
        self.embed[c.0 as usize]
    }

    /// Coordinates over `F_q` in the basis `1, ξ, ..., ξ^{s-1}`.
    pub fn coordinates(&self, x: Elem) -> Vec<Elem> {
        let p = self.field.characteristic();
        let dig = self.field.digits(x);
        let n = dig.len();
        let d = self.base.degree() as usize;
        let t: Vec<u64> = (0..n)
            .map(|r| {
                let mut acc: u128 = 0;
                for c in 0..n {
                    acc += self.coord_inv[r][c] as u128 * dig[c] as u128;
                }
                (acc % p as u128) as u64
            })
            .collect();
        (0..self.s as usize).map(|i| Elem(pack(&t[i * d..(i + 1) * d], p))).collect()
    }

    /// Inverse of [`Extension::coordinates`].
    pub fn from_coordinates(&self, coords: &[Elem]) -> Elem {
        let f = &self.field;
        let xi = f.primitive();
        let mut acc = Elem::ZERO;
        let mut pw = Elem::ONE;
        for &c in coords {
            acc = f.add(acc, f.mul(self.embed(c), pw));
            pw = f.mul(pw, xi);
        }
        acc
    }

    /// The base-field preimage of `x`, if `x` lies in the subfield.
    pub fn project(&self, x: Elem) -> Option<Elem> {
        let c = self.coordinates(x);
        if c[1..].iter().all(|e| e.is_zero()) {
            Some(c[0])
        } else {
            None
        }
    }

    /// Coordinates of `x` with respect to an arbitrary `F_q`-basis.
    pub fn subfield_coordinates(&self, x: Elem, basis: &[Elem]) -> Result<Vec<Elem>> {
        let s = self.s as usize;
        if basis.len() != s {
            return Err(Error::Shape(format!("basis has {} elements, expected {}", basis.len(), s)));
        }
        let cols: Vec<Vec<Elem>> = basis.iter().map(|&b| self.coordinates(b)).collect();
        let a: Vec<Vec<Elem>> = (0..s).map(|r| (0..s).map(|c| cols[c][r]).collect()).collect();
        match linalg::solve(&self.base, &a, &self.coordinates(x)) {
            Solution::Unique(v) => Ok(v),
            _ => Err(Error::SingularBasis),
        }
    }

    /// `ξ^((q^s-1)/n)`, an element of order exactly `n`.
    pub fn root_of_unity(&self, n: u64) -> Result<Elem> {
        let order = self.field.order() - 1;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { n, order });
        }
        self.field.pow(self.field.primitive(), (order / n) as i64)
    }

    /// Evaluates a base-field polynomial at a big-field point.
    pub fn eval(&self, f: &Poly, x: Elem) -> Elem {
        let fl = &self.field;
        f.coeffs().iter().rev().fold(Elem::ZERO, |acc, &c| fl.add(fl.mul(acc, x), self.embed(c)))
    }

    /// Lifts a base-field polynomial to big-field coefficients.
    pub fn lift(&self, f: &Poly) -> Poly {
        Poly::from_coeffs(f.coeffs().iter().map(|&c| self.embed(c)).collect())
    }

    /// `M_{α^i}(X) = Π_{j ∈ C_i} (X - α^j)` for `α` of order `m`, over the base field.
    pub fn minimal_polynomial(&self, alpha: Elem, i: usize, m: usize) -> Result<Poly> {
        let coset = cyclotomic_coset(i % m.max(1), m, self.base.order())?;
        let fl = &self.field;
        let mut acc = vec![Elem::ONE];
        for &j in &coset.members {
            let root = fl.pow(alpha, j as i64)?;
            let neg = fl.neg(root);
            let mut next = vec![Elem::ZERO; acc.len() + 1];
            for (k, &c) in acc.iter().enumerate() {
                next[k + 1] = fl.add(next[k + 1], c);
                next[k] = fl.add(next[k], fl.mul(c, neg));
            }
            acc = next;
        }
        let coeffs =
            acc.into_iter().map(|c| self.project(c).ok_or(Error::NotInBaseField)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

fn subfield_root(base: &Field, field: &Field) -> Result<Elem> {
    if base.degree() == 1 {
        return Ok(Elem::ONE);
    }
    let n = field.order() - 1;
    let step = n / (base.order() - 1);
    let g = field.pow(field.primitive(), step as i64)?;
    let m = base.modulus();
    let mut roots: Vec<Elem> = (0..base.order() - 1)
        .map(|k| field.pow(g, k as i64).unwrap())
        .filter(|&r| {
            let v = m.iter().rev().fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, r), field.from_int(c as i64)));
            v.is_zero()
        })
        .collect();
    roots.sort();
    roots.first().copied().ok_or(Error::NotInBaseField)
}

fn invert_mod_p(mat: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = mat.len();
    let mut a: Vec<Vec<u64>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let pinv = |x: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u128, x as u128, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        r as u64
    };
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = pinv(a[col][col]) as u128;
        for v in a[col].iter_mut() {
            *v = (*v as u128 * inv % p as u128) as u64;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col] as u128;
                for c in 0..2 * n {
                    let t = (f * a[col][c] as u128 % p as u128) as u64;
                    a[r][c] = (a[r][c] + p - t) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The smallest extension `F_{q^s}` of `F_q` containing an element of order `n`.
pub fn field_extend(q: u64, n: u64) -> Result<Extension> {
    let (p, d) = prime_power(q)?;
    extension_for(&Field::with_degree(p, d)?, n)
}

/// Like [`field_extend`] but over a given base field.
pub fn extension_for(base: &Field, n: u64) -> Result<Extension> {
    let q = base.order();
    if n == 0 {
        return Err(Error::InvalidArgument("element order must be positive".into()));
    }
    if gcd(n, q) != 1 {
        return Err(Error::RepeatedRoot { m: n, q });
    }
    let s = multiplicative_order(q, n)?;
    let field = if s == 1 { base.clone() } else { Field::with_degree(base.characteristic(), base.degree() * s)? };
    Extension::new(base.clone(), field)
}

/// A `q`-cyclotomic coset modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub representative: usize,
    pub modulus: usize,
    pub q: u64,
    /// `i, iq, iq^2, ...` in generation order.
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.contains(&j)
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

pub fn cyclotomic_coset(i: usize, m: usize, q: u64) -> Result<CyclotomicCoset> {
    if m == 0 || i >= m {
        return Err(Error::InvalidArgument(format!("coset index {i} out of range for modulus {m}")));
    }
    if gcd(m as u64, q) != 1 {
        return Err(Error::RepeatedRoot { m: m as u64, q });
    }
    let mut members = vec![i];
    let qm = (q % m as u64) as usize;
    let mut j = i * qm % m;
    while j != i {
        members.push(j);
        j = j * qm % m;
    }
    Ok(CyclotomicCoset { representative: i, modulus: m, q, members })
}

/// All cosets modulo `m`, each represented by its smallest member, ordered by representative.
pub fn cyclotomic_cosets(m: usize, q: u64) -> Result<Vec<CyclotomicCoset>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for i in 0..m {
        if seen[i] {
            continue;
        }
        let c = cyclotomic_coset(i, m, q)?;
        for &j in &c.members {
            seen[j] = true;
        }
        out.push(c);
    }
    Ok(out)
}
