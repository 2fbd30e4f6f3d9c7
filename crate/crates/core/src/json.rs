//! JSON encodings of fields, codes, certificates and decoder data.
//!
//! A polynomial is an array of coefficients in ascending degree. Over a prime
//! field a coefficient is an integer; otherwise it is the element's digit
//! array over the prime field. Object keys come out sorted.

use serde_json::{json, Map, Value};

use crate::decoder::{DecodeResult, DecoderSetup, Outcome};
use crate::error::{Error, Result};
use crate::galois::{extension_for, prime_power, Elem, Extension, Field};
use crate::oracle::{OracleBudget, SweepMode, SweepReport};
use crate::polyring::Poly;
use crate::qcc::QuasiCyclicCode;
use crate::spectral::{self, BoundCertificate, BoundKind, ColumnCode, Distance, SpectralReport};

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn get_u64(v: &Value, key: &str) -> Result<u64> {
    get(v, key)?.as_u64().ok_or_else(|| bad(format!("\"{key}\" must be a non-negative integer")))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    Ok(get_u64(v, key)? as usize)
}

fn get_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    get(v, key)?.as_array().ok_or_else(|| bad(format!("\"{key}\" must be an array")))
}

pub fn elem_to_json(f: &Field, e: Elem) -> Value {
    if f.degree() == 1 {
        json!(e.0)
    } else {
        json!(f.digits(e))
    }
}

pub fn elem_from_json(f: &Field, v: &Value) -> Result<Elem> {
    match v {
        Value::Number(n) => {
            let x = n.as_u64().ok_or_else(|| bad("coefficient must be a non-negative integer"))?;
            f.check(Elem(x))
        }
        Value::Array(ds) => {
            let digits = ds
                .iter()
                .map(|d| d.as_u64().ok_or_else(|| bad("digit must be a non-negative integer")))
                .collect::<Result<Vec<_>>>()?;
            f.from_digits(&digits)
        }
        _ => Err(bad("coefficient must be an integer or a digit array")),
    }
}

pub fn poly_to_json(f: &Field, p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| elem_to_json(f, c)).collect())
}

pub fn poly_from_json(f: &Field, v: &Value) -> Result<Poly> {
    let cs = v.as_array().ok_or_else(|| bad("polynomial must be a coefficient array"))?;
    Ok(Poly::from_coeffs(cs.iter().map(|c| elem_from_json(f, c)).collect::<Result<Vec<_>>>()?))
}

pub fn word_to_json(f: &Field, word: &[Poly]) -> Value {
    Value::Array(word.iter().map(|p| poly_to_json(f, p)).collect())
}

pub fn word_from_json(f: &Field, v: &Value) -> Result<Vec<Poly>> {
    v.as_array()
        .ok_or_else(|| bad("word must be an array of polynomials"))?
        .iter()
        .map(|p| poly_from_json(f, p))
        .collect()
}

/// Field description: `q`, and the modulus for non-prime orders.
pub fn field_to_json(f: &Field) -> Value {
    let mut m = Map::new();
    m.insert("q".into(), json!(f.order()));
    if f.degree() > 1 {
        m.insert("modulus".into(), json!(f.modulus()));
    }
    Value::Object(m)
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let q = get_u64(v, "q")?;
    let (p, d) = prime_power(q)?;
    match v.get("modulus") {
        Some(m) if d > 1 => {
            let coeffs = m
                .as_array()
                .ok_or_else(|| bad("\"modulus\" must be an array"))?
                .iter()
                .map(|c| c.as_u64().ok_or_else(|| bad("modulus coefficients must be integers")))
                .collect::<Result<Vec<_>>>()?;
            let f = Field::new(p, coeffs)?;
            if f.degree() != d {
                return Err(bad(format!("modulus has degree {}, expected {d}", f.degree())));
            }
            Ok(f)
        }
        _ => Field::with_degree(p, d),
    }
}

/// Full field descriptor: characteristic, degree over the prime field and
/// the modulus of a proper extension.
pub fn field_descriptor(f: &Field) -> Value {
    let mut v = json!({ "p": f.characteristic(), "s": f.degree() });
    if f.degree() > 1 {
        v["modulus"] = json!(f.modulus());
    }
    v
}

/// A code as its reduced generator plus derived parameters. Parsing reads
/// `q`, `modulus`, `ell`, `m` and `rows`; the rest is informational.
pub fn code_to_json(code: &QuasiCyclicCode) -> Value {
    let f = code.field();
    let mut v = field_to_json(f);
    let obj = v.as_object_mut().expect("object");
    obj.insert("ell".into(), json!(code.ell()));
    obj.insert("m".into(), json!(code.m()));
    obj.insert("length".into(), json!(code.length()));
    obj.insert("dimension".into(), json!(code.dimension()));
    obj.insert("level".into(), json!(code.level()));
    obj.insert("row_dims".into(), json!(code.row_dims()));
    obj.insert("rgb_pot".into(), json!(true));
    obj.insert("rows".into(), Value::Array(code.rgb().rows().iter().map(|r| word_to_json(f, r)).collect()));
    v
}

pub fn code_from_json(v: &Value) -> Result<QuasiCyclicCode> {
    let f = field_from_json(v)?;
    let ell = get_usize(v, "ell")?;
    let m = get_usize(v, "m")?;
    let rows = get_array(v, "rows")?.iter().map(|r| word_from_json(&f, r)).collect::<Result<Vec<_>>>()?;
    if rows.iter().any(|r| r.len() != ell) {
        return Err(bad(format!("every row needs {ell} entries")));
    }
    QuasiCyclicCode::build(f, ell, m, rows)
}

pub fn distance_to_json(d: Distance) -> Value {
    match d {
        Distance::Finite(x) => json!(x),
        Distance::Infinite => json!("inf"),
    }
}

pub fn certificate_to_json(ext: &Extension, c: &BoundCertificate) -> Value {
    let big = ext.field();
    let eigenspace: Vec<Value> =
        c.eigenspace.iter().map(|v| Value::Array(v.iter().map(|&x| json!(big.digits(x))).collect())).collect();
    let mut v = json!({
        "delta": c.delta,
        "exponents": c.exponents,
        "eigenspace": eigenspace,
        "d_ec": distance_to_json(c.eigencode_distance),
        "bound": c.bound,
    });
    let obj = v.as_object_mut().expect("object");
    match c.kind {
        BoundKind::St => {
            obj.insert("kind".into(), json!("st"));
            obj.insert("f".into(), json!(c.f1));
            obj.insert("z".into(), json!(c.z1));
        }
        BoundKind::Generalized => {
            obj.insert("kind".into(), json!("generalized"));
            obj.insert("f1".into(), json!(c.f1));
            obj.insert("f2".into(), json!(c.f2));
            obj.insert("z1".into(), json!(c.z1));
            obj.insert("z2".into(), json!(c.z2));
            obj.insert("d_B".into(), json!(c.column_distance));
            obj.insert("d_star".into(), json!(c.bound));
        }
    }
    v
}

/// Exponents grouped by multiplicity, with eigenspaces as digit arrays.
pub fn report_to_json(report: &SpectralReport) -> Value {
    let big = report.ext.field();
    let by_mult: Vec<Value> = (0..=report.ell).map(|r| json!(report.exponents_with_multiplicity(r))).collect();
    let records: Vec<Value> = report
        .records
        .iter()
        .filter(|e| e.geometric > 0)
        .map(|e| {
            json!({
                "exponent": e.exponent,
                "algebraic": e.algebraic,
                "geometric": e.geometric,
                "eigenspace": e.eigenspace.iter()
                    .map(|v| v.iter().map(|&x| json!(big.digits(x))).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "m": report.m,
        "alpha": big.digits(report.alpha),
        "extension_degree": report.ext.s(),
        "by_multiplicity": by_mult,
        "eigenvalues": records,
        "total_multiplicity": report.total_multiplicity(),
    })
}

/// `{"row": code, "col": code, "certificate": {f1, f2, z1, z2, delta}}`.
pub fn setup_to_json(setup: &DecoderSetup) -> Value {
    let c = setup.certificate();
    json!({
        "row": code_to_json(setup.code()),
        "col": code_to_json(&setup.column().code),
        "certificate": { "f1": c.f1, "f2": c.f2, "z1": c.z1, "z2": c.z2, "delta": c.delta },
    })
}

/// Rebuilds a decoder; searches for a certificate when none is given.
pub fn setup_from_json(v: &Value, budget: &OracleBudget, delta_max: usize) -> Result<DecoderSetup> {
    let row = code_from_json(get(v, "row")?)?;
    let col = code_from_json(get(v, "col")?)?;
    if row.field() != col.field() {
        return Err(bad("row and column codes are over different fields"));
    }
    match v.get("certificate") {
        None | Some(Value::Null) => DecoderSetup::from_codes(row, col, budget, delta_max),
        Some(c) => {
            let params = (get_usize(c, "f1")?, get_usize(c, "f2")?, get_usize(c, "z1")?, get_usize(c, "z2")?);
            let delta = get_usize(c, "delta")?;
            let (m_a, m_b) = (row.m(), col.m());
            let ext = extension_for(row.field(), (m_a * m_b) as u64)?;
            let alpha = ext.root_of_unity(m_a as u64)?;
            let beta = ext.root_of_unity(m_b as u64)?;
            let report = spectral::analyze(&ext, row.rgb(), alpha, m_a)?;
            let column = ColumnCode::new(&ext, col, beta, budget)?;
            let cert = spectral::generalized_bound(&report, &column, params, delta)?;
            DecoderSetup::new(&ext, row, column, cert, alpha)
        }
    }
}

pub fn received_from_json(f: &Field, v: &Value) -> Result<Vec<Poly>> {
    word_from_json(f, get(v, "received")?)
}

pub fn decode_result_to_json(f: &Field, r: &DecodeResult) -> Value {
    let mut v = json!({
        "positions": r.positions,
        "error_columns": r.error_columns.iter()
            .map(|c| c.iter().map(|&e| elem_to_json(f, e)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "corrected": r.corrected.as_ref().map_or(Value::Null, |w| word_to_json(f, w)),
    });
    let obj = v.as_object_mut().expect("object");
    match &r.outcome {
        Outcome::Corrected => {
            obj.insert("outcome".into(), json!("corrected"));
        }
        Outcome::Failure(reason) => {
            obj.insert("outcome".into(), json!("failure"));
            obj.insert("reason".into(), json!(reason));
        }
    }
    v
}

pub fn sweep_to_json(f: &Field, r: &SweepReport) -> Value {
    let mode = match r.mode {
        SweepMode::Exhaustive => json!("exhaustive"),
        SweepMode::Stratified { seed } => json!({ "stratified": { "seed": seed } }),
    };
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|x| {
            json!({
                "positions": x.positions,
                "columns": x.columns.iter().map(|c| c.iter().map(|&e| elem_to_json(f, e)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "transmitted": word_to_json(f, &x.transmitted),
                "outcome": x.outcome,
            })
        })
        .collect();
    json!({
        "mode": mode,
        "radius": r.radius,
        "patterns": r.patterns,
        "successes": r.successes,
        "ratio": r.ratio(),
        "per_count": r.per_count,
        "failures": failures,
    })
}
