//! Brute-force ground truth: exhaustive weight enumeration, module equality,
//! random code generators and burst-error sweeps.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::decoder::{DecoderSetup, Outcome};
use crate::error::{Error, Result};
use crate::galois::{cyclotomic_cosets, extension_for, Elem, Field};
use crate::polyring::{Poly, PolyRing};
use crate::qcc::QuasiCyclicCode;

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Enumeration of `q^k` words is allowed while `q^k ≤ 2^max_dimension`.
    pub max_dimension: u32,
    pub max_length: usize,
    /// Largest number of error patterns a burst sweep enumerates.
    pub max_patterns: u64,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_dimension: 20, max_length: 4096, max_patterns: 1_000_000, time_limit: None }
    }
}

impl OracleBudget {
    pub fn with_dimension(max_dimension: u32) -> OracleBudget {
        OracleBudget { max_dimension, ..OracleBudget::default() }
    }

    fn words(&self) -> u128 {
        1u128 << self.max_dimension.min(120)
    }

    fn check_words(&self, q: u64, k: usize, n: usize) -> Result<u64> {
        if n > self.max_length {
            return Err(Error::BudgetExceeded {
                needed: format!("length {n}"),
                budget: format!("length {}", self.max_length),
            });
        }
        let mut total: u128 = 1;
        for _ in 0..k {
            total = total.saturating_mul(q as u128);
            if total > self.words() {
                return Err(Error::BudgetExceeded {
                    needed: format!("{q}^{k} codewords"),
                    budget: format!("2^{} codewords", self.max_dimension),
                });
            }
        }
        Ok(total as u64)
    }
}

/// The first nonzero codeword of minimum weight, in lexicographic message order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWord {
    pub weight: usize,
    /// Message index, most significant digit first.
    pub index: u64,
    pub word: Vec<Elem>,
}

/// Minimum Hamming weight over the nonzero words spanned by the rows of `g`.
pub fn min_weight_word_of_rows(f: &Field, g: &[Vec<Elem>], n: usize, budget: &OracleBudget) -> Result<MinWord> {
    let k = g.len();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let q = f.order();
    let total = budget.check_words(q, k, n)?;
    let start = Instant::now();

    // the low `low` digits are walked by a counter inside each chunk
    let mut low = 0usize;
    let mut span: u64 = 1;
    while low < k && span < 1 << 12 {
        low += 1;
        span *= q;
    }
    let chunks = total / span;
    let high = k - low;
    // diff[t][v]: added when low digit t steps from element v to v + 1 (wrapping)
    let diff: Vec<Vec<Vec<Elem>>> = (0..low)
        .map(|t| {
            let row = &g[high + t];
            (0..q)
                .map(|v| {
                    let next = (v + 1) % q;
                    let c = f.sub(Elem(next), Elem(v));
                    row.iter().map(|&x| f.mul(c, x)).collect()
                })
                .collect()
        })
        .collect();

    let results: Vec<Result<Option<MinWord>>> = (0..chunks)
        .into_par_iter()
        .map(|hi| {
            if let Some(limit) = budget.time_limit {
                if start.elapsed() > limit {
                    return Err(Error::BudgetExceeded { needed: "more time".into(), budget: format!("{limit:?}") });
                }
            }
            let mut word = vec![Elem::ZERO; n];
            let mut rest = hi;
            for t in (0..high).rev() {
                let d = Elem(rest % q);
                rest /= q;
                if !d.is_zero() {
                    for (w, &x) in word.iter_mut().zip(&g[t]) {
                        *w = f.add(*w, f.mul(d, x));
                    }
                }
            }
            let mut digits = vec![0u64; low];
            let mut best: Option<MinWord> = None;
            for idx in 0..span {
                if idx > 0 {
                    let mut t = low - 1;
                    loop {
                        let v = digits[t];
                        for (w, &x) in word.iter_mut().zip(&diff[t][v as usize]) {
                            *w = f.add(*w, x);
                        }
                        digits[t] = (v + 1) % q;
                        if digits[t] != 0 || t == 0 {
                            break;
                        }
                        t -= 1;
                    }
                }
                if hi == 0 && idx == 0 {
                    continue;
                }
                let w = word.iter().filter(|e| !e.is_zero()).count();
                if w > 0 && best.as_ref().is_none_or(|b| w < b.weight) {
                    best = Some(MinWord { weight: w, index: hi * span + idx, word: word.clone() });
                }
            }
            Ok(best)
        })
        .collect();
    let mut best: Option<MinWord> = None;
    for r in results {
        if let Some(c) = r? {
            if best.as_ref().is_none_or(|b| (c.weight, c.index) < (b.weight, b.index)) {
                best = Some(c);
            }
        }
    }
    // rows may be dependent, so every nonzero message can give the zero word
    best.ok_or(Error::ZeroCode)
}

/// Exact minimum distance of a quasi-cyclic code.
pub fn brute_min_distance(code: &QuasiCyclicCode, budget: &OracleBudget) -> Result<usize> {
    Ok(min_weight_word(code, budget)?.weight)
}

/// The first minimum-weight codeword in serialized coordinates.
pub fn min_weight_word(code: &QuasiCyclicCode, budget: &OracleBudget) -> Result<MinWord> {
    if code.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    min_weight_word_of_rows(code.field(), &code.generator_matrix(), code.length(), budget)
}

/// Whether two row sets generate the same submodule of `(F_q[X]/(X^m - 1))^ℓ`.
pub fn module_equal(ring: &PolyRing, ell: usize, m: usize, a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Result<bool> {
    let ca = QuasiCyclicCode::build(ring.field().clone(), ell, m, a.to_vec())?;
    let cb = QuasiCyclicCode::build(ring.field().clone(), ell, m, b.to_vec())?;
    Ok(a.iter().all(|r| cb.is_member(r)) && b.iter().all(|r| ca.is_member(r)))
}

/// A random divisor of `X^m - 1` over `F_q`, as a product of minimal polynomials.
pub fn random_divisor<R: Rng + ?Sized>(field: &Field, m: usize, rng: &mut R) -> Result<Poly> {
    let factors = irreducible_factors(field, m)?;
    let ring = PolyRing::new(field.clone());
    Ok(factors.iter().filter(|_| rng.gen_bool(0.5)).fold(ring.one(), |acc, p| ring.mul(&acc, p)))
}

/// The monic irreducible factors of `X^m - 1`, one per cyclotomic coset.
pub fn irreducible_factors(field: &Field, m: usize) -> Result<Vec<Poly>> {
    let ext = extension_for(field, m as u64)?;
    let alpha = ext.root_of_unity(m as u64)?;
    cyclotomic_cosets(m, field.order())?.iter().map(|c| ext.minimal_polynomial(alpha, c.representative, m)).collect()
}

/// A random quasi-cyclic code: upper-triangular generator with random divisors
/// on the diagonal and random entries above it. With `level` set, only the
/// first `level` diagonal entries differ from `X^m - 1`.
pub fn random_qc_code<R: Rng + ?Sized>(
    field: &Field,
    ell: usize,
    m: usize,
    level: Option<usize>,
    rng: &mut R,
) -> Result<QuasiCyclicCode> {
    let ring = PolyRing::new(field.clone());
    let xm1 = ring.x_pow_minus_one(m);
    let q = field.order();
    let mut rows = Vec::with_capacity(ell);
    for i in 0..ell {
        let mut row = vec![Poly::zero(); ell];
        if level.is_some_and(|l| i >= l) {
            row[i] = xm1.clone();
        } else {
            let mut d = random_divisor(field, m, rng)?;
            if level.is_some() && d == xm1 {
                d = ring.one();
            }
            for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
                if level.is_some_and(|l| j >= l) || rng.gen_bool(0.7) {
                    let r = Poly::from_coeffs((0..m).map(|_| Elem(rng.gen_range(0..q))).collect());
                    *slot = ring.reduce_xm1(&ring.mul(&r, &d), m);
                }
            }
            row[i] = d;
        }
        rows.push(row);
    }
    QuasiCyclicCode::build(field.clone(), ell, m, rows)
}

/// Co-indices for a random product instance: `m_A ≤ m_a_max`, `m_B ≤ m_b_max`,
/// both coprime to `q`, with `ℓ_A m_A` and `ℓ_B m_B` coprime.
pub fn random_coindices<R: Rng + ?Sized>(
    q: u64,
    (ell_a, ell_b): (usize, usize),
    (m_a_max, m_b_max): (usize, usize),
    rng: &mut R,
) -> Result<(usize, usize)> {
    let ok = |m: usize| crate::galois::gcd(m as u64, q) == 1;
    let pairs: Vec<(usize, usize)> = (1..=m_a_max)
        .filter(|&a| ok(a))
        .flat_map(|a| (1..=m_b_max).filter(|&b| ok(b)).map(move |b| (a, b)))
        .filter(|&(a, b)| crate::galois::gcd((ell_a * a) as u64, (ell_b * b) as u64) == 1)
        .collect();
    // prefer non-trivial co-indices when there are any
    let nontrivial: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| a > 1 && b > 1).collect();
    let pool = if nontrivial.is_empty() { pairs } else { nontrivial };
    pool.choose(rng).copied().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no co-indices up to ({m_a_max}, {m_b_max}) make {ell_a}·m_A and {ell_b}·m_B coprime over F_{q}"
        ))
    })
}

/// How a burst sweep covered the pattern space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// Each burst count is enumerated when small enough, otherwise sampled
    /// with the given seed.
    Stratified {
        seed: u64,
    },
}

/// One failed pattern, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepFailure {
    pub positions: Vec<usize>,
    /// Error column per position, `ℓ` entries each.
    pub columns: Vec<Vec<Elem>>,
    pub transmitted: Vec<Poly>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub mode: SweepMode,
    pub radius: usize,
    pub patterns: u64,
    pub successes: u64,
    /// Patterns tested per burst count.
    pub per_count: Vec<u64>,
    /// Up to `TRANSCRIPT_LIMIT` failures in enumeration order.
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn ratio(&self) -> f64 {
        if self.patterns == 0 {
            1.0
        } else {
            self.successes as f64 / self.patterns as f64
        }
    }
}

pub const TRANSCRIPT_LIMIT: usize = 100;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

fn column_from_index(mut idx: u64, ell: usize, q: u64) -> Vec<Elem> {
    (0..ell)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            Elem(d)
        })
        .collect()
}

/// Decodes every burst pattern with at most `radius` erroneous positions and
/// nonzero error columns. Falls back to stratified sampling when the full
/// sweep exceeds the budget.
pub fn exhaustive_burst_sweep(
    setup: &DecoderSetup,
    radius: usize,
    budget: &OracleBudget,
    seed: u64,
) -> Result<SweepReport> {
    let code = setup.code();
    let (m, ell, q) = (code.m(), code.ell(), code.q());
    let cols = (q as u128).pow(ell as u32) - 1;
    let counts: Vec<u128> = (0..=radius).map(|t| binomial(m, t) * cols.pow(t as u32)).collect();
    let total: u128 = counts.iter().sum();
    let exhaustive = total <= budget.max_patterns as u128;
    let per_stratum = (budget.max_patterns / (radius as u64 + 1)).max(1) as u128;
    let mode = if exhaustive { SweepMode::Exhaustive } else { SweepMode::Stratified { seed } };

    let mut jobs: Vec<(Vec<usize>, u64)> = Vec::new();
    let mut per_count = Vec::with_capacity(radius + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..=radius {
        let pats = cols.pow(t as u32);
        if exhaustive || counts[t] <= per_stratum {
            for comb in combinations(m, t) {
                for p in 0..pats as u64 {
                    jobs.push((comb.clone(), p));
                }
            }
            per_count.push(counts[t] as u64);
        } else {
            let all: Vec<usize> = (0..m).collect();
            for _ in 0..per_stratum {
                let mut comb: Vec<usize> = all.choose_multiple(&mut rng, t).copied().collect();
                comb.sort_unstable();
                jobs.push((comb, rng.gen_range(0..pats as u64)));
            }
            per_count.push(per_stratum as u64);
        }
    }

    let results: Vec<Option<SweepFailure>> = jobs
        .par_iter()
        .enumerate()
        .map(|(n, (positions, pat))| {
            let columns: Vec<Vec<Elem>> = {
                let mut rest = *pat;
                positions
                    .iter()
                    .map(|_| {
                        let c = rest % cols as u64;
                        rest /= cols as u64;
                        column_from_index(c + 1, ell, q)
                    })
                    .collect()
            };
            let mut crng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let transmitted = code.random_codeword(&mut crng);
            let ring = code.ring();
            let received: Vec<Poly> = (0..ell)
                .map(|j| {
                    let mut e = vec![Elem::ZERO; m];
                    for (p, col) in positions.iter().zip(&columns) {
                        e[*p] = col[j];
                    }
                    ring.add(&transmitted[j], &Poly::from_coeffs(e))
                })
                .collect();
            let res = setup.decode(&received);
            match (&res.outcome, &res.corrected) {
                (Outcome::Corrected, Some(c)) if *c == transmitted => None,
                _ => Some(SweepFailure {
                    positions: positions.clone(),
                    columns,
                    transmitted,
                    outcome: match res.outcome {
                        Outcome::Corrected => "miscorrected".to_string(),
                        Outcome::Failure(reason) => reason,
                    },
                }),
            }
        })
        .collect();
    let failures: Vec<SweepFailure> = results.iter().flatten().cloned().collect();
    let patterns = jobs.len() as u64;
    Ok(SweepReport {
        mode,
        radius,
        patterns,
        successes: patterns - failures.len() as u64,
        per_count,
        failures: failures.into_iter().take(TRANSCRIPT_LIMIT).collect(),
    })
}
