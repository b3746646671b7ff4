//! Prime-counting laws and the gap conjecture statistics: the π(n) vs
//! n/log n vs li(n) comparison table (Gauss–Encke layout), Legendre's
//! constant drift, the Mertens and Bertrand log-log sums, Chebyshev ϑ,
//! gap histograms with the Cramér ratio and jumping champions, the
//! primorial/h(k) champion bands, Opperman's inequalities, and n²+1 counts.

use crate::primes::{logarithmic_integral, PrimeTable, PrimesError, LI_AT_2};
use std::collections::BTreeMap;
use thiserror::Error;

/// Legendre's empirical constant from π(n) ≈ n/(log n − 1.08366); known to be
/// asymptotically wrong (the true limit of the correction is 1).
pub const LEGENDRE_CONSTANT: f64 = 1.08366;

/// The Cramér ratio (p_{k+1} − p_k)/log²p_k is tracked only from p_k ≥ 11 on:
/// at p = 2, 3, 7 the ratio exceeds 1 trivially because log²p is smaller than
/// the gap itself, which would drown the statistic the conjecture is about.
pub const CRAMER_MIN_PRIME: u64 = 11;

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("n must be >= {min}, got {n}")]
    Domain { n: u64, min: u64 },
    #[error("k_max must be in 1..={1}, got {0}")]
    KMaxDomain(u64, u64),
    #[error("n_max {n_max} needs table bound >= {need}, have {bound}")]
    TableTooSmall { n_max: u64, need: u64, bound: u64 },
    #[error(transparent)]
    Primes(#[from] PrimesError),
}

/// One row of the prime-counting comparison table. Every column derives from
/// n and the table alone, so rows can be recomputed bit-identically.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PntComparisonRow {
    pub n: u64,
    pub pi_n: u64,
    pub n_over_log_n: f64,
    /// Complete logarithmic integral li(n) (the Gauss-letter column), i.e.
    /// ∫₂ⁿ dt/log t + li(2).
    pub li_n: f64,
    pub li_error: f64,
    /// n/(log n − 1.08366), Legendre's formula.
    pub legendre: f64,
    pub legendre_error: f64,
    /// π(n)·log n / n, which the prime number theorem sends to 1.
    pub pnt_ratio: f64,
}

/// Comparison rows at the given checkpoints.
pub fn pnt_table(
    primes: &PrimeTable,
    checkpoints: &[u64],
) -> Result<Vec<PntComparisonRow>, AsymptoticsError> {
    let mut rows = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        let pi_n = primes.prime_count(n)?;
        let nf = n as f64;
        let ln = nf.ln();
        let li_n = logarithmic_integral(nf)? + LI_AT_2;
        let legendre = nf / (ln - LEGENDRE_CONSTANT);
        rows.push(PntComparisonRow {
            n,
            pi_n,
            n_over_log_n: nf / ln,
            li_n,
            li_error: li_n - pi_n as f64,
            legendre,
            legendre_error: legendre - pi_n as f64,
            pnt_ratio: pi_n as f64 * ln / nf,
        });
    }
    Ok(rows)
}

/// A(n) := n/π(n) − log n, the empirical correction in Legendre's formula
/// (compare |A(n)| against 1.08366; it drifts toward 1 as n grows).
pub fn legendre_a(primes: &PrimeTable, n: u64) -> Result<f64, AsymptoticsError> {
    if n < 10 {
        return Err(AsymptoticsError::Domain { n, min: 10 });
    }
    let pi_n = primes.prime_count(n)?;
    Ok(n as f64 / pi_n as f64 - (n as f64).ln())
}

/// Σ_{p ≤ n} 1/p, which grows like log log n (offset → Mertens' 0.2615…).
pub fn mertens_sum(primes: &PrimeTable, n: u64) -> Result<f64, AsymptoticsError> {
    if n < 2 {
        return Err(AsymptoticsError::Domain { n, min: 2 });
    }
    if n > primes.bound() {
        return Err(PrimesError::BeyondTable {
            n,
            bound: primes.bound(),
        }
        .into());
    }
    Ok(primes.range(2, n).map(|p| 1.0 / p as f64).sum())
}

/// Σ_{m=2}^{n} 1/(m log m), the Bertrand series — same log log n growth,
/// exhibiting the heuristic p_m ~ m log m.
pub fn bertrand_series(n: u64) -> Result<f64, AsymptoticsError> {
    if n < 2 {
        return Err(AsymptoticsError::Domain { n, min: 2 });
    }
    let mut sum = 0.0f64;
    for m in 2..=n {
        let mf = m as f64;
        sum += 1.0 / (mf * mf.ln());
    }
    Ok(sum)
}

/// Chebyshev ϑ(x) = Σ_{p ≤ x} log p; ϑ(x) ~ x restates the prime number
/// theorem, and ϑ(x) ≤ π(x) log x holds term by term.
pub fn chebyshev_theta(primes: &PrimeTable, x: u64) -> Result<f64, AsymptoticsError> {
    if x > primes.bound() {
        return Err(PrimesError::BeyondTable {
            n: x,
            bound: primes.bound(),
        }
        .into());
    }
    Ok(primes.range(2, x).map(|p| (p as f64).ln()).sum())
}

/// Gap census over consecutive primes up to a bound.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GapStatistics {
    pub bound: u64,
    /// gap → occurrence count; Σ counts = π(bound) − 1. Every gap is even
    /// except the single gap 1 between 2 and 3.
    pub histogram: BTreeMap<u64, u64>,
    /// Occurrences of gap 2 (twin primes).
    pub twin_count: u64,
    /// Running max of (p_{k+1} − p_k)/log²p_k over p_k ≥ [`CRAMER_MIN_PRIME`];
    /// Cramér conjectured the limsup is 1.
    pub cramer_max: f64,
    pub cramer_argmax: Option<u64>,
    /// Most frequent gap; ties break toward the smaller gap.
    pub champion_gap: u64,
}

/// Full gap histogram with twin count, running Cramér maximum, and the
/// champion (most frequent) gap.
pub fn gap_statistics(primes: &PrimeTable, bound: u64) -> Result<GapStatistics, AsymptoticsError> {
    if bound < 5 {
        return Err(AsymptoticsError::Domain { n: bound, min: 5 });
    }
    if bound > primes.bound() {
        return Err(PrimesError::BeyondTable {
            n: bound,
            bound: primes.bound(),
        }
        .into());
    }
    let mut histogram = BTreeMap::new();
    let mut cramer_max = 0.0f64;
    let mut cramer_argmax = None;
    let mut prev: Option<u64> = None;
    for p in primes.range(2, bound) {
        if let Some(q) = prev {
            let gap = p - q;
            *histogram.entry(gap).or_insert(0u64) += 1;
            if q >= CRAMER_MIN_PRIME {
                let lq = (q as f64).ln();
                let ratio = gap as f64 / (lq * lq);
                if ratio > cramer_max {
                    cramer_max = ratio;
                    cramer_argmax = Some(q);
                }
            }
        }
        prev = Some(p);
    }
    let twin_count = histogram.get(&2).copied().unwrap_or(0);
    let champion_gap = histogram
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&g, _)| g)
        .unwrap_or(0);
    Ok(GapStatistics {
        bound,
        histogram,
        twin_count,
        cramer_max,
        cramer_argmax,
        champion_gap,
    })
}

/// One champion-band row: the primorial E(k) = 2·3·…·p_k and the band
/// threshold h(k), both as log₁₀ magnitudes (h(5) ~ 10^8656 has no direct
/// float representation).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GapBand {
    pub k: u64,
    /// E(k) exactly, while it fits 64 bits (k ≤ 15).
    pub primorial: Option<u64>,
    pub log10_primorial: f64,
    /// log₁₀ h(k) = E(k−1)(p_k − 1) / (ln((p_k−1)/(p_k−2))·ln 10); h(1), h(2)
    /// have no defined band start (p_{k}−2 = 0 or log of 1), reported as None.
    pub log10_h: Option<f64>,
}

/// Primorials and conjectured jumping-champion band thresholds for
/// k = 1..=k_max. Exact integer primorials are used up to k = 25 (u128);
/// beyond that the inputs themselves leave the exactly-representable range.
pub fn gap_champion_bands(k_max: u64) -> Result<Vec<GapBand>, AsymptoticsError> {
    const K_CAP: u64 = 25;
    if k_max == 0 || k_max > K_CAP {
        return Err(AsymptoticsError::KMaxDomain(k_max, K_CAP));
    }
    const SMALL_PRIMES: [u64; 25] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ];
    let mut rows = Vec::new();
    let mut primorial: u128 = 1;
    for k in 1..=k_max {
        let pk = SMALL_PRIMES[(k - 1) as usize];
        let prev_primorial = primorial;
        primorial *= pk as u128;
        let log10_h = if pk > 3 {
            let num = prev_primorial as f64 * (pk - 1) as f64;
            let den = (((pk - 1) as f64) / ((pk - 2) as f64)).ln() * std::f64::consts::LN_10;
            Some(num / den)
        } else {
            None
        };
        rows.push(GapBand {
            k,
            primorial: u64::try_from(primorial).ok(),
            log10_primorial: (primorial as f64).log10(),
            log10_h,
        });
    }
    Ok(rows)
}

/// One Opperman violation: π(n²+n) > π(n²) > π(n²−n) failed at n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OppermanViolation {
    pub n: u64,
    pub pi_low: u64,
    pub pi_mid: u64,
    pub pi_high: u64,
}

/// Checks π(n²+n) > π(n²) > π(n²−n) for 2 ≤ n ≤ n_max; returns the
/// violations (expected none).
pub fn opperman_check(
    primes: &PrimeTable,
    n_max: u64,
) -> Result<Vec<OppermanViolation>, AsymptoticsError> {
    if n_max < 2 {
        return Err(AsymptoticsError::Domain { n: n_max, min: 2 });
    }
    let need = n_max * n_max + n_max;
    if need > primes.bound() {
        return Err(AsymptoticsError::TableTooSmall {
            n_max,
            need,
            bound: primes.bound(),
        });
    }
    let mut violations = Vec::new();
    for n in 2..=n_max {
        let sq = n * n;
        let pi_low = primes.prime_count(sq - n)?;
        let pi_mid = primes.prime_count(sq)?;
        let pi_high = primes.prime_count(sq + n)?;
        if !(pi_high > pi_mid && pi_mid > pi_low) {
            violations.push(OppermanViolation {
                n,
                pi_low,
                pi_mid,
                pi_high,
            });
        }
    }
    Ok(violations)
}

/// Counts n ≤ n_max with n² + 1 prime.
pub fn quadratic_prime_count(primes: &PrimeTable, n_max: u64) -> Result<u64, AsymptoticsError> {
    if n_max < 1 {
        return Err(AsymptoticsError::Domain { n: n_max, min: 1 });
    }
    let need = n_max * n_max + 1;
    if need > primes.bound() {
        return Err(AsymptoticsError::TableTooSmall {
            n_max,
            need,
            bound: primes.bound(),
        });
    }
    Ok((1..=n_max).filter(|&n| primes.is_prime(n * n + 1)).count() as u64)
}
