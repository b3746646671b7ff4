//! Collatz (3x+1) trajectories, interval verification by the stopping-time
//! criterion, the pooled 3/4 odd-step heuristic, and the two empirical
//! scaling laws (excursion ~ n², stopping time ~ log n).
//!
//! Iterates are carried in 128 bits: excursions behave like n², so 64 bits
//! overflow well inside the desk range (seed 63728127 < 10^8 already peaks at
//! ~2.2·10^21). Overflow is a reported status, never a wrap.

use thiserror::Error;

/// Default iteration budget; orders of magnitude above the log n expectation,
/// so exhausting it genuinely flags an anomaly.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum CollatzError {
    #[error("seed must be >= 1, got {0}")]
    SeedDomain(u64),
    #[error("step budget must be >= 1")]
    BudgetDomain,
    #[error("interval requires 2 <= lo <= hi, got [{lo}, {hi}]")]
    IntervalDomain { lo: u64, hi: u64 },
    #[error("3n+1 overflows 128 bits at n = {0}")]
    Overflow(u128),
    #[error("seed {seed} did not drop within the budget of {budget} steps (counterexample candidate)")]
    BudgetExhausted { seed: u64, budget: u64 },
    #[error("sample [{lo}, {hi}] holds {found} odd seeds, need at least {need}")]
    SampleTooSmall {
        lo: u64,
        hi: u64,
        found: u64,
        need: u64,
    },
    #[error("scaling fit needs >= {need_records} records spanning >= 3 decades (got {records} records, span ratio {span:.1})")]
    InsufficientSpan {
        records: usize,
        span: f64,
        need_records: usize,
    },
}

/// One 3x+1 step: n/2 if n is even, 3n+1 if n is odd.
pub fn collatz_step(n: u128) -> Result<u128, CollatzError> {
    if n == 0 {
        return Err(CollatzError::SeedDomain(0));
    }
    if n % 2 == 0 {
        Ok(n / 2)
    } else {
        n.checked_mul(3)
            .and_then(|m| m.checked_add(1))
            .ok_or(CollatzError::Overflow(n))
    }
}

/// Per-seed trajectory statistics.
///
/// `odd_ratio_log_mean` is the mean of log(n_{k+1}/n_k) over *all* consecutive
/// odd iterates of the full trajectory, the terminal 1 included (so seed 3,
/// with odd iterates 3, 5, 1, averages log(5/3) and log(1/5)). That is the
/// convention under which the pooled geometric mean lands at the heuristic
/// 3/4.
#[derive(Debug, Clone, PartialEq)]
pub struct CollatzRecord {
    pub seed: u64,
    /// Iterations until the iterate equals 1 (6 → 3 → … → 1 is 8 steps).
    pub total_steps: u64,
    /// Least k with iterate_k < seed (0 for seed 1).
    pub stopping_time: u64,
    /// Maximum value attained, the seed included.
    pub excursion: u128,
    pub odd_ratio_log_mean: f64,
    /// Number of consecutive-odd pairs behind `odd_ratio_log_mean`.
    pub odd_pairs: u64,
}

/// Runs a full trajectory to 1, recording the statistics.
pub fn trajectory(seed: u64, step_budget: u64) -> Result<CollatzRecord, CollatzError> {
    if seed == 0 {
        return Err(CollatzError::SeedDomain(seed));
    }
    if step_budget == 0 {
        return Err(CollatzError::BudgetDomain);
    }
    let mut n = seed as u128;
    let mut steps: u64 = 0;
    let mut stopping: Option<u64> = if seed == 1 { Some(0) } else { None };
    let mut excursion = n;
    let mut prev_odd: Option<u128> = None;
    let mut log_sum = 0.0f64;
    let mut pairs: u64 = 0;
    loop {
        if n % 2 == 1 {
            if let Some(p) = prev_odd {
                log_sum += (n as f64 / p as f64).ln();
                pairs += 1;
            }
            prev_odd = Some(n);
            if n == 1 {
                break;
            }
        }
        if steps == step_budget {
            return Err(CollatzError::BudgetExhausted {
                seed,
                budget: step_budget,
            });
        }
        n = collatz_step(n)?;
        steps += 1;
        if n > excursion {
            excursion = n;
        }
        if stopping.is_none() && n < seed as u128 {
            stopping = Some(steps);
        }
    }
    Ok(CollatzRecord {
        seed,
        total_steps: steps,
        stopping_time: stopping.unwrap_or(steps),
        excursion,
        odd_ratio_log_mean: if pairs > 0 {
            log_sum / pairs as f64
        } else {
            0.0
        },
        odd_pairs: pairs,
    })
}

/// Raw trajectory values, seed first and 1 last.
pub fn trajectory_values(seed: u64, step_budget: u64) -> Result<Vec<u128>, CollatzError> {
    if seed == 0 {
        return Err(CollatzError::SeedDomain(seed));
    }
    let mut out = vec![seed as u128];
    let mut n = seed as u128;
    let mut steps = 0;
    while n != 1 {
        if steps == step_budget {
            return Err(CollatzError::BudgetExhausted {
                seed,
                budget: step_budget,
            });
        }
        n = collatz_step(n)?;
        steps += 1;
        out.push(n);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyStatus {
    Verified,
    CounterexampleCandidate,
    Overflow,
}

/// Outcome of verifying an interval by the stopping-time criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CollatzVerificationResult {
    pub lo: u64,
    pub hi: u64,
    pub status: VerifyStatus,
    pub worst_stopping_time: u64,
    pub worst_stopping_seed: u64,
    pub worst_excursion: u128,
    pub worst_excursion_seed: u64,
    /// Seed at which verification stopped, for non-verified statuses.
    pub witness: Option<u64>,
}

/// Verifies every seed in `[lo, hi]` by iterating only until some iterate
/// drops below the seed (the caller guarantees everything below `lo` is
/// already verified — the runner's ascending checkpoint order enforces this).
///
/// Even seeds drop in one step and seeds ≡ 1 (mod 4) in three
/// ((3n+1)/4 < n), so only seeds ≡ 3 (mod 4) are actually iterated; the
/// short-circuits still contribute their exact worst-case statistics, and the
/// brute-force equivalence test below guards the refinement.
pub fn verify_interval(
    lo: u64,
    hi: u64,
    step_budget: u64,
) -> Result<CollatzVerificationResult, CollatzError> {
    if lo < 2 || lo > hi {
        return Err(CollatzError::IntervalDomain { lo, hi });
    }
    if step_budget == 0 {
        return Err(CollatzError::BudgetDomain);
    }
    let mut result = CollatzVerificationResult {
        lo,
        hi,
        status: VerifyStatus::Verified,
        worst_stopping_time: 0,
        worst_stopping_seed: 0,
        worst_excursion: 0,
        worst_excursion_seed: 0,
        witness: None,
    };
    fn record(seed: u64, stopping: u64, excursion: u128, r: &mut CollatzVerificationResult) {
        if stopping > r.worst_stopping_time {
            r.worst_stopping_time = stopping;
            r.worst_stopping_seed = seed;
        }
        if excursion > r.worst_excursion {
            r.worst_excursion = excursion;
            r.worst_excursion_seed = seed;
        }
    }
    for seed in lo..=hi {
        match seed % 4 {
            0 | 2 => record(seed, 1, seed as u128, &mut result),
            1 => record(seed, 3, 3 * seed as u128 + 1, &mut result),
            _ => match descend_stats(seed, step_budget) {
                Ok((stopping, excursion)) => record(seed, stopping, excursion, &mut result),
                Err(CollatzError::BudgetExhausted { .. }) => {
                    result.status = VerifyStatus::CounterexampleCandidate;
                    result.witness = Some(seed);
                    return Ok(result);
                }
                Err(CollatzError::Overflow(_)) => {
                    result.status = VerifyStatus::Overflow;
                    result.witness = Some(seed);
                    return Ok(result);
                }
                Err(e) => return Err(e),
            },
        }
    }
    Ok(result)
}

/// Stopping time and truncated excursion for one seed, 64-bit fast path with
/// promotion to 128 bits when 3n+1 would not fit.
fn descend_stats(seed: u64, step_budget: u64) -> Result<(u64, u128), CollatzError> {
    const PROMOTE: u64 = (u64::MAX - 1) / 3;
    let mut n = seed;
    let mut peak: u128 = seed as u128;
    let mut steps: u64 = 0;
    loop {
        if steps == step_budget {
            return Err(CollatzError::BudgetExhausted {
                seed,
                budget: step_budget,
            });
        }
        if n % 2 == 0 {
            n /= 2;
        } else if n <= PROMOTE {
            n = 3 * n + 1;
            if (n as u128) > peak {
                peak = n as u128;
            }
        } else {
            // Wide excursion: continue in 128 bits until back under 2^64.
            let mut w = n as u128;
            loop {
                if steps == step_budget {
                    return Err(CollatzError::BudgetExhausted {
                        seed,
                        budget: step_budget,
                    });
                }
                w = collatz_step(w)?;
                steps += 1;
                if w > peak {
                    peak = w;
                }
                if w <= u64::MAX as u128 {
                    break;
                }
            }
            n = w as u64;
            if n < seed {
                return Ok((steps, peak));
            }
            continue;
        }
        steps += 1;
        if n < seed {
            return Ok((steps, peak));
        }
    }
}

/// Pooled geometric-mean ratio between consecutive odd iterates over the full
/// trajectories of all odd seeds in `[sample_lo, sample_hi]`; the heuristic
/// expectation is 3/4.
pub fn odd_ratio_estimate(sample_lo: u64, sample_hi: u64) -> Result<f64, CollatzError> {
    const MIN_ODD_SEEDS: u64 = 1_000;
    let lo = sample_lo.max(1);
    let odd_count = if sample_hi < lo {
        0
    } else {
        (sample_hi + 1) / 2 - lo / 2
    };
    if odd_count < MIN_ODD_SEEDS {
        return Err(CollatzError::SampleTooSmall {
            lo: sample_lo,
            hi: sample_hi,
            found: odd_count,
            need: MIN_ODD_SEEDS,
        });
    }
    let mut log_sum = 0.0f64;
    let mut pairs: u64 = 0;
    let mut seed = if lo % 2 == 1 { lo } else { lo + 1 };
    while seed <= sample_hi {
        let rec = trajectory(seed, DEFAULT_STEP_BUDGET)?;
        log_sum += rec.odd_ratio_log_mean * rec.odd_pairs as f64;
        pairs += rec.odd_pairs;
        seed += 2;
    }
    Ok((log_sum / pairs as f64).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingLaw {
    /// log(block max excursion) against log(seed); expected slope ≈ 2.
    ExcursionVsN2,
    /// Block max stopping time against log(seed).
    StoppingVsLogN,
}

/// Least-squares fit over dyadic seed blocks. Descriptive only.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingFit {
    pub law: ScalingLaw,
    pub slope: f64,
    pub intercept: f64,
    pub residual_rms: f64,
    pub blocks: usize,
}

/// Fits one of the two observed laws on a record collection.
///
/// Records are grouped into dyadic blocks [2^k, 2^{k+1}); each block
/// contributes the point (log seed*, y*) where seed* attains the block
/// maximum of the fitted quantity (smallest such seed on ties).
pub fn scaling_fit(records: &[CollatzRecord], law: ScalingLaw) -> Result<ScalingFit, CollatzError> {
    const NEED_RECORDS: usize = 100;
    let (min_seed, max_seed) = records.iter().fold((u64::MAX, 0u64), |(lo, hi), r| {
        (lo.min(r.seed), hi.max(r.seed))
    });
    let span = if records.is_empty() {
        0.0
    } else {
        max_seed as f64 / min_seed as f64
    };
    if records.len() < NEED_RECORDS || span < 1_000.0 {
        return Err(CollatzError::InsufficientSpan {
            records: records.len(),
            span,
            need_records: NEED_RECORDS,
        });
    }
    // Block index = floor(log2 seed); per block keep (best y, smallest argmax seed).
    let mut blocks: std::collections::BTreeMap<u32, (f64, u64)> = std::collections::BTreeMap::new();
    for r in records {
        let y = match law {
            ScalingLaw::ExcursionVsN2 => (r.excursion as f64).ln(),
            ScalingLaw::StoppingVsLogN => r.stopping_time as f64,
        };
        let k = 63 - r.seed.leading_zeros();
        blocks
            .entry(k)
            .and_modify(|(best, seed)| {
                if y > *best || (y == *best && r.seed < *seed) {
                    *best = y;
                    *seed = r.seed;
                }
            })
            .or_insert((y, r.seed));
    }
    let pts: Vec<(f64, f64)> = blocks
        .values()
        .map(|&(y, seed)| ((seed as f64).ln(), y))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let residual_rms = (pts
        .iter()
        .map(|&(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(ScalingFit {
        law,
        slope,
        intercept,
        residual_rms,
        blocks: pts.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_rule() {
        assert_eq!(collatz_step(6).unwrap(), 3);
        assert_eq!(collatz_step(1).unwrap(), 4); // the 1 → 4 → 2 → 1 cycle
        assert_eq!(collatz_step(27).unwrap(), 82);
        assert!(matches!(collatz_step(0), Err(CollatzError::SeedDomain(0))));
        let huge = u128::MAX / 3 * 2 + 1; // odd, 3n+1 overflows
        assert!(matches!(collatz_step(huge), Err(CollatzError::Overflow(_))));
    }

    #[test]
    fn trajectory_fixtures() {
        // 6, 3, 10, 5, 16, 8, 4, 2, 1
        let r6 = trajectory(6, 1000).unwrap();
        assert_eq!(r6.total_steps, 8);
        assert_eq!(r6.excursion, 16);
        assert_eq!(r6.stopping_time, 1);

        let r11 = trajectory(11, 1000).unwrap();
        assert_eq!(r11.total_steps, 14);

        let r27 = trajectory(27, 1000).unwrap();
        assert_eq!(r27.total_steps, 111);
        assert_eq!(r27.excursion, 9232);

        let r1 = trajectory(1, 10).unwrap();
        assert_eq!(r1.total_steps, 0);
        assert_eq!(r1.excursion, 1);
    }

    #[test]
    fn trajectory_27_intermediate_climbs() {
        // Climbs to 4858, dips to 911, then peaks at 9232.
        let vals = trajectory_values(27, 1000).unwrap();
        let i4858 = vals.iter().position(|&v| v == 4858).unwrap();
        let i911 = vals.iter().position(|&v| v == 911).unwrap();
        let i9232 = vals.iter().position(|&v| v == 9232).unwrap();
        assert!(i4858 < i911 && i911 < i9232);
        assert_eq!(vals.len() as u64 - 1, 111);
    }

    #[test]
    fn trajectory_budget_exhaustion_is_loud() {
        match trajectory(27, 10) {
            Err(CollatzError::BudgetExhausted {
                seed: 27,
                budget: 10,
            }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn record_resimulation_reproduces_fields() {
        for seed in [2u64, 3, 7, 27, 97, 703, 26623] {
            let a = trajectory(seed, DEFAULT_STEP_BUDGET).unwrap();
            let b = trajectory(seed, DEFAULT_STEP_BUDGET).unwrap();
            assert_eq!(a, b);
            assert!(a.excursion >= seed as u128);
            assert!(a.stopping_time <= a.total_steps);
        }
    }

    #[test]
    fn odd_ratio_convention_seed_3() {
        // Odd iterates of 3 are 3, 5, 1: pairs (3,5) and (5,1).
        let r = trajectory(3, 100).unwrap();
        assert_eq!(r.odd_pairs, 2);
        let want = ((5.0f64 / 3.0).ln() + (1.0f64 / 5.0).ln()) / 2.0;
        assert!((r.odd_ratio_log_mean - want).abs() < 1e-12);
    }

    #[test]
    fn verify_small_intervals() {
        let r = verify_interval(2, 100, 10_000).unwrap();
        assert_eq!(r.status, VerifyStatus::Verified);
        assert_eq!(r.worst_excursion, 9232);
        assert_eq!(r.worst_excursion_seed, 27);

        let r2 = verify_interval(2, 2, 10).unwrap();
        assert_eq!(r2.status, VerifyStatus::Verified);
        assert_eq!(r2.worst_stopping_time, 1);
    }

    #[test]
    fn verify_budget_flags_witness() {
        // Seed 3 needs 6 steps to drop below itself; a budget of 5 flags it.
        let r = verify_interval(2, 100, 5).unwrap();
        assert_eq!(r.status, VerifyStatus::CounterexampleCandidate);
        assert_eq!(r.witness, Some(3));
    }

    #[test]
    fn verify_interval_domain_errors() {
        assert!(verify_interval(1, 10, 100).is_err());
        assert!(verify_interval(10, 2, 100).is_err());
    }

    /// Full-descent oracle: run every seed all the way to an iterate < lo
    /// (or to 1), ignoring the stopping-time refinement.
    fn verify_full_descent(lo: u64, hi: u64, budget: u64) -> VerifyStatus {
        for seed in lo..=hi {
            let mut n = seed as u128;
            let mut steps = 0u64;
            while n >= lo as u128 && n != 1 {
                n = match collatz_step(n) {
                    Ok(v) => v,
                    Err(_) => return VerifyStatus::Overflow,
                };
                steps += 1;
                if steps > budget {
                    return VerifyStatus::CounterexampleCandidate;
                }
            }
        }
        VerifyStatus::Verified
    }

    #[test]
    fn stopping_time_agrees_with_full_descent_to_1e5() {
        let fast = verify_interval(2, 100_000, 100_000).unwrap();
        let slow = verify_full_descent(2, 100_000, 100_000);
        assert_eq!(fast.status, slow);
        assert_eq!(fast.status, VerifyStatus::Verified);
        // Frozen oracle values for the worst statistics on [2, 1e5].
        assert_eq!(fast.worst_stopping_time, 220);
        assert_eq!(fast.worst_stopping_seed, 35_655);
        assert_eq!(fast.worst_excursion, 1_570_824_736);
        assert_eq!(fast.worst_excursion_seed, 77_671);
    }

    #[test]
    fn verify_matches_plain_simulation_spot() {
        // The short-circuit classes must report the same stopping time and
        // truncated excursion a plain simulation finds.
        for seed in 2u64..=2_000 {
            let r = verify_interval(seed, seed, 10_000).unwrap();
            let mut n = seed as u128;
            let mut steps = 0;
            let mut peak = n;
            while n >= seed as u128 {
                n = collatz_step(n).unwrap();
                steps += 1;
                peak = peak.max(n);
            }
            assert_eq!(r.worst_stopping_time, steps, "seed {seed}");
            assert_eq!(r.worst_excursion, peak, "seed {seed}");
        }
    }

    #[test]
    fn odd_ratio_sample_size_guard() {
        assert!(matches!(
            odd_ratio_estimate(3, 3),
            Err(CollatzError::SampleTooSmall { .. })
        ));
    }

    #[test]
    fn odd_ratio_pooled_near_three_quarters() {
        let v = odd_ratio_estimate(10_001, 100_000).unwrap();
        assert!((v - 0.75).abs() < 0.02, "pooled ratio {v}");
    }

    #[test]
    fn scaling_fit_synthetic_exact() {
        // excursion = seed² exactly → slope 2.
        let recs: Vec<CollatzRecord> = (2u64..=5000)
            .map(|s| CollatzRecord {
                seed: s,
                total_steps: 0,
                stopping_time: (3.0 * (s as f64).ln()).round() as u64,
                excursion: (s as u128) * (s as u128),
                odd_ratio_log_mean: 0.0,
                odd_pairs: 0,
            })
            .collect();
        let fit = scaling_fit(&recs, ScalingLaw::ExcursionVsN2).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-9, "slope {}", fit.slope);
        assert!(fit.residual_rms < 1e-9);

        // stopping = 3 log seed (rounded) → slope ≈ 3.
        let fit2 = scaling_fit(&recs, ScalingLaw::StoppingVsLogN).unwrap();
        assert!((fit2.slope - 3.0).abs() < 0.1, "slope {}", fit2.slope);
    }

    #[test]
    fn scaling_fit_span_guard() {
        let recs: Vec<CollatzRecord> = (1000u64..1200)
            .map(|s| CollatzRecord {
                seed: s,
                total_steps: 1,
                stopping_time: 1,
                excursion: s as u128,
                odd_ratio_log_mean: 0.0,
                odd_pairs: 0,
            })
            .collect();
        assert!(matches!(
            scaling_fit(&recs, ScalingLaw::ExcursionVsN2),
            Err(CollatzError::InsufficientSpan { .. })
        ));
    }

    #[test]
    fn scaling_fit_real_records_to_1e5() {
        // Real records up to 1e5 (the acceptance suite runs the 1e6 sweep).
        let recs: Vec<CollatzRecord> = (2u64..=100_000)
            .map(|s| trajectory(s, DEFAULT_STEP_BUDGET).unwrap())
            .collect();
        let fit = scaling_fit(&recs, ScalingLaw::ExcursionVsN2).unwrap();
        assert!(
            fit.slope > 1.5 && fit.slope < 2.5,
            "excursion slope {}",
            fit.slope
        );
    }
}
