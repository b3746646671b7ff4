//! Exact integer partition counts p(n) via Euler's pentagonal-number
//! recurrence, the Hardy–Ramanujan principal term, and the crude
//! e^{π√(2n/3)}/(4√3 n) asymptotic.
//!
//! The recurrence p(n) = Σ_k (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)]
//! is the standard O(n^{3/2}) exact oracle; values grow like e^{π√(2n/3)}, so
//! they are held as big integers.

use num_bigint::BigUint;
use thiserror::Error;

/// Cap on exact computations (p(10^5) has 347 digits; the table to the cap
/// costs a few seconds and ~30 MB).
pub const MAX_EXACT_N: usize = 100_000;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("n must be <= {MAX_EXACT_N} for exact partition counts, got {0}")]
    BeyondCap(usize),
    #[error("n must be >= 1, got 0")]
    ZeroDomain,
}

/// Read-only table of p(0)..=p(max_n), built once (single writer) and then
/// shared freely across readers.
pub struct PartitionTable {
    values: Vec<BigUint>,
}

impl PartitionTable {
    /// Builds the prefix table up to `max_n` by the pentagonal recurrence.
    pub fn up_to(max_n: usize) -> Result<PartitionTable, PartitionError> {
        if max_n > MAX_EXACT_N {
            return Err(PartitionError::BeyondCap(max_n));
        }
        let mut values: Vec<BigUint> = Vec::with_capacity(max_n + 1);
        values.push(BigUint::from(1u32)); // p(0) = 1, the empty partition
        for i in 1..=max_n {
            let mut acc = BigUint::ZERO;
            let mut neg = BigUint::ZERO;
            let mut k: usize = 1;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let positive = k % 2 == 1;
                if positive {
                    acc += &values[i - g1];
                } else {
                    neg += &values[i - g1];
                }
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    if positive {
                        acc += &values[i - g2];
                    } else {
                        neg += &values[i - g2];
                    }
                }
                k += 1;
            }
            values.push(acc - neg); // p(n) > 0, so the subtraction is safe
        }
        Ok(PartitionTable { values })
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }
}

/// p(n) exactly. Builds the prefix table behind the scenes; use
/// [`PartitionTable::up_to`] when many values are needed.
pub fn partition_exact(n: usize) -> Result<BigUint, PartitionError> {
    Ok(PartitionTable::up_to(n)?.values.pop().unwrap())
}

/// Number of ordered compositions of n, which is exactly 2^{n−1}.
pub fn ordered_compositions(n: u64) -> Result<BigUint, PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroDomain);
    }
    Ok(BigUint::from(1u32) << (n - 1))
}

/// Hardy–Ramanujan principal term: with C = 2π/√6 and λ = √(n − 1/24),
///
/// (1/(2π√2)) · d/dn [ e^{Cλ}/λ ] = (1/(2π√2)) · e^{Cλ}(Cλ − 1)/(2λ³),
///
/// the derivative carried out analytically (the finite-difference agreement
/// is pinned by a test).
pub fn hardy_ramanujan_principal(n: u64) -> Result<f64, PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroDomain);
    }
    let c = 2.0 * std::f64::consts::PI / 6.0f64.sqrt();
    let lambda = (n as f64 - 1.0 / 24.0).sqrt();
    let front = 1.0 / (2.0 * std::f64::consts::PI * 2.0f64.sqrt());
    Ok(front * (c * lambda).exp() * (c * lambda - 1.0) / (2.0 * lambda.powi(3)))
}

/// The crude asymptotic e^{π√(2n/3)}/(4√3·n); the ratio p(n)/crude(n) drifts
/// toward 1 slowly from below.
pub fn crude_asymptotic(n: u64) -> Result<f64, PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroDomain);
    }
    let nf = n as f64;
    Ok((std::f64::consts::PI * (2.0 * nf / 3.0).sqrt()).exp() / (4.0 * 3.0f64.sqrt() * nf))
}

/// Exact and asymptotic values side by side, for the comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionValue {
    pub n: u64,
    pub exact: BigUint,
    pub principal_term: f64,
    pub crude: f64,
}

/// Converts a big partition count to f64 (loses precision past 2^53; only
/// used for ratio columns).
pub fn biguint_to_f64(v: &BigUint) -> f64 {
    let digits = v.to_string();
    digits.parse::<f64>().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_fixtures() {
        assert_eq!(partition_exact(0).unwrap(), BigUint::from(1u32));
        assert_eq!(partition_exact(5).unwrap(), BigUint::from(7u32));
        assert_eq!(
            partition_exact(200).unwrap(),
            BigUint::from(3_972_999_029_388u64)
        );
        assert!(matches!(
            partition_exact(MAX_EXACT_N + 1),
            Err(PartitionError::BeyondCap(_))
        ));
    }

    /// Exhaustive enumeration oracle: count partitions of n by walking every
    /// partition with nonincreasing parts. Exponential output size, so only
    /// viable for small n — which is exactly its job.
    fn enumerate_partitions(n: usize) -> u64 {
        fn walk(remaining: usize, max_part: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut count = 0;
            let top = remaining.min(max_part);
            for part in (1..=top).rev() {
                count += walk(remaining - part, part);
            }
            count
        }
        walk(n, n)
    }

    #[test]
    fn recurrence_matches_enumeration_to_60() {
        let table = PartitionTable::up_to(60).unwrap();
        for n in 0..=60usize {
            let want = enumerate_partitions(n);
            assert_eq!(table.get(n), &BigUint::from(want), "p({n})");
        }
    }

    #[test]
    fn partition_counts_nondecreasing() {
        let table = PartitionTable::up_to(300).unwrap();
        for n in 1..=300 {
            assert!(table.get(n) >= table.get(n - 1));
        }
    }

    #[test]
    fn compositions_fixtures() {
        assert_eq!(ordered_compositions(3).unwrap(), BigUint::from(4u32));
        assert_eq!(ordered_compositions(1).unwrap(), BigUint::from(1u32));
        assert_eq!(ordered_compositions(10).unwrap(), BigUint::from(512u32));
        assert!(ordered_compositions(0).is_err());
    }

    #[test]
    fn principal_term_at_200() {
        // Hardy's first line: 3 972 998 993 185.896.
        let v = hardy_ramanujan_principal(200).unwrap();
        assert!((v - 3_972_998_993_185.896).abs() < 0.5, "got {v}");
        // Positive at n = 1 (single-term asymptotics are crude down there).
        assert!(hardy_ramanujan_principal(1).unwrap() > 0.0);
    }

    #[test]
    fn principal_term_matches_finite_difference() {
        // Central difference of e^{Cλ}/λ with step 1e-3, relative 1e-6.
        let c = 2.0 * std::f64::consts::PI / 6.0f64.sqrt();
        let f = |n: f64| {
            let lambda = (n - 1.0 / 24.0).sqrt();
            (c * lambda).exp() / lambda
        };
        let front = 1.0 / (2.0 * std::f64::consts::PI * 2.0f64.sqrt());
        for n in [50u64, 200, 1_000] {
            let h = 1e-3;
            let fd = front * (f(n as f64 + h) - f(n as f64 - h)) / (2.0 * h);
            let analytic = hardy_ramanujan_principal(n).unwrap();
            assert!(
                ((fd - analytic) / analytic).abs() < 1e-6,
                "n = {n}: fd {fd} vs analytic {analytic}"
            );
        }
    }

    #[test]
    fn hardy_relative_gap_reproduced() {
        // First term over true value ≈ 1 − 9.1e-9, Hardy's own gap.
        let exact = biguint_to_f64(&partition_exact(200).unwrap());
        let ratio = hardy_ramanujan_principal(200).unwrap() / exact;
        let hardy_ratio = 3_972_998_993_185.896 / 3_972_999_029_388.0;
        assert!(ratio / hardy_ratio > 0.99999 && ratio / hardy_ratio < 1.00001);
    }

    #[test]
    fn crude_fixtures() {
        // Oracle: crude(1) = e^{π√(2/3)}/(4√3) = 1.8766704.
        assert!((crude_asymptotic(1).unwrap() - 1.8766704).abs() < 1e-6);
        // Oracle: crude(200) = 4100251432187.8, so p/crude = 0.96896 (the
        // single-term formula is 3.2% high at n = 200).
        let crude200 = crude_asymptotic(200).unwrap();
        assert!((crude200 - 4_100_251_432_187.8).abs() / crude200 < 1e-9);
        let ratio = biguint_to_f64(&partition_exact(200).unwrap()) / crude200;
        assert!((ratio - 0.968965).abs() < 1e-5);
    }

    #[test]
    fn crude_ratio_improves_with_n() {
        let t = PartitionTable::up_to(10_000).unwrap();
        let r100 = biguint_to_f64(t.get(100)) / crude_asymptotic(100).unwrap();
        let r10000 = biguint_to_f64(t.get(10_000)) / crude_asymptotic(10_000).unwrap();
        assert!((r10000 - 1.0).abs() < (r100 - 1.0).abs());
    }

    #[test]
    fn digit_count_parabola() {
        // digits(p(n)) grows like C√n: digits(p(4n))/digits(p(n)) → 2
        // within 10% for n ≥ 100.
        let t = PartitionTable::up_to(10_000).unwrap();
        for n in [100usize, 500, 2_000, 2_500] {
            let d1 = t.get(n).to_string().len() as f64;
            let d4 = t.get(4 * n).to_string().len() as f64;
            assert!((d4 / d1 - 2.0).abs() < 0.2, "n = {n}: ratio {}", d4 / d1);
        }
        // Least-squares digits ≈ a·√n + b over [100, 10^4]. Oracle: worst
        // relative residual 9.9% (the −log₁₀ n term bends the small end);
        // slope ≈ π√(2/3)/ln 10 = 1.114 minus that drift.
        let pts: Vec<(f64, f64)> = (100..=10_000)
            .step_by(100)
            .map(|n| ((n as f64).sqrt(), t.get(n).to_string().len() as f64))
            .collect();
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        let icept = (sy - slope * sx) / n;
        assert!((slope - 1.0986).abs() < 0.01, "slope {slope}");
        for (x, y) in pts {
            let fit = slope * x + icept;
            assert!((y - fit).abs() / y < 0.11, "sqrt(n) = {x}: {y} vs {fit}");
        }
    }
}
