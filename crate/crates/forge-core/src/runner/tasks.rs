//! Per-task chunk execution, canonical summary encodings, and deterministic
//! aggregation. A chunk's summary is a pure function of (spec, chunk range),
//! which is what makes the digest double-checking meaningful.

use super::digest::Encoder;
use super::{JobSpec, RunnerError, TaskKind};
use crate::asymptotics::{gap_statistics, pnt_table, PntComparisonRow};
use crate::collatz::{self, VerifyStatus};
use crate::gilbreath::{verify_depth, GilbreathVerdict};
use crate::goldbach::{self, Method};
use crate::partitions::{biguint_to_f64, crude_asymptotic, hardy_ramanujan_principal, PartitionTable};
use crate::primes::{build_table, PrimeTable};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Chunk completion status recorded in the checkpoint file. A Collatz
/// counterexample candidate is a `Failed` chunk whose summary carries the
/// witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChunkStatus {
    Verified,
    Failed,
    Overflow,
}

/// One row of the partitions comparison table; the exact value is carried in
/// decimal (p(n) outgrows every machine integer).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionRow {
    pub n: u64,
    pub exact: String,
    pub principal: f64,
    pub crude: f64,
    pub ratio_principal: f64,
    pub ratio_crude: f64,
}

/// Task-specific chunk statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChunkSummary {
    CollatzVerify {
        status: VerifyStatus,
        worst_stopping_time: u64,
        worst_stopping_seed: u64,
        worst_excursion: u128,
        worst_excursion_seed: u64,
        witness: Option<u64>,
    },
    GoldbachVerify {
        covered: bool,
        delta_used: u64,
        delta_sufficient: u64,
        max_p_min: u64,
        max_p_min_at: u64,
        uncovered: Vec<u64>,
    },
    GilbreathVerify {
        verdict: GilbreathVerdict,
    },
    PntTable {
        rows: Vec<PntComparisonRow>,
    },
    GapStats {
        histogram: Vec<(u64, u64)>,
        twin_count: u64,
        cramer_max: f64,
        cramer_argmax: Option<u64>,
    },
    PartitionsCompare {
        rows: Vec<PartitionRow>,
    },
    GoldbachSail {
        rows: Vec<(u64, u64)>,
    },
    /// Worker panic or internal error, after one retry.
    Failure {
        message: String,
    },
}

impl ChunkSummary {
    /// Digest over the canonical encoding (tag byte + fields, little-endian).
    pub fn digest(&self) -> u64 {
        let mut e = Encoder::new();
        match self {
            ChunkSummary::CollatzVerify {
                status,
                worst_stopping_time,
                worst_stopping_seed,
                worst_excursion,
                worst_excursion_seed,
                witness,
            } => {
                e.u8(1);
                e.u8(match status {
                    VerifyStatus::Verified => 0,
                    VerifyStatus::CounterexampleCandidate => 1,
                    VerifyStatus::Overflow => 2,
                });
                e.u64(*worst_stopping_time).u64(*worst_stopping_seed);
                e.u128(*worst_excursion).u64(*worst_excursion_seed);
                e.opt_u64(*witness);
            }
            ChunkSummary::GoldbachVerify {
                covered,
                delta_used,
                delta_sufficient,
                max_p_min,
                max_p_min_at,
                uncovered,
            } => {
                e.u8(2).bool(*covered).u64(*delta_used).u64(*delta_sufficient);
                e.u64(*max_p_min).u64(*max_p_min_at).len(uncovered.len());
                for &n in uncovered {
                    e.u64(n);
                }
            }
            ChunkSummary::GilbreathVerify { verdict } => {
                e.u8(3).u64(verdict.prime_bound);
                e.u64(verdict.base_count as u64).u64(verdict.k_rows as u64);
                e.u64(verdict.width_at_k as u64)
                    .u64(verdict.depth_guaranteed as u64);
                e.bool(verdict.tail_ok);
                match verdict.counterexample {
                    Some((k, v)) => e.u8(1).u64(k as u64).u64(v),
                    None => e.u8(0),
                };
            }
            ChunkSummary::PntTable { rows } => {
                e.u8(4).len(rows.len());
                for r in rows {
                    e.u64(r.n).u64(r.pi_n).f64(r.n_over_log_n).f64(r.li_n);
                    e.f64(r.li_error).f64(r.legendre).f64(r.legendre_error);
                    e.f64(r.pnt_ratio);
                }
            }
            ChunkSummary::GapStats {
                histogram,
                twin_count,
                cramer_max,
                cramer_argmax,
            } => {
                e.u8(5).len(histogram.len());
                for &(gap, count) in histogram {
                    e.u64(gap).u64(count);
                }
                e.u64(*twin_count).f64(*cramer_max).opt_u64(*cramer_argmax);
            }
            ChunkSummary::PartitionsCompare { rows } => {
                e.u8(6).len(rows.len());
                for r in rows {
                    e.u64(r.n).str(&r.exact).f64(r.principal).f64(r.crude);
                    e.f64(r.ratio_principal).f64(r.ratio_crude);
                }
            }
            ChunkSummary::GoldbachSail { rows } => {
                e.u8(7).len(rows.len());
                for &(n, p) in rows {
                    e.u64(n).u64(p);
                }
            }
            ChunkSummary::Failure { message } => {
                e.u8(255).str(message);
            }
        }
        e.finish()
    }
}

/// Shared read-only resources built once by the coordinator before dispatch.
pub struct TaskContext {
    pub primes: Option<Arc<PrimeTable>>,
    pub partitions: Option<Arc<PartitionTable>>,
}

impl TaskContext {
    pub fn prepare(spec: &JobSpec) -> Result<TaskContext, RunnerError> {
        let primes = match spec.task {
            TaskKind::CollatzVerify => None,
            TaskKind::GoldbachVerify
            | TaskKind::GoldbachSail
            | TaskKind::GilbreathVerify
            | TaskKind::GapStats => Some(Arc::new(build_table(spec.hi)?)),
            TaskKind::PntTable => {
                let top = spec
                    .params
                    .checkpoints
                    .as_ref()
                    .and_then(|c| c.iter().max().copied())
                    .unwrap_or(spec.hi)
                    .max(spec.hi);
                Some(Arc::new(build_table(top)?))
            }
            TaskKind::PartitionsCompare => None,
        };
        let partitions = match spec.task {
            TaskKind::PartitionsCompare => {
                Some(Arc::new(PartitionTable::up_to(spec.hi as usize)?))
            }
            _ => None,
        };
        Ok(TaskContext { primes, partitions })
    }
}

fn primes_of(ctx: &TaskContext) -> &PrimeTable {
    ctx.primes.as_ref().expect("task context holds a prime table")
}

/// Executes one chunk. Pure in (spec, lo, hi): reruns reproduce the summary
/// bit for bit, which the resume double-check relies on.
pub fn execute_chunk(
    ctx: &TaskContext,
    spec: &JobSpec,
    lo: u64,
    hi: u64,
) -> Result<(ChunkStatus, ChunkSummary), RunnerError> {
    match spec.task {
        TaskKind::CollatzVerify => {
            let budget = spec.params.budget.unwrap_or(collatz::DEFAULT_STEP_BUDGET);
            let r = collatz::verify_interval(lo, hi, budget)?;
            let status = match r.status {
                VerifyStatus::Verified => ChunkStatus::Verified,
                VerifyStatus::CounterexampleCandidate => ChunkStatus::Failed,
                VerifyStatus::Overflow => ChunkStatus::Overflow,
            };
            Ok((
                status,
                ChunkSummary::CollatzVerify {
                    status: r.status,
                    worst_stopping_time: r.worst_stopping_time,
                    worst_stopping_seed: r.worst_stopping_seed,
                    worst_excursion: r.worst_excursion,
                    worst_excursion_seed: r.worst_excursion_seed,
                    witness: r.witness,
                },
            ))
        }
        TaskKind::GoldbachVerify => {
            let primes = primes_of(ctx);
            let method = match spec.params.method.unwrap_or(2) {
                1 => Method::One,
                _ => Method::Two,
            };
            let delta0 = spec.params.delta.unwrap_or(16);
            let a = lo.div_ceil(2) * 2;
            let b = hi / 2 * 2;
            let r = goldbach::verify_interval_auto(method, delta0, a.max(4), b, primes)?;
            let (max_p_min, max_p_min_at) = r.max_p_min.unwrap_or((0, 0));
            let status = if r.covered {
                ChunkStatus::Verified
            } else {
                ChunkStatus::Failed
            };
            Ok((
                status,
                ChunkSummary::GoldbachVerify {
                    covered: r.covered,
                    delta_used: r.delta_given,
                    delta_sufficient: r.delta_sufficient,
                    max_p_min,
                    max_p_min_at,
                    uncovered: r.uncovered,
                },
            ))
        }
        TaskKind::GilbreathVerify => {
            let primes = primes_of(ctx);
            let n = primes.prime_count_total() as usize;
            let verdict = verify_depth(primes, n)?;
            let status = if verdict.counterexample.is_none() {
                ChunkStatus::Verified
            } else {
                ChunkStatus::Failed
            };
            Ok((status, ChunkSummary::GilbreathVerify { verdict }))
        }
        TaskKind::PntTable => {
            let primes = primes_of(ctx);
            let empty = Vec::new();
            let pts: Vec<u64> = spec
                .params
                .checkpoints
                .as_ref()
                .unwrap_or(&empty)
                .iter()
                .copied()
                .filter(|&n| n >= lo && n <= hi)
                .collect();
            let rows = pnt_table(primes, &pts)?;
            Ok((ChunkStatus::Verified, ChunkSummary::PntTable { rows }))
        }
        TaskKind::GapStats => {
            let primes = primes_of(ctx);
            // Pairs (p, next prime ≤ job hi) attributed to the chunk holding p.
            let mut histogram = std::collections::BTreeMap::new();
            let mut cramer_max = 0.0f64;
            let mut cramer_argmax = None;
            let mut prev: Option<u64> = None;
            for p in primes.range(lo.max(2), spec.hi) {
                if let Some(q) = prev {
                    if q > hi {
                        break;
                    }
                    let gap = p - q;
                    *histogram.entry(gap).or_insert(0u64) += 1;
                    if q >= crate::asymptotics::CRAMER_MIN_PRIME {
                        let lq = (q as f64).ln();
                        let ratio = gap as f64 / (lq * lq);
                        if ratio > cramer_max {
                            cramer_max = ratio;
                            cramer_argmax = Some(q);
                        }
                    }
                }
                prev = Some(p);
                if p > hi {
                    break;
                }
            }
            let twin_count = histogram.get(&2).copied().unwrap_or(0);
            Ok((
                ChunkStatus::Verified,
                ChunkSummary::GapStats {
                    histogram: histogram.into_iter().collect(),
                    twin_count,
                    cramer_max,
                    cramer_argmax,
                },
            ))
        }
        TaskKind::PartitionsCompare => {
            let table = ctx
                .partitions
                .as_ref()
                .expect("task context holds a partition table");
            let mut rows = Vec::new();
            for n in lo.max(1)..=hi {
                let exact = table.get(n as usize);
                let exact_f = biguint_to_f64(exact);
                let principal = hardy_ramanujan_principal(n)?;
                let crude = crude_asymptotic(n)?;
                rows.push(PartitionRow {
                    n,
                    exact: exact.to_string(),
                    principal,
                    crude,
                    ratio_principal: exact_f / principal,
                    ratio_crude: exact_f / crude,
                });
            }
            Ok((ChunkStatus::Verified, ChunkSummary::PartitionsCompare { rows }))
        }
        TaskKind::GoldbachSail => {
            let primes = primes_of(ctx);
            let mut rows = Vec::new();
            let mut n = (lo.div_ceil(2) * 2).max(4);
            while n <= hi {
                let part = goldbach::minimal_partition(n, primes)?;
                rows.push((n, part.p_min));
                n += 2;
            }
            Ok((ChunkStatus::Verified, ChunkSummary::GoldbachSail { rows }))
        }
    }
}

/// Deterministic aggregate of all chunk summaries, folded in canonical
/// (ascending range) order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JobAggregate {
    CollatzVerify {
        status: VerifyStatus,
        worst_stopping_time: u64,
        worst_stopping_seed: u64,
        worst_excursion: u128,
        worst_excursion_seed: u64,
        witness: Option<u64>,
    },
    GoldbachVerify {
        all_covered: bool,
        max_delta_used: u64,
        delta_sufficient: u64,
        max_p_min: u64,
        max_p_min_at: u64,
        uncovered_total: u64,
    },
    GilbreathVerify {
        verdict: GilbreathVerdict,
    },
    PntTable {
        rows: Vec<PntComparisonRow>,
    },
    GapStats {
        histogram: Vec<(u64, u64)>,
        twin_count: u64,
        cramer_max: f64,
        cramer_argmax: Option<u64>,
        champion_gap: u64,
        total_gaps: u64,
    },
    PartitionsCompare {
        rows: Vec<PartitionRow>,
    },
    GoldbachSail {
        rows: Vec<(u64, u64)>,
    },
    Failed {
        message: String,
    },
}

pub fn aggregate(task: TaskKind, summaries: &[ChunkSummary]) -> JobAggregate {
    if let Some(ChunkSummary::Failure { message }) = summaries
        .iter()
        .find(|s| matches!(s, ChunkSummary::Failure { .. }))
    {
        return JobAggregate::Failed {
            message: message.clone(),
        };
    }
    match task {
        TaskKind::CollatzVerify => {
            let mut agg = JobAggregate::CollatzVerify {
                status: VerifyStatus::Verified,
                worst_stopping_time: 0,
                worst_stopping_seed: 0,
                worst_excursion: 0,
                worst_excursion_seed: 0,
                witness: None,
            };
            for s in summaries {
                if let (
                    JobAggregate::CollatzVerify {
                        status,
                        worst_stopping_time,
                        worst_stopping_seed,
                        worst_excursion,
                        worst_excursion_seed,
                        witness,
                    },
                    ChunkSummary::CollatzVerify {
                        status: cs,
                        worst_stopping_time: wst,
                        worst_stopping_seed: wss,
                        worst_excursion: we,
                        worst_excursion_seed: wes,
                        witness: w,
                    },
                ) = (&mut agg, s)
                {
                    if *wst > *worst_stopping_time {
                        *worst_stopping_time = *wst;
                        *worst_stopping_seed = *wss;
                    }
                    if *we > *worst_excursion {
                        *worst_excursion = *we;
                        *worst_excursion_seed = *wes;
                    }
                    if *status == VerifyStatus::Verified && *cs != VerifyStatus::Verified {
                        *status = *cs;
                        *witness = *w;
                    }
                }
            }
            agg
        }
        TaskKind::GoldbachVerify => {
            let mut all_covered = true;
            let (mut mdu, mut ds, mut mpm, mut mpa, mut unc) = (0u64, 0u64, 0u64, 0u64, 0u64);
            for s in summaries {
                if let ChunkSummary::GoldbachVerify {
                    covered,
                    delta_used,
                    delta_sufficient,
                    max_p_min,
                    max_p_min_at,
                    uncovered,
                } = s
                {
                    all_covered &= covered;
                    mdu = mdu.max(*delta_used);
                    ds = ds.max(*delta_sufficient);
                    if *max_p_min > mpm {
                        mpm = *max_p_min;
                        mpa = *max_p_min_at;
                    }
                    unc += uncovered.len() as u64;
                }
            }
            JobAggregate::GoldbachVerify {
                all_covered,
                max_delta_used: mdu,
                delta_sufficient: ds,
                max_p_min: mpm,
                max_p_min_at: mpa,
                uncovered_total: unc,
            }
        }
        TaskKind::GilbreathVerify => {
            let verdict = summaries
                .iter()
                .find_map(|s| match s {
                    ChunkSummary::GilbreathVerify { verdict } => Some(verdict.clone()),
                    _ => None,
                })
                .expect("gilbreath job carries one verdict");
            JobAggregate::GilbreathVerify { verdict }
        }
        TaskKind::PntTable => {
            let mut rows = Vec::new();
            for s in summaries {
                if let ChunkSummary::PntTable { rows: r } = s {
                    rows.extend(r.iter().cloned());
                }
            }
            JobAggregate::PntTable { rows }
        }
        TaskKind::GapStats => {
            let mut histogram = std::collections::BTreeMap::new();
            let mut twin = 0u64;
            let mut cmax = 0.0f64;
            let mut carg = None;
            for s in summaries {
                if let ChunkSummary::GapStats {
                    histogram: h,
                    twin_count,
                    cramer_max,
                    cramer_argmax,
                } = s
                {
                    for &(g, c) in h {
                        *histogram.entry(g).or_insert(0u64) += c;
                    }
                    twin += twin_count;
                    if *cramer_max > cmax {
                        cmax = *cramer_max;
                        carg = *cramer_argmax;
                    }
                }
            }
            let champion_gap = histogram
                .iter()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
                .map(|(&g, _)| g)
                .unwrap_or(0);
            let total_gaps = histogram.values().sum();
            JobAggregate::GapStats {
                histogram: histogram.into_iter().collect(),
                twin_count: twin,
                cramer_max: cmax,
                cramer_argmax: carg,
                champion_gap,
                total_gaps,
            }
        }
        TaskKind::PartitionsCompare => {
            let mut rows = Vec::new();
            for s in summaries {
                if let ChunkSummary::PartitionsCompare { rows: r } = s {
                    rows.extend(r.iter().cloned());
                }
            }
            JobAggregate::PartitionsCompare { rows }
        }
        TaskKind::GoldbachSail => {
            let mut rows = Vec::new();
            for s in summaries {
                if let ChunkSummary::GoldbachSail { rows: r } = s {
                    rows.extend(r.iter().copied());
                }
            }
            JobAggregate::GoldbachSail { rows }
        }
    }
}
