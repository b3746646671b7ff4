//! Iterated absolute differences of consecutive primes (the Proth–Gilbreath
//! triangle) and depth certification via the 0/2 prefix shortcut.
//!
//! With d_0(n) = p_n and d_{k+1}(n) = |d_k(n) − d_k(n+1)|, the conjecture is
//! that every row k ≥ 1 starts with 1. The shortcut: once a row K starts with
//! 1 and its remaining entries all lie in {0, 2}, the first entry is forced
//! to stay 1 down to the triangle's last row — 0/2 tails propagate as 0/2 and
//! |1 − {0,2}| = 1 — so a triangle over N primes is certified to depth
//! N − 1 after materializing only K rows instead of ~N²/2 cells.

use crate::primes::PrimeTable;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GilbreathError {
    #[error("need at least {need} primes, table holds {have}")]
    NotEnoughPrimes { need: u64, have: u64 },
    #[error("N must be >= 2, got {0}")]
    WidthDomain(usize),
    #[error("depth {depth} exceeds N-1 = {max}")]
    DepthDomain { depth: usize, max: usize },
}

/// A difference row; entries after row 1 are almost always tiny, so rows are
/// held in 8 bits and promoted to 64 only if an entry would saturate (never
/// silently wrapped).
#[derive(Debug, Clone, PartialEq, Eq)]
enum Row {
    Narrow(Vec<u8>),
    Wide(Vec<u64>),
}

impl Row {
    fn from_values(values: Vec<u64>) -> Row {
        if values.iter().all(|&v| v <= u8::MAX as u64) {
            Row::Narrow(values.iter().map(|&v| v as u8).collect())
        } else {
            Row::Wide(values)
        }
    }

    fn len(&self) -> usize {
        match self {
            Row::Narrow(v) => v.len(),
            Row::Wide(v) => v.len(),
        }
    }

    fn get(&self, i: usize) -> u64 {
        match self {
            Row::Narrow(v) => v[i] as u64,
            Row::Wide(v) => v[i],
        }
    }

    fn next_row(&self) -> Row {
        match self {
            Row::Narrow(v) => Row::Narrow(v.windows(2).map(|w| w[0].abs_diff(w[1])).collect()),
            Row::Wide(v) => {
                Row::from_values(v.windows(2).map(|w| w[0].abs_diff(w[1])).collect())
            }
        }
    }

    /// True iff every entry at positions 2.. (index 1..) is 0 or 2.
    fn tail_all_02(&self) -> bool {
        match self {
            Row::Narrow(v) => v[1..].iter().all(|&x| x == 0 || x == 2),
            Row::Wide(v) => v[1..].iter().all(|&x| x == 0 || x == 2),
        }
    }

    fn to_vec(&self) -> Vec<u64> {
        match self {
            Row::Narrow(v) => v.iter().map(|&x| x as u64).collect(),
            Row::Wide(v) => v.clone(),
        }
    }
}

/// Materialized difference triangle, rows 0..=depth.
#[derive(Debug, Clone)]
pub struct DifferenceTriangle {
    base_count: usize,
    row0: Vec<u64>,
    rows: Vec<Row>,
}

impl DifferenceTriangle {
    /// Number of primes in row 0.
    pub fn base_count(&self) -> usize {
        self.base_count
    }

    /// Deepest materialized row index.
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// Row k as owned values; row k has base_count − k entries.
    pub fn row(&self, k: usize) -> Vec<u64> {
        if k == 0 {
            self.row0.clone()
        } else {
            self.rows[k - 1].to_vec()
        }
    }

    /// d_k(1) for k = 1..=depth.
    pub fn first_column(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.get(0)).collect()
    }
}

/// Materializes rows 0..=depth of the triangle over the first `n` primes.
pub fn difference_triangle(
    primes: &PrimeTable,
    n: usize,
    depth: usize,
) -> Result<DifferenceTriangle, GilbreathError> {
    if n < 2 {
        return Err(GilbreathError::WidthDomain(n));
    }
    if depth > n - 1 {
        return Err(GilbreathError::DepthDomain { depth, max: n - 1 });
    }
    let row0 = first_primes(primes, n)?;
    let mut rows = Vec::with_capacity(depth);
    let mut cur = Row::from_values(row0.windows(2).map(|w| w[1] - w[0]).collect());
    for _ in 0..depth {
        let next = cur.next_row();
        rows.push(cur);
        cur = next;
        if rows.len() == depth {
            break;
        }
    }
    // rows now holds rows 1..=depth (the loop pushed `depth` rows).
    Ok(DifferenceTriangle {
        base_count: n,
        row0,
        rows,
    })
}

fn first_primes(primes: &PrimeTable, n: usize) -> Result<Vec<u64>, GilbreathError> {
    let have = primes.prime_count_total();
    if (n as u64) > have {
        return Err(GilbreathError::NotEnoughPrimes {
            need: n as u64,
            have,
        });
    }
    Ok(primes.iter().take(n).collect())
}

/// Outcome of a depth certification run.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GilbreathVerdict {
    pub prime_bound: u64,
    /// Primes in row 0.
    pub base_count: usize,
    /// Rows materialized explicitly (the shortcut row K when tail_ok).
    pub k_rows: usize,
    /// Width of row K.
    pub width_at_k: usize,
    /// Largest k with d_k(1) = 1 certified; width_at_k + k_rows − 1 when
    /// tail_ok (which certifies the whole triangle, depth = base_count − 1).
    pub depth_guaranteed: usize,
    pub tail_ok: bool,
    /// First row whose leading entry differs from 1, with that entry.
    pub counterexample: Option<(usize, u64)>,
}

/// Scans rows d_1, d_2, … over the first `n` primes of the table until one
/// has a nonempty all-{0,2} tail (certifying depth n − 1 via the prefix
/// shortcut), a leading entry ≠ 1 appears (counterexample), or the width
/// collapses below 2 (inconclusive).
pub fn verify_depth(primes: &PrimeTable, n: usize) -> Result<GilbreathVerdict, GilbreathError> {
    if n < 2 {
        return Err(GilbreathError::WidthDomain(n));
    }
    let row0 = first_primes(primes, n)?;
    let mut row = Row::from_values(row0.windows(2).map(|w| w[1] - w[0]).collect());
    let mut k = 1usize;
    loop {
        let first = row.get(0);
        if first != 1 {
            return Ok(GilbreathVerdict {
                prime_bound: primes.bound(),
                base_count: n,
                k_rows: k,
                width_at_k: row.len(),
                depth_guaranteed: k - 1,
                tail_ok: false,
                counterexample: Some((k, first)),
            });
        }
        if row.len() >= 2 && row.tail_all_02() {
            let width = row.len();
            return Ok(GilbreathVerdict {
                prime_bound: primes.bound(),
                base_count: n,
                k_rows: k,
                width_at_k: width,
                depth_guaranteed: width + k - 1,
                tail_ok: true,
                counterexample: None,
            });
        }
        if row.len() < 2 {
            return Ok(GilbreathVerdict {
                prime_bound: primes.bound(),
                base_count: n,
                k_rows: k,
                width_at_k: row.len(),
                depth_guaranteed: k,
                tail_ok: false,
                counterexample: None,
            });
        }
        row = row.next_row();
        k += 1;
    }
}
