//! Segmented sieve of Eratosthenes with odd-only bit packing, plus the
//! derived prime queries (π(n), p_m, membership) every other module feeds on.
//!
//! Layout: the integers are cut into segments of `SEGMENT_SPAN = 2^21`
//! consecutive values; each segment stores one bit per odd number (set bit =
//! composite), so a segment is 128 KiB and the inner sieving loop stays
//! cache-resident. A cumulative prime count is kept per segment boundary so
//! π(n) and nth-prime queries only ever scan a single segment.
//!
//! Tables are immutable after construction and safe to share across threads.
//! Construction parallelizes over segments but is bit-identical for any
//! worker count: each segment is sieved independently from the same base
//! prime list.

use thiserror::Error;

/// Odd slots per segment; each segment covers `2 * SEG_ODD_SLOTS` integers.
const SEG_ODD_SLOTS: u64 = 1 << 20;
/// Integers covered by one segment.
pub const SEGMENT_SPAN: u64 = 2 * SEG_ODD_SLOTS;

/// Smallest admissible table bound.
pub const MIN_BOUND: u64 = 2;
/// Implementation ceiling for table bounds (memory: ~64 MiB of bits per 10^9).
pub const MAX_BOUND: u64 = 10_000_000_000;

/// Complete logarithmic integral at 2: li(2) = PV ∫₀² dt/log t.
///
/// [`logarithmic_integral`] returns the offset integral ∫₂ⁿ dt/log t (zero at
/// n = 2); adding this constant converts it to the classical li(n) used by
/// prime-count comparison tables such as the Gauss–Encke letter column.
pub const LI_AT_2: f64 = 1.0451637801174927;

#[derive(Debug, Error)]
pub enum PrimesError {
    #[error("bound {0} outside the admissible range [{MIN_BOUND}, {MAX_BOUND}]")]
    BoundOutOfRange(u64),
    #[error("query {n} exceeds the table bound {bound}")]
    BeyondTable { n: u64, bound: u64 },
    #[error("prime index {m} out of range: 1 ..= {count} (π(bound) = {count})")]
    IndexOutOfRange { m: u64, count: u64 },
    #[error("logarithmic integral requires n >= 2, got {0}")]
    LiDomain(f64),
}

/// One bit-packed odd-only window of the sieve.
///
/// Bit `k` of the segment (set = composite) stands for the odd number
/// `start + 2k`. Re-sieving the same window standalone reproduces the bits
/// exactly; tests rely on that to cross-check segment independence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSegment {
    /// First odd number covered (segment-aligned: `index * SEGMENT_SPAN + 1`).
    start: u64,
    /// Composite flags, one bit per odd in `[start, start + SEGMENT_SPAN)`.
    bits: Vec<u64>,
}

impl PrimeSegment {
    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    fn is_composite(&self, slot: u64) -> bool {
        self.bits[(slot / 64) as usize] >> (slot % 64) & 1 == 1
    }
}

/// Immutable queryable store of all primes up to `bound`.
pub struct PrimeTable {
    bound: u64,
    segments: Vec<PrimeSegment>,
    /// `count_index[i]` = π(end of segment i), capped at π(bound).
    count_index: Vec<u64>,
}

/// Builds the prime table for `2 <= bound <= MAX_BOUND`.
///
/// Construction sieves segments in parallel (one thread per CPU); the result
/// is bit-identical regardless of thread count.
pub fn build_table(bound: u64) -> Result<PrimeTable, PrimesError> {
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    build_table_with_threads(bound, threads)
}

/// Same as [`build_table`] with an explicit worker count (used by the
/// determinism tests).
pub fn build_table_with_threads(bound: u64, threads: usize) -> Result<PrimeTable, PrimesError> {
    if !(MIN_BOUND..=MAX_BOUND).contains(&bound) {
        return Err(PrimesError::BoundOutOfRange(bound));
    }
    let base = base_primes(integer_sqrt(bound));
    let n_segments = (bound / SEGMENT_SPAN + 1) as usize;

    let mut segments: Vec<Option<PrimeSegment>> = (0..n_segments).map(|_| None).collect();
    let threads = threads.max(1).min(n_segments);
    let chunk = n_segments.div_ceil(threads);
    std::thread::scope(|scope| {
        for (ci, slice) in segments.chunks_mut(chunk).enumerate() {
            let base = &base;
            scope.spawn(move || {
                for (off, slot) in slice.iter_mut().enumerate() {
                    let index = (ci * chunk + off) as u64;
                    *slot = Some(sieve_segment(index, bound, base));
                }
            });
        }
    });
    let segments: Vec<PrimeSegment> = segments.into_iter().map(|s| s.unwrap()).collect();

    // Cumulative π at segment ends; prime 2 belongs to segment 0.
    let mut count_index = Vec::with_capacity(n_segments);
    let mut total: u64 = if bound >= 2 { 1 } else { 0 };
    for seg in &segments {
        let zeros: u64 = seg.bits.iter().map(|w| w.count_zeros() as u64).sum();
        total += zeros;
        count_index.push(total);
    }
    Ok(PrimeTable {
        bound,
        segments,
        count_index,
    })
}

/// Sieves one segment against the base primes. Bits beyond `bound` and the
/// non-prime slot for 1 are forced composite so popcounts need no edge cases.
fn sieve_segment(index: u64, bound: u64, base: &[u64]) -> PrimeSegment {
    let start = index * SEGMENT_SPAN + 1;
    let words = (SEG_ODD_SLOTS / 64) as usize;
    let mut bits = vec![0u64; words];
    let seg_lo = index * SEGMENT_SPAN; // first integer covered
    let seg_hi = seg_lo + SEGMENT_SPAN - 1;

    for &p in base {
        if p * p > seg_hi {
            break;
        }
        // First odd multiple of p in the segment, not below p².
        let mut m = p * p;
        if m < seg_lo {
            m = seg_lo.div_ceil(p) * p;
            if m % 2 == 0 {
                m += p;
            }
        }
        let mut slot = (m - start) / 2;
        while slot < SEG_ODD_SLOTS {
            bits[(slot / 64) as usize] |= 1 << (slot % 64);
            slot += p; // odd multiples of p are 2p apart = p slots
        }
    }
    if index == 0 {
        bits[0] |= 1; // 1 is not prime
    }
    // Force everything above bound composite.
    if seg_hi > bound {
        let first_bad = ((bound + 2) | 1).max(start); // first odd > bound
        let mut slot = (first_bad - start) / 2;
        if slot < SEG_ODD_SLOTS {
            let w = (slot / 64) as usize;
            bits[w] |= !0u64 << (slot % 64);
            slot = (slot / 64 + 1) * 64;
            for word in bits.iter_mut().skip((slot / 64) as usize) {
                *word = !0;
            }
        }
    }
    PrimeSegment { start, bits }
}

/// Simple odd sieve for the base primes up to `limit` (≤ 10^5 at the ceiling).
fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return vec![];
    }
    let n = limit as usize;
    let mut composite = vec![false; n / 2 + 1]; // index k ↔ odd 2k+1
    let mut primes = Vec::new();
    let mut p = 3u64;
    while p <= limit {
        if !composite[(p / 2) as usize] {
            primes.push(p);
            let mut m = p * p;
            while m <= limit {
                composite[(m / 2) as usize] = true;
                m += 2 * p;
            }
        }
        p += 2;
    }
    primes
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

impl PrimeTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn segments(&self) -> &[PrimeSegment] {
        &self.segments
    }

    /// Total number of primes in the table, π(bound).
    pub fn prime_count_total(&self) -> u64 {
        *self.count_index.last().unwrap()
    }

    /// Membership test. Panics if `n` exceeds the table bound; use
    /// [`PrimeTable::prime_count`] for checked range handling.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.bound,
            "is_prime({n}) beyond table bound {}",
            self.bound
        );
        if n < 2 {
            return false;
        }
        if n % 2 == 0 {
            return n == 2;
        }
        let seg = &self.segments[(n / SEGMENT_SPAN) as usize];
        !seg.is_composite((n - seg.start) / 2)
    }

    /// π(n): number of primes ≤ n. Monotone nondecreasing in n.
    pub fn prime_count(&self, n: u64) -> Result<u64, PrimesError> {
        if n > self.bound {
            return Err(PrimesError::BeyondTable {
                n,
                bound: self.bound,
            });
        }
        if n < 2 {
            return Ok(0);
        }
        let si = (n / SEGMENT_SPAN) as usize;
        let seg = &self.segments[si];
        let before = if si == 0 { 1 } else { self.count_index[si - 1] }; // prime 2
        let top_slot = (n - 1) / 2 - (seg.start - 1) / 2; // highest odd ≤ n
        let full_words = (top_slot / 64) as usize;
        let mut zeros: u64 = seg.bits[..full_words]
            .iter()
            .map(|w| w.count_zeros() as u64)
            .sum();
        let rem = top_slot % 64 + 1;
        let mask = if rem == 64 { !0u64 } else { (1u64 << rem) - 1 };
        zeros += (!seg.bits[full_words] & mask).count_ones() as u64;
        Ok(before + zeros)
    }

    /// p_m, the m-th prime (1-indexed: p_1 = 2).
    pub fn nth_prime(&self, m: u64) -> Result<u64, PrimesError> {
        let total = self.prime_count_total();
        if m == 0 || m > total {
            return Err(PrimesError::IndexOutOfRange { m, count: total });
        }
        if m == 1 {
            return Ok(2);
        }
        // First segment whose cumulative count reaches m.
        let si = self.count_index.partition_point(|&c| c < m);
        let seg = &self.segments[si];
        let before = if si == 0 { 1 } else { self.count_index[si - 1] };
        let mut need = m - before; // which zero bit inside the segment
        for (wi, &word) in seg.bits.iter().enumerate() {
            let z = word.count_zeros() as u64;
            if z < need {
                need -= z;
                continue;
            }
            let mut w = !word;
            for _ in 1..need {
                w &= w - 1; // clear lowest set bit
            }
            let bit = w.trailing_zeros() as u64;
            return Ok(seg.start + 2 * (wi as u64 * 64 + bit));
        }
        unreachable!("count_index inconsistent with segment bits")
    }

    /// Iterator over all primes in the table, ascending.
    pub fn iter(&self) -> PrimeIter<'_> {
        self.range(2, self.bound)
    }

    /// Iterator over primes in `[lo, hi]` (clamped to the table bound).
    pub fn range(&self, lo: u64, hi: u64) -> PrimeIter<'_> {
        let hi = hi.min(self.bound);
        PrimeIter {
            table: self,
            next_two: lo <= 2 && hi >= 2,
            slot: if lo <= 3 { 1 } else { (lo - 1) / 2 },
            end_slot: if hi < 3 { 0 } else { (hi - 1) / 2 },
            done: hi < lo || hi < 2,
        }
    }
}

/// Ascending iterator over primes in a table window.
pub struct PrimeIter<'a> {
    table: &'a PrimeTable,
    next_two: bool,
    /// Global odd slot of the next candidate (odd 2k+1 ↔ slot k).
    slot: u64,
    end_slot: u64,
    done: bool,
}

impl Iterator for PrimeIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if self.next_two {
            self.next_two = false;
            return Some(2);
        }
        while self.slot <= self.end_slot {
            let si = (self.slot / SEG_ODD_SLOTS) as usize;
            let seg = &self.table.segments[si];
            let local = self.slot - si as u64 * SEG_ODD_SLOTS;
            let wi = (local / 64) as usize;
            let word = !seg.bits[wi] & (!0u64 << (local % 64));
            if word == 0 {
                self.slot = (self.slot / 64 + 1) * 64;
                continue;
            }
            let bit = word.trailing_zeros() as u64;
            let found = si as u64 * SEG_ODD_SLOTS * 2 + (wi as u64 * 64 + bit) * 2 + 1;
            self.slot = si as u64 * SEG_ODD_SLOTS + wi as u64 * 64 + bit + 1;
            if (found - 1) / 2 > self.end_slot {
                break;
            }
            return Some(found);
        }
        self.done = true;
        None
    }
}

/// Standalone segmented sieve of a window `[lo, hi]`, independent of any
/// table. Returns the primes in the window; used to cross-check that sieving
/// a window inside a large table equals sieving it alone.
pub fn sieve_window(lo: u64, hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if hi < 2 || hi < lo {
        return out;
    }
    if lo <= 2 {
        out.push(2);
    }
    let base = base_primes(integer_sqrt(hi));
    let first = (lo.max(3)) | 1;
    if first > hi {
        return out;
    }
    let slots = (hi - first) / 2 + 1;
    let mut composite = vec![false; slots as usize];
    for &p in &base {
        if p * p > hi {
            break;
        }
        let mut m = p * p;
        if m < first {
            m = first.div_ceil(p) * p;
            if m % 2 == 0 {
                m += p;
            }
        }
        while m <= hi {
            composite[((m - first) / 2) as usize] = true;
            m += 2 * p;
        }
    }
    for (k, &c) in composite.iter().enumerate() {
        if !c {
            let n = first + 2 * k as u64;
            if n >= lo {
                out.push(n);
            }
        }
    }
    out
}

/// Offset logarithmic integral Li(n) = ∫₂ⁿ dt/log t by adaptive Simpson
/// quadrature (panel tolerance 1e-6). Li(2) = 0; add [`LI_AT_2`] for the
/// complete li(n).
pub fn logarithmic_integral(n: f64) -> Result<f64, PrimesError> {
    if !n.is_finite() || n < 2.0 {
        return Err(PrimesError::LiDomain(n));
    }
    let f = |t: f64| 1.0 / t.ln();
    Ok(adaptive_simpson(&f, 2.0, n, 1e-6, 48))
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, m: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let whole = simpson(f, a, m, b);
    adapt(f, a, m, b, whole, tol, depth)
}

fn adapt(f: &impl Fn(f64) -> f64, a: f64, m: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let left = simpson(f, a, lm, m);
    let right = simpson(f, m, rm, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adapt(f, a, lm, m, left, tol / 2.0, depth - 1) + adapt(f, m, rm, b, right, tol / 2.0, depth - 1)
}
