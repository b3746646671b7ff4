//! Desk-scale verification and estimation engine for classic experimental
//! number theory: Collatz trajectory checking, Gilbreath difference triangles,
//! Goldbach partitions, the prime-counting asymptotics around the prime number
//! theorem, prime-gap statistics, and exact/asymptotic integer partitions —
//! plus a parallel, checkpointable batch runner with machine-readable reports.
//!
//! Everything is built on top of [`primes::PrimeTable`], an immutable
//! bit-packed segmented sieve that is cheap to share across worker threads.

pub mod asymptotics;
pub mod collatz;
pub mod gilbreath;
pub mod goldbach;
pub mod partitions;
pub mod primes;
pub mod runner;
