//! Exact-arithmetic toolkit for the rational-distance problem on isosceles
//! triangles.
//!
//! Two families of triangles are handled, both with unit of length fixed by
//! the rational side:
//!
//! * the **apex family** `(1, θ, 1)` — two unit legs meeting at the apex `A`,
//!   base `θ`, with `0 ≤ θ ≤ 2`;
//! * the **base family** `(θ, 2, θ)` — base `2`, legs `θ ≥ 1`, main altitude
//!   `Φ = √(θ² − 1)`.
//!
//! For each family the crate can decide or search suitability (existence of a
//! plane point at rational distance from all three vertices), construct
//! explicit solution points with exact certificates, recover witnesses from
//! known points, and compute the two-line locus that contains every solution
//! point when `θ²` is irrational. A brute-force [`oracle`] re-derives points
//! from the Pythagorean distance equations alone and is used to cross-validate
//! every constructive formula. The [`omega`] module explores the set
//! `Ω = {(p²−1)(q²−1) : p, q ∈ ℚ≥0}`.
//!
//! All arithmetic is exact: arbitrary-precision rationals, canonical quadratic
//! surds `a ± √b`, and two-term radical sums `ε√a + ε′√b`. Decimal output is
//! produced only on request and is always correctly rounded; no floating point
//! is used anywhere.
//!
//! Bulk searches (witness sweeps, oracle enumeration, Ω membership scans) run
//! on rayon when the default `parallel` feature is on, and fall back to plain
//! iterators without it. Results are byte-identical either way: work is split
//! into deterministic shards whose outputs are merged in shard order.

pub mod apex;
pub mod base;
pub mod enumerate;
pub mod exact;
pub mod exec;
pub mod omega;
pub mod oracle;

pub use exact::radical::RadicalSum;
pub use exact::rational::Rational;
pub use exact::real::ExactReal;
pub use exact::sign::Sign;
