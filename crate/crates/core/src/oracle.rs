//! Brute-force enumerators that re-derive rational-distance points from the
//! Pythagorean distance equations alone — no constructive formula from the
//! triangle modules is used — plus a witness sweep that exercises the apex
//! decision procedure in both directions. These are the cross-validation
//! harness for everything the constructive routes produce.
//!
//! The oracles work over rational `θ²` (apex family) and rational `Φ²`
//! (base family): there the distance equations close over ℚ with a single
//! square test, which keeps the search exact. Enumeration order is
//! height-lexicographic in the driving pair `(R, S)`, so outputs diff
//! byte-stably across runs, thread counts, and implementations.

use thiserror::Error;

use crate::apex::{self, ApexDecision, ApexTriangle, ApexWitness};
use crate::enumerate;
use crate::exact::rational::Rational;
use crate::exact::real::ExactReal;
use crate::exact::sign::Sign;
use crate::exec::{flat_map_ordered, ExecMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("apex oracle needs rational θ² strictly between 0 and 4, got {0}")]
    ApexParamOutOfRange(String),
    #[error("base oracle needs rational Φ² > 0, got {0}")]
    BaseParamOutOfRange(String),
}

/// Which family a hit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Apex,
    Base,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Apex => write!(f, "apex"),
            Family::Base => write!(f, "base"),
        }
    }
}

/// One brute-force hit: an exact rational distance triple rediscovered from
/// the distance equations, with the `(R, S)` enumeration pair that produced
/// it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleHit {
    pub family: Family,
    /// `θ²` of the triangle the hit belongs to.
    pub triangle_param: ExactReal,
    /// Distances to the three vertices — `(MA, MB, MC)`.
    pub distances: (Rational, Rational, Rational),
    pub source: (Rational, Rational),
}

/// Re-derives rational-distance points of `(1, θ, 1)` for rational
/// `θ² ∈ (0, 4)` by enumerating candidate distances `(R, S) = (MA, MB)` up
/// to the height bound.
///
/// For each pair: `u = (R²−S²+1)/2` and `ρ² = R²−u²` must be nonnegative;
/// with `a = 1−θ²/2`, a rational `MC` needs `ρ²(1−a²)` to be a rational
/// square `σ²`, and then `T² = R²+1−2ua∓2σ` must be a rational square as
/// well. Both `ρ`-sign branches are emitted (deduplicated when `σ = 0`).
pub fn apex_oracle(theta_sq: &Rational, height_bound: u32) -> Result<Vec<OracleHit>, OracleError> {
    apex_oracle_in(ExecMode::auto(), theta_sq, height_bound)
}

/// [`apex_oracle`] with an explicit execution mode.
pub fn apex_oracle_in(
    mode: ExecMode,
    theta_sq: &Rational,
    height_bound: u32,
) -> Result<Vec<OracleHit>, OracleError> {
    if !theta_sq.is_positive() || *theta_sq >= Rational::int(4) {
        return Err(OracleError::ApexParamOutOfRange(theta_sq.to_string()));
    }
    let one = Rational::one();
    let two = Rational::int(2);
    let a = &one - theta_sq / &two;
    let b_sq = &one - a.square();
    let r_candidates = enumerate::positive_up_to(height_bound);
    let s_candidates = enumerate::nonneg_up_to(height_bound);
    let hits = flat_map_ordered(mode, &r_candidates, |r| {
        let mut out = Vec::new();
        for s in &s_candidates {
            let u = (r.square() - s.square() + &one) / &two;
            let rho_sq = r.square() - u.square();
            if rho_sq.is_negative() {
                continue;
            }
            // ρ·b must be rational for MC² to be: test ρ²·b² for squareness.
            let Some(sigma) = (&rho_sq * &b_sq).sqrt() else {
                continue;
            };
            let base = r.square() + &one - &two * &u * &a;
            for rho_b in [-&sigma, sigma.clone()] {
                if rho_b.is_zero() && sigma.is_positive() {
                    continue; // only the σ = 0 case collapses the branches
                }
                let t_sq = &base - &two * &rho_b;
                if t_sq.is_negative() {
                    continue;
                }
                let Some(t_dist) = t_sq.sqrt() else {
                    continue;
                };
                out.push(OracleHit {
                    family: Family::Apex,
                    triangle_param: ExactReal::Rat(theta_sq.clone()),
                    distances: (r.clone(), s.clone(), t_dist),
                    source: (r.clone(), s.clone()),
                });
                if sigma.is_zero() {
                    break; // both sign branches coincide
                }
            }
        }
        out
    });
    debug_assert!(hits.iter().all(|h| verify_apex_hit(theta_sq, h)));
    Ok(hits)
}

/// Re-checks an apex hit from scratch against the distance equations.
pub fn verify_apex_hit(theta_sq: &Rational, hit: &OracleHit) -> bool {
    let one = Rational::one();
    let two = Rational::int(2);
    let a = &one - theta_sq / &two;
    let (r, s, t) = &hit.distances;
    if !r.is_positive() || s.is_negative() || t.is_negative() {
        return false;
    }
    let u = (r.square() - s.square() + &one) / &two;
    let rho_sq = r.square() - u.square();
    if rho_sq.is_negative() {
        return false;
    }
    // T² = R² + 1 − 2ua − 2ρb with (ρb)² = ρ²(1−a²).
    let rho_b = (r.square() + &one - &two * &u * &a - t.square()) / &two;
    rho_b.square() == rho_sq * (&one - a.square())
}

/// Re-derives rational-distance points of `(θ, 2, θ)` for rational `Φ² > 0`
/// by enumerating candidate distances `(R, S) = (MB, MC)` up to the bound.
///
/// `x₀ = (R²−S²)/4` (the base midpoint is the origin); `e = R²−(x₀+1)²` must
/// be nonnegative; a rational `MA` needs `Φ²·e` to be a rational square
/// `τ²`, and then `MA² = x₀²+Φ²+e∓2τ` must be a rational square. Hit
/// distances are ordered `(MA, MB, MC)`.
pub fn base_oracle(phi_sq: &Rational, height_bound: u32) -> Result<Vec<OracleHit>, OracleError> {
    base_oracle_in(ExecMode::auto(), phi_sq, height_bound)
}

/// [`base_oracle`] with an explicit execution mode.
pub fn base_oracle_in(
    mode: ExecMode,
    phi_sq: &Rational,
    height_bound: u32,
) -> Result<Vec<OracleHit>, OracleError> {
    if !phi_sq.is_positive() {
        return Err(OracleError::BaseParamOutOfRange(phi_sq.to_string()));
    }
    let one = Rational::one();
    let two = Rational::int(2);
    let four = Rational::int(4);
    let theta_sq = ExactReal::Rat(phi_sq + &one);
    let candidates = enumerate::nonneg_up_to(height_bound);
    let hits = flat_map_ordered(mode, &candidates, |r| {
        let mut out = Vec::new();
        for s in &candidates {
            let x0 = (r.square() - s.square()) / &four;
            let e = r.square() - (&x0 + &one).square();
            if e.is_negative() {
                continue;
            }
            let Some(tau) = (phi_sq * &e).sqrt() else {
                continue;
            };
            let base = x0.square() + phi_sq + &e;
            for phi_y in [-&tau, tau.clone()] {
                if phi_y.is_zero() && tau.is_positive() {
                    continue;
                }
                let a_sq = &base - &two * &phi_y;
                if a_sq.is_negative() {
                    continue;
                }
                let Some(a_dist) = a_sq.sqrt() else {
                    continue;
                };
                out.push(OracleHit {
                    family: Family::Base,
                    triangle_param: theta_sq.clone(),
                    distances: (a_dist, r.clone(), s.clone()),
                    source: (r.clone(), s.clone()),
                });
                if tau.is_zero() {
                    break;
                }
            }
        }
        out
    });
    debug_assert!(hits.iter().all(|h| verify_base_hit(phi_sq, h)));
    Ok(hits)
}

/// Re-checks a base hit from scratch against the distance equations.
pub fn verify_base_hit(phi_sq: &Rational, hit: &OracleHit) -> bool {
    let one = Rational::one();
    let two = Rational::int(2);
    let four = Rational::int(4);
    let (ma, mb, mc) = &hit.distances;
    if ma.is_negative() || mb.is_negative() || mc.is_negative() {
        return false;
    }
    let x0 = (mb.square() - mc.square()) / &four;
    let e = mb.square() - (&x0 + &one).square();
    if e.is_negative() {
        return false;
    }
    if (&x0 - &one).square() + &e != mc.square() {
        return false;
    }
    // MA² = x₀² + Φ² + e − 2Φy with (Φy)² = Φ²e.
    let phi_y = (x0.square() + phi_sq + &e - ma.square()) / &two;
    phi_y.square() == phi_sq * e
}

/// Report of the apex witness sweep: every witness of height at most the
/// bound realizes a `θ²` that [`apex::decide`] must accept with an exactly
/// regenerating witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub bound: u32,
    pub cases: u64,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Sweeps all apex witnesses `(p, q, s)` with `height(p), height(q) ≤ bound`
/// and checks both directions of the characterization: the realized `θ²` is
/// declared suitable, and the returned witness regenerates it canonically.
pub fn witness_sweep_equivalence(height_bound: u32) -> SweepReport {
    witness_sweep_equivalence_in(ExecMode::auto(), height_bound)
}

/// [`witness_sweep_equivalence`] with an explicit execution mode.
pub fn witness_sweep_equivalence_in(mode: ExecMode, height_bound: u32) -> SweepReport {
    let params = enumerate::unit_interval_up_to(height_bound);
    let results = flat_map_ordered(mode, &params, |p| {
        let mut local: Vec<Result<u64, String>> = Vec::new();
        let mut count = 0u64;
        for q in &params {
            for sign in [Sign::Plus, Sign::Minus] {
                count += 1;
                let w = ApexWitness::new(p.clone(), q.clone(), sign)
                    .expect("enumerated parameters lie in [-1, 1]");
                let theta_sq = w.realized_theta_sq();
                let t = match ApexTriangle::new(theta_sq.clone()) {
                    Ok(t) => t,
                    Err(e) => {
                        local.push(Err(format!("witness {w:?}: realized θ² rejected: {e}")));
                        continue;
                    }
                };
                match apex::decide(&t) {
                    ApexDecision::Suitable { witness, .. } => {
                        let regen = witness.realized_theta_sq();
                        if regen != theta_sq {
                            local.push(Err(format!(
                                "witness {w:?}: decide returned {witness:?} regenerating {regen} ≠ {theta_sq}"
                            )));
                        }
                    }
                    ApexDecision::NotSuitable { reason } => {
                        local.push(Err(format!(
                            "witness {w:?} realizes {theta_sq} but decide said not suitable: {reason}"
                        )));
                    }
                }
            }
        }
        local.push(Ok(count));
        local
    });
    let mut cases = 0u64;
    let mut counterexamples = Vec::new();
    for r in results {
        match r {
            Ok(n) => cases += n,
            Err(msg) => counterexamples.push(msg),
        }
    }
    SweepReport {
        bound: height_bound,
        cases,
        counterexamples,
    }
}
