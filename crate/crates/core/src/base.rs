//! Triangles `(θ, 2, θ)`: base `2`, legs `θ ≥ 1`, coordinates `A(0, Φ)`,
//! `B(−1, 0)`, `C(1, 0)` with main altitude `Φ = √(θ² − 1) ≥ 0`.
//!
//! Suitability is characterized by
//! `Φ = ±√((p²−1)(1−q²)) ± √(r² − p²q²)` for rationals `p ≥ 1 ≥ q ≥ 0`,
//! `r ≥ pq`, the right side nonnegative. Solution points are
//! `M(±pq, ε√((p²−1)(1−q²)))` with distances `(r, |p+q|, |p−q|)` to
//! `A, B, C`, verified exactly through the Pythagorean identities
//! `(x₀±1)² + e = MB²/MC²` and `x₀² + f = MA²`.
//!
//! Whether a triangle with *irrational* `θ²` admits such a witness is not
//! decided here — that question is open — so the search over `(p, q, r)` is
//! bounded by height and answers `Found` or `NotFoundUpTo`, never "no".

use std::cmp::Ordering;

use thiserror::Error;

use crate::enumerate;
use crate::exact::radical::RadicalSum;
use crate::exact::rational::Rational;
use crate::exact::real::ExactReal;
use crate::exact::sign::Sign;
use crate::exact::ExactError;
use crate::exec::{flat_map_ordered, ExecMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("θ² must be at least 1 (legs no shorter than half the base), got {0}")]
    ThetaSqTooSmall(String),
    #[error("altitude must be nonnegative")]
    NegativeAltitude,
    #[error("altitude profile unsupported: {0}")]
    AltitudeProfile(String),
    #[error(
        "θ² − 1 = {0} has no exact two-radical altitude: √(θ²−1) is not of the form ε√a + ε'√b"
    )]
    AltitudeNotRepresentable(String),
    #[error("witness violates p ≥ 1 ≥ q ≥ 0 or r ≥ pq")]
    WitnessOutOfRange,
    #[error("witness realizes a different altitude (sign combination included)")]
    WitnessMismatch,
    #[error("operation requires rational Φ² > 0")]
    AltitudeSquareNotRational,
    #[error("need N·Φ² ≥ 2, got N = {0}")]
    ScaleTooSmall(u32),
    #[error("point data violates the Pythagorean identities (x₀±1)² + e = MB²/MC²")]
    PointInconsistent,
    #[error("e = 0 points sit on the base line; recover them through the rational-Φ² route")]
    OnBaseLine,
    #[error("e must be nonnegative, got {0}")]
    NegativeE(String),
    #[error("r² − x₀² must be nonnegative")]
    NegativeF,
    #[error("operation requires irrational θ²")]
    RationalThetaSq,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The triangle `(θ, 2, θ)`, stored by its exact altitude `Φ` (and the cached
/// `θ² = Φ² + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTriangle {
    phi: RadicalSum,
    theta_sq: ExactReal,
}

impl BaseTriangle {
    /// Builds the triangle from its altitude. The altitude must be
    /// nonnegative and must square to a quadratic value (at most two radical
    /// terms, rational part only alongside a single term).
    pub fn from_phi(phi: RadicalSum) -> Result<BaseTriangle, BaseError> {
        if phi.sign() == Ordering::Less {
            return Err(BaseError::NegativeAltitude);
        }
        let phi_sq = phi
            .square()
            .map_err(|e| BaseError::AltitudeProfile(e.to_string()))?;
        let theta_sq = phi_sq.add_rational(&Rational::one());
        Ok(BaseTriangle { phi, theta_sq })
    }

    /// Builds the triangle from `θ²`, denesting `Φ = √(θ²−1)`.
    ///
    /// For rational `θ²−1 = c` the altitude is `√c`. For `θ²−1 = c ± √d` the
    /// altitude denests into `√x ± √y` iff `c ≥ 0` and `c² − d` is a rational
    /// square `g²`, with `x, y = (c ± g)/2`; otherwise the altitude is not a
    /// two-radical sum and the triangle is out of this module's profile.
    pub fn from_theta_sq(theta_sq: ExactReal) -> Result<BaseTriangle, BaseError> {
        if theta_sq.cmp_rational(&Rational::one()) == Ordering::Less {
            return Err(BaseError::ThetaSqTooSmall(theta_sq.to_string()));
        }
        let phi_sq = theta_sq.sub_rational(&Rational::one());
        let phi = match &phi_sq {
            ExactReal::Rat(c) => RadicalSum::from_sqrt(c.clone())?,
            ExactReal::Surd { a: c, sign, b: d } => {
                let not_representable = || BaseError::AltitudeNotRepresentable(phi_sq.to_string());
                if c.is_negative() {
                    return Err(not_representable());
                }
                let g = (c.square() - d).sqrt().ok_or_else(not_representable)?;
                let two = Rational::int(2);
                let x = (c + &g) / &two;
                let y = (c - &g) / &two;
                RadicalSum::new(
                    Rational::zero(),
                    vec![(Rational::one(), x), (sign.as_rational(), y)],
                )?
            }
        };
        let t = BaseTriangle::from_phi(phi)?;
        debug_assert_eq!(t.theta_sq, theta_sq);
        Ok(t)
    }

    pub fn phi(&self) -> &RadicalSum {
        &self.phi
    }

    pub fn theta_sq(&self) -> &ExactReal {
        &self.theta_sq
    }
}

/// A witness `(p, q, r, ε, ε′)` with `p ≥ 1 ≥ q ≥ 0`, `r ≥ pq`, intended to
/// realize `Φ = ε√((p²−1)(1−q²)) + ε′√(r²−p²q²) ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseWitness {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub eps: Sign,
    pub eps_prime: Sign,
}

impl BaseWitness {
    pub fn new(
        p: Rational,
        q: Rational,
        r: Rational,
        eps: Sign,
        eps_prime: Sign,
    ) -> Result<BaseWitness, BaseError> {
        let one = Rational::one();
        if p < one || q > one || q.is_negative() || r < &p * &q {
            return Err(BaseError::WitnessOutOfRange);
        }
        let w = BaseWitness { p, q, r, eps, eps_prime };
        if w.realized_altitude().sign() == Ordering::Less {
            return Err(BaseError::NegativeAltitude);
        }
        Ok(w)
    }

    /// `e = (p²−1)(1−q²) ≥ 0`, the square of the ordinate component.
    pub fn e(&self) -> Rational {
        let one = Rational::one();
        (self.p.square() - &one) * (&one - self.q.square())
    }

    /// `f = r² − p²q² ≥ 0`, the square of the altitude remainder.
    pub fn f(&self) -> Rational {
        self.r.square() - self.p.square() * self.q.square()
    }

    /// `ε√e + ε′√f` as a canonical radical sum.
    pub fn realized_altitude(&self) -> RadicalSum {
        RadicalSum::new(
            Rational::zero(),
            vec![
                (self.eps.as_rational(), self.e()),
                (self.eps_prime.as_rational(), self.f()),
            ],
        )
        .expect("e, f ≥ 0 under the witness invariants")
    }
}

/// True iff the witness realizes the triangle's altitude exactly.
pub fn verify_witness(t: &BaseTriangle, w: &BaseWitness) -> bool {
    w.realized_altitude() == *t.phi()
}

/// A certified rational-distance point `M(x₀, ε√e)` for `(θ, 2, θ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePoint {
    pub x0: Rational,
    /// Square of the ordinate; the ordinate itself is `y_sign·√e`.
    pub e: Rational,
    pub y_sign: Sign,
    pub dist_a: Rational,
    pub dist_b: Rational,
    pub dist_c: Rational,
}

impl BasePoint {
    /// The exact ordinate `ε√e`.
    pub fn ordinate(&self) -> RadicalSum {
        RadicalSum::new(Rational::zero(), vec![(self.y_sign.as_rational(), self.e.clone())])
            .expect("e ≥ 0")
    }
}

/// Checks the Pythagorean identities of a point against the triangle:
/// `(x₀+1)² + e = MB²`, `(x₀−1)² + e = MC²`, and `x₀² + (Φ − ε√e)² = MA²`
/// where the last is evaluated exactly in radical arithmetic.
pub fn verify_point(t: &BaseTriangle, pt: &BasePoint) -> bool {
    let one = Rational::one();
    if (pt.x0.clone() + &one).square() + &pt.e != pt.dist_b.square() {
        return false;
    }
    if (pt.x0.clone() - &one).square() + &pt.e != pt.dist_c.square() {
        return false;
    }
    // MA² = x₀² + (Φ − y)², y = ε√e: expand (Φ − y)² = Φ² + e − 2·ε√e·Φ
    // exactly: Φ² + e − dist_a² + x₀² must equal 2·ε·√e·Φ, i.e. the radical
    // sum Φ·2ε√e minus that rational must normalize to zero.
    let phi_sq = match t.phi().square() {
        Ok(ExactReal::Rat(v)) => RadicalSum::from_rational(v),
        Ok(ExactReal::Surd { a, sign, b }) => {
            RadicalSum::new(a, vec![(sign.as_rational(), b)]).expect("b > 0")
        }
        Err(_) => return false,
    };
    let lhs = phi_sq
        .add_rational(&(pt.x0.square() + &pt.e - pt.dist_a.square()));
    // 2·ε√e·Φ: scale each radical term of Φ by √e — (c√m)·√e = c√(me) — and
    // the rational part R of Φ contributes R√e.
    let mut terms: Vec<(Rational, Rational)> = t
        .phi()
        .terms()
        .iter()
        .map(|term| (term.coeff.clone(), &term.radicand * &pt.e))
        .collect();
    terms.push((t.phi().rational_part().clone(), pt.e.clone()));
    let rhs = RadicalSum::new(Rational::zero(), terms)
        .expect("nonnegative radicands")
        .scale(&(Rational::int(2) * pt.y_sign.as_rational()));
    lhs == rhs
}

/// The solution points of a verified witness: `x₀ = ±pq` (one point when
/// `pq = 0`), ordinate `ε√e`, distances `(r, |x₀+1|-side, |x₀−1|-side)`.
pub fn construct_points(t: &BaseTriangle, w: &BaseWitness) -> Result<Vec<BasePoint>, BaseError> {
    if !verify_witness(t, w) {
        return Err(BaseError::WitnessMismatch);
    }
    let e = w.e();
    let pq = &w.p * &w.q;
    let p_plus_q = (&w.p + &w.q).abs();
    let p_minus_q = (&w.p - &w.q).abs();
    let mut out = Vec::with_capacity(2);
    // x₀ = +pq: MB = p+q, MC = |p−q|; the mirror swaps them.
    out.push(BasePoint {
        x0: pq.clone(),
        e: e.clone(),
        y_sign: w.eps,
        dist_a: w.r.clone(),
        dist_b: p_plus_q.clone(),
        dist_c: p_minus_q.clone(),
    });
    if !pq.is_zero() {
        out.push(BasePoint {
            x0: -&pq,
            e,
            y_sign: w.eps,
            dist_a: w.r.clone(),
            dist_b: p_minus_q,
            dist_c: p_plus_q,
        });
    }
    for pt in &out {
        assert!(
            verify_point(t, pt),
            "constructed point must satisfy the Pythagorean identities"
        );
    }
    Ok(out)
}

/// Rational-distance points on the base line for rational `Φ² = f > 0`:
/// `|x₀| = Nf − 1/(4N)` gives `MA = Nf + 1/(4N)` since
/// `(Nf − 1/(4N))² + f = (Nf + 1/(4N))²`. Returns the point and its mirror.
pub fn base_line_points(t: &BaseTriangle, n: u32) -> Result<Vec<BasePoint>, BaseError> {
    let f = match t.phi().square() {
        Ok(ExactReal::Rat(v)) if v.is_positive() => v,
        _ => return Err(BaseError::AltitudeSquareNotRational),
    };
    let n_rat = Rational::int(n as i64);
    let nf = &n_rat * &f;
    if nf < Rational::int(2) {
        return Err(BaseError::ScaleTooSmall(n));
    }
    let quarter = (Rational::int(4) * n_rat).recip();
    let x0 = &nf - &quarter;
    let dist_a = nf + quarter;
    let one = Rational::one();
    let pts = vec![
        BasePoint {
            x0: x0.clone(),
            e: Rational::zero(),
            y_sign: Sign::Plus,
            dist_a: dist_a.clone(),
            dist_b: (&x0 + &one).abs(),
            dist_c: (&x0 - &one).abs(),
        },
        BasePoint {
            x0: -&x0,
            e: Rational::zero(),
            y_sign: Sign::Plus,
            dist_a,
            dist_b: (-&x0 + &one).abs(),
            dist_c: (-&x0 - one).abs(),
        },
    ];
    for pt in &pts {
        assert!(verify_point(t, pt), "base-line point must verify exactly");
    }
    Ok(pts)
}

/// The canonical witness for rational `θ²` (the affirmative route): for
/// `Φ² = f > 0` take the minimal `N` with `Nf ≥ 2`; then
/// `(p, q, r) = (Nf − 1/(4N), 1, Nf + 1/(4N))` realizes `Φ = √f`. The
/// degenerate `Φ = 0` triangle gets `(1, 1, 1)` and no scale.
pub fn canonical_rational_witness(
    t: &BaseTriangle,
) -> Result<(BaseWitness, Option<u32>), BaseError> {
    let f = match t.phi().square() {
        Ok(ExactReal::Rat(v)) => v,
        _ => return Err(BaseError::AltitudeSquareNotRational),
    };
    if f.is_zero() {
        let one = Rational::one();
        let w = BaseWitness::new(one.clone(), one.clone(), one, Sign::Plus, Sign::Plus)
            .expect("degenerate witness is in range");
        return Ok((w, None));
    }
    // Minimal N ≥ 1 with N·f ≥ 2, i.e. N = ⌈2/f⌉.
    let two_over_f = Rational::int(2) / &f;
    let mut n = two_over_f.floor_int();
    if Rational::from_bigint(n.clone()) < two_over_f {
        n += 1;
    }
    let n: u32 = n.to_string().parse().expect("desk-scale N");
    let n = n.max(1);
    let n_rat = Rational::int(n as i64);
    let nf = &n_rat * &f;
    let quarter = (Rational::int(4) * n_rat).recip();
    let w = BaseWitness::new(
        &nf - &quarter,
        Rational::one(),
        nf + quarter,
        Sign::Plus,
        Sign::Plus,
    )
    .expect("N·f ≥ 2 keeps p ≥ 1");
    debug_assert!(verify_witness(t, &w));
    Ok((w, Some(n)))
}

/// Recovers a witness from a known point: ordinate square `e > 0`, distances
/// `dist_b`/`dist_c` to `B(−1,0)`/`C(1,0)` satisfying the Pythagorean
/// identities, and apex distance `r`.
///
/// Factoring `e = αβ·…` with `α = S − (x₀−1)`, `β = R − (x₀+1)` forces
/// `p = ε/δ`, `q = 1 − δ/2` (δ = α−β, ε² = δ²+4αβ); the pair is normalized
/// to `p ≥ 1 ≥ q ≥ 0` and the signs are assembled to match the altitude.
pub fn extract_witness(
    t: &BaseTriangle,
    x0: &Rational,
    e: &Rational,
    dist_b: &Rational,
    dist_c: &Rational,
    dist_a: &Rational,
) -> Result<BaseWitness, BaseError> {
    if e.is_negative() {
        return Err(BaseError::NegativeE(e.to_string()));
    }
    if e.is_zero() {
        return Err(BaseError::OnBaseLine);
    }
    let one = Rational::one();
    if (x0 + &one).square() + e != dist_b.square()
        || (x0 - &one).square() + e != dist_c.square()
    {
        return Err(BaseError::PointInconsistent);
    }
    if dist_a.square() < x0.square() {
        return Err(BaseError::NegativeF);
    }
    let alpha = dist_c - (x0 - &one);
    let beta = dist_b - (x0 + &one);
    assert!(
        !alpha.is_zero() && !beta.is_zero(),
        "e ≠ 0 keeps both distance residues nonzero"
    );
    let delta = &alpha - &beta;
    assert!(!delta.is_zero(), "distance residues cannot coincide");
    let gamma = &alpha * &beta;
    let disc = delta.square() + Rational::int(4) * &gamma;
    // disc = (α+β)², so it is always a perfect square for rational inputs;
    // a failure here means the inputs did not come from a genuine point.
    let eps_root = disc.sqrt().ok_or(BaseError::PointInconsistent)?;
    let p_raw = &eps_root / &delta;
    let q_raw = &one - delta / Rational::int(2);
    debug_assert_eq!((p_raw.square() - &one) * (&one - q_raw.square()), *e);
    debug_assert_eq!((&p_raw * &q_raw).abs(), x0.abs());
    // e > 0 means exactly one of |p|, |q| exceeds 1; put it first.
    let (p, q) = if p_raw.abs() >= one {
        (p_raw.abs(), q_raw.abs())
    } else {
        (q_raw.abs(), p_raw.abs())
    };
    assert!(p >= one && q <= one, "normalization yields p ≥ 1 ≥ q");
    let r = dist_a.abs();
    let f = r.square() - p.square() * q.square();
    assert!(!f.is_negative(), "f = r² − p²q² ≥ 0 was prechecked");
    // Assemble signs to reproduce the altitude exactly.
    for eps in [Sign::Plus, Sign::Minus] {
        for eps_prime in [Sign::Plus, Sign::Minus] {
            if let Ok(w) = BaseWitness::new(p.clone(), q.clone(), r.clone(), eps, eps_prime) {
                if verify_witness(t, &w) {
                    return Ok(w);
                }
            }
        }
    }
    Err(BaseError::WitnessMismatch)
}

/// The two horizontal lines `y = ε√a` and `y = ε′√b` that contain every
/// solution point when `θ²` is irrational.
pub fn locus_lines(t: &BaseTriangle) -> Result<[RadicalSum; 2], BaseError> {
    if t.theta_sq().is_rational() {
        return Err(BaseError::RationalThetaSq);
    }
    let phi = t.phi();
    let mk_term = |term: &crate::exact::radical::RadicalTerm| {
        RadicalSum::new(
            Rational::zero(),
            vec![(term.coeff.clone(), term.radicand.clone())],
        )
        .expect("term radicand positive")
    };
    match phi.terms() {
        // Irrational θ² means Φ² ∉ ℚ: either two nondegenerate radicals, or
        // one radical plus a nonzero rational (degenerate) part.
        [t1, t2] => {
            debug_assert!(phi.rational_part().is_zero());
            Ok([mk_term(t1), mk_term(t2)])
        }
        [t1] => {
            debug_assert!(!phi.rational_part().is_zero());
            Ok([
                mk_term(t1),
                RadicalSum::from_rational(phi.rational_part().clone()),
            ])
        }
        _ => unreachable!("rational altitude squares to a rational θ²"),
    }
}

/// Outcome of the bounded witness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSearchOutcome {
    Found(BaseWitness),
    /// No witness with `height(p), height(q), height(r) ≤ bound`. Says
    /// nothing beyond the bound.
    NotFoundUpTo(u32),
}

/// Bounded-height witness search for the altitude of `t`.
///
/// Sweeps `(p, q)` with `p ≥ 1`, `0 ≤ q ≤ 1` in height order; for each sign
/// `ε` the remainder `Φ − ε√e` must be a single signed radical `ε′√f`, which
/// pins `f` and leaves only the rational-square test `r² = f + p²q²` and the
/// height check on `r` — equivalent to enumerating `(p, q, r)` triples, since
/// `r` is functionally determined, but quadratic instead of cubic in the
/// bound.
pub fn search_witness(t: &BaseTriangle, height_bound: u32) -> BaseSearchOutcome {
    search_witness_in(ExecMode::auto(), t, height_bound)
}

/// [`search_witness`] with an explicit execution mode.
pub fn search_witness_in(
    mode: ExecMode,
    t: &BaseTriangle,
    height_bound: u32,
) -> BaseSearchOutcome {
    let one = Rational::one();
    let ps: Vec<Rational> = enumerate::nonneg_up_to(height_bound)
        .into_iter()
        .filter(|p| *p >= one)
        .collect();
    let qs: Vec<Rational> = enumerate::nonneg_up_to(height_bound)
        .into_iter()
        .filter(|q| *q <= one)
        .collect();
    let hits = flat_map_ordered(mode, &ps, |p| {
        let mut found = Vec::new();
        for q in &qs {
            let e = (p.square() - &one) * (&one - q.square());
            let pq = p * q;
            for eps in [Sign::Plus, Sign::Minus] {
                let eps_term = RadicalSum::new(
                    Rational::zero(),
                    vec![(eps.as_rational(), e.clone())],
                )
                .expect("e ≥ 0");
                let rest = t.phi().sub(&eps_term);
                // rest must be ε′√f: a pure rational (f its square) or a
                // single radical term with zero rational part.
                let (eps_prime, f) = match (rest.as_rational(), rest.terms()) {
                    (Some(v), _) => {
                        let sgn = if v.is_negative() { Sign::Minus } else { Sign::Plus };
                        (sgn, v.square())
                    }
                    (None, [term]) if rest.rational_part().is_zero() => (
                        Sign::of(&term.coeff),
                        term.coeff.square() * &term.radicand,
                    ),
                    _ => continue,
                };
                let Some(r) = (f + pq.square()).sqrt() else {
                    continue;
                };
                if !r.height_le(height_bound) {
                    continue;
                }
                let Ok(w) = BaseWitness::new(p.clone(), q.clone(), r, eps, eps_prime) else {
                    continue;
                };
                if verify_witness(t, &w) {
                    found.push(w);
                }
            }
        }
        found
    });
    match hits.into_iter().next() {
        Some(w) => BaseSearchOutcome::Found(w),
        None => BaseSearchOutcome::NotFoundUpTo(height_bound),
    }
}
