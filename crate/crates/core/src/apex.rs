//! Triangles `(1, θ, 1)`: two unit legs meeting at the apex `A`, base
//! `0 ≤ θ ≤ 2`. Coordinates put `A(0,0)`, `B(1,0)`, `C(a,b)` with
//! `a = cos w = 1 − θ²/2` and `b = sin w > 0` for the apex angle `w`.
//!
//! Suitability — the existence of a point `M ≠ A` at rational distance from
//! all three vertices — is characterized by
//! `θ² = 2(1 + pq ± √((1−p²)(1−q²)))` for rationals `p, q ∈ [−1, 1]`;
//! [`decide`] settles it for any exact `θ²`, [`construct_points`] produces
//! certified points, [`extract_witness`] recovers `(p, q, ±)` from a known
//! rational distance triple, and [`locus_lines`] gives the two concurrent
//! lines through the apex that carry every solution point when `θ²` is
//! irrational.
//!
//! Every certificate is checked against the quadratic identity
//! `R²a² + u² + v² = R² + 2auv` (with `u = (R²−S²+1)/2`, `v = (R²−T²+1)/2`)
//! in exact arithmetic — in ℚ when `a` is rational, in ℚ(√D) otherwise.

use std::cmp::Ordering;

use thiserror::Error;

use crate::enumerate;
use crate::exact::quad::QuadNum;
use crate::exact::radical::RadicalSum;
use crate::exact::rational::Rational;
use crate::exact::real::ExactReal;
use crate::exact::sign::Sign;
use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApexError {
    #[error("θ² must lie in [0, 4], got {0}")]
    ThetaSqOutOfRange(String),
    #[error("triangle is degenerate (θ² ∈ {{0, 4}})")]
    DegenerateTriangle,
    #[error("witness does not realize this triangle's θ²")]
    WitnessMismatch,
    #[error("witness parameters must lie in [-1, 1] (and p+q ≠ 0, |p−q| ≠ 2 where required)")]
    WitnessOutOfRange,
    #[error("apex distance must be nonzero (the apex itself is disregarded)")]
    ZeroApexDistance,
    #[error("distance triple violates the exact quadratic identity for this triangle")]
    RelationViolated,
    #[error("sweep parameter {0} is excluded (ψ ∉ {{cos w, 1, -1}})")]
    ExcludedParameter(Rational),
    #[error("operation requires rational θ²")]
    IrrationalThetaSq,
    #[error("operation requires irrational θ² (solution points need not lie on lines otherwise)")]
    RationalThetaSq,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The triangle `(1, θ, 1)`, stored by its exact `θ² ∈ [0, 4]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexTriangle {
    theta_sq: ExactReal,
}

impl ApexTriangle {
    pub fn new(theta_sq: ExactReal) -> Result<ApexTriangle, ApexError> {
        if theta_sq.sign() == Ordering::Less
            || theta_sq.cmp_rational(&Rational::int(4)) == Ordering::Greater
        {
            return Err(ApexError::ThetaSqOutOfRange(theta_sq.to_string()));
        }
        Ok(ApexTriangle { theta_sq })
    }

    pub fn theta_sq(&self) -> &ExactReal {
        &self.theta_sq
    }

    /// `cos w = 1 − θ²/2` for the apex angle `w`.
    pub fn cos_apex(&self) -> ExactReal {
        self.theta_sq
            .scale(&Rational::new(-1, 2))
            .add_rational(&Rational::one())
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.theta_sq.as_rational(), Some(v) if v.is_zero() || *v == Rational::int(4))
    }
}

/// A witness `(p, q, s)` with `p, q ∈ [−1, 1]` realizing
/// `θ² = 2(1 + pq + s·√((1−p²)(1−q²)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexWitness {
    pub p: Rational,
    pub q: Rational,
    pub sign: Sign,
}

impl ApexWitness {
    pub fn new(p: Rational, q: Rational, sign: Sign) -> Result<ApexWitness, ApexError> {
        let one = Rational::one();
        if p.abs() > one || q.abs() > one {
            return Err(ApexError::WitnessOutOfRange);
        }
        Ok(ApexWitness { p, q, sign })
    }

    /// The exact `θ²` this witness realizes.
    pub fn realized_theta_sq(&self) -> ExactReal {
        let one = Rational::one();
        let rat = Rational::int(2) * (&one + &self.p * &self.q);
        let d = (&one - self.p.square()) * (&one - self.q.square());
        ExactReal::new(rat, self.sign, Rational::int(4) * d)
            .expect("radicand (1-p²)(1-q²) is nonnegative on [-1,1]²")
    }

    /// The same data in cosine form: `cos w = p₀q₀ + σ·√((1−p₀²)(1−q₀²))`
    /// with `(p₀, q₀, σ) = (−p, q, −s)` (the witness set is closed under
    /// negation).
    pub fn cos_form(&self) -> (Rational, Rational, Sign) {
        (-&self.p, self.q.clone(), -self.sign)
    }
}

/// Which branch settled a [`decide`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApexRoute {
    /// `θ² ∈ ℚ`: always suitable, witness has a degenerate radical.
    Rational,
    /// `θ² = A ± √B` irrational: root test on
    /// `f(t) = t² − ((A−2)²+4−B)/4·t + (A−2)²/4`.
    Surd,
}

/// Why an irrational `θ²` fails the root test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnsuitableReason {
    /// `f(t)` has no real roots.
    NegativeDiscriminant,
    /// The roots of `f(t)` are irrational.
    IrrationalRoots,
    /// A root lies outside `[0, 1]`.
    RootOutOfRange(Rational),
    /// A root is not a rational square.
    RootNotSquare(Rational),
}

impl std::fmt::Display for UnsuitableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnsuitableReason::NegativeDiscriminant => {
                write!(f, "negative discriminant: no real roots")
            }
            UnsuitableReason::IrrationalRoots => write!(f, "irrational roots"),
            UnsuitableReason::RootOutOfRange(t) => write!(f, "root {t} outside [0, 1]"),
            UnsuitableReason::RootNotSquare(t) => write!(f, "root {t} is not a rational square"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApexDecision {
    Suitable {
        witness: ApexWitness,
        route: ApexRoute,
    },
    NotSuitable {
        reason: UnsuitableReason,
    },
}

/// Decides suitability of `(1, θ, 1)` and, on success, returns a witness
/// that regenerates `θ²` exactly. Deterministic, including the witness
/// choice.
pub fn decide(t: &ApexTriangle) -> ApexDecision {
    match t.theta_sq() {
        ExactReal::Rat(v) => {
            let witness = if v.is_zero() {
                ApexWitness::new(Rational::one(), -Rational::one(), Sign::Plus)
            } else if *v == Rational::int(4) {
                ApexWitness::new(Rational::one(), Rational::one(), Sign::Plus)
            } else {
                // q = 1 kills the radical and 2(1 + p) = θ² at p = θ²/2 − 1.
                ApexWitness::new(
                    v / Rational::int(2) - Rational::one(),
                    Rational::one(),
                    Sign::Plus,
                )
            }
            .expect("rational-route witness parameters lie in [-1, 1]");
            debug_assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
            ApexDecision::Suitable {
                witness,
                route: ApexRoute::Rational,
            }
        }
        ExactReal::Surd {
            a: big_a,
            sign,
            b: big_b,
        } => {
            // θ² = A + s√B is suitable iff both roots of
            // f(t) = t² − ((A−2)²+4−B)/4 · t + (A−2)²/4
            // are rational squares in [0, 1]; the roots are then {p², q²}.
            let two = Rational::int(2);
            let four = Rational::int(4);
            let am2 = big_a - &two;
            let pq = &am2 / &two;
            let trace = (am2.square() + &four - big_b) / &four;
            let det = am2.square() / &four;
            let disc = trace.square() - &four * &det;
            if disc.is_negative() {
                return ApexDecision::NotSuitable {
                    reason: UnsuitableReason::NegativeDiscriminant,
                };
            }
            let Some(sqrt_disc) = disc.sqrt() else {
                return ApexDecision::NotSuitable {
                    reason: UnsuitableReason::IrrationalRoots,
                };
            };
            let t1 = (&trace + &sqrt_disc) / &two;
            let t2 = (&trace - &sqrt_disc) / &two;
            for root in [&t2, &t1] {
                if root.is_negative() || *root > Rational::one() {
                    return ApexDecision::NotSuitable {
                        reason: UnsuitableReason::RootOutOfRange((*root).clone()),
                    };
                }
            }
            let Some(p) = t1.sqrt() else {
                return ApexDecision::NotSuitable {
                    reason: UnsuitableReason::RootNotSquare(t1),
                };
            };
            let Some(q_abs) = t2.sqrt() else {
                return ApexDecision::NotSuitable {
                    reason: UnsuitableReason::RootNotSquare(t2),
                };
            };
            // p = +√t₁; the sign of q makes pq = (A−2)/2.
            let q = if pq.is_negative() { -q_abs } else { q_abs };
            let witness =
                ApexWitness::new(p, q, *sign).expect("roots in [0,1] bound the witness");
            debug_assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
            ApexDecision::Suitable {
                witness,
                route: ApexRoute::Surd,
            }
        }
    }
}

/// A certified rational-distance point for `(1, θ, 1)`.
///
/// `dist_a/b/c` are the signed distance parameters produced by the
/// constructions; the actual distances `MA, MB, MC` are their absolute
/// values ([`ApexCertificate::distances`]). `u = (R²−S²+1)/2` and
/// `v = (R²−T²+1)/2` always hold, and `u` is also the abscissa of `M`.
///
/// The ordinate is exact in every case: the point lies on the circle of
/// radius `|R|` about the apex, so `ρ² = R² − u² ∈ ℚ` and
/// `ρ = sign(v − u·cos w)·√(R²−u²)` is a single radical term even when
/// `cos w` is a full surd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexCertificate {
    pub dist_a: Rational,
    pub dist_b: Rational,
    pub dist_c: Rational,
    pub u: Rational,
    pub v: Rational,
    pub coord_x: Rational,
    pub coord_y: RadicalSum,
    pub on_line_ab: bool,
}

impl ApexCertificate {
    /// `(MA, MB, MC)`.
    pub fn distances(&self) -> (Rational, Rational, Rational) {
        (self.dist_a.abs(), self.dist_b.abs(), self.dist_c.abs())
    }
}

fn uv_from_triple(
    dist_a: &Rational,
    dist_b: &Rational,
    dist_c: &Rational,
) -> (Rational, Rational) {
    let one = Rational::one();
    let two = Rational::int(2);
    let r_sq = dist_a.square();
    let u = (&r_sq - dist_b.square() + &one) / &two;
    let v = (&r_sq - dist_c.square() + &one) / &two;
    (u, v)
}

/// Checks the exact quadratic identity `R²a² + u² + v² = R² + 2auv` for the
/// triangle's `a = cos w`, with `u, v` derived from the triple.
pub fn relation_holds(
    t: &ApexTriangle,
    dist_a: &Rational,
    dist_b: &Rational,
    dist_c: &Rational,
) -> bool {
    let (u, v) = uv_from_triple(dist_a, dist_b, dist_c);
    let r_sq = dist_a.square();
    match t.cos_apex() {
        ExactReal::Rat(a) => {
            &r_sq * a.square() + u.square() + v.square()
                == &r_sq + Rational::int(2) * &a * &u * &v
        }
        ExactReal::Surd { a: ar, sign, b: d } => {
            let a = QuadNum::new(ar, sign.as_rational());
            let lhs = a.square(&d).scale(&r_sq);
            let lhs = QuadNum::new(lhs.x + u.square() + v.square(), lhs.y);
            let rhs = a.scale(&(Rational::int(2) * &u * &v));
            let rhs = QuadNum::new(rhs.x + r_sq, rhs.y);
            lhs == rhs
        }
    }
}

/// Verifies a certificate from scratch: `u`/`v` consistency, the `u² ≤ R²`,
/// `v² ≤ R²` bounds, and the exact quadratic identity.
pub fn verify_certificate(t: &ApexTriangle, cert: &ApexCertificate) -> bool {
    let (u, v) = uv_from_triple(&cert.dist_a, &cert.dist_b, &cert.dist_c);
    if u != cert.u || v != cert.v {
        return false;
    }
    let r_sq = cert.dist_a.square();
    if u.square() > r_sq || v.square() > r_sq {
        return false;
    }
    relation_holds(t, &cert.dist_a, &cert.dist_b, &cert.dist_c)
}

/// Rational-distance points on the line `AB` for rational `θ²`.
///
/// For each sweep parameter `ψ ∉ {cos w, ±1}` the point at signed abscissa
/// `x = (ψ²−1)/(2(ψ−a))` has all three distances rational:
/// `MA = |x|`, `MB = |x−1|`, `MC = |(ψ²−2aψ+1)/(2(ψ−a))|`.
pub fn collinear_points(
    t: &ApexTriangle,
    psis: &[Rational],
) -> Result<Vec<ApexCertificate>, ApexError> {
    let Some(a) = t.cos_apex().as_rational().cloned() else {
        return Err(ApexError::IrrationalThetaSq);
    };
    let one = Rational::one();
    let two = Rational::int(2);
    let mut out = Vec::with_capacity(psis.len());
    for psi in psis {
        if *psi == a || psi.abs() == one {
            return Err(ApexError::ExcludedParameter(psi.clone()));
        }
        let den = &two * (psi - &a);
        let x = (psi.square() - &one) / &den;
        let mc = (psi.square() - &two * &a * psi + &one) / &den;
        let cert = ApexCertificate {
            dist_a: x.abs(),
            dist_b: (&x - &one).abs(),
            dist_c: mc.abs(),
            u: x.clone(),
            v: &a * &x,
            coord_x: x,
            coord_y: RadicalSum::zero(),
            on_line_ab: true,
        };
        debug_assert!(verify_certificate(t, &cert));
        out.push(cert);
    }
    Ok(out)
}

/// The default sweep for [`collinear_points`]: the first `count` Stern–Brocot
/// rationals that survive the exclusions `ψ ∉ {cos w, ±1}`.
pub fn psi_sweep(t: &ApexTriangle, count: usize) -> Result<Vec<Rational>, ApexError> {
    let Some(a) = t.cos_apex().as_rational().cloned() else {
        return Err(ApexError::IrrationalThetaSq);
    };
    let one = Rational::one();
    Ok(enumerate::stern_brocot()
        .filter(|psi| *psi != a && psi.abs() != one)
        .take(count)
        .collect())
}

/// Solves for a rational triple `(R, S, T)` with `R ≠ 0` such that
/// `(R²−S²+1)/(2R) = p` and `(R²−T²+1)/(2R) = q`. Requires `p + q ≠ 0` and
/// `|p − q| ≠ 2`.
pub fn rst_from_projections(
    p: &Rational,
    q: &Rational,
) -> Result<(Rational, Rational, Rational), ApexError> {
    let four = Rational::int(4);
    if (p + q).is_zero() || (p - q).abs() == Rational::int(2) {
        return Err(ApexError::WitnessOutOfRange);
    }
    let den = &four * (p + q);
    let r = (&four - (p - q).square()) / &den;
    let s = (&four + Rational::int(2) * p * q - Rational::int(3) * p.square() + q.square()) / &den;
    let t = (&four + Rational::int(2) * p * q + p.square() - Rational::int(3) * q.square()) / &den;
    debug_assert_eq!(
        (r.square() - s.square() + Rational::one()) / (Rational::int(2) * &r),
        *p
    );
    debug_assert_eq!(
        (r.square() - t.square() + Rational::one()) / (Rational::int(2) * &r),
        *q
    );
    Ok((r, s, t))
}

/// Constructs certified solution points from a witness.
///
/// The witness is first moved to cosine form `(p₀, q₀, σ)`. When `p₀+q₀ = 0`
/// the cosine is rational and the `AB`-line sweep takes over (emitting
/// `count` points); otherwise the distance triple comes from
/// [`rst_from_projections`] and the single point is `M(u, ρ)` with `u = p₀R`,
/// `v = q₀R`, and `ρ` the solution of `ρ·sin w = v − u·cos w`, which picks
/// the sign among `±√(R²−u²)`.
pub fn construct_points(
    t: &ApexTriangle,
    w: &ApexWitness,
    count: usize,
) -> Result<Vec<ApexCertificate>, ApexError> {
    if t.is_degenerate() {
        return Err(ApexError::DegenerateTriangle);
    }
    if &w.realized_theta_sq() != t.theta_sq() {
        return Err(ApexError::WitnessMismatch);
    }
    let (p0, q0, sigma) = w.cos_form();
    if (&p0 + &q0).is_zero() {
        // cos w = −p₀² ± (1−p₀²) is rational here; sweep the AB line.
        let psis = psi_sweep(t, count)?;
        return collinear_points(t, &psis);
    }
    assert!(
        (&p0 - &q0).abs() != Rational::int(2),
        "|p0−q0| = 2 forces a degenerate triangle, excluded above"
    );
    let one = Rational::one();
    let (r, s, t3) = rst_from_projections(&p0, &q0)?;
    let u = &p0 * &r;
    let v = &q0 * &r;
    let d = (&one - p0.square()) * (&one - q0.square());
    let a = ExactReal::new(&p0 * &q0, sigma, d)?;
    let coord_y = ordinate(&u, &v, &a, &r);
    let on_line_ab = coord_y.is_zero();
    let cert = ApexCertificate {
        dist_a: r,
        dist_b: s,
        dist_c: t3,
        u: u.clone(),
        v,
        coord_x: u,
        coord_y,
        on_line_ab,
    };
    assert!(
        verify_certificate(t, &cert),
        "constructed certificate must satisfy the exact quadratic identity"
    );
    Ok(vec![cert])
}

/// The exact ordinate `ρ = sign(v − u·a)·√(R² − u²)`.
///
/// `ρ·sin w = v − u·cos w` determines the sign, and `ρ² = R² − u²` is
/// rational, so the value — nominally `(v − u·a)/√(1−a²)`, a degree-4
/// expression — always collapses to one radical term.
fn ordinate(u: &Rational, v: &Rational, a: &ExactReal, dist_a: &Rational) -> RadicalSum {
    let num_sign = match a {
        ExactReal::Rat(ar) => (v - u * ar).cmp_zero(),
        ExactReal::Surd { a: ar, sign, b: d } => {
            QuadNum::new(v - u * ar, -(u * sign.as_rational()))
                .to_exact_real(d)
                .sign()
        }
    };
    let rho_sq = dist_a.square() - u.square();
    match num_sign {
        Ordering::Equal => {
            // v = u·a forces ρ = 0: the identity gives (R²−u²)·sin²w = 0.
            assert!(rho_sq.is_zero(), "vanishing ρ·sin w must mean ρ = 0");
            RadicalSum::zero()
        }
        Ordering::Greater => RadicalSum::from_sqrt(rho_sq).expect("ρ² ≥ 0"),
        Ordering::Less => RadicalSum::from_sqrt(rho_sq).expect("ρ² ≥ 0").negate(),
    }
}

/// Recovers a witness from a distance triple `(R, S, T)` (signed parameters
/// allowed, `R ≠ 0`) that satisfies the exact quadratic identity for `t`.
pub fn extract_witness(
    t: &ApexTriangle,
    dist_a: &Rational,
    dist_b: &Rational,
    dist_c: &Rational,
) -> Result<ApexWitness, ApexError> {
    if dist_a.is_zero() {
        return Err(ApexError::ZeroApexDistance);
    }
    if !relation_holds(t, dist_a, dist_b, dist_c) {
        return Err(ApexError::RelationViolated);
    }
    let (u, v) = uv_from_triple(dist_a, dist_b, dist_c);
    let p = &u / dist_a;
    let q = &v / dist_a;
    let one = Rational::one();
    // u² ≤ R², v² ≤ R² hold for any plane point, so p, q ∈ [−1, 1].
    assert!(p.abs() <= one && q.abs() <= one, "projections bounded by 1");
    let d = (&one - p.square()) * (&one - q.square());
    // cos w − pq = ±√d exactly (its square is the identity already checked);
    // read off the branch.
    let a_minus_pq = t.cos_apex().sub_rational(&(&p * &q));
    let sigma = match &a_minus_pq {
        ExactReal::Rat(r) if r.is_zero() => Sign::Plus,
        ExactReal::Rat(r) => Sign::of(r),
        ExactReal::Surd { sign, .. } => *sign,
    };
    debug_assert_eq!(
        a_minus_pq,
        ExactReal::new(Rational::zero(), sigma, d).unwrap()
    );
    let witness = ApexWitness::new(-p, q, -sigma)?;
    debug_assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
    Ok(witness)
}

/// A line through the apex `A(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocusLine {
    /// `x = 0`.
    Vertical,
    /// `y = k·x` with exact slope.
    Slope(RadicalSum),
}

impl std::fmt::Display for LocusLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LocusLine::Vertical => write!(f, "x=0"),
            LocusLine::Slope(k) => write!(f, "y=({k})*x"),
        }
    }
}

/// The locus of solution points for irrational `θ²`: candidates and the
/// symmetric pair through the apex-angle bisector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexLocusReport {
    /// Every line that can carry a solution point: `x = 0` when `p₀q₀ = 0`,
    /// plus `y = ±√(1−p₀²)/p₀·x` and `y = ±√(1−q₀²)/q₀·x` where defined.
    pub candidates: Vec<LocusLine>,
    /// The two lines, symmetric through the bisector, that contain all
    /// solution points.
    pub pair: [LocusLine; 2],
    /// The pairing rule is a reconstruction (the characterization leaves the
    /// symmetric-pair selection unstated); flagged for transparency.
    pub reconstructed_pairing: bool,
}

/// Line at angle `dir·arccos(x)` through the apex: vertical when `x = 0`,
/// otherwise slope `dir·√(1−x²)/x`.
fn angle_line(x: &Rational, dir: Sign) -> LocusLine {
    if x.is_zero() {
        return LocusLine::Vertical;
    }
    let radicand = Rational::one() - x.square();
    let coeff = dir.as_rational() / x;
    LocusLine::Slope(
        RadicalSum::new(Rational::zero(), vec![(coeff, radicand)]).expect("radicand ≥ 0"),
    )
}

/// The two-line locus for irrational `θ²`.
///
/// With `cos w = p₀q₀ + σ·√((1−p₀²)(1−q₀²))` and `φ₁, φ₂` the arccosines of
/// `p₀, q₀`, the apex angle is `w = |φ₁ − σφ₂|` (folded into `[0, π]` for
/// `σ = −1`), so the candidate pair whose angles sum to `w` mod π is selected
/// by rational comparisons alone — no approximation enters the choice.
pub fn locus_lines(t: &ApexTriangle, w: &ApexWitness) -> Result<ApexLocusReport, ApexError> {
    if t.theta_sq().is_rational() {
        return Err(ApexError::RationalThetaSq);
    }
    if &w.realized_theta_sq() != t.theta_sq() {
        return Err(ApexError::WitnessMismatch);
    }
    let (p0, q0, sigma) = w.cos_form();

    let mut candidates: Vec<LocusLine> = Vec::new();
    for x in [&p0, &q0] {
        let lines = if x.is_zero() {
            vec![LocusLine::Vertical]
        } else {
            vec![angle_line(x, Sign::Plus), angle_line(x, Sign::Minus)]
        };
        for l in lines {
            if !candidates.contains(&l) {
                candidates.push(l);
            }
        }
    }

    let pair = match sigma {
        Sign::Minus => {
            // w = φ₁ + φ₂ when that sum is ≤ π (⇔ p₀ + q₀ ≥ 0); otherwise
            // w = 2π − (φ₁ + φ₂) and both angles flip mod π.
            match (&p0 + &q0).cmp_zero() {
                Ordering::Greater => [angle_line(&p0, Sign::Plus), angle_line(&q0, Sign::Plus)],
                Ordering::Less => [angle_line(&p0, Sign::Minus), angle_line(&q0, Sign::Minus)],
                Ordering::Equal => unreachable!("p0 = −q0 makes the radical degenerate"),
            }
        }
        Sign::Plus => {
            // w = |φ₁ − φ₂|; arccos is strictly decreasing, so the sign of
            // φ₁ − φ₂ is the sign of q₀ − p₀.
            match q0.cmp(&p0) {
                Ordering::Greater => [angle_line(&p0, Sign::Plus), angle_line(&q0, Sign::Minus)],
                Ordering::Less => [angle_line(&p0, Sign::Minus), angle_line(&q0, Sign::Plus)],
                Ordering::Equal => unreachable!("p0 = q0 makes the radical degenerate"),
            }
        }
    };

    Ok(ApexLocusReport {
        candidates,
        pair,
        reconstructed_pairing: true,
    })
}

/// Exact containment of a certified point in a locus line, via
/// `ρ² = R² − u²` and the exact sign of `ρ` — no coordinate is approximated.
pub fn certificate_on_line(cert: &ApexCertificate, line: &LocusLine) -> bool {
    let u = &cert.u;
    let rho_sq = cert.dist_a.square() - u.square();
    let rho_sign = cert.coord_y.sign();
    match line {
        LocusLine::Vertical => u.is_zero(),
        LocusLine::Slope(k) => {
            if u.is_zero() {
                return false;
            }
            let k_sq = match k.square() {
                Ok(ExactReal::Rat(v)) => v,
                _ => unreachable!("slopes are single radical terms"),
            };
            if rho_sq != k_sq * u.square() {
                return false;
            }
            if rho_sq.is_zero() {
                return k.is_zero();
            }
            let expected = match (k.sign(), u.cmp_zero()) {
                (Ordering::Greater, Ordering::Greater) | (Ordering::Less, Ordering::Less) => {
                    Ordering::Greater
                }
                _ => Ordering::Less,
            };
            rho_sign == expected
        }
    }
}

#[cfg(test)]
mod tests;
