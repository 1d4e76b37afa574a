use std::cmp::Ordering;

use super::*;
use crate::exact::bounds::Bounds;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn tri(s: &str) -> ApexTriangle {
    ApexTriangle::new(s.parse().unwrap()).unwrap()
}

fn wit(p: Rational, q: Rational, s: Sign) -> ApexWitness {
    ApexWitness::new(p, q, s).unwrap()
}

#[test]
fn triangle_range_check() {
    assert!(ApexTriangle::new("9/2".parse().unwrap()).is_err());
    assert!(ApexTriangle::new("-1/4".parse().unwrap()).is_err());
    // 2+√3 < 4 and 2+√5 > 4: exact comparisons on surds.
    assert!(ApexTriangle::new("2+sqrt(3)".parse().unwrap()).is_ok());
    assert!(ApexTriangle::new("2+sqrt(5)".parse().unwrap()).is_err());
}

#[test]
fn decide_rational_is_always_suitable() {
    let t = tri("1");
    match decide(&t) {
        ApexDecision::Suitable { witness, route } => {
            assert_eq!(route, ApexRoute::Rational);
            assert_eq!(witness, wit(r(-1, 2), r(1, 1), Sign::Plus));
            assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
        }
        other => panic!("expected suitable, got {other:?}"),
    }
}

#[test]
fn decide_degenerate_corners() {
    for (s, expect) in [("0", wit(r(1, 1), r(-1, 1), Sign::Plus)), ("4", wit(r(1, 1), r(1, 1), Sign::Plus))] {
        let t = tri(s);
        match decide(&t) {
            ApexDecision::Suitable { witness, .. } => {
                assert_eq!(witness, expect);
                assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
            }
            other => panic!("expected suitable, got {other:?}"),
        }
    }
}

#[test]
fn decide_two_plus_sqrt3() {
    // f(t) = t² − t/4 has roots {0, 1/4}; both are squares in [0,1].
    let t = tri("2+sqrt(3)");
    match decide(&t) {
        ApexDecision::Suitable { witness, route } => {
            assert_eq!(route, ApexRoute::Surd);
            assert_eq!(witness, wit(r(1, 2), r(0, 1), Sign::Plus));
            assert_eq!(&witness.realized_theta_sq(), t.theta_sq());
        }
        other => panic!("expected suitable, got {other:?}"),
    }
}

#[test]
fn decide_two_plus_sqrt2_fails_square_test() {
    // Roots {0, 1/2}; 1/2 is rational, in range, but not a square.
    let t = tri("2+sqrt(2)");
    match decide(&t) {
        ApexDecision::NotSuitable { reason } => {
            assert_eq!(reason, UnsuitableReason::RootNotSquare(r(1, 2)));
        }
        other => panic!("expected not suitable, got {other:?}"),
    }
}

#[test]
fn decide_one_plus_sqrt5_has_no_real_roots() {
    // f(t) = t² + 1/4: discriminant −1.
    let t = tri("1+sqrt(5)");
    match decide(&t) {
        ApexDecision::NotSuitable { reason } => {
            assert_eq!(reason, UnsuitableReason::NegativeDiscriminant);
        }
        other => panic!("expected not suitable, got {other:?}"),
    }
}

#[test]
fn collinear_points_worked_examples() {
    // θ² = 1 (a = 1/2), ψ = 3 → x = 8/5, distances (8/5, 3/5, 7/5).
    let t = tri("1");
    let pts = collinear_points(&t, &[r(3, 1)]).unwrap();
    assert_eq!(pts[0].distances(), (r(8, 5), r(3, 5), r(7, 5)));
    assert!(pts[0].on_line_ab);
    assert!(verify_certificate(&t, &pts[0]));

    // ψ = 0 lands on the vertex B.
    let pts = collinear_points(&t, &[r(0, 1)]).unwrap();
    assert_eq!(pts[0].distances(), (r(1, 1), r(0, 1), r(1, 1)));

    // θ² = 2 (a = 0), ψ = 2 → (3/4, 1/4, 5/4).
    let t2 = tri("2");
    let pts = collinear_points(&t2, &[r(2, 1)]).unwrap();
    assert_eq!(pts[0].distances(), (r(3, 4), r(1, 4), r(5, 4)));
}

#[test]
fn collinear_points_rejects_excluded_parameters() {
    let t = tri("1"); // a = 1/2
    for bad in [r(1, 2), r(1, 1), r(-1, 1)] {
        assert!(matches!(
            collinear_points(&t, &[bad.clone()]),
            Err(ApexError::ExcludedParameter(x)) if x == bad
        ));
    }
}

#[test]
fn rst_solver_examples() {
    assert_eq!(
        rst_from_projections(&r(1, 2), &r(0, 1)).unwrap(),
        (r(15, 8), r(13, 8), r(17, 8))
    );
    assert_eq!(
        rst_from_projections(&r(-1, 2), &r(0, 1)).unwrap(),
        (r(-15, 8), r(-13, 8), r(-17, 8))
    );
    assert_eq!(
        rst_from_projections(&r(1, 1), &r(0, 1)).unwrap(),
        (r(3, 4), r(1, 4), r(5, 4))
    );
    assert!(rst_from_projections(&r(1, 2), &r(-1, 2)).is_err());
    assert!(rst_from_projections(&r(1, 1), &r(-1, 1)).is_err());
}

#[test]
fn construct_worked_example() {
    // θ² = 2+√3, witness (1/2, 0, +) → M(15/16, 15√3/16),
    // distances (15/8, 13/8, 17/8).
    let t = tri("2+sqrt(3)");
    let w = wit(r(1, 2), r(0, 1), Sign::Plus);
    let certs = construct_points(&t, &w, 3).unwrap();
    assert_eq!(certs.len(), 1);
    let c = &certs[0];
    assert_eq!((c.dist_a.clone(), c.dist_b.clone(), c.dist_c.clone()), (r(-15, 8), r(-13, 8), r(-17, 8)));
    assert_eq!(c.distances(), (r(15, 8), r(13, 8), r(17, 8)));
    assert_eq!(c.u, r(15, 16));
    assert_eq!(c.v, r(0, 1));
    assert_eq!(c.coord_x, r(15, 16));
    assert_eq!(c.coord_y, "15/16*sqrt(3)".parse().unwrap());
    assert!(!c.on_line_ab);
    assert!(verify_certificate(&t, c));
}

#[test]
fn construct_delegates_when_cosine_is_rational() {
    // Witness (1/2, 1/2, −) realizes θ² = 1 with p₀+q₀ = 0.
    let t = tri("1");
    let w = wit(r(1, 2), r(1, 2), Sign::Minus);
    assert_eq!(&w.realized_theta_sq(), t.theta_sq());
    let certs = construct_points(&t, &w, 3).unwrap();
    assert_eq!(certs.len(), 3);
    assert!(certs.iter().all(|c| c.on_line_ab));
    // First Stern–Brocot survivor (ψ = 0) is the vertex B.
    assert_eq!(certs[0].distances(), (r(1, 1), r(0, 1), r(1, 1)));
    for c in &certs {
        assert!(verify_certificate(&t, c));
    }
}

#[test]
fn construct_rejects_degenerate_triangles() {
    let t = tri("4");
    let w = wit(r(1, 1), r(1, 1), Sign::Plus);
    assert!(matches!(
        construct_points(&t, &w, 1),
        Err(ApexError::DegenerateTriangle)
    ));
}

#[test]
fn construct_rejects_mismatched_witness() {
    let t = tri("2+sqrt(3)");
    let w = wit(r(1, 3), r(0, 1), Sign::Plus);
    assert!(matches!(
        construct_points(&t, &w, 1),
        Err(ApexError::WitnessMismatch)
    ));
}

#[test]
fn construct_full_surd_cosine_has_exact_ordinate() {
    // Witness (1/2, 1/3, +): cos w = −1/6 − √(2/3) is a full surd, yet the
    // ordinate collapses to ±√(R²−u²).
    let w = wit(r(1, 2), r(1, 3), Sign::Plus);
    let t = ApexTriangle::new(w.realized_theta_sq()).unwrap();
    let certs = construct_points(&t, &w, 1).unwrap();
    let c = &certs[0];
    assert_eq!(c.u, r(119, 48));
    // ρ = +119√3/48 (the sign of v − u·cos w is positive here).
    assert_eq!(c.coord_y, "119/48*sqrt(3)".parse().unwrap());
    assert_eq!(c.coord_y.sign(), Ordering::Greater);
    assert!(verify_certificate(&t, c));
}

#[test]
fn extract_witness_round_trips_the_worked_example() {
    let t = tri("2+sqrt(3)");
    let w = extract_witness(&t, &r(-15, 8), &r(-13, 8), &r(-17, 8)).unwrap();
    assert_eq!(w, wit(r(1, 2), r(0, 1), Sign::Plus));
}

#[test]
fn extract_witness_vertex_case() {
    let t = tri("1");
    let w = extract_witness(&t, &r(1, 1), &r(0, 1), &r(1, 1)).unwrap();
    assert_eq!(&w.realized_theta_sq(), t.theta_sq());
}

#[test]
fn extract_witness_rejects_bad_triples() {
    let t = tri("2+sqrt(3)");
    assert!(matches!(
        extract_witness(&t, &r(1, 1), &r(1, 1), &r(1, 1)),
        Err(ApexError::RelationViolated)
    ));
    assert!(matches!(
        extract_witness(&t, &r(0, 1), &r(1, 1), &r(1, 1)),
        Err(ApexError::ZeroApexDistance)
    ));
}

#[test]
fn locus_worked_example() {
    let t = tri("2+sqrt(3)");
    let w = wit(r(1, 2), r(0, 1), Sign::Plus);
    let report = locus_lines(&t, &w).unwrap();
    let sqrt3: RadicalSum = "sqrt(3)".parse().unwrap();
    let neg_sqrt3 = sqrt3.negate();
    assert_eq!(report.candidates.len(), 3);
    for line in [
        LocusLine::Vertical,
        LocusLine::Slope(sqrt3.clone()),
        LocusLine::Slope(neg_sqrt3),
    ] {
        assert!(report.candidates.contains(&line), "missing {line}");
    }
    // Symmetric pair {y = √3·x, x = 0}: the mirror of the vertical line has
    // slope −a/b = √3 here.
    assert_eq!(report.pair, [LocusLine::Slope(sqrt3), LocusLine::Vertical]);
    assert!(report.reconstructed_pairing);

    // The constructed point M(15/16, 15√3/16) lies on y = √3·x (and the
    // vertical line does not contain it).
    let cert = &construct_points(&t, &w, 1).unwrap()[0];
    assert!(certificate_on_line(cert, &report.pair[0]));
    assert!(!certificate_on_line(cert, &report.pair[1]));
}

#[test]
fn locus_rejects_rational_theta_sq() {
    let t = tri("1");
    let w = wit(r(-1, 2), r(1, 1), Sign::Plus);
    assert!(matches!(locus_lines(&t, &w), Err(ApexError::RationalThetaSq)));
}

/// Enclosure of a slope (or of the vertical direction) for the numeric
/// reflection cross-check.
fn slope_bounds(line: &LocusLine, digits: u32) -> Option<Bounds> {
    match line {
        LocusLine::Vertical => None,
        LocusLine::Slope(k) => Some(k.bounds(digits)),
    }
}

/// Certified-interval check that `pair[1]` is the reflection of `pair[0]`
/// through the apex-angle bisector: reflected slope is (b − ma)/(a + mb),
/// the vertical line maps to slope −a/b and appears where a + mb = 0.
fn assert_pair_is_mirror(t: &ApexTriangle, pair: &[LocusLine; 2]) {
    // Enclosures are ~200 digits wide; equal real values make the difference
    // interval straddle zero, while a wrong pairing misses by O(1).
    let digits = 200;
    let a = t.cos_apex().to_radical_sum().bounds(digits);
    let b_sq = Bounds::exact(Rational::one()).sub(&a.mul(&a));
    assert!(b_sq.lo.is_positive(), "sin²w > 0 for nondegenerate triangles");
    let b = b_sq.sqrt(digits);
    match (slope_bounds(&pair[0], digits), slope_bounds(&pair[1], digits)) {
        (Some(m), Some(m2)) => {
            // Reflected slope is (b − ma)/(a + mb); compare by
            // cross-multiplication to dodge the denominator's sign analysis.
            let lhs = b.sub(&m.mul(&a));
            let rhs = a.add(&m.mul(&b)).mul(&m2);
            assert!(lhs.sub(&rhs).contains_zero(), "reflection mismatch in {pair:?}");
        }
        (Some(m), None) | (None, Some(m)) => {
            // One line vertical: the other must satisfy a + m·b = 0, i.e.
            // m = −a/b, the mirror of the vertical line.
            let den = a.add(&m.mul(&b));
            assert!(den.contains_zero(), "vertical reflection mismatch in {pair:?}");
        }
        (None, None) => panic!("both locus lines vertical"),
    }
}

#[test]
fn locus_pair_reflection_cross_check() {
    // Over all witnesses of height ≤ 4 with irrational θ², the selected pair
    // must be symmetric through the bisector (checked to ~160 digits), and
    // the constructed point must lie on the pair exactly.
    let params = crate::enumerate::unit_interval_up_to(4);
    let mut checked = 0;
    for p in &params {
        for q in &params {
            for sign in [Sign::Plus, Sign::Minus] {
                let w = wit(p.clone(), q.clone(), sign);
                let theta_sq = w.realized_theta_sq();
                if theta_sq.is_rational() {
                    continue;
                }
                let t = ApexTriangle::new(theta_sq).unwrap();
                let report = locus_lines(&t, &w).unwrap();
                assert_pair_is_mirror(&t, &report.pair);
                let certs = construct_points(&t, &w, 1).unwrap();
                for cert in &certs {
                    assert!(
                        report.pair.iter().any(|l| certificate_on_line(cert, l)),
                        "constructed point off the symmetric pair for witness {w:?}"
                    );
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 150, "sweep too small: {checked}");
}
