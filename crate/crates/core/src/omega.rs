//! The set `Ω = {(p²−1)(q²−1) : p, q ∈ ℚ, p, q ≥ 0}`: exact evaluation,
//! bounded-height representation search, and the Pythagorean family of
//! representations of 1.

use thiserror::Error;

use crate::enumerate;
use crate::exact::rational::Rational;
use crate::exec::{flat_map_ordered, ExecMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("factors must be nonnegative, got {0}")]
    NegativeInput(Rational),
}

/// One representation `value = (p²−1)(q²−1)` with `0 ≤ p ≤ q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaRepresentation {
    pub p: Rational,
    pub q: Rational,
    pub value: Rational,
}

impl OmegaRepresentation {
    fn ordered(a: Rational, b: Rational, value: Rational) -> OmegaRepresentation {
        let (p, q) = if a <= b { (a, b) } else { (b, a) };
        OmegaRepresentation { p, q, value }
    }
}

/// `(p²−1)(q²−1)` for nonnegative rationals.
pub fn omega_value(p: &Rational, q: &Rational) -> Result<Rational, OmegaError> {
    for x in [p, q] {
        if x.is_negative() {
            return Err(OmegaError::NegativeInput(x.clone()));
        }
    }
    let one = Rational::one();
    Ok((p.square() - &one) * (q.square() - one))
}

/// All representations of `omega` with `height(p), height(q) ≤ height_bound`,
/// canonical factor order `p ≤ q`, deduplicated, sorted by
/// (max component height, p, q).
///
/// The enumeration is one-dimensional: `p` sweeps the nonnegative rationals
/// up to the bound and `q² = 1 + omega/(p²−1)` is tested for rational
/// squareness, so the cost is quadratic in the bound rather than quartic.
pub fn search_representations(omega: &Rational, height_bound: u32) -> Vec<OmegaRepresentation> {
    search_representations_in(ExecMode::auto(), omega, height_bound)
}

/// [`search_representations`] with an explicit execution mode.
pub fn search_representations_in(
    mode: ExecMode,
    omega: &Rational,
    height_bound: u32,
) -> Vec<OmegaRepresentation> {
    let candidates = enumerate::nonneg_up_to(height_bound);
    let one = Rational::one();
    let mut reps: Vec<OmegaRepresentation> = if omega.is_zero() {
        // Zero needs a factor p = 1 (or q = 1); pair 1 with every candidate.
        candidates
            .iter()
            .map(|c| OmegaRepresentation::ordered(c.clone(), Rational::one(), Rational::zero()))
            .collect()
    } else {
        flat_map_ordered(mode, &candidates, |p| {
            if p.is_one() {
                return Vec::new(); // p²−1 = 0 represents only ω = 0
            }
            let q_sq = &one + omega / (p.square() - &one);
            let Some(q) = q_sq.sqrt() else {
                return Vec::new();
            };
            if !q.height_le(height_bound) {
                return Vec::new();
            }
            vec![OmegaRepresentation::ordered(p.clone(), q, omega.clone())]
        })
    };
    reps.sort_by(|a, b| {
        let ha = a.p.height().max(a.q.height());
        let hb = b.p.height().max(b.q.height());
        ha.cmp(&hb).then_with(|| a.p.cmp(&b.p)).then_with(|| a.q.cmp(&b.q))
    });
    reps.dedup();
    reps
}

/// The first `count` representations of 1 arising from primitive Pythagorean
/// triples `(x, y, z) = (m²−n², 2mn, m²+n²)` as `(z/x, z/y)`, ordered by
/// `m` then `n`.
pub fn pythagorean_reps_of_one(count: usize) -> Vec<OmegaRepresentation> {
    let mut out = Vec::with_capacity(count);
    let mut m: u64 = 2;
    while out.len() < count {
        for n in 1..m {
            if out.len() >= count {
                break;
            }
            // Primitive triples: coprime parameters of opposite parity.
            if (m - n) % 2 == 1 && gcd(m, n) == 1 {
                let x = m * m - n * n;
                let y = 2 * m * n;
                let z = m * m + n * n;
                let p = Rational::new(z as i64, x as i64);
                let q = Rational::new(z as i64, y as i64);
                let rep = OmegaRepresentation::ordered(p, q, Rational::one());
                debug_assert_eq!(
                    omega_value(&rep.p, &rep.q).unwrap(),
                    Rational::one(),
                    "Pythagorean representation must evaluate to 1"
                );
                out.push(rep);
            }
        }
        m += 1;
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn value_examples() {
        assert_eq!(omega_value(&r(11, 5), &r(1, 2)).unwrap(), r(-72, 25));
        assert_eq!(omega_value(&r(0, 1), &r(0, 1)).unwrap(), r(1, 1));
        assert_eq!(omega_value(&r(1, 1), &r(7, 3)).unwrap(), r(0, 1));
        assert!(omega_value(&r(-1, 2), &r(0, 1)).is_err());
    }

    #[test]
    fn double_representation() {
        // The classic double representation of −72/25 — and a third one,
        // (4/5, 3), that exhaustive enumeration turns up at the same bound:
        // ((4/5)²−1)(3²−1) = (−9/25)·8 = −72/25.
        let reps = search_representations(&r(-72, 25), 12);
        assert_eq!(
            reps,
            vec![
                OmegaRepresentation { p: r(1, 5), q: r(2, 1), value: r(-72, 25) },
                OmegaRepresentation { p: r(4, 5), q: r(3, 1), value: r(-72, 25) },
                OmegaRepresentation { p: r(1, 2), q: r(11, 5), value: r(-72, 25) },
            ]
        );
    }

    #[test]
    fn known_non_members_up_to_bound() {
        for w in [r(-1, 1), r(2, 1), r(1, 2)] {
            assert!(
                search_representations(&w, 25).is_empty(),
                "{w} should have no representation here"
            );
        }
    }

    #[test]
    fn zero_pairs_one_with_everything() {
        let reps = search_representations(&r(0, 1), 3);
        assert_eq!(reps.len(), 8);
        assert!(reps.iter().all(|rep| rep.p.is_one() || rep.q.is_one()));
        assert!(reps.contains(&OmegaRepresentation { p: r(1, 1), q: r(3, 2), value: r(0, 1) }));
    }

    #[test]
    fn search_finds_its_own_values() {
        // Each (p, q) pair re-emerges from a search bounded by its own height.
        for (p, q) in [(r(3, 2), r(5, 4)), (r(0, 1), r(7, 2)), (r(13, 12), r(13, 5))] {
            let w = omega_value(&p, &q).unwrap();
            let h = p.height().max(q.height());
            let h: u32 = h.to_string().parse().unwrap();
            let reps = search_representations(&w, h);
            let expect = OmegaRepresentation::ordered(p, q, w);
            assert!(reps.contains(&expect));
        }
    }

    #[test]
    fn pythagorean_family() {
        let reps = pythagorean_reps_of_one(5);
        assert_eq!(reps[0], OmegaRepresentation { p: r(5, 4), q: r(5, 3), value: r(1, 1) });
        assert_eq!(reps[1], OmegaRepresentation { p: r(13, 12), q: r(13, 5), value: r(1, 1) });
        for rep in &reps {
            assert_eq!(omega_value(&rep.p, &rep.q).unwrap(), r(1, 1));
        }
        // Pairwise distinct.
        for i in 0..reps.len() {
            for j in 0..i {
                assert_ne!(reps[i], reps[j]);
            }
        }
    }

    #[test]
    fn monotone_in_bound() {
        let small = search_representations(&r(-72, 25), 6);
        let large = search_representations(&r(-72, 25), 12);
        for rep in &small {
            assert!(large.contains(rep));
        }
        assert!(small.len() <= large.len());
    }
}
