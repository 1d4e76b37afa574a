//! Deterministic enumeration of rationals.
//!
//! Two orders are used by the searches:
//!
//! * **height-then-value** — all canonical fractions of height exactly
//!   1, 2, 3, … in ascending value within each height class. This is the
//!   order behind every bounded exhaustive sweep, so outputs are reproducible
//!   and prefix-closed in the bound.
//! * **Stern–Brocot** — breadth-first over the Stern–Brocot tree, extended to
//!   all of ℚ as `0, 1, −1, 1/2, −1/2, 2, −2, …`; used for open-ended
//!   parameter sweeps.

use num_bigint::BigInt;
use std::collections::VecDeque;

use crate::exact::rational::Rational;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Nonnegative rationals of height exactly `h`, ascending. Height 1 is
/// `{0, 1}`; height `h > 1` is `{n/h : gcd(n,h)=1, n < h} ∪ {h/d : gcd(h,d)=1, d < h}`.
fn nonneg_of_height(h: u32) -> Vec<Rational> {
    let h = h as u64;
    if h == 1 {
        return vec![Rational::zero(), Rational::one()];
    }
    let mut out = Vec::new();
    for n in 1..h {
        if gcd(n, h) == 1 {
            out.push(Rational::try_new(BigInt::from(n), BigInt::from(h)).unwrap());
        }
    }
    for d in (1..h).rev() {
        if gcd(h, d) == 1 {
            out.push(Rational::try_new(BigInt::from(h), BigInt::from(d)).unwrap());
        }
    }
    out
}

/// Nonnegative rationals of height at most `bound`, height-then-value order.
pub fn nonneg_up_to(bound: u32) -> Vec<Rational> {
    (1..=bound.max(1)).flat_map(nonneg_of_height).collect()
}

/// Strictly positive rationals of height at most `bound`, height-then-value.
pub fn positive_up_to(bound: u32) -> Vec<Rational> {
    nonneg_up_to(bound).into_iter().filter(|r| r.is_positive()).collect()
}

/// All rationals of height at most `bound`: within each height class the
/// negatives mirror the nonnegatives, sorted ascending.
pub fn signed_up_to(bound: u32) -> Vec<Rational> {
    let mut out = Vec::new();
    for h in 1..=bound.max(1) {
        let mut class: Vec<Rational> = nonneg_of_height(h)
            .into_iter()
            .flat_map(|r| {
                if r.is_zero() {
                    vec![r]
                } else {
                    vec![-&r, r]
                }
            })
            .collect();
        class.sort();
        out.extend(class);
    }
    out
}

/// Rationals in `[-1, 1]` of height at most `bound`, height-then-value.
pub fn unit_interval_up_to(bound: u32) -> Vec<Rational> {
    signed_up_to(bound)
        .into_iter()
        .filter(|r| r.abs() <= Rational::one())
        .collect()
}

/// Breadth-first Stern–Brocot enumeration of all of ℚ:
/// `0, 1, −1, 1/2, −1/2, 2, −2, 1/3, −1/3, 2/3, −2/3, 3/2, −3/2, 3, −3, …`.
pub fn stern_brocot() -> impl Iterator<Item = Rational> {
    let mut queue: VecDeque<((u64, u64), (u64, u64))> = VecDeque::new();
    queue.push_back(((0, 1), (1, 0)));
    let mut pending: VecDeque<Rational> = VecDeque::new();
    pending.push_back(Rational::zero());
    std::iter::from_fn(move || {
        if let Some(v) = pending.pop_front() {
            return Some(v);
        }
        let ((ln, ld), (rn, rd)) = queue.pop_front()?;
        let (mn, md) = (ln + rn, ld + rd);
        queue.push_back(((ln, ld), (mn, md)));
        queue.push_back(((mn, md), (rn, rd)));
        let v = Rational::try_new(BigInt::from(mn), BigInt::from(md)).unwrap();
        pending.push_back(-&v);
        Some(v)
    })
}
