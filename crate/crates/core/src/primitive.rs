//! Primitive vectors and the number theory behind them.
//!
//! A primitive vector is a coprime pair `(x, y)` in the closed first
//! quadrant. Because the components are coprime, two primitive vectors with
//! the same slope are equal, so ordering by slope is a total order that
//! agrees with equality. All slope comparisons are cross-multiplications in
//! `u128`; no floating point is involved anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimitiveVector {
    x: u64,
    y: u64,
}

impl PrimitiveVector {
    /// The boundary vector of slope 0.
    pub const EAST: PrimitiveVector = PrimitiveVector { x: 1, y: 0 };
    /// The boundary vector of infinite slope.
    pub const NORTH: PrimitiveVector = PrimitiveVector { x: 0, y: 1 };
    pub const DIAGONAL: PrimitiveVector = PrimitiveVector { x: 1, y: 1 };

    pub fn new(x: u64, y: u64) -> Result<Self> {
        if x.gcd(&y) != 1 {
            return Err(Error::NotPrimitive { x, y });
        }
        Ok(PrimitiveVector { x, y })
    }

    /// Skips the coprimality check. Callers must guarantee `gcd(x, y) = 1`.
    pub(crate) const fn new_unchecked(x: u64, y: u64) -> Self {
        PrimitiveVector { x, y }
    }

    pub fn x(self) -> u64 {
        self.x
    }

    pub fn y(self) -> u64 {
        self.y
    }

    /// `max(x, y)`.
    pub fn size(self) -> u64 {
        self.x.max(self.y)
    }

    /// True for the two axis vectors `(1, 0)` and `(0, 1)`.
    pub fn is_boundary(self) -> bool {
        self.x == 0 || self.y == 0
    }

    pub fn slope_cmp(self, other: Self) -> Ordering {
        (self.y as u128 * other.x as u128).cmp(&(other.y as u128 * self.x as u128))
    }

    /// `y_other * x_self - y_self * x_other`; equals 1 for unimodular
    /// neighbours with `self` below `other`.
    pub fn det(self, other: Self) -> i128 {
        other.y as i128 * self.x as i128 - self.y as i128 * other.x as i128
    }

    pub fn as_i64(self) -> (i64, i64) {
        (self.x as i64, self.y as i64)
    }
}

impl Ord for PrimitiveVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slope_cmp(*other)
    }
}

impl PartialOrd for PrimitiveVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PrimitiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Printed as the slope fraction `y/x`.
impl fmt::Display for PrimitiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.y, self.x)
    }
}

/// Streams the primitive vectors of size at most `d` (boundary vectors
/// excluded) in strictly increasing slope order, in O(1) per item.
///
/// The first half walks the Farey sequence of order `d` over `(0, 1]`, the
/// second half walks it backwards over `(0, 1)` with the roles of `x` and
/// `y` swapped.
#[derive(Debug, Clone)]
pub struct PrimitiveIter {
    order: u64,
    // consecutive Farey fractions num/den, `cur` is the next to emit
    prev: (u64, u64),
    cur: (u64, u64),
    ascending: bool,
    done: bool,
}

impl PrimitiveIter {
    pub fn new(d: u64) -> Self {
        PrimitiveIter {
            order: d,
            prev: (0, 1),
            cur: (1, d.max(1)),
            ascending: true,
            done: d == 0,
        }
    }
}

impl Iterator for PrimitiveIter {
    type Item = PrimitiveVector;

    fn next(&mut self) -> Option<PrimitiveVector> {
        if self.done {
            return None;
        }
        let (a, b) = self.prev;
        let (c, d) = self.cur;
        let n = self.order;
        if self.ascending {
            let out = PrimitiveVector::new_unchecked(d, c);
            if (c, d) == (1, 1) {
                // turn around at slope 1; the fraction before 1/1 is (n-1)/n
                self.ascending = false;
                if n == 1 {
                    self.done = true;
                } else {
                    self.prev = (1, 1);
                    self.cur = (n - 1, n);
                }
            } else {
                let k = (n + b) / d;
                self.prev = (c, d);
                self.cur = (k * c - a, k * d - b);
            }
            Some(out)
        } else {
            // `prev` is the right neighbour of `cur`
            let out = PrimitiveVector::new_unchecked(c, d);
            if c == 0 {
                self.done = true;
                return None;
            }
            let k = (n + b) / d;
            self.prev = (c, d);
            self.cur = (k * c - a, k * d - b);
            Some(out)
        }
    }
}

/// All primitive vectors with `1 <= x, y <= d`, sorted by slope.
pub fn enumerate_primitive(d: u64) -> Result<Vec<PrimitiveVector>> {
    if d == 0 {
        return Err(Error::ZeroSize);
    }
    let mut out = Vec::with_capacity(primitive_count(d) as usize);
    out.extend(PrimitiveIter::new(d));
    Ok(out)
}

/// `|P̄_d| = 2 * sum_{k<=d} phi(k) - 1`, via a totient sieve.
pub fn primitive_count(d: u64) -> u64 {
    if d == 0 {
        return 0;
    }
    let d = d as usize;
    let mut phi: Vec<u64> = (0..=d as u64).collect();
    for p in 2..=d {
        if phi[p] == p as u64 {
            for m in (p..=d).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    2 * phi[1..].iter().sum::<u64>() - 1
}

/// Smallest `d` with `|P̄_d| >= count`.
pub fn smallest_size_with_count(count: u64) -> u64 {
    if count <= 1 {
        return 1;
    }
    // |P̄_d| >= 6d²/π² - O(d log d) > d²/2 for every d >= 1, so the answer
    // lies below sqrt(2 count) + 2; binary search on the exact count
    let (mut lo, mut hi) = (1u64, ((2 * count) as f64).sqrt() as u64 + 2);
    while primitive_count(hi) < count {
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if primitive_count(mid) >= count {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Component-wise sum of two unimodular neighbours `a < b`.
pub fn mediant(a: PrimitiveVector, b: PrimitiveVector) -> Result<PrimitiveVector> {
    let det = a.det(b);
    if det != 1 {
        return Err(Error::NotUnimodular { a, b, det });
    }
    checked_mediant(a, b)
}

fn checked_mediant(a: PrimitiveVector, b: PrimitiveVector) -> Result<PrimitiveVector> {
    debug_assert_eq!(a.det(b), 1, "mediant of non-neighbours {a} and {b}");
    let x = a.x.checked_add(b.x).ok_or(Error::Overflow("forming a mediant"))?;
    let y = a.y.checked_add(b.y).ok_or(Error::Overflow("forming a mediant"))?;
    Ok(PrimitiveVector::new_unchecked(x, y))
}

/// The first `q` levels of the Stern-Brocot tree between two unimodular
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SternBrocotLevels {
    endpoints: (PrimitiveVector, PrimitiveVector),
    levels: Vec<Vec<PrimitiveVector>>,
}

impl SternBrocotLevels {
    pub fn endpoints(&self) -> (PrimitiveVector, PrimitiveVector) {
        self.endpoints
    }

    /// Number of levels built.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Level `k` (1-based), slope-sorted.
    pub fn level(&self, k: usize) -> &[PrimitiveVector] {
        &self.levels[k - 1]
    }

    pub fn levels(&self) -> &[Vec<PrimitiveVector>] {
        &self.levels
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// All nodes in in-order, which is increasing slope.
    pub fn in_order(&self) -> Vec<PrimitiveVector> {
        let mut all: Vec<_> = self.levels.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Builds levels `1..=q` of the Stern-Brocot tree between `a` and `b`.
///
/// Each node carries the bracketing pair it was formed from; its left child
/// is the mediant with the left bracket, its right child the mediant with
/// the right bracket.
pub fn stern_brocot_levels(
    a: PrimitiveVector,
    b: PrimitiveVector,
    q: usize,
) -> Result<SternBrocotLevels> {
    let root = mediant(a, b)?;
    let mut levels = Vec::with_capacity(q);
    let mut frontier = vec![(a, root, b)];
    for k in 1..=q {
        levels.push(frontier.iter().map(|&(_, v, _)| v).collect());
        if k == q {
            break;
        }
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for &(lo, v, hi) in &frontier {
            next.push((lo, checked_mediant(lo, v)?, v));
            next.push((v, checked_mediant(v, hi)?, hi));
        }
        frontier = next;
    }
    Ok(SternBrocotLevels {
        endpoints: (a, b),
        levels,
    })
}

/// In-order nodes of the first `q` Stern-Brocot levels between unimodular
/// neighbours `a < b`, appended to `out`.
pub(crate) fn stern_brocot_in_order(
    a: PrimitiveVector,
    b: PrimitiveVector,
    q: usize,
    out: &mut Vec<PrimitiveVector>,
) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    let m = checked_mediant(a, b)?;
    stern_brocot_in_order(a, m, q - 1, out)?;
    out.push(m);
    stern_brocot_in_order(m, b, q - 1, out)
}

/// Fibonacci numbers indexed from `F_0 = F_1 = 1`.
///
/// # Panics
///
/// If the value does not fit in `u64` (`q > 91`).
pub fn fibonacci(q: u32) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for _ in 1..q {
        let next = prev.checked_add(cur).expect("fibonacci overflows u64");
        prev = cur;
        cur = next;
    }
    cur
}

/// The valid pair `(2^q - 1, F_{q+1})`.
pub fn fibonacci_pair(q: u32) -> (u64, u64) {
    ((1u64 << q) - 1, fibonacci(q + 1))
}

/// A slope gap between consecutive members of `P̄_Δ` (or a boundary vector)
/// that holds too few vectors of `P̄_{dΔ} - P̄_Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapWitness {
    pub delta: u64,
    pub lo: PrimitiveVector,
    pub hi: PrimitiveVector,
    pub count: u64,
}

/// Outcome of a brute-force valid-pair check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub f: u64,
    pub d: u64,
    /// Largest Δ examined; equals the request unless a failure stopped the
    /// scan early.
    pub delta_checked: u64,
    pub f_at_least_d: bool,
    pub gaps_checked: u64,
    /// Smallest gap count seen over all examined gaps.
    pub min_gap: Option<u64>,
    /// First failing gap, scanning Δ upwards and slopes left to right.
    pub witness: Option<GapWitness>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.f_at_least_d && self.witness.is_none()
    }
}

/// Checks the valid-pair condition for every `Δ` in `1..=delta_max` by
/// walking `P̄_{dΔ}` in slope order and counting, between each pair of
/// consecutive members of `P̄_Δ ∪ {(1,0), (0,1)}`, the vectors of larger
/// size that fall strictly between.
pub fn certify_valid_pair(f: u64, d: u64, delta_max: u64) -> CertificationReport {
    let mut report = CertificationReport {
        f,
        d,
        delta_checked: 0,
        f_at_least_d: f >= d && d >= 1,
        gaps_checked: 0,
        min_gap: None,
        witness: None,
    };
    if d == 0 {
        return report;
    }
    for delta in 1..=delta_max {
        report.delta_checked = delta;
        let mut lo = PrimitiveVector::EAST;
        let mut count = 0u64;
        let mut gap_closed = |hi: PrimitiveVector, count: u64, report: &mut CertificationReport| {
            report.gaps_checked += 1;
            report.min_gap = Some(report.min_gap.map_or(count, |m| m.min(count)));
            if count < f && report.witness.is_none() {
                report.witness = Some(GapWitness {
                    delta,
                    lo,
                    hi,
                    count,
                });
            }
            lo = hi;
        };
        for v in PrimitiveIter::new(d * delta) {
            if v.size() <= delta {
                gap_closed(v, std::mem::take(&mut count), &mut report);
            } else {
                count += 1;
            }
        }
        gap_closed(PrimitiveVector::NORTH, count, &mut report);
        if report.witness.is_some() {
            break;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u64, y: u64) -> PrimitiveVector {
        PrimitiveVector::new(x, y).unwrap()
    }

    /// Slope y/x written as a fraction, the way figures label vectors.
    fn frac(y: u64, x: u64) -> PrimitiveVector {
        v(x, y)
    }

    #[test]
    fn rejects_non_primitive() {
        assert!(PrimitiveVector::new(2, 4).is_err());
        assert!(PrimitiveVector::new(0, 0).is_err());
        assert!(PrimitiveVector::new(0, 2).is_err());
        assert!(PrimitiveVector::new(0, 1).is_ok());
    }

    #[test]
    fn enumerates_small_boxes() {
        assert_eq!(enumerate_primitive(1).unwrap(), vec![v(1, 1)]);
        assert_eq!(
            enumerate_primitive(3).unwrap(),
            vec![v(3, 1), v(2, 1), v(3, 2), v(1, 1), v(2, 3), v(1, 2), v(1, 3)]
        );
        assert_eq!(enumerate_primitive(0), Err(Error::ZeroSize));
    }

    #[test]
    fn counts_match_enumeration() {
        for d in 1..=60 {
            assert_eq!(primitive_count(d), enumerate_primitive(d).unwrap().len() as u64);
        }
        assert_eq!(smallest_size_with_count(7), 3);
        assert_eq!(smallest_size_with_count(8), 4);
        assert_eq!(smallest_size_with_count(1), 1);
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(
            mediant(PrimitiveVector::EAST, PrimitiveVector::NORTH).unwrap(),
            v(1, 1)
        );
        assert_eq!(mediant(frac(4, 5), frac(5, 6)).unwrap(), frac(9, 11));
        assert_eq!(mediant(frac(4, 5), frac(9, 11)).unwrap(), frac(13, 16));
        assert!(matches!(
            mediant(frac(1, 3), frac(1, 1)),
            Err(Error::NotUnimodular { det: 2, .. })
        ));
        // wrong orientation has determinant -1
        assert!(mediant(frac(5, 6), frac(4, 5)).is_err());
    }

    #[test]
    fn classic_tree_first_two_levels() {
        let sb = stern_brocot_levels(PrimitiveVector::EAST, PrimitiveVector::NORTH, 2).unwrap();
        assert_eq!(sb.in_order(), vec![frac(1, 2), frac(1, 1), frac(2, 1)]);
    }

    #[test]
    fn in_order_helper_matches_levels() {
        let sb = stern_brocot_levels(frac(4, 5), frac(5, 6), 5).unwrap();
        let mut out = Vec::new();
        stern_brocot_in_order(frac(4, 5), frac(5, 6), 5, &mut out).unwrap();
        assert_eq!(out, sb.in_order());
        assert_eq!(out.len(), 31);
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), 1);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(2), 2);
        assert_eq!(fibonacci(3), 3);
        assert_eq!(fibonacci(6), 13);
        assert_eq!(fibonacci_pair(2), (3, 3));
        assert_eq!(fibonacci_pair(3), (7, 5));
    }

    #[test]
    fn certification_small_cases() {
        assert!(certify_valid_pair(3, 3, 20).passed());
        let bad = certify_valid_pair(4, 3, 10);
        assert!(!bad.passed());
        assert_eq!(
            bad.witness,
            Some(GapWitness {
                delta: 1,
                lo: PrimitiveVector::EAST,
                hi: v(1, 1),
                count: 3
            })
        );
        // (1, 2) has enough vectors in every gap but f < d
        let weak = certify_valid_pair(1, 2, 30);
        assert!(weak.witness.is_none());
        assert!(!weak.f_at_least_d);
        assert!(!weak.passed());
        assert!(!certify_valid_pair(2, 3, 5).passed());
    }
}
