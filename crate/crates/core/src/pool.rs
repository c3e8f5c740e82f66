//! The hierarchical vector pool and the level-respecting assignment cursor.
//!
//! Level 1 is `(1,1)` plus `f` vectors in each of the two gaps it leaves
//! against the boundary vectors. Each further level inserts exactly `f`
//! vectors into every gap between consecutive entries built so far, so
//! after `K` levels the pool holds `2(f+1)^K - 1` vectors and a level-`j`
//! vector never exceeds size `d^j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::primitive::{fibonacci, stern_brocot_in_order, PrimitiveVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PoolEntry {
    pub vector: PrimitiveVector,
    /// 1-based level the vector was inserted at.
    pub level: usize,
}

/// How the `f` vectors of a gap are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Selection {
    /// `f = 2^q - 1` and `d >= F_{q+1}`: take the first `q` Stern-Brocot
    /// levels between the two (unimodular) gap ends.
    SternBrocot { q: usize },
    /// Any other pair: the `f` slope-smallest vectors with size in
    /// `(d^{j-1}, d^j]` strictly inside the gap.
    Search,
}

impl Selection {
    pub fn for_pair(f: u64, d: u64) -> Selection {
        if (f + 1).is_power_of_two() {
            let q = (f + 1).trailing_zeros();
            if q >= 1 && d >= fibonacci(q + 1) {
                return Selection::SternBrocot { q: q as usize };
            }
        }
        Selection::Search
    }
}

/// Slope-sorted pool entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorPool {
    entries: Vec<PoolEntry>,
    f: u64,
    d: u64,
    k: usize,
    selection: Selection,
}

impl VectorPool {
    pub fn entries(&self) -> &[PoolEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn levels(&self) -> usize {
        self.k
    }

    pub fn selection(&self) -> Selection {
        self.selection
    }

    /// `2(f+1)^K - 1`.
    pub fn expected_len(f: u64, k: usize) -> u128 {
        2 * (f as u128 + 1).pow(k as u32) - 1
    }

    /// `x<TAB>y<TAB>level` lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 12);
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", e.vector.x(), e.vector.y(), e.level));
        }
        out
    }
}

/// Builds levels `1..=k` of the pool for the pair `(f, d)`.
pub fn build_pool(f: u64, d: u64, k: usize) -> Result<VectorPool> {
    if f == 0 || d == 0 || k == 0 {
        return Err(Error::ZeroSize);
    }
    let expected = VectorPool::expected_len(f, k);
    if expected > isize::MAX as u128 / 64 {
        return Err(Error::Overflow("sizing the vector pool"));
    }
    let selection = Selection::for_pair(f, d);
    let mut entries = vec![PoolEntry {
        vector: PrimitiveVector::DIAGONAL,
        level: 1,
    }];
    let mut lower = 1u64;
    for level in 1..=k {
        let upper = lower
            .checked_mul(if level == 1 { 1 } else { d })
            .ok_or(Error::Overflow("computing d^j"))?;
        let (lower_size, upper_size) = if level == 1 { (1, d) } else { (lower, upper) };
        let mut next = Vec::with_capacity(entries.len() * (f as usize + 1) + f as usize);
        let mut lo = PrimitiveVector::EAST;
        let mut picked = Vec::with_capacity(f as usize);
        for hi in entries
            .iter()
            .map(|e| Some(*e))
            .chain(std::iter::once(None))
        {
            let hi_vec = hi.map_or(PrimitiveVector::NORTH, |e| e.vector);
            picked.clear();
            select_gap(selection, f, lo, hi_vec, lower_size, upper_size, &mut picked)?;
            if picked.len() < f as usize || picked.iter().any(|v| v.size() > upper_size) {
                return Err(Error::NotEnoughVectors {
                    level,
                    lo,
                    hi: hi_vec,
                    found: picked.iter().filter(|v| v.size() <= upper_size).count(),
                    needed: f as usize,
                });
            }
            next.extend(picked.iter().map(|&vector| PoolEntry { vector, level }));
            if let Some(e) = hi {
                next.push(e);
            }
            lo = hi_vec;
        }
        entries = next;
        lower = upper_size;
    }
    debug_assert_eq!(entries.len() as u128, expected);
    Ok(VectorPool {
        entries,
        f,
        d,
        k,
        selection,
    })
}

fn select_gap(
    selection: Selection,
    f: u64,
    lo: PrimitiveVector,
    hi: PrimitiveVector,
    lower_size: u64,
    upper_size: u64,
    out: &mut Vec<PrimitiveVector>,
) -> Result<()> {
    match selection {
        Selection::SternBrocot { q } => {
            if lo.det(hi) != 1 {
                return Err(Error::NotUnimodular {
                    a: lo,
                    b: hi,
                    det: lo.det(hi),
                });
            }
            stern_brocot_in_order(lo, hi, q, out)
        }
        Selection::Search => {
            search_gap(f as usize, lo, hi, lower_size, upper_size, out);
            Ok(())
        }
    }
}

/// In-order walk of the classic Stern-Brocot tree restricted to the open
/// slope interval `(lo, hi)`, collecting up to `f` vectors whose size lies
/// in `(lower_size, upper_size]`. Subtrees are pruned once their root is
/// larger than `upper_size`, since sizes grow downwards.
fn search_gap(
    f: usize,
    lo: PrimitiveVector,
    hi: PrimitiveVector,
    lower_size: u64,
    upper_size: u64,
    out: &mut Vec<PrimitiveVector>,
) {
    let mut stack = vec![(PrimitiveVector::EAST, PrimitiveVector::NORTH, false)];
    while let Some((l, r, expanded)) = stack.pop() {
        let m = PrimitiveVector::new_unchecked(l.x() + r.x(), l.y() + r.y());
        if expanded {
            if lo < m && m < hi && m.size() > lower_size {
                out.push(m);
                if out.len() == f {
                    return;
                }
            }
            continue;
        }
        if m.size() > upper_size || r <= lo || l >= hi {
            continue;
        }
        stack.push((m, r, false));
        stack.push((l, r, true));
        stack.push((l, m, false));
    }
}

/// Vectors handed to the paths, in the order the paths were given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub vectors: Vec<PrimitiveVector>,
    /// Pool index each vector came from.
    pub pool_index: Vec<usize>,
    /// Entries consumed, assigned or skipped.
    pub consumed: usize,
}

/// Walks one cursor left to right over the pool; each path takes the next
/// unconsumed entry whose level does not exceed its own.
///
/// `levels` must be in ccw path order.
pub fn assign_vectors(levels: &[usize], pool: &VectorPool) -> Result<Assignment> {
    let entries = pool.entries();
    let mut cursor = 0;
    let mut vectors = Vec::with_capacity(levels.len());
    let mut pool_index = Vec::with_capacity(levels.len());
    for (path, &level) in levels.iter().enumerate() {
        let offset = entries[cursor..]
            .iter()
            .position(|e| e.level <= level)
            .ok_or(Error::PoolExhausted { path, level })?;
        cursor += offset;
        vectors.push(entries[cursor].vector);
        pool_index.push(cursor);
        cursor += 1;
    }
    Ok(Assignment {
        vectors,
        pool_index,
        consumed: cursor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primitive::enumerate_primitive;

    fn v(x: u64, y: u64) -> PrimitiveVector {
        PrimitiveVector::new(x, y).unwrap()
    }

    #[test]
    fn selection_rule() {
        assert_eq!(Selection::for_pair(3, 3), Selection::SternBrocot { q: 2 });
        assert_eq!(Selection::for_pair(7, 5), Selection::SternBrocot { q: 3 });
        assert_eq!(Selection::for_pair(1, 2), Selection::SternBrocot { q: 1 });
        assert_eq!(Selection::for_pair(4, 4), Selection::Search);
        // f = 3 needs d >= F_3 = 3 for the Stern-Brocot sizes to fit
        assert_eq!(Selection::for_pair(3, 2), Selection::Search);
    }

    #[test]
    fn one_level_of_three_three_is_all_of_p3() {
        let pool = build_pool(3, 3, 1).unwrap();
        let got: Vec<_> = pool.entries().iter().map(|e| e.vector).collect();
        assert_eq!(got, enumerate_primitive(3).unwrap());
        assert!(pool.entries().iter().all(|e| e.level == 1));
    }

    #[test]
    fn pool_sizes() {
        assert_eq!(build_pool(3, 3, 2).unwrap().len(), 31);
        let small = build_pool(1, 2, 3).unwrap();
        assert_eq!(small.len(), 15);
        for e in small.entries() {
            assert!(e.vector.size() <= 2u64.pow(e.level as u32));
        }
    }

    #[test]
    fn search_rule_agrees_with_brute_force() {
        // (4, 4): first level takes the four flattest and four steepest
        // vectors of size 2..=4 around (1, 1)
        let pool = build_pool(4, 4, 1).unwrap();
        let got: Vec<_> = pool.entries().iter().map(|e| e.vector).collect();
        let all = enumerate_primitive(4).unwrap();
        let below: Vec<_> = all.iter().copied().filter(|&w| w < v(1, 1)).take(4).collect();
        let above: Vec<_> = all.iter().copied().filter(|&w| w > v(1, 1)).take(4).collect();
        let mut want = below;
        want.push(v(1, 1));
        want.extend(above);
        assert_eq!(got, want);
        let two = build_pool(4, 4, 2).unwrap();
        assert_eq!(two.len(), 49);
    }

    #[test]
    fn impossible_pair_fails_with_witness() {
        match build_pool(4, 3, 1) {
            Err(Error::NotEnoughVectors {
                level: 1,
                lo,
                found: 3,
                needed: 4,
                ..
            }) => assert_eq!(lo, PrimitiveVector::EAST),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn assignment_examples() {
        let pool = build_pool(3, 3, 1).unwrap();
        let a = assign_vectors(&[1], &pool).unwrap();
        assert_eq!(a.vectors, vec![v(3, 1)]);

        let pool = build_pool(3, 3, 2).unwrap();
        let a = assign_vectors(&[2, 1], &pool).unwrap();
        // first entry overall, then the first level-1 entry after it
        assert_eq!(a.pool_index[0], 0);
        let first_level_one = pool.entries().iter().position(|e| e.level == 1).unwrap();
        assert_eq!(a.pool_index[1], first_level_one);
        assert_eq!(a.vectors[1], v(3, 1));
        assert_eq!(a.consumed, first_level_one + 1);

        let a = assign_vectors(&[2; 10], &pool).unwrap();
        assert_eq!(a.consumed, 10);
        assert_eq!(a.pool_index, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn exhaustion_is_an_error() {
        let pool = build_pool(3, 3, 1).unwrap();
        assert_eq!(
            assign_vectors(&[1; 8], &pool),
            Err(Error::PoolExhausted { path: 7, level: 1 })
        );
    }

    #[test]
    fn tsv_dump() {
        let pool = build_pool(3, 3, 1).unwrap();
        assert!(pool.to_tsv().starts_with("3\t1\t1\n2\t1\t1\n"));
    }
}
