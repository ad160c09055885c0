// Exhaustive searches over vertex sets packed into a u64 (bit v-1 = label v).

use crate::vertex_set::VertexSet;
use crate::Vertex;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn to_set(n: u32, mask: u64) -> VertexSet {
    VertexSet::from_labels(n, ones(mask).map(|i| i as Vertex + 1))
}

pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Lexicographically least maximum independent set of the graph whose
/// adjacency is `conflict` (no self bits).
pub(crate) fn max_independent(n: u32, conflict: &[u64]) -> u64 {
    fn go(conflict: &[u64], cand: u64, cur: u64, best: &mut (u32, u64)) {
        if cand == 0 {
            if cur.count_ones() > best.0 {
                *best = (cur.count_ones(), cur);
            }
            return;
        }
        // `<=` keeps the first (lexicographically least) optimum.
        if cur.count_ones() + cand.count_ones() <= best.0 {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(conflict, cand & !conflict[v] & !bit(v), cur | bit(v), best);
        go(conflict, cand & !bit(v), cur, best);
    }
    let mut best = (0, 0);
    go(conflict, full(n), 0, &mut best);
    best.1
}

/// Calls `visit` on every independent set of exactly `size` vertices, in
/// lexicographic order.
pub(crate) fn for_each_independent_of_size(
    n: u32,
    conflict: &[u64],
    size: u32,
    visit: &mut dyn FnMut(u64),
) {
    fn go(conflict: &[u64], cand: u64, cur: u64, size: u32, visit: &mut dyn FnMut(u64)) {
        let have = cur.count_ones();
        if have == size {
            visit(cur);
            return;
        }
        if have + cand.count_ones() < size {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(
            conflict,
            cand & !conflict[v] & !bit(v),
            cur | bit(v),
            size,
            visit,
        );
        go(conflict, cand & !bit(v), cur, size, visit);
    }
    go(conflict, full(n), 0, size, visit);
}

/// Open-packing conflict graph: `u ~ v` iff `N(u)` and `N(v)` meet.
pub(crate) fn packing_conflicts(nbr: &[u64]) -> Vec<u64> {
    (0..nbr.len())
        .map(|u| {
            (0..nbr.len())
                .filter(|&v| v != u && nbr[u] & nbr[v] != 0)
                .fold(0, |m, v| m | bit(v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_mis() {
        // path 1-2-3-4-5
        let nbr = [0b00010, 0b00101, 0b01010, 0b10100, 0b01000];
        assert_eq!(max_independent(5, &nbr), 0b10101);
        let mut count = 0;
        for_each_independent_of_size(5, &nbr, 2, &mut |_| count += 1);
        assert_eq!(count, 6);
    }

    #[test]
    fn full_mask() {
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
        assert_eq!(ones(0b1010).collect::<Vec<_>>(), vec![1, 3]);
    }
}
