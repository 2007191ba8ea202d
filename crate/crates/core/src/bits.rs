//! Small helpers for `u64` vertex masks.

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Set bits in ascending order.
pub fn iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub fn lowest(mask: u64) -> Option<usize> {
    (mask != 0).then(|| mask.trailing_zeros() as usize)
}

/// Union of the neighbourhoods of the vertices in `mask`.
#[inline]
pub fn neighborhood(adj: &[u64], mask: u64) -> u64 {
    iter(mask).fold(0, |acc, v| acc | adj[v])
}

/// Vertices reachable from `start` using only vertices of `allowed`
/// (`start` itself is always included).
pub fn reach(adj: &[u64], start: u64, allowed: u64) -> u64 {
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let next = neighborhood(adj, frontier) & allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Vertices of `allowed` above `v`.
#[inline]
pub fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !full(v + 1)
    }
}
