//! Brute-force oracles, independent of the library's search code. They only
//! use the graph type for adjacency and are meant for n <= 8.

#![allow(dead_code)]

use cyclewidth::Graph;

/// Adjacency masks, rebuilt here rather than taken from the library.
pub fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Every vertex set that carries a cycle through all of its vertices,
/// found by Held-Karp over paths that start at the set's smallest vertex.
pub fn cycle_sets(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let adj = adjacency(g);
    let mut found = vec![false; 1 << n];
    for s in 0..n {
        // reach[mask] = endpoints v of s-v paths using exactly `mask`
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        for mask in 0..(1usize << n) {
            if reach[mask] == 0 || mask & ((1 << s) - 1) != 0 {
                continue;
            }
            for v in 0..n {
                if reach[mask] >> v & 1 == 0 {
                    continue;
                }
                if mask.count_ones() >= 3 && adj[v] >> s & 1 == 1 {
                    found[mask] = true;
                }
                for w in s + 1..n {
                    if mask >> w & 1 == 0 && adj[v] >> w & 1 == 1 {
                        reach[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    (0..1u32 << n).filter(|&m| found[m as usize]).collect()
}

/// Longest cycle length, 0 for forests.
pub fn circumference(sets: &[u32]) -> usize {
    sets.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

/// Largest number of pairwise disjoint sets among `sets`.
pub fn max_disjoint(sets: &[u32]) -> usize {
    fn go(sets: &[u32], used: u32) -> usize {
        let mut best = 0;
        for (i, &s) in sets.iter().enumerate() {
            if s & used == 0 {
                best = best.max(1 + go(&sets[i + 1..], used | s));
            }
        }
        best
    }
    go(sets, 0)
}

pub fn long_sets(sets: &[u32], ell: usize) -> Vec<u32> {
    sets.iter().copied().filter(|m| m.count_ones() as usize >= ell).collect()
}

/// Smallest vertex set meeting every set in `sets`.
pub fn min_transversal(n: usize, sets: &[u32]) -> usize {
    (0..1u32 << n)
        .filter(|&x| sets.iter().all(|&s| s & x != 0))
        .map(|x| x.count_ones() as usize)
        .min()
        .expect("the full vertex set is a transversal")
}

/// Whether disjoint cycles can be matched to `lengths` with each cycle at
/// least as long as its target, trying every assignment.
pub fn has_minor(sets: &[u32], lengths: &[usize]) -> bool {
    fn go(sets: &[u32], left: &mut Vec<usize>, used: u32) -> bool {
        let Some(need) = left.pop() else { return true };
        let ok = sets.iter().any(|&s| {
            s & used == 0 && s.count_ones() as usize >= need && go(sets, left, used | s)
        });
        left.push(need);
        ok
    }
    go(sets, &mut lengths.to_vec(), 0)
}

/// Treewidth as the minimum over all elimination orderings.
pub fn treewidth_brute_force(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = n.saturating_sub(1);
    permute(&mut order, 0, &mut |ord| {
        let mut a = adj.clone();
        let mut width = 0;
        let mut gone = 0u32;
        for &v in ord {
            let nb = a[v] & !gone;
            width = width.max(nb.count_ones() as usize);
            for u in 0..n {
                if nb >> u & 1 == 1 {
                    a[u] |= nb & !(1 << u);
                }
            }
            gone |= 1 << v;
        }
        best = best.min(width);
    });
    best
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Multisets of cycle lengths (each >= 3) with total exactly `h`, in
/// descending order.
pub fn specs_with_total(h: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (3..=left.min(max)).rev() {
            cur.push(part);
            go(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(h, h, &mut Vec::new(), &mut out);
    out
}
