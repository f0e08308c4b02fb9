//! Slow, obviously-correct oracles shared by the integration and
//! acceptance tests. None of them use the solvers they check.

#![allow(dead_code)]

use foldkit::Graph;

/// Identifies `x` and `y` by the textbook definition, on adjacency
/// matrices, with the same labeling rule the library documents.
pub fn naive_fold(g: &Graph, x: usize, y: usize) -> Graph {
    let (keep, gone) = (x.min(y), x.max(y));
    let n = g.n();
    let old = |v: usize| if v < gone { v } else { v + 1 };
    let mut h = Graph::empty(n - 1).unwrap();
    for a in 0..n - 1 {
        for b in a + 1..n - 1 {
            let (oa, ob) = (old(a), old(b));
            let mut adj = g.has_edge(oa, ob);
            if oa == keep {
                adj |= g.has_edge(gone, ob);
            }
            if ob == keep {
                adj |= g.has_edge(oa, gone);
            }
            if adj {
                h.add_edge(a, b).unwrap();
            }
        }
    }
    h
}

/// Distance-two pairs by BFS distances.
pub fn naive_candidates(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if bfs_distance(g, x, y) == Some(2) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn bfs_distance(g: &Graph, s: usize, t: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    (dist[t] != usize::MAX).then_some(dist[t])
}

pub fn naive_is_clique(g: &Graph) -> bool {
    (0..g.n()).all(|u| (0..g.n()).all(|v| u == v || g.has_edge(u, v)))
}

/// Largest clique at the leaves of the full fold tree: no memo, no pruning.
pub fn naive_sigma(g: &Graph) -> usize {
    let cands = naive_candidates(g);
    if cands.is_empty() {
        assert!(
            naive_is_clique(g),
            "maximal fold of a connected graph must be a clique"
        );
        return g.n();
    }
    cands
        .into_iter()
        .map(|(x, y)| naive_sigma(&naive_fold(g, x, y)))
        .max()
        .unwrap()
}

/// Every assignment of `k` colours for every `k`; keeps the largest `k`
/// with a surjective, proper and complete assignment.
pub fn naive_psi(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for k in 1..=n {
        let total = k.pow(n as u32);
        let found = (0..total).any(|mut code| {
            let mut c = vec![0; n];
            for slot in c.iter_mut() {
                *slot = code % k;
                code /= k;
            }
            let surjective = (0..k).all(|col| c.contains(&col));
            let proper = g.edges().iter().all(|&(u, v)| c[u] != c[v]);
            let complete = (0..k).all(|a| {
                (a + 1..k).all(|b| {
                    g.edges()
                        .iter()
                        .any(|&(u, v)| (c[u], c[v]) == (a, b) || (c[u], c[v]) == (b, a))
                })
            });
            surjective && proper && complete
        });
        if found {
            best = k;
        }
    }
    best
}

/// Least `k` admitting a proper assignment, by trying all of them.
pub fn naive_chi(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            (0..k.pow(n as u32)).any(|mut code| {
                let mut c = vec![0; n];
                for slot in c.iter_mut() {
                    *slot = code % k;
                    code /= k;
                }
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(a.n())
            .iter()
            .any(|p| a.permute(p).unwrap() == *b)
}

/// Isomorphism classes of graphs on `n` vertices from all edge subsets,
/// deduplicated by pairwise permutation checks.
pub fn naive_classes(n: usize, connected_only: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if connected_only && !g.is_connected() {
            continue;
        }
        if !reps.iter().any(|r| naive_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Induced P4, C4 or 2K2 present, found by edge counting on 4-sets.
pub fn has_forbidden_four_set(g: &Graph, include_2k2: bool) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let deg: Vec<usize> = q
                        .iter()
                        .map(|&u| q.iter().filter(|&&v| g.has_edge(u, v)).count())
                        .collect();
                    let m: usize = deg.iter().sum::<usize>() / 2;
                    let p4 = m == 3
                        && deg.iter().all(|&d| d == 1 || d == 2)
                        && deg.iter().filter(|&&d| d == 2).count() == 2;
                    let c4 = m == 4 && deg.iter().all(|&d| d == 2);
                    let two_k2 = m == 2 && deg.iter().all(|&d| d == 1);
                    if p4 || c4 || (include_2k2 && two_k2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
