//! Exact canonical forms for small graphs.
//!
//! The key of `g` is the lexicographically least adjacency matrix among the
//! relabelings reached by an individualization/refinement search: colour
//! refinement splits vertices into an ordered partition, then each
//! remaining non-singleton cell is broken by trying every member in turn.
//! The set of relabelings explored depends only on the isomorphism class of
//! `g`, so the minimum is a complete invariant.
//!
//! A cell whose members are pairwise twins is broken by a single member
//! only. Swapping two twins is an automorphism that fixes everything else,
//! so every sibling subtree yields the same set of leaves.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Default size limit for [`canonical_key`].
pub const DEFAULT_CANON_LIMIT: usize = 12;

/// Label-invariant fingerprint: equal keys iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Box<[u64]>);

impl CanonicalKey {
    /// The vertex count followed by the canonical adjacency rows.
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}

/// Canonical key with the default size limit.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_key_with_limit(g, DEFAULT_CANON_LIMIT)
}

/// Returns [`Error::TooLarge`] when `g.n() > limit`; callers fall back to
/// search without deduplication.
pub fn canonical_key_with_limit(g: &Graph, limit: usize) -> Result<CanonicalKey> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge {
            what: "canonicalization",
            n,
            bound: limit,
        });
    }
    let (_, rows) = canonical_labeling(g);
    let mut words = Vec::with_capacity(n + 1);
    words.push(n as u64);
    words.extend(rows);
    Ok(CanonicalKey(words.into_boxed_slice()))
}

/// Canonical relabeling of `g`: `labels[v]` is the new label of `v`, and
/// the returned rows are the relabeled adjacency.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, Vec<u64>) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut search = Search {
        g,
        best: None,
        scratch: vec![0; n],
    };
    search.descend(vec![0; n]);
    let (labels, rows) = search.best.expect("search reaches at least one leaf");
    (labels, rows)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<usize>, Vec<u64>)>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u32>) {
        let cells = refine(self.g, &mut colors);
        let n = self.g.n();
        if cells == n {
            self.leaf(&colors);
            return;
        }
        // first smallest non-singleton cell
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..cells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| sizes[c])
            .expect("non-discrete partition has a non-singleton cell") as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let branch: &[usize] = if all_twins(self.g, &members) {
            &members[..1]
        } else {
            &members
        };
        for &v in branch {
            let mut child = colors.clone();
            for (u, c) in child.iter_mut().enumerate() {
                if *c > target || (*c == target && u != v) {
                    *c += 1;
                }
            }
            self.descend(child);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let g = self.g;
        for v in 0..g.n() {
            self.scratch[colors[v] as usize] =
                bits(g.neighbors(v)).fold(0, |acc, w| acc | bit(colors[w] as usize));
        }
        let better = match &self.best {
            None => true,
            Some((_, rows)) => self.scratch[..] < rows[..],
        };
        if better {
            let labels = colors.iter().map(|&c| c as usize).collect();
            self.best = Some((labels, self.scratch.clone()));
        }
    }
}

fn all_twins(g: &Graph, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| g.neighbors(a) & !bit(b) == g.neighbors(b) & !bit(a))
    })
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colors`. Cells keep their relative order and split by the sorted
/// neighbour-count signature, so the result commutes with relabeling.
/// Returns the number of cells; colours are dense `0..cells`.
fn refine(g: &Graph, colors: &mut [u32]) -> usize {
    let n = g.n();
    let mut cells = dense_count(colors);
    loop {
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = vec![0u32; cells + 1];
                sig[0] = colors[v];
                for w in bits(g.neighbors(v)) {
                    sig[colors[w] as usize + 1] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            colors[sigs[i].1] = next;
        }
        let refined = next as usize + 1;
        if refined == cells {
            return cells;
        }
        cells = refined;
    }
}

fn dense_count(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}
