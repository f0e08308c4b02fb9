//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex, with every
//! possible neighborhood, to one representative of each class on `n - 1`
//! vertices, then deduplicating by canonical key. Every graph arises this
//! way because deleting its last vertex leaves some smaller class.

use std::collections::HashSet;

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest vertex count accepted by the enumerators.
pub const MAX_ENUMERATION_N: usize = 7;

/// One representative of every isomorphism class of graphs on `n` vertices.
/// Output order is deterministic: by edge count, then by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            what: "enumeration",
            n,
            bound: MAX_ENUMERATION_N,
        });
    }
    let mut level = vec![Graph::empty(0)?];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0..(1u64 << (size - 1)) {
                let h = extend(g, nbrs);
                let key = canonical_key(&h)?;
                if seen.insert(key.clone()) {
                    next.push((h.edge_count(), key, h));
                }
            }
        }
        next.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        level = next.into_iter().map(|(_, _, g)| g).collect();
    }
    Ok(level)
}

/// Connected classes only; counts follow the census 1, 1, 2, 6, 21, 112, 853.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

fn extend(g: &Graph, nbrs: u64) -> Graph {
    let v = g.n();
    let mut rows: Vec<u64> = g.rows().to_vec();
    for (u, row) in rows.iter_mut().enumerate() {
        if nbrs & bit(u) != 0 {
            *row |= bit(v);
        }
    }
    rows.push(nbrs);
    Graph::from_rows_unchecked(rows)
}
