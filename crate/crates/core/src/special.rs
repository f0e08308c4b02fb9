//! Threshold and trivially perfect graphs, the universal-vertex reduction
//! and the cycle bound on the achromatic number.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CreationOp {
    AddIsolated,
    AddUniversal,
}

/// Build recipe of a threshold graph, one vertex per op. The first op
/// always reads as [`CreationOp::AddIsolated`]; on an empty graph the two
/// ops coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CreationSequence {
    ops: Vec<CreationOp>,
}

impl CreationSequence {
    pub fn new(mut ops: Vec<CreationOp>) -> Self {
        if let Some(first) = ops.first_mut() {
            *first = CreationOp::AddIsolated;
        }
        CreationSequence { ops }
    }

    pub fn ops(&self) -> &[CreationOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Vertex `i` is added by op `i`.
    pub fn realize(&self) -> Graph {
        let mut g = Graph::empty(0).expect("empty graph");
        for op in &self.ops {
            g = match op {
                CreationOp::AddIsolated => g.add_isolated(),
                CreationOp::AddUniversal => g.add_universal(),
            }
            .expect("creation sequences stay within the vertex limit");
        }
        g
    }

    /// All sequences of length `len` (first op fixed), in binary order.
    pub fn all_of_length(len: usize) -> Vec<CreationSequence> {
        if len == 0 {
            return vec![CreationSequence::new(Vec::new())];
        }
        (0..1u64 << (len - 1))
            .map(|mask| {
                let ops = (0..len)
                    .map(|i| {
                        if i > 0 && mask & bit(len - 1 - i) != 0 {
                            CreationOp::AddUniversal
                        } else {
                            CreationOp::AddIsolated
                        }
                    })
                    .collect();
                CreationSequence::new(ops)
            })
            .collect()
    }
}

/// The `i`/`u` string form, e.g. `iiiu` for the star `K_{1,3}`.
impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            f.write_str(match op {
                CreationOp::AddIsolated => "i",
                CreationOp::AddUniversal => "u",
            })?;
        }
        Ok(())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ops = s
            .trim()
            .char_indices()
            .map(|(i, c)| match c {
                'i' => Ok(CreationOp::AddIsolated),
                'u' => Ok(CreationOp::AddUniversal),
                other => Err(Error::Argument(format!(
                    "`{other}` at position {i} is not a creation op (expected i or u)"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if ops.len() > crate::graph::MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "creation sequence",
                n: ops.len(),
                bound: crate::graph::MAX_VERTICES,
            });
        }
        Ok(CreationSequence::new(ops))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    P4,
    C4,
    TwoK2,
}

/// An induced 4-vertex subgraph that rules out a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InducedObstruction {
    pub kind: ObstructionKind,
    pub vertices: [usize; 4],
}

fn classify(g: &Graph, set: u64) -> Option<ObstructionKind> {
    let mut degrees: Vec<u32> = bits(set)
        .map(|v| (g.neighbors(v) & set).count_ones())
        .collect();
    degrees.sort_unstable();
    match degrees.as_slice() {
        [1, 1, 2, 2] => Some(ObstructionKind::P4),
        [2, 2, 2, 2] => Some(ObstructionKind::C4),
        [1, 1, 1, 1] => Some(ObstructionKind::TwoK2),
        _ => None,
    }
}

fn find_obstruction(
    g: &Graph,
    within: u64,
    kinds: &[ObstructionKind],
) -> Option<InducedObstruction> {
    let vs: Vec<usize> = bits(within).collect();
    let k = vs.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let quad = [vs[a], vs[b], vs[c], vs[d]];
                    let set = quad.iter().fold(0, |acc, &v| acc | bit(v));
                    if let Some(kind) = classify(g, set) {
                        if kinds.contains(&kind) {
                            return Some(InducedObstruction {
                                kind,
                                vertices: quad,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Induced P4, C4 or 2K2 anywhere in `g`, by brute force over 4-sets.
pub fn threshold_obstruction(g: &Graph) -> Option<InducedObstruction> {
    use ObstructionKind::*;
    find_obstruction(g, g.vertex_mask(), &[P4, C4, TwoK2])
}

/// Success carries the creation sequence and the labels of `g` in the
/// order the sequence adds them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCertificate {
    pub sequence: CreationSequence,
    pub order: Vec<usize>,
}

/// Recognizes threshold graphs by peeling a universal (preferred) or
/// isolated vertex, lowest label first, until one vertex is left. When
/// peeling gets stuck the remaining induced subgraph contains an induced
/// P4, C4 or 2K2, which is returned.
pub fn is_threshold(g: &Graph) -> std::result::Result<ThresholdCertificate, InducedObstruction> {
    let mut live = g.vertex_mask();
    let mut peeled = Vec::with_capacity(g.n());
    while live != 0 {
        let universal = bits(live).find(|&v| g.neighbors(v) & live == live & !bit(v));
        let pick = universal
            .map(|v| (v, CreationOp::AddUniversal))
            .or_else(|| {
                bits(live)
                    .find(|&v| g.neighbors(v) & live == 0)
                    .map(|v| (v, CreationOp::AddIsolated))
            });
        match pick {
            Some((v, op)) => {
                peeled.push((v, op));
                live &= !bit(v);
            }
            None => {
                use ObstructionKind::*;
                return Err(find_obstruction(g, live, &[P4, C4, TwoK2]).expect(
                    "a graph without isolated or universal vertex has an induced P4, C4 or 2K2",
                ));
            }
        }
    }
    peeled.reverse();
    let order = peeled.iter().map(|&(v, _)| v).collect();
    let sequence = CreationSequence::new(peeled.into_iter().map(|(_, op)| op).collect());
    Ok(ThresholdCertificate { sequence, order })
}

/// No induced P4 and no induced C4.
pub fn is_trivially_perfect(g: &Graph) -> std::result::Result<(), InducedObstruction> {
    use ObstructionKind::*;
    match find_obstruction(g, g.vertex_mask(), &[P4, C4]) {
        Some(o) => Err(o),
        None => Ok(()),
    }
}

/// Achromatic number of the realized threshold graph, peeling from the
/// last op: a universal vertex adds one, an isolated vertex leaves the
/// value unchanged unless nothing else is left.
pub fn psi_threshold(seq: &CreationSequence) -> usize {
    let mut value = 0;
    for (i, op) in seq.ops().iter().enumerate() {
        value = match op {
            _ if i == 0 => 1,
            CreationOp::AddUniversal => value + 1,
            CreationOp::AddIsolated => value.max(1),
        };
    }
    value
}

/// Lowest-labeled universal vertex `u` and `g - u`.
pub fn reduce_universal(g: &Graph) -> Option<(usize, Graph)> {
    let u = (0..g.n()).find(|&v| g.is_universal(v))?;
    Some((u, g.remove_vertex(u).expect("u is a vertex")))
}

/// Least cycle length compatible with a given achromatic value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarcuBound {
    pub psi: usize,
    pub min_n: usize,
}

/// `psi(psi-1)/2` for odd `psi`, `psi^2/2` for even `psi`.
pub fn marcu_min_length(psi: usize) -> Result<MarcuBound> {
    if psi == 0 {
        return Err(Error::Argument(
            "achromatic value must be at least 1".into(),
        ));
    }
    let min_n = if psi % 2 == 1 {
        psi * (psi - 1) / 2
    } else {
        psi * psi / 2
    };
    Ok(MarcuBound { psi, min_n })
}

/// Largest `psi` whose minimum cycle length does not exceed `n`.
pub fn psi_cycle_upper(n: usize) -> usize {
    let mut psi = 1;
    while marcu_min_length(psi + 1).expect("psi >= 1").min_n <= n {
        psi += 1;
    }
    psi
}
