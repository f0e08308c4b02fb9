//! Simple folds, fold traces and the folding number.
//!
//! A simple fold identifies two vertices at distance two. The merged
//! vertex keeps the smaller label and labels above the larger one shift
//! down by one, so a list of `(x, y)` steps replays to the same labeled
//! graph every time.

use std::collections::HashSet;
use std::fmt;

use crate::canon::canonical_key_with_limit;
use crate::coloring::{chi_with, edge_bound, psi_with};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::io::{emit_graph6, parse_graph6};
use crate::special::reduce_universal;
use crate::Limits;

/// One identification `x ~ y`, labels valid in the state it applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FoldStep {
    pub x: usize,
    pub y: usize,
}

impl FoldStep {
    pub fn new(x: usize, y: usize) -> Self {
        FoldStep { x, y }
    }

    fn ordered(self) -> (usize, usize) {
        (self.x.min(self.y), self.x.max(self.y))
    }

    /// Where label `v` of the pre-fold state ends up.
    pub fn relabel(self, v: usize) -> usize {
        let (keep, gone) = self.ordered();
        match v.cmp(&gone) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => v - 1,
        }
    }
}

/// Pairs `{x, y}` at distance two, `x < y`, in lexicographic order.
pub fn fold_candidates(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        let nx = g.neighbors(x);
        for y in x + 1..g.n() {
            if nx & bit(y) == 0 && nx & g.neighbors(y) != 0 {
                out.push((x, y));
            }
        }
    }
    out
}

/// Identifies `x` and `y`, which must be at distance two.
pub fn simple_fold(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let reason = if x == y {
        Some("same vertex".to_string())
    } else if g.has_edge(x, y) {
        Some("vertices are adjacent".to_string())
    } else if g.neighbors(x) & g.neighbors(y) == 0 {
        let d = g.distance(x, y)?;
        Some(match d {
            Some(d) => format!("distance {d}"),
            None => "different components".to_string(),
        })
    } else {
        None
    };
    if let Some(reason) = reason {
        return Err(Error::FoldPrecondition { x, y, reason });
    }
    Ok(fold_unchecked(g, x, y))
}

fn fold_unchecked(g: &Graph, x: usize, y: usize) -> Graph {
    let step = FoldStep::new(x, y);
    let (keep, gone) = step.ordered();
    let remap = |mask: u64| -> u64 {
        let below = mask & (bit(gone) - 1);
        let above = (mask >> (gone + 1)) << gone;
        let merged = if mask & bit(gone) != 0 { bit(keep) } else { 0 };
        below | above | merged
    };
    let mut rows = Vec::with_capacity(g.n() - 1);
    for v in 0..g.n() {
        if v == gone {
            continue;
        }
        let row = if v == keep {
            g.neighbors(keep) | g.neighbors(gone)
        } else {
            g.neighbors(v)
        };
        rows.push(remap(row));
    }
    Graph::from_rows_unchecked(rows)
}

/// A replayable fold sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldTrace {
    pub source: Graph,
    pub steps: Vec<FoldStep>,
    /// `class_map[v]` is the target vertex that source vertex `v` became.
    pub class_map: Vec<usize>,
    pub target: Graph,
}

impl FoldTrace {
    pub fn empty(source: Graph) -> Self {
        FoldTrace {
            class_map: (0..source.n()).collect(),
            target: source.clone(),
            source,
            steps: Vec::new(),
        }
    }

    /// Replays `steps` from `source`, checking every precondition.
    pub fn replay(source: &Graph, steps: &[FoldStep]) -> Result<Self> {
        let mut state = source.clone();
        for s in steps {
            state = simple_fold(&state, s.x, s.y)?;
        }
        Ok(FoldTrace {
            source: source.clone(),
            steps: steps.to_vec(),
            class_map: compose_class_map(source.n(), steps),
            target: state,
        })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex classes of the source, indexed by target vertex.
    pub fn preimages(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.target.n()];
        for (v, &c) in self.class_map.iter().enumerate() {
            if c < out.len() {
                out[c] |= bit(v);
            }
        }
        out
    }

    /// `fold-trace v1` text.
    pub fn to_text(&self) -> String {
        let mut s = format!("fold-trace v1\n{}\n", emit_graph6(&self.source));
        for step in &self.steps {
            s.push_str(&format!("fold {} {}\n", step.x, step.y));
        }
        s.push_str(&format!("target {}\n", emit_graph6(&self.target)));
        s
    }

    /// Parses `fold-trace v1` text. The class map is rebuilt from the steps
    /// by label arithmetic only; fold preconditions and the target are left
    /// for [`verify_trace`].
    pub fn from_text(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        match lines.first() {
            Some((_, "fold-trace v1")) => {}
            Some((line, _)) => return Err(Error::text(*line, "expected header `fold-trace v1`")),
            None => return Err(Error::text(1, "empty trace")),
        }
        let (sline, src) = lines
            .get(1)
            .ok_or_else(|| Error::text(2, "missing source graph6 line"))?;
        let source = parse_graph6(src).map_err(|e| Error::text(*sline, e.to_string()))?;
        let Some(((tline, last), body)) = lines[2..].split_last() else {
            return Err(Error::text(sline + 1, "missing `target` line"));
        };
        let target_g6 = last
            .strip_prefix("target ")
            .ok_or_else(|| Error::text(*tline, "expected `target <graph6>` as final line"))?;
        let target =
            parse_graph6(target_g6.trim()).map_err(|e| Error::text(*tline, e.to_string()))?;
        let mut steps = Vec::with_capacity(body.len());
        let mut n = source.n();
        for &(line, l) in body {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let ["fold", x, y] = fields.as_slice() else {
                return Err(Error::text(line, "expected `fold x y`"));
            };
            let x: usize = x.parse().map_err(|_| Error::text(line, "bad vertex"))?;
            let y: usize = y.parse().map_err(|_| Error::text(line, "bad vertex"))?;
            if x >= n || y >= n || x == y {
                return Err(Error::text(
                    line,
                    format!("step ({x}, {y}) invalid on {n} vertices"),
                ));
            }
            n -= 1;
            steps.push(FoldStep::new(x, y));
        }
        Ok(FoldTrace {
            class_map: compose_class_map(source.n(), &steps),
            source,
            steps,
            target,
        })
    }
}

/// Composition of the per-step identifications; label arithmetic only.
pub fn compose_class_map(n: usize, steps: &[FoldStep]) -> Vec<usize> {
    (0..n)
        .map(|v| steps.iter().fold(v, |acc, s| s.relabel(acc)))
        .collect()
}

/// Why a trace failed verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceFailure {
    /// 1-based step index whose pair was not at distance two.
    Step {
        index: usize,
        x: usize,
        y: usize,
        reason: String,
    },
    TargetMismatch {
        expected: String,
        replayed: String,
    },
    ClassMapMismatch {
        vertex: Option<usize>,
    },
}

impl fmt::Display for TraceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceFailure::Step {
                index,
                x,
                y,
                reason,
            } => {
                write!(f, "step {index} (fold {x} {y}): {reason}")
            }
            TraceFailure::TargetMismatch { expected, replayed } => {
                write!(f, "replay reaches {replayed}, trace claims {expected}")
            }
            TraceFailure::ClassMapMismatch { vertex: Some(v) } => {
                write!(f, "class map mismatch at source vertex {v}")
            }
            TraceFailure::ClassMapMismatch { vertex: None } => {
                write!(f, "class map has the wrong length")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceVerdict {
    pub valid: bool,
    pub failure: Option<TraceFailure>,
}

/// Replays `t` and reports the first inconsistency, if any.
pub fn verify_trace(t: &FoldTrace) -> TraceVerdict {
    let fail = |f: TraceFailure| TraceVerdict {
        valid: false,
        failure: Some(f),
    };
    let mut state = t.source.clone();
    for (i, s) in t.steps.iter().enumerate() {
        match simple_fold(&state, s.x, s.y) {
            Ok(next) => state = next,
            Err(e) => {
                let reason = match e {
                    Error::FoldPrecondition { reason, .. } => reason,
                    other => other.to_string(),
                };
                return fail(TraceFailure::Step {
                    index: i + 1,
                    x: s.x,
                    y: s.y,
                    reason,
                });
            }
        }
    }
    if state != t.target {
        return fail(TraceFailure::TargetMismatch {
            expected: emit_graph6(&t.target),
            replayed: emit_graph6(&state),
        });
    }
    let expected = compose_class_map(t.source.n(), &t.steps);
    if expected.len() != t.class_map.len() {
        return fail(TraceFailure::ClassMapMismatch { vertex: None });
    }
    if let Some(v) = (0..expected.len()).find(|&v| expected[v] != t.class_map[v]) {
        return fail(TraceFailure::ClassMapMismatch { vertex: Some(v) });
    }
    TraceVerdict {
        valid: true,
        failure: None,
    }
}

/// Folds the lexicographically least candidate until none is left.
pub fn maximal_fold(g: &Graph) -> Result<FoldTrace> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut state = g.clone();
    let mut steps = Vec::new();
    while let Some(&(x, y)) = fold_candidates(&state).first() {
        state = fold_unchecked(&state, x, y);
        steps.push(FoldStep::new(x, y));
    }
    Ok(FoldTrace {
        source: g.clone(),
        class_map: compose_class_map(g.n(), &steps),
        steps,
        target: state,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMethod {
    /// Depth-first search over fold states.
    Search,
    /// Universal-vertex reduction: one plus the achromatic number of the
    /// rest, witnessed by folding each colour class together.
    UniversalReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    pub sigma: usize,
    pub witness: FoldTrace,
    pub method: SigmaMethod,
}

pub fn sigma(g: &Graph) -> Result<SigmaResult> {
    sigma_with(g, &Limits::default())
}

/// Exact folding number.
///
/// Graphs with a universal vertex `u` take the reduction path: every pair
/// of non-adjacent vertices of `g - u` is at distance two through `u`, so
/// folding each class of a complete colouring of `g - u` yields a clique
/// on `1 + psi(g - u)` vertices, and no fold can do better because the
/// fold classes of any clique target form a complete colouring of `g`
/// where `u` sits alone. Everything else goes to [`sigma_search`].
pub fn sigma_with(g: &Graph, limits: &Limits) -> Result<SigmaResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, rest)) = reduce_universal(g) {
        return sigma_by_reduction(g, u, &rest, limits);
    }
    sigma_search(g, limits)
}

fn sigma_by_reduction(g: &Graph, u: usize, rest: &Graph, limits: &Limits) -> Result<SigmaResult> {
    let psi = psi_with(rest, limits)?;
    // lift classes of g - u back to labels of g
    let lift = |v: usize| if v < u { v } else { v + 1 };
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); psi.value];
    for (v, &c) in psi.certificate.colors().iter().enumerate() {
        classes[c].push(lift(v));
    }
    let mut steps = Vec::new();
    let mut label: Vec<usize> = (0..g.n()).collect();
    for class in &classes {
        for &v in &class[1..] {
            let step = FoldStep::new(label[class[0]], label[v]);
            for l in label.iter_mut() {
                *l = step.relabel(*l);
            }
            steps.push(step);
        }
    }
    let witness = FoldTrace::replay(g, &steps)?;
    debug_assert!(witness.target.is_clique());
    Ok(SigmaResult {
        sigma: witness.target.n(),
        witness,
        method: SigmaMethod::UniversalReduction,
    })
}

/// Exact folding number by search over fold states, without the
/// universal-vertex shortcut.
///
/// Depth-first in candidate order. States already expanded are skipped by
/// canonical key: isomorphic states reach isomorphic sets of cliques, and
/// the first expansion either recorded each of them or cut it because it
/// could not beat an incumbent that has only grown since.
///
/// A state is cut when `min(n, edge_bound(m))` does not exceed the
/// incumbent. That bound is admissible: folding never adds vertices, a
/// fold merges two vertices with a common neighbour so it never adds
/// edges, and a clique on `k` vertices has `k(k-1)/2` edges.
pub fn sigma_search(g: &Graph, limits: &Limits) -> Result<SigmaResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > limits.sigma {
        return Err(Error::TooLarge {
            what: "folding-number search",
            n: g.n(),
            bound: limits.sigma,
        });
    }
    let mut search = SigmaSearch {
        canon_limit: limits.canon,
        best: 0,
        best_steps: Vec::new(),
        path: Vec::new(),
        seen: HashSet::new(),
    };
    let cap = state_bound(g);
    search.descend(g, cap);
    let witness = FoldTrace::replay(g, &search.best_steps)?;
    Ok(SigmaResult {
        sigma: search.best,
        witness,
        method: SigmaMethod::Search,
    })
}

fn state_bound(g: &Graph) -> usize {
    g.n().min(edge_bound(g.edge_count()))
}

struct SigmaSearch {
    canon_limit: usize,
    best: usize,
    best_steps: Vec<FoldStep>,
    path: Vec<FoldStep>,
    seen: HashSet<crate::canon::CanonicalKey>,
}

impl SigmaSearch {
    fn descend(&mut self, g: &Graph, cap: usize) {
        if self.best >= cap {
            return;
        }
        let candidates = fold_candidates(g);
        if candidates.is_empty() {
            // connected with no distance-two pair: a clique
            if g.n() > self.best {
                self.best = g.n();
                self.best_steps = self.path.clone();
            }
            return;
        }
        if state_bound(g) <= self.best {
            return;
        }
        if let Ok(key) = canonical_key_with_limit(g, self.canon_limit) {
            if !self.seen.insert(key) {
                return;
            }
        }
        for (x, y) in candidates {
            let child = fold_unchecked(g, x, y);
            self.path.push(FoldStep::new(x, y));
            self.descend(&child, cap);
            self.path.pop();
        }
    }
}

/// How [`fold_to_chi_detailed`] reached its clique.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiFoldRoute {
    /// Same-coloured distance-two pairs of the first optimal colouring.
    Greedy,
    /// The greedy pass stalled and a fresh optimal colouring unblocked it.
    Recolored,
    /// Search over folds that keep the chromatic number.
    Exhaustive,
}

pub fn fold_to_chi(g: &Graph) -> Result<FoldTrace> {
    fold_to_chi_detailed(g, &Limits::default()).map(|(t, _)| t)
}

/// Folds `g` onto `K_chi(g)`.
///
/// Takes an optimal colouring and repeatedly folds the least pair of
/// same-coloured vertices at distance two; the merged vertex keeps the
/// colour, so the colouring stays proper with `chi` colours. When no such
/// pair remains and the state is still not a clique, the current state is
/// recoloured optimally and the pass resumes; if that also stalls, a search
/// over folds that keep the chromatic number finishes the job.
pub fn fold_to_chi_detailed(g: &Graph, limits: &Limits) -> Result<(FoldTrace, ChiFoldRoute)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chi = chi_with(g, limits)?;
    let k = chi.value;
    let mut route = ChiFoldRoute::Greedy;
    let mut state = g.clone();
    let mut colors = chi.certificate.colors().to_vec();
    let mut steps = Vec::new();
    let mut recolored_here = false;
    while !state.is_clique() {
        let pair = fold_candidates(&state)
            .into_iter()
            .find(|&(x, y)| colors[x] == colors[y]);
        match pair {
            Some((x, y)) => {
                let step = FoldStep::new(x, y);
                state = fold_unchecked(&state, x, y);
                colors.remove(step.ordered().1);
                steps.push(step);
                recolored_here = false;
            }
            None if !recolored_here => {
                let fresh = chi_with(&state, limits)?;
                debug_assert_eq!(fresh.value, k);
                colors = fresh.certificate.colors().to_vec();
                route = ChiFoldRoute::Recolored;
                recolored_here = true;
            }
            None => {
                let tail = chi_preserving_search(&state, k, limits)?;
                steps.extend(tail);
                route = ChiFoldRoute::Exhaustive;
                break;
            }
        }
    }
    let trace = FoldTrace::replay(g, &steps)?;
    debug_assert_eq!(trace.target.n(), k);
    Ok((trace, route))
}

/// Fold sequence from `g` to a clique that never changes the chromatic
/// number `k`. Such a sequence exists for every connected graph.
fn chi_preserving_search(g: &Graph, k: usize, limits: &Limits) -> Result<Vec<FoldStep>> {
    fn go(
        g: &Graph,
        k: usize,
        limits: &Limits,
        seen: &mut HashSet<crate::canon::CanonicalKey>,
        path: &mut Vec<FoldStep>,
    ) -> Result<bool> {
        if g.is_clique() {
            return Ok(g.n() == k);
        }
        if let Ok(key) = canonical_key_with_limit(g, limits.canon) {
            if !seen.insert(key) {
                return Ok(false);
            }
        }
        for (x, y) in fold_candidates(g) {
            let child = fold_unchecked(g, x, y);
            if chi_with(&child, limits)?.value != k {
                continue;
            }
            path.push(FoldStep::new(x, y));
            if go(&child, k, limits, seen, path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
    let mut path = Vec::new();
    if go(g, k, limits, &mut HashSet::new(), &mut path)? {
        Ok(path)
    } else {
        Err(Error::Trace(format!(
            "no chromatic-number preserving fold onto K{k}"
        )))
    }
}

pub fn fold_to_k(g: &Graph, k: usize) -> Result<FoldTrace> {
    fold_to_k_with(g, k, &Limits::default())
}

/// Folds `g` onto `K_k` for any `chi(g) <= k <= sigma(g)`.
///
/// Walks the folding-number witness, recomputing the chromatic number
/// after each step. A simple fold raises it by at most one, the walk
/// starts at `chi(g)` and ends at `sigma(g)`, so some prefix lands exactly
/// on `k`; the state there is finished with [`fold_to_chi`].
pub fn fold_to_k_with(g: &Graph, k: usize, limits: &Limits) -> Result<FoldTrace> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lo = chi_with(g, limits)?.value;
    let sig = sigma_with(g, limits)?;
    if k < lo || k > sig.sigma {
        return Err(Error::OutOfRange {
            k,
            lo,
            hi: sig.sigma,
        });
    }
    let mut state = g.clone();
    let mut steps = Vec::new();
    let mut current = lo;
    for step in &sig.witness.steps {
        if current == k {
            break;
        }
        state = fold_unchecked(&state, step.x, step.y);
        steps.push(*step);
        current = chi_with(&state, limits)?.value;
    }
    debug_assert_eq!(current, k);
    let (tail, _) = fold_to_chi_detailed(&state, limits)?;
    steps.extend(tail.steps);
    FoldTrace::replay(g, &steps)
}

/// Sets of source vertices merged by the trace; used by tests and suites.
pub fn classes_are_independent(t: &FoldTrace) -> bool {
    t.preimages()
        .iter()
        .all(|&c| bits(c).all(|v| t.source.neighbors(v) & c == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn fam(f: Family) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn candidates() {
        assert_eq!(fold_candidates(&fam(Family::path(4))), vec![(0, 2), (1, 3)]);
        assert!(fold_candidates(&fam(Family::complete(4))).is_empty());
        assert_eq!(
            fold_candidates(&fam(Family::cycle(4))),
            vec![(0, 2), (1, 3)]
        );
    }

    #[test]
    fn simple_fold_examples() {
        let p3 = fam(Family::path(3));
        let folded = simple_fold(&fam(Family::path(4)), 0, 2).unwrap();
        // merged vertex 0 is adjacent to old 1 and old 3 (now 2)
        assert_eq!(folded.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(
            crate::canon::canonical_key(&folded),
            crate::canon::canonical_key(&p3)
        );
        let c4 = simple_fold(&fam(Family::cycle(4)), 0, 2).unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 2)]);
        let err = simple_fold(&fam(Family::path(4)), 0, 3).unwrap_err();
        assert!(matches!(err, Error::FoldPrecondition { reason, .. } if reason == "distance 3"));
        assert!(simple_fold(&fam(Family::path(4)), 0, 1).is_err());
        assert!(simple_fold(&fam(Family::path(4)), 2, 2).is_err());
    }

    #[test]
    fn relabel_shifts_above_removed() {
        let s = FoldStep::new(4, 1);
        assert_eq!(
            (0..6).map(|v| s.relabel(v)).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 1, 4]
        );
    }

    #[test]
    fn maximal_fold_examples() {
        let t = maximal_fold(&fam(Family::complete(3))).unwrap();
        assert!(t.is_empty());
        let t = maximal_fold(&fam(Family::path(4))).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.target, fam(Family::complete(2)));
        let t = maximal_fold(&fam(Family::cycle(9))).unwrap();
        assert!(t.target.is_clique());
        assert!((3..=4).contains(&t.target.n()));
        assert!(verify_trace(&t).valid);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(maximal_fold(&two_k2), Err(Error::Disconnected));
    }

    #[test]
    fn sigma_examples() {
        let r = sigma(&fam(Family::complete(4))).unwrap();
        assert_eq!(r.sigma, 4);
        assert!(r.witness.is_empty());
        assert_eq!(sigma(&fam(Family::path(4))).unwrap().sigma, 2);
        let w9 = sigma(&fam(Family::wheel(9))).unwrap();
        assert_eq!(w9.sigma, 5);
        assert_eq!(w9.method, SigmaMethod::UniversalReduction);
        assert!(verify_trace(&w9.witness).valid);
        assert_eq!(w9.witness.target, fam(Family::complete(5)));
    }

    #[test]
    fn wheel_nine_by_search() {
        let limits = Limits {
            sigma: 10,
            ..Limits::default()
        };
        let r = sigma_search(&fam(Family::wheel(9)), &limits).unwrap();
        assert_eq!(r.sigma, 5);
        assert!(verify_trace(&r.witness).valid);
        assert!(sigma_search(&fam(Family::wheel(9)), &Limits::default()).is_err());
    }

    #[test]
    fn sigma_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(sigma(&g), Err(Error::Disconnected));
    }

    #[test]
    fn fold_to_chi_examples() {
        let t = fold_to_chi(&fam(Family::cycle(5))).unwrap();
        assert_eq!(t.target, fam(Family::complete(3)));
        assert!(verify_trace(&t).valid);
        let t = fold_to_chi(&fam(Family::path(4))).unwrap();
        assert_eq!(t.target.n(), 2);
        assert!(fold_to_chi(&fam(Family::complete(4))).unwrap().is_empty());
    }

    #[test]
    fn fold_to_k_examples() {
        let w9 = fam(Family::wheel(9));
        for k in [4, 5] {
            let t = fold_to_k(&w9, k).unwrap();
            assert!(verify_trace(&t).valid);
            assert_eq!(t.target, fam(Family::complete(k)));
        }
        assert_eq!(
            fold_to_k(&fam(Family::path(4)), 3),
            Err(Error::OutOfRange { k: 3, lo: 2, hi: 2 })
        );
        assert_eq!(
            fold_to_k(&w9, 3),
            Err(Error::OutOfRange { k: 3, lo: 4, hi: 5 })
        );
    }

    #[test]
    fn verify_trace_diagnostics() {
        let p4 = fam(Family::path(4));
        let bad = FoldTrace {
            source: p4.clone(),
            steps: vec![FoldStep::new(0, 3)],
            class_map: vec![0, 1, 2, 0],
            target: fam(Family::path(3)),
        };
        let v = verify_trace(&bad);
        assert!(!v.valid);
        assert!(matches!(
            v.failure,
            Some(TraceFailure::Step { index: 1, .. })
        ));

        let mut t = maximal_fold(&p4).unwrap();
        assert!(verify_trace(&t).valid);
        t.class_map[3] = 0;
        let v = verify_trace(&t);
        assert!(matches!(
            v.failure,
            Some(TraceFailure::ClassMapMismatch { vertex: Some(3) })
        ));
    }

    #[test]
    fn trace_text_round_trip() {
        let t = sigma(&fam(Family::wheel(9))).unwrap().witness;
        let text = t.to_text();
        assert!(text.starts_with("fold-trace v1\nI"));
        let back = FoldTrace::from_text(&text).unwrap();
        assert_eq!(back, t);
        assert!(FoldTrace::from_text("fold-trace v1\nCh\nfold 0 9\ntarget Bw\n").is_err());
        assert!(FoldTrace::from_text("fold-trace v2\n").is_err());
        // well-formed text with an illegal step still parses, verification rejects it
        let bad = FoldTrace::from_text("fold-trace v1\nCh\nfold 0 3\ntarget Bw\n").unwrap();
        assert!(!verify_trace(&bad).valid);
    }
}
