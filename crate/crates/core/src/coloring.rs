//! Exact chromatic and achromatic numbers with certificates.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fold::{verify_trace, FoldTrace};
use crate::graph::{bit, Graph};
use crate::Limits;

/// A surjective vertex colouring onto `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    /// Rejects assignments that skip a colour index.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; count];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::Coloring(format!(
                "colour {missing} unused among 0..{count}"
            )));
        }
        Ok(Coloring { colors, count })
    }

    /// Renumbers colours in order of first appearance.
    pub fn normalized(colors: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring::new(colors).expect("first-appearance numbering is dense")
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colour classes as vertex masks, indexed by colour.
    pub fn classes(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c] |= bit(v);
        }
        out
    }

    /// `coloring v1` certificate text.
    pub fn to_text(&self) -> String {
        let mut s = String::from("coloring v1\n");
        for (v, c) in self.colors.iter().enumerate() {
            writeln!(s, "{v} {c}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, "coloring v1")) => {}
            Some((line, _)) => return Err(Error::text(line, "expected header `coloring v1`")),
            None => return Err(Error::text(1, "empty certificate")),
        }
        let mut entries: Vec<Option<usize>> = Vec::new();
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let [v, c] = fields.as_slice() else {
                return Err(Error::text(line, "expected `vertex color`"));
            };
            let v: usize = v.parse().map_err(|_| Error::text(line, "bad vertex"))?;
            let c: usize = c.parse().map_err(|_| Error::text(line, "bad colour"))?;
            if v >= crate::graph::MAX_VERTICES {
                return Err(Error::text(line, "vertex out of range"));
            }
            if entries.len() <= v {
                entries.resize(v + 1, None);
            }
            if entries[v].replace(c).is_some() {
                return Err(Error::text(line, format!("vertex {v} coloured twice")));
            }
        }
        let colors = entries
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Coloring(format!("vertex {v} has no colour"))))
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(colors)
    }
}

fn check_cover(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::Coloring(format!(
            "assignment covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_cover(g, c)?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// Every unordered pair of colours appears on some edge.
pub fn is_complete(g: &Graph, c: &Coloring) -> Result<bool> {
    check_cover(g, c)?;
    Ok(classes_complete(g, &c.classes()))
}

fn classes_complete(g: &Graph, classes: &[u64]) -> bool {
    classes.iter().enumerate().all(|(i, &a)| {
        let reach = g.neighborhood_of(a);
        classes[i + 1..].iter().all(|&b| reach & b != 0)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub value: usize,
    pub certificate: Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiResult {
    pub value: usize,
    pub certificate: Coloring,
}

/// Largest `k` with `k(k-1)/2 <= m`: a complete `k`-colouring needs an
/// edge for each colour pair.
pub fn edge_bound(m: usize) -> usize {
    let mut k = 0;
    while (k + 1) * k / 2 <= m {
        k += 1;
    }
    k
}

pub fn chi(g: &Graph) -> Result<ChiResult> {
    chi_with(g, &Limits::default())
}

/// Exact chromatic number. Tries `k = lb, lb+1, ...` where `lb` is the size
/// of a greedily grown clique; the first success is optimal because every
/// smaller `k` was refuted by exhaustive search (or is below a clique).
pub fn chi_with(g: &Graph, limits: &Limits) -> Result<ChiResult> {
    let n = g.n();
    if n > limits.chi {
        return Err(Error::TooLarge {
            what: "chromatic number",
            n,
            bound: limits.chi,
        });
    }
    if n == 0 {
        return Ok(ChiResult {
            value: 0,
            certificate: Coloring::new(Vec::new())?,
        });
    }
    let order = degree_order(g);
    let lb = greedy_clique(g, &order).max(1);
    for k in lb..=n {
        if let Some(colors) = k_color(g, &order, k) {
            let certificate = Coloring::normalized(&colors);
            debug_assert_eq!(certificate.num_colors(), k);
            return Ok(ChiResult {
                value: k,
                certificate,
            });
        }
    }
    unreachable!("n colours always suffice")
}

/// Whether `g` has a proper colouring with at most `k` colours.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    g.n() == 0 || k_color(g, &degree_order(g), k).is_some()
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

fn greedy_clique(g: &Graph, order: &[usize]) -> usize {
    let mut best = 0;
    for &start in order {
        let mut clique = bit(start);
        let mut cand = g.neighbors(start);
        for &v in order {
            if cand & bit(v) != 0 {
                clique |= bit(v);
                cand &= g.neighbors(v);
            }
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

/// Backtracking `k`-colouring in `order`, opening at most one new colour
/// per vertex so colour permutations are not revisited.
fn k_color(g: &Graph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        order: &[usize],
        k: usize,
        i: usize,
        used: usize,
        classes: &mut Vec<u64>,
        colors: &mut [usize],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let open = (used + 1).min(k);
        for c in 0..open {
            if g.neighbors(v) & classes[c] == 0 {
                classes[c] |= bit(v);
                colors[v] = c;
                if go(g, order, k, i + 1, used.max(c + 1), classes, colors) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        false
    }
    let mut classes = vec![0u64; k];
    let mut colors = vec![0; g.n()];
    go(g, order, k, 0, 0, &mut classes, &mut colors).then_some(colors)
}

pub fn psi(g: &Graph) -> Result<PsiResult> {
    psi_with(g, &Limits::default())
}

/// Exact achromatic number.
///
/// Enumerates partitions of the vertices into independent classes with
/// classes ordered by their least vertex (vertex `v` joins an existing
/// class or opens the next one), keeping the largest complete one.
/// Prunes:
/// - a branch whose class count plus remaining vertices cannot beat the
///   incumbent;
/// - a branch with more classes than the edge bound allows, since class
///   counts never shrink along a branch;
/// - the whole search once the incumbent meets the edge bound.
pub fn psi_with(g: &Graph, limits: &Limits) -> Result<PsiResult> {
    let n = g.n();
    if n > limits.psi {
        return Err(Error::TooLarge {
            what: "achromatic number",
            n,
            bound: limits.psi,
        });
    }
    let mut search = PsiSearch {
        g,
        cap: edge_bound(g.edge_count()).min(n),
        best: 0,
        best_colors: vec![0; n],
        classes: Vec::with_capacity(n),
        colors: vec![0; n],
    };
    if n > 0 {
        search.descend(0);
    }
    let certificate = Coloring::new(search.best_colors)?;
    Ok(PsiResult {
        value: search.best,
        certificate,
    })
}

struct PsiSearch<'a> {
    g: &'a Graph,
    cap: usize,
    best: usize,
    best_colors: Vec<usize>,
    classes: Vec<u64>,
    colors: Vec<usize>,
}

impl PsiSearch<'_> {
    fn descend(&mut self, v: usize) {
        let n = self.g.n();
        if self.best >= self.cap {
            return;
        }
        let open = self.classes.len();
        if v == n {
            if open > self.best && classes_complete(self.g, &self.classes) {
                self.best = open;
                self.best_colors.copy_from_slice(&self.colors);
            }
            return;
        }
        if open + (n - v) <= self.best {
            return;
        }
        // new class first: reaches large incumbents early
        if open < self.cap {
            self.classes.push(bit(v));
            self.colors[v] = open;
            self.descend(v + 1);
            self.classes.pop();
        }
        let nbrs = self.g.neighbors(v);
        for c in 0..open {
            if nbrs & self.classes[c] == 0 {
                self.classes[c] |= bit(v);
                self.colors[v] = c;
                self.descend(v + 1);
                self.classes[c] &= !bit(v);
            }
        }
    }
}

/// Colouring of `t.source` by fold classes. Requires a valid trace ending
/// in a clique; the result is then proper and complete with `|target|`
/// colours.
pub fn coloring_from_trace(t: &FoldTrace) -> Result<Coloring> {
    let verdict = verify_trace(t);
    if let Some(failure) = verdict.failure {
        return Err(Error::Trace(failure.to_string()));
    }
    if !t.target.is_clique() {
        return Err(Error::Trace("target is not a clique".into()));
    }
    Coloring::new(t.class_map.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn c9_listed_coloring() -> Coloring {
        // a, d, b, a, c, d, a, c, b with a=0 b=1 c=2 d=3
        Coloring::new(vec![0, 3, 1, 0, 2, 3, 0, 2, 1]).unwrap()
    }

    #[test]
    fn c9_four_coloring_is_proper_and_complete() {
        let c9 = Family::cycle(9).generate().unwrap();
        let c = c9_listed_coloring();
        assert!(is_proper(&c9, &c).unwrap());
        assert!(is_complete(&c9, &c).unwrap());
    }

    #[test]
    fn properness_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_proper(&k2, &Coloring::new(vec![0, 0]).unwrap()).unwrap());
        let e = Graph::empty(3).unwrap();
        assert!(is_proper(&e, &Coloring::new(vec![0, 0, 0]).unwrap()).unwrap());
        assert!(is_proper(&e, &Coloring::new(vec![0, 0]).unwrap()).is_err());
    }

    #[test]
    fn completeness_examples() {
        let p4 = Family::path(4).generate().unwrap();
        assert!(is_complete(&p4, &Coloring::new(vec![0, 1, 2, 0]).unwrap()).unwrap());
        let c4 = Family::cycle(4).generate().unwrap();
        assert!(!is_complete(&c4, &Coloring::new(vec![0, 1, 0, 2]).unwrap()).unwrap());
    }

    #[test]
    fn coloring_must_be_surjective() {
        assert!(Coloring::new(vec![0, 2]).is_err());
        assert_eq!(Coloring::normalized(&[5, 2, 5]).colors(), &[0, 1, 0]);
    }

    #[test]
    fn chromatic_numbers() {
        let chi_of = |f: Family| chi(&f.generate().unwrap()).unwrap().value;
        assert_eq!(chi_of(Family::cycle(9)), 3);
        assert_eq!(chi_of(Family::wheel(9)), 4);
        assert_eq!(chi_of(Family::complete(4)), 4);
        assert_eq!(chi(&Graph::empty(0).unwrap()).unwrap().value, 0);
        assert_eq!(chi(&Graph::empty(1).unwrap()).unwrap().value, 1);
        assert!(chi(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn achromatic_numbers() {
        let psi_of = |f: Family| psi(&f.generate().unwrap()).unwrap();
        let r = psi_of(Family::cycle(9));
        assert_eq!(r.value, 4);
        let c9 = Family::cycle(9).generate().unwrap();
        assert!(is_proper(&c9, &r.certificate).unwrap());
        assert!(is_complete(&c9, &r.certificate).unwrap());
        assert_eq!(psi_of(Family::path(4)).value, 3);
        assert_eq!(psi_of(Family::complete(4)).value, 4);
        assert_eq!(psi(&Graph::empty(0).unwrap()).unwrap().value, 0);
        assert_eq!(psi(&Graph::empty(3).unwrap()).unwrap().value, 1);
        assert!(psi(&Graph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn edge_bound_values() {
        assert_eq!(edge_bound(0), 1);
        assert_eq!(edge_bound(3), 3);
        assert_eq!(edge_bound(5), 3);
        assert_eq!(edge_bound(6), 4);
        assert_eq!(edge_bound(18), 6);
    }

    #[test]
    fn certificate_text_round_trip() {
        let c = c9_listed_coloring();
        assert_eq!(Coloring::from_text(&c.to_text()).unwrap(), c);
        assert!(Coloring::from_text("coloring v1\n0 0\n0 1\n").is_err());
        assert!(Coloring::from_text("coloring v1\n1 0\n").is_err());
        assert!(Coloring::from_text("colouring\n").is_err());
    }
}
