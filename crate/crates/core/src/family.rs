//! Named graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n}`: a hub joined to `n` leaves.
    Star,
    /// Hub universal over `C_n`, `n + 1` vertices.
    Wheel,
    /// Hub universal over `P_n`, `n + 1` vertices.
    Fan,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Fan => "fan",
        }
    }

    fn min_param(self) -> usize {
        match self {
            FamilyKind::Cycle | FamilyKind::Wheel => 3,
            FamilyKind::Fan => 1,
            FamilyKind::Path | FamilyKind::Complete | FamilyKind::Star => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub kind: FamilyKind,
    pub n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        Family { kind, n }
    }

    pub fn path(n: usize) -> Self {
        Family::new(FamilyKind::Path, n)
    }
    pub fn cycle(n: usize) -> Self {
        Family::new(FamilyKind::Cycle, n)
    }
    pub fn complete(n: usize) -> Self {
        Family::new(FamilyKind::Complete, n)
    }
    pub fn star(n: usize) -> Self {
        Family::new(FamilyKind::Star, n)
    }
    pub fn wheel(n: usize) -> Self {
        Family::new(FamilyKind::Wheel, n)
    }
    pub fn fan(n: usize) -> Self {
        Family::new(FamilyKind::Fan, n)
    }

    pub fn generate(&self) -> Result<Graph> {
        let n = self.n;
        if n < self.kind.min_param() {
            return Err(Error::Family(format!(
                "{} requires n >= {}, got {n}",
                self.kind.name(),
                self.kind.min_param()
            )));
        }
        match self.kind {
            FamilyKind::Path => path(n),
            FamilyKind::Cycle => {
                let mut g = path(n)?;
                g.add_edge(n - 1, 0)?;
                Ok(g)
            }
            FamilyKind::Complete => Graph::complete(n),
            FamilyKind::Star => Graph::empty(n)?.add_universal(),
            FamilyKind::Wheel => Family::cycle(n).generate()?.add_universal(),
            FamilyKind::Fan => path(n)?.add_universal(),
        }
    }
}

fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn generate(f: Family) -> Result<Graph> {
    f.generate()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.name(), self.n)
    }
}

/// Parses `kind:N`, e.g. `wheel:9`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Family(format!("expected kind:N, got `{s}`")))?;
        let kind = match kind {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "star" => FamilyKind::Star,
            "wheel" => FamilyKind::Wheel,
            "fan" => FamilyKind::Fan,
            other => return Err(Error::Family(format!("unknown family `{other}`"))),
        };
        let n = n
            .parse()
            .map_err(|_| Error::Family(format!("bad size `{n}`")))?;
        Ok(Family { kind, n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_nine() {
        let w = Family::wheel(9).generate().unwrap();
        assert_eq!(w.n(), 10);
        assert_eq!(w.edge_count(), 18);
        assert!(w.is_universal(9));
    }

    #[test]
    fn add_universal_to_c4_is_w4() {
        let w = Family::cycle(4)
            .generate()
            .unwrap()
            .add_universal()
            .unwrap();
        assert_eq!(w, Family::wheel(4).generate().unwrap());
        assert_eq!(w.degree(4), 4);
    }

    #[test]
    fn fan_and_star() {
        let f = Family::fan(3).generate().unwrap();
        assert_eq!((f.n(), f.edge_count()), (4, 5));
        let s = Family::star(3).generate().unwrap();
        assert_eq!(s.edges(), vec![(0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn parameter_minimums() {
        assert!(Family::cycle(2).generate().is_err());
        assert!(Family::wheel(2).generate().is_err());
        assert!(Family::fan(0).generate().is_err());
        assert!(Family::path(0).generate().is_ok());
    }

    #[test]
    fn parse_family() {
        assert_eq!("wheel:9".parse::<Family>().unwrap(), Family::wheel(9));
        assert!("web:9".parse::<Family>().is_err());
        assert!("cycle".parse::<Family>().is_err());
    }
}
