//! Property-checking suites over enumerated and generated graph families.
//!
//! Each suite recomputes both sides of an identity with independent
//! solvers and records every instance where they disagree.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{chi_with, is_complete, is_proper, psi_with, Coloring};
use crate::enumerate::{enumerate_connected, enumerate_graphs};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::fold::{
    classes_are_independent, fold_candidates, fold_to_chi_detailed, fold_to_k_with, sigma_search,
    sigma_with, simple_fold, verify_trace, ChiFoldRoute,
};
use crate::graph::{bit, Graph};
use crate::io::emit_graph6;
use crate::special::{
    is_threshold, marcu_min_length, psi_cycle_upper, psi_threshold, CreationOp, CreationSequence,
};
use crate::Limits;

pub const SCHEMA: &str = "foldkit-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Interpolation,
    ReductionLemma,
    Threshold,
    Marcu,
    Join,
    FoldChi,
    ChiStep,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Interpolation,
        Suite::ReductionLemma,
        Suite::Threshold,
        Suite::Marcu,
        Suite::Join,
        Suite::FoldChi,
        Suite::ChiStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Interpolation => "interpolation",
            Suite::ReductionLemma => "reduction-lemma",
            Suite::Threshold => "threshold",
            Suite::Marcu => "marcu",
            Suite::Join => "join",
            Suite::FoldChi => "fold-chi",
            Suite::ChiStep => "chi-step",
        }
    }

    /// Default size parameter: vertex count for enumeration suites,
    /// sequence length for `threshold`, largest cycle for `marcu`, and
    /// `n1 + n2` for `join`.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Interpolation | Suite::FoldChi | Suite::ChiStep => 6,
            Suite::ReductionLemma => 5,
            Suite::Threshold | Suite::Join => 9,
            Suite::Marcu => 12,
        }
    }

    /// Largest size parameter accepted.
    pub fn max_allowed(self) -> usize {
        match self {
            Suite::Interpolation | Suite::FoldChi | Suite::ChiStep => 7,
            Suite::ReductionLemma => 6,
            Suite::Threshold => 12,
            Suite::Marcu => 14,
            Suite::Join => 10,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub graph6: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: String,
    pub max_n: usize,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub wall_time_secs: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_n: Option<usize>,
    /// Seed for the randomized `join` suite.
    pub seed: u64,
    /// Random pairs drawn by the `join` suite.
    pub pairs: usize,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: None,
            seed: 0,
            pairs: 50,
            limits: Limits::default(),
        }
    }
}

struct Recorder {
    instances: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn check(
        &mut self,
        g: &Graph,
        ok: bool,
        expected: impl FnOnce() -> String,
        got: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                graph6: emit_graph6(g),
                expected: expected(),
                got: got(),
            });
        }
    }

    fn fail(&mut self, g: &Graph, expected: impl Into<String>, got: impl Into<String>) {
        self.failures.push(Failure {
            graph6: emit_graph6(g),
            expected: expected.into(),
            got: got.into(),
        });
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport> {
    let max_n = config.max_n.unwrap_or(suite.default_max_n());
    if max_n > suite.max_allowed() {
        return Err(Error::TooLarge {
            what: "suite size parameter",
            n: max_n,
            bound: suite.max_allowed(),
        });
    }
    let start = Instant::now();
    let mut rec = Recorder {
        instances: 0,
        failures: Vec::new(),
    };
    let limits = &config.limits;
    match suite {
        Suite::Interpolation => interpolation(max_n, limits, &mut rec)?,
        Suite::ReductionLemma => reduction_lemma(max_n, limits, &mut rec)?,
        Suite::Threshold => threshold(max_n, limits, &mut rec)?,
        Suite::Marcu => marcu(max_n, limits, &mut rec)?,
        Suite::Join => join(max_n, config.pairs, config.seed, limits, &mut rec)?,
        Suite::FoldChi => fold_chi(max_n, limits, &mut rec)?,
        Suite::ChiStep => chi_step(max_n, limits, &mut rec)?,
    }
    Ok(VerificationReport {
        schema: SCHEMA.to_string(),
        suite: suite.name().to_string(),
        max_n,
        instances: rec.instances,
        failures: rec.failures,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// Every `k` between the chromatic and folding numbers is reached by a
/// verified trace.
fn interpolation(max_n: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    for n in 1..=max_n {
        for g in enumerate_connected(n)? {
            let lo = chi_with(&g, limits)?.value;
            let hi = sigma_with(&g, limits)?.sigma;
            let psi = psi_with(&g, limits)?.value;
            if !(lo <= hi && hi <= psi) {
                rec.fail(
                    &g,
                    "chi <= sigma <= psi",
                    format!("chi={lo} sigma={hi} psi={psi}"),
                );
            }
            for k in lo..=hi {
                let outcome = fold_to_k_with(&g, k, limits);
                let ok = match &outcome {
                    Ok(t) => verify_trace(t).valid && t.target.is_clique() && t.target.n() == k,
                    Err(_) => false,
                };
                rec.check(
                    &g,
                    ok,
                    || format!("verified trace onto K{k}"),
                    || match &outcome {
                        Ok(t) => format!(
                            "trace onto {} vertices, valid={}",
                            t.target.n(),
                            verify_trace(t).valid
                        ),
                        Err(e) => e.to_string(),
                    },
                );
            }
        }
    }
    Ok(())
}

/// With a universal vertex: fold search, one plus the achromatic number of
/// the rest, and the achromatic number of the whole graph all agree.
fn reduction_lemma(max_n: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    let search_limits = Limits {
        sigma: limits.sigma.max(max_n + 1),
        ..*limits
    };
    for n in 0..=max_n {
        for g in enumerate_graphs(n)? {
            let h = g.add_universal()?;
            let sigma = sigma_search(&h, &search_limits)?.sigma;
            let rest = 1 + psi_with(&g, limits)?.value;
            let whole = psi_with(&h, limits)?.value;
            rec.check(
                &h,
                sigma == rest && rest == whole,
                || "sigma(G+u) = 1 + psi(G) = psi(G+u)".into(),
                || format!("sigma={sigma} 1+psi(G)={rest} psi(G+u)={whole}"),
            );
        }
    }
    Ok(())
}

/// Threshold graphs: the recognizer gives the sequence back and the four
/// quantities agree. Folding is only defined on connected graphs, so the
/// folding number is taken on the prefix up to the last universal vertex;
/// the trailing isolated vertices change neither chi nor psi.
fn threshold(len: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    let limits = Limits {
        sigma: limits.sigma.max(len),
        psi: limits.psi.max(len),
        ..*limits
    };
    for seq in CreationSequence::all_of_length(len) {
        let g = seq.realize();
        match is_threshold(&g) {
            Ok(cert) => {
                let mut perm = vec![0; g.n()];
                for (i, &v) in cert.order.iter().enumerate() {
                    perm[v] = i;
                }
                let relabeled = g.permute(&perm)?;
                let back = cert.sequence.realize();
                rec.check(
                    &g,
                    cert.sequence == seq && relabeled == back,
                    || format!("sequence {seq}"),
                    || format!("sequence {}", cert.sequence),
                );
            }
            Err(o) => {
                rec.instances += 1;
                rec.fail(
                    &g,
                    format!("threshold {seq}"),
                    format!("obstruction {:?}", o),
                );
                continue;
            }
        }
        let last_u = seq
            .ops()
            .iter()
            .rposition(|op| *op == CreationOp::AddUniversal)
            .unwrap_or(0);
        let core = g.induced(bit(last_u + 1) - 1);
        let expected = psi_threshold(&seq);
        let chi = chi_with(&g, &limits)?.value;
        let psi = psi_with(&g, &limits)?.value;
        let sigma = sigma_search(&core, &limits)?.sigma;
        rec.check(
            &g,
            chi == expected && psi == expected && sigma == expected,
            || format!("chi = sigma = psi = {expected}"),
            || format!("chi={chi} sigma={sigma} psi={psi}"),
        );
    }
    Ok(())
}

/// Exact achromatic numbers of cycles respect the minimum-length bound.
fn marcu(max_n: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    let limits = Limits {
        psi: limits.psi.max(max_n),
        ..*limits
    };
    for n in 3..=max_n {
        let c = Family::cycle(n).generate()?;
        let r = psi_with(&c, &limits)?;
        let bound = marcu_min_length(r.value)?;
        let certified = is_proper(&c, &r.certificate)? && is_complete(&c, &r.certificate)?;
        rec.check(
            &c,
            certified && bound.min_n <= n && r.value <= psi_cycle_upper(n),
            || {
                format!(
                    "certified psi with min length <= {n}, psi <= {}",
                    psi_cycle_upper(n)
                )
            },
            || {
                format!(
                    "psi={} min_n={} certified={certified}",
                    r.value, bound.min_n
                )
            },
        );
    }
    Ok(())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("small n");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Achromatic number is additive over joins.
fn join(
    max_total: usize,
    pairs: usize,
    seed: u64,
    limits: &Limits,
    rec: &mut Recorder,
) -> Result<()> {
    if max_total < 2 {
        return Err(Error::Argument("join needs n1 + n2 >= 2".into()));
    }
    let limits = Limits {
        psi: limits.psi.max(max_total),
        ..*limits
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let n1 = rng.gen_range(1..max_total);
        let n2 = rng.gen_range(1..=max_total - n1);
        let g1 = random_graph(&mut rng, n1);
        let g2 = random_graph(&mut rng, n2);
        let j = g1.join(&g2)?;
        let lhs = psi_with(&j, &limits)?.value;
        let (a, b) = (psi_with(&g1, &limits)?.value, psi_with(&g2, &limits)?.value);
        rec.check(
            &j,
            lhs == a + b,
            || {
                format!(
                    "psi = {a} + {b} (parts {} and {})",
                    emit_graph6(&g1),
                    emit_graph6(&g2)
                )
            },
            || format!("psi = {lhs}"),
        );
    }
    Ok(())
}

/// Folding onto the chromatic clique succeeds without the exhaustive
/// fallback, and its fold classes are an optimal colouring.
fn fold_chi(max_n: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    for n in 1..=max_n {
        for g in enumerate_connected(n)? {
            let chi = chi_with(&g, limits)?.value;
            let (t, route) = fold_to_chi_detailed(&g, limits)?;
            let coloring = Coloring::new(t.class_map.clone())?;
            let ok = verify_trace(&t).valid
                && t.target.is_clique()
                && t.target.n() == chi
                && classes_are_independent(&t)
                && is_proper(&g, &coloring)?
                && route != ChiFoldRoute::Exhaustive;
            rec.check(
                &g,
                ok,
                || format!("verified fold onto K{chi} without fallback"),
                || format!("target n={} route={route:?}", t.target.n()),
            );
        }
    }
    Ok(())
}

/// A simple fold raises the chromatic number by at most one.
fn chi_step(max_n: usize, limits: &Limits, rec: &mut Recorder) -> Result<()> {
    for n in 1..=max_n {
        for g in enumerate_graphs(n)? {
            let chi = chi_with(&g, limits)?.value;
            for (x, y) in fold_candidates(&g) {
                let folded = simple_fold(&g, x, y)?;
                let after = chi_with(&folded, limits)?.value;
                rec.check(
                    &g,
                    chi <= after && after <= chi + 1,
                    || format!("chi after fold {x} {y} in [{chi}, {}]", chi + 1),
                    || format!("chi = {after}"),
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let config = SuiteConfig {
                max_n: Some(match s {
                    Suite::Marcu => 8,
                    Suite::Threshold | Suite::Join => 5,
                    _ => 4,
                }),
                pairs: 10,
                ..SuiteConfig::default()
            };
            let r = run_suite(s, &config).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn oversize_parameter_refused() {
        let config = SuiteConfig {
            max_n: Some(20),
            ..SuiteConfig::default()
        };
        assert!(run_suite(Suite::Interpolation, &config).is_err());
    }

    #[test]
    fn report_json_round_trips() {
        let r = VerificationReport {
            schema: SCHEMA.into(),
            suite: "chi-step".into(),
            max_n: 4,
            instances: 3,
            failures: vec![Failure {
                graph6: "Ch".into(),
                expected: "1".into(),
                got: "2".into(),
            }],
            wall_time_secs: 0.25,
        };
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"schema\":\"foldkit-v1\""));
        assert_eq!(
            serde_json::from_str::<VerificationReport>(&text).unwrap(),
            r
        );
    }
}
