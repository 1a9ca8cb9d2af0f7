//! Seeded random corpus cross-checking the decider against witnesses, ball
//! planarity and decomposition plans.

use std::time::Instant;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cayley::{ball_with_cap, BallError, CayleyBall, DEFAULT_MAX_VERTICES};
use crate::decider::{decide, Condition};
use crate::decomposition::{plan, validate_plan};
use crate::graph_model::ProductGraph;
use crate::planarity::{is_planar, kuratowski_witness};
use crate::witnesses::{verify_witness, witness_for, witness_radius, CertificateJson};

const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.4, 0.6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub max_order: u32,
    pub ball_radius: u32,
    pub max_ball_vertices: usize,
    /// Extract a Cayley-level Kuratowski subdivision from a non-planar ball
    /// when no constructed witness exists.
    pub ball_certificates: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            count: 10,
            max_vertices: 5,
            max_order: 4,
            ball_radius: 2,
            max_ball_vertices: DEFAULT_MAX_VERTICES,
            ball_certificates: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub decide_ms: f64,
    pub witness_ms: f64,
    pub balls_ms: f64,
    pub plan_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallCheck {
    pub radius: u32,
    pub vertices: usize,
    pub planar: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub index: usize,
    pub input_hash: String,
    pub graph: serde_json::Value,
    pub planar: bool,
    pub violations: Vec<Condition>,
    pub witness_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_radius: Option<u32>,
    pub balls: Vec<BallCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ball_certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan_validated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconsistency: Option<String>,
    pub timings: Timings,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub config: CorpusConfig,
    pub records: Vec<CorpusRecord>,
    pub inconsistencies: usize,
}

impl CorpusReport {
    /// The report with every timing zeroed, for comparing runs.
    pub fn without_timings(&self) -> CorpusReport {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.timings = Timings { decide_ms: 0.0, witness_ms: 0.0, balls_ms: 0.0, plan_ms: 0.0 };
        }
        r
    }
}

/// An Erdős–Rényi graph with `p` drawn from {0.2, 0.4, 0.6} and orders drawn
/// from `2..=max_order`, order 2 weighted three times as heavily.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_order: u32) -> ProductGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    let orders: Vec<u32> = (2..=max_order.max(2)).collect();
    let weights: Vec<u32> = orders.iter().map(|&o| if o == 2 { 3 } else { 1 }).collect();
    let pick = WeightedIndex::new(&weights).expect("weights are positive");
    let width = (n - 1).to_string().len();
    let ids: Vec<String> = (0..n).map(|i| format!("v{i:0width$}")).collect();
    let vertices: Vec<(String, u32)> = ids.iter().map(|id| (id.clone(), orders[pick.sample(rng)])).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    ProductGraph::new(vertices, edges).expect("generated graphs are valid")
}

pub fn input_hash(g: &ProductGraph) -> String {
    let text = serde_json::to_string(g).expect("graphs serialize");
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn ball_certificate(b: &CayleyBall) -> Option<CertificateJson> {
    let cert = kuratowski_witness(&b.to_simple_graph()).ok()?;
    let w = cert.map(|&i| b.elements()[i].clone());
    verify_witness(b.graph(), &w).then(|| CertificateJson::from_witness(b.graph(), &w))
}

/// Decides `g` and cross-checks the verdict.
///
/// Non-planar verdicts need a verified witness or a non-planar ball within
/// the radius. Planar verdicts need planar balls at every radius and a valid
/// decomposition plan.
pub fn check_graph(g: &ProductGraph, index: usize, cfg: &CorpusConfig) -> CorpusRecord {
    let t = Instant::now();
    let verdict = decide(g);
    let decide_ms = ms(t);

    let t = Instant::now();
    let mut problems = Vec::new();
    let mut witness_verified = false;
    let mut w_radius = None;
    match witness_for(g, &verdict) {
        Ok(Some(w)) => {
            witness_verified = verify_witness(g, &w);
            w_radius = Some(witness_radius(g, &w));
            if !witness_verified {
                problems.push("constructed witness fails verification".to_owned());
            }
        }
        Ok(None) => {}
        Err(e) => problems.push(format!("witness construction failed: {e}")),
    }
    let witness_ms = ms(t);

    let t = Instant::now();
    let mut balls = Vec::new();
    let mut ball_certificate_json = None;
    let mut cap_hit = false;
    for r in 1..=cfg.ball_radius {
        match ball_with_cap(g, r, cfg.max_ball_vertices) {
            Ok(b) => {
                let planar = is_planar(&b.to_simple_graph()).0;
                balls.push(BallCheck { radius: r, vertices: b.len(), planar });
                if !planar {
                    if cfg.ball_certificates && !witness_verified {
                        ball_certificate_json = ball_certificate(&b);
                    }
                    break;
                }
            }
            Err(BallError::CapExceeded { .. }) => {
                cap_hit = true;
                break;
            }
        }
    }
    let balls_ms = ms(t);
    let ball_nonplanar = balls.iter().any(|b| !b.planar);

    let t = Instant::now();
    let mut plan_validated = None;
    if verdict.planar {
        if ball_nonplanar {
            problems.push("planar verdict but a non-planar ball".to_owned());
        }
        if cap_hit {
            problems.push("ball cap reached before the full radius".to_owned());
        }
        let ok = plan(g).map(|p| validate_plan(g, &p)).unwrap_or(false);
        plan_validated = Some(ok);
        if !ok {
            problems.push("decomposition plan missing or invalid".to_owned());
        }
    } else {
        if witness_verified && verdict.violations.iter().all(|v| v.condition == Condition::I) {
            problems.push("group witness for a condition I only verdict".to_owned());
        }
        if !witness_verified && !ball_nonplanar {
            problems.push("non-planar verdict without a verified witness or a non-planar ball".to_owned());
        }
        if cfg.ball_certificates && ball_nonplanar && !witness_verified && ball_certificate_json.is_none() {
            problems.push("ball certificate extraction failed".to_owned());
        }
    }
    let plan_ms = ms(t);

    CorpusRecord {
        index,
        input_hash: input_hash(g),
        graph: serde_json::to_value(g).expect("graphs serialize"),
        planar: verdict.planar,
        violations: verdict.conditions(),
        witness_verified,
        witness_radius: w_radius,
        balls,
        ball_certificate: ball_certificate_json,
        plan_validated,
        inconsistency: (!problems.is_empty()).then(|| problems.join("; ")),
        timings: Timings { decide_ms, witness_ms, balls_ms, plan_ms },
    }
}

pub fn run_corpus(cfg: &CorpusConfig) -> CorpusReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let records: Vec<CorpusRecord> = (0..cfg.count)
        .map(|i| {
            let g = random_graph(&mut rng, cfg.max_vertices, cfg.max_order);
            check_graph(&g, i, cfg)
        })
        .collect();
    let inconsistencies = records.iter().filter(|r| r.inconsistency.is_some()).count();
    CorpusReport { config: cfg.clone(), records, inconsistencies }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_is_consistent() {
        let report = run_corpus(&CorpusConfig::default());
        assert_eq!(report.records.len(), 10);
        assert_eq!(report.inconsistencies, 0, "{:#?}", report.records.iter().find(|r| r.inconsistency.is_some()));
    }

    #[test]
    fn empty_corpus() {
        let report = run_corpus(&CorpusConfig { count: 0, ..CorpusConfig::default() });
        assert!(report.records.is_empty());
    }

    #[test]
    fn corpus_is_deterministic() {
        let cfg = CorpusConfig { seed: 7, count: 6, ..CorpusConfig::default() };
        let a = serde_json::to_string(&run_corpus(&cfg).without_timings()).unwrap();
        let b = serde_json::to_string(&run_corpus(&cfg).without_timings()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_orders_are_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 6, 5);
            assert!((1..=6).contains(&g.len()));
            assert!(g.vertices().all(|(_, o)| (2..=5).contains(&o)));
        }
    }
}
