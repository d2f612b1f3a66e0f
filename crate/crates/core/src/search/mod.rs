//! Randomized search for great-circle thrackle drawings of trees.
//!
//! Simulated annealing over vertex positions and long/short edge flags,
//! minimizing [`penalty`]. Restarts are independent, seeded from the
//! configured seed and the restart index, and run in parallel; results are
//! merged in restart order so a run is reproducible.

mod penalty;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, UnitSphere};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::SphericalDrawing;
use crate::graph::{contains_spider_3_3, Graph};
use crate::sphere::{angle_between, UnitVec3, Vec3};
use crate::tolerance::Tolerances;
use crate::verify::spherical_report;

pub use penalty::{penalty, Candidate};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("search requires a tree")]
    NotATree,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub restarts: usize,
    pub iterations: usize,
    /// Standard deviation of the tangent step at the start of a restart (radians).
    pub initial_step: f64,
    pub initial_temperature: f64,
    /// Factor applied to temperature and step every `cooling_interval` iterations.
    pub cooling: f64,
    pub cooling_interval: usize,
    /// Margin δ of the penalty's hinge terms.
    pub margin: f64,
    pub flag_mutation_probability: f64,
    pub seed: u64,
    /// Tolerances of the final verification of a zero-penalty candidate.
    pub tolerances: Tolerances,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 200,
            iterations: 2000,
            initial_step: 0.3,
            initial_temperature: 0.05,
            cooling: 0.98,
            cooling_interval: 20,
            margin: 1e-3,
            flag_mutation_probability: 0.1,
            seed: 0,
            tolerances: Tolerances::default(),
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        if self.restarts == 0 || self.iterations == 0 || self.cooling_interval == 0 {
            return bad("restarts, iterations and cooling interval must be positive");
        }
        if !(self.initial_step > 0.0 && self.initial_temperature > 0.0 && self.margin > 0.0) {
            return bad("step, temperature and margin must be positive");
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return bad("cooling must lie in (0, 1)");
        }
        if !(0.0..=1.0).contains(&self.flag_mutation_probability) {
            return bad("flag mutation probability must lie in [0, 1]");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RestartStats {
    pub restart: usize,
    pub best_penalty: f64,
    /// Iterations run before success or exhaustion.
    pub iterations: usize,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub best: Candidate,
    pub best_penalty: f64,
    pub best_restart: usize,
    pub success: bool,
    pub successes: usize,
    pub restarts: Vec<RestartStats>,
    /// Verified drawings of the successful restarts, by restart index.
    #[serde(skip)]
    pub drawings: Vec<(usize, SphericalDrawing)>,
}

impl SearchOutcome {
    /// The drawing of the first successful restart.
    pub fn drawing(&self) -> Option<&SphericalDrawing> {
        self.drawings.first().map(|(_, d)| d)
    }
}

struct RestartResult {
    stats: RestartStats,
    best: Candidate,
    drawing: Option<SphericalDrawing>,
}

const MIN_INITIAL_SEPARATION: f64 = 0.1;

fn random_point(rng: &mut ChaCha8Rng) -> UnitVec3 {
    let [x, y, z]: [f64; 3] = UnitSphere.sample(rng);
    UnitVec3::from_xyz(x, y, z).expect("unit sphere sample")
}

fn initial_candidate(g: &Graph, rng: &mut ChaCha8Rng) -> Candidate {
    let mut positions: Vec<UnitVec3> = Vec::with_capacity(g.n());
    while positions.len() < g.n() {
        let p = random_point(rng);
        let clear = positions.iter().all(|&q| {
            let a = angle_between(p, q);
            a > MIN_INITIAL_SEPARATION && a < std::f64::consts::PI - MIN_INITIAL_SEPARATION
        });
        if clear {
            positions.push(p);
        }
    }
    let mut long_flags = vec![false; g.edge_count()];
    if !long_flags.is_empty() {
        let e = rng.random_range(0..long_flags.len());
        long_flags[e] = true;
    }
    Candidate {
        positions,
        long_flags,
    }
}

fn perturb(p: UnitVec3, sigma: f64, rng: &mut ChaCha8Rng) -> UnitVec3 {
    let g = Vec3::new(
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    );
    let v = p.vec();
    let tangent = g - v * g.dot(v);
    (v + tangent * sigma).normalized(0.0).unwrap_or(p)
}

fn verified(c: &Candidate, g: &Graph, tol: &Tolerances) -> Option<SphericalDrawing> {
    let d = c.to_drawing(g, tol).ok()?;
    let r = spherical_report(&d, tol);
    (r.is_thrackle && r.is_general_position).then_some(d)
}

fn run_restart(g: &Graph, cfg: &SearchConfig, restart: usize) -> RestartResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let mut cur = initial_candidate(g, &mut rng);
    let mut cur_pen = penalty(&cur, g, cfg.margin);
    let mut best = cur.clone();
    let mut best_pen = cur_pen;
    let mut temperature = cfg.initial_temperature;
    let mut step = cfg.initial_step;
    let accept = |delta: f64, t: f64, rng: &mut ChaCha8Rng| {
        delta <= 0.0 || rng.random::<f64>() < (-delta / t).exp()
    };
    let mut drawing = None;
    let mut iterations = 0;
    for it in 0..cfg.iterations {
        if best_pen == 0.0 {
            drawing = verified(&best, g, &cfg.tolerances);
            if drawing.is_some() {
                break;
            }
        }
        iterations = it + 1;
        if it > 0 && it % cfg.cooling_interval == 0 {
            temperature *= cfg.cooling;
            step *= cfg.cooling;
        }
        let v = rng.random_range(0..g.n());
        let mut next = cur.clone();
        next.positions[v] = perturb(cur.positions[v], step, &mut rng);
        let next_pen = penalty(&next, g, cfg.margin);
        if !accept(next_pen - cur_pen, temperature, &mut rng) {
            continue;
        }
        cur = next;
        cur_pen = next_pen;
        if !cur.long_flags.is_empty() && rng.random_bool(cfg.flag_mutation_probability) {
            let e = rng.random_range(0..cur.long_flags.len());
            let mut flipped = cur.clone();
            flipped.long_flags[e] = !flipped.long_flags[e];
            let flipped_pen = penalty(&flipped, g, cfg.margin);
            if accept(flipped_pen - cur_pen, temperature, &mut rng) {
                cur = flipped;
                cur_pen = flipped_pen;
            }
        }
        if cur_pen < best_pen {
            best = cur.clone();
            best_pen = cur_pen;
        }
    }
    if drawing.is_none() && best_pen == 0.0 {
        drawing = verified(&best, g, &cfg.tolerances);
    }
    RestartResult {
        stats: RestartStats {
            restart,
            best_penalty: best_pen,
            iterations,
            success: drawing.is_some(),
        },
        best,
        drawing,
    }
}

/// Annealing search for a great-circle thrackle drawing of the tree `t`.
pub fn search(t: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if !t.is_tree() {
        return Err(SearchError::NotATree);
    }
    cfg.validate()?;
    let results: Vec<RestartResult> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(t, cfg, r))
        .collect();
    let successes = results.iter().filter(|r| r.stats.success).count();
    let best_idx = results
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (!a.stats.success, a.stats.best_penalty)
                .partial_cmp(&(!b.stats.success, b.stats.best_penalty))
                .expect("penalties are finite")
        })
        .map(|(i, _)| i)
        .expect("at least one restart");
    let stats = results.iter().map(|r| r.stats.clone()).collect();
    let best = results[best_idx].best.clone();
    let best_penalty = results[best_idx].stats.best_penalty;
    let drawings = results
        .into_iter()
        .filter_map(|r| r.drawing.map(|d| (r.stats.restart, d)))
        .collect();
    Ok(SearchOutcome {
        best,
        best_penalty,
        best_restart: best_idx,
        success: successes > 0,
        successes,
        restarts: stats,
        drawings,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonexistenceReport {
    pub n: usize,
    pub edges: usize,
    pub contains_spider_3_3: bool,
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    pub successes: usize,
    pub best_penalty: f64,
    /// Minimum, quartiles and maximum of the per-restart best penalties.
    pub penalty_quartiles: [f64; 5],
    /// Smallest best penalty among failed restarts, if any failed.
    pub failure_floor: Option<f64>,
    /// True when no restart succeeded.
    pub nonexistence_corroborated: bool,
    pub statement: String,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Summarizes a search as evidence about non-embeddability of `t`.
pub fn nonexistence_report(t: &Graph, cfg: &SearchConfig) -> Result<NonexistenceReport, SearchError> {
    let outcome = search(t, cfg)?;
    Ok(summarize(t, cfg, &outcome))
}

pub fn summarize(t: &Graph, cfg: &SearchConfig, outcome: &SearchOutcome) -> NonexistenceReport {
    let mut pens: Vec<f64> = outcome.restarts.iter().map(|r| r.best_penalty).collect();
    pens.sort_by(f64::total_cmp);
    let quartiles = [0.0, 0.25, 0.5, 0.75, 1.0].map(|q| quantile(&pens, q));
    let failure_floor = outcome
        .restarts
        .iter()
        .filter(|r| !r.success)
        .map(|r| r.best_penalty)
        .min_by(f64::total_cmp);
    let contains = contains_spider_3_3(t).unwrap_or(false);
    let statement = if outcome.success {
        format!(
            "{} of {} restarts found a verified great-circle thrackle drawing; non-embeddability is rejected.",
            outcome.successes, cfg.restarts
        )
    } else {
        format!(
            "No verified drawing in {} restarts of {} iterations (best penalty {:.3e}). \
             This corroborates non-embeddability but is not a proof; contains spider(3,3,3): {}.",
            cfg.restarts, cfg.iterations, outcome.best_penalty, contains
        )
    };
    NonexistenceReport {
        n: t.n(),
        edges: t.edge_count(),
        contains_spider_3_3: contains,
        restarts: cfg.restarts,
        iterations: cfg.iterations,
        seed: cfg.seed,
        successes: outcome.successes,
        best_penalty: outcome.best_penalty,
        penalty_quartiles: quartiles,
        failure_floor,
        nonexistence_corroborated: !outcome.success,
        statement,
    }
}
