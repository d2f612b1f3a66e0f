//! Acceptance checks. Each criterion prints one PASS or FAIL line; the
//! process exits with failure if any criterion fails.

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thrackle::construct::{
    construct_caterpillar_straight_line, construct_spider_3_2_gc, construct_star_polygon_cycle,
    SpiderConstructionParams,
};
use thrackle::drawing::{fixtures, lift_planar_to_sphere, DrawingDocument, Meta, PlanarDrawing, SphericalDrawing};
use thrackle::graph::enumerate::free_trees_up_to;
use thrackle::graph::{
    contains_spider_3_3, edge_bound_holds, fixtures as trees, is_augmented_caterpillar, is_caterpillar, Graph,
};
use thrackle::plane::Point2;
use thrackle::search::{search, SearchConfig};
use thrackle::sphere::MeetingKind;
use thrackle::verify::{
    lemma_audit, planar_report, spherical_report, verify_general_position, verify_thrackle, AuditMode,
};
use thrackle::Tolerances;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let mut r = f();
    let elapsed = start.elapsed();
    if let (Ok(detail), Some(limit)) = (&r, limit) {
        if elapsed >= limit {
            r = Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"));
        }
    }
    (r, elapsed)
}

fn planar(g: Graph, pts: &[(f64, f64)]) -> PlanarDrawing {
    let pts = pts.iter().map(|&(x, y)| Point2::new(x, y)).collect();
    PlanarDrawing::new(g, pts, &Tolerances::default()).expect("distinct points")
}

fn criterion_1() -> Check {
    let d = planar(Graph::path(4), &[(5.0, 1.0), (6.0, 0.0), (5.0, 0.0), (6.0, 1.0)]);
    let r = verify_thrackle(&DrawingDocument::planar(d, Meta::default())).map_err(|e| e.to_string())?;
    ensure(r.is_thrackle, "not a thrackle")?;
    let far = r.pairs.iter().find(|p| p.shared_vertex.is_none()).ok_or("no nonadjacent pair")?;
    ensure(far.meeting_count == 1, format!("nonadjacent pair meets {} times", far.meeting_count))?;
    ensure(far.kinds == [MeetingKind::TransversalCrossing], "meeting is not a crossing")?;
    Ok(format!("edges {:?} cross once at {:?}", far.edges, far.points[0]))
}

fn criterion_2() -> Check {
    for (name, d) in [("fixture", fixtures::pentagram()), ("constructed", construct_star_polygon_cycle(5).unwrap())] {
        let r = verify_thrackle(&DrawingDocument::planar(d, Meta::default())).map_err(|e| e.to_string())?;
        ensure(r.is_thrackle, format!("{name} pentagram rejected"))?;
        ensure(r.pairs.len() == 10, format!("{name}: {} pairs", r.pairs.len()))?;
        ensure(r.meeting_counts().iter().all(|&c| c == 1), format!("{name}: counts {:?}", r.meeting_counts()))?;
    }
    Ok("fixture and star polygon: 10 pairs, one meeting each".into())
}

fn criterion_3() -> Check {
    let tol = Tolerances::default();
    let d = construct_spider_3_2_gc(&SpiderConstructionParams::default()).map_err(|e| e.to_string())?;
    ensure(verify_general_position(&d, &tol).is_general_position, "not in general position")?;
    let r = verify_thrackle(&DrawingDocument::spherical(d.clone(), Meta::default())).map_err(|e| e.to_string())?;
    ensure(r.is_thrackle, "not a thrackle")?;
    ensure(r.pairs.len() == 15, format!("{} pairs", r.pairs.len()))?;
    ensure(r.meeting_counts().iter().all(|&c| c == 1), "some pair does not meet exactly once")?;
    let audit = lemma_audit(&d, &tol, AuditMode::Strict).map_err(|e| e.to_string())?;
    ensure(audit.violation_count() == 0, format!("{} lemma violations", audit.violation_count()))?;
    ensure(d.long_edges().len() == 1, format!("long edges {:?}", d.long_edges()))?;
    Ok(format!("15 pairs meet once, 0 lemma violations, long edge {:?}", d.long_edges()))
}

fn spider_222_search() -> thrackle::search::SearchOutcome {
    let cfg = SearchConfig { seed: 7, ..SearchConfig::default() };
    search(&trees::spider_222(), &cfg).expect("valid search")
}

fn criterion_4(s222: &thrackle::search::SearchOutcome) -> Check {
    ensure(s222.success, "spider(2,2,2) search found nothing")?;
    let tol = Tolerances::default();
    for (_, d) in &s222.drawings {
        let r = spherical_report(d, &tol);
        ensure(r.is_thrackle && r.is_general_position, "reported success does not verify")?;
    }
    let cfg = SearchConfig { seed: 7, restarts: 500, ..SearchConfig::default() };
    let (s333, _) = trees::spider_333();
    let out = search(&s333, &cfg).map_err(|e| e.to_string())?;
    ensure(out.successes == 0, format!("spider(3,3,3) search reported {} successes", out.successes))?;
    Ok(format!(
        "spider(2,2,2): {}/200 verified; spider(3,3,3): 0/500, best penalty {:.2e}",
        s222.successes, out.best_penalty
    ))
}

fn leaf_deletion(t: &Graph) -> bool {
    let core: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) > 1).collect();
    if core.len() <= 1 {
        return true;
    }
    let h = t.induced(&core);
    h.is_connected() && (0..h.n()).all(|v| h.degree(v) <= 2)
}

fn criterion_5() -> Check {
    let all = free_trees_up_to(11);
    let mut with_spider = 0;
    for t in &all {
        ensure(is_caterpillar(t).unwrap() == leaf_deletion(t), "caterpillar recognizer disagrees with leaf deletion")?;
        if contains_spider_3_3(t).unwrap() {
            with_spider += 1;
            ensure(!is_augmented_caterpillar(t).unwrap(), "tree with spider(3,3,3) classified augmented")?;
        }
    }
    let (s, _) = trees::spider_333();
    for e in 0..s.edge_count() {
        let h = s.without_edge(e);
        for comp in h.components() {
            ensure(is_augmented_caterpillar(&h.induced(&comp)).unwrap(), format!("removing edge {e} leaves a non-augmented part"))?;
        }
    }
    Ok(format!("{} trees, {} contain spider(3,3,3); all 9 edge deletions give augmented caterpillars", all.len(), with_spider))
}

/// Verified spherical drawings from the constructors and from searches.
fn lemma_corpus(s222: &thrackle::search::SearchOutcome) -> Vec<(String, SphericalDrawing)> {
    let mut out = vec![("spider construction".to_string(), construct_spider_3_2_gc(&SpiderConstructionParams::default()).unwrap())];
    for (r, d) in &s222.drawings {
        out.push((format!("spider(2,2,2) seed 7 restart {r}"), d.clone()));
    }
    for (g, seed) in [(Graph::path(5), 1), (Graph::spider(&[1, 1, 1, 1]), 2), (Graph::spider(&[2, 1, 1]), 3), (Graph::spider(&[2, 2, 1]), 4)] {
        let cfg = SearchConfig { seed, restarts: 20, ..SearchConfig::default() };
        for (r, d) in search(&g, &cfg).unwrap().drawings {
            out.push((format!("tree on {} vertices seed {seed} restart {r}", g.n()), d));
        }
    }
    for t in free_trees_up_to(8) {
        if let Ok(p) = construct_caterpillar_straight_line(&t) {
            out.push((format!("lifted caterpillar on {} vertices", t.n()), lift_planar_to_sphere(&p)));
        }
    }
    for n in [3, 5, 7] {
        out.push((format!("lifted star polygon {n}"), lift_planar_to_sphere(&construct_star_polygon_cycle(n).unwrap())));
    }
    out
}

fn criterion_6(corpus: &[(String, SphericalDrawing)]) -> Check {
    ensure(corpus.len() >= 50, format!("only {} drawings", corpus.len()))?;
    let tol = Tolerances::default();
    let mut vertices = 0;
    for (name, d) in corpus {
        let audit = lemma_audit(d, &tol, AuditMode::Strict).map_err(|e| format!("{name}: {e}"))?;
        for (i, l) in audit.lemmas().iter().enumerate() {
            ensure(l.holds, format!("{name}: lemma {} fails with {:?}", i + 1, l.witnesses))?;
        }
        vertices += d.graph().n();
    }
    Ok(format!("{} drawings, {vertices} vertices, 0 violations of lemmas 1-4", corpus.len()))
}

fn random_caterpillar(rng: &mut ChaCha8Rng) -> Graph {
    let spine = rng.random_range(1..=6);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for i in 0..spine {
        for _ in 0..rng.random_range(0..=3) {
            edges.push((i, next));
            next += 1;
        }
    }
    if next == 1 {
        edges.push((0, 1));
        next = 2;
    }
    Graph::new(next, edges).unwrap()
}

fn criterion_7() -> Check {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = 0;
    for k in 0..100 {
        let g = random_caterpillar(&mut rng);
        let base = construct_caterpillar_straight_line(&g).map_err(|e| e.to_string())?;
        // random rotation, anisotropic scale and translation
        let (th, sx, sy) = (rng.random_range(0.0..TAU), rng.random_range(0.3..4.0), rng.random_range(0.3..4.0));
        let (tx, ty) = (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let pts: Vec<(f64, f64)> = base
            .positions()
            .iter()
            .map(|p| (sx * (th.cos() * p.x - th.sin() * p.y) + tx, sy * (th.sin() * p.x + th.cos() * p.y) + ty))
            .collect();
        let d = planar(g, &pts);
        let flat = planar_report(&d, &tol);
        ensure(flat.is_thrackle, format!("case {k}: planar drawing rejected"))?;
        let round = spherical_report(&lift_planar_to_sphere(&d), &tol);
        ensure(round.is_thrackle == flat.is_thrackle, format!("case {k}: verdict changed"))?;
        ensure(round.meeting_counts() == flat.meeting_counts(), format!("case {k}: meeting counts changed"))?;
        pairs += flat.pairs.len();
    }
    Ok(format!("100 drawings, {pairs} edge pairs, verdicts and counts preserved"))
}

fn criterion_8(corpus: &[(String, SphericalDrawing)]) -> Check {
    let tol = Tolerances::default();
    let mut graphs: Vec<Graph> = Vec::new();
    for (_, d) in corpus {
        ensure(spherical_report(d, &tol).is_thrackle, "corpus drawing does not verify")?;
        graphs.push(d.graph().clone());
    }
    for n in (3..=15).step_by(2) {
        let d = construct_star_polygon_cycle(n).unwrap();
        ensure(planar_report(&d, &tol).is_thrackle, format!("star polygon {n} rejected"))?;
        graphs.push(d.graph().clone());
    }
    for t in free_trees_up_to(9) {
        if let Ok(d) = construct_caterpillar_straight_line(&t) {
            ensure(planar_report(&d, &tol).is_thrackle, "caterpillar drawing rejected")?;
            graphs.push(t);
        }
    }
    let tight = graphs.iter().filter(|g| g.edge_count() == g.n()).count();
    ensure(graphs.iter().all(edge_bound_holds), "edge bound violated")?;
    Ok(format!("{} verified thrackles, {tight} with |E| = |V|", graphs.len()))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut failed = 0;
    let mut report = |n: u32, title: &str, (r, t): (Check, Duration)| {
        match r {
            Ok(detail) => println!("criterion {n} ({title}): PASS in {t:.2?}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({title}): FAIL in {t:.2?}: {why}");
            }
        }
    };
    let ms = Duration::from_millis;
    report(1, "three-path thrackle", timed(Some(ms(100)), criterion_1));
    report(2, "pentagram", timed(Some(ms(100)), criterion_2));
    report(3, "spider(2,2,2) construction", timed(Some(ms(1000)), criterion_3));
    let start = Instant::now();
    let s222 = spider_222_search();
    let first = start.elapsed();
    let (r4, t4) = timed(None, || criterion_4(&s222));
    let total = first + t4;
    let r4 = match r4 {
        Ok(d) if total >= ms(600_000) => Err(format!("{d}; took {total:?}")),
        r => r,
    };
    report(4, "search corroboration", (r4, total));
    report(5, "tree classes", timed(None, criterion_5));
    let corpus = lemma_corpus(&s222);
    report(6, "lemma invariants", timed(None, || criterion_6(&corpus)));
    report(7, "lift", timed(None, criterion_7));
    report(8, "edge bound", timed(None, || criterion_8(&corpus)));
    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria fail");
        ExitCode::FAILURE
    }
}
