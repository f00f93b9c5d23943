//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p blpack --test acceptance`.

use std::collections::HashSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use blpack::relations::first_unstable;
use blpack::{
    enumerate_corners, escape_walk, extract_sequence, is_bl_stable, is_feasible, max_slide, oracle_lattice,
    placement_action_bound, replay, solve_exact, solve_greedy, stabilize, total_coordinate, Dims, Direction, Instance,
    Orientation, Outcome, Packing, PlacedRect, Placement, PlacementSequence, RectId, Scalar, SolveConfig,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5eed_b10c;
const RANDOM_INSTANCES: usize = 1000;
const STABLE_PACKINGS: usize = 1000;
const PERTURBED_PACKINGS: usize = 1000;
const UNSAT_FIXTURE_LIMIT: Duration = Duration::from_secs(1);
const TYPES: [(i64, i64); 6] = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

struct Line {
    index: usize,
    name: &'static str,
    failures: Vec<String>,
    summary: String,
}

impl Line {
    fn new(index: usize, name: &'static str) -> Self {
        Line {
            index,
            name,
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(what.into());
    }

    fn print(&self) -> bool {
        let ok = self.failures.is_empty();
        println!(
            "{} {}. {}: {}",
            if ok { "PASS" } else { "FAIL" },
            self.index,
            self.name,
            self.summary
        );
        for f in self.failures.iter().take(5) {
            println!("       {f}");
        }
        if self.failures.len() > 5 {
            println!("       ... {} more", self.failures.len() - 5);
        }
        ok
    }
}

fn instance(container: (i64, i64), rects: &[(i64, i64)]) -> Arc<Instance> {
    Arc::new(Instance::new(
        Dims::new(container.0, container.1).unwrap(),
        rects.iter().map(|&(w, h)| Dims::new(w, h).unwrap()).collect(),
    ))
}

fn describe(inst: &Instance) -> String {
    let rects: Vec<String> = inst.rects().iter().map(|d| d.to_string()).collect();
    format!("{} [{}]", inst.container(), rects.join(", "))
}

fn multisets(types: usize, size: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for t in from..types {
        current.push(t);
        multisets(types, size, t, current, out);
        current.pop();
    }
}

/// Containers `W <= H <= 4` and every multiset of up to four rectangles
/// with sides in {1,2,3}. Rotations are allowed, so `w <= h` loses nothing.
fn exhaustive_sweep() -> Vec<Arc<Instance>> {
    let mut sets = Vec::new();
    for size in 0..=4 {
        multisets(TYPES.len(), size, 0, &mut Vec::new(), &mut sets);
    }
    let mut out = Vec::new();
    for h in 1..=4 {
        for w in 1..=h {
            for set in &sets {
                let rects: Vec<(i64, i64)> = set.iter().map(|&t| TYPES[t]).collect();
                out.push(instance((w, h), &rects));
            }
        }
    }
    out
}

/// Containers up to 6x6 with up to six rectangles. Rectangles are dropped
/// until the total area fits, so most instances are tight rather than
/// rejected on area alone.
fn random_instances(rng: &mut ChaCha8Rng, count: usize) -> Vec<Arc<Instance>> {
    (0..count)
        .map(|_| {
            let (w, h) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let side = w.max(h).min(4);
            let n = rng.gen_range(1..=6);
            let mut rects: Vec<(i64, i64)> = (0..n)
                .map(|_| (rng.gen_range(1..=side), rng.gen_range(1..=side)))
                .collect();
            while rects.len() > 1 && rects.iter().map(|(a, b)| a * b).sum::<i64>() > w * h {
                rects.pop();
            }
            instance((w, h), &rects)
        })
        .collect()
}

/// Everything learned from one exact solve of a criterion-1 instance.
struct Solved {
    instance: Arc<Instance>,
    exact: Outcome,
    oracle_sat: Option<bool>,
    nodes: u64,
    max_corners_by_depth: Vec<usize>,
    corner_bound_violations: u64,
    elapsed: Duration,
}

fn solve_all(instances: &[Arc<Instance>]) -> Vec<Solved> {
    instances
        .par_iter()
        .map(|inst| {
            let start = Instant::now();
            let verdict = solve_exact(inst, &SolveConfig::deterministic());
            let elapsed = start.elapsed();
            let oracle_sat = oracle_lattice(inst).ok().map(|v| v.is_sat());
            Solved {
                instance: inst.clone(),
                exact: verdict.outcome,
                oracle_sat,
                nodes: verdict.stats.nodes,
                max_corners_by_depth: verdict.stats.max_corners_by_depth,
                corner_bound_violations: verdict.stats.corner_bound_violations,
                elapsed,
            }
        })
        .collect()
}

fn criterion_oracle(solved: &[Solved], exhaustive: usize) -> Line {
    let mut line = Line::new(1, "exact solver agrees with lattice oracle");
    let (mut sat, mut unsat) = (0, 0);
    for s in solved {
        let exact = match &s.exact {
            Outcome::Sat { .. } => true,
            Outcome::Unsat => false,
            Outcome::Unknown(r) => {
                line.fail(format!("{}: solver gave up ({r})", describe(&s.instance)));
                continue;
            }
        };
        if exact {
            sat += 1;
        } else {
            unsat += 1;
        }
        match s.oracle_sat {
            Some(o) if o == exact => {}
            Some(o) => line.fail(format!("{}: exact {exact}, oracle {o}", describe(&s.instance))),
            None => line.fail(format!("{}: oracle refused the instance", describe(&s.instance))),
        }
    }
    let slowest = solved.iter().map(|s| s.elapsed).max().unwrap_or_default();
    line.summary = format!(
        "{} exhaustive + {} random instances, {sat} SAT / {unsat} UNSAT, {} mismatches, slowest solve {:.3}s",
        exhaustive,
        solved.len() - exhaustive,
        line.failures.len(),
        slowest.as_secs_f64()
    );
    line
}

fn criterion_bound(solved: &[Solved]) -> Line {
    let mut line = Line::new(5, "corner count and node count stay within the bound");
    let mut worst_ratio: f64 = 0.0;
    for s in solved {
        let n = s.instance.len();
        if s.corner_bound_violations > 0 {
            line.fail(format!(
                "{}: {} corner lists over (k+1)^2",
                describe(&s.instance),
                s.corner_bound_violations
            ));
        }
        for (k, &c) in s.max_corners_by_depth.iter().enumerate() {
            if c > (k + 1) * (k + 1) {
                line.fail(format!("{}: {c} corners at depth {k}", describe(&s.instance)));
            }
        }
        let bound = placement_action_bound(n).expect("bound fits for small n");
        if u128::from(s.nodes) > bound {
            line.fail(format!("{}: {} nodes > bound {bound}", describe(&s.instance), s.nodes));
        }
        worst_ratio = worst_ratio.max(s.nodes as f64 / bound as f64);
    }
    line.summary = format!(
        "{} runs checked, largest nodes/bound ratio {:.2e}",
        solved.len(),
        worst_ratio
    );
    line
}

fn check_certificate(inst: &Arc<Instance>, packing: &Packing, sequence: &PlacementSequence) -> Result<(), String> {
    if !packing.is_complete() {
        return Err("packing is incomplete".into());
    }
    if !is_feasible(packing) {
        return Err("packing is infeasible".into());
    }
    match first_unstable(packing) {
        Ok(None) => {}
        Ok(Some(id)) => return Err(format!("rectangle {id} is not stable")),
        Err(e) => return Err(e.to_string()),
    }
    match replay(inst, sequence) {
        Ok(p) if &p == packing => Ok(()),
        Ok(_) => Err("sequence replays to a different packing".into()),
        Err(e) => Err(format!("sequence rejected: {e}")),
    }
}

fn criterion_certificates(solved: &[Solved]) -> Line {
    let mut line = Line::new(6, "certificates check and UNSAT is confirmed");
    let mut checked = 0;
    for s in solved {
        match &s.exact {
            Outcome::Sat { packing, sequence } => {
                checked += 1;
                if let Err(e) = check_certificate(&s.instance, packing, sequence) {
                    line.fail(format!("{}: {e}", describe(&s.instance)));
                }
            }
            Outcome::Unsat if s.oracle_sat != Some(false) => {
                line.fail(format!("{}: UNSAT not confirmed by oracle", describe(&s.instance)));
            }
            _ => {}
        }
    }
    let fixture = instance((3, 3), &[(2, 2), (2, 2)]);
    let start = Instant::now();
    let verdict = solve_exact(&fixture, &SolveConfig::default());
    let elapsed = start.elapsed();
    if !verdict.outcome.is_unsat() {
        line.fail(format!("3x3 with two 2x2: expected UNSAT, got {:?}", verdict.outcome));
    }
    if elapsed >= UNSAT_FIXTURE_LIMIT {
        line.fail(format!("3x3 with two 2x2 took {:.3}s", elapsed.as_secs_f64()));
    }
    line.summary = format!(
        "{checked} SAT certificates replayed and verified, 3x3 with two 2x2 UNSAT in {:.2}ms",
        elapsed.as_secs_f64() * 1e3
    );
    line
}

fn permutations(n: usize) -> Vec<Vec<RectId>> {
    fn go(rest: &mut Vec<RectId>, current: &mut Vec<RectId>, out: &mut Vec<Vec<RectId>>) {
        if rest.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in 0..rest.len() {
            let id = rest.remove(i);
            current.push(id);
            go(rest, current, out);
            current.pop();
            rest.insert(i, id);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).map(RectId).collect(), &mut Vec::new(), &mut out);
    out
}

fn orientation_choices(n: usize) -> Vec<Vec<Orientation>> {
    (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        Orientation::Vertical
                    } else {
                        Orientation::Horizontal
                    }
                })
                .collect()
        })
        .collect()
}

/// Every order and orientation choice, one greedy run each.
fn greedy_always_fails(inst: &Arc<Instance>) -> bool {
    let n = inst.len();
    let orientations = orientation_choices(n);
    permutations(n)
        .iter()
        .all(|order| orientations.iter().all(|o| solve_greedy(inst, order, o).is_err()))
}

type GreedyState = Vec<(usize, Scalar, Scalar, Orientation)>;

/// Same answer as [`greedy_always_fails`] without enumerating every order:
/// a greedy run's future depends only on the partial packing so far, so
/// partial packings already explored are skipped, and of several identical
/// unplaced rectangles only one is tried.
fn greedy_always_fails_fast(inst: &Arc<Instance>) -> bool {
    fn extends(p: &Packing, seen: &mut HashSet<GreedyState>) -> bool {
        if p.is_complete() {
            return true;
        }
        let state = p
            .rects()
            .iter()
            .map(|r| (r.id().0, r.left().clone(), r.bottom().clone(), r.orientation()))
            .collect();
        if !seen.insert(state) {
            return false;
        }
        let mut tried = HashSet::new();
        for id in p.instance().ids().filter(|&id| p.get(id).is_none()) {
            let dims = p.instance().dims(id).unwrap();
            for o in Orientation::BOTH {
                if !tried.insert((dims.w().clone(), dims.h().clone(), o)) {
                    continue;
                }
                if let Some(c) = enumerate_corners(p, dims, o).into_iter().next() {
                    let mut next = p.clone();
                    next.place(id, c.placement(o)).unwrap();
                    if extends(&next, seen) {
                        return true;
                    }
                }
            }
        }
        false
    }
    !extends(&Packing::new(inst.clone()), &mut HashSet::new())
}

/// Containers up to 6x6 and every multiset of up to five rectangles that
/// fit inside, total area permitting.
fn widened_sweep() -> Vec<Arc<Instance>> {
    let types: Vec<(i64, i64)> = (1..=6).flat_map(|w| (w..=6).map(move |h| (w, h))).collect();
    let mut sets = Vec::new();
    for size in 1..=5 {
        multisets(types.len(), size, 0, &mut Vec::new(), &mut sets);
    }
    let mut out = Vec::new();
    for h in 1..=6 {
        for w in 1..=h {
            for set in &sets {
                let rects: Vec<(i64, i64)> = set.iter().map(|&t| types[t]).collect();
                let fits = rects.iter().all(|&(a, b)| a <= w && b <= h);
                if fits && rects.iter().map(|(a, b)| a * b).sum::<i64>() <= w * h {
                    out.push(instance((w, h), &rects));
                }
            }
        }
    }
    out
}

fn criterion_greedy(solved: &[Solved]) -> Line {
    let mut line = Line::new(7, "some SAT instance defeats every greedy run");
    let sat: Vec<&Solved> = solved.iter().filter(|s| s.exact.is_sat()).collect();
    let mut found = Vec::new();
    for s in &sat {
        let slow = greedy_always_fails(&s.instance);
        if slow != greedy_always_fails_fast(&s.instance) {
            line.fail(format!("{}: greedy searches disagree", describe(&s.instance)));
        }
        if slow {
            found.push(s.instance.clone());
        }
    }
    if let Some(first) = found.first() {
        line.summary = format!(
            "{} traps among {} SAT instances, e.g. {}",
            found.len(),
            sat.len(),
            describe(first)
        );
        return line;
    }
    let widened = widened_sweep();
    let trap = widened.par_iter().find_first(|inst| {
        greedy_always_fails_fast(inst) && solve_exact(inst, &SolveConfig::deterministic()).outcome.is_sat()
    });
    match trap {
        Some(inst) if greedy_always_fails(inst) => {
            line.summary = format!(
                "none among {} SAT sweep instances; widened sweep of {} found {}",
                sat.len(),
                widened.len(),
                describe(inst)
            );
        }
        Some(inst) => line.fail(format!("{}: greedy searches disagree", describe(inst))),
        None => {
            line.fail("no instance where every greedy run fails but the instance packs");
            line.summary = format!(
                "{} SAT sweep instances and {} widened instances (n <= 5, container <= 6x6) searched",
                sat.len(),
                widened.len()
            );
        }
    }
    line
}

/// A greedy run that packed everything.
struct GreedyRun {
    instance: Arc<Instance>,
    order: Vec<RectId>,
    orientations: Vec<Orientation>,
    packing: Packing,
}

/// Stable packings from greedy runs with random orders and orientations on
/// random instances. Only complete packings count towards the target.
fn greedy_corpus(rng: &mut ChaCha8Rng, count: usize) -> Vec<GreedyRun> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (w, h) = (rng.gen_range(3..=8), rng.gen_range(3..=8));
        let n = rng.gen_range(1..=7);
        let rects: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(1..=4), rng.gen_range(1..=4))).collect();
        let inst = instance((w, h), &rects);
        let mut order: Vec<RectId> = inst.ids().collect();
        order.shuffle(rng);
        let orientations: Vec<Orientation> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Orientation::Horizontal
                } else {
                    Orientation::Vertical
                }
            })
            .collect();
        if let Ok(p) = solve_greedy(&inst, &order, &orientations) {
            out.push(GreedyRun {
                instance: inst,
                order,
                orientations,
                packing: p,
            });
        }
    }
    out
}

fn criterion_round_trip(corpus: &[GreedyRun]) -> Line {
    let mut line = Line::new(2, "stable packings round-trip through their sequences");
    let mut actions = 0;
    for GreedyRun {
        instance: inst,
        packing: p,
        ..
    } in corpus
    {
        if !is_bl_stable(p).unwrap_or(false) {
            line.fail(format!("{}: greedy packing is not stable", describe(inst)));
            continue;
        }
        match extract_sequence(p).and_then(|seq| {
            actions += seq.len();
            replay(inst, &seq)
        }) {
            Ok(back) if &back == p => {}
            Ok(_) => line.fail(format!("{}: replay differs", describe(inst))),
            Err(e) => line.fail(format!("{}: {e}", describe(inst))),
        }
    }
    line.summary = format!("{} packings, {actions} actions replayed exactly", corpus.len());
    line
}

const FRACTIONS: [(i64, i64); 6] = [(1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 5)];

/// Moves random rectangles up or right by a random fraction of how far they
/// could go, keeping the packing feasible throughout.
fn perturb(rng: &mut ChaCha8Rng, p: &Packing) -> Packing {
    let mut out = p.clone();
    let ids: Vec<RectId> = p.instance().ids().collect();
    for _ in 0..2 * ids.len() {
        let id = *ids.choose(rng).unwrap();
        let dir = if rng.gen_bool(0.5) {
            Direction::Up
        } else {
            Direction::Right
        };
        let room = max_slide(&out, id, dir).expect("perturbation keeps the packing feasible");
        if !room.is_positive() {
            continue;
        }
        let (num, den) = FRACTIONS[rng.gen_range(0..FRACTIONS.len())];
        let step = room * Scalar::ratio(num, den);
        let r = out.get(id).unwrap();
        let (mut x, mut y) = (r.left().clone(), r.bottom().clone());
        match dir {
            Direction::Up => y = y + step,
            _ => x = x + step,
        }
        out.set_placement(id, Placement::new(x, y, r.orientation())).unwrap();
        assert!(is_feasible(&out));
    }
    out
}

fn criterion_stabilize(perturbed: &[(Packing, Packing)]) -> Line {
    let mut line = Line::new(3, "stabilize yields stable packings without raising coordinates");
    let mut moved = 0;
    let mut strictly_lower = 0;
    for (original, p) in perturbed {
        if p != original {
            moved += 1;
        }
        let name = describe(p.instance());
        match stabilize(p) {
            Ok((out, seq)) => {
                if !out.is_complete() || !is_feasible(&out) {
                    line.fail(format!("{name}: result infeasible"));
                } else if !is_bl_stable(&out).unwrap() {
                    line.fail(format!("{name}: result not stable"));
                } else if total_coordinate(&out) > total_coordinate(p) {
                    line.fail(format!("{name}: coordinate sum grew"));
                } else if replay(p.instance(), &seq).as_ref() != Ok(&out) {
                    line.fail(format!("{name}: stabilize sequence does not replay"));
                }
                if total_coordinate(&out) < total_coordinate(p) {
                    strictly_lower += 1;
                }
            }
            Err(e) => line.fail(format!("{name}: {e}")),
        }
    }
    line.summary = format!(
        "{} packings ({moved} actually perturbed), {strictly_lower} strictly lowered",
        perturbed.len()
    );
    line
}

/// Something is over `c` if it overlaps the column above `c`; right of `c`
/// if it overlaps the row to its right. Checked from raw coordinates.
fn blocks_escape(j: &PlacedRect, c: &PlacedRect) -> bool {
    let x_open = j.left() < c.right() && c.left() < j.right();
    let y_open = j.bottom() < c.top() && c.bottom() < j.top();
    (x_open && j.top() > c.bottom()) || (y_open && j.right() > c.left())
}

fn criterion_escape(packings: &[&Packing]) -> Line {
    let mut line = Line::new(4, "escape candidates can leave up and right");
    let (mut walks, mut longest) = (0usize, 0usize);
    for p in packings {
        let mut rest = (*p).clone();
        // every intermediate packing of the extraction, not just the first
        while !rest.is_empty() {
            let n = rest.len();
            let walk = match escape_walk(&rest) {
                Ok(w) => w,
                Err(e) => {
                    line.fail(format!("{}: {e}", describe(p.instance())));
                    break;
                }
            };
            walks += 1;
            longest = longest.max(walk.steps());
            if walk.steps() > n {
                line.fail(format!(
                    "{}: walk took {} steps for {n} rectangles",
                    describe(p.instance()),
                    walk.steps()
                ));
            }
            let c = rest.get(walk.candidate).unwrap().clone();
            if let Some(j) = rest.others(c.id()).find(|j| blocks_escape(j, &c)) {
                line.fail(format!(
                    "{}: rectangle {} blocks candidate {}",
                    describe(p.instance()),
                    j.id(),
                    c.id()
                ));
            }
            rest.remove(c.id());
        }
    }
    line.summary = format!(
        "{} packings, {walks} walks checked by brute force, longest walk {longest} steps",
        packings.len()
    );
    line
}

fn criterion_scaling(solved: &[Solved], corpus: &[GreedyRun], perturbed: &[(Packing, Packing)]) -> Line {
    let mut line = Line::new(8, "scaling by 1/3 and 1/7 changes nothing but the scale");
    let mut checks = 0usize;
    for f in [Scalar::ratio(1, 3), Scalar::ratio(1, 7)] {
        let failures: Vec<String> = solved
            .par_iter()
            .filter_map(|s| {
                let scaled = Arc::new(s.instance.scaled(&f));
                let outcome = solve_exact(&scaled, &SolveConfig::deterministic()).outcome;
                let ok = match (&s.exact, &outcome) {
                    (
                        Outcome::Sat { packing, sequence },
                        Outcome::Sat {
                            packing: sp,
                            sequence: ss,
                        },
                    ) => &packing.scaled(&f) == sp && &sequence.scaled(&f) == ss,
                    (a, b) => a == b,
                };
                (!ok).then(|| format!("x{f}: {}: solver output not a scaled copy", describe(&s.instance)))
            })
            .collect();
        checks += solved.len();
        line.failures.extend(failures);

        for GreedyRun {
            instance: inst,
            order,
            orientations,
            packing: p,
        } in corpus
        {
            checks += 1;
            let scaled = Arc::new(inst.scaled(&f));
            let sp = match solve_greedy(&scaled, order, orientations) {
                Ok(sp) => sp,
                Err(e) => {
                    line.fail(format!("x{f}: {}: greedy {e}", describe(inst)));
                    continue;
                }
            };
            if sp != p.scaled(&f) {
                line.fail(format!("x{f}: {}: greedy packing not a scaled copy", describe(inst)));
                continue;
            }
            match (extract_sequence(&sp), extract_sequence(p)) {
                (Ok(ss), Ok(s)) if ss == s.scaled(&f) && replay(&scaled, &ss).as_ref() == Ok(&sp) => {}
                _ => line.fail(format!("x{f}: {}: scaled round trip differs", describe(inst))),
            }
        }

        for (_, p) in perturbed {
            checks += 1;
            let sp = p.scaled(&f);
            match (stabilize(&sp), stabilize(p)) {
                (Ok((so, ss)), Ok((o, s))) if so == o.scaled(&f) && ss == s.scaled(&f) => {
                    if !is_bl_stable(&so).unwrap() || total_coordinate(&so) > total_coordinate(&sp) {
                        line.fail(format!(
                            "x{f}: {}: scaled stabilize broke a guarantee",
                            describe(p.instance())
                        ));
                    }
                }
                _ => line.fail(format!(
                    "x{f}: {}: stabilize not scale invariant",
                    describe(p.instance())
                )),
            }
        }
    }
    line.summary = format!("{checks} scaled reruns of criteria 1-3 compared exactly");
    line
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let mut instances = exhaustive_sweep();
    let exhaustive = instances.len();
    instances.extend(random_instances(&mut rng, RANDOM_INSTANCES));
    let solved = solve_all(&instances);

    let corpus = greedy_corpus(&mut rng, STABLE_PACKINGS);
    let perturbed: Vec<(Packing, Packing)> = corpus
        .iter()
        .cycle()
        .take(PERTURBED_PACKINGS)
        .map(|run| (run.packing.clone(), perturb(&mut rng, &run.packing)))
        .collect();
    let escape_inputs: Vec<&Packing> = corpus
        .iter()
        .map(|run| &run.packing)
        .chain(perturbed.iter().map(|(_, p)| p))
        .collect();

    let lines = [
        criterion_oracle(&solved, exhaustive),
        criterion_round_trip(&corpus),
        criterion_stabilize(&perturbed),
        criterion_escape(&escape_inputs),
        criterion_bound(&solved),
        criterion_certificates(&solved),
        criterion_greedy(&solved),
        criterion_scaling(&solved, &corpus, &perturbed),
    ];
    let mut all = true;
    for line in &lines {
        all &= line.print();
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        lines.iter().filter(|l| l.failures.is_empty()).count(),
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
