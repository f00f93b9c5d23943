//! Deciding whether an instance can be packed.
//!
//! [`solve_exact`] is a complete depth-first search over bottom-left
//! placement actions: since every feasible instance has a bottom-left stable
//! packing, and every such packing can be built by placing rectangles one at
//! a time onto corners, exhausting the actions proves infeasibility.
//! [`solve_greedy`] is the classic no-backtracking bottom-left heuristic, and
//! [`oracle_lattice`] decides integer instances by brute force over lattice
//! positions, independently of the corner machinery.

mod greedy;
mod lattice;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::corners::{corners_for, Corner};
use crate::geometry::{effective_dims, Dims, Instance, Orientation, Packing, PlacedRect, RectId};
use crate::scalar::Scalar;
use crate::sequencing::{PlacementAction, PlacementSequence};

pub use greedy::{solve_greedy, GreedyError};
pub use lattice::{oracle_lattice, OracleVerdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    /// Stop with [`Outcome::Unknown`] after expanding this many nodes.
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Search sequentially so that results and statistics are reproducible.
    pub deterministic: bool,
    /// Reject the instance up front when the rectangles' total area exceeds
    /// the container's.
    pub area_prune: bool,
    /// Branch on one representative of each group of identical rectangles,
    /// and on one orientation of squares.
    pub duplicate_prune: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            node_limit: None,
            time_limit: None,
            deterministic: false,
            area_prune: true,
            duplicate_prune: true,
        }
    }
}

impl SolveConfig {
    pub fn deterministic() -> Self {
        SolveConfig {
            deterministic: true,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitReason {
    NodeLimit,
    TimeLimit,
}

impl std::fmt::Display for LimitReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LimitReason::NodeLimit => "node limit reached",
            LimitReason::TimeLimit => "time limit reached",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat {
        packing: Packing,
        sequence: PlacementSequence,
    },
    /// The whole search space was exhausted.
    Unsat,
    Unknown(LimitReason),
}

impl Outcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Outcome::Sat { .. })
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, Outcome::Unsat)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search nodes at which branches were generated.
    pub nodes: u64,
    /// Largest corner list seen at each depth (depth = rectangles placed).
    pub max_corners_by_depth: Vec<usize>,
    /// Corner lists longer than `(k+1)^2` at depth `k`. Always zero unless
    /// corner enumeration is broken.
    pub corner_bound_violations: u64,
}

impl SolveStats {
    fn merge(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        if self.max_corners_by_depth.len() < other.max_corners_by_depth.len() {
            self.max_corners_by_depth.resize(other.max_corners_by_depth.len(), 0);
        }
        for (mine, theirs) in self.max_corners_by_depth.iter_mut().zip(&other.max_corners_by_depth) {
            *mine = (*mine).max(*theirs);
        }
        self.corner_bound_violations += other.corner_bound_violations;
    }

    fn record_corners(&mut self, depth: usize, count: usize) {
        if self.max_corners_by_depth.len() <= depth {
            self.max_corners_by_depth.resize(depth + 1, 0);
        }
        let slot = &mut self.max_corners_by_depth[depth];
        *slot = (*slot).max(count);
        if count > (depth + 1) * (depth + 1) {
            self.corner_bound_violations += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub stats: SolveStats,
}

/// `n! * 2^n * prod_{k<n} (k+1)^2 = (n!)^3 * 2^n`: the number of placement
/// action sequences when at most `(k+1)^2` corners exist after `k`
/// placements. `None` on overflow.
pub fn placement_action_bound(n: usize) -> Option<u128> {
    let mut factorial: u128 = 1;
    for k in 1..=n as u128 {
        factorial = factorial.checked_mul(k)?;
    }
    let cube = factorial.checked_mul(factorial)?.checked_mul(factorial)?;
    cube.checked_mul(1u128.checked_shl(n as u32)?)
}

struct Limits<'a> {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: &'a AtomicU64,
    cancel: &'a AtomicBool,
}

enum Step {
    Found,
    Exhausted,
    Aborted(Option<LimitReason>),
}

struct Branch {
    index: usize,
    orientation: Orientation,
    corner: Corner,
    eff: Dims,
}

struct Search<'a> {
    container: &'a Dims,
    dims: &'a [Dims],
    /// Indices into `dims`, largest area first.
    order: Vec<usize>,
    remaining: Vec<bool>,
    placed: Vec<PlacedRect>,
    duplicate_prune: bool,
    stats: SolveStats,
    limits: &'a Limits<'a>,
}

impl<'a> Search<'a> {
    fn new(instance: &'a Instance, cfg: &SolveConfig, limits: &'a Limits<'a>) -> Self {
        let dims = instance.rects();
        let mut order: Vec<usize> = (0..dims.len()).collect();
        order.sort_by(|&a, &b| dims[b].area().cmp(&dims[a].area()).then(a.cmp(&b)));
        Search {
            container: instance.container(),
            dims,
            order,
            remaining: vec![true; dims.len()],
            placed: Vec::with_capacity(dims.len()),
            duplicate_prune: cfg.duplicate_prune,
            stats: SolveStats::default(),
            limits,
        }
    }

    fn check_limits(&self) -> Option<Step> {
        if self.limits.cancel.load(Ordering::Relaxed) {
            return Some(Step::Aborted(None));
        }
        let expanded = self.limits.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.limits.node_limit.is_some_and(|cap| expanded > cap) {
            return Some(Step::Aborted(Some(LimitReason::NodeLimit)));
        }
        if (expanded == 1 || expanded.is_multiple_of(256)) && self.limits.deadline.is_some_and(|d| Instant::now() >= d)
        {
            return Some(Step::Aborted(Some(LimitReason::TimeLimit)));
        }
        None
    }

    /// Every placement action available at this node, or `None` when some
    /// remaining rectangle already has no corner at all (it fits nowhere,
    /// and placing more rectangles cannot make room).
    fn branches(&mut self) -> Option<Vec<Branch>> {
        let depth = self.placed.len();
        let mut out = Vec::new();
        for (pos, &index) in self.order.iter().enumerate() {
            if !self.remaining[index] {
                continue;
            }
            let dims = &self.dims[index];
            let representative = !self.duplicate_prune
                || !self.order[..pos]
                    .iter()
                    .any(|&j| self.remaining[j] && self.dims[j] == *dims);
            if !representative {
                continue;
            }
            let mut any_corner = false;
            for orientation in Orientation::BOTH {
                if self.duplicate_prune && orientation == Orientation::Vertical && dims.is_square() {
                    continue;
                }
                let eff = effective_dims(dims, orientation);
                let corners = corners_for(self.container, &self.placed, &eff);
                self.stats.record_corners(depth, corners.len());
                any_corner |= !corners.is_empty();
                out.extend(corners.into_iter().map(|corner| Branch {
                    index,
                    orientation,
                    corner,
                    eff: eff.clone(),
                }));
            }
            if !any_corner {
                return None;
            }
        }
        Some(out)
    }

    fn apply(&mut self, b: &Branch) {
        self.remaining[b.index] = false;
        self.placed.push(PlacedRect::new(
            RectId(b.index + 1),
            self.dims[b.index].clone(),
            b.corner.placement(b.orientation),
        ));
        debug_assert_eq!(self.placed.last().map(|r| r.width()), Some(b.eff.w().clone()));
    }

    fn undo(&mut self, b: &Branch) {
        self.placed.pop();
        self.remaining[b.index] = true;
    }

    fn dfs(&mut self) -> Step {
        if self.placed.len() == self.dims.len() {
            return Step::Found;
        }
        if let Some(stop) = self.check_limits() {
            return stop;
        }
        self.stats.nodes += 1;
        let Some(branches) = self.branches() else {
            return Step::Exhausted;
        };
        for b in &branches {
            self.apply(b);
            match self.dfs() {
                Step::Exhausted => self.undo(b),
                other => return other,
            }
        }
        Step::Exhausted
    }

    fn sat_outcome(&self, instance: &Arc<Instance>) -> Outcome {
        let sequence = PlacementSequence {
            actions: self
                .placed
                .iter()
                .map(|r| PlacementAction {
                    id: r.id(),
                    orientation: r.orientation(),
                    x: r.left().clone(),
                    y: r.bottom().clone(),
                })
                .collect(),
        };
        let packing = Packing::from_placements(
            instance.clone(),
            self.placed.iter().map(|r| (r.id(), r.placement().clone())),
        )
        .expect("search places each instance id once");
        Outcome::Sat { packing, sequence }
    }
}

/// Complete search for a feasible packing.
///
/// Branches on which rectangle goes next (largest area first), its
/// orientation, and which bottom-left corner it takes (lowest first).
/// `Unsat` is only returned after the search space is exhausted; hitting a
/// limit gives `Unknown`.
pub fn solve_exact(instance: &Arc<Instance>, cfg: &SolveConfig) -> Verdict {
    let nodes = AtomicU64::new(0);
    let cancel = AtomicBool::new(false);
    let limits = Limits {
        node_limit: cfg.node_limit,
        deadline: cfg.time_limit.map(|t| Instant::now() + t),
        nodes: &nodes,
        cancel: &cancel,
    };

    if cfg.area_prune && instance.total_area() > instance.container().area() {
        return Verdict {
            outcome: Outcome::Unsat,
            stats: SolveStats::default(),
        };
    }

    let mut root = Search::new(instance, cfg, &limits);
    if cfg.deterministic || instance.len() < 2 {
        let outcome = match root.dfs() {
            Step::Found => root.sat_outcome(instance),
            Step::Exhausted => Outcome::Unsat,
            Step::Aborted(reason) => Outcome::Unknown(reason.unwrap_or(LimitReason::NodeLimit)),
        };
        return Verdict {
            outcome,
            stats: root.stats,
        };
    }

    // Root-level branches are explored by independent workers.
    if let Some(stop) = root.check_limits() {
        let Step::Aborted(reason) = stop else { unreachable!() };
        return Verdict {
            outcome: Outcome::Unknown(reason.unwrap_or(LimitReason::NodeLimit)),
            stats: root.stats,
        };
    }
    root.stats.nodes += 1;
    let Some(branches) = root.branches() else {
        return Verdict {
            outcome: Outcome::Unsat,
            stats: root.stats,
        };
    };
    let results: Vec<(Step, SolveStats, Option<Outcome>)> = branches
        .par_iter()
        .map(|b| {
            let mut worker = Search::new(instance, cfg, &limits);
            worker.apply(b);
            let step = worker.dfs();
            let sat = match step {
                Step::Found => {
                    cancel.store(true, Ordering::Relaxed);
                    Some(worker.sat_outcome(instance))
                }
                _ => None,
            };
            (step, worker.stats, sat)
        })
        .collect();

    let mut stats = root.stats;
    let mut found = None;
    let mut limit = None;
    for (step, s, sat) in results {
        stats.merge(&s);
        match step {
            Step::Found => found = found.or(sat),
            Step::Aborted(Some(reason)) => limit = limit.or(Some(reason)),
            _ => {}
        }
    }
    let outcome = match (found, limit) {
        (Some(sat), _) => sat,
        (None, Some(reason)) => Outcome::Unknown(reason),
        (None, None) => Outcome::Unsat,
    };
    Verdict { outcome, stats }
}

/// Area of the container not covered by `p`.
pub fn free_area(p: &Packing) -> Scalar {
    p.container().area() - p.rects().iter().map(PlacedRect::area).sum::<Scalar>()
}
