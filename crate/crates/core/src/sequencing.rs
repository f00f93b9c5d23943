//! Taking packings apart and putting them back together one bottom-left
//! placement at a time.
//!
//! [`escape_candidate`] finds a rectangle that nothing sits over or to the
//! right of. Removing such rectangles one after another gives an
//! [`extraction_order`]; played backwards, every rectangle rests only on
//! rectangles placed before it, which is what makes [`stabilize`] and
//! [`extract_sequence`] produce sequences that [`replay`] accepts.

use std::sync::Arc;

use crate::corners::corners_for;
use crate::error::{Error, Result};
use crate::geometry::{effective_dims, is_feasible, Instance, Orientation, Packing, PlacedRect, Placement, RectId};
use crate::relations::{first_unstable, is_over, settle_against};
use crate::scalar::Scalar;

/// Put rectangle `id`, turned to `orientation`, with its bottom-left corner
/// at `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlacementAction {
    pub id: RectId,
    pub orientation: Orientation,
    pub x: Scalar,
    pub y: Scalar,
}

impl PlacementAction {
    pub fn placement(&self) -> Placement {
        Placement::new(self.x.clone(), self.y.clone(), self.orientation)
    }

    fn of(r: &PlacedRect) -> Self {
        PlacementAction {
            id: r.id(),
            orientation: r.orientation(),
            x: r.left().clone(),
            y: r.bottom().clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PlacementSequence {
    pub actions: Vec<PlacementAction>,
}

impl PlacementSequence {
    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn ids(&self) -> Vec<RectId> {
        self.actions.iter().map(|a| a.id).collect()
    }

    pub fn scaled(&self, factor: &Scalar) -> PlacementSequence {
        PlacementSequence {
            actions: self
                .actions
                .iter()
                .map(|a| PlacementAction {
                    x: &a.x * factor,
                    y: &a.y * factor,
                    ..a.clone()
                })
                .collect(),
        }
    }
}

/// Outcome of the escape walk: the rectangle found and every rectangle
/// visited on the way, starting from the one with the largest top-right
/// corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeWalk {
    pub candidate: RectId,
    pub path: Vec<RectId>,
}

impl EscapeWalk {
    /// Number of jumps taken.
    pub fn steps(&self) -> usize {
        self.path.len() - 1
    }
}

/// A rectangle that can move both up and right without meeting any other
/// rectangle (walls ignored).
pub fn escape_candidate(p: &Packing) -> Result<RectId> {
    escape_walk(p).map(|w| w.candidate)
}

pub fn escape_walk(p: &Packing) -> Result<EscapeWalk> {
    if !is_feasible(p) {
        return Err(Error::Infeasible);
    }
    walk(p.rects())
}

/// Rank rectangles by top-right corner, `(x, y)` lexicographic. Start at the
/// highest rank; while something is over the current rectangle, move to the
/// highest ranked rectangle over it.
fn walk(rects: &[PlacedRect]) -> Result<EscapeWalk> {
    if rects.is_empty() {
        return Err(Error::EmptyPacking);
    }
    let mut ranked: Vec<&PlacedRect> = rects.iter().collect();
    ranked.sort_by(|a, b| (a.right(), a.top()).cmp(&(b.right(), b.top())));
    // non-overlapping closed rectangles never share a top-right corner
    if ranked
        .windows(2)
        .any(|w| w[0].right() == w[1].right() && w[0].top() == w[1].top())
    {
        return Err(Error::Internal("two rectangles share a top-right corner"));
    }
    let mut current = ranked[ranked.len() - 1];
    let mut path = vec![current.id()];
    while let Some(next) = ranked
        .iter()
        .rev()
        .find(|j| j.id() != current.id() && is_over(j, current))
    {
        current = next;
        path.push(current.id());
        if path.len() > rects.len() {
            return Err(Error::Internal("escape walk revisited a rectangle"));
        }
    }
    Ok(EscapeWalk {
        candidate: current.id(),
        path,
    })
}

/// Ids in the order they leave the packing when escape candidates are
/// removed one at a time.
pub fn extraction_order(p: &Packing) -> Result<Vec<RectId>> {
    if !is_feasible(p) {
        return Err(Error::Infeasible);
    }
    let mut rest: Vec<PlacedRect> = p.rects().to_vec();
    let mut order = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let id = walk(&rest)?.candidate;
        rest.retain(|r| r.id() != id);
        order.push(id);
    }
    Ok(order)
}

/// Rebuilds `p` as a bottom-left stable packing.
///
/// Rectangles are put back in reverse extraction order, each at its original
/// position, then slid down and left against the rectangles already back in.
/// Nothing ever moves up or right, so the coordinate sum cannot grow. The
/// returned sequence replays to the returned packing.
pub fn stabilize(p: &Packing) -> Result<(Packing, PlacementSequence)> {
    let mut order = extraction_order(p)?;
    order.reverse();
    let container = p.container();
    let mut placed: Vec<PlacedRect> = Vec::with_capacity(order.len());
    let mut actions = Vec::with_capacity(order.len());
    for id in order {
        let original = p.require(id)?.clone();
        if placed.iter().any(|r| r.overlaps(&original)) {
            return Err(Error::Internal("re-inserted rectangle overlaps a settled one"));
        }
        let rested = settle_against(container, &placed, original);
        actions.push(PlacementAction::of(&rested));
        placed.push(rested);
    }
    let out = Packing::from_placements(
        p.instance().clone(),
        placed.into_iter().map(|r| (r.id(), r.placement().clone())),
    )?;
    Ok((out, PlacementSequence { actions }))
}

/// The placement sequence that rebuilds a bottom-left stable packing
/// exactly.
pub fn extract_sequence(p: &Packing) -> Result<PlacementSequence> {
    if let Some(id) = first_unstable(p)? {
        return Err(Error::NotStable(id));
    }
    let (rebuilt, seq) = stabilize(p)?;
    if &rebuilt != p {
        return Err(Error::Internal("stable packing moved during re-insertion"));
    }
    Ok(seq)
}

/// Applies `seq` to an empty container, checking that every action puts its
/// rectangle on a bottom-left corner of the packing built so far.
pub fn replay(instance: &Arc<Instance>, seq: &PlacementSequence) -> Result<Packing> {
    let mut p = Packing::new(instance.clone());
    for (index, action) in seq.actions.iter().enumerate() {
        let dims = instance.dims(action.id)?;
        if p.get(action.id).is_some() {
            return Err(Error::DuplicateRect(action.id));
        }
        let eff = effective_dims(dims, action.orientation);
        let corners = corners_for(instance.container(), p.rects(), &eff);
        if !corners.iter().any(|c| c.x == action.x && c.y == action.y) {
            return Err(Error::ActionNotACorner {
                index,
                id: action.id,
                x: action.x.clone(),
                y: action.y.clone(),
            });
        }
        p.place(action.id, action.placement())?;
    }
    Ok(p)
}
