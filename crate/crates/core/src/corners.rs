//! Bottom-left corners: positions where a specific rectangle fits and rests
//! against supports both below and to its left.
//!
//! A rectangle blocked on the left has its left edge on the wall or on some
//! neighbour's right edge; blocked below, its bottom edge on the floor or on
//! some neighbour's top edge. So every corner lies on the grid
//! `({0} ∪ right edges) x ({0} ∪ top edges)`, which has at most `(k+1)^2`
//! points for `k` placed rectangles.

use crate::geometry::{effective_dims, Dims, Orientation, Packing, PlacedRect, Placement, RectId};
use crate::scalar::Scalar;

/// What holds a corner in place on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Support {
    /// The floor (below) or the left wall (to the left).
    Wall,
    Rect(RectId),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Corner {
    pub x: Scalar,
    pub y: Scalar,
    pub left_support: Support,
    pub bottom_support: Support,
}

/// `({0} ∪ right edges) x ({0} ∪ top edges)`, sorted by `(y, x)`.
pub fn candidate_grid(p: &Packing) -> Vec<(Scalar, Scalar)> {
    let (xs, ys) = grid_axes(p.rects());
    ys.iter()
        .flat_map(|y| xs.iter().map(move |x| (x.clone(), y.clone())))
        .collect()
}

fn grid_axes(placed: &[PlacedRect]) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut xs: Vec<Scalar> = std::iter::once(Scalar::zero())
        .chain(placed.iter().map(|r| r.right().clone()))
        .collect();
    let mut ys: Vec<Scalar> = std::iter::once(Scalar::zero())
        .chain(placed.iter().map(|r| r.top().clone()))
        .collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    (xs, ys)
}

/// Every bottom-left corner for a rectangle of `dims` under `orientation`,
/// sorted by `(y, x)`. The head of the list is the lowest, then leftmost,
/// position.
pub fn enumerate_corners(p: &Packing, dims: &Dims, orientation: Orientation) -> Vec<Corner> {
    corners_for(p.container(), p.rects(), &effective_dims(dims, orientation))
}

/// Corner search against a slice of placed rectangles. `eff` is the
/// rectangle's footprint after orientation.
pub(crate) fn corners_for(container: &Dims, placed: &[PlacedRect], eff: &Dims) -> Vec<Corner> {
    let (xs, ys) = grid_axes(placed);
    let max_x = container.w() - eff.w();
    let max_y = container.h() - eff.h();
    let mut out = Vec::new();
    for y in ys.iter().take_while(|y| *y <= &max_y) {
        let top = y + eff.h();
        for x in xs.iter().take_while(|x| *x <= &max_x) {
            let right = x + eff.w();
            if placed
                .iter()
                .any(|r| r.left() < &right && x < r.right() && r.bottom() < &top && y < r.top())
            {
                continue;
            }
            let Some(bottom_support) = support_below(placed, x, &right, y) else {
                continue;
            };
            let Some(left_support) = support_left(placed, y, &top, x) else {
                continue;
            };
            out.push(Corner {
                x: x.clone(),
                y: y.clone(),
                left_support,
                bottom_support,
            });
        }
    }
    out
}

fn support_below(placed: &[PlacedRect], x0: &Scalar, x1: &Scalar, y: &Scalar) -> Option<Support> {
    if y.is_zero() {
        return Some(Support::Wall);
    }
    placed
        .iter()
        .find(|r| r.top() == y && r.left() < x1 && x0 < r.right())
        .map(|r| Support::Rect(r.id()))
}

fn support_left(placed: &[PlacedRect], y0: &Scalar, y1: &Scalar, x: &Scalar) -> Option<Support> {
    if x.is_zero() {
        return Some(Support::Wall);
    }
    placed
        .iter()
        .find(|r| r.right() == x && r.bottom() < y1 && y0 < r.top())
        .map(|r| Support::Rect(r.id()))
}

impl Corner {
    pub fn placement(&self, orientation: Orientation) -> Placement {
        Placement::new(self.x.clone(), self.y.clone(), orientation)
    }
}
