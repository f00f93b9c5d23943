//! Directional relations between placed rectangles, and the sliding moves
//! that bring a rectangle to rest against its neighbours.
//!
//! Two notions of movement are kept apart here:
//!
//! * [`interferes`] (and its named forms [`is_over`], [`is_right_of`]) asks
//!   whether *some* displacement of `i` in a direction, of any length, would
//!   overlap `j`. Gaps do not matter.
//! * [`is_blocked`] and [`max_slide`] describe a continuous slide: a
//!   rectangle is blocked only when it already touches a support (a wall or
//!   a neighbour sharing a positive-length edge segment).

use crate::error::{Error, Result};
use crate::geometry::{is_feasible, Dims, Packing, PlacedRect, Placement, RectId};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Left,
    Up,
    Right,
}

/// Whether translating `i` by some positive distance in `dir` makes it
/// overlap `j` with positive area.
pub fn interferes(j: &PlacedRect, i: &PlacedRect, dir: Direction) -> bool {
    match dir {
        Direction::Up => i.x_overlaps(j) && j.top() > i.bottom(),
        Direction::Down => i.x_overlaps(j) && j.bottom() < i.top(),
        Direction::Right => i.y_overlaps(j) && j.right() > i.left(),
        Direction::Left => i.y_overlaps(j) && j.left() < i.right(),
    }
}

/// `j` is over `i`: moving `i` up far enough hits `j`.
pub fn is_over(j: &PlacedRect, i: &PlacedRect) -> bool {
    interferes(j, i, Direction::Up)
}

/// `j` is on the right of `i`: moving `i` right far enough hits `j`.
pub fn is_right_of(j: &PlacedRect, i: &PlacedRect) -> bool {
    interferes(j, i, Direction::Right)
}

/// No other rectangle interferes with `id` moving in `dir`. Container walls
/// are ignored.
pub fn can_move_freely(p: &Packing, id: RectId, dir: Direction) -> Result<bool> {
    let i = p.require(id)?;
    Ok(!p.others(id).any(|j| interferes(j, i, dir)))
}

fn require_feasible(p: &Packing) -> Result<()> {
    if is_feasible(p) {
        Ok(())
    } else {
        Err(Error::Infeasible)
    }
}

/// `id` touches a wall or a neighbour on its `dir` side. Down and left are
/// blocked by the floor and the left wall; up and right by the top and right
/// walls.
pub fn is_blocked(p: &Packing, id: RectId, dir: Direction) -> Result<bool> {
    require_feasible(p)?;
    let r = p.require(id)?;
    Ok(blocked_against(p.container(), p.others(id), r, dir))
}

/// Largest distance `id` can slide in `dir` while staying feasible along
/// the whole path.
pub fn max_slide(p: &Packing, id: RectId, dir: Direction) -> Result<Scalar> {
    require_feasible(p)?;
    let r = p.require(id)?;
    Ok(slide_distance(p.container(), p.others(id), r, dir))
}

pub fn is_bl_stable_rect(p: &Packing, id: RectId) -> Result<bool> {
    require_feasible(p)?;
    let r = p.require(id)?;
    Ok(stable_against(p.container(), p.others(id), r))
}

/// Every rectangle is blocked both downward and leftward.
pub fn is_bl_stable(p: &Packing) -> Result<bool> {
    Ok(first_unstable(p)?.is_none())
}

/// The lowest id that can still slide down or left, if any.
pub fn first_unstable(p: &Packing) -> Result<Option<RectId>> {
    require_feasible(p)?;
    Ok(p.rects()
        .iter()
        .find(|r| !stable_against(p.container(), p.others(r.id()), r))
        .map(PlacedRect::id))
}

/// Slides `id` down, then left, repeating until neither move is possible,
/// with every other rectangle held fixed. Returns the resting placement.
pub fn settle(p: &Packing, id: RectId) -> Result<Placement> {
    require_feasible(p)?;
    let r = p.require(id)?;
    let others: Vec<PlacedRect> = p.others(id).cloned().collect();
    Ok(settle_against(p.container(), &others, r.clone()).placement().clone())
}

pub(crate) fn blocked_against<'a>(
    container: &Dims,
    others: impl IntoIterator<Item = &'a PlacedRect>,
    r: &PlacedRect,
    dir: Direction,
) -> bool {
    let mut others = others.into_iter();
    match dir {
        Direction::Down => r.bottom().is_zero() || others.any(|j| j.top() == r.bottom() && r.x_overlaps(j)),
        Direction::Left => r.left().is_zero() || others.any(|j| j.right() == r.left() && r.y_overlaps(j)),
        Direction::Up => r.top() == container.h() || others.any(|j| j.bottom() == r.top() && r.x_overlaps(j)),
        Direction::Right => r.right() == container.w() || others.any(|j| j.left() == r.right() && r.y_overlaps(j)),
    }
}

pub(crate) fn stable_against<'a>(
    container: &Dims,
    others: impl IntoIterator<Item = &'a PlacedRect> + Clone,
    r: &PlacedRect,
) -> bool {
    blocked_against(container, others.clone(), r, Direction::Down)
        && blocked_against(container, others, r, Direction::Left)
}

/// Assumes `r` does not overlap any of `others` and lies inside the container.
pub(crate) fn slide_distance<'a>(
    container: &Dims,
    others: impl IntoIterator<Item = &'a PlacedRect>,
    r: &PlacedRect,
    dir: Direction,
) -> Scalar {
    let others = others.into_iter();
    match dir {
        Direction::Down => {
            let stop = others
                .filter(|j| j.top() <= r.bottom() && r.x_overlaps(j))
                .map(|j| j.top())
                .max()
                .cloned()
                .unwrap_or_else(Scalar::zero);
            r.bottom() - stop.max(Scalar::zero())
        }
        Direction::Left => {
            let stop = others
                .filter(|j| j.right() <= r.left() && r.y_overlaps(j))
                .map(|j| j.right())
                .max()
                .cloned()
                .unwrap_or_else(Scalar::zero);
            r.left() - stop.max(Scalar::zero())
        }
        Direction::Up => {
            let stop = others
                .filter(|j| j.bottom() >= r.top() && r.x_overlaps(j))
                .map(|j| j.bottom())
                .min()
                .unwrap_or(container.h());
            stop.min(container.h()) - r.top()
        }
        Direction::Right => {
            let stop = others
                .filter(|j| j.left() >= r.right() && r.y_overlaps(j))
                .map(|j| j.left())
                .min()
                .unwrap_or(container.w());
            stop.min(container.w()) - r.right()
        }
    }
}

pub(crate) fn translated(r: &PlacedRect, dir: Direction, by: &Scalar) -> PlacedRect {
    let p = r.placement();
    let (x, y) = match dir {
        Direction::Down => (p.x.clone(), &p.y - by),
        Direction::Left => (&p.x - by, p.y.clone()),
        Direction::Up => (p.x.clone(), &p.y + by),
        Direction::Right => (&p.x + by, p.y.clone()),
    };
    r.moved_to(Placement::new(x, y, p.orientation))
}

pub(crate) fn settle_against(container: &Dims, others: &[PlacedRect], mut r: PlacedRect) -> PlacedRect {
    loop {
        let down = slide_distance(container, others, &r, Direction::Down);
        if !down.is_zero() {
            r = translated(&r, Direction::Down, &down);
        }
        let left = slide_distance(container, others, &r, Direction::Left);
        if !left.is_zero() {
            r = translated(&r, Direction::Left, &left);
        }
        if down.is_zero() && left.is_zero() {
            return r;
        }
    }
}
