//! Rectangles, placements, packings, and the exact overlap measures over them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// 1-based index of a rectangle within its [`Instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RectId(pub usize);

impl fmt::Display for RectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Width along the x axis, as given.
    Horizontal,
    /// Rotated a quarter turn: width and height swapped.
    Vertical,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Horizontal, Orientation::Vertical];
}

/// Width and height, both strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dims {
    w: Scalar,
    h: Scalar,
}

impl Dims {
    pub fn new(w: impl Into<Scalar>, h: impl Into<Scalar>) -> Result<Self> {
        let (w, h) = (w.into(), h.into());
        if !w.is_positive() || !h.is_positive() {
            return Err(Error::NonPositiveDims { w, h });
        }
        Ok(Dims { w, h })
    }

    pub fn w(&self) -> &Scalar {
        &self.w
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    pub fn area(&self) -> Scalar {
        &self.w * &self.h
    }

    pub fn is_square(&self) -> bool {
        self.w == self.h
    }

    /// Both sides multiplied by a positive factor.
    pub fn scaled(&self, factor: &Scalar) -> Dims {
        assert!(factor.is_positive(), "scale factor must be positive");
        Dims {
            w: &self.w * factor,
            h: &self.h * factor,
        }
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.w, self.h)
    }
}

/// The dimensions a rectangle occupies under `orientation`.
pub fn effective_dims(dims: &Dims, orientation: Orientation) -> Dims {
    match orientation {
        Orientation::Horizontal => dims.clone(),
        Orientation::Vertical => Dims {
            w: dims.h.clone(),
            h: dims.w.clone(),
        },
    }
}

/// Bottom-left corner position plus orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    pub x: Scalar,
    pub y: Scalar,
    pub orientation: Orientation,
}

impl Placement {
    pub fn new(x: impl Into<Scalar>, y: impl Into<Scalar>, orientation: Orientation) -> Self {
        Placement {
            x: x.into(),
            y: y.into(),
            orientation,
        }
    }
}

/// A rectangle at a concrete placement. The occupied box is the closed
/// region `[left, right] x [bottom, top]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlacedRect {
    id: RectId,
    dims: Dims,
    placement: Placement,
    right: Scalar,
    top: Scalar,
}

impl PlacedRect {
    pub fn new(id: RectId, dims: Dims, placement: Placement) -> Self {
        let eff = effective_dims(&dims, placement.orientation);
        let right = &placement.x + &eff.w;
        let top = &placement.y + &eff.h;
        PlacedRect {
            id,
            dims,
            placement,
            right,
            top,
        }
    }

    pub fn id(&self) -> RectId {
        self.id
    }

    /// Dimensions as listed in the instance, before orientation.
    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn placement(&self) -> &Placement {
        &self.placement
    }

    pub fn orientation(&self) -> Orientation {
        self.placement.orientation
    }

    pub fn left(&self) -> &Scalar {
        &self.placement.x
    }

    pub fn bottom(&self) -> &Scalar {
        &self.placement.y
    }

    pub fn right(&self) -> &Scalar {
        &self.right
    }

    pub fn top(&self) -> &Scalar {
        &self.top
    }

    pub fn width(&self) -> Scalar {
        &self.right - &self.placement.x
    }

    pub fn height(&self) -> Scalar {
        &self.top - &self.placement.y
    }

    pub fn area(&self) -> Scalar {
        self.dims.area()
    }

    /// Same rectangle moved to `placement`.
    pub fn moved_to(&self, placement: Placement) -> PlacedRect {
        PlacedRect::new(self.id, self.dims.clone(), placement)
    }

    /// Positive-length intersection of the x projections.
    pub fn x_overlaps(&self, other: &PlacedRect) -> bool {
        open_intervals_meet(self.left(), self.right(), other.left(), other.right())
    }

    /// Positive-length intersection of the y projections.
    pub fn y_overlaps(&self, other: &PlacedRect) -> bool {
        open_intervals_meet(self.bottom(), self.top(), other.bottom(), other.top())
    }

    /// Positive-area intersection.
    pub fn overlaps(&self, other: &PlacedRect) -> bool {
        self.x_overlaps(other) && self.y_overlaps(other)
    }

    pub fn inside(&self, container: &Dims) -> bool {
        !self.left().is_negative()
            && !self.bottom().is_negative()
            && self.right() <= container.w()
            && self.top() <= container.h()
    }
}

fn open_intervals_meet(a0: &Scalar, a1: &Scalar, b0: &Scalar, b1: &Scalar) -> bool {
    a0 < b1 && b0 < a1
}

fn interval_overlap(a0: &Scalar, a1: &Scalar, b0: &Scalar, b1: &Scalar) -> Scalar {
    (a1.min(b1) - a0.max(b0)).clamp_nonneg()
}

/// Container dimensions and the rectangles to pack. Rectangle `k` in
/// `rects` has id `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    container: Dims,
    rects: Vec<Dims>,
}

impl Instance {
    pub fn new(container: Dims, rects: Vec<Dims>) -> Self {
        Instance { container, rects }
    }

    pub fn container(&self) -> &Dims {
        &self.container
    }

    pub fn rects(&self) -> &[Dims] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = RectId> + '_ {
        (1..=self.rects.len()).map(RectId)
    }

    pub fn dims(&self, id: RectId) -> Result<&Dims> {
        id.0.checked_sub(1)
            .and_then(|k| self.rects.get(k))
            .ok_or(Error::UnknownRect(id))
    }

    pub fn total_area(&self) -> Scalar {
        self.rects.iter().map(Dims::area).sum()
    }

    pub fn is_integral(&self) -> bool {
        std::iter::once(&self.container)
            .chain(&self.rects)
            .all(|d| d.w.is_integer() && d.h.is_integer())
    }

    /// Every parameter multiplied by `factor`.
    pub fn scaled(&self, factor: &Scalar) -> Instance {
        Instance {
            container: self.container.scaled(factor),
            rects: self.rects.iter().map(|d| d.scaled(factor)).collect(),
        }
    }
}

/// A (possibly partial) packing of an instance: at most one placement per
/// rectangle id, kept sorted by id. Placements are not required to be
/// feasible; see [`is_feasible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    instance: Arc<Instance>,
    rects: Vec<PlacedRect>,
}

impl Packing {
    pub fn new(instance: impl Into<Arc<Instance>>) -> Self {
        Packing {
            instance: instance.into(),
            rects: Vec::new(),
        }
    }

    /// Builds a packing from `(id, placement)` pairs.
    pub fn from_placements(
        instance: impl Into<Arc<Instance>>,
        placements: impl IntoIterator<Item = (RectId, Placement)>,
    ) -> Result<Self> {
        let mut p = Packing::new(instance);
        for (id, placement) in placements {
            p.place(id, placement)?;
        }
        Ok(p)
    }

    pub fn instance(&self) -> &Arc<Instance> {
        &self.instance
    }

    pub fn container(&self) -> &Dims {
        &self.instance.container
    }

    pub fn rects(&self) -> &[PlacedRect] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.rects.len() == self.instance.len()
    }

    pub fn get(&self, id: RectId) -> Option<&PlacedRect> {
        self.position(id).ok().map(|k| &self.rects[k])
    }

    pub fn require(&self, id: RectId) -> Result<&PlacedRect> {
        self.get(id).ok_or(Error::NotPlaced(id))
    }

    fn position(&self, id: RectId) -> std::result::Result<usize, usize> {
        self.rects.binary_search_by_key(&id, PlacedRect::id)
    }

    pub fn place(&mut self, id: RectId, placement: Placement) -> Result<&PlacedRect> {
        let dims = self.instance.dims(id)?.clone();
        match self.position(id) {
            Ok(_) => Err(Error::DuplicateRect(id)),
            Err(k) => {
                self.rects.insert(k, PlacedRect::new(id, dims, placement));
                Ok(&self.rects[k])
            }
        }
    }

    /// Moves an already placed rectangle.
    pub fn set_placement(&mut self, id: RectId, placement: Placement) -> Result<()> {
        let k = self.position(id).map_err(|_| Error::NotPlaced(id))?;
        self.rects[k] = self.rects[k].moved_to(placement);
        Ok(())
    }

    pub fn remove(&mut self, id: RectId) -> Option<PlacedRect> {
        self.position(id).ok().map(|k| self.rects.remove(k))
    }

    /// All rectangles except `id`.
    pub fn others(&self, id: RectId) -> impl Iterator<Item = &PlacedRect> + Clone {
        self.rects.iter().filter(move |r| r.id != id)
    }

    /// The same packing of the instance scaled by `factor`.
    pub fn scaled(&self, factor: &Scalar) -> Packing {
        let instance = Arc::new(self.instance.scaled(factor));
        let rects = self
            .rects
            .iter()
            .map(|r| {
                let p = r.placement();
                PlacedRect::new(
                    r.id,
                    instance.rects[r.id.0 - 1].clone(),
                    Placement::new(&p.x * factor, &p.y * factor, p.orientation),
                )
            })
            .collect();
        Packing { instance, rects }
    }
}

/// Area of the intersection of two occupied boxes. Boundary contact gives 0.
pub fn overlap_area(a: &PlacedRect, b: &PlacedRect) -> Scalar {
    let dx = interval_overlap(a.left(), a.right(), b.left(), b.right());
    if dx.is_zero() {
        return dx;
    }
    dx * interval_overlap(a.bottom(), a.top(), b.bottom(), b.top())
}

/// Area of `r` lying outside `[0, W] x [0, H]`.
pub fn outside_overlap(r: &PlacedRect, container: &Dims) -> Scalar {
    let zero = Scalar::zero();
    let inside = interval_overlap(r.left(), r.right(), &zero, container.w())
        * interval_overlap(r.bottom(), r.top(), &zero, container.h());
    r.area() - inside
}

/// Sum of all pairwise overlap areas plus the area each rectangle spends
/// outside the container. Zero exactly when the packing is feasible.
pub fn total_overlap(p: &Packing) -> Scalar {
    let rects = p.rects();
    let mut total: Scalar = rects.iter().map(|r| outside_overlap(r, p.container())).sum();
    for (k, a) in rects.iter().enumerate() {
        for b in &rects[k + 1..] {
            total = total + overlap_area(a, b);
        }
    }
    total
}

/// Sum of `x + y` over all placed rectangles.
pub fn total_coordinate(p: &Packing) -> Scalar {
    p.rects().iter().map(|r| r.left() + r.bottom()).sum()
}

/// Every rectangle inside the container and no two with positive-area overlap.
pub fn is_feasible(p: &Packing) -> bool {
    rects_feasible(p.container(), p.rects())
}

pub(crate) fn rects_feasible(container: &Dims, rects: &[PlacedRect]) -> bool {
    rects.iter().all(|r| r.inside(container))
        && rects
            .iter()
            .enumerate()
            .all(|(k, a)| rects[k + 1..].iter().all(|b| !a.overlaps(b)))
}
