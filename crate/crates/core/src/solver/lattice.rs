//! Brute-force decision procedure for integer instances.
//!
//! Works on the unit-cell grid of the container and knows nothing about
//! corners or stability. Cells are visited in row-major order; the first
//! undecided cell is either left empty or becomes the bottom-left cell of
//! some rectangle. Every integer packing is reached by exactly one path, so
//! the search is exhaustive over lattice positions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{Instance, Orientation, Packing, Placement, RectId};

/// Larger containers are refused.
pub const MAX_ORACLE_CELLS: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Sat(Packing),
    Unsat,
}

impl OracleVerdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, OracleVerdict::Sat(_))
    }
}

struct Kind {
    w: usize,
    h: usize,
    ids: Vec<RectId>,
}

struct Lattice {
    width: usize,
    height: usize,
    filled: Vec<bool>,
    kinds: Vec<Kind>,
    left: Vec<usize>,
    placements: Vec<(RectId, usize, usize, Orientation)>,
}

impl Lattice {
    fn fits(&self, x: usize, y: usize, w: usize, h: usize) -> bool {
        x + w <= self.width
            && y + h <= self.height
            && (y..y + h).all(|yy| (x..x + w).all(|xx| !self.filled[yy * self.width + xx]))
    }

    fn fill(&mut self, x: usize, y: usize, w: usize, h: usize, value: bool) {
        for yy in y..y + h {
            for xx in x..x + w {
                self.filled[yy * self.width + xx] = value;
            }
        }
    }

    fn search(&mut self, mut cursor: usize, waste: usize) -> bool {
        if self.left.iter().all(|&c| c == 0) {
            return true;
        }
        while cursor < self.filled.len() && self.filled[cursor] {
            cursor += 1;
        }
        if cursor == self.filled.len() {
            return false;
        }
        let (x, y) = (cursor % self.width, cursor / self.width);
        for k in 0..self.kinds.len() {
            if self.left[k] == 0 {
                continue;
            }
            let (w, h) = (self.kinds[k].w, self.kinds[k].h);
            for orientation in Orientation::BOTH {
                let (ew, eh) = match orientation {
                    Orientation::Horizontal => (w, h),
                    Orientation::Vertical if w == h => continue,
                    Orientation::Vertical => (h, w),
                };
                if !self.fits(x, y, ew, eh) {
                    continue;
                }
                self.fill(x, y, ew, eh, true);
                self.left[k] -= 1;
                let id = self.kinds[k].ids[self.left[k]];
                self.placements.push((id, x, y, orientation));
                if self.search(cursor + 1, waste) {
                    return true;
                }
                self.placements.pop();
                self.left[k] += 1;
                self.fill(x, y, ew, eh, false);
            }
        }
        if waste > 0 {
            self.filled[cursor] = true;
            let found = self.search(cursor + 1, waste - 1);
            self.filled[cursor] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// Exact verdict for an instance whose parameters are all integers.
pub fn oracle_lattice(instance: &Arc<Instance>) -> Result<OracleVerdict> {
    if !instance.is_integral() {
        return Err(Error::NonIntegerInstance);
    }
    let as_usize = |s: &crate::scalar::Scalar| s.to_i64().map(|v| v as usize);
    let container = instance.container();
    let (width, height) = match (as_usize(container.w()), as_usize(container.h())) {
        (Some(w), Some(h)) => (w, h),
        _ => return Err(Error::OracleTooLarge { cells: u128::MAX }),
    };
    let cells = width as u128 * height as u128;
    if cells > MAX_ORACLE_CELLS {
        return Err(Error::OracleTooLarge { cells });
    }

    let mut kinds: Vec<Kind> = Vec::new();
    let mut area: u128 = 0;
    for (id, d) in instance.ids().zip(instance.rects()) {
        let (w, h) = match (as_usize(d.w()), as_usize(d.h())) {
            (Some(w), Some(h)) => (w, h),
            _ => return Ok(OracleVerdict::Unsat),
        };
        area += w as u128 * h as u128;
        match kinds.iter_mut().find(|k| k.w == w && k.h == h) {
            Some(k) => k.ids.push(id),
            None => kinds.push(Kind { w, h, ids: vec![id] }),
        }
    }
    if area > cells {
        return Ok(OracleVerdict::Unsat);
    }
    // ids are handed out from the back of each group
    for k in &mut kinds {
        k.ids.reverse();
    }

    let left = kinds.iter().map(|k| k.ids.len()).collect();
    let mut lattice = Lattice {
        width,
        height,
        filled: vec![false; width * height],
        kinds,
        left,
        placements: Vec::new(),
    };
    if !lattice.search(0, (cells - area) as usize) {
        return Ok(OracleVerdict::Unsat);
    }
    let packing = Packing::from_placements(
        instance.clone(),
        lattice
            .placements
            .iter()
            .map(|&(id, x, y, o)| (id, Placement::new(x as i64, y as i64, o))),
    )?;
    Ok(OracleVerdict::Sat(packing))
}
