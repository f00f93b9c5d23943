use std::sync::Arc;

use crate::corners::corners_for;
use crate::geometry::{effective_dims, Instance, Orientation, Packing, RectId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GreedyError {
    #[error("order must list every rectangle exactly once, with one orientation per rectangle")]
    InvalidOrder,
    #[error("no bottom-left corner for rectangle {at}")]
    Stuck { at: RectId, partial: Packing },
}

/// Bottom-left heuristic: take rectangles in `order` and put each on its
/// lowest, then leftmost, bottom-left corner. Never backtracks.
///
/// `orientations[k]` is the orientation of rectangle `k + 1`.
pub fn solve_greedy(
    instance: &Arc<Instance>,
    order: &[RectId],
    orientations: &[Orientation],
) -> Result<Packing, GreedyError> {
    let n = instance.len();
    if order.len() != n || orientations.len() != n {
        return Err(GreedyError::InvalidOrder);
    }
    let mut seen = vec![false; n];
    for id in order {
        match id.0.checked_sub(1).and_then(|k| seen.get_mut(k)) {
            Some(slot) if !*slot => *slot = true,
            _ => return Err(GreedyError::InvalidOrder),
        }
    }

    let mut p = Packing::new(instance.clone());
    for &id in order {
        let orientation = orientations[id.0 - 1];
        let eff = effective_dims(&instance.rects()[id.0 - 1], orientation);
        let Some(first) = corners_for(instance.container(), p.rects(), &eff).into_iter().next() else {
            return Err(GreedyError::Stuck { at: id, partial: p });
        };
        p.place(id, first.placement(orientation))
            .expect("order was checked to be a permutation");
    }
    Ok(p)
}
