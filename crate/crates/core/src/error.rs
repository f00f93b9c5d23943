use crate::geometry::RectId;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimensions must be strictly positive, got {w} x {h}")]
    NonPositiveDims { w: Scalar, h: Scalar },

    #[error("rectangle {0} is not part of the instance")]
    UnknownRect(RectId),

    #[error("rectangle {0} is placed more than once")]
    DuplicateRect(RectId),

    #[error("rectangle {0} is not placed in the packing")]
    NotPlaced(RectId),

    #[error("packing is not feasible")]
    Infeasible,

    #[error("packing is feasible but not bottom-left stable (rectangle {0} can slide)")]
    NotStable(RectId),

    #[error("packing is empty")]
    EmptyPacking,

    #[error("action {index} places rectangle {id} at ({x}, {y}), which is not a bottom-left corner")]
    ActionNotACorner {
        index: usize,
        id: RectId,
        x: Scalar,
        y: Scalar,
    },

    #[error("order must be a permutation of the instance ids")]
    InvalidOrder,

    #[error("instance has non-integer parameters; the lattice oracle needs integers")]
    NonIntegerInstance,

    #[error("instance is too large for the lattice oracle ({cells} cells)")]
    OracleTooLarge { cells: u128 },

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
