//! Rectangle packing by bottom-left placement actions.
//!
//! Given a rectangular container and rotatable rectangles, decide whether
//! all rectangles fit without overlap, and if so produce a packing together
//! with a checkable certificate: a sequence of actions, each of which puts
//! one rectangle onto a bottom-left corner of the rectangles placed before
//! it. All arithmetic is exact over the rationals.
//!
//! ```
//! use std::sync::Arc;
//! use blpack::{solve_exact, replay, Dims, Instance, Outcome, SolveConfig};
//!
//! let instance = Arc::new(Instance::new(
//!     Dims::new(4, 3).unwrap(),
//!     vec![Dims::new(2, 3).unwrap(), Dims::new(2, 2).unwrap(), Dims::new(2, 1).unwrap()],
//! ));
//! let verdict = solve_exact(&instance, &SolveConfig::deterministic());
//! let Outcome::Sat { packing, sequence } = verdict.outcome else { panic!() };
//! assert_eq!(replay(&instance, &sequence).unwrap(), packing);
//! ```

pub mod corners;
pub mod error;
pub mod geometry;
pub mod io;
pub mod relations;
pub mod scalar;
pub mod sequencing;
pub mod solver;

pub use corners::{candidate_grid, enumerate_corners, Corner, Support};
pub use error::{Error, Result};
pub use geometry::{
    effective_dims, is_feasible, outside_overlap, overlap_area, total_coordinate, total_overlap, Dims, Instance,
    Orientation, Packing, PlacedRect, Placement, RectId,
};
pub use relations::{
    can_move_freely, interferes, is_bl_stable, is_bl_stable_rect, is_blocked, is_over, is_right_of, max_slide, settle,
    Direction,
};
pub use scalar::Scalar;
pub use sequencing::{
    escape_candidate, escape_walk, extract_sequence, extraction_order, replay, stabilize, EscapeWalk, PlacementAction,
    PlacementSequence,
};
pub use solver::{
    oracle_lattice, placement_action_bound, solve_exact, solve_greedy, GreedyError, LimitReason, OracleVerdict,
    Outcome, SolveConfig, SolveStats, Verdict,
};
