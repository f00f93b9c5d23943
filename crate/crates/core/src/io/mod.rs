//! File formats and rendering.

mod formats;
mod svg;

pub use formats::{
    instance_hash, parse_instance, parse_packing, parse_sequence, serialize_instance, serialize_packing,
    serialize_sequence, FormatError,
};
pub use svg::render_svg;
