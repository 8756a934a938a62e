//! Knots as braid closures, quandle colorings and cocycle state sums.

mod braid;
mod coloring;
mod ring;

pub use braid::{bundled_knots, bundled_presentations, parse_braid, BraidKnot, KNOT_TABLE};
pub use coloring::{
    check_translation_equality, count_colorings, end_monochromatic, enumerate_colorings,
    enumerate_colorings_capped, lift_coloring, propagate_colors, state_sum, tangle_colorings,
    Coloring, Crossing, Tangle, TangleColoring, DEFAULT_ENUMERATION_CAP,
};
pub use ring::GroupRingElt;
