//! Pattern statistics on permutations: quadrant marked mesh patterns,
//! classical and consecutive occurrences, and the bivincular pattern counted
//! by the Fishburn numbers.

mod consecutive;
mod fishburn;
mod mesh;

pub use consecutive::{
    consecutive_avoiders, extract_u, lrmin_des_series, occurrences, ConsecutivePattern, Mode,
};
pub use fishburn::{
    fishburn_avoiders, fishburn_census, fishburn_occurrences, leftmost_run, max_value_run, reference_gf,
    FishburnCensus, FishburnGf, RunBoundary,
};
pub use mesh::{
    alternating_mmp_closed_form, alternating_mmp_series, mmp_match, mmp_statistic, MarkedMeshPattern, Parity,
};
