//! Pure states, density operators and generalized W-class states.

mod bipartition;
mod density;
mod io;
mod pure;
mod wclass;

pub use bipartition::Bipartition;
pub use density::DensityOperator;
pub use io::{format_state, load_state, parse_state, save_state};
pub use pure::PureState;
pub use wclass::{make_wclass, sample_wclass, WClassParams};
