//! Witness-length bound tables and bounded-horizon deciders.
//!
//! The bound tables in [`bounds`] turn instance parameters into explicit run
//! length budgets for covering, uniform covering, and self-covering searches.
//! The deciders in this crate consume those budgets: each one explores runs up
//! to a caller-supplied cap and reports either a certified witness, a certified
//! negative (the search saturated), or an honest "cap reached" when neither
//! could be established within the horizon.

mod bounded;
mod bounds;
mod cover;
mod error;
mod ilp;
mod nopump;

pub use bounded::{decide_boundedness, BoundednessReport, BoundednessVerdict, SelfCoveringWitness};
pub use bounds::{
    bounds, bounds_with_ceiling, zrun_length_bound, BoundParams, BoundTable, DEFAULT_CEILING_BITS,
};
pub use cover::{
    decide_coverability, decide_uniform_cover, CoverReport, CoverVerdict, CoverWitness,
};
pub use error::SearchError;
pub use ilp::base_case_unbounded_ilp;
pub use nopump::{check_no_pump_property, check_no_pump_with_horizon, PumpReport, PumpVerdict};

use vasskit_core::{Configuration, Vass};

/// Shared input validation: the configuration must name a real state and carry
/// one value per counter.
pub(crate) fn validate_config(vass: &Vass, c: &Configuration) -> Result<(), SearchError> {
    if c.state >= vass.states.len() {
        return Err(SearchError::NoSuchState {
            state: c.state,
            len: vass.states.len(),
        });
    }
    if c.values.len() != vass.dim {
        return Err(SearchError::DimensionMismatch {
            got: c.values.len(),
            want: vass.dim,
        });
    }
    Ok(())
}
