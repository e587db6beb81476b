//! Box-ball systems: states, the carrier, time evolution, and reductions.
//!
//! Standard, advanced and generalized systems share one [`State`] type. A
//! standard state has capacity one everywhere and distinct colors; an
//! advanced state allows repeated colors; a generalized state has arbitrary
//! box capacities.
//!
//! Labels and slots are `i64`. A step moves every ball right by at most the
//! number of balls, so overflow needs labels near `i64::MAX`.

mod carrier;
mod reduce;
mod state;
mod step;

pub use carrier::{carrier_pass, carrier_trace, format_load, Carrier, PassStep};
pub use reduce::{
    reduce_advanced_to_standard, reduce_generalized_to_advanced, ColorMap, SlotLabels,
};
pub use state::{biword_to_state, state_to_biword, window, CapacityProfile, SlotCell, State};
pub use step::{
    box_label_carrier, box_label_step, carrier_step, evolve, original_step, q_evolve, reverse_step,
    step, Algorithm,
};

pub(crate) use carrier::format_letter;
