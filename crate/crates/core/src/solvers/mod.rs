//! Move-sequence producers: corner solutions, twin-tower sequences and the
//! general coupled solver.

pub mod apollonian;
pub mod closed_forms;
pub mod sequences;
pub mod single;
pub mod twin;

pub use apollonian::{factor_apollonian, lift_syllable, Orientation, Syllable, LIFT_TABLE};
pub use closed_forms::{closed_forms, ClosedForms};
pub use sequences::{corner_seq, sds_alt_seq, sds_seq, tts_alt_seq, tts_seq};
pub use single::{geodesic, transform_single, transform_single_with, Backend};
pub use twin::{adjust_coset, solve_basic, solve_compatible, SolvePlan};
