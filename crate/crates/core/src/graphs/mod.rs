//! The Hanoi graph `Γ_n` and the coupled graph `CΓ_n`, searched implicitly.

pub mod cache;
pub mod components;
pub mod dot;
pub mod search;
pub mod state;

pub use cache::CacheDir;
pub use components::{components, components_with, ComponentEntry, ComponentReport};
pub use dot::export_dot;
pub use search::{bfs, count_geodesics, diameter, distance, distance_coupled, distance_single, DistanceField, Target, UNREACHED};
pub use state::{neighbors, Component, Kind, Level, StateCode};
