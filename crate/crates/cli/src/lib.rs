//! Experiment runner for the `ergoloss` toolkit: figure presets, parameter
//! sweeps written as CSV, and JSON verification reports.

pub mod config;
pub mod presets;
pub mod sweep;
pub mod verify;

pub use config::{ConfigError, SweepAxis, SweepConfig, TimeGrid};
pub use presets::{Preset, PresetRun};
pub use sweep::{run_dynamics, run_uncertainty, SweepError, SweepResult};
