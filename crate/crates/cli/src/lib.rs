//! Scenario configs, bundled presets, and CSV-emitting sweep execution for
//! the `spintel` binary.

pub mod config;
pub mod presets;
pub mod scenario;

pub use config::{parse_config, Axis, ConfigError, InitialState, Protocol, Scenario, SweepAxis};
pub use presets::{load_preset, preset_names, preset_text};
pub use scenario::{
    render_csv, render_evolution_csv, render_scenario_csv, render_spectrum_csv, run_scenario,
    ScenarioError, SweepRow, T0Columns, T1Columns,
};
