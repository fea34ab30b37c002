//! Bundled scenario presets, one per published figure panel. The files under
//! `presets/` are the source of truth; they are embedded at compile time so
//! `--preset` works from any working directory.

use crate::config::{parse_config, ConfigError, Scenario};

pub const PRESETS: &[(&str, &str)] = &[
    ("fig1-left", include_str!("../../../presets/fig1-left.conf")),
    (
        "fig1-right",
        include_str!("../../../presets/fig1-right.conf"),
    ),
    ("fig2-left", include_str!("../../../presets/fig2-left.conf")),
    (
        "fig2-right",
        include_str!("../../../presets/fig2-right.conf"),
    ),
    ("fig3-left", include_str!("../../../presets/fig3-left.conf")),
    (
        "fig3-right",
        include_str!("../../../presets/fig3-right.conf"),
    ),
    ("fig4-left", include_str!("../../../presets/fig4-left.conf")),
    (
        "fig4-right",
        include_str!("../../../presets/fig4-right.conf"),
    ),
    ("fig5", include_str!("../../../presets/fig5.conf")),
    ("fig6", include_str!("../../../presets/fig6.conf")),
];

pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|(name, _)| *name).collect()
}

pub fn preset_text(name: &str) -> Option<&'static str> {
    PRESETS
        .iter()
        .find(|(preset, _)| *preset == name)
        .map(|(_, text)| *text)
}

pub fn load_preset(name: &str) -> Result<Scenario, ConfigError> {
    let text = preset_text(name).ok_or_else(|| {
        ConfigError::Validation(format!(
            "unknown preset `{name}` (available: {})",
            preset_names().join(", ")
        ))
    })?;
    parse_config(text)
}
