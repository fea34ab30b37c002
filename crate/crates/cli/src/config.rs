//! Flat `key = value` scenario configs.
//!
//! Unknown keys are rejected with the offending line number; constraint
//! violations are reported with the constraint spelled out. `#` starts a
//! comment anywhere on a line.

use spintel_core::{c64, CoreError, ModelParams, XState};
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid value: {0}")]
    Validation(String),
}

/// Initial state of the resource qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialState {
    Ket00,
    Ket01,
    Ket10,
    Ket11,
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
    /// Gibbs state at inverse temperature beta.
    Thermal,
    /// Explicit X state from the pop*/coh* keys.
    Explicit,
}

/// Sweepable quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Time,
    Field,
    FieldImbalance,
    SpinOrbit,
    Theta,
    Gamma,
}

impl Axis {
    pub fn parse(text: &str) -> Option<Axis> {
        match text {
            "t" => Some(Axis::Time),
            "B" => Some(Axis::Field),
            "b" => Some(Axis::FieldImbalance),
            "D" => Some(Axis::SpinOrbit),
            "theta" => Some(Axis::Theta),
            "gamma" => Some(Axis::Gamma),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Axis::Time => "t",
            Axis::Field => "B",
            Axis::FieldImbalance => "b",
            Axis::SpinOrbit => "D",
            Axis::Theta => "theta",
            Axis::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepAxis {
    pub axis: Axis,
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl SweepAxis {
    const MAX_POINTS: f64 = 10_000_000.0;

    /// Ascending grid start, start + step, ... capped at end (with a small
    /// relative slack against accumulated rounding).
    pub fn grid(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }

    fn validate(&self, label: &str) -> Result<(), ConfigError> {
        if !(self.start.is_finite() && self.end.is_finite() && self.step.is_finite()) {
            return Err(ConfigError::Validation(format!("{label} range not finite")));
        }
        if self.start >= self.end {
            return Err(ConfigError::Validation(format!(
                "{label} range must have start < end"
            )));
        }
        if self.step <= 0.0 {
            return Err(ConfigError::Validation(format!("{label} step must be > 0")));
        }
        if (self.end - self.start) / self.step > Self::MAX_POINTS {
            return Err(ConfigError::Validation(format!(
                "{label} grid exceeds {} points",
                Self::MAX_POINTS
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    None,
    T0,
    T1,
}

/// A fully described run: model, initial state, sweep grid, protocol.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams,
    pub initial: InitialState,
    /// Inverse temperature for the thermal initial state.
    pub beta: f64,
    /// Explicit X-state components for `initial = xstate`.
    pub explicit: ExplicitState,
    pub sweep: SweepAxis,
    pub sweep2: Option<SweepAxis>,
    /// Evaluate the channel at its fully dephased limit instead of a time.
    pub asymptotic: bool,
    /// Channel evolution time when t is not one of the sweep axes.
    pub time: f64,
    pub protocol: Protocol,
    /// Input-state polar angle for the protocols (theta sweep overrides).
    pub theta: f64,
    /// Input-state azimuthal angle.
    pub phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplicitState {
    pub pop_00: f64,
    pub pop_01: f64,
    pub pop_10: f64,
    pub pop_11: f64,
    pub coh_outer: (f64, f64),
    pub coh_inner: (f64, f64),
}

impl Default for Scenario {
    /// Documented defaults: the standard figure couplings (J = 1, chi = 0.9,
    /// Jz = 0.5, b = 1), gamma = 0.09, |00> initial state, t swept over
    /// [0, 50] in steps of 0.1, no protocol.
    fn default() -> Self {
        Scenario {
            name: "scenario".into(),
            params: ModelParams {
                xy_coupling: 1.0,
                anisotropy: 0.9,
                z_coupling: 0.5,
                field: 0.0,
                field_imbalance: 1.0,
                spin_orbit: 0.0,
                dephasing_rate: 0.09,
            },
            initial: InitialState::Ket00,
            beta: 1.0,
            explicit: ExplicitState {
                pop_00: 1.0,
                pop_01: 0.0,
                pop_10: 0.0,
                pop_11: 0.0,
                coh_outer: (0.0, 0.0),
                coh_inner: (0.0, 0.0),
            },
            sweep: SweepAxis {
                axis: Axis::Time,
                start: 0.0,
                end: 50.0,
                step: 0.1,
            },
            sweep2: None,
            asymptotic: false,
            time: 0.0,
            protocol: Protocol::None,
            theta: FRAC_PI_2,
            phi: 0.0,
        }
    }
}

impl Scenario {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.params.validate().map_err(reword_core)?;
        self.sweep.validate("sweep")?;
        if let Some(extra) = &self.sweep2 {
            extra.validate("sweep2")?;
            if extra.axis == self.sweep.axis {
                return Err(ConfigError::Validation(
                    "sweep2 axis duplicates sweep axis".into(),
                ));
            }
        }
        if self.asymptotic {
            if self.params.dephasing_rate <= 0.0 {
                return Err(ConfigError::Validation(
                    "asymptotic = true requires gamma > 0".into(),
                ));
            }
            let axes = [Some(self.sweep.axis), self.sweep2.map(|s| s.axis)];
            if axes.contains(&Some(Axis::Time)) {
                return Err(ConfigError::Validation(
                    "sweep axis t is incompatible with asymptotic = true".into(),
                ));
            }
        }
        if !(0.0..=PI).contains(&self.theta) {
            return Err(ConfigError::Validation("theta out of [0, pi]".into()));
        }
        if !(0.0..TAU).contains(&self.phi) {
            return Err(ConfigError::Validation("phi out of [0, 2*pi)".into()));
        }
        if !self.beta.is_finite() {
            return Err(ConfigError::Validation("beta must be finite".into()));
        }
        if !self.time.is_finite() || self.time < 0.0 {
            return Err(ConfigError::Validation("time must be >= 0".into()));
        }
        if self.initial == InitialState::Explicit {
            self.explicit_xstate().map_err(reword_core)?;
        }
        Ok(())
    }

    pub fn explicit_xstate(&self) -> Result<XState, CoreError> {
        let e = &self.explicit;
        XState::new(
            e.pop_00,
            e.pop_01,
            e.pop_10,
            e.pop_11,
            c64(e.coh_outer.0, e.coh_outer.1),
            c64(e.coh_inner.0, e.coh_inner.1),
        )
    }
}

fn reword_core(err: CoreError) -> ConfigError {
    match err {
        CoreError::InvalidParams(msg) | CoreError::InvalidState(msg) => {
            ConfigError::Validation(msg)
        }
        other => ConfigError::Validation(other.to_string()),
    }
}

/// Parses the documented key set and validates the result.
pub fn parse_config(text: &str) -> Result<Scenario, ConfigError> {
    let mut scenario = Scenario::default();
    let mut sweep2_axis: Option<Axis> = None;
    let mut sweep2_range = (0.0f64, 0.0f64, 0.0f64);
    let mut sweep2_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::Parse {
                line: line_no,
                message: "expected `key = value`".into(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let number = |value: &str| -> Result<f64, ConfigError> {
            value.parse::<f64>().map_err(|_| ConfigError::Parse {
                line: line_no,
                message: format!("`{value}` is not a number"),
            })
        };

        match key {
            "name" => scenario.name = value.to_string(),
            "J" => scenario.params.xy_coupling = number(value)?,
            "chi" => scenario.params.anisotropy = number(value)?,
            "Jz" => scenario.params.z_coupling = number(value)?,
            "B" => scenario.params.field = number(value)?,
            "b" => scenario.params.field_imbalance = number(value)?,
            "D" => scenario.params.spin_orbit = number(value)?,
            "gamma" => scenario.params.dephasing_rate = number(value)?,
            "beta" => scenario.beta = number(value)?,
            "time" => scenario.time = number(value)?,
            "theta" => scenario.theta = number(value)?,
            "phi" => scenario.phi = number(value)?,
            "initial" => {
                scenario.initial = match value {
                    "ket00" => InitialState::Ket00,
                    "ket01" => InitialState::Ket01,
                    "ket10" => InitialState::Ket10,
                    "ket11" => InitialState::Ket11,
                    "phi_plus" => InitialState::PhiPlus,
                    "phi_minus" => InitialState::PhiMinus,
                    "psi_plus" => InitialState::PsiPlus,
                    "psi_minus" => InitialState::PsiMinus,
                    "thermal" => InitialState::Thermal,
                    "xstate" => InitialState::Explicit,
                    _ => {
                        return Err(ConfigError::Parse {
                            line: line_no,
                            message: format!("unknown initial state `{value}`"),
                        })
                    }
                }
            }
            "protocol" => {
                scenario.protocol = match value {
                    "none" => Protocol::None,
                    "t0" => Protocol::T0,
                    "t1" => Protocol::T1,
                    _ => {
                        return Err(ConfigError::Parse {
                            line: line_no,
                            message: format!("unknown protocol `{value}`"),
                        })
                    }
                }
            }
            "asymptotic" => {
                scenario.asymptotic = match value {
                    "true" => true,
                    "false" => false,
                    _ => {
                        return Err(ConfigError::Parse {
                            line: line_no,
                            message: format!("`{value}` is not true/false"),
                        })
                    }
                }
            }
            "sweep" => {
                scenario.sweep.axis = Axis::parse(value).ok_or_else(|| ConfigError::Parse {
                    line: line_no,
                    message: format!("unknown sweep axis `{value}`"),
                })?
            }
            "sweep_start" => scenario.sweep.start = number(value)?,
            "sweep_end" => scenario.sweep.end = number(value)?,
            "sweep_step" => scenario.sweep.step = number(value)?,
            "sweep2" => {
                sweep2_axis = Some(Axis::parse(value).ok_or_else(|| ConfigError::Parse {
                    line: line_no,
                    message: format!("unknown sweep axis `{value}`"),
                })?);
                sweep2_seen = true;
            }
            "sweep2_start" => {
                sweep2_range.0 = number(value)?;
                sweep2_seen = true;
            }
            "sweep2_end" => {
                sweep2_range.1 = number(value)?;
                sweep2_seen = true;
            }
            "sweep2_step" => {
                sweep2_range.2 = number(value)?;
                sweep2_seen = true;
            }
            "pop00" => scenario.explicit.pop_00 = number(value)?,
            "pop01" => scenario.explicit.pop_01 = number(value)?,
            "pop10" => scenario.explicit.pop_10 = number(value)?,
            "pop11" => scenario.explicit.pop_11 = number(value)?,
            "coh_outer_re" => scenario.explicit.coh_outer.0 = number(value)?,
            "coh_outer_im" => scenario.explicit.coh_outer.1 = number(value)?,
            "coh_inner_re" => scenario.explicit.coh_inner.0 = number(value)?,
            "coh_inner_im" => scenario.explicit.coh_inner.1 = number(value)?,
            _ => {
                return Err(ConfigError::Parse {
                    line: line_no,
                    message: format!("unknown key `{key}`"),
                })
            }
        }
    }

    if sweep2_seen {
        let axis = sweep2_axis.ok_or_else(|| {
            ConfigError::Validation("sweep2 range given without a sweep2 axis".into())
        })?;
        scenario.sweep2 = Some(SweepAxis {
            axis,
            start: sweep2_range.0,
            end: sweep2_range.1,
            step: sweep2_range.2,
        });
    }

    scenario.validate()?;
    Ok(scenario)
}
