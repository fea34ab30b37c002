//! Scenario execution: grid evaluation through the library and CSV emission.
//!
//! Rows come out in ascending axis order and the arithmetic is fully
//! deterministic, so re-running a scenario reproduces its CSV byte for byte.

use crate::config::{Axis, InitialState, Protocol, Scenario, SweepAxis};
use spintel_core::{
    asymptotic_state, bell_probabilities, build_hamiltonian, closed_form_spectrum, max_fidelity_t0,
    negativity, numeric_spectrum, propagate_with_spectrum, t1_average_fidelity, t1_fidelity,
    t1_output_components, t1_output_negativity, thermal_state, Bell, CoreError, DensityMatrix4,
    ModelParams, Spectrum, T1Input,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("numeric failure: {0}")]
    Numeric(#[from] CoreError),
}

/// One evaluated grid point. Column groups are present according to the
/// protocol selector; absent groups emit empty CSV fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub axis1: f64,
    pub axis2: Option<f64>,
    /// Negativity of the channel state at this grid point.
    pub negativity: f64,
    pub t0: Option<T0Columns>,
    pub t1: Option<T1Columns>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T0Columns {
    pub probabilities: [f64; 4],
    pub max_fidelity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T1Columns {
    pub output_negativity: f64,
    pub fidelity: f64,
    pub average_fidelity: f64,
}

/// Applies one axis override to the evaluation point.
#[derive(Debug, Clone, Copy)]
struct GridPoint {
    params: ModelParams,
    time: f64,
    theta: f64,
}

impl GridPoint {
    fn apply(&mut self, axis: Axis, value: f64) {
        match axis {
            Axis::Time => self.time = value,
            Axis::Field => self.params.field = value,
            Axis::FieldImbalance => self.params.field_imbalance = value,
            Axis::SpinOrbit => self.params.spin_orbit = value,
            Axis::Theta => self.theta = value,
            Axis::Gamma => self.params.dephasing_rate = value,
        }
    }
}

fn initial_state(scenario: &Scenario, params: &ModelParams) -> Result<DensityMatrix4, CoreError> {
    Ok(match scenario.initial {
        InitialState::Ket00 => DensityMatrix4::basis_ket(0),
        InitialState::Ket01 => DensityMatrix4::basis_ket(1),
        InitialState::Ket10 => DensityMatrix4::basis_ket(2),
        InitialState::Ket11 => DensityMatrix4::basis_ket(3),
        InitialState::PhiPlus => Bell::PhiPlus.density(),
        InitialState::PhiMinus => Bell::PhiMinus.density(),
        InitialState::PsiPlus => Bell::PsiPlus.density(),
        InitialState::PsiMinus => Bell::PsiMinus.density(),
        InitialState::Thermal => thermal_state(params, scenario.beta)?,
        InitialState::Explicit => scenario.explicit_xstate()?.to_density(),
    })
}

/// Caches the spectrum across grid points; only param-axis changes
/// invalidate it. Values are identical with or without the cache since the
/// eigensolver is deterministic.
struct SpectrumCache {
    entry: Option<(ModelParams, Spectrum)>,
}

impl SpectrumCache {
    fn new() -> Self {
        SpectrumCache { entry: None }
    }

    fn get(&mut self, params: &ModelParams) -> &Spectrum {
        let stale = match &self.entry {
            Some((cached, _)) => cached != params,
            None => true,
        };
        if stale {
            let spectrum = numeric_spectrum(&build_hamiltonian(params));
            self.entry = Some((*params, spectrum));
        }
        &self.entry.as_ref().unwrap().1
    }
}

/// Runs the scenario and returns one row per grid point, outer axis first,
/// both axes ascending.
pub fn run_scenario(scenario: &Scenario) -> Result<Vec<SweepRow>, ScenarioError> {
    scenario
        .validate()
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;

    let outer = scenario.sweep.grid();
    let inner: Vec<Option<f64>> = match &scenario.sweep2 {
        Some(axis) => axis.grid().into_iter().map(Some).collect(),
        None => vec![None],
    };

    let mut cache = SpectrumCache::new();
    let mut rows = Vec::with_capacity(outer.len() * inner.len());
    for &v1 in &outer {
        for &v2 in &inner {
            let mut point = GridPoint {
                params: scenario.params,
                time: scenario.time,
                theta: scenario.theta,
            };
            point.apply(scenario.sweep.axis, v1);
            if let (Some(axis), Some(value)) = (&scenario.sweep2, v2) {
                point.apply(axis.axis, value);
            }

            let rho0 = initial_state(scenario, &point.params)?;
            let channel = if scenario.asymptotic {
                asymptotic_state(&rho0, &point.params)?
            } else {
                let spectrum = cache.get(&point.params);
                propagate_with_spectrum(&rho0, spectrum, point.params.dephasing_rate, point.time)
            };

            let t0 = match scenario.protocol {
                Protocol::T0 => Some(T0Columns {
                    probabilities: bell_probabilities(&channel).as_array(),
                    max_fidelity: max_fidelity_t0(&channel),
                }),
                _ => None,
            };
            let t1 = match scenario.protocol {
                Protocol::T1 => {
                    let input =
                        T1Input::new(point.theta, scenario.phi).map_err(ScenarioError::Numeric)?;
                    let components = t1_output_components(&channel, &input)?;
                    Some(T1Columns {
                        output_negativity: t1_output_negativity(&components),
                        fidelity: t1_fidelity(&channel, &input),
                        average_fidelity: t1_average_fidelity(&channel)?,
                    })
                }
                _ => None,
            };

            rows.push(SweepRow {
                axis1: v1,
                axis2: v2,
                negativity: negativity(&channel),
                t0,
                t1,
            });
        }
    }
    Ok(rows)
}

/// 12 significant digits, scientific notation; the CSV number format.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn empty() -> String {
    String::new()
}

/// CSV with the SweepRow column order: axis value(s), negativity, p0..p3,
/// phi_max, n_out, fidelity, avg_fidelity. Fields outside the protocol
/// selector stay empty. LF line endings, UTF-8.
pub fn render_csv(scenario: &Scenario, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(scenario.sweep.axis.name());
    if let Some(axis) = &scenario.sweep2 {
        out.push(',');
        out.push_str(axis.axis.name());
    }
    out.push_str(",negativity,p0,p1,p2,p3,phi_max,n_out,fidelity,avg_fidelity\n");

    for row in rows {
        let mut fields: Vec<String> = Vec::with_capacity(12);
        fields.push(fmt_sig(row.axis1));
        if let Some(v2) = row.axis2 {
            fields.push(fmt_sig(v2));
        }
        fields.push(fmt_sig(row.negativity));
        match &row.t0 {
            Some(t0) => {
                fields.extend(t0.probabilities.iter().map(|p| fmt_sig(*p)));
                fields.push(fmt_sig(t0.max_fidelity));
            }
            None => fields.extend((0..5).map(|_| empty())),
        }
        match &row.t1 {
            Some(t1) => {
                fields.push(fmt_sig(t1.output_negativity));
                fields.push(fmt_sig(t1.fidelity));
                fields.push(fmt_sig(t1.average_fidelity));
            }
            None => fields.extend((0..3).map(|_| empty())),
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Convenience: run and render in one go.
pub fn render_scenario_csv(scenario: &Scenario) -> Result<String, ScenarioError> {
    Ok(render_csv(scenario, &run_scenario(scenario)?))
}

/// Eigen-decomposition CSV for the scenario's parameters: closed form with
/// branch labels where it applies, numeric fallback otherwise.
pub fn render_spectrum_csv(scenario: &Scenario) -> Result<String, ScenarioError> {
    scenario
        .validate()
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (spectrum, labels): (Spectrum, [String; 4]) = match closed_form_spectrum(&scenario.params) {
        Ok(sp) => {
            let labels = [0, 1, 2, 3].map(|k| {
                sp.pairs()[k]
                    .branch
                    .map(|b| b.label().to_string())
                    .unwrap_or_else(|| "numeric".into())
            });
            (sp, labels)
        }
        Err(_) => {
            let sp = numeric_spectrum(&build_hamiltonian(&scenario.params));
            (sp, [0; 4].map(|_| "numeric".to_string()))
        }
    };

    let mut out = String::from(
        "index,branch,energy,v00_re,v00_im,v01_re,v01_im,v10_re,v10_im,v11_re,v11_im\n",
    );
    for (k, pair) in spectrum.pairs().iter().enumerate() {
        let mut fields = vec![format!("{k}"), labels[k].clone(), fmt_sig(pair.energy)];
        for comp in pair.state.components() {
            fields.push(fmt_sig(comp.re));
            fields.push(fmt_sig(comp.im));
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Density-matrix trajectory CSV: populations plus the six independent
/// upper-triangle coherences at each time on the grid. Uses the scenario's
/// t sweep when present, the default t grid otherwise.
pub fn render_evolution_csv(scenario: &Scenario) -> Result<String, ScenarioError> {
    scenario
        .validate()
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let times: Vec<f64> = if scenario.sweep.axis == Axis::Time {
        scenario.sweep.grid()
    } else if scenario
        .sweep2
        .as_ref()
        .is_some_and(|s| s.axis == Axis::Time)
    {
        scenario.sweep2.as_ref().unwrap().grid()
    } else {
        SweepAxis {
            axis: Axis::Time,
            start: 0.0,
            end: 50.0,
            step: 0.1,
        }
        .grid()
    };

    let rho0 = initial_state(scenario, &scenario.params)?;
    let spectrum = numeric_spectrum(&build_hamiltonian(&scenario.params));

    let mut out = String::from("t,pop00,pop01,pop10,pop11");
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    const LABELS: [&str; 4] = ["00", "01", "10", "11"];
    for (i, j) in PAIRS {
        out.push_str(&format!(
            ",re{}{},im{}{}",
            LABELS[i], LABELS[j], LABELS[i], LABELS[j]
        ));
    }
    out.push('\n');

    for &t in &times {
        let rho = propagate_with_spectrum(&rho0, &spectrum, scenario.params.dephasing_rate, t);
        let mut fields = vec![fmt_sig(t)];
        for k in 0..4 {
            fields.push(fmt_sig(rho.entry(k, k).re));
        }
        for (i, j) in PAIRS {
            fields.push(fmt_sig(rho.entry(i, j).re));
            fields.push(fmt_sig(rho.entry(i, j).im));
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    Ok(out)
}
