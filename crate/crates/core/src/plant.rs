//! Second-order LTI actuator-joint plant with additive polynomial disturbance,
//! advanced by exact zero-order-hold discretization, plus the IMU-like
//! measurement model used by the run harness.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Transfer-function coefficients of one joint: g0 / (s^2 + g1 s + g2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gammas {
    /// Input gain, rad / (s^2 * PWM%).
    pub gamma0: f64,
    /// Damping coefficient, 1/s.
    pub gamma1: f64,
    /// Stiffness coefficient, 1/s^2.
    pub gamma2: f64,
}

impl Gammas {
    pub fn new(gamma0: f64, gamma1: f64, gamma2: f64) -> Result<Self> {
        if !(gamma0 > 0.0 && gamma1 >= 0.0 && gamma2 > 0.0) {
            return Err(Error::Config(format!(
                "require gamma0 > 0, gamma1 >= 0, gamma2 > 0; got ({gamma0}, {gamma1}, {gamma2})"
            )));
        }
        Ok(Self { gamma0, gamma1, gamma2 })
    }
}

/// Steady-state angle per unit PWM%, gamma0 / gamma2.
pub fn dc_gain(gammas: &Gammas) -> Result<f64> {
    if gammas.gamma2 == 0.0 {
        return Err(Error::Domain("dc gain undefined for gamma2 = 0".into()));
    }
    Ok(gammas.gamma0 / gammas.gamma2)
}

/// Disturbance polynomial rho(t) = sum coefficients[j] * t^j, rad/s^2.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DisturbancePoly {
    pub coefficients: Vec<f64>,
}

impl DisturbancePoly {
    pub fn constant(c: f64) -> Self {
        Self { coefficients: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }
}

/// One actuator-joint DoF modeled as a damped second-order system with state
/// (theta, theta_dot).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderPlant {
    pub gammas: Gammas,
    pub theta: f64,
    pub theta_dot: f64,
}

impl SecondOrderPlant {
    pub fn new(gammas: Gammas) -> Self {
        Self { gammas, theta: 0.0, theta_dot: 0.0 }
    }

    pub fn with_state(gammas: Gammas, theta: f64, theta_dot: f64) -> Self {
        Self { gammas, theta, theta_dot }
    }
}

/// Identified coefficients of the two shoulder joints.
pub fn default_plants() -> (SecondOrderPlant, SecondOrderPlant) {
    (
        SecondOrderPlant::new(joint1_gammas()),
        SecondOrderPlant::new(joint2_gammas()),
    )
}

/// Abduction/adduction joint coefficients.
pub fn joint1_gammas() -> Gammas {
    Gammas { gamma0: 0.0005725, gamma1: 0.05725, gamma2: 0.044 }
}

/// Flexion/extension joint coefficients.
pub fn joint2_gammas() -> Gammas {
    Gammas { gamma0: 0.0003665, gamma1: 0.213, gamma2: 0.04079 }
}

// cos/cosh and sin/sinh-over-argument of sqrt(|z|), selected by the sign of z.
// The two branches share the same Taylor series around z = 0.
fn cs(z: f64) -> (f64, f64) {
    if z.abs() < 1e-8 {
        (1.0 + z / 2.0 + z * z / 24.0, 1.0 + z / 6.0 + z * z / 120.0)
    } else if z < 0.0 {
        let x = (-z).sqrt();
        (x.cos(), x.sin() / x)
    } else {
        let x = z.sqrt();
        (x.cosh(), x.sinh() / x)
    }
}

/// Advance the plant state over one interval with input and disturbance held
/// constant: theta_dd = gamma0 u - gamma1 theta_d - gamma2 theta + rho(t).
///
/// Uses the closed-form state-transition matrix of the damped oscillator, so
/// the update is exact for piecewise-constant forcing at any step size.
pub fn plant_step(plant: &mut SecondOrderPlant, u: f64, dist: &DisturbancePoly, t: f64, dt: f64) {
    let g = plant.gammas;
    let alpha = g.gamma1 / 2.0;
    let z = (alpha * alpha - g.gamma2) * dt * dt;
    let (c, s) = cs(z);
    let e = (-alpha * dt).exp();
    let p11 = e * (c + alpha * dt * s);
    let p12 = e * dt * s;
    let p21 = -g.gamma2 * dt * s * e;
    let p22 = e * (c - alpha * dt * s);
    // forcing held at interval start
    let w = g.gamma0 * u + dist.eval(t);
    let f1 = (1.0 - p22 - g.gamma1 * p12) / g.gamma2;
    let f2 = p12;
    let theta = p11 * plant.theta + p12 * plant.theta_dot + f1 * w;
    let theta_dot = p21 * plant.theta + p22 * plant.theta_dot + f2 * w;
    plant.theta = theta;
    plant.theta_dot = theta_dot;
}

/// Measurement-noise configuration standing in for the IMU.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SensorModel {
    /// Additive Gaussian noise standard deviation, radians.
    #[serde(default)]
    pub noise_std: f64,
    /// Quantization step, radians; 0 disables quantization.
    #[serde(default)]
    pub quantization_step: f64,
    #[serde(default)]
    pub seed: u64,
}

impl Default for SensorModel {
    fn default() -> Self {
        Self { noise_std: 0.0, quantization_step: 0.0, seed: 0 }
    }
}

impl SensorModel {
    /// Noise profile used for robustness runs.
    pub fn noisy(seed: u64) -> Self {
        Self { noise_std: 0.002, quantization_step: 0.0, seed }
    }
}

/// Stateful sensor: deterministic noise stream for a fixed (seed, stream).
pub struct Sensor {
    model: SensorModel,
    noise: Normal<f64>,
    rng: ChaCha8Rng,
}

impl Sensor {
    pub fn new(model: SensorModel) -> Self {
        Self::with_stream(model, 0)
    }

    /// Separate stream index gives independent noise per joint from one seed.
    pub fn with_stream(model: SensorModel, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
        rng.set_stream(stream);
        let noise = Normal::new(0.0, model.noise_std).expect("noise_std must be >= 0");
        Self { model, noise, rng }
    }

    /// Measured angle: theta plus Gaussian noise, then quantized.
    pub fn measure(&mut self, theta: f64) -> f64 {
        let mut v = theta;
        if self.model.noise_std > 0.0 {
            v += self.noise.sample(&mut self.rng);
        }
        if self.model.quantization_step > 0.0 {
            v = (v / self.model.quantization_step).round() * self.model.quantization_step;
        }
        v
    }
}
