//! Closed-form Riemann-Liouville principal value for multivariate power
//! functions, the oracle every GL convergence test is measured against.

use crate::error::{Error, Result};
use crate::special::log_gamma;

/// Exponent vector p_1..p_n of a separable power function.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerExponents(Vec<f64>);

impl PowerExponents {
    pub fn new(exponents: Vec<f64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidProblem("at least one exponent required".into()));
        }
        if exponents.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidProblem(format!(
                "exponents must be finite, got {exponents:?}"
            )));
        }
        Ok(Self(exponents))
    }

    pub fn axis_count(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[f64] {
        &self.0
    }
}

/// One axis factor Gamma(p+1)/Gamma(p-r+1) x^{p-r}, in log space with sign
/// tracking. A Gamma pole in the denominator (p - r a negative integer)
/// makes the factor exactly zero, matching the classical derivative of a
/// lower-degree monomial.
fn axis_value(p: f64, r: f64, x: f64) -> Result<f64> {
    if p <= -1.0 {
        return Err(Error::InvalidProblem(format!(
            "power-function exponent must exceed -1, got {p}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::InvalidProblem(format!(
            "evaluation point must be positive, got {x}"
        )));
    }
    let denominator = p - r + 1.0;
    if denominator <= 0.0 && denominator == denominator.round() {
        return Ok(0.0);
    }
    let num = log_gamma(p + 1.0)?;
    let den = log_gamma(denominator)?;
    let ln = num.ln_abs - den.ln_abs + (p - r) * x.ln();
    Ok(num.sign * den.sign * ln.exp())
}

/// The multivariate RL principal value
/// `prod_i Gamma(p_i+1)/Gamma(p_i-r_i+1) x_i^{p_i-r_i}`.
pub fn rl_power_value(p: &PowerExponents, r: &[f64], x: &[f64]) -> Result<f64> {
    let n = p.axis_count();
    if r.len() != n || x.len() != n {
        return Err(Error::AxisMismatch {
            left: n,
            right: r.len().max(x.len()),
        });
    }
    let mut product = 1.0;
    for axis in 0..n {
        product *= axis_value(p.exponents()[axis], r[axis], x[axis])?;
    }
    Ok(product)
}
