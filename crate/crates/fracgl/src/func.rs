//! Sampled functions: an evaluation callback plus a declared valid domain.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// A function R^n -> R with per-axis lower bounds. Evaluation outside the
/// declared domain is an error, never a silent NaN.
pub struct SampledFn {
    axes: usize,
    lower: Vec<f64>,
    eval: Box<dyn Fn(&[f64]) -> Result<f64> + Send + Sync>,
}

impl SampledFn {
    /// Wraps a plain callback with explicit per-axis lower bounds
    /// (use `f64::NEG_INFINITY` for unbounded axes).
    pub fn new(
        lower: Vec<f64>,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            axes: lower.len(),
            lower,
            eval: Box::new(move |x| Ok(f(x))),
        }
    }

    /// A callback valid on all of R^n.
    pub fn unbounded(axes: usize, f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(vec![f64::NEG_INFINITY; axes], f)
    }

    /// The separable power function `prod x_i^{p_i}`.
    ///
    /// Axes with a non-integer exponent declare the domain [0, inf); integer
    /// exponents are valid on all reals. At zero, 0^p = 0 for p > 0, 1 for
    /// p = 0, and an error for p < 0.
    pub fn power(exponents: &[f64]) -> Self {
        let p = exponents.to_vec();
        let lower = p
            .iter()
            .map(|&e| if e == e.round() { f64::NEG_INFINITY } else { 0.0 })
            .collect();
        Self {
            axes: p.len(),
            lower,
            eval: Box::new(move |x| {
                let mut prod = 1.0;
                for (&base, &e) in x.iter().zip(&p) {
                    prod *= checked_pow(base, e)?;
                }
                Ok(prod)
            }),
        }
    }

    /// The univariate power sum `sum_j coeffs[j] * t^j`.
    pub fn power_sum(coeffs: &[f64]) -> Self {
        let c = coeffs.to_vec();
        Self {
            axes: 1,
            lower: vec![f64::NEG_INFINITY],
            eval: Box::new(move |x| {
                let t = x[0];
                let mut acc = KahanSum::new();
                for (j, &cj) in c.iter().enumerate() {
                    if cj != 0.0 {
                        acc += cj * t.powi(j as i32);
                    }
                }
                Ok(acc.value())
            }),
        }
    }

    pub fn axis_count(&self) -> usize {
        self.axes
    }

    pub fn lower_bounds(&self) -> &[f64] {
        &self.lower
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.axes {
            return Err(Error::AxisMismatch {
                left: self.axes,
                right: x.len(),
            });
        }
        for (axis, (&v, &bound)) in x.iter().zip(&self.lower).enumerate() {
            if v < bound {
                return Err(Error::OutOfDomain {
                    axis,
                    value: v,
                    bound,
                });
            }
        }
        let value = (self.eval)(x)?;
        if !value.is_finite() {
            return Err(Error::NonFinite { point: x.to_vec() });
        }
        Ok(value)
    }
}

impl std::fmt::Debug for SampledFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SampledFn")
            .field("axes", &self.axes)
            .field("lower", &self.lower)
            .finish()
    }
}

/// base^p with explicit rules at zero and a domain error for a negative base
/// under a non-integer exponent.
pub(crate) fn checked_pow(base: f64, p: f64) -> Result<f64> {
    if base == 0.0 {
        return if p > 0.0 {
            Ok(0.0)
        } else if p == 0.0 {
            Ok(1.0)
        } else {
            Err(Error::Pole {
                function: "power (zero base, negative exponent)",
                argument: p,
            })
        };
    }
    if base < 0.0 && p != p.round() {
        return Err(Error::OutOfDomain {
            axis: 0,
            value: base,
            bound: 0.0,
        });
    }
    Ok(base.powf(p))
}
