//! Grunwald-Letnikov evaluation: univariate and multivariate truncated
//! binomial-weight sums, free (N, h) truncations or the linked step
//! h_i = q_i x_i / N_i.

use crate::error::{Error, Result};
use crate::func::{checked_pow, SampledFn};
use crate::kahan::KahanSum;
use crate::rl::PowerExponents;

/// Default cap on the number of terms in the multivariate summation box.
pub const DEFAULT_TERM_CAP: u64 = 100_000_000;

/// How the per-axis steps are chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum StepRule {
    /// h_i = q_i x_i / N_i with q_i in (0, 1].
    Linked(Vec<f64>),
    /// Explicit positive steps.
    Explicit(Vec<f64>),
}

/// Truncation parameters for a GL evaluation: the point x, the orders r,
/// the per-axis term counts N, and the step rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GlScheme {
    x: Vec<f64>,
    orders: Vec<f64>,
    counts: Vec<u64>,
    rule: StepRule,
    term_cap: u64,
}

impl GlScheme {
    /// Scheme with the linkage h_i = q_i x_i / N_i. Requires q_i in (0, 1]
    /// and x_i > 0.
    pub fn linked(x: Vec<f64>, orders: Vec<f64>, counts: Vec<u64>, q: Vec<f64>) -> Result<Self> {
        let scheme = Self {
            x,
            orders,
            counts,
            rule: StepRule::Linked(q),
            term_cap: DEFAULT_TERM_CAP,
        };
        scheme.validate()?;
        Ok(scheme)
    }

    /// Scheme with explicit positive steps h_i.
    pub fn explicit(x: Vec<f64>, orders: Vec<f64>, counts: Vec<u64>, h: Vec<f64>) -> Result<Self> {
        let scheme = Self {
            x,
            orders,
            counts,
            rule: StepRule::Explicit(h),
            term_cap: DEFAULT_TERM_CAP,
        };
        scheme.validate()?;
        Ok(scheme)
    }

    /// Overrides the cap on the multivariate box size.
    pub fn with_term_cap(mut self, cap: u64) -> Self {
        self.term_cap = cap;
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.x.len();
        if n == 0 {
            return Err(Error::InvalidScheme("at least one axis required".into()));
        }
        let rule_len = match &self.rule {
            StepRule::Linked(q) => q.len(),
            StepRule::Explicit(h) => h.len(),
        };
        if self.orders.len() != n || self.counts.len() != n || rule_len != n {
            return Err(Error::InvalidScheme(format!(
                "length mismatch: x has {n} axes, orders {}, N {}, steps {rule_len}",
                self.orders.len(),
                self.counts.len()
            )));
        }
        if self.x.iter().any(|v| !v.is_finite()) || self.orders.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidScheme("non-finite parameter".into()));
        }
        if self.counts.iter().any(|&n| n == 0) {
            return Err(Error::InvalidScheme("every N_i must be positive".into()));
        }
        match &self.rule {
            StepRule::Linked(q) => {
                if q.iter().any(|&qi| !(qi > 0.0 && qi <= 1.0)) {
                    return Err(Error::InvalidScheme(format!(
                        "linkage requires q_i in (0, 1], got {q:?}"
                    )));
                }
                if self.x.iter().any(|&xi| !(xi > 0.0)) {
                    return Err(Error::InvalidScheme(format!(
                        "linkage requires x_i > 0, got {:?}",
                        self.x
                    )));
                }
            }
            StepRule::Explicit(h) => {
                if h.iter().any(|&hi| !(hi > 0.0 && hi.is_finite())) {
                    return Err(Error::InvalidScheme(format!(
                        "steps must be positive, got {h:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn axis_count(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn orders(&self) -> &[f64] {
        &self.orders
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn rule(&self) -> &StepRule {
        &self.rule
    }

    pub fn term_cap(&self) -> u64 {
        self.term_cap
    }

    /// The concrete per-axis steps (derived for linked schemes).
    pub fn steps(&self) -> Vec<f64> {
        match &self.rule {
            StepRule::Linked(q) => self
                .x
                .iter()
                .zip(q)
                .zip(&self.counts)
                .map(|((&x, &q), &n)| q * x / n as f64)
                .collect(),
            StepRule::Explicit(h) => h.clone(),
        }
    }

    /// Sample abscissa x_i - k h_i. Linked schemes form it as
    /// x_i (1 - q_i k / N_i), which lands exactly on zero at k = N_i when
    /// q_i = 1 instead of a rounding-noise negative.
    fn abscissa(&self, axis: usize, k: u64) -> f64 {
        match &self.rule {
            StepRule::Linked(q) => {
                self.x[axis] * (1.0 - q[axis] * (k as f64 / self.counts[axis] as f64))
            }
            StepRule::Explicit(h) => self.x[axis] - k as f64 * h[axis],
        }
    }
}

/// Signed weights (-1)^k C(r, k) for k = 0..=n, by the product recurrence.
pub(crate) fn signed_weights(r: f64, n: u64) -> Vec<f64> {
    let mut weights = Vec::with_capacity(n as usize + 1);
    let mut w = 1.0;
    for k in 0..=n {
        weights.push(w);
        w *= (k as f64 - r) / (k as f64 + 1.0);
    }
    weights
}

/// Univariate GL value: h^{-r} sum_{k=0}^{N} (-1)^k C(r,k) f(x - k h),
/// with compensated accumulation and O(N) weight generation.
pub fn gl_univariate(f: &SampledFn, scheme: &GlScheme) -> Result<f64> {
    if scheme.axis_count() != 1 {
        return Err(Error::InvalidScheme(format!(
            "gl_univariate needs a single axis, got {}",
            scheme.axis_count()
        )));
    }
    if f.axis_count() != 1 {
        return Err(Error::AxisMismatch {
            left: 1,
            right: f.axis_count(),
        });
    }
    let r = scheme.orders()[0];
    let n = scheme.counts()[0];
    let h = scheme.steps()[0];
    let mut acc = KahanSum::new();
    let mut w = 1.0;
    for k in 0..=n {
        if w != 0.0 {
            acc += w * f.eval(&[scheme.abscissa(0, k)])?;
        }
        w *= (k as f64 - r) / (k as f64 + 1.0);
    }
    Ok(h.powf(-r) * acc.value())
}

/// Multivariate GL value: the truncated box sum
/// prod h_i^{-r_i} * sum_{k in [0,N_1]x...x[0,N_n]} prod_i (-1)^{k_i} C(r_i,k_i) f(x - k o h),
/// iterated in lexicographic order with per-axis weight caching and
/// compensated accumulation.
pub fn gl_multivariate(f: &SampledFn, scheme: &GlScheme) -> Result<f64> {
    let n = scheme.axis_count();
    if f.axis_count() != n {
        return Err(Error::AxisMismatch {
            left: n,
            right: f.axis_count(),
        });
    }
    let mut box_terms: u128 = 1;
    for &c in scheme.counts() {
        box_terms = box_terms.saturating_mul(c as u128 + 1);
    }
    if box_terms > scheme.term_cap() as u128 {
        return Err(Error::BoxTooLarge {
            terms: box_terms,
            cap: scheme.term_cap(),
        });
    }

    let weights: Vec<Vec<f64>> = scheme
        .orders()
        .iter()
        .zip(scheme.counts())
        .map(|(&r, &c)| signed_weights(r, c))
        .collect();

    let mut acc = KahanSum::new();
    let mut index = vec![0u64; n];
    let mut point = vec![0.0; n];
    loop {
        let mut weight = 1.0;
        for axis in 0..n {
            weight *= weights[axis][index[axis] as usize];
        }
        if weight != 0.0 {
            for axis in 0..n {
                point[axis] = scheme.abscissa(axis, index[axis]);
            }
            acc += weight * f.eval(&point)?;
        }
        // lexicographic odometer, last axis fastest
        let mut axis = n;
        loop {
            if axis == 0 {
                let prefactor: f64 = scheme
                    .orders()
                    .iter()
                    .zip(scheme.steps())
                    .map(|(&r, h)| h.powf(-r))
                    .product();
                return Ok(prefactor * acc.value());
            }
            axis -= 1;
            if index[axis] < scheme.counts()[axis] {
                index[axis] += 1;
                break;
            }
            index[axis] = 0;
        }
    }
}

/// GL value of the separable power function `prod x_i^{p_i}`, computed as
/// the product of per-axis univariate sums. Cost O(sum N_i) instead of
/// O(prod N_i).
pub fn gl_factorized(p: &PowerExponents, scheme: &GlScheme) -> Result<f64> {
    let n = scheme.axis_count();
    if p.axis_count() != n {
        return Err(Error::AxisMismatch {
            left: n,
            right: p.axis_count(),
        });
    }
    let mut product = 1.0;
    for axis in 0..n {
        let r = scheme.orders()[axis];
        let exponent = p.exponents()[axis];
        let h = scheme.steps()[axis];
        let mut acc = KahanSum::new();
        let mut w = 1.0;
        for k in 0..=scheme.counts()[axis] {
            if w != 0.0 {
                let t = scheme.abscissa(axis, k);
                let sample = checked_pow(t, exponent).map_err(|e| match e {
                    Error::OutOfDomain { value, bound, .. } => {
                        Error::OutOfDomain { axis, value, bound }
                    }
                    other => other,
                })?;
                acc += w * sample;
            }
            w *= (k as f64 - r) / (k as f64 + 1.0);
        }
        let factor = h.powf(-r) * acc.value();
        if !factor.is_finite() {
            return Err(Error::NonFinite {
                point: vec![scheme.x()[axis]],
            });
        }
        product *= factor;
    }
    Ok(product)
}
