//! Kahan-Babuska (Neumaier) compensated summation.

use std::ops::AddAssign;

/// Compensated accumulator. The correction term also captures the case
/// where the addend is larger in magnitude than the running sum, which
/// matters for the alternating binomial series used throughout.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for KahanSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl From<KahanSum> for f64 {
    fn from(acc: KahanSum) -> Self {
        acc.value()
    }
}
