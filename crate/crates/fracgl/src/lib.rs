//! Numerical fractional calculus built around the multivariate
//! Grunwald-Letnikov derivative.
//!
//! The crate has five layers, from exact to numeric:
//!
//! - [`ring`]: the commutative ring of lattice translation operators with
//!   exact rational coefficients, where difference-quotient expansions are
//!   verified symbolically.
//! - [`special`]: log-gamma, real-argument binomial coefficients, the
//!   reflection factor, and the Gauss hypergeometric function 2F1.
//! - [`gl`]: truncated Grunwald-Letnikov sums, univariate and multivariate,
//!   with free steps or the linkage h_i = q_i x_i / N_i.
//! - [`rl`]: the closed-form Riemann-Liouville principal value for power
//!   functions, the oracle for every convergence study.
//! - [`chareq`]: the characteristic equation tying the linkage parameter q
//!   to the principal value, root search over q, and convergence reports.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `univariate_gl`:
//!
//! ```bash
//! cargo run --example univariate_gl
//! ```

pub mod chareq;
pub mod error;
pub mod func;
pub mod gl;
pub mod kahan;
pub mod rl;
pub mod ring;
pub mod special;

pub use chareq::{
    axis_residual, char_lhs_univariate, char_residual, char_rhs_univariate, solve_q,
    verify_gl_rl_linkage, CharEqProblem, CharForm, ConvergenceReport, QRoot, SchedulePoint,
};
pub use error::{Error, Result};
pub use func::SampledFn;
pub use gl::{gl_factorized, gl_multivariate, gl_univariate, GlScheme, StepRule};
pub use kahan::KahanSum;
pub use rl::{rl_power_value, PowerExponents};
pub use ring::{difference_quotient_power, DifferenceQuotient, TranslationPolynomial};
pub use special::{
    binomial_real, gamma_ratio, gauss_2f1, log_gamma, reflection_factor, HypergeometricParams,
    LnGamma,
};
