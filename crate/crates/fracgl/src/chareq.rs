//! The characteristic equation of the q-linked truncation scheme: evaluation
//! of its hypergeometric and finite-sum forms, the multivariate product
//! residual, root search over q, and the GL-to-RL convergence study.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl::{gl_factorized, GlScheme};
use crate::kahan::KahanSum;
use crate::rl::{rl_power_value, PowerExponents};
use crate::special::{
    binomial_real, gamma_ratio, gauss_2f1, log_gamma, reflection_factor, HypergeometricParams,
};

/// Which algebraic form of the left-hand side to evaluate. The finite sum is
/// only defined for nonnegative integer exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharForm {
    Hypergeometric,
    FiniteSum,
}

/// A (p, r) pair per axis defining the characteristic residual in q.
#[derive(Debug, Clone, PartialEq)]
pub struct CharEqProblem {
    p: Vec<f64>,
    r: Vec<f64>,
    form: CharForm,
}

impl CharEqProblem {
    pub fn new(p: Vec<f64>, r: Vec<f64>, form: CharForm) -> Result<Self> {
        if p.is_empty() || p.len() != r.len() {
            return Err(Error::InvalidProblem(format!(
                "need matching non-empty exponent and order vectors, got {} and {}",
                p.len(),
                r.len()
            )));
        }
        for &ri in &r {
            if ri != 0.0 && ri == ri.round() {
                return Err(Error::InvalidProblem(format!(
                    "integer order {ri} is a reflection-factor pole; integer orders bypass the characteristic equation"
                )));
            }
        }
        for &pi in &p {
            if !(pi > -1.0) {
                return Err(Error::InvalidProblem(format!(
                    "exponent must exceed -1, got {pi}"
                )));
            }
        }
        if form == CharForm::FiniteSum {
            for &pi in &p {
                if pi < 0.0 || pi != pi.round() {
                    return Err(Error::InvalidProblem(format!(
                        "finite-sum form needs nonnegative integer exponents, got {pi}"
                    )));
                }
            }
            for (&pi, &ri) in p.iter().zip(&r) {
                if ri == ri.round() && ri >= 0.0 && ri <= pi {
                    return Err(Error::InvalidProblem(format!(
                        "order {ri} hits a finite-sum denominator for exponent {pi}"
                    )));
                }
            }
        }
        Ok(Self { p, r, form })
    }

    pub fn axis_count(&self) -> usize {
        self.p.len()
    }

    pub fn exponents(&self) -> &[f64] {
        &self.p
    }

    pub fn orders(&self) -> &[f64] {
        &self.r
    }

    pub fn form(&self) -> CharForm {
        self.form
    }
}

fn validate_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::InvalidProblem(format!("q must lie in (0, 1], got {q}")));
    }
    Ok(())
}

/// The finite sum `sum_{j=0}^{p} C(p,j) (-q)^j / (r - j)` for integer p.
fn finite_sum(p: u64, r: f64, q: f64) -> f64 {
    let mut acc = KahanSum::new();
    for j in 0..=p {
        acc += binomial_real(p as f64, j) * (-q).powi(j as i32) / (r - j as f64);
    }
    acc.value()
}

/// Left-hand side of the characteristic equation,
/// `q^{-r} 2F1(-p, -r; 1 - r; q)`, in the hypergeometric normalization.
///
/// The finite-sum form evaluates `q^{-r} sum_j C(p,j) (-q)^j / (r-j)` and
/// multiplies by r, which the Pochhammer identity (-r)_j/(1-r)_j = r/(r-j)
/// shows is the same quantity.
pub fn char_lhs_univariate(p: f64, r: f64, q: f64, form: CharForm) -> Result<f64> {
    validate_q(q)?;
    if r != 0.0 && r == r.round() {
        return Err(Error::InvalidProblem(format!(
            "integer order {r} not admitted by the characteristic equation"
        )));
    }
    match form {
        CharForm::Hypergeometric => {
            let f = gauss_2f1(HypergeometricParams::new(-p, -r, 1.0 - r, q))?;
            Ok(q.powf(-r) * f)
        }
        CharForm::FiniteSum => {
            if p < 0.0 || p != p.round() {
                return Err(Error::InvalidProblem(format!(
                    "finite-sum form needs a nonnegative integer exponent, got {p}"
                )));
            }
            Ok(q.powf(-r) * r * finite_sum(p as u64, r, q))
        }
    }
}

/// Right-hand side of the characteristic equation,
/// `pi r / sin(pi r) * C(p, r)`, with the real-argument binomial
/// `Gamma(p+1) / (Gamma(r+1) Gamma(p-r+1))` formed in log space. A Gamma
/// pole in the denominator makes the side exactly zero.
pub fn char_rhs_univariate(p: f64, r: f64) -> Result<f64> {
    let refl = reflection_factor(r)?;
    let binom = gamma_ratio(&[p + 1.0], &[r + 1.0, p - r + 1.0])?;
    Ok(refl * binom)
}

/// One axis factor of the product-form residual,
/// `rhs(p, r) * q^r / 2F1(-p, -r; 1-r; q)`.
///
/// At q = 1 the Gauss closed form of the denominator shares its
/// Gamma(p - r + 1) factor with the right-hand side, so the ratio is formed
/// in log space with the shared factors cancelled; that keeps the factor
/// finite where numerator and denominator vanish together (p - r a negative
/// integer) and reduces to pi r / sin(pi r) / (Gamma(1+r) Gamma(1-r)).
fn axis_factor(p: f64, r: f64, q: f64, form: CharForm) -> Result<f64> {
    validate_q(q)?;
    if form == CharForm::Hypergeometric && q == 1.0 {
        if !(p > -1.0) {
            return Err(Error::Divergent(format!(
                "unit argument requires p > -1, got {p}"
            )));
        }
        let refl = reflection_factor(r)?;
        if r == 0.0 {
            return Ok(1.0);
        }
        let g1 = log_gamma(r + 1.0)?;
        let g2 = log_gamma(1.0 - r)?;
        let ln = refl.abs().ln() - g1.ln_abs - g2.ln_abs;
        return Ok(refl.signum() * g1.sign * g2.sign * ln.exp());
    }
    let rhs = char_rhs_univariate(p, r)?;
    let denominator = match form {
        CharForm::Hypergeometric => gauss_2f1(HypergeometricParams::new(-p, -r, 1.0 - r, q))?,
        CharForm::FiniteSum => {
            if p < 0.0 || p != p.round() {
                return Err(Error::InvalidProblem(format!(
                    "finite-sum form needs a nonnegative integer exponent, got {p}"
                )));
            }
            r * finite_sum(p as u64, r, q)
        }
    };
    if denominator == 0.0 {
        return Err(Error::ZeroDenominator { q });
    }
    Ok(rhs * q.powf(r) / denominator)
}

/// Per-axis residual g(q) = rhs * q^r / 2F1 - 1 whose zeros are the
/// admissible linkage parameters for that axis.
pub fn axis_residual(p: f64, r: f64, q: f64, form: CharForm) -> Result<f64> {
    Ok(axis_factor(p, r, q, form)? - 1.0)
}

/// Multivariate residual: the product of the per-axis factors minus one.
/// A root means the q-truncated GL scheme reproduces the RL principal value.
pub fn char_residual(problem: &CharEqProblem, q: &[f64]) -> Result<f64> {
    if q.len() != problem.axis_count() {
        return Err(Error::AxisMismatch {
            left: problem.axis_count(),
            right: q.len(),
        });
    }
    let mut product = 1.0;
    for axis in 0..problem.axis_count() {
        product *= axis_factor(
            problem.p[axis],
            problem.r[axis],
            q[axis],
            problem.form,
        )?;
    }
    Ok(product - 1.0)
}

/// A root of the per-axis residual, with the residual value actually
/// measured there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QRoot {
    pub q: f64,
    pub residual: f64,
}

const BISECT_TOL: f64 = 1e-12;
const UNIT_ROOT_TOL: f64 = 1e-9;
const ROOT_MERGE_TOL: f64 = 1e-9;

/// Scans the per-axis residual on `grid` points of `search`, brackets sign
/// changes, refines each bracket by bisection to |dq| <= 1e-12, and returns
/// the sorted roots. q = 1 is always verified (|g(1)| <= 1e-9, otherwise an
/// error that signals a kernel bug) and included.
pub fn solve_q(
    problem: &CharEqProblem,
    axis: usize,
    search: (f64, f64),
    grid: usize,
) -> Result<Vec<QRoot>> {
    if axis >= problem.axis_count() {
        return Err(Error::AxisOutOfRange {
            axis,
            axes: problem.axis_count(),
        });
    }
    let (lo, hi) = search;
    if !(lo > 0.0 && lo < hi && hi <= 1.0) {
        return Err(Error::InvalidProblem(format!(
            "search interval must satisfy 0 < lo < hi <= 1, got ({lo}, {hi})"
        )));
    }
    if grid < 2 {
        return Err(Error::InvalidProblem(format!(
            "grid must have at least 2 points, got {grid}"
        )));
    }
    let (p, r, form) = (problem.p[axis], problem.r[axis], problem.form);
    let g = |q: f64| axis_residual(p, r, q, form);

    let g_at_one = axis_residual(p, r, 1.0, form)?;
    if g_at_one.abs() > UNIT_ROOT_TOL {
        return Err(Error::UnitRootCheck {
            residual: g_at_one,
            tolerance: UNIT_ROOT_TOL,
        });
    }

    let mut roots: Vec<QRoot> = Vec::new();
    let step = (hi - lo) / (grid - 1) as f64;
    let mut prev_q = lo;
    let mut prev_g = g(prev_q)?;
    if prev_g == 0.0 {
        roots.push(QRoot {
            q: prev_q,
            residual: prev_g,
        });
    }
    for i in 1..grid {
        let qi = if i == grid - 1 { hi } else { lo + i as f64 * step };
        let gi = g(qi)?;
        if gi == 0.0 {
            roots.push(QRoot { q: qi, residual: gi });
        } else if prev_g != 0.0 && prev_g.signum() != gi.signum() {
            let (mut a, mut b) = (prev_q, qi);
            let mut ga = prev_g;
            while b - a > BISECT_TOL {
                let mid = 0.5 * (a + b);
                let gm = g(mid)?;
                if gm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if ga.signum() != gm.signum() {
                    b = mid;
                } else {
                    a = mid;
                    ga = gm;
                }
            }
            let q_root = 0.5 * (a + b);
            roots.push(QRoot {
                q: q_root,
                residual: g(q_root)?,
            });
        }
        prev_q = qi;
        prev_g = gi;
    }

    if !roots
        .iter()
        .any(|root| (root.q - 1.0).abs() <= ROOT_MERGE_TOL)
    {
        roots.push(QRoot {
            q: 1.0,
            residual: g_at_one,
        });
    }
    roots.sort_by(|a, b| a.q.total_cmp(&b.q));
    roots.dedup_by(|a, b| (a.q - b.q).abs() <= ROOT_MERGE_TOL);
    Ok(roots)
}

/// One schedule point of a convergence study.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchedulePoint {
    #[serde(rename = "N")]
    pub n: Vec<u64>,
    pub gl_value: f64,
    pub rl_value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

/// Convergence report for a q-linked GL scheme measured against the RL
/// principal value, with the fitted log-log error slope.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub p: Vec<f64>,
    pub r: Vec<f64>,
    pub x: Vec<f64>,
    pub q: Vec<f64>,
    pub schedule: Vec<SchedulePoint>,
    pub slope: Option<f64>,
}

impl ConvergenceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Least-squares slope of ln(err) against ln(geometric mean of N).
fn fit_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(x, y) in points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

/// Runs gl_factorized under the linkage q across an increasing N schedule
/// and reports the error against rl_power_value per point, plus the
/// empirical convergence slope.
pub fn verify_gl_rl_linkage(
    p: &PowerExponents,
    r: &[f64],
    x: &[f64],
    q: &[f64],
    schedule: &[Vec<u64>],
) -> Result<ConvergenceReport> {
    let axes = p.axis_count();
    if r.len() != axes || x.len() != axes || q.len() != axes {
        return Err(Error::AxisMismatch {
            left: axes,
            right: r.len().max(x.len()).max(q.len()),
        });
    }
    if schedule.is_empty() {
        return Err(Error::InvalidProblem("empty N schedule".into()));
    }
    for (i, n) in schedule.iter().enumerate() {
        if n.len() != axes {
            return Err(Error::InvalidProblem(format!(
                "schedule entry {i} has {} axes, expected {axes}",
                n.len()
            )));
        }
        if i > 0 && !n.iter().zip(&schedule[i - 1]).all(|(a, b)| a > b) {
            return Err(Error::InvalidProblem(
                "N schedule must be strictly increasing per axis".into(),
            ));
        }
    }

    let rl = rl_power_value(p, r, x)?;
    let mut points = Vec::with_capacity(schedule.len());
    let mut fit = Vec::new();
    for n in schedule {
        let scheme = GlScheme::linked(x.to_vec(), r.to_vec(), n.clone(), q.to_vec())?;
        let gl = gl_factorized(p, &scheme)?;
        let abs_err = (gl - rl).abs();
        let rel_err = if rl != 0.0 { abs_err / rl.abs() } else { abs_err };
        if abs_err > 0.0 {
            let ln_n = n.iter().map(|&v| (v as f64).ln()).sum::<f64>() / axes as f64;
            fit.push((ln_n, abs_err.ln()));
        }
        points.push(SchedulePoint {
            n: n.clone(),
            gl_value: gl,
            rl_value: rl,
            abs_err,
            rel_err,
        });
    }
    Ok(ConvergenceReport {
        p: p.exponents().to_vec(),
        r: r.to_vec(),
        x: x.to_vec(),
        q: q.to_vec(),
        schedule: points,
        slope: fit_log_slope(&fit),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn lhs_examples() {
        let v = char_lhs_univariate(1.0, 0.5, 1.0, CharForm::Hypergeometric).unwrap();
        assert!(rel_close(v, 2.0, 1e-13));

        let v = char_lhs_univariate(0.0, 0.5, 1.0, CharForm::Hypergeometric).unwrap();
        assert_eq!(v, 1.0);

        // sqrt(2) * 1.5, two-term series by hand
        let v = char_lhs_univariate(1.0, 0.5, 0.5, CharForm::Hypergeometric).unwrap();
        assert!(rel_close(v, 2.1213203435596424, 1e-13));
    }

    #[test]
    fn lhs_matches_reference_for_non_integer_exponents() {
        // 40-digit references (tools/reference_values.py)
        let v = char_lhs_univariate(0.5, 0.25, 0.7, CharForm::Hypergeometric).unwrap();
        assert!(rel_close(v, 1.2336829625535549, 1e-13), "got {v}");
        let v = char_lhs_univariate(3.2, 0.75, 0.9, CharForm::Hypergeometric).unwrap();
        assert!(rel_close(v, 8.938328769146467, 1e-12), "got {v}");
    }

    #[test]
    fn lhs_finite_sum_form() {
        let v = char_lhs_univariate(2.0, 0.75, 0.6, CharForm::FiniteSum).unwrap();
        assert!(rel_close(v, 6.430683090170394, 1e-13), "got {v}");
        // rejects non-integer exponents
        assert!(char_lhs_univariate(2.5, 0.75, 0.6, CharForm::FiniteSum).is_err());
    }

    #[test]
    fn rhs_examples() {
        assert!(rel_close(char_rhs_univariate(1.0, 0.5).unwrap(), 2.0, 1e-13));
        assert!(rel_close(
            char_rhs_univariate(0.5, 0.5).unwrap(),
            std::f64::consts::FRAC_PI_2,
            1e-13
        ));
        assert!(rel_close(char_rhs_univariate(0.0, 0.5).unwrap(), 1.0, 1e-13));
        assert!(rel_close(
            char_rhs_univariate(1.7, 0.25).unwrap(),
            1.4739686713872505,
            1e-13
        ));
    }

    #[test]
    fn rhs_vanishes_on_denominator_poles() {
        // p - r + 1 = -1
        assert_eq!(char_rhs_univariate(0.3, 2.3).unwrap(), 0.0);
    }

    #[test]
    fn unit_q_is_a_root_across_the_grid() {
        for p in [0.3, 0.5, 1.0, 1.7, 2.0, 3.2] {
            for r in [0.25, 0.5, 0.75, 1.5, 2.3] {
                let problem =
                    CharEqProblem::new(vec![p], vec![r], CharForm::Hypergeometric).unwrap();
                let res = char_residual(&problem, &[1.0]).unwrap();
                assert!(res.abs() <= 1e-9, "p={p} r={r}: residual {res}");
            }
        }
    }

    #[test]
    fn residual_is_the_product_of_axis_factors() {
        let problem = CharEqProblem::new(
            vec![1.0, 2.0],
            vec![0.5, 0.75],
            CharForm::Hypergeometric,
        )
        .unwrap();
        let q = [0.8, 0.6];
        let g1 = axis_residual(1.0, 0.5, q[0], CharForm::Hypergeometric).unwrap();
        let g2 = axis_residual(2.0, 0.75, q[1], CharForm::Hypergeometric).unwrap();
        let joint = char_residual(&problem, &q).unwrap();
        let expected = (1.0 + g1) * (1.0 + g2) - 1.0;
        assert!((joint - expected).abs() < 1e-12);
    }

    #[test]
    fn residual_at_unit_q_with_matching_zero_sides() {
        // p - r negative integer: both sides of the equation vanish; the
        // log-space ratio still pins the factor at one.
        for (p, r) in [(0.5, 1.5), (0.3, 2.3)] {
            let problem = CharEqProblem::new(vec![p], vec![r], CharForm::Hypergeometric).unwrap();
            let res = char_residual(&problem, &[1.0]).unwrap();
            assert!(res.abs() <= 1e-9, "p={p} r={r}: residual {res}");
        }
    }

    #[test]
    fn forms_agree_for_integer_exponents() {
        for p in [1.0, 2.0, 3.0] {
            for r in [0.25, 0.75, 1.5] {
                for i in 1..=10 {
                    let q = i as f64 / 10.0;
                    let a = char_lhs_univariate(p, r, q, CharForm::Hypergeometric).unwrap();
                    let b = char_lhs_univariate(p, r, q, CharForm::FiniteSum).unwrap();
                    assert!(rel_close(a, b, 1e-10), "p={p} r={r} q={q}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn form_residuals_share_sign_pattern() {
        let hyper = CharEqProblem::new(vec![2.0], vec![0.75], CharForm::Hypergeometric).unwrap();
        let finite = CharEqProblem::new(vec![2.0], vec![0.75], CharForm::FiniteSum).unwrap();
        for i in 1..=200 {
            let q = 0.005 * i as f64;
            let a = char_residual(&hyper, &[q]).unwrap();
            let b = char_residual(&finite, &[q]).unwrap();
            assert!(
                a.signum() == b.signum() || (a.abs() < 1e-9 && b.abs() < 1e-9),
                "q={q}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn problem_validation() {
        assert!(CharEqProblem::new(vec![1.0], vec![1.0], CharForm::Hypergeometric).is_err());
        assert!(CharEqProblem::new(vec![1.0], vec![-2.0], CharForm::Hypergeometric).is_err());
        assert!(CharEqProblem::new(vec![1.0], vec![0.5, 0.6], CharForm::Hypergeometric).is_err());
        assert!(CharEqProblem::new(vec![1.5], vec![0.5], CharForm::FiniteSum).is_err());
        assert!(CharEqProblem::new(vec![-1.2], vec![0.5], CharForm::Hypergeometric).is_err());
        // r = 0 is allowed (identity derivative)
        assert!(CharEqProblem::new(vec![1.0], vec![0.0], CharForm::Hypergeometric).is_ok());
    }

    #[test]
    fn solve_q_always_reports_the_unit_root() {
        for (p, r) in [(1.0, 0.5), (2.0, 0.5), (3.0, 1.5), (0.0, 0.5)] {
            let problem = CharEqProblem::new(vec![p], vec![r], CharForm::Hypergeometric).unwrap();
            let roots = solve_q(&problem, 0, (0.01, 1.0), 1000).unwrap();
            assert!(
                roots.iter().any(|root| (root.q - 1.0).abs() <= 1e-9),
                "p={p} r={r}: {roots:?}"
            );
            for root in &roots {
                assert!(root.q > 0.0 && root.q <= 1.0);
            }
        }
    }

    #[test]
    fn solve_q_rejects_bad_searches() {
        let problem = CharEqProblem::new(vec![1.0], vec![0.5], CharForm::Hypergeometric).unwrap();
        assert!(solve_q(&problem, 0, (0.0, 1.0), 100).is_err());
        assert!(solve_q(&problem, 0, (0.5, 1.5), 100).is_err());
        assert!(solve_q(&problem, 0, (0.9, 0.1), 100).is_err());
        assert!(solve_q(&problem, 0, (0.1, 1.0), 1).is_err());
        assert!(solve_q(&problem, 1, (0.1, 1.0), 100).is_err());
    }

    #[test]
    fn linkage_study_converges_to_the_rl_value() {
        let p = PowerExponents::new(vec![1.0]).unwrap();
        let report = verify_gl_rl_linkage(
            &p,
            &[0.5],
            &[1.0],
            &[1.0],
            &[vec![100], vec![1000], vec![10000]],
        )
        .unwrap();
        assert!(rel_close(report.schedule[0].rl_value, 1.1283791670955126, 1e-13));
        for pair in report.schedule.windows(2) {
            assert!(pair[1].abs_err < pair[0].abs_err);
        }
        let slope = report.slope.unwrap();
        assert!(slope < -0.8 && slope > -1.2, "slope {slope}");
    }

    #[test]
    fn linkage_study_multivariate_target() {
        // converges to (2/sqrt(pi))^2
        let p = PowerExponents::new(vec![1.0, 1.0]).unwrap();
        let report = verify_gl_rl_linkage(
            &p,
            &[0.5, 0.5],
            &[1.0, 1.0],
            &[1.0, 1.0],
            &[vec![100, 100], vec![1000, 1000]],
        )
        .unwrap();
        let target = 1.2732395447351628;
        assert!(rel_close(report.schedule[0].rl_value, target, 1e-12));
        assert!(report.schedule[1].rel_err < report.schedule[0].rel_err);
        assert!(report.schedule[1].rel_err < 1e-3);
    }

    #[test]
    fn linkage_study_classical_case() {
        let p = PowerExponents::new(vec![2.0]).unwrap();
        let report = verify_gl_rl_linkage(
            &p,
            &[1.0],
            &[3.0],
            &[1.0],
            &[vec![100], vec![1000]],
        )
        .unwrap();
        assert_eq!(report.schedule[0].rl_value, 6.0);
        assert!(report.schedule[1].abs_err < report.schedule[0].abs_err);
    }

    #[test]
    fn report_serializes_with_the_documented_shape() {
        let p = PowerExponents::new(vec![1.0]).unwrap();
        let report =
            verify_gl_rl_linkage(&p, &[0.5], &[1.0], &[1.0], &[vec![10], vec![20]]).unwrap();
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        for key in ["p", "r", "x", "q", "schedule", "slope"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        let row = &json["schedule"][0];
        for key in ["N", "gl_value", "rl_value", "abs_err", "rel_err"] {
            assert!(row.get(key).is_some(), "missing schedule key {key}");
        }
    }

    #[test]
    fn schedule_must_increase() {
        let p = PowerExponents::new(vec![1.0]).unwrap();
        let err = verify_gl_rl_linkage(&p, &[0.5], &[1.0], &[1.0], &[vec![100], vec![100]]);
        assert!(err.is_err());
    }
}
