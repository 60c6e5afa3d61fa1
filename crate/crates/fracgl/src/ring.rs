//! The commutative ring of lattice translation operators.
//!
//! An element is a finite linear combination of translations
//! `sum c_m phi_1^{m_1 h_1} ... phi_n^{m_n h_n}` with exact rational
//! coefficients and integer offset vectors `m`. Offsets are integer
//! multiples of per-axis base steps, which keeps every expression canonical
//! and lets the difference-quotient expansions be verified symbolically
//! before any floating-point limit is taken.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::func::SampledFn;
use crate::kahan::KahanSum;

/// Guard against convolution blowup.
pub const TERM_CAP: usize = 1_000_000;

/// A formal linear combination of translation operators on a uniform step
/// lattice. Canonical form: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationPolynomial {
    axes: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl TranslationPolynomial {
    /// The zero element (empty term map).
    pub fn zero(axes: usize) -> Self {
        Self {
            axes,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity phi^0.
    pub fn identity(axes: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; axes], BigRational::one());
        Self { axes, terms }
    }

    /// The monomial phi_axis^(steps * h), i.e. a unit-coefficient translation
    /// by `steps` base steps along `axis` (0-based).
    pub fn translation(axes: usize, axis: usize, steps: i64) -> Result<Self> {
        if axis >= axes {
            return Err(Error::AxisOutOfRange { axis, axes });
        }
        let mut offsets = vec![0i64; axes];
        offsets[axis] = steps;
        let mut terms = BTreeMap::new();
        terms.insert(offsets, BigRational::one());
        Ok(Self { axes, terms })
    }

    pub fn axis_count(&self) -> usize {
        self.axes
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at an offset vector, if present.
    pub fn coefficient(&self, offsets: &[i64]) -> Option<&BigRational> {
        self.terms.get(offsets)
    }

    /// Iterates terms in lexicographic offset order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    fn check_axes(&self, other: &Self) -> Result<()> {
        if self.axes != other.axes {
            return Err(Error::AxisMismatch {
                left: self.axes,
                right: other.axes,
            });
        }
        Ok(())
    }

    fn insert_add(terms: &mut BTreeMap<Vec<i64>, BigRational>, key: Vec<i64>, value: BigRational) {
        if value.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_axes(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        if terms.len() > TERM_CAP {
            return Err(Error::TermCap {
                terms: terms.len(),
                cap: TERM_CAP,
            });
        }
        Ok(Self {
            axes: self.axes,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Offset-convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_axes(other)?;
        if self
            .terms
            .len()
            .checked_mul(other.terms.len())
            .map_or(true, |n| n > TERM_CAP)
        {
            return Err(Error::TermCap {
                terms: self.terms.len().saturating_mul(other.terms.len()),
                cap: TERM_CAP,
            });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                let key: Vec<i64> = m.iter().zip(m2).map(|(a, b)| a + b).collect();
                Self::insert_add(&mut terms, key, c * c2);
            }
        }
        if terms.len() > TERM_CAP {
            return Err(Error::TermCap {
                terms: terms.len(),
                cap: TERM_CAP,
            });
        }
        Ok(Self {
            axes: self.axes,
            terms,
        })
    }

    /// Repeated squaring.
    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut result = Self::identity(self.axes);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.axes);
        }
        Self {
            axes: self.axes,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Translates every term by an offset vector (multiplication by the
    /// corresponding monomial).
    pub fn shift(&self, offsets: &[i64]) -> Result<Self> {
        if offsets.len() != self.axes {
            return Err(Error::AxisMismatch {
                left: self.axes,
                right: offsets.len(),
            });
        }
        Ok(Self {
            axes: self.axes,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.iter().zip(offsets).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        })
    }

    /// Applies the operator to a sampled function:
    /// `sum c_m f(x + m o h)` with `o` the per-axis scaling of integer
    /// offsets by base steps. Conversion to floating point happens here and
    /// nowhere else in the ring.
    pub fn apply(&self, f: &SampledFn, x: &[f64], h: &[f64]) -> Result<f64> {
        if x.len() != self.axes || h.len() != self.axes {
            return Err(Error::AxisMismatch {
                left: self.axes,
                right: x.len().max(h.len()),
            });
        }
        if h.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::InvalidScheme(format!("steps must be positive, got {h:?}")));
        }
        let mut acc = KahanSum::new();
        let mut point = vec![0.0; self.axes];
        for (m, c) in &self.terms {
            for i in 0..self.axes {
                point[i] = x[i] + m[i] as f64 * h[i];
            }
            let coeff = c.to_f64().expect("rational coefficient out of f64 range");
            acc += coeff * f.eval(&point)?;
        }
        Ok(acc.value())
    }

    /// Human-readable sorted term list, used in test goldens.
    pub fn display_terms(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TranslationPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let offsets = m
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "({offsets}) -> {c};")?;
        }
        Ok(())
    }
}

/// The exact expansion of a product of integer-order difference quotients,
/// with the scalar step prefactor `prod h_i^{-r_i}` kept separate.
///
/// `raw` expands `prod (phi_i - 1)^{r_i}` directly, giving forward offsets
/// in [0, r_i]. `shifted` is the raw form translated by `-r` per axis, the
/// normal form whose coefficient at offset `-k` is
/// `prod (-1)^{k_i} C(r_i, k_i)`. At finite step size the two differ by a
/// translation of the evaluation point by `r o h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceQuotient {
    pub raw: TranslationPolynomial,
    pub shifted: TranslationPolynomial,
    pub orders: Vec<u32>,
}

impl DifferenceQuotient {
    /// The scalar prefactor `prod h_i^{-r_i}` at concrete step sizes.
    pub fn step_prefactor(&self, h: &[f64]) -> Result<f64> {
        if h.len() != self.orders.len() {
            return Err(Error::AxisMismatch {
                left: self.orders.len(),
                right: h.len(),
            });
        }
        Ok(self
            .orders
            .iter()
            .zip(h)
            .map(|(&r, &s)| s.powi(-(r as i32)))
            .product())
    }
}

/// Expands `prod_i (phi_i - 1)^{r_i}` exactly for nonnegative integer orders.
pub fn difference_quotient_power(orders: &[u32]) -> Result<DifferenceQuotient> {
    let axes = orders.len();
    let mut raw = TranslationPolynomial::identity(axes);
    for (axis, &r) in orders.iter().enumerate() {
        let phi = TranslationPolynomial::translation(axes, axis, 1)?;
        let diff = phi.sub(&TranslationPolynomial::identity(axes))?;
        raw = raw.mul(&diff.pow(r)?)?;
    }
    let back: Vec<i64> = orders.iter().map(|&r| -(r as i64)).collect();
    let shifted = raw.shift(&back)?;
    Ok(DifferenceQuotient {
        raw,
        shifted,
        orders: orders.to_vec(),
    })
}

/// Exact binomial coefficient as a rational, for test oracles.
pub fn binomial_exact(n: u64, k: u64) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn phi(axes: usize, axis: usize) -> TranslationPolynomial {
        TranslationPolynomial::translation(axes, axis, 1).unwrap()
    }

    fn phi_minus_one(axes: usize, axis: usize) -> TranslationPolynomial {
        phi(axes, axis)
            .sub(&TranslationPolynomial::identity(axes))
            .unwrap()
    }

    #[test]
    fn translation_examples() {
        let id = TranslationPolynomial::translation(1, 0, 0).unwrap();
        assert_eq!(id, TranslationPolynomial::identity(1));

        let p = phi(1, 0).mul(&phi(1, 0)).unwrap();
        assert_eq!(p, TranslationPolynomial::translation(1, 0, 2).unwrap());

        let m = TranslationPolynomial::translation(2, 1, -3).unwrap();
        assert_eq!(m.coefficient(&[0, -3]), Some(&rat(1)));

        assert!(matches!(
            TranslationPolynomial::translation(2, 2, 1),
            Err(Error::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn first_difference_squared() {
        let sq = phi_minus_one(1, 0).pow(2).unwrap();
        assert_eq!(sq.term_count(), 3);
        assert_eq!(sq.coefficient(&[2]), Some(&rat(1)));
        assert_eq!(sq.coefficient(&[1]), Some(&rat(-2)));
        assert_eq!(sq.coefficient(&[0]), Some(&rat(1)));
    }

    #[test]
    fn identity_is_neutral() {
        let a = phi_minus_one(1, 0).pow(3).unwrap();
        let b = a.mul(&TranslationPolynomial::identity(1)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn binomial_rows_up_to_twenty_are_exact() {
        for n in 0u32..=20 {
            let p = phi_minus_one(1, 0).pow(n).unwrap();
            assert_eq!(p.term_count(), n as usize + 1);
            for k in 0..=n as u64 {
                let offset = n as i64 - k as i64;
                let expected = if k % 2 == 0 {
                    binomial_exact(n as u64, k)
                } else {
                    -binomial_exact(n as u64, k)
                };
                assert_eq!(
                    p.coefficient(&[offset]),
                    Some(&expected),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn brute_force_product_matches_pow_for_n_five() {
        let d = phi_minus_one(1, 0);
        let mut by_mul = TranslationPolynomial::identity(1);
        for _ in 0..5 {
            by_mul = by_mul.mul(&d).unwrap();
        }
        assert_eq!(by_mul, d.pow(5).unwrap());
    }

    #[test]
    fn axis_mismatch_is_rejected() {
        let a = phi(1, 0);
        let b = phi(2, 0);
        assert!(matches!(a.add(&b), Err(Error::AxisMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::AxisMismatch { .. })));
    }

    #[test]
    fn difference_quotient_examples() {
        // r = (1,1): four terms of the mixed first difference
        let dq = difference_quotient_power(&[1, 1]).unwrap();
        assert_eq!(dq.raw.term_count(), 4);
        assert_eq!(dq.raw.coefficient(&[1, 1]), Some(&rat(1)));
        assert_eq!(dq.raw.coefficient(&[1, 0]), Some(&rat(-1)));
        assert_eq!(dq.raw.coefficient(&[0, 1]), Some(&rat(-1)));
        assert_eq!(dq.raw.coefficient(&[0, 0]), Some(&rat(1)));

        // r = (3): alternating binomial row 1, -3, 3, -1
        let dq = difference_quotient_power(&[3]).unwrap();
        for (k, expected) in [(0i64, 1i64), (1, -3), (2, 3), (3, -1)] {
            assert_eq!(dq.raw.coefficient(&[3 - k]), Some(&rat(expected)));
        }

        // shifted normal form: coefficient at -k is (-1)^k C(r,k)
        for (k, expected) in [(0i64, 1i64), (1, -3), (2, 3), (3, -1)] {
            assert_eq!(dq.shifted.coefficient(&[-k]), Some(&rat(expected)));
        }
    }

    #[test]
    fn difference_quotient_matches_multibinomial_weights() {
        let dq = difference_quotient_power(&[2, 1]).unwrap();
        for k1 in 0u64..=2 {
            for k2 in 0u64..=1 {
                let sign = if (k1 + k2) % 2 == 0 { 1 } else { -1 };
                let expected =
                    binomial_exact(2, k1) * binomial_exact(1, k2) * BigRational::from_integer(BigInt::from(sign));
                assert_eq!(
                    dq.shifted.coefficient(&[-(k1 as i64), -(k2 as i64)]),
                    Some(&expected),
                    "k = ({k1},{k2})"
                );
            }
        }
    }

    #[test]
    fn apply_examples() {
        let square = SampledFn::power(&[2.0]);
        let cube = SampledFn::power(&[3.0]);

        // identity reproduces the function value
        let id = TranslationPolynomial::identity(1);
        assert_eq!(id.apply(&square, &[3.0], &[0.1]).unwrap(), 9.0);

        // ((phi-1)/h) x^2 at x=1, h=0.5: (1.5^2 - 1^2)/0.5 = 2.5
        let d1 = phi_minus_one(1, 0);
        let v = d1.apply(&square, &[1.0], &[0.5]).unwrap() / 0.5;
        assert!((v - 2.5).abs() < 1e-12);

        // ((phi-1)/h)^2 x^3 at x=2, h=1e-5: exactly 6x + 6h
        let d2 = phi_minus_one(1, 0).pow(2).unwrap();
        let h = 1e-5;
        let v = d2.apply(&cube, &[2.0], &[h]).unwrap() / (h * h);
        assert!((v - 12.0).abs() < 1e-3);
        assert!((v - (12.0 + 6.0 * h)).abs() < 1e-5);
    }

    #[test]
    fn shifted_form_moves_the_evaluation_point() {
        // apply(shifted, f, x) == apply(raw, f, x - r*h)
        let f = SampledFn::power(&[3.0]);
        let dq = difference_quotient_power(&[2]).unwrap();
        let (x, h) = (2.0, 1.25e-3);
        let a = dq.shifted.apply(&f, &[x], &[h]).unwrap();
        let b = dq.raw.apply(&f, &[x - 2.0 * h], &[h]).unwrap();
        assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn display_golden() {
        let dq = difference_quotient_power(&[1, 1]).unwrap();
        assert_eq!(
            dq.raw.display_terms(),
            "(0,0) -> 1; (0,1) -> -1; (1,0) -> -1; (1,1) -> 1;"
        );
        let half = phi(1, 0).scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(half.display_terms(), "(1) -> 1/2;");
    }

    #[test]
    fn term_cap_guards_convolution_growth() {
        // (phi^1 + phi^K)^e grows like 2^e distinct offsets; pick offsets so
        // the product pass exceeds the cap cheaply.
        let mut wide = TranslationPolynomial::zero(1);
        for i in 0..1500 {
            wide = wide
                .add(&TranslationPolynomial::translation(1, 0, i).unwrap())
                .unwrap();
        }
        let err = wide.mul(&wide.shift(&[2000]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::TermCap { .. }));
    }

    fn arb_poly() -> impl Strategy<Value = TranslationPolynomial> {
        proptest::collection::vec(((-4i64..=4, -4i64..=4), -9i64..=9), 1..6).prop_map(|terms| {
            let mut p = TranslationPolynomial::zero(2);
            for ((m1, m2), c) in terms {
                let mono = TranslationPolynomial {
                    axes: 2,
                    terms: [(vec![m1, m2], rat(c))]
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                };
                p = p.add(&mono).unwrap();
            }
            p
        })
    }

    proptest! {
        #[test]
        fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn apply_is_linear_in_the_operator(a in arb_poly(), b in arb_poly()) {
            let f = SampledFn::unbounded(2, |p| (0.3 * p[0] + 0.1 * p[1]).sin() + p[0] * p[1]);
            let x = [0.7, -0.4];
            let h = [0.25, 0.5];
            let joint = a.add(&b).unwrap().apply(&f, &x, &h).unwrap();
            let split = a.apply(&f, &x, &h).unwrap() + b.apply(&f, &x, &h).unwrap();
            let scale = joint.abs().max(split.abs()).max(1.0);
            prop_assert!((joint - split).abs() <= 1e-12 * scale);
        }
    }
}
