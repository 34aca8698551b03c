//! Characteristic-number arithmetic on `S^{2n}` in exact rationals, the
//! Poincaré polynomial of the orthogonal twistor space, and a numerical
//! Morse analysis of the height `h(A) = tr(A K^t)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::frobenius;
use crate::matcore::{tangent_project, ComplexStructure, TangentMatrix};
use crate::retract::retract_to_orthogonal;
use crate::sample;
use crate::twistorsec::{adapted_basis, generators_from_frame, AdaptedGenerators};

/// Euler characteristic of an even sphere; `∫ c_n = χ(S^{2n})`.
pub const EULER_CHARACTERISTIC: i64 = 2;

/// Exact rational in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self(BigRational::new(num.into(), den.into())))
    }

    pub fn integer(v: i64) -> Self {
        Self(BigRational::from_integer(v.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Self::from_big(n, d)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0.$m(o.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational((&self.0).$m(&o.0))
            }
        }
    };
}
forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);
forward_op!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Polynomial in `e_1, …, e_n` keyed by exponent vectors.
type SymPoly = BTreeMap<Vec<u32>, BigInt>;

fn sym_add(acc: &mut SymPoly, p: &SymPoly, scale: &BigInt) {
    for (mono, c) in p {
        let entry = acc.entry(mono.clone()).or_insert_with(BigInt::zero);
        *entry += c * scale;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn sym_times_e(p: &SymPoly, i: usize) -> SymPoly {
    p.iter()
        .map(|(mono, c)| {
            let mut m = mono.clone();
            m[i] += 1;
            (m, c.clone())
        })
        .collect()
}

/// Power sums `p_1, …, p_n` as exact polynomials in the elementary symmetric
/// functions, from `p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
fn power_sums(n: usize) -> Vec<SymPoly> {
    let mut p: Vec<SymPoly> = Vec::with_capacity(n + 1);
    p.push(SymPoly::new());
    for k in 1..=n {
        let mut pk = SymPoly::new();
        for i in 1..k {
            let sign = if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            sym_add(&mut pk, &sym_times_e(&p[k - i], i - 1), &sign);
        }
        let mut mono = vec![0; n];
        mono[k - 1] = 1;
        let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
        sym_add(&mut pk, &SymPoly::from([(mono, BigInt::from(k))]), &BigInt::from(sign));
        p.push(pk);
    }
    p
}

/// Coefficient `c` in `p_n = c e_n` once `e_1 = … = e_{n-1} = 0`; expected
/// `(-1)^{n-1} n`.
pub fn newton_chern_identity(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let pn = power_sums(n).pop().expect("n >= 1");
    let mut coeff = BigInt::zero();
    for (mono, c) in &pn {
        let killed = mono[..n - 1].iter().any(|&e| e > 0);
        if !killed {
            if mono[n - 1] != 1 {
                return Err(Error::InvalidArgument("unexpected surviving monomial".into()));
            }
            coeff += c;
        }
    }
    Rational::from_big(coeff, BigInt::one())
}

/// Coefficient of `c_n` in `ch_n`, namely `p_n / n!` under the same constraint.
pub fn chern_character_coefficient(n: usize) -> Result<Rational> {
    let c = newton_chern_identity(n)?;
    Ok(c / Rational(BigRational::from_integer(factorial(n as u32))))
}

/// An exact index together with its integrality verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexValue {
    pub value: Rational,
    pub integral: bool,
}

impl IndexValue {
    fn new(value: Rational) -> Self {
        let integral = value.is_integer();
        Self { value, integral }
    }
}

/// `∫ 2^n ch_n(E) = 2^n · ch-coefficient · χ(S^{2n}) = (-2)^{n+1}/(n-1)!`.
/// A non-integral value rules out an almost complex structure on `S^{2n}`.
pub fn signature_index(n: usize) -> Result<IndexValue> {
    if n < 2 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            range: "[2, inf)",
        });
    }
    let two_n = Rational(BigRational::from_integer(BigInt::from(2).pow(n as u32)));
    let value = two_n * chern_character_coefficient(n)? * Rational::integer(EULER_CHARACTERISTIC);
    Ok(IndexValue::new(value))
}

/// Degree-4 Todd term `(c_1^2 + c_2)/12`.
pub fn todd_degree4(c1_squared: &Rational, c2: &Rational) -> Rational {
    &(c1_squared + c2) / &Rational::integer(12)
}

/// Dolbeault index on `S^4` with `c_1 = 0`, `∫ c_2 = χ(S^4)`.
pub fn dolbeault_index_s4() -> IndexValue {
    IndexValue::new(todd_degree4(
        &Rational::integer(0),
        &Rational::integer(EULER_CHARACTERISTIC),
    ))
}

/// Integer polynomial in `t`, trimmed so the top coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn one() -> Self {
        Self(vec![1])
    }

    /// `1 + t^k`.
    pub fn one_plus_power(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[0] += 1;
        c[k] += 1;
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.0.is_empty() || o.0.is_empty() {
            return Ok(Self(vec![]));
        }
        let overflow = || Error::InvalidArgument("integer overflow in polynomial product".into());
        let mut out = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                let t = a.checked_mul(*b).ok_or_else(overflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or_else(overflow)?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn eval(&self, t: i64) -> Option<i64> {
        self.0
            .iter()
            .rev()
            .try_fold(0i64, |acc, c| acc.checked_mul(t)?.checked_add(*c))
    }
}

/// `P_t = (1+t^2)(1+t^4)…(1+t^{2n})`.
pub fn poincare_polynomial(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    (1..=n).try_fold(IntPoly::one(), |acc, k| acc.mul(&IntPoly::one_plus_power(2 * k)))
}

/// `P_t(n) = (1 + t^{2n}) P_t(n-1)`, with `P_t(0) = 1`.
pub fn poincare_recursion_holds(n: usize) -> Result<bool> {
    let prev = if n == 1 { IntPoly::one() } else { poincare_polynomial(n - 1)? };
    Ok(IntPoly::one_plus_power(2 * n).mul(&prev)? == poincare_polynomial(n)?)
}

/// `K = ē_0 ē_{-1}^t - ē_{-1} ē_0^t` in order `2n+2`, with `ē_{-1}`, `ē_0` the
/// first two standard basis vectors.
pub fn height_kernel(order: usize) -> DMatrix<f64> {
    let mut k = DMatrix::zeros(order, order);
    k[(1, 0)] = 1.0;
    k[(0, 1)] = -1.0;
    k
}

fn check_morse_domain(a: &ComplexStructure) -> Result<()> {
    if a.dim() < 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: a.dim(),
        });
    }
    if !a.is_orthogonal() {
        return Err(Error::NotOrthogonal {
            residual: frobenius(&(a.matrix() + a.matrix().transpose())),
        });
    }
    Ok(())
}

/// `h(A) = tr(A K^t) = 2⟨ē_0, A ē_{-1}⟩`.
pub fn morse_h(a: &ComplexStructure) -> Result<f64> {
    check_morse_domain(a)?;
    Ok((a.matrix() * height_kernel(a.dim()).transpose()).trace())
}

/// Tangent projection `(K + AKA)/2` of `K`; the trace-metric gradient of `h`.
pub fn morse_gradient(a: &ComplexStructure) -> Result<TangentMatrix> {
    check_morse_domain(a)?;
    tangent_project(a, &height_kernel(a.dim()))
}

/// A point of the twistor space with its height and gradient size.
#[derive(Debug, Clone, PartialEq)]
pub struct MorseState {
    pub a: ComplexStructure,
    pub h: f64,
    pub grad_norm: f64,
}

impl MorseState {
    pub fn new(a: ComplexStructure) -> Result<Self> {
        let h = morse_h(&a)?;
        let grad_norm = frobenius(morse_gradient(&a)?.matrix());
        Ok(Self { a, h, grad_norm })
    }
}

/// Structure on the critical set over `sign · ē_0`: `ē_{-1} -> sign · ē_0`,
/// rotated by `R ∈ SO(2n)` on the complement. Stays in the `J0` component.
pub fn critical_point(n: usize, sign: f64, rotation: Option<&DMatrix<f64>>) -> Result<ComplexStructure> {
    let order = 2 * n + 2;
    let mut q = DMatrix::identity(order, order);
    if let Some(r) = rotation {
        if r.nrows() != 2 * n || r.ncols() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                actual: r.nrows(),
            });
        }
        q.view_mut((2, 2), (2 * n, 2 * n)).copy_from(r);
    }
    if sign < 0.0 {
        // flip ē_0 and one complement direction to keep det Q = 1
        q[(1, 1)] = -1.0;
        q.row_mut(2).neg_mut();
    }
    let j0 = ComplexStructure::standard(n + 1)?.into_matrix();
    let a = &q * j0 * q.transpose();
    ComplexStructure::orthogonal(crate::linalg::skew_part(&a), 1e-9)
}

/// `α_ij`, `β_ij` and `X̃_l` at a critical point.
pub fn critical_generators(a: &ComplexStructure) -> Result<AdaptedGenerators> {
    check_morse_domain(a)?;
    let order = a.dim();
    let m = a.matrix();
    let mut em1 = DVector::zeros(order);
    em1[0] = 1.0;
    let e0 = m * &em1;
    if e0[1].abs() < 1.0 - 1e-6 {
        return Err(Error::NotCritical {
            grad_norm: frobenius(morse_gradient(a)?.matrix()),
        });
    }
    let e0 = {
        let mut v = DVector::zeros(order);
        v[1] = e0[1].signum();
        v
    };
    let block = m.view((2, 2), (order - 2, order - 2)).into_owned();
    let g = adapted_basis(&block);
    let mut u = DMatrix::zeros(order, order - 2);
    u.view_mut((2, 0), (order - 2, order - 2)).copy_from(&g);
    Ok(generators_from_frame(&em1, &e0, u))
}

/// Second-difference steps; the two estimates are Richardson-combined.
pub const HESSIAN_STEPS: [f64; 2] = [1e-3, 5e-4];

fn second_difference(a: &ComplexStructure, v: &DMatrix<f64>, s: f64) -> Result<f64> {
    let h0 = morse_h(a)?;
    let hp = morse_h(&retract_to_orthogonal(&(a.matrix() + v * s))?)?;
    let hm = morse_h(&retract_to_orthogonal(&(a.matrix() - v * s))?)?;
    Ok((hp - 2.0 * h0 + hm) / (s * s))
}

/// `d²h(V, V)` by Richardson-extrapolated second differences along
/// `s -> polar(A + sV)`.
pub fn hessian_quadratic(a: &ComplexStructure, v: &DMatrix<f64>) -> Result<f64> {
    let [s1, s2] = HESSIAN_STEPS;
    let q1 = second_difference(a, v, s1)?;
    let q2 = second_difference(a, v, s2)?;
    let p = (s1 / s2).powi(2);
    Ok((p * q2 - q1) / (p - 1.0))
}

/// Hessian of `h` at a critical point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HessianSpectrum {
    pub critical_value: f64,
    /// Ascending eigenvalues on the horizontal block, in the basis `X̃_l`.
    pub horizontal: Vec<f64>,
    /// Number of negative horizontal eigenvalues.
    pub index: usize,
    /// Largest `|d²h(V,V)|` over the fiber generators `α_ij`, `β_ij`.
    pub fiber_max: f64,
}

/// Eigenvalues of `d²h` on `span{X̃_l}` (in the coframe dual to `X̃_l`) and
/// the size of `d²h` along the fiber.
pub fn morse_hessian_spectrum(a: &ComplexStructure) -> Result<HessianSpectrum> {
    let grad_norm = frobenius(morse_gradient(a)?.matrix());
    if grad_norm > 1e-6 {
        return Err(Error::NotCritical { grad_norm });
    }
    let gens = critical_generators(a)?;
    let xs = &gens.horizontal;
    let d = xs.len();
    let mut hess = DMatrix::zeros(d, d);
    for k in 0..d {
        hess[(k, k)] = hessian_quadratic(a, &xs[k])?;
        for l in 0..k {
            let plus = hessian_quadratic(a, &(&xs[k] + &xs[l]))?;
            let minus = hessian_quadratic(a, &(&xs[k] - &xs[l]))?;
            hess[(k, l)] = 0.25 * (plus - minus);
            hess[(l, k)] = hess[(k, l)];
        }
    }
    let mut horizontal: Vec<f64> = hess.symmetric_eigen().eigenvalues.iter().copied().collect();
    horizontal.sort_by(f64::total_cmp);
    let index = horizontal.iter().filter(|&&v| v < 0.0).count();
    let mut fiber_max: f64 = 0.0;
    for v in gens.alpha.iter().chain(&gens.beta) {
        fiber_max = fiber_max.max(hessian_quadratic(a, v)?.abs());
    }
    Ok(HessianSpectrum {
        critical_value: morse_h(a)?,
        horizontal,
        index,
        fiber_max,
    })
}

/// Step size, step budget and stopping rule for [`gradient_ascent`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AscentConfig {
    pub step: f64,
    pub max_steps: usize,
    /// Stop once the gradient norm falls below this.
    pub grad_tol: f64,
}

impl Default for AscentConfig {
    fn default() -> Self {
        Self {
            step: 1e-2,
            max_steps: 10_000,
            grad_tol: 1e-5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AscentOutcome {
    pub initial_h: f64,
    pub final_h: f64,
    pub grad_norm: f64,
    pub steps: usize,
    pub stopped: bool,
}

/// `A <- polar(A + step · grad h(A))` until the gradient is small.
pub fn gradient_ascent(start: &ComplexStructure, cfg: &AscentConfig) -> Result<AscentOutcome> {
    let mut a = start.clone();
    let initial_h = morse_h(&a)?;
    let mut steps = 0;
    loop {
        let grad = morse_gradient(&a)?;
        let grad_norm = frobenius(grad.matrix());
        if grad_norm <= cfg.grad_tol || steps >= cfg.max_steps {
            return Ok(AscentOutcome {
                initial_h,
                final_h: morse_h(&a)?,
                grad_norm,
                steps,
                stopped: grad_norm <= cfg.grad_tol,
            });
        }
        a = retract_to_orthogonal(&(a.matrix() + grad.matrix() * cfg.step))?;
        steps += 1;
    }
}

/// Uniformly rotated `J0` of order `2n+2`.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<ComplexStructure> {
    let q = sample::special_orthogonal(rng, 2 * n + 2);
    let a = &q * ComplexStructure::standard(n + 1)?.into_matrix() * q.transpose();
    ComplexStructure::orthogonal(crate::linalg::skew_part(&a), 1e-9)
}

/// `⟨grad h, V⟩` against a central difference of `h` along `polar(A + sV)`.
pub fn gradient_fd_gap(a: &ComplexStructure, v: &DMatrix<f64>, s: f64) -> Result<f64> {
    let grad = morse_gradient(a)?;
    let analytic = (grad.matrix() * v.transpose()).trace();
    let hp = morse_h(&retract_to_orthogonal(&(a.matrix() + v * s))?)?;
    let hm = morse_h(&retract_to_orthogonal(&(a.matrix() - v * s))?)?;
    Ok((analytic - (hp - hm) / (2.0 * s)).abs())
}

/// `π(A) = A ē_{-1}`.
pub fn projection(a: &ComplexStructure) -> DVector<f64> {
    a.matrix().column(0).into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn newton_small_cases() {
        assert_eq!(newton_chern_identity(1).unwrap(), q("1"));
        assert_eq!(newton_chern_identity(2).unwrap(), q("-2"));
        assert_eq!(newton_chern_identity(3).unwrap(), q("3"));
        assert_eq!(chern_character_coefficient(3).unwrap(), q("1/2"));
        assert!(newton_chern_identity(0).is_err());
    }

    #[test]
    fn full_power_sum_p3() {
        // p3 = e1^3 - 3 e1 e2 + 3 e3
        let p3 = power_sums(3).pop().unwrap();
        let want = SymPoly::from([
            (vec![3, 0, 0], BigInt::from(1)),
            (vec![1, 1, 0], BigInt::from(-3)),
            (vec![0, 0, 1], BigInt::from(3)),
        ]);
        assert_eq!(p3, want);
    }

    #[test]
    fn index_values() {
        assert_eq!(signature_index(2).unwrap().value, q("-8"));
        assert_eq!(signature_index(3).unwrap().value, q("8"));
        let four = signature_index(4).unwrap();
        assert_eq!(four.value, q("-16/3"));
        assert!(!four.integral);
        assert!(signature_index(1).is_err());
        let dol = dolbeault_index_s4();
        assert_eq!(dol.value, q("1/6"));
        assert!(!dol.integral);
        assert_eq!(todd_degree4(&q("0"), &q("12")), q("1"));
    }

    #[test]
    fn rational_text_round_trip() {
        let r = q("-32/6");
        assert_eq!(r.to_string(), "-16/3");
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"-16/3\"");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn poincare_small_cases() {
        assert_eq!(poincare_polynomial(1).unwrap().coefficients(), &[1, 0, 1]);
        assert_eq!(poincare_polynomial(2).unwrap().coefficients(), &[1, 0, 1, 0, 1, 0, 1]);
        let p3 = poincare_polynomial(3).unwrap();
        assert_eq!(p3.degree(), Some(12));
        assert_eq!(p3.eval(1), Some(8));
        assert!(poincare_recursion_holds(5).unwrap());
    }

    #[test]
    fn critical_values() {
        let top = critical_point(2, 1.0, None).unwrap();
        let bottom = critical_point(2, -1.0, None).unwrap();
        assert!((morse_h(&top).unwrap() - 2.0).abs() < 1e-15);
        assert!((morse_h(&bottom).unwrap() + 2.0).abs() < 1e-15);
        assert!(frobenius(morse_gradient(&top).unwrap().matrix()) < 1e-15);
        assert!(frobenius(morse_gradient(&bottom).unwrap().matrix()) < 1e-15);
    }

    #[test]
    fn hessian_at_both_critical_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = sample::special_orthogonal(&mut rng, 4);
        let top = morse_hessian_spectrum(&critical_point(2, 1.0, Some(&r)).unwrap()).unwrap();
        assert_eq!(top.index, 4);
        assert!(top.horizontal.iter().all(|v| (v + 2.0).abs() < 1e-3), "{:?}", top.horizontal);
        assert!(top.fiber_max < 1e-3);
        let bottom = morse_hessian_spectrum(&critical_point(2, -1.0, Some(&r)).unwrap()).unwrap();
        assert_eq!(bottom.index, 0);
        assert!(bottom.horizontal.iter().all(|v| (v - 2.0).abs() < 1e-3), "{:?}", bottom.horizontal);
    }

    #[test]
    fn hessian_rejects_regular_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_state(&mut rng, 2).unwrap();
        assert!(matches!(morse_hessian_spectrum(&a), Err(Error::NotCritical { .. })));
    }

    #[test]
    fn gradient_matches_difference_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_state(&mut rng, 2).unwrap();
        let v = sample::skew_tangent(&mut rng, &a).into_matrix();
        assert!(gradient_fd_gap(&a, &v, 1e-5).unwrap() < 1e-7);
        let st = MorseState::new(a).unwrap();
        assert!(st.h.abs() <= 2.0 && st.grad_norm > 0.0);
    }

    #[test]
    fn ascent_reaches_the_top() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = random_state(&mut rng, 2).unwrap();
        let out = gradient_ascent(&a, &AscentConfig::default()).unwrap();
        assert!(out.stopped);
        assert!(2.0 - out.final_h < 1e-6, "{out:?}");
    }
}
