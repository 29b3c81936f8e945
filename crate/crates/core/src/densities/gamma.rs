//! Density of a sum of independent gamma variables as a single-kernel
//! series.
//!
//! With the scales ordered so beta_1 is minimal, the density is
//! rho * sum_j delta_j * GammaDensity(A + j, beta_1)(x), where
//! A = sum alpha_i, rho = prod (beta_1/beta_i)^{alpha_i}, and the
//! delta_j come from the recursion
//!   delta_{j+1} = (1/(j+1)) sum_{l=1}^{j+1} l gamma_l delta_{j+1-l},
//!   gamma_l = sum_i alpha_i (1 - beta_1/beta_i)^l / l.
//!
//! Every term is nonnegative and the full series carries total mass 1,
//! so the partial-sum mass deficit 1 - rho * sum_{j<=J} delta_j is a
//! certified, monotone truncation gauge. Integer shapes keep the whole
//! coefficient pipeline in exact rationals; non-integer shapes switch to
//! f64 with log-space term evaluation.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{ln_f64, to_f64, Rational};

/// Shapes and scales of the summands, validated and normalized so the
/// minimum scale sits first (ties keep the earliest occurrence; a tied
/// scale contributes nothing to the gamma_l anyway).
#[derive(Debug, Clone, PartialEq)]
pub struct GammaParams {
    shapes: Vec<Rational>,
    scales: Vec<Rational>,
}

impl GammaParams {
    pub fn new(shapes: Vec<Rational>, scales: Vec<Rational>) -> Result<Self> {
        if shapes.len() != scales.len() {
            return Err(Error::LengthMismatch(format!(
                "{} shapes vs {} scales",
                shapes.len(),
                scales.len()
            )));
        }
        if shapes.is_empty() {
            return Err(Error::TooFewParameters { need: 1, got: 0 });
        }
        for a in &shapes {
            if !a.is_positive() {
                return Err(Error::NonPositive(format!("shape {a}")));
            }
        }
        for b in &scales {
            if !b.is_positive() {
                return Err(Error::NonPositive(format!("scale {b}")));
            }
        }
        let mut p = GammaParams { shapes, scales };
        let min_idx = (0..p.scales.len())
            .min_by(|&i, &j| p.scales[i].cmp(&p.scales[j]))
            .unwrap();
        p.shapes.swap(0, min_idx);
        p.scales.swap(0, min_idx);
        // keep the rest in original order
        p.shapes[1..].rotate_left(0);
        if min_idx > 0 {
            // restore order of displaced element: swap put shapes[0] at min_idx
            let s = p.shapes.remove(min_idx);
            p.shapes.insert(1, s);
            let b = p.scales.remove(min_idx);
            p.scales.insert(1, b);
        }
        Ok(p)
    }

    pub fn from_f64(shapes: &[f64], scales: &[f64]) -> Result<Self> {
        let conv = |xs: &[f64]| -> Result<Vec<Rational>> {
            xs.iter()
                .map(|&x| Rational::from_float(x).ok_or(Error::NonPositive(format!("{x}"))))
                .collect()
        };
        GammaParams::new(conv(shapes)?, conv(scales)?)
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shapes(&self) -> &[Rational] {
        &self.shapes
    }

    pub fn scales(&self) -> &[Rational] {
        &self.scales
    }

    /// Integer shape vector, when every shape is an integer.
    pub fn integer_shapes(&self) -> Option<Vec<u64>> {
        self.shapes
            .iter()
            .map(|a| a.is_integer().then(|| a.to_integer().to_u64()).flatten())
            .collect()
    }

    /// sum alpha_i beta_i, exact.
    pub fn mean(&self) -> Rational {
        self.shapes
            .iter()
            .zip(&self.scales)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Builds the series, exact when the shapes allow it, f64 otherwise.
    pub fn build_series(&self, tolerance: f64, max_order: usize) -> GammaDensity {
        match gamma_series(self, tolerance, max_order) {
            Ok(s) => GammaDensity::Exact(s),
            Err(_) => GammaDensity::Float(gamma_series_f64_from(self, tolerance, max_order)),
        }
    }
}

/// Exact-coefficient series (integer shapes).
#[derive(Debug, Clone)]
pub struct GammaSeries {
    rho: Rational,
    a_total: u64,
    beta1: Rational,
    gammas: Vec<Rational>,
    deltas: Vec<Rational>,
    deficit: Rational,
    deficit_trace: Vec<f64>,
    truncated: bool,
}

fn build_exact<F>(params: &GammaParams, shapes: &[u64], max_order: usize, stop: F) -> GammaSeries
where
    F: Fn(&Rational, usize) -> bool,
{
    let beta1 = params.scales()[0].clone();
    let a_total: u64 = shapes.iter().sum();
    let mut rho = Rational::one();
    for (&a, b) in shapes.iter().zip(params.scales()) {
        rho *= (&beta1 / b).pow(a as i32);
    }
    // q_i = 1 - beta1/beta_i, all in [0, 1)
    let qs: Vec<Rational> = params
        .scales()
        .iter()
        .map(|b| Rational::one() - &beta1 / b)
        .collect();
    let mut qpow: Vec<Rational> = vec![Rational::one(); qs.len()];

    let mut gammas: Vec<Rational> = Vec::new(); // gamma_1..gamma_J
    let mut lgammas: Vec<Rational> = Vec::new(); // l * gamma_l
    let mut deltas = vec![Rational::one()];
    let mut partial = rho.clone(); // rho * sum deltas
    let mut deficit = Rational::one() - &partial;
    let mut trace = vec![to_f64(&deficit).max(0.0)];
    let mut truncated = false;

    let mut j = 0usize;
    while !stop(&deficit, j) {
        if j >= max_order {
            truncated = true;
            break;
        }
        // next l = j + 1: extend gamma_l
        let l = j + 1;
        let mut lg = Rational::zero();
        for (i, q) in qs.iter().enumerate() {
            qpow[i] *= q;
            if !qpow[i].is_zero() {
                lg += &params.shapes()[i] * &qpow[i];
            }
        }
        gammas.push(&lg / Rational::from_integer((l as i64).into()));
        lgammas.push(lg);
        // delta_{j+1} = (1/(j+1)) sum_{l=1}^{j+1} l gamma_l delta_{j+1-l}
        let mut s = Rational::zero();
        for l in 1..=(j + 1) {
            if !lgammas[l - 1].is_zero() {
                s += &lgammas[l - 1] * &deltas[j + 1 - l];
            }
        }
        let delta = s / Rational::from_integer((j as i64 + 1).into());
        partial += &rho * &delta;
        deltas.push(delta);
        deficit = Rational::one() - &partial;
        trace.push(to_f64(&deficit).max(0.0));
        j += 1;
    }

    GammaSeries {
        rho,
        a_total,
        beta1,
        gammas,
        deltas,
        deficit,
        deficit_trace: trace,
        truncated,
    }
}

/// Builds the exact series out to the smallest order J at which the mass
/// deficit drops below `tolerance`, capped at `max_order` (the truncation
/// flag is set if the cap hits first). Requires integer shapes.
pub fn gamma_series(params: &GammaParams, tolerance: f64, max_order: usize) -> Result<GammaSeries> {
    let shapes = params.integer_shapes().ok_or_else(|| {
        Error::NonIntegerShape(
            params
                .shapes()
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
    })?;
    let tol = Rational::from_float(tolerance).unwrap_or_else(Rational::zero);
    Ok(build_exact(params, &shapes, max_order, move |deficit, _| {
        deficit < &tol
    }))
}

/// Builds the exact series far enough that the crude moment-tail envelope
/// deficit * (A+J+m)^m * beta1^m falls below `tolerance`. The envelope is
/// the reported truncation companion for moment sums; the mass criterion
/// is the m = 0 special case.
pub fn gamma_series_for_moment(
    params: &GammaParams,
    tolerance: f64,
    m: u64,
    max_order: usize,
) -> Result<GammaSeries> {
    let shapes = params.integer_shapes().ok_or_else(|| {
        Error::NonIntegerShape(
            params
                .shapes()
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
    })?;
    let tol = Rational::from_float(tolerance).unwrap_or_else(Rational::zero);
    let a_total: u64 = shapes.iter().sum();
    let beta1 = params.scales()[0].clone();
    let beta_pow = beta1.pow(m as i32);
    Ok(build_exact(params, &shapes, max_order, move |deficit, j| {
        let factor = Rational::from_integer((a_total + j as u64 + m).into()).pow(m as i32);
        deficit * factor * &beta_pow < tol
    }))
}

impl GammaSeries {
    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn a_total(&self) -> u64 {
        self.a_total
    }

    pub fn beta1(&self) -> &Rational {
        &self.beta1
    }

    pub fn deltas(&self) -> &[Rational] {
        &self.deltas
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    /// Truncation order J (deltas run 0..=J).
    pub fn order(&self) -> usize {
        self.deltas.len() - 1
    }

    pub fn mass_deficit(&self) -> &Rational {
        &self.deficit
    }

    pub fn mass_deficit_f64(&self) -> f64 {
        to_f64(&self.deficit).max(0.0)
    }

    /// Mass deficit after each order 0..=J; nonincreasing by construction.
    pub fn deficit_trace(&self) -> &[f64] {
        &self.deficit_trace
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Partial sum of the series mean: rho * beta1 * sum delta_j (A+j).
    pub fn mean_partial(&self) -> Rational {
        self.moment_partial(1)
    }

    /// Partial sum of the m-th raw moment:
    /// rho * beta1^m * sum_j delta_j (A+j)(A+j+1)...(A+j+m-1).
    pub fn moment_partial(&self, m: u64) -> Rational {
        let mut sum = Rational::zero();
        for (j, d) in self.deltas.iter().enumerate() {
            let mut rising = Rational::one();
            for t in 0..m {
                rising *= Rational::from_integer((self.a_total + j as u64 + t).into());
            }
            sum += d * rising;
        }
        &self.rho * self.beta1.pow(m as i32) * sum
    }

    /// Crude certified envelope on the truncated moment tail:
    /// deficit * (A+J+m)^m * beta1^m.
    pub fn truncation_envelope(&self, m: u64) -> f64 {
        let factor = Rational::from_integer((self.a_total + self.order() as u64 + m).into())
            .pow(m as i32);
        to_f64(&(&self.deficit * factor * self.beta1.pow(m as i32))).max(0.0)
    }

    /// Density value at x via log-space term evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let ln_rho = ln_f64(&self.rho);
        let ln_beta1 = ln_f64(&self.beta1);
        let inv_beta1 = 1.0 / to_f64(&self.beta1);
        let mut sum = 0.0;
        for (j, d) in self.deltas.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let k = self.a_total + j as u64; // kernel shape A + j
            if x == 0.0 {
                if k == 1 {
                    sum += to_f64(&self.rho) * to_f64(d) * inv_beta1;
                }
                continue;
            }
            let ln_term = ln_rho + ln_f64(d) + (k as f64 - 1.0) * x.ln()
                - x * inv_beta1
                - ln_gamma(k as f64)
                - k as f64 * ln_beta1;
            sum += ln_term.exp();
        }
        sum
    }
}

/// Float-mode series for non-integer shapes.
#[derive(Debug, Clone)]
pub struct GammaSeriesF64 {
    rho: f64,
    a_total: f64,
    beta1: f64,
    deltas: Vec<f64>,
    deficit: f64,
    deficit_trace: Vec<f64>,
    truncated: bool,
}

fn gamma_series_f64_from(params: &GammaParams, tolerance: f64, max_order: usize) -> GammaSeriesF64 {
    let shapes: Vec<f64> = params.shapes().iter().map(to_f64).collect();
    let scales: Vec<f64> = params.scales().iter().map(to_f64).collect();
    gamma_series_f64(&shapes, &scales, tolerance, max_order)
        .expect("params validated before conversion")
}

/// f64 twin of [`gamma_series`] for arbitrary positive real shapes.
pub fn gamma_series_f64(
    shapes: &[f64],
    scales: &[f64],
    tolerance: f64,
    max_order: usize,
) -> Result<GammaSeriesF64> {
    if shapes.len() != scales.len() {
        return Err(Error::LengthMismatch(format!(
            "{} shapes vs {} scales",
            shapes.len(),
            scales.len()
        )));
    }
    if shapes.is_empty() {
        return Err(Error::TooFewParameters { need: 1, got: 0 });
    }
    if let Some(&bad) = shapes.iter().chain(scales).find(|&&v| !(v > 0.0)) {
        return Err(Error::NonPositive(format!("{bad}")));
    }
    let mut order: Vec<usize> = (0..scales.len()).collect();
    let min_idx = order
        .iter()
        .cloned()
        .min_by(|&i, &j| scales[i].partial_cmp(&scales[j]).unwrap())
        .unwrap();
    order.retain(|&i| i != min_idx);
    order.insert(0, min_idx);
    let shapes: Vec<f64> = order.iter().map(|&i| shapes[i]).collect();
    let scales: Vec<f64> = order.iter().map(|&i| scales[i]).collect();

    let beta1 = scales[0];
    let a_total: f64 = shapes.iter().sum();
    let rho: f64 = shapes
        .iter()
        .zip(&scales)
        .map(|(a, b)| (beta1 / b).powf(*a))
        .product();
    let qs: Vec<f64> = scales.iter().map(|b| 1.0 - beta1 / b).collect();

    let mut qpow = vec![1.0f64; qs.len()];
    let mut lgammas: Vec<f64> = Vec::new();
    let mut deltas = vec![1.0f64];
    let mut partial = rho;
    let mut deficit = (1.0 - partial).max(0.0);
    let mut trace = vec![deficit];
    let mut truncated = false;

    let mut j = 0usize;
    while deficit >= tolerance {
        if j >= max_order {
            truncated = true;
            break;
        }
        let mut lg = 0.0;
        for (i, &q) in qs.iter().enumerate() {
            qpow[i] *= q;
            lg += shapes[i] * qpow[i];
        }
        lgammas.push(lg);
        let mut s = 0.0;
        for l in 1..=(j + 1) {
            s += lgammas[l - 1] * deltas[j + 1 - l];
        }
        let delta = s / (j as f64 + 1.0);
        partial += rho * delta;
        deltas.push(delta);
        deficit = (1.0 - partial).max(0.0);
        trace.push(deficit);
        j += 1;
    }

    Ok(GammaSeriesF64 {
        rho,
        a_total,
        beta1,
        deltas,
        deficit,
        deficit_trace: trace,
        truncated,
    })
}

impl GammaSeriesF64 {
    pub fn order(&self) -> usize {
        self.deltas.len() - 1
    }

    pub fn mass_deficit(&self) -> f64 {
        self.deficit
    }

    pub fn deficit_trace(&self) -> &[f64] {
        &self.deficit_trace
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn a_total(&self) -> f64 {
        self.a_total
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }

    pub fn mean_partial(&self) -> f64 {
        self.moment_partial(1)
    }

    pub fn moment_partial(&self, m: u64) -> f64 {
        let mut sum = 0.0;
        for (j, d) in self.deltas.iter().enumerate() {
            let mut rising = 1.0;
            for t in 0..m {
                rising *= self.a_total + j as f64 + t as f64;
            }
            sum += d * rising;
        }
        self.rho * self.beta1.powi(m as i32) * sum
    }

    pub fn truncation_envelope(&self, m: u64) -> f64 {
        self.deficit
            * (self.a_total + self.order() as f64 + m as f64).powi(m as i32)
            * self.beta1.powi(m as i32)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let mut sum = 0.0;
        for (j, &d) in self.deltas.iter().enumerate() {
            if d <= 0.0 {
                continue;
            }
            let k = self.a_total + j as f64;
            if x == 0.0 {
                if k == 1.0 {
                    sum += self.rho * d / self.beta1;
                }
                continue;
            }
            let ln_term = self.rho.ln() + d.ln() + (k - 1.0) * x.ln()
                - x / self.beta1
                - ln_gamma(k)
                - k * self.beta1.ln();
            sum += ln_term.exp();
        }
        sum
    }
}

/// Exact-or-float series, chosen by whether the shapes are integers.
#[derive(Debug, Clone)]
pub enum GammaDensity {
    Exact(GammaSeries),
    Float(GammaSeriesF64),
}

impl GammaDensity {
    pub fn eval_f64(&self, x: f64) -> f64 {
        match self {
            GammaDensity::Exact(s) => s.eval_f64(x),
            GammaDensity::Float(s) => s.eval_f64(x),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GammaDensity::Exact(s) => s.order(),
            GammaDensity::Float(s) => s.order(),
        }
    }

    pub fn mass_deficit_f64(&self) -> f64 {
        match self {
            GammaDensity::Exact(s) => s.mass_deficit_f64(),
            GammaDensity::Float(s) => s.mass_deficit(),
        }
    }

    pub fn truncated(&self) -> bool {
        match self {
            GammaDensity::Exact(s) => s.truncated(),
            GammaDensity::Float(s) => s.truncated(),
        }
    }
}

/// Lanczos approximation (g = 7, 9 coefficients), accurate to ~1e-13
/// relative over the positive axis. Used only for f64 density values,
/// never in exact verification paths.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = COEF[0];
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densities::hypoexp::{hypoexp_density, RateParams};
    use crate::rational::{rat, ratio};

    fn gp(shapes: &[i64], scales: &[(i64, i64)]) -> GammaParams {
        GammaParams::new(
            shapes.iter().map(|&a| rat(a)).collect(),
            scales.iter().map(|&(p, q)| ratio(p, q)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalization_puts_min_scale_first() {
        let p = gp(&[1, 2, 3], &[(3, 1), (1, 2), (2, 1)]);
        assert_eq!(p.scales()[0], ratio(1, 2));
        assert_eq!(p.shapes()[0], rat(2));
        // remaining order preserved
        assert_eq!(p.scales()[1..], [rat(3), rat(2)]);
        assert_eq!(p.shapes()[1..], [rat(1), rat(3)]);
    }

    #[test]
    fn validation_errors() {
        assert!(GammaParams::new(vec![rat(1)], vec![]).is_err());
        assert!(GammaParams::new(vec![], vec![]).is_err());
        assert!(GammaParams::new(vec![rat(0)], vec![rat(1)]).is_err());
        assert!(GammaParams::new(vec![rat(1)], vec![rat(-1)]).is_err());
    }

    #[test]
    fn equal_scales_collapse_to_single_term() {
        let p = gp(&[2, 3], &[(2, 1), (2, 1)]);
        let s = gamma_series(&p, 1e-12, 100).unwrap();
        assert_eq!(s.order(), 0);
        assert_eq!(s.rho(), &rat(1));
        assert_eq!(s.deltas(), &[rat(1)]);
        assert_eq!(s.mass_deficit(), &rat(0));
        assert!(!s.truncated());
        // single-gamma moments are exact at J = 0: mean = A * beta
        assert_eq!(s.mean_partial(), rat(10));
    }

    #[test]
    fn single_variable_is_one_term() {
        let p = gp(&[1], &[(1, 1)]);
        let s = gamma_series(&p, 1e-12, 100).unwrap();
        assert_eq!(s.order(), 0);
        assert_eq!(s.rho(), &rat(1));
        // exponential density at 1: e^{-1}
        assert!((s.eval_f64(1.0) - (-1.0f64).exp()).abs() < 1e-12);
        // x = 0 with A = 1: density is 1/beta
        assert!((s.eval_f64(0.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn delta_recursion_holds_for_stored_coefficients() {
        let p = gp(&[1, 2], &[(1, 1), (3, 1)]);
        let s = gamma_series(&p, 1e-10, 500).unwrap();
        assert!(!s.truncated());
        // re-check delta_{j+1} (j+1) = sum l gamma_l delta_{j+1-l}
        for j in 0..s.order() {
            let mut acc = Rational::zero();
            for l in 1..=(j + 1) {
                acc += Rational::from_integer((l as i64).into())
                    * &s.gammas()[l - 1]
                    * &s.deltas()[j + 1 - l];
            }
            let expect = acc / Rational::from_integer((j as i64 + 1).into());
            assert_eq!(s.deltas()[j + 1], expect, "j={j}");
        }
        // deltas nonnegative, deficit trace monotone nonincreasing
        assert!(s.deltas().iter().all(|d| !d.is_negative()));
        assert!(s
            .deficit_trace()
            .windows(2)
            .all(|w| w[1] <= w[0] + 1e-18));
    }

    #[test]
    fn exponential_pair_matches_hypoexp() {
        // Gamma(1, beta) is exponential with rate 1/beta, so
        // alpha=(1,1), beta=(1,2) must match rates (1, 1/2).
        let p = gp(&[1, 1], &[(1, 1), (2, 1)]);
        let s = gamma_series(&p, 1e-14, 2000).unwrap();
        assert!(!s.truncated());
        let tol = s.mass_deficit_f64() + 1e-12;
        let rates = RateParams::new(vec![rat(1), ratio(1, 2)]).unwrap();
        let mix = hypoexp_density(&rates);
        for i in 0..50 {
            let x = 0.25 * i as f64;
            let a = s.eval_f64(x);
            let b = mix.eval_f64(x);
            assert!((a - b).abs() <= tol, "x={x}: series {a} vs mixture {b}");
        }
        // delta_j follows the (1/2)^j pattern for this parameter pair
        for (j, d) in s.deltas().iter().enumerate().take(12) {
            assert_eq!(d, &ratio(1, 2).pow(j as i32), "j={j}");
        }
    }

    #[test]
    fn truncation_cap_sets_flag() {
        let p = gp(&[4, 4], &[(1, 4), (4, 1)]);
        let s = gamma_series(&p, 1e-12, 5).unwrap();
        assert!(s.truncated());
        assert_eq!(s.order(), 5);
        assert!(s.mass_deficit_f64() > 1e-12);
    }

    #[test]
    fn non_integer_shape_rejected_in_exact_mode_and_dispatched() {
        let p = GammaParams::new(vec![ratio(3, 2)], vec![rat(1)]).unwrap();
        assert!(matches!(
            gamma_series(&p, 1e-8, 100),
            Err(Error::NonIntegerShape(_))
        ));
        assert!(matches!(p.build_series(1e-8, 100), GammaDensity::Float(_)));
        let q = gp(&[2], &[(1, 1)]);
        assert!(matches!(q.build_series(1e-8, 100), GammaDensity::Exact(_)));
    }

    #[test]
    fn float_series_tracks_exact_series() {
        let p = gp(&[1, 2], &[(1, 1), (3, 1)]);
        let exact = gamma_series(&p, 1e-10, 1000).unwrap();
        let float = gamma_series_f64(&[1.0, 2.0], &[1.0, 3.0], 1e-10, 1000).unwrap();
        assert_eq!(exact.order(), float.order());
        for (a, b) in exact.deltas().iter().zip(float.deltas()) {
            assert!((to_f64(a) - b).abs() < 1e-12);
        }
        assert!((exact.moment_partial(2).to_f64_lossy() - float.moment_partial(2)).abs() < 1e-9);
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        for k in 1..20u64 {
            let exact: f64 = (1..k).map(|i| (i as f64).ln()).sum();
            assert!(
                (ln_gamma(k as f64) - exact).abs() < 1e-10,
                "ln_gamma({k})"
            );
        }
        // half-integer value: Gamma(1/2) = sqrt(pi)
        assert!((ln_gamma(0.5) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-12);
    }
}
