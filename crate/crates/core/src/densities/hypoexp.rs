//! Density of a sum of independent exponentials with distinct rates.
//!
//! The density is a signed mixture of exponential atoms,
//! f(x) = sum_k c_k exp(-lambda_k x) with
//! c_k = (prod_j lambda_j) / prod_{l != k} (lambda_l - lambda_k).
//! The weights satisfy sum_k c_k / lambda_k = 1 exactly; that is the
//! total probability mass and doubles as an identity check.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, to_f64, Rational};

/// Distinct positive rates lambda_1 .. lambda_n, n >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct RateParams {
    rates: Vec<Rational>,
}

impl RateParams {
    pub fn new(rates: Vec<Rational>) -> Result<Self> {
        if rates.len() < 2 {
            return Err(Error::TooFewParameters {
                need: 2,
                got: rates.len(),
            });
        }
        for r in &rates {
            if !r.is_positive() {
                return Err(Error::NonPositive(format!("rate {}", r)));
            }
        }
        for i in 0..rates.len() {
            for j in (i + 1)..rates.len() {
                if rates[i] == rates[j] {
                    return Err(Error::DuplicateRates(format!(
                        "rates must be distinct: rate {} appears twice",
                        rates[i]
                    )));
                }
            }
        }
        Ok(RateParams { rates })
    }

    /// Float-mode constructor. Refuses clustered rates: the mixture weights
    /// divide by pairwise differences, and below a relative gap of 1e-6 the
    /// cancellation destroys every significant digit in f64. Exact-mode
    /// construction has no such limit.
    pub fn from_f64(rates: &[f64]) -> Result<Self> {
        let max = rates.iter().cloned().fold(0.0f64, f64::max);
        let mut min_gap = f64::INFINITY;
        for i in 0..rates.len() {
            for j in (i + 1)..rates.len() {
                min_gap = min_gap.min((rates[i] - rates[j]).abs());
            }
        }
        if max > 0.0 && min_gap / max < 1e-6 {
            return Err(Error::ClusteredRates { gap: min_gap / max });
        }
        let rats = rates
            .iter()
            .map(|&x| Rational::from_float(x).ok_or(Error::NonPositive(format!("rate {x}"))))
            .collect::<Result<Vec<_>>>()?;
        RateParams::new(rats)
    }

    pub fn rates(&self) -> &[Rational] {
        &self.rates
    }

    pub fn len(&self) -> usize {
        self.rates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rates.is_empty()
    }

    pub fn min_rate(&self) -> &Rational {
        self.rates.iter().min().unwrap()
    }
}

/// The density as weighted exponential atoms on [0, inf).
#[derive(Debug, Clone, PartialEq)]
pub struct ExpMixDensity {
    /// (weight c_k, rate lambda_k)
    atoms: Vec<(Rational, Rational)>,
}

/// Builds the atom weights of the mixture density, exactly.
pub fn hypoexp_density(params: &RateParams) -> ExpMixDensity {
    let rates = params.rates();
    let product: Rational = rates.iter().fold(Rational::one(), |acc, r| acc * r);
    let atoms = rates
        .iter()
        .enumerate()
        .map(|(k, rk)| {
            let mut denom = Rational::one();
            for (l, rl) in rates.iter().enumerate() {
                if l != k {
                    denom *= rl - rk;
                }
            }
            (&product / denom, rk.clone())
        })
        .collect();
    ExpMixDensity { atoms }
}

impl ExpMixDensity {
    pub fn atoms(&self) -> &[(Rational, Rational)] {
        &self.atoms
    }

    /// sum_k c_k / lambda_k, exactly. Equals 1 for every valid parameter
    /// set; exposed so the tests can assert it rather than trust it.
    pub fn weight_mass(&self) -> Rational {
        self.atoms
            .iter()
            .fold(Rational::zero(), |acc, (c, l)| acc + c / l)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        self.atoms
            .iter()
            .map(|(c, l)| to_f64(c) * (-to_f64(l) * x).exp())
            .sum()
    }

    pub fn atoms_json(&self) -> Vec<AtomJson> {
        self.atoms
            .iter()
            .map(|(c, l)| AtomJson {
                weight: format_rational(c),
                rate: format_rational(l),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AtomJson {
    pub weight: String,
    pub rate: String,
}

/// The alternating Vandermonde sum
/// sum_k (-1)^k prod_{1<=j<l<=n; j,l != k} (lambda_l - lambda_j),
/// computed exactly. It is the expansion of a determinant with a
/// duplicated column, so the contract is that it returns zero; callers
/// verify rather than assume.
pub fn vandermonde_zero(params: &RateParams) -> Rational {
    let rates = params.rates();
    let n = rates.len();
    let mut sum = Rational::zero();
    for k in 0..n {
        let mut prod = Rational::one();
        for j in 0..n {
            for l in (j + 1)..n {
                if j != k && l != k {
                    prod *= &rates[l] - &rates[j];
                }
            }
        }
        if (k + 1) % 2 == 1 {
            // (-1)^k with 1-based k
            sum -= prod;
        } else {
            sum += prod;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn params(rates: &[i64]) -> RateParams {
        RateParams::new(rates.iter().map(|&r| rat(r)).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            RateParams::new(vec![rat(1)]),
            Err(Error::TooFewParameters { .. })
        ));
        assert!(matches!(
            RateParams::new(vec![rat(1), rat(1)]),
            Err(Error::DuplicateRates(_))
        ));
        assert!(matches!(
            RateParams::new(vec![rat(1), rat(-2)]),
            Err(Error::NonPositive(_))
        ));
    }

    #[test]
    fn clustered_rates_refused_in_float_mode_only() {
        let err = RateParams::from_f64(&[1.0, 1.0 + 1e-9, 2.0]);
        assert!(matches!(err, Err(Error::ClusteredRates { .. })));
        // the same gap is fine through the exact constructor
        let exact = RateParams::new(vec![rat(1), rat(1) + ratio(1, 1_000_000_000), rat(2)]);
        assert!(exact.is_ok());
        assert!(RateParams::from_f64(&[1.0, 2.0]).is_ok());
    }

    #[test]
    fn two_rate_mixture_weights() {
        // f(x) = 2(e^{-x} - e^{-2x})
        let d = hypoexp_density(&params(&[1, 2]));
        assert_eq!(d.atoms(), &[(rat(2), rat(1)), (rat(-2), rat(2))]);
    }

    #[test]
    fn three_rate_mixture_weights() {
        let d = hypoexp_density(&params(&[1, 2, 3]));
        let weights: Vec<_> = d.atoms().iter().map(|(c, _)| c.clone()).collect();
        assert_eq!(weights, vec![rat(3), rat(-6), rat(3)]);
        assert_eq!(d.weight_mass(), rat(1));
    }

    /// Convolution quadrature oracle: numerically convolve the exponential
    /// densities with Simpson panels and compare pointwise.
    fn conv3_quadrature(lams: [f64; 3], x: f64) -> f64 {
        let f = |lam: f64, t: f64| if t >= 0.0 { lam * (-lam * t).exp() } else { 0.0 };
        let n = 600;
        let simpson = |g: &dyn Fn(f64) -> f64, a: f64, b: f64| {
            let h = (b - a) / n as f64;
            let mut s = g(a) + g(b);
            for i in 1..n {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                s += w * g(a + i as f64 * h);
            }
            s * h / 3.0
        };
        // (f1 * f2)(u) then ((f1*f2) * f3)(x)
        let f12 = |u: f64| simpson(&|t| f(lams[0], t) * f(lams[1], u - t), 0.0, u.max(0.0));
        simpson(&|u| f12(u) * f(lams[2], x - u), 0.0, x)
    }

    #[test]
    fn mixture_matches_convolution_quadrature() {
        let d = hypoexp_density(&params(&[1, 2, 3]));
        for &x in &[0.3, 1.0, 2.5] {
            let direct = d.eval_f64(x);
            let quad = conv3_quadrature([1.0, 2.0, 3.0], x);
            assert!(
                (direct - quad).abs() < 1e-6,
                "x={x}: mixture {direct} vs quadrature {quad}"
            );
        }
    }

    #[test]
    fn eval_outside_support_is_zero() {
        let d = hypoexp_density(&params(&[1, 2]));
        assert_eq!(d.eval_f64(-0.5), 0.0);
        // f(0) = sum of weights = 0 for n = 2
        assert!(d.eval_f64(0.0).abs() < 1e-15);
    }

    /// Exact determinant by fraction-free Gaussian elimination, for the
    /// duplicated-column matrix [1 | 1 | lambda | ... | lambda^{n-2}].
    fn duplicated_column_det(rates: &[Rational]) -> Rational {
        let n = rates.len();
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(n);
                row.push(Rational::one());
                row.push(Rational::one());
                let mut p = Rational::one();
                for _ in 0..n.saturating_sub(2) {
                    p *= &rates[i];
                    row.push(p.clone());
                }
                row
            })
            .collect();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else { return Rational::zero() };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det *= m[col][col].clone();
            let pv = m[col][col].clone();
            for r in (col + 1)..n {
                let factor = &m[r][col] / &pv;
                for c in col..n {
                    let sub = &m[col][c] * &factor;
                    m[r][c] -= sub;
                }
            }
        }
        det
    }

    #[test]
    fn vandermonde_sum_vanishes() {
        assert_eq!(vandermonde_zero(&params(&[1, 2])), rat(0));
        assert_eq!(vandermonde_zero(&params(&[1, 2, 3])), rat(0));
        let mixed = RateParams::new(vec![ratio(1, 2), rat(3), rat(7), rat(10)]).unwrap();
        assert_eq!(vandermonde_zero(&mixed), rat(0));
        // determinant oracle agrees that the duplicated-column matrix is singular
        assert_eq!(duplicated_column_det(mixed.rates()), rat(0));
    }
}
