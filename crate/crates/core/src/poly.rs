//! Dense polynomials with exact rational coefficients, and piecewise
//! polynomials over a strictly increasing knot sequence.
//!
//! These carry the uniform-sum densities: truncated powers (x - s)_+^d
//! expand to ordinary polynomials piece by piece, and moments reduce to
//! term-wise power-rule integration.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::rational::{format_rational, to_f64, Rational};

/// Polynomial with ascending rational coefficients; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// (x - shift)^degree expanded by the binomial theorem.
    pub fn shifted_power(shift: &Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        let neg = -shift.clone();
        // coefficient of x^k: C(d, k) (-shift)^{d-k}
        let mut pow = Rational::one();
        for k in (0..=degree).rev() {
            let c = Rational::from_integer(binomial(degree as u64, k as u64));
            coeffs[k] = c * &pow;
            pow *= &neg;
        }
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    pub fn add_scaled(&mut self, other: &Poly, scale: &Rational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src * scale;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiply by x^m.
    pub fn mul_xpow(&self, m: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer((k as i64 + 1).into()));
        }
        Poly::new(coeffs)
    }

    /// Exact definite integral over [a, b].
    pub fn integral(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }
}

/// One polynomial piece of a piecewise density, serialized with exact
/// endpoints and coefficients.
#[derive(Debug, Clone, Serialize)]
pub struct PieceJson {
    pub from: String,
    pub to: String,
    pub coeffs: Vec<String>,
}

/// Piecewise polynomial on knots t_0 < ... < t_K with one polynomial per
/// interval [t_k, t_{k+1}]; identically zero outside [t_0, t_K].
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly {
    knots: Vec<Rational>,
    pieces: Vec<Poly>,
}

impl PiecewisePoly {
    pub fn new(knots: Vec<Rational>, pieces: Vec<Poly>) -> Self {
        assert_eq!(knots.len(), pieces.len() + 1, "one piece per interval");
        assert!(
            knots.windows(2).all(|w| w[0] < w[1]),
            "knots must be strictly increasing"
        );
        PiecewisePoly { knots, pieces }
    }

    pub fn knots(&self) -> &[Rational] {
        &self.knots
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn support(&self) -> (&Rational, &Rational) {
        (self.knots.first().unwrap(), self.knots.last().unwrap())
    }

    fn piece_index(&self, x: &Rational) -> Option<usize> {
        if x < self.knots.first().unwrap() || x > self.knots.last().unwrap() {
            return None;
        }
        // rightmost interval whose left knot is <= x; x = t_K lands in the last
        let mut idx = match self.knots.binary_search_by(|k| k.cmp(x)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        if idx == self.pieces.len() {
            idx -= 1;
        }
        Some(idx)
    }

    /// Exact evaluation; zero outside the support.
    pub fn eval(&self, x: &Rational) -> Rational {
        match self.piece_index(x) {
            Some(i) => self.pieces[i].eval(x),
            None => Rational::zero(),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        match Rational::from_float(x) {
            Some(xr) => to_f64(&self.eval(&xr)),
            None => 0.0,
        }
    }

    /// Exact total integral over the support.
    pub fn integral(&self) -> Rational {
        self.moment(0)
    }

    /// Exact m-th raw moment: integral of x^m times the function.
    pub fn moment(&self, m: u64) -> Rational {
        let mut total = Rational::zero();
        for (k, piece) in self.pieces.iter().enumerate() {
            let integrand = piece.mul_xpow(m as usize);
            total += integrand.integral(&self.knots[k], &self.knots[k + 1]);
        }
        total
    }

    /// Adjacent pieces agree exactly at every interior knot.
    pub fn is_continuous(&self) -> bool {
        self.pieces.windows(2).enumerate().all(|(k, w)| {
            let t = &self.knots[k + 1];
            w[0].eval(t) == w[1].eval(t)
        })
    }

    /// Values at all knots and piece midpoints are >= 0. A sampled sanity
    /// check; nonnegativity everywhere is a property of the construction.
    pub fn is_nonnegative_sampled(&self) -> bool {
        let half = Rational::new(1.into(), 2.into());
        self.knots.iter().all(|t| !self.eval(t).is_negative())
            && (0..self.pieces.len()).all(|k| {
                let mid = (&self.knots[k] + &self.knots[k + 1]) * &half;
                !self.pieces[k].eval(&mid).is_negative()
            })
    }

    pub fn pieces_json(&self) -> Vec<PieceJson> {
        (0..self.pieces.len())
            .map(|k| PieceJson {
                from: format_rational(&self.knots[k]),
                to: format_rational(&self.knots[k + 1]),
                coeffs: self.pieces[k]
                    .coeffs()
                    .iter()
                    .map(format_rational)
                    .collect(),
            })
            .collect()
    }
}
