//! Exact combinatorial primitives: factorials, multinomials, weak
//! compositions, Stirling numbers of the second kind, and complete
//! homogeneous symmetric functions.
//!
//! Everything returns arbitrary-precision integers or rationals; no
//! rounding anywhere. Inputs stay at desk scale (m, n of a few dozen),
//! so iterative products beat lookup tables on simplicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// k!, exact.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1); // divides exactly at each step
    }
    acc
}

/// A weak composition of `total()` into `len()` ordered nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Multinomial coefficient total! / (i_1! ... i_n!). The caller owns the
/// bookkeeping that the parts sum to `total`; a mismatch is a bug here,
/// not an input error.
pub fn multinomial(total: u64, parts: &Composition) -> BigInt {
    assert_eq!(
        parts.total(),
        total,
        "multinomial: parts sum to {} but total is {total}",
        parts.total()
    );
    let mut num = factorial(total);
    for &p in parts.parts() {
        num /= factorial(p);
    }
    num
}

/// Rising factorial quotient (alpha + i - 1)! / (alpha - 1)!
/// = alpha (alpha+1) ... (alpha+i-1), with the empty product 1 at i = 0.
pub fn rising_factorial_ratio(alpha: u64, i: u64) -> BigInt {
    assert!(alpha >= 1, "rising_factorial_ratio: alpha must be positive");
    let mut acc = BigInt::one();
    for step in 0..i {
        acc *= alpha + step;
    }
    acc
}

/// Streams every weak composition of `m` into `n` parts exactly once.
/// Order starts at (m, 0, ..., 0) and ends at (0, ..., 0, m); the count
/// is C(m+n-1, n-1).
pub fn compositions(m: u64, n: usize) -> CompositionIter {
    assert!(n >= 1, "compositions: need at least one part");
    CompositionIter {
        next: Some({
            let mut parts = vec![0u64; n];
            parts[0] = m;
            parts
        }),
    }
}

pub struct CompositionIter {
    next: Option<Vec<u64>>,
}

impl Iterator for CompositionIter {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let n = current.len();
        let m: u64 = current.iter().sum();
        if current[n - 1] != m || n == 1 {
            // advance: move one unit from the first nonzero part rightward,
            // dumping its remainder back into part 0
            if n > 1 {
                let mut next = current.clone();
                let i = next.iter().position(|&p| p > 0).unwrap();
                let v = next[i];
                next[i] = 0;
                next[0] = v - 1;
                next[i + 1] += 1;
                self.next = Some(next);
            }
        }
        Some(Composition::new(current))
    }
}

/// S(k, j) by the standard recurrence S(k, j) = j S(k-1, j) + S(k-1, j-1)
/// with S(0, 0) = 1. Out-of-range arguments (j > k, or j = 0 < k) return
/// zero rather than erroring; that is the usual convention and the only
/// one callers here rely on.
pub fn stirling2_recurrence(k: u64, j: u64) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one(); // S(0,0)
    }
    if j == 0 {
        return BigInt::zero();
    }
    // rolling row of the DP table
    let mut row = vec![BigInt::zero(); (k + 1) as usize];
    row[0] = BigInt::one();
    for _level in 1..=k {
        for col in (1..=(k as usize)).rev() {
            row[col] = &row[col] * col + &row[col - 1];
        }
        row[0] = BigInt::zero();
    }
    row[j as usize].clone()
}

/// S(m+n, n) by the alternating-sum formula
/// (1/n!) sum_{i=0}^{n} (-1)^{n-i} C(n,i) i^{m+n}, exact.
/// The result is an integer-valued rational; the division by n! is left
/// visible so the test suite can observe exactness.
pub fn stirling2_explicit(m: u64, n: u64) -> Rational {
    assert!(n >= 1, "stirling2_explicit: n must be positive");
    let mut sum = BigInt::zero();
    for i in 0..=n {
        let term = binomial(n, i) * BigInt::from(i).pow((m + n) as u32);
        if (n - i) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational::new(sum, factorial(n))
}

/// Complete homogeneous symmetric function h_r(xs): the sum of all
/// degree-r monomials. h_0 = 1 and h_r = 0 for r < 0 by convention.
///
/// Small degrees go through composition enumeration (the transparent
/// definition); larger ones through the variable-by-variable recurrence
/// h_r(x_1..x_i) = h_r(x_1..x_{i-1}) + x_i h_{r-1}(x_1..x_i), which is
/// O(r n). The two paths are cross-checked in the tests.
pub fn homogeneous_symmetric(r: i64, xs: &[Rational]) -> Rational {
    assert!(!xs.is_empty(), "homogeneous_symmetric: need variables");
    if r < 0 {
        return Rational::zero();
    }
    if r <= 8 {
        homogeneous_symmetric_by_enumeration(r as u64, xs)
    } else {
        homogeneous_symmetric_by_recurrence(r as u64, xs)
    }
}

/// Oracle path: enumerate the weak compositions of r and sum the monomials.
pub fn homogeneous_symmetric_by_enumeration(r: u64, xs: &[Rational]) -> Rational {
    let mut sum = Rational::zero();
    for comp in compositions(r, xs.len()) {
        let mut term = Rational::one();
        for (x, &e) in xs.iter().zip(comp.parts()) {
            for _ in 0..e {
                term *= x;
            }
        }
        sum += term;
    }
    sum
}

/// Fast path: dynamic program over degrees and variables.
pub fn homogeneous_symmetric_by_recurrence(r: u64, xs: &[Rational]) -> Rational {
    // h[d] = h_d of the variables consumed so far
    let mut h = vec![Rational::zero(); (r + 1) as usize];
    h[0] = Rational::one();
    for x in xs {
        for d in 1..=(r as usize) {
            let add = &h[d - 1] * x;
            h[d] += add;
        }
    }
    h[r as usize].clone()
}
