//! Dense real polynomials of low degree (everything the solver touches is
//! degree two or less).

use std::fmt;

use crate::real::Real;

/// Polynomial with coefficients stored in ascending degree order.
///
/// Trailing zero coefficients are trimmed on construction, so `degree()`
/// always reflects the stored representation. The zero polynomial is stored
/// with no coefficients and reports degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Real> Polynomial<R> {
    pub fn new(coeffs: impl Into<Vec<R>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last().is_some_and(|c| *c == R::zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// Coefficients `c0 + c1 s` as a polynomial.
    pub fn linear(c0: R, c1: R) -> Self {
        Self::new(vec![c0, c1])
    }

    /// Coefficients `c0 + c1 s + c2 s^2` as a polynomial.
    pub fn quadratic(c0: R, c1: R, c2: R) -> Self {
        Self::new(vec![c0, c1, c2])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `s^i`; zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).copied().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, s: R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, &c| acc * s + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs: Vec<R> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * R::of_usize(i))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<R> = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<R> = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: R) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * factor).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn max_abs_coeff(&self) -> R {
        self.coeffs
            .iter()
            .fold(R::zero(), |acc, &c| acc.max(c.abs()))
    }

    /// Real roots, ascending. Degree 0 polynomials have none; quadratics with
    /// negative discriminant return an empty list.
    pub fn real_roots(&self) -> Vec<R> {
        match self.degree() {
            0 => Vec::new(),
            1 => vec![-self.coeff(0) / self.coeff(1)],
            2 => {
                let (c, b, a) = (self.coeff(0), self.coeff(1), self.coeff(2));
                let disc = b * b - R::of(4.0) * a * c;
                if disc < R::zero() {
                    return Vec::new();
                }
                let sq = disc.sqrt();
                // Citardauq form on one root avoids cancellation.
                let q = -(b + b.signum() * sq) / R::of(2.0);
                let (r1, r2) = if b == R::zero() {
                    (-sq / (R::of(2.0) * a), sq / (R::of(2.0) * a))
                } else {
                    (q / a, if q == R::zero() { R::zero() } else { c / q })
                };
                if r1 <= r2 {
                    vec![r1, r2]
                } else {
                    vec![r2, r1]
                }
            }
            _ => unreachable!("solver never builds polynomials above degree 2"),
        }
    }
}

impl<R: Real> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == R::zero() && self.coeffs.len() > 1 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < R::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < R::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*s")?,
                _ => write!(f, "{mag}*s^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![1.0, 2.0, 0.0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeff(2), 0.0);
    }

    #[test]
    fn eval_and_derivative() {
        // 1 - 2s + 3s^2
        let p = Polynomial::quadratic(1.0, -2.0, 3.0);
        assert_eq!(p.eval(2.0), 9.0);
        let d = p.derivative();
        assert_eq!(d, Polynomial::linear(-2.0, 6.0));
        assert_eq!(d.derivative(), Polynomial::constant(6.0));
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::linear(1.0, -1.0); // 1 - s
        let b = Polynomial::linear(0.0, 1.0); // s
        let prod = a.mul(&b); // s - s^2
        assert_eq!(prod, Polynomial::quadratic(0.0, 1.0, -1.0));
        assert_eq!(a.add(&b), Polynomial::constant(1.0));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn quadratic_roots_sorted() {
        let p = Polynomial::quadratic(0.0, 1.0, -1.0); // s(1-s)
        assert_eq!(p.real_roots(), vec![0.0, 1.0]);
        let none = Polynomial::quadratic(1.0, 0.0, 1.0); // s^2 + 1
        assert!(none.real_roots().is_empty());
    }

    #[test]
    fn zero_polynomial() {
        let z: Polynomial<f64> = Polynomial::new(vec![0.0, 0.0]);
        assert!(z.is_zero());
        assert_eq!(z.eval(3.0), 0.0);
        assert_eq!(format!("{z}"), "0");
    }
}
