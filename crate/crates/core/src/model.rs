//! Physical model: deformed Hulthen potential with a position-dependent
//! mass, the ordering-ambiguity parameters that shape the effective
//! potential, and the coordinate map onto the unit interval.
//!
//! Units: hbar = 2 m0 = 1 throughout; energies are reported in these units.

use thiserror::Error;

use crate::real::Real;

/// Beyond this value of |lambda*x| the exponential under/overflows double
/// precision, so the operations return the exact asymptotic limits instead.
const ASYMPTOTIC_EXPONENT: f64 = 700.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError<R: Real> {
    #[error("invalid parameters: lambda = {lambda} must be > 0 and q = {q} must be nonzero")]
    InvalidParams { lambda: R, q: R },
    /// The mass profile is singular at x_s = ln(q)/lambda when q > 0; points
    /// at or left of it are outside the physical domain.
    #[error("x = {x} outside the physical domain (mass singular at x_s = {singular_x})")]
    OutsideDomain { x: R, singular_x: R },
    #[error("s = {s} outside the image of the coordinate map")]
    OutsideSRange { s: R },
}

/// Which side of s = 1 the coordinate map lands on.
///
/// For q < 0 the physical domain is the whole real line and s runs over
/// (0, 1), matching the singular points of the transformed equation. For
/// q > 0 only x > ln(q)/lambda is physical and s runs over (1, infinity);
/// that regime is evaluated but not verified against the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SRange {
    UnitInterval,
    AboveOne,
}

/// Model parameters.
///
/// `alpha` and `beta` select the operator ordering (they enter only through
/// the effective potential); `eta` is the exponent of the wavefunction
/// substitution and must drop out of every physical energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams<R> {
    /// Potential strength V0 (> 0 for an attractive well).
    pub v0: R,
    /// Screening parameter (inverse length), > 0.
    pub lambda: R,
    /// Deformation of the screening denominator, nonzero.
    pub q: R,
    /// Ordering ambiguity parameter.
    pub alpha: R,
    /// Ordering ambiguity parameter.
    pub beta: R,
    /// Wavefunction-transform exponent.
    pub eta: R,
}

impl<R: Real> ModelParams<R> {
    pub fn new(v0: R, lambda: R, q: R, alpha: R, beta: R, eta: R) -> Result<Self, ModelError<R>> {
        if !(lambda > R::zero()) || q == R::zero() || !q.is_finite() || !lambda.is_finite() {
            return Err(ModelError::InvalidParams { lambda, q });
        }
        Ok(Self {
            v0,
            lambda,
            q,
            alpha,
            beta,
            eta,
        })
    }

    /// Ordering combination A* = alpha(alpha+beta+1) + beta + 1, always
    /// recomputed from the primitive parameters.
    pub fn a_star(&self) -> R {
        self.alpha * (self.alpha + self.beta + R::one()) + self.beta + R::one()
    }

    /// Transform offset z = (1 - 2 eta)/2, so z + eta = 1/2 exactly.
    pub fn z(&self) -> R {
        (R::one() - R::of(2.0) * self.eta) / R::of(2.0)
    }

    /// Dimensionless well depth v = V0 / (q lambda^2).
    pub fn v_ratio(&self) -> R {
        self.v0 / (self.q * self.lambda * self.lambda)
    }

    /// mu^2 = 1/4 + (beta+1)/2 - A*, written in the eta-free form so its
    /// value is bitwise independent of the transform exponent.
    pub fn mu_sq(&self) -> R {
        R::of(0.25) + (self.beta + R::one()) / R::of(2.0) - self.a_star()
    }

    /// gamma = beta + 3/4 - A* - V0/(q lambda^2), likewise eta-free.
    pub fn gamma(&self) -> R {
        self.beta + R::of(0.75) - self.a_star() - self.v_ratio()
    }

    /// Singular abscissa of the mass profile, present only for q > 0.
    pub fn x_singularity(&self) -> Option<R> {
        (self.q > R::zero()).then(|| self.q.ln() / self.lambda)
    }

    pub fn s_range(&self) -> SRange {
        if self.q < R::zero() {
            SRange::UnitInterval
        } else {
            SRange::AboveOne
        }
    }

    fn check_domain(&self, x: R) -> Result<(), ModelError<R>> {
        if let Some(xs) = self.x_singularity() {
            if x <= xs {
                return Err(ModelError::OutsideDomain { x, singular_x: xs });
            }
        }
        Ok(())
    }

    /// Mass profile m(x) = (1 - q e^{-lambda x})^{-1}.
    pub fn mass_at(&self, x: R) -> Result<R, ModelError<R>> {
        self.check_domain(x)?;
        if self.lambda * x > R::of(ASYMPTOTIC_EXPONENT) {
            return Ok(R::one());
        }
        let denom = R::one() - self.q * (-self.lambda * x).exp();
        if denom <= R::zero() {
            // q > 0 just right of x_s can still underflow through the guard.
            return Err(ModelError::OutsideDomain {
                x,
                singular_x: self.q.ln() / self.lambda,
            });
        }
        Ok(denom.recip())
    }

    /// Reciprocal mass 1/m(x) = 1 - q e^{-lambda x}, computed directly so the
    /// discretized kinetic term never divides through a subnormal.
    pub fn inv_mass_at(&self, x: R) -> Result<R, ModelError<R>> {
        self.check_domain(x)?;
        if self.lambda * x > R::of(ASYMPTOTIC_EXPONENT) {
            return Ok(R::one());
        }
        let denom = R::one() - self.q * (-self.lambda * x).exp();
        if denom <= R::zero() {
            return Err(ModelError::OutsideDomain {
                x,
                singular_x: self.q.ln() / self.lambda,
            });
        }
        Ok(denom)
    }

    /// Logarithmic derivatives (m'/m, m''/m) of the mass profile.
    pub fn mass_log_derivatives(&self, x: R) -> Result<(R, R), ModelError<R>> {
        self.check_domain(x)?;
        let lx = self.lambda * x;
        if lx > R::of(ASYMPTOTIC_EXPONENT) {
            return Ok((R::zero(), R::zero()));
        }
        if lx < -R::of(ASYMPTOTIC_EXPONENT) {
            // q < 0 left tail: the ratios saturate at lambda and lambda^2.
            return Ok((self.lambda, self.lambda * self.lambda));
        }
        let t = self.q * (-lx).exp();
        let denom = R::one() - t;
        if denom <= R::zero() {
            return Err(ModelError::OutsideDomain {
                x,
                singular_x: self.q.ln() / self.lambda,
            });
        }
        let first = -self.lambda * t / denom;
        let second = self.lambda * self.lambda * t * (R::one() + t) / (denom * denom);
        Ok((first, second))
    }

    /// Hulthen potential V(x) = -V0 e^{-lambda x} / (1 - q e^{-lambda x}).
    pub fn potential_at(&self, x: R) -> Result<R, ModelError<R>> {
        self.check_domain(x)?;
        let lx = self.lambda * x;
        if lx > R::of(ASYMPTOTIC_EXPONENT) {
            return Ok(R::zero());
        }
        if lx < -R::of(ASYMPTOTIC_EXPONENT) {
            return Ok(self.v0 / self.q);
        }
        let e = (-lx).exp();
        let denom = R::one() - self.q * e;
        if denom <= R::zero() {
            return Err(ModelError::OutsideDomain {
                x,
                singular_x: self.q.ln() / self.lambda,
            });
        }
        Ok(-self.v0 * e / denom)
    }

    /// Effective potential
    /// V_eff = V + (beta+1)/2 * m''/m^2 - A* * m'^2/m^3.
    pub fn effective_potential_at(&self, x: R) -> Result<R, ModelError<R>> {
        let v = self.potential_at(x)?;
        let (first, second) = self.mass_log_derivatives(x)?;
        let inv_m = self.inv_mass_at(x)?;
        let half_beta1 = (self.beta + R::one()) / R::of(2.0);
        Ok(v + half_beta1 * second * inv_m - self.a_star() * first * first * inv_m)
    }

    /// Coordinate map s(x) = 1/(1 - q e^{-lambda x}); numerically identical
    /// to the mass profile.
    pub fn s_of_x(&self, x: R) -> Result<R, ModelError<R>> {
        self.mass_at(x)
    }

    /// Inverse map; `s` must lie in the image interval reported by
    /// [`ModelParams::s_range`].
    pub fn x_of_s(&self, s: R) -> Result<R, ModelError<R>> {
        let valid = match self.s_range() {
            SRange::UnitInterval => s > R::zero() && s < R::one(),
            SRange::AboveOne => s > R::one(),
        };
        if !valid {
            return Err(ModelError::OutsideSRange { s });
        }
        let ratio = (s - R::one()) / (self.q * s);
        Ok(-ratio.ln() / self.lambda)
    }

    /// Coefficients of the transformed equation at energy `E`.
    pub fn xi_coefficients(&self, energy: R) -> XiCoefficients<R> {
        let b = self.eta * (self.eta - R::of(2.0)) + self.a_star();
        let c = (self.beta + R::one()) / R::of(2.0) - self.eta;
        let v = self.v_ratio();
        let eps = energy / (self.lambda * self.lambda);
        let xi1 = -(b - R::of(2.0) * c + v);
        let xi2 = -R::of(2.0) * b + R::of(3.0) * c - v + eps;
        let xi3 = c - b;
        let z = self.z();
        XiCoefficients {
            xi1,
            xi2,
            xi3,
            mu_sq: xi3 + z * z,
            gamma: xi1 + z * (z - R::one()),
        }
    }
}

/// Coefficients xi1, xi2, xi3 of the transformed equation, along with the
/// two derived combinations that every later stage consumes.
///
/// Only `xi2` carries the energy; `xi1 - xi2 + xi3 = -E/lambda^2` is an
/// algebraic identity of the definitions and is enforced by tests instead of
/// by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiCoefficients<R> {
    pub xi1: R,
    pub xi2: R,
    pub xi3: R,
    /// xi3 + z^2; eta-independent up to roundoff.
    pub mu_sq: R,
    /// xi1 + z(z-1); eta-independent up to roundoff.
    pub gamma: R,
}
