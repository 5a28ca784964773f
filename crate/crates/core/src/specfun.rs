//! Jacobi polynomials and Gauss-Legendre quadrature.
//!
//! The polynomial part of every eigenfunction is a Jacobi polynomial with
//! real (generally non-integer) indices, and normalization constants are
//! fixed by numerical integrals, so both live here.

use thiserror::Error;

use crate::real::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError<R: Real> {
    /// Jacobi indices must satisfy a > -1 and b > -1 for an integrable weight.
    #[error("jacobi parameters out of range: a = {a}, b = {b} (both must exceed -1)")]
    InvalidJacobiParams { a: R, b: R },
    #[error("quadrature order must be at least 1")]
    InvalidOrder,
    /// Composite refinement hit the panel cap before the estimates settled.
    #[error("quadrature did not converge: last two estimates {previous} and {latest}")]
    QuadratureNonConvergence { previous: R, latest: R },
}

/// Indices of a Jacobi polynomial `P_n^{(a,b)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams<R> {
    pub n: usize,
    pub a: R,
    pub b: R,
}

impl<R: Real> JacobiParams<R> {
    pub fn new(n: usize, a: R, b: R) -> Result<Self, SpecFunError<R>> {
        if a <= -R::one() || b <= -R::one() {
            return Err(SpecFunError::InvalidJacobiParams { a, b });
        }
        Ok(Self { n, a, b })
    }
}

/// Evaluates `P_n^{(a,b)}(u)` by the three-term recurrence in the degree.
///
/// The recurrence denominators `2k(k+a+b)(2k+a+b-2)` are strictly positive
/// for k >= 2 once a, b > -1, so no special-casing is needed there.
pub fn jacobi_eval<R: Real>(jp: &JacobiParams<R>, u: R) -> R {
    let (a, b) = (jp.a, jp.b);
    if jp.n == 0 {
        return R::one();
    }
    let two = R::of(2.0);
    let mut p_prev = R::one();
    let mut p = ((a - b) + (a + b + two) * u) / two;
    for k in 2..=jp.n {
        let kf = R::of_usize(k);
        let c = two * kf + a + b; // 2k + a + b
        let a1 = two * kf * (kf + a + b) * (c - two);
        let a2 = (c - R::one()) * (a * a - b * b);
        let a3 = (c - R::one()) * c * (c - two);
        let a4 = two * (kf + a - R::one()) * (kf + b - R::one()) * c;
        let next = ((a2 + a3 * u) * p - a4 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    p
}

/// k-th derivative of `P_n^{(a,b)}` with respect to its argument:
/// a prefactor times `P_{n-k}^{(a+k,b+k)}`.
pub fn jacobi_deriv<R: Real>(jp: &JacobiParams<R>, u: R, order: usize) -> R {
    if order > jp.n {
        return R::zero();
    }
    let mut factor = R::one();
    for j in 1..=order {
        factor = factor * (R::of_usize(jp.n) + jp.a + jp.b + R::of_usize(j)) / R::of(2.0);
    }
    let shifted = JacobiParams {
        n: jp.n - order,
        a: jp.a + R::of_usize(order),
        b: jp.b + R::of_usize(order),
    };
    factor * jacobi_eval(&shifted, u)
}

/// Counts strict sign changes of `P_n^{(a,b)}` on the open interval
/// `(lo, hi)` using a dense uniform grid. For valid indices this equals n
/// when the interval covers (-1, 1).
pub fn jacobi_nodes_count<R: Real>(jp: &JacobiParams<R>, lo: R, hi: R) -> usize {
    let samples = 1000.max(200 * jp.n.max(1));
    let span = hi - lo;
    let mut changes = 0;
    let mut last_sign = R::zero();
    for i in 0..=samples {
        // Inset slightly so endpoint zeros are never sampled.
        let t = (R::of_usize(i) + R::of(0.5)) / (R::of_usize(samples) + R::one());
        let v = jacobi_eval(jp, lo + span * t);
        let sign = if v > R::zero() {
            R::one()
        } else if v < R::zero() {
            -R::one()
        } else {
            continue;
        };
        if last_sign != R::zero() && sign != last_sign {
            changes += 1;
        }
        last_sign = sign;
    }
    changes
}

/// Gauss-Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct QuadratureRule<R> {
    nodes: Vec<R>,
    weights: Vec<R>,
    order: usize,
}

impl<R: Real> QuadratureRule<R> {
    /// Builds the order-point rule with nodes found by Newton iteration on
    /// the Legendre polynomial, converged to 1e-15 (or the type's epsilon).
    pub fn gauss_legendre(order: usize) -> Result<Self, SpecFunError<R>> {
        if order == 0 {
            return Err(SpecFunError::InvalidOrder);
        }
        let tol = R::of(1e-15).max(R::epsilon() * R::of(4.0));
        let mut nodes = vec![R::zero(); order];
        let mut weights = vec![R::zero(); order];
        let nf = R::of_usize(order);
        for i in 0..order.div_ceil(2) {
            // Tricomi initial guess for the i-th root (descending order).
            let theta = R::of(std::f64::consts::PI) * (R::of_usize(i) + R::of(0.75))
                / (nf + R::of(0.5));
            let mut x = theta.cos();
            let mut dp = R::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(order, x);
                dp = d;
                let dx = p / d;
                x = x - dx;
                if dx.abs() <= tol {
                    let (_, d) = legendre_with_deriv(order, x);
                    dp = d;
                    break;
                }
            }
            let w = R::of(2.0) / ((R::one() - x * x) * dp * dp);
            // Mirror to enforce exact symmetry of the rule.
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = R::zero();
            let (_, d) = legendre_with_deriv(order, R::zero());
            weights[order / 2] = R::of(2.0) / (d * d);
        }
        let rule = Self {
            nodes,
            weights,
            order,
        };
        debug_assert!(rule.weights.iter().all(|&w| w > R::zero()));
        debug_assert!(
            (rule.weights.iter().fold(R::zero(), |s, &w| s + w) - R::of(2.0)).abs()
                < R::of(1e-12).max(R::epsilon() * nf)
        );
        Ok(rule)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[R] {
        &self.nodes
    }

    pub fn weights(&self) -> &[R] {
        &self.weights
    }

    /// Single application of the rule mapped affinely onto [a, b].
    pub fn apply<F: Fn(R) -> R>(&self, f: &F, a: R, b: R) -> R {
        let half = (b - a) / R::of(2.0);
        let mid = (a + b) / R::of(2.0);
        let mut acc = R::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + w * f(mid + half * x);
        }
        acc * half
    }
}

fn legendre_with_deriv<R: Real>(n: usize, x: R) -> (R, R) {
    let mut p_prev = R::one();
    let mut p = x;
    if n == 0 {
        return (R::one(), R::zero());
    }
    for k in 1..n {
        let kf = R::of_usize(k);
        let next = ((R::of(2.0) * kf + R::one()) * x * p - kf * p_prev) / (kf + R::one());
        p_prev = p;
        p = next;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let d = R::of_usize(n) * (x * p - p_prev) / (x * x - R::one());
    (p, d)
}

const MAX_PANELS: usize = 1 << 14;

/// Composite Gauss-Legendre integration of `f` over [a, b], doubling the
/// panel count until successive estimates differ by less than 1e-10
/// relative (with a roundoff floor tied to the sampled magnitude of `f`).
pub fn integrate<R: Real, F: Fn(R) -> R>(
    f: F,
    a: R,
    b: R,
    rule: &QuadratureRule<R>,
) -> Result<R, SpecFunError<R>> {
    let rtol = R::of(1e-10);
    let mut panels = 1usize;
    let mut previous = rule.apply(&f, a, b);
    let mut f_scale = previous.abs() / (b - a).abs().max(R::min_positive_value());
    loop {
        panels *= 2;
        let width = (b - a) / R::of_usize(panels);
        let mut latest = R::zero();
        for i in 0..panels {
            let lo = a + width * R::of_usize(i);
            let contribution = rule.apply(&f, lo, lo + width);
            f_scale = f_scale.max(contribution.abs() / width.abs());
            latest = latest + contribution;
        }
        let floor = R::of(1e-12) * (b - a).abs() * f_scale;
        if (latest - previous).abs() <= (rtol * latest.abs()).max(floor) {
            return Ok(latest);
        }
        if panels >= MAX_PANELS {
            return Err(SpecFunError::QuadratureNonConvergence { previous, latest });
        }
        previous = latest;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jp(n: usize, a: f64, b: f64) -> JacobiParams<f64> {
        JacobiParams::new(n, a, b).unwrap()
    }

    /// Explicit degree-1 and degree-2 Jacobi values from the hypergeometric
    /// sum, independent of the recurrence path.
    fn jacobi_explicit(n: usize, a: f64, b: f64, u: f64) -> f64 {
        let vp = (u + 1.0) / 2.0;
        let vm = (u - 1.0) / 2.0;
        match n {
            0 => 1.0,
            1 => (a + 1.0) * vp + (b + 1.0) * vm,
            2 => {
                (a + 1.0) * (a + 2.0) / 2.0 * vp * vp
                    + (a + 2.0) * (b + 2.0) * vp * vm
                    + (b + 1.0) * (b + 2.0) / 2.0 * vm * vm
            }
            _ => unimplemented!(),
        }
    }

    #[test]
    fn degree_zero_is_one() {
        assert_eq!(jacobi_eval(&jp(0, 2.5, -0.5), 0.3), 1.0);
    }

    #[test]
    fn legendre_p1_is_identity() {
        assert!((jacobi_eval(&jp(1, 0.0, 0.0), 0.5) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn endpoint_identity() {
        // P_n^{(a,b)}(1) = C(n+a, n)
        assert!((jacobi_eval(&jp(2, 1.0, 1.0), 1.0) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_integrable_weight() {
        assert!(JacobiParams::new(1, -1.0, 0.0).is_err());
        assert!(JacobiParams::new(1, 0.0, -1.5).is_err());
    }

    #[test]
    fn recurrence_matches_explicit_low_degrees() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let a = -0.9 + 4.0 * next();
            let b = -0.9 + 4.0 * next();
            let u = -1.0 + 2.0 * next();
            for n in [1, 2] {
                let rec = jacobi_eval(&jp(n, a, b), u);
                let exp = jacobi_explicit(n, a, b, u);
                let scale = exp.abs().max(1.0);
                assert!(
                    (rec - exp).abs() <= 1e-13 * scale,
                    "n={n} a={a} b={b} u={u}: {rec} vs {exp}"
                );
            }
        }
    }

    #[test]
    fn derivative_reduces_degree() {
        // d/du P_2^{(0,0)}(u) = 3u
        let d = jacobi_deriv(&jp(2, 0.0, 0.0), 0.4, 1);
        assert!((d - 1.2).abs() < 1e-14);
        assert_eq!(jacobi_deriv(&jp(1, 0.0, 0.0), 0.4, 2), 0.0);
    }

    #[test]
    fn node_counts() {
        assert_eq!(jacobi_nodes_count(&jp(0, 0.0, 0.0), -1.0, 1.0), 0);
        assert_eq!(jacobi_nodes_count(&jp(1, 0.0, 0.0), -1.0, 1.0), 1);
        assert_eq!(
            jacobi_nodes_count(&jp(3, 0.0, 5.403124237432849), -1.0, 1.0),
            3
        );
    }

    #[test]
    fn rule_invariants() {
        for order in [1, 2, 5, 24, 64] {
            let rule = QuadratureRule::<f64>::gauss_legendre(order).unwrap();
            assert!(rule.weights().iter().all(|&w| w > 0.0));
            let sum: f64 = rule.weights().iter().sum();
            assert!((sum - 2.0).abs() < 1e-12, "order {order}: sum {sum}");
        }
    }

    #[test]
    fn exactness_on_polynomials() {
        // A k-point rule integrates degree 2k-1 exactly.
        for k in [2usize, 4, 8] {
            let rule = QuadratureRule::<f64>::gauss_legendre(k).unwrap();
            let deg = 2 * k - 1;
            let exact = 2.0 / (deg as f64); // integral of u^(deg-1), even power
            let got = rule.apply(&|u: f64| u.powi(deg as i32 - 1), -1.0, 1.0);
            assert!((got - exact).abs() < 1e-13, "k={k}: {got} vs {exact}");
        }
    }

    #[test]
    fn integrates_unit_and_square() {
        let rule = QuadratureRule::gauss_legendre(8).unwrap();
        assert!((integrate(|_| 1.0, 0.0, 1.0, &rule).unwrap() - 1.0).abs() < 1e-14);
        let sq = integrate(|u: f64| u * u, -1.0, 1.0, &rule).unwrap();
        assert!((sq - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn beta_integral_matches_closed_form() {
        // Exponent taken from the reference weight; oracle is B(1, p+1) = 1/(p+1).
        let p = 5.403124237432849;
        let rule = QuadratureRule::gauss_legendre(24).unwrap();
        let got = integrate(|s: f64| (1.0 - s).powf(p), 0.0, 1.0, &rule).unwrap();
        let exact = 1.0 / (p + 1.0);
        assert!((got - exact).abs() < 1e-9 * exact, "{got} vs {exact}");
    }

    #[test]
    fn orthogonality_under_jacobi_weight() {
        let rule = QuadratureRule::gauss_legendre(32).unwrap();
        for &(a, b) in &[(0.0, 0.0), (0.0, 5.403124237432849), (2.0, 3.0)] {
            for m in 0..=5usize {
                for n in 0..m {
                    let pm = jp(m, a, b);
                    let pn = jp(n, a, b);
                    let integrand = |u: f64| {
                        (1.0 - u).powf(a)
                            * (1.0 + u).powf(b)
                            * jacobi_eval(&pm, u)
                            * jacobi_eval(&pn, u)
                    };
                    let val = integrate(integrand, -1.0, 1.0, &rule).unwrap();
                    assert!(val.abs() < 1e-9, "({a},{b}) m={m} n={n}: {val}");
                }
            }
        }
    }
}
