//! Hankel-loop representations:
//!
//! ```text
//! 1/Gamma(z) = (2 pi)^-1 (loop integral of e^zeta zeta^-z) M*
//! Gamma(z)   = (2 sin(pi z))^-1 (loop integral of e^zeta zeta^(z-1)) M*
//! ```
//!
//! where the loop starts at `-R` below the branch cut, circles the origin
//! at radius `delta`, and returns above the cut; `M` is the slice axis of
//! `z`. The integrand `exp(zeta - z Ln zeta)` uses the principal logarithm
//! with explicit edge phases `-pi` / `+pi` supplied by the contour points.

use crate::algebra::CDNumber;
use crate::elementary::{cd_exp, cd_sin, slice_decompose};
use crate::error::{Error, Result};
use crate::quad::{hankel_contour, integrate_contour, IntegralResult, PathPoint, QuadratureConfig};
use std::f64::consts::PI;

/// Cut-circle radius used when no explicit `delta` is given. The value of
/// the loop integral is delta-independent (deformation invariance); a
/// moderate radius keeps cancellation near the cut small.
pub const DEFAULT_HANKEL_DELTA: f64 = 0.5;

/// `exp(zeta - z Ln zeta)` at a contour point, with the path's own phase.
fn loop_integrand(p: &PathPoint, z: &CDNumber) -> CDNumber {
    let ln_zeta = p.ln();
    cd_exp(&(&p.point - &(z * &ln_zeta)))
}

fn loop_integral(
    z_slice: &CDNumber,
    exponent: &CDNumber,
    delta: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    let frame = slice_decompose(z_slice);
    let contour = hankel_contour(delta, cfg.truncation_radius, frame.axis)?;
    integrate_contour(|p| loop_integrand(p, exponent), &contour, cfg)
}

/// Tail bound of truncating the rays at `R`: `e^-R R^|x|` per the decay of
/// `e^-u u^-x` on the cut edges.
fn ray_tail_bound(x: f64, r: f64) -> f64 {
    (-r).exp() * r.powf(x.abs())
}

/// `1/Gamma(z)` from the Hankel loop with the default cut radius.
/// Defined for all `z`, including the non-positive integers where it
/// returns approximately zero.
pub fn hankel_reciprocal_gamma(z: &CDNumber, cfg: &QuadratureConfig) -> Result<CDNumber> {
    Ok(hankel_reciprocal_gamma_with(z, DEFAULT_HANKEL_DELTA, cfg)?.value)
}

/// As [`hankel_reciprocal_gamma`], with an explicit cut-circle radius;
/// the ray truncation comes from `cfg.truncation_radius`.
pub fn hankel_reciprocal_gamma_with(
    z: &CDNumber,
    delta: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    let frame = slice_decompose(z);
    let integral = loop_integral(z, z, delta, cfg)?;
    let m_conj = frame.axis.as_cd().conj();
    let value = (&integral.value * &m_conj).scale(1.0 / (2.0 * PI));
    Ok(IntegralResult {
        value,
        error_estimate: integral.error_estimate / (2.0 * PI)
            + ray_tail_bound(frame.real_part, cfg.truncation_radius),
        evaluations: integral.evaluations,
    })
}

/// `Gamma(z)` from the Hankel loop and the cosecant prefactor. The
/// representation degenerates at every real integer `z` (sin(pi z) = 0),
/// even where Gamma itself is finite.
pub fn hankel_gamma(z: &CDNumber, cfg: &QuadratureConfig) -> Result<CDNumber> {
    Ok(hankel_gamma_with(z, DEFAULT_HANKEL_DELTA, cfg)?.value)
}

/// As [`hankel_gamma`], with an explicit cut-circle radius.
pub fn hankel_gamma_with(
    z: &CDNumber,
    delta: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    let frame = slice_decompose(z);
    if frame.radius < 1e-9 {
        let k = frame.real_part.round();
        if (frame.real_part - k).abs() < 1e-9 {
            return Err(Error::RepresentationPole(k as i64));
        }
    }
    let exponent = z - &CDNumber::one(z.level());
    let integral = loop_integral(z, &exponent, delta, cfg)?;
    let sin_piz = cd_sin(&z.scale(PI));
    let prefactor = sin_piz.scale(2.0).inverse()?;
    let m_conj = frame.axis.as_cd().conj();
    let value = &prefactor * &(&integral.value * &m_conj);
    let scale = prefactor.norm();
    Ok(IntegralResult {
        value,
        error_estimate: scale
            * (integral.error_estimate
                + ray_tail_bound(frame.real_part - 1.0, cfg.truncation_radius)),
        evaluations: integral.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;
    use crate::gamma::gamma;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig {
            truncation_radius: 40.0,
            ..QuadratureConfig::default()
        }
    }

    #[test]
    fn reciprocal_gamma_at_one() {
        let v = hankel_reciprocal_gamma(&CDNumber::one(2), &cfg()).unwrap();
        assert!(
            (&v - &CDNumber::one(2)).norm() < 1e-9,
            "got {v}"
        );
    }

    #[test]
    fn reciprocal_gamma_vanishes_at_poles() {
        for n in [-1.0, -2.0] {
            let v = hankel_reciprocal_gamma(&CDNumber::from_real(2, n), &cfg()).unwrap();
            assert!(v.norm() < 1e-7, "at {n}: |v| = {}", v.norm());
        }
    }

    #[test]
    fn reciprocal_gamma_matches_slice_route() {
        // 1/Gamma(0.3 + 1.7 e2); 40-digit oracle for the slice value
        let z = parse_cd("0.3 + 1.7e2", Some(2)).unwrap();
        let v = hankel_reciprocal_gamma(&z, &cfg()).unwrap();
        let e2 = CDNumber::basis(2, 2).unwrap();
        let want = &CDNumber::from_real(2, 2.9040645115053669545)
            + &e2.scale(5.6934954994533488553);
        assert!((&v - &want).norm() < 1e-6, "diff {}", (&v - &want).norm());
    }

    #[test]
    fn deformation_invariance() {
        let z = parse_cd("0.7 - 1.2e1", Some(2)).unwrap();
        let small = QuadratureConfig {
            truncation_radius: 30.0,
            ..QuadratureConfig::default()
        };
        let a = hankel_reciprocal_gamma_with(&z, 0.25, &small).unwrap();
        let b = hankel_reciprocal_gamma_with(&z, 0.5, &cfg()).unwrap();
        let tol = 10.0 * (a.error_estimate + b.error_estimate).max(1e-8);
        assert!(
            (&a.value - &b.value).norm() < tol,
            "diff {} vs tol {tol}",
            (&a.value - &b.value).norm()
        );
    }

    #[test]
    fn gamma_from_the_loop() {
        // z = 1/2: sqrt(pi)
        let v = hankel_gamma(&CDNumber::from_real(2, 0.5), &cfg()).unwrap();
        assert!(
            (v.re() - std::f64::consts::PI.sqrt()).abs() < 1e-8,
            "got {}",
            v.re()
        );

        // representation degenerates at integers even though Gamma(2) = 1
        assert!(matches!(
            hankel_gamma(&CDNumber::from_real(2, 2.0), &cfg()),
            Err(Error::RepresentationPole(2))
        ));

        // level-3 slice agreement: Gamma(1.5 + 0.5 e4); oracle slice value
        let z = parse_cd("1.5 + 0.5e4", Some(3)).unwrap();
        let v = hankel_gamma(&z, &cfg()).unwrap();
        let g = gamma(&z).unwrap();
        assert!((&v - &g).norm() < 1e-6, "diff {}", (&v - &g).norm());
        let e4 = CDNumber::basis(3, 4).unwrap();
        let want = &CDNumber::from_real(3, 0.79073891412786500537)
            + &e4.scale(0.027425085413882388704);
        assert!((&v - &want).norm() < 1e-6);
    }
}
