//! The Gamma function of Cayley-Dickson arguments, by several independent
//! routes, together with its residues, classical identities, asymptotics
//! and the Hankel-loop representations.
//!
//! Routes (see [`routes`] for the runtime registry):
//!
//! * slice reduction through a Lanczos complex backend ([`gamma`]),
//! * the Eulerian integral ([`gamma_integral`]),
//! * the pole-series split Phi + Psi ([`gamma_phi_series`]),
//! * the limit form `n! n^z [(z)(z+1)...(z+n)]^-1` ([`gamma_limit`]),
//! * the Euler product ([`gamma_euler_product`]),
//! * Hankel loop integrals ([`hankel_reciprocal_gamma`], [`hankel_gamma`]).

mod hankel;
mod lanczos;
mod limit;
mod routes;
mod series;
mod stirling;

pub use hankel::{
    hankel_gamma, hankel_gamma_with, hankel_reciprocal_gamma, hankel_reciprocal_gamma_with,
    DEFAULT_HANKEL_DELTA,
};
pub use lanczos::gamma_complex;
pub use limit::{gamma_euler_product, gamma_limit};
pub use routes::{route_by_name, route_by_tag, routes, EvalConfig, GammaRoute, MethodTag, RouteEval};
pub use series::{gamma_phi_series, phi_series};
pub use stirling::{
    bernoulli_numbers, gamma_magnitude_asymptotic, ln_gamma_stirling, stirling_series,
    AsymptoticSeries, AsymptoticTerm, BernoulliTable,
};

use crate::algebra::CDNumber;
use crate::elementary::slice_decompose;
use crate::error::{Error, Result};
use crate::report::IdentityReport;

/// Slice distance from a pole below which evaluation is rejected:
/// residual-based identity checks degrade as 1/distance, so anything
/// closer only produces noise.
pub const EPS_POLE: f64 = 1e-9;

/// Distance from `x + i y` (slice coordinates) to the nearest pole of
/// Gamma, together with that pole, when the argument is anywhere near the
/// non-positive real integers.
fn pole_distance(x: f64, y: f64) -> (f64, i64) {
    let n = x.round().min(0.0);
    let d = ((x - n) * (x - n) + y * y).sqrt();
    (d, n as i64)
}

/// Rejects arguments within [`EPS_POLE`] of `{0, -1, -2, ...}`.
pub(crate) fn check_pole(z: &CDNumber, what: &str) -> Result<()> {
    let frame = slice_decompose(z);
    let (d, n) = pole_distance(frame.real_part, frame.radius);
    if frame.real_part < 0.5 && d < EPS_POLE {
        return Err(Error::Pole {
            what: what.into(),
            location: format!("z = {n}"),
            distance: d,
        });
    }
    Ok(())
}

/// Gamma by slice reduction: with `z = x + r M`, returns `u + v M` where
/// `u + i v = Gamma(x + i r)` from the Lanczos backend.
pub fn gamma(z: &CDNumber) -> Result<CDNumber> {
    check_pole(z, "gamma")?;
    let frame = slice_decompose(z);
    Ok(frame.lift(lanczos::gamma_complex(frame.complex_coord())))
}

/// The residue of Gamma at `-n`: `(-1)^n / n!`.
pub fn gamma_residue(n: i64) -> Result<f64> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "residues live at the non-positive integers: n must be >= 0, got {n}"
        )));
    }
    let mut f = 1.0f64;
    for k in 2..=n {
        f *= k as f64;
    }
    Ok(if n % 2 == 0 { 1.0 / f } else { -1.0 / f })
}

/// The classical Gamma identities that hold verbatim over every
/// Cayley-Dickson algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// `Gamma(z+1) = z Gamma(z)`
    Recurrence,
    /// `Gamma(z) Gamma(1-z) = pi csc(pi z)`
    Reflection,
    /// `sqrt(pi) Gamma(2z) = 2^(2z-1) Gamma(z) Gamma(z + 1/2)`
    Duplication,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Recurrence => "recurrence",
            IdentityKind::Reflection => "reflection",
            IdentityKind::Duplication => "duplication",
        }
    }
}

/// Evaluates both sides of the chosen identity through the slice route and
/// reports the normalized residual. Pole proximity of any sub-expression is
/// reported naming that sub-expression.
pub fn verify_identity(kind: IdentityKind, z: &CDNumber) -> Result<IdentityReport> {
    let level = z.level();
    match kind {
        IdentityKind::Recurrence => {
            let zp1 = z + &CDNumber::one(level);
            check_pole(z, "gamma(z)")?;
            check_pole(&zp1, "gamma(z+1)")?;
            let lhs = gamma(&zp1)?;
            let rhs = z * &gamma(z)?;
            Ok(IdentityReport::new(
                lhs,
                rhs,
                "recurrence via slice_lanczos".into(),
                vec![1e-12],
            ))
        }
        IdentityKind::Reflection => {
            let one_minus = &CDNumber::one(level) - z;
            check_pole(z, "gamma(z)")?;
            check_pole(&one_minus, "gamma(1-z)")?;
            let lhs = &gamma(z)? * &gamma(&one_minus)?;
            let pi_z = z.scale(std::f64::consts::PI);
            let rhs = crate::elementary::cd_csc(&pi_z)?.scale(std::f64::consts::PI);
            Ok(IdentityReport::new(
                lhs,
                rhs,
                "reflection via slice_lanczos and csc".into(),
                vec![1e-12],
            ))
        }
        IdentityKind::Duplication => {
            let two_z = z.scale(2.0);
            let z_half = z + &CDNumber::from_real(level, 0.5);
            check_pole(&two_z, "gamma(2z)")?;
            check_pole(z, "gamma(z)")?;
            check_pole(&z_half, "gamma(z+1/2)")?;
            let lhs = gamma(&two_z)?.scale(std::f64::consts::PI.sqrt());
            let exponent = &two_z - &CDNumber::one(level);
            let pow = crate::elementary::real_power(2.0, &exponent)?;
            let rhs = &(&pow * &gamma(z)?) * &gamma(&z_half)?;
            Ok(IdentityReport::new(
                lhs,
                rhs,
                "duplication via slice_lanczos and real_power".into(),
                vec![1e-12],
            ))
        }
    }
}

/// The Eulerian integral `integral_0^inf e^-t t^(z-1) dt`, valid for
/// `Re z > 0`; continuation elsewhere is the job of the other routes.
pub fn gamma_integral(
    z: &CDNumber,
    cfg: &crate::quad::QuadratureConfig,
) -> Result<CDNumber> {
    Ok(gamma_integral_eval(z, cfg)?.value)
}

pub(crate) fn gamma_integral_eval(
    z: &CDNumber,
    cfg: &crate::quad::QuadratureConfig,
) -> Result<crate::quad::IntegralResult> {
    if z.re() <= 0.0 {
        return Err(Error::Domain(format!(
            "the Eulerian integral needs Re z > 0, got {}",
            z.re()
        )));
    }
    let zm1 = z - &CDNumber::one(z.level());
    crate::quad::integrate_semi_infinite(
        |t| crate::elementary::real_power(t, &zm1).expect("t > 0").scale((-t).exp()),
        0.0,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;
    use crate::quad::QuadratureConfig;

    fn close(a: &CDNumber, b: &CDNumber, eps: f64) {
        assert!(
            (a - b).norm() <= eps,
            "expected {b}, got {a} (diff {:.3e})",
            (a - b).norm()
        );
    }

    #[test]
    fn gamma_known_values() {
        close(
            &gamma(&CDNumber::one(2)).unwrap(),
            &CDNumber::one(2),
            1e-14,
        );
        close(
            &gamma(&CDNumber::from_real(2, 5.0)).unwrap(),
            &CDNumber::from_real(2, 24.0),
            1e-12,
        );
        close(
            &gamma(&CDNumber::from_real(2, 0.5)).unwrap(),
            &CDNumber::from_real(2, std::f64::consts::PI.sqrt()),
            1e-14,
        );
    }

    #[test]
    fn gamma_slice_lift_against_oracle() {
        // Gamma(1 + e1 + e2 + e3) lifts Gamma(1 + i sqrt3); 40-digit oracle
        let z = parse_cd("1 + e1 + e2 + e3", Some(2)).unwrap();
        let g = gamma(&z).unwrap();
        let axis = z.pure().scale(1.0 / 3f64.sqrt());
        let want = &CDNumber::from_real(2, 0.21695529229816218867)
            + &axis.scale(-0.0095403850474265065666);
        close(&g, &want, 1e-13);
    }

    #[test]
    fn gamma_rejects_poles() {
        for bad in ["0", "-1", "-2"] {
            let z = parse_cd(bad, Some(2)).unwrap();
            assert!(matches!(gamma(&z), Err(Error::Pole { .. })), "at {bad}");
        }
        // near-pole within eps
        let z = CDNumber::from_real(2, -3.0 + 1e-12);
        assert!(gamma(&z).is_err());
        // but 1e-4 away is fine
        let z = CDNumber::from_real(2, -3.0 + 1e-4);
        assert!(gamma(&z).is_ok());
    }

    #[test]
    fn residues() {
        assert_eq!(gamma_residue(0).unwrap(), 1.0);
        assert_eq!(gamma_residue(3).unwrap(), -1.0 / 6.0);
        assert!(gamma_residue(-1).is_err());
    }

    #[test]
    fn residue_limit_on_slices() {
        // (z+n) gamma(z) at z = -n + 1e-4 M approaches (-1)^n/n! transversally;
        // the real part carries the residue to O(1e-8).
        for n in [0i64, 1, 2, 5] {
            let m = CDNumber::basis(2, 2).unwrap();
            let z = &CDNumber::from_real(2, -(n as f64)) + &m.scale(1e-4);
            let v = &(&z + &CDNumber::from_real(2, n as f64)) * &gamma(&z).unwrap();
            let want = gamma_residue(n).unwrap();
            assert!(
                (v.re() - want).abs() < 1e-6,
                "n = {n}: got {} want {want}",
                v.re()
            );
        }
    }

    #[test]
    fn integral_route() {
        let cfg = QuadratureConfig::default();
        close(
            &gamma_integral(&CDNumber::from_real(2, 2.0), &cfg).unwrap(),
            &CDNumber::one(2),
            1e-9,
        );
        close(
            &gamma_integral(&CDNumber::from_real(2, 0.5), &cfg).unwrap(),
            &CDNumber::from_real(2, std::f64::consts::PI.sqrt()),
            1e-9,
        );
        let z = parse_cd("0.5 + 2e3", Some(2)).unwrap();
        let a = gamma_integral(&z, &cfg).unwrap();
        let b = gamma(&z).unwrap();
        close(&a, &b, 1e-8);
        assert!(gamma_integral(&CDNumber::from_real(2, -0.5), &cfg).is_err());
    }

    #[test]
    fn identities_at_sample_points() {
        let z = parse_cd("3.7", Some(2)).unwrap();
        let r = verify_identity(IdentityKind::Recurrence, &z).unwrap();
        assert!(r.residual < 1e-12, "residual {}", r.residual);

        // reflection at 1/2: both sides pi
        let z = parse_cd("0.5", Some(2)).unwrap();
        let r = verify_identity(IdentityKind::Reflection, &z).unwrap();
        assert!((r.lhs.re() - std::f64::consts::PI).abs() < 1e-12);
        assert!((r.rhs.re() - std::f64::consts::PI).abs() < 1e-12);
        assert!(r.residual < 1e-12);

        // duplication on a level-3 slice
        let z = parse_cd("0.75 + 2e6", Some(3)).unwrap();
        let r = verify_identity(IdentityKind::Duplication, &z).unwrap();
        assert!(r.residual < 1e-10, "residual {}", r.residual);
    }

    #[test]
    fn identity_pole_errors_name_the_subexpression() {
        let z = parse_cd("0", Some(2)).unwrap();
        match verify_identity(IdentityKind::Recurrence, &z) {
            Err(Error::Pole { what, .. }) => assert_eq!(what, "gamma(z)"),
            other => panic!("expected pole error, got {other:?}"),
        }
        let z = parse_cd("1", Some(2)).unwrap();
        match verify_identity(IdentityKind::Reflection, &z) {
            Err(Error::Pole { what, .. }) => assert_eq!(what, "gamma(1-z)"),
            other => panic!("expected pole error, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_symmetry_on_slices() {
        let z = parse_cd("1.3 + 0.7e1 - 0.4e2", Some(2)).unwrap();
        let a = gamma(&z.conj()).unwrap();
        let b = gamma(&z).unwrap().conj();
        close(&a, &b, 1e-13);
    }
}
