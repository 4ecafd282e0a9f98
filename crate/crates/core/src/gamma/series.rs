//! The pole-series route: `Gamma = Phi + Psi` where
//!
//! * `Phi(z) = sum_n (-1)^n (n + z)^-1 / n!` carries every pole and is the
//!   analytic continuation of `integral_0^1 e^-t t^(z-1) dt`,
//! * `Psi(z) = integral_1^inf e^-t t^(z-1) dt` is entire.

use crate::algebra::CDNumber;
use crate::elementary::real_power;
use crate::error::{Error, Result};
use crate::quad::{integrate_semi_infinite, IntegralResult, QuadratureConfig};

/// The pole series alone: `sum_{n < n_terms} (-1)^n (n + z)^-1 / n!`.
pub fn phi_series(z: &CDNumber, n_terms: usize) -> Result<CDNumber> {
    let mut sum = CDNumber::zero(z.level());
    let mut inv_fact = 1.0f64;
    for n in 0..n_terms {
        if n > 0 {
            inv_fact /= n as f64;
        }
        let shifted = z + &CDNumber::from_real(z.level(), n as f64);
        if shifted.norm() < super::EPS_POLE {
            return Err(Error::Pole {
                what: "phi series term".into(),
                location: format!("z = -{n}"),
                distance: shifted.norm(),
            });
        }
        let term = shifted.inverse()?.scale(if n % 2 == 0 { inv_fact } else { -inv_fact });
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `Phi(z) + Psi(z)`; valid at every non-pole argument, including the left
/// half-plane where the direct integral diverges.
pub fn gamma_phi_series(
    z: &CDNumber,
    n_terms: usize,
    cfg: &QuadratureConfig,
) -> Result<CDNumber> {
    Ok(gamma_phi_series_eval(z, n_terms, cfg)?.value)
}

pub(crate) fn gamma_phi_series_eval(
    z: &CDNumber,
    n_terms: usize,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    super::check_pole(z, "gamma_phi_series")?;
    let phi = phi_series(z, n_terms)?;
    let zm1 = z - &CDNumber::one(z.level());
    let psi = integrate_semi_infinite(
        |t| real_power(t, &zm1).expect("t > 0").scale((-t).exp()),
        1.0,
        cfg,
    )?;
    // truncation tail of the alternating series is below the first dropped term
    let tail = {
        let mut f = 1.0f64;
        for k in 2..=n_terms {
            f *= k as f64;
        }
        1.0 / f
    };
    Ok(IntegralResult {
        value: &phi + &psi.value,
        error_estimate: psi.error_estimate + tail,
        evaluations: psi.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;
    use crate::gamma::gamma;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn reproduces_gamma_on_the_right_half_plane() {
        let z = CDNumber::one(2);
        let g = gamma_phi_series(&z, 30, &cfg()).unwrap();
        assert!((g.re() - 1.0).abs() < 1e-10, "got {}", g.re());
    }

    #[test]
    fn continues_past_the_integral_domain() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let z = CDNumber::from_real(2, -0.5);
        let g = gamma_phi_series(&z, 30, &cfg()).unwrap();
        let want = -2.0 * std::f64::consts::PI.sqrt();
        assert!((g.re() - want).abs() < 1e-9, "got {} want {want}", g.re());

        // cross-method agreement at a level-2 point left of the axis
        let z = parse_cd("-1.5 + e2", Some(2)).unwrap();
        let a = gamma_phi_series(&z, 30, &cfg()).unwrap();
        let b = gamma(&z).unwrap();
        assert!((&a - &b).norm() < 1e-9, "diff {}", (&a - &b).norm());
    }

    #[test]
    fn respects_pole_guard() {
        let z = CDNumber::from_real(2, -2.0);
        assert!(gamma_phi_series(&z, 20, &cfg()).is_err());
    }

    #[test]
    fn psi_part_matches_oracle() {
        // Psi(2 + e2) lifts integral_1^inf e^-t t^(1+i) dt; 40-digit oracle
        let z = parse_cd("2 + e2", Some(2)).unwrap();
        let zm1 = &z - &CDNumber::one(2);
        let psi = integrate_semi_infinite(
            |t| real_power(t, &zm1).unwrap().scale((-t).exp()),
            1.0,
            &cfg(),
        )
        .unwrap();
        let e2 = CDNumber::basis(2, 2).unwrap();
        let want = &CDNumber::from_real(2, 0.46162823822661892942)
            + &e2.scale(0.46704598016131653141);
        assert!(
            (&psi.value - &want).norm() < 1e-9,
            "diff {}",
            (&psi.value - &want).norm()
        );
    }
}
