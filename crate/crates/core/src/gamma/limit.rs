//! The limit form `Gamma(z, n) = n! n^z [(z)(z+1)...(z+n)]^-1` and the
//! Euler product `z^-1 prod_m (1 + 1/m)^z (1 + z/m)^-1`.
//!
//! Every factor lives in the slice plane of `z`, which is closed under
//! multiplication and isomorphic to C, so the left-folded product equals
//! the complex product there. For large `n` the factors overflow f64 long
//! before the fold finishes, so the fold is carried in logarithmic form in
//! the slice; `exp(sum ln(z+k))` equals the product regardless of which
//! branch each logarithm lands on.

use crate::algebra::CDNumber;
use crate::elementary::{real_power, slice_decompose};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Relative-error model of the limit form: `|z (z+1)| / (2 n)` to leading
/// order.
pub fn gamma_limit_error_model(z: &CDNumber, n: u64) -> f64 {
    let frame = slice_decompose(z);
    let zc = frame.complex_coord();
    (zc * (zc + 1.0)).norm() / (2.0 * n as f64)
}

/// `Gamma(z, n)`; converges to `Gamma(z)` like `1/n` on pole-free sets.
pub fn gamma_limit(z: &CDNumber, n: u64) -> Result<CDNumber> {
    if n < 1 {
        return Err(Error::Domain("limit form needs n >= 1".into()));
    }
    let frame = slice_decompose(z);
    let zc = frame.complex_coord();
    // singular-factor guard: z must avoid {0, -1, ..., -n}
    if zc.im.abs() < super::EPS_POLE {
        let r = zc.re.round();
        if (zc.re - r).abs() < super::EPS_POLE && r <= 0.0 && -r <= n as f64 {
            return Err(Error::Pole {
                what: "gamma_limit factor".into(),
                location: format!("z = {}", r as i64),
                distance: (zc.re - r).abs(),
            });
        }
    }
    // ln n! + z ln n - sum_k ln(z + k), accumulated in the slice
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        acc -= (zc + k as f64).ln();
    }
    let nf = n as f64;
    for k in 2..=n {
        acc += (k as f64).ln();
    }
    acc += zc * nf.ln();
    Ok(frame.lift(acc.exp()))
}

/// `z^-1 prod_{m=1}^{n} (1 + 1/m)^z (1 + z/m)^-1`, evaluated factor by
/// factor with `real_power` and the Cayley-Dickson inverse.
pub fn gamma_euler_product(z: &CDNumber, n_factors: u64) -> Result<CDNumber> {
    let level = z.level();
    if z.norm() < super::EPS_POLE {
        return Err(Error::Pole {
            what: "euler product leading factor".into(),
            location: "z = 0".into(),
            distance: z.norm(),
        });
    }
    let mut acc = z.inverse()?;
    for m in 1..=n_factors {
        let mf = m as f64;
        let base = real_power(1.0 + 1.0 / mf, z)?;
        let shifted = &CDNumber::one(level) + &z.scale(1.0 / mf);
        if shifted.norm() < super::EPS_POLE {
            return Err(Error::Pole {
                what: "euler product factor".into(),
                location: format!("z = -{m}"),
                distance: shifted.norm(),
            });
        }
        acc = &(&acc * &base) * &shifted.inverse()?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;
    use crate::gamma::gamma;

    #[test]
    fn telescoping_at_one() {
        // Gamma(1, n) = n/(n+1) exactly
        for n in [1u64, 5, 40] {
            let v = gamma_limit(&CDNumber::one(2), n).unwrap();
            let want = n as f64 / (n as f64 + 1.0);
            assert!((v.re() - want).abs() < 1e-12, "n = {n}");
            assert!(v.pure_norm() < 1e-12);
        }
    }

    #[test]
    fn log_fold_matches_direct_fold_at_small_n() {
        // left fold in plain CD arithmetic, feasible for small n
        let z = parse_cd("0.8 + 0.6e1 - 0.3e3", Some(2)).unwrap();
        let n = 12u64;
        let mut prod = z.clone();
        for k in 1..=n {
            prod = &prod * &(&z + &CDNumber::from_real(2, k as f64));
        }
        let mut fact = 1.0f64;
        for k in 2..=n {
            fact *= k as f64;
        }
        let direct = &real_power(n as f64, &z).unwrap().scale(fact) * &prod.inverse().unwrap();
        let log_form = gamma_limit(&z, n).unwrap();
        assert!(
            (&direct - &log_form).norm() < 1e-12,
            "diff {}",
            (&direct - &log_form).norm()
        );
    }

    #[test]
    fn converges_to_gamma_like_one_over_n() {
        let z = parse_cd("0.5", Some(2)).unwrap();
        let g = gamma(&z).unwrap();
        let err_at = |n: u64| (&gamma_limit(&z, n).unwrap() - &g).norm() / g.norm();
        let e4 = err_at(10_000);
        assert!(e4 < 1e-3, "e4 = {e4}");
        // error ratio across one decade is close to 10
        let e3 = err_at(1_000);
        let order = (e3 / e4).log10();
        assert!((0.8..=1.2).contains(&order), "fitted order {order}");
    }

    #[test]
    fn limit_on_a_pure_axis() {
        let z = parse_cd("e1", Some(2)).unwrap();
        let g = gamma(&z).unwrap();
        let v = gamma_limit(&z, 200_000).unwrap();
        assert!(
            (&v - &g).norm() / g.norm() < 1e-4,
            "rel diff {}",
            (&v - &g).norm() / g.norm()
        );
    }

    #[test]
    fn limit_rejects_singular_factors() {
        assert!(gamma_limit(&CDNumber::from_real(2, -3.0), 10).is_err());
        assert!(gamma_limit(&CDNumber::zero(2), 10).is_err());
    }

    #[test]
    fn euler_product_examples() {
        // every factor is exactly 1 at z = 1
        let v = gamma_euler_product(&CDNumber::one(2), 17).unwrap();
        assert!((v.re() - 1.0).abs() < 1e-13);

        // Gamma(2) = 1 within the telescoping tail ~ 1/n
        let v = gamma_euler_product(&CDNumber::from_real(2, 2.0), 10_000).unwrap();
        assert!((v.re() - 1.0).abs() < 1e-3, "got {}", v.re());

        // level-3 cross-method agreement
        let z = parse_cd("1 + e5", Some(3)).unwrap();
        let v = gamma_euler_product(&z, 10_000).unwrap();
        let g = gamma(&z).unwrap();
        assert!(
            (&v - &g).norm() / g.norm() < 1e-3,
            "rel diff {}",
            (&v - &g).norm() / g.norm()
        );

        assert!(gamma_euler_product(&CDNumber::from_real(2, -5.0), 10).is_err());
    }
}
