//! Bernoulli numbers in the coth-generating-function convention, the
//! Stirling asymptotic series for `Ln Gamma`, and the large-`|y|` magnitude
//! asymptote `|Gamma(x + M y)| ~ sqrt(2 pi) |y|^(x - 1/2) exp(-pi |y| / 2)`.

use crate::algebra::CDNumber;
use crate::elementary::{cd_ln, slice_decompose};
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::f64::consts::PI;

/// Bernoulli numbers `B_1 .. B_n` in the all-positive convention fixed by
///
/// ```text
/// (z/2) coth(z/2) = 1 + sum_{k>=1} (-1)^(k-1) B_k z^(2k) / (2k)!
/// ```
///
/// so `B_1 = 1/6`, `B_2 = 1/30`, `B_3 = 1/42`, ... (not the modern signed
/// convention).
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    /// `B_k`, 1-indexed.
    pub fn value(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn big_factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

/// Extracts `B_1 .. B_n` by exact rational series division of the
/// generating identity: with `u = z^2/4`,
/// `(z/2) coth(z/2) = A(u)/B(u)` where `A(u) = sum u^m/(2m)!` and
/// `B(u) = sum u^m/(2m+1)!`; the quotient's coefficients recover `B_k`.
pub fn bernoulli_numbers(n: usize) -> Result<BernoulliTable> {
    if n < 1 {
        return Err(Error::Domain("bernoulli_numbers needs n >= 1".into()));
    }
    let rat = |num: i64, den: BigInt| BigRational::new(BigInt::from(num), den);
    let a: Vec<BigRational> = (0..=n).map(|m| rat(1, big_factorial(2 * m))).collect();
    let b: Vec<BigRational> = (0..=n).map(|m| rat(1, big_factorial(2 * m + 1))).collect();
    // g = a / b as power series in u
    let mut g: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut c = a[m].clone();
        for j in 0..m {
            c -= g[j].clone() * b[m - j].clone();
        }
        g.push(c / b[0].clone());
    }
    // (z/2) coth(z/2) = 1 + sum g_k u^k with u = z^2/4, so the z^(2k)
    // coefficient is g_k / 4^k = (-1)^(k-1) B_k / (2k)!
    let mut values = Vec::with_capacity(n);
    for k in 1..=n {
        let four_k = BigRational::new(BigInt::one(), num::pow(BigInt::from(4), k));
        let coeff = g[k].clone() * four_k;
        let bk = coeff * BigRational::new(big_factorial(2 * k), BigInt::one());
        let signed = if k % 2 == 1 { bk } else { -bk };
        debug_assert!(signed.is_positive());
        values.push(signed.to_f64().ok_or_else(|| {
            Error::Domain(format!("B_{k} does not fit in f64"))
        })?);
    }
    Ok(BernoulliTable { values })
}

/// One term `coefficient * z^(-exponent)` of an asymptotic expansion.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticTerm {
    pub coefficient: f64,
    pub exponent: i32,
}

/// A truncated asymptotic expansion: correction terms in inverse powers,
/// a description of the dominant term, and the angular validity sector
/// `|Arg z| <= pi - sector_margin`.
#[derive(Debug, Clone)]
pub struct AsymptoticSeries {
    pub terms: Vec<AsymptoticTerm>,
    pub dominant_term: String,
    pub sector_margin: f64,
}

/// Default sector margin for the Stirling series.
pub const STIRLING_SECTOR_MARGIN: f64 = 1e-6;

/// The correction terms of the Stirling series:
/// `sum_k (-1)^(k-1) B_k [2k (2k-1) z^(2k-1)]^-1`.
pub fn stirling_series(n_terms: usize) -> Result<AsymptoticSeries> {
    let table = bernoulli_numbers(n_terms.max(1))?;
    let terms = (1..=n_terms)
        .map(|k| {
            let b = table.value(k);
            let denom = (2 * k * (2 * k - 1)) as f64;
            AsymptoticTerm {
                coefficient: if k % 2 == 1 { b / denom } else { -b / denom },
                exponent: (2 * k - 1) as i32,
            }
        })
        .collect();
    Ok(AsymptoticSeries {
        terms,
        dominant_term: "(z - 1/2) Ln z - z + ln(2 pi)/2".into(),
        sector_margin: STIRLING_SECTOR_MARGIN,
    })
}

/// Truncated Stirling expansion of `Ln Gamma(z)`:
///
/// ```text
/// (z - 1/2) Ln z - z + ln(2 pi)/2 + sum_k (-1)^(k-1) B_k [2k(2k-1) z^(2k-1)]^-1
/// ```
///
/// Terms are added while their magnitudes decrease (optimal truncation);
/// if even the first correction fails to decrease the magnitude, the
/// argument is too small for the series and an error is raised.
pub fn ln_gamma_stirling(z: &CDNumber, n_terms: usize) -> Result<CDNumber> {
    let frame = slice_decompose(z);
    let arg = frame.radius.atan2(frame.real_part);
    if arg > PI - STIRLING_SECTOR_MARGIN {
        return Err(Error::SectorViolation {
            arg,
            margin: STIRLING_SECTOR_MARGIN,
        });
    }
    let level = z.level();
    let half = CDNumber::from_real(level, 0.5);
    let ln_z = cd_ln(z)?;
    let mut sum = &(&(z - &half) * &ln_z) - z;
    sum = &sum + &CDNumber::from_real(level, (2.0 * PI).ln() / 2.0);

    if n_terms == 0 {
        return Ok(sum);
    }
    let series = stirling_series(n_terms)?;
    let inv = z.inverse()?;
    let inv2 = &inv * &inv;
    let mut power = inv.clone(); // z^(-(2k-1)), starting at k = 1
    let mut last_mag = f64::INFINITY;
    for (i, term) in series.terms.iter().enumerate() {
        let t = power.scale(term.coefficient);
        let mag = t.norm();
        if mag >= last_mag {
            if i == 0 {
                return Err(Error::MagnitudeTooSmall {
                    magnitude: z.norm(),
                });
            }
            // optimal truncation: terms started growing, stop here
            break;
        }
        sum = &sum + &t;
        last_mag = mag;
        power = &power * &inv2;
    }
    Ok(sum)
}

/// The magnitude asymptote of Cor-10 form:
/// `sqrt(2 pi) |y|^(x - 1/2) e^(-pi |y| / 2)`, uniform over unit axes.
pub fn gamma_magnitude_asymptotic(x: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Err(Error::Domain(
            "magnitude asymptote needs y != 0".into(),
        ));
    }
    let ay = y.abs();
    Ok((2.0 * PI).sqrt() * ay.powf(x - 0.5) * (-PI * ay / 2.0).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;
    use crate::gamma::gamma;

    /// Independent oracle: modern signed Bernoulli numbers from the binomial
    /// recursion `sum_{j<m} C(m+1, j) B_j = -(m+1) B_m`, mapped into the
    /// coth convention by `B_k(paper) = |B_2k(modern)|`.
    fn bernoulli_oracle(n: usize) -> Vec<f64> {
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=(2 * n) {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for (j, bj) in b.iter().enumerate().take(m) {
                acc += BigRational::new(binom.clone(), BigInt::one()) * bj.clone();
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b.push(-acc / BigRational::new(BigInt::from(m as i64 + 1), BigInt::one()));
        }
        (1..=n)
            .map(|k| b[2 * k].abs().to_f64().unwrap())
            .collect()
    }

    #[test]
    fn bernoulli_matches_binomial_oracle() {
        let table = bernoulli_numbers(8).unwrap();
        let oracle = bernoulli_oracle(8);
        for k in 1..=8 {
            assert!(
                (table.value(k) - oracle[k - 1]).abs() < 1e-14,
                "B_{k}: {} vs oracle {}",
                table.value(k),
                oracle[k - 1]
            );
        }
        assert!((table.value(1) - 1.0 / 6.0).abs() < 1e-16);
        assert!((table.value(2) - 1.0 / 30.0).abs() < 1e-16);
    }

    #[test]
    fn generating_function_residual_is_negligible() {
        // Compare (z/2)coth(z/2) - 1 against the truncated sum at z = 0.1,
        // both sides evaluated in cancellation-free form.
        let z: f64 = 0.1;
        let h = z / 2.0;
        // (z/2)coth(z/2) - 1 = ((z/2)cosh(z/2) - sinh(z/2)) / sinh(z/2),
        // numerator by its even series sum_m h^(2m+1) 2m/(2m+1)!
        let mut numer = 0.0;
        let mut fact = 6.0; // (2m+1)! at m = 1
        let mut hp = h * h * h;
        for m in 1..12 {
            numer += hp * (2 * m) as f64 / fact;
            hp *= h * h;
            fact *= (2 * m + 2) as f64 * (2 * m + 3) as f64;
        }
        let lhs = numer / h.sinh();

        let table = bernoulli_numbers(8).unwrap();
        let mut rhs = 0.0;
        let mut zp = z * z;
        let mut f2k = 2.0;
        for k in 1..=8 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            rhs += sign * table.value(k) * zp / f2k;
            zp *= z * z;
            f2k *= (2 * k + 1) as f64 * (2 * k + 2) as f64;
        }
        assert!(
            (lhs - rhs).abs() < 1e-16,
            "residual {:.3e}",
            (lhs - rhs).abs()
        );
    }

    #[test]
    fn stirling_real_argument() {
        // 5 terms at z = 50 against ln(49!) summed exactly
        let z = CDNumber::from_real(2, 50.0);
        let s = ln_gamma_stirling(&z, 5).unwrap();
        let want: f64 = (2..=49).map(|k| (k as f64).ln()).sum();
        assert!(
            ((s.re() - want) / want).abs() < 1e-10,
            "rel err {:.3e}",
            ((s.re() - want) / want).abs()
        );
    }

    #[test]
    fn stirling_on_a_diagonal_slice() {
        // z = 30 (1 + M)/sqrt2; compare against cd_ln(gamma) mod 2 pi
        let m = CDNumber::basis(2, 1).unwrap();
        let s = 30.0 / 2f64.sqrt();
        let z = &CDNumber::from_real(2, s) + &m.scale(s);
        let st = ln_gamma_stirling(&z, 5).unwrap();
        let direct = cd_ln(&gamma(&z).unwrap()).unwrap();
        assert!((st.re() - direct.re()).abs() < 1e-9);
        let wrapped = (st.coord(1) - direct.coord(1)).rem_euclid(2.0 * PI);
        let dist = wrapped.min(2.0 * PI - wrapped);
        assert!(dist < 1e-9, "pure-part distance {dist}");
    }

    #[test]
    fn stirling_dominant_term_ratio() {
        // exp(ln_gamma_stirling(z, 0)) / [z^(z-1/2) e^-z sqrt(2 pi)] -> 1
        let mut last = f64::INFINITY;
        for x in [10.0, 30.0, 90.0] {
            let z = CDNumber::from_real(2, x);
            let s = ln_gamma_stirling(&z, 0).unwrap();
            let dominant = (x - 0.5) * x.ln() - x + (2.0 * PI).ln() / 2.0;
            let ratio = (s.re() - dominant).abs();
            assert!(ratio < last);
            last = ratio;
        }
    }

    #[test]
    fn stirling_guards() {
        // too close to the negative axis
        let z = parse_cd("-5 + 0.0000001e1", Some(2)).unwrap();
        assert!(matches!(
            ln_gamma_stirling(&z, 5),
            Err(Error::SectorViolation { .. })
        ));
        // |z| too small for the series to start decreasing
        let z = parse_cd("0.01", Some(2)).unwrap();
        assert!(matches!(
            ln_gamma_stirling(&z, 5),
            Err(Error::MagnitudeTooSmall { .. })
        ));
    }

    #[test]
    fn magnitude_asymptote() {
        assert!((gamma_magnitude_asymptotic(0.5, 30.0).unwrap()
            - 8.5791572171224539341e-21)
            .abs()
            < 1e-33);
        // x = 1/2 removes the power prefactor
        let v = gamma_magnitude_asymptotic(0.5, 1.0).unwrap();
        assert!((v - (2.0 * PI).sqrt() * (-PI / 2.0).exp()).abs() < 1e-15);
        // monotone decay in |y| for x <= 1/2
        let a = gamma_magnitude_asymptotic(0.3, 2.0).unwrap();
        let b = gamma_magnitude_asymptotic(0.3, 3.0).unwrap();
        assert!(b < a);
        assert!(gamma_magnitude_asymptotic(0.5, 0.0).is_err());
    }
}
