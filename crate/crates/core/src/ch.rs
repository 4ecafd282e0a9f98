//! The Campbell-Hausdorff series `w(u, v) = ln(e^u e^v)` as the truncated
//! double sum over nested commutators
//!
//! ```text
//! w = sum_{n>=1} n^-1 sum_{r+s=n} (w'_{r,s} + w''_{r,s})
//! ```
//!
//! where `w'` terms end in `(ad u)^{r_m} (v)` and `w''` terms end in `u`,
//! summed over all block sequences `(r_i, s_i)` with `r_i + s_i >= 1`.
//! Valid in associative (quaternionic) subalgebras; the real parts of the
//! inputs are central and drop out of every bracket, so the norm guard
//! applies to the pure parts, which govern convergence.

use crate::algebra::{associator, commutator, CDNumber};
use crate::elementary::{cd_exp, cd_ln};
use crate::error::{Error, Result};

/// Truncation and convergence controls for [`ch_w`].
#[derive(Debug, Clone)]
pub struct CHConfig {
    /// Total bracket degree kept.
    pub truncation_order: usize,
    /// Maximum `|u'| + |v'|` accepted (pure parts; the classical
    /// convergence-safe bound is ln 2).
    pub norm_guard: f64,
}

impl Default for CHConfig {
    fn default() -> Self {
        Self {
            truncation_order: 8,
            norm_guard: std::f64::consts::LN_2,
        }
    }
}

/// Tolerance for the associativity check admitting higher-level inputs.
const EPS_ASSOCIATOR: f64 = 1e-10;

/// True when the subalgebra generated by `u` and `v` behaves associatively:
/// automatic for levels <= 3 (any two elements of an alternative algebra
/// generate an associative subalgebra), checked numerically above that.
pub fn embeds_in_quaternions(u: &CDNumber, v: &CDNumber) -> bool {
    if u.level() != v.level() {
        return false;
    }
    if u.level() <= 3 {
        return true;
    }
    let uv = u * v;
    let gens = [u, v, &uv];
    let scale = (1.0 + u.norm() + v.norm()).powi(3);
    for a in gens {
        for b in gens {
            for c in gens {
                if associator(a, b, c).norm() > EPS_ASSOCIATOR * scale {
                    return false;
                }
            }
        }
    }
    true
}

/// The truncated Campbell-Hausdorff sum for `ln(e^u e^v)`.
///
/// Commuting inputs return `u + v` exactly at any order (every bracket
/// vanishes). For noncommuting inputs the pure-part norms must stay under
/// the guard, and the result matches the direct group logarithm
/// `cd_ln(cd_exp(u) cd_exp(v))` within the truncation error.
pub fn ch_w(u: &CDNumber, v: &CDNumber, cfg: &CHConfig) -> Result<CDNumber> {
    if cfg.truncation_order < 1 {
        return Err(Error::InvalidParameter(
            "truncation_order must be at least 1".into(),
        ));
    }
    if !embeds_in_quaternions(u, v) {
        return Err(Error::Precondition(
            "inputs do not generate an associative (quaternionic) subalgebra".into(),
        ));
    }
    let sum = u + v;
    let first = commutator(u, v);
    if first.is_zero() {
        return Ok(sum);
    }
    let pure_norms = u.pure().norm() + v.pure().norm();
    if pure_norms >= cfg.norm_guard {
        return Err(Error::Precondition(format!(
            "convergence risk: |u'| + |v'| = {pure_norms:.4} exceeds the guard {:.4}",
            cfg.norm_guard
        )));
    }

    let mut acc = sum;
    for n in 2..=cfg.truncation_order {
        let mut wn = CDNumber::zero(u.level());
        for r in 0..=n {
            let s = n - r;
            if s >= 1 {
                accumulate_w_prime(u, v, r, s, &mut wn);
            }
            if r >= 1 {
                accumulate_w_double_prime(u, v, r, s, &mut wn);
            }
        }
        acc = &acc + &wn.scale(1.0 / n as f64);
    }
    Ok(acc)
}

/// Direct group logarithm `ln(e^u e^v)`; the oracle the series must match.
pub fn group_log(u: &CDNumber, v: &CDNumber) -> Result<CDNumber> {
    cd_ln(&(&cd_exp(u) * &cd_exp(v)))
}

/// `w'_{r,s}` terms: blocks `(r_1,s_1)..(r_{m-1},s_{m-1})` plus a trailing
/// `(ad u)^{r_m}` applied to `v`, with `sum r_i + r_m = r`,
/// `sum s_i = s - 1`.
fn accumulate_w_prime(u: &CDNumber, v: &CDNumber, r: usize, s: usize, out: &mut CDNumber) {
    let max_m = r + s + 1;
    for m in 1..=max_m {
        for rm in 0..=r {
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            for_each_blocks(r - rm, s - 1, m - 1, &mut |blocks, denom| {
                let mut x = ad_pow(u, v.clone(), rm);
                for &(ri, si) in blocks.iter().rev() {
                    x = ad_pow(v, x, si);
                    x = ad_pow(u, x, ri);
                }
                let coef = sign / (m as f64 * denom * factorial(rm));
                *out = &*out + &x.scale(coef);
            });
        }
    }
}

/// `w''_{r,s}` terms: blocks applied to a trailing `u`, with
/// `sum r_i = r - 1`, `sum s_i = s`.
fn accumulate_w_double_prime(u: &CDNumber, v: &CDNumber, r: usize, s: usize, out: &mut CDNumber) {
    let max_m = r + s + 1;
    for m in 1..=max_m {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        for_each_blocks(r - 1, s, m - 1, &mut |blocks, denom| {
            let mut x = u.clone();
            for &(ri, si) in blocks.iter().rev() {
                x = ad_pow(v, x, si);
                x = ad_pow(u, x, ri);
            }
            let coef = sign / (m as f64 * denom);
            *out = &*out + &x.scale(coef);
        });
    }
}

/// Enumerates block sequences `(r_i, s_i)`, each with `r_i + s_i >= 1`,
/// summing to the given totals; calls `f(blocks, prod r_i! s_i!)`.
fn for_each_blocks(
    total_r: usize,
    total_s: usize,
    m_blocks: usize,
    f: &mut impl FnMut(&[(usize, usize)], f64),
) {
    fn rec(
        total_r: usize,
        total_s: usize,
        remaining: usize,
        denom: f64,
        stack: &mut Vec<(usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize)], f64),
    ) {
        if remaining == 0 {
            if total_r == 0 && total_s == 0 {
                f(stack, denom);
            }
            return;
        }
        // remaining blocks each need at least degree 1
        if total_r + total_s < remaining {
            return;
        }
        for ri in 0..=total_r {
            for si in 0..=total_s {
                if ri + si < 1 {
                    continue;
                }
                stack.push((ri, si));
                rec(
                    total_r - ri,
                    total_s - si,
                    remaining - 1,
                    denom * factorial(ri) * factorial(si),
                    stack,
                    f,
                );
                stack.pop();
            }
        }
    }
    let mut stack = Vec::with_capacity(m_blocks);
    rec(total_r, total_s, m_blocks, 1.0, &mut stack, f);
}

fn ad_pow(x: &CDNumber, mut target: CDNumber, k: usize) -> CDNumber {
    for _ in 0..k {
        target = commutator(x, &target);
    }
    target
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
