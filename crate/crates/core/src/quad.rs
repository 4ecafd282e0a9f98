//! Numerical integration for Cayley-Dickson-valued integrands.
//!
//! Three engines, all double-exponential:
//!
//! * [`integrate_interval`] — finite `[a, b]` via the tanh-sinh transform,
//!   so power-law endpoint singularities `t^(a-1)`, `(1-t)^(b-1)` with
//!   positive exponents need no special casing;
//! * [`integrate_semi_infinite`] — `[a, inf)` via the exp-sinh transform for
//!   integrands with eventual exponential decay, truncated at the configured
//!   radius with the tail folded into the error estimate;
//! * [`integrate_contour`] — line integrals `integral f(zeta) zeta'(s) ds`
//!   along piecewise-smooth paths inside one slice plane, products taken in
//!   the written order. Path points carry their polar angle so integrands
//!   can distinguish the two edges of a branch cut (the Hankel loop runs at
//!   phases -pi and +pi).

use crate::algebra::{CDNumber, PureImaginaryUnit};
use crate::elementary::slice_decompose;
use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};

/// Tolerances and truncation controls for the integration engines.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_refinements: usize,
    /// Truncation radius `R` for semi-infinite integrals and Hankel rays.
    pub truncation_radius: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_refinements: 10,
            truncation_radius: 60.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidParameter("abs_tol must be positive".into()));
        }
        if !(self.rel_tol >= 0.0) {
            return Err(Error::InvalidParameter(
                "rel_tol must be non-negative".into(),
            ));
        }
        if !(self.truncation_radius > 0.0) {
            return Err(Error::InvalidParameter(
                "truncation_radius must be positive".into(),
            ));
        }
        if self.max_refinements == 0 {
            return Err(Error::InvalidParameter(
                "max_refinements must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn tolerance_for(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale)
    }
}

/// Integral value with a conservative componentwise error estimate.
#[derive(Debug, Clone)]
pub struct IntegralResult {
    pub value: CDNumber,
    pub error_estimate: f64,
    pub evaluations: u64,
}

// ---------------------------------------------------------------------------
// tanh-sinh on a finite interval
// ---------------------------------------------------------------------------

/// Largest tanh-sinh parameter before the weights underflow.
const T_MAX: f64 = 6.115;

/// Integrates `f` over `[a, b]`.
pub fn integrate_interval(
    f: impl Fn(f64) -> CDNumber,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    cfg.validate()?;
    if !(a < b) {
        return Err(Error::InvalidParameter(format!(
            "interval endpoints must satisfy a < b, got [{a}, {b}]"
        )));
    }
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut evals: u64 = 0;

    // One tanh-sinh level: sum of w(kh) f(x(kh)) over all |k| <= T_MAX/h.
    let mut level_sum = |h: f64| -> Result<CDNumber> {
        let mut sum = f(mid).scale(FRAC_PI_2);
        check_nan(&sum, mid)?;
        evals += 1;
        let mut k = 1usize;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let g = FRAC_PI_2 * t.sinh();
            let offset = 2.0 / ((2.0 * g).exp() + 1.0); // 1 - tanh(g), stable
            let cg = g.cosh();
            let w = FRAC_PI_2 * t.cosh() / (cg * cg);
            if w < 1e-290 || offset == 0.0 {
                break;
            }
            let x_hi = b - half * offset;
            let x_lo = a + half * offset;
            if x_hi >= b || x_lo <= a {
                break;
            }
            let fh = f(x_hi);
            check_nan(&fh, x_hi)?;
            let fl = f(x_lo);
            check_nan(&fl, x_lo)?;
            evals += 2;
            sum = &sum + &(&fh + &fl).scale(w);
            k += 1;
        }
        Ok(sum.scale(half * h))
    };

    let mut h = 1.0;
    let mut prev = level_sum(h)?;
    let mut best_err = f64::INFINITY;
    for refinement in 1..=cfg.max_refinements {
        h *= 0.5;
        let cur = level_sum(h)?;
        let diff = max_abs_diff(&cur, &prev);
        let tol = cfg.tolerance_for(cur.norm());
        if diff <= tol {
            return Ok(IntegralResult {
                value: cur,
                error_estimate: diff.max(f64::EPSILON * cur.norm()),
                evaluations: evals,
            });
        }
        best_err = diff;
        prev = cur;
        if refinement == cfg.max_refinements {
            return Err(Error::AccuracyFailure {
                estimate: best_err,
                refinements: refinement,
                best: prev.coords().to_vec(),
            });
        }
    }
    unreachable!("loop returns or errors")
}

// ---------------------------------------------------------------------------
// exp-sinh on a semi-infinite interval
// ---------------------------------------------------------------------------

/// Integrates `f` over `[a, inf)`, assuming eventual exponential decay
/// (caller-asserted). Points beyond `a + truncation_radius` are dropped and
/// a decay-model tail bound is folded into the error estimate.
pub fn integrate_semi_infinite(
    f: impl Fn(f64) -> CDNumber,
    a: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    cfg.validate()?;
    let radius = cfg.truncation_radius;
    let mut evals: u64 = 0;

    let mut level_sum = |h: f64| -> Result<CDNumber> {
        // node at u = 0: t - a = 1, dt/du = pi/2
        let f0 = f(a + 1.0);
        check_nan(&f0, a + 1.0)?;
        evals += 1;
        let mut sum = f0.scale(FRAC_PI_2);
        // positive u: t grows double-exponentially
        let mut k = 1usize;
        loop {
            let u = k as f64 * h;
            let g = FRAC_PI_2 * u.sinh();
            let dist = g.exp();
            if dist > radius {
                break;
            }
            let w = FRAC_PI_2 * u.cosh() * dist;
            let x = a + dist;
            let fx = f(x);
            check_nan(&fx, x)?;
            evals += 1;
            sum = &sum + &fx.scale(w);
            k += 1;
            if u > 6.0 {
                break;
            }
        }
        // negative u: t -> a+, handles endpoint singularities
        let mut k = 1usize;
        loop {
            let u = -(k as f64) * h;
            let g = FRAC_PI_2 * u.sinh();
            let dist = g.exp();
            if dist == 0.0 {
                break;
            }
            let w = FRAC_PI_2 * u.cosh() * dist;
            if w < 1e-290 {
                break;
            }
            let x = a + dist;
            if x <= a {
                break;
            }
            let fx = f(x);
            check_nan(&fx, x)?;
            evals += 1;
            sum = &sum + &fx.scale(w);
            k += 1;
            if -u > 7.0 {
                break;
            }
        }
        Ok(sum.scale(h))
    };

    // tail bound from the caller-asserted decay |f| <= C e^{-ct}, c >= 1/2
    let tail = 2.0 * f(a + radius).norm();
    evals += 1;

    let mut h = 1.0;
    let mut prev = level_sum(h)?;
    for refinement in 1..=cfg.max_refinements {
        h *= 0.5;
        let cur = level_sum(h)?;
        let diff = max_abs_diff(&cur, &prev);
        let tol = cfg.tolerance_for(cur.norm());
        if diff <= tol {
            return Ok(IntegralResult {
                value: cur,
                error_estimate: (diff + tail).max(f64::EPSILON * cur.norm()),
                evaluations: evals,
            });
        }
        prev = cur;
        if refinement == cfg.max_refinements {
            return Err(Error::AccuracyFailure {
                estimate: diff + tail,
                refinements: refinement,
                best: prev.coords().to_vec(),
            });
        }
    }
    unreachable!("loop returns or errors")
}

// ---------------------------------------------------------------------------
// contours in a slice plane
// ---------------------------------------------------------------------------

/// A parametrized integration path confined to one slice plane.
#[derive(Debug, Clone)]
pub enum Contour {
    /// Straight segment between two points sharing a slice.
    Interval { from: CDNumber, to: CDNumber },
    /// Ray from `start` towards `start + s * direction`, `s` in `[0, inf)`;
    /// truncated at the configured radius.
    SemiInfinite {
        start: CDNumber,
        direction: CDNumber,
    },
    /// Loop from `-R` below the branch cut, around 0 at radius `delta`,
    /// back to `-R` above the cut; positively oriented.
    HankelLoop {
        delta: f64,
        radius: f64,
        axis: PureImaginaryUnit,
    },
    /// Circle of given center and radius, counterclockwise from angle -pi.
    Circle {
        center: CDNumber,
        radius: f64,
        axis: PureImaginaryUnit,
    },
}

/// Builds the three-segment Hankel loop in the plane `R + M R`.
pub fn hankel_contour(delta: f64, radius: f64, axis: PureImaginaryUnit) -> Result<Contour> {
    if !(0.0 < delta && delta < radius) {
        return Err(Error::InvalidParameter(format!(
            "hankel loop needs 0 < delta < R, got delta = {delta}, R = {radius}"
        )));
    }
    Ok(Contour::HankelLoop {
        delta,
        radius,
        axis,
    })
}

/// A point on a contour: the Cayley-Dickson value plus its polar data in
/// the slice plane. `angle` is the path's own phase and distinguishes the
/// lower (-pi) and upper (+pi) edges of the cut, which coincide as points.
#[derive(Debug, Clone)]
pub struct PathPoint {
    pub point: CDNumber,
    pub radius: f64,
    pub angle: f64,
    pub axis: PureImaginaryUnit,
}

impl PathPoint {
    /// Principal logarithm consistent with the path phase:
    /// `ln(radius) + angle * M`.
    pub fn ln(&self) -> CDNumber {
        let mut l = self.axis.as_cd().scale(self.angle);
        let mut coords = l.into_coords();
        coords[0] += self.radius.ln();
        l = CDNumber::new(self.axis.level(), coords).expect("axis level");
        l
    }

    /// `self.point ^ w` via the path-phase logarithm (`w` must share the
    /// slice; callers on a contour always satisfy this).
    pub fn power(&self, w: &CDNumber) -> CDNumber {
        crate::elementary::cd_exp(&(w * &self.ln()))
    }
}

struct Segment {
    /// Maps s in [0, 1] to (point, d zeta/d s).
    eval: Box<dyn Fn(f64) -> (PathPoint, CDNumber)>,
}

fn in_plane_point(axis: &PureImaginaryUnit, x: f64, y: f64, angle_hint: Option<f64>) -> PathPoint {
    let mut p = axis.as_cd().scale(y);
    let mut coords = p.into_coords();
    coords[0] += x;
    p = CDNumber::new(axis.level(), coords).expect("axis level");
    PathPoint {
        point: p,
        radius: (x * x + y * y).sqrt(),
        angle: angle_hint.unwrap_or_else(|| y.atan2(x)),
        axis: axis.clone(),
    }
}

fn segments_of(contour: &Contour, cfg: &QuadratureConfig) -> Result<Vec<Segment>> {
    match contour {
        Contour::Interval { from, to } => {
            let axis = common_axis(from, to)?;
            let (fx, fy) = plane_coords(from, &axis);
            let (tx, ty) = plane_coords(to, &axis);
            let d = to - from;
            Ok(vec![Segment {
                eval: Box::new(move |s| {
                    let x = fx + s * (tx - fx);
                    let y = fy + s * (ty - fy);
                    (in_plane_point(&axis, x, y, None), d.clone())
                }),
            }])
        }
        Contour::SemiInfinite { start, direction } => {
            let axis = common_axis(start, direction)?;
            let (sx, sy) = plane_coords(start, &axis);
            let (dx, dy) = plane_coords(direction, &axis);
            let r = cfg.truncation_radius;
            let d = direction.scale(r);
            Ok(vec![Segment {
                eval: Box::new(move |s| {
                    let x = sx + s * r * dx;
                    let y = sy + s * r * dy;
                    (in_plane_point(&axis, x, y, None), d.clone())
                }),
            }])
        }
        Contour::Circle {
            center,
            radius,
            axis,
        } => {
            let frame = slice_decompose(center);
            if frame.radius > 0.0 {
                let defect = (frame.axis.as_cd() - axis.as_cd())
                    .norm()
                    .min((frame.axis.as_cd() + axis.as_cd()).norm());
                if defect > 1e-10 {
                    return Err(Error::ContourNotPlanar(
                        "circle center lies outside the plane of its axis".into(),
                    ));
                }
            }
            let (cx, cy) = plane_coords(center, axis);
            let r = *radius;
            let axis = axis.clone();
            Ok(vec![circle_segment(axis, cx, cy, r, -PI, PI)])
        }
        Contour::HankelLoop {
            delta,
            radius,
            axis,
        } => {
            let (delta, radius) = (*delta, *radius);
            if !(0.0 < delta && delta < radius) {
                return Err(Error::InvalidParameter(
                    "hankel loop needs 0 < delta < R".into(),
                ));
            }
            let ax1 = axis.clone();
            let ax3 = axis.clone();
            let lower = Segment {
                // zeta = -u, u from R down to delta, phase -pi
                eval: Box::new(move |s| {
                    let u = radius + s * (delta - radius);
                    let p = in_plane_point(&ax1, -u, 0.0, Some(-PI));
                    (p, CDNumber::from_real(ax1.level(), radius - delta))
                }),
            };
            let circle = circle_segment(axis.clone(), 0.0, 0.0, delta, -PI, PI);
            let upper = Segment {
                // zeta = -u, u from delta up to R, phase +pi
                eval: Box::new(move |s| {
                    let u = delta + s * (radius - delta);
                    let p = in_plane_point(&ax3, -u, 0.0, Some(PI));
                    (p, CDNumber::from_real(ax3.level(), delta - radius))
                }),
            };
            Ok(vec![lower, circle, upper])
        }
    }
}

fn circle_segment(
    axis: PureImaginaryUnit,
    cx: f64,
    cy: f64,
    r: f64,
    theta0: f64,
    theta1: f64,
) -> Segment {
    Segment {
        eval: Box::new(move |s| {
            let theta = theta0 + s * (theta1 - theta0);
            let x = cx + r * theta.cos();
            let y = cy + r * theta.sin();
            let hint = if cx == 0.0 && cy == 0.0 {
                Some(theta)
            } else {
                None
            };
            let p = in_plane_point(&axis, x, y, hint);
            // d zeta/d s = r (theta1 - theta0) M e^{M theta}
            let span = theta1 - theta0;
            let dx = -r * span * theta.sin();
            let dy = r * span * theta.cos();
            let mut d = axis.as_cd().scale(dy);
            let mut coords = d.into_coords();
            coords[0] += dx;
            d = CDNumber::new(axis.level(), coords).expect("axis level");
            (p, d)
        }),
    }
}

/// Coordinates of `z` in the frame `(1, M)`; errors if `z` leaves the plane.
fn plane_coords(z: &CDNumber, axis: &PureImaginaryUnit) -> (f64, f64) {
    let y = crate::algebra::inner(&z.pure(), axis.as_cd()).expect("levels match");
    (z.re(), y)
}

fn common_axis(a: &CDNumber, b: &CDNumber) -> Result<PureImaginaryUnit> {
    let pa = a.pure();
    let pb = b.pure();
    let na = pa.pure_norm();
    let nb = pb.pure_norm();
    let axis = if na >= nb && na > 0.0 {
        PureImaginaryUnit::from_pure(pa.clone())?
    } else if nb > 0.0 {
        PureImaginaryUnit::from_pure(pb.clone())?
    } else {
        PureImaginaryUnit::e1(a.level())
    };
    for (p, n) in [(&pa, na), (&pb, nb)] {
        if n > 0.0 {
            let lambda = crate::algebra::inner(p, axis.as_cd())?;
            let residue = (p - &axis.as_cd().scale(lambda)).norm();
            if residue > 1e-10 * (1.0 + n) {
                return Err(Error::ContourNotPlanar(format!(
                    "endpoints span more than one slice plane (defect {residue:.3e})"
                )));
            }
        }
    }
    Ok(axis)
}

/// Integrates `f(zeta) * zeta'(s)` over the contour, segment by segment.
/// The product is taken in the written order: integrand value times tangent.
pub fn integrate_contour(
    f: impl Fn(&PathPoint) -> CDNumber,
    contour: &Contour,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    cfg.validate()?;
    let segments = segments_of(contour, cfg)?;
    let level = match contour {
        Contour::Interval { from, .. } => from.level(),
        Contour::SemiInfinite { start, .. } => start.level(),
        Contour::HankelLoop { axis, .. } | Contour::Circle { axis, .. } => axis.level(),
    };
    let mut total = CDNumber::zero(level);
    let mut err = 0.0;
    let mut evals = 0;
    for seg in &segments {
        let g = |s: f64| {
            let (p, d) = (seg.eval)(s);
            &f(&p) * &d
        };
        let r = integrate_interval(g, 0.0, 1.0, cfg)?;
        total = &total + &r.value;
        err += r.error_estimate;
        evals += r.evaluations;
    }
    Ok(IntegralResult {
        value: total,
        error_estimate: err,
        evaluations: evals,
    })
}

fn max_abs_diff(a: &CDNumber, b: &CDNumber) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn check_nan(v: &CDNumber, at: f64) -> Result<()> {
    if v.coords().iter().any(|c| c.is_nan()) {
        return Err(Error::EvaluationNaN { at });
    }
    Ok(())
}
