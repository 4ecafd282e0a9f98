//! Slice (polar) decomposition and the elementary transcendental functions
//! built on it: exp, principal Ln, real-base powers `t^z`, sine and
//! cosecant.
//!
//! Every Cayley-Dickson number lives in a slice plane `R + M R` spanned by 1
//! and a unit pure-imaginary axis `M`; that plane is isomorphic to C, so a
//! function with real Taylor coefficients is evaluated by lifting its
//! complex values: `f(x + r M) = u + v M` where `u + i v = f(x + i r)`.

use crate::algebra::{CDNumber, PureImaginaryUnit};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Angular distance from the negative real axis below which principal
/// logarithms and powers are rejected as branch-cut violations.
pub const EPS_CUT: f64 = 1e-12;

/// Decomposition `z = x + r M` with `r >= 0` and unit axis `M`.
#[derive(Debug, Clone)]
pub struct SliceFrame {
    pub real_part: f64,
    pub radius: f64,
    pub axis: PureImaginaryUnit,
}

impl SliceFrame {
    /// Rebuilds `real_part + radius * axis`.
    pub fn recompose(&self) -> CDNumber {
        let mut z = self.axis.as_cd().scale(self.radius);
        let mut coords = z.into_coords();
        coords[0] += self.real_part;
        z = CDNumber::new(self.axis.level(), coords).expect("axis has valid level");
        z
    }

    /// The complex coordinate `x + i r` of `z` in its slice.
    pub fn complex_coord(&self) -> Complex64 {
        Complex64::new(self.real_part, self.radius)
    }

    /// Lifts `u + i v` back into this frame's slice as `u + v M`.
    pub fn lift(&self, w: Complex64) -> CDNumber {
        let mut z = self.axis.as_cd().scale(w.im);
        let mut coords = z.into_coords();
        coords[0] += w.re;
        z = CDNumber::new(self.axis.level(), coords).expect("axis has valid level");
        z
    }
}

/// Principal-branch policy: the cut runs along the negative reals of each
/// slice, and Ln maps into the strip of pure-part magnitude at most pi.
#[derive(Debug, Clone, Copy)]
pub struct BranchPolicy {
    pub cut_angle: f64,
}

impl Default for BranchPolicy {
    fn default() -> Self {
        Self { cut_angle: PI }
    }
}

/// Splits `z = x + r M`. Real inputs get the conventional axis `e_1`
/// (harmless: every function lifted here has real Taylor coefficients, so
/// its value at a real argument is axis-independent).
pub fn slice_decompose(z: &CDNumber) -> SliceFrame {
    let x = z.re();
    let pure = z.pure();
    let r = pure.pure_norm();
    let axis = if r == 0.0 {
        PureImaginaryUnit::e1(z.level())
    } else {
        PureImaginaryUnit::from_pure(pure).expect("nonzero pure part")
    };
    SliceFrame {
        real_part: x,
        radius: r,
        axis,
    }
}

/// Applies a complex map through the slice frame of `z`.
fn lift_map(z: &CDNumber, f: impl FnOnce(Complex64) -> Complex64) -> CDNumber {
    let frame = slice_decompose(z);
    frame.lift(f(frame.complex_coord()))
}

/// `exp(z) = e^x (cos r + M sin r)`.
pub fn cd_exp(z: &CDNumber) -> CDNumber {
    lift_map(z, Complex64::exp)
}

/// Principal logarithm `ln|z| + M atan2(r, x)`.
///
/// Rejects zero and anything within [`EPS_CUT`] angular distance of the
/// negative real axis, where every axis gives a different preimage.
pub fn cd_ln(z: &CDNumber) -> Result<CDNumber> {
    let frame = slice_decompose(z);
    let (x, r) = (frame.real_part, frame.radius);
    let n = (x * x + r * r).sqrt();
    if n == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    let theta = r.atan2(x);
    if PI - theta < EPS_CUT {
        return Err(Error::BranchCut {
            distance: PI - theta,
        });
    }
    Ok(frame.lift(Complex64::new(n.ln(), theta)))
}

/// `t^z = exp(z ln t)` for real `t > 0`.
pub fn real_power(t: f64, z: &CDNumber) -> Result<CDNumber> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!(
            "real_power base must be positive, got {t}"
        )));
    }
    Ok(cd_exp(&z.scale(t.ln())))
}

/// `z^w = exp(w Ln z)` for arguments sharing a slice plane.
///
/// The pure parts must be parallel (or one argument real); otherwise the
/// product ordering inside the exponent would be ambiguous and the input is
/// rejected.
pub fn cd_power(z: &CDNumber, w: &CDNumber) -> Result<CDNumber> {
    let zp = z.pure();
    let wp = w.pure();
    let nz = zp.pure_norm();
    let nw = wp.pure_norm();
    if nz > EPS_CUT && nw > EPS_CUT {
        // perpendicular defect of w's pure part against z's
        let lambda = crate::algebra::inner(&wp, &zp)? / (nz * nz);
        let perp = (&wp - &zp.scale(lambda)).pure_norm();
        let defect = perp / nw;
        if defect > 1e-10 {
            return Err(Error::NotCoplanar { defect });
        }
    }
    let ln_z = cd_ln(z)?;
    // both exponent factors live in one slice; order is immaterial
    Ok(cd_exp(&(w * &ln_z)))
}

/// `sin(x + r M) = sin x cosh r + M cos x sinh r`.
pub fn cd_sin(z: &CDNumber) -> CDNumber {
    lift_map(z, Complex64::sin)
}

/// `csc z = 1 / sin z`; poles at the real multiples of pi.
pub fn cd_csc(z: &CDNumber) -> Result<CDNumber> {
    let s = cd_sin(z);
    let n = s.norm();
    if n < 1e-140 {
        let k = (z.re() / PI).round();
        return Err(Error::Pole {
            what: "csc".into(),
            location: format!("{}*pi on the real axis", k as i64),
            distance: n,
        });
    }
    s.inverse()
}
