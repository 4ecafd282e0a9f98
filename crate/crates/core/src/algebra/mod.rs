//! Cayley-Dickson numbers of arbitrary level with doubling-construction
//! multiplication, conjugation, norms, inverses and the scalar product
//! `(z, w) = Re(z w*)`.
//!
//! A level-`v` number is stored as `2^v` real coordinates; `coords[0]` is the
//! real part and `coords[1..]` are the coefficients of the imaginary units
//! `e_1 .. e_{2^v - 1}`. Level 1 is C, level 2 the quaternions, level 3 the
//! octonions; levels >= 4 are no longer division algebras.
//!
//! The doubling product is
//!
//! ```text
//! (a1, a2)(b1, b2) = (a1 b1 - b2* a2,  b2 a1 + a2 b1*)
//! ```
//!
//! bottoming out at real multiplication. This convention makes
//! `e1 e2 = e3` (the Hamilton `i j = k` at level 2).

mod parse;

pub use parse::parse_cd;

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Tolerance below which a reference vector counts as zero in
/// [`ortho_decompose`].
pub const EPS_DEGENERATE: f64 = 1e-12;

/// Tolerance for the `z * z^-1 = 1` post-check of [`CDNumber::inverse`] at
/// levels >= 4.
pub const EPS_INVERSE_CHECK: f64 = 1e-9;

/// A Cayley-Dickson number: `2^level` real coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CDNumber {
    level: u32,
    coords: Vec<f64>,
}

impl CDNumber {
    /// Builds a number from raw coordinates. The length must be `2^level`.
    pub fn new(level: u32, coords: Vec<f64>) -> Result<Self> {
        let want = 1usize << level;
        if coords.len() != want {
            return Err(Error::InvalidParameter(format!(
                "level {} needs {} coordinates, got {}",
                level,
                want,
                coords.len()
            )));
        }
        Ok(Self { level, coords })
    }

    pub fn zero(level: u32) -> Self {
        Self {
            level,
            coords: vec![0.0; 1 << level],
        }
    }

    pub fn one(level: u32) -> Self {
        Self::from_real(level, 1.0)
    }

    pub fn from_real(level: u32, x: f64) -> Self {
        let mut coords = vec![0.0; 1 << level];
        coords[0] = x;
        Self { level, coords }
    }

    /// The basis unit `e_index` (`e_0` is the real unit 1).
    pub fn basis(level: u32, index: usize) -> Result<Self> {
        let dim = 1usize << level;
        if index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {} out of range for level {} (dimension {})",
                index, level, dim
            )));
        }
        let mut coords = vec![0.0; dim];
        coords[index] = 1.0;
        Ok(Self { level, coords })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.coords[i]
    }

    /// Real part `Re z = (z + z*)/2`.
    pub fn re(&self) -> f64 {
        self.coords[0]
    }

    /// The pure-imaginary part `z - Re z`.
    pub fn pure(&self) -> CDNumber {
        let mut out = self.clone();
        out.coords[0] = 0.0;
        out
    }

    /// Norm of the pure part.
    pub fn pure_norm(&self) -> f64 {
        self.coords[1..]
            .iter()
            .map(|c| c * c)
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// True when the pure part vanishes to within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.pure_norm() <= tol
    }

    /// True when the real part vanishes to within `tol`.
    pub fn is_pure(&self, tol: f64) -> bool {
        self.coords[0].abs() <= tol
    }

    pub fn conj(&self) -> CDNumber {
        let mut coords = self.coords.clone();
        for c in &mut coords[1..] {
            *c = -*c;
        }
        Self {
            level: self.level,
            coords,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> CDNumber {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Checked addition; errors on level mismatch.
    pub fn try_add(&self, other: &CDNumber) -> Result<CDNumber> {
        self.check_level(other)?;
        Ok(self + other)
    }

    /// Checked product by the doubling recursion; errors on level mismatch.
    pub fn try_mul(&self, other: &CDNumber) -> Result<CDNumber> {
        self.check_level(other)?;
        Ok(self * other)
    }

    /// `conj(z)/|z|^2`. At levels <= 3 this is the two-sided inverse; at
    /// levels >= 4 the product `z * inv` is verified against 1 and an error
    /// raised if it deviates (zero-divisor-adjacent input).
    pub fn inverse(&self) -> Result<CDNumber> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::SingularInput);
        }
        let inv = self.conj().scale(1.0 / n2);
        if self.level >= 4 {
            let check = self * &inv;
            let dev = (&check - &CDNumber::one(self.level)).norm();
            if dev > EPS_INVERSE_CHECK {
                return Err(Error::InverseCheckFailed {
                    level: self.level,
                    deviation: dev,
                });
            }
        }
        Ok(inv)
    }

    fn check_level(&self, other: &CDNumber) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CDNumber {
    /// Renders in the CD-number grammar, e.g. `1.5 - 2e1 + 0.25e7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c < 0.0 { "-" } else { "+" })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a == 1.0 {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{a}e{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operators panic on level mismatch; use try_add/try_mul at trust boundaries.

impl Add for &CDNumber {
    type Output = CDNumber;
    fn add(self, rhs: &CDNumber) -> CDNumber {
        assert_eq!(self.level, rhs.level, "level mismatch in +");
        CDNumber {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CDNumber {
    type Output = CDNumber;
    fn sub(self, rhs: &CDNumber) -> CDNumber {
        assert_eq!(self.level, rhs.level, "level mismatch in -");
        CDNumber {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CDNumber {
    type Output = CDNumber;
    fn neg(self) -> CDNumber {
        self.scale(-1.0)
    }
}

impl Mul for &CDNumber {
    type Output = CDNumber;
    fn mul(self, rhs: &CDNumber) -> CDNumber {
        assert_eq!(self.level, rhs.level, "level mismatch in *");
        let n = self.coords.len();
        let mut out = vec![0.0; n];
        let mut scratch = vec![0.0; 2 * n];
        mul_slices(&self.coords, &rhs.coords, &mut out, &mut scratch);
        CDNumber {
            level: self.level,
            coords: out,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $m:ident) => {
        impl $trait for CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: CDNumber) -> CDNumber {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&CDNumber> for CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: &CDNumber) -> CDNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CDNumber {
    type Output = CDNumber;
    fn neg(self) -> CDNumber {
        -&self
    }
}

/// Doubling recursion on coordinate slices. `scratch` must hold `2 * a.len()`.
fn mul_slices(a: &[f64], b: &[f64], out: &mut [f64], scratch: &mut [f64]) {
    let n = a.len();
    if n == 1 {
        out[0] = a[0] * b[0];
        return;
    }
    let h = n / 2;
    let (a1, a2) = a.split_at(h);
    let (b1, b2) = b.split_at(h);
    let (o1, o2) = out.split_at_mut(h);
    let (t, rest) = scratch.split_at_mut(h);
    let (c, rest) = rest.split_at_mut(h);

    // o1 = a1 b1 - conj(b2) a2
    mul_slices(a1, b1, o1, rest);
    c.copy_from_slice(b2);
    conj_in_place(c);
    mul_slices(c, a2, t, rest);
    for (o, x) in o1.iter_mut().zip(t.iter()) {
        *o -= x;
    }

    // o2 = b2 a1 + a2 conj(b1)
    mul_slices(b2, a1, o2, rest);
    c.copy_from_slice(b1);
    conj_in_place(c);
    mul_slices(a2, c, t, rest);
    for (o, x) in o2.iter_mut().zip(t.iter()) {
        *o += x;
    }
}

fn conj_in_place(x: &mut [f64]) {
    for c in &mut x[1..] {
        *c = -*c;
    }
}

/// Scalar product `(a, b) = Re(a b*)`, which equals the Euclidean dot
/// product of the coordinate vectors.
pub fn inner(a: &CDNumber, b: &CDNumber) -> Result<f64> {
    if a.level != b.level {
        return Err(Error::LevelMismatch {
            left: a.level,
            right: b.level,
        });
    }
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x * y)
        .sum())
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator(a: &CDNumber, b: &CDNumber) -> CDNumber {
    &(a * b) - &(b * a)
}

/// Associator `[a, b, c] = (ab)c - a(bc)`; zero in associative subalgebras.
pub fn associator(a: &CDNumber, b: &CDNumber, c: &CDNumber) -> CDNumber {
    &(&(a * b) * c) - &(a * &(b * c))
}

/// A unit pure-imaginary number, the axis of a slice plane `R + M R`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureImaginaryUnit {
    value: CDNumber,
}

impl PureImaginaryUnit {
    /// Validates purity and unit norm (within `1e-9`).
    pub fn new(value: CDNumber) -> Result<Self> {
        if value.coords[0].abs() > 1e-9 {
            return Err(Error::NotPureImaginary {
                re: value.coords[0],
            });
        }
        if (value.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidAxis {
                reason: format!("norm {} is not 1", value.norm()),
            });
        }
        let mut v = value;
        v.coords[0] = 0.0;
        Ok(Self { value: v })
    }

    /// Normalizes an arbitrary nonzero pure vector into a unit axis.
    pub fn from_pure(pure: CDNumber) -> Result<Self> {
        if pure.coords[0].abs() > 1e-9 * (1.0 + pure.norm()) {
            return Err(Error::NotPureImaginary { re: pure.coords[0] });
        }
        let n = pure.pure_norm();
        if n == 0.0 {
            return Err(Error::InvalidAxis {
                reason: "zero vector".into(),
            });
        }
        let mut v = pure.scale(1.0 / n);
        v.coords[0] = 0.0;
        Ok(Self { value: v })
    }

    /// The conventional axis `e_1` used for real arguments.
    pub fn e1(level: u32) -> Self {
        Self {
            value: CDNumber::basis(level, 1).expect("level >= 1"),
        }
    }

    pub fn as_cd(&self) -> &CDNumber {
        &self.value
    }

    pub fn level(&self) -> u32 {
        self.value.level
    }

    /// `value * value = -1` up to arithmetic noise, by construction.
    pub fn square_deviation(&self) -> f64 {
        let sq = &self.value * &self.value;
        (&sq + &CDNumber::one(self.value.level)).norm()
    }
}

/// Splitting of a pure vector into components parallel and perpendicular
/// to a pure reference vector.
#[derive(Debug, Clone)]
pub struct OrthoDecomposition {
    /// Component parallel to the reference (`q'_1`).
    pub parallel: CDNumber,
    /// Component perpendicular to the reference (`q'_2`).
    pub perpendicular: CDNumber,
    /// The reference vector (`p'`).
    pub reference: CDNumber,
}

/// Splits pure `q_prime` against pure `p_prime`:
/// `parallel = p' <q', p'> / |p'|^2`, `perpendicular = q' - parallel`.
/// A reference below [`EPS_DEGENERATE`] yields `parallel = 0`.
pub fn ortho_decompose(q_prime: &CDNumber, p_prime: &CDNumber) -> Result<OrthoDecomposition> {
    if q_prime.level != p_prime.level {
        return Err(Error::LevelMismatch {
            left: q_prime.level,
            right: p_prime.level,
        });
    }
    let tol_q = 1e-12 * (1.0 + q_prime.norm());
    let tol_p = 1e-12 * (1.0 + p_prime.norm());
    if !q_prime.is_pure(tol_q) {
        return Err(Error::NotPureImaginary { re: q_prime.re() });
    }
    if !p_prime.is_pure(tol_p) {
        return Err(Error::NotPureImaginary { re: p_prime.re() });
    }
    let np2 = p_prime.norm_sqr();
    if np2.sqrt() < EPS_DEGENERATE {
        return Ok(OrthoDecomposition {
            parallel: CDNumber::zero(q_prime.level),
            perpendicular: q_prime.clone(),
            reference: p_prime.clone(),
        });
    }
    let lambda = inner(q_prime, p_prime)? / np2;
    let parallel = p_prime.scale(lambda);
    let perpendicular = q_prime - &parallel;
    Ok(OrthoDecomposition {
        parallel,
        perpendicular,
        reference: p_prime.clone(),
    })
}

/// Searches for a sedenion (level >= 4) zero-divisor pair among products of
/// signed basis-unit sums `(e_i +- e_j)(e_k +- e_l)`. Returns the first pair
/// found with `|ab| < tol` while `|a| = |b| = sqrt(2)`.
pub fn find_zero_divisor_pair(level: u32, tol: f64) -> Option<(CDNumber, CDNumber)> {
    let dim = 1usize << level;
    for i in 1..dim {
        for j in (i + 1)..dim {
            for si in [1.0, -1.0] {
                let mut a = CDNumber::zero(level);
                a.coords[i] = 1.0;
                a.coords[j] = si;
                for k in 1..dim {
                    for l in (k + 1)..dim {
                        for sk in [1.0, -1.0] {
                            let mut b = CDNumber::zero(level);
                            b.coords[k] = 1.0;
                            b.coords[l] = sk;
                            if (&a * &b).norm() < tol {
                                return Some((a, b));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
