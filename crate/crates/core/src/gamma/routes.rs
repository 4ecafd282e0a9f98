//! Runtime registry of gamma evaluation routes. Each route implements
//! [`GammaRoute`] behind a method tag; the CLI selects routes by name and
//! the comparison machinery iterates over all of them.

use crate::algebra::CDNumber;
use crate::error::Result;
use crate::quad::QuadratureConfig;

/// Tags of the implemented evaluation routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodTag {
    SliceLanczos,
    Integral,
    PhiPsiSeries,
    LimitForm,
    EulerProduct,
    Hankel,
}

impl MethodTag {
    pub const ALL: [MethodTag; 6] = [
        MethodTag::SliceLanczos,
        MethodTag::Integral,
        MethodTag::PhiPsiSeries,
        MethodTag::LimitForm,
        MethodTag::EulerProduct,
        MethodTag::Hankel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodTag::SliceLanczos => "slice_lanczos",
            MethodTag::Integral => "integral",
            MethodTag::PhiPsiSeries => "phi_psi_series",
            MethodTag::LimitForm => "limit_form",
            MethodTag::EulerProduct => "euler_product",
            MethodTag::Hankel => "hankel",
        }
    }
}

impl std::str::FromStr for MethodTag {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        MethodTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                crate::error::Error::InvalidParameter(format!(
                    "unknown method '{s}' (known: {})",
                    MethodTag::ALL.map(|t| t.name()).join(", ")
                ))
            })
    }
}

impl std::fmt::Display for MethodTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs shared by the routes: quadrature control plus the series,
/// limit and product truncation parameters.
#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub quad: QuadratureConfig,
    /// Terms kept in the pole series Phi.
    pub series_terms: usize,
    /// `n` of the limit form.
    pub limit_n: u64,
    /// Factors kept in the Euler product.
    pub product_factors: u64,
    /// Cut-circle radius of the Hankel loop.
    pub hankel_delta: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            quad: QuadratureConfig::default(),
            series_terms: 30,
            limit_n: 100_000,
            product_factors: 10_000,
            hankel_delta: super::DEFAULT_HANKEL_DELTA,
        }
    }
}

/// A route evaluation: the value plus the route's own accuracy model and
/// the work it took.
#[derive(Debug, Clone)]
pub struct RouteEval {
    pub value: CDNumber,
    /// Stated accuracy: quadrature estimates for integral routes, the
    /// `1/n` convergence model for the limit and product forms, and the
    /// backend's uniform bound for the slice route.
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// One gamma evaluation strategy.
pub trait GammaRoute: Sync {
    fn tag(&self) -> MethodTag;

    fn name(&self) -> &'static str {
        self.tag().name()
    }

    /// Whether the route's own domain restrictions admit `z` (pole
    /// proximity is checked separately by every route).
    fn applicable(&self, z: &CDNumber) -> bool;

    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval>;
}

struct SliceLanczos;
struct EulerIntegral;
struct PhiPsiSeries;
struct LimitForm;
struct EulerProduct;
struct HankelLoop;

impl GammaRoute for SliceLanczos {
    fn tag(&self) -> MethodTag {
        MethodTag::SliceLanczos
    }
    fn applicable(&self, _z: &CDNumber) -> bool {
        true
    }
    fn eval(&self, z: &CDNumber, _cfg: &EvalConfig) -> Result<RouteEval> {
        let value = super::gamma(z)?;
        let error_estimate = 1e-12 * (1.0 + value.norm());
        Ok(RouteEval {
            value,
            error_estimate,
            evaluations: 1,
        })
    }
}

impl GammaRoute for EulerIntegral {
    fn tag(&self) -> MethodTag {
        MethodTag::Integral
    }
    fn applicable(&self, z: &CDNumber) -> bool {
        z.re() > 0.0
    }
    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval> {
        let r = super::gamma_integral_eval(z, &cfg.quad)?;
        Ok(RouteEval {
            value: r.value,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
        })
    }
}

impl GammaRoute for PhiPsiSeries {
    fn tag(&self) -> MethodTag {
        MethodTag::PhiPsiSeries
    }
    fn applicable(&self, _z: &CDNumber) -> bool {
        true
    }
    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval> {
        let r = super::series::gamma_phi_series_eval(z, cfg.series_terms, &cfg.quad)?;
        Ok(RouteEval {
            value: r.value,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
        })
    }
}

impl GammaRoute for LimitForm {
    fn tag(&self) -> MethodTag {
        MethodTag::LimitForm
    }
    fn applicable(&self, _z: &CDNumber) -> bool {
        true
    }
    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval> {
        let value = super::gamma_limit(z, cfg.limit_n)?;
        let error_estimate =
            super::limit::gamma_limit_error_model(z, cfg.limit_n) * (1.0 + value.norm());
        Ok(RouteEval {
            value,
            error_estimate,
            evaluations: cfg.limit_n,
        })
    }
}

impl GammaRoute for EulerProduct {
    fn tag(&self) -> MethodTag {
        MethodTag::EulerProduct
    }
    fn applicable(&self, _z: &CDNumber) -> bool {
        true
    }
    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval> {
        let value = super::gamma_euler_product(z, cfg.product_factors)?;
        // same telescoping tail as the limit form
        let error_estimate =
            super::limit::gamma_limit_error_model(z, cfg.product_factors) * (1.0 + value.norm());
        Ok(RouteEval {
            value,
            error_estimate,
            evaluations: cfg.product_factors,
        })
    }
}

impl GammaRoute for HankelLoop {
    fn tag(&self) -> MethodTag {
        MethodTag::Hankel
    }
    fn applicable(&self, z: &CDNumber) -> bool {
        // the cosecant prefactor degenerates at real integers
        let frame = crate::elementary::slice_decompose(z);
        !(frame.radius < 1e-9 && (frame.real_part - frame.real_part.round()).abs() < 1e-9)
    }
    fn eval(&self, z: &CDNumber, cfg: &EvalConfig) -> Result<RouteEval> {
        let r = super::hankel_gamma_with(z, cfg.hankel_delta, &cfg.quad)?;
        Ok(RouteEval {
            value: r.value,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
        })
    }
}

static ROUTES: [&(dyn GammaRoute); 6] = [
    &SliceLanczos,
    &EulerIntegral,
    &PhiPsiSeries,
    &LimitForm,
    &EulerProduct,
    &HankelLoop,
];

/// Every registered route, in tag order.
pub fn routes() -> &'static [&'static dyn GammaRoute] {
    &ROUTES
}

pub fn route_by_tag(tag: MethodTag) -> &'static dyn GammaRoute {
    *ROUTES
        .iter()
        .find(|r| r.tag() == tag)
        .expect("every tag maps to an implemented route")
}

pub fn route_by_name(name: &str) -> Option<&'static dyn GammaRoute> {
    ROUTES.iter().copied().find(|r| r.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_cd;

    #[test]
    fn every_tag_maps_to_a_route() {
        for tag in MethodTag::ALL {
            assert_eq!(route_by_tag(tag).tag(), tag);
            assert_eq!(route_by_name(tag.name()).unwrap().tag(), tag);
        }
        assert!(route_by_name("nonsense").is_none());
    }

    #[test]
    fn tags_parse_from_names() {
        let t: MethodTag = "hankel".parse().unwrap();
        assert_eq!(t, MethodTag::Hankel);
        assert!("gauss".parse::<MethodTag>().is_err());
    }

    #[test]
    fn routes_agree_at_two() {
        // Gamma(2) = 1 through every applicable route
        let z = CDNumber::from_real(2, 2.0);
        let mut cfg = EvalConfig::default();
        cfg.limit_n = 20_000;
        cfg.product_factors = 20_000;
        for route in routes() {
            if !route.applicable(&z) {
                continue; // hankel degenerates at integers
            }
            let r = route.eval(&z, &cfg).unwrap();
            let err = (r.value.re() - 1.0).abs();
            let budget = r.error_estimate.max(1e-9) * 3.0;
            assert!(
                err <= budget,
                "{}: err {err:.3e} exceeds budget {budget:.3e}",
                route.name()
            );
        }
    }

    #[test]
    fn route_applicability() {
        let neg = parse_cd("-0.5", Some(2)).unwrap();
        assert!(!route_by_tag(MethodTag::Integral).applicable(&neg));
        assert!(route_by_tag(MethodTag::PhiPsiSeries).applicable(&neg));
        let int = parse_cd("3", Some(2)).unwrap();
        assert!(!route_by_tag(MethodTag::Hankel).applicable(&int));
    }
}
