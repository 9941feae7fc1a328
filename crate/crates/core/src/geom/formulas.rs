//! Closed-form lengths and angles that the endpoint-projection route must
//! reproduce.

use crate::error::{Error, Result};

/// Mutual position of two geodesics, reduced to the single invariant that
/// determines the projection length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjectionCase {
    /// Crossing at angle phi in (0, pi).
    Crossing { phi: f64 },
    /// Disjoint at distance d > 0 along the common perpendicular.
    Disjoint { d: f64 },
}

/// Length of the orthogonal projection of one geodesic onto another:
/// 2 artanh|cos phi| when they cross, 4 artanh(e^{-d}) when they are disjoint.
pub fn projection_length_closed_form(case: ProjectionCase) -> Result<f64> {
    match case {
        ProjectionCase::Crossing { phi } => {
            if !(phi > 0.0 && phi < std::f64::consts::PI) {
                return Err(Error::Domain("crossing angle must lie in (0, pi)"));
            }
            Ok(2.0 * phi.cos().abs().atanh())
        }
        ProjectionCase::Disjoint { d } => {
            if !(d > 0.0) {
                return Err(Error::Domain("distance must be positive"));
            }
            Ok(4.0 * (-d).exp().atanh())
        }
    }
}

/// Angle of parallelism Pi(a) = 2 arctan(e^{-a}), the acute angle with
/// cos Pi(a) = tanh(a) and sin Pi(a) = sech(a).
pub fn angle_of_parallelism(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain("angle of parallelism needs a > 0"));
    }
    Ok(2.0 * (-a).exp().atan())
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn crossing_values() {
        let zero = projection_length_closed_form(ProjectionCase::Crossing { phi: PI / 2.0 }).unwrap();
        assert!(zero.abs() < 1e-15);
        let v = projection_length_closed_form(ProjectionCase::Crossing { phi: PI / 3.0 }).unwrap();
        assert!((v - 3.0f64.ln()).abs() < 1e-12); // 2 artanh(1/2) = ln 3
    }

    #[test]
    fn disjoint_value_matches_endpoint_oracle() {
        // distance arccosh(3) is the (1,2)-vs-(0,inf) configuration whose
        // projection is [ln 1, ln 2].
        let v = projection_length_closed_form(ProjectionCase::Disjoint { d: 3.0f64.acosh() }).unwrap();
        assert!((v - 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(projection_length_closed_form(ProjectionCase::Crossing { phi: 0.0 }).is_err());
        assert!(projection_length_closed_form(ProjectionCase::Crossing { phi: PI }).is_err());
        assert!(projection_length_closed_form(ProjectionCase::Disjoint { d: 0.0 }).is_err());
        assert!(angle_of_parallelism(0.0).is_err());
    }

    #[test]
    fn parallelism_identities() {
        // sin Pi(ln(1 + sqrt 2)) = 1/sqrt 2, so Pi = pi/4 there.
        let a = (1.0 + 2.0f64.sqrt()).ln();
        assert!((angle_of_parallelism(a).unwrap() - PI / 4.0).abs() < 1e-12);
        for k in 1..=100 {
            let a = 0.1 * k as f64;
            let p = angle_of_parallelism(a).unwrap();
            assert!((p.cos() - a.tanh()).abs() < 1e-12);
            assert!((p.sin() - 1.0 / a.cosh()).abs() < 1e-12);
        }
        // strictly decreasing
        assert!(angle_of_parallelism(1.0).unwrap() > angle_of_parallelism(2.0).unwrap());
        // a -> 0+ limit is pi/2
        assert!((angle_of_parallelism(1e-12).unwrap() - PI / 2.0).abs() < 1e-9);
    }
}
