use serde::{Deserialize, Serialize};

/// Numerical tolerances shared by every geometric predicate.
///
/// * `norm`: allowed deviation of a squared norm from one for unit vectors.
/// * `side`: half-width of the "on the circle" band, and of the endpoint
///   band when placing a point along an arc (radians).
/// * `degenerate`: below this, cross products are treated as zero
///   (coincident or antipodal points, identical circles).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub norm: f64,
    pub side: f64,
    pub degenerate: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm: 1e-12,
            side: 1e-9,
            degenerate: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn with_side(mut self, side: f64) -> Self {
        self.side = side;
        self
    }

    /// Tolerances whose side and degeneracy bands equal `margin`.
    pub fn with_margin(margin: f64) -> Self {
        Self {
            side: margin,
            degenerate: margin,
            ..Self::default()
        }
    }
}
