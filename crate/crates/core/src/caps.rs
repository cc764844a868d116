//! Resource caps shared by the library entry points, the verifier and the CLI.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest Weyl orbit materialized as a set.
    pub orbit: usize,
    /// Largest weight system built by string descent.
    pub weights: usize,
    /// Largest Weyl group enumerated element by element.
    pub group: usize,
    /// Most points fed to the brute-force hull.
    pub hull_vertices: usize,
    /// Highest affine dimension the brute-force hull accepts.
    pub hull_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            orbit: 200_000,
            weights: 200_000,
            group: 2_000,
            hull_vertices: 60,
            hull_dim: 4,
        }
    }
}

pub const ENV_ORBIT: &str = "WEIGHTPOLY_ORBIT_CAP";
pub const ENV_WEIGHTS: &str = "WEIGHTPOLY_WEIGHT_CAP";
pub const ENV_GROUP: &str = "WEIGHTPOLY_GROUP_CAP";
pub const ENV_HULL_VERTICES: &str = "WEIGHTPOLY_HULL_CAP";
pub const ENV_HULL_DIM: &str = "WEIGHTPOLY_HULL_DIM_CAP";

impl Caps {
    /// Defaults, overridden by any of the `WEIGHTPOLY_*_CAP` variables that
    /// parse as integers.
    pub fn from_env() -> Self {
        let read = |name: &str, fallback: usize| {
            std::env::var(name)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(fallback)
        };
        let d = Caps::default();
        Caps {
            orbit: read(ENV_ORBIT, d.orbit),
            weights: read(ENV_WEIGHTS, d.weights),
            group: read(ENV_GROUP, d.group),
            hull_vertices: read(ENV_HULL_VERTICES, d.hull_vertices),
            hull_dim: read(ENV_HULL_DIM, d.hull_dim),
        }
    }
}
