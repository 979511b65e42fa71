//! Size caps for the exhaustive constructions.

/// Environment variable that raises (or lowers) every element cap.
pub const MAX_ELEMS_ENV: &str = "OQKIT_MAX_ELEMS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest lattice or magma carrier the catalog will build.
    pub max_elems: usize,
    /// Largest algebra a frame may be built from.
    pub max_frame_source: usize,
    /// Largest number of proper filters enumerated.
    pub max_filters: usize,
    /// Largest function space `u^d` for cylindric set algebras.
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_elems: 1024, max_frame_source: 16, max_filters: 1 << 14, max_points: 16 }
    }
}

impl Limits {
    /// Defaults, with every element cap replaced by `OQKIT_MAX_ELEMS` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_ELEMS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_elems = cap;
            limits.max_frame_source = cap;
        }
        limits
    }

    pub fn unbounded() -> Self {
        Limits { max_elems: usize::MAX, max_frame_source: usize::MAX, max_filters: usize::MAX, max_points: 20 }
    }
}
