/// Central tolerance bundle. All modules take their numeric thresholds from
/// here so there is a single tuning surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Structural residuals: identity decomposition, Hermiticity, trace.
    pub structural: f64,
    /// Eigenvalue floor for positive-semidefiniteness checks.
    pub psd_floor: f64,
    /// Unit-norm checks on state vectors and Bloch vectors.
    pub norm: f64,
    /// Residual bound for invariant-decomposition fits and interpolation
    /// node reproduction.
    pub fit_residual: f64,
    /// Clustering tolerance for dot products when building node multisets
    /// and deduplicating group orbits.
    pub cluster: f64,
    /// Number of grid points for from-above scans.
    pub grid_points: usize,
    /// Number of random probe points for decomposition/design checks.
    pub probe_points: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            structural: 1e-10,
            psd_floor: -1e-10,
            norm: 1e-12,
            fit_residual: 1e-8,
            cluster: 1e-9,
            grid_points: 1000,
            probe_points: 200,
        }
    }
}
