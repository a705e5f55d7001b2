//! Primary invariant polynomials of the coregular groups T_d, O_h and I_h,
//! in the canonical axis conventions (3-fold axes of T_d through the
//! tetrahedron vertices, 4-fold axes of O_h along x, y, z, 5-fold axes of
//! I_h through the icosahedron vertices).

#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

fn tau() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimaryInvariant {
    I2,
    I3,
    I4,
    I6,
    /// I_6' = (tau^2 x^2 - y^2)(tau^2 y^2 - z^2)(tau^2 z^2 - x^2)
    I6p,
    I10,
}

impl PrimaryInvariant {
    pub fn name(&self) -> &'static str {
        match self {
            PrimaryInvariant::I2 => "I2",
            PrimaryInvariant::I3 => "I3",
            PrimaryInvariant::I4 => "I4",
            PrimaryInvariant::I6 => "I6",
            PrimaryInvariant::I6p => "I6p",
            PrimaryInvariant::I10 => "I10",
        }
    }

    pub fn evaluate(&self, p: &[f64; 3]) -> f64 {
        let [x, y, z] = *p;
        match self {
            PrimaryInvariant::I2 => x * x + y * y + z * z,
            PrimaryInvariant::I3 => x * y * z,
            PrimaryInvariant::I4 => x.powi(4) + y.powi(4) + z.powi(4),
            PrimaryInvariant::I6 => x.powi(6) + y.powi(6) + z.powi(6),
            PrimaryInvariant::I6p => {
                let t2 = tau() * tau();
                (t2 * x * x - y * y) * (t2 * y * y - z * z) * (t2 * z * z - x * x)
            }
            PrimaryInvariant::I10 => {
                let t2 = tau() * tau();
                let it2 = 1.0 / t2;
                (x + y + z)
                    * (x - y - z)
                    * (y - z - x)
                    * (z - y - x)
                    * (it2 * x * x - t2 * y * y)
                    * (it2 * y * y - t2 * z * z)
                    * (it2 * z * z - t2 * x * x)
            }
        }
    }

    /// Global extrema of the invariant restricted to the unit sphere, where
    /// known (Table of extremal orbits: I4/I6 cube-min octahedron-max,
    /// I6' icosahedron-min dodecahedron-max).
    pub fn sphere_extrema(&self) -> Option<(f64, f64)> {
        match self {
            PrimaryInvariant::I4 | PrimaryInvariant::I6 => {
                let s = 1.0 / 3f64.sqrt();
                Some((self.evaluate(&[s, s, s]), self.evaluate(&[1.0, 0.0, 0.0])))
            }
            PrimaryInvariant::I6p => {
                let tau = tau();
                let n = (tau * tau + 1.0).sqrt();
                let ico = [tau / n, 1.0 / n, 0.0];
                // dodecahedron vertex = normalized face center of the
                // icosahedron; the cube diagonal (1,1,1)/sqrt(3) is one.
                let s = 1.0 / 3f64.sqrt();
                let dod = [s, s, s];
                Some((self.evaluate(&ico), self.evaluate(&dod)))
            }
            _ => None,
        }
    }
}
