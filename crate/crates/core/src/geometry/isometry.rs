use crate::group::builders::IntMatrix;
use crate::scalar::Scalar;

/// `p ↦ Mp + t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarIsometry<T> {
    pub linear: [[T; 2]; 2],
    pub translation: [T; 2],
}

impl<T: Scalar> PlanarIsometry<T> {
    pub fn new(linear: [[T; 2]; 2], translation: [T; 2]) -> Self {
        PlanarIsometry { linear, translation }
    }

    pub fn identity() -> Self {
        Self::from_int(&[[1, 0], [0, 1]], [0, 0])
    }

    pub fn from_int(m: &IntMatrix, t: [i64; 2]) -> Self {
        let c = T::from_i64;
        PlanarIsometry {
            linear: [[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]],
            translation: [c(t[0]), c(t[1])],
        }
    }

    pub fn translation_by(t: [T; 2]) -> Self {
        PlanarIsometry { translation: t, ..Self::identity() }
    }

    pub fn apply_linear(&self, v: [T; 2]) -> [T; 2] {
        let m = &self.linear;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn apply(&self, p: [T; 2]) -> [T; 2] {
        let q = self.apply_linear(p);
        [q[0] + self.translation[0], q[1] + self.translation[1]]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.linear;
        let b = &other.linear;
        let mut linear = [[T::zero(); 2]; 2];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        PlanarIsometry { linear, translation: self.apply(other.translation) }
    }

    /// Inverse of an orthogonal map: `(Mᵀ, −Mᵀt)`.
    pub fn inverse(&self) -> Self {
        let m = &self.linear;
        let linear = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
        let inv = PlanarIsometry { linear, translation: [T::zero(), T::zero()] };
        let t = inv.apply_linear(self.translation);
        PlanarIsometry { linear, translation: [-t[0], -t[1]] }
    }

    pub fn det(&self) -> T {
        let m = &self.linear;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Exact test of `MMᵀ = I`; meaningful for exact scalars.
    pub fn is_orthogonal(&self) -> bool {
        let m = &self.linear;
        let dot = |r: usize, s: usize| m[r][0] * m[s][0] + m[r][1] * m[s][1];
        dot(0, 0) == T::one() && dot(1, 1) == T::one() && dot(0, 1) == T::zero()
    }

    pub fn to_f64(&self) -> PlanarIsometry<f64> {
        let m = &self.linear;
        PlanarIsometry {
            linear: [[m[0][0].to_f64(), m[0][1].to_f64()], [m[1][0].to_f64(), m[1][1].to_f64()]],
            translation: [self.translation[0].to_f64(), self.translation[1].to_f64()],
        }
    }
}

impl PlanarIsometry<f64> {
    /// Counterclockwise rotation about the origin; angle in degrees.
    pub fn rotation(degrees: f64) -> Self {
        let (s, c) = degrees.to_radians().sin_cos();
        PlanarIsometry { linear: [[c, -s], [s, c]], translation: [0.0, 0.0] }
    }

    /// Reflection in the line through the origin at the given angle.
    pub fn reflection(degrees: f64) -> Self {
        let (s, c) = (2.0 * degrees).to_radians().sin_cos();
        PlanarIsometry { linear: [[c, s], [s, -c]], translation: [0.0, 0.0] }
    }
}
