//! Scalars accepted by the geometry layer.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A signed field-like scalar: exact rationals for symmetry diagrams, floats
/// for rendering.
pub trait Scalar: Num + Signed + Copy + PartialOrd + Debug {
    fn from_i64(v: i64) -> Self;
    fn to_f64(self) -> f64;
    /// Largest integer not above `self`.
    fn floor(self) -> Self;

    fn half() -> Self {
        Self::one() / Self::from_i64(2)
    }

    /// `self mod m` in `[0, m)`.
    fn rem_floor(self, m: Self) -> Self {
        self - (self / m).floor() * m
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn floor(self) -> Self {
        f32::floor(self)
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn to_f64(self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
    fn floor(self) -> Self {
        Ratio::floor(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_rem_floor() {
        let m = Ratio::from_integer(2);
        assert_eq!(Ratio::new(-1, 2).rem_floor(m), Ratio::new(3, 2));
        assert_eq!(Ratio::new(5, 2).rem_floor(m), Ratio::new(1, 2));
        assert_eq!(<Ratio<i64> as Scalar>::half(), Ratio::new(1, 2));
        assert_eq!(Ratio::new(3, 4).to_f64(), 0.75);
    }

    #[test]
    fn float_rem_floor() {
        assert_eq!((-0.5f64).rem_floor(2.0), 1.5);
        assert_eq!(2.5f32.rem_floor(2.0), 0.5);
    }
}
