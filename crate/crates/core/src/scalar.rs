//! Scalar and weight-vector types.
//!
//! Weights live in the orthonormal basis `ε_1, …, ε_m`. The vector type is
//! generic over the coordinate scalar; the crystal code uses exact rationals.

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Coordinate scalar for weight vectors.
pub trait Scalar: Num + Signed + Clone + PartialOrd + FromPrimitive + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialOrd + FromPrimitive + fmt::Debug + fmt::Display {}

/// Exact rational scalar.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Ratio::new(n, 2)
}

/// A vector of coordinates in the `ε` basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightOf<S> {
    pub coords: Vec<S>,
}

impl<S: Scalar> WeightOf<S> {
    pub fn zero(dim: usize) -> Self {
        WeightOf { coords: vec![S::zero(); dim] }
    }

    pub fn unit(dim: usize, j: usize) -> Self {
        let mut w = Self::zero(dim);
        w.coords[j] = S::one();
        w
    }

    pub fn from_coords(coords: Vec<S>) -> Self {
        WeightOf { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, k: S) -> Self {
        WeightOf { coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl<S: Scalar> Add for &WeightOf<S> {
    type Output = WeightOf<S>;
    fn add(self, rhs: Self) -> WeightOf<S> {
        WeightOf {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Sub for &WeightOf<S> {
    type Output = WeightOf<S>;
    fn sub(self, rhs: Self) -> WeightOf<S> {
        WeightOf {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for &WeightOf<S> {
    type Output = WeightOf<S>;
    fn neg(self) -> WeightOf<S> {
        WeightOf { coords: self.coords.iter().map(|a| -a.clone()).collect() }
    }
}

impl<S: Scalar> fmt::Display for WeightOf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_and_rational_agree_on_dot() {
        let a = WeightOf::<f64>::from_coords(vec![0.5, 1.0, -2.0]);
        let b = WeightOf::<f64>::from_coords(vec![2.0, 3.0, 1.0]);
        assert_eq!(a.dot(&b), 2.0);
        let a = WeightOf::<Q>::from_coords(vec![half(1), q(1), q(-2)]);
        let b = WeightOf::<Q>::from_coords(vec![q(2), q(3), q(1)]);
        assert_eq!(a.dot(&b), q(2));
    }

    #[test]
    fn display_uses_fractions() {
        let w = WeightOf::<Q>::from_coords(vec![half(1), q(-1)]);
        assert_eq!(w.to_string(), "(1/2,-1)");
    }
}
