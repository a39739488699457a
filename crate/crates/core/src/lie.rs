//! Classical root data: coroot pairings, simple roots, fundamental weights
//! and the Weyl dimension formula.

use crate::error::{Error, Result};
use crate::scalar::{half, q, Scalar, WeightOf, Q};
use num_traits::{One, Zero};
use std::fmt;

pub type Weight = WeightOf<Q>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    /// `B4`, `d5`, …
    fn from_str(s: &str) -> Result<LieType> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad Lie type {s:?}"));
        let fam = s.get(..1).ok_or_else(bad)?;
        let rank = s[1..].parse().map_err(|_| bad())?;
        LieType::new(Family::parse(fam)?, rank)
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        };
        if rank < min {
            return Err(Error::InvalidRank { family: family.letter(), rank });
        }
        Ok(LieType { family, rank })
    }

    pub fn a(n: usize) -> LieType {
        LieType::new(Family::A, n).expect("rank")
    }

    pub fn b(n: usize) -> LieType {
        LieType::new(Family::B, n).expect("rank")
    }

    pub fn c(n: usize) -> LieType {
        LieType::new(Family::C, n).expect("rank")
    }

    pub fn d(n: usize) -> LieType {
        LieType::new(Family::D, n).expect("rank")
    }

    /// Number of `ε` coordinates.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn colors(&self) -> Vec<usize> {
        (1..=self.rank).collect()
    }

    /// Coroot `h_i` written as a vector, so that `<w, h_i> = w · h_i`.
    pub fn coroot<S: Scalar>(&self, i: usize) -> WeightOf<S> {
        let n = self.rank;
        let mut h = WeightOf::zero(self.dim());
        if i < n || self.family == Family::A {
            h.coords[i - 1] = S::one();
            h.coords[i] = -S::one();
            return h;
        }
        match self.family {
            Family::B => h.coords[n - 1] = S::one() + S::one(),
            Family::C => h.coords[n - 1] = S::one(),
            Family::D => {
                h.coords[n - 2] = S::one();
                h.coords[n - 1] = S::one();
            }
            Family::A => unreachable!(),
        }
        h
    }

    pub fn pairing<S: Scalar>(&self, w: &WeightOf<S>, i: usize) -> S {
        w.dot(&self.coroot(i))
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let n = self.rank;
        let mut a = Weight::zero(self.dim());
        if i < n || self.family == Family::A {
            a.coords[i - 1] = q(1);
            a.coords[i] = q(-1);
            return a;
        }
        match self.family {
            Family::B => a.coords[n - 1] = q(1),
            Family::C => a.coords[n - 1] = q(2),
            Family::D => {
                a.coords[n - 2] = q(1);
                a.coords[n - 1] = q(1);
            }
            Family::A => unreachable!(),
        }
        a
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let n = self.rank;
        let mut w = Weight::zero(self.dim());
        let plain = match self.family {
            Family::A => true,
            Family::B => i < n,
            Family::C => true,
            Family::D => i + 2 <= n,
        };
        if plain {
            for c in w.coords.iter_mut().take(i) {
                *c = q(1);
            }
            return w;
        }
        for c in w.coords.iter_mut() {
            *c = half(1);
        }
        if self.family == Family::D && i == n - 1 {
            w.coords[n - 1] = half(-1);
        }
        w
    }

    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::WeightLength { got: coeffs.len(), expected: self.rank });
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(format!("{coeffs:?}")));
        }
        let mut w = Weight::zero(self.dim());
        for (k, &c) in coeffs.iter().enumerate() {
            w = &w + &self.fundamental_weight(k + 1).scale(q(c));
        }
        Ok(w)
    }

    /// Coefficients `c_i = <w, h_i>`; errors unless all are nonnegative integers.
    pub fn fundamental_coords(&self, w: &Weight) -> Result<Vec<i64>> {
        if w.dim() != self.dim() {
            return Err(Error::WeightLength { got: w.dim(), expected: self.dim() });
        }
        let mut out = Vec::with_capacity(self.rank);
        for i in self.colors() {
            let c = self.pairing(w, i);
            if !c.is_integer() || c < Q::zero() {
                return Err(Error::NotDominant(w.to_string()));
            }
            out.push(c.to_integer());
        }
        Ok(out)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.fundamental_coords(w).is_ok()
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        let m = self.dim();
        let e = |j: usize| Weight::unit(m, j);
        let mut roots = Vec::new();
        if self.family == Family::A {
            for i in 0..m {
                for j in i + 1..m {
                    roots.push(&e(i) - &e(j));
                }
            }
            return roots;
        }
        for i in 0..m {
            for j in i + 1..m {
                roots.push(&e(i) - &e(j));
                roots.push(&e(i) + &e(j));
            }
            match self.family {
                Family::B => roots.push(e(i)),
                Family::C => roots.push(e(i).scale(q(2))),
                _ => {}
            }
        }
        roots
    }

    pub fn rho(&self) -> Weight {
        let sum = self.positive_roots().iter().fold(Weight::zero(self.dim()), |acc, r| &acc + r);
        sum.scale(half(1))
    }

    /// Simple reflection `s_i` applied to `w`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        w - &self.simple_root(i).scale(self.pairing(w, i))
    }
}

/// Dimension of the irreducible module of highest weight `lam`.
pub fn weyl_dim(ty: LieType, lam: &Weight) -> Result<u128> {
    ty.fundamental_coords(lam)?;
    let rho = ty.rho();
    let shifted = lam + &rho;
    let mut num = num_rational::Ratio::<i128>::one();
    for alpha in ty.positive_roots() {
        let top = shifted.dot(&alpha);
        let bottom = rho.dot(&alpha);
        let ratio = num_rational::Ratio::new(
            (*top.numer() as i128) * (*bottom.denom() as i128),
            (*top.denom() as i128) * (*bottom.numer() as i128),
        );
        num *= ratio;
    }
    assert!(num.is_integer() && num.numer().is_positive(), "non-integral Weyl dimension {num}");
    Ok(*num.numer() as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(4), LieType::d(5)] {
            for i in ty.colors() {
                let w = ty.fundamental_weight(i);
                for j in ty.colors() {
                    let expect = if i == j { q(1) } else { q(0) };
                    assert_eq!(ty.pairing(&w, j), expect, "{ty} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn cartan_diagonal_is_two() {
        for ty in [LieType::a(2), LieType::b(4), LieType::c(3), LieType::d(4)] {
            for i in ty.colors() {
                assert_eq!(ty.pairing(&ty.simple_root(i), i), q(2));
            }
        }
    }

    #[test]
    fn small_dimensions() {
        let cases: &[(LieType, &[i64], u128)] = &[
            (LieType::a(2), &[0, 0], 1),
            (LieType::a(2), &[1, 0], 3),
            (LieType::a(2), &[1, 1], 8),
            (LieType::b(3), &[0, 0, 1], 8),
            (LieType::b(2), &[1, 0], 5),
            (LieType::c(3), &[1, 0, 0], 6),
            (LieType::d(4), &[1, 0, 0, 0], 8),
            (LieType::d(4), &[0, 0, 0, 1], 8),
            (LieType::d(4), &[0, 1, 0, 0], 28),
        ];
        for (ty, c, d) in cases {
            let w = ty.weight_from_fundamental(c).unwrap();
            assert_eq!(weyl_dim(*ty, &w).unwrap(), *d, "{ty} {c:?}");
        }
    }

    #[test]
    fn non_dominant_rejected() {
        let ty = LieType::b(2);
        let w = Weight::from_coords(vec![q(0), q(1)]);
        assert!(matches!(weyl_dim(ty, &w), Err(Error::NotDominant(_))));
    }

    #[test]
    fn rank_bounds() {
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::C, 1).is_err());
        assert!(LieType::new(Family::A, 1).is_ok());
    }
}
