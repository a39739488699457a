//! Vector-representation letters and spin columns.

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::lie::{Family, LieType, Weight};
use crate::scalar::{half, q};
use std::fmt;

/// One letter of the vector-representation alphabet.
///
/// The derived order is only a storage order; use [`precedes`] for the
/// alphabet order of a given type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Plain(u8),
    Zero,
    Bar(u8),
}

use Letter::{Bar, Plain, Zero};

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Plain(k) => write!(f, "{k}"),
            Zero => write!(f, "0"),
            Bar(k) => write!(f, "-{k}"),
        }
    }
}

impl Letter {
    pub fn parse(s: &str) -> Result<Letter> {
        let v: i64 = s.trim().parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        Ok(match v {
            0 => Zero,
            v if v > 0 => Plain(v as u8),
            v => Bar((-v) as u8),
        })
    }

    /// Index `k` of `k` or `k̄`; zero for the letter `0`.
    pub fn index(self) -> u8 {
        match self {
            Plain(k) | Bar(k) => k,
            Zero => 0,
        }
    }

    pub fn is_bar(self) -> bool {
        matches!(self, Bar(_))
    }

    pub fn conjugate(self) -> Letter {
        match self {
            Plain(k) => Bar(k),
            Bar(k) => Plain(k),
            Zero => Zero,
        }
    }

    /// Position in the linear order `1 ≺ … ≺ n ≺ 0 ≺ n̄ ≺ … ≺ 1̄`.
    pub fn position(self, n: usize) -> usize {
        match self {
            Plain(k) => k as usize,
            Zero => n + 1,
            Bar(k) => 2 * n + 2 - k as usize,
        }
    }

    pub fn weight(self, ty: LieType) -> Weight {
        let mut w = Weight::zero(ty.dim());
        match self {
            Plain(k) => w.coords[k as usize - 1] = q(1),
            Bar(k) => w.coords[k as usize - 1] = q(-1),
            Zero => {}
        }
        w
    }
}

/// Strict alphabet order. In type `D` the letters `n` and `n̄` are incomparable.
pub fn precedes(ty: LieType, a: Letter, b: Letter) -> bool {
    let n = ty.rank as u8;
    if ty.family == Family::D && a.index() == n && b.index() == n {
        return false;
    }
    a.position(ty.rank) < b.position(ty.rank)
}

pub fn alphabet(ty: LieType) -> Vec<Letter> {
    let n = ty.rank as u8;
    match ty.family {
        Family::A => (1..=n + 1).map(Plain).collect(),
        Family::B => (1..=n).map(Plain).chain([Zero]).chain((1..=n).rev().map(Bar)).collect(),
        Family::C | Family::D => (1..=n).map(Plain).chain((1..=n).rev().map(Bar)).collect(),
    }
}

pub fn letter_f(ty: LieType, i: usize, x: Letter) -> Option<Letter> {
    let n = ty.rank;
    let i8 = i as u8;
    if i == 0 || i > n {
        return None;
    }
    match ty.family {
        Family::A => (x == Plain(i8)).then_some(Plain(i8 + 1)),
        Family::D if i == n - 1 => match x {
            Plain(k) if k == i8 => Some(Plain(i8 + 1)),
            Bar(k) if k == i8 + 1 => Some(Bar(i8)),
            _ => None,
        },
        Family::D if i == n => match x {
            Plain(k) if k == i8 - 1 => Some(Bar(i8)),
            Plain(k) if k == i8 => Some(Bar(i8 - 1)),
            _ => None,
        },
        Family::B if i == n => match x {
            Plain(k) if k == i8 => Some(Zero),
            Zero => Some(Bar(i8)),
            _ => None,
        },
        Family::C if i == n => (x == Plain(i8)).then_some(Bar(i8)),
        _ => match x {
            Plain(k) if k == i8 => Some(Plain(i8 + 1)),
            Bar(k) if k == i8 + 1 => Some(Bar(i8)),
            _ => None,
        },
    }
}

pub fn letter_e(ty: LieType, i: usize, x: Letter) -> Option<Letter> {
    let n = ty.rank;
    let i8 = i as u8;
    if i == 0 || i > n {
        return None;
    }
    match ty.family {
        Family::A => (x == Plain(i8 + 1)).then_some(Plain(i8)),
        Family::D if i == n - 1 => match x {
            Plain(k) if k == i8 + 1 => Some(Plain(i8)),
            Bar(k) if k == i8 => Some(Bar(i8 + 1)),
            _ => None,
        },
        Family::D if i == n => match x {
            Bar(k) if k == i8 => Some(Plain(i8 - 1)),
            Bar(k) if k == i8 - 1 => Some(Plain(i8)),
            _ => None,
        },
        Family::B if i == n => match x {
            Zero => Some(Plain(i8)),
            Bar(k) if k == i8 => Some(Zero),
            _ => None,
        },
        Family::C if i == n => (x == Bar(i8)).then_some(Plain(i8)),
        _ => match x {
            Plain(k) if k == i8 + 1 => Some(Plain(i8)),
            Bar(k) if k == i8 => Some(Bar(i8 + 1)),
            _ => None,
        },
    }
}

/// A spin column as a sign vector: `+` at `j` means the letter `j` is
/// present, `-` means `j̄` is present.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SpinColumn {
    pub plus: Vec<bool>,
}

impl fmt::Display for SpinColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.plus {
            write!(f, "{}", if p { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl SpinColumn {
    pub fn highest(n: usize) -> SpinColumn {
        SpinColumn { plus: vec![true; n] }
    }

    /// Highest element of the odd `D` parity class (weight `λ_{n-1}`).
    pub fn highest_odd(n: usize) -> SpinColumn {
        let mut s = SpinColumn::highest(n);
        s.plus[n - 1] = false;
        s
    }

    pub fn parse(s: &str) -> Result<SpinColumn> {
        let plus = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(Error::Parse(format!("bad spin column {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpinColumn { plus })
    }

    pub fn minus_count(&self) -> usize {
        self.plus.iter().filter(|&&p| !p).count()
    }

    pub fn weight(&self) -> Weight {
        Weight::from_coords(self.plus.iter().map(|&p| if p { half(1) } else { half(-1) }).collect())
    }

    /// Letters of the half column, top to bottom.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.plus.len();
        let mut out: Vec<Letter> = (1..=n).filter(|&j| self.plus[j - 1]).map(|j| Plain(j as u8)).collect();
        out.extend((1..=n).rev().filter(|&j| !self.plus[j - 1]).map(|j| Bar(j as u8)));
        out
    }

    /// Inverse of [`SpinColumn::letters`]; `None` unless each index occurs once.
    pub fn from_letters(n: usize, letters: &[Letter]) -> Option<SpinColumn> {
        if letters.len() != n {
            return None;
        }
        let mut seen = vec![None; n];
        for &l in letters {
            let k = l.index() as usize;
            if k == 0 || k > n || seen[k - 1].is_some() {
                return None;
            }
            seen[k - 1] = Some(!l.is_bar());
        }
        Some(SpinColumn { plus: seen.into_iter().map(|s| s.unwrap()).collect() })
    }
}

pub fn spin_f(ty: LieType, i: usize, s: &SpinColumn) -> Option<SpinColumn> {
    let n = ty.rank;
    let p = &s.plus;
    let mut out = s.clone();
    if i >= 1 && i < n {
        if p[i - 1] && !p[i] {
            out.plus[i - 1] = false;
            out.plus[i] = true;
            return Some(out);
        }
        return None;
    }
    if i != n {
        return None;
    }
    match ty.family {
        Family::B if p[n - 1] => {
            out.plus[n - 1] = false;
            Some(out)
        }
        Family::D if p[n - 2] && p[n - 1] => {
            out.plus[n - 2] = false;
            out.plus[n - 1] = false;
            Some(out)
        }
        _ => None,
    }
}

pub fn spin_e(ty: LieType, i: usize, s: &SpinColumn) -> Option<SpinColumn> {
    let n = ty.rank;
    let p = &s.plus;
    let mut out = s.clone();
    if i >= 1 && i < n {
        if !p[i - 1] && p[i] {
            out.plus[i - 1] = true;
            out.plus[i] = false;
            return Some(out);
        }
        return None;
    }
    if i != n {
        return None;
    }
    match ty.family {
        Family::B if !p[n - 1] => {
            out.plus[n - 1] = true;
            Some(out)
        }
        Family::D if !p[n - 2] && !p[n - 1] => {
            out.plus[n - 2] = true;
            out.plus[n - 1] = true;
            Some(out)
        }
        _ => None,
    }
}

/// A tensor factor of a reading word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Factor {
    L(Letter),
    S(SpinColumn),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::L(l) => write!(f, "{l}"),
            Factor::S(s) => write!(f, "{s}"),
        }
    }
}

/// The vector crystal and (for `B`, `D`) the spin crystal of one type.
#[derive(Clone, Copy, Debug)]
pub struct FactorCrystal {
    pub ty: LieType,
}

impl Crystal for FactorCrystal {
    type Elem = Factor;

    fn lie_type(&self) -> LieType {
        self.ty
    }

    fn weight(&self, b: &Factor) -> Weight {
        match b {
            Factor::L(l) => l.weight(self.ty),
            Factor::S(s) => s.weight(),
        }
    }

    fn e(&self, i: usize, b: &Factor) -> Option<Factor> {
        match b {
            Factor::L(l) => letter_e(self.ty, i, *l).map(Factor::L),
            Factor::S(s) => spin_e(self.ty, i, s).map(Factor::S),
        }
    }

    fn f(&self, i: usize, b: &Factor) -> Option<Factor> {
        match b {
            Factor::L(l) => letter_f(self.ty, i, *l).map(Factor::L),
            Factor::S(s) => spin_f(self.ty, i, s).map(Factor::S),
        }
    }

    fn eps(&self, i: usize, b: &Factor) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(nb) = self.e(i, &cur) {
            cur = nb;
            k += 1;
        }
        k
    }

    fn key(&self, b: &Factor) -> String {
        b.to_string()
    }
}
