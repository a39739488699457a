//! Column decompositions of dominant weights and the tableau container
//! shared by the two tableau models.

use crate::error::{Error, Result};
use crate::letters::{Factor, Letter, SpinColumn};
use crate::lie::{Family, LieType, Weight};
use crate::scalar::q;
use std::fmt;
use std::str::FromStr;

/// Which spin weight a half column carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SpinKind {
    /// `λ_n`: even number of minus signs in type `D`.
    Even,
    /// `λ_{n-1}` in type `D`: odd number of minus signs.
    Odd,
}

/// `λ = ω_{i_1} + … + ω_{i_t}` plus an optional spin summand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OmegaDecomposition {
    pub ty: LieType,
    /// Ascending `i_1 ≤ … ≤ i_t`. In type `D` the index `n + 1` stands for `2λ_{n-1}`.
    pub omegas: Vec<usize>,
    pub spin: Option<SpinKind>,
}

impl OmegaDecomposition {
    pub fn new(ty: LieType, lam: &Weight) -> Result<OmegaDecomposition> {
        let c = ty.fundamental_coords(lam)?;
        let n = ty.rank;
        let mut omegas = Vec::new();
        let mut spin = None;
        let push = |i: usize, k: i64, v: &mut Vec<usize>| v.extend(std::iter::repeat_n(i, k as usize));
        match ty.family {
            Family::A | Family::C => {
                for i in 1..=n {
                    push(i, c[i - 1], &mut omegas);
                }
            }
            Family::B => {
                for i in 1..n {
                    push(i, c[i - 1], &mut omegas);
                }
                push(n, c[n - 1] / 2, &mut omegas);
                if c[n - 1] % 2 == 1 {
                    spin = Some(SpinKind::Even);
                }
            }
            Family::D => {
                for i in 1..=n - 2 {
                    push(i, c[i - 1], &mut omegas);
                }
                let (a, b) = (c[n - 2], c[n - 1]);
                let m = a.min(b);
                push(n - 1, m, &mut omegas);
                if b > a {
                    push(n, (b - m) / 2, &mut omegas);
                    if (b - m) % 2 == 1 {
                        spin = Some(SpinKind::Even);
                    }
                } else {
                    push(n + 1, (a - m) / 2, &mut omegas);
                    if (a - m) % 2 == 1 {
                        spin = Some(SpinKind::Odd);
                    }
                }
            }
        }
        Ok(OmegaDecomposition { ty, omegas, spin })
    }

    pub fn weight(&self) -> Weight {
        let ty = self.ty;
        let mut w = Weight::zero(ty.dim());
        for &i in &self.omegas {
            w = &w + &omega_weight(ty, i);
        }
        match self.spin {
            Some(SpinKind::Even) => w = &w + &ty.fundamental_weight(ty.rank),
            Some(SpinKind::Odd) => w = &w + &ty.fundamental_weight(ty.rank - 1),
            None => {}
        }
        w
    }

    pub fn heights(&self) -> Vec<usize> {
        self.omegas.iter().map(|&i| omega_height(self.ty, i)).collect()
    }
}

/// Weight of `ω_i` in the `ε` basis.
pub fn omega_weight(ty: LieType, i: usize) -> Weight {
    let n = ty.rank;
    let mut w = Weight::zero(ty.dim());
    for c in w.coords.iter_mut().take(omega_height(ty, i)) {
        *c = q(1);
    }
    if ty.family == Family::D && i == n + 1 {
        w.coords[n - 1] = q(-1);
    }
    w
}

pub fn omega_height(ty: LieType, i: usize) -> usize {
    i.min(ty.rank)
}

/// Highest column of `ω_i`, top to bottom.
pub fn highest_column(ty: LieType, i: usize) -> Vec<Letter> {
    let n = ty.rank;
    let mut col: Vec<Letter> = (1..=omega_height(ty, i)).map(|k| Letter::Plain(k as u8)).collect();
    if ty.family == Family::D && i == n + 1 {
        col[n - 1] = Letter::Bar(n as u8);
    }
    col
}

pub fn highest_spin(ty: LieType, kind: SpinKind) -> SpinColumn {
    match kind {
        SpinKind::Even => SpinColumn::highest(ty.rank),
        SpinKind::Odd => SpinColumn::highest_odd(ty.rank),
    }
}

/// Full columns (each stored top to bottom, left to right) plus an optional
/// half column whose placement depends on the model.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    pub cols: Vec<Vec<Letter>>,
    pub spin: Option<SpinColumn>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau { cols: Vec::new(), spin: None }
    }

    pub fn weight(&self, ty: LieType) -> Weight {
        let mut w = Weight::zero(ty.dim());
        for col in &self.cols {
            for l in col {
                w = &w + &l.weight(ty);
            }
        }
        if let Some(s) = &self.spin {
            w = &w + &s.weight();
        }
        w
    }

    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c.len()).collect()
    }

    /// Full columns read right to left, each top to bottom.
    pub fn letters_right_to_left(&self) -> Vec<Factor> {
        self.cols.iter().rev().flat_map(|c| c.iter().map(|&l| Factor::L(l))).collect()
    }

    /// Replace the letters in the order produced by [`Tableau::letters_right_to_left`].
    pub fn refill_right_to_left(&self, letters: &[Letter]) -> Tableau {
        let mut out = self.clone();
        let mut it = letters.iter();
        for col in out.cols.iter_mut().rev() {
            for slot in col.iter_mut() {
                *slot = *it.next().expect("word length");
            }
        }
        out
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Inverse of the [`fmt::Display`] form, e.g. `sp[+-+]|1,2|-1`.
    fn from_str(s: &str) -> Result<Tableau> {
        let mut t = Tableau::empty();
        let s = s.trim();
        if s.is_empty() {
            return Ok(t);
        }
        for part in s.split('|') {
            if let Some(inner) = part.strip_prefix("sp[").and_then(|p| p.strip_suffix(']')) {
                if t.spin.is_some() || !t.cols.is_empty() {
                    return Err(Error::Parse(format!("misplaced spin column in {s:?}")));
                }
                t.spin = Some(SpinColumn::parse(inner)?);
            } else {
                t.cols.push(part.split(',').map(Letter::parse).collect::<Result<Vec<_>>>()?);
            }
        }
        Ok(t)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some(s) = &self.spin {
            write!(f, "sp[{s}]")?;
            first = false;
        }
        for col in &self.cols {
            if !first {
                write!(f, "|")?;
            }
            first = false;
            let parts: Vec<String> = col.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

pub fn split_word(word: Vec<Factor>) -> (Vec<Letter>, Option<SpinColumn>) {
    let mut letters = Vec::new();
    let mut spin = None;
    for f in word {
        match f {
            Factor::L(l) => letters.push(l),
            Factor::S(s) => spin = Some(s),
        }
    }
    (letters, spin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        for s in ["", "1,2|-1", "sp[+-+]", "sp[-++-]|1|-4,-3"] {
            let t: Tableau = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("1|sp[++]".parse::<Tableau>().is_err());
    }

    #[test]
    fn decomposition_round_trips() {
        for ty in [LieType::a(3), LieType::b(3), LieType::c(2), LieType::d(4), LieType::d(5)] {
            for mask in 0..81i64 {
                let c: Vec<i64> = (0..ty.rank).map(|k| (mask / 3i64.pow(k as u32)) % 3).collect();
                let lam = ty.weight_from_fundamental(&c).unwrap();
                let d = OmegaDecomposition::new(ty, &lam).unwrap();
                assert_eq!(d.weight(), lam, "{ty} {c:?}");
            }
        }
    }

    #[test]
    fn b4_example_weight() {
        let ty = LieType::b(4);
        let lam = ty.weight_from_fundamental(&[0, 1, 1, 1]).unwrap();
        let d = OmegaDecomposition::new(ty, &lam).unwrap();
        assert_eq!(d.omegas, vec![2, 3]);
        assert_eq!(d.spin, Some(SpinKind::Even));
    }
}
