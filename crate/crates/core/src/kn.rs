//! Kashiwara–Nakashima tableaux.
//!
//! Columns are stored left to right with weakly decreasing heights and are
//! top-justified. A spin half column, if any, sits to the left of all full
//! columns. The reading word takes full columns right to left, each top to
//! bottom, and ends with the spin column.

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::fill;
use crate::graph::DEFAULT_NODE_CAP;
use crate::letters::{precedes, Factor, FactorCrystal, Letter, SpinColumn};
use crate::lie::{Family, LieType, Weight};
use crate::signature::{tensor_apply, tensor_eps_phi};
use crate::crystal::Op;
use crate::tableau::{highest_column, highest_spin, split_word, OmegaDecomposition, SpinKind, Tableau};
use crate::scalar::Q;
use std::collections::BTreeSet;

pub type KnTableau = Tableau;

/// `B(λ)` realized by KN tableaux of one shape.
#[derive(Clone, Debug)]
pub struct KnModel {
    pub ty: LieType,
    pub shape: OmegaDecomposition,
}

impl KnModel {
    pub fn new(ty: LieType, lam: &Weight) -> Result<KnModel> {
        Ok(KnModel { ty, shape: OmegaDecomposition::new(ty, lam)? })
    }

    /// Full-column `ω` indices left to right.
    pub fn column_omegas(&self) -> Vec<usize> {
        self.shape.omegas.iter().rev().copied().collect()
    }

    pub fn highest(&self) -> KnTableau {
        Tableau {
            cols: self.column_omegas().into_iter().map(|i| highest_column(self.ty, i)).collect(),
            spin: self.shape.spin.map(|k| highest_spin(self.ty, k)),
        }
    }

    pub fn word(&self, t: &KnTableau) -> Vec<Factor> {
        let mut w = t.letters_right_to_left();
        if let Some(s) = &t.spin {
            w.push(Factor::S(s.clone()));
        }
        w
    }

    pub fn from_word(&self, t: &KnTableau, word: Vec<Factor>) -> KnTableau {
        let (letters, spin) = split_word(word);
        let mut out = t.refill_right_to_left(&letters);
        out.spin = spin;
        out
    }

    /// Row lengths `l_1 ≥ … ≥ l_n` of the generalized Young diagram.
    pub fn row_lengths(&self) -> Vec<Q> {
        self.shape.weight().coords
    }

    /// Rows top to bottom, barred letters negative, after a `GY:` line.
    pub fn to_text(&self, t: &KnTableau) -> String {
        let gy: Vec<String> = self.row_lengths().iter().map(|c| c.to_string()).collect();
        let mut out = format!("GY: {}\n", gy.join(" "));
        let spin = t.spin.as_ref().map(|s| s.letters());
        let height = t.cols.iter().map(|c| c.len()).chain(spin.iter().map(|s| s.len())).max().unwrap_or(0);
        for r in 0..height {
            let mut row: Vec<String> = Vec::new();
            if let Some(s) = &spin {
                row.push(s[r].to_string());
            }
            row.extend(t.cols.iter().filter(|c| c.len() > r).map(|c| c[r].to_string()));
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Columns including the spin column, left to right.
    fn all_columns(t: &KnTableau) -> Vec<Vec<Letter>> {
        let mut cols = Vec::new();
        if let Some(s) = &t.spin {
            cols.push(s.letters());
        }
        cols.extend(t.cols.iter().cloned());
        cols
    }

    fn shape_matches(&self, t: &KnTableau) -> bool {
        let heights: Vec<usize> = self.column_omegas().iter().map(|&i| i.min(self.ty.rank)).collect();
        t.heights() == heights
            && t.spin.as_ref().map(|s| s.plus.len()) == self.shape.spin.map(|_| self.ty.rank)
    }

    /// Conditions (a)–(e) on a tableau of this model's shape.
    pub fn valid(&self, t: &KnTableau) -> Result<bool> {
        if !self.shape_matches(t) {
            return Err(Error::Shape(t.to_string()));
        }
        let ty = self.ty;
        if let (Some(s), Some(kind)) = (&t.spin, self.shape.spin) {
            if !spin_parity_ok(ty, s, kind) {
                return Ok(false);
            }
        }
        for (col, i) in t.cols.iter().zip(self.column_omegas()) {
            if !column_ok(ty, col) || !d_column_class_ok(ty, col, i) {
                return Ok(false);
            }
        }
        let cols = Self::all_columns(t);
        for pair in cols.windows(2) {
            if !rows_ok(ty, &pair[0], &pair[1]) || !check_2cc(ty, &pair[0], &pair[1]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every tableau of the shape passing [`KnModel::valid`].
    pub fn enumerate(&self, cap: usize) -> Result<Vec<KnTableau>> {
        let ty = self.ty;
        let mut candidates: Vec<Vec<Vec<Letter>>> = Vec::new();
        let spin_cands: Vec<SpinColumn> = match self.shape.spin {
            Some(kind) => all_spins(ty, kind),
            None => Vec::new(),
        };
        if self.shape.spin.is_some() {
            candidates.push(spin_cands.iter().map(|s| s.letters()).collect());
        }
        for i in self.column_omegas() {
            let h = i.min(ty.rank);
            let cols = fill::columns(ty, h, |a, b| column_step_ok(ty, a, b), |c| {
                check_1cc(ty, c) && d_column_class_ok(ty, c, i)
            });
            candidates.push(cols);
        }
        let chains = fill::chains(&candidates, |a, b| rows_ok(ty, a, b) && check_2cc(ty, a, b), cap)?;
        let has_spin = self.shape.spin.is_some();
        let n = ty.rank;
        let mut out: Vec<KnTableau> = chains
            .into_iter()
            .map(|mut ch| {
                let spin = if has_spin { Some(SpinColumn::from_letters(n, &ch.remove(0)).unwrap()) } else { None };
                Tableau { cols: ch, spin }
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

impl Crystal for KnModel {
    type Elem = KnTableau;

    fn lie_type(&self) -> LieType {
        self.ty
    }

    fn weight(&self, b: &KnTableau) -> Weight {
        b.weight(self.ty)
    }

    fn e(&self, i: usize, b: &KnTableau) -> Option<KnTableau> {
        let word = tensor_apply(&FactorCrystal { ty: self.ty }, Op::E, i, &self.word(b))?;
        Some(self.from_word(b, word))
    }

    fn f(&self, i: usize, b: &KnTableau) -> Option<KnTableau> {
        let word = tensor_apply(&FactorCrystal { ty: self.ty }, Op::F, i, &self.word(b))?;
        Some(self.from_word(b, word))
    }

    fn eps(&self, i: usize, b: &KnTableau) -> usize {
        tensor_eps_phi(&FactorCrystal { ty: self.ty }, i, &self.word(b)).0
    }

    fn phi(&self, i: usize, b: &KnTableau) -> usize {
        tensor_eps_phi(&FactorCrystal { ty: self.ty }, i, &self.word(b)).1
    }

    fn key(&self, b: &KnTableau) -> String {
        b.to_string()
    }
}

pub fn enumerate_kn(ty: LieType, lam: &Weight) -> Result<Vec<KnTableau>> {
    KnModel::new(ty, lam)?.enumerate(DEFAULT_NODE_CAP)
}

pub fn kn_valid(ty: LieType, lam: &Weight, t: &KnTableau) -> Result<bool> {
    KnModel::new(ty, lam)?.valid(t)
}

pub fn kn_reading(ty: LieType, lam: &Weight, t: &KnTableau) -> Result<Vec<Factor>> {
    Ok(KnModel::new(ty, lam)?.word(t))
}

pub fn all_spins(ty: LieType, kind: SpinKind) -> Vec<SpinColumn> {
    let n = ty.rank;
    (0..1u32 << n)
        .map(|mask| SpinColumn { plus: (0..n).map(|j| mask & (1 << (n - 1 - j)) == 0).collect() })
        .filter(|s| spin_parity_ok(ty, s, kind))
        .collect()
}

pub fn spin_parity_ok(ty: LieType, s: &SpinColumn, kind: SpinKind) -> bool {
    if ty.family != Family::D {
        return true;
    }
    s.minus_count().is_multiple_of(2) == (kind == SpinKind::Even)
}

/// Adjacent entries of a column, top then bottom.
pub fn column_step_ok(ty: LieType, a: Letter, b: Letter) -> bool {
    if precedes(ty, a, b) {
        return true;
    }
    match ty.family {
        Family::B => a == Letter::Zero && b == Letter::Zero,
        Family::D => {
            let n = ty.rank as u8;
            a != b && a.index() == n && b.index() == n
        }
        _ => false,
    }
}

/// Column strictness plus (1CC).
pub fn column_ok(ty: LieType, col: &[Letter]) -> bool {
    col.windows(2).all(|w| column_step_ok(ty, w[0], w[1])) && check_1cc(ty, col)
}

/// (1CC): for `i_p = a` above `i_q = ā`, `p + (N - q + 1) ≤ a`.
pub fn check_1cc(ty: LieType, col: &[Letter]) -> bool {
    let big_n = col.len();
    let n = ty.rank as u8;
    for (p0, &x) in col.iter().enumerate() {
        let Letter::Plain(a) = x else { continue };
        if ty.family == Family::D && a == n {
            continue;
        }
        for (q0, &y) in col.iter().enumerate().skip(p0 + 1) {
            if y == Letter::Bar(a) && (p0 + 1) + (big_n - (q0 + 1) + 1) > a as usize {
                return false;
            }
        }
    }
    true
}

/// Rows between a column and its right neighbour.
pub fn rows_ok(ty: LieType, left: &[Letter], right: &[Letter]) -> bool {
    left.iter().zip(right).all(|(&x, &y)| row_step_ok(ty, x, y))
}

/// Adjacent row entries, left then right. In type `D` a row never holds
/// both `n` and `n̄`.
pub fn row_step_ok(ty: LieType, x: Letter, y: Letter) -> bool {
    if precedes(ty, y, x) || (x == Letter::Zero && y == Letter::Zero) {
        return false;
    }
    let n = ty.rank as u8;
    !(ty.family == Family::D && x != y && x.index() == n && y.index() == n)
}

/// An `(a, b)`-configuration witness between adjacent columns, 1-based rows
/// counted top to bottom.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Configuration {
    pub a: usize,
    pub b: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub pval: usize,
}

fn is_middle(ty: LieType, x: Letter) -> bool {
    let n = ty.rank as u8;
    x == Letter::Zero || x.index() == n
}

/// All `(a,b)`-, `(a,n)`- and `(n,n)`-configurations of `c` (left) and `cp`.
pub fn find_configurations(ty: LieType, c: &[Letter], cp: &[Letter]) -> Vec<Configuration> {
    let n = ty.rank;
    let m = cp.len().min(c.len());
    let at = |col: &[Letter], k: usize| col[k - 1];
    let mut out = Vec::new();
    for p in 1..=m {
        let Letter::Plain(a8) = at(c, p) else {
            if ty.family == Family::D && at(c, p) == Letter::Bar(n as u8) {
                for q in p + 1..=m {
                    if at(cp, q) == Letter::Plain(n as u8) {
                        out.push(Configuration { a: n, b: n, p, q, r: q, s: q, pval: 0 });
                    }
                }
            }
            if at(c, p) == Letter::Zero {
                for q in p + 1..=m {
                    if at(cp, q) == Letter::Bar(n as u8) {
                        out.push(Configuration { a: n, b: n, p, q, r: q, s: q, pval: 0 });
                    }
                }
            }
            continue;
        };
        let a = a8 as usize;
        if a == n && ty.family == Family::D {
            for q in p + 1..=m {
                if at(cp, q) == Letter::Bar(a8) {
                    out.push(Configuration { a: n, b: n, p, q, r: q, s: q, pval: 0 });
                }
            }
            continue;
        }
        if a == n {
            for q in p + 1..=m {
                let y = at(cp, q);
                if (y == Letter::Zero && ty.family == Family::B) || y == Letter::Bar(n as u8) {
                    out.push(Configuration { a: n, b: n, p, q, r: q, s: q, pval: 0 });
                }
            }
            continue;
        }
        for s in p..=m {
            if at(cp, s) != Letter::Bar(a8) {
                continue;
            }
            for q in p..=s {
                for r in q + 1..=s {
                    for col in [c, cp] {
                        let (x, y) = (at(col, q), at(col, r));
                        if let Letter::Plain(b8) = x {
                            let b = b8 as usize;
                            if b >= a && b < n && y == Letter::Bar(b8) {
                                out.push(Configuration { a, b, p, q, r, s, pval: (q - p) + (s - r) });
                            }
                        }
                        if r == q + 1 && is_middle(ty, x) && is_middle(ty, y) && ty.family != Family::A {
                            out.push(Configuration { a, b: n, p, q, r, s, pval: (q - p) + (s - r) });
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|c| (c.a, c.b, c.p, c.q, c.r, c.s));
    out.dedup();
    out
}

/// (2CC): every configuration has `pval < b - a`.
pub fn check_2cc(ty: LieType, c: &[Letter], cp: &[Letter]) -> bool {
    if ty.family == Family::A {
        return true;
    }
    find_configurations(ty, c, cp).iter().all(|k| k.pval + k.a < k.b)
        && (ty.family != Family::D || check_parity_configurations(ty, c, cp))
}

/// Type `D`: for `i_p = a`, `j_q`, `i_r` in `{n, n̄}` and `j_s = ā` with
/// `p ≤ q < r ≤ s`, where `j_q ≠ i_r` and `r - q + 1` is odd, or `j_q = i_r`
/// and `r - q + 1` is even, require `s - p < n - a`.
pub fn check_parity_configurations(ty: LieType, c: &[Letter], cp: &[Letter]) -> bool {
    let n = ty.rank;
    let nn = n as u8;
    let m = c.len().min(cp.len());
    for p in 1..=m {
        let Letter::Plain(a) = c[p - 1] else { continue };
        if a as usize >= n {
            continue;
        }
        for q in p..=m {
            let jq = cp[q - 1];
            if jq.index() != nn {
                continue;
            }
            for r in q + 1..=m {
                let ir = c[r - 1];
                if ir.index() != nn {
                    continue;
                }
                let odd = (r - q + 1) % 2 == 1;
                if odd == (ir == jq) {
                    continue;
                }
                for s in r..=m {
                    if cp[s - 1] == Letter::Bar(a) && s - p + a as usize >= n {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Height-`n` columns of type `D` belong to `ω_n` or `ω_{n+1}`; this test
/// keeps the ones of the requested class.
pub fn d_column_class_ok(ty: LieType, col: &[Letter], omega: usize) -> bool {
    if ty.family != Family::D || col.len() != ty.rank {
        return true;
    }
    d_column_is_even(ty, col) == (omega == ty.rank)
}

/// Class of a full-height type `D` column: the number of barred letters
/// below `n̄`, plus one if the lowest of the `n`, `n̄` entries is `n̄`, is even.
pub fn d_column_is_even(ty: LieType, col: &[Letter]) -> bool {
    let n = ty.rank as u8;
    let low_bars = col.iter().filter(|l| l.is_bar() && l.index() < n).count();
    let last_is_bar = col.iter().rev().find(|l| l.index() == n).is_some_and(|l| l.is_bar());
    (low_bars + last_is_bar as usize).is_multiple_of(2)
}

/// Distinct tableaux, used by tests comparing sets.
pub fn as_set(ts: &[KnTableau]) -> BTreeSet<KnTableau> {
    ts.iter().cloned().collect()
}
