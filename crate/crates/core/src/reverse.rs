//! Reverse tableaux.
//!
//! Columns are stored left to right with weakly increasing heights and are
//! bottom-justified; each column is stored top to bottom. A spin half column
//! sits to the right of all full columns. Rows are counted from the bottom.
//! The reading word starts with the spin column and then takes full columns
//! right to left, each top to bottom.

use crate::crystal::{Crystal, Op};
use crate::error::{Error, Result};
use crate::fill;
use crate::graph::DEFAULT_NODE_CAP;
use crate::kn::{all_spins, column_step_ok, d_column_class_ok, row_step_ok, spin_parity_ok};
use crate::letters::{Factor, FactorCrystal, Letter, SpinColumn};
use crate::lie::{Family, LieType, Weight};
use crate::scalar::Q;
use crate::signature::{tensor_apply, tensor_eps_phi};
use crate::tableau::{highest_column, highest_spin, split_word, OmegaDecomposition, Tableau};

pub type RevTableau = Tableau;

/// Choices for the readings of the column conditions that admit more than one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RevPolicy {
    /// (1CC) over all `a`, `b̄` pairs with `max(a, b)`, rather than `a = b` only.
    pub one_column_max_form: bool,
    /// (2CC-1) with `min(a, b)` over all `a`, `b̄` pairs, rather than `a = b` only.
    pub first_two_column_min_form: bool,
}

impl Default for RevPolicy {
    fn default() -> Self {
        RevPolicy { one_column_max_form: false, first_two_column_min_form: true }
    }
}

/// `B(λ)` realized by reverse tableaux of one shape.
#[derive(Clone, Debug)]
pub struct RevModel {
    pub ty: LieType,
    pub shape: OmegaDecomposition,
    pub policy: RevPolicy,
}

/// Entry of a bottom-justified column at row `j` (1 = bottom).
fn row(col: &[Letter], j: usize) -> Letter {
    col[col.len() - j]
}

impl RevModel {
    pub fn new(ty: LieType, lam: &Weight) -> Result<RevModel> {
        Ok(RevModel { ty, shape: OmegaDecomposition::new(ty, lam)?, policy: RevPolicy::default() })
    }

    pub fn with_policy(mut self, policy: RevPolicy) -> RevModel {
        self.policy = policy;
        self
    }

    pub fn column_omegas(&self) -> Vec<usize> {
        self.shape.omegas.clone()
    }

    pub fn highest(&self) -> RevTableau {
        Tableau {
            cols: self.column_omegas().into_iter().map(|i| highest_column(self.ty, i)).collect(),
            spin: self.shape.spin.map(|k| highest_spin(self.ty, k)),
        }
    }

    pub fn word(&self, t: &RevTableau) -> Vec<Factor> {
        let mut w = Vec::new();
        if let Some(s) = &t.spin {
            w.push(Factor::S(s.clone()));
        }
        w.extend(t.letters_right_to_left());
        w
    }

    pub fn from_word(&self, t: &RevTableau, word: Vec<Factor>) -> RevTableau {
        let (letters, spin) = split_word(word);
        let mut out = t.refill_right_to_left(&letters);
        out.spin = spin;
        out
    }

    /// Row lengths `l_1, …, l_n`, rows counted from the bottom.
    pub fn row_lengths(&self) -> Vec<Q> {
        self.shape.weight().coords
    }

    /// Rows top to bottom after a `GRY:` line; spin entries are marked `sp:`
    /// and empty cells above short columns are `.`.
    pub fn to_text(&self, t: &RevTableau) -> String {
        let gry: Vec<String> = self.row_lengths().iter().map(|c| c.to_string()).collect();
        let mut out = format!("GRY: {}\n", gry.join(" "));
        let spin = t.spin.as_ref().map(|s| s.letters());
        let height = t.cols.iter().map(|c| c.len()).chain(spin.iter().map(|s| s.len())).max().unwrap_or(0);
        for j in (1..=height).rev() {
            let mut cells: Vec<String> =
                t.cols.iter().map(|c| if c.len() >= j { row(c, j).to_string() } else { ".".into() }).collect();
            if let Some(s) = &spin {
                cells.push(if s.len() >= j { format!("sp:{}", row(s, j)) } else { "sp:.".into() });
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    fn all_columns(t: &RevTableau) -> Vec<Vec<Letter>> {
        let mut cols = t.cols.clone();
        if let Some(s) = &t.spin {
            cols.push(s.letters());
        }
        cols
    }

    fn shape_matches(&self, t: &RevTableau) -> bool {
        let heights: Vec<usize> = self.column_omegas().iter().map(|&i| i.min(self.ty.rank)).collect();
        t.heights() == heights
            && t.spin.as_ref().map(|s| s.plus.len()) == self.shape.spin.map(|_| self.ty.rank)
    }

    fn column_valid(&self, col: &[Letter]) -> bool {
        col.windows(2).all(|w| column_step_ok(self.ty, w[0], w[1])) && self.check_1cc(col)
    }

    fn pair_valid(&self, l: &[Letter], r: &[Letter]) -> bool {
        let ty = self.ty;
        rows_ok(ty, l, r)
            && check_2cc1(ty, l, r, self.policy.first_two_column_min_form)
            && check_2cc2(ty, l, r)
            && (ty.family != Family::D || check_2cc3(ty, l, r))
    }

    pub fn check_1cc(&self, col: &[Letter]) -> bool {
        check_1cc_rows(self.ty, col, self.policy.one_column_max_form)
    }

    pub fn valid(&self, t: &RevTableau) -> Result<bool> {
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
            if !self.column_valid(col) || !d_column_class_ok(ty, col, i) {
                return Ok(false);
            }
        }
        let cols = Self::all_columns(t);
        Ok(cols.windows(2).all(|p| self.pair_valid(&p[0], &p[1])))
    }

    pub fn enumerate(&self, cap: usize) -> Result<Vec<RevTableau>> {
        let ty = self.ty;
        let mut candidates: Vec<Vec<Vec<Letter>>> = Vec::new();
        for i in self.column_omegas() {
            let h = i.min(ty.rank);
            candidates.push(fill::columns(ty, h, |a, b| column_step_ok(ty, a, b), |c| {
                self.check_1cc(c) && d_column_class_ok(ty, c, i)
            }));
        }
        if let Some(kind) = self.shape.spin {
            candidates.push(all_spins(ty, kind).iter().map(|s| s.letters()).collect());
        }
        let chains = fill::chains(&candidates, |a, b| self.pair_valid(a, b), cap)?;
        let n = ty.rank;
        let has_spin = self.shape.spin.is_some();
        let mut out: Vec<RevTableau> = chains
            .into_iter()
            .map(|mut ch| {
                let spin = if has_spin { Some(SpinColumn::from_letters(n, &ch.pop().unwrap()).unwrap()) } else { None };
                Tableau { cols: ch, spin }
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

impl Crystal for RevModel {
    type Elem = RevTableau;

    fn lie_type(&self) -> LieType {
        self.ty
    }

    fn weight(&self, b: &RevTableau) -> Weight {
        b.weight(self.ty)
    }

    fn e(&self, i: usize, b: &RevTableau) -> Option<RevTableau> {
        let word = tensor_apply(&FactorCrystal { ty: self.ty }, Op::E, i, &self.word(b))?;
        Some(self.from_word(b, word))
    }

    fn f(&self, i: usize, b: &RevTableau) -> Option<RevTableau> {
        let word = tensor_apply(&FactorCrystal { ty: self.ty }, Op::F, i, &self.word(b))?;
        Some(self.from_word(b, word))
    }

    fn eps(&self, i: usize, b: &RevTableau) -> usize {
        tensor_eps_phi(&FactorCrystal { ty: self.ty }, i, &self.word(b)).0
    }

    fn phi(&self, i: usize, b: &RevTableau) -> usize {
        tensor_eps_phi(&FactorCrystal { ty: self.ty }, i, &self.word(b)).1
    }

    fn key(&self, b: &RevTableau) -> String {
        b.to_string()
    }
}

pub fn gry_shape(ty: LieType, lam: &Weight) -> Result<Vec<Q>> {
    Ok(OmegaDecomposition::new(ty, lam)?.weight().coords)
}

pub fn gry_weight(ty: LieType, rows: &[Q]) -> Result<Weight> {
    if rows.len() != ty.dim() {
        return Err(Error::WeightLength { got: rows.len(), expected: ty.dim() });
    }
    let w = Weight::from_coords(rows.to_vec());
    ty.fundamental_coords(&w)?;
    Ok(w)
}

pub fn enumerate_t(ty: LieType, lam: &Weight) -> Result<Vec<RevTableau>> {
    RevModel::new(ty, lam)?.enumerate(DEFAULT_NODE_CAP)
}

pub fn t_valid(ty: LieType, lam: &Weight, t: &RevTableau) -> Result<bool> {
    RevModel::new(ty, lam)?.valid(t)
}

pub fn t_reading(ty: LieType, lam: &Weight, t: &RevTableau) -> Result<Vec<Factor>> {
    Ok(RevModel::new(ty, lam)?.word(t))
}

/// Rows of adjacent bottom-justified columns, `left` no taller than `right`.
pub fn rows_ok(ty: LieType, left: &[Letter], right: &[Letter]) -> bool {
    (1..=left.len().min(right.len())).all(|j| row_step_ok(ty, row(left, j), row(right, j)))
}

fn plain_index(ty: LieType, x: Letter) -> Option<usize> {
    match x {
        Letter::Plain(a) => Some(a as usize),
        Letter::Zero if ty.family == Family::B => Some(ty.rank),
        Letter::Bar(a) if ty.family == Family::D && a as usize == ty.rank => Some(ty.rank),
        _ => None,
    }
}

fn bar_index(ty: LieType, x: Letter) -> Option<usize> {
    match x {
        Letter::Bar(a) => Some(a as usize),
        Letter::Zero if ty.family == Family::B => Some(ty.rank),
        Letter::Plain(a) if ty.family == Family::D && a as usize == ty.rank => Some(ty.rank),
        _ => None,
    }
}

/// (1CC) with rows counted from the bottom: an `a` at row `p` above a `b̄`
/// at row `q` needs `p - q - 1 ≥ N - max(a, b)`.
pub fn check_1cc_rows(ty: LieType, col: &[Letter], max_form: bool) -> bool {
    let big_n = col.len();
    let n = ty.rank;
    for p in 1..=big_n {
        let Letter::Plain(a) = row(col, p) else { continue };
        let a = a as usize;
        if ty.family == Family::D && a == n {
            continue;
        }
        for q in 1..p {
            let Letter::Bar(b) = row(col, q) else { continue };
            let b = b as usize;
            if ty.family == Family::D && b == n {
                continue;
            }
            if b != a && !max_form {
                continue;
            }
            if p - q - 1 + a.max(b) < big_n {
                return false;
            }
        }
    }
    true
}

/// (2CC-1): an `a` in `l` at row `p` and a `b̄` in `r` at row `q < p` need
/// `p - q ≤ n - min(a, b)`.
pub fn check_2cc1(ty: LieType, l: &[Letter], r: &[Letter], min_form: bool) -> bool {
    if ty.family == Family::A {
        return true;
    }
    let n = ty.rank;
    for p in 1..=l.len() {
        let Some(a) = plain_index(ty, row(l, p)) else { continue };
        for q in 1..p.min(r.len() + 1) {
            let y = row(r, q);
            let Some(b) = bar_index(ty, y) else { continue };
            if row(l, p) == Letter::Zero && y == Letter::Zero {
                continue;
            }
            if ty.family == Family::D && a == n && b == n && row(l, p) == y {
                continue;
            }
            if b != a && !min_form {
                continue;
            }
            if p - q + a.min(b) > n {
                return false;
            }
        }
    }
    true
}

/// (2CC-2): for an `a` in `l` at row `p` and an `ā` in `r` at row `q < p`,
/// every `b` above a `c̄` inside one column, at rows `r0 > s0` in `[q, p]`,
/// needs `(p - r0) + (s0 - q) < max(b, c) - a`.
pub fn check_2cc2(ty: LieType, l: &[Letter], r: &[Letter]) -> bool {
    if ty.family == Family::A {
        return true;
    }
    for p in 1..=l.len() {
        let Letter::Plain(a) = row(l, p) else { continue };
        let a = a as usize;
        for q in 1..p.min(r.len() + 1) {
            if row(r, q) != Letter::Bar(a as u8) {
                continue;
            }
            for col in [l, r] {
                let top = p.min(col.len());
                for r0 in q..=top {
                    let Some(b) = plain_index(ty, row(col, r0)) else { continue };
                    for s0 in q..r0 {
                        let Some(c) = bar_index(ty, row(col, s0)) else { continue };
                        if (p - r0) + (s0 - q) + a >= b.max(c) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// (2CC-3), type `D`: every `a`-odd or `a`-even configuration has
/// `p - s < n - a`.
pub fn check_2cc3(ty: LieType, l: &[Letter], r: &[Letter]) -> bool {
    let n = ty.rank;
    let nn = n as u8;
    let m = l.len().min(r.len());
    for p in 1..=m {
        let Letter::Plain(a) = row(l, p) else { continue };
        if a as usize >= n {
            continue;
        }
        for q in 1..=p {
            let jq = row(r, q);
            if jq.index() != nn {
                continue;
            }
            for r0 in 1..q {
                let ir = row(l, r0);
                if ir.index() != nn {
                    continue;
                }
                let odd = (q - r0 + 1) % 2 == 1;
                let same = ir == jq;
                if odd == same {
                    continue;
                }
                for s in 1..=r0 {
                    if row(r, s) == Letter::Bar(a) && p - s + a as usize >= n {
                        return false;
                    }
                }
            }
        }
    }
    true
}
