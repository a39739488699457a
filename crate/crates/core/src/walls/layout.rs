//! Where the summands of a dominant weight sit on a wall, and the highest
//! wall of each classical component.

use super::pattern::{Ground, GroundKind};
use super::wall::{WallColumn, YoungWall};
use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::lie::{LieType, Weight};
use crate::tableau::OmegaDecomposition;
use std::ops::Range;

/// Column ranges of the parts `ω_{i_1}, …, ω_{i_t}` (and the spin part) of
/// `λ`, taken from the right, together with the ground they stand on.
///
/// Positions inside a part are measured in its own frame: position `P` of a
/// column is `P` blocks past the start of the part's cycle, so the top letter
/// at `P` is the `(P + 1)`-th letter of `1 ≺ 2 ≺ … ≺ n ≺ 0 ≺ n̄ ≺ … ≺ 1̄`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WallLayout {
    pub n: usize,
    /// `i_1 ≤ … ≤ i_t`.
    pub omegas: Vec<usize>,
    pub spin: bool,
    pub ground: Ground,
}

impl WallLayout {
    pub fn new(n: usize, lam: &Weight) -> Result<WallLayout> {
        let d = OmegaDecomposition::new(LieType::b(n), lam)?;
        let spin = d.spin.is_some();
        let width: usize = d.omegas.iter().sum();
        let ground = if spin {
            Ground::half_height(n, 1)
        } else if d.omegas.is_empty() {
            Ground::half_width(n, 0)
        } else {
            // The leftmost column of the last part reads `1` straight off the ground.
            let parity = width.saturating_sub(1) % 2;
            Ground::half_width(n, 1 - parity)
        };
        Ok(WallLayout { n, omegas: d.omegas, spin, ground })
    }

    /// Layout of `λ` over a given ground; fails when `λ` needs another one.
    pub fn over(ground: Ground, lam: &Weight) -> Result<WallLayout> {
        let mut l = WallLayout::new(ground.n, lam)?;
        let spin_ground = ground.kind == GroundKind::HalfHeight;
        if l.spin != spin_ground || (!l.spin && !l.omegas.is_empty() && l.ground != ground) {
            return Err(Error::Decomposition(format!("weight {lam} does not live over {ground}")));
        }
        l.ground = ground;
        Ok(l)
    }

    /// Number of parts, the spin part included.
    pub fn parts(&self) -> usize {
        self.omegas.len() + usize::from(self.spin)
    }

    /// Number of columns of part `k`.
    pub fn part_width(&self, k: usize) -> usize {
        self.omegas.get(k).copied().unwrap_or(self.n)
    }

    pub fn is_spin_part(&self, k: usize) -> bool {
        k == self.omegas.len()
    }

    pub fn columns(&self, k: usize) -> Range<usize> {
        let start: usize = (0..k).map(|j| self.part_width(j)).sum();
        start..start + self.part_width(k)
    }

    pub fn width(&self) -> usize {
        (0..self.parts()).map(|k| self.part_width(k)).sum()
    }

    /// Cycle in which part `k` starts: one period per part to its left, plus
    /// one for the half-height ground.
    fn cycle(&self, k: usize) -> usize {
        if self.is_spin_part(k) {
            0
        } else {
            self.omegas.len() - 1 - k + usize::from(self.spin)
        }
    }

    /// Pattern index of position `P` of part `k`.
    fn absolute(&self, k: usize, pos: usize) -> usize {
        self.cycle(k) * self.ground.period() + pos
    }

    fn start(&self) -> usize {
        match self.ground.kind {
            GroundKind::HalfWidth => 0,
            GroundKind::HalfHeight => self.n,
        }
    }

    /// Position of the top of the `a`-th column (from the right, 1-based) of
    /// part `k` in `y`, or `None` if it lies below the part's frame.
    pub fn top(&self, y: &YoungWall, k: usize, a: usize) -> Option<usize> {
        let col = self.columns(k).start + a - 1;
        let j = self.start() + y.added(col);
        j.checked_sub(self.absolute(k, 0))
    }

    /// Position of the highest wall's top in column `a` of part `k`.
    pub fn highest_top(&self, k: usize, a: usize) -> usize {
        if self.is_spin_part(k) {
            self.n
        } else {
            self.omegas[k] - a
        }
    }

    /// The wall column whose top sits at position `pos` of part `k`.
    pub fn column_at(&self, k: usize, pos: usize) -> Result<WallColumn> {
        let j = self.absolute(k, pos);
        let added = j
            .checked_sub(self.start())
            .ok_or_else(|| Error::Decomposition(format!("position {pos} of part {k} is below the ground")))?;
        let lone = match pos % self.ground.period() {
            0 if added > 0 => Some(u8::from(pos > 0)),
            _ => None,
        };
        Ok(WallColumn { added, lone })
    }

    /// The highest wall: part `k`'s `a`-th column reads `i_k + 1 − a`, the
    /// spin part is bare ground.
    pub fn highest(&self) -> Result<YoungWall> {
        let mut cols = Vec::new();
        for k in 0..self.parts() {
            for a in 1..=self.part_width(k) {
                cols.push(self.column_at(k, self.highest_top(k, a))?);
            }
        }
        let y = YoungWall::new(self.ground, cols);
        for k in 0..self.omegas.len() {
            let col = self.columns(k).end - 1;
            if y.top_letter(col) != Letter::Plain(1) {
                return Err(Error::Decomposition(format!("part {k} does not end on the letter 1 over {}", self.ground)));
            }
        }
        Ok(y)
    }

    /// Every proper reduced wall whose columns lie in their part's frame
    /// between the highest wall and the letter `1̄`. The node set of the
    /// component of the highest wall is a subset.
    pub fn candidates(&self) -> Vec<YoungWall> {
        let mut options = Vec::new();
        for k in 0..self.parts() {
            for a in 1..=self.part_width(k) {
                let lo = self.highest_top(k, a);
                let col: Vec<WallColumn> =
                    (lo..=2 * self.n).filter_map(|p| self.column_at(k, p).ok()).collect();
                options.push(col);
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(options.len());
        self.extend(&options, &mut cur, &mut out);
        out
    }

    fn extend(&self, options: &[Vec<WallColumn>], cur: &mut Vec<WallColumn>, out: &mut Vec<YoungWall>) {
        let k = cur.len();
        if k == options.len() {
            let y = YoungWall::new(self.ground, cur.clone());
            if y.is_proper() && y.is_reduced() {
                out.push(y);
            }
            return;
        }
        for &c in &options[k] {
            cur.push(c);
            let partial = YoungWall { ground: self.ground, cols: cur.clone() };
            let fits = k == 0 || {
                let (lb, lf) = partial.profile(k);
                let (rb, rf) = partial.profile(k - 1);
                lb <= rb && lf <= rf
            };
            if fits {
                self.extend(options, cur, out);
            }
            cur.pop();
        }
    }
}
