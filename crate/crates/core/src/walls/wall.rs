//! Walls, their signatures and the Kashiwara operators.

use super::pattern::{BlockShape, Ground, GroundKind};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::graph::{generate_component, Component};
use crate::letters::{letter_e, letter_f, Letter};
use crate::lie::{LieType, Weight};
use crate::scalar::{half, q};
use crate::signature::{reduce_signature, Sign};
use std::fmt;

/// One column: the number of blocks added over the ground and, when the top
/// block is a triangle standing alone in its `0/1` cell, that triangle's colour.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct WallColumn {
    pub added: usize,
    pub lone: Option<u8>,
}

impl WallColumn {
    pub fn new(added: usize) -> WallColumn {
        WallColumn { added, lone: None }
    }

    pub fn with_lone(added: usize, color: u8) -> WallColumn {
        WallColumn { added, lone: Some(color) }
    }
}

impl fmt::Display for WallColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lone {
            Some(c) => write!(f, "{}:{c}", self.added),
            None => write!(f, "{}", self.added),
        }
    }
}

/// A wall over a ground-state wall: `cols[k]` is column `y_k`, columns
/// counted from the right. Trailing empty columns are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct YoungWall {
    pub ground: Ground,
    pub cols: Vec<WallColumn>,
}

impl YoungWall {
    pub fn ground_state(ground: Ground) -> YoungWall {
        YoungWall { ground, cols: Vec::new() }
    }

    pub fn new(ground: Ground, mut cols: Vec<WallColumn>) -> YoungWall {
        while cols.last().is_some_and(|c| c.added == 0) {
            cols.pop();
        }
        YoungWall { ground, cols }
    }

    /// A wall given by block counts only; every `0/1` cell is complete or
    /// holds its back triangle.
    pub fn from_counts(ground: Ground, counts: &[usize]) -> YoungWall {
        let cols = counts
            .iter()
            .enumerate()
            .map(|(k, &t)| {
                let (s, _) = ground.locate(t);
                let lone = (t > 0 && s == 0).then(|| ground.back_color(k));
                WallColumn { added: t, lone }
            })
            .collect();
        YoungWall::new(ground, cols)
    }

    pub fn n(&self) -> usize {
        self.ground.n
    }

    pub fn column(&self, k: usize) -> WallColumn {
        self.cols.get(k).copied().unwrap_or_default()
    }

    /// Blocks added to column `k`.
    pub fn added(&self, k: usize) -> usize {
        self.column(k).added
    }

    /// Height of column `k` in half units, ground included.
    pub fn height(&self, k: usize) -> usize {
        let (back, front) = self.profile(k);
        back.max(front)
    }

    /// Heights in half units of the back and front halves of column `k`.
    /// They differ only when the top triangle stands alone.
    pub fn profile(&self, k: usize) -> (usize, usize) {
        let c = self.column(k);
        let h = self.ground.height(k, c.added);
        let (s, _) = self.ground.locate(c.added);
        if s != 0 {
            return (h, h);
        }
        let color = c.lone.unwrap_or_else(|| self.ground.ground_color(k));
        if color == self.ground.back_color(k) {
            (h, h - 2)
        } else {
            (h - 2, h)
        }
    }

    /// Full columns have integral height and a top of unit thickness.
    pub fn is_full(&self, k: usize) -> bool {
        let (back, front) = self.profile(k);
        back == front && back % 2 == 0
    }

    pub fn top_letter(&self, k: usize) -> Letter {
        let c = self.column(k);
        self.ground.top_letter(k, c.added, c.lone)
    }

    /// Building rule: no free space to the right of any block, in the back
    /// and in the front half.
    pub fn is_wall(&self) -> bool {
        (1..=self.cols.len()).all(|k| {
            let (lb, lf) = self.profile(k);
            let (rb, rf) = self.profile(k - 1);
            lb <= rb && lf <= rf
        })
    }

    /// No two full columns of equal height.
    pub fn is_proper(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.is_wall() && (0..self.cols.len()).filter(|&k| self.is_full(k)).all(|k| seen.insert(self.height(k)))
    }

    fn with_column(&self, k: usize, col: WallColumn) -> YoungWall {
        let mut cols = self.cols.clone();
        if cols.len() <= k {
            cols.resize(k + 1, WallColumn::default());
        }
        cols[k] = col;
        YoungWall::new(self.ground, cols)
    }

    /// Column `k` with one `i`-block put on top, if the pattern allows it.
    fn put(&self, k: usize, i: usize) -> Option<WallColumn> {
        let c = self.column(k);
        let t = c.added + 1;
        let i = i as u8;
        match self.ground.locate(t).0 {
            0 => (i <= 1).then_some(WallColumn::with_lone(t, i)),
            1 => {
                let first = c.lone.unwrap_or_else(|| self.ground.ground_color(k));
                (i == 1 - first).then_some(WallColumn::new(t))
            }
            _ => (self.ground.fixed_color(t) == Some(i)).then_some(WallColumn::new(t)),
        }
    }

    /// Column `k` with its top `i`-block taken off, if the top can be an `i`-block.
    fn take(&self, k: usize, i: usize) -> Option<WallColumn> {
        let c = self.column(k);
        let t = c.added;
        let i = i as u8;
        if t == 0 {
            return None;
        }
        match self.ground.locate(t).0 {
            0 => (c.lone == Some(i)).then_some(WallColumn::new(t - 1)),
            1 if t == 1 => (i == 1 - self.ground.ground_color(k)).then_some(WallColumn::new(0)),
            1 => (i <= 1).then(|| WallColumn::with_lone(t - 1, 1 - i)),
            _ => (self.ground.fixed_color(t) == Some(i)).then_some(WallColumn::new(t - 1)),
        }
    }

    /// `ε_i` of the top letter of column `k` in the level-1 vector crystal, or
    /// 0 on a bare ground column. On walls reachable from the ground state the
    /// signature built from these counts agrees with [`Self::signature`].
    pub fn removable_by_letter(&self, k: usize, i: usize) -> usize {
        if self.added(k) == 0 {
            return 0;
        }
        vector_eps_phi(self.n(), i, self.top_letter(k)).0
    }

    /// `φ_i` of the top letter of column `k`; only the first column past the
    /// wall counts among the bare ground columns.
    pub fn admissible_by_letter(&self, k: usize, i: usize) -> usize {
        if k > self.cols.len() {
            return 0;
        }
        vector_eps_phi(self.n(), i, self.top_letter(k)).1
    }

    /// How many `i`-blocks can be taken off the top of column `k` (0–2), one
    /// at a time, keeping the wall proper.
    pub fn removable(&self, k: usize, i: usize) -> usize {
        self.count_steps(k, i, Self::take)
    }

    /// How many `i`-blocks can be put on top of column `k` (0–2), one at a
    /// time, keeping the wall proper.
    pub fn admissible(&self, k: usize, i: usize) -> usize {
        self.count_steps(k, i, Self::put)
    }

    fn count_steps(&self, k: usize, i: usize, step: fn(&YoungWall, usize, usize) -> Option<WallColumn>) -> usize {
        let mut w = self.clone();
        let mut r = 0;
        while r < 2 {
            match step(&w, k, i).map(|c| w.with_column(k, c)) {
                Some(next) if next.is_proper() => w = next,
                _ => break,
            }
            r += 1;
        }
        r
    }

    /// Per-column symbols for colour `i`: `--`, `-`, `-+`, `+` or `++`.
    fn column_symbols(&self, k: usize, i: usize, by_letter: bool) -> Vec<Sign> {
        let (r, a) = if by_letter {
            (self.removable_by_letter(k, i), self.admissible_by_letter(k, i))
        } else {
            (self.removable(k, i), self.admissible(k, i))
        };
        let a = match r {
            0 => a,
            1 => a.min(1),
            _ => 0,
        };
        std::iter::repeat_n(Sign::Minus, r).chain(std::iter::repeat_n(Sign::Plus, a)).collect()
    }

    /// The reduced `i`-signature: surviving symbols with their columns. The
    /// columns are read as drawn, from the leftmost one with room for a block
    /// down to `y_0`.
    pub fn signature(&self, i: usize) -> Vec<(Sign, usize)> {
        self.reduced(i, false)
    }

    /// The reduced `i`-signature built from the top letters alone.
    pub fn signature_by_letter(&self, i: usize) -> Vec<(Sign, usize)> {
        self.reduced(i, true)
    }

    fn reduced(&self, i: usize, by_letter: bool) -> Vec<(Sign, usize)> {
        let mut seq = Vec::new();
        let mut owner = Vec::new();
        for k in (0..=self.cols.len()).rev() {
            for s in self.column_symbols(k, i, by_letter) {
                seq.push(s);
                owner.push(k);
            }
        }
        let (reduced, idx) = reduce_signature(&seq);
        reduced.into_iter().zip(idx).map(|(s, j)| (s, owner[j])).collect()
    }

    pub fn wall_f(&self, i: usize) -> Option<YoungWall> {
        let (_, k) = self.signature(i).into_iter().find(|&(s, _)| s == Sign::Plus)?;
        Some(self.with_column(k, self.put(k, i)?))
    }

    pub fn wall_e(&self, i: usize) -> Option<YoungWall> {
        let (_, k) = self.signature(i).into_iter().rev().find(|&(s, _)| s == Sign::Minus)?;
        Some(self.with_column(k, self.take(k, i)?))
    }

    /// `(ε_i, φ_i)` read from the reduced signature.
    pub fn eps_phi(&self, i: usize) -> (usize, usize) {
        let sig = self.signature(i);
        let m = sig.iter().filter(|(s, _)| *s == Sign::Minus).count();
        (m, sig.len() - m)
    }

    /// Number of added blocks of each colour `0..=n`.
    pub fn content(&self) -> Vec<usize> {
        let mut k = vec![0; self.n() + 1];
        for (col, c) in self.cols.iter().enumerate() {
            for t in 1..=c.added {
                match self.ground.fixed_color(t) {
                    Some(i) => k[i as usize] += 1,
                    None if self.ground.locate(t).0 == 1 && t == 1 => {
                        k[1 - self.ground.ground_color(col) as usize] += 1
                    }
                    // Second triangle of a complete cell: count the pair once.
                    None if self.ground.locate(t).0 == 1 => {
                        k[0] += 1;
                        k[1] += 1;
                    }
                    None if t == c.added => k[c.lone.expect("lone top triangle") as usize] += 1,
                    None => {}
                }
            }
        }
        k
    }

    /// Classical part of `Λ − Σ k_i α_i`, with `α_0` restricting to `−(ε_1 + ε_2)`.
    pub fn weight(&self) -> Weight {
        let n = self.n();
        let ty = LieType::b(n);
        let mut w = match self.ground.kind {
            GroundKind::HalfHeight => Weight::from_coords(vec![half(1); n]),
            GroundKind::HalfWidth if self.ground.lambda() == 1 => Weight::unit(n, 0),
            GroundKind::HalfWidth => Weight::zero(n),
        };
        let k = self.content();
        let mut theta = Weight::unit(n, 0);
        theta.coords[1] = q(1);
        w = &w + &theta.scale(q(k[0] as i64));
        for (i, &ki) in k.iter().enumerate().skip(1) {
            w = &w - &ty.simple_root(i).scale(q(ki as i64));
        }
        w
    }

    /// A column contains a removable `δ` if one period can be taken out of it
    /// and the wall stays proper.
    pub fn is_reduced(&self) -> bool {
        let p = self.ground.period();
        (0..self.cols.len()).all(|k| {
            let c = self.column(k);
            if c.added < p {
                return true;
            }
            let mut low = WallColumn { added: c.added - p, lone: c.lone };
            if low.added == 0 && self.ground.kind == GroundKind::HalfWidth {
                if c.lone != Some(self.ground.ground_color(k)) {
                    return true;
                }
                low.lone = None;
            }
            !self.with_column(k, low).is_proper()
        })
    }

    /// Blocks of column `k` as drawn, bottom to top, ground first.
    pub fn column_blocks(&self, k: usize) -> Vec<(u8, BlockShape)> {
        let c = self.column(k);
        let g = &self.ground;
        let mut out = vec![g.block(k, 0)];
        for t in 1..=c.added {
            let (s, _) = g.locate(t);
            match (s, c.lone) {
                (0, Some(col)) if t == c.added => {
                    let shape = if col == g.back_color(k) { BlockShape::Back } else { BlockShape::Front };
                    out.push((col, shape));
                }
                _ => out.push(g.block(k, t)),
            }
        }
        out
    }

    /// Parse the fixture text format (see [`fmt::Display`]).
    pub fn parse(text: &str) -> Result<YoungWall> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty wall".into()))?;
        let ground = parse_header(header)?;
        let mut cols = Vec::new();
        for (k, line) in lines.enumerate() {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("ground:1") => {}
                other => return Err(Error::Parse(format!("column {k}: expected ground:1, got {other:?}"))),
            }
            let toks: Vec<&str> = toks.collect();
            let col = parse_column(ground, k, &toks).map_err(|e| Error::Parse(format!("column {k}: {e}")))?;
            cols.push(col);
        }
        let wall = YoungWall::new(ground, cols.clone());
        if wall.cols.len() != cols.len() {
            return Err(Error::Parse("trailing ground-only columns".into()));
        }
        Ok(wall)
    }
}

/// `(ε_i, φ_i)` of a letter in the vector crystal of `B_n^(1)`, where
/// `f_0` sends `1̄ ↦ 2` and `2̄ ↦ 1`.
pub fn vector_eps_phi(n: usize, i: usize, x: Letter) -> (usize, usize) {
    if i == 0 {
        return match x {
            Letter::Plain(1) | Letter::Plain(2) => (1, 0),
            Letter::Bar(1) | Letter::Bar(2) => (0, 1),
            _ => (0, 0),
        };
    }
    let ty = LieType::b(n);
    let count = |step: fn(LieType, usize, Letter) -> Option<Letter>| {
        std::iter::successors(step(ty, i, x), |&y| step(ty, i, y)).count()
    };
    (count(letter_e), count(letter_f))
}

fn parse_column(ground: Ground, k: usize, toks: &[&str]) -> std::result::Result<WallColumn, String> {
    let mut t = 0;
    let mut lone = None;
    let mut j = 0;
    while j < toks.len() {
        t += 1;
        let (s, _) = ground.locate(t);
        let tok = toks[j];
        let last = j + 1 == toks.len();
        if s == 0 {
            let back = token(ground.back_color(k), BlockShape::Back);
            let front = token(1 - ground.back_color(k), BlockShape::Front);
            if tok == front && last {
                lone = Some(1 - ground.back_color(k));
            } else if tok != back {
                return Err(format!("block {t} is {tok}, expected {back} or {front}"));
            } else if last {
                lone = Some(ground.back_color(k));
            }
        } else {
            let want = token(ground.block(k, t).0, ground.block(k, t).1);
            if tok != want {
                return Err(format!("block {t} is {tok}, pattern has {want}"));
            }
        }
        j += 1;
    }
    Ok(WallColumn { added: t, lone })
}

fn token(color: u8, shape: BlockShape) -> String {
    format!("{color}:{}", shape.code())
}
fn parse_header(line: &str) -> Result<Ground> {
    let bad = || Error::Parse(format!("bad wall header {line:?}"));
    let parts: Vec<&str> = line.split_whitespace().collect();
    let [ty, lam, par] = parts[..] else { return Err(bad()) };
    let n: usize = ty.strip_prefix('B').and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let lam: usize = lam.strip_prefix('L').and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let parity: u8 = par.strip_prefix("parity=").and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if n < 2 || parity > 1 {
        return Err(bad());
    }
    let ground = match lam {
        0 | 1 => Ground::half_width(n, lam),
        l if l == n => Ground::half_height(n, parity),
        _ => return Err(bad()),
    };
    if ground.parity != parity {
        return Err(bad());
    }
    Ok(ground)
}

/// Header line `B<n> L<i> parity=<p>`, then one line per column `y_0, y_1, …`:
/// `ground:1` followed by the added blocks bottom to top as `colour:shape`
/// with shapes `u` (unit), `h` (half height), `b`/`f` (back/front triangle).
/// A complete `0/1` cell is written back first; a lone top triangle is
/// written with its own shape.
impl fmt::Display for YoungWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ground)?;
        for k in 0..self.cols.len() {
            write!(f, "\nground:1")?;
            for &(c, s) in &self.column_blocks(k)[1..] {
                write!(f, " {}", token(c, s))?;
            }
        }
        Ok(())
    }
}

/// Walls over one ground with the classical operators `e_1, …, e_n`.
#[derive(Clone, Copy, Debug)]
pub struct WallCrystal {
    pub ground: Ground,
}

impl Crystal for WallCrystal {
    type Elem = YoungWall;

    fn lie_type(&self) -> LieType {
        LieType::b(self.ground.n)
    }

    fn weight(&self, b: &YoungWall) -> Weight {
        b.weight()
    }

    fn e(&self, i: usize, b: &YoungWall) -> Option<YoungWall> {
        b.wall_e(i)
    }

    fn f(&self, i: usize, b: &YoungWall) -> Option<YoungWall> {
        b.wall_f(i)
    }

    fn eps(&self, i: usize, b: &YoungWall) -> usize {
        b.eps_phi(i).0
    }

    fn phi(&self, i: usize, b: &YoungWall) -> usize {
        b.eps_phi(i).1
    }

    fn key(&self, b: &YoungWall) -> String {
        let cols: Vec<String> = b.cols.iter().map(|c| c.to_string()).collect();
        format!("[{}]", cols.join(","))
    }
}

/// The component of `seed` under the classical operators, or under all of
/// `e_0, …, e_n` when `classical_only` is off (then `cap` bounds the search).
pub fn wall_component(seed: &YoungWall, classical_only: bool, cap: usize) -> Result<Component<YoungWall>> {
    let first = usize::from(classical_only);
    let colors: Vec<usize> = (first..=seed.n()).collect();
    generate_component(&WallCrystal { ground: seed.ground }, seed, &colors, cap)
}

/// Apply classical `e_i` (any defined one, smallest colour first) until none applies.
pub fn e_saturate(y: &YoungWall) -> YoungWall {
    WallCrystal { ground: y.ground }.raise_to_highest(y, false).0
}
