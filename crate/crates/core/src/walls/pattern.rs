//! The stacking pattern of `B_n^(1)` walls.

use crate::letters::Letter;
use std::fmt;

/// Shape of a block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockShape {
    Unit,
    HalfHeight,
    /// Half-width block placed first in its cell.
    Back,
    /// Half-width block completing its cell.
    Front,
}

impl BlockShape {
    pub fn code(self) -> char {
        match self {
            BlockShape::Unit => 'u',
            BlockShape::HalfHeight => 'h',
            BlockShape::Back => 'b',
            BlockShape::Front => 'f',
        }
    }

    pub fn from_code(c: char) -> Option<BlockShape> {
        Some(match c {
            'u' => BlockShape::Unit,
            'h' => BlockShape::HalfHeight,
            'b' => BlockShape::Back,
            'f' => BlockShape::Front,
            _ => return None,
        })
    }

    /// Height in half units.
    pub fn half_units(self) -> usize {
        match self {
            BlockShape::Unit => 2,
            _ => 1,
        }
    }
}

/// Which level-1 ground-state wall the columns stand on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroundKind {
    /// One layer of half-width blocks (`Λ_0` or `Λ_1`).
    HalfWidth,
    /// One layer of half-height `n`-blocks (`Λ_n`).
    HalfHeight,
}

/// A ground-state wall of `B_n^(1)` together with the drawing of the
/// half-width cells above it.
///
/// Each `0/1` cell is split along its diagonal into a back (lower right) and
/// a front (upper left) triangle. In column `k` the back triangle has colour
/// `(k + parity) mod 2` in every cycle and the front one the other colour.
/// Either triangle may be placed first; on a half-width ground the ground
/// block is the back triangle of cycle 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ground {
    pub n: usize,
    pub kind: GroundKind,
    pub parity: u8,
}

impl Ground {
    /// `Λ_0` and `Λ_1`: back colour of column 0 is `1` resp. `0`.
    pub fn half_width(n: usize, lambda: usize) -> Ground {
        assert!(lambda <= 1);
        Ground { n, kind: GroundKind::HalfWidth, parity: (1 - lambda) as u8 }
    }

    pub fn half_height(n: usize, parity: u8) -> Ground {
        Ground { n, kind: GroundKind::HalfHeight, parity }
    }

    /// Index of the affine fundamental weight `Λ` of the ground.
    pub fn lambda(&self) -> usize {
        match self.kind {
            GroundKind::HalfWidth => 1 - self.parity as usize,
            GroundKind::HalfHeight => self.n,
        }
    }

    pub fn period(&self) -> usize {
        2 * self.n
    }

    /// Pattern position of the ground block.
    fn start(&self) -> usize {
        match self.kind {
            GroundKind::HalfWidth => 0,
            GroundKind::HalfHeight => self.n,
        }
    }

    /// Slot within the period and cycle of the `t`-th block (0 = ground).
    pub fn locate(&self, t: usize) -> (usize, usize) {
        let j = self.start() + t;
        (j % self.period(), j / self.period())
    }

    pub fn back_color(&self, col: usize) -> u8 {
        ((col + self.parity as usize) % 2) as u8
    }

    /// Colour of the ground block of column `col` on a half-width ground.
    pub fn ground_color(&self, col: usize) -> u8 {
        self.back_color(col)
    }

    /// Colour of the `t`-th block when it is not in a `0/1` cell.
    pub fn fixed_color(&self, t: usize) -> Option<u8> {
        let n = self.n;
        match self.locate(t).0 {
            0 | 1 => None,
            s if s < n => Some(s as u8),
            s if s <= n + 1 => Some(n as u8),
            s => Some((2 * n + 1 - s) as u8),
        }
    }

    /// Colour and drawn shape of the `t`-th block of column `col` when its
    /// `0/1` cell is complete.
    pub fn block(&self, col: usize, t: usize) -> (u8, BlockShape) {
        let n = self.n;
        let (s, _) = self.locate(t);
        match s {
            0 => (self.back_color(col), BlockShape::Back),
            1 => (1 - self.back_color(col), BlockShape::Front),
            s if s < n => (s as u8, BlockShape::Unit),
            s if s == n || s == n + 1 => (n as u8, BlockShape::HalfHeight),
            s => ((2 * n + 1 - s) as u8, BlockShape::Unit),
        }
    }

    /// Height in half units of a column holding `t` blocks above the ground.
    /// A `0/1` cell is one unit high as soon as either triangle is in.
    pub fn height(&self, _col: usize, t: usize) -> usize {
        (0..=t)
            .map(|k| match self.locate(k).0 {
                0 => 2,
                1 => 0,
                s if s == self.n || s == self.n + 1 => 1,
                _ => 2,
            })
            .sum()
    }

    /// Letter read off the top of a column of `t` added blocks: the vector
    /// crystal element the column sits at. `lone` is the colour of the top
    /// triangle when it stands alone in its cell.
    pub fn top_letter(&self, col: usize, t: usize, lone: Option<u8>) -> Letter {
        let n = self.n;
        let (s, _) = self.locate(t);
        match s {
            0 => match lone.unwrap_or_else(|| self.ground_color(col)) {
                0 => Letter::Plain(1),
                _ => Letter::Bar(1),
            },
            s if s < n => Letter::Plain(s as u8 + 1),
            s if s == n => Letter::Zero,
            s if s == n + 1 => Letter::Bar(n as u8),
            s => Letter::Bar((2 * n + 1 - s) as u8),
        }
    }
}

impl fmt::Display for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{} L{} parity={}", self.n, self.lambda(), self.parity)
    }
}
