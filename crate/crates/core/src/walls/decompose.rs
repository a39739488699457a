//! Cutting a wall into the pieces of its parts and the containment
//! conditions between them.
//!
//! A piece is a set of cells `(a, P)`: column `a` (1-based, from the right)
//! of a part and position `P` in that part's frame (see [`WallLayout`]).
//! The `n`-row of a frame is the pair of half blocks at `P = n, n + 1`;
//! reflecting along it sends `P` to `2n + 1 − P`.

use super::layout::WallLayout;
use super::wall::YoungWall;
use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::lie::Weight;
use std::collections::BTreeSet;
use std::ops::Range;

pub type Cells = BTreeSet<(usize, usize)>;

/// A column of one part topped by `a` and a column of the next part topped
/// by `ā`, the first further left within its part (`p > q`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Trigger {
    /// Index of the left part of the pair.
    pub k: usize,
    pub a: usize,
    pub p: usize,
    pub q: usize,
}

/// The four triangle pieces attached to a trigger.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrianglePieces {
    pub left_plus: Cells,
    pub left_minus: Cells,
    pub right_plus: Cells,
    pub right_minus: Cells,
}

#[derive(Clone, Debug)]
pub struct WallDecomposition {
    pub layout: WallLayout,
    /// Wall columns of each part, spin part last.
    pub parts: Vec<Range<usize>>,
    /// Top position of every column of every part.
    pub tops: Vec<Vec<usize>>,
    /// Blocks above the highest wall.
    pub interior: Vec<Cells>,
    /// Blocks above resp. below the `n`-row, per `ω` part.
    pub plus: Vec<Cells>,
    pub minus: Vec<Cells>,
    /// For each pair of neighbouring parts `(k, k + 1)`: the blocks of part
    /// `k` above the level of the highest wall of part `k + 1`, and the
    /// blocks of part `k + 1` in its first `i_k` columns.
    pub upper: Vec<Cells>,
    pub lower: Vec<Cells>,
    /// For each pair: the staircase of part `k` just under the upper `n`-row
    /// and the staircase of part `k + 1` above it.
    pub pair_minus: Vec<Cells>,
    pub pair_plus: Vec<Cells>,
    pub triggers: Vec<Trigger>,
}

impl WallDecomposition {
    pub fn new(y: &YoungWall, layout: &WallLayout) -> Result<WallDecomposition> {
        let n = layout.n;
        if y.ground != layout.ground {
            return Err(Error::Decomposition(format!("wall stands on {}, layout needs {}", y.ground, layout.ground)));
        }
        if y.cols.len() > layout.width() {
            return Err(Error::Decomposition(format!(
                "wall has {} columns, the weight spans {}",
                y.cols.len(),
                layout.width()
            )));
        }
        let t = layout.parts();
        let mut tops = Vec::with_capacity(t);
        let mut interior = Vec::with_capacity(t);
        for k in 0..t {
            let mut col_tops = Vec::new();
            let mut cells = Cells::new();
            for a in 1..=layout.part_width(k) {
                let lo = layout.highest_top(k, a);
                let top = layout
                    .top(y, k, a)
                    .filter(|&p| p >= lo)
                    .ok_or_else(|| Error::Decomposition(format!("column {a} of part {k} is below the highest wall")))?;
                col_tops.push(top);
                cells.extend((lo + 1..=top).map(|p| (a, p)));
            }
            tops.push(col_tops);
            interior.push(cells);
        }
        let omegas = layout.omegas.len();
        let plus = (0..omegas).map(|k| select(&interior[k], |_, p| p >= n + 2)).collect();
        let minus = (0..omegas).map(|k| select(&interior[k], |_, p| p < n)).collect();

        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut pair_minus = Vec::new();
        let mut pair_plus = Vec::new();
        let mut triggers = Vec::new();
        for k in 0..t.saturating_sub(1) {
            let ik = layout.part_width(k);
            let next_level = |a: usize| layout.highest_top(k + 1, a);
            upper.push(select(&interior[k], |a, p| p > next_level(a) && p <= 2 * n + 1 - a));
            lower.push(select(&interior[k + 1], |a, p| a <= ik && p <= 2 * n + 1 - a));
            pair_minus.push(select(&interior[k], |a, p| p + a > n && p <= n));
            pair_plus.push(select(&interior[k + 1], |a, p| p > n && p + a <= 2 * n + 1));
            for p in 1..=ik {
                for q in 1..p.min(layout.part_width(k + 1) + 1) {
                    let (x, z) = (letter_at(n, tops[k][p - 1]), letter_at(n, tops[k + 1][q - 1]));
                    if let (Letter::Plain(a), Letter::Bar(b)) = (x, z) {
                        let a = a as usize;
                        if a == b as usize && (2..n).contains(&a) {
                            triggers.push(Trigger { k, a, p, q });
                        }
                    }
                }
            }
        }
        Ok(WallDecomposition {
            layout: layout.clone(),
            parts: (0..t).map(|k| layout.columns(k)).collect(),
            tops,
            interior,
            plus,
            minus,
            upper,
            lower,
            pair_minus,
            pair_plus,
            triggers,
        })
    }

    /// Top letter of column `a` of part `k`.
    pub fn letter(&self, k: usize, a: usize) -> Letter {
        letter_at(self.layout.n, self.tops[k][a - 1])
    }

    /// The triangle pieces of a trigger in part `k` (`k = trig.k` or
    /// `trig.k + 1`). `L⁺` has its legs along column `q` and along the row of
    /// the `(a + p − q − 1)`-block above the `n`-row, reaching up to the
    /// `a`-block and left to column `p − 1`. `L⁻` is `L⁺` turned over below
    /// the `n`-row, with its vertical leg in column `p`.
    fn triangle(&self, k: usize, trig: &Trigger) -> (Cells, Cells) {
        let n = self.layout.n;
        let Trigger { a, p, q, .. } = *trig;
        let width = self.layout.part_width(k);
        let top = |c: usize| self.tops[k][c - 1];
        let mut plus = Cells::new();
        let mut minus = Cells::new();
        for d in 0..p - q {
            // Colours `b` from `a + d` to `a + p − q − 1`.
            for b in (a + d..a + p - q).filter(|&b| b <= n) {
                let c = q + d;
                if c <= width && 2 * n + 1 - b <= top(c) {
                    plus.insert((c, 2 * n + 1 - b));
                }
                let c = p - d;
                if c <= width && b <= top(c) {
                    minus.insert((c, b));
                }
            }
        }
        (plus, minus)
    }

    pub fn triangle_pieces(&self, trig: &Trigger) -> TrianglePieces {
        let (left_plus, left_minus) = self.triangle(trig.k, trig);
        let (right_plus, right_minus) = if self.layout.is_spin_part(trig.k + 1) {
            (Cells::new(), Cells::new())
        } else {
            self.triangle(trig.k + 1, trig)
        };
        TrianglePieces { left_plus, left_minus, right_plus, right_minus }
    }

    /// `|Y⁻|` of part `k`: the piece below the `n`-row turned over and
    /// pushed right.
    pub fn reflected_minus(&self, k: usize) -> Cells {
        reflect_shift(&self.minus[k], 2 * self.layout.n + 1)
    }

    /// Every piece above the `n`-row of part `k` lies in the reflection of
    /// the piece below it.
    pub fn check_y1(&self) -> bool {
        (0..self.plus.len()).all(|k| self.plus[k].is_subset(&self.reflected_minus(k)))
    }

    /// Neighbouring parts are nested.
    pub fn check_y2(&self) -> bool {
        self.upper.iter().zip(&self.lower).all(|(u, l)| u.is_subset(l))
    }

    /// The staircase under the upper `n`-row of each part, reflected, lies in
    /// the staircase above it in the next part.
    pub fn check_y3(&self) -> bool {
        let n = self.layout.n;
        self.pair_minus.iter().zip(&self.pair_plus).all(|(m, p)| reflect_shift(m, 2 * n + 1).is_subset(p))
    }

    /// Triangle containment for every trigger.
    pub fn check_y4(&self) -> bool {
        let n = self.layout.n;
        self.triggers.iter().all(|trig| {
            let pieces = self.triangle_pieces(trig);
            pieces.left_plus.is_subset(&reflect_shift_to(&pieces.left_minus, 2 * n + 1, trig.q))
                && pieces.right_plus.is_subset(&reflect_shift_to(&pieces.right_minus, 2 * n + 1, trig.q))
        })
    }

    pub fn check_all(&self) -> bool {
        self.check_y1() && self.check_y2() && self.check_y3() && self.check_y4()
    }
}

/// Decompose `y` along the summands of `lam`.
pub fn decompose(y: &YoungWall, lam: &Weight) -> Result<WallDecomposition> {
    WallDecomposition::new(y, &WallLayout::over(y.ground, lam)?)
}

/// Letter at position `P` of a frame.
pub fn letter_at(n: usize, pos: usize) -> Letter {
    let p = if pos > 2 * n { pos - 2 * n } else { pos } + 1;
    match p {
        p if p <= n => Letter::Plain(p as u8),
        p if p == n + 1 => Letter::Zero,
        p => Letter::Bar((2 * n + 2 - p) as u8),
    }
}

fn select(cells: &Cells, keep: impl Fn(usize, usize) -> bool) -> Cells {
    cells.iter().copied().filter(|&(a, p)| keep(a, p)).collect()
}

/// Reflect along `P ↦ axis − P`, then push every row to the right.
pub fn reflect_shift(cells: &Cells, axis: usize) -> Cells {
    reflect_shift_to(cells, axis, 1)
}

/// As [`reflect_shift`], with column `first` as the right edge.
pub fn reflect_shift_to(cells: &Cells, axis: usize, first: usize) -> Cells {
    let mut rows = std::collections::BTreeMap::<usize, usize>::new();
    for &(_, p) in cells {
        if let Some(r) = axis.checked_sub(p) {
            *rows.entry(r).or_default() += 1;
        }
    }
    rows.into_iter().flat_map(|(r, c)| (first..first + c).map(move |a| (a, r))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;

    fn cells(v: &[(usize, usize)]) -> Cells {
        v.iter().copied().collect()
    }

    fn three_part_wall() -> (YoungWall, WallDecomposition) {
        let y = YoungWall::parse(include_str!("../../fixtures/walls/b4_w3_w4_spin.wall")).unwrap();
        let lam = LieType::b(4).weight_from_fundamental(&[0, 0, 1, 3]).unwrap();
        let d = decompose(&y, &lam).unwrap();
        (y, d)
    }

    #[test]
    fn parts_split_the_columns() {
        let (_, d) = three_part_wall();
        assert_eq!(d.parts, vec![0..3, 3..7, 7..11]);
        let letters: Vec<String> = (1..=3).map(|a| d.letter(0, a).to_string()).collect();
        assert_eq!(letters, ["-4", "4", "2"]);
    }

    #[test]
    fn pieces_above_and_below_the_n_row() {
        let (_, d) = three_part_wall();
        assert!(d.plus[0].is_empty());
        assert_eq!(d.minus[0], cells(&[(1, 3), (2, 2), (2, 3), (3, 1)]));
        assert_eq!(d.plus[1], cells(&[(1, 6), (1, 7)]));
        assert_eq!(d.minus[1], cells(&[(2, 3), (3, 2), (3, 3), (4, 1), (4, 2)]));
        assert!(d.plus[1].is_subset(&d.reflected_minus(1)));
        assert!(d.check_y1());
    }

    #[test]
    fn nested_pieces_of_neighbouring_parts() {
        let (_, d) = three_part_wall();
        assert_eq!(d.upper[0], cells(&[(1, 4), (1, 5), (2, 3)]));
        assert_eq!(
            d.lower[0],
            cells(&[(1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)])
        );
        assert_eq!(d.upper[1], cells(&[(1, 5), (1, 6), (1, 7), (2, 5)]));
        let spin = cells(&[(1, 5), (1, 6), (1, 7), (1, 8), (2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (4, 5)]);
        assert_eq!(d.lower[1], spin);
        assert!(d.check_y2());
        assert_eq!(d.pair_minus[0], cells(&[(1, 4), (2, 3)]));
        assert_eq!(d.pair_plus[0], cells(&[(1, 5), (1, 6), (1, 7), (2, 5)]));
        assert_eq!(d.pair_minus[1], cells(&[(1, 4), (2, 3), (2, 4), (3, 2), (3, 3), (4, 1), (4, 2)]));
        assert_eq!(d.pair_plus[1], spin);
        assert!(d.check_y3());
    }

    #[test]
    fn triangle_pieces_of_the_first_trigger() {
        let (_, d) = three_part_wall();
        let trig = d.triggers[0];
        assert_eq!(trig, Trigger { k: 0, a: 2, p: 3, q: 1 });
        let t = d.triangle_pieces(&trig);
        assert!(t.left_plus.is_empty());
        assert_eq!(t.left_minus, cells(&[(2, 3)]));
        assert_eq!(t.right_plus, cells(&[(1, 6), (1, 7)]));
        assert_eq!(t.right_minus, cells(&[(2, 3), (3, 2), (3, 3)]));
        assert!(d.check_y4());
    }

    #[test]
    fn bar_too_low_in_one_column_breaks_the_reflection() {
        // `1` two rows above `1̄` in a column of height 2 needs one row between them.
        let ty = LieType::b(3);
        let layout = WallLayout::new(3, &ty.fundamental_weight(2)).unwrap();
        let y = YoungWall::new(
            layout.ground,
            vec![layout.column_at(0, 6).unwrap(), layout.column_at(0, 0).unwrap()],
        );
        assert!(y.is_proper());
        assert_eq!(y.top_letter(0), Letter::Bar(1));
        assert_eq!(y.top_letter(1), Letter::Plain(1));
        let d = WallDecomposition::new(&y, &layout).unwrap();
        assert!(!d.check_y1());
    }

    #[test]
    fn reflection_pushes_rows_right() {
        let got = reflect_shift(&cells(&[(3, 1), (4, 1), (2, 2)]), 9);
        assert_eq!(got, cells(&[(1, 8), (2, 8), (1, 7)]));
        assert_eq!(reflect_shift_to(&cells(&[(5, 2)]), 9, 3), cells(&[(3, 7)]));
    }
}
