//! Tables reading a tableau entry off the top blocks of a wall column.

use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::lie::Family;
use crate::walls::{BlockShape, YoungWall};
use std::fmt;

/// Kind of block as the tables distinguish them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockKind {
    Unit,
    Half,
    /// Half-width triangle, either orientation.
    Triangle,
}

impl BlockKind {
    fn of(shape: BlockShape) -> BlockKind {
        match shape {
            BlockShape::Unit => BlockKind::Unit,
            BlockShape::HalfHeight => BlockKind::Half,
            BlockShape::Back | BlockShape::Front => BlockKind::Triangle,
        }
    }

    fn code(self) -> char {
        match self {
            BlockKind::Unit => 'u',
            BlockKind::Half => 'h',
            BlockKind::Triangle => 't',
        }
    }
}

/// `base + offset` with base a constant, `n` or the rule parameter `j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Expr {
    Const(i64),
    N(i64),
    J(i64),
}

impl Expr {
    fn parse(s: &str) -> Result<Expr> {
        let bad = || Error::Parse(format!("bad box table expression {s:?}"));
        let s = s.trim();
        let (head, off) = match s.find(['+', '-']) {
            Some(p) if p > 0 => {
                let off: i64 = s[p + 1..].parse().map_err(|_| bad())?;
                (&s[..p], if &s[p..p + 1] == "-" { -off } else { off })
            }
            _ => (s, 0),
        };
        match head {
            "n" => Ok(Expr::N(off)),
            "j" => Ok(Expr::J(off)),
            c => Ok(Expr::Const(c.parse::<i64>().map_err(|_| bad())? + off)),
        }
    }

    fn eval(self, n: usize, j: i64) -> i64 {
        match self {
            Expr::Const(c) => c,
            Expr::N(o) => n as i64 + o,
            Expr::J(o) => j + o,
        }
    }

    fn uses_j(self) -> bool {
        matches!(self, Expr::J(_))
    }
}

/// A rule specialised to one rank: colour pattern and entry.
type Instance = (Vec<(i64, BlockKind)>, Option<Letter>);

/// One line of a table: top blocks (bottom to top) and the entry they give.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxRule {
    pattern: Vec<(Expr, BlockKind)>,
    bar: bool,
    entry: Expr,
    range: Option<(Expr, Expr)>,
}

impl BoxRule {
    fn parse(line: &str) -> Result<BoxRule> {
        let bad = || Error::Parse(format!("bad box rule {line:?}"));
        let (lhs, rhs) = line.split_once("->").ok_or_else(bad)?;
        let (entry, cond) = match rhs.split_once(" if ") {
            Some((e, c)) => (e.trim(), Some(c.trim())),
            None => (rhs.trim(), None),
        };
        let pattern = lhs
            .split_whitespace()
            .map(|tok| {
                let (c, k) = tok.split_once(':').ok_or_else(bad)?;
                let kind = match k {
                    "u" => BlockKind::Unit,
                    "h" => BlockKind::Half,
                    "t" => BlockKind::Triangle,
                    _ => return Err(bad()),
                };
                Ok((Expr::parse(c)?, kind))
            })
            .collect::<Result<Vec<_>>>()?;
        if pattern.is_empty() {
            return Err(bad());
        }
        let (bar, entry) = match entry.strip_prefix("bar(").and_then(|e| e.strip_suffix(')')) {
            Some(e) => (true, Expr::parse(e)?),
            None => (false, Expr::parse(entry)?),
        };
        let range = match cond {
            None => None,
            Some(c) => {
                let parts: Vec<&str> = c.split("<=").map(str::trim).collect();
                if parts.len() != 3 || parts[1] != "j" {
                    return Err(bad());
                }
                Some((Expr::parse(parts[0])?, Expr::parse(parts[2])?))
            }
        };
        let uses_j = pattern.iter().any(|(e, _)| e.uses_j()) || entry.uses_j();
        if uses_j != range.is_some() {
            return Err(bad());
        }
        Ok(BoxRule { pattern, bar, entry, range })
    }

    /// Instances of the rule for rank `n`: concrete pattern and entry.
    fn instances(&self, n: usize) -> Vec<Instance> {
        let js: Vec<i64> = match self.range {
            None => vec![0],
            Some((lo, hi)) => (lo.eval(n, 0)..=hi.eval(n, 0)).collect(),
        };
        js.into_iter()
            .map(|j| {
                let pat = self.pattern.iter().map(|&(c, k)| (c.eval(n, j), k)).collect();
                let v = self.entry.eval(n, j);
                let letter = match (self.bar, v) {
                    (false, 0) => Some(Letter::Zero),
                    (_, v) if !(0..=255).contains(&v) => None,
                    (false, v) => Some(Letter::Plain(v as u8)),
                    (true, v) if v > 0 => Some(Letter::Bar(v as u8)),
                    _ => None,
                };
                (pat, letter)
            })
            .collect()
    }
}

impl fmt::Display for BoxRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |e: Expr| match e {
            Expr::Const(c) => c.to_string(),
            Expr::N(0) => "n".into(),
            Expr::J(0) => "j".into(),
            Expr::N(o) => format!("n{o:+}"),
            Expr::J(o) => format!("j{o:+}"),
        };
        let pat: Vec<String> = self.pattern.iter().map(|&(c, k)| format!("{}:{}", show(c), k.code())).collect();
        write!(f, "{} -> ", pat.join(" "))?;
        if self.bar {
            write!(f, "bar({})", show(self.entry))?;
        } else {
            write!(f, "{}", show(self.entry))?;
        }
        if let Some((lo, hi)) = self.range {
            write!(f, " if {}<=j<={}", show(lo), show(hi))?;
        }
        Ok(())
    }
}

/// The tables of one family: full columns and spin columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxTable {
    pub family: Family,
    pub full: Vec<BoxRule>,
    pub spin: Vec<BoxRule>,
}

/// Which table to consult.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoxStep {
    Full,
    Spin,
}

/// One block of a column with whether a cell starts at it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TopBlock {
    pub color: u8,
    pub kind: BlockKind,
    pub cell_start: bool,
}

impl BoxTable {
    pub fn parse(family: Family, text: &str) -> Result<BoxTable> {
        let mut table = BoxTable { family, full: Vec::new(), spin: Vec::new() };
        let mut section = None;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "[full]" => section = Some(BoxStep::Full),
                "[spin]" => section = Some(BoxStep::Spin),
                _ => {
                    let rule = BoxRule::parse(line)?;
                    match section {
                        Some(BoxStep::Full) => table.full.push(rule),
                        Some(BoxStep::Spin) => table.spin.push(rule),
                        None => return Err(Error::Parse(format!("box rule outside a section: {line:?}"))),
                    }
                }
            }
        }
        Ok(table)
    }

    /// The shipped table of `family`.
    pub fn of(family: Family) -> BoxTable {
        let text = match family {
            Family::A => include_str!("../../data/boxes/a.txt"),
            Family::B => include_str!("../../data/boxes/b.txt"),
            Family::C => include_str!("../../data/boxes/c.txt"),
            Family::D => include_str!("../../data/boxes/d.txt"),
        };
        BoxTable::parse(family, text).expect("shipped box table parses")
    }

    pub fn rules(&self, step: BoxStep) -> &[BoxRule] {
        match step {
            BoxStep::Full => &self.full,
            BoxStep::Spin => &self.spin,
        }
    }

    /// Entry for a column whose blocks are `blocks` (bottom to top). Fails
    /// unless exactly one entry matches.
    pub fn lookup(&self, n: usize, step: BoxStep, blocks: &[TopBlock]) -> Result<Letter> {
        let mut found: Option<Letter> = None;
        for rule in self.rules(step) {
            for (pat, letter) in rule.instances(n) {
                let Some(letter) = letter else { continue };
                if pat.len() > blocks.len() {
                    continue;
                }
                let top = &blocks[blocks.len() - pat.len()..];
                let hit = top[0].cell_start
                    && top.iter().zip(&pat).all(|(b, &(c, k))| b.kind == k && i64::from(b.color) == c);
                if hit {
                    match found {
                        Some(l) if l != letter => {
                            return Err(Error::UnmatchedTop(format!("{} is ambiguous", show_blocks(blocks))));
                        }
                        _ => found = Some(letter),
                    }
                }
            }
        }
        found.ok_or_else(|| Error::UnmatchedTop(show_blocks(blocks)))
    }
}

/// Blocks of column `k` of `y` in the form the tables read.
pub fn top_blocks(y: &YoungWall, k: usize) -> Vec<TopBlock> {
    let n = y.n();
    y.column_blocks(k)
        .into_iter()
        .enumerate()
        .map(|(t, (color, shape))| {
            let slot = y.ground.locate(t).0;
            TopBlock { color, kind: BlockKind::of(shape), cell_start: slot != 1 && slot != n + 1 }
        })
        .collect()
}

fn show_blocks(blocks: &[TopBlock]) -> String {
    let tail = &blocks[blocks.len().saturating_sub(3)..];
    let parts: Vec<String> = tail.iter().map(|b| format!("{}:{}", b.color, b.kind.code())).collect();
    format!("[{}]", parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walls::decompose::letter_at;
    use crate::walls::{Ground, WallColumn};

    #[test]
    fn shipped_tables_parse_and_print_back() {
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            let t = BoxTable::of(fam);
            assert!(!t.full.is_empty());
            for r in t.full.iter().chain(&t.spin) {
                assert_eq!(BoxRule::parse(&r.to_string()).unwrap(), *r);
            }
        }
        assert!(BoxTable::of(Family::C).spin.is_empty());
    }

    #[test]
    fn rule_needs_a_range_exactly_when_it_uses_j() {
        assert!(BoxRule::parse("j:u -> j").is_err());
        assert!(BoxRule::parse("1:u -> 2 if 1<=j<=n").is_err());
        assert!(BoxRule::parse("1:x -> 2").is_err());
    }

    #[test]
    fn type_b_table_reads_the_vector_chain() {
        let table = BoxTable::of(Family::B);
        for n in 2..=6 {
            let g = Ground::half_width(n, 1);
            for p in 0..=2 * n {
                let lone = (p % (2 * n) == 0).then_some(u8::from(p > 0));
                let y = YoungWall::new(g, vec![WallColumn { added: p, lone }]);
                let got = table.lookup(n, BoxStep::Full, &top_blocks(&y, 0)).unwrap();
                assert_eq!(got, letter_at(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn type_b_spin_table_reads_barred_letters() {
        let table = BoxTable::of(Family::B);
        for n in 2..=6 {
            let g = Ground::half_height(n, 1);
            assert!(table.lookup(n, BoxStep::Spin, &top_blocks(&YoungWall::ground_state(g), 0)).is_err());
            for added in 1..=n {
                let lone = (added == n).then_some(1);
                let y = YoungWall::new(g, vec![WallColumn { added, lone }]);
                let got = table.lookup(n, BoxStep::Spin, &top_blocks(&y, 0)).unwrap();
                assert_eq!(got, Letter::Bar((n + 1 - added) as u8), "n={n} added={added}");
            }
        }
    }

    #[test]
    fn type_a_reads_the_top_colour() {
        let t = BoxTable::of(Family::A);
        let blocks = [TopBlock { color: 2, kind: BlockKind::Unit, cell_start: true }];
        assert_eq!(t.lookup(3, BoxStep::Full, &blocks).unwrap(), Letter::Plain(3));
    }
}
