//! Exhaustive column-by-column filling with pruning.

use crate::error::{Error, Result};
use crate::letters::{alphabet, Letter};
use crate::lie::LieType;

/// All columns of `height` letters accepted by `ok`, built top to bottom.
/// `step(prev, next)` prunes each adjacent pair as it is placed.
pub fn columns(
    ty: LieType,
    height: usize,
    step: impl Fn(Letter, Letter) -> bool,
    ok: impl Fn(&[Letter]) -> bool,
) -> Vec<Vec<Letter>> {
    let letters = alphabet(ty);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(height);
    fn go(
        letters: &[Letter],
        height: usize,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
        step: &dyn Fn(Letter, Letter) -> bool,
        ok: &dyn Fn(&[Letter]) -> bool,
    ) {
        if cur.len() == height {
            if ok(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &l in letters {
            if let Some(&prev) = cur.last() {
                if !step(prev, l) {
                    continue;
                }
            }
            cur.push(l);
            go(letters, height, cur, out, step, ok);
            cur.pop();
        }
    }
    go(&letters, height, &mut cur, &mut out, &step, &ok);
    out
}

/// Depth-first product over per-position candidate lists, keeping only
/// sequences whose adjacent pairs pass `pair`.
pub fn chains<T: Clone>(candidates: &[Vec<T>], pair: impl Fn(&T, &T) -> bool, cap: usize) -> Result<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut cur: Vec<T> = Vec::with_capacity(candidates.len());
    fn go<T: Clone>(
        candidates: &[Vec<T>],
        cur: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
        pair: &dyn Fn(&T, &T) -> bool,
        cap: usize,
    ) -> Result<()> {
        let k = cur.len();
        if k == candidates.len() {
            out.push(cur.clone());
            if out.len() > cap {
                return Err(Error::NodeCap { cap });
            }
            return Ok(());
        }
        for c in &candidates[k] {
            if let Some(prev) = cur.last() {
                if !pair(prev, c) {
                    continue;
                }
            }
            cur.push(c.clone());
            go(candidates, cur, out, pair, cap)?;
            cur.pop();
        }
        Ok(())
    }
    go(candidates, &mut cur, &mut out, &pair, cap)?;
    Ok(out)
}
