//! The crystal contract shared by every model.

use crate::lie::{LieType, Weight};
use std::fmt::Debug;
use std::hash::Hash;

/// Lowering or raising operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Op {
    E,
    F,
}

/// A crystal model: a set of elements with Kashiwara operators.
///
/// `eps` and `phi` default to string lengths computed by iterating `e` and `f`.
pub trait Crystal {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn lie_type(&self) -> LieType;

    fn colors(&self) -> Vec<usize> {
        self.lie_type().colors()
    }

    fn weight(&self, b: &Self::Elem) -> Weight;

    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn eps(&self, i: usize, b: &Self::Elem) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(next) = self.e(i, &cur) {
            cur = next;
            k += 1;
        }
        k
    }

    fn phi(&self, i: usize, b: &Self::Elem) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(next) = self.f(i, &cur) {
            cur = next;
            k += 1;
        }
        k
    }

    fn apply(&self, op: Op, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        match op {
            Op::E => self.e(i, b),
            Op::F => self.f(i, b),
        }
    }

    /// Canonical text key, used for hashing, ordering and export.
    fn key(&self, b: &Self::Elem) -> String;

    fn is_highest(&self, b: &Self::Elem) -> bool {
        self.colors().into_iter().all(|i| self.e(i, b).is_none())
    }

    /// Raise `b` to the highest element, recording the colors used.
    ///
    /// At every step the smallest color with a defined `e` is applied, or the
    /// largest when `largest_first` is set.
    fn raise_to_highest(&self, b: &Self::Elem, largest_first: bool) -> (Self::Elem, Vec<usize>) {
        let mut colors = self.colors();
        if largest_first {
            colors.reverse();
        }
        let mut cur = b.clone();
        let mut path = Vec::new();
        'outer: loop {
            for &i in &colors {
                if let Some(next) = self.e(i, &cur) {
                    cur = next;
                    path.push(i);
                    continue 'outer;
                }
            }
            return (cur, path);
        }
    }
}
