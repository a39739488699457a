//! Signature reduction and the tensor product rule.

use crate::crystal::{Crystal, Op};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Cancel adjacent `(+, -)` pairs until the sequence reads `-…-+…+`.
///
/// Returns the survivors together with their indices in `seq`.
pub fn reduce_signature(seq: &[Sign]) -> (Vec<Sign>, Vec<usize>) {
    let mut minus: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (k, &s) in seq.iter().enumerate() {
        match s {
            Sign::Plus => plus.push(k),
            Sign::Minus => {
                if plus.pop().is_none() {
                    minus.push(k);
                }
            }
        }
    }
    let reduced = minus.iter().map(|_| Sign::Minus).chain(plus.iter().map(|_| Sign::Plus)).collect();
    minus.extend(plus);
    (reduced, minus)
}

/// Per-symbol owner of a signature string built from `(eps, phi)` pairs.
pub fn signature_string(pairs: &[(usize, usize)]) -> (Vec<Sign>, Vec<usize>) {
    let mut seq = Vec::new();
    let mut owner = Vec::new();
    for (k, &(eps, phi)) in pairs.iter().enumerate() {
        for _ in 0..eps {
            seq.push(Sign::Minus);
            owner.push(k);
        }
        for _ in 0..phi {
            seq.push(Sign::Plus);
            owner.push(k);
        }
    }
    (seq, owner)
}

/// Index of the part selected by `op` after reducing the signature built
/// from `(eps, phi)` pairs: the rightmost surviving `-` for `e`, the leftmost
/// surviving `+` for `f`.
pub fn select_part(op: Op, pairs: &[(usize, usize)]) -> Option<usize> {
    let (seq, owner) = signature_string(pairs);
    let (reduced, idx) = reduce_signature(&seq);
    let pos = match op {
        Op::E => reduced.iter().rposition(|&s| s == Sign::Minus)?,
        Op::F => reduced.iter().position(|&s| s == Sign::Plus)?,
    };
    Some(owner[idx[pos]])
}

/// Reduced signature length split as `(minus count, plus count)`.
pub fn reduced_counts(pairs: &[(usize, usize)]) -> (usize, usize) {
    let (seq, _) = signature_string(pairs);
    let (reduced, _) = reduce_signature(&seq);
    let m = reduced.iter().filter(|&&s| s == Sign::Minus).count();
    (m, reduced.len() - m)
}

/// Apply `e_i` or `f_i` to `factors[0] ⊗ factors[1] ⊗ …`.
pub fn tensor_apply<C: Crystal>(c: &C, op: Op, i: usize, factors: &[C::Elem]) -> Option<Vec<C::Elem>> {
    let pairs: Vec<(usize, usize)> = factors.iter().map(|b| (c.eps(i, b), c.phi(i, b))).collect();
    let k = select_part(op, &pairs)?;
    let changed = c.apply(op, i, &factors[k])?;
    let mut out = factors.to_vec();
    out[k] = changed;
    Some(out)
}

/// `(eps_i, phi_i)` of a tensor product of factors.
pub fn tensor_eps_phi<C: Crystal>(c: &C, i: usize, factors: &[C::Elem]) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = factors.iter().map(|b| (c.eps(i, b), c.phi(i, b))).collect();
    reduced_counts(&pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_signature(&[M, P, P, M]), (vec![M, P], vec![0, 1]));
        assert_eq!(reduce_signature(&[]), (vec![], vec![]));
        assert_eq!(reduce_signature(&[P, P, P]), (vec![P, P, P], vec![0, 1, 2]));
        assert_eq!(reduce_signature(&[P, P, M, M]).0, vec![]);
    }

    #[test]
    fn select_part_ends() {
        assert_eq!(select_part(Op::F, &[(0, 1), (0, 1)]), Some(0));
        assert_eq!(select_part(Op::E, &[(0, 1), (0, 1)]), None);
        assert_eq!(select_part(Op::E, &[(1, 0), (1, 0)]), Some(1));
    }
}
