//! Membership in `C ⊗ A + A ⊗ C` for a graded subspace `C ⊆ A`, decided one
//! block pair at a time: with `P` the annihilating forms of `C` in each
//! block, `t` lies in the sum iff `(P ⊗ P) t = 0`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dihedral::tensor_blocks;
use crate::linalg::Subspace;
use crate::lincomb::{Basis, Bidegree, BlockBasis, Tensor};
use crate::rational::Rational;

/// The forms vanishing on a subspace of one block, stored column-wise: for
/// each basis element, the values of all forms on it.
pub struct BlockForms<K: Ord> {
    pub basis: BlockBasis<K>,
    columns: Vec<Vec<(usize, Rational)>>,
    num_forms: usize,
}

impl<K: Ord + Clone> BlockForms<K> {
    pub fn new(basis: BlockBasis<K>, sub: &Subspace) -> Self {
        assert_eq!(basis.len(), sub.ambient_dim(), "subspace lives in this block");
        let ann = sub.annihilator();
        let mut columns = vec![Vec::new(); basis.len()];
        for (r, f) in ann.basis().iter().enumerate() {
            for (i, c) in f.iter() {
                columns[i].push((r, c.clone()));
            }
        }
        Self {
            basis,
            columns,
            num_forms: ann.dim(),
        }
    }

    fn column(&self, k: &K) -> &[(usize, Rational)] {
        let i = self.basis.index_of(k).expect("element belongs to the block");
        &self.columns[i]
    }
}

/// Checks `t ∈ C ⊗ A + A ⊗ C`, returning the first offending block of `t`.
pub fn coideal_witness<K, L, F, G>(t: &Tensor<K, L>, mut left: F, mut right: G) -> Option<Tensor<K, L>>
where
    K: Basis,
    L: Basis,
    F: FnMut(Bidegree) -> Arc<BlockForms<K>>,
    G: FnMut(Bidegree) -> Arc<BlockForms<L>>,
{
    for ((bl, br), block) in tensor_blocks(t) {
        let (fl, fr) = (left(bl), right(br));
        if fl.num_forms == 0 || fr.num_forms == 0 {
            continue;
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for ((a, b), c) in block.iter() {
            for (r, x) in fl.column(a) {
                let cx = c * x;
                for (s, y) in fr.column(b) {
                    *acc.entry((*r, *s)).or_insert_with(Rational::zero) += &cx * y;
                }
            }
        }
        if acc.values().any(|v| !v.is_zero()) {
            return Some(block);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{span, SparseVec};
    use crate::lincomb::LinComb;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct E(usize);

    impl Basis for E {
        fn bidegree(&self) -> Bidegree {
            (1, 1)
        }
    }

    #[test]
    fn sum_membership_in_two_dimensions() {
        // A = span(e0, e1), C = span(e0): C⊗A + A⊗C misses only e1⊗e1.
        let basis = BlockBasis::new(vec![E(0), E(1)]);
        let c = span([SparseVec::unit(0)], 2).unwrap();
        let forms = Arc::new(BlockForms::new(basis, &c));
        let f = |_| forms.clone();
        let inside = Tensor::pure(&LinComb::basis(E(0)), &(&LinComb::basis(E(0)) + &LinComb::basis(E(1))));
        assert!(coideal_witness(&inside, f, f).is_none());
        let outside = Tensor::pure(&LinComb::basis(E(1)), &LinComb::basis(E(1)));
        assert!(coideal_witness(&(&inside + &outside), f, f).is_some());
    }
}
