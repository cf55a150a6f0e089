use std::collections::HashMap;

use crate::linalg::{span, SparseMatrix, Subspace};
use crate::lincomb::Tensor;
use crate::ncalg::{co_ihara, shuffle, word_basis, NcPoly, Word};
use crate::rational::Rational;

use super::index::{u_indices, v_basis, Composition, UIndex, VIndex, VVector};

/// An element of `V ⊗ V`.
pub type VTensor = Tensor<VIndex>;

/// `x^{n_m-1} z ... x^{n_1-1} z`.
fn reversed_word(parts: &[usize]) -> Word {
    let mut w = Word::EMPTY;
    for &n in parts.iter().rev() {
        w = w.concat(&Word::x_power(n - 1)).concat(&Word::Z);
    }
    w
}

fn x_poly() -> NcPoly {
    NcPoly::basis(Word::X)
}

pub fn phi_index(v: &VIndex) -> NcPoly {
    match v {
        VIndex::I(c) => NcPoly::basis(reversed_word(c.parts())),
        VIndex::U(UIndex::Zero) => NcPoly::basis(Word::EMPTY),
        VIndex::U(UIndex::Parts(p)) => {
            let (n0, rest) = p.split_first().expect("nonempty index");
            let base = reversed_word(rest).concat(&Word::x_power(n0 - 1));
            shuffle(&NcPoly::basis(base), &x_poly())
        }
    }
}

/// `φ : V → K<x,z>`.
pub fn phi(v: &VVector) -> NcPoly {
    v.map_linear(phi_index)
}

/// `φ^{-1}` on words, by recursion on the number of trailing `x`.
#[derive(Default)]
pub struct PhiInverse {
    memo: HashMap<Word, VVector>,
}

impl PhiInverse {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(&mut self, w: &Word) -> VVector {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let v = self.compute(w);
        self.memo.insert(*w, v.clone());
        v
    }

    fn compute(&mut self, w: &Word) -> VVector {
        if w.is_empty() {
            return VVector::basis(VIndex::U(UIndex::Zero));
        }
        let blocks = w.x_blocks();
        let t = *blocks.last().expect("at least one block");
        let head: Vec<usize> = blocks[..blocks.len() - 1].iter().rev().map(|&e| e + 1).collect();
        if t == 0 {
            let c = Composition::new(head).expect("parts are positive");
            return VVector::basis(VIndex::I(c));
        }
        let tr = Rational::from_int(t as i64).recip();
        if head.is_empty() {
            // φ(I'(t)) = t x^t.
            return VVector::term(VIndex::U(UIndex::Parts(vec![t])), tr);
        }
        // φ(I'(t, n)) = t · v z x^t + (v ⧢ x) z x^{t-1} with v z = φ(I(n)).
        let mut parts = vec![t];
        parts.extend(&head);
        let mut out = VVector::term(VIndex::U(UIndex::Parts(parts)), tr.clone());
        let v = w.prefix(w.len() - t - 1);
        let tail = Word::Z.concat(&Word::x_power(t - 1));
        let correction = shuffle(&NcPoly::basis(v), &x_poly());
        for (u, c) in correction.iter() {
            let sub = self.word(&u.concat(&tail));
            out.add_scaled(&-(&tr * c), &sub);
        }
        out
    }

    pub fn apply(&mut self, p: &NcPoly) -> VVector {
        let mut out = VVector::zero();
        for (w, c) in p.iter() {
            let v = self.word(w);
            out.add_scaled(c, &v);
        }
        out
    }

    pub fn apply_tensor(&mut self, t: &Tensor<Word>) -> VTensor {
        let mut out = VTensor::zero();
        for ((a, b), c) in t.iter() {
            let (va, vb) = (self.word(a), self.word(b));
            out.add_scaled(c, &VTensor::pure(&va, &vb));
        }
        out
    }
}

/// `φ^{-1} : K<x,z> → V`.
pub fn phi_inverse(p: &NcPoly) -> VVector {
    PhiInverse::new().apply(p)
}

/// The matrix of `φ` on the bidegree-`(m, k)` block, from `V` to words.
pub fn phi_matrix(m: usize, k: usize) -> SparseMatrix {
    let vb = v_basis(m, k);
    let wb = word_basis(m, k);
    let mut trip = Vec::new();
    for (j, v) in vb.elements().iter().enumerate() {
        let img = wb.coords(&phi_index(v)).expect("φ is bigraded");
        trip.extend(img.iter().map(|(i, c)| (i, j, c.clone())));
    }
    SparseMatrix::from_triplets(wb.len(), vb.len(), &trip).expect("indices in range")
}

/// `φ(U_{m,k})` in word coordinates.
pub fn phi_u(m: usize, k: usize) -> Subspace {
    let wb = word_basis(m, k);
    let rows = u_indices(m, k)
        .into_iter()
        .map(|u| wb.coords(&phi_index(&VIndex::U(u))).expect("φ is bigraded"));
    span(rows, wb.len()).expect("indices in range")
}

/// The pullback `φ^* co_ihara = (φ^{-1} ⊗ φ^{-1}) ∘ co_ihara ∘ φ`.
pub fn pullback_co_ihara(inv: &mut PhiInverse, v: &VVector) -> VTensor {
    inv.apply_tensor(&co_ihara(&phi(v)))
}
