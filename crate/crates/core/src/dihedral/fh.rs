use crate::commring::{compute_dsh, monomial_basis, CommPoly, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{span, SparseMatrix, SparseVec, Subspace};
use crate::ncalg::{word_basis, NcPoly, Word};
use crate::rational::Rational;

use super::index::{w_basis, Composition, VIndex, WVector};
use super::phi::phi_index;

fn depth_error(m: usize, w: &Word) -> Error {
    Error::InvalidBidegree {
        m,
        k: w.weight(),
        reason: "f_m needs words of depth m",
    }
}

/// `f_m(x^{n_1} z ... x^{n_m} z x^a) = δ_{a,0} x_1^{n_1} ... x_m^{n_m}`.
pub fn f_word(m: usize, w: &Word) -> Result<Option<Monomial>> {
    if w.depth() != m {
        return Err(depth_error(m, w));
    }
    let blocks = w.x_blocks();
    if blocks[m] != 0 {
        return Ok(None);
    }
    Ok(Some(Monomial(blocks[..m].iter().map(|&e| e as u32).collect())))
}

pub fn f_map(m: usize, p: &NcPoly) -> Result<CommPoly> {
    let mut terms = Vec::new();
    for (w, c) in p.iter() {
        if let Some(mono) = f_word(m, w)? {
            terms.push((mono, c.clone()));
        }
    }
    CommPoly::from_terms(m, terms)
}

/// The matrix of `f_m` from words of bidegree `(m, k)` to monomials of
/// degree `k - m`.
pub fn f_matrix(m: usize, k: usize) -> Result<SparseMatrix> {
    let words = word_basis(m, k);
    let monos = monomial_basis(m, k - m);
    let mut trip = Vec::new();
    for (j, w) in words.elements().iter().enumerate() {
        if let Some(mono) = f_word(m, w)? {
            let i = monos.index_of(&mono).expect("degree k - m");
            trip.push((i, j, Rational::one()));
        }
    }
    SparseMatrix::from_triplets(monos.len(), words.len(), &trip)
}

/// The composition `n` with `h_m` pairing `I(n)` against the monomial
/// `x_1^{n_m - 1} ... x_m^{n_1 - 1}`.
pub fn h_index(mono: &Monomial) -> Composition {
    Composition::new(mono.exponents().iter().rev().map(|&e| e as usize + 1).collect()).expect("parts are positive")
}

/// `h_m(φ) = Σ φ(x_1^{n_m-1} ... x_m^{n_1-1}) I(n_1, ..., n_m)` for a form `φ`
/// on degree-`d` polynomials, given by its values on the monomial basis.
pub fn h_map(m: usize, d: usize, form: &SparseVec) -> Result<WVector> {
    let monos = monomial_basis(m, d);
    if form.max_index().is_some_and(|i| i >= monos.len()) {
        return Err(Error::DimensionMismatch {
            expected: monos.len(),
            found: form.max_index().unwrap_or(0) + 1,
        });
    }
    Ok(WVector::from_terms(form.iter().map(|(i, c)| (h_index(monos.get(i)), c.clone()))))
}

/// `h_m` applied to the forms vanishing on `Dsh_m(k - m)`, in `W_{m,k}`
/// coordinates.
pub fn h_of_dsh_annihilator(m: usize, k: usize) -> Result<Subspace> {
    let d = k.checked_sub(m).ok_or(Error::InvalidBidegree {
        m,
        k,
        reason: "weight below depth",
    })?;
    let dsh = compute_dsh(m, d)?;
    let wb = w_basis(m, k);
    let mut rows = Vec::new();
    for f in dsh.space.annihilator().basis() {
        rows.push(wb.coords(&h_map(m, d, f)?).expect("h_m lands in W_{m,k}"));
    }
    span(rows, wb.len())
}

/// For each monomial `x^e` of degree `k - m`, the row `w ↦ ⟨φ(h_m(φ_e)), w⟩`
/// over the words of bidegree `(m, k)`, where `φ_e` is the dual-basis form.
pub fn beta_i_h_matrix(m: usize, k: usize) -> SparseMatrix {
    let monos = monomial_basis(m, k - m);
    let words = word_basis(m, k);
    let mut trip = Vec::new();
    for (i, mono) in monos.elements().iter().enumerate() {
        let img: NcPoly = phi_index(&VIndex::I(h_index(mono)));
        for (w, c) in img.iter() {
            trip.push((i, words.index_of(w).expect("φ is bigraded"), c.clone()));
        }
    }
    SparseMatrix::from_triplets(monos.len(), words.len(), &trip).expect("indices in range")
}
