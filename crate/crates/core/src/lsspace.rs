//! The bigraded components `ls_m^k` of the linearized double shuffle Lie
//! algebra, computed as solution spaces of the two primitivity conditions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, span, SparseMatrix, SparseVec, Subspace};
use crate::lincomb::BlockBasis;
use crate::ncalg::{
    ihara_bracket, is_lyndon, is_lyndon_word, poly_from_json, poly_to_json, section_i, shuffle_words, word_basis,
    words_of_bidegree, y_shuffle_words, ywords_of_bidegree, NcPoly, NcTerm, Word,
};

/// A canonical basis of `ls_m^k` over the words of bidegree `(m, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsBasis {
    pub m: usize,
    pub k: usize,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsBasisJson {
    pub m: usize,
    pub k: usize,
    pub dim: usize,
    pub basis: Vec<Vec<NcTerm>>,
}

impl LsBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn words(&self) -> BlockBasis<Word> {
        word_basis(self.m, self.k)
    }

    pub fn elements(&self) -> Vec<NcPoly> {
        let b = self.words();
        self.space.basis().iter().map(|v| b.element_of(v)).collect()
    }

    /// Whether `p` lies in this component; `p` must be homogeneous of the
    /// same bidegree (or zero).
    pub fn contains(&self, p: &NcPoly) -> Result<bool> {
        let coords = self.words().coords(p).ok_or(Error::InvalidBidegree {
            m: self.m,
            k: self.k,
            reason: "element is not of this bidegree",
        })?;
        self.space.contains(&coords)
    }

    pub fn to_json(&self) -> LsBasisJson {
        LsBasisJson {
            m: self.m,
            k: self.k,
            dim: self.dim(),
            basis: self.elements().iter().map(poly_to_json).collect(),
        }
    }

    pub fn from_json(j: &LsBasisJson) -> Result<LsBasis> {
        let b = word_basis(j.m, j.k);
        let vecs = j
            .basis
            .iter()
            .map(|terms| {
                b.coords(&poly_from_json(terms))
                    .ok_or_else(|| Error::Parse("basis element of the wrong bidegree".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let space = span(vecs, b.len())?;
        if space.dim() != j.dim {
            return Err(Error::Parse("dimension does not match basis".into()));
        }
        Ok(LsBasis { m: j.m, k: j.k, space })
    }
}

pub(crate) fn check_bidegree(m: usize, k: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidBidegree {
            m,
            k,
            reason: "depth must be at least 1",
        });
    }
    if k < m {
        return Err(Error::InvalidBidegree {
            m,
            k,
            reason: "weight must be at least the depth",
        });
    }
    if k > crate::ncalg::MAX_WORD_LEN {
        return Err(Error::InvalidBidegree {
            m,
            k,
            reason: "weight exceeds the supported word length",
        });
    }
    Ok(())
}

/// Coordinates of `u ⧢ v` for nonempty `u` Lyndon and nonempty `v` with
/// bidegrees adding up to `(m, k)`.
///
/// The shuffle algebra is free commutative on the Lyndon words, so these
/// span the bidegree-`(m, k)` slice of `K<x,z>_+ ⧢ K<x,z>_+`.
fn lyndon_shuffle_rows(m: usize, k: usize, basis: &BlockBasis<Word>) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for k1 in 1..k {
        for m1 in 0..=m.min(k1) {
            let m2 = m - m1;
            if m2 > k - k1 {
                continue;
            }
            let vs = words_of_bidegree(m2, k - k1);
            for u in words_of_bidegree(m1, k1).into_iter().filter(is_lyndon_word) {
                for v in &vs {
                    rows.push(basis.coords(&shuffle_words(&u, v)).expect("shuffle is bigraded"));
                }
            }
        }
    }
    rows
}

/// Coordinates of `i(a ⧢_Y b)` for nonempty `y`-words with `a` Lyndon.
fn y_shuffle_rows(m: usize, k: usize, basis: &BlockBasis<Word>, lyndon_only: bool) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for m1 in 1..m {
        for k1 in m1..=(k - (m - m1)) {
            let bs = ywords_of_bidegree(m - m1, k - k1);
            for a in ywords_of_bidegree(m1, k1) {
                if lyndon_only && !is_lyndon(a.indices()) {
                    continue;
                }
                for b in &bs {
                    let p = section_i(&y_shuffle_words(&a, b));
                    rows.push(basis.coords(&p).expect("section is bigraded"));
                }
            }
        }
    }
    rows
}

/// `ls_m^k` as the kernel of the primitivity conditions for `Δ` and, after
/// projecting by `π`, for `Δ_Y`. In depth 1 the even weights are zero.
pub fn compute_ls(m: usize, k: usize) -> Result<LsBasis> {
    check_bidegree(m, k)?;
    let basis = word_basis(m, k);
    if m == 1 && k.is_multiple_of(2) {
        return Ok(LsBasis {
            m,
            k,
            space: Subspace::zero(basis.len()),
        });
    }
    let mut rows = lyndon_shuffle_rows(m, k, &basis);
    rows.extend(y_shuffle_rows(m, k, &basis, true));
    let space = kernel_of_rows(basis.len(), rows);
    Ok(LsBasis { m, k, space })
}

/// The bidegree-`(m, k)` slice of
/// `K + K x + K_{1,even} + K<x,z>_+^{⧢2} + i(K<Y>_+^{⧢_Y 2})`, generated from
/// all shuffle products rather than the Lyndon ones.
pub fn ls_perp_generators(m: usize, k: usize) -> Result<Subspace> {
    check_bidegree(m, k)?;
    let basis = word_basis(m, k);
    if m == 1 && k.is_multiple_of(2) {
        return Ok(Subspace::full(basis.len()));
    }
    let mut rows = Vec::new();
    for k1 in 1..k {
        for m1 in 0..=m.min(k1) {
            let m2 = m - m1;
            if m2 > k - k1 {
                continue;
            }
            let vs = words_of_bidegree(m2, k - k1);
            for u in words_of_bidegree(m1, k1) {
                for v in &vs {
                    rows.push(basis.coords(&shuffle_words(&u, v)).expect("shuffle is bigraded"));
                }
            }
        }
    }
    rows.extend(y_shuffle_rows(m, k, &basis, false));
    span(rows, basis.len())
}

/// `ls_m^k` as the orthogonal complement, for the canonical pairing, of
/// [`ls_perp_generators`].
pub fn compute_ls_by_complement(m: usize, k: usize) -> Result<LsBasis> {
    let perp = ls_perp_generators(m, k)?;
    let n = perp.ambient_dim();
    let space = perp.orthogonal_complement(&SparseMatrix::identity(n))?;
    Ok(LsBasis { m, k, space })
}

/// One bracket that fell outside its target component.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureWitness {
    pub left: Vec<NcTerm>,
    pub right: Vec<NcTerm>,
    pub bracket: Vec<NcTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub target_dim: usize,
    pub pairs_checked: usize,
    pub nonzero_brackets: usize,
    pub witness: Option<ClosureWitness>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks that every bracket of basis elements of `p1` and `p2` lies in
/// `target`, which must be the component of the summed bidegree.
pub fn check_closure_into(p1: &LsBasis, p2: &LsBasis, target: &LsBasis) -> Result<ClosureReport> {
    if (target.m, target.k) != (p1.m + p2.m, p1.k + p2.k) {
        return Err(Error::InvalidBidegree {
            m: target.m,
            k: target.k,
            reason: "target bidegree is not the sum",
        });
    }
    let mut report = ClosureReport {
        left: (p1.m, p1.k),
        right: (p2.m, p2.k),
        target_dim: target.dim(),
        pairs_checked: 0,
        nonzero_brackets: 0,
        witness: None,
    };
    let e2 = p2.elements();
    for a in p1.elements() {
        for b in &e2 {
            report.pairs_checked += 1;
            let br = ihara_bracket(&a, b);
            if br.is_zero() {
                continue;
            }
            report.nonzero_brackets += 1;
            if !target.contains(&br)? {
                report.witness = Some(ClosureWitness {
                    left: poly_to_json(&a),
                    right: poly_to_json(b),
                    bracket: poly_to_json(&br),
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// [`check_closure_into`] with the target computed afresh.
pub fn check_closure(p1: &LsBasis, p2: &LsBasis) -> Result<ClosureReport> {
    let target = compute_ls(p1.m + p2.m, p1.k + p2.k)?;
    check_closure_into(p1, p2, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{coproduct_sh, monomial, Tensor2};
    use crate::rational::Rational;

    fn p(s: &[(&str, i64)]) -> NcPoly {
        NcPoly::from_terms(s.iter().map(|(w, c)| (w.parse().unwrap(), Rational::from_int(*c))))
    }

    #[test]
    fn depth_one_examples() {
        assert_eq!(compute_ls(1, 2).unwrap().dim(), 0);
        assert_eq!(compute_ls(1, 4).unwrap().dim(), 0);
        let l1 = compute_ls(1, 1).unwrap();
        assert_eq!(l1.elements(), vec![p(&[("z", 1)])]);
        let l3 = compute_ls(1, 3).unwrap();
        assert_eq!(l3.dim(), 1);
        let e = &l3.elements()[0];
        let expect = p(&[("xxz", 1), ("xzx", -2), ("zxx", 1)]);
        assert!(e == &expect || e == &-&expect, "{e}");
    }

    #[test]
    fn rejects_bad_bidegrees() {
        assert!(compute_ls(0, 3).is_err());
        assert!(compute_ls(3, 2).is_err());
    }

    #[test]
    fn basis_elements_are_primitive() {
        for (m, k) in [(1, 5), (2, 6), (2, 8), (3, 7)] {
            for e in compute_ls(m, k).unwrap().elements() {
                let expect = &Tensor2::pure(&monomial(Word::EMPTY), &e) + &Tensor2::pure(&e, &monomial(Word::EMPTY));
                assert_eq!(coproduct_sh(&e), expect);
            }
        }
    }

    #[test]
    fn both_routes_agree() {
        for k in 1..=8 {
            for m in 1..=k.min(4) {
                let a = compute_ls(m, k).unwrap();
                let b = compute_ls_by_complement(m, k).unwrap();
                assert_eq!(a, b, "({m},{k})");
            }
        }
    }

    #[test]
    fn parity_vanishing_small() {
        for k in 1..=9 {
            for m in 1..=k.min(4) {
                if (k + m) % 2 == 1 {
                    assert_eq!(compute_ls(m, k).unwrap().dim(), 0, "({m},{k})");
                }
            }
        }
    }

    #[test]
    fn closure_examples() {
        let l1 = compute_ls(1, 1).unwrap();
        let l3 = compute_ls(1, 3).unwrap();
        assert!(check_closure(&l3, &l3).unwrap().passed());
        assert!(check_closure(&l1, &l3).unwrap().passed());
        let r = check_closure(&l1, &l1).unwrap();
        assert!(r.passed());
        assert_eq!(r.nonzero_brackets, 0);
    }

    #[test]
    fn json_round_trip() {
        let l = compute_ls(2, 6).unwrap();
        let s = serde_json::to_string(&l.to_json()).unwrap();
        let back: LsBasisJson = serde_json::from_str(&s).unwrap();
        assert_eq!(LsBasis::from_json(&back).unwrap(), l);
    }
}
