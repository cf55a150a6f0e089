use proptest::prelude::*;

use lsdual::commring::{apply_r, CommPoly, Monomial};
use lsdual::dihedral::{
    cobracket_delta, phi, phi_inverse, tensor_blocks, v_basis, w_basis, PhiInverse, VVector, WVector,
};
use lsdual::lincomb::Tensor;
use lsdual::ncalg::{
    concat, coproduct_dec, pairing, pairing2, shuffle, word_basis, words_of_bidegree, NcPoly, Word,
};
use lsdual::Rational;

fn arb_coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len)
        .prop_map(|bits| bits.iter().map(|&b| if b { "z" } else { "x" }).collect::<String>().parse().unwrap())
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((arb_word(max_len), arb_coeff()), 0..4).prop_map(NcPoly::from_terms)
}

/// A random homogeneous polynomial of bidegree `(m, k)` as coordinates.
fn arb_homogeneous(m: usize, k: usize) -> impl Strategy<Value = NcPoly> {
    let words = words_of_bidegree(m, k);
    prop::collection::vec((0..words.len(), arb_coeff()), 1..4)
        .prop_map(move |t| NcPoly::from_terms(t.into_iter().map(|(i, c)| (words[i], c))))
}

fn bidegree() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=3).prop_flat_map(|m| (Just(m), m..=6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_text_round_trip(w in arb_word(20)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        prop_assert_eq!(Word::from_x_blocks(&w.x_blocks()), w);
    }

    #[test]
    fn shuffle_is_commutative_and_associative(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
        prop_assert_eq!(shuffle(&shuffle(&a, &b), &c), shuffle(&a, &shuffle(&b, &c)));
    }

    #[test]
    fn concatenation_is_adjoint_to_deconcatenation(a in arb_poly(3), b in arb_poly(3), w in arb_poly(6)) {
        prop_assert_eq!(pairing(&concat(&a, &b), &w), pairing2(&Tensor::pure(&a, &b), &coproduct_dec(&w)));
    }

    #[test]
    fn phi_inverse_round_trip((m, k) in bidegree(), seed in any::<u64>()) {
        let words = word_basis(m, k);
        let w = words.get(seed as usize % words.len());
        let p = NcPoly::from_terms([(*w, Rational::from_int(3)), (*words.get((seed as usize / 7) % words.len()), Rational::new(-1, 2))]);
        prop_assert_eq!(phi(&phi_inverse(&p)), p);
    }

    #[test]
    fn phi_is_injective_on_v((m, k) in bidegree(), idx in prop::collection::vec((0usize..64, arb_coeff()), 1..4)) {
        let vb = v_basis(m, k);
        let v = VVector::from_terms(idx.into_iter().map(|(i, c)| (vb.get(i % vb.len()).clone(), c)));
        prop_assert_eq!(phi_inverse(&phi(&v)), v);
    }

    #[test]
    fn dihedral_cobracket_is_antisymmetric((m, k) in bidegree(), idx in prop::collection::vec((0usize..64, arb_coeff()), 1..4)) {
        let wb = w_basis(m, k);
        let v = WVector::from_terms(idx.into_iter().map(|(i, c)| (wb.get(i % wb.len()).clone(), c)));
        let d = cobracket_delta(&v).unwrap();
        prop_assert!((&d + &d.swap()).is_zero());
        for ((l, r), _) in tensor_blocks(&d) {
            prop_assert_eq!((l.0 + r.0, l.1 + r.1), (m, k));
        }
    }

    #[test]
    fn pulled_back_co_ihara_is_linear((m, k) in bidegree(), a in arb_coeff(), i in 0usize..64, j in 0usize..64) {
        let vb = v_basis(m, k);
        let (x, y) = (VVector::basis(vb.get(i % vb.len()).clone()), VVector::basis(vb.get(j % vb.len()).clone()));
        let mut inv = PhiInverse::new();
        let lhs = lsdual::dihedral::pullback_co_ihara(&mut inv, &(&x.scale(&a) + &y));
        let rhs = &lsdual::dihedral::pullback_co_ihara(&mut inv, &x).scale(&a) + &lsdual::dihedral::pullback_co_ihara(&mut inv, &y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_is_an_involution(e in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..5), c in arb_coeff()) {
        let p = CommPoly::from_terms(3, e.into_iter().map(|x| (Monomial(x), c.clone()))).unwrap();
        prop_assert_eq!(apply_r(&apply_r(&p)), p);
    }

    #[test]
    fn ls_membership_is_linear(a in arb_coeff(), b in arb_coeff(), noise in arb_homogeneous(2, 8)) {
        let ls = lsdual::lsspace::compute_ls(2, 8).unwrap();
        let psi = &ls.elements()[0];
        prop_assert!(ls.contains(&psi.scale(&a)).unwrap());
        let perturbed = &psi.scale(&a) + &noise.scale(&b);
        let expected = b.is_zero() || noise.is_zero() || ls.contains(&noise).unwrap();
        prop_assert_eq!(ls.contains(&perturbed).unwrap(), expected);
    }
}
