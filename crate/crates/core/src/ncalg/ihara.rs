//! The Ihara bracket and its dual coproduct.

use crate::rational::Rational;

use super::ops::{concat, coproduct_dec_word};
use super::word::{Letter, Word};
use super::{NcPoly, Tensor2};

/// The derivation `d_a` with `d_a(x) = 0`, `d_a(z) = za - az`, applied to `b`.
pub fn derivation_dw(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (u, cu) in b.iter() {
        for j in u.z_positions() {
            let pre = u.prefix(j);
            let post = u.suffix_from(j + 1);
            for (v, cv) in a.iter() {
                let c = cu * cv;
                out.add_term(pre.push(Letter::Z).concat(v).concat(&post), c.clone());
                out.add_term(pre.concat(v).push(Letter::Z).concat(&post), -c);
            }
        }
    }
    out
}

/// `{a, b} = d_a(b) - d_b(a) + ab - ba`.
pub fn ihara_bracket(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = derivation_dw(a, b);
    out.add_scaled(&-Rational::one(), &derivation_dw(b, a));
    out.add_scaled(&Rational::one(), &concat(a, b));
    out.add_scaled(&-Rational::one(), &concat(b, a));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// Splits `w = L R` at its `i`-th `z` (1-based).
///
/// For `Plus`, `L` runs through the `i`-th `z` from the left. For `Minus`,
/// `R` starts at the `i`-th `z` from the right. `None` if `w` has fewer than
/// `i` letters `z`.
pub fn split_word(w: &Word, i: usize, side: Side) -> Option<(Word, Word)> {
    let zs = w.z_positions();
    if i == 0 || i > zs.len() {
        return None;
    }
    let cut = match side {
        Side::Plus => zs[i - 1] + 1,
        Side::Minus => zs[zs.len() - i],
    };
    Some((w.prefix(cut), w.suffix_from(cut)))
}

/// `d_{i,±}(u ⊗ w) = L u R` where `w = L R` is split by [`split_word`].
pub fn d_op_word(i: usize, side: Side, u: &Word, w: &Word) -> Option<Word> {
    split_word(w, i, side).map(|(l, r)| l.concat(u).concat(&r))
}

pub fn d_op(i: usize, side: Side, t: &Tensor2) -> NcPoly {
    let mut out = NcPoly::zero();
    for ((u, w), c) in t.iter() {
        if let Some(v) = d_op_word(i, side, u, w) {
            out.add_term(v, c.clone());
        }
    }
    out
}

/// The adjoint of `d_{i,±}` on a single word.
pub fn co_d_word(w: &Word, i: usize, side: Side) -> Tensor2 {
    let mut out = Tensor2::zero();
    let Some((l, r)) = split_word(w, i, side) else {
        return out;
    };
    match side {
        Side::Plus => {
            for j in 0..=r.len() {
                out.add_term((r.prefix(j), l.concat(&r.suffix_from(j))), Rational::one());
            }
        }
        Side::Minus => {
            for j in 0..=l.len() {
                out.add_term((l.suffix_from(j), l.prefix(j).concat(&r)), Rational::one());
            }
        }
    }
    out
}

pub fn co_d(p: &NcPoly, i: usize, side: Side) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in p.iter() {
        out.add_scaled(c, &co_d_word(w, i, side));
    }
    out
}

/// The coproduct dual to the Ihara bracket on a single word.
pub fn co_ihara_word(w: &Word) -> Tensor2 {
    let mut pre = coproduct_dec_word(w);
    for i in 1..=w.depth() {
        pre.add_scaled(&Rational::one(), &co_d_word(w, i, Side::Plus));
        pre.add_scaled(&-Rational::one(), &co_d_word(w, i, Side::Minus));
    }
    pre.antisymmetrize()
}

/// The co-Ihara coproduct, characterised by `<{a,b}, w> = <a ⊗ b, co_ihara(w)>`.
pub fn co_ihara(p: &NcPoly) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in p.iter() {
        out.add_scaled(c, &co_ihara_word(w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::ops::{monomial, pairing};
    use super::super::word::words_of_weight;
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> NcPoly {
        monomial(w(s))
    }

    #[test]
    fn bracket_of_generators_vanishes() {
        assert!(ihara_bracket(&p("x"), &p("z")).is_zero());
    }

    #[test]
    fn bracket_of_z_with_itself_is_zero() {
        assert!(ihara_bracket(&p("z"), &p("z")).is_zero());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_word(&w("xzzx"), 1, Side::Plus), Some((w("xz"), w("zx"))));
        assert_eq!(split_word(&w("xzzx"), 1, Side::Minus), Some((w("xz"), w("zx"))));
        assert_eq!(split_word(&w("xzzx"), 2, Side::Plus), Some((w("xzz"), w("x"))));
        assert_eq!(split_word(&w("xzzx"), 2, Side::Minus), Some((w("x"), w("zzx"))));
        assert_eq!(split_word(&w("xzzx"), 3, Side::Plus), None);
        assert_eq!(split_word(&w("xxx"), 1, Side::Minus), None);
    }

    #[test]
    fn co_ihara_has_no_unit_terms() {
        for u in words_of_weight(5) {
            let t = co_ihara_word(&u);
            assert!(t.iter().all(|((a, b), _)| !a.is_empty() && !b.is_empty()));
        }
    }

    #[test]
    fn co_d_is_adjoint_by_brute_force() {
        for k in 0..=6 {
            for target in words_of_weight(k) {
                for i in 1..=3 {
                    for side in [Side::Plus, Side::Minus] {
                        let dual = co_d_word(&target, i, side);
                        for ku in 0..=k {
                            for u in words_of_weight(ku) {
                                for v in words_of_weight(k - ku) {
                                    let direct = d_op_word(i, side, &u, &v) == Some(target);
                                    let expect = if direct { Rational::one() } else { Rational::zero() };
                                    assert_eq!(dual.coeff(&(u, v)), expect, "{target} {i} {side:?} {u} {v}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn co_ihara_is_transpose_of_bracket() {
        for k in 1..=6 {
            let targets = words_of_weight(k);
            for ka in 1..k {
                for a in words_of_weight(ka) {
                    for b in words_of_weight(k - ka) {
                        let br = ihara_bracket(&monomial(a), &monomial(b));
                        for t in &targets {
                            assert_eq!(co_ihara_word(t).coeff(&(a, b)), br.coeff(t));
                        }
                    }
                }
            }
        }
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = NcPoly> {
        prop::collection::vec((prop::collection::vec(any::<bool>(), 1..=max_len), -3i64..=3), 1..4).prop_map(
            |terms| {
                NcPoly::from_terms(terms.into_iter().map(|(bits, c)| {
                    (
                        Word::from_letters(bits.into_iter().map(|b| if b { Letter::Z } else { Letter::X })),
                        Rational::from_int(c),
                    )
                }))
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn bracket_is_antisymmetric(a in arb_poly(4), b in arb_poly(4)) {
            prop_assert_eq!(ihara_bracket(&a, &b), -&ihara_bracket(&b, &a));
        }

        #[test]
        fn bracket_satisfies_jacobi(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            let mut s = ihara_bracket(&a, &ihara_bracket(&b, &c));
            s = &s + &ihara_bracket(&b, &ihara_bracket(&c, &a));
            s = &s + &ihara_bracket(&c, &ihara_bracket(&a, &b));
            prop_assert!(s.is_zero());
        }

        #[test]
        fn co_ihara_pairing_matches_bracket(a in arb_poly(3), b in arb_poly(3), t in arb_poly(6)) {
            let lhs = pairing(&ihara_bracket(&a, &b), &t);
            let rhs = Tensor2::pure(&a, &b).pairing(&co_ihara(&t));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
