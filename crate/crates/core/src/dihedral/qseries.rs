//! Generating series of words: `Q_n` and `P`, with coefficientwise checks of
//! the identities they satisfy under shuffle, concatenation and the dual
//! Ihara cobracket.

use crate::combinat::{interleaving_sequences, weak_compositions};
use crate::commring::CommPoly;
use crate::ncalg::{co_ihara, concat, shuffle, NcPoly, Tensor2, Word};
use crate::rational::Rational;
use crate::series::{linear_form, LinearSubstitution, TruncatedSeries};

pub type NcSeries = TruncatedSeries<Word>;
pub type NcSeries2 = TruncatedSeries<(Word, Word)>;

/// `(1/(1 - x f_1)) z (1/(1 - x f_2)) z ... (1/(1 - x f_r))`, followed by a
/// final `z` when `trailing_z` is set. Forms may be zero.
pub fn chain_series(num_vars: usize, forms: &[CommPoly], trailing_z: bool, max_degree: usize) -> NcSeries {
    let mut out = NcSeries::zero(num_vars, max_degree);
    if forms.is_empty() {
        let w = if trailing_z { Word::Z } else { Word::EMPTY };
        out.add_term(vec![0; num_vars], &Rational::one(), &NcPoly::basis(w));
        return out;
    }
    let mut sub = LinearSubstitution::new(forms);
    for d in 0..=max_degree {
        for e in weak_compositions(d, forms.len()) {
            let mut blocks = e.clone();
            if trailing_z {
                blocks.push(0);
            }
            let word = NcPoly::basis(Word::from_x_blocks(&blocks));
            let exps: Vec<u32> = e.iter().map(|&x| x as u32).collect();
            for (mono, c) in sub.expand(&exps).terms().iter() {
                out.add_term(mono.exponents().to_vec(), c, &word);
            }
        }
    }
    out
}

fn var(num_vars: usize, j: usize) -> CommPoly {
    linear_form(num_vars, &[(j, 1)])
}

/// `1/(1 - x t_j)`.
pub fn geometric(num_vars: usize, j: usize, max_degree: usize) -> NcSeries {
    chain_series(num_vars, &[var(num_vars, j)], false, max_degree)
}

/// `Q_n(t_{a_1}, ..., t_{a_n})` in `num_vars` variables (`a` 0-based).
pub fn q_series_in(num_vars: usize, a: &[usize], max_degree: usize) -> NcSeries {
    let forms: Vec<CommPoly> = (1..=a.len())
        .rev()
        .map(|k| linear_form(num_vars, &a[..k].iter().map(|&j| (j, 1)).collect::<Vec<_>>()))
        .collect();
    chain_series(num_vars, &forms, !a.is_empty(), max_degree)
}

/// `Q_n(t_1, ..., t_n)`.
pub fn q_series(n: usize, max_degree: usize) -> NcSeries {
    q_series_in(n, &(0..n).collect::<Vec<_>>(), max_degree)
}

/// `P(v_{a_0}, ..., v_{a_m})` in `num_vars` variables, `None` standing for 0.
pub fn p_series_in(num_vars: usize, a: &[Option<usize>], max_degree: usize) -> NcSeries {
    let forms: Vec<CommPoly> = a
        .iter()
        .rev()
        .map(|j| j.map_or_else(|| CommPoly::zero(num_vars), |j| var(num_vars, j)))
        .collect();
    chain_series(num_vars, &forms, false, max_degree)
}

/// `P(v_0, ..., v_m)` in `m + 1` variables.
pub fn p_series(m: usize, max_degree: usize) -> NcSeries {
    let a: Vec<Option<usize>> = (0..=m).map(Some).collect();
    p_series_in(m + 1, &a, max_degree)
}

pub fn shuffle_series(a: &NcSeries, b: &NcSeries) -> NcSeries {
    a.product(b, shuffle)
}

pub fn concat_series(a: &NcSeries, b: &NcSeries) -> NcSeries {
    a.product(b, concat)
}

pub fn wedge_series(a: &NcSeries, b: &NcSeries) -> NcSeries2 {
    a.product(b, Tensor2::wedge)
}

/// The first exponent at which two series differ.
pub fn first_mismatch<K: Ord + Clone>(a: &TruncatedSeries<K>, b: &TruncatedSeries<K>) -> Option<Vec<u32>> {
    let d = a.sub(b);
    let first = d.iter().next().map(|(e, _)| e.clone());
    first
}

/// `Q_p(t_1..t_p) ⧢ Q_q(t_{p+1}..t_{p+q})` against `Σ_{σ ∈ S(p,q)} Q_{p+q}(t_{σ^{-1}(1)}, ...)`.
pub fn check_q_shuffle(p: usize, q: usize, max_degree: usize) -> Option<Vec<u32>> {
    let n = p + q;
    let left = q_series_in(n, &(0..p).collect::<Vec<_>>(), max_degree);
    let right = q_series_in(n, &(p..n).collect::<Vec<_>>(), max_degree);
    let lhs = shuffle_series(&left, &right);
    let mut rhs = NcSeries::zero(n, max_degree);
    for s in interleaving_sequences(p, n) {
        rhs = rhs.add(&q_series_in(n, &s, max_degree));
    }
    first_mismatch(&lhs, &rhs)
}

/// The three choices of `Q` used to check the geometric-series lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaTail {
    One,
    Z,
    Q1,
}

/// `(1/(1-xt)) ⧢ ((1/(1-xt')) z Q)` against `(1/(1-x(t+t'))) z ((1/(1-xt)) ⧢ Q)`,
/// with `t = t_1`, `t' = t_2` and `Q_1` taken in `t_3`.
pub fn check_q_lemma(tail: LemmaTail, max_degree: usize) -> Option<Vec<u32>> {
    let n = 3;
    let q = match tail {
        LemmaTail::One => NcSeries::constant(n, max_degree, NcPoly::basis(Word::EMPTY)),
        LemmaTail::Z => NcSeries::constant(n, max_degree, NcPoly::basis(Word::Z)),
        LemmaTail::Q1 => q_series_in(n, &[2], max_degree),
    };
    let g = geometric(n, 0, max_degree);
    let gz = chain_series(n, &[var(n, 1)], true, max_degree);
    let lhs = shuffle_series(&g, &concat_series(&gz, &q));
    let sum_z = chain_series(n, &[linear_form(n, &[(0, 1), (1, 1)])], true, max_degree);
    let rhs = concat_series(&sum_z, &shuffle_series(&g, &q));
    first_mismatch(&lhs, &rhs)
}

/// `Q_n(t_{a_1}, ..., t_{a_n}) = ((1/(1 - x t_{a_1})) ⧢ Q_{n-1}(t_{a_2}, ...)) z`
/// for `a` a permutation of `0..n`.
pub fn check_q_recursion(a: &[usize], max_degree: usize) -> Option<Vec<u32>> {
    let n = a.len();
    let lhs = q_series_in(n, a, max_degree);
    let inner = shuffle_series(&geometric(n, a[0], max_degree), &q_series_in(n, &a[1..], max_degree));
    let z = NcSeries::constant(n, max_degree, NcPoly::basis(Word::Z));
    first_mismatch(&lhs, &concat_series(&inner, &z))
}

/// `P(0, v_{k+1}..v_m) P(v_0..v_k) = P(v_{k+1}..v_m) P(v_0..v_k, 0) = P(v_0..v_m)`.
pub fn check_p_product(m: usize, k: usize, max_degree: usize) -> Option<Vec<u32>> {
    let n = m + 1;
    let full = p_series(m, max_degree);
    let head: Vec<Option<usize>> = (0..=k).map(Some).collect();
    let tail: Vec<Option<usize>> = (k + 1..=m).map(Some).collect();
    let zero_tail: Vec<Option<usize>> = std::iter::once(None).chain(tail.iter().copied()).collect();
    let head_zero: Vec<Option<usize>> = head.iter().copied().chain(std::iter::once(None)).collect();
    let first = concat_series(&p_series_in(n, &zero_tail, max_degree), &p_series_in(n, &head, max_degree));
    let second = concat_series(&p_series_in(n, &tail, max_degree), &p_series_in(n, &head_zero, max_degree));
    first_mismatch(&first, &full).or_else(|| first_mismatch(&second, &full))
}

/// `Σ_{i,k} P_{k,i}(v_0, ..., v_m)` as a series of tensors.
pub fn p_cobracket_terms(m: usize, max_degree: usize) -> NcSeries2 {
    let n = m + 1;
    let p = |idx: Vec<usize>| p_series_in(n, &idx.into_iter().map(Some).collect::<Vec<_>>(), max_degree);
    let range = |a: usize, b: usize| (a..=b).collect::<Vec<usize>>();
    let mut out = NcSeries2::zero(n, max_degree);
    for i in 0..=m {
        for k in 0..=m {
            let (left, right) = if i == 0 {
                (range(k, m), range(0, k))
            } else if k >= i {
                let mut l = range(0, i - 1);
                l.extend(k..=m);
                (l, range(i, k))
            } else {
                let mut r = range(0, k);
                r.extend(i..=m);
                (range(k, i - 1), r)
            };
            out = out.add(&wedge_series(&p(left), &p(right)));
        }
    }
    out
}

/// `co_ihara(P(v_0, ..., v_m)) = Σ_{i,k} P_{k,i}(v_0, ..., v_m)`.
pub fn check_co_ihara_p(m: usize, max_degree: usize) -> Option<Vec<u32>> {
    let lhs = p_series(m, max_degree).map_coeffs(co_ihara);
    first_mismatch(&lhs, &p_cobracket_terms(m, max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> NcPoly {
        NcPoly::basis(s.parse().unwrap())
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_series(0, 3).coeff(&[]), w("1"));
        let q1 = q_series(1, 3);
        assert_eq!(q1.coeff(&[0]), w("z"));
        assert_eq!(q1.coeff(&[1]), w("xz"));
        // Q_2 = (1/(1 - x(t1+t2))) z (1/(1 - x t1)) z; t1 appears in both blocks.
        let q2 = q_series(2, 2);
        assert_eq!(q2.coeff(&[1, 0]), &w("xzz") + &w("zxz"));
        assert_eq!(q2.coeff(&[0, 1]), w("xzz"));
    }

    #[test]
    fn p_examples() {
        let p0 = p_series(0, 5);
        for n in 0..=5u32 {
            assert_eq!(p0.coeff(&[n]), NcPoly::basis(Word::x_power(n as usize)));
        }
        let p1 = p_series(1, 2);
        assert_eq!(p1.coeff(&[1, 1]), w("xzx"));
    }

    #[test]
    fn shuffle_law_small() {
        assert_eq!(check_q_shuffle(1, 1, 4), None);
        assert_eq!(check_q_shuffle(1, 2, 3), None);
    }

    #[test]
    fn lemma_and_recursion() {
        for tail in [LemmaTail::One, LemmaTail::Z, LemmaTail::Q1] {
            assert_eq!(check_q_lemma(tail, 4), None, "{tail:?}");
        }
        assert_eq!(check_q_recursion(&[1, 2, 0], 4), None);
    }

    #[test]
    fn wrong_interleaving_orientation_is_detected() {
        // Summing over σ instead of σ^{-1} gives a different set for (1,2).
        let n = 3;
        let lhs = shuffle_series(&q_series_in(n, &[0], 3), &q_series_in(n, &[1, 2], 3));
        let mut wrong = NcSeries::zero(n, 3);
        for s in interleaving_sequences(1, n) {
            let mut inv = vec![0; n];
            for (i, &j) in s.iter().enumerate() {
                inv[j] = i;
            }
            wrong = wrong.add(&q_series_in(n, &inv, 3));
        }
        assert!(first_mismatch(&lhs, &wrong).is_some());
    }

    #[test]
    fn product_and_cobracket() {
        assert_eq!(check_p_product(2, 1, 3), None);
        assert_eq!(check_co_ihara_p(1, 4), None);
        assert!(p_series(1, 4).map_coeffs(co_ihara).is_zero());
    }
}
