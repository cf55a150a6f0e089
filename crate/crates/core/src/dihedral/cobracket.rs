use std::collections::BTreeMap;

use crate::commring::CommPoly;
use crate::error::{Error, Result};
use crate::lincomb::{Basis, Tensor};
use crate::linalg::SparseVec;
use crate::rational::Rational;
use crate::series::{linear_form, LinearSubstitution};

use super::index::{w_basis, w_indices, Composition, WVector};
use super::spaces::{check_w_bidegree, compute_wr};

/// An element of `W ⊗ W`.
pub type WTensor = Tensor<Composition>;

/// The forms `t_{i_r} - t_{i_last}` for `idx = (i_1, ..., i_d, i_last)`
/// (1-based), in the reduced variables of depth `m` where `t_{m+1} = 0`.
fn colon_forms(idx: &[usize], m: usize) -> Vec<CommPoly> {
    let (&last, head) = idx.split_last().expect("nonempty index list");
    head.iter()
        .map(|&i| {
            let mut c = Vec::new();
            if i <= m {
                c.push((i - 1, 1));
            }
            if last <= m {
                c.push((last - 1, -1));
            }
            linear_form(m, &c)
        })
        .collect()
}

/// Reduces a cyclic index into `[1, m+1]`.
fn cyc(i: usize, m: usize) -> usize {
    (i - 1) % (m + 1) + 1
}

/// `δ̃(I(n))` for every composition `n` of `k` into `m` parts, read off from
/// the generating series of the cobracket in the reduced variables.
pub fn cobracket_table(m: usize, k: usize) -> Result<BTreeMap<Composition, WTensor>> {
    check_w_bidegree(m, k)?;
    let mut acc: BTreeMap<Vec<u32>, WTensor> = BTreeMap::new();
    for split in 2..=m {
        for j in 0..=m {
            let left: Vec<usize> = (1 + j..split + j).chain([m + 1 + j]).map(|i| cyc(i, m)).collect();
            let right: Vec<usize> = (split + j..=m + 1 + j).map(|i| cyc(i, m)).collect();
            let mut images = colon_forms(&left, m);
            images.extend(colon_forms(&right, m));
            let mut sub = LinearSubstitution::new(&images);
            let (d1, d2) = (split - 1, m + 1 - split);
            for k1 in d1..=k - d2 {
                for a in w_indices(d1, k1) {
                    for b in w_indices(d2, k - k1) {
                        let e: Vec<u32> = a.parts().iter().chain(b.parts()).map(|&n| n as u32 - 1).collect();
                        let wedge = WTensor::wedge(&WVector::basis(a.clone()), &WVector::basis(b.clone()));
                        for (mono, c) in sub.expand(&e).terms().iter() {
                            acc.entry(mono.exponents().to_vec()).or_default().add_scaled(c, &wedge);
                        }
                    }
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for n in w_indices(m, k) {
        let e: Vec<u32> = n.parts().iter().map(|&p| p as u32 - 1).collect();
        out.insert(n, acc.remove(&e).unwrap_or_default());
    }
    Ok(out)
}

/// `δ̃(v)` for `v` homogeneous.
pub fn cobracket_delta(v: &WVector) -> Result<WTensor> {
    if v.is_zero() {
        return Ok(WTensor::zero());
    }
    let (m, k) = v.homogeneous_bidegree().ok_or(Error::InvalidBidegree {
        m: 0,
        k: 0,
        reason: "cobracket input is not homogeneous",
    })?;
    let table = cobracket_table(m, k)?;
    let mut out = WTensor::zero();
    for (n, c) in v.iter() {
        out.add_scaled(c, &table[n]);
    }
    Ok(out)
}

/// The coefficients of `{t_1 : ... : t_{m+1}} - {t_{m+1} : t_1 : ... : t_m}`
/// in weight `k`, one per composition of `k` into `m` parts.
pub fn cycle_differences(m: usize, k: usize) -> Result<Vec<WVector>> {
    check_w_bidegree(m, k)?;
    let rotated: Vec<usize> = std::iter::once(m + 1).chain(1..=m).collect();
    let images = colon_forms(&rotated, m);
    let mut sub = LinearSubstitution::new(&images);
    let mut acc: BTreeMap<Vec<u32>, WVector> = BTreeMap::new();
    for n in w_indices(m, k) {
        let e: Vec<u32> = n.parts().iter().map(|&p| p as u32 - 1).collect();
        acc.entry(e.clone()).or_default().add_term(n.clone(), Rational::one());
        for (mono, c) in sub.expand(&e).terms().iter() {
            acc.entry(mono.exponents().to_vec()).or_default().add_term(n.clone(), -c);
        }
    }
    Ok(acc.into_values().filter(|v| !v.is_zero()).collect())
}

/// Whether the cyclic symmetry relation holds modulo `(W_R)_{m,k}`.
pub fn cycle_check(m: usize, k: usize) -> Result<bool> {
    let wr = compute_wr(m, k)?;
    let basis = w_basis(m, k);
    for d in cycle_differences(m, k)? {
        let v: SparseVec = basis.coords(&d).expect("differences are homogeneous");
        if !wr.contains(&v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits a tensor into its blocks by the pair of bidegrees of its factors.
pub fn tensor_blocks<K: Basis, L: Basis>(
    t: &Tensor<K, L>,
) -> BTreeMap<((usize, usize), (usize, usize)), Tensor<K, L>> {
    let mut out: BTreeMap<_, Tensor<K, L>> = BTreeMap::new();
    for ((a, b), c) in t.iter() {
        out.entry((a.bidegree(), b.bidegree()))
            .or_default()
            .add_term((a.clone(), b.clone()), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn depth_one_vanishes() {
        for k in 1..=6 {
            assert!(cobracket_table(1, k).unwrap().values().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn depth_two_constant_term() {
        let t = cobracket_delta(&WVector::basis(comp(&[1, 1]))).unwrap();
        assert!(t.is_zero());
    }

    /// Depth 2 expanded by hand: the three cyclic terms are
    /// `{t_{1+j} : t_{3+j}} ∧ {t_{2+j} : t_{3+j}}`, indices mod 3.
    #[test]
    fn depth_two_matches_hand_expansion() {
        // With t_3 = 0: j=0 gives {s1} ∧ {s2}; j=1 gives {s2 - s1} ∧ {-s1};
        // j=2 gives {-s2} ∧ {s1 - s2}.
        let k = 5;
        let table = cobracket_table(2, k).unwrap();
        let w = |n: usize| WVector::basis(comp(&[n]));
        for (n, got) in &table {
            let (n1, n2) = (n.parts()[0], n.parts()[1]);
            let mut expect = WTensor::zero();
            // j = 0: coefficient of s1^{a-1} s2^{b-1} in Σ I(a) s1^{a-1} ∧ I(b) s2^{b-1}.
            expect.add_scaled(&Rational::one(), &WTensor::wedge(&w(n1), &w(n2)));
            // j = 1: Σ I(a)(s2 - s1)^{a-1} ∧ I(b)(-s1)^{b-1}.
            for a in 1..k {
                let b = k - a;
                let pow2 = (a - 1) as i64;
                let e2 = n2 as i64 - 1;
                if e2 > pow2 {
                    continue;
                }
                let e1_from_a = pow2 - e2;
                if e1_from_a + (b as i64 - 1) != n1 as i64 - 1 {
                    continue;
                }
                let c = crate::rational::binomial(pow2 as u64, e2 as u64)
                    * Rational::from_int(if (e1_from_a + b as i64 - 1) % 2 == 0 { 1 } else { -1 });
                expect.add_scaled(&c, &WTensor::wedge(&w(a), &w(b)));
            }
            // j = 2: Σ I(a)(-s2)^{a-1} ∧ I(b)(s1 - s2)^{b-1}.
            for a in 1..k {
                let b = k - a;
                let pow = (b - 1) as i64;
                let e1 = n1 as i64 - 1;
                if e1 > pow {
                    continue;
                }
                let e2_from_b = pow - e1;
                if e2_from_b + (a as i64 - 1) != n2 as i64 - 1 {
                    continue;
                }
                let c = crate::rational::binomial(pow as u64, e1 as u64)
                    * Rational::from_int(if (e2_from_b + a as i64 - 1) % 2 == 0 { 1 } else { -1 });
                expect.add_scaled(&c, &WTensor::wedge(&w(a), &w(b)));
            }
            assert_eq!(got, &expect, "{n}");
        }
    }

    #[test]
    fn output_is_antisymmetric() {
        for (_, t) in cobracket_table(3, 7).unwrap() {
            assert_eq!(t.swap(), -&t);
        }
    }

    #[test]
    fn cyclic_symmetry_small() {
        assert!(cycle_check(1, 2).unwrap());
        assert!(cycle_check(1, 3).unwrap());
        for k in 2..=8 {
            assert!(cycle_check(2, k).unwrap(), "(2,{k})");
        }
    }
}
