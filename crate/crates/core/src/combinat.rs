//! Small enumeration helpers.

/// Compositions of `k` into `m` positive parts, in lexicographic order.
pub fn compositions(k: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    if k < m {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=(k - (m - 1)) {
        for mut rest in compositions(k - first, m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak compositions of `k` into `m` non-negative parts, in lexicographic order.
pub fn weak_compositions(k: usize, m: usize) -> Vec<Vec<usize>> {
    compositions(k + m, m)
        .into_iter()
        .map(|c| c.into_iter().map(|n| n - 1).collect())
        .collect()
}

/// The interleavings of `0..l` with `l..m`, as sequences `(s_1, ..., s_m)`.
pub fn interleaving_sequences(l: usize, m: usize) -> Vec<Vec<usize>> {
    assert!(l <= m);
    let a: Vec<usize> = (0..l).collect();
    let b: Vec<usize> = (l..m).collect();
    crate::ncalg::interleavings(&a, &b)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    #[test]
    fn composition_counts() {
        for k in 0..9 {
            for m in 0..=k + 1 {
                let n = compositions(k, m).len();
                let expect = if m == 0 {
                    (k == 0) as usize
                } else if k == 0 {
                    0
                } else {
                    binomial(k as u64 - 1, m as u64 - 1).numer().try_into().unwrap_or(0)
                };
                assert_eq!(n, expect, "k={k} m={m}");
            }
        }
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(weak_compositions(1, 2), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn interleaving_counts() {
        assert_eq!(interleaving_sequences(2, 4).len(), 6);
        assert_eq!(interleaving_sequences(0, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }
}
