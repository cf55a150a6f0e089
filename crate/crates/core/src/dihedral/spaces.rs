use crate::combinat::interleaving_sequences;
use crate::error::{Error, Result};
use crate::linalg::{span, SparseVec, Subspace};
use crate::lincomb::BlockBasis;
use crate::rational::Rational;
use crate::series::{linear_form, TruncatedSeries};

use super::index::{v_basis, w_basis, Composition, WVector};

pub type WSeries = TruncatedSeries<Composition>;

pub(crate) fn check_w_bidegree(m: usize, k: usize) -> Result<()> {
    if m == 0 || k < m {
        return Err(Error::InvalidBidegree {
            m,
            k,
            reason: "W is indexed by k >= m >= 1",
        });
    }
    Ok(())
}

/// `{t_1 : ... : t_m : t_{m+1}}` in the variables `s_i = t_i - t_{m+1}`,
/// for all weights up to `max_weight`: the coefficient of
/// `s_1^{n_1-1} ... s_m^{n_m-1}` is `I(n_1, ..., n_m)`.
pub fn colon_series(m: usize, max_weight: usize) -> WSeries {
    assert!(m >= 1, "colon series need at least one variable");
    let max_degree = max_weight.saturating_sub(m);
    let mut s = WSeries::zero(m, max_degree);
    if max_weight < m {
        return s;
    }
    for k in m..=max_weight {
        for c in super::index::w_indices(m, k) {
            let e = c.parts().iter().map(|&n| n as u32 - 1).collect();
            s.add_term(e, &Rational::one(), &WVector::basis(c));
        }
    }
    s
}

/// The weight-`k` slice of the colon series.
pub fn series_colon(m: usize, k: usize) -> Result<WSeries> {
    check_w_bidegree(m, k)?;
    Ok(colon_series(m, k).homogeneous_part(k - m))
}

/// `{t_1, ..., t_m} = {t_1 : t_1 + t_2 : ... : t_1 + ... + t_m : 0}`, weight `k`.
pub fn series_comma(m: usize, k: usize) -> Result<WSeries> {
    let colon = series_colon(m, k)?;
    let images: Vec<_> = (0..m)
        .map(|i| linear_form(m, &(0..=i).map(|j| (j, 1)).collect::<Vec<_>>()))
        .collect();
    Ok(colon.substitute(&images))
}

/// `Σ_{σ ∈ S(p,q)} f(t_{σ^{-1}(1)}, ..., t_{σ^{-1}(p+q)})`.
fn shuffle_symmetrize(f: &WSeries, p: usize) -> WSeries {
    let m = f.num_vars();
    let mut out = WSeries::zero(m, f.max_degree());
    for s in interleaving_sequences(p, m) {
        out = out.add(&f.rename_vars(&s, m));
    }
    out
}

fn coefficient_span(series: &[WSeries], basis: &BlockBasis<Composition>) -> Subspace {
    let rows: Vec<SparseVec> = series
        .iter()
        .flat_map(|s| s.iter().map(|(_, c)| basis.coords(c).expect("series is homogeneous")))
        .collect();
    span(rows, basis.len()).expect("coordinates are in range")
}

/// `(W_*)_{m,k}`: coefficients of the shuffle-symmetrized colon series.
pub fn compute_wstar(m: usize, k: usize) -> Result<Subspace> {
    let colon = series_colon(m, k)?;
    let gens: Vec<WSeries> = (1..m).map(|p| shuffle_symmetrize(&colon, p)).collect();
    Ok(coefficient_span(&gens, &w_basis(m, k)))
}

/// `(W_⧢)_{m,k}`: coefficients of the shuffle-symmetrized comma series.
pub fn compute_wsh(m: usize, k: usize) -> Result<Subspace> {
    let comma = series_comma(m, k)?;
    let gens: Vec<WSeries> = (1..m).map(|p| shuffle_symmetrize(&comma, p)).collect();
    Ok(coefficient_span(&gens, &w_basis(m, k)))
}

/// `(W_{1,even})_{m,k}`: `I(k)` when `m = 1` and `k` is even.
pub fn compute_w1even(m: usize, k: usize) -> Result<Subspace> {
    check_w_bidegree(m, k)?;
    let n = w_basis(m, k).len();
    if m == 1 && k.is_multiple_of(2) {
        Ok(Subspace::full(n))
    } else {
        Ok(Subspace::zero(n))
    }
}

/// `(W_R)_{m,k} = W_* + W_⧢ + W_{1,even}`.
pub fn compute_wr(m: usize, k: usize) -> Result<Subspace> {
    compute_wstar(m, k)?.sum(&compute_wsh(m, k)?)?.sum(&compute_w1even(m, k)?)
}

/// `W_R` seen inside `V_{m,k}` (the `W` coordinates come first).
pub fn wr_in_v(m: usize, k: usize, wr: &Subspace) -> Subspace {
    let n = v_basis(m, k).len();
    span(wr.basis().iter().cloned(), n).expect("W is a prefix of V")
}

/// `F_{m,k} = (W_R)_{m,k} ⊕ U_{m,k}` over the `V` basis.
pub fn compute_f_from(m: usize, k: usize, wr: &Subspace) -> Subspace {
    let vb = v_basis(m, k);
    let w = wr.ambient_dim();
    let rows = wr
        .basis()
        .iter()
        .cloned()
        .chain((w..vb.len()).map(SparseVec::unit));
    span(rows, vb.len()).expect("coordinates are in range")
}

pub fn compute_f(m: usize, k: usize) -> Result<Subspace> {
    if m == 0 {
        return Ok(Subspace::full(v_basis(0, k).len()));
    }
    check_w_bidegree(m, k)?;
    Ok(compute_f_from(m, k, &compute_wr(m, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn colon_coefficients() {
        let s = series_colon(1, 1).unwrap();
        assert_eq!(s.coeff(&[0]), WVector::basis(comp(&[1])));
        let s = series_colon(1, 3).unwrap();
        assert_eq!(s.coeff(&[2]), WVector::basis(comp(&[3])));
        let s = series_colon(2, 2).unwrap();
        assert_eq!(s.coeff(&[0, 0]), WVector::basis(comp(&[1, 1])));
    }

    #[test]
    fn depth_one_relations() {
        assert_eq!(compute_wr(1, 2).unwrap().dim(), 1);
        assert_eq!(compute_wr(1, 3).unwrap().dim(), 0);
    }

    #[test]
    fn comma_series_depth_two() {
        // {t1, t2} = Σ I(a,b) t1^{a-1} (t1 + t2)^{b-1}; in weight 3 the
        // coefficient of t1 is I(2,1) + I(1,2).
        let s = series_comma(2, 3).unwrap();
        let expect = &WVector::basis(comp(&[2, 1])) + &WVector::basis(comp(&[1, 2]));
        assert_eq!(s.coeff(&[1, 0]), expect);
        assert_eq!(s.coeff(&[0, 1]), WVector::basis(comp(&[1, 2])));
    }

    #[test]
    fn wstar_depth_two_is_symmetrization() {
        // Σ over the two (1,1)-shuffles gives I(a,b) + I(b,a) at s1^{a-1} s2^{b-1}.
        let ws = compute_wstar(2, 3).unwrap();
        let b = w_basis(2, 3);
        let v = b.coords(&(&WVector::basis(comp(&[1, 2])) + &WVector::basis(comp(&[2, 1])))).unwrap();
        assert!(ws.contains(&v).unwrap());
        assert_eq!(ws.dim(), 1);
    }

    #[test]
    fn f_contains_u() {
        let f = compute_f(1, 2).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(compute_f(1, 1).unwrap().dim(), 0);
        assert_eq!(compute_f(0, 3).unwrap().dim(), 1);
    }
}
