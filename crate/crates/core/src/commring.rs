//! The polynomial ring `K[x_1, ..., x_m]`, the symmetrization operators on it,
//! and the double shuffle spaces `Dsh_m(d)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{interleaving_sequences, weak_compositions};
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, SparseMatrix, SparseVec, Subspace};
use crate::lincomb::{Basis, Bidegree, BlockBasis, LinComb};
use crate::rational::Rational;

/// Exponent vector of a monomial `x_1^{e_1} ... x_m^{e_m}`.
///
/// Ordered by total degree, then with `x_1 > x_2 > ...`: among monomials of
/// equal degree, larger powers of earlier variables come first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial(vec![0; m])
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num_vars()
            .cmp(&other.num_vars())
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bidegree `(m, d + m)`: a degree-`d` monomial in `m` variables sits in
/// weight `d + m`.
impl Basis for Monomial {
    fn bidegree(&self) -> Bidegree {
        (self.num_vars(), self.degree() + self.num_vars())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if any {
                write!(f, " ")?;
            }
            any = true;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{e}", i + 1)?;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in a fixed number of commuting variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommPoly {
    num_vars: usize,
    terms: LinComb<Monomial>,
}

/// The JSON form of one term.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CommTerm {
    pub exponents: Vec<u32>,
    pub coeff: Rational,
}

impl CommPoly {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: LinComb::zero(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::from_terms(num_vars, [(Monomial::one(num_vars), c)]).unwrap()
    }

    /// The variable `x_i`, with `i` counted from 1.
    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!((1..=num_vars).contains(&i), "variable index out of range");
        let mut e = vec![0; num_vars];
        e[i - 1] = 1;
        Self::from_terms(num_vars, [(Monomial(e), Rational::one())]).unwrap()
    }

    pub fn monomial(e: Vec<u32>) -> Self {
        let m = e.len();
        Self::from_terms(m, [(Monomial(e), Rational::one())]).unwrap()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(num_vars: usize, it: I) -> Result<Self> {
        let mut terms = LinComb::zero();
        for (mono, c) in it {
            if mono.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: mono.num_vars(),
                });
            }
            terms.add_term(mono, c);
        }
        Ok(Self { num_vars, terms })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.coeff(&Monomial(e.to_vec()))
    }

    fn check(&self, other: &CommPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CommPoly) -> Result<CommPoly> {
        self.check(other)?;
        Ok(Self {
            num_vars: self.num_vars,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &CommPoly) -> Result<CommPoly> {
        self.check(other)?;
        Ok(Self {
            num_vars: self.num_vars,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> CommPoly {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, other: &CommPoly) -> Result<CommPoly> {
        self.check(other)?;
        let mut terms = LinComb::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                terms.add_term(Monomial(e), ca * cb);
            }
        }
        Ok(Self {
            num_vars: self.num_vars,
            terms,
        })
    }

    /// The algebra endomorphism sending `x_i` to `images[i - 1]`.
    pub fn substitute(&self, images: &[CommPoly]) -> Result<CommPoly> {
        if images.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, CommPoly::num_vars);
        if images.iter().any(|p| p.num_vars != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: images.iter().map(CommPoly::num_vars).find(|&n| n != target).unwrap(),
            });
        }
        let mut powers: HashMap<(usize, u32), CommPoly> = HashMap::new();
        let mut out = CommPoly::zero(target);
        for (mono, c) in self.terms.iter() {
            let mut acc = CommPoly::constant(target, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power_cached(&mut powers, images, i, e);
                acc = acc.mul(&p)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Vec<CommTerm> {
        self.terms
            .iter()
            .map(|(mono, c)| CommTerm {
                exponents: mono.0.clone(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json(num_vars: usize, terms: &[CommTerm]) -> Result<CommPoly> {
        Self::from_terms(num_vars, terms.iter().map(|t| (Monomial(t.exponents.clone()), t.coeff.clone())))
    }
}

fn power_cached(cache: &mut HashMap<(usize, u32), CommPoly>, images: &[CommPoly], i: usize, e: u32) -> CommPoly {
    if let Some(p) = cache.get(&(i, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        images[i].clone()
    } else {
        let prev = power_cached(cache, images, i, e - 1);
        prev.mul(&images[i]).expect("images share a variable count")
    };
    cache.insert((i, e), p.clone());
    p
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

fn linear_images(m: usize, images: impl Fn(usize) -> Vec<usize>) -> Vec<CommPoly> {
    (1..=m)
        .map(|i| {
            let mut p = CommPoly::zero(m);
            for j in images(i) {
                p = p.add(&CommPoly::var(m, j)).unwrap();
            }
            p
        })
        .collect()
}

/// `S_m(x_i) = x_i + ... + x_m`.
pub fn apply_s(p: &CommPoly) -> CommPoly {
    let m = p.num_vars();
    p.substitute(&linear_images(m, |i| (i..=m).collect())).unwrap()
}

/// `T_σ(x_i) = x_{σ^{-1}(i)}`, with `sigma_inv[i - 1] = σ^{-1}(i)` (1-based values).
pub fn apply_tsigma(p: &CommPoly, sigma_inv: &[usize]) -> Result<CommPoly> {
    let m = p.num_vars();
    let mut seen = vec![false; m];
    if sigma_inv.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: sigma_inv.len(),
        });
    }
    for &s in sigma_inv {
        if s == 0 || s > m || seen[s - 1] {
            return Err(Error::OutOfRange(format!("{sigma_inv:?} is not a permutation of 1..={m}")));
        }
        seen[s - 1] = true;
    }
    p.substitute(&linear_images(m, |i| vec![sigma_inv[i - 1]]))
}

/// `R_m(x_i) = x_{m+1-i}`.
pub fn apply_r(p: &CommPoly) -> CommPoly {
    let m = p.num_vars();
    p.substitute(&linear_images(m, |i| vec![m + 1 - i])).unwrap()
}

/// `L_m(x_i) = x_1 + ... + x_i`.
pub fn apply_l(p: &CommPoly) -> CommPoly {
    let m = p.num_vars();
    p.substitute(&linear_images(m, |i| (1..=i).collect())).unwrap()
}

fn check_l(m: usize, l: usize) -> Result<()> {
    if l == 0 || l >= m {
        return Err(Error::OutOfRange(format!("l = {l} outside [1, {}]", m.saturating_sub(1))));
    }
    Ok(())
}

/// `T_{m,*}^{(l)}`: the sum of `T_σ` over the `(l, m-l)`-shuffles `σ`.
pub fn apply_tstar(p: &CommPoly, l: usize) -> Result<CommPoly> {
    let m = p.num_vars();
    check_l(m, l)?;
    let mut out = CommPoly::zero(m);
    for s in interleaving_sequences(l, m) {
        let sigma_inv: Vec<usize> = s.iter().map(|&j| j + 1).collect();
        out = out.add(&apply_tsigma(p, &sigma_inv)?)?;
    }
    Ok(out)
}

/// `T_{m,⧢}^{(l)} = T_{m,*}^{(l)} ∘ S_m`.
pub fn apply_tsh(p: &CommPoly, l: usize) -> Result<CommPoly> {
    apply_tstar(&apply_s(p), l)
}

/// Monomials of total degree `d` in `m` variables, in basis order.
pub fn monomials(m: usize, d: usize) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = weak_compositions(d, m)
        .into_iter()
        .map(|e| Monomial(e.into_iter().map(|x| x as u32).collect()))
        .collect();
    v.sort();
    v
}

pub fn monomial_basis(m: usize, d: usize) -> BlockBasis<Monomial> {
    BlockBasis::new(monomials(m, d))
}

/// Matrix of a degree-preserving operator on the degree-`d` block; column
/// `j` holds the image of the `j`-th monomial.
pub fn operator_matrix<F>(m: usize, d: usize, op: F) -> SparseMatrix
where
    F: Fn(&CommPoly) -> CommPoly,
{
    let basis = monomial_basis(m, d);
    let n = basis.len();
    let mut trip = Vec::new();
    for (j, mono) in basis.elements().iter().enumerate() {
        let img = op(&CommPoly::monomial(mono.0.clone()));
        let col = basis.coords(&img.terms).expect("operator preserves degree");
        for (i, c) in col.iter() {
            trip.push((i, j, c.clone()));
        }
    }
    SparseMatrix::from_triplets(n, n, &trip).expect("indices in range")
}

/// `Dsh_m(d)` over the degree-`d` monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DshBasis {
    pub m: usize,
    pub d: usize,
    pub space: Subspace,
}

impl DshBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn weight(&self) -> usize {
        self.d + self.m
    }

    pub fn polys(&self) -> Vec<CommPoly> {
        let basis = monomial_basis(self.m, self.d);
        self.space
            .basis()
            .iter()
            .map(|v| CommPoly {
                num_vars: self.m,
                terms: basis.element_of(v),
            })
            .collect()
    }
}

/// The `2(m-1)` operators cutting out `Dsh_m`, as matrices on degree `d`.
pub fn defining_operators(m: usize, d: usize) -> Vec<SparseMatrix> {
    let mut ops = Vec::new();
    for l in 1..m {
        ops.push(operator_matrix(m, d, |p| apply_tstar(p, l).unwrap()));
        ops.push(operator_matrix(m, d, |p| apply_tsh(p, l).unwrap()));
    }
    ops
}

/// `Dsh_m(d)`: polynomials of degree `d` killed by every `T_{m,*}^{(l)}` and
/// `T_{m,⧢}^{(l)}`.
pub fn compute_dsh(m: usize, d: usize) -> Result<DshBasis> {
    if m < 2 {
        return Err(Error::InvalidBidegree {
            m,
            k: d + m,
            reason: "Dsh_m is defined for m >= 2",
        });
    }
    let n = monomials(m, d).len();
    let ops = defining_operators(m, d);
    let rows = ops.into_iter().flat_map(|op| op.row_vecs().to_vec());
    let space = kernel_of_rows(n, rows);
    Ok(DshBasis { m, d, space })
}

/// Outcome of comparing two operators on one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub identity: String,
    pub l: usize,
    pub degree: usize,
    pub holds: bool,
}

/// Empirical truth values of the operator identities relating `R_m`, `L_m`
/// and the shuffle operators.
#[derive(Clone, Debug, Serialize)]
pub struct OperatorIdentityReport {
    pub m: usize,
    pub max_degree: usize,
    pub results: Vec<IdentityResult>,
}

impl OperatorIdentityReport {
    /// Whether every instance of the named identity held.
    pub fn holds(&self, identity: &str) -> bool {
        self.results.iter().filter(|r| r.identity == identity).all(|r| r.holds)
    }
}

pub const ID_R_INVOLUTION: &str = "R R = id";
pub const ID_R_TSTAR: &str = "R T*(l) R = T*(m-l)";
pub const ID_RTLR_SH_L: &str = "R T*(l) L R = Tsh(l)";
pub const ID_RTLR_SH_ML: &str = "R T*(l) L R = Tsh(m-l)";

/// Compares operator matrices degree by degree.
///
/// The second identity is checked against both well-typed readings of the
/// right-hand side, `T_{m,⧢}^{(l)}` and `T_{m,⧢}^{(m-l)}`.
pub fn operator_identities_check(m: usize, max_degree: usize) -> Result<OperatorIdentityReport> {
    if m < 2 {
        return Err(Error::InvalidBidegree {
            m,
            k: m,
            reason: "operator identities need m >= 2",
        });
    }
    let mut results = Vec::new();
    for d in 0..=max_degree {
        let r = operator_matrix(m, d, apply_r);
        let ident = SparseMatrix::identity(r.rows());
        results.push(IdentityResult {
            identity: ID_R_INVOLUTION.into(),
            l: 0,
            degree: d,
            holds: r.mul(&r)? == ident,
        });
        for l in 1..m {
            let lhs1 = operator_matrix(m, d, |p| apply_r(&apply_tstar(&apply_r(p), l).unwrap()));
            let rhs1 = operator_matrix(m, d, |p| apply_tstar(p, m - l).unwrap());
            results.push(IdentityResult {
                identity: ID_R_TSTAR.into(),
                l,
                degree: d,
                holds: lhs1 == rhs1,
            });
            let lhs2 = operator_matrix(m, d, |p| apply_r(&apply_tstar(&apply_l(&apply_r(p)), l).unwrap()));
            for (name, ll) in [(ID_RTLR_SH_L, l), (ID_RTLR_SH_ML, m - l)] {
                let rhs = operator_matrix(m, d, |p| apply_tsh(p, ll).unwrap());
                results.push(IdentityResult {
                    identity: name.into(),
                    l,
                    degree: d,
                    holds: lhs2 == rhs,
                });
            }
        }
    }
    Ok(OperatorIdentityReport {
        m,
        max_degree,
        results,
    })
}

/// `Dsh_m^k = Dsh_m(k - m)`.
pub fn compute_dsh_weight(m: usize, k: usize) -> Result<DshBasis> {
    if k < m {
        return Err(Error::InvalidBidegree {
            m,
            k,
            reason: "weight below depth",
        });
    }
    compute_dsh(m, k - m)
}

/// Image of `v` under `op` for a vector in the degree-`d` monomial basis.
pub fn apply_on_coords<F: Fn(&CommPoly) -> CommPoly>(m: usize, d: usize, v: &SparseVec, op: F) -> SparseVec {
    let basis = monomial_basis(m, d);
    let p = CommPoly {
        num_vars: m,
        terms: basis.element_of(v),
    };
    basis.coords(&op(&p).terms).expect("operator preserves degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn x(m: usize, i: usize) -> CommPoly {
        CommPoly::var(m, i)
    }

    #[test]
    fn monomial_order() {
        let ms = monomials(2, 2);
        let s: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x1^2", "x1 x2", "x2^2"]);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(3, 0), vec![Monomial::one(3)]);
    }

    #[test]
    fn s_and_l_examples() {
        assert_eq!(apply_s(&x(2, 1)), x(2, 1).add(&x(2, 2)).unwrap());
        assert_eq!(apply_l(&x(2, 2)), x(2, 1).add(&x(2, 2)).unwrap());
        assert_eq!(apply_r(&x(3, 1)), x(3, 3));
    }

    #[test]
    fn tsigma_on_symmetric_monomial() {
        let p = x(2, 1).mul(&x(2, 2)).unwrap();
        assert_eq!(apply_tsigma(&p, &[2, 1]).unwrap(), p);
        assert!(apply_tsigma(&p, &[1, 1]).is_err());
    }

    #[test]
    fn tstar_and_tsh_examples() {
        let d = x(2, 1).sub(&x(2, 2)).unwrap();
        assert!(apply_tstar(&d, 1).unwrap().is_zero());
        let p = x(2, 1).mul(&x(2, 2)).unwrap();
        assert_eq!(apply_tstar(&p, 1).unwrap(), p.scale(&q(2)));
        assert_eq!(apply_tsh(&d, 1).unwrap(), x(2, 1).add(&x(2, 2)).unwrap());
        assert!(apply_tstar(&d, 2).is_err());
        assert!(apply_tstar(&d, 0).is_err());
    }

    #[test]
    fn tstar_kernel_in_degree_one() {
        let m = operator_matrix(2, 1, |p| apply_tstar(p, 1).unwrap());
        let k = crate::linalg::kernel(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], SparseVec::from_entries([(0, q(1)), (1, q(-1))]));
    }

    #[test]
    fn small_dsh_spaces_vanish() {
        assert_eq!(compute_dsh(2, 0).unwrap().dim(), 0);
        assert_eq!(compute_dsh(2, 1).unwrap().dim(), 0);
        assert!(compute_dsh(1, 3).is_err());
    }

    #[test]
    fn dsh_elements_are_annihilated() {
        for m in 2..=3 {
            for d in 0..=6 {
                let b = compute_dsh(m, d).unwrap();
                for p in b.polys() {
                    for l in 1..m {
                        assert!(apply_tstar(&p, l).unwrap().is_zero());
                        assert!(apply_tsh(&p, l).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn first_operator_identity_and_involution() {
        let rep = operator_identities_check(2, 4).unwrap();
        assert!(rep.holds(ID_R_INVOLUTION));
        assert!(rep.holds(ID_R_TSTAR));
        let rep = operator_identities_check(3, 3).unwrap();
        assert!(rep.holds(ID_R_INVOLUTION));
        assert!(rep.holds(ID_R_TSTAR));
    }

    #[test]
    fn second_identity_needs_the_complementary_superscript() {
        for m in 2..=4 {
            let rep = operator_identities_check(m, 3).unwrap();
            assert!(rep.holds(ID_RTLR_SH_ML), "m={m}");
            assert_eq!(rep.holds(ID_RTLR_SH_L), m == 2, "m={m}");
        }
    }

    #[test]
    fn substitution_is_multiplicative() {
        let p = x(3, 1).mul(&x(3, 2)).unwrap().add(&x(3, 3)).unwrap();
        let r = p.mul(&p).unwrap();
        assert_eq!(apply_l(&r), apply_l(&p).mul(&apply_l(&p)).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = apply_s(&x(3, 1).mul(&x(3, 2)).unwrap());
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back: Vec<CommTerm> = serde_json::from_str(&j).unwrap();
        assert_eq!(CommPoly::from_json(3, &back).unwrap(), p);
    }
}
