use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::lincomb::{Basis, Bidegree, BlockBasis, LinComb};
use crate::rational::Rational;

/// `(n_1, ..., n_m)` with every part at least 1, indexing `I(n_1, ..., n_m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::OutOfRange(format!("{parts:?} is not a composition")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.depth(), &self.0).cmp(&(other.weight(), other.depth(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Basis for Composition {
    fn bidegree(&self) -> Bidegree {
        (self.depth(), self.weight())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `I'(n_0, n_1, ..., n_m)` with all parts at least 1, or the unit `I'(0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum UIndex {
    Zero,
    Parts(Vec<usize>),
}

impl UIndex {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts == [0] {
            return Ok(UIndex::Zero);
        }
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::OutOfRange(format!("{parts:?} is not a valid I' index")));
        }
        Ok(UIndex::Parts(parts))
    }

    /// `(n_0, ..., n_m)`, or `[0]` for `I'(0)`.
    pub fn parts(&self) -> Vec<usize> {
        match self {
            UIndex::Zero => vec![0],
            UIndex::Parts(p) => p.clone(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            UIndex::Zero => 0,
            UIndex::Parts(p) => p.len() - 1,
        }
    }

    pub fn weight(&self) -> usize {
        match self {
            UIndex::Zero => 0,
            UIndex::Parts(p) => p.iter().sum(),
        }
    }
}

impl Ord for UIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.depth(), self.parts()).cmp(&(other.weight(), other.depth(), other.parts()))
    }
}

impl PartialOrd for UIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Basis for UIndex {
    fn bidegree(&self) -> Bidegree {
        (self.depth(), self.weight())
    }
}

impl fmt::Display for UIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.parts();
        write!(f, "I'(")?;
        for (i, n) in p.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for UIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A basis element of `V = W ⊕ U`. Within a bidegree the `I` elements come
/// first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VIndex {
    I(Composition),
    U(UIndex),
}

impl Basis for VIndex {
    fn bidegree(&self) -> Bidegree {
        match self {
            VIndex::I(c) => c.bidegree(),
            VIndex::U(u) => u.bidegree(),
        }
    }
}

impl fmt::Display for VIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VIndex::I(c) => write!(f, "{c}"),
            VIndex::U(u) => write!(f, "{u}"),
        }
    }
}

impl fmt::Debug for VIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type WVector = LinComb<Composition>;
pub type VVector = LinComb<VIndex>;

/// Compositions of `k` into `m` parts in basis order.
pub fn w_indices(m: usize, k: usize) -> Vec<Composition> {
    if m == 0 {
        return Vec::new();
    }
    compositions(k, m).into_iter().map(Composition).collect()
}

pub fn w_basis(m: usize, k: usize) -> BlockBasis<Composition> {
    BlockBasis::new(w_indices(m, k))
}

pub fn u_indices(m: usize, k: usize) -> Vec<UIndex> {
    if m == 0 && k == 0 {
        return vec![UIndex::Zero];
    }
    compositions(k, m + 1).into_iter().map(UIndex::Parts).collect()
}

pub fn v_indices(m: usize, k: usize) -> Vec<VIndex> {
    w_indices(m, k)
        .into_iter()
        .map(VIndex::I)
        .chain(u_indices(m, k).into_iter().map(VIndex::U))
        .collect()
}

pub fn v_basis(m: usize, k: usize) -> BlockBasis<VIndex> {
    BlockBasis::new(v_indices(m, k))
}

pub fn embed_w(v: &WVector) -> VVector {
    VVector::from_terms(v.iter().map(|(c, r)| (VIndex::I(c.clone()), r.clone())))
}

/// One entry of the JSON form of a `W` or `V` vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VTerm {
    pub index: Vec<usize>,
    pub kind: String,
    pub coeff: Rational,
}

pub fn vvector_to_json(v: &VVector) -> Vec<VTerm> {
    v.iter()
        .map(|(i, c)| match i {
            VIndex::I(comp) => VTerm {
                index: comp.parts().to_vec(),
                kind: "I".into(),
                coeff: c.clone(),
            },
            VIndex::U(u) => VTerm {
                index: u.parts(),
                kind: "I'".into(),
                coeff: c.clone(),
            },
        })
        .collect()
}

pub fn wvector_to_json(v: &WVector) -> Vec<VTerm> {
    vvector_to_json(&embed_w(v))
}

pub fn vvector_from_json(terms: &[VTerm]) -> Result<VVector> {
    let mut out = VVector::zero();
    for t in terms {
        let idx = match t.kind.as_str() {
            "I" => VIndex::I(Composition::new(t.index.clone())?),
            "I'" => VIndex::U(UIndex::new(t.index.clone())?),
            other => return Err(Error::Parse(format!("unknown index kind {other:?}"))),
        };
        out.add_term(idx, t.coeff.clone());
    }
    Ok(out)
}
