//! Exact sparse linear algebra over the rationals.
//!
//! Every space computed by this crate lives in a [`Subspace`]: a basis matrix in
//! reduced row-echelon form (pivots chosen at the lowest column index). That
//! form is unique, so two subspaces are equal exactly when their matrices are
//! identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from unsorted entries, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in it {
            *map.entry(i).or_default() += v;
        }
        Self {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Builds from entries already sorted by strictly increasing index.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Rational::one())],
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut p, mut q) = (0, 0);
        while p < a.len() || q < b.len() {
            if q == b.len() || (p < a.len() && a[p].0 < b[q].0) {
                out.push(a[p].clone());
                p += 1;
            } else if p == a.len() || b[q].0 < a[p].0 {
                out.push((b[q].0, &b[q].1 * c));
                q += 1;
            } else {
                let v = &a[p].1 + &(&b[q].1 * c);
                if !v.is_zero() {
                    out.push((a[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut p, mut q) = (0, 0);
        let mut acc = Rational::zero();
        while p < a.len() && q < b.len() {
            match a[p].0.cmp(&b[q].0) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += &a[p].1 * &b[q].1;
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.entries.iter().map(|(i, v)| v * &dense[*i]).sum()
    }
}

/// A sparse `rows x cols` matrix stored row-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    /// Builds a matrix from its rows; fails if an entry lies outside `cols`.
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if let Some(m) = r.max_index() {
                if m >= cols {
                    return Err(Error::OutOfRange(format!("column {m} >= {cols}")));
                }
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.push(SparseVec::from_dense(r));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut per_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if *r >= rows || *c >= cols {
                return Err(Error::OutOfRange(format!("({r}, {c}) in {rows}x{cols}")));
            }
            per_row[*r].push((*c, v.clone()));
        }
        Ok(Self {
            rows,
            cols,
            data: per_row.into_iter().map(SparseVec::from_entries).collect(),
        })
    }

    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v.clone())))
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                cols[c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(
            self.data
                .iter()
                .enumerate()
                .map(|(r, row)| (r, row.dot(v)))
                .filter(|(_, x)| !x.is_zero()),
        )
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, v) in row.iter() {
                    acc = acc.add_scaled(v, &other.data[k]);
                }
                acc
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.data {
            e.insert(r.clone());
        }
        e.rank()
    }
}

/// Incremental row-echelon form. Each stored row has a unit leading entry at a
/// column no other stored row leads at.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    /// Reduces `v` against the stored rows until its leading column is free.
    /// Returns the residue, which is zero iff `v` lies in the current span.
    pub fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, a)) = v.leading() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = -a;
                    v = v.add_scaled(&f, p);
                }
                None => break,
            }
        }
        v
    }

    /// Fully reduces `v`: eliminates every entry sitting on a pivot column.
    pub fn reduce_full(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v
                .iter()
                .find(|(c, _)| *c >= cursor && self.pivots.contains_key(c))
                .map(|(c, a)| (c, a.clone()));
            match next {
                Some((c, a)) => {
                    v = v.add_scaled(&(-&a), &self.pivots[&c]);
                    cursor = c + 1;
                }
                None => return v,
            }
        }
    }

    /// Inserts `v`; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_leading(v);
        match v.leading() {
            None => false,
            Some((c, a)) => {
                let inv = a.recip();
                let v = v.scale(&inv);
                self.pivots.insert(c, v);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v.clone()).is_zero()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Back-substitutes into reduced row-echelon form, rows ordered by pivot.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (c, row) in self.pivots.into_iter().rev() {
            let mut row = row;
            let targets: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(j, _)| *j != c && done.contains_key(j))
                .map(|(j, a)| (j, a.clone()))
                .collect();
            for (j, a) in targets {
                row = row.add_scaled(&(-&a), &done[&j]);
            }
            done.insert(c, row);
        }
        done.into_values().collect()
    }
}

/// A linear subspace of `Q^n` in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(SparseVec::unit).collect(),
        }
    }

    fn from_echelon(ambient_dim: usize, e: Echelon) -> Self {
        Self {
            ambient_dim,
            basis: e.into_rref(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis.iter().filter_map(|r| r.leading().map(|(c, _)| c)).collect()
    }

    /// The basis as a `dim x ambient_dim` matrix.
    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.basis.len(),
            cols: self.ambient_dim,
            data: self.basis.clone(),
        }
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for r in &self.basis {
            e.pivots.insert(r.leading().expect("nonzero basis row").0, r.clone());
        }
        e
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool> {
        if let Some(m) = v.max_index() {
            if m >= self.ambient_dim {
                return Err(Error::OutOfRange(format!("index {m} >= {}", self.ambient_dim)));
            }
        }
        Ok(self.echelon().contains(v))
    }

    /// Reduces `v` modulo this subspace; the result has no entries at pivot
    /// columns, so it is a canonical representative of the class of `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.echelon().reduce_full(v)
    }

    /// Coordinates of the class of `v` in the quotient `Q^n / self`, indexed by
    /// the non-pivot columns in increasing order.
    pub fn quotient_coords(&self, v: &SparseVec) -> SparseVec {
        let free = self.free_columns_index();
        let r = self.reduce(v);
        SparseVec::from_sorted_unchecked(
            r.iter()
                .map(|(c, a)| (free[c].expect("reduced vector touches a pivot"), a.clone()))
                .collect(),
        )
    }

    /// For each ambient column, its position among the non-pivot columns.
    pub fn free_columns_index(&self) -> Vec<Option<usize>> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for c in self.pivot_columns() {
            is_pivot[c] = true;
        }
        let mut next = 0;
        is_pivot
            .iter()
            .map(|p| {
                if *p {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        self.free_columns_index()
            .iter()
            .enumerate()
            .filter_map(|(c, f)| f.map(|_| c))
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        let e = other.echelon();
        Ok(self.basis.iter().all(|r| e.contains(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let mut e = self.echelon();
        for r in &other.basis {
            e.insert(r.clone());
        }
        Ok(Self::from_echelon(self.ambient_dim, e))
    }

    /// Vectors orthogonal to the whole space for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.matrix())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let a = self.annihilator();
        let b = other.annihilator();
        let rows: Vec<SparseVec> = a.basis.into_iter().chain(b.basis).collect();
        Ok(kernel(&SparseMatrix {
            rows: rows.len(),
            cols: self.ambient_dim,
            data: rows,
        }))
    }

    /// `{ v : v^T G a = 0 for all a in self }`.
    pub fn orthogonal_complement(&self, gram: &SparseMatrix) -> Result<Subspace> {
        if gram.rows() != self.ambient_dim || gram.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: gram.rows().max(gram.cols()),
            });
        }
        let rows: Vec<SparseVec> = self.basis.iter().map(|a| gram.apply(a)).collect();
        Ok(kernel(&SparseMatrix {
            rows: rows.len(),
            cols: self.ambient_dim,
            data: rows,
        }))
    }

    /// `dim other - dim self`, requiring `self ⊆ other`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize> {
        if !self.is_subspace_of(other)? {
            return Err(Error::NotNested);
        }
        Ok(other.dim() - self.dim())
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors (`map.cols() == ambient_dim`).
    pub fn image(&self, map: &SparseMatrix) -> Result<Subspace> {
        self.check_dim(map.cols())?;
        span(
            self.basis.iter().map(|b| map.apply(b)).collect::<Vec<_>>(),
            map.rows(),
        )
    }

    /// Serializable triplet form of the basis matrix.
    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            ambient_dim: self.ambient_dim,
            dim: self.dim(),
            entries: self
                .matrix()
                .triplets()
                .into_iter()
                .collect(),
        }
    }

    /// Rebuilds from the triplet form, re-canonicalizing the rows.
    pub fn from_json(j: &SubspaceJson) -> Result<Subspace> {
        let m = SparseMatrix::from_triplets(j.dim, j.ambient_dim, &j.entries)?;
        let s = span(m.data, j.ambient_dim)?;
        if s.dim() != j.dim {
            return Err(Error::Parse("subspace rows are not independent".into()));
        }
        Ok(s)
    }
}

/// Matrix entries as `(row, col, "p/q")` triplets.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub dim: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

/// Null space `{ v : M v = 0 }`.
pub fn kernel(m: &SparseMatrix) -> Subspace {
    kernel_of_rows(m.cols, m.data.iter().cloned())
}

/// Null space of the matrix whose rows are produced by `rows`. Stops consuming
/// rows once the rank reaches the column count.
pub fn kernel_of_rows<I: IntoIterator<Item = SparseVec>>(cols: usize, rows: I) -> Subspace {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            return Subspace::zero(cols);
        }
    }
    kernel_from_echelon(cols, e)
}

fn kernel_from_echelon(cols: usize, e: Echelon) -> Subspace {
    let rref = e.into_rref();
    let mut is_pivot = vec![false; cols];
    for r in &rref {
        is_pivot[r.leading().expect("nonzero").0] = true;
    }
    let mut out = Echelon::new(cols);
    for f in (0..cols).filter(|c| !is_pivot[*c]) {
        let mut entries = vec![(f, Rational::one())];
        for r in &rref {
            let a = r.get(f);
            if !a.is_zero() {
                entries.push((r.leading().unwrap().0, -a));
            }
        }
        out.insert(SparseVec::from_entries(entries));
    }
    Subspace::from_echelon(cols, out)
}

/// Canonical basis of the span of `vectors` in `Q^ambient_dim`.
pub fn span<I: IntoIterator<Item = SparseVec>>(vectors: I, ambient_dim: usize) -> Result<Subspace> {
    let mut e = Echelon::new(ambient_dim);
    for v in vectors {
        if let Some(m) = v.max_index() {
            if m >= ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: m + 1,
                });
            }
        }
        if !e.is_full() {
            e.insert(v);
        }
    }
    Ok(Subspace::from_echelon(ambient_dim, e))
}

/// Span of dense vectors; every vector must have length `ambient_dim`.
pub fn span_dense(vectors: &[Vec<Rational>], ambient_dim: usize) -> Result<Subspace> {
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
    }
    span(vectors.iter().map(|v| SparseVec::from_dense(v)), ambient_dim)
}
