//! Memoized access to the per-bidegree subspaces, optionally backed by the
//! on-disk cache.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cache::Cache;
use crate::commring::{compute_dsh, DshBasis};
use crate::dihedral::{compute_f_from, compute_wr, v_basis};
use crate::error::Result;
use crate::linalg::{Subspace, SubspaceJson};
use crate::lsspace::{compute_ls, LsBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Ls,
    Dsh,
    Wr,
    F,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ls => "ls",
            Kind::Dsh => "dsh",
            Kind::Wr => "wr",
            Kind::F => "vf",
        }
    }
}

/// Computed spaces keyed by kind and bidegree `(m, k)`; for `Dsh` the key
/// weight is `k = m + d`.
#[derive(Default)]
pub struct Context {
    cache: Option<Cache>,
    memo: Mutex<HashMap<(Kind, usize, usize), Arc<Subspace>>>,
}

impl Context {
    pub fn new(cache: Option<Cache>) -> Self {
        Self {
            cache,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn get<F: FnOnce() -> Result<Subspace>>(&self, kind: Kind, m: usize, k: usize, compute: F) -> Result<Arc<Subspace>> {
        if let Some(s) = self.memo.lock().expect("memo lock").get(&(kind, m, k)) {
            return Ok(s.clone());
        }
        let cached = self.cache.as_ref().and_then(|c| {
            let v = c.get(kind.name(), m, k)?;
            let j: SubspaceJson = serde_json::from_value(v).ok()?;
            Subspace::from_json(&j).ok()
        });
        let space = match cached {
            Some(s) => s,
            None => {
                let s = compute()?;
                if let Some(c) = &self.cache {
                    c.put(kind.name(), m, k, serde_json::to_value(s.to_json())?)?;
                }
                s
            }
        };
        let space = Arc::new(space);
        self.memo.lock().expect("memo lock").insert((kind, m, k), space.clone());
        Ok(space)
    }

    /// `ls_m^k` in word coordinates.
    pub fn ls(&self, m: usize, k: usize) -> Result<Arc<Subspace>> {
        self.get(Kind::Ls, m, k, || Ok(compute_ls(m, k)?.space))
    }

    pub fn ls_basis(&self, m: usize, k: usize) -> Result<LsBasis> {
        Ok(LsBasis {
            m,
            k,
            space: (*self.ls(m, k)?).clone(),
        })
    }

    /// `Dsh_m(k - m)` in monomial coordinates.
    pub fn dsh(&self, m: usize, k: usize) -> Result<Arc<Subspace>> {
        let d = k.checked_sub(m).ok_or(crate::Error::InvalidBidegree {
            m,
            k,
            reason: "weight below depth",
        })?;
        self.get(Kind::Dsh, m, k, || Ok(compute_dsh(m, d)?.space))
    }

    pub fn dsh_basis(&self, m: usize, k: usize) -> Result<DshBasis> {
        Ok(DshBasis {
            m,
            d: k - m,
            space: (*self.dsh(m, k)?).clone(),
        })
    }

    /// `(W_R)_{m,k}` in `W` coordinates.
    pub fn wr(&self, m: usize, k: usize) -> Result<Arc<Subspace>> {
        self.get(Kind::Wr, m, k, || compute_wr(m, k))
    }

    /// `F_{m,k}` in `V` coordinates; all of `V_{0,k}` in depth 0.
    pub fn f(&self, m: usize, k: usize) -> Result<Arc<Subspace>> {
        if m == 0 {
            return Ok(Arc::new(Subspace::full(v_basis(0, k).len())));
        }
        let wr = self.wr(m, k)?;
        self.get(Kind::F, m, k, || Ok(compute_f_from(m, k, &wr)))
    }
}
