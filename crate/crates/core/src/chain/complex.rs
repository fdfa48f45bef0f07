//! Graded F₂ chain complexes, their homology and induced maps.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{BitVec, Echelon, Gf2Matrix};
use crate::{Error, Result};

/// A bounded chain complex `C_0 ← C_1 ← … ← C_top`, optionally with a
/// cellular involution `T`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub labels: Vec<Vec<String>>,
    /// `d[k]: C_k → C_{k-1}`; `d[0]` has no rows.
    pub d: Vec<Gf2Matrix>,
    pub t: Option<Vec<Gf2Matrix>>,
}

impl ChainComplex {
    /// A complex with the given labels and zero differential.
    pub fn zero_differential(labels: Vec<Vec<String>>) -> Self {
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        let d = (0..dims.len()).map(|k| Gf2Matrix::zeros(if k == 0 { 0 } else { dims[k - 1] }, dims[k])).collect();
        ChainComplex { labels, d, t: None }
    }

    pub fn top(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.labels.get(k).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    /// `d∘d = 0`, and when an involution is present `T² = 1` and `Td = dT`.
    pub fn check(&self) -> Result<()> {
        for k in 2..self.d.len() {
            if !self.d[k - 1].compose(&self.d[k]).is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        if let Some(t) = &self.t {
            for k in 0..self.d.len() {
                if t[k].compose(&t[k]) != Gf2Matrix::identity(self.dim(k)) {
                    return Err(Error::NotAComplex { degree: k });
                }
                if k > 0 && self.d[k].compose(&t[k]) != t[k - 1].compose(&self.d[k]) {
                    return Err(Error::NotAComplex { degree: k });
                }
            }
        }
        Ok(())
    }

    pub fn homology(&self) -> Result<Homology> {
        self.check()?;
        let mut degrees = Vec::with_capacity(self.labels.len());
        for k in 0..self.labels.len() {
            let dim = self.dim(k);
            let cycles = if k == 0 { (0..dim).map(|i| BitVec::unit(dim, i)).collect() } else { self.d[k].kernel() };
            let boundaries: Vec<BitVec> =
                if k + 1 < self.d.len() { self.d[k + 1].columns().to_vec() } else { Vec::new() };
            let mut span = Echelon::new(dim);
            for b in &boundaries {
                span.insert(b.clone());
            }
            let reps: Vec<BitVec> = cycles.into_iter().filter(|z| span.insert(z.clone())).collect();
            let mut coords = Echelon::new(dim);
            for b in boundaries {
                coords.insert_tagged(b, BitVec::zeros(reps.len()));
            }
            for (i, z) in reps.iter().enumerate() {
                coords.insert_tagged(z.clone(), BitVec::unit(reps.len(), i));
            }
            degrees.push(HomologyDegree { reps, coords });
        }
        Ok(Homology { degrees })
    }

    /// Whether `v ∈ C_k` is a cycle.
    pub fn is_cycle(&self, k: usize, v: &BitVec) -> bool {
        k == 0 || self.d.get(k).is_none_or(|d| d.apply(v).is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct HomologyDegree {
    pub reps: Vec<BitVec>,
    coords: Echelon,
}

/// Homology with chosen representative cycles, reproducible from the
/// canonical basis order.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degrees: Vec<HomologyDegree>,
}

impl Homology {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|h| h.reps.len()).collect()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |h| h.reps.len())
    }

    /// Coordinates of the class of the cycle `v ∈ C_k` in the chosen basis;
    /// `None` if `v` is not a cycle.
    pub fn class_of(&self, k: usize, v: &BitVec) -> Option<BitVec> {
        let h = self.degrees.get(k)?;
        h.coords.express(v, h.reps.len())
    }
}

/// A degreewise linear map between two complexes.
pub type ChainMap = Vec<Gf2Matrix>;

/// Verifies `d f = f d` and returns the matrices of `f` on homology.
pub fn induced_map(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<Vec<Gf2Matrix>> {
    is_chain_map(f, source, target)?;
    let hs = source.homology()?;
    let ht = target.homology()?;
    let mut out = Vec::with_capacity(f.len());
    for (k, fk) in f.iter().enumerate() {
        let cols = hs.degrees[k]
            .reps
            .iter()
            .map(|z| match k < ht.degrees.len() {
                true => ht.class_of(k, &fk.apply(z)).ok_or(Error::NotChainMap { degree: k }),
                false => Ok(BitVec::zeros(0)),
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Gf2Matrix::from_columns(ht.dim(k), cols));
    }
    Ok(out)
}

pub fn is_chain_map(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<()> {
    for k in 1..f.len().min(source.d.len()) {
        let lhs = match target.d.get(k) {
            Some(d) => d.compose(&f[k]),
            None => Gf2Matrix::zeros(target.dim(k - 1), f[k].cols()),
        };
        let rhs = f[k - 1].compose(&source.d[k]);
        if lhs != rhs {
            return Err(Error::NotChainMap { degree: k });
        }
    }
    Ok(())
}
