//! Extended squares `W_m ⊗_{Z/2} (C ⊗ C)` and their canonical classes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::complex::{ChainComplex, ChainMap, Homology};
use crate::linalg::{BitVec, Echelon, Gf2Matrix};
use crate::{Error, Result};

/// Largest coefficient complex accepted by [`ExtendedSquare::new`].
pub const SQUARE_LIMIT: usize = 32;

/// A coefficient complex given by a flat basis with degrees and a
/// differential on basis elements.
#[derive(Clone, Debug)]
pub struct Coefficients {
    pub labels: Vec<String>,
    pub degrees: Vec<u32>,
    pub d: Vec<Vec<usize>>,
}

impl Coefficients {
    pub fn zero_differential(labels: Vec<String>, degrees: Vec<u32>) -> Self {
        let d = vec![Vec::new(); degrees.len()];
        Coefficients { labels, degrees, d }
    }

    /// Generators `g0, g1, …` of the given degrees.
    pub fn generators(degrees: &[u32]) -> Self {
        Self::zero_differential((0..degrees.len()).map(|i| format!("g{i}")).collect(), degrees.to_vec())
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// A cell `e^k ⊗ a ⊗ b`. It also stands for the orbit `{e^k⊗a⊗b, Te^k⊗b⊗a}`.
pub type SquareCell = (u32, usize, usize);

/// The quotient complex with orbit representatives `e^k ⊗ a ⊗ b` (the
/// untwisted cell of each orbit), for all ordered pairs `(a, b)`.
#[derive(Clone, Debug)]
pub struct ExtendedSquare {
    pub m: u32,
    pub coeff: Coefficients,
    pub complex: ChainComplex,
    cells: Vec<Vec<SquareCell>>,
    index: BTreeMap<SquareCell, (usize, usize)>,
    homology: Homology,
}

/// The canonical homology classes: Pontryagin elements `[e^0⊗a⊗b]`,
/// brackets `[e^m⊗(a⊗b + b⊗a)]` and Kudo-Araki elements `[e^k⊗a⊗a]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Canon {
    P(usize, usize),
    B(usize, usize),
    KA(u32, usize),
}

impl ExtendedSquare {
    pub fn new(m: u32, coeff: Coefficients) -> Result<Self> {
        if coeff.len() > SQUARE_LIMIT {
            return Err(Error::SizeLimitExceeded { size: coeff.len(), limit: SQUARE_LIMIT });
        }
        let n = coeff.len();
        let max_c = coeff.degrees.iter().copied().max().unwrap_or(0);
        let top = (m + 2 * max_c) as usize;
        let mut cells: Vec<Vec<SquareCell>> = vec![Vec::new(); top + 1];
        for k in 0..=m {
            for a in 0..n {
                for b in 0..n {
                    let deg = (k + coeff.degrees[a] + coeff.degrees[b]) as usize;
                    cells[deg].push((k, a, b));
                }
            }
        }
        let mut index = BTreeMap::new();
        for (deg, list) in cells.iter().enumerate() {
            for (pos, c) in list.iter().enumerate() {
                index.insert(*c, (deg, pos));
            }
        }
        let labels = cells
            .iter()
            .map(|l| l.iter().map(|(k, a, b)| format!("e^{k}⊗{}⊗{}", coeff.labels[*a], coeff.labels[*b])).collect())
            .collect();
        let mut complex = ChainComplex::zero_differential(labels);
        for deg in 1..cells.len() {
            let cols = cells[deg]
                .iter()
                .map(|&(k, a, b)| {
                    let mut out = Vec::new();
                    if k > 0 {
                        // (e^{k-1} + Te^{k-1}) ⊗ a ⊗ b, with Te⊗a⊗b ~ e⊗b⊗a
                        out.push((k - 1, a, b));
                        out.push((k - 1, b, a));
                    }
                    out.extend(coeff.d[a].iter().map(|&a2| (k, a2, b)));
                    out.extend(coeff.d[b].iter().map(|&b2| (k, a, b2)));
                    out
                })
                .collect::<Vec<_>>();
            let dim_below = cells[deg - 1].len();
            let cols = cols
                .into_iter()
                .map(|list| {
                    let mut v = BitVec::zeros(dim_below);
                    for c in list {
                        v.flip(index[&c].1);
                    }
                    v
                })
                .collect();
            complex.d[deg] = Gf2Matrix::from_columns(dim_below, cols);
        }
        let homology = complex.homology()?;
        Ok(ExtendedSquare { m, coeff, complex, cells, index, homology })
    }

    pub fn homology(&self) -> &Homology {
        &self.homology
    }

    pub fn cell_degree(&self, c: SquareCell) -> usize {
        (c.0 + self.coeff.degrees[c.1] + self.coeff.degrees[c.2]) as usize
    }

    pub fn cells(&self, deg: usize) -> &[SquareCell] {
        self.cells.get(deg).map_or(&[], Vec::as_slice)
    }

    /// The chain `Σ cells` (mod 2) in degree `deg`.
    pub fn chain(&self, deg: usize, cells: impl IntoIterator<Item = SquareCell>) -> BitVec {
        let mut v = BitVec::zeros(self.cells(deg).len());
        for c in cells {
            let (d, pos) = self.index[&c];
            debug_assert_eq!(d, deg);
            v.flip(pos);
        }
        v
    }

    /// `e^k ⊗ u ⊗ v` for chains `u`, `v` of `C` given as basis index lists.
    pub fn tensor(&self, k: u32, u: &[usize], v: &[usize]) -> Option<(usize, BitVec)> {
        let deg = self.homogeneous_degree(k, u, v)?;
        Some((deg, self.chain(deg, u.iter().flat_map(|&a| v.iter().map(move |&b| (k, a, b))))))
    }

    fn homogeneous_degree(&self, k: u32, u: &[usize], v: &[usize]) -> Option<usize> {
        let du = self.coeff.degrees[*u.first()?];
        let dv = self.coeff.degrees[*v.first()?];
        debug_assert!(u.iter().all(|a| self.coeff.degrees[*a] == du));
        debug_assert!(v.iter().all(|b| self.coeff.degrees[*b] == dv));
        Some((k + du + dv) as usize)
    }

    /// `[e^m ⊗ (u⊗v + v⊗u)]`.
    pub fn bracket_chain(&self, u: &[usize], v: &[usize]) -> Option<(usize, BitVec)> {
        let (deg, mut x) = self.tensor(self.m, u, v)?;
        x.xor_assign(&self.tensor(self.m, v, u)?.1);
        Some((deg, x))
    }

    pub fn canon_chain(&self, c: Canon) -> (usize, BitVec) {
        match c {
            Canon::P(a, b) => self.tensor(0, &[a], &[b]).expect("nonempty"),
            Canon::B(a, b) => self.bracket_chain(&[a], &[b]).expect("nonempty"),
            Canon::KA(k, a) => self.tensor(k, &[a], &[a]).expect("nonempty"),
        }
    }

    pub fn canon_degree(&self, c: Canon) -> usize {
        match c {
            Canon::P(a, b) => self.cell_degree((0, a, b)),
            Canon::B(a, b) => self.cell_degree((self.m, a, b)),
            Canon::KA(k, a) => self.cell_degree((k, a, a)),
        }
    }

    /// The enumerated basis: `P(a,b)` and `B(a,b)` for `a < b`, `KA(k,a)` for
    /// `0 ≤ k ≤ m`.
    pub fn canonical_basis(&self) -> Vec<Canon> {
        let n = self.coeff.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                out.push(Canon::P(a, b));
                out.push(Canon::B(a, b));
            }
            for k in 0..=self.m {
                out.push(Canon::KA(k, a));
            }
        }
        out
    }

    /// Writes the class of a cycle in the canonical basis, or `None` when
    /// the canonical classes do not span it (or it is not a cycle).
    pub fn decompose(&self, deg: usize, v: &BitVec) -> Option<Vec<Canon>> {
        let basis: Vec<Canon> = self.canonical_basis().into_iter().filter(|c| self.canon_degree(*c) == deg).collect();
        let dim = self.cells(deg).len();
        let mut e = Echelon::new(dim);
        if deg + 1 < self.complex.d.len() {
            for b in self.complex.d[deg + 1].columns() {
                e.insert_tagged(b.clone(), BitVec::zeros(basis.len()));
            }
        }
        for (i, c) in basis.iter().enumerate() {
            e.insert_tagged(self.canon_chain(*c).1, BitVec::unit(basis.len(), i));
        }
        if !self.complex.is_cycle(deg, v) {
            return None;
        }
        let coords = e.express(v, basis.len())?;
        Some(coords.ones().map(|i| basis[i]).collect())
    }

    /// The square of a chain map `f: C → C'` on basis elements, as a chain
    /// map between extended squares.
    pub fn square_map<F>(&self, target: &ExtendedSquare, f: F) -> ChainMap
    where
        F: Fn(usize) -> Vec<usize>,
    {
        let images: Vec<Vec<usize>> = (0..self.coeff.len()).map(&f).collect();
        (0..self.cells.len())
            .map(|deg| {
                let cols = self.cells[deg]
                    .iter()
                    .map(|&(k, a, b)| {
                        let list = images[a].iter().flat_map(|&a2| images[b].iter().map(move |&b2| (k, a2, b2)));
                        let mut v = BitVec::zeros(target.cells(deg).len());
                        for c in list {
                            v.flip(target.index[&c].1);
                        }
                        v
                    })
                    .collect();
                Gf2Matrix::from_columns(target.cells(deg).len(), cols)
            })
            .collect()
    }

    /// `ξ`: collapse to the top cell, `e^m ⊗ a ⊗ b ↦ b_m ⊗ a ⊗ b` and lower
    /// cells to zero. The target is indexed by ordered pairs `(a, b)`.
    pub fn xi(&self, deg: usize, v: &BitVec) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for pos in v.ones() {
            let (k, a, b) = self.cells[deg][pos];
            if k == self.m && !out.remove(&(a, b)) {
                out.insert((a, b));
            }
        }
        out
    }
}

/// `W_m ⊗ C ⊗ C` before the quotient, with cells `(twisted, k, a, b)`, and
/// the quotient map to the extended square.
pub struct Unquotiented {
    pub complex: ChainComplex,
    pub cells: Vec<Vec<(bool, u32, usize, usize)>>,
    pub quotient: ChainMap,
}

pub fn unquotiented(sq: &ExtendedSquare) -> Unquotiented {
    let coeff = &sq.coeff;
    let n = coeff.len();
    let top = sq.cells.len();
    let mut cells: Vec<Vec<(bool, u32, usize, usize)>> = vec![Vec::new(); top];
    for tw in [false, true] {
        for k in 0..=sq.m {
            for a in 0..n {
                for b in 0..n {
                    cells[(k + coeff.degrees[a] + coeff.degrees[b]) as usize].push((tw, k, a, b));
                }
            }
        }
    }
    let pos = |c: &(bool, u32, usize, usize), deg: usize| cells[deg].iter().position(|x| x == c).expect("cell");
    let labels = cells
        .iter()
        .map(|l| {
            l.iter()
                .map(|(tw, k, a, b)| format!("{}e^{k}⊗{}⊗{}", if *tw { "T" } else { "" }, coeff.labels[*a], coeff.labels[*b]))
                .collect()
        })
        .collect();
    let mut complex = ChainComplex::zero_differential(labels);
    let mut t = Vec::with_capacity(top);
    for deg in 0..top {
        let mut cols = Vec::new();
        let mut tcols = Vec::new();
        for &(tw, k, a, b) in &cells[deg] {
            // T acts diagonally: on the sphere cell and by swapping factors.
            let mut tv = BitVec::zeros(cells[deg].len());
            tv.flip(pos(&(!tw, k, b, a), deg));
            tcols.push(tv);
            if deg == 0 {
                continue;
            }
            let mut v = BitVec::zeros(cells[deg - 1].len());
            if k > 0 {
                v.flip(pos(&(false, k - 1, a, b), deg - 1));
                v.flip(pos(&(true, k - 1, a, b), deg - 1));
            }
            for &a2 in &coeff.d[a] {
                v.flip(pos(&(tw, k, a2, b), deg - 1));
            }
            for &b2 in &coeff.d[b] {
                v.flip(pos(&(tw, k, a, b2), deg - 1));
            }
            cols.push(v);
        }
        if deg > 0 {
            complex.d[deg] = Gf2Matrix::from_columns(cells[deg - 1].len(), cols);
        }
        t.push(Gf2Matrix::from_columns(cells[deg].len(), tcols));
    }
    complex.t = Some(t);
    let quotient = (0..top)
        .map(|deg| {
            let cols = cells[deg]
                .iter()
                .map(|&(tw, k, a, b)| {
                    let c = if tw { (k, b, a) } else { (k, a, b) };
                    sq.chain(deg, [c])
                })
                .collect();
            Gf2Matrix::from_columns(sq.cells(deg).len(), cols)
        })
        .collect();
    Unquotiented { complex, cells, quotient }
}
