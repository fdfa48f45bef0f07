//! Dense linear algebra over F₂ on packed bit vectors.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, idx: I) -> Self {
        let mut v = BitVec::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |i| self.get(*i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Matrix stored column-wise: column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols: vec![BitVec::zeros(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix { rows: n, cols: (0..n).map(|i| BitVec::unit(n, i)).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<BitVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.len() == rows));
        Gf2Matrix { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.cols[c].get(r)
    }

    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        self.cols[c].set(r, b)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.cols[c].flip(r)
    }

    pub fn column(&self, c: usize) -> &BitVec {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[BitVec] {
        &self.cols
    }

    pub fn apply(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.rows);
        for j in v.ones() {
            out.xor_assign(&self.cols[j]);
        }
        out
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols(), rhs.rows);
        Gf2Matrix { rows: self.rows, cols: rhs.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BitVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self.rows).extend_all(self.cols.iter().cloned()).rank()
    }

    /// Basis of the null space, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<BitVec> {
        let n = self.cols();
        // Each column is tracked together with the combination that produced it.
        let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut kernel = Vec::new();
        for j in 0..n {
            let mut v = self.cols[j].clone();
            let mut combo = BitVec::unit(n, j);
            for (p, pv, pc) in &pivots {
                if v.get(*p) {
                    v.xor_assign(pv);
                    combo.xor_assign(pc);
                }
            }
            match v.first_one() {
                Some(p) => {
                    for (_, qv, qc) in pivots.iter_mut() {
                        if qv.get(p) {
                            qv.xor_assign(&v);
                            qc.xor_assign(&combo);
                        }
                    }
                    pivots.push((p, v, combo));
                }
                None => kernel.push(combo),
            }
        }
        kernel
    }

    /// Some `x` with `self · x = b`, if one exists.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        let mut e = Echelon::new(self.rows);
        for (j, c) in self.cols.iter().enumerate() {
            e.insert_tagged(c.clone(), BitVec::unit(self.cols(), j));
        }
        e.express(b, self.cols())
    }
}

/// Incremental reduced echelon form over a growing set of vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, BitVec, Option<BitVec>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn extend_all<I: IntoIterator<Item = BitVec>>(mut self, it: I) -> Self {
        for v in it {
            self.insert(v);
        }
        self
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (p, row, _) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` if it was independent.
    pub fn insert(&mut self, v: BitVec) -> bool {
        self.insert_inner(v, None)
    }

    /// Inserts `v` remembering `tag` as its coordinates in some basis.
    pub fn insert_tagged(&mut self, v: BitVec, tag: BitVec) -> bool {
        self.insert_inner(v, Some(tag))
    }

    fn insert_inner(&mut self, v: BitVec, tag: Option<BitVec>) -> bool {
        let mut v = v;
        let mut tag = tag;
        for (p, row, rtag) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                if let (Some(t), Some(rt)) = (tag.as_mut(), rtag.as_ref()) {
                    t.xor_assign(rt);
                }
            }
        }
        let Some(p) = v.first_one() else { return false };
        for (_, row, rtag) in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&v);
                if let (Some(rt), Some(t)) = (rtag.as_mut(), tag.as_ref()) {
                    rt.xor_assign(t);
                }
            }
        }
        self.rows.push((p, v, tag));
        true
    }

    /// Coordinates of `b` in terms of the tags, if `b` is in the span.
    pub fn express(&self, b: &BitVec, tag_len: usize) -> Option<BitVec> {
        let mut v = b.clone();
        let mut out = BitVec::zeros(tag_len);
        for (p, row, tag) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                out.xor_assign(tag.as_ref().expect("untagged row"));
            }
        }
        v.is_zero().then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, data: &[&[u8]]) -> Gf2Matrix {
        // data is row-major
        let cols = data[0].len();
        let mut out = Gf2Matrix::zeros(rows, cols);
        for (r, row) in data.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                out.set(r, c, *b == 1);
            }
        }
        out
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(3, &[&[1, 1, 0, 1], &[0, 1, 1, 1], &[1, 0, 1, 0]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(3, &[&[1, 0], &[1, 1], &[0, 1]]);
        let b = BitVec::from_indices(3, [0, 2]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        assert!(a.solve(&BitVec::unit(3, 0)).is_none());
    }

    #[test]
    fn identity_compose() {
        let a = m(2, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(Gf2Matrix::identity(2).compose(&a), a);
    }
}
