use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse vector: entries sorted by index, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, F::one())] }
    }

    pub fn single(i: usize, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, c) in pairs {
            let slot = acc.entry(i).or_insert_with(F::zero);
            let prev = std::mem::replace(slot, F::zero());
            *slot = prev + c;
        }
        Self::from_map(acc)
    }

    pub fn from_map(map: BTreeMap<usize, F>) -> Self {
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[F]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, F)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v.mul_ref(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v.clone())).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul_ref(c)));
                        b.next();
                    } else {
                        let mut s = x.clone();
                        s.sub_mul_assign(&-y.clone(), c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul_ref(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-F::one())
    }

    pub fn dot_dense(&self, v: &[F]) -> F {
        let mut acc = F::zero();
        for (i, c) in &self.entries {
            acc.sub_mul_assign(&-c.clone(), &v[*i]);
        }
        acc
    }

    pub fn dot(&self, other: &Self) -> F {
        let mut acc = F::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc.sub_mul_assign(&-x.clone(), y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Re-indexes entries through `f`; entries mapped to `None` are dropped.
    pub fn remap(&self, mut f: impl FnMut(usize) -> Option<usize>) -> Self {
        Self::from_pairs(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }
}

/// Accumulates a linear combination keyed by index.
#[derive(Debug, Clone)]
pub struct Accumulator<F> {
    map: BTreeMap<usize, F>,
}

impl<F: Field> Default for Accumulator<F> {
    fn default() -> Self {
        Accumulator { map: BTreeMap::new() }
    }
}

impl<F: Field> Accumulator<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, c: &F) {
        if c.is_zero() {
            return;
        }
        let slot = self.map.entry(i).or_insert_with(F::zero);
        slot.sub_mul_assign(&-c.clone(), &F::one());
    }

    pub fn add_product(&mut self, i: usize, a: &F, b: &F) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let slot = self.map.entry(i).or_insert_with(F::zero);
        slot.sub_mul_assign(&-a.clone(), b);
    }

    pub fn add_vec(&mut self, v: &SparseVec<F>, c: &F) {
        for (i, x) in v.iter() {
            self.add_product(*i, x, c);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.map.values().all(|c| c.is_zero())
    }

    pub fn finish(self) -> SparseVec<F> {
        SparseVec::from_map(self.map)
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn from_pairs_merges_and_drops_zeros() {
        let v = SparseVec::from_pairs(vec![(3, q(1)), (1, q(2)), (3, q(-1))]);
        assert_eq!(v.iter().cloned().collect::<Vec<_>>(), vec![(1, q(2))]);
    }

    #[test]
    fn add_scaled_matches_dense() {
        let a = SparseVec::from_dense(&[q(1), q(0), q(2), q(0)]);
        let b = SparseVec::from_dense(&[q(0), q(3), q(-1), q(5)]);
        let s = a.add_scaled(&b, &q(2));
        assert_eq!(s.to_dense(4), vec![q(1), q(6), q(0), q(10)]);
        assert_eq!(a.dot(&b), q(-2));
        assert_eq!(a.dot_dense(&b.to_dense(4)), q(-2));
    }
}
