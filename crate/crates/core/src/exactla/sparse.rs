//! Sparse vectors and an incremental echelon basis.
//!
//! The pivot of a row is its largest column index. Callers that order
//! columns by a monomial order get leading-term reduction for free.

use std::collections::BTreeMap;

use super::field::Field;

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

pub fn sparse_from_dense<F: Field>(f: F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense<F: Field>(f: F, v: &SparseVec<F::Elem>, len: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + c * b`
pub fn axpy<F: Field>(f: F, a: &SparseVec<F::Elem>, c: &F::Elem, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(f: F, a: &SparseVec<F::Elem>, c: &F::Elem) -> SparseVec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, f.mul(x, c))).collect()
}

/// Accumulates `(column, value)` contributions in any order.
pub fn collect_sparse<F: Field>(f: F, terms: impl IntoIterator<Item = (usize, F::Elem)>) -> SparseVec<F::Elem> {
    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (i, v) in terms {
        let e = acc.entry(i).or_insert_with(|| f.zero());
        *e = f.add(e, &v);
    }
    acc.into_iter().filter(|(_, v)| !f.is_zero(v)).collect()
}

/// Echelon basis of a growing subspace, rows keyed by their pivot.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, SparseVec<F::Elem>>,
    reduced: bool,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        SparseEchelon { field, rows: BTreeMap::new(), reduced: true }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` by leading terms until its leading column is not a pivot.
    pub fn reduce_leading(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = self.field;
        while let Some((lead, c)) = v.last().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = axpy(f, &v, &f.neg(&c), row),
                None => break,
            }
        }
        v
    }

    /// Fully reduces `v` against every pivot.
    pub fn reduce_full(&self, v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = self.field;
        let mut v = v;
        let mut bound = usize::MAX;
        loop {
            let next = v.iter().rev().find(|(i, _)| *i < bound && self.rows.contains_key(i)).cloned();
            match next {
                Some((col, c)) => {
                    v = axpy(f, &v, &f.neg(&c), &self.rows[&col]);
                    bound = col;
                }
                None => return v,
            }
        }
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let f = self.field;
        let v = self.reduce_leading(v);
        let Some((lead, c)) = v.last().cloned() else {
            return false;
        };
        let inv = f.inv(&c).unwrap();
        self.rows.insert(lead, scale(f, &v, &inv));
        self.reduced = false;
        true
    }

    /// Back-substitutes so every row is supported on its pivot and free columns.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let row = self.rows.remove(&k).unwrap();
            let (lead, tail) = row.split_last().unwrap();
            let tail = self.reduce_full(tail.to_vec());
            let mut row = tail;
            row.push(lead.clone());
            self.rows.insert(k, row);
        }
        self.reduced = true;
    }

    /// Row with the given pivot, pivot entry last (equal to one).
    pub fn row(&self, pivot: usize) -> Option<&SparseVec<F::Elem>> {
        self.rows.get(&pivot)
    }

    /// Basis of `{x : r . x = 0 for every inserted r}` in `ncols` unknowns.
    pub fn kernel(&mut self, ncols: usize) -> Vec<SparseVec<F::Elem>> {
        self.make_reduced();
        let f = self.field;
        let mut by_free: BTreeMap<usize, Vec<(usize, F::Elem)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (c, v) in &row[..row.len() - 1] {
                by_free.entry(*c).or_default().push((p, f.neg(v)));
            }
        }
        (0..ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|free| {
                let mut v = by_free.remove(&free).unwrap_or_default();
                v.push((free, f.one()));
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}
