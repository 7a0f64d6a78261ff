use std::collections::HashMap;
use std::sync::OnceLock;

use super::path::{Path, Relation};
use super::quiver::Quiver;
use super::BqaError;
use crate::exactla::sparse::{collect_sparse, SparseEchelon, SparseVec};
use crate::exactla::Field;

/// Largest number of paths the non-graded builder will enumerate.
const PATH_LIMIT: usize = 200_000;

/// `kQ/I` with a monomial basis and multiplication table.
///
/// Elements are dense coordinate vectors over the path basis. Trivial
/// paths come first, in vertex order.
#[derive(Clone, Debug)]
pub struct BoundAlgebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    bound: usize,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    between: Vec<Vec<Vec<usize>>>,
    /// `step[b * arrows + a]` is the normal form of `basis[b] . a`.
    step: Vec<SparseVec<F::Elem>>,
    /// `table[i * dim + j]` is the normal form of `basis[i] . basis[j]`.
    table: Vec<SparseVec<F::Elem>>,
    opposite: OnceLock<Box<BoundAlgebra<F>>>,
}

impl<F: Field> BoundAlgebra<F> {
    /// Computes the path basis and structure constants.
    ///
    /// Homogeneous relations are handled degree by degree: the degree-`d`
    /// part is spanned by (basis of degree `d-1`) times arrows, modulo the
    /// images of (basis) times (relation). Mixed-degree relations fall back
    /// to closing the relation span under multiplication by arrows inside
    /// the space of all paths of length at most `bound`.
    pub fn build(field: F, quiver: Quiver, relations: Vec<Relation<F>>, bound: usize) -> Result<Self, BqaError> {
        if bound == 0 {
            return Err(BqaError::ZeroBound);
        }
        let graded = relations.iter().all(|r| r.homogeneous_degree().is_some_and(|d| d >= 1));
        let (basis, step_map) = if graded {
            graded_basis(field, &quiver, &relations, bound)?
        } else {
            truncated_basis(field, &quiver, &relations, bound)?
        };
        Ok(Self::assemble(field, quiver, relations, bound, basis, step_map))
    }

    fn assemble(
        field: F,
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        bound: usize,
        basis: Vec<Path>,
        mut step_map: HashMap<(usize, usize), SparseVec<F::Elem>>,
    ) -> Self {
        let n = quiver.num_vertices();
        let na = quiver.num_arrows();
        let dim = basis.len();
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            between[p.source][p.target].push(i);
        }
        let mut step = vec![Vec::new(); dim * na];
        for b in 0..dim {
            for a in 0..na {
                if let Some(v) = step_map.remove(&(b, a)) {
                    step[b * na + a] = v;
                }
            }
        }
        let mut alg = BoundAlgebra {
            field,
            quiver,
            relations,
            bound,
            basis,
            index,
            between,
            step,
            table: Vec::new(),
            opposite: OnceLock::new(),
        };
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if alg.basis[i].target == alg.basis[j].source {
                    table[i * dim + j] = alg.apply_arrows(vec![(i, field.one())], &alg.basis[j].arrows);
                }
            }
        }
        alg.table = table;
        alg
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }
    pub fn bound(&self) -> usize {
        self.bound
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }
    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis paths from `i` to `j`, i.e. a basis of `e_i A e_j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    /// Normal form of `basis[b] . a` (empty when zero or not composable).
    pub fn step(&self, b: usize, a: usize) -> &SparseVec<F::Elem> {
        &self.step[b * self.quiver.num_arrows() + a]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.table[i * self.dim() + j]
    }

    /// Normal form of `v . a1 . a2 ...` for a sparse element `v`.
    pub fn apply_arrows(&self, mut v: SparseVec<F::Elem>, arrows: &[usize]) -> SparseVec<F::Elem> {
        let f = self.field;
        for &a in arrows {
            v = collect_sparse(
                f,
                v.iter().flat_map(|(b, c)| self.step(*b, a).iter().map(move |(k, x)| (*k, f.mul(c, x)))),
            );
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// Normal form of `a . basis[b]`.
    pub fn left_arrow(&self, a: usize, b: usize) -> SparseVec<F::Elem> {
        let f = self.field;
        let ae = self.arrow_nf(a);
        collect_sparse(f, ae.iter().flat_map(|(k, c)| self.mul_basis(*k, b).iter().map(move |(i, x)| (*i, f.mul(c, x)))))
    }

    pub fn arrow_nf(&self, a: usize) -> &SparseVec<F::Elem> {
        self.step(self.quiver.arrow(a).source, a)
    }

    pub fn path_nf(&self, p: &Path) -> SparseVec<F::Elem> {
        self.apply_arrows(vec![(p.source, self.field.one())], &p.arrows)
    }

    pub fn path_is_zero(&self, p: &Path) -> bool {
        self.path_nf(p).is_empty()
    }

    pub fn zero_element(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn to_dense(&self, v: &SparseVec<F::Elem>) -> Vec<F::Elem> {
        let mut out = self.zero_element();
        for (i, c) in v {
            out[*i] = c.clone();
        }
        out
    }

    /// Trivial path `e_v` as an element.
    pub fn idempotent(&self, v: usize) -> Vec<F::Elem> {
        let mut out = self.zero_element();
        out[v] = self.field.one();
        out
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let mut out = self.zero_element();
        for v in 0..self.num_vertices() {
            out[v] = self.field.one();
        }
        out
    }

    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, t));
                }
            }
        }
        out
    }

    /// Opposite algebra: reversed arrows and reversed relation paths.
    pub fn opposite(&self) -> &BoundAlgebra<F> {
        self.opposite.get_or_init(|| {
            let q = self.quiver.opposite();
            let rels = self
                .relations
                .iter()
                .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() })
                .collect();
            Box::new(BoundAlgebra::build(self.field, q, rels, self.bound).expect("opposite of an admissible algebra"))
        })
    }

    /// One vertex and finite dimension: the algebra is local.
    pub fn is_local(&self) -> bool {
        self.num_vertices() == 1
    }

    /// `dim e_i A e_j` for all vertex pairs.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        self.between.iter().map(|row| row.iter().map(|v| v.len()).collect()).collect()
    }

    /// Reference dimension count by the non-graded method, independent of
    /// the degree-by-degree builder.
    pub fn dimension_by_truncation(&self) -> Result<usize, BqaError> {
        truncated_basis(self.field, &self.quiver, &self.relations, self.bound).map(|(b, _)| b.len())
    }
}

type StepMap<E> = HashMap<(usize, usize), SparseVec<E>>;

fn graded_basis<F: Field>(
    f: F,
    q: &Quiver,
    relations: &[Relation<F>],
    bound: usize,
) -> Result<(Vec<Path>, StepMap<F::Elem>), BqaError> {
    let mut basis: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut by_degree: Vec<Vec<usize>> = vec![(0..q.num_vertices()).collect()];
    let mut step: StepMap<F::Elem> = HashMap::new();

    let apply = |step: &StepMap<F::Elem>, mut v: SparseVec<F::Elem>, arrows: &[usize]| {
        for &a in arrows {
            v = collect_sparse(
                f,
                v.iter().flat_map(|(b, c)| {
                    step.get(&(*b, a)).into_iter().flatten().map(move |(k, x)| (*k, f.mul(c, x)))
                }),
            );
        }
        v
    };

    for d in 1..=bound {
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &b in &by_degree[d - 1] {
            for a in q.arrows_from(basis[b].target) {
                cands.push((b, a));
            }
        }
        let col: HashMap<(usize, usize), usize> = cands.iter().enumerate().map(|(i, c)| (*c, i)).collect();

        let mut ech = SparseEchelon::new(f);
        for r in relations {
            let len = r.homogeneous_degree().unwrap();
            if len > d {
                continue;
            }
            for &b in &by_degree[d - len] {
                if basis[b].target != r.source() {
                    continue;
                }
                let mut terms = Vec::new();
                for (c, p) in &r.terms {
                    let (last, init) = p.arrows.split_last().unwrap();
                    let v = apply(&step, vec![(b, f.one())], init);
                    for (k, x) in v {
                        terms.push((col[&(k, *last)], f.mul(c, &x)));
                    }
                }
                ech.insert(collect_sparse(f, terms));
            }
        }
        ech.make_reduced();

        let mut new_index = vec![usize::MAX; cands.len()];
        let mut level = Vec::new();
        for (k, &(b, a)) in cands.iter().enumerate() {
            if !ech.is_pivot(k) {
                new_index[k] = basis.len();
                level.push(basis.len());
                basis.push(basis[b].concat(&Path::arrow(q, a)).unwrap());
            }
        }
        for (k, &(b, a)) in cands.iter().enumerate() {
            let nf = match ech.row(k) {
                Some(row) => {
                    let tail = &row[..row.len() - 1];
                    collect_sparse(f, tail.iter().map(|(j, x)| (new_index[*j], f.neg(x))))
                }
                None => vec![(new_index[k], f.one())],
            };
            step.insert((b, a), nf);
        }
        by_degree.push(level);
    }
    if !by_degree[bound].is_empty() {
        return Err(BqaError::NotAdmissible { bound });
    }
    Ok((basis, step))
}

fn truncated_basis<F: Field>(
    f: F,
    q: &Quiver,
    relations: &[Relation<F>],
    bound: usize,
) -> Result<(Vec<Path>, StepMap<F::Elem>), BqaError> {
    // every path of length <= bound, shorter first
    let mut paths: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut start = 0;
    for _ in 0..bound {
        let end = paths.len();
        for i in start..end {
            for a in q.arrows_from(paths[i].target) {
                let p = paths[i].concat(&Path::arrow(q, a)).unwrap();
                paths.push(p);
                if paths.len() > PATH_LIMIT {
                    return Err(BqaError::TooLarge(paths.len()));
                }
            }
        }
        start = end;
    }
    let lookup: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let times = |v: &SparseVec<F::Elem>, a: usize, left: bool| -> SparseVec<F::Elem> {
        let arrow = Path::arrow(q, a);
        let terms = v.iter().filter_map(|(i, c)| {
            let p = if left { arrow.concat(&paths[*i]) } else { paths[*i].concat(&arrow) }?;
            lookup.get(&p).map(|&k| (k, c.clone()))
        });
        collect_sparse(f, terms)
    };

    let mut ech = SparseEchelon::new(f);
    let mut queue: Vec<SparseVec<F::Elem>> = Vec::new();
    let push = |ech: &mut SparseEchelon<F>, queue: &mut Vec<SparseVec<F::Elem>>, v: SparseVec<F::Elem>| {
        let v = ech.reduce_leading(v);
        if !v.is_empty() && ech.insert(v.clone()) {
            queue.push(v);
        }
    };
    for r in relations {
        let v = collect_sparse(f, r.terms.iter().filter_map(|(c, p)| lookup.get(p).map(|&k| (k, c.clone()))));
        push(&mut ech, &mut queue, v);
    }
    while let Some(v) = queue.pop() {
        for a in 0..q.num_arrows() {
            for left in [false, true] {
                let w = times(&v, a, left);
                push(&mut ech, &mut queue, w);
            }
        }
    }
    ech.make_reduced();
    if paths.iter().enumerate().any(|(i, p)| p.len() == bound && !ech.is_pivot(i)) {
        return Err(BqaError::NotAdmissible { bound });
    }
    let mut new_index = vec![usize::MAX; paths.len()];
    let mut basis = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        if !ech.is_pivot(i) {
            new_index[i] = basis.len();
            basis.push(p.clone());
        }
    }
    let nf = |k: usize| -> SparseVec<F::Elem> {
        match ech.row(k) {
            Some(row) => collect_sparse(f, row[..row.len() - 1].iter().map(|(j, x)| (new_index[*j], f.neg(x)))),
            None => vec![(new_index[k], f.one())],
        }
    };
    let mut step = HashMap::new();
    for (b, p) in basis.iter().enumerate() {
        for a in q.arrows_from(p.target) {
            let ext = p.concat(&Path::arrow(q, a)).unwrap();
            let v = lookup.get(&ext).map(|&k| nf(k)).unwrap_or_default();
            step.insert((b, a), v);
        }
    }
    Ok((basis, step))
}
