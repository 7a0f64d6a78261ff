use serde::Serialize;

use super::presentation::{min_projective_presentation, tau, transpose_of, ProjectivePresentation};
use super::projective::projective_rep;
use super::TauError;
use crate::bqa::BoundAlgebra;
use crate::exactla::{Field, Matrix};
use crate::rep::{decompose, end_algebra, hom_basis, hom_dim, in_fac, indecomposables_isomorphic, HomSpace, Morphism, Representation};

pub fn is_tau_rigid<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> bool {
    m.is_zero() || hom_dim(alg, m, &tau(alg, m)) == 0
}

/// Indecomposable summands of `m` up to isomorphism.
fn basic_summands<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<Vec<Representation<F>>, TauError> {
    let mut out: Vec<Representation<F>> = Vec::new();
    for s in decompose(alg, m)?.summands {
        if !out.iter().any(|t| indecomposables_isomorphic(alg, t, &s)) {
            out.push(s);
        }
    }
    Ok(out)
}

/// `(m, P(excluded))` is a support τ-tilting pair: `m` is τ-rigid, vanishes
/// on the excluded vertices, and has `n - |excluded|` distinct
/// indecomposable summands.
pub fn is_stt_pair<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>, excluded: &[usize]) -> Result<bool, TauError> {
    if excluded.iter().any(|&v| m.dim_at(v) != 0) || !is_tau_rigid(alg, m) {
        return Ok(false);
    }
    let mut ex = excluded.to_vec();
    ex.sort_unstable();
    ex.dedup();
    Ok(basic_summands(alg, m)?.len() + ex.len() == alg.num_vertices())
}

/// An indecomposable summand with its minimal presentation.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Representation<F>,
    pub g_vector: Vec<i64>,
    /// `Some(v)` when the summand is `P(v)`.
    pub projective: Option<usize>,
    presentation: ProjectivePresentation<F>,
}

impl<F: Field> Summand<F> {
    pub fn new(alg: &BoundAlgebra<F>, module: Representation<F>) -> Self {
        let presentation = min_projective_presentation(alg, &module);
        let g_vector = presentation.g_vector(alg.num_vertices());
        let projective = presentation.is_projective().then(|| presentation.top_vertices[0]);
        Summand { module, g_vector, projective, presentation }
    }
}

/// A basic support τ-tilting pair `(M, P)`; `P` is recorded by its vertices.
#[derive(Clone, Debug)]
pub struct SttPair<F: Field> {
    /// Sorted by g-vector.
    pub summands: Vec<Summand<F>>,
    /// Sorted.
    pub excluded: Vec<usize>,
}

pub type PairKey = Vec<Vec<i64>>;

impl<F: Field> SttPair<F> {
    pub fn new(mut summands: Vec<Summand<F>>, mut excluded: Vec<usize>) -> Self {
        summands.sort_by(|a, b| a.g_vector.cmp(&b.g_vector));
        excluded.sort_unstable();
        SttPair { summands, excluded }
    }

    pub fn from_modules(alg: &BoundAlgebra<F>, modules: Vec<Representation<F>>, excluded: Vec<usize>) -> Self {
        Self::new(modules.into_iter().map(|m| Summand::new(alg, m)).collect(), excluded)
    }

    /// `(A, 0)`.
    pub fn regular(alg: &BoundAlgebra<F>) -> Self {
        Self::from_modules(alg, (0..alg.num_vertices()).map(|v| projective_rep(alg, v)).collect(), vec![])
    }

    /// `(0, A)`.
    pub fn shifted_regular(alg: &BoundAlgebra<F>) -> Self {
        Self::new(vec![], (0..alg.num_vertices()).collect())
    }

    pub fn len(&self) -> usize {
        self.summands.len() + self.excluded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn module(&self, alg: &BoundAlgebra<F>) -> Representation<F> {
        let parts: Vec<_> = self.summands.iter().map(|s| s.module.clone()).collect();
        Representation::direct_sum(alg, &parts)
    }

    /// g-vectors: one column per summand, then `-e_v` per excluded vertex.
    pub fn g_vectors(&self, n: usize) -> Vec<Vec<i64>> {
        let mut cols: Vec<Vec<i64>> = self.summands.iter().map(|s| s.g_vector.clone()).collect();
        for &v in &self.excluded {
            let mut c = vec![0; n];
            c[v] = -1;
            cols.push(c);
        }
        cols
    }

    /// Sorted g-vector columns; identifies the pair up to isomorphism.
    pub fn key(&self, n: usize) -> PairKey {
        let mut k = self.g_vectors(n);
        k.sort();
        k
    }

    /// Determinant of the g-vector matrix.
    pub fn g_determinant(&self, n: usize) -> i64 {
        let q = crate::exactla::Rationals;
        let cols: Vec<Vec<_>> = self.g_vectors(n).iter().map(|c| c.iter().map(|&x| q.from_i64(x)).collect()).collect();
        let det = Matrix::from_columns(q, n, &cols).det();
        det.to_string().parse().expect("integer determinant")
    }

    pub fn is_valid(&self, alg: &BoundAlgebra<F>) -> Result<bool, TauError> {
        Ok(self.len() == alg.num_vertices() && is_stt_pair(alg, &self.module(alg), &self.excluded)?)
    }

    fn position_of(&self, n: usize, g: &[i64]) -> usize {
        self.g_vectors(n).iter().position(|c| c == g).expect("element present")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// The new pair is smaller: its torsion class is contained in the old one.
    Down,
    Up,
}

#[derive(Clone, Debug)]
pub struct Mutation<F: Field> {
    pub pair: SttPair<F>,
    /// Position of the new element in `pair`.
    pub position: usize,
    pub direction: Direction,
}

enum Element<F: Field> {
    Module(Representation<F>),
    Vertex(usize),
}

/// The direction mutation at `position` goes in.
pub fn mutation_direction<F: Field>(alg: &BoundAlgebra<F>, pair: &SttPair<F>, position: usize) -> Result<Direction, TauError> {
    if position >= pair.len() {
        return Err(TauError::BadPosition(position));
    }
    if position >= pair.summands.len() {
        return Ok(Direction::Up);
    }
    let x = &pair.summands[position];
    if x.projective.is_some() {
        return Ok(Direction::Down);
    }
    let rest = rest_module(alg, &pair.summands, position);
    Ok(if in_fac(alg, &rest, &x.module) { Direction::Up } else { Direction::Down })
}

fn rest_module<F: Field>(alg: &BoundAlgebra<F>, summands: &[Summand<F>], skip: usize) -> Representation<F> {
    let parts: Vec<_> = summands.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, s)| s.module.clone()).collect();
    Representation::direct_sum(alg, &parts)
}

/// Mutation of a support τ-tilting pair at one of its `n` elements.
pub fn mutate<F: Field>(alg: &BoundAlgebra<F>, pair: &SttPair<F>, position: usize) -> Result<Mutation<F>, TauError> {
    let direction = mutation_direction(alg, pair, position)?;
    let n = alg.num_vertices();
    let (rest, excluded): (Vec<Summand<F>>, Vec<usize>) = if position < pair.summands.len() {
        let mut r = pair.summands.clone();
        r.remove(position);
        (r, pair.excluded.clone())
    } else {
        let mut e = pair.excluded.clone();
        e.remove(position - pair.summands.len());
        (pair.summands.clone(), e)
    };
    let new = match direction {
        Direction::Down => {
            let x = &pair.summands[position];
            let rest_modules: Vec<_> = rest.iter().map(|s| s.module.clone()).collect();
            down_element(alg, &x.module, &rest_modules, &excluded)?
        }
        Direction::Up => up_element(alg, pair, position)?,
    };
    let (summands, excluded, g) = match new {
        Element::Module(m) => {
            let s = Summand::new(alg, m);
            let g = s.g_vector.clone();
            let mut all = rest;
            all.push(s);
            (all, excluded, g)
        }
        Element::Vertex(v) => {
            let mut e = excluded;
            e.push(v);
            let mut g = vec![0; n];
            g[v] = -1;
            (rest, e, g)
        }
    };
    let pair = SttPair::new(summands, excluded);
    let position = pair.position_of(n, &g);
    Ok(Mutation { pair, position, direction })
}

/// Left mutation of `x` against the other summands `rest`: the cokernel of
/// a minimal left `add(rest)`-approximation, or a new excluded vertex when
/// that cokernel vanishes.
fn down_element<F: Field>(
    alg: &BoundAlgebra<F>,
    x: &Representation<F>,
    rest: &[Representation<F>],
    excluded: &[usize],
) -> Result<Element<F>, TauError> {
    let (target, f) = left_approximation(alg, x, rest)?;
    let y = f.cokernel(alg, &target).rep;
    let mut fresh: Vec<Representation<F>> = Vec::new();
    if !y.is_zero() {
        for s in decompose(alg, &y)?.summands {
            if !rest.iter().any(|r| indecomposables_isomorphic(alg, r, &s)) {
                fresh.push(s);
            }
        }
    }
    if let Some(first) = fresh.first() {
        if fresh.iter().any(|s| !indecomposables_isomorphic(alg, first, s)) {
            return Err(TauError::NotMutable("cokernel has several new summands".into()));
        }
        return Ok(Element::Module(first.clone()));
    }
    let candidates: Vec<usize> = (0..alg.num_vertices())
        .filter(|v| !excluded.contains(v) && rest.iter().all(|r| r.dim_at(*v) == 0))
        .collect();
    match candidates.as_slice() {
        [v] => Ok(Element::Vertex(*v)),
        _ => Err(TauError::NotMutable(format!("expected one new excluded vertex, found {}", candidates.len()))),
    }
}

/// Minimal left `add(rest)`-approximation `x -> U'`: for each summand `N`,
/// a basis of `Hom(x, N)` modulo maps factoring through radical maps into `N`.
pub fn left_approximation<F: Field>(
    alg: &BoundAlgebra<F>,
    x: &Representation<F>,
    rest: &[Representation<F>],
) -> Result<(Representation<F>, Morphism<F>), TauError> {
    let f = alg.field();
    let spaces: Vec<HomSpace<F>> = rest.iter().map(|n| HomSpace::new(alg, x, n)).collect();
    let mut parts = Vec::new();
    let mut chosen: Vec<Morphism<F>> = Vec::new();
    for (i, n) in rest.iter().enumerate() {
        let space = &spaces[i];
        if space.dim() == 0 {
            continue;
        }
        let mut factored: Vec<Vec<F::Elem>> = Vec::new();
        for (j, m) in rest.iter().enumerate() {
            if spaces[j].dim() == 0 {
                continue;
            }
            for h in radical_maps(alg, m, n, i == j)? {
                for g in &spaces[j].basis {
                    factored.push(space.coords(&h.compose(g)));
                }
            }
        }
        let span = Matrix::from_columns(f, space.dim(), &factored);
        for c in span.complement_columns().columns() {
            chosen.push(Morphism::combine(&space.basis, &c, x, n));
            parts.push(n.clone());
        }
    }
    let target = Representation::direct_sum(alg, &parts);
    let maps = (0..alg.num_vertices())
        .map(|v| chosen.iter().fold(Matrix::zeros(f, 0, x.dim_at(v)), |acc, g| acc.vstack(g.at(v))))
        .collect();
    Ok((target, Morphism::new(maps)))
}

/// Radical maps `m -> n` between indecomposables: everything when they are
/// different summands, the radical of the endomorphism ring otherwise.
fn radical_maps<F: Field>(
    alg: &BoundAlgebra<F>,
    m: &Representation<F>,
    n: &Representation<F>,
    same: bool,
) -> Result<Vec<Morphism<F>>, TauError> {
    if !same {
        return Ok(hom_basis(alg, m, n));
    }
    let (end, space) = end_algebra(alg, m);
    let rad = end.radical().map_err(crate::rep::RepError::from)?;
    Ok(rad.iter().map(|c| Morphism::combine(&space.basis, c, m, m)).collect())
}

/// Right mutation, computed as a left mutation over the opposite algebra
/// through the order-reversing bijection
/// `(M, P) -> (Tr M_np + P*, M_p*)`.
fn up_element<F: Field>(alg: &BoundAlgebra<F>, pair: &SttPair<F>, position: usize) -> Result<Element<F>, TauError> {
    let op = alg.opposite();
    let mut op_modules = Vec::new();
    let mut op_excluded = Vec::new();
    let mut target = None;
    for (i, s) in pair.summands.iter().enumerate() {
        let m = match s.projective {
            Some(v) => {
                op_excluded.push(v);
                continue;
            }
            None => transpose_of(alg, op, &s.presentation),
        };
        if i == position {
            target = Some(m);
        } else {
            op_modules.push(m);
        }
    }
    for (k, &v) in pair.excluded.iter().enumerate() {
        let m = projective_rep(op, v);
        if pair.summands.len() + k == position {
            target = Some(m);
        } else {
            op_modules.push(m);
        }
    }
    let target = target.ok_or_else(|| TauError::NotMutable("projective summands only mutate down".into()))?;
    let new = down_element(op, &target, &op_modules, &op_excluded)?;
    Ok(match new {
        Element::Vertex(v) => Element::Module(projective_rep(alg, v)),
        Element::Module(y) => {
            let pres = min_projective_presentation(op, &y);
            if pres.is_projective() {
                Element::Vertex(pres.top_vertices[0])
            } else {
                Element::Module(transpose_of(op, alg, &pres))
            }
        }
    })
}
