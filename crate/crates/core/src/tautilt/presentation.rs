use super::projective::{injective_rep, projective_sum};
use crate::bqa::BoundAlgebra;
use crate::exactla::sparse::{collect_sparse, SparseVec};
use crate::exactla::{Field, Matrix};
use crate::rep::{radical, Morphism, Representation};

/// `P_1 -> P_0 -> M -> 0` with both maps radical (minimal).
#[derive(Clone, Debug)]
pub struct ProjectivePresentation<F: Field> {
    /// Vertices of the summands of `P_0`, in order.
    pub top_vertices: Vec<usize>,
    /// Vertices of the summands of `P_1`, in order.
    pub relation_vertices: Vec<usize>,
    /// `blocks[k][l]` lies in `e_j A e_i` for `j = top_vertices[k]`,
    /// `i = relation_vertices[l]`; the component `P(i) -> P(j)` is `x -> c x`.
    pub blocks: Vec<Vec<SparseVec<F::Elem>>>,
    pub cover: Morphism<F>,
    pub map: Morphism<F>,
}

impl<F: Field> ProjectivePresentation<F> {
    /// `[P_0] - [P_1]` per vertex.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        let mut g = vec![0i64; n];
        for &v in &self.top_vertices {
            g[v] += 1;
        }
        for &v in &self.relation_vertices {
            g[v] -= 1;
        }
        g
    }

    pub fn is_projective(&self) -> bool {
        self.relation_vertices.is_empty()
    }
}

/// The morphism `P(v_1) + ... + P(v_r) -> target` sending the generator
/// of the `l`-th summand to `gens[l]` (a vector of `target` at `v_l`).
pub fn hom_from_projective_sum<F: Field>(
    alg: &BoundAlgebra<F>,
    vertices: &[usize],
    target: &Representation<F>,
    gens: &[Vec<F::Elem>],
) -> Morphism<F> {
    let f = alg.field();
    let maps = (0..alg.num_vertices())
        .map(|v| {
            let mut cols = Vec::new();
            for (l, &i) in vertices.iter().enumerate() {
                for &b in alg.paths_between(i, v) {
                    cols.push(target.act_basis(alg, b).mul_vec(&gens[l]));
                }
            }
            Matrix::from_columns(f, target.dim_at(v), &cols)
        })
        .collect();
    Morphism::new(maps)
}

/// Generators of `m` modulo its radical: `(vertex, vector)` pairs.
fn top_generators<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Vec<(usize, Vec<F::Elem>)> {
    let rad = radical(alg, m);
    let mut out = Vec::new();
    for v in 0..alg.num_vertices() {
        for c in rad.inclusion.at(v).complement_columns().columns() {
            out.push((v, c));
        }
    }
    out
}

pub fn min_projective_presentation<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> ProjectivePresentation<F> {
    let gens = top_generators(alg, m);
    let top_vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let p0 = projective_sum(alg, &top_vertices);
    let vecs: Vec<Vec<F::Elem>> = gens.into_iter().map(|(_, x)| x).collect();
    let cover = hom_from_projective_sum(alg, &top_vertices, m, &vecs);

    let kernel = cover.kernel(alg, &p0);
    let kgens = top_generators(alg, &kernel.rep);
    let relation_vertices: Vec<usize> = kgens.iter().map(|(v, _)| *v).collect();
    let images: Vec<Vec<F::Elem>> = kgens.iter().map(|(v, y)| kernel.inclusion.at(*v).mul_vec(y)).collect();
    let map = hom_from_projective_sum(alg, &relation_vertices, &p0, &images);

    // split each generator image along the summands of P_0
    let blocks = top_vertices
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            relation_vertices
                .iter()
                .zip(&images)
                .map(|(&i, img)| {
                    let offset: usize = top_vertices[..k].iter().map(|&t| alg.paths_between(t, i).len()).sum();
                    let paths = alg.paths_between(j, i);
                    collect_sparse(alg.field(), paths.iter().enumerate().map(|(r, &b)| (b, img[offset + r].clone())))
                })
                .collect()
        })
        .collect();
    ProjectivePresentation { top_vertices, relation_vertices, blocks, cover, map }
}

/// Matrix of `y -> y c` from paths `v -> j` to paths `v -> i`, for `c` in
/// `e_j A e_i`.
fn right_mult_block<F: Field>(alg: &BoundAlgebra<F>, v: usize, j: usize, i: usize, c: &SparseVec<F::Elem>) -> Matrix<F> {
    let f = alg.field();
    let from = alg.paths_between(v, j);
    let to = alg.paths_between(v, i);
    let mut m = Matrix::zeros(f, to.len(), from.len());
    for (col, &y) in from.iter().enumerate() {
        for (b, x) in c {
            for (k, t) in alg.mul_basis(y, *b) {
                let r = to.binary_search(k).expect("product stays in e_v A e_i");
                let cur = m.get(r, col).clone();
                m.set(r, col, f.add(&cur, &f.mul(x, t)));
            }
        }
    }
    m
}

/// The Nakayama functor on the presentation map: `nu P_1 -> nu P_0`
/// between sums of injectives, with `nu P(i) = I(i)`.
pub fn nakayama_of_map<F: Field>(
    alg: &BoundAlgebra<F>,
    pres: &ProjectivePresentation<F>,
) -> (Representation<F>, Representation<F>, Morphism<F>) {
    let f = alg.field();
    let src_parts: Vec<_> = pres.relation_vertices.iter().map(|&i| injective_rep(alg, i)).collect();
    let tgt_parts: Vec<_> = pres.top_vertices.iter().map(|&j| injective_rep(alg, j)).collect();
    let src = Representation::direct_sum(alg, &src_parts);
    let tgt = Representation::direct_sum(alg, &tgt_parts);
    let maps = (0..alg.num_vertices())
        .map(|v| {
            let mut m = Matrix::zeros(f, tgt.dim_at(v), src.dim_at(v));
            let mut r = 0;
            for (k, &j) in pres.top_vertices.iter().enumerate() {
                let mut c = 0;
                for (l, &i) in pres.relation_vertices.iter().enumerate() {
                    let block = right_mult_block(alg, v, j, i, &pres.blocks[k][l]).transpose();
                    m.set_block(r, c, &block);
                    c += alg.paths_between(v, i).len();
                }
                r += alg.paths_between(v, j).len();
            }
            m
        })
        .collect();
    (src, tgt, Morphism::new(maps))
}

/// Auslander-Reiten translate: the kernel of the Nakayama functor applied
/// to a minimal projective presentation.
pub fn tau<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Representation<F> {
    if m.is_zero() {
        return m.clone();
    }
    let pres = min_projective_presentation(alg, m);
    if pres.is_projective() {
        return Representation::zero(alg);
    }
    let (src, _, map) = nakayama_of_map(alg, &pres);
    map.kernel(alg, &src).rep
}

/// Image of an element under the anti-isomorphism to the opposite algebra
/// (reverse every path).
pub fn to_opposite<F: Field>(alg: &BoundAlgebra<F>, op: &BoundAlgebra<F>, c: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let f = alg.field();
    collect_sparse(
        f,
        c.iter().flat_map(|(b, x)| {
            op.path_nf(&alg.basis_path(*b).reversed()).into_iter().map(move |(k, y)| (k, f.mul(x, &y)))
        }),
    )
}

/// Auslander-Bridger transpose: the cokernel of `Hom(-, A)` applied to a
/// minimal presentation, as a representation of `op` (whose quiver must be
/// the opposite of `alg`'s).
pub fn transpose<F: Field>(alg: &BoundAlgebra<F>, op: &BoundAlgebra<F>, m: &Representation<F>) -> Representation<F> {
    let pres = min_projective_presentation(alg, m);
    transpose_of(alg, op, &pres)
}

pub fn transpose_of<F: Field>(alg: &BoundAlgebra<F>, op: &BoundAlgebra<F>, pres: &ProjectivePresentation<F>) -> Representation<F> {
    let f = alg.field();
    let target = projective_sum(op, &pres.relation_vertices);
    let gens: Vec<Vec<F::Elem>> = pres
        .top_vertices
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            let mut g = Vec::new();
            for (l, &i) in pres.relation_vertices.iter().enumerate() {
                let c = to_opposite(alg, op, &pres.blocks[k][l]);
                let paths = op.paths_between(i, j);
                let mut seg = vec![f.zero(); paths.len()];
                for (b, x) in c {
                    seg[paths.binary_search(&b).expect("reversed element lies in e_i A^op e_j")] = x;
                }
                g.extend(seg);
            }
            g
        })
        .collect();
    let map = hom_from_projective_sum(op, &pres.top_vertices, &target, &gens);
    map.cokernel(op, &target).rep
}
