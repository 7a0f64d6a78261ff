use serde::Serialize;

use super::algebra::BoundAlgebra;
use super::path::Path;
use super::quiver::Quiver;
use crate::exactla::Field;

/// An oriented cycle through distinct vertices, read from its base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub arrows: Vec<usize>,
    /// `vertices[i]` is the source of `arrows[i]`; position 0 is the base.
    pub vertices: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn base(&self) -> usize {
        self.vertices[0]
    }

    /// Quiver vertex at 1-based cycle position `i`, read cyclically.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.vertices[(i + self.len() - 1) % self.len()]
    }

    /// Arrow at 1-based cycle position `i`, read cyclically.
    pub fn arrow_at(&self, i: usize) -> usize {
        self.arrows[(i + self.len() - 1) % self.len()]
    }

    pub fn path(&self, q: &Quiver) -> Path {
        Path::new(q, self.base(), self.arrows.clone()).expect("cycle arrows compose")
    }

    pub fn ids(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.arrow(a).id.clone()).collect()
    }
}

/// Shortest cycle of length at least 2 whose composite is nonzero.
///
/// Only cycles through distinct vertices are searched; a shortest nonzero
/// non-loop cycle always has that form, since any closed sub-walk of a
/// nonzero path is nonzero. Ties go to the smallest base vertex, then the
/// lexicographically smallest arrow sequence (declaration order).
pub fn find_minimal_nonzero_cycle<F: Field>(alg: &BoundAlgebra<F>) -> Option<Cycle> {
    let q = alg.quiver();
    for len in 2..=q.num_vertices() {
        for base in 0..q.num_vertices() {
            let mut arrows = Vec::new();
            let mut on_path = vec![false; q.num_vertices()];
            on_path[base] = true;
            if let Some(c) = search(alg, base, base, len, &mut arrows, &mut on_path) {
                return Some(c);
            }
        }
    }
    None
}

fn search<F: Field>(
    alg: &BoundAlgebra<F>,
    base: usize,
    at: usize,
    len: usize,
    arrows: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
) -> Option<Cycle> {
    let q = alg.quiver();
    let out: Vec<usize> = q.arrows_from(at).collect();
    for a in out {
        let t = q.arrow(a).target;
        let closing = arrows.len() + 1 == len;
        if closing != (t == base) || (t != base && on_path[t]) {
            continue;
        }
        arrows.push(a);
        // prefixes of a nonzero path are nonzero, so prune zero prefixes
        let p = Path::new(q, base, arrows.clone()).unwrap();
        if !alg.path_is_zero(&p) {
            if closing {
                let mut vertices = vec![base];
                for &b in &arrows[..arrows.len() - 1] {
                    vertices.push(q.arrow(b).target);
                }
                return Some(Cycle { arrows: arrows.clone(), vertices });
            }
            on_path[t] = true;
            let found = search(alg, base, t, len, arrows, on_path);
            on_path[t] = false;
            if found.is_some() {
                return found;
            }
        }
        arrows.pop();
    }
    None
}
