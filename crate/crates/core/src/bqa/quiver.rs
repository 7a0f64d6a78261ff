use std::collections::HashMap;

use serde::Serialize;

use super::BqaError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Finite directed multigraph. Vertices and arrows are addressed by
/// declaration index; string ids are kept for I/O.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    #[serde(skip)]
    vertex_lookup: HashMap<String, usize>,
    #[serde(skip)]
    arrow_lookup: HashMap<String, usize>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Quiver from vertex ids and `(id, source id, target id)` triples.
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, BqaError> {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (id, s, t) in arrows {
            let s = q.vertex_index(s)?;
            let t = q.vertex_index(t)?;
            q.add_arrow(id, s, t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, id: &str) -> Result<usize, BqaError> {
        if self.vertex_lookup.contains_key(id) {
            return Err(BqaError::DuplicateVertex(id.to_string()));
        }
        let i = self.vertices.len();
        self.vertices.push(id.to_string());
        self.vertex_lookup.insert(id.to_string(), i);
        Ok(i)
    }

    pub fn add_arrow(&mut self, id: &str, source: usize, target: usize) -> Result<usize, BqaError> {
        if self.arrow_lookup.contains_key(id) {
            return Err(BqaError::DuplicateArrow(id.to_string()));
        }
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(BqaError::UnknownVertex(v.to_string()));
            }
        }
        let i = self.arrows.len();
        self.arrows.push(Arrow { id: id.to_string(), source, target });
        self.arrow_lookup.insert(id.to_string(), i);
        Ok(i)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, BqaError> {
        self.vertex_lookup.get(id).copied().ok_or_else(|| BqaError::UnknownVertex(id.to_string()))
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize, BqaError> {
        self.arrow_lookup.get(id).copied().ok_or_else(|| BqaError::UnknownArrow(id.to_string()))
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Same vertices, every arrow reversed (ids kept).
    pub fn opposite(&self) -> Quiver {
        let mut q = Quiver::new();
        for v in &self.vertices {
            q.add_vertex(v).unwrap();
        }
        for a in &self.arrows {
            q.add_arrow(&a.id, a.target, a.source).unwrap();
        }
        q
    }

    /// Two distinct non-loop arrows with the same source and target.
    pub fn has_multiple_arrow(&self) -> bool {
        self.multiple_arrow().is_some()
    }

    pub fn multiple_arrow(&self) -> Option<(usize, usize)> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.is_loop() {
                continue;
            }
            for (j, b) in self.arrows.iter().enumerate().skip(i + 1) {
                if a.source == b.source && a.target == b.target {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Connectedness of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                let other = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiple_arrows() {
        let kron = Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert!(kron.has_multiple_arrow());
        let two_cycle = Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(!two_cycle.has_multiple_arrow());
        let loops = Quiver::from_parts(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        assert!(!loops.has_multiple_arrow());
    }

    #[test]
    fn connectivity() {
        let q = Quiver::from_parts(&["1", "2"], &[("a", "2", "1")]).unwrap();
        assert!(q.is_connected());
        assert!(!Quiver::from_parts(&["1", "2"], &[]).unwrap().is_connected());
        assert!(Quiver::from_parts(&["1"], &[]).unwrap().is_connected());
    }

    #[test]
    fn rejects_duplicates_and_unknowns() {
        assert!(matches!(Quiver::from_parts(&["1", "1"], &[]), Err(BqaError::DuplicateVertex(_))));
        assert!(matches!(Quiver::from_parts(&["1"], &[("a", "1", "2")]), Err(BqaError::UnknownVertex(_))));
    }
}
