use std::fmt::Write;

use super::quiver::Quiver;
use super::BqaError;
use crate::exactla::Field;

/// A path written left to right: `arrows[0]` is traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    pub fn new(q: &Quiver, source: usize, arrows: Vec<usize>) -> Result<Self, BqaError> {
        let mut at = source;
        for &a in &arrows {
            let ar = q.arrow(a);
            if ar.source != at {
                return Err(BqaError::NotComposable(format!("arrow {} does not start at {}", ar.id, q.vertex(at))));
            }
            at = ar.target;
        }
        Ok(Path { source, target: at, arrows })
    }

    /// Path through the named arrows; the source is taken from the first one.
    pub fn from_ids(q: &Quiver, ids: &[&str]) -> Result<Self, BqaError> {
        let arrows = ids.iter().map(|id| q.arrow_index(id)).collect::<Result<Vec<_>, _>>()?;
        let Some(&first) = arrows.first() else {
            return Err(BqaError::NotComposable("empty arrow list".into()));
        };
        Self::new(q, q.arrow(first).source, arrows)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// The same arrows read backwards, as a path of the opposite quiver.
    pub fn reversed(&self) -> Path {
        Path { source: self.target, target: self.source, arrows: self.arrows.iter().rev().copied().collect() }
    }

    /// `e(v)` for trivial paths, otherwise arrow ids joined by dots.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e({})", q.vertex(self.source));
        }
        let ids: Vec<&str> = self.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect();
        ids.join(".")
    }
}

/// A linear combination of parallel paths, generating part of the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Path)>,
}

impl<F: Field> Relation<F> {
    /// Merges repeated paths, drops zero terms and checks parallelism.
    pub fn new(f: F, terms: Vec<(F::Elem, Path)>) -> Result<Self, BqaError> {
        let mut merged: Vec<(F::Elem, Path)> = Vec::new();
        for (c, p) in terms {
            match merged.iter_mut().find(|(_, q)| *q == p) {
                Some(t) => t.0 = f.add(&t.0, &c),
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !f.is_zero(c));
        let Some((_, first)) = merged.first() else {
            return Err(BqaError::EmptyRelation);
        };
        let (s, t) = (first.source, first.target);
        if merged.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(BqaError::RelationNotParallel);
        }
        Ok(Relation { terms: merged })
    }

    pub fn monomial(f: F, p: Path) -> Self {
        Relation { terms: vec![(f.one(), p)] }
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    /// Common length of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.terms[0].1.len();
        self.terms.iter().all(|(_, p)| p.len() == d).then_some(d)
    }

    pub fn display(&self, f: F, q: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = f.neg(c);
            // print "- c" when -c looks simpler than c, e.g. for -1 over Q
            let (sign, mag) = if f.characteristic() == 0 && c.to_string().starts_with('-') {
                ("-", neg)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let _ = write!(out, "{mag} * {}", p.display(q));
        }
        out
    }
}

/// Every path of the given length using only the listed arrows.
pub fn paths_of_length(q: &Quiver, arrows: &[usize], len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = Vec::new();
    for v in 0..q.num_vertices() {
        let mut frontier = vec![Path::trivial(v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &frontier {
                for &a in arrows {
                    if q.arrow(a).source == p.target {
                        next.push(p.concat(&Path::arrow(q, a)).unwrap());
                    }
                }
            }
            frontier = next;
        }
        out.extend(frontier);
    }
    out
}
