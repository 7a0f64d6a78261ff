use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::pair::{mutate, PairKey, SttPair};
use super::TauError;
use crate::bqa::BoundAlgebra;
use crate::exactla::Field;
use crate::rep::in_fac;

pub const DEFAULT_CAP: usize = 10_000;

/// Support τ-tilting pairs reached by mutation from `(A, 0)`, with the
/// Hasse arrows of the torsion-class order.
#[derive(Clone, Debug)]
pub struct ExchangeGraph<F: Field> {
    pub vertices: usize,
    /// Sorted by key.
    pub nodes: Vec<SttPair<F>>,
    /// `(larger, smaller)`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// False when the cap stopped the search.
    pub complete: bool,
}

pub fn explore<F: Field>(alg: &BoundAlgebra<F>, cap: usize) -> Result<ExchangeGraph<F>, TauError> {
    let n = alg.num_vertices();
    let start = SttPair::regular(alg);
    let mut nodes = vec![start.clone()];
    let mut index: BTreeMap<PairKey, usize> = BTreeMap::from([(start.key(n), 0)]);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    let mut complete = cap >= 1;
    if !complete {
        nodes.clear();
        queue.clear();
    }
    while let Some(i) = queue.pop_front() {
        for pos in 0..n {
            let m = mutate(alg, &nodes[i], pos)?;
            let key = m.pair.key(n);
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= cap {
                        complete = false;
                        continue;
                    }
                    nodes.push(m.pair);
                    index.insert(key, nodes.len() - 1);
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            if !edges.contains(&(i, j)) && !edges.contains(&(j, i)) {
                edges.insert(orient(alg, &nodes, i, j));
            }
        }
    }
    // renumber by key
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    let keys: Vec<PairKey> = nodes.iter().map(|p| p.key(n)).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = vec![0; nodes.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut slots: Vec<Option<SttPair<F>>> = nodes.into_iter().map(Some).collect();
    let nodes = order.iter().map(|&o| slots[o].take().unwrap()).collect();
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (rank[a], rank[b])).collect();
    edges.sort_unstable();
    Ok(ExchangeGraph { vertices: n, nodes, edges, complete })
}

/// `(larger, smaller)`: the larger pair's module generates the other's.
fn orient<F: Field>(alg: &BoundAlgebra<F>, nodes: &[SttPair<F>], i: usize, j: usize) -> (usize, usize) {
    if in_fac(alg, &nodes[i].module(alg), &nodes[j].module(alg)) {
        (i, j)
    } else {
        (j, i)
    }
}

impl<F: Field> ExchangeGraph<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn keys(&self) -> Vec<PairKey> {
        self.nodes.iter().map(|p| p.key(self.vertices)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn is_regular(&self) -> bool {
        self.degrees().iter().all(|&d| d == self.vertices)
    }

    pub fn poset(&self) -> Poset {
        Poset::from_hasse(self.nodes.len(), &self.edges)
    }

    /// Graphviz rendering, nodes labelled by their g-vectors.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph exchange {\n  rankdir=TB;\n");
        for (i, k) in self.keys().iter().enumerate() {
            let label: Vec<String> =
                k.iter().map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", label.join(" ")));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        if !self.complete {
            s.push_str("  // incomplete: node cap reached\n");
        }
        s.push_str("}\n");
        s
    }
}

/// A finite poset given by its Hasse arrows `(larger, smaller)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub size: usize,
    pub hasse: Vec<(usize, usize)>,
    /// `above[a][b]`: `a >= b`.
    pub above: Vec<Vec<bool>>,
}

impl Poset {
    pub fn from_hasse(size: usize, hasse: &[(usize, usize)]) -> Self {
        let mut above = vec![vec![false; size]; size];
        for (a, row) in above.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in hasse {
            above[a][b] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if above[i][k] {
                    for j in 0..size {
                        if above[k][j] {
                            above[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut hasse = hasse.to_vec();
        hasse.sort_unstable();
        Poset { size, hasse, above }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[b][a]
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| (0..self.size).all(|b| b == a || !self.above[b][a])).collect()
    }

    /// Per element: covers above, covers below, elements above, elements below.
    fn invariants(&self) -> Vec<[usize; 4]> {
        (0..self.size)
            .map(|a| {
                let up = self.hasse.iter().filter(|e| e.1 == a).count();
                let down = self.hasse.iter().filter(|e| e.0 == a).count();
                let ge = (0..self.size).filter(|&b| self.above[b][a]).count();
                let le = (0..self.size).filter(|&b| self.above[a][b]).count();
                [up, down, ge, le]
            })
            .collect()
    }
}

/// An order isomorphism between two explored posets, if one exists.
/// Both graphs must be complete.
pub fn poset_isomorphic<F: Field, G: Field>(a: &ExchangeGraph<F>, b: &ExchangeGraph<G>) -> Result<Option<Vec<usize>>, TauError> {
    if !a.complete || !b.complete {
        return Err(TauError::Incomplete);
    }
    Ok(order_isomorphism(&a.poset(), &b.poset()))
}

/// Backtracking search for a bijection preserving the order both ways.
pub fn order_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.size != q.size || p.hasse.len() != q.hasse.len() {
        return None;
    }
    let (ip, iq) = (p.invariants(), q.invariants());
    let mut sp = ip.clone();
    let mut sq = iq.clone();
    sp.sort();
    sq.sort();
    if sp != sq {
        return None;
    }
    // place elements from the top down so constraints bite early
    let mut order: Vec<usize> = (0..p.size).collect();
    order.sort_by_key(|&a| (ip[a][2], a));
    let mut map = vec![usize::MAX; p.size];
    let mut used = vec![false; q.size];
    fn go(k: usize, order: &[usize], p: &Poset, q: &Poset, ip: &[[usize; 4]], iq: &[[usize; 4]], map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&a) = order.get(k) else {
            return true;
        };
        for c in 0..q.size {
            if used[c] || ip[a] != iq[c] {
                continue;
            }
            let consistent = order[..k].iter().all(|&b| {
                let d = map[b];
                p.above[a][b] == q.above[c][d] && p.above[b][a] == q.above[d][c]
            });
            if !consistent {
                continue;
            }
            map[a] = c;
            used[c] = true;
            if go(k + 1, order, p, q, ip, iq, map, used) {
                return true;
            }
            used[c] = false;
            map[a] = usize::MAX;
        }
        false
    }
    go(0, &order, p, q, &ip, &iq, &mut map, &mut used).then_some(map)
}
