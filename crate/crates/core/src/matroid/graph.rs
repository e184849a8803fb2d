use super::{k_subsets, Matroid, Subset, Validation, MAX_GROUND};
use crate::error::{Error, Result};

/// A multigraph on vertices `0..vertices`; edge `i` becomes ground element `i`
/// of the cycle matroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { vertices, edges }
    }

    /// Path with `len` edges.
    pub fn path(len: usize) -> Self {
        Self::new(len + 1, (0..len).map(|i| (i, i + 1)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::new(n, edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|i| (0..b).map(move |j| (i, a + j)))
            .collect();
        Self::new(a + b, edges)
    }

    /// Named small graphs: `p<k>` (path with k edges), `c<k>`, `k<k>`,
    /// `k<a>,<b>`, `c4chord` (4-cycle plus the chord 0-2) and `diamond` (two
    /// triangles sharing the edge 1-2).
    pub fn named(name: &str) -> Option<Self> {
        let num = |s: &str| s.parse::<usize>().ok();
        match name {
            "c4chord" => {
                let mut g = Self::cycle(4);
                g.edges.push((0, 2));
                Some(g)
            }
            "diamond" => Some(Self::new(4, vec![(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])),
            _ => {
                let (head, rest) = name.split_at(1.min(name.len()));
                match (head, rest.split_once(',')) {
                    ("k", Some((a, b))) => Some(Self::complete_bipartite(num(a)?, num(b)?)),
                    ("p", None) => Some(Self::path(num(rest)?)),
                    ("c", None) => num(rest).filter(|&n| n >= 1).map(Self::cycle),
                    ("k", None) => Some(Self::complete(num(rest)?)),
                    _ => None,
                }
            }
        }
    }

    fn components_of(&self, edges: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        let mut comps = self.vertices;
        for e in edges.elements() {
            let (u, w) = self.edges[e];
            if uf.union(u, w) {
                comps -= 1;
            }
        }
        comps
    }

    fn is_forest(&self, edges: Subset) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        edges.elements().all(|e| {
            let (u, w) = self.edges[e];
            uf.union(u, w)
        })
    }

    /// The cycle matroid: bases are the spanning forests.
    pub fn matroid(&self) -> Result<Matroid> {
        let n = self.edges.len();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n,
                max: MAX_GROUND,
            });
        }
        for &(u, w) in &self.edges {
            let v = u.max(w);
            if v >= self.vertices {
                return Err(Error::ElementOutOfRange {
                    element: v,
                    size: self.vertices,
                });
            }
        }
        let rank = self.vertices - self.components_of(Subset::full(n));
        let bases = k_subsets(n, rank).filter(|&s| self.is_forest(s));
        Matroid::from_bases(n, bases, Validation::Trusted)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_u23() {
        let m = Graph::cycle(3).matroid().unwrap();
        assert_eq!(m.bases().len(), 3);
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn single_and_parallel_edges() {
        assert_eq!(
            Graph::path(1).matroid().unwrap(),
            Matroid::uniform(1, 1).unwrap()
        );
        let parallel = Graph::new(2, vec![(0, 1), (0, 1)]);
        assert_eq!(parallel.matroid().unwrap(), Matroid::uniform(1, 2).unwrap());
    }

    #[test]
    fn self_loop_is_matroid_loop() {
        let g = Graph::new(2, vec![(0, 1), (1, 1)]);
        let m = g.matroid().unwrap();
        assert_eq!(m.loops(), Subset::singleton(1));
    }

    #[test]
    fn k4_has_sixteen_spanning_trees() {
        let m = Graph::complete(4).matroid().unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 16);
        assert_eq!(m.girth(), 3);
    }

    #[test]
    fn disconnected_graph_uses_forests() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (3, 4)]);
        let m = g.matroid().unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 3);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::named("k4"), Some(Graph::complete(4)));
        assert_eq!(Graph::named("k2,3"), Some(Graph::complete_bipartite(2, 3)));
        assert_eq!(Graph::named("c5"), Some(Graph::cycle(5)));
        assert_eq!(Graph::named("p3"), Some(Graph::path(3)));
        assert_eq!(Graph::named("c4chord").unwrap().edges.len(), 5);
        let d = Graph::named("diamond").unwrap().matroid().unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.girth(), 3);
        assert_eq!(d.bases().len(), 8);
        assert_eq!(Graph::named("x"), None);
        assert_eq!(Graph::named("k"), None);
        assert_eq!(Graph::named(""), None);
    }

    #[test]
    fn bad_vertex() {
        assert!(Graph::new(2, vec![(0, 2)]).matroid().is_err());
    }
}
