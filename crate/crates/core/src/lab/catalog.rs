//! A deterministic catalog of small loopless matroids.
//!
//! Entry names use the command-line spec syntax, so any reported entry can be
//! rebuilt with `topozeta zeta '<name>'`.

use std::collections::HashSet;

use serde::Serialize;

use crate::matroid::{Graph, Matroid, Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Uniform { r: usize, n: usize },
    Graphic { graph: String },
    Sum { left: String, right: String },
    Truncation { of: String },
    Extension { of: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(skip)]
    pub matroid: Matroid,
    pub provenance: Provenance,
    /// The summands of a direct sum, in order.
    #[serde(skip)]
    pub operands: Vec<Matroid>,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, matroid: Matroid, provenance: Provenance) -> Self {
        Self {
            name: name.into(),
            matroid,
            provenance,
            operands: Vec::new(),
        }
    }
}

/// Graphs included in every catalog, by [`Graph::named`] name.
pub const CATALOG_GRAPHS: &[&str] = &[
    "p1", "p2", "p3", "p4", "p5", "p6", "p7", "c3", "c4", "c5", "c6", "k4", "k2,3", "c4chord",
    "diamond",
];

struct Builder {
    entries: Vec<CatalogEntry>,
    seen: HashSet<(usize, Vec<Subset>)>,
}

impl Builder {
    fn push(&mut self, entry: CatalogEntry) {
        let key = (entry.matroid.size(), entry.matroid.bases().to_vec());
        if self.seen.insert(key) {
            self.entries.push(entry);
        }
    }
}

/// Uniform `U_{r,n}` for `1 <= r <= n <= max_ground`, the named graphs, all
/// pairwise sums of those, then one truncation and one free extension of each
/// entry of rank at least 2; entries with identical bases are kept once.
pub fn build_catalog(max_ground: usize) -> Vec<CatalogEntry> {
    let max_ground = max_ground.min(MAX_GROUND);
    let mut b = Builder {
        entries: Vec::new(),
        seen: HashSet::new(),
    };
    for n in 1..=max_ground {
        for r in 1..=n {
            let m = Matroid::uniform(r, n).expect("r <= n");
            b.push(CatalogEntry::new(
                format!("u:{r},{n}"),
                m,
                Provenance::Uniform { r, n },
            ));
        }
    }
    for &g in CATALOG_GRAPHS {
        let graph = Graph::named(g).expect("catalog graph names are valid");
        if graph.edges.len() > max_ground {
            continue;
        }
        let m = graph.matroid().expect("small graph");
        b.push(CatalogEntry::new(
            format!("g:{g}"),
            m,
            Provenance::Graphic {
                graph: g.to_string(),
            },
        ));
    }

    let base = b.entries.clone();
    for (i, x) in base.iter().enumerate() {
        for y in &base[i..] {
            if x.matroid.size() + y.matroid.size() > max_ground {
                continue;
            }
            let m = x.matroid.direct_sum(&y.matroid).expect("within bound");
            let mut entry = CatalogEntry::new(
                format!("{} + {}", x.name, y.name),
                m,
                Provenance::Sum {
                    left: x.name.clone(),
                    right: y.name.clone(),
                },
            );
            entry.operands = vec![x.matroid.clone(), y.matroid.clone()];
            b.push(entry);
        }
    }

    let before = b.entries.clone();
    for x in before.iter().filter(|x| x.matroid.rank() >= 2) {
        let m = x.matroid.truncation().expect("rank at least 1");
        b.push(CatalogEntry::new(
            format!("tr({})", x.name),
            m,
            Provenance::Truncation { of: x.name.clone() },
        ));
        if x.matroid.size() < max_ground {
            let m = x.matroid.free_extension().expect("within bound");
            b.push(CatalogEntry::new(
                format!("ext({})", x.name),
                m,
                Provenance::Extension { of: x.name.clone() },
            ));
        }
    }
    b.entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog_shape() {
        let cat = build_catalog(4);
        let uniform = cat
            .iter()
            .filter(|e| matches!(e.provenance, Provenance::Uniform { .. }))
            .count();
        assert_eq!(uniform, 10);
        assert!(cat.iter().all(|e| e.matroid.is_loopless()));
        assert!(cat.iter().all(|e| e.matroid.size() <= 4));
        // every cycle matroid is uniform, so C4 is kept under its uniform name
        assert!(cat.iter().all(|e| e.name != "g:c4"));
        let k4 = build_catalog(6)
            .into_iter()
            .find(|e| e.name == "g:k4")
            .unwrap();
        assert_eq!((k4.matroid.rank(), k4.matroid.girth()), (3, 3));
    }

    #[test]
    fn triangle_is_deduplicated_against_u23() {
        let cat = build_catalog(5);
        let u23 = Matroid::uniform(2, 3).unwrap();
        let hits: Vec<_> = cat.iter().filter(|e| e.matroid == u23).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].name, "u:2,3");
        assert_eq!(Graph::cycle(3).matroid().unwrap(), u23);
    }

    #[test]
    fn deterministic_and_unique() {
        let a: Vec<String> = build_catalog(6).into_iter().map(|e| e.name).collect();
        let b: Vec<String> = build_catalog(6).into_iter().map(|e| e.name).collect();
        assert_eq!(a, b);
        let cat = build_catalog(6);
        let keys: HashSet<_> = cat.iter().map(|e| e.matroid.bases().to_vec()).collect();
        assert_eq!(keys.len(), cat.len());
    }

    #[test]
    fn empty_catalog() {
        assert!(build_catalog(0).is_empty());
    }

    #[test]
    fn sums_keep_operands() {
        for e in build_catalog(5) {
            if let Provenance::Sum { .. } = e.provenance {
                let [a, b] = &e.operands[..] else { panic!() };
                assert_eq!(a.direct_sum(b).unwrap(), e.matroid);
            }
        }
    }
}
