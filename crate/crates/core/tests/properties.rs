use std::collections::VecDeque;

use proptest::prelude::*;

use topozeta::algebra::Polynomial;
use topozeta::lattice::{characteristic_polynomial, LatticeOfFlats};
use topozeta::matroid::{Subset, Validation};
use topozeta::zeta::{zeta_by_flags, zeta_by_recurrence};
use topozeta::{Graph, Matroid, Rational, RationalFunction};

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 0..=max_degree + 1).prop_map(|cs| {
        Polynomial::new(
            cs.into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    })
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    poly_strategy(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly_strategy(3), nonzero_poly(3)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Multigraphs without self-loops, so their cycle matroids are loopless.
fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=5).prop_flat_map(|v| {
        prop::collection::vec(
            (0..v, 0..v).prop_filter("no self-loops", |(a, b)| a != b),
            1..=7,
        )
        .prop_map(move |edges| Graph::new(v, edges))
    })
}

/// Graphic matroids, uniform matroids, and sums and truncations of those.
fn matroid_strategy() -> impl Strategy<Value = Matroid> {
    let uniform = (1usize..=5)
        .prop_flat_map(|n| (0..=n, Just(n)))
        .prop_map(|(r, n)| Matroid::uniform(r, n).unwrap());
    let graphic = graph_strategy().prop_map(|g| g.matroid().unwrap());
    let leaf = prop_oneof![uniform, graphic];
    leaf.prop_recursive(2, 4, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_filter("small", |(a, b)| a.size() + b.size() <= 8)
                .prop_map(|(a, b)| a.direct_sum(&b).unwrap()),
            inner
                .prop_filter("rank >= 1", |m| m.rank() >= 1)
                .prop_map(|m| m.truncation().unwrap()),
        ]
    })
}

/// Shortest cycle by BFS from every edge's endpoints; parallel edges give 2.
fn bfs_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (skip, &(a, b)) in g.edges.iter().enumerate() {
        let mut dist = vec![usize::MAX; g.vertices];
        let mut queue = VecDeque::from([a]);
        dist[a] = 0;
        while let Some(x) = queue.pop_front() {
            for (i, &(u, w)) in g.edges.iter().enumerate() {
                if i == skip {
                    continue;
                }
                let y = if u == x {
                    w
                } else if w == x {
                    u
                } else {
                    continue;
                };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |c| c.min(len)));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn exact_division(a in poly_strategy(4), b in nonzero_poly(3)) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a.clone());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
    }

    #[test]
    fn taylor_of_polynomial_is_its_coefficients(p in poly_strategy(5)) {
        let f = RationalFunction::from_polynomial(p.clone());
        let prefix = f.taylor(6).unwrap();
        for (i, c) in prefix.coeffs().iter().enumerate() {
            prop_assert_eq!(c, &p.coeff(i));
        }
    }

    #[test]
    fn basis_exchange(m in matroid_strategy()) {
        for &a in m.bases() {
            for &b in m.bases() {
                for x in (a - b).elements() {
                    let ok = (b - a).elements().any(|y| m.is_basis(a.without(x).with(y)));
                    prop_assert!(ok);
                }
            }
        }
    }

    #[test]
    fn rank_axioms(m in matroid_strategy()) {
        let ground = m.ground();
        for s in ground.subsets() {
            prop_assert!(m.rk(s) <= s.len());
            for e in (ground - s).elements() {
                let t = s.with(e);
                prop_assert!(m.rk(s) <= m.rk(t) && m.rk(t) <= m.rk(s) + 1);
            }
        }
        let all: Vec<Subset> = ground.subsets().collect();
        for &s in all.iter().step_by(3) {
            for &t in all.iter().step_by(5) {
                prop_assert!(m.rk(s | t) + m.rk(s & t) <= m.rk(s) + m.rk(t));
            }
        }
    }

    #[test]
    fn closure_operator(m in matroid_strategy()) {
        for s in m.ground().subsets() {
            let c = m.cl(s);
            prop_assert!(s.is_subset_of(c));
            prop_assert_eq!(m.cl(c), c);
            prop_assert_eq!(m.rk(c), m.rk(s));
            prop_assert!(m.is_flat(c));
        }
    }

    #[test]
    fn bases_round_trip(m in matroid_strategy()) {
        let rebuilt = Matroid::from_bases(m.size(), m.bases().iter().copied(), Validation::Full).unwrap();
        prop_assert_eq!(rebuilt, m);
    }

    #[test]
    fn girth_matches_bfs(g in graph_strategy()) {
        let m = g.matroid().unwrap();
        let want = bfs_girth(&g).unwrap_or(m.size() + 1);
        prop_assert_eq!(m.girth(), want);
    }

    #[test]
    fn degenerations_keep_size_and_rank(m in matroid_strategy()) {
        prop_assume!(m.is_loopless());
        let l = LatticeOfFlats::new(&m).unwrap();
        for flag in l.flags(100_000).take(50) {
            let flag = flag.unwrap();
            let d = m.degeneration(&flag).unwrap();
            prop_assert_eq!(d.size(), m.size());
            prop_assert_eq!(d.rank(), m.rank());
            let steps: usize = flag.steps().map(|(a, b)| m.rk(b) - m.rk(a)).sum();
            prop_assert_eq!(steps, m.rank());
        }
    }

    #[test]
    fn truncation_removes_corank_one_flats(m in matroid_strategy()) {
        prop_assume!(m.is_loopless() && m.rank() >= 2);
        let l = LatticeOfFlats::new(&m).unwrap();
        let t = LatticeOfFlats::new(&m.truncation().unwrap()).unwrap();
        let mut want: Vec<Subset> = l.flats().iter().copied().filter(|&f| m.rk(f) + 1 != m.rank()).collect();
        want.sort_unstable();
        let mut got = t.flats().to_vec();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn char_poly_is_multiplicative(a in matroid_strategy(), b in matroid_strategy()) {
        prop_assume!(a.size() + b.size() <= 10);
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(
            characteristic_polynomial(&sum),
            &characteristic_polynomial(&a) * &characteristic_polynomial(&b)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn zeta_algorithms_agree(g in graph_strategy()) {
        let m = g.matroid().unwrap();
        prop_assert_eq!(zeta_by_flags(&m).unwrap(), zeta_by_recurrence(&m));
    }

    #[test]
    fn zeta_is_multiplicative(a in matroid_strategy(), b in matroid_strategy()) {
        prop_assume!(a.size() + b.size() <= 9);
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(zeta_by_recurrence(&sum), zeta_by_recurrence(&a) * zeta_by_recurrence(&b));
    }
}
