//! Values computed independently by brute force over all flags (sympy), frozen here.

use topozeta::algebra::Polynomial;
use topozeta::zeta::{
    upsilon_by_flags, upsilon_by_mobius, upsilon_by_recurrence, zeta_by_flags, zeta_by_recurrence,
};
use topozeta::{Graph, Matroid, Rational, RationalFunction};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn rf(num: &[&str], den: &[&str]) -> RationalFunction {
    let p = |c: &[&str]| Polynomial::new(c.iter().map(|x| q(x)).collect());
    RationalFunction::new(p(num), p(den)).unwrap()
}

struct Case {
    name: &'static str,
    matroid: Matroid,
    zeta: RationalFunction,
    upsilon: RationalFunction,
    taylor: [&'static str; 5],
}

fn graph(name: &str) -> Matroid {
    Graph::named(name).unwrap().matroid().unwrap()
}

fn cases() -> Vec<Case> {
    let u = |r, n| Matroid::uniform(r, n).unwrap();
    vec![
        Case {
            name: "K4",
            matroid: graph("k4"),
            zeta: rf(&["2", "-1", "-2", "2"], &["2", "11", "22", "19", "6"]),
            upsilon: rf(
                &["0", "0", "0", "-32", "-36"],
                &["2", "11", "22", "19", "6"],
            ),
            taylor: ["1", "-6", "21", "-58", "142"],
        },
        Case {
            name: "K2,3",
            matroid: graph("k2,3"),
            zeta: rf(
                &["6", "-1", "-3", "6", "-2"],
                &["6", "35", "81", "93", "53", "12"],
            ),
            upsilon: rf(
                &["0", "0", "0", "0", "72", "84"],
                &["6", "35", "81", "93", "53", "12"],
            ),
            taylor: ["1", "-6", "21", "-56", "127"],
        },
        Case {
            name: "C4 with a chord",
            matroid: graph("c4chord"),
            zeta: rf(&["6", "1", "-6", "3"], &["6", "31", "59", "49", "15"]),
            upsilon: rf(
                &["0", "0", "0", "-48", "-60"],
                &["6", "31", "59", "49", "15"],
            ),
            taylor: ["1", "-5", "15", "-36", "461/6"],
        },
        Case {
            name: "U2,4 + U1,1",
            matroid: u(2, 4).direct_sum(&u(1, 1)).unwrap(),
            zeta: rf(&["1", "-1"], &["1", "4", "5", "2"]),
            upsilon: rf(&["0", "0", "0", "-6"], &["1", "4", "5", "2"]),
            taylor: ["1", "-5", "15", "-37", "83"],
        },
        Case {
            name: "U3,5",
            matroid: u(3, 5),
            zeta: rf(&["3", "-4", "3"], &["3", "11", "13", "5"]),
            upsilon: rf(&["0", "0", "0", "-30"], &["3", "11", "13", "5"]),
            taylor: ["1", "-5", "15", "-35", "215/3"],
        },
    ]
}

#[test]
fn zeta_matches_oracle() {
    for c in cases() {
        assert_eq!(zeta_by_flags(&c.matroid).unwrap(), c.zeta, "{}", c.name);
        assert_eq!(zeta_by_recurrence(&c.matroid), c.zeta, "{}", c.name);
    }
}

#[test]
fn upsilon_matches_oracle() {
    for c in cases() {
        assert_eq!(
            upsilon_by_mobius(&c.matroid).unwrap(),
            c.upsilon,
            "{}",
            c.name
        );
        assert_eq!(
            upsilon_by_recurrence(&c.matroid).unwrap(),
            c.upsilon,
            "{}",
            c.name
        );
        assert_eq!(
            upsilon_by_flags(&c.matroid).unwrap(),
            c.upsilon,
            "{}",
            c.name
        );
    }
}

#[test]
fn taylor_matches_oracle() {
    for c in cases() {
        let want: Vec<Rational> = c.taylor.iter().map(|x| q(x)).collect();
        assert_eq!(c.zeta.taylor(4).unwrap().coeffs(), &want[..], "{}", c.name);
    }
}

#[test]
fn worked_examples() {
    let u23 = Matroid::uniform(2, 3).unwrap();
    assert_eq!(zeta_by_recurrence(&u23), rf(&["2", "-1"], &["2", "5", "3"]));
    assert_eq!(
        upsilon_by_recurrence(&u23).unwrap(),
        rf(&["0", "0", "6"], &["2", "5", "3"])
    );
    let u13 = Matroid::uniform(1, 3).unwrap();
    assert_eq!(
        upsilon_by_recurrence(&u13).unwrap(),
        rf(&["0", "-3"], &["1", "3"])
    );
    let k = zeta_by_recurrence(&u23).kth_derivative_at_zero(2).unwrap();
    assert_eq!(k, q("12"));
}
