//! Fraction-free helpers over integer coefficient vectors, used for gcds.

use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) fn trim<I: Zero>(p: &mut Vec<I>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content<I: Integer + Signed + Clone>(p: &[I]) -> I {
    p.iter().fold(I::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive<I: Integer + Signed + Clone>(mut p: Vec<I>) -> Vec<I> {
    trim(&mut p);
    let Some(lead) = p.last() else {
        return p;
    };
    let mut c = content(&p);
    if lead.is_negative() {
        c = -c;
    }
    p.into_iter().map(|x| x / c.clone()).collect()
}

/// Pseudo-remainder of `a` by nonzero `b`: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem<I: Integer + Signed + Clone>(a: &[I], b: &[I]) -> Vec<I> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.clone() * lb.clone();
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].clone() - lr.clone() * bc.clone();
        }
        trim(&mut r);
    }
    r
}

/// Primitive-PRS gcd. Result is primitive with positive leading coefficient;
/// `gcd(0, 0)` is the empty vector.
pub(crate) fn gcd<I: Integer + Signed + Clone>(a: Vec<I>, b: Vec<I>) -> Vec<I> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}
