use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{intpoly, nat, Coefficient, Scalar};
use crate::error::{Error, Result};
use crate::Rational;

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector; every other value has
/// a nonzero last coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T = Rational> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        intpoly::trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `slope * x + intercept`.
    pub fn linear(slope: T, intercept: T) -> Self {
        Self::new(vec![intercept, slope])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * nat::<T>(i))
                .collect(),
        )
    }

    pub fn map<U: Coefficient>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Quotient of an exact division. Works over any coefficient ring as long
    /// as every step divides exactly; anything else is an error.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if rem.is_empty() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.clone() / dlead.clone();
            if q.clone() * dlead.clone() != top {
                return Err(Error::InexactDivision);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * dc.clone();
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a
    where
        T: fmt::Display,
    {
        Rendered { poly: self, var }
    }
}

impl<T: Scalar> Polynomial<T> {
    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let q = rem[shift + dd].clone() / dlead.clone();
            if q.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * dc.clone();
            }
            quot[shift] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Splits `self = factor * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient. Zero maps to `(1, 0)`.
    pub fn primitive_split(&self) -> (T, Self) {
        if self.is_zero() {
            return (T::one(), Self::zero());
        }
        let denom_lcm = self.coeffs.iter().fold(T::Int::one(), |l, c| {
            num_integer::Integer::lcm(&l, &c.denom_int())
        });
        let ints: Vec<T::Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer_int() * (denom_lcm.clone() / c.denom_int()))
            .collect();
        let mut content = intpoly::content(&ints);
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = Self::new(
            ints.into_iter()
                .map(|c| T::from_int(c / content.clone()))
                .collect(),
        );
        let factor = T::from_int(content) / T::from_int(denom_lcm);
        (factor, prim)
    }

    /// Greatest common divisor, normalized to be integer-primitive with a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = self.primitive_split().1;
        let b = other.primitive_split().1;
        let g = intpoly::gcd(
            a.coeffs.iter().map(Scalar::numer_int).collect(),
            b.coeffs.iter().map(Scalar::numer_int).collect(),
        );
        Self::new(g.into_iter().map(T::from_int).collect())
    }
}

struct Rendered<'a, T> {
    poly: &'a Polynomial<T>,
    var: &'a str,
}

impl<T: Coefficient + fmt::Display> fmt::Display for Rendered<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(self.var)?,
                (_, false) => write!(f, "{mag}*{}", self.var)?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("x").fmt(f)
    }
}

impl<T: Coefficient> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<T: Coefficient> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + c.clone();
        }
        Polynomial::new(out)
    }
}

impl<T: Coefficient> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Coefficient> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coefficient> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl<T: Coefficient> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Coefficient> AddAssign<&Polynomial<T>> for Polynomial<T> {
    fn add_assign(&mut self, rhs: &Polynomial<T>) {
        *self = &*self + rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::new(
            c.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_is_empty() {
        assert!(q(&[0, 0]).coeffs().is_empty());
        assert_eq!(q(&[]).degree(), None);
        assert_eq!(q(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn horner_eval() {
        assert_eq!(q(&[2, -3, 1]).eval(&r(1, 1)), r(0, 1));
        assert_eq!(q(&[-2, 1]).eval(&r(1, 1)), r(-1, 1));
        assert_eq!(q(&[1, 1, 1]).eval(&r(1, 1)), r(3, 1));
        assert_eq!(q(&[1, 1, 1]).eval(&r(1, 2)), r(7, 4));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            q(&[2, -3, 1]).divide_exact(&q(&[-1, 1])).unwrap(),
            q(&[-2, 1])
        );
        assert_eq!(q(&[5, 0, 3]).divide_exact(&q(&[1])).unwrap(), q(&[5, 0, 3]));
        assert_eq!(
            q(&[1, -2, 1]).divide_exact(&q(&[-1, 1])).unwrap(),
            q(&[-1, 1])
        );
        assert_eq!(q(&[]).divide_exact(&q(&[-1, 1])).unwrap(), q(&[]));
    }

    #[test]
    fn exact_division_rejects_remainder() {
        assert_eq!(
            q(&[1, -3, 1]).divide_exact(&q(&[-1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            q(&[3]).divide_exact(&q(&[-1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(q(&[1]).divide_exact(&q(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_exact_division() {
        let p = Polynomial::new(vec![2i64, -3, 1]);
        assert_eq!(
            p.divide_exact(&Polynomial::new(vec![-1, 1]))
                .unwrap()
                .coeffs(),
            &[-2, 1]
        );
        // 2x + 1 is not divisible by 2 over the integers
        let odd = Polynomial::new(vec![1i64, 2]);
        assert_eq!(
            odd.divide_exact(&Polynomial::constant(2)),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn div_rem_identity() {
        let a = q(&[1, 2, 3, 4]);
        let b = q(&[1, 0, 2]);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert!(rem.degree().unwrap() < 2);
        assert_eq!(&(&quot * &b) + &rem, a);
    }

    #[test]
    fn primitive_split_normalizes() {
        let p = Polynomial::new(vec![r(-1, 2), r(-3, 4)]);
        let (c, prim) = p.primitive_split();
        assert_eq!(prim, q(&[2, 3]));
        assert_eq!(c, r(-1, 4));
    }

    #[test]
    fn gcd_is_primitive_positive() {
        let a = &q(&[-1, 1]) * &q(&[2, 3]);
        let b = (&q(&[-1, 1]) * &q(&[5, 1])).scale(&r(-7, 3));
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        assert_eq!(a.gcd(&q(&[])), q(&[-2, -1, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(
            q(&[2, 5, 3]).display_with("s").to_string(),
            "3*s^2 + 5*s + 2"
        );
        assert_eq!(q(&[2, -1]).display_with("s").to_string(), "-s + 2");
        assert_eq!(q(&[]).display_with("s").to_string(), "0");
        let half = Polynomial::new(vec![r(0, 1), r(-1, 2)]);
        assert_eq!(half.display_with("q").to_string(), "-1/2*q");
    }

    #[test]
    fn derivative_and_pow() {
        assert_eq!(q(&[1, 1]).pow(3), q(&[1, 3, 3, 1]));
        assert_eq!(q(&[1, 3, 3, 1]).derivative(), q(&[3, 6, 3]));
        assert_eq!(q(&[7]).derivative(), q(&[]));
        assert_eq!(q(&[4, 1]).pow(0), q(&[1]));
    }
}
