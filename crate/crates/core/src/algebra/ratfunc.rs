use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Polynomial, Scalar, TaylorPrefix};
use crate::error::{Error, Result};
use crate::Rational;

/// A quotient of polynomials held in canonical form.
///
/// `num` and `den` are coprime and `den` is integer-primitive with a positive
/// leading coefficient, so two values are equal exactly when their fields are.
/// Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<T: Scalar = Rational> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.divide_exact(&g).expect("gcd divides numerator"),
                den.divide_exact(&g).expect("gcd divides denominator"),
            )
        };
        let (factor, den) = den.primitive_split();
        let num = num.scale(&(T::one() / factor));
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial<T>) -> Self {
        Self::reduce(p, Polynomial::one())
    }

    /// `1 / (slope * s + intercept)`; panics if both are zero.
    pub fn linear_recip(slope: T, intercept: T) -> Self {
        Self::new(Polynomial::one(), Polynomial::linear(slope, intercept))
            .expect("nonzero linear form")
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial<T>, Polynomial<T>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Formal derivative by the quotient rule, re-reduced.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(num, &self.den * &self.den)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    /// Coefficients `a_0..=a_k` of the expansion at the origin, obtained from
    /// the recurrence `den * series = num (mod s^(k+1))`.
    pub fn taylor(&self, k: usize) -> Result<TaylorPrefix<T>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let den = self.den.coeffs();
        let mut a: Vec<T> = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut acc = self.num.coeff(i);
            for j in 1..den.len().min(i + 1) {
                acc = acc - den[j].clone() * a[i - j].clone();
            }
            a.push(acc / d0.clone());
        }
        Ok(TaylorPrefix::new(a))
    }

    /// `k`-th derivative at zero, read off as `k! * a_k`.
    pub fn kth_derivative_at_zero(&self, k: usize) -> Result<T> {
        Ok(self.taylor(k)?.derivative_at_zero(k))
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        RenderedFraction { f: self, var }
    }
}

struct RenderedFraction<'a, T: Scalar> {
    f: &'a RationalFunction<T>,
    var: &'a str,
}

impl<T: Scalar> fmt::Display for RenderedFraction<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.f.num.display_with(self.var);
        if self.f.den.degree() == Some(0) && self.f.den.coeff(0).is_one() {
            return write!(f, "{num}");
        }
        write!(f, "({num}) / ({})", self.f.den.display_with(self.var))
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("s").fmt(f)
    }
}

impl<T: Scalar> Add<&RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn add(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Sub<&RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn sub(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul<&RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn mul(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; see [`RationalFunction::checked_div`].
impl<T: Scalar> Div<&RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn div(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl<T: Scalar> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn neg(self) -> RationalFunction<T> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<T: Scalar> Neg for RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn neg(self) -> RationalFunction<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl<T: Scalar> $tr<RationalFunction<T>> for RationalFunction<T> {
            type Output = RationalFunction<T>;
            fn $m(self, rhs: RationalFunction<T>) -> RationalFunction<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&RationalFunction<T>> for RationalFunction<T> {
            type Output = RationalFunction<T>;
            fn $m(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl<T: Scalar> std::iter::Sum for RationalFunction<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<T: Scalar> std::iter::Product for RationalFunction<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Rf = RationalFunction;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(
            c.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    fn rf(n: &[i64], d: &[i64]) -> Rf {
        Rf::new(p(n), p(d)).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn add_examples() {
        // 1/(s+1) - 1 = -s/(s+1)
        assert_eq!(
            rf(&[1], &[1, 1]) + Rf::constant(int(-1)),
            rf(&[0, -1], &[1, 1])
        );
        let f = rf(&[2, -1], &[2, 5, 3]);
        assert_eq!(&f + &Rf::zero(), f);
        // (2-s)/((3s+2)(s+1)) + 6s^2/((3s+1)(3s+2)(s+1)) = 1/(3s+1)
        let y_part = rf(&[0, 0, 6], &[2, 11, 18, 9]);
        assert_eq!(f + y_part, rf(&[1], &[1, 3]));
    }

    #[test]
    fn mul_div_examples() {
        let a = rf(&[1], &[1, 1]);
        assert_eq!(&a * &a, rf(&[1], &[1, 2, 1]));
        let b = rf(&[0, -1], &[1, 1]);
        assert_eq!(&b * &b, rf(&[0, 0, 1], &[1, 2, 1]));
        assert_eq!(a.checked_div(&Rf::zero()), Err(Error::DivisionByZero));
        assert_eq!(&a / &a, Rf::one());
    }

    #[test]
    fn canonical_form_is_structural() {
        // 2(s+1) / (4(s+1)(s+2)) built two ways
        let x = Rf::new(p(&[2, 2]), p(&[8, 12, 4])).unwrap();
        let y = Rf::new(p(&[-1]), p(&[-4, -2])).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.den(), &p(&[2, 1]));
        assert_eq!(x.num(), &p(&[1]).scale(&Ratio::new(1.into(), 2.into())));
        // den with rational coefficients becomes integer-primitive
        let z = Rf::new(
            p(&[1]),
            Polynomial::new(vec![Ratio::new(1.into(), 3.into()), int(1)]),
        )
        .unwrap();
        assert_eq!(z.den(), &p(&[1, 3]));
        assert_eq!(z.num(), &p(&[3]));
        assert_eq!(Rf::new(p(&[]), p(&[5, 1])).unwrap(), Rf::zero());
        assert_eq!(Rf::new(p(&[1]), p(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn taylor_examples() {
        let cube = rf(&[1], &[1, 3, 3, 1]);
        assert_eq!(cube.taylor(2).unwrap().coeffs(), &[int(1), int(-3), int(6)]);
        assert_eq!(
            Rf::one().taylor(5).unwrap().coeffs(),
            &[int(1), int(0), int(0), int(0), int(0), int(0)]
        );
        let z23 = rf(&[2, -1], &[2, 5, 3]);
        assert_eq!(z23.taylor(1).unwrap().coeffs(), &[int(1), int(-3)]);
        assert_eq!(rf(&[1], &[0, 1]).taylor(2), Err(Error::PoleAtZero));
    }

    #[test]
    fn derivative_at_zero_examples() {
        let cube = rf(&[1], &[1, 3, 3, 1]);
        assert_eq!(cube.kth_derivative_at_zero(2).unwrap(), int(12));
        assert_eq!(cube.kth_derivative_at_zero(0).unwrap(), int(1));
        let z23 = rf(&[2, -1], &[2, 5, 3]);
        assert_eq!(z23.kth_derivative_at_zero(1).unwrap(), int(-3));
    }

    #[test]
    fn formal_derivative_matches_taylor() {
        let z23 = rf(&[2, -1], &[2, 5, 3]);
        for k in 0..5 {
            let via_formal = z23.nth_derivative(k).eval(&int(0)).unwrap();
            assert_eq!(via_formal, z23.kth_derivative_at_zero(k).unwrap());
        }
    }

    #[test]
    fn small_scalar_instantiation() {
        type Small = Ratio<i64>;
        let one = Small::from_integer(1);
        let f: RationalFunction<Small> = RationalFunction::linear_recip(one, one);
        let g = &f * &f;
        assert_eq!(g.den().coeffs(), &[one, Small::from_integer(2), one]);
        assert_eq!(
            g.kth_derivative_at_zero(1).unwrap(),
            Small::from_integer(-2)
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            rf(&[2, -1], &[2, 5, 3]).to_string(),
            "(-s + 2) / (3*s^2 + 5*s + 2)"
        );
        assert_eq!(Rf::one().to_string(), "1");
        assert_eq!(Rf::zero().to_string(), "0");
    }
}
