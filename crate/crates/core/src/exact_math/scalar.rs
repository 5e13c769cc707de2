//! Scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! A [`GaussianRational`] is an element of ℚ(i), stored as real and imaginary
//! parts that are always reduced with positive denominator (an invariant the
//! underlying `BigRational` maintains).  The serialization format is the
//! fixed string shape `a/b+c/d*i` — e.g. `1/2+0/1*i` or `0/1+-3/4*i` — and
//! round-trips exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactMathError;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// An element of ℚ(i): `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// The real rational `n/d`.  Panics if `d == 0`.
    pub fn rat(n: i64, d: i64) -> Self {
        assert!(d != 0, "rational with zero denominator");
        GaussianRational::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            Rational::zero(),
        )
    }

    /// The Gaussian integer `a + b·i`.
    pub fn gauss(a: i64, b: i64) -> Self {
        GaussianRational::new(
            Rational::from_integer(BigInt::from(a)),
            Rational::from_integer(BigInt::from(b)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// The field norm `re² + im²` (a nonnegative rational).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ExactMathError> {
        if self.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, e: i64) -> Result<Self, ExactMathError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = GaussianRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// True when both parts are integers (an element of ℤ[i]).
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on a zero divisor; use [`GaussianRational::inv`] to handle that
/// case as an error.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

impl fmt::Display for GaussianRational {
    /// Fixed shape `a/b+c/d*i`; signs ride on the numerators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        write!(f, "+")?;
        fmt_rational(&self.im, f)?;
        write!(f, "*i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_fraction(s: &str) -> Result<Rational, String> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| format!("expected n/d, got `{s}`"))?;
    let numer = BigInt::from_str(n).map_err(|e| format!("bad numerator `{n}`: {e}"))?;
    let denom = BigInt::from_str(d).map_err(|e| format!("bad denominator `{d}`: {e}"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    if denom.is_negative() {
        return Err(format!("denominator must be positive in `{s}`"));
    }
    let r = Rational::new(numer.clone(), denom.clone());
    if r.numer() != &numer || r.denom() != &denom {
        return Err(format!("fraction `{s}` is not reduced"));
    }
    Ok(r)
}

impl FromStr for GaussianRational {
    type Err = String;

    /// Parses the exact `a/b+c/d*i` shape produced by `Display`.  The only
    /// `+` in a well-formed scalar is the separator (negative values use a
    /// `-` on the numerator), and both fractions must be reduced with
    /// positive denominator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('+');
        let (re_part, im_part) = match (parts.next(), parts.next(), parts.next()) {
            (Some(re), Some(im), None) => (re, im),
            _ => return Err(format!("expected a/b+c/d*i, got `{s}`")),
        };
        let im_part = im_part
            .strip_suffix("*i")
            .ok_or_else(|| format!("missing `*i` suffix in `{s}`"))?;
        Ok(GaussianRational::new(
            parse_fraction(re_part)?,
            parse_fraction(im_part)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        assert_eq!(i.pow(4).unwrap(), GaussianRational::one());
        let z = GaussianRational::new(Rational::new(1.into(), 2.into()), Rational::one());
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussianRational::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            GaussianRational::zero().inv(),
            Err(ExactMathError::DivisionByZero)
        );
    }

    #[test]
    fn display_round_trip() {
        let z = GaussianRational::new(
            Rational::new((-1).into(), 2.into()),
            Rational::new(3.into(), 4.into()),
        );
        let s = z.to_string();
        assert_eq!(s, "-1/2+3/4*i");
        assert_eq!(s.parse::<GaussianRational>().unwrap(), z);

        let one = GaussianRational::one();
        assert_eq!(one.to_string(), "1/1+0/1*i");
        assert_eq!("1/1+0/1*i".parse::<GaussianRational>().unwrap(), one);
        assert_eq!(
            "0/1+-1/1*i".parse::<GaussianRational>().unwrap(),
            -GaussianRational::i()
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("1/2".parse::<GaussianRational>().is_err());
        assert!("1/2+1/2".parse::<GaussianRational>().is_err());
        assert!("2/4+0/1*i".parse::<GaussianRational>().is_err()); // not reduced
        assert!("1/-2+0/1*i".parse::<GaussianRational>().is_err()); // negative denominator
        assert!("1/0+0/1*i".parse::<GaussianRational>().is_err());
    }
}
