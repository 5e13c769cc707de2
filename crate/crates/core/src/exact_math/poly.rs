//! Dense univariate polynomials over ℚ(i).
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical (empty vector for zero, nonzero leading coefficient otherwise).

use std::fmt;

use super::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `x - r`.
    pub fn linear(r: &GaussianRational) -> Self {
        Polynomial::from_coeffs(vec![-r, GaussianRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q·div + r` and `deg r < deg div`.  Panics on zero divisor.
    pub fn divmod(&self, div: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dlead = div.leading().unwrap().clone();
        let dinv = dlead.inv().expect("leading coefficient nonzero");
        let ddeg = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Polynomial::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quo = vec![GaussianRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let factor = &rem[k + ddeg] * &dinv;
            if factor.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let delta = &factor * d;
                rem[k + j] = &rem[k + j] - &delta;
            }
            quo[k] = factor;
        }
        (Polynomial::from_coeffs(quo), Polynomial::from_coeffs(rem))
    }

    /// Divides by the leading coefficient.  Panics on zero.
    pub fn monic(&self) -> Polynomial {
        let lead = self.leading().expect("monic of zero polynomial");
        let inv = lead.inv().expect("leading coefficient nonzero");
        self.scale(&inv)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn mul_and_eval() {
        // (x - 1)(x + 1) = x² - 1
        let p = Polynomial::linear(&gi(1)).mul(&Polynomial::linear(&gi(-1)));
        assert_eq!(p.coeffs(), &[gi(-1), gi(0), gi(1)]);
        assert_eq!(p.eval(&gi(3)), gi(8));
        assert!(p.eval(&gi(1)).is_zero());
    }

    #[test]
    fn divmod_round_trip() {
        let p = Polynomial::from_coeffs(vec![gi(2), gi(-3), gi(0), gi(1)]);
        let d = Polynomial::linear(&GaussianRational::i());
        let (q, r) = p.divmod(&d);
        assert_eq!(q.mul(&d).add(&r), p);
        assert!(r.degree() < d.degree() || r.is_zero());
    }
}
