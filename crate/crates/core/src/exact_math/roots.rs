//! Roots of polynomials lying in ℚ(i).
//!
//! The search is the rational-root theorem transported to ℤ[i]: after
//! clearing denominators the candidates are `u·a/b` with `a` a Gaussian
//! divisor of the trailing coefficient, `b` a Gaussian divisor of the leading
//! coefficient, and `u` a unit in {1, i, −1, −i}.  Divisors are enumerated
//! from the Gaussian prime factorization, which is obtained by factoring the
//! norm over ℤ by trial division.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::scalar::{GaussianRational, Rational};

/// A Gaussian integer, used only inside the root search.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Zi {
    re: BigInt,
    im: BigInt,
}

impl Zi {
    fn new(re: BigInt, im: BigInt) -> Self {
        Zi { re, im }
    }

    fn from_ints(re: i64, im: i64) -> Self {
        Zi::new(BigInt::from(re), BigInt::from(im))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, other: &Zi) -> Zi {
        Zi::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// Exact division in ℤ[i]; `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Zi) -> Option<Zi> {
        let n = other.norm();
        if n.is_zero() {
            return None;
        }
        // self · conj(other) / N(other)
        let re = &self.re * &other.re + &self.im * &other.im;
        let im = &self.im * &other.re - &self.re * &other.im;
        if (&re % &n).is_zero() && (&im % &n).is_zero() {
            Some(Zi::new(re / &n, im / &n))
        } else {
            None
        }
    }

    fn to_scalar(&self) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(self.re.clone()),
            Rational::from_integer(self.im.clone()),
        )
    }
}

/// Trial-division factorization of a positive integer.
fn factor_integer(mut n: BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let two = BigInt::from(2);
    let mut e2 = 0;
    while (&n % &two).is_zero() {
        n /= &two;
        e2 += 1;
    }
    push(two, e2);
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if n > BigInt::one() {
        push(n, 1);
    }
    out
}

/// Gaussian primes above the rational prime `p`, each ready to be divided out.
fn gaussian_primes_above(p: &BigInt) -> Vec<Zi> {
    if *p == BigInt::from(2) {
        return vec![Zi::from_ints(1, 1)];
    }
    if (p % BigInt::from(4)) == BigInt::from(3) {
        return vec![Zi::new(p.clone(), BigInt::zero())];
    }
    // p ≡ 1 (mod 4): find a² + b² = p by brute force (inputs here are small).
    let mut a = BigInt::one();
    loop {
        let rest = p - &a * &a;
        if rest.is_negative() {
            unreachable!("no two-square decomposition found for {p}");
        }
        let b = rest.sqrt();
        if &b * &b == rest {
            return vec![Zi::new(a.clone(), b.clone()), Zi::new(a, -b)];
        }
        a += 1;
    }
}

/// All divisors of a nonzero Gaussian integer, up to units (one
/// representative per associate class).
fn gaussian_divisors(z: &Zi) -> Vec<Zi> {
    assert!(!z.is_zero());
    let mut rest = z.clone();
    let mut prime_powers: Vec<(Zi, u32)> = Vec::new();
    for (p, _) in factor_integer(z.norm()) {
        for pi in gaussian_primes_above(&p) {
            let mut e = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                prime_powers.push((pi, e));
            }
        }
    }
    debug_assert!(rest.norm().is_one(), "leftover non-unit after factorization");
    let mut divisors = vec![Zi::from_ints(1, 0)];
    for (pi, e) in prime_powers {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors
}

/// All roots of `p` lying in ℚ(i), with multiplicities, sorted canonically.
///
/// The polynomial must be nonzero (a zero polynomial has every scalar as
/// a root and indicates a bug upstream; this panics).
pub fn gaussian_roots(p: &Polynomial) -> Vec<(GaussianRational, usize)> {
    assert!(!p.is_zero(), "gaussian_roots of the zero polynomial");
    let mut roots: Vec<(GaussianRational, usize)> = Vec::new();
    let mut work = p.clone();

    // Zero roots: strip the valuation at x = 0.
    let valuation = work
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    if valuation > 0 {
        roots.push((GaussianRational::zero(), valuation));
        work = Polynomial::from_coeffs(work.coeffs()[valuation..].to_vec());
    }
    if work.degree().unwrap_or(0) == 0 {
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        return roots;
    }

    // Clear denominators so all coefficients land in ℤ[i].
    let mut denom_lcm = BigInt::one();
    for c in work.coeffs() {
        denom_lcm = num_integer::lcm(denom_lcm.clone(), c.re.denom().clone());
        denom_lcm = num_integer::lcm(denom_lcm, c.im.denom().clone());
    }
    let cleared: Vec<Zi> = work
        .coeffs()
        .iter()
        .map(|c| {
            let s = GaussianRational::new(
                Rational::from_integer(denom_lcm.clone()),
                Rational::zero(),
            );
            let v = c * &s;
            debug_assert!(v.is_gaussian_integer());
            Zi::new(v.re.numer().clone(), v.im.numer().clone())
        })
        .collect();

    let trailing = cleared.first().unwrap().clone();
    let leading = cleared.last().unwrap().clone();
    let units = [
        GaussianRational::one(),
        GaussianRational::i(),
        GaussianRational::from_int(-1),
        -GaussianRational::i(),
    ];

    let mut candidates: HashSet<GaussianRational> = HashSet::new();
    for a in gaussian_divisors(&trailing) {
        for b in gaussian_divisors(&leading) {
            let ratio = &a.to_scalar() / &b.to_scalar();
            for u in &units {
                candidates.insert(&ratio * u);
            }
        }
    }

    let mut found: Vec<(GaussianRational, usize)> = Vec::new();
    for cand in candidates {
        if work.eval(&cand).is_zero() {
            // Deflate to count multiplicity.
            let lin = Polynomial::linear(&cand);
            let mut mult = 0;
            loop {
                let (q, r) = work.divmod(&lin);
                if !r.is_zero() {
                    break;
                }
                work = q;
                mult += 1;
            }
            found.push((cand, mult));
        }
    }
    roots.extend(found);
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn fourth_roots_of_unity() {
        // x⁴ - 1 has all four roots in ℚ(i).
        let p = Polynomial::from_coeffs(vec![gi(-1), gi(0), gi(0), gi(0), gi(1)]);
        let roots = gaussian_roots(&p);
        let values: HashSet<_> = roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(roots.len(), 4);
        assert!(values.contains(&gi(1)));
        assert!(values.contains(&gi(-1)));
        assert!(values.contains(&GaussianRational::i()));
        assert!(values.contains(&(-GaussianRational::i())));
    }

    #[test]
    fn multiplicities_and_fractions() {
        // (2x - 1)²(x + i) = 0 has roots 1/2 (twice) and -i.
        let half = GaussianRational::rat(1, 2);
        let p = Polynomial::linear(&half)
            .mul(&Polynomial::linear(&half))
            .mul(&Polynomial::linear(&(-GaussianRational::i())))
            .scale(&gi(4));
        let roots = gaussian_roots(&p);
        assert!(roots.contains(&(half, 2)));
        assert!(roots.contains(&(-GaussianRational::i(), 1)));
    }

    #[test]
    fn irreducible_over_qi_has_no_roots() {
        // x² - 2: roots ±√2 are not in ℚ(i).
        let p = Polynomial::from_coeffs(vec![gi(-2), gi(0), gi(1)]);
        assert!(gaussian_roots(&p).is_empty());
        // x² + 2x + 2 = (x+1)² + 1: roots -1 ± i ARE in ℚ(i).
        let q = Polynomial::from_coeffs(vec![gi(2), gi(2), gi(1)]);
        assert_eq!(gaussian_roots(&q).len(), 2);
    }

    #[test]
    fn zero_root_valuation() {
        // x³(x - 1)
        let p = Polynomial::from_coeffs(vec![gi(0), gi(0), gi(0), gi(-1), gi(1)]);
        let roots = gaussian_roots(&p);
        assert!(roots.contains(&(gi(0), 3)));
        assert!(roots.contains(&(gi(1), 1)));
    }
}
