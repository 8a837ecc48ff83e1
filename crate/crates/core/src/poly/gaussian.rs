use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{MultiPoly, PolyError};
use crate::rational::{format_rational, serde_rational, Rational};

/// Complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianRational {
    #[serde(with = "serde_rational")]
    pub re: Rational,
    #[serde(with = "serde_rational")]
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Membership in the open upper half-plane, `Im z > 0`.
    pub fn in_upper_half_plane(&self) -> bool {
        self.im.is_positive()
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
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

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{sign}{}i",
                    format_rational(&self.re),
                    format_rational(&self.im.abs())
                )
            }
        }
    }
}

impl MultiPoly {
    /// Exact evaluation at a Gaussian-rational point.
    pub fn eval_gaussian(&self, point: &[GaussianRational]) -> Result<GaussianRational, PolyError> {
        self.check_arity(point.len())?;
        let mut sum = GaussianRational::zero();
        for (exps, c) in self.terms() {
            let mut t = GaussianRational::real(c.clone());
            for (z, &e) in point.iter().zip(exps) {
                if e > 0 {
                    t = &t * &z.pow(e);
                }
            }
            sum = &sum + &t;
        }
        Ok(sum)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        self.check_arity(point.len())?;
        let mut sum = Rational::zero();
        for (exps, c) in self.terms() {
            let mut t = c.clone();
            for (z, &e) in point.iter().zip(exps) {
                if e > 0 {
                    t *= num_traits::pow(z.clone(), e as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    fn check_arity(&self, found: usize) -> Result<(), PolyError> {
        if found != self.nvars() {
            Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    #[test]
    fn field_ops() {
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), g(-1, 0));
        assert_eq!(g(1, 1).pow(2), g(0, 2));
        assert_eq!(g(1, 1).pow(0), g(1, 0));
        assert!(g(0, 1).in_upper_half_plane());
        assert!(!g(3, 0).in_upper_half_plane());
        assert_eq!(g(-1, 1).to_string(), "-1+1i");
    }

    #[test]
    fn witness_evaluations() {
        // x0*x1 + 1 at (i, i)
        let p: MultiPoly = "x0*x1 + 1".parse().unwrap();
        assert!(p.eval_gaussian(&[g(0, 1), g(0, 1)]).unwrap().is_zero());
        // x1*(x4 - x3 - 1) at x1 = i, x3 = i, x4 = 1 + i
        let q: MultiPoly = "x1*x4 - x1*x3 - x1".parse().unwrap();
        let pt = [g(0, 1), g(0, 1), g(0, 1), g(0, 1), g(1, 1)];
        assert!(q.eval_gaussian(&pt).unwrap().is_zero());
        let r: MultiPoly = "x0 + 1".parse().unwrap();
        assert_eq!(r.eval_gaussian(&[g(0, 0)]).unwrap(), g(1, 0));
        assert!(matches!(
            r.eval_gaussian(&[]),
            Err(PolyError::ArityMismatch {
                expected: 1,
                found: 0
            })
        ));
    }
}
