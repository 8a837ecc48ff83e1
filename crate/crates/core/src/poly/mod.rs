//! Sparse multivariate polynomials with exact rational coefficients.

mod gaussian;
mod newton;
mod ops;
mod sturm;
mod text;

pub use gaussian::GaussianRational;
pub use newton::{lattice_points, newton_polytope, saturation_check, LatticePolytope, Saturation};
pub use ops::LinearForm;
pub use sturm::{sturm_real_rooted, RootVerdict, SturmReport};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("variable x{var} out of range for {nvars} variables")]
    VarOutOfRange { var: usize, nvars: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial involves more than one variable")]
    NotUnivariate,
    #[error("expected {expected} values, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable map sends x{var} to {target}, outside 0..{count}")]
    BadVariableMap {
        var: usize,
        target: usize,
        count: usize,
    },
    #[error("cannot parse polynomial at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic with `x0 > x1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables over the rationals.
///
/// Invariants: no stored zero coefficient and every exponent vector has
/// length `nvars`. Terms iterate in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `x_var`. Panics when `var >= nvars`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(
            var < nvars,
            "variable x{var} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[var] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    /// Sum of the given terms; repeated exponent vectors are combined.
    /// Panics if an exponent vector has the wrong length.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// `sum_{v in vars} x_v`.
    pub fn sum_of_vars<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Self {
        let mut p = Self::zero(nvars);
        for v in vars {
            p = p + Self::var(nvars, v);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (m.exponents(), c))
    }

    /// Exponent vectors of the support, in descending graded-lex order.
    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms().map(|(e, _)| e.to_vec()).collect()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in `var`; 0 for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// True when no exponent exceeds 1.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e <= 1))
    }

    /// Variables that occur with positive exponent somewhere.
    pub fn variables_present(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|m| m.0[v] > 0))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
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

    /// Same polynomial viewed in `nvars >= self.nvars()` variables.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot shrink variable count");
        MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::NvarsMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var >= self.nvars {
            Err(PolyError::VarOutOfRange {
                var,
                nvars: self.nvars,
            })
        } else {
            Ok(())
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

// Operator forms panic on a variable-count mismatch; the `try_` methods
// report it instead.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs)
                    .expect("polynomial variable counts differ")
            }
        }

        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self)
                    .$checked(&rhs)
                    .expect("polynomial variable counts differ")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| format!("x{i}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(3, i)
    }

    #[test]
    fn ring_examples() {
        let (a, b) = (MultiPoly::var(2, 0), MultiPoly::var(2, 1));
        let diff = (&a + &b) * (&a - &b);
        assert_eq!(diff, &a.pow(2) - &b.pow(2));
        assert_eq!(diff.to_string(), "x0^2 - x1^2");
        assert_eq!(&a + &MultiPoly::zero(2), a);
        let square = (x(0) + x(1) + x(2)).pow(2);
        assert_eq!(square.len(), 6);
        assert_eq!(square.coeff(&[1, 1, 0]), int(2));
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = MultiPoly::var(2, 0)
            .try_add(&MultiPoly::var(3, 0))
            .unwrap_err();
        assert_eq!(err, PolyError::NvarsMismatch(2, 3));
        assert!(MultiPoly::one(1).try_mul(&MultiPoly::one(2)).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let p = x(2) + x(0).pow(2) + x(0) * x(1) + MultiPoly::one(3) + x(1).pow(2);
        let order: Vec<_> = p.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(
            order,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![0, 0, 1],
                vec![0, 0, 0]
            ]
        );
    }

    #[test]
    fn degree_queries() {
        let p = x(0).pow(2) * x(1) + x(2);
        assert_eq!(p.degree_in(0), 2);
        assert_eq!(p.total_degree(), Some(3));
        assert!(!p.is_homogeneous());
        assert!(!p.is_multilinear());
        assert_eq!(p.variables_present(), vec![0, 1, 2]);
        assert_eq!(MultiPoly::zero(3).total_degree(), None);
    }
}
