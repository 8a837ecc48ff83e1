//! Substitutions and the closure operations used by refutation certificates.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Monomial, MultiPoly, PolyError};
use crate::rational::Rational;

/// `constant + sum_i coeffs[i] * x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl LinearForm {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        LinearForm {
            coeffs: vec![Rational::zero(); nvars],
            constant: c,
        }
    }

    /// `sum_{v in vars} x_v`.
    pub fn sum_of_vars<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Self {
        let mut form = Self::constant(nvars, Rational::zero());
        for v in vars {
            form.coeffs[v] += Rational::one();
        }
        form
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.coeffs.len();
        let mut p = MultiPoly::constant(n, self.constant.clone());
        for (v, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[v] = 1;
                p.add_term(Monomial(e), c.clone());
            }
        }
        p
    }
}

impl MultiPoly {
    /// Fixes `x_var = a`. The variable count is unchanged; `x_var` simply no
    /// longer occurs.
    pub fn substitute_real(&self, var: usize, a: &Rational) -> Result<MultiPoly, PolyError> {
        self.check_var(var)?;
        let mut out = MultiPoly::zero(self.nvars());
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::take(&mut e[var]);
            out.add_term(Monomial(e), c * num_traits::pow(a.clone(), k as usize));
        }
        Ok(out)
    }

    /// Replaces `x_var` by a linear form and expands.
    pub fn substitute_linear(&self, var: usize, form: &LinearForm) -> Result<MultiPoly, PolyError> {
        self.check_var(var)?;
        if form.coeffs.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: form.coeffs.len(),
            });
        }
        // Group terms by their power of x_var, then recombine with powers of
        // the form.
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::take(&mut e[var]);
            by_power
                .entry(k)
                .or_insert_with(|| MultiPoly::zero(self.nvars()))
                .add_term(Monomial(e), c.clone());
        }
        let base = form.to_poly();
        let mut out = MultiPoly::zero(self.nvars());
        let mut power = MultiPoly::one(self.nvars());
        let mut at = 0;
        for (k, rest) in by_power {
            while at < k {
                power = &power * &base;
                at += 1;
            }
            out = out + &rest * &power;
        }
        Ok(out)
    }

    /// `x_i -> y_{map[i]}` for a polynomial in `count` new variables.
    pub fn identify_variables(&self, map: &[usize], count: usize) -> Result<MultiPoly, PolyError> {
        if map.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: map.len(),
            });
        }
        if let Some((var, &target)) = map.iter().enumerate().find(|(_, &t)| t >= count) {
            return Err(PolyError::BadVariableMap { var, target, count });
        }
        let mut out = MultiPoly::zero(count);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; count];
            for (v, &k) in m.0.iter().enumerate() {
                e[map[v]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// `x_var^d * p(..., -1/x_var, ...)` with `d` the degree in `x_var`.
    pub fn reverse_variable(&self, var: usize) -> Result<MultiPoly, PolyError> {
        self.check_var(var)?;
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.degree_in(var);
        let mut out = MultiPoly::zero(self.nvars());
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var];
            e[var] = d - k;
            let c = if k % 2 == 1 { -c } else { c.clone() };
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, var: usize) -> Result<MultiPoly, PolyError> {
        self.check_var(var)?;
        let mut out = MultiPoly::zero(self.nvars());
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c * Rational::from_integer(k.into()));
        }
        Ok(out)
    }
}
