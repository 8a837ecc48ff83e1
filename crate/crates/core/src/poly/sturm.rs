//! Real-rootedness of univariate rational polynomials via Sturm sequences.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{MultiPoly, PolyError};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootVerdict {
    RealRooted,
    HasNonrealRoot,
}

/// Root count summary for a univariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmReport {
    pub degree: usize,
    pub square_free_degree: usize,
    pub distinct_real_roots: usize,
}

impl SturmReport {
    pub fn verdict(&self) -> RootVerdict {
        if self.distinct_real_roots == self.square_free_degree {
            RootVerdict::RealRooted
        } else {
            RootVerdict::HasNonrealRoot
        }
    }
}

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct Dense(Vec<Rational>);

impl Dense {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Dense(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Dense {
        Dense::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Quotient and remainder of `self / d`.
    fn div_rem(&self, d: &Dense) -> (Dense, Dense) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (Dense(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.0.len() - d.0.len() + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + d.degree()];
            if top.is_zero() {
                continue;
            }
            let q = top / d.lead();
            for (i, c) in d.0.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        (Dense::new(quot), Dense::new(rem))
    }

    fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    fn neg(&self) -> Dense {
        Dense(self.0.iter().map(|c| -c).collect())
    }

    fn sign_at_pos_inf(&self) -> i8 {
        if self.lead().is_positive() {
            1
        } else {
            -1
        }
    }

    fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let signs: Vec<i8> = signs.collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl MultiPoly {
    /// Coefficients (lowest degree first) when at most one variable occurs.
    pub fn univariate_coefficients(&self) -> Result<Vec<Rational>, PolyError> {
        let present = self.variables_present();
        if present.len() > 1 {
            return Err(PolyError::NotUnivariate);
        }
        let var = present.first().copied();
        let deg = var.map_or(0, |v| self.degree_in(v)) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in self.terms() {
            let k = var.map_or(0, |v| e[v]) as usize;
            coeffs[k] = c.clone();
        }
        Ok(coeffs)
    }

    /// Square-free part, distinct real root count, and degree.
    pub fn sturm_report(&self) -> Result<SturmReport, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let p = Dense::new(self.univariate_coefficients()?);
        let g = p.gcd(&p.derivative());
        let q = if g.is_zero() {
            p.clone()
        } else {
            p.div_rem(&g).0
        };

        let mut chain = vec![q.clone()];
        let mut next = q.derivative();
        while !next.is_zero() {
            let prev = chain.last().unwrap().clone();
            chain.push(next.clone());
            next = prev.div_rem(&next).1.neg();
        }
        let at_neg = variations(chain.iter().map(Dense::sign_at_neg_inf));
        let at_pos = variations(chain.iter().map(Dense::sign_at_pos_inf));
        Ok(SturmReport {
            degree: p.degree(),
            square_free_degree: q.degree(),
            distinct_real_roots: at_neg - at_pos,
        })
    }
}

/// Decides whether all roots of a univariate polynomial are real.
pub fn sturm_real_rooted(p: &MultiPoly) -> Result<RootVerdict, PolyError> {
    Ok(p.sturm_report()?.verdict())
}
