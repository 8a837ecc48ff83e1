//! Newton polytopes and saturation.
//!
//! The hull of a support is described by its affine span plus facet
//! inequalities inside that span. Facets are the extreme rays of the polar of
//! the cone over the (projected) support, computed exactly with the
//! double-description method.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MultiPoly, PolyError};
use crate::rational::Rational;

/// Convex hull of a finite set of non-negative integer points.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<u32>>,
    hull: Hull,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    /// Integer points of the hull whose coefficient is zero, sorted.
    Missing(Vec<Vec<u32>>),
}

impl Saturation {
    pub fn is_saturated(&self) -> bool {
        matches!(self, Saturation::Saturated)
    }
}

impl LatticePolytope {
    /// Hull of `points`. Panics on an empty set or ragged input.
    pub fn from_points(points: &[Vec<u32>]) -> Self {
        assert!(!points.is_empty(), "hull of an empty point set");
        let dim = points[0].len();
        assert!(points.iter().all(|p| p.len() == dim), "ragged point set");
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let hull = Hull::new(&pts);
        let vertices = pts.iter().filter(|p| hull.is_vertex(p)).cloned().collect();
        LatticePolytope {
            dim,
            vertices,
            hull,
        }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine span.
    pub fn affine_dim(&self) -> usize {
        self.hull.pivots.len()
    }

    /// Extreme points, sorted lexicographically.
    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    pub fn facet_count(&self) -> usize {
        self.hull.facets.len()
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        point.len() == self.dim && self.hull.contains(point)
    }

    /// All integer points of the polytope, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<Vec<u32>> {
        let lo: Vec<u32> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap())
            .collect();
        let hi: Vec<u32> = (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap())
            .collect();
        let sums: Vec<u64> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|&e| e as u64).sum())
            .collect();
        // All points lie on sum = const when every vertex does.
        let fixed_sum = sums.windows(2).all(|w| w[0] == w[1]).then(|| sums[0]);
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.dim];
        self.enumerate(0, &lo, &hi, fixed_sum, 0, &mut cur, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        k: usize,
        lo: &[u32],
        hi: &[u32],
        fixed_sum: Option<u64>,
        partial: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == self.dim {
            if fixed_sum.is_none_or(|s| s == partial) && self.hull.contains(cur) {
                out.push(cur.clone());
            }
            return;
        }
        let rest_lo: u64 = lo[k + 1..].iter().map(|&e| e as u64).sum();
        let rest_hi: u64 = hi[k + 1..].iter().map(|&e| e as u64).sum();
        for e in lo[k]..=hi[k] {
            let s = partial + e as u64;
            if let Some(target) = fixed_sum {
                if s + rest_lo > target {
                    break;
                }
                if s + rest_hi < target {
                    continue;
                }
            }
            cur[k] = e;
            self.enumerate(k + 1, lo, hi, fixed_sum, s, cur, out);
        }
    }
}

/// Newton polytope of a nonzero polynomial.
pub fn newton_polytope(p: &MultiPoly) -> Result<LatticePolytope, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(LatticePolytope::from_points(&p.support()))
}

/// Integer points of the Newton polytope.
pub fn lattice_points(p: &MultiPoly) -> Result<Vec<Vec<u32>>, PolyError> {
    Ok(newton_polytope(p)?.lattice_points())
}

/// Reports the integer points of the Newton polytope with zero coefficient.
pub fn saturation_check(p: &MultiPoly) -> Result<Saturation, PolyError> {
    let missing: Vec<Vec<u32>> = lattice_points(p)?
        .into_iter()
        .filter(|pt| p.coeff(pt).is_zero())
        .collect();
    Ok(if missing.is_empty() {
        Saturation::Saturated
    } else {
        Saturation::Missing(missing)
    })
}

#[derive(Debug, Clone)]
struct Hull {
    origin: Vec<Rational>,
    /// Reduced row echelon basis of the span of `p - origin`.
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    /// Each `a` encodes `a[0] + sum_k a[k+1] * y_k >= 0` in pivot coordinates.
    facets: Vec<Vec<Rational>>,
}

fn to_rationals(p: &[u32]) -> Vec<Rational> {
    p.iter()
        .map(|&e| Rational::from_integer(e.into()))
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Hull {
    fn new(points: &[Vec<u32>]) -> Self {
        let origin = to_rationals(&points[0]);
        let diffs: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| {
                to_rationals(p)
                    .iter()
                    .zip(&origin)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let (basis, pivots) = rref(diffs);
        let mut hull = Hull {
            origin,
            basis,
            pivots,
            facets: Vec::new(),
        };
        if !hull.pivots.is_empty() {
            let gens: Vec<Vec<Rational>> = points.iter().map(|p| hull.lift(p)).collect();
            hull.facets = polar_extreme_rays(&gens);
        }
        hull
    }

    /// `(1, y)` where `y` are the pivot coordinates of `p - origin`.
    fn lift(&self, p: &[u32]) -> Vec<Rational> {
        let mut g = vec![Rational::one()];
        g.extend(
            self.pivots
                .iter()
                .map(|&j| Rational::from_integer(p[j].into()) - &self.origin[j]),
        );
        g
    }

    fn in_span(&self, p: &[u32]) -> bool {
        let diff: Vec<Rational> = to_rationals(p)
            .iter()
            .zip(&self.origin)
            .map(|(a, b)| a - b)
            .collect();
        let mut recon = vec![Rational::zero(); diff.len()];
        for (row, &j) in self.basis.iter().zip(&self.pivots) {
            let c = &diff[j];
            if c.is_zero() {
                continue;
            }
            for (r, x) in recon.iter_mut().zip(row) {
                *r += c * x;
            }
        }
        recon == diff
    }

    fn contains(&self, p: &[u32]) -> bool {
        if !self.in_span(p) {
            return false;
        }
        let g = self.lift(p);
        self.facets.iter().all(|a| !dot(a, &g).is_negative())
    }

    fn is_vertex(&self, p: &[u32]) -> bool {
        if self.pivots.is_empty() {
            return true;
        }
        let g = self.lift(p);
        let tight: Vec<Vec<Rational>> = self
            .facets
            .iter()
            .filter(|a| dot(a, &g).is_zero())
            .cloned()
            .collect();
        rref(tight).1.len() == self.pivots.len()
    }
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Scales to a primitive integer vector.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let gcd = if gcd.is_zero() { BigInt::one() } else { gcd };
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

struct Ray {
    dir: Vec<Rational>,
    zeros: Vec<bool>,
}

/// Extreme rays of `{a : a . g >= 0 for all g in gens}`. The generators must
/// span their space.
fn polar_extreme_rays(gens: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = gens[0].len();
    let m = gens.len();

    // Greedy basis among the generators.
    let mut basis_idx = Vec::new();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(g.clone());
        if rref(trial).1.len() > chosen.len() {
            chosen.push(g.clone());
            basis_idx.push(i);
            if chosen.len() == d {
                break;
            }
        }
    }
    assert_eq!(chosen.len(), d, "generators do not span");

    // Columns of the inverse of the basis matrix are the initial rays.
    let inv = invert(&chosen);
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let mut zeros = vec![false; m];
            for (i, &b) in basis_idx.iter().enumerate() {
                zeros[b] = i != j;
            }
            Ray {
                dir: primitive(inv.iter().map(|row| row[j].clone()).collect()),
                zeros,
            }
        })
        .collect();

    for (i, g) in gens.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|r| dot(&r.dir, g)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<bool> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[q].zeros)
                    .map(|(a, b)| *a && *b)
                    .collect();
                if common.iter().filter(|&&z| z).count() + 2 < d {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == q || !common.iter().zip(&r.zeros).all(|(c, z)| !c || *z)
                });
                if !adjacent {
                    continue;
                }
                let dir: Vec<Rational> = rays[q]
                    .dir
                    .iter()
                    .zip(&rays[p].dir)
                    .map(|(a, b)| &vals[p] * a - &vals[q] * b)
                    .collect();
                let mut zeros = common;
                zeros[i] = true;
                fresh.push(Ray {
                    dir: primitive(dir),
                    zeros,
                });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.zeros[i] = true;
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    let mut out: Vec<Vec<Rational>> = rays.into_iter().map(|r| r.dir).collect();
    out.sort();
    out
}

/// Inverse of a square nonsingular matrix.
fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let augmented: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented);
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "singular matrix");
    reduced.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> MultiPoly {
        MultiPoly::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn segment_and_point() {
        let seg = newton_polytope(&p("x0^2 + x1^2", 2)).unwrap();
        assert_eq!(seg.vertices(), &[vec![0, 2], vec![2, 0]]);
        assert_eq!(seg.affine_dim(), 1);
        assert_eq!(
            seg.lattice_points(),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );

        let point = newton_polytope(&p("3*x0*x1^4", 2)).unwrap();
        assert_eq!(point.vertices(), &[vec![1, 4]]);
        assert_eq!(point.lattice_points(), vec![vec![1, 4]]);
        assert_eq!(
            newton_polytope(&MultiPoly::zero(2)).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn square_of_k4_sum_is_a_dilated_simplex() {
        let q = p("x0 + x1 + x2 + x3", 4).pow(2);
        let poly = newton_polytope(&q).unwrap();
        assert_eq!(
            poly.vertices(),
            &[
                vec![0, 0, 0, 2],
                vec![0, 0, 2, 0],
                vec![0, 2, 0, 0],
                vec![2, 0, 0, 0]
            ]
        );
        assert_eq!(poly.affine_dim(), 3);
        assert_eq!(poly.facet_count(), 4);
        assert_eq!(poly.lattice_points().len(), 10);
    }

    #[test]
    fn full_dimensional_square() {
        // 1 + x + y + xy: unit square, four facets, interior empty.
        let poly = newton_polytope(&p("1 + x0 + x1 + x0*x1", 2)).unwrap();
        assert_eq!(poly.vertices().len(), 4);
        assert_eq!(poly.facet_count(), 4);
        assert!(poly.contains(&[1, 1]));
        assert!(!poly.contains(&[2, 0]));
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let poly = LatticePolytope::from_points(&[
            vec![0, 0],
            vec![4, 0],
            vec![0, 4],
            vec![1, 1],
            vec![2, 2],
        ]);
        assert_eq!(poly.vertices(), &[vec![0, 0], vec![0, 4], vec![4, 0]]);
        assert_eq!(poly.lattice_points().len(), 15);
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(
            saturation_check(&p("x0^2 + x0*x1 + x1^2", 2)).unwrap(),
            Saturation::Saturated
        );
        assert_eq!(
            saturation_check(&p("x0^2 + x1^2", 2)).unwrap(),
            Saturation::Missing(vec![vec![1, 1]])
        );
        assert_eq!(
            saturation_check(&MultiPoly::zero(1)),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
