use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::dd::DoubleDescription;
use super::lattice::{
    add, combine, coordinates, det_adjugate, dot, hermite_diagonal, hyperplane_normal,
    is_zero, kernel_lattice_basis, mul, nullspace, rank, IVec,
};
use crate::Error;

/// A pointed rational cone `{x : <u, x> >= 0 for u in inequalities,
/// <v, x> = 0 for v in equations}`, with integer data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedCone {
    dim: usize,
    inequalities: Vec<IVec>,
    equations: Vec<IVec>,
    rays: Vec<IVec>,
}

impl PointedCone {
    /// Builds the cone and computes its extreme rays; fails with
    /// [`Error::NotPointed`] when the cone contains a line.
    pub fn new(dim: usize, inequalities: Vec<IVec>, equations: Vec<IVec>) -> Result<Self, Error> {
        for v in inequalities.iter().chain(&equations) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        let mut dd = DoubleDescription::new(dim);
        for e in &equations {
            dd.insert(e.clone());
            dd.insert(e.iter().map(|x| -x).collect());
        }
        for u in &inequalities {
            dd.insert(u.clone());
        }
        if !dd.lines().is_empty() {
            return Err(Error::NotPointed);
        }
        let mut rays: Vec<IVec> = dd.rays().cloned().collect();
        rays.sort();
        rays.dedup();
        Ok(PointedCone {
            dim,
            inequalities,
            equations,
            rays,
        })
    }

    /// Assembles a cone whose extreme rays are already known.
    pub(crate) fn from_parts(
        dim: usize,
        inequalities: Vec<IVec>,
        equations: Vec<IVec>,
        mut rays: Vec<IVec>,
    ) -> Self {
        rays.sort();
        rays.dedup();
        PointedCone {
            dim,
            inequalities,
            equations,
            rays,
        }
    }

    /// Convenience constructor from `i64` data.
    pub fn from_i64(dim: usize, inequalities: &[Vec<i64>], equations: &[Vec<i64>]) -> Result<Self, Error> {
        let conv = |vs: &[Vec<i64>]| -> Vec<IVec> {
            vs.iter().map(|v| v.iter().map(|&x| i128::from(x)).collect()).collect()
        };
        PointedCone::new(dim, conv(inequalities), conv(equations))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[IVec] {
        &self.inequalities
    }

    pub fn equations(&self) -> &[IVec] {
        &self.equations
    }

    /// Primitive generators of the extreme rays in lexicographic order.
    pub fn extreme_rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn contains(&self, x: &[i128]) -> bool {
        self.inequalities.iter().all(|u| dot(u, x) >= 0)
            && self.equations.iter().all(|v| dot(v, x) == 0)
    }

    /// Minimal generating set of the monoid of integer points, sorted
    /// lexicographically.
    pub fn hilbert_basis(&self) -> Vec<IVec> {
        self.hilbert_basis_impl(None)
    }

    /// Hilbert-basis elements `h` with `<grading, h> <= max_degree`.
    ///
    /// `grading` must be nonnegative on the cone. Reducibility of an element
    /// of degree at most `max_degree` only involves summands of no larger
    /// degree, so the answer is exact even though larger candidates are
    /// never generated.
    pub fn hilbert_basis_graded(&self, grading: &[i128], max_degree: i128) -> Vec<IVec> {
        assert!(
            self.rays.iter().all(|r| dot(grading, r) >= 0),
            "grading is negative on the cone"
        );
        self.hilbert_basis_impl(Some((grading, max_degree)))
    }

    fn hilbert_basis_impl(&self, bound: Option<(&[i128], i128)>) -> Vec<IVec> {
        if self.rays.is_empty() {
            return Vec::new();
        }
        // coordinates of a lattice basis of the ambient linear span
        let lattice = self.span_lattice();
        let local_rays: Vec<IVec> = self.rays.iter().map(|r| coordinates(&lattice, r)).collect();
        let m = lattice.len();
        let local_grading: Option<(IVec, i128)> = bound.map(|(g, d)| {
            (lattice.iter().map(|b| dot(g, b)).collect(), d)
        });

        let simplices = placing_triangulation(&local_rays, m);
        let mut candidates: BTreeSet<IVec> = simplices
            .par_iter()
            .map(|s| {
                let cols: Vec<IVec> = s.iter().map(|&i| local_rays[i].clone()).collect();
                parallelepiped_points(&cols, local_grading.as_ref())
            })
            .flatten()
            .collect();
        for r in &local_rays {
            let keep = local_grading
                .as_ref()
                .is_none_or(|(g, d)| dot(g, r) <= *d);
            if keep {
                candidates.insert(r.clone());
            }
        }

        let to_ambient = |y: &IVec| -> IVec {
            let mut x = vec![0i128; self.dim];
            for (b, &c) in lattice.iter().zip(y) {
                for (xi, &bi) in x.iter_mut().zip(b) {
                    *xi = add(*xi, mul(c, bi));
                }
            }
            x
        };
        let mut cands: Vec<IVec> = candidates.iter().map(to_ambient).collect();
        cands.retain(|c| !is_zero(c));

        // total slack is positive on nonzero cone points, so summands have
        // strictly smaller slack than the element they sum to
        let slack = |x: &IVec| -> i128 {
            self.inequalities.iter().fold(0, |acc, u| add(acc, dot(u, x)))
        };
        cands.sort_by_key(|c| (slack(c), c.clone()));
        let mut basis: Vec<IVec> = Vec::new();
        for c in cands {
            let reducible = basis.iter().any(|b| {
                let diff = combine(1, &c, -1, b);
                self.contains(&diff)
            });
            if !reducible {
                basis.push(c);
            }
        }
        basis.sort();
        basis
    }

    /// Basis of the integer points of the linear span of the cone.
    fn span_lattice(&self) -> Vec<IVec> {
        if rank(&self.rays, self.dim) == self.dim {
            return (0..self.dim)
                .map(|i| (0..self.dim).map(|j| i128::from(i == j)).collect())
                .collect();
        }
        kernel_lattice_basis(&nullspace(&self.rays, self.dim), self.dim)
    }
}

/// Placing triangulation of the full-dimensional cone spanned by `rays` in
/// dimension `m`. Rays are placed in the given order.
pub(crate) fn placing_triangulation(rays: &[IVec], m: usize) -> Vec<Vec<usize>> {
    assert_eq!(rank(rays, m), m, "rays do not span the space");
    let mut first: Vec<usize> = Vec::new();
    let mut chosen: Vec<IVec> = Vec::new();
    for (i, r) in rays.iter().enumerate() {
        chosen.push(r.clone());
        if rank(&chosen, m) == chosen.len() {
            first.push(i);
        } else {
            chosen.pop();
        }
        if first.len() == m {
            break;
        }
    }
    let mut simplices: Vec<Vec<usize>> = vec![first.clone()];
    // boundary facets of the current union, each with the opposite vertex
    let mut boundary: HashMap<Vec<usize>, usize> = HashMap::new();
    for k in 0..first.len() {
        let mut f = first.clone();
        let opp = f.remove(k);
        boundary.insert(f, opp);
    }
    let mut normals: HashMap<Vec<usize>, IVec> = HashMap::new();

    for (i, v) in rays.iter().enumerate() {
        if first.contains(&i) {
            continue;
        }
        let mut visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(f, &opp)| {
                let n = normals.entry((*f).clone()).or_insert_with(|| {
                    let vs: Vec<IVec> = f.iter().map(|&j| rays[j].clone()).collect();
                    hyperplane_normal(&vs, m)
                });
                let side = dot(n, &rays[opp]).signum();
                debug_assert!(side != 0);
                dot(n, v).signum() == -side
            })
            .map(|(f, _)| f.clone())
            .collect();
        visible.sort();
        for f in visible {
            boundary.remove(&f);
            let mut s = f.clone();
            s.push(i);
            s.sort();
            for (k, &opp) in f.iter().enumerate() {
                let mut g = f.clone();
                g.remove(k);
                g.push(i);
                g.sort();
                if boundary.remove(&g).is_none() {
                    boundary.insert(g, opp);
                }
            }
            simplices.push(s);
        }
    }
    simplices
}

fn parallelepiped_points(cols: &[IVec], bound: Option<&(IVec, i128)>) -> Vec<IVec> {
    let m = cols.len();
    let (det, adj) = det_adjugate(cols);
    let d = det.abs();
    let sgn = det.signum();
    let diag = hermite_diagonal(cols);
    let ray_degree: Option<Vec<i128>> = bound.map(|(g, _)| cols.iter().map(|c| dot(g, c)).collect());

    // coset representatives x with 0 <= x_i < diag_i; lambda = adj x / det
    let mut out = Vec::new();
    let mut x = vec![0i128; m];
    loop {
        let mu: Vec<i128> = adj
            .iter()
            .map(|row| (mul(dot(row, &x), sgn)).rem_euclid(d))
            .collect();
        let within = match (&ray_degree, bound) {
            (Some(rd), Some((_, maxd))) => dot(&mu, rd) <= mul(*maxd, d),
            _ => true,
        };
        if within {
            let mut p = vec![0i128; m];
            for (c, &l) in cols.iter().zip(&mu) {
                if l != 0 {
                    for (pi, &ci) in p.iter_mut().zip(c) {
                        *pi = add(*pi, mul(l, ci));
                    }
                }
            }
            for pi in p.iter_mut() {
                debug_assert_eq!(*pi % d, 0);
                *pi /= d;
            }
            out.push(p);
        }
        // odometer over the box
        let mut k = 0;
        loop {
            if k == m {
                return out;
            }
            x[k] += 1;
            if x[k] < diag[k] {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}
