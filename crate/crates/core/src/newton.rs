//! Multiplier ideals of monomial ideals through the Newton polyhedron.
//!
//! `P` is the convex hull of `a_j + R_{>=0}^n` over the exponent vectors
//! `a_j`. Each facet not through the origin is `phi(x) = <u, x> >= 1`. A
//! monomial `x^nu` lies in the multiplier ideal of exponent `alpha` iff
//! `min phi(nu + 1) > alpha`, and the jumping coefficients are the values
//! `min phi(x)` over strictly positive integer vectors `x`.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::bsengine::{bernstein_sato, BsResult};
use crate::conegen::ExponentMatrix;
use crate::exactalg::{FactoredBPoly, Rational};
use crate::polyhedra::{v_to_h, HalfSpace, VRep};
use crate::Error;

/// Facet functionals of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Vec<Rational>>,
    orthant_facets: Vec<HalfSpace>,
}

/// A jumping coefficient with the lexicographically least positive integer
/// vector attaining it inside the search box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jump {
    pub value: Rational,
    pub witness: Vec<u64>,
}

/// Comparison of the Newton side with the roots of `b(-s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootJumpCheck {
    /// Factored `b_f`; the key `alpha` stands for the factor `s + alpha`.
    pub bf: FactoredBPoly,
    pub min_root: Rational,
    pub lct_matches: bool,
    /// Jumps in `[lct, lct + 1)`.
    pub window_jumps: Vec<Rational>,
    /// Window jumps that are not roots. Must be empty.
    pub missing_from_roots: Vec<Rational>,
    /// Every root together with whether it is a jumping coefficient.
    pub root_is_jump: Vec<(Rational, bool)>,
}

impl RootJumpCheck {
    pub fn passed(&self) -> bool {
        self.lct_matches && self.missing_from_roots.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpReport {
    pub lct: Rational,
    /// Largest value searched.
    pub max: Rational,
    /// Side of the search box `{1..bound}^n`.
    pub bound: u64,
    pub jumps: Vec<Jump>,
    pub root_check: Option<RootJumpCheck>,
}

impl NewtonPolyhedron {
    pub fn new(a: &ExponentMatrix) -> Result<Self, Error> {
        let n = a.n();
        let points: Vec<Vec<i64>> = a
            .columns()
            .iter()
            .map(|c| c.iter().map(|&x| i64::from(x)).collect())
            .collect();
        let rays: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let h = v_to_h(&VRep::from_integers(n, &points, &rays))?;
        let mut facets = Vec::new();
        let mut orthant_facets = Vec::new();
        for hs in h.inequalities {
            if hs.offset.is_positive() {
                facets.push(hs.normal.iter().map(|u| u / &hs.offset).collect());
            } else {
                orthant_facets.push(hs);
            }
        }
        facets.sort();
        Ok(NewtonPolyhedron {
            dim: n,
            facets,
            orthant_facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient vectors `u` with the facet on `<u, x> = 1`.
    pub fn facets(&self) -> &[Vec<Rational>] {
        &self.facets
    }

    /// Inequalities through the origin (coordinate walls).
    pub fn orthant_facets(&self) -> &[HalfSpace] {
        &self.orthant_facets
    }

    fn min_phi(&self, x: &[Rational]) -> Rational {
        self.facets
            .iter()
            .map(|u| u.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>())
            .min()
            .expect("a Newton polyhedron has at least one facet off the origin")
    }

    /// `min phi(x)` for a strictly positive integer vector `x`.
    pub fn jump_of_monomial(&self, x: &[u64]) -> Result<Rational, Error> {
        self.check_len(x.len())?;
        if let Some(i) = x.iter().position(|&v| v == 0) {
            return Err(Error::NonPositiveCoordinate(i));
        }
        let x: Vec<Rational> = x.iter().map(|&v| Rational::from(v)).collect();
        Ok(self.min_phi(&x))
    }

    /// Log canonical threshold `min phi(1, ..., 1)`.
    pub fn lct(&self) -> Rational {
        self.min_phi(&vec![Rational::one(); self.dim])
    }

    /// Whether `x^nu` lies in the multiplier ideal of exponent `alpha`.
    pub fn multiplier_membership(&self, nu: &[u64], alpha: &Rational) -> Result<bool, Error> {
        self.check_len(nu.len())?;
        let x: Vec<Rational> = nu.iter().map(|&v| Rational::from(v + 1)).collect();
        Ok(self.min_phi(&x) > *alpha)
    }

    /// Side `B` of the box `{1..B}^n` holding a witness for every jump up to
    /// `max`: `ceil((max + U) / d)` with `U` the largest and `d` the smallest
    /// positive facet coefficient.
    pub fn search_bound(&self, max: &Rational) -> u64 {
        let coeffs = self.facets.iter().flatten().filter(|c| c.is_positive());
        let upper = coeffs.clone().max().cloned().unwrap_or_else(Rational::one);
        let delta = coeffs.min().cloned().unwrap_or_else(Rational::one);
        ((max + &upper) / delta)
            .ceil()
            .to_u64()
            .expect("search bound fits in 64 bits")
            .max(1)
    }

    /// All jumping coefficients `<= max`, increasing, each with its
    /// lexicographically least witness in the search box.
    pub fn jumping_coefficients(&self, max: &Rational) -> Result<(Vec<Jump>, u64), Error> {
        let lct = self.lct();
        if *max < lct {
            return Err(Error::BelowThreshold {
                max: max.to_string(),
                lct: lct.to_string(),
            });
        }
        let bound = self.search_bound(max);
        // integer form: phi_k(x) = <w_k, x> / den_k
        let integral: Vec<(Vec<i128>, i128)> = self
            .facets
            .iter()
            .map(|u| {
                let den = crate::exactalg::denom_lcm(u.iter());
                let w = u
                    .iter()
                    .map(|c| (c * &Rational::from(den.clone())).numer().to_i128().expect("facet fits"))
                    .collect();
                (w, den.to_i128().expect("facet fits"))
            })
            .collect();

        let n = self.dim;
        let mut found: BTreeMap<Rational, Vec<u64>> = BTreeMap::new();
        let mut x = vec![1u64; n];
        loop {
            let (num, den) = integral
                .iter()
                .map(|(w, d)| {
                    let v: i128 = w.iter().zip(&x).map(|(a, &b)| a * i128::from(b)).sum();
                    (v, *d)
                })
                .min_by(|(a, b), (c, d)| (a * d).cmp(&(c * b)))
                .expect("at least one facet");
            let value = Rational::new(num, den);
            if value <= *max {
                found.entry(value).or_insert_with(|| x.clone());
            }
            // odometer with the last coordinate fastest: lexicographic order
            let mut k = n;
            loop {
                if k == 0 {
                    let jumps = found
                        .into_iter()
                        .map(|(value, witness)| Jump { value, witness })
                        .collect();
                    return Ok((jumps, bound));
                }
                k -= 1;
                if x[k] < bound {
                    x[k] += 1;
                    break;
                }
                x[k] = 1;
            }
        }
    }

    /// Jump report without the comparison against `b_f`.
    pub fn report(&self, max: &Rational) -> Result<JumpReport, Error> {
        let (jumps, bound) = self.jumping_coefficients(max)?;
        Ok(JumpReport {
            lct: self.lct(),
            max: max.clone(),
            bound,
            jumps,
            root_check: None,
        })
    }

    fn check_len(&self, got: usize) -> Result<(), Error> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }
}

/// Runs both sides and compares them: the threshold must be the smallest
/// root of `b(-s)` and every jump in `[lct, lct + 1)` must be a root.
pub fn check_roots(a: &ExponentMatrix) -> Result<JumpReport, Error> {
    let bs = bernstein_sato(a)?;
    check_roots_with(a, &bs)
}

/// [`check_roots`] reusing an already computed b-function.
pub fn check_roots_with(a: &ExponentMatrix, bs: &BsResult) -> Result<JumpReport, Error> {
    let p = NewtonPolyhedron::new(a)?;
    let lct = p.lct();
    let roots: Vec<Rational> = bs.bf.factors().keys().cloned().collect();
    let min_root = roots
        .first()
        .cloned()
        .ok_or_else(|| Error::InvariantViolation("b-function without roots".into()))?;
    let window_end = &lct + &Rational::one();
    let max = roots.last().cloned().unwrap_or_else(|| lct.clone()).max(window_end.clone());
    let mut report = p.report(&max)?;
    let is_jump = |v: &Rational| report.jumps.iter().any(|j| j.value == *v);
    let window_jumps: Vec<Rational> = report
        .jumps
        .iter()
        .map(|j| j.value.clone())
        .filter(|v| *v >= lct && *v < window_end)
        .collect();
    let missing_from_roots = window_jumps
        .iter()
        .filter(|v| !roots.contains(v))
        .cloned()
        .collect();
    let root_is_jump = roots.iter().map(|r| (r.clone(), is_jump(r))).collect();
    report.root_check = Some(RootJumpCheck {
        bf: bs.bf.clone(),
        lct_matches: min_root == lct,
        min_root,
        window_jumps,
        missing_from_roots,
        root_is_jump,
    });
    Ok(report)
}
