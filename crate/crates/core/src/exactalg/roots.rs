//! Rational roots of univariate polynomials without enumerating divisors.
//!
//! Real roots are isolated with a Sturm sequence. Inside an isolating
//! interval the simplest rational (smallest denominator) is tested while the
//! interval shrinks: a root `p/q` becomes the simplest rational of its
//! interval once the width drops below `1/q^2`, and `q` divides the leading
//! coefficient `L` of the primitive integer form, so refining to width
//! `1/L^2` settles whether the root is rational.

use super::rational::Rational;
use super::unipoly::UniPoly;

/// Distinct rational roots of `p`, increasing. `p` must be nonzero.
pub(crate) fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = p.div_rem(&p.gcd(&p.derivative())).0;
    let search = Search::new(&sqf);
    let bound = cauchy_bound(&sqf);
    let lo = -bound.clone();
    let (vlo, vhi) = (search.sign_changes(&lo), search.sign_changes(&bound));
    let mut out = Vec::new();
    search.isolate(lo, bound, vlo, vhi, &mut out);
    out.sort();
    out.dedup();
    out
}

/// `1 + max |a_i / a_n|`, larger than the absolute value of every root.
fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

struct Search {
    poly: UniPoly,
    chain: Vec<UniPoly>,
    min_width: Rational,
}

impl Search {
    fn new(sqf: &UniPoly) -> Self {
        // divide by |lc| only, so signs (and sign changes) are unchanged
        let normalize = |p: UniPoly| -> UniPoly {
            let lc = p.leading().map(Rational::abs).unwrap_or_else(Rational::one);
            UniPoly::new(p.coeffs().iter().map(|c| c / &lc).collect())
        };
        let mut chain = vec![normalize(sqf.clone()), normalize(sqf.derivative())];
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(normalize(UniPoly::new(r.coeffs().iter().map(|c| -c.clone()).collect())));
        }
        let lead = Rational::from(sqf.primitive_integer().last().expect("nonzero").clone());
        Search {
            poly: sqf.clone(),
            chain,
            min_width: (&lead * &lead).recip(),
        }
    }

    fn sign_changes(&self, x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// A point strictly inside `(lo, hi)` that is not a root. Roots met on
    /// the way are recorded.
    fn split_point(&self, lo: &Rational, hi: &Rational, out: &mut Vec<Rational>) -> Rational {
        let width = hi - lo;
        for k in 2i64.. {
            for j in 1..k {
                let x = lo + &(&width * &Rational::new(j, k));
                if self.poly.eval(&x).is_zero() {
                    out.push(x);
                } else {
                    return x;
                }
            }
        }
        unreachable!("a polynomial has finitely many roots")
    }

    /// Roots in `(lo, hi]`; `vlo` and `vhi` are the sign changes at the
    /// endpoints, neither of which is a root.
    fn isolate(&self, lo: Rational, hi: Rational, vlo: usize, vhi: usize, out: &mut Vec<Rational>) {
        match vlo - vhi {
            0 => {}
            1 => self.refine(lo, hi, vlo, out),
            _ => {
                let mid = self.split_point(&lo, &hi, out);
                let vmid = self.sign_changes(&mid);
                self.isolate(lo, mid.clone(), vlo, vmid, out);
                self.isolate(mid, hi, vmid, vhi, out);
            }
        }
    }

    /// Finds the single root in `(lo, hi]` if it is rational.
    fn refine(&self, mut lo: Rational, mut hi: Rational, mut vlo: usize, out: &mut Vec<Rational>) {
        loop {
            let r = simplest_between(&lo, &hi);
            if self.poly.eval(&r).is_zero() {
                out.push(r);
                return;
            }
            if &hi - &lo < self.min_width {
                return;
            }
            let before = out.len();
            let mid = self.split_point(&lo, &hi, out);
            if out.len() > before {
                // the only root in the interval was hit while splitting
                return;
            }
            let vmid = self.sign_changes(&mid);
            if vlo - vmid == 1 {
                hi = mid;
            } else {
                lo = mid;
                vlo = vmid;
            }
        }
    }
}

/// The rational with the smallest denominator in `[a, b]`, `a <= b`.
pub(crate) fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    let fl = Rational::from(a.floor());
    if fl == *a {
        return a.clone();
    }
    let next = &fl + &Rational::one();
    if next <= *b {
        return next;
    }
    // fl < a <= b < fl + 1
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}
