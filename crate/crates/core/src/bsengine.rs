//! The b-function pipeline and the operations built on b-functions.

use std::time::{Duration, Instant};

use crate::conegen::{af_generator_products, drop_multiples, linear_forms, ExponentMatrix};
use crate::exactalg::{FactoredBPoly, MultiPoly, Rational, UniPoly};
use crate::groebner::eliminate_to_univariate;
use crate::Error;

/// Largest ambient dimension accepted by the hitting-set search in [`codim`].
pub const MAX_CODIM_VARS: usize = 24;

/// Output of [`bernstein_sato`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsResult {
    /// `b_f(s)` in factored form.
    pub bf: FactoredBPoly,
    pub bf_expanded: UniPoly,
    /// Number of distinct generators `g_c` found by the cone decomposition.
    pub af_generator_count: usize,
    /// Generators left after dropping multiples; these enter the elimination.
    pub elimination_input_count: usize,
    /// Codimension of the subscheme.
    pub codim: usize,
    /// `b_Z(s) = b_f(s - codim)`.
    pub bz: FactoredBPoly,
    pub elapsed: Duration,
}

/// Weights `w` in `N^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<u32>);

/// Computes `b_f` as the monic generator of `(a_f + (t - sum s_i)) ∩ Q[t]`
/// and factors it.
pub fn bernstein_sato(a: &ExponentMatrix) -> Result<BsResult, Error> {
    let start = Instant::now();
    let r = a.r();
    let products = af_generator_products(a);
    let pruned = drop_multiples(&products);

    let mut gens: Vec<MultiPoly> = pruned.iter().map(|p| p.expand(r).extend_vars(1)).collect();
    let t = MultiPoly::var(r + 1, r);
    let sum_s = (0..r).fold(MultiPoly::zero(r + 1), |acc, i| &acc + &MultiPoly::var(r + 1, i));
    gens.push(&t - &sum_s);

    let expanded = eliminate_to_univariate(&gens, r)?;
    let bf = FactoredBPoly::factor_rational_roots(&expanded)?;
    if let Some(bad) = bf.factors().keys().find(|alpha| !alpha.is_positive()) {
        return Err(Error::InvariantViolation(format!(
            "b_f(-s) has the non-positive root {bad}"
        )));
    }
    let codim = codim(a)?;
    let bz = bf.shift_variable(&Rational::from(codim));
    Ok(BsResult {
        bf,
        bf_expanded: expanded,
        af_generator_count: products.len(),
        elimination_input_count: pruned.len(),
        codim,
        bz,
        elapsed: start.elapsed(),
    })
}

/// Codimension of the monomial subscheme: the fewest variables meeting the
/// support of every monomial.
pub fn codim(a: &ExponentMatrix) -> Result<usize, Error> {
    let n = a.n();
    if n > MAX_CODIM_VARS {
        return Err(Error::TooManyVariables {
            max: MAX_CODIM_VARS,
            got: n,
        });
    }
    let supports: Vec<u32> = a
        .columns()
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .fold(0u32, |m, (i, &x)| if x > 0 { m | 1 << i } else { m })
        })
        .collect();
    let hits = |set: u32| supports.iter().all(|&s| s & set != 0);
    // smallest popcount first; the full set always hits
    let best = (1u32..(1u32 << n))
        .filter(|&set| hits(set))
        .map(|set| set.count_ones() as usize)
        .min()
        .unwrap_or(n);
    Ok(best)
}

/// Combines the b-functions of ideals on disjoint variable sets:
/// `q_g = max { n_a + m_b - 1 : a + b = g }`.
pub fn compose_thom_sebastiani(bf: &FactoredBPoly, bg: &FactoredBPoly) -> FactoredBPoly {
    let mut out: std::collections::BTreeMap<Rational, u32> = std::collections::BTreeMap::new();
    for (alpha, &na) in bf.factors() {
        for (beta, &mb) in bg.factors() {
            let q = na + mb - 1;
            let e = out.entry(alpha + beta).or_insert(0);
            *e = (*e).max(q);
        }
    }
    FactoredBPoly::from_pairs(out)
}

/// `b_{f,w}(s) = prod_i (l_i(s) + 1) ... (l_i(s) + l_i(w))`.
pub fn bw_generator(a: &ExponentMatrix, w: &WeightVector) -> Result<MultiPoly, Error> {
    let r = a.r();
    if w.0.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: w.0.len(),
        });
    }
    let forms = linear_forms(a);
    let mut out = MultiPoly::one(r);
    for form in &forms[..a.n()] {
        let coeffs: Vec<Rational> = form.iter().map(|&x| Rational::from(x)).collect();
        let lw: i64 = form.iter().zip(&w.0).map(|(&x, &y)| x * i64::from(y)).sum();
        for k in 1..=lw {
            out = &out * &MultiPoly::affine(&coeffs, Rational::from(k));
        }
    }
    Ok(out)
}
