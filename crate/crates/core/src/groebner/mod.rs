//! Groebner bases over the rationals: reduced bases, normal forms, ideal
//! membership and equality, and univariate elimination.

mod buchberger;
mod order;
mod poly;

use num_bigint::BigInt;

pub use buchberger::Strategy;
pub use order::{MonomialOrder, OrderKind};
pub use poly::MAX_VARS;

use crate::exactalg::{denom_lcm, MultiPoly, Rational, UniPoly};
use crate::Error;
use buchberger::{reduce, Engine};
use poly::{IntPoly, Mono};

/// A reduced Groebner basis: monic generators sorted by increasing leading
/// monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<MultiPoly>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        normal_form(p, &self.generators, &self.order)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

fn check_vars(nvars: usize) -> Result<(), Error> {
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables {
            max: MAX_VARS,
            got: nvars,
        });
    }
    Ok(())
}

/// Integer form of `p` (denominators cleared), sorted in `order`.
fn to_int(p: &MultiPoly, order: &MonomialOrder) -> IntPoly {
    let l = denom_lcm(p.terms().map(|(_, c)| c));
    let mut q = IntPoly {
        terms: p
            .terms()
            .map(|(e, c)| (Mono::from_slice(e), c.numer() * (&l / c.denom())))
            .collect(),
    };
    q.sort(order);
    q
}

fn to_multi(p: &IntPoly, nvars: usize, scale: &Rational) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        p.terms
            .iter()
            .map(|(m, c)| (m.to_vec(nvars), Rational::from(c.clone()) * scale)),
    )
}

fn monic(p: &IntPoly, nvars: usize) -> MultiPoly {
    to_multi(p, nvars, &Rational::from(p.lc().clone()).recip())
}

/// Remainder of multivariate division of `p` by `basis` in `order`: no term
/// of the result is divisible by a leading term of the basis.
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly], order: &MonomialOrder) -> MultiPoly {
    let n = p.nvars();
    if p.is_zero() {
        return p.clone();
    }
    let l = denom_lcm(p.terms().map(|(_, c)| c));
    let ip = to_int(p, order);
    let divisors: Vec<IntPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_int(g, order))
        .collect();
    let refs: Vec<&IntPoly> = divisors.iter().collect();
    let red = reduce(&ip, &refs, order, true);
    // rem = (num / den) * (l * p - ...)
    let scale = Rational::new(red.den, red.num * BigInt::from(l));
    to_multi(&red.rem, n, &scale)
}

/// Reduced Groebner basis of the ideal generated by `gens` with the default
/// (sugar) pair selection.
pub fn buchberger(gens: &[MultiPoly], order: &MonomialOrder) -> Result<GroebnerBasis, Error> {
    buchberger_with(gens, order, Strategy::default())
}

pub fn buchberger_with(
    gens: &[MultiPoly],
    order: &MonomialOrder,
    strategy: Strategy,
) -> Result<GroebnerBasis, Error> {
    check_vars(order.nvars)?;
    for g in gens {
        if g.nvars() != order.nvars {
            return Err(Error::DimensionMismatch {
                expected: order.nvars,
                got: g.nvars(),
            });
        }
    }
    let inputs = gens.iter().map(|g| to_int(g, order)).collect();
    let basis = Engine::new(*order, strategy).run(inputs);
    Ok(GroebnerBasis {
        generators: basis.iter().map(|p| monic(p, order.nvars)).collect(),
        order: *order,
    })
}

fn nvars_of(ps: &[MultiPoly]) -> Option<usize> {
    ps.first().map(MultiPoly::nvars)
}

/// Ideal membership via a graded reverse lex basis.
pub fn ideal_member(p: &MultiPoly, gens: &[MultiPoly]) -> Result<bool, Error> {
    if p.is_zero() {
        return Ok(true);
    }
    let order = MonomialOrder::grevlex(p.nvars());
    let gb = buchberger(gens, &order)?;
    Ok(gb.contains(p))
}

/// True when `a` and `b` generate the same ideal.
pub fn ideal_equal(a: &[MultiPoly], b: &[MultiPoly]) -> Result<bool, Error> {
    let Some(n) = nvars_of(a).or(nvars_of(b)) else {
        return Ok(true);
    };
    let order = MonomialOrder::grevlex(n);
    let ga = buchberger(a, &order)?;
    let gb = buchberger(b, &order)?;
    // reduced bases are unique
    Ok(ga.generators == gb.generators)
}

/// How [`eliminate_to_univariate_with`] finds the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EliminationMethod {
    /// Graded reverse lex basis, then the first linear dependency among the
    /// normal forms of `1, t, t^2, ...`. Falls back to `BlockOrder` when no
    /// dependency shows up below [`MINPOLY_DEGREE_LIMIT`].
    #[default]
    MinimalPolynomial,
    /// The basis element free of the eliminated variables in a block
    /// elimination order.
    BlockOrder,
}

/// Largest degree tried by the minimal polynomial search.
pub const MINPOLY_DEGREE_LIMIT: usize = 64;

/// Monic generator of `(gens) ∩ Q[t]`, where the first `eliminate`
/// variables are eliminated and exactly one variable `t` remains.
pub fn eliminate_to_univariate(gens: &[MultiPoly], eliminate: usize) -> Result<UniPoly, Error> {
    eliminate_to_univariate_with(gens, eliminate, EliminationMethod::default())
}

pub fn eliminate_to_univariate_with(
    gens: &[MultiPoly],
    eliminate: usize,
    method: EliminationMethod,
) -> Result<UniPoly, Error> {
    let Some(n) = nvars_of(gens) else {
        return Err(Error::ZeroEliminationIdeal);
    };
    if n != eliminate + 1 {
        return Err(Error::DimensionMismatch {
            expected: eliminate + 1,
            got: n,
        });
    }
    match method {
        EliminationMethod::BlockOrder => eliminate_block(gens, eliminate),
        EliminationMethod::MinimalPolynomial => match minimal_polynomial(gens, eliminate)? {
            Some(p) => Ok(p),
            None => eliminate_block(gens, eliminate),
        },
    }
}

fn eliminate_block(gens: &[MultiPoly], eliminate: usize) -> Result<UniPoly, Error> {
    let order = MonomialOrder::block_elimination(eliminate, eliminate + 1);
    let gb = buchberger(gens, &order)?;
    let uni = gb
        .generators()
        .iter()
        .find(|g| g.terms().all(|(e, _)| e[..eliminate].iter().all(|&x| x == 0)))
        .ok_or(Error::ZeroEliminationIdeal)?;
    let deg = uni.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (e, c) in uni.terms() {
        coeffs[e[eliminate] as usize] = c.clone();
    }
    Ok(UniPoly::new(coeffs).monic())
}

/// Minimal polynomial of the last variable modulo the ideal, or `None` if
/// its degree exceeds the search limit.
fn minimal_polynomial(gens: &[MultiPoly], eliminate: usize) -> Result<Option<UniPoly>, Error> {
    let n = eliminate + 1;
    let order = MonomialOrder::grevlex(n);
    let gb = buchberger(gens, &order)?;
    if gb.is_unit() {
        return Ok(Some(UniPoly::one()));
    }
    let t = MultiPoly::var(n, eliminate);
    // echelon rows: (pivot exponent, vector with pivot coefficient 1,
    // coefficients of 1, t, ..., t^k expressing it)
    let mut rows: Vec<(Vec<u32>, MultiPoly, Vec<Rational>)> = Vec::new();
    let mut power = MultiPoly::one(n);
    for k in 0..=MINPOLY_DEGREE_LIMIT {
        if k > 0 {
            power = gb.normal_form(&(&power * &t));
        }
        let mut v = power.clone();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (pivot, row, row_combo) in &rows {
            let c = v.coeff(pivot);
            if c.is_zero() {
                continue;
            }
            v = &v - &row.scale(&c);
            for (x, y) in combo.iter_mut().zip(row_combo) {
                *x = &*x - &(&c * y);
            }
        }
        if v.is_zero() {
            return Ok(Some(UniPoly::new(combo)));
        }
        let (pivot, lead) = v
            .terms()
            .last()
            .map(|(e, c)| (e.clone(), c.recip()))
            .expect("nonzero");
        combo.iter_mut().for_each(|x| *x = &*x * &lead);
        rows.push((pivot, v.scale(&lead), combo));
    }
    Ok(None)
}
