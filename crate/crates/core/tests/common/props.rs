//! Property suites. Each function runs its own proptest runner so the same
//! checks can be driven from the property tests and the acceptance run.

use std::collections::{BTreeSet, HashMap};

use bsato::conegen::{af_shift_vectors, chambers, linear_forms, module_generators, ShiftVector, SignVector};
use bsato::groebner::{buchberger, eliminate_to_univariate_with, EliminationMethod, MonomialOrder};
use bsato::polyhedra::{v_to_h, PointedCone, VRep};
use bsato::{
    bernstein_sato, compose_thom_sebastiani, Error, ExponentMatrix, FactoredBPoly, MultiPoly, NewtonPolyhedron,
    Rational,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use super::{q, rank, solve};

pub const CASES: u32 = 100;

type Property = fn(u32) -> Result<(), String>;

/// Every suite, by name.
pub const ALL: &[(&str, Property)] = &[
    ("rational field laws", rational_laws),
    ("polynomial ring laws", multipoly_ring_laws),
    ("expand then factor", expand_factor_round_trip),
    ("groebner invariants", groebner_invariants),
    ("elimination methods agree", elimination_methods_agree),
    ("hilbert basis coverage and irreducibility", hilbert_basis_coverage),
    ("extreme rays", extreme_rays),
    ("v-to-h round trip", v_to_h_round_trip),
    ("module generator coverage", module_generator_coverage),
    ("chamber and symmetry reduction", chamber_and_symmetry_agreement),
    ("generator redundancy invariance", generator_redundancy),
    ("permutation and zero-row invariance", permutation_and_zero_row),
    ("thom-sebastiani consistency", thom_sebastiani),
    ("jump brute-force oracle", jump_oracle),
    ("membership monotonicity", membership_monotone),
    ("integral closure invariance", integral_closure),
];

fn run<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    let config = Config {
        cases,
        failure_persistence: None,
        max_global_rejects: 100_000,
        ..Config::default()
    };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| q(n, d))
}

/// Random matrix: row and column counts drawn from the ranges, entries at
/// most `max_entry`, no unit monomial. Repeated columns collapse.
fn exponent_matrix(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
    max_entry: u32,
) -> impl Strategy<Value = ExponentMatrix> {
    rows.prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_entry, n), cols.clone())
            .prop_filter("unit monomial", |cs| cs.iter().all(|c| c.iter().any(|&x| x > 0)))
            .prop_map(move |cs| ExponentMatrix::from_columns(n, cs).unwrap())
    })
}

pub fn rational_laws(cases: u32) -> Result<(), String> {
    run(cases, (rational(), rational(), rational()), |(a, b, c)| {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        prop_assert!(Rational::from(a.denom().clone()).is_positive());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let f = Rational::from(a.floor());
        prop_assert!(f <= a && a < &f + &Rational::one());
        Ok(())
    })
}

fn multipoly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 0..=max_terms).prop_map(
        move |terms| MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, Rational::from(c)))),
    )
}

pub fn multipoly_ring_laws(cases: u32) -> Result<(), String> {
    let point = prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d)), 3);
    let polys = (multipoly(3, 3, 4), multipoly(3, 3, 4), multipoly(3, 3, 4), point);
    run(cases, polys, |(a, b, c, x)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        Ok(())
    })
}

pub fn expand_factor_round_trip(cases: u32) -> Result<(), String> {
    let factors = prop::collection::vec((-20i64..=20, 1i64..=6, 1u32..=3), 0..=4);
    run(cases, factors, |fs| {
        let b = FactoredBPoly::from_pairs(fs.iter().map(|&(n, d, m)| (q(n, d), m)));
        let p = b.expand();
        prop_assert_eq!(p.degree().unwrap_or(0) as u32, b.degree());
        prop_assert_eq!(FactoredBPoly::factor_rational_roots(&p).unwrap(), b.clone());
        for alpha in b.factors().keys() {
            prop_assert!(p.eval(&-alpha.clone()).is_zero());
        }
        Ok(())
    })
}

fn leading(p: &MultiPoly, order: &MonomialOrder) -> Vec<u32> {
    p.terms()
        .map(|(e, _)| e.clone())
        .max_by(|a, b| order.cmp_exps(a, b))
        .expect("nonzero polynomial")
}

fn monomial(nvars: usize, e: Vec<u32>) -> MultiPoly {
    MultiPoly::from_terms(nvars, [(e, Rational::one())])
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let n = f.nvars();
    let (lf, lg) = (leading(f, order), leading(g, order));
    let l: Vec<u32> = lf.iter().zip(&lg).map(|(a, b)| *a.max(b)).collect();
    let mf = l.iter().zip(&lf).map(|(a, b)| a - b).collect();
    let mg = l.iter().zip(&lg).map(|(a, b)| a - b).collect();
    let left = (&monomial(n, mf) * f).scale(&g.coeff(&lg));
    let right = (&monomial(n, mg) * g).scale(&f.coeff(&lf));
    &left - &right
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn groebner_invariants(cases: u32) -> Result<(), String> {
    // lex bases of random zero-dimensional ideals have huge intermediate
    // coefficients, so lex inputs are kept multilinear
    let inputs = any::<bool>().prop_flat_map(|lex| {
        let max_exp = if lex { 1 } else { 2 };
        (prop::collection::vec(multipoly(3, max_exp, 3), 1..=4), multipoly(3, 3, 5), Just(lex))
    });
    run(cases, inputs, |(gens, p, lex)| {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let order = if lex { MonomialOrder::lex(3) } else { MonomialOrder::grevlex(3) };
        let gb = buchberger(&gens, &order).map_err(|e| fail(e.to_string()))?;
        let basis = gb.generators();
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero(), "input {g} does not reduce to zero");
        }
        let leads: Vec<Vec<u32>> = basis.iter().map(|g| leading(g, &order)).collect();
        for (i, g) in basis.iter().enumerate() {
            prop_assert!(g.coeff(&leads[i]).is_one(), "basis element {g} is not monic");
            for (j, h) in basis.iter().enumerate().skip(i + 1) {
                let s = s_polynomial(g, h, &order);
                prop_assert!(gb.normal_form(&s).is_zero(), "S({g}, {h}) does not reduce to zero");
                prop_assert!(!divides(&leads[i], &leads[j]) && !divides(&leads[j], &leads[i]));
            }
        }
        let r = gb.normal_form(&p);
        prop_assert_eq!(gb.normal_form(&r), r.clone());
        prop_assert!(gb.contains(&(&p - &r)));
        for (e, _) in r.terms() {
            prop_assert!(!leads.iter().any(|l| divides(l, e)), "normal form term is reducible");
        }
        Ok(())
    })
}

pub fn elimination_methods_agree(cases: u32) -> Result<(), String> {
    let system = (1usize..=2).prop_flat_map(|k| {
        let univariate = prop::collection::vec(prop::collection::vec(0i64..=4, 1..=3), k);
        let affine = prop::collection::vec((prop::collection::vec(-2i64..=2, k), 0i64..=3), 1..=2);
        (Just(k), univariate, prop::collection::vec(affine, 0..=2))
    });
    run(cases, system, |(k, univariate, products)| {
        let n = k + 1;
        let one = Rational::one();
        let mut gens = Vec::new();
        for (i, roots) in univariate.iter().enumerate() {
            let mut p = MultiPoly::one(n);
            for &c in roots {
                p = &p * &(&MultiPoly::var(n, i) + &MultiPoly::constant(n, Rational::from(c)));
            }
            gens.push(p);
        }
        for factors in &products {
            let mut p = MultiPoly::one(n);
            for (coeffs, c) in factors {
                let mut full: Vec<Rational> = coeffs.iter().map(|&x| Rational::from(x)).collect();
                full.push(Rational::zero());
                p = &p * &MultiPoly::affine(&full, Rational::from(*c));
            }
            gens.push(p);
        }
        let mut t_rel: Vec<Rational> = vec![-one.clone(); k];
        t_rel.push(one);
        gens.push(MultiPoly::affine(&t_rel, Rational::zero()));
        let a = eliminate_to_univariate_with(&gens, k, EliminationMethod::MinimalPolynomial);
        let b = eliminate_to_univariate_with(&gens, k, EliminationMethod::BlockOrder);
        prop_assert_eq!(&a, &b);
        if let Ok(p) = a {
            prop_assert!(p.leading().is_some_and(Rational::is_one));
        }
        Ok(())
    })
}

/// Random cone `{x : <u, x> >= 0}` in dimension 2 or 3. Non-pointed draws
/// are rejected.
fn random_cone() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=3).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-3i64..=3, d), 2..=5))
}

fn build_cone(normals: &[Vec<i64>]) -> Option<PointedCone> {
    PointedCone::from_i64(normals[0].len(), normals, &[]).ok()
}

fn box_points(dim: usize, radius: i128) -> Vec<Vec<i128>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-radius..=radius).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

fn sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Whether `x` is a sum of elements of `hb`. The recursion terminates
/// because the grading is positive on the nonzero points of the cone.
fn decomposes(x: &[i128], hb: &[Vec<i128>], cone: &PointedCone, memo: &mut HashMap<Vec<i128>, bool>) -> bool {
    if x.iter().all(|&v| v == 0) {
        return true;
    }
    if let Some(&known) = memo.get(x) {
        return known;
    }
    let ok = hb.iter().any(|h| {
        let y = sub(x, h);
        cone.contains(&y) && decomposes(&y, hb, cone, memo)
    });
    memo.insert(x.to_vec(), ok);
    ok
}

pub fn hilbert_basis_coverage(cases: u32) -> Result<(), String> {
    run(cases, random_cone(), |normals| {
        let cone = build_cone(&normals);
        prop_assume!(cone.is_some());
        let cone = cone.unwrap();
        let hb = cone.hilbert_basis();
        for h in &hb {
            prop_assert!(cone.contains(h) && h.iter().any(|&x| x != 0));
        }
        for (i, h) in hb.iter().enumerate() {
            for (j, k) in hb.iter().enumerate() {
                prop_assert!(i == j || !cone.contains(&sub(h, k)), "{h:?} - {k:?} lies in the cone");
            }
        }
        let mut memo = HashMap::new();
        for x in box_points(cone.dim(), 10) {
            if cone.contains(&x) {
                prop_assert!(decomposes(&x, &hb, &cone, &mut memo), "{x:?} is not covered");
            }
        }
        Ok(())
    })
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn extreme_rays(cases: u32) -> Result<(), String> {
    run(cases, random_cone(), |normals| {
        let cone = build_cone(&normals);
        prop_assume!(cone.is_some());
        let cone = cone.unwrap();
        let rays = cone.extreme_rays();
        let hb = cone.hilbert_basis();
        let mut seen = BTreeSet::new();
        for ray in rays {
            prop_assert!(cone.contains(ray));
            prop_assert_eq!(ray.iter().fold(0, |g, &x| gcd(g, x)), 1, "{:?} is not primitive", ray);
            prop_assert!(seen.insert(ray.clone()), "repeated ray {ray:?}");
            let tight: Vec<Vec<Rational>> = normals
                .iter()
                .filter(|u| u.iter().zip(ray).map(|(&a, &b)| a as i128 * b).sum::<i128>() == 0)
                .map(|u| u.iter().map(|&x| Rational::from(x)).collect())
                .collect();
            prop_assert_eq!(rank(&tight), cone.dim() - 1, "{:?} is not extreme", ray);
            prop_assert!(hb.contains(ray), "{ray:?} missing from the Hilbert basis");
        }
        Ok(())
    })
}

fn dot_q(u: &[Rational], x: &[Rational]) -> Rational {
    u.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// The line cut out by `dim - 1` hyperplanes through the origin.
fn kernel_direction(rows: &[&Vec<Rational>]) -> Option<Vec<Rational>> {
    let d = match rows.len() {
        1 => vec![-rows[0][1].clone(), rows[0][0].clone()],
        2 => {
            let (a, b) = (rows[0], rows[1]);
            vec![
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ]
        }
        _ => unreachable!("dimension 2 or 3"),
    };
    d.iter().any(|x| !x.is_zero()).then_some(d)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Compares the half-space output with an independent vertex and
/// recession-direction enumeration over subsets of inequalities.
pub fn v_to_h_round_trip(cases: u32) -> Result<(), String> {
    let input = (2usize..=3).prop_flat_map(|d| {
        (
            Just(d),
            prop::collection::vec(prop::collection::vec(0i64..=6, d), d + 1..=7),
            any::<bool>(),
        )
    });
    run(cases, input, |(dim, points, newton)| {
        let rays: Vec<Vec<i64>> = if newton {
            (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect()
        } else {
            Vec::new()
        };
        let v = VRep::from_integers(dim, &points, &rays);
        let h = v_to_h(&v).map_err(|e| fail(e.to_string()))?;
        prop_assume!(h.equations.is_empty());
        for p in &v.points {
            prop_assert!(h.contains(p), "generator {p:?} violates the output");
        }
        for r in &v.rays {
            prop_assert!(h.inequalities.iter().all(|f| !dot_q(&f.normal, r).is_negative()));
        }
        // every inequality is a facet
        for f in &h.inequalities {
            let tight: Vec<&Vec<Rational>> = v.points.iter().filter(|p| f.value(p) == f.offset).collect();
            prop_assert!(!tight.is_empty(), "inequality {f:?} touches no generator");
            let mut span: Vec<Vec<Rational>> = tight
                .iter()
                .map(|p| p.iter().zip(tight[0]).map(|(a, b)| a - b).collect())
                .collect();
            span.extend(v.rays.iter().filter(|r| dot_q(&f.normal, r).is_zero()).cloned());
            prop_assert_eq!(rank(&span), dim - 1, "{:?} is not a facet", f);
        }
        // vertices of the output are input points
        for idx in subsets(h.inequalities.len(), dim) {
            let m: Vec<Vec<Rational>> = idx.iter().map(|&i| h.inequalities[i].normal.clone()).collect();
            let rhs: Vec<Rational> = idx.iter().map(|&i| h.inequalities[i].offset.clone()).collect();
            if let Some(x) = solve(&m, &rhs) {
                if h.contains(&x) {
                    prop_assert!(v.points.contains(&x), "vertex {x:?} is not an input point");
                }
            }
        }
        // recession directions are nonnegative combinations of input rays
        for idx in subsets(h.inequalities.len(), dim - 1) {
            let rows: Vec<&Vec<Rational>> = idx.iter().map(|&i| &h.inequalities[i].normal).collect();
            let Some(d) = kernel_direction(&rows) else { continue };
            for dir in [d.clone(), d.iter().map(|x| -x.clone()).collect()] {
                if h.inequalities.iter().all(|f| !dot_q(&f.normal, &dir).is_negative()) {
                    prop_assert!(newton, "bounded input has recession direction {dir:?}");
                    prop_assert!(dir.iter().all(|x| !x.is_negative()), "{dir:?} leaves the orthant");
                }
            }
        }
        Ok(())
    })
}

fn dot_i(u: &[i64], c: &[i64]) -> i64 {
    u.iter().zip(c).map(|(a, b)| a * b).sum()
}

pub fn module_generator_coverage(cases: u32) -> Result<(), String> {
    run(cases, exponent_matrix(2..=2, 2..=3, 3), |a| {
        let forms = linear_forms(&a);
        let r = a.r();
        let mut shifts: Vec<Vec<i64>> = Vec::new();
        for x in box_points(r - 1, 8) {
            let mut c: Vec<i64> = x.iter().map(|&v| v as i64).collect();
            let last = 1 - c.iter().sum::<i64>();
            if last.abs() <= 8 {
                c.push(last);
                shifts.push(c);
            }
        }
        for bits in 0..1u64 << forms.len() {
            let eps = SignVector::from_bits(forms.len(), bits);
            let inside = |c: &[i64]| forms.iter().zip(&eps.0).all(|(l, &e)| i64::from(e) * dot_i(l, c) >= 0);
            let gens = module_generators(&a, &eps).map_err(|e| fail(e.to_string()))?.gens;
            for g in &gens {
                prop_assert!(inside(&g.0) && g.sum() == 1, "{g:?} outside the sign cone");
            }
            for c in shifts.iter().filter(|c| inside(c)) {
                let covered = gens.iter().any(|g| {
                    let rest: Vec<i64> = c.iter().zip(&g.0).map(|(x, y)| x - y).collect();
                    inside(&rest)
                });
                prop_assert!(covered, "{c:?} not covered for sign vector {:?}", eps.0);
            }
        }
        Ok(())
    })
}

/// Random matrices, optionally closed under permutations of the variables
/// so the symmetry group is nontrivial.
fn symmetric_matrix() -> impl Strategy<Value = ExponentMatrix> {
    (exponent_matrix(2..=3, 1..=3, 2), any::<bool>()).prop_map(|(a, close)| {
        if !close {
            return a;
        }
        let n = a.n();
        let perms: Vec<Vec<usize>> = if n == 2 {
            vec![vec![1, 0]]
        } else {
            vec![vec![1, 2, 0], vec![2, 0, 1], vec![1, 0, 2]]
        };
        let mut cols: Vec<Vec<u32>> = a.columns().to_vec();
        for c in a.columns() {
            for p in &perms {
                let mut img = vec![0; n];
                for (i, &x) in c.iter().enumerate() {
                    img[p[i]] = x;
                }
                cols.push(img);
            }
        }
        ExponentMatrix::from_columns(n, cols).unwrap()
    })
}

pub fn chamber_and_symmetry_agreement(cases: u32) -> Result<(), String> {
    run(cases, symmetric_matrix(), |a| {
        prop_assume!(a.n() + a.r() <= 7);
        let len = a.n() + a.r();
        let mut every: BTreeSet<ShiftVector> = BTreeSet::new();
        for bits in 0..1u64 << len {
            let eps = SignVector::from_bits(len, bits);
            every.extend(module_generators(&a, &eps).map_err(|e| fail(e.to_string()))?.gens);
        }
        let mut from_chambers: BTreeSet<ShiftVector> = BTreeSet::new();
        for (eps, _) in chambers(&a) {
            from_chambers.extend(module_generators(&a, &eps).map_err(|e| fail(e.to_string()))?.gens);
        }
        let reduced: BTreeSet<ShiftVector> = af_shift_vectors(&a).into_iter().collect();
        prop_assert_eq!(&from_chambers, &every);
        prop_assert_eq!(&reduced, &every);
        Ok(())
    })
}

fn bf(a: &ExponentMatrix) -> Result<FactoredBPoly, TestCaseError> {
    bernstein_sato(a).map(|r| r.bf).map_err(|e| fail(format!("{a:?}: {e}")))
}

pub fn generator_redundancy(cases: u32) -> Result<(), String> {
    let input = exponent_matrix(2..=2, 1..=3, 3).prop_flat_map(|a| {
        let r = a.r();
        (Just(a), 0..r, 0usize..2)
    });
    run(cases, input, |(a, j, i)| {
        let mut extra = a.column(j).to_vec();
        extra[i] += 1;
        let b = a.with_column(extra).unwrap();
        prop_assert_eq!(bf(&a)?, bf(&b)?);
        Ok(())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

pub fn permutation_and_zero_row(cases: u32) -> Result<(), String> {
    let input = exponent_matrix(2..=3, 1..=3, 2).prop_flat_map(|a| {
        let (n, r) = (a.n(), a.r());
        (Just(a), permutation(n), permutation(r))
    });
    run(cases, input, |(a, rows, cols)| {
        let base = bernstein_sato(&a).map_err(|e| fail(e.to_string()))?;
        prop_assert_eq!(&bf(&a.permuted(&rows, &cols))?, &base.bf);
        let padded = bernstein_sato(&a.with_zero_row()).map_err(|e| fail(e.to_string()))?;
        prop_assert_eq!(&padded.bf, &base.bf);
        prop_assert_eq!(padded.codim, base.codim);
        prop_assert_eq!(&padded.bz, &base.bz);
        Ok(())
    })
}

/// `prod_{k=1}^a (s + k/a)`, the b-function of `x^a`.
fn power_bf(a: u32) -> FactoredBPoly {
    FactoredBPoly::from_pairs((1..=a).map(|k| (q(i64::from(k), i64::from(a)), 1)))
}

/// Exhaustive small cases first, then random block-diagonal pairs.
pub fn thom_sebastiani(cases: u32) -> Result<(), String> {
    let check = |a: &ExponentMatrix, b: &ExponentMatrix| -> Result<(), TestCaseError> {
        let composed = compose_thom_sebastiani(&bf(a)?, &bf(b)?);
        prop_assert_eq!(bf(&a.block_diagonal(b))?, composed);
        Ok(())
    };
    for x in 1..=3u32 {
        let fx = ExponentMatrix::from_columns(1, vec![vec![x]]).unwrap();
        if bf(&fx).map_err(|e| e.to_string())? != power_bf(x) {
            return Err(format!("b-function of x^{x}"));
        }
        for y in 1..=3u32 {
            let fy = ExponentMatrix::from_columns(1, vec![vec![y]]).unwrap();
            let want = compose_thom_sebastiani(&power_bf(x), &power_bf(y));
            let got = bf(&fx.block_diagonal(&fy)).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("(x^{x}, y^{y}): got {got}, want {want}"));
            }
        }
    }
    for r1 in 1..=3 {
        for r2 in 1..=(4 - r1) {
            let (i1, i2) = (ExponentMatrix::identity(r1), ExponentMatrix::identity(r2));
            check(&i1, &i2).map_err(|e| format!("identity {r1} + identity {r2}: {e}"))?;
            let total = i64::try_from(r1 + r2).unwrap();
            if bf(&i1.block_diagonal(&i2)).map_err(|e| e.to_string())? != super::factored(&[((total, 1), 1)]) {
                return Err(format!("identity {r1} + identity {r2} is not s + {total}"));
            }
        }
    }
    let pair = (exponent_matrix(1..=2, 1..=2, 3), exponent_matrix(1..=1, 1..=2, 3));
    run(cases, pair, |(a, b)| check(&a, &b))
}

/// Value `num / den` in lowest terms.
fn reduced(num: i128, den: i128) -> (i128, i128) {
    let g = gcd(num, den);
    (num / g, den / g)
}

/// Facet functionals of the Newton polyhedron found by brute force: every
/// hyperplane through `n` generators that bounds all of them.
fn brute_force_facets(a: &ExponentMatrix) -> Vec<(Vec<i128>, i128)> {
    let n = a.n();
    let points: Vec<Vec<Rational>> = a
        .columns()
        .iter()
        .map(|c| c.iter().map(|&x| Rational::from(x)).collect())
        .collect();
    let rays: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from(u32::from(i == j))).collect())
        .collect();
    let gens: Vec<(&Vec<Rational>, bool)> =
        points.iter().map(|p| (p, true)).chain(rays.iter().map(|r| (r, false))).collect();
    let mut out = BTreeSet::new();
    for idx in subsets(gens.len(), n) {
        if !idx.iter().any(|&i| gens[i].1) {
            continue;
        }
        let m: Vec<Vec<Rational>> = idx.iter().map(|&i| gens[i].0.clone()).collect();
        let rhs: Vec<Rational> = idx.iter().map(|&i| Rational::from(u32::from(gens[i].1))).collect();
        let Some(u) = solve(&m, &rhs) else { continue };
        if u.iter().any(Rational::is_negative) || points.iter().any(|p| dot_q(&u, p) < Rational::one()) {
            continue;
        }
        let l = bsato::exactalg::denom_lcm(&u);
        let w: Vec<i128> = u
            .iter()
            .map(|x| (x * &Rational::from(l.clone())).to_string().parse().unwrap())
            .collect();
        out.insert((w, l.to_string().parse().unwrap()));
    }
    out.into_iter().collect()
}

/// All values `min_u <u, x>` for `x` in `{1..side}^n`, up to `max`.
fn brute_force_jumps(facets: &[(Vec<i128>, i128)], n: usize, side: i128, max: (i128, i128)) -> BTreeSet<Rational> {
    let mut values = BTreeSet::new();
    let mut x = vec![1i128; n];
    loop {
        let mut best: Option<(i128, i128)> = None;
        for (w, d) in facets {
            let num: i128 = w.iter().zip(&x).map(|(a, b)| a * b).sum();
            if best.is_none_or(|(bn, bd)| num * bd < bn * d) {
                best = Some((num, *d));
            }
        }
        let (num, den) = best.expect("at least one facet");
        if num * max.1 <= max.0 * den {
            values.insert(reduced(num, den));
        }
        let mut k = 0;
        loop {
            if k == n {
                return values.into_iter().map(|(a, b)| Rational::new(a, b)).collect();
            }
            if x[k] < side {
                x[k] += 1;
                break;
            }
            x[k] = 1;
            k += 1;
        }
    }
}

pub fn jump_oracle(cases: u32) -> Result<(), String> {
    let input = (exponent_matrix(1..=3, 1..=3, 3), 1i64..=9);
    run(cases, input, |(a, max_thirds)| {
        let max = q(max_thirds, 3);
        let p = NewtonPolyhedron::new(&a).map_err(|e| fail(e.to_string()))?;
        let facets = brute_force_facets(&a);
        let oracle = brute_force_jumps(&facets, a.n(), 50, (i128::from(max_thirds), 3));
        let lct = p.lct();
        let ones = vec![1u64; a.n()];
        prop_assert_eq!(&p.jump_of_monomial(&ones).unwrap(), &lct);
        match p.jumping_coefficients(&max) {
            Err(Error::BelowThreshold { .. }) => {
                prop_assert!(max < lct);
                prop_assert!(oracle.is_empty());
            }
            Err(e) => return Err(fail(e.to_string())),
            Ok((jumps, _)) => {
                let got: BTreeSet<Rational> = jumps.iter().map(|j| j.value.clone()).collect();
                prop_assert_eq!(&got, &oracle, "facets {:?}", facets);
                prop_assert_eq!(oracle.first(), Some(&lct));
                for j in &jumps {
                    prop_assert!(j.witness.iter().all(|&x| x >= 1));
                    prop_assert_eq!(&p.jump_of_monomial(&j.witness).unwrap(), &j.value);
                }
            }
        }
        Ok(())
    })
}

pub fn membership_monotone(cases: u32) -> Result<(), String> {
    let input = exponent_matrix(1..=3, 1..=3, 3).prop_flat_map(|a| {
        let n = a.n();
        (Just(a), prop::collection::vec(0u64..=4, n), 1i64..=12, 0..n)
    });
    run(cases, input, |(a, nu, quarters, i)| {
        let p = NewtonPolyhedron::new(&a).map_err(|e| fail(e.to_string()))?;
        let alpha = q(quarters, 4);
        let member = p.multiplier_membership(&nu, &alpha).unwrap();
        let shifted: Vec<u64> = nu.iter().map(|x| x + 1).collect();
        prop_assert_eq!(member, p.jump_of_monomial(&shifted).unwrap() > alpha);
        let larger = &alpha + &q(1, 4);
        if p.multiplier_membership(&nu, &larger).unwrap() {
            prop_assert!(member);
        }
        let mut bigger = nu.clone();
        bigger[i] += 1;
        if member {
            prop_assert!(p.multiplier_membership(&bigger, &alpha).unwrap());
        }
        Ok(())
    })
}

pub fn integral_closure(cases: u32) -> Result<(), String> {
    let input = exponent_matrix(1..=3, 1..=3, 3).prop_flat_map(|a| {
        let (n, r) = (a.n(), a.r());
        (Just(a), 0..r, 0..r, 0..n)
    });
    run(cases, input, |(a, j, k, i)| {
        // a point of the Newton polyhedron: a midpoint, or a column pushed
        // into the orthant
        let (cj, ck) = (a.column(j), a.column(k));
        let extra: Vec<u32> = if cj.iter().zip(ck).all(|(x, y)| (x + y) % 2 == 0) {
            cj.iter().zip(ck).map(|(x, y)| (x + y) / 2).collect()
        } else {
            let mut c = cj.to_vec();
            c[i] += 1;
            c
        };
        let b = a.with_column(extra).unwrap();
        let (pa, pb) = (NewtonPolyhedron::new(&a).unwrap(), NewtonPolyhedron::new(&b).unwrap());
        let sorted = |p: &NewtonPolyhedron| p.facets().iter().cloned().collect::<BTreeSet<_>>();
        prop_assert_eq!(sorted(&pa), sorted(&pb));
        let three = Rational::from(3);
        let values = |p: &NewtonPolyhedron| {
            p.jumping_coefficients(&three)
                .map(|(js, _)| js.into_iter().map(|j| j.value).collect::<Vec<_>>())
                .ok()
        };
        prop_assert_eq!(values(&pa), values(&pb));
        Ok(())
    })
}
