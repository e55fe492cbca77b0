//! Finite generating sets of the ideal of binomial products attached to a
//! monomial ideal.
//!
//! For `f_j = prod_i x_i^{a_ij}` write `l_i(s) = sum_j a_ij s_j`. Every shift
//! vector `c` in `Z^r` with entries summing to one contributes
//!
//! ```text
//! g_c = prod_{c_j < 0} binom(s_j, -c_j) * prod_{l_i(c) > 0} binom(l_i(s) + l_i(c), l_i(c))
//! ```
//!
//! and the b-function is read off from the ideal these generate. Infinitely
//! many `c` qualify, but inside each sign cone (fixed signs of every `l_i(c)`
//! and every `c_j`) the degree-one shifts are a finitely generated module
//! over the degree-zero monoid, and `g_c` only gains factors along that
//! monoid. The module generators are the degree-one Hilbert-basis elements
//! of the graded cone.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::exactalg::{MultiPoly, Rational};
use crate::polyhedra::dd::DoubleDescription;
use crate::polyhedra::{IVec, PointedCone};
use crate::Error;

/// Exponents `a_ij` of the monomials `f_j = prod_i x_i^{a_ij}`, stored by
/// column. Columns are nonzero and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    n: usize,
    cols: Vec<Vec<u32>>,
    duplicates_removed: usize,
}

impl ExponentMatrix {
    /// Builds the matrix from the exponent vectors of the monomials.
    /// Repeated monomials are dropped (first occurrence kept).
    pub fn from_columns(n: usize, cols: Vec<Vec<u32>>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidMatrix("at least one variable is required".into()));
        }
        if cols.is_empty() {
            return Err(Error::InvalidMatrix("at least one monomial is required".into()));
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(cols.len());
        let mut duplicates_removed = 0;
        for (j, c) in cols.into_iter().enumerate() {
            if c.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "monomial {j} has {} exponents, expected {n}",
                    c.len()
                )));
            }
            if c.iter().all(|&x| x == 0) {
                return Err(Error::InvalidMatrix(format!("monomial {j} is the unit monomial")));
            }
            if seen.insert(c.clone()) {
                kept.push(c);
            } else {
                duplicates_removed += 1;
            }
        }
        Ok(ExponentMatrix {
            n,
            cols: kept,
            duplicates_removed,
        })
    }

    /// Builds the matrix from its rows `a_i = (a_i1, ..., a_ir)`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, Error> {
        let n = rows.len();
        let r = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        let cols = (0..r).map(|j| rows.iter().map(|row| row[j]).collect()).collect();
        ExponentMatrix::from_columns(n, cols)
    }

    /// The identity matrix: the ideal of the coordinate variables.
    pub fn identity(n: usize) -> Self {
        let cols = (0..n)
            .map(|j| (0..n).map(|i| u32::from(i == j)).collect())
            .collect();
        ExponentMatrix::from_columns(n, cols).expect("identity is well formed")
    }

    /// Number of ambient variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of monomials.
    pub fn r(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }

    pub fn row(&self, i: usize) -> Vec<u32> {
        self.cols.iter().map(|c| c[i]).collect()
    }

    /// Monomials dropped as repeats at construction.
    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    /// Adds a variable absent from every monomial.
    pub fn with_zero_row(&self) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.push(0);
                c
            })
            .collect();
        ExponentMatrix::from_columns(self.n + 1, cols).expect("still well formed")
    }

    /// Adds one more monomial.
    pub fn with_column(&self, col: Vec<u32>) -> Result<Self, Error> {
        let mut cols = self.cols.clone();
        cols.push(col);
        ExponentMatrix::from_columns(self.n, cols)
    }

    /// Row `i` moves to `row_perm[i]`, column `j` to `col_perm[j]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut cols = vec![Vec::new(); self.r()];
        for (j, c) in self.cols.iter().enumerate() {
            let mut nc = vec![0; self.n];
            for (i, &x) in c.iter().enumerate() {
                nc[row_perm[i]] = x;
            }
            cols[col_perm[j]] = nc;
        }
        ExponentMatrix::from_columns(self.n, cols).expect("permutation keeps validity")
    }

    /// `diag(self, other)`: the product ideal on disjoint variable sets.
    pub fn block_diagonal(&self, other: &ExponentMatrix) -> Self {
        let n = self.n + other.n;
        let mut cols: Vec<Vec<u32>> = self
            .cols
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.resize(n, 0);
                c
            })
            .collect();
        cols.extend(other.cols.iter().map(|c| {
            let mut nc = vec![0; self.n];
            nc.extend_from_slice(c);
            nc
        }));
        ExponentMatrix::from_columns(n, cols).expect("block diagonal is well formed")
    }
}

/// An integer shift vector `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Signs `(e_1, ..., e_{n+r})`, each `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    /// The sign vector with index `bits` (bit `i` set means `e_i = -1`).
    pub fn from_bits(len: usize, bits: u64) -> Self {
        SignVector((0..len).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect())
    }
}

/// Module generators `I(e)` of the degree-one shifts of one sign cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeModuleGenerators {
    pub eps: SignVector,
    pub gens: Vec<ShiftVector>,
}

/// The `n + r` forms on shift vectors: `l_i(c) = sum_j a_ij c_j` for the
/// rows of the matrix, then `l_{n+j}(c) = -c_j`.
pub fn linear_forms(a: &ExponentMatrix) -> Vec<Vec<i64>> {
    let r = a.r();
    let mut forms: Vec<Vec<i64>> = (0..a.n())
        .map(|i| a.row(i).into_iter().map(i64::from).collect())
        .collect();
    forms.extend((0..r).map(|j| (0..r).map(|k| if k == j { -1 } else { 0 }).collect()));
    forms
}

fn eval_form(form: &[i64], c: &[i64]) -> i64 {
    form.iter().zip(c).map(|(x, y)| x * y).sum()
}

/// An affine form `coeffs . s + constant`, scaled to a primitive integer
/// vector whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl AffineForm {
    fn normalized(coeffs: Vec<i64>, constant: i64) -> Self {
        let g = coeffs
            .iter()
            .chain(std::iter::once(&constant))
            .fold(0i64, |g, &x| num_integer::gcd(g, x));
        let lead = coeffs.iter().chain(std::iter::once(&constant)).find(|&&x| x != 0);
        let sign = if lead.is_some_and(|&x| x < 0) { -1 } else { 1 };
        let g = g.max(1) * sign;
        AffineForm {
            coeffs: coeffs.iter().map(|x| x / g).collect(),
            constant: constant / g,
        }
    }

    pub fn to_poly(&self) -> MultiPoly {
        let coeffs: Vec<Rational> = self.coeffs.iter().map(|&x| Rational::from(x)).collect();
        MultiPoly::affine(&coeffs, Rational::from(self.constant))
    }
}

/// `g_c` kept as its multiset of affine factors (sorted). Scalars are
/// dropped, which does not change the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialProduct {
    pub factors: Vec<AffineForm>,
}

impl BinomialProduct {
    pub fn expand(&self, nvars: usize) -> MultiPoly {
        self.factors
            .iter()
            .fold(MultiPoly::one(nvars), |acc, f| &acc * &f.to_poly())
            .primitive()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// True when `self` divides `other` as a product of factors.
    pub fn divides(&self, other: &BinomialProduct) -> bool {
        // both sorted: multiset inclusion by merge
        let mut it = other.factors.iter();
        'outer: for f in &self.factors {
            for g in it.by_ref() {
                match g.cmp(f) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }
}

/// The factors of `g_c`: `s_j - k` for `0 <= k < -c_j` when `c_j < 0`, and
/// `l_i(s) + k` for `1 <= k <= l_i(c)` when `l_i(c) > 0`.
pub fn binomial_product(a: &ExponentMatrix, c: &ShiftVector) -> Result<BinomialProduct, Error> {
    let r = a.r();
    if c.0.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: c.0.len(),
        });
    }
    if c.sum() != 1 {
        return Err(Error::BadShiftSum(c.sum()));
    }
    let mut factors = Vec::new();
    for (j, &cj) in c.0.iter().enumerate() {
        for k in 0..(-cj).max(0) {
            let mut coeffs = vec![0; r];
            coeffs[j] = 1;
            factors.push(AffineForm::normalized(coeffs, -k));
        }
    }
    for i in 0..a.n() {
        let row: Vec<i64> = a.row(i).into_iter().map(i64::from).collect();
        let li = eval_form(&row, &c.0);
        for k in 1..=li.max(0) {
            factors.push(AffineForm::normalized(row.clone(), k));
        }
    }
    factors.sort();
    Ok(BinomialProduct { factors })
}

/// `g_c` as a polynomial in `s_1..s_r`, scaled to primitive integer content.
pub fn g_poly(a: &ExponentMatrix, c: &ShiftVector) -> Result<MultiPoly, Error> {
    Ok(binomial_product(a, c)?.expand(a.r()))
}

fn to_ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| i128::from(x)).collect()
}

/// Inequalities of the sign cone: `e_i l_i(c) >= 0` for every form, then
/// `sum c >= 0`.
fn sign_cone_inequalities(forms: &[Vec<i64>], eps: &SignVector) -> Vec<IVec> {
    let r = forms.first().map_or(0, Vec::len);
    let mut ineqs: Vec<IVec> = forms
        .iter()
        .zip(&eps.0)
        .map(|(f, &e)| f.iter().map(|&x| i128::from(x * i64::from(e))).collect())
        .collect();
    ineqs.push(vec![1; r]);
    ineqs
}

fn degree_one_slice(cone: &PointedCone) -> Vec<ShiftVector> {
    let grading = vec![1i128; cone.dim()];
    cone.hilbert_basis_graded(&grading, 1)
        .into_iter()
        .filter(|h| h.iter().sum::<i128>() == 1)
        .map(|h| ShiftVector(h.into_iter().map(|x| x as i64).collect()))
        .collect()
}

/// `I(e)`: generators of the degree-one shifts in the sign cone `e` over its
/// degree-zero monoid. Empty when the cone has no degree-one points.
pub fn module_generators(a: &ExponentMatrix, eps: &SignVector) -> Result<ConeModuleGenerators, Error> {
    let forms = linear_forms(a);
    if eps.0.len() != forms.len() {
        return Err(Error::DimensionMismatch {
            expected: forms.len(),
            got: eps.0.len(),
        });
    }
    let cone = PointedCone::new(a.r(), sign_cone_inequalities(&forms, eps), Vec::new())?;
    Ok(ConeModuleGenerators {
        eps: eps.clone(),
        gens: degree_one_slice(&cone),
    })
}

/// Sign vectors whose cone is full-dimensional, with their cones.
///
/// Every lower-dimensional sign cone is a face of one of these, and the
/// Hilbert basis of a face is the part of the bigger basis lying on it, so
/// the full-dimensional cones already produce every module generator.
pub fn chambers(a: &ExponentMatrix) -> Vec<(SignVector, PointedCone)> {
    let forms = linear_forms(a);
    let r = a.r();
    let n = a.n();
    // coordinate signs first: they make the cone pointed early
    let order: Vec<usize> = (n..n + r).chain(0..n).collect();

    let mut root = DoubleDescription::new(r);
    root.insert(vec![1; r]);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, DoubleDescription, Vec<i8>)> = vec![(0, root, vec![0; n + r])];
    while let Some((level, dd, signs)) = stack.pop() {
        if level == order.len() {
            let eps = SignVector(signs);
            let ineqs = sign_cone_inequalities(&forms, &eps);
            let cone = PointedCone::from_parts(r, ineqs, Vec::new(), dd.rays().cloned().collect());
            out.push((eps, cone));
            continue;
        }
        let idx = order[level];
        let form = to_ivec(&forms[idx]);
        let (pos, neg) = dd.sign_range(&form);
        if !pos && !neg {
            // the form vanishes identically (a zero row); either sign works
            let mut s = signs;
            s[idx] = 1;
            stack.push((level + 1, dd, s));
            continue;
        }
        if neg {
            let mut child = dd.clone();
            child.insert(form.iter().map(|x| -x).collect());
            let mut s = signs.clone();
            s[idx] = -1;
            stack.push((level + 1, child, s));
        }
        if pos {
            let mut child = dd;
            child.insert(form);
            let mut s = signs;
            s[idx] = 1;
            stack.push((level + 1, child, s));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// A row permutation and a column permutation that together fix the
/// matrix: `a[rows[i]][cols[j]] == a[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Symmetry {
    /// Image of a sign vector on the forms of [`linear_forms`].
    pub fn act_signs(&self, eps: &SignVector) -> SignVector {
        let n = self.rows.len();
        let mut out = vec![0i8; eps.0.len()];
        for (i, &pi) in self.rows.iter().enumerate() {
            out[pi] = eps.0[i];
        }
        for (j, &pj) in self.cols.iter().enumerate() {
            out[n + pj] = eps.0[n + j];
        }
        SignVector(out)
    }

    /// Image of a shift vector; forms are carried along with it.
    pub fn act_shift(&self, c: &ShiftVector) -> ShiftVector {
        let mut out = vec![0i64; c.0.len()];
        for (j, &pj) in self.cols.iter().enumerate() {
            out[pj] = c.0[j];
        }
        ShiftVector(out)
    }
}

/// Row permutations tried before giving up on symmetry detection.
const MAX_ROW_PERMUTATIONS: usize = 1 << 20;

/// The group of matrix symmetries, identity first. Falls back to the
/// identity alone when the row search would exceed its budget.
pub fn symmetries(a: &ExponentMatrix) -> Vec<Symmetry> {
    let n = a.n();
    let identity = Symmetry {
        rows: (0..n).collect(),
        cols: (0..a.r()).collect(),
    };
    // rows can only swap with rows of the same value multiset
    let signature = |i: usize| {
        let mut row = a.row(i);
        row.sort_unstable();
        row
    };
    let sigs: Vec<Vec<u32>> = (0..n).map(signature).collect();
    let col_index: std::collections::HashMap<&[u32], usize> = a
        .columns()
        .iter()
        .enumerate()
        .map(|(j, c)| (c.as_slice(), j))
        .collect();

    let mut found = Vec::new();
    let mut visited = 0usize;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sigs: &[Vec<u32>],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == perm.len() {
            return visit(perm);
        }
        for k in 0..perm.len() {
            if !used[k] && sigs[k] == sigs[i] {
                used[k] = true;
                perm[i] = k;
                if !extend(i + 1, perm, used, sigs, visit) {
                    return false;
                }
                used[k] = false;
            }
        }
        true
    }
    let completed = extend(0, &mut perm, &mut used, &sigs, &mut |rows: &[usize]| {
        visited += 1;
        if visited > MAX_ROW_PERMUTATIONS {
            return false;
        }
        let mut cols = Vec::with_capacity(a.r());
        let mut moved = vec![0u32; n];
        for c in a.columns() {
            for (i, &x) in c.iter().enumerate() {
                moved[rows[i]] = x;
            }
            match col_index.get(moved.as_slice()) {
                Some(&j) => cols.push(j),
                None => return true,
            }
        }
        found.push(Symmetry {
            rows: rows.to_vec(),
            cols,
        });
        true
    });
    if !completed {
        return vec![identity];
    }
    found.sort_by_key(|g| g != &identity);
    found
}

/// Union of `I(e)` over all sign vectors, sorted and deduplicated.
///
/// Only one chamber per orbit of the symmetry group is processed; the
/// others follow by permuting coordinates.
pub fn af_shift_vectors(a: &ExponentMatrix) -> Vec<ShiftVector> {
    let group = symmetries(a);
    let cones = chambers(a);
    let representatives: Vec<&PointedCone> = cones
        .iter()
        .filter(|(eps, _)| group.iter().all(|g| g.act_signs(eps) >= *eps))
        .map(|(_, cone)| cone)
        .collect();
    let found: BTreeSet<ShiftVector> = representatives
        .par_iter()
        .map(|cone| degree_one_slice(cone))
        .flatten()
        .flat_map_iter(|c| group.iter().map(move |g| g.act_shift(&c)).collect::<Vec<_>>())
        .collect();
    found.into_iter().collect()
}

/// Generators of the ideal as factored products, deduplicated, in shift
/// vector order.
pub fn af_generator_products(a: &ExponentMatrix) -> Vec<BinomialProduct> {
    let mut seen = HashSet::new();
    af_shift_vectors(a)
        .iter()
        .map(|c| binomial_product(a, c).expect("module generators have degree one"))
        .filter(|p| seen.insert(p.clone()))
        .collect()
}

/// Finite generating set of the ideal, deduplicated by canonical form.
pub fn af_generators(a: &ExponentMatrix) -> Vec<MultiPoly> {
    af_generator_products(a)
        .iter()
        .map(|p| p.expand(a.r()))
        .collect()
}

/// Drops every product divisible by another one in the list. The ideal is
/// unchanged. Output keeps input order.
pub fn drop_multiples(products: &[BinomialProduct]) -> Vec<BinomialProduct> {
    let mut by_degree: Vec<usize> = (0..products.len()).collect();
    by_degree.sort_by_key(|&i| (products[i].degree(), i));
    let mut kept: Vec<usize> = Vec::new();
    for i in by_degree {
        if !kept.iter().any(|&k| products[k].divides(&products[i])) {
            kept.push(i);
        }
    }
    kept.sort();
    kept.into_iter().map(|i| products[i].clone()).collect()
}
