#![allow(dead_code)]

pub mod props;

use std::path::PathBuf;

use bsato::{ExponentMatrix, FactoredBPoly, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn matrix(n: usize, cols: &[&[u32]]) -> ExponentMatrix {
    ExponentMatrix::from_columns(n, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
}

/// `prod (s + alpha)^m` from `((num, den), m)` triples.
pub fn factored(pairs: &[((i64, i64), u32)]) -> FactoredBPoly {
    FactoredBPoly::from_pairs(pairs.iter().map(|&((a, b), m)| (q(a, b), m)))
}

/// Roots of `b(-s)`, increasing.
pub fn roots(b: &FactoredBPoly) -> Vec<Rational> {
    b.factors().keys().cloned().collect()
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load_fixture(name: &str) -> ExponentMatrix {
    let path = fixtures_dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let n = v["vars"].as_u64().unwrap() as usize;
    let cols = v["monomials"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            m.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as u32)
                .collect()
        })
        .collect();
    ExponentMatrix::from_columns(n, cols).unwrap()
}

/// Every fixture file, sorted by name.
pub fn all_fixtures() -> Vec<(String, ExponentMatrix)> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .filter_map(|e| {
            let name = e.unwrap().file_name().into_string().unwrap();
            name.strip_suffix(".json").map(str::to_string)
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load_fixture(&n))).collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Unique solution of the square system `m x = rhs`, if any.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut row = row.clone();
            row.push(b.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for k in 0..=n {
                    let d = &f * &a[c][k];
                    a[i][k] -= d;
                }
            }
        }
    }
    Some((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
}

pub fn to_rational(v: &[i128]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}
