//! Integer vector and matrix helpers. Every operation is checked; an
//! overflow panics rather than producing a wrong answer.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub type IVec = Vec<i128>;

const OVERFLOW: &str = "integer overflow in polyhedral arithmetic";

#[inline]
pub(crate) fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect(OVERFLOW)
}

#[inline]
pub(crate) fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect(OVERFLOW)
}

pub(crate) fn dot(a: &[i128], b: &[i128]) -> i128 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0, |acc, (&x, &y)| add(acc, mul(x, y)))
}

pub(crate) fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divides out the gcd of the entries; the zero vector is left alone.
pub(crate) fn make_primitive(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

pub(crate) fn is_zero(v: &[i128]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// `ca * a + cb * b`.
pub(crate) fn combine(ca: i128, a: &[i128], cb: i128, b: &[i128]) -> IVec {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| add(mul(ca, x), mul(cb, y)))
        .collect()
}

pub(crate) fn from_big(x: &BigInt) -> i128 {
    x.to_i128().expect(OVERFLOW)
}

fn lcm(a: i128, b: i128) -> i128 {
    mul(a / gcd(a, b), b).abs()
}

/// Fraction-free reduced echelon form. Each returned row is primitive,
/// has a positive entry at its pivot column and zeros at every other
/// pivot column. Zero rows are dropped.
pub(crate) fn rref(rows: &[IVec], ncols: usize) -> (Vec<IVec>, Vec<usize>) {
    let mut m: Vec<IVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        make_primitive(&mut m[row]);
        if m[row][col] < 0 {
            m[row].iter_mut().for_each(|x| *x = -*x);
        }
        let piv = m[row][col];
        for i in 0..m.len() {
            let f = m[i][col];
            if i != row && f != 0 {
                let g = gcd(piv, f);
                m[i] = combine(piv / g, &m[i], -(f / g), &m[row]);
                make_primitive(&mut m[i]);
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

pub(crate) fn rank(rows: &[IVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Primitive integer basis of the rational null space of `rows`.
pub(crate) fn nullspace(rows: &[IVec], ncols: usize) -> Vec<IVec> {
    let (m, pivots) = rref(rows, ncols);
    let scale = m
        .iter()
        .zip(&pivots)
        .fold(1, |acc, (r, &p)| lcm(acc, r[p]));
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0; ncols];
            v[f] = scale;
            for (r, &p) in m.iter().zip(&pivots) {
                v[p] = -mul(r[f], scale / r[p]);
            }
            make_primitive(&mut v);
            v
        })
        .collect()
}

/// Normal vector of the hyperplane spanned by `m - 1` independent vectors
/// of length `m`.
pub(crate) fn hyperplane_normal(vectors: &[IVec], m: usize) -> IVec {
    let ns = nullspace(vectors, m);
    debug_assert_eq!(ns.len(), 1, "vectors do not span a hyperplane");
    ns.into_iter().next().expect("vectors do not span a hyperplane")
}

/// Determinant (up to sign) and adjugate of a square matrix given by its
/// columns, normalized so that `adj * M = det * I`.
pub(crate) fn det_adjugate(cols: &[IVec]) -> (i128, Vec<IVec>) {
    let m = cols.len();
    // fraction-free Gauss-Jordan on [M | I] ends at [d I | X] with X M = d I
    let mut a: Vec<IVec> = (0..m)
        .map(|i| {
            let mut row: IVec = cols.iter().map(|c| c[i]).collect();
            row.extend((0..m).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    let mut prev = 1i128;
    for k in 0..m {
        let p = (k..m).find(|&i| a[i][k] != 0).expect("singular matrix");
        a.swap(p, k);
        let akk = a[k][k];
        for i in 0..m {
            if i == k {
                continue;
            }
            let aik = a[i][k];
            for j in 0..2 * m {
                let v = mul(akk, a[i][j]) - mul(aik, a[k][j]);
                debug_assert_eq!(v % prev, 0);
                a[i][j] = v / prev;
            }
        }
        prev = akk;
    }
    let det = a[m - 1][m - 1];
    let adj = a.iter().map(|row| row[m..].to_vec()).collect();
    (det, adj)
}

/// Lower-triangular Hermite basis of the lattice spanned by `cols`
/// (independent, `m` columns of length `m`). Returns the diagonal.
pub(crate) fn hermite_diagonal(cols: &[IVec]) -> Vec<i128> {
    let m = cols.len();
    let mut c: Vec<IVec> = cols.to_vec();
    for row in 0..m {
        for j in row + 1..m {
            while c[j][row] != 0 {
                let q = c[row][row] / c[j][row];
                let nv = combine(1, &c[row], -q, &c[j]);
                c[row] = std::mem::replace(&mut c[j], nv);
            }
        }
        if c[row][row] < 0 {
            for x in c[row].iter_mut() {
                *x = -*x;
            }
        }
    }
    (0..m).map(|i| c[i][i]).collect()
}

/// Basis of the lattice `{x in Z^d : E x = 0}` obtained from unimodular
/// column operations on `E`.
pub(crate) fn kernel_lattice_basis(eqs: &[IVec], d: usize) -> Vec<IVec> {
    let k = eqs.len();
    // columns of E, paired with columns of the transform U
    let mut ecols: Vec<IVec> = (0..d).map(|j| eqs.iter().map(|r| r[j]).collect()).collect();
    let mut ucols: Vec<IVec> = (0..d)
        .map(|j| (0..d).map(|i| i128::from(i == j)).collect())
        .collect();
    let mut col = 0;
    for row in 0..k {
        if col >= d {
            break;
        }
        for j in col + 1..d {
            while ecols[j][row] != 0 {
                let q = ecols[col][row] / ecols[j][row];
                let ne = combine(1, &ecols[col], -q, &ecols[j]);
                let nu = combine(1, &ucols[col], -q, &ucols[j]);
                ecols[col] = std::mem::replace(&mut ecols[j], ne);
                ucols[col] = std::mem::replace(&mut ucols[j], nu);
            }
        }
        if ecols[col][row] != 0 {
            col += 1;
        }
    }
    ucols.split_off(col)
}

/// Integer coordinates of `x` in the lattice basis `basis`.
pub(crate) fn coordinates(basis: &[IVec], x: &[i128]) -> IVec {
    let d = x.len();
    let m = basis.len();
    let rows: Vec<IVec> = (0..d)
        .map(|i| {
            let mut r: IVec = basis.iter().map(|b| b[i]).collect();
            r.push(x[i]);
            r
        })
        .collect();
    let (red, pivots) = rref(&rows, m + 1);
    let mut y = vec![0; m];
    for (r, &p) in red.iter().zip(&pivots) {
        assert!(p < m, "vector is not in the span of the basis");
        assert!(r[m] % r[p] == 0, "vector is not in the lattice");
        y[p] = r[m] / r[p];
    }
    y
}
