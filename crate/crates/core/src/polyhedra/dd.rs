//! Incremental double description for cones `{y : a_k . y >= 0}`.
//!
//! The state holds a basis of the lineality space and the extreme rays of
//! the cone cut out by the constraints inserted so far. Rays carry the set
//! of constraints they satisfy with equality; adjacency is decided
//! combinatorially from those sets.

use super::lattice::{combine, dot, is_zero, make_primitive, IVec};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitSet(Vec<u64>);

impl BitSet {
    fn new() -> Self {
        BitSet(Vec::new())
    }

    fn full(n: usize) -> Self {
        let mut b = BitSet::new();
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.0.get(i).copied().unwrap_or(0) == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub v: IVec,
    zeros: BitSet,
}

#[derive(Clone, Debug)]
pub(crate) struct DoubleDescription {
    dim: usize,
    constraints: Vec<IVec>,
    lines: Vec<IVec>,
    rays: Vec<Ray>,
}

impl DoubleDescription {
    /// The whole space: lineality basis `e_1..e_dim`, no rays.
    pub fn new(dim: usize) -> Self {
        let lines = (0..dim)
            .map(|i| (0..dim).map(|j| i128::from(i == j)).collect())
            .collect();
        DoubleDescription {
            dim,
            constraints: Vec::new(),
            lines,
            rays: Vec::new(),
        }
    }

    pub fn from_constraints<'a>(dim: usize, constraints: impl IntoIterator<Item = &'a IVec>) -> Self {
        let mut dd = DoubleDescription::new(dim);
        for c in constraints {
            dd.insert(c.clone());
        }
        dd
    }

    pub fn lines(&self) -> &[IVec] {
        &self.lines
    }

    pub fn rays(&self) -> impl Iterator<Item = &IVec> {
        self.rays.iter().map(|r| &r.v)
    }

    /// Signs attained by `a` over the cone: (some value > 0, some value < 0).
    pub fn sign_range(&self, a: &[i128]) -> (bool, bool) {
        if self.lines.iter().any(|l| dot(a, l) != 0) {
            return (true, true);
        }
        let mut pos = false;
        let mut neg = false;
        for r in &self.rays {
            match dot(a, &r.v).signum() {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        (pos, neg)
    }

    /// Intersects the cone with the half-space `a . y >= 0`.
    pub fn insert(&mut self, a: IVec) {
        assert_eq!(a.len(), self.dim);
        let idx = self.constraints.len();
        if is_zero(&a) {
            self.constraints.push(a);
            for r in &mut self.rays {
                r.zeros.insert(idx);
            }
            return;
        }

        if let Some(pos) = self.lines.iter().position(|l| dot(&a, l) != 0) {
            let mut line = self.lines.remove(pos);
            let mut al = dot(&a, &line);
            if al < 0 {
                line.iter_mut().for_each(|x| *x = -*x);
                al = -al;
            }
            for l in &mut self.lines {
                let c = dot(&a, l);
                if c != 0 {
                    *l = combine(al, l, -c, &line);
                    make_primitive(l);
                }
            }
            for r in &mut self.rays {
                let c = dot(&a, &r.v);
                if c != 0 {
                    r.v = combine(al, &r.v, -c, &line);
                    make_primitive(&mut r.v);
                }
                r.zeros.insert(idx);
            }
            // the removed line is zero on every earlier constraint
            self.rays.push(Ray {
                v: line,
                zeros: BitSet::full(idx),
            });
            self.constraints.push(a);
            return;
        }

        let values: Vec<i128> = self.rays.iter().map(|r| dot(&a, &r.v)).collect();
        let pos: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i] < 0).collect();
        if neg.is_empty() {
            for (r, &v) in self.rays.iter_mut().zip(&values) {
                if v == 0 {
                    r.zeros.insert(idx);
                }
            }
            self.constraints.push(a);
            return;
        }

        // adjacent rays in a cone of pointed dimension k share >= k - 2 zeros
        let pointed_dim = self.dim - self.lines.len();
        let min_common = pointed_dim.saturating_sub(2);
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = self.rays[p].zeros.intersect(&self.rays[n].zeros);
                if common.count() < min_common {
                    continue;
                }
                let adjacent = self.rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == n || !common.is_subset(&r.zeros)
                });
                if !adjacent {
                    continue;
                }
                let mut v = combine(values[p], &self.rays[n].v, -values[n], &self.rays[p].v);
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.insert(idx);
                created.push(Ray { v, zeros });
            }
        }

        let old = std::mem::take(&mut self.rays);
        for (mut r, v) in old.into_iter().zip(values) {
            if v > 0 {
                self.rays.push(r);
            } else if v == 0 {
                r.zeros.insert(idx);
                self.rays.push(r);
            }
        }
        self.rays.extend(created);
        self.constraints.push(a);
    }
}
