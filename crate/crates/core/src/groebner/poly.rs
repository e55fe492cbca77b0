//! Integer-coefficient polynomials with fixed-width exponent vectors, the
//! working representation of the Buchberger engine.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;

pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pub e: [u16; MAX_VARS],
}

impl Mono {
    pub fn from_slice(exps: &[u32]) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for (d, &x) in e.iter_mut().zip(exps) {
            *d = u16::try_from(x).expect("exponent too large");
        }
        Mono { e }
    }

    pub fn to_vec(self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| u32::from(x)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&x| u32::from(x)).sum()
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i].checked_add(other.e[i]).expect("exponent overflow");
        }
        Mono { e }
    }

    /// `self / other`; the caller guarantees divisibility.
    #[inline]
    pub fn div(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i] - other.e[i];
        }
        Mono { e }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(other.e[i]);
        }
        Mono { e }
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.e.iter().zip(&other.e).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set when variable `i` occurs; a cheap divisibility filter.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        self.e
            .iter()
            .enumerate()
            .fold(0, |m, (i, &x)| if x > 0 { m | (1 << i) } else { m })
    }
}

/// Polynomial with terms sorted decreasingly in a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub terms: Vec<(Mono, BigInt)>,
}

impl IntPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn sort(&mut self, order: &MonomialOrder) {
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the divisor applied (signed).
    pub fn make_primitive(&mut self) -> BigInt {
        if self.is_zero() {
            return BigInt::one();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
        g
    }

    pub fn sugar_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
}

/// `a * p - b * shift * q`, dropping cancelled terms. Both inputs sorted.
pub fn combine(
    a: &BigInt,
    p: &[(Mono, BigInt)],
    b: &BigInt,
    shift: &Mono,
    q: &[(Mono, BigInt)],
    order: &MonomialOrder,
) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut i = 0;
    let mut j = 0;
    let a_one = a.is_one();
    while i < p.len() || j < q.len() {
        if j == q.len() {
            out.extend(p[i..].iter().map(|(m, c)| (*m, if a_one { c.clone() } else { c * a })));
            break;
        }
        let qm = q[j].0.mul(shift);
        if i == p.len() {
            out.push((qm, -(&q[j].1 * b)));
            j += 1;
            continue;
        }
        match order.cmp(&p[i].0, &qm) {
            Ordering::Greater => {
                out.push((p[i].0, if a_one { p[i].1.clone() } else { &p[i].1 * a }));
                i += 1;
            }
            Ordering::Less => {
                out.push((qm, -(&q[j].1 * b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a } - &q[j].1 * b;
                if !c.is_zero() {
                    out.push((qm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}
