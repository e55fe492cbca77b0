use num_bigint::BigInt;

use super::dd::DoubleDescription;
use super::lattice::{from_big, make_primitive, IVec};
use crate::exactalg::{denom_lcm, Rational};
use crate::Error;

/// Generator description `conv(points) + cone(rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub points: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
}

/// A linear inequality `<normal, x> >= offset` (or equation, when stored in
/// [`HRep::equations`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn value(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).map(|(u, v)| u * v).sum::<Rational>()
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.value(x) >= self.offset
    }
}

/// Half-space description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub inequalities: Vec<HalfSpace>,
    pub equations: Vec<HalfSpace>,
}

impl HRep {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|h| h.satisfied_by(x))
            && self.equations.iter().all(|h| h.value(x) == h.offset)
    }
}

impl VRep {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>, rays: Vec<Vec<Rational>>) -> Self {
        VRep { dim, points, rays }
    }

    pub fn from_integers(dim: usize, points: &[Vec<i64>], rays: &[Vec<i64>]) -> Self {
        let conv = |vs: &[Vec<i64>]| -> Vec<Vec<Rational>> {
            vs.iter().map(|v| v.iter().map(|&x| Rational::from(x)).collect()).collect()
        };
        VRep::new(dim, conv(points), conv(rays))
    }
}

/// Homogenized integer generator `(x * l, l)` (or `(r * l, 0)` for a ray).
fn homogenize(v: &[Rational], is_point: bool) -> IVec {
    let l = denom_lcm(v);
    let mut out: IVec = v.iter().map(|x| from_big(&(x.numer() * (&l / x.denom())))).collect();
    out.push(if is_point { from_big(&l) } else { 0 });
    make_primitive(&mut out);
    out
}

fn to_halfspace(y: &[i128]) -> HalfSpace {
    let d = y.len() - 1;
    HalfSpace {
        normal: y[..d].iter().map(|&x| Rational::from(BigInt::from(x))).collect(),
        offset: -Rational::from(BigInt::from(y[d])),
    }
}

/// Converts generators to an irredundant half-space description by double
/// description on the homogenized cone's dual.
pub fn v_to_h(v: &VRep) -> Result<HRep, Error> {
    if v.points.is_empty() && v.rays.is_empty() {
        return Err(Error::EmptyInput);
    }
    for g in v.points.iter().chain(&v.rays) {
        if g.len() != v.dim {
            return Err(Error::DimensionMismatch {
                expected: v.dim,
                got: g.len(),
            });
        }
    }
    let mut gens: Vec<IVec> = v.points.iter().map(|p| homogenize(p, true)).collect();
    if v.points.is_empty() {
        gens.push(homogenize(&vec![Rational::zero(); v.dim], true));
    }
    gens.extend(v.rays.iter().map(|r| homogenize(r, false)));

    let dd = DoubleDescription::from_constraints(v.dim + 1, &gens);
    let mut inequalities: Vec<HalfSpace> = dd
        .rays()
        .filter(|y| y[..v.dim].iter().any(|&x| x != 0))
        .map(|y| to_halfspace(y))
        .collect();
    inequalities.sort();
    inequalities.dedup();
    let mut equations: Vec<HalfSpace> = dd.lines().iter().map(|y| to_halfspace(y)).collect();
    equations.sort();
    Ok(HRep {
        dim: v.dim,
        inequalities,
        equations,
    })
}
