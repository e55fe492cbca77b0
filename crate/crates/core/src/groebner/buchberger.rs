//! Fraction-free Buchberger with the Gebauer-Moeller pair update (which
//! implements both of Buchberger's criteria).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use super::poly::{combine, IntPoly, Mono};

/// Pair selection rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest total degree of the lcm first, ties by the monomial order.
    Normal,
    /// Smallest sugar degree first, ties as in [`Strategy::Normal`]. Keeps
    /// coefficient growth in check under elimination orders.
    #[default]
    Sugar,
}

/// Remainder of `p` modulo `divisors` up to a known scalar:
/// `rem = scale * (p - sum q_i g_i)`, with `scale = num / den`.
pub(crate) struct Reduced {
    pub rem: IntPoly,
    pub num: BigInt,
    pub den: BigInt,
}

/// Multivariate division of `p` by `divisors` (each nonzero). With
/// `full == false` only the leading term is reduced.
pub(crate) fn reduce(
    p: &IntPoly,
    divisors: &[&IntPoly],
    order: &MonomialOrder,
    full: bool,
) -> Reduced {
    let masks: Vec<u32> = divisors.iter().map(|g| g.lm().support_mask()).collect();
    let mut rem: Vec<(Mono, BigInt)> = Vec::new();
    let mut cur = p.terms.clone();
    let mut pos = 0;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut steps = 0u32;
    while pos < cur.len() {
        let (m, c) = (&cur[pos].0, &cur[pos].1);
        let mask = m.support_mask();
        let found = divisors
            .iter()
            .zip(&masks)
            .find(|(g, &gm)| gm & !mask == 0 && g.lm().divides(m))
            .map(|(g, _)| *g);
        match found {
            Some(g) => {
                let lc = g.lc();
                let gcd = c.gcd(lc);
                let mut a = lc / &gcd;
                let mut b = c / &gcd;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                let shift = m.div(g.lm());
                cur = combine(&a, &cur[pos..], &b, &shift, &g.terms, order);
                pos = 0;
                if !a.is_one() {
                    for (_, rc) in rem.iter_mut() {
                        *rc *= &a;
                    }
                    num *= &a;
                }
                steps += 1;
                if steps % 8 == 0 {
                    let g = rem
                        .iter()
                        .chain(cur.iter())
                        .try_fold(BigInt::zero(), |acc, (_, c)| {
                            let g = acc.gcd(c);
                            if g.is_one() { None } else { Some(g) }
                        });
                    if let Some(g) = g {
                        if g > BigInt::one() {
                            for (_, x) in rem.iter_mut().chain(cur.iter_mut()) {
                                *x = &*x / &g;
                            }
                            den *= &g;
                        }
                    }
                }
            }
            None => {
                if !full {
                    rem.extend(cur.drain(pos..));
                    break;
                }
                rem.push(cur[pos].clone());
                pos += 1;
            }
        }
    }
    Reduced {
        rem: IntPoly { terms: rem },
        num,
        den,
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

pub(crate) struct Engine {
    order: MonomialOrder,
    strategy: Strategy,
    polys: Vec<IntPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    pub fn new(order: MonomialOrder, strategy: Strategy) -> Self {
        Engine {
            order,
            strategy,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn active_refs(&self) -> Vec<&IntPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Mono) -> u32 {
        let d = lcm.degree();
        let si = self.sugar[i] + d - self.polys[i].lm().degree();
        let sj = self.sugar[j] + d - self.polys[j].lm().degree();
        si.max(sj)
    }

    /// Gebauer-Moeller update with the new element `h`.
    fn update(&mut self, h: IntPoly, sugar: u32) {
        let hi = self.polys.len();
        let hlm = *h.lm();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let candidates: Vec<(usize, Mono, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let glm = self.polys[g].lm();
                (g, hlm.lcm(glm), hlm.coprime(glm))
            })
            .collect();

        // drop (h, g1) when another (h, g2) has an lcm dividing lcm(h, g1);
        // among equal lcms keep the first (coprime pairs are always kept here)
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        for (k, (g1, l1, cop)) in candidates.iter().enumerate() {
            let dominated = !*cop
                && (candidates[k + 1..]
                    .iter()
                    .any(|(_, l2, _)| l2.divides(l1))
                    || kept.iter().any(|(_, l2, _)| l2.divides(l1)));
            if !dominated {
                kept.push((*g1, *l1, *cop));
            }
        }

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && hlm.lcm(polys[p.i].lm()) != p.lcm
                && hlm.lcm(polys[p.j].lm()) != p.lcm)
        });

        for (g, l, cop) in kept {
            if !cop {
                let s = self.pair_sugar(g, hi, &l);
                self.pairs.push(Pair {
                    i: g,
                    j: hi,
                    lcm: l,
                    sugar: s,
                });
            }
        }

        for g in 0..hi {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let strategy = self.strategy;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                let primary = match strategy {
                    Strategy::Normal => pa.lcm.degree().cmp(&pb.lcm.degree()),
                    Strategy::Sugar => pa.sugar.cmp(&pb.sugar),
                };
                primary
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> IntPoly {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let sf = p.lcm.div(f.lm());
        let sg = p.lcm.div(g.lm());
        // a * sf * f - b * sg * g
        let shifted_f: Vec<(Mono, BigInt)> = f.terms.iter().map(|(m, c)| (m.mul(&sf), c.clone())).collect();
        IntPoly {
            terms: combine(&a, &shifted_f, &b, &sg, &g.terms, &self.order),
        }
    }

    fn is_unit(&self) -> bool {
        self.polys
            .iter()
            .zip(&self.active)
            .any(|(p, &a)| a && p.lm().degree() == 0)
    }

    /// Runs Buchberger on the inputs (zero inputs ignored) and returns the
    /// reduced basis, primitive with positive leading coefficients, sorted
    /// by increasing leading monomial.
    pub fn run(mut self, inputs: Vec<IntPoly>) -> Vec<IntPoly> {
        let mut inputs: Vec<IntPoly> = inputs.into_iter().filter(|p| !p.is_zero()).collect();
        for p in inputs.iter_mut() {
            p.sort(&self.order);
            p.make_primitive();
        }
        // smaller leading monomials first keeps early reductions cheap
        inputs.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
        for p in inputs {
            let r = reduce(&p, &self.active_refs(), &self.order, true).rem;
            if r.is_zero() {
                continue;
            }
            let mut r = r;
            r.make_primitive();
            let s = r.sugar_degree().max(p.sugar_degree());
            self.update(r, s);
            if self.is_unit() {
                break;
            }
        }

        while !self.is_unit() {
            let Some(pair) = self.select_pair() else {
                break;
            };
            let s = self.spoly(&pair);
            if s.is_zero() {
                continue;
            }
            let mut r = reduce(&s, &self.active_refs(), &self.order, true).rem;
            if r.is_zero() {
                continue;
            }
            r.make_primitive();
            let sugar = pair.sugar.max(r.sugar_degree());
            self.update(r, sugar);
        }

        self.finish()
    }

    fn finish(self) -> Vec<IntPoly> {
        let order = self.order;
        if self.is_unit() {
            return vec![IntPoly {
                terms: vec![(Mono::default(), BigInt::one())],
            }];
        }
        let mut basis: Vec<IntPoly> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        // minimality: no leading monomial divides another
        let lms: Vec<Mono> = basis.iter().map(|p| *p.lm()).collect();
        let keep: Vec<bool> = (0..basis.len())
            .map(|i| {
                !(0..basis.len()).any(|j| {
                    j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)
                })
            })
            .collect();
        basis = basis
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(p, _)| p)
            .collect();
        basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        let mut reduced = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<&IntPoly> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p)
                .collect();
            let mut r = reduce(&basis[i], &others, &order, true).rem;
            r.make_primitive();
            reduced.push(r);
        }
        reduced
    }
}
