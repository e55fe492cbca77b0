use std::collections::BTreeMap;
use std::fmt;


use super::rational::Rational;
use super::roots::rational_roots;
use super::unipoly::UniPoly;
use crate::Error;

/// A polynomial split into rational linear factors, `prod (s + alpha)^n`.
///
/// Keys are the negated roots `alpha`, values the multiplicities (always
/// positive).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredBPoly {
    factors: BTreeMap<Rational, u32>,
}

impl FactoredBPoly {
    pub fn new() -> Self {
        FactoredBPoly::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        let mut f = FactoredBPoly::new();
        for (alpha, mult) in pairs {
            f.insert(alpha, mult);
        }
        f
    }

    /// Multiplies in `(s + alpha)^mult`; a zero multiplicity is a no-op.
    pub fn insert(&mut self, alpha: Rational, mult: u32) {
        if mult > 0 {
            *self.factors.entry(alpha).or_insert(0) += mult;
        }
    }

    pub fn factors(&self) -> &BTreeMap<Rational, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, alpha: &Rational) -> u32 {
        self.factors.get(alpha).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Smallest key, i.e. the smallest root of `b(-s)`.
    pub fn min_alpha(&self) -> Option<&Rational> {
        self.factors.keys().next()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn expand(&self) -> UniPoly {
        self.factors.iter().fold(UniPoly::one(), |acc, (alpha, &m)| {
            &acc * &UniPoly::linear(alpha.clone()).pow(m)
        })
    }

    /// `b(s) -> b(s - delta)`: each key `alpha` becomes `alpha - delta`.
    pub fn shift_variable(&self, delta: &Rational) -> FactoredBPoly {
        FactoredBPoly {
            factors: self
                .factors
                .iter()
                .map(|(a, &m)| (a - delta, m))
                .collect(),
        }
    }

    /// Splits `p` into rational linear factors after making it monic.
    ///
    /// Fails with [`Error::NonRationalFactor`] when a factor without rational
    /// roots remains.
    pub fn factor_rational_roots(p: &UniPoly) -> Result<FactoredBPoly, Error> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rest = p.monic();
        let mut out = FactoredBPoly::new();

        // roots at zero first so the constant term is nonzero below
        while rest.degree().unwrap_or(0) > 0 && rest.coeffs()[0].is_zero() {
            rest = UniPoly::new(rest.coeffs()[1..].to_vec());
            out.insert(Rational::zero(), 1);
        }

        for root in rational_roots(&rest) {
            let alpha = -root;
            loop {
                let (quo, rem) = rest.div_linear(&alpha);
                if !rem.is_zero() {
                    break;
                }
                rest = quo;
                out.insert(alpha.clone(), 1);
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            return Err(Error::NonRationalFactor(rest.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for FactoredBPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, &m)| {
                let lin = if a.is_zero() {
                    "s".to_string()
                } else if a.is_negative() {
                    format!("(s - {})", a.abs())
                } else {
                    format!("(s + {a})")
                };
                match (m, a.is_zero()) {
                    (1, _) => lin,
                    (_, true) => format!("s^{m}"),
                    _ => format!("{lin}^{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

impl fmt::Debug for FactoredBPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
