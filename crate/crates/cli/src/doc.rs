//! JSON documents read and written by the command line tool.

use std::collections::BTreeMap;

use bsato::{ExponentMatrix, FactoredBPoly, Rational};
use serde::{Deserialize, Serialize};

/// `{"vars": n, "monomials": [[a_1, ..., a_n], ...]}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub vars: usize,
    pub monomials: Vec<Vec<u32>>,
}

impl InputSpec {
    pub fn to_matrix(&self) -> Result<ExponentMatrix, String> {
        if self.vars == 0 {
            return Err("\"vars\" must be at least 1".into());
        }
        ExponentMatrix::from_columns(self.vars, self.monomials.clone()).map_err(|e| e.to_string())
    }
}

/// One factor `(s - root)^mult`; `root` is a rational string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub root: String,
    pub mult: u32,
}

/// A factored b-function, factors sorted by increasing `-root`. Any other
/// top-level keys (for instance the metadata of `bf` output) are ignored
/// on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredPolyDoc {
    pub factors: Vec<FactorDoc>,
}

impl From<&FactoredBPoly> for FactoredPolyDoc {
    fn from(b: &FactoredBPoly) -> Self {
        FactoredPolyDoc {
            factors: b
                .factors()
                .iter()
                .map(|(alpha, &mult)| FactorDoc {
                    root: (-alpha.clone()).to_string(),
                    mult,
                })
                .collect(),
        }
    }
}

impl FactoredPolyDoc {
    pub fn to_factored(&self) -> Result<FactoredBPoly, String> {
        let mut seen: BTreeMap<Rational, u32> = BTreeMap::new();
        for f in &self.factors {
            let root: Rational = f
                .root
                .parse()
                .map_err(|e| format!("bad root {:?}: {e}", f.root))?;
            if f.mult == 0 {
                return Err(format!("factor with root {} has multiplicity 0", f.root));
            }
            *seen.entry(-root).or_insert(0) += f.mult;
        }
        Ok(FactoredBPoly::from_pairs(seen))
    }
}
