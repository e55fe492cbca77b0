use std::cmp::Ordering;

use super::poly::{Mono, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
    /// Variables `0..k` form a block compared first (graded reverse lex),
    /// ties broken by graded reverse lex on the remaining variables. Any
    /// monomial involving the first block exceeds every monomial free of it.
    BlockElimination(usize),
}

/// A monomial order on exponent vectors of a fixed length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub nvars: usize,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedReverseLex,
            nvars,
        }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            nvars,
        }
    }

    pub fn block_elimination(split: usize, nvars: usize) -> Self {
        assert!(split <= nvars);
        MonomialOrder {
            kind: OrderKind::BlockElimination(split),
            nvars,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        debug_assert!(self.nvars <= MAX_VARS);
        match self.kind {
            OrderKind::GradedReverseLex => grevlex(&a.e[..self.nvars], &b.e[..self.nvars]),
            OrderKind::Lex => a.e[..self.nvars].cmp(&b.e[..self.nvars]),
            OrderKind::BlockElimination(k) => grevlex(&a.e[..k], &b.e[..k])
                .then_with(|| grevlex(&a.e[k..self.nvars], &b.e[k..self.nvars])),
        }
    }

    /// Comparison on plain exponent vectors.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.cmp(&Mono::from_slice(a), &Mono::from_slice(b))
    }
}

#[inline]
fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&x| u32::from(x)).sum();
    let db: u32 = b.iter().map(|&x| u32::from(x)).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
