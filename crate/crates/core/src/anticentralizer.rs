//! Closed-form bases of the anti-centralizers of `b` and `a^-1 b`.
//!
//! The sets are built term for term from the closed-form formulas, negative
//! exponents reduced to normal form. Nothing here is checked against the
//! defining relation; [`explicit_basis_defects`] does that separately so a
//! misprinted vector shows up as a reported defect instead of being repaired.

use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraElement;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::group::{GroupElement, GroupParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AntiCentralizerTarget {
    /// `b`
    B,
    /// `a^-1 b`
    AInvB,
}

impl AntiCentralizerTarget {
    pub fn element(self, params: GroupParams) -> GroupElement {
        match self {
            AntiCentralizerTarget::B => params.b(),
            AntiCentralizerTarget::AInvB => params.element(-1, 1),
        }
    }
}

impl fmt::Display for AntiCentralizerTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AntiCentralizerTarget::B => "b",
            AntiCentralizerTarget::AInvB => "a_inv_b",
        })
    }
}

impl FromStr for AntiCentralizerTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "b" => Ok(AntiCentralizerTarget::B),
            "a_inv_b" => Ok(AntiCentralizerTarget::AInvB),
            other => Err(Error::Parse(format!(
                "unknown anti-centralizer target {other:?}"
            ))),
        }
    }
}

/// Small builder for `(a^x - a^y b^z) b^w`-shaped elements.
pub(crate) struct Terms {
    params: GroupParams,
    field: FieldSpec,
}

impl Terms {
    pub(crate) fn new(params: GroupParams, field: FieldSpec) -> Self {
        Terms { params, field }
    }

    /// `a^i b^j - a^k b^l`
    pub(crate) fn diff(&self, (i, j): (i64, i64), (k, l): (i64, i64)) -> AlgebraElement {
        AlgebraElement::from_terms(self.params, self.field, [(i, j, 1), (k, l, -1)])
    }

    /// `x · b^j`
    pub(crate) fn times_b(&self, x: &AlgebraElement, j: i64) -> AlgebraElement {
        x.right_mul_group(self.params.element(0, j))
    }

    pub(crate) fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.params, self.field)
    }
}

pub(crate) fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

pub(crate) fn ceil_half(x: i64) -> i64 {
    -(-x).div_euclid(2)
}

/// The closed-form basis of `C̄(b)` or `C̄(a^-1 b)`, verbatim.
pub fn explicit_basis(
    which: AntiCentralizerTarget,
    params: GroupParams,
    field: FieldSpec,
) -> Vec<AlgebraElement> {
    let n = params.n() as i64;
    let t = Terms::new(params, field);
    let mut out = Vec::new();
    match which {
        AntiCentralizerTarget::B => {
            for k in 1..=floor_half(n - 1) {
                let base = t.diff((2 * k, 0), (-2 * k, 0));
                for j in 0..4 {
                    out.push(t.times_b(&base, j));
                }
            }
            for k in 1..=floor_half(n + 1) {
                let base = t.diff((2 * k - 1, 0), (-(2 * k - 1), 2));
                out.push(base.clone());
                out.push(t.times_b(&base, 1));
            }
            for k in 1..=ceil_half(n - 1) {
                let base = t.diff((-(2 * k - 1), 0), (2 * k - 1, 2));
                out.push(base.clone());
                out.push(t.times_b(&base, 1));
            }
        }
        AntiCentralizerTarget::AInvB => {
            for k in 1..=floor_half(n - 1) {
                let even = t.diff((2 * k, 0), (-2 * k, 0));
                let odd = t.diff((2 * k - 1, 0), (-(2 * k + 1), 0));
                out.push(even.clone());
                out.push(t.times_b(&even, 2));
                out.push(t.times_b(&odd, 1));
                out.push(t.times_b(&odd, 3));
            }
            for k in 1..=n {
                out.push(t.diff((2 * k - 1, 0), (-(2 * k - 1), 2)));
                out.push(t.times_b(&t.diff((2 * k - 2, 0), (-2 * k, 2)), 1));
            }
        }
    }
    out
}

/// Expected size of the closed-form basis.
pub fn explicit_basis_len(which: AntiCentralizerTarget, params: GroupParams) -> usize {
    let n = params.n() as i64;
    let len = match which {
        AntiCentralizerTarget::B => {
            4 * floor_half(n - 1) + 2 * floor_half(n + 1) + 2 * ceil_half(n - 1)
        }
        AntiCentralizerTarget::AInvB => 4 * floor_half(n - 1) + 2 * n,
    };
    len as usize
}

/// Indices of basis vectors that do not anti-commute with the target.
pub fn explicit_basis_defects(
    which: AntiCentralizerTarget,
    params: GroupParams,
    field: FieldSpec,
) -> Vec<usize> {
    let target = AlgebraElement::basis(params, field, which.element(params));
    explicit_basis(which, params, field)
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.anti_commutator(&target).unwrap().is_zero())
        .map(|(k, _)| k)
        .collect()
}
