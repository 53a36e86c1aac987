//! The group `V_8n = <a, b | a^2n = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b>`.
//!
//! Every element has the unique normal form `a^i b^j` with `0 <= i < 2n` and
//! `0 <= j < 4`. Products are reduced with the commutation rule
//!
//! ```text
//! b^j a^i = a^i b^j                      (j even)
//! b^j a^i = a^-i b^(j + 2(i mod 2))      (j odd)
//! ```
//!
//! which the tests check against plain rewriting with the two defining
//! relators.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    n: usize,
}

/// Normal form `a^i b^j`. Ordered lexicographically by `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub i: usize,
    pub j: usize,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { i: 0, j: 0 };

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write!(f, "a^{i}"),
            (0, j) => write!(f, "b^{j}"),
            (i, j) => write!(f, "a^{i}*b^{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub members: BTreeSet<GroupElement>,
}

impl GroupParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupOrder(n));
        }
        Ok(GroupParams { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `|V_8n| = 8n`.
    pub fn order(self) -> usize {
        8 * self.n
    }

    /// Order of `a`, i.e. `2n`.
    pub fn a_order(self) -> usize {
        2 * self.n
    }

    /// `a^i b^j` with arbitrary integer exponents, reduced to normal form.
    pub fn element(self, i: i64, j: i64) -> GroupElement {
        GroupElement {
            i: i.rem_euclid(self.a_order() as i64) as usize,
            j: j.rem_euclid(4) as usize,
        }
    }

    /// Validates a normal-form pair read from outside.
    pub fn checked_element(self, i: usize, j: usize) -> Result<GroupElement> {
        if i >= self.a_order() || j >= 4 {
            return Err(Error::Parse(format!(
                "a^{i}*b^{j} is not a normal form for n = {}",
                self.n
            )));
        }
        Ok(GroupElement { i, j })
    }

    pub fn a(self) -> GroupElement {
        self.element(1, 0)
    }

    pub fn b(self) -> GroupElement {
        self.element(0, 1)
    }

    /// All elements in lexicographic `(i, j)` order.
    pub fn elements(self) -> impl Iterator<Item = GroupElement> {
        (0..self.a_order()).flat_map(|i| (0..4).map(move |j| GroupElement { i, j }))
    }

    /// Position of `g` in the lexicographic enumeration.
    pub fn index(self, g: GroupElement) -> usize {
        4 * g.i + g.j
    }

    pub fn element_at(self, index: usize) -> GroupElement {
        GroupElement {
            i: index / 4,
            j: index % 4,
        }
    }

    pub fn multiply(self, g: GroupElement, h: GroupElement) -> GroupElement {
        let m = self.a_order();
        if g.j % 2 == 0 {
            GroupElement {
                i: (g.i + h.i) % m,
                j: (g.j + h.j) % 4,
            }
        } else {
            GroupElement {
                i: (g.i + m - h.i) % m,
                j: (g.j + 2 * (h.i % 2) + h.j) % 4,
            }
        }
    }

    pub fn inverse(self, g: GroupElement) -> GroupElement {
        self.multiply(
            self.element(0, -(g.j as i64)),
            self.element(-(g.i as i64), 0),
        )
    }

    pub fn pow(self, g: GroupElement, k: usize) -> GroupElement {
        (0..k).fold(GroupElement::IDENTITY, |acc, _| self.multiply(acc, g))
    }

    pub fn element_order(self, g: GroupElement) -> usize {
        let mut k = 1;
        let mut x = g;
        while !x.is_identity() {
            x = self.multiply(x, g);
            k += 1;
        }
        k
    }

    /// `h g h^-1`
    pub fn conjugate(self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.multiply(self.multiply(h, g), self.inverse(h))
    }

    pub fn is_central(self, g: GroupElement) -> bool {
        [self.a(), self.b()]
            .into_iter()
            .all(|x| self.multiply(g, x) == self.multiply(x, g))
    }

    /// Partition into conjugacy classes by orbit closure under conjugation
    /// by `a` and `b`. Classes are listed in order of their representative,
    /// which is the lexicographically smallest member.
    pub fn conjugacy_classes(self) -> Vec<ConjugacyClass> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[self.index(g)] {
                continue;
            }
            let mut members = BTreeSet::from([g]);
            let mut stack = vec![g];
            while let Some(x) = stack.pop() {
                for h in [self.a(), self.b()] {
                    let y = self.conjugate(x, h);
                    if members.insert(y) {
                        stack.push(y);
                    }
                }
            }
            for &m in &members {
                seen[self.index(m)] = true;
            }
            classes.push(ConjugacyClass {
                representative: g,
                members,
            });
        }
        classes
    }

    /// The explicit class lists of `V_8n` in closed form, with exponents
    /// reduced to normal form. Used as an independent expectation for
    /// [`GroupParams::conjugacy_classes`].
    pub fn listed_conjugacy_classes(self) -> Vec<BTreeSet<GroupElement>> {
        let n = self.n as i64;
        let e = |i: i64, j: i64| self.element(i, j);
        let mut out: Vec<BTreeSet<GroupElement>> = Vec::new();
        if n % 2 == 0 {
            out.push([e(0, 0)].into());
            out.push([e(n, 0)].into());
            out.push([e(0, 2)].into());
            out.push([e(n, 2)].into());
            for k in 1..n / 2 {
                out.push([e(2 * k, 0), e(-2 * k, 0)].into());
            }
            for k in 1..=n {
                out.push([e(2 * k - 1, 0), e(-2 * k + 1, 2)].into());
            }
            for k in 1..n / 2 {
                out.push([e(2 * k, 2), e(-2 * k, 2)].into());
            }
            let family = |x: i64, y: i64| -> BTreeSet<GroupElement> {
                (1..=n / 2)
                    .flat_map(|k| [e(4 * k + x, 1), e(4 * k + y, -1)])
                    .collect()
            };
            out.push(family(0, 2));
            out.push(family(1, 3));
            out.push(family(2, 0));
            out.push(family(3, 1));
        } else {
            out.push([e(0, 0)].into());
            out.push([e(0, 2)].into());
            for k in 1..=(n - 1) / 2 {
                out.push([e(2 * k, 0), e(-2 * k, 0)].into());
            }
            for k in 1..=n {
                out.push([e(2 * k - 1, 0), e(-2 * k + 1, 2)].into());
            }
            for k in 1..=(n - 1) / 2 {
                out.push([e(2 * k, 2), e(-2 * k, 2)].into());
            }
            out.push((1..=n).flat_map(|k| [e(2 * k, 1), e(2 * k, -1)]).collect());
            out.push(
                (1..=n)
                    .flat_map(|k| [e(2 * k + 1, 1), e(2 * k + 1, -1)])
                    .collect(),
            );
        }
        out
    }

    /// Expected class count: `2n + 6` for even `n`, `2n + 3` for odd `n`.
    pub fn expected_class_count(self) -> usize {
        if self.n % 2 == 0 {
            2 * self.n + 6
        } else {
            2 * self.n + 3
        }
    }
}
