//! The group algebra `F[V_8n]`: finitely supported coefficient maps with the
//! convolution product.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::{GroupElement, GroupParams};
use crate::linalg::{Matrix, Subspace};

/// `Σ λ_g g`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    params: GroupParams,
    field: FieldSpec,
    coeffs: BTreeMap<GroupElement, Scalar>,
}

impl AlgebraElement {
    pub fn zero(params: GroupParams, field: FieldSpec) -> Self {
        AlgebraElement {
            params,
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(params: GroupParams, field: FieldSpec) -> Self {
        Self::basis(params, field, GroupElement::IDENTITY)
    }

    /// The group element `g` viewed in the algebra.
    pub fn basis(params: GroupParams, field: FieldSpec, g: GroupElement) -> Self {
        Self::monomial(params, field, g, field.one())
    }

    pub fn monomial(params: GroupParams, field: FieldSpec, g: GroupElement, c: Scalar) -> Self {
        let mut x = Self::zero(params, field);
        x.add_term(g, c);
        x
    }

    /// `Σ c·a^i b^j` from integer exponents and coefficients; exponents may be
    /// negative and are reduced to normal form.
    pub fn from_terms(
        params: GroupParams,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (i64, i64, i64)>,
    ) -> Self {
        let mut x = Self::zero(params, field);
        for (i, j, c) in terms {
            x.add_term(params.element(i, j), field.from_i64(c));
        }
        x
    }

    /// Inverse of [`AlgebraElement::to_vector`].
    pub fn from_vector(params: GroupParams, field: FieldSpec, v: &[Scalar]) -> Result<Self> {
        if v.len() != params.order() {
            return Err(Error::DimensionMismatch {
                expected: params.order(),
                actual: v.len(),
            });
        }
        let mut x = Self::zero(params, field);
        for (k, c) in v.iter().enumerate() {
            x.add_term(params.element_at(k), c.clone());
        }
        Ok(x)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: GroupElement) -> Scalar {
        self.coeffs
            .get(&g)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero terms in lexicographic order of the group element.
    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, &Scalar)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Dense coefficient vector in lexicographic `(i, j)` order, length `8n`.
    pub fn to_vector(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.params.order()];
        for (g, c) in &self.coeffs {
            v[self.params.index(*g)] = c.clone();
        }
        v
    }

    pub fn add_term(&mut self, g: GroupElement, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.params == other.params && self.field == other.field {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.describe_algebra(),
                right: other.describe_algebra(),
            })
        }
    }

    fn describe_algebra(&self) -> String {
        format!("{}[V_{}]", self.field, self.params.order())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.params, self.field);
        for (g, x) in &self.coeffs {
            for (h, y) in &other.coeffs {
                out.add_term(self.params.multiply(*g, *h), x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.params, self.field);
        if c.is_zero() {
            return out;
        }
        for (g, x) in &self.coeffs {
            out.add_term(*g, x * c);
        }
        out
    }

    /// `g · self` for a group element `g`; a permutation of coefficients.
    pub fn left_mul_group(&self, g: GroupElement) -> Self {
        AlgebraElement {
            params: self.params,
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .map(|(h, c)| (self.params.multiply(g, *h), c.clone()))
                .collect(),
        }
    }

    /// `self · g` for a group element `g`.
    pub fn right_mul_group(&self, g: GroupElement) -> Self {
        AlgebraElement {
            params: self.params,
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .map(|(h, c)| (self.params.multiply(*h, g), c.clone()))
                .collect(),
        }
    }

    /// Augmentation `ε(Σ λ_g g) = Σ λ_g`.
    pub fn augmentation(&self) -> Scalar {
        self.coeffs
            .values()
            .fold(self.field.zero(), |acc, c| &acc + c)
    }

    /// Membership in `Δ'(H)`: the coefficient sums over `H` and over its
    /// complement both vanish.
    pub fn in_delta_prime(&self, h: &SubgroupSpec) -> bool {
        let zero = self.field.zero();
        let (inside, outside) =
            self.coeffs
                .iter()
                .fold((zero.clone(), zero), |(ins, outs), (g, c)| {
                    if h.contains(*g) {
                        (&ins + c, outs)
                    } else {
                        (ins, &outs + c)
                    }
                });
        inside.is_zero() && outside.is_zero()
    }

    /// `xy - yx`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// `xy + yx`
    pub fn anti_commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?
            .checked_add(&other.checked_mul(self)?)
    }

    /// `C(β) = {α : αβ = βα}`.
    pub fn centralizer(&self) -> Subspace {
        self.twisted_kernel(false)
    }

    /// `C̄(β) = {α : αβ = -βα}`.
    pub fn anti_centralizer(&self) -> Subspace {
        self.twisted_kernel(true)
    }

    /// Kernel of `α ↦ αβ ∓ βα` on the coefficient space.
    fn twisted_kernel(&self, anti: bool) -> Subspace {
        let columns: Vec<Vec<Scalar>> = self
            .params
            .elements()
            .map(|g| {
                let g_beta = self.left_mul_group(g);
                let beta_g = self.right_mul_group(g);
                let image = if anti {
                    &g_beta + &beta_g
                } else {
                    &g_beta - &beta_g
                };
                image.to_vector()
            })
            .collect();
        Matrix::from_columns(self.field, self.params.order(), &columns)
            .expect("columns have length 8n")
            .kernel()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag.is_one(), g.is_identity()) {
                (true, false) => write!(f, "{g}")?,
                (_, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{g}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.describe_algebra())
    }
}

// Operator forms panic on mismatched algebras; use the `checked_*` methods
// for input that has not been validated.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            params: self.params,
            field: self.field,
            coeffs: self.coeffs.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }
}

/// A subgroup of `V_8n` given by generators, with its closure precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpec {
    generators: Vec<GroupElement>,
    closure: BTreeSet<GroupElement>,
}

impl SubgroupSpec {
    pub fn generated_by(params: GroupParams, generators: Vec<GroupElement>) -> Self {
        let mut closure = BTreeSet::from([GroupElement::IDENTITY]);
        let mut frontier = vec![GroupElement::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in &generators {
                let y = params.multiply(x, g);
                if closure.insert(y) {
                    frontier.push(y);
                }
            }
        }
        SubgroupSpec {
            generators,
            closure,
        }
    }

    /// `<a^2>`.
    pub fn a_squared(params: GroupParams) -> Self {
        Self::generated_by(params, vec![params.element(2, 0)])
    }

    pub fn whole(params: GroupParams) -> Self {
        Self::generated_by(params, vec![params.a(), params.b()])
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn closure(&self) -> &BTreeSet<GroupElement> {
        &self.closure
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.closure.contains(&g)
    }
}
