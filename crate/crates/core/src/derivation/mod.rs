//! `F`-derivations of `F[V_8n]`.
//!
//! A derivation is determined by the pair `(d(a), d(b))`. A pair of generator
//! images extends to a derivation exactly when the free-group lift vanishes
//! on each defining relator `a^2n`, `b^4`, `(ba)^2`, `(b^-1 a)^2`.

mod space;
mod word;

use std::fmt;

pub(crate) use space::classify_against;
pub use space::{
    amended_paper_basis, classify, derivation_space_oracle, inner_basis, inner_span, inner_witness,
    outer_codimension, paper_basis, Classification, DerivationSpace, PaperBasis, PaperBasisEntry,
    PaperFamily,
};
pub use word::{free_extension, FreeWord, Letter};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::GroupParams;

/// Candidate images `(f(a), f(b))`, not yet known to define a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorImages {
    pub f_a: AlgebraElement,
    pub f_b: AlgebraElement,
}

impl GeneratorImages {
    pub fn new(f_a: AlgebraElement, f_b: AlgebraElement) -> Result<Self> {
        // surfaces a params/field mismatch as an error
        f_a.checked_add(&f_b)?;
        Ok(GeneratorImages { f_a, f_b })
    }

    pub fn zero(params: GroupParams, field: FieldSpec) -> Self {
        GeneratorImages {
            f_a: AlgebraElement::zero(params, field),
            f_b: AlgebraElement::zero(params, field),
        }
    }

    pub fn params(&self) -> GroupParams {
        self.f_a.params()
    }

    pub fn field(&self) -> FieldSpec {
        self.f_a.field()
    }

    /// Concatenated coefficient vectors of `f(a)` and `f(b)`, length `16n`.
    pub fn to_vector(&self) -> Vec<Scalar> {
        let mut v = self.f_a.to_vector();
        v.extend(self.f_b.to_vector());
        v
    }

    pub fn from_vector(params: GroupParams, field: FieldSpec, v: &[Scalar]) -> Result<Self> {
        let m = params.order();
        if v.len() != 2 * m {
            return Err(Error::DimensionMismatch {
                expected: 2 * m,
                actual: v.len(),
            });
        }
        Ok(GeneratorImages {
            f_a: AlgebraElement::from_vector(params, field, &v[..m])?,
            f_b: AlgebraElement::from_vector(params, field, &v[m..])?,
        })
    }

    /// The relator words, in the order used for obstructions.
    pub fn relators(params: GroupParams) -> [(&'static str, FreeWord); 4] {
        use Letter::*;
        [
            ("a^2n", FreeWord::power(&[A], params.a_order())),
            ("b^4", FreeWord::power(&[B], 4)),
            ("(ba)^2", FreeWord::power(&[B, A], 2)),
            ("(b^-1a)^2", FreeWord::power(&[BInv, A], 2)),
        ]
    }

    /// `f~` on each relator: `(a^2n, b^4, (ba)^2, (b^-1 a)^2)`.
    pub fn relator_obstructions(&self) -> [AlgebraElement; 4] {
        Self::relators(self.params()).map(|(_, w)| free_extension(self, &w))
    }

    /// Name of the first relator whose obstruction does not vanish.
    pub fn first_failing_relator(&self) -> Option<&'static str> {
        Self::relators(self.params())
            .into_iter()
            .find(|(_, w)| !free_extension(self, w).is_zero())
            .map(|(name, _)| name)
    }

    pub fn is_derivation_pair(&self) -> bool {
        self.first_failing_relator().is_none()
    }
}

/// Images of a derivation on the generators. Construction checks the
/// relator criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationPair {
    images: GeneratorImages,
}

impl DerivationPair {
    pub fn new(images: GeneratorImages) -> Result<Self> {
        match images.first_failing_relator() {
            None => Ok(DerivationPair { images }),
            Some(relator) => Err(Error::NotADerivation { relator }),
        }
    }

    /// Skips the relator check; callers must already know the pair is valid.
    pub(crate) fn new_unchecked(images: GeneratorImages) -> Self {
        DerivationPair { images }
    }

    pub fn zero(params: GroupParams, field: FieldSpec) -> Self {
        DerivationPair {
            images: GeneratorImages::zero(params, field),
        }
    }

    pub fn d_a(&self) -> &AlgebraElement {
        &self.images.f_a
    }

    pub fn d_b(&self) -> &AlgebraElement {
        &self.images.f_b
    }

    pub fn images(&self) -> &GeneratorImages {
        &self.images
    }

    pub fn params(&self) -> GroupParams {
        self.images.params()
    }

    pub fn field(&self) -> FieldSpec {
        self.images.field()
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        self.images.to_vector()
    }

    pub fn is_zero(&self) -> bool {
        self.images.f_a.is_zero() && self.images.f_b.is_zero()
    }

    /// `d(x)`, expanding each `a^i b^j` by the Leibniz rule along the word
    /// `a···a b···b`.
    pub fn evaluate(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.images.f_a.checked_add(x)?;
        let mut out = AlgebraElement::zero(self.params(), self.field());
        for (g, c) in x.terms() {
            let image = free_extension(&self.images, &FreeWord::positive(g.i, g.j));
            out = &out + &image.scale(c);
        }
        Ok(out)
    }

    /// `c1·self + c2·other`, which is again a derivation.
    pub fn linear_combination(&self, c1: &Scalar, other: &Self, c2: &Scalar) -> Result<Self> {
        let f_a = self.d_a().scale(c1).checked_add(&other.d_a().scale(c2))?;
        let f_b = self.d_b().scale(c1).checked_add(&other.d_b().scale(c2))?;
        Ok(DerivationPair {
            images: GeneratorImages { f_a, f_b },
        })
    }
}

impl fmt::Display for DerivationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d(a) = {}, d(b) = {}", self.d_a(), self.d_b())
    }
}

/// The inner derivation `α ↦ αβ - βα`.
pub fn inner_derivation(beta: &AlgebraElement) -> DerivationPair {
    let params = beta.params();
    let field = beta.field();
    let a = AlgebraElement::basis(params, field, params.a());
    let b = AlgebraElement::basis(params, field, params.b());
    DerivationPair::new_unchecked(GeneratorImages {
        f_a: a.commutator(beta).expect("same algebra"),
        f_b: b.commutator(beta).expect("same algebra"),
    })
}
