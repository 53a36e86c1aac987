use std::fmt;

use rayon::prelude::*;

use crate::algebra::AlgebraElement;
use crate::anticentralizer::{ceil_half, floor_half, Terms};
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::group::GroupParams;
use crate::linalg::{Matrix, Subspace};

use super::{inner_derivation, DerivationPair, GeneratorImages};

/// All derivations of `F[V_8n]`, as a subspace of `F^16n` (the concatenated
/// coefficient vectors of `d(a)` and `d(b)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub params: GroupParams,
    pub field: FieldSpec,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The canonical basis, one derivation per RREF row.
    pub fn basis(&self) -> Vec<DerivationPair> {
        self.space
            .basis()
            .iter()
            .map(|v| {
                DerivationPair::new_unchecked(
                    GeneratorImages::from_vector(self.params, self.field, v)
                        .expect("basis rows have length 16n"),
                )
            })
            .collect()
    }
}

/// Solves the relator criterion directly: the kernel of the linear map
/// sending `(f(a), f(b))` to its four relator obstructions.
pub fn derivation_space_oracle(params: GroupParams, field: FieldSpec) -> DerivationSpace {
    let m = params.order();
    let zero = AlgebraElement::zero(params, field);
    let columns: Vec<Vec<Scalar>> = (0..2 * m)
        .into_par_iter()
        .map(|k| {
            let unit = AlgebraElement::basis(params, field, params.element_at(k % m));
            let images = if k < m {
                GeneratorImages {
                    f_a: unit,
                    f_b: zero.clone(),
                }
            } else {
                GeneratorImages {
                    f_a: zero.clone(),
                    f_b: unit,
                }
            };
            images
                .relator_obstructions()
                .iter()
                .flat_map(AlgebraElement::to_vector)
                .collect()
        })
        .collect();
    let space = Matrix::from_columns(field, 4 * m, &columns)
        .expect("obstruction columns have length 32n")
        .kernel();
    DerivationSpace {
        params,
        field,
        space,
    }
}

/// `{d_g}` for every `g` in a non-central conjugacy class other than the
/// class representative. Its size is `8n` minus the number of classes.
pub fn inner_basis(params: GroupParams, field: FieldSpec) -> Vec<DerivationPair> {
    params
        .conjugacy_classes()
        .iter()
        .flat_map(|c| {
            c.members
                .iter()
                .filter(|&&g| g != c.representative)
                .copied()
                .collect::<Vec<_>>()
        })
        .map(|g| inner_derivation(&AlgebraElement::basis(params, field, g)))
        .collect()
}

pub fn inner_span(params: GroupParams, field: FieldSpec) -> Subspace {
    span_of(params, field, &inner_basis(params, field))
}

fn span_of(params: GroupParams, field: FieldSpec, pairs: &[DerivationPair]) -> Subspace {
    Subspace::span(
        field,
        2 * params.order(),
        pairs.iter().map(DerivationPair::to_vector).collect(),
    )
    .expect("pair vectors have length 16n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Inner,
    Outer,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Inner => "Inner",
            Classification::Outer => "Outer",
        })
    }
}

/// Inner iff the pair lies in the span of the inner basis.
pub fn classify(d: &DerivationPair) -> Classification {
    classify_against(&inner_span(d.params(), d.field()), d)
}

pub(crate) fn classify_against(inner: &Subspace, d: &DerivationPair) -> Classification {
    if inner
        .member(&d.to_vector())
        .expect("matching ambient dimension")
    {
        Classification::Inner
    } else {
        Classification::Outer
    }
}

/// `dim Der - dim Inn`.
pub fn outer_codimension(params: GroupParams, field: FieldSpec) -> usize {
    derivation_space_oracle(params, field).dim() - inner_span(params, field).dim()
}

/// Some `β` with `d = d_β`, or `None` when `d` is outer. The answer is the
/// canonical solution of the linear system with free coordinates set to 0,
/// so it is unique up to the center of the algebra.
pub fn inner_witness(d: &DerivationPair) -> Result<Option<AlgebraElement>> {
    let params = d.params();
    let field = d.field();
    let columns: Vec<Vec<Scalar>> = params
        .elements()
        .map(|g| inner_derivation(&AlgebraElement::basis(params, field, g)).to_vector())
        .collect();
    let system = Matrix::from_columns(field, 2 * params.order(), &columns)?;
    system
        .solve(&d.to_vector())?
        .map(|beta| AlgebraElement::from_vector(params, field, &beta))
        .transpose()
}

/// Which closed-form family applies: the coprime case (`char 0` or `p ∤ n`)
/// or the modular case (`p | n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaperFamily {
    Coprime,
    Modular,
}

impl PaperFamily {
    pub fn for_case(params: GroupParams, field: FieldSpec) -> Self {
        if field.divides(params.n()) {
            PaperFamily::Modular
        } else {
            PaperFamily::Coprime
        }
    }

    /// Closed-form dimension of the derivation algebra.
    pub fn expected_dim(self, params: GroupParams) -> usize {
        let n = params.n();
        match (self, n % 2 == 0) {
            (PaperFamily::Coprime, false) => 3 * (2 * n - 1),
            (PaperFamily::Coprime, true) => 6 * (n - 1),
            (PaperFamily::Modular, false) => 4 * (2 * n - 1),
            (PaperFamily::Modular, true) => 8 * (n - 1),
        }
    }
}

/// One listed generator-image pair with its relator check result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperBasisEntry {
    /// e.g. `B2[k=1].0`
    pub label: String,
    pub images: GeneratorImages,
    pub failing_relator: Option<&'static str>,
    /// Replaced by its amended form (see [`amended_paper_basis`]).
    pub amended: bool,
}

impl PaperBasisEntry {
    pub fn is_valid(&self) -> bool {
        self.failing_relator.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperBasis {
    pub params: GroupParams,
    pub field: FieldSpec,
    pub family: PaperFamily,
    pub entries: Vec<PaperBasisEntry>,
}

impl PaperBasis {
    pub fn span(&self) -> Subspace {
        Subspace::span(
            self.field,
            2 * self.params.order(),
            self.entries.iter().map(|e| e.images.to_vector()).collect(),
        )
        .expect("pair vectors have length 16n")
    }

    pub fn all_valid(&self) -> bool {
        self.entries.iter().all(PaperBasisEntry::is_valid)
    }

    /// Labels of entries lying in the span of the entries listed before them.
    pub fn redundant_entries(&self) -> Vec<String> {
        let ambient = 2 * self.params.order();
        let mut span = Subspace::zero(self.field, ambient);
        let mut out = Vec::new();
        for e in &self.entries {
            let v = e.images.to_vector();
            if span.member(&v).expect("length 16n") {
                out.push(e.label.clone());
            } else {
                span = span
                    .join(&Subspace::span(self.field, ambient, vec![v]).expect("length 16n"))
                    .expect("same ambient space");
            }
        }
        out
    }

    /// Valid entries as derivation pairs.
    pub fn derivations(&self) -> Vec<DerivationPair> {
        self.entries
            .iter()
            .filter(|e| e.is_valid())
            .map(|e| DerivationPair::new_unchecked(e.images.clone()))
            .collect()
    }
}

/// `(a^x1 b^y1 - a^x2 b^y2) b^tail`; `None` stands for the zero image.
type Binomial = Option<((i64, i64), (i64, i64), i64)>;

/// The closed-form basis for the case, constructed verbatim and tagged with
/// the outcome of the relator check.
pub fn paper_basis(params: GroupParams, field: FieldSpec) -> PaperBasis {
    build_paper_basis(params, field, false)
}

/// The closed-form basis with two printed entries replaced:
///
/// * coprime `B2`, second pair: `(0, (a^(2k-1) - a^-(2k-1) b^2) b)`. As
///   printed it repeats the second pair of `B3` for every `k` both ranges
///   share, so the verbatim set is linearly dependent for `n >= 2`.
/// * modular `B2'`, first pair: `((a^(2k-2) - a^-2k b^2) b, ...)`. As printed,
///   `(a^(2k-2) - a^-2k b) b^2` fails the `a^2n` relator.
///
/// Every other entry is kept as printed.
pub fn amended_paper_basis(params: GroupParams, field: FieldSpec) -> PaperBasis {
    build_paper_basis(params, field, true)
}

fn amendment(label: &str, k: i64, slot: usize) -> Option<(Binomial, Binomial)> {
    match (label, slot) {
        ("B2", 1) => Some((None, Some(((2 * k - 1, 0), (-(2 * k - 1), 2), 1)))),
        ("B2'", 0) => Some((
            Some(((2 * k - 2, 0), (-2 * k, 2), 1)),
            Some(((2 * k - 1, 0), (-(2 * k - 1), 2), 0)),
        )),
        _ => None,
    }
}

fn build_paper_basis(params: GroupParams, field: FieldSpec, amend: bool) -> PaperBasis {
    let family = PaperFamily::for_case(params, field);
    let n = params.n() as i64;
    let t = Terms::new(params, field);
    let build = |x: Binomial| match x {
        None => t.zero(),
        Some((p, q, tail)) => t.times_b(&t.diff(p, q), tail),
    };

    type Generator = fn(i64) -> Vec<(Binomial, Binomial)>;
    let groups: [(&str, i64, Generator); 4] = match family {
        PaperFamily::Coprime => [
            ("B1", floor_half(n - 1), coprime_b1),
            ("B2", floor_half(n + 1), coprime_b2),
            ("B3", ceil_half(n - 1), coprime_b3),
            ("B4", n, coprime_b4),
        ],
        PaperFamily::Modular => [
            ("B1'", floor_half(n - 1), modular_b1),
            ("B2'", floor_half(n + 1), modular_b2),
            ("B3'", ceil_half(n - 1), modular_b3),
            ("B4'", n, modular_b4),
        ],
    };

    let mut entries = Vec::new();
    for (name, upper, generator) in groups {
        for k in 1..=upper {
            for (slot, printed) in generator(k).into_iter().enumerate() {
                let replacement = amend.then(|| amendment(name, k, slot)).flatten();
                let amended = replacement.is_some();
                let (fa, fb) = replacement.unwrap_or(printed);
                let images = GeneratorImages {
                    f_a: build(fa),
                    f_b: build(fb),
                };
                entries.push(PaperBasisEntry {
                    label: format!("{name}[k={k}].{slot}"),
                    failing_relator: images.first_failing_relator(),
                    images,
                    amended,
                });
            }
        }
    }
    PaperBasis {
        params,
        field,
        family,
        entries,
    }
}

fn coprime_b1(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (Some(((-2 * k, 0), (2 * k, 0), 1)), None),
        (
            Some(((2 * k - 1, 0), (-(2 * k + 1), 0), 1)),
            Some(((2 * k, 0), (-2 * k, 0), 0)),
        ),
        (Some(((-2 * k, 0), (2 * k, 0), 3)), None),
        (
            Some(((2 * k - 1, 0), (-(2 * k + 1), 0), 3)),
            Some(((2 * k, 0), (-2 * k, 0), 2)),
        ),
        (None, Some(((2 * k, 0), (-2 * k, 0), 1))),
        (None, Some(((2 * k, 0), (-2 * k, 0), 3))),
    ]
}

fn coprime_b2(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (
            Some(((2 * k - 2, 0), (-2 * k, 2), 1)),
            Some(((2 * k - 1, 0), (-(2 * k - 1), 2), 0)),
        ),
        (None, Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 1))),
    ]
}

fn coprime_b3(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (
            Some(((-2 * k, 0), (2 * k - 2, 2), 1)),
            Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 0)),
        ),
        (None, Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 1))),
    ]
}

fn coprime_b4(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![(Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 1)), None)]
}

fn modular_b1(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (
            Some(((2 * k - 1, 0), (-(2 * k + 1), 0), 1)),
            Some(((2 * k, 0), (-2 * k, 0), 0)),
        ),
        (
            Some(((2 * k + 1, 0), (-(2 * k - 1), 0), 0)),
            Some(((2 * k, 0), (-2 * k, 0), 1)),
        ),
        (
            Some(((2 * k - 1, 0), (-(2 * k + 1), 0), 3)),
            Some(((2 * k, 0), (-2 * k, 0), 2)),
        ),
        (
            Some(((2 * k + 1, 0), (-(2 * k - 1), 0), 2)),
            Some(((2 * k, 0), (-2 * k, 0), 3)),
        ),
        (Some(((-2 * k, 0), (2 * k, 0), 3)), None),
        (Some(((-2 * k, 0), (2 * k, 0), 1)), None),
        (Some(((-(2 * k - 1), 0), (2 * k + 1, 0), 2)), None),
        (Some(((-(2 * k - 1), 0), (2 * k + 1, 0), 0)), None),
    ]
}

fn modular_b2(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (
            Some(((2 * k - 2, 0), (-2 * k, 1), 2)),
            Some(((2 * k - 1, 0), (-(2 * k - 1), 2), 0)),
        ),
        (
            Some(((2 * k, 0), (-(2 * k - 2), 2), 0)),
            Some(((2 * k - 1, 0), (-(2 * k - 1), 2), 1)),
        ),
    ]
}

fn modular_b3(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (
            Some(((-2 * k, 0), (2 * k - 2, 2), 1)),
            Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 0)),
        ),
        (
            Some(((-(2 * k - 2), 0), (2 * k, 2), 0)),
            Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 1)),
        ),
    ]
}

fn modular_b4(k: i64) -> Vec<(Binomial, Binomial)> {
    vec![
        (Some(((-(2 * k - 1), 0), (2 * k - 1, 2), 1)), None),
        (Some(((-(2 * k - 2), 0), (2 * k, 2), 0)), None),
    ]
}
