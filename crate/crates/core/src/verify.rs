//! Per-case verification of the closed-form classification against exact
//! computation, and the JSON report built from it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::anticentralizer::{explicit_basis, explicit_basis_defects, AntiCentralizerTarget};
use crate::derivation::{
    amended_paper_basis, classify_against, derivation_space_oracle, inner_span, paper_basis,
    Classification, PaperFamily,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::{GroupElement, GroupParams};
use crate::linalg::Subspace;

/// One `(n, characteristic)` pair to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseSpec {
    pub params: GroupParams,
    pub field: FieldSpec,
}

impl CaseSpec {
    pub fn new(n: usize, characteristic: u64, max_n: usize) -> Result<Self> {
        if n > max_n {
            return Err(Error::Parse(format!(
                "n = {n} exceeds the configured bound {max_n}"
            )));
        }
        Ok(CaseSpec {
            params: GroupParams::new(n)?,
            field: FieldSpec::from_characteristic(characteristic)?,
        })
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn family(&self) -> PaperFamily {
        PaperFamily::for_case(self.params, self.field)
    }

    /// `8n - #classes`: `6(n-1)` for even `n`, `3(2n-1)` for odd `n`.
    pub fn expected_inner_dim(&self) -> usize {
        let n = self.n();
        if n % 2 == 0 {
            6 * (n - 1)
        } else {
            3 * (2 * n - 1)
        }
    }

    pub fn expected_derivation_dim(&self) -> usize {
        self.family().expected_dim(self.params)
    }

    pub fn expected_outer_codimension(&self) -> usize {
        self.expected_derivation_dim() - self.expected_inner_dim()
    }
}

/// Row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub n: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub dim_der_oracle: usize,
    pub dim_inner: usize,
    pub dim_outer_complement: usize,
    pub closed_form_expected: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn dims_row(case: CaseSpec) -> DimsRow {
    let oracle = derivation_space_oracle(case.params, case.field).dim();
    let inner = inner_span(case.params, case.field).dim();
    let expected = case.expected_derivation_dim();
    DimsRow {
        n: case.n(),
        characteristic: case.characteristic(),
        dim_der_oracle: oracle,
        dim_inner: inner,
        dim_outer_complement: oracle - inner,
        closed_form_expected: expected,
        matches: oracle == expected && inner == case.expected_inner_dim(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedVector {
    pub label: String,
    pub relator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiCentralizerChecks {
    pub b_basis_spans_kernel: bool,
    pub a_inv_b_basis_spans_kernel: bool,
    pub b_equals_b_inverse: bool,
    pub ba_equals_b_inverse_a: bool,
    /// `C̄(ba) = C̄(b^-1 a) = C̄(a^-1 b)`
    pub anti_centralizers_coincide: bool,
    pub basis_defects: Vec<String>,
}

impl AntiCentralizerChecks {
    pub fn ok(&self) -> bool {
        self.b_basis_spans_kernel
            && self.a_inv_b_basis_spans_kernel
            && self.b_equals_b_inverse
            && self.ba_equals_b_inverse_a
            && self.basis_defects.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSummary {
    pub inner: usize,
    pub outer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub n: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub family: String,

    pub class_count: usize,
    pub lemma26_ok: bool,

    pub lemma28: AntiCentralizerChecks,
    pub lemma28_ok: bool,

    pub dim_inner: usize,
    pub expected_dim_inner: usize,
    pub dim_oracle: usize,
    pub expected_dim_oracle: usize,
    pub outer_codimension: usize,
    pub expected_outer_codimension: usize,
    pub inner_equals_oracle: bool,

    pub dim_paper_basis: usize,
    pub paper_basis_span_dim: usize,
    pub paper_basis_all_valid: bool,
    pub failed_vectors: Vec<FailedVector>,
    pub redundant_vectors: Vec<String>,
    pub paper_basis_span_equals_oracle: bool,
    pub amended_vectors: Vec<String>,
    pub amended_basis_span_equals_oracle: bool,

    pub classification_summary: ClassificationSummary,
    pub classification_ok: bool,

    pub pass: bool,
}

impl CaseReport {
    /// Verbatim closed-form basis is exactly a basis of the oracle space.
    pub fn paper_basis_exact(&self) -> bool {
        self.paper_basis_all_valid
            && self.redundant_vectors.is_empty()
            && self.paper_basis_span_equals_oracle
    }

    /// Human-readable misprint findings for the verbatim basis.
    pub fn findings(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .failed_vectors
            .iter()
            .map(|f| format!("{} fails the {} relator", f.label, f.relator))
            .collect();
        out.extend(
            self.redundant_vectors
                .iter()
                .map(|l| format!("{l} is in the span of earlier entries")),
        );
        out
    }
}

fn anti_centralizer_checks(params: GroupParams, field: FieldSpec) -> AntiCentralizerChecks {
    let kernel = |g: GroupElement| AlgebraElement::basis(params, field, g).anti_centralizer();
    let (a, b) = (params.a(), params.b());
    let span = |which| {
        Subspace::span(
            field,
            params.order(),
            explicit_basis(which, params, field)
                .iter()
                .map(AlgebraElement::to_vector)
                .collect(),
        )
        .expect("length 8n")
    };
    let eq = |x: &Subspace, y: &Subspace| x.equals(y).expect("same ambient space");

    let c_b = kernel(b);
    let c_a_inv_b = kernel(params.multiply(params.inverse(a), b));
    let c_ba = kernel(params.multiply(b, a));
    let c_b_inv_a = kernel(params.multiply(params.inverse(b), a));
    let mut defects = Vec::new();
    for which in [AntiCentralizerTarget::B, AntiCentralizerTarget::AInvB] {
        defects.extend(
            explicit_basis_defects(which, params, field)
                .into_iter()
                .map(|k| format!("{which}[{k}]")),
        );
    }
    AntiCentralizerChecks {
        b_basis_spans_kernel: eq(&span(AntiCentralizerTarget::B), &c_b),
        a_inv_b_basis_spans_kernel: eq(&span(AntiCentralizerTarget::AInvB), &c_a_inv_b),
        b_equals_b_inverse: eq(&c_b, &kernel(params.inverse(b))),
        ba_equals_b_inverse_a: eq(&c_ba, &c_b_inv_a),
        anti_centralizers_coincide: eq(&c_ba, &c_b_inv_a) && eq(&c_b_inv_a, &c_a_inv_b),
        basis_defects: defects,
    }
}

pub fn verify_case(case: CaseSpec) -> CaseReport {
    let CaseSpec { params, field } = case;

    let classes = params.conjugacy_classes();
    let mut computed: Vec<_> = classes.iter().map(|c| c.members.clone()).collect();
    let mut listed = params.listed_conjugacy_classes();
    computed.sort();
    listed.sort();
    let lemma26_ok = classes.len() == params.expected_class_count() && computed == listed;

    let lemma28 = anti_centralizer_checks(params, field);
    let lemma28_ok = lemma28.ok();

    let oracle = derivation_space_oracle(params, field);
    let inner = inner_span(params, field);
    let inner_equals_oracle = inner.equals(&oracle.space).expect("16n");

    let verbatim = paper_basis(params, field);
    let verbatim_span = verbatim.span();
    let amended = amended_paper_basis(params, field);
    let amended_span = amended.span();
    let amended_exact = amended.all_valid()
        && amended_span.dim() == amended.entries.len()
        && amended_span.equals(&oracle.space).expect("16n");

    let (mut n_inner, mut n_outer) = (0, 0);
    for d in amended.derivations() {
        match classify_against(&inner, &d) {
            Classification::Inner => n_inner += 1,
            Classification::Outer => n_outer += 1,
        }
    }
    let classification_ok = match case.family() {
        PaperFamily::Coprime => n_outer == 0 && inner_equals_oracle,
        PaperFamily::Modular => n_outer > 0 && !inner_equals_oracle && inner.dim() < oracle.dim(),
    };

    let dims_ok = inner.dim() == case.expected_inner_dim()
        && oracle.dim() == case.expected_derivation_dim()
        && verbatim.entries.len() == oracle.dim()
        && oracle.space.contains(&inner).expect("16n");

    let pass = lemma26_ok && lemma28_ok && dims_ok && amended_exact && classification_ok;

    CaseReport {
        n: case.n(),
        characteristic: case.characteristic(),
        family: match case.family() {
            PaperFamily::Coprime => "coprime".into(),
            PaperFamily::Modular => "modular".into(),
        },
        class_count: classes.len(),
        lemma26_ok,
        lemma28,
        lemma28_ok,
        dim_inner: inner.dim(),
        expected_dim_inner: case.expected_inner_dim(),
        dim_oracle: oracle.dim(),
        expected_dim_oracle: case.expected_derivation_dim(),
        outer_codimension: oracle.dim() - inner.dim(),
        expected_outer_codimension: case.expected_outer_codimension(),
        inner_equals_oracle,
        dim_paper_basis: verbatim.entries.len(),
        paper_basis_span_dim: verbatim_span.dim(),
        paper_basis_all_valid: verbatim.all_valid(),
        failed_vectors: verbatim
            .entries
            .iter()
            .filter_map(|e| {
                e.failing_relator.map(|r| FailedVector {
                    label: e.label.clone(),
                    relator: r.to_string(),
                })
            })
            .collect(),
        redundant_vectors: verbatim.redundant_entries(),
        paper_basis_span_equals_oracle: verbatim_span.equals(&oracle.space).expect("16n"),
        amended_vectors: amended
            .entries
            .iter()
            .filter(|e| e.amended)
            .map(|e| e.label.clone())
            .collect(),
        amended_basis_span_equals_oracle: amended_exact,
        classification_summary: ClassificationSummary {
            inner: n_inner,
            outer: n_outer,
        },
        classification_ok,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cases: Vec<CaseReport>,
    pub pass: bool,
}

/// Verifies every case, in parallel; the report keeps the input order.
pub fn verify_cases(cases: &[CaseSpec]) -> VerificationReport {
    let cases: Vec<CaseReport> = cases.par_iter().map(|&c| verify_case(c)).collect();
    let pass = cases.iter().all(|c| c.pass);
    VerificationReport { cases, pass }
}
