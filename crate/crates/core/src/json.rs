//! JSON payloads for algebra elements and derivation pairs.
//!
//! ```json
//! {"n": 1, "char": 0, "terms": [{"i": 1, "j": 0, "c": "1"}, {"i": 1, "j": 2, "c": "-1"}]}
//! {"da": <element>, "db": <element>}
//! ```
//!
//! Scalars are strings: `"num/den"` or `"num"` over `Q`, a decimal residue
//! over `F_p`. Terms are sorted by `(i, j)` and never carry a zero
//! coefficient.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::derivation::{DerivationPair, GeneratorImages};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::GroupParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElementJson {
    pub n: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationPairJson {
    pub da: AlgebraElementJson,
    pub db: AlgebraElementJson,
}

impl From<&AlgebraElement> for AlgebraElementJson {
    fn from(x: &AlgebraElement) -> Self {
        AlgebraElementJson {
            n: x.params().n(),
            characteristic: x.field().characteristic(),
            terms: x
                .terms()
                .map(|(g, c)| TermJson {
                    i: g.i,
                    j: g.j,
                    c: c.encode(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&AlgebraElementJson> for AlgebraElement {
    type Error = Error;

    fn try_from(json: &AlgebraElementJson) -> Result<Self> {
        let params = GroupParams::new(json.n)?;
        let field = FieldSpec::from_characteristic(json.characteristic)?;
        let mut x = AlgebraElement::zero(params, field);
        for t in &json.terms {
            let g = params.checked_element(t.i, t.j)?;
            x.add_term(g, field.parse_scalar(&t.c)?);
        }
        Ok(x)
    }
}

impl From<&GeneratorImages> for DerivationPairJson {
    fn from(f: &GeneratorImages) -> Self {
        DerivationPairJson {
            da: (&f.f_a).into(),
            db: (&f.f_b).into(),
        }
    }
}

impl From<&DerivationPair> for DerivationPairJson {
    fn from(d: &DerivationPair) -> Self {
        d.images().into()
    }
}

impl TryFrom<&DerivationPairJson> for GeneratorImages {
    type Error = Error;

    fn try_from(json: &DerivationPairJson) -> Result<Self> {
        GeneratorImages::new((&json.da).try_into()?, (&json.db).try_into()?)
    }
}

pub fn parse_generator_images(text: &str) -> Result<GeneratorImages> {
    let json: DerivationPairJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    (&json).try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn element_encoding() {
        let p = GroupParams::new(1).unwrap();
        let x = AlgebraElement::from_terms(p, FieldSpec::Rational, [(1, 2, -1), (1, 0, 1)]);
        let json = serde_json::to_string(&AlgebraElementJson::from(&x)).unwrap();
        assert_eq!(
            json,
            r#"{"n":1,"char":0,"terms":[{"i":1,"j":0,"c":"1"},{"i":1,"j":2,"c":"-1"}]}"#
        );
    }

    #[test]
    fn rational_and_residue_scalars() {
        let p = GroupParams::new(2).unwrap();
        let q = FieldSpec::Rational;
        let x =
            AlgebraElement::from_terms(p, q, [(0, 0, 1)]).scale(&q.parse_scalar("3/4").unwrap());
        assert_eq!(AlgebraElementJson::from(&x).terms[0].c, "3/4");
        let f5 = FieldSpec::Prime(5);
        let y = AlgebraElement::from_terms(p, f5, [(0, 0, -1)]);
        assert_eq!(AlgebraElementJson::from(&y).terms[0].c, "4");
    }

    #[test]
    fn rejects_bad_payloads() {
        assert!(parse_generator_images("{").is_err());
        let bad_char = r#"{"da":{"n":1,"char":2,"terms":[]},"db":{"n":1,"char":2,"terms":[]}}"#;
        assert_eq!(
            parse_generator_images(bad_char),
            Err(Error::CharacteristicTwo)
        );
        let bad_term = r#"{"da":{"n":1,"char":0,"terms":[{"i":2,"j":0,"c":"1"}]},"db":{"n":1,"char":0,"terms":[]}}"#;
        assert!(matches!(
            parse_generator_images(bad_term),
            Err(Error::Parse(_))
        ));
        let mixed = r#"{"da":{"n":1,"char":0,"terms":[]},"db":{"n":2,"char":0,"terms":[]}}"#;
        assert!(matches!(
            parse_generator_images(mixed),
            Err(Error::AlgebraMismatch { .. })
        ));
    }

    proptest! {
        #[test]
        fn pair_round_trip(
            n in 1usize..4,
            field in prop_oneof![Just(FieldSpec::Rational), Just(FieldSpec::Prime(3)), Just(FieldSpec::Prime(7))],
            raw in proptest::collection::vec((0i64..24, 0i64..4, -5i64..5), 0..10),
        ) {
            let p = GroupParams::new(n).unwrap();
            let fa = AlgebraElement::from_terms(p, field, raw.iter().copied());
            let fb = AlgebraElement::from_terms(p, field, raw.iter().rev().map(|&(i, j, c)| (i + 1, j, c)));
            let images = GeneratorImages::new(fa, fb).unwrap();
            let text = serde_json::to_string(&DerivationPairJson::from(&images)).unwrap();
            prop_assert_eq!(parse_generator_images(&text).unwrap(), images);
        }
    }
}
