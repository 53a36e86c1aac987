use proptest::prelude::*;

use grpder_core::derivation::{
    classify, derivation_space_oracle, free_extension, inner_basis, inner_derivation,
    inner_witness, outer_codimension,
};
use grpder_core::{
    AlgebraElement, Classification, DerivationPair, FieldSpec, FreeWord, GeneratorImages,
    GroupElement, GroupParams, Letter, SubgroupSpec, Subspace,
};

fn any_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::Prime(3)),
        Just(FieldSpec::Prime(5)),
        Just(FieldSpec::Prime(7)),
    ]
}

fn element(p: GroupParams, f: FieldSpec) -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec((0i64..48, 0i64..4, -4i64..=4), 0..8)
        .prop_map(move |t| AlgebraElement::from_terms(p, f, t))
}

fn case() -> impl Strategy<Value = (GroupParams, FieldSpec)> {
    (1usize..=4, any_field()).prop_map(|(n, f)| (GroupParams::new(n).unwrap(), f))
}

fn word() -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec(proptest::sample::select(Letter::ALL.to_vec()), 0..=8)
        .prop_map(FreeWord)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_is_associative_and_distributive(
        (x, y, z) in case().prop_flat_map(|(p, f)| (element(p, f), element(p, f), element(p, f)))
    ) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
    }

    #[test]
    fn augmentation_is_a_ring_map(
        (x, y) in case().prop_flat_map(|(p, f)| (element(p, f), element(p, f)))
    ) {
        prop_assert_eq!((&x * &y).augmentation(), &x.augmentation() * &y.augmentation());
        prop_assert_eq!((&x + &y).augmentation(), &x.augmentation() + &y.augmentation());
    }

    #[test]
    fn whole_group_delta_prime_is_augmentation_kernel(
        x in case().prop_flat_map(|(p, f)| element(p, f))
    ) {
        let whole = SubgroupSpec::whole(x.params());
        prop_assert_eq!(x.in_delta_prime(&whole), x.augmentation().is_zero());
    }

    #[test]
    fn cocycle_identity(
        (images, v, w) in case().prop_flat_map(|(p, f)| (element(p, f), element(p, f), word(), word()))
            .prop_map(|(fa, fb, v, w)| (GeneratorImages::new(fa, fb).unwrap(), v, w))
    ) {
        let p = images.params();
        let lhs = free_extension(&images, &v.concat(&w));
        let rhs = &free_extension(&images, &v).right_mul_group(w.evaluate(p))
            + &free_extension(&images, &w).left_mul_group(v.evaluate(p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inner_derivations_satisfy_leibniz_and_have_witnesses(
        (beta, x, y) in case().prop_flat_map(|(p, f)| (element(p, f), element(p, f), element(p, f)))
    ) {
        let d = inner_derivation(&beta);
        prop_assert!(d.images().is_derivation_pair());
        let lhs = d.evaluate(&(&x * &y)).unwrap();
        let rhs = &(&d.evaluate(&x).unwrap() * &y) + &(&x * &d.evaluate(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
        // d_β(x) = xβ - βx on arbitrary elements, not only generators.
        prop_assert_eq!(d.evaluate(&x).unwrap(), x.commutator(&beta).unwrap());

        prop_assert_eq!(classify(&d), Classification::Inner);
        let witness = inner_witness(&d).unwrap().expect("inner");
        prop_assert_eq!(inner_derivation(&witness), d);
    }

    #[test]
    fn evaluation_is_linear_in_the_pair(
        (d1, d2, x, c1, c2) in case().prop_flat_map(|(p, f)| {
            (element(p, f), element(p, f), element(p, f), -3i64..=3, -3i64..=3)
        }).prop_map(|(b1, b2, x, c1, c2)| (inner_derivation(&b1), inner_derivation(&b2), x, c1, c2))
    ) {
        let f = x.field();
        let (s1, s2) = (f.from_i64(c1), f.from_i64(c2));
        let combined = d1.linear_combination(&s1, &d2, &s2).unwrap();
        let lhs = combined.evaluate(&x).unwrap();
        let rhs = &d1.evaluate(&x).unwrap().scale(&s1) + &d2.evaluate(&x).unwrap().scale(&s2);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn inner_span_does_not_depend_on_class_representatives() {
    // Replace each omitted representative with another member of its class.
    for n in 1..=4 {
        let p = GroupParams::new(n).unwrap();
        for f in [FieldSpec::Rational, FieldSpec::Prime(3)] {
            let d = |g: GroupElement| inner_derivation(&AlgebraElement::basis(p, f, g));
            let alternative: Vec<Vec<_>> = p
                .conjugacy_classes()
                .iter()
                .flat_map(|c| {
                    let skip = *c.members.iter().next_back().unwrap();
                    c.members
                        .iter()
                        .copied()
                        .filter(move |&g| g != skip)
                        .map(d)
                        .collect::<Vec<_>>()
                })
                .map(|pair| pair.to_vector())
                .collect();
            let standard: Vec<Vec<_>> = inner_basis(p, f).iter().map(|d| d.to_vector()).collect();
            let a = Subspace::span(f, 16 * n, alternative).unwrap();
            let b = Subspace::span(f, 16 * n, standard).unwrap();
            assert!(a.equals(&b).unwrap(), "n={n} {f}");
        }
    }
}

#[test]
fn oracle_basis_vectors_are_derivations() {
    for (n, c) in [(2, 0), (3, 3), (4, 5)] {
        let p = GroupParams::new(n).unwrap();
        let f = FieldSpec::from_characteristic(c).unwrap();
        for d in derivation_space_oracle(p, f).basis() {
            assert!(d.images().is_derivation_pair());
        }
    }
}

#[test]
fn outer_derivations_have_no_witness() {
    let p = GroupParams::new(3).unwrap();
    let f = FieldSpec::Prime(3);
    assert_eq!(outer_codimension(p, f), 5);
    let outer: Vec<DerivationPair> = derivation_space_oracle(p, f)
        .basis()
        .into_iter()
        .filter(|d| classify(d) == Classification::Outer)
        .collect();
    assert!(!outer.is_empty());
    for d in outer {
        assert_eq!(inner_witness(&d).unwrap(), None);
    }
}

#[test]
fn non_derivations_are_rejected() {
    let p = GroupParams::new(2).unwrap();
    let f = FieldSpec::Rational;
    let images =
        GeneratorImages::new(AlgebraElement::one(p, f), AlgebraElement::zero(p, f)).unwrap();
    assert!(!images.is_derivation_pair());
    assert!(DerivationPair::new(images).is_err());
}
