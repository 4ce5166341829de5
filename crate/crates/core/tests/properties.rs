//! Basis-independence of computed invariants on random cyclic algebras.

use leibkit::catalog::{self, CyclicSpec};
use leibkit::completeness::is_complete;
use leibkit::derivation::{derivation_basis, is_derivation};
use leibkit::FieldSpec;
use proptest::prelude::*;

const CASES: u32 = 24;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField { p: 5 }), Just(FieldSpec::PrimeField { p: 101 })]
}

fn cyclic() -> impl Strategy<Value = CyclicSpec> {
    (field(), 2usize..=5)
        .prop_flat_map(|(f, n)| (Just(f), prop::collection::vec(-3i64..=3, n - 1)))
        .prop_map(|(f, ks)| CyclicSpec::from_i64(ks.len() + 1, f, &ks).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn invariants_survive_basis_change(spec in cyclic(), seed in 1u64..1000) {
        let a = catalog::make_cyclic(&spec).unwrap();
        let (b, p) = catalog::random_basis_change(&a, seed).unwrap();
        prop_assert!(b.check_identity().is_ok());
        let (da, db) = (derivation_basis(&a), derivation_basis(&b));
        prop_assert_eq!(da.dim(), db.dim());
        prop_assert_eq!(da.dim(), if spec.is_nilpotent() { a.dim() } else { a.dim() - 1 });
        prop_assert_eq!(a.leib_ideal().dim(), b.leib_ideal().dim());
        prop_assert_eq!(a.left_center().dim(), b.left_center().dim());
        prop_assert_eq!(a.is_nilpotent(), b.is_nilpotent());
        let (ca, cb) = (is_complete(&a), is_complete(&b));
        prop_assert_eq!(ca.complete, cb.complete);
        prop_assert!(!ca.complete);
        prop_assert_eq!(ca.quotient_center_dim, cb.quotient_center_dim);
        // Conjugating a derivation of A by P gives one of B.
        let pinv = p.inverse().unwrap();
        for d in da.matrices() {
            let conj = pinv.mul(&d.mul(&p).unwrap()).unwrap();
            prop_assert!(is_derivation(&b, &conj).unwrap());
        }
    }
}
