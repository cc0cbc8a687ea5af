mod common;

use common::*;
use proptest::prelude::*;
use qutrit_core::{ExactComplex, ExactScalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert!(field_axioms_hold(&x, &y, &z));
    }

    #[test]
    fn complex_field_axioms(x in complex(), y in complex()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.norm_sqr(), (&x * &x.conj()).re);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.invert().unwrap(), ExactComplex::one());
        }
    }

    #[test]
    fn json_round_trip(x in scalar()) {
        let text = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactScalar>(&text).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hs_projection_round_trip(m in exact_matrix(9)) {
        prop_assert!(hs_round_trip(&m));
    }

    #[test]
    fn partial_trace_is_linear(a in exact_matrix(9), b in exact_matrix(9), alpha in complex(), beta in complex()) {
        prop_assert!(partial_trace_laws(&a, &b, &alpha, &beta));
    }

    #[test]
    fn basis_change_round_trips(v in unit_state(9)) {
        prop_assert!(v.is_normalized());
        prop_assert!(basis_change_round_trip(&v));
    }

    #[test]
    fn hermitian_expectations_are_real(m in exact_matrix(9), v in unit_state(9)) {
        let h = m.add(&m.adjoint()).unwrap();
        let value = v.inner(&h.mat_vec(&v).unwrap()).unwrap();
        prop_assert!(value.is_real());
    }

    #[test]
    fn eigensolver_reconstructs(m in exact_matrix(4)) {
        let h = m.add(&m.adjoint()).unwrap().to_float();
        let eig = qutrit_core::linalg::eig_hermitian(&h).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(&h) < 1e-9);
        prop_assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
    }
}
