use qutrit_core::states::{to_su3_basis, AmplitudeSet, Basis};
use qutrit_core::verify::verify;
use qutrit_core::{qutrit_operator, state, ExactComplex, ExactMatrix, FloatMatrix, Group, Label};

#[test]
fn exact_matrix_round_trip() {
    let m = qutrit_operator().matrix().clone();
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<ExactMatrix>(&text).unwrap(), m);
    // mode is part of the schema
    assert!(serde_json::from_str::<FloatMatrix>(&text).is_err());
}

#[test]
fn float_matrix_round_trip() {
    let m = qutrit_operator().matrix().to_float();
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<FloatMatrix>(&text).unwrap(), m);
}

#[test]
fn amplitude_set_round_trip() {
    let c =
        AmplitudeSet::new(Basis::Computational, state(Label::Psi22).vector.amplitudes().to_vec()).unwrap();
    let b = to_su3_basis(&c).unwrap();
    assert_eq!(b.values[8], ExactComplex::one());
    let text = serde_json::to_string(&b).unwrap();
    assert_eq!(serde_json::from_str::<AmplitudeSet>(&text).unwrap(), b);
}

#[test]
fn verify_report_serializes() {
    let v = serde_json::to_value(verify(Group::Su3).unwrap()).unwrap();
    assert_eq!(v["group"], "su3");
    assert_eq!(v["bounds"]["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["bounds"]["rows"][0]["class"], "2√2");
    assert_eq!(v["projector_coefficients"]["coefficients"][0][0], "psi00");
}
