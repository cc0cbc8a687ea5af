#![allow(dead_code)]

use proptest::prelude::*;
use qutrit_core::exactnum::rational;
use qutrit_core::{ExactComplex, ExactMatrix, ExactScalar, ExactVector, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=8).prop_map(|(n, d)| rational(n, d))
}

pub fn scalar() -> impl Strategy<Value = ExactScalar> {
    (small_rational(), small_rational(), small_rational(), small_rational())
        .prop_map(|(a, b, c, d)| ExactScalar::new(a, b, c, d))
}

/// Mostly zero coordinates, so products stay small.
pub fn sparse_scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        2 => Just(ExactScalar::zero()),
        3 => scalar(),
    ]
}

pub fn complex() -> impl Strategy<Value = ExactComplex> {
    (sparse_scalar(), sparse_scalar()).prop_map(|(re, im)| ExactComplex::new(re, im))
}

pub fn exact_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(complex(), n * n).prop_map(move |data| ExactMatrix::new(n, n, data).unwrap())
}

/// A normalized vector with rational coordinates: the inverse stereographic
/// image of a rational point in ℚ^(2n−1), read as `n` complex amplitudes.
pub fn unit_state(n: usize) -> impl Strategy<Value = ExactVector> {
    prop::collection::vec(small_rational(), 2 * n - 1).prop_map(move |t| {
        let s: Rational = t.iter().map(|x| x * x).sum();
        let one = rational(1, 1);
        let denom = &one + &s;
        let two = rational(2, 1);
        let mut reals: Vec<Rational> = t.iter().map(|x| &two * x / &denom).collect();
        reals.push((&s - &one) / &denom);
        let amps = reals
            .chunks(2)
            .map(|p| {
                ExactComplex::new(
                    ExactScalar::from_rational(p[0].clone()),
                    ExactScalar::from_rational(p[1].clone()),
                )
            })
            .collect();
        ExactVector::new(amps)
    })
}

#[allow(clippy::eq_op)]
pub fn field_axioms_hold(x: &ExactScalar, y: &ExactScalar, z: &ExactScalar) -> bool {
    let zero = ExactScalar::zero();
    let one = ExactScalar::one();
    let mut ok = x + y == y + x
        && x * y == y * x
        && &(x + y) + z == x + &(y + z)
        && &(x * y) * z == x * &(y * z)
        && x * &(y + z) == &(x * y) + &(x * z)
        && x + &zero == *x
        && x * &one == *x
        && (x - x).is_zero()
        && x + &(-x) == zero;
    if !x.is_zero() {
        let inv = x.invert().expect("nonzero");
        ok &= (x * &inv).is_one() && (y / x) * x.clone() == *y;
    } else {
        ok &= x.invert().is_err();
    }
    // exact sign agrees with the float value away from zero
    let xf = x.to_f64();
    if xf.abs() > 1e-9 {
        ok &= x.is_negative() == (xf < 0.0);
    }
    ok && ((x * y).to_f64() - xf * y.to_f64()).abs() <= 1e-9 * (1.0 + (xf * y.to_f64()).abs())
}

pub fn hs_round_trip(m: &ExactMatrix) -> bool {
    qutrit_core::hs_project(m, qutrit_core::Group::Su3).map(|grid| grid.reconstruct() == *m).unwrap_or(false)
}

/// Linearity of both partial traces and preservation of the full trace.
pub fn partial_trace_laws(
    a: &ExactMatrix,
    b: &ExactMatrix,
    alpha: &ExactComplex,
    beta: &ExactComplex,
) -> bool {
    use qutrit_core::Subsystem;
    let dims = (3, 3);
    let combo = a.scale(alpha).add(&b.scale(beta)).unwrap();
    [Subsystem::A, Subsystem::B].into_iter().all(|keep| {
        let lhs = combo.partial_trace(keep, dims).unwrap();
        let rhs = a
            .partial_trace(keep, dims)
            .unwrap()
            .scale(alpha)
            .add(&b.partial_trace(keep, dims).unwrap().scale(beta))
            .unwrap();
        lhs == rhs && a.partial_trace(keep, dims).unwrap().trace() == a.trace()
    })
}

pub fn basis_change_round_trip(v: &ExactVector) -> bool {
    use qutrit_core::states::{from_su3_basis, to_su3_basis, AmplitudeSet, Basis};
    let c = AmplitudeSet::new(Basis::Computational, v.amplitudes().to_vec()).unwrap();
    let b = to_su3_basis(&c).unwrap();
    b.is_normalized() && from_su3_basis(&b).unwrap() == c
}
