//! The CHSH operator on two qubits and the qutrit correlation operator, their
//! projector and generator decompositions, and the bound classification.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar};
use crate::generators::{hs_project, pauli, CoefficientGrid, Group};
use crate::linalg::{eig_hermitian, gram_matrix, ExactMatrix, ExactVector};
use crate::reference;
use crate::states::{state, Label, LabeledState};

/// The four single-qubit observables of the CHSH expression.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectorSetting {
    pub q: ExactMatrix,
    pub r: ExactMatrix,
    pub s: ExactMatrix,
    pub t: ExactMatrix,
}

impl Default for DetectorSetting {
    /// `Q = σ₃`, `R = σ₁`, `S = −(σ₃+σ₁)/√2`, `T = (σ₃−σ₁)/√2`.
    fn default() -> Self {
        let s3 = pauli(3).expect("σ3");
        let s1 = pauli(1).expect("σ1");
        let inv_r2 = ExactScalar::sqrt2().invert().expect("nonzero");
        Self {
            s: s3.add(&s1).expect("2x2").neg().scale_real(&inv_r2),
            t: s3.sub(&s1).expect("2x2").scale_real(&inv_r2),
            q: s3,
            r: s1,
        }
    }
}

/// A Hermitian operator on `d⊗d` together with the group whose generators
/// expand it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationOperator {
    matrix: ExactMatrix,
    group: Group,
}

impl CorrelationOperator {
    pub fn new(matrix: ExactMatrix, group: Group) -> Result<Self> {
        let n = group.dim() * group.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{group} operator must be {n}x{n}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian(matrix.to_float().hermitian_deviation()));
        }
        Ok(Self { matrix, group })
    }

    pub fn zero(group: Group) -> Self {
        let n = group.dim() * group.dim();
        Self { matrix: ExactMatrix::zeros(n, n), group }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_traceless(&self) -> bool {
        self.matrix.trace().is_zero()
    }

    /// Real symmetric and traceless, as both constructed operators are.
    pub fn check_invariants(&self) -> bool {
        self.matrix.is_real_symmetric() && self.is_traceless()
    }

    /// Float spectrum, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_hermitian(&self.matrix.to_float())?.values)
    }
}

fn check_hermitian(m: &ExactMatrix) -> Result<()> {
    if m.rows() != 2 || !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "detector settings are 2x2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_hermitian() {
        return Err(Error::NotHermitian(m.to_float().hermitian_deviation()));
    }
    Ok(())
}

/// `Q⊗S + R⊗S + R⊗T − Q⊗T`.
pub fn chsh_operator(setting: &DetectorSetting) -> Result<CorrelationOperator> {
    for m in [&setting.q, &setting.r, &setting.s, &setting.t] {
        check_hermitian(m)?;
    }
    let DetectorSetting { q, r, s, t } = setting;
    let m = q.kron(s).add(&r.kron(s))?.add(&r.kron(t))?.sub(&q.kron(t))?;
    CorrelationOperator::new(m, Group::Su2)
}

/// `√2(P₁₁ − P₂₂) + 2√2(P₀₀ + P₁₀⁻ − P₂₁⁻ − P₂₀⁻)` with `Pₖ = |ψₖ⟩⟨ψₖ|`.
pub fn qutrit_operator() -> CorrelationOperator {
    let p = |l: Label| state(l).projector();
    let sum = |plus: &[Label], minus: &[Label]| {
        let mut acc = ExactMatrix::zeros(9, 9);
        for &l in plus {
            acc = acc.add(&p(l)).expect("9x9");
        }
        for &l in minus {
            acc = acc.sub(&p(l)).expect("9x9");
        }
        acc
    };
    let r2 = ExactScalar::sqrt2();
    let inner = sum(&[Label::Psi11], &[Label::Psi22]).scale_real(&r2);
    let outer = sum(&[Label::Psi00, Label::Psi10Minus], &[Label::Psi21Minus, Label::Psi20Minus])
        .scale_real(&(&r2 * &ExactScalar::from_int(2)));
    let m = inner.add(&outer).expect("9x9");
    CorrelationOperator::new(m, Group::Su3).expect("sum of projectors is Hermitian")
}

/// The default operator for a group.
pub fn operator_for(group: Group) -> CorrelationOperator {
    match group {
        Group::Su2 => chsh_operator(&DetectorSetting::default()).expect("default settings are Hermitian"),
        Group::Su3 => qutrit_operator(),
    }
}

/// `⟨s|C|s⟩`, which must be real.
pub fn expectation(c: &CorrelationOperator, s: &ExactVector) -> Result<ExactScalar> {
    let value = s.inner(&c.matrix.mat_vec(s)?)?;
    if !value.is_real() {
        return Err(Error::NonRealExpectation(value.to_string()));
    }
    Ok(value.re)
}

/// Coefficients `aᵢ` of `C = Σ aᵢ|ψᵢ⟩⟨ψᵢ|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectorDecomposition {
    pub coefficients: Vec<(Label, ExactScalar)>,
}

impl ProjectorDecomposition {
    pub fn get(&self, label: Label) -> Option<&ExactScalar> {
        self.coefficients.iter().find(|(l, _)| *l == label).map(|(_, a)| a)
    }

    pub fn reconstruct(&self) -> ExactMatrix {
        let n = self.coefficients.first().map(|(l, _)| state(*l).vector.dim()).unwrap_or(0);
        let mut acc = ExactMatrix::zeros(n, n);
        for (l, a) in &self.coefficients {
            if !a.is_zero() {
                acc = acc.add(&state(*l).projector().scale_real(a)).expect("same dimension");
            }
        }
        acc
    }
}

/// Solves `C = Σ aᵢ|ψᵢ⟩⟨ψᵢ|` by projection, after checking that the basis is
/// orthonormal, complete and diagonalizes `C`.
pub fn solve_projector_coefficients(
    c: &CorrelationOperator,
    basis: &[LabeledState],
) -> Result<ProjectorDecomposition> {
    let n = c.dim();
    if basis.len() != n {
        return Err(Error::InvalidBasis(format!("{} vectors for dimension {n}", basis.len())));
    }
    if let Some(b) = basis.iter().find(|b| b.vector.dim() != n) {
        return Err(Error::DimensionMismatch(format!(
            "{} has dimension {}, operator has {n}",
            b.label,
            b.vector.dim()
        )));
    }
    let vectors: Vec<ExactVector> = basis.iter().map(|b| b.vector.clone()).collect();
    if gram_matrix(&vectors)? != ExactMatrix::identity(n) {
        return Err(Error::InvalidBasis("Gram matrix is not the identity".into()));
    }
    let images = vectors.iter().map(|v| c.matrix.mat_vec(v)).collect::<Result<Vec<_>>>()?;
    let mut coefficients = Vec::with_capacity(n);
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let value = bi.vector.inner(&images[j])?;
            if i == j {
                if !value.is_real() {
                    return Err(Error::NonRealExpectation(value.to_string()));
                }
                coefficients.push((bi.label, value.re));
            } else if !value.is_zero() {
                return Err(Error::NotDiagonalizedByBasis {
                    row: bi.label.to_string(),
                    col: bj.label.to_string(),
                    value: value.to_string(),
                });
            }
        }
    }
    Ok(ProjectorDecomposition { coefficients })
}

/// Exact check `C|ψ⟩ = a|ψ⟩`; returns `a` when it holds.
pub fn exact_eigenvalue(c: &CorrelationOperator, s: &ExactVector) -> Result<Option<ExactScalar>> {
    let image = c.matrix.mat_vec(s)?;
    let a = expectation(c, s)?;
    Ok((image == s.scale(&ExactComplex::real(a.clone()))).then_some(a))
}

/// Tier of an expectation value by magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundClass {
    #[serde(rename = "2√2")]
    TwoSqrt2,
    #[serde(rename = "√2")]
    Sqrt2,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = ">2√2")]
    Exceeds,
}

impl BoundClass {
    pub fn bound(self) -> Option<ExactScalar> {
        match self {
            BoundClass::TwoSqrt2 => Some(&ExactScalar::sqrt2() * &ExactScalar::from_int(2)),
            BoundClass::Sqrt2 => Some(ExactScalar::sqrt2()),
            BoundClass::Zero => Some(ExactScalar::zero()),
            BoundClass::Exceeds => None,
        }
    }

    /// Smallest tier whose bound is at least `|value|`.
    pub fn of(value: &ExactScalar) -> Self {
        let a = value.abs();
        if a.is_zero() {
            BoundClass::Zero
        } else if a <= ExactScalar::sqrt2() {
            BoundClass::Sqrt2
        } else if a <= &ExactScalar::sqrt2() * &ExactScalar::from_int(2) {
            BoundClass::TwoSqrt2
        } else {
            BoundClass::Exceeds
        }
    }
}

impl fmt::Display for BoundClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundClass::TwoSqrt2 => "2√2",
            BoundClass::Sqrt2 => "√2",
            BoundClass::Zero => "0",
            BoundClass::Exceeds => ">2√2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub label: Label,
    pub expectation: ExactScalar,
    pub class: BoundClass,
    /// `|⟨C⟩|` equals the class bound exactly.
    pub saturated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn class_members(&self, class: BoundClass) -> Vec<Label> {
        self.rows.iter().filter(|r| r.class == class).map(|r| r.label).collect()
    }

    /// `max |⟨C⟩|` over the given labels (zero when none match).
    pub fn max_abs(&self, labels: &[Label]) -> ExactScalar {
        self.rows
            .iter()
            .filter(|r| labels.contains(&r.label))
            .map(|r| r.expectation.abs())
            .max()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn any_exceeds(&self) -> bool {
        self.rows.iter().any(|r| r.class == BoundClass::Exceeds)
    }
}

pub fn classify_bounds(c: &CorrelationOperator, states: &[LabeledState]) -> Result<BoundReport> {
    let rows = states
        .iter()
        .map(|s| {
            let expectation = expectation(c, &s.vector)?;
            let class = BoundClass::of(&expectation);
            let saturated = class.bound().is_some_and(|b| b == expectation.abs());
            Ok(BoundRow { label: s.label, expectation, class, saturated })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport { rows })
}

/// One computed coefficient next to a printed one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientComparison {
    pub source: &'static str,
    pub l: usize,
    pub m: usize,
    pub printed: ExactScalar,
    pub computed: ExactScalar,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorDecomposition {
    pub grid: CoefficientGrid,
    pub comparison: Vec<CoefficientComparison>,
}

impl GeneratorDecomposition {
    pub fn mismatches(&self) -> Vec<&CoefficientComparison> {
        self.comparison.iter().filter(|c| !c.matches).collect()
    }
}

/// Hilbert–Schmidt coefficients of `C`, compared term by term against every
/// printed expansion for its group.
pub fn generator_decomposition(c: &CorrelationOperator) -> Result<GeneratorDecomposition> {
    let grid = hs_project(&c.matrix, c.group)?;
    let mut comparison = Vec::new();
    for printed in reference::printed_expansions(c.group) {
        let mut keys: Vec<(usize, usize)> = printed.terms.iter().map(|(l, m, _)| (*l, *m)).collect();
        for (l, m, _) in grid.nonzero() {
            if !keys.contains(&(l, m)) {
                keys.push((l, m));
            }
        }
        keys.sort_unstable();
        for (l, m) in keys {
            let computed = grid.get(l, m);
            if !computed.is_real() {
                return Err(Error::NonRealExpectation(computed.to_string()));
            }
            let p = printed.coefficient(l, m);
            comparison.push(CoefficientComparison {
                source: printed.source,
                l,
                m,
                matches: p == computed.re,
                printed: p,
                computed: computed.re.clone(),
            });
        }
    }
    Ok(GeneratorDecomposition { grid, comparison })
}

/// The built operator against the stored printed literal.
pub fn matches_literal(c: &CorrelationOperator) -> bool {
    c.matrix == *reference::operator_literal(c.group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Radical;
    use crate::states::{states, BELL_LABELS, QUTRIT_LABELS};

    fn r2(k: i64) -> ExactScalar {
        ExactScalar::radical(k, 1, Radical::Sqrt2)
    }

    #[test]
    fn default_chsh_matches_literal() {
        let c = chsh_operator(&DetectorSetting::default()).unwrap();
        assert!(matches_literal(&c));
        assert!(c.check_invariants());
        assert_eq!(*c.matrix().get(0, 0), ExactComplex::real(r2(-1)));
        assert_eq!(*c.matrix().get(0, 3), ExactComplex::real(r2(-1)));
        assert_eq!(*c.matrix().get(1, 2), ExactComplex::real(r2(-1)));
        assert_eq!(*c.matrix().get(1, 1), ExactComplex::real(r2(1)));
    }

    #[test]
    fn degenerate_settings() {
        let d = DetectorSetting::default();
        let setting = DetectorSetting { q: d.r.clone(), r: d.r.clone(), s: d.s.clone(), t: d.s.clone() };
        let c = chsh_operator(&setting).unwrap();
        assert_eq!(*c.matrix(), d.r.kron(&d.s).scale(&ExactComplex::from_int(2)));
    }

    #[test]
    fn non_hermitian_setting_rejected() {
        let setting =
            DetectorSetting { q: pauli(2).unwrap().scale(&ExactComplex::i()), ..Default::default() };
        assert!(matches!(chsh_operator(&setting), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn qutrit_operator_matches_literal() {
        let c = qutrit_operator();
        assert!(matches_literal(&c));
        assert!(c.check_invariants());
        assert_eq!(*c.matrix().get(0, 4), ExactComplex::real(r2(1)));
        assert_eq!(*c.matrix().get(1, 3), ExactComplex::real(r2(-1)));
        assert!(c.matrix().trace().is_zero());
    }

    #[test]
    fn bell_coefficients() {
        let c = operator_for(Group::Su2);
        let dec = solve_projector_coefficients(&c, &states(Group::Su2)).unwrap();
        assert_eq!(dec.get(Label::PhiPlus), Some(&r2(-2)));
        assert_eq!(dec.get(Label::PsiMinus), Some(&r2(2)));
        assert!(dec.get(Label::PhiMinus).unwrap().is_zero());
        assert!(dec.get(Label::PsiPlus).unwrap().is_zero());
        assert_eq!(dec.reconstruct(), *c.matrix());
    }

    #[test]
    fn qutrit_coefficients_match_printed() {
        let c = qutrit_operator();
        let dec = solve_projector_coefficients(&c, &states(Group::Su3)).unwrap();
        for (label, printed) in reference::projector_coefficients(Group::Su3) {
            assert_eq!(dec.get(label), Some(&printed), "{label}");
        }
        assert_eq!(dec.reconstruct(), *c.matrix());
    }

    #[test]
    fn identity_resolves_to_ones() {
        let c = CorrelationOperator::new(ExactMatrix::identity(4), Group::Su2).unwrap();
        let dec = solve_projector_coefficients(&c, &states(Group::Su2)).unwrap();
        assert!(dec.coefficients.iter().all(|(_, a)| a.is_one()));
    }

    #[test]
    fn wrong_basis_rejected() {
        let c = operator_for(Group::Su2);
        let basis: Vec<LabeledState> = states(Group::Su2)
            .into_iter()
            .map(|mut s| {
                // rotate into the computational basis
                let k = BELL_LABELS.iter().position(|&l| l == s.label).unwrap();
                s.vector = ExactVector::basis(4, k);
                s
            })
            .collect();
        assert!(matches!(
            solve_projector_coefficients(&c, &basis),
            Err(Error::NotDiagonalizedByBasis { .. })
        ));
        let short = &states(Group::Su2)[..3];
        assert!(matches!(solve_projector_coefficients(&c, short), Err(Error::InvalidBasis(_))));
        let mut dup = states(Group::Su2);
        dup[1] = dup[0].clone();
        assert!(matches!(solve_projector_coefficients(&c, &dup), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn expectations() {
        let c = qutrit_operator();
        assert_eq!(expectation(&c, &state(Label::Psi11).vector).unwrap(), r2(1));
        assert!(expectation(&c, &state(Label::Psi10Plus).vector).unwrap().is_zero());
        assert_eq!(expectation(&c, &state(Label::Psi20Minus).vector).unwrap(), r2(-2));
        let chsh = operator_for(Group::Su2);
        assert_eq!(expectation(&chsh, &state(Label::PhiPlus).vector).unwrap(), r2(-2));
        assert!(matches!(expectation(&c, &state(Label::PhiPlus).vector), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn states_are_exact_eigenvectors() {
        for g in [Group::Su2, Group::Su3] {
            let c = operator_for(g);
            for s in states(g) {
                assert!(exact_eigenvalue(&c, &s.vector).unwrap().is_some(), "{}", s.label);
            }
        }
        let c = qutrit_operator();
        assert_eq!(exact_eigenvalue(&c, &ExactVector::basis(9, 1)).unwrap(), None);
    }

    #[test]
    fn qutrit_spectrum() {
        let mut values = qutrit_operator().eigenvalues().unwrap();
        let r2 = 2f64.sqrt();
        let mut expected = vec![2.0 * r2, 2.0 * r2, r2, 0.0, 0.0, 0.0, -r2, -2.0 * r2, -2.0 * r2];
        values.sort_by(f64::total_cmp);
        expected.sort_by(f64::total_cmp);
        for (a, b) in values.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn qutrit_classes() {
        let report = classify_bounds(&qutrit_operator(), &states(Group::Su3)).unwrap();
        let mut top = report.class_members(BoundClass::TwoSqrt2);
        top.sort();
        let mut expected = vec![Label::Psi00, Label::Psi10Minus, Label::Psi21Minus, Label::Psi20Minus];
        expected.sort();
        assert_eq!(top, expected);
        assert_eq!(report.class_members(BoundClass::Sqrt2), vec![Label::Psi11, Label::Psi22]);
        assert_eq!(
            report.class_members(BoundClass::Zero),
            vec![Label::Psi21Plus, Label::Psi20Plus, Label::Psi10Plus]
        );
        assert!(report.rows.iter().all(|r| r.saturated));
        assert!(!report.any_exceeds());
        assert_eq!(report.max_abs(&QUTRIT_LABELS), r2(2));
        assert_eq!(report.max_abs(&[Label::Psi11, Label::Psi22]), r2(1));
    }

    #[test]
    fn bell_and_zero_classes() {
        let report = classify_bounds(&operator_for(Group::Su2), &states(Group::Su2)).unwrap();
        assert_eq!(report.class_members(BoundClass::TwoSqrt2), vec![Label::PhiPlus, Label::PsiMinus]);
        assert_eq!(report.class_members(BoundClass::Zero), vec![Label::PsiPlus, Label::PhiMinus]);
        let zero = classify_bounds(&CorrelationOperator::zero(Group::Su3), &states(Group::Su3)).unwrap();
        assert_eq!(zero.class_members(BoundClass::Zero).len(), 9);
    }

    #[test]
    fn bound_class_edges() {
        assert_eq!(BoundClass::of(&ExactScalar::one()), BoundClass::Sqrt2);
        assert_eq!(BoundClass::of(&ExactScalar::from_int(2)), BoundClass::TwoSqrt2);
        assert_eq!(BoundClass::of(&ExactScalar::from_int(-3)), BoundClass::Exceeds);
    }

    #[test]
    fn generator_comparison_flags_restated_term() {
        let dec = generator_decomposition(&qutrit_operator()).unwrap();
        assert_eq!(dec.grid.nonzero().len(), 12);
        assert_eq!(dec.grid.reconstruct(), *qutrit_operator().matrix());
        let bad: Vec<_> = dec.mismatches().iter().map(|c| (c.source, c.l, c.m)).collect();
        assert_eq!(bad.len(), 2);
        assert!(bad.iter().all(|(s, _, _)| s.contains("restated")));
        assert!(bad.iter().any(|&(_, l, m)| (l, m) == (0, 3)));
        let chsh = generator_decomposition(&operator_for(Group::Su2)).unwrap();
        assert!(chsh.mismatches().is_empty());
        assert_eq!(chsh.grid.nonzero().len(), 2);
    }
}
