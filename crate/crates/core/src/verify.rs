//! Full verification report for one correlation operator.

use serde::Serialize;

use crate::correlations::{
    classify_bounds, exact_eigenvalue, expectation, generator_decomposition, matches_literal, operator_for,
    solve_projector_coefficients, BoundReport, CoefficientComparison, ProjectorDecomposition,
};
use crate::errata::{errata, Erratum};
use crate::error::Result;
use crate::exactnum::ExactScalar;
use crate::generators::Group;
use crate::linalg::{gram_matrix, ExactMatrix, ExactVector};
use crate::reference;
use crate::states::{states, Label};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenRow {
    pub label: Label,
    /// Present when `C|ψ⟩ = a|ψ⟩` holds exactly.
    pub eigenvalue: Option<ExactScalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorTerm {
    pub l: usize,
    pub m: usize,
    pub value: ExactScalar,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub group: Group,
    pub operator: ExactMatrix,
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<EigenRow>,
    pub projector_coefficients: ProjectorDecomposition,
    pub generator_coefficients: Vec<GeneratorTerm>,
    pub comparison: Vec<CoefficientComparison>,
    pub bounds: BoundReport,
    pub errata: Vec<Erratum>,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name, passed, detail: detail.into() }
}

fn sorted_spectrum(group: Group) -> Vec<f64> {
    let r2 = 2f64.sqrt();
    let mut v = match group {
        Group::Su2 => vec![2.0 * r2, 0.0, 0.0, -2.0 * r2],
        Group::Su3 => vec![2.0 * r2, 2.0 * r2, r2, 0.0, 0.0, 0.0, -r2, -2.0 * r2, -2.0 * r2],
    };
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Builds the operator for `group` and checks every exact identity about it.
pub fn verify(group: Group) -> Result<VerifyReport> {
    let c = operator_for(group);
    let basis = states(group);
    let mut checks = Vec::new();

    checks.push(check(
        "operator equals printed literal",
        matches_literal(&c),
        format!("{0}x{0} exact comparison", c.dim()),
    ));
    checks.push(check(
        "operator is real symmetric and traceless",
        c.check_invariants(),
        format!("trace {}", c.matrix().trace()),
    ));

    let vectors: Vec<ExactVector> = basis.iter().map(|s| s.vector.clone()).collect();
    checks.push(check(
        "basis is orthonormal",
        gram_matrix(&vectors)? == ExactMatrix::identity(c.dim()),
        "Gram matrix against identity",
    ));

    let eigenvalues = c.eigenvalues()?;
    let expected = sorted_spectrum(group);
    let spectrum_dev = eigenvalues.iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    checks.push(check("float spectrum", spectrum_dev < 1e-10, format!("max deviation {spectrum_dev:e}")));

    let eigenvectors = basis
        .iter()
        .map(|s| Ok(EigenRow { label: s.label, eigenvalue: exact_eigenvalue(&c, &s.vector)? }))
        .collect::<Result<Vec<_>>>()?;
    let not_eigen: Vec<String> =
        eigenvectors.iter().filter(|r| r.eigenvalue.is_none()).map(|r| r.label.to_string()).collect();
    checks.push(check(
        "every basis state is an exact eigenvector",
        not_eigen.is_empty(),
        not_eigen.join(", "),
    ));

    let projector_coefficients = solve_projector_coefficients(&c, &basis)?;
    checks.push(check(
        "projector decomposition reconstructs",
        projector_coefficients.reconstruct() == *c.matrix(),
        "Σ aᵢ|ψᵢ⟩⟨ψᵢ| against operator",
    ));
    let wrong_a: Vec<String> = reference::projector_coefficients(group)
        .into_iter()
        .filter(|(l, a)| projector_coefficients.get(*l) != Some(a))
        .map(|(l, a)| format!("{l}: printed {a}"))
        .collect();
    checks.push(check("projector coefficients match printed values", wrong_a.is_empty(), wrong_a.join("; ")));

    let mut wrong_e = Vec::new();
    for (l, printed) in reference::expectation_table(group) {
        let got = expectation(&c, &crate::states::state(l).vector)?;
        if got != printed {
            wrong_e.push(format!("{l}: printed {printed}, computed {got}"));
        }
    }
    checks.push(check("expectation table matches printed values", wrong_e.is_empty(), wrong_e.join("; ")));

    let decomposition = generator_decomposition(&c)?;
    checks.push(check(
        "generator expansion reconstructs",
        decomposition.grid.reconstruct() == *c.matrix(),
        format!("{} nonzero terms", decomposition.grid.nonzero().len()),
    ));
    // at least one printed expansion must agree with the projection everywhere
    let sources: Vec<&str> = reference::printed_expansions(group).iter().map(|p| p.source).collect();
    let agreeing: Vec<&str> = sources
        .iter()
        .copied()
        .filter(|s| decomposition.comparison.iter().all(|c| c.source != *s || c.matches))
        .collect();
    checks.push(check(
        "a printed generator expansion agrees with the projection",
        !agreeing.is_empty(),
        format!("agreeing: {}", agreeing.join(", ")),
    ));

    let bounds = classify_bounds(&c, &basis)?;
    let top = bounds.max_abs(Label::all(group));
    let two_r2 = &ExactScalar::sqrt2() * &ExactScalar::from_int(2);
    let mut tiers_ok = !bounds.any_exceeds() && top == two_r2;
    if group == Group::Su3 {
        tiers_ok &= bounds.max_abs(&[Label::Psi11, Label::Psi22]) == ExactScalar::sqrt2();
    }
    checks.push(check("bounds saturated and never exceeded", tiers_ok, format!("max |⟨C⟩| = {top}")));

    let errata = match group {
        Group::Su2 => Vec::new(),
        Group::Su3 => errata()?,
    };
    let generator_coefficients = decomposition
        .grid
        .nonzero()
        .into_iter()
        .map(|(l, m, v)| GeneratorTerm { l, m, value: v.re })
        .collect();

    Ok(VerifyReport {
        group,
        operator: c.matrix().clone(),
        eigenvalues,
        eigenvectors,
        projector_coefficients,
        generator_coefficients,
        comparison: decomposition.comparison,
        bounds,
        errata,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_groups_verify() {
        for g in [Group::Su2, Group::Su3] {
            let r = verify(g).unwrap();
            assert!(r.passed(), "{:#?}", r.checks);
        }
    }

    #[test]
    fn su3_report_carries_errata() {
        let r = verify(Group::Su3).unwrap();
        assert_eq!(r.errata.len(), 6);
        assert_eq!(r.generator_coefficients.len(), 12);
        assert!(verify(Group::Su2).unwrap().errata.is_empty());
    }
}
