//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use qutrit_core::correlations::exact_eigenvalue;
use qutrit_core::errata::{basis_change_rows, lambda0_lambda3_term};
use qutrit_core::exactnum::Radical;
use qutrit_core::generators::structure_constants;
use qutrit_core::linalg::gram_matrix;
use qutrit_core::reference;
use qutrit_core::sampler::estimate;
use qutrit_core::states::{BELL_LABELS, QUTRIT_LABELS};
use qutrit_core::*;

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn r2(k: i64) -> ExactScalar {
    ExactScalar::radical(k, 1, Radical::Sqrt2)
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// Draws `cases` values and applies `check` to each.
fn for_samples<S: Strategy>(cases: u32, strategy: S, mut check: impl FnMut(&S::Value) -> bool) -> Check {
    let mut runner = runner(cases);
    for i in 0..cases {
        let value = strategy.new_tree(&mut runner).map_err(|e| format!("generation failed: {e}"))?.current();
        if !check(&value) {
            return Err(format!("case {i} failed: {value:?}"));
        }
    }
    Ok(())
}

fn criterion_1() -> Check {
    let c = chsh_operator(&DetectorSetting::default()).map_err(|e| e.to_string())?;
    let literal = reference::chsh_literal();
    let equal = c.matrix().entries().iter().zip(literal.entries()).filter(|(a, b)| a == b).count();
    ensure(equal == 16, format!("{equal}/16 entries equal"))
}

fn criterion_2() -> Check {
    let c = operator_for(Group::Su2);
    let grid = hs_project(c.matrix(), Group::Su2).map_err(|e| e.to_string())?;
    let nz = grid.nonzero();
    ensure(nz.len() == 2, format!("{} nonzero coefficients", nz.len()))?;
    let want = ExactComplex::real(r2(-1));
    ensure(*grid.get(3, 3) == want && *grid.get(1, 1) == want, "c33, c11 ≠ −√2")?;
    ensure(grid.reconstruct() == *c.matrix(), "reconstruction differs")
}

fn criterion_3() -> Check {
    let c = operator_for(Group::Su2);
    let order = [Label::PhiPlus, Label::PsiPlus, Label::PsiMinus, Label::PhiMinus];
    let want = [r2(-2), ExactScalar::zero(), r2(2), ExactScalar::zero()];
    for (l, w) in order.iter().zip(&want) {
        let got = expectation(&c, &state(*l).vector).map_err(|e| e.to_string())?;
        ensure(got == *w, format!("⟨{l}⟩ = {got}, expected {w}"))?;
    }
    let report = classify_bounds(&c, &states(Group::Su2)).map_err(|e| e.to_string())?;
    ensure(report.max_abs(&BELL_LABELS) == r2(2), "max |⟨C⟩| ≠ 2√2")?;
    let saturating = report.rows.iter().filter(|r| r.expectation.abs() == r2(2)).count();
    ensure(saturating == 2, format!("{saturating} states saturate 2√2"))
}

fn criterion_4() -> Check {
    let s = states(Group::Su3);
    let vectors: Vec<ExactVector> = s.iter().map(|x| x.vector.clone()).collect();
    let gram = gram_matrix(&vectors).map_err(|e| e.to_string())?;
    ensure(gram == ExactMatrix::identity(9), "Gram matrix ≠ I₉")?;
    let count = |k: SwapSymmetry| s.iter().filter(|x| x.swap_symmetry == k).count();
    let split =
        (count(SwapSymmetry::Symmetric), count(SwapSymmetry::Antisymmetric), count(SwapSymmetry::Neither));
    let mut mismatched = Vec::new();
    for (class, labels) in reference::printed_swap_listing() {
        for l in labels {
            let got = format!("{:?}", state(l).swap_symmetry).to_lowercase();
            if got != class {
                mismatched.push(format!("{l}: expected {class}, computed {got}"));
            }
        }
    }
    ensure(
        split == (4, 4, 1) && mismatched.is_empty(),
        format!(
            "Gram I₉ holds; swap split (sym, anti, neither) = {split:?}, expected (4, 4, 1); {}",
            mismatched.join("; ")
        ),
    )
}

fn criterion_5() -> Check {
    for &l in &QUTRIT_LABELS {
        let summary = density::reduced_summary(l).map_err(|e| e.to_string())?;
        let (target, tol) = match l {
            Label::Psi00 => (3f64.log2(), 1e-9),
            Label::Psi22 => (1.2516, 1e-3),
            _ => (1.0, 1e-9),
        };
        ensure((summary.entropy - target).abs() < tol, format!("S({l}) = {} vs {target}", summary.entropy))?;
        ensure(summary.purity < ExactScalar::one(), format!("purity of {l} = {}", summary.purity))?;
    }
    ensure((3f64.log2() - 1.5849625).abs() < 1e-7, "log₂3 reference")
}

fn criterion_6() -> Check {
    for_samples(100, common::unit_state(9), common::basis_change_round_trip)?;
    let report = basis_change_rows();
    ensure(!report.entries.is_empty(), "discrepancy report is empty")
}

fn criterion_7() -> Check {
    let c = qutrit_operator();
    let equal = c
        .matrix()
        .entries()
        .iter()
        .zip(reference::qutrit_literal().entries())
        .filter(|(a, b)| a == b)
        .count();
    ensure(equal == 81, format!("{equal}/81 entries equal"))?;
    let dec = solve_projector_coefficients(&c, &states(Group::Su3)).map_err(|e| e.to_string())?;
    let want = [
        (Label::Psi00, r2(2)),
        (Label::Psi21Minus, r2(-2)),
        (Label::Psi11, r2(1)),
        (Label::Psi20Minus, r2(-2)),
        (Label::Psi10Minus, r2(2)),
        (Label::Psi22, r2(-1)),
        (Label::Psi21Plus, ExactScalar::zero()),
        (Label::Psi20Plus, ExactScalar::zero()),
        (Label::Psi10Plus, ExactScalar::zero()),
    ];
    for (l, w) in want {
        ensure(dec.get(l) == Some(&w), format!("a({l}) = {:?}, expected {w}", dec.get(l)))?;
    }
    ensure(dec.reconstruct() == *c.matrix(), "projector reconstruction differs")
}

fn criterion_8() -> Check {
    let c = qutrit_operator();
    let dec = generator_decomposition(&c).map_err(|e| e.to_string())?;
    ensure(dec.grid.reconstruct() == *c.matrix(), "reconstruction differs")?;
    let oracle = ExactScalar::radical(-1, 6, Radical::Sqrt2);
    ensure(*dec.grid.get(0, 3) == ExactComplex::real(oracle.clone()), "oracle (λ₀,λ₃) ≠ −1/(3√2)")?;
    let flagged = lambda0_lambda3_term().map_err(|e| e.to_string())?;
    let wrong = ExactScalar::radical(-1, 6, Radical::Sqrt3).to_string();
    ensure(
        !flagged.entries.is_empty()
            && flagged.entries.iter().all(|e| e.printed == wrong && e.computed == oracle.to_string()),
        format!("erratum entries: {:?}", flagged.entries),
    )
}

fn criterion_9() -> Check {
    let c = qutrit_operator();
    let table = [
        (Label::Psi00, r2(2)),
        (Label::Psi10Minus, r2(2)),
        (Label::Psi11, r2(1)),
        (Label::Psi22, r2(-1)),
        (Label::Psi21Minus, r2(-2)),
        (Label::Psi20Minus, r2(-2)),
        (Label::Psi21Plus, ExactScalar::zero()),
        (Label::Psi20Plus, ExactScalar::zero()),
        (Label::Psi10Plus, ExactScalar::zero()),
    ];
    for (l, w) in &table {
        let got = expectation(&c, &state(*l).vector).map_err(|e| e.to_string())?;
        ensure(got == *w, format!("⟨{l}⟩ = {got}, expected {w}"))?;
        ensure(
            exact_eigenvalue(&c, &state(*l).vector).map_err(|e| e.to_string())? == Some(w.clone()),
            format!("{l} is not an exact eigenvector"),
        )?;
    }
    let report = classify_bounds(&c, &states(Group::Su3)).map_err(|e| e.to_string())?;
    ensure(!report.any_exceeds(), "a state exceeds 2√2")?;
    ensure(report.max_abs(&QUTRIT_LABELS) == r2(2), "upper tier not saturated")?;
    ensure(report.max_abs(&[Label::Psi11, Label::Psi22]) == r2(1), "lower tier not saturated")
}

fn criterion_10() -> Check {
    let sc = structure_constants();
    let half_r3 = ExactScalar::radical(1, 2, Radical::Sqrt3);
    ensure(*sc.f(1, 2, 3) == ExactScalar::one(), "f123 ≠ 1")?;
    ensure(*sc.f(4, 5, 8) == half_r3 && *sc.f(6, 7, 8) == half_r3, "f458, f678 ≠ √3/2")?;
    ensure(*sc.d(1, 1, 8) == ExactScalar::radical(1, 3, Radical::Sqrt3), "d118 ≠ 1/√3")?;
    ensure(sc.f_is_totally_antisymmetric(), "f not totally antisymmetric")?;
    ensure(sc.d_is_totally_symmetric(), "d not totally symmetric")
}

fn criterion_11() -> Check {
    let start = Instant::now();
    let cases = [(Group::Su2, Label::PhiPlus), (Group::Su3, Label::Psi00)];
    for (g, l) in cases {
        let plan = plan_from_operator(&operator_for(g));
        let s = state(l).vector;
        let exact = expectation(&operator_for(g), &s).map_err(|e| e.to_string())?.to_f64();
        let a = estimate(&plan, &s, 1_000_000, 42).map_err(|e| e.to_string())?;
        let b = estimate(&plan, &s, 1_000_000, 42).map_err(|e| e.to_string())?;
        ensure((a.estimate - exact).abs() < 0.01, format!("{l}: estimate {} vs exact {exact}", a.estimate))?;
        ensure(
            a.estimate.to_bits() == b.estimate.to_bits() && a.stderr.to_bits() == b.stderr.to_bits(),
            format!("{l}: repeated runs differ"),
        )?;
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 60.0, format!("took {elapsed:.1} s"))
}

fn criterion_12() -> Check {
    use common::*;
    for_samples(1000, (scalar(), scalar(), scalar()), |(x, y, z)| field_axioms_hold(x, y, z))
        .map_err(|e| format!("field axioms: {e}"))?;
    for_samples(100, exact_matrix(9), hs_round_trip).map_err(|e| format!("hs round trip: {e}"))?;
    for_samples(100, (exact_matrix(9), exact_matrix(9), complex(), complex()), |(a, b, x, y)| {
        partial_trace_laws(a, b, x, y)
    })
    .map_err(|e| format!("partial trace: {e}"))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("CHSH operator from default settings equals the literal", criterion_1),
        ("CHSH generator expansion", criterion_2),
        ("Bell-state expectations and Tsirelson saturation", criterion_3),
        ("qutrit orthonormality and exchange classification", criterion_4),
        ("reduced-state entropies and purities", criterion_5),
        ("basis change round trip and discrepancy report", criterion_6),
        ("qutrit operator from projectors and its coefficients", criterion_7),
        ("qutrit Gell-Mann expansion and the λ₀⊗λ₃ term", criterion_8),
        ("qutrit expectation table and inequality tiers", criterion_9),
        ("su(3) structure constants", criterion_10),
        ("seeded sampling convergence and determinism", criterion_11),
        ("property suite", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
