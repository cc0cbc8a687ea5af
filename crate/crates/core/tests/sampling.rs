use qutrit_core::sampler::{estimate, estimate_sharded, plan_from_operator};
use qutrit_core::{expectation, operator_for, state, Group, Label, SampleResult};

fn exact(group: Group, label: Label) -> f64 {
    expectation(&operator_for(group), &state(label).vector).unwrap().to_f64()
}

#[test]
fn estimates_bracket_exact_value_across_seeds() {
    for (group, label) in
        [(Group::Su2, Label::PhiPlus), (Group::Su3, Label::Psi22), (Group::Su3, Label::Psi20Minus)]
    {
        let plan = plan_from_operator(&operator_for(group));
        let s = state(label).vector;
        let target = exact(group, label);
        let results: Vec<SampleResult> =
            (0..20u64).map(|seed| estimate(&plan, &s, 20_000, seed).unwrap()).collect();
        let mean = results.iter().map(|r| r.estimate).sum::<f64>() / 20.0;
        let combined = (results.iter().map(|r| r.stderr * r.stderr).sum::<f64>()).sqrt() / 20.0;
        assert!(
            (mean - target).abs() < 5.0 * combined + 1e-12,
            "{label}: mean {mean} vs {target} (σ {combined})"
        );
        for r in &results {
            assert!((r.estimate - target).abs() < 5.0 * r.stderr + 1e-12, "{label}: {r:?}");
        }
    }
}

#[test]
fn tsirelson_convergence() {
    let plan = plan_from_operator(&operator_for(Group::Su2));
    let r = estimate(&plan, &state(Label::PhiPlus).vector, 1_000_000, 42).unwrap();
    assert!((r.estimate + 2.0 * 2f64.sqrt()).abs() < 0.01, "{r:?}");
    assert_eq!(r.seed, 42);
    assert_eq!(r.shots_per_term, 1_000_000);
}

#[test]
fn sharded_runs_are_reproducible_for_any_thread_count() {
    let plan = plan_from_operator(&operator_for(Group::Su3));
    let s = state(Label::Psi00).vector;
    let reference = estimate_sharded(&plan, &s, 90_001, 5, 7).unwrap();
    for threads in [1, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let r = pool.install(|| estimate_sharded(&plan, &s, 90_001, 5, 7).unwrap());
        assert_eq!(r, reference);
    }
    assert!((reference.estimate - exact(Group::Su3, Label::Psi00)).abs() < 5.0 * reference.stderr);
}

#[test]
fn result_json_round_trip() {
    let plan = plan_from_operator(&operator_for(Group::Su2));
    let r = estimate(&plan, &state(Label::PsiMinus).vector, 1000, 9).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<SampleResult>(&text).unwrap(), r);
}
