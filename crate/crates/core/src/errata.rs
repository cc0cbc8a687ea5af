//! Printed values that disagree with what the constructions compute.

use serde::Serialize;

use crate::correlations::{classify_bounds, generator_decomposition, qutrit_operator, BoundClass};
use crate::density::{density_of, reduce};
use crate::error::Result;
use crate::exactnum::{ExactComplex, ExactScalar};
use crate::generators::{product_expand_with, structure_constants, Group};
use crate::linalg::{ExactMatrix, Subsystem};
use crate::reference;
use crate::states::{state, states, su3_transform_rows, Label, QUTRIT_LABELS};

/// One disagreeing item.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErratumEntry {
    pub item: String,
    pub printed: String,
    pub computed: String,
    /// `computed − printed`, for scalar items.
    pub delta: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub title: &'static str,
    pub entries: Vec<ErratumEntry>,
}

fn scalar_entry(item: String, printed: &ExactScalar, computed: &ExactScalar) -> ErratumEntry {
    ErratumEntry {
        item,
        printed: printed.to_string(),
        computed: computed.to_string(),
        delta: Some((computed - printed).to_string()),
    }
}

fn format_sparse(entries: &[(usize, usize, ExactScalar)]) -> String {
    let parts: Vec<String> =
        entries.iter().filter(|(_, _, v)| !v.is_zero()).map(|(i, j, v)| format!("({i},{j}): {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn real_entries(m: &ExactMatrix) -> Vec<(usize, usize, ExactScalar)> {
    m.nonzeros().map(|(i, j, v)| (i, j, v.re.clone())).collect()
}

fn sparse_matrix(n: usize, entries: &[(usize, usize, ExactScalar)]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for (i, j, v) in entries {
        m.set(*i, *j, ExactComplex::real(v.clone()));
    }
    m
}

/// Printed reduced states against the partial trace of each qutrit state.
pub fn reduced_state_forms() -> Result<Erratum> {
    let mut entries = Vec::new();
    for (label, printed) in reference::printed_reduced_matrices() {
        let rho = reduce(&density_of(&state(label).vector)?, Subsystem::A)?;
        if sparse_matrix(3, &printed) != *rho.matrix() {
            entries.push(ErratumEntry {
                item: format!("ρᴬ of {}", label.pretty()),
                printed: format_sparse(&printed),
                computed: format_sparse(&real_entries(rho.matrix())),
                delta: None,
            });
        }
    }
    Ok(Erratum {
        id: "reduced-states",
        title: "reduced density matrices: printed off-diagonal forms are not the partial traces",
        entries,
    })
}

/// Printed SU(3)-basis amplitude rows against `⟨ψ_k|ij⟩`.
pub fn basis_change_rows() -> Erratum {
    let computed_rows = su3_transform_rows();
    let mut entries = Vec::new();
    for (label, printed) in reference::printed_su3_rows() {
        let k = QUTRIT_LABELS.iter().position(|&l| l == label).expect("qutrit label");
        let mut printed_row = vec![ExactScalar::zero(); 9];
        for (idx, w) in printed {
            printed_row[idx] = w;
        }
        let computed: Vec<ExactScalar> = computed_rows[k].iter().map(|c| c.re.clone()).collect();
        if computed != printed_row {
            let show = |row: &[ExactScalar]| {
                row.iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(idx, w)| format!("({w})·c{}{}", idx / 3, idx % 3))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            entries.push(ErratumEntry {
                item: format!("b for {}", label.pretty()),
                printed: show(&printed_row),
                computed: show(&computed),
                delta: None,
            });
        }
    }
    Erratum {
        id: "basis-change",
        title: "SU(3)-basis amplitudes: printed closed forms disagree with the projections",
        entries,
    }
}

/// Printed `λ₀⊗λ₃` coefficients against the Hilbert–Schmidt projection.
pub fn lambda0_lambda3_term() -> Result<Erratum> {
    let dec = generator_decomposition(&qutrit_operator())?;
    let entries = dec
        .mismatches()
        .into_iter()
        .map(|c| scalar_entry(format!("λ{}⊗λ{} ({})", c.l, c.m, c.source), &c.printed, &c.computed))
        .collect();
    Ok(Erratum {
        id: "lambda0-lambda3",
        title: "Gell-Mann expansion: the two printed λ₀⊗λ₃ coefficients disagree",
        entries,
    })
}

/// Printed inequality tiers against the computed classification.
pub fn inequality_tiers() -> Result<Erratum> {
    let report = classify_bounds(&qutrit_operator(), &states(Group::Su3))?;
    let mut entries = Vec::new();
    for (bound, printed) in reference::printed_tiers() {
        let class = if bound == "2√2" { BoundClass::TwoSqrt2 } else { BoundClass::Sqrt2 };
        let computed: Vec<&str> = report.class_members(class).iter().map(|l| l.as_str()).collect();
        let mut canon: Vec<String> = printed
            .iter()
            .map(|s| s.parse::<Label>().map(|l| l.as_str().to_string()).unwrap_or_else(|_| s.to_string()))
            .collect();
        canon.sort();
        let duplicated = canon.windows(2).any(|w| w[0] == w[1]);
        let mut sorted_computed: Vec<String> = computed.iter().map(|s| s.to_string()).collect();
        sorted_computed.sort();
        if duplicated || canon != sorted_computed {
            entries.push(ErratumEntry {
                item: format!("|⟨C⟩| = {bound} tier"),
                printed: format!("{{{}}}", printed.join(", ")),
                computed: format!("{{{}}}", computed.join(", ")),
                delta: None,
            });
        }
    }
    Ok(Erratum {
        id: "inequality-tiers",
        title: "inequality tiers: printed first tier repeats a label and omits ψ₁₀⁻",
        entries,
    })
}

/// Printed swap-symmetry listing against the exact exchange test.
pub fn swap_listing() -> Erratum {
    let mut entries = Vec::new();
    for (class, labels) in reference::printed_swap_listing() {
        for l in labels {
            let computed = format!("{:?}", state(l).swap_symmetry).to_lowercase();
            if computed != class {
                entries.push(ErratumEntry {
                    item: format!("exchange symmetry of {}", l.pretty()),
                    printed: class.to_string(),
                    computed,
                    delta: None,
                });
            }
        }
    }
    Erratum { id: "swap-symmetry", title: "exchange symmetry: ψ₁₁ and ψ₂₂ are symmetric", entries }
}

/// The printed product rule `λlλm = δlm·I + Σ(d + f)λn` against the
/// projected products, summarized over all 64 ordered pairs.
pub fn product_identity() -> Result<Erratum> {
    let sc = structure_constants();
    let mut failing = 0usize;
    let mut standard_ok = true;
    let mut first = None;
    for l in 1..=8 {
        for m in 1..=8 {
            let p = product_expand_with(l, m, &sc)?;
            standard_ok &= p.standard_identity_holds;
            if !p.printed_identity_holds {
                failing += 1;
                first.get_or_insert((l, m, p));
            }
        }
    }
    let mut entries = Vec::new();
    if let Some((l, m, p)) = first {
        entries.push(ErratumEntry {
            item: format!("pairs violating the printed rule (first: λ{l}λ{m}, identity part {})", p.identity),
            printed: "λlλm = δlm·I + Σₙ(d_lmn + f_lmn)λn".into(),
            computed: format!(
                "λlλm = (2/3)δlm·I + Σₙ(d_lmn + i·f_lmn)λn; {failing}/64 pairs differ; standard rule holds for all: {standard_ok}"
            ),
            delta: None,
        });
    }
    Ok(Erratum {
        id: "product-rule",
        title: "generator product rule: printed normalization omits 2/3 and the factor i",
        entries,
    })
}

/// Every erratum, in a fixed order.
pub fn errata() -> Result<Vec<Erratum>> {
    Ok(vec![
        reduced_state_forms()?,
        basis_change_rows(),
        lambda0_lambda3_term()?,
        inequality_tiers()?,
        swap_listing(),
        product_identity()?,
    ])
}
