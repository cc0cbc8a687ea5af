//! Values as printed in the source derivation, kept verbatim for
//! cross-checks and erratum reports. Nothing here is used to construct an
//! operator or a state.

use std::sync::OnceLock;

use crate::exactnum::{ExactScalar, Radical};
use crate::generators::Group;
use crate::linalg::ExactMatrix;
use crate::states::Label;

const CHSH_FIXTURE: &str = include_str!("../fixtures/chsh_operator.json");
const QUTRIT_FIXTURE: &str = include_str!("../fixtures/qutrit_operator.json");

fn parse_fixture(cell: &'static OnceLock<ExactMatrix>, text: &str) -> &'static ExactMatrix {
    cell.get_or_init(|| serde_json::from_str(text).expect("fixture is valid exact matrix JSON"))
}

/// The printed 4×4 CHSH correlation matrix.
pub fn chsh_literal() -> &'static ExactMatrix {
    static CELL: OnceLock<ExactMatrix> = OnceLock::new();
    parse_fixture(&CELL, CHSH_FIXTURE)
}

/// The printed 9×9 qutrit correlation matrix.
pub fn qutrit_literal() -> &'static ExactMatrix {
    static CELL: OnceLock<ExactMatrix> = OnceLock::new();
    parse_fixture(&CELL, QUTRIT_FIXTURE)
}

pub fn operator_literal(group: Group) -> &'static ExactMatrix {
    match group {
        Group::Su2 => chsh_literal(),
        Group::Su3 => qutrit_literal(),
    }
}

fn r(num: i64, den: i64, radical: Radical) -> ExactScalar {
    ExactScalar::radical(num, den, radical)
}

/// A printed generator expansion: `(l, m, coefficient of g_l ⊗ g_m)`.
#[derive(Debug, Clone)]
pub struct PrintedExpansion {
    pub source: &'static str,
    pub terms: Vec<(usize, usize, ExactScalar)>,
}

impl PrintedExpansion {
    pub fn coefficient(&self, l: usize, m: usize) -> ExactScalar {
        self.terms
            .iter()
            .find(|(a, b, _)| *a == l && *b == m)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(ExactScalar::zero)
    }
}

/// `−√2(σ₃⊗σ₃ + σ₁⊗σ₁)`.
pub fn chsh_expansion() -> PrintedExpansion {
    PrintedExpansion {
        source: "pauli expansion",
        terms: vec![(3, 3, r(-1, 1, Radical::Sqrt2)), (1, 1, r(-1, 1, Radical::Sqrt2))],
    }
}

fn qutrit_expansion_with(source: &'static str, lambda0_lambda3: ExactScalar) -> PrintedExpansion {
    PrintedExpansion {
        source,
        terms: vec![
            (4, 4, r(1, 1, Radical::Sqrt2)),
            (2, 2, r(-1, 1, Radical::Sqrt2)),
            (6, 6, r(1, 2, Radical::Sqrt2)),
            (7, 7, r(1, 2, Radical::Sqrt2)),
            // −1/(2√2)(λ3⊗λ3 − 5λ8⊗λ8)
            (3, 3, r(-1, 4, Radical::Sqrt2)),
            (8, 8, r(5, 4, Radical::Sqrt2)),
            (8, 0, r(1, 6, Radical::Sqrt6)),
            (0, 8, r(1, 6, Radical::Sqrt6)),
            (3, 8, r(-1, 12, Radical::Sqrt6)),
            (8, 3, r(-1, 12, Radical::Sqrt6)),
            (0, 3, lambda0_lambda3.clone()),
            (3, 0, lambda0_lambda3),
        ],
    }
}

/// Gell-Mann expansion as first printed, with `−1/(3√2)` on `λ₀⊗λ₃`.
pub fn qutrit_expansion_main() -> PrintedExpansion {
    qutrit_expansion_with("gell-mann expansion (main text)", r(-1, 6, Radical::Sqrt2))
}

/// The later restatement, with `−1/(2√3)` on `λ₀⊗λ₃`.
pub fn qutrit_expansion_restated() -> PrintedExpansion {
    qutrit_expansion_with("gell-mann expansion (restated)", r(-1, 6, Radical::Sqrt3))
}

pub fn printed_expansions(group: Group) -> Vec<PrintedExpansion> {
    match group {
        Group::Su2 => vec![chsh_expansion()],
        Group::Su3 => vec![qutrit_expansion_main(), qutrit_expansion_restated()],
    }
}

/// Printed projector coefficients `aᵢ`.
pub fn projector_coefficients(group: Group) -> Vec<(Label, ExactScalar)> {
    let two_r2 = r(2, 1, Radical::Sqrt2);
    let r2 = r(1, 1, Radical::Sqrt2);
    match group {
        Group::Su2 => vec![
            (Label::PhiPlus, -&two_r2),
            (Label::PhiMinus, ExactScalar::zero()),
            (Label::PsiPlus, ExactScalar::zero()),
            (Label::PsiMinus, two_r2),
        ],
        Group::Su3 => vec![
            (Label::Psi00, two_r2.clone()),
            (Label::Psi21Plus, ExactScalar::zero()),
            (Label::Psi21Minus, -&two_r2),
            (Label::Psi11, r2.clone()),
            (Label::Psi20Plus, ExactScalar::zero()),
            (Label::Psi20Minus, -&two_r2),
            (Label::Psi10Plus, ExactScalar::zero()),
            (Label::Psi10Minus, two_r2),
            (Label::Psi22, -r2),
        ],
    }
}

/// Printed expectation values; labels not listed are printed as vanishing.
pub fn expectation_table(group: Group) -> Vec<(Label, ExactScalar)> {
    // identical to the projector coefficients for a diagonalizing basis, but
    // transcribed from the separate expectation listing
    let two_r2 = r(2, 1, Radical::Sqrt2);
    let r2 = r(1, 1, Radical::Sqrt2);
    match group {
        Group::Su2 => vec![
            (Label::PhiPlus, -&two_r2),
            (Label::PsiMinus, two_r2),
            (Label::PsiPlus, ExactScalar::zero()),
            (Label::PhiMinus, ExactScalar::zero()),
        ],
        Group::Su3 => vec![
            (Label::Psi11, r2.clone()),
            (Label::Psi00, two_r2.clone()),
            (Label::Psi10Minus, two_r2.clone()),
            (Label::Psi22, -r2),
            (Label::Psi21Minus, -&two_r2),
            (Label::Psi20Minus, -two_r2),
            (Label::Psi21Plus, ExactScalar::zero()),
            (Label::Psi20Plus, ExactScalar::zero()),
            (Label::Psi10Plus, ExactScalar::zero()),
        ],
    }
}

/// The two inequality tiers exactly as printed (raw label strings, including
/// the repeated entry in the first tier).
pub fn printed_tiers() -> [(&'static str, Vec<&'static str>); 2] {
    [("2√2", vec!["psi00", "psi12-", "psi20-", "psi20-"]), ("√2", vec!["psi11", "psi22"])]
}

/// Printed swap-symmetry listing: (symmetric, antisymmetric, neither).
pub fn printed_swap_listing() -> [(&'static str, Vec<Label>); 3] {
    [
        ("symmetric", vec![Label::Psi00, Label::Psi10Plus, Label::Psi20Plus, Label::Psi21Plus]),
        ("antisymmetric", vec![Label::Psi11, Label::Psi10Minus, Label::Psi20Minus, Label::Psi21Minus]),
        ("neither", vec![Label::Psi22]),
    ]
}

pub type SparseEntries = Vec<(usize, usize, ExactScalar)>;

/// Printed reduced matrices `ρᴬ` as `(row, col, value)` entries.
pub fn printed_reduced_matrices() -> Vec<(Label, SparseEntries)> {
    let half = ExactScalar::frac(1, 2);
    let third = ExactScalar::frac(1, 3);
    let off = |i: usize, j: usize| vec![(i, j, half.clone()), (j, i, half.clone())];
    vec![
        (Label::Psi00, (0..3).map(|k| (k, k, third.clone())).collect()),
        (Label::Psi10Plus, off(0, 1)),
        (Label::Psi10Minus, off(0, 1)),
        (Label::Psi20Plus, off(0, 2)),
        (Label::Psi20Minus, off(0, 2)),
        (Label::Psi21Plus, off(1, 2)),
        (Label::Psi21Minus, off(1, 2)),
        (Label::Psi11, off(1, 2)),
        (
            Label::Psi22,
            vec![
                (0, 0, ExactScalar::frac(4, 6)),
                (1, 1, ExactScalar::frac(1, 6)),
                (2, 2, ExactScalar::frac(1, 6)),
            ],
        ),
    ]
}

/// Printed entropies of the reduced states (four significant digits).
pub fn printed_entropy(label: Label) -> Option<f64> {
    match label {
        Label::Psi00 => Some(1.585),
        Label::Psi22 => Some(1.2516),
        l if l.group() == Group::Su3 => Some(1.0),
        _ => None,
    }
}

/// Printed closed forms for the SU(3)-basis amplitudes: for each `b_k` the
/// weights on `c_ij` (index `3i + j`).
pub fn printed_su3_rows() -> Vec<(Label, Vec<(usize, ExactScalar)>)> {
    let h2 = r(1, 2, Radical::Sqrt2);
    vec![
        // (c00 − √2 c22)/√3
        (Label::Psi00, vec![(0, r(1, 3, Radical::Sqrt3)), (8, r(-1, 3, Radical::Sqrt6))]),
        (Label::Psi21Plus, vec![(1, h2.clone()), (2, h2.clone())]),
        (Label::Psi21Minus, vec![(1, h2.clone()), (2, -&h2)]),
        // (√2 c20 − √3 c02 + c22)/√6
        (
            Label::Psi11,
            vec![(6, r(1, 3, Radical::Sqrt3)), (2, r(-1, 2, Radical::Sqrt2)), (8, r(1, 6, Radical::Sqrt6))],
        ),
        (Label::Psi20Plus, vec![(6, h2.clone()), (7, h2.clone())]),
        (Label::Psi20Minus, vec![(6, h2.clone()), (7, -&h2)]),
        (Label::Psi10Plus, vec![(4, h2.clone()), (5, h2.clone())]),
        (Label::Psi10Minus, vec![(4, h2.clone()), (5, -&h2)]),
        // (√2 c00 + √3 c10 + c22)/√6
        (
            Label::Psi22,
            vec![(0, r(1, 3, Radical::Sqrt3)), (3, r(1, 2, Radical::Sqrt2)), (8, r(1, 6, Radical::Sqrt6))],
        ),
    ]
}
