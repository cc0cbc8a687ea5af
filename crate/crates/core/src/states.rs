//! The four Bell states, the nine entangled two-qutrit states, matrix
//! vectorization (`M ↦ Σ Mᵢⱼ|ij⟩`), swap-symmetry classification and the
//! change between the computational and SU(3) state bases.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar};
use crate::generators::Group;
use crate::linalg::{outer, ExactMatrix, ExactVector, StateVector};

/// Names of the constructed entangled states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
    Psi00,
    Psi21Plus,
    Psi21Minus,
    Psi11,
    Psi20Plus,
    Psi20Minus,
    Psi10Plus,
    Psi10Minus,
    Psi22,
}

/// Bell states in the order `Φ⁺, Ψ⁺, Ψ⁻, Φ⁻` (promoted from `σ₀, σ₁, iσ₂, σ₃`).
pub const BELL_LABELS: [Label; 4] = [Label::PhiPlus, Label::PsiPlus, Label::PsiMinus, Label::PhiMinus];

/// Qutrit states in the order they are promoted from `λ₀ … λ₈`.
pub const QUTRIT_LABELS: [Label; 9] = [
    Label::Psi00,
    Label::Psi21Plus,
    Label::Psi21Minus,
    Label::Psi11,
    Label::Psi20Plus,
    Label::Psi20Minus,
    Label::Psi10Plus,
    Label::Psi10Minus,
    Label::Psi22,
];

impl Label {
    pub fn group(self) -> Group {
        match self {
            Label::PhiPlus | Label::PhiMinus | Label::PsiPlus | Label::PsiMinus => Group::Su2,
            _ => Group::Su3,
        }
    }

    /// Index of the generator (`σᵢ` or `λᵢ`) the state is associated with:
    /// `Φ⁺, Ψ⁺, Ψ⁻, Φ⁻ ↔ σ₀…σ₃` and the qutrit states in `λ₀…λ₈` order.
    pub fn generator_index(self) -> usize {
        let list: &[Label] = match self.group() {
            Group::Su2 => &BELL_LABELS,
            Group::Su3 => &QUTRIT_LABELS,
        };
        list.iter().position(|&l| l == self).expect("label in its group")
    }

    pub fn all(group: Group) -> &'static [Label] {
        match group {
            Group::Su2 => &BELL_LABELS,
            Group::Su3 => &QUTRIT_LABELS,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::PhiPlus => "phi+",
            Label::PhiMinus => "phi-",
            Label::PsiPlus => "psi+",
            Label::PsiMinus => "psi-",
            Label::Psi00 => "psi00",
            Label::Psi21Plus => "psi21+",
            Label::Psi21Minus => "psi21-",
            Label::Psi11 => "psi11",
            Label::Psi20Plus => "psi20+",
            Label::Psi20Minus => "psi20-",
            Label::Psi10Plus => "psi10+",
            Label::Psi10Minus => "psi10-",
            Label::Psi22 => "psi22",
        }
    }

    /// Typeset name, e.g. `ψ₂₁⁻`.
    pub fn pretty(self) -> &'static str {
        match self {
            Label::PhiPlus => "Φ⁺",
            Label::PhiMinus => "Φ⁻",
            Label::PsiPlus => "Ψ⁺",
            Label::PsiMinus => "Ψ⁻",
            Label::Psi00 => "ψ₀₀",
            Label::Psi21Plus => "ψ₂₁⁺",
            Label::Psi21Minus => "ψ₂₁⁻",
            Label::Psi11 => "ψ₁₁",
            Label::Psi20Plus => "ψ₂₀⁺",
            Label::Psi20Minus => "ψ₂₀⁻",
            Label::Psi10Plus => "ψ₁₀⁺",
            Label::Psi10Minus => "ψ₁₀⁻",
            Label::Psi22 => "ψ₂₂",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts the canonical names plus the transposed-subscript aliases
    /// `psi12±`, `psi02±`, `psi01±`; `−` may be used for `-`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('−', "-");
        let label = match norm.as_str() {
            "phi+" => Label::PhiPlus,
            "phi-" => Label::PhiMinus,
            "psi+" => Label::PsiPlus,
            "psi-" => Label::PsiMinus,
            "psi00" => Label::Psi00,
            "psi21+" | "psi12+" => Label::Psi21Plus,
            "psi21-" | "psi12-" => Label::Psi21Minus,
            "psi11" => Label::Psi11,
            "psi20+" | "psi02+" => Label::Psi20Plus,
            "psi20-" | "psi02-" => Label::Psi20Minus,
            "psi10+" | "psi01+" => Label::Psi10Plus,
            "psi10-" | "psi01-" => Label::Psi10Minus,
            "psi22" => Label::Psi22,
            _ => return Err(Error::UnknownLabel(s.to_string())),
        };
        Ok(label)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Behaviour under exchange of the two parties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapSymmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

/// A named entangled state with its exact amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledState {
    pub label: Label,
    pub group: Group,
    pub vector: ExactVector,
    pub generator_index: usize,
    pub swap_symmetry: SwapSymmetry,
}

impl LabeledState {
    fn build(label: Label, vector: ExactVector) -> Self {
        let d = label.group().dim();
        let swap_symmetry = swap_class(&vector, (d, d)).expect("square bipartite space");
        Self { label, group: label.group(), vector, generator_index: label.generator_index(), swap_symmetry }
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> ExactMatrix {
        outer(&self.vector, &self.vector)
    }
}

/// `Σ coeff·|ij⟩ / √norm` on a `d⊗d` space.
fn ket_sum(d: usize, terms: &[(i64, usize, usize)], norm: i64) -> ExactVector {
    let scale = ExactScalar::from_int(norm).sqrt().and_then(|r| r.invert().ok()).expect("norm is 2, 3 or 6");
    let mut amps = vec![ExactComplex::zero(); d * d];
    for &(coeff, i, j) in terms {
        amps[i * d + j] = ExactComplex::real(&ExactScalar::from_int(coeff) * &scale);
    }
    StateVector::new(amps)
}

fn bell_vector(label: Label) -> Option<ExactVector> {
    let terms: &[(i64, usize, usize)] = match label {
        Label::PhiPlus => &[(1, 0, 0), (1, 1, 1)],
        Label::PsiPlus => &[(1, 0, 1), (1, 1, 0)],
        Label::PsiMinus => &[(1, 0, 1), (-1, 1, 0)],
        Label::PhiMinus => &[(1, 0, 0), (-1, 1, 1)],
        _ => return None,
    };
    Some(ket_sum(2, terms, 2))
}

fn qutrit_vector(label: Label) -> Option<ExactVector> {
    let (terms, norm): (&[(i64, usize, usize)], i64) = match label {
        Label::Psi00 => (&[(1, 0, 0), (1, 1, 1), (1, 2, 2)], 3),
        Label::Psi21Plus => (&[(1, 2, 1), (1, 1, 2)], 2),
        Label::Psi21Minus => (&[(1, 2, 1), (-1, 1, 2)], 2),
        Label::Psi11 => (&[(-1, 1, 1), (1, 2, 2)], 2),
        Label::Psi20Plus => (&[(1, 2, 0), (1, 0, 2)], 2),
        Label::Psi20Minus => (&[(1, 2, 0), (-1, 0, 2)], 2),
        Label::Psi10Plus => (&[(1, 1, 0), (1, 0, 1)], 2),
        Label::Psi10Minus => (&[(1, 1, 0), (-1, 0, 1)], 2),
        Label::Psi22 => (&[(-2, 0, 0), (1, 1, 1), (1, 2, 2)], 6),
        _ => return None,
    };
    Some(ket_sum(3, terms, norm))
}

/// One of the four Bell states.
pub fn bell_state(label: Label) -> Result<LabeledState> {
    bell_vector(label)
        .map(|v| LabeledState::build(label, v))
        .ok_or_else(|| Error::UnknownLabel(format!("{label} is not a Bell state")))
}

/// One of the nine entangled qutrit states, taken from the explicit ket list.
pub fn qutrit_state(label: Label) -> Result<LabeledState> {
    qutrit_vector(label)
        .map(|v| LabeledState::build(label, v))
        .ok_or_else(|| Error::UnknownLabel(format!("{label} is not a qutrit state")))
}

pub fn state(label: Label) -> LabeledState {
    match label.group() {
        Group::Su2 => bell_state(label),
        Group::Su3 => qutrit_state(label),
    }
    .expect("label matches its group")
}

pub fn states(group: Group) -> Vec<LabeledState> {
    Label::all(group).iter().map(|&l| state(l)).collect()
}

/// The normalized vector `Σᵢⱼ Mᵢⱼ|ij⟩`.
pub fn vectorize(m: &ExactMatrix) -> Result<ExactVector> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let raw = StateVector::new(m.entries().to_vec());
    let norm_sqr = raw.norm_sqr().re;
    let root = norm_sqr.sqrt().ok_or_else(|| Error::NotRepresentable(norm_sqr.to_string()))?;
    Ok(raw.scale(&ExactComplex::real(root.invert()?)))
}

/// Exchange of the two parties: `|ij⟩ ↦ |ji⟩`.
pub fn swap(s: &ExactVector, dims: (usize, usize)) -> Result<ExactVector> {
    let (da, db) = dims;
    if da != db || s.dim() != da * db {
        return Err(Error::DimensionMismatch(format!(
            "swap needs a d⊗d vector, got dimension {} with dims {da}x{db}",
            s.dim()
        )));
    }
    let amps = (0..s.dim()).map(|k| s.get((k % db) * db + k / db).clone()).collect();
    Ok(StateVector::new(amps))
}

/// Compares `SWAP·s` with `±s` exactly.
pub fn swap_class(s: &ExactVector, dims: (usize, usize)) -> Result<SwapSymmetry> {
    let swapped = swap(s, dims)?;
    Ok(if swapped == *s {
        SwapSymmetry::Symmetric
    } else if swapped == s.scale(&ExactComplex::from_int(-1)) {
        SwapSymmetry::Antisymmetric
    } else {
        SwapSymmetry::Neither
    })
}

/// `ρ² = ρ` for `ρ = |s⟩⟨s|`, exactly.
pub fn purity_check(s: &ExactVector) -> bool {
    let rho = outer(s, s);
    rho.matmul(&rho).map(|sq| sq == rho).unwrap_or(false)
}

/// Which basis an [`AmplitudeSet`] is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Computational,
    Su3,
}

/// Nine two-qutrit amplitudes: `c_ij` (index `3i + j`) in the computational
/// basis, or `b_k` (in [`QUTRIT_LABELS`] order) in the SU(3) basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeSet {
    pub basis: Basis,
    pub values: Vec<ExactComplex>,
}

impl AmplitudeSet {
    pub fn new(basis: Basis, values: Vec<ExactComplex>) -> Result<Self> {
        if values.len() != 9 {
            return Err(Error::DimensionMismatch(format!(
                "two-qutrit amplitude set needs 9 values, got {}",
                values.len()
            )));
        }
        Ok(Self { basis, values })
    }

    pub fn norm_sqr(&self) -> ExactScalar {
        self.values.iter().map(ExactComplex::norm_sqr).sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.norm_sqr().is_one()
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::DimensionMismatch(format!(
                "expected {basis:?} amplitudes, got {:?}",
                self.basis
            )));
        }
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        Ok(())
    }
}

/// `b_k = ⟨ψ_k|Ψ⟩` against the nine qutrit states.
pub fn to_su3_basis(c: &AmplitudeSet) -> Result<AmplitudeSet> {
    c.expect_basis(Basis::Computational)?;
    let psi = StateVector::new(c.values.clone());
    let values = QUTRIT_LABELS.iter().map(|&l| state(l).vector.inner(&psi)).collect::<Result<Vec<_>>>()?;
    AmplitudeSet::new(Basis::Su3, values)
}

/// `Ψ = Σ b_k|ψ_k⟩` expanded in the computational basis.
pub fn from_su3_basis(b: &AmplitudeSet) -> Result<AmplitudeSet> {
    b.expect_basis(Basis::Su3)?;
    let mut acc = ExactVector::new(vec![ExactComplex::zero(); 9]);
    for (coeff, &l) in b.values.iter().zip(QUTRIT_LABELS.iter()) {
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&state(l).vector.scale(coeff))?;
    }
    AmplitudeSet::new(Basis::Computational, acc.amplitudes().to_vec())
}

/// Row `k` holds the computational-basis weights of `b_k`, i.e. `⟨ψ_k|ij⟩`.
pub fn su3_transform_rows() -> Vec<Vec<ExactComplex>> {
    QUTRIT_LABELS
        .iter()
        .map(|&l| state(l).vector.amplitudes().iter().map(ExactComplex::conj).collect())
        .collect()
}
