//! Pauli and Gell-Mann generator sets, SU(3) structure constants, and
//! Hilbert–Schmidt expansion of operators in generator tensor-product bases.
//!
//! `λ₀` is the plain 3×3 identity (`Tr λ₀² = 3`), not the normalized u(3)
//! generator; every projection divides by the stored norms `Tr gᵢ²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar, Radical};
use crate::linalg::ExactMatrix;

/// The symmetry group a construction belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Su2,
    Su3,
}

impl Group {
    /// Local (single-party) dimension.
    pub fn dim(self) -> usize {
        match self {
            Group::Su2 => 2,
            Group::Su3 => 3,
        }
    }

    /// Number of generators including the identity.
    pub fn generator_count(self) -> usize {
        self.dim() * self.dim()
    }

    pub fn generator(self, i: usize) -> Result<ExactMatrix> {
        match self {
            Group::Su2 => pauli(i),
            Group::Su3 => gellmann(i),
        }
    }

    /// Short symbol used in reports (`σ` or `λ`).
    pub fn symbol(self) -> &'static str {
        match self {
            Group::Su2 => "σ",
            Group::Su3 => "λ",
        }
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Group::Su2 => "su2",
            Group::Su3 => "su3",
        })
    }
}

impl std::str::FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su2" => Ok(Group::Su2),
            "su3" => Ok(Group::Su3),
            other => Err(Error::Parse(format!("unknown group {other:?}"))),
        }
    }
}

fn int(n: i64) -> ExactComplex {
    ExactComplex::from_int(n)
}

fn imag(n: i64) -> ExactComplex {
    ExactComplex::new(ExactScalar::zero(), ExactScalar::from_int(n))
}

/// Sum of ket-bra terms `coeff·|row⟩⟨col|` on a `dim`-level system.
fn ketbras(dim: usize, terms: &[(usize, usize, ExactComplex)]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(dim, dim);
    for (row, col, coeff) in terms {
        let v = m.get(*row, *col) + coeff;
        m.set(*row, *col, v);
    }
    m
}

/// Pauli matrix `σᵢ` with `σ₀ = I₂`.
pub fn pauli(i: usize) -> Result<ExactMatrix> {
    let terms = match i {
        0 => vec![(0, 0, int(1)), (1, 1, int(1))],
        1 => vec![(0, 1, int(1)), (1, 0, int(1))],
        2 => vec![(0, 1, imag(-1)), (1, 0, imag(1))],
        3 => vec![(0, 0, int(1)), (1, 1, int(-1))],
        _ => return Err(Error::IndexOutOfRange { index: i, max: 3 }),
    };
    Ok(ketbras(2, &terms))
}

/// Gell-Mann matrix `λᵢ`, `λ₀` being the identity, written as ket-bra sums.
pub fn gellmann(i: usize) -> Result<ExactMatrix> {
    let terms = match i {
        0 => vec![(0, 0, int(1)), (1, 1, int(1)), (2, 2, int(1))],
        1 => vec![(0, 1, int(1)), (1, 0, int(1))],
        // i(|1⟩⟨0| − |0⟩⟨1|)
        2 => vec![(1, 0, imag(1)), (0, 1, imag(-1))],
        3 => vec![(0, 0, int(1)), (1, 1, int(-1))],
        4 => vec![(0, 2, int(1)), (2, 0, int(1))],
        // i(|2⟩⟨0| − |0⟩⟨2|)
        5 => vec![(2, 0, imag(1)), (0, 2, imag(-1))],
        6 => vec![(1, 2, int(1)), (2, 1, int(1))],
        // i(|2⟩⟨1| − |1⟩⟨2|)
        7 => vec![(2, 1, imag(1)), (1, 2, imag(-1))],
        8 => {
            let k = ExactScalar::radical(1, 3, Radical::Sqrt3);
            vec![
                (0, 0, ExactComplex::real(k.clone())),
                (1, 1, ExactComplex::real(k.clone())),
                (2, 2, ExactComplex::real(&k * &ExactScalar::from_int(-2))),
            ]
        }
        _ => return Err(Error::IndexOutOfRange { index: i, max: 8 }),
    };
    Ok(ketbras(3, &terms))
}

/// An ordered generator basis with its Hilbert–Schmidt norms `Tr gᵢ²`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub group: Group,
    pub elements: Vec<ExactMatrix>,
    pub hs_norms: Vec<ExactScalar>,
}

impl GeneratorSet {
    pub fn new(group: Group) -> Self {
        let elements: Vec<ExactMatrix> =
            (0..group.generator_count()).map(|i| group.generator(i).expect("index in range")).collect();
        let hs_norms = elements.iter().map(|g| g.matmul(g).expect("square").trace().re).collect();
        Self { group, elements, hs_norms }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Tr[gᵢ gⱼ]` for all pairs.
    pub fn trace_gram(&self) -> Vec<Vec<ExactComplex>> {
        self.elements
            .iter()
            .map(|a| self.elements.iter().map(|b| a.matmul(b).expect("square").trace()).collect())
            .collect()
    }

    pub fn all_hermitian(&self) -> bool {
        self.elements.iter().all(ExactMatrix::is_hermitian)
    }

    /// Orthogonality `Tr[gᵢgⱼ] = Nᵢδᵢⱼ`, checked exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.trace_gram().iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                if i == j {
                    *v == ExactComplex::real(self.hs_norms[i].clone())
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// Symmetric `d` and antisymmetric `f` tensors of su(3), indices `1..=8`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    d: Vec<ExactScalar>,
    f: Vec<ExactScalar>,
}

fn idx3(l: usize, m: usize, n: usize) -> usize {
    assert!((1..=8).contains(&l) && (1..=8).contains(&m) && (1..=8).contains(&n));
    ((l - 1) * 8 + (m - 1)) * 8 + (n - 1)
}

impl StructureConstants {
    pub fn f(&self, l: usize, m: usize, n: usize) -> &ExactScalar {
        &self.f[idx3(l, m, n)]
    }

    pub fn d(&self, l: usize, m: usize, n: usize) -> &ExactScalar {
        &self.d[idx3(l, m, n)]
    }

    fn check(values: &[ExactScalar], sign_on_swap: i64) -> bool {
        let flip = |v: &ExactScalar| {
            if sign_on_swap < 0 {
                -v
            } else {
                v.clone()
            }
        };
        triples().all(|(l, m, n)| {
            let v = &values[idx3(l, m, n)];
            values[idx3(m, l, n)] == flip(v)
                && values[idx3(l, n, m)] == flip(v)
                && values[idx3(n, m, l)] == flip(v)
        })
    }

    /// Antisymmetry of `f` under every transposition of indices.
    pub fn f_is_totally_antisymmetric(&self) -> bool {
        Self::check(&self.f, -1)
    }

    pub fn d_is_totally_symmetric(&self) -> bool {
        Self::check(&self.d, 1)
    }

    /// Nonzero `(l, m, n, value)` with `l < m < n` for `f` and `l ≤ m ≤ n` for `d`.
    pub fn independent_f(&self) -> Vec<(usize, usize, usize, ExactScalar)> {
        triples()
            .filter(|&(l, m, n)| l < m && m < n)
            .filter_map(|(l, m, n)| {
                let v = self.f(l, m, n);
                (!v.is_zero()).then(|| (l, m, n, v.clone()))
            })
            .collect()
    }

    pub fn independent_d(&self) -> Vec<(usize, usize, usize, ExactScalar)> {
        triples()
            .filter(|&(l, m, n)| l <= m && m <= n)
            .filter_map(|(l, m, n)| {
                let v = self.d(l, m, n);
                (!v.is_zero()).then(|| (l, m, n, v.clone()))
            })
            .collect()
    }
}

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=8).flat_map(|l| (1..=8).flat_map(move |m| (1..=8).map(move |n| (l, m, n))))
}

/// `f_lmn = Tr([λl,λm]λn)/(4i)` and `d_lmn = Tr({λl,λm}λn)/4`, computed
/// from the matrices.
pub fn structure_constants() -> StructureConstants {
    let set = GeneratorSet::new(Group::Su3);
    let lam = &set.elements;
    let quarter = ExactScalar::frac(1, 4);
    let mut products = vec![vec![ExactMatrix::zeros(3, 3); 9]; 9];
    for l in 1..=8 {
        for m in 1..=8 {
            products[l][m] = lam[l].matmul(&lam[m]).expect("3x3");
        }
    }
    let mut d = Vec::with_capacity(512);
    let mut f = Vec::with_capacity(512);
    for (l, m, n) in triples() {
        let lm = products[l][m].matmul(&lam[n]).expect("3x3").trace();
        let ml = products[m][l].matmul(&lam[n]).expect("3x3").trace();
        let anti = &lm - &ml;
        let sym = &lm + &ml;
        // anti = 4i·f  ⇒  f = Im(anti)/4 (the real part vanishes)
        debug_assert!(anti.re.is_zero() && sym.im.is_zero());
        f.push(&anti.im * &quarter);
        d.push(&sym.re * &quarter);
    }
    StructureConstants { d, f }
}

/// `λl·λm = s·I + Σₙ cₙ·λₙ`, obtained by projection onto `{λ₀, …, λ₈}`.
#[derive(Debug, Clone)]
pub struct ProductExpansion {
    pub l: usize,
    pub m: usize,
    /// Identity coefficient `s`.
    pub identity: ExactComplex,
    /// `coeffs[n - 1]` multiplies `λₙ`, `n = 1..=8`.
    pub coeffs: Vec<ExactComplex>,
    /// `s = (2/3)δ_lm` and `cₙ = d_lmn + i·f_lmn`.
    pub standard_identity_holds: bool,
    /// `s = δ_lm` and `cₙ = d_lmn + f_lmn`, the normalization as printed in
    /// the source derivation.
    pub printed_identity_holds: bool,
}

impl ProductExpansion {
    pub fn coeff(&self, n: usize) -> &ExactComplex {
        &self.coeffs[n - 1]
    }

    pub fn reconstruct(&self) -> ExactMatrix {
        let mut out = ExactMatrix::identity(3).scale(&self.identity);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&gellmann(k + 1).expect("1..=8").scale(c)).expect("3x3");
            }
        }
        out
    }
}

pub fn product_expand(l: usize, m: usize) -> Result<ProductExpansion> {
    product_expand_with(l, m, &structure_constants())
}

/// As [`product_expand`], reusing precomputed structure constants.
pub fn product_expand_with(l: usize, m: usize, sc: &StructureConstants) -> Result<ProductExpansion> {
    for i in [l, m] {
        if !(1..=8).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, max: 8 });
        }
    }
    let set = GeneratorSet::new(Group::Su3);
    let prod = set.elements[l].matmul(&set.elements[m])?;
    let project = |n: usize| {
        let t = prod.matmul(&set.elements[n]).expect("3x3").trace();
        t.scale(&set.hs_norms[n].invert().expect("nonzero norm"))
    };
    let identity = project(0);
    let coeffs: Vec<ExactComplex> = (1..=8).map(project).collect();

    let delta = if l == m { 1 } else { 0 };
    let standard_identity_holds = identity == ExactComplex::real(ExactScalar::frac(2 * delta, 3))
        && (1..=8).all(|n| coeffs[n - 1] == ExactComplex::new(sc.d(l, m, n).clone(), sc.f(l, m, n).clone()));
    let printed_identity_holds = identity == ExactComplex::from_int(delta)
        && (1..=8).all(|n| coeffs[n - 1] == ExactComplex::real(sc.d(l, m, n) + sc.f(l, m, n)));
    Ok(ProductExpansion { l, m, identity, coeffs, standard_identity_holds, printed_identity_holds })
}

/// Coefficients `c[l][m]` of `M = Σ c[l][m]·gl⊗gm`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientGrid {
    pub group: Group,
    pub coeffs: Vec<Vec<ExactComplex>>,
}

impl CoefficientGrid {
    pub fn get(&self, l: usize, m: usize) -> &ExactComplex {
        &self.coeffs[l][m]
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, ExactComplex)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(l, row)| {
                row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(m, c)| (l, m, c.clone()))
            })
            .collect()
    }

    /// `Σ c[l][m]·gl⊗gm`.
    pub fn reconstruct(&self) -> ExactMatrix {
        let set = GeneratorSet::new(self.group);
        let d = self.group.dim();
        let mut out = ExactMatrix::zeros(d * d, d * d);
        for (l, m, c) in self.nonzero() {
            for (i, j, a) in set.elements[l].nonzeros() {
                for (k, q, b) in set.elements[m].nonzeros() {
                    let (row, col) = (i * d + k, j * d + q);
                    let v = out.get(row, col) + &(&c * &(a * b));
                    out.set(row, col, v);
                }
            }
        }
        out
    }
}

/// Hilbert–Schmidt projection `c[l][m] = Tr[(gl⊗gm)·M] / (Nl·Nm)`.
pub fn hs_project(m: &ExactMatrix, group: Group) -> Result<CoefficientGrid> {
    let d = group.dim();
    if m.rows() != d * d || m.cols() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "{} projection needs a {n}x{n} operator, got {}x{}",
            group,
            m.rows(),
            m.cols(),
            n = d * d
        )));
    }
    let set = GeneratorSet::new(group);
    let nz: Vec<Vec<(usize, usize, ExactComplex)>> =
        set.elements.iter().map(|g| g.nonzeros().map(|(i, j, v)| (i, j, v.clone())).collect()).collect();
    let inv_norms: Vec<ExactScalar> =
        set.hs_norms.iter().map(|n| n.invert().expect("nonzero norm")).collect();
    let n = set.len();
    let mut coeffs = vec![vec![ExactComplex::zero(); n]; n];
    for l in 0..n {
        for mm in 0..n {
            // Tr[(A⊗B)M] = Σ A_ij B_kq M[(j,q),(i,k)]
            let mut acc = ExactComplex::zero();
            for (i, j, a) in &nz[l] {
                for (k, q, b) in &nz[mm] {
                    let entry = m.get(j * d + q, i * d + k);
                    if entry.is_zero() {
                        continue;
                    }
                    acc += &(&(a * b) * entry);
                }
            }
            coeffs[l][mm] = acc.scale(&(&inv_norms[l] * &inv_norms[mm]));
        }
    }
    Ok(CoefficientGrid { group, coeffs })
}

/// `gl ⊗ gm` as an explicit matrix.
pub fn generator_product(group: Group, l: usize, m: usize) -> Result<ExactMatrix> {
    Ok(group.generator(l)?.kron(&group.generator(m)?))
}
