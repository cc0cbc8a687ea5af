//! Dense matrices and state vectors over exact or floating-point complex
//! scalars, with Kronecker products, partial traces and a Hermitian
//! eigensolver for the float path.
//!
//! Composite indices follow `|ij⟩ ↦ i·d_B + j` everywhere, so the two-qutrit
//! ordering is `|00⟩, |01⟩, |02⟩, |10⟩, …, |22⟩`.

use std::fmt::Debug;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar};

/// Which arithmetic a matrix carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Element type of a [`Matrix`] or [`StateVector`].
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn conj(&self) -> Self;
    fn to_c64(&self) -> Complex64;
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

impl Scalar for ExactComplex {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        ExactComplex::zero()
    }
    fn one() -> Self {
        ExactComplex::one()
    }
    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return ExactComplex::zero();
        }
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        ExactComplex::conj(self)
    }
    fn to_c64(&self) -> Complex64 {
        ExactComplex::to_c64(self)
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("exact scalars always serialize")
    }
    fn from_json(value: &Value) -> Result<Self> {
        ExactComplex::deserialize(value).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn to_json(&self) -> Value {
        json!({ "re": self.re, "im": self.im })
    }
    fn from_json(value: &Value) -> Result<Self> {
        let part = |k: &str| {
            value
                .get(k)
                .and_then(Value::as_f64)
                .ok_or_else(|| Error::Parse(format!("float entry missing {k:?}")))
        };
        Ok(Complex64::new(part("re")?, part("im")?))
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<ExactComplex>;
pub type FloatMatrix = Matrix<Complex64>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in diag.into_iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entries as `(row, col, value)` for the nonzero positions only.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, T::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, T::minus))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|v| v.times(k))
    }

    pub fn neg(&self) -> Self {
        self.map(T::negate)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    /// Kronecker product; row `(i, k)` of the result is `i·rows(B) + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * rb, self.cols * cb);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in other.nonzeros() {
                out.set(i * rb + k, j * cb + l, a.times(b));
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &StateVector<T>) -> Result<StateVector<T>> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to dimension-{} vector",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let amps = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.amplitudes())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect();
        Ok(StateVector::new(amps))
    }

    /// Reduced operator on one factor of a `d_A·d_B` bipartite space.
    pub fn partial_trace(&self, keep: Subsystem, dims: (usize, usize)) -> Result<Self> {
        let (da, db) = dims;
        if !self.is_square() || self.rows != da * db {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} operator is not on a {da}x{db} bipartite space",
                self.rows, self.cols
            )));
        }
        Ok(match keep {
            Subsystem::A => Self::from_fn(da, da, |i, ip| {
                (0..db).fold(T::zero(), |acc, j| acc.plus(self.get(i * db + j, ip * db + j)))
            }),
            Subsystem::B => Self::from_fn(db, db, |j, jp| {
                (0..da).fold(T::zero(), |acc, i| acc.plus(self.get(i * db + j, i * db + jp)))
            }),
        })
    }

    pub fn to_float(&self) -> FloatMatrix {
        self.map(T::to_c64)
    }
}

impl ExactMatrix {
    /// Exact Hermiticity test.
    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    /// Symmetric with purely real entries.
    pub fn is_real_symmetric(&self) -> bool {
        self.data.iter().all(ExactComplex::is_real) && *self == self.transpose()
    }

    pub fn scale_real(&self, k: &ExactScalar) -> Self {
        self.map(|v| v.scale(k))
    }
}

impl FloatMatrix {
    /// Largest entry of `|M − M†|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// `max |a_ij − b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl<T: Scalar> Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} ({:?})", self.rows, self.cols, T::MODE)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<Value>> =
            (0..self.rows).map(|i| self.row(i).iter().map(Scalar::to_json).collect()).collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "mode": T::MODE,
            "entries": entries,
        })
        .serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            mode: Mode,
            entries: Vec<Vec<Value>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.mode != T::MODE {
            return Err(D::Error::custom(format!("expected mode {:?}, found {:?}", T::MODE, repr.mode)));
        }
        if repr.entries.len() != repr.rows || repr.entries.iter().any(|r| r.len() != repr.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        let data = repr
            .entries
            .iter()
            .flatten()
            .map(T::from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::new(repr.rows, repr.cols, data).map_err(D::Error::custom)
    }
}

/// Which factor of a bipartite space to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Dense state amplitudes.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector<T> {
    amplitudes: Vec<T>,
}

pub type ExactVector = StateVector<ExactComplex>;
pub type FloatVector = StateVector<Complex64>;

impl<T: Scalar> StateVector<T> {
    pub fn new(amplitudes: Vec<T>) -> Self {
        Self { amplitudes }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        Self::new((0..dim).map(|k| if k == index { T::one() } else { T::zero() }).collect())
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[T] {
        &self.amplitudes
    }

    pub fn get(&self, i: usize) -> &T {
        &self.amplitudes[i]
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<T> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "inner product of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(T::zero(), |acc, (a, b)| acc.plus(&a.conj().times(b))))
    }

    /// `Σ|cᵢ|²` as a (real-valued) scalar.
    pub fn norm_sqr(&self) -> T {
        self.inner(self).expect("same dimension")
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.amplitudes.iter().map(|a| a.times(k)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "sum of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(Self::new(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.plus(b)).collect()))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                out.push(a.times(b));
            }
        }
        Self::new(out)
    }

    /// `|self⟩⟨other|`.
    pub fn outer(&self, other: &Self) -> Matrix<T> {
        Matrix::from_fn(self.dim(), other.dim(), |i, j| self.amplitudes[i].times(&other.amplitudes[j].conj()))
    }

    pub fn to_float(&self) -> FloatVector {
        StateVector::new(self.amplitudes.iter().map(Scalar::to_c64).collect())
    }
}

impl ExactVector {
    pub fn is_normalized(&self) -> bool {
        self.norm_sqr() == ExactComplex::one()
    }
}

impl FloatVector {
    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr().re - 1.0).abs() <= tol
    }
}

/// `u v†`.
pub fn outer<T: Scalar>(u: &StateVector<T>, v: &StateVector<T>) -> Matrix<T> {
    u.outer(v)
}

/// Matrix of inner products `⟨uᵢ|uⱼ⟩`.
pub fn gram_matrix<T: Scalar>(vectors: &[StateVector<T>]) -> Result<Matrix<T>> {
    let n = vectors.len();
    let mut data = Vec::with_capacity(n * n);
    for u in vectors {
        for v in vectors {
            data.push(u.inner(v)?);
        }
    }
    Matrix::new(n, n, data)
}

/// Eigenvalues (descending) and the matching orthonormal eigenvectors as
/// the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: FloatMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> FloatVector {
        StateVector::new((0..self.vectors.rows()).map(|i| *self.vectors.get(i, k)).collect())
    }

    /// `V · diag(w) · V†`.
    pub fn reconstruct(&self) -> FloatMatrix {
        let n = self.values.len();
        let w = Matrix::diagonal(self.values.iter().map(|&x| Complex64::new(x, 0.0)).collect());
        debug_assert_eq!(w.rows(), n);
        self.vectors.matmul(&w).and_then(|vw| vw.matmul(&self.vectors.adjoint())).expect("square factors")
    }
}

const HERMITIAN_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
pub fn eig_hermitian(m: &FloatMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let dev = m.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.rows();
    let mut a: Vec<Complex64> = m.entries().to_vec();
    let mut v: Vec<Complex64> = FloatMatrix::identity(n).entries().to_vec();
    let scale = a.iter().map(|x| x.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                // Phase that makes the (p, q) entry real and positive.
                let phase = apq / r;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G = diag-phase · real rotation, acting on columns p and q:
                // col_p' = c·col_p − s·e^{-iφ}·col_q,  col_q' = s·e^{iφ}·col_p + c·col_q
                let gpp = Complex64::new(c, 0.0);
                let gqp = -phase.conj() * s;
                let gpq = phase * s;
                let gqq = Complex64::new(c, 0.0);
                // A ← A·G
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * gpp + akq * gqp;
                    a[k * n + q] = akp * gpq + akq * gqq;
                }
                // A ← G†·A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = gpp.conj() * apk + gqp.conj() * aqk;
                    a[q * n + k] = gpq.conj() * apk + gqq.conj() * aqk;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * gpp + vkq * gqp;
                    v[k * n + q] = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].re.total_cmp(&a[i * n + i].re));
    let values = order.iter().map(|&k| a[k * n + k].re).collect();
    let vectors = FloatMatrix::from_fn(n, n, |i, j| v[i * n + order[j]]);
    Ok(HermitianEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ExactScalar, Radical};

    fn c(re: i64) -> ExactComplex {
        ExactComplex::from_int(re)
    }

    fn sigma(k: usize) -> ExactMatrix {
        let z = c(0);
        let data = match k {
            0 => vec![c(1), z.clone(), z, c(1)],
            1 => vec![z.clone(), c(1), c(1), z],
            3 => vec![c(1), z.clone(), z, c(-1)],
            _ => unreachable!(),
        };
        Matrix::new(2, 2, data).unwrap()
    }

    #[test]
    fn kron_identity() {
        assert_eq!(ExactMatrix::identity(2).kron(&ExactMatrix::identity(2)), ExactMatrix::identity(4));
    }

    #[test]
    fn kron_index_convention() {
        // λ₄ = |0⟩⟨2| + |2⟩⟨0|
        let mut l4 = ExactMatrix::zeros(3, 3);
        l4.set(0, 2, c(1));
        l4.set(2, 0, c(1));
        let k = l4.kron(&l4);
        assert_eq!(*k.get(2, 6), c(1));
        assert_eq!(*k.get(6, 2), c(1));
        assert_eq!(*k.get(0, 8), c(1));
        assert_eq!(k.nonzeros().count(), 4);
    }

    #[test]
    fn chsh_matrix_from_pauli_products() {
        let m = sigma(3)
            .kron(&sigma(3))
            .add(&sigma(1).kron(&sigma(1)))
            .unwrap()
            .scale_real(&-ExactScalar::sqrt2());
        let r2 = ExactComplex::real(ExactScalar::sqrt2());
        assert_eq!(*m.get(0, 0), -&r2);
        assert_eq!(*m.get(0, 3), -&r2);
        assert_eq!(*m.get(1, 1), r2);
        assert_eq!(*m.get(1, 2), -&r2);
        assert!(m.get(0, 1).is_zero());
    }

    #[test]
    fn outer_of_basis_vector() {
        let e0 = ExactVector::basis(3, 0);
        let p = outer(&e0, &e0);
        assert_eq!(p, ExactMatrix::diagonal(vec![c(1), c(0), c(0)]));
    }

    #[test]
    fn outer_of_phi_plus_has_half_corners() {
        let h = ExactComplex::real(ExactScalar::radical(1, 2, Radical::Sqrt2));
        let phi = ExactVector::new(vec![h.clone(), c(0), c(0), h]);
        let p = outer(&phi, &phi);
        let half = ExactComplex::real(ExactScalar::frac(1, 2));
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert_eq!(*p.get(i, j), half);
        }
        assert_eq!(p.nonzeros().count(), 4);
        let reduced = p.partial_trace(Subsystem::A, (2, 2)).unwrap();
        assert_eq!(reduced, ExactMatrix::identity(2).scale(&half));
    }

    #[test]
    fn partial_trace_rejects_bad_dims() {
        let m = ExactMatrix::identity(4);
        assert!(matches!(m.partial_trace(Subsystem::A, (3, 3)), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn partial_trace_of_product() {
        let a = ExactMatrix::diagonal(vec![c(1), c(2)]);
        let b = ExactMatrix::new(3, 3, (1..=9).map(c).collect()).unwrap();
        let ab = a.kron(&b);
        assert_eq!(ab.partial_trace(Subsystem::A, (2, 3)).unwrap(), a.scale(&b.trace()));
        assert_eq!(ab.partial_trace(Subsystem::B, (2, 3)).unwrap(), b.scale(&a.trace()));
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = sigma(1).scale_real(&ExactScalar::sqrt3());
        let json = serde_json::to_value(&m).unwrap();
        assert_eq!(json["mode"], "exact");
        assert_eq!(json["entries"][0][1]["re"]["c"], "1/1");
        let back: ExactMatrix = serde_json::from_value(json.clone()).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_value::<FloatMatrix>(json).is_err());

        let f = m.to_float();
        let fj = serde_json::to_value(&f).unwrap();
        assert_eq!(fj["mode"], "float");
        let fb: FloatMatrix = serde_json::from_value(fj).unwrap();
        assert_eq!(fb, f);
    }

    #[test]
    fn new_checks_length() {
        assert!(ExactMatrix::new(2, 2, vec![c(1)]).is_err());
    }

    #[test]
    fn eig_identity() {
        let e = eig_hermitian(&FloatMatrix::identity(4)).unwrap();
        assert_eq!(e.values, vec![1.0; 4]);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = FloatMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eig_complex_hermitian() {
        // σ₂ has eigenvalues ±1
        let mut m = FloatMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(0.0, -1.0));
        m.set(1, 0, Complex64::new(0.0, 1.0));
        let e = eig_hermitian(&m).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] + 1.0).abs() < 1e-14);
        assert!(e.reconstruct().max_abs_diff(&m) < 1e-12);
    }
}
