//! Dense complex linear algebra over the `2^n` computational basis.
//!
//! Qubit `i` of an `n`-qubit register is the `i`-th tensor factor from the
//! left, i.e. bit `n - 1 - i` of a basis index. A Pauli word `"ZI"` is
//! therefore `Z ⊗ I`, acting on qubit 0.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest register the dense representation accepts by default (4096 amplitudes).
pub const DEFAULT_MAX_QUBITS: usize = 12;

/// Tolerance on `‖ψ‖₂ = 1` when a state is built from caller-provided amplitudes.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Looser tolerance for states produced by long propagations.
pub const EVOLVED_NORM_TOLERANCE: f64 = 1e-9;

/// Tolerance on `A = A†`, relative to `max(1, max |A_ij|)`.
pub const HERMITICITY_TOLERANCE: f64 = 1e-12;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn qubits_for_len(len: usize) -> Result<usize> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "amplitude vector length {len} is not a power of two"
        )));
    }
    Ok(len.trailing_zeros() as usize)
}

/// A normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    amplitudes: DVector<Complex64>,
    n_qubits: usize,
}

impl QuantumState {
    /// Builds a state from amplitudes; the length must be a power of two
    /// and the norm must be 1 within [`NORM_TOLERANCE`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(DVector::from_vec(amplitudes), NORM_TOLERANCE)
    }

    /// Normalizes `amplitudes` before construction.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NotNormalized { norm });
        }
        Self::with_tolerance(v.unscale(norm), NORM_TOLERANCE)
    }

    pub(crate) fn with_tolerance(amplitudes: DVector<Complex64>, tol: f64) -> Result<Self> {
        let n_qubits = qubits_for_len(amplitudes.len())?;
        if amplitudes
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite("state amplitude".into()));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amplitudes = DVector::from_element(dim, ZERO);
        amplitudes[index] = ONE;
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    /// Equal superposition of all basis states, the ground state of `-Σ Xᵢ`.
    pub fn uniform(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Self {
            amplitudes: DVector::from_element(dim, a),
            n_qubits,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `|amplitude|²` for every basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }
}

/// A dense Hermitian matrix. Hermiticity is checked, never repaired.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: DMatrix<Complex64>,
}

impl HermitianOperator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                actual: matrix.ncols(),
            });
        }
        if matrix
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite("operator entry".into()));
        }
        let deviation = hermiticity_deviation(&matrix);
        let scale = matrix.iter().map(|a| a.norm()).fold(1.0, f64::max);
        if deviation > HERMITICITY_TOLERANCE * scale {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { matrix })
    }

    /// Real diagonal operator.
    pub fn diagonal(entries: &[f64]) -> Self {
        let v = DVector::from_iterator(
            entries.len(),
            entries.iter().map(|&x| Complex64::new(x, 0.0)),
        );
        Self {
            matrix: DMatrix::from_diagonal(&v),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            matrix: DMatrix::from_element(dim, dim, ZERO),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|a| *a == ZERO)
    }

    /// Real linear combination `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        let matrix = self.matrix.scale(a) + other.matrix.scale(b);
        Ok(Self { matrix })
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            matrix: self.matrix.scale(c),
        }
    }

    /// `A|ψ⟩` as a raw vector (not renormalized).
    pub fn apply(&self, state: &QuantumState) -> Result<DVector<Complex64>> {
        if self.dim() != state.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: state.dim(),
            });
        }
        Ok(&self.matrix * state.amplitudes())
    }

    /// Full Hermitian eigendecomposition.
    pub fn eigh(&self) -> Result<Eigh> {
        let max_entry = self.matrix.iter().map(|a| a.norm()).fold(0.0, f64::max);
        let dim = self.dim();
        let eig = SymmetricEigen::try_new(self.matrix.clone(), EIGEN_EPS, EIGEN_MAX_ITER)
            .ok_or_else(|| Error::Eigensolve {
                dim,
                max_entry,
                reason: format!("no convergence within {EIGEN_MAX_ITER} sweeps"),
            })?;
        if eig.eigenvalues.iter().any(|l| !l.is_finite()) {
            return Err(Error::Eigensolve {
                dim,
                max_entry,
                reason: "non-finite eigenvalue".into(),
            });
        }
        Ok(Eigh {
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }
}

impl Add for &HermitianOperator {
    type Output = Result<HermitianOperator>;

    fn add(self, rhs: Self) -> Self::Output {
        self.combine(1.0, rhs, 1.0)
    }
}

impl Mul<&HermitianOperator> for f64 {
    type Output = HermitianOperator;

    fn mul(self, rhs: &HermitianOperator) -> HermitianOperator {
        rhs.scaled(self)
    }
}

fn hermiticity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigenpairs of a Hermitian operator: `A = V diag(λ) V†`.
#[derive(Debug, Clone)]
pub struct Eigh {
    pub eigenvalues: DVector<f64>,
    pub eigenvectors: DMatrix<Complex64>,
}

impl Eigh {
    /// Applies `exp(-i·dt·A)` to `v` without forming the dense propagator.
    pub fn apply_exp(&self, dt: f64, v: &DVector<Complex64>) -> DVector<Complex64> {
        let mut coeffs = self.eigenvectors.ad_mul(v);
        for (c, &lambda) in coeffs.iter_mut().zip(self.eigenvalues.iter()) {
            *c *= Complex64::from_polar(1.0, -dt * lambda);
        }
        &self.eigenvectors * coeffs
    }

    /// The dense unitary `exp(-i·dt·A)`.
    pub fn exp_unitary(&self, dt: f64) -> DMatrix<Complex64> {
        let phases = DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues
                .iter()
                .map(|&l| Complex64::from_polar(1.0, -dt * l)),
        );
        let scaled = DMatrix::from_fn(
            self.eigenvectors.nrows(),
            self.eigenvectors.ncols(),
            |i, j| self.eigenvectors[(i, j)] * phases[j],
        );
        scaled * self.eigenvectors.adjoint()
    }
}

/// Single-qubit Pauli matrix label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    #[serde(alias = "i")]
    I,
    #[serde(alias = "x")]
    X,
    #[serde(alias = "y")]
    Y,
    #[serde(alias = "z")]
    Z,
}

impl Pauli {
    fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `coefficient · P₀ ⊗ P₁ ⊗ … ⊗ P_{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PauliTermRepr", into = "PauliTermRepr")]
pub struct PauliTerm {
    pub coefficient: f64,
    pub word: Vec<Pauli>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PauliTermRepr {
    coefficient: f64,
    word: String,
}

impl TryFrom<PauliTermRepr> for PauliTerm {
    type Error = Error;

    fn try_from(r: PauliTermRepr) -> Result<Self> {
        PauliTerm::parse(r.coefficient, &r.word)
    }
}

impl From<PauliTerm> for PauliTermRepr {
    fn from(t: PauliTerm) -> Self {
        PauliTermRepr {
            word: t.word_string(),
            coefficient: t.coefficient,
        }
    }
}

impl PauliTerm {
    pub fn new(coefficient: f64, word: Vec<Pauli>) -> Result<Self> {
        if !coefficient.is_finite() {
            return Err(Error::NonFinite(format!("Pauli coefficient {coefficient}")));
        }
        Ok(Self { coefficient, word })
    }

    pub fn parse(coefficient: f64, word: &str) -> Result<Self> {
        let parsed = word
            .chars()
            .map(|c| {
                Pauli::from_char(c).ok_or_else(|| Error::InvalidPauliWord {
                    word: word.to_string(),
                    reason: format!("unexpected character {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if parsed.is_empty() {
            return Err(Error::InvalidPauliWord {
                word: word.to_string(),
                reason: "empty word".into(),
            });
        }
        Self::new(coefficient, parsed)
    }

    /// A single Pauli on `qubit`, identity elsewhere.
    pub fn single(coefficient: f64, pauli: Pauli, qubit: usize, n_qubits: usize) -> Result<Self> {
        if qubit >= n_qubits {
            return Err(Error::InvalidArgument(format!(
                "qubit {qubit} out of range for {n_qubits} qubits"
            )));
        }
        let mut word = vec![Pauli::I; n_qubits];
        word[qubit] = pauli;
        Self::new(coefficient, word)
    }

    /// `Pᵢ Pⱼ` on two distinct qubits.
    pub fn pair(
        coefficient: f64,
        pauli: Pauli,
        i: usize,
        j: usize,
        n_qubits: usize,
    ) -> Result<Self> {
        if i >= n_qubits || j >= n_qubits || i == j {
            return Err(Error::InvalidArgument(format!(
                "invalid qubit pair ({i}, {j}) for {n_qubits} qubits"
            )));
        }
        let mut word = vec![Pauli::I; n_qubits];
        word[i] = pauli;
        word[j] = pauli;
        Self::new(coefficient, word)
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|p| p.as_char()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().all(|&p| p == Pauli::I)
    }
}

impl fmt::Display for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.coefficient, self.word_string())
    }
}

impl FromStr for Pauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(Pauli::from_char), chars.next()) {
            (Some(p), None) => Ok(p),
            _ => Err(Error::InvalidPauliWord {
                word: s.to_string(),
                reason: "expected one of I, X, Y, Z".into(),
            }),
        }
    }
}

/// Dense matrix of a Pauli term, limited to [`DEFAULT_MAX_QUBITS`].
pub fn pauli_string(term: &PauliTerm, n_qubits: usize) -> Result<HermitianOperator> {
    pauli_string_with_max(term, n_qubits, DEFAULT_MAX_QUBITS)
}

pub fn pauli_string_with_max(
    term: &PauliTerm,
    n_qubits: usize,
    max_qubits: usize,
) -> Result<HermitianOperator> {
    if n_qubits > max_qubits {
        return Err(Error::TooManyQubits {
            n_qubits,
            max: max_qubits,
        });
    }
    if term.word.len() != n_qubits {
        return Err(Error::DimensionMismatch {
            expected: n_qubits,
            actual: term.word.len(),
        });
    }
    let dim = 1usize << n_qubits;
    let mut matrix = DMatrix::from_element(dim, dim, ZERO);
    add_pauli_into(&mut matrix, term, n_qubits);
    Ok(HermitianOperator { matrix })
}

/// Sum of Pauli terms on `n_qubits`.
pub fn pauli_sum(terms: &[PauliTerm], n_qubits: usize) -> Result<HermitianOperator> {
    if n_qubits > DEFAULT_MAX_QUBITS {
        return Err(Error::TooManyQubits {
            n_qubits,
            max: DEFAULT_MAX_QUBITS,
        });
    }
    let dim = 1usize << n_qubits;
    let mut matrix = DMatrix::from_element(dim, dim, ZERO);
    for term in terms {
        if term.word.len() != n_qubits {
            return Err(Error::DimensionMismatch {
                expected: n_qubits,
                actual: term.word.len(),
            });
        }
        add_pauli_into(&mut matrix, term, n_qubits);
    }
    Ok(HermitianOperator { matrix })
}

// A Pauli word maps |b⟩ to phase(b)·|b ⊕ flip⟩: X and Y flip the bit, Y and Z
// contribute a sign on |1⟩, and each Y contributes a factor i.
fn add_pauli_into(matrix: &mut DMatrix<Complex64>, term: &PauliTerm, n_qubits: usize) {
    let mut flip = 0usize;
    let mut sign_mask = 0usize;
    let mut y_count = 0u32;
    for (q, p) in term.word.iter().enumerate() {
        let bit = 1usize << (n_qubits - 1 - q);
        match p {
            Pauli::I => {}
            Pauli::X => flip |= bit,
            Pauli::Y => {
                flip |= bit;
                sign_mask |= bit;
                y_count += 1;
            }
            Pauli::Z => sign_mask |= bit,
        }
    }
    // Y = i·X·Z in the sense Y|b⟩ = i·(-1)^b |b⊕1⟩.
    let y_phase = match y_count % 4 {
        0 => ONE,
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let c = Complex64::new(term.coefficient, 0.0) * y_phase;
    for col in 0..matrix.ncols() {
        let row = col ^ flip;
        let sign = if (col & sign_mask).count_ones().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        matrix[(row, col)] += c * sign;
    }
}

/// Largest absolute eigenvalue.
pub fn spectral_norm(a: &HermitianOperator) -> Result<f64> {
    if a.dim() == 0 {
        return Ok(0.0);
    }
    if a.is_zero() {
        return Ok(0.0);
    }
    let eig = a.eigh()?;
    Ok(eig.eigenvalues.iter().fold(0.0, |m, l| m.max(l.abs())))
}

/// Euclidean distance `‖a − b‖₂`, equal to `√(2 − 2·Re⟨a|b⟩)` for normalized states.
///
/// The difference is formed directly so that small distances keep full
/// relative precision.
pub fn distance(a: &QuantumState, b: &QuantumState) -> Result<f64> {
    a.check_same_dim(b)?;
    Ok((a.amplitudes() - b.amplitudes()).norm())
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
pub fn overlap(a: &QuantumState, b: &QuantumState) -> Result<Complex64> {
    a.check_same_dim(b)?;
    Ok(a.amplitudes().dotc(b.amplitudes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pauli_x_single_qubit() {
        let op = pauli_string(&PauliTerm::parse(1.0, "X").unwrap(), 1).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        assert_eq!(op.matrix(), &expected);
    }

    #[test]
    fn z_on_first_qubit_is_leftmost_factor() {
        let op = pauli_string(&PauliTerm::parse(0.5, "ZI").unwrap(), 2).unwrap();
        assert_eq!(op, HermitianOperator::diagonal(&[0.5, 0.5, -0.5, -0.5]));
    }

    #[test]
    fn xx_is_scaled_antidiagonal() {
        let op = pauli_string(&PauliTerm::parse(2.0, "XX").unwrap(), 2).unwrap();
        #[rustfmt::skip]
        let expected = DMatrix::from_row_slice(4, 4, &[
            c(0.0), c(0.0), c(0.0), c(2.0),
            c(0.0), c(0.0), c(2.0), c(0.0),
            c(0.0), c(2.0), c(0.0), c(0.0),
            c(2.0), c(0.0), c(0.0), c(0.0),
        ]);
        assert_eq!(op.matrix(), &expected);
    }

    #[test]
    fn words_match_kronecker_products() {
        let i = Complex64::new(0.0, 1.0);
        let single = |p: Pauli| match p {
            Pauli::I => DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(1.0)]),
            Pauli::X => DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]),
            Pauli::Y => DMatrix::from_row_slice(2, 2, &[c(0.0), -i, i, c(0.0)]),
            Pauli::Z => DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]),
        };
        for word in ["XYZ", "YYI", "ZXY", "IYX", "YYY"] {
            let term = PauliTerm::parse(-0.7, word).unwrap();
            let mut kron = DMatrix::from_element(1, 1, c(-0.7));
            for p in &term.word {
                kron = kron.kronecker(&single(*p));
            }
            let op = pauli_string(&term, 3).unwrap();
            assert!((op.matrix() - kron).norm() < 1e-15, "{word}");
        }
    }

    #[test]
    fn pauli_string_rejects_bad_sizes() {
        let t = PauliTerm::parse(1.0, "XX").unwrap();
        assert!(matches!(
            pauli_string(&t, 3),
            Err(Error::DimensionMismatch { .. })
        ));
        let big = PauliTerm::new(1.0, vec![Pauli::Z; 13]).unwrap();
        assert!(matches!(
            pauli_string(&big, 13),
            Err(Error::TooManyQubits { .. })
        ));
        assert!(PauliTerm::parse(1.0, "XQ").is_err());
        assert!(PauliTerm::new(f64::NAN, vec![Pauli::X]).is_err());
    }

    #[test]
    fn spectral_norm_examples() {
        let x = pauli_string(&PauliTerm::parse(1.0, "X").unwrap(), 1).unwrap();
        assert_close!(spectral_norm(&x).unwrap(), 1.0, 1e-14);
        assert_eq!(spectral_norm(&HermitianOperator::zeros(4)).unwrap(), 0.0);
        assert_close!(
            spectral_norm(&HermitianOperator::diagonal(&[3.0, -5.0])).unwrap(),
            5.0,
            1e-14
        );
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.5), c(0.0)]);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(Error::NotHermitian { .. })
        ));
        let i = Complex64::new(0.0, 1.0);
        let y = DMatrix::from_row_slice(2, 2, &[c(0.0), -i, i, c(0.0)]);
        assert!(HermitianOperator::new(y).is_ok());
    }

    #[test]
    fn state_construction() {
        assert!(QuantumState::new(vec![c(1.0), c(1.0)]).is_err());
        assert!(QuantumState::new(vec![c(1.0), c(0.0), c(0.0)]).is_err());
        let s = QuantumState::normalized(vec![c(1.0), c(1.0)]).unwrap();
        assert_close!(s.norm(), 1.0, 1e-15);
        assert_eq!(QuantumState::uniform(3).dim(), 8);
        assert!(QuantumState::basis(2, 4).is_err());
    }

    #[test]
    fn distance_examples() {
        let zero = QuantumState::basis(1, 0).unwrap();
        let one = QuantumState::basis(1, 1).unwrap();
        let minus = QuantumState::new(vec![c(-1.0), c(0.0)]).unwrap();
        assert_eq!(distance(&zero, &zero).unwrap(), 0.0);
        assert_close!(distance(&zero, &one).unwrap(), 2f64.sqrt(), 1e-15);
        assert_close!(distance(&zero, &minus).unwrap(), 2.0, 1e-15);
        assert!(matches!(
            distance(&zero, &QuantumState::uniform(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn overlap_examples() {
        let zero = QuantumState::basis(1, 0).unwrap();
        let one = QuantumState::basis(1, 1).unwrap();
        let plus = QuantumState::uniform(1);
        assert_eq!(overlap(&zero, &zero).unwrap(), c(1.0));
        assert_eq!(overlap(&zero, &one).unwrap(), c(0.0));
        assert_close!(overlap(&zero, &plus).unwrap().re, 1.0 / 2f64.sqrt(), 1e-15);
        // conjugate-linear in the first argument
        let i_zero = QuantumState::new(vec![Complex64::new(0.0, 1.0), c(0.0)]).unwrap();
        assert_eq!(overlap(&i_zero, &zero).unwrap(), Complex64::new(0.0, -1.0));
        assert!(overlap(&zero, &QuantumState::uniform(2)).is_err());
    }

    #[test]
    fn exp_of_pauli_z_phases() {
        let z = HermitianOperator::diagonal(&[0.5, -0.5]);
        let u = z.eigh().unwrap().exp_unitary(2.0);
        assert!((u[(0, 0)] - Complex64::from_polar(1.0, -1.0)).norm() < 1e-14);
        assert!((u[(1, 1)] - Complex64::from_polar(1.0, 1.0)).norm() < 1e-14);
        assert!(u[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn pauli_term_serde_uses_word_strings() {
        let t: PauliTerm = serde_json::from_str(r#"{"coefficient": 0.25, "word": "xZ"}"#).unwrap();
        assert_eq!(t.word, vec![Pauli::X, Pauli::Z]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"coefficient":0.25,"word":"XZ"}"#
        );
        assert!(serde_json::from_str::<PauliTerm>(r#"{"coefficient": 1, "word": "A"}"#).is_err());
    }
}
