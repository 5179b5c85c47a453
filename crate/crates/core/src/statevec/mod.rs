//! Dense statevector simulator.
//!
//! Qubit 0 is the most significant (leftmost) tensor factor: for an `n`-qubit
//! state, qubit `q` corresponds to bit `n - 1 - q` of the amplitude index.
//! With this ordering `blockdiag(U, U) = I ⊗ U` acts on qubits `1..n`, and
//! a gate on qubit 0 mixes the top and bottom halves of the amplitude array.
//!
//! All kernels are sequential; results are bitwise deterministic.

mod gate;
mod matrix;

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub use gate::{rotation_gate, rotation_matrix, Axis, Gate, INPUT_UNITARITY_TOL};
pub use matrix::Matrix;

use crate::error::{Error, Result};

/// Largest register the simulator will allocate.
pub const MAX_QUBITS: usize = 24;

/// Branches below this probability are treated as empty when postselecting.
pub const MIN_BRANCH_PROBABILITY: f64 = 1e-12;

/// Seeded generator used for measurement and sampling.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unit-norm complex amplitudes over `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// Result of measuring (or postselecting) one qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome {
    /// Probability of the observed branch.
    pub probability: f64,
    /// Renormalized state of the remaining qubits.
    pub collapsed: StateVector,
    pub bit: u8,
}

pub(crate) fn log2_exact(len: usize) -> Option<usize> {
    if len.is_power_of_two() {
        Some(len.trailing_zeros() as usize)
    } else {
        None
    }
}

fn check_capacity(n_qubits: usize) -> Result<()> {
    if n_qubits > MAX_QUBITS {
        Err(Error::Capacity {
            needed: n_qubits,
            limit: MAX_QUBITS,
        })
    } else {
        Ok(())
    }
}

impl StateVector {
    /// `|0…0⟩` on `n_qubits` qubits (1 to 24).
    pub fn zero(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::shape("a register needs at least one qubit"));
        }
        check_capacity(n_qubits)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let mut s = Self::zero(n_qubits)?;
        if index >= s.dim() {
            return Err(Error::shape(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        s.amplitudes[0] = Complex64::new(0.0, 0.0);
        s.amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Equal superposition `H^{⊗n}|0⟩`.
    pub fn uniform(n_qubits: usize) -> Result<Self> {
        let mut s = Self::zero(n_qubits)?;
        let a = Complex64::new((1.0 / s.dim() as f64).sqrt(), 0.0);
        s.amplitudes.iter_mut().for_each(|x| *x = a);
        Ok(s)
    }

    /// Normalizes `values` into a state; returns the state and the L2 norm removed.
    ///
    /// A length-1 input yields a zero-qubit (scalar) state.
    pub fn from_amplitudes(values: Vec<Complex64>) -> Result<(Self, f64)> {
        if values.is_empty() {
            return Err(Error::shape("amplitude vector is empty"));
        }
        let n_qubits = log2_exact(values.len()).ok_or_else(|| {
            Error::shape(format!(
                "amplitude length {} is not a power of two",
                values.len()
            ))
        })?;
        check_capacity(n_qubits)?;
        if values
            .iter()
            .any(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::domain("amplitudes must be finite"));
        }
        let norm = l2_norm(&values);
        if norm == 0.0 {
            return Err(Error::degenerate("amplitude vector is zero"));
        }
        let amplitudes = values.into_iter().map(|v| v / norm).collect();
        Ok((
            Self {
                n_qubits,
                amplitudes,
            },
            norm,
        ))
    }

    pub fn from_real(values: &[f64]) -> Result<(Self, f64)> {
        Self::from_amplitudes(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Normally distributed amplitudes, normalized.
    pub fn random<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<Self> {
        check_capacity(n_qubits)?;
        let values: Vec<Complex64> = (0..1usize << n_qubits)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        Ok(Self::from_amplitudes(values)?.0)
    }

    /// Normally distributed real amplitudes, normalized.
    pub fn random_real<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<Self> {
        check_capacity(n_qubits)?;
        let values: Vec<f64> = (0..1usize << n_qubits)
            .map(|_| rng.sample(StandardNormal))
            .collect();
        Ok(Self::from_real(&values)?.0)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// Real parts of the amplitudes.
    pub fn real_parts(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.re).collect()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Tensor product `self ⊗ other`; `self` becomes the most significant qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let n_qubits = self.n_qubits + other.n_qubits;
        check_capacity(n_qubits)?;
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    fn check_qubits(&self, qubits: impl IntoIterator<Item = usize>) -> Result<()> {
        for q in qubits {
            if q >= self.n_qubits {
                return Err(Error::shape(format!(
                    "qubit {q} out of range for a {}-qubit state",
                    self.n_qubits
                )));
            }
        }
        Ok(())
    }

    /// Applies a gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        self.check_qubits(gate.targets().iter().chain(gate.controls()).copied())?;
        apply_kernel(
            &mut self.amplitudes,
            self.n_qubits,
            gate.matrix(),
            gate.targets(),
            gate.controls(),
        );
        Ok(())
    }

    /// Applies a sequence of gates in order.
    pub fn apply_all<'a>(&mut self, gates: impl IntoIterator<Item = &'a Gate>) -> Result<()> {
        for g in gates {
            self.apply(g)?;
        }
        Ok(())
    }

    /// Returns a new state with `gate` applied.
    pub fn apply_gate(&self, gate: &Gate) -> Result<StateVector> {
        let mut out = self.clone();
        out.apply(gate)?;
        Ok(out)
    }

    /// Applies a dense unitary on the ordered `targets` without decomposing it.
    ///
    /// The matrix must be unitary within `1e-8`.
    pub fn apply_block_unitary(&self, matrix: &Matrix, targets: &[usize]) -> Result<StateVector> {
        self.check_block(matrix, targets)?;
        matrix.check_unitary(INPUT_UNITARITY_TOL)?;
        let mut out = self.clone();
        apply_kernel(&mut out.amplitudes, out.n_qubits, matrix, targets, &[]);
        Ok(out)
    }

    /// Block application without the unitarity check, for operators that are
    /// unitary by construction (QFT, Haar).
    pub(crate) fn apply_block_trusted(
        &self,
        matrix: &Matrix,
        targets: &[usize],
    ) -> Result<StateVector> {
        self.check_block(matrix, targets)?;
        let mut out = self.clone();
        apply_kernel(&mut out.amplitudes, out.n_qubits, matrix, targets, &[]);
        Ok(out)
    }

    fn check_block(&self, matrix: &Matrix, targets: &[usize]) -> Result<()> {
        if log2_exact(matrix.dim()).is_none() {
            return Err(Error::shape(format!(
                "block dimension {} is not a power of two",
                matrix.dim()
            )));
        }
        if targets.is_empty() || matrix.dim() != 1 << targets.len() {
            return Err(Error::shape(format!(
                "block of dimension {} does not match {} targets",
                matrix.dim(),
                targets.len()
            )));
        }
        let mut sorted = targets.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::shape("duplicate target qubits"));
        }
        self.check_qubits(targets.iter().copied())
    }

    /// Probability of reading `1` on `qubit`.
    pub fn probability_one(&self, qubit: usize) -> Result<f64> {
        self.check_qubits([qubit])?;
        let mask = 1usize << (self.n_qubits - 1 - qubit);
        Ok(self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Projects `qubit` onto `bit` and removes it from the register.
    pub fn postselect(&self, qubit: usize, bit: u8) -> Result<MeasurementOutcome> {
        self.check_qubits([qubit])?;
        if bit > 1 {
            return Err(Error::domain(format!(
                "measurement bit must be 0 or 1, got {bit}"
            )));
        }
        let p1 = self.probability_one(qubit)?;
        let total = self.norm_sqr();
        let p = if bit == 1 { p1 } else { total - p1 } / total;
        if p <= MIN_BRANCH_PROBABILITY {
            return Err(Error::ImpossibleOutcome(format!(
                "qubit {qubit} has probability {p:e} of reading {bit}"
            )));
        }
        let collapsed = self.project_out(qubit, bit, (p * total).sqrt());
        Ok(MeasurementOutcome {
            probability: p,
            collapsed,
            bit,
        })
    }

    /// Measures `qubit`, drawing the branch from `rng`.
    pub fn measure<R: Rng + ?Sized>(
        &self,
        qubit: usize,
        rng: &mut R,
    ) -> Result<MeasurementOutcome> {
        let p1 = self.probability_one(qubit)? / self.norm_sqr();
        let r: f64 = rng.random();
        let bit = if r < p1 { 1 } else { 0 };
        self.postselect(qubit, bit)
    }

    /// Measures `qubit`, or postselects it when `postselect` is given.
    pub fn measure_qubit<R: Rng + ?Sized>(
        &self,
        qubit: usize,
        postselect: Option<u8>,
        rng: &mut R,
    ) -> Result<MeasurementOutcome> {
        match postselect {
            Some(bit) => self.postselect(qubit, bit),
            None => self.measure(qubit, rng),
        }
    }

    /// Postselects several qubits at once; returns the reduced state and the
    /// joint probability of the selected outcome.
    pub fn postselect_many(&self, selections: &[(usize, u8)]) -> Result<(StateVector, f64)> {
        let mut order: Vec<(usize, u8)> = selections.to_vec();
        // Highest index first so earlier removals do not shift later targets.
        order.sort_unstable_by_key(|s| std::cmp::Reverse(s.0));
        if order.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::shape("qubit selected twice"));
        }
        let mut state = self.clone();
        let mut prob = 1.0;
        for (q, bit) in order {
            let outcome = state.postselect(q, bit)?;
            prob *= outcome.probability;
            state = outcome.collapsed;
        }
        if prob <= MIN_BRANCH_PROBABILITY {
            return Err(Error::ImpossibleOutcome(format!(
                "joint postselection probability {prob:e}"
            )));
        }
        Ok((state, prob))
    }

    fn project_out(&self, qubit: usize, bit: u8, scale: f64) -> StateVector {
        let shift = self.n_qubits - 1 - qubit;
        let low_mask = (1usize << shift) - 1;
        let half = self.dim() / 2;
        let amplitudes = (0..half)
            .map(|j| {
                let high = (j & !low_mask) << 1;
                let idx = high | ((bit as usize) << shift) | (j & low_mask);
                self.amplitudes[idx] / scale
            })
            .collect();
        StateVector {
            n_qubits: self.n_qubits - 1,
            amplitudes,
        }
    }

    /// Draws `shots` basis-state samples; identical seeds give identical histograms.
    pub fn sample(&self, shots: usize, seed: u64) -> Result<BTreeMap<usize, usize>> {
        let mut rng = seeded_rng(seed);
        self.sample_with(shots, &mut rng)
    }

    pub fn sample_with<R: Rng + ?Sized>(
        &self,
        shots: usize,
        rng: &mut R,
    ) -> Result<BTreeMap<usize, usize>> {
        if shots == 0 {
            return Err(Error::domain("shots must be at least 1"));
        }
        let mut cumulative = Vec::with_capacity(self.dim());
        let mut acc = 0.0;
        for a in &self.amplitudes {
            acc += a.norm_sqr();
            cumulative.push(acc);
        }
        let mut hist = BTreeMap::new();
        for _ in 0..shots {
            let r: f64 = rng.random::<f64>() * acc;
            let idx = cumulative.partition_point(|&c| c <= r).min(self.dim() - 1);
            *hist.entry(idx).or_insert(0) += 1;
        }
        Ok(hist)
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        inner_product(self, other)
    }
}

pub(crate) fn l2_norm(values: &[Complex64]) -> f64 {
    values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.n_qubits != b.n_qubits {
        return Err(Error::shape(format!(
            "inner product of {}-qubit and {}-qubit states",
            a.n_qubits, b.n_qubits
        )));
    }
    Ok(a.amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Applies `matrix` on `targets` (first target = most significant matrix bit)
/// to every amplitude group whose `controls` are all set.
fn apply_kernel(
    amps: &mut [Complex64],
    n_qubits: usize,
    matrix: &Matrix,
    targets: &[usize],
    controls: &[usize],
) {
    let k = targets.len();
    let block = 1usize << k;
    let bit = |q: usize| 1usize << (n_qubits - 1 - q);

    // offsets[s]: index displacement of sub-basis state s inside a group.
    let offsets: Vec<usize> = (0..block)
        .map(|s| {
            targets
                .iter()
                .enumerate()
                .filter(|(j, _)| s & (1 << (k - 1 - j)) != 0)
                .map(|(_, &t)| bit(t))
                .sum()
        })
        .collect();
    let control_mask: usize = controls.iter().map(|&q| bit(q)).sum();

    let mut positions: Vec<usize> = targets.iter().map(|&t| n_qubits - 1 - t).collect();
    positions.sort_unstable();

    let mut gathered = vec![Complex64::new(0.0, 0.0); block];
    let groups = 1usize << (n_qubits - k);
    for g in 0..groups {
        // Spread g over the non-target bit positions.
        let mut base = g;
        for &p in &positions {
            let low = base & ((1 << p) - 1);
            base = ((base >> p) << (p + 1)) | low;
        }
        if base & control_mask != control_mask {
            continue;
        }
        for (slot, &off) in gathered.iter_mut().zip(&offsets) {
            *slot = amps[base + off];
        }
        for (r, &off) in offsets.iter().enumerate() {
            let row = matrix.row(r);
            amps[base + off] = row.iter().zip(&gathered).map(|(m, v)| m * v).sum();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_amps(s: &StateVector, expected: &[Complex64], tol: f64) {
        assert_eq!(s.dim(), expected.len());
        for (a, b) in s.amplitudes().iter().zip(expected) {
            assert!((a - b).norm() <= tol, "{a} vs {b}");
        }
    }

    #[test]
    fn zero_state() {
        assert_amps(&StateVector::zero(1).unwrap(), &[c(1.0), c(0.0)], 0.0);
        assert_amps(
            &StateVector::zero(2).unwrap(),
            &[c(1.0), c(0.0), c(0.0), c(0.0)],
            0.0,
        );
        assert!(matches!(
            StateVector::zero(25),
            Err(Error::Capacity {
                needed: 25,
                limit: 24
            })
        ));
        assert!(StateVector::zero(0).is_err());
    }

    #[test]
    fn from_amplitudes_normalizes() {
        let (s, n) = StateVector::from_real(&[1.0, 0.0]).unwrap();
        assert_eq!(n, 1.0);
        assert_amps(&s, &[c(1.0), c(0.0)], 0.0);

        let (s, n) = StateVector::from_real(&[3.0, 4.0, 0.0, 0.0]).unwrap();
        assert_eq!(n, 5.0);
        assert_amps(&s, &[c(0.6), c(0.8), c(0.0), c(0.0)], 1e-15);

        assert!(matches!(
            StateVector::from_real(&[0.0, 0.0]),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            StateVector::from_real(&[1.0, 2.0, 3.0]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(StateVector::from_real(&[]), Err(Error::Shape(_))));
    }

    #[test]
    fn hadamard_and_x() {
        let s = StateVector::zero(1).unwrap();
        let h = s.apply_gate(&Gate::hadamard(0)).unwrap();
        assert_amps(&h, &[c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)], 1e-15);

        let (s, _) = StateVector::from_real(&[0.6, 0.8]).unwrap();
        let x = s.apply_gate(&Gate::x(0)).unwrap();
        assert_amps(&x, &[c(0.8), c(0.6)], 1e-15);
    }

    #[test]
    fn controlled_x_respects_control() {
        let s = StateVector::zero(2).unwrap();
        let out = s.apply_gate(&Gate::cx(0, 1).unwrap()).unwrap();
        assert_amps(&out, &[c(1.0), c(0.0), c(0.0), c(0.0)], 0.0);

        // |10⟩ -> |11⟩
        let s = StateVector::basis(2, 2).unwrap();
        let out = s.apply_gate(&Gate::cx(0, 1).unwrap()).unwrap();
        assert_amps(&out, &[c(0.0), c(0.0), c(0.0), c(1.0)], 0.0);
    }

    #[test]
    fn msb_first_ordering() {
        // X on qubit 0 of |00⟩ gives |10⟩ = index 2.
        let s = StateVector::zero(2).unwrap();
        let out = s.apply_gate(&Gate::x(0)).unwrap();
        assert_eq!(out.amplitudes()[2], c(1.0));
        let out = s.apply_gate(&Gate::x(1)).unwrap();
        assert_eq!(out.amplitudes()[1], c(1.0));
    }

    #[test]
    fn gate_out_of_range() {
        let s = StateVector::zero(2).unwrap();
        assert!(matches!(s.apply_gate(&Gate::x(2)), Err(Error::Shape(_))));
        assert!(matches!(
            s.apply_gate(&Gate::cx(5, 0).unwrap()),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn block_unitary_identity_and_shape() {
        let mut rng = seeded_rng(3);
        let s = StateVector::random(3, &mut rng).unwrap();
        let out = s
            .apply_block_unitary(&Matrix::identity(4), &[0, 2])
            .unwrap();
        assert_eq!(out, s);

        let three = Matrix::identity(3);
        assert!(matches!(
            s.apply_block_unitary(&three, &[0]),
            Err(Error::Shape(_))
        ));
        let bad = Matrix::from_real_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            s.apply_block_unitary(&bad, &[1]),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn block_hadamard_matches_gate_path() {
        let mut rng = seeded_rng(11);
        let h = Gate::hadamard(0);
        for _ in 0..20 {
            let s = StateVector::random(2, &mut rng).unwrap();
            for q in 0..2 {
                let via_gate = s.apply_gate(&Gate::hadamard(q)).unwrap();
                let via_block = s.apply_block_unitary(h.matrix(), &[q]).unwrap();
                for (a, b) in via_gate.amplitudes().iter().zip(via_block.amplitudes()) {
                    assert!((a - b).norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn postselect_examples() {
        let (bell, _) = StateVector::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        let out = bell.postselect(0, 0).unwrap();
        assert!((out.probability - 0.5).abs() < 1e-15);
        assert_amps(&out.collapsed, &[c(1.0), c(0.0)], 1e-15);

        let s = StateVector::zero(2).unwrap();
        assert!(matches!(
            s.postselect(0, 1),
            Err(Error::ImpossibleOutcome(_))
        ));

        let (s, _) = StateVector::from_real(&[0.6, 0.0, 0.8, 0.0]).unwrap();
        let out = s.postselect(0, 1).unwrap();
        assert!((out.probability - 0.64).abs() < 1e-15);
        assert_amps(&out.collapsed, &[c(1.0), c(0.0)], 1e-15);
        assert_eq!(out.bit, 1);
    }

    #[test]
    fn postselect_inner_qubit() {
        // amplitudes indexed q0 q1 q2; keep q1 = 1.
        let (s, _) = StateVector::from_real(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]).unwrap();
        let out = s.postselect(1, 1).unwrap();
        let (expected, _) = StateVector::from_real(&[3.0, 4.0, 7.0, 8.0]).unwrap();
        assert_amps(&out.collapsed, expected.amplitudes(), 1e-15);
    }

    #[test]
    fn measure_is_seeded() {
        let s = StateVector::uniform(3).unwrap();
        let a = s.measure(1, &mut seeded_rng(5)).unwrap();
        let b = s.measure(1, &mut seeded_rng(5)).unwrap();
        assert_eq!(a, b);
        let via = s.measure_qubit(1, Some(a.bit), &mut seeded_rng(0)).unwrap();
        assert_eq!(via, a);
    }

    #[test]
    fn sampling() {
        let s = StateVector::zero(1).unwrap();
        let h = s.sample(100, 1).unwrap();
        assert_eq!(h.get(&0), Some(&100));
        assert_eq!(h.len(), 1);

        let plus = s.apply_gate(&Gate::hadamard(0)).unwrap();
        let h1 = plus.sample(1000, 42).unwrap();
        let h2 = plus.sample(1000, 42).unwrap();
        assert_eq!(h1, h2);
        assert_eq!(h1.values().sum::<usize>(), 1000);
        assert!(s.sample(0, 1).is_err());
    }

    #[test]
    fn inner_products() {
        let e0 = StateVector::basis(1, 0).unwrap();
        let e1 = StateVector::basis(1, 1).unwrap();
        assert_eq!(inner_product(&e0, &e1).unwrap(), c(0.0));
        assert_eq!(inner_product(&e0, &e0).unwrap(), c(1.0));
        let plus = StateVector::uniform(1).unwrap();
        assert!((inner_product(&plus, &e0).unwrap() - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        let two = StateVector::zero(2).unwrap();
        assert!(matches!(inner_product(&e0, &two), Err(Error::Shape(_))));
    }

    #[test]
    fn conjugate_linear_in_first_argument() {
        let i = Complex64::new(0.0, 1.0);
        let (a, _) = StateVector::from_amplitudes(vec![i, c(0.0)]).unwrap();
        let b = StateVector::basis(1, 0).unwrap();
        assert_eq!(inner_product(&a, &b).unwrap(), -i);
    }

    #[test]
    fn tensor_is_msb_first() {
        let e0 = StateVector::basis(1, 0).unwrap();
        let e1 = StateVector::basis(1, 1).unwrap();
        let t = e0.tensor(&e1).unwrap();
        assert_eq!(t.amplitudes()[1], c(1.0));
    }
}
