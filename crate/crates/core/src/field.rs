//! Fields as finite sums of plane-wave modes.
//!
//! An [`ExpField`] represents `x -> sum_k c_k exp(-i k.x)` with `k` a real
//! rational covector and `c_k` a constant antisymmetric tensor. Distinct
//! exponentials are linearly independent, so the canonical form (no zero
//! coefficients, one entry per covector) decides equality of fields.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{ComplexRational, Rational};
use crate::tensor::{AntisymTensor, IndexSet, Orientation, DIM};

/// Lower-index wave covector `k_mu` of a mode `exp(-i k.x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WaveCovector(pub [Rational; 4]);

impl WaveCovector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_ints(k: [i64; 4]) -> Self {
        Self(k.map(crate::scalar::int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn component(&self, mu: usize) -> &Rational {
        &self.0[mu]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|mu| &self.0[mu] + &other.0[mu]))
    }

    pub fn neg(&self) -> Self {
        Self(std::array::from_fn(|mu| -&self.0[mu]))
    }

    /// The covector as a constant rank-1 tensor.
    pub fn as_tensor(&self) -> AntisymTensor {
        AntisymTensor::covector(std::array::from_fn(|mu| ComplexRational::real(self.0[mu].clone())))
    }
}

impl fmt::Display for WaveCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpField {
    rank: usize,
    orientation: Orientation,
    modes: BTreeMap<WaveCovector, AntisymTensor>,
}

impl ExpField {
    pub fn zero(rank: usize, orientation: Orientation) -> Result<Self> {
        if rank > DIM {
            return Err(Error::UnsupportedRank { op: "ExpField", rank });
        }
        Ok(Self { rank, orientation, modes: BTreeMap::new() })
    }

    /// `coeff * exp(-i k.x)` in a positively oriented frame.
    pub fn plane_wave(k: WaveCovector, coeff: AntisymTensor) -> Self {
        let mut f = Self { rank: coeff.rank(), orientation: Orientation::Positive, modes: BTreeMap::new() };
        f.accumulate(k, coeff);
        f
    }

    pub fn constant(coeff: AntisymTensor) -> Self {
        Self::plane_wave(WaveCovector::zero(), coeff)
    }

    pub fn scalar_wave(k: WaveCovector, amplitude: ComplexRational) -> Self {
        Self::plane_wave(k, AntisymTensor::scalar(amplitude))
    }

    /// Sums the given modes; repeated covectors are merged.
    pub fn from_modes<I>(rank: usize, orientation: Orientation, modes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WaveCovector, AntisymTensor)>,
    {
        let mut f = Self::zero(rank, orientation)?;
        for (k, c) in modes {
            if c.rank() != rank {
                return Err(Error::RankMismatch(format!(
                    "mode coefficient of rank {} in a rank-{rank} field",
                    c.rank()
                )));
            }
            f.accumulate(k, c);
        }
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn mode_count(&self) -> usize {
        self.modes.len()
    }

    pub fn modes(&self) -> impl Iterator<Item = (&WaveCovector, &AntisymTensor)> {
        self.modes.iter()
    }

    pub fn coefficient(&self, k: &WaveCovector) -> Option<&AntisymTensor> {
        self.modes.get(k)
    }

    /// The coefficient if the field is constant (empty or a single `k = 0`
    /// mode).
    pub fn as_constant(&self) -> Option<AntisymTensor> {
        match self.modes.len() {
            0 => AntisymTensor::zero(self.rank).ok(),
            1 => self.modes.get(&WaveCovector::zero()).cloned(),
            _ => None,
        }
    }

    fn accumulate(&mut self, k: WaveCovector, coeff: AntisymTensor) {
        if coeff.is_zero() {
            return;
        }
        match self.modes.remove(&k) {
            Some(existing) => {
                let sum = existing.add(&coeff).expect("mode ranks agree");
                if !sum.is_zero() {
                    self.modes.insert(k, sum);
                }
            }
            None => {
                self.modes.insert(k, coeff);
            }
        }
    }

    fn map_modes(
        &self,
        rank: usize,
        f: impl Fn(&WaveCovector, &AntisymTensor) -> (WaveCovector, AntisymTensor),
    ) -> Self {
        let mut out = Self { rank, orientation: self.orientation, modes: BTreeMap::new() };
        for (k, c) in &self.modes {
            let (k2, c2) = f(k, c);
            out.accumulate(k2, c2);
        }
        out
    }

    fn check_binary(&self, other: &Self) -> Result<()> {
        if self.orientation != other.orientation {
            return Err(Error::OrientationMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_binary(other)?;
        if self.rank != other.rank {
            return Err(Error::RankMismatch(format!("add rank {} + rank {}", self.rank, other.rank)));
        }
        let mut out = self.clone();
        for (k, c) in &other.modes {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_modes(self.rank, |k, c| (k.clone(), c.neg()))
    }

    pub fn scale(&self, factor: &ComplexRational) -> Self {
        self.map_modes(self.rank, |k, c| (k.clone(), c.scale(factor)))
    }

    /// Pointwise product of modes: coefficients wedge, covectors add.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_binary(other)?;
        let mut out = Self::zero(self.rank + other.rank, self.orientation).map_err(|_| {
            Error::RankMismatch(format!("wedge of rank {} and rank {} exceeds 4", self.rank, other.rank))
        })?;
        for (k1, c1) in &self.modes {
            for (k2, c2) in &other.modes {
                out.accumulate(k1.add(k2), c1.wedge(c2)?);
            }
        }
        Ok(out)
    }

    /// Pointwise `F.G` as a scalar field.
    pub fn dot(&self, other: &Self) -> Result<Self> {
        self.check_binary(other)?;
        if self.rank != other.rank {
            return Err(Error::RankMismatch(format!("dot rank {} . rank {}", self.rank, other.rank)));
        }
        let mut out = Self::zero(0, self.orientation)?;
        for (k1, c1) in &self.modes {
            for (k2, c2) in &other.modes {
                out.accumulate(k1.add(k2), AntisymTensor::scalar(c1.dot(c2)?));
            }
        }
        Ok(out)
    }

    pub fn hodge(&self) -> Self {
        let o = self.orientation;
        self.map_modes(DIM - self.rank, |k, c| (k.clone(), c.hodge(o)))
    }

    pub fn reflect(&self) -> Self {
        self.map_modes(self.rank, |k, c| (k.clone(), c.reflect()))
    }

    /// `conj(c exp(-i k.x)) = conj(c) exp(-i (-k).x)`.
    pub fn conjugate(&self) -> Self {
        self.map_modes(self.rank, |k, c| (k.neg(), c.conjugate()))
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Multiplies by `exp(-i shift.x)`.
    pub fn shifted(&self, shift: &WaveCovector) -> Self {
        self.map_modes(self.rank, |k, c| (k.add(shift), c.clone()))
    }

    /// Scalar field of the component with the given (arbitrary order) lower
    /// indices.
    pub fn component_field(&self, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(0, self.orientation)?;
        for (k, c) in &self.modes {
            out.accumulate(k.clone(), AntisymTensor::scalar(c.get(indices)?));
        }
        Ok(out)
    }

    /// Scalar field of the component with all indices raised.
    pub fn raised_component_field(&self, indices: &[usize]) -> Result<Self> {
        let set = IndexSet::new(indices)?;
        Ok(self.component_field(indices)?.scale(&ComplexRational::from(i64::from(set.metric_sign()))))
    }

    /// `dF = del ^ F`; on a mode, `del_mu` acts as `-i k_mu`.
    pub fn ext_d(&self) -> Result<Self> {
        if self.rank >= DIM {
            return Err(Error::UnsupportedRank { op: "ext_d", rank: self.rank });
        }
        let minus_i = -ComplexRational::i();
        let mut out = Self::zero(self.rank + 1, self.orientation)?;
        for (k, c) in &self.modes {
            out.accumulate(k.clone(), k.as_tensor().scale(&minus_i).wedge(c)?);
        }
        Ok(out)
    }

    /// `delta F = * d * F`, with no extra sign.
    pub fn codiff(&self) -> Result<Self> {
        if self.rank == 0 {
            return Err(Error::UnsupportedRank { op: "codiff", rank: 0 });
        }
        Ok(self.hodge().ext_d()?.hodge())
    }

    /// Partial derivative `del_mu F`, a field of the same rank.
    pub fn partial(&self, mu: usize) -> Self {
        let minus_i = -ComplexRational::i();
        self.map_modes(self.rank, |k, c| (k.clone(), c.scale(&minus_i.scale(k.component(mu)))))
    }

    /// `Q perp R`: `Q . conj(R)` vanishes identically.
    pub fn perp(&self, other: &Self) -> Result<bool> {
        Ok(self.dot(&other.conjugate())?.is_zero())
    }

    /// True if every mode has `k_3` equal to `value`.
    pub fn all_modes_have_k3(&self, value: &Rational) -> bool {
        self.modes.keys().all(|k| k.component(3) == value)
    }
}

impl fmt::Display for ExpField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modes.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.modes.iter().map(|(k, c)| format!("[{c}] exp(-i{k}.x)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
