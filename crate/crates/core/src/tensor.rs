//! Totally antisymmetric tensors on Minkowski 4-space.
//!
//! Components are stored covariantly, keyed by the strictly increasing
//! multi-index (an [`IndexSet`]). Reading any other index tuple goes through
//! the permutation sign, so antisymmetry cannot be broken by construction.
//! The metric is `diag(+1, -1, -1, -1)` and `eps_0123 = +1` in positively
//! oriented frames.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::ComplexRational;

pub const DIM: usize = 4;

/// Diagonal entry of the Minkowski metric (equal to its inverse).
pub const fn metric(mu: usize) -> i8 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation that sorts `seq`; 0 if an entry repeats.
pub fn perm_sign(seq: &[usize]) -> i8 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `eps_{abcd}` with `eps_0123 = +1`.
pub fn levi_civita(idx: [usize; 4]) -> i8 {
    perm_sign(&idx)
}

/// A subset of `{0, 1, 2, 3}`, i.e. a strictly increasing multi-index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u8);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);
    pub const FULL: IndexSet = IndexSet(0b1111);

    /// Builds the set of `indices`; fails on repeats or out-of-range entries.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u8;
        for &mu in indices {
            if mu >= DIM {
                return Err(Error::InvalidIndex(format!("index {mu} out of range 0..4")));
            }
            if bits & (1 << mu) != 0 {
                return Err(Error::InvalidIndex(format!("repeated index {mu}")));
            }
            bits |= 1 << mu;
        }
        Ok(IndexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, mu: usize) -> bool {
        self.0 & (1 << mu) != 0
    }

    pub fn complement(self) -> Self {
        IndexSet(!self.0 & 0b1111)
    }

    pub fn is_disjoint(self, other: IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: IndexSet) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn indices(self) -> Vec<usize> {
        (0..DIM).filter(|&mu| self.contains(mu)).collect()
    }

    /// Product of metric diagonal entries over the set: the factor picked up
    /// when every index of a component is raised.
    pub fn metric_sign(self) -> i8 {
        if (self.len() - usize::from(self.contains(0))).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All subsets of size `rank`, in increasing order.
    pub fn of_rank(rank: usize) -> impl Iterator<Item = IndexSet> {
        (0u8..16).map(IndexSet).filter(move |s| s.len() == rank)
    }
}

/// Sign of the permutation sorting the concatenation `first ++ second`.
pub fn shuffle_sign(first: IndexSet, second: IndexSet) -> i8 {
    let mut seq = first.indices();
    seq.extend(second.indices());
    perm_sign(&seq)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(Error::Precondition(format!("orientation must be +1 or -1, got {other}"))),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl Mul for Orientation {
    type Output = Orientation;
    fn mul(self, rhs: Orientation) -> Orientation {
        if self == rhs {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }
}

/// A covariant rank-q antisymmetric tensor with exact components.
///
/// Only nonzero components are stored, so two tensors are equal iff their
/// ranks and stored maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AntisymTensor {
    rank: usize,
    comps: BTreeMap<IndexSet, ComplexRational>,
}

impl AntisymTensor {
    pub fn zero(rank: usize) -> Result<Self> {
        if rank > DIM {
            return Err(Error::UnsupportedRank { op: "AntisymTensor", rank });
        }
        Ok(Self { rank, comps: BTreeMap::new() })
    }

    pub fn scalar(value: ComplexRational) -> Self {
        let mut t = Self { rank: 0, comps: BTreeMap::new() };
        t.insert(IndexSet::EMPTY, value);
        t
    }

    /// `e^{mu_1} ^ ... ^ e^{mu_q}`: component `(mu_1 .. mu_q)` equal to 1.
    pub fn basis(indices: &[usize]) -> Result<Self> {
        Self::from_entries(indices.len(), [(indices.to_vec(), ComplexRational::one())])
    }

    /// Rank-1 tensor with the given lower components.
    pub fn covector(components: [ComplexRational; 4]) -> Self {
        let mut t = Self { rank: 1, comps: BTreeMap::new() };
        for (mu, c) in components.into_iter().enumerate() {
            t.insert(IndexSet(1 << mu), c);
        }
        t
    }

    /// Accumulates entries given on arbitrary index orderings. Each entry is
    /// folded onto its sorted multi-index with the permutation sign; repeated
    /// indices are rejected.
    pub fn from_entries<I>(rank: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, ComplexRational)>,
    {
        let mut t = Self::zero(rank)?;
        for (indices, value) in entries {
            if indices.len() != rank {
                return Err(Error::RankMismatch(format!(
                    "entry {indices:?} has {} indices, tensor rank is {rank}",
                    indices.len()
                )));
            }
            let set = IndexSet::new(&indices)?;
            t.accumulate(set, value.signed(perm_sign(&indices)));
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Stored (sorted multi-index, value) pairs; zero components are absent.
    pub fn entries(&self) -> impl Iterator<Item = (IndexSet, &ComplexRational)> {
        self.comps.iter().map(|(k, v)| (*k, v))
    }

    pub fn component(&self, set: IndexSet) -> ComplexRational {
        self.comps.get(&set).cloned().unwrap_or_default()
    }

    /// Component for an arbitrary index tuple: signed permutation of the
    /// stored value, 0 for repeated indices.
    pub fn get(&self, indices: &[usize]) -> Result<ComplexRational> {
        if indices.len() != self.rank {
            return Err(Error::RankMismatch(format!(
                "accessing {} indices of a rank-{} tensor",
                indices.len(),
                self.rank
            )));
        }
        if let Some(&mu) = indices.iter().find(|&&mu| mu >= DIM) {
            return Err(Error::InvalidIndex(format!("index {mu} out of range 0..4")));
        }
        let sign = perm_sign(indices);
        if sign == 0 {
            return Ok(ComplexRational::zero());
        }
        let set = IndexSet::new(indices)?;
        Ok(self.component(set).signed(sign))
    }

    /// Component with every index raised by the metric.
    pub fn raised(&self, set: IndexSet) -> ComplexRational {
        self.component(set).signed(set.metric_sign())
    }

    fn insert(&mut self, set: IndexSet, value: ComplexRational) {
        if !value.is_zero() {
            self.comps.insert(set, value);
        }
    }

    pub(crate) fn accumulate(&mut self, set: IndexSet, value: ComplexRational) {
        if value.is_zero() {
            return;
        }
        let slot = self.comps.entry(set).or_default();
        *slot += &value;
        if slot.is_zero() {
            self.comps.remove(&set);
        }
    }

    fn map_values(&self, f: impl Fn(IndexSet, &ComplexRational) -> ComplexRational) -> Self {
        let mut out = Self { rank: self.rank, comps: BTreeMap::new() };
        for (set, v) in &self.comps {
            out.insert(*set, f(*set, v));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(format!("add rank {} + rank {}", self.rank, other.rank)));
        }
        let mut out = self.clone();
        for (set, v) in &other.comps {
            out.accumulate(*set, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_values(|_, v| -v)
    }

    pub fn scale(&self, factor: &ComplexRational) -> Self {
        self.map_values(|_, v| v * factor)
    }

    /// `Q.R = (1/q!) Q_{mu..} R^{mu..}`. Each sorted multi-index occurs q!
    /// times in the full contraction with the same sign, which cancels the
    /// normalisation.
    pub fn dot(&self, other: &Self) -> Result<ComplexRational> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(format!("dot rank {} . rank {}", self.rank, other.rank)));
        }
        let mut acc = ComplexRational::zero();
        for (set, q) in &self.comps {
            if let Some(r) = other.comps.get(set) {
                acc += &(q * r).signed(set.metric_sign());
            }
        }
        Ok(acc)
    }

    /// `(*Q)_{nu..} = (1/q!) Q^{mu..} eps_{mu.. nu..}` with `eps_0123` set to
    /// the orientation sign.
    pub fn hodge(&self, orientation: Orientation) -> Self {
        let mut out = Self { rank: DIM - self.rank, comps: BTreeMap::new() };
        for (set, q) in &self.comps {
            let rest = set.complement();
            let sign = set.metric_sign() * shuffle_sign(*set, rest) * orientation.sign();
            out.insert(rest, q.clone().signed(sign));
        }
        out
    }

    /// `(Q^R)_{lambda..} = (1/(q! r!)) sum_P sgn(P) Q_{mu..} R_{nu..}`,
    /// evaluated as a sum over disjoint index splits.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let rank = self.rank + other.rank;
        if rank > DIM {
            return Err(Error::RankMismatch(format!("wedge of rank {} and rank {} exceeds 4", self.rank, other.rank)));
        }
        let mut out = Self { rank, comps: BTreeMap::new() };
        for (s, q) in &self.comps {
            for (t, r) in &other.comps {
                if s.is_disjoint(*t) {
                    out.accumulate(s.union(*t), (q * r).signed(shuffle_sign(*s, *t)));
                }
            }
        }
        Ok(out)
    }

    /// Flips every component carrying the index 3.
    pub fn reflect(&self) -> Self {
        self.map_values(|set, v| if set.contains(3) { -v } else { v.clone() })
    }

    pub fn conjugate(&self) -> Self {
        self.map_values(|_, v| v.conj())
    }

    pub fn is_real(&self) -> bool {
        self.comps.values().all(ComplexRational::is_real)
    }
}

impl fmt::Display for AntisymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(set, v)| {
                let idx: String = set.indices().iter().map(|i| i.to_string()).collect();
                format!("({v})e[{idx}]")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn c(re: i64, im: i64) -> ComplexRational {
        ComplexRational::from_ints(re, im)
    }

    /// Brute-force `(1/q!) sum over all q-tuples Q_mu R^mu`.
    fn dot_brute(q: &AntisymTensor, r: &AntisymTensor) -> ComplexRational {
        let rank = q.rank();
        let mut acc = ComplexRational::zero();
        let mut fact = 1i64;
        for k in 1..=rank as i64 {
            fact *= k;
        }
        for code in 0..DIM.pow(rank as u32) {
            let idx: Vec<usize> = (0..rank).map(|p| code / DIM.pow(p as u32) % DIM).collect();
            let g: i8 = idx.iter().map(|&m| metric(m)).product();
            acc += &(&q.get(&idx).unwrap() * &r.get(&idx).unwrap()).signed(g);
        }
        acc.scale(&crate::scalar::rat(1, fact))
    }

    #[test]
    fn dot_of_basis_tensors() {
        let e0 = AntisymTensor::basis(&[0]).unwrap();
        let e1 = AntisymTensor::basis(&[1]).unwrap();
        let e01 = AntisymTensor::basis(&[0, 1]).unwrap();
        assert_eq!(e0.dot(&e0).unwrap(), c(1, 0));
        assert_eq!(e1.dot(&e1).unwrap(), c(-1, 0));
        assert_eq!(dot_brute(&e01, &e01), c(-1, 0));
        assert_eq!(e01.dot(&e01).unwrap(), c(-1, 0));
        assert!(e0.dot(&e01).is_err());
    }

    #[test]
    fn hodge_of_basis_tensors() {
        let pos = Orientation::Positive;
        assert_eq!(AntisymTensor::basis(&[0]).unwrap().hodge(pos), AntisymTensor::basis(&[1, 2, 3]).unwrap());
        assert_eq!(AntisymTensor::basis(&[0, 1]).unwrap().hodge(pos), AntisymTensor::basis(&[2, 3]).unwrap().neg());
        assert_eq!(AntisymTensor::basis(&[0, 1, 2, 3]).unwrap().hodge(pos), AntisymTensor::scalar(c(-1, 0)));
    }

    #[test]
    fn wedge_of_basis_tensors() {
        let e0 = AntisymTensor::basis(&[0]).unwrap();
        let e1 = AntisymTensor::basis(&[1]).unwrap();
        assert_eq!(e0.wedge(&e1).unwrap(), AntisymTensor::basis(&[0, 1]).unwrap());
        assert!(e0.wedge(&e0).unwrap().is_zero());
        let e01 = AntisymTensor::basis(&[0, 1]).unwrap();
        let e23 = AntisymTensor::basis(&[2, 3]).unwrap();
        assert_eq!(e01.wedge(&e23).unwrap(), AntisymTensor::basis(&[0, 1, 2, 3]).unwrap());
        let e012 = AntisymTensor::basis(&[0, 1, 2]).unwrap();
        assert!(e012.wedge(&e01).is_err());
    }

    #[test]
    fn reflect_and_conjugate() {
        let e0 = AntisymTensor::basis(&[0]).unwrap();
        let e3 = AntisymTensor::basis(&[3]).unwrap();
        assert_eq!(e0.reflect(), e0);
        assert_eq!(e3.reflect(), e3.neg());
        let mixed = AntisymTensor::basis(&[0, 3]).unwrap().add(&AntisymTensor::basis(&[1, 2]).unwrap()).unwrap();
        let expected = AntisymTensor::basis(&[1, 2]).unwrap().sub(&AntisymTensor::basis(&[0, 3]).unwrap()).unwrap();
        assert_eq!(mixed.reflect(), expected);

        let it = AntisymTensor::scalar(ComplexRational::i());
        assert_eq!(it.conjugate(), AntisymTensor::scalar(-ComplexRational::i()));
        assert_eq!(e0.conjugate(), e0);
    }

    #[test]
    fn accessor_sign_rule() {
        let e01 = AntisymTensor::basis(&[0, 1]).unwrap();
        assert_eq!(e01.get(&[1, 0]).unwrap(), c(-1, 0));
        assert_eq!(e01.get(&[0, 0]).unwrap(), c(0, 0));
        assert!(e01.get(&[0]).is_err());
        assert!(e01.get(&[0, 4]).is_err());
        assert_eq!(AntisymTensor::scalar(c(3, 1)).get(&[]).unwrap(), c(3, 1));
    }

    #[test]
    fn from_entries_folds_permutations() {
        let t = AntisymTensor::from_entries(2, [(vec![1, 0], c(2, 0)), (vec![0, 1], c(5, 0))]).unwrap();
        assert_eq!(t.get(&[0, 1]).unwrap(), c(3, 0));
        assert!(AntisymTensor::from_entries(2, [(vec![1, 1], c(1, 0))]).is_err());
        assert!(AntisymTensor::from_entries(2, [(vec![1], c(1, 0))]).is_err());
        assert!(AntisymTensor::zero(5).is_err());
    }

    #[test]
    fn orientation_flag_negates_hodge() {
        let q = AntisymTensor::covector([c(1, 2), c(0, 1), int(3).into(), c(-1, 0)]);
        assert_eq!(q.hodge(Orientation::Negative), q.hodge(Orientation::Positive).neg());
    }

    #[test]
    fn levi_civita_values() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1);
        assert_eq!(levi_civita([2, 3, 0, 1]), 1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }
}
