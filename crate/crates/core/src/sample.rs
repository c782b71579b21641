//! Seeded random generators of small exact inputs.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dirac::{Sign, SignPair, SpinorPair2D};
use crate::field::{ExpField, WaveCovector};
use crate::lorentz::{LorentzMap, MapKind};
use crate::scalar::{rat, ComplexRational, Rational};
use crate::tensor::{AntisymTensor, IndexSet, Orientation};

/// Rational points `(a, b)` with `a^2 + b^2 = 1`.
pub const CIRCLE_POINTS: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];
/// Rational points `(a, b)` with `a^2 - b^2 = 1`: `(n/d, m/d)`.
pub const HYPERBOLA_POINTS: [(i64, i64, i64); 4] = [(5, 3, 4), (13, 5, 12), (5, 4, 3), (17, 8, 15)];

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self) -> Rational {
        rat(self.rng.gen_range(-4..=4), self.rng.gen_range(1..=3))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn complex(&mut self) -> ComplexRational {
        ComplexRational::new(self.rational(), self.rational())
    }

    pub fn sign(&mut self) -> Sign {
        if self.rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn sign_pair(&mut self) -> SignPair {
        SignPair::new(self.sign(), self.sign())
    }

    /// Random tensor of the given rank with at least one nonzero component.
    pub fn tensor(&mut self, rank: usize) -> AntisymTensor {
        loop {
            let mut entries = Vec::new();
            for set in IndexSet::of_rank(rank) {
                if self.rng.gen_bool(0.75) {
                    entries.push((set.indices(), self.complex()));
                }
            }
            let t = AntisymTensor::from_entries(rank, entries).expect("rank in range");
            if !t.is_zero() {
                return t;
            }
        }
    }

    pub fn real_tensor(&mut self, rank: usize) -> AntisymTensor {
        let t = self.tensor(rank);
        let real = t.add(&t.conjugate()).expect("same rank");
        if real.is_zero() {
            AntisymTensor::from_entries(rank, [(IndexSet::of_rank(rank).next().unwrap().indices(), 1.into())]).unwrap()
        } else {
            real
        }
    }

    /// Wave covector with small rational entries; `k3` is forced when given.
    pub fn covector(&mut self, k3: Option<&Rational>) -> WaveCovector {
        WaveCovector(std::array::from_fn(|mu| match (mu, k3) {
            (3, Some(v)) => v.clone(),
            _ => rat(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=2)),
        }))
    }

    /// Field of up to `max_modes` random modes.
    pub fn field(&mut self, rank: usize, max_modes: usize) -> ExpField {
        self.field_with_k3(rank, max_modes, None)
    }

    pub fn field_with_k3(&mut self, rank: usize, max_modes: usize, k3: Option<&Rational>) -> ExpField {
        let n = self.rng.gen_range(1..=max_modes);
        let modes: Vec<_> = (0..n).map(|_| (self.covector(k3), self.tensor(rank))).collect();
        ExpField::from_modes(rank, Orientation::Positive, modes).expect("ranks agree")
    }

    /// Real field: modes come in conjugate pairs.
    pub fn real_field(&mut self, rank: usize, max_pairs: usize) -> ExpField {
        let half = self.field(rank, max_pairs);
        half.add(&half.conjugate()).expect("same rank")
    }

    /// Constant real potential with `A_3 = 0`.
    pub fn constant_potential_2d(&mut self) -> ExpField {
        let comps = [self.rational(), self.rational(), self.rational(), Rational::zero()];
        ExpField::constant(AntisymTensor::covector(comps.map(ComplexRational::real)))
    }

    /// Real single plane wave `a exp(-i k.x) + c.c.` with `k_3 = 0`, `a_3 = 0`.
    pub fn plane_wave_potential_2d(&mut self) -> ExpField {
        let zero = Rational::zero();
        let k = loop {
            let k = self.covector(Some(&zero));
            if !k.is_zero() {
                break k;
            }
        };
        let a = AntisymTensor::covector([self.complex(), self.complex(), self.complex(), ComplexRational::zero()]);
        let wave = ExpField::plane_wave(k, a);
        wave.add(&wave.conjugate()).expect("same rank")
    }

    pub fn potential_2d(&mut self) -> ExpField {
        if self.rng.gen_bool(0.5) {
            self.constant_potential_2d()
        } else {
            self.plane_wave_potential_2d()
        }
    }

    /// Random `(phi, chi)` with up to `max_modes` modes each, all `k_3 = 0`.
    pub fn spinor(&mut self, max_modes: usize) -> SpinorPair2D {
        let zero = Rational::zero();
        let phi = self.field_with_k3(0, max_modes, Some(&zero));
        let chi = self.field_with_k3(0, max_modes, Some(&zero));
        SpinorPair2D::new(phi, chi).expect("k_3 = 0")
    }

    /// A plane-wave solution of the combined 2D system in a constant
    /// potential: kinetic covector `q` on the mass shell
    /// `q_0^2 - q_1^2 - q_2^2 = 1`, wave covector `q + beta A`, and
    /// `chi = -(q_0 - 1) phi / (q_1 + i alpha beta q_2)`.
    pub fn spinor_solution(&mut self, a: &ExpField, signs: SignPair) -> SpinorPair2D {
        let a_comps = crate::connection::constant_components(a).expect("constant potential");
        let &(hn, hs, hd) = HYPERBOLA_POINTS.choose(&mut self.rng).unwrap();
        let &(cx, cy, cd) = CIRCLE_POINTS.choose(&mut self.rng).unwrap();
        let (ch, sh) = (rat(hn, hd), rat(hs, hd));
        let (c, s) = (rat(cx, cd) * rat(self.sign().value(), 1), rat(cy, cd) * rat(self.sign().value(), 1));
        let q = [ch, &sh * &c, &sh * &s];
        let beta = rat(signs.beta.value(), 1);
        let k = WaveCovector([
            &q[0] + &beta * &a_comps[0],
            &q[1] + &beta * &a_comps[1],
            &q[2] + &beta * &a_comps[2],
            Rational::zero(),
        ]);
        let amp = loop {
            let z = self.complex();
            if !z.is_zero() {
                break z;
            }
        };
        let ab = rat(signs.alpha_beta().value(), 1);
        let denom = ComplexRational::new(q[1].clone(), &ab * &q[2]);
        let ratio = -(&ComplexRational::real(&q[0] - rat(1, 1)) * &denom.inv().expect("sinh != 0"));
        let phi = ExpField::scalar_wave(k.clone(), amp.clone());
        let chi = ExpField::scalar_wave(k, &amp * &ratio);
        SpinorPair2D::new(phi, chi).expect("k_3 = 0")
    }

    /// One of the constructible generators with a randomly chosen parameter.
    pub fn lorentz_map(&mut self, kind: MapKind) -> LorentzMap {
        let flip = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let param = match kind {
            MapKind::BoostX1 => {
                let &(n, m, d) = HYPERBOLA_POINTS.choose(&mut self.rng).unwrap();
                Some((rat(n, d), rat(flip * m, d)))
            }
            MapKind::RotationX1x2 => {
                let &(a, b, d) = CIRCLE_POINTS.choose(&mut self.rng).unwrap();
                Some((rat(a, d), rat(flip * b, d)))
            }
            _ => None,
        };
        LorentzMap::build(kind, param).expect("parameters lie on the unit curves")
    }

    /// Composition of a few random generators.
    pub fn any_lorentz_map(&mut self, orthochronous_only: bool) -> LorentzMap {
        let mut map = LorentzMap::identity();
        for _ in 0..self.rng.gen_range(1..=3) {
            let kind = loop {
                let kind = *MapKind::ALL.choose(&mut self.rng).unwrap();
                if !(orthochronous_only && kind == MapKind::ReverseX0) {
                    break kind;
                }
            };
            map = self.lorentz_map(kind).compose(&map).expect("group closure");
        }
        map
    }
}
