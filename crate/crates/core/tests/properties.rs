use proptest::prelude::*;

use num_traits::Zero;
use rand::Rng;
use torsion_maxwell::connection::ext_d_a;
use torsion_maxwell::field::ExpField;
use torsion_maxwell::lorentz::{LorentzMap, MapKind};
use torsion_maxwell::sample::Sampler;
use torsion_maxwell::scalar::{rat, ComplexRational};
use torsion_maxwell::serial::FieldRepr;
use torsion_maxwell::tensor::Orientation;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn wedge_is_graded_anticommutative(seed in any::<u64>(), q in 0usize..=4, r in 0usize..=4) {
        prop_assume!(q + r <= 4);
        let mut s = Sampler::new(seed);
        let (a, b) = (s.tensor(q), s.tensor(r));
        let sign: i64 = if (q * r) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&sign.into()));
    }

    #[test]
    fn hodge_orientation_flag_negates(seed in any::<u64>(), q in 0usize..=4) {
        let t = Sampler::new(seed).tensor(q);
        prop_assert_eq!(t.hodge(Orientation::Negative), t.hodge(Orientation::Positive).neg());
    }

    #[test]
    fn conjugation_is_an_involution(seed in any::<u64>(), q in 0usize..=4) {
        let t = Sampler::new(seed).tensor(q);
        prop_assert_eq!(t.conjugate().conjugate(), t.clone());
        prop_assert_eq!(t.reflect().reflect(), t);
    }

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), q in 0usize..=2) {
        let f = Sampler::new(seed).field(q, 3);
        prop_assert!(f.ext_d().unwrap().ext_d().unwrap().is_zero());
    }

    #[test]
    fn codiff_squared_and_codiff_star_d_vanish(seed in any::<u64>(), q in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let f = s.field(q, 3);
        if q >= 2 {
            prop_assert!(f.codiff().unwrap().codiff().unwrap().is_zero());
        }
        let v = s.field(1, 3);
        prop_assert!(v.ext_d().unwrap().hodge().codiff().unwrap().is_zero());
    }

    #[test]
    fn ext_d_is_linear(seed in any::<u64>(), q in 0usize..=3) {
        let mut s = Sampler::new(seed);
        let (f, g, c) = (s.field(q, 3), s.field(q, 3), s.complex());
        let lhs = f.scale(&c).add(&g).unwrap().ext_d().unwrap();
        let rhs = f.ext_d().unwrap().scale(&c).add(&g.ext_d().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_commutes_with_d(seed in any::<u64>(), q in 0usize..=3) {
        let f = Sampler::new(seed).field(q, 3);
        prop_assert_eq!(f.ext_d().unwrap().conjugate(), f.conjugate().ext_d().unwrap());
    }

    #[test]
    fn difference_with_itself_is_empty(seed in any::<u64>(), q in 0usize..=4) {
        let mut s = Sampler::new(seed);
        let f = s.field(q, 4);
        let g = s.field(q, 4);
        // merge modes in a different order before cancelling
        let merged = g.add(&f).unwrap().sub(&g).unwrap();
        prop_assert!(merged.sub(&f).unwrap().is_zero());
        prop_assert_eq!(merged, f);
    }

    #[test]
    fn ext_d_a_keeps_the_mass_ansatz(seed in any::<u64>(), alpha in prop_oneof![Just(1i64), Just(-1i64)]) {
        let mut s = Sampler::new(seed);
        let k3 = rat(alpha, 1);
        let v = s.field_with_k3(1, 3, Some(&k3));
        let a = s.potential_2d();
        prop_assert!(ext_d_a(&v, &a).unwrap().all_modes_have_k3(&k3));
    }

    #[test]
    fn ext_d_a_without_potential_is_d(seed in any::<u64>()) {
        let v = Sampler::new(seed).field(1, 3);
        let zero = ExpField::zero(1, Orientation::Positive).unwrap();
        prop_assert_eq!(ext_d_a(&v, &zero).unwrap(), v.ext_d().unwrap());
    }

    #[test]
    fn d_a_d_a_on_scalars(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.field(0, 3);
        let a = s.potential_2d();
        let twice = ext_d_a(&ext_d_a(&f, &a).unwrap(), &a).unwrap();
        let expected = a.wedge(&f.ext_d().unwrap()).unwrap().hodge().neg();
        prop_assert_eq!(twice, expected);
    }

    #[test]
    fn lorentz_maps_commute_with_algebra(seed in any::<u64>(), q in 0usize..=2, r in 0usize..=2) {
        let mut s = Sampler::new(seed);
        let map = s.any_lorentz_map(false);
        let (f, g, h) = (s.field(q, 2), s.field(r, 2), s.field(q, 2));
        let t = |x: &ExpField| map.transform_field(x);
        prop_assert_eq!(t(&f.wedge(&g).unwrap()), t(&f).wedge(&t(&g)).unwrap());
        prop_assert_eq!(t(&f.dot(&h).unwrap()), t(&f).dot(&t(&h)).unwrap());
        prop_assert_eq!(t(&f.conjugate()), t(&f).conjugate());
        prop_assert_eq!(t(&f.reflect()), t(&f).reflect());
        prop_assert_eq!(t(&f.hodge()), t(&f).hodge());
        prop_assert_eq!(t(&f.ext_d().unwrap()), t(&f).ext_d().unwrap());
    }

    #[test]
    fn generated_maps_form_a_group(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (l1, l2) = (s.any_lorentz_map(false), s.any_lorentz_map(false));
        let both = l1.compose(&l2).unwrap();
        prop_assert_eq!(both.orientation(), l1.orientation() * l2.orientation());
        prop_assert!(LorentzMap::new(both.matrix().clone()).is_ok());
    }

    #[test]
    fn field_json_roundtrip(seed in any::<u64>(), q in 0usize..=4) {
        let f = Sampler::new(seed).field(q, 3);
        let json = serde_json::to_string(&FieldRepr::from(&f)).unwrap();
        let back: FieldRepr = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(ExpField::try_from(&back).unwrap(), f);
    }

    #[test]
    fn scalar_text_roundtrip(seed in any::<u64>()) {
        let z = Sampler::new(seed).complex();
        prop_assert_eq!(z.to_string().parse::<ComplexRational>().unwrap(), z);
    }
}

#[test]
fn hodge_equivariance_for_each_generator() {
    let mut s = Sampler::new(3);
    for kind in MapKind::ALL {
        for _ in 0..10 {
            let map = s.lorentz_map(kind);
            for q in 0..=4 {
                let f = s.field(q, 2);
                assert_eq!(map.transform_field(&f.hodge()), map.transform_field(&f).hodge(), "{kind} rank {q}");
            }
        }
    }
}

#[test]
fn boost_preserves_dot() {
    let boost = LorentzMap::build(MapKind::BoostX1, Some((rat(5, 4), rat(3, 4)))).unwrap();
    let mut s = Sampler::new(8);
    for _ in 0..50 {
        let q = s.rng().gen_range(0..=4);
        let (f, g) = (s.field(q, 2), s.field(q, 2));
        assert_eq!(
            boost.transform_field(&f.dot(&g).unwrap()),
            boost.transform_field(&f).dot(&boost.transform_field(&g)).unwrap()
        );
        // constant modes give a pointwise scalar that must not change at all
        let (a, b) = (s.tensor(q), s.tensor(q));
        assert_eq!(boost.transform_tensor(&a).dot(&boost.transform_tensor(&b)).unwrap(), a.dot(&b).unwrap());
    }
}

#[test]
fn reality_is_preserved_by_real_operations() {
    let mut s = Sampler::new(4);
    for _ in 0..20 {
        let a = s.plane_wave_potential_2d();
        assert!(a.is_real());
        assert!(a.hodge().is_real());
        assert!(a.reflect().is_real());
        assert!(!a.scale(&ComplexRational::i()).is_real());
        assert!(a.all_modes_have_k3(&Zero::zero()));
    }
}
