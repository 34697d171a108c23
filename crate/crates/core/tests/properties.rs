//! Randomized algebraic invariants with shrinking, 1000 cases per property.

use proptest::prelude::*;
use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use vorform::cyclotomic::{
    canonical_torsion_scalar, gcd_o, solve_rel_norm, torsion_units, CycInt, GaloisTag, KNum,
};
use vorform::enumerate::{short_vectors, EnumMode, EnumRequest};
use vorform::hermitian::{pairing, q_map, GMat, HermForm, OVec};
use vorform::rat::primitive_int_vector;
use vorform::serial::{
    form_from_dto, form_to_dto, matrix_from_dto, matrix_to_dto, vector_from_dto, vector_to_dto,
};
use vorform::{Int, Rat};

fn cyc() -> impl Strategy<Value = CycInt> {
    prop::array::uniform4(-12i64..=12).prop_map(CycInt::from_ints)
}

fn small_cyc() -> impl Strategy<Value = CycInt> {
    prop::array::uniform4(-2i64..=2).prop_map(CycInt::from_ints)
}

fn knum() -> impl Strategy<Value = KNum> {
    (-12i64..=12, -12i64..=12).prop_map(|(p, q)| KNum::from_ints(p, q))
}

fn rational() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

fn vector() -> impl Strategy<Value = OVec> {
    (small_cyc(), small_cyc())
        .prop_map(|(a, b)| OVec::new(a, b))
        .prop_filter("nonzero", |v| !v.is_zero())
}

fn form() -> impl Strategy<Value = HermForm> {
    (knum(), cyc(), knum()).prop_map(|(a, b, c)| HermForm::new(a, b.to_num(), c))
}

fn unit_matrix() -> impl Strategy<Value = GMat> {
    let factor = prop_oneof![
        small_cyc().prop_map(|x| {
            GMat::new([[CycInt::one(), x], [CycInt::zero(), CycInt::one()]]).unwrap()
        }),
        small_cyc().prop_map(|x| {
            GMat::new([[CycInt::one(), CycInt::zero()], [x, CycInt::one()]]).unwrap()
        }),
        (0usize..10, 0usize..10).prop_map(|(i, j)| {
            let u = torsion_units();
            GMat::new([
                [u[i].clone(), CycInt::zero()],
                [CycInt::zero(), u[j].clone()],
            ])
            .unwrap()
        }),
        Just(
            GMat::new([
                [CycInt::zero(), CycInt::one()],
                [-CycInt::one(), CycInt::zero()],
            ])
            .unwrap()
        ),
    ];
    prop::collection::vec(factor, 1..=3)
        .prop_map(|fs| fs.iter().fold(GMat::identity(), |acc, f| acc.mul(f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn galois_maps_are_ring_maps(a in cyc(), b in cyc(), tag in prop::sample::select(GaloisTag::ALL.to_vec())) {
        prop_assert_eq!((&a * &b).galois(tag), &a.galois(tag) * &b.galois(tag));
        prop_assert_eq!((&a + &b).galois(tag), &a.galois(tag) + &b.galois(tag));
    }

    #[test]
    fn galois_composition(a in cyc(), s in prop::sample::select(GaloisTag::ALL.to_vec()), t in prop::sample::select(GaloisTag::ALL.to_vec())) {
        prop_assert_eq!(a.galois(s).galois(t), a.galois(s.compose(t)));
    }

    #[test]
    fn norm_is_multiplicative_and_nonnegative(a in cyc(), b in cyc()) {
        let na = a.to_num().field_norm();
        let nb = b.to_num().field_norm();
        prop_assert_eq!((&a * &b).to_num().field_norm(), &na * &nb);
        prop_assert!(na >= Rat::zero());
        prop_assert_eq!(na.is_zero(), a.is_zero());
        prop_assert_eq!(a.rel_norm().norm(), na);
    }

    #[test]
    fn trace_form_is_twice_subfield_trace(a in cyc()) {
        let q = (&a * &a.conj()).to_num().trace_q();
        let two = Rat::from(Int::from(2));
        prop_assert_eq!(q.clone(), a.rel_norm().trace() * two);
        prop_assert!(q >= Rat::zero());
        prop_assert_eq!(q.is_zero(), a.is_zero());
    }

    #[test]
    fn field_inverse(a in cyc()) {
        prop_assume!(!a.is_zero());
        let x = a.to_num();
        let inv = x.inv().unwrap();
        prop_assert!((&x * &inv).is_one());
    }

    #[test]
    fn subfield_conjugation(a in knum(), b in knum()) {
        prop_assert_eq!((&a * &b).conj_k(), &a.conj_k() * &b.conj_k());
        let tr = &a + &a.conj_k();
        prop_assert!(tr.is_rational());
        prop_assert_eq!(tr.sqrt5_parts().0, a.trace());
        let nm = &a * &a.conj_k();
        prop_assert!(nm.is_rational());
        prop_assert_eq!(nm.sqrt5_parts().0, a.norm());
    }

    #[test]
    fn torsion_canonicalization(v in vector(), i in 0usize..10) {
        let tau = &torsion_units()[i];
        prop_assert_eq!(v.canonical(), v.mul_scalar(tau).canonical());
        prop_assert_eq!(v.canonical().canonical(), v.canonical());
        let c = v.canonical();
        let related = torsion_units().iter().any(|t| v.mul_scalar(t) == c);
        prop_assert!(related);
    }

    #[test]
    fn rank_one_points_detect_torsion(u in vector(), v in vector()) {
        prop_assume!(u.is_primitive() && v.is_primitive());
        prop_assert_eq!(q_map(&u) == q_map(&v), u.canonical() == v.canonical());
    }

    #[test]
    fn evaluation_is_the_pairing_with_the_rank_one_point(phi in form(), v in vector()) {
        prop_assert_eq!(phi.evaluate(&v), pairing(&phi, &q_map(&v)));
        prop_assert_eq!(pairing(&phi, &q_map(&v)), pairing(&q_map(&v), &phi));
    }

    #[test]
    fn evaluation_is_linear_in_the_form(phi in form(), psi in form(), v in vector(), r in rational()) {
        prop_assert_eq!((&phi + &psi).evaluate(&v), phi.evaluate(&v) + psi.evaluate(&v));
        prop_assert_eq!(phi.scale(&r).evaluate(&v), &r * &phi.evaluate(&v));
    }

    #[test]
    fn pullback_identity(phi in form(), g in unit_matrix(), v in vector()) {
        prop_assert_eq!(phi.act(&g).evaluate(&g.apply(&v)), phi.evaluate(&v));
    }

    #[test]
    fn matrix_inverse_roundtrip(g in unit_matrix()) {
        prop_assert!(g.mul(&g.inverse()).is_identity());
        prop_assert!(g.inverse().mul(&g).is_identity());
    }

    #[test]
    fn gcd_divides_both(x in prop::array::uniform4(-4i64..=4).prop_map(CycInt::from_ints),
                        y in prop::array::uniform4(-4i64..=4).prop_map(CycInt::from_ints)) {
        prop_assume!(!x.is_zero() || !y.is_zero());
        let g = gcd_o(&x, &y).unwrap();
        prop_assert!(!g.is_zero());
        let gn = g.to_num();
        for z in [&x, &y] {
            prop_assert!(z.to_num().div(&gn).unwrap().is_integral());
        }
        prop_assert_eq!(canonical_torsion_scalar(&g), g);
    }

    #[test]
    fn norm_equation_finds_the_planted_solution(x in small_cyc()) {
        prop_assume!(!x.is_zero());
        let sols = solve_rel_norm(&x.rel_norm()).unwrap();
        prop_assert!(sols.contains(&canonical_torsion_scalar(&x)));
        for s in &sols {
            prop_assert_eq!(s.rel_norm(), x.rel_norm());
        }
    }

    #[test]
    fn primitive_scaling(v in prop::collection::vec(rational(), 1..6)) {
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let p = primitive_int_vector(&v);
        let mut g = Int::zero();
        for x in &p {
            g = num::integer::gcd(g, x.clone());
        }
        prop_assert_eq!(g, Int::one());
        let (i, pivot) = v.iter().enumerate().find(|(_, x)| !x.is_zero()).unwrap();
        let ratio = Rat::from(p[i].clone()) / pivot;
        prop_assert!(ratio.is_positive());
        for (j, x) in v.iter().enumerate() {
            prop_assert_eq!(Rat::from(p[j].clone()), x * &ratio);
        }
    }

    #[test]
    fn shortest_vector_agrees_with_full_enumeration(seed in prop::array::uniform4(-2i64..=2), extra in 1i64..=3) {
        let n = 2usize;
        let mut gram = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s: i64 = (0..n).map(|l| seed[l * n + i] * seed[l * n + j]).sum();
                if i == j {
                    s += extra;
                }
                gram[i][j] = Rat::from(Int::from(s));
            }
        }
        let bound = gram[0][0].clone().max(gram[1][1].clone());
        let all = short_vectors(&EnumRequest { gram: gram.clone(), bound: bound.clone(), mode: EnumMode::AllBelow }).unwrap();
        let best = short_vectors(&EnumRequest { gram, bound, mode: EnumMode::ShortestNonzero }).unwrap();
        let min_all = all.iter().map(|s| s.value.clone()).min().unwrap();
        prop_assert!(best.iter().all(|s| s.value == min_all));
        let best_set: BTreeSet<Vec<Int>> = best.into_iter().map(|s| s.coords).collect();
        let min_set: BTreeSet<Vec<Int>> = all.into_iter().filter(|s| s.value == min_all).map(|s| s.coords).collect();
        prop_assert_eq!(best_set, min_set);
    }

    #[test]
    fn serialization_roundtrips(phi in form(), v in vector(), g in unit_matrix()) {
        prop_assert_eq!(form_from_dto(&form_to_dto(&phi)).unwrap(), phi);
        prop_assert_eq!(vector_from_dto(&vector_to_dto(&v)).unwrap(), v);
        prop_assert_eq!(matrix_from_dto(&matrix_to_dto(&g)).unwrap(), g);
    }
}
