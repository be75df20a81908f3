//! Cross-validation of independent computation routes: the alternating
//! sum against the multiplicity recursion, the shifting product formula
//! against plain character multiplication, and the closed-form rank-one
//! tensor rule.

use gwweyl_core::char_ring::{
    decompose_character, k0_mul, lambda_character, tensor_decompose, weyl_character,
    weyl_dimension, K0Class,
};
use gwweyl_core::freudenthal;
use gwweyl_core::rep_ring::{self, evaluate, express_in_generators, GenPoly};
use gwweyl_core::root_system::{CartanType, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::One;

fn rs(ty: &str) -> RootSystem {
    RootSystem::new(CartanType::parse(ty).unwrap()).unwrap()
}

#[test]
fn freudenthal_agreement_moderate() {
    let c2 = rs("C2");
    for a in 0..=4i64 {
        for b in 0..=4 - a {
            let x = c2.from_fundamental(&[a, b]).unwrap();
            assert_eq!(
                freudenthal::character(&c2, &x).unwrap(),
                weyl_character(&c2, &x).unwrap(),
                "C2 [{a},{b}]"
            );
        }
    }
    let c3 = rs("C3");
    for a in 0..=2i64 {
        for b in 0..=2 - a {
            let x = c3.from_fundamental(&[a, b, 1]).unwrap();
            assert_eq!(
                freudenthal::character(&c3, &x).unwrap(),
                weyl_character(&c3, &x).unwrap(),
                "C3 [{a},{b},1]"
            );
        }
    }
}

#[test]
fn clebsch_gordan_closed_form() {
    let a1 = rs("C1");
    for a in 0..=12i64 {
        for b in 0..=12i64 {
            let d = tensor_decompose(&a1, &Weight(vec![a]), &Weight(vec![b])).unwrap();
            let lo = (a - b).abs();
            let hi = a + b;
            let mut expected = K0Class::zero();
            let mut c = lo;
            while c <= hi {
                expected.add_mult(Weight(vec![c]), BigInt::one());
                c += 2;
            }
            assert_eq!(d, expected, "a={a} b={b}");
        }
    }
}

#[test]
fn tensor_dual_route() {
    // shifting formula vs character multiplication + decomposition
    let cases: &[(&str, &[(&[i64], &[i64])])] = &[
        ("C2", &[(&[1, 0], &[2, 1]), (&[2, 2], &[1, 1])]),
        ("C3", &[(&[1, 1, 0], &[1, 0, 0])]),
    ];
    for &(ty, pairs) in cases {
        let sys = rs(ty);
        for &(x, y) in pairs {
            let x = Weight(x.to_vec());
            let y = Weight(y.to_vec());
            let fast = tensor_decompose(&sys, &x, &y).unwrap();
            let slow = decompose_character(
                &sys,
                &weyl_character(&sys, &x)
                    .unwrap()
                    .mul(&weyl_character(&sys, &y).unwrap()),
            )
            .unwrap();
            assert_eq!(fast, slow, "{ty}");
        }
    }
}

#[test]
fn lambda_t_multiplicative_up_to_five() {
    let c3 = rs("C3");
    let a = K0Class::of_weight(Weight(vec![1, 0, 0]));
    let b = K0Class::of_weight(Weight(vec![1, 1, 0]));
    let sum = a.add(&b);
    for k in 0..=5usize {
        let lhs = lambda_character(&c3, &sum, k).unwrap();
        let mut rhs = K0Class::zero();
        for i in 0..=k {
            let la = lambda_character(&c3, &a, i).unwrap();
            let lb = lambda_character(&c3, &b, k - i).unwrap();
            rhs = rhs.add(&k0_mul(&c3, &la, &lb).unwrap());
        }
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn lambda_top_and_beyond() {
    // lambda^dim is one-dimensional with trivial determinant for Sp,
    // and lambda^{dim+1} vanishes
    let c2 = rs("C2");
    let v = K0Class::of_weight(Weight(vec![1, 0]));
    let top = lambda_character(&c2, &v, 4).unwrap();
    assert_eq!(top, K0Class::trivial(2));
    assert!(lambda_character(&c2, &v, 5).unwrap().is_zero());
}

#[test]
fn generator_roundtrip_degree_four_rank_three() {
    let c3 = rs("C3");
    let gens = rep_ring::sp_lambda(&c3).unwrap();
    let exponents: &[&[i64]] = &[
        &[0, 0, 0],
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
        &[2, 1, 0],
        &[1, 1, 1],
        &[0, 2, 2],
        &[4, 0, 0],
    ];
    let mut p = GenPoly::zero();
    for (i, e) in exponents.iter().enumerate() {
        let sign = if i % 3 == 0 { 1 } else { -1 };
        p.add_term(e.to_vec(), BigInt::from(sign * (i as i64 + 2)));
    }
    let class = evaluate(&c3, &gens, &p).unwrap();
    assert_eq!(express_in_generators(&c3, &class, &gens).unwrap(), p);
}

#[test]
fn tensor_dimension_conservation_larger() {
    let c3 = rs("C3");
    let x = Weight(vec![2, 1, 0]);
    let y = Weight(vec![1, 1, 1]);
    let d = tensor_decompose(&c3, &x, &y).unwrap();
    let total: BigInt = d
        .mults()
        .map(|(z, m)| m * weyl_dimension(&c3, z).unwrap())
        .sum();
    assert_eq!(
        total,
        weyl_dimension(&c3, &x).unwrap() * weyl_dimension(&c3, &y).unwrap()
    );
}
