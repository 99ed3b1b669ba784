use std::sync::Arc;

use hopfpow_core::analysis::*;
use hopfpow_core::group::{alternating_group, symmetric_group, FiniteGroup};
use hopfpow_core::hopf::{
    bismash, dual, dual_group_algebra, group_algebra, opposite, tensor, PowerMatrixFamily,
};
use hopfpow_core::matched_pair::{double_pair, from_factorizable_symmetric};
use hopfpow_core::perm::Permutation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn groups() -> Vec<FiniteGroup> {
    vec![
        symmetric_group(3).unwrap(),
        alternating_group(4).unwrap(),
        symmetric_group(4).unwrap(),
    ]
}

fn double(g: &FiniteGroup) -> PowerMatrixFamily {
    PowerMatrixFamily::new(bismash(&double_pair(g).unwrap()).unwrap())
}

#[test]
fn group_algebra_oracle() {
    for g in groups().into_iter().chain([symmetric_group(5).unwrap()]) {
        let fam = PowerMatrixFamily::new(group_algebra(&g).unwrap());
        for n in 1..=g.exponent() {
            assert_eq!(
                tpd(&fam, n).unwrap(),
                group_algebra_tpd_oracle(&g, n),
                "{} n={n}",
                g.name()
            );
        }
    }
    let s3 = symmetric_group(3).unwrap();
    assert_eq!(group_algebra_tpd_oracle(&s3, 2), 4);
    assert_eq!(group_algebra_tpd_oracle(&s3, 6), 6);
    assert_eq!(
        group_algebra_tpd_oracle(&symmetric_group(4).unwrap(), 2),
        13
    );
}

#[test]
fn dual_delta_oracle() {
    let g = symmetric_group(4).unwrap();
    let fam = PowerMatrixFamily::new(dual_group_algebra(&g).unwrap());
    for x in 0..g.order() {
        let mut v = vec![q(0); g.order()];
        v[x] = q(1);
        assert_eq!(
            hopf_order(&fam, &v).unwrap(),
            dual_delta_order_oracle(&g, x),
            "{}",
            g.label(x)
        );
    }
    let four_cycle = g
        .index_of(&Permutation::parse("(1 2 3 4)", 4).unwrap())
        .unwrap();
    assert_eq!(dual_delta_order_oracle(&g, four_cycle), 2);
    assert_eq!(dual_delta_order_oracle(&g, g.identity()), 12);
}

#[test]
fn integrals_have_order_exponent() {
    for g in groups() {
        let kg = PowerMatrixFamily::new(group_algebra(&g).unwrap());
        assert_eq!(
            hopf_order(&kg, &vec![q(1); g.order()]).unwrap(),
            g.exponent()
        );
        let kgs = PowerMatrixFamily::new(dual_group_algebra(&g).unwrap());
        let mut delta_e = vec![q(0); g.order()];
        delta_e[g.identity()] = q(1);
        assert_eq!(hopf_order(&kgs, &delta_e).unwrap(), g.exponent());
        assert_eq!(hopf_order(&kgs, &kgs.algebra().unit_vector()).unwrap(), 1);
    }
}

#[test]
fn tpd_from_rank_and_dual() {
    let s3 = symmetric_group(3).unwrap();
    let fams = vec![
        PowerMatrixFamily::new(group_algebra(&s3).unwrap()),
        double(&s3),
        PowerMatrixFamily::new(bismash(&from_factorizable_symmetric(4).unwrap()).unwrap()),
    ];
    for fam in &fams {
        let e = fam.exponent().unwrap();
        let d = PowerMatrixFamily::new(dual(fam.algebra()).unwrap());
        for n in 1..e {
            let t = tpd(fam, n).unwrap();
            assert_eq!(t, fam.dim() + 1 - fam.power(n).unwrap().rank());
            assert_eq!(t, tpd(&d, n).unwrap());
            assert_eq!(t, tpd_pair(fam, n, n).unwrap());
            assert_eq!(tpd_pair(fam, 1, n).unwrap(), 1);
            let tps = tps_basis(fam, n).unwrap();
            assert_eq!(tps.dim(), t);
            assert!(tps.contains(&fam.algebra().unit_vector()).unwrap());
        }
        assert_eq!(tps_basis(fam, 1).unwrap().dim(), 1);
        assert_eq!(tps_basis(fam, e).unwrap().dim(), fam.dim());
    }
}

#[test]
fn both_intersection_routes_agree() {
    for fam in [
        double(&symmetric_group(3).unwrap()),
        PowerMatrixFamily::new(bismash(&from_factorizable_symmetric(4).unwrap()).unwrap()),
    ] {
        let e = fam.exponent().unwrap();
        let spaces: Vec<TpsSpace> = (1..e).map(|n| TpsSpace::new(&fam, n).unwrap()).collect();
        let table = tpd_table(&fam).unwrap();
        for a in &spaces {
            for b in &spaces {
                let k = a.meet_dim_by_kernels(b).unwrap();
                assert_eq!(k, a.meet_dim_by_annihilators(b).unwrap());
                assert_eq!(k, table.get(a.n, b.n));
            }
        }
    }
}

#[test]
fn power_rule() {
    let s3 = symmetric_group(3).unwrap();
    let s4 = symmetric_group(4).unwrap();
    let holds = [
        PowerMatrixFamily::new(group_algebra(&s4).unwrap()),
        PowerMatrixFamily::new(dual_group_algebra(&s4).unwrap()),
        PowerMatrixFamily::new(
            tensor(
                &dual_group_algebra(&s3).unwrap(),
                &group_algebra(&s3).unwrap(),
            )
            .unwrap(),
        ),
    ];
    for fam in &holds {
        assert!(
            check_power_rule(fam).unwrap().holds(),
            "{}",
            fam.algebra().provenance()
        );
    }
    let fails = [
        double(&s3),
        PowerMatrixFamily::new(bismash(&from_factorizable_symmetric(4).unwrap()).unwrap()),
    ];
    for fam in &fails {
        let r = check_power_rule(fam).unwrap();
        assert!(!r.holds(), "{}", fam.algebra().provenance());
        let (m, n) = r.failures[0];
        let prod = fam.power(n).unwrap().mul(&fam.power(m).unwrap()).unwrap();
        assert_ne!(prod, *fam.power_mod((m * n) as i64).unwrap());
    }
}

#[test]
fn orders_from_tables() {
    let s4 = PowerMatrixFamily::new(group_algebra(&symmetric_group(4).unwrap()).unwrap());
    let t = tpd_table(&s4).unwrap();
    assert!(!has_element_of_order(&t, 10).unwrap().realizable);
    assert!(has_element_of_order(&t, 6).unwrap().realizable);
    let divisors: Vec<usize> = (1..=12).filter(|d| 12 % d == 0).collect();
    assert_eq!(
        realizable_orders(&t)
            .realizable
            .into_iter()
            .collect::<Vec<_>>(),
        divisors
    );
    for n in 1..12 {
        assert_eq!(t.get(n, n) == 1, n.gcd(&12) == 1);
    }
    let d = tpd_table(&double(&symmetric_group(3).unwrap())).unwrap();
    let r = realizable_orders(&d);
    assert!(r.realizable.contains(&4));
    assert!(r.realizable.contains(&1) && r.realizable.contains(&6));
}

#[test]
fn two_and_three_in_s5() {
    let g = symmetric_group(5).unwrap();
    let fam = PowerMatrixFamily::new(group_algebra(&g).unwrap());
    let at = |c: &str| g.index_of(&Permutation::parse(c, 5).unwrap()).unwrap();
    let mut h = vec![q(0); 120];
    h[at("(1 2)(3 4 5)")] = q(1);
    h[at("(3 4 5)")] = q(-1);
    h[at("(3 5 4)")] = q(1);
    h[at("(1 2)(3 5 4)")] = q(-1);
    let meet = tps_basis(&fam, 2)
        .unwrap()
        .intersection(&tps_basis(&fam, 3).unwrap())
        .unwrap();
    assert!(meet.contains(&h).unwrap());
    assert!(meet.contains(&fam.algebra().unit_vector()).unwrap());
    assert!(tpd_pair(&fam, 2, 3).unwrap() > 1);
    assert_eq!(hopf_order(&fam, &h).unwrap(), 2);
}

#[test]
fn symmetries() {
    for fam in [
        double(&symmetric_group(3).unwrap()),
        PowerMatrixFamily::new(bismash(&from_factorizable_symmetric(4).unwrap()).unwrap()),
    ] {
        let t = tpd_table(&fam).unwrap();
        let r = check_symmetries(&fam, &t).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.dual_direct);
    }
    let da4 = double(&alternating_group(4).unwrap());
    let t = tpd_table(&da4).unwrap();
    assert!(check_antidiagonal(&t).is_empty());
    assert_ne!(t.get(2, 2), t.get(2, 4));
    assert!(!check_reflection(&t).is_empty());
    for g in groups() {
        let kgs = PowerMatrixFamily::new(dual_group_algebra(&g).unwrap());
        assert!(check_reflection(&tpd_table(&kgs).unwrap()).is_empty());
    }
}

#[test]
fn opposite_swaps_powers() {
    let fam = double(&symmetric_group(3).unwrap());
    let op = PowerMatrixFamily::new(opposite(fam.algebra()).unwrap());
    assert_eq!(tps_basis(&fam, 2).unwrap(), tps_basis(&op, 4).unwrap());
    assert!(check_opposite_tps(&fam, &op).unwrap().is_empty());
}

#[test]
fn coprime_powers_of_doubles() {
    for g in [symmetric_group(3).unwrap(), alternating_group(4).unwrap()] {
        let r = check_coprime_double(&g).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.checked.iter().any(|t| t.0 == 5));
    }
}

#[test]
fn tensor_formula() {
    let s3 = symmetric_group(3).unwrap();
    let kg = Arc::new(PowerMatrixFamily::new(group_algebra(&s3).unwrap()));
    let kgs = PowerMatrixFamily::new(dual_group_algebra(&s3).unwrap());
    let t = PowerMatrixFamily::new(tensor(kgs.algebra(), kg.algebra()).unwrap());
    for n in 2..=5 {
        let r = check_tensor_formula(&kgs, &kg, &t, n).unwrap();
        assert!(r.holds(), "{r:?}");
    }
    assert_eq!(check_tensor_formula(&kgs, &kg, &t, 2).unwrap().actual, 28);
    let kk = PowerMatrixFamily::new(tensor(kg.algebra(), kg.algebra()).unwrap());
    let r = check_tensor_formula(&kg, &kg, &kk, 2).unwrap();
    assert_eq!((r.expected, r.actual), (28, 28));
}

#[test]
fn zero_vector_has_no_order() {
    let fam = PowerMatrixFamily::new(group_algebra(&symmetric_group(3).unwrap()).unwrap());
    assert!(hopf_order(&fam, &vec![q(0); 6]).is_err());
    assert!(hopf_order(&fam, &vec![q(0); 5]).is_err());
}
