use std::sync::Arc;

use hopfpow_core::group::{alternating_group, cyclic_group, symmetric_group, FiniteGroup};
use hopfpow_core::hopf::{
    bismash, convolve, dual, dual_group_algebra, eta_epsilon_matrix, group_algebra, opposite,
    tensor, verify_axioms, HopfAlgebraData, MatrixCache, PowerMatrixFamily,
};
use hopfpow_core::linalg::ExactMatrix;
use hopfpow_core::matched_pair::{double_pair, from_factorizable_symmetric, trivial_pair};
use hopfpow_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn small_algebras() -> Vec<HopfAlgebraData> {
    let s3 = symmetric_group(3).unwrap();
    let a4 = alternating_group(4).unwrap();
    vec![
        group_algebra(&s3).unwrap(),
        dual_group_algebra(&s3).unwrap(),
        group_algebra(&a4).unwrap(),
        bismash(&double_pair(&s3).unwrap()).unwrap(),
        bismash(&from_factorizable_symmetric(4).unwrap()).unwrap(),
        tensor(
            &dual_group_algebra(&s3).unwrap(),
            &group_algebra(&s3).unwrap(),
        )
        .unwrap(),
    ]
}

/// Permutation matrix of a map on basis indices: column `i` is `e_{f(i)}`.
fn map_matrix(n: usize, f: impl Fn(usize) -> usize) -> ExactMatrix {
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut c = vec![BigInt::zero(); n];
            c[f(i)] = BigInt::one();
            c
        })
        .collect();
    ExactMatrix::from_int_columns(n, &cols).unwrap()
}

#[test]
fn axioms_hold() {
    for h in small_algebras() {
        let r = verify_axioms(&h);
        assert!(r.all_passed(), "{}:\n{r}", h.provenance());
        assert!(r.checks.iter().all(|c| !c.sampled));
    }
}

#[test]
fn trivial_group_is_one_dimensional() {
    let c1 = cyclic_group(1).unwrap();
    let h = group_algebra(&c1).unwrap();
    assert_eq!(h.dim(), 1);
    assert_eq!(dual_group_algebra(&c1).unwrap().dim(), 1);
    assert_eq!(PowerMatrixFamily::new(h).exponent().unwrap(), 1);
}

#[test]
fn trivial_pair_is_a_tensor_product() {
    let f = symmetric_group(3).unwrap();
    let g = cyclic_group(4).unwrap();
    let b = bismash(&trivial_pair(&f, &g).unwrap()).unwrap();
    let t = tensor(
        &dual_group_algebra(&g).unwrap(),
        &group_algebra(&f).unwrap(),
    )
    .unwrap();
    let (nf, ng) = (f.order(), g.order());
    // bismash index a·|G| + x, tensor index x·|F| + a
    let to_t = |i: usize| (i % ng) * nf + i / ng;
    let dim = b.dim();
    for i in 0..dim {
        for j in 0..dim {
            let lhs: Vec<(usize, BigInt)> = b
                .mult(i, j)
                .iter()
                .map(|(k, c)| (to_t(*k), c.clone()))
                .collect();
            assert_eq!(lhs, t.mult(to_t(i), to_t(j)));
        }
        let mut lhs: Vec<(usize, usize, BigInt)> = b
            .comult(i)
            .iter()
            .map(|s| (to_t(s.left), to_t(s.right), s.coeff.clone()))
            .collect();
        lhs.sort();
        let rhs: Vec<(usize, usize, BigInt)> = t
            .comult(to_t(i))
            .iter()
            .map(|s| (s.left, s.right, s.coeff.clone()))
            .collect();
        assert_eq!(lhs, rhs);
        assert_eq!(b.counit()[i], t.counit()[to_t(i)]);
        assert_eq!(b.unit()[i], t.unit()[to_t(i)]);
    }
}

#[test]
fn duals_and_opposites() {
    for h in small_algebras() {
        assert!(dual(&dual(&h).unwrap()).unwrap().same_structure(&h));
    }
    let g = symmetric_group(4).unwrap();
    assert!(dual(&group_algebra(&g).unwrap())
        .unwrap()
        .same_structure(&dual_group_algebra(&g).unwrap()));
    let kg = dual_group_algebra(&g).unwrap();
    assert!(opposite(&kg).unwrap().same_structure(&kg));
    let d = bismash(&double_pair(&symmetric_group(3).unwrap()).unwrap()).unwrap();
    let op = PowerMatrixFamily::new(opposite(&d).unwrap());
    assert_eq!(op.exponent().unwrap(), 6);
}

#[test]
fn group_algebra_powers_are_power_maps() {
    for g in [
        symmetric_group(3).unwrap(),
        alternating_group(4).unwrap(),
        symmetric_group(4).unwrap(),
    ] {
        let fam = PowerMatrixFamily::new(group_algebra(&g).unwrap());
        let e = fam.exponent().unwrap();
        assert_eq!(e, g.exponent());
        for n in 1..=e {
            assert_eq!(
                *fam.power(n).unwrap(),
                map_matrix(g.order(), |x| g.pow(x, n)),
                "n = {n}"
            );
        }
        assert_eq!(
            *fam.antipode().unwrap(),
            map_matrix(g.order(), |x| g.inv(x))
        );
        let kgs = PowerMatrixFamily::new(dual_group_algebra(&g).unwrap());
        assert_eq!(
            *kgs.antipode().unwrap(),
            map_matrix(g.order(), |x| g.inv(x))
        );
    }
}

#[test]
fn eta_epsilon_shape() {
    let g = symmetric_group(3).unwrap();
    let h = group_algebra(&g).unwrap();
    let ee = eta_epsilon_matrix(&h);
    assert_eq!(ee.rank(), 1);
    assert_eq!(ee.mul(&ee).unwrap(), ee);
    for i in 0..6 {
        for j in 0..6 {
            let want = if i == g.identity() { q(1) } else { q(0) };
            assert_eq!(ee.get(i, j), want);
        }
    }
}

#[test]
fn unit_and_counit_are_preserved() {
    for h in small_algebras() {
        let fam = PowerMatrixFamily::new(h);
        let e = fam.exponent().unwrap();
        let unit = fam.algebra().unit_vector();
        let counit: Vec<BigRational> = fam
            .algebra()
            .counit()
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let eps = ExactMatrix::from_rational(1, fam.dim(), counit).unwrap();
        for n in 1..=e {
            let a = fam.power(n).unwrap();
            assert_eq!(a.mul_vec(&unit).unwrap(), unit);
            assert_eq!(eps.mul(&a).unwrap(), eps);
        }
        assert!(fam
            .antipode()
            .unwrap()
            .mul(&fam.antipode().unwrap())
            .unwrap()
            .is_identity());
        assert_eq!(fam.hopf_power(&unit, 7).unwrap(), unit);
        let v: Vec<BigRational> = (0..fam.dim()).map(|i| q(i as i64 - 3)).collect();
        assert_eq!(fam.hopf_power(&v, 1).unwrap(), v);
        let eps_v = fam.algebra().counit_of(&v);
        let trivial: Vec<BigRational> = unit.iter().map(|u| u * &eps_v).collect();
        assert_eq!(fam.hopf_power(&v, 0).unwrap(), trivial);
        assert_eq!(
            fam.hopf_power(&v, -1).unwrap(),
            fam.antipode().unwrap().mul_vec(&v).unwrap()
        );
    }
}

#[test]
fn convolution_adds_exponents() {
    for h in small_algebras() {
        let fam = PowerMatrixFamily::new(h);
        let e = fam.exponent().unwrap().min(8);
        for m in 1..e {
            for n in 1..=e - m {
                let c = convolve(
                    fam.algebra(),
                    &fam.power(m).unwrap(),
                    &fam.power(n).unwrap(),
                )
                .unwrap();
                assert_eq!(
                    c,
                    *fam.power(m + n).unwrap(),
                    "{} m={m} n={n}",
                    fam.algebra().provenance()
                );
            }
        }
    }
}

#[test]
fn dual_powers_are_transposes() {
    for h in small_algebras() {
        let fam = Arc::new(PowerMatrixFamily::new(h));
        let e = fam.exponent().unwrap();
        let direct = PowerMatrixFamily::new(dual(fam.algebra()).unwrap());
        let transposed = PowerMatrixFamily::dual_of(fam.clone()).unwrap();
        assert!(transposed.is_transposed());
        assert_eq!(direct.exponent().unwrap(), e);
        assert_eq!(*direct.eta_epsilon(), fam.eta_epsilon().transpose());
        for n in 1..=e {
            let t = fam.power(n).unwrap().transpose();
            assert_eq!(*direct.power(n).unwrap(), t);
            assert_eq!(*transposed.power(n).unwrap(), t);
        }
    }
}

#[test]
fn bismash_exponents() {
    let fam = PowerMatrixFamily::new(bismash(&from_factorizable_symmetric(4).unwrap()).unwrap());
    assert_eq!(fam.exponent().unwrap(), 12);
    for n in 1..12 {
        assert_ne!(*fam.power(n).unwrap(), *fam.eta_epsilon());
    }
    assert_eq!(*fam.power(12).unwrap(), *fam.eta_epsilon());
}

#[test]
fn exponent_cap() {
    let g: FiniteGroup = symmetric_group(4).unwrap();
    let fam = PowerMatrixFamily::new(group_algebra(&g).unwrap()).with_cap(10);
    assert_eq!(fam.exponent(), Err(Error::CapExceeded { cap: 10 }));
}

#[test]
fn cache_gives_identical_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let h = bismash(&double_pair(&symmetric_group(3).unwrap()).unwrap()).unwrap();
    let plain = PowerMatrixFamily::new(h.clone());
    let cold =
        PowerMatrixFamily::new(h.clone()).with_cache(Some(MatrixCache::new(dir.path()).unwrap()));
    for n in 1..=6 {
        assert_eq!(cold.power(n).unwrap(), plain.power(n).unwrap());
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, 6);
    let warm = PowerMatrixFamily::new(h).with_cache(Some(MatrixCache::new(dir.path()).unwrap()));
    assert_eq!(warm.exponent().unwrap(), 6);
    for n in 1..=6 {
        assert_eq!(warm.power(n).unwrap(), plain.power(n).unwrap());
    }
}

#[test]
fn labels_of_bismash_basis() {
    let h = bismash(&from_factorizable_symmetric(4).unwrap()).unwrap();
    assert_eq!(h.dim(), 24);
    assert_eq!(h.label(0), "d[()]#()");
    assert!(h.find_label("d[(1 3)(2 4)]#(2 3)").is_some());
    assert!(h.find_label("d[(1,3)(2,4)] # (2,3)").is_some());
    assert!(h.find_label("d[(1 2)]#()").is_none());
}

#[test]
fn oversized_tensor_is_refused() {
    let s4 = group_algebra(&symmetric_group(4).unwrap()).unwrap();
    let big = tensor(&s4, &s4).unwrap();
    assert!(matches!(tensor(&big, &s4), Err(Error::ResourceLimit(_))));
}
