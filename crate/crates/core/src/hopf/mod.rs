//! Hopf algebras from structure constants and their Hopf power maps.

mod algebra;
mod axioms;
mod cache;
mod powers;

pub use algebra::{
    bismash, dual, dual_group_algebra, group_algebra, opposite, tensor, AlgebraKind, ComultTerm,
    HopfAlgebraData, SparseVec, MAX_DIM,
};
pub use axioms::{verify_axioms, AxiomCheck, AxiomReport, FULL_SCAN_DIM, SAMPLE_SIZE};
pub use cache::MatrixCache;
pub use powers::{convolve, eta_epsilon_matrix, PowerMatrixFamily, DEFAULT_EXPONENT_CAP};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};
    use num_bigint::BigInt;

    #[test]
    fn small_exponents() {
        let s3 = symmetric_group(3).unwrap();
        let fam = PowerMatrixFamily::new(group_algebra(&s3).unwrap());
        assert_eq!(fam.exponent().unwrap(), 6);
        let fam = PowerMatrixFamily::new(dual_group_algebra(&s3).unwrap());
        assert_eq!(fam.exponent().unwrap(), 6);
        let c1 = cyclic_group(1).unwrap();
        let fam = PowerMatrixFamily::new(group_algebra(&c1).unwrap());
        assert_eq!(fam.exponent().unwrap(), 1);
        assert!(fam.antipode().unwrap().is_identity());
    }

    #[test]
    fn delta_of_identity_in_dual_c2() {
        let c2 = cyclic_group(2).unwrap();
        let h = dual_group_algebra(&c2).unwrap();
        let one = BigInt::from(1);
        assert_eq!(
            h.comult(0),
            &[
                ComultTerm {
                    left: 0,
                    right: 0,
                    coeff: one.clone()
                },
                ComultTerm {
                    left: 1,
                    right: 1,
                    coeff: one
                }
            ]
        );
    }

    #[test]
    fn dual_of_group_algebra() {
        let s3 = symmetric_group(3).unwrap();
        let kg = group_algebra(&s3).unwrap();
        assert!(dual(&kg)
            .unwrap()
            .same_structure(&dual_group_algebra(&s3).unwrap()));
        assert!(dual(&dual(&kg).unwrap()).unwrap().same_structure(&kg));
        let kgs = dual_group_algebra(&s3).unwrap();
        assert!(opposite(&kgs).unwrap().same_structure(&kgs));
        assert!(!opposite(&kg).unwrap().same_structure(&kg));
    }
}
