//! Brute-force cross-checks assembled from explicit induced-map matrices.
//! Everything here recomputes an invariant along a route independent of the
//! closed formulas it validates, for use in tests and the `verify` command.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::homology::{HomologyError, MapDescriptor};
use crate::lefschetz::periodic_lefschetz;
use crate::numtheory::q_poly;
use crate::zeta::FactoredRationalFunction;

/// The diagonal matrix of the induced map on degree-`k` homology; the
/// diagonal lists the subset products in canonical (lexicographic subset)
/// order, so its size is the `k`-th Betti number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatrix {
    degree: usize,
    diagonal: Vec<BigInt>,
}

impl InducedMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[BigInt] {
        &self.diagonal
    }

    /// `trace(A^m)` for the diagonal matrix `A`.
    pub fn trace_of_power(&self, m: u64) -> BigInt {
        self.diagonal
            .iter()
            .fold(BigInt::zero(), |acc, entry| acc + entry.pow(m as u32))
    }

    /// `det(I - t A)` as linear factors `(1 - d t)` over the diagonal
    /// entries; evaluating at `t = 0` gives 1 by construction.
    pub fn char_factors(&self) -> Vec<BigInt> {
        self.diagonal.clone()
    }
}

pub fn induced_matrix(desc: &MapDescriptor, k: usize) -> Result<InducedMatrix, HomologyError> {
    Ok(InducedMatrix {
        degree: k,
        diagonal: desc.homology_spectrum(k)?,
    })
}

/// `Σ_k (-1)^k trace(f_{*k}^m)`: the alternating trace sum evaluated on the
/// explicit matrices. Must agree with the closed product formula.
pub fn lefschetz_via_traces(desc: &MapDescriptor, m: u64) -> BigInt {
    assert!(m >= 1, "iterate exponent must be positive");
    let n = desc.space().total_dimension();
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let matrix = induced_matrix(desc, k).expect("degree ranges over 0..=N");
        let trace = matrix.trace_of_power(m);
        if k % 2 == 0 {
            sum += trace;
        } else {
            sum -= trace;
        }
    }
    sum
}

/// `Π_k det(I - t f_{*k})^{(-1)^{k+1}}` assembled from the explicit matrices.
/// Must agree with the closed factored form of the zeta function.
pub fn zeta_via_charpoly(desc: &MapDescriptor) -> FactoredRationalFunction {
    let n = desc.space().total_dimension();
    let mut zeta = FactoredRationalFunction::one();
    for k in 0..=n {
        let matrix = induced_matrix(desc, k).expect("degree ranges over 0..=N");
        let exponent = if k % 2 == 0 { -1 } else { 1 };
        for entry in matrix.char_factors() {
            zeta.push_factor(entry, exponent);
        }
    }
    zeta
}

/// Comparison record between the definitional Möbius inversion for
/// `ell(f^m)` and the per-factor product `Π_i (-1)^{n_i} Q_m(a_i)`. The
/// product shortcut rests on an invalid sum/product interchange and fails
/// for two or more factors; the record exists to document where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QProductCheck {
    pub m: u64,
    pub inversion: BigInt,
    pub q_product: BigInt,
    pub agree: bool,
}

pub fn adjudicate_q_product(desc: &MapDescriptor, m: u64) -> QProductCheck {
    assert!(m >= 2, "the product shortcut is only stated for m >= 2");
    let inversion = periodic_lefschetz(desc, m);
    let mut q_product = BigInt::one();
    for (&dim, &a) in desc.space().dims().iter().zip(desc.eigs()) {
        let q = q_poly(a, m);
        q_product *= if dim % 2 == 0 { q } else { -q };
    }
    let agree = inversion == q_product;
    QProductCheck {
        m,
        inversion,
        q_product,
        agree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::MapDescriptor;
    use crate::lefschetz::lefschetz_number;
    use crate::zeta::zeta_closed;

    fn desc(dims: &[i64], eigs: &[i64]) -> MapDescriptor {
        MapDescriptor::from_parts(dims, eigs).unwrap()
    }

    #[test]
    fn induced_matrix_examples() {
        let d = desc(&[1, 2, 3], &[2, 3, 5]);
        // Degree 3: subsets {S^1, S^2} then {S^3} in lexicographic order.
        let m3 = induced_matrix(&d, 3).unwrap();
        assert_eq!(m3.diagonal(), &[BigInt::from(6), BigInt::from(5)]);
        let m0 = induced_matrix(&d, 0).unwrap();
        assert_eq!(m0.diagonal(), &[BigInt::one()]);
        let m6 = induced_matrix(&d, 6).unwrap();
        assert_eq!(m6.diagonal(), &[BigInt::from(30)]);
        assert!(induced_matrix(&d, 7).is_err());
    }

    #[test]
    fn matrix_sizes_match_betti_numbers() {
        let d = desc(&[1, 3, 4], &[-2, 0, 3]);
        let betti = d.space().betti_numbers();
        for k in 0..=d.space().total_dimension() {
            assert_eq!(induced_matrix(&d, k).unwrap().size() as u64, betti[k]);
        }
    }

    #[test]
    fn trace_route_examples() {
        // 1 + 2^2 + 3^2 + 6^2 over degrees 0, 2, 4, 6.
        assert_eq!(
            lefschetz_via_traces(&desc(&[2, 4], &[2, 3]), 2),
            BigInt::from(50)
        );
        assert_eq!(lefschetz_via_traces(&desc(&[1], &[1]), 7), BigInt::zero());
        assert_eq!(
            lefschetz_via_traces(&desc(&[1, 2, 3], &[-1, -1, 5]), 3),
            BigInt::zero()
        );
    }

    #[test]
    fn trace_route_matches_closed_product() {
        let d = desc(&[1, 2, 5], &[-2, 3, 2]);
        for m in 1..=20 {
            assert_eq!(
                lefschetz_via_traces(&d, m),
                lefschetz_number(&d, m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn charpoly_route_examples() {
        let via_matrix = zeta_via_charpoly(&desc(&[3], &[-2]));
        assert_eq!(via_matrix, zeta_closed(&desc(&[3], &[-2])));
        assert_eq!(
            zeta_via_charpoly(&desc(&[1, 2], &[-1, -1])),
            FactoredRationalFunction::one()
        );
        let d = desc(&[1, 2, 3], &[2, 3, 5]);
        assert_eq!(zeta_via_charpoly(&d), zeta_closed(&d));
    }

    #[test]
    fn q_product_agrees_for_single_factors() {
        for n in 1..=4i64 {
            for a in -3..=3i64 {
                let d = desc(&[n], &[a]);
                for m in 2..=20 {
                    let check = adjudicate_q_product(&d, m);
                    assert!(check.agree, "n = {n}, a = {a}, m = {m}: {check:?}");
                }
            }
        }
    }

    #[test]
    fn q_product_fails_for_two_factors() {
        let check = adjudicate_q_product(&desc(&[2, 4], &[2, 2]), 2);
        assert_eq!(check.inversion, BigInt::from(16));
        assert_eq!(check.q_product, BigInt::from(4));
        assert!(!check.agree);

        let trivial = adjudicate_q_product(&desc(&[2, 4], &[1, 1]), 3);
        assert_eq!(trivial.inversion, BigInt::zero());
        assert_eq!(trivial.q_product, BigInt::zero());
        assert!(trivial.agree);
    }
}
