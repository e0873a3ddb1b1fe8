//! The sphere-product space `S^{n_1} x ... x S^{n_l}` with strictly increasing
//! dimensions, its rational homology, the eigenvalue spectra induced by the
//! basic eigenvalues of a self-map, and Lie-group presets.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("the dimension list must not be empty")]
    EmptyDims,
    #[error("sphere dimensions must be strictly increasing")]
    NonIncreasingDims,
    #[error("sphere dimensions must be positive, got {0}")]
    NonPositiveDim(i64),
    #[error("expected {dims} eigenvalues (one per sphere factor), got {eigs}")]
    EigenvalueCountMismatch { dims: usize, eigs: usize },
    #[error("homology degree {k} lies outside 0..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("preset dimensions must be distinct odd positive integers")]
    RepeatedOrEvenDim,
    #[error("{family}({parameter}) does not yield a nonempty product of odd spheres")]
    UnsupportedLieParameter { family: &'static str, parameter: u32 },
}

/// All subsets of `{0, .., l-1}` as index lists, in lexicographic order
/// (the empty subset first). This order is the canonical one used for
/// homology spectra and induced matrices.
pub(crate) fn index_subsets(l: usize) -> Vec<Vec<usize>> {
    fn visit(prefix: &mut Vec<usize>, l: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        let start = prefix.last().map_or(0, |&j| j + 1);
        for j in start..l {
            prefix.push(j);
            visit(prefix, l, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1usize << l.min(20));
    visit(&mut Vec::new(), l, &mut out);
    out
}

/// The product `S^{n_1} x ... x S^{n_l}` with `1 <= n_1 < ... < n_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphereProduct {
    dims: Vec<u32>,
}

impl SphereProduct {
    pub fn new(dims: &[i64]) -> Result<Self, HomologyError> {
        if dims.is_empty() {
            return Err(HomologyError::EmptyDims);
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 1) {
            return Err(HomologyError::NonPositiveDim(d));
        }
        if !dims.windows(2).all(|w| w[0] < w[1]) {
            return Err(HomologyError::NonIncreasingDims);
        }
        Ok(Self {
            dims: dims.iter().map(|&d| d as u32).collect(),
        })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Number of sphere factors `l`.
    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    /// `N = n_1 + ... + n_l`, the dimension of the product.
    pub fn total_dimension(&self) -> usize {
        self.dims.iter().map(|&d| d as usize).sum()
    }

    /// Betti numbers `b_0..b_N`: `b_k` counts the subsets of the sphere
    /// dimensions summing to `k`, the empty subset accounting for `b_0 = 1`.
    pub fn betti_numbers(&self) -> Vec<u64> {
        let mut betti = vec![0u64; self.total_dimension() + 1];
        for subset in index_subsets(self.factor_count()) {
            let degree: usize = subset.iter().map(|&i| self.dims[i] as usize).sum();
            betti[degree] += 1;
        }
        betti
    }

    fn describe(&self) -> String {
        self.dims
            .iter()
            .map(|d| format!("S^{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

impl std::fmt::Display for SphereProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A sphere product together with one integer basic eigenvalue per factor:
/// the input of every computation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapDescriptor {
    space: SphereProduct,
    eigs: Vec<i64>,
}

impl MapDescriptor {
    pub fn new(space: SphereProduct, eigs: Vec<i64>) -> Result<Self, HomologyError> {
        if eigs.len() != space.factor_count() {
            return Err(HomologyError::EigenvalueCountMismatch {
                dims: space.factor_count(),
                eigs: eigs.len(),
            });
        }
        Ok(Self { space, eigs })
    }

    /// Convenience constructor validating both the dimension list and the
    /// eigenvalue count.
    pub fn from_parts(dims: &[i64], eigs: &[i64]) -> Result<Self, HomologyError> {
        Self::new(SphereProduct::new(dims)?, eigs.to_vec())
    }

    pub fn space(&self) -> &SphereProduct {
        &self.space
    }

    pub fn eigs(&self) -> &[i64] {
        &self.eigs
    }

    /// `(degree, eigenvalue product)` for every subset of the factors, in
    /// lexicographic subset order; the first entry is `(0, 1)` for the
    /// empty subset.
    pub(crate) fn subset_terms(&self) -> Vec<(usize, BigInt)> {
        index_subsets(self.space.factor_count())
            .into_iter()
            .map(|subset| {
                let degree: usize = subset.iter().map(|&i| self.space.dims[i] as usize).sum();
                let product: BigInt = subset
                    .iter()
                    .fold(BigInt::one(), |acc, &i| acc * BigInt::from(self.eigs[i]));
                (degree, product)
            })
            .collect()
    }

    /// Eigenvalues of the induced map on degree-`k` homology: one subset
    /// product per subset of sphere dimensions summing to `k`, kept with
    /// multiplicity in canonical subset order. For `k = 0` this is `{1}`.
    pub fn homology_spectrum(&self, k: usize) -> Result<Vec<BigInt>, HomologyError> {
        let n = self.space.total_dimension();
        if k > n {
            return Err(HomologyError::KOutOfRange { k, n });
        }
        Ok(self
            .subset_terms()
            .into_iter()
            .filter(|(degree, _)| *degree == k)
            .map(|(_, product)| product)
            .collect())
    }
}

/// Spaces with the rational homology of a product of distinct odd-dimensional
/// spheres, as produced by the classical compact simple Lie groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieGroupPreset {
    /// `SU(n)`, `n >= 2`: sphere dimensions `3, 5, ..., 2n - 1`.
    SpecialUnitary(u32),
    /// `Sp(n)`, `n >= 1`: sphere dimensions `3, 7, ..., 4n - 1`.
    Symplectic(u32),
    /// An explicit list of distinct odd dimensions.
    CustomOdd(Vec<i64>),
}

impl LieGroupPreset {
    /// The sphere-product model of the group's rational homology.
    pub fn space(&self) -> Result<SphereProduct, HomologyError> {
        match self {
            LieGroupPreset::SpecialUnitary(n) => {
                if *n < 2 {
                    return Err(HomologyError::UnsupportedLieParameter {
                        family: "SU",
                        parameter: *n,
                    });
                }
                let dims: Vec<i64> = (2..=*n as i64).map(|k| 2 * k - 1).collect();
                SphereProduct::new(&dims)
            }
            LieGroupPreset::Symplectic(n) => {
                if *n < 1 {
                    return Err(HomologyError::UnsupportedLieParameter {
                        family: "Sp",
                        parameter: *n,
                    });
                }
                let dims: Vec<i64> = (1..=*n as i64).map(|k| 4 * k - 1).collect();
                SphereProduct::new(&dims)
            }
            LieGroupPreset::CustomOdd(list) => {
                if let Some(&d) = list.iter().find(|&&d| d < 1) {
                    return Err(HomologyError::NonPositiveDim(d));
                }
                let mut sorted = list.clone();
                sorted.sort_unstable();
                if sorted.iter().any(|d| d % 2 == 0) || sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(HomologyError::RepeatedOrEvenDim);
                }
                SphereProduct::new(&sorted)
            }
        }
    }

    /// Rank of the group: the number of sphere factors.
    pub fn rank(&self) -> Result<usize, HomologyError> {
        Ok(self.space()?.factor_count())
    }

    /// Dimension of the group: the sum of the sphere dimensions.
    pub fn group_dimension(&self) -> Result<usize, HomologyError> {
        Ok(self.space()?.total_dimension())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_space_examples() {
        assert!(SphereProduct::new(&[1, 2, 3]).is_ok());
        assert_eq!(
            SphereProduct::new(&[2, 2]),
            Err(HomologyError::NonIncreasingDims)
        );
        assert!(SphereProduct::new(&[3]).is_ok());
        assert_eq!(SphereProduct::new(&[]), Err(HomologyError::EmptyDims));
        assert_eq!(
            SphereProduct::new(&[0, 2]),
            Err(HomologyError::NonPositiveDim(0))
        );
        assert_eq!(
            SphereProduct::new(&[3, 2]),
            Err(HomologyError::NonIncreasingDims)
        );
    }

    #[test]
    fn total_dimension_examples() {
        assert_eq!(SphereProduct::new(&[1, 2, 3]).unwrap().total_dimension(), 6);
        assert_eq!(SphereProduct::new(&[3]).unwrap().total_dimension(), 3);
        assert_eq!(SphereProduct::new(&[2, 4]).unwrap().total_dimension(), 6);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(
            SphereProduct::new(&[1, 2, 3]).unwrap().betti_numbers(),
            vec![1, 1, 1, 2, 1, 1, 1]
        );
        assert_eq!(
            SphereProduct::new(&[2]).unwrap().betti_numbers(),
            vec![1, 0, 1]
        );
        // Subsets of {1, 2}: {}, {S^1}, {S^2}, {S^1, S^2}.
        assert_eq!(
            SphereProduct::new(&[1, 2]).unwrap().betti_numbers(),
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn betti_sum_and_palindrome() {
        for dims in [vec![1], vec![1, 2], vec![2, 5], vec![1, 2, 3], vec![2, 3, 4, 5]] {
            let space = SphereProduct::new(&dims).unwrap();
            let betti = space.betti_numbers();
            let total: u64 = betti.iter().sum();
            assert_eq!(total, 1u64 << space.factor_count(), "{dims:?}");
            let n = space.total_dimension();
            for k in 0..=n {
                assert_eq!(betti[k], betti[n - k], "{dims:?}, k = {k}");
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let desc = MapDescriptor::from_parts(&[1, 2, 3], &[2, 3, 5]).unwrap();
        // Degree 3 is hit by the subsets {S^3} and {S^1, S^2}; lexicographic
        // subset order lists {S^1, S^2} before {S^3}.
        let mut spectrum = desc.homology_spectrum(3).unwrap();
        spectrum.sort();
        assert_eq!(spectrum, vec![BigInt::from(5), BigInt::from(6)]);
        assert_eq!(desc.homology_spectrum(0).unwrap(), vec![BigInt::one()]);
        assert_eq!(desc.homology_spectrum(6).unwrap(), vec![BigInt::from(30)]);
        assert_eq!(
            desc.homology_spectrum(7),
            Err(HomologyError::KOutOfRange { k: 7, n: 6 })
        );
    }

    #[test]
    fn spectrum_cardinality_matches_betti() {
        let desc = MapDescriptor::from_parts(&[1, 3, 4], &[-2, 0, 3]).unwrap();
        let betti = desc.space().betti_numbers();
        for k in 0..=desc.space().total_dimension() {
            assert_eq!(
                desc.homology_spectrum(k).unwrap().len() as u64,
                betti[k],
                "k = {k}"
            );
        }
    }

    #[test]
    fn top_spectrum_is_eigenvalue_product() {
        let desc = MapDescriptor::from_parts(&[1, 2, 5], &[-2, 3, -4]).unwrap();
        let top = desc.homology_spectrum(8).unwrap();
        assert_eq!(top, vec![BigInt::from(24)]);
    }

    #[test]
    fn descriptor_validates_eigenvalue_count() {
        let space = SphereProduct::new(&[1, 2]).unwrap();
        assert_eq!(
            MapDescriptor::new(space, vec![1]),
            Err(HomologyError::EigenvalueCountMismatch { dims: 2, eigs: 1 })
        );
    }

    #[test]
    fn lie_presets() {
        assert_eq!(
            LieGroupPreset::SpecialUnitary(3).space().unwrap().dims(),
            &[3, 5]
        );
        assert_eq!(LieGroupPreset::Symplectic(2).space().unwrap().dims(), &[3, 7]);
        assert_eq!(
            LieGroupPreset::CustomOdd(vec![3, 3]).space(),
            Err(HomologyError::RepeatedOrEvenDim)
        );
        assert_eq!(
            LieGroupPreset::CustomOdd(vec![3, 4]).space(),
            Err(HomologyError::RepeatedOrEvenDim)
        );
        assert_eq!(
            LieGroupPreset::CustomOdd(vec![7, 3, 5]).space().unwrap().dims(),
            &[3, 5, 7]
        );
        assert_eq!(
            LieGroupPreset::SpecialUnitary(1).space(),
            Err(HomologyError::UnsupportedLieParameter {
                family: "SU",
                parameter: 1
            })
        );
    }

    #[test]
    fn lie_rank_and_dimension_identities() {
        for n in 2..=6u32 {
            let preset = LieGroupPreset::SpecialUnitary(n);
            assert_eq!(preset.rank().unwrap(), (n - 1) as usize);
            assert_eq!(preset.group_dimension().unwrap(), (n * n - 1) as usize);
        }
        for n in 1..=5u32 {
            let preset = LieGroupPreset::Symplectic(n);
            assert_eq!(preset.rank().unwrap(), n as usize);
            assert_eq!(preset.group_dimension().unwrap(), (n * (2 * n + 1)) as usize);
        }
    }

    #[test]
    fn subsets_are_lexicographic() {
        let subsets = index_subsets(3);
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![0, 1],
            vec![0, 1, 2],
            vec![0, 2],
            vec![1],
            vec![1, 2],
            vec![2],
        ];
        assert_eq!(subsets, expected);
    }
}
