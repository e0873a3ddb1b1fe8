//! Shared helpers for the integration suites: seeded random descriptors and
//! exhaustive dimension-list enumeration.

use lefzeta::{MapDescriptor, SphereProduct};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random descriptor with `1..=max_factors` strictly increasing dimensions
/// drawn from `1..=max_dim` and eigenvalues in `-max_abs_eig..=max_abs_eig`.
pub fn random_descriptor(
    rng: &mut StdRng,
    max_factors: usize,
    max_dim: i64,
    max_abs_eig: i64,
) -> MapDescriptor {
    let l = rng.gen_range(1..=max_factors);
    let mut pool: Vec<i64> = (1..=max_dim).collect();
    pool.shuffle(rng);
    let mut dims: Vec<i64> = pool.into_iter().take(l).collect();
    dims.sort_unstable();
    let eigs: Vec<i64> = (0..l)
        .map(|_| rng.gen_range(-max_abs_eig..=max_abs_eig))
        .collect();
    MapDescriptor::new(SphereProduct::new(&dims).unwrap(), eigs).unwrap()
}

/// Every strictly increasing dimension list with `1..=max_factors` entries
/// drawn from `1..=max_dim`.
pub fn all_dim_lists(max_factors: usize, max_dim: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (1..=max_dim).map(|d| vec![d]).collect();
    while let Some(list) = stack.pop() {
        if list.len() <= max_factors {
            out.push(list.clone());
            if list.len() < max_factors {
                let last = *list.last().unwrap();
                for next in (last + 1)..=max_dim {
                    let mut extended = list.clone();
                    extended.push(next);
                    stack.push(extended);
                }
            }
        }
    }
    out.sort();
    out
}

/// Every eigenvalue pattern in `{-1, 1}^l`.
pub fn all_sign_patterns(l: usize) -> Vec<Vec<i64>> {
    (0..(1u32 << l))
        .map(|mask| {
            (0..l)
                .map(|i| if mask & (1 << i) == 0 { 1 } else { -1 })
                .collect()
        })
        .collect()
}

pub fn descriptor(dims: &[i64], eigs: &[i64]) -> MapDescriptor {
    MapDescriptor::from_parts(dims, eigs).unwrap()
}
