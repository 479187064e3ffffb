//! Named complexes and seeded random ramified complexes for experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::ramified_core;
use crate::complex::SimplicialComplex;
use crate::construct::{staircase_product, suspension};
use crate::generate::generate;

/// Number of vertices of the random pure 3-complexes.
pub const RANDOM_VERTICES: usize = 9;
/// Probability of keeping each 3-simplex.
pub const RANDOM_KEEP_PROBABILITY: f64 = 0.2;
/// Seed scan limit when collecting nonempty random cores.
const MAX_SEED_SCAN: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
}

/// Generator strings of the named corpus, in a fixed order.
pub const NAMED_GENERATORS: [&str; 9] = [
    "sphere_boundary:1",
    "sphere_boundary:2",
    "sphere_boundary:3",
    "torus7",
    "rp2_6",
    "wedge_spheres:2,2",
    "wedge_spheres:1,3",
    "cycle:5",
    "book:3",
];

/// The named corpus: the generator outputs plus a few constructed complexes.
pub fn named_corpus() -> Vec<NamedComplex> {
    let mut out: Vec<NamedComplex> = NAMED_GENERATORS
        .iter()
        .map(|name| NamedComplex {
            name: name.to_string(),
            complex: generate(name).expect("corpus generator"),
        })
        .collect();
    let c3 = generate("cycle:3").expect("corpus generator");
    out.push(NamedComplex {
        name: "staircase_torus_3x3".to_string(),
        complex: staircase_product(&c3, &c3).expect("nonempty factors"),
    });
    out.push(NamedComplex {
        name: "suspended_sphere_boundary:1".to_string(),
        complex: suspension(&generate("sphere_boundary:1").expect("corpus generator")),
    });
    out.push(NamedComplex {
        name: "solid_triangle".to_string(),
        complex: SimplicialComplex::from_index_facets([[0, 1, 2]]).expect("valid"),
    });
    out.push(NamedComplex {
        name: "two_points".to_string(),
        complex: SimplicialComplex::from_index_facets([[0], [1]]).expect("valid"),
    });
    out
}

/// Pure `dim`-complex on `vertices` vertices keeping each `dim`-simplex with
/// probability `p`; `None` when nothing is kept.
pub fn sample_pure_complex(
    rng: &mut impl Rng,
    vertices: usize,
    dim: usize,
    p: f64,
) -> Option<SimplicialComplex> {
    let facets: Vec<Vec<usize>> = combinations(vertices, dim + 1)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    if facets.is_empty() {
        return None;
    }
    Some(SimplicialComplex::from_index_facets(facets).expect("distinct vertices"))
}

/// Ramified core of one sampled pure complex; `None` when the core is empty
/// or has dropped below `dim`.
pub fn sample_ramified_core(
    rng: &mut impl Rng,
    vertices: usize,
    dim: usize,
    p: f64,
) -> Option<SimplicialComplex> {
    let k = sample_pure_complex(rng, vertices, dim, p)?;
    if k.dim() != dim as isize {
        return None;
    }
    let core = ramified_core(&k).expect("nonempty");
    (!core.is_empty()).then_some(core)
}

#[derive(Clone, Debug)]
pub struct RandomCore {
    pub seed: u64,
    pub complex: SimplicialComplex,
}

/// The first `count` nonempty ramified cores of random pure 3-complexes on
/// [`RANDOM_VERTICES`] vertices, scanning seeds `first_seed, first_seed+1, …`.
pub fn random_ramified_cores(count: usize, first_seed: u64) -> Vec<RandomCore> {
    random_cores_with(
        count,
        first_seed,
        RANDOM_VERTICES,
        3,
        RANDOM_KEEP_PROBABILITY,
    )
}

pub fn random_cores_with(
    count: usize,
    first_seed: u64,
    vertices: usize,
    dim: usize,
    p: f64,
) -> Vec<RandomCore> {
    let mut out = Vec::with_capacity(count);
    for seed in first_seed..first_seed.saturating_add(MAX_SEED_SCAN) {
        if out.len() == count {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(complex) = sample_ramified_core(&mut rng, vertices, dim, p) {
            out.push(RandomCore { seed, complex });
        }
    }
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_ramified;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(9, 4).len(), 126);
        assert_eq!(combinations(4, 4), vec![vec![0, 1, 2, 3]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn named_corpus_is_large_enough() {
        let corpus = named_corpus();
        assert!(corpus.len() >= 8);
        assert!(corpus.iter().all(|c| !c.complex.is_empty()));
    }

    #[test]
    fn random_cores_are_ramified_and_reproducible() {
        let a = random_ramified_cores(5, 0);
        let b = random_ramified_cores(5, 0);
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.seed, y.seed);
            assert_eq!(x.complex, y.complex);
            assert_eq!(x.complex.dim(), 3);
            assert!(classify_ramified(&x.complex).unwrap().is_ramified);
        }
    }
}
