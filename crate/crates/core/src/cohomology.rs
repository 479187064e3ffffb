//! Integer simplicial cohomology of complexes and pairs.
//!
//! Groups are computed straight from cochains: `H^k = ker δ_k / im δ_{k-1}`,
//! where `δ_k` is the transpose of the boundary `∂_{k+1}`. Because `ker δ_k`
//! is a direct summand of `C^k`, the free rank is
//! `dim C^k − rank δ_k − rank δ_{k-1}` and the torsion is read off the Smith
//! invariant factors of `δ_{k-1}`.
//!
//! Simplices are oriented by increasing vertex id, and the `i`-th face gets
//! sign `(−1)^i`. Absolute groups are reduced (the augmentation to the empty
//! simplex is part of the complex), so the empty complex has `H̃^{-1} = ℤ`.
//! Relative groups are unreduced. On compact polyhedra this simplicial theory
//! agrees with Čech cohomology.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{invariant_factors_i64, AbelianGroup, IntegerMatrix};
use crate::complex::SimplicialComplex;
use crate::error::{Result, TopologyError};
use crate::simplex::{Simplex, VertexId};

/// Ordered chain bases with orientation-convention boundary maps.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    bases: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    augmented: bool,
}

impl ChainComplexData {
    /// Augmented chain complex of `k`.
    pub fn reduced(k: &SimplicialComplex) -> Self {
        let bases = (0..=k.dim()).map(|d| k.faces(d).to_vec()).collect();
        Self::from_bases(bases, true)
    }

    /// Unaugmented chains of `k` with the faces of `l` quotiented out.
    pub fn relative(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Self> {
        let l = k.embed_subcomplex(l)?;
        let bases = (0..=k.dim())
            .map(|d| {
                k.faces(d)
                    .iter()
                    .filter(|s| !l.contains(s))
                    .cloned()
                    .collect()
            })
            .collect();
        Ok(Self::from_bases(bases, false))
    }

    /// Chains on the faces of `k` containing `v`: the relative complex of
    /// `k` modulo the faces missing `v`.
    fn local_at(k: &SimplicialComplex, v: VertexId) -> Self {
        let bases = (0..=k.dim())
            .map(|d| {
                k.faces(d)
                    .iter()
                    .filter(|s| s.contains_vertex(v))
                    .cloned()
                    .collect()
            })
            .collect();
        Self::from_bases(bases, false)
    }

    fn from_bases(bases: Vec<Vec<Simplex>>, augmented: bool) -> Self {
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self {
            bases,
            index,
            augmented,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.augmented
    }

    /// Highest degree with a (possibly empty) basis.
    pub fn top_degree(&self) -> isize {
        self.bases.len() as isize - 1
    }

    /// Basis of `C_d`; the augmentation degree `-1` has no listed simplex.
    pub fn basis(&self, d: isize) -> &[Simplex] {
        if d < 0 {
            return &[];
        }
        self.bases.get(d as usize).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, d: isize) -> usize {
        if d == -1 && self.augmented {
            1
        } else {
            self.basis(d).len()
        }
    }

    /// Dense `∂_d : C_d → C_{d-1}` as (rows, cols, row-major entries).
    fn boundary_entries(&self, d: isize) -> (usize, usize, Vec<i64>) {
        let (rows, cols) = (self.rank(d - 1), self.rank(d));
        let mut data = vec![0i64; rows * cols];
        if rows == 0 || cols == 0 {
            return (rows, cols, data);
        }
        if d == 0 {
            // Augmentation: every vertex maps to the empty simplex.
            data.fill(1);
            return (rows, cols, data);
        }
        let faces = &self.index[(d - 1) as usize];
        for (j, s) in self.basis(d).iter().enumerate() {
            for i in 0..s.len() {
                let face = s.facet_without(i).expect("d ≥ 1");
                if let Some(&r) = faces.get(&face) {
                    data[r * cols + j] = if i % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        (rows, cols, data)
    }

    pub fn boundary(&self, d: isize) -> IntegerMatrix {
        let (r, c, data) = self.boundary_entries(d);
        IntegerMatrix::from_i64(r, c, data)
    }

    /// `δ_d : C^d → C^{d+1}`, the transpose of `∂_{d+1}`.
    pub fn coboundary(&self, d: isize) -> IntegerMatrix {
        self.boundary(d + 1).transpose()
    }

    fn coboundary_factors(&self, d: isize) -> Vec<BigInt> {
        let (r, c, data) = self.boundary_entries(d + 1);
        let mut t = vec![0i64; r * c];
        for i in 0..r {
            for j in 0..c {
                t[j * r + i] = data[i * c + j];
            }
        }
        invariant_factors_i64(c, r, t)
    }

    fn lowest_degree(&self) -> isize {
        if self.augmented {
            -1
        } else {
            0
        }
    }

    /// `H^d` of the cochain complex.
    pub fn cohomology(&self, d: isize) -> AbelianGroup {
        self.profile(std::iter::once(d)).degree(d)
    }

    fn profile(&self, degrees: impl Iterator<Item = isize>) -> CohomologyProfile {
        let mut cache: HashMap<isize, Vec<BigInt>> = HashMap::new();
        let mut factors = |d: isize| -> Vec<BigInt> {
            cache
                .entry(d)
                .or_insert_with(|| self.coboundary_factors(d))
                .clone()
        };
        let mut groups = BTreeMap::new();
        for d in degrees {
            let group = if d < self.lowest_degree() || d > self.top_degree() {
                AbelianGroup::trivial()
            } else {
                let outgoing = factors(d).len();
                let incoming = factors(d - 1);
                AbelianGroup::from_invariant_factors(
                    self.rank(d) - outgoing - incoming.len(),
                    &incoming,
                )
            };
            groups.insert(d, group);
        }
        CohomologyProfile {
            reduced: self.augmented,
            groups,
        }
    }
}

/// Cohomology groups by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    reduced: bool,
    groups: BTreeMap<isize, AbelianGroup>,
}

impl CohomologyProfile {
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Group in degree `k`; trivial outside the computed range.
    pub fn degree(&self, k: isize) -> AbelianGroup {
        self.groups.get(&k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, &AbelianGroup)> {
        self.groups.iter().map(|(&k, g)| (k, g))
    }

    /// `Σ (−1)^k rank H^k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&k, g)| {
                let r = g.free_rank() as i64;
                if k.rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// True when every listed group is trivial.
    pub fn is_acyclic(&self) -> bool {
        self.groups.values().all(AbelianGroup::is_trivial)
    }
}

/// `H̃^k(K)` for `0 ≤ k ≤ dim K`.
pub fn reduced_cohomology(k: &SimplicialComplex) -> Result<CohomologyProfile> {
    if k.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    Ok(ChainComplexData::reduced(k).profile(0..=k.dim()))
}

/// `H̃^degree(K)` for any degree; the empty complex has `H̃^{-1} = ℤ`.
pub fn reduced_cohomology_in_degree(k: &SimplicialComplex, degree: isize) -> AbelianGroup {
    ChainComplexData::reduced(k).cohomology(degree)
}

/// `H^k(K, L)` for `0 ≤ k ≤ dim K`; `L` is matched to `K` by vertex labels.
pub fn relative_cohomology(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<CohomologyProfile> {
    Ok(ChainComplexData::relative(k, l)?.profile(0..=k.dim().max(0)))
}

/// `H^n(K, C_v)` with `n = dim K` and `C_v` the faces missing `v`; by
/// excision this is the local group `H^n(|K|, |K| ∖ {v})`.
pub fn local_cohomology_at(k: &SimplicialComplex, v: VertexId) -> Result<AbelianGroup> {
    if !k.contains(&Simplex::vertex(v)) {
        return Err(TopologyError::NotAFace(format!("vertex {v}")));
    }
    Ok(ChainComplexData::local_at(k, v).cohomology(k.dim()))
}

/// Free rank of `H^1(K)`.
pub fn first_betti(k: &SimplicialComplex) -> usize {
    reduced_cohomology_in_degree(k, 1).free_rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;
    use num_bigint::BigUint;

    fn cx(facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    fn z() -> AbelianGroup {
        AbelianGroup::free(1)
    }

    #[test]
    fn spheres() {
        for n in 1..=3 {
            let k = generate(&format!("sphere_boundary:{n}")).unwrap();
            let h = reduced_cohomology(&k).unwrap();
            for d in 0..=n as isize {
                let expected = if d == n as isize {
                    z()
                } else {
                    AbelianGroup::trivial()
                };
                assert_eq!(h.degree(d), expected, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let h = reduced_cohomology(&generate("rp2_6").unwrap()).unwrap();
        assert!(h.degree(0).is_trivial());
        assert!(h.degree(1).is_trivial());
        assert_eq!(
            h.degree(2),
            AbelianGroup::new(0, vec![BigUint::from(2u8)]).unwrap()
        );
    }

    #[test]
    fn simplex_is_acyclic_and_points_are_not() {
        let tri = cx(&[&[0, 1, 2]]);
        assert!(reduced_cohomology(&tri).unwrap().is_acyclic());
        let two = cx(&[&[0], &[1]]);
        assert_eq!(reduced_cohomology(&two).unwrap().degree(0), z());
        assert!(reduced_cohomology(&SimplicialComplex::empty()).is_err());
    }

    #[test]
    fn empty_complex_has_minus_one_class() {
        let e = SimplicialComplex::empty();
        assert_eq!(reduced_cohomology_in_degree(&e, -1), z());
        assert!(reduced_cohomology_in_degree(&e, 0).is_trivial());
        assert!(reduced_cohomology_in_degree(&cx(&[&[0]]), -1).is_trivial());
    }

    #[test]
    fn relative_interval_mod_endpoints() {
        let k = cx(&[&[0, 1]]);
        let l = cx(&[&[0], &[1]]);
        let h = relative_cohomology(&k, &l).unwrap();
        assert!(h.degree(0).is_trivial());
        assert_eq!(h.degree(1), z());
        assert!(!h.is_reduced());
    }

    #[test]
    fn relative_trivial_pairs() {
        let k = generate("torus7").unwrap();
        assert!(relative_cohomology(&k, &k).unwrap().is_acyclic());
        let absolute = relative_cohomology(&k, &SimplicialComplex::empty()).unwrap();
        assert_eq!(absolute.degree(0), z());
        assert_eq!(absolute.degree(1), AbelianGroup::free(2));
        assert_eq!(absolute.degree(2), z());
    }

    #[test]
    fn relative_rejects_non_subcomplex() {
        let k = cx(&[&[0, 1]]);
        let l = cx(&[&[0, 2]]);
        assert!(matches!(
            relative_cohomology(&k, &l),
            Err(TopologyError::NotSubcomplex(_))
        ));
    }

    #[test]
    fn local_groups() {
        let s2 = generate("sphere_boundary:2").unwrap();
        assert_eq!(local_cohomology_at(&s2, 0).unwrap(), z());

        let disk = cx(&[&[0, 1, 2]]);
        assert!(local_cohomology_at(&disk, 0).unwrap().is_trivial());

        let wedge = generate("wedge_spheres:2,2").unwrap();
        let hub = wedge.vertex_id("0").unwrap();
        assert_eq!(
            local_cohomology_at(&wedge, hub).unwrap(),
            AbelianGroup::free(2)
        );
        assert!(local_cohomology_at(&wedge, 999).is_err());
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(first_betti(&generate("cycle:6").unwrap()), 1);
        assert_eq!(first_betti(&generate("torus7").unwrap()), 2);
        assert_eq!(first_betti(&generate("sphere_boundary:3").unwrap()), 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for name in ["torus7", "rp2_6", "sphere_boundary:3", "book:3"] {
            let cc = ChainComplexData::reduced(&generate(name).unwrap());
            for d in 0..=cc.top_degree() {
                let composite = &cc.boundary(d) * &cc.boundary(d + 1);
                assert!(composite.is_zero(), "{name} d={d}");
            }
        }
    }
}
