//! Derived complexes: barycentric subdivision, suspension, staircase product.

use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::{LabelTable, NameAllocator, SimplicialComplex, APEX_PREFIX};
use crate::error::{Result, TopologyError};
use crate::simplex::{Simplex, VertexId};

/// A barycentric subdivision together with the face of the original complex
/// each new vertex is the barycenter of.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    barycenter_of: HashMap<VertexId, Simplex>,
    vertex_for: HashMap<Simplex, VertexId>,
}

impl Subdivision {
    /// Face of the original complex whose barycenter is `v`.
    pub fn carrier(&self, v: VertexId) -> Option<&Simplex> {
        self.barycenter_of.get(&v)
    }

    /// Vertex of the subdivision sitting at the barycenter of `face`.
    pub fn barycenter(&self, face: &Simplex) -> Option<VertexId> {
        self.vertex_for.get(face).copied()
    }
}

/// Assigns final ids after all names are known, since ids follow label order.
fn intern_named<K: Clone + std::hash::Hash + Eq>(
    keyed_names: Vec<(K, String)>,
) -> (Arc<LabelTable>, HashMap<K, VertexId>) {
    let table = Arc::new(
        LabelTable::new(keyed_names.iter().map(|(_, n)| n.clone()))
            .expect("generated labels are valid"),
    );
    let ids = keyed_names
        .into_iter()
        .map(|(k, n)| {
            let id = table.id(&n).expect("interned");
            (k, id)
        })
        .collect();
    (table, ids)
}

/// Vertices of `sd(K)` are the faces of `K`; simplices are chains of faces
/// under strict inclusion. A vertex `v` keeps its label, a higher face is
/// labelled `{a,b,…}`.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Result<Subdivision> {
    if k.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    let mut names = NameAllocator::default();
    let keyed: Vec<(Simplex, String)> = k
        .all_faces()
        .map(|f| {
            let base = if f.dim() == 0 {
                k.label(f.vertices()[0]).to_string()
            } else {
                k.format_simplex(f)
            };
            (f.clone(), names.allocate(base))
        })
        .collect();
    let (table, vertex_for) = intern_named(keyed);

    // Maximal chains of faces are the vertex orderings of each facet.
    let mut chains = Vec::new();
    for facet in k.facets() {
        for order in permutations(facet.vertices()) {
            let mut prefix = Vec::with_capacity(order.len());
            let mut chain = Vec::with_capacity(order.len());
            for v in order {
                prefix.push(v);
                let mut face = prefix.clone();
                face.sort_unstable();
                chain.push(vertex_for[&Simplex::from_sorted(face)]);
            }
            chains.push(Simplex::new(chain).expect("distinct faces"));
        }
    }
    let barycenter_of = vertex_for.iter().map(|(f, &v)| (v, f.clone())).collect();
    Ok(Subdivision {
        complex: SimplicialComplex::with_labels(table, chains),
        barycenter_of,
        vertex_for,
    })
}

fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Labels `(north, south)` for the apexes of a suspension of `k`, unused in `k`.
fn apex_labels(k: &SimplicialComplex) -> (String, String) {
    let taken = |l: &str| k.vertices().iter().any(|&v| k.label(v) == l);
    let mut round = 0usize;
    loop {
        let suffix = if round == 0 {
            String::new()
        } else {
            round.to_string()
        };
        let north = format!("{APEX_PREFIX}N{suffix}");
        let south = format!("{APEX_PREFIX}S{suffix}");
        if !taken(&north) && !taken(&south) {
            return (north, south);
        }
        round += 1;
    }
}

/// Join with two fresh apex vertices. Apex labels start with `~`, which is how
/// [`SimplicialComplex::is_apex`] recognizes them downstream.
pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    let (north, south) = apex_labels(k);
    let mut facets: Vec<Vec<String>> = Vec::with_capacity(2 * k.facets().len().max(1));
    if k.is_empty() {
        facets.push(vec![north]);
        facets.push(vec![south]);
    } else {
        for f in k.facet_labels() {
            for apex in [&north, &south] {
                let mut g = f.clone();
                g.push(apex.clone());
                facets.push(g);
            }
        }
    }
    SimplicialComplex::from_labeled_facets(facets).expect("suspension labels are valid")
}

/// Staircase triangulation of `|K| × |L|` using the label order of each factor.
/// Product vertices are labelled `(a,b)`.
pub fn staircase_product(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    if k.is_empty() || l.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    let mut names = NameAllocator::default();
    let mut keyed = Vec::new();
    for &a in &k.vertices() {
        for &b in &l.vertices() {
            let name = names.allocate(format!("({},{})", k.label(a), l.label(b)));
            keyed.push(((a, b), name));
        }
    }
    let (table, ids) = intern_named(keyed);

    let mut cells = Vec::new();
    for sigma in k.facets() {
        for tau in l.facets() {
            let (p, q) = (sigma.dim(), tau.dim());
            // Each monotone lattice path from (0,0) to (p,q) is one top simplex.
            for path in staircase_paths(p, q) {
                let verts = path
                    .into_iter()
                    .map(|(i, j)| ids[&(sigma.vertices()[i], tau.vertices()[j])])
                    .collect();
                cells.push(Simplex::new(verts).expect("distinct grid points"));
            }
        }
    }
    Ok(SimplicialComplex::with_labels(table, cells))
}

/// Monotone paths through the `(p+1) × (q+1)` grid using unit steps right or up.
fn staircase_paths(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        path: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        path.push((i, j));
        if i == p && j == q {
            out.push(path.clone());
        } else {
            if i < p {
                extend(i + 1, j, p, q, path, out);
            }
            if j < q {
                extend(i, j + 1, p, q, path, out);
            }
        }
        path.pop();
    }
    let mut out = Vec::new();
    extend(0, 0, p, q, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn subdivide_edge_and_triangle_boundary() {
        let sd = barycentric_subdivision(&cx(&[&[0, 1]])).unwrap();
        assert_eq!(sd.complex.f_vector(), vec![3, 2]);
        let mid = sd.complex.vertex_id("{0,1}").unwrap();
        assert_eq!(sd.carrier(mid).unwrap().len(), 2);

        let hexagon = barycentric_subdivision(&cx(&[&[0, 1], &[1, 2], &[0, 2]])).unwrap();
        assert_eq!(hexagon.complex.f_vector(), vec![6, 6]);
        assert!(hexagon.complex.is_connected());
    }

    #[test]
    fn subdivided_tetra_boundary_counts() {
        // Oracle: chains in the face poset of ∂Δ³, enumerated independently.
        // Vertices = 4+6+4 faces; edges = comparable pairs = 6·2 (v<e) + 4·3 (v<t) + 4·3 (e<t);
        // triangles = complete flags v<e<t = 4 triangles · 6 orderings.
        let sd = barycentric_subdivision(&cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]))
            .unwrap();
        assert_eq!(sd.complex.f_vector(), vec![14, 36, 24]);
    }

    #[test]
    fn suspension_of_two_points_is_a_square() {
        let s = suspension(&cx(&[&[0], &[1]]));
        assert_eq!(s.f_vector(), vec![4, 4]);
        assert!(s.facets().iter().all(|f| f.len() == 2));
        let apexes: Vec<_> = s.vertices().into_iter().filter(|&v| s.is_apex(v)).collect();
        assert_eq!(apexes.len(), 2);
    }

    #[test]
    fn iterated_suspension_gets_fresh_apexes() {
        let s2 = suspension(&suspension(&cx(&[&[0], &[1]])));
        assert_eq!(s2.f_vector(), vec![6, 12, 8]);
        assert_eq!(s2.vertices().iter().filter(|&&v| s2.is_apex(v)).count(), 4);
    }

    #[test]
    fn product_of_two_edges_is_a_split_square() {
        let p = staircase_product(&cx(&[&[0, 1]]), &cx(&[&[0, 1]])).unwrap();
        assert_eq!(p.f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn staircase_path_counts_are_binomial() {
        assert_eq!(staircase_paths(1, 1).len(), 2);
        assert_eq!(staircase_paths(2, 1).len(), 3);
        assert_eq!(staircase_paths(2, 2).len(), 6);
        assert_eq!(staircase_paths(0, 3).len(), 1);
    }
}
