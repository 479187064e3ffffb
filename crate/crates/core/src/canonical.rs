//! Canonical relabelling of complexes up to combinatorial isomorphism.
//!
//! Colour refinement on the vertex–facet incidence structure followed by an
//! exhaustive individualization search; the lexicographically smallest
//! relabelled facet list over all search leaves is the canonical form. The
//! search visits every leaf, so the form is exact. Its cost grows with the
//! automorphism group, which is fine for the small complexes it is used on.

use crate::complex::SimplicialComplex;

/// Label-free canonical form of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexIsoClass {
    pub vertex_count: usize,
    pub facets: Vec<Vec<u32>>,
}

struct Incidence {
    facets: Vec<Vec<usize>>,
    of_vertex: Vec<Vec<usize>>,
}

pub fn canonical_form(k: &SimplicialComplex) -> ComplexIsoClass {
    let verts = k.vertices();
    let local = |v: u32| verts.binary_search(&v).expect("vertex of complex");
    let facets: Vec<Vec<usize>> = k
        .facets()
        .iter()
        .map(|f| f.vertices().iter().map(|&v| local(v)).collect())
        .collect();
    let mut of_vertex = vec![Vec::new(); verts.len()];
    for (i, f) in facets.iter().enumerate() {
        for &v in f {
            of_vertex[v].push(i);
        }
    }
    let inc = Incidence { facets, of_vertex };
    let mut best: Option<Vec<Vec<u32>>> = None;
    search(&inc, refine(&inc, vec![0; verts.len()]), &mut best);
    ComplexIsoClass {
        vertex_count: verts.len(),
        facets: best.unwrap_or_default(),
    }
}

/// Splits colour classes by the multiset of facet neighbourhoods until stable.
/// New colours are ranks of signatures, and every signature starts with the old
/// colour, so the refinement is label-independent and order-preserving.
fn refine(inc: &Incidence, mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..colors.len())
            .map(|v| {
                let mut around: Vec<Vec<u32>> = inc.of_vertex[v]
                    .iter()
                    .map(|&f| {
                        let mut c: Vec<u32> = inc.facets[f]
                            .iter()
                            .filter(|&&w| w != v)
                            .map(|&w| colors[w])
                            .collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        let now = distinct.len();
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(inc: &Incidence, colors: Vec<u32>, best: &mut Option<Vec<Vec<u32>>>) {
    let n = colors.len();
    // Smallest colour shared by more than one vertex.
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let mut relabelled: Vec<Vec<u32>> = inc
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| colors[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            *best = Some(relabelled);
        }
        return;
    };
    let target = target as u32;
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let individualized: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| {
                if c > target || (c == target && w != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(inc, refine(inc, individualized), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn relabelled_copies_agree() {
        let a = cx(&[&[0, 1, 2], &[0, 2, 3], &[3, 4]]);
        let b = cx(&[&[7, 3, 9], &[9, 3, 1], &[1, 5]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let path = cx(&[&[0, 1], &[1, 2], &[2, 3]]);
        let star = cx(&[&[0, 1], &[0, 2], &[0, 3]]);
        assert_ne!(canonical_form(&path), canonical_form(&star));
        let c6 = cx(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        let two_c3 = cx(&[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }

    #[test]
    fn empty_complex() {
        let e = canonical_form(&SimplicialComplex::empty());
        assert_eq!(e.vertex_count, 0);
        assert!(e.facets.is_empty());
    }
}
