//! Per-face classification of manifold-like conditions.
//!
//! A point of `|K|` is a quasi `n`-manifold point (`n = dim K`) iff its
//! carrier `σ` has dimension `n`, or `H̃^{n − dim σ − 1}(lk(σ, K)) ≠ 0`. The
//! verdict is constant on open simplices, so faces are classified rather than
//! points. Quasi points are weak-manifold points, so the non-quasi set is an
//! upper bound for the set of non-weak-manifold points; weak-manifoldness
//! itself is never decided.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::algebra::AbelianGroup;
use crate::cohomology::{first_betti, reduced_cohomology_in_degree};
use crate::complex::SimplicialComplex;
use crate::construct::barycentric_subdivision;
use crate::error::{Result, TopologyError};
use crate::simplex::Simplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceClassification {
    pub face: Simplex,
    pub carrier_dim: usize,
    /// The link group the verdict was read from: `H̃^{n−dim σ−1}(lk σ)` for
    /// [`classify_quasi`], `H̃^{n−1}` of the barycenter link for
    /// [`classify_quasi_via_subdivision`].
    pub link_group: AbelianGroup,
    pub quasi: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiReport {
    pub n: usize,
    pub pure: bool,
    /// Every face, ordered by dimension and then lexicographically.
    pub faces: Vec<FaceClassification>,
    pub non_quasi_faces: Vec<Simplex>,
    /// Every non-quasi face is a vertex, so `K` is a quasi `n`-manifold off a
    /// finite set of vertices.
    pub off_finite: bool,
    pub off_set_description: String,
}

impl QuasiReport {
    fn assemble(k: &SimplicialComplex, faces: Vec<FaceClassification>) -> Self {
        let n = k.dim().max(0) as usize;
        let pure = k.is_pure();
        let non_quasi_faces: Vec<Simplex> = faces
            .iter()
            .filter(|c| !c.quasi)
            .map(|c| c.face.clone())
            .collect();
        let off_finite = non_quasi_faces.iter().all(|s| s.dim() == 0);
        let off_set_description = describe_off_set(k, n, pure, &non_quasi_faces);
        Self {
            n,
            pure,
            faces,
            non_quasi_faces,
            off_finite,
            off_set_description,
        }
    }

    pub fn is_quasi_everywhere(&self) -> bool {
        self.non_quasi_faces.is_empty()
    }

    /// Verdict for `face`, if it is a face of the classified complex.
    pub fn verdict(&self, face: &Simplex) -> Option<bool> {
        self.faces
            .binary_search_by(|c| c.face.dim().cmp(&face.dim()).then_with(|| c.face.cmp(face)))
            .ok()
            .map(|i| self.faces[i].quasi)
    }

    /// `(face, quasi)` pairs in report order.
    pub fn verdicts(&self) -> Vec<(Simplex, bool)> {
        self.faces
            .iter()
            .map(|c| (c.face.clone(), c.quasi))
            .collect()
    }
}

fn describe_off_set(k: &SimplicialComplex, n: usize, pure: bool, bad: &[Simplex]) -> String {
    let purity = if pure {
        String::new()
    } else {
        " (not pure: some facet has dimension below n)".to_string()
    };
    if bad.is_empty() {
        return format!("quasi {n}-manifold everywhere{purity}");
    }
    if bad.iter().all(|s| s.dim() == 0) {
        let apexes = bad.iter().all(|s| k.is_apex(s.vertices()[0]));
        let names: Vec<String> = bad.iter().map(|s| k.format_simplex(s)).collect();
        let kind = if apexes {
            "suspension apexes"
        } else {
            "vertices"
        };
        return format!(
            "quasi {n}-manifold off {} {kind}: {}{purity}",
            bad.len(),
            names.join(" ")
        );
    }
    let top = bad.iter().map(Simplex::dim).max().unwrap_or(0);
    format!(
        "not quasi on {} faces, including open {top}-simplices (infinite bad set){purity}",
        bad.len()
    )
}

fn faces_in_report_order(k: &SimplicialComplex) -> Vec<Simplex> {
    k.all_faces().cloned().collect()
}

/// Classifies every face through the link of its carrier.
pub fn classify_quasi(k: &SimplicialComplex) -> Result<QuasiReport> {
    if k.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    let n = k.dim();
    let faces = faces_in_report_order(k)
        .into_iter()
        .map(|face| {
            let d = face.dim() as isize;
            let link = k.link(&face).expect("face of k");
            let link_group = reduced_cohomology_in_degree(&link, n - d - 1);
            let quasi = d == n || !link_group.is_trivial();
            FaceClassification {
                face,
                carrier_dim: d as usize,
                link_group,
                quasi,
            }
        })
        .collect();
    Ok(QuasiReport::assemble(k, faces))
}

/// Classifies every face of `K` by the vertex link of its barycenter in the
/// barycentric subdivision, testing `H̃^{n−1} ≠ 0` there.
pub fn classify_quasi_via_subdivision(k: &SimplicialComplex) -> Result<QuasiReport> {
    let sd = barycentric_subdivision(k)?;
    let n = k.dim();
    let faces = faces_in_report_order(k)
        .into_iter()
        .map(|face| {
            let b = sd.barycenter(&face).expect("every face has a barycenter");
            let link = sd
                .complex
                .link(&Simplex::vertex(b))
                .expect("barycenter is a vertex");
            let link_group = reduced_cohomology_in_degree(&link, n - 1);
            let quasi = !link_group.is_trivial();
            FaceClassification {
                carrier_dim: face.dim(),
                face,
                link_group,
                quasi,
            }
        })
        .collect();
    Ok(QuasiReport::assemble(k, faces))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedReport {
    pub n: usize,
    pub pure: bool,
    pub is_ramified: bool,
    /// `(n−1)`-faces lying in at most one `n`-face.
    pub offending_cells: Vec<Simplex>,
    /// Number of `n`-cofaces → number of `(n−1)`-faces with that count.
    pub coface_histogram: BTreeMap<usize, usize>,
}

/// Every `(n−1)`-face must lie in at least two `n`-faces, with `K` pure; a
/// ramified 0-complex is at least two points.
pub fn classify_ramified(k: &SimplicialComplex) -> Result<RamifiedReport> {
    if k.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    let n = k.dim();
    let pure = k.is_pure();
    if n == 0 {
        return Ok(RamifiedReport {
            n: 0,
            pure,
            is_ramified: k.vertex_count() >= 2,
            offending_cells: Vec::new(),
            coface_histogram: BTreeMap::new(),
        });
    }
    let counts = k.coface_counts(n);
    let mut coface_histogram = BTreeMap::new();
    for &c in &counts {
        *coface_histogram.entry(c).or_insert(0) += 1;
    }
    let offending_cells: Vec<Simplex> = k
        .faces(n - 1)
        .iter()
        .zip(&counts)
        .filter(|(_, &c)| c <= 1)
        .map(|(s, _)| s.clone())
        .collect();
    Ok(RamifiedReport {
        n: n as usize,
        pure,
        is_ramified: pure && offending_cells.is_empty(),
        offending_cells,
        coface_histogram,
    })
}

/// Largest ramified `n`-subcomplex carried by the `n`-faces of `K`: repeatedly
/// discard `n`-faces having an `(n−1)`-face with a single `n`-coface.
pub fn ramified_core(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    let n = k.dim();
    let top: Vec<Simplex> = k.faces(n).to_vec();
    if n == 0 {
        let kept = if top.len() >= 2 { top } else { Vec::new() };
        return k.subcomplex(kept);
    }
    let mut count: HashMap<Simplex, usize> = HashMap::new();
    let mut cofaces: HashMap<Simplex, Vec<usize>> = HashMap::new();
    for (idx, cell) in top.iter().enumerate() {
        for i in 0..cell.len() {
            let face = cell.facet_without(i).expect("n ≥ 1");
            *count.entry(face.clone()).or_insert(0) += 1;
            cofaces.entry(face).or_default().push(idx);
        }
    }
    let mut alive = vec![true; top.len()];
    let mut queue: VecDeque<usize> = (0..top.len()).collect();
    while let Some(idx) = queue.pop_front() {
        if !alive[idx] {
            continue;
        }
        let cell = &top[idx];
        let free = (0..cell.len()).any(|i| count[&cell.facet_without(i).expect("n ≥ 1")] <= 1);
        if !free {
            continue;
        }
        alive[idx] = false;
        for i in 0..cell.len() {
            let face = cell.facet_without(i).expect("n ≥ 1");
            *count.get_mut(&face).expect("counted") -= 1;
            queue.extend(cofaces[&face].iter().copied().filter(|&j| alive[j]));
        }
    }
    let kept = top
        .into_iter()
        .zip(alive)
        .filter_map(|(c, a)| a.then_some(c))
        .collect();
    k.subcomplex(kept)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkRamification {
    Ramified,
    NotRamified,
    /// The ambient complex is not ramified, so there is nothing to check.
    NotApplicable,
}

/// Whether `lk(s, K)` is a ramified `(n − dim s − 1)`-complex.
pub fn check_link_ramified(k: &SimplicialComplex, s: &Simplex) -> Result<LinkRamification> {
    if !classify_ramified(k)?.is_ramified {
        // Still validate the face so misuse is reported.
        k.link(s)?;
        return Ok(LinkRamification::NotApplicable);
    }
    let n = k.dim();
    if s.dim() as isize >= n {
        if !k.contains(s) {
            return Err(TopologyError::NotAFace(k.format_simplex(s)));
        }
        return Err(TopologyError::TopDimensionalFace(k.format_simplex(s)));
    }
    let link = k.link(s)?;
    let expected = n - s.dim() as isize - 1;
    let ok = !link.is_empty() && link.dim() == expected && classify_ramified(&link)?.is_ramified;
    Ok(if ok {
        LinkRamification::Ramified
    } else {
        LinkRamification::NotRamified
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveClassification {
    /// Vertices of degree one.
    pub endpoints: usize,
    pub is_arc: bool,
    pub is_circle: bool,
    /// Always true: a finite connected complex of dimension ≤ 1 is a graph.
    pub is_graph: bool,
}

pub fn classify_curve(p: &SimplicialComplex) -> Result<CurveClassification> {
    if p.is_empty() {
        return Err(TopologyError::EmptyComplex);
    }
    if p.dim() > 1 {
        return Err(TopologyError::DimensionTooLarge {
            max: 1,
            found: p.dim(),
        });
    }
    let components = p.component_count();
    if components != 1 {
        return Err(TopologyError::Disconnected(components));
    }
    let degrees = p.coface_counts(1);
    let endpoints = degrees.iter().filter(|&&d| d == 1).count();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let b1 = first_betti(p);
    Ok(CurveClassification {
        endpoints,
        is_arc: b1 == 0 && max_degree <= 2 && endpoints == 2,
        is_circle: b1 == 1 && degrees.iter().all(|&d| d == 2),
        is_graph: true,
    })
}
