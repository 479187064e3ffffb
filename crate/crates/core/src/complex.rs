//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertex labels are interned into a [`LabelTable`] whose ids follow the
//! lexicographic order of the labels, so every ordering derived from vertex
//! ids (orientation, staircase products, report sorting) is the label order.
//! Complexes derived from one another (links, stars, skeleta, cores) share
//! their parent's table.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Result, TopologyError};
use crate::simplex::{Simplex, VertexId};

/// Prefix reserved for suspension apex labels.
pub const APEX_PREFIX: char = '~';

#[derive(Debug, PartialEq, Eq)]
pub struct LabelTable {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl LabelTable {
    /// Builds a table from arbitrary names; duplicates are merged.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &names {
            validate_label(name)?;
        }
        names.sort();
        names.dedup();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as VertexId))
            .collect();
        Ok(Self { names, index })
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn id(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

pub fn validate_label(name: &str) -> Result<()> {
    if name.is_empty() || name.starts_with('#') || name.chars().any(char::is_whitespace) {
        return Err(TopologyError::InvalidLabel(name.to_string()));
    }
    Ok(())
}

/// Hands out unique names in request order, priming clashes with `'`.
#[derive(Default)]
pub(crate) struct NameAllocator {
    used: HashSet<String>,
}

impl NameAllocator {
    pub(crate) fn allocate(&mut self, base: String) -> String {
        let mut name = base;
        while self.used.contains(&name) {
            name.push('\'');
        }
        self.used.insert(name.clone());
        name
    }
}

#[derive(Debug)]
struct FaceLattice {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl FaceLattice {
    fn build(facets: &[Simplex]) -> Self {
        let top = facets.iter().map(Simplex::dim).max().map_or(0, |d| d + 1);
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); top];
        for facet in facets {
            for face in facet.faces() {
                sets[face.dim()].insert(face);
            }
        }
        let by_dim: Vec<Vec<Simplex>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<_> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let index = by_dim
            .iter()
            .map(|faces| {
                faces
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i))
                    .collect()
            })
            .collect();
        Self { by_dim, index }
    }
}

/// A finite abstract simplicial complex.
///
/// Immutable after construction; the face lattice is materialized on first
/// use and shared between clones.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Arc<LabelTable>,
    facets: Vec<Simplex>,
    lattice: Arc<OnceLock<FaceLattice>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facet_labels())
            .finish()
    }
}

/// Equality of labeled facet sets.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facet_labels() == other.facet_labels()
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self {
            labels: Arc::new(LabelTable::new(Vec::<String>::new()).expect("empty table")),
            facets: Vec::new(),
            lattice: Arc::default(),
        }
    }

    /// Builds a complex from labeled simplices. Simplices that are faces of
    /// other input simplices are dropped.
    pub fn from_labeled_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(Self::from_labeled_facets_reporting(facets)?.0)
    }

    /// Like [`Self::from_labeled_facets`], also returning the inputs that were
    /// discarded for being faces of other inputs (duplicates included).
    pub fn from_labeled_facets_reporting<I, F, S>(facets: I) -> Result<(Self, Vec<Vec<String>>)>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let named: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(Into::into).collect())
            .collect();
        let labels = Arc::new(LabelTable::new(named.iter().flatten().cloned())?);
        let mut simplices = Vec::with_capacity(named.len());
        for f in &named {
            let ids = f.iter().map(|n| labels.id(n).expect("interned")).collect();
            simplices.push(Simplex::new(ids).map_err(|e| match e {
                TopologyError::RepeatedVertex(_) => {
                    TopologyError::RepeatedVertex(format!("{{{}}}", f.join(",")))
                }
                other => other,
            })?);
        }
        let input_count = simplices.len();
        let (complex, dropped) = Self::with_labels_reporting(labels, simplices);
        debug_assert_eq!(input_count, complex.facets.len() + dropped.len());
        let dropped = dropped.iter().map(|s| complex.labels_of(s)).collect();
        Ok((complex, dropped))
    }

    /// Convenience constructor labelling vertices by their decimal index.
    pub fn from_index_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        Self::from_labeled_facets(
            facets
                .into_iter()
                .map(|f| f.into_iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        )
    }

    pub(crate) fn with_labels(labels: Arc<LabelTable>, simplices: Vec<Simplex>) -> Self {
        Self::with_labels_reporting(labels, simplices).0
    }

    fn with_labels_reporting(
        labels: Arc<LabelTable>,
        mut simplices: Vec<Simplex>,
    ) -> (Self, Vec<Simplex>) {
        simplices.sort_unstable_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        let mut facets: Vec<Simplex> = Vec::with_capacity(simplices.len());
        let mut dropped = Vec::new();
        let mut seen = HashSet::new();
        for s in simplices {
            if !seen.insert(s.clone()) {
                dropped.push(s);
                continue;
            }
            let covered = facets
                .iter()
                .take_while(|f| f.dim() > s.dim())
                .any(|f| s.is_face_of(f));
            if covered {
                dropped.push(s);
            } else {
                facets.push(s);
            }
        }
        facets.sort_unstable();
        (
            Self {
                labels,
                facets,
                lattice: Arc::default(),
            },
            dropped,
        )
    }

    fn lattice(&self) -> &FaceLattice {
        self.lattice
            .get_or_init(|| FaceLattice::build(&self.facets))
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximal facet dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.dim() as isize)
            .max()
            .unwrap_or(-1)
    }

    /// All facets share the top dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() as isize == d)
    }

    /// Faces of dimension `d`, sorted; empty outside `0..=dim`.
    pub fn faces(&self, d: isize) -> &[Simplex] {
        if d < 0 {
            return &[];
        }
        self.lattice()
            .by_dim
            .get(d as usize)
            .map_or(&[], Vec::as_slice)
    }

    /// Position of `s` in [`Self::faces`] of its dimension.
    pub fn face_index(&self, s: &Simplex) -> Option<usize> {
        self.lattice()
            .index
            .get(s.dim())
            .and_then(|m| m.get(s).copied())
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.face_index(s).is_some()
    }

    /// Every face, ordered by dimension and then lexicographically.
    pub fn all_faces(&self) -> impl Iterator<Item = &Simplex> {
        self.lattice().by_dim.iter().flatten()
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.faces(0).iter().map(|s| s.vertices()[0]).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.faces(0).len()
    }

    /// Face counts `f_0, f_1, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.lattice().by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn label(&self, v: VertexId) -> &str {
        self.labels.name(v)
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.labels
            .id(label)
            .filter(|&v| self.contains(&Simplex::vertex(v)))
    }

    pub fn labels_of(&self, s: &Simplex) -> Vec<String> {
        s.vertices()
            .iter()
            .map(|&v| self.label(v).to_string())
            .collect()
    }

    /// `{a,b,c}` rendering of a simplex.
    pub fn format_simplex(&self, s: &Simplex) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.labels_of(f)).collect()
    }

    /// Looks up a simplex of this complex by vertex labels.
    pub fn simplex<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| {
                self.labels
                    .id(l.as_ref())
                    .ok_or_else(|| TopologyError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(ids)?;
        self.require_face(&s)?;
        Ok(s)
    }

    fn require_face(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(TopologyError::NotAFace(self.describe_foreign(s)))
        }
    }

    fn describe_foreign(&self, s: &Simplex) -> String {
        if s.vertices()
            .iter()
            .all(|&v| (v as usize) < self.labels.len())
        {
            self.format_simplex(s)
        } else {
            s.to_string()
        }
    }

    /// Suspension apexes carry labels starting with [`APEX_PREFIX`].
    pub fn is_apex(&self, v: VertexId) -> bool {
        self.label(v).starts_with(APEX_PREFIX)
    }

    /// `lk(s, K) = { t : t ∩ s = ∅, t ∪ s ∈ K }`.
    pub fn link(&self, s: &Simplex) -> Result<Self> {
        self.require_face(s)?;
        let rests = self
            .facets
            .iter()
            .filter(|f| s.is_face_of(f))
            .filter_map(|f| f.difference(s))
            .collect();
        Ok(Self::with_labels(self.labels.clone(), rests))
    }

    /// Closed star: all cofaces of `s` together with their faces.
    pub fn star(&self, s: &Simplex) -> Result<Self> {
        self.require_face(s)?;
        let cofacets = self
            .facets
            .iter()
            .filter(|f| s.is_face_of(f))
            .cloned()
            .collect();
        Ok(Self::with_labels(self.labels.clone(), cofacets))
    }

    /// Faces of dimension at most `m`; empty when `m < 0`.
    pub fn skeleton(&self, m: isize) -> Self {
        if m < 0 {
            return Self::with_labels(self.labels.clone(), Vec::new());
        }
        let mut simplices: Vec<Simplex> = self.faces(m).to_vec();
        simplices.extend(
            self.facets
                .iter()
                .filter(|f| (f.dim() as isize) < m)
                .cloned(),
        );
        Self::with_labels(self.labels.clone(), simplices)
    }

    /// Subcomplex generated by the given simplices of this complex.
    pub fn subcomplex(&self, generators: Vec<Simplex>) -> Result<Self> {
        for g in &generators {
            self.require_face(g)?;
        }
        Ok(Self::with_labels(self.labels.clone(), generators))
    }

    /// Re-expresses `other` (matched by vertex labels) as a subcomplex of
    /// `self`, failing on the first face that is not present here.
    pub fn embed_subcomplex(&self, other: &SimplicialComplex) -> Result<Self> {
        if Arc::ptr_eq(&self.labels, &other.labels) {
            if let Some(bad) = other.facets.iter().find(|f| !self.contains(f)) {
                return Err(TopologyError::NotSubcomplex(other.format_simplex(bad)));
            }
            return Ok(other.clone());
        }
        let mut mapped = Vec::with_capacity(other.facets.len());
        for f in &other.facets {
            let ids: Option<Vec<VertexId>> = f
                .vertices()
                .iter()
                .map(|&v| self.labels.id(other.label(v)))
                .collect();
            let s = ids.map(|ids| Simplex::new(ids).expect("distinct labels"));
            match s {
                Some(s) if self.contains(&s) => mapped.push(s),
                _ => return Err(TopologyError::NotSubcomplex(other.format_simplex(f))),
            }
        }
        Ok(Self::with_labels(self.labels.clone(), mapped))
    }

    /// Connected components as sorted vertex lists, ordered by first vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let verts = self.vertices();
        let pos: HashMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for f in &self.facets {
            let first = pos[&f.vertices()[0]];
            for v in &f.vertices()[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, pos[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: HashMap<usize, Vec<VertexId>> = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(v);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_unstable();
        out
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of `dim`-faces containing each `(dim-1)`-face, in
    /// [`Self::faces`] order.
    pub fn coface_counts(&self, dim: isize) -> Vec<usize> {
        let mut counts = vec![0; self.faces(dim - 1).len()];
        for s in self.faces(dim) {
            for i in 0..s.len() {
                if let Some(face) = s.facet_without(i) {
                    counts[self.face_index(&face).expect("closed downward")] += 1;
                }
            }
        }
        counts
    }
}
