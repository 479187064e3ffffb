//! Machine-readable analysis reports and their text rendering.
//!
//! Every list is sorted and every map is ordered, so a report serializes to
//! the same bytes on every run.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::AbelianGroup;
use crate::classify::{classify_quasi, classify_ramified, QuasiReport, RamifiedReport};
use crate::cohomology::{reduced_cohomology, CohomologyProfile};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::obstruction::{curve_product_obstruction, ObstructionCertificate};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ComplexSummary {
    pub dimension: isize,
    pub vertices: usize,
    pub face_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub components: usize,
    pub pure: bool,
}

impl ComplexSummary {
    pub fn of(k: &SimplicialComplex) -> Self {
        Self {
            dimension: k.dim(),
            vertices: k.vertex_count(),
            face_vector: k.f_vector(),
            euler_characteristic: k.euler_characteristic(),
            components: k.component_count(),
            pure: k.is_pure(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeGroup {
    pub degree: isize,
    pub group: AbelianGroup,
    pub display: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologySection {
    pub reduced: bool,
    pub groups: Vec<DegreeGroup>,
}

impl CohomologySection {
    pub fn of(profile: &CohomologyProfile) -> Self {
        Self {
            reduced: profile.is_reduced(),
            groups: profile
                .iter()
                .map(|(degree, g)| DegreeGroup {
                    degree,
                    group: g.clone(),
                    display: g.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceEntry {
    pub face: Vec<String>,
    pub carrier_dim: usize,
    pub link_group: AbelianGroup,
    pub quasi: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiSection {
    pub n: usize,
    pub pure: bool,
    pub quasi_everywhere: bool,
    pub off_finite: bool,
    pub off_set_description: String,
    pub non_quasi_faces: Vec<Vec<String>>,
    pub faces: Vec<FaceEntry>,
}

impl QuasiSection {
    pub fn of(k: &SimplicialComplex, r: &QuasiReport) -> Self {
        Self {
            n: r.n,
            pure: r.pure,
            quasi_everywhere: r.is_quasi_everywhere(),
            off_finite: r.off_finite,
            off_set_description: r.off_set_description.clone(),
            non_quasi_faces: r.non_quasi_faces.iter().map(|s| k.labels_of(s)).collect(),
            faces: r
                .faces
                .iter()
                .map(|c| FaceEntry {
                    face: k.labels_of(&c.face),
                    carrier_dim: c.carrier_dim,
                    link_group: c.link_group.clone(),
                    quasi: c.quasi,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RamifiedSection {
    pub n: usize,
    pub pure: bool,
    pub is_ramified: bool,
    pub offending_cells: Vec<Vec<String>>,
    /// Coface count → number of `(n−1)`-faces with that count.
    pub coface_histogram: BTreeMap<usize, usize>,
}

impl RamifiedSection {
    pub fn of(k: &SimplicialComplex, r: &RamifiedReport) -> Self {
        Self {
            n: r.n,
            pure: r.pure,
            is_ramified: r.is_ramified,
            offending_cells: r.offending_cells.iter().map(|s| k.labels_of(s)).collect(),
            coface_histogram: r.coface_histogram.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReasonEntry {
    pub check: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisSection {
    pub connected: bool,
    pub components: usize,
    pub pure: bool,
    pub off_finite: bool,
    pub non_quasi_faces: Vec<Vec<String>>,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuspensionSection {
    pub base_dimension: isize,
    pub base_connected: bool,
    pub base_quasi_everywhere: bool,
    pub base_non_quasi_faces: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSection {
    pub curves: usize,
    pub dimension: isize,
    pub verdict: String,
    pub b1: Option<usize>,
    pub hypotheses: HypothesisSection,
    pub reason: Vec<ReasonEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suspension_of: Option<SuspensionSection>,
}

impl CertificateSection {
    pub fn of(c: &ObstructionCertificate) -> Self {
        let t = &c.hypothesis_trace;
        Self {
            curves: c.n,
            dimension: c.dimension,
            verdict: c.verdict.to_string(),
            b1: c.b1,
            hypotheses: HypothesisSection {
                connected: t.connected,
                components: t.components,
                pure: t.pure,
                off_finite: t.off_finite,
                non_quasi_faces: t.non_quasi_faces.clone(),
                assumptions: t.assumptions.clone(),
            },
            reason: c
                .reason
                .iter()
                .map(|s| ReasonEntry {
                    check: s.check.name(),
                    holds: s.holds,
                    detail: s.detail.clone(),
                })
                .collect(),
            suspension_of: c.suspension_of.as_ref().map(|b| SuspensionSection {
                base_dimension: b.dimension,
                base_connected: b.connected,
                base_quasi_everywhere: b.quasi_everywhere,
                base_non_quasi_faces: b.non_quasi_faces.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "obstruction: product of {} curves, dim K = {}",
            self.curves, self.dimension
        );
        if let Some(b) = &self.suspension_of {
            let _ = writeln!(
                out,
                "  suspension of a {}-complex (quasi everywhere: {}, connected: {})",
                b.base_dimension, b.base_quasi_everywhere, b.base_connected
            );
            for f in &b.base_non_quasi_faces {
                let _ = writeln!(out, "    base non-quasi face {{{}}}", f.join(","));
            }
        }
        for r in &self.reason {
            let mark = if r.holds { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}: {}", r.check, r.detail);
        }
        for a in &self.hypotheses.assumptions {
            let _ = writeln!(out, "  [assumed] {a}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: Option<String>,
    pub summary: ComplexSummary,
    pub cohomology: CohomologySection,
    pub quasi: QuasiSection,
    pub ramified: RamifiedSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<CertificateSection>,
}

impl AnalysisReport {
    /// Full analysis; the obstruction section is included when `curves` is
    /// given.
    pub fn build(k: &SimplicialComplex, name: Option<&str>, curves: Option<usize>) -> Result<Self> {
        let cohomology = reduced_cohomology(k)?;
        let quasi = classify_quasi(k)?;
        let ramified = classify_ramified(k)?;
        Ok(Self {
            schema_version: SCHEMA_VERSION,
            name: name.map(str::to_string),
            summary: ComplexSummary::of(k),
            cohomology: CohomologySection::of(&cohomology),
            quasi: QuasiSection::of(k, &quasi),
            ramified: RamifiedSection::of(k, &ramified),
            obstruction: curves.map(|n| CertificateSection::of(&curve_product_obstruction(k, n))),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        if let Some(name) = &self.name {
            let _ = writeln!(out, "complex: {name}");
        }
        let _ = writeln!(
            out,
            "dimension {}, {} vertices, f-vector {:?}, euler characteristic {}, {} component(s), pure: {}",
            s.dimension, s.vertices, s.face_vector, s.euler_characteristic, s.components, s.pure
        );
        out.push_str(&render_cohomology(&self.cohomology));
        out.push_str(&render_quasi(&self.quasi));
        out.push_str(&render_ramified(&self.ramified));
        if let Some(c) = &self.obstruction {
            out.push_str(&c.render_text());
        }
        out
    }
}

pub fn render_cohomology(c: &CohomologySection) -> String {
    let mut out = String::new();
    let symbol = if c.reduced { "H~" } else { "H" };
    for g in &c.groups {
        let _ = writeln!(out, "  {symbol}^{} = {}", g.degree, g.display);
    }
    out
}

pub fn render_quasi(q: &QuasiSection) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "quasi {}-manifold test: {}",
        q.n, q.off_set_description
    );
    for f in &q.non_quasi_faces {
        let _ = writeln!(out, "  not quasi at {{{}}}", f.join(","));
    }
    out
}

pub fn render_ramified(r: &RamifiedSection) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ramified {}-complex: {}",
        r.n,
        if r.is_ramified { "yes" } else { "no" }
    );
    for f in &r.offending_cells {
        let _ = writeln!(out, "  free face {{{}}}", f.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;

    #[test]
    fn report_is_deterministic() {
        let k = generate("book:3").unwrap();
        let a = AnalysisReport::build(&k, Some("book"), Some(2))
            .unwrap()
            .to_json();
        let b = AnalysisReport::build(&k, Some("book"), Some(2))
            .unwrap()
            .to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["summary"]["face_vector"], serde_json::json!([5, 7, 3]));
        assert_eq!(v["ramified"]["is_ramified"], false);
        assert_eq!(v["obstruction"]["verdict"], "Inconclusive");
    }

    #[test]
    fn text_rendering_mentions_groups() {
        let k = generate("rp2_6").unwrap();
        let text = AnalysisReport::build(&k, None, None).unwrap().render_text();
        assert!(text.contains("H~^2 = Z/2"));
        assert!(text.contains("ramified 2-complex: yes"));
    }
}
