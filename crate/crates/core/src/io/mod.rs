//! Facet-list documents and analysis reports.

mod facets;
mod report;

pub use facets::{
    parse_facets, serialize_facets, serialize_facets_json, to_document, FacetListDocument, Label,
    ParseError, ParsedDocument,
};
pub use report::{
    render_cohomology, render_quasi, render_ramified, AnalysisReport, CertificateSection,
    CohomologySection, ComplexSummary, DegreeGroup, FaceEntry, HypothesisSection, QuasiSection,
    RamifiedSection, ReasonEntry, SuspensionSection, SCHEMA_VERSION,
};
