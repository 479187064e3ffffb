//! Non-embeddability certificates for products of curves.
//!
//! A connected, locally connected weak `n`-manifold off a finite set, with
//! finitely generated `H^1`, that lies in a product of `n` curves has
//! `rank H^1 ≥ n`. For a finite polyhedron local connectedness and finite rank
//! hold automatically, and quasi points are weak points, so the hypotheses are
//! checked by: connectedness, purity (n-dimensional at every point), and every
//! non-quasi face being a vertex. When they hold and `b₁ < n` the complex
//! cannot embed in a product of `n` curves. Nothing else is ever claimed.

use std::fmt;

use crate::classify::{classify_quasi, QuasiReport};
use crate::cohomology::first_betti;
use crate::complex::SimplicialComplex;
use crate::construct::suspension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    NotEmbeddable,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotEmbeddable => "NotEmbeddable",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

/// One link in the reasoning chain of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Nonempty,
    /// The number of curves equals the dimension of the complex.
    DimensionMatchesCurves,
    Connected,
    Pure,
    /// Every non-quasi face is a vertex.
    QuasiOffFiniteSet,
    /// `b₁ < n`, contradicting the rank bound for embedded complexes.
    RankBelowCurveCount,
    /// Suspension pipeline only: the base complex is a quasi manifold.
    BaseQuasiManifold,
    /// Suspension pipeline only: the base complex is connected.
    BaseConnected,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Nonempty => "nonempty",
            Check::DimensionMatchesCurves => "dimension_matches_curves",
            Check::Connected => "connected",
            Check::Pure => "pure",
            Check::QuasiOffFiniteSet => "quasi_off_finite_set",
            Check::RankBelowCurveCount => "rank_h1_below_curve_count",
            Check::BaseQuasiManifold => "base_quasi_manifold",
            Check::BaseConnected => "base_connected",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReasonStep {
    pub check: Check,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisTrace {
    pub connected: bool,
    pub components: usize,
    pub pure: bool,
    pub off_finite: bool,
    pub quasi_report: Option<QuasiReport>,
    /// Non-quasi faces by vertex label, for label-based re-verification.
    pub non_quasi_faces: Vec<Vec<String>>,
    /// Hypotheses that finite polyhedra satisfy automatically.
    pub assumptions: Vec<String>,
}

/// What the suspension pipeline established about the base complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionBase {
    pub dimension: isize,
    pub connected: bool,
    pub quasi_everywhere: bool,
    pub non_quasi_faces: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    /// Number of curve factors.
    pub n: usize,
    pub dimension: isize,
    pub hypothesis_trace: HypothesisTrace,
    pub b1: Option<usize>,
    pub verdict: Verdict,
    pub reason: Vec<ReasonStep>,
    pub suspension_of: Option<SuspensionBase>,
}

const ASSUMPTIONS: [&str; 3] = [
    "finite polyhedra are locally connected",
    "H^1 of a finite complex has finite rank",
    "quasi n-manifold points are weak n-manifold points",
];

impl ObstructionCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::NotEmbeddable
    }

    /// First failing step, if any.
    pub fn blocking_step(&self) -> Option<&ReasonStep> {
        self.reason.iter().find(|s| !s.holds)
    }

    /// Recomputes every hypothesis and `b₁` from `complex` (typically a fresh
    /// parse of the same facets) and checks they match this certificate.
    pub fn reverify(&self, complex: &SimplicialComplex) -> bool {
        let fresh = curve_product_obstruction(complex, self.n);
        let same_trace = |a: &HypothesisTrace, b: &HypothesisTrace| {
            a.connected == b.connected
                && a.components == b.components
                && a.pure == b.pure
                && a.off_finite == b.off_finite
                && a.non_quasi_faces == b.non_quasi_faces
        };
        let consistent = fresh.verdict == self.verdict
            && fresh.b1 == self.b1
            && fresh.dimension == self.dimension
            && same_trace(&fresh.hypothesis_trace, &self.hypothesis_trace);
        let sound = self.verdict != Verdict::NotEmbeddable
            || (self.hypothesis_trace.connected
                && self.hypothesis_trace.pure
                && self.hypothesis_trace.off_finite
                && self.b1.is_some_and(|b| b < self.n));
        consistent && sound
    }
}

fn step(check: Check, holds: bool, detail: impl Into<String>) -> ReasonStep {
    ReasonStep {
        check,
        holds,
        detail: detail.into(),
    }
}

/// Runs the rank-`H^1` obstruction for embedding `K` in a product of `n`
/// curves. Failures of any hypothesis give [`Verdict::Inconclusive`].
pub fn curve_product_obstruction(k: &SimplicialComplex, n: usize) -> ObstructionCertificate {
    let dimension = k.dim();
    let mut reason = Vec::new();
    let assumptions = ASSUMPTIONS.iter().map(|s| s.to_string()).collect();

    if k.is_empty() {
        reason.push(step(Check::Nonempty, false, "the complex is empty"));
        return ObstructionCertificate {
            n,
            dimension,
            hypothesis_trace: HypothesisTrace {
                connected: false,
                components: 0,
                pure: true,
                off_finite: true,
                quasi_report: None,
                non_quasi_faces: Vec::new(),
                assumptions,
            },
            b1: None,
            verdict: Verdict::Inconclusive,
            reason,
            suspension_of: None,
        };
    }
    reason.push(step(Check::Nonempty, true, "the complex is nonempty"));

    reason.push(step(
        Check::DimensionMatchesCurves,
        dimension == n as isize,
        format!("dim K = {dimension}, curves = {n}"),
    ));

    let components = k.component_count();
    let connected = components == 1;
    reason.push(step(
        Check::Connected,
        connected,
        format!("{components} connected component(s)"),
    ));

    let quasi = classify_quasi(k).expect("nonempty");
    reason.push(step(
        Check::Pure,
        quasi.pure,
        if quasi.pure {
            format!("every facet has dimension {dimension}")
        } else {
            "some facet has lower dimension".to_string()
        },
    ));
    reason.push(step(
        Check::QuasiOffFiniteSet,
        quasi.off_finite,
        quasi.off_set_description.clone(),
    ));

    let b1 = first_betti(k);
    reason.push(step(
        Check::RankBelowCurveCount,
        b1 < n,
        format!("rank H^1 = {b1}, curves = {n}"),
    ));

    let verdict = if reason.iter().all(|s| s.holds) {
        Verdict::NotEmbeddable
    } else {
        Verdict::Inconclusive
    };
    let non_quasi_faces = quasi
        .non_quasi_faces
        .iter()
        .map(|s| k.labels_of(s))
        .collect();
    ObstructionCertificate {
        n,
        dimension,
        hypothesis_trace: HypothesisTrace {
            connected,
            components,
            pure: quasi.pure,
            off_finite: quasi.off_finite,
            non_quasi_faces,
            quasi_report: Some(quasi),
            assumptions,
        },
        b1: Some(b1),
        verdict,
        reason,
        suspension_of: None,
    }
}

/// Checks that `K` is a connected quasi `n`-manifold, then runs the
/// obstruction for `ΣK` against `n + 1` curves.
pub fn suspension_obstruction(k: &SimplicialComplex) -> ObstructionCertificate {
    let base_quasi = classify_quasi(k).ok();
    let base = SuspensionBase {
        dimension: k.dim(),
        connected: k.is_connected(),
        quasi_everywhere: base_quasi
            .as_ref()
            .is_some_and(|r| r.is_quasi_everywhere() && r.pure),
        non_quasi_faces: base_quasi
            .as_ref()
            .map(|r| r.non_quasi_faces.iter().map(|s| k.labels_of(s)).collect())
            .unwrap_or_default(),
    };
    let curves = (k.dim() + 1).max(0) as usize;
    let mut cert = curve_product_obstruction(&suspension(k), curves);

    let mut prefix = vec![
        step(
            Check::BaseQuasiManifold,
            base.quasi_everywhere,
            if base.quasi_everywhere {
                format!("base is a quasi {}-manifold", k.dim())
            } else {
                format!(
                    "base fails the quasi-manifold test on {} face(s)",
                    base.non_quasi_faces.len()
                )
            },
        ),
        step(
            Check::BaseConnected,
            base.connected,
            format!("base has {} component(s)", k.component_count()),
        ),
    ];
    if k.dim() < 1 {
        prefix[0] = step(
            Check::BaseQuasiManifold,
            false,
            "base must have dimension at least 1",
        );
    }
    prefix.append(&mut cert.reason);
    cert.reason = prefix;
    if cert.reason.iter().any(|s| !s.holds) {
        cert.verdict = Verdict::Inconclusive;
    }
    cert.suspension_of = Some(base);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::staircase_product;
    use crate::generate::generate;

    #[test]
    fn spheres_are_certified() {
        for n in [2, 3] {
            let k = generate(&format!("sphere_boundary:{n}")).unwrap();
            let c = curve_product_obstruction(&k, n);
            assert_eq!(c.verdict, Verdict::NotEmbeddable);
            assert_eq!(c.b1, Some(0));
            assert!(c.reverify(&k));
        }
    }

    #[test]
    fn torus_is_inconclusive() {
        let c3 = generate("cycle:3").unwrap();
        let torus = staircase_product(&c3, &c3).unwrap();
        let c = curve_product_obstruction(&torus, 2);
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.b1, Some(2));
        assert_eq!(c.blocking_step().unwrap().check, Check::RankBelowCurveCount);
    }

    #[test]
    fn circle_is_inconclusive() {
        let c = curve_product_obstruction(&generate("cycle:5").unwrap(), 1);
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.b1, Some(1));
    }

    #[test]
    fn dimension_mismatch_is_inconclusive() {
        let k = generate("sphere_boundary:2").unwrap();
        let c = curve_product_obstruction(&k, 3);
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(
            c.blocking_step().unwrap().check,
            Check::DimensionMatchesCurves
        );
    }

    #[test]
    fn suspensions() {
        for name in ["sphere_boundary:2", "torus7", "wedge_spheres:2,2"] {
            let c = suspension_obstruction(&generate(name).unwrap());
            assert_eq!(c.verdict, Verdict::NotEmbeddable, "{name}");
            assert_eq!(c.n, 3);
            assert_eq!(c.b1, Some(0));
        }
        let book = suspension_obstruction(&generate("book:3").unwrap());
        assert_eq!(book.verdict, Verdict::Inconclusive);
        let base = book.suspension_of.unwrap();
        assert!(!base.quasi_everywhere);
        assert_eq!(base.non_quasi_faces.len(), 11);
    }

    #[test]
    fn empty_complex() {
        let c = curve_product_obstruction(&SimplicialComplex::empty(), 1);
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.blocking_step().unwrap().check, Check::Nonempty);
    }
}
