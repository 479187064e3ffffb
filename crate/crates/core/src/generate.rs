//! Named complexes used as a test and experiment corpus.

use std::fmt;
use std::str::FromStr;

use crate::complex::SimplicialComplex;
use crate::error::{Result, TopologyError};

/// Seven-vertex torus: the translates of {0,1,3} and {0,2,3} mod 7.
const TORUS7_BASE: [[usize; 3]; 2] = [[0, 1, 3], [0, 2, 3]];

/// Six-vertex real projective plane (hemi-icosahedron).
const RP2_6: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [3, 4, 6],
    [2, 4, 5],
    [3, 5, 6],
    [2, 4, 6],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Boundary of the `(n+1)`-simplex, an `n`-sphere.
    SphereBoundary(usize),
    Torus7,
    Rp2Six,
    /// `copies` boundaries of the `(n+1)`-simplex sharing one vertex.
    WedgeSpheres {
        n: usize,
        copies: usize,
    },
    Cycle(usize),
    /// Triangles sharing one common edge.
    Book(usize),
}

impl Generator {
    pub fn build(self) -> Result<SimplicialComplex> {
        let complex = match self {
            Generator::SphereBoundary(n) => {
                let all: Vec<usize> = (0..n + 2).collect();
                SimplicialComplex::from_index_facets(
                    (0..n + 2).map(|skip| all.iter().copied().filter(move |&v| v != skip)),
                )
            }
            Generator::Torus7 => SimplicialComplex::from_index_facets(
                (0..7).flat_map(|i| TORUS7_BASE.map(|t| t.map(|v| (v + i) % 7))),
            ),
            Generator::Rp2Six => SimplicialComplex::from_index_facets(RP2_6),
            Generator::WedgeSpheres { n, copies } => {
                if copies == 0 {
                    return Err(TopologyError::UnknownGenerator(self.to_string()));
                }
                // Copy c uses the shared vertex "0" plus vertices "c.1" … "c.(n+1)".
                let mut facets = Vec::new();
                for c in 1..=copies {
                    let verts: Vec<String> = std::iter::once("0".to_string())
                        .chain((1..=n + 1).map(|j| format!("{c}.{j}")))
                        .collect();
                    for skip in 0..verts.len() {
                        facets.push(
                            verts
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, v)| v.clone())
                                .collect::<Vec<_>>(),
                        );
                    }
                }
                SimplicialComplex::from_labeled_facets(facets)
            }
            Generator::Cycle(m) => {
                if m < 3 {
                    return Err(TopologyError::UnknownGenerator(self.to_string()));
                }
                SimplicialComplex::from_index_facets((0..m).map(|i| [i, (i + 1) % m]))
            }
            Generator::Book(pages) => {
                if pages == 0 {
                    return Err(TopologyError::UnknownGenerator(self.to_string()));
                }
                SimplicialComplex::from_index_facets((0..pages).map(|p| [0, 1, p + 2]))
            }
        }?;
        Ok(complex)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::SphereBoundary(n) => write!(f, "sphere_boundary:{n}"),
            Generator::Torus7 => write!(f, "torus7"),
            Generator::Rp2Six => write!(f, "rp2_6"),
            Generator::WedgeSpheres { n, copies } => write!(f, "wedge_spheres:{n},{copies}"),
            Generator::Cycle(m) => write!(f, "cycle:{m}"),
            Generator::Book(p) => write!(f, "book:{p}"),
        }
    }
}

/// Accepts `name`, `name:a` or `name:a,b`; parentheses also work, as in
/// `wedge_spheres(2,2)`.
impl FromStr for Generator {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || TopologyError::UnknownGenerator(s.to_string());
        let trimmed = s.trim();
        let (name, args) = match trimmed.find([':', '(']) {
            Some(i) => (
                &trimmed[..i],
                trimmed[i + 1..].trim_end_matches(')').to_string(),
            ),
            None => (trimmed, String::new()),
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<_>>()?
        };
        let generator = match (name, nums.as_slice()) {
            ("sphere_boundary", [n]) => Generator::SphereBoundary(*n),
            ("torus7", []) => Generator::Torus7,
            ("rp2_6", []) => Generator::Rp2Six,
            ("wedge_spheres", [n, k]) => Generator::WedgeSpheres { n: *n, copies: *k },
            ("cycle", [m]) => Generator::Cycle(*m),
            ("book", [p]) => Generator::Book(*p),
            _ => return Err(unknown()),
        };
        Ok(generator)
    }
}

pub fn generate(name: &str) -> Result<SimplicialComplex> {
    name.parse::<Generator>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle3_is_triangle_boundary() {
        let c = generate("cycle:3").unwrap();
        let t = SimplicialComplex::from_index_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(c, t);
    }

    #[test]
    fn face_vectors() {
        assert_eq!(
            generate("sphere_boundary:2").unwrap().f_vector(),
            vec![4, 6, 4]
        );
        assert_eq!(generate("torus7").unwrap().f_vector(), vec![7, 21, 14]);
        assert_eq!(generate("rp2_6").unwrap().f_vector(), vec![6, 15, 10]);
        assert_eq!(generate("book:3").unwrap().f_vector(), vec![5, 7, 3]);
        assert_eq!(
            generate("wedge_spheres:2,2").unwrap().f_vector(),
            vec![7, 12, 8]
        );
        assert_eq!(generate("sphere_boundary:0").unwrap().f_vector(), vec![2]);
    }

    #[test]
    fn name_round_trip_and_errors() {
        for g in [
            Generator::SphereBoundary(3),
            Generator::Torus7,
            Generator::Rp2Six,
            Generator::WedgeSpheres { n: 2, copies: 3 },
            Generator::Cycle(5),
            Generator::Book(4),
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert_eq!(
            "wedge_spheres(2,2)".parse::<Generator>().unwrap(),
            Generator::WedgeSpheres { n: 2, copies: 2 }
        );
        assert!(matches!(
            generate("klein_bottle"),
            Err(TopologyError::UnknownGenerator(_))
        ));
        assert!(generate("cycle:2").is_err());
        assert!(generate("sphere_boundary").is_err());
    }
}
