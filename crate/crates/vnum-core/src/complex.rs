//! Simplicial complexes and reduced simplicial homology.
//!
//! Complexes are stored by their facets (inclusion-maximal faces) over a
//! fixed vertex set. Two degenerate complexes are distinguished: the void
//! complex (no faces at all) and the empty complex `{∅}` (the empty face
//! only). Reduced homology is computed over an exact [`FieldChoice`] from
//! boundary-matrix ranks; dimensions are reported starting at homological
//! degree −1, so the empty complex has reduced homology `[1]`.

use crate::decompose::associated_primes;
use crate::error::{Error, Result};
use crate::field::{matrix_rank, FieldChoice};
use crate::ideal::MonomialIdeal;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Hard structural cap: faces are bitmasks in a `u32`.
pub const MAX_VERTICES: usize = 32;

/// Default cap on vertex count for whole-complex homology enumeration.
pub const DEFAULT_HOMOLOGY_CAP: usize = 22;

/// A simplicial complex on vertices `0..vertex_count`, stored by facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// Inclusion-maximal faces as sorted vertex lists; empty for the void
    /// complex, `[[]]` for the empty complex `{∅}`.
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty face.
    pub fn void(vertex_count: usize) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        Ok(SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
        })
    }

    /// Build a complex from generating faces; non-maximal and duplicate
    /// faces are discarded. An empty list yields the void complex, and a
    /// list containing only `[]` yields the empty complex `{∅}`.
    pub fn from_facets(
        vertex_count: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        let mut masks = BTreeSet::new();
        for face in faces {
            let mut mask = 0u32;
            for v in face {
                if v >= vertex_count {
                    return Err(Error::structural(format!(
                        "vertex {v} out of range for a complex on {vertex_count} vertices"
                    )));
                }
                mask |= 1 << v;
            }
            masks.insert(mask);
        }
        let maximal: Vec<u32> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&o| o != m && o & m == m))
            .copied()
            .collect();
        let mut facets: Vec<Vec<usize>> = maximal.iter().map(|&m| mask_to_vertices(m)).collect();
        facets.sort();
        Ok(SimplicialComplex {
            vertex_count,
            facets,
        })
    }

    /// The full simplex on `vertex_count` vertices.
    pub fn simplex(vertex_count: usize) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        if vertex_count == 0 {
            return SimplicialComplex::from_facets(0, [vec![]]);
        }
        SimplicialComplex::from_facets(vertex_count, [(0..vertex_count).collect()])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets as sorted vertex lists, in canonical order.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// True for the void complex (no faces at all).
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex: one less than the largest facet size.
    /// The empty complex has dimension −1; the void complex has none.
    pub fn dimension(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let mut mask = 0u32;
        for &v in face {
            if v >= self.vertex_count {
                return false;
            }
            mask |= 1 << v;
        }
        self.facet_masks().iter().any(|&f| f & mask == mask)
    }

    fn facet_masks(&self) -> Vec<u32> {
        self.facets
            .iter()
            .map(|f| f.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Every face of the complex as a bitmask, the empty face included
    /// (mask 0) whenever the complex is non-void.
    pub fn face_masks(&self) -> Vec<u32> {
        let mut faces = BTreeSet::new();
        for facet in self.facet_masks() {
            // Enumerate all submasks of the facet, empty face included.
            let mut sub = facet;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        faces.into_iter().collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void complex on {} vertices", self.vertex_count);
        }
        write!(f, "<")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if facet.is_empty() {
                write!(f, "{{}}")?;
            } else {
                write!(f, "{{")?;
                for (i, v) in facet.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v + 1)?;
                }
                write!(f, "}}")?;
            }
        }
        write!(f, ">")
    }
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::resource(format!(
            "complex on {n} vertices exceeds the structural cap of {MAX_VERTICES}"
        )));
    }
    Ok(())
}

fn mask_to_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Reduced homology dimensions of the whole complex over `field`,
/// indexed from degree −1 (so index `k` holds `dim H~_{k−1}`). The void
/// complex yields an empty vector; the empty complex yields `[1]`.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    field: &FieldChoice,
) -> Result<Vec<usize>> {
    if complex.vertex_count() > DEFAULT_HOMOLOGY_CAP {
        return Err(Error::resource(format!(
            "homology enumeration on {} vertices exceeds the cap of {}",
            complex.vertex_count(),
            DEFAULT_HOMOLOGY_CAP
        )));
    }
    Ok(homology_from_face_masks(&complex.face_masks(), field))
}

/// Reduced homology dimensions from an explicit downward-closed face set
/// (bitmasks; mask 0 is the empty face). Degree −1 sits at index 0.
pub(crate) fn homology_from_face_masks(faces: &[u32], field: &FieldChoice) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let max_size = faces
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    // chains[k] lists the faces of cardinality k (homological degree k−1).
    let mut chains: Vec<Vec<u32>> = vec![Vec::new(); max_size + 1];
    for &m in faces {
        chains[m.count_ones() as usize].push(m);
    }
    let index_of: Vec<HashMap<u32, usize>> = chains
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    // ranks[k] = rank of the boundary map from cardinality-k faces down to
    // cardinality-(k−1) faces.
    let mut ranks = vec![0usize; max_size + 2];
    for k in 1..=max_size {
        let rows = chains[k - 1].len();
        let cols = chains[k].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut matrix = vec![vec![0i64; cols]; rows];
        for (col, &face) in chains[k].iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..32 {
                let bit = 1u32 << v;
                if face & bit == 0 {
                    continue;
                }
                let sub = face & !bit;
                let row = index_of[k - 1][&sub];
                matrix[row][col] = sign;
                sign = -sign;
            }
        }
        ranks[k] = matrix_rank(&matrix, field);
    }
    (0..=max_size)
        .map(|k| chains[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// The simplicial complex whose faces are the supports of square-free
/// monomials outside the ideal. The zero ideal yields the full simplex;
/// the ideal must be square-free and not the unit ideal.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::domain(
            "the unit ideal has no Stanley–Reisner complex",
        ));
    }
    if !ideal.is_square_free() {
        return Err(Error::domain(
            "Stanley–Reisner complexes require a square-free ideal",
        ));
    }
    let n = ideal.ring().num_vars();
    if ideal.is_zero() {
        return SimplicialComplex::simplex(n);
    }
    // Facets are the complements of the minimal primes. A square-free
    // ideal is radical, so every associated prime is minimal.
    let primes = associated_primes(ideal)?;
    let facets = primes.iter().map(|p| {
        let support: BTreeSet<usize> = p.support().iter().copied().collect();
        (0..n).filter(|v| !support.contains(v)).collect::<Vec<_>>()
    });
    SimplicialComplex::from_facets(n, facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn q() -> FieldChoice {
        FieldChoice::Rationals
    }

    #[test]
    fn void_and_empty_are_distinguished() {
        let void = SimplicialComplex::void(3).unwrap();
        assert!(void.is_void());
        assert_eq!(void.dimension(), None);
        assert_eq!(reduced_homology_dims(&void, &q()).unwrap(), Vec::<usize>::new());

        let empty = SimplicialComplex::from_facets(3, [vec![]]).unwrap();
        assert!(!empty.is_void());
        assert_eq!(empty.dimension(), Some(-1));
        assert_eq!(reduced_homology_dims(&empty, &q()).unwrap(), vec![1]);
    }

    #[test]
    fn non_maximal_faces_are_discarded() {
        let c = SimplicialComplex::from_facets(3, [vec![0], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c.facets(), &[vec![0, 1]]);
        assert!(c.is_face(&[0]));
        assert!(c.is_face(&[]));
        assert!(!c.is_face(&[2]));
    }

    #[test]
    fn homology_of_a_point_and_of_two_points() {
        let point = SimplicialComplex::from_facets(1, [vec![0]]).unwrap();
        assert_eq!(reduced_homology_dims(&point, &q()).unwrap(), vec![0, 0]);

        let two = SimplicialComplex::from_facets(2, [vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology_dims(&two, &q()).unwrap(), vec![0, 1]);
    }

    #[test]
    fn homology_of_a_hollow_triangle_and_square() {
        let triangle =
            SimplicialComplex::from_facets(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(reduced_homology_dims(&triangle, &q()).unwrap(), vec![0, 0, 1]);

        let square = SimplicialComplex::from_facets(
            4,
            [vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        assert_eq!(reduced_homology_dims(&square, &q()).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn homology_of_a_filled_triangle_vanishes() {
        let filled = SimplicialComplex::from_facets(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(reduced_homology_dims(&filled, &q()).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn projective_plane_homology_depends_on_characteristic() {
        // Minimal 6-vertex triangulation of the real projective plane.
        let rp2 = SimplicialComplex::from_facets(
            6,
            [
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![0, 2, 3],
                vec![0, 2, 5],
                vec![0, 4, 5],
                vec![1, 2, 4],
                vec![1, 2, 5],
                vec![1, 3, 5],
                vec![2, 3, 4],
                vec![3, 4, 5],
            ],
        )
        .unwrap();
        let over_q = reduced_homology_dims(&rp2, &q()).unwrap();
        assert_eq!(over_q, vec![0, 0, 0, 0]);
        let over_f2 = reduced_homology_dims(&rp2, &FieldChoice::Prime(2)).unwrap();
        assert_eq!(over_f2, vec![0, 0, 1, 1]);
    }

    #[test]
    fn stanley_reisner_of_square_cycle() {
        // Edge ideal of the 4-cycle; its complex is two disjoint edges
        // {x1,x3} and {x2,x4}.
        let ideal =
            parse_ideal("vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n").unwrap();
        let c = stanley_reisner_complex(&ideal).unwrap();
        assert_eq!(c.facets(), &[vec![0, 2], vec![1, 3]]);
        // Homotopy equivalent to two points.
        assert_eq!(reduced_homology_dims(&c, &q()).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn stanley_reisner_of_zero_ideal_is_full_simplex() {
        let ideal = parse_ideal("vars: x1 x2 x3 x4\n").unwrap();
        let c = stanley_reisner_complex(&ideal).unwrap();
        assert_eq!(c.facets(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn stanley_reisner_rejects_non_square_free() {
        let ideal = parse_ideal("vars: x1 x2\nx1^2\n").unwrap();
        assert!(stanley_reisner_complex(&ideal).is_err());
    }
}
