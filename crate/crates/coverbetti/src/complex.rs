//! Simplicial complexes on {1, ..., n}, stored by their facet antichain.
//!
//! The void complex (no faces at all) and the irrelevant complex (only the
//! empty face) are distinct objects and both representable: the former has
//! no facets, the latter has the single facet {}.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::set::{Vertex, VertexSet, MAX_VERTICES};

/// Guard on face enumeration; complexes with more distinct faces than this
/// are rejected rather than expanded.
pub const DEFAULT_FACE_CAP: u64 = 1 << 24;

/// Guard on the intermediate families of the transversal computation
/// backing Alexander duality and Stanley-Reisner facets.
const TRANSVERSAL_CAP: usize = 1 << 20;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct SimplicialComplex {
    ambient: u32,
    facets: Vec<VertexSet>,
}

/// Wire format: {"ambient": n, "facets": [[...], ...]}. Deserialization
/// re-validates and minimalizes, so hand-written input never produces a
/// complex violating the antichain invariant.
#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    ambient: u32,
    facets: Vec<VertexSet>,
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = Error;
    fn try_from(r: ComplexRepr) -> Result<Self> {
        SimplicialComplex::from_facets(r.ambient, r.facets)
    }
}

impl From<SimplicialComplex> for ComplexRepr {
    fn from(c: SimplicialComplex) -> ComplexRepr {
        ComplexRepr { ambient: c.ambient, facets: c.facets }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<[{}];", self.ambient)?;
        for (i, fc) in self.facets.iter().enumerate() {
            write!(f, "{}{fc}", if i > 0 { "," } else { " " })?;
        }
        write!(f, ">")
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by the given faces. Dominated and
    /// duplicate generators are silently discarded; `from_facets_verbose`
    /// reports them.
    pub fn from_facets(ambient: u32, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        Self::from_facets_verbose(ambient, facets).map(|(c, _)| c)
    }

    /// As `from_facets`, also returning the discarded generators in input order.
    pub fn from_facets_verbose(
        ambient: u32,
        facets: Vec<VertexSet>,
    ) -> Result<(SimplicialComplex, Vec<VertexSet>)> {
        if ambient > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "ambient size {ambient} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let full = VertexSet::full(ambient);
        for &f in &facets {
            if !f.is_subset(full) {
                return Err(Error::InvalidArgument(format!(
                    "facet {f} is not contained in {{1,...,{ambient}}}"
                )));
            }
        }
        let mut keep = vec![true; facets.len()];
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if i != j
                    && keep[i]
                    && facets[i].is_subset(facets[j])
                    && (facets[i] != facets[j] || i > j)
                {
                    keep[i] = false;
                }
            }
        }
        let mut kept: Vec<VertexSet> = Vec::new();
        let mut discarded = Vec::new();
        for (i, f) in facets.into_iter().enumerate() {
            if keep[i] {
                kept.push(f);
            } else {
                discarded.push(f);
            }
        }
        kept.sort();
        Ok((SimplicialComplex { ambient, facets: kept }, discarded))
    }

    /// The complex with no faces at all.
    pub fn void(ambient: u32) -> SimplicialComplex {
        SimplicialComplex { ambient, facets: Vec::new() }
    }

    /// The complex whose only face is the empty set.
    pub fn irrelevant(ambient: u32) -> SimplicialComplex {
        SimplicialComplex { ambient, facets: vec![VertexSet::empty()] }
    }

    pub fn full_simplex(ambient: u32) -> SimplicialComplex {
        SimplicialComplex { ambient, facets: vec![VertexSet::full(ambient)] }
    }

    /// Clique complex: faces are the vertex sets inducing complete subgraphs.
    pub fn clique_complex(g: &Graph) -> SimplicialComplex {
        SimplicialComplex { ambient: g.n(), facets: g.maximal_cliques() }
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn max_facet_size(&self) -> Option<u32> {
        self.facets.iter().map(|f| f.len()).max()
    }

    /// None for the void complex; -1 for the irrelevant complex.
    pub fn dimension(&self) -> Option<i64> {
        self.max_facet_size().map(|s| s as i64 - 1)
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&fc| f.is_subset(fc))
    }

    /// True when every ambient vertex lies in some face.
    pub fn covers_all_vertices(&self) -> bool {
        let mut union = VertexSet::empty();
        for &f in &self.facets {
            union = union | f;
        }
        union == VertexSet::full(self.ambient)
    }

    /// All faces in canonical order, the empty face first. Guarded by the
    /// default face cap.
    pub fn all_faces(&self) -> Result<Vec<VertexSet>> {
        self.all_faces_with_cap(DEFAULT_FACE_CAP)
    }

    pub fn all_faces_with_cap(&self, cap: u64) -> Result<Vec<VertexSet>> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            if u64::from(f.len()) >= 63 || 1u64 << f.len() > cap {
                return Err(Error::resource("distinct faces", 1 << f.len().min(63), cap));
            }
            for s in f.subsets() {
                seen.insert(s.bits());
            }
            if seen.len() as u64 > cap {
                return Err(Error::resource("distinct faces", seen.len() as u64, cap));
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().map(VertexSet::from_bits).collect();
        faces.sort();
        Ok(faces)
    }

    /// Faces grouped by cardinality: entry s holds the size-s faces as raw
    /// masks in ascending numeric order. Entry 0 is [0] unless void.
    pub(crate) fn faces_by_size(&self) -> Result<Vec<Vec<u64>>> {
        let faces = self.all_faces()?;
        let top = self.max_facet_size().unwrap_or(0) as usize;
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for f in faces {
            levels[f.len() as usize].push(f.bits());
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        Ok(levels)
    }

    /// The faces with exactly `size` elements, canonically ordered.
    pub fn faces_of_size(&self, size: u32) -> Result<Vec<VertexSet>> {
        let mut work: u64 = 0;
        for &f in &self.facets {
            work = work.saturating_add(binomial_saturating(f.len(), size));
            if work > DEFAULT_FACE_CAP {
                return Err(Error::resource("face enumeration work", work, DEFAULT_FACE_CAP));
            }
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets_of_size(size) {
                seen.insert(s.bits());
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().map(VertexSet::from_bits).collect();
        faces.sort();
        Ok(faces)
    }

    /// f- and h-vectors. Undefined for the void complex.
    pub fn fh_vectors(&self) -> Result<FhVectors> {
        if self.is_void() {
            return Err(Error::UndefinedFh);
        }
        let levels = self.faces_by_size()?;
        let d1 = levels.len() - 1; // max face cardinality = dim + 1
        let f: Vec<i64> = levels.iter().map(|l| l.len() as i64).collect();
        // expand sum_i f_{i-1} (x-1)^(d1-i) and read h off the coefficients:
        // sum_i f[i] (x-1)^(d1-i) = sum_j h[j] x^(d1-j)
        let mut coeff = vec![0i128; d1 + 1]; // coeff[e] multiplies x^e
        for (i, &fi) in f.iter().enumerate() {
            let m = d1 - i;
            for (t, slot) in coeff.iter_mut().take(m + 1).enumerate() {
                // (x-1)^m = sum_t C(m,t) x^t (-1)^(m-t)
                let b = binomial_i128(m as u32, t as u32);
                let sign = if (m - t) % 2 == 0 { 1 } else { -1 };
                *slot += fi as i128 * b * sign;
            }
        }
        let mut h = Vec::with_capacity(d1 + 1);
        for j in 0..=d1 {
            let v = coeff[d1 - j];
            let v: i64 = v.try_into().map_err(|_| {
                Error::resource("h-vector magnitude", u64::MAX, i64::MAX as u64)
            })?;
            h.push(v);
        }
        Ok(FhVectors { f, h })
    }

    /// Alexander dual: faces are the complements of the non-faces. The dual
    /// of the full simplex is void, which the flag on the result records.
    pub fn alexander_dual(&self) -> Result<AlexanderDual> {
        // minimal non-faces are exactly the minimal transversals of the
        // facet complements: S is a non-face iff S meets every complement
        let complements: Vec<VertexSet> =
            self.facets.iter().map(|f| f.complement_in(self.ambient)).collect();
        let nonfaces = minimal_transversals(self.ambient, &complements)?;
        let facets: Vec<VertexSet> =
            nonfaces.into_iter().map(|s| s.complement_in(self.ambient)).collect();
        let full_simplex_input = facets.is_empty();
        let (complex, _) = SimplicialComplex::from_facets_verbose(self.ambient, facets)?;
        Ok(AlexanderDual { complex, full_simplex_input })
    }

    /// Link of a face: all g disjoint from f with g union f a face.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|fc| f.is_subset(**fc))
            .map(|&fc| fc - f)
            .collect();
        Ok(SimplicialComplex::from_facets(self.ambient, facets)
            .expect("link facets are valid"))
    }

    /// Closed star of a face: the subcomplex generated by the facets
    /// containing it.
    pub fn star(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        let facets: Vec<VertexSet> =
            self.facets.iter().copied().filter(|fc| f.is_subset(*fc)).collect();
        Ok(SimplicialComplex::from_facets(self.ambient, facets)
            .expect("star facets are valid"))
    }

    /// Deletion: the subcomplex of faces disjoint from f.
    pub fn deletion(&self, f: VertexSet) -> SimplicialComplex {
        let facets: Vec<VertexSet> = self.facets.iter().map(|&fc| fc - f).collect();
        SimplicialComplex::from_facets(self.ambient, facets)
            .expect("deletion facets are valid")
    }

    /// Restriction to w, relabeled to {1, ..., |w|}. embedding[i] is the
    /// original label of new vertex i+1.
    pub fn restriction(&self, w: VertexSet) -> Result<Restriction> {
        if !w.is_subset(VertexSet::full(self.ambient)) {
            return Err(Error::InvalidArgument(format!(
                "{w} is not contained in the ambient vertex set"
            )));
        }
        let embedding = w.elements();
        let relabel = |s: VertexSet| -> VertexSet {
            embedding
                .iter()
                .enumerate()
                .filter(|(_, &old)| s.contains(old))
                .map(|(i, _)| (i + 1) as Vertex)
                .collect()
        };
        let facets: Vec<VertexSet> = self.facets.iter().map(|&fc| relabel(fc & w)).collect();
        let complex = SimplicialComplex::from_facets(w.len(), facets)?;
        Ok(Restriction { complex, embedding })
    }

    /// Facets of the restriction without relabeling, as an antichain.
    pub(crate) fn restriction_facets(&self, w: VertexSet) -> Vec<VertexSet> {
        SimplicialComplex::from_facets(self.ambient, self.facets.iter().map(|&f| f & w).collect())
            .expect("restriction facets are valid")
            .facets
    }

    /// Pure q-skeleton: the complex generated by all faces of size q+1.
    /// Void when no face that large exists.
    pub fn pure_skeleton(&self, q: u32) -> Result<SimplicialComplex> {
        let faces = self.faces_of_size(q + 1)?;
        SimplicialComplex::from_facets(self.ambient, faces)
    }

    /// The complex generated by the size-(q+1) faces that are not facets.
    pub fn pure_skeleton_nonfacet(&self, q: u32) -> Result<SimplicialComplex> {
        let faces: Vec<VertexSet> = self
            .faces_of_size(q + 1)?
            .into_iter()
            .filter(|f| !self.facets.contains(f))
            .collect();
        SimplicialComplex::from_facets(self.ambient, faces)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SimplicialComplex> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("complex JSON: {e}")))
    }
}

/// Result of `alexander_dual`; the flag records the degenerate input whose
/// dual has no faces at all.
#[derive(Clone, Debug)]
pub struct AlexanderDual {
    pub complex: SimplicialComplex,
    pub full_simplex_input: bool,
}

/// Result of `restriction`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub complex: SimplicialComplex,
    pub embedding: Vec<Vertex>,
}

/// f- and h-vectors of a nonvoid complex. f[i] counts the faces with i
/// elements (so f[0] = 1) and both vectors satisfy
/// sum_i f[i] (x-1)^(d1-i) = sum_j h[j] x^(d1-j) with d1 = dim + 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FhVectors {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
}

/// Minimal transversals of a set family: inclusion-minimal sets meeting
/// every member. Any member being empty kills all transversals. Sequential
/// refinement with minimalization after every step.
pub(crate) fn minimal_transversals(n: u32, sets: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let mut family: Vec<VertexSet> = vec![VertexSet::empty()];
    for &s in sets {
        let mut next: Vec<VertexSet> = Vec::new();
        for &t in &family {
            if t.intersects(s) {
                next.push(t);
            } else {
                for v in s.iter() {
                    next.push(t.with(v));
                }
            }
        }
        next.sort();
        next.dedup();
        if next.len() > TRANSVERSAL_CAP {
            return Err(Error::resource(
                "transversal family size",
                next.len() as u64,
                TRANSVERSAL_CAP as u64,
            ));
        }
        // canonical order puts smaller sets first, so one forward pass
        // against the kept list removes everything non-minimal
        let mut kept: Vec<VertexSet> = Vec::new();
        'cand: for t in next {
            for &k in &kept {
                if k.is_subset(t) {
                    continue 'cand;
                }
            }
            kept.push(t);
        }
        family = kept;
    }
    let _ = n;
    Ok(family)
}

/// True exactly when f is a facet of the clique complex of the complement
/// of the n-path, by the arithmetic description of those facets: smallest
/// element at most 2, consecutive gaps of 2 or 3, largest element at least
/// n-1.
pub fn path_facet_predicate(n: u32, f: VertexSet) -> bool {
    if f.is_empty() || !f.is_subset(VertexSet::full(n)) {
        return false;
    }
    let e = f.elements();
    if e[0] > 2 {
        return false;
    }
    for w in e.windows(2) {
        let gap = w[1] - w[0];
        if !(2..=3).contains(&gap) {
            return false;
        }
    }
    e[e.len() - 1] + 1 >= n
}

impl Family {
    /// The clique complex of the complement of the family graph; the
    /// simplicial side of the cover ideal theory for this family.
    pub fn complex(self, n: u32) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex::clique_complex(&self.graph(n)?.complement()))
    }
}

fn binomial_saturating(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i + 1) as u64;
    }
    acc
}

fn binomial_i128(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(elems: &[u32]) -> VertexSet {
        VertexSet::from_slice(elems)
    }

    fn cx(ambient: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(ambient, facets.iter().map(|f| vs(f)).collect()).unwrap()
    }

    #[test]
    fn from_facets_minimalizes_and_reports() {
        let (c, discarded) = SimplicialComplex::from_facets_verbose(
            4,
            vec![vs(&[1, 2]), vs(&[2]), vs(&[1, 2]), vs(&[3])],
        )
        .unwrap();
        assert_eq!(c.facets(), &[vs(&[3]), vs(&[1, 2])]);
        assert_eq!(discarded, vec![vs(&[2]), vs(&[1, 2])]);
        assert!(SimplicialComplex::from_facets(2, vec![vs(&[3])]).is_err());
    }

    #[test]
    fn void_and_irrelevant_are_distinct() {
        let void = SimplicialComplex::void(3);
        let irr = SimplicialComplex::irrelevant(3);
        assert!(void.is_void() && !void.is_irrelevant());
        assert!(irr.is_irrelevant() && !irr.is_void());
        assert_eq!(void.dimension(), None);
        assert_eq!(irr.dimension(), Some(-1));
        assert!(!void.is_face(VertexSet::empty()));
        assert!(irr.is_face(VertexSet::empty()));
        assert_eq!(void.all_faces().unwrap(), Vec::<VertexSet>::new());
        assert_eq!(irr.all_faces().unwrap(), vec![VertexSet::empty()]);
    }

    #[test]
    fn clique_complex_examples() {
        let empty3 = Graph::new(3, Vec::<(u32, u32)>::new()).unwrap();
        assert_eq!(
            SimplicialComplex::clique_complex(&empty3).facets(),
            &[vs(&[1]), vs(&[2]), vs(&[3])]
        );
        let k3 = Graph::cycle(3).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&k3).facets(), &[vs(&[1, 2, 3])]);
        // complement of the 5-cycle is the pentagram, another 5-cycle
        let anti = Graph::cycle(5).unwrap().complement();
        assert_eq!(
            SimplicialComplex::clique_complex(&anti).facets(),
            &[vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 4]), vs(&[2, 5]), vs(&[3, 5])]
        );
    }

    #[test]
    fn face_enumeration() {
        let c = cx(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            c.all_faces().unwrap(),
            vec![vs(&[]), vs(&[1]), vs(&[2]), vs(&[3]), vs(&[1, 2]), vs(&[2, 3])]
        );
        assert_eq!(c.faces_of_size(0).unwrap(), vec![vs(&[])]);
        assert_eq!(c.faces_of_size(1).unwrap(), vec![vs(&[1]), vs(&[2]), vs(&[3])]);
        assert_eq!(c.faces_of_size(2).unwrap(), vec![vs(&[1, 2]), vs(&[2, 3])]);
        assert_eq!(c.faces_of_size(3).unwrap(), Vec::<VertexSet>::new());
        assert!(c.is_face(vs(&[2])));
        assert!(!c.is_face(vs(&[1, 3])));
        assert!(c.covers_all_vertices());
        assert!(!cx(3, &[&[1, 2]]).covers_all_vertices());
    }

    #[test]
    fn fh_vectors_of_small_complexes() {
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let fh = hollow.fh_vectors().unwrap();
        assert_eq!(fh.f, vec![1, 3, 3]);
        assert_eq!(fh.h, vec![1, 1, 1]);

        let irr = SimplicialComplex::irrelevant(2);
        let fh = irr.fh_vectors().unwrap();
        assert_eq!(fh.f, vec![1]);
        assert_eq!(fh.h, vec![1]);

        assert!(matches!(SimplicialComplex::void(2).fh_vectors(), Err(Error::UndefinedFh)));

        // clique complex of the complement of the 5-path
        let d5 = Family::Path.complex(5).unwrap();
        assert_eq!(
            d5.facets(),
            &[vs(&[1, 4]), vs(&[2, 4]), vs(&[2, 5]), vs(&[1, 3, 5])]
        );
        let fh = d5.fh_vectors().unwrap();
        assert_eq!(fh.f, vec![1, 5, 6, 1]);
        assert_eq!(fh.h, vec![1, 2, -1, -1]);

        // its pure 1-skeleton
        let sk = d5.pure_skeleton(1).unwrap();
        let fh = sk.fh_vectors().unwrap();
        assert_eq!(fh.f, vec![1, 5, 6]);
        assert_eq!(fh.h, vec![1, 3, 2]);
    }

    #[test]
    fn alexander_dual_examples() {
        let c = cx(3, &[&[1, 2], &[2, 3]]);
        let dual = c.alexander_dual().unwrap();
        assert!(!dual.full_simplex_input);
        assert_eq!(dual.complex.facets(), &[vs(&[2])]);

        let full = SimplicialComplex::full_simplex(3);
        let dual = full.alexander_dual().unwrap();
        assert!(dual.full_simplex_input);
        assert!(dual.complex.is_void());

        let void = SimplicialComplex::void(3);
        let dual = void.alexander_dual().unwrap();
        assert_eq!(dual.complex, SimplicialComplex::full_simplex(3));
    }

    #[test]
    fn alexander_dual_is_an_involution() {
        // all antichain-generated complexes on up to 4 vertices
        let n = 4u32;
        let all_subsets: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
        let mut seen = 0u32;
        for fammask in 0u32..1 << all_subsets.len() {
            let gens: Vec<VertexSet> = (0..all_subsets.len())
                .filter(|i| fammask >> i & 1 == 1)
                .map(|i| all_subsets[i])
                .collect();
            let c = SimplicialComplex::from_facets(n, gens).unwrap();
            let dd = c.alexander_dual().unwrap().complex.alexander_dual().unwrap().complex;
            assert_eq!(dd, c);
            seen += 1;
        }
        assert_eq!(seen, 1 << 16);
    }

    #[test]
    fn link_star_deletion() {
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.link(vs(&[1])).unwrap(), cx(3, &[&[2], &[3]]));
        assert_eq!(hollow.star(vs(&[1])).unwrap(), cx(3, &[&[1, 2], &[1, 3]]));
        assert_eq!(hollow.deletion(vs(&[1])), cx(3, &[&[2, 3]]));
        assert_eq!(hollow.link(VertexSet::empty()).unwrap(), hollow);
        assert!(matches!(hollow.link(vs(&[1, 2, 3])), Err(Error::NotAFace(_))));
        // link of a facet is irrelevant
        assert!(hollow.link(vs(&[1, 2])).unwrap().is_irrelevant());
        // deleting every vertex of a nonvoid complex leaves the empty face
        assert!(hollow.deletion(vs(&[1, 2, 3])).is_irrelevant());
    }

    #[test]
    fn restriction_relabels_and_keeps_faces() {
        let path = cx(3, &[&[1, 2], &[2, 3]]);
        let r = path.restriction(vs(&[1, 3])).unwrap();
        assert_eq!(r.embedding, vec![1, 3]);
        assert_eq!(r.complex, cx(2, &[&[1], &[2]]));
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let r = hollow.restriction(vs(&[1, 3])).unwrap();
        assert_eq!(r.complex, cx(2, &[&[1, 2]]));
        let r = hollow.restriction(VertexSet::full(3)).unwrap();
        assert_eq!(r.complex, hollow);
        assert!(hollow.restriction(vs(&[4])).is_err());
    }

    #[test]
    fn skeleta() {
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.pure_skeleton(0).unwrap(), cx(3, &[&[1], &[2], &[3]]));
        assert_eq!(hollow.pure_skeleton(1).unwrap(), hollow);
        assert!(hollow.pure_skeleton(2).unwrap().is_void());
        // the size-(q+1) non-facet faces of the solid triangle
        let solid = SimplicialComplex::full_simplex(3);
        assert_eq!(solid.pure_skeleton_nonfacet(1).unwrap(), hollow);
        assert_eq!(hollow.pure_skeleton_nonfacet(1).unwrap(), SimplicialComplex::void(3));
        // a pure complex has no nonfacet faces in its top dimension
        assert!(cx(4, &[&[1, 2], &[3, 4]]).pure_skeleton_nonfacet(1).unwrap().is_void());
    }

    #[test]
    fn path_facets_match_the_predicate() {
        for n in 2..=12 {
            let complex = Family::Path.complex(n).unwrap();
            let predicted: Vec<VertexSet> = VertexSet::full(n)
                .subsets()
                .filter(|&f| path_facet_predicate(n, f))
                .collect();
            let mut sorted = predicted.clone();
            sorted.sort();
            assert_eq!(sorted, complex.facets(), "n = {n}");
        }
        assert!(!path_facet_predicate(8, VertexSet::empty()));
        assert!(!path_facet_predicate(8, vs(&[9])));
        assert!(path_facet_predicate(8, vs(&[1, 4, 7])));
        assert!(!path_facet_predicate(8, vs(&[1, 4, 8])));
    }

    #[test]
    fn family_complex_small_cases() {
        assert_eq!(Family::Path.complex(2).unwrap(), cx(2, &[&[1], &[2]]));
        assert_eq!(Family::Path.complex(3).unwrap(), cx(3, &[&[2], &[1, 3]]));
        assert_eq!(
            Family::Cycle.complex(4).unwrap(),
            cx(4, &[&[1, 3], &[2, 4]])
        );
        assert!(Family::Cycle.complex(2).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let c = cx(4, &[&[1, 2], &[3]]);
        let js = c.to_json();
        assert_eq!(js, r#"{"ambient":4,"facets":[[3],[1,2]]}"#);
        assert_eq!(SimplicialComplex::from_json(&js).unwrap(), c);
        // non-antichain input minimalizes on the way in
        let c2 = SimplicialComplex::from_json(r#"{"ambient":3,"facets":[[1],[1,2]]}"#).unwrap();
        assert_eq!(c2.facets(), &[vs(&[1, 2])]);
        assert!(SimplicialComplex::from_json(r#"{"ambient":3,"facets":[[4]]}"#).is_err());
        assert!(SimplicialComplex::from_json(r#"{"ambient":70,"facets":[]}"#).is_err());
        assert!(SimplicialComplex::from_json(r#"{"ambient":3,"facets":[[1,1]]}"#).is_err());
        let void = SimplicialComplex::from_json(r#"{"ambient":3,"facets":[]}"#).unwrap();
        assert!(void.is_void());
        let irr = SimplicialComplex::from_json(r#"{"ambient":3,"facets":[[]]}"#).unwrap();
        assert!(irr.is_irrelevant());
    }

    #[test]
    fn minimal_transversal_basics() {
        // hitting sets of the edge set of a triangle are the 2-subsets
        let tri = [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])];
        assert_eq!(
            minimal_transversals(3, &tri).unwrap(),
            vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]
        );
        // empty member kills everything
        assert!(minimal_transversals(3, &[vs(&[1]), VertexSet::empty()]).unwrap().is_empty());
        // empty family has the empty transversal
        assert_eq!(minimal_transversals(3, &[]).unwrap(), vec![VertexSet::empty()]);
    }
}
