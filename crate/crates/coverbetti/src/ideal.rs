//! Squarefree monomial ideals in x1, ..., xn, stored by the supports of
//! their minimal generators.

use serde::{Deserialize, Serialize};

use crate::complex::{minimal_transversals, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct SquarefreeMonomialIdeal {
    n: u32,
    gens: Vec<VertexSet>,
}

/// Wire format: {"n": 4, "gens": [[1,3],[2,3]]}. Deserialization
/// re-validates, so foreign input cannot smuggle in the unit ideal or a
/// non-minimal generating set.
#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: u32,
    gens: Vec<VertexSet>,
}

impl TryFrom<IdealRepr> for SquarefreeMonomialIdeal {
    type Error = Error;
    fn try_from(r: IdealRepr) -> Result<Self> {
        SquarefreeMonomialIdeal::from_gens(r.n, r.gens)
    }
}

impl From<SquarefreeMonomialIdeal> for IdealRepr {
    fn from(i: SquarefreeMonomialIdeal) -> IdealRepr {
        IdealRepr { n: i.n, gens: i.gens }
    }
}

impl std::fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.gens_as_monomial_strings().join(", "))
    }
}

impl SquarefreeMonomialIdeal {
    /// Builds an ideal from generator supports. Generators that contain
    /// another generator are redundant and get discarded; the empty
    /// support (the unit ideal) and an empty generator list (the zero
    /// ideal) are rejected.
    pub fn from_gens(n: u32, gens: Vec<VertexSet>) -> Result<SquarefreeMonomialIdeal> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "variable count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let full = VertexSet::full(n);
        for &g in &gens {
            if g.is_empty() {
                return Err(Error::InvalidArgument(
                    "empty generator support would make this the unit ideal".into(),
                ));
            }
            if !g.is_subset(full) {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} is not supported on {{1,...,{n}}}"
                )));
            }
        }
        let mut keep = vec![true; gens.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i != j
                    && keep[i]
                    && gens[j].is_subset(gens[i])
                    && (gens[i] != gens[j] || i > j)
                {
                    keep[i] = false;
                }
            }
        }
        let mut kept: Vec<VertexSet> =
            gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
        kept.sort();
        Ok(SquarefreeMonomialIdeal { n, gens: kept })
    }

    /// Edge ideal: one degree-2 generator per edge.
    pub fn edge_ideal(g: &Graph) -> Result<SquarefreeMonomialIdeal> {
        if g.edge_count() == 0 {
            return Err(Error::ZeroIdeal);
        }
        let gens = g.edges().iter().map(|&(u, v)| VertexSet::from_slice(&[u, v])).collect();
        SquarefreeMonomialIdeal::from_gens(g.n(), gens)
    }

    /// Vertex cover ideal: one generator per minimal vertex cover.
    /// Isolated vertices are rejected because they sit in no cover and
    /// break the duality this crate revolves around.
    pub fn cover_ideal(g: &Graph) -> Result<SquarefreeMonomialIdeal> {
        if g.edge_count() == 0 {
            return Err(Error::EmptyCoverIdeal);
        }
        if g.has_isolated_vertex() {
            return Err(Error::DomainViolation(format!(
                "graph has isolated vertices {}",
                g.isolated_vertices()
            )));
        }
        SquarefreeMonomialIdeal::from_gens(g.n(), g.minimal_vertex_covers()?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    /// Union of the supports of the given generators. At least one index,
    /// all in range.
    pub fn lcm_support(&self, indices: &[usize]) -> Result<VertexSet> {
        if indices.is_empty() {
            return Err(Error::InvalidArgument("lcm of no generators".into()));
        }
        let mut acc = VertexSet::empty();
        for &i in indices {
            let g = self.gens.get(i).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "generator index {i} out of range 0..{}",
                    self.gens.len()
                ))
            })?;
            acc = acc | *g;
        }
        Ok(acc)
    }

    /// The complex whose faces are the squarefree monomials outside the
    /// ideal. Its facets are the complements of the minimal transversals
    /// of the generator supports.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        let transversals = minimal_transversals(self.n, &self.gens)?;
        let facets: Vec<VertexSet> =
            transversals.into_iter().map(|t| t.complement_in(self.n)).collect();
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Smallest number of variables any minimal prime needs: n minus the
    /// largest facet size of the associated complex.
    pub fn height(&self) -> Result<u32> {
        let complex = self.stanley_reisner_complex()?;
        let max_facet =
            complex.facets().iter().map(|f| f.len()).max().unwrap_or(0);
        Ok(self.n - max_facet)
    }

    pub fn gens_as_monomial_strings(&self) -> Vec<String> {
        self.gens.iter().map(|&g| monomial_string(g)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SquarefreeMonomialIdeal> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("ideal JSON: {e}")))
    }
}

/// The squarefree monomial x_{i1}...x_{ik} for the support set, "1" for
/// the empty support.
pub fn monomial_string(s: VertexSet) -> String {
    if s.is_empty() {
        return "1".into();
    }
    s.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join("*")
}

/// The ideal generated by the minimal non-faces of a complex: the inverse
/// of `stanley_reisner_complex`. The void complex would give the unit
/// ideal and the full simplex the zero ideal; both are rejected.
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> Result<SquarefreeMonomialIdeal> {
    if c.is_void() {
        return Err(Error::InvalidArgument(
            "the void complex corresponds to the unit ideal".into(),
        ));
    }
    let complements: Vec<VertexSet> =
        c.facets().iter().map(|f| f.complement_in(c.ambient())).collect();
    let nonfaces = minimal_transversals(c.ambient(), &complements)?;
    if nonfaces.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    SquarefreeMonomialIdeal::from_gens(c.ambient(), nonfaces)
}

/// Confirms on one graph that the cover ideal is the Stanley-Reisner
/// ideal of the Alexander dual of the clique complex of the complement,
/// and that its generators are the complements of that complex's facets.
pub fn dual_correspondence_check(g: &Graph) -> Result<bool> {
    let cover = SquarefreeMonomialIdeal::cover_ideal(g)?;
    let delta = SimplicialComplex::clique_complex(&g.complement());
    let dual = delta.alexander_dual()?.complex;
    let via_dual = stanley_reisner_ideal(&dual)?;
    let mut via_facets: Vec<VertexSet> =
        delta.facets().iter().map(|f| f.complement_in(g.n())).collect();
    via_facets.sort();
    Ok(cover == via_dual && cover.gens() == via_facets.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(elems: &[u32]) -> VertexSet {
        VertexSet::from_slice(elems)
    }

    fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(u32, u32)> =
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (0u64..1 << m).map(move |mask| {
            let edges: Vec<_> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            Graph::new(n, edges).unwrap()
        })
    }

    #[test]
    fn construction_and_minimalization() {
        let i = SquarefreeMonomialIdeal::from_gens(
            4,
            vec![vs(&[1, 2, 3]), vs(&[1, 2]), vs(&[3, 4]), vs(&[1, 2])],
        )
        .unwrap();
        assert_eq!(i.gens(), &[vs(&[1, 2]), vs(&[3, 4])]);
        assert!(matches!(
            SquarefreeMonomialIdeal::from_gens(4, vec![]),
            Err(Error::ZeroIdeal)
        ));
        assert!(SquarefreeMonomialIdeal::from_gens(4, vec![VertexSet::empty()]).is_err());
        assert!(SquarefreeMonomialIdeal::from_gens(4, vec![vs(&[5])]).is_err());
    }

    #[test]
    fn edge_and_cover_ideals_of_small_graphs() {
        let p4 = Graph::path(4).unwrap();
        let i = SquarefreeMonomialIdeal::edge_ideal(&p4).unwrap();
        assert_eq!(i.gens(), &[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]);
        assert_eq!(i.gens_as_monomial_strings(), vec!["x1*x2", "x2*x3", "x3*x4"]);

        let j = SquarefreeMonomialIdeal::cover_ideal(&p4).unwrap();
        assert_eq!(j.gens(), &[vs(&[1, 3]), vs(&[2, 3]), vs(&[2, 4])]);

        let c4 = Graph::cycle(4).unwrap();
        let j = SquarefreeMonomialIdeal::cover_ideal(&c4).unwrap();
        assert_eq!(j.gens(), &[vs(&[1, 3]), vs(&[2, 4])]);

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let j = SquarefreeMonomialIdeal::cover_ideal(&k23).unwrap();
        assert_eq!(j.gens(), &[vs(&[1, 2]), vs(&[3, 4, 5])]);
        assert_eq!(j.gens_as_monomial_strings(), vec!["x1*x2", "x3*x4*x5"]);
    }

    #[test]
    fn degenerate_graphs_are_rejected() {
        let edgeless = Graph::new(3, Vec::<(u32, u32)>::new()).unwrap();
        assert!(matches!(SquarefreeMonomialIdeal::edge_ideal(&edgeless), Err(Error::ZeroIdeal)));
        assert!(matches!(
            SquarefreeMonomialIdeal::cover_ideal(&edgeless),
            Err(Error::EmptyCoverIdeal)
        ));
        let isolated = Graph::new(3, vec![(1, 2)]).unwrap();
        assert!(SquarefreeMonomialIdeal::edge_ideal(&isolated).is_ok());
        assert!(matches!(
            SquarefreeMonomialIdeal::cover_ideal(&isolated),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn lcm_support_unions_generators() {
        let j = SquarefreeMonomialIdeal::cover_ideal(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(j.lcm_support(&[0, 1]).unwrap(), vs(&[1, 2, 3]));
        assert_eq!(j.lcm_support(&[0, 1, 2]).unwrap(), vs(&[1, 2, 3, 4]));
        assert_eq!(j.lcm_support(&[2]).unwrap(), vs(&[2, 4]));
        assert!(j.lcm_support(&[]).is_err());
        assert!(j.lcm_support(&[3]).is_err());
    }

    #[test]
    fn stanley_reisner_of_edge_ideal_is_the_independence_complex() {
        for n in 2..=6 {
            for g in all_graphs(n) {
                if g.edge_count() == 0 {
                    continue;
                }
                let i = SquarefreeMonomialIdeal::edge_ideal(&g).unwrap();
                let sr = i.stanley_reisner_complex().unwrap();
                let indep = SimplicialComplex::clique_complex(&g.complement());
                assert_eq!(sr, indep, "graph {:?}", g.edges());
            }
        }
    }

    #[test]
    fn stanley_reisner_of_cover_ideal_has_edge_complement_facets() {
        for n in 2..=6 {
            for g in all_graphs(n) {
                if g.edge_count() == 0 || g.has_isolated_vertex() {
                    continue;
                }
                let j = SquarefreeMonomialIdeal::cover_ideal(&g).unwrap();
                let sr = j.stanley_reisner_complex().unwrap();
                let mut expected: Vec<VertexSet> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| vs(&[u, v]).complement_in(n))
                    .collect();
                expected.sort();
                expected.dedup();
                assert_eq!(sr.facets(), expected.as_slice(), "graph {:?}", g.edges());
            }
        }
    }

    #[test]
    fn stanley_reisner_ideal_inverts_the_complex() {
        for n in 2..=5 {
            for g in all_graphs(n) {
                if g.edge_count() == 0 {
                    continue;
                }
                let i = SquarefreeMonomialIdeal::edge_ideal(&g).unwrap();
                let back = stanley_reisner_ideal(&i.stanley_reisner_complex().unwrap()).unwrap();
                assert_eq!(back, i);
            }
        }
        assert!(stanley_reisner_ideal(&SimplicialComplex::void(3)).is_err());
        assert!(matches!(
            stanley_reisner_ideal(&SimplicialComplex::full_simplex(3)),
            Err(Error::ZeroIdeal)
        ));
        // the irrelevant complex corresponds to (x1, ..., xn)
        let irr = stanley_reisner_ideal(&SimplicialComplex::irrelevant(3)).unwrap();
        assert_eq!(irr.gens(), &[vs(&[1]), vs(&[2]), vs(&[3])]);
    }

    #[test]
    fn cover_ideal_matches_the_dual_correspondence() {
        for n in 2..=5 {
            for g in all_graphs(n) {
                if g.edge_count() == 0 || g.has_isolated_vertex() {
                    continue;
                }
                assert!(dual_correspondence_check(&g).unwrap(), "graph {:?}", g.edges());
            }
        }
        assert!(dual_correspondence_check(&Graph::complete_bipartite(3, 3).unwrap()).unwrap());
        assert!(dual_correspondence_check(&Graph::cycle(7).unwrap()).unwrap());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let j = SquarefreeMonomialIdeal::cover_ideal(&Graph::path(4).unwrap()).unwrap();
        let js = j.to_json();
        assert_eq!(js, r#"{"n":4,"gens":[[1,3],[2,3],[2,4]]}"#);
        assert_eq!(SquarefreeMonomialIdeal::from_json(&js).unwrap(), j);
        assert!(SquarefreeMonomialIdeal::from_json(r#"{"n":4,"gens":[]}"#).is_err());
        assert!(SquarefreeMonomialIdeal::from_json(r#"{"n":4,"gens":[[]]}"#).is_err());
        assert!(SquarefreeMonomialIdeal::from_json(r#"{"n":4,"gens":[[5]]}"#).is_err());
        // redundant generators minimalize on the way in
        let i = SquarefreeMonomialIdeal::from_json(r#"{"n":3,"gens":[[1],[1,2]]}"#).unwrap();
        assert_eq!(i.gens(), &[vs(&[1])]);
    }

    #[test]
    fn monomial_strings() {
        assert_eq!(monomial_string(vs(&[1, 3, 5])), "x1*x3*x5");
        assert_eq!(monomial_string(VertexSet::empty()), "1");
    }
}
