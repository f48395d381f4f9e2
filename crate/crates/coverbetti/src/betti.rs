//! Graded Betti tables by two independent routes.
//!
//! `betti_hochster` sweeps every vertex subset W and adds the reduced
//! homology of the restricted Stanley-Reisner complex into the table:
//! dim H~_{t-1}(restriction to W) lands at (i, j) = (|W| - t - 1, |W|).
//! `betti_corner_links` instead computes one entry of the table for a
//! cover ideal as a sum of link homologies inside the clique complex of
//! the complement graph, touching far fewer subsets. The two routes share
//! nothing past the rank code, so each one cross-checks the other.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::homology::{self, FieldSpec};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::report::{Check, Report};
use crate::set::VertexSet;

/// Largest ambient size the full-table sweep accepts by default; the
/// sweep visits all 2^n restrictions.
pub const DEFAULT_HOCHSTER_CAP: u32 = 14;

/// Finite map (homological degree i, internal degree j) -> Betti number.
/// Zero values are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: u32,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new(n: u32) -> BettiTable {
        BettiTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, j: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic (i, j) order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// Total Betti number in homological degree i.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ti, _), _)| ti == i)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn pd(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn reg(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// (projective dimension, regularity). The empty table has neither.
    pub fn pd_reg(&self) -> Result<(u32, u32)> {
        match (self.pd(), self.reg()) {
            (Some(p), Some(r)) => Ok((p, r)),
            _ => Err(Error::InvalidArgument("empty Betti table has no pd or reg".into())),
        }
    }

    /// Text triangle, rows indexed by j - i and columns by i; absent
    /// entries print as dots.
    pub fn triangle_string(&self) -> String {
        if self.entries.is_empty() {
            return "(empty table)\n".into();
        }
        let pd = self.pd().unwrap();
        let dmin = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
        let dmax = self.reg().unwrap();
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        grid.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.total(i).to_string()));
        grid.push(totals);
        for d in dmin..=dmax {
            let mut row = vec![format!("{d}:")];
            for i in 0..=pd {
                let v = self.get(i, i + d);
                row.push(if v == 0 { ".".into() } else { v.to_string() });
            }
            grid.push(row);
        }
        let ncols = pd as usize + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in &grid {
            for (c, cell) in row.iter().enumerate() {
                if c == 0 {
                    out.push_str(&format!("{cell:<w$}", w = widths[0]));
                } else {
                    out.push_str(&format!("  {cell:>w$}", w = widths[c]));
                }
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<(u32, u32), u64>);
        struct Entry {
            i: u32,
            j: u32,
            v: u64,
        }
        impl Serialize for Entry {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut s = serializer.serialize_struct("Entry", 3)?;
                s.serialize_field("i", &self.i)?;
                s.serialize_field("j", &self.j)?;
                s.serialize_field("v", &self.v)?;
                s.end()
            }
        }
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (&(i, j), &v) in self.0 {
                    seq.serialize_element(&Entry { i, j, v })?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("entries", &Entries(&self.entries))?;
        s.end()
    }
}

/// Faces of the restriction to w, grouped by size, as sorted bit masks.
/// The caller has already ruled out the full simplex, so this stays a
/// proper subcomplex.
fn restriction_levels(facets: &[VertexSet], w: VertexSet) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); w.len() as usize + 1];
    for s in w.subsets() {
        if facets.iter().any(|&f| s.is_subset(f)) {
            levels[s.len() as usize].push(s.bits());
        }
    }
    while levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }
    levels
}

/// Full graded Betti table of a squarefree monomial ideal via the
/// restriction sweep, with the default ambient cap.
pub fn betti_hochster(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_hochster_with_cap(ideal, field, DEFAULT_HOCHSTER_CAP)
}

/// Restriction sweep with an explicit ambient cap. Restrictions that are
/// full simplices or cones are skipped outright; both have no reduced
/// homology over any field.
pub fn betti_hochster_with_cap(
    ideal: &SquarefreeMonomialIdeal,
    field: FieldSpec,
    cap: u32,
) -> Result<BettiTable> {
    let n = ideal.n();
    if n > cap {
        return Err(Error::resource_hint(
            "ambient vertex count in the full-table sweep",
            n as u64,
            cap as u64,
            "; betti_corner_links computes single entries without the 2^n sweep",
        ));
    }
    let gamma = ideal.stanley_reisner_complex()?;
    let masks: Vec<u64> = VertexSet::full(n).subsets().map(VertexSet::bits).collect();
    let merged = masks
        .par_iter()
        .try_fold(BTreeMap::<(u32, u32), u64>::new, |mut acc, &bits| {
            let w = VertexSet::from_bits(bits);
            let facets = gamma.restriction_facets(w);
            if facets.contains(&w) {
                return Ok(acc);
            }
            let apex = facets.iter().fold(w, |a, &f| a & f);
            if !apex.is_empty() {
                return Ok(acc);
            }
            let levels = restriction_levels(&facets, w);
            let dims = homology::homology_dims_of_levels(&levels, field)?;
            let j = w.len();
            for (t, &d) in dims.iter().enumerate() {
                let t = t as u32;
                if d > 0 && j > t {
                    *acc.entry((j - t - 1, j)).or_insert(0) += d;
                }
            }
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;
    let mut table = BettiTable::new(n);
    for ((i, j), v) in merged {
        table.add(i, j, v);
    }
    Ok(table)
}

/// One Betti number beta_{i,i+j} of the cover ideal of g, as the sum of
/// dim H~_{i-1} over links of faces of size n-(i+j) in the clique
/// complex of the complement graph.
pub fn betti_corner_links(g: &Graph, i: u32, j: u32, field: FieldSpec) -> Result<u64> {
    if g.has_isolated_vertex() {
        return Err(Error::DomainViolation(
            "isolated vertices admit no cover ideal, so the link formula does not apply".into(),
        ));
    }
    if i < 1 {
        return Err(Error::InvalidArgument(
            "the link formula computes syzygy entries, so i must be at least 1".into(),
        ));
    }
    let n = g.n();
    if i + j > n {
        return Ok(0);
    }
    let size = n - (i + j);
    let delta = SimplicialComplex::clique_complex(&g.complement());
    let faces = delta.faces_of_size(size)?;
    faces
        .par_iter()
        .map(|&f| {
            let link = delta.link(f).expect("enumerated faces are faces");
            let levels = link.faces_by_size()?;
            let dims = homology::homology_dims_of_levels(&levels, field)?;
            Ok(dims.get(i as usize).copied().unwrap_or(0))
        })
        .try_reduce(|| 0u64, |a, b| Ok(a + b))
}

/// The subcomplex difference-of-h-vectors corner value for the path on n
/// vertices: with k and q fixed by n mod 3 (q = k-1 for n in {3k, 3k-1},
/// q = k for n = 3k+1), returns entry k of h(D(q)) - h(D(q)') where D is
/// the clique complex of the path complement, D(q) is generated by its
/// size-(q+1) faces and D(q)' by those that are not facets of D.
pub fn h_vector_corner(n: u32) -> Result<i64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "corner h-vector route needs n >= 2, got {n}"
        )));
    }
    let (k, q) = match n % 3 {
        0 => (n / 3, n / 3 - 1),
        1 => ((n - 1) / 3, (n - 1) / 3),
        _ => ((n + 1) / 3, (n + 1) / 3 - 1),
    };
    let delta = Family::Path.complex(n)?;
    let whole = delta.pure_skeleton(q)?;
    let nonfacet = delta.pure_skeleton_nonfacet(q)?;
    Ok(h_entry(&whole, k)? - h_entry(&nonfacet, k)?)
}

/// h-vector entry, taking the void complex and short vectors as zero.
fn h_entry(c: &SimplicialComplex, idx: u32) -> Result<i64> {
    if c.is_void() {
        return Ok(0);
    }
    let fh = c.fh_vectors()?;
    Ok(fh.h.get(idx as usize).copied().unwrap_or(0))
}

/// Closed forms for pd and reg of the edge ideal of a path or
/// cycle on n vertices, floor(n/3)-based.
pub fn edge_pd_reg_formula(family: Family, n: u32) -> Result<(u32, u32)> {
    let f = n / 3;
    match family {
        Family::Path => {
            if n < 2 {
                return Err(Error::InvalidArgument("path edge formulas need n >= 2".into()));
            }
            let pd = if n % 3 == 2 { 2 * f } else { 2 * f - 1 };
            let reg = if n % 3 == 2 { f + 2 } else { f + 1 };
            Ok((pd, reg))
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("cycle edge formulas need n >= 3".into()));
            }
            let pd = if n.is_multiple_of(3) { 2 * f - 1 } else { 2 * f };
            let reg = if n % 3 == 2 { f + 2 } else { f + 1 };
            Ok((pd, reg))
        }
    }
}

/// Closed forms for pd and reg of the cover ideal of a path or
/// cycle on n vertices.
pub fn cover_pd_reg_formula(family: Family, n: u32) -> Result<(u32, u32)> {
    match family {
        Family::Path => {
            if n < 2 {
                return Err(Error::InvalidArgument("path cover formulas need n >= 2".into()));
            }
            Ok(match n % 3 {
                0 => (n / 3, 2 * (n / 3)),
                1 => ((n - 1) / 3, 2 * ((n - 1) / 3)),
                _ => ((n + 1) / 3, 2 * ((n + 1) / 3) - 1),
            })
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("cycle cover formulas need n >= 3".into()));
            }
            let k = n / 3;
            Ok(match n % 3 {
                0 => (k, 2 * k),
                1 => (k, 2 * k + 1),
                _ => (k + 1, 2 * k + 1),
            })
        }
    }
}

/// The corner Betti number the closed-form theorems predict at
/// (pd, pd + reg) of the cover ideal: paths give 1, 1, k+1 and cycles
/// give 2, 1, 1 across the residue classes of n mod 3.
pub fn theorem_corner_value(family: Family, n: u32) -> Result<u64> {
    match family {
        Family::Path => {
            if n < 2 {
                return Err(Error::InvalidArgument("path corner values need n >= 2".into()));
            }
            Ok(match n % 3 {
                1 => (n - 1) as u64 / 3 + 1,
                _ => 1,
            })
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("cycle corner values need n >= 3".into()));
            }
            Ok(if n.is_multiple_of(3) { 2 } else { 1 })
        }
    }
}

/// Enumerative verification of the three facet-counting lemmas behind the
/// path theorem, on the actual clique complexes of path complements:
/// part (a) on 3k vertices, part (b) on 3k-1, part (c) on 3k+1.
pub fn verify_lemma_counts(k: u32) -> Result<Report> {
    if !(2..=6).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "lemma count sweep is sized for 2 <= k <= 6, got {k}"
        )));
    }
    let mut checks = Vec::new();

    // (a) on 3k vertices: a unique size-k facet with predictable support,
    // every proper subset of which sits inside a bigger facet
    let delta = Family::Path.complex(3 * k)?;
    let small: Vec<VertexSet> =
        delta.facets().iter().copied().filter(|f| f.len() == k).collect();
    let expected: VertexSet = (1..=k).map(|t| 3 * t - 1).collect();
    checks.push(Check::value("(a) number of size-k facets", small.len(), 1));
    checks.push(Check::new(
        "(a) the size-k facet has the predicted support",
        small == [expected],
        format!("got {small:?}, expected [{expected}]"),
    ));
    let absorbed = expected.subsets().filter(|&s| s != expected).all(|s| {
        delta.facets().iter().any(|&f| f.len() > k && s.is_subset(f))
    });
    checks.push(Check::new(
        "(a) every proper subset lies in a larger facet",
        absorbed,
        "scanned all proper subsets",
    ));

    // (b) on 3k-1 vertices: k+1 size-k facets; among the size-(k-1) faces
    // of their span exactly k are critical, and every smaller face of the
    // span lies in a facet of size > k
    let delta = Family::Path.complex(3 * k - 1)?;
    let small: Vec<VertexSet> =
        delta.facets().iter().copied().filter(|f| f.len() == k).collect();
    checks.push(Check::value("(b) number of size-k facets", small.len(), k as usize + 1));
    let mut span_faces = std::collections::BTreeSet::new();
    for &f in &small {
        for s in f.subsets() {
            span_faces.insert(s);
        }
    }
    let in_larger = |s: VertexSet| {
        delta.facets().iter().any(|&f| f.len() > k && s.is_subset(f))
    };
    let critical =
        span_faces.iter().filter(|s| s.len() == k - 1 && !in_larger(**s)).count();
    checks.push(Check::value("(b) critical size-(k-1) faces of the span", critical, k as usize));
    let smaller_absorbed =
        span_faces.iter().filter(|s| s.len() < k - 1).all(|&s| in_larger(s));
    checks.push(Check::new(
        "(b) every smaller face of the span lies in a larger facet",
        smaller_absorbed,
        "scanned all span faces below size k-1",
    ));

    // (c) on 3k+1 vertices: counts of faces lying in a size-(k+1) facet
    // but no larger one, at sizes k and k-1; everything of size k-2 lies
    // in a facet of size > k+1
    let delta = Family::Path.complex(3 * k + 1)?;
    let in_exact = |s: VertexSet| {
        delta.facets().iter().any(|&f| f.len() == k + 1 && s.is_subset(f))
    };
    let in_big = |s: VertexSet| {
        delta.facets().iter().any(|&f| f.len() > k + 1 && s.is_subset(f))
    };
    let count_k = delta
        .faces_of_size(k)?
        .into_iter()
        .filter(|&s| in_exact(s) && !in_big(s))
        .count();
    checks.push(Check::value(
        "(c) size-k faces capped by a size-(k+1) facet",
        count_k,
        ((k + 1) * (k + 1)) as usize,
    ));
    let count_k1 = delta
        .faces_of_size(k - 1)?
        .into_iter()
        .filter(|&s| in_exact(s) && !in_big(s))
        .count();
    checks.push(Check::value(
        "(c) size-(k-1) faces capped by a size-(k+1) facet",
        count_k1,
        (k * (k + 1) / 2) as usize,
    ));
    let tiny_absorbed = delta.faces_of_size(k - 2)?.into_iter().all(in_big);
    checks.push(Check::new(
        "(c) every size-(k-2) face lies in a facet of size > k+1",
        tiny_absorbed,
        "scanned all faces of size k-2",
    ));

    Ok(Report::new(format!("facet-counting lemmas at k = {k}"), checks))
}

/// Verifies the closed-form corner theorems for one family up to k_max:
/// the corner Betti number of the cover ideal by the link formula, by the
/// full sweep when n is under the cap, and for paths by the h-vector
/// corner route, plus pd/reg of both the cover and edge ideals against
/// the closed forms. Mismatches become failed checks, never panics.
pub fn verify_theorem(family: Family, k_max: u32, field: FieldSpec) -> Result<Report> {
    if k_max < 1 {
        return Err(Error::InvalidArgument("theorem sweep needs k_max >= 1".into()));
    }
    let mut checks = Vec::new();
    for k in 1..=k_max {
        let ns: [u32; 3] = match family {
            Family::Path => [3 * k - 1, 3 * k, 3 * k + 1],
            Family::Cycle => [3 * k, 3 * k + 1, 3 * k + 2],
        };
        for n in ns {
            let g = family.graph(n)?;
            let (pd_c, reg_c) = cover_pd_reg_formula(family, n)?;
            let corner = theorem_corner_value(family, n)?;
            let links = betti_corner_links(&g, pd_c, reg_c, field)?;
            checks.push(Check::value(
                format!("n={n}: corner entry by the link formula"),
                links,
                corner,
            ));
            if family == Family::Path {
                let h = h_vector_corner(n)?;
                checks.push(Check::value(
                    format!("n={n}: corner entry by the h-vector route"),
                    h,
                    corner as i64,
                ));
            }
            if n <= DEFAULT_HOCHSTER_CAP {
                let cover = SquarefreeMonomialIdeal::cover_ideal(&g)?;
                let table = betti_hochster(&cover, field)?;
                checks.push(Check::value(
                    format!("n={n}: corner entry by the full sweep"),
                    table.get(pd_c, pd_c + reg_c),
                    corner,
                ));
                checks.push(Check::value(
                    format!("n={n}: cover ideal (pd, reg)"),
                    format!("{:?}", table.pd_reg()?),
                    format!("{:?}", (pd_c, reg_c)),
                ));
                let edge = SquarefreeMonomialIdeal::edge_ideal(&g)?;
                let edge_table = betti_hochster(&edge, field)?;
                checks.push(Check::value(
                    format!("n={n}: edge ideal (pd, reg)"),
                    format!("{:?}", edge_table.pd_reg()?),
                    format!("{:?}", edge_pd_reg_formula(family, n)?),
                ));
            }
        }
    }
    Ok(Report::new(
        format!("{} corner theorem sweep to k = {k_max} over {field}", family.name()),
        checks,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn cover_table(g: &Graph) -> BettiTable {
        let ideal = SquarefreeMonomialIdeal::cover_ideal(g).unwrap();
        betti_hochster(&ideal, q()).unwrap()
    }

    #[test]
    fn two_variable_ideal_is_koszul() {
        let t = cover_table(&Graph::complete_bipartite(1, 1).unwrap());
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![(0, 1, 2), (1, 2, 1)]);
        assert_eq!(t.pd_reg().unwrap(), (1, 1));
    }

    #[test]
    fn path_on_four_vertices_cover_table() {
        let t = cover_table(&Graph::path(4).unwrap());
        assert_eq!(t.get(0, 2), 3);
        assert_eq!(t.get(1, 3), 2);
        assert_eq!(t.get(1, 4), 0);
        assert_eq!(t.pd_reg().unwrap(), (1, 2));
    }

    #[test]
    fn triangle_cover_table() {
        let t = cover_table(&Graph::cycle(3).unwrap());
        assert_eq!(t.get(1, 3), 2);
        assert_eq!(t.pd_reg().unwrap(), (1, 2));
    }

    #[test]
    fn pd_reg_formula_examples() {
        let p7 = SquarefreeMonomialIdeal::edge_ideal(&Graph::path(7).unwrap()).unwrap();
        assert_eq!(betti_hochster(&p7, q()).unwrap().pd_reg().unwrap(), (3, 3));
        let c8 = SquarefreeMonomialIdeal::edge_ideal(&Graph::cycle(8).unwrap()).unwrap();
        assert_eq!(betti_hochster(&c8, q()).unwrap().pd_reg().unwrap(), (4, 4));
        let jc8 = cover_table(&Graph::cycle(8).unwrap());
        assert_eq!(jc8.pd_reg().unwrap(), (3, 5));
    }

    #[test]
    fn corner_link_examples() {
        assert_eq!(betti_corner_links(&Graph::cycle(7).unwrap(), 2, 5, q()).unwrap(), 1);
        assert_eq!(betti_corner_links(&Graph::path(6).unwrap(), 2, 4, q()).unwrap(), 1);
        // out-of-range degrees have no faces to sum over
        assert_eq!(betti_corner_links(&Graph::path(4).unwrap(), 3, 9, q()).unwrap(), 0);
    }

    #[test]
    fn corner_links_rejects_bad_inputs() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert!(matches!(
            betti_corner_links(&g, 1, 1, q()),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            betti_corner_links(&Graph::path(4).unwrap(), 0, 2, q()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn corner_h_vector_values_for_small_paths() {
        let got: Vec<i64> = (2..=7).map(|n| h_vector_corner(n).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 1, 1, 3]);
        assert!(h_vector_corner(1).is_err());
    }

    #[test]
    fn sweep_cap_reports_a_resource_limit() {
        let ideal =
            SquarefreeMonomialIdeal::cover_ideal(&Graph::path(15).unwrap()).unwrap();
        match betti_hochster(&ideal, q()) {
            Err(Error::ResourceLimit { hint, .. }) => {
                assert!(hint.contains("betti_corner_links"));
            }
            other => panic!("expected a resource limit, got {other:?}"),
        }
    }

    #[test]
    fn hochster_agrees_with_links_on_small_cover_ideals() {
        for g in [Graph::path(6).unwrap(), Graph::cycle(6).unwrap(), Graph::cycle(5).unwrap()] {
            let t = cover_table(&g);
            for (i, j, v) in t.entries() {
                if i == 0 {
                    continue;
                }
                assert_eq!(
                    betti_corner_links(&g, i, j - i, q()).unwrap(),
                    v,
                    "mismatch at ({i},{j}) for {g:?}"
                );
            }
        }
    }

    #[test]
    fn generator_row_matches_generator_degrees() {
        let g = Graph::cycle(6).unwrap();
        let ideal = SquarefreeMonomialIdeal::cover_ideal(&g).unwrap();
        let t = betti_hochster(&ideal, q()).unwrap();
        let mut by_degree: BTreeMap<u32, u64> = BTreeMap::new();
        for gen in ideal.gens() {
            *by_degree.entry(gen.len()).or_insert(0) += 1;
        }
        let row: BTreeMap<u32, u64> = t
            .entries()
            .filter(|&(i, _, _)| i == 0)
            .map(|(_, j, v)| (j, v))
            .collect();
        assert_eq!(row, by_degree);
    }

    #[test]
    fn lemma_counts_hold_for_small_k() {
        for k in 2..=3 {
            let report = verify_lemma_counts(k).unwrap();
            assert!(report.passed(), "{}", report.text());
        }
        assert!(verify_lemma_counts(1).is_err());
        assert!(verify_lemma_counts(7).is_err());
    }

    #[test]
    fn theorem_sweeps_pass_at_small_k() {
        let paths = verify_theorem(Family::Path, 2, q()).unwrap();
        assert!(paths.passed(), "{}", paths.text());
        let cycles = verify_theorem(Family::Cycle, 2, q()).unwrap();
        assert!(cycles.passed(), "{}", cycles.text());
    }

    #[test]
    fn closed_form_formula_values() {
        assert_eq!(edge_pd_reg_formula(Family::Path, 7).unwrap(), (3, 3));
        assert_eq!(edge_pd_reg_formula(Family::Cycle, 8).unwrap(), (4, 4));
        assert_eq!(cover_pd_reg_formula(Family::Cycle, 8).unwrap(), (3, 5));
        assert_eq!(cover_pd_reg_formula(Family::Path, 4).unwrap(), (1, 2));
        assert_eq!(theorem_corner_value(Family::Path, 7).unwrap(), 3);
        assert_eq!(theorem_corner_value(Family::Cycle, 9).unwrap(), 2);
    }

    #[test]
    fn table_serialization_shape() {
        let t = cover_table(&Graph::complete_bipartite(1, 1).unwrap());
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"entries":[{"i":0,"j":1,"v":2},{"i":1,"j":2,"v":1}]}"#
        );
        let tri = t.triangle_string();
        assert!(tri.contains("total:"), "{tri}");
        assert!(tri.starts_with("        0  1"), "{tri}");
    }
}
