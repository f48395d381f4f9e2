//! Leaf orders of quasi-forests, the intersection multiset of a facet
//! family, Scarf complexes of squarefree monomial ideals, and the sweep
//! tying leaf-order sensitivity to Scarf resolutions of cover ideals.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::betti::{betti_hochster, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::FieldSpec;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::report::{Check, Report};
use crate::set::VertexSet;

/// Ceiling on generator count in `scarf_complex`: the scan walks 2^s lcms.
pub const MAX_SCARF_GENS: usize = 20;

/// Ceiling on facet count in `intersection_multiset`: 2^q intersections.
pub const MAX_INTERSECTION_FACETS: usize = 20;

/// Default facet cap for `all_leaf_orders`; q facets mean up to q! orders.
pub const DEFAULT_LEAF_FACET_CAP: usize = 9;

/// An order F1,...,Fq of a complex's facets in which every Fi past the
/// first is a leaf of the subcomplex spanned by F1,...,Fi: some earlier
/// facet G (a branch) satisfies H & Fi <= G & Fi for every earlier H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafOrder {
    facets: Vec<VertexSet>,
    branches: Vec<Vec<usize>>,
}

impl LeafOrder {
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Positions j < i of all branches of the facet at position i.
    /// Empty exactly at i = 0.
    pub fn branches_at(&self, i: usize) -> &[usize] {
        &self.branches[i]
    }

    /// The sets G & Fi for i = 1..q, taking the first recorded branch at
    /// each position.
    pub fn branch_intersections(&self) -> Vec<VertexSet> {
        (1..self.facets.len())
            .map(|i| self.facets[self.branches[i][0]] & self.facets[i])
            .collect()
    }
}

/// Positions in `others` whose intersection with `facet` contains every
/// member's intersection with `facet`.
fn branch_positions(facet: VertexSet, others: &[VertexSet]) -> Vec<usize> {
    (0..others.len())
        .filter(|&j| {
            let gf = others[j] & facet;
            others.iter().all(|&h| (h & facet).is_subset(gf))
        })
        .collect()
}

fn order_from_facets(facets: Vec<VertexSet>) -> LeafOrder {
    let branches =
        (0..facets.len()).map(|i| branch_positions(facets[i], &facets[..i])).collect();
    LeafOrder { facets, branches }
}

/// One leaf order of the complex, or None when none exists. Peels the
/// canonically last facet among the current leaves and reverses, so the
/// returned order starts at canonically early facets. Removing a leaf
/// never destroys the property, so peeling fails only on genuine
/// non-quasi-forests.
pub fn leaf_order(c: &SimplicialComplex) -> Result<Option<LeafOrder>> {
    if c.is_void() {
        return Err(Error::InvalidArgument("a leaf order needs at least one facet".into()));
    }
    let mut remaining: Vec<VertexSet> = c.facets().to_vec();
    let mut peeled: Vec<VertexSet> = Vec::new();
    while remaining.len() > 1 {
        let leaf = (0..remaining.len()).rev().find(|&p| {
            let mut others = remaining.clone();
            let f = others.remove(p);
            !branch_positions(f, &others).is_empty()
        });
        match leaf {
            None => return Ok(None),
            Some(p) => peeled.push(remaining.remove(p)),
        }
    }
    peeled.push(remaining[0]);
    peeled.reverse();
    Ok(Some(order_from_facets(peeled)))
}

/// Every leaf order of the complex, lexicographic in canonical facet
/// positions. Empty iff the complex is not a quasi-forest.
pub fn all_leaf_orders(c: &SimplicialComplex, cap: usize) -> Result<Vec<LeafOrder>> {
    if c.is_void() {
        return Err(Error::InvalidArgument("a leaf order needs at least one facet".into()));
    }
    let facets = c.facets();
    if facets.len() > cap {
        return Err(Error::resource_hint(
            "facet count in the exhaustive leaf-order search",
            facets.len() as u64,
            cap as u64,
            "; the search visits up to q! orders",
        ));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let mut used = vec![false; facets.len()];
    extend_orders(facets, &mut prefix, &mut used, &mut out);
    Ok(out)
}

fn extend_orders(
    facets: &[VertexSet],
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<LeafOrder>,
) {
    if prefix.len() == facets.len() {
        out.push(order_from_facets(prefix.iter().map(|&p| facets[p]).collect()));
        return;
    }
    for p in 0..facets.len() {
        if used[p] {
            continue;
        }
        let extends = prefix.is_empty() || {
            let others: Vec<VertexSet> = prefix.iter().map(|&q| facets[q]).collect();
            !branch_positions(facets[p], &others).is_empty()
        };
        if extends {
            used[p] = true;
            prefix.push(p);
            extend_orders(facets, prefix, used, out);
            prefix.pop();
            used[p] = false;
        }
    }
}

/// Why a leaf order is or is not sensitive. Positions index `facets()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensitivityVerdict {
    multi_branch_positions: Vec<usize>,
    comparable_pairs: Vec<(usize, usize)>,
}

impl SensitivityVerdict {
    pub fn sensitive(&self) -> bool {
        self.multi_branch_positions.is_empty() && self.comparable_pairs.is_empty()
    }

    /// Positions i > 0 whose facet has more than one branch.
    pub fn multi_branch_positions(&self) -> &[usize] {
        &self.multi_branch_positions
    }

    /// Position pairs whose branch intersections are comparable under
    /// inclusion (equality included).
    pub fn comparable_pairs(&self) -> &[(usize, usize)] {
        &self.comparable_pairs
    }

    pub fn describe(&self) -> String {
        if self.sensitive() {
            return "sensitive".into();
        }
        let mut parts = Vec::new();
        if !self.multi_branch_positions.is_empty() {
            parts.push(format!(
                "branch not unique at positions {:?}",
                self.multi_branch_positions
            ));
        }
        if !self.comparable_pairs.is_empty() {
            parts.push(format!(
                "comparable branch intersections at position pairs {:?}",
                self.comparable_pairs
            ));
        }
        format!("not sensitive: {}", parts.join("; "))
    }
}

/// Sensitivity of a leaf order: every facet past the first has exactly
/// one branch, and the branch intersections G & Fi are pairwise
/// incomparable under inclusion. Comparability is rejected in both
/// directions, which also rules out repeats.
pub fn is_sensitive(lo: &LeafOrder) -> SensitivityVerdict {
    let multi_branch_positions =
        (1..lo.len()).filter(|&i| lo.branches_at(i).len() != 1).collect();
    let inters = lo.branch_intersections();
    let mut comparable_pairs = Vec::new();
    for a in 0..inters.len() {
        for b in a + 1..inters.len() {
            if inters[a].is_subset(inters[b]) || inters[b].is_subset(inters[a]) {
                comparable_pairs.push((a + 1, b + 1));
            }
        }
    }
    SensitivityVerdict { multi_branch_positions, comparable_pairs }
}

/// The multiset of intersections of two or more facets, one entry per
/// index subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMultiset {
    entries: BTreeMap<VertexSet, u64>,
    total: u64,
}

impl IntersectionMultiset {
    /// Distinct values with their multiplicities, canonically ordered.
    pub fn entries(&self) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
        self.entries.iter().map(|(&s, &m)| (s, m))
    }

    pub fn multiplicity(&self, s: VertexSet) -> u64 {
        self.entries.get(&s).copied().unwrap_or(0)
    }

    /// Values of multiplicity exactly 1, canonically ordered.
    pub fn unique(&self) -> Vec<VertexSet> {
        self.entries.iter().filter(|&(_, &m)| m == 1).map(|(&s, _)| s).collect()
    }

    /// Number of entries counted with multiplicity: 2^q - q - 1.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Multiset literal, largest values first, repeats abbreviated with a
    /// caret exponent.
    pub fn multiset_string(&self) -> String {
        let body: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|(s, &m)| if m == 1 { format!("{s}") } else { format!("{s}^{m}") })
            .collect();
        format!("{{{}}}", body.join(","))
    }

    pub fn unique_string(&self) -> String {
        let body: Vec<String> =
            self.unique().into_iter().rev().map(|s| format!("{s}")).collect();
        format!("{{{}}}", body.join(","))
    }
}

/// Intersections of every index subset of size at least two.
pub fn intersection_multiset(facets: &[VertexSet]) -> Result<IntersectionMultiset> {
    let q = facets.len();
    if !(2..=MAX_INTERSECTION_FACETS).contains(&q) {
        return Err(Error::resource_hint(
            "facet count in the intersection multiset",
            q as u64,
            MAX_INTERSECTION_FACETS as u64,
            "; between 2 and 20 facets are supported",
        ));
    }
    let mut entries: BTreeMap<VertexSet, u64> = BTreeMap::new();
    let mut total = 0u64;
    for mask in 1u32..(1 << q) {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut meet: Option<VertexSet> = None;
        for (j, &f) in facets.iter().enumerate() {
            if mask & (1 << j) != 0 {
                meet = Some(match meet {
                    None => f,
                    Some(m) => m & f,
                });
            }
        }
        *entries.entry(meet.expect("mask has set bits")).or_insert(0) += 1;
        total += 1;
    }
    Ok(IntersectionMultiset { entries, total })
}

/// Checks that every multiplicity-one intersection of the order's facets
/// arises as a branch intersection G & Fi, and that under sensitivity the
/// two collections coincide exactly.
pub fn lemma_a_star_membership(lo: &LeafOrder) -> Result<bool> {
    if lo.len() < 2 {
        return Ok(true);
    }
    let unique = intersection_multiset(lo.facets())?.unique();
    let mut from_branches: BTreeSet<VertexSet> = BTreeSet::new();
    for i in 1..lo.len() {
        for &j in lo.branches_at(i) {
            from_branches.insert(lo.facets()[j] & lo.facets()[i]);
        }
    }
    if !unique.iter().all(|s| from_branches.contains(s)) {
        return Ok(false);
    }
    if is_sensitive(lo).sensitive() {
        let firsts: BTreeSet<VertexSet> = lo.branch_intersections().into_iter().collect();
        let unique_set: BTreeSet<VertexSet> = unique.into_iter().collect();
        return Ok(firsts == unique_set);
    }
    Ok(true)
}

/// The subsets of generator indices whose lcm no other subset attains,
/// with positions 1..=s as vertices, plus the count at each cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScarfComplexData {
    generators: usize,
    faces: Vec<VertexSet>,
    fvector: Vec<u64>,
}

impl ScarfComplexData {
    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// Faces in canonical order.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Entry c counts the faces with c generators.
    pub fn fvector(&self) -> &[u64] {
        &self.fvector
    }

    pub fn face_count_of_size(&self, c: usize) -> u64 {
        self.fvector.get(c).copied().unwrap_or(0)
    }
}

/// Faces are the nonempty generator-index subsets whose lcm is attained
/// by no other subset. The scan tabulates all 2^s - 1 lcms.
pub fn scarf_complex(ideal: &SquarefreeMonomialIdeal) -> Result<ScarfComplexData> {
    let s = ideal.gen_count();
    if s > MAX_SCARF_GENS {
        return Err(Error::resource_hint(
            "generator count in the scarf face scan",
            s as u64,
            MAX_SCARF_GENS as u64,
            "; the scan tabulates 2^s lcms",
        ));
    }
    let gens = ideal.gens();
    let total = 1usize << s;
    let mut lcms = vec![0u64; total];
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)] | gens[low].bits();
    }
    let mut by_lcm: Vec<(u64, usize)> =
        (1..total).map(|mask| (lcms[mask], mask)).collect();
    by_lcm.sort_unstable();
    let mut faces: Vec<VertexSet> = Vec::new();
    let mut k = 0;
    while k < by_lcm.len() {
        let mut run = k + 1;
        while run < by_lcm.len() && by_lcm[run].0 == by_lcm[k].0 {
            run += 1;
        }
        if run == k + 1 {
            faces.push(VertexSet::from_bits(by_lcm[k].1 as u64));
        }
        k = run;
    }
    faces.sort();
    let mut fvector = vec![0u64; s + 1];
    for f in &faces {
        fvector[f.len() as usize] += 1;
    }
    Ok(ScarfComplexData { generators: s, faces, fvector })
}

/// True when the Scarf face counts account for the whole table: at every
/// cardinality c the number of faces equals the total Betti number in
/// homological degree c - 1. The table must list the ideal's generator
/// degrees in its first row.
pub fn has_scarf_resolution(
    ideal: &SquarefreeMonomialIdeal,
    table: &BettiTable,
) -> Result<bool> {
    let mut degrees: BTreeMap<u32, u64> = BTreeMap::new();
    for &g in ideal.gens() {
        *degrees.entry(g.len()).or_insert(0) += 1;
    }
    let row0: BTreeMap<u32, u64> =
        table.entries().filter(|&(i, _, _)| i == 0).map(|(_, j, v)| (j, v)).collect();
    if row0 != degrees {
        return Err(Error::InvalidArgument(
            "the table's first row does not list the ideal's generator degrees".into(),
        ));
    }
    let scarf = scarf_complex(ideal)?;
    let (pd, _) = table.pd_reg()?;
    let top = (scarf.fvector().len() - 1).max(pd as usize + 1);
    for c in 1..=top {
        if scarf.face_count_of_size(c) != table.total(c as u32 - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive sweep over graphs with no isolated vertex and chordal
/// complement, n <= n_max: all leaf orders of the complement's clique
/// complex must agree on sensitivity, and that verdict must match whether
/// the cover ideal's Betti table is accounted for by its Scarf complex.
pub fn verify_scarf_theorem(n_max: u32) -> Result<Report> {
    if !(2..=7).contains(&n_max) {
        return Err(Error::InvalidArgument(format!(
            "the sweep is sized for 2 <= n_max <= 7, got {n_max}"
        )));
    }
    let mut checks = Vec::new();
    for n in 2..=n_max {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        let masks = 1u64 << pairs.len();
        let (count, mut violations) = (0..masks)
            .into_par_iter()
            .try_fold(
                || (0u64, Vec::new()),
                |(mut c, mut viol), mask| {
                    if let Some(outcome) = sweep_instance(n, &pairs, mask) {
                        c += 1;
                        if let Some(witness) = outcome? {
                            viol.push((mask, witness));
                        }
                    }
                    Ok::<_, Error>((c, viol))
                },
            )
            .try_reduce(
                || (0u64, Vec::new()),
                |a, mut b| {
                    let mut viol = a.1;
                    viol.append(&mut b.1);
                    Ok((a.0 + b.0, viol))
                },
            )?;
        violations.sort();
        checks.push(Check::new(
            format!("n = {n}: sensitivity matches scarf resolutions"),
            violations.is_empty(),
            format!(
                "{count} graphs with chordal complement checked, {} violations",
                violations.len()
            ),
        ));
        for (mask, witness) in violations {
            checks.push(Check::new(format!("n = {n}, edge mask {mask}"), false, witness));
        }
    }
    Ok(Report::new(format!("scarf resolution equivalence sweep to n = {n_max}"), checks))
}

/// None: the mask is outside the sweep. Some(Ok(None)): checked clean.
/// Some(Ok(Some(w))): a violation described by w.
fn sweep_instance(
    n: u32,
    pairs: &[(u32, u32)],
    mask: u64,
) -> Option<Result<Option<String>>> {
    let edges: Vec<(u32, u32)> = pairs
        .iter()
        .enumerate()
        .filter(|&(t, _)| mask & (1 << t) != 0)
        .map(|(_, &e)| e)
        .collect();
    let g = Graph::new(n, edges).expect("pairs are valid edges");
    if g.has_isolated_vertex() || !g.complement().is_chordal() {
        return None;
    }
    Some(check_instance(&g))
}

fn check_instance(g: &Graph) -> Result<Option<String>> {
    let describe = || {
        let body: Vec<String> =
            g.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect();
        format!("n = {}, edges {}", g.n(), body.join(" "))
    };
    let delta = SimplicialComplex::clique_complex(&g.complement());
    let orders = all_leaf_orders(&delta, DEFAULT_LEAF_FACET_CAP)?;
    let greedy = leaf_order(&delta)?;
    let (first, greedy) = match (orders.first(), greedy) {
        (Some(f), Some(gr)) => (f, gr),
        _ => {
            return Ok(Some(format!(
                "{}: no leaf order despite a chordal complement",
                describe()
            )))
        }
    };
    let verdict = is_sensitive(first).sensitive();
    if orders.iter().any(|o| is_sensitive(o).sensitive() != verdict)
        || is_sensitive(&greedy).sensitive() != verdict
    {
        return Ok(Some(format!("{}: leaf orders disagree on sensitivity", describe())));
    }
    let ideal = SquarefreeMonomialIdeal::cover_ideal(g)?;
    let table = betti_hochster(&ideal, FieldSpec::Rationals)?;
    let scarf = has_scarf_resolution(&ideal, &table)?;
    if verdict != scarf {
        return Ok(Some(format!(
            "{}: sensitivity {} but scarf account {}",
            describe(),
            verdict,
            scarf
        )));
    }
    Ok(None)
}

/// Exhaustive sweep over graphs with no isolated vertex, n <= n_max: the
/// resolution-based Gorenstein test must agree with the complete
/// bipartite predicate on every instance.
pub fn verify_gorenstein_theorem(n_max: u32, field: FieldSpec) -> Result<Report> {
    if !(2..=7).contains(&n_max) {
        return Err(Error::InvalidArgument(format!(
            "the sweep is sized for 2 <= n_max <= 7, got {n_max}"
        )));
    }
    let mut checks = Vec::new();
    for n in 2..=n_max {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        let masks = 1u64 << pairs.len();
        let (count, mut violations) = (0..masks)
            .into_par_iter()
            .try_fold(
                || (0u64, Vec::new()),
                |(mut c, mut viol), mask| {
                    let edges: Vec<(u32, u32)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| mask & (1 << t) != 0)
                        .map(|(_, &e)| e)
                        .collect();
                    let g = Graph::new(n, edges).expect("pairs are valid edges");
                    if !g.has_isolated_vertex() {
                        c += 1;
                        let resolved = is_gorenstein(&g, field)?;
                        let shaped = g.is_complete_bipartite();
                        if resolved != shaped {
                            let body: Vec<String> = g
                                .edges()
                                .iter()
                                .map(|&(u, v)| format!("{u}-{v}"))
                                .collect();
                            viol.push((
                                mask,
                                format!(
                                    "n = {n}, edges {}: resolution test {} but shape test {}",
                                    body.join(" "),
                                    resolved,
                                    shaped
                                ),
                            ));
                        }
                    }
                    Ok::<_, Error>((c, viol))
                },
            )
            .try_reduce(
                || (0u64, Vec::new()),
                |a, mut b| {
                    let mut viol = a.1;
                    viol.append(&mut b.1);
                    Ok((a.0 + b.0, viol))
                },
            )?;
        violations.sort();
        checks.push(Check::new(
            format!("n = {n}: the two characterizations agree"),
            violations.is_empty(),
            format!(
                "{count} graphs without isolated vertices checked, {} violations",
                violations.len()
            ),
        ));
        for (mask, witness) in violations {
            checks.push(Check::new(format!("n = {n}, edge mask {mask}"), false, witness));
        }
    }
    Ok(Report::new(
        format!("complete bipartite characterization sweep to n = {n_max} over {field}"),
        checks,
    ))
}

/// True when the quotient by the cover ideal is Cohen-Macaulay (the
/// ideal's projective dimension plus one reaches the height) of type 1
/// (last total Betti number 1). Needs an edge and no isolated vertices.
pub fn is_gorenstein(g: &Graph, field: FieldSpec) -> Result<bool> {
    if g.edge_count() == 0 || g.has_isolated_vertex() {
        return Err(Error::DomainViolation(
            "the characterization needs at least one edge and no isolated vertices".into(),
        ));
    }
    let ideal = SquarefreeMonomialIdeal::cover_ideal(g)?;
    let table = betti_hochster(&ideal, field)?;
    let (pd, _) = table.pd_reg()?;
    Ok(pd + 1 == ideal.height()? && table.total(pd) == 1)
}
