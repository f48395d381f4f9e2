//! Agreement sweeps between independent pipelines, at scales above what
//! the unit tests cover. Everything here is seeded and deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coverbetti::{
    all_leaf_orders, betti_corner_links, betti_hochster, cover_pd_reg_formula,
    dual_correspondence_check, has_scarf_resolution, is_sensitive, lemma_a_star_membership,
    h_vector_corner, scarf_complex, theorem_corner_value, Family, FieldSpec, Graph,
    SimplicialComplex, SquarefreeMonomialIdeal, VertexSet, DEFAULT_LEAF_FACET_CAP,
};

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Resamples until every vertex has a neighbor.
fn random_covered_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if !g.has_isolated_vertex() && g.edge_count() > 0 {
            return g;
        }
    }
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

/// Every cover-table entry with i >= 1 against the link formula, plus a
/// margin of degrees past the table where the formula must return zero.
fn assert_links_match_table(g: &Graph) {
    let ideal = SquarefreeMonomialIdeal::cover_ideal(g).unwrap();
    let table = betti_hochster(&ideal, q()).unwrap();
    let n = g.n();
    let (pd, _) = table.pd_reg().unwrap();
    for i in 1..=pd + 1 {
        for j in 0..=n + 1 - i {
            let links = betti_corner_links(g, i, j, q()).unwrap();
            assert_eq!(
                links,
                table.get(i, i + j),
                "entry ({i}, {}) of {}",
                i + j,
                g.to_edge_list_string().replace('\n', "; ")
            );
        }
    }
}

#[test]
fn link_formula_matches_the_full_sweep_on_random_graphs() {
    for n in 2..=10 {
        assert_links_match_table(&Graph::path(n).unwrap());
    }
    for n in 3..=10 {
        assert_links_match_table(&Graph::cycle(n).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let mut checked = 0usize;
    while checked < 200 {
        let n = rng.random_range(4..=10);
        let p = [0.3, 0.5, 0.7][rng.random_range(0..3)];
        let g = random_covered_graph(&mut rng, n, p);
        assert_links_match_table(&g);
        checked += 1;
    }
    assert_eq!(checked, 200);
}

#[test]
fn corner_routes_agree_for_paths_through_sixteen_vertices() {
    for n in 2..=16u32 {
        let expected = theorem_corner_value(Family::Path, n).unwrap();
        let (pd, reg) = cover_pd_reg_formula(Family::Path, n).unwrap();
        let links =
            betti_corner_links(&Graph::path(n).unwrap(), pd, reg, q()).unwrap();
        assert_eq!(links, expected, "link route at n = {n}");
        let h = h_vector_corner(n).unwrap();
        assert_eq!(h, expected as i64, "h-vector route at n = {n}");
        if n <= 14 {
            let ideal =
                SquarefreeMonomialIdeal::cover_ideal(&Graph::path(n).unwrap()).unwrap();
            let table = betti_hochster(&ideal, q()).unwrap();
            assert_eq!(table.get(pd, pd + reg), expected, "full sweep at n = {n}");
            assert_eq!(table.pd_reg().unwrap(), (pd, reg), "pd/reg at n = {n}");
        }
    }
}

/// Alexander duality swaps the invariants: reg J(G) = pd I(G) + 1 and
/// reg I(G) = pd J(G) + 1.
#[test]
fn duality_swaps_regularity_and_projective_dimension() {
    let check = |g: &Graph| {
        let edge = SquarefreeMonomialIdeal::edge_ideal(g).unwrap();
        let cover = SquarefreeMonomialIdeal::cover_ideal(g).unwrap();
        let (pd_i, reg_i) = betti_hochster(&edge, q()).unwrap().pd_reg().unwrap();
        let (pd_j, reg_j) = betti_hochster(&cover, q()).unwrap().pd_reg().unwrap();
        let listing = g.to_edge_list_string().replace('\n', "; ");
        assert_eq!(reg_j, pd_i + 1, "reg of the cover ideal of {listing}");
        assert_eq!(reg_i, pd_j + 1, "reg of the edge ideal of {listing}");
    };
    let mut exhaustive = 0usize;
    for n in 2..=5 {
        for g in all_graphs(n) {
            if g.edge_count() == 0 || g.has_isolated_vertex() {
                continue;
            }
            check(&g);
            exhaustive += 1;
        }
    }
    assert_eq!(exhaustive, 1 + 4 + 41 + 768);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..150 {
        let n = rng.random_range(6..=8);
        check(&random_covered_graph(&mut rng, n, 0.5));
    }
}

#[test]
fn cover_ideals_realize_the_dual_correspondence_exhaustively() {
    let mut checked = 0usize;
    for n in 2..=6 {
        for g in all_graphs(n) {
            if g.edge_count() == 0 || g.has_isolated_vertex() {
                continue;
            }
            assert!(
                dual_correspondence_check(&g).unwrap(),
                "dual correspondence fails for {}",
                g.to_edge_list_string().replace('\n', "; ")
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 4 + 41 + 768 + 27449);
}

/// lcm of two cover generators = variables outside the intersection of
/// the matching complement-complex facets.
#[test]
fn generator_lcms_complement_facet_intersections() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            if g.edge_count() == 0 || g.has_isolated_vertex() {
                continue;
            }
            let ideal = SquarefreeMonomialIdeal::cover_ideal(&g).unwrap();
            let delta = SimplicialComplex::clique_complex(&g.complement());
            let mut facets: Vec<VertexSet> =
                delta.facets().iter().map(|f| f.complement_in(n)).collect();
            facets.sort();
            let facets: Vec<VertexSet> =
                facets.iter().map(|f| f.complement_in(n)).collect();
            for a in 0..ideal.gen_count() {
                for b in a + 1..ideal.gen_count() {
                    assert_eq!(
                        ideal.lcm_support(&[a, b]).unwrap(),
                        (facets[a] & facets[b]).complement_in(n),
                    );
                }
            }
        }
    }
}

#[test]
fn scarf_faces_are_downward_closed_on_random_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut checked = 0usize;
    while checked < 200 {
        let n = rng.random_range(4..=10);
        let count = rng.random_range(2..=8);
        let mut gens = Vec::new();
        for _ in 0..count {
            let mask = rng.random_range(1..1u64 << n);
            gens.push(VertexSet::from_bits(mask));
        }
        let Ok(ideal) = SquarefreeMonomialIdeal::from_gens(n, gens) else {
            continue;
        };
        let scarf = scarf_complex(&ideal).unwrap();
        for &face in scarf.faces() {
            for sub in face.subsets() {
                if !sub.is_empty() {
                    assert!(
                        scarf.contains(sub),
                        "{sub} missing below {face} for {:?}",
                        ideal.gens()
                    );
                }
            }
        }
        checked += 1;
    }
    assert_eq!(checked, 200);
}

/// On every quasi-forest from a graph complement: each multiplicity-one
/// intersection arises as a branch intersection in every leaf order, and
/// every order agrees with every other (and with the greedy one) on
/// sensitivity.
#[test]
fn leaf_orders_agree_and_carry_the_unique_intersections() {
    let mut instances = 0usize;
    for n in 2..=5 {
        for g in all_graphs(n) {
            if g.edge_count() == 0 || g.has_isolated_vertex() {
                continue;
            }
            if !g.complement().is_chordal() {
                continue;
            }
            let delta = SimplicialComplex::clique_complex(&g.complement());
            let orders = all_leaf_orders(&delta, DEFAULT_LEAF_FACET_CAP).unwrap();
            assert!(!orders.is_empty(), "chordal complement must give a leaf order");
            let greedy = coverbetti::leaf_order(&delta).unwrap().unwrap();
            let sensitive = is_sensitive(&greedy).sensitive();
            for order in &orders {
                assert!(lemma_a_star_membership(order).unwrap());
                assert_eq!(is_sensitive(order).sensitive(), sensitive);
            }
            let ideal = SquarefreeMonomialIdeal::cover_ideal(&g).unwrap();
            let table = betti_hochster(&ideal, q()).unwrap();
            assert_eq!(
                has_scarf_resolution(&ideal, &table).unwrap(),
                sensitive,
                "resolution disagreement for {}",
                g.to_edge_list_string().replace('\n', "; ")
            );
            instances += 1;
        }
    }
    assert_eq!(instances, 1 + 4 + 38 + 581);
}

#[test]
fn restrictions_are_clique_complexes_of_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..300 {
        let n = rng.random_range(2..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let w = VertexSet::from_bits(rng.random_range(1..1u64 << n));
        let restricted =
            SimplicialComplex::clique_complex(&g).restriction(w).unwrap();
        let (induced, embedding) = g.induced_subgraph(w).unwrap();
        assert_eq!(restricted.embedding, embedding);
        assert_eq!(restricted.complex, SimplicialComplex::clique_complex(&induced));
    }
}

/// Faces split into those through v (star) and those avoiding v whose
/// maximal carriers avoid v too (deletion); the link collects exactly the
/// faces that extend by v.
#[test]
fn star_deletion_and_link_decompose_the_face_list() {
    let mut rng = ChaCha8Rng::seed_from_u64(58);
    for _ in 0..200 {
        let n = rng.random_range(2..=8);
        let c = SimplicialComplex::clique_complex(&random_graph(&mut rng, n, 0.6));
        let faces = c.all_faces().unwrap();
        for v in 1..=n {
            let point = VertexSet::singleton(v);
            if !c.is_face(point) {
                continue;
            }
            let mut star_faces = c.star(point).unwrap().all_faces().unwrap();
            let deletion_faces = c.deletion(point).all_faces().unwrap();
            star_faces.extend(deletion_faces.iter().copied());
            star_faces.sort();
            star_faces.dedup();
            assert_eq!(star_faces, faces, "star/deletion split at v = {v}");
            let mut expected_link: Vec<VertexSet> = faces
                .iter()
                .copied()
                .filter(|f| !f.contains(v) && c.is_face(f.with(v)))
                .collect();
            expected_link.sort();
            let mut link_faces = c.link(point).unwrap().all_faces().unwrap();
            link_faces.sort();
            assert_eq!(link_faces, expected_link, "link faces at v = {v}");
        }
    }
}

/// The tables of both ideals of paths and cycles carry no torsion at this
/// scale: all three standard fields give identical tables.
#[test]
fn family_tables_are_field_independent() {
    for n in 2..=10u32 {
        let mut graphs = vec![Graph::path(n).unwrap()];
        if n >= 3 {
            graphs.push(Graph::cycle(n).unwrap());
        }
        for g in graphs {
            for ideal in [
                SquarefreeMonomialIdeal::edge_ideal(&g).unwrap(),
                SquarefreeMonomialIdeal::cover_ideal(&g).unwrap(),
            ] {
                let over_q = betti_hochster(&ideal, q()).unwrap();
                for field in FieldSpec::standard_sweep() {
                    assert_eq!(betti_hochster(&ideal, field).unwrap(), over_q);
                }
            }
        }
    }
}
