//! Median property of abstract simplicial complexes and realization as
//! clique complexes.
//!
//! cargo run --example simplicial_complexes

use simplex_graphs::families::cycle;
use simplex_graphs::{
    check_median_property, clique_complex, m_operator, realize_as_clique_complex, Limits,
    SimplicialComplex,
};

fn main() {
    let limits = Limits::default();
    println!(
        "M(12, 23, 13) = {:?}",
        m_operator(&[0, 1], &[1, 2], &[0, 2])
    );

    let complexes = [
        (
            "triangle boundary",
            SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
        ),
        (
            "two triangles sharing an edge",
            SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap(),
        ),
        (
            "clique complex of C5",
            clique_complex(&cycle(5), &limits).unwrap(),
        ),
        (
            "an edge and an unused element",
            SimplicialComplex::from_facets(3, &[vec![0, 2]]).unwrap(),
        ),
    ];
    for (name, cx) in complexes {
        let mp = check_median_property(&cx, false, &limits).unwrap();
        let wmp = check_median_property(&cx, true, &limits).unwrap();
        print!("{name}: median property {}, weak {}", mp.holds, wmp.holds);
        if let Some(w) = mp.witness {
            print!(", failing triple {w:?}");
        }
        match realize_as_clique_complex(&cx, &limits).unwrap() {
            Some(r) => println!(
                ", realized by edges {:?} on elements {:?}",
                r.graph.edges(),
                r.elements
            ),
            None => println!(", not a clique complex"),
        }
    }
}
