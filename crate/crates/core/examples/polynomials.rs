//! Cube polynomials of simplex graphs against shifted clique polynomials.
//!
//! cargo run --example polynomials

use simplex_graphs::families::{complement, cycle, path};
use simplex_graphs::{
    clique_polynomial, cube_polynomial, embed, generate, simplex_graph, Family, Graph, Limits,
};

fn main() {
    let limits = Limits::default();
    let graphs: Vec<(&str, Graph)> = vec![
        ("P4", path(4)),
        ("C5", cycle(5)),
        ("K4", generate(Family::Complete, 4).unwrap()),
        ("complement of P5", complement(&path(5))),
    ];
    for (name, g) in graphs {
        let s = simplex_graph(&g, &limits).unwrap();
        let cl = clique_polynomial(&g, &limits).unwrap();
        println!(
            "{name}: Cl = {cl}, Cl(x+1) = {}, C(S) = {}",
            cl.shifted_by_one(),
            cube_polynomial(&s)
        );
    }
    let c8 = embed(&cycle(8), 0).unwrap();
    println!("C8: C = {}", cube_polynomial(&c8));
    let q4 = embed(&generate(Family::Hypercube, 4).unwrap(), 0).unwrap();
    println!("Q4: C = {}", cube_polynomial(&q4));
}
